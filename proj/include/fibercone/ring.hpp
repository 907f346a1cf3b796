#pragma once

#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"

namespace fibercone {

/* A graded quotient ring k[x_1..x_n]/(relations) with the standard grading.
 * The local picture is the irrelevant maximal ideal m = (x_1..x_n); lengths of
 * finite-length modules are k-dimensions. Relations are kept as a reduced
 * degrevlex basis, so normal forms against them are canonical. */
template <class K>
struct Ring {
  K field;
  std::vector<std::string> vars;
  GroebnerBasis<K> rel;

  std::size_t nvars() const { return vars.size(); }
  bool has_relations() const { return !rel.polys.empty(); }

  Polynomial<K> nf(const Polynomial<K>& f) const {
    return rel.polys.empty() ? f : normal_form(field, f, rel);
  }
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_polynomial_ring(K field, std::vector<std::string> vars) {
  if (vars.empty()) throw precondition_error("a ring needs at least one variable");
  auto r = std::make_shared<Ring<K>>();
  r->field = std::move(field);
  r->vars = std::move(vars);
  r->rel.ord = MonomialOrder::degrevlex();
  return r;
}

template <class K>
std::string ring_to_string(const Ring<K>& r) {
  std::string s = r.field.name() + "[";
  for (std::size_t i = 0; i < r.vars.size(); ++i)
    s += (i ? ", " : "") + r.vars[i];
  s += "]";
  if (r.has_relations()) {
    s += " / (";
    for (std::size_t i = 0; i < r.rel.polys.size(); ++i)
      s += (i ? ", " : "") + p_to_string(r.field, r.rel.polys[i], r.vars);
    s += ")";
  }
  return s;
}

}  // namespace fibercone
