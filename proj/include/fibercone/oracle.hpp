#pragma once

/* Independent cross-check route: graded dimensions and membership for
 * homogeneous ideals by dense row reduction over the coefficient field,
 * degree by degree. Deliberately shares no machinery with the Groebner
 * engine beyond monomial enumeration, so agreement between the two routes
 * is meaningful evidence. */

#include <map>
#include <stdexcept>
#include <vector>

#include "monomial.hpp"
#include "polynomial.hpp"

namespace fibercone {

struct oracle_error : std::runtime_error {
  explicit oracle_error(const std::string& w) : std::runtime_error(w) {}
};

template <class K>
class DenseReducer {
 public:
  DenseReducer(const K& k, std::vector<Monomial> basis) : k_(k), basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) col_[basis_[i]] = i;
  }

  std::size_t ncols() const { return basis_.size(); }

  std::vector<typename K::Elem> row_of(const Polynomial<K>& f,
                                       const Monomial& shift) const {
    std::vector<typename K::Elem> r(basis_.size(), k_.zero());
    for (const auto& tm : f.t) {
      auto it = col_.find(mon_mul(tm.m, shift));
      if (it == col_.end()) throw oracle_error("term escapes the graded slice");
      r[it->second] = k_.add(r[it->second], tm.c);
    }
    return r;
  }

  /* Forward-eliminates `r` against the stored echelon rows; returns true and
   * stores it if it enlarges the span. */
  bool add_row(std::vector<typename K::Elem> r) {
    reduce_in_place(r);
    std::size_t p = pivot(r);
    if (p == r.size()) return false;
    auto inv = k_.inv(r[p]);
    for (auto& x : r) x = k_.mul(x, inv);
    by_pivot_[p] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  bool in_span(std::vector<typename K::Elem> r) const {
    reduce_in_place(r);
    return pivot(r) == r.size();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t pivot(const std::vector<typename K::Elem>& r) const {
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!k_.is_zero(r[i])) return i;
    return r.size();
  }

  void reduce_in_place(std::vector<typename K::Elem>& r) const {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (k_.is_zero(r[i])) continue;
      auto it = by_pivot_.find(i);
      if (it == by_pivot_.end()) continue;
      const auto& piv = rows_[it->second];
      auto f = r[i];
      for (std::size_t j = i; j < r.size(); ++j)
        r[j] = k_.sub(r[j], k_.mul(f, piv[j]));
    }
  }

  const K& k_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, MonDegrevlexLess> col_;
  std::vector<std::vector<typename K::Elem>> rows_;
  std::map<std::size_t, std::size_t> by_pivot_;
};

/* Degree-d slice of the span {m * g : g in polys, deg(m*g) = d}, fed into an
 * existing reducer. Homogeneous generators only. */
template <class K>
void feed_degree_slice(DenseReducer<K>& red, const K& k, std::size_t nvars,
                       const std::vector<Polynomial<K>>& polys, unsigned d) {
  for (const auto& g : polys) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw oracle_error("generator is not homogeneous");
    unsigned dg = g.deg();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(nvars, d - dg))
      red.add_row(red.row_of(g, m));
  }
}

/* dim_k of the degree-d piece of ((gens) + (rels)) / (rels): rank of the
 * combined slice minus the rank of the relation slice. */
template <class K>
std::size_t oracle_graded_dim(const K& k, std::size_t nvars,
                              const std::vector<Polynomial<K>>& gens,
                              const std::vector<Polynomial<K>>& rels, unsigned d) {
  DenseReducer<K> red(k, monomials_of_degree(nvars, d));
  feed_degree_slice(red, k, nvars, rels, d);
  std::size_t r0 = red.rank();
  feed_degree_slice(red, k, nvars, gens, d);
  return red.rank() - r0;
}

/* Is the homogeneous f inside (gens) + (rels)? Single dense solve in deg f. */
template <class K>
bool oracle_membership(const K& k, std::size_t nvars, const Polynomial<K>& f,
                       const std::vector<Polynomial<K>>& gens,
                       const std::vector<Polynomial<K>>& rels) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw oracle_error("membership probe is not homogeneous");
  unsigned d = f.deg();
  DenseReducer<K> red(k, monomials_of_degree(nvars, d));
  feed_degree_slice(red, k, nvars, rels, d);
  feed_degree_slice(red, k, nvars, gens, d);
  return red.in_span(red.row_of(f, Monomial(nvars)));
}

}  // namespace fibercone
