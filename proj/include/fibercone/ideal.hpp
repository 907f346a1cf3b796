#pragma once

/* Ideal calculus in a graded quotient ring. Every ideal is represented by its
 * preimage in the ambient polynomial ring: the cached presentation is the
 * reduced degrevlex basis of (generators + relations), which is canonical, so
 * presentation equality decides ideal equality. Intersections use the t-trick
 * in an extended ring; colons divide out intersections with principal ideals;
 * both have exact lattice shortcuts when everything in sight is monomial. */

#include <memory>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace fibercone {

template <class K>
class Ideal {
 public:
  Ideal() = default;

  static Ideal zero(RingPtr<K> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<K> ring) {
    auto one = p_const(ring->field, ring->field.one(), ring->nvars());
    return Ideal(std::move(ring), {one});
  }
  static Ideal from_gens(RingPtr<K> ring, std::vector<Polynomial<K>> gens) {
    return Ideal(std::move(ring), std::move(gens));
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return presentation().is_unit(); }

  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  unsigned max_gen_degree() const {
    unsigned d = 0;
    for (const auto& g : gens_) d = std::max(d, g.deg());
    return d;
  }

  const GroebnerBasis<K>& presentation() const {
    if (!pres_) {
      std::vector<Polynomial<K>> all = gens_;
      for (const auto& r : ring_->rel.polys) all.push_back(r);
      pres_ = std::make_shared<GroebnerBasis<K>>(
          groebner_basis(ring_->field, all, MonomialOrder::degrevlex()));
    }
    return *pres_;
  }

  bool all_gens_monomial() const {
    for (const auto& g : gens_)
      if (g.t.size() != 1) return false;
    return true;
  }
  bool monomial_presentation() const {
    for (const auto& g : presentation().polys)
      if (g.t.size() != 1) return false;
    return true;
  }

  bool contains_poly(const Polynomial<K>& f) const {
    return normal_form(ring_->field, f, presentation()).is_zero();
  }
  bool contains(const Ideal& other) const {
    for (const auto& g : other.gens_)
      if (!contains_poly(g)) return false;
    return true;
  }
  bool operator==(const Ideal& o) const {
    return presentation().same_elements(o.presentation());
  }
  bool operator!=(const Ideal& o) const { return !(*this == o); }

 private:
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> raw) : ring_(std::move(ring)) {
    const K& k = ring_->field;
    for (auto& g : raw) {
      auto h = ring_->nf(g);
      if (h.is_zero()) continue;
      gens_.push_back(p_monic(k, h));
    }
    std::sort(gens_.begin(), gens_.end(),
              [&](const Polynomial<K>& a, const Polynomial<K>& b) {
                return p_cmp(k, a, b) < 0;
              });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    // monomial generating sets admit an exact divisibility prune
    bool all_mono = true;
    for (const auto& g : gens_) all_mono &= g.t.size() == 1;
    if (all_mono && gens_.size() > 1) {
      std::vector<Polynomial<K>> kept;
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens_.size() && !redundant; ++j) {
          if (i == j) continue;
          if (!divides(gens_[j].t[0].m, gens_[i].t[0].m)) continue;
          redundant = gens_[j].t[0].m != gens_[i].t[0].m || j < i;
        }
        if (!redundant) kept.push_back(gens_[i]);
      }
      gens_ = std::move(kept);
    }
  }

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
  mutable std::shared_ptr<const GroebnerBasis<K>> pres_;
};

template <class K>
Ideal<K> principal(RingPtr<K> ring, const Polynomial<K>& f) {
  return Ideal<K>::from_gens(std::move(ring), {f});
}

template <class K>
Ideal<K> maximal_ideal(RingPtr<K> ring) {
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Monomial m(ring->nvars());
    m.e[i] = 1;
    gens.push_back(p_monomial(ring->field, m, ring->field.one()));
  }
  return Ideal<K>::from_gens(std::move(ring), std::move(gens));
}

template <class K>
void require_same_ring(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring() == b.ring()) return;
  const auto& ra = *a.ring();
  const auto& rb = *b.ring();
  if (ra.vars == rb.vars && ra.field.name() == rb.field.name() &&
      ra.rel.same_elements(rb.rel))
    return;
  throw precondition_error("ideals live in different rings");
}

template <class K>
Ideal<K> add(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a, b);
  auto gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return Ideal<K>::from_gens(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> mul(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a, b);
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens())
      gens.push_back(p_mul(a.ring()->field, f, g));
  return Ideal<K>::from_gens(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> pow(const Ideal<K>& a, unsigned n) {
  auto r = Ideal<K>::unit(a.ring());
  for (unsigned i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

/* The quotient ring A/X; X must be homogeneous and proper. */
template <class K>
RingPtr<K> make_quotient(const Ideal<K>& x) {
  if (!x.is_homogeneous())
    throw precondition_error("quotient by a non-homogeneous ideal");
  if (x.is_unit()) throw precondition_error("quotient by the unit ideal");
  auto r = std::make_shared<Ring<K>>();
  r->field = x.ring()->field;
  r->vars = x.ring()->vars;
  r->rel = x.presentation();
  return r;
}

/* Reinterpret generators in another ring over the same variables (quotient
 * image, or transport of a lift). */
template <class K>
Ideal<K> map_to_ring(const Ideal<K>& x, RingPtr<K> target) {
  return Ideal<K>::from_gens(std::move(target), x.gens());
}

template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a, b);
  const K& k = a.ring()->field;
  if (a.is_zero() || b.is_zero()) return Ideal<K>::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.monomial_presentation() && b.monomial_presentation()) {
    std::vector<Polynomial<K>> gens;
    for (const auto& f : a.presentation().polys)
      for (const auto& g : b.presentation().polys)
        gens.push_back(p_monomial(k, mon_lcm(f.t[0].m, g.t[0].m), k.one()));
    return Ideal<K>::from_gens(a.ring(), std::move(gens));
  }
  // t-trick: eliminate t from t*A + (1-t)*B in k[t, x...]
  std::size_t nv = a.ring()->nvars();
  std::vector<Polynomial<K>> ext;
  Monomial t(nv + 1);
  t.e[0] = 1;
  auto tpoly = p_monomial(k, t, k.one());
  auto one_minus_t = p_sub(k, p_const(k, k.one(), nv + 1), tpoly);
  for (const auto& f : a.presentation().polys)
    ext.push_back(p_mul(k, tpoly, widen_front<K>(f, 1)));
  for (const auto& g : b.presentation().polys)
    ext.push_back(p_mul(k, one_minus_t, widen_front<K>(g, 1)));
  std::vector<Polynomial<K>> gens;
  for (const auto& h : eliminate_first_block(k, ext, 1))
    gens.push_back(narrow_front(k, h, 1));
  return Ideal<K>::from_gens(a.ring(), std::move(gens));
}

/* X : (g) for one element g, computed on preimages: every member of the
 * polynomial-ring intersection X~ ∩ (g) is an exact multiple of g. */
template <class K>
Ideal<K> colon_elem(const Ideal<K>& x, const Polynomial<K>& g_in) {
  const K& k = x.ring()->field;
  auto g = x.ring()->nf(g_in);
  if (g.is_zero()) return Ideal<K>::unit(x.ring());
  if (x.monomial_presentation() && g.t.size() == 1) {
    std::vector<Polynomial<K>> gens;
    for (const auto& f : x.presentation().polys)
      gens.push_back(
          p_monomial(k, mon_div(mon_lcm(f.t[0].m, g.t[0].m), g.t[0].m), k.one()));
    return Ideal<K>::from_gens(x.ring(), std::move(gens));
  }
  std::size_t nv = x.ring()->nvars();
  std::vector<Polynomial<K>> ext;
  Monomial t(nv + 1);
  t.e[0] = 1;
  auto tpoly = p_monomial(k, t, k.one());
  auto one_minus_t = p_sub(k, p_const(k, k.one(), nv + 1), tpoly);
  for (const auto& f : x.presentation().polys)
    ext.push_back(p_mul(k, tpoly, widen_front<K>(f, 1)));
  ext.push_back(p_mul(k, one_minus_t, widen_front<K>(g, 1)));
  std::vector<Polynomial<K>> gens;
  for (const auto& h : eliminate_first_block(k, ext, 1))
    gens.push_back(exact_divide(k, narrow_front(k, h, 1), g));
  return Ideal<K>::from_gens(x.ring(), std::move(gens));
}

template <class K>
std::vector<Polynomial<K>> minimal_generators(const Ideal<K>& x);

/* X : Y = ∩_g (X : g) over a generating set of Y; X : (0) = (1). */
template <class K>
Ideal<K> colon(const Ideal<K>& x, const Ideal<K>& y) {
  require_same_ring(x, y);
  auto acc = Ideal<K>::unit(x.ring());
  for (const auto& g : minimal_generators(y)) acc = intersect(acc, colon_elem(x, g));
  return acc;
}

/* Colon until stabilization; the step count includes the confirming pass. */
template <class K>
std::pair<Ideal<K>, int> saturate(const Ideal<K>& x, const Ideal<K>& y) {
  auto cur = x;
  for (int step = 1; step <= 64; ++step) {
    auto next = colon(cur, y);
    if (next == cur) return {next, step};
    cur = next;
  }
  throw budget_error("saturation did not stabilize within 64 colon steps");
}

/* Number of standard monomials of degree d: the k-dimension of (A/X)_d. */
template <class K>
std::size_t hilbert_fn(const Ideal<K>& x, unsigned d) {
  const auto& leads = x.presentation().leads;
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(x.ring()->nvars(), d)) {
    bool reducible = false;
    for (const auto& l : leads)
      if (divides(l, m)) {
        reducible = true;
        break;
      }
    if (!reducible) ++count;
  }
  return count;
}

/* Zero-dimensionality read off the presentation: some lead must be a pure
 * power of each variable. */
template <class K>
bool is_primary_to_max(const Ideal<K>& j) {
  const auto& leads = j.presentation().leads;
  std::size_t nv = j.ring()->nvars();
  for (std::size_t i = 0; i < nv; ++i) {
    bool found = false;
    for (const auto& l : leads) {
      bool pure = l.e[i] > 0 || l.is_one();
      for (std::size_t t = 0; t < nv && pure; ++t)
        if (t != i && l.e[t] > 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/* (is m-primary, least N with m^N ⊆ J). */
template <class K>
std::pair<bool, int> primary_to_max(const Ideal<K>& j) {
  if (!is_primary_to_max(j)) return {false, 0};
  if (j.is_unit()) return {true, 0};
  // bounded search: standard monomials top out below t_max + 1
  int t_max = -1;
  for (unsigned d = 0;; ++d) {
    if (hilbert_fn(j, d) == 0) {
      t_max = static_cast<int>(d) - 1;
      break;
    }
    if (d > 100000) throw fc_error("primary bound runaway");
  }
  auto m = maximal_ideal(j.ring());
  auto mn = m;
  for (int n = 1; n <= t_max + 1; ++n) {
    if (j.contains(mn)) return {true, n};
    mn = mul(mn, m);
  }
  return {true, t_max + 1};
}

/* dim_k(X/Y) for Y ⊆ X with (Y : X) m-primary. The summation bound is
 * certified: q·X ⊆ Y with m^N ⊆ q forces X_d = Y_d once d exceeds
 * top-degree(standard monomials of q) + max generator degree of X.
 * `cofactor` lets callers supply a known q0 with q0·X ⊆ Y (then q0 ⊆ (Y:X),
 * so its bound is only larger); otherwise the colon is computed. */
template <class K>
long long finite_quotient_dim(const Ideal<K>& x, const Ideal<K>& y,
                              const std::optional<Ideal<K>>& cofactor = {}) {
  require_same_ring(x, y);
  if (!x.is_homogeneous() || !y.is_homogeneous())
    throw precondition_error("finite length needs homogeneous ideals");
  if (!x.contains(y))
    throw precondition_error("inner ideal is not contained in the outer one");
  if (x.is_zero()) return 0;
  Ideal<K> q = cofactor ? *cofactor : colon(y, x);
  if (cofactor && !y.contains(mul(q, x)))
    throw precondition_error("cofactor certificate q*X ⊆ Y fails");
  if (!is_primary_to_max(q))
    throw precondition_error(
        "not finite length: (Y : X) is not primary to the maximal ideal");
  int t_max = -1;
  for (unsigned d = 0;; ++d) {
    std::size_t h = hilbert_fn(q, d);
    if (h == 0) {
      t_max = static_cast<int>(d) - 1;
      break;
    }
  }
  long long dim = 0;
  long long bound = t_max + static_cast<long long>(x.max_gen_degree());
  for (long long d = 0; d <= bound; ++d) {
    long long hx = static_cast<long long>(hilbert_fn(x, static_cast<unsigned>(d)));
    long long hy = static_cast<long long>(hilbert_fn(y, static_cast<unsigned>(d)));
    if (hy < hx) throw fc_error("graded dimensions violate containment");
    dim += hy - hx;
  }
  return dim;
}

/* Minimal homogeneous generators: degree-sorted greedy drop of members lying
 * in the ideal of the already-kept ones (graded Nakayama makes this minimal). */
template <class K>
std::vector<Polynomial<K>> minimal_generators(const Ideal<K>& x) {
  if (x.is_zero()) return {};
  const K& k = x.ring()->field;
  if (x.all_gens_monomial()) return x.gens();  // construction already pruned
  auto gens = x.gens();
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const Polynomial<K>& a, const Polynomial<K>& b) {
                     return p_cmp(k, a, b) < 0;
                   });
  std::vector<Polynomial<K>> kept;
  for (const auto& g : gens) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    if (!Ideal<K>::from_gens(x.ring(), kept).contains_poly(g)) kept.push_back(g);
  }
  return kept;
}

/* Degree shared by all minimal generators, when there is one. */
template <class K>
std::optional<unsigned> equigenerated_degree(const Ideal<K>& x) {
  auto mg = minimal_generators(x);
  if (mg.empty()) return std::nullopt;
  unsigned d = mg.front().deg();
  for (const auto& g : mg)
    if (g.deg() != d) return std::nullopt;
  return d;
}

template <class K>
std::string ideal_to_string(const Ideal<K>& x) {
  if (x.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < x.gens().size(); ++i)
    s += (i ? ", " : "") + p_to_string(x.ring()->field, x.gens()[i], x.ring()->vars);
  return s + ")";
}

}  // namespace fibercone
