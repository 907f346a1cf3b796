#pragma once

/* Element conditions for building the fiber cone by hyperplane sections, and
 * the randomized construction that stacks them into a sequence:
 *  - the exact annihilator condition  0:x ⊆ 0:I_1^∞,
 *  - the window-verified intersection law  I^m I_n ∩ (x) = I^m x I_{n-1},
 *  - superficiality  (I^m I_{n+1} : x) ∩ I^m I_c = I^m I_n,
 *  - the spread dropping by exactly one after passing to F/(x).
 * Candidates are random coefficient combinations of an equigenerated pool;
 * a fixed seed reproduces the whole construction bit for bit. */

#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "fiber.hpp"

namespace fibercone {

namespace detail {

template <class K>
Polynomial<K> checked_element(const Filtration<K>& f, const Polynomial<K>& x_in) {
  auto x = f.ring()->nf(x_in);
  if (x.is_zero()) throw precondition_error("element is zero");
  if (!x.is_homogeneous())
    throw precondition_error("element must be homogeneous");
  if (!f.base_ideal().contains_poly(x))
    throw precondition_error("element lies outside the base ideal");
  return x;
}

}  // namespace detail

/* Exact: everything x kills must already be killed by a power of I_1. */
template <class K>
bool fc2_check(const Polynomial<K>& x_in, const Filtration<K>& f) {
  auto x = detail::checked_element(f, x_in);
  auto zero = Ideal<K>::zero(f.ring());
  auto sat = saturate(zero, f.base_ideal()).first;
  return sat.contains(colon_elem(zero, x));
}

/* Window-verified: I^m I_n ∩ (x) = I^m x I_{n-1} for m ≤ m_max and n in
 * [n_lo, n_lo + width]; the identity is only promised for large n, so callers
 * may shift the window past instance-specific transients (n_lo = 0 selects
 * the default max(u+1, 2)). Nilpotent filtrations are excluded: their terms
 * vanish for large n, so every window comparison degenerates to 0 = 0 and the
 * condition stops carrying information. */
template <class K>
bool fc1_check(const Polynomial<K>& x_in, const Filtration<K>& f,
               const Ideal<K>& i, unsigned m_max = 2, unsigned width = 3,
               unsigned n_lo = 0) {
  if (is_nilpotent(f).first)
    throw precondition_error(
        "nilpotent filtration excluded: terms vanish for large n, so the "
        "intersection condition degenerates and carries no information");
  auto x = detail::checked_element(f, x_in);
  auto xi = principal(f.ring(), x);
  unsigned n0 = n_lo ? n_lo : std::max(f.stability_index() + 1, 2u);
  for (unsigned m = 0; m <= m_max; ++m) {
    auto im = pow(i, m);
    for (unsigned n = n0; n <= n0 + width; ++n) {
      auto lhs = intersect(mul(im, f.term(n)), xi);
      auto rhs = mul(im, mul(xi, f.term(n - 1)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

/* Least c where the colon-intersection law holds over the window points with
 * n ≥ c; (false, -1) if no c up to the window top works. */
template <class K>
std::pair<bool, int> superficial_check(const Polynomial<K>& x_in,
                                       const Filtration<K>& f,
                                       const Ideal<K>& i, unsigned m_max = 2,
                                       unsigned width = 3) {
  auto x = detail::checked_element(f, x_in);
  unsigned n0 = std::max(f.stability_index() + 1, 2u);
  unsigned c_max = n0 + width;
  for (unsigned c = 0; c <= c_max; ++c) {
    bool ok = true;
    for (unsigned m = 0; m <= m_max && ok; ++m) {
      auto im = pow(i, m);
      for (unsigned n = std::max(n0, c); n <= n0 + width && ok; ++n) {
        auto lhs = intersect(colon_elem(mul(im, f.term(n + 1)), x),
                             mul(im, f.term(c)));
        if (lhs != mul(im, f.term(n))) ok = false;
      }
    }
    if (ok) return {true, static_cast<int>(c)};
  }
  return {false, -1};
}

template <class K>
struct FCCertificate {
  Polynomial<K> element;  // the accepted element, in its step's ring
  Polynomial<K> lift;     // the same coefficient combination in the base ring
  std::vector<typename K::Elem> coefficients;
  bool fc2 = false;
  bool fc1 = false;  // window-verified
  unsigned fc1_m_max = 2, fc1_n_lo = 0, fc1_n_hi = 0;
  bool superficial = false;
  int superficial_c = -1;
  int spread_before = 0, spread_after = 0;
  int attempts_used = 0;
};

template <class K>
struct WeakFCSequence {
  Filtration<K> base;
  Ideal<K> j;
  std::vector<Polynomial<K>> lifts;  // elements as base-ring polynomials
  std::vector<FCCertificate<K>> certificates;
  bool maximal = false;
  std::uint64_t seed = 0;
};

/* Samples x = Σ λ_g·g over the pool's minimal generators with λ drawn from a
 * seeded generator, accepts when the annihilator condition, the window law,
 * superficiality, and the exact spread drop all hold, then passes to F/(x)
 * and repeats until the quotient filtration is nilpotent. The window law and
 * superficiality take powers of J, matching how the sequences feed the
 * multiplicity and length statements; the window start slides upward a
 * bounded amount because those laws only hold for large n. */
template <class K>
WeakFCSequence<K> find_weak_fc_sequence(
    const Filtration<K>& f, const Ideal<K>& j,
    const std::type_identity_t<std::optional<Ideal<K>>>& pool,
    std::uint64_t seed, unsigned attempts = 32) {
  require_same_ring(j, f.term(0));
  if (!is_primary_to_max(j))
    throw precondition_error("J must be primary to the maximal ideal");
  if (pool) {
    require_same_ring(*pool, f.term(0));
    if (!f.base_ideal().contains(*pool))
      throw precondition_error("pool must lie inside the base ideal");
    if (!verify_reduction(f, pool->gens()).is_reduction)
      throw precondition_error("pool does not verify as a reduction");
  }
  const Ideal<K>& p = pool ? *pool : f.base_ideal();
  auto pool_gens = minimal_generators(p);
  if (!equigenerated_degree(p))
    throw precondition_error(
        "pool not equigenerated and no explicit candidates given");

  WeakFCSequence<K> out;
  out.base = f;
  out.j = j;
  out.seed = seed;
  const K& field = f.ring()->field;
  std::mt19937_64 rng(seed);

  Filtration<K> cur = f;
  const int spread_base = fiber_table(f, maximal_ideal(f.ring())).spread;
  int spread_cur = spread_base;
  while (!is_nilpotent(cur).first) {
    auto jcur = map_to_ring(j, cur.ring());
    bool accepted = false;
    for (unsigned attempt = 1; attempt <= attempts && !accepted; ++attempt) {
      std::vector<typename K::Elem> coeffs;
      for (std::size_t g = 0; g < pool_gens.size(); ++g)
        coeffs.push_back(field.sample(rng()));
      auto lift = p_zero<K>();
      for (std::size_t g = 0; g < pool_gens.size(); ++g)
        lift = p_add(field, lift, p_scale(field, pool_gens[g], coeffs[g]));
      auto img = cur.ring()->nf(lift);
      if (img.is_zero()) continue;
      if (!fc2_check(img, cur)) continue;
      unsigned n0 = std::max(cur.stability_index() + 1, 2u);
      int fc1_lo = -1;
      for (unsigned shift = 0; shift <= 8 && fc1_lo < 0; ++shift)
        if (fc1_check(img, cur, jcur, 2, 3, n0 + shift))
          fc1_lo = static_cast<int>(n0 + shift);
      if (fc1_lo < 0) continue;
      auto sup = superficial_check(img, cur, jcur);
      if (!sup.first) continue;
      auto quot = filtration_quotient(cur, principal(cur.ring(), img));
      int spread_next = fiber_table(quot, maximal_ideal(quot.ring())).spread;
      if (spread_next != spread_cur - 1) continue;

      FCCertificate<K> cert;
      cert.element = img;
      cert.lift = f.ring()->nf(lift);
      cert.coefficients = coeffs;
      cert.fc2 = true;
      cert.fc1 = true;
      cert.fc1_n_lo = static_cast<unsigned>(fc1_lo);
      cert.fc1_n_hi = cert.fc1_n_lo + 3;
      cert.superficial = true;
      cert.superficial_c = sup.second;
      cert.spread_before = spread_cur;
      cert.spread_after = spread_next;
      cert.attempts_used = static_cast<int>(attempt);
      out.certificates.push_back(std::move(cert));
      out.lifts.push_back(f.ring()->nf(lift));
      cur = std::move(quot);
      spread_cur = spread_next;
      accepted = true;
    }
    if (!accepted)
      throw fc_error("attempts exhausted at sequence step " +
                     std::to_string(out.lifts.size() + 1));
  }
  out.maximal = true;
  if (static_cast<int>(out.lifts.size()) != spread_base)
    throw consistency_error(
        "maximal sequence length differs from the analytic spread");
  return out;
}

/* The ideal generated by a maximal sequence must verify as a reduction; a
 * failure here contradicts the structural theory and is raised as such. */
template <class K>
ReductionData<K> reduction_from_sequence(const WeakFCSequence<K>& seq) {
  if (!seq.maximal || seq.lifts.empty())
    throw precondition_error(
        "reduction extraction needs a maximal sequence of positive length");
  auto rd = verify_reduction(seq.base, seq.lifts);
  if (!rd.is_reduction)
    throw consistency_error(
        "maximal sequence does not generate a reduction");
  return rd;
}

}  // namespace fibercone
