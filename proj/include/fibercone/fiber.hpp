#pragma once

/* Numerical side of the fiber cone ⊕ I_n/JI_n: the function
 * h(n) = dim_k I_n/JI_n, eventually a polynomial in n. Its degree is detected
 * from a finite-difference table over an adaptive window and certified two
 * ways: the next-order differences vanish on the tail, and the interpolating
 * polynomial predicts freshly computed values beyond the window. The spread is
 * degree + 1, the multiplicity the stable top-order difference. */

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "filtration.hpp"

namespace fibercone {

template <class K>
long long fiber_hilbert_value(const Filtration<K>& f, const Ideal<K>& j,
                              unsigned n) {
  require_same_ring(j, f.term(0));
  return finite_quotient_dim(f.term(n), mul(j, f.term(n)),
                             std::optional<Ideal<K>>(j));
}

struct FiberTable {
  unsigned lo = 0, hi = 0;        // window of certified values
  std::vector<long long> values;  // h(lo) .. h(hi)
  int spread = 0;                 // 1 + degree of the eventual polynomial
  long long multiplicity = 0;     // stable difference of order spread-1
  std::vector<std::string> poly;  // polynomial coefficients, constant first
  bool nilpotent = false;

  long long value_at(unsigned n) const { return values.at(n - lo); }
};

namespace detail {

/* Difference rows D[0] = tail-aligned values, D[k+1][i] = D[k][i+1] - D[k][i]. */
inline std::vector<std::vector<long long>> difference_table(
    const std::vector<long long>& v) {
  std::vector<std::vector<long long>> d{v};
  while (d.back().size() > 1) {
    const auto& p = d.back();
    std::vector<long long> row(p.size() - 1);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) row[i] = p[i + 1] - p[i];
    d.push_back(std::move(row));
  }
  return d;
}

/* Least order whose differences are constant on the tail, with the next order
 * vanishing on at least three trailing entries; -1 while undecided. */
inline int stable_difference_order(const std::vector<std::vector<long long>>& d) {
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    const auto& nxt = d[k + 1];
    if (nxt.size() < 3) break;
    bool flat = nxt[nxt.size() - 1] == 0 && nxt[nxt.size() - 2] == 0 &&
                nxt[nxt.size() - 3] == 0;
    if (flat && d[k].back() != 0) return static_cast<int>(k);
  }
  return -1;
}

using BigRat = boost::multiprecision::cpp_rational;

/* Newton forward form anchored at base b over the last deg+1 values:
 * P(b + s) = sum_k C(s, k) * delta_k. */
inline long long newton_extrapolate(const std::vector<long long>& deltas,
                                    long long s) {
  BigRat acc = 0;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    BigRat binom = 1;
    for (std::size_t i = 0; i < k; ++i)
      binom *= BigRat(s - static_cast<long long>(i), static_cast<long long>(i) + 1);
    acc += binom * deltas[k];
  }
  if (boost::multiprecision::denominator(acc) != 1)
    throw fc_error("integer extrapolation produced a fraction");
  return static_cast<long long>(boost::multiprecision::numerator(acc));
}

/* Expand the Newton form into monomial-basis coefficients of P(n). */
inline std::vector<std::string> newton_to_coefficients(
    const std::vector<long long>& deltas, long long base) {
  std::vector<BigRat> coef{BigRat(0)};
  std::vector<BigRat> prod{BigRat(1)};  // running product (n-base)(n-base-1)...
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (k > 0) {
      // prod *= (n - (base + k - 1)) / k
      std::vector<BigRat> nxt(prod.size() + 1, BigRat(0));
      BigRat shift = -(BigRat(base) + BigRat(static_cast<long long>(k) - 1));
      for (std::size_t i = 0; i < prod.size(); ++i) {
        nxt[i] += prod[i] * shift;
        nxt[i + 1] += prod[i];
      }
      for (auto& c : nxt) c /= static_cast<long long>(k);
      prod = std::move(nxt);
    }
    if (coef.size() < prod.size()) coef.resize(prod.size(), BigRat(0));
    for (std::size_t i = 0; i < prod.size(); ++i) coef[i] += prod[i] * deltas[k];
  }
  std::vector<std::string> out;
  for (const auto& c : coef) out.push_back(c.str());
  return out;
}

}  // namespace detail

/* Detection runs on [u+1, …] so seed irregularities never enter the table;
 * the window grows toward n_max until both certificates hold. */
template <class K>
FiberTable fiber_table(const Filtration<K>& f, const Ideal<K>& j,
                       unsigned n_max = 40) {
  FiberTable t;
  t.lo = f.stability_index() + 1;
  if (is_nilpotent(f).first) {
    t.nilpotent = true;
    t.hi = t.lo + 4;
    for (unsigned n = t.lo; n <= t.hi; ++n)
      t.values.push_back(fiber_hilbert_value(f, j, n));
    t.poly = {"0"};
    return t;
  }
  unsigned hi = t.lo + static_cast<unsigned>(f.ring()->nvars()) + 4;
  for (unsigned n = t.lo; n <= hi && n <= n_max; ++n)
    t.values.push_back(fiber_hilbert_value(f, j, n));
  while (true) {
    hi = t.lo + static_cast<unsigned>(t.values.size()) - 1;
    auto table = detail::difference_table(t.values);
    int d = detail::stable_difference_order(table);
    if (d >= 0) {
      // interpolate on the tail, then demand two fresh values match it
      std::vector<long long> deltas;
      long long base = static_cast<long long>(hi) - d;
      for (int k = 0; k <= d; ++k)
        deltas.push_back(table[k][table[k].size() - 1 -
                                  static_cast<std::size_t>(d - k)]);
      long long p1 = detail::newton_extrapolate(deltas, d + 1);
      long long p2 = detail::newton_extrapolate(deltas, d + 2);
      long long h1 = fiber_hilbert_value(f, j, hi + 1);
      long long h2 = fiber_hilbert_value(f, j, hi + 2);
      t.values.push_back(h1);
      t.values.push_back(h2);
      if (p1 == h1 && p2 == h2) {
        t.hi = hi + 2;
        t.spread = d + 1;
        t.multiplicity = table[d].back();
        t.poly = detail::newton_to_coefficients(deltas, base);
        return t;
      }
      continue;  // stability was an artifact; the two new points extend the table
    }
    if (hi >= n_max)
      throw budget_error(
          "fiber function differences never stabilized below n = " +
          std::to_string(n_max));
    unsigned target = std::min(n_max, hi + std::max<unsigned>(hi - t.lo, 4));
    for (unsigned n = hi + 1; n <= target; ++n)
      t.values.push_back(fiber_hilbert_value(f, j, n));
  }
}

template <class K>
int analytic_spread(const Filtration<K>& f, unsigned n_max = 40) {
  return fiber_table(f, maximal_ideal(f.ring()), n_max).spread;
}

template <class K>
long long multiplicity_limit(const Filtration<K>& f, const Ideal<K>& j,
                             unsigned n_max = 40) {
  auto t = fiber_table(f, j, n_max);
  if (t.spread == 0)
    throw precondition_error("multiplicity undefined for a nilpotent filtration");
  return t.multiplicity;
}

template <class K>
struct ReductionData {
  std::vector<Polynomial<K>> gens;  // generators of the certified candidate
  bool is_reduction = false;
  int r = -1;           // least n with (gens)·I_m = I_{m+1} for all m ≥ n
  int first_hit = -1;   // first scan index where the equality held
  int persist_from = -1;  // index from which the tail rule carries the equality
  int checked_to = -1;  // largest index verified by direct computation
  int bound = -1;       // scan bound reported with negative verdicts
};

/* Scan for (gens)·I_n = I_{n+1}. One success at n ≥ u persists forever:
 * I_{n+2} = I_1·I_{n+1} = I_1·(gens)·I_n = (gens)·I_{n+1}. So r is the start
 * of the first success run that reaches max(first success, u); two further
 * indices are then re-checked directly. */
template <class K>
ReductionData<K> verify_reduction(const Filtration<K>& f,
                                  std::vector<Polynomial<K>> gens,
                                  unsigned n_max = 40) {
  if (f.is_rescaled_view() && f.is_unchecked())
    throw precondition_error(
        "cannot certify persistence over an unvalidated rescaled filtration");
  ReductionData<K> out;
  out.gens = gens;
  auto cand = Ideal<K>::from_gens(f.ring(), gens);
  unsigned u = f.stability_index();
  int run_start = -1;
  for (unsigned n = 0; n <= n_max; ++n) {
    bool eq = mul(cand, f.term(n)) == f.term(n + 1);
    if (!eq) {
      run_start = -1;
      continue;
    }
    if (run_start < 0) {
      run_start = static_cast<int>(n);
      if (out.first_hit < 0) out.first_hit = run_start;
    }
    if (n >= u) {
      out.is_reduction = true;
      out.r = run_start;
      out.persist_from = static_cast<int>(n);
      for (unsigned m = n + 1; m <= n + 2; ++m)
        if (mul(cand, f.term(m)) != f.term(m + 1))
          throw consistency_error(
              "reduction persistence violated past the certified index");
      out.checked_to = static_cast<int>(n) + 2;
      return out;
    }
  }
  out.bound = static_cast<int>(n_max);
  return out;
}

}  // namespace fibercone
