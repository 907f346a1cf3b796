#pragma once
// Multiplicity and Cohen-Macaulayness of the fiber cone along two independent
// routes each, so every verdict is a cross-check rather than a single
// computation: the limiting fiber-function value against the intersection
// formula at the reduction number, and the per-degree intersection criteria
// against the parameter-ideal length count.

#include <cstdint>
#include <optional>
#include <vector>

#include "fibercone/fc_sequence.hpp"
#include "fibercone/fiber.hpp"

namespace fibercone {

namespace detail {

/* Ideal generated by the first `count` sequence lifts (zero when count = 0). */
template <class K>
Ideal<K> leading_lift_ideal(const WeakFCSequence<K>& seq, std::size_t count) {
  std::vector<Polynomial<K>> gens(seq.lifts.begin(),
                                  seq.lifts.begin() + count);
  return Ideal<K>::from_gens(seq.base.ring(), std::move(gens));
}

template <class K>
void require_usable_sequence(const Filtration<K>& f, const Ideal<K>& j,
                             const WeakFCSequence<K>& seq) {
  require_same_ring(j, f.term(0));
  require_same_ring(f.term(0), seq.base.term(0));
  if (!seq.maximal)
    throw precondition_error("sequence is not maximal");
  if (seq.lifts.empty())
    throw precondition_error("sequence is empty: the filtration is nilpotent");
  if (!(seq.j == j))
    throw precondition_error("sequence was built against a different J");
  if (!(seq.base.base_ideal() == f.base_ideal()))
    throw precondition_error("sequence was built over a different filtration");
}

template <class K>
void require_verified(const ReductionData<K>& red) {
  if (!red.is_reduction || red.r < 0)
    throw precondition_error("needs a verified reduction");
}

}  // namespace detail

struct MultiplicityComparison {
  long long value = 0;            // stable value of the intersection formula
  std::vector<long long> values;  // formula values at r, r+1, r+2
  long long limit_value = 0;      // tail of the fiber function
  unsigned r = 0;
  bool agreement = false;
};

/* e = dim I_n/((Q : I_1^inf) cap I_n + J*I_n) at n = r, r+1, r+2, where Q
 * drops the last sequence element; the value must be constant there and is
 * compared against the limiting fiber-function route. */
template <class K>
MultiplicityComparison multiplicity_at_reduction(const Filtration<K>& f,
                                                 const Ideal<K>& j,
                                                 const WeakFCSequence<K>& seq,
                                                 const ReductionData<K>& red,
                                                 unsigned n_max = 40) {
  detail::require_usable_sequence(f, j, seq);
  detail::require_verified(red);
  const auto r = static_cast<unsigned>(red.r);
  auto q = detail::leading_lift_ideal(seq, seq.lifts.size() - 1);
  auto sat_q = saturate(q, f.base_ideal()).first;
  const std::optional<Ideal<K>> cof(j);
  MultiplicityComparison out;
  out.r = r;
  for (unsigned n = r; n <= r + 2; ++n) {
    auto den = add(intersect(sat_q, f.term(n)), mul(j, f.term(n)));
    out.values.push_back(finite_quotient_dim(f.term(n), den, cof));
  }
  if (out.values[0] != out.values[1] || out.values[1] != out.values[2])
    throw consistency_error(
        "multiplicity formula did not stabilize at the reduction number");
  out.value = out.values[0];
  out.limit_value = multiplicity_limit(f, j, n_max);
  out.agreement = (out.value == out.limit_value);
  return out;
}

struct LengthComparison {
  long long lower = 0;   // length over the saturated quotient
  long long middle = 0;  // length over the plain quotient
  long long upper = 0;   // length over the original filtration
  bool equality = false;
  std::vector<bool> membership;  // per n = 0..r
  bool membership_all = false;
  unsigned i = 0, r = 0;
};

/* Lengths of the fiber cone modulo the parameter ideal for the filtration,
 * its quotient by the first i lifts Q, and by P = Q : I_1^inf, each as the
 * finite sum dim A/(J+..) + sum over 1 <= n <= r of per-degree quotient dims.
 * The chain lower <= middle <= upper always holds, and lower = upper exactly
 * when I_n cap P lands in the parameter part in every degree up to r. */
template <class K>
LengthComparison parameter_length_bounds(const Filtration<K>& f,
                                         const Ideal<K>& j,
                                         const WeakFCSequence<K>& seq,
                                         const ReductionData<K>& red,
                                         unsigned i) {
  detail::require_usable_sequence(f, j, seq);
  detail::require_verified(red);
  if (i >= seq.lifts.size())
    throw precondition_error("index must be below the sequence length");
  const auto r = static_cast<unsigned>(red.r);
  auto full = detail::leading_lift_ideal(seq, seq.lifts.size());
  auto q = detail::leading_lift_ideal(seq, i);
  auto p = saturate(q, f.base_ideal()).first;
  const auto unit = Ideal<K>::unit(f.ring());
  const std::optional<Ideal<K>> cof(j);
  LengthComparison out;
  out.i = i;
  out.r = r;
  out.upper = finite_quotient_dim(unit, j, cof);
  out.middle = finite_quotient_dim(unit, add(j, q), cof);
  out.lower = finite_quotient_dim(unit, add(j, p), cof);
  for (unsigned n = 1; n <= r; ++n) {
    auto base_den = add(mul(full, f.term(n - 1)), mul(j, f.term(n)));
    out.upper += finite_quotient_dim(f.term(n), base_den, cof);
    out.middle += finite_quotient_dim(
        f.term(n), add(intersect(q, f.term(n)), base_den), cof);
    out.lower += finite_quotient_dim(
        f.term(n), add(intersect(p, f.term(n)), base_den), cof);
  }
  out.membership_all = true;
  for (unsigned n = 0; n <= r; ++n) {
    auto target = add(mul(full, f.term_at(static_cast<int>(n) - 1)),
                      mul(j, f.term(n)));
    bool ok = target.contains(intersect(f.term(n), p));
    out.membership.push_back(ok);
    out.membership_all = out.membership_all && ok;
  }
  out.equality = (out.lower == out.upper);
  if (out.lower > out.middle || out.middle > out.upper)
    throw consistency_error(
        "length comparison violated the quotient chain bounds");
  if (out.equality != out.membership_all)
    throw consistency_error(
        "length equality disagrees with the membership criterion");
  return out;
}

struct SpreadOneMultiplicity {
  long long value = 0;
  int route = 0;  // 1: regular-element route, 2: annihilator route
  std::vector<long long> values;  // at r, r+1
  long long limit_value = 0;
  unsigned r = 0;
  bool agreement = false;
};

/* Spread-one multiplicity from a principal reduction: dim I_n/J*I_n when I_1
 * contains a regular element, else dim I_n/((0 : I_1^inf) cap I_n + J*I_n),
 * evaluated at n = r and r+1. */
template <class K>
SpreadOneMultiplicity multiplicity_spread_one(const Filtration<K>& f,
                                              const Ideal<K>& j,
                                              const ReductionData<K>& red,
                                              unsigned n_max = 40) {
  require_same_ring(j, f.term(0));
  if (!is_primary_to_max(j))
    throw precondition_error("J must be primary to the maximal ideal");
  if (analytic_spread(f, n_max) != 1)
    throw precondition_error("the formula needs analytic spread one");
  detail::require_verified(red);
  if (red.gens.size() != 1)
    throw precondition_error("needs a principal reduction");
  const auto r = static_cast<unsigned>(red.r);
  const auto zero = Ideal<K>::zero(f.ring());
  const bool regular = colon(zero, f.base_ideal()) == zero;
  auto ann = regular ? zero : saturate(zero, f.base_ideal()).first;
  const std::optional<Ideal<K>> cof(j);
  SpreadOneMultiplicity out;
  out.r = r;
  out.route = regular ? 1 : 2;
  for (unsigned n = r; n <= r + 1; ++n) {
    auto den = regular ? mul(j, f.term(n))
                       : add(intersect(ann, f.term(n)), mul(j, f.term(n)));
    out.values.push_back(finite_quotient_dim(f.term(n), den, cof));
  }
  if (out.values[0] != out.values[1])
    throw consistency_error(
        "spread-one multiplicity did not stabilize at the reduction number");
  out.value = out.values[0];
  out.limit_value = multiplicity_limit(f, j, n_max);
  out.agreement = (out.value == out.limit_value);
  return out;
}

struct SpreadOneCM {
  bool cm = false;
  std::vector<bool> per_n;  // n = 1..r
  unsigned r = 0;
};

/* Spread-one, regular-element criterion: with a principal reduction (x) of
 * number r, the fiber cone is Cohen-Macaulay exactly when
 * x*I_{n-1} cap J*I_n = J*x*I_{n-1} for 1 <= n <= r (r = 0 is vacuous). */
template <class K>
SpreadOneCM cm_spread_one_principal(const Filtration<K>& f, const Ideal<K>& j,
                                    const ReductionData<K>& red,
                                    unsigned n_max = 40) {
  require_same_ring(j, f.term(0));
  if (!is_primary_to_max(j))
    throw precondition_error("J must be primary to the maximal ideal");
  if (analytic_spread(f, n_max) != 1)
    throw precondition_error("the criterion needs analytic spread one");
  const auto zero = Ideal<K>::zero(f.ring());
  if (!(colon(zero, f.base_ideal()) == zero))
    throw precondition_error(
        "the criterion needs a regular element in the base ideal");
  detail::require_verified(red);
  if (red.gens.size() != 1)
    throw precondition_error("needs a principal reduction");
  const auto r = static_cast<unsigned>(red.r);
  auto x = principal(f.ring(), red.gens[0]);
  SpreadOneCM out;
  out.r = r;
  out.cm = true;
  for (unsigned n = 1; n <= r; ++n) {
    auto x_prev = mul(x, f.term(n - 1));
    bool ok = intersect(x_prev, mul(j, f.term(n))) == mul(j, x_prev);
    out.per_n.push_back(ok);
    out.cm = out.cm && ok;
  }
  return out;
}

struct IntersectionCM {
  bool cm = false;
  std::vector<bool> containments;  // (Q:I_1^inf) cap I_n condition, n = 0..r
  std::vector<bool> equalities;    // modular-intersection condition, n = 1..r
  unsigned r = 0;
};

/* Per-degree criterion: with P = (first l-1 lifts) : I_1^inf and the full
 * lift ideal G, the fiber cone is Cohen-Macaulay exactly when
 *   P cap I_n lies in G*I_{n-1} + J*I_n          for 0 <= n <= r, and
 *   (G*I_{n-1}+P) cap (P+J*I_n) = J*G*I_{n-1}+P  for 1 <= n <= r. */
template <class K>
IntersectionCM cm_by_intersection_conditions(const Filtration<K>& f,
                                             const Ideal<K>& j,
                                             const WeakFCSequence<K>& seq,
                                             const ReductionData<K>& red) {
  detail::require_usable_sequence(f, j, seq);
  detail::require_verified(red);
  const auto r = static_cast<unsigned>(red.r);
  auto full = detail::leading_lift_ideal(seq, seq.lifts.size());
  auto sat_q = saturate(detail::leading_lift_ideal(seq, seq.lifts.size() - 1),
                        f.base_ideal())
                   .first;
  IntersectionCM out;
  out.r = r;
  out.cm = true;
  for (unsigned n = 0; n <= r; ++n) {
    auto target = add(mul(full, f.term_at(static_cast<int>(n) - 1)),
                      mul(j, f.term(n)));
    bool ok = target.contains(intersect(sat_q, f.term(n)));
    out.containments.push_back(ok);
    out.cm = out.cm && ok;
  }
  for (unsigned n = 1; n <= r; ++n) {
    auto g_prev = mul(full, f.term(n - 1));
    auto lhs = intersect(add(g_prev, sat_q), add(sat_q, mul(j, f.term(n))));
    bool ok = lhs == add(mul(j, g_prev), sat_q);
    out.equalities.push_back(ok);
    out.cm = out.cm && ok;
  }
  return out;
}

struct LengthCM {
  bool cm = false;
  long long length = 0;        // parameter-ideal length of the fiber cone
  long long multiplicity = 0;  // stable intersection-formula value
  unsigned r = 0;
};

/* Length count: L = dim A/J + sum over 1 <= n <= r of
 * dim I_n/(G*I_{n-1} + J*I_n) with G the full lift ideal; always L >= e, and
 * the fiber cone is Cohen-Macaulay exactly when L = e. */
template <class K>
LengthCM cm_by_length_count(const Filtration<K>& f, const Ideal<K>& j,
                            const WeakFCSequence<K>& seq,
                            const ReductionData<K>& red, unsigned n_max = 40) {
  auto mult = multiplicity_at_reduction(f, j, seq, red, n_max);
  auto full = detail::leading_lift_ideal(seq, seq.lifts.size());
  const std::optional<Ideal<K>> cof(j);
  LengthCM out;
  out.r = mult.r;
  out.length = finite_quotient_dim(Ideal<K>::unit(f.ring()), j, cof);
  for (unsigned n = 1; n <= out.r; ++n)
    out.length += finite_quotient_dim(
        f.term(n), add(mul(full, f.term(n - 1)), mul(j, f.term(n))), cof);
  out.multiplicity = mult.value;
  if (out.length < out.multiplicity)
    throw consistency_error("parameter length fell below the multiplicity");
  out.cm = (out.length == out.multiplicity);
  return out;
}

struct CMComparison {
  IntersectionCM conditions;
  LengthCM lengths;
  bool agreement = false;  // the two verdicts coincide
};

/* Runs both Cohen-Macaulayness routes; a false agreement flag is never
 * resolved here — callers surface it as an inconsistency. */
template <class K>
CMComparison cm_compare(const Filtration<K>& f, const Ideal<K>& j,
                        const WeakFCSequence<K>& seq,
                        const ReductionData<K>& red, unsigned n_max = 40) {
  CMComparison out;
  out.conditions = cm_by_intersection_conditions(f, j, seq, red);
  out.lengths = cm_by_length_count(f, j, seq, red, n_max);
  out.agreement = (out.conditions.cm == out.lengths.cm);
  return out;
}

/* A minimal reduction meets the maximal-ideal multiple of the base ideal in
 * exactly its own maximal-ideal multiple. */
template <class K>
bool reduction_minimality_identity(const Filtration<K>& f,
                                   const ReductionData<K>& red) {
  auto g = Ideal<K>::from_gens(f.ring(), red.gens);
  auto mm = maximal_ideal(f.ring());
  return intersect(g, mul(mm, f.base_ideal())) == mul(mm, g);
}

struct RescaleVerdict {
  unsigned t = 0;
  bool cm_conditions = false;
  bool cm_lengths = false;
  bool agreement = false;
};

struct RescaleScan {
  unsigned t0 = 0;  // least factor whose window [t0, t0+4] is all CM
  std::vector<RescaleVerdict> verdicts;  // t = 1 .. t_max + 4
};

/* For a spread-one filtration, rescaling by a large enough factor makes the
 * fiber cone Cohen-Macaulay; scans factors 1..t_max for the least window of
 * five consecutive all-CM verdicts, J fixed at the maximal ideal. */
template <class K>
RescaleScan rescale_cm_scan(const Filtration<K>& f, unsigned t_max,
                            std::uint64_t seed, unsigned attempts = 32,
                            unsigned n_max = 40) {
  if (t_max == 0) throw precondition_error("factor budget must be positive");
  if (analytic_spread(f, n_max) != 1)
    throw precondition_error("the rescaling scan needs analytic spread one");
  auto mm = maximal_ideal(f.ring());
  RescaleScan out;
  for (unsigned t = 1; t <= t_max + 4; ++t) {
    auto g = rescale(f, t);
    auto seq =
        find_weak_fc_sequence(g, mm, {}, seed + 7919ull * t, attempts);
    auto red = reduction_from_sequence(seq);
    auto cmp = cm_compare(g, mm, seq, red, n_max);
    out.verdicts.push_back(
        {t, cmp.conditions.cm, cmp.lengths.cm, cmp.agreement});
    if (!cmp.agreement)
      throw consistency_error(
          "rescaled Cohen-Macaulay verdicts disagree between routes");
  }
  for (unsigned t0 = 1; t0 <= t_max; ++t0) {
    bool window = true;
    for (unsigned t = t0; t <= t0 + 4; ++t) {
      const auto& v = out.verdicts[t - 1];
      window = window && v.cm_conditions && v.cm_lengths;
    }
    if (window) {
      out.t0 = t0;
      return out;
    }
  }
  throw consistency_error(
      "no rescaling factor reached a stable Cohen-Macaulay window");
}

}  // namespace fibercone
