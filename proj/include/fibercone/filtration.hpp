#pragma once

/* Multiplicative filtrations A = I_0 ⊇ I_1 ⊇ I_2 ⊇ … with I_m·I_n ⊆ I_{m+n}
 * and a stability index u past which I_{n+1} = I_1·I_n. Terms are produced
 * lazily from the seeds by the tail rule and trimmed to minimal generators so
 * generator lists stay small. A rescaled filtration {I_{Tn}} is a view over
 * its base: its terms delegate, so they are exact for every index even when
 * the base tail is irregular. */

#include <deque>
#include <memory>
#include <utility>
#include <vector>

#include "ideal.hpp"

namespace fibercone {

template <class K>
class Filtration {
 public:
  /* {I^n}: stability index 0, every term a power of the base ideal. */
  static Filtration adic(Ideal<K> base) {
    if (base.is_unit()) throw precondition_error("filtration base must be proper");
    Filtration f;
    f.ring_ = base.ring();
    f.u_ = 0;
    f.seeds_ = {std::move(base)};
    f.init_terms();
    return f;
  }

  /* Explicit seeds I_1..I_u, then the tail rule I_{n+1} = I_1·I_n. The seeds
   * are validated (chain + all pairwise products reaching index 2u) unless
   * `unchecked` waives it; a violated product throws with the (m, n) pair. */
  static Filtration seeded(std::vector<Ideal<K>> seeds, unsigned u,
                           bool unchecked = false) {
    if (u == 0 || seeds.size() != u)
      throw precondition_error("seeded filtration needs seeds I_1..I_u");
    Filtration f;
    f.ring_ = seeds.front().ring();
    f.u_ = u;
    f.seeds_ = std::move(seeds);
    f.unchecked_ = unchecked;
    for (const auto& s : f.seeds_)
      require_same_ring(f.seeds_.front(), s);
    f.init_terms();
    if (!unchecked) f.validate();
    return f;
  }

  const RingPtr<K>& ring() const { return ring_; }
  unsigned stability_index() const { return u_; }
  bool is_unchecked() const { return unchecked_; }
  bool is_rescaled_view() const { return base_ != nullptr; }
  unsigned rescale_factor() const { return factor_; }

  const Ideal<K>& term(unsigned n) const {
    if (base_) return base_->term(factor_ * n);
    while (terms_.size() <= n) {
      auto next = mul(terms_[1], terms_.back());
      terms_.push_back(
          Ideal<K>::from_gens(ring_, minimal_generators(next)));
    }
    return terms_[n];
  }
  /* Statement conventions use I_{-1} = 0. */
  Ideal<K> term_at(int n) const {
    return n < 0 ? Ideal<K>::zero(ring_) : term(static_cast<unsigned>(n));
  }
  const Ideal<K>& base_ideal() const { return term(1); }

  friend Filtration filtration_quotient(const Filtration& f, const Ideal<K>& x) {
    require_same_ring(Ideal<K>::zero(f.ring_), x);
    auto b = make_quotient(x);
    Filtration q;
    q.ring_ = b;
    q.u_ = f.u_;
    q.unchecked_ = f.unchecked_;
    unsigned stored = std::max(f.u_, 1u);
    for (unsigned n = 1; n <= stored; ++n)
      q.seeds_.push_back(map_to_ring(f.term(n), b));
    q.init_terms();
    // containments survive ring maps, so a valid base needs no re-validation
    return q;
  }

  friend Filtration rescale(const Filtration& f, unsigned t) {
    if (t == 0) throw precondition_error("rescale factor must be positive");
    if (t == 1) return f;
    Filtration r;
    r.ring_ = f.ring_;
    r.base_ = std::make_shared<Filtration>(f);
    r.factor_ = t * f.factor_;
    if (r.base_->base_) r.base_ = r.base_->base_;  // collapse nested views
    r.u_ = (f.u_ + 2 * t - 1) / t;  // ceil((u + t)/t)
    r.unchecked_ = f.unchecked_;
    if (!r.unchecked_) r.validate();
    return r;
  }

 private:
  void init_terms() {
    terms_.push_back(Ideal<K>::unit(ring_));
    for (const auto& s : seeds_)
      terms_.push_back(Ideal<K>::from_gens(ring_, minimal_generators(s)));
  }

  void validate() const {
    if (term(1).is_unit())
      throw precondition_error("filtration base must be proper");
    unsigned u = std::max(u_, 1u);
    for (unsigned n = 1; n + 1 <= u; ++n)
      if (!term(n).contains(term(n + 1)))
        throw not_filtration_error(n, n + 1,
                                   "terms do not form a descending chain");
    for (unsigned s = 2; s <= 2 * u; ++s)
      for (unsigned m = 1; 2 * m <= s; ++m) {
        unsigned n = s - m;
        if (!term(s).contains(mul(term(m), term(n))))
          throw not_filtration_error(
              m, n, "product of terms escapes the target term");
      }
    // a view also certifies its claimed stability index directly
    if (base_)
      for (unsigned n = u_; n <= u_ + 2; ++n)
        if (term(n + 1) != mul(term(1), term(n)))
          throw not_filtration_error(
              1, n, "rescaled terms do not satisfy the tail rule");
  }

  RingPtr<K> ring_;
  unsigned u_ = 0;
  std::vector<Ideal<K>> seeds_;
  bool unchecked_ = false;
  std::shared_ptr<const Filtration> base_;
  unsigned factor_ = 1;
  mutable std::deque<Ideal<K>> terms_;
};

template <class K>
Filtration<K> filtration_adic(Ideal<K> base) {
  return Filtration<K>::adic(std::move(base));
}

template <class K>
Filtration<K> filtration_seeded(std::vector<Ideal<K>> seeds, unsigned u,
                                bool unchecked = false) {
  return Filtration<K>::seeded(std::move(seeds), u, unchecked);
}

/* Terms of a nilpotent filtration vanish for large n; equivalently the base
 * ideal is nilpotent. Returns the least N with I_1^N = 0 as witness. */
template <class K>
std::pair<bool, int> is_nilpotent(const Filtration<K>& f) {
  auto sat = saturate(Ideal<K>::zero(f.ring()), f.base_ideal());
  if (!sat.first.is_unit()) return {false, -1};
  auto p = f.base_ideal();
  for (int n = 1; n <= 512; ++n) {
    if (p.is_zero()) return {true, n};
    p = mul(p, f.base_ideal());
  }
  throw budget_error("nilpotency witness not found within 512 powers");
}

/* Termwise comparison through max(u) + 1; the tail rule propagates equality
 * beyond the window for validated filtrations. */
template <class K>
bool filtrations_equal(const Filtration<K>& a, const Filtration<K>& b) {
  unsigned top = std::max(a.stability_index(), b.stability_index()) + 1;
  for (unsigned n = 0; n <= top; ++n)
    if (a.term(n) != b.term(n)) return false;
  return true;
}

}  // namespace fibercone
