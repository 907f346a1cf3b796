#include <catch2/catch_amalgamated.hpp>

#include "fibercone/fc_sequence.hpp"
#include "fibercone/fiber.hpp"
#include "fibercone/filtration.hpp"
#include "fibercone/scenario.hpp"

using namespace fibercone;

namespace {

const std::vector<std::string> XY{"x", "y"};

template <class K>
Polynomial<K> P(const RingPtr<K>& r, const std::string& s) {
  return eval_expr(r->field, r->vars.size(), parse_polynomial(s, r->vars, 1));
}

template <class K>
Ideal<K> I(const RingPtr<K>& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial<K>> g;
  for (auto& s : gens) g.push_back(P(r, s));
  return Ideal<K>::from_gens(r, g);
}

RingPtr<GFp> plane() { return make_polynomial_ring(GFp{}, XY); }

RingPtr<GFp> axis() {
  auto r = plane();
  return make_quotient(I(r, {"x*y", "y^2"}));
}

RingPtr<GFp> double_line() {
  auto r = plane();
  return make_quotient(I(r, {"x^2"}));
}

Filtration<GFp> seeded_powers(bool unchecked) {
  auto r = plane();
  auto m = maximal_ideal(r);
  return filtration_seeded<GFp>({pow(m, 2), pow(m, 3)}, 2, unchecked);
}

}  // namespace

TEST_CASE("adic filtrations are power filtrations") {
  auto r = plane();
  auto m = maximal_ideal(r);
  auto f = filtration_adic(pow(m, 2));
  CHECK(f.term(0).is_unit());
  CHECK(f.term(1) == pow(m, 2));
  CHECK(f.term(3) == pow(m, 6));
  CHECK(f.base_ideal() == pow(m, 2));
  CHECK(f.term_at(-2).is_zero());  // convention: negative terms are zero
  CHECK(f.term_at(0).is_unit());
  CHECK_FALSE(f.is_unchecked());
  CHECK_FALSE(f.is_rescaled_view());
}

TEST_CASE("seeded filtrations validate the product law") {
  // I_2 = m^3 is strictly bigger than I_1^2 = m^4: the witness is (1,1),
  // reported against the failing product pair
  auto r = plane();
  auto m = maximal_ideal(r);
  try {
    auto f = filtration_seeded<GFp>({pow(m, 2), pow(m, 3)}, 2);
    FAIL("expected the declaration to be rejected");
  } catch (const not_filtration_error& e) {
    CHECK(e.pair_m >= 1);
    CHECK(e.pair_n >= 1);
    CHECK(e.pair_m + e.pair_n <= 4);
  }
  auto f = seeded_powers(true);
  CHECK(f.is_unchecked());
  CHECK(f.term(1) == pow(m, 2));
  CHECK(f.term(2) == pow(m, 3));
  // beyond the seeds the tail rule takes over: I_3 = I_1 I_2 = m^5
  CHECK(f.term(3) == pow(m, 5));
  CHECK(f.term(4) == pow(m, 7));
  CHECK(f.stability_index() == 2);
}

TEST_CASE("a valid seeded declaration is accepted") {
  auto r = plane();
  auto m = maximal_ideal(r);
  // powers of m declared as seeds satisfy every product inequality
  auto f = filtration_seeded<GFp>({m, pow(m, 2), pow(m, 3)}, 3);
  CHECK_FALSE(f.is_unchecked());
  CHECK(f.term(5) == pow(m, 5));
}

TEST_CASE("quotient filtrations push terms forward") {
  auto r = plane();
  auto f = filtration_adic(maximal_ideal(r));
  auto g = filtration_quotient(f, I(r, {"x"}));
  CHECK(g.ring() != f.ring());
  CHECK(g.term(2) == pow(maximal_ideal(g.ring()), 2));
  CHECK(analytic_spread(f) == 2);
  CHECK(analytic_spread(g) == 1);
}

TEST_CASE("rescaled views select every T-th term") {
  auto r = plane();
  auto m = maximal_ideal(r);
  auto f = filtration_adic(pow(m, 2));
  auto g = rescale(f, 3);
  CHECK(g.is_rescaled_view());
  CHECK(g.rescale_factor() == 3);
  CHECK(g.term(1) == f.term(3));
  CHECK(g.term(2) == f.term(6));
  CHECK(g.term(0).is_unit());
  CHECK(rescale(f, 1).term(2) == f.term(2));
  CHECK_THROWS_AS(rescale(f, 0), precondition_error);

  // certification works through a validated view ...
  auto red = verify_reduction(g, {P(r, "x^6"), P(r, "y^6")});
  CHECK(red.is_reduction);
  // ... but is refused over an unvalidated one
  auto h = rescale(seeded_powers(true), 2);
  CHECK_THROWS_WITH(verify_reduction(h, {P(r, "x^3")}),
                    Catch::Matchers::ContainsSubstring("cannot certify"));
}

TEST_CASE("nilpotency detection") {
  auto r = plane();
  auto fat = make_quotient(pow(maximal_ideal(r), 2));
  auto f = filtration_adic(maximal_ideal(fat));
  auto nil = is_nilpotent(f);
  CHECK(nil.first);
  CHECK(nil.second == 2);  // m^2 = 0 in the fat point
  CHECK_FALSE(is_nilpotent(filtration_adic(maximal_ideal(r))).first);
}

TEST_CASE("fiber tables of the standard instances") {
  auto r = plane();
  auto m = maximal_ideal(r);

  auto t_plane = fiber_table(filtration_adic(m), m);
  CHECK(t_plane.spread == 2);
  CHECK(t_plane.value_at(1) == 2);
  CHECK(t_plane.value_at(9) == 10);
  CHECK(t_plane.poly == std::vector<std::string>{"1", "1"});
  CHECK_FALSE(t_plane.nilpotent);
  CHECK(t_plane.multiplicity == 1);

  auto t_ver = fiber_table(filtration_adic(pow(m, 2)), m);
  CHECK(t_ver.spread == 2);
  CHECK(t_ver.value_at(1) == 3);
  CHECK(t_ver.value_at(2) == 5);
  CHECK(t_ver.poly == std::vector<std::string>{"1", "2"});
  CHECK(t_ver.multiplicity == 2);

  auto quartic = I(r, {"x^4", "x^3*y", "x*y^3", "y^4"});
  auto t_q = fiber_table(filtration_adic(quartic), m);
  CHECK(t_q.spread == 2);
  CHECK(t_q.value_at(1) == 4);
  CHECK(t_q.value_at(2) == 9);
  CHECK(t_q.value_at(3) == 13);
  CHECK(t_q.value_at(4) == 17);
  CHECK(t_q.poly == std::vector<std::string>{"1", "4"});
  CHECK(t_q.multiplicity == 4);

  auto t_seed = fiber_table(seeded_powers(true), m);
  CHECK(t_seed.spread == 2);
  CHECK(t_seed.lo == 3);  // the certified window starts past the seeds
  CHECK(t_seed.value_at(3) == 6);
  CHECK(t_seed.value_at(4) == 8);
  CHECK(t_seed.poly == std::vector<std::string>{"0", "2"});

  auto q = axis();
  auto t_axis = fiber_table(filtration_adic(I(q, {"x"})), maximal_ideal(q));
  CHECK(t_axis.spread == 1);
  CHECK(t_axis.poly == std::vector<std::string>{"1"});

  auto r3 = make_polynomial_ring(GFp{}, {"x", "y", "z"});
  auto t_space = fiber_table(filtration_adic(maximal_ideal(r3)), maximal_ideal(r3));
  CHECK(t_space.spread == 3);
  CHECK(t_space.poly == std::vector<std::string>{"1", "3/2", "1/2"});
  CHECK(t_space.multiplicity == 1);
}

TEST_CASE("analytic spread and the multiplicity limit") {
  auto r = plane();
  auto m = maximal_ideal(r);
  CHECK(analytic_spread(filtration_adic(m)) == 2);
  CHECK(analytic_spread(filtration_adic(pow(m, 2))) == 2);
  CHECK(multiplicity_limit(filtration_adic(pow(m, 2)), m) == 2);
  CHECK(multiplicity_limit(filtration_adic(m), m) == 1);

  auto dl = double_line();
  CHECK(analytic_spread(filtration_adic(maximal_ideal(dl))) == 1);
  CHECK(multiplicity_limit(filtration_adic(maximal_ideal(dl)), maximal_ideal(dl)) == 2);

  auto fat = make_quotient(pow(m, 2));
  auto nil = filtration_adic(maximal_ideal(fat));
  CHECK(fiber_table(nil, maximal_ideal(fat)).nilpotent);
  CHECK(fiber_table(nil, maximal_ideal(fat)).spread == 0);
  CHECK_THROWS_WITH(multiplicity_limit(nil, maximal_ideal(fat)),
                    Catch::Matchers::ContainsSubstring("nilpotent"));
}

TEST_CASE("reduction verification") {
  auto r = plane();
  auto m = maximal_ideal(r);
  auto ver = filtration_adic(pow(m, 2));

  auto red = verify_reduction(ver, {P(r, "x^2"), P(r, "y^2")});
  CHECK(red.is_reduction);
  CHECK(red.r == 1);
  CHECK(red.persist_from <= 1);
  CHECK(red.checked_to >= red.r + 1);

  auto not_red = verify_reduction(ver, {P(r, "x^2")});
  CHECK_FALSE(not_red.is_reduction);
  CHECK(not_red.r == -1);
  CHECK(not_red.bound >= 10);

  // the full generating set is a reduction with number 0
  auto full = verify_reduction(ver, pow(m, 2).gens());
  CHECK(full.is_reduction);
  CHECK(full.r == 0);

  // seeded instance: x^2, y^2 still works, but only from n = 2 on
  auto sp = seeded_powers(true);
  auto red_sp = verify_reduction(sp, {P(r, "x^2"), P(r, "y^2")});
  CHECK(red_sp.is_reduction);
  CHECK(red_sp.r == 2);
}

TEST_CASE("difference tables flatten at the spread") {
  auto r = plane();
  auto m = maximal_ideal(r);
  for (auto& f : {filtration_adic(m), filtration_adic(pow(m, 2)),
                  filtration_adic(I(r, {"x^4", "x^3*y", "x*y^3", "y^4"}))}) {
    auto t = fiber_table(f, m);
    REQUIRE(t.spread >= 1);
    // order-(spread) differences vanish on the certified tail; the first few
    // values may predate the polynomial behavior
    std::size_t tail = std::min<std::size_t>(t.values.size(),
                                             static_cast<std::size_t>(t.spread) + 4);
    std::vector<long long> v(t.values.end() - tail, t.values.end());
    for (int k = 0; k < t.spread; ++k) {
      std::vector<long long> d;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(v[i + 1] - v[i]);
      v = d;
    }
    for (auto x : v) REQUIRE(x == 0);
  }
}

TEST_CASE("sequence construction is seeded and certified") {
  auto r = plane();
  auto m = maximal_ideal(r);
  auto ver = filtration_adic(pow(m, 2));

  auto s1 = find_weak_fc_sequence(ver, m, {}, 42);
  auto s2 = find_weak_fc_sequence(ver, m, {}, 42);
  auto s3 = find_weak_fc_sequence(ver, m, {}, 43);
  REQUIRE(s1.lifts.size() == 2);
  CHECK(s1.maximal);
  CHECK(s1.seed == 42);
  CHECK(s1.lifts[0] == s2.lifts[0]);
  CHECK(s1.lifts[1] == s2.lifts[1]);
  CHECK(s3.lifts.size() == 2);

  int expect_before = 2;
  for (const auto& c : s1.certificates) {
    CHECK(c.fc2);
    CHECK(c.fc1);
    CHECK(c.superficial);
    CHECK(c.spread_before == expect_before);
    CHECK(c.spread_after == expect_before - 1);
    --expect_before;
    CHECK_FALSE(c.coefficients.empty());
    CHECK(c.element.is_homogeneous());
    CHECK(c.lift.is_homogeneous());
  }

  auto red = reduction_from_sequence(s1);
  CHECK(red.is_reduction);
  CHECK(red.r == 1);

  // an explicit pool is validated before use
  auto pool = I(r, {"x^2", "y^2"});
  auto sp = find_weak_fc_sequence(ver, m, pool, 7);
  CHECK(sp.lifts.size() == 2);
  CHECK_THROWS_AS(find_weak_fc_sequence(ver, m, I(r, {"x^2"}), 7),
                  precondition_error);
  CHECK_THROWS_AS(find_weak_fc_sequence(ver, I(r, {"x"}), {}, 7),
                  precondition_error);
}

TEST_CASE("nilpotent filtrations yield the empty maximal sequence") {
  auto r = plane();
  auto fat = make_quotient(pow(maximal_ideal(r), 2));
  auto f = filtration_adic(maximal_ideal(fat));
  auto s = find_weak_fc_sequence(f, maximal_ideal(fat), {}, 5);
  CHECK(s.lifts.empty());
  CHECK(s.maximal);
}

TEST_CASE("sequence lengths equal the spread across seeds") {
  auto r = plane();
  auto m = maximal_ideal(r);
  auto q = axis();
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    CHECK(find_weak_fc_sequence(filtration_adic(m), m, {}, seed).lifts.size() == 2);
    CHECK(find_weak_fc_sequence(seeded_powers(true), m, {}, seed).lifts.size() == 2);
    CHECK(find_weak_fc_sequence(filtration_adic(I(q, {"x"})), maximal_ideal(q), {},
                                seed)
              .lifts.size() == 1);
  }
}
