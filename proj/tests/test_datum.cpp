// Bell-Rogalski data: validation, canonical ideals, and the graded product.
#include <doctest.h>

#include "support/oracles.hpp"

using namespace br;
using namespace br::testing;

namespace {

DatumPtr weyl_datum() {
  auto ring = RingSpec::make({"z"}, {false});
  auto z = Polynomial::variable(ring, 0);
  return BellRogalskiDatum::make(
      ring, {Automorphism::diagonal(ring, {Rat(1)}, {Rat(1)})}, {{Rat(1)}},
      {Ideal::unit(ring)}, {Ideal::principal(z + Polynomial::one(ring))});
}

}  // namespace

TEST_CASE("validation catches each axiom") {
  SUBCASE("weyl datum passes") { CHECK(weyl_datum()->validate().ok()); }

  SUBCASE("non-antisymmetric p") {
    auto ring = RingSpec::make({"x", "y"}, {false, false});
    auto d = BellRogalskiDatum::make(
        ring,
        {Automorphism::diagonal(ring, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}),
         Automorphism::diagonal(ring, {Rat(1), Rat(1)}, {Rat(0), Rat(1)})},
        {{Rat(1), Rat(2)}, {Rat(3), Rat(1)}},
        {Ideal::unit(ring), Ideal::unit(ring)},
        {Ideal::unit(ring), Ideal::unit(ring)});
    auto rep = d->validate();
    CHECK(!rep.ok());
    bool named = false;
    for (auto& e : rep.entries)
      if (!e.pass && e.axiom.find("antisymmetric") != std::string::npos)
        named = true;
    CHECK(named);
  }

  SUBCASE("cross-axis invariance failure with witness") {
    auto ring = RingSpec::make({"u", "y"}, {true, false});
    auto s1 = Automorphism::diagonal(ring, {Rat(2), Rat(1)}, {Rat(0), Rat(0)});
    auto s2 = Automorphism::diagonal(ring, {Rat(1), Rat(1)}, {Rat(0), Rat(1)});
    auto d = BellRogalskiDatum::make(
        ring, {s1, s2}, {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
        {Ideal::unit(ring), Ideal::unit(ring)},
        {Ideal::unit(ring),
         Ideal::principal(Polynomial::parse(ring, "u + 1"))});
    auto rep = d->validate();
    CHECK(!rep.ok());  // sigma_1(J_2) = (2u + 1) != (u + 1)
  }
}

TEST_CASE("canonical degree ideals") {
  auto datum = weyl_datum();
  auto ring = datum->ring();
  SUBCASE("positive side accumulates translates of J") {
    Ideal i2 = datum->canonical_ideal({2});
    CHECK(i2.equals(Ideal::principal(Polynomial::parse(ring, "(z+1)*(z+2)"))));
  }
  SUBCASE("degree zero is the unit ideal") {
    CHECK(datum->canonical_ideal({0}).is_unit());
  }
  SUBCASE("negative side uses H) ") {
    CHECK(datum->canonical_ideal({-1}).is_unit());  // H = R
  }
}

TEST_CASE("graded product against the rank-1 skew model") {
  auto datum = weyl_datum();
  auto ring = datum->ring();
  auto z = Polynomial::variable(ring, 0);
  auto one = Polynomial::one(ring);

  auto a = GradedElement::term(datum, {1}, z + one);
  auto b = GradedElement::term(datum, {-1}, one);
  CHECK((a * b).part({0}) == z + one);
  CHECK((b * a).part({0}) == z);
  CHECK((GradedElement::one(datum) * a) == a);

  std::mt19937_64 rng(41);
  const Automorphism& s = datum->sigma(0);
  for (int trial = 0; trial < 30; ++trial) {
    Deg da = random_degree(rng, 1, 3), db = random_degree(rng, 1, 3);
    Polynomial fa = random_member(rng, *datum, da);
    Polynomial fb = random_member(rng, *datum, db);
    auto lhs = GradedElement::term(datum, da, fa) * GradedElement::term(datum, db, fb);
    SkewModelElt ma{{{da[0], fa}}}, mb{{{db[0], fb}}};
    SkewModelElt expected = skew_mul(s, ma, mb);
    for (auto& [deg, poly] : expected.parts) CHECK(lhs.part({deg}) == poly);
    CHECK(lhs.parts().size() == expected.parts.size());
  }
}

TEST_CASE("membership verification flags foreign coefficients") {
  auto datum = weyl_datum();
  auto ring = datum->ring();
  CHECK_THROWS_AS(
      GradedElement::term(datum, {1}, Polynomial::one(ring)),
      MembershipError);
  // and is skippable for ambient computations
  auto loose = GradedElement::term(datum, {1}, Polynomial::one(ring), false);
  CHECK(!loose.is_zero());
}

TEST_CASE("reordering scalar obeys the p-commutation law") {
  std::mt19937_64 rng(43);
  RandomDatum rd = random_datum(rng, 2);
  for (int trial = 0; trial < 100; ++trial) {
    Deg a = random_degree(rng, 2, 4), b = random_degree(rng, 2, 4);
    // t^a t^b = lambda(a,b) t^{a+b} and t^a t^b = p_{b,a} t^b t^a.
    Rat lhs = rd.datum->reorder_scalar(a, b);
    Rat rhs = rd.datum->p_scalar(b, a) * rd.datum->reorder_scalar(b, a);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("explicit two-axis exchange scalar") {
  std::mt19937_64 rng(47);
  auto ring = RingSpec::make({"x", "y"}, {false, false});
  Rat q(7);
  auto d = BellRogalskiDatum::make(
      ring,
      {Automorphism::diagonal(ring, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}),
       Automorphism::diagonal(ring, {Rat(1), Rat(1)}, {Rat(0), Rat(1)})},
      {{Rat(1), q}, {Rat(1) / q, Rat(1)}},
      {Ideal::unit(ring), Ideal::unit(ring)},
      {Ideal::unit(ring), Ideal::unit(ring)});
  auto e1 = GradedElement::term(d, {1, 0}, Polynomial::one(ring));
  auto e2 = GradedElement::term(d, {0, 1}, Polynomial::one(ring));
  // t1 t2 and t2 t1 differ by p_21 = 1/q.
  auto ab = e1 * e2;
  auto ba = e2 * e1;
  CHECK(ab.part({1, 1}) * q == ba.part({1, 1}));
}

TEST_CASE("graded containment identity and associativity") {
  std::mt19937_64 rng(53);
  for (int rank : {1, 2}) {
    RandomDatum rd = random_datum(rng, rank);
    // I^(a) sigma^a(I^(b)) = I^(a+b) on the window
    Deg a(rank, 0), b(rank, 0);
    std::vector<Deg> window;
    Deg cur(rank, -2);
    while (true) {
      window.push_back(cur);
      std::size_t pos = 0;
      while (pos < cur.size() && cur[pos] == 2) cur[pos++] = -2;
      if (pos == cur.size()) break;
      ++cur[pos];
    }
    for (const Deg& da : window)
      for (const Deg& db : window) {
        Ideal lhs = rd.datum->canonical_ideal(da) *
                    rd.datum->sigma_power(da).apply(rd.datum->canonical_ideal(db));
        CHECK(lhs.equals(rd.datum->canonical_ideal(deg_add(da, db))));
      }
    // associativity on random homogeneous triples
    for (int trial = 0; trial < 25; ++trial) {
      Deg d1 = random_degree(rng, rank, 2), d2 = random_degree(rng, rank, 2),
          d3 = random_degree(rng, rank, 2);
      auto x = GradedElement::term(rd.datum, d1, random_member(rng, *rd.datum, d1));
      auto y = GradedElement::term(rd.datum, d2, random_member(rng, *rd.datum, d2));
      auto w = GradedElement::term(rd.datum, d3, random_member(rng, *rd.datum, d3));
      CHECK(((x * y) * w) == (x * (y * w)));
    }
    // degrees add; domain property
    for (int trial = 0; trial < 10; ++trial) {
      Deg d1 = random_degree(rng, rank, 2), d2 = random_degree(rng, rank, 2);
      Polynomial f1 = random_member(rng, *rd.datum, d1);
      Polynomial f2 = random_member(rng, *rd.datum, d2);
      auto x = GradedElement::term(rd.datum, d1, f1);
      auto y = GradedElement::term(rd.datum, d2, f2);
      auto prod = x * y;
      CHECK(prod.is_zero() == (x.is_zero() || y.is_zero()));
      for (const Deg& dd : prod.support()) CHECK(dd == deg_add(d1, d2));
    }
  }
}

TEST_CASE("algebra generators") {
  auto datum = weyl_datum();
  auto gens = datum_generators(datum);
  // z in degree 0, (z+1) t, and t^{-1}
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].part({0}) == Polynomial::variable(datum->ring(), 0));
  CHECK(gens[1].part({1}) ==
        Polynomial::parse(datum->ring(), "z + 1"));
  CHECK(gens[2].part({-1}) == Polynomial::one(datum->ring()));
}

TEST_CASE("iterated decomposition recomposes on the window") {
  std::mt19937_64 rng(59);
  RandomDatum rd = random_datum(rng, 2);
  auto layer = iterate_decompose(rd.datum, 1);
  CHECK(layer.inner->rank() == 1);
  CHECK(layer.window_check.ok());
  CHECK(layer.t_twists.size() == 1);
  CHECK(layer.t_twists[0] == rd.datum->p(0, 1));

  CHECK_THROWS_AS(iterate_decompose(weyl_datum(), 0), Error);
}
