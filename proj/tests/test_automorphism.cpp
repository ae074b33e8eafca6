#include <doctest.h>

#include <random>

#include "br/automorphism.hpp"

using namespace br;

TEST_CASE("apply and powers") {
  auto ring = RingSpec::make({"z"}, {false});
  auto z = Polynomial::variable(ring, 0);
  auto s = Automorphism::diagonal(ring, {Rat(1)}, {Rat(1)});
  CHECK(s.apply(z * z) == Polynomial::parse(ring, "z^2 + 2*z + 1"));
  CHECK(s.power(-1).compose(s).is_identity());
  CHECK(s.power(0).is_identity());

  auto lring = RingSpec::make({"u", "v"}, {true, true});
  auto s2 = Automorphism::diagonal(lring, {Rat(2), Rat(3)}, {Rat(0), Rat(0)});
  Ideal moved = s2.apply(Ideal::principal(Polynomial::parse(lring, "u+v")));
  CHECK(moved.equals(Ideal::principal(Polynomial::parse(lring, "2*u+3*v"))));
}

TEST_CASE("class closure is validated") {
  auto lring = RingSpec::make({"u"}, {true});
  CHECK_THROWS_AS(Automorphism::diagonal(lring, {Rat(2)}, {Rat(1)}), Error);
  auto mixed = RingSpec::make({"u", "z"}, {true, false});
  CHECK_THROWS_AS(Automorphism::make(mixed, {1, 0}, {Rat(1), Rat(1)},
                                     {Rat(0), Rat(0)}),
                  Error);
  // permutation of two invertible variables is fine
  auto l2 = RingSpec::make({"u", "v"}, {true, true});
  auto swp = Automorphism::make(l2, {1, 0}, {Rat(1), Rat(1)}, {Rat(0), Rat(0)});
  CHECK(swp.compose(swp).is_identity());
  CHECK(swp.apply(Polynomial::parse(l2, "u + 2*v")) ==
        Polynomial::parse(l2, "v + 2*u"));
}

TEST_CASE("commutation") {
  auto ring = RingSpec::make({"x"}, {false});
  auto shift = Automorphism::diagonal(ring, {Rat(1)}, {Rat(1)});
  auto scale = Automorphism::diagonal(ring, {Rat(2)}, {Rat(0)});
  CHECK(!shift.commutes_with(scale));  // 2x+1 vs 2x+2
  CHECK(shift.commutes_with(shift));
  auto l2 = RingSpec::make({"u", "v"}, {true, true});
  auto d1 = Automorphism::diagonal(l2, {Rat(2), Rat(1)}, {Rat(0), Rat(0)});
  auto d2 = Automorphism::diagonal(l2, {Rat(1), Rat(3)}, {Rat(0), Rat(0)});
  CHECK(d1.commutes_with(d2));
}

TEST_CASE("point action matches the ideal identity") {
  auto l2 = RingSpec::make({"u", "v"}, {true, true});
  auto s = Automorphism::diagonal(l2, {Rat(2), Rat(3)}, {Rat(0), Rat(0)});
  CHECK(s.act_point({Rat(-1), Rat(1)}) == Point{Rat(-1, 2), Rat(1, 3)});

  auto ring = RingSpec::make({"z"}, {false});
  auto shift = Automorphism::diagonal(ring, {Rat(1)}, {Rat(1)});
  CHECK(shift.act_point({Rat(0)}) == Point{Rat(-1)});
  CHECK(Automorphism::identity(ring).act_point({Rat(5)}) == Point{Rat(5)});

  std::mt19937_64 rng(17);
  auto mixed = RingSpec::make({"u", "x"}, {true, false});
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Rat scale_u(c(rng));
    if (scale_u == 0) scale_u = 2;
    Rat scale_x(c(rng));
    if (scale_x == 0) scale_x = 1;
    auto a =
        Automorphism::diagonal(mixed, {scale_u, scale_x}, {Rat(0), Rat(c(rng))});
    Point pt{Rat(c(rng) == 0 ? 1 : c(rng)), Rat(c(rng))};
    Point img = a.act_point(pt);
    CHECK(a.apply(Ideal::of_point(mixed, pt)).equals(Ideal::of_point(mixed, img)));
  }
}

TEST_CASE("power additivity on variable images") {
  auto ring = RingSpec::make({"x", "y"}, {false, false});
  auto a = Automorphism::diagonal(ring, {Rat(2), Rat(1)}, {Rat(3), Rat(-1)});
  for (long i = -5; i <= 5; ++i)
    for (long j = -5; j <= 5; ++j)
      CHECK(a.power(i + j) == a.power(i).compose(a.power(j)));
}

TEST_CASE("commuting maps act commutingly on points") {
  auto l2 = RingSpec::make({"u", "v"}, {true, true});
  auto s1 = Automorphism::diagonal(l2, {Rat(2), Rat(1, 3)}, {Rat(0), Rat(0)});
  auto s2 = Automorphism::diagonal(l2, {Rat(5), Rat(7)}, {Rat(0), Rat(0)});
  REQUIRE(s1.commutes_with(s2));
  Point pt{Rat(3, 2), Rat(-4)};
  CHECK(s1.act_point(s2.act_point(pt)) == s2.act_point(s1.act_point(pt)));
}

TEST_CASE("local algebraicity is class-certified") {
  auto ring = RingSpec::make({"x", "y"}, {false, false});
  auto swap_xy =
      Automorphism::make(ring, {1, 0}, {Rat(1), Rat(1)}, {Rat(0), Rat(0)});
  CHECK(Automorphism::locally_algebraic);
  CHECK(!swap_xy.local_algebraicity_reason().empty());
}
