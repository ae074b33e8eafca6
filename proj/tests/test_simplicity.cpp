// Simplicity verdicts and their supporting checks.
#include <doctest.h>

#include "br/simplicity.hpp"
#include "br/structure.hpp"
#include "support/oracles.hpp"

using namespace br;

namespace {

DatumPtr weyl_datum() {
  auto ring = RingSpec::make({"z"}, {false});
  auto z = Polynomial::variable(ring, 0);
  return BellRogalskiDatum::make(
      ring, {Automorphism::diagonal(ring, {Rat(1)}, {Rat(1)})}, {{Rat(1)}},
      {Ideal::unit(ring)}, {Ideal::principal(z + Polynomial::one(ring))});
}

DatumPtr scaling_datum() {
  auto ring = RingSpec::make({"u", "v"}, {true, true});
  return BellRogalskiDatum::make(
      ring, {Automorphism::diagonal(ring, {Rat(2), Rat(3)}, {Rat(0), Rat(0)})},
      {{Rat(1)}}, {Ideal::unit(ring)},
      {Ideal::of(ring, {Polynomial::parse(ring, "u+v"),
                        Polynomial::parse(ring, "(u+1)^2")})});
}

}  // namespace

TEST_CASE("gamma-simplicity certifiers and refutations") {
  SUBCASE("torsion-free scaling group of full rank") {
    auto g = gamma_simple(*scaling_datum());
    CHECK(g.status == Cert::Certified);
  }
  SUBCASE("identity automorphism is refuted with a witness") {
    auto ring = RingSpec::make({"z"}, {false});
    auto z = Polynomial::variable(ring, 0);
    auto d = BellRogalskiDatum::make(ring, {Automorphism::identity(ring)},
                                     {{Rat(1)}}, {Ideal::unit(ring)},
                                     {Ideal::principal(z + Polynomial::one(ring))});
    auto g = gamma_simple(*d);
    REQUIRE(g.status == Cert::Refuted);
    REQUIRE(g.witness.has_value());
    CHECK(g.witness->equals(Ideal::principal(z)));
  }
  SUBCASE("fixed polynomial variable is an invariant ideal") {
    auto ring = RingSpec::make({"x", "y"}, {false, false});
    auto d = BellRogalskiDatum::make(
        ring,
        {Automorphism::diagonal(ring, {Rat(2), Rat(1)}, {Rat(0), Rat(0)})},
        {{Rat(1)}}, {Ideal::unit(ring)}, {Ideal::unit(ring)});
    auto g = gamma_simple(*d);
    REQUIRE(g.status == Cert::Refuted);
    CHECK(g.witness.has_value());
  }
  SUBCASE("rank-deficient scaling group is refuted via a character relation") {
    auto ring = RingSpec::make({"u", "v"}, {true, true});
    auto d = BellRogalskiDatum::make(
        ring,
        {Automorphism::diagonal(ring, {Rat(2), Rat(1, 2)}, {Rat(0), Rat(0)})},
        {{Rat(1)}}, {Ideal::unit(ring)}, {Ideal::unit(ring)});
    auto g = gamma_simple(*d);
    CHECK(g.status == Cert::Refuted);
  }
  SUBCASE("user assumption is recorded") {
    auto ring = RingSpec::make({"u", "z"}, {true, false});
    auto d = BellRogalskiDatum::make(
        ring,
        {Automorphism::make(ring, {0, 1}, {Rat(2), Rat(1)}, {Rat(0), Rat(1)})},
        {{Rat(1)}}, {Ideal::unit(ring)}, {Ideal::unit(ring)});
    auto g = gamma_simple(*d, std::string("known from the construction"));
    CHECK(g.status == Cert::Certified);
    CHECK(g.method.find("assumption") != std::string::npos);
    CHECK(gamma_simple(*d).status == Cert::Unknown);
  }
}

TEST_CASE("invariant subrings") {
  SUBCASE("full-rank scalings leave only constants") {
    auto inv = invariant_subring(*scaling_datum());
    CHECK(inv.generators.empty());
    CHECK(inv.exact);
  }
  SUBCASE("reciprocal scalings leave the product monomial") {
    auto ring = RingSpec::make({"u", "v"}, {true, true});
    auto d = BellRogalskiDatum::make(
        ring,
        {Automorphism::diagonal(ring, {Rat(2), Rat(1, 2)}, {Rat(0), Rat(0)})},
        {{Rat(1)}}, {Ideal::unit(ring)}, {Ideal::unit(ring)});
    auto inv = invariant_subring(*d);
    REQUIRE(!inv.generators.empty());
    CHECK(inv.exact);
    CHECK(inv.generators[0] == Polynomial::parse(ring, "u*v"));
  }
  SUBCASE("trivial group fixes the whole ring") {
    auto ring = RingSpec::make({"x"}, {false});
    auto d = BellRogalskiDatum::make(ring, {Automorphism::identity(ring)},
                                     {{Rat(1)}}, {Ideal::unit(ring)},
                                     {Ideal::unit(ring)});
    auto inv = invariant_subring(*d);
    REQUIRE(!inv.generators.empty());
    CHECK(inv.generators[0] == Polynomial::variable(ring, 0));
  }
  SUBCASE("polynomial variables need nonnegative exponents") {
    auto ring = RingSpec::make({"x", "y"}, {false, false});
    auto d = BellRogalskiDatum::make(
        ring,
        {Automorphism::diagonal(ring, {Rat(2), Rat(1, 2)}, {Rat(0), Rat(0)})},
        {{Rat(1)}}, {Ideal::unit(ring)}, {Ideal::unit(ring)});
    auto inv = invariant_subring(*d);
    REQUIRE(inv.generators.size() == 1);
    CHECK(inv.generators[0] == Polynomial::parse(ring, "x*y"));
  }
  SUBCASE("shifted variables carry no invariants") {
    auto inv = invariant_subring(*weyl_datum());
    CHECK(inv.generators.empty());
    CHECK(inv.exact);
  }
}

TEST_CASE("hyperplane conditions") {
  SUBCASE("vacuous pass on an empty break locus") {
    auto ring = RingSpec::make({"z"}, {false});
    auto d = BellRogalskiDatum::make(
        ring, {Automorphism::diagonal(ring, {Rat(1)}, {Rat(1)})}, {{Rat(1)}},
        {Ideal::unit(ring)}, {Ideal::unit(ring)});
    auto hp = hyperplane_condition(*d, 0, 6);
    CHECK(hp.css_empty);
    CHECK(hp.exact_all == true);
  }
  SUBCASE("scaling example passes for all k") {
    auto hp = hyperplane_condition(*scaling_datum(), 0, 12);
    CHECK(hp.exact_all == true);
    for (auto& [k, pass] : hp.window) CHECK(pass);
  }
  SUBCASE("shifted double root fails exactly at the gap") {
    auto ring = RingSpec::make({"z"}, {false});
    auto d = BellRogalskiDatum::make(
        ring, {Automorphism::diagonal(ring, {Rat(1)}, {Rat(1)})}, {{Rat(1)}},
        {Ideal::unit(ring)},
        {Ideal::principal(Polynomial::parse(ring, "z*(z-2)"))});
    auto hp = hyperplane_condition(*d, 0, 6);
    REQUIRE(hp.exact_all.has_value());
    CHECK(*hp.exact_all == false);
    CHECK(hp.exact_witness_k == 2);
    for (auto& [k, pass] : hp.window) CHECK(pass == (k != 2));
  }
  SUBCASE("window and exact modes agree wherever both run") {
    std::mt19937_64 rng(73);
    int agreed = 0;
    for (int trial = 0; trial < 12; ++trial) {
      auto rd = br::testing::random_datum(rng, 1 + static_cast<int>(rng() % 2));
      for (std::size_t axis = 0; axis < rd.datum->rank(); ++axis) {
        auto hp = hyperplane_condition(*rd.datum, axis, 8);
        if (!hp.exact_all.has_value()) continue;
        for (auto& [k, pass] : hp.window) {
          bool exact_says_pass =
              *hp.exact_all || !hp.exact_witness_k || *hp.exact_witness_k != k;
          // A failing k in window mode must be a failing k in exact mode.
          if (!pass) CHECK(!*hp.exact_all);
          if (*hp.exact_all) CHECK(pass);
          (void)exact_says_pass;
          ++agreed;
        }
      }
    }
    CHECK(agreed > 0);
  }
}

TEST_CASE("rank-1 verdicts") {
  CHECK(rank1_verdict(*scaling_datum()).status == SimplicityStatus::Simple);
  CHECK(rank1_verdict(*weyl_datum()).status == SimplicityStatus::Simple);

  SUBCASE("identity automorphism is not simple") {
    auto ring = RingSpec::make({"z"}, {false});
    auto d = BellRogalskiDatum::make(
        ring, {Automorphism::identity(ring)}, {{Rat(1)}}, {Ideal::unit(ring)},
        {Ideal::principal(Polynomial::parse(ring, "z + 1"))});
    CHECK(rank1_verdict(*d).status == SimplicityStatus::NotSimple);
  }
  SUBCASE("lonely failure carries the witness k") {
    auto ring = RingSpec::make({"z"}, {false});
    auto d = BellRogalskiDatum::make(
        ring, {Automorphism::diagonal(ring, {Rat(1)}, {Rat(1)})}, {{Rat(1)}},
        {Ideal::unit(ring)},
        {Ideal::principal(Polynomial::parse(ring, "z*(z-2)"))});
    auto v = rank1_verdict(*d);
    CHECK(v.status == SimplicityStatus::NotSimple);
    bool witnessed = false;
    for (auto& e : v.trail)
      if (e.witness.find("k = 2") != std::string::npos) witnessed = true;
    CHECK(witnessed);
  }
  SUBCASE("rank precondition") {
    auto t = twisted_tensor(weyl_datum(), weyl_datum(), TwistSpec{});
    CHECK_THROWS_AS(rank1_verdict(*t.tensor), Error);
  }
  SUBCASE("simple implies every hyperplane condition passes") {
    for (auto d : {scaling_datum(), weyl_datum()}) {
      REQUIRE(rank1_verdict(*d).status == SimplicityStatus::Simple);
      auto hp = hyperplane_condition(*d, 0, 10);
      for (auto& [k, pass] : hp.window) CHECK(pass);
    }
  }
}

TEST_CASE("rank-n verdicts") {
  SUBCASE("tensor of simple factors is simple via the tensor route") {
    auto b = scaling_datum();
    auto t = twisted_tensor(b, b, TwistSpec{});
    auto v = rankn_verdict(t.tensor);
    CHECK(v.status == SimplicityStatus::Simple);
    bool via_tensor = false;
    for (auto& e : v.trail)
      if (e.outcome == "established" && e.condition.find("tensor") != std::string::npos)
        via_tensor = true;
    CHECK(via_tensor);
  }
  SUBCASE("hyperplane failure yields NOT_SIMPLE with a witness") {
    auto ring = RingSpec::make({"x", "y"}, {false, false});
    auto d = BellRogalskiDatum::make(
        ring,
        {Automorphism::diagonal(ring, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}),
         Automorphism::diagonal(ring, {Rat(1), Rat(1)}, {Rat(0), Rat(1)})},
        {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
        {Ideal::unit(ring), Ideal::unit(ring)},
        {Ideal::principal(Polynomial::parse(ring, "x*(x-2)")),
         Ideal::principal(Polynomial::parse(ring, "y + 1"))});
    auto v = rankn_verdict(d);
    CHECK(v.status == SimplicityStatus::NotSimple);
    bool witnessed = false;
    for (auto& e : v.trail)
      if (e.outcome == "fail" && e.witness.find("k = 2") != std::string::npos)
        witnessed = true;
    CHECK(witnessed);
  }
  SUBCASE("all checks passing without a tensor split is inconclusive") {
    // Couple the axes through the twist while keeping per-axis structure
    // non-separable: share a variable between the two J ideals.
    auto ring = RingSpec::make({"u", "v"}, {true, true});
    auto s1 = Automorphism::diagonal(ring, {Rat(2), Rat(3)}, {Rat(0), Rat(0)});
    auto s2 = Automorphism::diagonal(ring, {Rat(5), Rat(7)}, {Rat(0), Rat(0)});
    auto d = BellRogalskiDatum::make(
        ring, {s1, s2}, {{Rat(1), Rat(2)}, {Rat(1, 2), Rat(1)}},
        {Ideal::unit(ring), Ideal::unit(ring)},
        {Ideal::principal(Polynomial::variable(ring, 0)),
         Ideal::principal(Polynomial::variable(ring, 0) *
                          Polynomial::variable(ring, 1))});
    auto v = rankn_verdict(d);
    CHECK(v.status == SimplicityStatus::Inconclusive);
  }
  SUBCASE("nonconstant invariant subring refutes simplicity") {
    auto ring = RingSpec::make({"u", "v"}, {true, true});
    auto d = BellRogalskiDatum::make(
        ring,
        {Automorphism::diagonal(ring, {Rat(2), Rat(1, 2)}, {Rat(0), Rat(0)}),
         Automorphism::diagonal(ring, {Rat(3), Rat(1, 3)}, {Rat(0), Rat(0)})},
        {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
        {Ideal::unit(ring), Ideal::unit(ring)},
        {Ideal::unit(ring), Ideal::unit(ring)});
    auto v = rankn_verdict(d);
    CHECK(v.status == SimplicityStatus::NotSimple);
  }
}

TEST_CASE("verdict trails replay to the same status") {
  std::vector<Verdict> verdicts;
  verdicts.push_back(rank1_verdict(*scaling_datum()));
  verdicts.push_back(rank1_verdict(*weyl_datum()));
  auto t = twisted_tensor(scaling_datum(), scaling_datum(), TwistSpec{});
  verdicts.push_back(rankn_verdict(t.tensor));
  for (const auto& v : verdicts) {
    CHECK(replay_trail(v.trail) == v.status);
    CHECK(!v.trail.empty());
  }
  // A SIMPLE verdict always rests on an established route; NOT_SIMPLE always
  // carries a concrete witness entry.
  for (const auto& v : verdicts) {
    if (v.status == SimplicityStatus::Simple) {
      bool established = false;
      for (auto& e : v.trail)
        if (e.outcome == "established") established = true;
      CHECK(established);
    }
  }
}
