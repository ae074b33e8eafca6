// Test-side oracles, independent of the library paths they check, plus
// deterministic random generators for property tests.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "br/datum.hpp"
#include "br/structure.hpp"

namespace br::testing {

// --- univariate Euclidean oracle -------------------------------------------
// Dense coefficient vectors, index = degree. Used to cross-check Groebner
// bases of univariate ideals: the reduced basis must be the monic gcd.

inline std::vector<Rat> uni_trim(std::vector<Rat> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline std::vector<Rat> uni_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = uni_trim(std::move(a));
  }
  return a;
}

inline std::vector<Rat> uni_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    auto r = uni_rem(a, b);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline std::vector<Rat> uni_coeffs(const Polynomial& f) {
  std::vector<Rat> out;
  for (auto& [m, c] : f.terms()) {
    std::size_t deg = 0;
    for (int e : m) deg += static_cast<std::size_t>(e);
    if (out.size() <= deg) out.resize(deg + 1, Rat(0));
    out[deg] = c;
  }
  return uni_trim(std::move(out));
}

inline Polynomial uni_poly(const RingPtr& ring, const std::vector<Rat>& coeffs) {
  Polynomial f(ring);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    Mono m(ring->arity(), 0);
    m[0] = static_cast<int>(d);
    f.add_term(m, coeffs[d]);
  }
  return f;
}

// --- linear-algebra membership oracle ---------------------------------------
// Decides f in (g_1..g_m) by solving f = sum g_i c_i with deg c_i <= bound
// over the monomial basis. Positive answers are certain; negative answers are
// degree-bound limited, so callers pick instances where the bound is ample.
bool membership_by_linear_algebra(const Polynomial& f,
                                  const std::vector<Polynomial>& gens,
                                  long cofactor_degree_bound);

// --- rank-1 skew Laurent model ----------------------------------------------
// An independent model of R[t^{+-1}; sigma]: elements are maps degree ->
// coefficient and multiplication applies sigma directly.
struct SkewModelElt {
  std::map<long, Polynomial> parts;
};

inline SkewModelElt skew_mul(const Automorphism& sigma, const SkewModelElt& a,
                             const SkewModelElt& b) {
  SkewModelElt out;
  for (auto& [i, f] : a.parts)
    for (auto& [j, g] : b.parts) {
      Polynomial term = f * sigma.power(i).apply(g);
      auto it = out.parts.find(i + j);
      if (it == out.parts.end()) {
        if (!term.is_zero()) out.parts.emplace(i + j, term);
      } else {
        it->second += term;
        if (it->second.is_zero()) out.parts.erase(it);
      }
    }
  return out;
}

// --- brute-force G_m oracle --------------------------------------------------
// { alpha : B_{-alpha} B_alpha not inside m } computed from first principles:
// per-axis translate products of the H/J generators, multiplied out and
// evaluated at the point. Independent of the datum's cached canonical ideals
// and of the break/box machinery.
std::vector<Deg> g_set_bruteforce(const BellRogalskiDatum& datum,
                                  const Point& pt, long window);

// --- random generators -------------------------------------------------------

struct RandomDatum {
  DatumPtr datum;
  Point base;  // torsion-free base point
};

// Rank 1 or 2; each axis acts on its own variable (a shifted polynomial
// variable or a scaled Laurent variable) with random small H/J generators.
RandomDatum random_datum(std::mt19937_64& rng, int rank);

// Random element of I^(alpha) as a combination of its generators.
Polynomial random_member(std::mt19937_64& rng, const BellRogalskiDatum& datum,
                         const Deg& alpha);

Deg random_degree(std::mt19937_64& rng, std::size_t rank, long bound);

// --- twisting-map associativity ---------------------------------------------
// Both sides of the associativity condition for tau on a homogeneous
// quadruple (a, b from the right factor, c, d from the left factor).
bool tau_associative(const TwistMaps& maps, const GradedElement& a,
                     const GradedElement& b, const GradedElement& c,
                     const GradedElement& d);

}  // namespace br::testing
