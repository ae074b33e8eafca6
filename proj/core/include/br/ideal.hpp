// Ideals with cached reduced Groebner bases.
//
// Laurent rings are handled by saturation: an ideal of a Laurent ring is
// represented by its polynomial contraction saturated at the product of the
// invertible variables, so a single Buchberger engine serves both cases.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "br/polynomial.hpp"

namespace br {

// Full normal form of f against a list of polynomials (every reducible term
// is rewritten). Exponents must be nonnegative throughout.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// Reduced Groebner basis of the ideal spanned by `gens` under the ring's
// order. No saturation; inputs must have nonnegative exponents.
std::vector<Polynomial> reduced_groebner(const RingPtr& ring,
                                         std::vector<Polynomial> gens);

class Ideal {
public:
  static Ideal of(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return of(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal principal(const Polynomial& g);
  // Maximal ideal of a rational point: (x_j - pt_j for all j).
  static Ideal of_point(const RingPtr& ring, const Point& pt);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced basis of the saturated polynomial contraction; computed once and
  // shared between copies. Empty for the zero ideal, {1} for the unit ideal.
  const std::vector<Polynomial>& groebner() const;

  bool contains(const Polynomial& f) const;
  bool is_unit() const;
  bool is_zero() const { return groebner().empty(); }
  bool equals(const Ideal& o) const;

  // All coordinates of pt lie in V(this), i.e. every generator vanishes.
  bool vanishes_at(const Point& pt) const;

  friend Ideal operator*(const Ideal& a, const Ideal& b);
  friend Ideal operator+(const Ideal& a, const Ideal& b);

private:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}

  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Polynomial>> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// Solutions of a zero-dimensional system with rational coordinates.
struct VarietyPoints {
  bool zero_dimensional = false;
  bool all_rational = false;   // meaningful only when zero_dimensional
  std::vector<Point> points;   // rational points found (invertible coords != 0)
  bool unit_ideal = false;     // empty variety
};

// Enumerate the rational points of V(I) via lex triangularization. Points
// with a zero coordinate on an invertible variable are discarded (they are
// not points of the Laurent spectrum).
VarietyPoints solve_variety(const Ideal& ideal);

}  // namespace br
