// Scaled affine-monomial automorphisms: x_j -> c_j * x_{perm(j)} + d_j.
//
// The class is closed under composition and inversion, covers scalings,
// shifts, and variable permutations, and keeps orbit equations solvable in
// closed form per coordinate.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "br/ideal.hpp"
#include "br/polynomial.hpp"

namespace br {

class Automorphism {
public:
  // Validates closure: shifts are rejected on invertible variables and the
  // permutation must preserve invertibility.
  static Automorphism make(RingPtr ring, std::vector<std::size_t> perm,
                           std::vector<Rat> scale, std::vector<Rat> shift);
  static Automorphism identity(RingPtr ring);
  // Diagonal map x_j -> scale_j * x_j + shift_j.
  static Automorphism diagonal(RingPtr ring, std::vector<Rat> scale,
                               std::vector<Rat> shift);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<Rat>& scale() const { return scale_; }
  const std::vector<Rat>& shift() const { return shift_; }

  bool is_identity() const;
  bool is_diagonal() const;  // trivial permutation
  bool is_pure_scaling() const;

  // Image of x_j as a polynomial.
  Polynomial image(std::size_t j) const;

  Polynomial apply(const Polynomial& f) const;
  Ideal apply(const Ideal& ideal) const;

  // this after other: (a.compose(b))(f) == a.apply(b.apply(f)).
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;
  Automorphism power(long k) const;

  bool commutes_with(const Automorphism& o) const;
  bool operator==(const Automorphism& o) const;

  // The point b with apply(I(pt)) == I(b); contravariant in the substitution.
  Point act_point(const Point& pt) const;

  // Every member of this class is locally algebraic: the orbit of a variable
  // stays inside span{1, x_perm^k(j)}.
  static constexpr bool locally_algebraic = true;
  std::string local_algebraicity_reason() const;

private:
  Automorphism(RingPtr ring) : ring_(std::move(ring)) {}

  RingPtr ring_;
  std::vector<std::size_t> perm_;
  std::vector<Rat> scale_;
  std::vector<Rat> shift_;
};

}  // namespace br
