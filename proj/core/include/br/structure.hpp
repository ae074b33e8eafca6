// Structure conversions: TGWA correspondence in both directions, induced
// graded morphisms, invariant rings under finite-order diagonal symmetries,
// twisted tensor products, and GK-dimension reporting.
#pragma once

#include "br/datum.hpp"

namespace br {

// Exact division f / g; nullopt when not exact. Laurent-monomial factors are
// handled, so quotients may carry negative exponents on invertible variables.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

// Unit of R: a single term whose monomial involves only invertible variables.
bool is_ring_unit(const Polynomial& f);

struct TgwaDatum {
  RingPtr ring;
  std::vector<Automorphism> sigma;
  std::vector<Polynomial> a;            // central nonzero elements
  std::vector<std::vector<Rat>> mu;     // off-diagonal; diagonal fixed at 1
  std::vector<std::vector<Rat>> gamma;  // sigma_i(a_k) = gamma_ik a_k

  std::size_t rank() const { return sigma.size(); }
  ValidationReport validate() const;
};

struct TgwaConversion {
  TgwaDatum tgwa;
  // Unit tables: sigma_i(j_k) = u_ik j_k and sigma_i(h_k) = v_ik h_k.
  std::vector<std::vector<Polynomial>> u, v;
  std::vector<Polynomial> h_gen, j_gen;  // the principal generators used
  ValidationReport checks;
};

// Requires principal H_k, J_k (detected from the reduced basis) and scalar
// units. Throws with a named witness when a hypothesis fails.
TgwaConversion to_tgwa(const DatumPtr& datum);

// H_i = R, J_i = (sigma_i(a_i)), p_ik = mu_ik / gamma_ki.
DatumPtr from_tgwa(const TgwaDatum& tgwa);

// A k-algebra map given by variable images; invertible variables must map to
// units so the map is defined on the Laurent ring.
struct RingMap {
  RingPtr source, target;
  std::vector<Polynomial> images;

  static RingMap make(RingPtr source, RingPtr target,
                      std::vector<Polynomial> images);
  static RingMap identity(const RingPtr& ring);
  static RingMap of(const Automorphism& aut);

  Polynomial apply(const Polynomial& f) const;
  Ideal apply(const Ideal& ideal) const;
};

struct InducedMorphism {
  DatumPtr source, target;
  RingMap phi;
  std::vector<Rat> gamma;  // t_i |-> gamma_i t_i'
  ValidationReport checks; // includes generator-pair multiplicativity

  GradedElement apply(const GradedElement& e) const;
};

// Verifies phi(H_i) <= H_i', phi(J_i) <= J_i', phi sigma_i = sigma_i' phi;
// throws with the failing hypothesis and witness generator otherwise.
InducedMorphism induced_morphism(const DatumPtr& source, const DatumPtr& target,
                                 RingMap phi, std::vector<Rat> gamma);

struct FixedRingResult {
  DatumPtr datum;     // over the invariant ring
  RingMap embedding;  // new variables -> monomials of the original ring
  std::vector<long> orders;  // m_1..m_n (orders of the gamma scalars)
  long phi_order = 1;
  ValidationReport checks;
};

// Invariant datum under the degree-preserving symmetry r t^a |-> gamma^a
// phi(r) t^a. phi must be a finite-order diagonal scaling (entries +-1, at
// most one negated variable) and each gamma_i in {1, -1}; the realizable
// finite orders over the rationals. Orders must be pairwise coprime.
FixedRingResult fixed_ring(const DatumPtr& datum, const Automorphism& phi,
                           const std::vector<Rat>& gamma);

struct TwistSpec {
  // d[i][k]: exchange scalar between B-axis i and D-axis k; empty = all ones.
  std::vector<std::vector<Rat>> d;
  // Optional lifts on the combined ring (B-variables first). Empty = trivial.
  std::vector<Automorphism> sigma_lifts;  // one per B-axis
  std::vector<Automorphism> phi_lifts;    // one per D-axis
};

struct TensorResult {
  DatumPtr tensor;  // rank m+n datum on the combined ring
  RingMap embed_left, embed_right;
  std::vector<std::pair<std::string, std::string>> renames;
  ValidationReport checks;
};

// Combined datum with the block-antisymmetric scalar matrix
// [[p, d], [1/d^T, q]]; graded components verified to factor on the window.
TensorResult twisted_tensor(const DatumPtr& left, const DatumPtr& right,
                            const TwistSpec& twist, long window = 2);

// Twisting-map data for the pair: tau(a v^alpha (x) b u^beta) =
// d_{beta,alpha} phi^alpha(b) u^beta (x) sigma^{-beta}(a) v^alpha.
struct TwistMaps {
  DatumPtr left, right;
  std::vector<std::vector<Rat>> d;
  std::vector<Automorphism> sigma_on_right;  // restriction of sigma lifts to S
  std::vector<Automorphism> phi_on_left;     // restriction of phi lifts to R
  Rat d_scalar(const Deg& beta_left, const Deg& alpha_right) const;
  // tau on a homogeneous pair (right element, left element): returns the
  // exchanged pair (left element, right element) with the scalar folded in.
  std::pair<GradedElement, GradedElement> tau(const GradedElement& right_elt,
                                              const GradedElement& left_elt) const;
};

TwistMaps twist_maps(const DatumPtr& left, const DatumPtr& right,
                     const TwistSpec& twist);

struct GkReport {
  long value = 0;
  std::vector<ValidationIssue> checklist;
};

// GKdim B = GKdim R + n; GKdim R is the variable count, local algebraicity is
// certified by the automorphism class, and the normal-element hypothesis
// holds because R is a commutative domain with nonzero H_i, J_i.
GkReport gk_dimension(const DatumPtr& datum);

}  // namespace br
