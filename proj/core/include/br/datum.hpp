// Bell-Rogalski data, canonical degree ideals, and graded elements of the
// algebra B = sum_alpha I^(alpha) t^alpha inside the iterated skew Laurent
// extension.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "br/automorphism.hpp"
#include "br/ideal.hpp"

namespace br {

// A multidegree in Z^n.
using Deg = std::vector<long>;

std::string deg_str(const Deg& d);
Deg deg_add(const Deg& a, const Deg& b);
Deg deg_neg(const Deg& a);

struct ValidationIssue {
  std::string axiom;
  bool pass = true;
  std::string witness;  // nonempty on failure (or informational notes)
};

struct ValidationReport {
  std::vector<ValidationIssue> entries;
  bool ok() const;
  std::string summary() const;
};

class BellRogalskiDatum;
using DatumPtr = std::shared_ptr<const BellRogalskiDatum>;

class BellRogalskiDatum {
public:
  // Construction is permissive: axiom violations are reported by validate(),
  // not thrown, so broken inputs can be diagnosed.
  static DatumPtr make(RingPtr ring, std::vector<Automorphism> sigma,
                       std::vector<std::vector<Rat>> p, std::vector<Ideal> h,
                       std::vector<Ideal> j, bool verify_membership = true);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return sigma_.size(); }
  const std::vector<Automorphism>& sigma() const { return sigma_; }
  const Automorphism& sigma(std::size_t i) const { return sigma_[i]; }
  const std::vector<std::vector<Rat>>& p() const { return p_; }
  const Rat& p(std::size_t i, std::size_t k) const { return p_[i][k]; }
  const std::vector<Ideal>& h() const { return h_; }
  const std::vector<Ideal>& j() const { return j_; }
  bool verify_membership() const { return verify_membership_; }

  ValidationReport validate() const;

  // I_i^(k): J_i sigma_i(J_i) ... for k > 0, R for k = 0, and
  // sigma_i^{-1}(H_i) ... sigma_i^{k}(H_i) for k < 0. Memoized.
  Ideal axis_ideal(std::size_t i, long k) const;
  // I^(alpha) as the product over axes; memoized per degree. The stored
  // generator list of the result is its reduced Groebner basis, which keeps
  // generator lists canonical and small across the classification sweeps.
  Ideal canonical_ideal(const Deg& alpha) const;

  // sigma^alpha = sigma_1^{a_1} ... sigma_n^{a_n}.
  Automorphism sigma_power(const Deg& alpha) const;

  // Scalar lambda(alpha, beta) with t^alpha t^beta = lambda * t^(alpha+beta)
  // in the normal order t_1^* ... t_n^*. Moving t_i^{b_i} left across
  // t_j^{a_j} (i < j) contributes p_ij^{a_j b_i}, so
  //   lambda(alpha, beta) = prod_{i<j} p_ij^{alpha_j beta_i}.
  Rat reorder_scalar(const Deg& alpha, const Deg& beta) const;

  // p_{beta,alpha} = prod_{i,k} p_ik^{beta_i alpha_k}; satisfies
  // t^alpha t^beta = p_{beta,alpha} t^beta t^alpha.
  Rat p_scalar(const Deg& beta, const Deg& alpha) const;

  // The subgroup generated by the sigmas, applied to points.
  Point orbit_point(const Point& base, const Deg& alpha) const;

private:
  BellRogalskiDatum() = default;

  RingPtr ring_;
  std::vector<Automorphism> sigma_;
  std::vector<std::vector<Rat>> p_;
  std::vector<Ideal> h_, j_;
  bool verify_membership_ = true;

  struct Cache {
    std::mutex mu;
    std::map<std::pair<std::size_t, long>, Ideal> axis;
    std::map<Deg, Ideal> full;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

class MembershipError : public Error {
public:
  MembershipError(const std::string& what) : Error(what) {}
};

// A finitely supported sum of homogeneous parts a_alpha t^alpha with
// a_alpha in I^(alpha).
class GradedElement {
public:
  explicit GradedElement(DatumPtr datum);

  // check=true enforces membership of the coefficient in I^(deg).
  static GradedElement term(DatumPtr datum, Deg deg, Polynomial coeff,
                            bool check = true);
  static GradedElement one(DatumPtr datum);

  const DatumPtr& datum() const { return datum_; }
  const std::map<Deg, Polynomial>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  std::vector<Deg> support() const;
  // Coefficient at a degree (zero polynomial when absent).
  Polynomial part(const Deg& deg) const;

  GradedElement& operator+=(const GradedElement& o);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) {
    return a += b;
  }
  GradedElement operator-() const;
  friend GradedElement operator-(GradedElement a, const GradedElement& b) {
    return a += -b;
  }
  GradedElement& operator*=(const Rat& c);
  friend GradedElement operator*(GradedElement a, const Rat& c) { return a *= c; }

  // Skew product: (a t^alpha)(b t^beta) = a sigma^alpha(b) lambda(alpha,beta)
  // t^(alpha+beta). Membership of result coefficients is re-verified when the
  // datum was built with verify_membership (a failure signals a kernel bug).
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b);

  bool operator==(const GradedElement& o) const;
  bool operator!=(const GradedElement& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  void add_part(const Deg& deg, const Polynomial& coeff);

  DatumPtr datum_;
  std::map<Deg, Polynomial> parts_;
};

// Ambient skew product of homogeneous pairs without membership constraints;
// used for elements of the skew Laurent extension that lie outside B (such as
// bare t^alpha factors in structure-constant computations).
std::pair<Deg, Polynomial> skew_product(const BellRogalskiDatum& datum,
                                        const Deg& da, const Polynomial& fa,
                                        const Deg& db, const Polynomial& fb);

// Algebra generators: ring variables in degree 0 (inverses included for
// invertible variables), J_i generators in degree e_i, and
// sigma_i^{-1}(H_i) generators in degree -e_i.
std::vector<GradedElement> datum_generators(const DatumPtr& datum);

struct IterationLayer {
  std::size_t axis = 0;          // axis peeled off
  DatumPtr inner;                // rank n-1 datum
  std::vector<Rat> t_twists;     // action of sigma_axis on the inner t_k
  std::optional<Ideal> outer_h;  // ideal of R generating H_axis S
  std::optional<Ideal> outer_j;  // ideal of R generating J_axis S
  ValidationReport window_check; // degreewise recomposition check
};

// Express the datum as a rank-1 extension over a rank n-1 datum and verify
// degreewise (|coords| <= window) that the recomposed components match.
IterationLayer iterate_decompose(const DatumPtr& datum, std::size_t axis,
                                 long window = 2);

}  // namespace br
