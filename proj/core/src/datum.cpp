#include "br/datum.hpp"

#include <algorithm>
#include <sstream>

namespace br {

std::string deg_str(const Deg& d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ",";
    os << d[i];
  }
  os << "]";
  return os.str();
}

Deg deg_add(const Deg& a, const Deg& b) {
  Deg r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Deg deg_neg(const Deg& a) {
  Deg r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool ValidationReport::ok() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.pass ? "pass" : "FAIL") << "  " << e.axiom;
    if (!e.witness.empty()) os << "  (" << e.witness << ")";
    os << "\n";
  }
  return os.str();
}

DatumPtr BellRogalskiDatum::make(RingPtr ring, std::vector<Automorphism> sigma,
                                 std::vector<std::vector<Rat>> p,
                                 std::vector<Ideal> h, std::vector<Ideal> j,
                                 bool verify_membership) {
  auto d = std::shared_ptr<BellRogalskiDatum>(new BellRogalskiDatum());
  std::size_t n = sigma.size();
  if (n == 0) throw Error("datum: rank must be at least 1");
  if (p.size() != n || h.size() != n || j.size() != n)
    throw Error("datum: sigma, p, H, J must all have length n");
  for (auto& row : p) {
    if (row.size() != n) throw Error("datum: p must be n x n");
    for (auto& v : row)
      if (v == 0) throw Error("datum: p entries must be nonzero");
  }
  for (const auto& s : sigma) check_same_ring(ring, s.ring(), "datum sigma");
  for (const auto& ideal : h) check_same_ring(ring, ideal.ring(), "datum H");
  for (const auto& ideal : j) check_same_ring(ring, ideal.ring(), "datum J");
  d->ring_ = std::move(ring);
  d->sigma_ = std::move(sigma);
  d->p_ = std::move(p);
  d->h_ = std::move(h);
  d->j_ = std::move(j);
  d->verify_membership_ = verify_membership;
  return d;
}

ValidationReport BellRogalskiDatum::validate() const {
  ValidationReport rep;
  std::size_t n = rank();

  {
    ValidationIssue issue{"p multiplicatively antisymmetric", true, ""};
    for (std::size_t i = 0; i < n && issue.pass; ++i) {
      if (p_[i][i] != 1) {
        issue.pass = false;
        issue.witness = "p[" + std::to_string(i + 1) + "][" +
                        std::to_string(i + 1) + "] = " + rat_str(p_[i][i]) +
                        " != 1";
        break;
      }
      for (std::size_t k = 0; k < n; ++k)
        if (p_[i][k] * p_[k][i] != 1) {
          issue.pass = false;
          issue.witness = "p[" + std::to_string(i + 1) + "][" +
                          std::to_string(k + 1) + "] = " + rat_str(p_[i][k]) +
                          " but p[" + std::to_string(k + 1) + "][" +
                          std::to_string(i + 1) + "] = " + rat_str(p_[k][i]);
          break;
        }
    }
    rep.entries.push_back(issue);
  }

  {
    ValidationIssue issue{"sigma tuple commutes", true, ""};
    for (std::size_t i = 0; i < n && issue.pass; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        if (!sigma_[i].commutes_with(sigma_[k])) {
          issue.pass = false;
          issue.witness = "sigma " + std::to_string(i + 1) + " and sigma " +
                          std::to_string(k + 1) + " do not commute";
          break;
        }
    rep.entries.push_back(issue);
  }

  {
    ValidationIssue issue{"cross-axis ideal invariance", true, ""};
    for (std::size_t i = 0; i < n && issue.pass; ++i)
      for (std::size_t k = 0; k < n && issue.pass; ++k) {
        if (i == k) continue;
        if (!sigma_[i].apply(h_[k]).equals(h_[k])) {
          issue.pass = false;
          issue.witness = "sigma " + std::to_string(i + 1) + " moves H " +
                          std::to_string(k + 1);
        } else if (!sigma_[i].apply(j_[k]).equals(j_[k])) {
          issue.pass = false;
          issue.witness = "sigma " + std::to_string(i + 1) + " moves J " +
                          std::to_string(k + 1);
        }
      }
    rep.entries.push_back(issue);
  }

  // R is a domain, so nonzero H_i, J_i force all I_i^(k) nonzero.
  {
    ValidationIssue issue{"H and J nonzero", true, ""};
    for (std::size_t i = 0; i < n; ++i) {
      if (h_[i].is_zero()) {
        issue.pass = false;
        issue.witness = "H " + std::to_string(i + 1) + " is zero";
        break;
      }
      if (j_[i].is_zero()) {
        issue.pass = false;
        issue.witness = "J " + std::to_string(i + 1) + " is zero";
        break;
      }
    }
    rep.entries.push_back(issue);
  }

  rep.entries.push_back(ValidationIssue{"ideal commutation relations", true,
                                        "automatic: commutative base ring"});
  return rep;
}

Ideal BellRogalskiDatum::axis_ideal(std::size_t i, long k) const {
  if (i >= rank()) throw Error("axis_ideal: axis out of range");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->axis.find({i, k});
    if (it != cache_->axis.end()) return it->second;
  }
  Ideal result = Ideal::unit(ring_);
  if (k > 0) {
    for (long s = 0; s < k; ++s)
      result = result * sigma_[i].power(s).apply(j_[i]);
  } else if (k < 0) {
    for (long s = -1; s >= k; --s)
      result = result * sigma_[i].power(s).apply(h_[i]);
  }
  // Canonicalize the generator list to the reduced basis.
  result = Ideal::of(ring_, result.groebner());
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->axis.try_emplace({i, k}, result).first->second;
}

Ideal BellRogalskiDatum::canonical_ideal(const Deg& alpha) const {
  if (alpha.size() != rank()) throw Error("canonical_ideal: wrong degree arity");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->full.find(alpha);
    if (it != cache_->full.end()) return it->second;
  }
  Ideal result = axis_ideal(0, alpha[0]);
  for (std::size_t i = 1; i < rank(); ++i)
    result = result * axis_ideal(i, alpha[i]);
  result = Ideal::of(ring_, result.groebner());
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->full.try_emplace(alpha, result).first->second;
}

Automorphism BellRogalskiDatum::sigma_power(const Deg& alpha) const {
  Automorphism acc = Automorphism::identity(ring_);
  for (std::size_t i = 0; i < rank(); ++i)
    if (alpha[i] != 0) acc = acc.compose(sigma_[i].power(alpha[i]));
  return acc;
}

Rat BellRogalskiDatum::reorder_scalar(const Deg& alpha, const Deg& beta) const {
  Rat acc(1);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (alpha[j] != 0 && beta[i] != 0)
        acc *= rat_pow(p_[i][j], alpha[j] * beta[i]);
  return acc;
}

Rat BellRogalskiDatum::p_scalar(const Deg& beta, const Deg& alpha) const {
  Rat acc(1);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t k = 0; k < rank(); ++k)
      if (beta[i] != 0 && alpha[k] != 0)
        acc *= rat_pow(p_[i][k], beta[i] * alpha[k]);
  return acc;
}

Point BellRogalskiDatum::orbit_point(const Point& base, const Deg& alpha) const {
  return sigma_power(alpha).act_point(base);
}

GradedElement::GradedElement(DatumPtr datum) : datum_(std::move(datum)) {
  if (!datum_) throw Error("graded element: null datum");
}

GradedElement GradedElement::term(DatumPtr datum, Deg deg, Polynomial coeff,
                                  bool check) {
  GradedElement e(std::move(datum));
  if (deg.size() != e.datum_->rank())
    throw Error("graded element: degree arity mismatch");
  if (!coeff.is_zero()) {
    if (check && e.datum_->verify_membership() &&
        !e.datum_->canonical_ideal(deg).contains(coeff))
      throw MembershipError("graded element: coefficient " + coeff.to_string() +
                            " not in I^" + deg_str(deg));
    e.parts_.emplace(std::move(deg), std::move(coeff));
  }
  return e;
}

GradedElement GradedElement::one(DatumPtr datum) {
  Deg zero(datum->rank(), 0);
  auto unit = Polynomial::one(datum->ring());
  return term(std::move(datum), std::move(zero), std::move(unit), false);
}

std::vector<Deg> GradedElement::support() const {
  std::vector<Deg> s;
  for (auto& [d, f] : parts_) s.push_back(d);
  return s;
}

Polynomial GradedElement::part(const Deg& deg) const {
  auto it = parts_.find(deg);
  return it == parts_.end() ? Polynomial::zero(datum_->ring()) : it->second;
}

void GradedElement::add_part(const Deg& deg, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  auto it = parts_.find(deg);
  if (it == parts_.end()) {
    parts_.emplace(deg, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  if (datum_ != o.datum_) throw Error("graded element: datum mismatch");
  for (auto& [d, f] : o.parts_) add_part(d, f);
  return *this;
}

GradedElement GradedElement::operator-() const {
  GradedElement r(*this);
  for (auto& [d, f] : r.parts_) f = -f;
  return r;
}

GradedElement& GradedElement::operator*=(const Rat& c) {
  if (c == 0) {
    parts_.clear();
    return *this;
  }
  for (auto& [d, f] : parts_) f *= c;
  return *this;
}

std::pair<Deg, Polynomial> skew_product(const BellRogalskiDatum& datum,
                                        const Deg& da, const Polynomial& fa,
                                        const Deg& db, const Polynomial& fb) {
  Polynomial coeff = fa * datum.sigma_power(da).apply(fb);
  coeff *= datum.reorder_scalar(da, db);
  return {deg_add(da, db), std::move(coeff)};
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  if (a.datum_ != b.datum_) throw Error("graded element: datum mismatch");
  GradedElement r(a.datum_);
  for (auto& [da, fa] : a.parts_)
    for (auto& [db, fb] : b.parts_) {
      auto [deg, coeff] = skew_product(*a.datum_, da, fa, db, fb);
      r.add_part(deg, coeff);
    }
  if (a.datum_->verify_membership()) {
    for (auto& [d, f] : r.parts_)
      if (!a.datum_->canonical_ideal(d).contains(f))
        throw MembershipError(
            "graded product left the algebra: coefficient " + f.to_string() +
            " at degree " + deg_str(d) + " is not in I^" + deg_str(d));
  }
  return r;
}

bool GradedElement::operator==(const GradedElement& o) const {
  if (datum_ != o.datum_) throw Error("graded element: datum mismatch");
  return parts_ == o.parts_;
}

std::string GradedElement::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, f] : parts_) {
    if (!first) os << " ; ";
    os << deg_str(d) << ": " << f.to_string();
    first = false;
  }
  return os.str();
}

std::vector<GradedElement> datum_generators(const DatumPtr& datum) {
  std::vector<GradedElement> gens;
  const RingPtr& ring = datum->ring();
  Deg zero(datum->rank(), 0);
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    gens.push_back(
        GradedElement::term(datum, zero, Polynomial::variable(ring, v), false));
    if (ring->invertible[v])
      gens.push_back(GradedElement::term(datum, zero,
                                         Polynomial::variable(ring, v, -1),
                                         false));
  }
  for (std::size_t i = 0; i < datum->rank(); ++i) {
    Deg up = zero, down = zero;
    up[i] = 1;
    down[i] = -1;
    for (const auto& g : datum->j()[i].generators())
      gens.push_back(GradedElement::term(datum, up, g));
    Automorphism inv = datum->sigma(i).inverse();
    for (const auto& g : datum->h()[i].generators())
      gens.push_back(GradedElement::term(datum, down, inv.apply(g)));
  }
  return gens;
}

IterationLayer iterate_decompose(const DatumPtr& datum, std::size_t axis,
                                 long window) {
  std::size_t n = datum->rank();
  if (n < 2) throw Error("iterate_decompose: rank must be at least 2");
  if (axis >= n) throw Error("iterate_decompose: axis out of range");

  IterationLayer layer;
  layer.axis = axis;

  std::vector<Automorphism> sigma;
  std::vector<std::vector<Rat>> p;
  std::vector<Ideal> h, j;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (i != axis) kept.push_back(i);
  for (std::size_t a : kept) {
    sigma.push_back(datum->sigma(a));
    h.push_back(datum->h()[a]);
    j.push_back(datum->j()[a]);
    std::vector<Rat> row;
    for (std::size_t b : kept) row.push_back(datum->p(a, b));
    p.push_back(std::move(row));
  }
  layer.inner = BellRogalskiDatum::make(datum->ring(), std::move(sigma),
                                        std::move(p), std::move(h), std::move(j),
                                        datum->verify_membership());
  // sigma_axis acts on the inner t_k by the scalar p_{k,axis}
  // (conjugation: t_axis t_k t_axis^{-1} = p_{k,axis} t_k).
  for (std::size_t a : kept) layer.t_twists.push_back(datum->p(a, axis));
  layer.outer_h = datum->h()[axis];
  layer.outer_j = datum->j()[axis];

  // Degreewise check: the rank-1 extension over the inner datum has
  // degree-(alpha', k) component I_axis^(k) * I_inner^(alpha'), which must
  // equal the original I^(alpha).
  bool all_ok = true;
  for (long k = -window; k <= window && all_ok; ++k) {
    Deg cur(n - 1, -window);
    while (true) {
      Deg full(n, 0);
      for (std::size_t t = 0; t < kept.size(); ++t) full[kept[t]] = cur[t];
      full[axis] = k;
      Ideal recomposed =
          datum->axis_ideal(axis, k) * layer.inner->canonical_ideal(cur);
      if (!recomposed.equals(datum->canonical_ideal(full))) {
        layer.window_check.entries.push_back(ValidationIssue{
            "recomposition at degree " + deg_str(full), false,
            "component mismatch"});
        all_ok = false;
        break;
      }
      std::size_t pos = 0;
      while (pos < cur.size() && cur[pos] == window) cur[pos++] = -window;
      if (pos == cur.size()) break;
      ++cur[pos];
    }
  }
  if (all_ok)
    layer.window_check.entries.push_back(ValidationIssue{
        "degreewise recomposition on window [-" + std::to_string(window) + "," +
            std::to_string(window) + "]",
        true, ""});
  return layer;
}

}  // namespace br
