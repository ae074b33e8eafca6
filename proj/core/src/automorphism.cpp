#include "br/automorphism.hpp"

#include <algorithm>
#include <numeric>

namespace br {

Automorphism Automorphism::make(RingPtr ring, std::vector<std::size_t> perm,
                                std::vector<Rat> scale, std::vector<Rat> shift) {
  Automorphism a(std::move(ring));
  std::size_t n = a.ring_->arity();
  if (perm.size() != n || scale.size() != n || shift.size() != n)
    throw Error("automorphism: arity mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || seen[perm[j]])
      throw Error("automorphism: invalid permutation");
    seen[perm[j]] = true;
    if (scale[j] == 0) throw Error("automorphism: zero scale");
    if (a.ring_->invertible[j] != a.ring_->invertible[perm[j]])
      throw Error("automorphism: permutation must preserve invertibility");
    if (shift[j] != 0 && a.ring_->invertible[j])
      throw Error("automorphism: shift on invertible variable '" +
                  a.ring_->vars[j] + "'");
  }
  a.perm_ = std::move(perm);
  a.scale_ = std::move(scale);
  a.shift_ = std::move(shift);
  return a;
}

Automorphism Automorphism::identity(RingPtr ring) {
  std::size_t n = ring->arity();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return make(std::move(ring), std::move(perm), std::vector<Rat>(n, Rat(1)),
              std::vector<Rat>(n, Rat(0)));
}

Automorphism Automorphism::diagonal(RingPtr ring, std::vector<Rat> scale,
                                    std::vector<Rat> shift) {
  std::size_t n = ring->arity();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return make(std::move(ring), std::move(perm), std::move(scale), std::move(shift));
}

bool Automorphism::is_identity() const {
  for (std::size_t j = 0; j < ring_->arity(); ++j)
    if (perm_[j] != j || scale_[j] != 1 || shift_[j] != 0) return false;
  return true;
}

bool Automorphism::is_diagonal() const {
  for (std::size_t j = 0; j < ring_->arity(); ++j)
    if (perm_[j] != j) return false;
  return true;
}

bool Automorphism::is_pure_scaling() const {
  if (!is_diagonal()) return false;
  for (const Rat& d : shift_)
    if (d != 0) return false;
  return true;
}

Polynomial Automorphism::image(std::size_t j) const {
  Polynomial p = Polynomial::variable(ring_, perm_[j]) * scale_[j];
  if (shift_[j] != 0) p += Polynomial::constant(ring_, shift_[j]);
  return p;
}

Polynomial Automorphism::apply(const Polynomial& f) const {
  check_same_ring(ring_, f.ring(), "automorphism apply");
  Polynomial acc(ring_);
  for (auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(ring_, c);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      if (shift_[j] == 0) {
        // Pure scaled monomial image; supports negative exponents.
        Mono mm(m.size(), 0);
        mm[perm_[j]] = m[j];
        t *= Polynomial::term(ring_, mm, rat_pow(scale_[j], m[j]));
      } else {
        t *= image(j).pow(m[j]);
      }
    }
    acc += t;
  }
  return acc;
}

Ideal Automorphism::apply(const Ideal& ideal) const {
  check_same_ring(ring_, ideal.ring(), "automorphism apply");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply(g));
  return Ideal::of(ring_, std::move(gens));
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  check_same_ring(ring_, other.ring_, "automorphism compose");
  std::size_t n = ring_->arity();
  Automorphism r(ring_);
  r.perm_.resize(n);
  r.scale_.resize(n);
  r.shift_.resize(n);
  // (this o other)(x_j): apply this to other's image c_j x_{p(j)} + d_j.
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t mid = other.perm_[j];
    r.perm_[j] = perm_[mid];
    r.scale_[j] = other.scale_[j] * scale_[mid];
    r.shift_[j] = other.scale_[j] * shift_[mid] + other.shift_[j];
  }
  return r;
}

Automorphism Automorphism::inverse() const {
  std::size_t n = ring_->arity();
  Automorphism r(ring_);
  r.perm_.resize(n);
  r.scale_.resize(n);
  r.shift_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t i = perm_[j];
    r.perm_[i] = j;
    r.scale_[i] = Rat(1) / scale_[j];
    r.shift_[i] = -shift_[j] / scale_[j];
  }
  return r;
}

Automorphism Automorphism::power(long k) const {
  Automorphism base = k >= 0 ? *this : inverse();
  Automorphism acc = identity(ring_);
  unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
  while (e) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

bool Automorphism::commutes_with(const Automorphism& o) const {
  return compose(o) == o.compose(*this);
}

bool Automorphism::operator==(const Automorphism& o) const {
  check_same_ring(ring_, o.ring_, "automorphism ==");
  return perm_ == o.perm_ && scale_ == o.scale_ && shift_ == o.shift_;
}

Point Automorphism::act_point(const Point& pt) const {
  if (pt.size() != ring_->arity()) throw Error("act_point: wrong arity");
  // apply maps x_j - pt_j to c_j x_{perm(j)} + d_j - pt_j, which vanishes at
  // x_{perm(j)} = (pt_j - d_j) / c_j.
  Point out(pt.size());
  for (std::size_t j = 0; j < pt.size(); ++j)
    out[perm_[j]] = (pt[j] - shift_[j]) / scale_[j];
  for (std::size_t j = 0; j < out.size(); ++j)
    if (ring_->invertible[j] && out[j] == 0)
      throw Error("act_point: image has zero coordinate on invertible variable");
  return out;
}

std::string Automorphism::local_algebraicity_reason() const {
  return "affine-monomial class: the orbit of each variable lies in "
         "span{1, x_k : k in the permutation cycle}";
}

}  // namespace br
