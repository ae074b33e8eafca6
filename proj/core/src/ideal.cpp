#include "br/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace br {

namespace {

Polynomial mono_times(const Polynomial& g, const Mono& m, const Rat& c) {
  Polynomial r(g.ring());
  for (auto& [gm, gc] : g.terms()) r.add_term(mono_add(gm, m), gc * c);
  return r;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Mono l = mono_lcm(f.leading_mono(), g.leading_mono());
  Polynomial a = mono_times(f, mono_sub(l, f.leading_mono()),
                            Rat(1) / f.leading_coeff());
  Polynomial b = mono_times(g, mono_sub(l, g.leading_mono()),
                            Rat(1) / g.leading_coeff());
  return a - b;
}

struct PairKey {
  long deg;
  Mono lcm;
  std::size_t i, j;
  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (lcm != o.lcm) return lcm < o.lcm;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

std::vector<Polynomial> buchberger(const RingPtr& ring,
                                   std::vector<Polynomial> basis) {
  std::set<PairKey> pending;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Mono l = mono_lcm(basis[i].leading_mono(), basis[j].leading_mono());
      pending.insert(PairKey{mono_total_degree(l), l, i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pending.empty()) {
    PairKey key = *pending.begin();
    pending.erase(pending.begin());
    handled.insert({key.i, key.j});
    const Polynomial& f = basis[key.i];
    const Polynomial& g = basis[key.j];
    // Product criterion: coprime leading monomials reduce to zero.
    if (key.lcm == mono_add(f.leading_mono(), g.leading_mono())) continue;
    // Chain criterion.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == key.i || k == key.j) continue;
      if (!mono_divides(basis[k].leading_mono(), key.lcm)) continue;
      auto pi = std::minmax(key.i, k);
      auto pj = std::minmax(key.j, k);
      if (handled.count({pi.first, pi.second}) && handled.count({pj.first, pj.second}))
        skip = true;
    }
    if (skip) continue;
    Polynomial r = normal_form(spoly(f, g), basis);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs(basis.size() - 1);
    }
  }
  return basis;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  // Minimalize: drop elements whose leading monomial is divisible by another's.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        if (mono_divides(basis[j].leading_mono(), basis[i].leading_mono())) {
          basis.erase(basis.begin() + i);
          changed = true;
          break;
        }
      }
  }
  // Tail-reduce each element against the rest.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Polynomial> rest;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) rest.push_back(basis[j]);
    basis[i] = normal_form(basis[i], rest).monic();
  }
  std::sort(basis.begin(), basis.end(), poly_canonical_less);
  return basis;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial rem(f.ring());
  Polynomial p = f;
  while (!p.is_zero()) {
    const Mono& m = p.leading_mono();
    Rat c = p.leading_coeff();
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.leading_mono(), m)) {
        p -= mono_times(g, mono_sub(m, g.leading_mono()), c / g.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(m, c);
      p -= Polynomial::term(p.ring(), m, c);
    }
  }
  return rem;
}

std::vector<Polynomial> reduced_groebner(const RingPtr& ring,
                                         std::vector<Polynomial> gens) {
  std::vector<Polynomial> nonzero;
  for (auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g.monic());
  std::sort(nonzero.begin(), nonzero.end(), poly_canonical_less);
  nonzero.erase(std::unique(nonzero.begin(), nonzero.end(),
                            [](const Polynomial& a, const Polynomial& b) {
                              return a == b;
                            }),
                nonzero.end());
  if (nonzero.empty()) return {};
  return interreduce(buchberger(ring, std::move(nonzero)));
}

namespace {

// Saturate at the product of the invertible variables using one extra
// elimination variable w and the relation 1 - w * prod(invertibles).
std::vector<Polynomial> saturated_basis(const RingPtr& ring,
                                        const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> shifted;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    shifted.push_back(g.laurent_normalize());
  }
  if (shifted.empty()) return {};
  if (!ring->has_invertible()) return reduced_groebner(ring, std::move(shifted));

  std::vector<std::string> ext_vars{"_sat"};
  ext_vars.insert(ext_vars.end(), ring->vars.begin(), ring->vars.end());
  RingPtr ext = RingSpec::make(ext_vars,
                               std::vector<bool>(ext_vars.size(), false),
                               MonoOrder::ElimFirst);

  std::vector<Polynomial> ext_gens;
  for (const auto& g : shifted) {
    Polynomial h(ext);
    for (auto& [m, c] : g.terms()) {
      Mono em(m.size() + 1, 0);
      std::copy(m.begin(), m.end(), em.begin() + 1);
      h.add_term(em, c);
    }
    ext_gens.push_back(std::move(h));
  }
  Mono wm(ext->arity(), 0);
  wm[0] = 1;
  for (std::size_t j = 0; j < ring->arity(); ++j)
    if (ring->invertible[j]) wm[j + 1] = 1;
  Polynomial rel = Polynomial::one(ext) - Polynomial::term(ext, wm, Rat(1));
  ext_gens.push_back(rel);

  std::vector<Polynomial> contracted;
  for (const auto& g : reduced_groebner(ext, std::move(ext_gens))) {
    bool has_w = false;
    for (auto& [m, c] : g.terms())
      if (m[0] != 0) {
        has_w = true;
        break;
      }
    if (has_w) continue;
    Polynomial h(ring);
    for (auto& [m, c] : g.terms())
      h.add_term(Mono(m.begin() + 1, m.end()), c);
    contracted.push_back(std::move(h));
  }
  // Re-reduce under the ring's own order (the elimination order restricted to
  // the remaining variables need not match it).
  return reduced_groebner(ring, std::move(contracted));
}

}  // namespace

Ideal Ideal::of(RingPtr ring, std::vector<Polynomial> gens) {
  Ideal ideal(std::move(ring));
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    check_same_ring(ideal.ring_, g.ring(), "ideal");
    ideal.gens_.push_back(std::move(g));
  }
  std::sort(ideal.gens_.begin(), ideal.gens_.end(), poly_canonical_less);
  ideal.gens_.erase(std::unique(ideal.gens_.begin(), ideal.gens_.end(),
                                [](const Polynomial& a, const Polynomial& b) {
                                  return a == b;
                                }),
                    ideal.gens_.end());
  ideal.cache_ = std::make_shared<Cache>();
  return ideal;
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::one(ring);
  return of(std::move(ring), {one});
}

Ideal Ideal::principal(const Polynomial& g) { return of(g.ring(), {g}); }

Ideal Ideal::of_point(const RingPtr& ring, const Point& pt) {
  if (pt.size() != ring->arity()) throw Error("of_point: wrong arity");
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < ring->arity(); ++j) {
    if (ring->invertible[j] && pt[j] == 0)
      throw Error("of_point: zero coordinate on invertible variable");
    gens.push_back(Polynomial::variable(ring, j) -
                   Polynomial::constant(ring, pt[j]));
  }
  return of(ring, std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->basis) cache_->basis = saturated_basis(ring_, gens_);
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& f) const {
  check_same_ring(ring_, f.ring(), "contains");
  if (f.is_zero()) return true;
  return normal_form(f.laurent_normalize(), groebner()).is_zero();
}

bool Ideal::is_unit() const {
  const auto& b = groebner();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool Ideal::equals(const Ideal& o) const {
  check_same_ring(ring_, o.ring_, "ideal equality");
  const auto& a = groebner();
  const auto& b = o.groebner();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool Ideal::vanishes_at(const Point& pt) const {
  for (const auto& g : gens_)
    if (g.eval(pt) != 0) return false;
  return true;
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring_, b.ring_, "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens_)
    for (const auto& g : b.gens_) gens.push_back(f * g);
  return Ideal::of(a.ring_, std::move(gens));
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring_, b.ring_, "ideal sum");
  std::vector<Polynomial> gens = a.gens_;
  gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
  return Ideal::of(a.ring_, std::move(gens));
}

namespace {

// Substitute the already-fixed tail coordinates into g, leaving a univariate
// polynomial in variable `var` (or a constant).
std::vector<Rat> to_univariate(const Polynomial& g, std::size_t var,
                               const std::vector<std::optional<Rat>>& fixed,
                               bool& ok) {
  std::vector<Rat> coeffs;
  ok = true;
  for (auto& [m, c] : g.terms()) {
    Rat v = c;
    std::size_t deg = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      if (j == var) {
        deg = static_cast<std::size_t>(m[j]);
      } else if (fixed[j]) {
        v *= rat_pow(*fixed[j], m[j]);
      } else {
        ok = false;  // depends on a still-free variable
        return {};
      }
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
    coeffs[deg] += v;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

void solve_rec(const RingPtr& ring, const std::vector<Polynomial>& basis,
               std::size_t var_plus_one, std::vector<std::optional<Rat>>& fixed,
               VarietyPoints& out) {
  if (var_plus_one == 0) {
    Point pt(ring->arity());
    for (std::size_t j = 0; j < ring->arity(); ++j) pt[j] = *fixed[j];
    for (std::size_t j = 0; j < ring->arity(); ++j)
      if (ring->invertible[j] && pt[j] == 0) return;
    for (const auto& g : basis)
      if (g.eval(pt) != 0) return;  // spurious branch
    out.points.push_back(std::move(pt));
    return;
  }
  std::size_t var = var_plus_one - 1;
  // Gather univariate constraints on this variable from the lex basis.
  std::vector<std::vector<Rat>> constraints;
  for (const auto& g : basis) {
    bool ok = false;
    auto uni = to_univariate(g, var, fixed, ok);
    if (!ok) continue;
    if (uni.empty()) continue;  // vanishes identically on this branch
    if (uni.size() == 1) return;  // nonzero constant: branch dies
    constraints.push_back(std::move(uni));
  }
  if (constraints.empty()) {
    // Positive-dimensional fiber; should not happen for zero-dimensional input.
    out.all_rational = false;
    return;
  }
  // Reduce to a single univariate polynomial via gcd.
  auto poly_gcd = [](std::vector<Rat> a, std::vector<Rat> b) {
    auto deg = [](const std::vector<Rat>& p) { return p.size(); };
    while (!b.empty()) {
      // a mod b
      while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
      }
      std::swap(a, b);
      (void)deg;
    }
    return a;
  };
  std::vector<Rat> g = constraints[0];
  for (std::size_t i = 1; i < constraints.size() && g.size() > 1; ++i)
    g = poly_gcd(g, constraints[i]);
  if (g.empty()) {
    out.all_rational = false;
    return;
  }
  if (g.size() == 1) return;  // inconsistent branch
  RationalRoots roots = rational_roots(g);
  if (!roots.fully_split) out.all_rational = false;
  for (auto& [root, mult] : roots.roots) {
    fixed[var] = root;
    solve_rec(ring, basis, var, fixed, out);
    fixed[var] = std::nullopt;
  }
}

}  // namespace

VarietyPoints solve_variety(const Ideal& ideal) {
  VarietyPoints out;
  const RingPtr& ring = ideal.ring();
  if (ideal.is_unit()) {
    out.zero_dimensional = true;
    out.all_rational = true;
    out.unit_ideal = true;
    return out;
  }
  if (ideal.is_zero()) return out;

  // Lex basis of the saturated contraction for triangular back-substitution.
  RingPtr lex_ring = RingSpec::make(ring->vars, ring->invertible, MonoOrder::Lex);
  std::vector<Polynomial> lex_gens;
  for (const auto& g : ideal.groebner()) {
    Polynomial h(lex_ring);
    for (auto& [m, c] : g.terms()) h.add_term(m, c);
    lex_gens.push_back(std::move(h));
  }
  Ideal lex_ideal = Ideal::of(lex_ring, std::move(lex_gens));
  const auto& basis = lex_ideal.groebner();

  // Zero-dimensionality: every variable's pure power appears as a leading
  // monomial.
  for (std::size_t j = 0; j < ring->arity(); ++j) {
    bool found = false;
    for (const auto& g : basis) {
      const Mono& m = g.leading_mono();
      bool pure = m[j] > 0;
      for (std::size_t k = 0; k < m.size() && pure; ++k)
        if (k != j && m[k] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return out;  // positive-dimensional
  }
  out.zero_dimensional = true;
  out.all_rational = true;
  std::vector<std::optional<Rat>> fixed(ring->arity());
  solve_rec(lex_ring, basis, ring->arity(), fixed, out);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace br
