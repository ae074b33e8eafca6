#include "br/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace br {

namespace {

// Shift clearing negative exponents on invertible variables (all entries >= 0).
Mono laurent_shift(const Polynomial& f) {
  Mono shift(f.ring()->arity(), 0);
  for (std::size_t j = 0; j < shift.size(); ++j) {
    if (!f.ring()->invertible[j]) continue;
    int mn = 0;
    for (auto& [m, c] : f.terms()) mn = std::min(mn, m[j]);
    shift[j] = -mn;
  }
  return shift;
}

std::optional<Polynomial> polydiv_exact(const Polynomial& f, const Polynomial& g) {
  Polynomial q(f.ring());
  Polynomial r = f;
  while (!r.is_zero()) {
    if (!mono_divides(g.leading_mono(), r.leading_mono())) return std::nullopt;
    Mono m = mono_sub(r.leading_mono(), g.leading_mono());
    Rat c = r.leading_coeff() / g.leading_coeff();
    q.add_term(m, c);
    r -= Polynomial::term(r.ring(), m, c) * g;
  }
  return q;
}

}  // namespace

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("exact_divide: division by zero");
  if (f.is_zero()) return Polynomial::zero(f.ring());
  check_same_ring(f.ring(), g.ring(), "exact_divide");
  Mono sf = laurent_shift(f), sg = laurent_shift(g);
  auto q = polydiv_exact(f.laurent_normalize(), g.laurent_normalize());
  if (!q) return std::nullopt;
  // f = x^{-sf} f~, g = x^{-sg} g~, so f/g = (f~/g~) x^{sg-sf}.
  Mono adjust = mono_sub(sg, sf);
  if (std::all_of(adjust.begin(), adjust.end(), [](int e) { return e == 0; }))
    return q;
  return *q * Polynomial::term(f.ring(), adjust, Rat(1));
}

bool is_ring_unit(const Polynomial& f) {
  if (!f.is_term()) return false;
  const Mono& m = f.terms().begin()->first;
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] != 0 && !f.ring()->invertible[j]) return false;
  return true;
}

ValidationReport TgwaDatum::validate() const {
  ValidationReport rep;
  std::size_t n = rank();
  {
    ValidationIssue issue{"central elements nonzero", true, ""};
    for (std::size_t k = 0; k < n; ++k)
      if (a[k].is_zero()) {
        issue.pass = false;
        issue.witness = "a " + std::to_string(k + 1) + " is zero";
        break;
      }
    rep.entries.push_back(issue);
  }
  {
    ValidationIssue issue{"sigma_i(a_k) = gamma_ik a_k", true, ""};
    for (std::size_t i = 0; i < n && issue.pass; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == k) continue;
        if (gamma[i][k] == 0) {
          issue.pass = false;
          issue.witness = "gamma is zero";
          break;
        }
        if (sigma[i].apply(a[k]) != a[k] * gamma[i][k]) {
          issue.pass = false;
          issue.witness = "axis pair (" + std::to_string(i + 1) + "," +
                          std::to_string(k + 1) + ")";
          break;
        }
      }
    rep.entries.push_back(issue);
  }
  {
    ValidationIssue issue{"consistency mu_ik mu_ki = gamma_ik gamma_ki", true, ""};
    for (std::size_t i = 0; i < n && issue.pass; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        if (mu[i][k] * mu[k][i] != gamma[i][k] * gamma[k][i]) {
          issue.pass = false;
          issue.witness = "axis pair (" + std::to_string(i + 1) + "," +
                          std::to_string(k + 1) + ")";
          break;
        }
    rep.entries.push_back(issue);
  }
  return rep;
}

namespace {

Polynomial principal_generator(const Ideal& ideal, const std::string& what) {
  const auto& basis = ideal.groebner();
  if (basis.size() != 1)
    throw Error("to_tgwa: " + what + " is not principal (reduced basis has " +
                std::to_string(basis.size()) + " elements)");
  return basis[0];
}

Polynomial extract_unit(const Polynomial& numer, const Polynomial& denom,
                        const std::vector<Automorphism>& sigma,
                        const std::string& what) {
  auto q = exact_divide(numer, denom);
  if (!q)
    throw Error("to_tgwa: division not exact for " + what);
  if (!is_ring_unit(*q))
    throw Error("to_tgwa: quotient " + q->to_string() + " for " + what +
                " is not a unit of R");
  for (const auto& s : sigma)
    if (s.apply(*q) != *q)
      throw Error("to_tgwa: unit " + q->to_string() + " for " + what +
                  " is not sigma-invariant (scalar-units hypothesis fails)");
  return *q;
}

Rat constant_of(const Polynomial& f, const std::string& what) {
  if (!f.is_constant())
    throw Error("to_tgwa: " + what + " = " + f.to_string() +
                " is not a scalar");
  return f.is_zero() ? Rat(0) : f.terms().begin()->second;
}

}  // namespace

TgwaConversion to_tgwa(const DatumPtr& datum) {
  std::size_t n = datum->rank();
  const RingPtr& ring = datum->ring();
  TgwaConversion conv;
  conv.h_gen.reserve(n);
  conv.j_gen.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    conv.h_gen.push_back(principal_generator(datum->h()[k], "H " + std::to_string(k + 1)));
    conv.j_gen.push_back(principal_generator(datum->j()[k], "J " + std::to_string(k + 1)));
  }

  auto one = Polynomial::one(ring);
  conv.u.assign(n, std::vector<Polynomial>(n, one));
  conv.v.assign(n, std::vector<Polynomial>(n, one));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      conv.u[i][k] = extract_unit(datum->sigma(i).apply(conv.j_gen[k]),
                                  conv.j_gen[k], datum->sigma(),
                                  "sigma_" + std::to_string(i + 1) + "(j_" +
                                      std::to_string(k + 1) + ") / j_" +
                                      std::to_string(k + 1));
      conv.v[i][k] = extract_unit(datum->sigma(i).apply(conv.h_gen[k]),
                                  conv.h_gen[k], datum->sigma(),
                                  "sigma_" + std::to_string(i + 1) + "(h_" +
                                      std::to_string(k + 1) + ") / h_" +
                                      std::to_string(k + 1));
    }

  TgwaDatum t;
  t.ring = ring;
  t.sigma = datum->sigma();
  t.mu.assign(n, std::vector<Rat>(n, Rat(1)));
  t.gamma.assign(n, std::vector<Rat>(n, Rat(1)));
  for (std::size_t k = 0; k < n; ++k)
    t.a.push_back(
        datum->sigma(k).inverse().apply(conv.h_gen[k] * conv.j_gen[k]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      t.gamma[i][k] = constant_of(conv.u[i][k] * conv.v[i][k],
                                  "gamma[" + std::to_string(i + 1) + "][" +
                                      std::to_string(k + 1) + "]");
      t.mu[i][k] = constant_of(conv.u[k][i] * conv.v[i][k] * datum->p(i, k),
                               "mu[" + std::to_string(i + 1) + "][" +
                                   std::to_string(k + 1) + "]");
    }
  conv.checks = t.validate();
  conv.tgwa = std::move(t);
  return conv;
}

DatumPtr from_tgwa(const TgwaDatum& tgwa) {
  std::size_t n = tgwa.rank();
  std::vector<Ideal> h, j;
  std::vector<std::vector<Rat>> p(n, std::vector<Rat>(n, Rat(1)));
  for (std::size_t i = 0; i < n; ++i) {
    h.push_back(Ideal::unit(tgwa.ring));
    j.push_back(Ideal::principal(tgwa.sigma[i].apply(tgwa.a[i])));
    for (std::size_t k = 0; k < n; ++k)
      if (i != k) p[i][k] = tgwa.mu[i][k] / tgwa.gamma[k][i];
  }
  return BellRogalskiDatum::make(tgwa.ring, tgwa.sigma, std::move(p),
                                 std::move(h), std::move(j));
}

RingMap RingMap::make(RingPtr source, RingPtr target,
                      std::vector<Polynomial> images) {
  if (images.size() != source->arity())
    throw Error("ring map: one image per source variable required");
  for (std::size_t j = 0; j < images.size(); ++j) {
    check_same_ring(target, images[j].ring(), "ring map image");
    if (source->invertible[j] && !is_ring_unit(images[j]))
      throw Error("ring map: invertible variable '" + source->vars[j] +
                  "' must map to a unit");
  }
  RingMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.images = std::move(images);
  return m;
}

RingMap RingMap::identity(const RingPtr& ring) {
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < ring->arity(); ++j)
    images.push_back(Polynomial::variable(ring, j));
  return make(ring, ring, std::move(images));
}

RingMap RingMap::of(const Automorphism& aut) {
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < aut.ring()->arity(); ++j)
    images.push_back(aut.image(j));
  return make(aut.ring(), aut.ring(), std::move(images));
}

Polynomial RingMap::apply(const Polynomial& f) const {
  check_same_ring(source, f.ring(), "ring map apply");
  return f.substitute(target, images);
}

Ideal RingMap::apply(const Ideal& ideal) const {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply(g));
  return Ideal::of(target, std::move(gens));
}

GradedElement InducedMorphism::apply(const GradedElement& e) const {
  GradedElement out(target);
  for (auto& [deg, coeff] : e.parts()) {
    Rat scale(1);
    for (std::size_t i = 0; i < gamma.size(); ++i)
      scale *= rat_pow(gamma[i], deg[i]);
    out += GradedElement::term(target, deg, phi.apply(coeff) * scale);
  }
  return out;
}

InducedMorphism induced_morphism(const DatumPtr& source, const DatumPtr& target,
                                 RingMap phi, std::vector<Rat> gamma) {
  std::size_t n = source->rank();
  if (target->rank() != n) throw Error("induced morphism: rank mismatch");
  if (gamma.size() != n) throw Error("induced morphism: gamma must have length n");
  for (const Rat& g : gamma)
    if (g == 0) throw Error("induced morphism: gamma entries must be nonzero");
  check_same_ring(phi.source, source->ring(), "induced morphism");
  check_same_ring(phi.target, target->ring(), "induced morphism");

  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : source->h()[i].generators())
      if (!target->h()[i].contains(phi.apply(g)))
        throw Error("induced morphism: phi(H_" + std::to_string(i + 1) +
                    ") not inside target H; witness " + g.to_string());
    for (const auto& g : source->j()[i].generators())
      if (!target->j()[i].contains(phi.apply(g)))
        throw Error("induced morphism: phi(J_" + std::to_string(i + 1) +
                    ") not inside target J; witness " + g.to_string());
    for (std::size_t vj = 0; vj < source->ring()->arity(); ++vj) {
      Polynomial lhs = phi.apply(source->sigma(i).image(vj));
      Polynomial rhs = target->sigma(i).apply(phi.images[vj]);
      if (lhs != rhs)
        throw Error("induced morphism: phi sigma_" + std::to_string(i + 1) +
                    " != sigma'_" + std::to_string(i + 1) + " phi on variable " +
                    source->ring()->vars[vj]);
    }
  }

  InducedMorphism mor{source, target, std::move(phi), std::move(gamma), {}};
  // Multiplicativity on generator pairs.
  auto gens = datum_generators(source);
  bool pass = true;
  std::string witness;
  for (const auto& g1 : gens) {
    for (const auto& g2 : gens) {
      if (mor.apply(g1 * g2) != mor.apply(g1) * mor.apply(g2)) {
        pass = false;
        witness = g1.to_string() + " , " + g2.to_string();
        break;
      }
    }
    if (!pass) break;
  }
  mor.checks.entries.push_back(
      ValidationIssue{"multiplicative on generator pairs", pass, witness});
  return mor;
}

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& used) {
  while (used.count(base)) base += "_";
  return base;
}

}  // namespace

FixedRingResult fixed_ring(const DatumPtr& datum, const Automorphism& phi,
                           const std::vector<Rat>& gamma) {
  const RingPtr& ring = datum->ring();
  std::size_t n = datum->rank();
  if (gamma.size() != n) throw Error("fixed_ring: gamma must have length n");
  check_same_ring(ring, phi.ring(), "fixed_ring");
  if (!phi.is_pure_scaling())
    throw Error("fixed_ring: unsupported phi shape (diagonal sign scalings only)");
  for (const auto& s : datum->sigma())
    if (!s.is_diagonal())
      throw Error("fixed_ring: unsupported sigma shape (diagonal only)");

  std::vector<std::size_t> negated;
  for (std::size_t j = 0; j < ring->arity(); ++j) {
    const Rat& c = phi.scale()[j];
    if (c == 1) continue;
    if (c == -1)
      negated.push_back(j);
    else
      throw Error("fixed_ring: phi scale " + rat_str(c) +
                  " has infinite order over the rationals");
  }
  if (negated.size() > 1)
    throw Error("fixed_ring: more than one negated variable; the invariant "
                "ring is not a polynomial ring");
  long phi_order = negated.empty() ? 1 : 2;

  FixedRingResult result;
  result.phi_order = phi_order;
  for (const Rat& g : gamma) {
    long ord = multiplicative_order(g);
    if (ord == 0)
      throw Error("fixed_ring: gamma entry " + rat_str(g) +
                  " has infinite order; only orders 1 and 2 are realizable "
                  "over the rationals");
    result.orders.push_back(ord);
  }
  {
    long twos = phi_order == 2 ? 1 : 0;
    for (long m : result.orders)
      if (m == 2) ++twos;
    if (twos > 1)
      throw Error("fixed_ring: orders are not pairwise coprime (" +
                  std::to_string(twos) + " of them are even)");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!phi.commutes_with(datum->sigma(i)))
      throw Error("fixed_ring: phi does not commute with sigma " +
                  std::to_string(i + 1));

  // Eigenvector hypothesis on the generators.
  auto eigen_sign = [&](const Polynomial& g) -> int {
    Polynomial img = phi.apply(g);
    if (img == g) return 1;
    if (img == -g) return -1;
    throw Error("fixed_ring: generator " + g.to_string() +
                " is not a phi-eigenvector");
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : datum->h()[i].generators()) eigen_sign(g);
    for (const auto& g : datum->j()[i].generators()) eigen_sign(g);
  }

  // Invariant ring: negated variable squared, everything else unchanged.
  std::set<std::string> used(ring->vars.begin(), ring->vars.end());
  std::vector<std::string> new_vars = ring->vars;
  if (!negated.empty())
    new_vars[negated[0]] = fresh_name(ring->vars[negated[0]] + "2", used);
  RingPtr new_ring = RingSpec::make(new_vars, ring->invertible, ring->order);

  std::vector<Polynomial> embed_images;
  for (std::size_t j = 0; j < ring->arity(); ++j)
    embed_images.push_back(Polynomial::variable(
        ring, j, (!negated.empty() && j == negated[0]) ? 2 : 1));
  result.embedding = RingMap::make(new_ring, ring, embed_images);

  // Push an even polynomial into the invariant coordinates.
  auto to_new = [&](const Polynomial& f) {
    Polynomial out(new_ring);
    for (auto& [m, c] : f.terms()) {
      Mono mm = m;
      if (!negated.empty()) {
        if (mm[negated[0]] % 2 != 0)
          throw Error("fixed_ring: internal: odd exponent in invariant part");
        mm[negated[0]] /= 2;
      }
      out.add_term(mm, c);
    }
    return out;
  };
  // Even part of an ideal given by eigenvector generators, as generators of
  // the invariant-ring ideal (odd generators are multiplied by the negated
  // variable, which generates the odd module component).
  auto select_invariant = [&](const std::vector<Polynomial>& eigen_gens) {
    std::vector<Polynomial> out;
    for (const auto& g : eigen_gens) {
      if (g.is_zero()) continue;
      if (eigen_sign(g) == 1) {
        out.push_back(to_new(g));
      } else {
        out.push_back(to_new(g * Polynomial::variable(ring, negated[0])));
      }
    }
    return out;
  };
  // Generator products of I_sigma^(k)(H,J)-style ideals from eigen generators.
  auto product_gens = [&](const Ideal& ideal, const Automorphism& sigma,
                          long from, long count) {
    std::vector<Polynomial> acc{Polynomial::one(ring)};
    for (long s = 0; s < count; ++s) {
      Automorphism pw = sigma.power(from + s);
      std::vector<Polynomial> next;
      for (const auto& base : acc)
        for (const auto& g : ideal.generators()) next.push_back(base * pw.apply(g));
      acc = std::move(next);
    }
    return acc;
  };

  std::vector<Automorphism> new_sigma;
  std::vector<Ideal> new_h, new_j;
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n, Rat(1)));
  for (std::size_t i = 0; i < n; ++i) {
    long m_i = result.orders[i];
    Automorphism tau = datum->sigma(i).power(m_i);
    std::vector<Rat> scale = tau.scale(), shift = tau.shift();
    if (!negated.empty()) {
      scale[negated[0]] = scale[negated[0]] * scale[negated[0]];
      shift[negated[0]] = 0;
    }
    new_sigma.push_back(Automorphism::diagonal(new_ring, scale, shift));
    // H' = (H sigma(H) ... sigma^{m-1}(H)) ∩ R^phi and likewise for J; these
    // are the translates that recompose to the original components, checked
    // degreewise below.
    new_h.push_back(Ideal::of(
        new_ring, select_invariant(product_gens(datum->h()[i], datum->sigma(i), 0, m_i))));
    new_j.push_back(Ideal::of(
        new_ring, select_invariant(product_gens(datum->j()[i], datum->sigma(i), 0, m_i))));
    for (std::size_t k = 0; k < n; ++k)
      q[i][k] = rat_pow(datum->p(i, k), m_i * result.orders[k]);
  }

  result.datum = BellRogalskiDatum::make(new_ring, std::move(new_sigma),
                                         std::move(q), std::move(new_h),
                                         std::move(new_j),
                                         datum->verify_membership());

  // Degreewise verification: the invariant part of I^(beta * m) must match the
  // new datum's component at beta, for |beta_i| <= 2.
  bool all_ok = true;
  std::string witness;
  Deg beta(n, -2);
  while (true) {
    std::vector<Polynomial> expected_gens{Polynomial::one(ring)};
    for (std::size_t i = 0; i < n; ++i) {
      long k = beta[i] * result.orders[i];
      std::vector<Polynomial> axis_gens;
      if (k > 0)
        axis_gens = product_gens(datum->j()[i], datum->sigma(i), 0, k);
      else if (k < 0)
        axis_gens = product_gens(datum->h()[i], datum->sigma(i), k, -k);
      else
        axis_gens = {Polynomial::one(ring)};
      std::vector<Polynomial> next;
      for (const auto& a : expected_gens)
        for (const auto& b : axis_gens) next.push_back(a * b);
      expected_gens = std::move(next);
    }
    Ideal expected = Ideal::of(new_ring, select_invariant(expected_gens));
    if (!expected.equals(result.datum->canonical_ideal(beta))) {
      all_ok = false;
      witness = "degree " + deg_str(beta);
      break;
    }
    std::size_t pos = 0;
    while (pos < beta.size() && beta[pos] == 2) beta[pos++] = -2;
    if (pos == beta.size()) break;
    ++beta[pos];
  }
  result.checks.entries.push_back(ValidationIssue{
      "invariant components match on window [-2,2]^n", all_ok, witness});
  return result;
}

namespace {

Automorphism extend_block(const Automorphism& a, const RingPtr& big,
                          std::size_t offset) {
  std::size_t total = big->arity();
  std::vector<std::size_t> perm(total);
  std::vector<Rat> scale(total, Rat(1)), shift(total, Rat(0));
  for (std::size_t j = 0; j < total; ++j) perm[j] = j;
  for (std::size_t j = 0; j < a.ring()->arity(); ++j) {
    perm[offset + j] = offset + a.perm()[j];
    scale[offset + j] = a.scale()[j];
    shift[offset + j] = a.shift()[j];
  }
  return Automorphism::make(big, std::move(perm), std::move(scale),
                            std::move(shift));
}

Automorphism restrict_block(const Automorphism& lift, std::size_t offset,
                            const RingPtr& sub, const char* what) {
  std::size_t count = sub->arity();
  std::vector<std::size_t> perm(count);
  std::vector<Rat> scale(count), shift(count);
  for (std::size_t j = 0; j < count; ++j) {
    std::size_t img = lift.perm()[offset + j];
    if (img < offset || img >= offset + count)
      throw Error(std::string(what) + ": lift permutation does not preserve the factor");
    perm[j] = img - offset;
    scale[j] = lift.scale()[offset + j];
    shift[j] = lift.shift()[offset + j];
  }
  return Automorphism::make(sub, std::move(perm), std::move(scale),
                            std::move(shift));
}

std::vector<Deg> degree_window(std::size_t n, long w) {
  std::vector<Deg> out;
  Deg cur(n, -w);
  while (true) {
    out.push_back(cur);
    std::size_t pos = 0;
    while (pos < n && cur[pos] == w) cur[pos++] = -w;
    if (pos == n) break;
    ++cur[pos];
  }
  return out;
}

}  // namespace

Rat TwistMaps::d_scalar(const Deg& beta_left, const Deg& alpha_right) const {
  Rat acc(1);
  for (std::size_t i = 0; i < beta_left.size(); ++i)
    for (std::size_t k = 0; k < alpha_right.size(); ++k)
      if (beta_left[i] != 0 && alpha_right[k] != 0)
        acc *= rat_pow(d[i][k], beta_left[i] * alpha_right[k]);
  return acc;
}

std::pair<GradedElement, GradedElement> TwistMaps::tau(
    const GradedElement& right_elt, const GradedElement& left_elt) const {
  if (right_elt.parts().size() != 1 || left_elt.parts().size() != 1)
    throw Error("tau: homogeneous arguments required");
  const auto& [alpha, a_coeff] = *right_elt.parts().begin();
  const auto& [beta, b_coeff] = *left_elt.parts().begin();
  // tau(a v^alpha (x) b u^beta)
  //   = d_{beta,alpha} phi^alpha(b) u^beta (x) sigma^{-beta}(a) v^alpha.
  Polynomial b_img = b_coeff;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k] != 0) b_img = phi_on_left[k].power(alpha[k]).apply(b_img);
  Polynomial a_img = a_coeff;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) a_img = sigma_on_right[i].power(-beta[i]).apply(a_img);
  Rat scalar = d_scalar(beta, alpha);
  return {GradedElement::term(left, beta, b_img * scalar),
          GradedElement::term(right, alpha, a_img)};
}

TwistMaps twist_maps(const DatumPtr& left, const DatumPtr& right,
                     const TwistSpec& twist) {
  TwistMaps maps;
  maps.left = left;
  maps.right = right;
  std::size_t m = left->rank(), n = right->rank();
  maps.d = twist.d.empty()
               ? std::vector<std::vector<Rat>>(m, std::vector<Rat>(n, Rat(1)))
               : twist.d;
  if (maps.d.size() != m)
    throw Error("twist: d must have one row per left axis");
  for (const auto& row : maps.d) {
    if (row.size() != n) throw Error("twist: d must have one column per right axis");
    for (const Rat& v : row)
      if (v == 0) throw Error("twist: d entries must be nonzero");
  }
  std::size_t lv = left->ring()->arity();
  if (!twist.sigma_lifts.empty()) {
    if (twist.sigma_lifts.size() != m)
      throw Error("twist: one sigma lift per left axis required");
    for (std::size_t i = 0; i < m; ++i)
      maps.sigma_on_right.push_back(
          restrict_block(twist.sigma_lifts[i], lv, right->ring(), "sigma lift"));
  } else {
    for (std::size_t i = 0; i < m; ++i)
      maps.sigma_on_right.push_back(Automorphism::identity(right->ring()));
  }
  if (!twist.phi_lifts.empty()) {
    if (twist.phi_lifts.size() != n)
      throw Error("twist: one phi lift per right axis required");
    for (std::size_t k = 0; k < n; ++k)
      maps.phi_on_left.push_back(
          restrict_block(twist.phi_lifts[k], 0, left->ring(), "phi lift"));
  } else {
    for (std::size_t k = 0; k < n; ++k)
      maps.phi_on_left.push_back(Automorphism::identity(left->ring()));
  }
  return maps;
}

TensorResult twisted_tensor(const DatumPtr& left, const DatumPtr& right,
                            const TwistSpec& twist, long window) {
  std::size_t m = left->rank(), n = right->rank();
  const RingPtr& lr = left->ring();
  const RingPtr& rr = right->ring();

  TensorResult result;
  // Combined ring with deterministic collision renaming.
  std::set<std::string> lnames(lr->vars.begin(), lr->vars.end());
  std::set<std::string> rnames(rr->vars.begin(), rr->vars.end());
  std::vector<std::string> vars;
  std::vector<bool> invertible;
  std::set<std::string> used;
  for (std::size_t j = 0; j < lr->arity(); ++j) {
    std::string name = lr->vars[j];
    if (rnames.count(name)) {
      std::string renamed = fresh_name(name + "_L", used);
      result.renames.emplace_back(name, renamed);
      name = renamed;
    }
    used.insert(name);
    vars.push_back(name);
    invertible.push_back(lr->invertible[j]);
  }
  for (std::size_t j = 0; j < rr->arity(); ++j) {
    std::string name = rr->vars[j];
    if (lnames.count(name) || used.count(name)) {
      std::string renamed = fresh_name(name + "_R", used);
      result.renames.emplace_back(name, renamed);
      name = renamed;
    }
    used.insert(name);
    vars.push_back(name);
    invertible.push_back(rr->invertible[j]);
  }
  RingPtr big = RingSpec::make(vars, invertible, lr->order);

  std::vector<Polynomial> limg, rimg;
  for (std::size_t j = 0; j < lr->arity(); ++j)
    limg.push_back(Polynomial::variable(big, j));
  for (std::size_t j = 0; j < rr->arity(); ++j)
    rimg.push_back(Polynomial::variable(big, lr->arity() + j));
  result.embed_left = RingMap::make(lr, big, limg);
  result.embed_right = RingMap::make(rr, big, rimg);

  TwistMaps maps = twist_maps(left, right, twist);

  // Combined automorphisms: user lifts re-based onto the combined ring, or
  // trivial extensions.
  std::vector<Automorphism> pi;
  for (std::size_t i = 0; i < m; ++i) {
    Automorphism block = extend_block(left->sigma(i), big, 0);
    Automorphism lift = extend_block(maps.sigma_on_right[i], big, lr->arity());
    pi.push_back(block.compose(lift));
  }
  for (std::size_t k = 0; k < n; ++k) {
    Automorphism block = extend_block(right->sigma(k), big, lr->arity());
    Automorphism lift = extend_block(maps.phi_on_left[k], big, 0);
    pi.push_back(block.compose(lift));
  }
  for (std::size_t a = 0; a < pi.size(); ++a)
    for (std::size_t b = a + 1; b < pi.size(); ++b)
      if (!pi[a].commutes_with(pi[b]))
        throw Error("twisted tensor: lifted automorphisms " +
                    std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                    " do not commute");

  // Hypothesis: lifts preserve the partner's canonical ideals on the window.
  for (std::size_t i = 0; i < m; ++i) {
    if (maps.sigma_on_right[i].is_identity()) continue;
    for (const Deg& beta : degree_window(n, window)) {
      Ideal ri = maps.sigma_on_right[i].apply(right->canonical_ideal(beta));
      for (const auto& g : ri.generators())
        if (!right->canonical_ideal(beta).contains(g))
          throw Error("twisted tensor: sigma lift " + std::to_string(i + 1) +
                      " does not preserve the right factor's ideal at degree " +
                      deg_str(beta) + "; witness " + g.to_string());
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (maps.phi_on_left[k].is_identity()) continue;
    for (const Deg& alpha : degree_window(m, window)) {
      Ideal li = maps.phi_on_left[k].apply(left->canonical_ideal(alpha));
      for (const auto& g : li.generators())
        if (!left->canonical_ideal(alpha).contains(g))
          throw Error("twisted tensor: phi lift " + std::to_string(k + 1) +
                      " does not preserve the left factor's ideal at degree " +
                      deg_str(alpha) + "; witness " + g.to_string());
    }
  }

  // Block scalar matrix: lower-left entries are reciprocals so the result is
  // multiplicatively antisymmetric.
  std::size_t total = m + n;
  std::vector<std::vector<Rat>> r(total, std::vector<Rat>(total, Rat(1)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) r[i][k] = left->p(i, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) r[m + i][m + k] = right->p(i, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      r[i][m + k] = maps.d[i][k];
      r[m + k][i] = Rat(1) / maps.d[i][k];
    }

  std::vector<Ideal> big_h, big_j;
  for (std::size_t i = 0; i < m; ++i) {
    big_h.push_back(result.embed_left.apply(left->h()[i]));
    big_j.push_back(result.embed_left.apply(left->j()[i]));
  }
  for (std::size_t k = 0; k < n; ++k) {
    big_h.push_back(result.embed_right.apply(right->h()[k]));
    big_j.push_back(result.embed_right.apply(right->j()[k]));
  }

  result.tensor = BellRogalskiDatum::make(
      big, std::move(pi), std::move(r), std::move(big_h), std::move(big_j),
      left->verify_membership() && right->verify_membership());

  // Degreewise factorization: W_(alpha,beta) = I^(alpha) (x) I'^(beta).
  {
    bool ok = true;
    std::string witness;
    for (const Deg& alpha : degree_window(m, window)) {
      for (const Deg& beta : degree_window(n, window)) {
        Deg full(total);
        for (std::size_t i = 0; i < m; ++i) full[i] = alpha[i];
        for (std::size_t k = 0; k < n; ++k) full[m + k] = beta[k];
        Ideal expected = result.embed_left.apply(left->canonical_ideal(alpha)) *
                         result.embed_right.apply(right->canonical_ideal(beta));
        if (!expected.equals(result.tensor->canonical_ideal(full))) {
          ok = false;
          witness = "degree " + deg_str(full);
          break;
        }
      }
      if (!ok) break;
    }
    result.checks.entries.push_back(ValidationIssue{
        "graded components factor on window [-" + std::to_string(window) + "," +
            std::to_string(window) + "]",
        ok, witness});
  }

  // Exchange law on embedded generators:
  // iota_D(a v^alpha) iota_B(b u^beta)
  //   = d_{beta,alpha} iota_B(phi^alpha(b) u^beta) iota_D(sigma^{-beta}(a) v^alpha).
  {
    bool ok = true;
    std::string witness;
    auto embed = [&](const GradedElement& e, bool left_side) {
      GradedElement out(result.tensor);
      for (auto& [deg, coeff] : e.parts()) {
        Deg full(total, 0);
        for (std::size_t t = 0; t < deg.size(); ++t)
          full[left_side ? t : m + t] = deg[t];
        out += GradedElement::term(
            result.tensor, full,
            left_side ? result.embed_left.apply(coeff)
                      : result.embed_right.apply(coeff));
      }
      return out;
    };
    auto lgens = datum_generators(left);
    auto rgens = datum_generators(right);
    for (const auto& a : rgens) {
      for (const auto& b : lgens) {
        if (a.is_zero() || b.is_zero()) continue;
        auto [b2, a2] = maps.tau(a, b);
        GradedElement lhs = embed(a, false) * embed(b, true);
        GradedElement rhs = embed(b2, true) * embed(a2, false);
        if (lhs != rhs) {
          ok = false;
          witness = "pair (" + a.to_string() + ") , (" + b.to_string() + ")";
          break;
        }
      }
      if (!ok) break;
    }
    result.checks.entries.push_back(
        ValidationIssue{"embedded generators obey the twisting map", ok, witness});
  }

  return result;
}

GkReport gk_dimension(const DatumPtr& datum) {
  GkReport rep;
  long vars = static_cast<long>(datum->ring()->arity());
  long n = static_cast<long>(datum->rank());
  rep.checklist.push_back(ValidationIssue{
      "GKdim of the base ring = " + std::to_string(vars) +
          " (polynomial/Laurent ring on " + std::to_string(vars) + " variables)",
      true, ""});
  for (std::size_t i = 0; i < datum->rank(); ++i)
    rep.checklist.push_back(ValidationIssue{
        "sigma " + std::to_string(i + 1) + " locally algebraic", true,
        datum->sigma(i).local_algebraicity_reason()});
  ValidationReport v = datum->validate();
  bool nonzero = true;
  for (const auto& e : v.entries)
    if (e.axiom == "H and J nonzero") nonzero = e.pass;
  rep.checklist.push_back(ValidationIssue{
      "normal-element hypothesis (commutative domain, H and J nonzero)", nonzero,
      nonzero ? "" : "some H_i or J_i is zero"});
  rep.value = vars + n;
  return rep;
}

}  // namespace br
