#include "br/weight.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace br {

namespace {

// Per-coordinate shape of a diagonal sigma tuple acting on points. Since the
// tuple commutes, each coordinate is either a pure shift family or a scaling
// family around a common fixed point.
struct CoordAction {
  bool scaling = false;
  Rat fixed_point;          // for scaling coordinates
  std::vector<Rat> scales;  // c_ij per axis (scaling case)
  std::vector<Rat> shifts;  // d_ij per axis (shift case)
};

struct DiagonalShape {
  bool supported = false;
  std::vector<CoordAction> coords;
};

DiagonalShape diagonal_shape(const BellRogalskiDatum& datum) {
  DiagonalShape shape;
  std::size_t n = datum.rank();
  std::size_t vars = datum.ring()->arity();
  for (const auto& s : datum.sigma())
    if (!s.is_diagonal()) return shape;
  shape.coords.resize(vars);
  for (std::size_t j = 0; j < vars; ++j) {
    CoordAction& act = shape.coords[j];
    bool any_scale = false;
    for (std::size_t i = 0; i < n; ++i)
      if (datum.sigma(i).scale()[j] != 1) any_scale = true;
    act.scaling = any_scale;
    if (any_scale) {
      std::optional<Rat> fp;
      for (std::size_t i = 0; i < n; ++i) {
        const Rat& c = datum.sigma(i).scale()[j];
        const Rat& d = datum.sigma(i).shift()[j];
        if (c == 1) {
          if (d != 0) return shape;  // shift cannot commute with a scaling
          act.scales.push_back(c);
          continue;
        }
        Rat candidate = d / (Rat(1) - c);
        if (fp && *fp != candidate) return shape;
        fp = candidate;
        act.scales.push_back(c);
      }
      act.fixed_point = fp ? *fp : Rat(0);
    } else {
      for (std::size_t i = 0; i < n; ++i)
        act.shifts.push_back(datum.sigma(i).shift()[j]);
    }
  }
  shape.supported = true;
  return shape;
}

// Rows of the homogeneous orbit system: alpha is in the stabilizer of a
// generic point only if all rows annihilate it. Scaling coordinates
// contribute one row per prime of their scale factors; shift coordinates one
// row of shift amounts. Rows are returned over the rationals; callers scale
// to integers as needed.
struct OrbitSystem {
  std::vector<std::vector<Rat>> rows;
  // Parallel metadata for assembling right-hand sides.
  struct RowInfo {
    std::size_t coord;
    bool scaling;
    Int prime;  // scaling rows only
  };
  std::vector<RowInfo> info;
};

OrbitSystem orbit_system(const BellRogalskiDatum& datum,
                         const DiagonalShape& shape, const Point& base) {
  OrbitSystem sys;
  std::size_t n = datum.rank();
  for (std::size_t j = 0; j < shape.coords.size(); ++j) {
    const CoordAction& act = shape.coords[j];
    if (act.scaling) {
      if (base[j] == act.fixed_point) continue;  // pinned: no constraint
      std::set<Int> primes;
      std::vector<Factorization> fs;
      for (std::size_t i = 0; i < n; ++i) {
        fs.push_back(factor_rational(act.scales[i]));
        for (auto& [p, e] : fs.back().primes) primes.insert(p);
      }
      for (const Int& p : primes) {
        std::vector<Rat> row(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
          auto it = fs[i].primes.find(p);
          if (it != fs[i].primes.end()) row[i] = Rat(it->second);
        }
        sys.rows.push_back(std::move(row));
        sys.info.push_back({j, true, p});
      }
    } else {
      bool nontrivial = false;
      for (const Rat& d : act.shifts)
        if (d != 0) nontrivial = true;
      if (!nontrivial) continue;
      std::vector<Rat> row(act.shifts.begin(), act.shifts.end());
      sys.rows.push_back(std::move(row));
      sys.info.push_back({j, false, Int(0)});
    }
  }
  return sys;
}

bool points_equal(const Point& a, const Point& b) { return a == b; }

}  // namespace

bool orbit_solver_supported(const BellRogalskiDatum& datum) {
  return diagonal_shape(datum).supported;
}

TorsionReport is_torsion_free(const BellRogalskiDatum& datum, const Point& pt,
                              long window) {
  TorsionReport rep;
  DiagonalShape shape = diagonal_shape(datum);
  std::size_t n = datum.rank();
  if (shape.supported) {
    rep.exact = true;
    OrbitSystem sys = orbit_system(datum, shape, pt);
    // Integer version of the rows (clear denominators per row).
    std::vector<std::vector<Int>> int_rows;
    for (const auto& row : sys.rows) {
      Int den(1);
      for (const Rat& v : row) {
        Int d = v.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
      }
      std::vector<Int> r;
      for (const Rat& v : row) r.push_back(Rat(v * Rat(den)).get_num());
      int_rows.push_back(std::move(r));
    }
    auto kernel = integer_kernel(int_rows, n);
    if (kernel.empty()) {
      rep.torsion_free = true;
      return rep;
    }
    rep.torsion_free = false;
    for (const auto& vec : kernel) {
      Deg alpha(n);
      for (std::size_t i = 0; i < n; ++i) alpha[i] = vec[i].get_si();
      // Sign characters can make the bare kernel vector miss; its double
      // always stabilizes.
      if (!points_equal(datum.orbit_point(pt, alpha), pt)) {
        for (auto& v : alpha) v *= 2;
        if (!points_equal(datum.orbit_point(pt, alpha), pt))
          throw Error("is_torsion_free: stabilizer verification failed");
      }
      rep.stabilizer.push_back(alpha);
    }
    return rep;
  }

  rep.exact = false;
  rep.note = "non-diagonal automorphism tuple: window scan with bound " +
             std::to_string(window);
  Deg cur(n, -window);
  while (true) {
    bool nonzero = std::any_of(cur.begin(), cur.end(), [](long v) { return v != 0; });
    if (nonzero && points_equal(datum.orbit_point(pt, cur), pt)) {
      rep.stabilizer.push_back(cur);
      rep.torsion_free = false;
      return rep;
    }
    std::size_t pos = 0;
    while (pos < cur.size() && cur[pos] == window) cur[pos++] = -window;
    if (pos == cur.size()) break;
    ++cur[pos];
  }
  rep.torsion_free = true;
  return rep;
}

std::optional<Deg> orbit_solve(const BellRogalskiDatum& datum, const Point& base,
                               const Point& target) {
  DiagonalShape shape = diagonal_shape(datum);
  if (!shape.supported) throw Error("orbit_solve: non-diagonal automorphisms");
  std::size_t n = datum.rank();
  OrbitSystem sys = orbit_system(datum, shape, base);
  std::vector<Rat> rhs;
  // Quick feasibility on unconstrained coordinates and assemble right sides.
  for (std::size_t j = 0; j < shape.coords.size(); ++j) {
    const CoordAction& act = shape.coords[j];
    if (act.scaling) {
      if (base[j] == act.fixed_point) {
        if (target[j] != act.fixed_point) return std::nullopt;
      } else if (target[j] == act.fixed_point) {
        return std::nullopt;
      }
    } else {
      bool nontrivial = false;
      for (const Rat& d : act.shifts)
        if (d != 0) nontrivial = true;
      if (!nontrivial && base[j] != target[j]) return std::nullopt;
    }
  }
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto& info = sys.info[r];
    const CoordAction& act = shape.coords[info.coord];
    if (info.scaling) {
      // prod_i c_ij^{alpha_i} = (base_j - fp) / (target_j - fp)
      Rat ratio = (base[info.coord] - act.fixed_point) /
                  (target[info.coord] - act.fixed_point);
      Factorization f = factor_rational(ratio);
      auto it = f.primes.find(info.prime);
      rhs.push_back(Rat(it == f.primes.end() ? 0 : it->second));
    } else {
      // sum_i alpha_i d_ij = base_j - target_j
      rhs.push_back(base[info.coord] - target[info.coord]);
    }
  }
  // Check that every prime of every ratio is covered by some row.
  for (std::size_t j = 0; j < shape.coords.size(); ++j) {
    const CoordAction& act = shape.coords[j];
    if (!act.scaling || base[j] == act.fixed_point) continue;
    Rat ratio = (base[j] - act.fixed_point) / (target[j] - act.fixed_point);
    for (auto& [p, e] : factor_rational(ratio).primes) {
      bool covered = false;
      for (std::size_t r = 0; r < sys.info.size(); ++r)
        if (sys.info[r].scaling && sys.info[r].coord == j && sys.info[r].prime == p)
          covered = true;
      if (!covered && e != 0) return std::nullopt;
    }
  }

  LinearSolution sol = solve_linear(sys.rows, rhs);
  if (sol.outcome == SolveOutcome::NoSolution) return std::nullopt;
  if (sol.outcome == SolveOutcome::Underdetermined)
    throw Error("orbit_solve: orbit is not torsion-free");
  Deg alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sol.x[i].get_den() != 1) return std::nullopt;
    alpha[i] = sol.x[i].get_num().get_si();
  }
  // Exact verification; also rejects sign-character mismatches.
  if (!points_equal(datum.orbit_point(base, alpha), target)) return std::nullopt;
  return alpha;
}

bool is_i_break(const BellRogalskiDatum& datum, const Point& pt, std::size_t i) {
  Point q = datum.sigma(i).act_point(pt);
  for (const auto& h : datum.h()[i].generators())
    for (const auto& j : datum.j()[i].generators())
      if (h.eval(q) * j.eval(q) != 0) return false;
  return true;
}

std::vector<BreakAxis> break_classes(const BellRogalskiDatum& datum,
                                     const Point& base, long window) {
  std::vector<BreakAxis> axes;
  bool solver_ok = orbit_solver_supported(datum);
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    BreakAxis axis;
    Ideal locus = datum.h()[i] * datum.j()[i];
    if (locus.is_unit()) {
      axis.exact = true;  // empty break locus
      axes.push_back(std::move(axis));
      continue;
    }
    bool window_mode = true;
    if (solver_ok) {
      VarietyPoints vp = solve_variety(locus);
      if (vp.zero_dimensional && vp.all_rational) {
        window_mode = false;
        axis.exact = true;
        std::set<long> offsets;
        Automorphism inv = datum.sigma(i).inverse();
        for (const Point& w : vp.points) {
          Point brk = inv.act_point(w);  // sigma_i(brk-ideal) = I(w)
          if (auto alpha = orbit_solve(datum, base, brk)) offsets.insert((*alpha)[i]);
        }
        axis.offsets.assign(offsets.begin(), offsets.end());
      } else if (vp.zero_dimensional && !vp.all_rational) {
        axis.caveat =
            "break locus has non-rational points; window scan may be incomplete";
      } else {
        axis.caveat =
            "break locus is positive-dimensional; window scan may be incomplete";
      }
    } else {
      axis.caveat = "non-diagonal automorphisms; window scan may be incomplete";
    }
    if (window_mode) {
      axis.exact = false;
      std::set<long> offsets;
      Deg e(datum.rank(), 0);
      for (long a = -window; a <= window; ++a) {
        e[i] = a;
        if (is_i_break(datum, datum.orbit_point(base, e), i)) offsets.insert(a);
      }
      axis.offsets.assign(offsets.begin(), offsets.end());
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

std::string AxisInterval::to_string() const {
  std::string s = "(";
  s += lo ? std::to_string(*lo) : "-inf";
  s += ", ";
  s += hi ? std::to_string(*hi) : "inf";
  s += "]";
  return s;
}

namespace {

// The unique straddling tuple around offset 0, as support intervals.
AxisInterval straddle_interval(const BreakAxis& axis) {
  AxisInterval iv;
  std::optional<long> hi;
  for (long a : axis.offsets)
    if (a >= 0) {
      hi = a;
      break;
    }
  iv.hi = hi;
  std::optional<long> lo;
  for (long a : axis.offsets) {
    if (hi && a >= *hi) break;
    lo = a;
  }
  iv.lo = lo;
  return iv;
}

std::vector<Deg> enumerate_box(const std::vector<AxisInterval>& box, long window) {
  std::vector<Deg> pts;
  std::size_t n = box.size();
  Deg cur(n, -window);
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i)
      if (!box[i].contains(cur[i])) inside = false;
    if (inside) pts.push_back(cur);
    std::size_t pos = 0;
    while (pos < n && cur[pos] == window) cur[pos++] = -window;
    if (pos == n) break;
    ++cur[pos];
  }
  return pts;
}

}  // namespace

GSet g_set(const BellRogalskiDatum& datum, const Point& pt, long window) {
  TorsionReport tr = is_torsion_free(datum, pt, window);
  if (!tr.torsion_free) throw Error("g_set: orbit is not torsion-free");
  GSet g;
  auto axes = break_classes(datum, pt, window);
  g.exact = true;
  for (const auto& axis : axes) {
    g.box.push_back(straddle_interval(axis));
    if (!axis.exact) g.exact = false;
    if (!axis.caveat.empty())
      g.caveat += (g.caveat.empty() ? "" : "; ") + axis.caveat;
  }
  g.points = enumerate_box(g.box, window);
  return g;
}

Classification classify(const BellRogalskiDatum& datum, const Point& base,
                        long window) {
  Classification cls;
  cls.torsion = is_torsion_free(datum, base, window);
  if (!cls.torsion.torsion_free) {
    std::string witness =
        cls.torsion.stabilizer.empty() ? "" : deg_str(cls.torsion.stabilizer[0]);
    throw Error("classify: orbit is not torsion-free (stabilizer contains " +
                witness + ")");
  }
  cls.axes = break_classes(datum, base, window);
  cls.exact = true;
  for (const auto& axis : cls.axes) {
    if (!axis.exact) cls.exact = false;
    if (!axis.caveat.empty())
      cls.caveat += (cls.caveat.empty() ? "" : "; ") + axis.caveat;
  }

  std::size_t n = datum.rank();
  // Tuples over (offsets_i + {inf}) in lexicographic choice order.
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = cls.axes[i].offsets.size() + 1;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    SimpleModuleDescriptor d;
    d.orbit_base = base;
    d.breaks.resize(n);
    d.support.resize(n);
    d.base_offset.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& offs = cls.axes[i].offsets;
      AxisInterval iv;
      if (choice[i] < offs.size()) {
        d.breaks[i] = offs[choice[i]];
        iv.hi = offs[choice[i]];
        if (choice[i] > 0) iv.lo = offs[choice[i] - 1];
      } else {
        d.breaks[i] = std::nullopt;
        if (!offs.empty()) iv.lo = offs.back();
      }
      d.support[i] = iv;
      if (iv.hi)
        d.base_offset[i] = *iv.hi;
      else if (iv.lo)
        d.base_offset[i] = *iv.lo + 1;
      else
        d.base_offset[i] = 0;
    }
    d.base_point = datum.orbit_point(base, d.base_offset);
    cls.descriptors.push_back(std::move(d));
    std::size_t pos = 0;
    while (pos < n && choice[pos] + 1 == sizes[pos]) choice[pos++] = 0;
    if (pos == n) break;
    ++choice[pos];
  }
  return cls;
}

ChosenB choose_b(const DatumPtr& datum, const Point& m, const Deg& alpha,
                 long degree_bound) {
  Ideal up = datum->canonical_ideal(alpha);
  Ideal down = datum->canonical_ideal(deg_neg(alpha));
  const auto& gens_up = up.groebner();
  const auto& gens_down = down.groebner();

  struct Cand {
    long deg;
    std::size_t iu, id;
  };
  std::vector<Cand> cands;
  bool bound_hit = false;
  for (std::size_t iu = 0; iu < gens_up.size(); ++iu)
    for (std::size_t id = 0; id < gens_down.size(); ++id) {
      long deg = gens_up[iu].total_degree() + gens_down[id].total_degree();
      if (deg > degree_bound) {
        bound_hit = true;
        continue;
      }
      cands.push_back({deg, iu, id});
    }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.iu != b.iu) return a.iu < b.iu;
    return a.id < b.id;
  });

  for (const Cand& c : cands) {
    const Polynomial& g = gens_up[c.iu];
    const Polynomial& h = gens_down[c.id];
    auto [deg0, pairing] =
        skew_product(*datum, deg_neg(alpha), h, alpha, g);
    Rat val = pairing.eval(m);
    if (val == 0) continue;
    ChosenB chosen{GradedElement::term(datum, alpha, g),
                   GradedElement::term(datum, deg_neg(alpha), h),
                   GradedElement::term(datum, deg_neg(alpha), h * (Rat(1) / val)),
                   pairing};
    return chosen;
  }
  if (bound_hit)
    throw Error("choose_b: degree bound " + std::to_string(degree_bound) +
                " exceeded at degree " + deg_str(alpha) +
                "; existence is guaranteed on G_m, raise --degree-bound");
  throw Error("choose_b: degree " + deg_str(alpha) +
              " is not in G_m for the given point");
}

bool ModuleTable::in_basis(const Deg& beta) const {
  return std::binary_search(basis.begin(), basis.end(), beta);
}

bool ModuleTable::in_support(const Deg& beta) const {
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (!descriptor.support[i].contains(beta[i])) return false;
  return true;
}

ModuleTable module_table(const DatumPtr& datum,
                         const SimpleModuleDescriptor& descriptor, long window,
                         long degree_bound) {
  ModuleTable table;
  table.datum = datum;
  table.descriptor = descriptor;
  table.window = window;
  table.degree_bound = degree_bound;
  table.basis = enumerate_box(descriptor.support, window);
  std::sort(table.basis.begin(), table.basis.end());

  for (const Deg& beta : table.basis) {
    table.weight_points.emplace(beta,
                                datum->orbit_point(descriptor.orbit_base, beta));
    Deg rel = deg_add(beta, deg_neg(descriptor.base_offset));
    table.chosen.emplace(rel,
                         choose_b(datum, descriptor.base_point, rel, degree_bound));
  }

  std::size_t n = datum->rank();
  for (const Deg& beta : table.basis) {
    Deg rel = deg_add(beta, deg_neg(descriptor.base_offset));
    for (std::size_t i = 0; i < n; ++i) {
      Deg e(n, 0);
      // Raising edge beta -> beta + e_i: x = t_i b_rel b'_{rel+e_i}.
      e[i] = 1;
      Deg up = deg_add(beta, e);
      if (table.in_basis(up)) {
        Deg rel_up = deg_add(rel, e);
        const ChosenB& b = table.chosen.at(rel);
        const ChosenB& bp = table.chosen.at(rel_up);
        auto [d1, f1] = skew_product(*datum, e, Polynomial::one(datum->ring()),
                                     rel, b.b.parts().begin()->second);
        auto [d2, f2] = skew_product(*datum, d1, f1, deg_neg(rel_up),
                                     bp.bprime.parts().begin()->second);
        table.x_coeff.emplace(std::make_pair(beta, i), f2);
      }
      // Lowering edge beta -> beta - e_i: y = t_i^{-1} b_rel b'_{rel-e_i}.
      e[i] = -1;
      Deg dn = deg_add(beta, e);
      if (table.in_basis(dn)) {
        Deg rel_dn = deg_add(rel, e);
        const ChosenB& b = table.chosen.at(rel);
        const ChosenB& bp = table.chosen.at(rel_dn);
        auto [d1, f1] = skew_product(*datum, e, Polynomial::one(datum->ring()),
                                     rel, b.b.parts().begin()->second);
        auto [d2, f2] = skew_product(*datum, d1, f1, deg_neg(rel_dn),
                                     bp.bprime.parts().begin()->second);
        table.y_coeff.emplace(std::make_pair(beta, i), f2);
      }
    }
  }
  return table;
}

std::optional<Rat> module_action_scalar(const ModuleTable& table, const Deg& gamma,
                                        const Polynomial& coeff, const Deg& beta) {
  const auto& datum = *table.datum;
  Deg target = deg_add(beta, gamma);
  if (!table.in_support(target)) return Rat(0);
  if (!table.in_basis(target) || !table.in_basis(beta)) return std::nullopt;
  Deg rel = deg_add(beta, deg_neg(table.descriptor.base_offset));
  Deg rel_t = deg_add(target, deg_neg(table.descriptor.base_offset));
  const ChosenB& b = table.chosen.at(rel);
  const ChosenB& bp = table.chosen.at(rel_t);
  auto [d1, f1] =
      skew_product(datum, gamma, coeff, rel, b.b.parts().begin()->second);
  auto [d2, f2] = skew_product(datum, d1, f1, deg_neg(rel_t),
                               bp.bprime.parts().begin()->second);
  return f2.eval(table.weight_points.at(target));
}

bool ModuleCheckReport::ok() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

ModuleCheckReport verify_module(const ModuleTable& table) {
  ModuleCheckReport rep;
  const DatumPtr& datum = table.datum;
  std::size_t n = datum->rank();

  // (a) generator-pair relation consistency on the window interior.
  auto gens = datum_generators(datum);
  std::size_t failures = 0;
  std::string first_fail;
  for (const auto& g1 : gens)
    for (const auto& g2 : gens) {
      if (g1.is_zero() || g2.is_zero()) continue;
      const auto& [gamma, f1] = *g1.parts().begin();
      const auto& [delta, f2] = *g2.parts().begin();
      auto [dprod, fprod] = skew_product(*datum, gamma, f1, delta, f2);
      for (const Deg& beta : table.basis) {
        Deg mid = deg_add(beta, delta);
        Deg end = deg_add(mid, gamma);
        // Stepped action; only decidable when the intermediate is not
        // window-truncated.
        std::optional<Rat> step2 = module_action_scalar(table, delta, f2, beta);
        if (!step2) continue;
        std::optional<Rat> stepped;
        if (*step2 == 0) {
          stepped = Rat(0);
        } else {
          std::optional<Rat> step1 = module_action_scalar(table, gamma, f1, mid);
          if (!step1) continue;
          stepped = *step1 * *step2;
        }
        std::optional<Rat> direct =
            module_action_scalar(table, dprod, fprod, beta);
        if (!direct) continue;
        ++rep.relation_checks;
        if (*stepped != *direct) {
          ++failures;
          if (first_fail.empty())
            first_fail = "edge " + deg_str(beta) + " -> " + deg_str(end) +
                         " via " + deg_str(mid) + ": stepped " +
                         rat_str(*stepped) + " vs direct " + rat_str(*direct);
        }
      }
    }
  rep.relation_failures = failures;
  rep.entries.push_back(ModuleCheckEntry{
      "generator relations act consistently (" +
          std::to_string(rep.relation_checks) + " checks)",
      failures == 0, first_fail});

  // (b) one basis vector per weight.
  {
    std::set<Deg> seen(table.basis.begin(), table.basis.end());
    rep.entries.push_back(ModuleCheckEntry{
        "weight spaces at most one-dimensional", seen.size() == table.basis.size(),
        ""});
  }

  // (c) cross-break vanishing: at a raising break edge the composite
  // sigma_i^{-1}(H_i J_i) must vanish at the source weight.
  {
    bool pass = true;
    std::string detail;
    for (const Deg& beta : table.basis) {
      for (std::size_t i = 0; i < n && pass; ++i) {
        Deg e(n, 0);
        e[i] = 1;
        Deg up = deg_add(beta, e);
        if (table.in_support(up)) continue;  // not a break edge
        const Point& pw = table.weight_points.at(beta);
        Automorphism inv = datum->sigma(i).inverse();
        for (const auto& h : datum->h()[i].generators())
          for (const auto& j : datum->j()[i].generators())
            if (inv.apply(h * j).eval(pw) != 0) {
              pass = false;
              detail = "vanishing fails at " + deg_str(beta) + " axis " +
                       std::to_string(i + 1);
              break;
            }
      }
    }
    rep.entries.push_back(ModuleCheckEntry{"cross-break vanishing", pass, detail});
  }

  // (d) R acts by evaluation at the translated weight point.
  {
    bool pass = true;
    std::string detail;
    Deg zero(n, 0);
    for (std::size_t v = 0; v < datum->ring()->arity() && pass; ++v) {
      Polynomial var = Polynomial::variable(datum->ring(), v);
      for (const Deg& beta : table.basis) {
        auto scal = module_action_scalar(table, zero, var, beta);
        if (!scal) continue;
        if (*scal != var.eval(table.weight_points.at(beta))) {
          pass = false;
          detail = "variable " + datum->ring()->vars[v] + " at " + deg_str(beta);
          break;
        }
      }
    }
    rep.entries.push_back(
        ModuleCheckEntry{"ring acts through weight evaluation", pass, detail});
  }

  return rep;
}

}  // namespace br
