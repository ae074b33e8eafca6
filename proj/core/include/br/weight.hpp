// Orbits of rational maximal ideals, break detection, and the classification
// of simple weight modules on torsion-free orbits with explicit action tables.
#pragma once

#include <optional>
#include <set>

#include "br/datum.hpp"

namespace br {

struct TorsionReport {
  bool torsion_free = false;
  bool exact = false;            // closed-form decision vs window scan
  std::vector<Deg> stabilizer;   // nonzero stabilizer vectors on failure
  std::string note;
};

// Exact for diagonal automorphism tuples (scaling parts via prime
// factorization, shifts via integer lattice kernels); window scan otherwise.
TorsionReport is_torsion_free(const BellRogalskiDatum& datum, const Point& pt,
                              long window = 6);

// Solve sigma^alpha(base) = target. Requires a diagonal sigma tuple; nullopt
// when no integer solution exists.
std::optional<Deg> orbit_solve(const BellRogalskiDatum& datum, const Point& base,
                               const Point& target);
bool orbit_solver_supported(const BellRogalskiDatum& datum);

// m is an i-break when sigma_i(m) contains H_i J_i.
bool is_i_break(const BellRogalskiDatum& datum, const Point& pt, std::size_t i);

// One axis of break data on the orbit of a base point. Break classes are
// recorded by their offset along the axis; the class list always carries the
// infinity sentinel at the top, so the full list is offsets + {inf}.
struct BreakAxis {
  std::vector<long> offsets;  // sorted, distinct
  bool exact = false;
  std::string caveat;  // nonempty when window-limited or locus non-rational
};

std::vector<BreakAxis> break_classes(const BellRogalskiDatum& datum,
                                     const Point& base, long window);

// Half-open box side (lo, hi]; absent bounds are infinite.
struct AxisInterval {
  std::optional<long> lo;  // exclusive
  std::optional<long> hi;  // inclusive
  bool contains(long v) const {
    return (!lo || v > *lo) && (!hi || v <= *hi);
  }
  std::string to_string() const;
};

struct GSet {
  std::vector<AxisInterval> box;  // offsets relative to the queried point
  std::vector<Deg> points;        // box intersected with the window
  bool exact = false;
  std::string caveat;
};

// The box of degrees alpha with B_{-alpha} B_alpha not inside m, via the
// straddling break tuple.
GSet g_set(const BellRogalskiDatum& datum, const Point& pt, long window);

struct SimpleModuleDescriptor {
  Point orbit_base;  // the classification query point (offset 0)
  // Per axis: the chosen break class offset, or nullopt for the infinity class.
  std::vector<std::optional<long>> breaks;
  std::vector<AxisInterval> support;  // offsets relative to orbit_base
  Deg base_offset;                    // canonical in-support representative
  Point base_point;
};

struct Classification {
  TorsionReport torsion;
  std::vector<BreakAxis> axes;
  std::vector<SimpleModuleDescriptor> descriptors;
  bool exact = false;
  std::string caveat;
};

// One descriptor per tuple in prod_i (offsets_i + {inf}); supports partition
// the orbit. Throws on a torsion-bound orbit.
Classification classify(const BellRogalskiDatum& datum, const Point& base,
                        long window);

// A choice of b in B_alpha and b* in B_{-alpha} with b* b not in m, plus the
// normalized b' = b* / eval(b* b at m), so that b' b = 1 mod m.
struct ChosenB {
  GradedElement b;
  GradedElement bstar;
  GradedElement bprime;
  Polynomial pairing;  // degree-0 coefficient of b* b
};

// Deterministic search over reduced-basis generator pairs, ordered by
// combined degree then list position. Exceeding the bound is a loud bound
// failure when alpha is in G_m (existence is then guaranteed).
ChosenB choose_b(const DatumPtr& datum, const Point& m, const Deg& alpha,
                 long degree_bound = 8);

struct ModuleTable {
  DatumPtr datum;
  SimpleModuleDescriptor descriptor;
  long window = 0;
  long degree_bound = 8;
  std::vector<Deg> basis;  // in-support offsets within the window, sorted
  std::map<Deg, Point> weight_points;
  std::map<Deg, ChosenB> chosen;  // keyed by offset relative to base_offset
  // Edge coefficients x_{beta,i} (raising) and y_{beta,i} (lowering), keyed by
  // the absolute source offset; entries exist only for edges inside the table.
  std::map<std::pair<Deg, std::size_t>, Polynomial> x_coeff;
  std::map<std::pair<Deg, std::size_t>, Polynomial> y_coeff;

  bool in_basis(const Deg& beta) const;
  bool in_support(const Deg& beta) const;
};

ModuleTable module_table(const DatumPtr& datum,
                         const SimpleModuleDescriptor& descriptor, long window,
                         long degree_bound = 8);

// Scalar by which the homogeneous element f t^gamma maps v_beta into
// v_{beta+gamma}: zero off the support, nullopt when the target is inside the
// support but outside the window (truncated, unknowable from this table).
std::optional<Rat> module_action_scalar(const ModuleTable& table, const Deg& gamma,
                                        const Polynomial& coeff, const Deg& beta);

struct ModuleCheckEntry {
  std::string check;
  bool pass = true;
  std::string detail;
};

struct ModuleCheckReport {
  std::vector<ModuleCheckEntry> entries;
  std::size_t relation_checks = 0;
  std::size_t relation_failures = 0;
  bool ok() const;
};

// (a) generator-pair relations act consistently on the window interior,
// (b) weight spaces are at most one-dimensional by construction,
// (c) cross-break vanishing, (d) R acts through evaluation at the translated
// weight point.
ModuleCheckReport verify_module(const ModuleTable& table);

}  // namespace br
