// Simplicity verdicts: exact at rank 1 via sigma-simplicity plus the lonely
// condition, and at rank n via necessary checks (Gamma-simplicity, central
// invariants, hyperplane conditions) with a tensor-of-simples sufficient
// route. Every verdict carries a replayable trail.
#pragma once

#include <optional>

#include "br/weight.hpp"

namespace br {

enum class Cert { Certified, Refuted, Unknown };

struct GammaSimpleResult {
  Cert status = Cert::Unknown;
  std::string method;             // certifier or refutation description
  std::optional<Ideal> witness;   // invariant proper ideal on refutation
};

// Certifiers: (a) full Laurent ring with diagonal scalings whose joint
// character map is injective (decided by prime factorization and integer
// kernels); (b) polynomial ring with a full-rank translation lattice;
// (c) a user-supplied assumption. Refutations search a candidate list of
// invariant ideals. Unknown is a first-class outcome.
GammaSimpleResult gamma_simple(const BellRogalskiDatum& datum,
                               const std::optional<std::string>& assume = {});

struct InvariantSubring {
  std::vector<Polynomial> generators;  // nonconstant generators of R^Gamma
  bool exact = false;                  // false when box-limited
  std::string note;
};

// Monomial generators of the Gamma-invariant subring for diagonal tuples:
// scaling coordinates contribute a character lattice kernel, shifted
// coordinates are excluded, and mixed scale+shift coordinates enter through
// their translation to the fixed point.
InvariantSubring invariant_subring(const BellRogalskiDatum& datum);

struct HyperplaneResult {
  std::size_t axis = 0;
  bool css_empty = false;                     // vacuous pass
  std::vector<std::pair<long, bool>> window;  // ideal-sum verdicts, k = 1..kmax
  std::optional<bool> exact_all;              // exact all-k verdict if decidable
  std::optional<long> exact_witness_k;
  std::string note;
};

// Condition (2): H_i J_i + sigma_i^k(H_i J_i) = R per k, decided by Groebner
// unit tests; the exact all-k verdict solves sigma_i^k(w) = w' on the break
// locus when it is zero-dimensional with rational points (condition (1)).
HyperplaneResult hyperplane_condition(const BellRogalskiDatum& datum,
                                      std::size_t axis, long k_max);

enum class SimplicityStatus { Simple, NotSimple, Inconclusive };

std::string status_str(SimplicityStatus s);

struct TrailEntry {
  std::string condition;
  // "pass" | "fail" | "certified" | "refuted" | "unknown" | "info" |
  // "established" (a sufficient route closed).
  std::string outcome;
  std::string witness;
};

struct Verdict {
  SimplicityStatus status = SimplicityStatus::Inconclusive;
  std::vector<TrailEntry> trail;
};

// Pure fold over the trail; verdict assembly uses exactly this, so replaying
// a recorded trail reproduces the status.
SimplicityStatus replay_trail(const std::vector<TrailEntry>& trail);

Verdict rank1_verdict(const BellRogalskiDatum& datum, long k_max = 12,
                      const std::optional<std::string>& assume = {});
Verdict rankn_verdict(const DatumPtr& datum, long k_max = 12,
                      const std::optional<std::string>& assume = {});

// Smallest k > 0 with sigma^k acting on `from` landing on `to`, for diagonal
// automorphisms; nullopt when no positive solution exists.
std::optional<long> positive_power_match(const Automorphism& sigma,
                                         const Point& from, const Point& to);

}  // namespace br
