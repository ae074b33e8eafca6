// Exact rational scalars and the bits of integer arithmetic the rest of the
// library leans on: factorization, integer kernels, linear solving.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace br {

using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// q^e for any integer e; throws on 0^negative.
Rat rat_pow(const Rat& q, long e);

std::string rat_str(const Rat& q);

// Prime factorization of a nonzero rational: sign and prime -> exponent
// (negative exponents come from the denominator).
struct Factorization {
  int sign = 1;
  std::map<Int, long> primes;
};

Factorization factor_rational(const Rat& q);
std::map<Int, long> factor_integer(Int n);

// Multiplicative order of q in Q^x: 1, 2, or 0 for infinite.
long multiplicative_order(const Rat& q);

// Basis of { x in Z^c : A x = 0 } for an integer matrix given by rows.
// Computed by unimodular column reduction, so the result is a lattice basis
// of the full kernel, not just a finite-index sublattice.
std::vector<std::vector<Int>> integer_kernel(
    const std::vector<std::vector<Int>>& rows, std::size_t cols);

enum class SolveOutcome { Unique, NoSolution, Underdetermined };

// Solve A x = b over the rationals.
struct LinearSolution {
  SolveOutcome outcome = SolveOutcome::NoSolution;
  std::vector<Rat> x;  // valid when outcome == Unique
};

LinearSolution solve_linear(const std::vector<std::vector<Rat>>& rows,
                            const std::vector<Rat>& rhs);

// Rational roots of a dense univariate polynomial (coeffs[i] is the x^i
// coefficient). `fully_split` is true when the polynomial factors completely
// into rational linear factors, i.e. the returned roots account for the whole
// degree.
struct RationalRoots {
  std::vector<std::pair<Rat, long>> roots;  // (root, multiplicity)
  bool fully_split = true;
};

RationalRoots rational_roots(const std::vector<Rat>& coeffs);

}  // namespace br
