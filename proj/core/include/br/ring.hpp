// Ring descriptors: named variables, Laurent (invertible) flags, monomial order.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "br/rational.hpp"

namespace br {

// ElimFirst is internal: a block order that eliminates the first variable
// (used for saturation); datum files only expose degrevlex and lex.
enum class MonoOrder { Degrevlex, Lex, ElimFirst };

// Exponent vector; entries may be negative only on invertible variables.
using Mono = std::vector<int>;

struct RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

struct RingSpec {
  std::vector<std::string> vars;
  std::vector<bool> invertible;
  MonoOrder order = MonoOrder::Degrevlex;

  static RingPtr make(std::vector<std::string> vars, std::vector<bool> invertible,
                      MonoOrder order = MonoOrder::Degrevlex);

  std::size_t arity() const { return vars.size(); }
  // Index of a variable name, or npos.
  std::size_t index_of(const std::string& name) const;
  bool has_invertible() const;
  bool same_as(const RingSpec& other) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Strict total order on exponent vectors extending the named monomial order
// to the full lattice (negative exponents compare by the same rules).
bool mono_less(const Mono& a, const Mono& b, MonoOrder order);

long mono_total_degree(const Mono& m);

// a divides b componentwise (used only in the nonnegative Groebner context).
bool mono_divides(const Mono& a, const Mono& b);

Mono mono_add(const Mono& a, const Mono& b);
Mono mono_sub(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b);

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace br
