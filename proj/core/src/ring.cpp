#include "br/ring.hpp"

#include <algorithm>
#include <set>

namespace br {

RingPtr RingSpec::make(std::vector<std::string> vars, std::vector<bool> invertible,
                       MonoOrder order) {
  if (vars.empty()) throw Error("ring: at least one variable required");
  if (invertible.size() != vars.size())
    throw Error("ring: invertible flags must match variable count");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw Error("ring: empty variable name");
    if (!seen.insert(v).second) throw Error("ring: duplicate variable '" + v + "'");
  }
  auto r = std::make_shared<RingSpec>();
  r->vars = std::move(vars);
  r->invertible = std::move(invertible);
  r->order = order;
  return r;
}

std::size_t RingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return npos;
}

bool RingSpec::has_invertible() const {
  return std::find(invertible.begin(), invertible.end(), true) != invertible.end();
}

bool RingSpec::same_as(const RingSpec& other) const {
  return vars == other.vars && invertible == other.invertible && order == other.order;
}

long mono_total_degree(const Mono& m) {
  long d = 0;
  for (int e : m) d += e;
  return d;
}

bool mono_less(const Mono& a, const Mono& b, MonoOrder order) {
  if (order == MonoOrder::Lex) {
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != b[j]) return a[j] < b[j];
    return false;
  }
  if (order == MonoOrder::ElimFirst) {
    if (a[0] != b[0]) return a[0] < b[0];
    long da = mono_total_degree(a), db = mono_total_degree(b);
    if (da != db) return da < db;
    for (std::size_t j = a.size(); j-- > 1;)
      if (a[j] != b[j]) return a[j] > b[j];
    return false;
  }
  long da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db;
  // degrevlex: a > b iff the rightmost nonzero entry of a-b is negative.
  for (std::size_t j = a.size(); j-- > 0;)
    if (a[j] != b[j]) return a[j] > b[j];
  return false;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

Mono mono_add(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  return r;
}

Mono mono_sub(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = std::max(a[j], b[j]);
  return r;
}

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (a == b) return;
  if (a && b && a->same_as(*b)) return;
  throw Error(std::string(where) + ": ring mismatch");
}

}  // namespace br
