// Sparse exact-rational multivariate polynomials with Laurent variables.
//
// Terms are kept in a map ordered by the ring's monomial order, so iteration,
// printing, and leading-term queries are deterministic for a fixed ring.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "br/rational.hpp"
#include "br/ring.hpp"

namespace br {

using Point = std::vector<Rat>;

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : Error(msg), line(line), col(col) {}
  std::size_t line, col;
};

struct MonoLess {
  MonoOrder order = MonoOrder::Degrevlex;
  bool operator()(const Mono& a, const Mono& b) const {
    return mono_less(a, b, order);
  }
};

class Polynomial {
public:
  using TermMap = std::map<Mono, Rat, MonoLess>;

  explicit Polynomial(RingPtr ring);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rat& c);
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), Rat(1)); }
  static Polynomial variable(RingPtr ring, std::size_t index, int power = 1);
  static Polynomial term(RingPtr ring, Mono mono, const Rat& coeff);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Nonzero single-term test; exposes the monomial/coefficient when it is.
  bool is_term() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }

  const Mono& leading_mono() const;
  const Rat& leading_coeff() const;
  long total_degree() const;  // max over terms; 0 for the zero polynomial

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rat& c);
  friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
  friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(long e) const;  // negative e only for invertible single terms
  Polynomial monic() const;      // leading coefficient scaled to 1

  // Adds c * x^mono, dropping the term if it cancels to zero.
  void add_term(const Mono& mono, const Rat& c);

  // Exact evaluation; invertible coordinates must be nonzero.
  Rat eval(const Point& pt) const;

  // Substitute each variable by the given image polynomial (all over `target`).
  Polynomial substitute(const RingPtr& target,
                        const std::vector<Polynomial>& images) const;

  // Multiply by the invertible-variable monomial that clears all negative
  // exponents (identity when none). Membership tests are invariant under this.
  Polynomial laurent_normalize() const;

  std::string to_string() const;

  // Canonical text form. Names may also resolve through `scalars`.
  static Polynomial parse(const RingPtr& ring, const std::string& text,
                          const std::map<std::string, Rat>* scalars = nullptr);

private:
  RingPtr ring_;
  TermMap terms_;
};

// Deterministic ordering used for generator lists: by leading monomial,
// then term count, then termwise comparison.
bool poly_canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace br
