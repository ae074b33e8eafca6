#include "br/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace br {

namespace {

void check_exponents(const RingSpec& ring, const Mono& m) {
  if (m.size() != ring.arity())
    throw Error("polynomial: exponent vector arity mismatch");
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] < 0 && !ring.invertible[j])
      throw Error("polynomial: negative exponent on non-invertible variable '" +
                  ring.vars[j] + "'");
}

}  // namespace

Polynomial::Polynomial(RingPtr ring)
    : ring_(std::move(ring)), terms_(MonoLess{ring_->order}) {
  if (!ring_) throw Error("polynomial: null ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Rat& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace(Mono(p.ring_->arity(), 0), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, int power) {
  Polynomial p(std::move(ring));
  if (index >= p.ring_->arity()) throw Error("polynomial: variable index out of range");
  Mono m(p.ring_->arity(), 0);
  m[index] = power;
  check_exponents(*p.ring_, m);
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Mono mono, const Rat& coeff) {
  Polynomial p(std::move(ring));
  check_exponents(*p.ring_, mono);
  if (coeff != 0) p.terms_.emplace(std::move(mono), coeff);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return mono_total_degree(terms_.begin()->first) == 0 &&
         *std::max_element(terms_.begin()->first.begin(),
                           terms_.begin()->first.end()) == 0 &&
         *std::min_element(terms_.begin()->first.begin(),
                           terms_.begin()->first.end()) == 0;
}

const Mono& Polynomial::leading_mono() const {
  if (terms_.empty()) throw Error("polynomial: leading term of zero");
  return terms_.rbegin()->first;
}

const Rat& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw Error("polynomial: leading term of zero");
  return terms_.rbegin()->second;
}

long Polynomial::total_degree() const {
  long d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
  return d;
}

void Polynomial::add_term(const Mono& mono, const Rat& c) {
  if (c == 0) return;
  check_exponents(*ring_, mono);
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(ring_, o.ring_, "polynomial +");
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(ring_, o.ring_, "polynomial -");
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a.ring_, b.ring_, "polynomial *");
  Polynomial r(a.ring_);
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(mono_add(ma, mb), ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_, "polynomial ==");
  return terms_ == o.terms_;
}

Polynomial Polynomial::pow(long e) const {
  if (e == 0) return one(ring_);
  if (e < 0) {
    if (!is_term()) throw Error("polynomial: negative power of a non-term");
    const auto& [m, c] = *terms_.begin();
    Mono neg(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) neg[j] = -m[j];
    check_exponents(*ring_, neg);
    return term(ring_, neg, Rat(1) / c).pow(-e);
  }
  Polynomial base = *this, acc = one(ring_);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r(*this);
  r *= Rat(1) / leading_coeff();
  return r;
}

Rat Polynomial::eval(const Point& pt) const {
  if (pt.size() != ring_->arity()) throw Error("eval: wrong point arity");
  for (std::size_t j = 0; j < pt.size(); ++j)
    if (ring_->invertible[j] && pt[j] == 0)
      throw Error("eval: zero coordinate on invertible variable '" +
                  ring_->vars[j] + "'");
  Rat acc(0);
  for (auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] != 0) t *= rat_pow(pt[j], m[j]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->arity())
    throw Error("substitute: one image per variable required");
  Polynomial acc(target);
  for (auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] != 0) t *= images[j].pow(m[j]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::laurent_normalize() const {
  if (is_zero()) return *this;
  Mono shift(ring_->arity(), 0);
  for (std::size_t j = 0; j < ring_->arity(); ++j) {
    if (!ring_->invertible[j]) continue;
    int mn = 0;
    for (auto& [m, c] : terms_) mn = std::min(mn, m[j]);
    shift[j] = -mn;
  }
  if (std::all_of(shift.begin(), shift.end(), [](int e) { return e == 0; }))
    return *this;
  Polynomial r(ring_);
  for (auto& [m, c] : terms_) r.terms_.emplace(mono_add(m, shift), c);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Mono& m = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    std::string mono_txt;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      if (!mono_txt.empty()) mono_txt += "*";
      mono_txt += ring_->vars[j];
      if (m[j] != 1) mono_txt += "^" + std::to_string(m[j]);
    }
    if (mono_txt.empty()) {
      os << rat_str(c);
    } else if (c == 1) {
      os << mono_txt;
    } else {
      os << rat_str(c) << "*" << mono_txt;
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos + 1), 1, pos + 1);
  }
};

class PolyParser {
public:
  PolyParser(const RingPtr& ring, const std::string& text,
             const std::map<std::string, Rat>* scalars)
      : ring_(ring), lex_{text}, scalars_(scalars) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    if (!lex_.eof()) lex_.fail("unexpected trailing input");
    return p;
  }

private:
  RingPtr ring_;
  Lexer lex_;
  const std::map<std::string, Rat>* scalars_;

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    while (true) {
      if (lex_.accept('+')) {
        acc += parse_term();
      } else if (lex_.accept('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (lex_.accept('*')) acc *= parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (lex_.accept('^')) {
      long e = parse_integer();
      if (e < 0 && !base.is_term())
        lex_.fail("negative exponent requires an invertible monomial base");
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_base() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.accept('(');
      Polynomial inner = parse_expr();
      if (!lex_.accept(')')) lex_.fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      lex_.accept('-');
      return -parse_factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
    lex_.fail("expected a variable, number, or '('");
  }

  long parse_integer() {
    lex_.skip_ws();
    bool neg = lex_.accept('-');
    lex_.skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(lex_.peek()))) lex_.fail("expected integer");
    long v = 0;
    while (lex_.pos < lex_.s.size() &&
           std::isdigit(static_cast<unsigned char>(lex_.s[lex_.pos]))) {
      v = v * 10 + (lex_.s[lex_.pos] - '0');
      ++lex_.pos;
    }
    return neg ? -v : v;
  }

  Polynomial parse_rational() {
    std::string digits;
    while (lex_.pos < lex_.s.size() &&
           std::isdigit(static_cast<unsigned char>(lex_.s[lex_.pos])))
      digits += lex_.s[lex_.pos++];
    Rat v{Int(digits)};
    if (lex_.accept('/')) {
      std::string den;
      lex_.skip_ws();
      while (lex_.pos < lex_.s.size() &&
             std::isdigit(static_cast<unsigned char>(lex_.s[lex_.pos])))
        den += lex_.s[lex_.pos++];
      if (den.empty()) lex_.fail("expected denominator");
      Int d(den);
      if (d == 0) lex_.fail("zero denominator");
      v /= Rat(d);
    }
    return Polynomial::constant(ring_, v);
  }

  Polynomial parse_name() {
    std::string name;
    while (lex_.pos < lex_.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lex_.s[lex_.pos])) ||
            lex_.s[lex_.pos] == '_'))
      name += lex_.s[lex_.pos++];
    std::size_t idx = ring_->index_of(name);
    if (idx != RingSpec::npos) return Polynomial::variable(ring_, idx);
    if (scalars_) {
      auto it = scalars_->find(name);
      if (it != scalars_->end()) return Polynomial::constant(ring_, it->second);
    }
    lex_.fail("unknown name '" + name + "'");
  }
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text,
                             const std::map<std::string, Rat>* scalars) {
  return PolyParser(ring, text, scalars).run();
}

bool poly_canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() != b.is_zero()) return a.is_zero();
  if (a.is_zero()) return false;
  MonoOrder ord = a.ring()->order;
  if (a.leading_mono() != b.leading_mono())
    return mono_less(a.leading_mono(), b.leading_mono(), ord);
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return mono_less(ia->first, ib->first, ord);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

}  // namespace br
