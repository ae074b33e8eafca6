#include "br/datum_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace br {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = raw.find_last_not_of(" \t\r");
    lines.push_back({no, raw.substr(first, last - first + 1)});
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line.number) + ": " + msg,
                   line.number, 1);
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

// Shared layout of datum and TGWA files.
struct RawFile {
  std::optional<Line> ring_line;
  std::optional<Line> order_line;
  std::optional<Line> point_line;
  std::vector<std::pair<std::size_t, Line>> sigma_lines;  // (index, line)
  std::map<std::string, Rat> scalars;
  // keyed lines: "H 1", "J 2", "p 1 2", "a 1", "mu 1 2", "gamma 1 2"
  std::vector<std::pair<std::vector<std::string>, Line>> keyed;
};

RawFile scan_file(const std::string& text) {
  RawFile raw;
  for (const Line& line : split_lines(text)) {
    if (starts_with(line.text, "ring:")) {
      raw.ring_line = Line{line.number, trim(line.text.substr(5))};
    } else if (starts_with(line.text, "order:")) {
      raw.order_line = Line{line.number, trim(line.text.substr(6))};
    } else if (starts_with(line.text, "point:")) {
      raw.point_line = Line{line.number, trim(line.text.substr(6))};
    } else if (starts_with(line.text, "scalar ")) {
      auto eq = line.text.find('=');
      if (eq == std::string::npos) fail(line, "expected 'scalar <name> = <value>'");
      std::string name = trim(line.text.substr(7, eq - 7));
      if (name.empty()) fail(line, "missing scalar name");
      raw.scalars[name] = parse_rational(trim(line.text.substr(eq + 1)));
    } else if (starts_with(line.text, "sigma ")) {
      auto colon = line.text.find(':');
      if (colon == std::string::npos) fail(line, "expected 'sigma <i>: ...'");
      std::string idx = trim(line.text.substr(6, colon - 6));
      std::size_t i = 0;
      try {
        i = std::stoul(idx);
      } catch (...) {
        fail(line, "bad sigma index '" + idx + "'");
      }
      raw.sigma_lines.emplace_back(i, Line{line.number, trim(line.text.substr(colon + 1))});
    } else {
      auto eq = line.text.find('=');
      if (eq == std::string::npos) fail(line, "unrecognized line");
      std::vector<std::string> head;
      std::istringstream hs(line.text.substr(0, eq));
      std::string tok;
      while (hs >> tok) head.push_back(tok);
      if (head.empty()) fail(line, "unrecognized line");
      raw.keyed.emplace_back(head, Line{line.number, trim(line.text.substr(eq + 1))});
    }
  }
  return raw;
}

RingPtr parse_ring(const RawFile& raw) {
  if (!raw.ring_line) throw ParseError("missing 'ring:' line", 0, 0);
  std::vector<std::string> names;
  std::vector<bool> invertible;
  std::istringstream in(raw.ring_line->text);
  std::string tok;
  while (in >> tok) {
    bool inv = !tok.empty() && tok.back() == '*';
    if (inv) tok.pop_back();
    if (tok.empty()) fail(*raw.ring_line, "empty variable name");
    names.push_back(tok);
    invertible.push_back(inv);
  }
  MonoOrder order = MonoOrder::Degrevlex;
  if (raw.order_line) {
    if (raw.order_line->text == "degrevlex")
      order = MonoOrder::Degrevlex;
    else if (raw.order_line->text == "lex")
      order = MonoOrder::Lex;
    else
      fail(*raw.order_line, "unknown order '" + raw.order_line->text +
                                "' (degrevlex or lex)");
  }
  try {
    return RingSpec::make(names, invertible, order);
  } catch (const Error& e) {
    fail(*raw.ring_line, e.what());
  }
}

Automorphism parse_sigma(const RingPtr& ring, const Line& line,
                         const std::map<std::string, Rat>& scalars) {
  std::size_t n = ring->arity();
  std::vector<std::size_t> perm(n);
  std::vector<Rat> scale(n, Rat(1)), shift(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;
  for (const std::string& item : split(line.text, ',')) {
    if (item.empty()) continue;
    auto arrow = item.find("->");
    if (arrow == std::string::npos) fail(line, "expected '<var> -> <expr>'");
    std::string var = trim(item.substr(0, arrow));
    std::size_t j = ring->index_of(var);
    if (j == RingSpec::npos) fail(line, "unknown variable '" + var + "'");
    Polynomial img = Polynomial::zero(ring);
    try {
      img = Polynomial::parse(ring, trim(item.substr(arrow + 2)), &scalars);
    } catch (const ParseError& e) {
      fail(line, e.what());
    }
    // Pattern: c * x_target + d.
    std::optional<std::size_t> target;
    Rat c(0), d(0);
    for (auto& [m, coeff] : img.terms()) {
      long deg = 0;
      std::size_t which = 0;
      for (std::size_t t = 0; t < m.size(); ++t) {
        if (m[t] == 0) continue;
        deg += std::abs(m[t]);
        which = t;
      }
      if (deg == 0) {
        d = coeff;
      } else if (deg == 1 && !target) {
        target = which;
        c = coeff;
      } else {
        fail(line, "image of '" + var + "' must be c*<variable> + d");
      }
    }
    if (!target || c == 0)
      fail(line, "image of '" + var + "' must involve exactly one variable");
    perm[j] = *target;
    scale[j] = c;
    shift[j] = d;
  }
  try {
    return Automorphism::make(ring, perm, scale, shift);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

std::vector<Polynomial> parse_generators(const RingPtr& ring, const Line& line,
                                         const std::map<std::string, Rat>& scalars) {
  std::vector<Polynomial> gens;
  for (const std::string& item : split(line.text, ';')) {
    if (item.empty()) continue;
    try {
      gens.push_back(Polynomial::parse(ring, item, &scalars));
    } catch (const ParseError& e) {
      fail(line, e.what());
    }
  }
  return gens;
}

Rat parse_scalar_expr(const RingPtr& ring, const Line& line,
                      const std::map<std::string, Rat>& scalars) {
  Polynomial p = Polynomial::zero(ring);
  try {
    p = Polynomial::parse(ring, line.text, &scalars);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
  if (!p.is_constant()) fail(line, "expected a scalar value");
  return p.is_zero() ? Rat(0) : p.terms().begin()->second;
}

std::size_t axis_index(const std::vector<std::string>& head, std::size_t pos,
                       const Line& line, std::size_t n) {
  std::size_t i = 0;
  try {
    i = std::stoul(head[pos]);
  } catch (...) {
    fail(line, "bad axis index '" + head[pos] + "'");
  }
  if (i < 1 || i > n) fail(line, "axis index out of range 1.." + std::to_string(n));
  return i - 1;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty rational", 0, 0);
  bool neg = false;
  std::size_t pos = 0;
  if (s[pos] == '-') {
    neg = true;
    ++pos;
  } else if (s[pos] == '+') {
    ++pos;
  }
  std::string num, den;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    num += s[pos++];
  if (num.empty()) throw ParseError("bad rational '" + text + "'", 0, 0);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      den += s[pos++];
    if (den.empty()) throw ParseError("bad rational '" + text + "'", 0, 0);
  }
  if (pos != s.size()) throw ParseError("bad rational '" + text + "'", 0, 0);
  Rat r = den.empty() ? Rat(Int(num)) : Rat(Int(num), Int(den));
  r.canonicalize();
  return neg ? -r : r;
}

Point parse_point(const RingPtr& ring, const std::string& text,
                  const std::map<std::string, Rat>* scalars) {
  Point pt(ring->arity(), Rat(0));
  std::vector<bool> seen(ring->arity(), false);
  for (const std::string& item : split(text, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected '<var> = <value>' in point", 0, 0);
    std::string var = trim(item.substr(0, eq));
    std::size_t j = ring->index_of(var);
    if (j == RingSpec::npos)
      throw ParseError("unknown variable '" + var + "' in point", 0, 0);
    std::string val = trim(item.substr(eq + 1));
    Rat r;
    if (scalars && scalars->count(val)) {
      r = scalars->at(val);
    } else {
      r = parse_rational(val);
    }
    pt[j] = r;
    seen[j] = true;
  }
  for (std::size_t j = 0; j < ring->arity(); ++j) {
    if (!seen[j])
      throw ParseError("point misses variable '" + ring->vars[j] + "'", 0, 0);
    if (ring->invertible[j] && pt[j] == 0)
      throw ParseError("zero coordinate on invertible variable '" +
                           ring->vars[j] + "'",
                       0, 0);
  }
  return pt;
}

DatumFile parse_datum_file(const std::string& text, bool verify_membership) {
  RawFile raw = scan_file(text);
  RingPtr ring = parse_ring(raw);

  std::size_t n = raw.sigma_lines.size();
  if (n == 0) throw ParseError("missing 'sigma <i>:' lines", 0, 0);
  std::vector<std::optional<Automorphism>> sigma(n);
  for (auto& [idx, line] : raw.sigma_lines) {
    if (idx < 1 || idx > n)
      fail(line, "sigma indices must be 1.." + std::to_string(n));
    if (sigma[idx - 1]) fail(line, "duplicate sigma index");
    sigma[idx - 1] = parse_sigma(ring, line, raw.scalars);
  }

  std::vector<std::vector<Rat>> p(n, std::vector<Rat>(n, Rat(1)));
  std::vector<std::vector<bool>> p_given(n, std::vector<bool>(n, false));
  std::vector<std::optional<std::vector<Polynomial>>> hg(n), jg(n);
  for (auto& [head, line] : raw.keyed) {
    if (head[0] == "p" && head.size() == 3) {
      std::size_t i = axis_index(head, 1, line, n);
      std::size_t k = axis_index(head, 2, line, n);
      p[i][k] = parse_scalar_expr(ring, line, raw.scalars);
      p_given[i][k] = true;
    } else if (head[0] == "H" && head.size() == 2) {
      hg[axis_index(head, 1, line, n)] = parse_generators(ring, line, raw.scalars);
    } else if (head[0] == "J" && head.size() == 2) {
      jg[axis_index(head, 1, line, n)] = parse_generators(ring, line, raw.scalars);
    } else {
      fail(line, "unrecognized key '" + head[0] + "' in datum file");
    }
  }
  // Unspecified mirror entries default to the reciprocal; explicit entries are
  // kept as written so the validator can flag inconsistent input.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (p_given[i][k] && !p_given[k][i] && p[i][k] != 0) {
        p[k][i] = Rat(1) / p[i][k];
        p_given[k][i] = true;
      }

  std::vector<Ideal> h, j;
  for (std::size_t i = 0; i < n; ++i) {
    h.push_back(hg[i] ? Ideal::of(ring, *hg[i]) : Ideal::unit(ring));
    j.push_back(jg[i] ? Ideal::of(ring, *jg[i]) : Ideal::unit(ring));
  }
  std::vector<Automorphism> sig;
  for (auto& s : sigma) sig.push_back(*s);

  DatumFile out;
  out.datum = BellRogalskiDatum::make(ring, std::move(sig), std::move(p),
                                      std::move(h), std::move(j),
                                      verify_membership);
  out.scalars = raw.scalars;
  if (raw.point_line)
    out.point = parse_point(ring, raw.point_line->text, &raw.scalars);
  return out;
}

DatumFile load_datum_file(const std::string& path, bool verify_membership) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_datum_file(buf.str(), verify_membership);
}

std::string serialize_datum(const BellRogalskiDatum& datum) {
  std::ostringstream os;
  const RingPtr& ring = datum.ring();
  os << "ring:";
  for (std::size_t j = 0; j < ring->arity(); ++j)
    os << " " << ring->vars[j] << (ring->invertible[j] ? "*" : "");
  os << "\n";
  os << "order: " << (ring->order == MonoOrder::Lex ? "lex" : "degrevlex") << "\n";
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    os << "sigma " << i + 1 << ":";
    for (std::size_t j = 0; j < ring->arity(); ++j) {
      os << (j ? ", " : " ") << ring->vars[j] << " -> "
         << datum.sigma(i).image(j).to_string();
    }
    os << "\n";
  }
  for (std::size_t i = 0; i < datum.rank(); ++i)
    for (std::size_t k = i + 1; k < datum.rank(); ++k) {
      os << "p " << i + 1 << " " << k + 1 << " = " << rat_str(datum.p(i, k)) << "\n";
      if (datum.p(i, k) * datum.p(k, i) != 1)
        os << "p " << k + 1 << " " << i + 1 << " = " << rat_str(datum.p(k, i))
           << "\n";
    }
  auto gens = [&](const Ideal& ideal) {
    std::string s;
    for (const auto& g : ideal.generators())
      s += (s.empty() ? "" : "; ") + g.to_string();
    return s.empty() ? std::string("0") : s;
  };
  for (std::size_t i = 0; i < datum.rank(); ++i)
    os << "H " << i + 1 << " = " << gens(datum.h()[i]) << "\n";
  for (std::size_t i = 0; i < datum.rank(); ++i)
    os << "J " << i + 1 << " = " << gens(datum.j()[i]) << "\n";
  return os.str();
}

std::string datum_fingerprint(const BellRogalskiDatum& datum) {
  std::string text = serialize_datum(datum);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TgwaFile parse_tgwa_file(const std::string& text) {
  RawFile raw = scan_file(text);
  RingPtr ring = parse_ring(raw);
  std::size_t n = raw.sigma_lines.size();
  if (n == 0) throw ParseError("missing 'sigma <i>:' lines", 0, 0);
  std::vector<std::optional<Automorphism>> sigma(n);
  for (auto& [idx, line] : raw.sigma_lines) {
    if (idx < 1 || idx > n)
      fail(line, "sigma indices must be 1.." + std::to_string(n));
    if (sigma[idx - 1]) fail(line, "duplicate sigma index");
    sigma[idx - 1] = parse_sigma(ring, line, raw.scalars);
  }
  std::vector<std::optional<Polynomial>> a(n);
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(1)));
  std::vector<std::vector<Rat>> gamma(n, std::vector<Rat>(n, Rat(1)));
  for (auto& [head, line] : raw.keyed) {
    if (head[0] == "a" && head.size() == 2) {
      auto gens = parse_generators(ring, line, raw.scalars);
      if (gens.size() != 1) fail(line, "'a <i>' takes exactly one element");
      a[axis_index(head, 1, line, n)] = gens[0];
    } else if (head[0] == "mu" && head.size() == 3) {
      mu[axis_index(head, 1, line, n)][axis_index(head, 2, line, n)] =
          parse_scalar_expr(ring, line, raw.scalars);
    } else if (head[0] == "gamma" && head.size() == 3) {
      gamma[axis_index(head, 1, line, n)][axis_index(head, 2, line, n)] =
          parse_scalar_expr(ring, line, raw.scalars);
    } else {
      fail(line, "unrecognized key '" + head[0] + "' in TGWA file");
    }
  }
  TgwaFile out;
  out.tgwa.ring = ring;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i])
      throw ParseError("missing 'a " + std::to_string(i + 1) + " = ...'", 0, 0);
    out.tgwa.sigma.push_back(*sigma[i]);
    out.tgwa.a.push_back(*a[i]);
  }
  out.tgwa.mu = std::move(mu);
  out.tgwa.gamma = std::move(gamma);
  out.scalars = raw.scalars;
  return out;
}

TgwaFile load_tgwa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tgwa_file(buf.str());
}

std::string serialize_tgwa(const TgwaDatum& tgwa) {
  std::ostringstream os;
  const RingPtr& ring = tgwa.ring;
  os << "ring:";
  for (std::size_t j = 0; j < ring->arity(); ++j)
    os << " " << ring->vars[j] << (ring->invertible[j] ? "*" : "");
  os << "\n";
  os << "order: " << (ring->order == MonoOrder::Lex ? "lex" : "degrevlex") << "\n";
  for (std::size_t i = 0; i < tgwa.rank(); ++i) {
    os << "sigma " << i + 1 << ":";
    for (std::size_t j = 0; j < ring->arity(); ++j)
      os << (j ? ", " : " ") << ring->vars[j] << " -> "
         << tgwa.sigma[i].image(j).to_string();
    os << "\n";
  }
  for (std::size_t i = 0; i < tgwa.rank(); ++i)
    os << "a " << i + 1 << " = " << tgwa.a[i].to_string() << "\n";
  for (std::size_t i = 0; i < tgwa.rank(); ++i)
    for (std::size_t k = 0; k < tgwa.rank(); ++k) {
      if (i == k) continue;
      os << "mu " << i + 1 << " " << k + 1 << " = " << rat_str(tgwa.mu[i][k])
         << "\n";
      os << "gamma " << i + 1 << " " << k + 1 << " = "
         << rat_str(tgwa.gamma[i][k]) << "\n";
    }
  return os.str();
}

GradedElement parse_graded_element(const DatumPtr& datum, const std::string& text) {
  GradedElement out(datum);
  for (const std::string& item : split(text, ';')) {
    if (item.empty()) continue;
    auto open = item.find('[');
    auto close = item.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw ParseError("expected '[d1,...,dn]: <poly>'", 0, 0);
    auto colon = item.find(':', close);
    if (colon == std::string::npos)
      throw ParseError("expected ':' after the degree", 0, 0);
    Deg deg;
    for (const std::string& part :
         split(item.substr(open + 1, close - open - 1), ',')) {
      try {
        deg.push_back(std::stol(part));
      } catch (...) {
        throw ParseError("bad degree entry '" + part + "'", 0, 0);
      }
    }
    if (deg.size() != datum->rank())
      throw ParseError("degree must have " + std::to_string(datum->rank()) +
                           " entries",
                       0, 0);
    Polynomial coeff =
        Polynomial::parse(datum->ring(), trim(item.substr(colon + 1)));
    out += GradedElement::term(datum, deg, coeff);
  }
  return out;
}

}  // namespace br
