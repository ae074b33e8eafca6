// Text formats: datum files, TGWA files, graded elements, points.
//
// Datum files are line-oriented key/value blocks:
//
//   # comment
//   ring: u* v*            '*' marks invertible (Laurent) variables
//   order: degrevlex       optional: degrevlex | lex
//   scalar p = 2           optional bindings usable in later expressions
//   sigma 1: u -> p*u, v -> 3*v
//   p 1 2 = 5              scalar matrix entries (rank >= 2); default 1
//   H 1 = 1                ';'-separated generators; omitted axis means R
//   J 1 = u + v; (u + 1)^2
//   point: u = -1, v = 1   optional default base point
//
// The rank is the number of sigma lines; sigma indices must be 1..n.
#pragma once

#include "br/structure.hpp"

namespace br {

struct DatumFile {
  DatumPtr datum;
  std::map<std::string, Rat> scalars;
  std::optional<Point> point;
};

DatumFile parse_datum_file(const std::string& text, bool verify_membership = true);
DatumFile load_datum_file(const std::string& path, bool verify_membership = true);

// Canonical serialization; equal data print identically.
std::string serialize_datum(const BellRogalskiDatum& datum);

// FNV-1a 64 hash of the canonical serialization, as 16 hex digits.
std::string datum_fingerprint(const BellRogalskiDatum& datum);

struct TgwaFile {
  TgwaDatum tgwa;
  std::map<std::string, Rat> scalars;
};

// Same block format with `a i = <poly>`, `mu i k = <scalar>`,
// `gamma i k = <scalar>` lines in place of H/J/p.
TgwaFile parse_tgwa_file(const std::string& text);
TgwaFile load_tgwa_file(const std::string& path);
std::string serialize_tgwa(const TgwaDatum& tgwa);

// "[1,0]: u + v ; [0,-1]: 1"
GradedElement parse_graded_element(const DatumPtr& datum, const std::string& text);

// "u = -1, v = 1"
Point parse_point(const RingPtr& ring, const std::string& text,
                  const std::map<std::string, Rat>* scalars = nullptr);

Rat parse_rational(const std::string& text);

}  // namespace br
