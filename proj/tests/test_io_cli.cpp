// File formats, reports, diagrams, and the command-line driver.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "br/datum_io.hpp"
#include "br/diagram.hpp"
#include "br/report.hpp"
#include "br/weight.hpp"

using namespace br;

#ifndef BR_CLI_PATH
#define BR_CLI_PATH "br"
#endif
#ifndef BR_DATA_DIR
#define BR_DATA_DIR "data"
#endif

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = std::string(BR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

std::string data_path(const std::string& name) {
  return std::string(BR_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("datum files parse, serialize, and fingerprint deterministically") {
  std::string text =
      "# demo\n"
      "ring: u* v*\n"
      "scalar p = 2\n"
      "sigma 1: u -> p*u, v -> 3*v\n"
      "H 1 = 1\n"
      "J 1 = u + v; (u + 1)^2\n"
      "point: u = -1, v = 1\n";
  DatumFile file = parse_datum_file(text);
  CHECK(file.datum->rank() == 1);
  CHECK(file.datum->validate().ok());
  REQUIRE(file.point.has_value());
  CHECK((*file.point)[0] == Rat(-1));

  std::string canon = serialize_datum(*file.datum);
  DatumFile again = parse_datum_file(canon);
  CHECK(serialize_datum(*again.datum) == canon);
  CHECK(datum_fingerprint(*again.datum) == datum_fingerprint(*file.datum));

  // Formatting-only changes keep the fingerprint.
  DatumFile spaced = parse_datum_file(
      "ring: u*   v*\nscalar p = 2\nsigma 1: u -> p * u, v -> 3*v\n"
      "H 1 = 1\nJ 1 = u + v ;  (u+1)^2\n");
  CHECK(datum_fingerprint(*spaced.datum) == datum_fingerprint(*file.datum));
}

TEST_CASE("datum file errors carry line numbers") {
  CHECK_THROWS_AS(parse_datum_file("sigma 1: z -> z\n"), ParseError);
  try {
    parse_datum_file("ring: z\nsigma 1: z -> z + 1\nJ 1 = z +\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  // mirror entries default to reciprocals; explicit mismatches survive to
  // validation
  DatumFile f = parse_datum_file(
      "ring: x y\nsigma 1: x -> x + 1\nsigma 2: y -> y + 1\np 1 2 = 5\n");
  CHECK(f.datum->p(1, 0) == Rat(1, 5));
  DatumFile bad = parse_datum_file(
      "ring: x y\nsigma 1: x -> x + 1\nsigma 2: y -> y + 1\n"
      "p 1 2 = 2\np 2 1 = 3\n");
  CHECK(!bad.datum->validate().ok());
}

TEST_CASE("tgwa files round trip") {
  std::string text = "ring: z\nsigma 1: z -> z + 1\na 1 = z\n";
  TgwaFile file = parse_tgwa_file(text);
  CHECK(file.tgwa.validate().ok());
  TgwaFile again = parse_tgwa_file(serialize_tgwa(file.tgwa));
  CHECK(serialize_tgwa(again.tgwa) == serialize_tgwa(file.tgwa));
}

TEST_CASE("graded element text form") {
  DatumFile file = parse_datum_file(
      "ring: z\nsigma 1: z -> z + 1\nH 1 = 1\nJ 1 = z + 1\n");
  auto e = parse_graded_element(file.datum, "[1]: z + 1 ; [-1]: 1");
  CHECK(e.support().size() == 2);
  CHECK_THROWS_AS(parse_graded_element(file.datum, "[1]: z"), MembershipError);
}

TEST_CASE("report rendering and schema checking") {
  Report rep;
  rep.command = "demo";
  rep.input = "x.brd";
  rep.fingerprint = "0123456789abcdef";
  rep.status = "ok";
  ReportNode node("result-block");
  node.add("answer", "42").add("nested", "deep");
  rep.result.push_back(node);
  std::string text = render_report(rep);
  CHECK(check_report_schema(text).empty());

  CHECK(!check_report_schema("nonsense\n").empty());
  CHECK(!check_report_schema("report:\n   badindent: x\n").empty());
  CHECK(!check_report_schema("report:\n  command: x\n").empty());  // missing keys
}

TEST_CASE("diagrams are deterministic and well-formed") {
  DatumFile file = parse_datum_file(
      "ring: x y\nsigma 1: x -> x + 1\nsigma 2: y -> y + 1\n"
      "J 1 = x * (x + 2)\nJ 2 = y * (y + 3)\npoint: x = 0, y = 0\n");
  auto cls = classify(*file.datum, *file.point, 4);
  std::string svg = diagram_svg(*file.datum, cls, 4);
  CHECK(svg == diagram_svg(*file.datum, cls, 4));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke=\"red\"") != std::string::npos);
  CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
  // 9 support rectangles
  std::size_t rects = 0, pos = 0;
  while ((pos = svg.find("fill-opacity", pos)) != std::string::npos) {
    ++rects;
    pos += 1;
  }
  CHECK(rects == 9);
  std::string tikz = diagram_tikz(*file.datum, cls, 4);
  CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(tikz.find("red") != std::string::npos);

  // rank 1: one break line, shaded rays
  DatumFile weyl = parse_datum_file(
      "ring: z\nsigma 1: z -> z + 1\nJ 1 = z + 1\npoint: z = 0\n");
  auto wcls = classify(*weyl.datum, *weyl.point, 4);
  std::string wsvg = diagram_svg(*weyl.datum, wcls, 4);
  CHECK(wsvg.find("stroke=\"red\"") != std::string::npos);
}

TEST_CASE("cli: reports are byte-identical across runs and schema-clean") {
  for (const char* args : {"validate", "classify", "simplicity", "gkdim"}) {
    std::string cmd = std::string(args) + " " + data_path("weyl.brd");
    int code1 = 0, code2 = 0;
    std::string out1 = run_cli(cmd, &code1);
    std::string out2 = run_cli(cmd, &code2);
    CHECK(out1 == out2);
    CHECK(code1 == 0);
    CHECK(code1 == code2);
    CHECK(check_report_schema(out1).empty());
  }
}

TEST_CASE("cli: exit codes follow the convention") {
  int code = 0;
  run_cli("validate " + data_path("weyl.brd"), &code);
  CHECK(code == 0);
  run_cli("validate /nonexistent.brd", &code);
  CHECK(code == 2);

  std::string bad = std::string("/tmp/br_bad_p.brd");
  {
    std::ofstream out(bad);
    out << "ring: x y\nsigma 1: x -> x + 1\nsigma 2: y -> y + 1\n"
           "p 1 2 = 2\np 2 1 = 3\n";
  }
  std::string text = run_cli("validate " + bad, &code);
  CHECK(code == 1);
  CHECK(text.find("antisymmetric: fail") != std::string::npos);

  // INCONCLUSIVE stays exit 0 with a distinct status field.
  std::string inc = std::string("/tmp/br_inconclusive.brd");
  {
    std::ofstream out(inc);
    out << "ring: u* v*\n"
           "sigma 1: u -> 2*u, v -> 3*v\n"
           "sigma 2: u -> 5*u, v -> 7*v\n"
           "J 1 = u\nJ 2 = u * v\n";
  }
  text = run_cli("simplicity " + inc, &code);
  CHECK(code == 0);
  CHECK(text.find("status: inconclusive") != std::string::npos);
  CHECK(text.find("INCONCLUSIVE") != std::string::npos);
}

TEST_CASE("cli: subcommand contracts") {
  int code = 0;
  std::string out =
      run_cli("mul " + data_path("weyl.brd") +
                  " --lhs \"[1]: z + 1\" --rhs \"[-1]: 1\"",
              &code);
  CHECK(code == 0);
  CHECK(out.find("value: [0]: z + 1") != std::string::npos);

  out = run_cli("ideal " + data_path("weyl.brd") + " --degree 2", &code);
  CHECK(code == 0);
  CHECK(out.find("z^2 + 3*z + 2") != std::string::npos);

  out = run_cli("classify " + data_path("weyl.brd") + " --window 6", &code);
  CHECK(code == 0);
  CHECK(out.find("descriptors: 2") != std::string::npos);

  out = run_cli("simplicity " + data_path("scaling_laurent.brd"), &code);
  CHECK(code == 0);
  CHECK(out.find("status: SIMPLE") != std::string::npos);

  out = run_cli("module-table " + data_path("weyl.brd") + " --window 3", &code);
  CHECK(code == 0);
  CHECK(out.find("relation-failures: 0") != std::string::npos);

  out = run_cli("tgwa to " + data_path("weyl.brd"), &code);
  CHECK(code == 0);
  CHECK(out.find("a 1 = z") != std::string::npos);

  out = run_cli("breaks " + data_path("shift_grid.brd"), &code);
  CHECK(code == 0);
  CHECK(out.find("classes: {-1, 1, inf}") != std::string::npos);
  CHECK(out.find("classes: {-1, 2, inf}") != std::string::npos);

  // timing is opt-in so default output stays deterministic
  out = run_cli("gkdim " + data_path("weyl.brd") + " --timing", &code);
  CHECK(out.find("timing:") != std::string::npos);
}

TEST_CASE("cli: diagram files and the report checker") {
  int code = 0;
  run_cli("diagram " + data_path("shift_grid.brd") +
              " --svg /tmp/br_grid.svg --tikz /tmp/br_grid.tex",
          &code);
  CHECK(code == 0);
  std::ifstream svg("/tmp/br_grid.svg");
  REQUIRE(svg.good());
  std::string first;
  std::getline(svg, first);
  CHECK(first.find("<svg") != std::string::npos);

  std::string report = run_cli("classify " + data_path("weyl.brd"), &code);
  {
    std::ofstream out("/tmp/br_report.txt");
    out << report;
  }
  run_cli("check-report /tmp/br_report.txt", &code);
  CHECK(code == 0);
  {
    std::ofstream out("/tmp/br_report_bad.txt");
    out << "not: a report\n";
  }
  run_cli("check-report /tmp/br_report_bad.txt", &code);
  CHECK(code == 1);
}
