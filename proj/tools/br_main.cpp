// br: batch driver for Bell-Rogalski algebra computations.
//
// Exit codes: 0 success (including INCONCLUSIVE verdicts), 1 semantic
// failure, 2 parse failure.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "br/datum_io.hpp"
#include "br/diagram.hpp"
#include "br/report.hpp"
#include "br/simplicity.hpp"

namespace {

using namespace br;

struct CommonOpts {
  std::string datum_path;
  std::string point_text;
  long window = 6;
  long kmax = 12;
  long degree_bound = 8;
  bool no_verify = false;
  bool timing = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_datum = true) {
  if (needs_datum)
    cmd->add_option("datum", opts.datum_path, "datum file")->required();
  cmd->add_option("--point", opts.point_text,
                  "base point, e.g. \"z = 0\" (defaults to the file's point)");
  cmd->add_option("--window", opts.window, "lattice window bound (default 6)");
  cmd->add_option("--kmax", opts.kmax, "hyperplane check bound (default 12)");
  cmd->add_option("--degree-bound", opts.degree_bound,
                  "combined generator-degree bound for b-choices (default 8)");
  cmd->add_flag("--no-verify", opts.no_verify,
                "skip coefficient membership re-verification");
  cmd->add_flag("--timing", opts.timing, "append a timing line to the report");
  cmd->add_option("--out", opts.out_path, "also write the report/output here");
}

Point resolve_point(const DatumFile& file, const CommonOpts& opts) {
  if (!opts.point_text.empty())
    return parse_point(file.datum->ring(), opts.point_text, &file.scalars);
  if (file.point) return *file.point;
  throw Error("no base point: pass --point or add a 'point:' line to the datum");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

ReportNode validation_node(const ValidationReport& v) {
  ReportNode node("validation");
  for (const auto& e : v.entries) {
    ReportNode& c = node.add(e.axiom, e.pass ? "pass" : "fail");
    if (!e.witness.empty()) c.add("witness", e.witness);
  }
  return node;
}

ReportNode axes_node(const std::vector<BreakAxis>& axes,
                     const BellRogalskiDatum& datum, const Point& base) {
  ReportNode node("break-classes");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    ReportNode axis("axis " + std::to_string(i + 1));
    std::string offs;
    for (long a : axes[i].offsets) offs += (offs.empty() ? "" : ", ") + std::to_string(a);
    axis.add("classes", "{" + offs + (offs.empty() ? "inf" : ", inf") + "}");
    axis.add("count", std::to_string(axes[i].offsets.size() + 1));
    axis.add("exact", axes[i].exact ? "true" : "false");
    if (!axes[i].caveat.empty()) axis.add("caveat", axes[i].caveat);
    for (long a : axes[i].offsets) {
      Deg e(datum.rank(), 0);
      e[i] = a;
      Point rep = datum.orbit_point(base, e);
      std::string coords;
      for (std::size_t j = 0; j < rep.size(); ++j)
        coords += (j ? ", " : "") + datum.ring()->vars[j] + " = " + rat_str(rep[j]);
      axis.add("representative at offset " + std::to_string(a), coords);
    }
    node.add(std::move(axis));
  }
  return node;
}

std::string interval_str(const AxisInterval& iv) { return iv.to_string(); }

ReportNode descriptor_node(const SimpleModuleDescriptor& d, std::size_t index) {
  ReportNode node("descriptor " + std::to_string(index + 1));
  std::string breaks;
  for (std::size_t i = 0; i < d.breaks.size(); ++i)
    breaks += (i ? ", " : "") + (d.breaks[i] ? std::to_string(*d.breaks[i])
                                             : std::string("inf"));
  node.add("break-tuple", "(" + breaks + ")");
  for (std::size_t i = 0; i < d.support.size(); ++i)
    node.add("support axis " + std::to_string(i + 1), interval_str(d.support[i]));
  node.add("base-offset", deg_str(d.base_offset));
  return node;
}

ReportNode trail_nodes(const Verdict& v) {
  ReportNode node("conditions");
  for (std::size_t i = 0; i < v.trail.size(); ++i) {
    const auto& e = v.trail[i];
    ReportNode& c =
        node.add("step " + std::to_string(i + 1), "[" + e.outcome + "] " + e.condition);
    if (!e.witness.empty()) c.add("witness", e.witness);
  }
  return node;
}

int emit(Report& report, const CommonOpts& opts,
         std::chrono::steady_clock::time_point start) {
  if (opts.timing) {
    auto end = std::chrono::steady_clock::now();
    report.seconds = std::chrono::duration<double>(end - start).count();
  }
  std::string text = render_report(report);
  std::cout << text;
  if (!opts.out_path.empty()) write_file(opts.out_path, text);
  if (report.status == "error") return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Bell-Rogalski algebra toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string lhs_text, rhs_text, degree_text, right_path, phi_text, gamma_text;
  std::string svg_path, tikz_path, tgwa_direction, report_path, assume_text;
  std::vector<std::string> twist_entries;
  long descriptor_index = 0;
  std::size_t axis = 0;

  auto* c_validate = app.add_subcommand("validate", "check the datum axioms");
  add_common(c_validate, opts);

  auto* c_mul = app.add_subcommand("mul", "multiply two graded elements");
  add_common(c_mul, opts);
  c_mul->add_option("--lhs", lhs_text, "left element, e.g. \"[1]: z + 1\"")->required();
  c_mul->add_option("--rhs", rhs_text, "right element")->required();

  auto* c_ideal = app.add_subcommand("ideal", "canonical degree ideal I^(alpha)");
  add_common(c_ideal, opts);
  c_ideal->add_option("--degree", degree_text, "degree, e.g. \"2,0\"")->required();

  auto* c_breaks = app.add_subcommand("breaks", "break classes per axis");
  add_common(c_breaks, opts);

  auto* c_classify =
      app.add_subcommand("classify", "simple weight modules on the orbit");
  add_common(c_classify, opts);

  auto* c_table = app.add_subcommand("module-table", "action table of one module");
  add_common(c_table, opts);
  c_table->add_option("--descriptor", descriptor_index,
                      "descriptor number from classify (default 1)");

  auto* c_tgwa = app.add_subcommand("tgwa", "convert to/from TGWA data");
  c_tgwa->add_option("direction", tgwa_direction, "'to' or 'from'")->required();
  add_common(c_tgwa, opts);

  auto* c_tensor = app.add_subcommand("tensor", "twisted tensor product");
  add_common(c_tensor, opts);
  c_tensor->add_option("right", right_path, "right datum file")->required();
  c_tensor->add_option("--d", twist_entries,
                       "twist entry \"i,k=value\" (repeatable; default 1)");

  auto* c_fixed = app.add_subcommand("fixed-ring", "invariant datum");
  add_common(c_fixed, opts);
  c_fixed->add_option("--phi", phi_text, "diagonal symmetry, e.g. \"u -> -u\"");
  c_fixed->add_option("--gamma", gamma_text, "scalars, e.g. \"1,-1\"")->required();

  auto* c_gkdim = app.add_subcommand("gkdim", "GK dimension with checklist");
  add_common(c_gkdim, opts);

  auto* c_simpl = app.add_subcommand("simplicity", "simplicity verdict");
  add_common(c_simpl, opts);
  c_simpl->add_option("--assume-gamma-simple", assume_text,
                      "record a user assumption that R is Gamma-simple");

  auto* c_diagram = app.add_subcommand("diagram", "orbit/break/support diagram");
  add_common(c_diagram, opts);
  c_diagram->add_option("--svg", svg_path, "write an SVG file");
  c_diagram->add_option("--tikz", tikz_path, "write a TikZ fragment");

  auto* c_check = app.add_subcommand("check-report", "validate report structure");
  c_check->add_option("report", report_path, "report file")->required();

  CLI11_PARSE(app, argc, argv);
  auto start = std::chrono::steady_clock::now();

  Report report;
  report.input = opts.datum_path;
  report.status = "ok";

  try {
    if (c_check->parsed()) {
      report.command = "check-report";
      report.input = report_path;
      std::ifstream in(report_path);
      if (!in) throw ParseError("cannot open '" + report_path + "'", 0, 0);
      std::ostringstream buf;
      buf << in.rdbuf();
      auto problems = check_report_schema(buf.str());
      report.fingerprint = "-";
      ReportNode node("schema");
      node.add("problems", std::to_string(problems.size()));
      for (std::size_t i = 0; i < problems.size(); ++i)
        node.add("problem " + std::to_string(i + 1), problems[i]);
      report.result.push_back(std::move(node));
      if (!problems.empty()) report.status = "error";
      return emit(report, opts, start);
    }

    if (c_tgwa->parsed() && tgwa_direction == "from") {
      report.command = "tgwa from";
      TgwaFile file = load_tgwa_file(opts.datum_path);
      ValidationReport tv = file.tgwa.validate();
      DatumPtr out = from_tgwa(file.tgwa);
      report.fingerprint = datum_fingerprint(*out);
      ReportNode node("datum");
      std::istringstream lines(serialize_datum(*out));
      std::string line;
      std::size_t no = 0;
      while (std::getline(lines, line)) node.add("line " + std::to_string(++no), line);
      report.result.push_back(std::move(node));
      report.trail.push_back(validation_node(tv));
      report.trail.push_back(validation_node(out->validate()));
      if (!opts.out_path.empty()) {
        write_file(opts.out_path, serialize_datum(*out));
        opts.out_path.clear();
      }
      return emit(report, opts, start);
    }

    DatumFile file = load_datum_file(opts.datum_path, !opts.no_verify);
    const DatumPtr& datum = file.datum;
    report.fingerprint = datum_fingerprint(*datum);

    if (c_validate->parsed()) {
      report.command = "validate";
      ValidationReport v = datum->validate();
      report.result.push_back(validation_node(v));
      if (!v.ok()) report.status = "error";
    } else if (c_mul->parsed()) {
      report.command = "mul";
      GradedElement a = parse_graded_element(datum, lhs_text);
      GradedElement b = parse_graded_element(datum, rhs_text);
      GradedElement prod = a * b;
      ReportNode node("product");
      node.add("lhs", a.to_string());
      node.add("rhs", b.to_string());
      node.add("value", prod.to_string());
      report.result.push_back(std::move(node));
    } else if (c_ideal->parsed()) {
      report.command = "ideal";
      Deg deg;
      for (const std::string& part : [&] {
             std::vector<std::string> items;
             std::istringstream in(degree_text);
             std::string item;
             while (std::getline(in, item, ',')) items.push_back(item);
             return items;
           }())
        deg.push_back(std::stol(part));
      if (deg.size() != datum->rank())
        throw Error("degree must have " + std::to_string(datum->rank()) +
                    " entries");
      Ideal ideal = datum->canonical_ideal(deg);
      ReportNode node("canonical-ideal");
      node.add("degree", deg_str(deg));
      const auto& basis = ideal.groebner();
      node.add("basis-size", std::to_string(basis.size()));
      for (std::size_t i = 0; i < basis.size(); ++i)
        node.add("generator " + std::to_string(i + 1), basis[i].to_string());
      node.add("unit", ideal.is_unit() ? "true" : "false");
      report.result.push_back(std::move(node));
    } else if (c_breaks->parsed()) {
      report.command = "breaks";
      Point base = resolve_point(file, opts);
      TorsionReport tr = is_torsion_free(*datum, base, opts.window);
      if (!tr.torsion_free)
        throw Error("orbit is not torsion-free; stabilizer contains " +
                    deg_str(tr.stabilizer.at(0)));
      auto axes = break_classes(*datum, base, opts.window);
      report.result.push_back(axes_node(axes, *datum, base));
    } else if (c_classify->parsed()) {
      report.command = "classify";
      Point base = resolve_point(file, opts);
      Classification cls = classify(*datum, base, opts.window);
      ReportNode node("classification");
      node.add("torsion-free", cls.torsion.torsion_free ? "true" : "false");
      node.add("exact", cls.exact ? "true" : "false");
      if (!cls.caveat.empty()) node.add("caveat", cls.caveat);
      node.add("descriptors", std::to_string(cls.descriptors.size()));
      report.result.push_back(std::move(node));
      report.result.push_back(axes_node(cls.axes, *datum, base));
      ReportNode list("modules");
      for (std::size_t i = 0; i < cls.descriptors.size(); ++i)
        list.add(descriptor_node(cls.descriptors[i], i));
      report.result.push_back(std::move(list));
      if (!cls.exact) report.status = "inconclusive";
    } else if (c_table->parsed()) {
      report.command = "module-table";
      Point base = resolve_point(file, opts);
      Classification cls = classify(*datum, base, opts.window);
      if (descriptor_index < 0 ||
          descriptor_index > static_cast<long>(cls.descriptors.size()))
        throw Error("descriptor index out of range 1.." +
                    std::to_string(cls.descriptors.size()));
      std::size_t which = descriptor_index == 0 ? 0 : descriptor_index - 1;
      ModuleTable table = module_table(datum, cls.descriptors[which],
                                       opts.window, opts.degree_bound);
      report.result.push_back(descriptor_node(table.descriptor, which));
      ReportNode node("table");
      node.add("basis-size", std::to_string(table.basis.size()));
      for (const Deg& beta : table.basis) {
        ReportNode row("v" + deg_str(beta));
        const Point& pw = table.weight_points.at(beta);
        std::string coords;
        for (std::size_t j = 0; j < pw.size(); ++j)
          coords += (j ? ", " : "") + datum->ring()->vars[j] + " = " + rat_str(pw[j]);
        row.add("weight", coords);
        for (std::size_t i = 0; i < datum->rank(); ++i) {
          auto xit = table.x_coeff.find({beta, i});
          if (xit != table.x_coeff.end())
            row.add("x axis " + std::to_string(i + 1), xit->second.to_string());
          auto yit = table.y_coeff.find({beta, i});
          if (yit != table.y_coeff.end())
            row.add("y axis " + std::to_string(i + 1), yit->second.to_string());
        }
        node.add(std::move(row));
      }
      report.result.push_back(std::move(node));
      ModuleCheckReport chk = verify_module(table);
      ReportNode ver("verification");
      ver.add("relation-checks", std::to_string(chk.relation_checks));
      ver.add("relation-failures", std::to_string(chk.relation_failures));
      for (const auto& e : chk.entries) {
        ReportNode& c = ver.add(e.check, e.pass ? "pass" : "fail");
        if (!e.detail.empty()) c.add("detail", e.detail);
      }
      report.trail.push_back(std::move(ver));
      if (!chk.ok()) report.status = "error";
    } else if (c_tgwa->parsed()) {
      if (tgwa_direction != "to")
        throw Error("tgwa direction must be 'to' or 'from'");
      report.command = "tgwa to";
      TgwaConversion conv = to_tgwa(datum);
      ReportNode node("tgwa");
      std::istringstream lines(serialize_tgwa(conv.tgwa));
      std::string line;
      std::size_t no = 0;
      while (std::getline(lines, line)) node.add("line " + std::to_string(++no), line);
      report.result.push_back(std::move(node));
      ReportNode units("unit-tables");
      for (std::size_t i = 0; i < datum->rank(); ++i)
        for (std::size_t k = 0; k < datum->rank(); ++k) {
          if (i == k) continue;
          units.add("u " + std::to_string(i + 1) + " " + std::to_string(k + 1),
                    conv.u[i][k].to_string());
          units.add("v " + std::to_string(i + 1) + " " + std::to_string(k + 1),
                    conv.v[i][k].to_string());
        }
      report.result.push_back(std::move(units));
      report.trail.push_back(validation_node(conv.checks));
      if (!opts.out_path.empty()) {
        write_file(opts.out_path, serialize_tgwa(conv.tgwa));
        opts.out_path.clear();
      }
    } else if (c_tensor->parsed()) {
      report.command = "tensor";
      DatumFile right = load_datum_file(right_path, !opts.no_verify);
      TwistSpec twist;
      if (!twist_entries.empty()) {
        twist.d.assign(datum->rank(),
                       std::vector<Rat>(right.datum->rank(), Rat(1)));
        for (const std::string& entry : twist_entries) {
          auto eq = entry.find('=');
          auto comma = entry.find(',');
          if (eq == std::string::npos || comma == std::string::npos || comma > eq)
            throw Error("twist entry must look like \"i,k=value\"");
          std::size_t i = std::stoul(entry.substr(0, comma));
          std::size_t k = std::stoul(entry.substr(comma + 1, eq - comma - 1));
          if (i < 1 || i > datum->rank() || k < 1 || k > right.datum->rank())
            throw Error("twist index out of range");
          twist.d[i - 1][k - 1] = parse_rational(entry.substr(eq + 1));
        }
      }
      TensorResult res = twisted_tensor(datum, right.datum, twist);
      ReportNode node("tensor");
      node.add("rank", std::to_string(res.tensor->rank()));
      for (auto& [from, to] : res.renames) node.add("renamed " + from, to);
      std::istringstream lines(serialize_datum(*res.tensor));
      std::string line;
      std::size_t no = 0;
      while (std::getline(lines, line)) node.add("line " + std::to_string(++no), line);
      report.result.push_back(std::move(node));
      report.trail.push_back(validation_node(res.checks));
      report.trail.push_back(validation_node(res.tensor->validate()));
      if (!opts.out_path.empty()) {
        write_file(opts.out_path, serialize_datum(*res.tensor));
        opts.out_path.clear();
      }
    } else if (c_fixed->parsed()) {
      report.command = "fixed-ring";
      Automorphism phi = Automorphism::identity(datum->ring());
      if (!phi_text.empty()) {
        // Reuse the sigma-line parser through a one-line datum fragment.
        std::string fragment;
        {
          std::ostringstream os;
          os << serialize_datum(*datum);
          fragment = os.str();
        }
        DatumFile tmp = parse_datum_file(
            "ring:" + fragment.substr(5, fragment.find('\n') - 5) +
                "\nsigma 1: " + phi_text + "\n",
            false);
        phi = tmp.datum->sigma(0);
        // Rebind onto the shared ring object.
        phi = Automorphism::make(datum->ring(), phi.perm(), phi.scale(),
                                 phi.shift());
      }
      std::vector<Rat> gamma;
      {
        std::istringstream in(gamma_text);
        std::string item;
        while (std::getline(in, item, ',')) gamma.push_back(parse_rational(item));
      }
      FixedRingResult res = fixed_ring(datum, phi, gamma);
      ReportNode node("fixed-ring");
      node.add("phi-order", std::to_string(res.phi_order));
      std::string orders;
      for (long m : res.orders) orders += (orders.empty() ? "" : ", ") + std::to_string(m);
      node.add("gamma-orders", orders);
      for (std::size_t j = 0; j < res.datum->ring()->arity(); ++j)
        node.add("variable " + res.datum->ring()->vars[j],
                 res.embedding.images[j].to_string());
      std::istringstream lines(serialize_datum(*res.datum));
      std::string line;
      std::size_t no = 0;
      while (std::getline(lines, line)) node.add("line " + std::to_string(++no), line);
      report.result.push_back(std::move(node));
      report.trail.push_back(validation_node(res.checks));
      if (!opts.out_path.empty()) {
        write_file(opts.out_path, serialize_datum(*res.datum));
        opts.out_path.clear();
      }
    } else if (c_gkdim->parsed()) {
      report.command = "gkdim";
      GkReport gk = gk_dimension(datum);
      ReportNode node("gk-dimension");
      node.add("value", std::to_string(gk.value));
      report.result.push_back(std::move(node));
      ValidationReport v;
      v.entries = gk.checklist;
      report.trail.push_back(validation_node(v));
    } else if (c_simpl->parsed()) {
      report.command = "simplicity";
      std::optional<std::string> assume;
      if (!assume_text.empty()) assume = assume_text;
      Verdict v = rankn_verdict(datum, opts.kmax, assume);
      ReportNode node("verdict");
      node.add("status", status_str(v.status));
      report.result.push_back(std::move(node));
      report.trail.push_back(trail_nodes(v));
      if (v.status == SimplicityStatus::Inconclusive)
        report.status = "inconclusive";
    } else if (c_diagram->parsed()) {
      report.command = "diagram";
      Point base = resolve_point(file, opts);
      Classification cls = classify(*datum, base, opts.window);
      ReportNode node("diagram");
      node.add("descriptors", std::to_string(cls.descriptors.size()));
      if (datum->rank() <= 2) {
        if (!svg_path.empty()) {
          write_file(svg_path, diagram_svg(*datum, cls, opts.window));
          node.add("svg", svg_path);
        }
        if (!tikz_path.empty()) {
          write_file(tikz_path, diagram_tikz(*datum, cls, opts.window));
          node.add("tikz", tikz_path);
        }
        if (svg_path.empty() && tikz_path.empty())
          node.add("note", "pass --svg or --tikz to write diagram files");
      } else {
        node.add("note", "rank above 2: textual table instead of a lattice");
      }
      report.result.push_back(std::move(node));
      report.result.push_back(axes_node(cls.axes, *datum, base));
      ReportNode list("modules");
      for (std::size_t i = 0; i < cls.descriptors.size(); ++i)
        list.add(descriptor_node(cls.descriptors[i], i));
      report.result.push_back(std::move(list));
    }
    return emit(report, opts, start);
  } catch (const ParseError& e) {
    report.status = "error";
    report.result.clear();
    ReportNode node("error");
    node.add("kind", "parse");
    node.add("message", e.what());
    report.result.push_back(std::move(node));
    emit(report, opts, start);
    return 2;
  } catch (const std::exception& e) {
    report.status = "error";
    report.result.clear();
    ReportNode node("error");
    node.add("kind", "semantic");
    node.add("message", e.what());
    report.result.push_back(std::move(node));
    emit(report, opts, start);
    return 1;
  }
}
