#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "ribbon/ribbon.hpp"

namespace ribbon::cli {
namespace {

struct Selection {
  std::string family;
  std::optional<int> q;
  std::optional<int> p;
  std::string presentation = "closed";
  double epsilon = 1e-3;
};

void add_selection(CLI::App* cmd, Selection& s, bool required) {
  auto* f = cmd->add_option("--family", s.family,
                            "odd-wrap, star-polygon, pinwheel, even-wrap-plus2, even-wrap-plus4, short-52, short-72, "
                            "rect74");
  if (required) f->required();
  cmd->add_option("--q", s.q, "q parameter (odd-wrap, pinwheel, even wraps)");
  cmd->add_option("--p", s.p, "p parameter (star-polygon)");
  cmd->add_option("--presentation", s.presentation, "closed or truncated")->check(CLI::IsMember({"closed", "truncated"}));
  cmd->add_option("--epsilon", s.epsilon, "fold separation for the short variants");
}

FamilyId family_of(const Selection& s) {
  FamilyId id{family_from_name(s.family), 0};
  if (id.tag == Family::star_polygon) {
    if (!s.p) throw Error(ErrorKind::invalid_input, "--p is required for star-polygon");
    id.parameter = *s.p;
  } else if (is_parametric(id.tag)) {
    if (!s.q) throw Error(ErrorKind::invalid_input, std::string("--q is required for ") + family_name(id.tag));
    id.parameter = *s.q;
  }
  check_parameter(id);
  return id;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Never leaves a partially written file behind.
void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::invalid_input, "cannot write " + path);
    f << content;
    f.flush();
    if (!f) {
      std::filesystem::remove(tmp);
      throw Error(ErrorKind::invalid_input, "cannot write " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorKind::invalid_input, "cannot write " + path + ": " + ec.message());
  }
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

bool verify_one(const FamilyId& id, Presentation pr, double epsilon, double tol, bool knot_check,
                std::ostream& out) {
  const ClosedForm cf = closed_form_ratio(id, pr);
  double geometric = ratio(layout(build(id, pr, epsilon)));
  std::string how = "ratio";
  if (id.tag == Family::short_52 || id.tag == Family::short_72) {
    out << family_label(id) << ": ratio at epsilon " << epsilon << " = " << full(geometric) << '\n';
    geometric = measured_ratio(id, pr, epsilon);
    how = "extrapolated ratio";
  }
  const double rel = std::fabs(geometric - cf.value) / cf.value;
  const bool ok = rel < tol;
  out << family_label(id) << " [" << to_string(pr) << "]: " << how << ' ' << full(geometric) << ", closed form "
      << cf.symbolic << " = " << full(cf.value) << ", relative error " << sci(rel) << " -> " << (ok ? "PASS" : "FAIL")
      << '\n';
  if (!knot_check || pr != Presentation::closed) return ok;

  CertificationReport rep;
  const FoldProgram prog = build(id, pr, epsilon);
  if (const auto knot = claimed_knot(id)) rep = verify_knot_type(prog, *knot);
  else rep = verify_knot_type(prog, seven_four_alexander(), kSevenFourCrossings, "7_4 knot");
  out << family_label(id) << " knot: " << rep.crossing_count << " crossings, alexander " << rep.alexander.str()
      << ", expected " << rep.expected << " -> " << (rep.verdict() ? "PASS" : "FAIL") << '\n';
  return ok && rep.verdict();
}

std::vector<std::pair<FamilyId, Presentation>> verify_sweep() {
  std::vector<std::pair<FamilyId, Presentation>> all;
  for (int q = 2; q <= 10; ++q) {
    all.push_back({{Family::odd_wrap, q}, Presentation::closed});
    all.push_back({{Family::odd_wrap, q}, Presentation::truncated});
  }
  for (int p = 7; p <= 21; p += 2) all.push_back({{Family::star_polygon, p}, Presentation::closed});
  for (int q = 2; q <= 10; ++q) all.push_back({{Family::pinwheel, q}, Presentation::closed});
  for (Family f : {Family::even_wrap_plus2, Family::even_wrap_plus4})
    for (int q = 3; q <= 9; q += 2) all.push_back({{f, q}, Presentation::closed});
  for (Family f : {Family::short_52, Family::short_72, Family::rect_74})
    all.push_back({{f, 0}, Presentation::closed});
  return all;
}

// Inverse of family_label, e.g. "odd-wrap q=3".
FamilyId family_from_label(const std::string& label) {
  std::istringstream in(label);
  std::string name, param;
  in >> name >> param;
  FamilyId id{family_from_name(name), 0};
  if (is_parametric(id.tag)) {
    if (param.size() < 3 || param[1] != '=')
      throw Error(ErrorKind::invalid_input, "program label does not name a parameter; pass --expect-p/--expect-q");
    id.parameter = std::stoi(param.substr(2));
  }
  check_parameter(id);
  return id;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flat folded ribbon constructions of torus knots"};
  app.name("ribbonfold");
  app.require_subcommand(1, 1);

  Selection sel;
  std::string output;
  double tolerance = 1e-9;
  bool knot_check = false, verify_all = false;

  auto* build_cmd = app.add_subcommand("build", "Write the fold program of a construction as JSON");
  add_selection(build_cmd, sel, true);
  build_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Compare layout ratios with the closed forms");
  add_selection(verify_cmd, sel, false);
  verify_cmd->add_flag("--all", verify_all, "sweep every family (q <= 10, p <= 21)");
  verify_cmd->add_flag("--knot-check", knot_check, "also certify the knot type");
  verify_cmd->add_option("--tolerance", tolerance, "relative tolerance")->check(CLI::PositiveNumber);

  int q_max = 12, p_max = 25;
  std::string format = "csv", figure;
  bool bounds = false;
  auto* table_cmd = app.add_subcommand("table", "Kusner quotient and bounds tables");
  table_cmd->add_option("--q-max", q_max, "largest q")->check(CLI::Range(2, 100000));
  table_cmd->add_option("--p-max", p_max, "largest p")->check(CLI::Range(7, 100000));
  table_cmd->add_option("--format", format, "csv or markdown")->check(CLI::IsMember({"csv", "markdown"}));
  table_cmd->add_flag("--bounds", bounds, "print the c1/c2 bounds table instead");
  table_cmd->add_option("--figure", figure, "also write an SVG chart of the quotients");
  table_cmd->add_option("-o,--output", output, "output file (default stdout)");

  std::string input;
  RenderOptions ropt;
  bool no_creases = false;
  auto* render_cmd = app.add_subcommand("render", "Render a fold program JSON as SVG");
  render_cmd->add_option("-i,--input", input, "fold program JSON")->required();
  render_cmd->add_option("-o,--output", output, "output file (default stdout)");
  render_cmd->add_flag("--circumcircle", ropt.show_circumcircle, "draw the circumscribed circle");
  render_cmd->add_flag("--centerline", ropt.show_centerline, "draw the centerline");
  render_cmd->add_flag("--no-creases", no_creases, "omit crease lines");
  render_cmd->add_option("--epsilon-display", ropt.epsilon_display, "per-layer display offset")
      ->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--scale", ropt.scale, "SVG units per length unit")->check(CLI::PositiveNumber);

  bool as_json = false;
  std::optional<int> expect_p, expect_q;
  double perturbation = 0;
  auto* identify_cmd = app.add_subcommand("identify", "Extract the knot diagram and certify its type");
  add_selection(identify_cmd, sel, false);
  identify_cmd->add_option("-i,--input", input, "fold program JSON instead of --family");
  identify_cmd->add_option("--expect-p", expect_p, "expected torus knot p (with --input)");
  identify_cmd->add_option("--expect-q", expect_q, "expected torus knot q (with --input)");
  identify_cmd->add_option("--perturbation", perturbation, "vertex displacement (default 1e-6 w)")
      ->check(CLI::PositiveNumber);
  identify_cmd->add_flag("--json", as_json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Presentation pr = presentation_from_string(sel.presentation);
    if (*build_cmd) {
      write_output(output, to_json(build(family_of(sel), pr, sel.epsilon)), out);
      return kOk;
    }
    if (*verify_cmd) {
      if (verify_all == !sel.family.empty()) throw Error(ErrorKind::invalid_input, "give either --family or --all");
      bool ok = true;
      if (verify_all) {
        for (const auto& [id, p] : verify_sweep()) ok = verify_one(id, p, sel.epsilon, tolerance, knot_check, out) && ok;
      } else {
        ok = verify_one(family_of(sel), pr, sel.epsilon, tolerance, knot_check, out);
      }
      return ok ? kOk : kVerifyFailed;
    }
    if (*table_cmd) {
      const TableFormat tf = format == "csv" ? TableFormat::csv : TableFormat::markdown;
      const auto rows = quotient_rows(q_max, p_max);
      write_output(output, bounds ? bounds_table_text(bounds_table(), tf) : quotient_table(rows, tf), out);
      if (!figure.empty()) {
        std::vector<RatioReport> parametric;
        for (const auto& r : rows)
          if (is_parametric(r.family.tag)) parametric.push_back(r);
        write_output(figure, render_table_figure(parametric), out);
      }
      return kOk;
    }
    if (*render_cmd) {
      ropt.show_creases = !no_creases;
      write_output(output, to_svg(layout(program_from_json(read_file(input))), ropt), out);
      return kOk;
    }
    if (*identify_cmd) {
      if (input.empty() == sel.family.empty()) throw Error(ErrorKind::invalid_input, "give either --family or --input");
      FoldProgram prog;
      std::optional<TorusKnotParams> expected;
      if (!input.empty()) {
        prog = program_from_json(read_file(input));
        if (expect_p.has_value() != expect_q.has_value())
          throw Error(ErrorKind::invalid_input, "--expect-p and --expect-q go together");
        if (expect_p) {
          expected = TorusKnotParams{*expect_p, *expect_q};
        } else {
          const FamilyId id = family_from_label(prog.label);
          expected = claimed_knot(id);
        }
      } else {
        const FamilyId id = family_of(sel);
        prog = build(id, presentation_from_string(sel.presentation), sel.epsilon);
        expected = claimed_knot(id);
      }
      ExtractOptions eo;
      eo.perturbation = perturbation;
      CertificationReport rep;
      try {
        rep = expected ? verify_knot_type(prog, *expected, eo)
                       : verify_knot_type(prog, seven_four_alexander(), kSevenFourCrossings, "7_4 knot", eo);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::degenerate_diagram && e.kind() != ErrorKind::layering) throw;
        err << "certification failed: " << e.what() << '\n';
        return kVerifyFailed;
      }
      out << (as_json ? rep.json() : rep.text());
      return rep.verdict() ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ribbon::cli
