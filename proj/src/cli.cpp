#include "wcurve/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wcurve/identities.hpp"
#include "wcurve/point.hpp"

namespace wcurve {
namespace {

using nlohmann::json;

struct Request {
  std::string field = "rational";
  std::string a;
  std::string p_text, q_text;
  long long n = 0;
  std::string u, r = "0", s = "0", t = "0";
  std::string format = "text";
  std::uint64_t seed = 42;
  std::uint32_t trials = 1000;
};

/// Field validation failures (non-prime p, reducible modulus, ...) count as
/// malformed literals at the command line, like any other bad literal.
Field parse_field_cli(const std::string& text) {
  try {
    return Field::parse(text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("invalid field spec \"" + text + "\": " + e.what());
  }
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

/// Splits on commas outside brackets, so extension-field literals like
/// "[0,1],[1,1]" keep their components together.
std::vector<std::string> split_top(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') {
      if (depth == 0) throw ParseError("unbalanced ']' in \"" + text + "\"");
      --depth;
    }
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (depth != 0) throw ParseError("unbalanced '[' in \"" + text + "\"");
  parts.push_back(cur);
  return parts;
}

WeierstrassCurve parse_curve(const Field& f, const std::string& text) {
  auto parts = split_top(text);
  if (parts.size() != 5)
    throw ParseError("curve literal needs a1,a2,a3,a4,a6: \"" + text + "\"");
  return WeierstrassCurve::make(f, f.parse_element(parts[0]),
                                f.parse_element(parts[1]),
                                f.parse_element(parts[2]),
                                f.parse_element(parts[3]),
                                f.parse_element(parts[4]));
}

Point parse_point(const WeierstrassCurve& w, const std::string& text) {
  if (trimmed(text) == "O") return Point::zero();
  auto parts = split_top(text);
  if (parts.size() != 2)
    throw ParseError("point literal needs \"O\" or x,y: \"" + text + "\"");
  return Point::affine(w, w.f.parse_element(parts[0]),
                       w.f.parse_element(parts[1]));
}

std::string curve_coeffs(const WeierstrassCurve& w) {
  return w.a1.str() + "," + w.a2.str() + "," + w.a3.str() + "," + w.a4.str() +
         "," + w.a6.str();
}

json curve_coeff_array(const WeierstrassCurve& w) {
  return json::array(
      {w.a1.str(), w.a2.str(), w.a3.str(), w.a4.str(), w.a6.str()});
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int run_invariants(const Request& req, std::ostream& out) {
  Field f = parse_field_cli(req.field);
  WeierstrassCurve w = parse_curve(f, req.a);
  CurveInvariants iv = invariants(w);
  bool ell = is_elliptic(w);
  if (req.format == "json") {
    json j;
    j["schema"] = 1;
    j["b2"] = iv.b2.str();
    j["b4"] = iv.b4.str();
    j["b6"] = iv.b6.str();
    j["b8"] = iv.b8.str();
    j["delta"] = iv.delta.str();
    j["is_elliptic"] = ell;
    emit(out, j);
  } else {
    out << "b2 = " << iv.b2.str() << "\n";
    out << "b4 = " << iv.b4.str() << "\n";
    out << "b6 = " << iv.b6.str() << "\n";
    out << "b8 = " << iv.b8.str() << "\n";
    out << "delta = " << iv.delta.str() << "\n";
    out << "is_elliptic = " << (ell ? "true" : "false") << "\n";
  }
  return 0;
}

int run_points(const Request& req, std::ostream& out) {
  Field f = parse_field_cli(req.field);
  WeierstrassCurve w = parse_curve(f, req.a);
  std::vector<Point> pts = enumerate_points(w);
  if (req.format == "json") {
    json j;
    j["schema"] = 1;
    j["count"] = pts.size();
    json arr = json::array();
    for (const Point& p : pts) arr.push_back(p.str());
    j["points"] = arr;
    emit(out, j);
  } else {
    out << "count = " << pts.size() << "\n";
    for (const Point& p : pts) out << p.str() << "\n";
  }
  return 0;
}

int run_group(const Request& req, std::ostream& out) {
  Field f = parse_field_cli(req.field);
  WeierstrassCurve w = parse_curve(f, req.a);
  GroupStructure g = group_structure(w);
  if (req.format == "json") {
    json j;
    j["schema"] = 1;
    j["order"] = g.order;
    j["n1"] = g.n1;
    j["n2"] = g.n2;
    j["cyclic"] = g.n1 == 1;
    emit(out, j);
  } else {
    out << "order = " << g.order << "\n";
    out << "n1 = " << g.n1 << "\n";
    out << "n2 = " << g.n2 << "\n";
    out << "cyclic = " << (g.n1 == 1 ? "true" : "false") << "\n";
  }
  return 0;
}

int emit_point_result(const Request& req, std::ostream& out, const Point& p) {
  if (req.format == "json") {
    json j;
    j["schema"] = 1;
    j["result"] = p.str();
    emit(out, j);
  } else {
    out << p.str() << "\n";
  }
  return 0;
}

int run_add(const Request& req, std::ostream& out) {
  Field f = parse_field_cli(req.field);
  WeierstrassCurve w = parse_curve(f, req.a);
  Point p = parse_point(w, req.p_text);
  Point q = parse_point(w, req.q_text);
  return emit_point_result(req, out, add(w, p, q));
}

int run_smul(const Request& req, std::ostream& out) {
  Field f = parse_field_cli(req.field);
  WeierstrassCurve w = parse_curve(f, req.a);
  Point p = parse_point(w, req.p_text);
  return emit_point_result(req, out, smul(w, req.n, p));
}

int run_neg(const Request& req, std::ostream& out) {
  Field f = parse_field_cli(req.field);
  WeierstrassCurve w = parse_curve(f, req.a);
  Point p = parse_point(w, req.p_text);
  return emit_point_result(req, out, neg(w, p));
}

int run_change(const Request& req, std::ostream& out) {
  Field f = parse_field_cli(req.field);
  WeierstrassCurve w = parse_curve(f, req.a);
  VariableChange c =
      VariableChange::make(f.parse_element(req.u), f.parse_element(req.r),
                           f.parse_element(req.s), f.parse_element(req.t));
  WeierstrassCurve w2 = variable_change(w, c);
  CurveInvariants iv2 = invariants(w2);
  bool has_point = !req.p_text.empty();
  Point image = Point::zero();
  if (has_point) image = map_point(w, c, parse_point(w, req.p_text));
  if (req.format == "json") {
    json j;
    j["schema"] = 1;
    j["a"] = curve_coeff_array(w2);
    j["delta"] = iv2.delta.str();
    if (has_point) j["p"] = image.str();
    emit(out, j);
  } else {
    out << "a = " << curve_coeffs(w2) << "\n";
    out << "delta = " << iv2.delta.str() << "\n";
    if (has_point) out << "p = " << image.str() << "\n";
  }
  return 0;
}

IdentityReport scan_report(const std::string& id, const GroupLawScan& scan) {
  IdentityReport r;
  r.id = id;
  r.status =
      scan.failures == 0 ? IdentityStatus::holds : IdentityStatus::fails;
  r.note = "curves=" + std::to_string(scan.curves) +
           ", points=" + std::to_string(scan.points) +
           ", triples=" + std::to_string(scan.triples);
  if (scan.failures != 0)
    r.note += ", failures=" + std::to_string(scan.failures) + "; " +
              scan.first_failure;
  return r;
}

int run_verify(const Request& req, std::ostream& out) {
  std::vector<IdentityReport> reports = check_exact_suite();

  std::uint64_t p = ((std::uint64_t)1 << 31) - 1;
  std::vector<IdentityReport> rnd =
      check_randomized_suite(p, req.trials, req.seed);
  reports.insert(reports.end(), rnd.begin(), rnd.end());

  const char* specs[] = {"q(2)", "q(3)", "q(2^2)", "q(5)"};
  for (const char* spec : specs) {
    Field f = Field::parse(spec);
    GroupLawScan scan = scan_group_law(f);
    reports.push_back(
        scan_report("group-law-q" + std::to_string(f.order()), scan));
  }

  bool ok = std::all_of(reports.begin(), reports.end(),
                        [](const IdentityReport& r) {
                          return r.status != IdentityStatus::fails;
                        });

  if (req.format == "json") {
    json j;
    j["schema"] = 1;
    json arr = json::array();
    for (const IdentityReport& r : reports) {
      json jr;
      jr["id"] = r.id;
      jr["status"] = status_name(r.status);
      if (!r.note.empty()) jr["note"] = r.note;
      if (!r.residual.is_zero()) jr["residual"] = r.residual.str();
      arr.push_back(jr);
    }
    j["reports"] = arr;
    j["result"] = ok ? "pass" : "fail";
    emit(out, j);
  } else {
    for (const IdentityReport& r : reports) {
      out << r.id << ": " << status_name(r.status);
      if (!r.note.empty()) out << " (" << r.note << ")";
      out << "\n";
    }
    out << "result: " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"long Weierstrass curves: invariants, point group, "
               "certification suites"};
  app.require_subcommand(1);
  Request req;

  auto add_common = [&](CLI::App* cmd, bool needs_curve) {
    cmd->add_option("--format", req.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    if (needs_curve) {
      cmd->add_option("--field", req.field,
                      "field spec: rational, q(p), or q(p^k)")
          ->capture_default_str();
      cmd->add_option("--a", req.a, "curve coefficients a1,a2,a3,a4,a6")
          ->required();
    }
  };

  CLI::App* c_inv =
      app.add_subcommand("invariants", "b-invariants and discriminant");
  add_common(c_inv, true);

  CLI::App* c_points =
      app.add_subcommand("points", "enumerate the points of W(F)");
  add_common(c_points, true);

  CLI::App* c_group =
      app.add_subcommand("group", "group order and invariant factors");
  add_common(c_group, true);

  CLI::App* c_add = app.add_subcommand("add", "add two points");
  add_common(c_add, true);
  c_add->add_option("--p", req.p_text, "first point")->required();
  c_add->add_option("--q", req.q_text, "second point")->required();

  CLI::App* c_smul = app.add_subcommand("smul", "scalar multiple of a point");
  add_common(c_smul, true);
  c_smul->add_option("-n", req.n, "scalar")->required();
  c_smul->add_option("--p", req.p_text, "point")->required();

  CLI::App* c_neg = app.add_subcommand("neg", "negate a point");
  add_common(c_neg, true);
  c_neg->add_option("--p", req.p_text, "point")->required();

  CLI::App* c_change =
      app.add_subcommand("change", "apply an admissible coordinate change");
  add_common(c_change, true);
  c_change->add_option("--u", req.u, "scale unit")->required();
  c_change->add_option("--r", req.r, "x shift")->capture_default_str();
  c_change->add_option("--s", req.s, "shear")->capture_default_str();
  c_change->add_option("--t", req.t, "y shift")->capture_default_str();
  c_change->add_option("--p", req.p_text, "point to push through the change");

  CLI::App* c_verify =
      app.add_subcommand("verify", "run the certification suites");
  add_common(c_verify, false);
  c_verify->add_option("--seed", req.seed, "prng seed")->capture_default_str();
  c_verify->add_option("--trials", req.trials, "randomized trial count")
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_inv)) return run_invariants(req, out);
    if (app.got_subcommand(c_points)) return run_points(req, out);
    if (app.got_subcommand(c_group)) return run_group(req, out);
    if (app.got_subcommand(c_add)) return run_add(req, out);
    if (app.got_subcommand(c_smul)) return run_smul(req, out);
    if (app.got_subcommand(c_neg)) return run_neg(req, out);
    if (app.got_subcommand(c_change)) return run_change(req, out);
    return run_verify(req, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace wcurve
