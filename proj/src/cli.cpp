#include "lattice/cli.hpp"

#include "lattice/oracle.hpp"
#include "lattice/polygon.hpp"
#include "lattice/semigroup.hpp"
#include "lattice/tetra.hpp"
#include "lattice/triangle_core.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace lattice::cli {

using nlohmann::json;

void CountReport::attach_oracle(Int value) {
  agreed = (value == count);
  oracle = std::move(value);
}

json CountReport::to_json() const {
  json j;
  j["shape"] = shape;
  j["count"] = to_string(count);
  if (!trace.is_null()) j["trace"] = trace;
  if (oracle) j["oracle"] = to_string(*oracle);
  if (agreed) j["agreed"] = *agreed;
  return j;
}

namespace {

std::string render_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      s += render_value(e);
    }
    return s.empty() ? "(none)" : s;
  }
  return v.dump();
}

}  // namespace

std::string CountReport::to_text() const {
  std::ostringstream os;
  os << "shape: " << shape << '\n' << "count: " << to_string(count) << '\n';
  if (!trace.is_null()) {
    os << "trace:\n";
    for (const auto& [key, value] : trace.items()) os << "  " << key << ": " << render_value(value) << '\n';
  }
  if (oracle) os << "oracle: " << to_string(*oracle) << '\n';
  if (agreed) os << "agreed: " << (*agreed ? "true" : "false") << '\n';
  return os.str();
}

namespace {

struct Options {
  bool json = false;
  bool trace = false;
  bool check = false;
  std::uint64_t budget = oracle::kDefaultCellBudget;
};

json strings(const std::vector<Int>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

std::string term(const Int& coef, const std::string& var) { return to_string(coef) + var; }

std::string line_text(const LineEq& l, const char* rel) {
  return term(l.a(), "x") + " + " + term(l.b(), "y") + " " + rel + " " + to_string(l.c());
}

Point parse_point(const std::string& x, const std::string& y) { return {parse_rational(x), parse_rational(y)}; }

Polygon load_polygon(const std::string& path, std::istream& in) {
  if (path == "-") return read_polygon(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open polygon file '" + path + "'");
  return read_polygon(file);
}

BoundaryPart parse_parts(const std::vector<std::string>& names) {
  BoundaryPart set = BoundaryPart::none;
  for (const auto& n : names) {
    if (n == "hyp") {
      set = set | BoundaryPart::hypotenuse;
    } else if (n == "legx") {
      set = set | BoundaryPart::leg_x;
    } else if (n == "legy") {
      set = set | BoundaryPart::leg_y;
    } else {
      throw InputError("unknown boundary part '" + n + "' (expected hyp, legx or legy)");
    }
  }
  return set;
}

json triangle_trace(const TriangleCountTrace& tr) {
  json j;
  j["case"] = std::string(to_string(tr.box_case));
  if (tr.box_case == BoxCase::two_adjacent || tr.box_case == BoxCase::one_corner ||
      (tr.box_case == BoxCase::two_opposite && !tr.cut)) {
    j["box"] = to_string(tr.box_count);
    j["cutoffs"] = strings(tr.cutoffs);
  }
  if (tr.cut) {
    j["cut"] = to_string(tr.cut->p) + "-" + to_string(tr.cut->q);
    j["cut_points"] = to_string(tr.cut_points);
    j["halves"] = strings(tr.halves);
  }
  return j;
}

CountReport cmd_thr(const std::vector<std::string>& v, const Options& opt) {
  const QuadrantTriangle t{parse_int(v[0]), parse_int(v[1]), parse_int(v[2])};
  CountReport r{"thr " + term(t.a, "x") + " + " + term(t.b, "y") + " <= " + to_string(t.c), count_thr(t)};
  if (opt.trace && t.c >= 0) {
    auto blocks = count_thr_blocks(t);
    r.trace = {{"a", to_string(blocks.a)},
               {"b", to_string(blocks.b)},
               {"k", to_string(blocks.k)},
               {"blocks", strings(blocks.block_counts)},
               {"tail_terms", strings(blocks.tail_terms)}};
  }
  if (opt.check) r.attach_oracle(oracle::brute_halfplane_quadrant(t.a, t.b, t.c, opt.budget));
  return r;
}

CountReport cmd_rect(const std::vector<std::string>& v, const Options& opt) {
  const Point lo = parse_point(v[0], v[1]);
  const Point hi = parse_point(v[2], v[3]);
  CountReport r{"rect [" + to_string(lo.x) + ", " + to_string(hi.x) + "] x [" + to_string(lo.y) + ", " +
                    to_string(hi.y) + "]",
                rect_count(lo, hi)};
  if (opt.trace) {
    Int nx = floor(hi.x) - ceil(lo.x) + 1;
    Int ny = floor(hi.y) - ceil(lo.y) + 1;
    r.trace = {{"columns", to_string(nx < 0 ? Int(0) : nx)}, {"rows", to_string(ny < 0 ? Int(0) : ny)}};
  }
  if (opt.check) r.attach_oracle(oracle::brute_rectangle(lo, hi, opt.budget));
  return r;
}

CountReport cmd_rtri(const std::vector<std::string>& v, const std::vector<std::string>& exclude_names,
                     const Options& opt) {
  // Argument order: right angle A, leg vertex B (same x), leg vertex C (same y).
  const StableRightTriangle t{parse_point(v[0], v[1]), parse_point(v[4], v[5]), parse_point(v[2], v[3])};
  t.validate();
  const BoundaryPart exclude = parse_parts(exclude_names);
  std::string shape = "rtri A=" + to_string(t.right_angle) + " B=" + to_string(t.leg_y) + " C=" + to_string(t.leg_x);
  if (exclude != BoundaryPart::none) {
    shape += " excluding";
    for (const auto& n : exclude_names) shape += " " + n;
  }
  CountReport r{shape, stable_right_count_variant(t, exclude)};
  if (opt.trace) {
    json j;
    if (auto red = reduce_stable_right(t)) {
      j["hypotenuse"] = line_text(red->hypotenuse, "=");
      j["reflect_x"] = red->flip_x;
      j["reflect_y"] = red->flip_y;
      j["lattice_corner"] = to_string(red->lattice_corner);
      j["empty"] = red->empty;
      if (red->cleared) {
        j["cleared"] = line_text(*red->cleared, "<=");
        j["gcd"] = to_string(red->gcd_ab);
        j["reduced"] = term(red->reduced->a, "x") + " + " + term(red->reduced->b, "y") +
                       " <= " + to_string(red->reduced->c);
      }
    } else {
      j["degenerate"] = true;
    }
    j["closed"] = to_string(stable_right_count(t));
    r.trace = j;
  }
  if (opt.check) r.attach_oracle(oracle::brute_stable_right(t, exclude, opt.budget));
  return r;
}

CountReport cmd_tri(const std::vector<std::string>& v, const Options& opt) {
  const Triangle t{parse_point(v[0], v[1]), parse_point(v[2], v[3]), parse_point(v[4], v[5])};
  auto tr = triangle_count_traced(t);
  CountReport r{"tri " + to_string(t.v1) + " " + to_string(t.v2) + " " + to_string(t.v3), tr.count};
  if (opt.trace) r.trace = triangle_trace(tr);
  if (opt.check) r.attach_oracle(oracle::brute_triangle(t, opt.budget));
  return r;
}

CountReport cmd_poly(const std::string& path, std::istream& in, const Options& opt) {
  const Polygon p = load_polygon(path, in);
  CountReport r{"poly n=" + std::to_string(p.size()), polygon_count(p)};
  if (opt.trace) {
    const auto tri = triangulate(p);
    std::vector<Int> counts;
    for (const auto& t : tri) counts.push_back(triangle_count(t));
    r.trace = {{"area", to_string(p.area())},
               {"triangles", std::to_string(tri.size())},
               {"triangle_counts", strings(counts)}};
  }
  if (opt.check) r.attach_oracle(oracle::brute_polygon(p, opt.budget));
  return r;
}

CountReport cmd_pick(const std::string& path, std::istream& in, const Options& opt) {
  const Polygon p = load_polygon(path, in);
  const auto audit = pick_audit(p);
  CountReport r{"pick n=" + std::to_string(p.size()), audit.interior + audit.boundary};
  r.trace = {{"area", to_string(audit.area)},
             {"interior", to_string(audit.interior)},
             {"boundary", to_string(audit.boundary)},
             {"holds", audit.holds}};
  if (opt.check) r.attach_oracle(oracle::brute_polygon(p, opt.budget));
  return r;
}

CountReport cmd_tetra(const std::vector<std::string>& v, const Options& opt) {
  const TetraParams t{parse_int(v[0]), parse_int(v[1]), parse_int(v[2]), parse_int(v[3])};
  auto tr = tetra_count_traced(t);
  CountReport r{"tetra " + term(t.a1, "x1") + " + " + term(t.a2, "x2") + " + " + term(t.a3, "x3") +
                    " <= " + to_string(t.b),
                tr.count};
  if (opt.trace) r.trace = {{"slice_axis", tr.slice_axis + 1}, {"slices", to_string(tr.slices)}};
  if (opt.check) r.attach_oracle(oracle::brute_tetra(t, opt.budget));
  return r;
}

CountReport cmd_denumerant(const std::vector<std::string>& v, const Options& opt) {
  const TwoGenSemigroup s(parse_int(v[0]), parse_int(v[1]));
  const Int c = parse_int(v[2]);
  CountReport r{"denumerant " + to_string(c) + " in <" + to_string(s.a()) + ", " + to_string(s.b()) + ">",
                s.denumerant(c)};
  if (opt.trace && c >= 0 && s.a() > 1 && s.b() > 1) {
    auto res = s.popoviciu_residues(c);
    r.trace = {{"a_prime", to_string(res.a_prime)}, {"b_prime", to_string(res.b_prime)}};
  }
  if (opt.check) r.attach_oracle(oracle::brute_representations(s.a(), s.b(), c, opt.budget));
  return r;
}

CountReport cmd_denumerant3(const std::vector<std::string>& v, const Options& opt) {
  const Int a1 = parse_int(v[0]), a2 = parse_int(v[1]), a3 = parse_int(v[2]), n = parse_int(v[3]);
  CountReport r{"denumerant3 " + to_string(n) + " in <" + to_string(a1) + ", " + to_string(a2) + ", " +
                    to_string(a3) + ">",
                denumerant3(a1, a2, a3, n)};
  if (opt.trace && n >= 0) {
    r.trace = {{"tetra_n", to_string(tetra_count({a1, a2, a3, n}))},
               {"tetra_n_minus_1", to_string(tetra_count({a1, a2, a3, n - 1}))}};
  }
  if (opt.check) r.attach_oracle(oracle::brute_representations3(a1, a2, a3, n, opt.budget));
  return r;
}

struct SemigroupQuery {
  bool gaps = false;
  std::string apery;
  std::string contains;
  std::string upto;
};

CountReport cmd_semigroup(const std::vector<std::string>& v, const SemigroupQuery& q, const Options& opt) {
  const TwoGenSemigroup s(parse_int(v[0]), parse_int(v[1]));
  CountReport r{"semigroup <" + to_string(s.a()) + ", " + to_string(s.b()) + ">", s.genus()};
  json j{{"frobenius", to_string(s.frobenius())}, {"genus", to_string(s.genus())}};
  if (q.gaps) j["gaps"] = strings(s.gaps());
  if (!q.apery.empty()) j["apery"] = strings(s.apery(parse_int(q.apery)));
  if (!q.contains.empty()) j["contains"] = s.contains(parse_int(q.contains));
  std::optional<Int> upto;
  if (!q.upto.empty()) {
    upto = parse_int(q.upto);
    r.count = s.count_upto(*upto);
    j["upto"] = to_string(*upto);
  }
  r.trace = j;
  if (opt.check) {
    if (s.a() * s.b() > opt.budget) throw oracle::BudgetExceeded("semigroup too large for the oracle budget");
    const auto gaps = oracle::brute_gaps(static_cast<std::int64_t>(s.a()), static_cast<std::int64_t>(s.b()));
    if (upto) {
      Int below = 0;
      for (auto g : gaps) {
        if (g <= *upto) ++below;
      }
      r.attach_oracle(*upto < 0 ? Int(0) : Int(*upto + 1 - below));
    } else {
      r.attach_oracle(Int(gaps.size()));
    }
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice-point counts for rational polygons and right tetrahedra", "latcount"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Print the report as JSON");
  app.add_flag("--trace", opt.trace, "Include the decomposition trace");
  app.add_flag("--check", opt.check, "Cross-check against the brute-force oracle");
  app.add_option("--oracle-budget", opt.budget, "Largest number of lattice cells the oracle may scan");

  std::vector<std::string> values;
  std::string path;
  std::vector<std::string> exclude;
  SemigroupQuery query;
  std::function<CountReport()> action;

  auto positional = [&](const char* name, const char* help, int n, const char* names) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("values", values, names)->expected(n)->required();
    return sub;
  };

  positional("thr", "Points with x, y >= 0 and a*x + b*y <= c (a, b coprime)", 3, "a b c")
      ->callback([&] { action = [&] { return cmd_thr(values, opt); }; });
  positional("rect", "Axis-parallel rectangle [x0, x1] x [y0, y1]", 4, "x0 y0 x1 y1")
      ->callback([&] { action = [&] { return cmd_rect(values, opt); }; });
  auto* rtri = positional("rtri", "Right triangle with legs parallel to the axes, right angle at A", 6,
                          "Ax Ay Bx By Cx Cy (B above/below A, C beside A)");
  rtri->add_option("--exclude", exclude, "Boundary parts to exclude: hyp, legx, legy")->delimiter(',');
  rtri->callback([&] { action = [&] { return cmd_rtri(values, exclude, opt); }; });
  positional("tri", "Any triangle with rational vertices", 6, "x1 y1 x2 y2 x3 y3")
      ->callback([&] { action = [&] { return cmd_tri(values, opt); }; });
  positional("tetra", "Points with x >= 0 and a1*x1 + a2*x2 + a3*x3 <= b", 4, "a1 a2 a3 b")
      ->callback([&] { action = [&] { return cmd_tetra(values, opt); }; });
  positional("denumerant", "Solutions of a*x + b*y = c in non-negative integers", 3, "a b c")
      ->callback([&] { action = [&] { return cmd_denumerant(values, opt); }; });
  positional("denumerant3", "Solutions of a1*x1 + a2*x2 + a3*x3 = n in non-negative integers", 4,
             "a1 a2 a3 n")
      ->callback([&] { action = [&] { return cmd_denumerant3(values, opt); }; });
  auto* sg = positional("semigroup", "Invariants of the numerical semigroup <a, b>", 2, "a b");
  sg->add_flag("--gaps", query.gaps, "List the gaps");
  sg->add_option("--apery", query.apery, "Apery set with respect to generator s");
  sg->add_option("--contains", query.contains, "Membership of n");
  sg->add_option("--upto", query.upto, "Count semigroup elements in [0, c]");
  sg->callback([&] { action = [&] { return cmd_semigroup(values, query, opt); }; });

  auto* poly = app.add_subcommand("poly", "Simple polygon read from FILE (or - for stdin)");
  poly->add_option("file", path, "Polygon file")->required();
  poly->callback([&] { action = [&] { return cmd_poly(path, in, opt); }; });
  auto* pick = app.add_subcommand("pick", "Pick's-theorem audit of an integral-vertex polygon");
  pick->add_option("file", path, "Polygon file")->required();
  pick->callback([&] { action = [&] { return cmd_pick(path, in, opt); }; });

  std::vector<const char*> argv{"latcount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    CountReport report = action();
    if (opt.json) {
      out << report.to_json().dump() << '\n';
    } else {
      out << report.to_text();
    }
    if (report.agreed && !*report.agreed) {
      err << "error: oracle disagrees (count " << to_string(report.count) << ", oracle "
          << to_string(*report.oracle) << ")\n";
      return kOracleDisagrees;
    }
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const oracle::BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --oracle-budget)\n";
    return kInputError;
  }
}

}  // namespace lattice::cli
