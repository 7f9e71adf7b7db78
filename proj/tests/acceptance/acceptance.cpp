// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "lattice/cli.hpp"
#include "lattice/oracle.hpp"
#include "lattice/polygon.hpp"
#include "lattice/semigroup.hpp"
#include "lattice/tetra.hpp"
#include "lattice/triangle_core.hpp"

#include "support/random_shapes.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

using namespace lattice;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // <= 0: no runtime bound
  std::function<Outcome()> body;
};

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

Outcome worked_example() {
  Outcome out;
  const std::vector<std::string> args{"thr", "3", "7", "46", "--trace", "--json"};
  double best = 1e9;
  std::string text;
  for (int rep = 0; rep < 5; ++rep) {
    std::istringstream in;
    std::ostringstream os, err;
    const auto t0 = Clock::now();
    const int code = cli::run(args, in, os, err);
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
    if (code != 0) out.fail("exit code " + std::to_string(code) + ": " + err.str());
    text = os.str();
  }
  const auto j = nlohmann::json::parse(text);
  if (j["count"] != "63") out.fail("count " + j["count"].get<std::string>());
  if (j["trace"]["blocks"] != nlohmann::json({"41", "20", "2"})) out.fail("blocks " + j["trace"]["blocks"].dump());
  if (best >= 1e-3) out.fail("best runtime " + std::to_string(best * 1e3) + " ms >= 1 ms");
  out.detail += (out.detail.empty() ? "" : "; ") + std::string("count 63, blocks [41, 20, 2], best of 5: ") +
                std::to_string(best * 1e3) + " ms";
  return out;
}

template <class F>
void for_thr_sweep(F&& f) {
  for (int a = 1; a <= 12; ++a) {
    for (int b = a; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (int c = -5; c <= 3 * a * b + 25; ++c) f(a, b, c);
    }
  }
}

Outcome thr_sweep() {
  Outcome out;
  long cases = 0;
  for_thr_sweep([&](int a, int b, int c) {
    ++cases;
    const QuadrantTriangle t{a, b, c};
    const Int brute = oracle::brute_halfplane_quadrant(a, b, c);
    const Int qr = count_thr(t);
    const Int kf = count_thr_kform(t);
    if (qr != brute || kf != brute) {
      out.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c) + ": qr " +
               to_string(qr) + ", k-form " + to_string(kf) + ", brute " + to_string(brute));
    }
  });
  if (out.ok) out.detail = std::to_string(cases) + " instances, both forms equal enumeration";
  return out;
}

Outcome semigroup_invariants() {
  Outcome out;
  int pairs = 0;
  for (int a = 1; a <= 40; ++a) {
    for (int b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++pairs;
      const TwoGenSemigroup s(a, b);
      const auto gaps = s.gaps();
      const auto brute = oracle::brute_gaps(a, b);
      const Int genus = (a - 1) * (b - 1) / 2;
      const Int frob = a * b - a - b;
      bool ok = Int(gaps.size()) == genus && Int(brute.size()) == genus && gaps.size() == brute.size();
      if (ok && !gaps.empty()) ok = gaps.back() == frob && Int(brute.back()) == frob;
      for (std::size_t i = 0; ok && i < gaps.size(); ++i) ok = gaps[i] == brute[i];
      if (!ok) out.fail("<" + std::to_string(a) + "," + std::to_string(b) + ">");
    }
  }
  if (out.ok) out.detail = std::to_string(pairs) + " semigroups, genus and Frobenius number confirmed";
  return out;
}

Outcome denumerant_sweep() {
  Outcome out;
  long checked = 0, representable = 0;
  for (int a = 1; a <= 30; ++a) {
    for (int b = a + 1; b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const TwoGenSemigroup s(a, b);
      const std::int64_t cmax = 5 * a * b;
      const auto hist = oracle::plane_value_histogram(a, b, cmax);
      for (std::int64_t c = 0; c <= cmax; ++c) {
        ++checked;
        const Int d = s.denumerant(c);
        if (d != hist[static_cast<std::size_t>(c)]) {
          out.fail("<" + std::to_string(a) + "," + std::to_string(b) + "> c=" + std::to_string(c));
        }
        if (hist[static_cast<std::size_t>(c)] > 0) {
          ++representable;
          const Int k = c / (a * b);
          if (d != k && d != k + 1) out.fail("bound violated at c=" + std::to_string(c));
        }
      }
    }
  }
  if (out.ok) {
    out.detail = std::to_string(checked) + " values (" + std::to_string(representable) +
                 " representable) match enumeration and the floor(c/ab) bound";
  }
  return out;
}

Outcome hypotenuse_identity() {
  Outcome out;
  long cases = 0;
  for_thr_sweep([&](int a, int b, int c) {
    ++cases;
    if (count_thr({a, b, c}) - count_thr({a, b, c - 1}) != denumerant2(a, b, c)) {
      out.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c));
    }
  });
  if (out.ok) out.detail = std::to_string(cases) + " instances";
  return out;
}

Outcome stable_right_triangles() {
  Outcome out;
  const Rational zero;
  const StableRightTriangle sample{{zero, zero}, {Rational(Int(7), Int(2)), zero}, {zero, Rational(Int(7), Int(4))}};
  auto red = reduce_stable_right(sample);
  if (!red || red->gcd_ab != 2 || stable_right_count(sample) != 6) out.fail("2x + 4y <= 7 did not give 6 via d = 2");

  shapes::ShapeGen gen(20130601);
  int shifted = 0;
  for (int i = 0; i < 300; ++i) {
    const auto t = gen.stable_right();
    if (auto r = reduce_stable_right(t); r && r->cleared && r->gcd_ab > 1) ++shifted;
    const Int n = stable_right_count(t);
    const Int brute = oracle::brute_triangle({t.right_angle, t.leg_x, t.leg_y});
    if (n != brute) {
      out.fail("A=" + to_string(t.right_angle) + " C=" + to_string(t.leg_x) + " B=" + to_string(t.leg_y) +
               ": " + to_string(n) + " vs " + to_string(brute));
    }
  }
  if (shifted == 0) out.fail("no random instance exercised the gcd shift");
  if (out.ok) {
    out.detail = "300 random instances + 2x+4y<=7 -> 6; " + std::to_string(shifted) + " used the gcd shift (d > 1)";
  }
  return out;
}

Outcome general_triangles() {
  Outcome out;
  shapes::ShapeGen gen(4051);
  std::map<BoxCase, int> seen;
  for (int i = 0; i < 500; ++i) {
    const Triangle t = gen.triangle_of_kind(i % 4);
    const auto trace = triangle_count_traced(t);
    ++seen[trace.box_case];
    const Int brute = oracle::brute_triangle(t);
    if (trace.count != brute) {
      out.fail(to_string(t.v1) + " " + to_string(t.v2) + " " + to_string(t.v3) + ": " + to_string(trace.count) +
               " vs " + to_string(brute));
    }
  }
  std::string tally;
  for (auto c : {BoxCase::three_corners, BoxCase::two_adjacent, BoxCase::one_corner, BoxCase::two_opposite,
                 BoxCase::degenerate}) {
    tally += std::string(tally.empty() ? "" : ", ") + std::string(to_string(c)) + "=" + std::to_string(seen[c]);
    if (c != BoxCase::degenerate && seen[c] < 25) out.fail("case " + std::string(to_string(c)) + " seen < 25 times");
    if (c == BoxCase::degenerate && seen[c] == 0) out.fail("no degenerate triangle generated");
  }
  out.detail += (out.detail.empty() ? "" : "; ") + tally;
  return out;
}

Outcome pick_corpus() {
  Outcome out;
  shapes::ShapeGen gen(1899);
  int holds = 0;
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.simple_polygon(3 + static_cast<std::size_t>(i % 8), true);
    const auto audit = pick_audit(p);
    if (audit.holds) {
      ++holds;
    } else {
      out.fail("polygon #" + std::to_string(i) + ": A=" + to_string(audit.area) + " I=" +
               to_string(audit.interior) + " B=" + to_string(audit.boundary));
    }
  }
  if (out.ok) out.detail = std::to_string(holds) + "/200 polygons satisfy A = I + B/2 - 1";
  return out;
}

Outcome tetrahedra() {
  Outcome out;
  if (tetra_count({6, 10, 15, 21}) != 9 || oracle::brute_tetra({6, 10, 15, 21}) != 9) out.fail("(6,10,15,21) != 9");
  long cases = 0;
  for (int a1 = 1; a1 <= 9; ++a1) {
    for (int a2 = 1; a2 <= 9; ++a2) {
      for (int a3 = 1; a3 <= 9; ++a3) {
        // One enumeration of the b = 200 tetrahedron gives every smaller b.
        const auto hist = oracle::tetra_value_histogram(a1, a2, a3, 200);
        std::int64_t running = 0;
        Int previous = 0;
        for (int b = 0; b <= 200; ++b) {
          ++cases;
          running += hist[static_cast<std::size_t>(b)];
          const Int n = tetra_count({a1, a2, a3, b});
          const Int d = n - previous;  // denumerant3 by its defining difference
          previous = n;
          if (n != running || d != hist[static_cast<std::size_t>(b)]) {
            out.fail("(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + "," +
                     std::to_string(b) + ")");
          }
          if (b % 50 == 0 && denumerant3(a1, a2, a3, b) != hist[static_cast<std::size_t>(b)]) {
            out.fail("denumerant3 at b=" + std::to_string(b));
          }
        }
        // Tie the histogram back to the plain triple loop.
        for (int b : {37, 200}) {
          if (oracle::brute_tetra({a1, a2, a3, b}) != tetra_count({a1, a2, a3, b})) {
            out.fail("triple loop at b=" + std::to_string(b));
          }
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(cases) + " tetrahedra and denumerants match enumeration";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example thr 3 7 46 --trace", 0.0, worked_example},
      {2, "quadrant count vs enumeration, both forms", 30.0, thr_sweep},
      {3, "two-generator gaps: genus and Frobenius number", 30.0, semigroup_invariants},
      {4, "denumerant vs enumeration and floor(c/ab) bound", 60.0, denumerant_sweep},
      {5, "hypotenuse identity over the quadrant sweep", 0.0, hypotenuse_identity},
      {6, "stable right triangles vs enumeration", 60.0, stable_right_triangles},
      {7, "general triangles vs enumeration, all box cases", 120.0, general_triangles},
      {8, "Pick audit on integral simple polygons", 120.0, pick_corpus},
      {9, "tetrahedra and three-generator denumerant", 180.0, tetrahedra},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ["
              << std::fixed << std::setprecision(2) << secs << " s]  " << o.detail << std::endl;
  }
  std::cout << "SKIP  criterion 10  large-scale external claims: outside desk-scale scope, not tested" << std::endl;
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
