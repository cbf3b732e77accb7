// Acceptance suite: one pass/fail line per criterion, wall-clock budgets
// enforced, exit code = number of failing criteria.
//
// Criteria 1 and 2 compare generated tables against vendored golden files
// that transcribe a published reference table verbatim.  The classifier and
// the independent Clifford-algebra lift search agree with each other
// everywhere; where they both disagree with a golden row, the comparison is
// reported as a failure rather than patched over (see README).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinlift/characters.hpp"
#include "spinlift/lift_oracle.hpp"
#include "spinlift/partition.hpp"
#include "spinlift/rep.hpp"
#include "spinlift/spinoriality.hpp"
#include "spinlift/stiefel_whitney.hpp"
#include "spinlift/tables.hpp"

using namespace spinlift;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

Partition ones(int n) { return Partition(std::vector<int>(static_cast<size_t>(n), 1)); }

// ---- criterion 1: byte-exact reproduction of the vendored n<=6 table ----
Outcome criterion1() {
  Outcome out;
  std::string golden = read_file(std::string(SPINLIFT_GOLDEN_DIR) + "/table1.csv");
  std::string produced = table1_csv();
  if (produced == golden) return out;
  auto got = lines_of(produced);
  auto want = lines_of(golden);
  out.fail("generated table differs from golden transcription");
  for (size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
    std::string g = i < got.size() ? got[i] : "<missing>";
    std::string w = i < want.size() ? want[i] : "<missing>";
    if (g != w)
      out.detail += "\n      line " + std::to_string(i + 1) + ": computed '" + g +
                    "' vs golden '" + w + "'";
  }
  out.detail +=
      "\n      note: the congruence classifier and the Clifford lift search "
      "independently agree on the computed verdict";
  return out;
}

// ---- criterion 2: self-conjugate epsilon=+1 enumeration, 3 <= n <= 15 ----
Outcome criterion2() {
  Outcome out;
  auto rows = emit_table2();
  auto golden_lines = lines_of(read_file(std::string(SPINLIFT_GOLDEN_DIR) + "/table2.csv"));
  golden_lines.erase(golden_lines.begin());  // header
  out.expect(golden_lines.size() == 11, "golden transcription must hold 11 rows");

  // Every golden row must appear with a matching verdict.
  for (const std::string& line : golden_lines) {
    size_t q2 = line.find('"', 1);
    Partition shape = Partition::parse(line.substr(1, q2 - 1));
    bool golden_spin = line.find(",spinorial") != std::string::npos;
    bool found = false;
    for (const auto& row : rows)
      if (row.shape == shape) {
        found = true;
        if (row.spinorial != golden_spin)
          out.fail("verdict mismatch for shape (" + shape.to_string() + ")");
      }
    if (!found) out.fail("missing golden shape (" + shape.to_string() + ")");
  }

  if (rows.size() != golden_lines.size()) {
    out.fail("enumeration yields " + std::to_string(rows.size()) +
             " self-conjugate epsilon=+1 shapes in 3..15, golden lists " +
             std::to_string(golden_lines.size()));
    for (const auto& row : rows) {
      bool in_golden = false;
      for (const std::string& line : golden_lines)
        if (line.find("\"" + row.shape.to_string() + "\"") == 0) in_golden = true;
      if (!in_golden)
        out.detail += "\n      extra shape: (" + row.shape.to_string() + ") size " +
                      std::to_string(row.size) +
                      (row.spinorial ? " spinorial" : " aspinorial");
    }
  }
  return out;
}

// ---- criteria 3 and 4: lift-search oracle equals the congruence criteria ----
std::vector<Partition> oracle_shapes() {
  std::vector<Partition> shapes;
  for (int n = 4; n <= 6; ++n)
    for (const Partition& shape : enumerate_partitions(n))
      if (shape.dimension() <= 14) shapes.push_back(shape);
  return shapes;
}

Outcome criterion3() {
  Outcome out;
  LiftOptions opt;
  opt.exhaustive = true;
  for (const Partition& shape : oracle_shapes()) {
    OrthogonalRep rep = young_orthogonal_matrices(shape);
    LiftSearchResult found = verify_sn_lift(rep, opt);
    bool expected = classify_sn(RepDescriptor::specht(shape)).spinorial;
    out.expect(found.exists == expected,
               "verdict mismatch at (" + shape.to_string() + ")");
    out.expect(found.lift_count == (expected ? 2 : 0),
               "lift count mismatch at (" + shape.to_string() + ")");
    out.expect(found.max_residual < 1e-8,
               "residual too large at (" + shape.to_string() + ")");
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  LiftOptions opt;
  opt.exhaustive = true;
  for (const Partition& shape : oracle_shapes()) {
    OrthogonalRep rep = alternating_generators(young_orthogonal_matrices(shape));
    LiftSearchResult found = verify_an_lift(rep, opt);
    bool expected = classify_an_restriction(RepDescriptor::specht(shape)).spinorial;
    out.expect(found.exists == expected,
               "verdict mismatch at (" + shape.to_string() + ")");
    out.expect(found.lift_count == (expected ? 1 : 0),
               "lift count mismatch at (" + shape.to_string() + ")");
    out.expect(found.max_residual < 1e-8,
               "residual too large at (" + shape.to_string() + ")");
  }
  return out;
}

// ---- criterion 5: skew-count route equals the border-strip route ----
Outcome criterion5() {
  Outcome out;
  for (int n = 1; n <= 14; ++n)
    for_each_partition(n, [&](const std::vector<int>& parts) {
      Partition shape(parts);
      GhPair skew = skew_g_h(shape);
      GhPair direct = g_and_h(specht_triple(shape));
      if (skew.g != direct.g || skew.h != direct.h)
        out.fail("mismatch at (" + shape.to_string() + ")");
    });
  return out;
}

// ---- criterion 6: skew expansion equals padded border-strip values ----
Outcome criterion6() {
  Outcome out;
  const Partition mus[] = {Partition{2}, Partition{1, 1}, Partition{2, 2},
                           Partition{1, 1, 1, 1}};
  for (int n = 2; n <= 10; ++n)
    for_each_partition(n, [&](const std::vector<int>& parts) {
      Partition shape(parts);
      for (const Partition& mu : mus) {
        if (mu.size() > n) continue;
        if (character_via_skew(shape, mu) !=
            character_value(shape, CycleType::padded(mu, n)))
          out.fail("mismatch at (" + shape.to_string() + ") / (" + mu.to_string() + ")");
      }
    });
  return out;
}

// ---- criterion 7: the three product routes coincide ----
Outcome criterion7() {
  Outcome out;
  for (int n = 4; n <= 6; ++n)
    for (int n2 = 4; n2 <= 6; ++n2)
      for (const Partition& a : enumerate_partitions(n))
        for (const Partition& b : enumerate_partitions(n2)) {
          RepDescriptor left = RepDescriptor::specht(a);
          RepDescriptor right = RepDescriptor::specht(b);
          CharTriple ta = specht_triple(a), tb = specht_triple(b);
          GhPair ga = g_and_h(ta), gb = g_and_h(tb);
          bool via_classify = classify_product(left, right).spinorial;
          bool via_five = product_five_conditions(ta.degree, ga.g, ga.h,
                                                  tb.degree, gb.g, gb.h);
          bool via_w = product_spin_via_w(left, right);
          if (via_classify != via_five || via_five != via_w)
            out.fail("route mismatch at (" + a.to_string() + ") x (" +
                     b.to_string() + ")");
        }
  return out;
}

// ---- criterion 8: class route equals congruence route, plus basis fixtures ----
Outcome criterion8() {
  Outcome out;
  for (int n = 2; n <= 12; ++n)
    for_each_partition(n, [&](const std::vector<int>& parts) {
      RepDescriptor rep = RepDescriptor::specht(Partition(parts));
      if (spin_via_w(rep) != classify_sn(rep).spinorial)
        out.fail("mismatch at (" + Partition(parts).to_string() + ")");
    });
  for (int n = 4; n <= 10; ++n) {
    H2Class e_cup =
        w2_of(RepDescriptor::sum({{RepDescriptor::specht(ones(n)), 2}}));
    out.expect(e_cup.e_cup_coef() == 1 && e_cup.w2_std_coef() == 0,
               "sgn + sgn must land on the cup-product basis vector");
    H2Class std_class = w2_of(RepDescriptor::perm_module(Partition{n - 1, 1}));
    out.expect(std_class.e_cup_coef() == 0 && std_class.w2_std_coef() == 1,
               "standard representation must land on the second basis vector");
  }
  return out;
}

// ---- criterion 9: regular and standard representation fixtures ----
Outcome criterion9() {
  Outcome out;
  for (int n = 4; n <= 10; ++n) {
    SpinReport reg = classify_sn(RepDescriptor::perm_module(ones(n)));
    out.expect(!reg.chiral.value() && reg.spinorial,
               "regular representation must be achiral and spinorial, n = " +
                   std::to_string(n));
  }
  for (int n = 2; n <= 10; ++n) {
    SpinReport std_rep = classify_sn(RepDescriptor::perm_module(Partition{n - 1, 1}));
    out.expect(!std_rep.spinorial,
               "standard representation must be aspinorial, n = " + std::to_string(n));
  }
  for (int n = 4; n <= 8; ++n) {
    CharTriple t{factorial(n) / 2, 0, 0, n, true};
    bool spin = classify_an_restriction(RepDescriptor::explicit_triple(t)).spinorial;
    out.expect(spin == (n != 4 && n != 5),
               "alternating regular representation verdict, n = " + std::to_string(n));
  }
  return out;
}

// ---- criterion 10: density trend and frozen regression values ----
Outcome criterion10() {
  Outcome out;
  struct Frozen {
    int n;
    long long count;
    long long total;
  };
  // Regression values computed once by this implementation and pinned.
  const Frozen frozen[] = {
      {10, 12, 42}, {20, 479, 627}, {30, 4068, 5604}, {40, 35322, 37338}};
  DensityPoint points[4];
  for (int i = 0; i < 4; ++i) {
    points[i] = density_sweep(frozen[i].n, 4);
    out.expect(points[i].achiral_spinorial == frozen[i].count &&
                   points[i].total == frozen[i].total,
               "frozen regression mismatch at n = " + std::to_string(frozen[i].n) +
                   " (got " + std::to_string(points[i].achiral_spinorial) + "/" +
                   std::to_string(points[i].total) + ")");
  }
  // Strict growth of the fraction from n = 10 to n = 40.
  long long lhs = points[3].achiral_spinorial * points[0].total;
  long long rhs = points[0].achiral_spinorial * points[3].total;
  out.expect(lhs > rhs, "fraction at n = 40 must strictly exceed n = 10");
  // Thread-count independence.
  DensityPoint serial = density_sweep(20, 1);
  out.expect(serial.achiral_spinorial == points[1].achiral_spinorial,
             "thread count changed the result");
  return out;
}

// ---- criterion 11: determinant twist never changes the verdict ----
Outcome criterion11() {
  Outcome out;
  for (int n = 2; n <= 6; ++n)
    for (const Partition& shape : enumerate_partitions(n)) {
      if (shape.dimension() + 1 > 14) continue;
      if (!det_twist_check(young_orthogonal_matrices(shape)))
        out.fail("verdict changed at (" + shape.to_string() + ")");
    }
  return out;
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "small-shape table reproduction", 1.0, criterion1},
      {2, "split-constituent table reproduction", 5.0, criterion2},
      {3, "lift oracle matches the symmetric-group criterion", 300.0, criterion3},
      {4, "lift oracle matches the alternating-group criterion", 300.0, criterion4},
      {5, "skew-count identities, exhaustive to n = 14", 60.0, criterion5},
      {6, "skew expansion identities, exhaustive to n = 10", 60.0, criterion6},
      {7, "product criteria coincide, 4 <= n, n' <= 6", 60.0, criterion7},
      {8, "class route equals congruence route, n <= 12", 60.0, criterion8},
      {9, "regular and standard representation fixtures", 30.0, criterion9},
      {10, "density trend and frozen regression values", 600.0, criterion10},
      {11, "determinant twist invariance", 120.0, criterion11},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_seconds)
      out.fail("runtime " + std::to_string(elapsed) + "s exceeds budget");
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL",
                c.number, c.title, elapsed, out.detail.empty() ? "" : " -- ",
                out.detail.c_str());
    if (!out.pass) ++failures;
  }
  if (failures)
    std::printf("%d of %zu criteria failing\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passing\n", criteria.size());
  return failures;
}
