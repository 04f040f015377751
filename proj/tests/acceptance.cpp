// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] must be the path to the zono CLI binary (used by the determinism
// criterion).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zonotopal/verify.hpp"

#include "instances.hpp"

using namespace zonotopal;

namespace {

std::string cli_path;

bool suites_pass(const std::vector<VectorList>& instances,
                 const std::function<std::vector<CheckResult>(const VectorList&)>& suite,
                 std::string& detail) {
  bool pass = true;
  for (const auto& x : instances)
    for (const auto& r : suite(x))
      if (!r.pass) {
        pass = false;
        detail += " [s=" + std::to_string(x.dim) + ",m=" + std::to_string(x.size()) + "] " +
                  r.name + (r.detail.empty() ? "" : ": " + r.detail) + ";";
      }
  return pass;
}

bool criterion1(std::string& detail) {
  for (int k = 0; k <= 5; ++k) {
    const VectorList x = testutil::ones(k + 1);
    const GradedDims dims = dspace_dims(x);
    if (dims.dims != std::vector<long long>(k + 1, 1)) {
      detail = "solution-space dims wrong for k=" + std::to_string(k);
      return false;
    }
    for (const Rational& c : {Rational(1), Rational(2), Rational(1, 2), Rational(7, 3),
                              Rational(13, 5)}) {
      Rational expected = 1;
      for (int i = 0; i < k; ++i) expected *= c;
      expected /= Rational(factorial(k));
      if (eval_T(x, {c}) != expected) {
        detail = "truncated power wrong at k=" + std::to_string(k) + ", x=" + to_string(c);
        return false;
      }
    }
    if (filtration_report(x).total != k + 2) {
      detail = "filtration total wrong for k=" + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool criterion9(std::string& detail) {
  if (cli_path.empty()) {
    detail = "no CLI path given on the command line";
    return false;
  }
  const std::string dir = "acceptance_tmp";
  std::system(("mkdir -p " + dir).c_str());
  const std::string input = dir + "/input.json";
  {
    std::ofstream out(input);
    out << R"({"dim": 2, "vectors": [[1,0],[0,1],[1,1]]})" << "\n";
  }
  auto run = [&](const std::string& out_file) {
    const std::string cmd = cli_path + " --input " + input + " verify --suite all > " +
                            out_file + " 2>/dev/null";
    return std::system(cmd.c_str());
  };
  if (run(dir + "/a.json") != 0 || run(dir + "/b.json") != 0) {
    detail = "CLI verify run failed";
    return false;
  }
  std::ifstream a(dir + "/a.json"), b(dir + "/b.json");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  if (sa.str().empty() || sa.str() != sb.str()) {
    detail = "reports differ between runs";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const auto family = testutil::family();
  const auto splines = testutil::spline_family();

  struct Criterion {
    std::string description;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {"repeated-ones lists: unit dims, c^k/k! values, filtration total k+2",
       [](std::string& d) { return criterion1(d); }},
      {"graded duality: solution dims equal Hilbert function, pairing nonsingular",
       [&](std::string& d) { return suites_pass(family, verify_duality_suite, d); }},
      {"basis count: Hilbert total = tutte(1,1) = number of bases",
       [&](std::string& d) {
         bool pass = true;
         for (const auto& x : family) {
           const GradedDims h = hilbert(x, IdealSpec::cocircuit_full());
           const long long bases = static_cast<long long>(enumerate_bases(x).size());
           if (h.truncated || h.total() != bases || tutte(x).poly.eval(1, 1) != bases) {
             pass = false;
             d += " [s=" + std::to_string(x.dim) + ",m=" + std::to_string(x.size()) + "]";
           }
         }
         return pass;
       }},
      {"intersection formula for admissible families (full for s<=2, sampled for s=3)",
       [&](std::string& d) { return suites_pass(family, verify_lamain_suite, d); }},
      {"Hilbert function matches the external-activity statistic",
       [&](std::string& d) { return suites_pass(family, verify_tutte_suite, d); }},
      {"filtration exactness and independent-sublist totals",
       [&](std::string& d) { return suites_pass(family, verify_exactseq_suite, d); }},
      {"spline identities: deletion under derivative, chamber holdout validation",
       [&](std::string& d) { return suites_pass(splines, verify_spline_suite, d); }},
      {"compact-support grading: even degrees in [2m, 4m-2s], total = basis count",
       [&](std::string&) {
         bool pass = true;
         for (const auto& x : family) {
           const CompactSupportTable t = compact_support_betti_fin(x);
           long long total = 0;
           for (const auto& [h, dim] : t.entries) {
             if (h % 2 != 0 || h < 2 * x.size() || h > 4 * x.size() - 2 * x.dim) pass = false;
             total += dim;
           }
           if (total != static_cast<long long>(enumerate_bases(x).size())) pass = false;
         }
         return pass;
       }},
      {"determinism: two CLI verify runs produce byte-identical reports",
       [](std::string& d) { return criterion9(d); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("%s criterion %zu: %s (%lld ms)%s\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].description.c_str(), static_cast<long long>(ms),
                detail.empty() ? "" : ("  --" + detail).c_str());
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
