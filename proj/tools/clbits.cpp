// Command-line front end: classification, the nu cube, EFB tables,
// multivector products, invariant suites and the op-count benchmark.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clbits/blade_kernels.hpp"
#include "clbits/classify.hpp"
#include "clbits/efb_convert.hpp"
#include "clbits/efb_kernels.hpp"
#include "clbits/multivector.hpp"
#include "clbits/render.hpp"
#include "clbits/verify.hpp"

namespace {

using namespace clbits;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  unsigned k = 0;
  unsigned l = 0;
  unsigned m = 2;
  std::string lhs;
  std::string rhs;
  std::string engine = "efb";
  std::string level = "quick";
  unsigned m_max = 6;
};

int cmd_classify(const Options& o) {
  const AlgebraClass c = classify(o.k, o.l);
  if (o.json)
    std::cout << classification_json(c).dump(2) << "\n";
  else
    std::cout << classification_text(c, ascii_forced_by_env());
  return kExitOk;
}

int cmd_cube(const Options& o) {
  if (o.json)
    std::cout << cube_json().dump(2) << "\n";
  else
    std::cout << cube_text(ascii_forced_by_env());
  return kExitOk;
}

int cmd_efb_table(const Options& o) {
  if (o.json)
    std::cout << efb_table_json(o.m).dump(2) << "\n";
  else
    std::cout << efb_table_text(o.m, ascii_forced_by_env());
  return kExitOk;
}

Multivector multiply_with(const std::string& engine, const Multivector& x, const Multivector& y, unsigned m) {
  if (engine == "blade") return x * y;
  return efb_to_blades(efb_product(blades_to_efb(x, m), blades_to_efb(y, m)));
}

int cmd_mul(const Options& o) {
  const auto metric = neutral_metric(o.m);
  Multivector x(metric);
  Multivector y(metric);
  try {
    x = parse_multivector(o.lhs, metric);
    y = parse_multivector(o.rhs, metric);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (o.engine != "both") {
    const std::string product = to_string(multiply_with(o.engine, x, y, o.m));
    if (o.json)
      std::cout << json{{"m", o.m}, {"engine", o.engine}, {"lhs", to_string(x)}, {"rhs", to_string(y)}, {"product", product}}.dump(2)
                << "\n";
    else
      std::cout << product << "\n";
    return kExitOk;
  }
  const std::string by_blade = to_string(multiply_with("blade", x, y, o.m));
  const std::string by_efb = to_string(multiply_with("efb", x, y, o.m));
  const bool same = by_blade == by_efb;
  if (o.json) {
    std::cout << json{{"m", o.m}, {"engine", "both"}, {"lhs", to_string(x)}, {"rhs", to_string(y)},
                      {"blade", by_blade}, {"efb", by_efb}, {"identical", same}}
                     .dump(2)
              << "\n";
  } else if (same) {
    std::cout << by_efb << "\n";
  } else {
    std::cout << "blade: " << by_blade << "\nefb:   " << by_efb << "\n";
  }
  if (!same) std::cerr << "error: engines disagree\n";
  return same ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o) {
  const auto results = run_verification(o.level == "full" ? VerifyLevel::Full : VerifyLevel::Quick);
  bool ok = true;
  json suites = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    suites.push_back({{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}, {"seconds", r.seconds},
                      {"passed", r.passed()}, {"first_failure", r.first_failure}});
  }
  if (o.json) {
    std::cout << json{{"level", o.level}, {"passed", ok}, {"suites", suites}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(34) << r.name << std::right
                << std::setw(9) << (r.checked - r.failures) << "/" << r.checked << "  " << std::fixed
                << std::setprecision(2) << r.seconds << " s";
      if (!r.first_failure.empty()) std::cout << "  first failure: " << r.first_failure;
      std::cout << "\n";
    }
    std::cout << (ok ? "all suites passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_bench(const Options& o) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> value(0.5, 1.5);
  bool ok = true;
  json rows = json::array();
  if (!o.json)
    std::cout << "   m      blade pairs      EFB triples  ratio   blade ms     EFB ms  EFB omp ms\n";
  for (unsigned m = 1; m <= o.m_max; ++m) {
    const Metric metric = Metric::interleaved(m);
    std::vector<double> x(std::size_t{1} << (2 * m));
    std::vector<double> y(x.size());
    for (auto& v : x) v = value(rng);
    for (auto& v : y) v = value(rng);
    EFBMultivector<double> ex(m);
    EFBMultivector<double> ey(m);
    for (auto& v : ex.data()) v = value(rng);
    for (auto& v : ey.data()) v = value(rng);

    OpCounts blade_counts;
    OpCounts efb_counts;
    const double blade_ms =
        time_ms([&] { dense_blade_product_parallel<double>(x, y, metric, &blade_counts); });
    const double efb_ms = time_ms([&] { efb_product_serial(ex, ey, &efb_counts); });
    const double efb_omp_ms = time_ms([&] { efb_product_parallel(ex, ey); });

    const std::uint64_t expected = std::uint64_t{1} << m;
    const bool exact = efb_counts.multiplies * expected == blade_counts.multiplies;
    ok = ok && exact;
    const double ratio = static_cast<double>(blade_counts.multiplies) / static_cast<double>(efb_counts.multiplies);
    rows.push_back({{"m", m}, {"blade_pairs", blade_counts.multiplies}, {"efb_triples", efb_counts.multiplies},
                    {"ratio", ratio}, {"expected_ratio", expected}, {"ratio_exact", exact},
                    {"blade_ms", blade_ms}, {"efb_ms", efb_ms}, {"efb_omp_ms", efb_omp_ms}});
    if (!o.json) {
      std::cout << std::setw(4) << m << std::setw(17) << blade_counts.multiplies << std::setw(17)
                << efb_counts.multiplies << std::setw(7) << std::setprecision(0) << std::fixed << ratio
                << std::setprecision(3) << std::setw(11) << blade_ms << std::setw(11) << efb_ms << std::setw(12)
                << efb_omp_ms << (exact ? "" : "  ratio != 2^m") << "\n";
    }
  }
  if (o.json) std::cout << json{{"passed", ok}, {"rows", rows}}.dump(2) << "\n";
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra kernel: EFB products for Cl(m,m) and the mod-8 classification"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "Classify the real Clifford algebra Cl(k,l)");
  classify_cmd->add_option("k", o.k, "generators squaring to +1")->required();
  classify_cmd->add_option("l", o.l, "generators squaring to -1")->required();

  auto* cube_cmd = app.add_subcommand("cube", "Render the nu cube");

  auto* table_cmd = app.add_subcommand("efb-table", "Print the EFB matrix of Cl(m,m)");
  table_cmd->add_option("m", o.m, "slot count")->required()->check(CLI::Range(1U, 4U));

  auto* mul_cmd = app.add_subcommand("mul", "Multiply two multivectors of Cl(m,m)");
  mul_cmd->add_option("m", o.m, "slot count")->required()->check(CLI::Range(1U, kMaxSlots));
  mul_cmd->add_option("lhs", o.lhs, "left operand, e.g. \"1/2 g1 g2 - 3 g4\"")->required();
  mul_cmd->add_option("rhs", o.rhs, "right operand")->required();
  mul_cmd->add_option("--engine", o.engine, "efb, blade or both")
      ->check(CLI::IsMember({"efb", "blade", "both"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  auto* bench_cmd = app.add_subcommand("bench", "Operation counts and timings, blade vs EFB products");
  bench_cmd->add_option("m_max", o.m_max, "largest slot count")->check(CLI::Range(1U, kMaxSlots));

  for (auto* cmd : {classify_cmd, cube_cmd, table_cmd, mul_cmd, verify_cmd, bench_cmd})
    cmd->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*cube_cmd) return cmd_cube(o);
    if (*table_cmd) return cmd_efb_table(o);
    if (*mul_cmd) return cmd_mul(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*bench_cmd) return cmd_bench(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
