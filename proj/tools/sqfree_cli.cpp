// Command-line front end over the sqfree C API.
//
//   sqfree decompose --formula a|b|yun [--verify] <poly | @file>
//   sqfree mf --formula a|b <poly | @file>
//   sqfree bench --degrees 10,20,50 --trials 10 --seed 42 [--csv out.csv]
//   sqfree generate --count 5 --seed 42
//
// Exit status: 0 success, 1 input error, 2 internal integrity error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqfree/sqfree.h"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitIntegrity = 2;
constexpr std::uint64_t kDefaultSeed = 42;

struct PolyDeleter {
  void operator()(sqf_poly* p) const { sqf_poly_free(p); }
};
struct DecompositionDeleter {
  void operator()(sqf_decomposition* d) const { sqf_decomposition_free(d); }
};
struct BenchDeleter {
  void operator()(sqf_bench* b) const { sqf_bench_free(b); }
};
using PolyPtr = std::unique_ptr<sqf_poly, PolyDeleter>;
using DecompositionPtr = std::unique_ptr<sqf_decomposition, DecompositionDeleter>;
using BenchPtr = std::unique_ptr<sqf_bench, BenchDeleter>;

// Thrown to unwind with a specific exit status after the message is printed.
struct Exit {
  int code;
};

int exit_code_for(sqf_status status) {
  return status == SQF_ERR_INTEGRITY || status == SQF_ERR_INTERNAL ? kExitIntegrity : kExitInput;
}

void check(sqf_status status, const std::string& context) {
  if (status == SQF_OK) return;
  std::cerr << "sqfree: " << context << ": " << sqf_last_error() << '\n';
  throw Exit{exit_code_for(status)};
}

std::string take_string(char* s) {
  std::string out(s);
  sqf_string_free(s);
  return out;
}

std::string format(const sqf_poly* p) {
  char* s = nullptr;
  check(sqf_poly_format(p, &s), "format");
  return take_string(s);
}

std::string read_input(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) {
    std::cerr << "sqfree: cannot read " << arg.substr(1) << '\n';
    throw Exit{kExitInput};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PolyPtr parse(const std::string& arg) {
  const std::string text = read_input(arg);
  sqf_poly* raw = nullptr;
  const sqf_status status = sqf_poly_parse(text.c_str(), &raw);
  if (status == SQF_ERR_PARSE) {
    const std::size_t pos = sqf_last_error_position();
    std::cerr << "sqfree: parse error: " << sqf_last_error() << '\n'
              << "  " << text << '\n'
              << "  " << std::string(std::min(pos, text.size()), ' ') << "^\n";
    throw Exit{kExitInput};
  }
  check(status, "parse");
  return PolyPtr(raw);
}

sqf_formula formula_of(const std::string& name) {
  if (name == "a" || name == "A") return SQF_FORMULA_COMPANION;
  if (name == "b" || name == "B") return SQF_FORMULA_MODMUL;
  return SQF_FORMULA_YUN;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SQFREE_SEED")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const unsigned long long v = std::stoull(text, &used, 10);
      if (used == text.size() && text.front() != '-') return v;
    } catch (const std::exception&) {
    }
    std::cerr << "sqfree: SQFREE_SEED must be a decimal unsigned 64-bit integer\n";
    throw Exit{kExitInput};
  }
  return kDefaultSeed;
}

int run_decompose(const std::string& formula, bool verify, const std::string& input) {
  const PolyPtr f = parse(input);
  sqf_decomposition* raw = nullptr;
  check(sqf_decompose(f.get(), formula_of(formula), &raw), "decompose");
  const DecompositionPtr d(raw);

  char* lead = nullptr;
  check(sqf_decomposition_lead(d.get(), &lead), "decompose");
  const std::string lead_text = take_string(lead);
  const std::size_t count = sqf_decomposition_count(d.get());
  if (lead_text != "1" || count == 0) std::cout << "lead: " << lead_text << '\n';
  for (std::size_t i = 0; i < count; ++i) {
    unsigned k = 0;
    sqf_poly* factor = nullptr;
    check(sqf_decomposition_factor(d.get(), i, &k, &factor), "decompose");
    const PolyPtr p(factor);
    std::size_t deg = 0;
    if (sqf_poly_degree(p.get(), &deg) == SQF_OK && deg == 0) continue;  // P_k = 1
    std::cout << '(' << format(p.get()) << ")^" << k << '\n';
  }

  if (verify) {
    int valid = 0;
    check(sqf_decomposition_verify(d.get(), f.get(), &valid), "verify");
    if (valid == 0) {
      std::cerr << "sqfree: verification failed: factors do not decompose the input\n";
      return kExitIntegrity;
    }
  }
  return 0;
}

int run_mf(const std::string& formula, const std::string& input) {
  const PolyPtr f = parse(input);
  sqf_poly* raw = nullptr;
  check(sqf_mf(f.get(), formula_of(formula), &raw, nullptr), "mf");
  const PolyPtr m(raw);
  std::cout << format(m.get()) << '\n';
  return 0;
}

int run_bench(const std::vector<unsigned>& degrees, unsigned trials, std::uint64_t seed,
              const std::string& csv_path, unsigned coeff_bound) {
  sqf_profile profile;
  sqf_profile_default(&profile, seed);
  profile.coeff_bound = coeff_bound;
  sqf_bench* raw = nullptr;
  check(sqf_bench_run(degrees.data(), degrees.size(), trials, &profile, &raw), "bench");
  const BenchPtr b(raw);

  std::cout << "seed " << seed << ", " << trials << " trial(s) per degree; mean seconds\n";
  std::cout << std::setw(8) << "degree" << " | " << std::setw(14) << "formula A" << " | "
            << std::setw(14) << "formula B" << " | " << std::setw(10) << "A/B" << '\n';
  std::cout << std::string(8, '-') << "-+-" << std::string(14, '-') << "-+-"
            << std::string(14, '-') << "-+-" << std::string(10, '-') << '\n';
  for (std::size_t i = 0; i < sqf_bench_summary_count(b.get()); ++i) {
    sqf_bench_summary_row row;
    check(sqf_bench_summary_at(b.get(), i, &row), "bench");
    std::cout << std::setw(8) << row.degree << " | " << std::fixed << std::setprecision(6)
              << std::setw(14) << row.mean_seconds_companion << " | " << std::setw(14)
              << row.mean_seconds_modmul << " | " << std::setprecision(1) << std::setw(10)
              << (row.mean_seconds_modmul > 0 ? row.mean_seconds_companion / row.mean_seconds_modmul
                                               : 0.0)
              << '\n';
  }
  if (!csv_path.empty()) check(sqf_bench_write_csv(b.get(), csv_path.c_str()), "csv");
  return 0;
}

int run_generate(unsigned count, std::uint64_t seed, const sqf_profile& shape) {
  for (unsigned i = 0; i < count; ++i) {
    sqf_profile p = shape;
    p.seed = seed + i;
    sqf_poly* raw = nullptr;
    check(sqf_random_instance(&p, &raw), "generate");
    const PolyPtr f(raw);
    std::cout << format(f.get()) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-free decomposition over the rationals via the roots-multiplicity polynomial"};
  app.require_subcommand(1);

  std::string formula = "b";
  bool verify = false;
  std::string input;
  auto* decompose = app.add_subcommand("decompose", "Print the square-free factors as (P_k)^k");
  decompose->add_option("--formula", formula, "a (companion), b (modular product) or yun")
      ->check(CLI::IsMember({"a", "b", "yun", "A", "B"}));
  decompose->add_flag("--verify", verify, "Check the decomposition; exit 2 on mismatch");
  decompose->add_option("poly", input, "Polynomial text or @file")->required();

  std::string mf_formula = "b";
  std::string mf_input;
  auto* mf = app.add_subcommand("mf", "Print the roots-multiplicity polynomial M_f");
  mf->add_option("--formula", mf_formula, "a (companion) or b (modular product)")
      ->check(CLI::IsMember({"a", "b", "A", "B"}));
  mf->add_option("poly", mf_input, "Polynomial text or @file")->required();

  std::vector<unsigned> degrees{10, 20, 50, 100, 200};
  unsigned trials = 10;
  std::uint64_t seed = 0;
  std::string csv_path;
  unsigned coeff_bound = 10;
  auto* bench = app.add_subcommand("bench", "Time M_f construction with both formulas");
  auto* bench_seed = bench->add_option("--seed", seed, "PRNG seed (default $SQFREE_SEED or 42)");
  bench->add_option("--degrees", degrees, "Target degrees")->delimiter(',');
  bench->add_option("--trials", trials, "Instances per degree")->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv_path, "Write per-run records as CSV");
  bench->add_option("--coeff-bound", coeff_bound, "Factor coefficients in [-B, B]")
      ->check(CLI::PositiveNumber);

  unsigned count = 5;
  std::uint64_t gen_seed = 0;
  sqf_profile gen_profile{3, 6, 3, 10, 0};
  auto* generate = app.add_subcommand("generate", "Print random monic test polynomials");
  generate->add_option("--count", count, "Number of polynomials");
  auto* gen_seed_opt = generate->add_option("--seed", gen_seed, "First seed (default $SQFREE_SEED or 42)");
  generate->add_option("--factors", gen_profile.num_factors, "Base factors per polynomial");
  generate->add_option("--max-factor-degree", gen_profile.max_factor_degree, "Largest base factor degree");
  generate->add_option("--max-exponent", gen_profile.max_exponent, "Largest exponent");
  generate->add_option("--coeff-bound", gen_profile.coeff_bound, "Factor coefficients in [-B, B]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*decompose) return run_decompose(formula, verify, input);
    if (*mf) return run_mf(mf_formula, mf_input);
    if (*bench) return run_bench(degrees, trials, *bench_seed ? seed : default_seed(), csv_path, coeff_bound);
    if (*generate) return run_generate(count, *gen_seed_opt ? gen_seed : default_seed(), gen_profile);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitInput;
}
