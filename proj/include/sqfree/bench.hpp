#ifndef SQFREE_BENCH_HPP
#define SQFREE_BENCH_HPP

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "sqfree/decompose.hpp"
#include "sqfree/instance.hpp"

namespace sqfree {

struct BenchRecord {
  unsigned degree = 0;
  unsigned trial = 0;
  MfFormula formula = MfFormula::kCompanion;
  std::size_t s = 0;
  std::uint64_t wall_ns = 0;
  std::uint64_t scalar_muls = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Profile used by the benchmark when none is given: three factors with
/// exponents 1, 2, 3.
InstanceProfile default_bench_profile(std::uint64_t seed);

/// Seed of the instance for (degree, trial), derived from the profile seed.
std::uint64_t instance_seed(std::uint64_t seed, unsigned degree, unsigned trial);

/// Benchmark instance for one (degree, trial) cell.
Poly bench_instance(const InstanceProfile& profile, unsigned degree, unsigned trial);

/// For each degree and trial, builds one instance, prepares it once and
/// times M_f construction with both formulas on the same context. Records
/// are ordered by (degree, trial, formula). Runs on the calling thread.
std::vector<BenchRecord> bench_run(std::span<const unsigned> degrees, unsigned trials,
                                   const InstanceProfile& profile);

struct BenchSummaryRow {
  unsigned degree = 0;
  double mean_seconds_companion = 0;
  double mean_seconds_modmul = 0;
  double mean_muls_companion = 0;
  double mean_muls_modmul = 0;
};

/// Per-degree means, in order of first appearance.
std::vector<BenchSummaryRow> summarize(std::span<const BenchRecord> records);

std::string_view formula_name(MfFormula formula);

/// Header `degree,trial,formula,s,wall_ns,scalar_muls` then one LF-terminated
/// row per record. Throws std::ios_base::failure if the stream fails.
void emit_csv(std::span<const BenchRecord> records, std::ostream& out);
/// Inverse of emit_csv. Throws DomainError on malformed input.
std::vector<BenchRecord> parse_csv(std::string_view text);

}  // namespace sqfree

#endif  // SQFREE_BENCH_HPP
