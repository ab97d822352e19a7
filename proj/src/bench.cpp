#include "sqfree/bench.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <string>

#include "sqfree/error.hpp"

namespace sqfree {

InstanceProfile default_bench_profile(std::uint64_t seed) {
  InstanceProfile p;
  p.num_factors = 3;
  p.max_exponent = 3;
  p.max_factor_degree = 1000;
  p.coeff_bound = 10;
  p.seed = seed;
  return p;
}

std::uint64_t instance_seed(std::uint64_t seed, unsigned degree, unsigned trial) {
  // splitmix64 finalizer over the packed cell coordinates.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (1 + ((std::uint64_t{degree} << 32) | trial));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Poly bench_instance(const InstanceProfile& profile, unsigned degree, unsigned trial) {
  const auto shape = steer_shape(profile, degree);
  Prng rng(instance_seed(profile.seed, degree, trial));
  return random_instance(shape, profile.coeff_bound, rng);
}

std::vector<BenchRecord> bench_run(std::span<const unsigned> degrees, unsigned trials,
                                   const InstanceProfile& profile) {
  if (degrees.empty()) throw DomainError("benchmark needs at least one degree");
  if (trials == 0) throw DomainError("benchmark needs at least one trial");
  for (unsigned degree : degrees) steer_shape(profile, degree);

  using Clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  records.reserve(degrees.size() * trials * 2);
  for (unsigned degree : degrees) {
    for (unsigned trial = 0; trial < trials; ++trial) {
      const GSContext ctx = gs_prepare(bench_instance(profile, degree, trial));
      Poly results[2];
      for (MfFormula formula : {MfFormula::kCompanion, MfFormula::kModMul}) {
        OpCounter counter;
        Clock::time_point start, stop;
        {
          CountingScope scope(counter);
          start = Clock::now();
          results[static_cast<int>(formula)] = mf(ctx, formula);
          stop = Clock::now();
        }
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        records.push_back({degree, trial, formula, ctx.s, static_cast<std::uint64_t>(ns),
                           counter.scalar_muls});
      }
      if (results[0] != results[1]) {
        throw IntegrityError("formulas disagree on M_f at degree " + std::to_string(degree));
      }
    }
  }
  return records;
}

std::vector<BenchSummaryRow> summarize(std::span<const BenchRecord> records) {
  struct Acc {
    double seconds[2] = {0, 0};
    double muls[2] = {0, 0};
    unsigned count[2] = {0, 0};
  };
  std::vector<unsigned> order;
  std::map<unsigned, Acc> acc;
  for (const auto& rec : records) {
    if (!acc.contains(rec.degree)) order.push_back(rec.degree);
    auto& a = acc[rec.degree];
    const int f = static_cast<int>(rec.formula);
    a.seconds[f] += static_cast<double>(rec.wall_ns) * 1e-9;
    a.muls[f] += static_cast<double>(rec.scalar_muls);
    ++a.count[f];
  }
  std::vector<BenchSummaryRow> rows;
  for (unsigned degree : order) {
    const auto& a = acc[degree];
    const auto mean = [](double total, unsigned n) { return n == 0 ? 0.0 : total / n; };
    rows.push_back({degree, mean(a.seconds[0], a.count[0]), mean(a.seconds[1], a.count[1]),
                    mean(a.muls[0], a.count[0]), mean(a.muls[1], a.count[1])});
  }
  return rows;
}

std::string_view formula_name(MfFormula formula) {
  return formula == MfFormula::kCompanion ? "A" : "B";
}

void emit_csv(std::span<const BenchRecord> records, std::ostream& out) {
  const auto old_mask = out.exceptions();
  out.exceptions(std::ios::badbit | std::ios::failbit);
  out << "degree,trial,formula,s,wall_ns,scalar_muls\n";
  for (const auto& r : records) {
    out << r.degree << ',' << r.trial << ',' << formula_name(r.formula) << ',' << r.s << ','
        << r.wall_ns << ',' << r.scalar_muls << '\n';
  }
  out.flush();
  out.exceptions(old_mask);
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "degree,trial,formula,s,wall_ns,scalar_muls") {
    throw DomainError("missing or wrong CSV header");
  }
  std::vector<BenchRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string fields[6];
    for (int i = 0; i < 6; ++i) {
      if (!std::getline(row, fields[i], ',')) throw DomainError("short CSV row: " + line);
    }
    BenchRecord r;
    try {
      r.degree = static_cast<unsigned>(std::stoul(fields[0]));
      r.trial = static_cast<unsigned>(std::stoul(fields[1]));
      if (fields[2] == "A") {
        r.formula = MfFormula::kCompanion;
      } else if (fields[2] == "B") {
        r.formula = MfFormula::kModMul;
      } else {
        throw DomainError("unknown formula '" + fields[2] + "'");
      }
      r.s = std::stoull(fields[3]);
      r.wall_ns = std::stoull(fields[4]);
      r.scalar_muls = std::stoull(fields[5]);
    } catch (const std::logic_error&) {
      throw DomainError("malformed CSV row: " + line);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace sqfree
