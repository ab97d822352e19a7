#include "sqfree/sqfree.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "sqfree/bench.hpp"
#include "sqfree/decompose.hpp"
#include "sqfree/error.hpp"
#include "sqfree/poly.hpp"

struct sqf_poly {
  sqfree::Poly value;
};

struct sqf_decomposition {
  sqfree::Decomposition value;
};

struct sqf_bench {
  std::vector<sqfree::BenchRecord> records;
  std::vector<sqfree::BenchSummaryRow> summary;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_position = 0;

sqf_status fail(sqf_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions to a status and recording the message.
template <typename Body>
sqf_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return SQF_OK;
  } catch (const sqfree::ParseError& e) {
    last_error_position = e.position();
    return fail(SQF_ERR_PARSE, e.what());
  } catch (const sqfree::DomainError& e) {
    return fail(SQF_ERR_INVALID, e.what());
  } catch (const sqfree::IntegrityError& e) {
    return fail(SQF_ERR_INTEGRITY, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(SQF_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SQF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SQF_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool to_formula(sqf_formula f, sqfree::MfFormula& out) {
  switch (f) {
    case SQF_FORMULA_COMPANION:
      out = sqfree::MfFormula::kCompanion;
      return true;
    case SQF_FORMULA_MODMUL:
      out = sqfree::MfFormula::kModMul;
      return true;
    default:
      return false;
  }
}

sqfree::InstanceProfile to_profile(const sqf_profile& p) {
  return {p.num_factors, p.max_factor_degree, p.max_exponent, p.coeff_bound, p.seed};
}

#define SQF_REQUIRE(cond)                                               \
  do {                                                                  \
    if (!(cond)) return fail(SQF_ERR_INVALID, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* sqf_version(void) { return "1.0.0"; }

const char* sqf_last_error(void) { return last_error.c_str(); }

size_t sqf_last_error_position(void) { return last_error_position; }

void sqf_string_free(char* s) { std::free(s); }

sqf_status sqf_poly_parse(const char* text, sqf_poly** out) {
  SQF_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] { *out = new sqf_poly{sqfree::parse_poly(text)}; });
}

sqf_status sqf_poly_from_coeffs(const char* const* coeffs, size_t count, sqf_poly** out) {
  SQF_REQUIRE(out != nullptr && (count == 0 || coeffs != nullptr));
  return guarded([&] {
    std::vector<sqfree::Rational> c;
    c.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (coeffs[i] == nullptr) throw sqfree::DomainError("null coefficient string");
      c.push_back(sqfree::Rational::from_string(coeffs[i]));
    }
    *out = new sqf_poly{sqfree::Poly(std::move(c))};
  });
}

void sqf_poly_free(sqf_poly* p) { delete p; }

sqf_status sqf_poly_format(const sqf_poly* p, char** out) {
  SQF_REQUIRE(p != nullptr && out != nullptr);
  return guarded([&] { *out = dup_string(sqfree::format_poly(p->value)); });
}

int sqf_poly_is_zero(const sqf_poly* p) { return p != nullptr && p->value.is_zero() ? 1 : 0; }

sqf_status sqf_poly_degree(const sqf_poly* p, size_t* out) {
  SQF_REQUIRE(p != nullptr && out != nullptr);
  const auto deg = p->value.degree();
  if (!deg) return fail(SQF_ERR_INVALID, "the zero polynomial has no degree");
  *out = *deg;
  last_error.clear();
  return SQF_OK;
}

size_t sqf_poly_size(const sqf_poly* p) { return p == nullptr ? 0 : p->value.size(); }

sqf_status sqf_poly_coeff(const sqf_poly* p, size_t power, char** out) {
  SQF_REQUIRE(p != nullptr && out != nullptr);
  return guarded([&] { *out = dup_string(p->value.coeff(power).to_string()); });
}

int sqf_poly_equal(const sqf_poly* a, const sqf_poly* b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

sqf_status sqf_mf(const sqf_poly* f, sqf_formula formula, sqf_poly** out, uint64_t* scalar_muls) {
  SQF_REQUIRE(f != nullptr && out != nullptr);
  sqfree::MfFormula which;
  if (!to_formula(formula, which)) {
    return fail(SQF_ERR_INVALID, "M_f supports the companion and modmul formulas only");
  }
  return guarded([&] {
    if (f->value.is_zero()) throw sqfree::DomainError("M_f of the zero polynomial");
    const auto ctx = sqfree::gs_prepare(sqfree::monic(f->value));
    sqfree::OpCounter counter;
    sqfree::Poly m;
    {
      sqfree::CountingScope scope(counter);
      m = sqfree::mf(ctx, which);
    }
    *out = new sqf_poly{std::move(m)};
    if (scalar_muls != nullptr) *scalar_muls = counter.scalar_muls;
  });
}

sqf_status sqf_decompose(const sqf_poly* f, sqf_formula formula, sqf_decomposition** out) {
  SQF_REQUIRE(f != nullptr && out != nullptr);
  sqfree::MfFormula which{};
  if (formula != SQF_FORMULA_YUN && !to_formula(formula, which)) {
    return fail(SQF_ERR_INVALID, "unknown formula");
  }
  return guarded([&] {
    auto d = formula == SQF_FORMULA_YUN ? sqfree::yun_decompose(f->value)
                                        : sqfree::gs_decompose(f->value, which);
    *out = new sqf_decomposition{std::move(d)};
  });
}

void sqf_decomposition_free(sqf_decomposition* d) { delete d; }

size_t sqf_decomposition_count(const sqf_decomposition* d) {
  return d == nullptr ? 0 : d->value.factors.size();
}

sqf_status sqf_decomposition_factor(const sqf_decomposition* d, size_t index, unsigned* exponent,
                                    sqf_poly** factor) {
  SQF_REQUIRE(d != nullptr);
  if (index >= d->value.factors.size()) return fail(SQF_ERR_RANGE, "factor index out of range");
  return guarded([&] {
    const auto& entry = d->value.factors[index];
    if (factor != nullptr) *factor = new sqf_poly{entry.factor};
    if (exponent != nullptr) *exponent = entry.exponent;
  });
}

sqf_status sqf_decomposition_lead(const sqf_decomposition* d, char** out) {
  SQF_REQUIRE(d != nullptr && out != nullptr);
  return guarded([&] { *out = dup_string(d->value.lead.to_string()); });
}

sqf_status sqf_decomposition_verify(const sqf_decomposition* d, const sqf_poly* f, int* valid) {
  SQF_REQUIRE(d != nullptr && f != nullptr && valid != nullptr);
  return guarded([&] { *valid = sqfree::verify_decomposition(d->value, f->value) ? 1 : 0; });
}

void sqf_profile_default(sqf_profile* profile, uint64_t seed) {
  if (profile == nullptr) return;
  const auto p = sqfree::default_bench_profile(seed);
  *profile = {p.num_factors, p.max_factor_degree, p.max_exponent, p.coeff_bound, p.seed};
}

sqf_status sqf_random_instance(const sqf_profile* profile, sqf_poly** out) {
  SQF_REQUIRE(profile != nullptr && out != nullptr);
  return guarded([&] { *out = new sqf_poly{sqfree::random_instance(to_profile(*profile))}; });
}

sqf_status sqf_bench_run(const unsigned* degrees, size_t num_degrees, unsigned trials,
                         const sqf_profile* profile, sqf_bench** out) {
  SQF_REQUIRE(profile != nullptr && out != nullptr && (num_degrees == 0 || degrees != nullptr));
  return guarded([&] {
    auto b = std::make_unique<sqf_bench>();
    b->records = sqfree::bench_run(std::span<const unsigned>(degrees, num_degrees), trials,
                                   to_profile(*profile));
    b->summary = sqfree::summarize(b->records);
    *out = b.release();
  });
}

void sqf_bench_free(sqf_bench* b) { delete b; }

size_t sqf_bench_count(const sqf_bench* b) { return b == nullptr ? 0 : b->records.size(); }

sqf_status sqf_bench_record_at(const sqf_bench* b, size_t index, sqf_bench_record* out) {
  SQF_REQUIRE(b != nullptr && out != nullptr);
  if (index >= b->records.size()) return fail(SQF_ERR_RANGE, "record index out of range");
  const auto& r = b->records[index];
  *out = {r.degree,
          r.trial,
          r.formula == sqfree::MfFormula::kCompanion ? SQF_FORMULA_COMPANION : SQF_FORMULA_MODMUL,
          r.s,
          r.wall_ns,
          r.scalar_muls};
  last_error.clear();
  return SQF_OK;
}

size_t sqf_bench_summary_count(const sqf_bench* b) { return b == nullptr ? 0 : b->summary.size(); }

sqf_status sqf_bench_summary_at(const sqf_bench* b, size_t index, sqf_bench_summary_row* out) {
  SQF_REQUIRE(b != nullptr && out != nullptr);
  if (index >= b->summary.size()) return fail(SQF_ERR_RANGE, "summary index out of range");
  const auto& r = b->summary[index];
  *out = {r.degree, r.mean_seconds_companion, r.mean_seconds_modmul, r.mean_muls_companion,
          r.mean_muls_modmul};
  last_error.clear();
  return SQF_OK;
}

sqf_status sqf_bench_csv(const sqf_bench* b, char** out) {
  SQF_REQUIRE(b != nullptr && out != nullptr);
  return guarded([&] {
    std::ostringstream os;
    sqfree::emit_csv(b->records, os);
    *out = dup_string(os.str());
  });
}

sqf_status sqf_bench_write_csv(const sqf_bench* b, const char* path) {
  SQF_REQUIRE(b != nullptr && path != nullptr);
  std::ofstream file(path, std::ios::binary);
  if (!file) return fail(SQF_ERR_IO, (std::string("cannot open ") + path).c_str());
  return guarded([&] { sqfree::emit_csv(b->records, file); });
}

}  // extern "C"
