#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpcurve/counting.hpp"

namespace cpcurve {

/// Version string recorded in on-disk caches; bump to invalidate them.
inline constexpr const char* kVersion = "0.1.0";

enum class RowClass { Maximal, Minimal, Neither, Singular, None };

std::string row_class_name(RowClass c);  ///< "maximal" / ... / "" for None

struct SurveyRow {
    std::uint64_t p;
    unsigned p_mod_3;
    bool superspecial;
    bool singular;                      ///< p = 3 (verdict reported as false)
    std::optional<std::uint64_t> count; ///< #C_p(F_{p^2}) when counted
    RowClass classification;            ///< None when counts were skipped
    std::int64_t hw_upper;
    std::int64_t hw_lower;
};

/// Primes in [lo, hi] by a sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// One row per prime in [min_p, max_p], sorted ascending. Rows are computed
/// concurrently on `jobs` workers (0 = hardware concurrency) and assembled
/// in order, so output is deterministic. If `cache_file` is nonempty,
/// verdicts and counts are reused from / appended to that JSON-lines file,
/// keyed by p and the version string.
std::vector<SurveyRow> run_survey(std::uint64_t min_p, std::uint64_t max_p, bool with_counts,
                                  unsigned jobs = 0, const std::string& cache_file = {});

struct DensityReport {
    std::uint64_t limit;
    std::uint64_t primes_considered;   ///< primes p with 3 < p <= limit
    std::uint64_t superspecial_count;  ///< of those, p = 2 (mod 3)
    double ratio;
    double expected;                   ///< 1/2 (density of p = 2 mod 3 by Dirichlet)
};

/// Requires limit >= 5.
DensityReport density_scan(std::uint64_t limit);

enum class TableFormat { Csv, Json, Markdown };

/// Note attached to rows whose verdict is misprinted in the previously
/// published survey of this curve family ("" for all but p = 37).
std::string published_verdict_note(std::uint64_t p);

/// Deterministic serialization; identical rows yield byte-identical output.
/// CSV header: p,p_mod_3,superspecial,count_fp2,classification,hw_upper,
/// hw_lower with LF line endings; `with_notes` appends a note column.
std::string emit(const std::vector<SurveyRow>& rows, TableFormat format,
                 bool with_notes = false);

}  // namespace cpcurve
