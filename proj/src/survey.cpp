#include "cpcurve/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <thread>

#include <json.hpp>

#include "cpcurve/hasse_witt.hpp"

namespace cpcurve {

std::string row_class_name(RowClass c) {
    switch (c) {
        case RowClass::Maximal: return "maximal";
        case RowClass::Minimal: return "minimal";
        case RowClass::Neither: return "neither";
        case RowClass::Singular: return "singular";
        case RowClass::None: return "";
    }
    return "";
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> primes;
    if (hi < 2) return primes;
    std::vector<std::uint8_t> composite(hi + 1, 0);
    for (std::uint64_t n = 2; n <= hi; ++n) {
        if (composite[n]) continue;
        if (n >= lo) primes.push_back(n);
        for (std::uint64_t m = n * n; m <= hi; m += n) composite[m] = 1;
    }
    return primes;
}

namespace {

struct CacheEntry {
    bool superspecial = false;
    std::optional<std::uint64_t> count;
};

std::map<std::uint64_t, CacheEntry> load_cache(const std::string& path) {
    std::map<std::uint64_t, CacheEntry> entries;
    std::ifstream in(path);
    if (!in) return entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json row = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (row.is_discarded() || !row.is_object()) continue;
        if (row.value("version", std::string{}) != kVersion) continue;
        if (!row.contains("p") || !row["p"].is_number_unsigned()) continue;
        if (!row.contains("superspecial") || !row["superspecial"].is_boolean()) continue;
        CacheEntry entry;
        entry.superspecial = row["superspecial"].get<bool>();
        if (row.contains("count_fp2") && row["count_fp2"].is_number_unsigned()) {
            entry.count = row["count_fp2"].get<std::uint64_t>();
        }
        entries[row["p"].get<std::uint64_t>()] = entry;
    }
    return entries;
}

void save_cache(const std::string& path, const std::map<std::uint64_t, CacheEntry>& entries) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) return;
    for (const auto& [p, entry] : entries) {
        nlohmann::ordered_json row;
        row["version"] = kVersion;
        row["p"] = p;
        row["superspecial"] = entry.superspecial;
        if (entry.count) {
            row["count_fp2"] = *entry.count;
        } else {
            row["count_fp2"] = nullptr;
        }
        out << row.dump() << "\n";
    }
}

RowClass to_row_class(Classification c) {
    switch (c) {
        case Classification::Maximal: return RowClass::Maximal;
        case Classification::Minimal: return RowClass::Minimal;
        case Classification::Neither: return RowClass::Neither;
    }
    return RowClass::None;
}

SurveyRow make_row(std::uint64_t pv, bool with_counts, const CacheEntry* cached) {
    const PrimeModulus p(pv);
    SurveyRow row;
    row.p = pv;
    row.p_mod_3 = static_cast<unsigned>(pv % 3);
    row.singular = (pv == 3);
    row.hw_upper = static_cast<std::int64_t>(pv * pv + 1 + 8 * pv);
    row.hw_lower = static_cast<std::int64_t>(pv * pv + 1) - static_cast<std::int64_t>(8 * pv);

    if (row.singular) {
        row.superspecial = false;
    } else if (cached) {
        row.superspecial = cached->superspecial;
    } else {
        const SuperspecialReport report = is_superspecial(p);
        if (!report.agrees) {
            throw std::logic_error("internal inconsistency: superspeciality verdict for p = " +
                                   std::to_string(pv) + " contradicts the residue class p mod 3");
        }
        row.superspecial = report.superspecial;
    }

    if (with_counts) {
        std::uint64_t count;
        if (cached && cached->count) {
            count = *cached->count;
        } else {
            count = count_points_fast(p).count;
        }
        row.count = count;
        if (row.singular) {
            row.classification = RowClass::Singular;
        } else {
            PointCountRecord record;
            record.p = pv;
            record.q = pv * pv;
            record.count = count;
            record.hw_upper = row.hw_upper;
            record.hw_lower = row.hw_lower;
            record.method = CountMethod::Fast;
            row.classification = to_row_class(classify(record).classification);
        }
    } else {
        row.classification = row.singular ? RowClass::Singular : RowClass::None;
    }
    return row;
}

}  // namespace

std::vector<SurveyRow> run_survey(std::uint64_t min_p, std::uint64_t max_p, bool with_counts,
                                  unsigned jobs, const std::string& cache_file) {
    if (min_p < 3 || min_p > max_p) {
        throw std::invalid_argument("invalid survey range [" + std::to_string(min_p) + ", " +
                                    std::to_string(max_p) + "]; need 3 <= min <= max");
    }
    const std::vector<std::uint64_t> primes = primes_in_range(min_p, max_p);

    std::map<std::uint64_t, CacheEntry> cache;
    if (!cache_file.empty()) cache = load_cache(cache_file);

    std::vector<std::optional<SurveyRow>> slots(primes.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(
        std::min<std::size_t>(jobs, std::max<std::size_t>(primes.size(), 1)));

    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&](unsigned tid) {
        try {
            for (std::size_t idx = tid; idx < primes.size(); idx += jobs) {
                if (failed.load()) return;
                const auto it = cache.find(primes[idx]);
                const CacheEntry* cached = it == cache.end() ? nullptr : &it->second;
                if (cached && with_counts && !cached->count) cached = nullptr;
                slots[idx] = make_row(primes[idx], with_counts, cached);
            }
        } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
        }
    };

    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned tid = 0; tid < jobs; ++tid) pool.emplace_back(worker, tid);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SurveyRow> rows;
    rows.reserve(primes.size());
    for (const auto& slot : slots) rows.push_back(*slot);

    if (!cache_file.empty()) {
        for (const SurveyRow& row : rows) {
            CacheEntry& entry = cache[row.p];
            entry.superspecial = row.superspecial;
            if (row.count) entry.count = row.count;
        }
        save_cache(cache_file, cache);
    }
    return rows;
}

DensityReport density_scan(std::uint64_t limit) {
    if (limit < 5) {
        throw std::invalid_argument("density scan requires limit >= 5, got " +
                                    std::to_string(limit));
    }
    DensityReport report{limit, 0, 0, 0.0, 0.5};
    for (const std::uint64_t p : primes_in_range(5, limit)) {
        ++report.primes_considered;
        if (p % 3 == 2) ++report.superspecial_count;
    }
    report.ratio = static_cast<double>(report.superspecial_count) /
                   static_cast<double>(report.primes_considered);
    return report;
}

std::string published_verdict_note(std::uint64_t p) {
    // The previously published survey of this family (3 <= p <= 97) misprints
    // the p = 37 row: verdict S.sp. (37 = 1 mod 3, so not superspecial) and
    // count 1334 (recounted value: 1344).
    if (p == 37) {
        return "published row prints S.sp. and count 1334; computed: not superspecial / 1344";
    }
    return "";
}

namespace {

std::string csv_emit(const std::vector<SurveyRow>& rows, bool with_notes) {
    std::string out = "p,p_mod_3,superspecial,count_fp2,classification,hw_upper,hw_lower";
    if (with_notes) out += ",note";
    out += "\n";
    for (const SurveyRow& row : rows) {
        out += std::to_string(row.p) + "," + std::to_string(row.p_mod_3) + "," +
               (row.superspecial ? "true" : "false") + "," +
               (row.count ? std::to_string(*row.count) : "") + "," +
               row_class_name(row.classification) + "," + std::to_string(row.hw_upper) + "," +
               std::to_string(row.hw_lower);
        if (with_notes) out += "," + published_verdict_note(row.p);
        out += "\n";
    }
    return out;
}

std::string json_emit(const std::vector<SurveyRow>& rows, bool with_notes) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SurveyRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["p"] = row.p;
        obj["p_mod_3"] = row.p_mod_3;
        obj["superspecial"] = row.superspecial;
        if (row.count) {
            obj["count_fp2"] = *row.count;
        } else {
            obj["count_fp2"] = nullptr;
        }
        if (row.classification == RowClass::None) {
            obj["classification"] = nullptr;
        } else {
            obj["classification"] = row_class_name(row.classification);
        }
        obj["hw_upper"] = row.hw_upper;
        obj["hw_lower"] = row.hw_lower;
        if (with_notes) obj["note"] = published_verdict_note(row.p);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string md_emit(const std::vector<SurveyRow>& rows, bool with_notes) {
    std::string out = "| p | p mod 3 | superspecial | #C_p(F_{p^2}) |";
    std::string rule = "|---:|---:|:---|:---|";
    if (with_notes) {
        out += " note |";
        rule += ":---|";
    }
    out += "\n" + rule + "\n";
    for (const SurveyRow& row : rows) {
        std::string verdict = row.superspecial ? "S.sp." : "Not S.sp.";
        if (row.singular) verdict += " (singular)";
        std::string count = "-";
        if (row.count) {
            count = std::to_string(*row.count);
            if (row.classification == RowClass::Maximal) count += " (Max.)";
            if (row.classification == RowClass::Minimal) count += " (Min.)";
        }
        out += "| " + std::to_string(row.p) + " | " + std::to_string(row.p_mod_3) + " | " +
               verdict + " | " + count + " |";
        if (with_notes) out += " " + published_verdict_note(row.p) + " |";
        out += "\n";
    }
    return out;
}

}  // namespace

std::string emit(const std::vector<SurveyRow>& rows, TableFormat format, bool with_notes) {
    switch (format) {
        case TableFormat::Csv: return csv_emit(rows, with_notes);
        case TableFormat::Json: return json_emit(rows, with_notes);
        case TableFormat::Markdown: return md_emit(rows, with_notes);
    }
    throw std::invalid_argument("unknown table format");
}

}  // namespace cpcurve
