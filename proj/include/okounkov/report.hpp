#pragma once

/**
 * @file report.hpp
 * @brief Tabulated results of truncation sweeps and theorem verification.
 *
 * The CSV schema is fixed: `p,a,vol_full,vol_trunc,ratio,ratio_decimal`.
 * Exact rationals ("7/2", "1") are the source of truth; ratio_decimal is a
 * 12-significant-digit rendering for plotting, never parsed back. Rows that
 * could not be evaluated carry a marker (the error family) in place of their
 * numeric columns. All rendering is a pure function of the report, so
 * identical inputs give byte-identical files regardless of thread count.
 */

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "okounkov/rational.hpp"

namespace okounkov {

enum class RowMarker { ok, zero_volume, beyond_bound };

inline const char* to_string(RowMarker m) {
    switch (m) {
        case RowMarker::ok: return "ok";
        case RowMarker::zero_volume: return "ZeroVolume";
        default: return "BeyondBound";
    }
}

struct FujitaRow {
    long long p = 0;
    QVec direction;
    Rat vol_full = 0;
    Rat vol_trunc = 0;
    Rat ratio = 0;
    RowMarker marker = RowMarker::ok;
};

struct FujitaReport {
    std::vector<FujitaRow> rows;             // sorted by (p, lex direction)
    std::optional<long long> p0;             // nullopt: not reached within p_set
    Rat epsilon = 0;
    Rat epsilon_prime = 0;
    bool verdict = false;
    long long bound = 0;
    long long resolution = 0;                // partition resolution N actually used
    bool oscillation_met = false;            // spread target reached within N_max
    bool minkowski_ok = true;                // every containment/volume bound held
};

/// Direction in the colon format the CLI accepts back ("1/2:1/2").
inline std::string direction_to_string(const QVec& a) { return vec_to_string(a, ":"); }

/// 12-significant-digit decimal rendering, informational only.
inline std::string decimal12(const Rat& x) {
    using Float = boost::multiprecision::cpp_bin_float_50;
    Float f = static_cast<Float>(numerator(x)) / static_cast<Float>(denominator(x));
    std::ostringstream os;
    os << std::setprecision(12) << f;
    return os.str();
}

inline std::string csv_row(const FujitaRow& row) {
    std::ostringstream os;
    os << row.p << ',' << direction_to_string(row.direction) << ',';
    if (row.marker != RowMarker::ok) {
        const char* m = to_string(row.marker);
        os << m << ',' << m << ',' << m << ',' << m;
        return os.str();
    }
    os << to_string(row.vol_full) << ',' << to_string(row.vol_trunc) << ','
       << to_string(row.ratio) << ',' << decimal12(row.ratio);
    return os.str();
}

inline std::string to_csv(const FujitaReport& report) {
    std::ostringstream os;
    os << "p,a,vol_full,vol_trunc,ratio,ratio_decimal\n";
    for (const auto& row : report.rows) os << csv_row(row) << '\n';
    return os.str();
}

/// JSON rendering with sorted keys and no floating point except the
/// informational decimal strings.
inline std::string to_json(const FujitaReport& report) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"bound\": " << report.bound << ",\n";
    os << "  \"epsilon\": \"" << to_string(report.epsilon) << "\",\n";
    os << "  \"epsilon_prime\": \"" << to_string(report.epsilon_prime) << "\",\n";
    os << "  \"minkowski_ok\": " << (report.minkowski_ok ? "true" : "false") << ",\n";
    os << "  \"oscillation_met\": " << (report.oscillation_met ? "true" : "false") << ",\n";
    os << "  \"p0\": " << (report.p0 ? std::to_string(*report.p0) : std::string("\"NotReached\"")) << ",\n";
    os << "  \"resolution\": " << report.resolution << ",\n";
    os << "  \"rows\": [";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        os << (i ? ",\n    " : "\n    ");
        os << "{\"a\": \"" << direction_to_string(row.direction) << "\", "
           << "\"marker\": \"" << to_string(row.marker) << "\", "
           << "\"p\": " << row.p << ", "
           << "\"ratio\": \"" << to_string(row.ratio) << "\", "
           << "\"ratio_decimal\": \"" << decimal12(row.ratio) << "\", "
           << "\"vol_full\": \"" << to_string(row.vol_full) << "\", "
           << "\"vol_trunc\": \"" << to_string(row.vol_trunc) << "\"}";
    }
    os << (report.rows.empty() ? "" : "\n  ") << "],\n";
    os << "  \"verdict\": \"" << (report.verdict ? "pass" : "fail") << "\"\n";
    os << "}\n";
    return os.str();
}

}  // namespace okounkov
