#include "geocut/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace geocut {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string printf_str(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

// Doubles rounded to the table precision print shortest-round-trip in JSON,
// so "1.243347" stays "1.243347".
double round6(double v) { return std::round(v * 1e6) / 1e6; }

double log_or_ninf(const WeightValue& w) {
    return w.log_value ? *w.log_value : -std::numeric_limits<double>::infinity();
}

ordered_json violation_json(const Violation& v) {
    return ordered_json{{"n", v.n},
                        {"r", v.r},
                        {"members", members_string(v.winner)},
                        {"expectedK", v.expected_k},
                        {"margin", v.margin}};
}

}  // namespace

std::string fmt_threshold(double r) { return printf_str("%.6f", r); }

std::string fmt_weight(double v) {
    return std::fabs(v) >= 1e4 ? printf_str("%.3e", v) : printf_str("%.2f", v);
}

std::string fmt_percent(double v) { return printf_str("%.1f", v); }

std::string fmt_general(double v) { return printf_str("%.9g", v); }

std::string members_string(const CutSpec& cut) {
    std::string out;
    for (int v : cut.members()) {
        if (!out.empty()) out += ';';
        out += std::to_string(v);
    }
    return out;
}

std::string thresholds_matrix_csv(const std::vector<ThresholdTable>& tables, int max_k) {
    std::string out = "n";
    for (int k = 1; k <= max_k; ++k) out += ",k=" + std::to_string(k);
    out += '\n';
    for (const ThresholdTable& t : tables) {
        out += std::to_string(t.n);
        for (int k = 1; k <= max_k; ++k) {
            const bool have = k < static_cast<int>(t.entries.size()) && t.entries[k].k == k;
            out += have ? "," + fmt_threshold(t.entries[k].r) : ",--";
        }
        out += '\n';
    }
    return out;
}

std::string threshold_pairs_csv(const ThresholdTable& table) {
    std::string out = "k,r\n";
    for (const ThresholdEntry& e : table.entries) {
        if (e.k == 0) continue;
        out += std::to_string(e.k) + "," + fmt_threshold(e.r) + '\n';
    }
    return out;
}

std::string thresholds_json(const std::vector<ThresholdTable>& tables) {
    ordered_json arr = ordered_json::array();
    for (const ThresholdTable& t : tables) {
        ordered_json entries = ordered_json::array();
        for (const ThresholdEntry& e : t.entries) {
            if (e.k == 0) continue;
            entries.push_back(ordered_json{{"k", e.k}, {"r", round6(e.r)}});
        }
        arr.push_back(ordered_json{{"n", t.n},
                                   {"tolerance", t.tolerance},
                                   {"bracketLow", t.bracket_low},
                                   {"bracketHigh", t.bracket_high},
                                   {"entries", std::move(entries)}});
    }
    return arr.dump();
}

std::string poly_json(const SignedExponentPoly& p) {
    ordered_json j{{"n", p.n}, {"k", p.k}, {"pos", p.pos}, {"neg", p.neg}};
    return j.dump();
}

std::string poly_csv(const SignedExponentPoly& p) {
    std::string out = "sign,exponent\n";
    for (int e : p.pos) out += "+," + std::to_string(e) + '\n';
    for (int e : p.neg) out += "-," + std::to_string(e) + '\n';
    return out;
}

std::string phase_csv(const PhaseDiagram& d) {
    std::string out = "r,winnerMembers,class,weightLog,margin\n";
    for (const PhasePoint& p : d.points) {
        out += fmt_threshold(p.r) + ',' + members_string(p.winner) + ',' + p.label + ',' +
               fmt_general(p.weight_log) + ',' + fmt_general(p.margin) + '\n';
    }
    return out;
}

std::string phase_json(const PhaseDiagram& d) {
    ordered_json segs = ordered_json::array();
    for (const PhaseSegment& s : d.segments)
        segs.push_back(ordered_json{
            {"label", s.label}, {"rLow", s.r_low}, {"rHigh", s.r_high}, {"points", s.points}});
    ordered_json pts = ordered_json::array();
    for (const PhasePoint& p : d.points)
        pts.push_back(ordered_json{{"r", p.r},
                                   {"members", members_string(p.winner)},
                                   {"class", p.label},
                                   {"weightLog", p.weight_log},
                                   {"margin", p.margin}});
    ordered_json j{{"n", d.n}, {"segments", std::move(segs)}, {"points", std::move(pts)}};
    return j.dump();
}

std::string enumeration_csv(const EnumerationResult& e) {
    std::string out = "n,r,winnerMembers,class,weightLog,margin,runnerUpMembers,tieCount\n";
    // tieCount counts the cuts tying with the winner, not the winner itself.
    const std::size_t tie_count = e.ties.empty() ? 0 : e.ties.size() - 1;
    out += std::to_string(e.n) + ',' + fmt_general(e.r) + ',' + members_string(e.best) + ',' +
           cut_label(e.best) + ',' + fmt_general(log_or_ninf(e.best_weight)) + ',' +
           fmt_general(e.margin) + ',' + members_string(e.runner_up) + ',' +
           std::to_string(tie_count) + '\n';
    return out;
}

std::string enumeration_json(const EnumerationResult& e) {
    const std::size_t tie_count = e.ties.empty() ? 0 : e.ties.size() - 1;
    ordered_json j{{"n", e.n},
                   {"r", e.r},
                   {"winner",
                    ordered_json{{"members", members_string(e.best)},
                                 {"class", cut_label(e.best)},
                                 {"weightLog", log_or_ninf(e.best_weight)}}},
                   {"margin", e.margin},
                   {"runnerUp", members_string(e.runner_up)},
                   {"tieCount", tie_count}};
    return j.dump();
}

std::string verification_json(const VerificationReport& report) {
    ordered_json j{{"mode", report.mode}, {"nLow", report.n_low}, {"nHigh", report.n_high}};
    if (report.mode == "exhaustive")
        j["mesh"] = report.mesh;
    else
        j["pointsPerInterval"] = report.points_per_interval;
    j["checked"] = report.checked_count;
    j["indeterminate"] = report.indeterminate_count;
    j["ok"] = report.ok();
    ordered_json arr = ordered_json::array();
    for (const Violation& v : report.violations) arr.push_back(violation_json(v));
    j["violations"] = std::move(arr);
    return j.dump();
}

std::string verification_csv(const VerificationReport& report) {
    std::string out = "n,r,winnerMembers,expectedK,margin\n";
    for (const Violation& v : report.violations) {
        out += std::to_string(v.n) + ',' + fmt_threshold(v.r) + ',' + members_string(v.winner) +
               ',' + std::to_string(v.expected_k) + ',' + fmt_general(v.margin) + '\n';
    }
    return out;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
    std::string out = "n,k,actual,predicted,errorPct\n";
    for (const ScalingRow& s : rows) {
        out += std::to_string(s.n) + ',' + std::to_string(s.k) + ',' +
               printf_str("%.4f", s.actual) + ',' + printf_str("%.4f", s.predicted) + ',' +
               fmt_percent(s.error_pct) + '\n';
    }
    return out;
}

std::string scaling_json(const std::vector<ScalingRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const ScalingRow& s : rows)
        arr.push_back(ordered_json{{"n", s.n},
                                   {"k", s.k},
                                   {"actual", s.actual},
                                   {"predicted", s.predicted},
                                   {"errorPct", s.error_pct}});
    return arr.dump();
}

std::string bounds_csv(const std::vector<BoundComparison>& rows) {
    std::string out = "n,r,k,optimum,gyBound,gapPct\n";
    for (const BoundComparison& b : rows) {
        out += std::to_string(b.n) + ',' + fmt_general(b.r) + ',' + std::to_string(b.optimal_k) +
               ',' + fmt_weight(b.optimum) + ',' + fmt_weight(b.gy_bound) + ',' +
               fmt_percent(b.gap_gy_pct) + '\n';
    }
    return out;
}

std::string bounds_json(const std::vector<BoundComparison>& rows) {
    ordered_json arr = ordered_json::array();
    for (const BoundComparison& b : rows)
        arr.push_back(ordered_json{{"n", b.n},
                                   {"r", b.r},
                                   {"k", b.optimal_k},
                                   {"optimum", b.optimum},
                                   {"gyBound", b.gy_bound},
                                   {"ptBound", b.pt_bound},
                                   {"gapPct", b.gap_gy_pct}});
    return arr.dump();
}

}  // namespace geocut
