#pragma once

#include <string>
#include <vector>

#include "geocut/analysis.hpp"
#include "geocut/cutmodel.hpp"
#include "geocut/enumerate.hpp"
#include "geocut/polyengine.hpp"
#include "geocut/rootfind.hpp"
#include "geocut/verify.hpp"

namespace geocut {

// Every emitted number goes through one of these snprintf wrappers, so output
// bytes do not depend on locale, stream state, or thread count.
std::string fmt_threshold(double r);   // six decimals, the table precision
std::string fmt_weight(double v);      // scientific with 4 significant digits at |v| >= 1e4, else 2 decimals
std::string fmt_percent(double v);     // one decimal
std::string fmt_general(double v);     // up to 9 significant digits, trailing zeros trimmed

// Canonical member set rendered "1;2;6"; semicolons keep CSV cells intact.
std::string members_string(const CutSpec& cut);

// Threshold tables. The matrix layout is one row per n with k columns and
// "--" where k exceeds the last transition; the pair layout is k,r rows for
// a single n. Sentinel entries (k = 0) are never emitted.
std::string thresholds_matrix_csv(const std::vector<ThresholdTable>& tables, int max_k = 8);
std::string threshold_pairs_csv(const ThresholdTable& table);
std::string thresholds_json(const std::vector<ThresholdTable>& tables);

// Difference polynomials as the two exponent blocks, highest exponent first.
std::string poly_json(const SignedExponentPoly& p);
std::string poly_csv(const SignedExponentPoly& p);

// Phase diagrams: one CSV row per grid point; JSON adds the segment summary.
std::string phase_csv(const PhaseDiagram& d);
std::string phase_json(const PhaseDiagram& d);

// Single exhaustive enumeration.
std::string enumeration_csv(const EnumerationResult& e);
std::string enumeration_json(const EnumerationResult& e);

// Verification reports. Wall-clock time is deliberately omitted so reruns and
// different thread counts produce identical bytes; it goes to stderr instead.
std::string verification_json(const VerificationReport& report);
std::string verification_csv(const VerificationReport& report);

// Scaling-law rows (n, k, actual, predicted, errorPct).
std::string scaling_csv(const std::vector<ScalingRow>& rows);
std::string scaling_json(const std::vector<ScalingRow>& rows);

// Bound comparisons; the CSV mirrors the comparison table columns, the JSON
// additionally carries the spanning-tree bound.
std::string bounds_csv(const std::vector<BoundComparison>& rows);
std::string bounds_json(const std::vector<BoundComparison>& rows);

}  // namespace geocut
