#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geocut/cutmodel.hpp"

namespace geocut {

enum class CutClass { Isolated, NearIsolated, Other };

struct Classification {
    CutClass cls = CutClass::Other;
    int k = 0;   // family index; 0 when cls == Other
};

// Pattern match on the canonical member set, so a cut given by its complement
// classifies the same way.
Classification classify_cut(const CutSpec& spec);

// "C_3", "S_2*", or the member list "{1;3}" for cuts outside both families.
std::string cut_label(const CutSpec& spec);

struct SweepStats {
    std::uint64_t evaluated = 0;
    double final_drift = 0;   // worst relative gap between running and fresh sums
};

struct EnumerationResult {
    int n = 0;
    double r = 0;
    CutSpec best;
    WeightValue best_weight;
    CutSpec runner_up;       // heaviest cut below the tie band; best if none
    double margin = 0;       // best minus runner-up, direct weights
    std::vector<CutSpec> ties;   // all cuts within 1e-9 relative of best
};

// Exact sweep over all 2^(n-1) cuts of K_n using a Gray-code walk with O(n)
// weight updates. Requires 2 <= n <= 24 and r > 0.
EnumerationResult max_cut_exhaustive(int n, double r, SweepStats* stats = nullptr);

// One-pass variant returning only the winning cut.
CutSpec max_cut_winner(int n, double r);

struct PhasePoint {
    double r = 0;
    CutSpec winner;
    CutClass cls = CutClass::Other;
    std::string label;
    double weight_log = 0;
    double margin = 0;
};

struct PhaseSegment {
    std::string label;
    double r_low = 0;
    double r_high = 0;
    int points = 0;
};

struct PhaseDiagram {
    int n = 0;
    std::vector<PhasePoint> points;
    std::vector<PhaseSegment> segments;   // maximal runs of one winning label
};

// Winner at every grid point r_low + i * mesh up to r_high (endpoints
// included). Points are independent, so the result does not depend on the
// thread count.
PhaseDiagram phase_diagram(int n, double mesh = 0.001, double r_low = 1.001,
                           double r_high = 1.999, int threads = 1);

}  // namespace geocut
