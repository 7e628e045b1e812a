#include "geocut/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "geocut/grid.hpp"
#include "geocut/parallel.hpp"

namespace geocut {

namespace {

constexpr double kTieTolerance = 1e-9;   // relative band treated as an exact tie

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

int class_rank(CutClass c) {
    switch (c) {
        case CutClass::Isolated: return 0;
        case CutClass::NearIsolated: return 1;
        default: return 2;
    }
}

// Preference order used to pick one representative out of an exact tie.
bool prefer(const CutSpec& a, const CutSpec& b) {
    const Classification ca = classify_cut(a), cb = classify_cut(b);
    if (class_rank(ca.cls) != class_rank(cb.cls)) return class_rank(ca.cls) < class_rank(cb.cls);
    if (ca.cls != CutClass::Other && ca.k != cb.k) return ca.k < cb.k;
    return a.indicator() < b.indicator();
}

// Edge weights as a flat (n+1) x (n+1) lookup keyed by endpoint pair.
std::vector<double> edge_weight_table(int n, double r) {
    const int N = edge_count(n);
    std::vector<double> pow_r(static_cast<std::size_t>(N));
    double v = 1.0;
    for (int e = 0; e < N; ++e, v *= r) pow_r[static_cast<std::size_t>(e)] = v;
    std::vector<double> w(static_cast<std::size_t>((n + 1) * (n + 1)), 0.0);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const double we = pow_r[static_cast<std::size_t>(N - edge_index(i, j, n))];
            w[static_cast<std::size_t>(i * (n + 1) + j)] = we;
            w[static_cast<std::size_t>(j * (n + 1) + i)] = we;
        }
    return w;
}

// Bit b of the state means vertex b + 2 sits opposite vertex 1.
double exact_weight(int n, const std::vector<double>& w, std::uint64_t state) {
    double total = 0.0;
    for (int i = 1; i < n; ++i) {
        const int si = i == 1 ? 0 : static_cast<int>((state >> (i - 2)) & 1);
        for (int j = i + 1; j <= n; ++j) {
            const int sj = static_cast<int>((state >> (j - 2)) & 1);
            if (si != sj) total += w[static_cast<std::size_t>(i * (n + 1) + j)];
        }
    }
    return total;
}

CutSpec state_to_spec(int n, std::uint64_t state) {
    std::vector<int> members = {1};
    for (int u = 2; u <= n; ++u)
        if (((state >> (u - 2)) & 1) == 0) members.push_back(u);
    return CutSpec(n, members);
}

// Gray-code walk over all 2^(n-1) states with O(n) incremental updates. The
// running sum is re-anchored to a fresh O(n^2) total every 2^16 steps so
// float drift cannot accumulate across millions of updates.
template <typename Visit>
void gray_walk(int n, const std::vector<double>& w, SweepStats* stats, Visit&& visit) {
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    std::uint64_t state = 0;
    double weight = 0.0;
    double drift = 0.0;
    visit(state, weight);
    for (std::uint64_t t = 1; t < total; ++t) {
        const int b = std::countr_zero(t);
        const int v = b + 2;
        const int sv = static_cast<int>((state >> b) & 1);
        const double* row = &w[static_cast<std::size_t>(v * (n + 1))];
        // An edge to a vertex on v's old side starts crossing; others stop.
        double delta = sv == 0 ? row[1] : -row[1];
        for (int u = 2; u <= n; ++u) {
            if (u == v) continue;
            const int su = static_cast<int>((state >> (u - 2)) & 1);
            delta += su == sv ? row[u] : -row[u];
        }
        state ^= std::uint64_t{1} << b;
        weight += delta;
        if ((t & 0xFFFF) == 0 || t + 1 == total) {
            const double fresh = exact_weight(n, w, state);
            drift = std::max(drift, std::fabs(weight - fresh) / std::max(1.0, fresh));
            weight = fresh;
        }
        visit(state, weight);
    }
    if (stats) {
        stats->evaluated = total;
        stats->final_drift = drift;
    }
}

void check_size(int n, double r) {
    require(2 <= n && n <= 24, "max_cut_exhaustive: need 2 <= n <= 24");
    require(r > 0, "max_cut_exhaustive: need r > 0");
}

}  // namespace

Classification classify_cut(const CutSpec& spec) {
    const std::vector<int> m = spec.members();
    const int len = static_cast<int>(m.size());
    if (len == spec.n()) return {CutClass::Other, 0};   // the zero-weight cut
    bool prefix = true;
    for (int i = 0; i < len; ++i)
        if (m[static_cast<std::size_t>(i)] != i + 1) {
            prefix = false;
            break;
        }
    if (prefix) return {CutClass::Isolated, len};
    if (len >= 2 && m.back() == spec.n()) {
        bool head = true;
        for (int i = 0; i + 1 < len; ++i)
            if (m[static_cast<std::size_t>(i)] != i + 1) {
                head = false;
                break;
            }
        if (head) return {CutClass::NearIsolated, len - 1};
    }
    return {CutClass::Other, 0};
}

std::string cut_label(const CutSpec& spec) {
    const Classification c = classify_cut(spec);
    if (c.cls == CutClass::Isolated) return "C_" + std::to_string(c.k);
    if (c.cls == CutClass::NearIsolated) return "S_" + std::to_string(c.k) + "*";
    std::string s = "{";
    bool first = true;
    for (int v : spec.members()) {
        if (!first) s += ';';
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

EnumerationResult max_cut_exhaustive(int n, double r, SweepStats* stats) {
    check_size(n, r);
    const std::vector<double> w = edge_weight_table(n, r);

    double best = -1.0;
    gray_walk(n, w, stats, [&](std::uint64_t, double weight) {
        if (weight > best) best = weight;
    });

    const double tie_low = best * (1.0 - kTieTolerance);
    std::vector<std::uint64_t> tie_states;
    double runner = -1.0;
    std::uint64_t runner_state = 0;
    gray_walk(n, w, nullptr, [&](std::uint64_t state, double weight) {
        if (weight >= tie_low) {
            tie_states.push_back(state);
        } else if (weight > runner) {
            runner = weight;
            runner_state = state;
        }
    });

    EnumerationResult res;
    res.n = n;
    res.r = r;
    for (std::uint64_t s : tie_states) res.ties.push_back(state_to_spec(n, s));
    std::sort(res.ties.begin(), res.ties.end(),
              [](const CutSpec& a, const CutSpec& b) { return a.indicator() < b.indicator(); });
    res.best = *std::min_element(res.ties.begin(), res.ties.end(), prefer);
    res.best_weight = cut_weight(res.best, r);
    if (runner >= 0.0) {
        res.runner_up = state_to_spec(n, runner_state);
        res.margin = best - runner;
    } else {
        res.runner_up = res.best;
        res.margin = 0.0;
    }
    return res;
}

CutSpec max_cut_winner(int n, double r) {
    check_size(n, r);
    const std::vector<double> w = edge_weight_table(n, r);
    double best = -1.0;
    std::uint64_t best_state = 0;
    gray_walk(n, w, nullptr, [&](std::uint64_t state, double weight) {
        if (weight > best) {
            best = weight;
            best_state = state;
        }
    });
    return state_to_spec(n, best_state);
}

PhaseDiagram phase_diagram(int n, double mesh, double r_low, double r_high, int threads) {
    require(mesh > 0 && r_low > 0 && r_low <= r_high, "phase_diagram: bad grid");
    const std::vector<double> grid = mesh_grid(r_low, r_high, mesh);
    PhaseDiagram d;
    d.n = n;
    d.points.resize(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const double r = grid[i];
        const EnumerationResult res = max_cut_exhaustive(n, r);
        PhasePoint& p = d.points[i];
        p.r = r;
        p.winner = res.best;
        p.cls = classify_cut(res.best).cls;
        p.label = cut_label(res.best);
        p.weight_log = *res.best_weight.log_value;
        p.margin = res.margin;
    });
    for (const PhasePoint& p : d.points) {
        if (d.segments.empty() || d.segments.back().label != p.label) {
            d.segments.push_back({p.label, p.r, p.r, 1});
        } else {
            d.segments.back().r_high = p.r;
            d.segments.back().points += 1;
        }
    }
    return d;
}

}  // namespace geocut
