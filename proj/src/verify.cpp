#include "geocut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "geocut/grid.hpp"
#include "geocut/parallel.hpp"
#include "geocut/polyengine.hpp"

namespace geocut {

namespace {

constexpr double kMarginBand = 1e-12;    // |log ratio| below this is a toss-up
constexpr double kPruneGuard = 1e-6;     // upper bound must clear by this much
constexpr double kLseCutoff = -70.0;     // tail below exp(-70) cannot shift a sum

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void sort_violations(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.r < b.r;
    });
}

// The four weight kernels below walk the crossing edges of C_k or S_j* in
// ascending edge-index order, which is descending exponent order, without
// materializing the cut. C_k splits {1..k} from the rest; S_j* splits
// {1..j, n} from {j+1..n-1}.

double direct_ck(int n, int k, const std::vector<double>& pw) {
    const int N = edge_count(n);
    double sum = 0.0;
    for (int u = 1; u <= k; ++u)
        for (int v = k + 1; v <= n; ++v) sum += pw[static_cast<std::size_t>(N - edge_index(u, v, n))];
    return sum;
}

double direct_sj(int n, int j, const std::vector<double>& pw) {
    const int N = edge_count(n);
    double sum = 0.0;
    for (int u = 1; u <= j; ++u)
        for (int v = j + 1; v <= n - 1; ++v)
            sum += pw[static_cast<std::size_t>(N - edge_index(u, v, n))];
    for (int u = j + 1; u <= n - 1; ++u) sum += pw[static_cast<std::size_t>(N - edge_index(u, n, n))];
    return sum;
}

double lse_ck(int n, int k, double lr) {
    const int N = edge_count(n);
    const int anchor = N - edge_index(1, k + 1, n);
    double sum = 0.0;
    for (int u = 1; u <= k; ++u)
        for (int v = k + 1; v <= n; ++v) {
            const double d = (N - edge_index(u, v, n) - anchor) * lr;
            if (d < kLseCutoff) goto done;
            sum += std::exp(d);
        }
done:
    return anchor * lr + std::log(sum);
}

double lse_sj(int n, int j, double lr) {
    const int N = edge_count(n);
    const int anchor = N - edge_index(1, j + 1, n);
    double sum = 0.0;
    for (int u = 1; u <= j; ++u)
        for (int v = j + 1; v <= n - 1; ++v) {
            const double d = (N - edge_index(u, v, n) - anchor) * lr;
            if (d < kLseCutoff) goto tail;
            sum += std::exp(d);
        }
    for (int u = j + 1; u <= n - 1; ++u) {
        const double d = (N - edge_index(u, n, n) - anchor) * lr;
        if (d < kLseCutoff) break;
        sum += std::exp(d);
    }
tail:
    return anchor * lr + std::log(sum);
}

struct PointCheck {
    std::vector<Violation> violations;
    std::uint64_t checked = 0;
    std::uint64_t indeterminate = 0;
};

// Compares the reigning C_k against every S_j* at one sample point. A shared
// power table keeps the two sums on correlated rounding when r is small
// enough for direct evaluation; otherwise both sides go through log space.
PointCheck check_near_isolated_point(int n, int k, double r, bool diagnostic) {
    PointCheck out;
    const int N = edge_count(n);
    const double lr = std::log(r);
    const bool direct = (N - 1) * lr <= 700.0;
    std::vector<double> pw;
    if (direct) {
        pw.resize(static_cast<std::size_t>(N));
        pw[0] = 1.0;
        for (int e = 1; e < N; ++e) pw[static_cast<std::size_t>(e)] = pw[static_cast<std::size_t>(e - 1)] * r;
    }
    const double wc = direct ? std::log(direct_ck(n, k, pw)) : lse_ck(n, k, lr);
    for (int j = 1; j <= n - 2; ++j) {
        ++out.checked;
        if (!diagnostic) {
            // Every crossing edge of S_j* weighs at most r^(N-j).
            const double ub = (N - j) * lr + std::log(static_cast<double>(j + 1) * (n - 1 - j));
            if (ub <= wc - kPruneGuard) continue;
        }
        const double ws = direct ? std::log(direct_sj(n, j, pw)) : lse_sj(n, j, lr);
        const double margin = wc - ws;
        if (margin > kMarginBand) continue;
        // Near the far end of the widest interval the true gap falls below
        // the band because both weights share their dominant terms. Cancel
        // the shared terms symbolically and certify the sign of what is
        // left; only an exact tie stays indeterminate.
        const SignedLogValue exact =
            eval_poly_signed_log(poly_from_cut_pair(isolated_cut(k, n), near_isolated_cut(j, n)), r);
        if (exact.sign > 0) continue;
        if (exact.sign < 0)
            out.violations.push_back({n, r, near_isolated_cut(j, n), k, margin});
        else
            ++out.indeterminate;
    }
    return out;
}

}  // namespace

std::vector<RInterval> threshold_intervals(const ThresholdTable& table) {
    std::vector<RInterval> out;
    for (std::size_t i = 1; i < table.entries.size(); ++i)
        out.push_back({table.entries[i].k, table.entries[i].r, table.entries[i - 1].r});
    out.push_back({static_cast<int>(table.entries.size()), 1.0, table.entries.back().r});
    return out;
}

VerificationReport verify_exhaustive(int n_low, int n_high, double mesh, int threads,
                                     bool add_threshold_midpoints) {
    require(2 <= n_low && n_low <= n_high && n_high <= 24,
            "verify_exhaustive: need 2 <= n_low <= n_high <= 24");
    require(mesh > 0 && mesh < 1, "verify_exhaustive: need 0 < mesh < 1");
    require(!add_threshold_midpoints || n_low >= 4,
            "verify_exhaustive: midpoints need n >= 4");
    const double start = now_seconds();
    VerificationReport rep;
    rep.mode = "exhaustive";
    rep.n_low = n_low;
    rep.n_high = n_high;
    rep.mesh = mesh;
    for (int n = n_low; n <= n_high; ++n) {
        std::vector<double> rs = interior_grid(mesh);
        if (add_threshold_midpoints)
            for (const RInterval& iv : threshold_intervals(threshold_table(n)))
                rs.push_back(0.5 * (iv.lo + iv.hi));
        std::vector<Violation> slots(rs.size());
        std::vector<char> hit(rs.size(), 0);
        parallel_for(rs.size(), threads, [&](std::size_t i) {
            const double r = rs[i];
            const CutSpec winner = max_cut_winner(n, r);
            if (classify_cut(winner).cls == CutClass::Isolated) return;
            const int expected = best_isolated_k(n, r);
            const double margin = *cut_weight(winner, r).log_value -
                                  *cut_weight(isolated_cut(expected, n), r).log_value;
            slots[i] = {n, r, winner, expected, margin};
            hit[i] = 1;
        });
        for (std::size_t i = 0; i < rs.size(); ++i)
            if (hit[i]) rep.violations.push_back(slots[i]);
        rep.checked_count += rs.size();
    }
    sort_violations(rep.violations);
    rep.elapsed_seconds = now_seconds() - start;
    return rep;
}

VerificationReport verify_near_isolated(int n_low, int n_high, int points, int threads,
                                        bool diagnostic) {
    require(4 <= n_low && n_low <= n_high, "verify_near_isolated: need 4 <= n_low <= n_high");
    require(points >= 1, "verify_near_isolated: need points >= 1");
    const double start = now_seconds();
    VerificationReport rep;
    rep.mode = "near-isolated";
    rep.n_low = n_low;
    rep.n_high = n_high;
    rep.points_per_interval = points;
    for (int n = n_low; n <= n_high; ++n) {
        const std::vector<RInterval> intervals = threshold_intervals(threshold_table(n));
        const std::size_t tasks = intervals.size() * static_cast<std::size_t>(points);
        std::vector<PointCheck> slots(tasks);
        parallel_for(tasks, threads, [&](std::size_t i) {
            const RInterval& iv = intervals[i / static_cast<std::size_t>(points)];
            const int t = static_cast<int>(i % static_cast<std::size_t>(points)) + 1;
            const double r = iv.lo + t * (iv.hi - iv.lo) / (points + 1);
            slots[i] = check_near_isolated_point(n, iv.k, r, diagnostic);
        });
        for (const PointCheck& pc : slots) {
            rep.checked_count += pc.checked;
            rep.indeterminate_count += pc.indeterminate;
            rep.violations.insert(rep.violations.end(), pc.violations.begin(),
                                  pc.violations.end());
        }
    }
    sort_violations(rep.violations);
    rep.elapsed_seconds = now_seconds() - start;
    return rep;
}

std::vector<SmallNStructure> small_n_counterexamples() {
    std::vector<SmallNStructure> out;
    for (int n : {4, 5, 6}) {
        const PhaseDiagram d = phase_diagram(n);
        SmallNStructure s;
        s.n = n;
        std::size_t first = 0;
        for (const PhaseSegment& seg : d.segments) {
            s.winners.push_back(d.points[first].winner);
            first += static_cast<std::size_t>(seg.points);
        }
        for (std::size_t i = 0; i + 1 < d.segments.size(); ++i) {
            // The change point is a root of W(next) - W(previous), bracketed
            // by the last and first grid points of the adjacent regions.
            const SignedExponentPoly p = poly_from_cut_pair(s.winners[i + 1], s.winners[i]);
            const RootResult root =
                find_root(p, d.segments[i].r_high, d.segments[i + 1].r_low, 1e-12);
            s.boundaries.push_back(root.root);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace geocut
