#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "renewal/characterization.hpp"
#include "renewal/law.hpp"
#include "renewal/rng.hpp"
#include "renewal/simulate.hpp"

namespace renewal {

// Independence testing on empirical (r0, r1) samples. Unobserved epochs
// (exact infinities and horizon-censored values alike) form an explicit
// "not observed" category: in the binned chi-square test as an extra bin per
// axis, in the rank test as shared top ranks.

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Sample mean of e^{-lambda*r1 - mu*r0} over doubly-observed pairs, other
// pairs contributing 0. Horizon-censored pairs bias the estimate downward by
// at most e^{-(lambda+mu)*horizon} per censored pair.
inline McEstimate mc_laplace_estimate(std::span<const EpochPair> pairs, double lambda,
                                      double mu) {
    if (pairs.empty()) throw std::invalid_argument("mc_laplace_estimate needs data");
    // compensated sums: degenerate samples (every value identical) must come
    // out exact, not drowned in accumulation drift
    double sum = 0.0, sum_c = 0.0, sumsq = 0.0, sumsq_c = 0.0;
    const auto add = [](double& acc, double& comp, double v) {
        const double t = acc + v;
        comp += std::abs(acc) >= std::abs(v) ? (acc - t) + v : (v - t) + acc;
        acc = t;
    };
    for (const auto& pair : pairs) {
        double x = 0.0;
        if (pair.r0_status == EpochStatus::Observed &&
            pair.r1_status == EpochStatus::Observed)
            x = std::exp(-lambda * pair.r1 - mu * pair.r0);
        add(sum, sum_c, x);
        add(sumsq, sumsq_c, x * x);
    }
    sum += sum_c;
    sumsq += sumsq_c;
    const double n = static_cast<double>(pairs.size());
    McEstimate est;
    est.value = sum / n;
    if (pairs.size() > 1) {
        const double var = std::max(0.0, (sumsq - n * est.value * est.value) / (n - 1.0));
        est.std_error = std::sqrt(var / n);
    }
    return est;
}

enum class TestMethod { Chi2, PermutationDcov };

inline const char* to_string(TestMethod m) {
    return m == TestMethod::Chi2 ? "chi2" : "perm_dcov";
}

struct TestReport {
    TestMethod method = TestMethod::Chi2;
    double statistic = 0.0;
    double p_value = 1.0;
    int df = 0;           // chi-square only
    int permutations = 0; // permutation test only
    double alpha = 0.05;
    bool decision = false;
    bool untestable = false;
    std::string note;
    std::uint64_t seed = 0;
    std::size_t n = 0;
};

struct ContingencyTable {
    std::vector<double> row_edges; // quantile cut points on observed r0
    std::vector<double> col_edges; // likewise for r1
    std::vector<std::vector<double>> counts; // last row/col = not observed
};

namespace detail {

inline std::vector<double> quantile_edges(std::vector<double> observed, int bins) {
    std::sort(observed.begin(), observed.end());
    std::vector<double> edges;
    for (int j = 1; j < bins; ++j) {
        const std::size_t idx = j * observed.size() / bins;
        if (idx >= observed.size()) break;
        const double e = observed[idx];
        if (edges.empty() || e > edges.back()) edges.push_back(e);
    }
    return edges;
}

// Category of a value given interior edges: bin i covers (e_{i-1}, e_i], the
// first bin extends to 0 and the last to infinity.
inline int edge_category(const std::vector<double>& edges, double v) {
    int cat = 0;
    for (double e : edges) {
        if (v > e)
            ++cat;
        else
            break;
    }
    return cat;
}

struct MergedTable {
    std::vector<std::vector<double>> counts;
    bool degenerate = false;
};

// Greedy merge until every expected count reaches 5: zero-margin categories
// are folded away outright, then the smallest margin is repeatedly merged
// into its smaller adjacent neighbor. Degenerates when an axis cannot keep
// two categories.
inline MergedTable merge_for_expected(std::vector<std::vector<double>> table, double total) {
    const auto row_margin = [&](std::size_t r) {
        return std::accumulate(table[r].begin(), table[r].end(), 0.0);
    };
    const auto col_margin = [&](std::size_t c) {
        double m = 0.0;
        for (const auto& row : table) m += row[c];
        return m;
    };
    const auto merge_rows = [&](std::size_t into, std::size_t from) {
        for (std::size_t c = 0; c < table[into].size(); ++c) table[into][c] += table[from][c];
        table.erase(table.begin() + from);
    };
    const auto merge_cols = [&](std::size_t into, std::size_t from) {
        for (auto& row : table) {
            row[into] += row[from];
            row.erase(row.begin() + from);
        }
    };

    while (true) {
        // drop empty categories
        bool dropped = false;
        for (std::size_t r = 0; r < table.size();) {
            if (row_margin(r) == 0.0 && table.size() > 1) {
                table.erase(table.begin() + r);
                dropped = true;
            } else {
                ++r;
            }
        }
        for (std::size_t c = 0; c < table[0].size();) {
            if (col_margin(c) == 0.0 && table[0].size() > 1) {
                for (auto& row : table) row.erase(row.begin() + c);
                dropped = true;
            } else {
                ++c;
            }
        }
        if (dropped) continue;

        const std::size_t rows = table.size();
        const std::size_t cols = table[0].size();
        if (rows < 2 || cols < 2) return {std::move(table), true};

        std::size_t rmin = 0, cmin = 0;
        for (std::size_t r = 1; r < rows; ++r)
            if (row_margin(r) < row_margin(rmin)) rmin = r;
        for (std::size_t c = 1; c < cols; ++c)
            if (col_margin(c) < col_margin(cmin)) cmin = c;
        if (row_margin(rmin) * col_margin(cmin) / total >= 5.0)
            return {std::move(table), false};

        const bool pick_row = rows > 2 && (cols <= 2 || row_margin(rmin) <= col_margin(cmin));
        if (pick_row) {
            std::size_t nb = rmin == 0 ? 1 : rmin - 1;
            if (rmin > 0 && rmin + 1 < rows && row_margin(rmin + 1) < row_margin(rmin - 1))
                nb = rmin + 1;
            merge_rows(nb, rmin);
        } else if (cols > 2) {
            std::size_t nb = cmin == 0 ? 1 : cmin - 1;
            if (cmin > 0 && cmin + 1 < cols && col_margin(cmin + 1) < col_margin(cmin - 1))
                nb = cmin + 1;
            merge_cols(nb, cmin);
        } else {
            return {std::move(table), true}; // stuck at 2x2 with a thin margin
        }
    }
}

} // namespace detail

// Pearson chi-square on the quantile-binned contingency table of (r0, r1),
// one extra category per axis for unobserved epochs.
inline TestReport chi2_independence_test(std::span<const EpochPair> pairs, int bins,
                                         double alpha) {
    if (pairs.size() < 100)
        throw std::invalid_argument("chi2_independence_test needs n >= 100");
    if (bins < 2) throw std::invalid_argument("chi2_independence_test needs >= 2 bins");

    TestReport report;
    report.method = TestMethod::Chi2;
    report.alpha = alpha;
    report.n = pairs.size();

    std::vector<double> obs0, obs1;
    for (const auto& pair : pairs) {
        if (pair.r0_status == EpochStatus::Observed) obs0.push_back(pair.r0);
        if (pair.r1_status == EpochStatus::Observed) obs1.push_back(pair.r1);
    }
    const auto edges0 = detail::quantile_edges(obs0, bins);
    const auto edges1 = detail::quantile_edges(obs1, bins);
    const std::size_t cats0 = edges0.size() + 2; // observed bins + not-observed
    const std::size_t cats1 = edges1.size() + 2;

    std::vector<std::vector<double>> table(cats0, std::vector<double>(cats1, 0.0));
    for (const auto& pair : pairs) {
        const std::size_t r = pair.r0_status == EpochStatus::Observed
                                  ? detail::edge_category(edges0, pair.r0)
                                  : cats0 - 1;
        const std::size_t c = pair.r1_status == EpochStatus::Observed
                                  ? detail::edge_category(edges1, pair.r1)
                                  : cats1 - 1;
        table[r][c] += 1.0;
    }

    auto merged = detail::merge_for_expected(std::move(table), static_cast<double>(pairs.size()));
    if (merged.degenerate) {
        report.untestable = true;
        report.note = "degenerate table: a margin collapses to one category";
        return report;
    }

    const auto& tbl = merged.counts;
    const std::size_t rows = tbl.size(), cols = tbl[0].size();
    std::vector<double> rm(rows, 0.0), cm(cols, 0.0);
    double total = 0.0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            rm[r] += tbl[r][c];
            cm[c] += tbl[r][c];
            total += tbl[r][c];
        }
    // continuity correction on 2x2 tables, where plain Pearson runs liberal
    const double yates = rows == 2 && cols == 2 ? 0.5 : 0.0;
    double stat = 0.0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const double expected = rm[r] * cm[c] / total;
            const double diff = std::max(0.0, std::abs(tbl[r][c] - expected) - yates);
            stat += diff * diff / expected;
        }
    report.statistic = stat;
    report.df = static_cast<int>((rows - 1) * (cols - 1));
    const boost::math::chi_squared dist(report.df);
    report.p_value = boost::math::cdf(boost::math::complement(dist, stat));
    report.decision = report.p_value < alpha;
    return report;
}

namespace detail {

// Midranks (1-based, ties averaged); unobserved epochs are treated as +inf
// and therefore share the top rank.
inline std::vector<double> censored_midranks(std::span<const EpochPair> pairs, bool first) {
    const std::size_t n = pairs.size();
    std::vector<double> value(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pr = pairs[i];
        const bool seen = (first ? pr.r0_status : pr.r1_status) == EpochStatus::Observed;
        value[i] = seen ? (first ? pr.r0 : pr.r1) : kInfinity;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && value[order[j + 1]] == value[order[i]]) ++j;
        const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mid;
        i = j + 1;
    }
    return rank;
}

// Per-element sums of absolute differences, sum_j |v_i - v_j|, via one sort.
inline std::vector<double> abs_diff_row_sums(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + v[order[k]];
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = v[order[k]];
        const double left = x * static_cast<double>(k) - prefix[k];
        const double right = (prefix[n] - prefix[k + 1]) - x * static_cast<double>(n - 1 - k);
        out[order[k]] = left + right;
    }
    return out;
}

struct Fenwick {
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0.0) {}
    void add(std::size_t i, double v) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += v;
    }
    double prefix(std::size_t i) const { // sum over [0, i]
        double s = 0.0;
        for (++i; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }
    std::vector<double> tree_;
};

} // namespace detail

namespace detail {

// Everything about a dcov evaluation that survives permutations of the y
// column: the x ordering and row sums, the y value levels and their row sums.
// A permutation then costs one Fenwick sweep instead of two sorts.
struct DcovPlan {
    std::vector<double> x;
    std::vector<std::size_t> x_order;
    std::vector<double> adot;
    double atot = 0.0;
    std::vector<double> levels;       // sorted unique y values
    std::vector<double> level_rowsum; // sum_j |v - y_j| for v = levels[k]
    double btot = 0.0;
    std::vector<int> y_ranks;         // rank of the original y per index

    DcovPlan(std::span<const double> xs, std::span<const double> ys)
        : x(xs.begin(), xs.end()) {
        const std::size_t n = x.size();
        x_order.resize(n);
        std::iota(x_order.begin(), x_order.end(), 0);
        std::sort(x_order.begin(), x_order.end(),
                  [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
        adot = abs_diff_row_sums(x);
        for (double v : adot) atot += v;

        levels.assign(ys.begin(), ys.end());
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        std::vector<double> sorted_y(ys.begin(), ys.end());
        std::sort(sorted_y.begin(), sorted_y.end());
        std::vector<double> prefix(n + 1, 0.0);
        for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + sorted_y[k];
        level_rowsum.resize(levels.size());
        for (std::size_t k = 0; k < levels.size(); ++k) {
            const double v = levels[k];
            const std::size_t below =
                std::lower_bound(sorted_y.begin(), sorted_y.end(), v) - sorted_y.begin();
            const std::size_t upto =
                std::upper_bound(sorted_y.begin(), sorted_y.end(), v) - sorted_y.begin();
            const double left = v * below - prefix[below];
            const double right = (prefix[n] - prefix[upto]) - v * (n - upto);
            level_rowsum[k] = left + right;
        }
        y_ranks.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            y_ranks[i] = static_cast<int>(
                std::lower_bound(levels.begin(), levels.end(), ys[i]) - levels.begin());
        for (std::size_t i = 0; i < n; ++i) btot += level_rowsum[y_ranks[i]];
    }

    // y given as per-index level ranks (any permutation of y_ranks)
    double evaluate(std::span<const int> ranks) const {
        const std::size_t n = x.size();
        Fenwick cnt(levels.size()), sy(levels.size()), sx(levels.size()), sxy(levels.size());
        double cnt_all = 0.0, sy_all = 0.0, sx_all = 0.0, sxy_all = 0.0;
        double total = 0.0;
        for (std::size_t idx : x_order) {
            const double u = x[idx];
            const std::size_t r = ranks[idx];
            const double v = levels[r];
            const double c_le = cnt.prefix(r);
            const double sy_le = sy.prefix(r);
            const double sx_le = sx.prefix(r);
            const double sxy_le = sxy.prefix(r);
            total += u * v * c_le - u * sy_le - v * sx_le + sxy_le;
            total += -u * v * (cnt_all - c_le) + u * (sy_all - sy_le) +
                     v * (sx_all - sx_le) - (sxy_all - sxy_le);
            cnt.add(r, 1.0);
            sy.add(r, v);
            sx.add(r, u);
            sxy.add(r, u * v);
            cnt_all += 1.0;
            sy_all += v;
            sx_all += u;
            sxy_all += u * v;
        }
        double cross = 0.0;
        for (std::size_t i = 0; i < n; ++i) cross += adot[i] * level_rowsum[ranks[i]];
        const double nn = static_cast<double>(n);
        return 2.0 * total / (nn * nn) + atot * btot / (nn * nn * nn * nn) -
               2.0 * cross / (nn * nn * nn);
    }
};

} // namespace detail

// Squared sample distance covariance, the double-centered form
//   V^2 = S1/n^2 + a..b../n^4 - (2/n^3) sum_i a_i. b_i.
// evaluated without materializing the n x n distance matrices.
inline double distance_covariance_sq(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("distance_covariance_sq needs equal nonempty inputs");
    const detail::DcovPlan plan(x, y);
    return plan.evaluate(plan.y_ranks);
}

// Permutation test of independence using distance covariance on midranks;
// the r1 column is reshuffled. Exact level by construction.
inline TestReport permutation_dcov_test(std::span<const EpochPair> pairs, int permutations,
                                        double alpha, RandomStream rng) {
    if (pairs.size() < 50)
        throw std::invalid_argument("permutation_dcov_test needs n >= 50");
    if (permutations < 199)
        throw std::invalid_argument("permutation_dcov_test needs >= 199 permutations");

    TestReport report;
    report.method = TestMethod::PermutationDcov;
    report.alpha = alpha;
    report.n = pairs.size();
    report.permutations = permutations;
    report.seed = rng.seed();

    const auto x = detail::censored_midranks(pairs, /*first=*/true);
    const auto y = detail::censored_midranks(pairs, /*first=*/false);
    const auto constant = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [&](double a) { return a == v[0]; });
    };
    if (constant(x) || constant(y)) {
        report.untestable = true;
        report.p_value = 1.0;
        report.note = "constant column: trivially independent";
        return report;
    }

    const detail::DcovPlan plan(x, y);
    report.statistic = plan.evaluate(plan.y_ranks);
    int at_least = 0;
    std::vector<int> shuffled = plan.y_ranks;
    for (int b = 0; b < permutations; ++b) {
        RandomStream perm_rng = rng.child(static_cast<std::uint64_t>(b));
        for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(
                (static_cast<unsigned __int128>(perm_rng.next_u64()) * (i + 1)) >> 64);
            std::swap(shuffled[i], shuffled[j]);
        }
        if (plan.evaluate(shuffled) >= report.statistic) ++at_least;
    }
    report.p_value = (1.0 + at_least) / (permutations + 1.0);
    report.decision = report.p_value < alpha;
    return report;
}

enum class HppVerdict {
    HppConsistent,
    NotHpp,
    TheoremInapplicable,
    IndependenceNotRejected,
    IndependenceRejected,
    Untestable,
};

inline const char* to_string(HppVerdict v) {
    switch (v) {
        case HppVerdict::HppConsistent: return "HPP consistent";
        case HppVerdict::NotHpp: return "not HPP";
        case HppVerdict::TheoremInapplicable: return "Theorem 1 inapplicable";
        case HppVerdict::IndependenceNotRejected: return "independence not rejected";
        case HppVerdict::IndependenceRejected: return "independence rejected";
        default: return "untestable";
    }
}

struct HppOptions {
    int bins = 4;
    int permutations = 499;
};

struct HppReport {
    HppVerdict verdict = HppVerdict::Untestable;
    double alpha = 0.05;
    std::optional<Theorem1Report> theorem1;
    std::optional<TestReport> chi2;
    std::optional<TestReport> dcov;
    std::string caveat;
};

// End-to-end decision. With both laws declared, the side conditions gate the
// verdict; when they hold, rejection by either test (each run at alpha/2 so
// the pair keeps family level alpha) reads "not HPP". With laws unknown the
// verdict is restricted to the independence hypothesis itself.
inline HppReport hpp_decision(const std::optional<ExtendedLaw>& t1,
                              const std::optional<ExtendedLaw>& t2,
                              std::span<const EpochPair> pairs, double alpha,
                              RandomStream rng, const HppOptions& options = {}) {
    if (pairs.empty()) throw std::invalid_argument("hpp_decision needs data");
    HppReport report;
    report.alpha = alpha;

    const double each = alpha / 2.0;
    report.chi2 = chi2_independence_test(pairs, options.bins, each);
    report.chi2->seed = rng.seed();
    report.dcov = permutation_dcov_test(pairs, options.permutations, each, rng.child(1));

    const bool chi2_ok = !report.chi2->untestable;
    const bool dcov_ok = !report.dcov->untestable;
    const bool any_testable = chi2_ok || dcov_ok;
    const bool rejected = (chi2_ok && report.chi2->decision) || (dcov_ok && report.dcov->decision);

    const bool declared = t1.has_value() && t2.has_value();
    if (declared) {
        report.theorem1 = theorem1_report(*t1, *t2);
        if (!report.theorem1->applies) {
            report.verdict = HppVerdict::TheoremInapplicable;
            std::string failing;
            if (!report.theorem1->support_near_zero) failing = "t1 support not near zero";
            if (!report.theorem1->t2_non_arithmetic && !report.theorem1->t1_no_atom_at_zero) {
                if (!failing.empty()) failing += "; ";
                failing += "t2 arithmetic and t1 has an atom at zero";
            }
            if (!report.theorem1->ordinary) {
                if (!failing.empty()) failing += "; ";
                failing += "pair not ordinary";
            }
            report.caveat = "side conditions fail: " + failing;
            return report;
        }
        if (!any_testable) {
            report.verdict = HppVerdict::Untestable;
            report.caveat = "untestable: degenerate samples are trivially independent";
            return report;
        }
        report.verdict = rejected ? HppVerdict::NotHpp : HppVerdict::HppConsistent;
        return report;
    }

    report.caveat = "laws undeclared: side conditions unverified, verdict covers only the "
                    "independence of the first marked epochs";
    if (!any_testable) {
        report.verdict = HppVerdict::Untestable;
        return report;
    }
    report.verdict = rejected ? HppVerdict::IndependenceRejected
                              : HppVerdict::IndependenceNotRejected;
    return report;
}

} // namespace renewal
