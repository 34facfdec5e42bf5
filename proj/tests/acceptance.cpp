// Acceptance suite: one numbered criterion per run, each printing a single
// pass/fail line with the measured quantities. Run `acceptance <1..11>` or
// `acceptance all`.

#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "renewal/renewal.hpp"

namespace {

using namespace renewal;
using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------- plumbing

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
void parallel_for(int n, int threads, F&& body) {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::vector<CaseDescriptor> parameter_sweep() {
    std::vector<CaseDescriptor> out;
    out.push_back({CaseId::A});
    for (double kappa : {0.0, 0.5, 2.0}) {
        out.push_back({CaseId::B, kappa});
        for (double q0 : {0.2, 0.5, 0.8}) out.push_back({CaseId::C, kappa, 0.0, q0});
        for (double theta : {0.5, 1.0, 3.0}) out.push_back({CaseId::D, kappa, theta});
        for (double q0 : {0.2, 0.5, 0.8})
            for (double alpha : {0.5, 1.0, 2.0})
                out.push_back({CaseId::E, kappa, 0.0, q0, alpha});
    }
    return out;
}

std::vector<EpochPair> sample_pairs(const ExtendedLaw& t1, const ExtendedLaw& t2, double p,
                                    std::size_t n, std::uint64_t seed, int threads = 1) {
    SimConfig cfg{t1, t2, p, 10000.0, 10000, RandomStream(seed)};
    return batch_sample_epoch_pairs(cfg, n, threads);
}

// Hand-evaluated spot residuals frozen ahead of the implementation:
//   unit atom pair:  e^{-2}(2e^{-1} - e^{-2} - 1) = -0.054076785389618986
//   erlang(2,1) pair: 7/144 - 1/16 = -1/72
constexpr double kPointSpotResidual = -0.054076785389618986;
constexpr double kErlangSpotResidual = -1.0 / 72.0;

// Power thresholds for the erlang(2,1) counterexample, frozen from a pilot
// run of this suite with the configuration below. Pilot rates: chi-square
// 0.995/1.0/1.0 and rank-dcov 1.0/1.0/1.0 over n = 500/2000/8000 with 200
// seeds; decision procedure 1.0/1.0/1.0 "not HPP" over the same n with 100
// seeds. The first epochs of the erlang pair share the path to the first
// arrival, so both tests saturate already at n = 500; the floors sit several
// binomial standard errors below the pilot rates.
constexpr double kErlangChi2PowerFloor = 0.97;
constexpr double kErlangDcovPowerFloor = 0.97;
constexpr double kErlangHppPowerFloor = 0.95;

// ------------------------------------------------------------- criterion 1

Outcome criterion1() {
    const auto start = Clock::now();
    Outcome out;
    GridSpec spec;
    double worst = 0.0;
    for (const auto& d : parameter_sweep()) {
        const auto [t1, t2] = make_case_laws(d);
        const auto scan = grid_scan(t1, t2, spec, Equation::Eq2);
        worst = std::max(worst, scan.summary.max_abs);
        if (scan.summary.max_abs > 1e-12) out.pass = false;
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) out.pass = false;
    out.detail = "max |eq2| over sweep = " + fmt(worst) + ", " + fmt(elapsed) + " s";
    return out;
}

// ------------------------------------------------------------- criterion 2

Outcome criterion2() {
    Outcome out;
    GridSpec spec;
    const auto unit_atom = ExtendedLaw::point(1.0);
    const auto erl = ExtendedLaw::erlang(2, 1.0);

    const double point_grid = grid_scan(unit_atom, unit_atom, spec, Equation::Eq2).summary.max_abs;
    const double erl_grid = grid_scan(erl, erl, spec, Equation::Eq2).summary.max_abs;
    const double point_spot = residual_eq2(unit_atom, unit_atom, 1.0, 1.0);
    const double erl_spot = residual_eq2(erl, erl, 1.0, 1.0);

    out.pass = point_grid >= 0.01 && erl_grid >= 0.01 &&
               std::abs(point_spot - kPointSpotResidual) <= 1e-9 &&
               std::abs(erl_spot - kErlangSpotResidual) <= 1e-9;
    out.detail = "grid maxima " + fmt(point_grid) + " / " + fmt(erl_grid) + ", spots " +
                 fmt(point_spot) + " / " + fmt(erl_spot);
    return out;
}

// ------------------------------------------------------------- criterion 3

Outcome criterion3() {
    const auto start = Clock::now();
    Outcome out;
    std::vector<std::pair<ExtendedLaw, ExtendedLaw>> pairs;
    for (const auto& d : parameter_sweep()) pairs.push_back(make_case_laws(d));
    pairs.push_back({ExtendedLaw::point(1.0), ExtendedLaw::point(1.0)});
    pairs.push_back({ExtendedLaw::erlang(2, 1.0), ExtendedLaw::erlang(2, 1.0)});

    GridSpec spec;
    const auto lambdas = std::vector<double>{0.0, 0.25, 0.75, 1.5, 2.5, 3.75, 5.0};
    double worst = 0.0;
    for (const auto& [t1, t2] : pairs) {
        for (double p : {0.1, 0.5, 0.9}) {
            for (double lam : lambdas) {
                for (double mu : lambdas) {
                    const double denom = (1.0 - (1.0 - p) * laplace(t2, lam)) *
                                         (1.0 - p * laplace(t2, mu));
                    const double gap = residual_eq1(t1, t2, p, lam, mu) -
                                       p * (1.0 - p) * residual_eq2(t1, t2, lam, mu) / denom;
                    worst = std::max(worst, std::abs(gap));
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    out.pass = worst <= 1e-12 && elapsed < 1.0;
    out.detail = "max factorization gap = " + fmt(worst) + ", " + fmt(elapsed) + " s";
    return out;
}

// ------------------------------------------------------------- criterion 4

Outcome criterion4() {
    const auto start = Clock::now();
    Outcome out;
    const std::vector<CaseDescriptor> cases = {
        {CaseId::A}, {CaseId::B, 1.0}, {CaseId::C, 1.0, 0.0, 0.5},
        {CaseId::D, 0.0, 1.0}, {CaseId::E, 0.0, 0.0, 0.5, 1.0}};
    const double grid[] = {0.5, 1.0, 2.0};
    const double p = 0.5;
    const std::size_t n = 1000000;

    struct Job {
        CaseDescriptor desc;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& d : cases)
        for (std::uint64_t seed : {1, 2, 3}) jobs.push_back({d, seed});

    std::vector<std::string> problems(jobs.size());
    double worst_z = 0.0;
    std::vector<double> zs(jobs.size(), 0.0);
    parallel_for(static_cast<int>(jobs.size()), 2, [&](int j) {
        const auto [t1, t2] = make_case_laws(jobs[j].desc);
        const auto pairs = sample_pairs(t1, t2, p, n, jobs[j].seed);
        double local_worst = 0.0;
        for (double lam : grid) {
            for (double mu : grid) {
                const auto est = mc_laplace_estimate(pairs, lam, mu);
                const double closed = joint_lt(t1, t2, p, lam, mu);
                const double slack = 3.0 * est.std_error + 1e-12;
                if (std::abs(est.value - closed) > slack)
                    problems[j] = std::string("case ") + to_string(jobs[j].desc.case_id) +
                                  " seed " + std::to_string(jobs[j].seed);
                if (est.std_error > 0.0)
                    local_worst = std::max(local_worst,
                                           std::abs(est.value - closed) / est.std_error);
            }
        }
        zs[j] = local_worst;
    });
    for (const auto& problem : problems)
        if (!problem.empty()) {
            out.pass = false;
            out.detail = "exceeded 3 standard errors: " + problem;
        }
    for (double z : zs) worst_z = std::max(worst_z, z);
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) out.pass = false;
    if (out.pass)
        out.detail = "worst |z| = " + fmt(worst_z) + " across 5 cases x 3 seeds, " +
                     fmt(elapsed) + " s";
    return out;
}

// ------------------------------------------------------------- criterion 5

Outcome criterion5() {
    const auto start = Clock::now();
    Outcome out;

    const auto probs = remark3_probs(0.5, 0.5);
    const double closed[5] = {probs.b0, probs.b1, probs.b0_and_b1, probs.a0, probs.a0_and_b1};
    const double expect[5] = {1.0 / 3.0, 1.0 / 3.0, 3.0 / 32.0, 0.5, 3.0 / 16.0};
    for (int i = 0; i < 5; ++i)
        if (std::abs(closed[i] - expect[i]) > 1e-12) out.pass = false;

    const std::size_t n = 1000000;
    const double kappa = 1.0;
    double worst_z = 0.0;
    double gap_sigmas = 1e300;
    for (CaseId family : {CaseId::E, CaseId::C}) {
        CaseDescriptor d{family, kappa, 0.0, 0.5, 1.0};
        const auto [t1, t2] = make_case_laws(d);

        std::size_t hits[5] = {0, 0, 0, 0, 0};
        std::vector<std::array<std::size_t, 5>> partial(2, {0, 0, 0, 0, 0});
        const RandomStream root(family == CaseId::E ? 12001 : 12002);
        parallel_for(2, 2, [&](int w) {
            auto& mine = partial[w];
            const std::size_t lo = w * (n / 2), hi = w == 0 ? n / 2 : n;
            for (std::size_t i = lo; i < hi; ++i) {
                RandomStream base = root.child(i);
                const auto seq = simulate_marked_arrivals(t1, t2, 0.5, kappa, 10000,
                                                          base.child(0), base.child(1));
                const auto [n0, n1] = counts_at_time(seq, kappa);
                mine[0] += n0 == 1;
                mine[1] += n1 == 1;
                mine[2] += n0 == 1 && n1 == 1;
                mine[3] += n0 == 0;
                mine[4] += n0 == 0 && n1 == 1;
            }
        });
        for (int i = 0; i < 5; ++i) hits[i] = partial[0][i] + partial[1][i];

        for (int i = 0; i < 5; ++i) {
            const double est = static_cast<double>(hits[i]) / n;
            const double se = std::sqrt(est * (1.0 - est) / n);
            const double z = std::abs(est - closed[i]) / se;
            worst_z = std::max(worst_z, z);
            if (z > 3.0) out.pass = false;
        }
        const double p01 = static_cast<double>(hits[2]) / n;
        const double gap = std::abs(p01 - (static_cast<double>(hits[0]) / n) *
                                              (static_cast<double>(hits[1]) / n));
        const double se01 = std::sqrt(p01 * (1.0 - p01) / n);
        gap_sigmas = std::min(gap_sigmas, gap / se01);
        if (gap < 5.0 * se01) out.pass = false;
    }

    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) out.pass = false;
    out.detail = "worst |z| = " + fmt(worst_z) + ", independence gap >= " +
                 fmt(gap_sigmas) + " sigma, " + fmt(elapsed) + " s";
    return out;
}

// ------------------------------------------------------------- criterion 6

Outcome criterion6() {
    Outcome out;
    double min_max = 1e300;
    for (int i = 1; i <= 19; ++i) {
        for (int j = 1; j <= 19; ++j) {
            const auto [c1, c2] = remark3_incompatibility(0.05 * i, 0.05 * j);
            min_max = std::min(min_max, std::max(std::abs(c1), std::abs(c2)));
        }
    }
    if (!(min_max > 0.0)) out.pass = false;

    // c2 = 0 is a quadratic in p; at each numeric root c1 must equal
    // q0(1+q0) - 2 q0^2
    double worst_sub = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double q0 = static_cast<double>(i) / 11.0;
        const double a = -(1.0 - q0) * (1.0 - q0);
        const double b = (1.0 - q0) * (1.0 - q0);
        const double disc = std::sqrt(b * b); // c = 0
        for (double p : {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)}) {
            const double u = q0 + p - p * q0;
            const double v = 1.0 - p + q0 * p;
            if (std::abs(u * v - q0) > 1e-12) out.pass = false;
            const double c1_at_root = q0 * (1.0 + q0) - 2.0 * u * u * v * v;
            const double predicted = q0 * (1.0 + q0) - 2.0 * q0 * q0;
            worst_sub = std::max(worst_sub, std::abs(c1_at_root - predicted));
            if (std::abs(c1_at_root - predicted) > 1e-9) out.pass = false;
        }
    }
    out.detail = "min over grid of max(|c1|,|c2|) = " + fmt(min_max) +
                 ", substitution gap = " + fmt(worst_sub);
    return out;
}

// ------------------------------------------------------------- criterion 7

Outcome criterion7() {
    const auto start = Clock::now();
    Outcome out;
    double worst_flat = 0.0, worst_tail = 0.0;
    for (double q0 : {0.2, 0.5, 0.8}) {
        const double level = (1.0 - q0 * q0) / q0;
        const auto mass = discrete_renewal_mass(q0, 500);
        for (double v : mass) worst_flat = std::max(worst_flat, std::abs(v - level));
        worst_tail = std::max(worst_tail, summed_tail_residual(q0, 500));
    }
    const double elapsed = seconds_since(start);
    out.pass = worst_flat <= 1e-10 && worst_tail <= 1e-14 && elapsed < 1.0;
    out.detail = "flatness " + fmt(worst_flat) + ", tail residual " + fmt(worst_tail) +
                 ", " + fmt(elapsed) + " s";
    return out;
}

// ------------------------------------------------------------- criterion 8

Outcome criterion8() {
    const auto start = Clock::now();
    Outcome out;
    const int seeds = 200;
    const std::size_t n = 2000;
    const auto [t1, t2] = make_case_laws({CaseId::D, 0.0, 1.0});

    std::vector<int> chi2_reject(seeds, 0), dcov_reject(seeds, 0);
    parallel_for(seeds, 2, [&](int s) {
        const auto pairs = sample_pairs(t1, t2, 0.5, n, 21000 + s);
        chi2_reject[s] = chi2_independence_test(pairs, 4, 0.05).decision;
        dcov_reject[s] =
            permutation_dcov_test(pairs, 499, 0.05, RandomStream(31000 + s)).decision;
    });
    const double chi2_rate =
        std::accumulate(chi2_reject.begin(), chi2_reject.end(), 0) / double(seeds);
    const double dcov_rate =
        std::accumulate(dcov_reject.begin(), dcov_reject.end(), 0) / double(seeds);

    const double elapsed = seconds_since(start);
    out.pass = chi2_rate <= 0.07 && dcov_rate <= 0.07 && elapsed < 300.0;
    out.detail = "size chi2 = " + fmt(chi2_rate) + ", dcov = " + fmt(dcov_rate) + " (200 seeds), " +
                 fmt(elapsed) + " s";
    return out;
}

// ------------------------------------------------------------- criterion 9

struct PowerCurve {
    double rate[3]; // n = 500, 2000, 8000
};

void measure_power(const ExtendedLaw& t1, const ExtendedLaw& t2, int seeds,
                   std::uint64_t seed_base, PowerCurve& chi2_curve, PowerCurve& dcov_curve) {
    const std::size_t ns[3] = {500, 2000, 8000};
    for (int k = 0; k < 3; ++k) {
        std::vector<int> chi2_reject(seeds, 0), dcov_reject(seeds, 0);
        parallel_for(seeds, 2, [&](int s) {
            const auto pairs = sample_pairs(t1, t2, 0.5, ns[k], seed_base + 100 * k + s);
            chi2_reject[s] = chi2_independence_test(pairs, 4, 0.05).decision;
            dcov_reject[s] = permutation_dcov_test(pairs, 499, 0.05,
                                                   RandomStream(seed_base + 5000 + 100 * k + s))
                                 .decision;
        });
        chi2_curve.rate[k] =
            std::accumulate(chi2_reject.begin(), chi2_reject.end(), 0) / double(seeds);
        dcov_curve.rate[k] =
            std::accumulate(dcov_reject.begin(), dcov_reject.end(), 0) / double(seeds);
    }
}

Outcome criterion9() {
    const auto start = Clock::now();
    Outcome out;
    const int seeds = 200;

    PowerCurve point_chi2{}, point_dcov{}, erl_chi2{}, erl_dcov{};
    const auto unit_atom = ExtendedLaw::point(1.0);
    const auto erl = ExtendedLaw::erlang(2, 1.0);
    measure_power(unit_atom, unit_atom, seeds, 40000, point_chi2, point_dcov);
    measure_power(erl, erl, seeds, 60000, erl_chi2, erl_dcov);

    const auto monotone = [](const PowerCurve& c) {
        return c.rate[0] <= c.rate[1] && c.rate[1] <= c.rate[2];
    };
    out.pass = point_chi2.rate[1] >= 0.95 && point_dcov.rate[1] >= 0.95;
    out.pass = out.pass && monotone(point_chi2) && monotone(point_dcov) &&
               monotone(erl_chi2) && monotone(erl_dcov);
    out.pass = out.pass && erl_chi2.rate[2] >= kErlangChi2PowerFloor &&
               erl_dcov.rate[2] >= kErlangDcovPowerFloor;

    const auto curve = [](const PowerCurve& c) {
        return fmt(c.rate[0]) + "/" + fmt(c.rate[1]) + "/" + fmt(c.rate[2]);
    };
    out.detail = "power over n=500/2000/8000: point chi2 " + curve(point_chi2) + ", dcov " +
                 curve(point_dcov) + "; erlang chi2 " + curve(erl_chi2) + ", dcov " +
                 curve(erl_dcov) + ", " + fmt(seconds_since(start)) + " s";
    return out;
}

// ------------------------------------------------------------ criterion 10

Outcome criterion10() {
    const auto start = Clock::now();
    Outcome out;

    // exponential family at kappa = 0: mostly "HPP consistent"
    {
        const int seeds = 200;
        const auto [t1, t2] = make_case_laws({CaseId::D, 0.0, 1.0});
        std::vector<int> consistent(seeds, 0);
        parallel_for(seeds, 2, [&](int s) {
            const auto pairs = sample_pairs(t1, t2, 0.5, 2000, 70000 + s);
            const auto rep = hpp_decision(t1, t2, pairs, 0.05, RandomStream(71000 + s));
            consistent[s] = rep.verdict == HppVerdict::HppConsistent;
        });
        const double rate =
            std::accumulate(consistent.begin(), consistent.end(), 0) / double(seeds);
        if (rate < 0.93) out.pass = false;
        out.detail = "case-d consistency " + fmt(rate);
    }

    // deterministic-delay and lattice declarations close the gate
    {
        const auto [t1, t2] = make_case_laws({CaseId::D, 1.0, 1.0});
        const auto pairs = sample_pairs(t1, t2, 0.5, 500, 72001);
        if (hpp_decision(t1, t2, pairs, 0.05, RandomStream(72002)).verdict !=
            HppVerdict::TheoremInapplicable)
            out.pass = false;
        const auto [e1, e2] = make_case_laws({CaseId::E, 0.0, 0.0, 0.5, 1.0});
        const auto epairs = sample_pairs(e1, e2, 0.5, 500, 72003);
        if (hpp_decision(e1, e2, epairs, 0.05, RandomStream(72004)).verdict !=
            HppVerdict::TheoremInapplicable)
            out.pass = false;
    }

    // erlang counterexample: "not HPP" with monotone power
    {
        const int seeds = 100;
        const auto erl = ExtendedLaw::erlang(2, 1.0);
        const std::size_t ns[3] = {500, 2000, 8000};
        double rates[3];
        for (int k = 0; k < 3; ++k) {
            std::vector<int> not_hpp(seeds, 0);
            parallel_for(seeds, 2, [&](int s) {
                const auto pairs = sample_pairs(erl, erl, 0.5, ns[k], 73000 + 200 * k + s);
                const auto rep =
                    hpp_decision(erl, erl, pairs, 0.05, RandomStream(74000 + 200 * k + s));
                not_hpp[s] = rep.verdict == HppVerdict::NotHpp;
            });
            rates[k] = std::accumulate(not_hpp.begin(), not_hpp.end(), 0) / double(seeds);
        }
        if (!(rates[0] <= rates[1] && rates[1] <= rates[2])) out.pass = false;
        if (rates[2] < kErlangHppPowerFloor) out.pass = false;
        out.detail += "; erlang not-HPP " + fmt(rates[0]) + "/" + fmt(rates[1]) + "/" +
                      fmt(rates[2]);
    }

    out.detail += ", " + fmt(seconds_since(start)) + " s";
    return out;
}

// ------------------------------------------------------------ criterion 11

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::stringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

Outcome criterion11() {
    Outcome out;

    // library level: replication layout is independent of the thread count
    const auto [t1, t2] = make_case_laws({CaseId::D, 0.0, 1.0});
    SimConfig cfg{t1, t2, 0.5, 10000.0, 10000, RandomStream(99)};
    const auto serial = batch_sample_epoch_pairs(cfg, 20000, 1);
    const auto threaded = batch_sample_epoch_pairs(cfg, 20000, 4);
    if (!(serial == threaded)) {
        out.pass = false;
        out.detail = "threaded batch diverged";
        return out;
    }

    // CLI level: identical commands and seeds give byte-identical outputs
    const auto tmp = std::filesystem::temp_directory_path();
    const std::string base = std::string(RENEWAL_CLI_PATH);
    const auto shell = [&](const std::string& args) {
        return std::system((base + " " + args + " >/dev/null 2>&1").c_str());
    };
    const std::string csv_a = (tmp / "det_a.csv").string();
    const std::string csv_b = (tmp / "det_b.csv").string();
    const std::string sim_args = "simulate --case d --theta 1 --p 0.5 --n 5000 "
                                 "--horizon 10000 --seed 1234";
    shell(sim_args + " --threads 1 -o " + csv_a);
    shell(sim_args + " --threads 2 -o " + csv_b);
    const auto hash_a = fnv1a(slurp(csv_a));
    const auto hash_b = fnv1a(slurp(csv_b));

    const std::string rep_a = (tmp / "det_rep_a.json").string();
    const std::string rep_b = (tmp / "det_rep_b.json").string();
    shell("test-independence --input " + csv_a + " --seed 5 -o " + rep_a);
    shell("test-independence --input " + csv_a + " --seed 5 -o " + rep_b);
    const auto rep_hash_a = fnv1a(slurp(rep_a));
    const auto rep_hash_b = fnv1a(slurp(rep_b));

    const std::string grid_a = (tmp / "det_grid_a.csv").string();
    const std::string grid_b = (tmp / "det_grid_b.csv").string();
    shell("verify-eq --case e --q0 0.5 --alpha-scale 1 -o " + grid_a);
    shell("verify-eq --case e --q0 0.5 --alpha-scale 1 -o " + grid_b);

    out.pass = hash_a == hash_b && rep_hash_a == rep_hash_b &&
               slurp(grid_a) == slurp(grid_b) && !slurp(csv_a).empty();
    std::ostringstream os;
    os << "csv hash " << std::hex << hash_a << (hash_a == hash_b ? " == " : " != ")
       << hash_b << ", report hash " << rep_hash_a
       << (rep_hash_a == rep_hash_b ? " == " : " != ") << rep_hash_b;
    out.detail = os.str();
    return out;
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "functional-equation identity over the parameter sweep", criterion1},
    {2, "necessity witnesses for the dependent pairs", criterion2},
    {3, "p-invariance factorization", criterion3},
    {4, "Monte Carlo joint transform agreement", criterion4},
    {5, "atom-epoch probabilities and the independence gap", criterion5},
    {6, "incompatibility of the factorization identities", criterion6},
    {7, "discrete stationarity identities", criterion7},
    {8, "statistical size on the exponential family", criterion8},
    {9, "statistical power on the dependent pairs", criterion9},
    {10, "end-to-end decision procedure", criterion10},
    {11, "determinism across runs and thread counts", criterion11},
};

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <1..11|all>\n";
        return 2;
    }
    const bool all = std::strcmp(argv[1], "all") == 0;
    const int wanted = all ? 0 : std::atoi(argv[1]);
    if (!all && (wanted < 1 || wanted > 11)) {
        std::cerr << "usage: acceptance <1..11|all>\n";
        return 2;
    }

    int failures = 0;
    for (const auto& criterion : kCriteria) {
        if (!all && criterion.id != wanted) continue;
        const auto outcome = criterion.run();
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.id
                  << ": " << criterion.title;
        if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
        std::cout << '\n';
        failures += !outcome.pass;
    }
    return failures == 0 ? 0 : 1;
}
