#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "renewal/law.hpp"
#include "renewal/rng.hpp"

namespace renewal {

// Marked renewal trajectories: arrival epochs are partial sums of one draw
// from t1 followed by i.i.d. draws from t2, each arrival carrying an
// independent Bernoulli(p) mark. Zero inter-arrivals stack arrivals on the
// same epoch, so generation is always truncated by a time horizon and an
// arrival cap; a draw of +inf ends the trajectory exactly.

struct SimConfig {
    ExtendedLaw t1;
    ExtendedLaw t2;
    double p = 0.5;
    double horizon = 1000.0;
    std::int64_t arrival_cap = 1000000;
    RandomStream stream{0};
};

enum class Terminated { HorizonReached, InfinityReached, CapReached };

struct MarkedArrivalSequence {
    std::vector<double> epochs;       // nondecreasing, all <= horizon
    std::vector<std::uint8_t> marks;  // same length, values 0/1
    Terminated terminated = Terminated::HorizonReached;
};

enum class EpochStatus { Observed, InfiniteExact, HorizonCensored };

inline const char* to_string(EpochStatus s) {
    switch (s) {
        case EpochStatus::Observed: return "Observed";
        case EpochStatus::InfiniteExact: return "InfiniteExact";
        default: return "HorizonCensored";
    }
}

struct EpochPair {
    double r0 = kInfinity;
    double r1 = kInfinity;
    EpochStatus r0_status = EpochStatus::HorizonCensored;
    EpochStatus r1_status = EpochStatus::HorizonCensored;

    bool operator==(const EpochPair&) const = default;
};

namespace detail {

inline void validate_sim_config(const SimConfig& cfg) {
    if (!(cfg.p > 0.0 && cfg.p < 1.0))
        throw std::invalid_argument("marking probability p must be strictly inside (0,1)");
    if (!(cfg.horizon > 0.0))
        throw std::invalid_argument("horizon must be positive");
    if (cfg.arrival_cap < 1)
        throw std::invalid_argument("arrival cap must be >= 1");
}

} // namespace detail

// Arrival randomness and mark randomness come from separate streams so that
// reseeding the marks alone leaves the epoch skeleton unchanged.
inline MarkedArrivalSequence simulate_marked_arrivals(const ExtendedLaw& t1,
                                                      const ExtendedLaw& t2, double p,
                                                      double horizon,
                                                      std::int64_t arrival_cap,
                                                      RandomStream arrivals,
                                                      RandomStream marks) {
    MarkedArrivalSequence seq;
    double s = 0.0;
    std::int64_t n = 0;
    const ExtendedLaw* law = &t1;
    while (true) {
        const double t = sample(*law, arrivals);
        law = &t2;
        if (std::isinf(t)) {
            seq.terminated = Terminated::InfinityReached;
            break;
        }
        s += t;
        if (s > horizon) {
            seq.terminated = Terminated::HorizonReached;
            break;
        }
        seq.epochs.push_back(s);
        seq.marks.push_back(marks.bernoulli(p) ? 1 : 0);
        if (++n == arrival_cap) {
            seq.terminated = Terminated::CapReached;
            break;
        }
    }
    return seq;
}

inline MarkedArrivalSequence simulate_marked_arrivals(const SimConfig& cfg) {
    detail::validate_sim_config(cfg);
    return simulate_marked_arrivals(cfg.t1, cfg.t2, cfg.p, cfg.horizon, cfg.arrival_cap,
                                    cfg.stream.child(0), cfg.stream.child(1));
}

// First epoch carrying each mark. A coordinate with no such arrival is inf:
// exactly so when the trajectory ended on an infinite inter-arrival, censored
// when the horizon or cap cut generation short.
inline EpochPair first_epochs(const MarkedArrivalSequence& seq) {
    EpochPair pair;
    const EpochStatus missing = seq.terminated == Terminated::InfinityReached
                                    ? EpochStatus::InfiniteExact
                                    : EpochStatus::HorizonCensored;
    pair.r0_status = pair.r1_status = missing;
    bool need0 = true, need1 = true;
    for (std::size_t i = 0; i < seq.epochs.size() && (need0 || need1); ++i) {
        if (seq.marks[i] == 1 && need1) {
            pair.r1 = seq.epochs[i];
            pair.r1_status = EpochStatus::Observed;
            need1 = false;
        } else if (seq.marks[i] == 0 && need0) {
            pair.r0 = seq.epochs[i];
            pair.r0_status = EpochStatus::Observed;
            need0 = false;
        }
    }
    return pair;
}

inline std::pair<std::int64_t, std::int64_t> counts_at_time(const MarkedArrivalSequence& seq,
                                                            double t) {
    if (t < 0.0) throw std::invalid_argument("counts_at_time requires t >= 0");
    std::int64_t n0 = 0, n1 = 0;
    for (std::size_t i = 0; i < seq.epochs.size(); ++i) {
        if (seq.epochs[i] > t) break;
        (seq.marks[i] == 1 ? n1 : n0) += 1;
    }
    return {n0, n1};
}

namespace detail {

// Same draw sequence as simulate_marked_arrivals, but stops as soon as both
// first epochs are known; the tail of the trajectory cannot change them.
inline EpochPair sample_epoch_pair(const ExtendedLaw& t1, const ExtendedLaw& t2, double p,
                                   double horizon, std::int64_t arrival_cap,
                                   RandomStream arrivals, RandomStream marks) {
    EpochPair pair;
    double s = 0.0;
    std::int64_t n = 0;
    bool need0 = true, need1 = true;
    const ExtendedLaw* law = &t1;
    EpochStatus missing = EpochStatus::HorizonCensored;
    while (true) {
        const double t = sample(*law, arrivals);
        law = &t2;
        if (std::isinf(t)) {
            missing = EpochStatus::InfiniteExact;
            break;
        }
        s += t;
        if (s > horizon) break;
        const int mark = marks.bernoulli(p) ? 1 : 0;
        if (mark == 1 && need1) {
            pair.r1 = s;
            pair.r1_status = EpochStatus::Observed;
            need1 = false;
        } else if (mark == 0 && need0) {
            pair.r0 = s;
            pair.r0_status = EpochStatus::Observed;
            need0 = false;
        }
        if (!need0 && !need1) return pair;
        if (++n == arrival_cap) break;
    }
    if (need0) pair.r0_status = missing;
    if (need1) pair.r1_status = missing;
    return pair;
}

} // namespace detail

// n independent replications; replication i draws from cfg.stream.child(i),
// so the result is a pure function of (config, n) for any thread count.
inline std::vector<EpochPair> batch_sample_epoch_pairs(const SimConfig& cfg, std::size_t n,
                                                       int threads = 1) {
    detail::validate_sim_config(cfg);
    if (n == 0) throw std::invalid_argument("batch size must be >= 1");
    std::vector<EpochPair> out(n);
    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            RandomStream base = cfg.stream.child(i);
            out[i] = detail::sample_epoch_pair(cfg.t1, cfg.t2, cfg.p, cfg.horizon,
                                               cfg.arrival_cap, base.child(0), base.child(1));
        }
    };
    if (threads <= 1 || n < 2) {
        worker(0, n);
        return out;
    }
    const std::size_t k = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(k);
    const std::size_t chunk = (n + k - 1) / k;
    for (std::size_t w = 0; w < k; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
    return out;
}

} // namespace renewal
