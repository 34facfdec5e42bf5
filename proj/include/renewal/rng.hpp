#pragma once

#include <cmath>
#include <cstdint>

namespace renewal {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ (0x9E3779B97F4A7C15ull + (b << 1) + (b >> 3));
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace detail

// Keyed xoshiro256++ stream. A stream is fully determined by its
// (seed, stream_index) key: equal keys replay the same sequence, distinct
// keys give unrelated sequences. Construction is cheap, so each simulation
// replication owns a stream derived from the replication index and results
// do not depend on how work is spread over threads.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0)
        : seed_(seed), stream_(stream_index) {
        std::uint64_t x = detail::mix_key(seed, stream_index);
        for (auto& s : state_) s = detail::splitmix64(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_; }

    // Independent stream derived from this one's key; child(k) != child(j)
    // for k != j and the derivation is pure.
    RandomStream child(std::uint64_t k) const {
        return RandomStream(seed_, detail::mix_key(stream_ + 0x632BE59BD9B4E019ull, k));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

    // P(K = k) = s(1-s)^k on k = 0, 1, 2, ...  Returned as double: the count
    // feeds lattice arithmetic and can exceed integer ranges for tiny s.
    double geometric_n0(double s) {
        const double v = 1.0 - uniform(); // (0, 1]
        const double k = std::floor(std::log(v) / std::log1p(-s));
        return k > 0.0 ? k : 0.0;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_[4];
};

} // namespace renewal
