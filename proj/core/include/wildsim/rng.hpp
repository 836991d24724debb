#ifndef WILDSIM_RNG_HPP
#define WILDSIM_RNG_HPP

#include <cstdint>
#include <string_view>

namespace wildsim {

// Deterministic xoshiro256** stream. All distributions are implemented here
// rather than via <random> so that sequences are bit-identical across
// platforms and standard libraries. Do not reorder draw sites inside a
// simulation step: replay depends on the draw sequence.
class Rng {
public:
    Rng() : Rng(0x9e3779b97f4a7c15ull) {}
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on [0,1) with 53 random bits.
    double u01();

    // Uniform integer in [0, bound), bound > 0. Rejection-free Lemire-style
    // reduction would need 128-bit multiplies everywhere; plain modulo of a
    // 64-bit draw keeps the bias below 2^-40 for the bounds used here.
    std::uint64_t uniform_index(std::uint64_t bound);

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    double uniform_real(double lo, double hi);

    bool bernoulli(double p);

    // Standard normal via polar Box-Muller; one spare value is cached.
    double normal();
    double normal(double mean, double stddev);

    // Poisson counting draw (Knuth product method; adequate for the small
    // per-step rates used by the scenario drivers).
    int poisson(double lambda);

    // Geometric on {1,2,3,...} with success probability p: P(X=k) =
    // (1-p)^(k-1) p, mean 1/p. Used for commit/review delay draws.
    int geometric1(double p);

    // Derive an independent substream for a named component. The same
    // (seed, tag) pair always yields the same stream.
    static Rng substream(std::uint64_t master_seed, std::string_view tag);

private:
    std::uint64_t state_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

// SplitMix64 step; also used for seed derivation and toy hashing.
std::uint64_t splitmix64(std::uint64_t& state);

// FNV-1a 64-bit over a byte view. Stable across platforms.
std::uint64_t fnv1a64(const void* data, std::size_t len);

} // namespace wildsim

#endif
