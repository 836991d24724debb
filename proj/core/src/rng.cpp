#include "wildsim/rng.hpp"

#include <cmath>

namespace wildsim {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}
} // namespace

Rng::Rng(std::uint64_t seed) {
    // Expand the seed through SplitMix64 per the xoshiro authors' guidance;
    // guards against correlated low-entropy seeds like 0,1,2,...
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
    return next_u64() % bound;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(uniform_index(span));
}

double Rng::uniform_real(double lo, double hi) {
    return lo + (hi - lo) * u01();
}

bool Rng::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return u01() < p;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * u01() - 1.0;
        v = 2.0 * u01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * m;
    has_spare_ = true;
    return u * m;
}

double Rng::normal(double mean, double stddev) {
    return mean + stddev * normal();
}

int Rng::poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    const double limit = std::exp(-lambda);
    double product = u01();
    int count = 0;
    while (product > limit) {
        ++count;
        product *= u01();
    }
    return count;
}

int Rng::geometric1(double p) {
    if (p >= 1.0) return 1;
    if (p <= 0.0) return 1; // degenerate config; treated as instant
    // Inversion: 1 + floor(ln(u) / ln(1-p)), u in (0,1].
    double u = 1.0 - u01();
    return 1 + static_cast<int>(std::floor(std::log(u) / std::log1p(-p)));
}

Rng Rng::substream(std::uint64_t master_seed, std::string_view tag) {
    const std::uint64_t tag_hash = fnv1a64(tag.data(), tag.size());
    std::uint64_t mix = master_seed;
    (void)splitmix64(mix);
    return Rng(mix ^ tag_hash);
}

} // namespace wildsim
