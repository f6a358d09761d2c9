#include "nanofcs/rng.hpp"

#include <cmath>

#include "nanofcs/errors.hpp"

namespace nanofcs {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t derive_stream_key(uint64_t master_seed, uint64_t stream_id) {
    uint64_t s = master_seed;
    uint64_t k = splitmix64(s);
    s = k ^ (stream_id * 0xA3EC647659359ACDULL + 0x0F58476D1CE4E5B9ULL);
    return splitmix64(s);
}

namespace {

inline void mulhilo64(uint64_t a, uint64_t b, uint64_t& hi, uint64_t& lo) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<uint64_t>(p >> 64);
    lo = static_cast<uint64_t>(p);
}

constexpr uint64_t kPhiloxM = 0xD2B74407B1CE6E93ULL;
constexpr uint64_t kPhiloxW = 0x9E3779B97F4A7C15ULL;

inline double u64_to_unit_double(uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace

void Philox2x64::block(uint64_t key, uint64_t counter, uint64_t out[2]) {
    uint64_t c0 = counter, c1 = 0xB5297A4D6E2C3F17ULL;
    uint64_t k = key;
    for (int round = 0; round < 10; ++round) {
        uint64_t hi, lo;
        mulhilo64(kPhiloxM, c0, hi, lo);
        c0 = hi ^ k ^ c1;
        c1 = lo;
        k += kPhiloxW;
    }
    out[0] = c0;
    out[1] = c1;
}

uint64_t Philox2x64::next_u64() {
    if (buffered_ == 0) {
        block(key, counter++, buffer_);
        buffered_ = 2;
    }
    return buffer_[--buffered_];
}

double Philox2x64::next_double() { return u64_to_unit_double(next_u64()); }

Xoshiro256pp::Xoshiro256pp(uint64_t master_seed, uint64_t stream_id) {
    uint64_t s = derive_stream_key(master_seed, stream_id);
    for (auto& word : s_) word = splitmix64(s);
}

static inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

uint64_t Xoshiro256pp::next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256pp::next_double() { return u64_to_unit_double(next_u64()); }

double Xoshiro256pp::next_open_double() {
    double u;
    do {
        u = next_double();
    } while (u == 0.0);
    return u;
}

double Xoshiro256pp::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u, v, r2;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        r2 = u * u + v * v;
    } while (r2 >= 1.0 || r2 == 0.0);
    const double f = std::sqrt(-2.0 * std::log(r2) / r2);
    cached_gaussian_ = v * f;
    has_cached_gaussian_ = true;
    return u * f;
}

double Xoshiro256pp::next_exponential(double rate) {
    return -std::log(next_open_double()) / rate;
}

uint64_t Xoshiro256pp::next_poisson(double mean) {
    if (!(mean >= 0.0)) throw physics_error("Poisson mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean < 12.0) {
        // Inversion by sequential search.
        const double p0 = std::exp(-mean);
        double p = p0, cdf = p0;
        const double u = next_double();
        uint64_t n = 0;
        while (u > cdf) {
            ++n;
            p *= mean / static_cast<double>(n);
            cdf += p;
            if (n > 1000000) break;
        }
        return n;
    }
    if (mean < 600.0) {
        // Knuth: count multiplications until the uniform product drops
        // below exp(-mean).
        const double limit = std::exp(-mean);
        double prod = 1.0;
        uint64_t n = 0;
        while (true) {
            prod *= next_double();
            if (prod < limit) return n;
            ++n;
        }
    }
    // Gaussian approximation; adequate at such means for this toolkit.
    const double g = next_gaussian();
    const double v = mean + std::sqrt(mean) * g;
    return v <= 0.0 ? 0 : static_cast<uint64_t>(std::llround(v));
}

}  // namespace nanofcs
