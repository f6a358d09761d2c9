#pragma once

#include <cstdint>

namespace nanofcs {

// SplitMix64 finalizer; used to expand seeds and derive substream keys.
uint64_t splitmix64(uint64_t& state);
uint64_t derive_stream_key(uint64_t master_seed, uint64_t stream_id);

// Philox 2x64-10 counter-based generator: raw(key, counter) is a pure
// function, so substreams are addressable by index and order-independent.
struct Philox2x64 {
    uint64_t key = 0;
    uint64_t counter = 0;

    explicit Philox2x64(uint64_t key_) : key(key_) {}
    Philox2x64(uint64_t master_seed, uint64_t stream_id)
        : key(derive_stream_key(master_seed, stream_id)) {}

    static void block(uint64_t key, uint64_t counter, uint64_t out[2]);

    uint64_t next_u64();
    double next_double();  // uniform [0,1)

  private:
    uint64_t buffer_[2] = {0, 0};
    int buffered_ = 0;
};

// xoshiro256++ sequential engine for hot loops. Seeded per substream via
// splitmix64 so independently keyed streams are decorrelated.
class Xoshiro256pp {
  public:
    Xoshiro256pp(uint64_t master_seed, uint64_t stream_id);

    uint64_t next_u64();
    double next_double();        // uniform [0,1)
    double next_open_double();   // uniform (0,1), safe for log()
    double next_gaussian();      // standard normal, Marsaglia polar
    double next_exponential(double rate);
    // Exact Poisson for practical means (inversion below 12, Knuth-style
    // product above, normal rounding above 600 where exp() underflows).
    uint64_t next_poisson(double mean);

  private:
    uint64_t s_[4];
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

}  // namespace nanofcs
