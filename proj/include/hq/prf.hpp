#pragma once
// Deterministic keyed randomness.
//
// Every random decision in the library is derived from
// (seed, domain label, canonical data) through a SplitMix64-style mixing
// chain, then read out as a counter-based word stream.  Nothing is stored:
// the same key always regenerates the same bits, materialization is
// embarrassingly parallel, and results are independent of evaluation order.
// Uniform draws below a bound use rejection, so there is no modulo bias.

#include <cstdint>
#include <string_view>

namespace hq {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class KeyedStream {
  public:
    KeyedStream(std::uint64_t seed, std::string_view label) : state_(mix64(seed)) {
        for (unsigned char c : label) state_ = mix64(state_ ^ c);
    }

    // Fold one word of canonical data (e.g. a vertex id) into the key.
    void absorb(std::uint64_t w) { state_ = mix64(state_ ^ w); }
    template <typename It>
    void absorb_range(It first, It last) {
        for (; first != last; ++first) absorb(static_cast<std::uint64_t>(*first) + 1);
    }

    std::uint64_t next() { return mix64(state_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

    // Uniform over {0,...,m-1}; rejects the (2^64 mod m)-word biased prefix.
    std::uint64_t below(std::uint64_t m) {
        std::uint64_t reject = (0 - m) % m;  // == 2^64 mod m
        for (;;) {
            std::uint64_t w = next();
            if (w >= reject) return w % m;
        }
    }

    double unit() {  // uniform in [0,1), 53-bit resolution
        return double(next() >> 11) * (1.0 / 9007199254740992.0);
    }

  private:
    std::uint64_t state_;
    std::uint64_t ctr_ = 0;
};

}  // namespace hq
