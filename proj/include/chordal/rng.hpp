#pragma once

#include <cstdint>

namespace chordal {

// Counter-based splitmix64 stream. Every draw is a pure function of
// (seed, counter), so generators can be reproduced and split freely.
class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection sampling keeps the draw unbiased and portable.
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Derive an independent stream for sub-task `tag`.
    splitmix64 split(std::uint64_t tag) {
        splitmix64 fork(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
        fork.next();
        return fork;
    }

private:
    std::uint64_t state_;
};

} // namespace chordal
