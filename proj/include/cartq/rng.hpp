#ifndef CARTQ_RNG_HPP
#define CARTQ_RNG_HPP

#include <cstdint>
#include <random>

namespace cartq {

// Seeded mt19937 with fixed draw rules, so a run can be replayed
// draw-for-draw from its manifest (see the "prng" block written there).
class RandomStream {
public:
    explicit RandomStream(std::uint32_t seed) : engine_(seed) {}

    // Uniform in [0, 1): next 32-bit engine output scaled by 2^-32.
    double uniform01() { return static_cast<double>(engine_()) * 0x1p-32; }

    // Uniform integer in [0, n): high 32 bits of next * n.
    int uniform_int(int n) {
        const std::uint64_t wide = static_cast<std::uint64_t>(engine_()) * static_cast<std::uint64_t>(n);
        return static_cast<int>(wide >> 32);
    }

private:
    std::mt19937 engine_;
};

}  // namespace cartq

#endif  // CARTQ_RNG_HPP
