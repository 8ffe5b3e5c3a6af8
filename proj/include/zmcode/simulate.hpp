#pragma once

#include "zmcode/code.hpp"
#include "zmcode/decoder.hpp"

#include <cstdint>
#include <random>

namespace zmcode {

// Seeded source for the channel harness. std::mt19937_64 is fully specified
// by the standard; bounded draws use rejection sampling on its raw output
// (std::uniform_int_distribution is implementation-defined), so a seed
// reproduces the same run on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

struct SimulationConfig {
    std::size_t trials = 1000;
    std::size_t errors_per_word = 1;
    std::uint64_t seed = 0;
};

struct SimulationStats {
    std::size_t trials = 0;
    std::size_t corrected = 0;    // decoded to the transmitted codeword
    std::size_t failed = 0;       // decoder reported failure
    std::size_t miscorrected = 0; // decoded to a different codeword
};

// Per trial: a uniform message, encoded; errors_per_word distinct positions
// (partial Fisher–Yates) each receive a uniform nonzero error symbol; the
// word is decoded with `table`. Throws DimensionMismatch when
// errors_per_word > n.
[[nodiscard]] SimulationStats simulate(const LinearCode& code, const ControlMatrix& h, const SyndromeTable& table,
                                       const SimulationConfig& config);

} // namespace zmcode
