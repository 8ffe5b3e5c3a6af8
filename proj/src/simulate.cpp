#include "zmcode/simulate.hpp"

#include "zmcode/errors.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace zmcode {

std::uint64_t SeededRng::below(std::uint64_t bound) {
    // Largest multiple of bound representable; draws at or above it are rejected.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x < limit) return x % bound;
    }
}

SimulationStats simulate(const LinearCode& code, const ControlMatrix& h, const SyndromeTable& table,
                         const SimulationConfig& config) {
    const std::size_t n = code.length();
    const Word m = code.ring().modulus();
    if (config.errors_per_word > n) {
        throw DimensionMismatch("errors per word " + std::to_string(config.errors_per_word) + " exceeds n = " +
                                std::to_string(n));
    }
    SeededRng rng(config.seed);
    SimulationStats stats;
    stats.trials = config.trials;
    Vector message(code.rank());
    std::vector<std::size_t> positions(n);
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        for (auto& u : message) u = rng.below(m);
        const Vector sent = encode(code, message);

        Vector received = sent;
        std::iota(positions.begin(), positions.end(), std::size_t{0});
        for (std::size_t i = 0; i < config.errors_per_word; ++i) {
            const std::size_t j = i + rng.below(n - i);
            std::swap(positions[i], positions[j]);
            const Word symbol = 1 + rng.below(m - 1);
            received[positions[i]] = (received[positions[i]] + symbol) % m;
        }

        const auto outcome = decode(table, h, received);
        if (const auto* c = std::get_if<Corrected>(&outcome)) {
            if (c->codeword == sent) {
                ++stats.corrected;
            } else {
                ++stats.miscorrected;
            }
        } else {
            ++stats.failed;
        }
    }
    if (stats.corrected + stats.failed + stats.miscorrected != stats.trials) {
        throw InternalError("simulation bookkeeping mismatch");
    }
    return stats;
}

} // namespace zmcode
