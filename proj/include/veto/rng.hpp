#ifndef VETO_RNG_HPP
#define VETO_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace veto {

// Deterministic randomness, pinned so outputs are portable across
// implementations: std::mt19937_64 streams, a SplitMix64-style avalanche
// for seed derivation, and modulo-rejection bounded draws (the standard
// distributions are implementation-defined and must not be used here).

/// SplitMix64 finalizer (constants from Steele et al.).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Chains master seed, cell ordinal and sample index into one stream seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell,
                                 std::uint64_t index) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ mix64(cell));
    return mix64(h ^ mix64(index));
}

/// Uniform draw from [0, bound) by rejection; bound >= 1.
inline std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % bound;
}

/// Unbiased Fisher-Yates shuffle using bounded_draw.
template <typename T>
void shuffle_portable(std::vector<T>& items, std::mt19937_64& gen) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[bounded_draw(gen, i)]);
}

} // namespace veto

#endif
