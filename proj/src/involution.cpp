#include "windmill/involution.hpp"

#include <numeric>
#include <random>

namespace windmill {

RandomInvolution random_involution(std::uint64_t size, std::uint64_t fixed_count,
                                   std::uint64_t seed) {
    if (fixed_count > size || (size - fixed_count) % 2 != 0) {
        throw ParityError("random_involution: size - fixed_count must be even and non-negative (size " +
                          std::to_string(size) + ", fixed_count " + std::to_string(fixed_count) + ")");
    }
    RandomInvolution result;
    result.domain.resize(size);
    std::iota(result.domain.begin(), result.domain.end(), 0);

    std::vector<std::uint64_t> order = result.domain;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    result.mapping.table.resize(size);
    for (std::uint64_t i = 0; i < fixed_count; ++i) {
        result.mapping.table[order[i]] = order[i];
    }
    for (std::uint64_t i = fixed_count; i < size; i += 2) {
        result.mapping.table[order[i]] = order[i + 1];
        result.mapping.table[order[i + 1]] = order[i];
    }
    return result;
}

}  // namespace windmill
