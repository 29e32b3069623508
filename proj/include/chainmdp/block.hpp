#pragma once

// Linear block codes over a chain ring.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chainmdp/linalg.hpp"

namespace chainmdp {

/// The code {uG : u in T^k}.  A generator whose rows are not a gamma-basis is
/// replaced by a gamma-basis of its row module; the input is kept as `original`.
class BlockCode {
public:
    explicit BlockCode(RingMatrix generator);

    const ChainRing& ring() const { return generator_.ring(); }
    std::size_t n() const { return generator_.cols(); }
    std::size_t k() const { return generator_.rows(); }
    const RingMatrix& generator() const { return generator_; }
    const RingMatrix& original() const { return original_; }
    bool converted() const { return converted_; }
    BlockParameters parameters() const { return parameters_of(generator_); }

private:
    RingMatrix original_;
    RingMatrix generator_;
    bool converted_ = false;
};

/// Rows are a gamma-generator sequence and gamma-linearly independent.
bool is_gamma_basis(const RingMatrix& rows);

std::size_t min_distance_block(const BlockCode& code, std::uint64_t budget = kDefaultBudget, unsigned threads = 1);
/// n - ceil(k / nu) + 1.
std::size_t singleton_bound_block(std::size_t n, std::size_t k, std::uint32_t nu);
bool is_mds(const BlockCode& code, std::uint64_t budget = kDefaultBudget);

/// Every (k_0..k_{nu-1}) with sum k_i (nu - i) = k and minimal sum k_i, in
/// decreasing lexicographic order.
std::vector<BlockParameters> nu_optimal_sets(std::size_t k, std::uint32_t nu);

}  // namespace chainmdp
