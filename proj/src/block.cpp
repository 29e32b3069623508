#include "chainmdp/block.hpp"

#include <sstream>

#include "chainmdp/enumerate.hpp"

namespace chainmdp {

bool is_gamma_basis(const RingMatrix& rows) {
    if (rows.rows() == 0) return true;
    return is_gamma_generator_sequence(rows, SequenceMethod::RowModule) &&
           is_gamma_linearly_independent(rows, IndependenceMethod::ShapeFast);
}

BlockCode::BlockCode(RingMatrix generator) : original_(std::move(generator)) {
    if (is_gamma_basis(original_)) {
        generator_ = original_;
    } else {
        generator_ = gamma_basis(original_);
        converted_ = true;
    }
}

std::size_t min_distance_block(const BlockCode& code, std::uint64_t budget, unsigned threads) {
    require(code.k() > 0, ErrorCode::InvalidParams, "the zero code has no minimum distance");
    return min_span_weight(code.generator(), code.k(), budget, threads);
}

std::size_t singleton_bound_block(std::size_t n, std::size_t k, std::uint32_t nu) {
    require(nu >= 1, ErrorCode::InvalidParams, "nilpotency index must be positive");
    const std::size_t ceil_k = (k + nu - 1) / nu;
    if (k == 0 || n < ceil_k) {
        std::ostringstream os;
        os << "block Singleton bound needs k >= 1 and n >= ceil(k/nu); got n=" << n << " k=" << k << " nu=" << nu;
        fail(ErrorCode::InvalidParams, os.str());
    }
    return n - ceil_k + 1;
}

bool is_mds(const BlockCode& code, std::uint64_t budget) {
    return min_distance_block(code, budget) == singleton_bound_block(code.n(), code.k(), code.ring().nu());
}

namespace {

// Fills k_i for i >= slot; `left` is what remains of the weighted sum.
void collect(std::vector<std::size_t>& tuple, std::size_t slot, std::size_t left, std::size_t count_left,
             std::uint32_t nu, std::vector<BlockParameters>& out) {
    if (slot == nu) {
        if (left == 0 && count_left == 0) out.push_back({tuple});
        return;
    }
    const std::size_t weight = nu - slot;
    for (std::size_t c = std::min(left / weight, count_left) + 1; c-- > 0;) {
        tuple[slot] = c;
        collect(tuple, slot + 1, left - c * weight, count_left - c, nu, out);
    }
    tuple[slot] = 0;
}

}  // namespace

std::vector<BlockParameters> nu_optimal_sets(std::size_t k, std::uint32_t nu) {
    require(nu >= 1, ErrorCode::InvalidParams, "nilpotency index must be positive");
    // The minimum count is searched for, not assumed, so callers can compare
    // it against ceil(k / nu).
    std::vector<BlockParameters> out;
    std::vector<std::size_t> tuple(nu, 0);
    for (std::size_t count = 0; count <= k && out.empty(); ++count) collect(tuple, 0, k, count, nu, out);
    return out;
}

}  // namespace chainmdp
