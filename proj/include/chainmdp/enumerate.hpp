#pragma once

// Exhaustive walks over T-combinations of matrix rows.

#include <cstddef>
#include <cstdint>

#include "chainmdp/linalg.hpp"

namespace chainmdp {

/// Minimum Hamming weight of u * rows over all u in T^m (m = rows.rows())
/// whose first `lead` coordinates are not all zero.  The walk visits q^m
/// messages; BudgetExceeded if that exceeds `budget`.  Work is split over
/// `threads` workers by the value of the last coordinate.
std::size_t min_span_weight(const RingMatrix& rows, std::size_t lead, std::uint64_t budget = kDefaultBudget,
                            unsigned threads = 1);

}  // namespace chainmdp
