#pragma once

// Constructions of (reverse) MDP codes: lifting from the residue field,
// the binomial encoder over a prime field, and block extraction from
// superregular Toeplitz matrices.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "chainmdp/conv.hpp"

namespace chainmdp {

/// (A_0; gamma A_1; ...; gamma^{nu-1} A_{nu-1}) with A_i the first counts[i]
/// rows of the square matrix A, whose rows must be independent over R.
RingMatrix stack_gamma_layers(const RingMatrix& a, const std::vector<std::size_t>& counts);

/// Entry-wise lift of every coefficient, each block stacked over its gamma
/// multiples.  `field_encoder` lives over the residue field of `ring` and must
/// be reduced.
PolyMatrix lift_encoder(const PolyMatrix& field_encoder, const ChainRing& ring);
ConvCode lift_from_residue_field(const PolyMatrix& field_encoder, const ChainRing& ring);

struct BinomialConstruction {
    PolyMatrix encoder;               // over F_p
    std::string bound;                // floor of the field-size bound, decimal
    bool bound_satisfied = false;     // p exceeds the bound
    std::vector<std::string> warnings;
};

/// Entry (r, c) of G_i is C(mn + n - k, (i+1)n - k + r - c) mod p, with m = delta/k.
BinomialConstruction binomial_encoder(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t p);
/// floor(C(N, floor(N/2))^{k(L+1)} * (k(L+1))^{k(L+1)/2}) in decimal, N = mn + n - k.
std::string binomial_bound(std::size_t n, std::size_t k, std::size_t delta);

// --- superregular Toeplitz matrices ------------------------------------------------

struct ToeplitzSpec {
    ChainRing ring;
    std::vector<Element> first_row;  // a_1 .. a_l

    std::size_t size() const { return first_row.size(); }
    /// Upper triangular, entry (i, j) = a_{j-i+1} for j >= i.
    RingMatrix matrix() const;
    /// First row a_l, ..., a_1.
    ToeplitzSpec reversed() const;
    static ToeplitzSpec from_ints(const ChainRing& ring, std::initializer_list<std::int64_t> values);
};

/// i_m <= j_m for every m; index lists strictly increasing.
bool is_proper(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

/// Calls visit(I, J) for every proper pair of the l x l upper triangular
/// shape (0-based indices), ordered by size; stops when visit returns false.
void for_each_proper_pair(std::size_t l,
                          const std::function<bool(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>& visit);

bool is_gamma_superregular(const ToeplitzSpec& t);
bool is_reverse_gamma_superregular(const ToeplitzSpec& t);

struct MinorRecord {
    std::vector<std::size_t> rows;  // 1-based
    std::vector<std::size_t> cols;
    std::uint32_t valuation = 0;    // nu for a zero determinant
};

/// Every proper minor with the valuation of its determinant.
std::vector<MinorRecord> superregular_certificate(const ToeplitzSpec& t);

enum class RowConvention { Example, Formula };

struct ExtractedBlocks {
    PolyMatrix blocks;            // k x n coefficients G_0 .. G_L
    RingMatrix submatrix;         // the selected (L+1)k x (L+1)n block Toeplitz matrix
    std::vector<std::size_t> rows;  // 1-based rows of A
    std::vector<std::size_t> cols;  // 1-based columns of A
    bool minors_unit = false;     // every admissible full-size minor is a unit
};

/// Needs l = (L+1)(n+k-1) and a gamma-superregular A (NotSuperregular).
ExtractedBlocks extract_mdp_blocks(const ToeplitzSpec& a, std::size_t n, std::size_t k, std::size_t L,
                                   RowConvention rows = RowConvention::Example);

struct SuperregularSearch {
    bool exhaustive = true;
    std::uint64_t seed = 0;                 // random strategy only
    std::uint64_t budget = kDefaultBudget;  // candidates
    bool reverse = false;                   // require reverse superregularity
    std::size_t max_results = SIZE_MAX;
};

/// Candidates have a_1 = 1 and the other entries in T.
std::vector<ToeplitzSpec> search_superregular(std::size_t l, const ChainRing& ring, const SuperregularSearch& options);

}  // namespace chainmdp
