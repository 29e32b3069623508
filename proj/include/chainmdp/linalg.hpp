#pragma once

// Linear algebra over a chain ring: diagonal reduction, module shapes,
// gamma-generator sequences, gamma-independence, gamma-bases and the two
// standard forms of a block code generator.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainmdp/ring.hpp"

namespace chainmdp {

using RingVector = std::vector<Element>;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(ChainRing ring, std::size_t rows, std::size_t cols);

    static RingMatrix identity(ChainRing ring, std::size_t n);
    static RingMatrix from_ints(ChainRing ring, std::size_t rows, std::size_t cols, std::span<const std::int64_t> values);
    static RingMatrix from_ints(ChainRing ring, std::size_t rows, std::size_t cols,
                                std::initializer_list<std::int64_t> values) {
        return from_ints(ring, rows, cols, std::span<const std::int64_t>(values.begin(), values.size()));
    }
    /// `cols` is needed to type an empty row list.
    static RingMatrix from_rows(ChainRing ring, std::size_t cols, const std::vector<RingVector>& rows);

    const ChainRing& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    RingVector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
    std::vector<RingVector> row_list() const;

    bool is_zero() const;
    bool row_is_zero(std::size_t i) const;

    RingMatrix select_rows(std::span<const std::size_t> idx) const;
    RingMatrix select_cols(std::span<const std::size_t> idx) const;
    RingMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
    RingMatrix transpose() const;
    RingMatrix scaled(const Element& c) const;
    /// Entry-wise projection into the residue field.
    RingMatrix project() const;
    /// Entry-wise representative lift of a residue-field matrix into `target`.
    RingMatrix lift_into(const ChainRing& target) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] -= c * row[src]
    void row_axpy(std::size_t dst, Element c, std::size_t src);
    void col_axpy(std::size_t dst, Element c, std::size_t src);
    void scale_row(std::size_t i, Element c);

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
    friend bool operator==(const RingMatrix& a, const RingMatrix& b);

private:
    ChainRing ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

RingMatrix vstack(const std::vector<RingMatrix>& blocks);
RingMatrix hstack(const std::vector<RingMatrix>& blocks);
RingVector vec_times_matrix(std::span<const Element> v, const RingMatrix& m);
bool is_zero_vector(std::span<const Element> v);
std::string to_string(const RingMatrix& m);

// --- module structure ------------------------------------------------------

struct DiagonalReduction {
    std::vector<std::uint32_t> exponents;  // nondecreasing, each < nu
    RingMatrix left;                       // invertible, rows x rows
    RingMatrix right;                      // invertible, cols x cols
};

/// left * A * right = diag(gamma^e_1, ..., gamma^e_t, 0, ...).
DiagonalReduction diagonal_reduction(const RingMatrix& a);
/// The exponents alone (no transforms tracked).
std::vector<std::uint32_t> diagonal_exponents(const RingMatrix& a);

struct NuShape {
    std::vector<std::size_t> mu;  // mu_1 .. mu_nu
    friend bool operator==(const NuShape&, const NuShape&) = default;
};

struct BlockParameters {
    std::vector<std::size_t> k;  // k_0 .. k_{nu-1}
    friend bool operator==(const BlockParameters&, const BlockParameters&) = default;
    friend auto operator<=>(const BlockParameters&, const BlockParameters&) = default;
};

NuShape shape_of(const RingMatrix& a);
std::size_t gamma_dimension(const RingMatrix& a);
BlockParameters parameters_of(const RingMatrix& a);
NuShape shape_from_exponents(std::span<const std::uint32_t> exponents, std::uint32_t nu);
BlockParameters parameters_from_shape(const NuShape& shape);

// --- residue-field linear algebra ------------------------------------------

/// Row-reduced echelon form over a field; returns pivot columns.
std::vector<std::size_t> rref_in_place(RingMatrix& m);
std::size_t field_rank(const RingMatrix& m);
/// Basis of {c : c * m = 0} over a field, one vector per row.
RingMatrix field_left_kernel(const RingMatrix& m);
/// Some c with c * m = target, or nothing.
std::optional<RingVector> field_left_solve(const RingMatrix& m, std::span<const Element> target);

// --- gamma-linear structure --------------------------------------------------

enum class IndependenceMethod { Oracle, ShapeFast };
enum class SequenceMethod { Enumerate, RowModule };

/// Is w a T-combination of the rows of `rows`?  Enumerates the lifted kernel
/// coset of the projected system; BudgetExceeded above `budget` candidates.
bool in_gamma_span(const RingMatrix& rows, std::span<const Element> w, std::uint64_t budget = kDefaultBudget);
/// Membership in the R-row module, via diagonal reduction.
bool in_row_module(const RingMatrix& rows, std::span<const Element> w);

bool is_gamma_generator_sequence(const RingMatrix& rows, SequenceMethod method = SequenceMethod::RowModule,
                                 std::uint64_t budget = kDefaultBudget);
bool is_gamma_linearly_independent(const RingMatrix& rows, IndependenceMethod method = IndependenceMethod::Oracle,
                                   std::uint64_t budget = kDefaultBudget);

/// Rows form a gamma-basis of the row module of `a`, ordered by gamma layers.
RingMatrix gamma_basis(const RingMatrix& a);

struct StandardForm {
    RingMatrix matrix;                  // left-equivalent to a with permuted columns
    std::vector<std::size_t> perm;      // output column j is input column perm[j]
    std::vector<std::uint32_t> levels;  // level of each output row
    BlockParameters params;
};

StandardForm standard_form(const RingMatrix& a);
/// Layered gamma-encoder; `matrix` is in permuted coordinates.
StandardForm gamma_standard_form(const RingMatrix& a);

Element determinant(const RingMatrix& a);
/// Unit test through both the ring determinant and the residue-field
/// determinant; throws InternalInvariant if they disagree.
bool is_unit_determinant(const RingMatrix& a);
bool residue_determinant_nonzero(const RingMatrix& a);

}  // namespace chainmdp
