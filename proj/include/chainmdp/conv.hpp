#pragma once

// Convolutional codes over R[z]: polynomial gamma-encoders, sliding matrices,
// column distances, the distance bounds and the MDP characterizations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainmdp/linalg.hpp"

namespace chainmdp {

/// G(z) = sum_i G_i z^i with k x n coefficients; trailing zero coefficients are
/// trimmed, so the zero matrix has degree -1.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(ChainRing ring, std::size_t rows, std::size_t cols, std::vector<RingMatrix> coeffs = {});
    /// Shape and ring taken from the first coefficient.
    explicit PolyMatrix(std::vector<RingMatrix> coeffs);

    const ChainRing& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<RingMatrix>& coeffs() const { return coeffs_; }
    /// G_i, or the zero matrix beyond the degree.
    RingMatrix coeff(std::size_t i) const;

    /// Coefficients of entry (i, j), lowest degree first.
    std::vector<Element> entry(std::size_t i, std::size_t j) const;
    /// -1 for a zero row.
    int row_degree(std::size_t i) const;
    std::vector<int> row_degrees() const;

    PolyMatrix select_rows(std::span<const std::size_t> idx) const;
    PolyMatrix scaled(const Element& c) const;
    PolyMatrix project() const;
    PolyMatrix lift_into(const ChainRing& target) const;
    /// Rows [top; bottom].
    friend PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    void trim();

    ChainRing ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RingMatrix> coeffs_;
};

std::string to_string(const PolyMatrix& g);

// --- encoder predicates --------------------------------------------------------

RingMatrix leading_coefficient_matrix(const PolyMatrix& g);
bool is_reduced(const PolyMatrix& g);
bool is_delay_free(const PolyMatrix& g);
/// Sum of row degrees of a reduced encoder; NotReduced otherwise.
std::size_t gamma_degree(const PolyMatrix& g);
/// Rows linearly independent over R[z]; decided on the projection, which must
/// have full row rank over F_q(z).
bool is_free_generator(const PolyMatrix& g);

/// Block upper-triangular Toeplitz matrix G_j^c.  NotGammaBasis when its rows
/// are not a gamma-generator sequence (then g is not a gamma-encoder).
RingMatrix sliding_matrix(const PolyMatrix& g, std::size_t j);
/// The same matrix for the coefficient-reversed order G_mu, ..., G_0.
RingMatrix reversed_sliding_matrix(const PolyMatrix& g, std::size_t j);

/// Rows of g form a gamma-basis of the R[z]-module they generate.  Membership
/// questions are decided with polynomial multipliers of degree <= `shift`.
bool is_polynomial_gamma_basis(const PolyMatrix& g, std::optional<std::size_t> shift = std::nullopt,
                               std::uint64_t budget = kDefaultBudget);

// --- codes -------------------------------------------------------------------------

class ConvCode {
public:
    /// Validates that the rows form a gamma-basis; NotGammaBasis otherwise.
    explicit ConvCode(PolyMatrix encoder, std::uint64_t budget = kDefaultBudget);

    const ChainRing& ring() const { return encoder_.ring(); }
    const PolyMatrix& encoder() const { return encoder_; }
    std::size_t n() const { return encoder_.cols(); }
    std::size_t k() const { return encoder_.rows(); }
    bool reduced() const { return reduced_; }
    bool delay_free() const { return delay_free_; }
    /// gamma-degree; NotReduced when the encoder is not reduced.
    std::size_t delta() const;
    BlockParameters constant_parameters() const { return parameters_of(encoder_.coeff(0)); }

private:
    PolyMatrix encoder_;
    bool reduced_ = false;
    bool delay_free_ = false;
};

struct DistanceProfile {
    std::vector<std::size_t> values;  // d_0^c .. d_J^c
};

std::size_t column_distance(const ConvCode& code, std::size_t j, std::uint64_t budget = kDefaultBudget,
                            unsigned threads = 1);
DistanceProfile column_distances(const ConvCode& code, std::size_t max_j, std::uint64_t budget = kDefaultBudget,
                                 unsigned threads = 1);

/// Smallest weight among nonzero codewords u(z)G(z) with deg u <= max_message_degree.
/// Every such weight bounds the free distance from above.
std::size_t free_distance_upper_bound(const ConvCode& code, std::size_t max_message_degree,
                                      std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

// --- bounds -----------------------------------------------------------------------

std::size_t generalized_singleton_bound(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t nu);
/// Column distance bound from the parameters of the block code generated by G_0.
long long column_distance_bound(std::size_t j, std::size_t n, const BlockParameters& params, std::size_t k);
/// Bound for the best parameter choice k_0 = floor(k/nu), k_{nu-N} = 1.
long long optimal_cd_bound(std::size_t j, std::size_t n, std::size_t k, std::uint32_t nu);
/// The parameter tuple behind optimal_cd_bound.
BlockParameters optimal_parameters(std::size_t k, std::uint32_t nu);
/// Closed form, valid when nu divides k; NuNotDividingK otherwise.
std::size_t L_index(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t nu);
/// Largest j whose optimal column distance bound stays within the generalized
/// Singleton bound, found by scanning.
std::size_t L_by_search(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t nu);

struct DistanceBounds {
    std::size_t L = 0;
    std::size_t N = 0;
    bool L_closed_form = false;  // nu | k
    std::vector<long long> per_j;  // optimal_cd_bound(j), j = 0..max_j
    std::size_t generalized_singleton = 0;
};

DistanceBounds distance_bounds(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t nu,
                               std::optional<std::size_t> max_j = std::nullopt);

/// L over Z_{p^r} (nu = r) against L of the field code with the same (n, k, delta).
struct EmbeddingComparison {
    std::size_t L_ring = 0;
    std::size_t L_field = 0;
    bool equal = false;
    bool delta_below_n_minus_k = false;
};
EmbeddingComparison compare_embedding_L(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t r);

// --- MDP ------------------------------------------------------------------------------

enum class MdpMethod { Distances, Minors };

/// Throws PreconditionViolated naming the first hypothesis of the MDP
/// characterization that fails.
void check_mdp_hypotheses(const ConvCode& code);

struct MinorsWitness {
    std::vector<std::size_t> columns;  // 0-based, a dependent admissible selection
};

/// Statement (b) of the characterization on the sliding matrix: every
/// admissible column selection has gamma-linearly independent rows.
/// `block` is k/nu.  Returns a dependent selection when one exists.
std::optional<MinorsWitness> find_dependent_selection(const RingMatrix& sliding, std::size_t n, std::size_t block,
                                                      std::size_t j);

struct MdpReport {
    bool holds = false;
    std::size_t L = 0;
    std::vector<std::size_t> distances;  // Distances method
    std::vector<long long> targets;      // (n - k/nu)(j+1) + 1
    std::optional<MinorsWitness> witness;  // Minors method
};

MdpReport analyze_mdp(const ConvCode& code, MdpMethod method, std::uint64_t budget = kDefaultBudget,
                      unsigned threads = 1);
bool is_mdp(const ConvCode& code, MdpMethod method, std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

/// G_mu + ... + G_0 z^mu; needs a reduced encoder with equal row degrees.
PolyMatrix reverse_encoder(const ConvCode& code);
bool is_reverse_mdp(const ConvCode& code, MdpMethod method = MdpMethod::Minors, std::uint64_t budget = kDefaultBudget,
                    unsigned threads = 1);

}  // namespace chainmdp
