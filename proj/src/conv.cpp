#include "chainmdp/conv.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chainmdp/enumerate.hpp"

namespace chainmdp {

// --- PolyMatrix ---------------------------------------------------------------

PolyMatrix::PolyMatrix(ChainRing ring, std::size_t rows, std::size_t cols, std::vector<RingMatrix> coeffs)
    : ring_(ring), rows_(rows), cols_(cols), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        require(c.rows() == rows_ && c.cols() == cols_, ErrorCode::DimensionMismatch,
                "polynomial coefficients must share one shape");
        require(c.ring() == ring_, ErrorCode::MixedRings, "polynomial coefficients from different rings");
    }
    trim();
}

PolyMatrix::PolyMatrix(std::vector<RingMatrix> coeffs) {
    require(!coeffs.empty(), ErrorCode::DimensionMismatch, "need at least one coefficient to fix the shape");
    *this = PolyMatrix(coeffs[0].ring(), coeffs[0].rows(), coeffs[0].cols(), std::move(coeffs));
}

void PolyMatrix::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingMatrix PolyMatrix::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : RingMatrix(ring_, rows_, cols_);
}

std::vector<Element> PolyMatrix::entry(std::size_t i, std::size_t j) const {
    std::vector<Element> out;
    for (const auto& c : coeffs_) out.push_back(c(i, j));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

int PolyMatrix::row_degree(std::size_t i) const {
    for (int d = degree(); d >= 0; --d)
        if (!coeffs_[static_cast<std::size_t>(d)].row_is_zero(i)) return d;
    return -1;
}

std::vector<int> PolyMatrix::row_degrees() const {
    std::vector<int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = row_degree(i);
    return out;
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> idx) const {
    std::vector<RingMatrix> cs;
    for (const auto& c : coeffs_) cs.push_back(c.select_rows(idx));
    return PolyMatrix(ring_, idx.size(), cols_, std::move(cs));
}

PolyMatrix PolyMatrix::scaled(const Element& c) const {
    std::vector<RingMatrix> cs;
    for (const auto& m : coeffs_) cs.push_back(m.scaled(c));
    return PolyMatrix(ring_, rows_, cols_, std::move(cs));
}

PolyMatrix PolyMatrix::project() const {
    std::vector<RingMatrix> cs;
    for (const auto& m : coeffs_) cs.push_back(m.project());
    return PolyMatrix(ring_.residue_field(), rows_, cols_, std::move(cs));
}

PolyMatrix PolyMatrix::lift_into(const ChainRing& target) const {
    std::vector<RingMatrix> cs;
    for (const auto& m : coeffs_) cs.push_back(m.lift_into(target));
    return PolyMatrix(target, rows_, cols_, std::move(cs));
}

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
    require(top.cols_ == bottom.cols_, ErrorCode::DimensionMismatch, "vstack column mismatch");
    require(top.ring_ == bottom.ring_, ErrorCode::MixedRings, "vstack across rings");
    const std::size_t len = std::max(top.coeffs_.size(), bottom.coeffs_.size());
    std::vector<RingMatrix> cs;
    for (std::size_t i = 0; i < len; ++i) cs.push_back(chainmdp::vstack({top.coeff(i), bottom.coeff(i)}));
    return PolyMatrix(top.ring_, top.rows_ + bottom.rows_, top.cols_, std::move(cs));
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
}

std::string to_string(const PolyMatrix& g) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < g.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (j) os << ", ";
            const auto e = g.entry(i, j);
            if (e.empty()) {
                os << '0';
                continue;
            }
            bool first = true;
            for (std::size_t d = 0; d < e.size(); ++d) {
                if (e[d].is_zero()) continue;
                if (!first) os << " + ";
                first = false;
                const bool unit_coeff = e[d].is_one() && d > 0;
                if (!unit_coeff) os << to_string(e[d]);
                if (d > 0) os << (unit_coeff ? "" : "*") << 'z';
                if (d > 1) os << '^' << d;
            }
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

// --- encoder predicates --------------------------------------------------------

namespace {

// gamma-independence, through the shape when the rows are a generator
// sequence and through the kernel oracle otherwise.
bool rows_independent(const RingMatrix& a, std::uint64_t budget = kDefaultBudget) {
    if (a.rows() == 0) return true;
    if (is_gamma_generator_sequence(a, SequenceMethod::RowModule))
        return is_gamma_linearly_independent(a, IndependenceMethod::ShapeFast);
    return is_gamma_linearly_independent(a, IndependenceMethod::Oracle, budget);
}

// Coefficient vector of z^shift * row i of g, padded to `blocks` blocks.
RingVector shifted_row(const PolyMatrix& g, std::size_t i, std::size_t shift, std::size_t blocks) {
    const std::size_t n = g.cols();
    RingVector v(blocks * n, g.ring().zero());
    for (std::size_t d = 0; d < g.coeffs().size(); ++d)
        for (std::size_t j = 0; j < n; ++j) v[(d + shift) * n + j] = g.coeffs()[d](i, j);
    return v;
}

// Polynomials over a field, lowest degree first, no trailing zeros.
using FieldPoly = std::vector<Element>;

void poly_trim(FieldPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

FieldPoly poly_mul(const FieldPoly& a, const FieldPoly& b, const ChainRing& F) {
    if (a.empty() || b.empty()) return {};
    FieldPoly out(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

FieldPoly poly_sub(const FieldPoly& a, const FieldPoly& b, const ChainRing& F) {
    FieldPoly out(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    poly_trim(out);
    return out;
}

}  // namespace

RingMatrix leading_coefficient_matrix(const PolyMatrix& g) {
    RingMatrix out(g.ring(), g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const int d = g.row_degree(i);
        if (d < 0) fail(ErrorCode::ZeroRow, "row " + std::to_string(i) + " is zero and has no leading coefficient");
        const RingMatrix& c = g.coeffs()[static_cast<std::size_t>(d)];
        for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = c(i, j);
    }
    return out;
}

bool is_reduced(const PolyMatrix& g) { return rows_independent(leading_coefficient_matrix(g)); }

bool is_delay_free(const PolyMatrix& g) { return rows_independent(g.coeff(0)); }

std::size_t gamma_degree(const PolyMatrix& g) {
    require(is_reduced(g), ErrorCode::NotReduced, "row degrees are code invariants only for a reduced encoder");
    std::size_t sum = 0;
    for (int d : g.row_degrees()) sum += static_cast<std::size_t>(d);
    return sum;
}

bool is_free_generator(const PolyMatrix& g) {
    const PolyMatrix pg = g.project();
    const ChainRing& F = pg.ring();
    std::vector<std::vector<FieldPoly>> m(g.rows(), std::vector<FieldPoly>(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) m[i][j] = pg.entry(i, j);
    // Fraction-free elimination; the rank over F_q(z) is the pivot count.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < g.cols() && rank < g.rows(); ++c) {
        std::size_t p = rank;
        while (p < g.rows() && m[p][c].empty()) ++p;
        if (p == g.rows()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < g.rows(); ++i) {
            if (m[i][c].empty()) continue;
            const FieldPoly a = m[rank][c], b = m[i][c];
            for (std::size_t j = c; j < g.cols(); ++j)
                m[i][j] = poly_sub(poly_mul(a, m[i][j], F), poly_mul(b, m[rank][j], F), F);
        }
        ++rank;
    }
    return rank == g.rows();
}

namespace {

RingMatrix build_sliding(const PolyMatrix& g, std::size_t j, bool reversed) {
    const std::size_t k = g.rows(), n = g.cols();
    const int mu = g.degree();
    RingMatrix s(g.ring(), (j + 1) * k, (j + 1) * n);
    for (std::size_t a = 0; a <= j; ++a)
        for (std::size_t b = a; b <= j; ++b) {
            const long long idx = reversed ? static_cast<long long>(mu) - static_cast<long long>(b - a)
                                           : static_cast<long long>(b - a);
            if (idx < 0 || idx > mu) continue;
            const RingMatrix& c = g.coeffs()[static_cast<std::size_t>(idx)];
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t col = 0; col < n; ++col) s(a * k + r, b * n + col) = c(r, col);
        }
    return s;
}

RingMatrix checked(RingMatrix s) {
    require(is_gamma_generator_sequence(s, SequenceMethod::RowModule), ErrorCode::NotGammaBasis,
            "sliding matrix rows are not a gamma-generator sequence, so the rows of G(z) are not a gamma-encoder");
    return s;
}

}  // namespace

RingMatrix sliding_matrix(const PolyMatrix& g, std::size_t j) { return checked(build_sliding(g, j, false)); }

RingMatrix reversed_sliding_matrix(const PolyMatrix& g, std::size_t j) { return checked(build_sliding(g, j, true)); }

bool is_polynomial_gamma_basis(const PolyMatrix& g, std::optional<std::size_t> shift, std::uint64_t budget) {
    const std::size_t k = g.rows();
    if (k == 0) return true;
    if (g.degree() < 0) return false;
    const std::size_t m = static_cast<std::size_t>(g.degree());
    const std::size_t J = shift.value_or(2 * m + 1);
    const std::size_t blocks = m + J + 1;
    const ChainRing& R = g.ring();
    const Element gamma = R.gamma();

    // gamma * v_i must lie in the R[z]-span of the later rows; the T[z]-span of
    // a generator sequence is already an R[z]-module, so bottom-up suffices.
    for (std::size_t i = k; i-- > 0;) {
        RingVector gv = shifted_row(g, i, 0, blocks);
        for (auto& e : gv) e = e * gamma;
        std::vector<RingVector> later;
        for (std::size_t l = i + 1; l < k; ++l)
            for (std::size_t s = 0; s <= J; ++s) later.push_back(shifted_row(g, l, s, blocks));
        if (!in_row_module(RingMatrix::from_rows(R, blocks * g.cols(), later), gv)) return false;
    }

    // A relation sum a_l(z) v_l(z) = 0 with T[z] coefficients would give one
    // among the lowest coefficients of G_0 and among the top ones of G_inf.
    if (rows_independent(g.coeff(0), budget)) return true;
    const auto degrees = g.row_degrees();
    if (std::none_of(degrees.begin(), degrees.end(), [](int d) { return d < 0; }) &&
        rows_independent(leading_coefficient_matrix(g), budget))
        return true;
    std::vector<RingVector> all;
    for (std::size_t s = 0; s <= J; ++s)
        for (std::size_t l = 0; l < k; ++l) all.push_back(shifted_row(g, l, s, blocks));
    return is_gamma_linearly_independent(RingMatrix::from_rows(R, blocks * g.cols(), all), IndependenceMethod::Oracle,
                                         budget);
}

// --- codes ---------------------------------------------------------------------------

ConvCode::ConvCode(PolyMatrix encoder, std::uint64_t budget) : encoder_(std::move(encoder)) {
    require(is_polynomial_gamma_basis(encoder_, std::nullopt, budget), ErrorCode::NotGammaBasis,
            "encoder rows do not form a gamma-basis");
    const auto degrees = encoder_.row_degrees();
    reduced_ = std::none_of(degrees.begin(), degrees.end(), [](int d) { return d < 0; }) &&
               rows_independent(leading_coefficient_matrix(encoder_), budget);
    delay_free_ = rows_independent(encoder_.coeff(0), budget);
}

std::size_t ConvCode::delta() const {
    require(reduced_, ErrorCode::NotReduced, "the gamma-degree needs a reduced encoder");
    std::size_t sum = 0;
    for (int d : encoder_.row_degrees()) sum += static_cast<std::size_t>(d);
    return sum;
}

std::size_t column_distance(const ConvCode& code, std::size_t j, std::uint64_t budget, unsigned threads) {
    require(code.delay_free(), ErrorCode::NotDelayFree, "column distances through G_j^c need a delay-free encoder");
    return min_span_weight(sliding_matrix(code.encoder(), j), code.k(), budget, threads);
}

DistanceProfile column_distances(const ConvCode& code, std::size_t max_j, std::uint64_t budget, unsigned threads) {
    DistanceProfile out;
    for (std::size_t j = 0; j <= max_j; ++j) out.values.push_back(column_distance(code, j, budget, threads));
    return out;
}

std::size_t free_distance_upper_bound(const ConvCode& code, std::size_t max_message_degree, std::uint64_t budget,
                                      unsigned threads) {
    const PolyMatrix& g = code.encoder();
    require(code.k() > 0 && g.degree() >= 0, ErrorCode::InvalidParams, "empty encoder");
    const std::size_t blocks = static_cast<std::size_t>(g.degree()) + max_message_degree + 1;
    std::vector<RingVector> rows;
    for (std::size_t s = 0; s <= max_message_degree; ++s)
        for (std::size_t l = 0; l < code.k(); ++l) rows.push_back(shifted_row(g, l, s, blocks));
    const RingMatrix stack = RingMatrix::from_rows(code.ring(), blocks * code.n(), rows);
    return min_span_weight(stack, stack.rows(), budget, threads);
}

// --- bounds ----------------------------------------------------------------------------

namespace {

long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

std::size_t generalized_singleton_bound(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t nu) {
    require(k >= 1 && nu >= 1, ErrorCode::InvalidParams, "Singleton bound needs k >= 1 and nu >= 1");
    const long long a = static_cast<long long>(delta / k);
    const long long N = static_cast<long long>(n), K = static_cast<long long>(k), D = static_cast<long long>(delta);
    const long long value = N * (a + 1) - ceil_div(K * (a + 1) - D, nu) + 1;
    require(value >= 0, ErrorCode::InvalidParams, "length too small for these parameters");
    return static_cast<std::size_t>(value);
}

long long column_distance_bound(std::size_t j, std::size_t n, const BlockParameters& params, std::size_t k) {
    const std::size_t nu = params.k.size();
    require(nu >= 1, ErrorCode::InvalidParams, "empty parameter tuple");
    std::size_t weighted = 0;
    for (std::size_t i = 0; i < nu; ++i) weighted += params.k[i] * (nu - i);
    require(weighted == k, ErrorCode::InvalidParams, "parameters do not sum to the gamma-dimension");
    auto kk = [&](std::size_t i) { return i < nu ? static_cast<long long>(params.k[i]) : 0LL; };
    const long long J = static_cast<long long>(j), N = static_cast<long long>(n);
    if (j <= nu) {
        long long head = 0;
        for (std::size_t i = 0; i <= nu - j; ++i) head += kk(i);
        long long tail = 0;
        for (std::size_t s = 2; s <= j; ++s) tail += static_cast<long long>(s) * kk(nu - (s - 1));
        return (J + 1) * (N - head) - tail + 1;
    }
    long long all = 0;
    for (std::size_t i = 0; i < nu; ++i) all += kk(i);
    return (J + 1) * N - all - static_cast<long long>(k) - (J - static_cast<long long>(nu)) * kk(0) + 1;
}

BlockParameters optimal_parameters(std::size_t k, std::uint32_t nu) {
    require(nu >= 1, ErrorCode::InvalidParams, "nilpotency index must be positive");
    BlockParameters p{std::vector<std::size_t>(nu, 0)};
    p.k[0] = k / nu;
    const std::size_t N = k - (k / nu) * nu;
    if (N > 0) p.k[nu - N] = 1;
    return p;
}

long long optimal_cd_bound(std::size_t j, std::size_t n, std::size_t k, std::uint32_t nu) {
    require(nu >= 1, ErrorCode::InvalidParams, "nilpotency index must be positive");
    const long long c = static_cast<long long>((k + nu - 1) / nu), f = static_cast<long long>(k / nu);
    const long long N = static_cast<long long>(k) - f * nu;
    const long long J = static_cast<long long>(j), slope = static_cast<long long>(n) - c;
    if (J <= N) return slope * (J + 1) + 1;
    return slope * (J + 1) - (c - f) * (N + 1) + 1;
}

std::size_t L_index(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t nu) {
    require(k >= 1 && nu >= 1, ErrorCode::InvalidParams, "L needs k >= 1");
    if (k % nu != 0)
        fail(ErrorCode::NuNotDividingK, "closed form for L needs nu | k (nu=" + std::to_string(nu) +
                                            ", k=" + std::to_string(k) + ")");
    require(n > k / nu, ErrorCode::InvalidParams, "L needs n > k/nu");
    return delta / k + (delta / nu) / (n - k / nu);
}

std::size_t L_by_search(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t nu) {
    require(k >= 1 && nu >= 1, ErrorCode::InvalidParams, "L needs k >= 1");
    const std::size_t c = (k + nu - 1) / nu;
    require(n > c, ErrorCode::InvalidParams, "L needs n > ceil(k/nu)");
    const long long S = static_cast<long long>(generalized_singleton_bound(n, k, delta, nu));
    const std::size_t N = k - (k / nu) * nu;
    const std::size_t limit = static_cast<std::size_t>(S) + N + 2;
    std::size_t L = 0;
    for (std::size_t j = 0; j <= limit; ++j)
        if (optimal_cd_bound(j, n, k, nu) <= S) L = j;
    return L;
}

DistanceBounds distance_bounds(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t nu,
                               std::optional<std::size_t> max_j) {
    DistanceBounds b;
    b.N = k - (k / nu) * nu;
    b.L_closed_form = k % nu == 0;
    b.L = b.L_closed_form ? L_index(n, k, delta, nu) : L_by_search(n, k, delta, nu);
    b.generalized_singleton = generalized_singleton_bound(n, k, delta, nu);
    for (std::size_t j = 0; j <= max_j.value_or(b.L); ++j) b.per_j.push_back(optimal_cd_bound(j, n, k, nu));
    return b;
}

EmbeddingComparison compare_embedding_L(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t r) {
    require(n > k, ErrorCode::InvalidParams, "field L needs n > k");
    EmbeddingComparison c;
    c.L_ring = L_index(n, k, delta, r);
    c.L_field = delta / k + delta / (n - k);
    c.equal = c.L_ring == c.L_field;
    c.delta_below_n_minus_k = delta < n - k;
    return c;
}

// --- MDP -------------------------------------------------------------------------------

void check_mdp_hypotheses(const ConvCode& code) {
    const std::uint32_t nu = code.ring().nu();
    if (!code.delay_free()) fail(ErrorCode::PreconditionViolated, "code is not delay-free (G_0 rows are gamma-dependent)");
    if (code.k() % nu != 0)
        fail(ErrorCode::PreconditionViolated, "nu does not divide k (nu=" + std::to_string(nu) +
                                                  ", k=" + std::to_string(code.k()) + ")");
    BlockParameters want{std::vector<std::size_t>(nu, 0)};
    want.k[0] = code.k() / nu;
    const BlockParameters got = code.constant_parameters();
    if (got != want) {
        std::ostringstream os;
        os << "parameters of the block code generated by G_0 are (";
        for (std::size_t i = 0; i < got.k.size(); ++i) os << (i ? "," : "") << got.k[i];
        os << "), not (k/nu, 0, ..., 0)";
        fail(ErrorCode::PreconditionViolated, os.str());
    }
    if (!code.reduced()) fail(ErrorCode::PreconditionViolated, "encoder is not reduced, so the gamma-degree is unknown");
}

namespace {

struct SelectionSearch {
    const RingMatrix& proj;  // residue-field image of the sliding matrix
    const ChainRing& F;
    std::size_t n, block, M, total;
    std::vector<std::size_t> chosen;
    std::vector<std::pair<std::size_t, RingVector>> basis;  // (pivot row, column reduced to pivot 1)

    std::size_t lower(std::size_t pos) const { return (pos / block) * n; }

    // Greedy completion of positions pos.. after index `last`.
    std::optional<std::vector<std::size_t>> complete(std::size_t pos, std::size_t last) const {
        std::vector<std::size_t> tail;
        std::size_t t = last;
        for (std::size_t i = pos; i < M; ++i) {
            t = std::max(t + 1, lower(i));
            if (t >= total) return std::nullopt;
            tail.push_back(t);
        }
        return tail;
    }

    RingVector column(std::size_t c) const {
        RingVector v(proj.rows());
        for (std::size_t i = 0; i < proj.rows(); ++i) v[i] = proj(i, c);
        return v;
    }

    // Reduces v against the basis; true if something nonzero remains.
    bool reduce(RingVector& v) const {
        for (const auto& [p, b] : basis) {
            if (v[p].is_zero()) continue;
            const Element c = v[p];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
        }
        return !is_zero_vector(v);
    }

    std::optional<std::vector<std::size_t>> dfs() {
        const std::size_t pos = chosen.size();
        if (pos == M) return std::nullopt;
        const std::size_t start = std::max(pos == 0 ? 0 : chosen.back() + 1, lower(pos));
        for (std::size_t c = start; c < total; ++c) {
            const auto tail = complete(pos + 1, c);
            if (!tail) break;
            RingVector v = column(c);
            if (!reduce(v)) {
                std::vector<std::size_t> w = chosen;
                w.push_back(c);
                w.insert(w.end(), tail->begin(), tail->end());
                return w;
            }
            std::size_t p = 0;
            while (v[p].is_zero()) ++p;
            const Element inv = F.inverse(v[p]);
            for (auto& e : v) e = e * inv;
            basis.emplace_back(p, std::move(v));
            chosen.push_back(c);
            auto found = dfs();
            chosen.pop_back();
            basis.pop_back();
            if (found) return found;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<MinorsWitness> find_dependent_selection(const RingMatrix& sliding, std::size_t n, std::size_t block,
                                                      std::size_t j) {
    require(block >= 1 && block <= n, ErrorCode::InvalidParams, "selection block must lie in 1..n");
    require(sliding.cols() == (j + 1) * n, ErrorCode::DimensionMismatch, "sliding matrix width");
    // Column selections of a gamma-generator sequence stay generator sequences,
    // so gamma-independence of the rows is full column rank of the projection.
    const RingMatrix proj = sliding.project();
    SelectionSearch search{proj, proj.ring(), n, block, (j + 1) * block, sliding.cols(), {}, {}};
    auto w = search.dfs();
    if (!w) return std::nullopt;
    return MinorsWitness{*w};
}

MdpReport analyze_mdp(const ConvCode& code, MdpMethod method, std::uint64_t budget, unsigned threads) {
    check_mdp_hypotheses(code);
    const std::uint32_t nu = code.ring().nu();
    const std::size_t block = code.k() / nu;
    MdpReport rep;
    rep.L = L_index(code.n(), code.k(), code.delta(), nu);
    for (std::size_t j = 0; j <= rep.L; ++j)
        rep.targets.push_back(static_cast<long long>((code.n() - block) * (j + 1) + 1));
    if (method == MdpMethod::Distances) {
        rep.holds = true;
        for (std::size_t j = 0; j <= rep.L; ++j) {
            rep.distances.push_back(column_distance(code, j, budget, threads));
            if (static_cast<long long>(rep.distances.back()) != rep.targets[j]) rep.holds = false;
        }
    } else {
        rep.witness = find_dependent_selection(sliding_matrix(code.encoder(), rep.L), code.n(), block, rep.L);
        rep.holds = !rep.witness;
    }
    return rep;
}

bool is_mdp(const ConvCode& code, MdpMethod method, std::uint64_t budget, unsigned threads) {
    return analyze_mdp(code, method, budget, threads).holds;
}

PolyMatrix reverse_encoder(const ConvCode& code) {
    require(code.reduced(), ErrorCode::NotReduced, "the reverse code is defined through a reduced encoder");
    const auto degrees = code.encoder().row_degrees();
    const std::size_t delta = code.delta();
    if (delta % code.k() != 0 || std::any_of(degrees.begin(), degrees.end(), [&](int d) {
            return static_cast<std::size_t>(d) != delta / code.k();
        }))
        fail(ErrorCode::UnequalRowDegrees, "reversal needs k | delta and every row degree equal to delta/k");
    std::vector<RingMatrix> cs = code.encoder().coeffs();
    std::reverse(cs.begin(), cs.end());
    return PolyMatrix(code.ring(), code.k(), code.n(), std::move(cs));
}

bool is_reverse_mdp(const ConvCode& code, MdpMethod method, std::uint64_t budget, unsigned threads) {
    const MdpReport forward = analyze_mdp(code, method, budget, threads);
    const PolyMatrix rev = reverse_encoder(code);
    if (!forward.holds) return false;
    if (method == MdpMethod::Distances) return is_mdp(ConvCode(rev, budget), MdpMethod::Distances, budget, threads);
    const std::size_t block = code.k() / code.ring().nu();
    return !find_dependent_selection(reversed_sliding_matrix(code.encoder(), forward.L), code.n(), block, forward.L);
}

}  // namespace chainmdp
