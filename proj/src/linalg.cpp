#include "chainmdp/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chainmdp {

// --- RingMatrix ------------------------------------------------------------------

RingMatrix::RingMatrix(ChainRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

RingMatrix RingMatrix::identity(ChainRing ring, std::size_t n) {
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

RingMatrix RingMatrix::from_ints(ChainRing ring, std::size_t rows, std::size_t cols,
                                 std::span<const std::int64_t> values) {
    require(values.size() == rows * cols, ErrorCode::DimensionMismatch, "entry count does not match shape");
    RingMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = ring.from_int(values[i]);
    return m;
}

RingMatrix RingMatrix::from_rows(ChainRing ring, std::size_t cols, const std::vector<RingVector>& rows) {
    RingMatrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == cols, ErrorCode::DimensionMismatch, "ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            require(rows[i][j].ring_data() == ring.data(), ErrorCode::MixedRings, "entry from another ring");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<RingVector> RingMatrix::row_list() const {
    std::vector<RingVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
}

bool RingMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Element& e) { return e.is_zero(); });
}

bool RingMatrix::row_is_zero(std::size_t i) const { return is_zero_vector(row(i)); }

RingMatrix RingMatrix::select_rows(std::span<const std::size_t> idx) const {
    RingMatrix m(ring_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

RingMatrix RingMatrix::select_cols(std::span<const std::size_t> idx) const {
    RingMatrix m(ring_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

RingMatrix RingMatrix::submatrix(std::span<const std::size_t> r, std::span<const std::size_t> c) const {
    RingMatrix m(ring_, r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = (*this)(r[i], c[j]);
    return m;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix m(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

RingMatrix RingMatrix::scaled(const Element& c) const {
    RingMatrix m = *this;
    for (auto& e : m.data_) e = e * c;
    return m;
}

RingMatrix RingMatrix::project() const {
    const ChainRing F = ring_.residue_field();
    RingMatrix m(F, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring_.project(data_[i]);
    return m;
}

RingMatrix RingMatrix::lift_into(const ChainRing& target) const {
    require(ring_.is_field() && target.residue_field() == ring_, ErrorCode::MixedRings,
            "lift needs a matrix over the residue field of the target ring");
    RingMatrix m(target, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = target.lift(data_[i]);
    return m;
}

void RingMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void RingMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void RingMatrix::row_axpy(std::size_t dst, Element c, std::size_t src) {
    if (c.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Element& s = (*this)(src, j);
        if (!s.is_zero()) (*this)(dst, j) -= c * s;
    }
}

void RingMatrix::col_axpy(std::size_t dst, Element c, std::size_t src) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Element& s = (*this)(i, src);
        if (!s.is_zero()) (*this)(i, dst) -= c * s;
    }
}

void RingMatrix::scale_row(std::size_t i, Element c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) * c;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    require(a.ring_ == b.ring_, ErrorCode::MixedRings, "matrix product across rings");
    RingMatrix m(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Element& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RingMatrix vstack(const std::vector<RingMatrix>& blocks) {
    require(!blocks.empty(), ErrorCode::DimensionMismatch, "nothing to stack");
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        require(b.cols() == blocks[0].cols(), ErrorCode::DimensionMismatch, "vstack column mismatch");
        rows += b.rows();
    }
    RingMatrix m(blocks[0].ring(), rows, blocks[0].cols());
    std::size_t r = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i, ++r)
            for (std::size_t j = 0; j < b.cols(); ++j) m(r, j) = b(i, j);
    return m;
}

RingMatrix hstack(const std::vector<RingMatrix>& blocks) {
    require(!blocks.empty(), ErrorCode::DimensionMismatch, "nothing to stack");
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        require(b.rows() == blocks[0].rows(), ErrorCode::DimensionMismatch, "hstack row mismatch");
        cols += b.cols();
    }
    RingMatrix m(blocks[0].ring(), blocks[0].rows(), cols);
    std::size_t c = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, c + j) = b(i, j);
        c += b.cols();
    }
    return m;
}

RingVector vec_times_matrix(std::span<const Element> v, const RingMatrix& m) {
    require(v.size() == m.rows(), ErrorCode::DimensionMismatch, "vector-matrix shape mismatch");
    RingVector out(m.cols(), m.ring().zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

bool is_zero_vector(std::span<const Element> v) {
    return std::all_of(v.begin(), v.end(), [](const Element& e) { return e.is_zero(); });
}

std::string to_string(const RingMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

// --- diagonal reduction -------------------------------------------------------

namespace {

struct Pivot {
    std::size_t row = 0, col = 0;
    std::uint32_t val = 0;
};

// Leftmost entry of minimal valuation in the trailing block [t.., t..].
Pivot find_pivot(const RingMatrix& m, std::size_t t) {
    const ChainRing& R = m.ring();
    Pivot best{0, 0, R.nu()};
    for (std::size_t j = t; j < m.cols(); ++j) {
        for (std::size_t i = t; i < m.rows(); ++i) {
            if (m(i, j).is_zero()) continue;
            const std::uint32_t v = R.valuation(m(i, j));
            if (v < best.val) {
                best = {i, j, v};
                if (v == 0) return best;
            }
        }
    }
    return best;
}

}  // namespace

DiagonalReduction diagonal_reduction(const RingMatrix& a) {
    const ChainRing& R = a.ring();
    RingMatrix m = a;
    RingMatrix left = RingMatrix::identity(R, a.rows());
    RingMatrix right = RingMatrix::identity(R, a.cols());
    std::vector<std::uint32_t> exps;
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < lim; ++t) {
        const Pivot pv = find_pivot(m, t);
        if (pv.val >= R.nu()) break;
        m.swap_rows(t, pv.row);
        left.swap_rows(t, pv.row);
        m.swap_cols(t, pv.col);
        right.swap_cols(t, pv.col);
        auto [e, w] = R.split_valuation(m(t, t));
        const Element winv = R.inverse(w);
        m.scale_row(t, winv);
        left.scale_row(t, winv);
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
            if (m(i, t).is_zero()) continue;
            const Element c = R.divide_by_gamma_power(m(i, t), e);
            m.row_axpy(i, c, t);
            left.row_axpy(i, c, t);
        }
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
            if (m(t, j).is_zero()) continue;
            const Element c = R.divide_by_gamma_power(m(t, j), e);
            m.col_axpy(j, c, t);
            right.col_axpy(j, c, t);
        }
        exps.push_back(e);
    }
    return {std::move(exps), std::move(left), std::move(right)};
}

std::vector<std::uint32_t> diagonal_exponents(const RingMatrix& a) {
    const ChainRing& R = a.ring();
    RingMatrix m = a;
    std::vector<std::uint32_t> exps;
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < lim; ++t) {
        const Pivot pv = find_pivot(m, t);
        if (pv.val >= R.nu()) break;
        m.swap_rows(t, pv.row);
        m.swap_cols(t, pv.col);
        auto [e, w] = R.split_valuation(m(t, t));
        const Element winv = R.inverse(w);
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
            if (m(i, t).is_zero()) continue;
            const Element c = R.divide_by_gamma_power(m(i, t), e) * winv;
            // Only the trailing columns matter for later pivots.
            for (std::size_t j = t; j < m.cols(); ++j)
                if (!m(t, j).is_zero()) m(i, j) -= c * m(t, j);
        }
        exps.push_back(e);
    }
    return exps;
}

NuShape shape_from_exponents(std::span<const std::uint32_t> exponents, std::uint32_t nu) {
    NuShape s;
    for (std::uint32_t i = 1; i <= nu; ++i)
        s.mu.push_back(static_cast<std::size_t>(
            std::count_if(exponents.begin(), exponents.end(), [i](std::uint32_t e) { return e + 1 <= i; })));
    return s;
}

BlockParameters parameters_from_shape(const NuShape& shape) {
    BlockParameters p;
    std::size_t prev = 0;
    for (auto mu : shape.mu) {
        p.k.push_back(mu - prev);
        prev = mu;
    }
    return p;
}

NuShape shape_of(const RingMatrix& a) { return shape_from_exponents(diagonal_exponents(a), a.ring().nu()); }

std::size_t gamma_dimension(const RingMatrix& a) {
    std::size_t total = 0;
    for (auto e : diagonal_exponents(a)) total += a.ring().nu() - e;
    return total;
}

BlockParameters parameters_of(const RingMatrix& a) { return parameters_from_shape(shape_of(a)); }

// --- field linear algebra ------------------------------------------------------

std::vector<std::size_t> rref_in_place(RingMatrix& m) {
    const ChainRing& F = m.ring();
    require(F.is_field(), ErrorCode::InternalInvariant, "rref needs a field");
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        m.scale_row(r, F.inverse(m(r, c)));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && !m(i, c).is_zero()) m.row_axpy(i, m(i, c), r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t field_rank(const RingMatrix& m) {
    RingMatrix copy = m;
    return rref_in_place(copy).size();
}

RingMatrix field_left_kernel(const RingMatrix& m) {
    // c m = 0  <=>  m^T c^T = 0
    RingMatrix t = m.transpose();
    const auto pivots = rref_in_place(t);
    const ChainRing& F = m.ring();
    const std::size_t vars = m.rows();
    std::vector<bool> is_pivot(vars, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RingVector> basis;
    for (std::size_t f = 0; f < vars; ++f) {
        if (is_pivot[f]) continue;
        RingVector v(vars, F.zero());
        v[f] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -t(r, f);
        basis.push_back(std::move(v));
    }
    return RingMatrix::from_rows(F, vars, basis);
}

std::optional<RingVector> field_left_solve(const RingMatrix& m, std::span<const Element> target) {
    require(target.size() == m.cols(), ErrorCode::DimensionMismatch, "solve target length");
    const ChainRing& F = m.ring();
    RingMatrix aug(F, m.cols(), m.rows() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) aug(j, i) = m(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j) aug(j, m.rows()) = target[j];
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.rows()) return std::nullopt;
    RingVector c(m.rows(), F.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = aug(r, m.rows());
    return c;
}

// --- gamma-span membership and independence -----------------------------------

namespace {

// Calls visit(c) for c = base + sum lambda_i kernel_i over all lambda in F^d,
// skipping lambda = 0 when `skip_zero`; stops when visit returns true.
template <class Visit>
bool enumerate_coset(const RingVector& base, const RingMatrix& kernel, bool skip_zero, std::uint64_t budget,
                     Visit&& visit) {
    const ChainRing& F = kernel.ring();
    const std::size_t d = kernel.rows();
    const std::uint64_t count = saturating_pow(F.q(), d);
    if (count > budget)
        fail(ErrorCode::BudgetExceeded,
             "gamma-span enumeration needs " + std::to_string(count) + " candidates, budget " + std::to_string(budget));
    std::vector<std::uint64_t> digits(d, 0);
    std::vector<Element> field_elems;
    field_elems.reserve(F.q());
    for (std::uint64_t i = 0; i < F.q(); ++i) field_elems.push_back(F.residue_from_index(i));
    for (std::uint64_t step = 0; step < count; ++step) {
        if (!(skip_zero && step == 0)) {
            RingVector c = base;
            for (std::size_t i = 0; i < d; ++i) {
                if (digits[i] == 0) continue;
                const Element& lam = field_elems[digits[i]];
                for (std::size_t j = 0; j < c.size(); ++j) c[j] += lam * kernel(i, j);
            }
            if (visit(c)) return true;
        }
        std::size_t k = 0;
        while (k < d && ++digits[k] == F.q()) digits[k++] = 0;
    }
    return false;
}

RingVector lifted_combination(const RingMatrix& rows, const RingVector& field_coeffs) {
    const ChainRing& R = rows.ring();
    RingVector acc(rows.cols(), R.zero());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        if (field_coeffs[i].is_zero()) continue;
        const Element t = R.lift(field_coeffs[i]);
        for (std::size_t j = 0; j < rows.cols(); ++j) acc[j] += t * rows(i, j);
    }
    return acc;
}

}  // namespace

bool in_gamma_span(const RingMatrix& rows, std::span<const Element> w, std::uint64_t budget) {
    require(w.size() == rows.cols(), ErrorCode::DimensionMismatch, "vector length");
    const ChainRing& R = rows.ring();
    RingVector pw(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) pw[j] = R.project(w[j]);
    if (rows.rows() == 0) return is_zero_vector(w);
    const RingMatrix pa = rows.project();
    auto base = field_left_solve(pa, pw);
    if (!base) return false;
    const RingMatrix kernel = field_left_kernel(pa);
    return enumerate_coset(*base, kernel, false, budget, [&](const RingVector& c) {
        const RingVector v = lifted_combination(rows, c);
        return std::equal(v.begin(), v.end(), w.begin());
    });
}

bool in_row_module(const RingMatrix& rows, std::span<const Element> w) {
    require(w.size() == rows.cols(), ErrorCode::DimensionMismatch, "vector length");
    if (rows.rows() == 0) return is_zero_vector(w);
    const ChainRing& R = rows.ring();
    const DiagonalReduction dr = diagonal_reduction(rows);
    const RingVector x = vec_times_matrix(w, dr.right);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const std::uint32_t need = j < dr.exponents.size() ? dr.exponents[j] : R.nu();
        if (R.valuation(x[j]) < need) return false;
    }
    return true;
}

bool is_gamma_generator_sequence(const RingMatrix& rows, SequenceMethod method, std::uint64_t budget) {
    const std::size_t k = rows.rows();
    if (k == 0) return true;
    const ChainRing& R = rows.ring();
    const Element g = R.gamma();
    auto gamma_row = [&](std::size_t i) {
        RingVector v = rows.row_vector(i);
        for (auto& e : v) e = e * g;
        return v;
    };
    if (!is_zero_vector(gamma_row(k - 1))) return false;
    for (std::size_t i = k - 1; i-- > 0;) {
        std::vector<std::size_t> tail(k - 1 - i);
        std::iota(tail.begin(), tail.end(), i + 1);
        const RingMatrix t = rows.select_rows(tail);
        const RingVector gv = gamma_row(i);
        const bool ok = method == SequenceMethod::RowModule ? in_row_module(t, gv) : in_gamma_span(t, gv, budget);
        if (!ok) return false;
    }
    return true;
}

bool is_gamma_linearly_independent(const RingMatrix& rows, IndependenceMethod method, std::uint64_t budget) {
    if (method == IndependenceMethod::ShapeFast) {
        if (!is_gamma_generator_sequence(rows, SequenceMethod::RowModule))
            fail(ErrorCode::MethodPreconditionViolated, "ShapeFast needs the rows to form a gamma-generator sequence");
        return gamma_dimension(rows) == rows.rows();
    }
    if (rows.rows() == 0) return true;
    const RingMatrix pa = rows.project();
    const RingMatrix kernel = field_left_kernel(pa);
    if (kernel.rows() == 0) return true;
    const RingVector zero(rows.rows(), pa.ring().zero());
    const bool dependent = enumerate_coset(zero, kernel, true, budget, [&](const RingVector& c) {
        return is_zero_vector(lifted_combination(rows, c));
    });
    return !dependent;
}

RingMatrix gamma_basis(const RingMatrix& a) {
    const ChainRing& R = a.ring();
    const DiagonalReduction dr = diagonal_reduction(a);
    const RingMatrix la = dr.left * a;
    std::vector<RingVector> out;
    for (std::uint32_t layer = 0; layer < R.nu(); ++layer) {
        const Element g = R.gamma_power(layer);
        for (std::size_t j = 0; j < dr.exponents.size(); ++j) {
            if (dr.exponents[j] + layer >= R.nu()) continue;
            RingVector v = la.row_vector(j);
            for (auto& e : v) e = e * g;
            out.push_back(std::move(v));
        }
    }
    return RingMatrix::from_rows(R, a.cols(), out);
}

// --- standard forms -------------------------------------------------------------

StandardForm standard_form(const RingMatrix& a) {
    if (a.is_zero()) fail(ErrorCode::ZeroMatrix, "standard form of the zero matrix");
    const ChainRing& R = a.ring();
    RingMatrix m = a;
    std::vector<std::size_t> perm(a.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> levels;
    const std::size_t lim = std::min(a.rows(), a.cols());
    std::size_t t = 0;
    for (; t < lim; ++t) {
        const Pivot pv = find_pivot(m, t);
        if (pv.val >= R.nu()) break;
        m.swap_rows(t, pv.row);
        m.swap_cols(t, pv.col);
        std::swap(perm[t], perm[pv.col]);
        auto [e, w] = R.split_valuation(m(t, t));
        m.scale_row(t, R.inverse(w));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == t || m(i, t).is_zero()) continue;
            if (i < t && levels[i] != e) continue;  // lower levels keep their entry in this column
            m.row_axpy(i, R.divide_by_gamma_power(m(i, t), e), t);
        }
        levels.push_back(e);
    }
    std::vector<std::size_t> keep(t);
    std::iota(keep.begin(), keep.end(), 0);
    StandardForm out;
    out.matrix = m.select_rows(keep);
    out.perm = std::move(perm);
    out.params.k.assign(R.nu(), 0);
    for (auto e : levels) ++out.params.k[e];
    out.levels = std::move(levels);
    return out;
}

StandardForm gamma_standard_form(const RingMatrix& a) {
    const StandardForm sf = standard_form(a);
    const ChainRing& R = a.ring();
    const std::size_t t = sf.matrix.rows();
    std::vector<RingVector> out;
    std::vector<std::uint32_t> out_levels;
    for (std::uint32_t layer = 0; layer < R.nu(); ++layer) {
        std::vector<RingVector> finished(t);
        // Decreasing level order: a row only needs rows of strictly higher level.
        std::vector<std::size_t> order;
        for (std::size_t r = 0; r < t; ++r)
            if (sf.levels[r] <= layer) order.push_back(r);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return sf.levels[x] > sf.levels[y]; });
        for (std::size_t r : order) {
            RingVector cand = sf.matrix.row_vector(r);
            const Element g = R.gamma_power(layer - sf.levels[r]);
            for (auto& e : cand) e = e * g;
            for (std::size_t r2 = 0; r2 < t; ++r2) {
                if (sf.levels[r2] <= sf.levels[r] || sf.levels[r2] > layer) continue;
                if (cand[r2].is_zero()) continue;
                const Element c = R.divide_by_gamma_power(cand[r2], layer);
                for (std::size_t j = 0; j < cand.size(); ++j) cand[j] -= c * finished[r2][j];
            }
            finished[r] = std::move(cand);
        }
        for (std::size_t r = 0; r < t; ++r) {
            if (sf.levels[r] > layer) continue;
            out.push_back(std::move(finished[r]));
            out_levels.push_back(layer);
        }
    }
    StandardForm res;
    res.matrix = RingMatrix::from_rows(R, a.cols(), out);
    res.perm = sf.perm;
    res.levels = std::move(out_levels);
    res.params = sf.params;
    return res;
}

// --- determinants ------------------------------------------------------------------

Element determinant(const RingMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorCode::NotSquare, "determinant of a non-square matrix");
    const ChainRing& R = a.ring();
    RingMatrix m = a;
    Element det = R.one();
    const std::size_t n = a.rows();
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t best = n;
        std::uint32_t bval = R.nu();
        for (std::size_t i = t; i < n; ++i) {
            const std::uint32_t v = R.valuation(m(i, t));
            if (v < bval) {
                bval = v;
                best = i;
            }
        }
        if (best == n) return R.zero();
        if (best != t) {
            m.swap_rows(t, best);
            det = -det;
        }
        auto [e, w] = R.split_valuation(m(t, t));
        const Element winv = R.inverse(w);
        for (std::size_t i = t + 1; i < n; ++i) {
            if (m(i, t).is_zero()) continue;
            m.row_axpy(i, R.divide_by_gamma_power(m(i, t), e) * winv, t);
        }
        det = det * m(t, t);
    }
    return det;
}

bool residue_determinant_nonzero(const RingMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorCode::NotSquare, "determinant of a non-square matrix");
    return field_rank(a.project()) == a.rows();
}

bool is_unit_determinant(const RingMatrix& a) {
    const bool via_ring = a.ring().is_unit(determinant(a));
    const bool via_field = residue_determinant_nonzero(a);
    if (via_ring != via_field)
        fail(ErrorCode::InternalInvariant, "ring and residue determinant paths disagree on " + to_string(a));
    return via_ring;
}

}  // namespace chainmdp
