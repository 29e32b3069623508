#include "chainmdp/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace chainmdp {

using boost::multiprecision::cpp_int;

RingMatrix stack_gamma_layers(const RingMatrix& a, const std::vector<std::size_t>& counts) {
    require(a.rows() == a.cols(), ErrorCode::NotSquare, "layer source must be square");
    const ChainRing& R = a.ring();
    const std::size_t n = a.rows();
    if (counts.size() != R.nu()) fail(ErrorCode::BadCounts, "need one row count per gamma layer");
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] < 1 || counts[i] > n || (i > 0 && counts[i] < counts[i - 1]))
            fail(ErrorCode::BadCounts, "row counts must satisfy 1 <= n_0 <= ... <= n_{nu-1} <= n");
    if (!is_unit_determinant(a)) fail(ErrorCode::DependentRows, "rows of the layer source are dependent over R");
    std::vector<RingMatrix> layers;
    for (std::uint32_t i = 0; i < R.nu(); ++i) {
        std::vector<std::size_t> idx(counts[i]);
        std::iota(idx.begin(), idx.end(), 0);
        layers.push_back(a.select_rows(idx).scaled(R.gamma_power(i)));
    }
    RingMatrix out = vstack(layers);
    try {
        require(is_gamma_linearly_independent(out, IndependenceMethod::Oracle, 100'000), ErrorCode::InternalInvariant,
                "stacked layers are gamma-dependent");
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
    return out;
}

PolyMatrix lift_encoder(const PolyMatrix& field_encoder, const ChainRing& ring) {
    require(field_encoder.ring() == ring.residue_field(), ErrorCode::MixedRings,
            "field encoder must live over the residue field of the target ring");
    require(is_reduced(field_encoder), ErrorCode::NotReduced, "field encoder must be reduced");
    std::vector<RingMatrix> cs;
    for (const auto& c : field_encoder.coeffs()) {
        const RingMatrix lifted = c.lift_into(ring);
        std::vector<RingMatrix> layers;
        for (std::uint32_t i = 0; i < ring.nu(); ++i) layers.push_back(lifted.scaled(ring.gamma_power(i)));
        cs.push_back(vstack(layers));
    }
    return PolyMatrix(ring, field_encoder.rows() * ring.nu(), field_encoder.cols(), std::move(cs));
}

ConvCode lift_from_residue_field(const PolyMatrix& field_encoder, const ChainRing& ring) {
    return ConvCode(lift_encoder(field_encoder, ring));
}

// --- binomial construction -----------------------------------------------------------

namespace {

cpp_int binomial(std::size_t n, long long r) {
    if (r < 0 || r > static_cast<long long>(n)) return 0;
    cpp_int out = 1;
    const auto rr = static_cast<std::size_t>(std::min<long long>(r, static_cast<long long>(n) - r));
    for (std::size_t i = 1; i <= rr; ++i) out = out * (n - rr + i) / i;
    return out;
}

cpp_int bound_value(std::size_t n, std::size_t k, std::size_t delta) {
    require(k >= 1 && k < n, ErrorCode::InvalidParams, "binomial construction needs 1 <= k < n");
    require(delta % k == 0, ErrorCode::InvalidParams, "binomial construction needs k | delta");
    const std::size_t m = delta / k, N = m * n + n - k;
    const std::size_t L = delta / k + delta / (n - k);
    const std::size_t x = k * (L + 1);
    const cpp_int b = boost::multiprecision::pow(binomial(N, static_cast<long long>(N / 2)), static_cast<unsigned>(x));
    // x^{x/2} may be irrational; floor(b * x^{x/2}) = floor(sqrt(b^2 x^x)).
    const cpp_int square = b * b * boost::multiprecision::pow(cpp_int(x), static_cast<unsigned>(x));
    return boost::multiprecision::sqrt(square);
}

}  // namespace

std::string binomial_bound(std::size_t n, std::size_t k, std::size_t delta) { return bound_value(n, k, delta).str(); }

BinomialConstruction binomial_encoder(std::size_t n, std::size_t k, std::size_t delta, std::uint32_t p) {
    const cpp_int bound = bound_value(n, k, delta);
    const ChainRing F = ChainRing::integers_mod(p);
    require(F.is_field(), ErrorCode::InvalidParams, "binomial construction needs a prime field");
    const std::size_t m = delta / k, N = m * n + n - k;
    std::vector<RingMatrix> cs;
    for (std::size_t i = 0; i <= m; ++i) {
        RingMatrix g(F, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const long long idx = static_cast<long long>((i + 1) * n + r) - static_cast<long long>(k + c);
                g(r, c) = F.from_int(static_cast<std::int64_t>(binomial(N, idx) % p));
            }
        cs.push_back(std::move(g));
    }
    BinomialConstruction out{PolyMatrix(F, k, n, std::move(cs)), bound.str(), cpp_int(p) > bound, {}};
    if (!out.bound_satisfied)
        out.warnings.push_back("p = " + std::to_string(p) + " does not exceed the sufficient bound " + out.bound +
                               "; reverse MDP is not guaranteed and must be checked");
    return out;
}

// --- superregular Toeplitz matrices --------------------------------------------------

RingMatrix ToeplitzSpec::matrix() const {
    const std::size_t l = size();
    RingMatrix m(ring, l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i; j < l; ++j) m(i, j) = first_row[j - i];
    return m;
}

ToeplitzSpec ToeplitzSpec::reversed() const {
    ToeplitzSpec t{ring, first_row};
    std::reverse(t.first_row.begin(), t.first_row.end());
    return t;
}

ToeplitzSpec ToeplitzSpec::from_ints(const ChainRing& ring, std::initializer_list<std::int64_t> values) {
    ToeplitzSpec t{ring, {}};
    for (auto v : values) t.first_row.push_back(ring.from_int(v));
    return t;
}

bool is_proper(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) fail(ErrorCode::SizeMismatch, "row and column index lists differ in length");
    for (std::size_t m = 1; m < rows.size(); ++m)
        require(rows[m - 1] < rows[m] && cols[m - 1] < cols[m], ErrorCode::InvalidParams,
                "index lists must be strictly increasing");
    for (std::size_t m = 0; m < rows.size(); ++m)
        if (rows[m] > cols[m]) return false;
    return true;
}

void for_each_proper_pair(
    std::size_t l,
    const std::function<bool(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> I, J;
    bool stop = false;
    std::function<void(std::size_t, std::size_t)> cols = [&](std::size_t s, std::size_t from) {
        if (stop) return;
        const std::size_t m = J.size();
        if (m == s) {
            if (!visit(I, J)) stop = true;
            return;
        }
        for (std::size_t c = std::max(from, I[m]); c + (s - m) <= l && !stop; ++c) {
            J.push_back(c);
            cols(s, c + 1);
            J.pop_back();
        }
    };
    std::function<void(std::size_t, std::size_t)> rows = [&](std::size_t s, std::size_t from) {
        if (stop) return;
        if (I.size() == s) {
            cols(s, 0);
            return;
        }
        for (std::size_t r = from; r + (s - I.size()) <= l && !stop; ++r) {
            I.push_back(r);
            rows(s, r + 1);
            I.pop_back();
        }
    };
    for (std::size_t s = 1; s <= l && !stop; ++s) rows(s, 0);
}

namespace {

// Both determinant paths run inside is_unit_determinant, which throws if they
// ever disagree.
bool all_proper_minors_unit(const RingMatrix& a) {
    bool ok = true;
    for_each_proper_pair(a.rows(), [&](const std::vector<std::size_t>& I, const std::vector<std::size_t>& J) {
        ok = is_unit_determinant(a.submatrix(I, J));
        return ok;
    });
    return ok;
}

}  // namespace

bool is_gamma_superregular(const ToeplitzSpec& t) { return all_proper_minors_unit(t.matrix()); }

bool is_reverse_gamma_superregular(const ToeplitzSpec& t) {
    return is_gamma_superregular(t) && is_gamma_superregular(t.reversed());
}

std::vector<MinorRecord> superregular_certificate(const ToeplitzSpec& t) {
    const RingMatrix a = t.matrix();
    std::vector<MinorRecord> out;
    for_each_proper_pair(a.rows(), [&](const std::vector<std::size_t>& I, const std::vector<std::size_t>& J) {
        MinorRecord rec;
        for (auto i : I) rec.rows.push_back(i + 1);
        for (auto j : J) rec.cols.push_back(j + 1);
        rec.valuation = t.ring.valuation(determinant(a.submatrix(I, J)));
        out.push_back(std::move(rec));
        return true;
    });
    return out;
}

ExtractedBlocks extract_mdp_blocks(const ToeplitzSpec& a, std::size_t n, std::size_t k, std::size_t L,
                                   RowConvention convention) {
    require(n >= 1 && k >= 1 && k <= n, ErrorCode::InvalidParams, "need 1 <= k <= n");
    const std::size_t stride = n + k - 1;
    if (a.size() != (L + 1) * stride)
        fail(ErrorCode::SizeMismatch, "Toeplitz size must be (L+1)(n+k-1) = " + std::to_string((L + 1) * stride));
    if (!is_gamma_superregular(a)) fail(ErrorCode::NotSuperregular, "source matrix is not gamma-superregular");

    ExtractedBlocks out;
    for (std::size_t j = 0; j <= L; ++j) {
        const std::size_t base = j * stride;  // jn + j(k-1)
        for (std::size_t c = 1; c <= n; ++c) out.cols.push_back(base + c);
        const std::size_t first = convention == RowConvention::Example ? base + 1 : base + n;
        for (std::size_t r = 0; r < k; ++r) out.rows.push_back(first + r);
    }
    std::vector<std::size_t> r0(out.rows.size()), c0(out.cols.size());
    std::transform(out.rows.begin(), out.rows.end(), r0.begin(), [](std::size_t x) { return x - 1; });
    std::transform(out.cols.begin(), out.cols.end(), c0.begin(), [](std::size_t x) { return x - 1; });
    out.submatrix = a.matrix().submatrix(r0, c0);

    auto block = [&](std::size_t bi, std::size_t bj) {
        std::vector<std::size_t> ri(k), ci(n);
        std::iota(ri.begin(), ri.end(), bi * k);
        std::iota(ci.begin(), ci.end(), bj * n);
        return out.submatrix.submatrix(ri, ci);
    };
    std::vector<RingMatrix> coeffs;
    for (std::size_t i = 0; i <= L; ++i) coeffs.push_back(block(0, i));
    for (std::size_t bi = 0; bi <= L; ++bi)
        for (std::size_t bj = 0; bj <= L; ++bj) {
            const RingMatrix expect = bj >= bi ? coeffs[bj - bi] : RingMatrix(a.ring, k, n);
            if (!(block(bi, bj) == expect))
                fail(ErrorCode::InconsistentBlocks, "extracted matrix is not block Toeplitz");
        }
    out.blocks = PolyMatrix(a.ring, k, n, std::move(coeffs));
    out.minors_unit = !find_dependent_selection(out.submatrix, n, k, L);
    return out;
}

std::vector<ToeplitzSpec> search_superregular(std::size_t l, const ChainRing& ring, const SuperregularSearch& options) {
    require(l >= 1, ErrorCode::InvalidParams, "size must be positive");
    const auto T = ring.representatives();
    const std::uint64_t q = T.size();
    std::vector<ToeplitzSpec> hits;
    auto test = [&](const std::vector<std::size_t>& digits) {
        ToeplitzSpec t{ring, {ring.one()}};
        for (auto d : digits) t.first_row.push_back(T[d]);
        const bool ok = options.reverse ? is_reverse_gamma_superregular(t) : is_gamma_superregular(t);
        if (ok) hits.push_back(std::move(t));
        return hits.size() < options.max_results;
    };
    std::vector<std::size_t> digits(l - 1, 0);
    if (options.exhaustive) {
        const std::uint64_t count = saturating_pow(q, l - 1);
        if (count > options.budget)
            fail(ErrorCode::BudgetExceeded, "exhaustive search over " + std::to_string(q) + "^" +
                                                std::to_string(l - 1) + " candidates exceeds the budget");
        for (std::uint64_t step = 0; step < count; ++step) {
            if (!test(digits)) break;
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
        }
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::size_t> pick(0, q - 1);
        for (std::uint64_t step = 0; step < options.budget; ++step) {
            for (auto& d : digits) d = pick(rng);
            if (!test(digits)) break;
        }
    }
    return hits;
}

}  // namespace chainmdp
