#pragma once

// Brute-force reference implementations.  They share no code with the library
// beyond ring arithmetic and are only usable at very small sizes.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "chainmdp/linalg.hpp"

namespace oracle {

using namespace chainmdp;

using Key = std::vector<std::uint32_t>;

inline Key key_of(std::span<const Element> v) {
    Key k;
    for (const auto& e : v) k.insert(k.end(), e.coords().begin(), e.coords().end());
    return k;
}

/// Calls f(u) for every u in S^m (odometer order, starting at all-zero).
inline void for_each_tuple(const std::vector<Element>& alphabet, std::size_t m,
                           const std::function<bool(const std::vector<Element>&)>& f) {
    std::vector<std::size_t> idx(m, 0);
    std::vector<Element> u(m, alphabet[0]);
    for (;;) {
        if (f(u)) return;
        std::size_t k = 0;
        while (k < m && ++idx[k] == alphabet.size()) {
            idx[k] = 0;
            u[k] = alphabet[0];
            ++k;
        }
        if (k == m) return;
        u[k] = alphabet[idx[k]];
    }
}

inline RingVector combine(const std::vector<Element>& u, const RingMatrix& a) {
    RingVector out(a.cols(), a.ring().zero());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += u[i] * a(i, j);
    return out;
}

/// All T-combinations of the rows.
inline std::set<Key> gamma_span(const RingMatrix& a) {
    std::set<Key> out;
    const auto T = a.ring().representatives();
    for_each_tuple(T, a.rows(), [&](const std::vector<Element>& u) {
        out.insert(key_of(combine(u, a)));
        return false;
    });
    return out;
}

/// All R-combinations of the rows.
inline std::set<Key> row_module(const RingMatrix& a) {
    std::set<Key> out;
    const auto all = a.ring().all_elements();
    for_each_tuple(all, a.rows(), [&](const std::vector<Element>& u) {
        out.insert(key_of(combine(u, a)));
        return false;
    });
    return out;
}

/// No nonzero u in T^m with uA = 0.
inline bool gamma_independent(const RingMatrix& a) {
    const auto T = a.ring().representatives();
    bool dependent = false;
    for_each_tuple(T, a.rows(), [&](const std::vector<Element>& u) {
        if (std::all_of(u.begin(), u.end(), [](const Element& e) { return e.is_zero(); })) return false;
        RingVector v = combine(u, a);
        if (is_zero_vector(v)) dependent = true;
        return dependent;
    });
    return !dependent;
}

inline bool brute_in_gamma_span(const RingMatrix& a, std::span<const Element> w) {
    if (a.rows() == 0) return is_zero_vector(w);
    return gamma_span(a).count(key_of(w)) == 1;
}

inline bool generator_sequence(const RingMatrix& a) {
    const std::size_t k = a.rows();
    const Element g = a.ring().gamma();
    for (std::size_t i = 0; i < k; ++i) {
        RingVector gv = a.row_vector(i);
        for (auto& e : gv) e = e * g;
        std::vector<std::size_t> tail;
        for (std::size_t j = i + 1; j < k; ++j) tail.push_back(j);
        if (!brute_in_gamma_span(a.select_rows(tail), gv)) return false;
    }
    return true;
}

/// Laplace expansion along the first row.
inline Element cofactor_det(const RingMatrix& a) {
    const std::size_t n = a.rows();
    const ChainRing& R = a.ring();
    if (n == 0) return R.one();
    if (n == 1) return a(0, 0);
    Element acc = R.zero();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Element term = a(0, j) * cofactor_det(a.submatrix(rows, cols));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline std::size_t hamming_weight(std::span<const Element> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Element& e) { return !e.is_zero(); }));
}

}  // namespace oracle

namespace oracle {

/// Column distance straight from the definition: every message block tuple
/// with a nonzero first block.
inline std::size_t column_distance(const chainmdp::RingMatrix& sliding, std::size_t k) {
    using namespace chainmdp;
    const auto T = sliding.ring().representatives();
    std::size_t best = sliding.cols() + 1;
    for_each_tuple(T, sliding.rows(), [&](const std::vector<Element>& u) {
        if (std::all_of(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k), [](const Element& e) { return e.is_zero(); }))
            return false;
        best = std::min(best, hamming_weight(combine(u, sliding)));
        return false;
    });
    return best;
}

/// Every admissible column selection, checked with the kernel oracle.
inline bool all_selections_independent(const chainmdp::RingMatrix& sliding, std::size_t n, std::size_t block,
                                       std::size_t j) {
    using namespace chainmdp;
    const std::size_t M = (j + 1) * block, total = sliding.cols();
    std::vector<std::size_t> pick;
    bool ok = true;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!ok) return;
        if (pick.size() == M) {
            if (!is_gamma_linearly_independent(sliding.select_cols(pick), IndependenceMethod::Oracle)) ok = false;
            return;
        }
        for (std::size_t c = from; c < total; ++c) {
            const std::size_t pos = pick.size();
            if (pos % block == 0 && c < (pos / block) * n) continue;
            pick.push_back(c);
            rec(c + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return ok;
}

}  // namespace oracle
