#include "chainmdp/conv.hpp"

#include "chainmdp/block.hpp"
#include "codes.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace chainmdp;
using namespace testsupport;

namespace {

RingMatrix M(const ChainRing& R, std::size_t r, std::size_t c, std::initializer_list<std::int64_t> v) {
    return RingMatrix::from_ints(R, r, c, v);
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalInvariant;
}

bool hypotheses_hold(const ConvCode& c) {
    try {
        check_mdp_hypotheses(c);
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

TEST_CASE("polynomial matrix basics") {
    const PolyMatrix g = z121_encoder();
    CHECK(g.degree() == 1);
    CHECK(g.row_degrees() == std::vector<int>{1, 1});
    const PolyMatrix trimmed = poly(Z(4), 1, 2, {{1, 0}, {0, 0}});
    CHECK(trimmed.degree() == 0);
    CHECK(PolyMatrix(Z(4), 2, 2).degree() == -1);
    CHECK(g.entry(0, 1) == ints(Z(121), {2, 3}));
    CHECK(to_string(poly(Z(4), 1, 2, {{1, 2}, {1, 0}})) == "[[1 + z, 2]]");
}

TEST_CASE("leading coefficient matrix") {
    CHECK(leading_coefficient_matrix(poly(Z(4), 1, 2, {{1, 2}, {1, 0}})) == M(Z(4), 1, 2, {1, 0}));
    CHECK(leading_coefficient_matrix(z121_encoder()) == M(Z(121), 2, 3, {1, 3, 4, 11, 33, 44}));
    CHECK(leading_coefficient_matrix(poly(Z(9), 1, 2, {{3, 1}})) == M(Z(9), 1, 2, {3, 1}));
    CHECK(code_of([] { leading_coefficient_matrix(poly(Z(4), 2, 1, {{1, 0}})); }) == ErrorCode::ZeroRow);
}

TEST_CASE("reduced, delay-free and gamma-degree") {
    CHECK(is_reduced(z121_encoder()));
    // Leading rows (1,0), (2,0) admit no T-relation; (1,0), (3,0) do.
    CHECK(is_reduced(poly(Z(4), 2, 2, {{1, 1, 2, 2}, {1, 0, 2, 0}})));
    CHECK_FALSE(is_reduced(poly(Z(4), 2, 2, {{1, 1, 0, 2}, {1, 0, 3, 0}})));
    CHECK(is_reduced(poly(Z(5), 2, 2, {{1, 0, 0, 1}, {0, 1, 1, 0}})));

    CHECK_FALSE(is_delay_free(stacked_zz(2, 3)));
    CHECK_FALSE(is_delay_free(stacked_zz(3, 2)));
    CHECK(is_delay_free(poly(Z(4), 1, 2, {{2, 2}, {2, 0}})));
    CHECK(is_delay_free(top_layer_example(2, 3)));
    CHECK(is_delay_free(z121_encoder()));

    CHECK(gamma_degree(z121_encoder()) == 2);
    CHECK(gamma_degree(poly(Z(9), 2, 2, {{1, 2, 3, 6}})) == 0);
    CHECK(code_of([] { gamma_degree(poly(Z(4), 2, 2, {{1, 1, 0, 2}, {1, 0, 3, 0}})); }) == ErrorCode::NotReduced);
}

TEST_CASE("free versus delay-free regressions") {
    for (auto [p, r] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}}) {
        const ChainRing R = ChainRing::make(ChainRingSpec::integers_mod(p, r));
        // [z z] has independent rows over R[z], but its gamma-encoder has G(0) = 0.
        CHECK(is_free_generator(poly(R, 1, 2, {{0, 0}, {1, 1}})));
        const ConvCode zz(stacked_zz(p, r));
        CHECK_FALSE(zz.delay_free());
        CHECK(zz.k() == r);
        // p^{r-1} A(z) is annihilated by p but its constant term is independent.
        const PolyMatrix top = top_layer_example(p, r);
        CHECK_FALSE(is_free_generator(top));
        CHECK(ConvCode(top).delay_free());
    }
    CHECK(is_free_generator(z121_encoder().select_rows(std::vector<std::size_t>{0})));
    CHECK_FALSE(is_free_generator(z121_encoder()));
}

TEST_CASE("sliding matrices") {
    const RingMatrix s = sliding_matrix(z4_sliding_example(), 1);
    CHECK(s == M(Z(4), 6, 6, {1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0,  //
                              0, 0, 0, 1, 1, 1, 0, 0, 0, 2, 2, 2, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(is_gamma_linearly_independent(s, IndependenceMethod::Oracle));
    CHECK(sliding_matrix(z121_encoder(), 0) == z121_encoder().coeff(0));
    CHECK(sliding_matrix(z121_encoder(), 1) == M(Z(121), 4, 6, {1, 2, 1, 1, 3, 4,      //
                                                                11, 22, 11, 11, 33, 44,  //
                                                                0, 0, 0, 1, 2, 1,        //
                                                                0, 0, 0, 11, 22, 11}));
    CHECK(reversed_sliding_matrix(z121_encoder(), 1) == M(Z(121), 4, 6, {1, 3, 4, 1, 2, 1,      //
                                                                         11, 33, 44, 11, 22, 11,  //
                                                                         0, 0, 0, 1, 3, 4,        //
                                                                         0, 0, 0, 11, 33, 44}));
}

TEST_CASE("code construction validates the gamma-basis") {
    const ConvCode c(z121_encoder());
    CHECK(c.n() == 3);
    CHECK(c.k() == 2);
    CHECK(c.delta() == 2);
    CHECK(c.reduced());
    CHECK(c.delay_free());
    CHECK(c.constant_parameters() == BlockParameters{{1, 0}});
    // Rows in the wrong order are not a generator sequence.
    const PolyMatrix swapped = poly(Z(121), 2, 3, {{11, 22, 11, 1, 2, 1}, {11, 33, 44, 1, 3, 4}});
    CHECK(code_of([&] { ConvCode{swapped}; }) == ErrorCode::NotGammaBasis);
    // A repeated row is a dependence.
    CHECK(code_of([] { ConvCode{poly(Z(5), 2, 2, {{1, 1, 1, 1}})}; }) == ErrorCode::NotGammaBasis);
}

TEST_CASE("column distances") {
    const ConvCode c(z121_encoder());
    CHECK(column_distance(c, 0) == 3);
    CHECK(column_distance(c, 1) == 5);
    CHECK(column_distance(ConvCode(poly(Z(2), 1, 3, {{1, 1, 1}})), 0) == 3);
    CHECK(code_of([] { column_distance(ConvCode(stacked_zz(2, 2)), 0); }) == ErrorCode::NotDelayFree);
    CHECK(code_of([&] { column_distance(c, 1, 1000); }) == ErrorCode::BudgetExceeded);
    CHECK(column_distance(c, 1, kDefaultBudget, 4) == 5);
}

TEST_CASE("distance bounds") {
    CHECK(generalized_singleton_bound(3, 2, 2, 2) == 6);
    CHECK(generalized_singleton_bound(5, 2, 0, 1) == 4);
    CHECK(generalized_singleton_bound(7, 2, 4, 1) == 20);
    CHECK(code_of([] { generalized_singleton_bound(3, 0, 1, 1); }) == ErrorCode::InvalidParams);

    CHECK(column_distance_bound(0, 3, BlockParameters{{1, 0}}, 2) == 3);
    CHECK(column_distance_bound(1, 3, BlockParameters{{1, 0}}, 2) == 5);
    CHECK(column_distance_bound(2, 7, BlockParameters{{2}}, 2) == 16);
    CHECK(code_of([] { column_distance_bound(0, 3, BlockParameters{{1, 1}}, 2); }) == ErrorCode::InvalidParams);

    CHECK(optimal_cd_bound(0, 3, 2, 2) == 3);
    CHECK(optimal_cd_bound(1, 3, 2, 2) == 5);
    CHECK(optimal_cd_bound(2, 7, 2, 1) == 16);
    CHECK(optimal_cd_bound(0, 3, 3, 2) == 2);
    CHECK(optimal_parameters(3, 2) == BlockParameters{{1, 1}});
    CHECK(optimal_parameters(16, 5) == BlockParameters{{3, 0, 0, 0, 1}});

    for (std::uint32_t nu = 1; nu <= 4; ++nu)
        for (std::size_t k = nu; k <= 8; k += nu)
            for (std::size_t n = k / nu + 1; n <= 6; ++n)
                for (std::size_t j = 0; j < 6; ++j) {
                    CHECK(optimal_cd_bound(j, n, k, nu) == static_cast<long long>((n - k / nu) * (j + 1) + 1));
                    CHECK(column_distance_bound(j, n, optimal_parameters(k, nu), k) == optimal_cd_bound(j, n, k, nu));
                }
}

TEST_CASE("index L") {
    CHECK(L_index(3, 2, 2, 2) == 1);
    CHECK(L_index(7, 2, 4, 1) == 2);
    CHECK(L_index(3, 1, 1, 1) == 1);
    CHECK(code_of([] { L_index(3, 3, 2, 2); }) == ErrorCode::NuNotDividingK);
    for (std::uint32_t nu = 1; nu <= 3; ++nu)
        for (std::size_t k = nu; k <= 6; k += nu)
            for (std::size_t n = k / nu + 1; n <= 6; ++n)
                for (std::size_t delta = 0; delta <= 8; ++delta) {
                    CHECK(L_index(n, k, delta, nu) == L_by_search(n, k, delta, nu));
                    const auto b = distance_bounds(n, k, delta, nu);
                    for (std::size_t j = 0; j <= b.L; ++j)
                        CHECK(b.per_j[j] <= static_cast<long long>(b.generalized_singleton));
                }
    const auto b = distance_bounds(3, 2, 2, 2);
    CHECK(b.per_j == std::vector<long long>{3, 5});
    CHECK(b.generalized_singleton == 6);
}

TEST_CASE("embedding comparison of L") {
    for (std::uint32_t r = 2; r <= 4; ++r)
        for (std::size_t k = r; k <= 3 * r; k += r)
            for (std::size_t n = k + 1; n <= k + 4; ++n)
                for (std::size_t delta = 0; delta <= 10; ++delta) {
                    const auto c = compare_embedding_L(n, k, delta, r);
                    CHECK(c.L_ring <= c.L_field);
                    CHECK(c.equal == c.delta_below_n_minus_k);
                }
    // With r = 1 both sides are the same formula.
    CHECK(compare_embedding_L(4, 1, 9, 1).equal);
    CHECK_FALSE(compare_embedding_L(4, 1, 9, 1).delta_below_n_minus_k);
}

TEST_CASE("MDP on the Z_121 code") {
    const ConvCode c(z121_encoder());
    const auto dist = analyze_mdp(c, MdpMethod::Distances);
    CHECK(dist.holds);
    CHECK(dist.L == 1);
    CHECK(dist.distances == std::vector<std::size_t>{3, 5});
    CHECK(is_mdp(c, MdpMethod::Minors));
    CHECK(is_reverse_mdp(c, MdpMethod::Minors));
    CHECK(is_reverse_mdp(c, MdpMethod::Distances));
}

TEST_CASE("MDP hypotheses are named") {
    CHECK(code_of([] { is_mdp(ConvCode(stacked_zz(2, 2)), MdpMethod::Minors); }) == ErrorCode::PreconditionViolated);
    const ConvCode odd(poly(Z(4), 1, 3, {{2, 2, 2}, {0, 2, 0}}));
    try {
        is_mdp(odd, MdpMethod::Minors);
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionViolated);
        CHECK(std::string(e.what()).find("nu does not divide k") != std::string::npos);
    }
}

TEST_CASE("lift of a non-MDP binary code is not MDP") {
    // [1, 1+z] over F_2 has d_2 = 3 < 4.
    const PolyMatrix field = poly(Z(2), 1, 2, {{1, 1}, {0, 1}});
    CHECK_FALSE(is_mdp(ConvCode(field), MdpMethod::Distances));
    const PolyMatrix lifted = poly(Z(4), 2, 2, {{1, 1, 2, 2}, {0, 1, 0, 2}});
    const ConvCode c(lifted);
    CHECK_FALSE(is_mdp(c, MdpMethod::Distances));
    CHECK_FALSE(is_mdp(c, MdpMethod::Minors));
}

TEST_CASE("reverse encoder") {
    const ConvCode c(z121_encoder());
    CHECK(reverse_encoder(c) == poly(Z(121), 2, 3, {{1, 3, 4, 11, 33, 44}, {1, 2, 1, 11, 22, 11}}));
    const PolyMatrix pal = poly(Z(9), 2, 2, {{1, 2, 3, 6}, {1, 2, 3, 6}});
    CHECK(reverse_encoder(ConvCode(pal)) == pal);
    const PolyMatrix constant = poly(Z(9), 2, 2, {{1, 2, 3, 6}});
    CHECK(reverse_encoder(ConvCode(constant)) == constant);
    CHECK(code_of([] { reverse_encoder(ConvCode(poly(Z(5), 2, 2, {{1, 0, 0, 1}, {1, 0, 0, 0}}))); }) ==
          ErrorCode::UnequalRowDegrees);
}

TEST_CASE("an MDP code whose reverse is not MDP") {
    // Exhaustive over (n,1,1) encoders of degree 1.  F_2 has no MDP (2,1,1)
    // code at all, so the search moves on to (3,1,1) over F_3.
    bool found = false;
    for (auto [p, n] : {std::pair{2u, 2u}, {3u, 3u}}) {
        const ChainRing F = Z(p);
        for (std::uint64_t code = 0; code < saturating_pow(p, 2 * n) && !found; ++code) {
            RingMatrix g0(F, 1, n), g1(F, 1, n);
            std::uint64_t x = code;
            for (std::size_t i = 0; i < n; ++i, x /= p) g0(0, i) = F.from_int(static_cast<std::int64_t>(x % p));
            for (std::size_t i = 0; i < n; ++i, x /= p) g1(0, i) = F.from_int(static_cast<std::int64_t>(x % p));
            const PolyMatrix g(F, 1, n, {g0, g1});
            if (g.degree() != 1 || g.row_degree(0) != 1) continue;
            try {
                const ConvCode c(g);
                if (!hypotheses_hold(c) || c.delta() != 1) continue;
                if (is_mdp(c, MdpMethod::Minors) && !is_reverse_mdp(c)) {
                    found = true;
                    CHECK_FALSE(is_reverse_mdp(c, MdpMethod::Distances));
                    MESSAGE("MDP but not reverse MDP: " << to_string(g) << " over " << F.name());
                }
            } catch (const Error&) {
            }
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("property: reverse code membership duality") {
    Gen gen(31);
    int checked = 0;
    for (const auto& R : {Z(4), Z(9), F4u2()}) {
        for (int t = 0; t < 30; ++t) {
            const auto c = random_layered_code(gen, R, 2, R.nu(), 1);
            if (!c || !c->reduced()) continue;
            PolyMatrix rev;
            try {
                rev = reverse_encoder(*c);
            } catch (const Error&) {
                continue;
            }
            const std::size_t mu = static_cast<std::size_t>(c->encoder().degree());
            // Codewords of the reverse code from messages of degree <= 1.
            const RingMatrix srev = sliding_matrix(rev, 0);
            (void)srev;
            const std::size_t blocks = mu + 2;
            std::vector<RingVector> forward_rows;
            for (std::size_t s = 0; s <= blocks; ++s)
                for (std::size_t l = 0; l < c->k(); ++l) {
                    RingVector v(blocks * 2 * 2, R.zero());
                    for (std::size_t d = 0; d <= mu; ++d)
                        for (std::size_t j = 0; j < 2; ++j)
                            if ((d + s) * 2 + j < v.size()) v[(d + s) * 2 + j] = c->encoder().coeff(d)(l, j);
                    forward_rows.push_back(v);
                }
            const RingMatrix fwd = RingMatrix::from_rows(R, blocks * 2 * 2, forward_rows);
            const auto T = R.representatives();
            oracle::for_each_tuple(T, 2 * c->k(), [&](const std::vector<Element>& u) {
                // v(z) = (u_0 + u_1 z) rev(z), degree <= mu + 1
                std::vector<RingVector> v(blocks, RingVector(2, R.zero()));
                for (std::size_t s = 0; s < 2; ++s)
                    for (std::size_t l = 0; l < c->k(); ++l)
                        for (std::size_t d = 0; d <= mu; ++d)
                            for (std::size_t j = 0; j < 2; ++j) v[s + d][j] += u[s * c->k() + l] * rev.coeff(d)(l, j);
                // z^{mu+1} v(1/z)
                RingVector flipped(blocks * 2 * 2, R.zero());
                for (std::size_t d = 0; d < blocks; ++d)
                    for (std::size_t j = 0; j < 2; ++j) flipped[(blocks - 1 - d) * 2 + j] = v[d][j];
                CHECK(in_row_module(fwd, flipped));
                ++checked;
                return false;
            });
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("property: column distances against oracles and bounds") {
    Gen gen(8080);
    int tested = 0;
    const std::vector<ChainRing> rings = {Z(4), Z(9), F4u2(), Z(2), Z(3)};
    for (const auto& R : rings) {
        for (int t = 0; t < 120; ++t) {
            const std::size_t n = 2 + gen.below(2);
            const std::size_t k = 1 + gen.below(std::min<std::size_t>(2 * R.nu(), 3));
            const auto c = random_layered_code(gen, R, n, k, 2);
            if (!c) continue;
            const std::size_t max_j = saturating_pow(R.q(), 3 * c->k()) <= 20000 ? 2 : 1;
            if (saturating_pow(R.q(), (max_j + 1) * c->k()) > 200000) continue;
            ++tested;
            const auto prof = column_distances(*c, max_j);
            for (std::size_t j = 0; j <= max_j; ++j) {
                CHECK(prof.values[j] == oracle::column_distance(sliding_matrix(c->encoder(), j), c->k()));
                if (j > 0) CHECK(prof.values[j - 1] <= prof.values[j]);
                CHECK(static_cast<long long>(prof.values[j]) <=
                      column_distance_bound(j, n, c->constant_parameters(), c->k()));
                if (c->k() % R.nu() == 0)
                    CHECK(static_cast<long long>(prof.values[j]) <= optimal_cd_bound(j, n, c->k(), R.nu()));
                if (c->reduced())
                    CHECK(prof.values[j] <= generalized_singleton_bound(n, c->k(), c->delta(), R.nu()));
            }
            if (saturating_pow(R.q(), 2 * c->k()) <= 20000)
                CHECK(free_distance_upper_bound(*c, 1) >= prof.values.back());
            if (hypotheses_hold(*c)) {
                const std::size_t k0 = c->k() / R.nu();
                for (std::size_t j = max_j + 1; j-- > 0;)
                    if (prof.values[j] == (n - k0) * (j + 1) + 1)
                        for (std::size_t i = 0; i < j; ++i) CHECK(prof.values[i] == (n - k0) * (i + 1) + 1);
            }
        }
    }
    CHECK(tested >= 200);
}

TEST_CASE("optimal bound exceeded when nu does not divide k") {
    // One row 2[1 + z + z^2, 1 + z^2] over Z_4: k = 1, nu = 2, N = 1.
    const ConvCode c(poly(Z(4), 1, 2, {{2, 2}, {2, 0}, {2, 2}}));
    CHECK(c.delay_free());
    const auto prof = column_distances(c, 2);
    CHECK(prof.values == std::vector<std::size_t>{2, 3, 3});
    CHECK(optimal_cd_bound(2, 2, 1, 2) == 2);
    CHECK(static_cast<long long>(prof.values[2]) > optimal_cd_bound(2, 2, 1, 2));
}

TEST_CASE("property: minors search matches the oracle") {
    Gen gen(4242);
    int tested = 0;
    for (const auto& R : {Z(4), Z(9), Z(2), Z(3)}) {
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 2 + gen.below(2);
            const auto c = R.nu() == 2 ? random_mdp_candidate(gen, R, n, 1) : random_layered_code(gen, R, n, 1, 1);
            if (!c || !hypotheses_hold(*c)) continue;
            for (std::size_t j = 0; j <= 1; ++j) {
                const RingMatrix s = sliding_matrix(c->encoder(), j);
                const std::size_t block = c->k() / R.nu();
                const auto w = find_dependent_selection(s, n, block, j);
                CHECK(w.has_value() != oracle::all_selections_independent(s, n, block, j));
                if (w) CHECK_FALSE(is_gamma_linearly_independent(s.select_cols(w->columns), IndependenceMethod::Oracle));
                ++tested;
            }
        }
    }
    CHECK(tested >= 100);
}

TEST_CASE("property: distance and minors characterizations agree") {
    Gen gen(77);
    int tested = 0, mdp = 0;
    for (const auto& R : {Z(4), Z(9)}) {
        for (int t = 0; t < 400 && tested < 60 * (R == Z(4) ? 1 : 2); ++t) {
            const auto c = random_mdp_candidate(gen, R, 2 + gen.below(3), 1);
            if (!c || !hypotheses_hold(*c)) continue;
            const bool a = is_mdp(*c, MdpMethod::Distances);
            CHECK(a == is_mdp(*c, MdpMethod::Minors));
            tested++;
            mdp += a;
        }
    }
    CHECK(tested >= 100);
    CHECK(mdp > 0);
    CHECK(mdp < tested);
}
