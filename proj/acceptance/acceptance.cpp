// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chainmdp/block.hpp"
#include "chainmdp/constructions.hpp"
#include "codes.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace testsupport;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

Verdict teichmuller_z8() {
    const ChainRing R = ChainRing::make(ChainRingSpec::integers_mod(2, 3, RepresentativeConvention::Teichmuller));
    const auto T = R.representatives();
    const bool t_ok = T.size() == 2 && T[0].is_zero() && T[1].is_one();
    const auto digits = R.gamma_adic_decompose(R.from_int(6));
    const bool d_ok = digits == ints(R, {0, 1, 1});
    return {t_ok && d_ok, std::string("T = {0,1}: ") + (t_ok ? "yes" : "no") + ", digits of 6 = (0,1,1): " +
                              (d_ok ? "yes" : "no")};
}

Verdict galois_ring_8_3() {
    const ChainRing R = ChainRing::make(ChainRingSpec::galois(2, 3, 3, {7, 5, 6, 1}));
    const std::uint64_t order = R.multiplicative_order(R.teichmuller_generator());
    const std::size_t t = R.representatives().size();
    std::ostringstream os;
    os << "ord(xi) = " << order << ", |T| = " << t;
    return {order == 7 && t == 8, os.str()};
}

Verdict z4_dependence() {
    const RingMatrix s = sliding_matrix(z4_sliding_example(), 1);
    const bool dep = !is_gamma_linearly_independent(s, IndependenceMethod::Oracle);
    return {s.rows() == 6 && dep, dep ? "6 rows gamma-dependent" : "rows reported independent"};
}

Verdict nu_optimal() {
    const auto sets = nu_optimal_sets(16, 5);
    const std::vector<BlockParameters> expected{{{3, 0, 0, 0, 1}}, {{0, 4, 0, 0, 0}}};
    const bool equal = sets == expected;
    bool sums = true;
    for (std::size_t k = 1; k <= 40; ++k)
        for (std::uint32_t nu = 1; nu <= 6; ++nu)
            for (const auto& s : nu_optimal_sets(k, nu)) {
                std::size_t total = 0;
                for (auto x : s.k) total += x;
                sums = sums && total == (k + nu - 1) / nu;
            }
    std::ostringstream os;
    os << "(16,5) returned " << sets.size() << " sets:";
    for (const auto& s : sets) os << ' ' << join(s.k);
    os << "; sum k_i = ceil(k/nu) for k<=40, nu<=6: " << (sums ? "yes" : "no");
    return {equal && sums, os.str()};
}

Verdict superregular_golden() {
    ToeplitzSpec t{Z(121), {}};
    for (auto v : {1, 2, 1, 1, 3, 4}) t.first_row.push_back(Z(121).from_int(v));
    // Both determinant paths on every proper minor of A and A_rev.
    std::size_t minors = 0, disagreements = 0;
    for (const ToeplitzSpec& s : {t, t.reversed()}) {
        const RingMatrix a = s.matrix();
        for_each_proper_pair(a.rows(), [&](const auto& I, const auto& J) {
            const RingMatrix sub = a.submatrix(I, J);
            disagreements += Z(121).is_unit(determinant(sub)) != residue_determinant_nonzero(sub.project());
            ++minors;
            return true;
        });
    }
    const bool ring_rev = is_reverse_gamma_superregular(t);
    const bool field_rev = is_reverse_gamma_superregular(ToeplitzSpec::from_ints(Z(11), {1, 2, 1, 1, 3, 4}));
    std::ostringstream os;
    os << "superregular " << is_gamma_superregular(t) << ", reverse over Z121 " << ring_rev << ", reverse over F11 "
       << field_rev << ", path disagreements " << disagreements << "/" << minors;
    return {ring_rev && field_rev && disagreements == 0, os.str()};
}

Verdict z121_code_322() {
    const ConvCode c(z121_encoder());
    const std::size_t d0 = column_distance(c, 0), d1 = column_distance(c, 1);
    const bool minors = is_mdp(c, MdpMethod::Minors), dist = is_mdp(c, MdpMethod::Distances);
    const bool rev = is_reverse_mdp(c, MdpMethod::Minors) && is_reverse_mdp(c, MdpMethod::Distances);
    std::ostringstream os;
    os << "delay-free " << c.delay_free() << ", reduced " << c.reduced() << ", delta " << c.delta() << ", d0 " << d0
       << ", d1 " << d1 << ", MDP minors/distances " << minors << "/" << dist << ", reverse " << rev;
    return {c.delay_free() && c.reduced() && c.delta() == 2 && d0 == 3 && d1 == 5 && minors && dist && rev, os.str()};
}

Verdict general_equivalence() {
    Gen gen(0xacce97);
    std::size_t tested = 0, mismatches = 0, holds = 0;
    for (const auto& R : {Z(4), Z(9)})
        for (int t = 0; t < 400 && tested < 60 * (R.p() == 2 ? 1 : 2); ++t) {
            const auto c = random_mdp_candidate(gen, R, 2 + gen.below(3), 1);
            if (!c) continue;
            try {
                check_mdp_hypotheses(*c);
            } catch (const Error&) {
                continue;
            }
            const bool a = is_mdp(*c, MdpMethod::Minors), b = is_mdp(*c, MdpMethod::Distances);
            mismatches += a != b;
            holds += a;
            ++tested;
        }
    std::ostringstream os;
    os << tested << " codes, " << holds << " MDP, " << mismatches << " mismatches";
    return {tested >= 100 && mismatches == 0, os.str()};
}

Verdict main_round_trip() {
    Gen gen(0x3a1f);
    struct Case {
        std::uint32_t p, r;
        std::size_t max_n, max_degree;
    };
    std::size_t tested = 0, mismatches = 0, mdp = 0;
    for (const Case& cs : {Case{2, 2, 3, 2}, Case{2, 3, 3, 1}, Case{3, 2, 3, 2}, Case{11, 2, 2, 1}}) {
        const ChainRing F = Z(cs.p);
        const ChainRing R = ChainRing::make(ChainRingSpec::integers_mod(cs.p, cs.r));
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 2 + gen.below(cs.max_n - 1);
            const PolyRow row = random_poly_row(gen, F, n, 1 + gen.below(cs.max_degree));
            const PolyMatrix g = from_poly_rows(F, n, {row});
            if (g.degree() < 1 || !is_delay_free(g)) continue;
            const ConvCode field(g);
            const ConvCode lifted = lift_from_residue_field(g, R);
            const bool f = is_mdp(field, MdpMethod::Minors);
            mismatches += f != is_mdp(lifted, MdpMethod::Minors);
            mismatches += is_reverse_mdp(field) != is_reverse_mdp(lifted);
            mdp += f;
            ++tested;
        }
    }
    std::ostringstream os;
    os << tested << " field codes, " << mdp << " MDP, " << mismatches << " mismatches";
    return {tested >= 50 && mismatches == 0, os.str()};
}

Verdict binomial_example() {
    const auto big = binomial_encoder(3, 1, 1, 11);
    const bool coeffs = big.encoder == poly(Z(11), 1, 3, {{10, 5, 1}, {1, 5, 10}});
    const auto small = binomial_encoder(3, 1, 1, 7);
    const bool rev = is_reverse_mdp(ConvCode(small.encoder));
    const std::string bound = binomial_bound(3, 1, 1);
    std::ostringstream os;
    os << "G0=[10,5,1], G1=[1,5,10]: " << coeffs << ", reverse MDP over F7: " << rev << ", bound " << bound;
    return {coeffs && rev && bound == "200", os.str()};
}

Verdict gr_example() {
    const ChainRing R = ChainRing::make(ChainRingSpec::galois(11, 2, 5));
    const ChainRing F = R.residue_field();
    std::vector<std::int64_t> coords(5, 0);
    coords[1] = 1;
    const Element a = F.from_coords(coords), a2 = a * a, a4 = a2 * a2;
    auto row = [&](std::initializer_list<std::int64_t> v, const Element& s) {
        RingVector out;
        for (auto x : v) out.push_back(F.from_int(x) * s);
        return out;
    };
    const PolyMatrix g(F, 2, 7,
                       {RingMatrix::from_rows(F, 7, {row({1, 2, 3, 4, 5, 6, 7}, F.one()), row({1, 1, 1, 1, 1, 1, 1}, F.one())}),
                        RingMatrix::from_rows(F, 7, {row({1, 8, 5, 9, 4, 7, 2}, a), row({1, 4, 9, 5, 3, 3, 5}, F.one())}),
                        RingMatrix::from_rows(F, 7, {row({1, 10, 1, 1, 1, 10, 10}, a4), row({1, 5, 4, 3, 9, 9, 3}, a2)})});
    const ConvCode field(g);
    const MdpReport fr = analyze_mdp(field, MdpMethod::Minors);
    const bool sliding_ok = sliding_matrix(g, fr.L).rows() == 6 && sliding_matrix(g, fr.L).cols() == 21;
    const ConvCode lifted = lift_from_residue_field(g, R);
    const bool lift = is_mdp(lifted, MdpMethod::Minors);
    std::ostringstream os;
    os << "field MDP " << fr.holds << " (L=" << fr.L << ", 6x21 sliding " << sliding_ok << "), lift to " << R.name()
       << " (k=" << lifted.k() << ", delta=" << lifted.delta() << ") MDP " << lift;
    return {fr.holds && sliding_ok && lift, os.str()};
}

Verdict bound_suite() {
    Gen gen(0xb0b);
    std::vector<ConvCode> codes{ConvCode(z121_encoder()), ConvCode(poly(Z(4), 1, 2, {{2, 2}, {2, 0}, {2, 2}}))};
    for (const auto& R : {Z(4), Z(9), F4u2()})
        for (int t = 0; t < 60; ++t)
            if (auto c = random_layered_code(gen, R, 2 + gen.below(2), 1 + gen.below(2), 2)) codes.push_back(*c);
    std::size_t checked = 0, over_optimal = 0, over_optimal_divisible = 0, over_singleton = 0, monotone_failures = 0;
    std::string first;
    for (const auto& c : codes) {
        if (!c.reduced()) continue;
        const std::uint32_t nu = c.ring().nu();
        const std::size_t max_j = c.k() * 2 <= 4 ? 2 : 1;
        std::vector<std::size_t> d;
        try {
            d = column_distances(c, max_j, 2'000'000).values;
        } catch (const Error&) {
            continue;
        }
        ++checked;
        const std::size_t singleton = generalized_singleton_bound(c.n(), c.k(), c.delta(), nu);
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (static_cast<long long>(d[j]) > optimal_cd_bound(j, c.n(), c.k(), nu)) {
                ++over_optimal;
                over_optimal_divisible += c.k() % nu == 0;
                if (first.empty())
                    first = to_string(c.encoder()) + " over " + c.ring().name() + ": d = " + join(d) + " at j=" +
                            std::to_string(j) + " exceeds " + std::to_string(optimal_cd_bound(j, c.n(), c.k(), nu));
            }
            over_singleton += d[j] > singleton;
        }
        if (c.k() % nu == 0 && parameters_of(c.encoder().coeff(0)) == optimal_parameters(c.k(), nu)) {
            const std::size_t k0 = c.k() / nu;
            for (std::size_t j = 0; j < d.size(); ++j)
                if (d[j] == (c.n() - k0) * (j + 1) + 1)
                    for (std::size_t i = 0; i < j; ++i) monotone_failures += d[i] != (c.n() - k0) * (i + 1) + 1;
        }
    }
    std::ostringstream os;
    os << checked << " codes; above optimal bound " << over_optimal << " (" << over_optimal_divisible
       << " with nu | k), above Singleton " << over_singleton
       << ", saturation failures " << monotone_failures;
    if (!first.empty()) os << "; first: " << first;
    return {checked > 0 && over_optimal == 0 && over_singleton == 0 && monotone_failures == 0, os.str()};
}

Verdict oracle_equivalence() {
    Gen gen(0x0ac1e);
    std::size_t disagreements = 0, total = 0;
    for (const auto& R : {Z(4), Z(9), F4u2()})
        for (int t = 0; t < 500; ++t) {
            const RingMatrix s = random_generator_sequence(gen, R, 1 + gen.below(4), 1 + gen.below(4));
            disagreements += is_gamma_linearly_independent(s, IndependenceMethod::ShapeFast) !=
                             is_gamma_linearly_independent(s, IndependenceMethod::Oracle);
            ++total;
        }
    std::ostringstream os;
    os << disagreements << " disagreements on " << total << " sequences";
    return {disagreements == 0 && total == 1500, os.str()};
}

Verdict free_regression() {
    bool ok = true;
    for (auto [p, r] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
        const ChainRing R = ChainRing::make(ChainRingSpec::integers_mod(p, r));
        ok = ok && is_free_generator(poly(R, 1, 2, {{0, 0}, {1, 1}})) && !ConvCode(stacked_zz(p, r)).delay_free();
        const PolyMatrix top = top_layer_example(p, r);
        ok = ok && !is_free_generator(top) && ConvCode(top).delay_free();
    }
    return {ok, ok ? "stacked [z z]: free, not delay-free; p^{r-1}A(z): delay-free, not free" : "mismatch"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Z8 Teichmuller digits", 1, teichmuller_z8},
        {2, "GR(8,3) ring", 1, galois_ring_8_3},
        {3, "Z4 sliding matrix dependence", 1, z4_dependence},
        {4, "nu-optimal parameter sets", 5, nu_optimal},
        {5, "reverse superregular Toeplitz matrix", 10, superregular_golden},
        {6, "(3,2,2) code over Z121", 30, z121_code_322},
        {7, "distances vs minors characterization", 300, general_equivalence},
        {8, "residue-field lift round trip", 300, main_round_trip},
        {9, "binomial (3,1,1) encoder", 5, binomial_example},
        {10, "(7,2,4) code over F_11^5 and its lift", 900, gr_example},
        {11, "column distance bounds", 300, bound_suite},
        {12, "ShapeFast vs Oracle independence", 120, oracle_equivalence},
        {13, "free vs delay-free regression", 1, free_regression},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = v.pass && in_time;
        failures += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ["
                  << std::fixed << std::setprecision(2) << secs << " s" << (in_time ? "" : ", over time limit")
                  << "]  " << v.detail << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
