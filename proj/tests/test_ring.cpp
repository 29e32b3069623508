#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace chainmdp;
using namespace testsupport;

namespace {

ChainRing gr83() { return ChainRing::make(ChainRingSpec::galois(2, 3, 3, {7, 5, 6, 1})); }

std::vector<ChainRing> small_rings() {
    return {Z(4),
            Z(8),
            Z(9),
            Z(27),
            ChainRing::make(ChainRingSpec::integers_mod(3, 2, RepresentativeConvention::Teichmuller)),
            ChainRing::make(ChainRingSpec::integers_mod(5, 2, RepresentativeConvention::Teichmuller)),
            F4u2(),
            ChainRing::make(ChainRingSpec::truncated(3, 3)),
            ChainRing::make(ChainRingSpec::truncated(8, 2)),
            gr83(),
            ChainRing::make(ChainRingSpec::galois(2, 2, 2)),
            ChainRing::make(ChainRingSpec::galois(3, 1, 2)),
            Z(2),
            Z(7)};
}

}  // namespace

TEST_CASE("Z8 structure and gamma-adic digits") {
    const ChainRing R = Z(8);
    CHECK(R.nu() == 3);
    CHECK(R.q() == 2);
    CHECK(R.gamma() == R.from_int(2));
    std::set<std::uint32_t> ideal;
    for (const auto& a : R.all_elements())
        if (R.valuation(a) >= 1) ideal.insert(a.coords()[0]);
    CHECK(ideal == std::set<std::uint32_t>{0, 2, 4, 6});
    auto T = R.representatives();
    REQUIRE(T.size() == 2);
    CHECK(T[0] == R.zero());
    CHECK(T[1] == R.one());
    auto digits = R.gamma_adic_decompose(R.from_int(6));
    CHECK(digits == ints(R, {0, 1, 1}));
    CHECK(R.gamma_adic_compose(ints(R, {0, 1, 1})) == R.from_int(6));
}

TEST_CASE("GR(8,3) from z^3+6z^2+5z+7") {
    const ChainRing R = gr83();
    CHECK(R.q() == 8);
    CHECK(R.nu() == 3);
    CHECK(R.size() == 512);
    CHECK(R.convention() == RepresentativeConvention::Teichmuller);
    const Element xi = R.teichmuller_generator();
    CHECK(R.multiplicative_order(xi) == 7);
    std::vector<std::int64_t> x{0, 1, 0};
    CHECK(R.pow(R.from_coords(x), 7) == R.one());
    auto T = R.representatives();
    CHECK(T.size() == 8);
    std::set<std::vector<std::uint32_t>> powers;
    Element acc = R.one();
    for (int i = 0; i < 7; ++i) {
        powers.insert({acc.coords().begin(), acc.coords().end()});
        acc *= xi;
    }
    for (const auto& t : T) {
        if (t.is_zero()) continue;
        CHECK(powers.count({t.coords().begin(), t.coords().end()}) == 1);
    }
}

TEST_CASE("modulus and convention validation") {
    CHECK_THROWS_WITH_AS(ChainRing::make(ChainRingSpec::galois(2, 3, 3, {0, 0, 1, 1})), doctest::Contains("RejectedModulus"),
                         Error);
    try {
        ChainRing::make(ChainRingSpec::galois(2, 3, 3, {}, RepresentativeConvention::CanonicalDigits));
        FAIL("expected InvalidConvention");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidConvention);
    }
    CHECK_THROWS_AS(ChainRing::integers_mod(12), Error);
}

TEST_CASE("arithmetic examples") {
    CHECK(Z(8).from_int(3) * Z(8).from_int(3) == Z(8).one());
    CHECK((Z(4).from_int(2) * Z(4).from_int(2)).is_zero());
    CHECK((Z(121).from_int(11) * Z(121).from_int(11)).is_zero());
    CHECK_THROWS_AS(Z(8).one() + Z(4).one(), Error);
    CHECK(ChainRing::make(ChainRingSpec::truncated(11, 1)) == Z(11));
}

TEST_CASE("valuation and inversion") {
    CHECK(Z(8).valuation(Z(8).from_int(6)) == 1);
    CHECK(Z(8).valuation(Z(8).zero()) == 3);
    CHECK(Z(121).valuation(Z(121).from_int(22)) == 1);
    CHECK(Z(8).inverse(Z(8).from_int(3)) == Z(8).from_int(3));
    CHECK(Z(121).inverse(Z(121).from_int(2)) == Z(121).from_int(61));
    try {
        Z(8).inverse(Z(8).from_int(2));
        FAIL("expected NotAUnit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAUnit);
    }
}

TEST_CASE("projection and lifting examples") {
    CHECK(Z(8).project(Z(8).from_int(6)).is_zero());
    CHECK(Z(8).project(Z(8).from_int(5)) == Z(2).one());
    CHECK(Z(9).project(Z(9).from_int(5)) == Z(3).from_int(2));
    CHECK(Z(8).lift(Z(2).one()) == Z(8).one());
    CHECK(Z(9).lift(Z(3).from_int(2)) == Z(9).from_int(2));
    const ChainRing Z9t = ChainRing::make(ChainRingSpec::integers_mod(3, 2, RepresentativeConvention::Teichmuller));
    CHECK(Z9t.lift(Z(3).from_int(2)) == Z9t.from_int(8));
    CHECK(Z(9).gamma_adic_decompose(Z(9).from_int(5)) == ints(Z(9), {2, 1}));
    CHECK(Z(9).gamma_adic_compose(ints(Z(9), {2, 1})) == Z(9).from_int(5));
    CHECK(Z(4).gamma_adic_compose(ints(Z(4), {1, 1})) == Z(4).from_int(3));
    for (const auto& R : small_rings()) {
        auto d = R.gamma_adic_decompose(R.zero());
        CHECK(std::all_of(d.begin(), d.end(), [](const Element& e) { return e.is_zero(); }));
    }
    try {
        Z(9).gamma_adic_compose(ints(Z(9), {5, 0}));
        FAIL("expected DigitNotInT");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DigitNotInT);
    }
}

TEST_CASE("property: gamma-adic round trip and representative set") {
    for (const auto& R : small_rings()) {
        CAPTURE(R.name());
        auto T = R.representatives();
        CHECK(T.size() == R.q());
        CHECK(T[0].is_zero());
        for (std::size_t i = 1; i < T.size(); ++i) CHECK(R.valuation(T[i]) == 0);
        const ChainRing F = R.residue_field();
        for (std::uint64_t i = 0; i < R.q(); ++i) {
            ResidueElement c = R.residue_from_index(i);
            Element t = R.lift(c);
            CHECK(R.project(t) == c);
            if (R.convention() == RepresentativeConvention::Teichmuller) CHECK(R.pow(t, R.q()) == t);
            CHECK(R.residue_index(c) == i);
        }
        if (R.size() > 4096) continue;
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& a : R.all_elements()) {
            auto digits = R.gamma_adic_decompose(a);
            for (const auto& t : digits) CHECK(R.is_representative(t));
            CHECK(R.gamma_adic_compose(digits) == a);
            seen.insert({a.coords().begin(), a.coords().end()});
        }
        CHECK(seen.size() == R.size());
        // decompose o compose = id on T^nu (sampled when large)
        Gen gen(17);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Element> digits;
            for (std::uint32_t i = 0; i < R.nu(); ++i) digits.push_back(gen.representative(R));
            CHECK(R.gamma_adic_decompose(R.gamma_adic_compose(digits)) == digits);
        }
    }
}

TEST_CASE("property: valuation laws and projection homomorphism") {
    for (const auto& R : small_rings()) {
        CAPTURE(R.name());
        if (R.size() > 512) continue;
        const auto all = R.all_elements();
        const ChainRing F = R.residue_field();
        for (const auto& a : all) {
            CHECK((R.valuation(a) == 0) == R.is_unit(a));
            if (R.is_unit(a)) CHECK(a * R.inverse(a) == R.one());
            auto [e, w] = R.split_valuation(a);
            CHECK(R.is_unit(w));
            CHECK(R.gamma_power(e) * w == a);
            for (const auto& b : all) {
                const std::uint32_t va = R.valuation(a), vb = R.valuation(b);
                CHECK(R.valuation(a * b) == std::min(va + vb, R.nu()));
                CHECK(R.valuation(a + b) >= std::min(va, vb));
                CHECK(R.project(a + b) == R.project(a) + R.project(b));
                CHECK(R.project(a * b) == R.project(a) * R.project(b));
            }
        }
        CHECK(R.project(R.gamma()).is_zero());
    }
}

TEST_CASE("ring laws on samples") {
    Gen gen(5);
    for (const auto& R : small_rings()) {
        for (int i = 0; i < 300; ++i) {
            Element a = gen.element(R), b = gen.element(R), c = gen.element(R);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a - a == R.zero());
            CHECK(a + (-a) == R.zero());
        }
    }
}
