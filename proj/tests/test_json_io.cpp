#include <doctest.h>

#include "chainmdp/json_io.hpp"
#include "codes.hpp"
#include "generators.hpp"

using namespace testsupport;
using namespace chainmdp::io;

TEST_CASE("ring descriptors") {
    CHECK(ring_from_json("z121") == Z(121));
    CHECK(ring_from_json("f7") == Z(7));
    CHECK_THROWS_WITH_AS(ring_from_json("f9"), doctest::Contains("InvalidSpec"), Error);
    CHECK_THROWS_WITH_AS(ring_from_json("q12"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(ring_from_json("z1x"), doctest::Contains("ParseError"), Error);

    const json gr = {{"family", "galois"}, {"p", 2}, {"r", 3}, {"s", 3}, {"modulus", {7, 5, 6, 1}},
                     {"convention", "teichmuller"}};
    const ChainRing R = ring_from_json(gr);
    CHECK(R.q() == 8);
    CHECK(R.nu() == 3);
    CHECK(ring_to_json(R) == gr);
    CHECK(ring_from_json(json{{"family", "truncated"}, {"q", 4}, {"nu", 2}}) == F4u2());
    CHECK_THROWS_WITH_AS(ring_from_json(json{{"family", "galois"}, {"p", 2}}), doctest::Contains("ParseError"), Error);

    for (const auto& ring : {Z(4), Z(121), F4u2(), R, ChainRing::make(ChainRingSpec::galois(11, 2, 5))})
        CHECK(ring_from_json(ring_to_json(ring)) == ring);
}

TEST_CASE("elements and matrices round trip") {
    Gen gen(0x750);
    for (const auto& R : {Z(9), F4u2(), ChainRing::make(ChainRingSpec::galois(2, 3, 3))}) {
        for (int t = 0; t < 30; ++t) {
            const Element e = gen.element(R);
            CHECK(element_from_json(R, element_to_json(e)) == e);
            const RingMatrix m = random_matrix(gen, R, 1 + gen.below(3), 1 + gen.below(4));
            CHECK(matrix_from_json(matrix_to_json(m)) == m);
            CHECK(matrix_from_json(parse(matrix_to_json(m).dump())) == m);
        }
    }
    CHECK(element_from_json(Z(4), 7) == Z(4).from_int(3));
    CHECK_THROWS_WITH_AS(element_from_json(F4u2(), json{1, 0}), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(matrix_from_json(Z(4), json{{1, 2}, {3}}), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse("{\"ring\": "), doctest::Contains("ParseError"), Error);
}

TEST_CASE("code descriptors") {
    const PolyMatrix g = z121_encoder();
    const json doc = code_to_json(g);
    CHECK(doc["n"] == 3);
    CHECK(doc["claimed"]["k"] == 2);
    CHECK(doc["claimed"]["delta"] == 2);
    CHECK(encoder_from_json(doc) == g);
    CHECK(encoder_from_json(parse(doc.dump(2))) == g);

    json wrong = doc;
    wrong["claimed"]["delta"] = 3;
    CHECK_THROWS_WITH_AS(encoder_from_json(wrong), doctest::Contains("ClaimMismatch"), Error);
    wrong = doc;
    wrong["claimed"]["k"] = 1;
    CHECK_THROWS_WITH_AS(encoder_from_json(wrong), doctest::Contains("ClaimMismatch"), Error);
    wrong = doc;
    wrong["n"] = 4;
    CHECK_THROWS_WITH_AS(encoder_from_json(wrong), doctest::Contains("ParseError"), Error);

    // Coefficients may also be full matrix objects.
    const json verbose = {{"ring", "z121"},
                          {"n", 3},
                          {"encoder", {{"coeffs", {matrix_to_json(g.coeff(0)), matrix_to_json(g.coeff(1))}}}}};
    CHECK(encoder_from_json(verbose) == g);

    const PolyMatrix not_reduced = poly(Z(4), 2, 2, {{1, 1, 0, 2}, {1, 0, 3, 0}});
    CHECK_FALSE(code_to_json(not_reduced)["claimed"].contains("delta"));
    CHECK(encoder_from_json(code_to_json(not_reduced)) == not_reduced);
}

TEST_CASE("property: random encoders round trip") {
    Gen gen(0xc0de);
    std::size_t tested = 0;
    for (const auto& R : {Z(4), Z(9), F4u2()})
        for (int t = 0; t < 40; ++t) {
            const auto code = random_layered_code(gen, R, 2 + gen.below(2), 1 + gen.below(2), 2);
            if (!code) continue;
            const json doc = code_to_json(code->encoder());
            CHECK(encoder_from_json(parse(doc.dump())) == code->encoder());
            ++tested;
        }
    CHECK(tested >= 50);
}

TEST_CASE("Toeplitz specifications and certificates") {
    const ToeplitzSpec t = ToeplitzSpec::from_ints(Z(11), {1, 2, 1, 1, 3, 4});
    const json doc = toeplitz_to_json(t);
    CHECK(doc["first_row"] == json{1, 2, 1, 1, 3, 4});
    CHECK(toeplitz_from_json(doc).first_row == t.first_row);
    CHECK(toeplitz_from_json(json{{"ring", "z11"}, {"first_row", {1, 2}}}).size() == 2);
    CHECK_THROWS_WITH_AS(toeplitz_from_json(json{{"ring", "z11"}, {"size", 3}, {"first_row", {1, 2}}}),
                         doctest::Contains("ParseError"), Error);

    const json brief = certificate_to_json(t, false);
    CHECK(brief["superregular"] == true);
    CHECK(brief["reverse_superregular"] == false);
    CHECK_FALSE(brief.contains("minors"));
    const json full = certificate_to_json(t, true);
    REQUIRE(full["minors"].size() == 428);
    CHECK(full["minors"][0]["rows"] == json{1});
    CHECK(full["minors"][0]["valuation"] == 0);
}
