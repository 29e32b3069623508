#include "chainmdp/json_io.hpp"

#include <charconv>

namespace chainmdp::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
    }
}

std::uint64_t parse_number(std::string_view digits, const std::string& whole) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        fail(ErrorCode::ParseError, "unrecognized ring shorthand '" + whole + "'");
    return v;
}

}  // namespace

ChainRing ring_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.size() < 2 || (s[0] != 'z' && s[0] != 'f'))
            fail(ErrorCode::ParseError, "unrecognized ring shorthand '" + s + "'");
        const std::uint64_t n = parse_number(std::string_view(s).substr(1), s);
        const ChainRing R = ChainRing::integers_mod(n);
        if (s[0] == 'f' && !R.is_field()) fail(ErrorCode::InvalidSpec, "'" + s + "' is not a prime field");
        return R;
    }
    const auto family = field<std::string>(j, "family");
    if (family == "truncated")
        return ChainRing::make(ChainRingSpec::truncated(field<std::uint64_t>(j, "q"), field<std::uint32_t>(j, "nu")));
    if (family != "galois") fail(ErrorCode::ParseError, "unknown ring family '" + family + "'");
    std::optional<RepresentativeConvention> convention;
    if (j.contains("convention")) {
        const auto c = field<std::string>(j, "convention");
        if (c == "teichmuller")
            convention = RepresentativeConvention::Teichmuller;
        else if (c == "canonical")
            convention = RepresentativeConvention::CanonicalDigits;
        else
            fail(ErrorCode::ParseError, "unknown convention '" + c + "'");
    }
    std::vector<std::uint32_t> modulus;
    if (j.contains("modulus")) modulus = field<std::vector<std::uint32_t>>(j, "modulus");
    return ChainRing::make(ChainRingSpec::galois(field<std::uint32_t>(j, "p"), field<std::uint32_t>(j, "r"),
                                                 field<std::uint32_t>(j, "s"), std::move(modulus), convention));
}

json ring_to_json(const ChainRing& ring) {
    const ChainRingSpec& spec = ring.spec();
    if (spec.family == Family::Truncated) return {{"family", "truncated"}, {"q", spec.q}, {"nu", spec.nu}};
    return {{"family", "galois"},
            {"p", spec.p},
            {"r", spec.r},
            {"s", spec.s},
            {"modulus", spec.modulus},
            {"convention", ring.convention() == RepresentativeConvention::Teichmuller ? "teichmuller" : "canonical"}};
}

Element element_from_json(const ChainRing& ring, const json& j) {
    try {
        if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
        const auto coords = j.get<std::vector<std::int64_t>>();
        if (coords.size() != ring.coordinate_count())
            fail(ErrorCode::ParseError, "element needs " + std::to_string(ring.coordinate_count()) + " coordinates");
        return ring.from_coords(coords);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad element: ") + e.what());
    }
}

json element_to_json(const Element& e) {
    const auto c = e.coords();
    if (c.size() == 1) return c[0];
    return json(std::vector<std::uint32_t>(c.begin(), c.end()));
}

namespace {

json entries_json(const RingMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RingMatrix entries_from_json(const ChainRing& ring, const json& rows, std::optional<std::size_t> cols_hint) {
    if (!rows.is_array()) fail(ErrorCode::ParseError, "matrix entries must be an array of rows");
    const std::size_t m = rows.size();
    std::size_t n = cols_hint.value_or(m > 0 && rows[0].is_array() ? rows[0].size() : 0);
    RingMatrix out(ring, m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) fail(ErrorCode::ParseError, "ragged matrix rows");
        for (std::size_t c = 0; c < n; ++c) out(i, c) = element_from_json(ring, rows[i][c]);
    }
    return out;
}

}  // namespace

json matrix_to_json(const RingMatrix& m) {
    return {{"ring", ring_to_json(m.ring())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries_json(m)}};
}

RingMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring")) fail(ErrorCode::ParseError, "matrix needs a ring");
    return matrix_from_json(ring_from_json(j.at("ring")), j);
}

RingMatrix matrix_from_json(const ChainRing& ring, const json& j) {
    if (j.is_array()) return entries_from_json(ring, j, std::nullopt);
    if (j.contains("ring") && !(ring_from_json(j.at("ring")) == ring))
        fail(ErrorCode::MixedRings, "matrix ring differs from the enclosing ring");
    const auto rows = field<std::size_t>(j, "rows");
    const auto cols = field<std::size_t>(j, "cols");
    RingMatrix out = entries_from_json(ring, j.contains("entries") ? j.at("entries") : json::array(), cols);
    if (out.rows() != rows) fail(ErrorCode::ParseError, "row count differs from 'rows'");
    return out;
}

json code_to_json(const PolyMatrix& encoder) {
    json coeffs = json::array();
    for (const auto& c : encoder.coeffs()) coeffs.push_back(entries_json(c));
    json claimed = {{"k", encoder.rows()}};
    if (is_reduced(encoder)) claimed["delta"] = gamma_degree(encoder);
    return {{"ring", ring_to_json(encoder.ring())},
            {"n", encoder.cols()},
            {"encoder", {{"coeffs", std::move(coeffs)}}},
            {"claimed", std::move(claimed)}};
}

PolyMatrix encoder_from_json(const json& j) {
    const ChainRing R = ring_from_json(field<json>(j, "ring"));
    const auto n = field<std::size_t>(j, "n");
    const json enc = field<json>(j, "encoder");
    const json coeffs = field<json>(enc, "coeffs");
    if (!coeffs.is_array() || coeffs.empty()) fail(ErrorCode::ParseError, "encoder needs at least one coefficient");
    std::vector<RingMatrix> cs;
    for (const auto& c : coeffs) {
        cs.push_back(matrix_from_json(R, c));
        if (cs.back().cols() != n) fail(ErrorCode::ParseError, "coefficient width differs from n");
        if (cs.back().rows() != cs.front().rows()) fail(ErrorCode::ParseError, "coefficients differ in row count");
    }
    const std::size_t k = cs.front().rows();
    PolyMatrix g(R, k, n, std::move(cs));
    if (j.contains("claimed")) {
        const json& claimed = j.at("claimed");
        if (claimed.contains("k") && field<std::size_t>(claimed, "k") != k)
            fail(ErrorCode::ClaimMismatch, "claimed k = " + claimed.at("k").dump() + " but the encoder has " +
                                               std::to_string(k) + " rows");
        if (claimed.contains("delta")) {
            const auto delta = field<std::size_t>(claimed, "delta");
            const std::size_t actual = gamma_degree(g);
            if (delta != actual)
                fail(ErrorCode::ClaimMismatch, "claimed delta = " + std::to_string(delta) +
                                                   " but the gamma-degree is " + std::to_string(actual));
        }
    }
    return g;
}

json toeplitz_to_json(const ToeplitzSpec& t) {
    json row = json::array();
    for (const auto& e : t.first_row) row.push_back(element_to_json(e));
    return {{"ring", ring_to_json(t.ring)}, {"size", t.size()}, {"first_row", std::move(row)}};
}

ToeplitzSpec toeplitz_from_json(const json& j) {
    ToeplitzSpec t{ring_from_json(field<json>(j, "ring")), {}};
    const json row = field<json>(j, "first_row");
    if (!row.is_array() || row.empty()) fail(ErrorCode::ParseError, "first_row must be a nonempty array");
    for (const auto& e : row) t.first_row.push_back(element_from_json(t.ring, e));
    if (j.contains("size") && field<std::size_t>(j, "size") != t.size())
        fail(ErrorCode::ParseError, "size differs from the length of first_row");
    return t;
}

json certificate_to_json(const ToeplitzSpec& t, bool with_minors) {
    json out = {{"spec", toeplitz_to_json(t)},
                {"superregular", is_gamma_superregular(t)},
                {"reverse_superregular", is_reverse_gamma_superregular(t)}};
    if (with_minors) {
        json minors = json::array();
        for (const auto& m : superregular_certificate(t))
            minors.push_back({{"rows", m.rows}, {"cols", m.cols}, {"valuation", m.valuation}});
        out["minors"] = std::move(minors);
    }
    return out;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

}  // namespace chainmdp::io
