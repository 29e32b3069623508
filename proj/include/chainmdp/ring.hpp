#pragma once

// Finite commutative chain rings: Galois rings Z_{p^r}[x]/(f) and truncated
// polynomial rings F_q[u]/(u^nu).  Rings are interned, so a ChainRing is a
// cheap handle and two handles compare equal iff they describe the same ring.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chainmdp/error.hpp"

namespace chainmdp {

inline constexpr std::size_t kMaxCoords = 12;

enum class Family { Galois, Truncated };

/// Which transversal of the residue field plays the role of the digit set T.
enum class RepresentativeConvention { Teichmuller, CanonicalDigits };

struct ChainRingSpec {
    Family family = Family::Galois;
    // Galois ring GR(p^r, s) = Z_{p^r}[x]/(modulus); modulus is little-endian,
    // monic of degree s.  Empty modulus selects the first monic polynomial
    // (in lexicographic order) whose reduction mod p is irreducible.
    std::uint32_t p = 2;
    std::uint32_t r = 1;
    std::uint32_t s = 1;
    std::vector<std::uint32_t> modulus;
    // Truncated polynomial ring F_q[u]/(u^nu).
    std::uint64_t q = 2;
    std::uint32_t nu = 1;
    std::optional<RepresentativeConvention> convention;

    static ChainRingSpec galois(std::uint32_t p, std::uint32_t r, std::uint32_t s,
                                std::vector<std::uint32_t> modulus = {},
                                std::optional<RepresentativeConvention> convention = std::nullopt);
    static ChainRingSpec integers_mod(std::uint32_t p, std::uint32_t r,
                                      std::optional<RepresentativeConvention> convention = std::nullopt);
    static ChainRingSpec truncated(std::uint64_t q, std::uint32_t nu);
};

namespace detail {
struct RingData;
}

class ChainRing;

/// An element of a chain ring.  Coordinates are canonical, so equality is
/// coordinate equality.  Galois rings store s integers in [0, p^r) (basis
/// 1, x, ..., x^{s-1}); truncated rings store nu blocks of h digits mod p,
/// block i being the F_q coefficient of u^i.
class Element {
public:
    Element() = default;

    ChainRing ring() const;
    const detail::RingData* ring_data() const { return ring_; }
    std::span<const std::uint32_t> coords() const;
    bool is_zero() const;
    bool is_one() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }
    Element& operator*=(const Element& b) { return *this = *this * b; }
    friend bool operator==(const Element& a, const Element& b);

private:
    friend struct detail::RingData;
    friend class ChainRing;

    const detail::RingData* ring_ = nullptr;
    std::array<std::uint32_t, kMaxCoords> c_{};
};

/// Element of the residue field R/m.  The residue field is itself modelled as
/// a chain ring with nu = 1, so residue elements are ordinary elements of
/// `ChainRing::residue_field()`.
using ResidueElement = Element;

class ChainRing {
public:
    /// Builds (or looks up) the ring described by `spec`.
    /// Throws RejectedModulus for a modulus with reducible reduction mod p and
    /// InvalidConvention for CanonicalDigits outside Z_{p^r}.
    static ChainRing make(const ChainRingSpec& spec);
    static ChainRing integers_mod(std::uint64_t modulus);  // Z_N for a prime power N
    static ChainRing prime_field(std::uint32_t p) { return integers_mod(p); }

    ChainRing() = default;
    explicit ChainRing(const detail::RingData* data) : d_(data) {}

    const detail::RingData* data() const { return d_; }
    bool valid() const { return d_ != nullptr; }
    const ChainRingSpec& spec() const;
    std::string name() const;

    Family family() const;
    RepresentativeConvention convention() const;
    std::uint32_t p() const;
    std::uint32_t nu() const;
    std::uint32_t residue_degree() const;  // h with q = p^h
    std::uint64_t q() const;
    /// |R| = q^nu, saturated at UINT64_MAX.
    std::uint64_t size() const;
    bool is_field() const { return nu() == 1; }
    std::size_t coordinate_count() const;
    std::uint32_t coordinate_modulus() const;

    Element zero() const;
    Element one() const;
    Element gamma() const;
    Element gamma_power(std::uint32_t e) const;
    Element from_int(std::int64_t value) const;
    /// Coordinates are reduced into range; the count must match coordinate_count().
    Element from_coords(std::span<const std::int64_t> coords) const;

    Element pow(const Element& a, std::uint64_t e) const;
    std::uint32_t valuation(const Element& a) const;
    bool is_unit(const Element& a) const { return valuation(a) == 0; }
    Element inverse(const Element& a) const;  // NotAUnit
    /// a = gamma^e * w with w a unit; for a = 0 returns (nu, 1).
    std::pair<std::uint32_t, Element> split_valuation(const Element& a) const;
    /// Some c with gamma^e * c = a; requires valuation(a) >= e.
    Element divide_by_gamma_power(const Element& a, std::uint32_t e) const;

    ChainRing residue_field() const;
    ResidueElement project(const Element& a) const;
    Element lift(const ResidueElement& c) const;  // representative in T
    bool is_representative(const Element& a) const;
    std::vector<Element> representatives() const;  // T, ordered by residue index

    std::vector<Element> gamma_adic_decompose(const Element& a) const;
    Element gamma_adic_compose(std::span<const Element> digits) const;  // DigitNotInT

    /// Generator of the multiplicative group of the Teichmuller set.
    Element teichmuller_generator() const;
    std::uint64_t multiplicative_order(const Element& unit) const;
    std::uint64_t unit_group_order() const;

    /// Residue-field elements are indexed by sum d_i p^i over their digits.
    std::uint64_t residue_index(const ResidueElement& c) const;
    ResidueElement residue_from_index(std::uint64_t index) const;

    /// All ring elements; BudgetExceeded when |R| > limit.
    std::vector<Element> all_elements(std::uint64_t limit = 1u << 20) const;

    friend bool operator==(const ChainRing& a, const ChainRing& b) { return a.d_ == b.d_; }

private:
    const detail::RingData* d_ = nullptr;
};

/// Throws MixedRings unless both elements live in the same ring.
void check_same_ring(const Element& a, const Element& b);

std::string to_string(const Element& a);

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace chainmdp
