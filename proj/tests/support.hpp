#pragma once

// Shared helpers for the test suites: ring shortcuts, a seeded generator and
// small constructors for matrices written as integer literals.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "chainmdp/ring.hpp"

namespace testsupport {

using namespace chainmdp;

inline ChainRing Z(std::uint64_t n) { return ChainRing::integers_mod(n); }
inline ChainRing F4u2() { return ChainRing::make(ChainRingSpec::truncated(4, 2)); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
    bool coin() { return below(2) == 1; }

    Element element(const ChainRing& R) {
        std::vector<std::int64_t> c(R.coordinate_count());
        for (auto& x : c) x = static_cast<std::int64_t>(below(R.coordinate_modulus()));
        return R.from_coords(c);
    }
    Element unit(const ChainRing& R) {
        for (;;) {
            Element e = element(R);
            if (R.is_unit(e)) return e;
        }
    }
    Element representative(const ChainRing& R) { return R.lift(R.residue_from_index(below(R.q()))); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<Element> ints(const ChainRing& R, std::initializer_list<std::int64_t> values) {
    std::vector<Element> out;
    for (auto v : values) out.push_back(R.from_int(v));
    return out;
}

}  // namespace testsupport
