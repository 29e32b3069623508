#include "chainmdp/ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace chainmdp {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, little-endian, used only for modulus validation
// and for picking default moduli.
using FpPoly = std::vector<std::uint64_t>;

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

FpPoly poly_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod_prime(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        trim(a);
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(out), m, p);
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree d is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= d/2.
bool is_irreducible_mod_p(FpPoly f, std::uint64_t p) {
    trim(f);
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    FpPoly xp = poly_mod({0, 1}, f, p);
    for (std::size_t i = 1; i <= d / 2; ++i) {
        // xp <- xp^p mod f
        FpPoly acc{1}, base = xp;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        xp = acc;
        FpPoly diff = xp;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> first_irreducible(std::uint32_t p, std::uint32_t degree) {
    std::vector<std::uint64_t> low(degree, 0);
    for (;;) {
        FpPoly f(low.begin(), low.end());
        f.push_back(1);
        if (is_irreducible_mod_p(f, p)) return std::vector<std::uint32_t>(f.begin(), f.end());
        std::size_t i = 0;
        while (i < degree && ++low[i] == p) low[i++] = 0;
        if (i == degree) fail(ErrorCode::InternalInvariant, "no irreducible polynomial found");
    }
}

std::string ring_key(const ChainRingSpec& s) {
    std::ostringstream os;
    os << (s.family == Family::Galois ? 'G' : 'T') << ':' << s.p << ':' << s.r << ':' << s.s << ':' << s.q << ':'
       << s.nu << ':' << (s.convention == RepresentativeConvention::Teichmuller ? 't' : 'c');
    for (auto c : s.modulus) os << ':' << c;
    return os.str();
}

}  // namespace

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

namespace detail {

struct RingData {
    ChainRingSpec spec;  // normalized
    std::uint32_t p = 2;
    std::uint32_t nu = 1;
    std::uint32_t h = 1;  // residue degree
    std::uint64_t q = 2;
    std::uint32_t cmod = 2;  // coordinate modulus
    std::size_t ncoords = 1;
    // Galois: x^s = sum_i reduce[i] x^i.  Truncated: the same for the residue
    // field modulus g of degree h, with coefficients mod p.
    std::vector<std::uint64_t> reduce;
    const RingData* residue = nullptr;
    std::vector<std::uint64_t> unit_order_primes;
    std::uint64_t unit_order = 1;
    Element xi;
    std::string name;

    Element make_zero() const {
        Element e;
        e.ring_ = this;
        return e;
    }

    // --- coefficient arithmetic ---------------------------------------------

    // Multiply two length-d vectors as polynomials modulo x^d - sum reduce[i] x^i,
    // coefficient modulus m.
    static void poly_mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t d,
                         const std::vector<std::uint64_t>& red, std::uint64_t m) {
        std::uint64_t t[2 * kMaxCoords] = {};
        for (std::size_t i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < d; ++j) t[i + j] = (t[i + j] + std::uint64_t(a[i]) * b[j]) % m;
        }
        for (std::size_t k = 2 * d - 2; k >= d && k < 2 * d; --k) {
            const std::uint64_t c = t[k];
            if (!c) continue;
            for (std::size_t i = 0; i < d; ++i) t[k - d + i] = (t[k - d + i] + c * red[i]) % m;
        }
        for (std::size_t i = 0; i < d; ++i) out[i] = static_cast<std::uint32_t>(t[i]);
    }

    Element mul(const Element& a, const Element& b) const {
        Element out = make_zero();
        if (spec.family == Family::Galois) {
            poly_mul(a.c_.data(), b.c_.data(), out.c_.data(), ncoords, reduce, cmod);
            return out;
        }
        std::uint32_t prod[kMaxCoords];
        for (std::uint32_t i = 0; i < nu; ++i) {
            const std::uint32_t* ai = a.c_.data() + i * h;
            if (std::all_of(ai, ai + h, [](std::uint32_t v) { return v == 0; })) continue;
            for (std::uint32_t j = 0; i + j < nu; ++j) {
                poly_mul(ai, b.c_.data() + j * h, prod, h, reduce, p);
                std::uint32_t* dst = out.c_.data() + (i + j) * h;
                for (std::uint32_t t = 0; t < h; ++t) dst[t] = (dst[t] + prod[t]) % p;
            }
        }
        return out;
    }

    std::uint32_t valuation(const Element& a) const {
        if (spec.family == Family::Truncated) {
            for (std::uint32_t i = 0; i < nu; ++i)
                for (std::uint32_t t = 0; t < h; ++t)
                    if (a.c_[i * h + t]) return i;
            return nu;
        }
        std::uint32_t best = nu;
        for (std::size_t i = 0; i < ncoords; ++i) {
            std::uint32_t c = a.c_[i];
            if (!c) continue;
            std::uint32_t v = 0;
            while (c % p == 0) {
                c /= p;
                ++v;
            }
            best = std::min(best, v);
        }
        return best;
    }

    Element divide_gamma(const Element& a, std::uint32_t e) const {
        Element out = make_zero();
        if (spec.family == Family::Truncated) {
            for (std::uint32_t i = e; i < nu; ++i)
                for (std::uint32_t t = 0; t < h; ++t) out.c_[(i - e) * h + t] = a.c_[i * h + t];
            return out;
        }
        std::uint32_t pe = 1;
        for (std::uint32_t i = 0; i < e; ++i) pe *= p;
        for (std::size_t i = 0; i < ncoords; ++i) out.c_[i] = a.c_[i] / pe;
        return out;
    }

    Element power(Element base, std::uint64_t e) const {
        Element result = make_zero();
        result.c_[0] = 1;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    ResidueElement project(const Element& a) const {
        Element out = residue->make_zero();
        for (std::size_t i = 0; i < residue->ncoords; ++i) out.c_[i] = a.c_[i] % p;
        return out;
    }

    // Multiplicatively closed lift: the unique root of x^q = x over c.
    Element teichmuller_lift(const ResidueElement& c) const {
        Element x = make_zero();
        for (std::size_t i = 0; i < residue->ncoords; ++i) x.c_[i] = c.c_[i];
        if (spec.family == Family::Truncated || nu == 1) return x;  // constants are already fixed
        for (std::uint32_t step = 0; step <= nu + 1; ++step) {
            Element y = power(x, q);
            if (y == x) return x;
            x = y;
        }
        fail(ErrorCode::InternalInvariant, "Teichmuller iteration did not stabilize");
    }

    Element lift(const ResidueElement& c) const {
        if (spec.convention == RepresentativeConvention::CanonicalDigits) {
            Element x = make_zero();
            x.c_[0] = c.c_[0];
            return x;
        }
        return teichmuller_lift(c);
    }

    std::uint64_t order_of(const Element& u) const {
        std::uint64_t ord = unit_order;
        for (auto ell : unit_order_primes) {
            while (ord % ell == 0 && power(u, ord / ell).is_one()) ord /= ell;
        }
        return ord;
    }
};

}  // namespace detail

// --- spec helpers ------------------------------------------------------------

ChainRingSpec ChainRingSpec::galois(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::vector<std::uint32_t> modulus,
                                    std::optional<RepresentativeConvention> convention) {
    ChainRingSpec spec;
    spec.family = Family::Galois;
    spec.p = p;
    spec.r = r;
    spec.s = s;
    spec.modulus = std::move(modulus);
    spec.convention = convention;
    return spec;
}

ChainRingSpec ChainRingSpec::integers_mod(std::uint32_t p, std::uint32_t r,
                                          std::optional<RepresentativeConvention> convention) {
    return galois(p, r, 1, {}, convention);
}

ChainRingSpec ChainRingSpec::truncated(std::uint64_t q, std::uint32_t nu) {
    ChainRingSpec spec;
    spec.family = Family::Truncated;
    spec.q = q;
    spec.nu = nu;
    return spec;
}

// --- construction ------------------------------------------------------------

namespace {

struct Registry {
    std::recursive_mutex mutex;
    std::map<std::string, std::unique_ptr<detail::RingData>> rings;
};

Registry& registry() {
    static Registry r;
    return r;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t n) {
    require(n >= 2, ErrorCode::InvalidSpec, "expected a prime power, got " + std::to_string(n));
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = n;
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    require(n == 1, ErrorCode::InvalidSpec, "expected a prime power");
    require(p < (1u << 31), ErrorCode::InvalidSpec, "characteristic too large");
    return {static_cast<std::uint32_t>(p), e};
}

ChainRingSpec normalize(const ChainRingSpec& in) {
    ChainRingSpec s = in;
    if (s.family == Family::Truncated) {
        auto [p, h] = split_prime_power(s.q);
        require(s.nu >= 1, ErrorCode::InvalidSpec, "nu must be positive");
        require(std::uint64_t(s.nu) * h <= kMaxCoords, ErrorCode::InvalidSpec, "ring too large for coordinate storage");
        require(!(s.convention && *s.convention == RepresentativeConvention::CanonicalDigits && h > 1),
                ErrorCode::InvalidConvention, "canonical digits need a prime residue field");
        if (s.nu == 1) {
            // F_q[u]/(u) is the field F_q itself.
            return normalize(ChainRingSpec::galois(p, 1, h, {}, std::nullopt));
        }
        s.p = p;
        s.r = 1;
        s.s = h;
        s.modulus = first_irreducible(p, h);
        s.convention = RepresentativeConvention::Teichmuller;
        return s;
    }
    require(is_prime(s.p), ErrorCode::InvalidSpec, "p must be prime");
    require(s.r >= 1 && s.s >= 1, ErrorCode::InvalidSpec, "r and s must be positive");
    require(s.s <= kMaxCoords, ErrorCode::InvalidSpec, "degree s too large");
    const std::uint64_t pr = saturating_pow(s.p, s.r);
    require(pr < (1ull << 31), ErrorCode::InvalidSpec, "p^r too large");
    if (s.convention && *s.convention == RepresentativeConvention::CanonicalDigits && s.s > 1)
        fail(ErrorCode::InvalidConvention, "canonical digits are only defined for Z_{p^r}");
    if (s.s == 1) {
        if (!s.modulus.empty()) {
            require(s.modulus.size() == 2 && s.modulus[1] % pr == 1, ErrorCode::InvalidSpec,
                    "modulus must be monic of degree 1");
        }
        // Z_{p^r}[x]/(x - a) is Z_{p^r} for every a.
        s.modulus = {0, 1};
    } else if (s.modulus.empty()) {
        s.modulus = first_irreducible(s.p, s.s);
    } else {
        require(s.modulus.size() == s.s + 1, ErrorCode::InvalidSpec, "modulus must have s+1 coefficients");
        for (auto& c : s.modulus) c = static_cast<std::uint32_t>(c % pr);
        require(s.modulus.back() == 1, ErrorCode::InvalidSpec, "modulus must be monic");
        FpPoly red(s.modulus.begin(), s.modulus.end());
        for (auto& c : red) c %= s.p;
        if (!is_irreducible_mod_p(red, s.p))
            fail(ErrorCode::RejectedModulus, "modulus is reducible modulo p");
    }
    if (s.r == 1 || !s.convention)
        s.convention = s.s == 1 ? RepresentativeConvention::CanonicalDigits : RepresentativeConvention::Teichmuller;
    if (s.r == 1 && s.s == 1) s.convention = RepresentativeConvention::CanonicalDigits;
    s.q = saturating_pow(s.p, s.s);
    s.nu = s.r;
    return s;
}

std::string make_name(const ChainRingSpec& s) {
    std::ostringstream os;
    if (s.family == Family::Truncated) {
        os << 'F' << s.q << "[u]/(u^" << s.nu << ')';
    } else if (s.r == 1) {
        os << 'F' << s.q;
    } else if (s.s == 1) {
        os << 'Z' << saturating_pow(s.p, s.r);
    } else {
        os << "GR(" << saturating_pow(s.p, s.r) << ',' << s.s << ')';
    }
    if (s.family == Family::Galois && s.r > 1 && s.s == 1 && s.convention == RepresentativeConvention::Teichmuller)
        os << "[teichmuller]";
    return os.str();
}

}  // namespace

ChainRing ChainRing::make(const ChainRingSpec& raw) {
    const ChainRingSpec spec = normalize(raw);
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    const std::string key = ring_key(spec);
    if (auto it = reg.rings.find(key); it != reg.rings.end()) return ChainRing(it->second.get());

    auto data = std::make_unique<detail::RingData>();
    auto& d = *data;
    d.spec = spec;
    d.p = spec.p;
    d.nu = spec.nu;
    d.h = spec.s;
    d.q = spec.q;
    const std::uint64_t pr = saturating_pow(spec.p, spec.r);
    if (spec.family == Family::Galois) {
        d.cmod = static_cast<std::uint32_t>(pr);
        d.ncoords = spec.s;
    } else {
        d.cmod = spec.p;
        d.ncoords = std::size_t(spec.nu) * spec.s;
    }
    const std::uint64_t red_mod = spec.family == Family::Galois ? pr : spec.p;
    d.reduce.resize(spec.s);
    for (std::uint32_t i = 0; i < spec.s; ++i) d.reduce[i] = (red_mod - spec.modulus[i] % red_mod) % red_mod;
    d.name = make_name(spec);

    detail::RingData* raw_ptr = data.get();
    reg.rings.emplace(key, std::move(data));

    if (spec.nu == 1 && spec.family == Family::Galois) {
        d.residue = raw_ptr;
    } else {
        std::vector<std::uint32_t> fmod(spec.modulus.begin(), spec.modulus.end());
        for (auto& c : fmod) c %= spec.p;
        d.residue = ChainRing::make(ChainRingSpec::galois(spec.p, 1, spec.s, fmod)).data();
    }

    // |R*| = q^{nu-1}(q-1)
    d.unit_order = saturating_pow(d.q, d.nu - 1);
    const std::uint64_t qm1 = d.q - 1;
    require(d.unit_order <= std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(qm1, 1),
            ErrorCode::InvalidSpec, "ring too large");
    d.unit_order *= qm1;
    d.unit_order_primes = prime_factors(qm1);
    if (d.nu > 1 && std::find(d.unit_order_primes.begin(), d.unit_order_primes.end(), d.p) == d.unit_order_primes.end())
        d.unit_order_primes.push_back(d.p);
    if (d.unit_order <= 1) d.unit_order_primes.clear();

    // Teichmuller generator: lift of the first primitive residue element.
    const ChainRing residue(d.residue);
    if (d.q == 2) {
        d.xi = d.teichmuller_lift(residue.one());
    } else {
        for (std::uint64_t idx = 2; idx < d.q; ++idx) {
            ResidueElement c = residue.residue_from_index(idx);
            if (d.residue->order_of(c) == d.q - 1) {
                d.xi = d.teichmuller_lift(c);
                break;
            }
        }
    }
    require(d.xi.ring_data() != nullptr, ErrorCode::InternalInvariant, "no primitive residue element");
    return ChainRing(raw_ptr);
}

ChainRing ChainRing::integers_mod(std::uint64_t modulus) {
    auto [p, r] = split_prime_power(modulus);
    return make(ChainRingSpec::integers_mod(p, r));
}

// --- ChainRing accessors ------------------------------------------------------

const ChainRingSpec& ChainRing::spec() const { return d_->spec; }
std::string ChainRing::name() const { return d_->name; }
Family ChainRing::family() const { return d_->spec.family; }
RepresentativeConvention ChainRing::convention() const { return *d_->spec.convention; }
std::uint32_t ChainRing::p() const { return d_->p; }
std::uint32_t ChainRing::nu() const { return d_->nu; }
std::uint32_t ChainRing::residue_degree() const { return d_->h; }
std::uint64_t ChainRing::q() const { return d_->q; }
std::uint64_t ChainRing::size() const { return saturating_pow(d_->q, d_->nu); }
std::size_t ChainRing::coordinate_count() const { return d_->ncoords; }
std::uint32_t ChainRing::coordinate_modulus() const { return d_->cmod; }

Element ChainRing::zero() const { return d_->make_zero(); }

Element ChainRing::one() const {
    Element e = d_->make_zero();
    e.c_[0] = 1;
    return e;
}

Element ChainRing::gamma() const {
    Element e = d_->make_zero();
    if (d_->nu == 1) return e;
    if (family() == Family::Galois)
        e.c_[0] = d_->p;
    else
        e.c_[d_->h] = 1;
    return e;
}

Element ChainRing::gamma_power(std::uint32_t e) const {
    if (e >= d_->nu) return zero();
    return pow(gamma(), e);
}

Element ChainRing::from_int(std::int64_t value) const {
    Element e = d_->make_zero();
    const std::int64_t m = family() == Family::Galois ? d_->cmod : d_->p;
    e.c_[0] = static_cast<std::uint32_t>(((value % m) + m) % m);
    return e;
}

Element ChainRing::from_coords(std::span<const std::int64_t> coords) const {
    require(coords.size() == d_->ncoords, ErrorCode::InvalidSpec,
            "expected " + std::to_string(d_->ncoords) + " coordinates for " + d_->name);
    Element e = d_->make_zero();
    const std::int64_t m = d_->cmod;
    for (std::size_t i = 0; i < coords.size(); ++i)
        e.c_[i] = static_cast<std::uint32_t>(((coords[i] % m) + m) % m);
    return e;
}

Element ChainRing::pow(const Element& a, std::uint64_t e) const { return d_->power(a, e); }

std::uint32_t ChainRing::valuation(const Element& a) const { return d_->valuation(a); }

Element ChainRing::inverse(const Element& a) const {
    if (d_->valuation(a) != 0) fail(ErrorCode::NotAUnit, to_string(a) + " is not a unit in " + d_->name);
    // Invert in the residue field, then Newton-lift: x <- x(2 - a x).
    const auto* res = d_->residue;
    ResidueElement c = d_->project(a);
    Element x = d_->teichmuller_lift(res->power(c, res->q - 2));
    const Element two = from_int(2);
    for (std::uint32_t prec = 1; prec < d_->nu; prec *= 2) x = x * (two - a * x);
    return x;
}

std::pair<std::uint32_t, Element> ChainRing::split_valuation(const Element& a) const {
    const std::uint32_t v = d_->valuation(a);
    if (v >= d_->nu) return {d_->nu, one()};
    Element w = d_->divide_gamma(a, v);
    // The quotient's upper digits are arbitrary; it is still a unit with gamma^v w = a.
    return {v, w};
}

Element ChainRing::divide_by_gamma_power(const Element& a, std::uint32_t e) const {
    require(d_->valuation(a) >= e, ErrorCode::InternalInvariant, "division by gamma power not exact");
    return d_->divide_gamma(a, e);
}

ChainRing ChainRing::residue_field() const { return ChainRing(d_->residue); }

ResidueElement ChainRing::project(const Element& a) const {
    require(a.ring_ == d_, ErrorCode::MixedRings, "element from another ring");
    return d_->project(a);
}

Element ChainRing::lift(const ResidueElement& c) const {
    require(c.ring_ == d_->residue, ErrorCode::MixedRings, "expected a residue field element");
    return d_->lift(c);
}

bool ChainRing::is_representative(const Element& a) const { return d_->lift(d_->project(a)) == a; }

std::vector<Element> ChainRing::representatives() const {
    std::vector<Element> out;
    out.reserve(d_->q);
    const ChainRing res(d_->residue);
    for (std::uint64_t i = 0; i < d_->q; ++i) out.push_back(d_->lift(res.residue_from_index(i)));
    return out;
}

std::vector<Element> ChainRing::gamma_adic_decompose(const Element& a) const {
    std::vector<Element> digits;
    digits.reserve(d_->nu);
    Element rest = a;
    for (std::uint32_t i = 0; i < d_->nu; ++i) {
        Element t = d_->lift(d_->project(rest));
        digits.push_back(t);
        rest = d_->divide_gamma(rest - t, 1);
    }
    return digits;
}

Element ChainRing::gamma_adic_compose(std::span<const Element> digits) const {
    require(digits.size() == d_->nu, ErrorCode::InvalidSpec, "expected nu digits");
    Element acc = zero();
    Element g = one();
    const Element gam = gamma();
    for (const auto& t : digits) {
        require(t.ring_ == d_, ErrorCode::MixedRings, "digit from another ring");
        if (!is_representative(t)) fail(ErrorCode::DigitNotInT, to_string(t) + " is not in T");
        acc += t * g;
        g *= gam;
    }
    return acc;
}

Element ChainRing::teichmuller_generator() const { return d_->xi; }

std::uint64_t ChainRing::multiplicative_order(const Element& unit) const {
    if (!is_unit(unit)) fail(ErrorCode::NotAUnit, "order of a non-unit");
    return d_->order_of(unit);
}

std::uint64_t ChainRing::unit_group_order() const { return d_->unit_order; }

std::uint64_t ChainRing::residue_index(const ResidueElement& c) const {
    require(c.ring_ == d_->residue, ErrorCode::MixedRings, "expected a residue field element");
    std::uint64_t idx = 0;
    for (std::size_t i = d_->residue->ncoords; i-- > 0;) idx = idx * d_->p + c.c_[i];
    return idx;
}

ResidueElement ChainRing::residue_from_index(std::uint64_t index) const {
    const auto* res = d_->residue;
    require(index < d_->q, ErrorCode::InvalidSpec, "residue index out of range");
    Element e = res->make_zero();
    for (std::size_t i = 0; i < res->ncoords; ++i) {
        e.c_[i] = static_cast<std::uint32_t>(index % d_->p);
        index /= d_->p;
    }
    return e;
}

std::vector<Element> ChainRing::all_elements(std::uint64_t limit) const {
    const std::uint64_t n = size();
    if (n > limit) fail(ErrorCode::BudgetExceeded, "ring has " + std::to_string(n) + " elements");
    std::vector<Element> out;
    out.reserve(n);
    Element e = zero();
    for (std::uint64_t i = 0; i < n; ++i) {
        out.push_back(e);
        std::size_t k = 0;
        while (k < d_->ncoords && ++e.c_[k] == d_->cmod) e.c_[k++] = 0;
    }
    return out;
}

// --- Element -------------------------------------------------------------------

ChainRing Element::ring() const { return ChainRing(ring_); }

std::span<const std::uint32_t> Element::coords() const {
    return {c_.data(), ring_ ? ring_->ncoords : std::size_t{0}};
}

bool Element::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Element::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

void check_same_ring(const Element& a, const Element& b) {
    if (a.ring_data() != b.ring_data() || a.ring_data() == nullptr)
        fail(ErrorCode::MixedRings, "operands belong to different rings");
}

Element Element::operator-() const {
    Element out = *this;
    const std::uint32_t m = ring_->cmod;
    for (std::size_t i = 0; i < ring_->ncoords; ++i) out.c_[i] = c_[i] ? m - c_[i] : 0;
    return out;
}

Element operator+(const Element& a, const Element& b) {
    check_same_ring(a, b);
    Element out = a;
    const std::uint32_t m = a.ring_->cmod;
    for (std::size_t i = 0; i < a.ring_->ncoords; ++i) {
        std::uint32_t s = a.c_[i] + b.c_[i];
        out.c_[i] = s >= m ? s - m : s;
    }
    return out;
}

Element operator-(const Element& a, const Element& b) {
    check_same_ring(a, b);
    Element out = a;
    const std::uint32_t m = a.ring_->cmod;
    for (std::size_t i = 0; i < a.ring_->ncoords; ++i)
        out.c_[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + m - b.c_[i];
    return out;
}

Element operator*(const Element& a, const Element& b) {
    check_same_ring(a, b);
    return a.ring_->mul(a, b);
}

bool operator==(const Element& a, const Element& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

std::string to_string(const Element& a) {
    if (!a.ring_data()) return "<null>";
    const ChainRing R = a.ring();
    std::ostringstream os;
    if (R.family() == Family::Galois && R.spec().s == 1) {
        os << a.coords()[0];
        return os.str();
    }
    os << '[';
    if (R.family() == Family::Galois) {
        for (std::size_t i = 0; i < a.coords().size(); ++i) os << (i ? "," : "") << a.coords()[i];
    } else {
        const std::uint32_t h = R.residue_degree();
        for (std::uint32_t b = 0; b < R.nu(); ++b) {
            std::uint64_t idx = 0;
            for (std::uint32_t t = h; t-- > 0;) idx = idx * R.p() + a.coords()[b * h + t];
            os << (b ? "," : "") << idx;
        }
    }
    os << ']';
    return os.str();
}

}  // namespace chainmdp
