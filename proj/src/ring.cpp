#include "zmcode/ring.hpp"

#include "zmcode/errors.hpp"

#include <string>

namespace zmcode {

namespace {

struct Bezout {
    std::int64_t g;
    std::int64_t x; // a*x + b*y = g
};

Bezout extended_euclid(std::int64_t a, std::int64_t b) noexcept {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return {old_r, old_s};
}

// Inverse of a modulo n, gcd(a, n) = 1 assumed.
Word inverse_mod(Word a, Word n) noexcept {
    const auto [g, x] = extended_euclid(static_cast<std::int64_t>(a % n), static_cast<std::int64_t>(n));
    (void)g;
    const auto sn = static_cast<std::int64_t>(n);
    return static_cast<Word>(((x % sn) + sn) % sn);
}

} // namespace

Word gcd(Word a, Word b) noexcept {
    while (b != 0) {
        const Word t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<PrimePower> factorize(Word m) {
    std::vector<PrimePower> out;
    for (Word p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        PrimePower pp{p, 0, 1};
        while (m % p == 0) {
            m /= p;
            ++pp.exponent;
            pp.order *= p;
        }
        out.push_back(pp);
    }
    if (m > 1) out.push_back({m, 1, m});
    return out;
}

RingSpec::RingSpec(Word m) : modulus_(m) {
    if (m < 2 || m > kMaxModulus) {
        throw UnsupportedModulus("modulus " + std::to_string(m) + " outside supported range [2, " +
                                 std::to_string(kMaxModulus) + "]");
    }
    factors_ = factorize(m);
    idempotents_.reserve(factors_.size());
    for (const auto& f : factors_) {
        // e = c * (m / q) with c = (m / q)^{-1} mod q, so e ≡ 1 mod q and e ≡ 0 mod every other factor.
        const Word cofactor = m / f.order;
        const Word c = f.order == 1 ? 0 : inverse_mod(cofactor % f.order, f.order);
        idempotents_.push_back(factors_.size() == 1 ? 1 : mul(c, cofactor));
    }
}

Word RingSpec::reduce_signed(std::int64_t x) const noexcept {
    const auto sm = static_cast<std::int64_t>(modulus_);
    return static_cast<Word>(((x % sm) + sm) % sm);
}

RingSpec make_ring(Word m) { return RingSpec(m); }

bool is_unit(Residue x, const RingSpec& ring) noexcept {
    return gcd(ring.reduce(x.value), ring.modulus()) == 1;
}

Residue inverse(Residue x, const RingSpec& ring) {
    if (!is_unit(x, ring)) {
        throw NoInverse(std::to_string(x.value) + " has no inverse modulo " + std::to_string(ring.modulus()));
    }
    return Residue{inverse_mod(ring.reduce(x.value), ring.modulus())};
}

Residue project(Residue x, const RingSpec& ring, std::size_t component) {
    if (component >= ring.component_count()) {
        throw DimensionMismatch("component index " + std::to_string(component) + " out of range for modulus " +
                                std::to_string(ring.modulus()));
    }
    return Residue{x.value % ring.factors()[component].order};
}

Residue crt_lift(std::span<const Residue> components, const RingSpec& ring) {
    if (components.size() != ring.component_count()) {
        throw DimensionMismatch("crt_lift expects " + std::to_string(ring.component_count()) + " components, got " +
                                std::to_string(components.size()));
    }
    Word acc = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].value >= ring.factors()[i].order) {
            throw DimensionMismatch("component " + std::to_string(i) + " is not reduced modulo " +
                                    std::to_string(ring.factors()[i].order));
        }
        acc = ring.add(acc, ring.mul(ring.idempotents()[i], components[i].value));
    }
    return Residue{acc};
}

} // namespace zmcode
