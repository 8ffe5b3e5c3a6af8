#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zmcode {

using Word = std::uint64_t;

// Largest supported modulus. Residues stay below 2^32, so a product of two
// residues always fits a Word before reduction.
inline constexpr Word kMaxModulus = 0xFFFF'FFFFull;

// An element of Z/mZ, always stored as its least non-negative representative.
// The modulus lives in the ambient RingSpec.
struct Residue {
    Word value = 0;

    friend constexpr auto operator<=>(Residue, Residue) = default;
};

struct PrimePower {
    Word prime = 0;
    unsigned exponent = 0;
    Word order = 0; // prime^exponent

    friend constexpr bool operator==(const PrimePower&, const PrimePower&) = default;
};

// The ring Z/mZ together with its decomposition into local rings
// Z/m = (+) Z/p_i^e_i, described by the complete system of orthogonal
// idempotents e_i (e_i ≡ 1 mod p_i^e_i, e_i ≡ 0 mod p_j^e_j for j != i).
class RingSpec {
public:
    // Throws UnsupportedModulus unless 2 <= m <= kMaxModulus.
    explicit RingSpec(Word m);

    [[nodiscard]] Word modulus() const noexcept { return modulus_; }
    // Ordered by increasing prime.
    [[nodiscard]] const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    [[nodiscard]] const std::vector<Word>& idempotents() const noexcept { return idempotents_; }
    [[nodiscard]] std::size_t component_count() const noexcept { return factors_.size(); }
    [[nodiscard]] bool is_local() const noexcept { return factors_.size() == 1; }

    [[nodiscard]] Word reduce(Word x) const noexcept { return x % modulus_; }
    [[nodiscard]] Word reduce_signed(std::int64_t x) const noexcept;
    [[nodiscard]] Word add(Word a, Word b) const noexcept { return (a + b) % modulus_; }
    [[nodiscard]] Word sub(Word a, Word b) const noexcept { return (a + modulus_ - b) % modulus_; }
    [[nodiscard]] Word mul(Word a, Word b) const noexcept { return (a * b) % modulus_; }
    [[nodiscard]] Word neg(Word a) const noexcept { return (modulus_ - a) % modulus_; }

    [[nodiscard]] Residue residue(Word x) const noexcept { return Residue{reduce(x)}; }

    friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
        return a.modulus_ == b.modulus_;
    }

private:
    Word modulus_;
    std::vector<PrimePower> factors_;
    std::vector<Word> idempotents_;
};

[[nodiscard]] RingSpec make_ring(Word m);

// Trial division; result ordered by increasing prime.
[[nodiscard]] std::vector<PrimePower> factorize(Word m);

[[nodiscard]] Word gcd(Word a, Word b) noexcept;

[[nodiscard]] bool is_unit(Residue x, const RingSpec& ring) noexcept;

// Throws NoInverse for non-units.
[[nodiscard]] Residue inverse(Residue x, const RingSpec& ring);

// x mod p_i^e_i, an element of the i-th local component.
// Throws DimensionMismatch when i is out of range.
[[nodiscard]] Residue project(Residue x, const RingSpec& ring, std::size_t component);

// The unique x in [0, m) with x ≡ components[i] (mod p_i^e_i) for every i.
// Throws DimensionMismatch on a length mismatch or an unreduced component.
[[nodiscard]] Residue crt_lift(std::span<const Residue> components, const RingSpec& ring);

} // namespace zmcode
