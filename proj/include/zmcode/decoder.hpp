#pragma once

#include "zmcode/code.hpp"
#include "zmcode/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace zmcode {

// H·xᵗ, n − k canonical residues.
struct Syndrome {
    Vector values;

    [[nodiscard]] bool is_zero() const noexcept;
    friend auto operator<=>(const Syndrome&, const Syndrome&) = default;
};

struct SyndromeHash {
    std::size_t operator()(const Syndrome& s) const noexcept;
};

// Throws DimensionMismatch when x has the wrong length.
[[nodiscard]] Syndrome syndrome(const Matrix& h, std::span<const Word> x);
[[nodiscard]] Syndrome syndrome(const ControlMatrix& h, std::span<const Word> x);

[[nodiscard]] bool is_codeword(const ControlMatrix& h, std::span<const Word> x);

// Σ_{w <= t} C(n, w)·(m − 1)^w, or nullopt on overflow.
[[nodiscard]] std::optional<std::uint64_t> low_weight_count(std::size_t n, std::size_t t, Word m) noexcept;

// Visits every vector of weight <= t in A^n: by weight, then support
// positions lexicographically, then symbol values lexicographically.
// The visitor returns false to stop early.
void for_each_low_weight(std::size_t n, std::size_t t, const RingSpec& ring,
                         const std::function<bool(const Vector&)>& visit);

[[nodiscard]] std::vector<Vector> enumerate_low_weight(std::size_t n, std::size_t t, const RingSpec& ring);

// What build_table does when two distinct error patterns of weight <= t
// share a syndrome.
enum class CollisionPolicy {
    kReject,        // DuplicateSyndrome error: t exceeds the correction capacity
    kMarkAmbiguous, // keep the syndrome with no leader; decoding it fails
};

class SyndromeTable {
public:
    [[nodiscard]] std::size_t capacity() const noexcept { return t_; }
    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    // Distinct syndromes seen, ambiguous ones included.
    [[nodiscard]] std::size_t size() const noexcept { return leaders_.size(); }
    [[nodiscard]] std::size_t ambiguous_count() const noexcept { return ambiguous_; }

    // Leader for s; nullptr when s is absent or ambiguous.
    [[nodiscard]] const Vector* find(const Syndrome& s) const;
    [[nodiscard]] bool is_ambiguous(const Syndrome& s) const;

    // Entries in syndrome order; ambiguous entries carry nullopt.
    [[nodiscard]] std::vector<std::pair<Syndrome, std::optional<Vector>>> entries() const;

private:
    friend SyndromeTable build_table(const Matrix& h, std::size_t t, CollisionPolicy policy, std::uint64_t max_entries);

    std::size_t t_ = 0;
    std::size_t n_ = 0;
    std::size_t ambiguous_ = 0;
    std::unordered_map<Syndrome, std::optional<Vector>, SyndromeHash> leaders_;
};

inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 24;

// Syndrome of every error pattern of weight <= t. Throws CapExceeded when the
// pattern count exceeds max_entries, and DuplicateSyndrome on a collision
// under CollisionPolicy::kReject.
[[nodiscard]] SyndromeTable build_table(const Matrix& h, std::size_t t,
                                        CollisionPolicy policy = CollisionPolicy::kReject,
                                        std::uint64_t max_entries = kDefaultTableCap);
[[nodiscard]] SyndromeTable build_table(const ControlMatrix& h, std::size_t t,
                                        CollisionPolicy policy = CollisionPolicy::kReject,
                                        std::uint64_t max_entries = kDefaultTableCap);

struct Corrected {
    Vector codeword;
    Vector error;
};

struct Failure {
    enum class Reason { kTooManyErrors, kAmbiguous } reason = Reason::kTooManyErrors;
    [[nodiscard]] std::string message() const;
};

using DecodeOutcome = std::variant<Corrected, Failure>;

// Looks up the syndrome of r and returns r − e for the stored leader e.
// Throws DimensionMismatch on a length mismatch and InternalError if the
// corrected word has a nonzero syndrome.
[[nodiscard]] DecodeOutcome decode(const SyndromeTable& table, const ControlMatrix& h, std::span<const Word> received);

} // namespace zmcode
