#pragma once

#include "zmcode/matrix.hpp"
#include "zmcode/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace zmcode {

// Caps for the brute-force routines. Exceeding a cap is a CapExceeded error,
// never a silent truncation.
struct EnumerationLimits {
    std::uint64_t max_vectors = std::uint64_t{1} << 24;
    std::size_t max_subset_size = 6;
};

// A free (n, k)-code over Z/m with 1 <= k < n, given by a generator matrix
// whose rows form a basis.
class LinearCode {
public:
    // Throws InvalidGenerator when the rows are not free or k is not in [1, n).
    LinearCode(RingSpec ring, Matrix generator);

    [[nodiscard]] const RingSpec& ring() const noexcept { return ring_; }
    [[nodiscard]] const Matrix& generator() const noexcept { return generator_; }
    [[nodiscard]] std::size_t length() const noexcept { return generator_.cols(); }
    [[nodiscard]] std::size_t rank() const noexcept { return generator_.rows(); }

private:
    RingSpec ring_;
    Matrix generator_;
};

[[nodiscard]] LinearCode new_code(const RingSpec& ring, const Matrix& generator);

// A generator matrix of the dual code: G·Hᵗ = 0 and the rows of H are free.
// Only constructible through control_matrix or a successful verify_control.
class ControlMatrix {
public:
    [[nodiscard]] const Matrix& matrix() const noexcept { return h_; }
    [[nodiscard]] std::size_t rows() const noexcept { return h_.rows(); }
    [[nodiscard]] std::size_t length() const noexcept { return h_.cols(); }
    [[nodiscard]] Word modulus() const noexcept { return h_.modulus(); }

    // Throws InternalError unless h is a control matrix of code.
    static ControlMatrix certify(const LinearCode& code, Matrix h);

private:
    explicit ControlMatrix(Matrix h) : h_(std::move(h)) {}
    Matrix h_;
};

struct CodeReport {
    std::size_t minimal_distance = 0;
    std::size_t correction_capacity = 0;
    // m^k, or nullopt when it overflows 64 bits.
    std::optional<std::uint64_t> cardinality;
};

[[nodiscard]] constexpr std::size_t correction_capacity(std::size_t minimal_distance) noexcept {
    return minimal_distance == 0 ? 0 : (minimal_distance - 1) / 2;
}

// base^exp, or nullopt on overflow.
[[nodiscard]] std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) noexcept;

[[nodiscard]] std::size_t hamming_weight(std::span<const Word> x) noexcept;
[[nodiscard]] std::size_t hamming_distance(std::span<const Word> x, std::span<const Word> y);

// u·G. Throws DimensionMismatch when u has the wrong length.
[[nodiscard]] Vector encode(const LinearCode& code, std::span<const Word> message);

// H = (−Pᵗ | I_{n−k}) from the standard form over a local ring, mapped back to
// the original column order. Over a composite modulus the control matrix of
// each local component is built and the results are CRT-lifted entrywise.
// The result is certified against both control-matrix conditions.
[[nodiscard]] ControlMatrix control_matrix(const LinearCode& code);

// G·Hᵗ = 0 and the rows of H free; false on a shape mismatch.
[[nodiscard]] bool verify_control(const LinearCode& code, const Matrix& h);

// All codewords, in odometer order of the message (last symbol fastest).
[[nodiscard]] std::vector<Vector> codewords(const LinearCode& code, const EnumerationLimits& limits = {});

// Every y in A^n orthogonal to all rows of G, by exhaustive enumeration in
// lexicographic order.
[[nodiscard]] std::vector<Vector> dual_brute_force(const LinearCode& code, const EnumerationLimits& limits = {});

// Every y in A^n orthogonal to every vector of `family`, by exhaustive
// enumeration in lexicographic order.
[[nodiscard]] std::vector<Vector> orthogonal_brute_force(const RingSpec& ring, std::size_t n,
                                                         const std::vector<Vector>& family,
                                                         const EnumerationLimits& limits = {});

// Minimum weight over the m^k − 1 nonzero codewords.
[[nodiscard]] std::size_t min_distance_enum(const LinearCode& code, const EnumerationLimits& limits = {});

// Smallest s such that some s columns of H admit a dependency with all s
// coefficients nonzero.
[[nodiscard]] std::size_t min_distance_columns(const Matrix& h, const EnumerationLimits& limits = {});
[[nodiscard]] std::size_t min_distance_columns(const ControlMatrix& h, const EnumerationLimits& limits = {});

// C^⊥⊥ computed by two exhaustive passes equals the codeword set of C.
[[nodiscard]] bool biorthogonality_check(const LinearCode& code, const EnumerationLimits& limits = {});

// Codeword-set equality, decided by membership through each other's control
// matrix.
[[nodiscard]] bool same_code(const LinearCode& a, const LinearCode& b);

// Minimal distance by enumeration when m^k fits the cap, otherwise by the
// column method.
struct DistanceResult {
    std::size_t distance = 0;
    enum class Method { kEnumeration, kColumns } method = Method::kEnumeration;
};
[[nodiscard]] DistanceResult minimal_distance(const LinearCode& code, const EnumerationLimits& limits = {});

[[nodiscard]] CodeReport report(const LinearCode& code, const EnumerationLimits& limits = {});

} // namespace zmcode
