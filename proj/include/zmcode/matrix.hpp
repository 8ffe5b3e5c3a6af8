#pragma once

#include "zmcode/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zmcode {

using Vector = std::vector<Word>;

// Dense row-major matrix over Z/mZ. Entries are kept canonically reduced.
// Zero-sized dimensions are allowed (the P block of a rank-n standard form
// has no columns).
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Word modulus);
    // Rows of (possibly unreduced) entries; all rows must have the same length.
    Matrix(std::initializer_list<std::initializer_list<Word>> rows, Word modulus);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Word modulus);
    static Matrix identity(std::size_t n, Word modulus);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] Word modulus() const noexcept { return modulus_; }

    [[nodiscard]] Word operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    // Stores value mod m.
    void set(std::size_t r, std::size_t c, Word value) noexcept { data_[r * cols_ + c] = value % modulus_; }

    [[nodiscard]] std::span<const Word> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] bool is_zero() const noexcept;

    // Entrywise reduction to a smaller modulus dividing the current one.
    [[nodiscard]] Matrix reduced(Word modulus) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    Word modulus_;
    std::vector<Word> data_;
};

[[nodiscard]] Matrix mat_mul(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix mat_add(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix transpose(const Matrix& a);

// Row vector times matrix: x · M.
[[nodiscard]] Vector vec_mul(std::span<const Word> x, const Matrix& m);
// Matrix times column vector: M · xᵗ.
[[nodiscard]] Vector mat_vec(const Matrix& m, std::span<const Word> x);

// Column j of the result is column order[j] of a.
[[nodiscard]] Matrix permute_columns(const Matrix& a, std::span<const std::size_t> order);

// Row rank of m reduced modulo the prime p.
[[nodiscard]] std::size_t rank_mod_prime(const Matrix& m, Word p);

// Rows linearly independent over Z/m: the reduction modulo each prime factor
// must have full row rank.
[[nodiscard]] bool rows_are_free(const Matrix& m, const RingSpec& ring);

struct StandardForm {
    Matrix P;                                // k × (n − k)
    std::vector<std::size_t> column_permutation; // standard column j came from original column [j]
    Matrix transform;                        // k × k, invertible

    // transform · G with columns reordered by column_permutation, i.e. (I_k | P).
    [[nodiscard]] Matrix systematic() const;
};

// Gauss–Jordan elimination with unit pivots over a local ring Z/p^e. Pivot
// search scans the current column top to bottom from the current row; if it
// has no unit, the first later column that does is swapped in.
// Throws InvalidGenerator when fewer than k unit pivots exist and
// DimensionMismatch when the ring is not local or the moduli differ.
[[nodiscard]] StandardForm standard_form(const Matrix& g, const RingSpec& ring);

} // namespace zmcode
