#include "zmcode/matrix.hpp"

#include "zmcode/errors.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <utility>

namespace zmcode {

namespace {

void require_same_modulus(const Matrix& a, const Matrix& b, const char* op) {
    if (a.modulus() != b.modulus()) {
        throw DimensionMismatch(std::string(op) + ": moduli differ (" + std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()) + ")");
    }
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Word modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
    if (modulus < 2 || modulus > kMaxModulus) {
        throw UnsupportedModulus("matrix modulus " + std::to_string(modulus) + " unsupported");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Word>> rows, Word modulus)
    : Matrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(), modulus) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        std::size_t c = 0;
        for (Word v : row) set(r, c++, v);
        ++r;
    }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Word modulus) {
    Matrix m(rows.size(), cols, modulus);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionMismatch("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                    " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::identity(std::size_t n, Word modulus) {
    Matrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool Matrix::is_zero() const noexcept {
    for (Word v : data_) {
        if (v != 0) return false;
    }
    return true;
}

Matrix Matrix::reduced(Word modulus) const {
    if (modulus_ % modulus != 0) {
        throw DimensionMismatch(std::to_string(modulus) + " does not divide " + std::to_string(modulus_));
    }
    Matrix out(rows_, cols_, modulus);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] % modulus;
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_modulus(a, b, "mat_mul");
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("mat_mul: cannot multiply " + shape(a) + " by " + shape(b));
    }
    const Word m = a.modulus();
    Matrix out(a.rows(), b.cols(), m);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Word acc = 0;
            for (std::size_t l = 0; l < a.cols(); ++l) acc = (acc + a(i, l) * b(l, j)) % m;
            out.set(i, j, acc);
        }
    }
    return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_modulus(a, b, "mat_add");
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("mat_add: shapes " + shape(a) + " and " + shape(b) + " differ");
    }
    Matrix out(a.rows(), a.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j) + b(i, j));
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a(i, j));
    }
    return out;
}

Vector vec_mul(std::span<const Word> x, const Matrix& m) {
    if (x.size() != m.rows()) {
        throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " times " + shape(m) + " matrix");
    }
    const Word q = m.modulus();
    Vector out(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Word xi = x[i] % q;
        if (xi == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = (out[j] + xi * m(i, j)) % q;
    }
    return out;
}

Vector mat_vec(const Matrix& m, std::span<const Word> x) {
    if (x.size() != m.cols()) {
        throw DimensionMismatch(shape(m) + " matrix times vector of length " + std::to_string(x.size()));
    }
    const Word q = m.modulus();
    Vector out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Word acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = (acc + m(i, j) * (x[j] % q)) % q;
        out[i] = acc;
    }
    return out;
}

Matrix permute_columns(const Matrix& a, std::span<const std::size_t> order) {
    if (order.size() != a.cols()) throw DimensionMismatch("column permutation has wrong length");
    Matrix out(a.rows(), a.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, order[j]));
    }
    return out;
}

std::size_t rank_mod_prime(const Matrix& m, Word p) {
    const RingSpec field(p);
    std::vector<Vector> w(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        w[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) w[i][j] = m(i, j) % p;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < w.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < w.size() && w[pivot][c] == 0) ++pivot;
        if (pivot == w.size()) continue;
        std::swap(w[pivot], w[rank]);
        const Word inv = inverse(Residue{w[rank][c]}, field).value;
        for (auto& v : w[rank]) v = field.mul(v, inv);
        for (std::size_t r = rank + 1; r < w.size(); ++r) {
            const Word f = w[r][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j) w[r][j] = field.sub(w[r][j], field.mul(f, w[rank][j]));
        }
        ++rank;
    }
    return rank;
}

bool rows_are_free(const Matrix& m, const RingSpec& ring) {
    if (m.modulus() != ring.modulus()) throw DimensionMismatch("rows_are_free: matrix and ring moduli differ");
    if (m.rows() > m.cols()) return false;
    for (const auto& f : ring.factors()) {
        if (rank_mod_prime(m, f.prime) != m.rows()) return false;
    }
    return true;
}

Matrix StandardForm::systematic() const {
    const std::size_t k = P.rows();
    Matrix out(k, k + P.cols(), P.modulus());
    for (std::size_t i = 0; i < k; ++i) {
        out.set(i, i, 1);
        for (std::size_t j = 0; j < P.cols(); ++j) out.set(i, k + j, P(i, j));
    }
    return out;
}

StandardForm standard_form(const Matrix& g, const RingSpec& ring) {
    if (g.modulus() != ring.modulus()) throw DimensionMismatch("standard_form: matrix and ring moduli differ");
    if (!ring.is_local()) {
        throw DimensionMismatch("standard_form requires a local ring; modulus " + std::to_string(ring.modulus()) +
                                " has " + std::to_string(ring.component_count()) + " components");
    }
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (k > n) throw InvalidGenerator("invalid generator matrix: more rows than columns");

    Matrix work = g;
    Matrix transform = Matrix::identity(k, ring.modulus());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    auto swap_rows = [](Matrix& a, std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Word t = a(r1, j);
            a.set(r1, j, a(r2, j));
            a.set(r2, j, t);
        }
    };
    auto swap_cols = [](Matrix& a, std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const Word t = a(i, c1);
            a.set(i, c1, a(i, c2));
            a.set(i, c2, t);
        }
    };
    auto unit_row_in = [&](std::size_t col, std::size_t from) -> std::optional<std::size_t> {
        for (std::size_t r = from; r < k; ++r) {
            if (is_unit(Residue{work(r, col)}, ring)) return r;
        }
        return std::nullopt;
    };

    for (std::size_t i = 0; i < k; ++i) {
        std::optional<std::size_t> pivot_row;
        for (std::size_t c = i; c < n; ++c) {
            pivot_row = unit_row_in(c, i);
            if (!pivot_row) continue;
            if (c != i) {
                swap_cols(work, i, c);
                std::swap(order[i], order[c]);
            }
            break;
        }
        if (!pivot_row) {
            throw InvalidGenerator("invalid generator matrix: rows are not a basis (no unit pivot for row " +
                                   std::to_string(i) + ")");
        }
        if (*pivot_row != i) {
            swap_rows(work, i, *pivot_row);
            swap_rows(transform, i, *pivot_row);
        }
        const Word inv = inverse(Residue{work(i, i)}, ring).value;
        for (std::size_t j = 0; j < n; ++j) work.set(i, j, ring.mul(work(i, j), inv));
        for (std::size_t j = 0; j < k; ++j) transform.set(i, j, ring.mul(transform(i, j), inv));
        for (std::size_t r = 0; r < k; ++r) {
            if (r == i) continue;
            const Word f = work(r, i);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) work.set(r, j, ring.sub(work(r, j), ring.mul(f, work(i, j))));
            for (std::size_t j = 0; j < k; ++j) {
                transform.set(r, j, ring.sub(transform(r, j), ring.mul(f, transform(i, j))));
            }
        }
    }

    Matrix p(k, n - k, ring.modulus());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n - k; ++j) p.set(i, j, work(i, k + j));
    }
    return StandardForm{std::move(p), std::move(order), std::move(transform)};
}

} // namespace zmcode
