#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles
// only use modular arithmetic on plain integers and never call into the
// library routines they check.

#include "zmcode/code.hpp"
#include "zmcode/matrix.hpp"
#include "zmcode/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace zmtest {

using zmcode::Matrix;
using zmcode::Vector;
using zmcode::Word;

inline const std::vector<Vector> kExampleP = {
    {1, 0, 3, 0, 1, 3, 0, 2, 2, 0}, {1, 3, 0, 3, 2, 1, 1, 3, 3, 3}, {3, 1, 2, 0, 1, 1, 3, 2, 3, 0},
    {2, 0, 2, 2, 2, 3, 3, 3, 3, 3}, {0, 0, 3, 0, 0, 0, 2, 0, 0, 0}, {3, 1, 3, 2, 3, 3, 3, 1, 2, 2},
    {2, 0, 0, 1, 2, 1, 0, 1, 1, 2}, {2, 0, 1, 3, 1, 1, 1, 0, 3, 1}, {0, 2, 1, 1, 2, 2, 1, 3, 0, 3},
    {0, 0, 1, 2, 1, 2, 2, 0, 1, 1},
};

// The printed 10×20 control matrix of the worked Z/4 example.
inline const std::vector<Vector> kExampleH = {
    {3, 3, 1, 2, 0, 1, 2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 3, 0, 0, 3, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 2, 2, 1, 1, 0, 3, 3, 3, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 2, 0, 2, 3, 1, 3, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {3, 2, 3, 2, 0, 1, 2, 3, 2, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {1, 3, 3, 1, 0, 1, 3, 3, 2, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 3, 1, 1, 2, 1, 0, 3, 3, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {2, 1, 2, 1, 0, 3, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {2, 1, 1, 1, 0, 2, 3, 1, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 1, 0, 1, 0, 2, 2, 3, 1, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

inline const char* const kExampleCodeword = "10202230013001002303";
inline const char* const kExampleReceived = "10202130013001002303";
inline const char* const kExampleError = "00000300000000000000";
inline const Vector kExampleSyndrome = {3, 1, 3, 2, 3, 3, 3, 1, 2, 2};

inline Vector digits(const std::string& s) {
    Vector v;
    for (char c : s) v.push_back(static_cast<Word>(c - '0'));
    return v;
}

inline Matrix example_generator() {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < 10; ++i) {
        Vector row(20, 0);
        row[i] = 1;
        std::copy(kExampleP[i].begin(), kExampleP[i].end(), row.begin() + 10);
        rows.push_back(row);
    }
    return Matrix::from_rows(rows, 20, 4);
}

inline zmcode::LinearCode example_code() { return zmcode::LinearCode(zmcode::RingSpec(4), example_generator()); }

inline Matrix example_control() { return Matrix::from_rows(kExampleH, 20, 4); }

// ---- brute-force oracles -------------------------------------------------

inline std::vector<Vector> all_vectors(std::size_t n, Word m) {
    std::vector<Vector> out;
    Vector x(n, 0);
    for (;;) {
        out.push_back(x);
        std::size_t i = n;
        while (i-- > 0) {
            if (++x[i] < m) break;
            x[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

inline std::vector<std::vector<Word>> rows_of(const Matrix& g) {
    std::vector<std::vector<Word>> out;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        out.emplace_back();
        for (std::size_t j = 0; j < g.cols(); ++j) out.back().push_back(g(i, j));
    }
    return out;
}

inline Vector combine(const std::vector<Vector>& rows, const Vector& coeffs, std::size_t n, Word m) {
    Vector out(n, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) out[j] = (out[j] + coeffs[i] * rows[i][j]) % m;
    }
    return out;
}

// No nonzero coefficient vector annihilates the rows.
inline bool brute_free(const Matrix& g) {
    const auto rows = rows_of(g);
    for (const auto& a : all_vectors(g.rows(), g.modulus())) {
        if (std::all_of(a.begin(), a.end(), [](Word v) { return v == 0; })) continue;
        const auto c = combine(rows, a, g.cols(), g.modulus());
        if (std::all_of(c.begin(), c.end(), [](Word v) { return v == 0; })) return false;
    }
    return true;
}

// Span of the rows, as a set.
inline std::set<Vector> brute_span(const Matrix& g) {
    std::set<Vector> out;
    const auto rows = rows_of(g);
    for (const auto& a : all_vectors(g.rows(), g.modulus())) out.insert(combine(rows, a, g.cols(), g.modulus()));
    return out;
}

inline Word dot(const Vector& x, const Vector& y, Word m) {
    Word acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = (acc + x[i] * y[i]) % m;
    return acc;
}

// Vectors orthogonal to each element of `family`.
inline std::set<Vector> brute_orthogonal(const std::set<Vector>& family, std::size_t n, Word m) {
    std::set<Vector> out;
    for (const auto& y : all_vectors(n, m)) {
        bool ok = true;
        for (const auto& x : family) {
            if (dot(x, y, m) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(y);
    }
    return out;
}

inline std::size_t weight(const Vector& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Word x) { return x != 0; }));
}

inline std::size_t brute_min_weight(const std::set<Vector>& words) {
    std::size_t best = SIZE_MAX;
    for (const auto& w : words) {
        const auto wt = weight(w);
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

// ---- generators ----------------------------------------------------------

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Word m) {
    Matrix out(rows, cols, m);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out.set(i, j, rng() % m);
    }
    return out;
}

// Random k×n matrix whose rows pass the brute-force freeness oracle.
inline Matrix random_free_matrix(std::mt19937_64& rng, std::size_t k, std::size_t n, Word m) {
    for (;;) {
        auto g = random_matrix(rng, k, n, m);
        if (brute_free(g)) return g;
    }
}

} // namespace zmtest
