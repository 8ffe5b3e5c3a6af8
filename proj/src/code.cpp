#include "zmcode/code.hpp"

#include "zmcode/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace zmcode {

namespace {

std::uint64_t require_space(Word m, std::size_t n, const EnumerationLimits& limits, const char* what) {
    const auto size = checked_pow(m, n);
    if (!size || *size > limits.max_vectors) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(m) + "^" + std::to_string(n) +
                          " vectors exceed the enumeration cap of " + std::to_string(limits.max_vectors));
    }
    return *size;
}

// Advances x through A^n lexicographically; false after the last vector.
bool next_vector(Vector& x, Word m) noexcept {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (++x[i] < m) return true;
        x[i] = 0;
    }
    return false;
}

bool orthogonal_to_all(const Vector& y, const std::vector<Vector>& family, Word m) noexcept {
    for (const auto& x : family) {
        Word acc = 0;
        for (std::size_t i = 0; i < y.size(); ++i) acc = (acc + x[i] * y[i]) % m;
        if (acc != 0) return false;
    }
    return true;
}

ControlMatrix local_control_matrix(const LinearCode& code) {
    const auto& ring = code.ring();
    const std::size_t n = code.length();
    const std::size_t k = code.rank();
    const StandardForm sf = standard_form(code.generator(), ring);

    // (−Pᵗ | I) lives in permuted coordinates: its column j belongs at original column order[j].
    Matrix h(n - k, n, ring.modulus());
    for (std::size_t i = 0; i < n - k; ++i) {
        for (std::size_t j = 0; j < k; ++j) h.set(i, sf.column_permutation[j], ring.neg(sf.P(j, i)));
        h.set(i, sf.column_permutation[k + i], 1);
    }
    return ControlMatrix::certify(code, std::move(h));
}

} // namespace

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) noexcept {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base) return std::nullopt;
        out *= base;
    }
    return out;
}

LinearCode::LinearCode(RingSpec ring, Matrix generator) : ring_(std::move(ring)), generator_(std::move(generator)) {
    if (generator_.modulus() != ring_.modulus()) {
        throw InvalidGenerator("generator modulus " + std::to_string(generator_.modulus()) +
                               " differs from ring modulus " + std::to_string(ring_.modulus()));
    }
    const std::size_t k = generator_.rows();
    const std::size_t n = generator_.cols();
    if (k == 0 || k >= n) {
        throw InvalidGenerator("rank k = " + std::to_string(k) + " must satisfy 1 <= k < n = " + std::to_string(n));
    }
    if (!rows_are_free(generator_, ring_)) throw InvalidGenerator("generator rows not a basis (rows not free)");
}

LinearCode new_code(const RingSpec& ring, const Matrix& generator) { return LinearCode(ring, generator); }

ControlMatrix ControlMatrix::certify(const LinearCode& code, Matrix h) {
    if (!verify_control(code, h)) {
        throw InternalError("control matrix certificate failed: G·Hᵗ != 0 or rows of H not free");
    }
    return ControlMatrix(std::move(h));
}

std::size_t hamming_weight(std::span<const Word> x) noexcept {
    return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Word v) { return v != 0; }));
}

std::size_t hamming_distance(std::span<const Word> x, std::span<const Word> y) {
    if (x.size() != y.size()) throw DimensionMismatch("hamming_distance: lengths differ");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i] ? 1 : 0;
    return d;
}

Vector encode(const LinearCode& code, std::span<const Word> message) {
    if (message.size() != code.rank()) {
        throw DimensionMismatch("message length " + std::to_string(message.size()) + " != k = " +
                                std::to_string(code.rank()));
    }
    return vec_mul(message, code.generator());
}

ControlMatrix control_matrix(const LinearCode& code) {
    const auto& ring = code.ring();
    if (ring.is_local()) return local_control_matrix(code);

    const std::size_t n = code.length();
    const std::size_t rows = n - code.rank();
    std::vector<Matrix> parts;
    parts.reserve(ring.component_count());
    for (const auto& f : ring.factors()) {
        // The component code keeps rank k: its generator is free over Z/p^e.
        const LinearCode component(RingSpec(f.order), code.generator().reduced(f.order));
        parts.push_back(local_control_matrix(component).matrix());
    }
    Matrix h(rows, n, ring.modulus());
    std::vector<Residue> entry(parts.size());
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t c = 0; c < parts.size(); ++c) entry[c] = Residue{parts[c](i, j)};
            h.set(i, j, crt_lift(entry, ring).value);
        }
    }
    return ControlMatrix::certify(code, std::move(h));
}

bool verify_control(const LinearCode& code, const Matrix& h) {
    if (h.modulus() != code.ring().modulus() || h.cols() != code.length() ||
        h.rows() != code.length() - code.rank()) {
        return false;
    }
    return mat_mul(code.generator(), transpose(h)).is_zero() && rows_are_free(h, code.ring());
}

std::vector<Vector> codewords(const LinearCode& code, const EnumerationLimits& limits) {
    const Word m = code.ring().modulus();
    const auto count = require_space(m, code.rank(), limits, "codeword enumeration");
    std::vector<Vector> out;
    out.reserve(count);
    Vector u(code.rank(), 0);
    do {
        out.push_back(encode(code, u));
    } while (next_vector(u, m));
    return out;
}

std::vector<Vector> orthogonal_brute_force(const RingSpec& ring, std::size_t n, const std::vector<Vector>& family,
                                           const EnumerationLimits& limits) {
    for (const auto& x : family) {
        if (x.size() != n) throw DimensionMismatch("orthogonal_brute_force: family vector of wrong length");
    }
    const Word m = ring.modulus();
    require_space(m, n, limits, "dual enumeration");
    std::vector<Vector> out;
    Vector y(n, 0);
    do {
        if (orthogonal_to_all(y, family, m)) out.push_back(y);
    } while (next_vector(y, m));
    return out;
}

std::vector<Vector> dual_brute_force(const LinearCode& code, const EnumerationLimits& limits) {
    const auto& g = code.generator();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < g.rows(); ++i) rows.emplace_back(g.row(i).begin(), g.row(i).end());
    return orthogonal_brute_force(code.ring(), code.length(), rows, limits);
}

std::size_t min_distance_enum(const LinearCode& code, const EnumerationLimits& limits) {
    const Word m = code.ring().modulus();
    const std::size_t k = code.rank();
    const std::size_t n = code.length();
    require_space(m, k, limits, "minimal distance enumeration");
    const auto& g = code.generator();

    // Odometer over messages; bumping digit i (including its wrap from m−1 to
    // 0) adds row i of G to the running codeword.
    Vector u(k, 0);
    Vector c(n, 0);
    std::size_t best = n;
    for (;;) {
        std::size_t i = k;
        bool carried_out = true;
        while (i-- > 0) {
            for (std::size_t j = 0; j < n; ++j) c[j] = (c[j] + g(i, j)) % m;
            if (++u[i] < m) {
                carried_out = false;
                break;
            }
            u[i] = 0;
        }
        if (carried_out) break;
        best = std::min(best, hamming_weight(c));
        if (best == 1) break;
    }
    return best;
}

std::size_t min_distance_columns(const Matrix& h, const EnumerationLimits& limits) {
    const Word m = h.modulus();
    const std::size_t n = h.cols();
    const std::size_t rows = h.rows();
    std::vector<Vector> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = h.column(j);

    const std::size_t max_s = std::min(limits.max_subset_size, n);
    std::vector<Vector> partial;
    std::function<bool(std::size_t, std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth,
                                                                             std::size_t target) -> bool {
        const Vector& sum = partial[depth];
        if (depth == target) {
            return std::all_of(sum.begin(), sum.end(), [](Word v) { return v == 0; });
        }
        auto& next = partial[depth + 1];
        for (std::size_t j = start; j + (target - depth) <= n; ++j) {
            for (Word a = 1; a < m; ++a) {
                for (std::size_t r = 0; r < rows; ++r) next[r] = (sum[r] + a * cols[j][r]) % m;
                if (search(j + 1, depth + 1, target)) return true;
            }
        }
        return false;
    };
    for (std::size_t s = 1; s <= max_s; ++s) {
        partial.assign(s + 1, Vector(rows, 0));
        if (search(0, 0, s)) return s;
    }
    throw CapExceeded("no dependent column set of size <= " + std::to_string(max_s) + " (subset cap " +
                      std::to_string(limits.max_subset_size) + ")");
}

std::size_t min_distance_columns(const ControlMatrix& h, const EnumerationLimits& limits) {
    return min_distance_columns(h.matrix(), limits);
}

bool biorthogonality_check(const LinearCode& code, const EnumerationLimits& limits) {
    const auto dual = dual_brute_force(code, limits);
    auto bidual = orthogonal_brute_force(code.ring(), code.length(), dual, limits);
    auto words = codewords(code, limits);
    std::sort(bidual.begin(), bidual.end());
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return bidual == words;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.ring() != b.ring() || a.length() != b.length() || a.rank() != b.rank()) return false;
    auto contained = [](const LinearCode& inner, const LinearCode& outer) {
        const auto h = control_matrix(outer);
        const auto& g = inner.generator();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            const auto s = mat_vec(h.matrix(), g.row(i));
            if (std::any_of(s.begin(), s.end(), [](Word v) { return v != 0; })) return false;
        }
        return true;
    };
    return contained(a, b) && contained(b, a);
}

DistanceResult minimal_distance(const LinearCode& code, const EnumerationLimits& limits) {
    const auto size = checked_pow(code.ring().modulus(), code.rank());
    if (size && *size <= limits.max_vectors) {
        return {min_distance_enum(code, limits), DistanceResult::Method::kEnumeration};
    }
    return {min_distance_columns(control_matrix(code), limits), DistanceResult::Method::kColumns};
}

CodeReport report(const LinearCode& code, const EnumerationLimits& limits) {
    CodeReport out;
    out.minimal_distance = minimal_distance(code, limits).distance;
    out.correction_capacity = correction_capacity(out.minimal_distance);
    out.cardinality = checked_pow(code.ring().modulus(), code.rank());
    return out;
}

} // namespace zmcode
