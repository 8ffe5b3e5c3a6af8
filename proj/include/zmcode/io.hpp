#pragma once

#include "zmcode/code.hpp"
#include "zmcode/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace zmcode::io {

// Code description file, JSON:
//
//   {
//     "name": "optional label",
//     "modulus": 4,
//     "n": 20,
//     "k": 10,
//     "generator": [[1, 0, ...], ...]   // k rows of n integers in [0, modulus)
//   }
struct CodeDescription {
    std::string name;
    Word modulus = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Vector> generator;
};

// Throws ParseError on malformed JSON, missing fields, shape mismatches or
// out-of-range entries.
[[nodiscard]] CodeDescription parse_code_description(std::string_view text);
[[nodiscard]] CodeDescription load_code_description(const std::string& path);
[[nodiscard]] std::string dump_code_description(const CodeDescription& desc);

// Validated code; throws InvalidGenerator / UnsupportedModulus on failure.
[[nodiscard]] LinearCode to_code(const CodeDescription& desc);
[[nodiscard]] LinearCode load_code(const std::string& path);
[[nodiscard]] CodeDescription describe(const LinearCode& code, std::string name = {});

enum class VectorFormat { kDigits, kCsv };

// "10202230013001002303" (only when m <= 10) or "1,0,2,0,...".
[[nodiscard]] VectorFormat detect_format(std::string_view text);
[[nodiscard]] std::optional<VectorFormat> parse_format_name(std::string_view name);

// Throws ParseError on a bad symbol, a symbol >= m, digits with m > 10, or a
// length other than `length`.
[[nodiscard]] Vector parse_vector(std::string_view text, Word modulus, std::size_t length);
[[nodiscard]] Vector parse_vector(std::string_view text, Word modulus, std::size_t length, VectorFormat format);

// Digits format with m > 10 throws ParseError.
[[nodiscard]] std::string format_vector(const Vector& v, Word modulus, VectorFormat format);

// One row per line, comma-separated.
[[nodiscard]] std::string format_matrix(const Matrix& m);
// Inverse of format_matrix; blank lines and lines starting with '#' are skipped.
[[nodiscard]] Matrix parse_matrix(std::string_view text, Word modulus);

[[nodiscard]] std::string read_file(const std::string& path);

} // namespace zmcode::io
