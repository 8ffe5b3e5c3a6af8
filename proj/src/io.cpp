#include "zmcode/io.hpp"

#include "zmcode/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace zmcode::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

Word parse_symbol(std::string_view token, Word modulus) {
    token = trim(token);
    Word value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("invalid symbol '" + std::string(token) + "'");
    }
    if (value >= modulus) {
        throw ParseError("symbol " + std::to_string(value) + " is not below the modulus " + std::to_string(modulus));
    }
    return value;
}

template <typename T>
T required(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("code description: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("code description: field '") + key + "': " + e.what());
    }
}

} // namespace

CodeDescription parse_code_description(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("code description: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("code description: top level must be an object");

    CodeDescription desc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("code description: field 'name' must be a string");
        desc.name = j["name"].get<std::string>();
    }
    const auto modulus = required<std::int64_t>(j, "modulus");
    const auto n = required<std::int64_t>(j, "n");
    const auto k = required<std::int64_t>(j, "k");
    if (modulus < 2) throw ParseError("code description: modulus must be at least 2");
    if (n < 1 || k < 1) throw ParseError("code description: n and k must be positive");
    desc.modulus = static_cast<Word>(modulus);
    desc.n = static_cast<std::size_t>(n);
    desc.k = static_cast<std::size_t>(k);

    const auto rows = required<std::vector<std::vector<std::int64_t>>>(j, "generator");
    if (rows.size() != desc.k) {
        throw ParseError("code description: generator has " + std::to_string(rows.size()) + " rows, k = " +
                         std::to_string(desc.k));
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != desc.n) {
            throw ParseError("code description: generator row " + std::to_string(r) + " has " +
                             std::to_string(rows[r].size()) + " entries, n = " + std::to_string(desc.n));
        }
        Vector row;
        row.reserve(desc.n);
        for (auto v : rows[r]) {
            if (v < 0 || static_cast<Word>(v) >= desc.modulus) {
                throw ParseError("code description: generator entry " + std::to_string(v) + " outside [0, " +
                                 std::to_string(desc.modulus) + ")");
            }
            row.push_back(static_cast<Word>(v));
        }
        desc.generator.push_back(std::move(row));
    }
    return desc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CodeDescription load_code_description(const std::string& path) { return parse_code_description(read_file(path)); }

std::string dump_code_description(const CodeDescription& desc) {
    json j;
    if (!desc.name.empty()) j["name"] = desc.name;
    j["modulus"] = desc.modulus;
    j["n"] = desc.n;
    j["k"] = desc.k;
    j["generator"] = desc.generator;
    return j.dump(2) + "\n";
}

LinearCode to_code(const CodeDescription& desc) {
    RingSpec ring(desc.modulus);
    return LinearCode(ring, Matrix::from_rows(desc.generator, desc.n, desc.modulus));
}

LinearCode load_code(const std::string& path) { return to_code(load_code_description(path)); }

CodeDescription describe(const LinearCode& code, std::string name) {
    CodeDescription desc;
    desc.name = std::move(name);
    desc.modulus = code.ring().modulus();
    desc.n = code.length();
    desc.k = code.rank();
    const auto& g = code.generator();
    for (std::size_t i = 0; i < g.rows(); ++i) desc.generator.emplace_back(g.row(i).begin(), g.row(i).end());
    return desc;
}

VectorFormat detect_format(std::string_view text) {
    return trim(text).find(',') == std::string_view::npos ? VectorFormat::kDigits : VectorFormat::kCsv;
}

std::optional<VectorFormat> parse_format_name(std::string_view name) {
    if (name == "digits") return VectorFormat::kDigits;
    if (name == "csv") return VectorFormat::kCsv;
    return std::nullopt;
}

Vector parse_vector(std::string_view text, Word modulus, std::size_t length) {
    const auto format = modulus > 10 ? VectorFormat::kCsv : detect_format(text);
    return parse_vector(text, modulus, length, format);
}

Vector parse_vector(std::string_view text, Word modulus, std::size_t length, VectorFormat format) {
    text = trim(text);
    Vector out;
    if (format == VectorFormat::kDigits) {
        if (modulus > 10) {
            throw ParseError("digit-string vectors need modulus <= 10; use comma-separated symbols for modulus " +
                             std::to_string(modulus));
        }
        for (char ch : text) out.push_back(parse_symbol(std::string_view(&ch, 1), modulus));
    } else {
        std::size_t start = 0;
        for (;;) {
            const auto comma = text.find(',', start);
            out.push_back(parse_symbol(text.substr(start, comma - start), modulus));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    if (out.size() != length) {
        throw ParseError("vector has length " + std::to_string(out.size()) + ", expected " + std::to_string(length));
    }
    return out;
}

std::string format_vector(const Vector& v, Word modulus, VectorFormat format) {
    std::string out;
    if (format == VectorFormat::kDigits) {
        if (modulus > 10) throw ParseError("digit-string vectors need modulus <= 10");
        for (Word x : v) out += static_cast<char>('0' + x);
        return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += std::to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

Matrix parse_matrix(std::string_view text, Word modulus) {
    std::vector<Vector> rows;
    std::size_t cols = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const auto line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line.front() == '#') continue;
        const auto width = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
        if (rows.empty()) cols = width;
        if (width != cols) throw ParseError("matrix row " + std::to_string(rows.size()) + " has a different width");
        rows.push_back(parse_vector(line, modulus, cols, VectorFormat::kCsv));
    }
    if (rows.empty()) throw ParseError("matrix text has no rows");
    return Matrix::from_rows(rows, cols, modulus);
}

} // namespace zmcode::io
