// zmcode: command-line front end for linear codes over Z/mZ.
//
// Exit statuses:
//   0  success
//   1  usage error
//   2  parse error (code file, vector or matrix text)
//   3  validation error (modulus, generator not a basis, shape mismatch)
//   4  decode failure (more than t errors, or an ambiguous syndrome)
//   5  enumeration or table cap exceeded
//   6  duplicate syndrome (t exceeds the correction capacity)
//   7  internal error (a checked certificate failed)
//   8  check: the supplied matrix is not a control matrix of the code

#include "zmcode/code.hpp"
#include "zmcode/decoder.hpp"
#include "zmcode/errors.hpp"
#include "zmcode/io.hpp"
#include "zmcode/simulate.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace zmcode;

enum ExitStatus : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kValidation = 3,
    kDecodeFailure = 4,
    kCapExceeded = 5,
    kDuplicateSyndrome = 6,
    kInternal = 7,
    kCheckRejected = 8,
};

struct Options {
    std::string code_path;
    std::string matrix_path;
    std::string vector_text;
    std::optional<std::size_t> t;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::size_t errors = 1;
    std::string format;
    std::uint64_t cap = std::uint64_t{1} << 24;
    std::size_t subset_cap = 6;
    bool allow_ambiguous = false;
};

EnumerationLimits limits_of(const Options& opt) { return {opt.cap, opt.subset_cap}; }

io::VectorFormat output_format(const Options& opt, const std::string& input, Word modulus) {
    if (!opt.format.empty()) return *io::parse_format_name(opt.format);
    if (modulus > 10) return io::VectorFormat::kCsv;
    return io::detect_format(input);
}

Vector read_vector(const Options& opt, Word modulus, std::size_t length) {
    if (opt.format.empty()) return io::parse_vector(opt.vector_text, modulus, length);
    return io::parse_vector(opt.vector_text, modulus, length, *io::parse_format_name(opt.format));
}

std::string method_name(DistanceResult::Method m) {
    return m == DistanceResult::Method::kEnumeration ? "enumeration" : "columns";
}

std::size_t resolve_t(const Options& opt, const LinearCode& code) {
    if (opt.t) return *opt.t;
    return correction_capacity(minimal_distance(code, limits_of(opt)).distance);
}

SyndromeTable table_for(const Options& opt, const LinearCode& code, const ControlMatrix& h) {
    const auto policy = opt.allow_ambiguous ? CollisionPolicy::kMarkAmbiguous : CollisionPolicy::kReject;
    return build_table(h, resolve_t(opt, code), policy, opt.cap);
}

int cmd_info(const Options& opt) {
    const auto desc = io::load_code_description(opt.code_path);
    const auto code = io::to_code(desc);
    const auto& ring = code.ring();
    const auto h = control_matrix(code);
    const auto limits = limits_of(opt);

    if (!desc.name.empty()) std::cout << "name: " << desc.name << '\n';
    std::cout << "n: " << code.length() << '\n'
              << "k: " << code.rank() << '\n'
              << "modulus: " << ring.modulus() << '\n'
              << "local: " << (ring.is_local() ? "yes" : "no") << '\n'
              << "components:";
    for (const auto& f : ring.factors()) std::cout << ' ' << f.prime << '^' << f.exponent;
    std::cout << "\nidempotents:";
    for (Word e : ring.idempotents()) std::cout << ' ' << e;
    std::cout << "\ncardinality: " << ring.modulus() << '^' << code.rank();
    if (const auto size = checked_pow(ring.modulus(), code.rank())) std::cout << " = " << *size;
    std::cout << '\n';

    std::optional<std::size_t> by_enum;
    std::optional<std::size_t> by_columns;
    try {
        by_enum = min_distance_enum(code, limits);
        std::cout << "d (enumeration): " << *by_enum << '\n';
    } catch (const CapExceeded& e) {
        std::cout << "d (enumeration): skipped (" << e.what() << ")\n";
    }
    try {
        by_columns = min_distance_columns(h, limits);
        std::cout << "d (columns): " << *by_columns << '\n';
    } catch (const CapExceeded& e) {
        std::cout << "d (columns): skipped (" << e.what() << ")\n";
    }
    if (by_enum && by_columns && *by_enum != *by_columns) {
        throw InternalError("minimal distance methods disagree");
    }
    const auto d = by_enum ? by_enum : by_columns;
    if (d) {
        const auto method = by_enum ? DistanceResult::Method::kEnumeration : DistanceResult::Method::kColumns;
        std::cout << "d: " << *d << " (" << method_name(method) << ")\n"
                  << "t: " << correction_capacity(*d) << '\n';
    } else {
        std::cout << "d: unknown\n";
    }
    std::cout << "H:\n" << io::format_matrix(h.matrix());
    return d ? kOk : kCapExceeded;
}

int cmd_encode(const Options& opt) {
    const auto code = io::load_code(opt.code_path);
    const Word m = code.ring().modulus();
    const auto u = read_vector(opt, m, code.rank());
    std::cout << io::format_vector(encode(code, u), m, output_format(opt, opt.vector_text, m)) << '\n';
    return kOk;
}

int cmd_decode(const Options& opt) {
    const auto code = io::load_code(opt.code_path);
    const Word m = code.ring().modulus();
    const auto r = read_vector(opt, m, code.length());
    const auto h = control_matrix(code);
    const auto table = table_for(opt, code, h);
    const auto outcome = decode(table, h, r);
    if (const auto* f = std::get_if<Failure>(&outcome)) {
        std::cout << "decode failure: " << f->message() << '\n';
        return kDecodeFailure;
    }
    const auto& c = std::get<Corrected>(outcome);
    const auto fmt = output_format(opt, opt.vector_text, m);
    std::cout << "codeword: " << io::format_vector(c.codeword, m, fmt) << '\n'
              << "error: " << io::format_vector(c.error, m, fmt) << '\n';
    return kOk;
}

int cmd_dual(const Options& opt) {
    const auto code = io::load_code(opt.code_path);
    std::cout << io::format_matrix(control_matrix(code).matrix());
    return kOk;
}

int cmd_check(const Options& opt) {
    const auto code = io::load_code(opt.code_path);
    const Matrix h = io::parse_matrix(io::read_file(opt.matrix_path), code.ring().modulus());
    if (h.rows() != code.length() - code.rank() || h.cols() != code.length()) {
        std::cout << "not a control matrix: expected shape " << code.length() - code.rank() << 'x' << code.length()
                  << ", got " << h.rows() << 'x' << h.cols() << '\n';
        return kCheckRejected;
    }
    if (!mat_mul(code.generator(), transpose(h)).is_zero()) {
        std::cout << "not a control matrix: G·H^t != 0\n";
        return kCheckRejected;
    }
    if (!rows_are_free(h, code.ring())) {
        std::cout << "not a control matrix: rows of H are not linearly independent\n";
        return kCheckRejected;
    }
    std::cout << "valid control matrix\n";
    return kOk;
}

int cmd_table(const Options& opt) {
    const auto code = io::load_code(opt.code_path);
    const Word m = code.ring().modulus();
    const auto h = control_matrix(code);
    const auto table = table_for(opt, code, h);
    const auto fmt = opt.format.empty() ? (m > 10 ? io::VectorFormat::kCsv : io::VectorFormat::kDigits)
                                        : *io::parse_format_name(opt.format);
    std::cout << "# t = " << table.capacity() << ", " << table.size() << " syndromes, " << table.ambiguous_count()
              << " ambiguous\n";
    for (const auto& [s, e] : table.entries()) {
        std::cout << io::format_vector(s.values, m, fmt) << " -> "
                  << (e ? io::format_vector(*e, m, fmt) : std::string("ambiguous")) << '\n';
    }
    return kOk;
}

int cmd_simulate(const Options& opt) {
    const auto code = io::load_code(opt.code_path);
    const auto h = control_matrix(code);
    const auto table = table_for(opt, code, h);
    const auto stats = simulate(code, h, table, {opt.trials, opt.errors, opt.seed});
    std::cout << "t: " << table.capacity() << '\n'
              << "errors per word: " << opt.errors << '\n'
              << "seed: " << opt.seed << '\n'
              << "trials: " << stats.trials << '\n'
              << "corrected: " << stats.corrected << '\n'
              << "failed: " << stats.failed << '\n'
              << "miscorrected: " << stats.miscorrected << '\n';
    return kOk;
}

int run(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const DuplicateSyndrome& e) {
        std::cerr << "duplicate syndrome: " << e.what() << '\n';
        return kDuplicateSyndrome;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kValidation;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear codes over Z/mZ: construction, analysis and syndrome decoding"};
    app.require_subcommand(1);
    Options opt;

    auto add_code = [&](CLI::App* sub) {
        sub->add_option("--code", opt.code_path, "Code description file (JSON)")->required()->check(CLI::ExistingFile);
    };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--cap", opt.cap, "Enumeration and table size cap")->capture_default_str();
        sub->add_option("--subset-cap", opt.subset_cap, "Largest column subset searched")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Vector format")->check(CLI::IsMember({"digits", "csv"}));
    };
    auto add_table = [&](CLI::App* sub) {
        sub->add_option("--t", opt.t, "Correction capacity (default: from the minimal distance)");
        sub->add_flag("--allow-ambiguous", opt.allow_ambiguous,
                      "Keep colliding syndromes as ambiguous instead of rejecting t");
    };

    auto* info = app.add_subcommand("info", "Parameters, minimal distance and control matrix");
    add_code(info);
    add_caps(info);

    auto* enc = app.add_subcommand("encode", "Encode a message of length k");
    add_code(enc);
    add_format(enc);
    enc->add_option("message", opt.vector_text, "Message vector")->required();

    auto* dec = app.add_subcommand("decode", "Syndrome-decode a received word of length n");
    add_code(dec);
    add_format(dec);
    add_caps(dec);
    add_table(dec);
    dec->add_option("received", opt.vector_text, "Received vector")->required();

    auto* dual = app.add_subcommand("dual", "Print the control matrix");
    add_code(dual);

    auto* check = app.add_subcommand("check", "Verify a user-supplied control matrix");
    add_code(check);
    check->add_option("--matrix", opt.matrix_path, "Matrix file, one comma-separated row per line")
        ->required()
        ->check(CLI::ExistingFile);

    auto* table = app.add_subcommand("table", "Dump the syndrome table");
    add_code(table);
    add_format(table);
    add_caps(table);
    add_table(table);

    auto* sim = app.add_subcommand("simulate", "Channel simulation with random symbol errors");
    add_code(sim);
    add_caps(sim);
    add_table(sim);
    sim->add_option("--trials", opt.trials, "Number of trials")->capture_default_str();
    sim->add_option("--errors", opt.errors, "Symbol errors injected per word")->capture_default_str();
    sim->add_option("--seed", opt.seed, "Seed for mt19937_64")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (*info) return run([&] { return cmd_info(opt); });
    if (*enc) return run([&] { return cmd_encode(opt); });
    if (*dec) return run([&] { return cmd_decode(opt); });
    if (*dual) return run([&] { return cmd_dual(opt); });
    if (*check) return run([&] { return cmd_check(opt); });
    if (*table) return run([&] { return cmd_table(opt); });
    if (*sim) return run([&] { return cmd_simulate(opt); });
    return kUsage;
}
