// grqft -- command-line surface over the Galois ring Fourier library:
// ring inspection, polynomial search and validation, trace tables,
// discriminant matrices, transform emission, the verification suite,
// the one-query hidden-element demo, and integer CRT decomposition.
//
// Exit codes: 0 success (or all checks passed), 1 verification
// failure, 2 invalid input (bad spec, malformed file, cap exceeded).

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grqft/grqft.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::string digits;
        for (const char ch : token) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw grqft::SpecOutOfRange("expected a nonnegative integer, got \"" + token +
                                            "\"");
            }
            digits += ch;
        }
        if (digits.empty()) {
            throw grqft::SpecOutOfRange("empty entry in integer list \"" + text + "\"");
        }
        values.push_back(std::stoull(digits));
    }
    return values;
}

/// --ring accepts a JSON file path or an inline "p,s,m[,h0,h1,...]".
grqft::RingSpec parse_ring_arg(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw grqft::SpecOutOfRange("cannot read ring file " + arg);
        return grqft::ring_spec_from_json(grqft::Json::parse(in));
    }
    const auto values = parse_uint_list(arg);
    if (values.size() < 3) {
        throw grqft::SpecOutOfRange("inline ring spec needs p,s,m[,h...]; got \"" + arg +
                                    "\"");
    }
    grqft::RingSpec spec{values[0], values[1], values[2], {}};
    spec.h.assign(values.begin() + 3, values.end());
    return spec;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw grqft::SpecOutOfRange("cannot open output file " + out_path);
    out << content;
}

void emit_json(const grqft::Json& j, const std::string& out_path) {
    emit(j.dump() + "\n", out_path);
}

std::string join_elements(const std::vector<grqft::GrElement>& elements) {
    std::string out;
    for (const auto& e : elements) {
        if (!out.empty()) out += ';';
        out += grqft::to_string(e);
    }
    return out;
}

int cmd_info(const grqft::RingSpec& requested, const std::string& format,
             const std::string& out_path, std::uint64_t cap) {
    const grqft::GaloisRing ring(requested);
    const std::uint64_t n = ring.cardinality();
    if (n > cap) {
        throw grqft::DimensionCapExceeded("exhaustive classification needs " +
                                          std::to_string(n) + " elements, above cap " +
                                          std::to_string(cap) + " (raise with --cap)");
    }
    std::uint64_t units = 0;
    std::uint64_t zero_divisors = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        switch (ring.classify(ring.element_from_index(i))) {
            case grqft::ElementClass::Unit: ++units; break;
            case grqft::ElementClass::ZeroDivisor: ++zero_divisors; break;
            case grqft::ElementClass::Zero: break;
        }
    }
    const auto teich = ring.teichmuller_set();
    const auto table = grqft::trace_table(ring);

    if (format == "json") {
        grqft::Json teich_json = grqft::Json::array();
        for (const auto& t : teich) teich_json.push_back(t.coeffs);
        emit_json(grqft::Json{{"ring", grqft::to_json(ring.spec())},
                              {"cardinality", n},
                              {"characteristic", ring.char_mod()},
                              {"units", units},
                              {"zero_divisors", zero_divisors},
                              {"teichmuller", std::move(teich_json)},
                              {"trace_table", grqft::to_json(table)}},
                  out_path);
        return kExitOk;
    }
    std::string csv;
    csv += "ring," + grqft::csv_quote(grqft::ring_label(ring.spec())) + "\n";
    csv += "cardinality," + std::to_string(n) + "\n";
    csv += "characteristic," + std::to_string(ring.char_mod()) + "\n";
    csv += "units," + std::to_string(units) + "\n";
    csv += "zero_divisors," + std::to_string(zero_divisors) + "\n";
    csv += "teichmuller," + grqft::csv_quote(join_elements(teich)) + "\n";
    csv += "trace_modulus," + std::to_string(table.modulus) + "\n";
    csv += "trace_values";
    for (const auto v : table.values) csv += "," + std::to_string(v);
    csv += "\n";
    emit(csv, out_path);
    return kExitOk;
}

int cmd_find_poly(std::uint64_t p, std::uint64_t s, std::uint64_t m, const std::string& format,
                  const std::string& out_path, std::uint64_t cap) {
    const auto h = grqft::find_basic_primitive(p, s, m, cap);
    if (format == "json") {
        emit_json(grqft::to_json(grqft::RingSpec{p, s, m, h}), out_path);
        return kExitOk;
    }
    std::string csv = "h";
    for (const auto c : h) csv += "," + std::to_string(c);
    emit(csv + "\n", out_path);
    return kExitOk;
}

int cmd_validate_poly(const grqft::RingSpec& spec, const std::string& format,
                      const std::string& out_path) {
    const auto report = grqft::validate_basic_primitive(spec);
    if (format == "json") {
        emit_json(grqft::Json{{"ring", grqft::to_json(spec)},
                              {"irreducible_mod_p", report.irreducible_mod_p},
                              {"primitive_root_mod_p", report.primitive_root_mod_p},
                              {"primitive_root_lifted", report.primitive_root_lifted},
                              {"valid", report.passed()},
                              {"failing_check", report.failing_check()}},
                  out_path);
    } else {
        std::string csv;
        csv += std::string("irreducible_mod_p,") + (report.irreducible_mod_p ? "true" : "false") + "\n";
        csv += std::string("primitive_root_mod_p,") +
               (report.primitive_root_mod_p ? "true" : "false") + "\n";
        csv += std::string("primitive_root_lifted,") +
               (report.primitive_root_lifted ? "true" : "false") + "\n";
        csv += std::string("valid,") + (report.passed() ? "true" : "false") + "\n";
        emit(csv, out_path);
    }
    return report.passed() ? kExitOk : kExitVerificationFailure;
}

int cmd_trace_table(const grqft::RingSpec& spec, const std::string& format,
                    const std::string& out_path) {
    const grqft::GaloisRing ring(spec);
    const auto table = grqft::trace_table(ring);
    if (format == "json") {
        emit_json(grqft::to_json(table), out_path);
        return kExitOk;
    }
    std::string csv = "modulus," + std::to_string(table.modulus) + "\nvalues";
    for (const auto v : table.values) csv += "," + std::to_string(v);
    emit(csv + "\n", out_path);
    return kExitOk;
}

int cmd_discriminant(const grqft::RingSpec& spec, const std::string& format,
                     const std::string& out_path) {
    const grqft::GaloisRing ring(spec);
    const auto d = grqft::build_discriminant(ring);
    if (format == "json") {
        emit_json(grqft::to_json(d), out_path);
        return kExitOk;
    }
    std::string csv = "modulus," + std::to_string(d.entries.modulus) + "\n";
    csv += "entries\n" + grqft::mod_matrix_csv(d.entries);
    csv += "inverse\n" + grqft::mod_matrix_csv(d.inverse);
    emit(csv, out_path);
    return kExitOk;
}

int cmd_qft(const grqft::RingSpec& spec, bool direct, bool factored, bool both,
            const std::string& format, const std::string& out_path, std::uint64_t cap) {
    if (static_cast<int>(direct) + static_cast<int>(factored) + static_cast<int>(both) != 1) {
        throw grqft::SpecOutOfRange("choose exactly one of --direct, --factored, --both");
    }
    const grqft::GaloisRing ring(spec);
    if (both) {
        const auto d = grqft::qft_direct(ring, cap);
        const auto f = grqft::qft_factored(ring, cap);
        const double deviation = grqft::max_abs_diff(d, f);
        if (format == "json") {
            emit_json(grqft::Json{{"direct", grqft::to_json(d)},
                                  {"factored", grqft::to_json(f)},
                                  {"max_abs_diff", grqft::scrub_zero(deviation)}},
                      out_path);
        } else {
            emit("direct\n" + grqft::matrix_csv(d) + "factored\n" + grqft::matrix_csv(f) +
                     "max_abs_diff," + grqft::format_double(deviation) + "\n",
                 out_path);
        }
        return kExitOk;
    }
    const auto matrix = direct ? grqft::qft_direct(ring, cap) : grqft::qft_factored(ring, cap);
    if (format == "json") {
        emit_json(grqft::to_json(matrix), out_path);
    } else {
        emit(grqft::matrix_csv(matrix), out_path);
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& ring_args, const std::string& format,
               const std::string& out_path, std::uint64_t cap, std::uint64_t seed) {
    std::vector<grqft::RingSpec> specs;
    if (ring_args.empty()) {
        specs = grqft::default_spec_set();
    } else {
        for (const auto& arg : ring_args) specs.push_back(parse_ring_arg(arg));
    }
    grqft::VerifyOptions opts;
    opts.cap = cap;
    opts.seed = seed;
    const auto report = grqft::run_all(specs, opts);
    if (format == "json") {
        emit_json(grqft::to_json(report), out_path);
    } else {
        emit(grqft::report_csv(report), out_path);
    }
    return report.all_passed() ? kExitOk : kExitVerificationFailure;
}

int cmd_hidden_linear(const grqft::RingSpec& spec, const std::string& r_arg, bool random_r,
                      std::uint64_t seed, const std::string& format,
                      const std::string& out_path, std::uint64_t cap) {
    if (r_arg.empty() == !random_r) {
        throw grqft::SpecOutOfRange("choose exactly one of --r <coeffs> or --random");
    }
    const grqft::GaloisRing ring(spec);
    grqft::GrElement hidden;
    if (random_r) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> draw(0, ring.cardinality() - 1);
        hidden = ring.element_from_index(draw(rng));
    } else {
        hidden = ring.from_coeffs(parse_uint_list(r_arg));
    }
    auto oracle = grqft::make_oracle(ring, hidden);
    const auto result = grqft::recover_r(ring, oracle, cap);
    if (format == "json") {
        emit_json(grqft::recovery_json(ring.spec(), hidden, result), out_path);
        return kExitOk;
    }
    std::string csv;
    csv += "r_hidden," + grqft::csv_quote(grqft::to_string(hidden)) + "\n";
    csv += "r_recovered," + grqft::csv_quote(grqft::to_string(result.r)) + "\n";
    csv += "queries," + std::to_string(result.queries) + "\n";
    csv += "amplitude," + grqft::format_double(result.amplitude) + "\n";
    emit(csv, out_path);
    return kExitOk;
}

int cmd_crt_decompose(std::uint64_t mod, const std::string& format,
                      const std::string& out_path) {
    if (mod < 2) throw grqft::SpecOutOfRange("modulus must be at least 2");
    if (mod > (1ULL << 31)) {
        throw grqft::SpecOutOfRange("modulus above 2^31 not supported by trial division");
    }
    const auto factors = grqft::factorize(mod);
    std::string iso = "Z_" + std::to_string(mod) + " ≅ ";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint64_t q = 1;
        for (std::uint64_t e = 0; e < factors[i].second; ++e) q *= factors[i].first;
        if (i != 0) iso += " ⊕ ";
        iso += "Z_" + std::to_string(q);
    }
    if (format == "json") {
        grqft::Json factor_json = grqft::Json::array();
        for (const auto& [p, e] : factors) {
            std::uint64_t q = 1;
            for (std::uint64_t k = 0; k < e; ++k) q *= p;
            factor_json.push_back(grqft::Json{{"p", p}, {"n", e}, {"q", q}});
        }
        emit_json(grqft::Json{{"modulus", mod},
                              {"factors", std::move(factor_json)},
                              {"isomorphism", iso}},
                  out_path);
        return kExitOk;
    }
    std::string csv = "p,n,q\n";
    for (const auto& [p, e] : factors) {
        std::uint64_t q = 1;
        for (std::uint64_t k = 0; k < e; ++k) q *= p;
        csv += std::to_string(p) + "," + std::to_string(e) + "," + std::to_string(q) + "\n";
    }
    emit(csv, out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Galois ring arithmetic and Fourier transforms"};
    app.require_subcommand(1);

    std::string ring_arg;
    std::vector<std::string> verify_rings;
    std::string format = "json";
    std::string out_path;
    std::uint64_t cap = grqft::kDefaultDimensionCap;
    std::uint64_t seed = 20260823;
    std::uint64_t p = 0, s = 0, m = 0;
    bool direct = false, factored = false, both = false;
    std::string r_arg;
    bool random_r = false;
    std::uint64_t crt_mod = 0;

    const auto add_common = [&](CLI::App* sub, bool with_ring) {
        if (with_ring) {
            sub->add_option("--ring", ring_arg,
                            "ring spec: JSON file path or inline p,s,m[,h...]")
                ->required();
        }
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
        sub->add_option("--cap", cap, "dimension cap for matrix-sized work");
    };

    auto* info = app.add_subcommand("info", "ring summary: counts, Teichmuller set, traces");
    add_common(info, true);

    auto* find_poly = app.add_subcommand("find-poly", "search the smallest defining polynomial");
    find_poly->add_option("-p,--prime", p, "prime p")->required();
    find_poly->add_option("-s,--exponent", s, "characteristic exponent s")->required();
    find_poly->add_option("-m,--degree", m, "extension degree m")->required();
    add_common(find_poly, false);

    auto* validate = app.add_subcommand("validate-poly", "check a defining polynomial");
    add_common(validate, true);

    auto* trace = app.add_subcommand("trace-table", "trace of each basis power");
    add_common(trace, true);

    auto* disc = app.add_subcommand("discriminant", "trace bilinear-form matrix and inverse");
    add_common(disc, true);

    auto* qft = app.add_subcommand("qft", "emit the Fourier matrix");
    add_common(qft, true);
    qft->add_flag("--direct", direct, "entrywise character construction");
    qft->add_flag("--factored", factored, "tensor-power times basis-change construction");
    qft->add_flag("--both", both, "emit both constructions and their max difference");

    auto* verify = app.add_subcommand("verify", "run the full property-check suite");
    verify->add_option("--ring", verify_rings,
                       "ring spec (repeatable); omit to use the default set");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "write output to this file instead of stdout");
    verify->add_option("--cap", cap, "dimension cap for matrix-sized work");
    verify->add_option("--seed", seed, "seed for sampled checks");

    auto* hidden = app.add_subcommand("hidden-linear", "one-query hidden-element recovery");
    add_common(hidden, true);
    hidden->add_option("--r", r_arg, "hidden element coefficients a0,a1,...");
    hidden->add_flag("--random", random_r, "draw the hidden element uniformly");
    hidden->add_option("--seed", seed, "seed for --random");

    auto* crt = app.add_subcommand("crt-decompose",
                                   "prime-power decomposition of Z_mod");
    crt->add_option("mod", crt_mod, "modulus to decompose")->required();
    crt->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    crt->add_option("--out", out_path, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (info->parsed()) {
            return cmd_info(parse_ring_arg(ring_arg), format, out_path, cap);
        }
        if (find_poly->parsed()) {
            return cmd_find_poly(p, s, m, format, out_path, cap);
        }
        if (validate->parsed()) {
            return cmd_validate_poly(parse_ring_arg(ring_arg), format, out_path);
        }
        if (trace->parsed()) {
            return cmd_trace_table(parse_ring_arg(ring_arg), format, out_path);
        }
        if (disc->parsed()) {
            return cmd_discriminant(parse_ring_arg(ring_arg), format, out_path);
        }
        if (qft->parsed()) {
            return cmd_qft(parse_ring_arg(ring_arg), direct, factored, both, format, out_path,
                           cap);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_rings, format, out_path, cap, seed);
        }
        if (hidden->parsed()) {
            return cmd_hidden_linear(parse_ring_arg(ring_arg), r_arg, random_r, seed, format,
                                     out_path, cap);
        }
        if (crt->parsed()) {
            return cmd_crt_decompose(crt_mod, format, out_path);
        }
    } catch (const grqft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
