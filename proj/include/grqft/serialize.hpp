// serialize.hpp -- JSON and CSV emission for every artifact the CLI
// can produce, plus ring-spec parsing.
//
// JSON shapes:
//   ring          {"p", "s", "m", "h"}
//   matrix        {"dim", "entries": [[re, im], ...]}  (row-major)
//   permutation   {"dim", "map"}
//   trace table   {"modulus", "values"}
//   discriminant  {"modulus", "entries", "inverse"}
//   check report  array of {"name", "ring", "status", "max_deviation",
//                           "elapsed_ms", "seed"?, "detail"}
//   recovery      {"ring", "r_hidden", "r_recovered", "queries",
//                  "amplitude"}
//
// CSV matrices render one matrix row per line with entries as
// "re+imj"; %.17g keeps full double round-trip precision, negative
// zeros are normalized away, and fields are RFC 4180 quoted when they
// contain commas, quotes, or newlines.

#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "grqft/complex_matrix.hpp"
#include "grqft/discriminant.hpp"
#include "grqft/errors.hpp"
#include "grqft/galois_ring.hpp"
#include "grqft/hidden_linear.hpp"
#include "grqft/verify.hpp"

namespace grqft {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- JSON

inline Json to_json(const RingSpec& spec) {
    return Json{{"p", spec.p}, {"s", spec.s}, {"m", spec.m}, {"h", spec.h}};
}

/// Parses {"p", "s", "m", "h"}.  A missing or empty "h" requests the
/// automatic polynomial search, mirroring an empty spec.h.
inline RingSpec ring_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("s") || !j.contains("m")) {
        throw SpecOutOfRange("ring spec must be an object with p, s, m and optional h");
    }
    RingSpec spec;
    spec.p = j.at("p").get<std::uint64_t>();
    spec.s = j.at("s").get<std::uint64_t>();
    spec.m = j.at("m").get<std::uint64_t>();
    if (j.contains("h")) spec.h = j.at("h").get<std::vector<std::uint64_t>>();
    return spec;
}

/// Adds +0.0 so that -0.0 (a frequent conj() artifact) serializes as 0.
inline double scrub_zero(double x) { return x + 0.0; }

inline Json to_json(const ComplexMatrix& m) {
    Json entries = Json::array();
    for (const Complex& e : m.entries) {
        entries.push_back(Json::array({scrub_zero(e.real()), scrub_zero(e.imag())}));
    }
    return Json{{"dim", m.dim}, {"entries", std::move(entries)}};
}

inline Json to_json(const PermutationMap& p) { return Json{{"dim", p.dim}, {"map", p.map}}; }

inline Json to_json(const TraceTable& t) {
    return Json{{"modulus", t.modulus}, {"values", t.values}};
}

inline Json rows_json(const ModMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const DiscriminantMatrix& d) {
    return Json{{"modulus", d.entries.modulus},
                {"entries", rows_json(d.entries)},
                {"inverse", rows_json(d.inverse)}};
}

inline Json to_json(const CheckResult& c) {
    Json j{{"name", c.name},
           {"ring", to_json(c.ring)},
           {"status", to_string(c.status)},
           {"max_deviation", scrub_zero(c.max_deviation)},
           {"elapsed_ms", scrub_zero(c.elapsed_ms)}};
    if (c.seed) j["seed"] = *c.seed;
    j["detail"] = c.detail;
    return j;
}

inline Json to_json(const VerificationReport& report) {
    Json arr = Json::array();
    for (const CheckResult& c : report.checks) arr.push_back(to_json(c));
    return arr;
}

inline Json recovery_json(const RingSpec& spec, const GrElement& hidden,
                          const RecoveryResult& result) {
    return Json{{"ring", to_json(spec)},
                {"r_hidden", hidden.coeffs},
                {"r_recovered", result.r.coeffs},
                {"queries", result.queries},
                {"amplitude", scrub_zero(result.amplitude)}};
}

// ----------------------------------------------------------------- CSV

/// RFC 4180: quote when the field contains a comma, quote, or newline;
/// embedded quotes double.
inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", scrub_zero(x));
    return buf;
}

/// One complex entry as "re+imj", e.g. "0.5-0.5j".
inline std::string complex_csv(const Complex& z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", scrub_zero(z.real()),
                  scrub_zero(z.imag()));
    return buf;
}

/// One matrix row per line, comma-separated "re+imj" entries.
inline std::string matrix_csv(const ComplexMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            if (j != 0) out += ',';
            out += complex_csv(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

inline std::string mod_matrix_csv(const ModMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            if (j != 0) out += ',';
            out += std::to_string(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

/// Header plus one row per check.
inline std::string report_csv(const VerificationReport& report) {
    std::string out = "name,ring,status,max_deviation,elapsed_ms,seed,detail\n";
    for (const CheckResult& c : report.checks) {
        out += csv_quote(c.name);
        out += ',';
        out += csv_quote(ring_label(c.ring));
        out += ',';
        out += to_string(c.status);
        out += ',';
        out += format_double(c.max_deviation);
        out += ',';
        out += format_double(c.elapsed_ms);
        out += ',';
        if (c.seed) out += std::to_string(*c.seed);
        out += ',';
        out += csv_quote(c.detail);
        out += '\n';
    }
    return out;
}

} // namespace grqft
