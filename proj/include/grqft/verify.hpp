// verify.hpp -- structured numerical checks of the ring / Fourier
// properties, aggregated into a machine-readable report.
//
// Every check returns labelled CheckResult entries with the worst
// observed deviation.  Checks whose matrices would exceed the dimension
// cap (or a per-check cost ceiling) report Skipped with the blocking
// bound in the detail field -- visible, never silently green.  Sampled
// checks record their seed, so a report is reproducible from (spec,
// seed) alone.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grqft/complex_matrix.hpp"
#include "grqft/discriminant.hpp"
#include "grqft/galois_ring.hpp"
#include "grqft/qft.hpp"

namespace grqft {

// Pinned tolerances.  Sums over N unit-modulus terms may accumulate
// error proportional to N; matrix identities are tighter, with a
// relaxed bound for the deeper two-register products.
inline constexpr double kTolMatrixSingle = 1e-12;
inline constexpr double kTolMatrixTwoRegister = 1e-10;
inline constexpr double kTolCharacterSumPerTerm = 1e-9;
inline constexpr double kTolReduction = 1e-14;

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    RingSpec ring;
    CheckStatus status = CheckStatus::Fail;
    double max_deviation = 0.0;
    double elapsed_ms = 0.0;
    std::optional<std::uint64_t> seed; // present only for sampled checks
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    /// Overall verdict: no failures.  Skipped entries do not fail the
    /// report; they stay visible for the reader to judge.
    bool all_passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
            return c.status == CheckStatus::Fail;
        });
    }
};

struct VerifyOptions {
    std::uint64_t cap = kDefaultDimensionCap;
    std::uint64_t seed = 20260823;
};

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

namespace detail {

class CheckTimer {
public:
    CheckTimer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline CheckResult finish(std::string name, const RingSpec& spec, const CheckTimer& timer,
                          double deviation, double tolerance, std::string detail = "",
                          std::optional<std::uint64_t> seed = std::nullopt) {
    CheckResult r;
    r.name = std::move(name);
    r.ring = spec;
    r.status = deviation < tolerance ? CheckStatus::Pass : CheckStatus::Fail;
    r.max_deviation = deviation;
    r.elapsed_ms = timer.elapsed_ms();
    r.seed = seed;
    r.detail = std::move(detail);
    return r;
}

inline CheckResult skipped(std::string name, const RingSpec& spec, std::string why) {
    CheckResult r;
    r.name = std::move(name);
    r.ring = spec;
    r.status = CheckStatus::Skipped;
    r.detail = std::move(why);
    return r;
}

/// Direct character sum over the whole ring for one alpha.
inline Complex character_sum(const GaloisRing& ring, const GrElement& alpha) {
    Complex sum{0.0, 0.0};
    for (std::uint64_t u = 0; u < ring.cardinality(); ++u) {
        sum += character(ring, alpha, ring.element_from_index(u));
    }
    return sum;
}

} // namespace detail

/// Sum of chi_alpha over the ring: p^{sm} at alpha = 0, zero elsewhere,
/// exhaustively over alpha.
inline CheckResult check_character_sum(const GaloisRing& ring,
                                       const VerifyOptions& opts = {}) {
    (void)opts;
    const detail::CheckTimer timer;
    const double n = static_cast<double>(ring.cardinality());
    double worst = 0.0;
    for (std::uint64_t a = 0; a < ring.cardinality(); ++a) {
        const Complex sum = detail::character_sum(ring, ring.element_from_index(a));
        const double dev = a == 0 ? std::abs(sum - Complex{n, 0.0}) : std::abs(sum);
        worst = std::max(worst, dev);
    }
    return detail::finish("character_sum", ring.spec(), timer, worst,
                          kTolCharacterSumPerTerm * n);
}

/// The same sums organized by element class, mirroring the class-by-
/// class proof structure: alpha = 0, alpha = 1 (also through trace
/// fibers), units, and zero divisors (also through their p^j * unit
/// factorization).  Returns one labelled entry per class.
inline std::vector<CheckResult> check_character_sum_by_class(const GaloisRing& ring,
                                                             const VerifyOptions& opts = {}) {
    (void)opts;
    std::vector<CheckResult> out;
    const double n = static_cast<double>(ring.cardinality());
    const double tol = kTolCharacterSumPerTerm * n;
    const std::uint64_t ps = ring.char_mod();

    {
        const detail::CheckTimer timer;
        const double dev = std::abs(detail::character_sum(ring, ring.zero()) - Complex{n, 0.0});
        out.push_back(detail::finish("character_sum_class_zero", ring.spec(), timer, dev, tol,
                                     "sum over the full ring must equal its cardinality"));
    }
    {
        // alpha = 1 twice over: directly, and through the trace fibers
        // (sum_u omega^{Tr(u)} = sum_t |fiber(t)| omega^t).
        const detail::CheckTimer timer;
        const Complex direct = detail::character_sum(ring, ring.one());
        std::vector<std::uint64_t> fiber(ps, 0);
        for (std::uint64_t u = 0; u < ring.cardinality(); ++u) {
            ++fiber[ring.trace(ring.element_from_index(u)).value];
        }
        Complex by_fiber{0.0, 0.0};
        for (std::uint64_t t = 0; t < ps; ++t) {
            by_fiber += static_cast<double>(fiber[t]) * root_of_unity(ps, t);
        }
        const double dev =
            std::max({std::abs(direct), std::abs(by_fiber), std::abs(direct - by_fiber)});
        out.push_back(detail::finish("character_sum_class_one", ring.spec(), timer, dev, tol,
                                     "direct sum and trace-fiber sum must both vanish"));
    }
    {
        const detail::CheckTimer timer;
        double dev = 0.0;
        std::uint64_t count = 0;
        for (std::uint64_t a = 0; a < ring.cardinality(); ++a) {
            const GrElement alpha = ring.element_from_index(a);
            if (ring.classify(alpha) != ElementClass::Unit) continue;
            ++count;
            dev = std::max(dev, std::abs(detail::character_sum(ring, alpha)));
        }
        out.push_back(detail::finish("character_sum_class_units", ring.spec(), timer, dev, tol,
                                     std::to_string(count) + " unit alphas"));
    }
    {
        // Zero divisors alpha = p^j * unit: the direct sum must vanish
        // and must agree with the coarser sum sum_v omega_{p^{s-j}}^{Tr(v)}
        // obtained from the factorization.
        const detail::CheckTimer timer;
        double dev = 0.0;
        std::uint64_t count = 0;
        std::map<std::uint64_t, Complex> factored_cache;
        for (std::uint64_t a = 0; a < ring.cardinality(); ++a) {
            const GrElement alpha = ring.element_from_index(a);
            if (ring.classify(alpha) != ElementClass::ZeroDivisor) continue;
            ++count;
            const Complex direct = detail::character_sum(ring, alpha);
            const std::uint64_t j = ring.zero_divisor_factor(alpha).j;
            auto it = factored_cache.find(j);
            if (it == factored_cache.end()) {
                std::uint64_t mod = ps;
                for (std::uint64_t k = 0; k < j; ++k) mod /= ring.p();
                Complex sum{0.0, 0.0};
                for (std::uint64_t v = 0; v < ring.cardinality(); ++v) {
                    sum += root_of_unity(mod, ring.trace(ring.element_from_index(v)).value);
                }
                it = factored_cache.emplace(j, sum).first;
            }
            dev = std::max({dev, std::abs(direct), std::abs(it->second),
                            std::abs(direct - it->second)});
        }
        out.push_back(detail::finish("character_sum_class_zero_divisors", ring.spec(), timer,
                                     dev, tol,
                                     std::to_string(count) + " zero-divisor alphas"));
    }
    return out;
}

/// ker(Tr) has exactly p^{(m-1)s} elements and every trace fiber is
/// equinumerous.  Exact integer check.
inline CheckResult check_trace_kernel(const GaloisRing& ring, const VerifyOptions& opts = {}) {
    (void)opts;
    const detail::CheckTimer timer;
    std::vector<std::uint64_t> fiber(ring.char_mod(), 0);
    for (std::uint64_t u = 0; u < ring.cardinality(); ++u) {
        ++fiber[ring.trace(ring.element_from_index(u)).value];
    }
    std::uint64_t expected = 1; // p^{(m-1)s}
    for (std::uint64_t i = 0; i < (ring.m() - 1) * ring.s(); ++i) expected *= ring.p();
    double dev = 0.0;
    for (const std::uint64_t count : fiber) {
        dev = std::max(dev, std::abs(static_cast<double>(count) -
                                     static_cast<double>(expected)));
    }
    return detail::finish("trace_kernel", ring.spec(), timer, dev, 0.5,
                          "kernel size " + std::to_string(fiber[0]) + ", expected " +
                              std::to_string(expected));
}

/// (1/N) sum_u chi_alpha(u) conj(chi_beta(u)) = delta_{alpha beta}:
/// exhaustive over pairs for N <= 81, otherwise 10^4 seeded random
/// pairs.
inline CheckResult check_orthonormality(const GaloisRing& ring,
                                        const VerifyOptions& opts = {}) {
    const detail::CheckTimer timer;
    const std::uint64_t n = ring.cardinality();
    const double tol = kTolCharacterSumPerTerm * static_cast<double>(n);
    auto pair_dev = [&](std::uint64_t a, std::uint64_t b) {
        const GrElement alpha = ring.element_from_index(a);
        const GrElement beta = ring.element_from_index(b);
        Complex sum{0.0, 0.0};
        for (std::uint64_t u = 0; u < n; ++u) {
            const GrElement uu = ring.element_from_index(u);
            sum += character(ring, alpha, uu) * std::conj(character(ring, beta, uu));
        }
        sum /= static_cast<double>(n);
        return a == b ? std::abs(sum - Complex{1.0, 0.0}) : std::abs(sum);
    };
    double worst = 0.0;
    if (n <= 81) {
        for (std::uint64_t a = 0; a < n; ++a) {
            for (std::uint64_t b = 0; b < n; ++b) worst = std::max(worst, pair_dev(a, b));
        }
        return detail::finish("orthonormality", ring.spec(), timer, worst, tol,
                              "exhaustive over all pairs");
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    for (int trial = 0; trial < 10000; ++trial) {
        worst = std::max(worst, pair_dev(dist(rng), dist(rng)));
    }
    return detail::finish("orthonormality", ring.spec(), timer, worst, tol,
                          "10000 sampled pairs", opts.seed);
}

/// || F F' - I || and || F' F - I || for the direct construction.
inline CheckResult check_unitarity(const GaloisRing& ring, const VerifyOptions& opts = {}) {
    const std::uint64_t limit = std::min<std::uint64_t>(opts.cap, 512);
    if (ring.cardinality() > limit) {
        return detail::skipped("unitarity", ring.spec(),
                               "dimension " + std::to_string(ring.cardinality()) +
                                   " above limit " + std::to_string(limit));
    }
    const detail::CheckTimer timer;
    const double dev = unitarity_defect(qft_direct(ring, opts.cap));
    return detail::finish("unitarity", ring.spec(), timer, dev, kTolMatrixSingle);
}

/// The central identity: the entrywise character matrix equals the
/// tensor-power-of-base-transforms route composed with U_D.
inline CheckResult check_factorization(const GaloisRing& ring, const VerifyOptions& opts = {}) {
    if (ring.cardinality() > opts.cap) {
        return detail::skipped("factorization", ring.spec(),
                               "dimension " + std::to_string(ring.cardinality()) +
                                   " above cap " + std::to_string(opts.cap));
    }
    const detail::CheckTimer timer;
    const double dev = max_abs_diff(qft_direct(ring, opts.cap), qft_factored(ring, opts.cap));
    return detail::finish("factorization", ring.spec(), timer, dev, kTolMatrixSingle);
}

/// F S_alpha F' = diag(chi_alpha), all alpha.  Dense triple products up
/// to dimension 96; the equivalent one-sided form F S_alpha = diag * F
/// (valid given unitarity) up to 512; skipped beyond.
inline CheckResult check_shift_diagonalization(const GaloisRing& ring,
                                               const VerifyOptions& opts = {}) {
    const std::uint64_t n = ring.cardinality();
    const std::uint64_t limit = std::min<std::uint64_t>(opts.cap, 512);
    if (n > limit) {
        return detail::skipped("shift_diagonalization", ring.spec(),
                               "dimension " + std::to_string(n) + " above limit " +
                                   std::to_string(limit));
    }
    const detail::CheckTimer timer;
    const ComplexMatrix f = qft_direct(ring, opts.cap);
    double worst = 0.0;
    if (n <= 96) {
        const ComplexMatrix fd = dagger(f);
        for (std::uint64_t a = 0; a < n; ++a) {
            const GrElement alpha = ring.element_from_index(a);
            const ComplexMatrix lhs =
                matmul(apply_perm_right(f, shift_map(ring, alpha)), fd);
            const ComplexMatrix rhs = diagonal_matrix(character_diagonal(ring, alpha));
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
        return detail::finish("shift_diagonalization", ring.spec(), timer, worst,
                              kTolMatrixSingle, "dense conjugation, all alphas");
    }
    for (std::uint64_t a = 0; a < n; ++a) {
        const GrElement alpha = ring.element_from_index(a);
        const PermutationMap shift = shift_map(ring, alpha);
        const std::vector<Complex> diag = character_diagonal(ring, alpha);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                worst = std::max(worst, std::abs(f.at(i, shift.map[j]) - diag[i] * f.at(i, j)));
            }
        }
    }
    return detail::finish("shift_diagonalization", ring.spec(), timer, worst, kTolMatrixSingle,
                          "one-sided form F S = diag F, all alphas");
}

/// (F' tensor F) A_r (F tensor F') = B_r for every r.  Dense
/// conjugation up to single-register dimension 16; the equivalent
/// commutation form A_r (F tensor F') = (F tensor F') B_r up to 128;
/// skipped beyond.
inline CheckResult check_control_inversion(const GaloisRing& ring,
                                           const VerifyOptions& opts = {}) {
    const std::uint64_t n = ring.cardinality();
    const std::uint64_t limit = std::min<std::uint64_t>(opts.cap, 128);
    if (n > limit) {
        return detail::skipped("control_inversion", ring.spec(),
                               "single-register dimension " + std::to_string(n) +
                                   " above limit " + std::to_string(limit));
    }
    const detail::CheckTimer timer;
    const ComplexMatrix f = qft_direct(ring, opts.cap);
    const ComplexMatrix fd = dagger(f);
    double worst = 0.0;
    if (n <= 16) {
        const ComplexMatrix pre = kron(f, fd);
        const ComplexMatrix post = kron(fd, f);
        for (std::uint64_t ri = 0; ri < n; ++ri) {
            const GrElement r = ring.element_from_index(ri);
            const ComplexMatrix conj = matmul(post, apply_perm_left(gate_A_map(ring, r), pre));
            worst = std::max(worst, max_abs_diff(conj, perm_matrix(gate_B_map(ring, r))));
        }
        return detail::finish("control_inversion", ring.spec(), timer, worst,
                              kTolMatrixTwoRegister, "dense conjugation, all r");
    }
    // Commutation form, entrywise through K = F tensor F':
    // (A_r K)[i,j] = K[a^{-1}(i), j] must equal (K B_r)[i,j] = K[i, b(j)].
    auto k_entry = [&](std::size_t row, std::size_t col) {
        const std::size_t x1 = row / n, y1 = row % n;
        const std::size_t x2 = col / n, y2 = col % n;
        return f.at(x1, x2) * std::conj(f.at(y2, y1));
    };
    auto entry_dev = [&](const PermutationMap& a_inv, const PermutationMap& b, std::size_t i,
                         std::size_t j) {
        return std::abs(k_entry(a_inv.map[i], j) - k_entry(i, b.map[j]));
    };
    if (n <= 32) {
        for (std::uint64_t ri = 0; ri < n; ++ri) {
            const GrElement r = ring.element_from_index(ri);
            const PermutationMap a_inv = invert_permutation(gate_A_map(ring, r));
            const PermutationMap b = gate_B_map(ring, r);
            for (std::size_t i = 0; i < n * n; ++i) {
                for (std::size_t j = 0; j < n * n; ++j) {
                    worst = std::max(worst, entry_dev(a_inv, b, i, j));
                }
            }
        }
        return detail::finish("control_inversion", ring.spec(), timer, worst,
                              kTolMatrixTwoRegister,
                              "commutation form A K = K B, all r, all entries");
    }
    // Above 32 the full entrywise sweep is n^5 work, so sample: a fixed
    // core of r values (0, 1, xi, and p when it is a zero divisor)
    // padded to 8 with seeded draws, and 100000 seeded entry pairs per
    // r.
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> r_draw(0, n - 1);
    std::uniform_int_distribution<std::uint64_t> entry_draw(0, n * n - 1);
    std::vector<std::uint64_t> r_indices{0, 1, ring.index_of(ring.xi())};
    if (ring.s() > 1) r_indices.push_back(ring.index_of(ring.from_base(ring.p())));
    while (r_indices.size() < 8) r_indices.push_back(r_draw(rng));
    for (const std::uint64_t ri : r_indices) {
        const GrElement r = ring.element_from_index(ri);
        const PermutationMap a_inv = invert_permutation(gate_A_map(ring, r));
        const PermutationMap b = gate_B_map(ring, r);
        for (int trial = 0; trial < 100000; ++trial) {
            worst = std::max(worst, entry_dev(a_inv, b, entry_draw(rng), entry_draw(rng)));
        }
    }
    return detail::finish("control_inversion", ring.spec(), timer, worst,
                          kTolMatrixTwoRegister,
                          "commutation form A K = K B, 8 sampled r, 100000 entry pairs each",
                          opts.seed);
}

/// Degenerate-parameter consistency.  At m = 1 the transform must be
/// the base-ring Fourier matrix; at s = 1 it must match the finite-
/// field transform built from the power-sum trace x + x^p + ... +
/// x^{p^{m-1}} (a formula valid only over a field, hence an independent
/// route).  Emits one entry per applicable reduction.
inline std::vector<CheckResult> check_reductions(const GaloisRing& ring,
                                                 const VerifyOptions& opts = {}) {
    std::vector<CheckResult> out;
    if (ring.cardinality() > opts.cap) {
        if (ring.m() == 1) {
            out.push_back(detail::skipped("reduction_base_ring", ring.spec(),
                                          "dimension above cap"));
        }
        if (ring.s() == 1) {
            out.push_back(detail::skipped("reduction_finite_field", ring.spec(),
                                          "dimension above cap"));
        }
        return out;
    }
    if (ring.m() == 1) {
        const detail::CheckTimer timer;
        const double dev =
            max_abs_diff(qft_direct(ring, opts.cap), qft_base(ring.p(), ring.s(), opts.cap));
        out.push_back(detail::finish("reduction_base_ring", ring.spec(), timer, dev,
                                     kTolReduction));
    }
    if (ring.s() == 1) {
        const detail::CheckTimer timer;
        const std::uint64_t n = ring.cardinality();
        auto power_sum_trace = [&](const GrElement& x) {
            GrElement sum = ring.zero();
            std::uint64_t pj = 1;
            for (std::uint64_t jj = 0; jj < ring.m(); ++jj) {
                sum = ring.add(sum, ring.pow(x, pj));
                pj *= ring.p();
            }
            for (std::size_t i = 1; i < sum.coeffs.size(); ++i) {
                if (sum.coeffs[i] != 0) {
                    throw TraceNotInBaseRing("field power-sum trace left the base field");
                }
            }
            return sum.coeffs[0];
        };
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        ComplexMatrix field(static_cast<std::size_t>(n));
        for (std::uint64_t a = 0; a < n; ++a) {
            const GrElement alpha = ring.element_from_index(a);
            for (std::uint64_t u = 0; u < n; ++u) {
                const std::uint64_t t =
                    power_sum_trace(ring.mul(alpha, ring.element_from_index(u)));
                field.at(a, u) = scale * root_of_unity(ring.p(), t);
            }
        }
        const double dev = max_abs_diff(qft_direct(ring, opts.cap), field);
        out.push_back(detail::finish("reduction_finite_field", ring.spec(), timer, dev,
                                     kTolReduction));
    }
    return out;
}

/// The canonical ring set exercised by default verification runs.
inline std::vector<RingSpec> default_spec_set() {
    return {
        RingSpec{2, 2, 2, {1, 1}}, // GR(4,16)
        RingSpec{2, 1, 2, {1, 1}}, // F_4
        RingSpec{3, 2, 1, {1}},    // Z_9
        RingSpec{2, 3, 2, {1, 1}}, // GR(8,64)
        RingSpec{3, 1, 2, {2, 1}}, // F_9
    };
}

/// Runs every check against every spec.  Construction failures become
/// failed "construction" entries without disturbing the other specs.
/// Entries are sorted by (check name, ring label) for deterministic
/// emission.
inline VerificationReport run_all(const std::vector<RingSpec>& specs,
                                  const VerifyOptions& opts = {}) {
    VerificationReport report;
    for (const RingSpec& spec : specs) {
        try {
            const GaloisRing ring(spec);
            report.checks.push_back(check_character_sum(ring, opts));
            for (auto& r : check_character_sum_by_class(ring, opts)) {
                report.checks.push_back(std::move(r));
            }
            report.checks.push_back(check_trace_kernel(ring, opts));
            report.checks.push_back(check_orthonormality(ring, opts));
            report.checks.push_back(check_unitarity(ring, opts));
            report.checks.push_back(check_factorization(ring, opts));
            report.checks.push_back(check_shift_diagonalization(ring, opts));
            report.checks.push_back(check_control_inversion(ring, opts));
            for (auto& r : check_reductions(ring, opts)) {
                report.checks.push_back(std::move(r));
            }
        } catch (const Error& e) {
            CheckResult failure;
            failure.name = "construction";
            failure.ring = spec;
            failure.status = CheckStatus::Fail;
            failure.detail = e.what();
            report.checks.push_back(std::move(failure));
        }
    }
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         if (a.name != b.name) return a.name < b.name;
                         return ring_label(a.ring) < ring_label(b.ring);
                     });
    return report;
}

} // namespace grqft
