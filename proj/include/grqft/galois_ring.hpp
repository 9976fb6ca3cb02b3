// galois_ring.hpp -- exact arithmetic in the Galois ring GR(p^s, p^sm).
//
// GR(p^s, p^sm) is the quotient Z_{p^s}[X] / (h(X)) for a monic basic
// primitive polynomial h of degree m.  Elements are coefficient vectors
// (a_0 ... a_{m-1}) over Z_{p^s} in the basis {1, xi, ..., xi^{m-1}},
// where xi = X mod h.  The reduction rule is the standard quotient-ring
// convention xi^m = -(h_0 + h_1 xi + ... + h_{m-1} xi^{m-1}).
//
// The GaloisRing context validates its spec on construction and
// precomputes the power table of xi, the Teichmuller set and the trace
// table.  It is immutable afterwards; every operation is a pure
// function, so concurrent reads are safe.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grqft/errors.hpp"
#include "grqft/zmod.hpp"

namespace grqft {

/// Matrix-producing code refuses dimensions above this unless the
/// caller raises the cap explicitly.  Plain ring arithmetic is not
/// capped.
inline constexpr std::uint64_t kDefaultDimensionCap = 4096;

/// Defining data of GR(p^s, p^sm).  h lists the low coefficients
/// h_0 ... h_{m-1} of the monic defining polynomial; the leading
/// coefficient 1 of X^m is implied.  An empty h asks the constructor to
/// search for the lexicographically smallest valid polynomial.
struct RingSpec {
    std::uint64_t p = 2;
    std::uint64_t s = 1;
    std::uint64_t m = 1;
    std::vector<std::uint64_t> h;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Element in the additive formalism: canonical residues mod p^s on the
/// basis {xi^i}.  Plain data; all arithmetic lives on GaloisRing.
struct GrElement {
    std::vector<std::uint64_t> coeffs;

    friend bool operator==(const GrElement&, const GrElement&) = default;
};

enum class ElementClass { Zero, Unit, ZeroDivisor };

/// p-adic formalism: s digits from the Teichmuller set, least
/// significant first, composing to sum_i digits[i] * p^i.
struct PadicForm {
    std::vector<GrElement> digits;

    friend bool operator==(const PadicForm&, const PadicForm&) = default;
};

/// Factorization of a zero divisor as p^j * unit (1 <= j <= s-1).
struct ZeroDivisorFactor {
    std::uint64_t j = 0;
    GrElement unit;
};

/// Outcome of the three basic-primitive sub-checks:
///   (i)   h mod p is irreducible over F_p,
///   (ii)  the root of h mod p has order p^m - 1 in F_p[X]/(h),
///   (iii) xi^{p^m - 1} = 1 in Z_{p^s}[X]/(h) and xi^d != 1 for every
///         proper divisor d of p^m - 1.
struct ValidationReport {
    bool irreducible_mod_p = false;
    bool primitive_root_mod_p = false;
    bool primitive_root_lifted = false;

    bool passed() const {
        return irreducible_mod_p && primitive_root_mod_p && primitive_root_lifted;
    }

    /// Name of the first failing sub-check, or "" when all pass.
    std::string failing_check() const {
        if (!irreducible_mod_p) return "irreducible_mod_p";
        if (!primitive_root_mod_p) return "primitive_root_mod_p";
        if (!primitive_root_lifted) return "primitive_root_lifted";
        return "";
    }
};

inline std::string to_string(const GrElement& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(a.coeffs[i]);
    }
    return out + "]";
}

inline std::string ring_label(const RingSpec& spec) {
    std::string out = "p=" + std::to_string(spec.p) + " s=" + std::to_string(spec.s) +
                      " m=" + std::to_string(spec.m) + " h=";
    return out + to_string(GrElement{spec.h});
}

namespace detail {

// Polynomial arithmetic in Z_n[X]/(h) with h monic of degree m, given
// by its low coefficients.  Standalone so that spec validation can run
// before any ring context exists.

inline std::vector<std::uint64_t> polmul_mod(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b,
                                             const std::vector<std::uint64_t>& h,
                                             std::uint64_t n) {
    const std::size_t m = h.size();
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            prod[i + j] = addmod(prod[i + j], mulmod(a[i], b[j], n), n);
        }
    }
    // Eliminate degrees 2m-2 ... m using X^m = -(h_0 + ... + h_{m-1} X^{m-1}).
    for (std::size_t k = 2 * m - 2; k >= m; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < m; ++i) {
            prod[k - m + i] = submod(prod[k - m + i], mulmod(c, h[i], n), n);
        }
    }
    prod.resize(m);
    return prod;
}

inline std::vector<std::uint64_t> polpow_mod(std::vector<std::uint64_t> base,
                                             std::uint64_t exp,
                                             const std::vector<std::uint64_t>& h,
                                             std::uint64_t n) {
    std::vector<std::uint64_t> r(h.size(), 0);
    r[0] = 1 % n;
    while (exp > 0) {
        if (exp & 1) r = polmul_mod(r, base, h, n);
        base = polmul_mod(base, base, h, n);
        exp >>= 1;
    }
    return r;
}

/// The class of X in Z_n[X]/(h): the unit vector for m >= 2, the
/// residue -h_0 for m = 1.
inline std::vector<std::uint64_t> poly_x(const std::vector<std::uint64_t>& h, std::uint64_t n) {
    const std::size_t m = h.size();
    std::vector<std::uint64_t> x(m, 0);
    if (m == 1) {
        x[0] = negmod(h[0] % n, n);
    } else {
        x[1] = 1;
    }
    return x;
}

/// True when the monic polynomial with low coefficients g divides the
/// monic polynomial with low coefficients f, both over F_p.
inline bool divides_monic(const std::vector<std::uint64_t>& g,
                          const std::vector<std::uint64_t>& f,
                          std::uint64_t p) {
    const std::size_t m = f.size(), d = g.size();
    std::vector<std::uint64_t> work(m + 1);
    for (std::size_t i = 0; i < m; ++i) work[i] = f[i] % p;
    work[m] = 1;
    for (std::size_t k = m; k >= d; --k) {
        const std::uint64_t c = work[k];
        if (c == 0) continue;
        work[k] = 0;
        for (std::size_t i = 0; i < d; ++i) {
            work[k - d + i] = submod(work[k - d + i], mulmod(c, g[i], p), p);
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (work[i] != 0) return false;
    }
    return true;
}

/// True when X has multiplicative order exactly q-1 in Z_n[X]/(h).
inline bool root_has_full_order(const std::vector<std::uint64_t>& h,
                                std::uint64_t n,
                                std::uint64_t q) {
    std::vector<std::uint64_t> one(h.size(), 0);
    one[0] = 1 % n;
    const auto x = poly_x(h, n);
    if (polpow_mod(x, q - 1, h, n) != one) return false;
    for (std::uint64_t d : divisors(q - 1)) {
        if (d == q - 1) continue;
        if (polpow_mod(x, d, h, n) == one) return false;
    }
    return true;
}

} // namespace detail

/// Runs the three basic-primitive sub-checks on a fully specified h.
/// Throws NotPrime / SpecOutOfRange on malformed specs; genuine
/// polynomial failures are reported, not thrown.
inline ValidationReport validate_basic_primitive(const RingSpec& spec) {
    if (!is_prime(spec.p)) {
        throw NotPrime("p = " + std::to_string(spec.p) + " is not prime");
    }
    if (spec.s < 1 || spec.m < 1) {
        throw SpecOutOfRange("require s >= 1 and m >= 1");
    }
    const auto ps = checked_pow(spec.p, spec.s);
    if (!ps || *ps > (std::uint64_t{1} << 31)) {
        throw SpecOutOfRange("p^s exceeds 2^31");
    }
    const auto q = checked_pow(spec.p, spec.m);
    if (!q || *q > (std::uint64_t{1} << 20)) {
        throw SpecOutOfRange("p^m exceeds 2^20");
    }
    if (spec.h.size() != spec.m) {
        throw SpecOutOfRange("h must list exactly m coefficients");
    }
    for (std::uint64_t c : spec.h) {
        if (c >= *ps) throw SpecOutOfRange("h coefficient not reduced mod p^s");
    }

    ValidationReport report;

    // (i) irreducibility of h mod p: no monic factor of degree 1..m/2.
    std::vector<std::uint64_t> hbar(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i) hbar[i] = spec.h[i] % spec.p;
    report.irreducible_mod_p = true;
    for (std::uint64_t d = 1; 2 * d <= spec.m && report.irreducible_mod_p; ++d) {
        std::vector<std::uint64_t> g(d, 0);
        while (true) {
            if (detail::divides_monic(g, hbar, spec.p)) {
                report.irreducible_mod_p = false;
                break;
            }
            std::size_t i = d;
            while (i > 0 && ++g[i - 1] == spec.p) g[--i] = 0;
            if (i == 0) break;
        }
    }

    // (ii) root order p^m - 1 in the residue field F_p[X]/(h mod p).
    report.primitive_root_mod_p = detail::root_has_full_order(hbar, spec.p, *q);

    // (iii) the same order condition for xi in Z_{p^s}[X]/(h).
    report.primitive_root_lifted = detail::root_has_full_order(spec.h, *ps, *q);

    return report;
}

/// Brute-force search for the lexicographically smallest h passing
/// validate_basic_primitive.  Guarded by p^{sm} <= cap since the search
/// space has p^{sm} candidates.
inline std::vector<std::uint64_t> find_basic_primitive(std::uint64_t p,
                                                       std::uint64_t s,
                                                       std::uint64_t m,
                                                       std::uint64_t cap = kDefaultDimensionCap) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (s < 1 || m < 1) throw SpecOutOfRange("require s >= 1 and m >= 1");
    const auto ps = checked_pow(p, s);
    if (!ps || *ps > (std::uint64_t{1} << 31)) throw SpecOutOfRange("p^s exceeds 2^31");
    const auto card = ps ? checked_pow(*ps, m) : std::nullopt;
    if (!card || *card > cap) {
        throw DimensionCapExceeded("polynomial search space p^(s*m) exceeds cap " +
                                   std::to_string(cap));
    }

    RingSpec spec{p, s, m, std::vector<std::uint64_t>(m, 0)};
    while (true) {
        if (validate_basic_primitive(spec).passed()) return spec.h;
        // Odometer with the last coefficient fastest: visits candidates
        // in lexicographic order of (h_0, ..., h_{m-1}).
        std::size_t i = m;
        while (i > 0 && ++spec.h[i - 1] == *ps) spec.h[--i] = 0;
        if (i == 0) break;
    }
    throw SearchSpaceExhausted("no basic primitive polynomial found for p=" +
                               std::to_string(p) + " s=" + std::to_string(s) +
                               " m=" + std::to_string(m));
}

/// Validated ring context with precomputed tables.  Construction cost
/// is O(p^m) time and memory; arithmetic afterwards is polynomial in m.
class GaloisRing {
public:
    explicit GaloisRing(RingSpec spec) : spec_(std::move(spec)) {
        if (spec_.h.empty()) {
            spec_.h = find_basic_primitive(spec_.p, spec_.s, spec_.m);
        }
        const ValidationReport report = validate_basic_primitive(spec_);
        if (!report.passed()) {
            throw NotBasicPrimitive("h = " + vec_string(spec_.h) +
                                    " failed sub-check " + report.failing_check());
        }
        ps_ = *checked_pow(spec_.p, spec_.s);
        q_ = *checked_pow(spec_.p, spec_.m);
        card_ = checked_pow(ps_, spec_.m);

        xi_ = GrElement{detail::poly_x(spec_.h, ps_)};
        xi_powers_.resize(q_ - 1);
        xi_powers_[0] = one();
        for (std::uint64_t k = 1; k + 1 < q_; ++k) {
            xi_powers_[k] = mul(xi_powers_[k - 1], xi_);
        }

        teich_.reserve(q_);
        teich_.push_back(zero());
        for (const auto& t : xi_powers_) teich_.push_back(t);
        teich_index_by_residue_.assign(q_, -1);
        for (std::size_t i = 0; i < teich_.size(); ++i) {
            const std::uint64_t key = residue_key(teich_[i]);
            if (teich_index_by_residue_[key] != -1) {
                throw Error("Teichmuller representatives collide mod p; "
                            "validation should have rejected this spec");
            }
            teich_index_by_residue_[key] = static_cast<std::int32_t>(i);
        }

        frob_basis_.resize(spec_.m);
        for (std::uint64_t i = 0; i < spec_.m; ++i) {
            frob_basis_[i] = xi_pow(spec_.p * i);
        }

        tr_xi_.resize(2 * spec_.m - 1);
        for (std::uint64_t i = 0; i + 1 < 2 * spec_.m; ++i) {
            tr_xi_[i] = trace(xi_pow(i)).value;
        }
    }

    const RingSpec& spec() const { return spec_; }
    std::uint64_t p() const { return spec_.p; }
    std::uint64_t s() const { return spec_.s; }
    std::uint64_t m() const { return spec_.m; }
    /// Characteristic p^s.
    std::uint64_t char_mod() const { return ps_; }
    /// Residue-field size p^m.
    std::uint64_t residue_field_size() const { return q_; }

    /// Cardinality p^{sm}; throws when it does not fit in 64 bits.
    std::uint64_t cardinality() const {
        if (!card_) throw SpecOutOfRange("cardinality p^(s*m) exceeds 64 bits");
        return *card_;
    }

    GrElement zero() const { return GrElement{std::vector<std::uint64_t>(spec_.m, 0)}; }

    GrElement one() const {
        auto e = zero();
        e.coeffs[0] = 1 % ps_;
        return e;
    }

    const GrElement& xi() const { return xi_; }

    /// Builds an element from arbitrary integers, reducing mod p^s.
    GrElement from_coeffs(const std::vector<std::uint64_t>& coeffs) const {
        if (coeffs.size() != spec_.m) {
            throw RingMismatch("expected " + std::to_string(spec_.m) +
                               " coefficients, got " + std::to_string(coeffs.size()));
        }
        GrElement e = zero();
        for (std::size_t i = 0; i < coeffs.size(); ++i) e.coeffs[i] = coeffs[i] % ps_;
        return e;
    }

    /// Embeds a base-ring residue r as r * 1.
    GrElement from_base(std::uint64_t r) const {
        auto e = zero();
        e.coeffs[0] = r % ps_;
        return e;
    }

    GrElement add(const GrElement& a, const GrElement& b) const {
        check(a);
        check(b);
        GrElement r = zero();
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            r.coeffs[i] = addmod(a.coeffs[i], b.coeffs[i], ps_);
        }
        return r;
    }

    GrElement neg(const GrElement& a) const {
        check(a);
        GrElement r = zero();
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            r.coeffs[i] = negmod(a.coeffs[i], ps_);
        }
        return r;
    }

    GrElement sub(const GrElement& a, const GrElement& b) const { return add(a, neg(b)); }

    GrElement mul(const GrElement& a, const GrElement& b) const {
        check(a);
        check(b);
        return GrElement{detail::polmul_mod(a.coeffs, b.coeffs, spec_.h, ps_)};
    }

    /// Scalar multiple r * a with r in the base ring.
    GrElement scale(std::uint64_t r, const GrElement& a) const {
        check(a);
        GrElement out = zero();
        for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
            out.coeffs[i] = mulmod(r % ps_, a.coeffs[i], ps_);
        }
        return out;
    }

    GrElement pow(const GrElement& a, std::uint64_t k) const {
        check(a);
        return GrElement{detail::polpow_mod(a.coeffs, k, spec_.h, ps_)};
    }

    /// xi^k for any k >= 0, via the order p^m - 1 of xi.
    GrElement xi_pow(std::uint64_t k) const { return xi_powers_[k % (q_ - 1)]; }

    /// Frobenius phi^i with phi(xi) = xi^p and phi fixing Z_{p^s}.
    GrElement frobenius(const GrElement& a, std::uint64_t i = 1) const {
        check(a);
        GrElement r = a;
        for (std::uint64_t step = 0; step < i % spec_.m; ++step) {
            GrElement next = zero();
            for (std::size_t j = 0; j < spec_.m; ++j) {
                next = add(next, scale(r.coeffs[j], frob_basis_[j]));
            }
            r = next;
        }
        return r;
    }

    /// Tr(a) = sum of all Galois conjugates; lands in the base ring.
    Zmod trace(const GrElement& a) const {
        check(a);
        GrElement sum = a;
        GrElement conj = a;
        for (std::uint64_t j = 1; j < spec_.m; ++j) {
            conj = frobenius(conj);
            sum = add(sum, conj);
        }
        for (std::size_t i = 1; i < spec_.m; ++i) {
            if (sum.coeffs[i] != 0) {
                throw TraceNotInBaseRing("trace of " + to_string(a) +
                                         " has nonzero xi^" + std::to_string(i) +
                                         " coefficient " + std::to_string(sum.coeffs[i]));
            }
        }
        return Zmod{sum.coeffs[0], ps_};
    }

    ElementClass classify(const GrElement& a) const {
        check(a);
        bool all_zero = true, all_zero_mod_p = true;
        for (std::uint64_t c : a.coeffs) {
            if (c != 0) all_zero = false;
            if (c % spec_.p != 0) all_zero_mod_p = false;
        }
        if (all_zero) return ElementClass::Zero;
        return all_zero_mod_p ? ElementClass::ZeroDivisor : ElementClass::Unit;
    }

    /// Inverse of a unit: start from the residue-field inverse
    /// a^{p^m - 2} and sharpen with Newton steps x <- x (2 - a x),
    /// which doubles the number of correct p-adic digits per step.
    GrElement inverse(const GrElement& a) const {
        if (classify(a) != ElementClass::Unit) {
            throw NotAUnit("cannot invert " + to_string(a));
        }
        GrElement x = pow(a, q_ - 2);
        const GrElement two = from_base(2);
        for (std::uint64_t digits = 1; digits < spec_.s; digits *= 2) {
            x = mul(x, sub(two, mul(a, x)));
        }
        if (mul(a, x) != one()) {
            throw Error("Newton inversion failed to converge for " + to_string(a));
        }
        return x;
    }

    /// Writes a zero divisor as p^j * unit with j the common
    /// p-valuation of the coefficients.
    ZeroDivisorFactor zero_divisor_factor(const GrElement& a) const {
        if (classify(a) != ElementClass::ZeroDivisor) {
            throw NotAZeroDivisor(to_string(a) + " is not a zero divisor");
        }
        std::uint64_t j = spec_.s;
        for (std::uint64_t c : a.coeffs) {
            if (c != 0) j = std::min(j, p_valuation(c, spec_.p));
        }
        const std::uint64_t pj = *checked_pow(spec_.p, j);
        GrElement unit = zero();
        for (std::size_t i = 0; i < spec_.m; ++i) unit.coeffs[i] = a.coeffs[i] / pj;
        if (classify(unit) != ElementClass::Unit) {
            throw Error("zero-divisor cofactor " + to_string(unit) + " is not a unit");
        }
        return ZeroDivisorFactor{j, unit};
    }

    const std::vector<GrElement>& teichmuller_set() const { return teich_; }

    /// The unique Teichmuller element congruent to a mod p.
    GrElement teichmuller_rep(const GrElement& a) const {
        check(a);
        return teich_[static_cast<std::size_t>(teich_index_by_residue_[residue_key(a)])];
    }

    /// Digit extraction: t_i is the Teichmuller representative of the
    /// remaining value mod p; subtract and divide by p exactly.  The
    /// remaining value after i digits is only defined mod p^{s-i}, so
    /// the work vector is kept canonical for that shrinking modulus.
    PadicForm padic_decompose(const GrElement& a) const {
        check(a);
        PadicForm out;
        out.digits.reserve(spec_.s);
        std::vector<std::uint64_t> work = a.coeffs;
        std::uint64_t modulus = ps_;
        for (std::uint64_t i = 0; i < spec_.s; ++i) {
            std::uint64_t key = 0;
            for (std::size_t k = spec_.m; k > 0; --k) {
                key = key * spec_.p + work[k - 1] % spec_.p;
            }
            const GrElement& t = teich_[static_cast<std::size_t>(teich_index_by_residue_[key])];
            out.digits.push_back(t);
            for (std::size_t k = 0; k < spec_.m; ++k) {
                const std::uint64_t d = submod(work[k], t.coeffs[k] % modulus, modulus);
                if (d % spec_.p != 0) {
                    throw Error("p-adic digit subtraction left a coefficient "
                                "not divisible by p");
                }
                work[k] = d / spec_.p;
            }
            modulus /= spec_.p;
        }
        for (std::uint64_t c : work) {
            if (c != 0) throw Error("p-adic decomposition left a nonzero remainder");
        }
        return out;
    }

    GrElement padic_compose(const PadicForm& f) const {
        if (f.digits.size() != spec_.s) {
            throw RingMismatch("expected " + std::to_string(spec_.s) + " digits, got " +
                               std::to_string(f.digits.size()));
        }
        GrElement sum = zero();
        std::uint64_t pi = 1;
        for (const auto& digit : f.digits) {
            sum = add(sum, scale(pi, digit));
            pi *= spec_.p;
        }
        return sum;
    }

    /// Mixed-radix index: sum_i a_i (p^s)^i, coefficient a_0 least
    /// significant.  Requires the cardinality to fit in 64 bits.
    std::uint64_t index_of(const GrElement& a) const {
        check(a);
        cardinality();
        std::uint64_t idx = 0;
        for (std::size_t i = spec_.m; i > 0; --i) idx = idx * ps_ + a.coeffs[i - 1];
        return idx;
    }

    GrElement element_from_index(std::uint64_t idx) const {
        if (idx >= cardinality()) {
            throw SpecOutOfRange("index " + std::to_string(idx) +
                                 " out of range for cardinality " +
                                 std::to_string(cardinality()));
        }
        GrElement e = zero();
        for (std::size_t i = 0; i < spec_.m; ++i) {
            e.coeffs[i] = idx % ps_;
            idx /= ps_;
        }
        return e;
    }

    GrElement random_element(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, ps_ - 1);
        GrElement e = zero();
        for (auto& c : e.coeffs) c = dist(rng);
        return e;
    }

    /// Trace table Tr(xi^i) for i = 0 ... 2m-2, as cached residues.
    const std::vector<std::uint64_t>& trace_of_xi_powers() const { return tr_xi_; }

private:
    static std::string vec_string(const std::vector<std::uint64_t>& v) {
        return to_string(GrElement{v});
    }

    /// Rejects coefficient vectors that cannot belong to this ring.
    /// Same-shape elements of a ring with a different h are
    /// indistinguishable at this level; callers keep rings apart.
    void check(const GrElement& a) const {
        if (a.coeffs.size() != spec_.m) {
            throw RingMismatch("element has " + std::to_string(a.coeffs.size()) +
                               " coefficients, ring expects " + std::to_string(spec_.m));
        }
        for (std::uint64_t c : a.coeffs) {
            if (c >= ps_) {
                throw RingMismatch("coefficient " + std::to_string(c) +
                                   " not reduced mod " + std::to_string(ps_));
            }
        }
    }

    /// Key of a's image in the residue field: sum_i (a_i mod p) p^i.
    std::uint64_t residue_key(const GrElement& a) const {
        std::uint64_t key = 0;
        for (std::size_t i = spec_.m; i > 0; --i) {
            key = key * spec_.p + a.coeffs[i - 1] % spec_.p;
        }
        return key;
    }

    RingSpec spec_;
    std::uint64_t ps_ = 0;
    std::uint64_t q_ = 0;
    std::optional<std::uint64_t> card_;
    GrElement xi_;
    std::vector<GrElement> xi_powers_;
    std::vector<GrElement> teich_;
    std::vector<std::int32_t> teich_index_by_residue_;
    std::vector<GrElement> frob_basis_;
    std::vector<std::uint64_t> tr_xi_;
};

/// Spec-in, context-out convenience wrapper.
inline GaloisRing make_ring(const RingSpec& spec) { return GaloisRing(spec); }

} // namespace grqft
