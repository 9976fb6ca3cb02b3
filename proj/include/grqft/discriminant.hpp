// discriminant.hpp -- trace table, discriminant matrix and modular
// matrix algebra over Z_{p^s}.
//
// The discriminant matrix D_{ij} = Tr(xi^{i+j}) converts between the
// coefficient vector of x and the trace coordinates Tr(x xi^i); it is a
// symmetric Hankel matrix and invertible whenever {xi^i} is a basis.
// Inversion works by Gauss-Jordan elimination with unit pivots, the
// minimal generalization of Gaussian elimination from fields to Z_{p^s}.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grqft/errors.hpp"
#include "grqft/galois_ring.hpp"
#include "grqft/zmod.hpp"

namespace grqft {

/// Square row-major matrix of canonical residues sharing one modulus.
struct ModMatrix {
    std::uint64_t modulus = 0;
    std::size_t dim = 0;
    std::vector<std::uint64_t> entries; // dim * dim, row-major

    ModMatrix() = default;
    ModMatrix(std::size_t d, std::uint64_t mod)
        : modulus(mod), dim(d), entries(d * d, 0) {}

    std::uint64_t& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

    static ModMatrix identity(std::size_t d, std::uint64_t mod) {
        ModMatrix m(d, mod);
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1 % mod;
        return m;
    }

    friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

/// Counters for the complexity audit of matrix-vector application.
struct OpCount {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;
};

inline void require_same_shape(const ModMatrix& a, const ModMatrix& b) {
    if (a.dim != b.dim || a.modulus != b.modulus) {
        throw ShapeMismatch("matrix shapes or moduli differ: " + std::to_string(a.dim) +
                            " mod " + std::to_string(a.modulus) + " vs " +
                            std::to_string(b.dim) + " mod " + std::to_string(b.modulus));
    }
}

inline ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b) {
    require_same_shape(a, b);
    ModMatrix out(a.dim, a.modulus);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < a.dim; ++j) {
                out.at(i, j) = addmod(out.at(i, j), mulmod(aik, b.at(k, j), a.modulus),
                                      a.modulus);
            }
        }
    }
    return out;
}

/// M x mod modulus.  Exactly dim^2 multiplications; the optional
/// counter lets tests audit that bound.
inline std::vector<std::uint64_t> mat_vec_mod(const ModMatrix& m,
                                              const std::vector<std::uint64_t>& x,
                                              OpCount* count = nullptr) {
    if (x.size() != m.dim) {
        throw ShapeMismatch("vector length " + std::to_string(x.size()) +
                            " does not match matrix dimension " + std::to_string(m.dim));
    }
    std::vector<std::uint64_t> out(m.dim, 0);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            out[i] = addmod(out[i], mulmod(m.at(i, j), x[j], m.modulus), m.modulus);
            if (count) {
                ++count->mults;
                ++count->adds;
            }
        }
    }
    return out;
}

/// Gauss-Jordan inverse over Z_{p^s}.  A pivot must be a unit of the
/// modulus (invertible residue); rows are swapped to find one.  Any
/// invertible matrix over Z_{p^s} has a unit in every pivot column of
/// the eliminated block, so failure to find one proves singularity.
inline ModMatrix invert_mod(const ModMatrix& m) {
    const std::uint64_t mod = m.modulus;
    ModMatrix work = m;
    ModMatrix inv = ModMatrix::identity(m.dim, mod);
    for (std::size_t col = 0; col < m.dim; ++col) {
        std::size_t pivot = m.dim;
        std::uint64_t pivot_inv = 0;
        for (std::size_t r = col; r < m.dim; ++r) {
            if (const auto pi = inv_mod(work.at(r, col), mod)) {
                pivot = r;
                pivot_inv = *pi;
                break;
            }
        }
        if (pivot == m.dim) {
            throw NotInvertible("no unit pivot in column " + std::to_string(col) +
                                " mod " + std::to_string(mod));
        }
        for (std::size_t j = 0; j < m.dim; ++j) {
            std::swap(work.at(col, j), work.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        for (std::size_t j = 0; j < m.dim; ++j) {
            work.at(col, j) = mulmod(work.at(col, j), pivot_inv, mod);
            inv.at(col, j) = mulmod(inv.at(col, j), pivot_inv, mod);
        }
        for (std::size_t r = 0; r < m.dim; ++r) {
            if (r == col) continue;
            const std::uint64_t factor = work.at(r, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < m.dim; ++j) {
                work.at(r, j) = submod(work.at(r, j), mulmod(factor, work.at(col, j), mod), mod);
                inv.at(r, j) = submod(inv.at(r, j), mulmod(factor, inv.at(col, j), mod), mod);
            }
        }
    }
    return inv;
}

/// Tr(xi^i) for i = 0 ... 2m-2.
struct TraceTable {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> values;

    friend bool operator==(const TraceTable&, const TraceTable&) = default;
};

/// Primary route: each entry is a Frobenius sum.
inline TraceTable trace_table(const GaloisRing& ring) {
    return TraceTable{ring.char_mod(), ring.trace_of_xi_powers()};
}

/// Cross-check route through the power table of xi: low entries as
/// sums over conjugate powers xi^{i p^j} (exponents reduced by the
/// order p^m - 1), high entries by expanding xi^i in the basis and
/// applying trace linearity to the low entries.
inline TraceTable trace_table_recursive(const GaloisRing& ring) {
    const std::uint64_t m = ring.m();
    const std::uint64_t q = ring.residue_field_size();
    const std::uint64_t ps = ring.char_mod();

    std::vector<GrElement> pw(q - 1);
    pw[0] = ring.one();
    for (std::uint64_t k = 1; k + 1 < q; ++k) pw[k] = ring.mul(pw[k - 1], ring.xi());

    TraceTable table{ps, std::vector<std::uint64_t>(2 * m - 1, 0)};
    for (std::uint64_t i = 0; i < m; ++i) {
        std::vector<std::uint64_t> acc(m, 0);
        std::uint64_t pj = 1;
        for (std::uint64_t j = 0; j < m; ++j) {
            const GrElement& conj = pw[(i * pj) % (q - 1)];
            for (std::uint64_t k = 0; k < m; ++k) {
                acc[k] = addmod(acc[k], conj.coeffs[k], ps);
            }
            pj *= ring.p();
        }
        for (std::uint64_t k = 1; k < m; ++k) {
            if (acc[k] != 0) {
                throw TraceNotInBaseRing("conjugate-power sum for xi^" + std::to_string(i) +
                                         " left the base ring");
            }
        }
        table.values[i] = acc[0];
    }
    for (std::uint64_t i = m; i + 1 < 2 * m; ++i) {
        const GrElement& expansion = pw[i % (q - 1)];
        std::uint64_t tr = 0;
        for (std::uint64_t k = 0; k < m; ++k) {
            tr = addmod(tr, mulmod(expansion.coeffs[k], table.values[k], ps), ps);
        }
        table.values[i] = tr;
    }
    return table;
}

/// D together with its inverse, both mod p^s.
struct DiscriminantMatrix {
    ModMatrix entries;
    ModMatrix inverse;
};

inline DiscriminantMatrix build_discriminant(const GaloisRing& ring) {
    const TraceTable table = trace_table(ring);
    ModMatrix d(ring.m(), ring.char_mod());
    for (std::size_t i = 0; i < d.dim; ++i) {
        for (std::size_t j = 0; j < d.dim; ++j) {
            d.at(i, j) = table.values[i + j];
        }
    }
    return DiscriminantMatrix{d, invert_mod(d)};
}

/// The coordinate change x -> x' with x'_i = (D x)_i = Tr(x xi^i).
inline GrElement apply_D(const GaloisRing& ring, const DiscriminantMatrix& d,
                         const GrElement& x) {
    return GrElement{mat_vec_mod(d.entries, x.coeffs)};
}

} // namespace grqft
