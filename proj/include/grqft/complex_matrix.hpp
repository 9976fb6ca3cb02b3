// complex_matrix.hpp -- dense complex matrices, permutation maps and
// the small linear-algebra kernel the unitary constructions need.
//
// Matrices are row-major with double-precision complex entries.
// Permutations are carried both ways: as an index map (map[src] = dest,
// O(dim) storage, used for state-vector application) and expanded to a
// 0/1 matrix when dense algebra wants them.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "grqft/errors.hpp"

namespace grqft {

using Complex = std::complex<double>;

struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries; // dim * dim, row-major

    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t d) : dim(d), entries(d * d, Complex{0.0, 0.0}) {}

    Complex& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

    static ComplexMatrix identity(std::size_t d) {
        ComplexMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

/// Permutation as an index map: basis state |j> goes to |map[j]>.
struct PermutationMap {
    std::size_t dim = 0;
    std::vector<std::size_t> map;

    friend bool operator==(const PermutationMap&, const PermutationMap&) = default;
};

inline void require_square_match(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw ShapeMismatch(std::string(what) + ": dimensions " + std::to_string(a) +
                            " and " + std::to_string(b) + " differ");
    }
}

/// Checks bijectivity; throws ShapeMismatch on a malformed map.
inline void validate_permutation(const PermutationMap& p) {
    if (p.map.size() != p.dim) {
        throw ShapeMismatch("permutation map length does not match its dimension");
    }
    std::vector<bool> hit(p.dim, false);
    for (std::size_t dest : p.map) {
        if (dest >= p.dim || hit[dest]) {
            throw ShapeMismatch("index map is not a permutation");
        }
        hit[dest] = true;
    }
}

inline PermutationMap invert_permutation(const PermutationMap& p) {
    validate_permutation(p);
    PermutationMap inv{p.dim, std::vector<std::size_t>(p.dim, 0)};
    for (std::size_t j = 0; j < p.dim; ++j) inv.map[p.map[j]] = j;
    return inv;
}

/// First applies `first`, then `second`.
inline PermutationMap compose_permutations(const PermutationMap& second,
                                           const PermutationMap& first) {
    require_square_match(second.dim, first.dim, "permutation composition");
    PermutationMap out{first.dim, std::vector<std::size_t>(first.dim, 0)};
    for (std::size_t j = 0; j < first.dim; ++j) out.map[j] = second.map[first.map[j]];
    return out;
}

/// Expands the map to its 0/1 matrix: entry (map[j], j) = 1.
inline ComplexMatrix perm_matrix(const PermutationMap& p) {
    validate_permutation(p);
    ComplexMatrix m(p.dim);
    for (std::size_t j = 0; j < p.dim; ++j) m.at(p.map[j], j) = 1.0;
    return m;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_match(a.dim, b.dim, "matrix product");
    ComplexMatrix out(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            const Complex* brow = &b.entries[k * b.dim];
            Complex* orow = &out.entries[i * out.dim];
            for (std::size_t j = 0; j < a.dim; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

/// M * P for a permutation P: a column gather, O(dim^2) instead of a
/// full product.
inline ComplexMatrix apply_perm_right(const ComplexMatrix& m, const PermutationMap& p) {
    require_square_match(m.dim, p.dim, "matrix-permutation product");
    validate_permutation(p);
    ComplexMatrix out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            out.at(i, j) = m.at(i, p.map[j]);
        }
    }
    return out;
}

/// P * M for a permutation P: a row scatter, row k of M becomes row
/// map[k] of the result.
inline ComplexMatrix apply_perm_left(const PermutationMap& p, const ComplexMatrix& m) {
    require_square_match(p.dim, m.dim, "permutation-matrix product");
    validate_permutation(p);
    ComplexMatrix out(m.dim);
    for (std::size_t k = 0; k < m.dim; ++k) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            out.at(p.map[k], j) = m.at(k, j);
        }
    }
    return out;
}

inline ComplexMatrix dagger(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            out.at(j, i) = std::conj(m.at(i, j));
        }
    }
    return out;
}

/// Kronecker product with the first factor most significant.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.dim * b.dim);
    for (std::size_t i1 = 0; i1 < a.dim; ++i1) {
        for (std::size_t j1 = 0; j1 < a.dim; ++j1) {
            const Complex f = a.at(i1, j1);
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t i2 = 0; i2 < b.dim; ++i2) {
                for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
                    out.at(i1 * b.dim + i2, j1 * b.dim + j2) = f * b.at(i2, j2);
                }
            }
        }
    }
    return out;
}

inline ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors) {
    if (factors.empty()) return ComplexMatrix::identity(1);
    ComplexMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
    return out;
}

inline ComplexMatrix tensor_power(const ComplexMatrix& m, std::size_t count) {
    return tensor(std::vector<ComplexMatrix>(count, m));
}

inline ComplexMatrix diagonal_matrix(const std::vector<Complex>& d) {
    ComplexMatrix out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out.at(i, i) = d[i];
    return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_match(a.dim, b.dim, "matrix comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    }
    return worst;
}

/// Largest deviation of M M^dagger and M^dagger M from the identity.
inline double unitarity_defect(const ComplexMatrix& m) {
    const ComplexMatrix md = dagger(m);
    const ComplexMatrix id = ComplexMatrix::identity(m.dim);
    return std::max(max_abs_diff(matmul(m, md), id), max_abs_diff(matmul(md, m), id));
}

} // namespace grqft
