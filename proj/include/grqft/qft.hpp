// qft.hpp -- the Fourier transform over GR(p^s, p^sm) and its friends.
//
// Two independent constructions of the same unitary:
//   * qft_direct fills in the character matrix entry by entry,
//     (1/sqrt(N)) chi_alpha(u) with chi_alpha(u) = omega^{Tr(alpha u)};
//   * qft_factored composes the m-fold tensor power of the base-ring
//     transform with the discriminant permutation U_D.
// Their agreement is the central cross-check of the whole library.
//
// Index convention everywhere: a ring element maps to the mixed-radix
// integer sum_i a_i (p^s)^i with a_0 least significant; Kronecker
// factors put the FIRST factor on the most significant digits; the
// two-register index is idx(x) * N + idx(y) for |x>|y>.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "grqft/complex_matrix.hpp"
#include "grqft/discriminant.hpp"
#include "grqft/errors.hpp"
#include "grqft/galois_ring.hpp"

namespace grqft {

/// exp(2 pi i k / modulus), with k reduced first so the trigonometric
/// argument stays small.
inline Complex root_of_unity(std::uint64_t modulus, std::uint64_t k) {
    k %= modulus;
    // Quadrant points come out exact; polar() would leave sin(pi)-sized
    // dust on the axes otherwise.
    if (k == 0) return {1.0, 0.0};
    if (2 * k == modulus) return {-1.0, 0.0};
    if (4 * k == modulus) return {0.0, 1.0};
    if (4 * k == 3 * modulus) return {0.0, -1.0};
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(modulus);
    return std::polar(1.0, angle);
}

/// Additive character chi_alpha(u) = omega_{p^s}^{Tr(alpha u)}.
inline Complex character(const GaloisRing& ring, const GrElement& alpha, const GrElement& u) {
    return root_of_unity(ring.char_mod(), ring.trace(ring.mul(alpha, u)).value);
}

inline void require_within_cap(std::uint64_t dim, std::uint64_t cap, const char* what) {
    if (dim > cap) {
        throw DimensionCapExceeded(std::string(what) + " needs dimension " +
                                   std::to_string(dim) + " above cap " + std::to_string(cap));
    }
}

/// The character matrix route: entry (idx(alpha), idx(u)) is
/// chi_alpha(u) / sqrt(N).
inline ComplexMatrix qft_direct(const GaloisRing& ring,
                                std::uint64_t cap = kDefaultDimensionCap) {
    const std::uint64_t n = ring.cardinality();
    require_within_cap(n, cap, "direct Fourier matrix");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix f(static_cast<std::size_t>(n));
    for (std::uint64_t a = 0; a < n; ++a) {
        const GrElement alpha = ring.element_from_index(a);
        for (std::uint64_t u = 0; u < n; ++u) {
            f.at(a, u) = scale * character(ring, alpha, ring.element_from_index(u));
        }
    }
    return f;
}

/// The base-ring transform F_R: the p^s-dimensional Fourier matrix
/// with entries omega^{x y} / sqrt(p^s).
inline ComplexMatrix qft_base(std::uint64_t p, std::uint64_t s,
                              std::uint64_t cap = kDefaultDimensionCap) {
    const auto ps = checked_pow(p, s);
    if (!ps) throw SpecOutOfRange("p^s exceeds 64 bits");
    require_within_cap(*ps, cap, "base-ring Fourier matrix");
    const std::uint64_t n = *ps;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix f(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t y = 0; y < n; ++y) {
            f.at(x, y) = scale * root_of_unity(n, mulmod(x, y, n));
        }
    }
    return f;
}

/// U_D as an index map: |x> goes to |x'> with coefficient vector D x.
inline PermutationMap discriminant_permutation(const GaloisRing& ring,
                                               const DiscriminantMatrix& d) {
    const std::uint64_t n = ring.cardinality();
    PermutationMap perm{static_cast<std::size_t>(n), std::vector<std::size_t>(n, 0)};
    for (std::uint64_t j = 0; j < n; ++j) {
        const GrElement image = apply_D(ring, d, ring.element_from_index(j));
        perm.map[j] = static_cast<std::size_t>(ring.index_of(image));
    }
    validate_permutation(perm);
    return perm;
}

/// The factored route: (F_R tensor ... tensor F_R) * U_D, with U_D
/// applied first (a column gather, never a dense product).
inline ComplexMatrix qft_factored(const GaloisRing& ring,
                                  std::uint64_t cap = kDefaultDimensionCap) {
    require_within_cap(ring.cardinality(), cap, "factored Fourier matrix");
    const ComplexMatrix base = qft_base(ring.p(), ring.s(), cap);
    const ComplexMatrix stack = tensor_power(base, static_cast<std::size_t>(ring.m()));
    const DiscriminantMatrix d = build_discriminant(ring);
    return apply_perm_right(stack, discriminant_permutation(ring, d));
}

/// The additive shift |u> -> |u + alpha> as an index map.
inline PermutationMap shift_map(const GaloisRing& ring, const GrElement& alpha) {
    const std::uint64_t n = ring.cardinality();
    PermutationMap perm{static_cast<std::size_t>(n), std::vector<std::size_t>(n, 0)};
    for (std::uint64_t u = 0; u < n; ++u) {
        perm.map[u] = static_cast<std::size_t>(
            ring.index_of(ring.add(ring.element_from_index(u), alpha)));
    }
    return perm;
}

inline ComplexMatrix shift_operator(const GaloisRing& ring, const GrElement& alpha,
                                    std::uint64_t cap = kDefaultDimensionCap) {
    require_within_cap(ring.cardinality(), cap, "shift operator");
    return perm_matrix(shift_map(ring, alpha));
}

/// Eigenvalues chi_alpha(u) of S_alpha in index order of u.
inline std::vector<Complex> character_diagonal(const GaloisRing& ring, const GrElement& alpha) {
    const std::uint64_t n = ring.cardinality();
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (std::uint64_t u = 0; u < n; ++u) {
        d[u] = character(ring, alpha, ring.element_from_index(u));
    }
    return d;
}

/// Control additive gate A_r |x>|y> = |x>|y + r x| as an index map on
/// the two-register space (x most significant).
inline PermutationMap gate_A_map(const GaloisRing& ring, const GrElement& r) {
    const std::uint64_t n = ring.cardinality();
    PermutationMap perm{static_cast<std::size_t>(n * n), std::vector<std::size_t>(n * n, 0)};
    for (std::uint64_t x = 0; x < n; ++x) {
        const GrElement rx = ring.mul(r, ring.element_from_index(x));
        for (std::uint64_t y = 0; y < n; ++y) {
            const std::uint64_t y2 = ring.index_of(ring.add(ring.element_from_index(y), rx));
            perm.map[x * n + y] = static_cast<std::size_t>(x * n + y2);
        }
    }
    return perm;
}

/// Control additive gate B_r |x>|y> = |x + r y>|y>.
inline PermutationMap gate_B_map(const GaloisRing& ring, const GrElement& r) {
    const std::uint64_t n = ring.cardinality();
    PermutationMap perm{static_cast<std::size_t>(n * n), std::vector<std::size_t>(n * n, 0)};
    for (std::uint64_t y = 0; y < n; ++y) {
        const GrElement ry = ring.mul(r, ring.element_from_index(y));
        for (std::uint64_t x = 0; x < n; ++x) {
            const std::uint64_t x2 = ring.index_of(ring.add(ring.element_from_index(x), ry));
            perm.map[x * n + y] = static_cast<std::size_t>(x2 * n + y);
        }
    }
    return perm;
}

inline ComplexMatrix gate_A(const GaloisRing& ring, const GrElement& r,
                            std::uint64_t cap = kDefaultDimensionCap) {
    require_within_cap(ring.cardinality(), cap, "two-register gate");
    return perm_matrix(gate_A_map(ring, r));
}

inline ComplexMatrix gate_B(const GaloisRing& ring, const GrElement& r,
                            std::uint64_t cap = kDefaultDimensionCap) {
    require_within_cap(ring.cardinality(), cap, "two-register gate");
    return perm_matrix(gate_B_map(ring, r));
}

} // namespace grqft
