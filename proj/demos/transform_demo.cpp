// transform_demo -- builds the Fourier matrix over a Galois ring two
// independent ways (entrywise characters; tensor power of base
// transforms composed with the coordinate permutation) and shows the
// identities that make it useful: agreement of the two constructions,
// unitarity, and diagonalization of a shift.

#include <iomanip>
#include <iostream>

#include "grqft/grqft.hpp"

int main() {
    using namespace grqft;

    const GaloisRing ring(RingSpec{2, 2, 2, {1, 1}});
    std::cout << "ring " << ring_label(ring.spec()) << "\n";

    const ComplexMatrix direct = qft_direct(ring);
    const ComplexMatrix factored = qft_factored(ring);
    std::cout << std::scientific << std::setprecision(3);
    std::cout << "max |direct - factored|    = " << max_abs_diff(direct, factored) << "\n";
    std::cout << "unitarity defect           = " << unitarity_defect(direct) << "\n";

    const GrElement alpha = ring.xi();
    const ComplexMatrix conjugated =
        matmul(apply_perm_right(direct, shift_map(ring, alpha)), dagger(direct));
    const ComplexMatrix diag = diagonal_matrix(character_diagonal(ring, alpha));
    std::cout << "shift diagonalization gap  = " << max_abs_diff(conjugated, diag)
              << "  (alpha = " << to_string(alpha) << ")\n";

    const auto show = [](const Complex& z) {
        std::cout << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "j";
    };
    std::cout << "\nfirst row of the transform (constant 1/sqrt(N)):\n  ";
    std::cout << std::fixed << std::setprecision(4);
    for (std::size_t j = 0; j < 4; ++j) {
        show(direct.at(0, j));
        std::cout << "  ";
    }
    std::cout << "...\n";

    std::cout << "a fourth root of unity row entry: F[1][idx(xi)] = ";
    show(direct.at(1, ring.index_of(ring.xi())));
    std::cout << "\n";
    return 0;
}
