// hidden_element_demo -- for every element r of a small Galois ring,
// builds an oracle hiding r behind the permutation |x>|y> -> |x>|y+rx>
// and recovers r with a single query by conjugating the oracle with
// Fourier transforms on the two registers.

#include <iostream>

#include "grqft/grqft.hpp"

int main() {
    using namespace grqft;

    const GaloisRing ring(RingSpec{2, 2, 2, {1, 1}});
    std::cout << "ring " << ring_label(ring.spec()) << ", " << ring.cardinality()
              << " candidate hidden elements\n\n";
    std::cout << "hidden      recovered   queries  amplitude\n";

    bool all_exact = true;
    for (std::uint64_t i = 0; i < ring.cardinality(); ++i) {
        const GrElement hidden = ring.element_from_index(i);
        auto oracle = make_oracle(ring, hidden);
        const RecoveryResult result = recover_r(ring, oracle);
        all_exact = all_exact && result.r == hidden;
        std::cout << to_string(hidden) << "\t    " << to_string(result.r) << "\t"
                  << result.queries << "\t " << result.amplitude << "\n";
    }
    std::cout << "\n" << (all_exact ? "every" : "NOT every")
              << " hidden element recovered exactly with one query\n";
    return all_exact ? 0 : 1;
}
