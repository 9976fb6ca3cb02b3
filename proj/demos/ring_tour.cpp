// ring_tour -- a walk through one small Galois ring: element
// classification, the Teichmuller set, p-adic digits, traces, and the
// trace bilinear-form matrix.

#include <iostream>

#include "grqft/grqft.hpp"

int main() {
    using namespace grqft;

    const GaloisRing ring(RingSpec{2, 2, 2, {1, 1}});
    std::cout << "ring " << ring_label(ring.spec()) << ": cardinality " << ring.cardinality()
              << ", characteristic " << ring.char_mod() << "\n\n";

    std::cout << "elements (index: coeffs class):\n";
    for (std::uint64_t i = 0; i < ring.cardinality(); ++i) {
        const GrElement x = ring.element_from_index(i);
        const char* kind = "zero";
        switch (ring.classify(x)) {
            case ElementClass::Unit: kind = "unit"; break;
            case ElementClass::ZeroDivisor: kind = "zero divisor"; break;
            case ElementClass::Zero: break;
        }
        std::cout << "  " << i << ": " << to_string(x) << " " << kind;
        if (ring.classify(x) == ElementClass::Unit) {
            std::cout << ", inverse " << to_string(ring.inverse(x));
        }
        std::cout << "\n";
    }

    std::cout << "\nTeichmuller set:";
    for (const auto& t : ring.teichmuller_set()) std::cout << " " << to_string(t);
    std::cout << "\n";

    const GrElement sample = ring.from_coeffs({3, 2});
    const PadicForm digits = ring.padic_decompose(sample);
    std::cout << "p-adic digits of " << to_string(sample) << ":";
    for (const auto& d : digits.digits) std::cout << " " << to_string(d);
    std::cout << "  (compose back: " << to_string(ring.padic_compose(digits)) << ")\n";

    const TraceTable table = trace_table(ring);
    std::cout << "\ntrace of basis powers mod " << table.modulus << ":";
    for (const auto v : table.values) std::cout << " " << v;
    std::cout << "\n";

    const auto d = build_discriminant(ring);
    std::cout << "trace form matrix rows: ";
    for (std::size_t i = 0; i < d.entries.dim; ++i) {
        std::cout << "[";
        for (std::size_t j = 0; j < d.entries.dim; ++j) {
            std::cout << d.entries.at(i, j) << (j + 1 < d.entries.dim ? "," : "");
        }
        std::cout << "] ";
    }
    std::cout << "\n";
    return 0;
}
