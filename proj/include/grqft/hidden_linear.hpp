// hidden_linear.hpp -- one-query recovery of a hidden ring element.
//
// An oracle applies the controlled-addition permutation
// |x>|y> -> |x>|y + r x| for a hidden r.  Conjugating one oracle call
// by Fourier transforms on the two registers turns it into
// |x>|y> -> |x + r y>|y>, so a single query on |0>|1> moves the first
// register from 0 to r, recoverable by one measurement.  States are
// simulated exactly; two-register transforms are applied one register
// at a time so no dim^2 x dim^2 matrix is ever materialized.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grqft/complex_matrix.hpp"
#include "grqft/errors.hpp"
#include "grqft/galois_ring.hpp"
#include "grqft/qft.hpp"

namespace grqft {

/// Dense amplitude vector over computational basis states.
struct StateVector {
    std::vector<Complex> amps;

    std::size_t dim() const { return amps.size(); }

    double norm() const {
        double sum = 0.0;
        for (const Complex& a : amps) sum += std::norm(a);
        return std::sqrt(sum);
    }
};

/// |index> as a state of the given dimension.
inline StateVector basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw ShapeMismatch("basis index " + std::to_string(index) +
                            " outside dimension " + std::to_string(dim));
    }
    StateVector state;
    state.amps.assign(dim, Complex{0.0, 0.0});
    state.amps[index] = Complex{1.0, 0.0};
    return state;
}

/// Full dense unitary application (small dimensions only).
inline void apply_unitary(StateVector& state, const ComplexMatrix& u) {
    if (u.dim != state.dim()) {
        throw ShapeMismatch("matrix dimension " + std::to_string(u.dim) +
                            " does not match state dimension " + std::to_string(state.dim()));
    }
    std::vector<Complex> out(state.dim(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < u.dim; ++i) {
        for (std::size_t j = 0; j < u.dim; ++j) {
            const Complex& e = u.at(i, j);
            if (e == Complex{0.0, 0.0}) continue;
            out[i] += e * state.amps[j];
        }
    }
    state.amps = std::move(out);
}

/// Basis permutation as a state map: out[map[i]] = in[i].
inline void apply_index_map(StateVector& state, const PermutationMap& p) {
    validate_permutation(p);
    if (p.dim != state.dim()) {
        throw ShapeMismatch("permutation dimension " + std::to_string(p.dim) +
                            " does not match state dimension " + std::to_string(state.dim()));
    }
    std::vector<Complex> out(state.dim());
    for (std::size_t i = 0; i < p.dim; ++i) out[p.map[i]] = state.amps[i];
    state.amps = std::move(out);
}

/// Applies an n x n matrix to the first (most significant) register of
/// an n^2-dimensional two-register state.
inline void apply_first_register(StateVector& state, const ComplexMatrix& u) {
    const std::size_t n = u.dim;
    if (n * n != state.dim()) {
        throw ShapeMismatch("register dimension " + std::to_string(n) +
                            " does not square to state dimension " +
                            std::to_string(state.dim()));
    }
    std::vector<Complex> out(state.dim(), Complex{0.0, 0.0});
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t xo = 0; xo < n; ++xo) {
            Complex acc{0.0, 0.0};
            for (std::size_t xi = 0; xi < n; ++xi) acc += u.at(xo, xi) * state.amps[xi * n + y];
            out[xo * n + y] = acc;
        }
    }
    state.amps = std::move(out);
}

/// Applies an n x n matrix to the second (least significant) register.
inline void apply_second_register(StateVector& state, const ComplexMatrix& u) {
    const std::size_t n = u.dim;
    if (n * n != state.dim()) {
        throw ShapeMismatch("register dimension " + std::to_string(n) +
                            " does not square to state dimension " +
                            std::to_string(state.dim()));
    }
    std::vector<Complex> out(state.dim(), Complex{0.0, 0.0});
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t yo = 0; yo < n; ++yo) {
            Complex acc{0.0, 0.0};
            for (std::size_t yi = 0; yi < n; ++yi) acc += u.at(yo, yi) * state.amps[x * n + yi];
            out[x * n + yo] = acc;
        }
    }
    state.amps = std::move(out);
}

/// Index of the amplitude with the largest modulus.
inline std::size_t dominant_index(const StateVector& state) {
    std::size_t best = 0;
    double best_mod = -1.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const double mod = std::abs(state.amps[i]);
        if (mod > best_mod) {
            best_mod = mod;
            best = i;
        }
    }
    return best;
}

/// Black box hiding r behind the permutation |x>|y> -> |x>|y + r x>.
/// The hidden element is captured in the permutation table at
/// construction and is not exposed; only queries and their count are.
class HiddenLinearOracle {
public:
    HiddenLinearOracle(const GaloisRing& ring, const GrElement& r)
        : spec_(ring.spec()), gate_(gate_A_map(ring, r)) {}

    const RingSpec& spec() const { return spec_; }

    std::uint64_t queries() const { return queries_; }

    void query(StateVector& state) {
        ++queries_;
        apply_index_map(state, gate_);
    }

private:
    RingSpec spec_;
    PermutationMap gate_;
    std::uint64_t queries_ = 0;
};

inline HiddenLinearOracle make_oracle(const GaloisRing& ring, const GrElement& r) {
    return HiddenLinearOracle(ring, r);
}

struct RecoveryResult {
    GrElement r;
    double amplitude = 0.0;     // modulus of the dominant amplitude
    std::uint64_t queries = 0;  // oracle calls consumed by the recovery
};

/// Recovers the hidden element with a single oracle query:
/// (F' tensor F) . oracle . (F tensor F') applied to |0>|1> yields
/// |r>|1> exactly, so the dominant amplitude identifies r.  Throws
/// AmbiguousMeasurement if the dominant amplitude falls below
/// 1 - 1e-9 or the second register moved.
inline RecoveryResult recover_r(const GaloisRing& ring, HiddenLinearOracle& oracle,
                                std::uint64_t cap = kDefaultDimensionCap) {
    if (!(oracle.spec() == ring.spec())) {
        throw RingMismatch("oracle was built over " + ring_label(oracle.spec()) +
                           ", not " + ring_label(ring.spec()));
    }
    const std::uint64_t before = oracle.queries();
    const ComplexMatrix f = qft_direct(ring, cap);
    const ComplexMatrix fd = dagger(f);
    const std::size_t n = f.dim;

    StateVector state = basis_state(n * n, ring.index_of(ring.one()));
    apply_first_register(state, f);
    apply_second_register(state, fd);
    oracle.query(state);
    apply_first_register(state, fd);
    apply_second_register(state, f);

    const std::size_t peak = dominant_index(state);
    const double amplitude = std::abs(state.amps[peak]);
    if (amplitude < 1.0 - 1e-9 || peak % n != ring.index_of(ring.one())) {
        throw AmbiguousMeasurement(
            "dominant outcome " + std::to_string(peak) + " has amplitude " +
            std::to_string(amplitude) + "; recovery demands a deterministic outcome");
    }
    RecoveryResult result;
    result.r = ring.element_from_index(peak / n);
    result.amplitude = amplitude;
    result.queries = oracle.queries() - before;
    return result;
}

} // namespace grqft
