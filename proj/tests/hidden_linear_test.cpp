// hidden_linear_test.cpp -- exact one-query recovery of the hidden
// element, state kernel correctness against dense references, and the
// oracle's query accounting.

#include <gtest/gtest.h>

#include <complex>
#include <random>
#include <vector>

#include "grqft/hidden_linear.hpp"
#include "grqft/qft.hpp"

using grqft::Complex;
using grqft::ComplexMatrix;
using grqft::GaloisRing;
using grqft::GrElement;
using grqft::RingSpec;
using grqft::StateVector;

namespace {

GaloisRing gr416() { return GaloisRing(RingSpec{2, 2, 2, {1, 1}}); }

StateVector random_state(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector state;
    state.amps.resize(dim);
    for (auto& a : state.amps) a = Complex{gauss(rng), gauss(rng)};
    const double norm = state.norm();
    for (auto& a : state.amps) a /= norm;
    return state;
}

double max_amp_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
    }
    return worst;
}

} // namespace

TEST(StateVector, BasisStateIsNormalizedPointMass) {
    const StateVector s = grqft::basis_state(8, 3);
    EXPECT_EQ(s.dim(), 8u);
    EXPECT_DOUBLE_EQ(s.norm(), 1.0);
    EXPECT_EQ(s.amps[3], (Complex{1.0, 0.0}));
    EXPECT_THROW(grqft::basis_state(8, 8), grqft::ShapeMismatch);
}

TEST(StateVector, RegisterWiseApplicationMatchesDenseKron) {
    const GaloisRing ring = gr416();
    const ComplexMatrix f = grqft::qft_direct(ring);
    const ComplexMatrix fd = grqft::dagger(f);
    const std::size_t n = f.dim;

    StateVector reference = random_state(n * n, 99);
    StateVector split = reference;

    grqft::apply_unitary(reference, grqft::kron(f, fd));
    grqft::apply_first_register(split, f);
    grqft::apply_second_register(split, fd);
    EXPECT_LT(max_amp_diff(reference, split), 1e-12);
    EXPECT_NEAR(split.norm(), 1.0, 1e-12);
}

TEST(StateVector, IndexMapMatchesDensePermutationMatrix) {
    const GaloisRing ring = gr416();
    const auto gate = grqft::gate_A_map(ring, ring.xi());

    StateVector reference = random_state(gate.dim, 7);
    StateVector mapped = reference;
    grqft::apply_unitary(reference, grqft::perm_matrix(gate));
    grqft::apply_index_map(mapped, gate);
    EXPECT_LT(max_amp_diff(reference, mapped), 1e-15);
}

TEST(StateVector, ShapeGuards) {
    StateVector s = grqft::basis_state(6, 0);
    EXPECT_THROW(grqft::apply_unitary(s, ComplexMatrix::identity(5)), grqft::ShapeMismatch);
    EXPECT_THROW(grqft::apply_first_register(s, ComplexMatrix::identity(3)),
                 grqft::ShapeMismatch);
    EXPECT_THROW(grqft::apply_second_register(s, ComplexMatrix::identity(3)),
                 grqft::ShapeMismatch);
    grqft::PermutationMap wrong{5, {0, 1, 2, 3, 4}};
    EXPECT_THROW(grqft::apply_index_map(s, wrong), grqft::ShapeMismatch);
}

TEST(HiddenLinear, OneQueryExactForEveryElement) {
    const std::vector<RingSpec> specs{
        RingSpec{2, 2, 2, {1, 1}}, // 16 candidates
        RingSpec{2, 1, 2, {1, 1}}, // 4
        RingSpec{3, 2, 1, {1}},    // 9
        RingSpec{2, 3, 2, {1, 1}}, // 64
        RingSpec{3, 1, 2, {2, 1}}, // 9
    };
    for (const auto& spec : specs) {
        const GaloisRing ring(spec);
        for (std::uint64_t ri = 0; ri < ring.cardinality(); ++ri) {
            const GrElement hidden = ring.element_from_index(ri);
            auto oracle = grqft::make_oracle(ring, hidden);
            ASSERT_EQ(oracle.queries(), 0u);
            const auto result = grqft::recover_r(ring, oracle);
            EXPECT_EQ(result.r, hidden) << grqft::ring_label(spec) << " r index " << ri;
            EXPECT_GE(result.amplitude, 1.0 - 1e-9);
            EXPECT_EQ(result.queries, 1u);
            EXPECT_EQ(oracle.queries(), 1u);
        }
    }
}

TEST(HiddenLinear, PipelinePreservesNormAtEveryStage) {
    const GaloisRing ring = gr416();
    const ComplexMatrix f = grqft::qft_direct(ring);
    const ComplexMatrix fd = grqft::dagger(f);
    const std::size_t n = f.dim;
    auto oracle = grqft::make_oracle(ring, ring.xi());

    StateVector state = grqft::basis_state(n * n, 1);
    grqft::apply_first_register(state, f);
    EXPECT_NEAR(state.norm(), 1.0, 1e-12);
    grqft::apply_second_register(state, fd);
    EXPECT_NEAR(state.norm(), 1.0, 1e-12);
    oracle.query(state);
    EXPECT_NEAR(state.norm(), 1.0, 1e-12);
    grqft::apply_first_register(state, fd);
    EXPECT_NEAR(state.norm(), 1.0, 1e-12);
    grqft::apply_second_register(state, f);
    EXPECT_NEAR(state.norm(), 1.0, 1e-12);
}

TEST(HiddenLinear, ConjugatedPipelineMatchesDirectTargetGate) {
    const GaloisRing ring = gr416();
    const ComplexMatrix f = grqft::qft_direct(ring);
    const ComplexMatrix fd = grqft::dagger(f);
    const std::size_t n = f.dim;

    for (const std::uint64_t ri : {0ULL, 1ULL, 4ULL, 11ULL}) {
        const GrElement r = ring.element_from_index(ri);
        StateVector conjugated = grqft::basis_state(n * n, 1);
        grqft::apply_first_register(conjugated, f);
        grqft::apply_second_register(conjugated, fd);
        auto oracle = grqft::make_oracle(ring, r);
        oracle.query(conjugated);
        grqft::apply_first_register(conjugated, fd);
        grqft::apply_second_register(conjugated, f);

        StateVector direct = grqft::basis_state(n * n, 1);
        grqft::apply_index_map(direct, grqft::gate_B_map(ring, r));
        EXPECT_LT(max_amp_diff(conjugated, direct), 1e-10) << "r index " << ri;
    }
}

TEST(HiddenLinear, OracleDemandsItsOwnRing) {
    const GaloisRing f4(RingSpec{2, 1, 2, {1, 1}});
    const GaloisRing z9(RingSpec{3, 2, 1, {1}});
    auto oracle = grqft::make_oracle(f4, f4.one());
    EXPECT_THROW(grqft::recover_r(z9, oracle), grqft::RingMismatch);
    EXPECT_EQ(oracle.queries(), 0u) << "failed recovery must not consume a query";
}

TEST(HiddenLinear, QueryCounterAccumulates) {
    const GaloisRing ring = gr416();
    auto oracle = grqft::make_oracle(ring, ring.one());
    StateVector s = grqft::basis_state(ring.cardinality() * ring.cardinality(), 0);
    oracle.query(s);
    oracle.query(s);
    EXPECT_EQ(oracle.queries(), 2u);
    const auto result = grqft::recover_r(ring, oracle);
    EXPECT_EQ(result.r, ring.one());
    EXPECT_EQ(result.queries, 1u) << "recovery reports only its own consumption";
    EXPECT_EQ(oracle.queries(), 3u);
}
