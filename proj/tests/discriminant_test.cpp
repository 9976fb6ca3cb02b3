// discriminant_test.cpp -- modular matrix inversion, the two trace
// table routes, the discriminant matrix and its coordinate change,
// checked against oracles and a determinant-based invertibility test.

#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "grqft/discriminant.hpp"
#include "grqft/galois_ring.hpp"
#include "oracles.hpp"

using grqft::DiscriminantMatrix;
using grqft::GaloisRing;
using grqft::GrElement;
using grqft::ModMatrix;
using grqft::RingSpec;
using grqft::TraceTable;

namespace {

std::vector<RingSpec> sample_specs() {
    return {
        RingSpec{2, 2, 2, {1, 1}}, // GR(4,16)
        RingSpec{2, 1, 2, {1, 1}}, // F_4
        RingSpec{3, 2, 1, {1}},    // Z_9
        RingSpec{2, 3, 2, {1, 1}}, // GR(8,64)
        RingSpec{3, 1, 2, {2, 1}}, // F_9
        RingSpec{3, 2, 2, {8, 4}}, // GR(9,81)
        RingSpec{2, 2, 3, {}},     // GR(4,64), polynomial auto-filled
    };
}

ModMatrix from_rows(std::uint64_t mod, const std::vector<std::vector<std::uint64_t>>& rows) {
    ModMatrix m(rows.size(), mod);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

// Independent invertibility oracle: Laplace-expansion determinant; a
// square matrix over Z_n is invertible iff its determinant is a unit.
long long det_signed(const ModMatrix& m, std::vector<std::size_t> cols, std::size_t row,
                     long long mod) {
    if (cols.size() == 1) return static_cast<long long>(m.at(row, cols[0])) % mod;
    long long det = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j != k) rest.push_back(cols[j]);
        }
        const long long minor = det_signed(m, rest, row + 1, mod);
        const long long term = static_cast<long long>(m.at(row, cols[k])) * minor % mod;
        det = (k % 2 == 0) ? (det + term) % mod : (det - term) % mod;
    }
    return det;
}

std::uint64_t det_mod(const ModMatrix& m) {
    std::vector<std::size_t> cols(m.dim);
    std::iota(cols.begin(), cols.end(), 0);
    const long long mod = static_cast<long long>(m.modulus);
    return static_cast<std::uint64_t>(((det_signed(m, cols, 0, mod) % mod) + mod) % mod);
}

} // namespace

TEST(InvertMod, FrozenCases) {
    const auto d = from_rows(4, {{2, 3}, {3, 3}});
    EXPECT_EQ(grqft::invert_mod(d), from_rows(4, {{3, 1}, {1, 2}}));
    const auto id = ModMatrix::identity(3, 9);
    EXPECT_EQ(grqft::invert_mod(id), id);
    EXPECT_THROW(grqft::invert_mod(from_rows(4, {{2, 0}, {0, 2}})), grqft::NotInvertible);
    EXPECT_THROW(grqft::invert_mod(from_rows(4, {{1, 1}, {1, 1}})), grqft::NotInvertible);
}

TEST(InvertMod, RowSwapFindsBuriedUnitPivot) {
    // Leading entry is a zero divisor; the unit pivot sits in row 1.
    const auto m = from_rows(4, {{2, 1}, {1, 0}});
    const auto inv = grqft::invert_mod(m);
    EXPECT_EQ(grqft::mat_mul_mod(m, inv), ModMatrix::identity(2, 4));
    EXPECT_EQ(grqft::mat_mul_mod(inv, m), ModMatrix::identity(2, 4));
}

TEST(InvertMod, AgreesWithDeterminantOracle) {
    std::mt19937_64 rng(42);
    int invertible = 0, singular = 0;
    for (const std::uint64_t mod : {2u, 3u, 4u, 8u, 9u, 27u}) {
        for (std::size_t dim = 1; dim <= 4; ++dim) {
            for (int trial = 0; trial < 200; ++trial) {
                ModMatrix m(dim, mod);
                for (auto& e : m.entries) e = rng() % mod;
                const bool det_is_unit = grqft::inv_mod(det_mod(m), mod).has_value();
                if (det_is_unit) {
                    const auto inv = grqft::invert_mod(m);
                    EXPECT_EQ(grqft::mat_mul_mod(m, inv), ModMatrix::identity(dim, mod));
                    EXPECT_EQ(grqft::mat_mul_mod(inv, m), ModMatrix::identity(dim, mod));
                    ++invertible;
                } else {
                    EXPECT_THROW(grqft::invert_mod(m), grqft::NotInvertible);
                    ++singular;
                }
            }
        }
    }
    EXPECT_GT(invertible, 100);
    EXPECT_GT(singular, 100);
}

TEST(MatOps, ShapeChecks) {
    const auto a = ModMatrix::identity(2, 4);
    const auto b = ModMatrix::identity(3, 4);
    const auto c = ModMatrix::identity(2, 8);
    EXPECT_THROW(grqft::mat_mul_mod(a, b), grqft::ShapeMismatch);
    EXPECT_THROW(grqft::mat_mul_mod(a, c), grqft::ShapeMismatch);
    EXPECT_THROW(grqft::mat_vec_mod(a, {1, 2, 3}), grqft::ShapeMismatch);
}

TEST(TraceTableOps, FrozenCases) {
    EXPECT_EQ(grqft::trace_table(GaloisRing(RingSpec{2, 2, 2, {1, 1}})).values,
              (std::vector<std::uint64_t>{2, 3, 3}));
    EXPECT_EQ(grqft::trace_table(GaloisRing(RingSpec{2, 1, 2, {1, 1}})).values,
              (std::vector<std::uint64_t>{0, 1, 1}));
    EXPECT_EQ(grqft::trace_table(GaloisRing(RingSpec{2, 3, 2, {1, 1}})).values,
              (std::vector<std::uint64_t>{2, 7, 7}));
    EXPECT_EQ(grqft::trace_table(GaloisRing(RingSpec{3, 2, 1, {1}})).values,
              (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(grqft::trace_table(GaloisRing(RingSpec{2, 2, 1, {3}})).values,
              (std::vector<std::uint64_t>{1}));
}

TEST(TraceTableOps, FirstEntryIsM) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        EXPECT_EQ(grqft::trace_table(r).values[0], spec.m % r.char_mod());
    }
}

TEST(TraceTableOps, MatchesOracle) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        EXPECT_EQ(grqft::trace_table(r).values,
                  oracle::trace_table(r.spec().h, r.char_mod(), spec.p));
    }
}

TEST(TraceTableOps, RecursiveRouteAgrees) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        EXPECT_EQ(grqft::trace_table(r), grqft::trace_table_recursive(r));
    }
}

TEST(Discriminant, FrozenCases) {
    const DiscriminantMatrix d416 = grqft::build_discriminant(GaloisRing(RingSpec{2, 2, 2, {1, 1}}));
    EXPECT_EQ(d416.entries, from_rows(4, {{2, 3}, {3, 3}}));
    EXPECT_EQ(d416.inverse, from_rows(4, {{3, 1}, {1, 2}}));

    const DiscriminantMatrix d4 = grqft::build_discriminant(GaloisRing(RingSpec{2, 1, 2, {1, 1}}));
    EXPECT_EQ(d4.entries, from_rows(2, {{0, 1}, {1, 1}}));
    EXPECT_EQ(d4.inverse, from_rows(2, {{1, 1}, {1, 0}}));

    const DiscriminantMatrix d1 = grqft::build_discriminant(GaloisRing(RingSpec{3, 2, 1, {1}}));
    EXPECT_EQ(d1.entries, from_rows(9, {{1}}));
    EXPECT_EQ(d1.inverse, from_rows(9, {{1}}));
}

TEST(Discriminant, HankelSymmetricInvertible) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        const auto d = grqft::build_discriminant(r);
        const auto id = ModMatrix::identity(d.entries.dim, d.entries.modulus);
        EXPECT_EQ(grqft::mat_mul_mod(d.entries, d.inverse), id);
        EXPECT_EQ(grqft::mat_mul_mod(d.inverse, d.entries), id);
        for (std::size_t i = 0; i < d.entries.dim; ++i) {
            for (std::size_t j = 0; j < d.entries.dim; ++j) {
                EXPECT_EQ(d.entries.at(i, j), d.entries.at(j, i));
                if (i + 1 < d.entries.dim && j > 0) {
                    EXPECT_EQ(d.entries.at(i, j), d.entries.at(i + 1, j - 1))
                        << "Hankel property violated";
                }
            }
        }
    }
}

TEST(Discriminant, BilinearTraceIdentityExhaustive) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        const auto d = grqft::build_discriminant(r);
        const std::uint64_t ps = r.char_mod();
        for (std::uint64_t i = 0; i < r.cardinality(); ++i) {
            const auto x = r.element_from_index(i);
            for (std::uint64_t j = 0; j < r.cardinality(); ++j) {
                const auto y = r.element_from_index(j);
                const auto dy = grqft::mat_vec_mod(d.entries, y.coeffs);
                std::uint64_t bilinear = 0;
                for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
                    bilinear = grqft::addmod(bilinear, grqft::mulmod(x.coeffs[k], dy[k], ps), ps);
                }
                ASSERT_EQ(r.trace(r.mul(x, y)).value, bilinear)
                    << "x=" << grqft::to_string(x) << " y=" << grqft::to_string(y);
            }
        }
    }
}

TEST(ApplyD, FrozenCases) {
    const GaloisRing r(RingSpec{2, 2, 2, {1, 1}});
    const auto d = grqft::build_discriminant(r);
    EXPECT_EQ(grqft::apply_D(r, d, r.one()), r.from_coeffs({2, 3}));
    EXPECT_EQ(grqft::apply_D(r, d, r.xi()), r.from_coeffs({3, 3}));
    EXPECT_EQ(grqft::apply_D(r, d, r.zero()), r.zero());
}

TEST(ApplyD, CoordinatesAreTraces) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        const auto d = grqft::build_discriminant(r);
        for (std::uint64_t i = 0; i < r.cardinality(); ++i) {
            const auto x = r.element_from_index(i);
            const auto xp = grqft::apply_D(r, d, x);
            for (std::uint64_t k = 0; k < spec.m; ++k) {
                EXPECT_EQ(xp.coeffs[k], r.trace(r.mul(x, r.xi_pow(k))).value);
            }
        }
    }
}

TEST(ApplyD, BijectionAndInverse) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        const auto d = grqft::build_discriminant(r);
        std::set<std::vector<std::uint64_t>> image;
        for (std::uint64_t i = 0; i < r.cardinality(); ++i) {
            const auto x = r.element_from_index(i);
            const auto xp = grqft::apply_D(r, d, x);
            image.insert(xp.coeffs);
            EXPECT_EQ(GrElement{grqft::mat_vec_mod(d.inverse, xp.coeffs)}, x);
        }
        EXPECT_EQ(image.size(), r.cardinality());
    }
}

TEST(ApplyD, NoNonzeroVectorAnnihilatesD) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        if (r.char_mod() > 9 || spec.m > 3) continue;
        const auto d = grqft::build_discriminant(r);
        const std::vector<std::uint64_t> zero(spec.m, 0);
        for (std::uint64_t i = 1; i < r.cardinality(); ++i) {
            const auto b = r.element_from_index(i);
            // D is symmetric, so b^T D is (D b)^T.
            EXPECT_NE(grqft::mat_vec_mod(d.entries, b.coeffs), zero)
                << "b=" << grqft::to_string(b);
        }
    }
}

TEST(ApplyD, MatVecUsesExactlyMSquaredMultiplications) {
    for (const auto& spec : sample_specs()) {
        const GaloisRing r(spec);
        const auto d = grqft::build_discriminant(r);
        grqft::OpCount count;
        grqft::mat_vec_mod(d.entries, r.xi().coeffs, &count);
        EXPECT_EQ(count.mults, spec.m * spec.m);
        EXPECT_EQ(count.adds, spec.m * spec.m);
    }
}
