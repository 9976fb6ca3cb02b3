// verify_suite_test.cpp -- the structured checks: pass on known-good
// rings, produce labelled per-class entries, skip visibly above the
// dimension limits, isolate construction failures, and emit
// deterministic reports.

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "grqft/verify.hpp"

using grqft::CheckResult;
using grqft::CheckStatus;
using grqft::GaloisRing;
using grqft::RingSpec;
using grqft::VerifyOptions;

namespace {

GaloisRing gr416() { return GaloisRing(RingSpec{2, 2, 2, {1, 1}}); }

const CheckResult& find_check(const std::vector<CheckResult>& checks, const std::string& name,
                              const RingSpec& spec) {
    for (const auto& c : checks) {
        if (c.name == name && c.ring == spec) return c;
    }
    throw std::runtime_error("missing check " + name + " for " + grqft::ring_label(spec));
}

} // namespace

TEST(CharacterSumCheck, PassesOnGr416) {
    const auto result = grqft::check_character_sum(gr416());
    EXPECT_EQ(result.status, CheckStatus::Pass);
    EXPECT_LT(result.max_deviation, 1e-8);
    EXPECT_GE(result.max_deviation, 0.0);
}

TEST(CharacterSumCheck, ByClassEntriesAndCounts) {
    const auto results = grqft::check_character_sum_by_class(gr416());
    ASSERT_EQ(results.size(), 4u);
    for (const auto& r : results) {
        EXPECT_EQ(r.status, CheckStatus::Pass) << r.name;
    }
    EXPECT_EQ(results[0].name, "character_sum_class_zero");
    EXPECT_EQ(results[1].name, "character_sum_class_one");
    EXPECT_EQ(results[2].name, "character_sum_class_units");
    EXPECT_NE(results[2].detail.find("12 unit alphas"), std::string::npos);
    EXPECT_EQ(results[3].name, "character_sum_class_zero_divisors");
    EXPECT_NE(results[3].detail.find("3 zero-divisor alphas"), std::string::npos);
}

TEST(TraceKernelCheck, FrozenKernelSizes) {
    const auto r416 = grqft::check_trace_kernel(gr416());
    EXPECT_EQ(r416.status, CheckStatus::Pass);
    EXPECT_NE(r416.detail.find("kernel size 4"), std::string::npos);

    const auto rf4 = grqft::check_trace_kernel(GaloisRing(RingSpec{2, 1, 2, {1, 1}}));
    EXPECT_EQ(rf4.status, CheckStatus::Pass);
    EXPECT_NE(rf4.detail.find("kernel size 2"), std::string::npos);

    const auto rz9 = grqft::check_trace_kernel(GaloisRing(RingSpec{3, 2, 1, {1}}));
    EXPECT_EQ(rz9.status, CheckStatus::Pass);
    EXPECT_NE(rz9.detail.find("kernel size 1"), std::string::npos);
}

TEST(OrthonormalityCheck, ExhaustiveBelowAndSampledAboveThreshold) {
    const auto small = grqft::check_orthonormality(gr416());
    EXPECT_EQ(small.status, CheckStatus::Pass);
    EXPECT_FALSE(small.seed.has_value());
    EXPECT_NE(small.detail.find("exhaustive"), std::string::npos);

    const GaloisRing big(RingSpec{2, 7, 1, {127}});
    VerifyOptions opts;
    opts.seed = 1234;
    const auto sampled = grqft::check_orthonormality(big, opts);
    EXPECT_EQ(sampled.status, CheckStatus::Pass);
    ASSERT_TRUE(sampled.seed.has_value());
    EXPECT_EQ(*sampled.seed, 1234u);
    EXPECT_NE(sampled.detail.find("sampled"), std::string::npos);
}

TEST(UnitarityCheck, PassesSmallSkipsLarge) {
    EXPECT_EQ(grqft::check_unitarity(gr416()).status, CheckStatus::Pass);

    const GaloisRing big(RingSpec{2, 10, 1, {1023}});
    const auto result = grqft::check_unitarity(big);
    EXPECT_EQ(result.status, CheckStatus::Skipped);
    EXPECT_NE(result.detail.find("1024"), std::string::npos);
}

TEST(FactorizationCheck, PassesAndHonorsCap) {
    EXPECT_EQ(grqft::check_factorization(gr416()).status, CheckStatus::Pass);
    VerifyOptions tight;
    tight.cap = 8;
    const auto result = grqft::check_factorization(gr416(), tight);
    EXPECT_EQ(result.status, CheckStatus::Skipped);
    EXPECT_NE(result.detail.find("cap 8"), std::string::npos);
}

TEST(ShiftDiagonalizationCheck, DenseAndOneSidedForms) {
    const auto dense = grqft::check_shift_diagonalization(gr416());
    EXPECT_EQ(dense.status, CheckStatus::Pass);
    EXPECT_NE(dense.detail.find("dense"), std::string::npos);

    const GaloisRing mid(RingSpec{2, 7, 1, {127}});
    const auto one_sided = grqft::check_shift_diagonalization(mid);
    EXPECT_EQ(one_sided.status, CheckStatus::Pass);
    EXPECT_NE(one_sided.detail.find("one-sided"), std::string::npos);
}

TEST(ControlInversionCheck, DenseCommutationAndSkip) {
    const auto dense = grqft::check_control_inversion(gr416());
    EXPECT_EQ(dense.status, CheckStatus::Pass);
    EXPECT_LT(dense.max_deviation, 1e-10);
    EXPECT_NE(dense.detail.find("dense"), std::string::npos);

    const GaloisRing z32(RingSpec{2, 5, 1, {31}});
    const auto exhaustive = grqft::check_control_inversion(z32);
    EXPECT_EQ(exhaustive.status, CheckStatus::Pass);
    EXPECT_NE(exhaustive.detail.find("all r, all entries"), std::string::npos);
    EXPECT_FALSE(exhaustive.seed.has_value());

    const GaloisRing gr864(RingSpec{2, 3, 2, {1, 1}});
    const auto commutation = grqft::check_control_inversion(gr864);
    EXPECT_EQ(commutation.status, CheckStatus::Pass);
    EXPECT_NE(commutation.detail.find("sampled r"), std::string::npos);
    EXPECT_TRUE(commutation.seed.has_value());

    const GaloisRing big(RingSpec{2, 8, 1, {255}});
    EXPECT_EQ(grqft::check_control_inversion(big).status, CheckStatus::Skipped);
}

TEST(ReductionChecks, ApplicabilityPerRing) {
    const auto z9 = grqft::check_reductions(GaloisRing(RingSpec{3, 2, 1, {1}}));
    ASSERT_EQ(z9.size(), 1u);
    EXPECT_EQ(z9[0].name, "reduction_base_ring");
    EXPECT_EQ(z9[0].status, CheckStatus::Pass);
    EXPECT_LT(z9[0].max_deviation, 1e-14);

    const auto f4 = grqft::check_reductions(GaloisRing(RingSpec{2, 1, 2, {1, 1}}));
    ASSERT_EQ(f4.size(), 1u);
    EXPECT_EQ(f4[0].name, "reduction_finite_field");
    EXPECT_EQ(f4[0].status, CheckStatus::Pass);

    const auto f2 = grqft::check_reductions(GaloisRing(RingSpec{2, 1, 1, {1}}));
    ASSERT_EQ(f2.size(), 2u);

    EXPECT_TRUE(grqft::check_reductions(gr416()).empty())
        << "no degenerate parameter, no reduction entries";
}

TEST(RunAll, DefaultSpecSetPasses) {
    const auto report = grqft::run_all(grqft::default_spec_set());
    EXPECT_TRUE(report.all_passed());
    EXPECT_FALSE(report.checks.empty());
    for (const auto& c : report.checks) {
        EXPECT_NE(c.status, CheckStatus::Fail) << c.name << " on " << grqft::ring_label(c.ring);
        EXPECT_GE(c.max_deviation, 0.0);
    }
    // Every core check appears for every ring of the set.
    for (const auto& spec : grqft::default_spec_set()) {
        for (const char* name :
             {"character_sum", "character_sum_class_zero", "character_sum_class_one",
              "character_sum_class_units", "character_sum_class_zero_divisors",
              "trace_kernel", "orthonormality", "unitarity", "factorization",
              "shift_diagonalization", "control_inversion"}) {
            EXPECT_NO_THROW(find_check(report.checks, name, spec)) << name;
        }
    }
    EXPECT_TRUE(std::is_sorted(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& a, const CheckResult& b) {
                                   return a.name < b.name;
                               }));
}

TEST(RunAll, EmptyListAndFailureIsolation) {
    EXPECT_TRUE(grqft::run_all({}).all_passed());
    EXPECT_TRUE(grqft::run_all({}).checks.empty());

    const std::vector<RingSpec> specs{RingSpec{2, 2, 2, {1, 1}}, RingSpec{2, 2, 2, {0, 0}},
                                      RingSpec{3, 2, 1, {1}}};
    const auto report = grqft::run_all(specs);
    EXPECT_FALSE(report.all_passed());
    const auto& failure = find_check(report.checks, "construction", specs[1]);
    EXPECT_EQ(failure.status, CheckStatus::Fail);
    EXPECT_NE(failure.detail.find("irreducible_mod_p"), std::string::npos);
    for (const auto& c : report.checks) {
        if (c.ring == specs[1]) continue;
        EXPECT_NE(c.status, CheckStatus::Fail) << c.name;
    }
}

TEST(RunAll, DeterministicModuloTiming) {
    const VerifyOptions opts;
    const auto a = grqft::run_all(grqft::default_spec_set(), opts);
    const auto b = grqft::run_all(grqft::default_spec_set(), opts);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        EXPECT_EQ(a.checks[i].name, b.checks[i].name);
        EXPECT_EQ(a.checks[i].ring, b.checks[i].ring);
        EXPECT_EQ(a.checks[i].status, b.checks[i].status);
        EXPECT_EQ(a.checks[i].max_deviation, b.checks[i].max_deviation);
        EXPECT_EQ(a.checks[i].seed, b.checks[i].seed);
        EXPECT_EQ(a.checks[i].detail, b.checks[i].detail);
    }
}
