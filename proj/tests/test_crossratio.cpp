#include <gtest/gtest.h>

#include "cpq/crossratio.hpp"
#include "cpq/errors.hpp"

using namespace cpq;

TEST(CrossRatio, SuitePasses) {
    const Report r = check_cross_ratio_invariance(1);
    EXPECT_TRUE(r.all_passed()) << r.to_text();
}

TEST(CrossRatio, FullReplayRecordsStepsAndAssumptions) {
    const ReplayResult r = replay_cross_ratio(2, 3, CoactionKind::Full);
    ASSERT_EQ(r.steps.size(), 10u);
    for (std::size_t k = 0; k < r.steps.size(); ++k) EXPECT_EQ(r.steps[k].index, static_cast<int>(k) + 1);
    auto has = [&](const std::string& s) {
        for (const auto& a : r.assumptions)
            if (a == s) return true;
        return false;
    };
    EXPECT_TRUE(has("1 - tau(2)"));
    EXPECT_TRUE(has("tau(3)"));
    EXPECT_NE(to_text(r).find("CR' = U(1)^-1 CR U(1)"), std::string::npos);
}

TEST(CrossRatio, IdentityAndDiagonal) {
    EXPECT_NO_THROW(replay_cross_ratio(3, 2, CoactionKind::Identity));
    EXPECT_NO_THROW(replay_cross_ratio(2, 3, CoactionKind::Diagonal));
    EXPECT_NO_THROW(replay_cross_ratio(2, 2, CoactionKind::Full));
}

TEST(CrossRatio, WithoutUnimodularityStopsAtStepFour) {
    try {
        replay_cross_ratio(2, 3, CoactionKind::GLq2);
        FAIL() << "expected StepFailure";
    } catch (const StepFailure& e) {
        EXPECT_EQ(e.step, 4);
    }
}

TEST(CrossRatio, Preconditions) {
    EXPECT_THROW(replay_cross_ratio(1, 3, CoactionKind::Full), PreconditionViolated);
    EXPECT_THROW(replay_cross_ratio(2, 4, CoactionKind::Full), PreconditionViolated);
    EXPECT_THROW(check_cross_ratio_invariance(2), PreconditionViolated);
}
