#include <gtest/gtest.h>

#include <random>
#include <string>

#include "whrt/sequences.hpp"

using namespace whrt;

namespace {

DeadlineSequence seq(const char* bits) { return DeadlineSequence::parse(bits); }

// Independent string-based oracle for the any-order miss constraint.
bool naive_any_misses(const std::string& s, std::size_t bound, std::size_t window) {
    for (std::size_t i = 0; i + window <= s.size(); ++i) {
        std::size_t zeros = 0;
        for (std::size_t j = i; j < i + window; ++j) zeros += s[j] == '0';
        if (zeros > bound) return false;
    }
    return true;
}

std::string bits_of(std::uint32_t v, std::uint32_t len) {
    std::string s(len, '0');
    for (std::uint32_t j = 0; j < len; ++j) s[j] = ((v >> j) & 1) ? '1' : '0';
    return s;
}

}  // namespace

TEST(DeadlineSequence, ParseAndRender) {
    const auto s = seq("11011");
    EXPECT_EQ(s.size(), 5u);
    EXPECT_EQ(s.misses(), 1u);
    EXPECT_EQ(s.to_string(), "11011");
    EXPECT_THROW(DeadlineSequence::parse("10a1"), Error);
}

TEST(Satisfies, Examples) {
    EXPECT_TRUE(satisfies(seq("11011"), ConstraintKind::AnyMisses, 2, 5));
    EXPECT_FALSE(satisfies(seq("10010"), ConstraintKind::AnyMisses, 1, 3));
    EXPECT_TRUE(satisfies(seq("110110110"), ConstraintKind::RowMisses, 1, 3));
    EXPECT_FALSE(satisfies(seq("110010110"), ConstraintKind::RowMisses, 1, 3));
    EXPECT_TRUE(satisfies(seq("11111"), ConstraintKind::RowHits, 2, 3));
    EXPECT_FALSE(satisfies(seq("110110"), ConstraintKind::RowHits, 2, 3));
    EXPECT_FALSE(satisfies(seq("110101110"), ConstraintKind::RowHits, 2, 3));
    EXPECT_TRUE(satisfies(seq("110110110"), ConstraintKind::AnyHits, 2, 3));
}

TEST(Satisfies, Errors) {
    try {
        satisfies(seq("101"), ConstraintKind::AnyMisses, 1, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SequenceTooShort);
    }
    EXPECT_THROW(satisfies(seq("10101"), ConstraintKind::AnyMisses, 6, 5), Error);
}

TEST(Satisfies, SingleWindowCountsMisses) {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint32_t k = 1 + gen() % 16;
        const std::uint32_t a = gen() % (k + 1);
        const auto s = bits_of(gen(), k);
        const auto zeros = static_cast<std::uint32_t>(std::count(s.begin(), s.end(), '0'));
        EXPECT_EQ(satisfies(seq(s.c_str()), ConstraintKind::AnyMisses, a, k), zeros <= a) << s;
    }
}

TEST(Satisfies, HitAndMissFormsAreComplements) {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint32_t len = 1 + gen() % 24;
        const std::uint32_t k = 1 + gen() % len;
        const std::uint32_t a = gen() % (k + 1);
        const auto s = seq(bits_of(gen(), len).c_str());
        EXPECT_EQ(satisfies(s, ConstraintKind::AnyHits, k - a, k),
                  satisfies(s, ConstraintKind::AnyMisses, a, k));
        EXPECT_EQ(satisfies(s, ConstraintKind::AnyMisses, a, k),
                  naive_any_misses(s.to_string(), a, k));
    }
}

TEST(CriticalSequence, Examples) {
    EXPECT_EQ(critical_sequence({1, 2}).to_string(), "110");
    EXPECT_EQ(critical_sequence({4, 1}).to_string(), "10000");
    EXPECT_EQ(critical_sequence({1, 1}).to_string(), "10");
}

TEST(CriticalSequence, RepeatedPatternMeetsOriginalConstraint) {
    for (std::uint32_t k = 2; k <= 16; ++k) {
        for (std::uint32_t m = 1; m < k; ++m) {
            const WeaklyHardConstraint c(m, k);
            const auto pattern = critical_sequence(derive_wh(c)).to_string();
            for (std::size_t len = k; len <= 3 * k + pattern.size(); ++len) {
                std::string s;
                // Start at every phase of the cycle.
                for (std::size_t phase = 0; phase < pattern.size(); ++phase) {
                    s.clear();
                    for (std::size_t j = 0; j < len; ++j) s += pattern[(j + phase) % pattern.size()];
                    ASSERT_TRUE(satisfies(seq(s.c_str()), ConstraintKind::AnyMisses, m, k))
                        << m << "/" << k << " " << s;
                }
            }
        }
    }
}

TEST(TransformationCost, TableRows) {
    const auto r25 = transformation_cost(WeaklyHardConstraint(2, 5));
    EXPECT_EQ(r25.harder, 9u);
    EXPECT_EQ(r25.original, 16u);
    EXPECT_EQ(r25.decimal(), "0.5625");

    const auto r35 = transformation_cost(WeaklyHardConstraint(3, 5));
    EXPECT_EQ(r35.harder, 13u);
    EXPECT_EQ(r35.original, 26u);
    EXPECT_EQ(r35.decimal(), "0.5000");

    EXPECT_EQ(transformation_cost(WeaklyHardConstraint(8, 20)).decimal(), "0.01040");
    EXPECT_DOUBLE_EQ(transformation_cost(WeaklyHardConstraint(1, 5)).value(), 1.0);
}

TEST(TransformationCost, MatchesNaiveCountingAndStaysInUnitInterval) {
    for (std::uint32_t k = 2; k <= 10; ++k) {
        for (std::uint32_t m = 1; m < k; ++m) {
            const WeaklyHardConstraint c(m, k);
            const auto wh = derive_wh(c);
            std::uint64_t harder = 0;
            std::uint64_t original = 0;
            for (std::uint32_t v = 0; v < (1u << k); ++v) {
                const auto s = bits_of(v, k);
                harder += naive_any_misses(s, wh.w, wh.window());
                original += naive_any_misses(s, m, k);
            }
            const auto r = transformation_cost(c);
            EXPECT_EQ(r.harder, harder) << m << "/" << k;
            EXPECT_EQ(r.original, original) << m << "/" << k;
            EXPECT_GT(r.value(), 0.0);
            EXPECT_LE(r.value(), 1.0);
            if (wh.w == m && wh.window() == k) EXPECT_EQ(r.harder, r.original);
        }
    }
}

TEST(TransformationCost, WindowBound) {
    try {
        transformation_cost(WeaklyHardConstraint(3, 25));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WindowTooLarge);
    }
    EXPECT_THROW(hardness_bruteforce(WeaklyHardConstraint(3, 21)), Error);
}

TEST(HardnessBruteforce, Examples) {
    EXPECT_TRUE(hardness_bruteforce(WeaklyHardConstraint(2, 5)));
    EXPECT_TRUE(hardness_bruteforce(WeaklyHardConstraint(8, 10)));
    EXPECT_TRUE(hardness_bruteforce(WeaklyHardConstraint(1, 2)));
}

TEST(HardnessBruteforce, HoldsUpToTwenty) {
    for (std::uint32_t k = 2; k <= kMaxBruteForceWindow; ++k) {
        for (std::uint32_t m = 1; m < k; ++m) {
            ASSERT_TRUE(hardness_bruteforce(WeaklyHardConstraint(m, k))) << m << "/" << k;
        }
    }
}

TEST(FormatSignificant, RoundsHalfToEven) {
    EXPECT_EQ(format_significant(1, 1, 4), "1.000");
    EXPECT_EQ(format_significant(1, 2, 4), "0.5000");
    EXPECT_EQ(format_significant(1, 8, 4), "0.1250");
    EXPECT_EQ(format_significant(2745, 263950, 4), "0.01040");
    EXPECT_EQ(format_significant(12345, 10000000, 4), "0.001234");
    EXPECT_EQ(format_significant(12355, 10000000, 4), "0.001236");
    EXPECT_EQ(format_significant(99995, 100000, 4), "1.000");
    EXPECT_EQ(format_significant(123456, 1, 4), "123500");
    EXPECT_EQ(format_significant(2, 3, 2), "0.67");
}
