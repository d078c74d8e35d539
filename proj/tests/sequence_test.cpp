#include "logconcave/sequence.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"

namespace {

using logconcave::Constant;
using logconcave::Explicit;
using logconcave::Geometric;
using logconcave::Integer;
using logconcave::Lucas;
using logconcave::PolyGeo;
using logconcave::RightPolicy;
using logconcave::SeqSource;
using logconcave::SeqWindow;

TEST(Sources, ConstructorsValidate) {
    EXPECT_THROW(Geometric(Integer(0), Integer(2)), std::domain_error);
    EXPECT_THROW(Geometric(Integer(2), Integer(0)), std::domain_error);
    EXPECT_NO_THROW(Geometric(Integer(-2), Integer(-3)));

    EXPECT_THROW(Lucas(Integer(1), Integer(1)), std::domain_error);  // D = -3
    EXPECT_THROW(Lucas(Integer(0), Integer(-1)), std::domain_error);
    EXPECT_THROW(Lucas(Integer(3), Integer(0)), std::domain_error);
    EXPECT_NO_THROW(Lucas(Integer(0), Integer(-1), /*extended=*/true));
    EXPECT_NO_THROW(Lucas(Integer(3), Integer(2)));
    EXPECT_NO_THROW(Lucas(Integer(2), Integer(1)));  // D = 0 is fine

    EXPECT_THROW(PolyGeo(Integer(0)), std::domain_error);
    EXPECT_NO_THROW(PolyGeo(Integer(0), /*extended=*/true));

    EXPECT_NO_THROW(Constant(Integer(0)));
}

TEST(Sources, DescribeNamesTheSource) {
    EXPECT_EQ(describe(SeqSource(Lucas(Integer(1), Integer(-1)))), "lucas(1,-1)");
    EXPECT_EQ(describe(SeqSource(Constant(Integer(3)))), "constant(3)");
    EXPECT_EQ(describe(SeqSource(Geometric(Integer(2), Integer(-5)))), "geometric(2,-5)");
    EXPECT_EQ(describe(SeqSource(PolyGeo(Integer(4)))), "polygeo(4)");
    EXPECT_EQ(describe(SeqSource(Explicit({Integer(1), Integer(2)}))), "explicit(n=2)");
}

TEST(ValueAt, NegativeIndicesAreZero) {
    const SeqSource sources[] = {
        SeqSource(Constant(Integer(7))),
        SeqSource(Geometric(Integer(2), Integer(3))),
        SeqSource(Lucas(Integer(1), Integer(-1))),
        SeqSource(PolyGeo(Integer(2))),
        SeqSource(Explicit({Integer(9)})),
    };
    for (const SeqSource& src : sources) {
        EXPECT_EQ(value_at(src, -1), 0) << describe(src);
        EXPECT_EQ(value_at(src, -100), 0) << describe(src);
    }
}

TEST(ValueAt, LucasMatchesBruteRecurrence) {
    const int params[][2] = {{1, -1}, {2, -1}, {1, -2}, {3, 2}, {-3, 2}, {5, 3}, {2, 1}};
    for (const auto& pq : params) {
        const SeqSource src{Lucas(Integer(pq[0]), Integer(pq[1]))};
        const auto expected = oracle::lucas_values(Integer(pq[0]), Integer(pq[1]), 31);
        for (long long n = 0; n <= 30; ++n) {
            EXPECT_EQ(value_at(src, n), expected[static_cast<std::size_t>(n)])
                << describe(src) << " at n=" << n;
        }
    }
}

TEST(ValueAt, GeometricAndConstantAndPolyGeo) {
    const SeqSource geo(Geometric(Integer(3), Integer(-2)));
    Integer power(1);
    for (long long n = 0; n <= 20; ++n) {
        EXPECT_EQ(value_at(geo, n), 3 * power);
        power *= -2;
    }

    const SeqSource c(Constant(Integer(-4)));
    for (long long n = 0; n <= 5; ++n) {
        EXPECT_EQ(value_at(c, n), -4);
    }

    // n * S^(n-1), accumulated without int_pow.
    const SeqSource pg(PolyGeo(Integer(-3)));
    EXPECT_EQ(value_at(pg, 0), 0);
    Integer s_power(1);  // S^(n-1) at n = 1
    for (long long n = 1; n <= 15; ++n) {
        EXPECT_EQ(value_at(pg, n), Integer(static_cast<long>(n)) * s_power) << "n=" << n;
        s_power *= -3;
    }
}

TEST(ValueAt, ExplicitZeroFillsBeyondEnd) {
    const SeqSource src(Explicit({Integer(5), Integer(-7), Integer(11)}));
    EXPECT_EQ(value_at(src, 0), 5);
    EXPECT_EQ(value_at(src, 1), -7);
    EXPECT_EQ(value_at(src, 2), 11);
    EXPECT_EQ(value_at(src, 3), 0);
    EXPECT_EQ(value_at(src, 1000), 0);
}

TEST(Window, GenerateMaterializesAndExtends) {
    const SeqSource src(Lucas(Integer(1), Integer(-1)));
    const SeqWindow w = generate(src, 10);
    EXPECT_EQ(w.size(), 11u);
    EXPECT_EQ(w.top_index(), 10);
    EXPECT_EQ(w.right_policy(), RightPolicy::Extendable);
    EXPECT_EQ(w.log_depth(), 0);
    EXPECT_EQ(w.provenance(), "lucas(1,-1)");
    EXPECT_EQ(w.at(-5), 0);
    EXPECT_EQ(w.at(10), 55);
    EXPECT_EQ(w.at(15), value_at(src, 15));  // extension past the stored top
}

TEST(Window, ExplicitGenerateTruncates) {
    const SeqSource src(Explicit({Integer(7), Integer(7), Integer(7), Integer(7)}));
    const SeqWindow w = generate(src, 3);
    EXPECT_EQ(w.right_policy(), RightPolicy::Truncate);
    EXPECT_EQ(w.at(3), 7);
    EXPECT_THROW(w.at(4), std::out_of_range);

    const SeqWindow z = generate_zero_fill(src, 3);
    EXPECT_EQ(z.right_policy(), RightPolicy::Extendable);
    EXPECT_EQ(z.at(4), 0);
    EXPECT_EQ(z.at(400), 0);
}

TEST(Window, GenerateChecksHorizon) {
    const SeqSource src(Constant(Integer(1)));
    EXPECT_THROW(generate(src, -1), std::invalid_argument);
    EXPECT_THROW(generate_zero_fill(src, -1), std::invalid_argument);
}

TEST(Window, ExtendableNeedsBackingGenerator) {
    EXPECT_THROW(SeqWindow({Integer(1)}, "bare", RightPolicy::Extendable),
                 std::invalid_argument);
    EXPECT_NO_THROW(SeqWindow({Integer(1)}, "bare", RightPolicy::Truncate));
}

TEST(Window, ValuesAccessorReturnsTheSlice) {
    std::mt19937 rng(20250814);
    std::uniform_int_distribution<int> value(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Integer> values;
        const int len = 1 + trial % 7;
        for (int i = 0; i < len; ++i) {
            values.push_back(Integer(value(rng)));
        }
        const SeqWindow w(values, "explicit", RightPolicy::Truncate);
        EXPECT_EQ(w.values(), values);
        for (long long n = 0; n < len; ++n) {
            EXPECT_EQ(w.at(n), values[static_cast<std::size_t>(n)]);
        }
    }
}

}  // namespace
