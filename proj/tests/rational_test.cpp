#include "luk/errors.hpp"
#include "luk/rational.hpp"

#include <gtest/gtest.h>

using namespace luk;

TEST(Rational, LowestTerms) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_EQ(parse_rational("0/5"), 0);
  for (const char* bad : {"", "1/0", "abc", "1/-2", "1.5", "--1", "1/"}) EXPECT_THROW(parse_rational(bad), Error) << bad;
}

TEST(Rational, Helpers) {
  EXPECT_EQ(pow2(-3), make_rational(1, 8));
  EXPECT_EQ(pow2(10), 1024);
  EXPECT_EQ(floor(make_rational(-3, 2)), -2);
  EXPECT_EQ(ceil(make_rational(-3, 2)), -1);
  EXPECT_EQ(abs(make_rational(-5, 3)), make_rational(5, 3));
  EXPECT_EQ(ceil_log2(Integer(1)), 0u);
  EXPECT_EQ(ceil_log2(Integer(2)), 1u);
  EXPECT_EQ(ceil_log2(Integer(3)), 2u);
  EXPECT_EQ(ceil_log2(Integer(1024)), 10u);
  EXPECT_EQ(ceil_log2(Integer(1025)), 11u);
}

TEST(Rational, SimplestIn) {
  EXPECT_EQ(simplest_in(Endpoint::open_at(make_rational(1, 3)), Endpoint::open_at(make_rational(1, 2))),
            make_rational(2, 5));
  EXPECT_EQ(simplest_in(Endpoint::closed(make_rational(1, 3)), Endpoint::closed(make_rational(1, 2))),
            make_rational(1, 2));
  EXPECT_EQ(simplest_in(Endpoint::closed(-1), Endpoint::closed(5)), 0);
  EXPECT_EQ(simplest_in(Endpoint::closed(make_rational(-7, 2)), Endpoint::closed(make_rational(-3, 2))), -2);
  EXPECT_EQ(simplest_in(Endpoint::unbounded(), Endpoint::closed(make_rational(-5, 2))), -3);
  EXPECT_EQ(simplest_in(Endpoint::open_at(3), Endpoint::unbounded()), 4);
  EXPECT_EQ(simplest_in(Endpoint::unbounded(), Endpoint::unbounded()), 0);
  EXPECT_EQ(simplest_in(Endpoint::open_at(0), Endpoint::open_at(1)), make_rational(1, 2));
}

TEST(Rational, Intervals) {
  EXPECT_TRUE(interval_empty(Endpoint::closed(1), Endpoint::open_at(1)));
  EXPECT_FALSE(interval_empty(Endpoint::closed(1), Endpoint::closed(1)));
  EXPECT_TRUE(interval_empty(Endpoint::closed(2), Endpoint::closed(1)));
  EXPECT_FALSE(interval_empty(Endpoint::unbounded(), Endpoint::open_at(-4)));
  EXPECT_TRUE(interval_contains(Endpoint::open_at(0), Endpoint::closed(1), 1));
  EXPECT_FALSE(interval_contains(Endpoint::open_at(0), Endpoint::closed(1), 0));
}
