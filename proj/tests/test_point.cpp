#include <gtest/gtest.h>

#include <cmath>

#include "heis/point.hpp"
#include "heis/rng.hpp"

using namespace heis;

namespace {

HPoint random_point(Rng& rng, double box = 4.0) {
    return {rng.uniform(-box, box), rng.uniform(-box, box), rng.uniform(-box, box)};
}

double rel_err(const HPoint& a, const HPoint& b) {
    double scale = 1.0;
    for (double v : {a.x, a.y, a.z, b.x, b.y, b.z})
        scale = std::max(scale, std::fabs(v));
    return std::max({std::fabs(a.x - b.x), std::fabs(a.y - b.y),
                     std::fabs(a.z - b.z)}) /
           scale;
}

}  // namespace

TEST(Mul, DirectEvaluation) {
    HPoint r = mul({1, 0, 0}, {0, 1, 0});
    EXPECT_EQ(r.x, 1.0);
    EXPECT_EQ(r.y, 1.0);
    EXPECT_EQ(r.z, 1.0);
}

TEST(Mul, IdentityActsTrivially) {
    HPoint r = mul({0, 0, 0}, {2.5, -1.0, 3.0});
    EXPECT_EQ(r.x, 2.5);
    EXPECT_EQ(r.y, -1.0);
    EXPECT_EQ(r.z, 3.0);
}

TEST(Mul, NonCommutative) {
    HPoint r = mul({0, 1, 0}, {1, 0, 0});
    EXPECT_EQ(r.x, 1.0);
    EXPECT_EQ(r.y, 1.0);
    EXPECT_EQ(r.z, 0.0);  // differs from (1,0,0)*(0,1,0) = (1,1,1)
}

TEST(Mul, AssociativityExactOnIntegers) {
    HPoint p{1, 2, 3}, q{-2, 5, 1}, w{4, -3, -7};
    HPoint a = mul(mul(p, q), w);
    HPoint b = mul(p, mul(q, w));
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.y, b.y);
    EXPECT_EQ(a.z, b.z);
}

TEST(Mul, AssociativityRandom) {
    for (std::size_t i = 0; i < 10000; ++i) {
        Rng rng = Rng::stream(7, i);
        HPoint p = random_point(rng), q = random_point(rng), w = random_point(rng);
        EXPECT_LT(rel_err(mul(mul(p, q), w), mul(p, mul(q, w))), 1e-12);
    }
}

TEST(Inv, Examples) {
    HPoint a = inv({0, 0, 0});
    EXPECT_EQ(a.x, 0.0);
    EXPECT_EQ(a.z, 0.0);
    HPoint b = inv({1, 1, 1});
    EXPECT_EQ(b.x, -1.0);
    EXPECT_EQ(b.y, -1.0);
    EXPECT_EQ(b.z, 0.0);
    HPoint c = inv({1, 0, 0});
    EXPECT_EQ(c.x, -1.0);
    EXPECT_EQ(c.y, 0.0);
    EXPECT_EQ(c.z, 0.0);
}

TEST(Inv, RoundTripRandom) {
    for (std::size_t i = 0; i < 10000; ++i) {
        Rng rng = Rng::stream(11, i);
        HPoint p = random_point(rng);
        HPoint e = mul(p, inv(p));
        EXPECT_LT(std::fabs(e.x), 1e-12);
        EXPECT_LT(std::fabs(e.y), 1e-12);
        EXPECT_LT(std::fabs(e.z), 1e-12);
    }
}

TEST(Dilate, Examples) {
    HPoint a = dilate(2.0, {1, 1, 1});
    EXPECT_EQ(a.x, 2.0);
    EXPECT_EQ(a.y, 2.0);
    EXPECT_EQ(a.z, 4.0);
    HPoint p{0.3, -0.7, 1.9};
    HPoint b = dilate(1.0, p);
    EXPECT_EQ(b.x, p.x);
    EXPECT_EQ(b.y, p.y);
    EXPECT_EQ(b.z, p.z);
    HPoint c = dilate(0.0, p);
    EXPECT_EQ(c.x, 0.0);
    EXPECT_EQ(c.y, 0.0);
    EXPECT_EQ(c.z, 0.0);
}

TEST(Dilate, RejectsNegative) {
    EXPECT_THROW(dilate(-0.5, {1, 0, 0}), std::invalid_argument);
}

TEST(Dilate, GroupHomomorphism) {
    for (std::size_t i = 0; i < 10000; ++i) {
        Rng rng = Rng::stream(13, i);
        double r = rng.uniform(0.0, 4.0);
        HPoint p = random_point(rng), q = random_point(rng);
        EXPECT_LT(rel_err(dilate(r, mul(p, q)), mul(dilate(r, p), dilate(r, q))),
                  1e-12);
    }
}

TEST(HPoint, RejectsNonFinite) {
    EXPECT_THROW(HPoint(std::nan(""), 0, 0), std::invalid_argument);
    EXPECT_THROW(HPoint(0, INFINITY, 0), std::invalid_argument);
}

TEST(LieExpLog, RoundTrip) {
    for (std::size_t i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(17, i);
        double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), w = rng.uniform(-2, 2);
        HPoint p = lie_exp(a, b, w);
        double a2, b2, w2;
        lie_log(p, a2, b2, w2);
        EXPECT_NEAR(a, a2, 1e-15);
        EXPECT_NEAR(b, b2, 1e-15);
        EXPECT_NEAR(w, w2, 1e-15);
    }
}
