#include <doctest.h>

#include "tvat/biseries.hpp"
#include "tvat/genfun.hpp"

using namespace tvat;

namespace {
UniPoly<Rat> rp(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return UniPoly<Rat>::from_coeffs(std::move(v));
}
}  // namespace

TEST_SUITE("series") {

TEST_CASE("univariate expansion") {
    auto geo = USeries<Rat>::expand(rp({1}), rp({1, -1}), 8);
    for (long i = 0; i <= 8; ++i) CHECK(geo.coeff(i) == Rat(1));
    auto s = USeries<Rat>::expand(rp({1}), rp({1, -2}), 5);
    CHECK(s.coeff(5) == Rat(32));
    CHECK(s.coeff(-1) == Rat(0));
    CHECK_THROWS_AS(s.coeff(6), truncation_error);
    CHECK_THROWS_AS(USeries<Rat>::expand(rp({1}), rp({0, 1}), 3), arithmetic_error);
}

TEST_CASE("series product respects the shorter window") {
    auto a = USeries<Rat>::from_poly(rp({1, 1}), 6);
    auto b = USeries<Rat>::from_poly(rp({1, -1}), 4);
    auto p = a * b;
    CHECK(p.order() == 4);
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(1) == Rat(0));
    CHECK(p.coeff(2) == Rat(-1));
}

TEST_CASE("reciprocal") {
    auto a = USeries<Rat>::from_poly(rp({1, -1}), 7);
    auto inv = a.reciprocal();
    for (long i = 0; i <= 7; ++i) CHECK(inv.coeff(i) == Rat(1));
    auto prod = a * inv;
    CHECK(prod.coeff(0) == Rat(1));
    for (long i = 1; i <= 7; ++i) CHECK(prod.coeff(i) == Rat(0));
    CHECK_THROWS_AS(USeries<Rat>::from_poly(rp({0, 1}), 3).reciprocal(),
                    arithmetic_error);
}

TEST_CASE("square roots") {
    auto s = USeries<Rat>::from_poly(rp({1, 6, 1}), 5).sqrt();
    CHECK(s.coeff(0) == Rat(1));
    CHECK(s.coeff(1) == Rat(3));
    CHECK(s.coeff(2) == Rat(-4));
    auto sq = s * s;
    CHECK(sq.coeff(1) == Rat(6));
    CHECK(sq.coeff(4) == Rat(0));
    // a perfect square comes back exactly
    auto t = USeries<Rat>::from_poly(rp({1, 2, 1}), 6).sqrt();
    CHECK(t.coeff(1) == Rat(1));
    for (long i = 2; i <= 6; ++i) CHECK(t.coeff(i) == Rat(0));
    CHECK_THROWS_AS(USeries<Rat>::from_poly(rp({2, 1}), 3).sqrt(), arithmetic_error);
}

TEST_CASE("quadratic branch for the tiling kernel") {
    for (long g : {0L, 1L, 3L}) {
        auto ap = alpha_plus_series(Rat(g), 9);
        auto one_plus_u = USeries<Rat>::from_poly(rp({1, 1}), 9);
        auto gu = USeries<Rat>::from_poly(
            UniPoly<Rat>::monomial(Rat(g), 1), 9);
        auto rel = ap * ap - one_plus_u * ap - gu;
        for (long i = 0; i <= 9; ++i) CHECK(rel.coeff(i) == Rat(0));
    }
    // branch choice: alpha_+(0) = 1, not 0
    CHECK(alpha_plus_series(Rat(1), 4).coeff(0) == Rat(1));
}

TEST_CASE("bivariate expansion hits known corner values") {
    auto sg = BiSeries<Rat>::expand(sigma_fun(), 4, 4);
    CHECK(sg.coeff(0, 0) == Rat(1));
    CHECK(sg.coeff(1, 1) == Rat(3));  // central Delannoy
    CHECK(sg.coeff(2, 2) == Rat(13));
    auto p = BiSeries<Rat>::expand(g20v_fun(), 3, 3);
    CHECK(p.coeff(0, 0) == Rat(1));
    CHECK(p.coeff(1, 0) == Rat(4));
    CHECK(p.coeff(1, 1) == Rat(8));
    auto m = BiSeries<Rat>::expand(fdt_fun(), 3, 3);
    CHECK(m.coeff(0, 0) == Rat(1));
    CHECK(m.coeff(1, 1) == Rat(5));
    CHECK_THROWS_AS(m.coeff(4, 0), truncation_error);
    CHECK_THROWS_AS(m.coeff(0, 4), truncation_error);
    CHECK(m.coeff(-1, 2) == Rat(0));
}

TEST_CASE("kernel contraction against a delta factor") {
    RatFun2<Rat> delta;  // 1/(1-uv) has the identity grid
    delta.num.add_term(0, 0, Rat(1));
    delta.den.add_term(0, 0, Rat(1));
    delta.den.add_term(1, 1, Rat(-1));
    auto d = BiSeries<Rat>::expand(delta, 5, 5);
    for (long i = 0; i <= 5; ++i)
        for (long j = 0; j <= 5; ++j) CHECK(d.coeff(i, j) == Rat(i == j ? 1 : 0));
    auto sg = BiSeries<Rat>::expand(sigma_fun(), 5, 5);
    auto prod = convolve(d, sg);
    for (long i = 0; i <= 5; ++i)
        for (long j = 0; j <= 5; ++j) CHECK(prod.coeff(i, j) == sg.coeff(i, j));
}

TEST_CASE("substitution counts compositions") {
    // 1/(1-u) at u -> u + u^2 generates the Fibonacci numbers
    RatFun2<Rat> geo;
    geo.num.add_term(0, 0, Rat(1));
    geo.den.add_term(0, 0, Rat(1));
    geo.den.add_term(1, 0, Rat(-1));
    auto base = BiSeries<Rat>::expand(geo, 8, 0);
    auto sub = substitute_u(base, USeries<Rat>::from_poly(rp({0, 1, 1}), 8));
    long fib[9] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (long i = 0; i <= 8; ++i) CHECK(sub.coeff(i, 0) == Rat(fib[i]));
    CHECK_THROWS_AS(substitute_u(base, USeries<Rat>::from_poly(rp({1, 1}), 8)),
                    arithmetic_error);
    CHECK_THROWS_AS(substitute_u(base, USeries<Rat>::from_poly(rp({0, 1}), 9)),
                    truncation_error);
}

TEST_CASE("odd rows in v, halved") {
    auto d = BiSeries<Rat>::expand(
        [] {
            RatFun2<Rat> delta;
            delta.num.add_term(0, 0, Rat(1));
            delta.den.add_term(0, 0, Rat(1));
            delta.den.add_term(1, 1, Rat(-1));
            return delta;
        }(),
        7, 7);
    auto h = odd_v_half(d);
    CHECK(h.order_v() == 3);
    for (long i = 0; i <= 7; ++i)
        for (long j = 0; j <= 3; ++j)
            CHECK(h.coeff(i, j) == Rat(i == 2 * j + 1 ? 1 : 0));
    CHECK_THROWS_AS(odd_v_half(BiSeries<Rat>(3, 0)), truncation_error);
}

TEST_CASE("map between coefficient rings") {
    auto s = USeries<Rat>::expand(rp({1}), rp({1, -1, -1}), 6);
    auto t = map_series<QuadRat>(s, [](const Rat& c) { return QuadRat(c); });
    CHECK(t.coeff(6) == QuadRat(13));
}

}  // TEST_SUITE
