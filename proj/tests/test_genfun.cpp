#include <doctest.h>

#include "tvat/genfun.hpp"

#include <cmath>

using namespace tvat;

namespace {
UniPoly<Int> ip(std::initializer_list<long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return UniPoly<Int>::from_coeffs(std::move(v));
}
}  // namespace

TEST_SUITE("genfun") {

TEST_CASE("determinant sequence") {
    long ref[5] = {1, 4, 60, 3328, 678912};
    for (long n = 1; n <= 5; ++n) {
        CHECK(z20v_det(n) == ref[n - 1]);
        CHECK(zdt_det(n) == ref[n - 1]);
    }
}

TEST_CASE("integer truncation is checked") {
    auto m = matrix_int(g20v_fun(), 3);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 0) == 4);
    CHECK(m.at(1, 1) == 8);
    CHECK(m.at(2, 0) == 7);
    CHECK(m.at(2, 2) == 72);
}

TEST_CASE("refined ice polynomial") {
    CHECK(z20v_poly(1) == ip({1}));
    CHECK(z20v_poly(3) == ip({4, 15, 22, 15, 4}));
    CHECK(z20v_poly(5) ==
          ip({3328, 23868, 76856, 145860, 179088, 145860, 76856, 23868, 3328}));
    CHECK(z20v_poly(6).eval(Int(1)) == z20v_det(6));
    CHECK(z20v_poly(6).is_palindromic(10));
}

TEST_CASE("refined tiling polynomial") {
    CHECK(zdt_poly(2) == ip({3, 1}));
    CHECK(zdt_poly(4) == ip({1780, 1100, 388, 60}));
    CHECK(zdt_poly(5) == ip({324948, 222716, 100724, 27196, 3328}));
    CHECK(zdt_poly(6).eval(Int(1)) == zdt_det(6));
}

TEST_CASE("six-vertex ratio") {
    CHECK(h6v_unnormalized_det(4) == h6v_unnormalized_rel(4));
    H6v h2 = h6v_value(2);
    CHECK(h2.num == ip({1, 1}));
    CHECK(h2.den == 2);
    H6v h5 = h6v_value(5);
    CHECK(h5.num == ip({64, 203, 282, 203, 64}));
    CHECK(h5.den == 816);
    CHECK(h5.num.eval(Int(1)) == h5.den);
}

TEST_CASE("binomial entries and determinant") {
    CHECK(entry_binom(0, 0) == 1);
    CHECK(entry_binom(0, 3) == 1);
    CHECK(entry_binom(1, 0) == 4);
    CHECK(entry_binom(1, 1) == 8);
    CHECK(entry_binom(2, 0) == 11);
    for (long n = 1; n <= 6; ++n) CHECK(binom_det(n) == z20v_det(n));
}

TEST_CASE("correlation-normalized theta determinant") {
    CHECK(theta_entry(0, 0) == QuadRat(2));
    CHECK(theta_entry(0, 1) == QuadRat(2));
    CHECK(theta_entry(1, 0) == QuadRat(Rat(0), Rat(2)));
    CHECK(theta_entry(1, 1) == QuadRat(Rat(0), Rat(4)));
    CHECK(symcor_value(2) == 4);
    CHECK(symcor_value(4) == 3328);
    CHECK(symcor_value(6) == 508035072);
}

TEST_CASE("constant term readout") {
    CHECK(ct_value(1) == Rat(1));
    CHECK(ct_value(2) == Rat(4));
    CHECK(ct_value(4) == Rat(3328));
}

TEST_CASE("product formula matches determinants") {
    CHECK(conjecture_product(1) == 1);
    CHECK(conjecture_product(5) == 678912);
    CHECK(conjecture_product(6) == 508035072);
    CHECK(conjecture_product(6) == z20v_det(6));
}

TEST_CASE("gamma kernel degenerates to the plain one") {
    auto a = grid(fdt_gamma_fun(Rat(1)), 4, 4);
    auto b = grid(fdt_fun(), 4, 4);
    for (long i = 0; i <= 4; ++i)
        for (long j = 0; j <= 4; ++j) CHECK(a.coeff(i, j) == b.coeff(i, j));
    auto c = grid(barf_main_fun(Rat(1)), 4, 4);
    auto d = grid(g20v_fun(), 4, 4);
    for (long i = 0; i <= 4; ++i)
        for (long j = 0; j <= 4; ++j) CHECK(c.coeff(i, j) == d.coeff(i, j));
}

TEST_CASE("gamma refined routes agree at a sample") {
    auto a = det_poly_lastcol(refined_dt_matrix(3, Rat(2)));
    auto b = det_poly_lastcol(barf_matrix(3, Rat(2)));
    CHECK(a == b);
    CHECK(zdt_gamma_poly(3, Rat(1)) == to_rat(zdt_poly(3)));
}

TEST_CASE("formal gamma grid expands to polynomial entries") {
    auto f = BiSeries<UniPoly<Rat>>::expand(fdt_gamma_formal_fun(), 2, 2);
    // entry (1,1) of the path matrix: 5 paths, two of which use a long step
    CHECK(f.coeff(1, 1) == UniPoly<Rat>::from_coeffs({Rat(3), Rat(2)}));
    CHECK(f.coeff(0, 0) == UniPoly<Rat>(Rat(1)));
}

TEST_CASE("numeric weights at the combinatorial point") {
    auto wt = weights_20v(combinatorial_point());
    for (const auto& w : wt) CHECK(std::abs(w - C64(1.0)) < 1e-9);
}

TEST_CASE("last-column weights") {
    auto base = weights_lastcol(C64(-1.0), C64(1.0));
    for (const auto& w : base.wbar) CHECK(std::abs(w - C64(1.0)) < 1e-12);
    CHECK(std::abs(base.tau - C64(1.0)) < 1e-12);
    CHECK(tau_at_minus_one() == QuadRat(1));
    CHECK(lastcol_ratio_err(C64(0.3, 0.4)) < 1e-10);
    CHECK(lastcol_ratio_err(C64(-0.7, 0.2)) < 1e-10);
    auto some = weights_lastcol(C64(0.3, 0.4), std::sqrt(C64(-0.3, -0.4)));
    CHECK(some.wbar[2] == some.wbar[4]);
    CHECK(some.wbar[3] == some.wbar[5]);
    CHECK(some.wbar[3] == some.wbar[6]);
}

TEST_CASE("alpha series respects its quadratic equation") {
    auto d = disc_sqrt_series(Rat(1), 6);
    auto sq = d * d;
    CHECK(sq.coeff(0) == Rat(1));
    CHECK(sq.coeff(1) == Rat(6));
    CHECK(sq.coeff(2) == Rat(1));
    CHECK(sq.coeff(3) == Rat(0));
}

}  // TEST_SUITE
