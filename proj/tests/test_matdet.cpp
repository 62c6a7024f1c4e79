#include <doctest.h>

#include "tvat/genfun.hpp"
#include "tvat/matdet.hpp"

using namespace tvat;

namespace {
Mat<Int> imat(long n, std::initializer_list<long> vals) {
    Mat<Int> m(n);
    auto it = vals.begin();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = Int(*it++);
    return m;
}
}  // namespace

TEST_SUITE("matdet") {

TEST_CASE("small determinants by hand") {
    CHECK(det_bareiss(Mat<Int>(0)) == 1);
    CHECK(det_bareiss(imat(1, {7})) == 7);
    CHECK(det_bareiss(imat(2, {1, 1, 4, 8})) == 4);
    CHECK(det_bareiss(imat(3, {2, 0, 0, 0, 3, 0, 0, 0, 5})) == 30);
    CHECK(det_bareiss(imat(3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 0);
    CHECK(det_bareiss(imat(2, {0, 1, 1, 0})) == -1);  // pivoting keeps the sign
}

TEST_CASE("routes agree on random-ish integer matrices") {
    long seed = 37;
    for (int trial = 0; trial < 6; ++trial) {
        Mat<Int> m(4);
        Mat<Rat> q(4);
        Mat<Rat> l(4);
        for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 4; ++j) {
                seed = (seed * 1103515245 + 12345) % 2048;
                long v = seed - 1024;
                m.at(i, j) = Int(v);
                q.at(i, j) = Rat(v);
                l.at(i, j) = Rat(v);
            }
        Int b = det_bareiss(m);
        CHECK(Rat(b) == det_gauss(q));
        CHECK(Rat(b) == det_laplace(l));
    }
}

TEST_CASE("gauss handles field entries") {
    Mat<Rat> m(2);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(1, 0) = Rat(1, 5);
    m.at(1, 1) = Rat(1, 7);
    CHECK(det_gauss(m) == Rat(1, 14) - Rat(1, 15));
    Mat<QuadRat> s(2);
    s.at(0, 0) = QuadRat::sqrt2();
    s.at(0, 1) = QuadRat(1);
    s.at(1, 0) = QuadRat(1);
    s.at(1, 1) = QuadRat::sqrt2();
    CHECK(det_gauss(s) == QuadRat(1));
}

TEST_CASE("series truncation to a matrix") {
    auto p = BiSeries<Rat>::expand(g20v_fun(), 3, 3);
    auto m = truncate(p, 2);
    CHECK(m.size() == 2);
    CHECK(m.at(0, 0) == Rat(1));
    CHECK(m.at(1, 0) == Rat(4));
    CHECK(m.at(1, 1) == Rat(8));
    CHECK_THROWS_AS(truncate(p, 5), truncation_error);  // window too small, loud
}

TEST_CASE("unit lower triangular predicate") {
    auto l = truncate(BiSeries<Rat>::expand(fl_fun(), 4, 4), 5);
    CHECK(is_unit_lower_triangular(l));
    auto p = truncate(BiSeries<Rat>::expand(g20v_fun(), 4, 4), 5);
    CHECK(!is_unit_lower_triangular(p));
}

TEST_CASE("matrix product") {
    auto a = imat(2, {1, 2, 3, 4});
    auto b = imat(2, {0, 1, 1, 0});
    CHECK(mat_mul(a, b) == imat(2, {2, 1, 4, 3}));
}

TEST_CASE("polynomial last-column expansion vs interpolation") {
    // constant entries except the last column, the shape the formulas produce
    Mat<UniPoly<Rat>> m(3);
    long base[9] = {1, 0, 2, 3, 1, 1, 5, 2, 4};
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) m.at(i, j) = UniPoly<Rat>(Rat(base[3 * i + j]));
    for (long i = 0; i < 3; ++i)
        m.at(i, 2) = UniPoly<Rat>::from_coeffs({Rat(base[3 * i + 2]), Rat(i + 1)});
    auto a = det_poly_lastcol(m);
    auto b = det_poly_interp(m, 1);
    CHECK(a == b);
    CHECK(a.eval(Rat(0)) == det_gauss([&] {
        Mat<Rat> c(3);
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 3; ++j) c.at(i, j) = Rat(base[3 * i + j]);
        return c;
    }()));
    Mat<UniPoly<Rat>> bad(2);
    bad.at(0, 0) = UniPoly<Rat>::from_coeffs({Rat(0), Rat(1)});
    bad.at(0, 1) = UniPoly<Rat>(Rat(1));
    bad.at(1, 0) = UniPoly<Rat>(Rat(1));
    bad.at(1, 1) = UniPoly<Rat>(Rat(1));
    CHECK_THROWS_AS(det_poly_lastcol(bad), arithmetic_error);
}

TEST_CASE("bareiss leaves its input value intact by copy") {
    auto m = imat(2, {2, 1, 1, 2});
    Int d1 = det_bareiss(m);
    Int d2 = det_bareiss(m);
    CHECK(d1 == d2);
    CHECK(d1 == 3);
}

}  // TEST_SUITE
