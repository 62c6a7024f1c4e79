#include <doctest.h>

#include "tvat/numeric.hpp"
#include "tvat/quadrat.hpp"
#include "tvat/ring.hpp"

using namespace tvat;

TEST_SUITE("exactcore") {

TEST_CASE("integer decimal round trip") {
    Int big = int_pow(Int(10), 40) + Int(7);
    CHECK(int_from_decimal(int_to_decimal(big)) == big);
    CHECK(int_to_decimal(Int(-12)) == "-12");
    CHECK_THROWS_AS(int_from_decimal("12x"), parse_error);
    CHECK_THROWS_AS(int_from_decimal(""), parse_error);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 10) == 0);  // out of range means zero, not an error
    CHECK(binomial(0, 0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(int_pow(Int(-3), 3) == -27);
}

TEST_CASE("exact division is loud") {
    CHECK(exact_div(Int(84), Int(7)) == 12);
    CHECK_THROWS_AS(exact_div(Int(85), Int(7)), arithmetic_error);
    CHECK_THROWS_AS(exact_div(Int(1), Int(0)), arithmetic_error);
}

TEST_CASE("rationals normalize") {
    Rat r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.sgn() == -1);
    CHECK(!r.is_integer());
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
    CHECK(Rat(7, 1).is_integer());
    CHECK(Rat(7).to_int() == 7);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), arithmetic_error);
    CHECK_THROWS_AS(Rat(5, 3).to_int(), arithmetic_error);
}

TEST_CASE("rational decimal forms") {
    CHECK(Rat(-3, 7).to_decimal() == "-3/7");
    CHECK(Rat(4).to_decimal() == "4");
    CHECK(Rat::from_decimal("-3/7") == Rat(-3, 7));
    CHECK(Rat::from_decimal("11") == Rat(11));
    CHECK(rat_inverse(Rat(-3, 7)) == Rat(-7, 3));
    CHECK_THROWS_AS(rat_inverse(Rat(0)), arithmetic_error);
}

TEST_CASE("quadratic field arithmetic") {
    QuadRat s = QuadRat::sqrt2();
    CHECK(s * s == QuadRat(2));
    QuadRat x(Rat(1), Rat(1));  // 1 + sqrt 2
    CHECK(x.norm() == Rat(-1));
    CHECK(x * x.conj() == QuadRat(x.norm()));
    CHECK(quad_inverse(x) == QuadRat(Rat(-1), Rat(1)));
    CHECK(x * quad_inverse(x) == QuadRat(1));
    CHECK(x / x == QuadRat(1));
    CHECK_THROWS_AS(quad_inverse(QuadRat(0)), arithmetic_error);
    CHECK(!x.is_rational());
    CHECK((x - QuadRat(Rat(0), Rat(1))).is_rational());
}

TEST_CASE("powers of sqrt 2") {
    CHECK(sqrt2_power(0) == QuadRat(1));
    CHECK(sqrt2_power(4) == QuadRat(4));
    CHECK(sqrt2_power(3) == QuadRat(Rat(0), Rat(2)));
    CHECK(sqrt2_power(-2) == QuadRat(Rat(1, 2)));
    CHECK(sqrt2_power(-1) * sqrt2_power(1) == QuadRat(1));
    CHECK(sqrt2_power(5) * sqrt2_power(-5) == QuadRat(1));
}

TEST_CASE("ring helpers cover the three coefficient rings") {
    CHECK(ring_is_zero(Int(0)));
    CHECK(!ring_is_zero(Rat(1, 2)));
    CHECK(ring_exact_div(Int(12), Int(4)) == Int(3));
    CHECK(ring_exact_div(Rat(1, 2), Rat(3)) == Rat(1, 6));
    CHECK(ring_inverse(QuadRat::sqrt2()) * QuadRat::sqrt2() == QuadRat(1));
}

}  // TEST_SUITE
