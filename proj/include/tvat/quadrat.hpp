#pragma once

#include "tvat/numeric.hpp"

#include <cmath>

namespace tvat {

/// Element a + b*sqrt(2) of Q(sqrt2). Needed for the theta-determinant, whose
/// entries mix 2^{x/2} at integer x; the determinant itself lands back in Q.
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(long a) : a_(a) {}
    QuadRat(const Rat& a) : a_(a) {}
    QuadRat(const Rat& a, const Rat& b) : a_(a), b_(b) {}

    static QuadRat sqrt2() { return QuadRat(Rat(0), Rat(1)); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadRat conj() const { return QuadRat(a_, -b_); }
    /// Field norm a^2 - 2 b^2; zero iff the element is zero (sqrt2 irrational).
    Rat norm() const { return a_ * a_ - Rat(2) * b_ * b_; }

    QuadRat operator-() const { return QuadRat(-a_, -b_); }
    QuadRat& operator+=(const QuadRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadRat& operator-=(const QuadRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadRat& operator*=(const QuadRat& o) {
        Rat a = a_ * o.a_ + Rat(2) * b_ * o.b_;
        Rat b = a_ * o.b_ + b_ * o.a_;
        a_ = a;
        b_ = b;
        return *this;
    }
    QuadRat& operator/=(const QuadRat& o) { return *this *= quad_inverse(o); }

    friend QuadRat quad_inverse(const QuadRat& x) {
        if (x.is_zero()) throw arithmetic_error("QuadRat inverse of zero");
        Rat n = x.norm();
        return QuadRat(x.a_ / n, -x.b_ / n);
    }

    friend QuadRat operator+(QuadRat a, const QuadRat& b) { return a += b; }
    friend QuadRat operator-(QuadRat a, const QuadRat& b) { return a -= b; }
    friend QuadRat operator*(QuadRat a, const QuadRat& b) { return a *= b; }
    friend QuadRat operator/(QuadRat a, const QuadRat& b) { return a /= b; }
    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(2.0);
    }

    /// "a+b*sqrt2" (or "a-b*sqrt2"); plain "a" when rational.
    std::string to_string() const {
        if (b_.is_zero()) return a_.to_decimal();
        std::string s = a_.to_decimal();
        s += (b_.sgn() < 0) ? "-" : "+";
        Rat ab = (b_.sgn() < 0) ? -b_ : b_;
        return s + ab.to_decimal() + "*sqrt2";
    }

private:
    Rat a_, b_;
};

/// 2^{k/2} for any integer k (negative allowed).
inline QuadRat sqrt2_power(long k) {
    auto half = [](long m) {  // 2^m as a Rat, m possibly negative
        return m >= 0 ? Rat(pow2(static_cast<unsigned long>(m)))
                      : Rat(Int(1), pow2(static_cast<unsigned long>(-m)));
    };
    if (k % 2 == 0) return QuadRat(half(k / 2));
    return QuadRat(Rat(0), half((k - 1) / 2));  // k odd => k-1 even, division exact
}

}  // namespace tvat
