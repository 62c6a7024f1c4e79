#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace tvat {

/// Arbitrary-precision integer. All partition-function values are exact Int.
using Int = mpz_class;

/// Complex doubles are used only for numeric weight checks, never for counting.
using C64 = std::complex<double>;

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Thrown on any coefficient access outside a truncation window. Out-of-window
/// coefficients are unknown, not zero; silent zeros would corrupt determinants.
struct truncation_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string int_to_decimal(const Int& x) { return x.get_str(10); }

inline Int int_from_decimal(const std::string& s) {
    if (s.empty()) throw parse_error("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw parse_error("sign without digits: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw parse_error("bad integer literal: " + s);
    return Int(s, 10);
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(m, k) for m >= 0; returns 0 when m < k.
inline Int binomial(unsigned long m, unsigned long k) {
    if (m < k) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), m, k);
    return r;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) { return int_pow(Int(2), e); }

/// q = a / b requiring exact divisibility.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw arithmetic_error("exact_div by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw arithmetic_error("exact_div: " + int_to_decimal(b) + " does not divide " +
                               int_to_decimal(a));
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Rational number, always canonical: gcd(num, den) = 1 and den > 0.
/// Backed by GMP's mpq layer; the wrapper enforces canonicalization on entry
/// and turns division by zero into an exception instead of a trap.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw arithmetic_error("Rat with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sgn() const { return ::sgn(v_); }

    /// Exact Int value; throws unless the denominator is 1.
    Int to_int() const {
        if (!is_integer())
            throw arithmetic_error("Rat " + to_decimal() + " is not an integer");
        return num();
    }
    double to_double() const { return v_.get_d(); }

    /// "p/q", or "p" when q = 1. Round-trips through from_decimal.
    std::string to_decimal() const {
        if (is_integer()) return v_.get_num().get_str(10);
        return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
    }
    static Rat from_decimal(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(int_from_decimal(s));
        return Rat(int_from_decimal(s.substr(0, slash)),
                   int_from_decimal(s.substr(slash + 1)));
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) throw arithmetic_error("Rat division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

private:
    explicit Rat(const mpq_class& v) : v_(v) {}
    mpq_class v_;
};

inline Rat rat_inverse(const Rat& x) {
    if (x.is_zero()) throw arithmetic_error("inverse of zero");
    return Rat(x.den(), x.num());
}

}  // namespace tvat
