#pragma once

#include "tvat/ring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tvat {

/// Dense univariate polynomial over a coefficient ring R (Int, Rat, QuadRat,
/// or a nested UniPoly). Always trimmed: no trailing zero coefficients, so the
/// zero polynomial has degree() == -1.
template <class R>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long v) { c_.push_back(R(v)); trim(); }
    UniPoly(const R& v) { c_.push_back(v); trim(); }

    static UniPoly monomial(const R& coef, std::size_t deg) {
        UniPoly p;
        p.c_.assign(deg + 1, R(0));
        p.c_[deg] = coef;
        p.trim();
        return p;
    }
    static UniPoly from_coeffs(std::vector<R> c) {
        UniPoly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
    const std::vector<R>& coeffs() const { return c_; }
    void set_coeff(std::size_t i, const R& v) {
        if (i >= c_.size()) c_.resize(i + 1, R(0));
        c_[i] = v;
        trim();
    }

    R eval(const R& x) const {
        R acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly operator-() const {
        UniPoly p = *this;
        for (auto& v : p.c_) v = -v;
        return p;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    UniPoly& operator*=(const UniPoly& o) {
        if (is_zero() || o.is_zero()) {
            c_.clear();
            return *this;
        }
        std::vector<R> r(c_.size() + o.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        c_ = std::move(r);
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(unsigned long e) const {
        UniPoly r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    /// Coefficient reversal within a window of formal degree d (x^d * p(1/x)).
    /// d must be >= degree(); reverse(reverse(p, d), d) == p.
    UniPoly reverse(std::size_t d) const {
        if (degree() > static_cast<long>(d))
            throw arithmetic_error("reverse window smaller than degree");
        std::vector<R> r(d + 1, R(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
        return from_coeffs(std::move(r));
    }

    bool is_palindromic(std::size_t d) const { return reverse(d) == *this; }

    /// Quotient of an exact division; throws arithmetic_error when the
    /// division leaves a remainder (or a coefficient quotient does not exist).
    UniPoly divide_exact(const UniPoly& d) const {
        if (d.is_zero()) throw arithmetic_error("poly division by zero");
        if (is_zero()) return UniPoly();
        if (degree() < d.degree())
            throw arithmetic_error("inexact poly division (degree)");
        std::vector<R> rem = c_;
        std::vector<R> q(degree() - d.degree() + 1, R(0));
        const R& lead = d.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            R qc = ring_exact_div(rem[k + d.c_.size() - 1], lead);
            q[k] = qc;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= qc * d.c_[j];
        }
        for (const auto& v : rem)
            if (!ring_is_zero(v)) throw arithmetic_error("inexact poly division");
        return from_coeffs(std::move(q));
    }

    std::string to_string(const std::string& var, std::string (*fmt)(const R&)) const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (ring_is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += fmt(c_[i]);
            if (i >= 1) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
bool ring_is_zero(const UniPoly<R>& p) {
    return p.is_zero();
}

template <class R>
UniPoly<R> ring_inverse(const UniPoly<R>& p) {
    if (p.degree() != 0)
        throw arithmetic_error("UniPoly inverse requires a unit (nonzero constant)");
    return UniPoly<R>(ring_inverse(p.coeff(0)));
}

template <class R>
UniPoly<R> ring_exact_div(const UniPoly<R>& a, const UniPoly<R>& b) {
    return a.divide_exact(b);
}

/// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
inline Int content(const UniPoly<Int>& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        Int r;
        mpz_gcd(r.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = r;
    }
    return g;
}

inline UniPoly<Rat> to_rat(const UniPoly<Int>& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return UniPoly<Rat>::from_coeffs(std::move(c));
}

/// Requires every coefficient to have denominator 1.
inline UniPoly<Int> to_int(const UniPoly<Rat>& p) {
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.to_int());
    return UniPoly<Int>::from_coeffs(std::move(c));
}

inline Rat eval_rat(const UniPoly<Int>& p, const Rat& x) { return to_rat(p).eval(x); }

}  // namespace tvat
