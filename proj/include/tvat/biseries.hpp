#pragma once

#include "tvat/unipoly.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace tvat {

/// Truncated power series in one variable: coefficients 0..ord are known
/// exactly, anything beyond is unknown and reading it throws. This keeps
/// truncation bugs loud instead of silently producing wrong constants.
template <class R>
class USeries {
public:
    USeries() : ord_(-1) {}
    explicit USeries(long ord) : ord_(ord), c_(ord + 1, R(0)) {
        if (ord < 0) throw arithmetic_error("series order must be >= 0");
    }

    static USeries from_poly(const UniPoly<R>& p, long ord) {
        USeries s(ord);
        for (long i = 0; i <= ord; ++i) s.c_[i] = p.coeff(i);
        return s;
    }

    /// Expansion of num/den with den(0) a unit, via the standard recurrence.
    static USeries expand(const UniPoly<R>& num, const UniPoly<R>& den, long ord) {
        USeries s(ord);
        R inv0 = ring_inverse(den.coeff(0));
        for (long k = 0; k <= ord; ++k) {
            R acc = num.coeff(k);
            for (long i = 1; i <= std::min<long>(k, den.degree()); ++i)
                acc -= den.coeff(i) * s.c_[k - i];
            s.c_[k] = inv0 * acc;
        }
        return s;
    }

    long order() const { return ord_; }
    R coeff(long i) const {
        if (i < 0) return R(0);
        if (i > ord_) throw truncation_error("series coefficient beyond truncation order");
        return c_[i];
    }
    void set_coeff(long i, const R& v) {
        if (i < 0 || i > ord_) throw truncation_error("series coefficient beyond truncation order");
        c_[i] = v;
    }

    USeries operator-() const {
        USeries s = *this;
        for (auto& v : s.c_) v = -v;
        return s;
    }
    friend USeries operator+(const USeries& a, const USeries& b) {
        USeries s(std::min(a.ord_, b.ord_));
        for (long i = 0; i <= s.ord_; ++i) s.c_[i] = a.c_[i] + b.c_[i];
        return s;
    }
    friend USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }
    friend USeries operator*(const USeries& a, const USeries& b) {
        USeries s(std::min(a.ord_, b.ord_));
        for (long i = 0; i <= s.ord_; ++i)
            for (long j = 0; i + j <= s.ord_; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
        return s;
    }
    USeries scaled(const R& v) const {
        USeries s = *this;
        for (auto& x : s.c_) x = x * v;
        return s;
    }

    USeries pow(unsigned long e) const {
        USeries r(ord_);
        r.c_[0] = R(1);
        USeries b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    /// Multiplicative inverse; requires coeff(0) to be a unit.
    USeries reciprocal() const {
        USeries s(ord_);
        R inv0 = ring_inverse(c_[0]);
        s.c_[0] = inv0;
        for (long k = 1; k <= ord_; ++k) {
            R acc(0);
            for (long i = 1; i <= k; ++i) acc += c_[i] * s.c_[k - i];
            s.c_[k] = -(inv0 * acc);
        }
        return s;
    }

    /// Square root with constant term 1; requires coeff(0) == 1.
    USeries sqrt() const {
        if (!ring_is_zero(c_[0] - R(1)))
            throw arithmetic_error("series sqrt requires constant term 1");
        USeries s(ord_);
        s.c_[0] = R(1);
        R half = ring_inverse(R(2));
        for (long k = 1; k <= ord_; ++k) {
            R acc = c_[k];
            for (long i = 1; i < k; ++i) acc -= s.c_[i] * s.c_[k - i];
            s.c_[k] = half * acc;
        }
        return s;
    }

private:
    long ord_;
    std::vector<R> c_;
};

template <class S, class R, class F>
USeries<S> map_series(const USeries<R>& a, F f) {
    USeries<S> s(a.order());
    for (long i = 0; i <= a.order(); ++i) s.set_coeff(i, f(a.coeff(i)));
    return s;
}

/// Sparse bivariate polynomial, used for numerators and denominators of the
/// rational generating functions.
template <class R>
class BiPoly {
public:
    BiPoly() = default;

    void add_term(int i, int j, const R& v) {
        if (ring_is_zero(v)) return;
        auto key = std::make_pair(i, j);
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, v);
        } else {
            it->second += v;
            if (ring_is_zero(it->second)) t_.erase(it);
        }
    }
    R coeff(int i, int j) const {
        auto it = t_.find(std::make_pair(i, j));
        return it == t_.end() ? R(0) : it->second;
    }
    const std::map<std::pair<int, int>, R>& terms() const { return t_; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.t_) r.add_term(k.first, k.second, v);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.t_) r.add_term(k.first, k.second, -v);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.t_)
            for (const auto& [kb, vb] : b.t_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }

private:
    std::map<std::pair<int, int>, R> t_;
};

template <class R>
struct RatFun2 {
    BiPoly<R> num, den;
};

/// Dense truncated bivariate series: rows index powers of u, columns powers
/// of v. Reading past either truncation order throws.
template <class R>
class BiSeries {
public:
    BiSeries() : ou_(-1), ov_(-1) {}
    BiSeries(long ou, long ov) : ou_(ou), ov_(ov), c_((ou + 1) * (ov + 1), R(0)) {
        if (ou < 0 || ov < 0) throw arithmetic_error("series orders must be >= 0");
    }

    long order_u() const { return ou_; }
    long order_v() const { return ov_; }

    R coeff(long i, long j) const {
        if (i < 0 || j < 0) return R(0);
        if (i > ou_ || j > ov_) throw truncation_error("series coefficient beyond truncation order");
        return c_[i * (ov_ + 1) + j];
    }
    void set_coeff(long i, long j, const R& v) {
        if (i < 0 || j < 0 || i > ou_ || j > ov_)
            throw truncation_error("series coefficient beyond truncation order");
        c_[i * (ov_ + 1) + j] = v;
    }

    /// Expand num/den to the requested orders; den(0,0) must be a unit.
    static BiSeries expand(const RatFun2<R>& f, long ou, long ov) {
        BiSeries s(ou, ov);
        R inv0 = ring_inverse(f.den.coeff(0, 0));
        for (long i = 0; i <= ou; ++i)
            for (long j = 0; j <= ov; ++j) {
                R acc = f.num.coeff(static_cast<int>(i), static_cast<int>(j));
                for (const auto& [k, v] : f.den.terms()) {
                    if (k.first == 0 && k.second == 0) continue;
                    if (k.first <= i && k.second <= j)
                        acc -= v * s.c_[(i - k.first) * (ov + 1) + (j - k.second)];
                }
                s.c_[i * (ov + 1) + j] = inv0 * acc;
            }
        return s;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries s(std::min(a.ou_, b.ou_), std::min(a.ov_, b.ov_));
        for (long i = 0; i <= s.ou_; ++i)
            for (long j = 0; j <= s.ov_; ++j) s.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
        return s;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        BiSeries s(std::min(a.ou_, b.ou_), std::min(a.ov_, b.ov_));
        for (long i = 0; i <= s.ou_; ++i)
            for (long j = 0; j <= s.ov_; ++j) s.set_coeff(i, j, a.coeff(i, j) - b.coeff(i, j));
        return s;
    }
    BiSeries scaled(const R& v) const {
        BiSeries s = *this;
        for (auto& x : s.c_) x = x * v;
        return s;
    }

private:
    long ou_, ov_;
    std::vector<R> c_;
};

/// Kernel contraction C(i,j) = sum_t A(i,t) B(t,j), t up to the shared
/// truncation. The sum is only complete when one factor is supported on
/// t <= min(order_v(A), order_u(B)); callers pick orders accordingly.
template <class R>
BiSeries<R> convolve(const BiSeries<R>& a, const BiSeries<R>& b) {
    long tmax = std::min(a.order_v(), b.order_u());
    BiSeries<R> s(a.order_u(), b.order_v());
    for (long i = 0; i <= s.order_u(); ++i)
        for (long j = 0; j <= s.order_v(); ++j) {
            R acc(0);
            for (long t = 0; t <= tmax; ++t) acc += a.coeff(i, t) * b.coeff(t, j);
            s.set_coeff(i, j, acc);
        }
    return s;
}

/// f(r(u), v) for a substitution series r with r(0) = 0.
template <class R>
BiSeries<R> substitute_u(const BiSeries<R>& f, const USeries<R>& r) {
    if (!ring_is_zero(r.coeff(0)))
        throw arithmetic_error("substitute_u needs a substitution with zero constant term");
    long n = r.order();
    if (f.order_u() < n) throw truncation_error("substitute_u: base series too short in u");
    std::vector<USeries<R>> pw;
    pw.reserve(n + 1);
    USeries<R> one(n);
    one.set_coeff(0, R(1));
    pw.push_back(one);
    for (long i = 1; i <= n; ++i) pw.push_back(pw.back() * r);
    BiSeries<R> s(n, f.order_v());
    for (long j = 0; j <= f.order_v(); ++j)
        for (long i = 0; i <= n; ++i) {
            R fc = f.coeff(i, j);
            if (ring_is_zero(fc)) continue;
            for (long t = i; t <= n; ++t) s.set_coeff(t, j, s.coeff(t, j) + fc * pw[i].coeff(t));
        }
    return s;
}

/// Keep only odd powers of v and halve the exponent: g(i,j) = f(i, 2j+1).
template <class R>
BiSeries<R> odd_v_half(const BiSeries<R>& f) {
    if (f.order_v() < 1) throw truncation_error("odd_v_half needs order_v >= 1");
    BiSeries<R> s(f.order_u(), (f.order_v() - 1) / 2);
    for (long i = 0; i <= s.order_u(); ++i)
        for (long j = 0; j <= s.order_v(); ++j) s.set_coeff(i, j, f.coeff(i, 2 * j + 1));
    return s;
}

}  // namespace tvat
