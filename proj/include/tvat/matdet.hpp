#pragma once

#include "tvat/biseries.hpp"
#include "tvat/quadrat.hpp"

#include <utility>
#include <vector>

namespace tvat {

template <class R>
class Mat {
public:
    Mat() : n_(0) {}
    explicit Mat(long n) : n_(n), a_(n * n, R(0)) {
        if (n < 0) throw arithmetic_error("matrix size must be >= 0");
    }

    long size() const { return n_; }
    R& at(long i, long j) { return a_[i * n_ + j]; }
    const R& at(long i, long j) const { return a_[i * n_ + j]; }

    void swap_rows(long i, long k) {
        for (long j = 0; j < n_; ++j) std::swap(at(i, j), at(k, j));
    }

    friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    long n_;
    std::vector<R> a_;
};

/// n x n matrix of the series coefficients (u-power = row, v-power = col).
template <class R>
Mat<R> truncate(const BiSeries<R>& s, long n) {
    Mat<R> m(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = s.coeff(i, j);
    return m;
}

template <class R>
Mat<R> mat_mul(const Mat<R>& a, const Mat<R>& b) {
    if (a.size() != b.size()) throw arithmetic_error("matrix size mismatch");
    Mat<R> r(a.size());
    for (long i = 0; i < a.size(); ++i)
        for (long t = 0; t < a.size(); ++t) {
            if (ring_is_zero(a.at(i, t))) continue;
            for (long j = 0; j < a.size(); ++j) r.at(i, j) += a.at(i, t) * b.at(t, j);
        }
    return r;
}

template <class R>
bool is_unit_lower_triangular(const Mat<R>& m) {
    for (long i = 0; i < m.size(); ++i) {
        if (!ring_is_zero(m.at(i, i) - R(1))) return false;
        for (long j = i + 1; j < m.size(); ++j)
            if (!ring_is_zero(m.at(i, j))) return false;
    }
    return true;
}

/// Fraction-free elimination; all integer divisions along the way are exact.
inline Int det_bareiss(Mat<Int> m) {
    long n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        long p = k;
        while (p < n && m.at(p, k) == 0) ++p;
        if (p == n) return Int(0);
        if (p != k) {
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    Int d = m.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

/// Plain elimination over a field (Rat, QuadRat).
template <class R>
R det_gauss(Mat<R> m) {
    long n = m.size();
    R det(1);
    for (long k = 0; k < n; ++k) {
        long p = k;
        while (p < n && ring_is_zero(m.at(p, k))) ++p;
        if (p == n) return R(0);
        if (p != k) {
            m.swap_rows(p, k);
            det = -det;
        }
        det = det * m.at(k, k);
        R inv = ring_inverse(m.at(k, k));
        for (long i = k + 1; i < n; ++i) {
            if (ring_is_zero(m.at(i, k))) continue;
            R f = m.at(i, k) * inv;
            for (long j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

/// Cofactor expansion along the first row; any commutative ring, tiny n only.
template <class R>
R det_laplace(const Mat<R>& m) {
    long n = m.size();
    if (n == 0) return R(1);
    if (n == 1) return m.at(0, 0);
    R acc(0);
    for (long j = 0; j < n; ++j) {
        if (ring_is_zero(m.at(0, j))) continue;
        Mat<R> sub(n - 1);
        for (long i = 1; i < n; ++i)
            for (long t = 0, c = 0; t < n; ++t)
                if (t != j) sub.at(i - 1, c++) = m.at(i, t);
        R term = m.at(0, j) * det_laplace(sub);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

/// Determinant of a matrix whose columns are all scalar except the last one.
/// Expands along that column so every minor stays over the base field.
template <class R>
UniPoly<R> det_poly_lastcol(const Mat<UniPoly<R>>& m) {
    long n = m.size();
    if (n == 0) return UniPoly<R>(1);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j + 1 < n; ++j)
            if (m.at(i, j).degree() > 0)
                throw arithmetic_error("det_poly_lastcol: non-constant entry outside last column");
    if (n == 1) return m.at(0, 0);
    UniPoly<R> acc;
    for (long i = 0; i < n; ++i) {
        if (m.at(i, n - 1).is_zero()) continue;
        Mat<R> minor(n - 1);
        for (long r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (long c = 0; c + 1 < n; ++c) minor.at(mr, c) = m.at(r, c).coeff(0);
            ++mr;
        }
        UniPoly<R> term = m.at(i, n - 1) * UniPoly<R>(det_gauss(minor));
        if ((i + n - 1) % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

/// Evaluation / interpolation determinant for polynomial matrices; slow and
/// only used to cross-check the structured routes. deg_bound must be >= the
/// true degree of the determinant.
inline UniPoly<Rat> det_poly_interp(const Mat<UniPoly<Rat>>& m, long deg_bound) {
    long npts = deg_bound + 1;
    std::vector<Rat> xs(npts), ys(npts);
    for (long t = 0; t < npts; ++t) {
        xs[t] = Rat(t);
        Mat<Rat> e(m.size());
        for (long i = 0; i < m.size(); ++i)
            for (long j = 0; j < m.size(); ++j) e.at(i, j) = m.at(i, j).eval(xs[t]);
        ys[t] = det_gauss(e);
    }
    UniPoly<Rat> acc;
    for (long t = 0; t < npts; ++t) {
        UniPoly<Rat> basis(Rat(1));
        Rat denom(1);
        for (long s = 0; s < npts; ++s) {
            if (s == t) continue;
            basis *= UniPoly<Rat>::from_coeffs({-xs[s], Rat(1)});
            denom = denom * (xs[t] - xs[s]);
        }
        UniPoly<Rat> scaled;
        Rat w = ys[t] * rat_inverse(denom);
        for (std::size_t d = 0; d < basis.coeffs().size(); ++d)
            scaled.set_coeff(d, basis.coeff(d) * w);
        acc += scaled;
    }
    return acc;
}

}  // namespace tvat
