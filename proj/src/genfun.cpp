#include "tvat/genfun.hpp"

#include "tvat/laurent.hpp"
#include "tvat/quadrat.hpp"

#include <cmath>

namespace tvat {

namespace {

UniPoly<Rat> upoly(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return UniPoly<Rat>::from_coeffs(std::move(v));
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

RatFun2<Rat> g20v_fun() {
    // (1+u^2)(1+2u-u^2) / ((1-u^2 v)((1-u)^2 - v(1+u)^2))
    BiPoly<Rat> a, b, c, d;
    a.add_term(0, 0, Rat(1));
    a.add_term(2, 0, Rat(1));
    b.add_term(0, 0, Rat(1));
    b.add_term(1, 0, Rat(2));
    b.add_term(2, 0, Rat(-1));
    c.add_term(0, 0, Rat(1));
    c.add_term(2, 1, Rat(-1));
    d.add_term(0, 0, Rat(1));
    d.add_term(1, 0, Rat(-2));
    d.add_term(2, 0, Rat(1));
    d.add_term(0, 1, Rat(-1));
    d.add_term(1, 1, Rat(-2));
    d.add_term(2, 1, Rat(-1));
    return {a * b, c * d};
}

RatFun2<Rat> fdt_fun() {
    BiPoly<Rat> n, d;
    n.add_term(0, 0, Rat(1));
    n.add_term(1, 0, Rat(1));
    d.add_term(0, 0, Rat(1));
    d.add_term(0, 1, Rat(-1));
    d.add_term(1, 1, Rat(-4));
    d.add_term(2, 1, Rat(-1));
    d.add_term(2, 2, Rat(1));
    return {n, d};
}

RatFun2<Rat> fl_fun() {
    BiPoly<Rat> n, d;
    n.add_term(0, 0, Rat(1));
    n.add_term(1, 0, Rat(2));
    n.add_term(2, 0, Rat(-1));
    d.add_term(0, 0, Rat(1));
    d.add_term(1, 0, Rat(-1));
    d.add_term(1, 1, Rat(-1));
    d.add_term(2, 1, Rat(-1));
    return {n, d};
}

RatFun2<Rat> flambda_fun() {
    BiPoly<Rat> n, d;
    n.add_term(0, 0, Rat(1));
    n.add_term(1, 0, Rat(-1));
    d.add_term(0, 0, Rat(1));
    d.add_term(1, 0, Rat(-1));
    d.add_term(1, 1, Rat(-1));
    return {n, d};
}

RatFun2<Rat> sigma_fun() {
    BiPoly<Rat> n, d;
    n.add_term(0, 0, Rat(1));
    d.add_term(0, 0, Rat(1));
    d.add_term(1, 0, Rat(-1));
    d.add_term(0, 1, Rat(-1));
    d.add_term(1, 1, Rat(-1));
    return {n, d};
}

RatFun2<Rat> fdt_gamma_fun(const Rat& g) {
    BiPoly<Rat> n, d;
    n.add_term(0, 0, Rat(1));
    n.add_term(1, 0, Rat(1));
    d.add_term(0, 0, Rat(1));
    d.add_term(0, 1, Rat(-1));
    d.add_term(1, 1, Rat(-2) - Rat(2) * g);
    d.add_term(2, 1, Rat(-1));
    d.add_term(2, 2, g * g);
    return {n, d};
}

RatFun2<Rat> barf_main_fun(const Rat& g) {
    // (1+g u^2)(1+2g u-g u^2) / ((1-g^2 u^2 v)((1-u)^2 - v(1+g u)^2))
    BiPoly<Rat> a, b, c, d;
    a.add_term(0, 0, Rat(1));
    a.add_term(2, 0, g);
    b.add_term(0, 0, Rat(1));
    b.add_term(1, 0, Rat(2) * g);
    b.add_term(2, 0, -g);
    c.add_term(0, 0, Rat(1));
    c.add_term(2, 1, -(g * g));
    d.add_term(0, 0, Rat(1));
    d.add_term(1, 0, Rat(-2));
    d.add_term(2, 0, Rat(1));
    d.add_term(0, 1, Rat(-1));
    d.add_term(1, 1, Rat(-2) * g);
    d.add_term(2, 1, -(g * g));
    return {a * b, c * d};
}

RatFun2<UniPoly<Rat>> fdt_gamma_formal_fun() {
    using P = UniPoly<Rat>;
    P one(1), gm = P::monomial(Rat(1), 1);
    BiPoly<P> n, d;
    n.add_term(0, 0, one);
    n.add_term(1, 0, one);
    d.add_term(0, 0, one);
    d.add_term(0, 1, -one);
    d.add_term(1, 1, P(-2) - gm * P(2));
    d.add_term(2, 1, -one);
    d.add_term(2, 2, gm * gm);
    return {n, d};
}

BiSeries<Rat> grid(const RatFun2<Rat>& f, long ou, long ov) {
    return BiSeries<Rat>::expand(f, ou, ov);
}

Mat<Int> matrix_int(const RatFun2<Rat>& f, long n) {
    BiSeries<Rat> s = grid(f, n - 1, n - 1);
    Mat<Int> m(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = s.coeff(i, j).to_int();
    return m;
}

Int z20v_det(long n) { return det_bareiss(matrix_int(g20v_fun(), n)); }
Int zdt_det(long n) { return det_bareiss(matrix_int(fdt_fun(), n)); }

namespace {

/// Shared pieces of the refined 20V column: the expansions of
/// (1+u)^{2n}/(1-u)^{2n-2} (A), (1+u)^{2n}/(1-u)^{2n} (psi), and the
/// tau-polynomials T_d = sum_{a=0}^{d} tau^{n-1+d-2a}, so that the extra
/// column term is phi_i = sum_{d<=i} A_{i-d} T_d.
struct Refined20Parts {
    USeries<Rat> A, psi;
    std::vector<UniPoly<Rat>> T;
};

Refined20Parts refined20_parts(long n) {
    long ord = n - 1;
    UniPoly<Rat> onepu = upoly({1, 1}), onemu = upoly({1, -1});
    Refined20Parts p;
    p.A = USeries<Rat>::expand(onepu.pow(2 * n), onemu.pow(2 * n - 2), ord);
    p.psi = USeries<Rat>::expand(onepu.pow(2 * n), onemu.pow(2 * n), ord);
    p.T.resize(n);
    for (long d = 0; d < n; ++d) {
        UniPoly<Rat> t;
        for (long a = 0; a <= d; ++a)
            t += UniPoly<Rat>::monomial(Rat(1), n - 1 + d - 2 * a);
        p.T[d] = t;
    }
    return p;
}

UniPoly<Rat> phi(const Refined20Parts& p, long i) {
    UniPoly<Rat> s;
    for (long d = 0; d <= i; ++d)
        s += p.T[d] * UniPoly<Rat>(p.A.coeff(i - d));
    return s;
}

Mat<UniPoly<Rat>> with_last_col(const BiSeries<Rat>& g, long n,
                                const std::vector<UniPoly<Rat>>& col) {
    Mat<UniPoly<Rat>> m(n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j + 1 < n; ++j) m.at(i, j) = UniPoly<Rat>(g.coeff(i, j));
        m.at(i, n - 1) = col[i];
    }
    return m;
}

}  // namespace

Mat<UniPoly<Rat>> refined20v_matrix(long n) {
    BiSeries<Rat> g = grid(g20v_fun(), n - 1, n - 1);
    Refined20Parts p = refined20_parts(n);
    std::vector<UniPoly<Rat>> col(n);
    for (long i = 0; i < n; ++i)
        col[i] = UniPoly<Rat>(g.coeff(i, n - 1) - p.psi.coeff(i)) + phi(p, i);
    return with_last_col(g, n, col);
}

Mat<UniPoly<Rat>> refined6v_cleared_matrix(long n) {
    BiSeries<Rat> g = grid(g20v_fun(), n - 1, n - 1);
    Refined20Parts p = refined20_parts(n);
    UniPoly<Rat> onept = upoly({1, 1}).pow(n - 1);
    Rat two_pow = Rat(pow2(n - 1));
    std::vector<UniPoly<Rat>> col(n);
    for (long i = 0; i < n; ++i)
        col[i] = onept * UniPoly<Rat>(g.coeff(i, n - 1) - p.psi.coeff(i)) +
                 phi(p, i) * UniPoly<Rat>(two_pow);
    return with_last_col(g, n, col);
}

USeries<Rat> disc_sqrt_series(const Rat& g, long ord) {
    UniPoly<Rat> disc =
        UniPoly<Rat>::from_coeffs({Rat(1), Rat(2) + Rat(4) * g, Rat(1)});
    return USeries<Rat>::from_poly(disc, ord).sqrt();
}

USeries<Rat> alpha_plus_series(const Rat& g, long ord) {
    USeries<Rat> s = disc_sqrt_series(g, ord);
    return (USeries<Rat>::from_poly(upoly({1, 1}), ord) + s).scaled(Rat(1, 2));
}

Mat<UniPoly<Rat>> refined_dt_matrix(long n, const Rat& g) {
    long ord = n - 1;
    BiSeries<Rat> f = grid(fdt_gamma_fun(g), ord, ord);
    USeries<Rat> s = disc_sqrt_series(g, ord);
    USeries<Rat> ap = alpha_plus_series(g, ord);
    USeries<Rat> inv_ap = ap.reciprocal();
    // Column term: alpha_+^{2n}/sqrt(disc) * (t-1) u / (alpha_+ - t u)
    //            = sum_m (t^{m+1}-t^m) u^{m+1} alpha_+^{2n-m-1}/sqrt(disc).
    std::vector<USeries<Rat>> C;
    USeries<Rat> c = ap.pow(2 * n) * s.reciprocal() * inv_ap;
    for (long m = 0; m + 2 <= n; ++m) {
        C.push_back(c);
        c = c * inv_ap;
    }
    std::vector<UniPoly<Rat>> col(n);
    for (long i = 0; i < n; ++i) {
        UniPoly<Rat> e(f.coeff(i, n - 1));
        for (long m = 0; m < i; ++m) {
            Rat v = C[m].coeff(i - 1 - m);
            e += UniPoly<Rat>::monomial(v, m + 1) - UniPoly<Rat>::monomial(v, m);
        }
        col[i] = e;
    }
    return with_last_col(f, n, col);
}

Mat<UniPoly<Rat>> barf_matrix(long n, const Rat& g) {
    long ord = n - 1;
    BiSeries<Rat> f = grid(barf_main_fun(g), ord, ord);
    UniPoly<Rat> num = UniPoly<Rat>::from_coeffs({Rat(1), g}).pow(2 * n);
    USeries<Rat> E = USeries<Rat>::expand(num, upoly({1, -1}).pow(2 * n), ord);
    std::vector<UniPoly<Rat>> col(n);
    for (long i = 0; i < n; ++i) {
        UniPoly<Rat> e(f.coeff(i, n - 1));
        for (long m = 0; m < i; ++m) {
            Rat v = E.coeff(i - 1 - m);
            e += UniPoly<Rat>::monomial(v, m + 1) - UniPoly<Rat>::monomial(v, m);
        }
        col[i] = e;
    }
    return with_last_col(f, n, col);
}

UniPoly<Int> z20v_poly(long n) {
    return to_int(det_poly_lastcol(refined20v_matrix(n)));
}

UniPoly<Int> zdt_poly(long n) {
    return to_int(det_poly_lastcol(refined_dt_matrix(n, Rat(1))));
}

UniPoly<Rat> zdt_gamma_poly(long n, const Rat& g) {
    return det_poly_lastcol(refined_dt_matrix(n, g));
}

UniPoly<Int> h6v_unnormalized_det(long n) {
    UniPoly<Int> d = to_int(det_poly_lastcol(refined6v_cleared_matrix(n)));
    UniPoly<Int> onept = UniPoly<Int>::from_coeffs({Int(1), Int(1)}).pow(n - 1);
    return d.divide_exact(onept);
}

UniPoly<Int> h6v_unnormalized_rel(long n) {
    UniPoly<Int> p = z20v_poly(n) * UniPoly<Int>(pow2(n - 1));
    UniPoly<Int> onept = UniPoly<Int>::from_coeffs({Int(1), Int(1)}).pow(n - 1);
    return p.divide_exact(onept);
}

H6v h6v_value(long n) {
    UniPoly<Int> p = h6v_unnormalized_det(n);
    Int zn = p.eval(Int(1));
    Int g = gcd_int(content(p), zn);
    return {p.divide_exact(UniPoly<Int>(g)), exact_div(zn, g)};
}

Int entry_binom(long i, long j) {
    Int a = pow2(i) * binomial(i + 2 * j + 1, 2 * j + 1);
    if (i >= 1) a -= binomial(i - 1, 2 * j + 1);
    return a;
}

Int binom_det(long n) {
    Mat<Int> m(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = entry_binom(i, j);
    return det_bareiss(m);
}

QuadRat theta_entry(long i, long j) {
    long m = 2 * j + 1;
    Int fm = factorial(m);
    Int p1 = 1, p2 = 1;
    for (long r = 1; r <= m; ++r) {
        p1 *= Int(i + r);
        p2 *= Int(-i + r);
    }
    return sqrt2_power(i) * QuadRat(Rat(p1, fm)) +
           sqrt2_power(-i) * QuadRat(Rat(p2, fm));
}

Int symcor_value(long n) {
    Mat<QuadRat> m(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = theta_entry(i, j);
    QuadRat v = sqrt2_power(n * (n - 1) / 2) * det_gauss(m) * QuadRat(Rat(1, 2));
    if (!v.is_rational())
        throw arithmetic_error("theta determinant not rational: " + v.to_string());
    return v.a().to_int();
}

Rat ct_value(long n) {
    std::vector<long> lo(n, 0), hi(n);
    for (long i = 0; i < n; ++i) hi[i] = 2 * i + 1;
    LaurentMulti p(lo, hi);
    p.add(lo, Rat(1));
    auto unit = [&](long i, long j) {
        std::vector<long> e(n, 0);
        e[i] += 1;
        if (j >= 0) e[j] += 1;
        return e;
    };
    for (long a = 0; a < n; ++a) {
        for (long b = a + 1; b < n; ++b) {
            // exponents only grow, so window clipping drops exactly the
            // monomials whose constant-term contribution is zero
            p = p.mul_sparse({{unit(b, -1), Rat(1)}, {unit(a, -1), Rat(-1)}});
            p = p.mul_sparse({{std::vector<long>(n, 0), Rat(1)},
                              {unit(a, -1), Rat(1)},
                              {unit(b, -1), Rat(1)},
                              {unit(a, b), Rat(-1)}});
        }
    }
    Rat total(0);
    p.for_each([&](const std::vector<long>& e, const Rat& c) {
        Int w = 1;
        for (long i = 0; i < n; ++i) {
            long mi = hi[i] - e[i];
            w *= binomial(n - 1 + mi, mi);
        }
        total += c * Rat(w);
    });
    return total;
}

Int conjecture_product(long n) {
    Rat acc(pow2(n * (n - 1) / 2));
    for (long i = 0; i < n; ++i)
        acc *= Rat(factorial(4 * i + 2), factorial(n + 2 * i + 1));
    return acc.to_int();
}

namespace {
const double kPi = std::acos(-1.0);
C64 unit_q() { return std::polar(1.0, kPi / 8); }
}  // namespace

WeightPoint point_from_sqrts(C64 sz, C64 st, C64 sw) {
    WeightPoint pt;
    pt.q = unit_q();
    pt.sz = sz;
    pt.st = st;
    pt.sw = sw;
    pt.z = sz * sz;
    pt.t = st * st;
    pt.w = sw * sw;
    pt.alpha = pt.t;
    pt.p = 1.0 / (sz * pt.q);
    return pt;
}

WeightPoint combinatorial_point() {
    C64 q = unit_q();
    C64 sa = std::pow(2.0, -5.0 / 12.0) * std::polar(1.0, -2 * kPi / 8);
    return point_from_sqrts(sa * q * q * q, sa, sa / (q * q * q));
}

std::array<C64, 7> weights_20v(const WeightPoint& pt) {
    C64 q = pt.q, z = pt.z, t = pt.t, w = pt.w;
    C64 q2 = q * q;
    C64 g = q2 - 1.0 / q2;
    C64 A = q * z - t / q;
    C64 B = q * t - w / q;
    C64 C = z / q2 - q2 * w;
    C64 D = t / q - q * w;
    C64 E = z / q - q * t;
    return {
        (z - w) * A * B,
        C * A * D,
        C * A * g * pt.st * pt.sw,
        z * t * w * g * g * g + (z - w) * E * D,
        g * pt.sz * pt.sw * A * B,
        C * g * pt.sz * pt.st * B,
        C * E * B,
    };
}

LastColWeights weights_lastcol(C64 w, C64 sqrt_minus_w) {
    C64 q2 = unit_q() * unit_q();
    C64 s = (1.0 - w) / 2.0;
    double rt2 = std::sqrt(2.0);
    LastColWeights r;
    r.wbar = {
        (1.0 - w) * (q2 - w / q2) / (2 * rt2),
        (1.0 - w) * (1.0 / q2 - q2 * w) / (2 * rt2),
        s * sqrt_minus_w,
        s * s,
        s * sqrt_minus_w,
        s * s,
        s * s,
    };
    r.tau = (1.0 / q2 - q2 * w) / (q2 - w / q2);
    return r;
}

C64 tau_of_w(C64 w) {
    C64 q2 = unit_q() * unit_q();
    return (1.0 / q2 - q2 * w) / (q2 - w / q2);
}

QuadRat tau_at_minus_one() {
    // at w = -1 numerator and denominator both become q^2 + q^{-2} = sqrt2
    return QuadRat::sqrt2() * quad_inverse(QuadRat::sqrt2());
}

double lastcol_ratio_err(C64 w) {
    C64 q = unit_q();
    C64 sw = std::sqrt(w);
    C64 im(0.0, 1.0);
    auto num = weights_20v(point_from_sqrts(q * q, 1.0 / q, sw));
    auto den = weights_20v(point_from_sqrts(q * q, 1.0 / q, im));
    LastColWeights ref = weights_lastcol(w, sw / im);
    double err = 0.0;
    for (int i = 0; i < 7; ++i)
        err = std::max(err, std::abs(num[i] / den[i] - ref.wbar[i]));
    return err;
}

}  // namespace tvat
