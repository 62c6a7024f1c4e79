#pragma once

#include "tvat/matdet.hpp"

#include <array>
#include <vector>

namespace tvat {

/// Rational-function catalog. u indexes rows, v indexes columns everywhere:
/// a matrix entry (i,j) is the coefficient of u^i v^j.
RatFun2<Rat> g20v_fun();
RatFun2<Rat> fdt_fun();
RatFun2<Rat> fl_fun();
RatFun2<Rat> flambda_fun();
RatFun2<Rat> sigma_fun();
RatFun2<Rat> fdt_gamma_fun(const Rat& g);
RatFun2<Rat> barf_main_fun(const Rat& g);
RatFun2<UniPoly<Rat>> fdt_gamma_formal_fun();

BiSeries<Rat> grid(const RatFun2<Rat>& f, long ou, long ov);

/// n x n integer truncation; throws if any coefficient is non-integral.
Mat<Int> matrix_int(const RatFun2<Rat>& f, long n);

Int z20v_det(long n);
Int zdt_det(long n);

/// Refined matrices: constant columns 0..n-2, polynomial last column.
Mat<UniPoly<Rat>> refined20v_matrix(long n);
Mat<UniPoly<Rat>> refined6v_cleared_matrix(long n);
Mat<UniPoly<Rat>> refined_dt_matrix(long n, const Rat& g);
Mat<UniPoly<Rat>> barf_matrix(long n, const Rat& g);

UniPoly<Int> z20v_poly(long n);
UniPoly<Int> zdt_poly(long n);
UniPoly<Rat> zdt_gamma_poly(long n, const Rat& g);

struct H6v {
    UniPoly<Int> num;
    Int den;
};
/// (a) determinant of the 6V refined matrix with the (1+tau)^{n-1} factor
/// cleared out of the last column, then divided back out; (b) the relation
/// h20v = ((1+tau)/2)^{n-1} h6v solved for h6v. Both return the polynomial
/// p with h = p / Z_n before reduction.
UniPoly<Int> h6v_unnormalized_det(long n);
UniPoly<Int> h6v_unnormalized_rel(long n);
H6v h6v_value(long n);

Int entry_binom(long i, long j);
Int binom_det(long n);

QuadRat theta_entry(long i, long j);
Int symcor_value(long n);

Rat ct_value(long n);

Int conjecture_product(long n);

/// Series building blocks for the alpha_+ based refined column, exposed for
/// direct testing.
USeries<Rat> disc_sqrt_series(const Rat& g, long ord);
USeries<Rat> alpha_plus_series(const Rat& g, long ord);

/// Numeric weight checks. The point carries the square roots of z, t, w so
/// products like sqrt(tw) are branch-consistent (sqrt t * sqrt w).
struct WeightPoint {
    C64 q;
    C64 z, t, w;
    C64 sz, st, sw;
    C64 alpha;
    C64 p;
};
WeightPoint point_from_sqrts(C64 sz, C64 st, C64 sw);
WeightPoint combinatorial_point();
std::array<C64, 7> weights_20v(const WeightPoint& pt);

struct LastColWeights {
    std::array<C64, 7> wbar;
    C64 tau;
};
LastColWeights weights_lastcol(C64 w, C64 sqrt_minus_w);
C64 tau_of_w(C64 w);
QuadRat tau_at_minus_one();
/// Max over i of |omega_i(q^4,q^-2,w)/omega_i(q^4,q^-2,-1) - wbar_i(w)|.
double lastcol_ratio_err(C64 w);

}  // namespace tvat
