#include "tvat/verify.hpp"

#include "tvat/genfun.hpp"
#include "tvat/oracles.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

namespace tvat {

std::string params_string(const CheckResult& r) {
    std::string s;
    auto app = [&](const std::string& p) {
        if (!s.empty()) s += " ";
        s += p;
    };
    if (!r.model.empty()) app("model=" + r.model);
    if (r.n >= 0) app("n=" + std::to_string(r.n));
    if (r.k >= 0) app("k=" + std::to_string(r.k));
    if (!r.extra.empty()) app(r.extra);
    return s;
}

Bounds Bounds::capped(long n) {
    Bounds b;
    b.equivalence_n = b.refined_n = b.pentagon_n = b.conjecture_n = n;
    b.binomial_n = b.sqrt2_n = b.ct_n = b.gamma_n = b.oracle_n = n;
    return b;
}

namespace {

std::string s_of(const Int& v) { return int_to_decimal(v); }

std::string poly_str(const UniPoly<Int>& p) {
    std::string s = "[";
    for (long i = 0; i <= p.degree(); ++i) {
        if (i) s += ",";
        s += s_of(p.coeff(i));
    }
    return s + "]";
}

std::string rpoly_str(const UniPoly<Rat>& p) {
    std::string s = "[";
    for (long i = 0; i <= p.degree(); ++i) {
        if (i) s += ",";
        s += p.coeff(i).to_decimal();
    }
    return s + "]";
}

std::string vec_str(const std::vector<Int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += s_of(v[i]);
    }
    return s + "]";
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

UniPoly<Int> ipoly(std::initializer_list<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return UniPoly<Int>::from_coeffs(std::move(v));
}

/// Collects sub-checks; the first failure wins the lhs/rhs slots.
struct Checker {
    bool ok = true;
    std::string what, lhs, rhs;
    void expect(bool c, const std::string& w, const std::string& l,
                const std::string& r) {
        if (!c && ok) {
            ok = false;
            what = w;
            lhs = l;
            rhs = r;
        }
    }
    void finish(CheckResult& r, const std::string& pass_lhs,
                const std::string& pass_rhs) const {
        if (ok) {
            r.status = CheckStatus::pass;
            r.lhs = pass_lhs;
            r.rhs = pass_rhs;
        } else {
            r.status = CheckStatus::fail;
            r.lhs = lhs;
            r.rhs = rhs;
            r.extra += (r.extra.empty() ? "" : " ") + std::string("failed=") + what;
        }
    }
};

template <class F>
CheckResult timed(CheckResult r, F body) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.lhs = "exception";
        r.rhs = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
    return r;
}

CheckResult skipped(CheckResult r, const std::string& why) {
    r.status = CheckStatus::skip;
    r.rhs = why;
    return r;
}

const std::vector<UniPoly<Int>>& z20_refs() {
    static const std::vector<UniPoly<Int>> v = {
        ipoly({1}), ipoly({1, 2, 1}), ipoly({4, 15, 22, 15, 4}),
        ipoly({60, 328, 772, 1008, 772, 328, 60}),
        ipoly({3328, 23868, 76856, 145860, 179088, 145860, 76856, 23868, 3328})};
    return v;
}

const std::vector<UniPoly<Int>>& zdt_refs() {
    static const std::vector<UniPoly<Int>> v = {
        ipoly({1}), ipoly({3, 1}), ipoly({37, 19, 4}),
        ipoly({1780, 1100, 388, 60}),
        ipoly({324948, 222716, 100724, 27196, 3328})};
    return v;
}

const std::vector<UniPoly<Int>>& h6v_num_refs() {
    static const std::vector<UniPoly<Int>> v = {
        ipoly({1}), ipoly({1, 1}), ipoly({4, 7, 4}), ipoly({15, 37, 37, 15}),
        ipoly({64, 203, 282, 203, 64})};
    return v;
}

const long kH6vDenRef[5] = {1, 2, 15, 104, 816};
const long kQRef[5] = {1, 3, 29, 901, 89893};

}  // namespace

CheckResult check_equivalence(long n) {
    CheckResult r;
    r.check = "equivalence";
    r.n = n;
    return timed(r, [n](CheckResult& r) {
        Checker c;
        Int dp = z20v_det(n), dm = zdt_det(n);
        c.expect(dp == dm, "determinants", s_of(dp), s_of(dm));
        auto L = grid(fl_fun(), n - 1, n - 1);
        auto M = grid(fdt_fun(), n - 1, n - 1);
        auto P = grid(g20v_fun(), n - 1, n - 1);
        c.expect(is_unit_lower_triangular(truncate(L, n)), "transition matrix shape",
                 "L", "unit lower triangular");
        // L is unit lower triangular, so the truncated product is exact
        auto LM = convolve(L, M);
        bool same = true;
        long bi = 0, bj = 0;
        for (long i = 0; i < n && same; ++i)
            for (long j = 0; j < n && same; ++j)
                if (LM.coeff(i, j) != P.coeff(i, j)) {
                    same = false;
                    bi = i;
                    bj = j;
                }
        c.expect(same, "factorization entry (" + std::to_string(bi) + "," +
                           std::to_string(bj) + ")",
                 same ? "" : LM.coeff(bi, bj).to_decimal(),
                 same ? "" : P.coeff(bi, bj).to_decimal());
        c.finish(r, s_of(dp), s_of(dm));
    });
}

CheckResult check_refined_20v(long n) {
    CheckResult r;
    r.check = "refined_20v";
    r.model = "20v";
    r.n = n;
    return timed(r, [n](CheckResult& r) {
        Checker c;
        UniPoly<Int> z = z20v_poly(n);
        if (n <= 5)
            c.expect(z == z20_refs()[n - 1], "reference coefficients", poly_str(z),
                     poly_str(z20_refs()[n - 1]));
        c.expect(z.is_palindromic(2 * n - 2), "palindromic", poly_str(z),
                 "self-reciprocal of degree " + std::to_string(2 * n - 2));
        Int z0 = (n >= 2) ? z20v_det(n - 1) : Int(1);
        c.expect(z.coeff(0) == z0, "value at 0", s_of(z.coeff(0)), s_of(z0));
        Int z1 = z20v_det(n);
        c.expect(z.eval(Int(1)) == z1, "value at 1", s_of(z.eval(Int(1))), s_of(z1));
        c.finish(r, poly_str(z), n <= 5 ? poly_str(z20_refs()[n - 1]) : "invariants");
    });
}

CheckResult check_refined_dt(long n) {
    CheckResult r;
    r.check = "refined_dt";
    r.model = "dt";
    r.n = n;
    return timed(r, [n](CheckResult& r) {
        Checker c;
        UniPoly<Int> z = zdt_poly(n);
        if (n <= 5)
            c.expect(z == zdt_refs()[n - 1], "reference coefficients", poly_str(z),
                     poly_str(zdt_refs()[n - 1]));
        Int z1 = zdt_det(n);
        c.expect(z.eval(Int(1)) == z1, "value at 1", s_of(z.eval(Int(1))), s_of(z1));
        Int lead = (n >= 2) ? zdt_det(n - 1) : Int(1);
        c.expect(z.coeff(z.degree()) == lead, "leading coefficient",
                 s_of(z.coeff(z.degree())), s_of(lead));
        c.finish(r, poly_str(z), n <= 5 ? poly_str(zdt_refs()[n - 1]) : "invariants");
    });
}

CheckResult check_refined_relation(long n) {
    CheckResult r;
    r.check = "refined_relation";
    r.n = n;
    return timed(r, [n](CheckResult& r) {
        Checker c;
        UniPoly<Int> z20 = z20v_poly(n), zd = zdt_poly(n);
        UniPoly<Int> lhs = ipoly({1, 1}) * z20;
        UniPoly<Int> rhs = UniPoly<Int>::monomial(Int(1), n) * zd + zd.reverse(n - 1);
        c.expect(lhs == rhs, "reciprocity", poly_str(lhs), poly_str(rhs));
        for (long k = 0; k < n; ++k) {
            Int a = z20.coeff(n + k) + z20.coeff(n + k - 1);
            Int b = (n - k - 2 >= 0 ? z20.coeff(n - k - 2) : Int(0)) +
                    (n - k - 1 >= 0 ? z20.coeff(n - k - 1) : Int(0));
            c.expect(zd.coeff(k) == a && a == b,
                     "coefficient split k=" + std::to_string(k), s_of(zd.coeff(k)),
                     s_of(a) + "/" + s_of(b));
        }
        c.finish(r, poly_str(lhs), poly_str(rhs));
    });
}

CheckResult check_h6v(long n) {
    CheckResult r;
    r.check = "h6v";
    r.model = "6v";
    r.n = n;
    return timed(r, [n](CheckResult& r) {
        Checker c;
        UniPoly<Int> pa = h6v_unnormalized_det(n);
        UniPoly<Int> pb = h6v_unnormalized_rel(n);
        c.expect(pa == pb, "determinant vs ratio route", poly_str(pa), poly_str(pb));
        H6v h = h6v_value(n);
        if (n <= 5) {
            c.expect(h.num == h6v_num_refs()[n - 1] && h.den == Int(kH6vDenRef[n - 1]),
                     "reference value", poly_str(h.num) + "/" + s_of(h.den),
                     poly_str(h6v_num_refs()[n - 1]) + "/" +
                         std::to_string(kH6vDenRef[n - 1]));
        }
        c.expect(h.num.eval(Int(1)) == h.den, "normalization h(1)=1",
                 s_of(h.num.eval(Int(1))), s_of(h.den));
        c.expect(h.num.is_palindromic(n - 1), "palindromic", poly_str(h.num),
                 "self-reciprocal of degree " + std::to_string(n - 1));
        c.expect(h.num.coeff(0) == h.num.coeff(n - 1), "first equals last",
                 s_of(h.num.coeff(0)), s_of(h.num.coeff(n - 1)));
        c.finish(r, poly_str(h.num) + "/" + s_of(h.den), poly_str(pb));
    });
}

CheckResult check_pentagon(long n, long k) {
    CheckResult r;
    r.check = "pentagon";
    r.n = n;
    r.k = k;
    if (k != 2 && k != 3) return skipped(r, "truncation depth must be 2 or 3");
    if (n < k) return skipped(r, "needs n >= " + std::to_string(k));
    return timed(r, [n, k](CheckResult& r) {
        Checker c;
        Int zn = z20v_det(n), zn1 = z20v_det(n - 1);
        if (k == 2) {
            Int closed = zn - zn1;
            UniPoly<Int> z = z20v_poly(n);
            Int refined_route = z.eval(Int(1)) - z.coeff(0);
            c.expect(closed == refined_route, "two determinant routes", s_of(closed),
                     s_of(refined_route));
            if (n <= 4) {
                Int ice = count_20v(n, n - 2);
                c.expect(ice == closed, "ice oracle", s_of(ice), s_of(closed));
                Int til = count_dt(n, n - 2);
                c.expect(til == closed, "tiling oracle", s_of(til), s_of(closed));
            }
            c.finish(r, s_of(closed), "Z_n - Z_{n-1}");
        } else {
            Int zn2 = z20v_poly(n).coeff(1);
            Int first = zn - zn2 - Int(2 * (n - 1)) * zn1;
            Int zdt2 = zdt_poly(n).coeff(n - 2);
            Int second = zn - zdt2 - Int(2 * n - 3) * zn1;
            c.expect(first == second, "pentagon vs triangle relation", s_of(first),
                     s_of(second));
            if (n <= 4) {
                Int ice = count_20v(n, n - 3);
                c.expect(ice == first, "ice oracle", s_of(ice), s_of(first));
                Int til = count_dt(n, n - 3);
                c.expect(til == second, "tiling oracle", s_of(til), s_of(second));
            }
            c.finish(r, s_of(first), s_of(second));
        }
    });
}

CheckResult check_conjecture(long n) {
    CheckResult r;
    r.check = "conjecture";
    r.n = n;
    r.conjecture = true;
    return timed(r, [n](CheckResult& r) {
        r.conjecture = true;
        Checker c;
        Int prod = conjecture_product(n), det = z20v_det(n);
        c.expect(prod == det, "product formula", s_of(prod), s_of(det));
        c.finish(r, s_of(prod), s_of(det));
    });
}

CheckResult check_binom(long n) {
    CheckResult r;
    r.check = "binomial";
    r.n = n;
    return timed(r, [n](CheckResult& r) {
        Checker c;
        Int bd = binom_det(n), zd = z20v_det(n);
        c.expect(bd == zd, "determinants", s_of(bd), s_of(zd));
        auto L = grid(flambda_fun(), n - 1, n - 1);
        c.expect(is_unit_lower_triangular(truncate(L, n)), "triangular cofactor",
                 "Lambda", "unit lower triangular");
        auto prod = convolve(L, grid(g20v_fun(), n - 1, n - 1));
        bool same = true;
        for (long i = 0; i < n && same; ++i)
            for (long j = 0; j < n && same; ++j)
                if (prod.coeff(i, j) != Rat(entry_binom(i, j))) same = false;
        c.expect(same, "entrywise product", "Lambda*P", "binomial entries");
        c.finish(r, s_of(bd), s_of(zd));
    });
}

CheckResult check_symcor(long n) {
    CheckResult r;
    r.check = "sqrt2";
    r.n = n;
    return timed(r, [n](CheckResult& r) {
        Checker c;
        Int sv = symcor_value(n), zd = z20v_det(n);
        c.expect(sv == zd, "theta determinant", s_of(sv), s_of(zd));
        c.finish(r, s_of(sv), s_of(zd));
    });
}

CheckResult check_ct(long n) {
    CheckResult r;
    r.check = "ct";
    r.n = n;
    if (n > 5) return skipped(r, "constant-term readout bounded to n <= 5");
    return timed(r, [n](CheckResult& r) {
        Checker c;
        Rat v = ct_value(n);
        c.expect(v.is_integer(), "integrality", v.to_decimal(), "integer");
        Int zd = z20v_det(n);
        c.expect(v == Rat(zd), "constant term", v.to_decimal(), s_of(zd));
        c.finish(r, v.to_decimal(), s_of(zd));
    });
}

CheckResult check_gamma(long n) {
    CheckResult r;
    r.check = "gamma";
    r.n = n;
    r.extra = "gamma=0,1,2";
    if (n > 5) return skipped(r, "gamma family bounded to n <= 5");
    return timed(r, [n](CheckResult& r) {
        Checker c;
        const long samples[3] = {0, 1, 2};
        if (n <= 3) {
            auto fg = BiSeries<UniPoly<Rat>>::expand(fdt_gamma_formal_fun(), n - 1,
                                                     n - 1);
            UniPoly<Rat> det = det_laplace(truncate(fg, n));
            UniPoly<Rat> orc = to_rat(dt_gamma_oracle(n, n - 1));
            c.expect(det == orc, "formal determinant vs oracle", rpoly_str(det),
                     rpoly_str(orc));
        }
        if (n == 4) {
            UniPoly<Int> orc = dt_gamma_oracle(n, n - 1);
            for (long g : samples) {
                Int det = det_bareiss(matrix_int(fdt_gamma_fun(Rat(g)), n));
                Int ev = orc.eval(Int(g));
                c.expect(det == ev, "sampled determinant gamma=" + std::to_string(g),
                         s_of(det), s_of(ev));
            }
        }
        for (long g : samples) {
            UniPoly<Rat> a = det_poly_lastcol(refined_dt_matrix(n, Rat(g)));
            UniPoly<Rat> b = det_poly_lastcol(barf_matrix(n, Rat(g)));
            c.expect(a == b, "refined route vs product route gamma=" + std::to_string(g),
                     rpoly_str(a), rpoly_str(b));
        }
        Int d1 = det_bareiss(matrix_int(fdt_gamma_fun(Rat(1)), n));
        c.expect(d1 == zdt_det(n), "gamma=1 reduction", s_of(d1), s_of(zdt_det(n)));
        UniPoly<Int> z1 = to_int(det_poly_lastcol(refined_dt_matrix(n, Rat(1))));
        c.expect(z1 == zdt_poly(n), "gamma=1 refined reduction", poly_str(z1),
                 poly_str(zdt_poly(n)));
        c.finish(r, "gamma family consistent", "n=" + std::to_string(n));
    });
}

CheckResult check_weights() {
    CheckResult r;
    r.check = "weights";
    return timed(r, [](CheckResult& r) {
        Checker c;
        auto wt = weights_20v(combinatorial_point());
        double dev = 0;
        for (const auto& w : wt) dev = std::max(dev, std::abs(w - C64(1.0)));
        c.expect(dev < 1e-9, "uniform point", sci(dev), "< 1e-9");
        std::mt19937_64 rng(20260824);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double rerr = 0;
        for (int i = 0; i < 5; ++i)
            rerr = std::max(rerr, lastcol_ratio_err(C64(u(rng), u(rng))));
        c.expect(rerr < 1e-10, "last column ratio", sci(rerr), "< 1e-10");
        auto base = weights_lastcol(C64(-1.0), C64(1.0));
        double bdev = 0;
        for (const auto& w : base.wbar) bdev = std::max(bdev, std::abs(w - C64(1.0)));
        c.expect(bdev < 1e-12, "uniform last column at w=-1", sci(bdev), "< 1e-12");
        auto some = weights_lastcol(C64(0.37, 0.58), std::sqrt(C64(-0.37, -0.58)));
        c.expect(some.wbar[2] == some.wbar[4], "diagonal pair equal",
                 sci(std::abs(some.wbar[2])), sci(std::abs(some.wbar[4])));
        c.expect(tau_at_minus_one() == QuadRat(Rat(1)), "tau(-1)",
                 tau_at_minus_one().to_string(), "1");
        c.finish(r, sci(std::max(dev, rerr)), "tolerances met");
    });
}

CheckResult check_oracle_schroder() {
    CheckResult r;
    r.check = "oracle_schroder";
    return timed(r, [](CheckResult& r) {
        Checker c;
        c.expect(count_schroder(1, 1) == 1 && count_schroder(2, 0) == 3 &&
                     count_schroder(3, 1) == 5,
                 "base displacements", "1,3,5", "1,3,5");
        auto f = grid(fdt_fun(), 6, 6);
        bool same = true;
        for (long i = 0; i <= 6 && same; ++i)
            for (long j = 0; j <= 6 && same; ++j)
                if (Rat(m_entry_oracle(i, j)) != f.coeff(i, j)) same = false;
        c.expect(same, "entry grid", "path counts", "series coefficients");
        c.finish(r, "path counts", "series coefficients");
    });
}

CheckResult check_oracle_dt(long n) {
    CheckResult r;
    r.check = "oracle_dt";
    r.model = "dt";
    r.n = n;
    if (n > 5) return skipped(r, "tiling oracle bounded to n <= 5");
    return timed(r, [n](CheckResult& r) {
        Checker c;
        Int total = count_dt(n, n - 1), det = zdt_det(n);
        c.expect(total == det, "total vs determinant", s_of(total), s_of(det));
        if (n <= 4) {
            auto refined = dt_refined_oracle(n);
            UniPoly<Int> z = zdt_poly(n);
            bool same = refined.size() == std::size_t(n);
            for (long i = 0; i < n && same; ++i)
                if (refined[i] != z.coeff(i)) same = false;
            c.expect(same, "refined vs determinant", vec_str(refined), poly_str(z));
        }
        if (n <= 2) {
            UniPoly<Int> brute = dt_bruteforce_gamma(n);
            UniPoly<Int> dp = dt_gamma_oracle(n, n - 1);
            c.expect(brute == dp, "exhaustive cross-check", poly_str(brute),
                     poly_str(dp));
        }
        c.finish(r, s_of(total), s_of(det));
    });
}

CheckResult check_oracle_20v(long n) {
    CheckResult r;
    r.check = "oracle_20v";
    r.model = "20v";
    r.n = n;
    if (n > 5) return skipped(r, "ice oracle bounded to n <= 5");
    return timed(r, [n](CheckResult& r) {
        Checker c;
        Int q = count_20v(n, 0);
        c.expect(q == Int(kQRef[n - 1]), "quadrangle reference", s_of(q),
                 std::to_string(kQRef[n - 1]));
        if (n <= 4) {
            Int total = count_20v(n, n - 1), det = z20v_det(n);
            c.expect(total == det, "total vs determinant", s_of(total), s_of(det));
        }
        if (n <= 3) {
            auto refined = refined_20v_oracle(n);
            UniPoly<Int> z = z20v_poly(n);
            std::vector<Int> sum(2 * n - 1);
            for (long i = 0; i < 2 * n - 1; ++i)
                sum[i] = refined.horiz[i] + refined.diag[i];
            bool same = true, palin = true;
            for (long i = 0; i < 2 * n - 1; ++i) {
                if (sum[i] != z.coeff(i)) same = false;
                if (sum[i] != sum[2 * n - 2 - i]) palin = false;
            }
            c.expect(same, "refined vs determinant", vec_str(sum), poly_str(z));
            c.expect(palin, "refined palindromicity", vec_str(sum), "self-reverse");
        }
        c.finish(r, s_of(q), std::to_string(kQRef[n - 1]));
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "all",       "equivalence", "refined", "pentagon", "conjecture", "binomial",
        "sqrt2",     "ct",          "gamma",   "weights",  "oracle"};
    return names;
}

namespace {

long thread_budget() {
    if (const char* env = std::getenv("TVAT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || v < 1)
            throw config_error("TVAT_THREADS must be a positive integer");
        return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? long(hw) : 1;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const Bounds& b) {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) throw config_error("unknown suite: " + suite);
    auto want = [&](const char* s) { return suite == "all" || suite == s; };

    std::vector<std::function<CheckResult()>> tasks;
    if (want("equivalence"))
        for (long n = 1; n <= b.equivalence_n; ++n)
            tasks.push_back([n] { return check_equivalence(n); });
    if (want("refined")) {
        for (long n = 1; n <= b.refined_n; ++n)
            tasks.push_back([n] { return check_refined_20v(n); });
        for (long n = 1; n <= b.refined_n; ++n)
            tasks.push_back([n] { return check_refined_dt(n); });
        for (long n = 1; n <= b.refined_n; ++n)
            tasks.push_back([n] { return check_refined_relation(n); });
        for (long n = 1; n <= b.refined_n; ++n)
            tasks.push_back([n] { return check_h6v(n); });
    }
    if (want("pentagon")) {
        for (long n = 2; n <= b.pentagon_n; ++n)
            tasks.push_back([n] { return check_pentagon(n, 2); });
        for (long n = 3; n <= b.pentagon_n; ++n)
            tasks.push_back([n] { return check_pentagon(n, 3); });
    }
    if (want("conjecture"))
        for (long n = 1; n <= b.conjecture_n; ++n)
            tasks.push_back([n] { return check_conjecture(n); });
    if (want("binomial"))
        for (long n = 1; n <= b.binomial_n; ++n)
            tasks.push_back([n] { return check_binom(n); });
    if (want("sqrt2"))
        for (long n = 1; n <= b.sqrt2_n; ++n)
            tasks.push_back([n] { return check_symcor(n); });
    if (want("ct"))
        for (long n = 1; n <= b.ct_n; ++n)
            tasks.push_back([n] { return check_ct(n); });
    if (want("gamma"))
        for (long n = 1; n <= b.gamma_n; ++n)
            tasks.push_back([n] { return check_gamma(n); });
    if (want("weights")) tasks.push_back([] { return check_weights(); });
    if (want("oracle")) {
        tasks.push_back([] { return check_oracle_schroder(); });
        for (long n = 1; n <= b.oracle_n; ++n)
            tasks.push_back([n] { return check_oracle_dt(n); });
        for (long n = 1; n <= b.oracle_n; ++n)
            tasks.push_back([n] { return check_oracle_20v(n); });
    }

    std::vector<CheckResult> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            out[i] = tasks[i]();
        }
    };
    long nt = std::min<long>(thread_budget(), long(tasks.size()));
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long t = 0; t + 1 < nt; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace tvat
