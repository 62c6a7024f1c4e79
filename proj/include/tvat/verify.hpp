#pragma once

#include "tvat/numeric.hpp"

#include <string>
#include <vector>

namespace tvat {

enum class CheckStatus { pass, fail, skip };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

struct CheckResult {
    std::string check;
    std::string model;  // 20v, dt, 6v, or empty when not model-bound
    long n = -1, k = -1;
    std::string extra;  // free-form parameter tail, e.g. "gamma=0,1,2"
    CheckStatus status = CheckStatus::fail;
    std::string lhs, rhs;
    double ms = 0.0;
    bool conjecture = false;
};

std::string params_string(const CheckResult& r);

/// Per-family size caps for a suite run. Values beyond what an engine
/// supports yield skip records rather than errors.
struct Bounds {
    long equivalence_n = 12;
    long refined_n = 8;
    long pentagon_n = 8;
    long conjecture_n = 30;
    long binomial_n = 12;
    long sqrt2_n = 8;
    long ct_n = 5;
    long gamma_n = 5;
    long oracle_n = 5;

    /// Caps every family at n (used by --n-max).
    static Bounds capped(long n);
};

CheckResult check_equivalence(long n);
CheckResult check_refined_20v(long n);
CheckResult check_refined_dt(long n);
CheckResult check_refined_relation(long n);
CheckResult check_h6v(long n);
CheckResult check_pentagon(long n, long k);
CheckResult check_conjecture(long n);
CheckResult check_binom(long n);
CheckResult check_symcor(long n);
CheckResult check_ct(long n);
CheckResult check_gamma(long n);
CheckResult check_weights();
CheckResult check_oracle_schroder();
CheckResult check_oracle_dt(long n);
CheckResult check_oracle_20v(long n);

const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"). Checks execute in parallel (TVAT_THREADS caps
/// the worker count); the returned order is deterministic.
std::vector<CheckResult> run_suite(const std::string& suite, const Bounds& b);

}  // namespace tvat
