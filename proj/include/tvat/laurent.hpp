#pragma once

#include "tvat/numeric.hpp"

#include <vector>

namespace tvat {

struct LTerm {
    std::vector<long> e;
    Rat c;
};

/// Dense multivariate Laurent polynomial clipped to a fixed per-variable
/// exponent window. Products silently drop terms that leave the window; that
/// is only sound when dropped terms can never contribute to exponents that
/// are read later, which is the caller's invariant to maintain.
class LaurentMulti {
public:
    LaurentMulti(std::vector<long> lo, std::vector<long> hi)
        : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_.size() != hi_.size() || lo_.empty())
            throw arithmetic_error("window bounds mismatch");
        std::size_t total = 1;
        stride_.resize(lo_.size());
        for (std::size_t i = lo_.size(); i-- > 0;) {
            if (hi_[i] < lo_[i]) throw arithmetic_error("empty window");
            stride_[i] = total;
            total *= static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
        }
        c_.assign(total, Rat());
    }

    std::size_t nvars() const { return lo_.size(); }

    bool inside(const std::vector<long>& e) const {
        for (std::size_t i = 0; i < lo_.size(); ++i)
            if (e[i] < lo_[i] || e[i] > hi_[i]) return false;
        return true;
    }

    Rat coeff(const std::vector<long>& e) const {
        if (!inside(e)) throw truncation_error("exponent outside Laurent window");
        return c_[index(e)];
    }
    void add(const std::vector<long>& e, const Rat& v) {
        if (!inside(e)) throw truncation_error("exponent outside Laurent window");
        c_[index(e)] += v;
    }

    /// Multiply by a sparse polynomial, discarding products that exit the
    /// window.
    LaurentMulti mul_sparse(const std::vector<LTerm>& factor) const {
        LaurentMulti out(lo_, hi_);
        std::vector<long> e = lo_;
        for (std::size_t idx = 0; idx < c_.size(); ++idx) {
            if (!c_[idx].is_zero()) {
                std::vector<long> t(e.size());
                for (const auto& term : factor) {
                    bool ok = true;
                    for (std::size_t i = 0; i < e.size(); ++i) {
                        t[i] = e[i] + term.e[i];
                        if (t[i] < lo_[i] || t[i] > hi_[i]) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) out.c_[out.index(t)] += c_[idx] * term.c;
                }
            }
            for (std::size_t i = e.size(); i-- > 0;) {
                if (++e[i] <= hi_[i]) break;
                e[i] = lo_[i];
            }
        }
        return out;
    }

    Rat constant_term() const { return coeff(std::vector<long>(lo_.size(), 0)); }

    /// Visit every nonzero term as f(exponents, coefficient).
    template <class F>
    void for_each(F f) const {
        std::vector<long> e = lo_;
        for (std::size_t idx = 0; idx < c_.size(); ++idx) {
            if (!c_[idx].is_zero()) f(e, c_[idx]);
            for (std::size_t i = e.size(); i-- > 0;) {
                if (++e[i] <= hi_[i]) break;
                e[i] = lo_[i];
            }
        }
    }

private:
    std::size_t index(const std::vector<long>& e) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            idx += static_cast<std::size_t>(e[i] - lo_[i]) * stride_[i];
        return idx;
    }

    std::vector<long> lo_, hi_;
    std::vector<std::size_t> stride_;
    std::vector<Rat> c_;
};

}  // namespace tvat
