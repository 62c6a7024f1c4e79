#pragma once

#include "tvat/numeric.hpp"
#include "tvat/quadrat.hpp"

namespace tvat {

// Ring helpers used by the generic polynomial/series templates. Coefficient
// rings are plain types; coercion is explicit (Int -> Rat -> QuadRat only).

inline bool ring_is_zero(const Int& x) { return x == 0; }
inline bool ring_is_zero(const Rat& x) { return x.is_zero(); }
inline bool ring_is_zero(const QuadRat& x) { return x.is_zero(); }

inline Int ring_inverse(const Int& x) {
    if (x == 1 || x == -1) return x;
    throw arithmetic_error("Int unit inverse: " + int_to_decimal(x) + " is not a unit");
}
inline Rat ring_inverse(const Rat& x) { return rat_inverse(x); }
inline QuadRat ring_inverse(const QuadRat& x) { return quad_inverse(x); }

inline Int ring_exact_div(const Int& a, const Int& b) { return exact_div(a, b); }
inline Rat ring_exact_div(const Rat& a, const Rat& b) { return a / b; }
inline QuadRat ring_exact_div(const QuadRat& a, const QuadRat& b) { return a / b; }

}  // namespace tvat
