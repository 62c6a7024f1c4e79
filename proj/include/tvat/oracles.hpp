#pragma once

#include "tvat/unipoly.hpp"

#include <string>
#include <vector>

namespace tvat {

/// Paths (0,0) -> (dx,dy) with steps (1,1), (1,-1), (2,0), no height
/// constraint. Requires dx >= 0, |dy| <= dx, dx - dy even.
Int count_schroder(long dx, long dy);

/// Independent route to the path-matrix entry: count_schroder over the
/// displacement to the j-th endpoint from the i-th start.
Int m_entry_oracle(long i, long j);

/// Tilings of the Aztec triangle T_{n,k} counted as non-intersecting path
/// families, tallied by the number of long horizontal steps (gamma degree).
/// k in {n-1 (full triangle), n-2, n-3}.
UniPoly<Int> dt_gamma_oracle(long n, long k);
Int count_dt(long n, long k);

/// Families with the top endpoint moved to (2n-1-k, 2n-1+k).
UniPoly<Int> dt_moved_gamma_oracle(long n, long k);

/// Refined counts by the top path's exit: consecutive differences of the
/// endpoint-moved families. Entry k holds the coefficient of t^k, k <= n-1.
std::vector<Int> dt_refined_oracle(long n);

/// Exhaustive cross-check: enumerates explicit step tuples per path and
/// filters vertex-disjoint families. n <= 2.
UniPoly<Int> dt_bruteforce_gamma(long n);

/// A dangling edge on the pentagon boundary. side names the slot direction
/// at the carrying vertex (W, NW, N for inbound; E, SE, S for outbound);
/// index runs within each side ordered by (x, y).
struct BoundaryStub {
    std::string side;
    long index = 0;
    long x = 0, y = 0;
    bool occupied = false;
};

struct BoundarySpec {
    long n = 0, k = 0;
    std::vector<BoundaryStub> stubs;
};

/// The calibrated boundary: every west stub of the first column carries an
/// entering path, every column-bottom south stub an exiting one, all other
/// stubs empty.
BoundarySpec default_boundary_spec(long n, long k);

/// Exact stub-set match against the domain of P_{n,k} plus conservation of
/// entering vs exiting paths; throws config_error on any mismatch.
void validate_boundary(const BoundarySpec& spec);

/// Ice configurations on P_{n,k} with the given boundary. Supported sizes:
/// n <= 4, plus n = 5 for k = 0.
Int count_20v(const BoundarySpec& spec);
Int count_20v(long n, long k);

/// Refined counts on the full pentagon P_{n,n-1} split by how the unique
/// path reaching the last column enters it: horizontally or diagonally at
/// height k. Entry k-1 of each vector holds the k-th count, k = 1..2n-1.
struct Refined20vOracle {
    std::vector<Int> horiz, diag;
};
Refined20vOracle refined_20v_oracle(long n);

}  // namespace tvat
