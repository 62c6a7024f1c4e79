#include "tvat/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <tuple>
#include <unordered_map>

namespace tvat {

Int count_schroder(long dx, long dy) {
    if (dx < 0 || std::labs(dy) > dx || (dx - dy) % 2 != 0)
        throw config_error("count_schroder: unreachable displacement");
    long off = dx;  // y shifted to [0, 2 dx]
    std::vector<std::vector<Int>> dp(dx + 1, std::vector<Int>(2 * dx + 1, Int(0)));
    dp[0][off] = 1;
    for (long x = 1; x <= dx; ++x) {
        for (long y = -x; y <= x; ++y) {
            Int v = 0;
            if (std::labs(y - 1) <= x - 1) v += dp[x - 1][y - 1 + off];
            if (std::labs(y + 1) <= x - 1) v += dp[x - 1][y + 1 + off];
            if (x >= 2 && std::labs(y) <= x - 2) v += dp[x - 2][y + off];
            dp[x][y + off] = v;
        }
    }
    return dp[dx][dy + off];
}

Int m_entry_oracle(long i, long j) {
    if (i < 0 || j < 0) throw config_error("m_entry_oracle: negative index");
    long dx = 2 * j + 1, dy = 2 * j + 1 - 2 * i;
    if (std::labs(dy) > dx) return 0;  // endpoint out of reach, count is 0
    return count_schroder(dx, dy);
}

namespace {

uint64_t ybit(long y) { return uint64_t(1) << y; }

/// Path families with steps (1,1), (1,-1), (2,0); path j starts at (0, 2j).
/// State across cut x: heights of paths at a vertex with this x (low 32 bits)
/// and heights of long steps spanning x (high 32 bits). Vertices all have
/// x + y even, mid-flight crossings x + y odd, so the two sets never mix and
/// long steps can collide with nothing.
struct DtProblem {
    long n = 0;
    long xmax = 0;
    std::vector<std::vector<long>> ends;  // required landings per x
    std::vector<uint64_t> forb;           // forbidden vertex heights per x
};

DtProblem make_dt_problem(long n, long topk,
                          const std::vector<std::pair<long, long>>& forbidden) {
    DtProblem pr;
    pr.n = n;
    std::vector<std::pair<long, long>> ends;
    for (long j = 0; j + 1 < n; ++j) ends.push_back({2 * j + 1, 2 * j + 1});
    ends.push_back({2 * n - 1 - topk, 2 * n - 1 + topk});
    for (auto& e : ends) pr.xmax = std::max(pr.xmax, e.first);
    pr.ends.resize(pr.xmax + 1);
    pr.forb.assign(pr.xmax + 1, 0);
    for (auto& e : ends) pr.ends[e.first].push_back(e.second);
    for (auto& f : forbidden) {
        if (f.first < 0 || f.first > pr.xmax)
            throw config_error("forbidden vertex outside path region");
        pr.forb[f.first] |= ybit(f.second);
    }
    return pr;
}

UniPoly<Int> run_dt(const DtProblem& pr) {
    long ymax = std::max(4 * pr.n - 3, 1L);  // completable paths stay below
    std::unordered_map<uint64_t, UniPoly<Int>> cur;
    uint64_t start = 0;
    for (long j = 0; j < pr.n; ++j) start |= ybit(2 * j);
    cur.emplace(start, UniPoly<Int>(1));
    for (long x = 1; x <= pr.xmax; ++x) {
        std::unordered_map<uint64_t, UniPoly<Int>> nxt;
        for (const auto& [key, poly] : cur) {
            uint32_t atv = uint32_t(key), fly = uint32_t(key >> 32);
            std::vector<long> ys;
            for (long y = 0; y <= ymax; ++y)
                if (atv & ybit(y)) ys.push_back(y);
            // each at-vertex path rises, falls, or starts a long step
            auto rec = [&](auto&& self, std::size_t i, uint64_t landed,
                           uint64_t flights, long h) -> void {
                if (i == ys.size()) {
                    for (long e : pr.ends[x]) {
                        if (!(landed & ybit(e))) return;
                        landed &= ~ybit(e);
                    }
                    if (landed & pr.forb[x]) return;
                    nxt[landed | (flights << 32)] +=
                        poly * UniPoly<Int>::monomial(Int(1), h);
                    return;
                }
                long y = ys[i];
                if (y + 1 <= ymax && !(landed & ybit(y + 1)))
                    self(self, i + 1, landed | ybit(y + 1), flights, h);
                if (y - 1 >= 0 && !(landed & ybit(y - 1)))
                    self(self, i + 1, landed | ybit(y - 1), flights, h);
                self(self, i + 1, landed, flights | ybit(y), h + 1);
            };
            rec(rec, 0, fly, 0, 0);
        }
        cur = std::move(nxt);
    }
    auto it = cur.find(0);
    return it == cur.end() ? UniPoly<Int>() : it->second;
}

void check_dt_size(long n) {
    if (n < 1 || n > 6) throw config_error("path-family oracle supports 1 <= n <= 6");
}

}  // namespace

UniPoly<Int> dt_gamma_oracle(long n, long k) {
    check_dt_size(n);
    if (k < 0 || k > n - 1 || k < n - 3)
        throw config_error("dt oracle supports k in {n-1, n-2, n-3}");
    std::vector<std::pair<long, long>> forb;
    if (k <= n - 2) forb.push_back({n, 3 * n - 2});
    if (k <= n - 3) {
        forb.push_back({n - 1, 3 * n - 3});
        forb.push_back({n + 1, 3 * n - 3});
    }
    return run_dt(make_dt_problem(n, 0, forb));
}

Int count_dt(long n, long k) { return dt_gamma_oracle(n, k).eval(Int(1)); }

UniPoly<Int> dt_moved_gamma_oracle(long n, long k) {
    check_dt_size(n);
    if (k < 0 || k > n - 1) throw config_error("moved endpoint needs 0 <= k <= n-1");
    return run_dt(make_dt_problem(n, k, {}));
}

std::vector<Int> dt_refined_oracle(long n) {
    check_dt_size(n);
    std::vector<Int> w(n + 1, Int(0));
    for (long k = 0; k < n; ++k) w[k] = dt_moved_gamma_oracle(n, k).eval(Int(1));
    std::vector<Int> r(n);
    for (long k = 0; k < n; ++k) r[k] = w[k] - w[k + 1];
    return r;
}

namespace {

struct BrutePath {
    uint64_t vset;
    long h;
};

uint64_t vidx_bit(long x, long y) { return uint64_t(1) << (x * 8 + y); }

void gen_paths(long x, long y, long ex, long ey, uint64_t vset, long h,
               std::vector<BrutePath>& out) {
    vset |= vidx_bit(x, y);
    if (x == ex && y == ey) {
        out.push_back({vset, h});
        return;
    }
    auto feasible = [&](long nx, long ny) {
        return ny >= 0 && ex - nx >= std::labs(ey - ny);
    };
    if (feasible(x + 1, y + 1)) gen_paths(x + 1, y + 1, ex, ey, vset, h, out);
    if (feasible(x + 1, y - 1)) gen_paths(x + 1, y - 1, ex, ey, vset, h, out);
    if (feasible(x + 2, y)) gen_paths(x + 2, y, ex, ey, vset, h + 1, out);
}

}  // namespace

UniPoly<Int> dt_bruteforce_gamma(long n) {
    if (n < 1 || n > 2) throw config_error("brute force supports n <= 2 only");
    std::vector<std::vector<BrutePath>> paths(n);
    for (long j = 0; j < n; ++j)
        gen_paths(0, 2 * j, 2 * j + 1, 2 * j + 1, 0, 0, paths[j]);
    UniPoly<Int> total;
    if (n == 1) {
        for (const auto& a : paths[0]) total += UniPoly<Int>::monomial(Int(1), a.h);
    } else {
        for (const auto& a : paths[0])
            for (const auto& b : paths[1])
                if (!(a.vset & b.vset))
                    total += UniPoly<Int>::monomial(Int(1), a.h + b.h);
    }
    return total;
}

namespace {

long bot_row(long n, long k, long x) { return std::max(n - k, n + 1 - x); }

bool in_dom(long n, long k, long x, long y) {
    return x >= 1 && x <= n && y <= 2 * n - 1 && y >= bot_row(n, k, x);
}

// in-slots and their source vertex offsets, out-slots and their targets
constexpr const char* kInSides[3] = {"W", "NW", "N"};
constexpr long kInOff[3][2] = {{-1, 0}, {-1, 1}, {0, 1}};
constexpr const char* kOutSides[3] = {"E", "SE", "S"};
constexpr long kOutOff[3][2] = {{1, 0}, {1, -1}, {0, -1}};

}  // namespace

BoundarySpec default_boundary_spec(long n, long k) {
    if (n < 1 || k < 0 || k > n - 1)
        throw config_error("pentagon needs n >= 1 and 0 <= k <= n-1");
    BoundarySpec spec;
    spec.n = n;
    spec.k = k;
    std::map<std::string, long> next_index;
    auto emit = [&](const char* side, long x, long y, bool occ) {
        spec.stubs.push_back({side, next_index[side]++, x, y, occ});
    };
    // grouped by side, each side ordered by (x, y)
    for (int s = 0; s < 6; ++s) {
        bool in_side = s < 3;
        const char* side = in_side ? kInSides[s] : kOutSides[s - 3];
        const long* off = in_side ? kInOff[s] : kOutOff[s - 3];
        for (long x = 1; x <= n; ++x) {
            for (long y = bot_row(n, k, x); y <= 2 * n - 1; ++y) {
                if (in_dom(n, k, x + off[0], y + off[1])) continue;
                bool occ = (in_side && s == 0 && x == 1) || (!in_side && s == 5);
                emit(side, x, y, occ);
            }
        }
    }
    return spec;
}

void validate_boundary(const BoundarySpec& spec) {
    BoundarySpec ref = default_boundary_spec(spec.n, spec.k);
    if (spec.stubs.size() != ref.stubs.size())
        throw config_error("boundary stub count mismatch");
    std::map<std::tuple<std::string, long, long>, std::pair<long, bool>> seen;
    for (const auto& s : spec.stubs) {
        if (!seen.emplace(std::tuple{s.side, s.x, s.y}, std::pair{s.index, true}).second)
            throw config_error("duplicate boundary stub");
    }
    Int in_flow = 0, out_flow = 0;
    for (const auto& r : ref.stubs) {
        auto it = seen.find({r.side, r.x, r.y});
        if (it == seen.end())
            throw config_error("missing boundary stub " + r.side + " at (" +
                               std::to_string(r.x) + "," + std::to_string(r.y) + ")");
        if (it->second.first != r.index)
            throw config_error("boundary stub index mismatch on side " + r.side);
    }
    for (const auto& s : spec.stubs) {
        bool inbound = s.side == "W" || s.side == "NW" || s.side == "N";
        if (s.occupied) (inbound ? in_flow : out_flow) += 1;
    }
    if (in_flow != out_flow)
        throw config_error("boundary flow imbalance: " + int_to_decimal(in_flow) +
                           " entering vs " + int_to_decimal(out_flow) + " exiting");
}

namespace {

using IceStates = std::unordered_map<uint64_t, Int>;

template <class StubFn>
IceStates advance_column(long n, long k, long x, const IceStates& cur, StubFn stub) {
    long top = 2 * n - 1, bot = bot_row(n, k, x);
    IceStates nxt;
    for (const auto& [key, cnt] : cur) {
        uint32_t wm = uint32_t(key), nwm = uint32_t(key >> 32);
        auto rec = [&](auto&& self, long y, int carry, uint64_t nw,
                       uint64_t nnw) -> void {
            if (y < bot) {
                nxt[nw | (nnw << 32)] += cnt;
                return;
            }
            int w_in = in_dom(n, k, x - 1, y) ? int((wm >> y) & 1) : stub("W", x, y);
            int nw_in =
                in_dom(n, k, x - 1, y + 1) ? int((nwm >> y) & 1) : stub("NW", x, y);
            int n_in = (y == top) ? stub("N", x, y) : carry;
            int ind = w_in + nw_in + n_in;
            bool e_free = in_dom(n, k, x + 1, y);
            bool se_free = in_dom(n, k, x + 1, y - 1);
            bool s_free = in_dom(n, k, x, y - 1);
            for (int e = 0; e <= 1; ++e) {
                if (!e_free && e != stub("E", x, y)) continue;
                for (int se = 0; se <= 1; ++se) {
                    if (!se_free && se != stub("SE", x, y)) continue;
                    int s = ind - e - se;
                    if (s < 0 || s > 1) continue;
                    if (!s_free && s != stub("S", x, y)) continue;
                    uint64_t w2 = nw | (e_free && e ? ybit(y) : 0);
                    uint64_t n2 = nnw | (se_free && se ? ybit(y - 1) : 0);
                    self(self, y - 1, s_free ? s : 0, w2, n2);
                }
            }
        };
        rec(rec, top, 0, 0, 0);
    }
    return nxt;
}

void check_ice_size(long n, long k) {
    if (n <= 4 || (n == 5 && k == 0)) return;
    throw config_error("ice oracle supports n <= 4, or n = 5 with k = 0");
}

}  // namespace

Int count_20v(const BoundarySpec& spec) {
    validate_boundary(spec);
    check_ice_size(spec.n, spec.k);
    std::map<std::tuple<std::string, long, long>, bool> occ;
    for (const auto& s : spec.stubs) occ[{s.side, s.x, s.y}] = s.occupied;
    auto stub = [&](const char* side, long x, long y) -> int {
        auto it = occ.find({side, x, y});
        if (it == occ.end()) throw arithmetic_error("stub lookup off the boundary");
        return it->second ? 1 : 0;
    };
    IceStates st;
    st.emplace(0, Int(1));
    for (long x = 1; x <= spec.n; ++x)
        st = advance_column(spec.n, spec.k, x, st, stub);
    auto it = st.find(0);
    return it == st.end() ? Int(0) : it->second;
}

Int count_20v(long n, long k) { return count_20v(default_boundary_spec(n, k)); }

Refined20vOracle refined_20v_oracle(long n) {
    if (n < 1 || n > 4) throw config_error("refined ice oracle supports n <= 4");
    if (n == 1) return {{Int(1)}, {Int(0)}};  // sole path enters its column west
    long k = n - 1;
    BoundarySpec spec = default_boundary_spec(n, k);
    std::map<std::tuple<std::string, long, long>, bool> occ;
    for (const auto& s : spec.stubs) occ[{s.side, s.x, s.y}] = s.occupied;
    auto stub = [&](const char* side, long x, long y) -> int {
        auto it = occ.find({side, x, y});
        if (it == occ.end()) throw arithmetic_error("stub lookup off the boundary");
        return it->second ? 1 : 0;
    };
    IceStates st;
    st.emplace(0, Int(1));
    for (long x = 1; x < n; ++x) st = advance_column(n, k, x, st, stub);
    Refined20vOracle r;
    r.horiz.assign(2 * n - 1, Int(0));
    r.diag.assign(2 * n - 1, Int(0));
    // exactly one interface edge can lead to a completable last column
    for (const auto& [key, cnt] : st) {
        uint32_t wm = uint32_t(key), nwm = uint32_t(key >> 32);
        for (long y = 1; y <= 2 * n - 1; ++y) {
            if (wm == ybit(y) && nwm == 0) r.horiz[y - 1] += cnt;
            if (wm == 0 && nwm == ybit(y)) r.diag[y - 1] += cnt;
        }
    }
    return r;
}

}  // namespace tvat
