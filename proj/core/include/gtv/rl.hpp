#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtv/bigint.hpp"
#include "gtv/group_spec.hpp"
#include "gtv/monomial.hpp"

namespace gtv {

// The smooth rational variety obtained by projecting the d-th Veronese of
// projective n-space away from the eta_d full-support degree-d invariants:
// the embedding is parameterized by the remaining N_d + 1 degree-d monomials.
// Only defined over level rings generated by C_{d,1} (the level-GT case).
struct RlSpec {
    GroupSpec spec;
    int eta = 0;     // |C_{d,1}|
    BigInt big_n;    // N_d = C(n+d, d) - eta_d - 1
    // All degree-d monomials except C_{d,1}, listing order, size N_d + 1.
    std::vector<ExponentVector> complement;
};

// Throws NotLevelGt unless classify_ring(spec).is_level_gt. Also asserts the
// embedding sufficient condition (complement contains every x_i^{d-1} x_j).
RlSpec build_rl(const GroupSpec& spec);

// h^i of the normal bundle twisted by -k, by the closed formulas:
//   i = 0:            (N+1) C(n+d-k, n) - (n+1) C(n+1-k, n)
//   0 < i < n-1:      0
//   i = n-1:          (n+1) C(k-2, n)                       for n+2 <= k <= d+n
//                     eta + n(d-1)/d * C(n+d-1, n)          for k = d+n+1
//                     (n+1) eta                             for k = d+n+2
//                     0                                     otherwise
//   i = n:            (N+1) C(k-d-1, n) - (n+1) C(k-2, n)   for k >= d+n+3
//                     0                                     otherwise
// The rational term is evaluated exactly and must be integral
// (IntegralityViolation otherwise). Requires 0 <= i <= n.
BigInt h(const RlSpec& rl, int i, int k);

// Cohomology grid in the conventional layout: the entry in row i, column j
// is h^i(N(j-i)), i.e. h(rl, i, i-j). Zeros render as ".".
struct CohomologyTable {
    int n = 0;                 // rows run i = n down to 0
    int j_min = 0, j_max = 0;  // inclusive column range
    int k_min = 0, k_max = 0;  // union of twists covered: [-j_max, n - j_min]
    bool tate_layout = true;   // entry (i, j) = h^i(N(j-i))
    std::map<std::pair<int, int>, BigInt> entries;  // (i, k) -> value
};

// Requires j_min <= j_max.
CohomologyTable table(const RlSpec& rl, int j_min, int j_max);

// Plain-text rendering: header row of column degrees, rows labelled "i:",
// right-aligned columns, "." for zero.
std::string render_table(const CohomologyTable& t);

// Checks sum_i (-1)^i h(i,k) against the Euler characteristic forced by the
// presentation 0 -> O(1)^{n+1} -> O(d)^{N+1} -> N_X -> 0, i.e.
// (N+1) chi(O(d-k)) - (n+1) chi(O(1-k)), for every k in [k_min, k_max].
struct EulerReport {
    int k_min = 0, k_max = 0;
    std::vector<int> violations;  // twists where the identity failed
    bool ok = false;
};

EulerReport euler_check(const RlSpec& rl, int k_min, int k_max);

}  // namespace gtv
