#pragma once

#include <cstdint>
#include <vector>

#include "gtv/group_spec.hpp"
#include "gtv/monomial.hpp"

namespace gtv {

// The canonical module of the quotient ring, realized combinatorially: the
// ideal generated by full-support invariant monomials. C_{d,k} denotes the
// full-support invariants of degree k*d; generation happens in degrees d and
// 2d, so c1 and c2 determine everything.
struct CanonicalModule {
    GroupSpec spec;
    std::vector<ExponentVector> c1;  // full-support invariants of degree d
    std::vector<ExponentVector> c2;  // full-support invariants of degree 2d
    // c1 plus those c2 elements no c1 element divides, in listing order
    // (degree-d generators first).
    std::vector<ExponentVector> minimal_gens;

    std::size_t eta_d() const { return c1.size(); }
};

CanonicalModule compute_canonical(const GroupSpec& spec);

struct RingClassification {
    bool is_level = false;       // minimal generators concentrated in one degree
    bool is_gorenstein = false;  // level with a single generator
    int regularity = 0;          // n+1 iff c1 nonempty, else n
    bool is_level_gt = false;    // minimal_gens = c1 != empty
};

RingClassification classify_ring(const GroupSpec& spec);

// Exhaustive witness for generation in degrees <= 2d: every full-support
// invariant of degree k*d (3 <= k <= k_max) is divisible by one of degree
// (k-1)*d with invariant quotient. violations expected empty.
struct GenerationBoundReport {
    int k_max = 3;
    std::uint64_t checked = 0;
    std::vector<ExponentVector> violations;
    bool ok = false;
};

// Requires k_max >= 3. Throws ResourceBound if an enumeration exceeds the cap.
GenerationBoundReport verify_generation_bound(const GroupSpec& spec, int k_max,
                                              std::uint64_t work_cap = 100'000'000);

// Necessary condition for the level-GT property: a nonempty C_{d,1} forces at
// least three pairwise distinct residues.
struct ThreeDistinctRecord {
    bool c1_nonempty = false;
    int num_distinct_alphas = 0;
    bool implication_holds = false;  // !c1_nonempty || num_distinct_alphas >= 3
};

ThreeDistinctRecord check_three_distinct(const GroupSpec& spec);

}  // namespace gtv
