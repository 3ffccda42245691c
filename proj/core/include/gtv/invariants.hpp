#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gtv/bigint.hpp"
#include "gtv/group_spec.hpp"
#include "gtv/monomial.hpp"

namespace gtv {

// Seed used by default wherever sampling is offered; any fixed value works,
// reproducibility is what matters.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// The complete set M_{t*d} of monomial invariants of degree t*d: exponent
// vectors a with sum(a) = t*d and sum(alpha_i * a_i) = 0 (mod d), in
// canonical listing order (w_1 = x0^{td} side first).
struct InvariantBasis {
    GroupSpec spec;
    int t = 1;
    std::vector<ExponentVector> monomials;

    std::size_t mu() const { return monomials.size(); }
};

// Enumerate all exponent vectors a with sum(a) = total_degree and
// sum(alpha_i * a_i) = residue (mod d), optionally capped per-exponent
// (max_exp < 0 disables the cap), in canonical listing order. This is the
// lattice-point workhorse shared by the invariant basis, the canonical
// module, and the secondary-invariant blocks.
std::vector<ExponentVector> enumerate_congruent(const GroupSpec& spec, int total_degree,
                                                int max_exp = -1, int residue = 0);

// All monomials of the given degree in nvars variables (no congruence
// filter), canonical listing order.
std::vector<ExponentVector> all_monomials(std::size_t nvars, int degree);

// Complete invariant basis in degree t*d. Throws Error for t < 1 (the
// constant monomial is deliberately not represented as a basis).
InvariantBasis enumerate_invariants(const GroupSpec& spec, int t);

// Rank report for the multiplication map x L : R_{d-1} -> (R/I_d)_d used to
// witness failure of the weak Lefschetz property in degree d-1.
struct WLPReport {
    BigInt domain_dim;    // C(n+d-1, n)
    BigInt codomain_dim;  // C(n+d, n) - mu_d
    // One entry per linear form tried: (seed, exact rank). Seed 0 is the
    // structured form L = x0 + ... + xn, always included; entry s >= 1 uses
    // coefficients drawn from mt19937_64(seed + s) in [1, 1000].
    std::vector<std::pair<std::uint64_t, BigInt>> sampled_ranks;
    bool deficiency_witnessed = false;  // some rank < domain_dim
};

// Build the exact multiplication matrix for each sampled L and compute its
// rank by fraction-free elimination. num_samples counts the random forms
// tried in addition to the structured one.
WLPReport check_wlp_failure(const GroupSpec& spec, int num_samples,
                            std::uint64_t seed = kDefaultSeed);

struct GtClassification {
    BigInt mu_d;
    BigInt togliatti_bound;  // C(d+n-1, n-1)
    bool is_gt_system = false;
    std::optional<WLPReport> wlp_report;  // attached only on request
};

// mu_d vs. the Togliatti bound. With wlp_samples > 0 a WLP failure report is
// attached (wlp_samples random forms plus the structured one).
GtClassification classify_gt(const GroupSpec& spec, int wlp_samples = 0,
                             std::uint64_t seed = kDefaultSeed);

// Indices of a length-d subsequence with residue sum = 0 (mod d), guaranteed
// to exist whenever residues.size() >= 2d-1 (zero-sum lemma). Returns the
// lexicographically smallest valid index set, ascending. Throws NotFound if
// no solution exists (possible only below the guarantee threshold).
std::vector<int> egz_subsequence(const std::vector<int>& residues, int d);

// Factor a degree-(t*d) invariant into t degree-d invariants by repeatedly
// extracting zero-sum subsequences from the multiset of weights. Throws
// NotInvariant if m fails the degree or congruence precondition.
std::vector<ExponentVector> factor_invariant(const GroupSpec& spec, const ExponentVector& m,
                                             int t);

}  // namespace gtv
