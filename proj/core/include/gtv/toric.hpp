#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gtv/bigint.hpp"
#include "gtv/group_spec.hpp"
#include "gtv/invariants.hpp"
#include "gtv/monomial.hpp"

namespace gtv {

// Sorted multiset of 0-based generator indices into the canonical listing
// w_1..w_mu of M_d (serialization adds 1 to match the w-numbering).
using IndexMultiset = std::vector<int>;

// A degree-k binomial relation w_{i_1}...w_{i_k} - w_{j_1}...w_{j_k} whose two
// monomial products agree ("suitable"). Trivial when plus and minus share an
// index. Canonical orientation: plus lexicographically precedes minus.
struct SuitableBinomial {
    IndexMultiset plus;
    IndexMultiset minus;
    int k = 0;

    bool operator==(const SuitableBinomial&) const = default;
};

// All size-k index multisets sharing one product exponent vector (degree k*d).
struct Fiber {
    ExponentVector key;
    std::vector<IndexMultiset> members;  // pairwise distinct, ascending lex
};

// The trivial-move graph on a fiber: members are adjacent when they share at
// least one generator index. Connectivity decides whether suitable binomials
// in this fiber reduce to lower degree.
struct FiberGraph {
    Fiber fiber;
    std::vector<std::pair<int, int>> adjacency;  // member-index pairs (u < v)
    std::vector<std::vector<int>> components;    // partition, each ascending,
                                                 // ordered by smallest member
};

struct ToricOptions {
    // Maximum number of size-k multisets a single call may touch,
    // C(mu_d+k-1, k); exceeding it raises ResourceBound.
    std::uint64_t multiset_cap = 100'000'000;
    int threads = 1;
};

// Group all C(mu_d+k-1, k) index multisets by product. Fibers come back in
// canonical listing order of their keys; members ascending. Requires k >= 2.
std::vector<Fiber> enumerate_fibers(const GroupSpec& spec, int k,
                                    const ToricOptions& options = {});

// Build the trivial-move graph and its connected components.
FiberGraph analyze_fiber(const Fiber& fiber);

// True iff b.plus and b.minus lie in the same component of the fiber graph of
// their common product, i.e. the binomial is generated one degree lower.
bool has_sequence(const GroupSpec& spec, const SuitableBinomial& b);

// Number of degree-k minimal generators of the toric ideal: for k=2 the
// relations beyond one spanning tree per fiber (fiber graphs are edgeless),
// for k=3 one per extra fiber-graph component. Requires k in {2, 3}.
BigInt minimal_generator_count(const GroupSpec& spec, int k,
                               const ToricOptions& options = {});

// Exhaustive connectivity certificate that no new generators appear in
// degrees 4..k_max, i.e. the ideal is generated by quadrics and cubics.
struct DegreeBoundCertification {
    int k_min = 4;
    int k_max = 4;
    std::uint64_t fibers_checked = 0;
    std::vector<std::pair<int, ExponentVector>> disconnected;  // (k, fiber key)
    bool certified = false;
};

// Requires k_max >= 4.
DegreeBoundCertification certify_degree_bound(const GroupSpec& spec, int k_max,
                                              const ToricOptions& options = {});

// Explicit minimal generators: per degree-2 fiber, member i vs member 0 for
// each i >= 1; per degree-3 fiber, one binomial joining each extra component
// to component 0 (lex-least member representatives). Counts match
// minimal_generator_count.
struct GeneratorSets {
    std::vector<SuitableBinomial> quadrics;
    std::vector<SuitableBinomial> cubics;
};

GeneratorSets generators(const GroupSpec& spec, const ToricOptions& options = {});

}  // namespace gtv
