#include "gtv/canonical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gtv/bigint.hpp"
#include "gtv/errors.hpp"
#include "gtv/invariants.hpp"

namespace gtv {

namespace {

// Full-support invariants of degree k*d, via the shift a_i = 1 + b_i: they
// correspond to unrestricted vectors b of degree k*d - (n+1) with weight
// congruent to -sum(alphas) mod d. Output-sensitive, no post-filtering.
std::vector<ExponentVector> full_support_block(const GroupSpec& spec, int k) {
    const int nv = spec.nvars();
    const int rest = k * spec.d() - nv;
    if (rest < 0) return {};

    long long alpha_sum = 0;
    for (int a : spec.alphas()) alpha_sum += a;
    const int residue = static_cast<int>(((-alpha_sum) % spec.d() + spec.d()) % spec.d());

    auto inner = enumerate_congruent(spec, rest, -1, residue);
    for (auto& m : inner) {
        std::vector<int> exps = m.exps();
        for (int& e : exps) e += 1;
        m = ExponentVector(std::move(exps));
    }
    return inner;  // the shift preserves lex order, so listing order survives
}

}  // namespace

CanonicalModule compute_canonical(const GroupSpec& spec) {
    CanonicalModule canonical{spec, full_support_block(spec, 1), full_support_block(spec, 2), {}};

    canonical.minimal_gens = canonical.c1;
    for (const auto& m : canonical.c2) {
        const bool generated = std::any_of(canonical.c1.begin(), canonical.c1.end(),
                                           [&](const ExponentVector& g) { return g.divides(m); });
        if (!generated) canonical.minimal_gens.push_back(m);
    }
    return canonical;
}

RingClassification classify_ring(const GroupSpec& spec) {
    const CanonicalModule canonical = compute_canonical(spec);
    RingClassification cls;
    // c1 is always a prefix of minimal_gens, so "concentrated in one degree"
    // reduces to size comparisons.
    const bool only_degree_d = canonical.minimal_gens.size() == canonical.c1.size();
    const bool only_degree_2d = canonical.c1.empty();
    cls.is_level = only_degree_d || only_degree_2d;
    cls.is_gorenstein = cls.is_level && canonical.minimal_gens.size() == 1;
    cls.regularity = canonical.c1.empty() ? spec.n() : spec.n() + 1;
    cls.is_level_gt = !canonical.c1.empty() && only_degree_d;
    return cls;
}

GenerationBoundReport verify_generation_bound(const GroupSpec& spec, int k_max,
                                              std::uint64_t work_cap) {
    if (k_max < 3) throw Error("verify_generation_bound: k_max must be >= 3");

    GenerationBoundReport report;
    report.k_max = k_max;

    std::vector<ExponentVector> previous = full_support_block(spec, 2);
    for (int k = 3; k <= k_max; ++k) {
        // Upper bound on the block size before enumerating it.
        const BigInt bound = binom(k * spec.d() - spec.nvars() + spec.n(), spec.n());
        if (bound > BigInt(work_cap)) {
            std::ostringstream msg;
            msg << "full-support block at k=" << k << " may hold up to " << bound
                << " monomials, cap is " << work_cap;
            const std::uint64_t estimated = (bound <= BigInt(~0ull))
                                                ? static_cast<std::uint64_t>(bound)
                                                : ~0ull;
            throw ResourceBound(msg.str(), estimated, work_cap);
        }

        std::vector<ExponentVector> block = full_support_block(spec, k);
        for (const auto& m : block) {
            ++report.checked;
            const bool covered = std::any_of(previous.begin(), previous.end(),
                                             [&](const ExponentVector& g) { return g.divides(m); });
            if (!covered) report.violations.push_back(m);
        }
        previous = std::move(block);
    }
    report.ok = report.violations.empty();
    return report;
}

ThreeDistinctRecord check_three_distinct(const GroupSpec& spec) {
    ThreeDistinctRecord record;
    record.c1_nonempty = !full_support_block(spec, 1).empty();
    const std::set<int> distinct(spec.alphas().begin(), spec.alphas().end());
    record.num_distinct_alphas = static_cast<int>(distinct.size());
    record.implication_holds = !record.c1_nonempty || record.num_distinct_alphas >= 3;
    return record;
}

}  // namespace gtv
