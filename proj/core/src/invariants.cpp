#include "gtv/invariants.hpp"

#include <algorithm>

#include "gtv/errors.hpp"

namespace gtv {

namespace {

// feasible(p, r, c): can positions p..n absorb exactly degree r with weight
// congruent to c mod d, honoring the exponent cap? Computed once per call;
// the enumeration then only walks branches that lead to solutions.
class SuffixFeasibility {
public:
    SuffixFeasibility(const std::vector<int>& alphas, int d, int total, int cap)
        : d_(d), total_(total), nv_(static_cast<int>(alphas.size())),
          table_((nv_ + 1) * (total + 1) * d, false) {
        at(nv_, 0, 0) = true;
        for (int p = nv_ - 1; p >= 0; --p) {
            for (int r = 0; r <= total_; ++r) {
                for (int c = 0; c < d_; ++c) {
                    const int emax = std::min(cap, r);
                    for (int e = 0; e <= emax && !at(p, r, c); ++e) {
                        const long long w = static_cast<long long>(alphas[p]) * e;
                        const int child = static_cast<int>((((c - w) % d_) + d_) % d_);
                        if (at(p + 1, r - e, child)) at(p, r, c) = true;
                    }
                }
            }
        }
    }

    bool feasible(int p, int r, int c) const {
        return r >= 0 && table_[(static_cast<std::size_t>(p) * (total_ + 1) + r) * d_ + c];
    }

private:
    std::vector<char>::reference at(int p, int r, int c) {
        return table_[(static_cast<std::size_t>(p) * (total_ + 1) + r) * d_ + c];
    }

    int d_, total_, nv_;
    std::vector<char> table_;
};

}  // namespace

std::vector<ExponentVector> enumerate_congruent(const GroupSpec& spec, int total_degree,
                                                int max_exp, int residue) {
    std::vector<ExponentVector> out;
    if (total_degree < 0) return out;

    const int nv = spec.nvars();
    const int d = spec.d();
    const auto& alphas = spec.alphas();
    const int cap = (max_exp < 0) ? total_degree : std::min(max_exp, total_degree);
    const int target = ((residue % d) + d) % d;

    if (static_cast<long long>(cap) * nv < total_degree) return out;

    SuffixFeasibility feas(alphas, d, total_degree, cap);
    if (!feas.feasible(0, total_degree, target)) return out;

    std::vector<int> current(nv, 0);
    // Exponents descend at each position, so the output arrives already in
    // canonical listing order (descending lex).
    auto walk = [&](auto&& self, int p, int remaining, int needed) -> void {
        if (p == nv) {
            out.emplace_back(current);
            return;
        }
        for (int e = std::min(cap, remaining); e >= 0; --e) {
            const long long w = static_cast<long long>(alphas[p]) * e;
            const int child = static_cast<int>((((needed - w) % d) + d) % d);
            if (!feas.feasible(p + 1, remaining - e, child)) continue;
            current[p] = e;
            self(self, p + 1, remaining - e, child);
        }
        current[p] = 0;
    };
    walk(walk, 0, total_degree, target);
    return out;
}

std::vector<ExponentVector> all_monomials(std::size_t nvars, int degree) {
    std::vector<ExponentVector> out;
    if (degree < 0 || nvars == 0) return out;

    std::vector<int> current(nvars, 0);
    auto walk = [&](auto&& self, std::size_t p, int remaining) -> void {
        if (p + 1 == nvars) {
            current[p] = remaining;
            out.emplace_back(current);
            current[p] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[p] = e;
            self(self, p + 1, remaining - e);
        }
        current[p] = 0;
    };
    walk(walk, 0, degree);
    return out;
}

InvariantBasis enumerate_invariants(const GroupSpec& spec, int t) {
    if (t < 1) {
        throw Error("enumerate_invariants: t must be >= 1 (got " + std::to_string(t) + ")");
    }
    InvariantBasis basis{spec, t, enumerate_congruent(spec, t * spec.d())};
    return basis;
}

GtClassification classify_gt(const GroupSpec& spec, int wlp_samples, std::uint64_t seed) {
    GtClassification cls;
    cls.mu_d = static_cast<std::uint64_t>(enumerate_invariants(spec, 1).mu());
    cls.togliatti_bound = binom(spec.d() + spec.n() - 1, spec.n() - 1);
    cls.is_gt_system = cls.mu_d <= cls.togliatti_bound;
    if (wlp_samples > 0) {
        cls.wlp_report = check_wlp_failure(spec, wlp_samples, seed);
    }
    return cls;
}

}  // namespace gtv
