#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gtv/errors.hpp"
#include "gtv/invariants.hpp"

namespace gtv {

namespace {

// feasible(i, j, c): can exactly j elements be chosen from residues[i..] with
// sum congruent to c mod d?
class SubsequenceFeasibility {
public:
    SubsequenceFeasibility(const std::vector<int>& residues, int d)
        : d_(d), len_(static_cast<int>(residues.size())),
          table_((len_ + 1) * (d + 1) * d, false) {
        at(len_, 0, 0) = true;
        for (int i = len_ - 1; i >= 0; --i) {
            for (int j = 0; j <= d_; ++j) {
                for (int c = 0; c < d_; ++c) {
                    bool ok = at(i + 1, j, c);  // skip element i
                    if (!ok && j > 0) {         // take element i
                        ok = at(i + 1, j - 1, (c - residues[i] + d_) % d_);
                    }
                    at(i, j, c) = ok;
                }
            }
        }
    }

    bool feasible(int i, int j, int c) const {
        return table_[(static_cast<std::size_t>(i) * (d_ + 1) + j) * d_ + c];
    }

private:
    std::vector<char>::reference at(int i, int j, int c) {
        return table_[(static_cast<std::size_t>(i) * (d_ + 1) + j) * d_ + c];
    }

    int d_, len_;
    std::vector<char> table_;
};

}  // namespace

std::vector<int> egz_subsequence(const std::vector<int>& residues, int d) {
    if (d < 1) throw Error("egz_subsequence: d must be >= 1");

    std::vector<int> reduced;
    reduced.reserve(residues.size());
    for (int r : residues) reduced.push_back(((r % d) + d) % d);

    SubsequenceFeasibility feas(reduced, d);
    if (!feas.feasible(0, d, 0)) {
        throw NotFound("egz_subsequence: no zero-sum subsequence of length " + std::to_string(d) +
                       " in a sequence of length " + std::to_string(residues.size()));
    }

    // Greedy front-to-back: taking the earliest feasible index at each step
    // yields the lexicographically smallest valid index set.
    std::vector<int> indices;
    indices.reserve(d);
    int needed = d;
    int residue = 0;  // residue still to be absorbed by the remaining picks
    for (int i = 0; i < static_cast<int>(reduced.size()) && needed > 0; ++i) {
        const int after_take = (residue - reduced[i] % d + d) % d;
        if (feas.feasible(i + 1, needed - 1, after_take)) {
            indices.push_back(i);
            --needed;
            residue = after_take;
        }
    }
    return indices;
}

std::vector<ExponentVector> factor_invariant(const GroupSpec& spec, const ExponentVector& m,
                                             int t) {
    const int d = spec.d();
    const auto& alphas = spec.alphas();

    if (t < 1) throw NotInvariant("factor_invariant: t must be >= 1");
    if (m.nvars() != static_cast<std::size_t>(spec.nvars())) {
        throw NotInvariant("factor_invariant: wrong number of variables for spec " + spec.str());
    }
    if (m.degree() != t * d) {
        throw NotInvariant("factor_invariant: " + m.str() + " does not have degree " +
                           std::to_string(t) + "*" + std::to_string(d));
    }
    long long weight = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) weight += static_cast<long long>(alphas[i]) * m[i];
    if (weight % d != 0) {
        throw NotInvariant("factor_invariant: " + m.str() + " violates the weight congruence");
    }

    std::vector<ExponentVector> factors;
    factors.reserve(t);
    ExponentVector rest = m;
    // Peel off one degree-d invariant at a time; the remaining degree stays a
    // multiple of d and at least 2d-1 < remaining whenever more than one block
    // is left, so the zero-sum guarantee applies at every step.
    for (int block = t; block > 1; --block) {
        std::vector<int> residues;   // alpha_i repeated rest[i] times
        std::vector<int> variables;  // which variable each entry came from
        residues.reserve(static_cast<std::size_t>(block) * d);
        for (std::size_t i = 0; i < rest.nvars(); ++i) {
            for (int c = 0; c < rest[static_cast<std::size_t>(i)]; ++c) {
                residues.push_back(alphas[i]);
                variables.push_back(static_cast<int>(i));
            }
        }
        std::vector<int> picked = egz_subsequence(residues, d);
        std::vector<int> exps(rest.nvars(), 0);
        for (int idx : picked) exps[variables[idx]] += 1;
        ExponentVector factor{std::move(exps)};
        rest = rest / factor;
        factors.push_back(std::move(factor));
    }
    factors.push_back(rest);
    return factors;
}

}  // namespace gtv
