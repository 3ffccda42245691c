#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gtv/bigint.hpp"
#include "gtv/errors.hpp"
#include "gtv/invariants.hpp"

namespace gtv {

namespace {

// Exact rank by Bareiss fraction-free elimination: all intermediate values
// stay integral, divisions are exact, no rational arithmetic needed.
long long bareiss_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();

    long long rank = 0;
    BigInt prev_pivot = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = pivot_row;
        while (found < rows && m[found][col] == 0) ++found;
        if (found == rows) continue;
        std::swap(m[pivot_row], m[found]);

        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                m[r][c] = (m[pivot_row][col] * m[r][c] - m[r][col] * m[pivot_row][c]) / prev_pivot;
            }
            m[r][col] = 0;
        }
        prev_pivot = m[pivot_row][col];
        ++pivot_row;
        ++rank;
    }
    return rank;
}

// Multiplication by L = sum coeffs[i] * x_i from the degree-(d-1) monomial
// basis to the degree-d monomials outside M_d (the quotient-ring coordinates).
std::vector<std::vector<BigInt>> multiplication_matrix(const GroupSpec& spec,
                                                       const std::vector<long long>& coeffs) {
    const int d = spec.d();
    const std::size_t nv = static_cast<std::size_t>(spec.nvars());

    const auto domain = all_monomials(nv, d - 1);
    const auto target = all_monomials(nv, d);
    const auto basis = enumerate_invariants(spec, 1);
    std::unordered_set<ExponentVector, ExponentVectorHash> killed(basis.monomials.begin(),
                                                                  basis.monomials.end());

    std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> row_of;
    std::size_t next_row = 0;
    for (const auto& mono : target) {
        if (!killed.count(mono)) row_of.emplace(mono, next_row++);
    }

    std::vector<std::vector<BigInt>> matrix(next_row, std::vector<BigInt>(domain.size(), 0));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        for (std::size_t i = 0; i < nv; ++i) {
            std::vector<int> shifted = domain[col].exps();
            shifted[i] += 1;
            auto it = row_of.find(ExponentVector(std::move(shifted)));
            if (it != row_of.end()) matrix[it->second][col] += coeffs[i];
        }
    }
    return matrix;
}

}  // namespace

WLPReport check_wlp_failure(const GroupSpec& spec, int num_samples, std::uint64_t seed) {
    const int n = spec.n();
    const int d = spec.d();
    const std::size_t nv = static_cast<std::size_t>(spec.nvars());

    WLPReport report;
    report.domain_dim = binom(n + d - 1, n);
    report.codomain_dim = binom(n + d, n) - BigInt(enumerate_invariants(spec, 1).mu());

    // Seed 0: the structured form L = x0 + ... + xn. Entries s >= 1: random
    // coefficients in [1, 1000] from mt19937_64(seed + s), so each sample is
    // independently reproducible from its recorded seed.
    std::vector<std::pair<std::uint64_t, std::vector<long long>>> forms;
    forms.emplace_back(0, std::vector<long long>(nv, 1));
    for (int s = 1; s <= num_samples; ++s) {
        const std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(s);
        std::mt19937_64 gen(sample_seed);
        std::vector<long long> coeffs(nv);
        for (auto& c : coeffs) c = 1 + static_cast<long long>(gen() % 1000);
        forms.emplace_back(sample_seed, std::move(coeffs));
    }

    for (auto& [sample_seed, coeffs] : forms) {
        const long long rank = bareiss_rank(multiplication_matrix(spec, coeffs));
        report.sampled_ranks.emplace_back(sample_seed, BigInt(rank));
        if (BigInt(rank) < report.domain_dim) report.deficiency_witnessed = true;
    }
    return report;
}

}  // namespace gtv
