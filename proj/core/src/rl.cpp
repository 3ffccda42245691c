#include "gtv/rl.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "gtv/canonical.hpp"
#include "gtv/errors.hpp"
#include "gtv/invariants.hpp"

namespace gtv {

RlSpec build_rl(const GroupSpec& spec) {
    const CanonicalModule canonical = compute_canonical(spec);
    const bool level_gt =
        !canonical.c1.empty() && canonical.minimal_gens.size() == canonical.c1.size();
    if (!level_gt) {
        throw NotLevelGt(spec.str() +
                         ": canonical module is not generated by the full-support "
                         "degree-d invariants alone");
    }

    RlSpec rl{spec, static_cast<int>(canonical.eta_d()), 0, {}};
    rl.big_n = binom(spec.n() + spec.d(), spec.d()) - rl.eta - 1;

    std::unordered_set<ExponentVector, ExponentVectorHash> removed(canonical.c1.begin(),
                                                                   canonical.c1.end());
    for (auto& m : all_monomials(static_cast<std::size_t>(spec.nvars()), spec.d())) {
        if (!removed.count(m)) rl.complement.push_back(std::move(m));
    }
    if (BigInt(static_cast<std::uint64_t>(rl.complement.size())) != rl.big_n + 1) {
        throw Error("build_rl: complement size disagrees with N_d + 1 for " + spec.str());
    }

    // Embedding sufficient condition: every x_i^{d-1} x_j survives the
    // projection (none is full-support once n >= 2, but assert it directly).
    std::unordered_set<ExponentVector, ExponentVectorHash> kept(rl.complement.begin(),
                                                                rl.complement.end());
    for (int i = 0; i < spec.nvars(); ++i) {
        for (int j = 0; j < spec.nvars(); ++j) {
            if (i == j) continue;
            std::vector<int> exps(static_cast<std::size_t>(spec.nvars()), 0);
            exps[static_cast<std::size_t>(i)] = spec.d() - 1;
            exps[static_cast<std::size_t>(j)] += 1;
            if (!kept.count(ExponentVector(std::move(exps)))) {
                throw Error("build_rl: embedding condition failed for " + spec.str());
            }
        }
    }
    return rl;
}

BigInt h(const RlSpec& rl, int i, int k) {
    const int n = rl.spec.n();
    const int d = rl.spec.d();
    if (i < 0 || i > n) {
        throw Error("h: cohomology index must lie in [0, n]");
    }

    if (i == 0) {
        return (rl.big_n + 1) * binom(n + d - k, n) - (n + 1) * binom(n + 1 - k, n);
    }
    if (i < n - 1) return 0;

    if (i == n - 1) {
        if (n + 2 <= k && k <= d + n) {
            return BigInt(n + 1) * binom(k - 2, n);
        }
        if (k == d + n + 1) {
            // eta + n(d-1)/d * C(n+d-1, n), exact rationals with a hard
            // integrality assertion.
            const BigRat term = BigRat(static_cast<long long>(n) * (d - 1), d) *
                                BigRat(binom(n + d - 1, n));
            const BigRat value = BigRat(rl.eta) + term;
            if (denominator(value) != 1) {
                throw IntegralityViolation("h: rational term is not integral for " +
                                           rl.spec.str());
            }
            return numerator(value);
        }
        if (k == d + n + 2) {
            return BigInt(n + 1) * rl.eta;
        }
        return 0;
    }

    // i == n
    if (k >= d + n + 3) {
        return (rl.big_n + 1) * binom(k - d - 1, n) - (n + 1) * binom(k - 2, n);
    }
    return 0;
}

CohomologyTable table(const RlSpec& rl, int j_min, int j_max) {
    if (j_min > j_max) throw Error("table: j_min must be <= j_max");

    CohomologyTable t;
    t.n = rl.spec.n();
    t.j_min = j_min;
    t.j_max = j_max;
    t.k_min = -j_max;
    t.k_max = t.n - j_min;
    for (int i = 0; i <= t.n; ++i) {
        for (int j = j_min; j <= j_max; ++j) {
            t.entries[{i, i - j}] = h(rl, i, i - j);
        }
    }
    return t;
}

std::string render_table(const CohomologyTable& t) {
    const int rows = t.n + 1;
    const int cols = t.j_max - t.j_min + 1;

    std::vector<std::string> labels(static_cast<std::size_t>(rows));
    for (int i = 0; i <= t.n; ++i) {
        labels[static_cast<std::size_t>(t.n - i)] = std::to_string(i) + ":";
    }
    std::size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());

    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows),
                                                std::vector<std::string>(static_cast<std::size_t>(cols)));
    std::vector<std::string> headers(static_cast<std::size_t>(cols));
    std::vector<std::size_t> widths(static_cast<std::size_t>(cols), 0);
    for (int c = 0; c < cols; ++c) {
        const int j = t.j_min + c;
        headers[static_cast<std::size_t>(c)] = std::to_string(j);
        widths[static_cast<std::size_t>(c)] = headers[static_cast<std::size_t>(c)].size();
        for (int r = 0; r < rows; ++r) {
            const int i = t.n - r;
            const BigInt& value = t.entries.at({i, i - j});
            cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                (value == 0) ? "." : value.str();
            widths[static_cast<std::size_t>(c)] = std::max(
                widths[static_cast<std::size_t>(c)],
                cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].size());
        }
    }

    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t width) {
        for (std::size_t i = s.size(); i < width; ++i) out << ' ';
        out << s;
    };
    pad("", label_width);
    for (int c = 0; c < cols; ++c) {
        out << "  ";
        pad(headers[static_cast<std::size_t>(c)], widths[static_cast<std::size_t>(c)]);
    }
    out << '\n';
    for (int r = 0; r < rows; ++r) {
        pad(labels[static_cast<std::size_t>(r)], label_width);
        for (int c = 0; c < cols; ++c) {
            out << "  ";
            pad(cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                widths[static_cast<std::size_t>(c)]);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// chi(O(m)) on projective n-space: C(m+n, n) for m >= -n, else
// (-1)^n C(-m-1, n); the two pieces agree (both vanish) in between.
BigInt chi_line_bundle(int m, int n) {
    if (m >= -n) return binom(m + n, n);
    const BigInt value = binom(-m - 1, n);
    return (n % 2 == 0) ? value : -value;
}

}  // namespace

EulerReport euler_check(const RlSpec& rl, int k_min, int k_max) {
    const int n = rl.spec.n();
    const int d = rl.spec.d();

    EulerReport report;
    report.k_min = k_min;
    report.k_max = k_max;
    for (int k = k_min; k <= k_max; ++k) {
        BigInt lhs = 0;
        for (int i = 0; i <= n; ++i) {
            const BigInt value = h(rl, i, k);
            lhs += (i % 2 == 0) ? value : -value;
        }
        const BigInt rhs =
            (rl.big_n + 1) * chi_line_bundle(d - k, n) - (n + 1) * chi_line_bundle(1 - k, n);
        if (lhs != rhs) report.violations.push_back(k);
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace gtv
