#include "gtv/hilbert.hpp"

#include <sstream>

#include "gtv/errors.hpp"
#include "gtv/invariants.hpp"

namespace gtv {

HilbertData compute_hilbert(const GroupSpec& spec) {
    const int n = spec.n();
    const int d = spec.d();

    HilbertData data{spec, {}, {}, 0};
    data.e.assign(static_cast<std::size_t>(n) + 1, 0);
    data.e[0] = 1;
    data.secondary_invariants.reserve(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
        auto block = enumerate_congruent(spec, t * d, d - 1);
        data.e[static_cast<std::size_t>(t)] = static_cast<std::uint64_t>(block.size());
        data.secondary_invariants.push_back(std::move(block));
    }

    for (const BigInt& e : data.e) data.degree_of_variety += e;

    // Structural identities; failures would mean the enumeration is broken.
    BigInt expected_total = 1;
    for (int i = 1; i < n; ++i) expected_total *= d;
    if (data.degree_of_variety != expected_total) {
        throw Error("compute_hilbert: secondary-invariant total " +
                    data.degree_of_variety.str() + " != d^(n-1) for " + spec.str());
    }
    const BigInt mu(static_cast<std::uint64_t>(enumerate_invariants(spec, 1).mu()));
    if (data.e[1] != mu - (n + 1)) {
        throw Error("compute_hilbert: e_1 != mu_d - (n+1) for " + spec.str());
    }
    if (!enumerate_congruent(spec, (n + 1) * d, d - 1).empty()) {
        throw Error("compute_hilbert: degree block t=n+1 is nonempty for " + spec.str());
    }
    return data;
}

BigInt hilbert_function(const HilbertData& data, int t) {
    if (t < 0) throw Error("hilbert_function: t must be >= 0");
    const int n = data.spec.n();
    BigInt value = 0;
    for (int j = 0; j <= n; ++j) {
        value += data.e[static_cast<std::size_t>(j)] * binom(t - j + n, n);
    }
    return value;
}

BigInt hilbert_function(const GroupSpec& spec, int t) {
    return hilbert_function(compute_hilbert(spec), t);
}

std::string render_series(const HilbertData& data) {
    std::ostringstream out;
    out << "HS(z) = (1";
    for (std::size_t j = 1; j < data.e.size(); ++j) {
        if (data.e[j] == 0) continue;
        out << " + ";
        if (data.e[j] != 1) out << data.e[j].str();
        out << 'z';
        if (j > 1) out << '^' << j;
    }
    out << ") / (1-z)^" << data.e.size();
    return out.str();
}

}  // namespace gtv
