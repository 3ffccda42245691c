#pragma once

#include <string>
#include <vector>

#include "gtv/bigint.hpp"
#include "gtv/group_spec.hpp"
#include "gtv/monomial.hpp"

namespace gtv {

// Secondary invariants of the invariant ring with respect to the homogeneous
// system of parameters {x0^d, ..., xn^d}: block t holds the invariants of
// degree t*d with every exponent < d. Their counts e_t are the Hilbert series
// numerator coefficients; blocks vanish for t > n.
struct HilbertData {
    GroupSpec spec;
    std::vector<BigInt> e;  // e[0..n], e[0] = 1
    // secondary_invariants[t-1] is block t, t = 1..n, listing order.
    std::vector<std::vector<ExponentVector>> secondary_invariants;
    BigInt degree_of_variety;  // sum of e, equals d^{n-1}

    const std::vector<BigInt>& numerator() const { return e; }
};

// Enumerate all blocks, fill e, and assert the structural identities
// (e_1 = mu_d - (n+1), sum e_j = d^{n-1}, block n+1 empty).
HilbertData compute_hilbert(const GroupSpec& spec);

// Coefficient of z^t in (e_0 + e_1 z + ... + e_n z^n) / (1-z)^{n+1}, i.e.
// sum_j e_j * C(t-j+n, n) = number of invariants of degree t*d. t >= 0.
BigInt hilbert_function(const HilbertData& data, int t);
BigInt hilbert_function(const GroupSpec& spec, int t);

// Plain-text rendering "HS(z) = (1 + 12z + 21z^2 + 2z^3) / (1-z)^4".
std::string render_series(const HilbertData& data);

}  // namespace gtv
