#include "gtv/group_spec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gtv/errors.hpp"

namespace gtv {

std::string GroupSpec::str() const {
    std::ostringstream out;
    out << '(' << d_ << "; ";
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        if (i) out << ',';
        out << alphas_[i];
    }
    out << ')';
    return out.str();
}

GroupSpec normalize_spec(long long raw_d, const std::vector<long long>& raw_alphas) {
    const int n = static_cast<int>(raw_alphas.size()) - 1;
    if (raw_d < 2 || n < 2 || raw_d <= n) {
        std::ostringstream msg;
        msg << "spec (d=" << raw_d << ", " << raw_alphas.size()
            << " residues): need n >= 2 and d > n";
        throw DimensionTooSmall(msg.str());
    }
    const int d = static_cast<int>(raw_d);

    std::vector<int> alphas;
    alphas.reserve(raw_alphas.size());
    for (long long a : raw_alphas) {
        alphas.push_back(static_cast<int>(((a % d) + d) % d));
    }
    std::sort(alphas.begin(), alphas.end());

    if (alphas.front() == alphas.back()) {
        throw DegenerateSpec("spec " + std::to_string(d) +
                             ": all residues equal, the action is a scalar twist");
    }

    int g = d;
    for (int a : alphas) g = std::gcd(g, a);
    if (g != 1) {
        std::ostringstream msg;
        msg << "spec (" << d << "; ";
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            if (i) msg << ',';
            msg << alphas[i];
        }
        msg << "): gcd with d is " << g << ", not 1";
        throw GcdViolation(msg.str());
    }

    return GroupSpec(d, std::move(alphas));
}

}  // namespace gtv
