#pragma once

#include <string>
#include <vector>

namespace gtv {

// A validated cyclic diagonal group specification (d; alpha_0, ..., alpha_n):
// the order-d cyclic group generated by diag(e^{alpha_0}, ..., e^{alpha_n})
// with e a primitive d-th root of unity. Instances can only be produced by
// normalize_spec, so every GroupSpec in flight satisfies:
//   - alphas sorted ascending in [0, d)
//   - gcd(d, alpha_0, ..., alpha_n) = 1
//   - at least two distinct alpha values
//   - n >= 2 and d > n
class GroupSpec {
public:
    int n() const { return static_cast<int>(alphas_.size()) - 1; }
    int d() const { return d_; }
    int nvars() const { return static_cast<int>(alphas_.size()); }
    const std::vector<int>& alphas() const { return alphas_; }

    // Human-readable form "(6; 0,1,2,3)".
    std::string str() const;

    bool operator==(const GroupSpec&) const = default;

private:
    GroupSpec(int d, std::vector<int> alphas) : d_(d), alphas_(std::move(alphas)) {}
    friend GroupSpec normalize_spec(long long raw_d, const std::vector<long long>& raw_alphas);

    int d_ = 0;
    std::vector<int> alphas_;
};

// Reduce raw residues mod d, sort ascending, and validate. Throws
// DimensionTooSmall (n < 2, d < 2, or d <= n), DegenerateSpec (all residues
// equal), or GcdViolation (gcd(d, alphas...) != 1). Idempotent: feeding a
// normalized spec back in reproduces it.
GroupSpec normalize_spec(long long raw_d, const std::vector<long long>& raw_alphas);

}  // namespace gtv
