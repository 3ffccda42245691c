#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "gtv/group_spec.hpp"
#include "gtv/monomial.hpp"

namespace gtvtest {

inline gtv::GroupSpec spec(long long d, std::initializer_list<long long> alphas) {
    return gtv::normalize_spec(d, std::vector<long long>(alphas));
}

// Parse "x0^2*x1^2*x2"-style of monomials into exponent vectors.
inline std::vector<gtv::ExponentVector> monomials(std::initializer_list<const char*> texts,
                                                  std::size_t nvars) {
    std::vector<gtv::ExponentVector> out;
    for (const char* text : texts) out.push_back(gtv::parse_monomial(text, nvars));
    return out;
}

inline std::vector<gtv::ExponentVector> sorted_by_listing(std::vector<gtv::ExponentVector> v) {
    std::sort(v.begin(), v.end(), gtv::listing_less);
    return v;
}

// Order-insensitive set equality.
inline bool same_set(const std::vector<gtv::ExponentVector>& a,
                     const std::vector<gtv::ExponentVector>& b) {
    return sorted_by_listing(a) == sorted_by_listing(b);
}

inline std::vector<std::string> render_all(const std::vector<gtv::ExponentVector>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& m : v) out.push_back(m.str());
    return out;
}

}  // namespace gtvtest
