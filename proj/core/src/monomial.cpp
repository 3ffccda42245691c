#include "gtv/monomial.hpp"

#include <numeric>
#include <sstream>

#include "gtv/errors.hpp"

namespace gtv {

ExponentVector::ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw Error("ExponentVector: negative exponent");
    }
}

ExponentVector ExponentVector::zeros(std::size_t nvars) {
    return ExponentVector(std::vector<int>(nvars, 0));
}

int ExponentVector::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool ExponentVector::full_support() const {
    for (int e : exps_) {
        if (e == 0) return false;
    }
    return !exps_.empty();
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (nvars() != other.nvars()) {
        throw LengthMismatch("divides: exponent vectors of different lengths");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

ExponentVector ExponentVector::operator*(const ExponentVector& rhs) const {
    if (nvars() != rhs.nvars()) {
        throw LengthMismatch("product: exponent vectors of different lengths");
    }
    std::vector<int> out(exps_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.exps_[i];
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::operator/(const ExponentVector& rhs) const {
    if (!rhs.divides(*this)) {
        throw Error("quotient: divisor does not divide dividend");
    }
    std::vector<int> out(exps_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.exps_[i];
    return ExponentVector(std::move(out));
}

std::string ExponentVector::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) out << '*';
        out << 'x' << i;
        if (exps_[i] > 1) out << '^' << exps_[i];
        first = false;
    }
    if (first) return "1";
    return out.str();
}

std::strong_ordering lex_compare(const ExponentVector& u, const ExponentVector& v) {
    if (u.nvars() != v.nvars()) {
        throw LengthMismatch("lex_compare: exponent vectors of different lengths");
    }
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        if (u[i] != v[i]) return u[i] <=> v[i];
    }
    return std::strong_ordering::equal;
}

bool listing_less(const ExponentVector& u, const ExponentVector& v) {
    return lex_compare(u, v) > 0;
}

ExponentVector parse_monomial(const std::string& text, std::size_t nvars) {
    std::vector<int> exps(nvars, 0);
    if (text == "1") return ExponentVector(std::move(exps));

    std::istringstream in(text);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        if (factor.empty() || factor[0] != 'x') {
            throw Error("parse_monomial: malformed factor '" + factor + "'");
        }
        std::size_t caret = factor.find('^');
        std::size_t index = 0;
        int power = 1;
        try {
            index = std::stoul(factor.substr(1, caret - 1));
            if (caret != std::string::npos) power = std::stoi(factor.substr(caret + 1));
        } catch (const std::exception&) {
            throw Error("parse_monomial: malformed factor '" + factor + "'");
        }
        if (index >= nvars) throw Error("parse_monomial: variable index out of range");
        if (power < 1) throw Error("parse_monomial: nonpositive power");
        exps[index] += power;
    }
    return ExponentVector(std::move(exps));
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& m) const {
    // FNV-1a over the exponents; collisions only cost hash-bucket time.
    std::size_t hash = 14695981039346656037ull;
    for (int e : m.exps()) {
        hash ^= static_cast<std::size_t>(e);
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace gtv
