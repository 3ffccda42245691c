#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gtv {

// A monomial x0^{a0} * ... * xn^{an}, stored as its exponent vector.
// Immutable value type; all arithmetic returns fresh vectors.
class ExponentVector {
public:
    ExponentVector() = default;

    // Throws Error if any exponent is negative.
    explicit ExponentVector(std::vector<int> exps);

    static ExponentVector zeros(std::size_t nvars);

    std::size_t nvars() const { return exps_.size(); }
    int degree() const;
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exps() const { return exps_; }

    // True when every exponent is >= 1.
    bool full_support() const;

    // True when this divides other componentwise (this[i] <= other[i]).
    bool divides(const ExponentVector& other) const;

    // Monomial product / quotient = componentwise sum / difference.
    // Quotient throws Error unless rhs divides *this.
    ExponentVector operator*(const ExponentVector& rhs) const;
    ExponentVector operator/(const ExponentVector& rhs) const;

    // Text form "x0^3*x1*x2*x3": caret powers, '*' separators, power 1
    // omitted, zero exponents skipped; the constant monomial prints as "1".
    std::string str() const;

    bool operator==(const ExponentVector&) const = default;

private:
    std::vector<int> exps_;
};

// Lexicographic comparison on exponent tuples. Throws LengthMismatch when the
// vectors have different lengths.
std::strong_ordering lex_compare(const ExponentVector& u, const ExponentVector& v);

// The canonical listing order used everywhere monomial lists are produced,
// printed, or indexed as w_1..w_mu: descending lexicographic, so x0^d comes
// first and xn^d last.
bool listing_less(const ExponentVector& u, const ExponentVector& v);

// Parse the text form produced by str(), e.g. "x0^3*x1*x2*x3" (or "1"), into
// an exponent vector with the given number of variables. Throws Error on
// malformed input or an index >= nvars.
ExponentVector parse_monomial(const std::string& text, std::size_t nvars);

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector& m) const;
};

}  // namespace gtv
