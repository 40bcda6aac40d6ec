#pragma once

// Polynomials in the cycle-count variables x_1, x_2, ... with exact rational
// coefficients, stored expanded in the monomial basis. Keys are exponent
// vectors with trailing zeros trimmed, so the zero exponent vector (constant
// term) is the empty vector.

#include "symchar/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symchar {

class CyclePolynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    CyclePolynomial() = default;
    static CyclePolynomial constant(Rational c);
    static CyclePolynomial variable(int varIndex);  // x_varIndex, varIndex >= 1
    static CyclePolynomial monomial(Exponents e, Rational c);

    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;

    void add(Exponents e, const Rational& c);  // accumulate, drop zeros

    CyclePolynomial& operator+=(const CyclePolynomial& o);
    CyclePolynomial& operator-=(const CyclePolynomial& o);
    friend CyclePolynomial operator+(CyclePolynomial a, const CyclePolynomial& b) {
        return a += b;
    }
    friend CyclePolynomial operator-(CyclePolynomial a, const CyclePolynomial& b) {
        return a -= b;
    }
    friend CyclePolynomial operator*(const CyclePolynomial& a, const CyclePolynomial& b);
    CyclePolynomial scaled(const Rational& c) const;

    friend bool operator==(const CyclePolynomial&, const CyclePolynomial&) = default;

    // value at x_k = m[k-1] (missing entries are 0)
    Rational evaluate(const std::vector<std::int64_t>& m) const;

    // terms sorted by total degree descending, then exponent vector
    // lexicographically descending: "1/6*x1^3 - x1^2 + x1*x2 + ..."
    std::string toString() const;

private:
    static void trim(Exponents& e);
    TermMap terms_;
};

// Falling factorial (x_v)_k = x_v (x_v - 1) ... (x_v - k + 1), expanded.
// k = 0 gives the constant 1.
CyclePolynomial falling_factorial_poly(int varIndex, int k);

}  // namespace symchar
