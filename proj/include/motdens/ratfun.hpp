#pragma once

#include "motdens/poly.hpp"

#include <map>

namespace motdens {

// Reduced ratio of polynomials in L with exact rational coefficients. Invariants are
// re-established after every operation: gcd(num, den) = 1, the denominator is monic,
// and zero is uniquely represented as 0/1.
class RationalFunctionL {
public:
    RationalFunctionL();  // zero
    RationalFunctionL(const Rat& constant);
    RationalFunctionL(PolyQ num, PolyQ den);

    static RationalFunctionL var();          // L
    static RationalFunctionL l_power(int k); // L^k for any integer k

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }

    // deg num - deg den; meaningful only for nonzero values.
    int degree_diff() const { return num_.degree() - den_.degree(); }

    RationalFunctionL operator-() const;
    RationalFunctionL inverse() const;

    friend RationalFunctionL operator+(const RationalFunctionL& a, const RationalFunctionL& b);
    friend RationalFunctionL operator-(const RationalFunctionL& a, const RationalFunctionL& b);
    friend RationalFunctionL operator*(const RationalFunctionL& a, const RationalFunctionL& b);
    friend RationalFunctionL operator/(const RationalFunctionL& a, const RationalFunctionL& b);
    friend bool operator==(const RationalFunctionL& a, const RationalFunctionL& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Coefficients of the expansion at L = infinity, for exponents >= -D only
    // (exact long division in descending powers; nonzero entries only).
    std::map<int, Rat> expand_at_infinity(int D) const;

private:
    void normalize();
    PolyQ num_;
    PolyQ den_;
};

}  // namespace motdens
