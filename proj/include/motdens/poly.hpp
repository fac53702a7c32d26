#pragma once

#include "motdens/rational.hpp"

#include <vector>

namespace motdens {

// Dense univariate polynomial over Q (the variable is always L). Coefficients are
// stored in ascending order of degree and kept normalized: the zero polynomial
// stores nothing and a nonzero polynomial never stores a zero leading coefficient.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(const Rat& constant);
    explicit PolyQ(std::vector<Rat> coeffs);
    static PolyQ monomial(const Rat& coeff, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Zero outside the stored range.
    Rat coeff(int i) const;
    // Requires a nonzero polynomial.
    const Rat& leading() const { return coeffs_.back(); }
    // Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    int valuation() const;

    PolyQ operator-() const;
    PolyQ scaled(const Rat& s) const;
    // Multiplication by L^delta; a negative delta requires valuation() >= -delta.
    PolyQ shifted(int delta) const;
    PolyQ monic() const;

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

    // Euclidean division by a nonzero divisor: a = quot * b + rem, deg rem < deg b.
    static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& quot, PolyQ& rem);
    // Exact division; throws if b does not divide a.
    static PolyQ div_exact(const PolyQ& a, const PolyQ& b);
    // Monic gcd; zero only when both inputs are zero.
    static PolyQ gcd(PolyQ a, PolyQ b);
    static PolyQ pow(const PolyQ& base, int exponent);

private:
    void trim();
    std::vector<Rat> coeffs_;
};

}  // namespace motdens
