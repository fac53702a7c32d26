#include "motdens/ratfun.hpp"

#include "motdens/errors.hpp"

#include <algorithm>
#include <utility>

namespace motdens {

RationalFunctionL::RationalFunctionL() : num_(), den_(Rat(1)) {}

RationalFunctionL::RationalFunctionL(const Rat& constant) : num_(constant), den_(Rat(1)) {}

RationalFunctionL::RationalFunctionL(PolyQ num, PolyQ den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RationalFunctionL RationalFunctionL::var() {
    return l_power(1);
}

RationalFunctionL RationalFunctionL::l_power(int k) {
    if (k >= 0) return {PolyQ::monomial(Rat(1), k), PolyQ(Rat(1))};
    return {PolyQ(Rat(1)), PolyQ::monomial(Rat(1), -k)};
}

void RationalFunctionL::normalize() {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = PolyQ(Rat(1));
        return;
    }
    // Common powers of L are stripped first; they are the frequent case (sphere
    // volumes are Laurent polynomials) and make the general gcd cheap afterwards.
    const int t = std::min(num_.valuation(), den_.valuation());
    if (t > 0) {
        num_ = num_.shifted(-t);
        den_ = den_.shifted(-t);
    }
    if (num_.degree() > 0 && den_.degree() > 0) {
        const PolyQ g = PolyQ::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = PolyQ::div_exact(num_, g);
            den_ = PolyQ::div_exact(den_, g);
        }
    }
    const Rat lc = den_.leading();
    if (lc != 1) {
        const Rat inv = Rat(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunctionL RationalFunctionL::operator-() const {
    RationalFunctionL out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFunctionL RationalFunctionL::inverse() const {
    if (is_zero()) throw Error("inverse of the zero rational function");
    return {den_, num_};
}

RationalFunctionL operator+(const RationalFunctionL& a, const RationalFunctionL& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionL operator-(const RationalFunctionL& a, const RationalFunctionL& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionL operator*(const RationalFunctionL& a, const RationalFunctionL& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunctionL operator/(const RationalFunctionL& a, const RationalFunctionL& b) {
    if (b.is_zero()) throw Error("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::map<int, Rat> RationalFunctionL::expand_at_infinity(int D) const {
    std::map<int, Rat> out;
    if (is_zero() || D < 0) return out;
    const int dn = num_.degree();
    const int dd = den_.degree();
    const int top = dn - dd;  // leading exponent of the expansion
    const int terms = top + D + 1;
    if (terms <= 0) return out;
    // Substitute t = 1/L: with nhat_i = num[dn - i] and dhat_i = den[dd - i] the
    // expansion coefficients are the power series of nhat(t)/dhat(t). The stored
    // denominator is monic, so dhat_0 = 1 and the recurrence divides by nothing.
    std::vector<Rat> c(static_cast<std::size_t>(terms), Rat(0));
    for (int i = 0; i < terms; ++i) {
        Rat v = (dn - i >= 0) ? num_.coeff(dn - i) : Rat(0);
        const int jmax = std::min(i, dd);
        for (int j = 1; j <= jmax; ++j) {
            const Rat dj = den_.coeff(dd - j);
            if (dj != 0) v -= dj * c[static_cast<std::size_t>(i - j)];
        }
        c[static_cast<std::size_t>(i)] = v;
        if (v != 0) out.emplace(top - i, v);
    }
    return out;
}

}  // namespace motdens
