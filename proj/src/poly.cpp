#include "motdens/poly.hpp"

#include "motdens/errors.hpp"

#include <algorithm>
#include <utility>

namespace motdens {

PolyQ::PolyQ(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

PolyQ::PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

PolyQ PolyQ::monomial(const Rat& coeff, int degree) {
    PolyQ p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
        p.coeffs_.back() = coeff;
    }
    return p;
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool PolyQ::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rat PolyQ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

int PolyQ::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return 0;
}

PolyQ PolyQ::operator-() const {
    PolyQ out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

PolyQ PolyQ::scaled(const Rat& s) const {
    if (s == 0) return {};
    PolyQ out(*this);
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

PolyQ PolyQ::shifted(int delta) const {
    if (is_zero() || delta == 0) return *this;
    PolyQ out;
    if (delta > 0) {
        out.coeffs_.assign(static_cast<std::size_t>(delta), Rat(0));
        out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    } else {
        if (valuation() < -delta) throw Error("shift below valuation");
        out.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(-delta), coeffs_.end());
    }
    return out;
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw Error("monic() of the zero polynomial");
    return scaled(Rat(1) / leading());
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    PolyQ out;
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    out.trim();
    return out;
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    PolyQ out;
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    out.trim();
    return out;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    PolyQ out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

void PolyQ::divmod(const PolyQ& a, const PolyQ& b, PolyQ& quot, PolyQ& rem) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    const int db = b.degree();
    if (a.degree() < db) {
        quot = PolyQ();
        rem = a;
        return;
    }
    std::vector<Rat> r = a.coeffs_;
    const Rat& lb = b.leading();
    const int dq = a.degree() - db;
    std::vector<Rat> q(static_cast<std::size_t>(dq) + 1, Rat(0));
    for (int i = dq; i >= 0; --i) {
        Rat c = r[static_cast<std::size_t>(i + db)] / lb;
        if (c == 0) continue;
        q[static_cast<std::size_t>(i)] = c;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
    }
    quot = PolyQ(std::move(q));
    rem = PolyQ(std::vector<Rat>(r.begin(), r.begin() + db));
}

PolyQ PolyQ::div_exact(const PolyQ& a, const PolyQ& b) {
    PolyQ q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

PolyQ PolyQ::pow(const PolyQ& base, int exponent) {
    if (exponent < 0) throw Error("negative polynomial exponent");
    PolyQ out(Rat(1));
    PolyQ acc = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) out = out * acc;
        e >>= 1;
        if (e > 0) acc = acc * acc;
    }
    return out;
}

}  // namespace motdens
