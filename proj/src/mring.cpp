#include "motdens/mring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace motdens {

MotivicClass::MotivicClass(const Rat& constant) {
    if (constant != 0) terms_.emplace(ClassSymbol::unit(), RationalFunctionL(constant));
}

MotivicClass::MotivicClass(const RationalFunctionL& unit_coeff) {
    if (!unit_coeff.is_zero()) terms_.emplace(ClassSymbol::unit(), unit_coeff);
}

MotivicClass MotivicClass::term(const ClassSymbol& s, const RationalFunctionL& coeff) {
    MotivicClass out;
    if (!coeff.is_zero()) out.terms_.emplace(s, coeff);
    return out;
}

RationalFunctionL MotivicClass::coeff(const ClassSymbol& s) const {
    const auto it = terms_.find(s);
    return it == terms_.end() ? RationalFunctionL() : it->second;
}

void MotivicClass::accumulate(const ClassSymbol& s, const RationalFunctionL& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

MotivicClass mc_add(const MotivicClass& a, const MotivicClass& b) {
    MotivicClass out = a;
    for (const auto& [sym, c] : b.terms()) out.accumulate(sym, c);
    return out;
}

MotivicClass mc_sub(const MotivicClass& a, const MotivicClass& b) {
    return mc_add(a, mc_neg(b));
}

MotivicClass mc_neg(const MotivicClass& a) {
    MotivicClass out;
    for (const auto& [sym, c] : a.terms()) out = mc_add(out, MotivicClass::term(sym, -c));
    return out;
}

MotivicClass mc_mul(const MotivicClass& a, const MotivicClass& b) {
    MotivicClass out;
    for (const auto& [sa, ca] : a.terms()) {
        for (const auto& [sb, cb] : b.terms()) {
            const ClassSymbol* sym = nullptr;
            if (sa.kind == ClassSymbol::Kind::Unit) {
                sym = &sb;
            } else if (sb.kind == ClassSymbol::Kind::Unit) {
                sym = &sa;
            } else {
                throw SymbolProductUnsupported("product of curve symbols [" + sa.id + "]*[" +
                                               sb.id + "] has no representation here");
            }
            out.accumulate(*sym, ca * cb);
        }
    }
    return out;
}

MotivicClass mc_scale(const MotivicClass& a, const RationalFunctionL& f) {
    MotivicClass out;
    if (f.is_zero()) return out;
    for (const auto& [sym, c] : a.terms()) out.accumulate(sym, c * f);
    return out;
}

MotivicClass mc_div(const MotivicClass& a, const MotivicClass& b) {
    if (b.is_zero()) throw Error("division by the zero class");
    for (const auto& [sym, c] : b.terms())
        if (sym.kind != ClassSymbol::Kind::Unit)
            throw SymbolProductUnsupported("division by a class carrying curve symbol [" +
                                           sym.id + "]");
    return mc_scale(a, b.coeff(ClassSymbol::unit()).inverse());
}

MotivicClass geometric_factor(int i) {
    if (i < 1) throw InvalidIndex("geometric_factor index must be >= 1, got " + std::to_string(i));
    PolyQ li = PolyQ::monomial(Rat(1), i);
    return MotivicClass(RationalFunctionL(li, li - PolyQ(Rat(1))));
}

std::optional<int> l_degree(const MotivicClass& a) {
    std::optional<int> best;
    for (const auto& [sym, c] : a.terms()) {
        const int d = c.degree_diff() + sym.dimension();
        if (!best || d > *best) best = d;
    }
    return best;
}

LaurentTruncation LaurentTruncation::truncated(int D) const {
    LaurentTruncation out;
    out.precision = D;
    for (const auto& [key, c] : coefficients)
        if (key.second >= -D) out.coefficients.emplace(key, c);
    return out;
}

LaurentTruncation expand(const MotivicClass& a, int D) {
    LaurentTruncation out;
    out.precision = D;
    for (const auto& [sym, c] : a.terms())
        for (const auto& [e, v] : c.expand_at_infinity(D))
            out.coefficients.emplace(std::make_pair(sym, e), v);
    return out;
}

bool mc_eq_truncated(const MotivicClass& a, const MotivicClass& b, int D) {
    return expand(a, D) == expand(b, D);
}

LaurentTruncation lt_add(const LaurentTruncation& a, const LaurentTruncation& b) {
    if (a.precision != b.precision) throw Error("adding truncations of different precision");
    LaurentTruncation out = a;
    for (const auto& [key, c] : b.coefficients) {
        auto it = out.coefficients.find(key);
        if (it == out.coefficients.end()) {
            out.coefficients.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) out.coefficients.erase(it);
        }
    }
    return out;
}

LaurentTruncation lt_scale(const LaurentTruncation& a, const Rat& s) {
    LaurentTruncation out;
    out.precision = a.precision;
    if (s == 0) return out;
    for (const auto& [key, c] : a.coefficients) out.coefficients.emplace(key, c * s);
    return out;
}

namespace {

Int int_content(const PolyQ& p) {
    Int g = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rat c = p.coeff(i);
        if (c != 0) g = boost::multiprecision::gcd(g, Int(abs(numerator(c))));
    }
    return g;
}

std::string render_poly(const PolyQ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat c = p.coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += format_rational(mag);
        } else {
            if (mag != 1) out += format_rational(mag) + "*";
            out += (k == 1) ? "L" : "L^" + std::to_string(k);
        }
    }
    return out;
}

// num/den with integer coefficients, coprime integer contents, positive leading
// denominator coefficient; the denominator part is omitted when it is exactly 1.
std::string render_coeff(const RationalFunctionL& f) {
    Int mult = 1;
    for (int i = 0; i <= f.num().degree(); ++i)
        mult = boost::multiprecision::lcm(mult, denominator(f.num().coeff(i)));
    for (int i = 0; i <= f.den().degree(); ++i)
        mult = boost::multiprecision::lcm(mult, denominator(f.den().coeff(i)));
    PolyQ n = f.num().scaled(Rat(mult));
    PolyQ d = f.den().scaled(Rat(mult));
    const Int cont = boost::multiprecision::gcd(int_content(n), int_content(d));
    if (cont > 1) {
        const Rat inv = Rat(Int(1), cont);
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    const std::string ns = render_poly(n);
    const std::string lhs = n.degree() > 0 ? "(" + ns + ")" : ns;
    if (d.is_one()) return lhs;
    const std::string ds = render_poly(d);
    const std::string rhs = d.degree() > 0 ? "(" + ds + ")" : ds;
    return lhs + "/" + rhs;
}

}  // namespace

std::string canonical_string(const MotivicClass& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [sym, c] : a.terms()) {
        std::string term;
        if (sym.kind == ClassSymbol::Kind::Unit) {
            term = render_coeff(c);
        } else if (c == RationalFunctionL(Rat(1))) {
            term = "[" + sym.id + "]";
        } else {
            term = render_coeff(c) + "*[" + sym.id + "]";
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

std::string truncation_string(const LaurentTruncation& t) {
    std::ostringstream os;
    bool first = true;
    // Group by symbol in map order; within a symbol, exponents print descending.
    for (auto sym_it = t.coefficients.begin(); sym_it != t.coefficients.end();) {
        const ClassSymbol& sym = sym_it->first.first;
        auto sym_end = sym_it;
        while (sym_end != t.coefficients.end() && sym_end->first.first == sym) ++sym_end;
        std::ostringstream part;
        bool inner_first = true;
        for (auto rit = std::make_reverse_iterator(sym_end);
             rit != std::make_reverse_iterator(sym_it); ++rit) {
            const int e = rit->first.second;
            const Rat& c = rit->second;
            const bool neg = c < 0;
            const Rat mag = neg ? Rat(-c) : c;
            if (inner_first) {
                if (neg) part << "-";
                inner_first = false;
            } else {
                part << (neg ? " - " : " + ");
            }
            if (e == 0) {
                part << format_rational(mag);
            } else {
                if (mag != 1) part << format_rational(mag) << "*";
                part << "L^" << e;
            }
        }
        if (!first) os << " + ";
        first = false;
        if (sym.kind == ClassSymbol::Kind::Unit) {
            os << part.str();
        } else {
            os << "(" << part.str() << ")*[" << sym.id << "]";
        }
        sym_it = sym_end;
    }
    if (first) os << "0";
    os << " + O(L^" << -(t.precision + 1) << ")";
    return os.str();
}

namespace {

// Recursive-descent parser over the canonical grammar. All values are classes;
// division requires a symbol-free divisor and products obey the mc_mul rules.
class ClassParser {
public:
    explicit ClassParser(const std::string& text) : text_(text) {}

    MotivicClass run() {
        MotivicClass v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ClassParseError("class parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MotivicClass expr() {
        MotivicClass v = term();
        while (true) {
            if (eat('+')) {
                v = mc_add(v, term());
            } else if (eat('-')) {
                v = mc_sub(v, term());
            } else {
                return v;
            }
        }
    }

    MotivicClass term() {
        MotivicClass v = unary();
        while (true) {
            if (eat('*')) {
                v = mc_mul(v, unary());
            } else if (eat('/')) {
                v = mc_div(v, unary());
            } else {
                return v;
            }
        }
    }

    MotivicClass unary() {
        if (eat('-')) return mc_neg(unary());
        return power();
    }

    MotivicClass power() {
        MotivicClass base = atom();
        if (!eat('^')) return base;
        skip_ws();
        bool neg = eat('-');
        const long long e = integer_literal();
        MotivicClass out(Rat(1));
        for (long long i = 0; i < e; ++i) out = mc_mul(out, base);
        if (neg) out = mc_div(MotivicClass(Rat(1)), out);
        return out;
    }

    long long integer_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    MotivicClass atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MotivicClass v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'L') {
            ++pos_;
            return MotivicClass(RationalFunctionL::var());
        }
        if (c == '[') {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
            if (pos_ == text_.size()) fail("unterminated symbol");
            std::string id = text_.substr(start, pos_ - start);
            ++pos_;
            if (id.empty()) fail("empty symbol name");
            return MotivicClass::term(ClassSymbol::curve(std::move(id)), RationalFunctionL(Rat(1)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return MotivicClass(Rat(Int(text_.substr(start, pos_ - start))));
        }
        fail("unexpected character");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

MotivicClass parse_class(const std::string& text) {
    return ClassParser(text).run();
}

std::ostream& operator<<(std::ostream& os, const MotivicClass& a) {
    return os << canonical_string(a);
}

std::ostream& operator<<(std::ostream& os, const LaurentTruncation& t) {
    return os << truncation_string(t);
}

}  // namespace motdens
