#pragma once

#include "motdens/errors.hpp"
#include "motdens/ratfun.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace motdens {

// Basis symbol of the coefficient module: either the class of a point (Unit,
// dimension 0) or a free curve-class symbol (dimension 1). Unit sorts first,
// curve symbols sort by id.
struct ClassSymbol {
    enum class Kind { Unit, Curve };

    Kind kind = Kind::Unit;
    std::string id;  // empty for Unit

    static ClassSymbol unit() { return {}; }
    static ClassSymbol curve(std::string id) { return {Kind::Curve, std::move(id)}; }

    int dimension() const { return kind == Kind::Unit ? 0 : 1; }

    friend bool operator==(const ClassSymbol&, const ClassSymbol&) = default;
    friend auto operator<=>(const ClassSymbol&, const ClassSymbol&) = default;
};

// Finite sum of (rational function in L) x (basis symbol): the subring of the
// localized Grothendieck ring that every formula in this library inhabits.
// Zero coefficients are never stored, so equality is termwise equality.
class MotivicClass {
public:
    MotivicClass() = default;  // zero
    MotivicClass(const Rat& constant);
    MotivicClass(const RationalFunctionL& unit_coeff);
    static MotivicClass term(const ClassSymbol& s, const RationalFunctionL& coeff);

    const std::map<ClassSymbol, RationalFunctionL>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RationalFunctionL coeff(const ClassSymbol& s) const;

    friend bool operator==(const MotivicClass& a, const MotivicClass& b) = default;

private:
    friend MotivicClass mc_add(const MotivicClass&, const MotivicClass&);
    friend MotivicClass mc_mul(const MotivicClass&, const MotivicClass&);
    friend MotivicClass mc_scale(const MotivicClass&, const RationalFunctionL&);
    void accumulate(const ClassSymbol& s, const RationalFunctionL& c);
    std::map<ClassSymbol, RationalFunctionL> terms_;
};

// Both factors of a product carried a non-Unit symbol. Such products never occur in
// any formula in scope, so hitting this signals a formula-translation bug.
struct SymbolProductUnsupported : Error {
    using Error::Error;
};

struct InvalidIndex : Error {
    using Error::Error;
};

struct ClassParseError : Error {
    using Error::Error;
};

MotivicClass mc_add(const MotivicClass& a, const MotivicClass& b);
MotivicClass mc_sub(const MotivicClass& a, const MotivicClass& b);
MotivicClass mc_neg(const MotivicClass& a);
MotivicClass mc_mul(const MotivicClass& a, const MotivicClass& b);
MotivicClass mc_scale(const MotivicClass& a, const RationalFunctionL& f);
// Divide by a symbol-free, nonzero class.
MotivicClass mc_div(const MotivicClass& a, const MotivicClass& b);

// (1/(1 - L^-i)) * Unit = (L^i/(L^i - 1)) * Unit, the localizing inverses.
MotivicClass geometric_factor(int i);

// Maximum over terms of deg num - deg den + dim(symbol); nullopt encodes -infinity
// (the zero class).
std::optional<int> l_degree(const MotivicClass& a);

// Truncated expansion at L = infinity: exactly the coefficients of L^e with
// e >= -precision, keyed by (symbol, exponent); zero coefficients are never stored.
struct LaurentTruncation {
    int precision = 0;
    std::map<std::pair<ClassSymbol, int>, Rat> coefficients;

    friend bool operator==(const LaurentTruncation&, const LaurentTruncation&) = default;

    // Restriction to a smaller precision D <= precision.
    LaurentTruncation truncated(int D) const;
};

LaurentTruncation expand(const MotivicClass& a, int D);
bool mc_eq_truncated(const MotivicClass& a, const MotivicClass& b, int D);

// Exact coefficient arithmetic on truncations (both operands at the same precision).
LaurentTruncation lt_add(const LaurentTruncation& a, const LaurentTruncation& b);
LaurentTruncation lt_scale(const LaurentTruncation& a, const Rat& s);

// Deterministic rendering: terms sorted by symbol, each coefficient printed as
// num/den with integer-normalized numerator and descending powers of L. Round-trips
// through parse_class.
std::string canonical_string(const MotivicClass& a);

// Human-readable rendering of a truncation as a Laurent polynomial plus an O(L^-(D+1))
// tail marker; deterministic.
std::string truncation_string(const LaurentTruncation& t);

// Parser for the canonical_string grammar: rational numbers, "L", + - * / ( ) ^ and
// symbol atoms "[name]". Whitespace-insensitive. Throws ClassParseError.
MotivicClass parse_class(const std::string& text);

std::ostream& operator<<(std::ostream& os, const MotivicClass& a);
std::ostream& operator<<(std::ostream& os, const LaurentTruncation& t);

}  // namespace motdens
