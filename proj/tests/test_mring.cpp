#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motdens/mring.hpp"

#include <random>

using namespace motdens;

namespace {

PolyQ P(std::vector<int> v) {
    std::vector<Rat> c;
    for (int x : v) c.emplace_back(x);
    return PolyQ(std::move(c));
}

RationalFunctionL RF(std::vector<int> num, std::vector<int> den = {1}) {
    return RationalFunctionL(P(std::move(num)), P(std::move(den)));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("4/6") == Rat(2, 3));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("abc").has_value());
    CHECK(!parse_rational("").has_value());
    CHECK(format_rational(Rat(-1, 2)) == "-1/2");
    CHECK(format_rational(Rat(5)) == "5");
    CHECK(is_integral(Rat(6, 3)));
    CHECK(!is_integral(Rat(1, 2)));
    CHECK(to_ll(Rat(8, 2)) == 4);
    CHECK_THROWS_AS(to_ll(Rat(1, 2)), Error);
}

TEST_CASE("polynomial arithmetic") {
    PolyQ a = P({1, 1});   // L + 1
    PolyQ b = P({-1, 1});  // L - 1
    CHECK((a * b) == P({-1, 0, 1}));
    CHECK(a.degree() == 1);
    CHECK(P({}).degree() == -1);
    CHECK(P({0, 0, 3}).valuation() == 2);

    PolyQ quot, rem;
    PolyQ::divmod(P({1, 0, 0, 1}), a, quot, rem);  // (L^3+1)/(L+1)
    CHECK(quot == P({1, -1, 1}));
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(PolyQ::div_exact(P({1, 0, 1}), a), Error);

    CHECK(PolyQ::gcd(P({-1, 0, 1}), P({1, 2, 1})) == a);  // monic result
    CHECK(PolyQ::pow(a, 3) == P({1, 3, 3, 1}));
    CHECK(PolyQ::pow(a, 0).is_one());
    CHECK(PolyQ::monomial(Rat(2), 3) == P({0, 0, 0, 2}));
    CHECK(P({0, 0, 1}).shifted(-2).is_one());
    CHECK_THROWS_AS(P({0, 1}).shifted(-2), Error);
}

TEST_CASE("rational function reduction and equality") {
    CHECK(RF({-1, 0, 1}, {1, 1}) == RF({-1, 1}));       // (L^2-1)/(L+1) = L-1
    CHECK(RF({0, 2}, {2, 2}) == RF({0, 1}, {1, 1}));    // common content
    CHECK(RF({1}, {0, 1}).inverse() == RF({0, 1}));     // (1/L)^-1 = L
    CHECK((RF({0, 1}) * RF({1}, {0, 1})).is_constant());
    CHECK_THROWS_AS(RationalFunctionL(P({1}), P({})), Error);
    CHECK_THROWS_AS(RF({1}) / RF({}), Error);
    CHECK_THROWS_AS(RF({}).inverse(), Error);
    CHECK(RF({1, 1}).degree_diff() == 1);
    CHECK(RF({1}, {1, 2, 1}).degree_diff() == -2);
    CHECK(RationalFunctionL::l_power(-3) == RF({1}, {0, 0, 0, 1}));
}

TEST_CASE("expansion at infinity") {
    // L/(L+1) = 1 - L^-1 + L^-2 - ...
    auto c = RF({0, 1}, {1, 1}).expand_at_infinity(2);
    CHECK(c == std::map<int, Rat>{{0, Rat(1)}, {-1, Rat(-1)}, {-2, Rat(1)}});

    // 1/(L+1)^2 = L^-2 - 2 L^-3 + ...
    auto d = RF({1}, {1, 2, 1}).expand_at_infinity(3);
    CHECK(d == std::map<int, Rat>{{-2, Rat(1)}, {-3, Rat(-2)}});

    // (L^2+L+1)/(L+1)^2 = 1 - L^-1 + 2 L^-2 - 3 L^-3 + ...
    auto e = RF({1, 1, 1}, {1, 2, 1}).expand_at_infinity(3);
    CHECK(e == std::map<int, Rat>{{0, Rat(1)}, {-1, Rat(-1)}, {-2, Rat(2)}, {-3, Rat(-3)}});
}

TEST_CASE("class arithmetic") {
    MotivicClass one(Rat(1));
    MotivicClass half(Rat(1, 2));
    MotivicClass sym = MotivicClass::term(ClassSymbol::curve("E3"), RF({0, 1}, {1, 1}));

    CHECK(mc_add(half, half) == one);
    CHECK(mc_sub(sym, sym).is_zero());
    CHECK(mc_add(sym, mc_neg(sym)).is_zero());
    CHECK(mc_mul(one, sym) == sym);
    CHECK(mc_mul(sym, MotivicClass(Rat(2))) ==
          MotivicClass::term(ClassSymbol::curve("E3"), RF({0, 2}, {1, 1})));
    CHECK_THROWS_AS(mc_mul(sym, sym), SymbolProductUnsupported);
    CHECK_THROWS_AS(mc_div(one, sym), SymbolProductUnsupported);
    CHECK_THROWS_AS(mc_div(one, MotivicClass()), Error);
    CHECK(mc_div(sym, MotivicClass(Rat(2))) ==
          MotivicClass::term(ClassSymbol::curve("E3"), RF({0, 1}, {2, 2})));
    CHECK(mc_scale(one, RF({0, 0, 1})) == MotivicClass(RF({0, 0, 1})));
    CHECK(MotivicClass(Rat(0)).is_zero());

    CHECK(geometric_factor(2) == MotivicClass(RF({0, 0, 1}, {-1, 0, 1})));
    CHECK_THROWS_AS(geometric_factor(0), InvalidIndex);

    CHECK(l_degree(MotivicClass(RF({0, 0, 1}))) == 2);
    CHECK(l_degree(sym) == 1);  // deg(L/(L+1)) = 0 plus curve dimension 1
    CHECK(!l_degree(MotivicClass()).has_value());
}

TEST_CASE("truncations") {
    LaurentTruncation t = expand(MotivicClass(Rat(1, 2)), 12);
    CHECK(t.precision == 12);
    CHECK(t.coefficients ==
          std::map<std::pair<ClassSymbol, int>, Rat>{{{ClassSymbol::unit(), 0}, Rat(1, 2)}});
    CHECK(truncation_string(t) == "1/2 + O(L^-13)");
    CHECK(truncation_string(expand(MotivicClass(), 12)) == "0 + O(L^-13)");

    LaurentTruncation g = expand(MotivicClass(RF({1, 1, 1}, {1, 2, 1})), 3);
    CHECK(g.coefficients.at({ClassSymbol::unit(), -3}) == Rat(-3));
    CHECK(g.truncated(1).coefficients.size() == 2);

    CHECK_THROWS_AS(lt_add(t, g), Error);  // precision mismatch
    LaurentTruncation sum = lt_add(t, lt_scale(t, Rat(-1)));
    CHECK(sum.coefficients.empty());  // exact cancellation leaves no stored zeros
    CHECK(lt_scale(g, Rat(2)).coefficients.at({ClassSymbol::unit(), -2}) == Rat(4));

    CHECK(mc_eq_truncated(MotivicClass(RF({1, 1, 1}, {1, 2, 1})),
                          MotivicClass(RF({1, 1, 1}, {1, 2, 1})), 8));
    CHECK(!mc_eq_truncated(MotivicClass(Rat(1)), MotivicClass(Rat(1, 2)), 8));
}

TEST_CASE("canonical rendering") {
    CHECK(canonical_string(MotivicClass(Rat(1))) == "1");
    CHECK(canonical_string(MotivicClass(Rat(1, 2))) == "1/2");
    CHECK(canonical_string(MotivicClass()) == "0");
    CHECK(canonical_string(MotivicClass(RF({0, 1}, {1, 1}))) == "(L)/(L + 1)");
    CHECK(canonical_string(MotivicClass::term(ClassSymbol::curve("E3"), RF({0, 1}, {1, 1}))) ==
          "(L)/(L + 1)*[E3]");
    CHECK(canonical_string(MotivicClass::term(ClassSymbol::curve("C"), RF({1}))) == "[C]");
    // fractional coefficients are cleared to a coprime integer pair
    MotivicClass frac(RationalFunctionL(PolyQ(std::vector<Rat>{Rat(1, 3), Rat(1, 2)}), P({1})));
    CHECK(canonical_string(frac) == "(3*L + 2)/6");
    CHECK(canonical_string(MotivicClass(RF({-1, -2}))) == "(-2*L - 1)");
}

TEST_CASE("class parsing") {
    CHECK(parse_class("1/2") == MotivicClass(Rat(1, 2)));
    CHECK(parse_class("L^2 - 1") == MotivicClass(RF({-1, 0, 1})));
    CHECK(parse_class("(L)/(L + 1)*[E3]") ==
          MotivicClass::term(ClassSymbol::curve("E3"), RF({0, 1}, {1, 1})));
    CHECK(parse_class("L^-2") == MotivicClass(RF({1}, {0, 0, 1})));
    CHECK(parse_class("2*(1 + 4/(L+1) + 1/(L+1)^2)") ==
          MotivicClass(RF({6, 6, 1}, {1, 2, 1}) * RF({2})));
    CHECK_THROWS_AS(parse_class("L +"), ClassParseError);
    CHECK_THROWS_AS(parse_class("[E1]*[E2]"), SymbolProductUnsupported);

    // round-trip through the canonical form
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> num, den;
        for (int i = 0; i <= static_cast<int>(rng() % 3); ++i)
            num.push_back(static_cast<int>(rng() % 7) - 3);
        den.push_back(1 + static_cast<int>(rng() % 3));
        for (int i = 0; i < static_cast<int>(rng() % 2); ++i)
            den.push_back(1 + static_cast<int>(rng() % 3));
        MotivicClass x = mc_add(MotivicClass(RF(num, den)),
                                MotivicClass::term(ClassSymbol::curve("C"), RF({1, 1})));
        CHECK(parse_class(canonical_string(x)) == x);
    }
}
