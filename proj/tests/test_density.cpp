#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motdens/density.hpp"

#include <fstream>
#include <sstream>

using namespace motdens;

namespace {

DualGraph load(const std::string& name) {
    std::ifstream in(std::string(MOTDENS_FIXTURES) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace

TEST_CASE("e8 density is exactly one half") {
    MotivicClass d = surface_density(load("e8.graph"));
    CHECK(d == MotivicClass(Rat(1, 2)));
    CHECK(canonical_string(d) == "1/2");
}

TEST_CASE("smooth point has density one") {
    CHECK(surface_density(load("smooth.graph")) == MotivicClass(Rat(1)));
}

TEST_CASE("two-vertex graph") {
    // v(m=2, q=1) -- w(m=3, q=4/3): (1/2)[ L/(L+1) + (L-1)/((L-1)(L+1)) ] = 1/2
    CHECK(surface_density(load("twovertex.graph")) == MotivicClass(Rat(1, 2)));
    CHECK(vertex_contribution(load("twovertex.graph"), "v") == MotivicClass(Rat(1, 2)));
    CHECK_THROWS_AS(vertex_contribution(load("twovertex.graph"), "w"), RateNotOne);
    CHECK_THROWS_AS(vertex_contribution(load("twovertex.graph"), "zz"), UnknownVertex);
}

TEST_CASE("lambda exceeding one") {
    // v(2,1) -- w(4,5/4): lambda = 1/4 * 4 = 1; and a variant with lambda = 2
    DualGraph g = parse_graph(
        R"({"vertices": [{"id": "v", "m": 2, "q": 1}, {"id": "w", "m": 4, "q": "5/4"}],
            "edges": [["v", "w"]]})");
    CHECK(surface_density(g) == MotivicClass(Rat(1, 2)));

    DualGraph h = parse_graph(
        R"({"vertices": [{"id": "v", "m": 2, "q": 1}, {"id": "w", "m": 4, "q": "3/2"}],
            "edges": [["v", "w"]]})");
    // (1/2)[ L/(L+1) + (L-1)/((L^2-1)(L+1)) ] = (1/2)(L^2 + L + 1)/(L+1)^2
    MotivicClass expected = parse_class("(L^2 + L + 1)/(2*L^2 + 4*L + 2)");
    CHECK(surface_density(h) == expected);
}

TEST_CASE("parallel edges contribute per intersection point") {
    DualGraph g = parse_graph(
        R"({"vertices": [{"id": "v", "m": 2, "q": 1}, {"id": "w", "m": 4, "q": "5/4"}],
            "edges": [["v", "w"], ["v", "w"]]})");
    // (1/2)[ (L-1)/(L+1) + 2/(L+1) ] = 1/2
    CHECK(surface_density(g) == MotivicClass(Rat(1, 2)));
}

TEST_CASE("no rate-one vertex means density zero") {
    DualGraph g = parse_graph(
        R"({"vertices": [{"id": "a", "m": 2, "q": "3/2"}], "edges": []})");
    CHECK(surface_density(g).is_zero());
}

TEST_CASE("adjacent rate-one components are rejected") {
    DualGraph g = parse_graph(
        R"({"vertices": [{"id": "a", "m": 1, "q": 1}, {"id": "b", "m": 1, "q": 1}],
            "edges": [["a", "b"]]})");
    CHECK_THROWS_AS(surface_density(g), NonAdmissibleAdjacency);
}

TEST_CASE("symbolic component classes flow through the formula") {
    DualGraph g = parse_graph(
        R"({"vertices": [{"id": "a", "m": 2, "q": 1, "class": "genus:1"},
                         {"id": "b", "m": 4, "q": "3/2"}],
            "edges": [["a", "b"]]})");
    // (1/2)[ ([a] - 1)/(L+1) + (L-1)/((L^2-1)(L+1)) ]; the unit part collapses to
    // -1/(2(L+1)) + 1/(2(L+1)^2) = -L/(2(L+1)^2)
    MotivicClass expected =
        parse_class("1/(2*L + 2)*[a] + (-L)/(2*L^2 + 4*L + 2)");
    CHECK(surface_density(g) == expected);
}

TEST_CASE("example 6.4 transcription") {
    MotivicClass d = surface_density(load("example64-candidate.graph"));
    // two rate-one vertices A and B, each contributing L/(L+1) + 1/(L+1)^2
    CHECK(d == parse_class("(2*L^2 + 2*L + 2)/(L^2 + 2*L + 1)"));
    CHECK(d == parse_class("2*(L^2 + L + 1)/(L + 1)^2"));
}

TEST_CASE("curve density and jacobian orders") {
    CHECK(curve_density(CurveBranchData{{2}}) == Rat(1, 2));
    CHECK(curve_density(CurveBranchData{{2, 3}}) == Rat(5, 6));
    CHECK(curve_density(CurveBranchData{{1, 1, 1}}) == Rat(3));
    CHECK_THROWS_AS(curve_density(CurveBranchData{{0}}), Error);
    CHECK_THROWS_AS(curve_density(CurveBranchData{{-2}}), Error);
    CHECK(branch_jacobian_order(4) == 3);
    CHECK(branch_jacobian_order(1) == 0);
    CHECK_THROWS_AS(branch_jacobian_order(0), Error);
}
