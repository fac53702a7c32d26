#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motdens/oracle.hpp"
#include "motdens/randgen.hpp"

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

TEST_CASE("stratum enumeration") {
    DualGraph g = load("twovertex.graph");
    std::vector<StratumTerm> terms = strata(g);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].kind == StratumTerm::Kind::Vertex);
    CHECK(terms[0].a_v == 4);  // 2 (1 + 1)
    CHECK(terms[1].a_v == 7);  // 3 (4/3 + 1)
    CHECK(terms[2].kind == StratumTerm::Kind::Edge);
    CHECK(terms[2].m_v == 2);
    CHECK(terms[2].m_w == 3);
}

TEST_CASE("vertex stratum volumes") {
    DualGraph g = load("twovertex.graph");
    const Vertex& v = *g.find_vertex("v");
    // m = 2 divides n = 2: L^{-4*1-2} (L-1) * e0 with e0 = L
    CHECK(vertex_stratum_volume(v, e0_class(g, "v"), 2) ==
          parse_class("(L^2 - L)/L^6"));
    CHECK(vertex_stratum_volume(v, e0_class(g, "v"), 3).is_zero());
    CHECK_THROWS_AS(vertex_stratum_volume(v, e0_class(g, "v"), 0), InvalidIndex);
}

TEST_CASE("edge stratum volumes enumerate lattice points") {
    DualGraph g = load("twovertex.graph");
    StratumTerm t = strata(g)[2];
    // 2k + 3l = 5 has only (k,l) = (1,1): exponent 4 + 7 + 2 = 13
    CHECK(edge_stratum_volume(t, 5) == parse_class("(L^2 - 2*L + 1)/L^13"));
    // 2k + 3l = 4 has no solution with k,l >= 1
    CHECK(edge_stratum_volume(t, 4).is_zero());
    // 2k + 3l = 12: only (3, 2): exponent 12 + 14 + 2 = 28
    CHECK(edge_stratum_volume(t, 12) == parse_class("(L^2 - 2*L + 1)/L^28"));
    CHECK_THROWS_AS(edge_stratum_volume(strata(g)[0], 5), Error);
}

TEST_CASE("sphere volume assembles strata") {
    DualGraph g = load("twovertex.graph");
    // n = 5: odd, not divisible by 3 -> edge term only
    CHECK(sphere_volume_surface(g, 5) == parse_class("(L^2 - 2*L + 1)/L^13"));
    // n = 2: vertex v only (no edge solutions: 2k+3l=2 impossible)
    CHECK(sphere_volume_surface(g, 2) == parse_class("(L^2 - L)/L^6"));
}

TEST_CASE("theta agrees between exact and truncated paths") {
    for (const char* name : {"twovertex.graph", "e8.graph", "example64-candidate.graph"}) {
        DualGraph g = load(name);
        for (long long n : {1, 2, 3, 4, 5, 6, 7, 12}) {
            CHECK(expand(theta_surface(g, n), 10) == theta_truncation(g, n, 10));
        }
    }
}

TEST_CASE("theta on random graphs agrees between paths") {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 25; ++trial) {
        DualGraph g = random_admissible_graph(rng);
        for (long long n = 1; n <= 10; ++n) {
            CHECK(expand(theta_surface(g, n), 8) == theta_truncation(g, n, 8));
        }
    }
}

TEST_CASE("random graphs are admissible") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        DualGraph g = random_admissible_graph(rng);
        CHECK(validate(g).ok());
        CHECK(g.vertices.size() <= 6);
        for (const Vertex& v : g.vertices) {
            CHECK(v.m <= 6);
            CHECK(v.q >= 1);
            CHECK(v.q <= 3);
        }
    }
}

TEST_CASE("limits along residue classes of the two-vertex graph") {
    DualGraph g = load("twovertex.graph");
    LaurentTruncation even_limit = expand(parse_class("(L^2 + L + 1)/(L^2 + 2*L + 1)"), 12);
    LaurentTruncation odd_limit = expand(parse_class("(L)/(L^2 + 2*L + 1)"), 12);
    for (long long c : {0LL, 2LL, 4LL}) {
        ResidueLimit meta;
        CHECK(limit_along(g, c, 6, 12, 3, 600, &meta) == even_limit);
        CHECK(meta.window == 3);
    }
    for (long long c : {1LL, 3LL, 5LL})
        CHECK(limit_along(g, c, 6, 12, 3, 600) == odd_limit);

    ThetaLimitReport report = mean_value_surface(g, 12, 3, 600);
    CHECK(report.modulus == 6);
    CHECK(report.limits.size() == 6);
    CHECK(report.mean == expand(MotivicClass(Rat(1, 2)), 12));
}

TEST_CASE("starved budget raises with decay metadata") {
    DualGraph g = load("e8.graph");
    CHECK_THROWS_AS(limit_along(g, 1, 60, 12, 3, 60), NoStabilization);
    try {
        mean_value_surface(g, 2, 3, 60);
        FAIL("expected NoStabilization");
    } catch (const NoStabilization& e) {
        CHECK(e.n_max == 60);
        CHECK(e.min_alpha == Rat(1, 3));  // v6 has q = 4/3
    }
}

TEST_CASE("modulus independence of the mean") {
    DualGraph g = load("e8.graph");
    ThetaLimitReport a = mean_value_surface(g, 12, 3, 3600);
    ThetaLimitReport b = mean_value_surface(g, 12, 3, 7200, 2 * period(g));
    CHECK(a.modulus == 60);
    CHECK(b.modulus == 120);
    CHECK(a.mean == b.mean);
    CHECK(a.mean == expand(MotivicClass(Rat(1, 2)), 12));
}

TEST_CASE("cross check matches on the fixtures") {
    for (const char* name : {"twovertex.graph", "e8.graph", "smooth.graph",
                             "example64-candidate.graph"}) {
        DualGraph g = load(name);
        CheckReport report = cross_check(g, 12, 3, 60 * period(g));
        CHECK(report.match);
        CHECK(report.formula == report.oracle.mean);
    }
}

TEST_CASE("curve sphere volumes count dividing branches") {
    CurveBranchData b{{2, 3}};
    CHECK(theta_curve(b, 6) == MotivicClass(Rat(2)));
    CHECK(theta_curve(b, 5) == MotivicClass());
    CHECK(theta_curve(b, 4) == MotivicClass(Rat(1)));
    CHECK(sphere_volume_curve(b, 6) == parse_class("(2*L - 2)/L^7"));
    CHECK(sphere_volume_curve(b, 5).is_zero());

    CurveMeanReport report = mean_value_curve_report(b);
    CHECK(report.modulus == 6);
    CHECK(report.residue_counts == std::vector<long long>{2, 0, 1, 1, 1, 0});
    CHECK(report.mean == Rat(5, 6));
    CHECK(mean_value_curve(b) == Rat(5, 6));
    CHECK(mean_value_curve(CurveBranchData{{1}}) == Rat(1));
    CHECK_THROWS_AS(mean_value_curve(CurveBranchData{{0}}), Error);
}
