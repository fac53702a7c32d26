#include "motdens/density.hpp"

namespace motdens {

namespace {

// (L-1) / ((L^lambda - 1)(L+1)) for lambda = (q_j - 1) m_j >= 1.
MotivicClass edge_factor(const Vertex& j) {
    const Rat lambda_rat = (j.q - 1) * j.m;
    if (lambda_rat <= 0)
        throw NonAdmissibleAdjacency("vertex '" + j.id +
                                     "' with q = 1 is adjacent to a rate-one vertex");
    const long long lambda = to_ll(lambda_rat);
    const PolyQ one(Rat(1));
    const PolyQ l = PolyQ::monomial(Rat(1), 1);
    const PolyQ l_lambda = PolyQ::monomial(Rat(1), static_cast<int>(lambda));
    return MotivicClass(RationalFunctionL(l - one, (l_lambda - one) * (l + one)));
}

MotivicClass contribution(const DualGraph& g, const Vertex& v) {
    const PolyQ one(Rat(1));
    const PolyQ l = PolyQ::monomial(Rat(1), 1);
    MotivicClass bracket = mc_scale(e0_class(g, v.id), RationalFunctionL(one, l + one));
    for (const auto& e : g.edges) {
        if (!e.touches(v.id)) continue;
        const std::string& other = e.a == v.id ? e.b : e.a;
        const Vertex* j = g.find_vertex(other);
        if (!j) throw UnknownVertex("edge endpoint '" + other + "' is not a vertex");
        bracket = mc_add(bracket, edge_factor(*j));
    }
    return mc_scale(bracket, RationalFunctionL(Rat(1) / v.m));
}

}  // namespace

MotivicClass surface_density(const DualGraph& g) {
    MotivicClass total;
    for (const auto& v : g.vertices)
        if (v.q == 1) total = mc_add(total, contribution(g, v));
    return total;
}

MotivicClass vertex_contribution(const DualGraph& g, const std::string& vertex_id) {
    const Vertex* v = g.find_vertex(vertex_id);
    if (!v) throw UnknownVertex("unknown vertex '" + vertex_id + "'");
    if (v->q != 1)
        throw RateNotOne("vertex '" + vertex_id + "' has q = " + format_rational(v->q) +
                         ", contributions exist only at q = 1");
    return contribution(g, *v);
}

Rat curve_density(const CurveBranchData& b) {
    Rat total = 0;
    for (const long long n : b.mults) {
        if (n < 1) throw Error("branch multiplicities must be >= 1");
        total += Rat(1, n);
    }
    return total;
}

long long branch_jacobian_order(long long N) {
    if (N < 1) throw Error("branch multiplicity must be >= 1");
    return N - 1;
}

}  // namespace motdens
