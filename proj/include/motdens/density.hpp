#pragma once

#include "motdens/resgraph.hpp"

#include <vector>

namespace motdens {

struct RateNotOne : Error {
    using Error::Error;
};

// Some edge joins two rate-one components; the per-edge factor (q_j - 1) m_j would
// vanish and its geometric series would not converge. Admissible graphs never do this.
struct NonAdmissibleAdjacency : Error {
    using Error::Error;
};

// Multiplicities N_1..N_r of the irreducible branches of a plane curve germ.
struct CurveBranchData {
    std::vector<long long> mults;
};

// Closed-form surface density: sum over rate-one vertices v of
//   (1/m_v) [ [E_v^0]/(L+1) + sum over intersection points {v,j} of
//             (L-1)/((L^lambda - 1)(L+1)) ]  with lambda = (q_j - 1) m_j,
// the per-edge factor being L^-lambda (1-L^-1) / ((1-L^-lambda)(1+L^-1)) in reduced
// form. The neighbor sum runs per intersection point (multi-edges count each time).
// Returns 0 when no vertex has q = 1.
MotivicClass surface_density(const DualGraph& g);

// The single (1/m_v)[...] term of one rate-one vertex.
MotivicClass vertex_contribution(const DualGraph& g, const std::string& vertex_id);

// Curve density: sum of 1/N_i.
Rat curve_density(const CurveBranchData& b);

// Order along one branch of the pulled-back 1-form of a generic projection: N - 1.
long long branch_jacobian_order(long long N);

}  // namespace motdens
