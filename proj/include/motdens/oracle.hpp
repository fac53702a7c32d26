#pragma once

#include "motdens/density.hpp"

#include <vector>

namespace motdens {

// Truncation stabilization was not reached before n_max. min_alpha is the slowest
// transient decay rate (per unit n) across strata, so a caller can resize
// n_max >= (precision + margin) / min_alpha.
struct NoStabilization : Error {
    long long n_max;
    Rat min_alpha;
    NoStabilization(long long n_max, const Rat& min_alpha)
        : Error("no stabilization within n <= " + std::to_string(n_max) +
                "; slowest decay rate alpha = " + format_rational(min_alpha) +
                ", resize n_max >= (precision + margin)/alpha"),
          n_max(n_max),
          min_alpha(min_alpha) {}
};

// One stratum of the sphere preimage: the smooth part of one component, or the
// double points of one intersection. Exponent data a = m(q+1) are integral by the
// m*q integrality invariant.
struct StratumTerm {
    enum class Kind { Vertex, Edge };
    Kind kind;
    std::string v;
    std::string w;  // Edge only
    long long m_v = 0, m_w = 0;
    long long a_v = 0, a_w = 0;
};

std::vector<StratumTerm> strata(const DualGraph& g);

// Volume over the smooth stratum of one component at sphere radius n:
// 0 unless m_v | n, else L^{-(q_v+1) n} L^{-2} (L-1) e0.
MotivicClass vertex_stratum_volume(const Vertex& v, const MotivicClass& e0, long long n);

// Volume over the double points of one intersection at radius n: the exact sum over
// integer solutions k, l >= 1 of m_v k + m_w l = n of L^{-(a_v k + a_w l + 2)} (L-1)^2.
MotivicClass edge_stratum_volume(const StratumTerm& t, long long n);

// Sum of all stratum volumes.
MotivicClass sphere_volume_surface(const DualGraph& g, long long n);

// Sphere volume normalized by the 2-sphere volume L^{-2n} (1 - L^{-2}).
MotivicClass theta_surface(const DualGraph& g, long long n);

// Truncated expansion of theta_surface(g, n) at L = infinity, computed by exact
// per-exponent accumulation without constructing rational functions. Agrees with
// expand(theta_surface(g, n), D) coefficient for coefficient.
LaurentTruncation theta_truncation(const DualGraph& g, long long n, int D);

struct ResidueLimit {
    long long stabilized_at = 0;  // first n of the identical window
    int window = 0;               // consecutive identical truncations observed
    LaurentTruncation limit;
};

// Limit of theta truncations along n ≡ c (mod e): returns the value once W
// consecutive samples agree; throws NoStabilization past n_max.
LaurentTruncation limit_along(const DualGraph& g, long long c, long long e, int D, int W,
                              long long n_max, ResidueLimit* meta = nullptr);

struct ThetaLimitReport {
    long long modulus = 1;
    std::vector<ResidueLimit> limits;  // index = residue class c
    LaurentTruncation mean;            // (1/modulus) * sum of limits, exact
    int precision = 0;
    int window = 0;
    long long n_max = 0;
};

// Mean value at infinity of the theta sequence: per-residue limits averaged exactly.
// modulus = 0 means the graph period; any positive multiple gives the same mean.
ThetaLimitReport mean_value_surface(const DualGraph& g, int D, int W, long long n_max,
                                    long long modulus = 0);

// Curve analogue: each branch with N_i | n contributes L^{-n}(L-1); theta is the
// count of dividing branches; the mean is exact with no truncation.
MotivicClass sphere_volume_curve(const CurveBranchData& b, long long n);
MotivicClass theta_curve(const CurveBranchData& b, long long n);

struct CurveMeanReport {
    long long modulus = 1;
    std::vector<long long> residue_counts;  // limit along c is this constant
    Rat mean;
};

Rat mean_value_curve(const CurveBranchData& b);
CurveMeanReport mean_value_curve_report(const CurveBranchData& b);

// Central verification harness: formula truncation vs oracle mean value.
struct CheckReport {
    LaurentTruncation formula;
    ThetaLimitReport oracle;
    bool match = false;
    double formula_ms = 0.0;
    double oracle_ms = 0.0;
    int precision = 0;
    int window = 0;
    long long n_max = 0;
};

CheckReport cross_check(const DualGraph& g, int D, int W, long long n_max);

}  // namespace motdens
