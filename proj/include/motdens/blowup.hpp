#pragma once

#include "motdens/resgraph.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace motdens {

struct UnknownEdge : Error {
    using Error::Error;
};

struct WrongMode : Error {
    using Error::Error;
};

// Dual-graph state evolved by point blowups. Smooth mode starts from the first
// blowup of a smooth surface germ and additionally tracks the discrepancy
// k_v = ord_{E_v}(K), maintaining the identity q = (k+1)/m - 1 at every vertex.
// General mode wraps an arbitrary valid graph and tracks no k.
//
// The recursions presuppose that each intermediate resolution still factors through
// the maximal-ideal blowup and the Nash transform; that hypothesis is not decidable
// from graph data, so the engine applies the recursions to whatever state it is given.
struct BlowupState {
    enum class Mode { Smooth, General };

    DualGraph graph;
    std::map<std::string, long long> k;  // per-vertex discrepancy, Smooth mode only
    Mode mode = Mode::Smooth;
    int next_index = 2;  // counter for generated vertex names "E<n>"
};

// One vertex E1 with m=1, q=1, k=1 (the identity forces q = (1+1)/1 - 1 = 1).
BlowupState init_smooth();

// General mode around an existing graph.
BlowupState from_graph(const DualGraph& g);

// Blowup of a free point on E_v: new vertex w with m_w = m_v, q_w = q_v + 1/m_v,
// a new edge {v, w}; in Smooth mode k_w = k_v + 1.
BlowupState blowup_free(const BlowupState& s, const std::string& v);

// Blowup of the intersection point given by the occurrence-th edge {a, b}
// (1-based): the edge is replaced by a new vertex w joined to both ends, with
// m_w = m_a + m_b and q_w = (m_a q_a + m_b q_b) / m_w; in Smooth mode
// k_w = k_a + k_b + 1.
BlowupState blowup_satellite(const BlowupState& s, const std::string& a, const std::string& b,
                             int occurrence = 1);

// Mather log-discrepancy m_v (q_v + 1); integral by the m*q integrality invariant.
long long mather_log(const BlowupState& s, const std::string& v);
// Mather discrepancy m_v (q_v + 1) - 1.
long long mather(const BlowupState& s, const std::string& v);

// True iff q = (k+1)/m - 1 holds exactly at every vertex. Smooth mode only.
bool check_smooth_identity(const BlowupState& s);

// Script format: one operation per line, "free <id>" or
// "satellite <idA> <idB> [occurrence]". Blank lines and '#' comments are skipped.
struct ScriptOp {
    enum class Kind { Free, Satellite };
    Kind kind;
    std::string a;
    std::string b;        // Satellite only
    int occurrence = 1;   // Satellite only, 1-based
};

std::vector<ScriptOp> parse_blowup_script(const std::string& text);
BlowupState apply_script(BlowupState s, const std::vector<ScriptOp>& ops);

// Seeded random mix of free and satellite blowups from init_smooth; returns every
// intermediate state including the seed state (steps+1 states).
std::vector<BlowupState> random_blowup_sequence(std::uint64_t seed, int steps);

}  // namespace motdens
