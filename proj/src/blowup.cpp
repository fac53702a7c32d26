#include "motdens/blowup.hpp"

#include <random>
#include <sstream>

namespace motdens {

namespace {

const Vertex& require_vertex(const BlowupState& s, const std::string& id) {
    const Vertex* v = s.graph.find_vertex(id);
    if (!v) throw UnknownVertex("unknown vertex '" + id + "'");
    return *v;
}

std::string fresh_id(BlowupState& s) {
    std::string id;
    do {
        id = "E" + std::to_string(s.next_index++);
    } while (s.graph.has_vertex(id));
    return id;
}

void check_mq_integral(const Vertex& v) {
    if (!is_integral(v.q * v.m))
        throw Error("blowup produced non-integral m*q at '" + v.id + "'");
}

}  // namespace

BlowupState init_smooth() {
    BlowupState s;
    s.mode = BlowupState::Mode::Smooth;
    s.graph.vertices.push_back(Vertex{"E1", 1, Rat(1), CurveClass::rational()});
    s.k["E1"] = 1;
    s.next_index = 2;
    return s;
}

BlowupState from_graph(const DualGraph& g) {
    BlowupState s;
    s.mode = BlowupState::Mode::General;
    s.graph = g;
    s.next_index = 2;
    return s;
}

BlowupState blowup_free(const BlowupState& s, const std::string& v) {
    const Vertex& center = require_vertex(s, v);
    BlowupState out = s;
    Vertex w;
    w.id = fresh_id(out);
    w.m = center.m;
    w.q = center.q + Rat(1, center.m);
    w.curve_class = CurveClass::rational();
    check_mq_integral(w);
    out.graph.vertices.push_back(w);
    out.graph.edges.push_back(Edge{v, w.id});
    if (out.mode == BlowupState::Mode::Smooth) out.k[w.id] = out.k.at(v) + 1;
    return out;
}

BlowupState blowup_satellite(const BlowupState& s, const std::string& a, const std::string& b,
                             int occurrence) {
    const Vertex& va = require_vertex(s, a);
    const Vertex& vb = require_vertex(s, b);
    if (occurrence < 1) throw UnknownEdge("occurrence index must be >= 1");
    int seen = 0;
    std::size_t index = s.graph.edges.size();
    for (std::size_t i = 0; i < s.graph.edges.size(); ++i) {
        if (s.graph.edges[i].joins(a, b) && ++seen == occurrence) {
            index = i;
            break;
        }
    }
    if (index == s.graph.edges.size())
        throw UnknownEdge("no edge {" + a + ", " + b + "} with occurrence " +
                          std::to_string(occurrence));

    BlowupState out = s;
    out.graph.edges.erase(out.graph.edges.begin() + static_cast<std::ptrdiff_t>(index));
    Vertex w;
    w.id = fresh_id(out);
    w.m = va.m + vb.m;
    w.q = (va.q * va.m + vb.q * vb.m) / w.m;
    w.curve_class = CurveClass::rational();
    check_mq_integral(w);
    out.graph.vertices.push_back(w);
    out.graph.edges.push_back(Edge{a, w.id});
    out.graph.edges.push_back(Edge{b, w.id});
    if (out.mode == BlowupState::Mode::Smooth) out.k[w.id] = out.k.at(a) + out.k.at(b) + 1;
    return out;
}

long long mather_log(const BlowupState& s, const std::string& v) {
    const Vertex& vv = require_vertex(s, v);
    return to_ll(Rat(vv.m) * (vv.q + 1));
}

long long mather(const BlowupState& s, const std::string& v) {
    return mather_log(s, v) - 1;
}

bool check_smooth_identity(const BlowupState& s) {
    if (s.mode != BlowupState::Mode::Smooth)
        throw WrongMode("smooth identity is only tracked in Smooth mode");
    for (const auto& v : s.graph.vertices) {
        const auto it = s.k.find(v.id);
        if (it == s.k.end()) return false;
        if (v.q != Rat(it->second + 1, v.m) - 1) return false;
    }
    return true;
}

std::vector<ScriptOp> parse_blowup_script(const std::string& text) {
    std::vector<ScriptOp> ops;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        ScriptOp op;
        if (word == "free") {
            op.kind = ScriptOp::Kind::Free;
            if (!(ls >> op.a)) throw SyntaxError(lineno, "free needs a vertex id");
        } else if (word == "satellite") {
            op.kind = ScriptOp::Kind::Satellite;
            if (!(ls >> op.a >> op.b)) throw SyntaxError(lineno, "satellite needs two vertex ids");
            if (ls >> op.occurrence) {
                if (op.occurrence < 1) throw SyntaxError(lineno, "occurrence must be >= 1");
            } else {
                op.occurrence = 1;
            }
        } else {
            throw SyntaxError(lineno, "unknown operation '" + word + "'");
        }
        std::string extra;
        if (ls >> extra) throw SyntaxError(lineno, "unexpected token '" + extra + "'");
        ops.push_back(std::move(op));
    }
    return ops;
}

BlowupState apply_script(BlowupState s, const std::vector<ScriptOp>& ops) {
    for (const auto& op : ops) {
        s = op.kind == ScriptOp::Kind::Free ? blowup_free(s, op.a)
                                            : blowup_satellite(s, op.a, op.b, op.occurrence);
    }
    return s;
}

std::vector<BlowupState> random_blowup_sequence(std::uint64_t seed, int steps) {
    std::mt19937_64 rng(seed);
    const auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    std::vector<BlowupState> states;
    states.push_back(init_smooth());
    for (int i = 0; i < steps; ++i) {
        const BlowupState& cur = states.back();
        const bool satellite = !cur.graph.edges.empty() && (rng() % 2 == 0);
        if (satellite) {
            const Edge& e = cur.graph.edges[pick(cur.graph.edges.size())];
            states.push_back(blowup_satellite(cur, e.a, e.b));
        } else {
            const Vertex& v = cur.graph.vertices[pick(cur.graph.vertices.size())];
            states.push_back(blowup_free(cur, v.id));
        }
    }
    return states;
}

}  // namespace motdens
