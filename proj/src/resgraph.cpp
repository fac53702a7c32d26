#include "motdens/resgraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace motdens {

using nlohmann::json;

const Vertex* DualGraph::find_vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

int DualGraph::degree(const std::string& id) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.a == id) ++d;
        if (e.b == id) ++d;
    }
    return d;
}

namespace {

int line_of_offset(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

Rat parse_rate(const json& value, const std::string& vertex_id) {
    Rat q;
    if (value.is_number_integer()) {
        q = Rat(value.get<long long>());
    } else if (value.is_string()) {
        const auto parsed = parse_rational(value.get<std::string>());
        if (!parsed)
            throw SyntaxError(0, "vertex '" + vertex_id + "': malformed rational \"" +
                                     value.get<std::string>() + "\"");
        q = *parsed;
    } else {
        throw SyntaxError(0, "vertex '" + vertex_id + "': q must be an integer or \"p/r\"");
    }
    if (q <= 0) throw SyntaxError(0, "vertex '" + vertex_id + "': q must be positive");
    return q;
}

CurveClass parse_curve_class(const json& value, const std::string& vertex_id) {
    if (!value.is_string())
        throw SyntaxError(0, "vertex '" + vertex_id + "': class must be a string");
    const std::string s = value.get<std::string>();
    if (s == "rational") return CurveClass::rational();
    if (s.rfind("genus:", 0) == 0) {
        const std::string tag = s.substr(6);
        const auto g = parse_rational(tag);
        if (!g || !is_integral(*g) || *g < 0)
            throw SyntaxError(0, "vertex '" + vertex_id + "': bad genus tag \"" + tag + "\"");
        return CurveClass::symbolic(to_ll(*g));
    }
    throw SyntaxError(0, "vertex '" + vertex_id + "': class must be \"rational\" or \"genus:<g>\"");
}

}  // namespace

DualGraph parse_graph(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(line_of_offset(text, e.byte), e.what());
    }
    if (!root.is_object()) throw SyntaxError(1, "top level must be an object");
    if (!root.contains("vertices") || !root["vertices"].is_array())
        throw SyntaxError(1, "missing \"vertices\" array");

    DualGraph g;
    std::unordered_set<std::string> seen;
    for (const auto& jv : root["vertices"]) {
        if (!jv.is_object()) throw SyntaxError(0, "vertex entries must be objects");
        if (!jv.contains("id") || !jv["id"].is_string())
            throw SyntaxError(0, "vertex entry without a string id");
        Vertex v;
        v.id = jv["id"].get<std::string>();
        if (v.id.empty()) throw SyntaxError(0, "vertex ids must be non-empty");
        if (!seen.insert(v.id).second) throw DuplicateVertexId("duplicate vertex id '" + v.id + "'");
        if (!jv.contains("m") || !jv["m"].is_number_integer() || jv["m"].get<long long>() < 1)
            throw SyntaxError(0, "vertex '" + v.id + "': m must be a positive integer");
        v.m = jv["m"].get<long long>();
        if (!jv.contains("q")) throw SyntaxError(0, "vertex '" + v.id + "': missing q");
        v.q = parse_rate(jv["q"], v.id);
        v.curve_class = jv.contains("class") ? parse_curve_class(jv["class"], v.id)
                                             : CurveClass::rational();
        g.vertices.push_back(std::move(v));
    }

    if (root.contains("edges")) {
        if (!root["edges"].is_array()) throw SyntaxError(1, "\"edges\" must be an array");
        for (const auto& je : root["edges"]) {
            if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
                throw SyntaxError(0, "edges must be [\"idA\", \"idB\"] pairs");
            Edge e{je[0].get<std::string>(), je[1].get<std::string>()};
            for (const auto& end : {e.a, e.b})
                if (!seen.count(end)) throw UnknownEndpoint("edge endpoint '" + end + "' is not a vertex");
            g.edges.push_back(std::move(e));
        }
    }
    return g;
}

std::string serialize_graph(const DualGraph& g) {
    json root;
    root["vertices"] = json::array();
    for (const auto& v : g.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["m"] = v.m;
        if (is_integral(v.q)) {
            jv["q"] = to_ll(v.q);
        } else {
            jv["q"] = format_rational(v.q);
        }
        jv["class"] = v.curve_class.kind == CurveClass::Kind::Rational
                          ? "rational"
                          : "genus:" + std::to_string(v.curve_class.genus);
        root["vertices"].push_back(std::move(jv));
    }
    root["edges"] = json::array();
    for (const auto& e : g.edges) root["edges"].push_back(json::array({e.a, e.b}));
    return root.dump(2) + "\n";
}

const char* to_string(ValidationIssue::Kind kind) {
    switch (kind) {
        case ValidationIssue::Kind::RateBelowOne: return "RateBelowOne";
        case ValidationIssue::Kind::NonIntegralMQ: return "NonIntegralMQ";
        case ValidationIssue::Kind::AdjacentRateOne: return "AdjacentRateOne";
        case ValidationIssue::Kind::LoopEdge: return "LoopEdge";
    }
    return "?";
}

const char* to_string(ValidationWarning::Kind kind) {
    switch (kind) {
        case ValidationWarning::Kind::NoRateOneVertex: return "NoRateOneVertex";
        case ValidationWarning::Kind::DisconnectedGraph: return "DisconnectedGraph";
    }
    return "?";
}

ValidationReport validate(const DualGraph& g) {
    ValidationReport report;
    bool has_rate_one = false;
    for (const auto& v : g.vertices) {
        if (v.q < 1)
            report.violations.push_back({ValidationIssue::Kind::RateBelowOne,
                                         "vertex '" + v.id + "': q = " + format_rational(v.q) +
                                             " < 1"});
        if (!is_integral(v.q * v.m))
            report.violations.push_back({ValidationIssue::Kind::NonIntegralMQ,
                                         "vertex '" + v.id + "': m*q = " +
                                             format_rational(v.q * v.m) + " is not an integer"});
        if (v.q == 1) has_rate_one = true;
    }
    for (const auto& e : g.edges) {
        if (e.a == e.b) {
            report.violations.push_back(
                {ValidationIssue::Kind::LoopEdge, "loop edge at '" + e.a + "'"});
            continue;
        }
        const Vertex* a = g.find_vertex(e.a);
        const Vertex* b = g.find_vertex(e.b);
        if (a && b && a->q == 1 && b->q == 1)
            report.violations.push_back({ValidationIssue::Kind::AdjacentRateOne,
                                         "edge {" + e.a + ", " + e.b +
                                             "} joins two rate-one components"});
    }
    if (!has_rate_one && !g.vertices.empty())
        report.warnings.push_back({ValidationWarning::Kind::NoRateOneVertex,
                                   "no vertex has q = 1; the density formula evaluates to 0"});

    // Connectivity warning: exceptional divisors of genuine resolutions are connected.
    if (g.vertices.size() > 1) {
        std::unordered_map<std::string, std::string> parent;
        for (const auto& v : g.vertices) parent[v.id] = v.id;
        std::function<std::string(const std::string&)> find = [&](const std::string& x) {
            std::string r = x;
            while (parent[r] != r) r = parent[r];
            parent[x] = r;
            return r;
        };
        for (const auto& e : g.edges) parent[find(e.a)] = find(e.b);
        std::set<std::string> roots;
        for (const auto& v : g.vertices) roots.insert(find(v.id));
        if (roots.size() > 1)
            report.warnings.push_back({ValidationWarning::Kind::DisconnectedGraph,
                                       "graph has " + std::to_string(roots.size()) +
                                           " connected components"});
    }
    return report;
}

MotivicClass vertex_class(const Vertex& v) {
    if (v.curve_class.kind == CurveClass::Kind::Rational) {
        PolyQ lp1 = PolyQ::monomial(Rat(1), 1) + PolyQ(Rat(1));
        return MotivicClass(RationalFunctionL(lp1, PolyQ(Rat(1))));
    }
    return MotivicClass::term(ClassSymbol::curve(v.id), RationalFunctionL(Rat(1)));
}

MotivicClass e0_class(const DualGraph& g, const std::string& vertex_id) {
    const Vertex* v = g.find_vertex(vertex_id);
    if (!v) throw UnknownVertex("unknown vertex '" + vertex_id + "'");
    return mc_sub(vertex_class(*v), MotivicClass(Rat(g.degree(vertex_id))));
}

long long period(const DualGraph& g) {
    long long e = 1;
    for (const auto& v : g.vertices) e = std::lcm(e, v.m);
    return e;
}

}  // namespace motdens
