#pragma once

#include "motdens/errors.hpp"
#include "motdens/mring.hpp"

#include <string>
#include <vector>

namespace motdens {

// Curve-class descriptor of an exceptional component: either the rational curve
// (class L+1) or a free symbol tagged with a genus.
struct CurveClass {
    enum class Kind { Rational, Symbolic };

    Kind kind = Kind::Rational;
    long long genus = 0;  // meaningful only for Symbolic

    static CurveClass rational() { return {}; }
    static CurveClass symbolic(long long genus) { return {Kind::Symbolic, genus}; }

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// Exceptional component: multiplicity m >= 1, inner rate q >= 1 with m*q integral.
struct Vertex {
    std::string id;
    long long m = 1;
    Rat q = 1;
    CurveClass curve_class;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// One intersection point of two components; the pair is unordered and repeated
// pairs encode several intersection points.
struct Edge {
    std::string a;
    std::string b;

    bool joins(const std::string& x, const std::string& y) const {
        return (a == x && b == y) || (a == y && b == x);
    }
    bool touches(const std::string& x) const { return a == x || b == x; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Weighted dual graph of a good resolution.
struct DualGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    const Vertex* find_vertex(const std::string& id) const;
    bool has_vertex(const std::string& id) const { return find_vertex(id) != nullptr; }
    // Number of edge endpoints at the vertex (a loop counts twice).
    int degree(const std::string& id) const;

    friend bool operator==(const DualGraph&, const DualGraph&) = default;
};

struct SyntaxError : Error {
    int line;
    SyntaxError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line(line) {}
};

struct DuplicateVertexId : Error {
    using Error::Error;
};

struct UnknownEndpoint : Error {
    using Error::Error;
};

struct UnknownVertex : Error {
    using Error::Error;
};

// Graph file format: a UTF-8 JSON object
//   { "vertices": [ {"id": str, "m": int, "q": "p/r" or int, "class": "rational" | "genus:<g>"} ],
//     "edges": [ ["idA", "idB"], ... ] }
// Repeated pairs in "edges" encode multiple intersection points.
DualGraph parse_graph(const std::string& text);
std::string serialize_graph(const DualGraph& g);

struct ValidationIssue {
    enum class Kind { RateBelowOne, NonIntegralMQ, AdjacentRateOne, LoopEdge };
    Kind kind;
    std::string detail;
};

struct ValidationWarning {
    enum class Kind { NoRateOneVertex, DisconnectedGraph };
    Kind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> violations;
    std::vector<ValidationWarning> warnings;
    bool ok() const { return violations.empty(); }
};

const char* to_string(ValidationIssue::Kind kind);
const char* to_string(ValidationWarning::Kind kind);

// Semantic checks; violations are data, not exceptions.
ValidationReport validate(const DualGraph& g);

// [E_v] as a class: (L+1)*Unit for a rational component, the curve symbol otherwise.
MotivicClass vertex_class(const Vertex& v);

// [E_v^0] = [E_v] - (number of intersection points on E_v) * Unit.
MotivicClass e0_class(const DualGraph& g, const std::string& vertex_id);

// lcm of all vertex multiplicities: every stratum's arithmetic progression divides it.
long long period(const DualGraph& g);

}  // namespace motdens
