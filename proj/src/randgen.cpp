#include "motdens/randgen.hpp"

#include <string>

namespace motdens {

namespace {

// Engine-modulo draw rather than uniform_int_distribution: the distribution's
// output sequence is implementation-defined, and seeded reproducibility across
// toolchains matters more here than perfect uniformity.
long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

}  // namespace

DualGraph random_admissible_graph(std::mt19937_64& rng, int max_vertices, int max_mult) {
    if (max_vertices < 1 || max_mult < 1)
        throw Error("random_admissible_graph: bounds must be positive");
    int n = static_cast<int>(rand_range(rng, 1, max_vertices));

    DualGraph g;
    std::vector<int> parent(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        Vertex v;
        v.id = "v" + std::to_string(i + 1);
        v.m = rand_range(rng, 1, max_mult);
        g.vertices.push_back(v);
        if (i > 0) {
            parent[static_cast<size_t>(i)] = static_cast<int>(rand_range(rng, 0, i - 1));
            g.edges.push_back(
                {g.vertices[static_cast<size_t>(parent[static_cast<size_t>(i)])].id, v.id});
        }
    }

    // Rates q = 1 + j/m with j in [0, 2m]; j = 0 (a rate-one vertex) is blocked when
    // the parent already took rate one, which keeps rate-one vertices non-adjacent
    // since every edge of the tree joins a vertex to an earlier one.
    for (int i = 0; i < n; ++i) {
        Vertex& v = g.vertices[static_cast<size_t>(i)];
        bool parent_rate_one =
            i > 0 && g.vertices[static_cast<size_t>(parent[static_cast<size_t>(i)])].q == 1;
        long long j;
        if (!parent_rate_one && rand_range(rng, 0, 1) == 0) {
            j = 0;
        } else {
            j = rand_range(rng, 1, 2 * v.m);
        }
        v.q = Rat(v.m + j, v.m);
        if (v.q > 1 && rand_range(rng, 0, 4) == 0) {
            v.curve_class = CurveClass::symbolic(rand_range(rng, 1, 2));
        }
    }

    // Occasional duplicate intersections: each tree edge may appear twice.
    size_t tree_edges = g.edges.size();
    for (size_t i = 0; i < tree_edges; ++i) {
        if (rand_range(rng, 0, 9) < 3) g.edges.push_back(g.edges[i]);
    }
    return g;
}

}  // namespace motdens
