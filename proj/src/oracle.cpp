#include "motdens/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <utility>
#include <vector>

namespace motdens {

namespace {

long long exponent_weight(const Vertex& v) {
    // a = m (q + 1); integral whenever m q is.
    return to_ll(Rat(v.m) * (v.q + 1));
}

// Sparse Laurent polynomial in L per class symbol: exponent -> coefficient.
using LaurentMap = std::map<ClassSymbol, std::map<long long, Rat>>;

void add_laurent(std::map<long long, Rat>& into, long long exponent, const Rat& c) {
    Rat& slot = into[exponent];
    slot += c;
    if (slot == 0) into.erase(exponent);
}

const PolyQ& polynomial_part(const RationalFunctionL& f) {
    if (!f.den().is_one())
        throw Error("internal: expected polynomial coefficient in component class");
    return f.num();
}

// Exact volume of the radius-n sphere as exponent/coefficient data, bypassing
// rational-function arithmetic. Every stratum lands at strictly negative exponents.
LaurentMap volume_coeffs(const DualGraph& g, long long n) {
    LaurentMap out;
    for (const Vertex& v : g.vertices) {
        if (n % v.m != 0) continue;
        long long base = -(exponent_weight(v) * (n / v.m)) - 2;
        MotivicClass e0 = e0_class(g, v.id);
        for (const auto& [sym, rf] : e0.terms()) {
            const PolyQ& p = polynomial_part(rf);
            auto& slot = out[sym];
            for (int j = 0; j <= p.degree(); ++j) {
                if (p.coeff(j) == 0) continue;
                add_laurent(slot, base + j + 1, p.coeff(j));   // L * p
                add_laurent(slot, base + j, -p.coeff(j));      // -p
            }
        }
    }
    for (const Edge& e : g.edges) {
        const Vertex& a = *g.find_vertex(e.a);
        const Vertex& b = *g.find_vertex(e.b);
        long long av = exponent_weight(a), aw = exponent_weight(b);
        auto& slot = out[ClassSymbol::unit()];
        for (long long k = 1; a.m * k + b.m <= n; ++k) {
            long long rem = n - a.m * k;
            if (rem % b.m != 0) continue;
            long long l = rem / b.m;
            long long base = -(av * k + aw * l + 2);
            // (L - 1)^2 at the base exponent
            add_laurent(slot, base + 2, Rat(1));
            add_laurent(slot, base + 1, Rat(-2));
            add_laurent(slot, base, Rat(1));
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.empty()) it = out.erase(it); else ++it;
    }
    return out;
}

MotivicClass from_laurent(const LaurentMap& m) {
    MotivicClass total;
    for (const auto& [sym, entries] : m) {
        if (entries.empty()) continue;
        long long emin = entries.begin()->first;
        long long shift = emin < 0 ? -emin : 0;
        std::vector<Rat> num(static_cast<size_t>(entries.rbegin()->first + shift) + 1, Rat(0));
        for (const auto& [e, c] : entries) num[static_cast<size_t>(e + shift)] = c;
        RationalFunctionL rf(PolyQ(std::move(num)),
                             PolyQ::monomial(Rat(1), static_cast<int>(shift)));
        total = mc_add(total, MotivicClass::term(sym, rf));
    }
    return total;
}

Rat slowest_decay(const DualGraph& g) {
    Rat alpha(1);
    bool found = false;
    for (const Vertex& v : g.vertices) {
        if (v.q > 1) {
            Rat a = v.q - 1;
            if (!found || a < alpha) alpha = a;
            found = true;
        }
    }
    return alpha;
}

}  // namespace

std::vector<StratumTerm> strata(const DualGraph& g) {
    std::vector<StratumTerm> out;
    for (const Vertex& v : g.vertices) {
        StratumTerm t;
        t.kind = StratumTerm::Kind::Vertex;
        t.v = v.id;
        t.m_v = v.m;
        t.a_v = exponent_weight(v);
        out.push_back(std::move(t));
    }
    for (const Edge& e : g.edges) {
        const Vertex& a = *g.find_vertex(e.a);
        const Vertex& b = *g.find_vertex(e.b);
        StratumTerm t;
        t.kind = StratumTerm::Kind::Edge;
        t.v = a.id;
        t.w = b.id;
        t.m_v = a.m;
        t.m_w = b.m;
        t.a_v = exponent_weight(a);
        t.a_w = exponent_weight(b);
        out.push_back(std::move(t));
    }
    return out;
}

MotivicClass vertex_stratum_volume(const Vertex& v, const MotivicClass& e0, long long n) {
    if (n < 1) throw InvalidIndex("sphere radius must be positive");
    if (n % v.m != 0) return MotivicClass();
    long long expn = exponent_weight(v) * (n / v.m) + 2;
    RationalFunctionL factor(PolyQ(std::vector<Rat>{Rat(-1), Rat(1)}),
                             PolyQ::monomial(Rat(1), static_cast<int>(expn)));
    return mc_scale(e0, factor);
}

MotivicClass edge_stratum_volume(const StratumTerm& t, long long n) {
    if (t.kind != StratumTerm::Kind::Edge)
        throw Error("edge_stratum_volume: vertex stratum passed");
    if (n < 1) throw InvalidIndex("sphere radius must be positive");
    LaurentMap m;
    auto& slot = m[ClassSymbol::unit()];
    for (long long k = 1; t.m_v * k + t.m_w <= n; ++k) {
        long long rem = n - t.m_v * k;
        if (rem % t.m_w != 0) continue;
        long long l = rem / t.m_w;
        long long base = -(t.a_v * k + t.a_w * l + 2);
        add_laurent(slot, base + 2, Rat(1));
        add_laurent(slot, base + 1, Rat(-2));
        add_laurent(slot, base, Rat(1));
    }
    if (slot.empty()) m.erase(ClassSymbol::unit());
    return from_laurent(m);
}

MotivicClass sphere_volume_surface(const DualGraph& g, long long n) {
    if (n < 1) throw InvalidIndex("sphere radius must be positive");
    return from_laurent(volume_coeffs(g, n));
}

MotivicClass theta_surface(const DualGraph& g, long long n) {
    MotivicClass vol = sphere_volume_surface(g, n);
    // divide by the sphere normalizer L^{-2n}(1 - L^{-2}) = (L^2 - 1) L^{-2n-2}
    RationalFunctionL factor(PolyQ::monomial(Rat(1), static_cast<int>(2 * n + 2)),
                             PolyQ(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}));
    return mc_scale(vol, factor);
}

LaurentTruncation theta_truncation(const DualGraph& g, long long n, int D) {
    if (n < 1) throw InvalidIndex("sphere radius must be positive");
    if (D < 0) throw InvalidIndex("precision must be nonnegative");
    LaurentTruncation out;
    out.precision = D;
    LaurentMap vol = volume_coeffs(g, n);
    long long shift = 2 * n + 2;
    for (const auto& [sym, entries] : vol) {
        // theta = sum_e c_e L^{e + shift} / (L^2 - 1); dividing by L^2 - 1 turns the
        // monomial L^s into sum_{j >= 1} L^{s - 2j}, so the coefficient at exponent t
        // is the sum of c_e over shifted exponents s >= t + 2 with s == t (mod 2).
        std::vector<std::pair<long long, Rat>> shifted;
        shifted.reserve(entries.size());
        for (auto it = entries.rbegin(); it != entries.rend(); ++it)
            shifted.emplace_back(it->first + shift, it->second);
        long long t_start = 0;
        if (!shifted.empty() && shifted.front().first - 2 > 0)
            t_start = shifted.front().first - 2;
        Rat acc[2] = {Rat(0), Rat(0)};
        size_t idx = 0;
        for (long long t = t_start; t >= -D; --t) {
            while (idx < shifted.size() && shifted[idx].first >= t + 2) {
                acc[((shifted[idx].first % 2) + 2) % 2] += shifted[idx].second;
                ++idx;
            }
            const Rat& c = acc[((t % 2) + 2) % 2];
            if (c != 0) out.coefficients[{sym, static_cast<int>(t)}] = c;
        }
    }
    return out;
}

LaurentTruncation limit_along(const DualGraph& g, long long c, long long e, int D, int W,
                              long long n_max, ResidueLimit* meta) {
    if (e < 1) throw InvalidIndex("modulus must be positive");
    if (W < 1) throw InvalidIndex("window must be positive");
    if (D < 0) throw InvalidIndex("precision must be nonnegative");
    c = ((c % e) + e) % e;
    long long n0 = (c == 0) ? e : c;
    LaurentTruncation prev;
    int run = 0;
    long long run_start = n0;
    for (long long n = n0; n <= n_max; n += e) {
        LaurentTruncation cur = theta_truncation(g, n, D);
        if (run > 0 && cur == prev) {
            ++run;
        } else {
            run = 1;
            run_start = n;
            prev = std::move(cur);
        }
        if (run >= W) {
            if (meta) {
                meta->stabilized_at = run_start;
                meta->window = run;
                meta->limit = prev;
            }
            return prev;
        }
    }
    throw NoStabilization(n_max, slowest_decay(g));
}

ThetaLimitReport mean_value_surface(const DualGraph& g, int D, int W, long long n_max,
                                    long long modulus) {
    ThetaLimitReport report;
    report.modulus = modulus > 0 ? modulus : period(g);
    report.precision = D;
    report.window = W;
    report.n_max = n_max;
    LaurentTruncation sum;
    sum.precision = D;
    for (long long c = 0; c < report.modulus; ++c) {
        ResidueLimit meta;
        LaurentTruncation lim = limit_along(g, c, report.modulus, D, W, n_max, &meta);
        sum = lt_add(sum, lim);
        report.limits.push_back(std::move(meta));
    }
    report.mean = lt_scale(sum, Rat(1, report.modulus));
    return report;
}

MotivicClass sphere_volume_curve(const CurveBranchData& b, long long n) {
    if (n < 1) throw InvalidIndex("sphere radius must be positive");
    long long count = 0;
    for (long long N : b.mults) {
        if (N < 1) throw Error("branch multiplicity must be positive");
        if (n % N == 0) ++count;
    }
    if (count == 0) return MotivicClass();
    // each contributing branch meets the sphere in a coset of volume L^{-n-1}(L - 1)
    RationalFunctionL factor(PolyQ(std::vector<Rat>{Rat(-count), Rat(count)}),
                             PolyQ::monomial(Rat(1), static_cast<int>(n + 1)));
    return MotivicClass(factor);
}

MotivicClass theta_curve(const CurveBranchData& b, long long n) {
    if (n < 1) throw InvalidIndex("sphere radius must be positive");
    long long count = 0;
    for (long long N : b.mults) {
        if (N < 1) throw Error("branch multiplicity must be positive");
        if (n % N == 0) ++count;
    }
    return MotivicClass(Rat(count));
}

CurveMeanReport mean_value_curve_report(const CurveBranchData& b) {
    CurveMeanReport report;
    long long e = 1;
    for (long long N : b.mults) {
        if (N < 1) throw Error("branch multiplicity must be positive");
        e = std::lcm(e, N);
    }
    report.modulus = e;
    Rat total(0);
    for (long long c = 0; c < e; ++c) {
        long long count = 0;
        for (long long N : b.mults)
            if (c % N == 0) ++count;
        report.residue_counts.push_back(count);
        total += count;
    }
    report.mean = total / e;
    return report;
}

Rat mean_value_curve(const CurveBranchData& b) { return mean_value_curve_report(b).mean; }

CheckReport cross_check(const DualGraph& g, int D, int W, long long n_max) {
    using clock = std::chrono::steady_clock;
    CheckReport report;
    report.precision = D;
    report.window = W;
    report.n_max = n_max;

    auto t0 = clock::now();
    MotivicClass density = surface_density(g);
    report.formula = expand(density, D);
    auto t1 = clock::now();
    report.formula_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    auto t2 = clock::now();
    report.oracle = mean_value_surface(g, D, W, n_max);
    auto t3 = clock::now();
    report.oracle_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();

    report.match = (report.formula == report.oracle.mean);
    return report;
}

}  // namespace motdens
