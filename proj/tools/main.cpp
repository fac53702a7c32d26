#include "motdens/blowup.hpp"
#include "motdens/density.hpp"
#include "motdens/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace motdens;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
    int precision = 12;
    int window = 3;
    long long nmax = 60;  // multiplier of the graph period e
    bool machine = false;
    bool rationalize = false;
    std::uint64_t seed = 0;
    bool oracle = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json config_json(const RunConfig& cfg) {
    return json{{"precision", cfg.precision},
                {"window", cfg.window},
                {"nmax", cfg.nmax},
                {"seed", cfg.seed}};
}

void print_config(const RunConfig& cfg) {
    std::cout << "config: precision=" << cfg.precision << " window=" << cfg.window
              << " nmax=" << cfg.nmax << " seed=" << cfg.seed << "\n";
}

std::string coeff_string(const RationalFunctionL& f) {
    return canonical_string(MotivicClass(f));
}

std::string symbol_string(const ClassSymbol& s) {
    return s.kind == ClassSymbol::Kind::Unit ? "1" : "[" + s.id + "]";
}

json truncation_json(const LaurentTruncation& t) {
    json terms = json::array();
    for (const auto& [key, c] : t.coefficients) {
        terms.push_back(json{{"symbol", symbol_string(key.first)},
                             {"exponent", key.second},
                             {"coeff", format_rational(c)}});
    }
    return json{{"precision", t.precision}, {"terms", terms}};
}

json class_json(const MotivicClass& a) {
    json terms = json::array();
    for (const auto& [sym, rf] : a.terms()) {
        terms.push_back(json{{"symbol", symbol_string(sym)}, {"coeff", coeff_string(rf)}});
    }
    return json{{"value", canonical_string(a)}, {"terms", terms}};
}

// Replace every curve symbol by the rational curve's class L + 1.
MotivicClass rationalized(const MotivicClass& a) {
    RationalFunctionL l_plus_1(PolyQ(std::vector<Rat>{Rat(1), Rat(1)}), PolyQ(Rat(1)));
    MotivicClass out;
    for (const auto& [sym, rf] : a.terms()) {
        if (sym.kind == ClassSymbol::Kind::Unit) {
            out = mc_add(out, MotivicClass(rf));
        } else {
            out = mc_add(out, MotivicClass(rf * l_plus_1));
        }
    }
    return out;
}

int report_validation(const ValidationReport& report, const RunConfig& cfg,
                      const char* command, json* extra = nullptr) {
    if (cfg.machine) {
        json issues = json::array();
        for (const auto& v : report.violations)
            issues.push_back(json{{"kind", to_string(v.kind)}, {"detail", v.detail}});
        json warnings = json::array();
        for (const auto& w : report.warnings)
            warnings.push_back(json{{"kind", to_string(w.kind)}, {"detail", w.detail}});
        json out{{"command", command},
                 {"config", config_json(cfg)},
                 {"violations", issues},
                 {"warnings", warnings},
                 {"ok", report.ok()}};
        if (extra) *extra = std::move(out);
        else std::cout << out.dump(2) << "\n";
    } else {
        print_config(cfg);
        std::cout << "violations: " << report.violations.size() << "\n";
        for (const auto& v : report.violations)
            std::cout << "  " << to_string(v.kind) << ": " << v.detail << "\n";
        std::cout << "warnings: " << report.warnings.size() << "\n";
        for (const auto& w : report.warnings)
            std::cout << "  " << to_string(w.kind) << ": " << w.detail << "\n";
        std::cout << "result: " << (report.ok() ? "ok" : "invalid") << "\n";
    }
    return report.ok() ? kExitOk : kExitDomain;
}

int cmd_validate(const std::string& path, const RunConfig& cfg) {
    DualGraph g = parse_graph(read_file(path));
    return report_validation(validate(g), cfg, "validate");
}

int cmd_density(const std::string& path, const RunConfig& cfg) {
    DualGraph g = parse_graph(read_file(path));
    ValidationReport report = validate(g);
    if (!report.ok()) {
        for (const auto& v : report.violations)
            std::cerr << to_string(v.kind) << ": " << v.detail << "\n";
        return kExitDomain;
    }
    for (const auto& w : report.warnings)
        std::cerr << "warning: " << to_string(w.kind) << ": " << w.detail << "\n";
    MotivicClass d = surface_density(g);
    if (cfg.rationalize) d = rationalized(d);
    if (cfg.machine) {
        json out{{"command", "density"},
                 {"config", config_json(cfg)},
                 {"density", class_json(d)}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_config(cfg);
        std::cout << canonical_string(d) << "\n";
    }
    return kExitOk;
}

CurveBranchData parse_mult_list(const std::string& text) {
    CurveBranchData b;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &pos);
        } catch (const std::exception&) {
            throw SyntaxError(1, "not an integer: '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
            ++pos;
        if (pos != token.size())
            throw SyntaxError(1, "not an integer: '" + token + "'");
        b.mults.push_back(value);
    }
    if (b.mults.empty()) throw SyntaxError(1, "empty multiplicity list");
    return b;
}

int cmd_curve(const std::string& list, const RunConfig& cfg) {
    CurveBranchData b = parse_mult_list(list);
    Rat density = curve_density(b);  // rejects non-positive multiplicities
    bool match = true;
    CurveMeanReport rep;
    if (cfg.oracle) {
        rep = mean_value_curve_report(b);
        match = (rep.mean == density);
    }
    if (cfg.machine) {
        json out{{"command", "curve"},
                 {"config", config_json(cfg)},
                 {"density", format_rational(density)}};
        if (cfg.oracle) {
            out["oracle"] = json{{"mean", format_rational(rep.mean)},
                                 {"modulus", rep.modulus},
                                 {"residue_counts", rep.residue_counts},
                                 {"match", match}};
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (cfg.oracle) {
            std::cout << format_rational(density) << " (oracle: " << format_rational(rep.mean)
                      << (match ? ", match)" : ", MISMATCH)") << "\n";
        } else {
            std::cout << format_rational(density) << "\n";
        }
    }
    return match ? kExitOk : kExitDomain;
}

int cmd_oracle(const std::string& path, const RunConfig& cfg) {
    DualGraph g = parse_graph(read_file(path));
    ValidationReport report = validate(g);
    if (!report.ok()) {
        for (const auto& v : report.violations)
            std::cerr << to_string(v.kind) << ": " << v.detail << "\n";
        return kExitDomain;
    }
    long long e = period(g);
    CheckReport check = cross_check(g, cfg.precision, cfg.window, cfg.nmax * e);
    if (cfg.machine) {
        json limits = json::array();
        for (size_t c = 0; c < check.oracle.limits.size(); ++c) {
            const ResidueLimit& rl = check.oracle.limits[c];
            limits.push_back(json{{"residue", c},
                                  {"stabilized_at", rl.stabilized_at},
                                  {"window", rl.window}});
        }
        json out{{"command", "oracle"},
                 {"config", config_json(cfg)},
                 {"formula", truncation_json(check.formula)},
                 {"oracle", json{{"modulus", check.oracle.modulus},
                                 {"mean", truncation_json(check.oracle.mean)},
                                 {"limits", limits}}},
                 {"match", check.match}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_config(cfg);
        std::cout << "formula: " << truncation_string(check.formula) << "\n";
        std::cout << "oracle:  " << truncation_string(check.oracle.mean) << "  [modulus "
                  << check.oracle.modulus << "]\n";
        std::cout << "match: " << (check.match ? "yes" : "no") << "\n";
        std::cout << "timing: formula " << check.formula_ms << " ms, oracle "
                  << check.oracle_ms << " ms\n";
    }
    return check.match ? kExitOk : kExitDomain;
}

int cmd_blowup(const std::string& script_path, int random_steps, const RunConfig& cfg) {
    BlowupState state;
    if (!script_path.empty()) {
        std::vector<ScriptOp> ops = parse_blowup_script(read_file(script_path));
        state = apply_script(init_smooth(), ops);
    } else {
        state = random_blowup_sequence(cfg.seed, random_steps).back();
    }
    bool identity = check_smooth_identity(state);
    if (cfg.machine) {
        json table = json::array();
        for (const Vertex& v : state.graph.vertices) {
            table.push_back(json{{"id", v.id},
                                 {"m", v.m},
                                 {"q", format_rational(v.q)},
                                 {"k", state.k.at(v.id)},
                                 {"mather_log", mather_log(state, v.id)}});
        }
        json out{{"command", "blowup"},
                 {"config", config_json(cfg)},
                 {"graph", json::parse(serialize_graph(state.graph))},
                 {"table", table},
                 {"identity", identity}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_config(cfg);
        std::cout << serialize_graph(state.graph);
        std::cout << "id m q k k^log\n";
        for (const Vertex& v : state.graph.vertices) {
            std::cout << v.id << " " << v.m << " " << format_rational(v.q) << " "
                      << state.k.at(v.id) << " " << mather_log(state, v.id) << "\n";
        }
        std::cout << "identity: " << (identity ? "OK" : "FAILED") << "\n";
    }
    return identity ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"motdens: motivic local density of curve and surface singularities\n"
                 "from weighted dual resolution graphs, with a brute-force cross-check."};
    app.require_subcommand(1);
    app.footer("exit codes: 0 ok, 1 domain violation, 2 I/O or parse error, 3 budget exhausted");

    RunConfig cfg;
    std::string graph_path;
    std::string mult_list;
    std::string script_path;
    int random_steps = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--machine", cfg.machine, "machine-readable output (deterministic)");
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a graph file");
    validate_cmd->add_option("path", graph_path, "graph file")->required();
    add_common(validate_cmd);

    CLI::App* density_cmd =
        app.add_subcommand("density", "closed-form surface density of a graph");
    density_cmd->add_option("path", graph_path, "graph file")->required();
    density_cmd->add_flag("--rationalize", cfg.rationalize,
                          "substitute curve symbols by L + 1");
    add_common(density_cmd);

    CLI::App* curve_cmd =
        app.add_subcommand("curve", "curve density from branch multiplicities");
    curve_cmd->add_option("mults", mult_list, "comma-separated branch multiplicities")
        ->required();
    curve_cmd->add_flag("--oracle", cfg.oracle, "cross-check against the mean value");
    add_common(curve_cmd);

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "cross-check formula vs brute-force mean value");
    oracle_cmd->add_option("path", graph_path, "graph file")->required();
    oracle_cmd->add_option("--precision", cfg.precision, "truncation precision D")
        ->check(CLI::Range(0, 1 << 20));
    oracle_cmd->add_option("--window", cfg.window, "stabilization window W")
        ->check(CLI::Range(2, 1 << 20));
    oracle_cmd->add_option("--nmax", cfg.nmax, "radius budget as a multiple of the period e")
        ->check(CLI::Range(1LL, 1LL << 40));
    add_common(oracle_cmd);

    CLI::App* blowup_cmd =
        app.add_subcommand("blowup", "run a blowup script from the smooth germ");
    CLI::Option* script_opt = blowup_cmd->add_option("script", script_path, "blowup script file");
    CLI::Option* random_opt =
        blowup_cmd->add_option("--random", random_steps, "random sequence of this many steps")
            ->check(CLI::Range(0, 1 << 20));
    blowup_cmd->add_option("--seed", cfg.seed, "seed for --random");
    script_opt->excludes(random_opt);
    add_common(blowup_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitIo;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(graph_path, cfg);
        if (app.got_subcommand(density_cmd)) return cmd_density(graph_path, cfg);
        if (app.got_subcommand(curve_cmd)) return cmd_curve(mult_list, cfg);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle(graph_path, cfg);
        if (app.got_subcommand(blowup_cmd)) {
            if (script_path.empty() && random_opt->count() == 0) {
                std::cerr << "blowup: provide a script file or --random\n";
                return kExitIo;
            }
            return cmd_blowup(script_path, random_steps, cfg);
        }
    } catch (const NoStabilization& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DuplicateVertexId& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const UnknownEndpoint& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
