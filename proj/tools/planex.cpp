#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "planex/canonical.hpp"
#include "planex/constructions.hpp"
#include "planex/graph6.hpp"
#include "planex/patterns.hpp"
#include "planex/planarity.hpp"
#include "planex/search.hpp"
#include "planex/spectral.hpp"
#include "planex/verify.hpp"

using json = nlohmann::ordered_json;
using namespace planex;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Every command emits one manifest object: same inputs, same digest.
json manifest(const std::string& command, json parameters, json result, double elapsed,
              std::optional<std::uint64_t> seed = std::nullopt) {
    json m;
    m["command"] = command;
    m["parameters"] = std::move(parameters);
    m["version"] = kVersion;
    if (seed) m["seed"] = *seed;
    m["elapsed_seconds"] = elapsed;
    m["result"] = std::move(result);
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", (unsigned long long)fnv1a(m["result"].dump()));
    m["digest"] = digest;
    return m;
}

void emit(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

std::optional<Pattern> parse_pattern(const std::string& text) {
    if (text.rfind("K1P", 0) == 0) {
        int order = std::atoi(text.c_str() + 3);
        if (order < 3) return std::nullopt;
        return Pattern::apex_path(order - 1);  // K1P<j> forbids K_1 + P_j
    }
    std::size_t c = text.find('C');
    if (c == std::string::npos) return std::nullopt;
    std::string t_part = text.substr(0, c);
    std::string l_part = text.substr(c + 1);
    int t = t_part.empty() ? 1 : std::atoi(t_part.c_str());
    if (t < 1) return std::nullopt;
    if (l_part.empty()) {
        if (t < 1) return std::nullopt;
        return Pattern::disjoint_any_cycles(t);
    }
    int ell = std::atoi(l_part.c_str());
    if (ell < 3) return std::nullopt;
    if (t == 1) return Pattern::cycle(ell);
    return Pattern::disjoint_cycles(t, ell);
}

json pattern_witness_json(const PatternWitness& w) {
    json arr = json::array();
    for (const auto& piece : w.pieces) arr.push_back(piece);
    return arr;
}

json report_json(const SearchReport& r) {
    json j;
    j["scope"] = to_string(r.scope);
    j["n"] = r.n;
    if (r.pattern) j["pattern"] = to_string(*r.pattern);
    j["objective"] = r.objective == Objective::kEdges ? "edges" : "rho";
    if (r.objective == Objective::kEdges) j["optimum"] = r.optimum_edges;
    else j["optimum"] = r.optimum_rho;
    j["witnesses"] = r.witnesses;
    if (!r.forests.empty()) {
        json fs = json::array();
        for (const auto& h : r.forests) fs.push_back(h.parts);
        j["forests"] = fs;
    }
    if (r.prediction) {
        j["prediction"] = r.prediction->parts;
        j["prediction_matched"] = r.prediction_matched;
    }
    j["graphs_visited"] = r.graphs_visited;
    j["capped"] = r.capped;
    return j;
}

json construction_json(const ConstructionReport& r) {
    json j;
    j["family"] = to_string(r.family.family);
    j["n"] = r.family.n;
    if (r.family.ell) j["ell"] = r.family.ell;
    j["order"] = r.graph.order();
    j["edges"] = r.edge_count;
    if (r.formula_value) j["formula_value"] = *r.formula_value;
    json checks = json::array();
    for (const auto& [name, ok] : r.checks) checks.push_back({{"name", name}, {"pass", ok}});
    j["checks"] = checks;
    j["graph6"] = graph6_encode(r.graph);
    j["canonical_graph6"] = canonical_form(r.graph);
    return j;
}

std::vector<Graph> load_graphs(const std::string& g6, const std::string& file) {
    std::vector<Graph> out;
    if (!g6.empty()) out.push_back(graph6_decode(g6));
    if (!file.empty()) {
        std::ifstream f(file);
        if (!f) throw std::invalid_argument("cannot open graph6 file: " + file);
        std::string line;
        while (std::getline(f, line))
            if (!line.empty()) out.push_back(graph6_decode(line));
    }
    if (out.empty()) throw std::invalid_argument("no input graph: pass --graph6 or --file");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planex: planar extremal graph toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a named extremal family member");
    std::string family_name;
    int opt_n = 0, opt_ell = 0;
    std::uint64_t opt_seed = 0;
    bool seed_given = false;
    std::string out_path, witness_path;
    construct->add_option("family", family_name, "family name")->required();
    construct->add_option("--n", opt_n, "vertex count")->required();
    construct->add_option("--ell", opt_ell, "cycle length parameter");
    construct->add_option("--seed", opt_seed, "seed for randomized growth (gn)")
        ->each([&](const std::string&) { seed_given = true; });
    construct->add_option("--out", out_path, "write the JSON report here");

    // check
    auto* check = app.add_subcommand("check", "test a graph for a forbidden pattern");
    std::string pattern_text, g6_text, g6_file;
    check->add_option("--pattern", pattern_text, "C<l> | <t>C<l> | <t>C | K1P<j>")->required();
    check->add_option("--graph6", g6_text, "graph6 line");
    check->add_option("--file", g6_file, "file of graph6 lines");
    check->add_option("--out", out_path, "write the JSON report here");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "spectral radius with Perron diagnostics");
    double opt_tol = 1e-10;
    bool want_vector = false;
    spectral->add_option("--graph6", g6_text, "graph6 line");
    spectral->add_option("--file", g6_file, "file of graph6 lines");
    spectral->add_option("--tol", opt_tol, "iteration tolerance");
    spectral->add_flag("--vector", want_vector, "include the Perron vector");
    spectral->add_option("--out", out_path, "write the JSON report here");

    // turan
    auto* turan = app.add_subcommand("turan", "exact Turan number by exhaustive enumeration");
    std::string scope_name = "planar";
    int opt_jobs = 1;
    turan->add_option("--scope", scope_name, "planar | outerplanar | planar-mindeg3");
    turan->add_option("--n", opt_n, "vertex count")->required();
    turan->add_option("--pattern", pattern_text, "forbidden pattern")->required();
    turan->add_option("--jobs", opt_jobs, "worker threads");
    turan->add_option("--out", out_path, "write the JSON report here");
    turan->add_option("--witness-file", witness_path, "write witness graph6 lines here");

    // spex
    auto* spex = app.add_subcommand("spex", "maximum spectral radius over pattern-free graphs");
    double spex_tol = 1e-8;
    spex->add_option("--scope", scope_name, "planar | outerplanar | planar-mindeg3 | k2lf");
    spex->add_option("--n", opt_n, "vertex count")->required();
    spex->add_option("--pattern", pattern_text, "forbidden pattern")->required();
    spex->add_option("--tol", spex_tol, "tie margin on rho");
    spex->add_option("--jobs", opt_jobs, "worker threads");
    spex->add_option("--out", out_path, "write the JSON report here");
    spex->add_option("--witness-file", witness_path, "write witness graph6 lines here");

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    std::string theorem_label = "all";
    std::vector<int> criteria_ids;
    int n_max = 0;
    verify->add_option("--theorem", theorem_label, "theorem/lemma label, e.g. 1.4 (default: all)");
    verify->add_option("--criterion", criteria_ids, "explicit criterion ids (1..11)");
    verify->add_option("--n-max", n_max, "trim exhaustive sweeps to this order");
    verify->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

    try {
        if (construct->parsed()) {
            auto family = family_from_string(family_name);
            json params{{"family", family_name}, {"n", opt_n}, {"ell", opt_ell}};
            ConstructionReport report;
            if (family) {
                report = named_extremal({*family, opt_n, opt_ell});
            } else if (family_name == "gn") {
                if (!seed_given) throw std::invalid_argument("gn requires an explicit --seed");
                std::mt19937_64 rng(opt_seed);
                std::vector<std::pair<int, int>> att;
                for (int i = 0; i < opt_n - 5; ++i) {
                    int cur = 5 + i;
                    for (int tries = 0;; ++tries) {
                        if (tries >= 500) throw std::runtime_error("gn: no planar attachment found");
                        int x = (int)(rng() % cur), y = (int)(rng() % cur);
                        if (x == y) continue;
                        att.push_back({std::min(x, y), std::max(x, y)});
                        try {
                            gn_member(cur + 1, att);
                            break;
                        } catch (const std::invalid_argument&) {
                            att.pop_back();
                        }
                    }
                }
                Graph g = gn_member(opt_n, att);
                report.graph = g;
                report.family = {Family::kGstar2C, opt_n, 0};
                report.edge_count = g.size();
                report.checks.push_back({"planar growth", true});
                json result = json{{"family", "gn"},
                                   {"n", opt_n},
                                   {"edges", report.edge_count},
                                   {"graph6", graph6_encode(g)},
                                   {"canonical_graph6", canonical_form(g)},
                                   {"in_gstar_family", is_gstar_member(g)}};
                emit(manifest("construct", params, result, elapsed(), opt_seed), out_path);
                return kExitOk;
            } else {
                throw std::invalid_argument("unknown family: " + family_name);
            }
            emit(manifest("construct", params, construction_json(report), elapsed()), out_path);
            return kExitOk;
        }

        if (check->parsed()) {
            auto pattern = parse_pattern(pattern_text);
            if (!pattern) throw std::invalid_argument("bad pattern: " + pattern_text);
            json results = json::array();
            bool all_free = true;
            for (const Graph& g : load_graphs(g6_text, g6_file)) {
                PatternWitness w;
                bool contains = contains_pattern(g, *pattern, &w);
                all_free = all_free && !contains;
                json one{{"graph6", graph6_encode(g)}, {"pattern", to_string(*pattern)}, {"free", !contains}};
                if (contains) {
                    if (pattern->tag == PatternTag::kApexPath)
                        one["witness"] = {{"apex", w.pieces[0][0]}, {"path", w.pieces[1]}};
                    else
                        one["witness"] = {{"cycles", pattern_witness_json(w)}};
                }
                results.push_back(one);
            }
            emit(manifest("check", json{{"pattern", pattern_text}}, results, elapsed()), out_path);
            return kExitOk;
        }

        if (spectral->parsed()) {
            json results = json::array();
            for (const Graph& g : load_graphs(g6_text, g6_file)) {
                SpectralResult sr = spectral_radius(g, {opt_tol, 1000000});
                json one{{"graph6", graph6_encode(g)},
                         {"n", g.order()},
                         {"edges", g.size()},
                         {"rho", sr.rho},
                         {"residual", sr.residual},
                         {"iterations", sr.iterations},
                         {"edgeless", sr.edgeless}};
                if (want_vector) one["perron_vector"] = sr.x;
                results.push_back(one);
            }
            emit(manifest("spectral", json{{"tol", opt_tol}}, results, elapsed()), out_path);
            return kExitOk;
        }

        if (turan->parsed() || spex->parsed()) {
            auto pattern = parse_pattern(pattern_text);
            if (!pattern) throw std::invalid_argument("bad pattern: " + pattern_text);
            SearchReport report;
            if (turan->parsed()) {
                Scope scope = scope_name == "outerplanar" ? Scope::kOuterplanar
                              : scope_name == "planar-mindeg3" ? Scope::kPlanarMinDeg3
                                                               : Scope::kPlanar;
                report = turan_number(scope, opt_n, *pattern, opt_jobs);
            } else if (scope_name == "k2lf") {
                FreenessMode mode;
                int ell;
                if (pattern->tag == PatternTag::kCycle) {
                    mode = FreenessMode::kSingle;
                    ell = pattern->ell;
                } else if (pattern->tag == PatternTag::kDisjointCycles && pattern->t == 2) {
                    mode = FreenessMode::kDouble;
                    ell = pattern->ell;
                } else {
                    throw std::invalid_argument("k2lf scope supports C<l> and 2C<l> patterns");
                }
                report = linear_forest_spex(opt_n, ell, mode, spex_tol);
            } else {
                Scope scope = scope_name == "outerplanar" ? Scope::kOuterplanar
                              : scope_name == "planar-mindeg3" ? Scope::kPlanarMinDeg3
                                                               : Scope::kPlanar;
                report = spex_argmax(scope, opt_n, *pattern, spex_tol, opt_jobs);
            }
            if (!witness_path.empty()) {
                std::ofstream wf(witness_path);
                for (const auto& w : report.witnesses) wf << w << "\n";
            }
            json params{{"scope", scope_name}, {"n", opt_n}, {"pattern", pattern_text}};
            emit(manifest(turan->parsed() ? "turan" : "spex", params, report_json(report), elapsed()),
                 out_path);
            return report.capped ? kExitResourceCap : kExitOk;
        }

        if (verify->parsed()) {
            std::vector<int> ids = criteria_ids;
            if (ids.empty()) {
                ids = criteria_for_label(theorem_label);
                if (ids.size() == 1 && ids[0] == -1)
                    throw std::invalid_argument("unknown theorem label: " + theorem_label);
            }
            auto results = run_acceptance(ids, n_max);
            json arr = json::array();
            bool all_pass = true;
            for (const auto& cr : results) {
                arr.push_back(json{{"criterion", cr.id}, {"name", cr.name}, {"pass", cr.passed}, {"detail", cr.detail}});
                all_pass = all_pass && cr.passed;
                std::cerr << "criterion " << cr.id << " [" << cr.name << "] "
                          << (cr.passed ? "PASS" : "FAIL") << "\n";
            }
            json params{{"theorem", theorem_label}, {"n_max", n_max}};
            emit(manifest("verify", params, arr, elapsed()), out_path);
            return all_pass ? kExitOk : kExitCheckFailed;
        }
    } catch (const Graph6ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::logic_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
