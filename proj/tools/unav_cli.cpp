// Command-line entry point: construct, detect, search, balance, multicolor,
// verify. Emits JSON (or graph6/DOT) on stdout; wall-clock timings go to
// stderr so output files stay byte-stable across runs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "unav/algos.hpp"
#include "unav/balance.hpp"
#include "unav/canonical.hpp"
#include "unav/coloring.hpp"
#include "unav/constructions.hpp"
#include "unav/graph.hpp"
#include "unav/graph6.hpp"
#include "unav/json_io.hpp"
#include "unav/multicolor.hpp"
#include "unav/patterns.hpp"
#include "unav/search.hpp"
#include "unav/verify.hpp"

namespace {

using unav::json;

int default_workers() {
    if (const char* env = std::getenv("UNAV_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

unav::SimpleGraph parse_graph_ref(const std::string& ref) {
    if (ref.rfind("graph6:", 0) == 0) return unav::graph6_decode(ref.substr(7));
    if (ref.rfind("g6:", 0) == 0) return unav::graph6_decode(ref.substr(3));
    if (auto named = unav::parse_named(ref)) return unav::generate_named(*named);
    // Fall back to treating the string as bare graph6.
    return unav::graph6_decode(ref);
}

unav::PatternFamily parse_family(const std::string& spec) {
    if (spec.rfind("F:", 0) == 0) {
        int s, t;
        if (std::sscanf(spec.c_str() + 2, "%d,%d", &s, &t) != 2)
            throw CLI::ValidationError("family", "expected F:s,t");
        return unav::family_F(s, t);
    }
    if (spec.rfind("L:", 0) == 0) {
        int r, s, t;
        if (std::sscanf(spec.c_str() + 2, "%d,%d,%d", &r, &s, &t) != 3)
            throw CLI::ValidationError("family", "expected L:r,s,t");
        return unav::family_L(r, s, t);
    }
    if (spec.rfind("half:", 0) == 0) return unav::family_half(parse_graph_ref(spec.substr(5)));
    if (spec.rfind("one:", 0) == 0)
        return unav::family_single(parse_graph_ref(spec.substr(4)), unav::Containment::induced_mono,
                                   spec.substr(4));
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw CLI::ValidationError("family", "cannot open family file");
        json j;
        in >> j;
        unav::PatternFamily fam;
        fam.name = j.value("name", "file");
        for (const auto& m : j.at("members")) {
            unav::Containment mode = unav::Containment::induced_mono;
            if (m.value("mode", "induced") == std::string("weak"))
                mode = unav::Containment::weakly_induced_mono;
            fam.members.push_back({parse_graph_ref(m.at("graph").get<std::string>()), mode});
        }
        return fam;
    }
    throw CLI::ValidationError("family",
                               "expected F:s,t | L:r,s,t | half:<graph> | one:<graph> | file:path");
}

unav::TwoColoring load_two_coloring(const std::string& path, const std::string& g6, int pad_n) {
    if (!g6.empty()) {
        unav::SimpleGraph red = unav::graph6_decode(g6);
        int n = pad_n > 0 ? pad_n : red.n;
        unav::SimpleGraph padded(n);
        for (auto [u, v] : red.edges()) padded.add_edge(u, v);
        return unav::TwoColoring(n, padded);
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("coloring", "cannot open " + path);
    json j;
    in >> j;
    return unav::two_coloring_from_json(j);
}

unav::KColoring load_k_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("coloring", "cannot open " + path);
    json j;
    in >> j;
    return unav::kcoloring_from_json(j);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        out << text << "\n";
    }
}

constexpr const char* kVersion = "0.1.0";

// Reproducibility manifest, reported on stderr: identical manifests yield
// byte-identical stdout, and worker count never influences stdout at all.
void report_manifest(const std::string& subcommand, const json& params, int workers,
                     uint64_t seed, const std::string& out_path) {
    json m;
    m["subcommand"] = subcommand;
    m["parameters"] = params;
    m["workers"] = workers;
    m["seed"] = seed;
    m["output"] = out_path.empty() ? "-" : out_path;
    m["version"] = kVersion;
    std::cerr << "manifest: " << m.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation and verification of unavoidable color patterns in edge colorings"};
    app.require_subcommand(1);
    app.fallthrough(); // let --out appear after any subcommand
    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* construct = app.add_subcommand("construct", "generate a named coloring or graph");
    std::string kind, emit_format = "json";
    int cn = 0, cr = 2, cs = 2, ct = 3, cq = 2, ck = 3;
    construct
        ->add_option("--kind", kind, "matching|star|blowup|layered|incidence|bipartite-free|multicolor")
        ->required();
    construct->add_option("--n", cn, "vertex count");
    construct->add_option("--r", cr, "r parameter");
    construct->add_option("--s", cs, "s parameter");
    construct->add_option("--t", ct, "t parameter");
    construct->add_option("--q", cq, "prime order for incidence constructions");
    construct->add_option("--k", ck, "color count");
    construct->add_option("--emit", emit_format, "json|dot|graph6 (default json)");

    auto* detect = app.add_subcommand("detect", "pattern detection in a coloring");
    std::string d_coloring, d_coloring_g6, d_pattern, d_mode = "induced";
    int d_pad_n = 0;
    bool d_strict = false;
    detect->add_option("--coloring", d_coloring, "coloring JSON file");
    detect->add_option("--coloring-g6", d_coloring_g6, "red graph as graph6");
    detect->add_option("--n", d_pad_n, "pad the graph6 red graph to n vertices");
    detect->add_option("--pattern", d_pattern, "named graph or graph6")->required();
    detect->add_option("--mode", d_mode, "induced|weak|balanced");
    detect->add_flag("--strict-weak", d_strict, "require induced component images in weak mode");

    auto* search = app.add_subcommand("search", "exact extremal searches");
    search->require_subcommand(1);
    int workers = default_workers();
    search->add_option("--workers", workers, "worker threads (default $UNAV_WORKERS or 1)");

    auto* s_ex2 = search->add_subcommand("ex2", "largest min class avoiding a family");
    int e_n = 6;
    std::string e_family, e_mode = "auto";
    s_ex2->add_option("--n", e_n)->required();
    s_ex2->add_option("--family", e_family, "F:s,t | L:r,s,t | half:<graph> | one:<graph> | file:path")
        ->required();
    s_ex2->add_option("--mode", e_mode, "raw|canonical|auto");

    auto* s_bal = search->add_subcommand("bal", "balancing number at fixed n");
    int b_n = 6;
    std::string b_graph;
    bool b_half = false;
    s_bal->add_option("--n", b_n)->required();
    s_bal->add_option("--graph", b_graph)->required();
    s_bal->add_flag("--half-family", b_half, "also report the F(G)-based ex2 value");

    auto* s_z = search->add_subcommand("zarankiewicz", "exact z(m,n;s,t)");
    int z_m = 4, z_n = 4, z_s = 2, z_t = 2;
    s_z->add_option("--m", z_m)->required();
    s_z->add_option("--n", z_n)->required();
    s_z->add_option("--s", z_s)->required();
    s_z->add_option("--t", z_t)->required();

    auto* s_ramsey = search->add_subcommand("ramsey", "R(k) checks and values");
    int r_k = 3, r_n = 0;
    bool r_literature = false;
    s_ramsey->add_option("--k", r_k)->required();
    s_ramsey->add_option("--n", r_n, "check at this n; omit to locate the value");
    s_ramsey->add_flag("--allow-literature", r_literature);

    auto* s_br = search->add_subcommand("bipartite-ramsey", "BR(t) checks and values");
    int br_t = 2, br_n = 0;
    bool br_literature = false;
    s_br->add_option("--t", br_t)->required();
    s_br->add_option("--n", br_n, "check at this n; omit to locate the value");
    s_br->add_flag("--allow-literature", br_literature);

    auto* s_const = search->add_subcommand("constant", "threshold r(2R(2t)^2-6R(2t)+5)");
    int tc_r = 2, tc_t = 2;
    s_const->add_option("--r", tc_r)->required();
    s_const->add_option("--t", tc_t)->required();

    auto* balance = app.add_subcommand("balance", "balanceability and constant balancing number");
    balance->require_subcommand(1);
    std::string bal_graph;
    auto* bal_check = balance->add_subcommand("check", "balanceability witness (partition + subset)");
    bal_check->add_option("--graph", bal_graph)->required();
    auto* bal_ck = balance->add_subcommand("ck", "C_k membership report");
    bal_ck->add_option("--graph", bal_graph)->required();
    auto* bal_const = balance->add_subcommand("constant", "constant balancing number predicate");
    bal_const->add_option("--graph", bal_graph)->required();
    auto* bal_half = balance->add_subcommand("half", "half-edge family F(G)");
    bal_half->add_option("--graph", bal_graph)->required();

    auto* multicolor = app.add_subcommand("multicolor", "k-coloring classification");
    multicolor->require_subcommand(1);
    std::string m_coloring, m_cliques;
    int m_t = 2;
    auto* m_classify = multicolor->add_subcommand("classify", "split colors into A_f / B_f");
    m_classify->add_option("--coloring", m_coloring)->required();
    m_classify->add_option("--t", m_t);
    auto* m_verify = multicolor->add_subcommand("verify-b", "check or search the clique grid");
    m_verify->add_option("--coloring", m_coloring)->required();
    m_verify->add_option("--t", m_t);
    m_verify->add_option("--cliques", m_cliques, "clique map JSON file; omitted = search");

    auto* verify = app.add_subcommand("verify", "run named acceptance suites");
    std::string v_suite;
    bool v_all = false, v_list = false;
    int v_k = 6;
    uint64_t v_seed = 20240801;
    int v_workers = default_workers();
    verify->add_option("--suite", v_suite, "suite name (see --list)");
    verify->add_flag("--all", v_all, "run every suite");
    verify->add_flag("--list", v_list, "list suite names");
    verify->add_option("--k", v_k, "edge count for the lemma-structure suite");
    verify->add_option("--seed", v_seed, "seed for randomized suites");
    verify->add_option("--workers", v_workers, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            json j;
            std::string text;
            if (kind == "matching") j = unav::to_json(unav::matching_coloring(cn));
            else if (kind == "star") j = unav::to_json(unav::star_coloring(cn));
            else if (kind == "blowup") j = unav::to_json(unav::clique_blowup_coloring(cn, ct));
            else if (kind == "layered") j = unav::to_json(unav::layered_coloring(cn, cr, cs, ct));
            else if (kind == "bipartite-free") j = unav::to_json(unav::bipartite_free_coloring(cn, cq));
            else if (kind == "multicolor") j = unav::to_json(unav::multicolor_partition_coloring(cn, ck));
            else if (kind == "incidence") {
                unav::SimpleGraph g = unav::incidence_bipartite(cq);
                if (emit_format == "graph6") text = unav::graph6_encode(g);
                else if (emit_format == "dot") text = unav::to_dot(g);
                else j = unav::to_json(g);
            } else {
                std::cerr << "unknown construction kind: " << kind << "\n";
                return 2;
            }
            if (text.empty() && kind != "incidence" && emit_format == "dot")
                text = unav::to_dot(unav::two_coloring_from_json(j));
            else if (text.empty() && kind != "incidence" && emit_format == "graph6" && kind != "multicolor")
                text = unav::graph6_encode(unav::two_coloring_from_json(j).red);
            emit(text.empty() ? j.dump(2) : text, out_path);
            return 0;
        }
        if (*detect) {
            unav::TwoColoring c = load_two_coloring(d_coloring, d_coloring_g6, d_pad_n);
            unav::SimpleGraph pattern = parse_graph_ref(d_pattern);
            json j;
            if (d_mode == "induced") {
                auto w = unav::find_induced_mono(c, pattern);
                if (!w) {
                    emit("none", out_path);
                    return 0;
                }
                j = unav::to_json(*w);
            } else if (d_mode == "weak") {
                auto img = unav::find_weakly_induced(c.red, pattern, d_strict);
                unav::WitnessColor color = unav::WitnessColor::red;
                if (!img) {
                    img = unav::find_weakly_induced(c.blue(), pattern, d_strict);
                    color = unav::WitnessColor::blue;
                }
                if (!img) {
                    emit("none", out_path);
                    return 0;
                }
                unav::PatternWitness w;
                w.color = color;
                w.vertices = *img;
                j = unav::to_json(w);
            } else if (d_mode == "balanced") {
                auto w = unav::find_balanced_copy(c, pattern);
                if (!w) {
                    emit("none", out_path);
                    return 0;
                }
                j = unav::to_json(*w);
            } else {
                std::cerr << "unknown mode: " << d_mode << "\n";
                return 2;
            }
            emit(j.dump(2), out_path);
            return 0;
        }
        if (*search) {
            unav::ExtremalCertificate cert;
            json extra;
            if (*s_ex2) {
                unav::SearchMode mode = unav::SearchMode::automatic;
                if (e_mode == "raw") mode = unav::SearchMode::raw;
                else if (e_mode == "canonical") mode = unav::SearchMode::canonical;
                cert = unav::ex2_exact(e_n, parse_family(e_family), mode, workers);
            } else if (*s_bal) {
                unav::SimpleGraph g = parse_graph_ref(b_graph);
                cert = unav::bal_exact(b_n, g, workers);
                if (b_half) {
                    auto half = unav::bal_via_half_family(b_n, g, workers);
                    extra["half_family_value"] = half ? json(half->value) : json(nullptr);
                }
            } else if (*s_z) {
                cert = unav::zarankiewicz_exact(z_m, z_n, z_s, z_t);
                auto bounds = unav::kst_bounds(z_m, z_n, z_s, z_t);
                extra["zarankiewicz_bound"] = bounds.zarankiewicz_bound;
                extra["extremal_bound"] = bounds.extremal_bound;
            } else if (*s_ramsey) {
                json j;
                if (r_n > 0) {
                    auto chk = unav::ramsey_check(r_k, r_n);
                    j["forced"] = chk.forced;
                    j["nodes_searched"] = chk.nodes_searched;
                    if (chk.witness) j["witness"] = unav::to_json(*chk.witness);
                } else {
                    auto v = unav::ramsey_value(r_k, r_literature);
                    j["value"] = v.value;
                    j["provenance"] = v.provenance;
                }
                emit(j.dump(2), out_path);
                return 0;
            } else if (*s_br) {
                json j;
                if (br_n > 0) {
                    auto chk = unav::bipartite_ramsey_check(br_t, br_n);
                    j["forced"] = chk.forced;
                    j["nodes_searched"] = chk.nodes_searched;
                    if (chk.witness_bipartite) j["witness"] = unav::to_json(*chk.witness_bipartite);
                } else {
                    auto v = unav::bipartite_ramsey_value(br_t, br_literature);
                    j["value"] = v.value;
                    j["provenance"] = v.provenance;
                }
                emit(j.dump(2), out_path);
                return 0;
            } else if (*s_const) {
                json j;
                j["value"] = unav::constant_regime_threshold(tc_r, tc_t);
                emit(j.dump(2), out_path);
                return 0;
            }
            json j = unav::to_json(cert);
            if (!extra.is_null()) j["extra"] = extra;
            report_manifest("search", j["params"], workers, 0, out_path);
            std::cerr << "wall_seconds: " << cert.wall_seconds << "\n";
            emit(j.dump(2), out_path);
            return 0;
        }
        if (*balance) {
            unav::SimpleGraph g = parse_graph_ref(bal_graph);
            json j;
            if (*bal_check) {
                auto w = unav::charBP_witness(g);
                j["balanceable"] = w.has_value();
                if (w) j["witness"] = unav::to_json(*w);
            } else if (*bal_ck) {
                j = unav::to_json(unav::in_Ck(g));
            } else if (*bal_const) {
                auto res = unav::constant_bal_predicate(g);
                j["constant"] = res.constant;
                if (res.removed_edge)
                    j["removed_edge"] = {res.removed_edge->first, res.removed_edge->second};
            } else if (*bal_half) {
                auto fam = unav::family_half(g);
                json members = json::array();
                for (const auto& m : fam.members) members.push_back(unav::graph6_encode(m.pattern));
                j["members"] = members;
            }
            emit(j.dump(2), out_path);
            return 0;
        }
        if (*multicolor) {
            unav::KColoring c = load_k_coloring(m_coloring);
            json j;
            if (*m_classify) {
                j = unav::to_json(unav::classify_colors(c, m_t));
            } else if (*m_verify) {
                if (!m_cliques.empty()) {
                    std::ifstream in(m_cliques);
                    if (!in) throw CLI::ValidationError("cliques", "cannot open " + m_cliques);
                    json cj;
                    in >> cj;
                    std::map<int, std::vector<int>> cliques;
                    for (auto it = cj.begin(); it != cj.end(); ++it)
                        cliques[std::stoi(it.key())] = it.value().get<std::vector<int>>();
                    j["verified"] = unav::verify_multicolor_b(c, m_t, cliques);
                } else {
                    auto grid = unav::search_clique_grid(c, m_t);
                    j["found"] = grid.has_value();
                    if (grid) {
                        json gj = json::object();
                        for (const auto& [color, verts] : *grid) gj[std::to_string(color)] = verts;
                        j["cliques"] = gj;
                        j["verified"] = unav::verify_multicolor_b(c, m_t, *grid);
                    }
                }
            }
            emit(j.dump(2), out_path);
            return 0;
        }
        if (*verify) {
            if (v_list) {
                for (const auto& name : unav::suite_names()) std::cout << name << "\n";
                return 0;
            }
            std::vector<std::string> to_run;
            if (v_all) to_run = unav::suite_names();
            else if (!v_suite.empty()) to_run.push_back(v_suite);
            else {
                std::cerr << "verify needs --suite NAME or --all\n";
                return 2;
            }
            unav::SuiteOptions opt;
            opt.workers = v_workers;
            opt.seed = v_seed;
            opt.k = v_k;
            {
                json params;
                params["suites"] = to_run;
                params["k"] = v_k;
                report_manifest("verify", params, v_workers, v_seed, out_path);
            }
            bool all_pass = true;
            json artifacts = json::array();
            for (const auto& name : to_run) {
                auto result = unav::run_suite(name, opt);
                for (const auto& p : result.properties) {
                    std::cout << (p.pass ? "[PASS] " : "[FAIL] ") << result.suite << ": " << p.name;
                    if (!p.detail.empty()) std::cout << " (" << p.detail << ")";
                    std::cout << "\n";
                    if (!p.pass) all_pass = false;
                }
                std::cerr << result.suite << " wall_seconds: " << result.wall_seconds << "\n";
                json a;
                a["suite"] = result.suite;
                a["artifacts"] = result.artifacts;
                artifacts.push_back(a);
            }
            if (!out_path.empty()) emit(artifacts.dump(2), out_path);
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
