// Command-line front door: generation, reduction, solving, verification,
// auditing, and round-trip experiments over the text formats of io.hpp.
//
// Exit codes: 0 = success / yes, 1 = false / no witness, 2 = input error,
// 3 = resource limit exceeded.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dircuts/dirmc.hpp"
#include "dircuts/errors.hpp"
#include "dircuts/io.hpp"
#include "dircuts/psi.hpp"
#include "dircuts/rng.hpp"
#include "dircuts/sepstruct.hpp"
#include "dircuts/stor.hpp"

namespace {

using namespace dircuts;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// "1-2,1-3" -> {(1,2),(1,3)}
std::vector<Arc> parse_pattern_list(const std::string& text) {
    std::vector<Arc> edges;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
            throw InputError("pattern edge must look like i-j, got '" + item + "'");
        try {
            int i = std::stoi(item.substr(0, dash));
            int j = std::stoi(item.substr(dash + 1));
            edges.emplace_back(i, j);
        } catch (const std::exception&) {
            throw InputError("pattern edge must look like i-j, got '" + item + "'");
        }
    }
    if (edges.empty()) throw InputError("empty pattern edge list");
    return edges;
}

// "0,3,5" -> {0,3,5}
std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("expected a comma-separated vertex list, got '" + item + "'");
        }
    }
    return out;
}

// Cut-structure subcommands read the graph from a dirmc-format file and take
// source/sink from its first terminal pair.
CutContext context_from_dirmc(const std::string& path, int k) {
    DirMcInstance inst = parse_dirmc(read_file(path));
    if (inst.terminal_pairs.empty())
        throw InputError("the instance needs a terminal pair to name source and sink");
    return make_cut_context(inst.graph, inst.terminal_pairs[0].first,
                            inst.terminal_pairs[0].second, k);
}

void print_arcset(const ArcSet& arcs) {
    std::cout << "arcset";
    for (const Arc& a : arcs) std::cout << ' ' << a.first << ':' << a.second;
    std::cout << '\n';
}

// Deterministic random instance for round-trip experiments: a normalized
// pattern with at most kmax edges, and each possible inter-class host edge
// tossed in with probability one half.
PsiInstance random_psi(int n, int kmax, SplitMix64& rng) {
    static const std::vector<std::pair<int, std::vector<Arc>>> patterns_by_k = {
        {1, {{1, 2}}},
        {2, {{1, 2}, {1, 3}}},
        {2, {{1, 2}, {2, 3}}},
        {2, {{1, 3}, {2, 3}}},
        {3, {{1, 2}, {1, 3}, {2, 3}}},
    };
    std::vector<const std::vector<Arc>*> eligible;
    for (const auto& [k, edges] : patterns_by_k) {
        if (k <= kmax) eligible.push_back(&edges);
    }
    if (eligible.empty()) throw InputError("kmax admits no pattern");
    const std::vector<Arc>& pattern = *eligible[rng.below(eligible.size())];
    int ell = 0;
    for (const Arc& e : pattern) ell = std::max({ell, e.first, e.second});

    PsiInstance inst;
    inst.class_size = n;
    inst.pattern_vertex_count = ell;
    inst.pattern_edges = pattern;
    for (int i = 0; i < ell; ++i) {
        std::vector<int> cls;
        for (int a = 0; a < n; ++a) cls.push_back(i * n + a);
        inst.classes.push_back(std::move(cls));
    }
    for (const Arc& e : pattern) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (rng.chance(0.5)) {
                    int u = inst.member(e.first, a);
                    int v = inst.member(e.second, b);
                    inst.host_edges.emplace_back(std::min(u, v), std::max(u, v));
                }
            }
        }
    }
    std::sort(inst.host_edges.begin(), inst.host_edges.end());
    validate_psi(inst);
    return inst;
}

int run_roundtrip(const std::string& problem, int n, int kmax, int samples, std::uint64_t seed) {
    if (problem != "dirmc" && problem != "stor")
        throw InputError("--problem must be dirmc or stor");
    SplitMix64 rng{seed};
    int agree = 0;
    for (int i = 0; i < samples; ++i) {
        PsiInstance psi = random_psi(n, kmax, rng);
        bool expected = solve_psi(psi).has_value();
        bool got = false;
        if (problem == "dirmc") {
            got = solve_dirmc_exact(reduce_psi_to_dirmc(psi)).has_value();
        } else {
            got = solve_stor_exact(reduce_psi_to_stor(psi)).has_value();
        }
        if (expected == got) ++agree;
    }
    std::cout << agree << '/' << samples << " agree\n";
    return agree == samples ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for directed multicut and orientation gadget reductions"};
    app.require_subcommand(1);
    std::function<int()> action;

    // ---- generation / solving -------------------------------------------
    auto* gen = app.add_subcommand("gen-psi", "generate a planted assignment instance");
    {
        auto n = std::make_shared<int>(2);
        auto pattern = std::make_shared<std::string>("1-2");
        auto seed = std::make_shared<std::uint64_t>(1);
        auto noise = std::make_shared<double>(0.25);
        gen->add_option("--n", *n, "class size")->required();
        gen->add_option("--pattern", *pattern, "pattern edges, e.g. 1-2,1-3")->required();
        gen->add_option("--seed", *seed, "random seed");
        gen->add_option("--noise", *noise, "extra host-edge probability");
        gen->callback([=, &action] {
            action = [=] {
                std::vector<Arc> edges = parse_pattern_list(*pattern);
                std::cout << serialize_psi(gen_psi_planted(*n, edges, *seed, *noise));
                return 0;
            };
        });
    }

    auto* spsi = app.add_subcommand("solve-psi", "search for a class-respecting assignment");
    {
        auto file = std::make_shared<std::string>();
        spsi->add_option("file", *file, "psi instance")->required();
        spsi->callback([=, &action] {
            action = [=] {
                auto hom = solve_psi(parse_psi(read_file(*file)));
                if (!hom) {
                    std::cerr << "no assignment\n";
                    return 1;
                }
                std::cout << serialize_hom(*hom);
                return 0;
            };
        });
    }

    auto* rdm = app.add_subcommand("reduce-dirmc", "reduce a psi instance to directed multicut");
    {
        auto file = std::make_shared<std::string>();
        auto m = std::make_shared<int>(2);
        rdm->add_option("file", *file, "psi instance")->required();
        rdm->add_option("--M", *m, "heaviness constant (>= 2)");
        rdm->callback([=, &action] {
            action = [=] {
                std::cout << serialize_dirmc(reduce_psi_to_dirmc(parse_psi(read_file(*file)), *m));
                return 0;
            };
        });
    }

    auto* rst = app.add_subcommand("reduce-stor", "reduce a psi instance to orientation");
    {
        auto file = std::make_shared<std::string>();
        rst->add_option("file", *file, "psi instance")->required();
        rst->callback([=, &action] {
            action = [=] {
                std::cout << serialize_stor(reduce_psi_to_stor(parse_psi(read_file(*file))));
                return 0;
            };
        });
    }

    auto* sdm = app.add_subcommand("solve-dirmc", "minimum-weight multicut within the budget");
    {
        auto file = std::make_shared<std::string>();
        auto max_nodes = std::make_shared<std::uint64_t>(DirMcSolveOptions{}.max_nodes);
        sdm->add_option("file", *file, "dirmc instance")->required();
        sdm->add_option("--max-nodes", *max_nodes, "search-node limit");
        sdm->callback([=, &action] {
            action = [=] {
                auto cut = solve_dirmc_exact(parse_dirmc(read_file(*file)), {*max_nodes});
                if (!cut) {
                    std::cerr << "no multicut within the budget\n";
                    return 1;
                }
                std::cout << serialize_cutset(*cut);
                return 0;
            };
        });
    }

    auto* sst = app.add_subcommand("solve-stor", "search for a connecting orientation");
    {
        auto file = std::make_shared<std::string>();
        auto max_edges = std::make_shared<int>(StorSolveOptions{}.max_edges);
        sst->add_option("file", *file, "stor instance")->required();
        sst->add_option("--max-edges", *max_edges, "undirected-edge limit");
        sst->callback([=, &action] {
            action = [=] {
                auto o = solve_stor_exact(parse_stor(read_file(*file)), {*max_edges});
                if (!o) {
                    std::cerr << "no satisfying orientation\n";
                    return 1;
                }
                std::cout << serialize_orientation(*o);
                return 0;
            };
        });
    }

    // ---- verification / lifting / extraction ----------------------------
    auto* vc = app.add_subcommand("verify-cut", "check a multicut witness");
    {
        auto inst_file = std::make_shared<std::string>();
        auto cut_file = std::make_shared<std::string>();
        vc->add_option("instance", *inst_file, "dirmc instance")->required();
        vc->add_option("cut", *cut_file, "cut witness")->required();
        vc->callback([=, &action] {
            action = [=] {
                DirMcInstance inst = parse_dirmc(read_file(*inst_file));
                Cutset cut = parse_cutset(read_file(*cut_file));
                if (!verify_multicut(inst, cut)) {
                    std::cerr << "not a multicut within the budget\n";
                    return 1;
                }
                std::cout << "valid multicut, weight " << cutset_weight(inst, cut) << '\n';
                return 0;
            };
        });
    }

    auto* vo = app.add_subcommand("verify-orientation", "check an orientation witness");
    {
        auto inst_file = std::make_shared<std::string>();
        auto orient_file = std::make_shared<std::string>();
        vo->add_option("instance", *inst_file, "stor instance")->required();
        vo->add_option("orientation", *orient_file, "orientation witness")->required();
        vo->callback([=, &action] {
            action = [=] {
                StorInstance inst = parse_stor(read_file(*inst_file));
                Orientation o = parse_orientation(read_file(*orient_file));
                if (!verify_orientation(inst, o)) {
                    std::cerr << "orientation misses a terminal pair\n";
                    return 1;
                }
                std::cout << "valid orientation\n";
                return 0;
            };
        });
    }

    auto* ld = app.add_subcommand("lift-dirmc", "canonical multicut for an assignment");
    {
        auto psi_file = std::make_shared<std::string>();
        auto hom_file = std::make_shared<std::string>();
        auto red_file = std::make_shared<std::string>();
        ld->add_option("psi", *psi_file, "source psi instance")->required();
        ld->add_option("hom", *hom_file, "assignment witness")->required();
        ld->add_option("dirmc", *red_file, "reduced dirmc instance")->required();
        ld->callback([=, &action] {
            action = [=] {
                std::cout << serialize_cutset(lift_hom_to_cutset(parse_psi(read_file(*psi_file)),
                                                                 parse_hom(read_file(*hom_file)),
                                                                 parse_dirmc(read_file(*red_file))));
                return 0;
            };
        });
    }

    auto* ls = app.add_subcommand("lift-stor", "canonical orientation for an assignment");
    {
        auto psi_file = std::make_shared<std::string>();
        auto hom_file = std::make_shared<std::string>();
        auto red_file = std::make_shared<std::string>();
        ls->add_option("psi", *psi_file, "source psi instance")->required();
        ls->add_option("hom", *hom_file, "assignment witness")->required();
        ls->add_option("stor", *red_file, "reduced stor instance")->required();
        ls->callback([=, &action] {
            action = [=] {
                std::cout << serialize_orientation(lift_hom_to_orientation(
                    parse_psi(read_file(*psi_file)), parse_hom(read_file(*hom_file)),
                    parse_stor(read_file(*red_file))));
                return 0;
            };
        });
    }

    auto* ed = app.add_subcommand("extract-dirmc", "read the assignment out of a multicut");
    {
        auto red_file = std::make_shared<std::string>();
        auto cut_file = std::make_shared<std::string>();
        auto psi_file = std::make_shared<std::string>();
        ed->add_option("dirmc", *red_file, "reduced dirmc instance")->required();
        ed->add_option("cut", *cut_file, "cut witness")->required();
        ed->add_option("psi", *psi_file, "source psi instance")->required();
        ed->callback([=, &action] {
            action = [=] {
                std::cout << serialize_hom(extract_hom_from_cutset(
                    parse_dirmc(read_file(*red_file)), parse_cutset(read_file(*cut_file)),
                    parse_psi(read_file(*psi_file))));
                return 0;
            };
        });
    }

    auto* es = app.add_subcommand("extract-stor", "read the assignment out of an orientation");
    {
        auto red_file = std::make_shared<std::string>();
        auto orient_file = std::make_shared<std::string>();
        auto psi_file = std::make_shared<std::string>();
        es->add_option("stor", *red_file, "reduced stor instance")->required();
        es->add_option("orientation", *orient_file, "orientation witness")->required();
        es->add_option("psi", *psi_file, "source psi instance")->required();
        es->callback([=, &action] {
            action = [=] {
                std::cout << serialize_hom(extract_hom_from_orientation(
                    parse_stor(read_file(*red_file)), parse_orientation(read_file(*orient_file)),
                    parse_psi(read_file(*psi_file))));
                return 0;
            };
        });
    }

    auto* ew = app.add_subcommand("expand-weights", "rewrite weights as unit-weight twins");
    {
        auto file = std::make_shared<std::string>();
        ew->add_option("file", *file, "dirmc instance")->required();
        ew->callback([=, &action] {
            action = [=] {
                WeightExpansion expansion = expand_weights(parse_dirmc(read_file(*file)));
                std::cout << serialize_dirmc(expansion.instance);
                for (std::size_t v = 0; v < expansion.twin_to_original.size(); ++v)
                    std::cout << "# origin " << v << ' ' << expansion.twin_to_original[v] << '\n';
                return 0;
            };
        });
    }

    // ---- path decompositions ---------------------------------------------
    auto* db = app.add_subcommand("dpw-build", "width-2 decomposition of a reduced instance");
    {
        auto file = std::make_shared<std::string>();
        db->add_option("file", *file, "reduced dirmc instance")->required();
        db->callback([=, &action] {
            action = [=] {
                std::cout << serialize_decomposition(
                    build_pathwidth2_decomposition(parse_dirmc(read_file(*file))));
                return 0;
            };
        });
    }

    auto* dc = app.add_subcommand("dpw-check", "validate a directed path decomposition");
    {
        auto inst_file = std::make_shared<std::string>();
        auto dpw_file = std::make_shared<std::string>();
        dc->add_option("instance", *inst_file, "dirmc instance carrying the graph")->required();
        dc->add_option("dpw", *dpw_file, "decomposition file")->required();
        dc->callback([=, &action] {
            action = [=] {
                DirMcInstance inst = parse_dirmc(read_file(*inst_file));
                DirectedPathDecomposition d = parse_decomposition(read_file(*dpw_file));
                PathDecompositionCheck check = validate_path_decomposition(inst.graph, d);
                if (!check.valid) {
                    std::cerr << "invalid decomposition: " << check.violation << '\n';
                    return 1;
                }
                std::cout << "width " << check.width << '\n';
                return 0;
            };
        });
    }

    // ---- cut structure -----------------------------------------------------
    auto* emc = app.add_subcommand("enum-minimal-cuts", "all inclusion-minimal cuts of size <= k");
    {
        auto file = std::make_shared<std::string>();
        auto k = std::make_shared<int>(1);
        emc->add_option("file", *file, "dirmc-format graph; s,t from its first pair")->required();
        emc->add_option("--k", *k, "cut-size cap")->required();
        emc->callback([=, &action] {
            action = [=] {
                for (const ArcSet& cut : enum_minimal_cuts(context_from_dirmc(*file, *k)))
                    print_arcset(cut);
                return 0;
            };
        });
    }

    auto* eis = app.add_subcommand("enum-impsep", "all important separators of size <= k");
    {
        auto file = std::make_shared<std::string>();
        auto k = std::make_shared<int>(1);
        eis->add_option("file", *file, "dirmc-format graph; s,t from its first pair")->required();
        eis->add_option("--k", *k, "cut-size cap")->required();
        eis->callback([=, &action] {
            action = [=] {
                for (const ArcSet& cut : enum_important_separators(context_from_dirmc(*file, *k)))
                    print_arcset(cut);
                return 0;
            };
        });
    }

    auto* acm = app.add_subcommand("audit-cutminimal", "bypass vertices on no small minimal cut");
    {
        auto file = std::make_shared<std::string>();
        auto k = std::make_shared<int>(1);
        acm->add_option("file", *file, "dirmc-format graph; s,t from its first pair")->required();
        acm->add_option("--k", *k, "cut-size cap")->required();
        acm->callback([=, &action] {
            action = [=] {
                CutContext ctx = context_from_dirmc(*file, *k);
                int before = ctx.graph.vertex_count();
                CoreResult core = cut_minimal_core(ctx);
                std::cout << "vertices " << before << " -> " << core.graph.vertex_count() << '\n';
                std::cout << "kept";
                for (int v : core.original_vertex) std::cout << ' ' << v;
                std::cout << '\n';
                return core.graph.vertex_count() == before ? 0 : 1;
            };
        });
    }

    auto* wlc = app.add_subcommand("wellinked-check", "equal-size subset linkage over a vertex set");
    {
        auto file = std::make_shared<std::string>();
        auto terminals = std::make_shared<std::string>();
        auto limit = std::make_shared<int>(5);
        wlc->add_option("file", *file, "dirmc-format graph")->required();
        wlc->add_option("--terminals", *terminals, "comma-separated vertex list")->required();
        wlc->add_option("--limit", *limit, "terminal-count cap");
        wlc->callback([=, &action] {
            action = [=] {
                DirMcInstance inst = parse_dirmc(read_file(*file));
                WellLinkedResult result =
                    is_well_linked(inst.graph, parse_vertex_list(*terminals), *limit);
                if (result.well_linked) {
                    std::cout << "well-linked\n";
                    return 0;
                }
                std::cout << "violation X=";
                for (std::size_t i = 0; i < result.violating_x.size(); ++i)
                    std::cout << (i ? "," : "") << result.violating_x[i];
                std::cout << " Y=";
                for (std::size_t i = 0; i < result.violating_y.size(); ++i)
                    std::cout << (i ? "," : "") << result.violating_y[i];
                std::cout << '\n';
                return 1;
            };
        });
    }

    auto* sf = app.add_subcommand("sunflower", "find a sunflower with more than target petals");
    {
        auto file = std::make_shared<std::string>();
        auto target = std::make_shared<int>(1);
        sf->add_option("file", *file, "family file: one 'set <elems...>' line per set")->required();
        sf->add_option("--target", *target, "petal-count target")->required();
        sf->callback([=, &action] {
            action = [=] {
                std::vector<std::vector<int>> family;
                std::istringstream in(read_file(*file));
                std::string line;
                int line_no = 0;
                while (std::getline(in, line)) {
                    ++line_no;
                    if (std::size_t hash = line.find('#'); hash != std::string::npos)
                        line.resize(hash);
                    std::istringstream words(line);
                    std::string keyword;
                    if (!(words >> keyword)) continue;
                    if (keyword != "set")
                        throw InputError("line " + std::to_string(line_no) +
                                         ": expected 'set <elems...>'");
                    std::vector<int> set;
                    int value = 0;
                    while (words >> value) set.push_back(value);
                    family.push_back(std::move(set));
                }
                auto flower = find_sunflower(family, *target);
                if (!flower) {
                    std::cerr << "no sunflower with more than " << *target << " petals found\n";
                    return 1;
                }
                std::cout << "core";
                for (int e : flower->core) std::cout << ' ' << e;
                std::cout << '\n';
                for (const auto& petal : flower->petals) {
                    std::cout << "petal";
                    for (int e : petal) std::cout << ' ' << e;
                    std::cout << '\n';
                }
                return 0;
            };
        });
    }

    auto* bnd = app.add_subcommand("bounds", "explicit combinatorial bound values");
    {
        auto k = std::make_shared<int>(0);
        bnd->add_option("--k", *k, "cut-size cap")->required();
        bnd->callback([=, &action] {
            action = [=] {
                BoundValues values = bounds(*k);
                std::cout << "g=" << values.g.to_string() << '\n'
                          << "h=" << values.h.to_string() << '\n';
                return 0;
            };
        });
    }

    auto* rt = app.add_subcommand("roundtrip", "compare source and reduced-problem answers");
    {
        auto problem = std::make_shared<std::string>();
        auto n = std::make_shared<int>(2);
        auto kmax = std::make_shared<int>(1);
        auto samples = std::make_shared<int>(20);
        auto seed = std::make_shared<std::uint64_t>(1);
        rt->add_option("--problem", *problem, "dirmc or stor")->required();
        rt->add_option("--n", *n, "class size");
        rt->add_option("--kmax", *kmax, "largest pattern edge count");
        rt->add_option("--samples", *samples, "instance count");
        rt->add_option("--seed", *seed, "random seed");
        rt->callback([=, &action] {
            action = [=] { return run_roundtrip(*problem, *n, *kmax, *samples, *seed); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        std::cerr << app.help();
        return 2;
    }

    try {
        return action();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    }
}
