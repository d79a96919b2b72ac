// packtree: batch CLI for packing colourings of trees.
//
// JSON on stdout, diagnostics on stderr. Exit codes: 0 success,
// 1 negative answer (not unique / invalid packing), 2 usage or input
// error, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "packtree/construct.hpp"
#include "packtree/explorer.hpp"
#include "packtree/families.hpp"
#include "packtree/io.hpp"
#include "packtree/solver.hpp"

namespace {

using nlohmann::json;
using namespace packtree;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

json colouring_json(const Colouring& c) {
    return json{{"k", c.k}, {"colours", c.colours}};
}

json edges_json(const Tree& t) {
    json out = json::array();
    for (auto [u, v] : t.edge_list()) out.push_back(json::array({u, v}));
    return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Writes tree + colouring (and optional DOT) under dir.
void write_pair(const std::filesystem::path& dir, const std::string& stem,
                const Tree& t, const Colouring& c, const std::string& format) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / (stem + ".edgelist"));
        write_edge_list(t, out);
    }
    {
        std::ofstream out(dir / (stem + ".colouring.json"));
        out << colouring_to_json(c) << "\n";
    }
    if (format == "dot") {
        std::ofstream out(dir / (stem + ".dot"));
        write_dot(t, c, out);
    }
}

json profile_json(const Profile& p) {
    return json{{"sizes", p.sizes}, {"monotone", p.monotone}};
}

int cmd_chromatic(const std::string& tree_file) {
    Tree t = read_edge_list_file(tree_file);
    SolveResult res = chromatic_packing_number(t);
    emit(json{{"chi_rho", res.chi_rho},
              {"witness", colouring_json(res.witness)},
              {"nodes", res.nodes_explored}});
    return kExitOk;
}

int cmd_unique(const std::string& tree_file, int k) {
    if (k < 1) throw BadParameter("--k must be >= 1");
    Tree t = read_edge_list_file(tree_file);
    UniquenessVerdict v = is_uniquely_k_packable(t, k);
    json j;
    switch (v.kind) {
        case Uniqueness::Unique:
            j["verdict"] = "UNIQUE";
            j["colouring"] = colouring_json(v.colourings[0]);
            emit(j);
            return kExitOk;
        case Uniqueness::Multiple:
            j["verdict"] = "MULTIPLE";
            j["witnesses"] = json::array();
            for (const auto& c : v.colourings) j["witnesses"].push_back(colouring_json(c));
            emit(j);
            return kExitNegative;
        case Uniqueness::WrongK:
            j["verdict"] = "WRONG_K";
            j["true_chi_rho"] = v.true_chi_rho;
            emit(j);
            return kExitNegative;
    }
    return kExitUsage;
}

int cmd_verify(const std::string& tree_file, const std::string& colouring_file) {
    Tree t = read_edge_list_file(tree_file);
    Colouring c = read_colouring_json_file(colouring_file);
    VerificationReport rep = verify_packing(t, c);
    json j;
    j["valid"] = rep.valid;
    j["violations"] = json::array();
    for (const auto& v : rep.violations) {
        j["violations"].push_back(
            json{{"colour", v.colour}, {"u", v.u}, {"v", v.v}, {"dist", v.dist}});
    }
    j["degree_flags"] = rep.degree_flags;
    emit(j);
    return rep.valid ? kExitOk : kExitNegative;
}

int cmd_construct(const std::string& cert_file, const std::string& out_dir,
                  const std::string& format) {
    Certificate cert = read_certificate_json_file(cert_file);
    ColouredTree ct = replay_certificate(cert);
    write_pair(out_dir, "constructed", ct.tree(), ct.colouring(), format);
    emit(json{{"order", ct.order()},
              {"edges", edges_json(ct.tree())},
              {"colouring", colouring_json(ct.colouring())},
              {"profile", profile_json(colour_profile(ct.colouring()))}});
    return kExitOk;
}

int cmd_decompose(const std::string& tree_file) {
    Tree t = read_edge_list_file(tree_file);
    auto cert = decompose(t);
    if (!cert) {
        emit(json{{"uniquely_3_packable", false}});
        return kExitNegative;
    }
    std::cout << certificate_to_json(*cert) << "\n";
    return kExitOk;
}

int cmd_family(const std::string& which, int k, int l, const std::string& out_dir,
               const std::string& format, bool have_out) {
    FamilyMember m = which == "tk" ? make_Tk(k) : make_Tlk(l, k);
    if (have_out) write_pair(out_dir, which, m.ct.tree(), m.ct.colouring(), format);
    FamilyReport rep = analyze_family_member(m.ct, m.certificate);
    emit(json{{"family", which},
              {"order", rep.order},
              {"chi_rho", rep.chi_rho},
              {"unique", rep.unique},
              {"profile", rep.profile.sizes},
              {"monotone", rep.monotone},
              {"edges", edges_json(m.ct.tree())},
              {"colouring", colouring_json(m.ct.colouring())},
              {"certificate", json::parse(certificate_to_json(m.certificate))}});
    return kExitOk;
}

int cmd_scan(int n_max, int k_max, double budget_secs) {
    ScanReport rep = scan(n_max, k_max, budget_secs);
    json j;
    j["n_max"] = rep.n_max;
    j["k_max"] = rep.k_max;
    j["trees_per_order"] = json::object();
    for (int n = 1; n <= rep.n_max; ++n) {
        j["trees_per_order"][std::to_string(n)] = rep.trees_per_order[n];
    }
    j["min_order_for_chi"] = json::object();
    for (auto [chi, n] : rep.min_order_for_chi) {
        j["min_order_for_chi"][std::to_string(chi)] = n;
    }
    j["bound_violations"] = json::array();
    for (const auto& v : rep.bound_violations) {
        j["bound_violations"].push_back(
            json{{"order", v.order}, {"index", v.index}, {"chi_rho", v.chi_rho}});
    }
    j["unique3_count"] = rep.unique3_count;
    j["unique3_ids"] = json::array();
    for (auto [n, idx] : rep.unique3_ids) j["unique3_ids"].push_back(json::array({n, idx}));
    j["budget_exceeded"] = rep.budget_exceeded;
    emit(j);
    return rep.budget_exceeded ? kExitBudget : kExitOk;
}

int cmd_search(const SearchSpec& spec, const std::string& out_dir,
               const std::string& format, bool have_out) {
    SearchResult res = search_uniquely_k(spec);
    json j;
    j["k"] = spec.k;
    j["trees_examined"] = res.trees_examined;
    j["budget_exceeded"] = res.budget_exceeded;
    j["findings"] = json::array();
    for (std::size_t i = 0; i < res.findings.size(); ++i) {
        const auto& f = res.findings[i];
        j["findings"].push_back(json{{"order", f.tree.order()},
                                     {"edges", edges_json(f.tree)},
                                     {"colouring", colouring_json(f.colouring)}});
        if (have_out) {
            write_pair(out_dir, "candidate_" + std::to_string(i), f.tree, f.colouring,
                       format);
        }
    }
    emit(j);
    return res.budget_exceeded ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for packing colourings of trees"};
    app.require_subcommand(1);

    std::string tree_file, colouring_file, cert_file, out_dir = ".";
    std::string format = "edgelist";
    int k = 3, l = 2, n_max = 8, k_max = 5, max_order = 15, max_hub_leaves = 5;
    int max_skeleton = 8;
    double budget_secs = 60.0;
    std::uint64_t cap = 0;
    bool hub_template = false;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "Output directory for generated files");
        cmd->add_option("--format", format, "File format: edgelist|dot")
            ->check(CLI::IsMember({"edgelist", "dot"}));
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-secs", budget_secs, "Wall-clock budget (seconds)")
            ->envname("PACKCHROMA_BUDGET_SECS")
            ->capture_default_str();
    };

    auto* chromatic = app.add_subcommand("chromatic", "Packing chromatic number");
    chromatic->add_option("tree_file", tree_file)->required();

    auto* unique = app.add_subcommand("unique", "Uniqueness at a given k");
    unique->add_option("tree_file", tree_file)->required();
    unique->add_option("--k", k, "Palette size")->envname("PACKCHROMA_K")->required();

    auto* verify = app.add_subcommand("verify", "Verify a colouring file");
    verify->add_option("tree_file", tree_file)->required();
    verify->add_option("colouring_file", colouring_file)->required();

    auto* construct = app.add_subcommand("construct", "Replay a certificate");
    construct->add_option("certificate_file", cert_file)->required();
    add_out(construct);

    auto* decomp = app.add_subcommand("decompose", "Certificate for a uniquely 3-packable tree");
    decomp->add_option("tree_file", tree_file)->required();

    auto* family = app.add_subcommand("family", "Generate a named family member");
    std::string which;
    family->add_option("which", which, "tk or tlk")
        ->required()
        ->check(CLI::IsMember({"tk", "tlk"}));
    family->add_option("--k", k, "Family parameter k")->envname("PACKCHROMA_K")->required();
    family->add_option("--l", l, "Family parameter l (tlk)")->envname("PACKCHROMA_L");
    add_out(family);

    auto* scan_cmd = app.add_subcommand("scan", "Exhaustive small-tree scan");
    scan_cmd->add_option("--n-max", n_max)->envname("PACKCHROMA_N_MAX")->capture_default_str();
    scan_cmd->add_option("--k-max", k_max)->envname("PACKCHROMA_K_MAX")->capture_default_str();
    add_budget(scan_cmd);

    auto* search = app.add_subcommand("search", "Search for uniquely k-packable trees");
    search->add_option("--k", k, "Target palette size")->envname("PACKCHROMA_K")->required();
    search->add_option("--max-order", max_order)->envname("PACKCHROMA_MAX_ORDER")
        ->capture_default_str();
    search->add_option("--max-hub-leaves", max_hub_leaves)->capture_default_str();
    search->add_flag("--hub-template", hub_template,
                     "Restrict to hub-and-spoke candidates");
    search->add_option("--max-skeleton-order", max_skeleton)->capture_default_str();
    search->add_option("--cap", cap, "Stop after this many findings (0 = no cap)");
    add_budget(search);
    add_out(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*chromatic) return cmd_chromatic(tree_file);
        if (*unique) return cmd_unique(tree_file, k);
        if (*verify) return cmd_verify(tree_file, colouring_file);
        if (*construct) return cmd_construct(cert_file, out_dir, format);
        if (*decomp) return cmd_decompose(tree_file);
        if (*family) {
            if (which == "tlk" && family->count("--l") == 0) {
                std::cerr << "family tlk requires --l\n";
                return kExitUsage;
            }
            return cmd_family(which, k, l, out_dir, format, family->count("--out") > 0);
        }
        if (*scan_cmd) return cmd_scan(n_max, k_max, budget_secs);
        if (*search) {
            SearchSpec spec;
            spec.k = k;
            spec.max_order = max_order;
            spec.max_hub_leaves = max_hub_leaves;
            spec.time_budget_secs = budget_secs;
            spec.hub_template = hub_template;
            spec.max_skeleton_order = max_skeleton;
            spec.max_findings = cap;
            return cmd_search(spec, out_dir, format, search->count("--out") > 0);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotATree& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadVertexId& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadParameter& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionViolated& e) {
        std::cerr << "certificate error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
