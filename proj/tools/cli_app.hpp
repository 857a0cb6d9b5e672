#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ecci/ecci.hpp"
#include "ecci/json_io.hpp"

namespace ecci::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

namespace detail {

inline Graph load_input(const std::string& input_path, const std::string& family_spec) {
    if (!input_path.empty() && !family_spec.empty()) {
        throw BadParamsError("give either --input or --family, not both");
    }
    if (!family_spec.empty()) return build_family(parse_family_spec(family_spec));
    if (input_path.empty()) throw BadParamsError("one of --input or --family is required");
    std::ifstream in(input_path);
    if (!in) throw ParseError("cannot open '" + input_path + "'");
    return parse_edge_list(in);
}

inline void print_report(std::ostream& out, const Json& j, const std::string& format) {
    if (format == "table") {
        for (auto& [key, value] : j.items()) {
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
        }
    } else {
        out << j.dump() << '\n';
    }
}

inline EnumerationGuards guards_from_env() {
    EnumerationGuards g;
    if (const char* env = std::getenv("ECCI_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) {
            g.max_tree_n = v;
            g.max_unicyclic_n = v;
        }
    }
    return g;
}

inline double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 0;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(t1 - t0).count();
        if (r == 0 || s < best) best = s;
    }
    return best;
}

} // namespace detail

// Full command-line surface. Streams are injected so tests can drive it.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"eccentric connectivity index toolkit"};
    app.require_subcommand(1);

    std::string input_path, family_spec, format = "json", algo = "bfs";
    bool eci_only = false;

    auto* compute = app.add_subcommand("compute", "indices of a graph (edge list or family)");
    compute->add_option("--input", input_path, "edge-list file");
    compute->add_option("--family", family_spec, "family spec, e.g. broom:n=11,delta=6");
    compute->add_option("--algo", algo, "eci algorithm: bfs or linear (trees only)")
        ->check(CLI::IsMember({"bfs", "linear"}));
    compute->add_flag("--eci-only", eci_only, "emit just the eci value");
    compute->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string fam_name;
    FamilySpec fspec;
    std::string lengths_arg;
    bool fam_value = false, fam_closed = false, fam_check = false;
    auto* family = app.add_subcommand("family", "build a named graph family");
    family->add_option("--name", fam_name, "family tag")->required();
    family->add_option("--n", fspec.n, "order / dimension");
    family->add_option("--m", fspec.m, "spur leaf count");
    family->add_option("--d", fspec.d, "path length / diameter");
    family->add_option("--delta", fspec.delta, "maximum degree");
    family->add_option("--p", fspec.p, "pendant path count");
    family->add_option("--k", fspec.k, "girth / removed matching size");
    family->add_option("--a", fspec.a, "first factor / star order");
    family->add_option("--b", fspec.b, "second factor / star order");
    family->add_option("--i", fspec.i, "attachment position");
    family->add_option("--lengths", lengths_arg, "slash-separated list, e.g. 2/1/1");
    family->add_flag("--value", fam_value, "print eci of the built graph");
    family->add_flag("--closed-form", fam_closed, "print the published closed form");
    family->add_flag("--check", fam_check, "compare closed form against the built graph");

    auto* bounds_cmd = app.add_subcommand("bounds", "bound report for a graph");
    bounds_cmd->add_option("--input", input_path, "edge-list file");
    bounds_cmd->add_option("--family", family_spec, "family spec");
    bounds_cmd->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string g1_arg, g2_arg;
    bool emit_edges = false;
    auto* product = app.add_subcommand("product", "Cartesian product and its eci decomposition");
    product->add_option("--g1", g1_arg, "edge-list file or family spec")->required();
    product->add_option("--g2", g2_arg, "edge-list file or family spec")->required();
    product->add_flag("--emit-edges", emit_edges, "also print the product edge list");

    std::string suite_arg;
    int verify_n = -1;
    std::string n_range;
    auto* verify = app.add_subcommand("verify", "machine-check extremal results by enumeration");
    verify->add_option("--suite", suite_arg,
                       "global|pendent|maxdeg|matching|independence|diameter|radius|girth|all")
        ->required();
    verify->add_option("--n", verify_n, "order to verify");
    verify->add_option("--n-range", n_range, "inclusive range A:B");
    verify->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::string enum_type = "trees";
    int enum_n = 0;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "non-isomorphic trees or unicyclic graphs");
    enumerate->add_option("--type", enum_type, "trees or unicyclic")
        ->check(CLI::IsMember({"trees", "unicyclic"}));
    enumerate->add_option("--n", enum_n, "order")->required();
    enumerate->add_flag("--count-only", count_only, "print the count instead of edge lists");

    std::string shapes_arg = "path,star,random";
    std::string sizes_arg = "100000,1000000";
    long long wmax = 1;
    long long oracle_cap = 2000;
    int reps = 3;
    unsigned long long seed = 12345;
    auto* bench = app.add_subcommand("bench", "time the linear tree algorithm against the oracle");
    bench->add_option("--shapes", shapes_arg, "comma list of path,star,random");
    bench->add_option("--sizes", sizes_arg, "comma list of vertex counts");
    bench->add_option("--wmax", wmax, "max random edge weight (1 = unweighted)");
    bench->add_option("--oracle-cap", oracle_cap, "run the BFS oracle only up to this size");
    bench->add_option("--reps", reps, "repetitions, best time kept");
    bench->add_option("--seed", seed, "random seed");

    try {
        std::vector<const char*> argv;
        argv.push_back("ecci");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (compute->parsed()) {
            Graph g = detail::load_input(input_path, family_spec);
            if (g.weighted() && classify(g) != GraphClass::tree) {
                throw BadParamsError("weighted input is supported only for trees");
            }
            long long value;
            if (algo == "linear") {
                if (classify(g) != GraphClass::tree) {
                    throw BadParamsError("--algo linear requires a tree");
                }
                value = eci_tree(g);
            } else {
                value = eci(g);
            }
            if (eci_only) {
                detail::print_report(out, Json{{"eci", value}}, format);
                return kExitOk;
            }
            IndexReport rep = index_report(g);
            rep.eci = value;
            detail::print_report(out, to_json(rep), format);
            return kExitOk;
        }
        if (family->parsed()) {
            if (!lengths_arg.empty()) {
                FamilySpec tmp = parse_family_spec(fam_name + ":lengths=" + lengths_arg);
                fspec.lengths = tmp.lengths;
            }
            auto fam = family_from_name(fam_name);
            if (!fam) throw BadParamsError("unknown family '" + fam_name + "'");
            fspec.family = *fam;
            if (fam_check) {
                out << to_json(oracle_vs_closed_form(fspec)).dump() << '\n';
            } else if (fam_closed) {
                out << closed_form_eci(fspec) << '\n';
            } else if (fam_value) {
                Graph g = build_family(fspec);
                out << (classify(g) == GraphClass::tree ? eci_tree(g) : eci(g)) << '\n';
            } else {
                write_edge_list(out, build_family(fspec));
            }
            return kExitOk;
        }
        if (bounds_cmd->parsed()) {
            Graph g = detail::load_input(input_path, family_spec);
            if (g.weighted()) throw BadParamsError("bounds are defined for unweighted graphs");
            detail::print_report(out, to_json(bounds_report(g)), format);
            return kExitOk;
        }
        if (product->parsed()) {
            auto load_factor = [](const std::string& arg) {
                if (arg.find('=') != std::string::npos || family_from_name(
                        arg.substr(0, arg.find(':')))) {
                    return build_family(parse_family_spec(arg));
                }
                std::ifstream in(arg);
                if (!in) throw ParseError("cannot open '" + arg + "'");
                return parse_edge_list(in);
            };
            Graph g1 = load_factor(g1_arg);
            Graph g2 = load_factor(g2_arg);
            ProductDecomposition dec = decompose_product(g1, g2);
            Graph prod = cartesian_product(g1, g2);
            long long oracle = eci(prod);
            Json j;
            j["n1"] = dec.n1;
            j["n2"] = dec.n2;
            j["m1"] = dec.m1;
            j["m2"] = dec.m2;
            j["decomposition"] = dec.value();
            j["oracle"] = oracle;
            j["agree"] = dec.value() == oracle;
            out << j.dump() << '\n';
            if (emit_edges) write_edge_list(out, prod);
            return dec.value() == oracle ? kExitOk : kExitMismatch;
        }
        if (verify->parsed()) {
            EnumerationGuards guards = detail::guards_from_env();
            int lo = verify_n, hi = verify_n;
            if (!n_range.empty()) {
                size_t colon = n_range.find(':');
                if (colon == std::string::npos) throw BadParamsError("--n-range wants A:B");
                lo = std::stoi(n_range.substr(0, colon));
                hi = std::stoi(n_range.substr(colon + 1));
            }
            if (lo < 0) throw BadParamsError("verify needs --n or --n-range");
            bool all_match = true;
            std::vector<Suite> suites;
            if (suite_arg == "all") {
                suites = {Suite::global, Suite::pendent, Suite::max_degree, Suite::matching,
                          Suite::independence, Suite::diameter, Suite::radius, Suite::girth};
            } else {
                suites = {parse_suite(suite_arg)};
            }
            for (int n = lo; n <= hi; ++n) {
                for (Suite s : suites) {
                    if (s == Suite::girth && n > guards.max_unicyclic_n) {
                        err << "note: skipping girth suite at n=" << n
                            << " (unicyclic guard is " << guards.max_unicyclic_n << ")\n";
                        continue;
                    }
                    for (const ExtremalReport& rep : verify_extremal(s, n, guards)) {
                        if (format == "table") {
                            out << rep.suite << " n=" << rep.n;
                            if (rep.param >= 0) out << " param=" << rep.param;
                            out << " min=" << rep.min_value << " max=" << rep.max_value
                                << " verdict=" << (rep.match ? "match" : "mismatch") << '\n';
                        } else {
                            out << to_json(rep).dump() << '\n';
                        }
                        all_match = all_match && rep.match;
                    }
                }
            }
            return all_match ? kExitOk : kExitMismatch;
        }
        if (enumerate->parsed()) {
            EnumerationGuards guards = detail::guards_from_env();
            long long count = 0;
            auto emit = [&](const Graph& g) {
                ++count;
                if (count_only) return;
                Json edges = Json::array();
                for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
                out << Json{{"n", g.vertex_count()}, {"edges", edges}}.dump() << '\n';
            };
            if (enum_type == "trees") {
                enumerate_trees(enum_n, emit, guards.max_tree_n);
            } else {
                enumerate_unicyclic(enum_n, emit, guards.max_unicyclic_n);
            }
            if (count_only) {
                out << Json{{"type", enum_type}, {"n", enum_n}, {"count", count}}.dump() << '\n';
            }
            return kExitOk;
        }
        if (bench->parsed()) {
            auto split = [](const std::string& s) {
                std::vector<std::string> parts;
                std::stringstream ss(s);
                std::string item;
                while (std::getline(ss, item, ',')) parts.push_back(item);
                return parts;
            };
            std::mt19937_64 rng(seed);
            for (const std::string& shape : split(shapes_arg)) {
                for (const std::string& size_str : split(sizes_arg)) {
                    int n = std::stoi(size_str);
                    Graph t;
                    if (shape == "path") {
                        t = build_family({.family = Family::path, .n = n});
                    } else if (shape == "star") {
                        t = build_family({.family = Family::star, .n = n});
                    } else if (shape == "random") {
                        t = wmax > 1 ? random_weighted_tree(n, wmax, rng) : random_tree(n, rng);
                    } else {
                        throw BadParamsError("unknown shape '" + shape + "'");
                    }
                    long long value = 0;
                    double secs = detail::time_best_of(reps, [&] { value = eci_tree(t); });
                    out << Json{{"shape", shape}, {"n", n}, {"algo", "linear"},
                                {"seconds", secs}, {"eci", value}}
                               .dump()
                        << '\n';
                    if (n <= oracle_cap) {
                        long long ov = 0;
                        double osecs = detail::time_best_of(reps, [&] { ov = eci(t); });
                        out << Json{{"shape", shape}, {"n", n}, {"algo", "bfs_oracle"},
                                    {"seconds", osecs}, {"eci", ov}, {"agree", ov == value}}
                                   .dump()
                            << '\n';
                    }
                }
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace ecci::cli
