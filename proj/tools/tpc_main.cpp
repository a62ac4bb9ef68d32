// Command-line front end: generate family graphs, run the constructive
// colorings, verify colorings, solve small instances exactly, and compare
// the three connection numbers. Exit codes: 0 success/PASS, 1 FAIL verdict,
// 2 usage or size-cap errors.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tpc/construct.hpp"
#include "tpc/families.hpp"
#include "tpc/solve.hpp"
#include "tpc/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

using Report = std::vector<std::pair<std::string, std::string>>;

void write_report(const std::string& path, const Report& kv) {
    if (path.empty()) return;
    std::string text;
    for (const auto& [k, v] : kv) text += k + "=" + v + "\n";
    spill(path, text);
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty parameter list");
    return out;
}

const std::map<std::string, std::function<tpc::TotalColoring(const tpc::Graph&)>>& methods() {
    static const std::map<std::string, std::function<tpc::TotalColoring(const tpc::Graph&)>> m = {
        {"complete", [](const tpc::Graph& g) { return tpc::color_complete(g); }},
        {"tree", [](const tpc::Graph& g) { return tpc::color_tree(g); }},
        {"cycle", [](const tpc::Graph& g) { return tpc::color_cycle(g); }},
        {"complete_bipartite", [](const tpc::Graph& g) { return tpc::color_complete_bipartite(g); }},
        {"complete_multipartite",
         [](const tpc::Graph& g) { return tpc::color_complete_multipartite(g); }},
        {"2connected", [](const tpc::Graph& g) { return tpc::color_2connected(g); }},
        {"general", [](const tpc::Graph& g) { return tpc::color_general(g); }},
        {"min_degree", [](const tpc::Graph& g) { return tpc::color_min_degree(g); }},
        {"traceable", [](const tpc::Graph& g) { return tpc::color_traceable(g); }},
    };
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total proper connection toolkit"};
    app.require_subcommand(1);

    std::string family, params_csv, graph_path, coloring_path, out_path, report_path;
    std::string method, mode_name = "tpc", number_name = "tpc";
    std::uint64_t seed = 0;
    bool strong = false;
    int cap = 16, workers = 1;

    auto* gen = app.add_subcommand("gen", "generate a family graph");
    gen->add_option("--family", family, "one of the family kinds")->required();
    gen->add_option("--params", params_csv, "comma-separated integers")->required();
    auto* seed_opt = gen->add_option("--seed", seed, "seed for random kinds");
    gen->add_option("-o,--out", out_path, "output graph file (stdout when absent)");
    gen->add_option("--report", report_path, "write a key=value run report");

    auto* color = app.add_subcommand("color", "run a constructive coloring");
    color->add_option("-g,--graph", graph_path, "input graph file")->required();
    color->add_option("--method", method, "constructor to run")->required();
    color->add_option("-o,--out", out_path, "output coloring file")->required();
    color->add_option("--report", report_path, "write a key=value run report");

    auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
    verify->add_option("-g,--graph", graph_path, "input graph file")->required();
    verify->add_option("-c,--coloring", coloring_path, "input coloring file")->required();
    verify->add_option("--mode", mode_name, "tpc, pc, or pvc");
    verify->add_flag("--strong", strong, "also require the two-path endpoint condition (tpc only)");
    verify->add_option("--report", report_path, "write a key=value run report");

    auto* solve = app.add_subcommand("solve", "exact value by bounded enumeration");
    solve->add_option("-g,--graph", graph_path, "input graph file")->required();
    solve->add_option("--number", number_name, "tpc, pc, or pvc");
    solve->add_option("--cap", cap, "max colorable elements before refusing");
    solve->add_option("--workers", workers, "worker threads");
    solve->add_option("--report", report_path, "write a key=value run report");

    auto* compare = app.add_subcommand("compare", "tpc, pc, pvc and their gaps");
    compare->add_option("-g,--graph", graph_path, "input graph file")->required();
    compare->add_option("--cap", cap, "max colorable elements before refusing");
    compare->add_option("--workers", workers, "worker threads");
    compare->add_option("--report", report_path, "write a key=value run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            tpc::FamilySpec spec;
            spec.kind = family;
            spec.parameters = parse_int_list(params_csv);
            if (seed_opt->count()) spec.seed = seed;
            tpc::GeneratedGraph gg = tpc::generate(spec);
            std::string text = tpc::serialize_generated(gg);
            if (out_path.empty())
                std::cout << text;
            else
                spill(out_path, text);
            Report rep{{"family", family},
                       {"params", params_csv},
                       {"n", std::to_string(gg.graph.vertex_count())},
                       {"m", std::to_string(gg.graph.edge_count())}};
            if (seed_opt->count()) rep.emplace_back("seed", std::to_string(seed));
            if (!out_path.empty()) rep.emplace_back("out", out_path);
            write_report(report_path, rep);
            return 0;
        }
        if (*color) {
            auto it = methods().find(method);
            if (it == methods().end()) {
                std::string known;
                for (const auto& [name, fn] : methods()) known += " " + name;
                throw std::invalid_argument("unknown method '" + method + "'; known:" + known);
            }
            tpc::Graph g = tpc::parse_graph(slurp(graph_path));
            tpc::TotalColoring c = it->second(g);
            spill(out_path, tpc::serialize_coloring(g, c));
            std::cout << c.color_count() << "\n";
            write_report(report_path, {{"method", method},
                                       {"colors", std::to_string(c.color_count())},
                                       {"max_color", std::to_string(c.max_color())},
                                       {"out", out_path}});
            return 0;
        }
        if (*verify) {
            tpc::Mode mode = tpc::parse_mode(mode_name);
            if (strong && mode != tpc::Mode::tpc)
                throw std::invalid_argument("--strong applies to --mode tpc only");
            tpc::Graph g = tpc::parse_graph(slurp(graph_path));
            tpc::TotalColoring c = tpc::parse_coloring(g, slurp(coloring_path));
            auto report = tpc::is_total_proper_connected(g, c, mode);
            bool ok = report.connected;
            std::pair<int, int> bad{-1, -1};
            if (!ok && report.failing_pair) bad = *report.failing_pair;
            if (ok && strong) {
                auto sp = tpc::has_strong_property(g, c);
                if (!sp.holds) {
                    ok = false;
                    if (sp.failing_pair) bad = *sp.failing_pair;
                }
            }
            Report rep{{"mode", mode_name},
                       {"strong", strong ? "1" : "0"},
                       {"verdict", ok ? "PASS" : "FAIL"},
                       {"pairs_checked", std::to_string(report.pairs_checked)}};
            if (ok) {
                std::cout << "PASS\n";
            } else {
                std::cout << "FAIL " << bad.first << " " << bad.second << "\n";
                rep.emplace_back("failing_u", std::to_string(bad.first));
                rep.emplace_back("failing_v", std::to_string(bad.second));
            }
            write_report(report_path, rep);
            return ok ? 0 : 1;
        }
        if (*solve || *compare) {
            tpc::Graph g = tpc::parse_graph(slurp(graph_path));
            tpc::SolveOptions opts;
            opts.caps.max_elements = cap;
            opts.workers = workers;
            if (*compare) {
                auto rec = tpc::compare_numbers(g, opts);
                std::cout << "tpc=" << rec.tpc << " pc=" << rec.pc << " pvc=" << rec.pvc
                          << " tpc-pc=" << rec.gap_pc << " tpc-pvc=" << rec.gap_pvc << "\n";
                write_report(report_path, {{"tpc", std::to_string(rec.tpc)},
                                           {"pc", std::to_string(rec.pc)},
                                           {"pvc", std::to_string(rec.pvc)},
                                           {"gap_pc", std::to_string(rec.gap_pc)},
                                           {"gap_pvc", std::to_string(rec.gap_pvc)}});
                return 0;
            }
            tpc::SolveResult res;
            if (number_name == "tpc")
                res = tpc::exact_tpc(g, opts);
            else if (number_name == "pc")
                res = tpc::exact_pc(g, opts);
            else if (number_name == "pvc")
                res = tpc::exact_pvc(g);
            else
                throw std::invalid_argument("unknown number '" + number_name + "'");
            std::cout << res.value << "\n";
            write_report(report_path,
                         {{"number", number_name},
                          {"value", std::to_string(res.value)},
                          {"colorings_tested", std::to_string(res.colorings_tested)},
                          {"elapsed_seconds", std::to_string(res.elapsed_seconds)},
                          {"workers", std::to_string(workers)},
                          {"cap", std::to_string(cap)}});
            return 0;
        }
    } catch (const tpc::SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
