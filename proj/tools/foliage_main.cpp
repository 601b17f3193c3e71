// Copyright 2026 The Foliage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "foliage/entanglement.hpp"
#include "foliage/errors.hpp"
#include "foliage/foliage.hpp"
#include "foliage/io.hpp"
#include "foliage/orbits.hpp"
#include "foliage/partitions.hpp"
#include "foliage/statevector.hpp"
#include "foliage/weighted_graph.hpp"

namespace {

using namespace foliage;

struct Config {
    std::string graph6;
    std::string weighted;
    std::string input;
    std::string output;
    std::string dump;
    bool csv = false;
    bool json = false;
    bool force = false;
    std::size_t workers = 1;

    std::size_t vertex = 0;
    std::string qlc_op;
    std::int64_t qlc_value = 0;
    std::string subset;
    std::optional<std::uint64_t> mask;
    bool oracle = false;
    std::size_t n = 0;
    bool connected = false;
    std::vector<std::size_t> partition;
};

class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct Input {
    std::optional<Graph> graph;
    std::optional<WeightedGraph> weighted;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_weighted(const std::string &text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        return line.rfind("d ", 0) == 0;
    }
    return false;
}

Input load_input(const Config &cfg) {
    const int sources = !cfg.graph6.empty() + !cfg.weighted.empty() + !cfg.input.empty();
    if (sources != 1) {
        throw InputError("give exactly one of --graph6, --weighted, --input");
    }
    Input input;
    if (!cfg.graph6.empty()) {
        input.graph = graph6_decode(cfg.graph6);
    } else if (!cfg.weighted.empty()) {
        std::string text = cfg.weighted;
        std::replace(text.begin(), text.end(), ';', '\n');
        input.weighted = parse_weighted(text);
    } else {
        const std::string text = read_file(cfg.input);
        if (looks_weighted(text)) {
            input.weighted = parse_weighted(text);
        } else {
            std::istringstream in(text);
            auto graphs = read_graph6_lines(in);
            if (graphs.size() != 1) {
                throw InputError(cfg.input + " must hold exactly one graph6 line");
            }
            input.graph = std::move(graphs.front());
        }
    }
    return input;
}

Graph load_graph(const Config &cfg) {
    Input input = load_input(cfg);
    if (!input.graph) {
        throw InputError("this subcommand needs an unweighted graph");
    }
    return *input.graph;
}

VertexSubset parse_subset(const Config &cfg, std::size_t n) {
    if (cfg.mask) {
        if (n < 64 && (*cfg.mask >> n) != 0) {
            throw InputError("mask has bits beyond vertex count");
        }
        return VertexSubset::from_mask(n, *cfg.mask);
    }
    VertexSubset s(n);
    std::stringstream in(cfg.subset);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty()) {
            continue;
        }
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) {
            throw InputError("bad subset entry '" + item + "'");
        }
        s.insert(static_cast<std::size_t>(v));
    }
    return s;
}

std::string set_text(const std::vector<std::size_t> &members) {
    std::string text = "{";
    for (std::size_t i = 0; i < members.size(); i++) {
        text += (i ? "," : "") + std::to_string(members[i]);
    }
    return text + "}";
}

std::string cycle_text(const Permutation &p) {
    std::vector<bool> seen(p.size(), false);
    std::string text;
    for (std::size_t start = 0; start < p.size(); start++) {
        if (seen[start] || p[start] == start) {
            continue;
        }
        text += "(";
        for (std::size_t v = start; !seen[v]; v = p[v]) {
            seen[v] = true;
            text += (v == start ? "" : " ") + std::to_string(v);
        }
        text += ")";
    }
    return text.empty() ? "()" : text;
}

std::string join_chain(const std::vector<std::size_t> &chain, const char *sep) {
    std::string text;
    for (std::size_t i = 0; i < chain.size(); i++) {
        text += (i ? sep : "") + std::to_string(chain[i]);
    }
    return text;
}

void cmd_foliage(const Config &cfg, std::ostream &out) {
    Input input = load_input(cfg);
    if (input.weighted) {
        out << to_text(foliage_partition(*input.weighted)) << '\n';
        return;
    }
    const FoliageRepresentation rep = foliage_representation(*input.graph);
    if (cfg.json) {
        out << to_json(rep) << '\n';
    } else if (cfg.csv) {
        out << "part,type,axil,vertices\n";
        for (std::size_t i = 0; i < rep.partition.size(); i++) {
            std::string axil;
            for (auto v : rep.partition.part(i)) {
                if (rep.axils.contains(v)) {
                    axil = std::to_string(v);
                }
            }
            out << i << ',' << to_string(rep.types[i]) << ',' << axil << ','
                << join_chain(rep.partition.part(i), " ") << '\n';
        }
    } else {
        out << to_text(rep) << '\n';
    }
}

void cmd_qlc(const Config &cfg, std::ostream &out) {
    Input input = load_input(cfg);
    if (!input.weighted) {
        throw InputError("qlc needs a weighted graph");
    }
    if (cfg.qlc_op == "star") {
        out << format_weighted(qudit_star(*input.weighted, cfg.vertex, cfg.qlc_value));
    } else {
        out << format_weighted(qudit_scale(*input.weighted, cfg.vertex, cfg.qlc_value));
    }
}

void cmd_saturation(const Config &cfg, std::ostream &out) {
    const SaturationReport report = saturation(load_graph(cfg));
    if (cfg.csv) {
        out << "component,time,size,chain\n";
        out << "all," << report.time << ',' << report.size << ',' << join_chain(report.chain, " ") << '\n';
        for (std::size_t i = 0; i < report.components.size(); i++) {
            const auto &c = report.components[i];
            out << i << ',' << c.time << ',' << c.size << ',' << join_chain(c.chain, " ") << '\n';
        }
        return;
    }
    out << "time=" << report.time << " size=" << report.size << " chain=[" << join_chain(report.chain, ",") << "]\n";
    for (std::size_t i = 0; i < report.components.size(); i++) {
        const auto &c = report.components[i];
        out << "component " << i << ": time=" << c.time << " size=" << c.size << " chain=["
            << join_chain(c.chain, ",") << "]\n";
    }
}

void cmd_entropy(const Config &cfg, std::ostream &out) {
    Input input = load_input(cfg);
    if (input.weighted) {
        const auto &g = *input.weighted;
        out << statevector_entropy_oracle(g, parse_subset(cfg, g.size()), cfg.force) << '\n';
        return;
    }
    const Graph &g = *input.graph;
    const VertexSubset a = parse_subset(cfg, g.size());
    out << (cfg.oracle ? statevector_entropy_oracle(g, a, cfg.force) : entropy(g, a)) << '\n';
}

void cmd_schmidt(const Config &cfg, std::ostream &out) {
    const Graph g = load_graph(cfg);
    if (g.size() > kMaxSchmidtVertices && !cfg.force) {
        throw GuardError("schmidt limited to " + std::to_string(kMaxSchmidtVertices) + " vertices");
    }
    const EntropyVector s = schmidt_vector(g);
    if (cfg.csv) {
        write_schmidt_csv(out, s);
        return;
    }
    for (std::uint64_t mask = 0; mask < s.values.size(); mask++) {
        out << set_text(VertexSubset::from_mask(g.size(), mask).members()) << ' ' << int{s.values[mask]} << '\n';
    }
}

void cmd_uniformity(const Config &cfg, std::ostream &out) {
    const Graph g = load_graph(cfg);
    const UniformityReport report = uniformity(g);
    if (cfg.csv) {
        const std::vector<std::size_t> members = report.witness ? report.witness->members() : std::vector<std::size_t>{};
        out << "k_max,foliage_trivial,witness\n"
            << report.k_max << ',' << (report.foliage_trivial ? 1 : 0) << ',' << join_chain(members, " ") << '\n';
        return;
    }
    out << "k_max=" << report.k_max << " foliage_trivial=" << (report.foliage_trivial ? "yes" : "no");
    if (report.witness) {
        out << " witness=" << set_text(report.witness->members());
    }
    out << '\n';
}

void cmd_orbit(const Config &cfg, std::ostream &out) {
    const Graph g = load_graph(cfg);
    const OrbitReport report = lc_orbit(g, !cfg.dump.empty(), cfg.force);
    if (!cfg.dump.empty()) {
        std::ofstream dump(cfg.dump);
        if (!dump) {
            throw InputError("cannot write " + cfg.dump);
        }
        for (const auto &m : *report.members) {
            dump << graph6_encode(m) << '\n';
        }
    }
    if (cfg.csv) {
        out << "L,C\n" << report.labeled_size << ',' << report.class_size << '\n';
    } else {
        out << "labeled=" << report.labeled_size << " classes=" << report.class_size << '\n';
    }
}

void cmd_aut(const Config &cfg, std::ostream &out) {
    const Graph g = load_graph(cfg);
    const AutReport r = lc_automorphism_group(g, cfg.force);
    if (cfg.csv) {
        ClassTableRow row;
        row.class_id = 1;
        row.n = g.size();
        row.part_sizes = r.partition.part_sizes();
        row.aut = r;
        out << class_table_csv({row});
        return;
    }
    out << "partition=" << to_text(r.partition) << '\n';
    out << "order=" << r.order << " aut_in=" << r.aut_in_order << " aut_out=" << r.aut_out_order
        << " aut_out_upper=" << r.aut_out_upper_order << '\n';
    out << "L=" << r.labeled_size << " C=" << r.class_size << " I=" << r.statistic.str() << " ("
        << format_fixed(r.statistic, 2) << ")\n";
    for (std::size_t i = 0; i < r.generators.size(); i++) {
        out << "generator " << cycle_text(r.generators[i]) << " parts " << cycle_text(r.part_permutations[i])
            << '\n';
    }
}

void cmd_classes(const Config &cfg, std::ostream &out) {
    if (cfg.csv) {
        if (!cfg.connected) {
            throw InputError("the class table covers connected graphs; add --connected");
        }
        const auto rows = class_table(cfg.n, cfg.workers, cfg.force);
        out << class_table_csv(rows);
        if (!cfg.dump.empty()) {
            std::ofstream dump(cfg.dump);
            for (const auto &row : rows) {
                dump << graph6_encode(row.representative) << '\n';
            }
        }
        return;
    }
    const ClassCensus census = lc_classes(cfg.n, cfg.connected, cfg.workers, cfg.force);
    if (!cfg.dump.empty()) {
        std::ofstream dump(cfg.dump);
        if (!dump) {
            throw InputError("cannot write " + cfg.dump);
        }
        for (const auto &rep : census.representatives) {
            dump << graph6_encode(rep) << '\n';
        }
    }
    out << census.count() << '\n';
}

void cmd_stats(const Config &cfg, std::ostream &out) {
    const SaturationStatsRow row = saturation_stats(cfg.n, cfg.workers, cfg.force);
    if (cfg.csv) {
        out << "n,classes,avg_time,avg_size,reducible,fully_reducible\n"
            << row.n << ',' << row.classes << ',';
    }
    out << to_csv(row) << '\n';
}

void cmd_bound(const Config &cfg, std::ostream &out) {
    const BigInt p = partition_number(cfg.n);
    const BigInt bound = class_lower_bound(cfg.n);
    if (cfg.csv) {
        out << "n,partitions,lower_bound\n" << cfg.n << ',' << p << ',' << bound << '\n';
    } else {
        out << "p(" << cfg.n << ")=" << p << " lower_bound=" << bound << '\n';
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Foliage partition and local-complementation invariants of graph states"};
    app.require_subcommand(1);
    Config cfg;

    auto add_input = [&cfg](CLI::App *sub) {
        sub->add_option("-g,--graph6", cfg.graph6, "Inline graph6 text");
        sub->add_option("-w,--weighted", cfg.weighted, "Inline weighted graph, lines separated by ';'");
        sub->add_option("-i,--input", cfg.input, "Input file (graph6 line or weighted text)");
    };
    auto add_common = [&cfg](CLI::App *sub) {
        sub->add_option("-o,--output", cfg.output, "Write the report here instead of stdout");
        sub->add_flag("--csv", cfg.csv, "Machine-readable CSV output");
        sub->add_flag("--force", cfg.force, "Override size guards (may run for a long time)");
        sub->add_option("-j,--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    };

    std::vector<std::pair<CLI::App *, std::function<void(const Config &, std::ostream &)>>> commands;

    auto *foliage_cmd = app.add_subcommand("foliage", "Foliage partition and representation");
    add_input(foliage_cmd);
    add_common(foliage_cmd);
    foliage_cmd->add_flag("--json", cfg.json, "JSON representation");
    commands.emplace_back(foliage_cmd, cmd_foliage);

    auto *lc_cmd = app.add_subcommand("lc", "Local complementation at a vertex");
    lc_cmd->add_option("vertex", cfg.vertex, "Vertex")->required();
    add_input(lc_cmd);
    add_common(lc_cmd);
    commands.emplace_back(lc_cmd, [](const Config &c, std::ostream &out) {
        out << graph6_encode(local_complement(load_graph(c), c.vertex)) << '\n';
    });

    auto *qlc_cmd = app.add_subcommand("qlc", "Qudit local operation on a weighted graph");
    qlc_cmd->add_option("op", cfg.qlc_op, "star or scale")->required()->check(CLI::IsMember({"star", "scale"}));
    qlc_cmd->add_option("vertex", cfg.vertex, "Vertex")->required();
    qlc_cmd->add_option("value", cfg.qlc_value, "Multiplier a for star, factor b for scale")->required();
    add_input(qlc_cmd);
    add_common(qlc_cmd);
    commands.emplace_back(qlc_cmd, cmd_qlc);

    auto *nf_cmd = app.add_subcommand("normal-form", "Graph with every axil complemented away");
    add_input(nf_cmd);
    add_common(nf_cmd);
    commands.emplace_back(nf_cmd, [](const Config &c, std::ostream &out) {
        out << graph6_encode(normal_form(load_graph(c))) << '\n';
    });

    auto *sat_cmd = app.add_subcommand("saturation", "Iterated foliage graph until the partition is trivial");
    add_input(sat_cmd);
    add_common(sat_cmd);
    commands.emplace_back(sat_cmd, cmd_saturation);

    auto *ent_cmd = app.add_subcommand("entropy", "Entanglement entropy of a vertex subset");
    add_input(ent_cmd);
    add_common(ent_cmd);
    auto *subset_opt = ent_cmd->add_option("--subset", cfg.subset, "Comma-separated vertices");
    ent_cmd->add_option("--mask", cfg.mask, "Subset as a bitmask")->excludes(subset_opt);
    ent_cmd->add_flag("--oracle", cfg.oracle, "Use the dense state-vector computation");
    commands.emplace_back(ent_cmd, cmd_entropy);

    auto *schmidt_cmd = app.add_subcommand("schmidt", "Entropy of every vertex subset");
    add_input(schmidt_cmd);
    add_common(schmidt_cmd);
    commands.emplace_back(schmidt_cmd, cmd_schmidt);

    auto *uni_cmd = app.add_subcommand("uniformity", "Largest k with maximally mixed k-body marginals");
    add_input(uni_cmd);
    add_common(uni_cmd);
    commands.emplace_back(uni_cmd, cmd_uniformity);

    auto *orbit_cmd = app.add_subcommand("orbit", "Labeled LC-orbit size and isomorphism classes in it");
    add_input(orbit_cmd);
    add_common(orbit_cmd);
    orbit_cmd->add_option("--dump", cfg.dump, "Write orbit members as graph6 lines");
    commands.emplace_back(orbit_cmd, cmd_orbit);

    auto *aut_cmd = app.add_subcommand("aut", "LC-automorphism group by brute force");
    add_input(aut_cmd);
    add_common(aut_cmd);
    commands.emplace_back(aut_cmd, cmd_aut);

    auto *classes_cmd = app.add_subcommand("classes", "Count LC-classes on n vertices");
    classes_cmd->add_option("--n", cfg.n, "Vertex count")->required();
    classes_cmd->add_flag("--connected", cfg.connected, "Connected graphs only");
    classes_cmd->add_option("--dump", cfg.dump, "Write class representatives as graph6 lines");
    add_common(classes_cmd);
    commands.emplace_back(classes_cmd, cmd_classes);

    auto *stats_cmd = app.add_subcommand("stats", "Saturation averages over connected LC-classes");
    stats_cmd->add_option("--n", cfg.n, "Vertex count")->required();
    add_common(stats_cmd);
    commands.emplace_back(stats_cmd, cmd_stats);

    auto *bound_cmd = app.add_subcommand("bound", "Integer-partition lower bound on the class count");
    bound_cmd->add_option("--n", cfg.n, "Vertex count")->required();
    add_common(bound_cmd);
    commands.emplace_back(bound_cmd, cmd_bound);

    auto *construct_cmd = app.add_subcommand("construct", "Connected graph with prescribed foliage part sizes");
    construct_cmd->add_option("--partition", cfg.partition, "Non-decreasing part sizes")
        ->required()
        ->delimiter(',');
    add_common(construct_cmd);
    commands.emplace_back(construct_cmd, [](const Config &c, std::ostream &out) {
        out << graph6_encode(graph_for_partition(c.partition)) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        std::ostringstream report;
        for (auto &[sub, run] : commands) {
            if (sub->parsed()) {
                run(cfg, report);
            }
        }
        if (cfg.output.empty()) {
            std::cout << report.str();
        } else {
            std::ofstream out(cfg.output);
            if (!out) {
                throw InputError("cannot write " + cfg.output);
            }
            out << report.str();
        }
    } catch (const GuardError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
