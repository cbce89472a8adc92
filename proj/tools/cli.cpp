#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliquesplit/clique.hpp"
#include "cliquesplit/generators.hpp"
#include "cliquesplit/graph_io.hpp"
#include "cliquesplit/oracle.hpp"
#include "cliquesplit/partition.hpp"

namespace cliquesplit::cli {
namespace {

using ojson = nlohmann::ordered_json;

struct Source {
    std::string in;
    std::string gen;
    std::uint64_t seed = 0;
};

struct Loaded {
    Graph graph;
    std::string descriptor;
};

Loaded load(const Source& s) {
    if (s.in.empty() == s.gen.empty()) throw Error("exactly one of --in or --gen is required");
    if (!s.in.empty()) return {load_graph_file(s.in), s.in};
    return {generate(parse_recipe(s.gen, s.seed)), "gen:" + s.gen};
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
    auto log = std::make_shared<spdlog::logger>("clique-splitter", sink);
    log->set_pattern("[%l] %v");
    auto level = spdlog::level::warn;
    if (const char* env = std::getenv("CLIQUE_SPLITTER_LOG"); env && *env) level = spdlog::level::from_str(env);
    log->set_level(level);
    return log;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
    if (!f) throw Error("write failed for " + path);
}

ojson json_array(const std::vector<int>& v) {
    ojson a = ojson::array();
    for (int x : v) a.push_back(x);
    return a;
}

void print_part_table(std::ostream& out, const std::vector<int>& quotas, const VerificationReport& r) {
    out << "part  quota  omega  status\n";
    for (std::size_t i = 0; i < quotas.size(); ++i) {
        std::ostringstream line;
        line << i << std::string(6 - std::min<std::size_t>(5, std::to_string(i).size()), ' ') << quotas[i]
             << std::string(7 - std::min<std::size_t>(6, std::to_string(quotas[i]).size()), ' ') << r.part_omegas[i]
             << std::string(7 - std::min<std::size_t>(6, std::to_string(r.part_omegas[i]).size()), ' ');
        if (r.witnesses[i]) {
            line << "K_" << quotas[i] << " at";
            for (Vertex v : *r.witnesses[i]) line << ' ' << v;
        } else {
            line << "ok";
        }
        out << line.str() << '\n';
    }
}

// ---------------------------------------------------------------------------

struct PartitionArgs {
    Source source;
    std::string quotas;
    std::string out_path;
    bool json = false;
    bool no_timing = false;
    int budget_n = 14;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out, std::ostream& err, spdlog::logger& log) {
    Loaded loaded = load(a.source);
    const Graph& g = loaded.graph;
    const PartitionSpec spec = PartitionSpec::parse(a.quotas);
    EngineOptions options;
    options.seed = a.source.seed;
    options.exact_colouring_max_n = a.budget_n;

    ojson report;
    report["input"] = loaded.descriptor;
    report["n"] = g.order();
    report["quotas"] = json_array(spec.quotas());
    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    std::optional<VerificationReport> verified;
    try {
        Partition part = kway_clique_partition(g, spec, options);
        verified = oracle::verify_partition(g, part.assignment, spec.quotas());
        report["strategy"] = part.strategy;
        report["assignment"] = json_array(part.assignment);
        report["part_omegas"] = json_array(verified->part_omegas);
        report["valid"] = verified->valid;
        code = verified->valid ? kOk : kInvalid;
    } catch (const StrategiesExhausted& e) {
        log.warn("all strategies exhausted at depth {}: {}", e.depth(), e.what());
        report["strategy"] = nullptr;
        report["assignment"] = ojson::array();
        report["part_omegas"] = ojson::array();
        report["valid"] = false;
        report["error"] = e.what();
        report["depth"] = e.depth();
        report["diagnostics"] = e.diagnostics();
        code = kExhausted;
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["elapsed_ms"] = a.no_timing ? 0.0 : ms;
    report["seed"] = a.source.seed;

    const std::string text = report.dump(2) + "\n";
    if (!a.out_path.empty()) write_file(a.out_path, text);
    if (a.json) {
        out << text;
    } else {
        out << "n=" << g.order() << " max_degree=" << g.max_degree() << " quotas=" << spec.to_string() << '\n';
        if (verified) {
            out << "strategy=" << report["strategy"].get<std::string>() << " valid=" << (verified->valid ? "yes" : "no")
                << '\n';
            print_part_table(out, spec.quotas(), *verified);
        } else {
            out << "no partition: " << report["error"].get<std::string>() << '\n';
            for (const auto& d : report["diagnostics"]) out << "  " << d.get<std::string>() << '\n';
        }
    }
    if (code == kExhausted) err << "all strategies exhausted\n";
    return code;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    Source source;
    std::string partition_path;
    std::string quotas;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    Loaded loaded = load(a.source);
    const Graph& g = loaded.graph;
    std::ifstream f(a.partition_path, std::ios::binary);
    if (!f) throw Error("cannot open " + a.partition_path);
    nlohmann::json report;
    try {
        report = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid partition JSON: ") + e.what(), 0);
    }
    std::vector<int> assignment, quotas;
    try {
        assignment = report.at("assignment").get<std::vector<int>>();
        quotas = a.quotas.empty() ? report.at("quotas").get<std::vector<int>>() : PartitionSpec::parse(a.quotas).quotas();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("partition JSON lacks assignment/quotas: ") + e.what(), 0);
    }
    if (static_cast<int>(assignment.size()) != g.order())
        throw Error("assignment has " + std::to_string(assignment.size()) + " entries for " +
                    std::to_string(g.order()) + " vertices");
    for (int x : assignment)
        if (x < 0 || x >= static_cast<int>(quotas.size()))
            throw Error("part index " + std::to_string(x) + " outside the quota list");

    const VerificationReport r = oracle::verify_partition(g, assignment, quotas);
    if (a.json) {
        ojson j;
        j["n"] = g.order();
        j["quotas"] = json_array(quotas);
        j["part_omegas"] = json_array(r.part_omegas);
        ojson w = ojson::array();
        for (const auto& x : r.witnesses) w.push_back(x ? ojson(*x) : ojson(nullptr));
        j["witnesses"] = w;
        j["valid"] = r.valid;
        out << j.dump(2) << '\n';
    } else {
        print_part_table(out, quotas, r);
        out << (r.valid ? "valid" : "INVALID") << '\n';
    }
    if (!r.valid) err << "partition violates its quotas\n";
    return r.valid ? kOk : kInvalid;
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string recipe;
    std::string out_path;
    std::string format = "dimacs";
    std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = generate(parse_recipe(a.recipe, a.seed));
    const std::string text = a.format == "json" ? graph_to_json(g).dump() + "\n" : serialize_dimacs(g);
    const CliqueCertificate omega = clique_number(g);
    std::ostringstream summary;
    summary << "n=" << g.order() << " m=" << g.edge_count() << " max_degree=" << g.max_degree()
            << " omega=" << omega.omega << '\n';
    if (a.out_path.empty()) {
        out << text;
        err << summary.str();
    } else {
        write_file(a.out_path, text);
        out << summary.str();
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
    Source source;
    bool json = false;
    int budget_n = 14;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
    Loaded loaded = load(a.source);
    const Graph& g = loaded.graph;
    const CliqueCertificate omega = clique_number(g);
    ojson j;
    j["input"] = loaded.descriptor;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["max_degree"] = g.max_degree();
    j["min_degree"] = g.min_degree();
    j["regular"] = g.is_regular();
    j["omega"] = omega.omega;
    j["omega_witness"] = omega.witness;
    j["degeneracy"] = oracle::degeneracy(g);
    if (g.order() <= a.budget_n)
        j["chromatic_number"] = oracle::chromatic_number(g);
    else
        j["chromatic_number"] = nullptr;
    if (auto prod = detect_cycle_clique_product(g))
        j["cycle_clique_product"] = {prod->first, prod->second};
    else
        j["cycle_clique_product"] = nullptr;
    if (a.json) {
        out << j.dump(2) << '\n';
    } else {
        for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ": " << it.value().dump() << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct ProbeArgs {
    std::vector<std::string> recipes;
    std::string seeds = "0..19";
    std::string policy = "all2";
    std::string out_path;
    int budget_n = 10;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto s = std::stoull(text);
            return {s, s};
        }
        const auto lo = std::stoull(text.substr(0, dots));
        const auto hi = std::stoull(text.substr(dots + 2));
        if (hi < lo) throw Error("empty seed range " + text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("bad seed range '" + text + "'", 0);
    }
}

// Specs a policy asks for on a graph with maximum degree delta.
std::vector<PartitionSpec> policy_specs(const std::string& policy, const Graph& g) {
    const int delta = g.max_degree();
    std::vector<PartitionSpec> out;
    if (policy == "none") return out;
    if (policy == "all2") {
        if (delta - 1 >= 1) out.emplace_back(std::vector<int>(static_cast<std::size_t>(delta - 1), 2));
        return out;
    }
    if (policy == "pairs") {
        for (int q = 2; q <= (delta + 1) / 2; ++q) out.emplace_back(std::vector<int>{delta + 1 - q, q});
        return out;
    }
    PartitionSpec fixed = PartitionSpec::parse(policy);
    if (fixed.feasible_for(g)) out.push_back(fixed);
    return out;
}

int cmd_probe(const ProbeArgs& a, std::ostream& out, spdlog::logger& log) {
    if (a.recipes.empty()) throw Error("probe needs at least one --recipe");
    const auto [lo, hi] = parse_seed_range(a.seeds);
    if (a.policy != "none" && a.policy != "all2" && a.policy != "pairs") PartitionSpec::parse(a.policy);

    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path, std::ios::binary);
        if (!file) throw Error("cannot write " + a.out_path);
    }
    std::ostream& sink = a.out_path.empty() ? out : file;

    oracle::OracleBudget budget;
    budget.max_n_assignment = a.budget_n;
    int samples = 0, skipped = 0, findings = 0;
    auto emit = [&](const Graph& g, const std::string& recipe, std::uint64_t seed, const ojson& spec,
                    const char* phenomenon, ojson detail) {
        ojson f;
        f["graph"] = ojson::parse(graph_to_json(g).dump());
        f["recipe"] = recipe;
        f["seed"] = seed;
        f["spec"] = spec;
        f["phenomenon"] = phenomenon;
        f["detail"] = std::move(detail);
        sink << f.dump() << '\n';
        ++findings;
    };

    if (a.policy == "none") {
        log.info("probe: empty quota policy, nothing to check");
        return kOk;
    }
    for (const std::string& recipe_text : a.recipes) {
        for (std::uint64_t seed = lo; seed <= hi; ++seed) {
            ++samples;
            Graph g;
            try {
                g = generate(parse_recipe(recipe_text, seed));
            } catch (const GraphError& e) {
                log.warn("skipped {} seed {}: {}", recipe_text, seed, e.what());
                ++skipped;
                continue;
            }
            const int delta = g.max_degree();
            const int omega = clique_number(g).omega;
            if (omega > delta - 1) {
                log.debug("{} seed {}: omega {} > Delta - 1, outside the question", recipe_text, seed, omega);
                continue;
            }
            if (g.order() > a.budget_n) {
                log.warn("skipped {} seed {}: n = {} exceeds --budget-n {}", recipe_text, seed, g.order(), a.budget_n);
                ++skipped;
                continue;
            }
            try {
                const int chi = oracle::chromatic_number(g, budget);
                if (chi == delta)
                    emit(g, recipe_text, seed, nullptr, "bk_tight",
                         {{"chromatic_number", chi}, {"max_degree", delta}, {"omega", omega}});
                for (const PartitionSpec& spec : policy_specs(a.policy, g)) {
                    const auto exists = oracle::exists_clique_partition(g, spec, budget);
                    std::string engine = "succeeded";
                    try {
                        Partition part = kway_clique_partition(g, spec);
                        if (!oracle::verify_partition(g, part, spec).valid) engine = "invalid";
                    } catch (const StrategiesExhausted&) {
                        engine = "exhausted";
                    } catch (const BudgetExceeded&) {
                        engine = "over-budget";
                    }
                    const ojson spec_json = json_array(spec.quotas());
                    const ojson detail = {{"chromatic_number", chi}, {"max_degree", delta}, {"omega", omega},
                                          {"engine", engine}, {"oracle_states", exists.states}};
                    if (!exists.exists)
                        emit(g, recipe_text, seed, spec_json, "oracle_infeasible", detail);
                    else if (engine != "succeeded")
                        emit(g, recipe_text, seed, spec_json, "engine_exhausted", detail);
                }
            } catch (const BudgetExceeded& e) {
                log.warn("skipped {} seed {}: {}", recipe_text, seed, e.what());
                ++skipped;
            }
        }
    }
    log.info("probe: {} samples, {} skipped, {} findings", samples, skipped, findings);
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto log = make_logger(err);
    CLI::App app{"Clique-bounded vertex partitions"};
    app.name("clique-splitter");
    app.require_subcommand(1);

    auto add_source = [](CLI::App* sub, Source& s) {
        sub->add_option("--in", s.in, "graph file (DIMACS or JSON)");
        sub->add_option("--gen", s.gen, "generator recipe, e.g. regular:28,13");
        sub->add_option("--seed", s.seed, "seed for generators and the engine");
    };

    PartitionArgs pa;
    auto* partition = app.add_subcommand("partition", "split a graph under a quota list");
    add_source(partition, pa.source);
    partition->add_option("--quotas", pa.quotas, "p1,p2,... non-increasing")->required();
    partition->add_option("--out", pa.out_path, "write the JSON report here");
    partition->add_flag("--json", pa.json, "print the JSON report");
    partition->add_flag("--no-timing", pa.no_timing, "report elapsed_ms as 0");
    partition->add_option("--budget-n", pa.budget_n, "exact colouring up to this many vertices");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a partition report against a graph");
    add_source(verify, va.source);
    verify->add_option("--partition", va.partition_path, "partition report JSON")->required();
    verify->add_option("--quotas", va.quotas, "override the report's quotas");
    verify->add_flag("--json", va.json, "print a JSON verification report");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("recipe", ga.recipe, "generator recipe")->required();
    gen->add_option("--out", ga.out_path, "output file (stdout if omitted)");
    gen->add_option("--format", ga.format, "dimacs or json")->check(CLI::IsMember({"dimacs", "json"}));
    gen->add_option("--seed", ga.seed, "generator seed");

    StatsArgs sa;
    auto* stats = app.add_subcommand("stats", "graph invariants");
    add_source(stats, sa.source);
    stats->add_flag("--json", sa.json, "print JSON");
    stats->add_option("--budget-n", sa.budget_n, "exact chromatic number up to this many vertices");

    ProbeArgs pr;
    auto* probe = app.add_subcommand("probe", "search small graphs for infeasible quota lists");
    probe->add_option("--recipe", pr.recipes, "generator recipe (repeatable)");
    probe->add_option("--seeds", pr.seeds, "seed range A..B, inclusive");
    probe->add_option("--policy", pr.policy, "all2, pairs, none or an explicit quota list");
    probe->add_option("--out", pr.out_path, "write findings here (JSON lines)");
    probe->add_option("--budget-n", pr.budget_n, "largest n handed to the exhaustive oracle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kIoError;
    }

    try {
        if (partition->parsed()) return cmd_partition(pa, out, err, *log);
        if (verify->parsed()) return cmd_verify(va, out, err);
        if (gen->parsed()) return cmd_gen(ga, out, err);
        if (stats->parsed()) return cmd_stats(sa, out);
        if (probe->parsed()) return cmd_probe(pr, out, *log);
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what();
        if (!e.witness().empty()) {
            err << " (witness:";
            for (Vertex v : e.witness()) err << ' ' << v;
            err << ')';
        }
        err << '\n';
        return kPrecondition;
    } catch (const StrategiesExhausted& e) {
        err << "all strategies exhausted: " << e.what() << '\n';
        return kExhausted;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kIoError;
}

}  // namespace cliquesplit::cli
