// strongid: command-line front end for the identification-code toolkit.
// Machine-readable JSON goes to stdout, errors as JSON to stderr.
// Exit codes: 0 success, 1 domain infeasibility, 2 input error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongid/analysis.hpp"
#include "strongid/code.hpp"
#include "strongid/experiment.hpp"
#include "strongid/generators.hpp"
#include "strongid/graph.hpp"

using nlohmann::ordered_json;
using namespace strongid;

namespace {

constexpr const char* kSchema = "strongid/1";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::istringstream ts(token);
        int v;
        while (ts >> v) ids.push_back(v);
        if (!ts.eof()) throw std::invalid_argument("bad vertex id in list: '" + token + "'");
    }
    return ids;
}

void emit_error(const std::string& kind, const std::string& message,
                ordered_json extra = ordered_json::object()) {
    ordered_json err;
    err["schema"] = kSchema;
    err["error"] = kind;
    err["message"] = message;
    for (auto& [k, v] : extra.items()) err[k] = v;
    std::cerr << err.dump() << "\n";
}

ordered_json verdict_json(const LemmaVerdict& v, const LemmaParams& params) {
    ordered_json j;
    j["n"] = params.n;
    j["y"] = params.y;
    j["p"] = params.p;
    j["degree_cap"] = params.degree_cap;
    j["common_cap"] = params.common_cap;
    j["strong_target"] = params.strong_target;
    j["degree_ok"] = v.degree_ok;
    j["common_ok"] = v.common_ok;
    j["strong_ok"] = v.strong_ok;
    j["connected_ok"] = v.connected_ok;
    j["pass"] = v.pass();
    j["attempts_used"] = v.attempts_used;
    ordered_json w = ordered_json::object();
    if (v.degree_witness) w["degree"] = *v.degree_witness;
    if (v.common_witness) w["common"] = {v.common_witness->first, v.common_witness->second};
    if (v.strong_witness) w["strong"] = {v.strong_witness->first, v.strong_witness->second};
    if (v.unreached_witness) w["unreached"] = *v.unreached_witness;
    j["witnesses"] = w;
    return j;
}

struct GenRequest {
    std::string kind;
    int n = 0;
    double p = 0.0;
    int y = 3;
    int w = 2;
    std::uint64_t seed = 0;
    int max_retries = 100;
    int c_override = 1;
};

void add_gen_options(CLI::App* cmd, GenRequest& req, bool seed_required) {
    cmd->add_option("--n", req.n, "vertex count (all kinds except petersen)");
    cmd->add_option("--p", req.p, "edge probability (gnp)");
    cmd->add_option("--y", req.y, "strength parameter (lemma)");
    cmd->add_option("--w", req.w, "target strong index (chain)");
    auto* seed = cmd->add_option("--seed", req.seed, "PRNG seed (gnp/lemma/chain)");
    if (seed_required) seed->required();
    cmd->add_option("--max-retries", req.max_retries, "generation attempts (lemma/chain)");
    cmd->add_option("--c-override", req.c_override, "override for the block-size constant (chain)");
}

// Builds the requested graph; appends kind-specific report fields to `out`.
Graph run_generator(const GenRequest& req, ordered_json& out) {
    out["kind"] = req.kind;
    if (req.kind == "cycle") return cycle(req.n);
    if (req.kind == "complete") return complete(req.n);
    if (req.kind == "path") return path(req.n);
    if (req.kind == "petersen") return petersen();
    if (req.kind == "gnp") {
        out["p"] = req.p;
        out["seed"] = req.seed;
        return gnp(req.n, req.p, req.seed);
    }
    if (req.kind == "lemma") {
        LemmaParams params = LemmaParams::make(req.n, req.y, req.max_retries);
        auto [g, verdict] = generate_lemma_graph(params, req.seed);
        out["seed"] = req.seed;
        out["verdict"] = verdict_json(verdict, params);
        return g;
    }
    if (req.kind == "chain") {
        ChainResult res = build_strong_graph(req.n, req.w, req.seed, req.max_retries,
                                             req.c_override);
        out["seed"] = req.seed;
        ordered_json plan;
        plan["w"] = res.plan.w;
        plan["block_size"] = res.plan.block_size;
        plan["block_sizes"] = res.plan.block_sizes;
        ordered_json links = ordered_json::array();
        for (auto& [a, b] : res.plan.links) links.push_back({a, b});
        plan["links"] = links;
        out["plan"] = plan;
        ordered_json verdicts = ordered_json::array();
        for (std::size_t i = 0; i < res.block_verdicts.size(); ++i) {
            LemmaParams params = LemmaParams::make(res.plan.block_sizes[i], req.w + 1,
                                                   req.max_retries);
            verdicts.push_back(verdict_json(res.block_verdicts[i], params));
        }
        out["block_verdicts"] = verdicts;
        return res.graph;
    }
    throw std::invalid_argument("unknown generator kind: " + req.kind);
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        emit_error("ParseError", e.what(), {{"line", e.line}});
        return 2;
    } catch (const InvalidEdge& e) {
        emit_error("InvalidEdge", e.what());
        return 2;
    } catch (const SelfLoop& e) {
        emit_error("SelfLoop", e.what());
        return 2;
    } catch (const InvalidVertex& e) {
        emit_error("InvalidVertex", e.what());
        return 2;
    } catch (const SameVertex& e) {
        emit_error("SameVertex", e.what());
        return 2;
    } catch (const InvalidEpsilon& e) {
        emit_error("InvalidEpsilon", e.what());
        return 2;
    } catch (const InvalidSize& e) {
        emit_error("InvalidSize", e.what());
        return 2;
    } catch (const NotRStrong& e) {
        emit_error("NotRStrong", e.what(), {{"strong_index", e.achieved}});
        return 1;
    } catch (const GenerationFailed& e) {
        ordered_json extra{{"attempts", e.attempts}};
        if (e.block >= 0) extra["block"] = e.block;
        emit_error("GenerationFailed", e.what(), extra);
        return 1;
    } catch (const InfeasibleP& e) {
        emit_error("InfeasibleP", e.what());
        return 1;
    } catch (const TooLargeForExact& e) {
        emit_error("TooLargeForExact", e.what());
        return 1;
    } catch (const TooSmall& e) {
        emit_error("TooSmall", e.what());
        return 1;
    } catch (const Error& e) {
        emit_error("Error", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("InvalidInput", e.what());
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong identification codes: generation, verification, construction, bounds"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a graph and write it as an edge list");
    GenRequest gen_req;
    std::string gen_out;
    gen->add_option("kind", gen_req.kind,
                    "one of: cycle complete path petersen gnp lemma chain")
        ->required();
    add_gen_options(gen, gen_req, false);
    gen->add_option("--out", gen_out, "output edge-list path")->required();

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "check a code against a graph");
    std::string verify_graph, verify_code, verify_code_file;
    int verify_r = 1;
    verify->add_option("--graph", verify_graph, "edge-list file")->required();
    auto* code_opt = verify->add_option("--code", verify_code, "comma/space separated vertex ids");
    auto* code_file_opt =
        verify->add_option("--code-file", verify_code_file, "file of whitespace-separated ids");
    code_opt->excludes(code_file_opt);
    verify->add_option("--r", verify_r, "required index")->required();

    // --- construct ---
    auto* construct = app.add_subcommand("construct", "randomized code construction");
    std::string construct_graph;
    int construct_r = 1, construct_d = 1;
    double construct_q = -1.0;
    std::uint64_t construct_seed = 0;
    construct->add_option("--graph", construct_graph, "edge-list file")->required();
    construct->add_option("--r", construct_r, "required index")->required();
    construct->add_option("--d", construct_d, "slack parameter (default 1)");
    auto* q_opt = construct->add_option("--q", construct_q, "sampling probability override");
    construct->add_option("--seed", construct_seed, "PRNG seed")->required();

    // --- exact ---
    auto* exact = app.add_subcommand("exact", "exhaustive minimum code");
    std::string exact_graph;
    int exact_r = 1;
    int exact_size_cap = -1;
    exact->add_option("--graph", exact_graph, "edge-list file")->required();
    exact->add_option("--r", exact_r, "required index")->required();
    auto* cap_opt = exact->add_option("--size-cap", exact_size_cap, "stop after this cardinality");

    // --- bounds ---
    auto* bounds = app.add_subcommand("bounds", "closed-form bounds on theta/n");
    int bounds_n = 0, bounds_delta = 0, bounds_r = 1, bounds_d = 1;
    bounds->add_option("--n", bounds_n, "vertex count")->required();
    bounds->add_option("--delta", bounds_delta, "max degree")->required();
    bounds->add_option("--r", bounds_r, "index")->required();
    bounds->add_option("--d", bounds_d, "slack")->required();

    // --- experiment ---
    auto* experiment = app.add_subcommand("experiment", "Monte-Carlo construction campaign");
    std::string exp_graph, exp_csv, exp_summary;
    GenRequest exp_gen;
    int exp_r = 1, exp_d = 1, exp_trials = 1, exp_threads = 1;
    double exp_q = -1.0;
    std::uint64_t exp_seed = 0, exp_gen_seed = 0;
    auto* exp_graph_opt = experiment->add_option("--graph", exp_graph, "edge-list file");
    auto* exp_gen_opt =
        experiment->add_option("--gen", exp_gen.kind, "generator kind instead of a file");
    exp_graph_opt->excludes(exp_gen_opt);
    experiment->add_option("--n", exp_gen.n, "generator vertex count");
    experiment->add_option("--p", exp_gen.p, "generator edge probability (gnp)");
    experiment->add_option("--y", exp_gen.y, "generator strength (lemma)");
    experiment->add_option("--w", exp_gen.w, "generator target index (chain)");
    experiment->add_option("--gen-seed", exp_gen_seed, "generator seed");
    experiment->add_option("--max-retries", exp_gen.max_retries, "generator attempts");
    experiment->add_option("--r", exp_r, "required index")->required();
    experiment->add_option("--d", exp_d, "slack parameter (default 1)");
    auto* exp_q_opt = experiment->add_option("--q", exp_q, "sampling probability override");
    experiment->add_option("--trials", exp_trials, "number of trials")->required();
    experiment->add_option("--seed", exp_seed, "master seed")->required();
    experiment->add_option("--csv", exp_csv, "per-trial CSV output path")->required();
    experiment->add_option("--summary", exp_summary, "also write the summary JSON here");
    experiment->add_option("--threads", exp_threads, "worker threads (result-invariant)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("CliParseError", e.what());
        return 2;
    }

    if (gen->parsed()) {
        return run_guarded([&] {
            ordered_json out;
            out["schema"] = kSchema;
            if ((gen_req.kind == "gnp" || gen_req.kind == "lemma" || gen_req.kind == "chain") &&
                gen->count("--seed") == 0)
                throw std::invalid_argument("--seed is required for randomized generators");
            Graph g = run_generator(gen_req, out);
            write_file(gen_out, serialize_edge_list(g));
            out["n"] = g.vertex_count();
            out["edges"] = g.edge_count();
            out["out"] = gen_out;
            std::cout << out.dump() << "\n";
            return 0;
        });
    }

    if (verify->parsed()) {
        return run_guarded([&] {
            Graph g = load_graph(verify_graph);
            std::vector<int> code;
            if (code_opt->count())
                code = parse_id_list(verify_code);
            else if (code_file_opt->count())
                code = parse_id_list(read_file(verify_code_file));
            else
                throw std::invalid_argument("one of --code / --code-file is required");
            VerifyOutcome outcome = is_identification_code(g, code, verify_r);
            ordered_json out;
            out["schema"] = kSchema;
            out["n"] = g.vertex_count();
            out["r"] = verify_r;
            out["code_size"] = code.size();
            out["valid"] = outcome.valid;
            out["achieved_min"] = outcome.achieved_min;
            if (outcome.witness) {
                out["witness"] = {{"v", outcome.witness->v},
                                  {"u", outcome.witness->u},
                                  {"count", outcome.witness->count}};
            } else {
                out["witness"] = nullptr;
            }
            std::cout << out.dump() << "\n";
            return outcome.valid ? 0 : 1;
        });
    }

    if (construct->parsed()) {
        return run_guarded([&] {
            Graph g = load_graph(construct_graph);
            std::optional<double> q;
            if (q_opt->count()) q = construct_q;
            CodeResult res = randomized_code(g, {construct_r, construct_d}, q, construct_seed);
            VerifyOutcome check = is_identification_code(g, res.code, construct_r);
            ordered_json out;
            out["schema"] = kSchema;
            out["n"] = g.vertex_count();
            out["delta_max"] = degree_stats(g).delta_max;
            out["r"] = construct_r;
            out["d"] = construct_d;
            out["q_used"] = res.q_used;
            out["seed"] = res.seed;
            out["size_sampled"] = res.sampled.size();
            out["size_bad"] = res.bad.size();
            out["size_bad_closure"] = res.bad_closure.size();
            out["size_code"] = res.code.size();
            out["valid"] = check.valid;
            out["achieved_min"] = check.achieved_min;
            out["code"] = res.code;
            std::cout << out.dump() << "\n";
            return 0;
        });
    }

    if (exact->parsed()) {
        return run_guarded([&] {
            Graph g = load_graph(exact_graph);
            int limit = kDefaultExactLimit;
            if (const char* env = std::getenv("STRONGID_EXACT_CAP")) limit = std::atoi(env);
            std::optional<int> size_cap;
            if (cap_opt->count()) size_cap = exact_size_cap;
            auto res = exact_min_code(g, exact_r, size_cap, limit);
            ordered_json out;
            out["schema"] = kSchema;
            out["n"] = g.vertex_count();
            out["r"] = exact_r;
            if (res) {
                out["theta"] = res->first;
                out["code"] = res->second;
            } else {
                out["theta"] = nullptr;
                out["code"] = nullptr;
            }
            std::cout << out.dump() << "\n";
            return 0;
        });
    }

    if (bounds->parsed()) {
        return run_guarded([&] {
            BoundReport rep = theta_bounds(bounds_n, bounds_delta, bounds_r, bounds_d);
            ordered_json out;
            out["schema"] = kSchema;
            out["n"] = rep.n;
            out["delta_max"] = rep.delta_max;
            out["r"] = rep.r;
            out["d"] = rep.d;
            out["c_dr"] = rep.c_dr;
            out["q_star"] = rep.q_star;
            out["gamma_at_q_star"] = rep.gamma_at_q_star;
            out["lower"] = rep.lower;
            out["upper"] = rep.upper;
            std::cout << out.dump() << "\n";
            return 0;
        });
    }

    if (experiment->parsed()) {
        return run_guarded([&] {
            Graph g = [&] {
                if (exp_graph_opt->count()) return load_graph(exp_graph);
                if (!exp_gen_opt->count())
                    throw std::invalid_argument("one of --graph / --gen is required");
                if ((exp_gen.kind == "gnp" || exp_gen.kind == "lemma" ||
                     exp_gen.kind == "chain") &&
                    experiment->count("--gen-seed") == 0)
                    throw std::invalid_argument("--gen-seed is required for randomized generators");
                exp_gen.seed = exp_gen_seed;
                ordered_json ignored;
                return run_generator(exp_gen, ignored);
            }();
            ExperimentSpec spec;
            spec.r = exp_r;
            spec.d = exp_d;
            if (exp_q_opt->count()) spec.q = exp_q;
            spec.trials = exp_trials;
            spec.master_seed = exp_seed;
            spec.threads = exp_threads;
            ExperimentResult res = run_experiment(g, spec);
            write_file(exp_csv, records_to_csv(res.records));
            ordered_json out;
            out["schema"] = kSchema;
            out["trials"] = res.summary.trials;
            out["n"] = res.summary.n;
            out["delta_max"] = res.summary.delta_max;
            out["r"] = res.summary.r;
            out["d"] = res.summary.d;
            out["q_used"] = res.summary.q_used;
            out["mean_code_size"] = res.summary.mean_code_size;
            out["sample_std"] = res.summary.sample_std;
            out["std_error"] = res.summary.std_error;
            out["gamma_bound"] = res.summary.gamma_bound;
            out["bound_respected"] = res.summary.bound_respected;
            std::string dumped = out.dump();
            std::cout << dumped << "\n";
            if (!exp_summary.empty()) write_file(exp_summary, dumped + "\n");
            return 0;
        });
    }

    return 2;  // unreachable with require_subcommand(1)
}
