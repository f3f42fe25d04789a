#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lambda_lab/constructions.hpp"
#include "lambda_lab/errors.hpp"
#include "lambda_lab/instance.hpp"
#include "lambda_lab/io.hpp"
#include "lambda_lab/solver.hpp"
#include "lambda_lab/store.hpp"
#include "lambda_lab/table.hpp"

using namespace lambda_lab;

namespace {

enum Exit { kOk = 0, kViolations = 1, kBounds = 2, kDiscrepancy = 3, kInputError = 4 };

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) throw InvalidArgument("cannot write " + out_path);
}

std::string component_grid(const Graph& g) {
    auto parts = connected_components(g);
    std::vector<int> ids(g.vertex_count());
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (Vertex v : parts.components[c].to_parent) ids[v] = static_cast<int>(c);
    return render_grid(g, Labeling(ids));
}

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

struct SolveOptions {
    std::string key;
    std::optional<int> target;
    std::optional<std::uint64_t> limit_nodes;
    std::optional<double> limit_secs;
    unsigned threads = 1;
    std::string ordering = "dsatur";
    std::string method = "backtrack";
};

int cmd_build(const std::string& key_text, const std::string& format, const std::string& out) {
    auto key = parse_instance_key(key_text);
    auto g = build_graph(key);
    if (format == "dot")
        emit(out, to_dot(g, to_string(key)));
    else if (format == "adjlist")
        emit(out, to_adjlist(g));
    else
        emit(out, component_grid(g));
    return kOk;
}

int cmd_solve(const SolveOptions& o, ResultStore& store) {
    auto key = parse_instance_key(o.key);
    auto g = build_graph(key);
    auto claim = expected_lambda(key);
    SearchConfig cfg;
    cfg.node_limit = o.limit_nodes;
    if (o.limit_secs) cfg.time_limit = std::chrono::milliseconds(static_cast<long long>(*o.limit_secs * 1000));
    cfg.target_span = o.target;
    cfg.threads = o.threads;
    cfg.ordering = parse_ordering(o.ordering);

    ResultRecord rec;
    rec.key = to_string(key);
    rec.claimed = to_string(claim);
    if (auto old = store.load(key)) {
        rec.constructed = old->constructed;
        rec.scheme = old->scheme;
    }
    try {
        LambdaResult r;
        if (o.method == "square-coloring") {
            if (key.h != 1 || key.k != 1) throw UnsupportedRegime("square coloring needs (h,k) = (1,1)");
            r = solve_via_square(g, cfg);
        } else if (o.method == "brute-force") {
            r = brute_force(g, key.h, key.k, o.target.value_or(kBruteForceMaxSpan));
        } else {
            r = solve_exact(g, key.h, key.k, cfg);
        }
        rec.exact = r.span;
        rec.method = to_string(r.method);
        rec.nodes = r.nodes_explored;
        rec.status = record_status(claim, rec.exact, std::nullopt, rec.constructed);
        rec = store.save(rec, &r.witness);
        std::cout << rec.key << "  lambda = " << r.span << "  (exact, " << r.nodes_explored << " nodes, "
                  << millis(r.elapsed) << " ms)\n";
        std::cout << "claimed " << rec.claimed << ": " << rec.status << "\n";
        if (g.has_coords() && g.vertex_count() <= 400) std::cout << render_grid(g, r.witness);
        return rec.status == "paper-discrepancy" ? kDiscrepancy : kOk;
    } catch (const Infeasible& e) {
        rec.lower = e.span() + 1;
        rec.method = o.method;
        rec.nodes = e.nodes();
        rec.status = "bounds";
        store.save(rec, nullptr);
        std::cout << rec.key << "  infeasible: no labeling with span <= " << e.span() << " (" << e.nodes()
                  << " nodes); lambda >= " << e.span() + 1 << "\n";
        return kBounds;
    } catch (const ResourceLimit& e) {
        rec.lower = e.lower();
        rec.upper = e.upper();
        rec.method = o.method;
        rec.nodes = e.nodes();
        rec.status = "bounds";
        store.save(rec, nullptr);
        std::cout << rec.key << "  bounds only: " << e.what() << "\n";
        return kBounds;
    }
}

int cmd_label(const std::string& key_text, const std::string& scheme, const std::string& out, ResultStore& store) {
    auto key = parse_instance_key(key_text);
    auto c = construct(key, parse_scheme_preference(scheme));
    auto claim = expected_lambda(key);
    const int span = c.labeling.span();

    ResultRecord rec;
    std::optional<Labeling> witness;
    if (auto old = store.load(key); old && old->exact) {
        rec = *old;
        witness = store.load_witness(*old);
    } else {
        rec.key = to_string(key);
        witness = c.labeling;
        if (c.kind == SchemeKind::solver) {
            rec.exact = span;
            rec.method = "backtrack";
        }
    }
    rec.claimed = to_string(claim);
    rec.constructed = span;
    rec.scheme = c.scheme;
    rec.timestamp.clear();
    rec.status = record_status(claim, rec.exact, rec.lower, rec.constructed);
    store.save(rec, &*witness);

    std::cout << rec.key << "  scheme " << c.scheme << "  span " << span << "  (claimed " << rec.claimed << ")\n";
    if (c.graph.has_coords()) std::cout << render_grid(c.graph, c.labeling);
    if (!out.empty()) emit(out, labeling_to_json(rec.key, c.labeling));
    return kOk;
}

int cmd_verify(const std::string& graph_file, const std::string& labeling_file, int h, int k) {
    auto g = parse_adjlist(read_file(graph_file), graph_file);
    auto doc = parse_labeling_json(read_file(labeling_file), labeling_file);
    try {
        auto violations = verify(g, doc.labeling, h, k);
        for (const auto& v : violations) std::cout << to_string(v) << '\n';
        return violations.empty() ? kOk : kViolations;
    } catch (const MissingLabels& e) {
        std::cout << "unlabeled:";
        for (auto v : e.vertices()) std::cout << ' ' << v;
        std::cout << '\n';
        return kInputError;
    }
}

int cmd_table(const std::string& family, int max_m, int max_n, const std::string& out, bool pretty,
              std::optional<std::uint64_t> limit_nodes, ResultStore& store) {
    SearchConfig cfg;
    cfg.node_limit = limit_nodes;
    auto report = run_table(parse_family(family), max_m, max_n, store, cfg);
    const bool to_stdout = out.empty() || out == "-";
    emit(out, report.csv());
    auto& info = to_stdout ? std::cerr : std::cout;
    if (pretty) info << report.pretty();
    info << report.summary();
    return kOk;
}

int cmd_derive(const std::string& key_text, int target, const std::string& out) {
    auto key = parse_instance_key(key_text);
    auto t = derive_tile(key.family, key.m, key.n, target);
    emit(out, format_tile(t));
    return kOk;
}

int cmd_derive_glue(int w, const std::string& out) {
    emit(out, format_tile(derive_cc_glue_tile(w)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"L(h,k)-labelings of direct products of paths and cycles"};
    app.require_subcommand(1);
    std::string store_dir;
    app.add_option("--store", store_dir, "result store directory (default $LAMBDA_LAB_STORE or ./lambda_lab_store)");

    std::string key, format = "dot", out, scheme = "auto";
    auto* build = app.add_subcommand("build", "write a product graph");
    build->add_option("key", key, "instance key, e.g. PC:4x7:1,1:all")->required();
    build->add_option("--format", format)->check(CLI::IsMember({"dot", "adjlist", "grid"}));
    build->add_option("--out", out, "output file (default stdout)");

    SolveOptions so;
    auto* solve = app.add_subcommand("solve", "exact lambda by backtracking search");
    solve->add_option("key", so.key)->required();
    solve->add_option("--target", so.target, "only try spans up to this value");
    solve->add_option("--limit-nodes", so.limit_nodes);
    solve->add_option("--limit-secs", so.limit_secs);
    solve->add_option("--threads", so.threads)->check(CLI::Range(1u, 256u));
    solve->add_option("--ordering", so.ordering)->check(CLI::IsMember({"dsatur", "grid-sweep", "input-order"}));
    solve->add_option("--method", so.method)->check(CLI::IsMember({"backtrack", "square-coloring", "brute-force"}));

    auto* label = app.add_subcommand("label", "label an instance with a constructive scheme");
    label->add_option("key", key)->required();
    label->add_option("--scheme", scheme)->check(CLI::IsMember({"auto", "formula", "tile", "solver"}));
    label->add_option("--out", out, "also write the labeling as JSON");

    std::string graph_file, labeling_file;
    int h = 1, k = 1;
    auto* verify_cmd = app.add_subcommand("verify", "check a labeling against a graph");
    verify_cmd->add_option("graph", graph_file, "adjacency-list file")->required();
    verify_cmd->add_option("labeling", labeling_file, "labeling JSON file")->required();
    verify_cmd->add_option("h-value", h, "minimum gap at distance 1")->required()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("k-value", k, "minimum gap at distance 2")->required()->check(CLI::NonNegativeNumber);

    std::string family;
    int max_m = 6, max_n = 6;
    bool pretty = false;
    std::optional<std::uint64_t> table_limit;
    auto* table = app.add_subcommand("table", "reproduce the summary table against the exact solver");
    table->add_option("--family", family)->required()->check(CLI::IsMember({"pp", "pc"}));
    table->add_option("--max-m", max_m)->check(CLI::Range(2, 64));
    table->add_option("--max-n", max_n)->check(CLI::Range(2, 64));
    table->add_option("--out", out, "CSV file (default stdout)");
    table->add_flag("--pretty", pretty, "also print the table grouped by claim");
    table->add_option("--limit-nodes", table_limit);

    int target = 5;
    auto* derive = app.add_subcommand("derive", "derive a component-0 tile with the exact solver");
    derive->add_option("key", key)->required();
    derive->add_option("--target", target)->required();
    derive->add_option("--out", out);

    int glue_width = 12;
    auto* glue = app.add_subcommand("derive-glue", "derive the C10 x C_w tile that glues to formula blocks");
    glue->add_option("width", glue_width)->required()->check(CLI::IsMember({12, 14, 16, 18}));
    glue->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        auto store_root = store_dir.empty() ? ResultStore::default_root() : std::filesystem::path(store_dir);
        auto store = [&] { return ResultStore(store_root); };
        if (*build) return cmd_build(key, format, out);
        if (*solve) {
            auto s = store();
            return cmd_solve(so, s);
        }
        if (*label) {
            auto s = store();
            return cmd_label(key, scheme, out, s);
        }
        if (*verify_cmd) return cmd_verify(graph_file, labeling_file, h, k);
        if (*table) {
            auto s = store();
            return cmd_table(family, max_m, max_n, out, pretty, table_limit, s);
        }
        if (*derive) return cmd_derive(key, target, out);
        if (*glue) return cmd_derive_glue(glue_width, out);
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kBounds;
    } catch (const ResourceLimit& e) {
        std::cerr << "bounds only: " << e.what() << '\n';
        return kBounds;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
