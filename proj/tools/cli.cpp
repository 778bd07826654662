#include "faqai/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "faqai/drivers.hpp"
#include "faqai/errors.hpp"
#include "faqai/hypertree.hpp"
#include "faqai/oracle.hpp"
#include "faqai/query.hpp"

namespace faqai::cli {

namespace {

using nlohmann::json;

struct Options
{
    std::vector<std::string> tables;
    bool no_header = false;
    std::string query;
    std::optional<double> epsilon;
    std::optional<double> alpha;
    bool exact = false;
    std::optional<std::size_t> root;
    std::size_t max_materialize = kDefaultMaterializeCap;
    std::string output = "text";
    bool dump_sketch = false;
    bool timing = false;

    std::string generator;
    std::vector<double> weights;
    std::optional<double> capacity;
    std::string out_dir;
};

/// Thrown inside a command to leave with a specific exit code.
struct Exit
{
    int code;
    std::string message;
};

void add_tables(CLI::App *sub, Options &o)
{
    sub->add_option("--tables", o.tables, "CSV files or directories of CSV files")->required();
    sub->add_flag("--no-header", o.no_header, "CSV files have no header row");
    sub->add_option("--output", o.output, "Report format")->check(CLI::IsMember({"text", "json"}));
}

void add_eval(CLI::App *sub, Options &o, bool engine)
{
    add_tables(sub, o);
    sub->add_option("--query", o.query, "Query specification (JSON)")->required();
    sub->add_option("--epsilon", o.epsilon, "Total relative error");
    sub->add_flag("--exact", o.exact, "Evaluate without sketching");
    sub->add_option("--alpha", o.alpha, "Per-operation sketch parameter override");
    sub->add_option("--max-materialize", o.max_materialize, "Row cap for the brute-force join");
    sub->add_flag("--timing", o.timing, "Include wall time in the report");
    if (engine) {
        sub->add_option("--root", o.root, "Table kept until the final fold (1-based)");
        sub->add_flag("--dump-sketch", o.dump_sketch, "Print the final carrier value");
    }
}

Database load(const Options &o)
{
    std::vector<std::filesystem::path> paths(o.tables.begin(), o.tables.end());
    try {
        return load_database(paths, !o.no_header);
    } catch (const std::exception &e) {
        throw Exit{kFailure, std::string("error: ") + e.what()};
    }
}

QuerySpec load_query(const Options &o, const Database &db)
{
    std::ifstream in(o.query);
    if (!in)
        throw Exit{kRejected, "error: cannot read query file '" + o.query + "'"};
    std::stringstream text;
    text << in.rdbuf();
    QuerySpec spec;
    try {
        spec = parse_query(text.str(), db.features());
    } catch (const Error &e) {
        throw Exit{kRejected, std::string("error: ") + e.what()};
    }
    if (o.epsilon) {
        spec.epsilon = *o.epsilon;
        spec.mode = Mode::approx;
    }
    if (o.alpha)
        spec.alpha = *o.alpha;
    if (o.exact)
        spec.mode = Mode::exact;
    return spec;
}

json database_json(const Database &db)
{
    auto s = db.stats();
    return {{"m", s.m}, {"n", s.n}, {"d", s.d}};
}

int decompose(const Options &o, std::ostream &out)
{
    Database db = load(o);
    Decomposition decomp;
    try {
        decomp = build_decomposition(db);
    } catch (const CyclicJoin &e) {
        throw Exit{kCyclic, std::string("error: ") + e.what()};
    }
    if (o.output == "json") {
        json tables = json::array();
        for (const auto &t : db.tables())
            tables.push_back(t.name());
        json edges = json::array();
        for (auto [a, b] : decomp.edges)
            edges.push_back({a + 1, b + 1});
        out << json{{"command", "decompose"}, {"tables", tables}, {"edges", edges}, {"status", "ok"}}.dump(2)
            << "\n";
    } else {
        for (std::size_t t = 0; t < db.size(); ++t)
            out << "table " << t + 1 << " " << db.table(t).name() << "\n";
        for (auto [a, b] : decomp.edges)
            out << "edge " << a + 1 << " " << b + 1 << "\n";
    }
    return kOk;
}

json stats_json(const EngineStats &stats)
{
    return {{"steps", stats.steps.size()},
            {"largest_value", stats.largest_value},
            {"largest_fold", stats.largest_fold},
            {"max_combine_depth", stats.max_combine_depth},
            {"root_rows", stats.root_rows}};
}

int evaluate_command(const std::string &command, const Options &o, std::ostream &out, std::ostream &err)
{
    Database db = load(o);
    QuerySpec spec = load_query(o, db);
    const bool oracle = command == "oracle";
    if (!oracle) {
        if (auto v = validate(spec, db); !v)
            throw Exit{kRejected, "rejected: " + v.reason};
        if (to_string(spec.kind) != command)
            throw Exit{kRejected, "rejected: query kind '" + std::string(to_string(spec.kind)) +
                                      "' does not match command '" + command + "'"};
    }

    json report{{"command", command}, {"kind", std::string(to_string(spec.kind))}};
    if (!spec.algebra.empty())
        report["algebra"] = spec.algebra;
    report["database"] = database_json(db);

    EngineStats stats;
    QueryValue value;
    json sketch;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (oracle) {
            report["mode"] = "exact";
            value = oracle_eval(db, spec, o.max_materialize);
        } else {
            Decomposition decomp;
            try {
                decomp = build_decomposition(db);
            } catch (const CyclicJoin &e) {
                throw Exit{kCyclic, std::string("error: ") + e.what()};
            }
            EvalOptions opts = EvalOptions::of(spec, &stats);
            if (o.root) {
                if (*o.root == 0 || *o.root > db.size())
                    throw Exit{kFailure, "error: --root must be between 1 and " + std::to_string(db.size())};
                opts.root = *o.root - 1;
            }
            report["mode"] = std::string(to_string(spec.mode));
            if (spec.mode == Mode::approx) {
                report["epsilon"] = spec.epsilon;
                report["alpha"] = approx_params(db, opts).alpha;
            }
            const auto ineq = spec.inequality();
            if (spec.kind == QueryKind::count) {
                Multiset dist = constraint_distribution(db, decomp, ineq, opts);
                value = QueryValue{ms_triangle(dist, ineq.L)};
                if (o.dump_sketch) {
                    sketch = json::array();
                    for (const auto &e : dist.entries())
                        sketch.push_back({e.key, QueryValue{e.count}.to_json()});
                }
            } else if (spec.kind == QueryKind::sumprod) {
                WeightedSet dist = sumprod_distribution(db, decomp, semiring_named(spec.algebra), spec.F, ineq, opts);
                value = QueryValue{ws_triangle(dist, ineq.L)};
                if (o.dump_sketch) {
                    sketch = json::array();
                    for (const auto &e : dist.entries())
                        sketch.push_back({e.key, QueryValue{e.weight}.to_json()});
                }
            } else {
                if (o.dump_sketch)
                    err << "note: --dump-sketch has no single carrier value for sumsum\n";
                value = QueryValue{sumsum(db, decomp, monoid_named(spec.algebra), spec.F, ineq, opts)};
            }
            report["stats"] = stats_json(stats);
        }
    } catch (const CapExceeded &e) {
        throw Exit{kCapExceeded, std::string("error: ") + e.what()};
    } catch (const OverflowError &e) {
        throw Exit{kCapExceeded, std::string("error: ") + e.what()};
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    report["value"] = value.to_json();
    if (!sketch.is_null())
        report["sketch"] = sketch;
    if (o.timing)
        report["elapsed_ms"] = elapsed.count();
    report["status"] = "ok";

    if (o.output == "json") {
        out << report.dump(2) << "\n";
    } else {
        out << value.to_string() << "\n";
        if (!sketch.is_null())
            for (const auto &e : sketch)
                out << e[0].dump() << " " << (e[1].is_string() ? e[1].get<std::string>() : e[1].dump()) << "\n";
        if (o.timing)
            out << "elapsed_ms " << elapsed.count() << "\n";
    }
    return kOk;
}

int generate(const Options &o, std::ostream &out)
{
    Instance instance = [&] {
        try {
            if (o.generator == "knapsack") {
                if (!o.capacity)
                    throw Exit{kFailure, "error: knapsack needs --capacity"};
                return gen_knapsack(o.weights, *o.capacity);
            }
            return gen_partition(o.weights);
        } catch (const ValidationError &e) {
            throw Exit{kFailure, std::string("error: ") + e.what()};
        }
    }();
    std::filesystem::path dir(o.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw Exit{kFailure, "error: cannot create '" + o.out_dir + "': " + ec.message()};
    for (const auto &t : instance.db.tables()) {
        std::ofstream f(dir / (t.name() + ".csv"));
        write_csv(f, t);
        if (!f)
            throw Exit{kFailure, "error: cannot write table " + t.name()};
    }
    QuerySpec spec;
    spec.inequalities = instance.inequalities;
    std::ofstream q(dir / "query.json");
    q << to_json(spec).dump(2) << "\n";
    if (!q)
        throw Exit{kFailure, "error: cannot write query.json"};
    out << "wrote " << instance.db.size() << " tables and query.json to " << dir.string() << "\n";
    return kOk;
}

}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"FAQ-AI(1) query engine over acyclic joins of CSV tables", "faqai"};
    app.require_subcommand(1);
    Options o;

    add_tables(app.add_subcommand("decompose", "Print the join tree of the tables"), o);
    for (const char *kind : {"count", "sumsum", "sumprod"})
        add_eval(app.add_subcommand(kind, std::string("Evaluate a ") + kind + " query"), o, true);
    add_eval(app.add_subcommand("oracle", "Evaluate a query by materializing the join"), o, false);

    auto *gen = app.add_subcommand("gen", "Write a knapsack or partition instance");
    gen->add_option("generator", o.generator, "Instance family")
        ->required()
        ->check(CLI::IsMember({"knapsack", "partition"}));
    gen->add_option("--weights", o.weights, "Comma-separated weights")->required()->delimiter(',');
    gen->add_option("--capacity", o.capacity, "Knapsack capacity");
    gen->add_option("--out", o.out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "decompose")
            return decompose(o, out);
        if (command == "gen")
            return generate(o, out);
        return evaluate_command(command, o, out, err);
    } catch (const Exit &e) {
        err << e.message << "\n";
        if (o.output == "json")
            out << json{{"command", command}, {"status", "error"}, {"exit_code", e.code}, {"reason", e.message}}.dump(2)
                << "\n";
        return e.code;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

}
