#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobsing/budget.hpp"
#include "frobsing/catalog.hpp"
#include "frobsing/errors.hpp"
#include "frobsing/parse.hpp"
#include "frobsing/report.hpp"

namespace {

using namespace frobsing;

std::int64_t ms_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct PairOptions {
    std::uint32_t p = 0;
    std::string vars;
    std::vector<std::string> ci;
    std::string g;
    std::string t = "0";
    std::string mode = "weak";
    int max_e = 2;

    void attach(CLI::App* cmd, bool with_boundary = true) {
        cmd->add_option("--p", p, "characteristic (prime)")->required();
        cmd->add_option("--vars", vars, "comma-separated variable names")->required();
        cmd->add_option("--ci", ci, "complete-intersection generator (repeatable)");
        if (with_boundary) {
            cmd->add_option("--g", g, "boundary divisor element");
            cmd->add_option("--t", t, "boundary coefficient, rational a/b");
            cmd->add_option("--mode", mode, "weak|strong exponent convention")
                ->check(CLI::IsMember({"weak", "strong"}));
        }
        cmd->add_option("--max-e", max_e, "deepest Frobenius level to test")
            ->check(CLI::PositiveNumber);
    }

    PairSpec to_pair() const {
        PairSpec pair;
        pair.ring = make_ring(p, split_commas(vars));
        for (const std::string& f : ci) pair.ci.push_back(parse_polynomial(f, pair.ring));
        if (!g.empty()) {
            pair.g = parse_polynomial(g, pair.ring);
            pair.t = Rational::parse(t);
        }
        pair.mode = mode == "strong" ? Mode::Strong : Mode::Weak;
        return pair;
    }

    Json params_json(const char* engine = nullptr) const {
        Json j;
        j["p"] = p;
        j["vars"] = split_commas(vars);
        j["ci"] = ci;
        if (!g.empty()) {
            j["g"] = g;
            j["t"] = Rational::parse(t).str();
            j["mode"] = mode;
        }
        j["max_e"] = max_e;
        if (engine != nullptr) j["engine"] = engine;
        return j;
    }
};

void emit(const std::string& format, const std::string& command, const Json& params,
          const Json& payload, const std::string& text, std::int64_t timing) {
    if (format == "json") {
        std::cout << envelope(command, params, payload, timing).dump(2) << "\n";
    } else {
        std::cout << command << ":\n" << text;
    }
}

int run_fpure_cmd(const PairOptions& opts, bool general, const std::string& format) {
    auto start = std::chrono::steady_clock::now();
    PairSpec pair = opts.to_pair();
    Verdict v;
    if (general) {
        if (pair.ci.empty()) throw Error("--ideal needs at least one --ci generator");
        Ideal ideal(pair.ring, pair.ci);
        v = fpure_test_general(ideal, pair.g, pair.t, pair.mode, opts.max_e);
    } else {
        v = fpure_test_ci(pair, opts.max_e);
    }
    emit(format, "fpure", opts.params_json(general ? "general" : "ci"), verdict_to_json(v),
         verdict_to_text(v), ms_since(start));
    return verdict_exit_code(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "frobsing: exact Frobenius-splitting criteria, F-pure thresholds, and\n"
        "resolution-graph discrepancies for pairs in prime characteristic"};
    app.require_subcommand(1);
    apply_budget_env();

    std::string format = "text";
    app.add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // fpure
    PairOptions fpure_opts;
    bool fpure_general = false;
    CLI::App* fpure = app.add_subcommand("fpure", "F-purity criterion for a pair");
    fpure_opts.attach(fpure);
    fpure->add_flag("--ideal", fpure_general,
                    "treat --ci generators as a general quotient ideal (colon route)");

    // sfr
    PairOptions sfr_opts;
    std::string sfr_witness;
    CLI::App* sfr = app.add_subcommand("sfr", "strong F-regularity certification");
    sfr_opts.attach(sfr);
    sfr->add_option("--witness", sfr_witness, "certification witness polynomial");

    // divfr
    PairOptions divfr_opts;
    std::string divfr_witness;
    CLI::App* divfr =
        app.add_subcommand("divfr", "divisorial F-regularity of (A, div(g)) via the quotient");
    divfr_opts.attach(divfr);
    divfr->add_option("--witness", divfr_witness, "certification witness polynomial");

    // fpt
    std::uint32_t fpt_p = 0;
    std::string fpt_vars, fpt_f, fpt_t;
    int fpt_max_e = 2;
    CLI::App* fpt = app.add_subcommand("fpt", "F-pure threshold bounds and estimate");
    fpt->add_option("--p", fpt_p, "characteristic (prime)")->required();
    fpt->add_option("--vars", fpt_vars, "comma-separated variables")->required();
    fpt->add_option("--f", fpt_f, "polynomial")->required();
    fpt->add_option("--t", fpt_t, "coefficient for the smooth-initial-form prediction");
    fpt->add_option("--max-e", fpt_max_e, "deepest level")->check(CLI::PositiveNumber);

    // graph
    std::string graph_file, graph_inline;
    std::uint32_t graph_p = 0;
    CLI::App* graph = app.add_subcommand("graph", "resolution dual graph discrepancies");
    graph->add_option("--file", graph_file, "path to graph JSON ('-' for stdin)");
    graph->add_option("--json", graph_inline, "inline graph JSON");
    graph->add_option("--p", graph_p, "characteristic for the F-class prediction");

    // toric
    std::string toric_rays, toric_delta;
    bool toric_full = false;
    int toric_e = 1;
    std::uint32_t toric_p = 2;
    std::int64_t toric_box = 8;
    CLI::App* toric = app.add_subcommand("toric", "toric window identity check");
    toric->add_option("--rays", toric_rays, "rays, e.g. \"1,0;1,2\"")->required();
    toric->add_flag("--full-delta", toric_full, "boundary = all rays");
    toric->add_option("--delta", toric_delta, "comma-separated boundary ray indices");
    toric->add_option("--e", toric_e, "Frobenius level")->check(CLI::PositiveNumber);
    toric->add_option("--p", toric_p, "characteristic (default 2)");
    toric->add_option("--box", toric_box, "window half-width")->check(CLI::PositiveNumber);

    // catalog
    std::string cat_filter;
    int cat_max_e = 2, cat_jobs = 1;
    CLI::App* catalog = app.add_subcommand("catalog", "run the built-in example catalog");
    catalog->add_option("--filter", cat_filter, "substring filter on entry ids");
    catalog->add_option("--max-e", cat_max_e, "deepest level")->check(CLI::PositiveNumber);
    catalog->add_option("--jobs", cat_jobs, "parallel workers")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fpure->parsed()) return run_fpure_cmd(fpure_opts, fpure_general, format);

        if (sfr->parsed()) {
            auto start = std::chrono::steady_clock::now();
            PairSpec pair = sfr_opts.to_pair();
            std::optional<Polynomial> witness;
            if (!sfr_witness.empty()) witness = parse_polynomial(sfr_witness, pair.ring);
            Verdict v = strong_freg_test_ci(pair, sfr_opts.max_e, witness);
            emit(format, "sfr", sfr_opts.params_json(), verdict_to_json(v), verdict_to_text(v),
                 ms_since(start));
            return verdict_exit_code(v);
        }

        if (divfr->parsed()) {
            auto start = std::chrono::steady_clock::now();
            PairSpec pair = divfr_opts.to_pair();
            std::optional<Polynomial> witness;
            if (!divfr_witness.empty()) witness = parse_polynomial(divfr_witness, pair.ring);
            Verdict v = divisorial_freg_test(pair, divfr_opts.max_e, witness);
            emit(format, "divfr", divfr_opts.params_json(), verdict_to_json(v),
                 verdict_to_text(v), ms_since(start));
            return verdict_exit_code(v);
        }

        if (fpt->parsed()) {
            auto start = std::chrono::steady_clock::now();
            RingPtr ring = make_ring(fpt_p, split_commas(fpt_vars));
            Polynomial f = parse_polynomial(fpt_f, ring);
            std::optional<Rational> t;
            if (!fpt_t.empty()) t = Rational::parse(fpt_t);
            ThresholdReport r = fpt_report(f, fpt_max_e, t);
            Json params;
            params["p"] = fpt_p;
            params["vars"] = split_commas(fpt_vars);
            params["f"] = fpt_f;
            if (t.has_value()) params["t"] = t->str();
            params["max_e"] = fpt_max_e;
            emit(format, "fpt", params, threshold_to_json(r), threshold_to_text(r),
                 ms_since(start));
            return 0;
        }

        if (graph->parsed()) {
            auto start = std::chrono::steady_clock::now();
            std::string text = graph_inline;
            if (text.empty()) {
                if (graph_file.empty()) throw Error("graph needs --file or --json");
                if (graph_file == "-") {
                    std::stringstream buf;
                    buf << std::cin.rdbuf();
                    text = buf.str();
                } else {
                    std::ifstream in(graph_file);
                    if (!in) throw Error("cannot open graph file '" + graph_file + "'");
                    std::stringstream buf;
                    buf << in.rdbuf();
                    text = buf.str();
                }
            }
            DualGraph g = DualGraph::from_json(text);
            DiscrepancyVector dv = solve_discrepancies(g);
            std::int64_t marks = 0;
            for (std::int64_t m : g.boundary) marks += m;
            std::optional<FClass> predicted;
            GraphType type = GraphType::Other;
            if (marks > 0) {
                type = classify_graph_type(g);
                if (graph_p >= 2) predicted = predict_fclass(g, graph_p);
            }
            Json params;
            if (!graph_file.empty()) params["file"] = graph_file;
            if (graph_p >= 2) params["p"] = graph_p;
            emit(format, "graph", params, graph_to_json(g, dv, type, predicted),
                 graph_to_text(g, dv, type, predicted), ms_since(start));
            return 0;
        }

        if (toric->parsed()) {
            auto start = std::chrono::steady_clock::now();
            Cone cone;
            std::stringstream ss(toric_rays);
            std::string ray;
            while (std::getline(ss, ray, ';')) {
                std::vector<std::int64_t> v;
                for (const std::string& part : split_commas(ray)) v.push_back(std::stoll(part));
                cone.rays.push_back(std::move(v));
            }
            if (cone.rays.empty()) throw Error("no rays given");
            cone.dim = cone.rays.front().size();
            std::vector<std::size_t> delta;
            if (toric_full) {
                for (std::size_t i = 0; i < cone.rays.size(); ++i) delta.push_back(i);
            } else {
                for (const std::string& part : split_commas(toric_delta)) {
                    delta.push_back(static_cast<std::size_t>(std::stoull(part)));
                }
            }
            std::uint64_t q = checked_p_power(toric_p, toric_e);
            ToricCheck c = toric_fpure_verify(cone, delta, q, toric_box);
            Json params;
            params["rays"] = toric_rays;
            params["delta"] = toric_full ? "full" : toric_delta;
            params["e"] = toric_e;
            params["p"] = toric_p;
            params["q"] = q;
            params["box"] = toric_box;
            emit(format, "toric", params, toric_to_json(c), toric_to_text(c), ms_since(start));
            return c.ok ? 0 : 1;
        }

        if (catalog->parsed()) {
            auto start = std::chrono::steady_clock::now();
            auto results = run_catalog(cat_filter, cat_max_e, cat_jobs);
            Json params;
            params["filter"] = cat_filter;
            params["max_e"] = cat_max_e;
            params["jobs"] = cat_jobs;
            emit(format, "catalog", params, catalog_to_json(results),
                 catalog_to_text(results), ms_since(start));
            return catalog_exit_code(results);
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
