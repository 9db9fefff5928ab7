#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "oddzeta/tables.hpp"

namespace {

using oddzeta::Command;
using oddzeta::OutputFormat;
using oddzeta::RunConfig;

int run(const RunConfig& config) {
    if (config.digits < 20) {
        std::cerr << R"({"error":{"type":"invalid_argument","message":"digits must be at least 20"}})"
                  << "\n";
        return 2;
    }
    oddzeta::PrecisionContext ctx(config.digits);
    oddzeta::TableDocument doc = oddzeta::make_document(config, ctx, &std::cerr);
    std::string text = oddzeta::render(doc, config.format);
    if (config.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(config.out_path, std::ios::binary);
        if (!out) {
            std::cerr << R"({"error":{"type":"io","message":"cannot open output path"}})" << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

void add_common(CLI::App* cmd, RunConfig& config, std::string& format_text) {
    cmd->add_option("--digits", config.digits, "requested decimal digits (>= 20)")
        ->envname("ODDZETA_DIGITS");
    cmd->add_option("--format", format_text, "output format: csv|json|pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    cmd->add_option("--out", config.out_path, "write output to this path instead of stdout");
    cmd->add_flag("--paper-quirks", config.paper_quirks,
                  "append footnotes for known printed-value discrepancies");
}

std::vector<unsigned> parse_ns(const std::string& text) {
    std::vector<unsigned> ns;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        ns.push_back(static_cast<unsigned>(std::stoul(text.substr(pos, comma - pos))));
        pos = comma + 1;
    }
    return ns;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta-value tables: geometric-mean estimates for odd arguments, "
                 "integral and series competitors, error-law fit, figure data"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format_text = "pretty";
    std::string method_text = "geomean";
    std::string ns_text;

    CLI::App* compute = app.add_subcommand("compute", "evaluate zeta(s) by one method");
    compute->add_option("--s", config.s_text, "argument (integer or real >= 2)")->required();
    compute->add_option("--method", method_text,
                        "exact-even|reference|geomean|bounds-l|bounds-r|asymptotic|integral|series")
        ->check(CLI::IsMember({"exact-even", "reference", "geomean", "bounds-l", "bounds-r",
                               "asymptotic", "integral", "series"}));
    compute->add_option("--nodes", config.nodes, "integral method: Hermite rule size");
    compute->add_option("--terms", config.terms, "series method: partial-sum length");
    add_common(compute, config, format_text);

    CLI::App* table1 = app.add_subcommand("table1", "comparison rows n = 1..10");
    add_common(table1, config, format_text);

    CLI::App* table2 = app.add_subcommand("table2", "error rows at chosen n");
    table2->add_option("--ns", ns_text, "comma-separated n list (default 100,200,500,1000,2000)");
    add_common(table2, config, format_text);

    CLI::App* table3 = app.add_subcommand("table3", "three-method comparison rows");
    table3->add_option("--ns", ns_text, "comma-separated n list (default 3,6,...,30)");
    table3->add_option("--nodes", config.nodes, "Hermite rule size N1 (default 25)");
    table3->add_option("--terms", config.terms, "series partial-sum length N2 (default 25)");
    add_common(table3, config, format_text);

    CLI::App* fit = app.add_subcommand("fit", "least-squares error-law fit over table2 rows");
    fit->add_option("--ns", ns_text, "comma-separated n list (default 100,200,500,1000,2000)");
    add_common(fit, config, format_text);

    CLI::App* figure = app.add_subcommand("figure", "asymptotic-formula grid data");
    figure->add_option("--min", config.s_min, "grid start (>= 2)");
    figure->add_option("--max", config.s_max, "grid end");
    figure->add_option("--step", config.step, "grid step");
    add_common(figure, config, format_text);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) config.command = Command::compute;
        if (table1->parsed()) config.command = Command::table1;
        if (table2->parsed()) config.command = Command::table2;
        if (table3->parsed()) config.command = Command::table3;
        if (fit->parsed()) config.command = Command::fit;
        if (figure->parsed()) config.command = Command::figure;

        if (auto m = oddzeta::method_from_name(method_text)) config.method = *m;
        config.format = format_text == "csv" ? OutputFormat::csv
                      : format_text == "json" ? OutputFormat::json
                                              : OutputFormat::pretty;
        if (!ns_text.empty()) config.ns = parse_ns(ns_text);

        return run(config);
    } catch (const std::exception& e) {
        std::string message = e.what();
        for (char& c : message)
            if (c == '"') c = '\'';
        std::cerr << R"({"error":{"type":"runtime","message":")" << message << R"("}})" << "\n";
        return 1;
    }
}
