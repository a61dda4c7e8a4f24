// ihg: validate, solve and rank implication hypergraphs from the command line.

#include "ihg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

namespace {

using ihg::cli::CliConfig;
using ihg::cli::Command;
using ihg::cli::ExportFormat;
using ihg::cli::OutputFormat;

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Propositional information on implication hypergraphs"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string nu_text, eps_text;

    const std::map<std::string, OutputFormat> formats{
        {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
    const std::map<std::string, ExportFormat> targets{
        {"dot", ExportFormat::Dot}, {"json", ExportFormat::Json}, {"dsl", ExportFormat::Dsl}};
    ExportFormat export_to = ExportFormat::Dot;
    ExportFormat gen_to = ExportFormat::Dsl;

    struct Spec {
        const char* name;
        Command command;
        const char* help;
    };
    const Spec specs[] = {
        {"validate", Command::Validate, "Check strictness and minimality; exit 1 on errors"},
        {"matrix", Command::Matrix, "Print the adjacency matrix as exact fractions"},
        {"solve", Command::Solve, "Print each proposition's information as a*nu + b*eps"},
        {"check", Command::Check, "Print well-definedness and configuredness diagnostics"},
        {"rank", Command::Rank, "Sort propositions by information at the given nu/eps"},
        {"export", Command::Export, "Write the hypergraph as DOT, JSON or DSL"},
        {"gen", Command::Gen, "Write a random instance"},
    };

    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->callback([&cfg, c = s.command] { cfg.command = c; });
        if (s.command != Command::Gen) sub->add_option("input", cfg.input, "Input .ihg or .json file, '-' for stdin");
        switch (s.command) {
        case Command::Solve:
        case Command::Check:
        case Command::Rank:
            sub->add_option("--nu", nu_text, "Leaf information unit (e.g. 0.5 or 1/2)");
            sub->add_option("--eps", eps_text, "Per-implication increment (e.g. 1 or 3/4)");
            sub->add_flag("--exact", cfg.exact, "Print values as exact fractions");
            sub->add_option("--precision", cfg.precision, "Decimal places for values")->capture_default_str();
            [[fallthrough]];
        case Command::Validate:
        case Command::Matrix:
            sub->add_option("--format", cfg.format, "Output format")
                ->transform(CLI::CheckedTransformer(formats).description(""))
                ->type_name("table|json|csv");
            break;
        case Command::Export:
            sub->add_option("--to", export_to, "Export format")
                ->transform(CLI::CheckedTransformer(targets).description(""))
                ->type_name("dot|json|dsl");
            break;
        case Command::Gen:
            sub->add_option("--nodes", cfg.gen.nodes, "Number of propositions")->required();
            sub->add_option("--max-edges", cfg.gen.max_edges, "Upper bound on hyperedges");
            sub->add_option("--max-tail", cfg.gen.max_tail, "Largest tail size")->capture_default_str();
            sub->add_option("--max-head", cfg.gen.max_head, "Largest head size")->capture_default_str();
            sub->add_flag("--acyclic", cfg.gen.acyclic, "Only generate acyclic instances");
            sub->add_flag("--labeled", cfg.gen.labeled, "Attach labels to some propositions");
            sub->add_option("--seed", cfg.gen.seed, "Random seed")->capture_default_str();
            sub->add_option("--to", gen_to, "Output format")
                ->transform(CLI::CheckedTransformer(targets).description(""))
                ->type_name("dsl|json|dot");
            break;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ihg::cli::kUsageError;
    }

    cfg.to = cfg.command == Command::Gen ? gen_to : export_to;
    for (auto [text, target, name] : {std::tuple{&nu_text, &cfg.nu, "--nu"}, std::tuple{&eps_text, &cfg.eps, "--eps"}}) {
        if (text->empty()) continue;
        *target = ihg::parse_rational(*text);
        if (!*target) {
            std::cerr << "error: " << name << " expects a decimal or fraction, got '" << *text << "'\n";
            return ihg::cli::kUsageError;
        }
    }

    std::string input;
    if (cfg.command != Command::Gen && !read_input(cfg.input, input)) {
        std::cerr << "error: cannot read '" << cfg.input << "'\n";
        return ihg::cli::kUsageError;
    }

    auto result = ihg::cli::run(cfg, input);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
