#pragma once

// Command implementations behind the `ihg` executable. Argument parsing lives
// in tools/ihg.cpp; everything here is a pure function of (config, input).

#include "ihg/diagnostics.hpp"
#include "ihg/errors.hpp"
#include "ihg/hypergraph.hpp"
#include "ihg/rational.hpp"
#include "ihg/solver.hpp"
#include "ihg/testkit.hpp"
#include "ihg/textio.hpp"
#include "ihg/validate.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ihg::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailed = 1,
    kNotWellDefined = 2,
    kParseError = 3,
    kUsageError = 4,
};

enum class Command { Validate, Matrix, Solve, Check, Rank, Export, Gen };
enum class OutputFormat { Table, Json, Csv };
enum class ExportFormat { Dot, Json, Dsl };

struct CliConfig {
    Command command = Command::Validate;
    std::string input = "-";
    std::optional<Rational> nu;
    std::optional<Rational> eps;
    OutputFormat format = OutputFormat::Table;
    std::size_t precision = 2;
    bool exact = false;
    std::optional<ExportFormat> to; // export defaults to DOT, gen to DSL
    GenSpec gen;
};

struct RunResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

constexpr std::size_t kMaxPrecision = 50;

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

inline std::string render_value(const Rational& v, const CliConfig& cfg) {
    return cfg.exact ? to_fraction_string(v) : to_decimal_string(v, cfg.precision);
}

inline std::string location(const HypergraphDocument& doc, const Provenance& where) {
    std::string loc = doc.source_name;
    if (where.line > 0) {
        loc += ":" + std::to_string(where.line);
        if (where.column > 0) loc += ":" + std::to_string(where.column);
    } else if (!where.path.empty()) loc += ":" + where.path;
    return loc;
}

inline std::string finding_location(const HypergraphDocument& doc, const Finding& f) {
    if (!f.edges.empty() && f.edges.back() < doc.edges.size()) return location(doc, doc.edges[f.edges.back()].where);
    if (!f.vertices.empty() && f.vertices.front() < doc.propositions.size())
        return location(doc, doc.propositions[f.vertices.front()].where);
    return doc.source_name;
}

inline RunResult cmd_validate(const CliConfig& cfg, const HypergraphDocument& doc, const ImplicationHypergraph& h) {
    RunResult r;
    auto report = validate(h);
    std::size_t errors = 0, warnings = 0;
    std::ostringstream err;
    for (const auto& f : report.findings) {
        (f.severity == Severity::Error ? errors : warnings)++;
        err << finding_location(doc, f) << ": " << to_string(f.severity) << ": " << to_string(f.rule) << ": " << f.message
            << '\n';
    }
    r.err = err.str();

    if (cfg.format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["errors"] = errors;
        j["warnings"] = warnings;
        j["findings"] = nlohmann::ordered_json::array();
        for (const auto& f : report.findings) {
            nlohmann::ordered_json jf;
            jf["rule"] = std::string(to_string(f.rule));
            jf["severity"] = std::string(to_string(f.severity));
            jf["edges"] = f.edges;
            std::vector<std::string> ids;
            for (auto v : f.vertices) ids.push_back(h.id(v));
            jf["vertices"] = ids;
            jf["message"] = f.message;
            j["findings"].push_back(std::move(jf));
        }
        r.out = j.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "rule,severity,location,message\n";
        for (const auto& f : report.findings)
            out << to_string(f.rule) << ',' << to_string(f.severity) << ',' << csv_field(finding_location(doc, f)) << ','
                << csv_field(f.message) << '\n';
        r.out = out.str();
    } else {
        r.out = std::to_string(errors) + " error(s), " + std::to_string(warnings) + " warning(s)\n";
    }
    r.exit_code = errors > 0 ? kValidationFailed : kOk;
    return r;
}

inline RunResult cmd_matrix(const CliConfig& cfg, const ImplicationHypergraph& h) {
    auto a = adjacency_matrix(h);
    const auto n = h.size();
    std::ostringstream out;
    if (cfg.format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        std::vector<std::string> ids;
        for (const auto& p : h.propositions()) ids.push_back(p.id);
        j["ids"] = ids;
        j["rows"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> row;
            for (std::size_t k = 0; k < n; ++k) row.push_back(to_fraction_string(a(i, k)));
            j["rows"].push_back(row);
        }
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        out << "id";
        for (const auto& p : h.propositions()) out << ',' << p.id;
        out << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            out << h.id(i);
            for (std::size_t k = 0; k < n; ++k) out << ',' << to_fraction_string(a(i, k));
            out << '\n';
        }
    } else {
        std::vector<std::size_t> width(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            width[0] = std::max(width[0], h.id(i).size());
            width[i + 1] = h.id(i).size();
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) width[k + 1] = std::max(width[k + 1], to_fraction_string(a(i, k)).size());
        auto emit_row = [&](const std::vector<std::string>& cells) {
            std::string line;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c) line += "  ";
                line += c + 1 < cells.size() ? pad(cells[c], width[c]) : cells[c];
            }
            out << line << '\n';
        };
        std::vector<std::string> header{""};
        for (const auto& p : h.propositions()) header.push_back(p.id);
        emit_row(header);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> row{h.id(i)};
            for (std::size_t k = 0; k < n; ++k) row.push_back(to_fraction_string(a(i, k)));
            emit_row(row);
        }
    }
    return {kOk, out.str(), {}};
}

inline RunResult cmd_solve(const CliConfig& cfg, const ImplicationHypergraph& h) {
    auto solved = solve_system(h);
    if (!solved.forms) return {kNotWellDefined, {}, "error: information is not well-defined: det(I - A) = 0\n"};
    const auto& forms = *solved.forms;

    std::optional<Params> params;
    if (cfg.nu || cfg.eps) params.emplace(cfg.nu.value_or(Rational(1)), cfg.eps.value_or(Rational(1)));

    std::ostringstream out;
    if (cfg.format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["nu"] = params ? nlohmann::ordered_json(to_fraction_string(params->nu())) : nlohmann::ordered_json(nullptr);
        j["eps"] = params ? nlohmann::ordered_json(to_fraction_string(params->eps())) : nlohmann::ordered_json(nullptr);
        j["propositions"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& p = h.propositions()[i];
            nlohmann::ordered_json jp;
            jp["id"] = p.id;
            jp["label"] = p.label ? nlohmann::ordered_json(*p.label) : nlohmann::ordered_json(nullptr);
            jp["nu_coeff"] = to_fraction_string(forms[i].nu_coeff);
            jp["eps_coeff"] = to_fraction_string(forms[i].eps_coeff);
            if (params) {
                auto v = evaluate(forms[i], *params);
                jp["value"] = render_value(v, cfg);
                jp["exact_value"] = to_fraction_string(v);
            } else {
                jp["value"] = nullptr;
            }
            j["propositions"].push_back(std::move(jp));
        }
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        out << "id,label,nu_coeff,eps_coeff,value\n";
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& p = h.propositions()[i];
            out << p.id << ',' << csv_field(p.label.value_or("")) << ',' << to_fraction_string(forms[i].nu_coeff) << ','
                << to_fraction_string(forms[i].eps_coeff) << ',';
            if (params) out << render_value(evaluate(forms[i], *params), cfg);
            out << '\n';
        }
    } else {
        std::size_t id_width = 0, form_width = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            id_width = std::max(id_width, h.id(i).size());
            form_width = std::max(form_width, to_string(forms[i]).size());
        }
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& p = h.propositions()[i];
            std::string line = pad(p.id, id_width) + "  ";
            std::string form = to_string(forms[i]);
            if (params) {
                line += pad(form, form_width) + " = " + render_value(evaluate(forms[i], *params), cfg);
            } else {
                line += p.label ? pad(form, form_width) : form;
            }
            if (p.label) line += "  # " + *p.label;
            out << line << '\n';
        }
    }
    return {kOk, out.str(), {}};
}

inline RunResult cmd_check(const CliConfig& cfg, const ImplicationHypergraph& h) {
    auto d = diagnose(h);
    std::optional<Params> params;
    if (cfg.nu || cfg.eps) params.emplace(cfg.nu.value_or(Rational(1)), cfg.eps.value_or(Rational(1)));
    std::optional<ConfiguredResult> configured;
    if (params) configured = is_configured(h, *params);

    std::ostringstream out;
    if (cfg.format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["wellDefined"] = d.well_defined;
        j["detIminusA"] = to_fraction_string(d.det_i_minus_a);
        nlohmann::ordered_json nec;
        nec["passes"] = d.necessary.passes;
        nec["values"] = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < h.size(); ++i) nec["values"][h.id(i)] = to_fraction_string(d.necessary.values[i]);
        j["necessaryCondition"] = std::move(nec);
        j["sufficientCondition"] = d.sufficient;
        j["configuredUniversally"] =
            d.configured_universally ? nlohmann::ordered_json(*d.configured_universally) : nlohmann::ordered_json(nullptr);
        if (configured) {
            j["configured"] = configured->configured;
            if (configured->reason) j["configuredReason"] = *configured->reason;
        }
        out << j.dump(2) << '\n';
    } else {
        auto yes = [](bool b) { return b ? "true" : "false"; };
        out << "wellDefined: " << yes(d.well_defined) << '\n';
        out << "detIminusA: " << to_fraction_string(d.det_i_minus_a) << '\n';
        out << "necessaryCondition: " << (d.necessary.passes ? "pass" : "fail") << '\n';
        std::size_t id_width = 0;
        for (const auto& p : h.propositions()) id_width = std::max(id_width, p.id.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            out << "  " << pad(h.id(i), id_width) << "  sum_j A_ij*A_ji = " << to_fraction_string(d.necessary.values[i])
                << '\n';
        out << "sufficientCondition: " << (d.sufficient ? "pass" : "fail") << '\n';
        out << "configuredUniversally: " << (d.configured_universally ? yes(*d.configured_universally) : "n/a") << '\n';
        if (configured) {
            out << "configured(nu=" << to_fraction_string(params->nu()) << ", eps=" << to_fraction_string(params->eps())
                << "): " << yes(configured->configured);
            if (configured->reason) out << " (" << *configured->reason << ")";
            out << '\n';
        }
    }
    RunResult r{kOk, out.str(), {}};
    if (!d.well_defined) {
        r.exit_code = kNotWellDefined;
        r.err = "error: information is not well-defined: det(I - A) = 0\n";
    }
    return r;
}

inline RunResult cmd_rank(const CliConfig& cfg, const ImplicationHypergraph& h) {
    auto solved = solve_system(h);
    if (!solved.forms) return {kNotWellDefined, {}, "error: information is not well-defined: det(I - A) = 0\n"};
    Params params(cfg.nu.value_or(Rational(1)), cfg.eps.value_or(Rational(1)));
    auto values = evaluate(*solved.forms, params);

    std::vector<VertexIndex> order(h.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return values[a] > values[b]; });

    std::ostringstream out;
    if (cfg.format == OutputFormat::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < order.size(); ++r) {
            const auto& p = h.propositions()[order[r]];
            nlohmann::ordered_json jp;
            jp["rank"] = r + 1;
            jp["id"] = p.id;
            jp["label"] = p.label ? nlohmann::ordered_json(*p.label) : nlohmann::ordered_json(nullptr);
            jp["value"] = render_value(values[order[r]], cfg);
            jp["exact_value"] = to_fraction_string(values[order[r]]);
            j.push_back(std::move(jp));
        }
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::Csv) {
        out << "rank,id,label,value\n";
        for (std::size_t r = 0; r < order.size(); ++r) {
            const auto& p = h.propositions()[order[r]];
            out << r + 1 << ',' << p.id << ',' << csv_field(p.label.value_or("")) << ','
                << render_value(values[order[r]], cfg) << '\n';
        }
    } else {
        std::size_t id_width = 0, value_width = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            id_width = std::max(id_width, h.id(i).size());
            value_width = std::max(value_width, render_value(values[i], cfg).size());
        }
        const auto rank_width = std::to_string(order.size()).size();
        for (std::size_t r = 0; r < order.size(); ++r) {
            const auto& p = h.propositions()[order[r]];
            std::string rank = std::to_string(r + 1);
            std::string value = render_value(values[order[r]], cfg);
            std::string line = std::string(rank_width - rank.size(), ' ') + rank + "  " + pad(p.id, id_width) + "  " +
                               std::string(value_width - value.size(), ' ') + value;
            if (p.label) line += "  " + *p.label;
            out << line << '\n';
        }
    }
    return {kOk, out.str(), {}};
}

inline RunResult cmd_export(const CliConfig& cfg, const HypergraphDocument& doc, const ImplicationHypergraph& h) {
    switch (cfg.to.value_or(ExportFormat::Dot)) {
    case ExportFormat::Dot: return {kOk, emit_dot(h), {}};
    case ExportFormat::Json: return {kOk, emit_json(doc), {}};
    case ExportFormat::Dsl: return {kOk, emit_dsl(doc), {}};
    }
    return {kUsageError, {}, "error: unknown export format\n"};
}

inline RunResult cmd_gen(const CliConfig& cfg) {
    auto h = generate(cfg.gen);
    switch (cfg.to.value_or(ExportFormat::Dsl)) {
    case ExportFormat::Dot: return {kOk, emit_dot(h), {}};
    case ExportFormat::Json: return {kOk, emit_json(h), {}};
    case ExportFormat::Dsl: return {kOk, emit_dsl(h), {}};
    }
    return {kUsageError, {}, "error: unknown output format\n"};
}

} // namespace detail

/// Executes one command. `input` is the content of the input file (ignored by gen).
inline RunResult run(const CliConfig& cfg, std::string_view input) {
    if (cfg.precision > kMaxPrecision)
        return {kUsageError, {}, "error: --precision must be at most " + std::to_string(kMaxPrecision) + "\n"};
    if ((cfg.nu && *cfg.nu <= 0) || (cfg.eps && *cfg.eps <= 0))
        return {kUsageError, {}, "error: --nu and --eps must be strictly positive\n"};

    try {
        if (cfg.command == Command::Gen) return detail::cmd_gen(cfg);

        std::string source_name = cfg.input == "-" ? "<stdin>" : cfg.input;
        HypergraphDocument doc;
        ImplicationHypergraph h;
        try {
            doc = parse_document(input, source_name);
            h = doc.to_hypergraph();
        } catch (const ParseError& e) {
            return {kParseError, {}, source_name + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                                         ": error: " + e.what() + "\n"};
        } catch (const SchemaError& e) {
            return {kParseError, {}, source_name + ": error: " + e.what() + "\n"};
        } catch (const ModelError& e) {
            return {kParseError, {}, source_name + ": error: " + e.what() + "\n"};
        }

        switch (cfg.command) {
        case Command::Validate: return detail::cmd_validate(cfg, doc, h);
        case Command::Matrix: return detail::cmd_matrix(cfg, h);
        case Command::Solve: return detail::cmd_solve(cfg, h);
        case Command::Check: return detail::cmd_check(cfg, h);
        case Command::Rank: return detail::cmd_rank(cfg, h);
        case Command::Export: return detail::cmd_export(cfg, doc, h);
        case Command::Gen: break;
        }
    } catch (const InfeasibleSpec& e) {
        return {kUsageError, {}, std::string("error: ") + e.what() + "\n"};
    } catch (const NonPositiveParams& e) {
        return {kUsageError, {}, std::string("error: ") + e.what() + "\n"};
    }
    return {kUsageError, {}, "error: unknown command\n"};
}

} // namespace ihg::cli
