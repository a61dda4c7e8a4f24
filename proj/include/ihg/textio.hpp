#pragma once

// Text formats for implication hypergraphs.
//
//   DSL (.ihg), one statement per line:
//     # comment
//     prop <id> ["label"]
//     <id> & <id> ... => <id> & <id> ...
//   Ids used in edges without a prior `prop` line are declared implicitly,
//   in order of first appearance.
//
//   JSON: {"propositions":[{"id":..,"label":..|null}], "edges":[{"tail":[..],"head":[..]}]}
//
//   DOT: each hyperedge becomes a point-shaped junction node e<k>, with arcs
//   from its tail members into it and from it out to its head members.

#include "ihg/errors.hpp"
#include "ihg/hypergraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ihg {

/// Where a declaration came from: 1-based line/column for DSL, a JSON path for JSON.
struct Provenance {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string path;
};

struct DocProposition {
    std::string id;
    std::optional<std::string> label;
    Provenance where;
};

struct DocEdge {
    std::vector<std::string> tail;
    std::vector<std::string> head;
    Provenance where;
};

struct HypergraphDocument {
    std::string source_name;
    std::vector<DocProposition> propositions;
    std::vector<DocEdge> edges;

    ImplicationHypergraph to_hypergraph() const {
        std::vector<Proposition> props;
        props.reserve(propositions.size());
        for (const auto& p : propositions) props.push_back({p.id, p.label});
        std::vector<EdgeDecl> decls;
        decls.reserve(edges.size());
        for (const auto& e : edges) decls.push_back({e.tail, e.head});
        return ImplicationHypergraph::build(std::move(props), decls);
    }

    static HypergraphDocument from_hypergraph(const ImplicationHypergraph& h, std::string source_name = {}) {
        HypergraphDocument doc{std::move(source_name), {}, {}};
        for (const auto& p : h.propositions()) doc.propositions.push_back({p.id, p.label, {}});
        for (std::size_t e = 0; e < h.edges().size(); ++e) {
            auto d = h.edge_decl(e);
            doc.edges.push_back({std::move(d.tail), std::move(d.head), {}});
        }
        return doc;
    }

    /// Same propositions, labels and edges in the same order; provenance ignored.
    bool structurally_equal(const HypergraphDocument& other) const {
        if (propositions.size() != other.propositions.size() || edges.size() != other.edges.size()) return false;
        for (std::size_t i = 0; i < propositions.size(); ++i)
            if (propositions[i].id != other.propositions[i].id || propositions[i].label != other.propositions[i].label)
                return false;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].tail != other.edges[i].tail || edges[i].head != other.edges[i].head) return false;
        return true;
    }
};

namespace detail {

struct Token {
    enum class Kind { Ident, String, Amp, Arrow } kind;
    std::string text;
    std::size_t column;
};

inline std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto syntax = [&](std::size_t col, const std::string& msg) {
        return ParseError(ParseError::Kind::SyntaxError, line_no, col, msg);
    };
    while (i < line.size()) {
        char c = line[i];
        std::size_t col = i + 1;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '&') {
            tokens.push_back({Token::Kind::Amp, "&", col});
            ++i;
        } else if (c == '=') {
            if (i + 1 >= line.size() || line[i + 1] != '>') throw syntax(col, "expected '=>'");
            tokens.push_back({Token::Kind::Arrow, "=>", col});
            i += 2;
        } else if (c == '"') {
            std::string text;
            ++i;
            bool closed = false;
            while (i < line.size()) {
                char d = line[i++];
                if (d == '"') {
                    closed = true;
                    break;
                }
                if (d == '\\') {
                    if (i >= line.size()) break;
                    char esc = line[i++];
                    switch (esc) {
                    case '"': text.push_back('"'); break;
                    case '\\': text.push_back('\\'); break;
                    case 'n': text.push_back('\n'); break;
                    case 't': text.push_back('\t'); break;
                    default: throw syntax(i - 1, std::string("unknown escape '\\") + esc + "'");
                    }
                } else {
                    text.push_back(d);
                }
            }
            if (!closed) throw syntax(col, "unterminated string");
            tokens.push_back({Token::Kind::String, std::move(text), col});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
            tokens.push_back({Token::Kind::Ident, std::string(line.substr(start, i - start)), col});
        } else {
            throw syntax(col, std::string("unexpected character '") + c + "'");
        }
    }
    return tokens;
}

inline std::string escape_label(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

} // namespace detail

inline HypergraphDocument parse_dsl(std::string_view source, std::string source_name = "<input>") {
    using detail::Token;
    HypergraphDocument doc;
    doc.source_name = std::move(source_name);

    std::map<std::string, std::size_t, std::less<>> index;
    std::set<std::string, std::less<>> explicitly_declared;

    auto declare = [&](const Token& t, std::size_t line_no) {
        if (index.find(t.text) == index.end()) {
            index.emplace(t.text, doc.propositions.size());
            doc.propositions.push_back({t.text, std::nullopt, {line_no, t.column, {}}});
        }
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        auto eol = source.find('\n', pos);
        if (eol == std::string_view::npos) eol = source.size();
        auto line = source.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = detail::tokenize_line(line, line_no);
        if (tokens.empty()) continue;

        auto syntax = [&](std::size_t col, const std::string& msg) {
            return ParseError(ParseError::Kind::SyntaxError, line_no, col, msg);
        };
        auto end_column = line.size() + 1;

        // prop <id> ["label"]
        if (tokens[0].kind == Token::Kind::Ident && tokens[0].text == "prop" &&
            (tokens.size() == 1 || tokens[1].kind == Token::Kind::Ident)) {
            if (tokens.size() == 1) throw syntax(end_column, "expected proposition id after 'prop'");
            const auto& id = tokens[1];
            std::optional<std::string> label;
            if (tokens.size() >= 3) {
                if (tokens[2].kind != Token::Kind::String) throw syntax(tokens[2].column, "expected quoted label");
                if (tokens[2].text.empty()) throw syntax(tokens[2].column, "label must not be empty");
                label = tokens[2].text;
            }
            if (tokens.size() > 3) throw syntax(tokens[3].column, "unexpected token after label");
            if (!explicitly_declared.insert(id.text).second)
                throw ParseError(ParseError::Kind::DuplicateProposition, line_no, id.column,
                                 "proposition '" + id.text + "' declared twice");
            declare(id, line_no);
            doc.propositions[index.at(id.text)].label = std::move(label);
            continue;
        }

        // <side> => <side>
        std::size_t t = 0;
        auto parse_side = [&](const char* which) {
            std::vector<const Token*> side;
            while (true) {
                if (t >= tokens.size() || tokens[t].kind != Token::Kind::Ident) {
                    std::size_t col = t < tokens.size() ? tokens[t].column : end_column;
                    throw syntax(col, side.empty() ? std::string("empty ") + which : std::string("expected proposition id"));
                }
                side.push_back(&tokens[t++]);
                if (t < tokens.size() && tokens[t].kind == Token::Kind::Amp) {
                    ++t;
                    continue;
                }
                return side;
            }
        };
        auto tail = parse_side("tail");
        if (t >= tokens.size() || tokens[t].kind != Token::Kind::Arrow)
            throw syntax(t < tokens.size() ? tokens[t].column : end_column, "expected '=>' or '&'");
        ++t;
        auto head = parse_side("head");
        if (t < tokens.size()) throw syntax(tokens[t].column, "unexpected token after edge");

        for (const auto* h : head)
            for (const auto* tl : tail)
                if (h->text == tl->text)
                    throw ParseError(ParseError::Kind::SelfIntersectingEdge, line_no, h->column,
                                     "'" + h->text + "' appears in both tail and head");

        DocEdge edge;
        edge.where = {line_no, tokens[0].column, {}};
        for (const auto* tk : tail) {
            declare(*tk, line_no);
            edge.tail.push_back(tk->text);
        }
        for (const auto* tk : head) {
            declare(*tk, line_no);
            edge.head.push_back(tk->text);
        }
        doc.edges.push_back(std::move(edge));
    }
    return doc;
}

inline std::string emit_dsl(const HypergraphDocument& doc) {
    std::ostringstream out;
    for (const auto& p : doc.propositions) {
        out << "prop " << p.id;
        if (p.label) out << " \"" << detail::escape_label(*p.label) << '"';
        out << '\n';
    }
    auto join = [](const std::vector<std::string>& ids) {
        std::string s;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) s += " & ";
            s += ids[i];
        }
        return s;
    };
    for (const auto& e : doc.edges) out << join(e.tail) << " => " << join(e.head) << '\n';
    return out.str();
}

inline std::string emit_dsl(const ImplicationHypergraph& h) { return emit_dsl(HypergraphDocument::from_hypergraph(h)); }

inline std::string emit_json(const HypergraphDocument& doc) {
    nlohmann::ordered_json root;
    root["propositions"] = nlohmann::ordered_json::array();
    for (const auto& p : doc.propositions) {
        nlohmann::ordered_json jp;
        jp["id"] = p.id;
        jp["label"] = p.label ? nlohmann::ordered_json(*p.label) : nlohmann::ordered_json(nullptr);
        root["propositions"].push_back(std::move(jp));
    }
    root["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : doc.edges) {
        nlohmann::ordered_json je;
        je["tail"] = e.tail;
        je["head"] = e.head;
        root["edges"].push_back(std::move(je));
    }
    return root.dump(2) + "\n";
}

inline std::string emit_json(const ImplicationHypergraph& h) { return emit_json(HypergraphDocument::from_hypergraph(h)); }

inline HypergraphDocument parse_json(std::string_view text, std::string source_name = "<input>") {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }

    HypergraphDocument doc;
    doc.source_name = std::move(source_name);
    if (!root.is_object()) throw SchemaError("", "expected an object");
    for (const char* key : {"propositions", "edges"})
        if (!root.contains(key) || !root[key].is_array()) throw SchemaError(key, "expected an array");

    std::set<std::string, std::less<>> ids;
    const auto& props = root["propositions"];
    for (std::size_t i = 0; i < props.size(); ++i) {
        std::string path = "propositions[" + std::to_string(i) + "]";
        const auto& jp = props[i];
        if (!jp.is_object()) throw SchemaError(path, "expected an object");
        if (!jp.contains("id") || !jp["id"].is_string()) throw SchemaError(path + ".id", "expected a string");
        auto id = jp["id"].get<std::string>();
        if (!is_valid_id(id)) throw SchemaError(path + ".id", "invalid proposition id '" + id + "'");
        if (!ids.insert(id).second) throw SchemaError(path + ".id", "duplicate proposition id '" + id + "'");
        std::optional<std::string> label;
        if (jp.contains("label") && !jp["label"].is_null()) {
            if (!jp["label"].is_string()) throw SchemaError(path + ".label", "expected a string or null");
            label = jp["label"].get<std::string>();
            if (label->empty()) throw SchemaError(path + ".label", "label must not be empty");
        }
        doc.propositions.push_back({std::move(id), std::move(label), {0, 0, path}});
    }

    const auto& edges = root["edges"];
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string path = "edges[" + std::to_string(i) + "]";
        const auto& je = edges[i];
        if (!je.is_object()) throw SchemaError(path, "expected an object");
        DocEdge edge;
        edge.where.path = path;
        for (const char* side : {"tail", "head"}) {
            std::string side_path = path + "." + side;
            if (!je.contains(side) || !je[side].is_array()) throw SchemaError(side_path, "expected an array");
            const auto& arr = je[side];
            if (arr.empty()) throw SchemaError(side_path, "must not be empty");
            auto& out = std::string_view(side) == "tail" ? edge.tail : edge.head;
            for (std::size_t k = 0; k < arr.size(); ++k) {
                std::string item_path = side_path + "[" + std::to_string(k) + "]";
                if (!arr[k].is_string()) throw SchemaError(item_path, "expected a string");
                auto id = arr[k].get<std::string>();
                if (!ids.count(id)) throw SchemaError(item_path, "unknown proposition '" + id + "'");
                out.push_back(std::move(id));
            }
        }
        for (const auto& h : edge.head)
            if (std::find(edge.tail.begin(), edge.tail.end(), h) != edge.tail.end())
                throw SchemaError(path, "'" + h + "' appears in both tail and head");
        doc.edges.push_back(std::move(edge));
    }
    return doc;
}

inline std::string emit_dot(const ImplicationHypergraph& h) {
    // Proposition nodes use their quoted id unless that would collide with a
    // junction name, in which case every proposition node gets a "p:" prefix.
    const auto m = h.edges().size();
    bool collide = false;
    for (std::size_t k = 0; k < m && !collide; ++k) collide = h.index_of("e" + std::to_string(k)).has_value();
    auto node = [&](VertexIndex v) { return "\"" + std::string(collide ? "p:" : "") + h.id(v) + "\""; };
    auto quote = [](std::string_view s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out.push_back('\\');
            if (c == '\n') {
                out += "\\n";
                continue;
            }
            out.push_back(c);
        }
        return out + "\"";
    };

    std::ostringstream out;
    out << "digraph implication {\n";
    out << "  node [shape=box];\n";
    for (VertexIndex v = 0; v < h.size(); ++v) {
        const auto& p = h.propositions()[v];
        out << "  " << node(v) << " [label=" << quote(p.label ? p.id + "\n" + *p.label : p.id) << "];\n";
    }
    for (std::size_t k = 0; k < m; ++k) out << "  e" << k << " [shape=point];\n";
    for (std::size_t k = 0; k < m; ++k) {
        const auto& e = h.edges()[k];
        for (auto v : e.tail) out << "  " << node(v) << " -> e" << k << ";\n";
        for (auto u : e.head) out << "  e" << k << " -> " << node(u) << ";\n";
    }
    out << "}\n";
    return out.str();
}

/// Dispatches on content: a leading '{' (after whitespace) means JSON.
inline HypergraphDocument parse_document(std::string_view text, std::string source_name = "<input>") {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text, std::move(source_name));
    return parse_dsl(text, std::move(source_name));
}

} // namespace ihg
