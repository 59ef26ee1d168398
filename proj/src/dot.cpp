#include "dot.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>
#include <stdexcept>
#include <string>

namespace kcover {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot(const Graph& g, const std::string& name,
                   const std::vector<std::pair<int, int>>& bold,
                   const std::vector<int>& doubled) {
    std::set<std::pair<int, int>> bold_set;
    for (auto [u, v] : bold) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
            throw std::invalid_argument("bold edge not in graph");
        bold_set.insert({std::min(u, v), std::max(u, v)});
    }
    std::set<int> doubled_set;
    for (int v : doubled) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("doubled vertex out of range");
        doubled_set.insert(v);
    }

    std::string out = "graph " + quote(name) + " {\n";
    for (int v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        if (doubled_set.count(v)) out += " [shape=doublecircle]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v);
        if (bold_set.count({u, v})) out += " [style=bold]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

namespace {

struct Token {
    enum Kind { Id, Str, Punct, Edge, End } kind = End;
    std::string text;
    int line = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            pos_ += 2;
            t.kind = Token::Edge;
            t.text = "--";
            return t;
        }
        if (std::strchr("{}[];,=", c)) {
            ++pos_;
            t.kind = Token::Punct;
            t.text = c;
            return t;
        }
        if (c == '"') {
            ++pos_;
            t.kind = Token::Str;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
                if (text_[pos_] == '\n') ++line_;
                t.text += text_[pos_++];
            }
            if (pos_ >= text_.size()) fail("unterminated string");
            ++pos_;
            return t;
        }
        if (std::isalnum((unsigned char)c) || c == '_' || c == '.') {
            t.kind = Token::Id;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (!std::isalnum((unsigned char)d) && d != '_' && d != '.') break;
                t.text += d;
                ++pos_;
            }
            return t;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("dot: line " + std::to_string(line_) + ": " + msg);
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace((unsigned char)c)) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { advance(); }

    ParsedDot parse() {
        if (cur_.kind == Token::Id && cur_.text == "strict") advance();
        if (cur_.kind != Token::Id) fail("expected 'graph'");
        if (cur_.text == "digraph") fail("directed graphs not supported");
        if (cur_.text != "graph") fail("expected 'graph'");
        advance();
        ParsedDot out;
        if (cur_.kind == Token::Str || (cur_.kind == Token::Id && cur_.text != "{")) {
            out.name = cur_.text;
            advance();
        }
        expect_punct('{');
        int max_vertex = -1;
        std::set<int> doubled;
        std::set<std::pair<int, int>> edges;
        std::set<std::pair<int, int>> bold;
        while (!(cur_.kind == Token::Punct && cur_.text == "}")) {
            if (cur_.kind == Token::End) fail("missing '}'");
            if (cur_.kind != Token::Id) fail("expected a statement");
            if (cur_.text == "node" || cur_.text == "edge" || cur_.text == "graph") {
                advance();
                attributes();  // default-attribute statement, ignored
                expect_punct(';');
                continue;
            }
            int u = vertex_id(cur_.text);
            advance();
            if (cur_.kind == Token::Edge) {
                advance();
                if (cur_.kind != Token::Id) fail("expected a vertex after '--'");
                int v = vertex_id(cur_.text);
                advance();
                if (u == v) fail("self-loop not allowed");
                auto e = std::minmax(u, v);
                if (!edges.insert({e.first, e.second}).second) fail("duplicate edge");
                if (attributes().count({"style", "bold"})) bold.insert({e.first, e.second});
                max_vertex = std::max({max_vertex, u, v});
            } else {
                if (attributes().count({"shape", "doublecircle"})) doubled.insert(u);
                max_vertex = std::max(max_vertex, u);
            }
            expect_punct(';');
        }
        advance();
        if (cur_.kind != Token::End) fail("trailing input after '}'");

        out.graph = Graph(max_vertex + 1);
        for (auto [u, v] : edges) out.graph.add_edge(u, v);
        out.graph.set_name(out.name);
        out.bold_edges.assign(bold.begin(), bold.end());
        out.doubled.assign(doubled.begin(), doubled.end());
        return out;
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) const { lex_.fail(msg); }

    void expect_punct(char c) {
        if (cur_.kind != Token::Punct || cur_.text[0] != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    int vertex_id(const std::string& s) {
        for (char c : s)
            if (!std::isdigit((unsigned char)c)) fail("vertex id must be a nonnegative integer");
        long v = std::stol(s);
        if (v >= kMaxOrder) fail("vertex id exceeds the engine's order cap");
        return (int)v;
    }

    std::set<std::pair<std::string, std::string>> attributes() {
        std::set<std::pair<std::string, std::string>> out;
        if (!(cur_.kind == Token::Punct && cur_.text == "[")) return out;
        advance();
        while (!(cur_.kind == Token::Punct && cur_.text == "]")) {
            if (cur_.kind != Token::Id && cur_.kind != Token::Str) fail("expected attribute name");
            std::string key = cur_.text;
            advance();
            expect_punct('=');
            if (cur_.kind != Token::Id && cur_.kind != Token::Str) fail("expected attribute value");
            out.insert({key, cur_.text});
            advance();
            if (cur_.kind == Token::Punct && cur_.text == ",") advance();
        }
        advance();
        return out;
    }

    Lexer lex_;
    Token cur_;
};

}  // namespace

ParsedDot parse_dot(const std::string& text) { return Parser(text).parse(); }

}  // namespace kcover
