#include "names.hpp"

#include <cctype>
#include <stdexcept>

namespace kcover {

namespace {

// Cursor over the name with small token helpers. The two set operators
// are accepted both as UTF-8 (∪, ∨) and as ASCII aliases (u, v).
struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_space() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= s.size();
    }
    bool peek_char(char c) {
        skip_space();
        return pos < s.size() && s[pos] == c;
    }
    bool eat_char(char c) {
        if (!peek_char(c)) return false;
        ++pos;
        return true;
    }
    bool eat_utf8(const char* seq) {
        skip_space();
        size_t len = std::char_traits<char>::length(seq);
        if (s.compare(pos, len, seq) != 0) return false;
        pos += len;
        return true;
    }
    bool eat_union() { return eat_utf8("\xE2\x88\xAA") || eat_char('u'); }
    bool eat_join() { return eat_utf8("\xE2\x88\xA8") || eat_char('v'); }

    bool peek_digit() {
        skip_space();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    int parse_number() {
        skip_space();
        if (!peek_digit()) throw std::invalid_argument("expected number in graph name");
        long value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + (s[pos] - '0');
            if (value > kMaxOrder * kMaxOrder) throw std::invalid_argument("number too large in graph name");
            ++pos;
        }
        return static_cast<int>(value);
    }

    // "K" n [ "," n ]
    Graph parse_k_atom() {
        skip_space();
        if (pos >= s.size() || s[pos] != 'K')
            throw std::invalid_argument("expected K<n> or K<m>,<n> in graph name");
        ++pos;
        int a = parse_number();
        if (eat_char(',')) {
            int b = parse_number();
            return make_complete_bipartite(a, b);
        }
        return make_complete(a);
    }

    Graph parse_atom() {
        if (eat_char('(')) {
            Graph inner = parse_pattern();
            if (!eat_char(')')) throw std::invalid_argument("missing ')' in graph name");
            return inner;
        }
        return parse_k_atom();
    }

    Graph parse_term() {
        int count = 1;
        if (peek_digit()) count = parse_number();
        if (count < 1) throw std::invalid_argument("zero multiplicity in graph name");
        Graph atom = parse_atom();
        Graph out = atom;
        for (int i = 1; i < count; ++i) out = disjoint_union(out, atom);
        return out;
    }

    Graph parse_join() {
        Graph left = parse_term();
        while (eat_join()) {
            Graph right = parse_term();
            if (left.order() == 0 || right.order() == 0)
                throw std::invalid_argument("one-vertex join needs nonempty operands");
            left = one_vertex_join(left, right, left.order() - 1, 0);
        }
        return left;
    }

    Graph parse_pattern() {
        Graph out = parse_join();
        while (eat_union()) out = disjoint_union(out, parse_join());
        return out;
    }
};

}  // namespace

Graph parse_name(const std::string& name) {
    Parser p(name);
    Graph base = p.parse_k_atom();
    if (!p.done()) {
        if (!p.eat_char('-')) throw std::invalid_argument("expected '-' after base in graph name");
        Graph pattern = p.parse_pattern();
        if (!p.done()) throw std::invalid_argument("trailing characters in graph name");
        if (pattern.order() > base.order())
            throw std::invalid_argument("pattern does not fit in base: too many vertices");
        for (auto [u, v] : pattern.edges()) {
            if (!base.has_edge(u, v))
                throw std::invalid_argument("pattern does not fit in base: missing edge");
            base.remove_edge(u, v);
        }
    }
    // Normalized label: the input without spaces.
    std::string label;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) label.push_back(c);
    base.set_name(label);
    return base;
}

bool looks_like_name(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return i + 1 < text.size() && text[i] == 'K' &&
           std::isdigit(static_cast<unsigned char>(text[i + 1]));
}

}  // namespace kcover
