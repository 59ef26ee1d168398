#include "graph6.hpp"

#include <stdexcept>

namespace kcover {

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bit = 5;
    int acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(63 + acc));
    return out;
}

Graph parse_graph6(const std::string& text) {
    size_t begin = 0, end = text.size();
    const std::string header = ">>graph6<<";
    if (text.rfind(header, 0) == 0) begin = header.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin >= end) throw std::invalid_argument("empty graph6 string");

    size_t pos = begin;
    auto next_byte = [&]() -> int {
        if (pos >= end) throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 byte");
        return c - 63;
    };

    int n = next_byte();
    if (n == 63) {
        // Long-form order prefix; anything this large is out of range here.
        throw std::invalid_argument("graph6 order exceeds 32");
    }
    if (n > kMaxOrder) throw std::invalid_argument("graph6 order exceeds 32");

    Graph g(n);
    int bit = -1;
    int acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit < 0) {
                acc = next_byte();
                bit = 5;
            }
            if ((acc >> bit) & 1) g.add_edge(u, v);
            --bit;
        }
    }
    if (bit > 0 && (acc & ((1 << bit) - 1)) != 0)
        throw std::invalid_argument("nonzero padding bits in graph6 string");
    if (pos != end) throw std::invalid_argument("trailing bytes in graph6 string");
    return g;
}

}  // namespace kcover
