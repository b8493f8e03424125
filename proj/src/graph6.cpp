#include "bicyclic/graph6.hpp"

#include <istream>
#include <ostream>

namespace bicyclic {

std::string to_graph6(const Graph & g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int bits = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = acc = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.substr(0, 10) == ">>graph6<<")
        line.remove_prefix(10);
    if (line.empty())
        throw Graph6Error("empty graph6 string");

    auto value = [&](std::size_t i) {
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw Graph6Error("invalid graph6 byte at offset " + std::to_string(i));
        return c - 63;
    };

    std::size_t pos = 0;
    int n;
    if (value(0) < 63) {
        n = value(0);
        pos = 1;
    }
    else {
        if (line.size() < 4 || value(1) == 63)
            throw Graph6Error("unsupported graph6 size header");
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds 32");

    const std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() - pos != need)
        throw Graph6Error("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " + std::to_string(need));

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((value(pos + bit / 6) >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
    return make_graph(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream & in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

void write_graph6_stream(std::ostream & out, const std::vector<Graph> & graphs)
{
    for (const auto & g : graphs)
        out << to_graph6(g) << '\n';
}

}  // namespace bicyclic
