#pragma once

#include "bicyclic/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bicyclic {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6 encoding: N(n) followed by the upper triangle in column order,
/// six bits per printable byte (value + 63).
std::string to_graph6(const Graph & g);
Graph from_graph6(std::string_view line);

/// One graph per line; blank lines and a leading ">>graph6<<" header skipped.
std::vector<Graph> read_graph6_stream(std::istream & in);
void write_graph6_stream(std::ostream & out, const std::vector<Graph> & graphs);

}  // namespace bicyclic
