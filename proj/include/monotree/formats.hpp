#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "monotree/colouring.hpp"
#include "monotree/graph.hpp"

namespace monotree {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge list: "n m", then m lines "u v" with u < v in ascending lexicographic
// order. Parsing is strict: anything else raises FormatError with the line
// number.
std::string format_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Colouring: "r", then one colour per line in the graph's edge order.
std::string format_colouring(const EdgeColouring& c);
EdgeColouring parse_colouring(std::string_view text, const Graph& g);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

Graph load_graph(const std::filesystem::path& path);
EdgeColouring load_colouring(const std::filesystem::path& path, const Graph& g);

}  // namespace monotree
