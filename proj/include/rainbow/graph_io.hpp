#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rainbow/plane_graph.hpp"

namespace rainbow {

// Line-oriented text format:
//   n <count>
//   e <id> <u> <v>            one per edge, ids in order
//   r <v> <edge ids...>       cyclic rotation, one per vertex; omit all r lines
//                             to have an embedding computed
//   outer <a> <b> <c>         a->b->c consecutive on the outer face walk
std::string write_graph(const PlaneGraph& g);
PlaneGraph read_graph(std::string_view text);

/// Several graphs, each introduced by its own `n` line.
std::string write_graph_list(const std::vector<PlaneGraph>& graphs);
std::vector<PlaneGraph> read_graph_list(std::string_view text);

/// Splits text into non-empty lines with trailing '\r' and '#' comments removed.
std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split_words(std::string_view line);
int parse_int(std::string_view word);

} // namespace rainbow
