#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rbd/ball.hpp"
#include "rbd/blowdown.hpp"
#include "rbd/goeritz.hpp"
#include "rbd/plumbing.hpp"

namespace rbd {

struct GraphFile {
  PlumbingGraph graph;
  std::optional<BallHandleSpec> handle;
};

// Lines: "v <label> <weight>", "e <label> <label> [mult]", "h <n integers> ; <framing>".
GraphFile parse_graph(std::string_view text, const std::string& source = "<input>");
GraphFile load_graph(const std::string& path);
std::string write_graph(const PlumbingGraph& g, const std::optional<BallHandleSpec>& handle = std::nullopt);

// Header "chi=<n> sigma=<n>", then "class <name> c1sq=<q> pair=<k1,...> [off=<tag>]".
AmbientData parse_ambient(std::string_view text, const std::string& source = "<input>");
AmbientData load_ambient(const std::string& path);

// "regions <w>", optional "black <b>", then "x <a> <b> <sign> [<black a> <black b>]".
AlternatingDiagram parse_diagram(std::string_view text, const std::string& source = "<input>");
AlternatingDiagram load_diagram(const std::string& path);
std::string write_diagram(const AlternatingDiagram& d);

std::string read_file(const std::string& path);

}  // namespace rbd
