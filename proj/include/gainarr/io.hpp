#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gainarr/arrangement.hpp"
#include "gainarr/freeness.hpp"
#include "gainarr/gain_graph.hpp"
#include "gainarr/int_polynomial.hpp"
#include "gainarr/lowdim.hpp"

namespace gainarr {

struct ParsedGraph {
  GainGraph graph;
  std::vector<std::string> warnings;
};

/// Reads the text format:
///   group Z | group F <p>
///   vertices <n>
///   edge <i> <j> <g>     (any number, 1-based)
/// Blank lines and text after '#' are ignored. Throws ParseError.
ParsedGraph parse_graph_text(const std::string& text);
GainGraph parse_graph_file(const std::string& text);
std::string read_text_file(const std::string& path);
/// Inverse of parse_graph_text.
std::string write_graph_text(const GainGraph& g);

using Json = nlohmann::ordered_json;

Json to_json(const IntPolynomial& p);
Json to_json(const GainGraph& g);
Json to_json(const Arrangement& a);
Json to_json(const FreenessCertificate& c);
Json to_json(const Free3Result& r);

}  // namespace gainarr
