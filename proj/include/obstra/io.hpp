#pragma once

#include "obstra/drawing.hpp"
#include "obstra/graph.hpp"

#include <string>

namespace obstra::io {

// Line-oriented text formats. All parsers throw ErrorKind::parse with a
// line-numbered message on malformed input and ErrorKind::invariant when the
// parsed value violates a domain invariant. Serialization is canonical:
// vertices in id order, edges sorted with u < v, rationals reduced, single
// spaces, one trailing newline.
//
//   graph:   `graph <n> <m>` then m lines `e <u> <v>` (0-based, u < v)
//   drawing: `drawing <n> <m>` then n lines `v <id> <x> <y>` then m edge lines
//   scene:   a drawing block (edges optional), an optional `enclosure <k>`
//            line, then blocks `obstacle <k>` with k lines `<x> <y>`
//   polygon: `polygon <k>` then k lines `<x> <y>`

Graph parse_graph(const std::string& text);
Drawing parse_drawing(const std::string& text);
Scene parse_scene(const std::string& text);
Polygon parse_polygon(const std::string& text);

std::string serialize_graph(const Graph& g);
std::string serialize_drawing(const Drawing& d);
std::string serialize_scene(const Scene& s);
std::string serialize_polygon(const Polygon& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace obstra::io
