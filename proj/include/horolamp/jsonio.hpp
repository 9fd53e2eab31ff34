// Canonical JSON forms for elements and vertices.
//
// Emission is hand-rolled so that output is byte-stable: object keys appear
// in a pinned order, map keys in numeric order, no whitespace.  These strings
// double as canonical vertex keys in graphs.  Parsing accepts anything
// structurally equivalent; integer values must fit in 64 bits on input
// (output is arbitrary precision).
#pragma once

#include <string>

#include "horolamp/group.hpp"
#include "horolamp/tree.hpp"

namespace horolamp {

std::string json_escape(const std::string& s);

// {"laurent":{"<j>":c,...},"poles":{"<i>":{"<j>":c,...},...}}
std::string poly_json(const Poly& f);
// {"f":<poly>,"h":[h0,...]}
std::string elem_body_json(const GroupElem& g);
// {"ring":"...","n":...,"f":<poly>,"h":[...]}
std::string elem_json(const Group& G, const GroupElem& g);
// {"coords":[{"labels":[...],"height":...},...]} in order infinity, 0, 1, ...
std::string vertex_json(const HoroVertex& v);

// All parsers throw ParseError on malformed input.
Poly parse_poly_json(const std::string& text);
// Accepts the body form or the full form; when ring/n are present they must
// match the group.
GroupElem parse_elem_json(const Group& G, const std::string& text);
HoroVertex parse_vertex_json(const std::string& text);

}  // namespace horolamp
