#pragma once

#include <string>
#include <string_view>

#include "happy/graph.hpp"
#include "happy/reductions.hpp"

namespace happy {

// Line-oriented text format; '#' starts a comment, blank lines are ignored.
//
//   p happy <n> <m> <k>
//   mode strict | mode soft <p>/<q> | mode hard <q>     (optional)
//   v <id> <color>
//   e <u> <v> [weight]
//
// Throws ParseError carrying the offending line number.
HappyInstance parse_instance(std::string_view text);

// Canonical form: header, mode line, vertices ascending, edges sorted with
// u < v. Weight 1 is omitted. LF line endings.
std::string write_instance(const HappyInstance& instance);

//   p mwc <n> <m> <t>
//   t <id>
//   e <u> <v>
MultiwayCutInstance parse_multiway_cut(std::string_view text);
std::string write_multiway_cut(const MultiwayCutInstance& instance);

}  // namespace happy
