#pragma once

#include <string>

#include "json.hpp"
#include "tiling/complex.hpp"
#include "tiling/excise.hpp"
#include "tiling/finfield.hpp"
#include "tiling/grope.hpp"
#include "tiling/realize.hpp"
#include "tiling/trimat.hpp"

namespace tiling {

using nlohmann::json;

// Throws Error("ParseError") on unreadable or malformed input.
json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const json &j);

// {"m": .., "n": .., "entries": [[..], ..]}
json matrix_to_json(const IncidenceMatrix &M);
IncidenceMatrix matrix_from_json(const json &j);

// {"q": q, "points": [[x,y,z], ..], "lines": [[a,b,c], ..]}; coordinates
// are field element indices.
json config_to_json(const Configuration &C);
Configuration config_from_json(const json &j);

json stats_to_json(const SearchStats &s);
json verdict_to_json(const Verdict &v);

// 1-based ids throughout: edges [[t,h], ..], faces [[+e, -e, +e], ..] where
// the sign gives the direction of traversal. Labels and the marked face are
// optional.
json complex_to_json(const DeltaComplex &K);
json complex_to_json(const MarkedComplex &MC);
DeltaComplex complex_from_json(const json &j);
MarkedComplex marked_from_json(const json &j);

json grope_to_json(const Grope &G);
// Complex JSON plus "boundary": [v, ..] (1-based vertices).
json surface_to_json(const BoundedSurface &S);
BoundedSurface surface_from_json(const json &j);
Grope grope_from_json(const json &j);

json group_to_json(const GroupSpec &G);
// Accepts a string shortcut ("R*", "F4*", ..) or an object.
GroupSpec group_from_json(const json &j);

// {"modulus": n, "values": {"<edge>": r, ..}}
json cochain_to_json(const Cochain &U, long n);
Cochain cochain_from_json(const json &j);

json violation_to_json(const Violation &v);
json report_to_json(const ValidationReport &R);

} // namespace tiling
