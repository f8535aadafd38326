#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tropnet/hive.hpp"
#include "tropnet/multipath.hpp"
#include "tropnet/spectra.hpp"

namespace tropnet {

using Json = nlohmann::ordered_json;

// Rationals serialize as "p" or "p/q" strings, -inf as "-inf"; floats never
// appear in core files.
Json network_to_json(const PlanarNetwork& net);
PlanarNetwork network_from_json(const Json& j);  // validates on load

Json weighting_to_json(const Weighting& w);
Weighting weighting_from_json(const Json& j);

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json multipath_to_json(const Multipath& mp);
Json gd_path_to_json(const GammaDeltaPath& p);

Json matrix_to_json(const SymmetricMatrix& m);
SymmetricMatrix matrix_from_json(const Json& j);

// Comma-separated rationals ("1,0" or "3/2,-1,-2").
std::vector<Rat> rats_from_csv(const std::string& csv);

enum class RenderFormat { SVG, DOT };

// Deterministic drawing: horizontal lines by height, straight slants, edge
// weights as labels, an optional multipath stroked distinctly. DOT output
// keeps the combinatorics only.
std::string render(const PlanarNetwork& net, const Weighting* w,
                   const Multipath* highlight, RenderFormat format);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tropnet
