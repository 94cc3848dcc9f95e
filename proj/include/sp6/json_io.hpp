#pragma once

// JSON encoding of the domain types and parsing of the file-based inputs.
// Conventions: exact values serialize as reduced fraction strings, weights as
// integer triples, tables in descending lexicographic order; object keys come
// out sorted, so identical data yields byte-identical text.

#include <string>
#include <vector>

#include "json.hpp"
#include "sp6/lfunc.hpp"
#include "sp6/matlie.hpp"
#include "sp6/packets.hpp"
#include "sp6/rational.hpp"
#include "sp6/rootsys.hpp"
#include "sp6/uchar.hpp"
#include "sp6/wedge.hpp"

namespace sp6 {

nlohmann::json weight_to_json(const Weight& w);
nlohmann::json gauss_to_json(const GaussRat& g);  // {"re":"p/q","im":"p/q"}
nlohmann::json matrix_to_json(const GaussRatMatrix& m);  // row-major array
nlohmann::json decomp_to_json(const DecompTable& table);
nlohmann::json wedge_to_json(const WedgeVector& v);
nlohmann::json descriptor_to_json(const DiscreteSeriesDescriptor& d);
nlohmann::json gamma_list_to_json(const GammaFactorList& factors);

/// Symbolic label of the idx-th noncompact positive root ("2e1" … "e2+e3"),
/// or its negative for side < 0 ("-2e1" … "-e2-e3").
std::string root_label(int side, int idx);

/// Parses {"a,b,c"} triples like "2,1,-3" (used by --lambda/--target flags).
Weight parse_weight(const std::string& text);

/// {"prime":2,"chi":[{"value":"1","label":{"m":1,"r":0}}, ×4]}; a value is a
/// fraction string (exact) or a number / [re,im] pair (float).  The label is
/// optional and defaults to unramified.  Throws std::invalid_argument on
/// schema violations.
SatakeData satake_from_json(const nlohmann::json& j);

/// Accepts either one SatakeData object or an array of them.
std::vector<SatakeData> satake_list_from_json(const nlohmann::json& j);

/// {"h":[h0,…,h6],"h3plus":a,"h3minus":b}; validated on construction.
HodgeNumbers hodge_from_json(const nlohmann::json& j);

}  // namespace sp6
