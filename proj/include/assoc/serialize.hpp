#pragma once

// JSON forms of the library's values. Infinite extended integers are the
// strings "inf" and "-inf".

#include "json.hpp"

#include "assoc/decision.hpp"
#include "assoc/digraph.hpp"
#include "assoc/ext_int.hpp"
#include "assoc/pair_params.hpp"
#include "assoc/spectrum.hpp"
#include "assoc/terms.hpp"

namespace assoc {

using nlohmann::json;

void to_json(json& j, const ExtInt& v);
void from_json(const json& j, ExtInt& v);

void to_json(json& j, const GraphParams& p);
void from_json(const json& j, GraphParams& p);

void to_json(json& j, const PairParams& p);
void from_json(const json& j, PairParams& p);

/// {"n": n, "parent": [0, p2, ..., pn]}; the reader also accepts the root
/// entry omitted.
void to_json(json& j, const DfsTree& t);
void from_json(const json& j, DfsTree& t);

void to_json(json& j, const ConditionResult& c);
void to_json(json& j, const Decision& d);

void to_json(json& j, const SpectrumReport& r);
void from_json(const json& j, SpectrumReport& r);

void to_json(json& j, const SpectrumClass& c);

}  // namespace assoc
