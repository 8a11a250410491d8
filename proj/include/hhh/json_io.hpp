#pragma once

// JSON encodings shared by the command-line tool and the regression fixtures.

#include <json.hpp>

#include "hhh/hhh.hpp"
#include "hhh/oracle.hpp"

namespace hhh {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "stable-hhh/1";

json to_json(const TriDegree& d);
json to_json(const Window& w);
/// [{"coeff": "p/q", "exps": {"x1": e, ...}}, ...] in decreasing term order.
json to_json(const Poly& p);
Poly poly_from_json(const RegistryPtr& reg, const json& j);

json to_json(const Registry& reg);
/// {"vars", "generators", "groebner", "shift"}.
json to_json(const Quotient& q);
json to_json(const KoszulFactorization& K);
json to_json(const std::vector<MoveRecord>& trace);
/// [{"q", "t", "a", "dim"}, ...] in increasing degree.
json to_json(const DimTable& table);
json to_json(const PoincareSeries& s);
json to_json(const StableHomologyPresentation& p);
json to_json(const CompareReport& r);
json to_json(const RegularityVerdict& v);

}  // namespace hhh
