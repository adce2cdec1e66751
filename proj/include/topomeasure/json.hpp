#pragma once

#include "topomeasure/demo.hpp"
#include "topomeasure/partition.hpp"

#include <json.hpp>

namespace topomeasure {

using Json = nlohmann::ordered_json;

// Values serialize as strings: "n", "p/q" in lowest terms, or "inf".
Json to_json(const Value& v);
Json to_json(const FiniteSpace& sp, const Witness& w);
Json to_json(const FiniteSpace& sp, const Check& c);
Json to_json(const FiniteSpace& sp, const Report& r);
Json to_json(const FiniteSpace& sp, const CoverWitness& c);
Json to_json(const FiniteSpace& sp, const SolidPartition& p);
Json to_json(const FiniteSpace& sp, const GenusReport& g);
Json to_json(const DemoResult& d);

}  // namespace topomeasure
