#pragma once

#include <json.hpp>

#include "w22/structure.hpp"
#include "w22/verify.hpp"

// JSON renderings of engine results. Object keys are sorted, so equal
// inputs give byte-identical documents.

namespace w22 {

using Json = nlohmann::json;

Json to_json(const GeneratorCombination& x);
Json to_json(const UEAElement& x);
Json to_json(const ModuleVector& v);
Json to_json(const Truncation& t);
Json to_json(const TruncationReport& r);
Json to_json(const DescentMeasure& m);
Json to_json(const DescentResult& r);
Json to_json(const std::vector<SeriesLayer>& layers);
Json to_json(const Decomposition& d);
Json to_json(const ClosureResult& c);
Json to_json(const SimplicityVerdict& v);
Json to_json(const CheckResult& r);

/// List of vectors with their count.
Json basis_json(const std::vector<ModuleVector>& basis);

}  // namespace w22
