#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "fsb/classify.hpp"
#include "fsb/complexes.hpp"
#include "fsb/formed.hpp"
#include "fsb/genus.hpp"
#include "fsb/groups.hpp"
#include "fsb/ranges.hpp"

namespace fsb {

using json = nlohmann::json;

// Integers are JSON numbers when they fit in int64, decimal strings otherwise.
json to_json(const Int& x);
Int int_from_json(const json& j);

json to_json(const Ring& r);
Ring ring_from_json(const json& j);

json to_json(const Mat& m);  // array of rows
Mat mat_from_json(const json& j, const Ring& r);
json to_json(const Vec& v);
Vec vec_from_json(const json& j);

// {"ring": "Z", "lambda": [[...]], "del": [...]}; also accepts
// {"ring": ..., "x_power": n}.
json to_json(const FormedSpace& a);
FormedSpace space_from_json(const json& j);

json to_json(const FormData& fd);
FormData form_data_from_json(const json& j);

json to_json(const GenusReport& g);
json to_json(const WitnessIso& w);
json to_json(const CycleCertificate& c);
json to_json(const HomologyReport& h);
json to_json(const CountCheck& c);
json to_json(const DegreeRange& r);
json to_json(const StabilityRanges& s);
json to_json(const RangeQuery& q);
// Order, generators and method; elements are left out.
json to_json(const AutGroup& g);
json to_json(const SquareCheck& s);

std::string homology_csv(const HomologyReport& h);
std::string ranges_csv(const std::vector<std::pair<RangeQuery, StabilityRanges>>& rows);

}  // namespace fsb
