#pragma once

// JSON views of the domain values. Integers that fit in 64 bits are written as
// JSON numbers; larger ones as decimal strings, so no value is ever rounded.

#include <nlohmann/json.hpp>

#include "flopcalc/bwb.hpp"
#include "flopcalc/cohomology_table.hpp"
#include "flopcalc/flop.hpp"
#include "flopcalc/homalg.hpp"
#include "flopcalc/pbundle.hpp"

namespace flopcalc {

using Json = nlohmann::json;

Json integer_json(const Integer& value);

// {"0": 8, "2": 1}
Json dims_json(const CohomologyTable& table);
// Unknown degrees are null.
Json dims_json(const homalg::PartialTable& table);

Json weight_json(const bwb::LeviWeight& w);
Json bundle_json(const bwb::HomogeneousBundle& b);
Json class_json(const pbundle::XLineBundle& L);
Json image_json(const flop::FMImage& img);
Json matrix_json(const flop::PicMap& m);
Json trace_json(const std::vector<homalg::TraceStep>& trace);
Json koszul_json(const homalg::KoszulResolution& res);

}  // namespace flopcalc
