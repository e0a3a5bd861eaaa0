#include "flopcalc/serialize.hpp"

#include <cstdint>
#include <limits>

namespace flopcalc {

Json integer_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

Json dims_json(const CohomologyTable& table) {
    Json out = Json::object();
    for (const auto& [degree, value] : table.dims()) {
        out[std::to_string(degree)] = integer_json(value);
    }
    return out;
}

Json dims_json(const homalg::PartialTable& table) {
    Json out = Json::object();
    for (int i = 0; i <= table.top(); ++i) {
        const auto& v = table.at(i);
        out[std::to_string(i)] = v ? integer_json(*v) : Json(nullptr);
    }
    return out;
}

Json weight_json(const bwb::LeviWeight& w) {
    return Json{{"lambda", w.lambda()}, {"t", w.t()}, {"literal", w.to_string()}};
}

Json bundle_json(const bwb::HomogeneousBundle& b) {
    Json summands = Json::array();
    for (const auto& w : b.summands()) {
        summands.push_back(w.to_string());
    }
    return Json{{"n", b.n()}, {"summands", summands}};
}

Json class_json(const pbundle::XLineBundle& L) {
    return Json{{"n", L.variety.n()}, {"side", pbundle::to_string(L.variety.side())}, {"j", L.j}, {"k", L.k}};
}

Json image_json(const flop::FMImage& img) {
    return Json{{"tag", flop::to_string(img.kind)}, {"j", img.bundle.j}, {"k", img.bundle.k}};
}

Json matrix_json(const flop::PicMap& m) {
    return Json::array({Json::array({m.matrix[0][0], m.matrix[0][1]}), Json::array({m.matrix[1][0], m.matrix[1][1]})});
}

Json trace_json(const std::vector<homalg::TraceStep>& trace) {
    Json out = Json::array();
    for (const auto& step : trace) {
        out.push_back(Json{{"system", step.system},
                           {"label", step.label},
                           {"rule", homalg::to_string(step.rule)},
                           {"value", integer_json(step.value)}});
    }
    return out;
}

Json koszul_json(const homalg::KoszulResolution& res) {
    Json terms = Json::array();
    for (const auto& t : res.terms) {
        Json base = Json::array();
        for (const auto& w : t.bundle.base.summands()) {
            base.push_back(w.to_string());
        }
        terms.push_back(Json{{"p", t.p},
                             {"j", t.bundle.j},
                             {"base", base},
                             {"rank", integer_json(t.rank)},
                             {"euler_char", integer_json(pbundle::euler_char(t.bundle))}});
    }
    return Json{{"n", res.n},
                {"terms", terms},
                {"alternating_rank_sum", integer_json(res.alternating_rank_sum())},
                {"alternating_euler_sum", integer_json(res.alternating_euler_sum())}};
}

}  // namespace flopcalc
