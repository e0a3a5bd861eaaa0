#pragma once

#include "flopcalc/cohomology_table.hpp"
#include "oracle/cech.hpp"

namespace flopcalc::testing {

inline CohomologyTable table_of(const cech::Dims& h) {
    CohomologyTable t;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] != 0) {
            t.add(static_cast<int>(i), Integer(h[i]));
        }
    }
    return t;
}

}  // namespace flopcalc::testing
