#pragma once

#include <map>
#include <ostream>
#include <string>

#include "flopcalc/integer.hpp"

namespace flopcalc {

/// Exact dimensions h^i indexed by cohomological degree.
///
/// Only strictly positive dimensions are stored, so two tables compare equal
/// exactly when they agree in every degree.
class CohomologyTable {
public:
    using Storage = std::map<int, Integer>;

    CohomologyTable() = default;
    CohomologyTable(std::initializer_list<std::pair<const int, Integer>> init);

    // Adds `value` to degree `degree`. Negative degrees or values throw.
    void add(int degree, const Integer& value);

    Integer operator[](int degree) const;
    const Storage& dims() const noexcept { return dims_; }

    bool empty() const noexcept { return dims_.empty(); }
    // -1 for the empty table.
    int max_degree() const noexcept;

    // Alternating sum of the dimensions.
    Integer euler_characteristic() const;

    // Degree i moves to top - i.
    CohomologyTable reflected(int top) const;

    // Degrees > 0 all vanish.
    bool concentrated_in_degree_zero() const;

    CohomologyTable& operator+=(const CohomologyTable& other);
    friend CohomologyTable operator+(CohomologyTable lhs, const CohomologyTable& rhs) {
        lhs += rhs;
        return lhs;
    }
    CohomologyTable scaled(const Integer& factor) const;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

    // "{0: 8, 2: 1}" style rendering.
    std::string to_string() const;

private:
    Storage dims_;
};

std::ostream& operator<<(std::ostream& os, const CohomologyTable& table);

}  // namespace flopcalc
