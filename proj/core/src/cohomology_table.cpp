#include "flopcalc/cohomology_table.hpp"

#include <sstream>

#include "flopcalc/errors.hpp"

namespace flopcalc {

CohomologyTable::CohomologyTable(std::initializer_list<std::pair<const int, Integer>> init) {
    for (const auto& [degree, value] : init) {
        add(degree, value);
    }
}

void CohomologyTable::add(int degree, const Integer& value) {
    if (degree < 0) {
        throw InvalidArgument("cohomology degree must be non-negative, got " + std::to_string(degree));
    }
    if (value < 0) {
        throw InvalidArgument("cohomology dimension must be non-negative, got " + value.str());
    }
    if (value == 0) {
        return;
    }
    dims_[degree] += value;
}

Integer CohomologyTable::operator[](int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? Integer(0) : it->second;
}

int CohomologyTable::max_degree() const noexcept {
    return dims_.empty() ? -1 : dims_.rbegin()->first;
}

Integer CohomologyTable::euler_characteristic() const {
    Integer chi = 0;
    for (const auto& [degree, value] : dims_) {
        if (degree % 2 == 0) {
            chi += value;
        } else {
            chi -= value;
        }
    }
    return chi;
}

CohomologyTable CohomologyTable::reflected(int top) const {
    CohomologyTable out;
    for (const auto& [degree, value] : dims_) {
        out.add(top - degree, value);
    }
    return out;
}

bool CohomologyTable::concentrated_in_degree_zero() const {
    return dims_.empty() || (dims_.size() == 1 && dims_.begin()->first == 0);
}

CohomologyTable& CohomologyTable::operator+=(const CohomologyTable& other) {
    for (const auto& [degree, value] : other.dims_) {
        dims_[degree] += value;
    }
    return *this;
}

CohomologyTable CohomologyTable::scaled(const Integer& factor) const {
    CohomologyTable out;
    for (const auto& [degree, value] : dims_) {
        out.add(degree, value * factor);
    }
    return out;
}

std::string CohomologyTable::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [degree, value] : dims_) {
        if (!first) {
            os << ", ";
        }
        first = false;
        os << degree << ": " << value;
    }
    os << '}';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CohomologyTable& table) {
    return os << table.to_string();
}

}  // namespace flopcalc
