#include "flopcalc/pbundle.hpp"

#include "flopcalc/errors.hpp"

namespace flopcalc::pbundle {

namespace {

void require_same_variety(const ModelVariety& a, const ModelVariety& b) {
    if (!(a == b)) {
        throw VarietyMismatch("classes live on different varieties (n=" + std::to_string(a.n()) + " " +
                              to_string(a.side()) + " vs n=" + std::to_string(b.n()) + " " +
                              to_string(b.side()) + ")");
    }
}

}  // namespace

std::string to_string(Side side) { return side == Side::X ? "x" : "xplus"; }

ModelVariety::ModelVariety(int n, Side side) : n_(n), side_(side) {
    if (n < 2) {
        throw InvalidArgument("the model needs n >= 2, got n = " + std::to_string(n));
    }
}

ModelVariety ModelVariety::other_side() const {
    return ModelVariety(n_, side_ == Side::X ? Side::XPlus : Side::X);
}

XLineBundle XLineBundle::operator+(const XLineBundle& other) const {
    require_same_variety(variety, other.variety);
    return {variety, j + other.j, k + other.k};
}

XLineBundle XLineBundle::operator-(const XLineBundle& other) const {
    require_same_variety(variety, other.variety);
    return {variety, j - other.j, k - other.k};
}

std::ostream& operator<<(std::ostream& os, const XLineBundle& L) {
    return os << '(' << L.j << ',' << L.k << ")@" << to_string(L.variety.side()) << "[n=" << L.variety.n()
              << ']';
}

XLineBundle canonical_class(const ModelVariety& v) { return {v, -v.n() - 1, 0}; }

TwistedBundle::TwistedBundle(ModelVariety v, int j_, bwb::HomogeneousBundle b)
    : variety(v), j(j_), base(std::move(b)) {
    if (base.n() != variety.n()) {
        throw InvalidArgument("base bundle lives on P^" + std::to_string(base.n()) + ", expected P^" +
                              std::to_string(variety.n()));
    }
}

TwistedBundle::TwistedBundle(const XLineBundle& L)
    : TwistedBundle(L.variety, L.j,
                    bwb::HomogeneousBundle(L.variety.n(), {bwb::line_bundle(L.variety.n(), L.k)})) {}

Pushforward pushforward(const XLineBundle& L) {
    const int n = L.variety.n();
    if (L.j >= 0) {
        return Direct{bwb::twist(bwb::sym_power_decompose(L.j, n), L.k), L.k};
    }
    if (L.j >= -n) {
        return Zero{};
    }
    return Dual{canonical_class(L.variety) - L, 2 * n};
}

CohomologyTable cohomology_X(const XLineBundle& L) {
    const auto pf = pushforward(L);
    if (const auto* d = std::get_if<Direct>(&pf)) {
        return bwb::cohomology_sum(d->bundle);
    }
    if (std::holds_alternative<Zero>(pf)) {
        return {};
    }
    const auto& du = std::get<Dual>(pf);
    return cohomology_X(du.dual).reflected(du.shift);
}

CohomologyTable cohomology(const TwistedBundle& E) {
    const int n = E.variety.n();
    if (E.j >= 0) {
        return bwb::cohomology_sum(bwb::tensor(bwb::sym_power_decompose(E.j, n), E.base));
    }
    if (E.j >= -n) {
        return {};
    }
    // omega_X (x) E^* = O_X(-n-1-j) (x) pi^* V^*
    const TwistedBundle serre(E.variety, -n - 1 - E.j, bwb::dual(E.base));
    return cohomology(serre).reflected(2 * n);
}

CohomologyTable hom_dims(const XLineBundle& a, const XLineBundle& b) { return cohomology_X(b - a); }

Integer euler_char(const XLineBundle& L) { return cohomology_X(L).euler_characteristic(); }

Integer euler_char(const TwistedBundle& E) { return cohomology(E).euler_characteristic(); }

bwb::HomogeneousBundle restrict_to_section(const TwistedBundle& E) { return E.base; }

}  // namespace flopcalc::pbundle
