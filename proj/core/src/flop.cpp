#include "flopcalc/flop.hpp"

#include "flopcalc/errors.hpp"

namespace flopcalc::flop {

namespace {

void require_side(const XLineBundle& L, Side side, const char* functor) {
    if (L.variety.side() != side) {
        throw RangeError(std::string(functor) + " is defined on side " + pbundle::to_string(side) +
                         ", got a class on side " + pbundle::to_string(L.variety.side()));
    }
}

void require_range(bool ok, const char* functor, int j, int k, int n) {
    if (!ok) {
        throw RangeError(std::string(functor) + " has no known image for (j,k) = (" + std::to_string(j) + "," +
                         std::to_string(k) + ") at n = " + std::to_string(n));
    }
}

}  // namespace

std::array<int, 2> PicMap::apply(int j, int k) const {
    return {matrix[0][0] * j + matrix[0][1] * k, matrix[1][0] * j + matrix[1][1] * k};
}

PicMap PicMap::compose(const PicMap& rhs) const {
    PicMap out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.matrix[r][c] = matrix[r][0] * rhs.matrix[0][c] + matrix[r][1] * rhs.matrix[1][c];
        }
    }
    return out;
}

bool PicMap::is_involution() const { return compose(*this) == PicMap{}; }

std::ostream& operator<<(std::ostream& os, const PicMap& m) {
    return os << "[[" << m.matrix[0][0] << ',' << m.matrix[0][1] << "],[" << m.matrix[1][0] << ','
              << m.matrix[1][1] << "]]";
}

PicMap phi_pullback(int n) {
    if (n < 2) {
        throw InvalidArgument("the model needs n >= 2, got n = " + std::to_string(n));
    }
    // Columns are the images of xi+ = (1,0) and h+ = (0,1).
    return PicMap{{{{1, 1}, {0, -1}}}};
}

XLineBundle transport(const PicMap& map, const XLineBundle& L) {
    const auto [j, k] = map.apply(L.j, L.k);
    return {L.variety.other_side(), j, k};
}

std::string to_string(ImageKind kind) { return kind == ImageKind::Line ? "line" : "ideal_twist"; }

std::ostream& operator<<(std::ostream& os, const FMImage& img) {
    os << to_string(img.kind) << img.bundle;
    return os;
}

FMImage apply_Phi(const XLineBundle& L) {
    require_side(L, Side::X, "Phi");
    const int n = L.variety.n();
    require_range(-n <= L.j && L.j <= 0 && -n + 1 <= L.k && L.k <= 1, "Phi", L.j, L.k, n);
    const ModelVariety plus(n, Side::XPlus);
    if (L.k <= 0) {
        return {ImageKind::Line, XLineBundle(plus, L.j + L.k, -L.k)};
    }
    return {ImageKind::IdealTwist, XLineBundle(plus, L.j + 1, -1)};
}

XLineBundle apply_Phi_prime(const XLineBundle& L) {
    require_side(L, Side::XPlus, "Phi'");
    const int n = L.variety.n();
    const int k = -L.k;
    const int j = L.j - k;
    require_range(-n <= j && j <= 0 && -n + 1 <= k && k <= 0, "Phi'", L.j, L.k, n);
    return {ModelVariety(n, Side::X), j, k};
}

XLineBundle apply_Psi(const XLineBundle& L) {
    require_side(L, Side::X, "Psi");
    const int n = L.variety.n();
    require_range(-n <= L.j && L.j <= 0 && -n <= L.k && L.k <= 0, "Psi", L.j, L.k, n);
    return {ModelVariety(n, Side::XPlus), L.j + L.k, -L.k};
}

std::vector<XLineBundle> enumerate_spanning_class(int n, SpanningClass variant) {
    const ModelVariety x(n, Side::X);
    const int k_lo = variant == SpanningClass::Omega ? -n + 1 : -n;
    const int k_hi = variant == SpanningClass::Omega ? 1 : 0;
    std::vector<XLineBundle> out;
    for (int j = -n; j <= 0; ++j) {
        for (int k = k_lo; k <= k_hi; ++k) {
            out.emplace_back(x, j, k);
        }
    }
    return out;
}

bool serre_compatibility_check(int n) { return serre_compatibility_check(n, phi_pullback(n)); }

bool serre_compatibility_check(int n, const PicMap& map) {
    const ModelVariety x(n, Side::X);
    const ModelVariety plus(n, Side::XPlus);
    const XLineBundle omega_x = pbundle::canonical_class(x);
    const XLineBundle omega_plus = pbundle::canonical_class(plus);
    if (!(transport(map, omega_x) == omega_plus)) {
        return false;
    }
    for (const auto& c : enumerate_spanning_class(n, SpanningClass::OmegaPrime)) {
        const XLineBundle lhs = apply_Psi(c) + omega_plus;
        const XLineBundle rhs = transport(map, c + omega_x);
        if (!(lhs == rhs)) {
            return false;
        }
    }
    return true;
}

}  // namespace flopcalc::flop
