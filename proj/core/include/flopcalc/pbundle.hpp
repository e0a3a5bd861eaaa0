#pragma once

// Line bundles on X = P(O + Theta) over M = P^n, dim X = 2n.
//
// Classes are written (j, k) = j*xi + k*h with xi = c1(O_X(1)) for the
// Grothendieck tautological bundle and h = c1(pi^* O_M(1)). Then
//   pi_* O_X(j)   = Sym^j(O + Theta)  for j >= 0,
//   R pi_* O_X(j) = 0                 for -n <= j <= -1,
//   omega_X       = O_X(-n-1).
// The flopped side X+ is again such a projective bundle, so both sides share
// every cohomology computation; the side tag only guards against mixing them.

#include <ostream>
#include <string>
#include <variant>

#include "flopcalc/bwb.hpp"
#include "flopcalc/cohomology_table.hpp"

namespace flopcalc::pbundle {

enum class Side { X, XPlus };

std::string to_string(Side side);

class ModelVariety {
public:
    // Throws InvalidArgument for n < 2.
    ModelVariety(int n, Side side = Side::X);

    int n() const noexcept { return n_; }
    Side side() const noexcept { return side_; }
    int dimension() const noexcept { return 2 * n_; }
    ModelVariety other_side() const;

    friend bool operator==(const ModelVariety&, const ModelVariety&) = default;

private:
    int n_;
    Side side_;
};

struct XLineBundle {
    ModelVariety variety;
    int j = 0;
    int k = 0;

    XLineBundle(ModelVariety v, int j_, int k_) : variety(v), j(j_), k(k_) {}

    XLineBundle operator+(const XLineBundle& other) const;
    XLineBundle operator-(const XLineBundle& other) const;
    XLineBundle operator-() const { return {variety, -j, -k}; }

    friend bool operator==(const XLineBundle&, const XLineBundle&) = default;
};

std::ostream& operator<<(std::ostream& os, const XLineBundle& L);

XLineBundle canonical_class(const ModelVariety& v);

/// O_X(j) (x) pi^* V for a homogeneous bundle V on M.
struct TwistedBundle {
    ModelVariety variety;
    int j = 0;
    bwb::HomogeneousBundle base;

    TwistedBundle(ModelVariety v, int j_, bwb::HomogeneousBundle b);
    explicit TwistedBundle(const XLineBundle& L);
};

// Pushforward outcomes.
struct Direct {
    bwb::HomogeneousBundle bundle;  // pi_* of the class, already twisted
    int twist = 0;                  // the O_M(m) applied to Sym^j(O + Theta)
};
struct Zero {};
struct Dual {
    XLineBundle dual;  // omega_X - L
    int shift = 0;     // degree i of L corresponds to degree shift - i of dual
};
using Pushforward = std::variant<Direct, Zero, Dual>;

Pushforward pushforward(const XLineBundle& L);

CohomologyTable cohomology_X(const XLineBundle& L);

// Same three cases as `pushforward`, with pi^* V in place of pi^* O(k).
CohomologyTable cohomology(const TwistedBundle& E);

// Hom^i(a, b) = H^i(b - a). Throws VarietyMismatch across sides.
CohomologyTable hom_dims(const XLineBundle& a, const XLineBundle& b);

Integer euler_char(const XLineBundle& L);
Integer euler_char(const TwistedBundle& E);

// The section Y (resp. Y+) has O_X(1)|_Y trivial, so E restricts to V.
bwb::HomogeneousBundle restrict_to_section(const TwistedBundle& E);

}  // namespace flopcalc::pbundle
