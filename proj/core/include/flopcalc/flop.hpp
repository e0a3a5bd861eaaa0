#pragma once

// The flop X - - > X+ on Picard lattices and the functors Phi, Phi', Psi on
// the line-bundle classes where their images are known.

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "flopcalc/pbundle.hpp"

namespace flopcalc::flop {

using pbundle::ModelVariety;
using pbundle::Side;
using pbundle::XLineBundle;

/// 2x2 integer matrix acting on (j, k) column vectors.
///
/// The flop's pullback is an involution; arbitrary matrices are representable
/// so that checks can be fed deliberately wrong maps.
struct PicMap {
    std::array<std::array<int, 2>, 2> matrix{{{1, 0}, {0, 1}}};

    std::array<int, 2> apply(int j, int k) const;
    PicMap compose(const PicMap& rhs) const;  // this * rhs
    bool is_involution() const;

    friend bool operator==(const PicMap&, const PicMap&) = default;
};

std::ostream& operator<<(std::ostream& os, const PicMap& m);

// phi^* : Pic(X+) -> Pic(X), xi+ -> xi, h+ -> xi - h.
PicMap phi_pullback(int n);

// Transports a class across the flop with `map`, landing on the other side.
XLineBundle transport(const PicMap& map, const XLineBundle& L);

enum class ImageKind { Line, IdealTwist };

/// Image of a line bundle: either a line bundle, or L (x) I_{Y+}.
struct FMImage {
    ImageKind kind = ImageKind::Line;
    XLineBundle bundle;

    friend bool operator==(const FMImage&, const FMImage&) = default;
};

std::string to_string(ImageKind kind);
std::ostream& operator<<(std::ostream& os, const FMImage& img);

// Domain: side X, -n <= j <= 0, -n+1 <= k <= 1.
FMImage apply_Phi(const XLineBundle& L);

// Domain: side X+, class (j+k, -k) with -n <= j <= 0, -n+1 <= k <= 0.
XLineBundle apply_Phi_prime(const XLineBundle& L);

// Domain: side X, -n <= j <= 0, -n <= k <= 0.
XLineBundle apply_Psi(const XLineBundle& L);

enum class SpanningClass { Omega, OmegaPrime };

// Lexicographic in (j, k).
std::vector<XLineBundle> enumerate_spanning_class(int n, SpanningClass variant);

bool serre_compatibility_check(int n);
bool serre_compatibility_check(int n, const PicMap& map);

}  // namespace flopcalc::flop
