#pragma once

// Borel-Weil-Bott on projective space.
//
// An irreducible homogeneous bundle on P^n = GL(n+1)/P is labelled by a weight
// of the Levi factor GL(n) x GL(1): a non-increasing vector `lambda` acting on
// the tautological quotient Q (rank n) and an integer `t` acting on the
// tautological line O(-1). Under this labelling
//
//     O(1)      = (0,...,0 | -1)
//     S_lambda Q = (lambda | 0)
//     Theta     = Q(1) = (1,0,...,0 | -1)
//     Omega^1   = Q^*(-1) = (0,...,0,-1 | 1)
//
// Shifting every entry of (lambda, t) by the same constant does not change the
// bundle; equality of weights compares the normalized form.

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "flopcalc/cohomology_table.hpp"
#include "flopcalc/integer.hpp"

namespace flopcalc::bwb {

class LeviWeight {
public:
    // Throws InvalidArgument unless lambda is non-increasing and non-empty.
    LeviWeight(std::vector<int> lambda, int t);

    int n() const noexcept { return static_cast<int>(lambda_.size()); }
    const std::vector<int>& lambda() const noexcept { return lambda_; }
    int t() const noexcept { return t_; }

    // Full GL(n+1) weight (lambda_1, ..., lambda_n, t).
    std::vector<long long> alpha() const;

    // Representative with lambda_n = 0.
    LeviWeight normalized() const;

    // Rank of the bundle, i.e. the dimension of the GL(n) representation.
    Integer rank() const;

    // Same representative, entry by entry.
    bool same_representation(const LeviWeight& other) const noexcept {
        return lambda_ == other.lambda_ && t_ == other.t_;
    }

    friend bool operator==(const LeviWeight& a, const LeviWeight& b);
    friend std::strong_ordering operator<=>(const LeviWeight& a, const LeviWeight& b);

    // "l1,...,ln|t"
    std::string to_string() const;

private:
    std::vector<int> lambda_;
    int t_;
};

std::ostream& operator<<(std::ostream& os, const LeviWeight& w);

// Parses the literal "l1,l2,...,ln|t". Throws InvalidArgument naming the bad token.
LeviWeight parse_weight(std::string_view text);

/// Formal direct sum of irreducible homogeneous bundles on a fixed P^n.
class HomogeneousBundle {
public:
    explicit HomogeneousBundle(int n);
    HomogeneousBundle(int n, std::vector<LeviWeight> summands);

    int n() const noexcept { return n_; }
    const std::vector<LeviWeight>& summands() const noexcept { return summands_; }
    bool empty() const noexcept { return summands_.empty(); }

    void add(const LeviWeight& w);
    void add(const HomogeneousBundle& other);

    Integer rank() const;

    // Summands sorted in normalized form, for multiset comparison.
    std::vector<LeviWeight> sorted_summands() const;

    friend bool operator==(const HomogeneousBundle& a, const HomogeneousBundle& b) {
        return a.n_ == b.n_ && a.sorted_summands() == b.sorted_summands();
    }

private:
    int n_;
    std::vector<LeviWeight> summands_;
};

// prod_{i<j} (mu_i - mu_j + j - i) / (j - i), evaluated exactly.
Integer weyl_dimension(const std::vector<long long>& mu);

CohomologyTable bott_cohomology(const LeviWeight& w);
CohomologyTable cohomology_sum(const HomogeneousBundle& b);

// Tensor with O(m).
LeviWeight twist(const LeviWeight& w, int m);
HomogeneousBundle twist(const HomogeneousBundle& b, int m);

LeviWeight dual(const LeviWeight& w);
HomogeneousBundle dual(const HomogeneousBundle& b);

// w^* (x) omega_{P^n}.
LeviWeight serre_dual(const LeviWeight& w);

// Sym^l(O + Theta) = sum_{a=0}^{l} Sym^a Theta.
HomogeneousBundle sym_power_decompose(int l, int n);

// Lambda^p Theta, 0 <= p <= n.
LeviWeight exterior_power_theta(int p, int n);

// Omega^p = Lambda^{n-p} Theta (x) O(-n-1), 0 <= p <= n.
LeviWeight omega(int p, int n);

LeviWeight line_bundle(int n, int degree);
LeviWeight tangent_bundle(int n);

// Decomposition of the tensor product into irreducibles.
HomogeneousBundle tensor(const LeviWeight& a, const LeviWeight& b);
HomogeneousBundle tensor(const HomogeneousBundle& a, const HomogeneousBundle& b);

// Weights (with multiplicity) of the GL(n) representation with highest weight
// `lambda`, listed once per semistandard tableau.
std::vector<std::vector<int>> gl_weights(const std::vector<int>& lambda);

}  // namespace flopcalc::bwb
