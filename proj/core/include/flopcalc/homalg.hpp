#pragma once

// Dimension chasing over exact complexes, the Koszul resolution of the ideal
// of Y+ in X+, and the Ext computations built from them.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flopcalc/cohomology_table.hpp"
#include "flopcalc/integer.hpp"
#include "flopcalc/pbundle.hpp"

namespace flopcalc::homalg {

// ---------------------------------------------------------------------------
// Dimension chase

struct ChaseTerm {
    std::string label;
    std::optional<Integer> dim;  // nullopt = unknown
};

/// An exact complex, listed in order. Zero objects are terms of dimension 0;
/// the ends of a sequence must be written out as explicit zero terms, since
/// only segments with a zero on both sides carry a constraint.
class ChaseSystem {
public:
    explicit ChaseSystem(std::string name = {});

    // Throws InvalidArgument on a repeated label or negative dimension.
    ChaseSystem& add(ChaseTerm term);
    ChaseSystem& known(std::string label, Integer dim);
    ChaseSystem& unknown(std::string label);
    // An anonymous zero object; labels are generated ("0#k").
    ChaseSystem& zero();

    const std::string& name() const noexcept { return name_; }
    const std::vector<ChaseTerm>& terms() const noexcept { return terms_; }
    std::vector<ChaseTerm>& terms() noexcept { return terms_; }

    std::optional<Integer> dim(const std::string& label) const;
    // Replaces the dimension of an existing term. Throws InvalidArgument for an unknown label.
    void set(const std::string& label, std::optional<Integer> dim);

private:
    std::string name_;
    std::vector<ChaseTerm> terms_;
    int zeros_ = 0;
};

enum class RuleOrder { Forward, Reverse };
enum class ChaseRule { FlankedByZeros, AlternatingSum };

std::string to_string(ChaseRule rule);

struct TraceStep {
    std::string system;
    std::string label;
    ChaseRule rule;
    Integer value;
};

struct ChaseResult {
    std::vector<ChaseSystem> systems;        // with every solved term filled in
    std::map<std::string, Integer> values;   // every label with a known dimension
    std::vector<std::string> unsolved;       // sorted
    std::vector<TraceStep> trace;            // rule applications in order

    bool complete() const noexcept { return unsolved.empty(); }
    std::optional<Integer> value(const std::string& label) const;
    // Throws UnderdeterminedError if `label` was not solved.
    Integer require(const std::string& label) const;
};

// Solves a family of exact complexes whose terms share labels: equal labels
// denote the same vector space. Throws InconsistentError when the given
// dimensions contradict exactness.
ChaseResult chase_solve(const std::vector<ChaseSystem>& network, RuleOrder order = RuleOrder::Forward);
ChaseResult chase_solve(const ChaseSystem& system, RuleOrder order = RuleOrder::Forward);

// Long exact sequence 0 -> T_0(0) -> T_1(0) -> T_2(0) -> T_0(1) -> ... -> T_2(top) -> 0
// of a short exact sequence, where term(s, i) gives the i-th group of the s-th object.
template <class TermFn>
ChaseSystem long_exact_sequence(std::string name, int top, TermFn&& term) {
    ChaseSystem sys(std::move(name));
    sys.zero();
    for (int i = 0; i <= top; ++i) {
        for (int s = 0; s < 3; ++s) {
            sys.add(term(s, i));
        }
    }
    sys.zero();
    return sys;
}

// ---------------------------------------------------------------------------
// Spectral sequences

/// E_2 page of a first-quadrant spectral sequence with p, q in [0, bound].
class SpectralPage {
public:
    explicit SpectralPage(int bound);

    int bound() const noexcept { return bound_; }
    void set(int p, int q, const Integer& value);
    Integer at(int p, int q) const;
    const std::map<std::pair<int, int>, Integer>& entries() const noexcept { return entries_; }

    // (p, q) with p != q and a nonzero entry.
    std::vector<std::pair<int, int>> nonzero_off_diagonal() const;
    // Total dimension along each line p + q = i; this is the abutment when the page degenerates.
    CohomologyTable antidiagonal_sums() const;

private:
    int bound_;
    std::map<std::pair<int, int>, Integer> entries_;
};

// E_2^{p,q} = H^p(Y+, Ext^q(O_Y+, O_Y+)) with Ext^q(O_Y+, O_Y+) = Omega^q.
SpectralPage ext_spectral_page_OY(int n);

// Anti-diagonal sums of a page concentrated on p = q; such a page has no room
// for nonzero differentials. Throws DegeneracyUnjustified otherwise.
CohomologyTable abutment_if_diagonal(const SpectralPage& page);

// Ext^*(O_Y+, O_Y+). Throws DegeneracyUnjustified if the page has off-diagonal terms.
CohomologyTable ext_table_OY(int n);

// Ext^*(O_Y+, O_X+) via Serre duality on X+, using omega_X+ restricted to Y+ trivial.
CohomologyTable ext_table_OY_OX(int n);

// ---------------------------------------------------------------------------
// Koszul resolution 0 -> K_n -> ... -> K_1 -> I_Y+ -> 0

struct KoszulTerm {
    int p;
    pbundle::TwistedBundle bundle;  // O_X+(-p) (x) pi^* Lambda^p Theta
    Integer rank;
};

struct KoszulResolution {
    int n;
    std::vector<KoszulTerm> terms;  // p = n down to 1

    const KoszulTerm& term(int p) const;
    Integer alternating_rank_sum() const;   // sum (-1)^{p+1} rank K_p
    Integer alternating_euler_sum() const;  // sum (-1)^{p+1} chi(K_p)
};

KoszulResolution koszul_resolution(int n);

// E_p^* = O(p) (x) pi^* Omega^p, the dual of the Koszul term K_p.
pbundle::TwistedBundle koszul_term_dual(int p, int n);

// ---------------------------------------------------------------------------
// Ext groups against I_Y+

/// Cohomology table where some degrees may be unknown.
class PartialTable {
public:
    explicit PartialTable(int top);

    int top() const noexcept { return top_; }
    void set(int degree, std::optional<Integer> value);
    const std::optional<Integer>& at(int degree) const;

    bool complete() const;
    std::vector<int> unknown_degrees() const;
    // Only the known degrees.
    CohomologyTable known() const;

private:
    int top_;
    std::vector<std::optional<Integer>> dims_;
};

// Restriction: 0 -> E^* (x) I -> E^* -> E^*|_Y+ -> 0.
// Koszul: E^* tensored with the Koszul resolution, split into short exact sequences.
enum class ExtRoute { Restriction, Koszul, Combined };

std::string to_string(ExtRoute route);

struct ExtAgainstIdeal {
    int p = 0;
    int n = 0;
    PartialTable ext{0};  // Ext^i(K_p, I_Y+) = H^i(E_p^* (x) I_Y+)
    ChaseResult chase;
};

ExtAgainstIdeal ext_locally_free_vs_ideal(int p, int n, ExtRoute route = ExtRoute::Combined);
// The unsolved network behind ext_locally_free_vs_ideal.
std::vector<ChaseSystem> ext_against_ideal_systems(int p, int n, ExtRoute route = ExtRoute::Combined);

// H^*(X+, I_Y+) through the same routes (E = O).
struct IdealCohomology {
    int n = 0;
    PartialTable h{0};
    ChaseResult chase;
};

IdealCohomology ideal_cohomology(int n, ExtRoute route = ExtRoute::Combined);
std::vector<ChaseSystem> ideal_cohomology_systems(int n, ExtRoute route = ExtRoute::Combined);

// The chase network for Ext^2(I, I) assembled from 0 -> I -> O_X+ -> O_Y+ -> 0:
// Hom(O_Y+, -), Hom(-, I) and H^* of the sequence. n = 2 only.
std::vector<ChaseSystem> ideal_self_systems(int n = 2);

struct IdealSelfExt {
    Integer ext2;
    ChaseResult chase;
};

IdealSelfExt ext2_ideal_self_chase(int n = 2, RuleOrder order = RuleOrder::Forward);
Integer ext2_ideal_self(int n = 2);

// Same quantity from Hom(-, I) on 0 -> K_2 -> K_1 -> I -> 0, with the
// Ext^i(K_p, I) entries taken from ext_locally_free_vs_ideal. n = 2 only.
IdealSelfExt ext2_ideal_self_koszul(int n = 2);
ChaseSystem ideal_self_koszul_system(int n = 2);

// Label helpers shared with the CLI and reports.
std::string ext_label(const std::string& a, const std::string& b, int i);
std::string h_label(const std::string& sheaf, int i);

}  // namespace flopcalc::homalg
