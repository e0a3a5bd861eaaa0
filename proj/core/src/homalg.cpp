#include "flopcalc/homalg.hpp"

#include <stdexcept>

#include "flopcalc/bwb.hpp"
#include "flopcalc/errors.hpp"

namespace flopcalc::homalg {

namespace {

using pbundle::ModelVariety;
using pbundle::Side;
using pbundle::TwistedBundle;

void require_n(int n) {
    if (n < 2) {
        throw InvalidArgument("the model needs n >= 2, got n = " + std::to_string(n));
    }
}

void require_n_two(int n, const char* what) {
    if (n != 2) {
        throw RangeError(std::string(what) + " is only assembled for n = 2, got n = " + std::to_string(n));
    }
}

ChaseTerm term_from(const std::string& label, const std::optional<Integer>& value) { return {label, value}; }

ChaseTerm known_term(const std::string& label, const Integer& value) { return {label, value}; }

ChaseTerm unknown_term(const std::string& label) { return {label, std::nullopt}; }

struct Names {
    std::string bundle;      // E
    std::string with_ideal;  // E (x) I
    std::string restricted;  // E|Y+
    std::string koszul;      // E (x) K_q prefix
    std::string syzygy;      // E (x) Z_q prefix
};

// Exact sequences constraining H^*(E (x) I_Y+) for a bundle E on X+.
std::vector<ChaseSystem> with_ideal_network(const TwistedBundle& E, const Names& names, ExtRoute route) {
    const int n = E.variety.n();
    const int top = 2 * n;
    std::vector<ChaseSystem> network;

    if (route != ExtRoute::Koszul) {
        const CohomologyTable hE = pbundle::cohomology(E);
        const CohomologyTable hY = bwb::cohomology_sum(pbundle::restrict_to_section(E));
        network.push_back(long_exact_sequence("restriction " + names.bundle, top, [&](int s, int i) {
            switch (s) {
                case 0: return unknown_term(h_label(names.with_ideal, i));
                case 1: return known_term(h_label(names.bundle, i), hE[i]);
                default: return known_term(h_label(names.restricted, i), hY[i]);
            }
        }));
    }

    if (route != ExtRoute::Restriction) {
        const KoszulResolution res = koszul_resolution(n);
        auto product_label = [&](int q, int i) {
            return h_label(names.koszul + std::to_string(q), i);
        };
        auto syzygy_label = [&](int q, int i) {
            if (q == 1) {
                return h_label(names.with_ideal, i);
            }
            if (q == n) {
                return product_label(n, i);
            }
            return h_label(names.syzygy + std::to_string(q), i);
        };
        // 0 -> Z_{q+1} -> E (x) K_q -> Z_q -> 0 with Z_1 = E (x) I and Z_n = E (x) K_n.
        for (int q = 1; q < n; ++q) {
            const KoszulTerm& kq = res.term(q);
            const TwistedBundle product(E.variety, E.j + kq.bundle.j, bwb::tensor(E.base, kq.bundle.base));
            const CohomologyTable hK = pbundle::cohomology(product);
            std::optional<CohomologyTable> hNext;
            if (q + 1 == n) {
                const KoszulTerm& kn = res.term(n);
                hNext = pbundle::cohomology(
                    TwistedBundle(E.variety, E.j + kn.bundle.j, bwb::tensor(E.base, kn.bundle.base)));
            }
            network.push_back(long_exact_sequence(
                "koszul " + names.bundle + " step " + std::to_string(q), top, [&](int s, int i) {
                    switch (s) {
                        case 0:
                            return hNext ? known_term(syzygy_label(q + 1, i), (*hNext)[i])
                                         : unknown_term(syzygy_label(q + 1, i));
                        case 1: return known_term(product_label(q, i), hK[i]);
                        default: return unknown_term(syzygy_label(q, i));
                    }
                }));
        }
    }

    return network;
}

std::pair<PartialTable, ChaseResult> cohomology_with_ideal(const TwistedBundle& E, const Names& names,
                                                          ExtRoute route) {
    const int top = 2 * E.variety.n();
    ChaseResult chase = chase_solve(with_ideal_network(E, names, route));
    PartialTable table(top);
    for (int i = 0; i <= top; ++i) {
        table.set(i, chase.value(h_label(names.with_ideal, i)));
    }
    return {std::move(table), std::move(chase)};
}

Names koszul_dual_names(int p) {
    const std::string k = "K" + std::to_string(p) + "^v";
    return {k, k + "(x)I_Y+", k + "|Y+", k + "(x)K", k + "(x)Z"};
}

const Names structure_names{"O_X+", "I_Y+", "O_Y+", "K", "Z"};

TwistedBundle structure_sheaf(int n) {
    require_n(n);
    return TwistedBundle(pbundle::XLineBundle(ModelVariety(n, Side::XPlus), 0, 0));
}

}  // namespace

std::string ext_label(const std::string& a, const std::string& b, int i) {
    return "Ext^" + std::to_string(i) + "(" + a + "," + b + ")";
}

std::string h_label(const std::string& sheaf, int i) { return "H^" + std::to_string(i) + "(" + sheaf + ")"; }

std::string to_string(ExtRoute route) {
    switch (route) {
        case ExtRoute::Restriction: return "restriction";
        case ExtRoute::Koszul: return "koszul";
        default: return "combined";
    }
}

// ---------------------------------------------------------------------------

SpectralPage::SpectralPage(int bound) : bound_(bound) {
    if (bound < 0) {
        throw InvalidArgument("spectral page bound must be non-negative");
    }
}

void SpectralPage::set(int p, int q, const Integer& value) {
    if (p < 0 || q < 0 || p > bound_ || q > bound_) {
        throw InvalidArgument("E_2 index (" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
    }
    if (value < 0) {
        throw InvalidArgument("E_2 entries are dimensions and must be non-negative");
    }
    if (value == 0) {
        entries_.erase({p, q});
    } else {
        entries_[{p, q}] = value;
    }
}

Integer SpectralPage::at(int p, int q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? Integer(0) : it->second;
}

std::vector<std::pair<int, int>> SpectralPage::nonzero_off_diagonal() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [pq, value] : entries_) {
        if (pq.first != pq.second) {
            out.push_back(pq);
        }
    }
    return out;
}

CohomologyTable SpectralPage::antidiagonal_sums() const {
    CohomologyTable out;
    for (const auto& [pq, value] : entries_) {
        out.add(pq.first + pq.second, value);
    }
    return out;
}

SpectralPage ext_spectral_page_OY(int n) {
    require_n(n);
    SpectralPage page(n);
    for (int q = 0; q <= n; ++q) {
        const CohomologyTable h = bwb::bott_cohomology(bwb::omega(q, n));
        for (const auto& [p, value] : h.dims()) {
            page.set(p, q, value);
        }
    }
    return page;
}

CohomologyTable ext_table_OY(int n) { return abutment_if_diagonal(ext_spectral_page_OY(n)); }

CohomologyTable abutment_if_diagonal(const SpectralPage& page) {
    const auto off = page.nonzero_off_diagonal();
    if (!off.empty()) {
        throw DegeneracyUnjustified("E_2^{" + std::to_string(off.front().first) + "," +
                                    std::to_string(off.front().second) + "} is nonzero");
    }
    return page.antidiagonal_sums();
}

CohomologyTable ext_table_OY_OX(int n) {
    require_n(n);
    return bwb::bott_cohomology(bwb::line_bundle(n, 0)).reflected(2 * n);
}

// ---------------------------------------------------------------------------

const KoszulTerm& KoszulResolution::term(int p) const {
    for (const auto& t : terms) {
        if (t.p == p) {
            return t;
        }
    }
    throw RangeError("Koszul resolution has no term K_" + std::to_string(p));
}

Integer KoszulResolution::alternating_rank_sum() const {
    Integer sum = 0;
    for (const auto& t : terms) {
        sum += t.p % 2 == 1 ? t.rank : Integer(-t.rank);
    }
    return sum;
}

Integer KoszulResolution::alternating_euler_sum() const {
    Integer sum = 0;
    for (const auto& t : terms) {
        const Integer chi = pbundle::euler_char(t.bundle);
        sum += t.p % 2 == 1 ? chi : Integer(-chi);
    }
    return sum;
}

KoszulResolution koszul_resolution(int n) {
    require_n(n);
    const ModelVariety plus(n, Side::XPlus);
    KoszulResolution res{n, {}};
    for (int p = n; p >= 1; --p) {
        const bwb::LeviWeight wedge = bwb::exterior_power_theta(p, n);
        const Integer rank = wedge.rank();
        if (rank != binomial(n, p)) {
            throw std::logic_error("rank of Lambda^p Theta differs from C(n, p)");
        }
        res.terms.push_back({p, TwistedBundle(plus, -p, bwb::HomogeneousBundle(n, {wedge})), rank});
    }
    if (res.alternating_rank_sum() != 1) {
        throw std::logic_error("Koszul terms do not have alternating rank sum 1");
    }
    return res;
}

TwistedBundle koszul_term_dual(int p, int n) {
    require_n(n);
    if (p < 1 || p > n) {
        throw RangeError("Koszul term K_" + std::to_string(p) + " needs 1 <= p <= n = " + std::to_string(n));
    }
    return TwistedBundle(ModelVariety(n, Side::XPlus), p, bwb::HomogeneousBundle(n, {bwb::omega(p, n)}));
}

// ---------------------------------------------------------------------------

PartialTable::PartialTable(int top) : top_(top), dims_(static_cast<std::size_t>(top + 1)) {}

void PartialTable::set(int degree, std::optional<Integer> value) {
    if (degree < 0 || degree > top_) {
        throw InvalidArgument("degree " + std::to_string(degree) + " outside [0, " + std::to_string(top_) + "]");
    }
    dims_[degree] = std::move(value);
}

const std::optional<Integer>& PartialTable::at(int degree) const {
    if (degree < 0 || degree > top_) {
        throw InvalidArgument("degree " + std::to_string(degree) + " outside [0, " + std::to_string(top_) + "]");
    }
    return dims_[degree];
}

bool PartialTable::complete() const { return unknown_degrees().empty(); }

std::vector<int> PartialTable::unknown_degrees() const {
    std::vector<int> out;
    for (int i = 0; i <= top_; ++i) {
        if (!dims_[i]) {
            out.push_back(i);
        }
    }
    return out;
}

CohomologyTable PartialTable::known() const {
    CohomologyTable out;
    for (int i = 0; i <= top_; ++i) {
        if (dims_[i]) {
            out.add(i, *dims_[i]);
        }
    }
    return out;
}

std::vector<ChaseSystem> ext_against_ideal_systems(int p, int n, ExtRoute route) {
    return with_ideal_network(koszul_term_dual(p, n), koszul_dual_names(p), route);
}

ExtAgainstIdeal ext_locally_free_vs_ideal(int p, int n, ExtRoute route) {
    auto [table, chase] = cohomology_with_ideal(koszul_term_dual(p, n), koszul_dual_names(p), route);
    return {p, n, std::move(table), std::move(chase)};
}

std::vector<ChaseSystem> ideal_cohomology_systems(int n, ExtRoute route) {
    return with_ideal_network(structure_sheaf(n), structure_names, route);
}

IdealCohomology ideal_cohomology(int n, ExtRoute route) {
    auto [table, chase] = cohomology_with_ideal(structure_sheaf(n), structure_names, route);
    return {n, std::move(table), std::move(chase)};
}

std::vector<ChaseSystem> ideal_self_systems(int n) {
    require_n_two(n, "the Ext^2(I, I) chase");
    const int top = 2 * n;
    const ModelVariety plus(n, Side::XPlus);
    const CohomologyTable hX = pbundle::cohomology_X(pbundle::XLineBundle(plus, 0, 0));
    const CohomologyTable hY = bwb::bott_cohomology(bwb::line_bundle(n, 0));
    const CohomologyTable extYY = ext_table_OY(n);
    const CohomologyTable extYX = ext_table_OY_OX(n);

    std::vector<ChaseSystem> network;
    // H^* of 0 -> I -> O_X+ -> O_Y+ -> 0; Ext^i(O_X+, I) is H^i(I).
    network.push_back(long_exact_sequence("H(0->I->O_X+->O_Y+->0)", top, [&](int s, int i) {
        switch (s) {
            case 0: return unknown_term(h_label("I_Y+", i));
            case 1: return known_term(h_label("O_X+", i), hX[i]);
            default: return known_term(h_label("O_Y+", i), hY[i]);
        }
    }));
    // Hom(O_Y+, -) of the same sequence.
    network.push_back(long_exact_sequence("Ext(O_Y+, 0->I->O_X+->O_Y+->0)", top, [&](int s, int i) {
        switch (s) {
            case 0: return unknown_term(ext_label("O_Y+", "I_Y+", i));
            case 1: return known_term(ext_label("O_Y+", "O_X+", i), extYX[i]);
            default: return known_term(ext_label("O_Y+", "O_Y+", i), extYY[i]);
        }
    }));
    // Hom(-, I) of the same sequence, contravariant so the order is O_Y+, O_X+, I.
    network.push_back(long_exact_sequence("Ext(0->I->O_X+->O_Y+->0, I)", top, [&](int s, int i) {
        switch (s) {
            case 0: return unknown_term(ext_label("O_Y+", "I_Y+", i));
            case 1: return unknown_term(h_label("I_Y+", i));
            default: return unknown_term(ext_label("I_Y+", "I_Y+", i));
        }
    }));
    return network;
}

IdealSelfExt ext2_ideal_self_chase(int n, RuleOrder order) {
    ChaseResult chase = chase_solve(ideal_self_systems(n), order);
    Integer value = chase.require(ext_label("I_Y+", "I_Y+", 2));
    return {std::move(value), std::move(chase)};
}

Integer ext2_ideal_self(int n) { return ext2_ideal_self_chase(n).ext2; }

ChaseSystem ideal_self_koszul_system(int n) {
    require_n_two(n, "the Koszul-route Ext^2(I, I) chase");
    const int top = 2 * n;
    const ExtAgainstIdeal k1 = ext_locally_free_vs_ideal(1, n);
    const ExtAgainstIdeal k2 = ext_locally_free_vs_ideal(2, n);
    // Hom(-, I) of 0 -> K_2 -> K_1 -> I -> 0.
    return long_exact_sequence("Ext(0->K2->K1->I->0, I)", top, [&](int s, int i) {
        switch (s) {
            case 0: return unknown_term(ext_label("I_Y+", "I_Y+", i));
            case 1: return term_from(ext_label("K1", "I_Y+", i), k1.ext.at(i));
            default: return term_from(ext_label("K2", "I_Y+", i), k2.ext.at(i));
        }
    });
}

IdealSelfExt ext2_ideal_self_koszul(int n) {
    ChaseResult chase = chase_solve(ideal_self_koszul_system(n));
    Integer value = chase.require(ext_label("I_Y+", "I_Y+", 2));
    return {std::move(value), std::move(chase)};
}

}  // namespace flopcalc::homalg
