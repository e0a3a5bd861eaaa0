#include <gtest/gtest.h>

#include <random>

#include "flopcalc/errors.hpp"
#include "flopcalc/homalg.hpp"

namespace flopcalc::homalg {
namespace {

// Every network this library assembles, unsolved.
std::vector<std::pair<std::string, std::vector<ChaseSystem>>> assembled_networks() {
    std::vector<std::pair<std::string, std::vector<ChaseSystem>>> out;
    out.emplace_back("ideal-self", ideal_self_systems(2));
    out.emplace_back("ideal-self-koszul", std::vector<ChaseSystem>{ideal_self_koszul_system(2)});
    for (ExtRoute route : {ExtRoute::Restriction, ExtRoute::Koszul, ExtRoute::Combined}) {
        for (int n = 2; n <= 4; ++n) {
            out.emplace_back("ideal n=" + std::to_string(n) + " " + to_string(route), ideal_cohomology_systems(n, route));
            for (int p = 1; p <= n; ++p) {
                out.emplace_back("lf-ideal p=" + std::to_string(p) + " n=" + std::to_string(n) + " " + to_string(route),
                                 ext_against_ideal_systems(p, n, route));
            }
        }
    }
    return out;
}

TEST(ChaseSystem, RejectsRepeatedLabelsAndNegativeDims) {
    ChaseSystem sys("s");
    sys.known("A", 1);
    EXPECT_THROW(sys.unknown("A"), InvalidArgument);
    EXPECT_THROW(sys.known("B", -1), InvalidArgument);
    EXPECT_THROW(sys.set("missing", Integer(0)), InvalidArgument);
    EXPECT_THROW(static_cast<void>(sys.dim("missing")), InvalidArgument);
}

TEST(Chase, FlankedByZerosVanishes) {
    ChaseSystem sys("s");
    sys.zero().unknown("A").zero();
    const auto r = chase_solve(sys);
    EXPECT_EQ(r.value("A"), Integer(0));
    ASSERT_EQ(r.trace.size(), 1u);
    EXPECT_EQ(r.trace[0].rule, ChaseRule::FlankedByZeros);
    EXPECT_EQ(to_string(r.trace[0].rule), "flanked-by-zeros");
}

TEST(Chase, SingleUnknownFromAlternatingSum) {
    ChaseSystem sys("s");
    sys.zero().known("A", 2).unknown("B").known("C", 3).zero();
    const auto r = chase_solve(sys);
    EXPECT_EQ(r.require("B"), Integer(5));
    EXPECT_TRUE(r.complete());
    EXPECT_EQ(r.trace.back().rule, ChaseRule::AlternatingSum);
}

TEST(Chase, NeverGuessesTwoUnknowns) {
    ChaseSystem sys("s");
    sys.zero().unknown("A").unknown("B").zero();
    const auto r = chase_solve(sys);
    EXPECT_FALSE(r.complete());
    EXPECT_EQ(r.unsolved, (std::vector<std::string>{"A", "B"}));
    EXPECT_THROW(r.require("A"), UnderdeterminedError);
}

TEST(Chase, UnflankedEndsCarryNoConstraint) {
    ChaseSystem sys("s");
    sys.unknown("A").known("B", 4).zero();
    EXPECT_FALSE(chase_solve(sys).value("A"));
}

TEST(Chase, InconsistentFullyKnownSegment) {
    ChaseSystem sys("s");
    sys.zero().known("A", 1).zero();
    EXPECT_THROW(chase_solve(sys), InconsistentError);
    ChaseSystem seg("t");
    seg.zero().known("A", 1).known("B", 3).known("C", 1).zero();
    try {
        chase_solve(seg);
        ADD_FAILURE();
    } catch (const InconsistentError& e) {
        EXPECT_EQ(e.labels(), (std::vector<std::string>{"A", "B", "C"}));
    }
}

TEST(Chase, NegativeSolutionIsInconsistent) {
    ChaseSystem sys("s");
    sys.zero().unknown("A").known("B", 1).known("C", 3).zero();
    EXPECT_THROW(chase_solve(sys), InconsistentError);
}

TEST(Chase, SharedLabelsPropagateAcrossSystems) {
    ChaseSystem a("a");
    a.zero().unknown("V").known("W", 2).zero();
    ChaseSystem b("b");
    b.zero().known("U", 1).unknown("V").unknown("X").zero();
    const auto r = chase_solve({a, b});
    EXPECT_EQ(r.value("V"), Integer(2));
    EXPECT_EQ(r.value("X"), Integer(1));
    EXPECT_EQ(r.systems[1].dim("X"), Integer(1));
}

TEST(Chase, ConflictingLabelsAreInconsistent) {
    ChaseSystem a("a");
    a.zero().known("V", 1).known("W", 1).zero();
    ChaseSystem b("b");
    b.zero().known("V", 2).known("Y", 2).zero();
    EXPECT_THROW(chase_solve({a, b}), InconsistentError);
}

TEST(Chase, RandomExactComplexesAreSolvedSoundly) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> rank(0, 3);
    std::bernoulli_distribution hide(0.4);
    for (int trial = 0; trial < 400; ++trial) {
        const int length = 2 + trial % 9;
        std::vector<int> ranks(length + 1, 0);
        for (int i = 0; i + 1 < length; ++i) {
            ranks[i] = rank(rng);
        }
        // Term i sits between maps of ranks ranks[i-1] and ranks[i].
        std::vector<int> truth(length);
        for (int i = 0; i < length; ++i) {
            truth[i] = (i > 0 ? ranks[i - 1] : 0) + ranks[i];
        }
        ChaseSystem sys("random");
        sys.zero();
        for (int i = 0; i < length; ++i) {
            const std::string label = "T" + std::to_string(i);
            if (hide(rng)) {
                sys.unknown(label);
            } else {
                sys.known(label, truth[i]);
            }
        }
        sys.zero();
        const ChaseResult fwd = chase_solve(sys, RuleOrder::Forward);
        const ChaseResult rev = chase_solve(sys, RuleOrder::Reverse);
        EXPECT_EQ(fwd.values, rev.values);
        for (const auto& [label, value] : fwd.values) {
            if (label.rfind("T", 0) == 0) {
                EXPECT_EQ(value, Integer(truth[std::stoi(label.substr(1))])) << "trial " << trial << " " << label;
            }
        }
    }
}

TEST(Chase, RuleOrdersReachTheSameFixpoint) {
    for (const auto& [name, network] : assembled_networks()) {
        const ChaseResult fwd = chase_solve(network, RuleOrder::Forward);
        const ChaseResult rev = chase_solve(network, RuleOrder::Reverse);
        EXPECT_EQ(fwd.values, rev.values) << name;
        EXPECT_EQ(fwd.unsolved, rev.unsolved) << name;
    }
}

TEST(Chase, SolvedSystemsSatisfyExactness) {
    for (const auto& [name, network] : assembled_networks()) {
        const ChaseResult r = chase_solve(network);
        // Feeding the solution back in changes nothing and raises nothing.
        const ChaseResult again = chase_solve(r.systems);
        EXPECT_EQ(r.values, again.values) << name;
        EXPECT_EQ(r.unsolved, again.unsolved) << name;
        EXPECT_TRUE(again.trace.empty()) << name;
    }
}

// Nonzero term whose segment between the nearest zeros is fully known.
bool in_known_segment(const ChaseSystem& sys, std::size_t i) {
    const auto& terms = sys.terms();
    if (!terms[i].dim || *terms[i].dim == 0) {
        return false;
    }
    for (std::size_t l = i; l-- > 0;) {
        if (!terms[l].dim) {
            return false;
        }
        if (*terms[l].dim == 0) {
            break;
        }
    }
    for (std::size_t r = i + 1; r < terms.size(); ++r) {
        if (!terms[r].dim) {
            return false;
        }
        if (*terms[r].dim == 0) {
            break;
        }
    }
    return true;
}

std::vector<ChaseSystem> with_dim(std::vector<ChaseSystem> network, const std::string& label, const Integer& dim) {
    for (auto& sys : network) {
        for (auto& t : sys.terms()) {
            if (t.label == label) {
                t.dim = dim;
            }
        }
    }
    return network;
}

TEST(Chase, AlteredDimensionInShortSequenceIsInconsistent) {
    // 0 -> Ext^2(O_X+, I) -> Ext^2(I, I) -> Ext^3(O_Y+, I) -> 0 with the solved values.
    const ChaseResult solved = chase_solve(ideal_self_systems(2));
    const std::vector<std::string> labels{h_label("I_Y+", 2), ext_label("I_Y+", "I_Y+", 2),
                                          ext_label("O_Y+", "I_Y+", 3)};
    ChaseSystem seq("short-sequence");
    seq.zero();
    for (const auto& l : labels) {
        seq.known(l, solved.require(l));
    }
    seq.zero();
    EXPECT_NO_THROW(chase_solve(seq));
    for (const auto& l : labels) {
        for (int delta : {1, -1}) {
            const Integer v = solved.require(l) + delta;
            if (v < 0) {
                continue;
            }
            ChaseSystem altered = seq;
            altered.set(l, v);
            EXPECT_THROW(chase_solve(altered), InconsistentError) << l << " " << delta;
        }
    }
}

TEST(Chase, AlteredDimensionInIdealSelfNetworkIsInconsistent) {
    const ChaseResult solved = chase_solve(ideal_self_systems(2));
    int altered = 0;
    for (const auto& sys : solved.systems) {
        for (std::size_t i = 0; i < sys.terms().size(); ++i) {
            if (!in_known_segment(sys, i)) {
                continue;
            }
            const ChaseTerm& t = sys.terms()[i];
            EXPECT_THROW(chase_solve(with_dim(solved.systems, t.label, *t.dim + 1)), InconsistentError)
                << sys.name() << " " << t.label;
            ++altered;
        }
    }
    EXPECT_GE(altered, 8);
}

TEST(Chase, AlterationNextToTwoUnknownsIsNotGuessedAway) {
    // H^0(I) and H^1(I) flank H^0(O_X+) and H^0(O_Y+); no value there is contradictory.
    auto network = ideal_self_systems(2);
    network[0].set(h_label("O_X+", 0), Integer(2));
    const ChaseResult r = chase_solve(network);
    EXPECT_FALSE(r.value(h_label("I_Y+", 0)));
    EXPECT_FALSE(r.value(h_label("I_Y+", 1)));
    EXPECT_EQ(r.require(ext_label("I_Y+", "I_Y+", 2)), Integer(1));
}

}  // namespace
}  // namespace flopcalc::homalg
