#include <algorithm>
#include <set>

#include "flopcalc/errors.hpp"
#include "flopcalc/homalg.hpp"

namespace flopcalc::homalg {

namespace {

using Values = std::map<std::string, Integer>;

struct Segment {
    std::size_t begin;  // first term strictly after a zero
    std::size_t end;    // the closing zero
};

bool is_zero(const ChaseTerm& t, const Values& values) {
    auto it = values.find(t.label);
    return it != values.end() && it->second == 0;
}

std::vector<Segment> zero_flanked_segments(const ChaseSystem& sys, const Values& values) {
    std::vector<Segment> out;
    const auto& terms = sys.terms();
    std::optional<std::size_t> last_zero;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!is_zero(terms[i], values)) {
            continue;
        }
        if (last_zero && i > *last_zero + 1) {
            out.push_back({*last_zero + 1, i});
        }
        last_zero = i;
    }
    return out;
}

[[noreturn]] void throw_inconsistent(const ChaseSystem& sys, const Segment& seg, const std::string& detail) {
    std::vector<std::string> labels;
    for (std::size_t i = seg.begin; i < seg.end; ++i) {
        labels.push_back(sys.terms()[i].label);
    }
    std::string joined;
    for (const auto& l : labels) {
        joined += (joined.empty() ? "" : ", ") + l;
    }
    std::string where = sys.name().empty() ? std::string("complex") : "complex '" + sys.name() + "'";
    throw InconsistentError(where + ": " + detail + " on segment [" + joined + "]", std::move(labels));
}

// One application of `rule` to the first eligible segment of `sys`. Returns true on progress.
bool apply_rule(const ChaseSystem& sys, ChaseRule rule, RuleOrder order, Values& values,
                std::vector<TraceStep>& trace) {
    auto segments = zero_flanked_segments(sys, values);
    if (order == RuleOrder::Reverse) {
        std::reverse(segments.begin(), segments.end());
    }
    const auto& terms = sys.terms();
    for (const auto& seg : segments) {
        std::vector<std::size_t> unknown;
        Integer alternating = 0;
        for (std::size_t i = seg.begin; i < seg.end; ++i) {
            auto it = values.find(terms[i].label);
            if (it == values.end()) {
                unknown.push_back(i);
            } else if ((i - seg.begin) % 2 == 0) {
                alternating += it->second;
            } else {
                alternating -= it->second;
            }
        }
        if (unknown.empty()) {
            if (alternating != 0) {
                throw_inconsistent(sys, seg, "alternating sum " + alternating.str() + " != 0");
            }
            continue;
        }
        if (unknown.size() != 1) {
            continue;
        }
        const bool single = seg.end - seg.begin == 1;
        if (rule == ChaseRule::FlankedByZeros && !single) {
            continue;
        }
        const std::size_t u = unknown.front();
        Integer value = (u - seg.begin) % 2 == 0 ? Integer(-alternating) : alternating;
        if (value < 0) {
            throw_inconsistent(sys, seg, "forces dim " + terms[u].label + " = " + value.str() + " < 0");
        }
        values[terms[u].label] = value;
        trace.push_back({sys.name(), terms[u].label, rule, value});
        return true;
    }
    return false;
}

void final_check(const ChaseSystem& sys, const Values& values) {
    for (const auto& seg : zero_flanked_segments(sys, values)) {
        Integer alternating = 0;
        bool full = true;
        for (std::size_t i = seg.begin; i < seg.end; ++i) {
            auto it = values.find(sys.terms()[i].label);
            if (it == values.end()) {
                full = false;
                break;
            }
            alternating += (i - seg.begin) % 2 == 0 ? it->second : Integer(-it->second);
        }
        if (full && alternating != 0) {
            throw_inconsistent(sys, seg, "alternating sum " + alternating.str() + " != 0");
        }
    }
}

}  // namespace

std::string to_string(ChaseRule rule) {
    return rule == ChaseRule::FlankedByZeros ? "flanked-by-zeros" : "alternating-sum";
}

ChaseSystem::ChaseSystem(std::string name) : name_(std::move(name)) {}

ChaseSystem& ChaseSystem::add(ChaseTerm term) {
    if (term.dim && *term.dim < 0) {
        throw InvalidArgument("term '" + term.label + "' has negative dimension");
    }
    for (const auto& t : terms_) {
        if (t.label == term.label) {
            throw InvalidArgument("label '" + term.label + "' repeated within complex '" + name_ + "'");
        }
    }
    terms_.push_back(std::move(term));
    return *this;
}

ChaseSystem& ChaseSystem::known(std::string label, Integer dim) {
    return add({std::move(label), std::move(dim)});
}

ChaseSystem& ChaseSystem::unknown(std::string label) { return add({std::move(label), std::nullopt}); }

ChaseSystem& ChaseSystem::zero() { return add({"0#" + std::to_string(zeros_++), Integer(0)}); }

std::optional<Integer> ChaseSystem::dim(const std::string& label) const {
    for (const auto& t : terms_) {
        if (t.label == label) {
            return t.dim;
        }
    }
    throw InvalidArgument("no term labelled '" + label + "'");
}

void ChaseSystem::set(const std::string& label, std::optional<Integer> dim) {
    for (auto& t : terms_) {
        if (t.label == label) {
            t.dim = std::move(dim);
            return;
        }
    }
    throw InvalidArgument("no term labelled '" + label + "'");
}

std::optional<Integer> ChaseResult::value(const std::string& label) const {
    auto it = values.find(label);
    if (it == values.end()) {
        return std::nullopt;
    }
    return it->second;
}

Integer ChaseResult::require(const std::string& label) const {
    auto v = value(label);
    if (!v) {
        throw UnderdeterminedError("dimension of " + label + " is not determined by the chase", unsolved);
    }
    return *v;
}

ChaseResult chase_solve(const std::vector<ChaseSystem>& network, RuleOrder order) {
    Values values;
    std::set<std::string> labels;
    for (const auto& sys : network) {
        for (const auto& t : sys.terms()) {
            labels.insert(t.label);
            if (!t.dim) {
                continue;
            }
            auto [it, fresh] = values.emplace(t.label, *t.dim);
            if (!fresh && it->second != *t.dim) {
                throw InconsistentError("label '" + t.label + "' given dimensions " + it->second.str() + " and " +
                                            t.dim->str(),
                                        {t.label});
            }
        }
    }

    std::vector<std::size_t> system_order(network.size());
    for (std::size_t i = 0; i < network.size(); ++i) {
        system_order[i] = i;
    }
    std::vector<ChaseRule> rules{ChaseRule::FlankedByZeros, ChaseRule::AlternatingSum};
    if (order == RuleOrder::Reverse) {
        std::reverse(system_order.begin(), system_order.end());
        std::reverse(rules.begin(), rules.end());
    }

    ChaseResult result;
    bool progress = true;
    while (progress) {
        progress = false;
        for (ChaseRule rule : rules) {
            for (std::size_t idx : system_order) {
                while (apply_rule(network[idx], rule, order, values, result.trace)) {
                    progress = true;
                }
            }
        }
    }
    for (const auto& sys : network) {
        final_check(sys, values);
    }

    result.systems = network;
    for (auto& sys : result.systems) {
        for (auto& t : sys.terms()) {
            if (auto it = values.find(t.label); it != values.end()) {
                t.dim = it->second;
            }
        }
    }
    for (const auto& label : labels) {
        if (!values.count(label)) {
            result.unsolved.push_back(label);
        }
    }
    result.values = std::move(values);
    return result;
}

ChaseResult chase_solve(const ChaseSystem& system, RuleOrder order) {
    return chase_solve(std::vector<ChaseSystem>{system}, order);
}

}  // namespace flopcalc::homalg
