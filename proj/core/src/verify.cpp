#include "flopcalc/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "flopcalc/errors.hpp"
#include "flopcalc/homalg.hpp"
#include "flopcalc/pbundle.hpp"

namespace flopcalc::verify {

namespace {

using flop::PicMap;
using pbundle::ModelVariety;
using pbundle::Side;
using pbundle::XLineBundle;

class ResultBuilder {
public:
    ResultBuilder(std::string id, int n) {
        result_.id = std::move(id);
        result_.n = n;
    }

    Json& evidence() { return result_.evidence; }

    void fail(Json counterexample) {
        result_.status = Status::Fail;
        result_.counterexamples.push_back(std::move(counterexample));
    }

    void underdetermined() {
        if (result_.status == Status::Pass) {
            result_.status = Status::Underdetermined;
        }
    }

    CheckResult finish() {
        if (result_.status == Status::Fail && result_.counterexamples.empty()) {
            throw std::logic_error("failing check " + result_.id + " carries no counterexample");
        }
        return std::move(result_);
    }

private:
    CheckResult result_;
};

Json table_pair(const CohomologyTable& a, const CohomologyTable& b) {
    return Json{{"lhs", dims_json(a)}, {"rhs", dims_json(b)}};
}

}  // namespace

std::string to_string(Status status) {
    switch (status) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        default: return "UNDERDETERMINED";
    }
}

Json CheckResult::to_json() const {
    Json ce = Json::array();
    for (const auto& c : counterexamples) {
        ce.push_back(c);
    }
    return Json{{"id", id}, {"n", n}, {"status", to_string(status)}, {"evidence", evidence}, {"counterexamples", ce}};
}

CheckResult verify_lemma_1_3(int n) { return verify_lemma_1_3(n, flop::phi_pullback(n)); }

CheckResult verify_lemma_1_3(int n, const PicMap& map) {
    ResultBuilder r("lemma-1-3", n);
    const ModelVariety x(n, Side::X);
    const ModelVariety plus(n, Side::XPlus);
    r.evidence()["matrix"] = matrix_json(map);

    const bool involution = map.is_involution();
    r.evidence()["involution"] = involution;
    if (!involution) {
        r.fail(Json{{"reason", "matrix squared is not the identity"}, {"square", matrix_json(map.compose(map))}});
    }

    const auto xi = map.apply(1, 0);
    if (xi != std::array<int, 2>{1, 0}) {
        r.fail(Json{{"reason", "tautological class not fixed"}, {"image", {xi[0], xi[1]}}});
    }

    // The pullback of (pi+)^* O(1) must have the same n+1 sections as on X+.
    const XLineBundle hplus(plus, 0, 1);
    const XLineBundle image = flop::transport(map, hplus);
    const XLineBundle expected(x, 1, -1);
    const CohomologyTable h_image = pbundle::cohomology_X(image);
    const CohomologyTable h_plus = pbundle::cohomology_X(hplus);
    const CohomologyTable h_expected = pbundle::cohomology_X(expected);
    r.evidence()["image_of_h_plus"] = class_json(image);
    r.evidence()["h0_O(1,-1)"] = integer_json(h_expected[0]);
    r.evidence()["h0_image"] = integer_json(h_image[0]);
    r.evidence()["h0_pi_plus_O(1)"] = integer_json(h_plus[0]);
    if (h_expected[0] != n + 1) {
        r.fail(Json{{"reason", "h0(O_X(1) (x) pi^*O(-1)) != n+1"}, {"j", 1}, {"k", -1},
                    {"dims", dims_json(h_expected)}});
    }
    if (!(image == expected)) {
        r.fail(Json{{"reason", "h+ does not map to (1,-1)"}, {"image", class_json(image)}});
    }
    if (h_image[0] != h_plus[0]) {
        r.fail(Json{{"reason", "section count not preserved"}, {"image", class_json(image)},
                    {"dims", table_pair(h_plus, h_image)}});
    }

    const XLineBundle canon = flop::transport(map, pbundle::canonical_class(x));
    const bool canon_fixed = canon == pbundle::canonical_class(plus);
    r.evidence()["canonical_class_fixed"] = canon_fixed;
    if (!canon_fixed) {
        r.fail(Json{{"reason", "canonical class moved"}, {"image", class_json(canon)}});
    }
    return r.finish();
}

CheckResult verify_lemma_1_6(int n) {
    ResultBuilder r("lemma-1-6", n);
    const PicMap phi = flop::phi_pullback(n);
    int formula_cases = 0;
    int round_trips = 0;
    int ideal_twists = 0;
    for (const auto& L : flop::enumerate_spanning_class(n, flop::SpanningClass::Omega)) {
        const flop::FMImage img = flop::apply_Phi(L);
        ++formula_cases;
        // Both branches carry the transported class: a line bundle, or the same class twisted by the ideal.
        const XLineBundle transported = flop::transport(phi, L);
        const auto expected_kind = L.k == 1 ? flop::ImageKind::IdealTwist : flop::ImageKind::Line;
        if (img.kind != expected_kind || !(img.bundle == transported)) {
            r.fail(Json{{"reason", "Phi image differs from the transported class"}, {"j", L.j}, {"k", L.k},
                        {"image", image_json(img)}, {"transported", class_json(transported)}});
        }
        if (img.kind == flop::ImageKind::IdealTwist) {
            ++ideal_twists;
            continue;
        }
        ++round_trips;
        const XLineBundle back = flop::apply_Phi_prime(img.bundle);
        if (!(back == L)) {
            r.fail(Json{{"reason", "Phi' o Phi != id"}, {"j", L.j}, {"k", L.k}, {"back", class_json(back)}});
        }
    }
    r.evidence()["phi_cases"] = formula_cases;
    r.evidence()["round_trips"] = round_trips;
    r.evidence()["ideal_twists"] = ideal_twists;
    return r.finish();
}

CheckResult verify_lemma_2_1() {
    const int n = 2;
    ResultBuilder r("lemma-2-1", n);
    const auto k1 = homalg::ext_locally_free_vs_ideal(1, n);
    const auto k2 = homalg::ext_locally_free_vs_ideal(2, n);
    r.evidence()["ext_K1_I"] = dims_json(k1.ext);
    r.evidence()["ext_K2_I"] = dims_json(k2.ext);

    const auto restriction_k1 = homalg::ext_locally_free_vs_ideal(1, n, homalg::ExtRoute::Restriction);
    const auto restriction_k2 = homalg::ext_locally_free_vs_ideal(2, n, homalg::ExtRoute::Restriction);
    r.evidence()["restriction_route"] = Json{{"ext_K1_I", dims_json(restriction_k1.ext)},
                                             {"ext_K2_I", dims_json(restriction_k2.ext)}};

    struct Claim {
        const char* name;
        const std::optional<Integer>& value;
        bool want_zero;
    };
    const Claim claims[] = {
        {"Ext^1(K1,I)", k1.ext.at(1), true},
        {"Ext^1(K2,I)", k2.ext.at(1), false},
        {"Ext^2(K1,I)", k1.ext.at(2), true},
    };
    for (const auto& c : claims) {
        if (!c.value) {
            r.underdetermined();
            r.evidence()["undetermined"].push_back(c.name);
        } else if ((*c.value == 0) != c.want_zero) {
            r.fail(Json{{"term", c.name}, {"value", integer_json(*c.value)}, {"expected", c.want_zero ? "0" : "nonzero"}});
        }
    }

    try {
        const auto koszul = homalg::ext2_ideal_self_koszul(n);
        r.evidence()["ext2_I_I"] = integer_json(koszul.ext2);
        if (koszul.ext2 == 0) {
            r.fail(Json{{"term", "Ext^2(I,I)"}, {"value", 0}, {"expected", "nonzero"}});
        }
    } catch (const UnderdeterminedError& e) {
        r.underdetermined();
        r.evidence()["ext2_I_I"] = nullptr;
        r.evidence()["undetermined"].push_back("Ext^2(I,I)");
    }
    return r.finish();
}

CheckResult verify_cor_2_2() {
    const int n = 2;
    ResultBuilder r("cor-2-2", n);
    const ModelVariety x(n, Side::X);
    const XLineBundle L(x, 0, 1);

    const flop::FMImage image = flop::apply_Phi(L);
    r.evidence()["phi_L"] = image_json(image);
    if (image.kind != flop::ImageKind::IdealTwist) {
        r.fail(Json{{"reason", "Phi(L) is not an ideal twist"}, {"image", image_json(image)}});
    }

    const CohomologyTable ext_LL = pbundle::hom_dims(L, L);
    const CohomologyTable h_OX = pbundle::cohomology_X(XLineBundle(x, 0, 0));
    const CohomologyTable ext_OY = homalg::ext_table_OY(n);
    r.evidence()["ext_L_L"] = dims_json(ext_LL);
    r.evidence()["h2_O_X"] = integer_json(h_OX[2]);
    r.evidence()["ext_O_Y_O_Y"] = dims_json(ext_OY);

    const Integer ext2_LL = ext_LL[2];
    try {
        const auto chase = homalg::ext2_ideal_self_chase(n);
        r.evidence()["pair"] = Json::array({integer_json(ext2_LL), integer_json(chase.ext2)});
        r.evidence()["h2_I"] = integer_json(chase.chase.require(homalg::h_label("I_Y+", 2)));
        r.evidence()["h3_I"] = integer_json(chase.chase.require(homalg::h_label("I_Y+", 3)));
        r.evidence()["trace"] = trace_json(chase.chase.trace);
        if (ext2_LL != 0 || chase.ext2 != 1) {
            r.fail(Json{{"reason", "expected (0, 1)"},
                        {"pair", Json::array({integer_json(ext2_LL), integer_json(chase.ext2)})}});
        }
    } catch (const UnderdeterminedError& e) {
        r.underdetermined();
        r.evidence()["pair"] = Json::array({integer_json(ext2_LL), nullptr});
        r.evidence()["undetermined"] = e.labels();
    }
    return r.finish();
}

CheckResult verify_lemma_2_3(int n) {
    ResultBuilder r("lemma-2-3", n);
    const homalg::SpectralPage page = homalg::ext_spectral_page_OY(n);
    Json page_json = Json::object();
    for (const auto& [pq, value] : page.entries()) {
        page_json[std::to_string(pq.first) + "," + std::to_string(pq.second)] = integer_json(value);
    }
    r.evidence()["e2_page"] = page_json;
    const auto off = page.nonzero_off_diagonal();
    for (const auto& [p, q] : off) {
        r.fail(Json{{"reason", "off-diagonal E_2 term"}, {"p", p}, {"q", q}, {"value", integer_json(page.at(p, q))}});
    }
    if (!off.empty()) {
        return r.finish();
    }
    const CohomologyTable ext = homalg::ext_table_OY(n);
    r.evidence()["ext"] = dims_json(ext);
    for (int i = 0; i <= 2 * n + 1; ++i) {
        const Integer want = (i % 2 == 0 && i <= 2 * n) ? 1 : 0;
        if (ext[i] != want) {
            r.fail(Json{{"degree", i}, {"value", integer_json(ext[i])}, {"expected", integer_json(want)}});
        }
    }
    return r.finish();
}

CheckResult verify_lemma_3_4(int n) {
    ResultBuilder r("lemma-3-4", n);
    const ModelVariety x(n, Side::X);
    int cases = 0;
    for (int l = -n; l <= n; ++l) {
        for (int m = -n; m <= n; ++m) {
            const XLineBundle families[2] = {XLineBundle(x, l, m), XLineBundle(x, l + m, -m)};
            for (int f = 0; f < 2; ++f) {
                ++cases;
                const CohomologyTable h = pbundle::cohomology_X(families[f]);
                if (!h.concentrated_in_degree_zero()) {
                    r.fail(Json{{"family", f == 0 ? "(l,m)" : "(l+m,-m)"},
                                {"l", l},
                                {"m", m},
                                {"j", families[f].j},
                                {"k", families[f].k},
                                {"dims", dims_json(h)}});
                }
            }
        }
    }
    r.evidence()["cases"] = cases;
    r.evidence()["range"] = Json::array({-n, n});
    return r.finish();
}

CheckResult verify_prop_3_5(int n) {
    ResultBuilder r("prop-3-5", n);
    const auto omega = flop::enumerate_spanning_class(n, flop::SpanningClass::OmegaPrime);
    int pairs = 0;
    int nonzero_hom = 0;
    for (const auto& a : omega) {
        const XLineBundle pa = flop::apply_Psi(a);
        for (const auto& b : omega) {
            ++pairs;
            const CohomologyTable lhs = pbundle::hom_dims(a, b);
            const CohomologyTable rhs = pbundle::hom_dims(pa, flop::apply_Psi(b));
            if (!(lhs == rhs)) {
                r.fail(Json{{"a", class_json(a)}, {"b", class_json(b)}, {"dims", table_pair(lhs, rhs)}});
            }
            if (!lhs.empty()) {
                ++nonzero_hom;
            }
        }
    }
    r.evidence()["pairs"] = pairs;
    r.evidence()["pairs_with_nonzero_hom"] = nonzero_hom;
    return r.finish();
}

CheckResult verify_serre_3_6(int n) { return verify_serre_3_6(n, flop::phi_pullback(n)); }

CheckResult verify_serre_3_6(int n, const PicMap& map) {
    ResultBuilder r("serre-3-6", n);
    const ModelVariety x(n, Side::X);
    const ModelVariety plus(n, Side::XPlus);
    const XLineBundle omega_x = pbundle::canonical_class(x);
    const XLineBundle omega_plus = pbundle::canonical_class(plus);
    r.evidence()["matrix"] = matrix_json(map);
    r.evidence()["canonical_image"] = class_json(flop::transport(map, omega_x));
    if (!(flop::transport(map, omega_x) == omega_plus)) {
        r.fail(Json{{"reason", "canonical class not fixed"}, {"image", class_json(flop::transport(map, omega_x))}});
    }
    int cases = 0;
    for (const auto& c : flop::enumerate_spanning_class(n, flop::SpanningClass::OmegaPrime)) {
        ++cases;
        const XLineBundle lhs = flop::apply_Psi(c) + omega_plus;
        const XLineBundle rhs = flop::transport(map, c + omega_x);
        if (!(lhs == rhs)) {
            r.fail(Json{{"c", class_json(c)}, {"psi_then_serre", class_json(lhs)}, {"serre_then_psi", class_json(rhs)}});
        }
    }
    r.evidence()["cases"] = cases;
    r.evidence()["compatible"] = flop::serre_compatibility_check(n, map);
    return r.finish();
}

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> registry = {
        {"cor-2-2", 2, [](int) { return verify_cor_2_2(); }},
        {"lemma-1-3", std::nullopt, [](int n) { return verify_lemma_1_3(n); }},
        {"lemma-1-6", std::nullopt, [](int n) { return verify_lemma_1_6(n); }},
        {"lemma-2-1", 2, [](int) { return verify_lemma_2_1(); }},
        {"lemma-2-3", std::nullopt, [](int n) { return verify_lemma_2_3(n); }},
        {"lemma-3-4", std::nullopt, [](int n) { return verify_lemma_3_4(n); }},
        {"prop-3-5", std::nullopt, [](int n) { return verify_prop_3_5(n); }},
        {"serre-3-6", std::nullopt, [](int n) { return verify_serre_3_6(n); }},
    };
    return registry;
}

const CheckSpec& find_check(const std::string& id) {
    for (const auto& spec : check_registry()) {
        if (spec.id == id) {
            return spec;
        }
    }
    throw InvalidArgument("unknown check '" + id + "'");
}

CheckResult run_check(const std::string& id, int n) {
    const CheckSpec& spec = find_check(id);
    if (spec.fixed_n && *spec.fixed_n != n) {
        throw InvalidArgument("check '" + id + "' is stated for n = " + std::to_string(*spec.fixed_n) + " only");
    }
    if (n < 2) {
        throw InvalidArgument("the model needs n >= 2, got n = " + std::to_string(n));
    }
    return spec.run(n);
}

Report run_checks(const std::vector<std::string>& ids, int min_n, int max_n, bool parallel) {
    if (min_n < 2 || max_n < min_n) {
        throw InvalidArgument("invalid n range [" + std::to_string(min_n) + ", " + std::to_string(max_n) + "]");
    }
    std::vector<std::pair<std::string, int>> jobs;
    for (const auto& id : ids) {
        const CheckSpec& spec = find_check(id);
        if (spec.fixed_n) {
            jobs.emplace_back(id, *spec.fixed_n);
            continue;
        }
        for (int n = min_n; n <= max_n; ++n) {
            jobs.emplace_back(id, n);
        }
    }
    Report report;
    if (parallel) {
        std::vector<std::future<CheckResult>> futures;
        for (const auto& [id, n] : jobs) {
            futures.push_back(std::async(std::launch::async, [id = id, n = n] { return run_check(id, n); }));
        }
        for (auto& f : futures) {
            report.results.push_back(f.get());
        }
    } else {
        for (const auto& [id, n] : jobs) {
            report.results.push_back(run_check(id, n));
        }
    }
    std::sort(report.results.begin(), report.results.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.id, a.n) < std::tie(b.id, b.n);
    });
    return report;
}

Report run_all(int max_n, bool parallel) {
    std::vector<std::string> ids;
    for (const auto& spec : check_registry()) {
        ids.push_back(spec.id);
    }
    return run_checks(ids, 2, max_n, parallel);
}

int Report::exit_code() const {
    bool underdetermined = false;
    for (const auto& r : results) {
        if (r.status == Status::Fail) {
            return 1;
        }
        underdetermined = underdetermined || r.status == Status::Underdetermined;
    }
    return underdetermined ? 3 : 0;
}

Json Report::to_json() const {
    Json checks = Json::array();
    int passed = 0;
    for (const auto& r : results) {
        checks.push_back(r.to_json());
        passed += r.status == Status::Pass;
    }
    return Json{{"checks", checks},
                {"summary", {{"total", results.size()}, {"passed", passed}, {"exit_code", exit_code()}}}};
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& r : results) {
        os << to_string(r.status) << "  " << r.id << "  n=" << r.n;
        if (!r.counterexamples.empty()) {
            os << "  counterexample=" << r.counterexamples.front().dump();
        }
        os << '\n';
    }
    return os.str();
}

std::string Report::to_markdown() const {
    std::ostringstream os;
    os << "# Verification report\n\n";
    os << "| check | n | status |\n|---|---|---|\n";
    for (const auto& r : results) {
        os << "| " << r.id << " | " << r.n << " | " << to_string(r.status) << " |\n";
    }
    for (const auto& r : results) {
        os << "\n## " << r.id << " (n = " << r.n << ")\n\n";
        os << "Status: **" << to_string(r.status) << "**\n\n";
        os << "| evidence | value |\n|---|---|\n";
        for (const auto& [key, value] : r.evidence.items()) {
            if (key == "trace") {
                continue;
            }
            os << "| " << key << " | `" << value.dump() << "` |\n";
        }
        if (!r.counterexamples.empty()) {
            os << "\nCounterexamples:\n\n";
            for (const auto& c : r.counterexamples) {
                os << "- `" << c.dump() << "`\n";
            }
        }
    }
    return os.str();
}

}  // namespace flopcalc::verify
