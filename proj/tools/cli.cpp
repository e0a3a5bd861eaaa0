#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flopcalc/bwb.hpp"
#include "flopcalc/errors.hpp"
#include "flopcalc/flop.hpp"
#include "flopcalc/homalg.hpp"
#include "flopcalc/pbundle.hpp"
#include "flopcalc/serialize.hpp"
#include "flopcalc/verify.hpp"

namespace flopcalc::cli {

namespace {

// Thrown for malformed input that parsed syntactically.
struct UsageError : Error {
    using Error::Error;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

OutputFormat parse_format(const std::string& token) {
    if (token == "text") return OutputFormat::Text;
    if (token == "json") return OutputFormat::Json;
    if (token == "markdown") return OutputFormat::Markdown;
    throw InvalidArgument("unknown output format '" + token + "'");
}

void render_table(std::ostream& os, const CohomologyTable& table) {
    if (table.empty()) {
        os << "all cohomology vanishes\n";
        return;
    }
    for (const auto& [degree, value] : table.dims()) {
        os << "h^" << degree << " = " << value << '\n';
    }
}

void render_trace(std::ostream& os, const std::vector<homalg::TraceStep>& trace) {
    os << "trace:\n";
    for (const auto& step : trace) {
        os << "  " << step.label << " = " << step.value << "  [" << homalg::to_string(step.rule) << "; "
           << step.system << "]\n";
    }
}

struct Flags {
    bool json = false;
    bool markdown = false;
    bool trace = false;
    std::string out;
};

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    bool json() const { return cfg_.format == OutputFormat::Json; }
    bool markdown() const { return cfg_.format == OutputFormat::Markdown; }

    void emit(const std::string& text) {
        if (!cfg_.out_path) {
            out_ << text;
            return;
        }
        std::ofstream file(*cfg_.out_path, std::ios::binary);
        if (!file) {
            throw InvalidArgument("cannot open output path '" + *cfg_.out_path + "'");
        }
        file << text;
        out_ << "wrote " << *cfg_.out_path << '\n';
    }

    void emit_json(const Json& j) { emit(j.dump() + "\n"); }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
};

pbundle::Side parse_side(const std::string& token) {
    if (token == "x") return pbundle::Side::X;
    if (token == "xplus") return pbundle::Side::XPlus;
    throw UsageError("unknown side '" + token + "' (expected x or xplus)");
}

}  // namespace

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read config file '" + path + "'");
    }
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("config line '" + line + "' is not key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "max_n") {
            try {
                std::size_t used = 0;
                base.max_n = std::stoi(value, &used);
                if (used != value.size()) {
                    throw std::invalid_argument(value);
                }
            } catch (const std::exception&) {
                throw InvalidArgument("config value '" + value + "' for max_n is not an integer");
            }
            if (base.max_n < 2) {
                throw InvalidArgument("config value '" + value + "' for max_n must be >= 2");
            }
        } else if (key == "format") {
            base.format = parse_format(value);
        } else {
            throw InvalidArgument("unknown config key '" + key + "'");
        }
    }
    return base;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"flopcalc: exact cohomology computations for the model Mukai flop"};
    app.name("flopcalc");
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (overrides FLOPCALC_CONFIG)");

    Flags flags;
    std::optional<int> max_n_flag;
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", flags.json, "JSON output"); };

    // bott
    int bott_n = 0;
    std::string weight_text;
    auto* bott = app.add_subcommand("bott", "cohomology of an irreducible homogeneous bundle on P^n");
    bott->add_option("--n", bott_n, "ambient P^n");
    bott->add_option("--weight", weight_text, "weight literal l1,...,ln|t")->required();
    add_json(bott);

    // cohomology
    int coh_n = 0, coh_j = 0, coh_k = 0;
    std::string coh_side = "x";
    auto* coh = app.add_subcommand("cohomology", "cohomology of O(j) (x) pi^*O(k) on X or X+");
    coh->add_option("--n", coh_n)->required();
    coh->add_option("--side", coh_side, "x or xplus");
    coh->add_option("--j", coh_j)->required();
    coh->add_option("--k", coh_k)->required();
    add_json(coh);

    // functor
    std::string functor_name;
    int fn_n = 0, fn_j = 0, fn_k = 0;
    auto* functor = app.add_subcommand("functor", "image of a line-bundle class under Phi, Phi' or Psi");
    functor->add_option("name", functor_name, "phi | phiprime | psi")->required();
    functor->add_option("--n", fn_n)->required();
    functor->add_option("--j", fn_j)->required();
    functor->add_option("--k", fn_k)->required();
    add_json(functor);

    // flop picard
    std::string flop_what;
    int flop_n = 0;
    auto* flopcmd = app.add_subcommand("flop", "Picard-lattice action of the flop");
    flopcmd->add_option("what", flop_what, "picard")->required();
    flopcmd->add_option("--n", flop_n)->required();
    add_json(flopcmd);

    // koszul
    int kos_n = 0;
    auto* koszul = app.add_subcommand("koszul", "Koszul resolution of the ideal of Y+");
    koszul->add_option("--n", kos_n)->required();
    add_json(koszul);

    // ext
    std::string ext_what;
    int ext_n = 2, ext_p = 1;
    std::string ext_route = "combined";
    auto* ext = app.add_subcommand("ext", "Ext computations: oy-oy, oy-ox, ideal-self, lf-ideal, ideal");
    ext->add_option("what", ext_what)->required();
    ext->add_option("--n", ext_n);
    ext->add_option("--p", ext_p, "Koszul index for lf-ideal");
    ext->add_option("--route", ext_route, "restriction | koszul | combined (lf-ideal, ideal); chase | koszul (ideal-self)");
    ext->add_flag("--trace", flags.trace, "print the chase trace");
    add_json(ext);

    // verify
    std::string check_id;
    std::optional<int> verify_n;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("check", check_id, "check id or 'all'")->required();
    verify->add_option("--n", verify_n, "single n");
    verify->add_option("--max-n", max_n_flag, "sweep n = 2..max-n");
    add_json(verify);
    verify->add_flag("--markdown", flags.markdown, "markdown report");
    verify->add_option("--out", flags.out, "write the report to a file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    RunConfig cfg;
    try {
        if (config_path.empty()) {
            if (const char* env = std::getenv("FLOPCALC_CONFIG"); env && *env) {
                config_path = env;
            }
        }
        if (!config_path.empty()) {
            cfg = load_config(config_path, cfg);
        }
        if (flags.json && flags.markdown) {
            throw UsageError("--json and --markdown are mutually exclusive");
        }
        if (flags.json) cfg.format = OutputFormat::Json;
        if (flags.markdown) cfg.format = OutputFormat::Markdown;
        if (max_n_flag) {
            if (*max_n_flag < 2) {
                throw UsageError("--max-n " + std::to_string(*max_n_flag) + " must be >= 2");
            }
            cfg.max_n = *max_n_flag;
        }
        if (!flags.out.empty()) cfg.out_path = flags.out;
        cfg.trace = flags.trace;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    Emitter emitter(cfg, out);
    std::ostringstream text;

    try {
        if (bott->parsed()) {
            const bwb::LeviWeight w = bwb::parse_weight(weight_text);
            if (bott->count("--n") && bott_n != w.n()) {
                throw UsageError("weight '" + weight_text + "' has " + std::to_string(w.n()) +
                                 " entries but --n is " + std::to_string(bott_n));
            }
            const CohomologyTable table = bwb::bott_cohomology(w);
            if (emitter.json()) {
                emitter.emit_json(Json{{"n", w.n()}, {"dims", dims_json(table)}});
            } else {
                text << "P^" << w.n() << ", weight " << w << '\n';
                render_table(text, table);
                emitter.emit(text.str());
            }
            return 0;
        }

        if (coh->parsed()) {
            const pbundle::XLineBundle L(pbundle::ModelVariety(coh_n, parse_side(coh_side)), coh_j, coh_k);
            const CohomologyTable table = pbundle::cohomology_X(L);
            if (emitter.json()) {
                emitter.emit_json(Json{{"n", coh_n}, {"j", coh_j}, {"k", coh_k}, {"dims", dims_json(table)}});
            } else {
                text << "O(" << coh_j << ") (x) pi^*O(" << coh_k << ") on " << coh_side << ", n = " << coh_n << '\n';
                render_table(text, table);
                emitter.emit(text.str());
            }
            return 0;
        }

        if (functor->parsed()) {
            const flop::FMImage image = [&]() -> flop::FMImage {
                if (functor_name == "phi") {
                    return flop::apply_Phi(pbundle::XLineBundle(pbundle::ModelVariety(fn_n), fn_j, fn_k));
                }
                if (functor_name == "phiprime") {
                    return {flop::ImageKind::Line,
                            flop::apply_Phi_prime(pbundle::XLineBundle(
                                pbundle::ModelVariety(fn_n, pbundle::Side::XPlus), fn_j, fn_k))};
                }
                if (functor_name == "psi") {
                    return {flop::ImageKind::Line,
                            flop::apply_Psi(pbundle::XLineBundle(pbundle::ModelVariety(fn_n), fn_j, fn_k))};
                }
                throw UsageError("unknown functor '" + functor_name + "' (expected phi, phiprime or psi)");
            }();
            if (emitter.json()) {
                emitter.emit_json(image_json(image));
            } else {
                text << flop::to_string(image.kind) << " (" << image.bundle.j << "," << image.bundle.k << ") on "
                     << pbundle::to_string(image.bundle.variety.side()) << '\n';
                emitter.emit(text.str());
            }
            return 0;
        }

        if (flopcmd->parsed()) {
            if (flop_what != "picard") {
                throw UsageError("unknown flop query '" + flop_what + "' (expected picard)");
            }
            const flop::PicMap m = flop::phi_pullback(flop_n);
            if (emitter.json()) {
                emitter.emit_json(Json{{"n", flop_n}, {"matrix", matrix_json(m)}, {"involution", m.is_involution()}});
            } else {
                text << "phi^* on (xi, h): " << m << (m.is_involution() ? "  (involution)" : "") << '\n';
                emitter.emit(text.str());
            }
            return 0;
        }

        if (koszul->parsed()) {
            const homalg::KoszulResolution res = homalg::koszul_resolution(kos_n);
            if (emitter.json()) {
                emitter.emit_json(koszul_json(res));
            } else {
                text << "0";
                for (const auto& t : res.terms) {
                    text << " -> O(" << t.bundle.j << ") (x) pi^*Lambda^" << t.p << " Theta";
                }
                text << " -> I_Y+ -> 0\n";
                for (const auto& t : res.terms) {
                    text << "K_" << t.p << ": rank " << t.rank << ", chi " << pbundle::euler_char(t.bundle) << '\n';
                }
                text << "alternating rank sum " << res.alternating_rank_sum() << ", alternating chi sum "
                     << res.alternating_euler_sum() << '\n';
                emitter.emit(text.str());
            }
            return 0;
        }

        if (ext->parsed()) {
            auto route_of = [&]() {
                if (ext_route == "restriction") return homalg::ExtRoute::Restriction;
                if (ext_route == "koszul") return homalg::ExtRoute::Koszul;
                if (ext_route == "combined") return homalg::ExtRoute::Combined;
                throw UsageError("unknown route '" + ext_route + "'");
            };
            Json j;
            CohomologyTable table;
            std::optional<homalg::PartialTable> partial;
            const std::vector<homalg::TraceStep>* trace = nullptr;
            homalg::IdealSelfExt self;
            homalg::ExtAgainstIdeal lf;
            homalg::IdealCohomology ideal;
            if (ext_what == "oy-oy") {
                table = homalg::ext_table_OY(ext_n);
                j = Json{{"n", ext_n}, {"dims", dims_json(table)}};
            } else if (ext_what == "oy-ox") {
                table = homalg::ext_table_OY_OX(ext_n);
                j = Json{{"n", ext_n}, {"dims", dims_json(table)}};
            } else if (ext_what == "ideal-self") {
                if (ext_route == "chase" || ext_route == "combined") {
                    self = homalg::ext2_ideal_self_chase(ext_n);
                } else if (ext_route == "koszul") {
                    self = homalg::ext2_ideal_self_koszul(ext_n);
                } else {
                    throw UsageError("unknown route '" + ext_route + "' for ideal-self (expected chase or koszul)");
                }
                trace = &self.chase.trace;
                j = Json{{"n", ext_n}, {"ext2", integer_json(self.ext2)}};
            } else if (ext_what == "lf-ideal") {
                lf = homalg::ext_locally_free_vs_ideal(ext_p, ext_n, route_of());
                partial = lf.ext;
                trace = &lf.chase.trace;
                j = Json{{"n", ext_n}, {"p", ext_p}, {"route", ext_route}, {"dims", dims_json(lf.ext)}};
            } else if (ext_what == "ideal") {
                ideal = homalg::ideal_cohomology(ext_n, route_of());
                partial = ideal.h;
                trace = &ideal.chase.trace;
                j = Json{{"n", ext_n}, {"route", ext_route}, {"dims", dims_json(ideal.h)}};
            } else {
                throw UsageError("unknown ext query '" + ext_what + "'");
            }
            if (emitter.json()) {
                if (cfg.trace && trace) {
                    j["trace"] = trace_json(*trace);
                }
                emitter.emit_json(j);
                return 0;
            }
            text << ext_what << ", n = " << ext_n << '\n';
            if (ext_what == "ideal-self") {
                text << "dim Ext^2(I_Y+, I_Y+) = " << self.ext2 << '\n';
            } else if (partial) {
                for (int i = 0; i <= partial->top(); ++i) {
                    const auto& v = partial->at(i);
                    text << "degree " << i << ": " << (v ? v->str() : std::string("UNKNOWN")) << '\n';
                }
            } else {
                render_table(text, table);
            }
            if (cfg.trace && trace) {
                render_trace(text, *trace);
            }
            emitter.emit(text.str());
            return 0;
        }

        if (verify->parsed()) {
            verify::Report report;
            std::vector<std::string> ids;
            if (check_id == "all") {
                for (const auto& s : verify::check_registry()) {
                    ids.push_back(s.id);
                }
            } else {
                const verify::CheckSpec& spec = verify::find_check(check_id);
                if (spec.fixed_n && verify_n && *verify_n != *spec.fixed_n) {
                    throw UsageError("check '" + check_id + "' is stated for n = " + std::to_string(*spec.fixed_n) +
                                     " only; got --n " + std::to_string(*verify_n));
                }
                ids.push_back(check_id);
            }
            if (verify_n) {
                if (*verify_n < 2) {
                    throw UsageError("--n " + std::to_string(*verify_n) + " must be >= 2");
                }
                report = verify::run_checks(ids, *verify_n, *verify_n);
            } else {
                report = verify::run_checks(ids, 2, cfg.max_n);
            }
            switch (cfg.format) {
                case OutputFormat::Json: emitter.emit(report.to_json().dump(2) + "\n"); break;
                case OutputFormat::Markdown: emitter.emit(report.to_markdown()); break;
                default: emitter.emit(report.to_text());
            }
            return report.exit_code();
        }
    } catch (const UnderdeterminedError& e) {
        err << "underdetermined: " << e.what() << '\n';
        return 3;
    } catch (const InconsistentError& e) {
        err << "inconsistent: " << e.what() << '\n';
        return 1;
    } catch (const DegeneracyUnjustified& e) {
        err << "degeneracy unjustified: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace flopcalc::cli
