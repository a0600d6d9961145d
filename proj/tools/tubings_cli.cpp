// Command-line front door: computes anomalous-dimension coefficients for the
// tree-tubing differential-equation system and its approximation variants,
// cross-checks them against brute-force tubing enumeration, reconstructs the
// log expansion, and runs the resurgent asymptotic analysis.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "tubings/asymptotics.hpp"
#include "tubings/cache.hpp"
#include "tubings/errors.hpp"
#include "tubings/oracle.hpp"
#include "tubings/rge.hpp"
#include "tubings/solver.hpp"
#include "tubings/stokes.hpp"

using nlohmann::json;
using namespace tubings;

namespace {

struct Options {
    std::string alphabet;
    std::string variant = "full";
    std::string format = "bfile";
    std::string cache_dir;
    bool allow_signed = false;
    bool no_cache = false;
    int order = 0;
    int max_n = 6;
    int q = 0; // 0: default per command
    int k = 1;
    int depth = 8;
    int precision_bits = 512;
};

AlphabetSpec parse_spec(const Options& opt, bool needs_combinatorial) {
    AlphabetSpec spec = AlphabetSpec::parse(opt.alphabet);
    bool has_negative = false;
    for (long v : spec.values()) has_negative |= v < 0;
    if (has_negative && !opt.allow_signed)
        throw InvalidSpecError("negative alphabet entries need --allow-signed");
    if (needs_combinatorial) {
        if (has_negative)
            throw InvalidSpecError("this subcommand is only defined for positive alphabets");
        if (!spec.combinatorial())
            throw InvalidSpecError("this subcommand needs a positive, sorted alphabet");
    }
    return spec;
}

std::vector<Int> gamma_coeffs(const Options& opt, const AlphabetSpec& spec, Variant variant,
                              int order) {
    if (opt.no_cache) return solve(spec, order, variant).gamma.coeffs();
    CoefficientCache cache(opt.cache_dir.empty() ? CoefficientCache::default_dir()
                                                 : std::filesystem::path(opt.cache_dir));
    return cache.gamma_coefficients(variant, spec, order);
}

json spec_json(const AlphabetSpec& spec) {
    return json(spec.values());
}

void print_gamma(const Options& opt, const AlphabetSpec& spec, const std::vector<Int>& g,
                 Variant variant) {
    if (opt.format == "bfile") {
        for (std::size_t n = 1; n < g.size(); ++n)
            std::cout << n << ' ' << g[n].get_str() << '\n';
    } else if (opt.format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t n = 1; n < g.size(); ++n)
            std::cout << n << ',' << g[n].get_str() << '\n';
    } else if (opt.format == "json") {
        json out;
        out["spec"] = spec_json(spec);
        out["variant"] = variant_name(variant);
        out["order"] = g.size() - 1;
        json vals = json::array();
        for (std::size_t n = 1; n < g.size(); ++n) vals.push_back(g[n].get_str());
        out["coefficients"] = vals;
        std::cout << out.dump() << '\n';
    } else {
        throw PreconditionError("unknown format '" + opt.format + "'");
    }
}

int cmd_gamma(const Options& opt) {
    AlphabetSpec spec = parse_spec(opt, false);
    if (opt.order < 1) throw PreconditionError("--order must be >= 1");
    Variant variant = variant_from_name(opt.variant);
    auto g = gamma_coeffs(opt, spec, variant, opt.order);
    print_gamma(opt, spec, g, variant);
    return 0;
}

int cmd_oracle(const Options& opt) {
    AlphabetSpec spec = parse_spec(opt, true);
    if (opt.max_n < 1) throw PreconditionError("--max-n must be >= 1");
    auto g = gamma_coeffs(opt, spec, Variant::Full, opt.max_n);
    bool all_ok = true;
    for (int n = 1; n <= opt.max_n; ++n) {
        Int oracle = oracle_gamma_coeff(n, spec);
        bool ok = oracle == g[static_cast<std::size_t>(n)];
        all_ok &= ok;
        std::cout << n << ' ' << oracle.get_str() << ' ' << g[static_cast<std::size_t>(n)].get_str()
                  << ' ' << (ok ? "OK" : "MISMATCH") << '\n';
    }
    std::cout << (all_ok ? "PASS" : "FAIL") << '\n';
    return all_ok ? 0 : 1;
}

int cmd_rge(const Options& opt) {
    AlphabetSpec spec = parse_spec(opt, false);
    if (opt.order < 1) throw PreconditionError("--order must be >= 1");
    if (opt.k < 1) throw PreconditionError("--k must be >= 1");
    SolverResult res = solve(spec, opt.order);
    GPolynomial table = rge_expand(res, opt.k);
    std::cout << "n";
    for (int k = 1; k <= opt.k; ++k) std::cout << ",L" << k;
    std::cout << '\n';
    for (int n = 1; n <= opt.order; ++n) {
        std::cout << n;
        for (int k = 1; k <= opt.k; ++k) std::cout << ',' << to_string(table.coefficient(n, k));
        std::cout << '\n';
    }
    return 0;
}

json params_json(const AsymptoticParams& p) {
    return json{{"q", p.q}, {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}};
}

int cmd_asym(const Options& opt, const std::string& action) {
    AlphabetSpec spec = parse_spec(opt, false);
    for (long v : spec.values())
        if (v < 0) throw InvalidSpecError("asymptotics are only defined for positive alphabets");
    json out;
    out["spec"] = spec_json(spec);
    out["conditional"] = spec.m() > 1; // membership in the divergence class is assumed beyond m = 1
    const int q = opt.q > 0 ? opt.q : spec.m();

    if (action == "params") {
        AsymptoticParams p = asym_params(spec, q);
        out.update(params_json(p));
    } else if (action == "sectors") {
        json sectors = json::array();
        for (const auto& p : transseries_sectors(spec)) sectors.push_back(params_json(p));
        out["sectors"] = sectors;
    } else if (action == "series") {
        const int need = opt.k + spec.m() + 2;
        const int order = std::max(opt.order, need);
        SolverResult res = solve(spec, order);
        AsymSeries s = asym_series(res, q, opt.k);
        out.update(params_json(s.params));
        json c = json::array();
        for (const auto& v : s.c) c.push_back(to_string(v));
        out["c"] = c;
        json fl = json::array();
        for (const auto& v : fluctuation_series(res, q, opt.k)) fl.push_back(to_string(v));
        out["fluctuations"] = fl;
    } else if (action == "stokes") {
        if (opt.order < 1) throw PreconditionError("--order must be >= 1");
        if (opt.precision_bits < 64) throw PreconditionError("--precision-bits must be >= 64");
        AsymptoticParams p = asym_params(spec, q);
        auto g = gamma_coeffs(opt, spec, Variant::Full, opt.order);
        std::vector<Rat> gr(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) gr[i] = Rat(g[i]);
        StokesEstimate est = estimate_stokes(gr, p, opt.depth, opt.precision_bits);
        out.update(params_json(p));
        out["S"] = est.S.to_string();
        out["precisionBits"] = est.precision_bits;
        out["richardsonDepth"] = est.richardson_depth;
        out["residual"] = est.residual.to_string(6);
    } else {
        throw PreconditionError("unknown asym action");
    }
    std::cout << out.dump() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree-tubing Dyson-Schwinger series, oracles, and asymptotics"};
    app.require_subcommand(1);
    Options opt;
    int rc = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--a", opt.alphabet, "alphabet sizes, e.g. 2,3,6")->required();
        sub->add_flag("--allow-signed", opt.allow_signed, "accept negative entries (solver only)");
        sub->add_option("--cache-dir", opt.cache_dir, "cache directory (default: TUBINGS_CACHE_DIR)");
        sub->add_flag("--no-cache", opt.no_cache, "bypass the coefficient cache");
    };

    auto* gamma = app.add_subcommand("gamma", "series coefficients g_1..g_N");
    add_common(gamma);
    gamma->add_option("--order", opt.order, "truncation order N")->required();
    gamma->add_option("--variant", opt.variant, "full|rainbow|chain|odd|chord");
    gamma->add_option("--format", opt.format, "bfile|csv|json");
    gamma->callback([&] { rc = cmd_gamma(opt); });

    auto* oracle = app.add_subcommand("oracle", "brute-force tubing check of the solver");
    add_common(oracle);
    oracle->add_option("--max-n", opt.max_n, "check orders 1..max-n (enumeration-capped)");
    oracle->callback([&] { rc = cmd_oracle(opt); });

    auto* rge = app.add_subcommand("rge", "log-expansion table of G(x,L) as CSV");
    add_common(rge);
    rge->add_option("--order", opt.order, "truncation order N")->required();
    rge->add_option("--k", opt.k, "highest L power")->required();
    rge->callback([&] { rc = cmd_rge(opt); });

    auto* asym = app.add_subcommand("asym", "resurgent asymptotics reports (JSON)");
    std::string action;
    for (const char* name : {"params", "series", "stokes", "sectors"}) {
        auto* sub = asym->add_subcommand(name);
        add_common(sub);
        sub->add_option("--q", opt.q, "sector index (default: m)");
        sub->add_option("--order", opt.order, "series length for stokes");
        sub->add_option("--k", opt.k, "expansion depth for series");
        sub->add_option("--depth", opt.depth, "Richardson depth");
        sub->add_option("--precision-bits", opt.precision_bits, "float precision");
        sub->callback([&, name] { rc = cmd_asym(opt, name); });
    }
    asym->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DegenerateSpectrumError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const InsufficientOrderError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const CacheIoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
