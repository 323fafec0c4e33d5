// Command-line front end: parse polynomial/map input, run the invariant
// pipeline, print human-readable or JSON output.
//
// Exit codes: 0 success, 1 usage or parse error, 2 invalid map (the squared
// norm is not divisible by the source norm), 3 genericity failure.

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ginmap/ginmap.hpp"

namespace {

using namespace ginmap;

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t a = item.find_first_not_of(" \t");
        const std::size_t b = item.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
    }
    if (out.empty()) throw ParseError("empty variable list", 0);
    return out;
}

Signature parse_signature(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("signature must be written a,b", 0);
    try {
        const int a = std::stoi(text.substr(0, comma));
        const int b = std::stoi(text.substr(comma + 1));
        return Signature(a, b);
    } catch (const DimensionError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("signature must be two integers a,b", 0);
    }
}

MonomialOrder parse_order_or_throw(const std::string& name, bool green_expected) {
    const auto ord = parse_order_name(name);
    if (!ord) throw ParseError("unknown monomial order '" + name + "'", 0);
    if (green_expected && !is_green(*ord))
        throw ParseError("subspace gins need a green-* order", 0);
    if (!green_expected && !is_classical(*ord))
        throw ParseError("ideal gins need grevlex or grlex", 0);
    return *ord;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> params;
    for (const std::string& kv : kvs) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw ParseError("parameter must be written key=value: " + kv, 0);
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return params;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    if (items.empty()) return "(0)";
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) out += sep;
        out += items[k];
    }
    return out;
}

struct MapSelection {
    std::string catalog_name;
    std::vector<std::string> params;
    std::string source, target, num, den = "1";

    RationalMap build() const {
        if (!catalog_name.empty()) return catalog(catalog_name, parse_params(params));
        if (source.empty() || target.empty() || num.empty())
            throw ParseError("either --map NAME or --source/--target/--num are required", 0);
        RationalMap f;
        f.source = parse_signature(source);
        f.target = parse_signature(target);
        std::vector<std::string> vars;
        for (int j = 1; j <= f.source.a + f.source.b; ++j)
            vars.push_back("z" + std::to_string(j));
        f.numerators = parse_polynomial_list(num, vars);
        f.denominator = parse_polynomial(den, vars);
        return f;
    }
};

void print_report(const InvariantReport& r, bool json) {
    if (json) {
        std::cout << report_to_json(r).dump(2) << "\n";
        return;
    }
    std::cout << "map: " << r.map_name << "\n";
    std::cout << "degree: " << r.degree << "\n";
    std::cout << "source: (" << r.source.a << "," << r.source.b << ")  target: ("
              << r.target.a << "," << r.target.b << ")\n";
    std::cout << "side: " << (r.side > 0 ? "+1" : "-1") << "\n";
    for (std::size_t k = 0; k < r.orders.size(); ++k)
        std::cout << "gin_components[" << order_name(r.orders[k])
                  << "]: " << join(r.gin_components[k].generator_strings(), ", ") << "\n";
    std::cout << "gin_quotient: " << join(r.gin_quotient.generator_strings(), ", ") << "\n";
    std::cout << "gin_afspan: " << join(r.gin_afspan.monomial_strings(), ", ") << "\n";
    std::cout << "afspan_crosscheck: " << (r.afspan_crosscheck ? "ok" : "FAILED") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Generic initial ideal invariants of rational maps between balls and"
                 " hyperquadrics"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 20240901;
    long coeff_bound = 997;
    int retries = 3;
    bool json = false;
    app.add_option("--seed", seed, "Seed for the generic coordinate changes");
    app.add_option("--coeff-bound", coeff_bound, "Entry bound for random changes");
    app.add_option("--retries", retries, "Attempts before reporting a genericity failure");
    app.add_flag("--json", json, "Emit JSON");
    auto config = [&]() {
        GinConfig cfg;
        cfg.seed = seed;
        cfg.coeff_bound = coeff_bound;
        cfg.max_retries = retries;
        cfg.validate();
        return cfg;
    };

    // gin-ideal
    auto* gin_ideal_cmd = app.add_subcommand("gin-ideal", "gin of a homogeneous ideal");
    std::string gi_vars = "Z0,Z1,Z2", gi_order = "grevlex", gi_polys;
    gin_ideal_cmd->add_option("--vars", gi_vars, "Variable roster, greatest first");
    gin_ideal_cmd->add_option("--order", gi_order, "grevlex or grlex");
    gin_ideal_cmd->add_option("polynomials", gi_polys, "Semicolon-separated generators")
        ->required();
    gin_ideal_cmd->callback([&]() {
        const auto vars = split_names(gi_vars);
        const auto ord = parse_order_or_throw(gi_order, false);
        const Ideal ideal(parse_polynomial_list(gi_polys, vars));
        const MonomialIdeal gin = gin_ideal(ideal, ord, config());
        if (json) {
            nlohmann::ordered_json j;
            j["order"] = order_name(ord);
            j["seed"] = seed;
            j["gin"] = gin.generator_strings();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << join(gin.generator_strings(), ", ") << "\n";
        }
    });

    // subspace-gin
    auto* subspace_cmd = app.add_subcommand("subspace-gin", "gin of a span of polynomials");
    std::string ss_vars = "z1,z2", ss_order = "green-grlex", ss_polys;
    bool ss_truncation = false;
    subspace_cmd->add_option("--vars", ss_vars, "Variable roster, greatest first");
    subspace_cmd->add_option("--order", ss_order, "green-grlex or green-grevlex");
    subspace_cmd->add_flag("--assume-truncation-faithful", ss_truncation,
                           "Accept input that truncates a power series (unsound in general)");
    subspace_cmd->add_option("polynomials", ss_polys, "Semicolon-separated span members")
        ->required();
    subspace_cmd->callback([&]() {
        const auto vars = split_names(ss_vars);
        const auto ord = parse_order_or_throw(ss_order, true);
        if (ss_truncation)
            std::cerr << "warning: an affine substitution mixes every degree into every "
                         "lower degree, so a truncated series carries no guarantee\n";
        const MonomialSubspace gin =
            gin_subspace(parse_polynomial_list(ss_polys, vars), ord, config());
        if (json) {
            nlohmann::ordered_json j;
            j["order"] = order_name(ord);
            j["seed"] = seed;
            j["gin"] = gin.monomial_strings();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << join(gin.monomial_strings(), ", ") << "\n";
        }
    });

    // map-invariants
    auto* inv_cmd = app.add_subcommand("map-invariants", "full invariant report of a map");
    MapSelection inv_sel;
    std::vector<std::string> inv_orders{"grevlex"};
    inv_cmd->add_option("--map", inv_sel.catalog_name, "Catalog map name");
    inv_cmd->add_option("--param", inv_sel.params, "Catalog parameter key=value");
    inv_cmd->add_option("--source", inv_sel.source, "Source signature a,b");
    inv_cmd->add_option("--target", inv_sel.target, "Target signature A,B");
    inv_cmd->add_option("--num", inv_sel.num, "Semicolon-separated numerators in z1..zn");
    inv_cmd->add_option("--den", inv_sel.den, "Common denominator");
    inv_cmd->add_option("--orders", inv_orders, "Classical orders for the component gin");
    inv_cmd->callback([&]() {
        std::vector<MonomialOrder> orders;
        for (const std::string& name : inv_orders)
            orders.push_back(parse_order_or_throw(name, false));
        print_report(invariants(inv_sel.build(), config(), orders), json);
    });

    // quotient
    auto* quot_cmd = app.add_subcommand("quotient", "quotient form, its span, and its gin");
    MapSelection quot_sel;
    quot_cmd->add_option("--map", quot_sel.catalog_name, "Catalog map name");
    quot_cmd->add_option("--param", quot_sel.params, "Catalog parameter key=value");
    quot_cmd->add_option("--source", quot_sel.source, "Source signature a,b");
    quot_cmd->add_option("--target", quot_sel.target, "Target signature A,B");
    quot_cmd->add_option("--num", quot_sel.num, "Semicolon-separated numerators in z1..zn");
    quot_cmd->add_option("--den", quot_sel.den, "Common denominator");
    quot_cmd->callback([&]() {
        const RationalMap f = quot_sel.build();
        const HomogenizedMap h = homogenize_map(f);
        const HermitianForm r = squared_norm_form(h.components, h.target.b + 1);
        const NormQuotient nq = divide_by_norm(r, h.source);
        const auto span = holomorphic_decomposition_span(nq.q);
        const MonomialIdeal gin =
            span.empty() ? MonomialIdeal::zero(nq.q.variables())
                         : gin_ideal(Ideal(span), MonomialOrder::GrevLex, config());
        if (json) {
            nlohmann::ordered_json j;
            j["map"] = f.name;
            j["q"] = nq.q.to_string();
            j["side"] = nq.side;
            nlohmann::ordered_json basis = nlohmann::ordered_json::array();
            for (const Polynomial& p : span) basis.push_back(p.to_string());
            j["span"] = basis;
            j["gin"] = gin.generator_strings();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "q = " << nq.q.to_string() << "\n";
            std::cout << "H(q) span:\n";
            for (const Polynomial& p : span) std::cout << "  " << p.to_string() << "\n";
            std::cout << "gin: " << join(gin.generator_strings(), ", ") << "\n";
        }
    });

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "compare the invariants of two maps");
    std::string map_a, map_b;
    std::vector<std::string> params_a, params_b;
    cmp_cmd->add_option("--map-a", map_a, "First catalog map")->required();
    cmp_cmd->add_option("--map-b", map_b, "Second catalog map")->required();
    cmp_cmd->add_option("--param-a", params_a, "Parameters for the first map");
    cmp_cmd->add_option("--param-b", params_b, "Parameters for the second map");
    cmp_cmd->callback([&]() {
        const InvariantReport ra = invariants(catalog(map_a, parse_params(params_a)), config());
        const InvariantReport rb = invariants(catalog(map_b, parse_params(params_b)), config());
        const CompareReport diff = compare(ra, rb);
        if (json) {
            nlohmann::ordered_json j;
            j["map_a"] = ra.map_name;
            j["map_b"] = rb.map_name;
            nlohmann::ordered_json checks;
            for (const auto& [label, equal] : diff.checks) checks[label] = equal;
            j["equal"] = checks;
            j["verdict"] = diff.verdict();
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& [label, equal] : diff.checks)
                std::cout << label << ": " << (equal ? "equal" : "different") << "\n";
            std::cout << "verdict: " << diff.verdict() << "\n";
        }
    });

    // catalog
    auto* cat_cmd = app.add_subcommand("catalog", "list or show the built-in maps");
    std::string cat_action, cat_name;
    cat_cmd->add_option("action", cat_action, "list | show")->required();
    cat_cmd->add_option("name", cat_name, "Catalog map name (for show)");
    cat_cmd->callback([&]() {
        if (cat_action == "list") {
            for (const CatalogEntry& e : catalog_list()) {
                std::cout << e.name << "  (" << e.source.a << "," << e.source.b << ") -> ("
                          << e.target.a << "," << e.target.b << ")";
                if (!e.required_params.empty())
                    std::cout << "  [needs " << join(e.required_params, ", ") << "]";
                std::cout << "\n";
            }
            return;
        }
        if (cat_action != "show" || cat_name.empty())
            throw ParseError("usage: catalog list | catalog show NAME", 0);
        for (const CatalogEntry& e : catalog_list()) {
            if (e.name != cat_name) continue;
            std::cout << e.name << ": " << e.description << "\n";
            std::cout << "source (" << e.source.a << "," << e.source.b << "), target ("
                      << e.target.a << "," << e.target.b << ")\n";
            if (e.required_params.empty()) {
                const HomogenizedMap h = homogenize_map(catalog(e.name));
                std::cout << "homogenized:";
                for (const Polynomial& p : h.components) std::cout << " " << p.to_string() << ";";
                std::cout << "\n";
            }
            return;
        }
        throw CatalogError("unknown catalog map '" + cat_name + "'");
    });

    // realform-gin
    auto* rf_cmd = app.add_subcommand(
        "realform-gin", "gin of the affine span of a real polynomial's decomposition");
    std::string rf_vars = "z1,z2", rf_expr;
    int rf_degree = 0;
    bool rf_truncation = false;
    rf_cmd->add_option("--vars", rf_vars, "Holomorphic variables (conjugates are w1..wn)");
    rf_cmd->add_option("--degree", rf_degree, "Degree bound of the monomial basis")->required();
    rf_cmd->add_flag("--assume-truncation-faithful", rf_truncation,
                     "Accept input that truncates a power series (unsound in general)");
    rf_cmd->add_option("expression", rf_expr, "Real polynomial in z1..zn, w1..wn")->required();
    rf_cmd->callback([&]() {
        const auto vars = split_names(rf_vars);
        if (rf_truncation)
            std::cerr << "warning: an affine substitution mixes every degree into every "
                         "lower degree, so a truncated series carries no guarantee\n";
        const HermitianForm r = parse_real_form(rf_expr, vars, rf_degree);
        const MonomialSubspace gin = real_form_gin(r, config(), MonomialOrder::GreenGrLex);
        if (json) {
            nlohmann::ordered_json j;
            j["seed"] = seed;
            j["gin"] = gin.monomial_strings();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << join(gin.monomial_strings(), ", ") << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ginmap::GenericityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ginmap::NotDivisibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ginmap::InvalidMapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
