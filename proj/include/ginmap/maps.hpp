#ifndef GINMAP_MAPS_HPP
#define GINMAP_MAPS_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ginmap/gin.hpp"
#include "ginmap/hermitian.hpp"
#include "ginmap/parse.hpp"

namespace ginmap {

// Rational map between balls/hyperquadrics of the given signatures, written
// as numerators over one common denominator.  Numerator slots follow the
// negative-components-first convention, so slots 0..B-1 map to the negative
// squares of the target form.
struct RationalMap {
    std::string name = "custom";
    Signature source;
    Signature target;
    std::vector<Polynomial> numerators;
    Polynomial denominator = Polynomial({"z1"});
    std::map<std::string, std::string> params;

    void validate() const {
        const std::size_t n = static_cast<std::size_t>(source.a + source.b);
        if (denominator.is_zero())
            throw InvalidMapError(name + ": denominator is identically zero");
        if (denominator.variables().size() != n)
            throw RosterMismatchError(name + ": roster size differs from source signature");
        if (numerators.size() != static_cast<std::size_t>(target.a + target.b))
            throw InvalidMapError(name + ": component count differs from target signature");
        for (const Polynomial& p : numerators)
            if (p.variables() != denominator.variables())
                throw RosterMismatchError(name + ": numerators use mixed rosters");
    }
};

// Common-degree homogenization: component 0 is the homogenized denominator,
// components 1.. are the homogenized numerators, all in Z0..Zn.
struct HomogenizedMap {
    std::string name;
    Signature source;
    Signature target;
    int degree = 0;
    std::vector<Polynomial> components;

    const std::vector<std::string>& variables() const {
        return components.front().variables();
    }
};

inline std::vector<std::string> homogeneous_roster(std::size_t n) {
    std::vector<std::string> vars;
    vars.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) vars.push_back("Z" + std::to_string(j));
    return vars;
}

// Homogenize the written representation directly; common polynomial factors
// are not cancelled (the zero slot of a map like (z1, z2, 0) stays).
inline HomogenizedMap homogenize_map(const RationalMap& f) {
    f.validate();
    const std::size_t n = f.denominator.variables().size();
    int d = f.denominator.total_degree();
    for (const Polynomial& p : f.numerators) d = std::max(d, p.total_degree());
    const std::vector<std::string> vars = homogeneous_roster(n);
    HomogenizedMap h;
    h.name = f.name;
    h.source = f.source;
    h.target = f.target;
    h.degree = d;
    h.components.push_back(f.denominator.homogenize(d, "Z0").with_variables(vars));
    for (const Polynomial& p : f.numerators)
        h.components.push_back(p.homogenize(d, "Z0").with_variables(vars));
    return h;
}

// Inverse of homogenize_map over the original roster; used by round-trip
// checks.
inline RationalMap dehomogenize_map(const HomogenizedMap& h,
                                    const std::vector<std::string>& roster) {
    RationalMap f;
    f.name = h.name;
    f.source = h.source;
    f.target = h.target;
    f.denominator = h.components.front().dehomogenize("Z0").with_variables(roster);
    for (std::size_t k = 1; k < h.components.size(); ++k)
        f.numerators.push_back(h.components[k].dehomogenize("Z0").with_variables(roster));
    return f;
}

struct VerifyResult {
    bool valid;
    int side;
};

// Does the homogenized map take HQ(a,b+1) into HQ(A,B+1)?  Failure is a
// value, not an exception.
inline VerifyResult verify_map(const HomogenizedMap& h) {
    const HermitianForm r = squared_norm_form(h.components, h.target.b + 1);
    try {
        const NormQuotient q = divide_by_norm(r, h.source);
        return VerifyResult{true, q.side};
    } catch (const NotDivisibleError&) {
        return VerifyResult{false, +1};
    }
}

// Ideal generated by the nonzero components.
inline Ideal component_ideal(const HomogenizedMap& h) {
    std::vector<Polynomial> gens;
    for (const Polynomial& p : h.components)
        if (!p.is_zero()) gens.push_back(p);
    if (gens.empty()) throw InvalidMapError(h.name + ": all components are zero");
    return Ideal(std::move(gens));
}

struct InvariantReport {
    std::string map_name;
    int degree = 0;
    Signature source;
    Signature target;
    std::vector<MonomialOrder> orders;
    std::uint64_t seed = 0;
    int side = +1;
    std::vector<MonomialIdeal> gin_components;  // aligned with `orders`
    MonomialIdeal gin_quotient = MonomialIdeal::zero({});
    MonomialSubspace gin_afspan = MonomialSubspace({}, {});
    bool afspan_crosscheck = false;
    double elapsed_ms = 0.0;  // wall time; never serialized, JSON stays byte-stable
};

// Cleared affine span of the map: denominator plus numerators (multiplying
// afspan(f) by the denominator leaves the gin unchanged).
inline std::vector<Polynomial> cleared_affine_span(const RationalMap& f) {
    std::vector<Polynomial> span;
    span.push_back(f.denominator);
    for (const Polynomial& p : f.numerators)
        if (!p.is_zero()) span.push_back(p);
    return span;
}

// Full invariant pipeline: component-ideal gins per requested classical
// order, the quotient gin (grevlex), and the affine-span gin computed along
// both routes with their agreement recorded.
inline InvariantReport invariants(const RationalMap& f, const GinConfig& cfg,
                                  std::vector<MonomialOrder> orders = {MonomialOrder::GrevLex}) {
    const auto started = std::chrono::steady_clock::now();
    if (orders.empty()) orders.push_back(MonomialOrder::GrevLex);
    const HomogenizedMap h = homogenize_map(f);
    const VerifyResult vr = verify_map(h);
    if (!vr.valid)
        throw InvalidMapError(f.name +
                              ": squared norm is not divisible by the source norm; "
                              "the map does not take the source hyperquadric to the target");
    InvariantReport report;
    report.map_name = f.name;
    report.degree = h.degree;
    report.source = f.source;
    report.target = f.target;
    report.orders = orders;
    report.seed = cfg.seed;
    report.side = vr.side;
    const Ideal ideal = component_ideal(h);
    for (MonomialOrder ord : orders)
        report.gin_components.push_back(gin_ideal(ideal, ord, cfg));
    report.gin_quotient =
        quotient_gin(h.components, h.source, h.target, cfg, MonomialOrder::GrevLex);
    const std::vector<Polynomial> span = cleared_affine_span(f);
    report.gin_afspan = gin_subspace(span, MonomialOrder::GreenGrLex, cfg);
    report.afspan_crosscheck = (afspan_gin_homogenized(span, cfg) == report.gin_afspan);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

struct CompareReport {
    std::vector<std::pair<std::string, bool>> checks;  // invariant label -> equal
    bool inequivalent = false;

    // gin equality is necessary for equivalence, never sufficient, so the
    // positive verdict only says the invariants cannot tell the maps apart.
    std::string verdict() const {
        return inequivalent ? "provably inequivalent" : "indistinguishable by these invariants";
    }
};

inline CompareReport compare(const InvariantReport& r1, const InvariantReport& r2) {
    if (r1.source != r2.source || r1.target != r2.target)
        throw SignatureMismatchError("compare: maps have different signatures");
    if (r1.orders != r2.orders)
        throw SignatureMismatchError("compare: reports use different order sets");
    CompareReport out;
    for (std::size_t k = 0; k < r1.orders.size(); ++k)
        out.checks.emplace_back("gin_components[" + order_name(r1.orders[k]) + "]",
                                r1.gin_components[k] == r2.gin_components[k]);
    out.checks.emplace_back("gin_quotient", r1.gin_quotient == r2.gin_quotient);
    out.checks.emplace_back("gin_afspan", r1.gin_afspan == r2.gin_afspan);
    for (const auto& [label, equal] : out.checks) out.inequivalent |= !equal;
    return out;
}

// ---------------------------------------------------------------------------
// Catalog of the classified maps the toolkit ships with.

struct CatalogEntry {
    std::string name;
    Signature source;
    Signature target;
    std::string description;
    std::vector<std::string> required_params;
};

inline std::vector<CatalogEntry> catalog_list() {
    return {
        {"faran-1", {2, 0}, {3, 0}, "(z1, z2, 0)", {}},
        {"faran-2", {2, 0}, {3, 0}, "(z1, z1*z2, z2^2)", {}},
        {"faran-3", {2, 0}, {3, 0}, "(z1^2, sqrt(2)*z1*z2, z2^2)", {}},
        {"faran-4", {2, 0}, {3, 0}, "(z1^3, sqrt(3)*z1*z2, z2^3)", {}},
        {"fhjz",
         {2, 0},
         {4, 0},
         "(z1^2, sqrt(2)*z1*z2, z2^2*(z1-a)/(1-a*z1), sqrt(1-a^2)*z2^3/(1-a*z1)), rational a",
         {"a"}},
        {"lebl-1", {2, 0}, {2, 1}, "(0, z1, z2)", {}},
        {"lebl-2", {2, 0}, {2, 1}, "(z2^2, z1^2, sqrt(2)*z2)", {}},
        {"lebl-3", {2, 0}, {2, 1}, "(z2/z1^2, 1/z1, z2^2/z1^2)", {}},
        {"lebl-4",
         {2, 0},
         {2, 1},
         "((z1^2-sqrt(3)*z1*z2+z2^2-z1, z1^2+sqrt(3)*z1*z2+z2^2-z1, "
         "z2^2+z1-sqrt(3)*z2-1) / (z2^2+z1+sqrt(3)*z2-1))",
         {}},
        {"lebl-5",
         {2, 0},
         {2, 1},
         "((root4(2)*(z1*z2+i*z1), root4(2)*(z1*z2-i*z1), z2^2-sqrt(2)*i*z2+1) / "
         "(z2^2+sqrt(2)*i*z2+1))",
         {}},
        {"lebl-6",
         {2, 0},
         {2, 1},
         "((sqrt(3)*(z2*z1^2-z2), 2*z2^3, z1^3+3*z1) / (3*z1^2+1))",
         {}},
        {"lebl-7",
         {2, 0},
         {2, 1},
         "(g, g, 1) for a user-supplied polynomial g; not transversal",
         {"g"}},
    };
}

// Build a catalog map.  fhjz needs a rational parameter `a` (with sqrt(1-a^2)
// expressible over Q(i, 2^{1/4}, sqrt 3)); lebl-7 needs polynomial text `g`.
inline RationalMap catalog(const std::string& name,
                           const std::map<std::string, std::string>& params = {}) {
    const std::vector<std::string> kz{"z1", "z2"};
    auto nums = [&](std::vector<std::string> texts) {
        std::vector<Polynomial> out;
        out.reserve(texts.size());
        for (const std::string& t : texts) out.push_back(parse_polynomial(t, kz));
        return out;
    };
    RationalMap f;
    f.name = name;
    f.params = params;
    f.denominator = Polynomial::constant(kz, TowerElement(1));
    if (name == "faran-1") {
        f.source = {2, 0};
        f.target = {3, 0};
        f.numerators = {parse_polynomial("z1", kz), parse_polynomial("z2", kz),
                        Polynomial::zero(kz)};
        return f;
    }
    if (name == "faran-2") {
        f.source = {2, 0};
        f.target = {3, 0};
        f.numerators = nums({"z1", "z1*z2", "z2^2"});
        return f;
    }
    if (name == "faran-3") {
        f.source = {2, 0};
        f.target = {3, 0};
        f.numerators = nums({"z1^2", "sqrt(2)*z1*z2", "z2^2"});
        return f;
    }
    if (name == "faran-4") {
        f.source = {2, 0};
        f.target = {3, 0};
        f.numerators = nums({"z1^3", "sqrt(3)*z1*z2", "z2^3"});
        return f;
    }
    if (name == "fhjz") {
        auto it = params.find("a");
        if (it == params.end()) throw CatalogError("fhjz: missing rational parameter a");
        const Polynomial aconst = parse_polynomial(it->second, kz);
        if (aconst.total_degree() > 0 || !aconst.coefficient(MultiIndex::constant(2)).is_rational())
            throw CatalogError("fhjz: parameter a must be a rational constant");
        const Rational a = aconst.coefficient(MultiIndex::constant(2)).rational_part();
        const auto scale = sqrt_in_tower(1 - a * a);
        if (!scale)
            throw CatalogError(
                "fhjz: sqrt(1-a^2) is not expressible in Q(i, 2^{1/4}, sqrt 3)");
        f.source = {2, 0};
        f.target = {4, 0};
        const Polynomial z1 = parse_polynomial("z1", kz);
        const Polynomial z2 = parse_polynomial("z2", kz);
        const Polynomial den =
            Polynomial::constant(kz, TowerElement(1)) - z1 * TowerElement(a);
        f.denominator = den;
        f.numerators = {z1 * z1 * den, parse_polynomial("sqrt(2)*z1*z2", kz) * den,
                        z2 * z2 * (z1 - Polynomial::constant(kz, TowerElement(a))),
                        z2 * z2 * z2 * *scale};
        return f;
    }
    if (name == "lebl-1") {
        f.source = {2, 0};
        f.target = {2, 1};
        f.numerators = {Polynomial::zero(kz), parse_polynomial("z1", kz),
                        parse_polynomial("z2", kz)};
        return f;
    }
    if (name == "lebl-2") {
        f.source = {2, 0};
        f.target = {2, 1};
        f.numerators = nums({"z2^2", "z1^2", "sqrt(2)*z2"});
        return f;
    }
    if (name == "lebl-3") {
        f.source = {2, 0};
        f.target = {2, 1};
        f.numerators = nums({"z2", "z1", "z2^2"});
        f.denominator = parse_polynomial("z1^2", kz);
        return f;
    }
    if (name == "lebl-4") {
        f.source = {2, 0};
        f.target = {2, 1};
        f.numerators = nums({"z1^2 - sqrt(3)*z1*z2 + z2^2 - z1",
                             "z1^2 + sqrt(3)*z1*z2 + z2^2 - z1",
                             "z2^2 + z1 - sqrt(3)*z2 - 1"});
        f.denominator = parse_polynomial("z2^2 + z1 + sqrt(3)*z2 - 1", kz);
        return f;
    }
    if (name == "lebl-5") {
        f.source = {2, 0};
        f.target = {2, 1};
        f.numerators = nums({"root4(2)*(z1*z2 + i*z1)", "root4(2)*(z1*z2 - i*z1)",
                             "z2^2 - sqrt(2)*i*z2 + 1"});
        f.denominator = parse_polynomial("z2^2 + sqrt(2)*i*z2 + 1", kz);
        return f;
    }
    if (name == "lebl-6") {
        f.source = {2, 0};
        f.target = {2, 1};
        f.numerators = nums({"sqrt(3)*(z2*z1^2 - z2)", "2*z2^3", "z1^3 + 3*z1"});
        f.denominator = parse_polynomial("3*z1^2 + 1", kz);
        return f;
    }
    if (name == "lebl-7") {
        auto it = params.find("g");
        if (it == params.end()) throw CatalogError("lebl-7: missing polynomial parameter g");
        const Polynomial g = parse_polynomial(it->second, kz);
        f.source = {2, 0};
        f.target = {2, 1};
        f.numerators = {g, g, Polynomial::constant(kz, TowerElement(1))};
        return f;
    }
    throw CatalogError("unknown catalog map '" + name + "'");
}

// ---------------------------------------------------------------------------
// Report serialization (stable field names and ordering).

inline nlohmann::ordered_json report_to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["map"] = r.map_name;
    j["degree"] = r.degree;
    j["source"] = {r.source.a, r.source.b};
    j["target"] = {r.target.a, r.target.b};
    nlohmann::ordered_json orders = nlohmann::ordered_json::array();
    for (MonomialOrder ord : r.orders) orders.push_back(order_name(ord));
    j["orders"] = orders;
    j["seed"] = r.seed;
    j["side"] = r.side;
    j["gin_components"] = r.gin_components.front().generator_strings();
    if (r.orders.size() > 1) {
        nlohmann::ordered_json by_order;
        for (std::size_t k = 0; k < r.orders.size(); ++k)
            by_order[order_name(r.orders[k])] = r.gin_components[k].generator_strings();
        j["gin_components_by_order"] = by_order;
    }
    j["gin_quotient"] = r.gin_quotient.generator_strings();
    j["gin_afspan"] = r.gin_afspan.monomial_strings();
    j["afspan_crosscheck"] = r.afspan_crosscheck;
    return j;
}

}  // namespace ginmap

#endif
