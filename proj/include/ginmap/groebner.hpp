#ifndef GINMAP_GROEBNER_HPP
#define GINMAP_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ginmap/poly.hpp"

namespace ginmap {

// Homogeneous ideal given by explicit generators over a common roster.
class Ideal {
  public:
    explicit Ideal(std::vector<Polynomial> generators) : gens_(std::move(generators)) {
        if (gens_.empty()) throw ZeroPolynomialError("Ideal: no generators");
        for (const Polynomial& g : gens_) {
            if (g.is_zero()) throw ZeroPolynomialError("Ideal: zero generator");
            if (g.variables() != gens_.front().variables())
                throw RosterMismatchError("Ideal: generators use different rosters");
            if (!g.is_homogeneous())
                throw DegreeError("Ideal: generator is not homogeneous");
        }
    }

    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<std::string>& variables() const { return gens_.front().variables(); }

  private:
    std::vector<Polynomial> gens_;
};

namespace detail {

inline void require_classical(MonomialOrder ord, const char* where) {
    if (!is_classical(ord))
        throw std::invalid_argument(std::string(where) +
                                    ": requires a classical (degree-increasing) order");
}

// Canonical listing for monomial sets: ascending degree, descending grevlex
// within a degree.  This matches how generic initial ideals are usually
// written out.
inline void canonical_sort(std::vector<MultiIndex>& monos) {
    std::sort(monos.begin(), monos.end(), [](const MultiIndex& a, const MultiIndex& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return compare_monomials(a, b, MonomialOrder::GrevLex) == std::strong_ordering::greater;
    });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
}

}  // namespace detail

// Finitely generated monomial ideal, kept with its minimal generating set.
class MonomialIdeal {
  public:
    MonomialIdeal(std::vector<std::string> vars, std::vector<MultiIndex> generators)
        : vars_(std::move(vars)) {
        for (const MultiIndex& m : generators)
            if (m.size() != vars_.size())
                throw RosterMismatchError("MonomialIdeal: generator length differs from roster");
        detail::canonical_sort(generators);
        // Minimalize: a generator divisible by an earlier (smaller-degree) one
        // is redundant.
        for (const MultiIndex& m : generators) {
            bool redundant = false;
            for (const MultiIndex& kept : gens_)
                if (kept.divides(m)) {
                    redundant = true;
                    break;
                }
            if (!redundant) gens_.push_back(m);
        }
    }

    static MonomialIdeal zero(std::vector<std::string> vars) {
        return MonomialIdeal(std::move(vars), {});
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<MultiIndex>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_constant(); }

    bool contains(const MultiIndex& m) const {
        if (m.size() != vars_.size())
            throw RosterMismatchError("MonomialIdeal::contains: length mismatch");
        for (const MultiIndex& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    bool operator==(const MonomialIdeal& o) const {
        if (vars_ != o.vars_)
            throw RosterMismatchError("MonomialIdeal: comparing over different rosters");
        return gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::vector<std::string> generator_strings() const {
        std::vector<std::string> out;
        out.reserve(gens_.size());
        for (const MultiIndex& g : gens_) out.push_back(monomial_to_string(g, vars_));
        return out;
    }

    std::string to_string() const {
        if (gens_.empty()) return "(0)";
        std::string out = "(";
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            if (k) out += ", ";
            out += monomial_to_string(gens_[k], vars_);
        }
        return out + ")";
    }

  private:
    std::vector<std::string> vars_;
    std::vector<MultiIndex> gens_;
};

// Finite monomial set spanning a monomial subspace.
class MonomialSubspace {
  public:
    MonomialSubspace(std::vector<std::string> vars, std::vector<MultiIndex> monomials)
        : vars_(std::move(vars)), monos_(std::move(monomials)) {
        for (const MultiIndex& m : monos_)
            if (m.size() != vars_.size())
                throw RosterMismatchError("MonomialSubspace: monomial length differs from roster");
        detail::canonical_sort(monos_);
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<MultiIndex>& monomials() const { return monos_; }
    std::size_t dimension() const { return monos_.size(); }
    bool empty() const { return monos_.empty(); }

    bool contains(const MultiIndex& m) const {
        return std::find(monos_.begin(), monos_.end(), m) != monos_.end();
    }

    bool operator==(const MonomialSubspace& o) const {
        if (vars_ != o.vars_)
            throw RosterMismatchError("MonomialSubspace: comparing over different rosters");
        return monos_ == o.monos_;
    }
    bool operator!=(const MonomialSubspace& o) const { return !(*this == o); }

    std::vector<std::string> monomial_strings() const {
        std::vector<std::string> out;
        out.reserve(monos_.size());
        for (const MultiIndex& m : monos_) out.push_back(monomial_to_string(m, vars_));
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t k = 0; k < monos_.size(); ++k) {
            if (k) out += ", ";
            out += monomial_to_string(monos_[k], vars_);
        }
        return out + "}";
    }

  private:
    std::vector<std::string> vars_;
    std::vector<MultiIndex> monos_;
};

// Borel-fixedness of a monomial ideal: for every generator divisible by z_j
// and every earlier variable z_l, the exchange (z_l/z_j) z^alpha stays in the
// ideal.
inline bool borel_fixed(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.variables().size();
    for (const MultiIndex& g : ideal.generators())
        for (std::size_t j = 1; j < n; ++j) {
            if (g[j] == 0) continue;
            for (std::size_t l = 0; l < j; ++l)
                if (!ideal.contains(g.exchanged(l, j))) return false;
        }
    return true;
}

// Affine variant for monomial subspaces: membership must additionally survive
// plain division by z_j, so the set is downward closed.
inline bool affine_borel_fixed(const MonomialSubspace& space) {
    const std::size_t n = space.variables().size();
    for (const MultiIndex& m : space.monomials())
        for (std::size_t j = 0; j < n; ++j) {
            if (m[j] == 0) continue;
            if (!space.contains(m.lowered(j))) return false;
            for (std::size_t l = 0; l < j; ++l)
                if (!space.contains(m.exchanged(l, j))) return false;
        }
    return true;
}

// Remainder of f on division by G: no term of the result is divisible by any
// leading monomial of G.  Deterministic: the largest reducible term goes
// first, against the first matching divisor in list order.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              MonomialOrder ord) {
    detail::require_classical(ord, "normal_form");
    std::vector<MultiIndex> lm;
    std::vector<TowerElement> lc_inv;
    lm.reserve(basis.size());
    for (const Polynomial& g : basis) {
        lm.push_back(g.leading_monomial(ord));
        lc_inv.push_back(g.leading_coefficient(ord).inv());
    }
    Polynomial r = f;
    for (;;) {
        // Terms of r in descending order; reduce at the first reducible one.
        std::vector<const MultiIndex*> monos;
        monos.reserve(r.terms().size());
        for (const auto& [m, c] : r.terms()) monos.push_back(&m);
        std::sort(monos.begin(), monos.end(), [&](const MultiIndex* a, const MultiIndex* b) {
            return compare_monomials(*a, *b, ord) == std::strong_ordering::greater;
        });
        bool reduced = false;
        for (const MultiIndex* m : monos) {
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (!lm[k].divides(*m)) continue;
                const TowerElement factor = r.coefficient(*m) * lc_inv[k];
                r -= basis[k].times_term(*m / lm[k], factor);
                reduced = true;
                break;
            }
            if (reduced) break;
        }
        if (!reduced) return r;
    }
}

inline Polynomial spolynomial(const Polynomial& f, const Polynomial& g, MonomialOrder ord) {
    const MultiIndex lf = f.leading_monomial(ord);
    const MultiIndex lg = g.leading_monomial(ord);
    const MultiIndex l = MultiIndex::lcm(lf, lg);
    return f.times_term(l / lf, f.leading_coefficient(ord).inv()) -
           g.times_term(l / lg, g.leading_coefficient(ord).inv());
}

// Buchberger's algorithm with the coprime-leading-monomial criterion and the
// normal pair-selection strategy (lowest lcm degree first, then position).
// Returns the reduced Groebner basis: minimal, tail-reduced, monic, sorted by
// leading monomial descending -- a canonical object per (ideal, order).
//
// Only the classical degree-increasing orders are accepted.  Ideals here are
// always homogeneous, and within one homogeneous polynomial the leading term
// under a Green order coincides with the classical one, so nothing is lost.
inline std::vector<Polynomial> buchberger(const Ideal& ideal, MonomialOrder ord) {
    detail::require_classical(ord, "buchberger");
    std::vector<Polynomial> g;
    for (const Polynomial& p : ideal.generators()) g.push_back(p.monic(ord));

    std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
    auto push_pairs_for = [&](std::size_t j) {
        const MultiIndex lj = g[j].leading_monomial(ord);
        for (std::size_t i = 0; i < j; ++i) {
            const MultiIndex li = g[i].leading_monomial(ord);
            pairs.emplace(MultiIndex::lcm(li, lj).degree(), i, j);
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        const auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const MultiIndex li = g[i].leading_monomial(ord);
        const MultiIndex lj = g[j].leading_monomial(ord);
        if (MultiIndex::coprime(li, lj)) continue;
        const Polynomial r = normal_form(spolynomial(g[i], g[j], ord), g, ord);
        if (r.is_zero()) continue;
        g.push_back(r.monic(ord));
        push_pairs_for(g.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's.  Scan by ascending leading monomial so divisors are kept.
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare_monomials(a.leading_monomial(ord), b.leading_monomial(ord), ord) ==
               std::strong_ordering::less;
    });
    std::vector<Polynomial> minimal;
    for (const Polynomial& p : g) {
        const MultiIndex lp = p.leading_monomial(ord);
        bool redundant = false;
        for (const Polynomial& kept : minimal)
            if (kept.leading_monomial(ord).divides(lp)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(p);
    }

    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t t = 0; t < minimal.size(); ++t)
            if (t != k) others.push_back(minimal[t]);
        reduced.push_back(others.empty() ? minimal[k]
                                         : normal_form(minimal[k], others, ord).monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare_monomials(a.leading_monomial(ord), b.leading_monomial(ord), ord) ==
               std::strong_ordering::greater;
    });
    return reduced;
}

// Test oracle: do all S-polynomials of `basis` reduce to zero?
inline bool is_groebner_basis(const std::vector<Polynomial>& basis, MonomialOrder ord) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(spolynomial(basis[i], basis[j], ord), basis, ord).is_zero())
                return false;
    return true;
}

// Minimal generators of the ideal of leading monomials of a Groebner basis.
inline MonomialIdeal initial_ideal(const Ideal& ideal, MonomialOrder ord) {
    const std::vector<Polynomial> gb = buchberger(ideal, ord);
    std::vector<MultiIndex> lms;
    lms.reserve(gb.size());
    for (const Polynomial& p : gb) lms.push_back(p.leading_monomial(ord));
    return MonomialIdeal(ideal.variables(), std::move(lms));
}

}  // namespace ginmap

#endif
