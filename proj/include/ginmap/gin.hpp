#ifndef GINMAP_GIN_HPP
#define GINMAP_GIN_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ginmap/groebner.hpp"

namespace ginmap {

// Sampling parameters for generic coordinate changes.  "Generic" is realized
// as agreement of `verify_samples` independent random draws plus the
// (affine-)Borel-fixedness check; a disagreement escalates coeff_bound by 10x
// and tries again, up to max_retries attempts in total.
struct GinConfig {
    std::uint64_t seed = 20240901;
    long coeff_bound = 997;
    int max_retries = 3;
    int verify_samples = 2;

    void validate() const {
        if (coeff_bound < 2) throw DimensionError("GinConfig: coeff_bound must be >= 2");
        if (verify_samples < 2) throw DimensionError("GinConfig: verify_samples must be >= 2");
        if (max_retries < 1) throw DimensionError("GinConfig: max_retries must be >= 1");
    }
};

// SplitMix64: tiny, portable, and stateless across platforms, so every draw
// is reproducible from (seed, sample_index) alone.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, range) via rejection; fixed algorithm, not the
    // standard library's implementation-defined distributions.
    std::uint64_t below(std::uint64_t range) {
        const std::uint64_t limit = range * (UINT64_MAX / range);
        for (;;) {
            const std::uint64_t v = next();
            if (v < limit) return v % range;
        }
    }

    long integer_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

  private:
    std::uint64_t state_;
};

namespace detail {

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 h(index * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL);
    return seed ^ h.next();
}

inline Matrix<Rational> random_rational_matrix(std::size_t n, long bound, SplitMix64& rng) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.integer_in(-bound, bound);
    return m;
}

inline Matrix<TowerElement> to_tower(const Matrix<Rational>& m) {
    Matrix<TowerElement> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = TowerElement(m(i, j));
    return out;
}

}  // namespace detail

// Random invertible matrix with integer entries in [-coeff_bound, coeff_bound],
// drawn from the deterministic stream keyed by (seed, sample_index) and
// resampled until the determinant is nonzero.
inline Matrix<TowerElement> random_linear_change(std::size_t n, const GinConfig& cfg,
                                                 std::uint64_t sample_index) {
    if (n < 1) throw DimensionError("random_linear_change: dimension must be >= 1");
    SplitMix64 rng(detail::mix_key(cfg.seed, sample_index));
    for (;;) {
        const Matrix<Rational> m = detail::random_rational_matrix(n, cfg.coeff_bound, rng);
        if (determinant(m) != 0) return detail::to_tower(m);
    }
}

struct AffineChange {
    Matrix<TowerElement> linear;
    std::vector<TowerElement> translation;

    bool operator==(const AffineChange& o) const {
        return linear == o.linear && translation == o.translation;
    }
};

// Invertible linear part plus a forced-nonzero translation (moving the base
// point is the whole point of the affine setting).
inline AffineChange random_affine_change(std::size_t n, const GinConfig& cfg,
                                         std::uint64_t sample_index) {
    if (n < 1) throw DimensionError("random_affine_change: dimension must be >= 1");
    SplitMix64 rng(detail::mix_key(cfg.seed, sample_index));
    Matrix<Rational> linear(1, 1);
    for (;;) {
        linear = detail::random_rational_matrix(n, cfg.coeff_bound, rng);
        if (determinant(linear) != 0) break;
    }
    std::vector<TowerElement> translation(n);
    for (;;) {
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            const long v = rng.integer_in(-cfg.coeff_bound, cfg.coeff_bound);
            translation[j] = TowerElement(static_cast<int>(v));
            if (v != 0) nonzero = true;
        }
        if (nonzero) break;
    }
    return AffineChange{detail::to_tower(linear), std::move(translation)};
}

// in(I o T) for verify_samples independent generic T; all draws must agree
// and the common value must be Borel-fixed.
inline MonomialIdeal gin_ideal(const Ideal& ideal, MonomialOrder ord, const GinConfig& cfg) {
    detail::require_classical(ord, "gin_ideal");
    cfg.validate();
    const std::size_t n = ideal.variables().size();
    GinConfig local = cfg;
    std::uint64_t stream = 0;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        std::vector<Matrix<TowerElement>> changes;
        while (changes.size() < static_cast<std::size_t>(cfg.verify_samples)) {
            Matrix<TowerElement> t = random_linear_change(n, local, stream++);
            bool duplicate = false;
            for (const auto& prev : changes) duplicate = duplicate || prev == t;
            if (!duplicate) changes.push_back(std::move(t));
        }
        std::optional<MonomialIdeal> common;
        bool agree = true;
        for (const auto& t : changes) {
            std::vector<Polynomial> moved;
            moved.reserve(ideal.generators().size());
            for (const Polynomial& g : ideal.generators())
                moved.push_back(g.substitute_linear(t));
            MonomialIdeal in = initial_ideal(Ideal(std::move(moved)), ord);
            if (!common) {
                common = std::move(in);
            } else if (*common != in) {
                agree = false;
                break;
            }
        }
        if (agree && borel_fixed(*common)) return *common;
        local.coeff_bound *= 10;
    }
    throw GenericityError("gin_ideal: samples never agreed on a Borel-fixed ideal after " +
                          std::to_string(cfg.max_retries) + " attempts");
}

// Pivot monomials of the coefficient matrix of X, columns sorted descending
// by the order: exactly the set of initial monomials over span(X).
inline MonomialSubspace initial_subspace(const std::vector<Polynomial>& x, MonomialOrder ord) {
    std::vector<const Polynomial*> nonzero;
    for (const Polynomial& p : x)
        if (!p.is_zero()) nonzero.push_back(&p);
    if (nonzero.empty()) {
        const std::vector<std::string> vars = x.empty() ? std::vector<std::string>{}
                                                        : x.front().variables();
        return MonomialSubspace(vars, {});
    }
    const std::vector<std::string>& vars = nonzero.front()->variables();
    std::set<MultiIndex> support;
    for (const Polynomial* p : nonzero) {
        if (p->variables() != vars)
            throw RosterMismatchError("initial_subspace: mixed rosters");
        for (const auto& [m, c] : p->terms()) support.insert(m);
    }
    std::vector<MultiIndex> cols(support.begin(), support.end());
    std::sort(cols.begin(), cols.end(), MonomialDescending{ord});
    Matrix<TowerElement> m(nonzero.size(), cols.size());
    for (std::size_t i = 0; i < nonzero.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m(i, j) = nonzero[i]->coefficient(cols[j]);
    const std::vector<std::size_t> pivots = row_echelon(m);
    std::vector<MultiIndex> monos;
    monos.reserve(pivots.size());
    for (std::size_t c : pivots) monos.push_back(cols[c]);
    return MonomialSubspace(vars, std::move(monos));
}

// in(X o tau) for verify_samples independent generic affine tau, under a
// Green (degree-ascending) order; the common value must be affine-Borel-fixed.
inline MonomialSubspace gin_subspace(const std::vector<Polynomial>& x, MonomialOrder ord,
                                     const GinConfig& cfg) {
    if (!is_green(ord))
        throw std::invalid_argument("gin_subspace: requires a Green (degree-reversing) order");
    cfg.validate();
    std::vector<Polynomial> members;
    for (const Polynomial& p : x)
        if (!p.is_zero()) members.push_back(p);
    if (members.empty()) {
        const std::vector<std::string> vars = x.empty() ? std::vector<std::string>{}
                                                        : x.front().variables();
        return MonomialSubspace(vars, {});
    }
    const std::size_t n = members.front().variables().size();
    GinConfig local = cfg;
    std::uint64_t stream = 0;
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        std::vector<AffineChange> changes;
        while (changes.size() < static_cast<std::size_t>(cfg.verify_samples)) {
            AffineChange t = random_affine_change(n, local, stream++);
            bool duplicate = false;
            for (const auto& prev : changes) duplicate = duplicate || prev == t;
            if (!duplicate) changes.push_back(std::move(t));
        }
        std::optional<MonomialSubspace> common;
        bool agree = true;
        for (const auto& t : changes) {
            std::vector<Polynomial> moved;
            moved.reserve(members.size());
            for (const Polynomial& p : members)
                moved.push_back(p.substitute_affine(t.linear, t.translation));
            MonomialSubspace in = initial_subspace(moved, ord);
            if (!common) {
                common = std::move(in);
            } else if (*common != in) {
                agree = false;
                break;
            }
        }
        if (agree && affine_borel_fixed(*common)) return *common;
        local.coeff_bound *= 10;
    }
    throw GenericityError("gin_subspace: samples never agreed on an affine-Borel-fixed space");
}

// Homogenize-then-truncate route to the affine-span gin: homogenize the
// cleared affine span to its top degree, take the generic initial ideal in
// graded lex (the one classical order whose within-degree restriction stays
// multiplicative after setting the homogenizer to 1), keep the generators of
// the top degree, and strip the homogenizer.  Must agree with gin_subspace of
// the same span; the pipeline cross-checks the two routes.
inline MonomialSubspace afspan_gin_homogenized(const std::vector<Polynomial>& span,
                                               const GinConfig& cfg) {
    std::vector<Polynomial> members;
    for (const Polynomial& p : span)
        if (!p.is_zero()) members.push_back(p);
    if (members.empty()) {
        const std::vector<std::string> vars = span.empty() ? std::vector<std::string>{}
                                                           : span.front().variables();
        return MonomialSubspace(vars, {});
    }
    const std::vector<std::string>& vars = members.front().variables();
    std::string homogenizer = "Z0";
    while (std::find(vars.begin(), vars.end(), homogenizer) != vars.end())
        homogenizer = "_" + homogenizer;
    int d = 0;
    for (const Polynomial& p : members) d = std::max(d, p.total_degree());
    std::vector<Polynomial> homogenized;
    homogenized.reserve(members.size());
    for (const Polynomial& p : members) homogenized.push_back(p.homogenize(d, homogenizer));
    const MonomialIdeal gin = gin_ideal(Ideal(std::move(homogenized)), MonomialOrder::GrLex, cfg);
    std::vector<MultiIndex> monos;
    for (const MultiIndex& g : gin.generators()) {
        if (g.degree() != d) continue;
        std::vector<int> e(g.exponents().begin() + 1, g.exponents().end());
        monos.emplace_back(std::move(e));
    }
    return MonomialSubspace(vars, std::move(monos));
}

}  // namespace ginmap

#endif
