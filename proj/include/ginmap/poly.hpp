#ifndef GINMAP_POLY_HPP
#define GINMAP_POLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ginmap/matrix.hpp"
#include "ginmap/monomial.hpp"
#include "ginmap/tower.hpp"

namespace ginmap {

// Sparse multivariate polynomial over the tower field, with an explicit
// ordered variable roster.  Terms never hold zero coefficients.  Term storage
// is keyed by the container order of MultiIndex; any monomial order enters
// only when a leading term is requested or the polynomial is printed.
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, TowerElement>;

    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial zero(std::vector<std::string> vars) {
        return Polynomial(std::move(vars));
    }

    static Polynomial constant(std::vector<std::string> vars, TowerElement c) {
        Polynomial p(std::move(vars));
        p.add_term(MultiIndex::constant(p.vars_.size()), std::move(c));
        return p;
    }

    static Polynomial variable(std::vector<std::string> vars, std::size_t j) {
        Polynomial p(std::move(vars));
        p.add_term(MultiIndex::unit(p.vars_.size(), j), TowerElement(1));
        return p;
    }

    static Polynomial monomial(std::vector<std::string> vars, MultiIndex m, TowerElement c) {
        Polynomial p(std::move(vars));
        if (m.size() != p.vars_.size())
            throw DimensionError("Polynomial::monomial: exponent length mismatch");
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    TowerElement coefficient(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? TowerElement(0) : it->second;
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    void add_term(MultiIndex m, TowerElement c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_roster(o);
        if (this == &o) {
            for (auto& [m, c] : terms_) c += c;
            return *this;
        }
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_roster(o);
        if (this == &o) {
            terms_.clear();
            return *this;
        }
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial out = *this;
        out += o;
        return out;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial out = *this;
        out -= o;
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(vars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    Polynomial operator*(const TowerElement& c) const {
        Polynomial out(vars_);
        if (c.is_zero()) return out;
        for (const auto& [m, v] : terms_) out.add_term(m, v * c);
        return out;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_roster(o);
        Polynomial out(vars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    // c * z^m * (*this)
    Polynomial times_term(const MultiIndex& m, const TowerElement& c) const {
        Polynomial out(vars_);
        if (c.is_zero()) return out;
        for (const auto& [mk, ck] : terms_) out.add_term(mk * m, ck * c);
        return out;
    }

    Polynomial pow(unsigned n) const {
        Polynomial out = constant(vars_, TowerElement(1));
        for (unsigned k = 0; k < n; ++k) out = out * *this;
        return out;
    }

    MultiIndex leading_monomial(MonomialOrder ord) const {
        if (terms_.empty()) throw ZeroPolynomialError("leading_monomial: zero polynomial");
        const MultiIndex* best = nullptr;
        for (const auto& [m, c] : terms_) {
            if (!best || compare_monomials(m, *best, ord) == std::strong_ordering::greater)
                best = &m;
        }
        return *best;
    }

    TowerElement leading_coefficient(MonomialOrder ord) const {
        return terms_.at(leading_monomial(ord));
    }

    Polynomial monic(MonomialOrder ord) const {
        return *this * leading_coefficient(ord).inv();
    }

    // p(M z): each variable z_j is replaced by row j of M applied to z.
    Polynomial substitute_linear(const Matrix<TowerElement>& m) const {
        return substitute_affine(m, std::vector<TowerElement>(vars_.size(), TowerElement(0)));
    }

    // p(M z + c), expanded and collected exactly.
    Polynomial substitute_affine(const Matrix<TowerElement>& m,
                                 const std::vector<TowerElement>& c) const {
        const std::size_t n = vars_.size();
        if (m.rows() != n || m.cols() != n || c.size() != n)
            throw DimensionError("substitute_affine: dimension mismatch");
        std::vector<Polynomial> image;
        image.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial lin = constant(vars_, c[j]);
            for (std::size_t k = 0; k < n; ++k) {
                if (m(j, k) == TowerElement(0)) continue;
                lin.add_term(MultiIndex::unit(n, k), m(j, k));
            }
            image.push_back(std::move(lin));
        }
        // Power cache per variable, up to the largest exponent that occurs.
        std::vector<std::vector<Polynomial>> pows(n);
        for (std::size_t j = 0; j < n; ++j) pows[j].push_back(constant(vars_, TowerElement(1)));
        Polynomial out(vars_);
        for (const auto& [mi, coeff] : terms_) {
            Polynomial termval = constant(vars_, coeff);
            for (std::size_t j = 0; j < n; ++j) {
                const int e = mi[j];
                if (e == 0) continue;
                while (static_cast<int>(pows[j].size()) <= e)
                    pows[j].push_back(pows[j].back() * image[j]);
                termval = termval * pows[j][e];
            }
            out += termval;
        }
        return out;
    }

    // Multiply each term by var^{d - |alpha|}; the homogenizing variable is
    // prepended to the roster.
    Polynomial homogenize(int d, const std::string& var) const {
        if (!is_zero() && d < total_degree())
            throw DegreeError("homogenize: degree smaller than the polynomial's");
        std::vector<std::string> vars;
        vars.reserve(vars_.size() + 1);
        vars.push_back(var);
        vars.insert(vars.end(), vars_.begin(), vars_.end());
        Polynomial out(std::move(vars));
        for (const auto& [m, c] : terms_) {
            std::vector<int> e;
            e.reserve(m.size() + 1);
            e.push_back(d - m.degree());
            e.insert(e.end(), m.exponents().begin(), m.exponents().end());
            out.add_term(MultiIndex(std::move(e)), c);
        }
        return out;
    }

    // Set the named variable to 1 and drop it from the roster.
    Polynomial dehomogenize(const std::string& var) const {
        std::size_t pos = vars_.size();
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if (vars_[j] == var) {
                pos = j;
                break;
            }
        if (pos == vars_.size())
            throw RosterMismatchError("dehomogenize: no variable named " + var);
        std::vector<std::string> vars = vars_;
        vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(pos));
        Polynomial out(std::move(vars));
        for (const auto& [m, c] : terms_) {
            std::vector<int> e = m.exponents();
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(pos));
            out.add_term(MultiIndex(std::move(e)), c);
        }
        return out;
    }

    // Same exponents over a renamed roster.
    Polynomial with_variables(std::vector<std::string> vars) const {
        if (vars.size() != vars_.size())
            throw RosterMismatchError("with_variables: roster length differs");
        Polynomial out(std::move(vars));
        out.terms_ = terms_;
        return out;
    }

    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Terms in descending order of `ord`.  A coefficient that is a single
    // basis element prints inline (3/2*sqrt(2)*Z0^2); composite coefficients
    // are parenthesized.
    std::string to_string(MonomialOrder ord = MonomialOrder::GrevLex) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const MultiIndex, TowerElement>*> sorted;
        sorted.reserve(terms_.size());
        for (const auto& term : terms_) sorted.push_back(&term);
        std::sort(sorted.begin(), sorted.end(), [&](const auto* a, const auto* b) {
            return compare_monomials(a->first, b->first, ord) == std::strong_ordering::greater;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto* term : sorted) {
            std::string cs = term->second.to_string();
            bool negated = false;
            if (single_basis_coefficient(term->second) && cs[0] == '-') {
                cs = cs.substr(1);
                negated = true;
            }
            if (first) {
                if (negated) os << "-";
            } else {
                os << (negated ? " - " : " + ");
            }
            first = false;
            const std::string ms = monomial_to_string(term->first, vars_);
            if (ms == "1") {
                os << (single_basis_coefficient(term->second) ? cs : "(" + cs + ")");
            } else if (cs == "1") {
                os << ms;
            } else if (single_basis_coefficient(term->second)) {
                os << cs << "*" << ms;
            } else {
                os << "(" << cs << ")*" << ms;
            }
        }
        return os.str();
    }

  private:
    void check_roster(const Polynomial& o) const {
        if (vars_ != o.vars_)
            throw RosterMismatchError("polynomial operands use different rosters");
    }

    static bool single_basis_coefficient(const TowerElement& c) {
        int nnz = 0;
        for (int k = 0; k < TowerElement::kDim; ++k)
            if (sgn(c.coord(k)) != 0) ++nnz;
        return nnz <= 1;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Polynomial operator*(const TowerElement& c, const Polynomial& p) { return p * c; }

}  // namespace ginmap

#endif
