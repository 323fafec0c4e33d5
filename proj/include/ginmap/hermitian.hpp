#ifndef GINMAP_HERMITIAN_HPP
#define GINMAP_HERMITIAN_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ginmap/gin.hpp"
#include "ginmap/poly.hpp"

namespace ginmap {

// Signature (a, b) of a ball/hyperquadric: a positive squares, b negative
// squares.  In homogeneous coordinates the associated norm ||Z||^2_{b+1} has
// b+1 leading negatives over Z0..Z_{a+b}.
struct Signature {
    int a = 1;
    int b = 0;

    Signature() = default;
    Signature(int a_, int b_) : a(a_), b(b_) {
        if (a < 1 || b < 0) throw DimensionError("Signature: need a >= 1, b >= 0");
    }

    bool operator==(const Signature& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Signature& o) const { return !(*this == o); }
};

// Hermitian coefficient matrix of a real (bi)polynomial
// sum c_{ab} Z^a conj(Z)^b.  The basis is either all monomials of one degree
// (the bihomogeneous case) or all monomials up to a degree (the real-form
// case), canonically sorted; the first index of an entry is the holomorphic
// one.
class HermitianForm {
  public:
    HermitianForm(std::vector<std::string> vars, int degree, bool includes_lower = false)
        : vars_(std::move(vars)), degree_(degree), includes_lower_(includes_lower) {
        if (degree < 0) throw DegreeError("HermitianForm: negative degree");
        build_basis();
        m_ = Matrix<TowerElement>(basis_.size(), basis_.size());
    }

    const std::vector<std::string>& variables() const { return vars_; }
    int degree() const { return degree_; }
    bool includes_lower_degrees() const { return includes_lower_; }
    const std::vector<MultiIndex>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    const Matrix<TowerElement>& matrix() const { return m_; }

    std::size_t basis_index(const MultiIndex& m) const {
        auto it = index_.find(m);
        if (it == index_.end())
            throw DimensionError("HermitianForm: monomial outside the basis");
        return it->second;
    }

    const TowerElement& at(const MultiIndex& holo, const MultiIndex& anti) const {
        return m_(basis_index(holo), basis_index(anti));
    }

    void add(const MultiIndex& holo, const MultiIndex& anti, const TowerElement& c) {
        const std::size_t i = basis_index(holo);
        const std::size_t j = basis_index(anti);
        m_(i, j) += c;
    }

    bool is_hermitian() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i; j < size(); ++j)
                if (m_(j, i) != m_(i, j).conj()) return false;
        return true;
    }

    bool is_zero() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (m_(i, j) != TowerElement(0)) return false;
        return true;
    }

    bool operator==(const HermitianForm& o) const {
        return vars_ == o.vars_ && degree_ == o.degree_ &&
               includes_lower_ == o.includes_lower_ && m_ == o.m_;
    }
    bool operator!=(const HermitianForm& o) const { return !(*this == o); }

    // Terms c * Z^a * conj(Z^b), diagonal ones printed as c*|Z^a|^2.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) {
                const TowerElement& c = m_(i, j);
                if (c == TowerElement(0)) continue;
                std::string cs = c.to_string();
                bool negated = false;
                if (cs[0] == '-' && cs.find(' ') == std::string::npos) {
                    negated = true;
                    cs = cs.substr(1);
                }
                if (out.empty()) {
                    if (negated) out += "-";
                } else {
                    out += negated ? " - " : " + ";
                }
                std::string term;
                if (i == j) {
                    term = "|" + monomial_to_string(basis_[i], vars_) + "|^2";
                } else {
                    term = monomial_to_string(basis_[i], vars_) + "*conj(" +
                           monomial_to_string(basis_[j], vars_) + ")";
                }
                if (cs == "1") {
                    out += term;
                } else if (cs.find(' ') == std::string::npos) {
                    out += cs + "*" + term;
                } else {
                    out += "(" + cs + ")*" + term;
                }
            }
        return out.empty() ? "0" : out;
    }

  private:
    void build_basis() {
        std::vector<MultiIndex> all;
        std::vector<int> current(vars_.size(), 0);
        enumerate(0, degree_, current, all);
        for (MultiIndex& m : all) {
            if (!includes_lower_ && m.degree() != degree_) continue;
            basis_.push_back(std::move(m));
        }
        detail::canonical_sort(basis_);
        for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k]] = k;
    }

    void enumerate(std::size_t pos, int remaining, std::vector<int>& current,
                   std::vector<MultiIndex>& out) const {
        if (pos == vars_.size()) {
            out.emplace_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[pos] = e;
            enumerate(pos + 1, remaining - e, current, out);
        }
        current[pos] = 0;
    }

    std::vector<std::string> vars_;
    int degree_;
    bool includes_lower_;
    std::vector<MultiIndex> basis_;
    std::map<MultiIndex, std::size_t> index_;
    Matrix<TowerElement> m_;
};

// Hermitian form of -sum_{j<neg} |F_j|^2 + sum_{j>=neg} |F_j|^2 for
// homogeneous components of a common degree.  Zero components are allowed and
// contribute nothing.
inline HermitianForm squared_norm_form(const std::vector<Polynomial>& components, int neg) {
    if (components.empty())
        throw DegreeError("squared_norm_form: no components");
    if (neg < 0 || neg > static_cast<int>(components.size()))
        throw DimensionError("squared_norm_form: negative-slot count out of range");
    const std::vector<std::string>* vars = nullptr;
    int degree = -1;
    for (const Polynomial& f : components) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous())
            throw DegreeError("squared_norm_form: component is not homogeneous");
        if (!vars) {
            vars = &f.variables();
            degree = f.total_degree();
        } else {
            if (f.variables() != *vars)
                throw RosterMismatchError("squared_norm_form: mixed rosters");
            if (f.total_degree() != degree)
                throw DegreeError("squared_norm_form: components of unequal degree");
        }
    }
    if (!vars) throw DegreeError("squared_norm_form: all components are zero");
    HermitianForm form(*vars, degree, false);
    for (std::size_t j = 0; j < components.size(); ++j) {
        const Polynomial& f = components[j];
        const bool negative = static_cast<int>(j) < neg;
        for (const auto& [ma, ca] : f.terms())
            for (const auto& [mb, cb] : f.terms()) {
                TowerElement c = ca * cb.conj();
                form.add(ma, mb, negative ? -c : c);
            }
    }
    return form;
}

// ||Z||^2_{b+1} * q, expanded over the degree-(q.degree()+1) basis.
inline HermitianForm multiply_by_norm(const HermitianForm& q, const Signature& sig) {
    const std::size_t n = q.variables().size();
    if (n != static_cast<std::size_t>(sig.a + sig.b + 1))
        throw DimensionError("multiply_by_norm: roster does not match signature");
    if (q.includes_lower_degrees())
        throw DegreeError("multiply_by_norm: expected a bihomogeneous form");
    HermitianForm r(q.variables(), q.degree() + 1, false);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t k = 0; k < q.size(); ++k) {
            const TowerElement& c = q.matrix()(i, k);
            if (c == TowerElement(0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const bool negative = static_cast<int>(j) <= sig.b;
                const MultiIndex ej = MultiIndex::unit(n, j);
                r.add(q.basis()[i] * ej, q.basis()[k] * ej, negative ? -c : c);
            }
        }
    return r;
}

struct NormQuotient {
    HermitianForm q;
    int side;  // +1; kept for schema stability (R and -R divide together)
};

// Exact division of a bihomogeneous form by ||Z||^2_{b+1}: solves the linear
// system R_{ab} = sum_j eps_j q_{a-e_j, b-e_j} by Gaussian elimination and
// fails with NotDivisibleError when the system is inconsistent, i.e. when the
// map behind R does not take HQ(a,b+1) into the target hyperquadric.
inline NormQuotient divide_by_norm(const HermitianForm& r, const Signature& sig) {
    if (r.degree() < 1) throw DegreeError("divide_by_norm: degree must be >= 1");
    if (r.includes_lower_degrees())
        throw DegreeError("divide_by_norm: expected a bihomogeneous form");
    const std::size_t n = r.variables().size();
    if (n != static_cast<std::size_t>(sig.a + sig.b + 1))
        throw DimensionError("divide_by_norm: roster does not match signature");

    HermitianForm q(r.variables(), r.degree() - 1, false);
    const std::size_t nq = q.size();
    const std::size_t nr = r.size();
    Matrix<TowerElement> system(nr * nr, nq * nq);
    std::vector<TowerElement> rhs(nr * nr);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t k = 0; k < nr; ++k) {
            const std::size_t row = i * nr + k;
            rhs[row] = r.matrix()(i, k);
            const MultiIndex& alpha = r.basis()[i];
            const MultiIndex& beta = r.basis()[k];
            for (std::size_t j = 0; j < n; ++j) {
                if (alpha[j] == 0 || beta[j] == 0) continue;
                const std::size_t qi = q.basis_index(alpha.lowered(j));
                const std::size_t qk = q.basis_index(beta.lowered(j));
                const bool negative = static_cast<int>(j) <= sig.b;
                system(row, qi * nq + qk) += TowerElement(negative ? -1 : 1);
            }
        }
    const auto solution = solve_linear(system, rhs);
    if (!solution)
        throw NotDivisibleError(
            "divide_by_norm: squared norm is not divisible by the source norm");
    for (std::size_t qi = 0; qi < nq; ++qi)
        for (std::size_t qk = 0; qk < nq; ++qk)
            q.add(q.basis()[qi], q.basis()[qk], (*solution)[qi * nq + qk]);
    return NormQuotient{std::move(q), +1};
}

// Basis of the column space of the coefficient matrix, read back as
// polynomials in the basis monomials.  This spans the (unique) linear span of
// any holomorphic decomposition q = ||h+||^2 - ||h-||^2.
inline std::vector<Polynomial> holomorphic_decomposition_span(const HermitianForm& q) {
    Matrix<TowerElement> work = q.matrix();
    const std::vector<std::size_t> pivots = row_echelon(work);
    std::vector<Polynomial> span;
    span.reserve(pivots.size());
    for (std::size_t c : pivots) {
        Polynomial p(q.variables());
        for (std::size_t rrow = 0; rrow < q.size(); ++rrow)
            p.add_term(q.basis()[rrow], q.matrix()(rrow, c));
        span.push_back(std::move(p));
    }
    return span;
}

// gin of the ideal generated by the holomorphic decomposition span of the
// quotient of a homogeneous hyperquadric map.  `components` are the map's
// homogeneous components, negative target slots first.
inline MonomialIdeal quotient_gin(const std::vector<Polynomial>& components,
                                  const Signature& source, const Signature& target,
                                  const GinConfig& cfg, MonomialOrder ord) {
    const HermitianForm r = squared_norm_form(components, target.b + 1);
    const NormQuotient quotient = divide_by_norm(r, source);
    const std::vector<Polynomial> span = holomorphic_decomposition_span(quotient.q);
    if (span.empty()) return MonomialIdeal::zero(quotient.q.variables());
    return gin_ideal(Ideal(span), ord, cfg);
}

// gin of the affine span of the holomorphic decomposition of a real
// polynomial, given as a Hermitian form over the monomials of degree <= d.
// This is the invariant attached to a real-analytic function itself rather
// than to a map, restricted here to polynomial data.
inline MonomialSubspace real_form_gin(const HermitianForm& r, const GinConfig& cfg,
                                      MonomialOrder green_ord) {
    if (!r.includes_lower_degrees())
        throw DegreeError("real_form_gin: expected a form over all monomials of degree <= d");
    std::vector<Polynomial> span = holomorphic_decomposition_span(r);
    span.push_back(Polynomial::constant(r.variables(), TowerElement(1)));
    return gin_subspace(span, green_ord, cfg);
}

// Exact J-unitary matrix via the Cayley transform T = (I - S)(I + S)^{-1}
// with S = J(B - B*) for random Gaussian-rational B, so that T* J T = J holds
// exactly in the field.  J = diag(-1 x negatives, +1 x rest).
inline Matrix<TowerElement> cayley_j_unitary(std::size_t dim, int negatives, SplitMix64& rng,
                                             long bound = 9) {
    if (negatives < 0 || static_cast<std::size_t>(negatives) > dim)
        throw DimensionError("cayley_j_unitary: negative count out of range");
    const TowerElement imag = TowerElement::i();
    for (;;) {
        Matrix<TowerElement> b(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                b(i, j) = TowerElement(static_cast<int>(rng.integer_in(-bound, bound))) +
                          imag * TowerElement(static_cast<int>(rng.integer_in(-bound, bound)));
        // A = B - B* is anti-Hermitian; S = J A satisfies S*J + JS = 0.
        Matrix<TowerElement> s(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const TowerElement ji(static_cast<int>(i) < negatives ? -1 : 1);
            for (std::size_t j = 0; j < dim; ++j)
                s(i, j) = ji * (b(i, j) - b(j, i).conj());
        }
        Matrix<TowerElement> id = Matrix<TowerElement>::identity(dim);
        const auto inv_part = try_inverse(id + s);
        if (!inv_part) continue;
        return (id - s) * *inv_part;
    }
}

}  // namespace ginmap

#endif
