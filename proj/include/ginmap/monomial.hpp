#ifndef GINMAP_MONOMIAL_HPP
#define GINMAP_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ginmap/errors.hpp"

namespace ginmap {

// Exponent vector of a monomial over a fixed variable roster, with cached
// total degree.
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents)
        : e_(std::move(exponents)),
          deg_(std::accumulate(e_.begin(), e_.end(), 0)) {
        for (int v : e_)
            if (v < 0) throw DimensionError("MultiIndex: negative exponent");
    }

    static MultiIndex constant(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }

    static MultiIndex unit(std::size_t n, std::size_t j) {
        std::vector<int> e(n, 0);
        e.at(j) = 1;
        return MultiIndex(std::move(e));
    }

    std::size_t size() const { return e_.size(); }
    int degree() const { return deg_; }
    int operator[](std::size_t j) const { return e_[j]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_constant() const { return deg_ == 0; }

    MultiIndex operator*(const MultiIndex& o) const {
        check_length(o);
        std::vector<int> e(e_.size());
        for (std::size_t j = 0; j < e_.size(); ++j) e[j] = e_[j] + o.e_[j];
        return MultiIndex(std::move(e));
    }

    bool divides(const MultiIndex& o) const {
        check_length(o);
        for (std::size_t j = 0; j < e_.size(); ++j)
            if (e_[j] > o.e_[j]) return false;
        return true;
    }

    MultiIndex operator/(const MultiIndex& o) const {
        check_length(o);
        std::vector<int> e(e_.size());
        for (std::size_t j = 0; j < e_.size(); ++j) {
            e[j] = e_[j] - o.e_[j];
            if (e[j] < 0) throw DimensionError("MultiIndex: quotient not a monomial");
        }
        return MultiIndex(std::move(e));
    }

    static MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
        a.check_length(b);
        std::vector<int> e(a.e_.size());
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::max(a.e_[j], b.e_[j]);
        return MultiIndex(std::move(e));
    }

    static bool coprime(const MultiIndex& a, const MultiIndex& b) {
        a.check_length(b);
        for (std::size_t j = 0; j < a.e_.size(); ++j)
            if (a.e_[j] > 0 && b.e_[j] > 0) return false;
        return true;
    }

    // z^alpha / z_j
    MultiIndex lowered(std::size_t j) const {
        std::vector<int> e = e_;
        if (e.at(j) == 0) throw DimensionError("MultiIndex: variable does not divide");
        --e[j];
        return MultiIndex(std::move(e));
    }

    // (z_l / z_j) * z^alpha
    MultiIndex exchanged(std::size_t l, std::size_t j) const {
        std::vector<int> e = e_;
        if (e.at(j) == 0) throw DimensionError("MultiIndex: variable does not divide");
        --e[j];
        ++e.at(l);
        return MultiIndex(std::move(e));
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return !(*this == o); }

    // Container ordering (plain lexicographic on exponents); unrelated to any
    // monomial order, used only to key maps and sets deterministically.
    bool operator<(const MultiIndex& o) const { return e_ < o.e_; }

  private:
    void check_length(const MultiIndex& o) const {
        if (e_.size() != o.e_.size())
            throw DimensionError("MultiIndex: length mismatch");
    }

    std::vector<int> e_;
    int deg_ = 0;
};

// The four multiplicative monomial orders used by the toolkit.  The classical
// pair puts higher total degree first; the Green pair reverses degrees (lower
// total degree is greater, so 1 is the greatest monomial), which is the
// convention needed for initial monomials of affine spans.  Ties within a
// degree are broken identically in both conventions: lexicographically for the
// *GrLex kinds, by reverse lexicography for the *GrevLex kinds, with the first
// roster variable greatest.
enum class MonomialOrder { GrevLex, GrLex, GreenGrevLex, GreenGrLex };

inline bool is_green(MonomialOrder ord) {
    return ord == MonomialOrder::GreenGrevLex || ord == MonomialOrder::GreenGrLex;
}

inline bool is_classical(MonomialOrder ord) { return !is_green(ord); }

inline bool is_lex_tiebreak(MonomialOrder ord) {
    return ord == MonomialOrder::GrLex || ord == MonomialOrder::GreenGrLex;
}

inline std::string order_name(MonomialOrder ord) {
    switch (ord) {
        case MonomialOrder::GrevLex: return "grevlex";
        case MonomialOrder::GrLex: return "grlex";
        case MonomialOrder::GreenGrevLex: return "green-grevlex";
        case MonomialOrder::GreenGrLex: return "green-grlex";
    }
    return "?";
}

inline std::optional<MonomialOrder> parse_order_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::GrevLex;
    if (name == "grlex") return MonomialOrder::GrLex;
    if (name == "green-grevlex") return MonomialOrder::GreenGrevLex;
    if (name == "green-grlex") return MonomialOrder::GreenGrLex;
    return std::nullopt;
}

inline std::strong_ordering compare_monomials(const MultiIndex& a, const MultiIndex& b,
                                              MonomialOrder ord) {
    if (a.size() != b.size())
        throw DimensionError("compare_monomials: length mismatch");
    if (a.degree() != b.degree()) {
        const bool a_greater =
            is_green(ord) ? a.degree() < b.degree() : a.degree() > b.degree();
        return a_greater ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (is_lex_tiebreak(ord)) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j] != b[j])
                return a[j] > b[j] ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
        }
    } else {
        for (std::size_t j = a.size(); j-- > 0;) {
            if (a[j] != b[j])
                return a[j] < b[j] ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

// Comparator placing greater monomials first.
struct MonomialDescending {
    MonomialOrder ord;
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return compare_monomials(a, b, ord) == std::strong_ordering::greater;
    }
};

inline std::string monomial_to_string(const MultiIndex& m,
                                      const std::vector<std::string>& vars) {
    if (m.size() != vars.size())
        throw DimensionError("monomial_to_string: roster length mismatch");
    std::string out;
    for (std::size_t j = 0; j < vars.size(); ++j) {
        if (m[j] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[j];
        if (m[j] > 1) out += "^" + std::to_string(m[j]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace ginmap

#endif
