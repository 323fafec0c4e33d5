#ifndef GINMAP_TOWER_HPP
#define GINMAP_TOWER_HPP

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>

#include "ginmap/errors.hpp"
#include "ginmap/matrix.hpp"
#include "ginmap/rational.hpp"

namespace ginmap {

/*
 * TowerElement: an element of Q(i, 2^{1/4}, sqrt(3)), a degree-16 extension
 * of Q.  Coordinates are rationals over the basis i^e0 * t^e1 * s^e2 with
 * t = 2^{1/4}, s = sqrt(3), e0 in {0,1}, e1 in {0..3}, e2 in {0,1}, and
 * reduction rules i^2 = -1, t^4 = 2, s^2 = 3.  This field contains every
 * coefficient that occurs in the built-in map catalog (sqrt(2) = t^2, i,
 * sqrt(3), 2^{1/4}) and is closed under complex conjugation, which fixes
 * t and s and negates i.
 *
 * Values are immutable in practice: every operation returns a new element.
 * Only exact zero tests are ever performed; there is no ordering or sign
 * computation on tower elements.
 */
class TowerElement {
  public:
    static constexpr int kDim = 16;

    TowerElement() = default;
    TowerElement(int n) { c_[0] = n; }  // NOLINT: implicit by design
    TowerElement(const Rational& q) { c_[0] = q; }

    static int index(int e0, int e1, int e2) { return e0 * 8 + e1 * 2 + e2; }

    static TowerElement basis_element(int e0, int e1, int e2) {
        TowerElement x;
        x.c_[index(e0, e1, e2)] = 1;
        return x;
    }

    static TowerElement i() { return basis_element(1, 0, 0); }
    static TowerElement root4_2() { return basis_element(0, 1, 0); }
    static TowerElement sqrt2() { return basis_element(0, 2, 0); }
    static TowerElement sqrt3() { return basis_element(0, 0, 1); }

    const Rational& coord(int idx) const { return c_[idx]; }
    const Rational& coord(int e0, int e1, int e2) const { return c_[index(e0, e1, e2)]; }

    bool is_zero() const {
        for (const Rational& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }

    // True when the element lies in Q (only the 1-coordinate may be nonzero).
    bool is_rational() const {
        for (int k = 1; k < kDim; ++k)
            if (sgn(c_[k]) != 0) return false;
        return true;
    }

    const Rational& rational_part() const { return c_[0]; }

    bool operator==(const TowerElement& o) const { return c_ == o.c_; }
    bool operator!=(const TowerElement& o) const { return !(*this == o); }

    TowerElement operator+(const TowerElement& o) const {
        TowerElement out;
        for (int k = 0; k < kDim; ++k) out.c_[k] = c_[k] + o.c_[k];
        return out;
    }

    TowerElement operator-(const TowerElement& o) const {
        TowerElement out;
        for (int k = 0; k < kDim; ++k) out.c_[k] = c_[k] - o.c_[k];
        return out;
    }

    TowerElement operator-() const {
        TowerElement out;
        for (int k = 0; k < kDim; ++k) out.c_[k] = -c_[k];
        return out;
    }

    TowerElement operator*(const TowerElement& o) const {
        TowerElement out;
        for (int ia = 0; ia < kDim; ++ia) {
            if (sgn(c_[ia]) == 0) continue;
            const int a0 = ia >> 3, a1 = (ia >> 1) & 3, a2 = ia & 1;
            for (int ib = 0; ib < kDim; ++ib) {
                if (sgn(o.c_[ib]) == 0) continue;
                const int b0 = ib >> 3, b1 = (ib >> 1) & 3, b2 = ib & 1;
                long factor = (a0 + b0 >= 2) ? -1 : 1;   // i^2 = -1
                if (a1 + b1 >= 4) factor *= 2;           // t^4 = 2
                if (a2 + b2 >= 2) factor *= 3;           // s^2 = 3
                const int idx = index((a0 + b0) & 1, (a1 + b1) & 3, (a2 + b2) & 1);
                out.c_[idx] += factor * c_[ia] * o.c_[ib];
            }
        }
        return out;
    }

    TowerElement& operator+=(const TowerElement& o) { return *this = *this + o; }
    TowerElement& operator-=(const TowerElement& o) { return *this = *this - o; }
    TowerElement& operator*=(const TowerElement& o) { return *this = *this * o; }

    // Complex conjugation: fixes t and s, sends i to -i.
    TowerElement conj() const {
        TowerElement out = *this;
        for (int k = 8; k < kDim; ++k) out.c_[k] = -out.c_[k];
        return out;
    }

    // Multiplicative inverse.  A single basis-monomial element inverts in
    // closed form; the general case solves the 16x16 rational linear system
    // "multiply-by-x = 1".
    TowerElement inv() const {
        int support = -1;
        int nnz = 0;
        for (int k = 0; k < kDim; ++k) {
            if (sgn(c_[k]) != 0) {
                support = k;
                ++nnz;
            }
        }
        if (nnz == 0) throw ZeroDivisionError("TowerElement::inv: division by zero");
        if (nnz == 1) {
            const int e0 = support >> 3, e1 = (support >> 1) & 3, e2 = support & 1;
            // (c * i^e0 t^e1 s^e2)^-1 = i^e0 t^{(4-e1)%4} s^{(2-e2)%2} / (c * f),
            // with f = (-1)^e0 * 2^{[e1>0]} * 3^{[e2>0]}.
            long f = (e0 == 1) ? -1 : 1;
            if (e1 > 0) f *= 2;
            if (e2 > 0) f *= 3;
            TowerElement out = basis_element(e0, (4 - e1) % 4, (2 - e2) % 2);
            out.c_[index(e0, (4 - e1) % 4, (2 - e2) % 2)] = rational(1, 1) / (c_[support] * f);
            return out;
        }
        Matrix<Rational> mult(kDim, kDim);
        for (int j = 0; j < kDim; ++j) {
            const TowerElement col = *this * basis_element(j >> 3, (j >> 1) & 3, j & 1);
            for (int k = 0; k < kDim; ++k) mult(k, j) = col.c_[k];
        }
        std::vector<Rational> e0(kDim, Rational(0));
        e0[0] = 1;
        const auto sol = solve_linear(mult, e0);
        if (!sol) throw ZeroDivisionError("TowerElement::inv: singular multiplication map");
        TowerElement out;
        for (int k = 0; k < kDim; ++k) out.c_[k] = (*sol)[k];
        return out;
    }

    TowerElement operator/(const TowerElement& o) const { return *this * o.inv(); }

    // Floating-point value, for display only; no computation uses it.
    std::complex<double> approx() const {
        const double t = std::pow(2.0, 0.25);
        const double s = std::sqrt(3.0);
        std::complex<double> out(0.0, 0.0);
        for (int k = 0; k < kDim; ++k) {
            if (sgn(c_[k]) == 0) continue;
            const int e0 = k >> 3, e1 = (k >> 1) & 3, e2 = k & 1;
            double mag = c_[k].get_d() * std::pow(t, e1) * (e2 ? s : 1.0);
            out += e0 ? std::complex<double>(0.0, mag) : std::complex<double>(mag, 0.0);
        }
        return out;
    }

    // Textual form compatible with the coefficient literal syntax:
    // rationals, i, sqrt(2), sqrt(3), root4(2).
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < kDim; ++k) {
            if (sgn(c_[k]) == 0) continue;
            Rational q = c_[k];
            if (first) {
                if (sgn(q) < 0) {
                    os << "-";
                    q = -q;
                }
            } else {
                os << (sgn(q) < 0 ? " - " : " + ");
                q = abs(q);
            }
            first = false;
            const int e0 = k >> 3, e1 = (k >> 1) & 3, e2 = k & 1;
            std::string gens;
            if (e0) gens += "i";
            if (e1 == 1) gens += (gens.empty() ? "" : "*") + std::string("root4(2)");
            if (e1 == 2) gens += (gens.empty() ? "" : "*") + std::string("sqrt(2)");
            if (e1 == 3) gens += (gens.empty() ? "" : "*") + std::string("root4(2)^3");
            if (e2) gens += (gens.empty() ? "" : "*") + std::string("sqrt(3)");
            if (gens.empty()) {
                os << q.get_str();
            } else if (q == 1) {
                os << gens;
            } else {
                os << q.get_str() << "*" << gens;
            }
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    std::array<Rational, kDim> c_{};
};

inline TowerElement conj(const TowerElement& x) { return x.conj(); }

// Square root of a rational inside the tower, when it exists: r = m^2 * u
// with squarefree u in {1, 2, 3, 6} gives sqrt(r) = m * sqrt(u); negative r
// picks up a factor of i.  Returns nullopt otherwise.
inline std::optional<TowerElement> sqrt_in_tower(const Rational& r) {
    if (sgn(r) == 0) return TowerElement(0);
    if (sgn(r) < 0) {
        auto pos = sqrt_in_tower(-r);
        if (!pos) return std::nullopt;
        return TowerElement::i() * *pos;
    }
    // sqrt(p/q) = sqrt(p*q)/q; split p*q into square * squarefree.
    mpz_class n = r.get_num() * r.get_den();
    mpz_class square_root = 1;
    mpz_class squarefree = 1;
    for (mpz_class p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int mult = 0;
        while (n % p == 0) {
            n /= p;
            ++mult;
        }
        for (int k = 0; k < mult / 2; ++k) square_root *= p;
        if (mult % 2 != 0) squarefree *= p;
    }
    squarefree *= n;  // leftover prime
    TowerElement radical;
    if (squarefree == 1)
        radical = TowerElement(1);
    else if (squarefree == 2)
        radical = TowerElement::sqrt2();
    else if (squarefree == 3)
        radical = TowerElement::sqrt3();
    else if (squarefree == 6)
        radical = TowerElement::sqrt2() * TowerElement::sqrt3();
    else
        return std::nullopt;
    return TowerElement(rational(square_root, r.get_den())) * radical;
}

}  // namespace ginmap

#endif
