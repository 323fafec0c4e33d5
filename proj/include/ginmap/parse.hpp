#ifndef GINMAP_PARSE_HPP
#define GINMAP_PARSE_HPP

#include <cctype>
#include <string>
#include <vector>

#include "ginmap/hermitian.hpp"
#include "ginmap/poly.hpp"

namespace ginmap {

/*
 * Recursive-descent parser for the polynomial input language.
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := '-' factor | primary ('^' INT)?
 *   primary:= INT ('/' INT)? | 'i' | 'sqrt' '(' (2|3) ')' | 'root4' '(' 2 ')'
 *           | VAR | '(' expr ')'
 *
 * Multiplication must be written explicitly; exponents are non-negative
 * integer literals.  Whitespace is insignificant.
 */
class PolynomialParser {
  public:
    PolynomialParser(std::string text, std::vector<std::string> vars)
        : text_(std::move(text)), vars_(std::move(vars)) {
        if (vars_.empty()) throw RosterMismatchError("parse: empty variable roster");
    }

    Polynomial parse() {
        pos_ = 0;
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    Polynomial parse_expr() {
        Polynomial p = parse_term();
        for (;;) {
            if (accept('+')) {
                p += parse_term();
            } else if (accept('-')) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (accept('*')) p = p * parse_factor();
        return p;
    }

    Polynomial parse_factor() {
        if (accept('-')) return -parse_factor();
        Polynomial p = parse_primary();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            const std::size_t caret = pos_;
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw NegativeExponentError("negative exponent", pos_);
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected a non-negative integer exponent", caret + 1);
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    Polynomial parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            expect(')');
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        throw ParseError("unexpected character", pos_);
    }

    mpz_class parse_integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return mpz_class(text_.substr(start, pos_ - start));
    }

    Polynomial parse_rational() {
        const mpz_class num = parse_integer();
        mpz_class den = 1;
        if (accept('/')) {
            den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", pos_);
        }
        return Polynomial::constant(vars_, TowerElement(rational(num, den)));
    }

    Polynomial parse_name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (name == "i")
            return Polynomial::constant(vars_, TowerElement::i());
        if (name == "sqrt" || name == "root4") {
            expect('(');
            const mpz_class arg = parse_integer();
            expect(')');
            if (name == "sqrt" && arg == 2)
                return Polynomial::constant(vars_, TowerElement::sqrt2());
            if (name == "sqrt" && arg == 3)
                return Polynomial::constant(vars_, TowerElement::sqrt3());
            if (name == "root4" && arg == 2)
                return Polynomial::constant(vars_, TowerElement::root4_2());
            throw ParseError("only sqrt(2), sqrt(3) and root4(2) are supported", start);
        }
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if (vars_[j] == name) return Polynomial::variable(vars_, j);
        throw UnknownVariableError("unknown variable '" + name + "'", start);
    }

    std::string text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& vars) {
    return PolynomialParser(text, vars).parse();
}

// Semicolon-separated polynomial list.
inline std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                                     const std::vector<std::string>& vars) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        const std::string piece = text.substr(start, end - start);
        if (piece.find_first_not_of(" \t\r\n") != std::string::npos)
            out.push_back(parse_polynomial(piece, vars));
        if (end == text.size()) break;
        start = end + 1;
    }
    if (out.empty()) throw ParseError("empty polynomial list", 0);
    return out;
}

// Real-form input: a polynomial in z1..zn and w1..wn, where wk stands for
// conj(zk).  The assembled coefficient matrix must be Hermitian, i.e. the
// input must be a real-valued polynomial.
inline HermitianForm parse_real_form(const std::string& text,
                                     const std::vector<std::string>& zvars, int degree) {
    std::vector<std::string> all = zvars;
    std::vector<std::string> wvars;
    wvars.reserve(zvars.size());
    for (const std::string& z : zvars) {
        std::string w = z;
        if (!w.empty() && w.front() == 'z')
            w.front() = 'w';
        else
            w = "conj_" + w;
        wvars.push_back(w);
    }
    all.insert(all.end(), wvars.begin(), wvars.end());
    const Polynomial bipoly = parse_polynomial(text, all);
    HermitianForm form(zvars, degree, true);
    const std::size_t n = zvars.size();
    for (const auto& [m, c] : bipoly.terms()) {
        std::vector<int> holo(m.exponents().begin(), m.exponents().begin() + n);
        std::vector<int> anti(m.exponents().begin() + n, m.exponents().end());
        MultiIndex alpha{std::move(holo)};
        MultiIndex beta{std::move(anti)};
        if (alpha.degree() > degree || beta.degree() > degree)
            throw DegreeError("real form: monomial exceeds the declared degree bound");
        form.add(alpha, beta, c);
    }
    if (!form.is_hermitian())
        throw RealFormError("real form: coefficient matrix is not Hermitian, input is not real-valued");
    return form;
}

}  // namespace ginmap

#endif
