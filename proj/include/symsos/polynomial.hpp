#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "symsos/errors.hpp"
#include "symsos/monomial.hpp"
#include "symsos/perm.hpp"
#include "symsos/rational.hpp"

namespace symsos {

using Cplx = std::complex<double>;

namespace coeff {

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(double c) { return c == 0.0; }
inline bool is_zero(const Cplx& c) { return c == Cplx(0.0, 0.0); }

inline std::string format(const Rational& c) { return to_string(c); }
inline std::string format(double c) {
    std::ostringstream os;
    os.precision(12);
    os << c;
    return os.str();
}
inline std::string format(const Cplx& c) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    return os.str();
}

}  // namespace coeff

// Sparse multivariate polynomial over coefficient type C. Terms are kept
// in graded-lex order with no stored zero coefficient; all exponent
// vectors have length nvars.
template <class C>
class BasicPolynomial {
public:
    using Terms = std::map<Monomial, C, GradedLexLess>;

    explicit BasicPolynomial(int nvars) : nvars_(nvars) {
        if (nvars <= 0) throw DimensionError("nvars must be positive");
    }

    static BasicPolynomial constant(int nvars, C value) {
        BasicPolynomial p(nvars);
        p.add_term(Monomial(nvars, 0), std::move(value));
        return p;
    }

    static BasicPolynomial variable(int nvars, int index, int power = 1) {
        if (index < 0 || index >= nvars) throw DimensionError("variable index out of range");
        BasicPolynomial p(nvars);
        Monomial m(nvars, 0);
        m[index] = power;
        p.add_term(std::move(m), C(1));
        return p;
    }

    static BasicPolynomial monomial(int nvars, Monomial m, C c = C(1)) {
        if (static_cast<int>(m.size()) != nvars) throw DimensionError("exponent vector length mismatch");
        BasicPolynomial p(nvars);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : symsos::degree(terms_.rbegin()->first); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Monomial m, C c) {
        if (static_cast<int>(m.size()) != nvars_) throw DimensionError("exponent vector length mismatch");
        if (coeff::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (coeff::is_zero(it->second)) terms_.erase(it);
        }
    }

    BasicPolynomial& operator+=(const BasicPolynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    BasicPolynomial& operator-=(const BasicPolynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, C(-c));
        return *this;
    }

    BasicPolynomial& operator*=(const C& s) {
        if (coeff::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
    friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
    friend BasicPolynomial operator*(BasicPolynomial a, const C& s) { return a *= s; }
    friend BasicPolynomial operator*(const C& s, BasicPolynomial a) { return a *= s; }

    friend BasicPolynomial operator-(const BasicPolynomial& a) {
        BasicPolynomial r(a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, C(-c));
        return r;
    }

    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        a.check_same(b);
        BasicPolynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }

    bool operator==(const BasicPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Induced action p^s with p^s(X) = p(s^{-1} X); on monomials the
    // exponent at position i moves to position s(i).
    BasicPolynomial acted(const Perm& s) const {
        if (s.size() != nvars_) throw DimensionError("permutation acts on wrong number of variables");
        BasicPolynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            Monomial im(nvars_);
            for (int i = 0; i < nvars_; ++i) im[s(i)] = m[i];
            r.terms_.emplace(std::move(im), c);
        }
        return r;
    }

    // Graded-lex largest term, or nullptr for the zero polynomial.
    const std::pair<const Monomial, C>* leading() const {
        return terms_.empty() ? nullptr : &*terms_.rbegin();
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += coeff::format(it->second);
            if (symsos::degree(it->first) > 0) out += " * " + monomial_to_string(it->first);
        }
        return out;
    }

private:
    void check_same(const BasicPolynomial& o) const {
        if (nvars_ != o.nvars_) throw DimensionError("polynomial variable count mismatch");
    }

    int nvars_;
    Terms terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using RealPolynomial = BasicPolynomial<double>;
using ComplexPolynomial = BasicPolynomial<Cplx>;

inline RealPolynomial to_real(const Polynomial& p) {
    RealPolynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, to_double(c));
    return r;
}

inline RealPolynomial real_part(const ComplexPolynomial& p) {
    RealPolynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.real());
    return r;
}

inline RealPolynomial imag_part(const ComplexPolynomial& p) {
    RealPolynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.imag());
    return r;
}

}  // namespace symsos
