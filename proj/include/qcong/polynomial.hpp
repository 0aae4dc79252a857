#ifndef QCONG_POLYNOMIAL_HPP
#define QCONG_POLYNOMIAL_HPP

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcong/errors.hpp"
#include "qcong/rational.hpp"

namespace qcong {

struct DivRem;

/// Dense univariate polynomial over the rationals. Coefficient index equals
/// the exponent. The zero polynomial is the empty coefficient vector; a
/// nonzero polynomial never stores a zero leading coefficient, so degree()
/// is only defined for nonzero polynomials (no -1 sentinel arithmetic).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rat& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit Polynomial(long constant) : Polynomial(Rat(constant)) {}

    static Polynomial from_coeffs(std::vector<Rat> coeffs) {
        Polynomial p;
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    /// The variable itself (named q throughout, but the class is agnostic).
    static Polynomial variable() { return monomial(Rat(1), 1); }

    static Polynomial monomial(const Rat& coeff, std::size_t power) {
        Polynomial p;
        if (coeff != 0) {
            p.c_.assign(power + 1, Rat(0));
            p.c_[power] = coeff;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    int degree() const {
        assert(!is_zero() && "degree of the zero polynomial is undefined");
        return static_cast<int>(c_.size()) - 1;
    }

    const Rat& coeff(std::size_t power) const {
        static const Rat kZero(0);
        return power < c_.size() ? c_[power] : kZero;
    }

    const Rat& leading() const {
        assert(!is_zero());
        return c_.back();
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    bool has_integer_coeffs() const {
        for (const Rat& x : c_)
            if (x.get_den() != 1) return false;
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (Rat& x : r.c_) x = -x;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const Polynomial& lo = a.c_.size() <= b.c_.size() ? a : b;
        const Polynomial& hi = a.c_.size() <= b.c_.size() ? b : a;
        Polynomial r(hi);
        for (std::size_t i = 0; i < lo.c_.size(); ++i) r.c_[i] += lo.c_[i];
        r.normalize();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // Clear denominators once so the inner loop is pure integer work.
        std::vector<Int> za, zb;
        Int da, db;
        scaled_integers(a.c_, za, da);
        scaled_integers(b.c_, zb, db);
        std::vector<Int> prod(za.size() + zb.size() - 1, Int(0));
        for (std::size_t i = 0; i < za.size(); ++i) {
            if (za[i] == 0) continue;
            for (std::size_t j = 0; j < zb.size(); ++j) {
                if (zb[j] == 0) continue;
                mpz_addmul(prod[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
            }
        }
        Int den = da * db;
        Polynomial r;
        r.c_.reserve(prod.size());
        for (Int& z : prod) r.c_.push_back(make_rat(z, den));
        r.normalize();
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Rat& s) {
        if (s == 0) return {};
        Polynomial r(a);
        for (Rat& x : r.c_) x *= s;
        return r;
    }
    friend Polynomial operator*(const Rat& s, const Polynomial& a) { return a * s; }

    Polynomial pow(unsigned long e) const {
        Polynomial r(Rat(1));
        Polynomial base(*this);
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    Rat evaluate(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    /// Multiplies by q^k in place.
    void shift_up(std::size_t k) {
        if (is_zero() || k == 0) return;
        c_.insert(c_.begin(), k, Rat(0));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rat v = c_[i];
            if (out.empty()) {
                if (sgn(v) < 0) out += "-";
            } else {
                out += sgn(v) < 0 ? " - " : " + ";
            }
            Rat a = abs(v);
            if (a != 1 || i == 0) out += rat_str(a);
            if (i > 0) {
                if (a != 1) out += "*";
                out += "q";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    /// Coefficients as strings, lowest degree first (report serialization).
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const Rat& x : c_) out.push_back(rat_str(x));
        return out;
    }

    /// Writes a * D as integers, D = lcm of coefficient denominators.
    static void scaled_integers(const std::vector<Rat>& c, std::vector<Int>& z, Int& den) {
        den = 1;
        for (const Rat& x : c)
            if (x.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        z.clear();
        z.reserve(c.size());
        for (const Rat& x : c) z.push_back(x.get_num() * (den / x.get_den()));
    }

private:
    std::vector<Rat> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    friend DivRem divrem(const Polynomial& a, const Polynomial& b);
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

/// Exact division with remainder: a = b*quotient + remainder,
/// deg(remainder) < deg(b).
inline DivRem divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.is_zero() || (!a.is_constant() && a.degree() < b.degree()) ||
        (a.is_constant() && !b.is_constant()))
        return {Polynomial(), a};

    const std::size_t db = b.c_.size() - 1;

    // Monic integer divisors (cyclotomic moduli, q^n - 1, ...) stay in
    // integer arithmetic end to end.
    if (b.is_monic() && b.has_integer_coeffs()) {
        std::vector<Int> rem, zb;
        Int den, bden;
        Polynomial::scaled_integers(a.c_, rem, den);
        Polynomial::scaled_integers(b.c_, zb, bden);
        std::vector<Int> quot(rem.size() - db, Int(0));
        for (std::size_t i = quot.size(); i-- > 0;) {
            if (rem[i + db] == 0) continue;
            Int c = rem[i + db];
            quot[i] = c;
            rem[i + db] = 0;
            for (std::size_t j = 0; j < db; ++j)
                if (zb[j] != 0) mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), zb[j].get_mpz_t());
        }
        rem.resize(db);
        Polynomial q, r;
        q.c_.reserve(quot.size());
        for (Int& z : quot) q.c_.push_back(make_rat(z, den));
        q.normalize();
        r.c_.reserve(rem.size());
        for (Int& z : rem) r.c_.push_back(make_rat(z, den));
        r.normalize();
        return {std::move(q), std::move(r)};
    }

    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quot(rem.size() - db, Rat(0));
    const Rat inv_lc = Rat(1) / b.leading();
    for (std::size_t i = quot.size(); i-- > 0;) {
        if (rem[i + db] == 0) continue;
        Rat c = rem[i + db] * inv_lc;
        quot[i] = c;
        rem[i + db] = 0;
        for (std::size_t j = 0; j < db; ++j)
            if (b.c_[j] != 0) rem[i + j] -= c * b.c_[j];
    }
    rem.resize(db);
    return {Polynomial::from_coeffs(std::move(quot)), Polynomial::from_coeffs(std::move(rem))};
}

/// Division known to be exact; throws if a remainder shows up.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    DivRem dr = divrem(a, b);
    if (!dr.remainder.is_zero()) throw Error("exact_divide: division left a remainder");
    return std::move(dr.quotient);
}

inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) throw DivisionByZeroError("monic of zero polynomial");
    if (p.is_monic()) return p;
    return p * (Rat(1) / p.leading());
}

}  // namespace qcong

#endif
