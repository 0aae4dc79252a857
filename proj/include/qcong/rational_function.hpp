#ifndef QCONG_RATIONAL_FUNCTION_HPP
#define QCONG_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>

#include "qcong/polynomial.hpp"
#include "qcong/polynomial_gcd.hpp"

namespace qcong {

/// Quotient of polynomials in canonical form: numerator and denominator
/// coprime, denominator monic, zero represented as 0/1. Every operation
/// returns a canonical value, so equality is plain field-wise comparison.
class RationalFunction {
public:
    RationalFunction() : den_(Rat(1)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Rat(1)) {}  // NOLINT: implicit by design
    explicit RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}

    static RationalFunction make(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw DivisionByZeroError();
        if (num.is_zero()) return {};
        Polynomial g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = exact_divide(num, g);
            den = exact_divide(den, g);
        }
        if (!den.is_monic()) {
            Rat ilc = Rat(1) / den.leading();
            num = num * ilc;
            den = den * ilc;
        }
        return RationalFunction(std::move(num), std::move(den), Trusted{});
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
        if (f.is_zero()) return g;
        if (g.is_zero()) return f;
        Polynomial g0 = poly_gcd(f.den_, g.den_);
        if (g0.is_one()) {
            // Coprime denominators: the sum is already canonical.
            Polynomial num = f.num_ * g.den_ + g.num_ * f.den_;
            if (num.is_zero()) return {};
            return RationalFunction(std::move(num), f.den_ * g.den_, Trusted{});
        }
        Polynomial fr = exact_divide(f.den_, g0);
        Polynomial gr = exact_divide(g.den_, g0);
        return make(f.num_ * gr + g.num_ * fr, f.den_ * gr);
    }

    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
        return f + (-g);
    }

    RationalFunction operator-() const {
        RationalFunction r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
        if (f.is_zero() || g.is_zero()) return {};
        // Cross-cancel once; the product of the reduced parts is canonical.
        Polynomial g1 = poly_gcd(f.num_, g.den_);
        Polynomial g2 = poly_gcd(g.num_, f.den_);
        Polynomial num = (g1.is_one() ? f.num_ : exact_divide(f.num_, g1)) *
                         (g2.is_one() ? g.num_ : exact_divide(g.num_, g2));
        Polynomial den = (g2.is_one() ? f.den_ : exact_divide(f.den_, g2)) *
                         (g1.is_one() ? g.den_ : exact_divide(g.den_, g1));
        if (!den.is_monic()) {
            Rat ilc = Rat(1) / den.leading();
            num = num * ilc;
            den = den * ilc;
        }
        return RationalFunction(std::move(num), std::move(den), Trusted{});
    }

    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
        return f * g.reciprocal();
    }

    RationalFunction reciprocal() const {
        if (is_zero()) throw DivisionByZeroError();
        Rat ilc = Rat(1) / num_.leading();
        return RationalFunction(den_ * ilc, num_ * ilc, Trusted{});
    }

    RationalFunction pow(unsigned long e) const {
        if (e == 0) return RationalFunction(Rat(1));
        // num and den are coprime, so powers stay coprime.
        Polynomial n = num_.pow(e);
        Polynomial d = den_.pow(e);
        return RationalFunction(std::move(n), std::move(d), Trusted{});
    }

    /// x^e for signed e (negative exponent inverts first).
    RationalFunction pow_signed(long e) const {
        if (e >= 0) return pow(static_cast<unsigned long>(e));
        return reciprocal().pow(static_cast<unsigned long>(-e));
    }

    Rat evaluate(const Rat& x) const {
        Rat d = den_.evaluate(x);
        if (d == 0) throw DivisionByZeroError("rational function evaluated at a pole");
        return num_.evaluate(x) / d;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    struct Trusted {};
    RationalFunction(Polynomial num, Polynomial den, Trusted)
        : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction operator*(const RationalFunction& f, const Rat& s) {
    return f * RationalFunction(s);
}
inline RationalFunction operator*(const Rat& s, const RationalFunction& f) {
    return f * RationalFunction(s);
}

}  // namespace qcong

#endif
