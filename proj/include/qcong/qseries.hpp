#ifndef QCONG_QSERIES_HPP
#define QCONG_QSERIES_HPP

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "qcong/rational_function.hpp"

namespace qcong {

/// A q-object in canonical rational-function form. All auxiliary parameters
/// are folded into the coefficients, so everything stays univariate in q.
using QExpression = RationalFunction;

/// q^e for signed e.
inline RationalFunction q_mon(long e) {
    if (e >= 0) return RationalFunction(Polynomial::monomial(Rat(1), static_cast<std::size_t>(e)));
    return RationalFunction::make(Polynomial(1),
                                  Polynomial::monomial(Rat(1), static_cast<std::size_t>(-e)));
}

/// prod_{j=0}^{count-1} (1 - coeff * q^{first_exp + j*step}), as a polynomial.
inline Polynomial poch_poly(const Rat& coeff, unsigned first_exp, unsigned step, unsigned count) {
    Polynomial acc(Rat(1));
    for (unsigned j = 0; j < count; ++j) {
        Polynomial factor =
            Polynomial(1) - Polynomial::monomial(coeff, first_exp + static_cast<std::size_t>(j) * step);
        acc = acc * factor;
    }
    return acc;
}

/// q-shifted factorial (x; base)_count = prod_{j<count} (1 - x * base^j).
/// Accumulates numerator and denominator separately and canonicalizes once.
inline QExpression q_pochhammer(const RationalFunction& x, const Polynomial& base, unsigned count) {
    Polynomial num(Rat(1)), den(Rat(1));
    Polynomial bp(Rat(1));
    for (unsigned j = 0; j < count; ++j) {
        num = num * (x.denominator() - x.numerator() * bp);
        den = den * x.denominator();
        bp = bp * base;
    }
    return RationalFunction::make(std::move(num), std::move(den));
}

/// [n] = 1 + q + ... + q^{n-1}.
inline QExpression q_integer(unsigned n) {
    if (n == 0) throw Error("q_integer(0) is undefined");
    return RationalFunction(Polynomial::from_coeffs(std::vector<Rat>(n, Rat(1))));
}

/// Truncated basic hypergeometric series
///   sum_{k=0}^{N} (a_1,...,a_{r+1}; base)_k / ((base, b_1,...,b_r; base)_k) z^k.
/// The (base; base)_k factor is implicit; `lower` lists only b_1..b_r.
struct PhiSeriesSpec {
    std::vector<RationalFunction> upper;
    std::vector<RationalFunction> lower;
    Polynomial base;            // monic monomial q^s, s >= 1
    RationalFunction argument;  // z
    unsigned truncation = 0;    // N
};

inline QExpression phi_series(const PhiSeriesSpec& spec) {
    const Polynomial& B = spec.base;
    if (B.is_zero() || B.is_constant() || !B.is_monic() ||
        static_cast<std::size_t>(B.degree()) + 1 != B.coeffs().size() ||
        [&B] {
            for (int i = 0; i < B.degree(); ++i)
                if (B.coeff(static_cast<std::size_t>(i)) != 0) return true;
            return false;
        }())
        throw Error("phi_series base must be a monic monomial q^s with s >= 1");

    // Terms are built by multiplicative ratios; the partial sum always lives
    // over the current (unreduced) term denominator, so the whole sum costs
    // one canonicalization at the end.
    Polynomial t_num(Rat(1)), t_den(Rat(1)), s_num(Rat(1));
    Polynomial bp(Rat(1));  // base^k
    for (unsigned k = 0; k < spec.truncation; ++k) {
        Polynomial rn = spec.argument.numerator();
        Polynomial rd = spec.argument.denominator();
        for (std::size_t i = 0; i < spec.lower.size(); ++i) {
            const RationalFunction& b = spec.lower[i];
            Polynomial fn = b.denominator() - b.numerator() * bp;
            if (fn.is_zero())
                throw ZeroTermDenominator("lower parameter #" + std::to_string(i + 1) +
                                              " zeroes the denominator of term " +
                                              std::to_string(k + 1),
                                          k + 1);
            rn = rn * b.denominator();
            rd = rd * fn;
        }
        rd = rd * (Polynomial(1) - bp * B);  // the implicit (base; base)_k factor
        for (const RationalFunction& a : spec.upper) {
            rn = rn * (a.denominator() - a.numerator() * bp);
            rd = rd * a.denominator();
        }
        if (rn.is_zero()) break;  // an upper parameter terminated the series
        t_num = t_num * rn;
        t_den = t_den * rd;
        s_num = s_num * rd + t_num;
        bp = bp * B;
    }
    return RationalFunction::make(std::move(s_num), std::move(t_den));
}

struct IdentitySides {
    QExpression lhs;
    QExpression rhs;
};

/// Terminating q-Whipple transformation (Andrews form), generic in the base
/// and with rational-function parameters:
///   4phi3[B^{-n}, B^{n+1}, b, -b; -B, c, b^2 B / c; B, B]
///     = B^{n(n+1)/2} (b^2 B^{1-n}/c, c B^{-n}; B^2)_n / ((b^2 B/c, c; B)_n).
inline IdentitySides whipple_a_sides_general(const Polynomial& base, unsigned n,
                                             const RationalFunction& b, const RationalFunction& c) {
    if (b.is_zero() || c.is_zero())
        throw DegenerateParameters("whipple-a parameters must be nonzero");
    RationalFunction B{base};
    RationalFunction b2_over_c = b * b / c;
    PhiSeriesSpec spec;
    spec.upper = {B.pow_signed(-static_cast<long>(n)), B.pow(n + 1), b, -b};
    spec.lower = {-B, c, b2_over_c * B};
    spec.base = base;
    spec.argument = B;
    spec.truncation = n;
    QExpression lhs = phi_series(spec);

    Polynomial base2 = base * base;
    QExpression rhs = B.pow(static_cast<unsigned long>(n) * (n + 1) / 2);
    rhs = rhs * q_pochhammer(b2_over_c * B.pow_signed(1 - static_cast<long>(n)), base2, n);
    rhs = rhs * q_pochhammer(c * B.pow_signed(-static_cast<long>(n)), base2, n);
    rhs = rhs / q_pochhammer(b2_over_c * B, base, n);
    rhs = rhs / q_pochhammer(c, base, n);
    return {std::move(lhs), std::move(rhs)};
}

/// Terminating q-Whipple transformation (Jain form), generic like the above:
///   4phi3[a, B/a, B^{-n}, -B^{-n}; c, B^{1-2n}/c, -B; B, B]
///     = (a c, c B / a; B^2)_n / (c; B)_{2n}.
inline IdentitySides whipple_b_sides_general(const Polynomial& base, unsigned n,
                                             const RationalFunction& a, const RationalFunction& c) {
    if (a.is_zero() || c.is_zero())
        throw DegenerateParameters("whipple-b parameters must be nonzero");
    RationalFunction B{base};
    RationalFunction Bn = B.pow_signed(-static_cast<long>(n));
    PhiSeriesSpec spec;
    spec.upper = {a, B / a, Bn, -Bn};
    spec.lower = {c, B.pow_signed(1 - 2 * static_cast<long>(n)) / c, -B};
    spec.base = base;
    spec.argument = B;
    spec.truncation = n;
    QExpression lhs = phi_series(spec);

    Polynomial base2 = base * base;
    QExpression rhs = q_pochhammer(a * c, base2, n) * q_pochhammer(c * B / a, base2, n) /
                      q_pochhammer(c, base, 2 * n);
    return {std::move(lhs), std::move(rhs)};
}

inline IdentitySides whipple_a_sides(unsigned n, const Rat& b, const Rat& c) {
    if (b == 0 || c == 0) throw DegenerateParameters("whipple-a parameters must be nonzero");
    return whipple_a_sides_general(Polynomial::variable(), n, RationalFunction(Polynomial(b)),
                                   RationalFunction(Polynomial(c)));
}

inline IdentitySides whipple_b_sides(unsigned n, const Rat& a, const Rat& c) {
    if (a == 0 || c == 0) throw DegenerateParameters("whipple-b parameters must be nonzero");
    return whipple_b_sides_general(Polynomial::variable(), n, RationalFunction(Polynomial(a)),
                                   RationalFunction(Polynomial(c)));
}

/// Central truncated sum shared by several congruences:
///   sum_{k=0}^{(n-1)/2} (q; q^2)_k^2 (q^2; q^4)_k
///                       / ((q^2; q^2)_k^2 (q^4; q^4)_k) * q^{2k}.
inline QExpression central_q_sum(unsigned n) {
    if (n == 0 || n % 2 == 0) throw WrongResidueClass("central_q_sum requires odd n");
    const unsigned K = (n - 1) / 2;
    Polynomial t_num(Rat(1)), t_den(Rat(1)), s_num(Rat(1));
    const Polynomial q2 = Polynomial::monomial(Rat(1), 2);
    for (unsigned k = 0; k < K; ++k) {
        Polynomial f1 = Polynomial(1) - Polynomial::monomial(Rat(1), 2 * k + 1);
        Polynomial f2 = Polynomial(1) - Polynomial::monomial(Rat(1), 4 * k + 2);
        Polynomial g1 = Polynomial(1) - Polynomial::monomial(Rat(1), 2 * k + 2);
        Polynomial g2 = Polynomial(1) - Polynomial::monomial(Rat(1), 4 * k + 4);
        Polynomial rn = f1 * f1 * f2 * q2;
        Polynomial rd = g1 * g1 * g2;
        t_num = t_num * rn;
        t_den = t_den * rd;
        s_num = s_num * rd + t_num;
    }
    return RationalFunction::make(std::move(s_num), std::move(t_den));
}

/// Closed form congruent to the central sum modulo Phi_n(q)^3 for
/// n = 1 (mod 4):
///   q^{(n-1)/2} (q^2; q^4)_m^2 / (q^4; q^4)_m^2
///     * {1 + 2 [n]^2 sum_{i=1}^{m} q^{4i-2} / [4i-2]^2},  m = (n-1)/4.
inline QExpression thm1_rhs(unsigned n) {
    if (n % 4 != 1) throw WrongResidueClass("thm1_rhs requires n = 1 (mod 4)");
    const unsigned m = (n - 1) / 4;
    Polynomial p2 = poch_poly(Rat(1), 2, 4, m);
    Polynomial p4 = poch_poly(Rat(1), 4, 4, m);
    QExpression inner;
    for (unsigned i = 1; i <= m; ++i) {
        QExpression bracket = q_integer(4 * i - 2);
        inner = inner + q_mon(4 * i - 2) / (bracket * bracket);
    }
    QExpression nsq = q_integer(n) * q_integer(n);
    QExpression brace = RationalFunction(Polynomial(1)) + Rat(2) * nsq * inner;
    return q_mon((n - 1) / 2) * RationalFunction::make(p2 * p2, p4 * p4) * brace;
}

/// Closed form congruent to the central sum modulo Phi_n(q)^2 (odd n):
/// (q^2; q^4)_m^2 / (q^4; q^4)_m^2 when n = 1 (mod 4), and 0 when n = 3 (mod 4).
inline QExpression guo_a_rhs(unsigned n) {
    if (n == 0 || n % 2 == 0) throw WrongResidueClass("guo_a_rhs requires odd n");
    if (n % 4 == 3) return {};
    const unsigned m = (n - 1) / 4;
    Polynomial p2 = poch_poly(Rat(1), 2, 4, m);
    Polynomial p4 = poch_poly(Rat(1), 4, 4, m);
    return RationalFunction::make(p2 * p2, p4 * p4);
}

/// Closed form congruent to the central sum modulo Phi_n(q)^3 for
/// n = 3 (mod 4): [n] (q^3; q^4)_M / (q^5; q^4)_M, M = (n-1)/2.
inline QExpression guo_b_rhs(unsigned n) {
    if (n % 4 != 3) throw WrongResidueClass("guo_b_rhs requires n = 3 (mod 4)");
    const unsigned M = (n - 1) / 2;
    return q_integer(n) *
           RationalFunction::make(poch_poly(Rat(1), 3, 4, M), poch_poly(Rat(1), 5, 4, M));
}

/// Two-parameter truncated sum
///   sum_{k=0}^{(n-1)/2} (aq, q/a, q/b, -q/b; q^2)_k
///                       / ((q^2, q^2, -q^2, q^2/b^2; q^2)_k) * q^{2k}.
inline QExpression thm2_lhs(unsigned n, const Rat& a, const Rat& b) {
    if (n == 0 || n % 2 == 0) throw WrongResidueClass("thm2_lhs requires odd n");
    if (a == 0 || b == 0) throw DegenerateParameters("thm2_lhs requires a, b nonzero");
    PhiSeriesSpec spec;
    spec.upper = {RationalFunction(Polynomial::monomial(a, 1)),
                  RationalFunction(Polynomial::monomial(Rat(1) / a, 1)),
                  RationalFunction(Polynomial::monomial(Rat(1) / b, 1)),
                  RationalFunction(Polynomial::monomial(-Rat(1) / b, 1))};
    spec.lower = {RationalFunction(Polynomial::monomial(Rat(1), 2)),
                  RationalFunction(Polynomial::monomial(Rat(-1), 2)),
                  RationalFunction(Polynomial::monomial(Rat(1) / (b * b), 2))};
    spec.base = Polynomial::monomial(Rat(1), 2);
    spec.argument = RationalFunction(Polynomial::monomial(Rat(1), 2));
    spec.truncation = (n - 1) / 2;
    return phi_series(spec);
}

namespace detail_qs {
inline void check_omega_params(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw DegenerateParameters("parameters must be nonzero");
    if (a == b || a * b == 1)
        throw DegenerateParameters("(a-b)(1-ab) = 0: closed form undefined");
}
}  // namespace detail_qs

/// (b - q^n)(ab - 1 - a^2 + a q^n) / ((a - b)(1 - ab)) -- the CRT weight that
/// is 1 modulo (1 - a q^n)(a - q^n).
inline QExpression omega_weight_first(unsigned n, const Rat& a, const Rat& b) {
    detail_qs::check_omega_params(a, b);
    Polynomial factor1 = Polynomial(b) - Polynomial::monomial(Rat(1), n);
    Polynomial factor2 = Polynomial(a * b - 1 - a * a) + Polynomial::monomial(a, n);
    Rat w = Rat(1) / ((a - b) * (1 - a * b));
    return RationalFunction(factor1 * factor2 * w);
}

/// (1 - a q^n)(a - q^n) / ((a - b)(1 - ab)) -- the CRT weight that is 1
/// modulo (b - q^n).
inline QExpression omega_weight_second(unsigned n, const Rat& a, const Rat& b) {
    detail_qs::check_omega_params(a, b);
    Polynomial factor1 = Polynomial(1) - Polynomial::monomial(a, n);
    Polynomial factor2 = Polynomial(a) - Polynomial::monomial(Rat(1), n);
    Rat w = Rat(1) / ((a - b) * (1 - a * b));
    return RationalFunction(factor1 * factor2 * w);
}

/// (b/q)^{(1-n)/2} (q^2, b^2 q^2; q^4)_m / ((q^4, q^4/b^2; q^4)_m), m = (n-1)/4.
/// The fractional-looking power is b^{(1-n)/2} q^{(n-1)/2} with integer
/// exponents, since n = 1 (mod 4).
inline QExpression wei_bb_rhs(unsigned n, const Rat& b) {
    if (n % 4 != 1) throw WrongResidueClass("wei_bb_rhs requires n = 1 (mod 4)");
    if (b == 0) throw DegenerateParameters("b must be nonzero");
    const unsigned m = (n - 1) / 4;
    const long half = static_cast<long>(n - 1) / 2;
    Rat scale = rat_pow(b, -half);
    Polynomial num = poch_poly(Rat(1), 2, 4, m) * poch_poly(b * b, 2, 4, m);
    Polynomial den = poch_poly(Rat(1), 4, 4, m) * poch_poly(Rat(1) / (b * b), 4, 4, m);
    return q_mon(half) * RationalFunction(Polynomial(scale)) * RationalFunction::make(num, den);
}

/// (a q^3, q^3/a; q^4)_M / (q^2; q^2)_{n-1}, M = (n-1)/2.
inline QExpression wei_cc_rhs(unsigned n, const Rat& a) {
    if (n == 0 || n % 2 == 0) throw WrongResidueClass("wei_cc_rhs requires odd n");
    if (a == 0) throw DegenerateParameters("a must be nonzero");
    const unsigned M = (n - 1) / 2;
    Polynomial num = poch_poly(a, 3, 4, M) * poch_poly(Rat(1) / a, 3, 4, M);
    Polynomial den = poch_poly(Rat(1), 2, 2, n - 1);
    return RationalFunction::make(num, den);
}

/// Omega_n(a, b): the Chinese-remainder combination of the two closed forms,
/// congruent to thm2_lhs modulo (1 - a q^n)(a - q^n)(b - q^n).
inline QExpression thm2_omega(unsigned n, const Rat& a, const Rat& b) {
    if (n % 4 != 1) throw WrongResidueClass("thm2_omega requires n = 1 (mod 4)");
    detail_qs::check_omega_params(a, b);
    return omega_weight_first(n, a, b) * wei_bb_rhs(n, b) +
           omega_weight_second(n, a, b) * wei_cc_rhs(n, a);
}

/// The three product congruences modulo (b - q^n) used to rewrite Omega:
/// index 1: (q^2; q^2)_{n-1}
///            vs b^{n-1} q^{(1-n^2)/4} (q^2, q^4, q^2/b^2, q^4/b^2; q^4)_m,
/// index 2: (a q^3; q^4)_M vs (-ab)^m q^{-(n-1)^2/8} (ab q^2, q^2/(ab); q^4)_m,
/// index 3: (q^3/a; q^4)_M vs (-b/a)^m q^{-(n-1)^2/8} (b q^2/a, a q^2/b; q^4)_m.
inline IdentitySides factorization_sides(unsigned which, unsigned n, const Rat& a, const Rat& b) {
    if (n % 4 != 1) throw WrongResidueClass("factorization_sides requires n = 1 (mod 4)");
    if (a == 0 || b == 0) throw DegenerateParameters("parameters must be nonzero");
    const unsigned m = (n - 1) / 4;
    const unsigned M = (n - 1) / 2;
    switch (which) {
        case 1: {
            QExpression lhs{poch_poly(Rat(1), 2, 2, n - 1)};
            long e = (1 - static_cast<long>(n) * n) / 4;
            QExpression rhs = RationalFunction(Polynomial(rat_pow(b, n - 1))) * q_mon(e);
            Polynomial prod = poch_poly(Rat(1), 2, 4, m) * poch_poly(Rat(1), 4, 4, m) *
                              poch_poly(Rat(1) / (b * b), 2, 4, m) *
                              poch_poly(Rat(1) / (b * b), 4, 4, m);
            return {std::move(lhs), rhs * RationalFunction(prod)};
        }
        case 2: {
            QExpression lhs{poch_poly(a, 3, 4, M)};
            long e = -static_cast<long>(n - 1) * (n - 1) / 8;
            QExpression rhs = RationalFunction(Polynomial(rat_pow(-a * b, m))) * q_mon(e);
            Polynomial prod = poch_poly(a * b, 2, 4, m) * poch_poly(Rat(1) / (a * b), 2, 4, m);
            return {std::move(lhs), rhs * RationalFunction(prod)};
        }
        case 3: {
            QExpression lhs{poch_poly(Rat(1) / a, 3, 4, M)};
            long e = -static_cast<long>(n - 1) * (n - 1) / 8;
            QExpression rhs = RationalFunction(Polynomial(rat_pow(-b / a, m))) * q_mon(e);
            Polynomial prod = poch_poly(b / a, 2, 4, m) * poch_poly(a / b, 2, 4, m);
            return {std::move(lhs), rhs * RationalFunction(prod)};
        }
        default:
            throw Error("factorization_sides index must be 1, 2 or 3");
    }
}

/// One-parameter limit form of the two-parameter congruence (b -> 1),
/// congruent modulo Phi_n(q) (1 - a q^n)(a - q^n).
inline QExpression wei_dd_lhs(unsigned n, const Rat& a) { return thm2_lhs(n, a, Rat(1)); }

inline QExpression wei_dd_rhs(unsigned n, const Rat& a) {
    if (n % 4 != 1) throw WrongResidueClass("wei_dd_rhs requires n = 1 (mod 4)");
    if (a == 0) throw DegenerateParameters("a must be nonzero");
    if (a == 1) throw DegenerateParameters("(1-a)^2 = 0: closed form undefined");
    const unsigned m = (n - 1) / 4;
    Polynomial p2 = poch_poly(Rat(1), 2, 4, m);
    Polynomial p4 = poch_poly(Rat(1), 4, 4, m);
    QExpression A = RationalFunction::make(p2 * p2, p4 * p4);
    Polynomial bn = poch_poly(a, 2, 4, m) * poch_poly(Rat(1) / a, 2, 4, m);
    QExpression Bterm = RationalFunction::make(bn * bn, p2 * p2 * p4 * p4);
    Polynomial pref = (Polynomial(1) - Polynomial::monomial(a, n)) *
                      (Polynomial(a) - Polynomial::monomial(Rat(1), n)) *
                      (Rat(1) / ((1 - a) * (1 - a)));
    QExpression qpow = q_mon((n - 1) / 2);
    return qpow * A + qpow * RationalFunction(pref) * (A - Bterm);
}

}  // namespace qcong

#endif
