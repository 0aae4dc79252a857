#ifndef QCONG_POLYNOMIAL_GCD_HPP
#define QCONG_POLYNOMIAL_GCD_HPP

#include <cstdint>
#include <vector>

#include "qcong/polynomial.hpp"
#include "qcong/primes.hpp"

namespace qcong {

namespace detail {

using u64 = std::uint64_t;

inline void trim_mod(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Image of an integer polynomial in Z/p, lowest degree first.
inline std::vector<u64> to_mod(const std::vector<Int>& z, u64 p) {
    std::vector<u64> r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
    trim_mod(r);
    return r;
}

inline void make_monic_mod(std::vector<u64>& a, u64 p) {
    if (a.empty() || a.back() == 1) return;
    u64 inv = powmod_u64(a.back(), p - 2, p);
    for (u64& c : a) c = mulmod_u64(c, inv, p);
}

inline void reduce_mod(std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    // b is monic here.
    while (a.size() >= b.size()) {
        u64 c = a.back();
        std::size_t shift = a.size() - b.size();
        if (c != 0) {
            for (std::size_t j = 0; j + 1 < b.size(); ++j) {
                u64 t = mulmod_u64(c, b[j], p);
                u64& dst = a[shift + j];
                dst = dst >= t ? dst - t : dst + p - t;
            }
        }
        a.pop_back();
        trim_mod(a);
    }
}

inline std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        make_monic_mod(b, p);
        reduce_mod(a, b, p);
        a.swap(b);
    }
    make_monic_mod(a, p);
    return a;
}

/// Clears denominators and the integer content; the sign of the leading
/// coefficient is normalized positive. Result is primitive in Z[q].
inline std::vector<Int> int_primitive(const Polynomial& p) {
    std::vector<Int> z;
    Int den;
    Polynomial::scaled_integers(p.coeffs(), z, den);
    Int content(0);
    for (const Int& c : z) {
        if (c != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content == 1) break;
    }
    if (content > 1)
        for (Int& c : z) c /= content;
    if (!z.empty() && z.back() < 0)
        for (Int& c : z) c = -c;
    return z;
}

/// Exact divisibility test in Z[q]; fails fast on the first non-integral
/// quotient coefficient.
inline bool divides_int(const std::vector<Int>& h, const std::vector<Int>& a) {
    if (a.empty()) return true;
    if (h.empty() || a.size() < h.size()) return false;
    std::vector<Int> rem = a;
    const std::size_t dh = h.size() - 1;
    const Int& lc = h.back();
    for (std::size_t i = rem.size() - dh; i-- > 0;) {
        if (rem[i + dh] == 0) continue;
        Int c;
        if (!mpz_divisible_p(rem[i + dh].get_mpz_t(), lc.get_mpz_t())) return false;
        c = rem[i + dh] / lc;
        rem[i + dh] = 0;
        for (std::size_t j = 0; j < dh; ++j)
            if (h[j] != 0) mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), h[j].get_mpz_t());
    }
    for (std::size_t j = 0; j < dh; ++j)
        if (rem[j] != 0) return false;
    return true;
}

inline Polynomial from_int_coeffs(const std::vector<Int>& z) {
    std::vector<Rat> c;
    c.reserve(z.size());
    for (const Int& x : z) c.emplace_back(x);
    return Polynomial::from_coeffs(std::move(c));
}

/// Plain Euclidean gcd over Q with per-step primitive renormalization.
/// Correct for any input; only used as a safety net when the modular
/// reconstruction fails to stabilize.
inline Polynomial euclid_gcd_fallback(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divrem(a, b).remainder;
        if (!r.is_zero()) r = from_int_coeffs(int_primitive(r));
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

}  // namespace detail

/// Monic greatest common divisor, by gcd images modulo machine primes glued
/// with CRT and verified by exact trial division. Coprime inputs (the common
/// case when canonicalizing rational functions) cost a single mod-p Euclid.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw Error("poly_gcd(0, 0) is undefined");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(Rat(1));

    using detail::u64;
    const std::vector<Int> za = detail::int_primitive(a);
    const std::vector<Int> zb = detail::int_primitive(b);

    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), za.back().get_mpz_t(), zb.back().get_mpz_t());

    std::vector<Int> acc;     // CRT-lifted gamma * monic-gcd image, symmetric range
    Int acc_mod(0);
    std::size_t acc_deg = 0;
    bool have_acc = false;
    std::vector<Int> prev_primitive;

    u64 p = (1ull << 62) - 1;
    for (int tries = 0; tries < 256; ++tries) {
        p = next_prime_after(p);
        if (mpz_fdiv_ui(za.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(zb.back().get_mpz_t(), p) == 0)
            continue;
        std::vector<u64> g = detail::gcd_mod(detail::to_mod(za, p), detail::to_mod(zb, p), p);
        if (g.size() == 1) return Polynomial(Rat(1));
        if (have_acc && g.size() - 1 > acc_deg) continue;  // unlucky prime
        const u64 gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        if (!have_acc || g.size() - 1 < acc_deg) {
            acc_deg = g.size() - 1;
            acc.assign(g.size(), Int(0));
            have_acc = true;
            prev_primitive.clear();
            for (std::size_t i = 0; i < g.size(); ++i) acc[i] = mulmod_u64(g[i], gm, p);
            acc_mod = Int(static_cast<unsigned long>(p));
            for (Int& c : acc)
                if (c * 2 > acc_mod) c -= acc_mod;
        } else {
            // CRT merge coefficient-wise into the symmetric range.
            Int pz(static_cast<unsigned long>(p));
            Int minv;
            mpz_invert(minv.get_mpz_t(), acc_mod.get_mpz_t(), pz.get_mpz_t());
            Int new_mod = acc_mod * pz;
            for (std::size_t i = 0; i < acc.size(); ++i) {
                u64 target = mulmod_u64(g[i], gm, p);
                Int cur = acc[i] % pz;
                if (cur < 0) cur += pz;
                Int delta = (Int(static_cast<unsigned long>(target)) - cur) * minv % pz;
                if (delta < 0) delta += pz;
                acc[i] += acc_mod * delta;
                if (acc[i] * 2 > new_mod) acc[i] -= new_mod;
            }
            acc_mod = new_mod;
        }
        // Stabilized? Verify by exact division into both inputs.
        std::vector<Int> prim = acc;
        Int content(0);
        for (const Int& c : prim) {
            if (c != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        }
        if (content > 1)
            for (Int& c : prim) c /= content;
        if (!prim.empty() && prim.back() < 0)
            for (Int& c : prim) c = -c;
        if (prim == prev_primitive) {
            if (detail::divides_int(prim, za) && detail::divides_int(prim, zb))
                return monic(detail::from_int_coeffs(prim));
        }
        prev_primitive = std::move(prim);
    }
    return detail::euclid_gcd_fallback(a, b);
}

struct Xgcd {
    Polynomial g;  // monic gcd
    Polynomial s;
    Polynomial t;  // s*a + t*b = g
};

/// Extended Euclid over Q. The returned cofactors are the minimal-degree
/// ones: deg(s) < deg(b/g) and deg(t) < deg(a/g) whenever those are defined.
inline Xgcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw Error("extended_gcd(0, 0) is undefined");
    if (a.is_zero()) {
        Rat ilc = Rat(1) / b.leading();
        return {monic(b), Polynomial(), Polynomial(ilc)};
    }
    if (b.is_zero()) {
        Rat ilc = Rat(1) / a.leading();
        return {monic(a), Polynomial(ilc), Polynomial()};
    }
    Polynomial r0 = a, r1 = b;
    Polynomial s0(Rat(1)), s1, t0, t1(Rat(1));
    while (!r1.is_zero()) {
        DivRem dr = divrem(r0, r1);
        Polynomial r2 = std::move(dr.remainder);
        Polynomial s2 = s0 - dr.quotient * s1;
        Polynomial t2 = t0 - dr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat ilc = Rat(1) / r0.leading();
    return {r0 * ilc, s0 * ilc, t0 * ilc};
}

/// Unique R with R = r1 (mod m1), R = r2 (mod m2), deg(R) < deg(m1*m2),
/// for coprime moduli.
inline Polynomial poly_crt(const Polynomial& m1, const Polynomial& m2, const Polynomial& r1,
                           const Polynomial& r2) {
    if (m1.is_zero() || m2.is_zero()) throw DivisionByZeroError("poly_crt with zero modulus");
    Xgcd x = extended_gcd(m1, m2);
    if (!x.g.is_one()) throw CoprimalityError("poly_crt moduli share the factor " + x.g.str());
    const Polynomial a1 = divrem(r1, m1).remainder;
    const Polynomial a2 = divrem(r2, m2).remainder;
    // x.s*m1 = 1 (mod m2), so R = a1 + m1 * (s*(a2 - a1) mod m2).
    const Polynomial lift = divrem(x.s * (a2 - a1), m2).remainder;
    return a1 + m1 * lift;
}

}  // namespace qcong

#endif
