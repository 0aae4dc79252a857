#ifndef QCONG_RATIONAL_HPP
#define QCONG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "qcong/errors.hpp"

namespace qcong {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (reduced, positive denominator) through arithmetic; only raw
// num/den construction needs an explicit canonicalize.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// x^e for signed e; negative exponents require x != 0.
inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0 && e < 0) throw DivisionByZeroError("0 raised to a negative power");
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), a);
    if (e < 0) return Rat(1) / r;
    return r;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Parses "n" or "n/d".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qcong

#endif
