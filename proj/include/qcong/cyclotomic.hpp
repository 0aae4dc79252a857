#ifndef QCONG_CYCLOTOMIC_HPP
#define QCONG_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <vector>

#include "qcong/polynomial.hpp"

namespace qcong {

inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;  // ascending
}

inline unsigned totient(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// q^n - 1.
inline Polynomial q_power_minus_one(unsigned n) {
    std::vector<Rat> c(n + 1, Rat(0));
    c[0] = -1;
    c[n] = 1;
    return Polynomial::from_coeffs(std::move(c));
}

/// n-th cyclotomic polynomial, computed by exact division:
/// Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d, memoized per process.
inline Polynomial cyclotomic(unsigned n) {
    if (n == 0) throw Error("cyclotomic(0) is undefined");
    static std::map<unsigned, Polynomial> memo;
    static std::mutex mu;
    const std::vector<unsigned> divs = divisors(n);
    std::map<unsigned, Polynomial> local;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        for (unsigned d : divs) {
            auto hit = memo.find(d);
            if (hit != memo.end()) local.emplace(d, hit->second);
        }
    }
    // Fill the missing divisors bottom-up; each step is one exact division.
    for (unsigned d : divs) {
        if (local.count(d)) continue;
        Polynomial prod(Rat(1));
        for (unsigned e : divisors(d))
            if (e < d) prod = prod * local.at(e);
        local[d] = exact_divide(q_power_minus_one(d), prod);
    }
    Polynomial result = local.at(n);
    std::lock_guard<std::mutex> lock(mu);
    for (auto& [d, phi] : local) memo.emplace(d, std::move(phi));
    return result;
}

/// Modulus Phi_n(q)^r with its defining data.
struct CyclotomicModulus {
    unsigned n = 1;
    unsigned r = 1;
    Polynomial modulus;
};

inline CyclotomicModulus modulus_power(unsigned n, unsigned r) {
    if (n == 0 || r == 0) throw Error("modulus_power requires n >= 1 and r >= 1");
    return {n, r, cyclotomic(n).pow(r)};
}

}  // namespace qcong

#endif
