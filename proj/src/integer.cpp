#include "qorbit/integer.hpp"

#include "qorbit/errors.hpp"

#include <algorithm>

namespace qorbit {

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt: negative input");
    Integer s = boost::multiprecision::sqrt(n);
    // boost's sqrt is the integer square root already; keep the contract
    // explicit anyway.
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw DomainError("floor_div: zero divisor");
    Integer q = a / b; // truncates toward zero
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

bool is_square(const Integer& n) {
    if (n < 0) return false;
    Integer s = isqrt(n);
    return s * s == n;
}

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
    if (a == 0 && b == 0 && c == 0) throw DomainError("gcd3: all arguments zero");
    using boost::multiprecision::gcd;
    return gcd(gcd(abs(a), abs(b)), abs(c));
}

std::vector<Integer> divisors(const Integer& n) {
    if (n == 0) throw DomainError("divisors: zero input");
    Integer m = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    if (n < 2) throw DomainError("prime_divisors: n < 2");
    std::vector<Integer> ps;
    Integer m = n;
    for (Integer d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            ps.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

std::vector<Integer> odd_prime_divisors(const Integer& n) {
    if (n < 2) return {};
    auto ps = prime_divisors(n);
    std::vector<Integer> odd;
    for (auto& p : ps)
        if (p != 2) odd.push_back(p);
    return odd;
}

int legendre(const Integer& t, const Integer& p) {
    if (p == 2 || !is_prime(p)) throw DomainError("legendre: p must be an odd prime");
    Integer r = t % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Euler's criterion: t^((p-1)/2) = +-1 (mod p).
    Integer e = powm(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

bool is_qr_mod_2h(const Integer& t, int h) {
    if (h < 3) throw DomainError("is_qr_mod_2h: h must be >= 3");
    if (t % 2 == 0) throw DomainError("is_qr_mod_2h: t must be odd");
    Integer r = t % 8;
    if (r < 0) r += 8;
    return r == 1;
}

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
    if (n < 1) throw DomainError("squarefree_decompose: n must be positive");
    Integer k = 1, m = 1, rest = n;
    for (Integer d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            int e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) k *= d;
            if (e % 2) m *= d;
        }
    }
    m *= rest;
    return {k, m};
}

int power_of_two_exponent(const Integer& n) {
    if (n < 1) return -1;
    Integer m = n;
    int h = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++h;
    }
    return m == 1 ? h : -1;
}

} // namespace qorbit
