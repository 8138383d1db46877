#include "qorbit/residue.hpp"

#include "qorbit/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qorbit {

std::string ResidueClass::str() const {
    std::ostringstream os;
    os << "[" << a << "," << b << "," << c << "]";
    return os.str();
}

std::vector<ResidueClass> enumerate_classes(const Integer& n, const Integer& s) {
    if (s < 2) throw DomainError("enumerate_classes: s must be >= 2");
    long long sl = s.convert_to<long long>();
    long long nl = ((n % s + s) % s).convert_to<long long>();
    auto qs = prime_divisors(s);
    std::vector<long long> primes;
    for (auto& q : qs) primes.push_back(q.convert_to<long long>());

    std::vector<ResidueClass> out;
    for (long long a = 0; a < sl; ++a) {
        long long t = ((a * a - nl) % sl + sl) % sl; // bc must equal t (mod s)
        for (long long b = 0; b < sl; ++b) {
            long long g = std::gcd(b, sl);
            if (g == 0) g = sl;
            if (t % g != 0) continue;
            // Solve b*c = t (mod s): g solutions spaced s/g apart.
            long long bg = b / g, sg = sl / g, tg = t / g;
            // Inverse of bg mod sg.
            long long c0 = 0;
            if (sg == 1) {
                c0 = 0;
            } else {
                long long inv = 1, base = bg % sg, e = 0;
                // Extended Euclid.
                long long old_r = base, r = sg, old_t = 1, tt = 0;
                while (r != 0) {
                    long long qq = old_r / r;
                    long long tmp = old_r - qq * r;
                    old_r = r;
                    r = tmp;
                    tmp = old_t - qq * tt;
                    old_t = tt;
                    tt = tmp;
                }
                inv = ((old_t % sg) + sg) % sg;
                (void)e;
                c0 = (tg % sg) * inv % sg;
            }
            for (long long k = 0; k < g; ++k) {
                long long c = c0 + k * (sl / g);
                c %= sl;
                bool primitive = true;
                for (long long q : primes)
                    if (a % q == 0 && b % q == 0 && c % q == 0) {
                        primitive = false;
                        break;
                    }
                if (primitive) out.push_back(ResidueClass{s, a, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ACPartition partition_ACsets(const Integer& n, const Integer& p) {
    if (p == 2 || !is_prime(p)) throw DomainError("partition_ACsets: p must be an odd prime");
    if (n % p != 0) throw DomainError("partition_ACsets: p must divide n");
    ACPartition part;
    for (const auto& cls : enumerate_classes(n, p)) {
        if (cls.c % p != 0) {
            (legendre(cls.c, p) == 1 ? part.A1 : part.A2).push_back(cls);
        } else {
            // p | c forces p | a (since a^2 = bc (mod p)) and p cannot also
            // divide b; classes here are [0, b, 0].
            (legendre(cls.b, p) == 1 ? part.C1 : part.C2).push_back(cls);
        }
    }
    return part;
}

std::string SubsetLabel::str() const {
    if (!labeled) return "unlabeled";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [mod, sign] : signs) {
        if (!first) os << ",";
        first = false;
        os << mod << ":" << (sign > 0 ? "+1" : "-1");
    }
    os << "}";
    return os.str();
}

nlohmann::json SubsetLabel::to_json() const {
    if (!labeled) return nullptr;
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [mod, sign] : signs) j[mod.str()] = sign;
    return j;
}

SubsetLabel subset_label(const QuadIrr& alpha) {
    const Integer &b = alpha.b(), &c = alpha.c(), &n = alpha.n();
    SubsetLabel label;

    auto odd_ps = odd_prime_divisors(n);
    if (!odd_ps.empty()) {
        for (const auto& p : odd_ps) {
            // p cannot divide both b and c: that would force p | a,
            // contradicting gcd(a, b, c) = 1.
            int sign = (c % p != 0) ? legendre(c, p) : legendre(b, p);
            if (sign == 0) throw DomainError("subset_label: totality violated");
            label.signs.emplace_back(p, sign);
        }
        return label;
    }

    int h = power_of_two_exponent(n);
    if (h >= 3) {
        bool b_odd = (b % 2 != 0), c_odd = (c % 2 != 0);
        if (b_odd != c_odd) {
            label.signs.emplace_back(n, is_qr_mod_2h(b_odd ? b : c, h) ? 1 : -1);
        } else if (b_odd && c_odd) {
            // bc = a^2 = 1 (mod 8), so b = c (mod 8); either member works.
            label.signs.emplace_back(n, is_qr_mod_2h(b, h) ? 1 : -1);
        } else {
            label.labeled = false;
        }
        return label;
    }

    return label; // empty: no rule applies (e.g. n = 2)
}

Integer predicted_subset_count(const Integer& n) {
    if (n <= 0 || is_square(n)) throw DomainError("predicted_subset_count: n must be positive non-square");
    int h = power_of_two_exponent(n);
    if (h >= 3) return 2;
    std::size_t r = odd_prime_divisors(n).size();
    Integer count = 1;
    for (std::size_t i = 0; i < r; ++i) count *= 2;
    return count;
}

} // namespace qorbit
