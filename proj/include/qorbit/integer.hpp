#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace qorbit {

// All arithmetic in this library is exact; cpp_int never wraps.
using Integer = boost::multiprecision::cpp_int;

/// Largest s with s*s <= n.  Throws DomainError for n < 0.
Integer isqrt(const Integer& n);

/// Floor division (quotient rounded toward -infinity).  b != 0.
Integer floor_div(const Integer& a, const Integer& b);

bool is_square(const Integer& n);

/// gcd of three integers; DomainError if all are zero.
Integer gcd3(const Integer& a, const Integer& b, const Integer& c);

/// All positive divisors of |n| in increasing order.  n != 0.
std::vector<Integer> divisors(const Integer& n);

/// Deterministic trial-division primality test (desk scale).
bool is_prime(const Integer& n);

/// Distinct prime divisors of n >= 2, increasing.
std::vector<Integer> prime_divisors(const Integer& n);

/// Distinct odd prime divisors of n >= 1, increasing.
std::vector<Integer> odd_prime_divisors(const Integer& n);

/// Legendre symbol (t/p) for an odd prime p: +1 for a quadratic residue,
/// -1 for a non-residue, 0 when p | t.
int legendre(const Integer& t, const Integer& p);

/// Quadratic residues of 2^h, h >= 3, are exactly the odd t with
/// t = 1 (mod 8).  t must be odd.
bool is_qr_mod_2h(const Integer& t, int h);

/// n = k^2 * m with m squarefree; returns (k, m).  n >= 1.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

/// If n = 2^h returns h, otherwise -1.
int power_of_two_exponent(const Integer& n);

} // namespace qorbit
