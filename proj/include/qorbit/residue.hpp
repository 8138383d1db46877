#pragma once

#include "qorbit/integer.hpp"
#include "qorbit/quad_irr.hpp"

#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qorbit {

// A class [a,b,c] (mod s): componentwise congruence of triples, constrained
// by a^2 - n = bc (mod s) and, for every prime q | s, not all of a, b, c
// divisible by q.
struct ResidueClass {
    Integer s;
    Integer a, b, c;

    std::string str() const; // "[a,b,c]"

    friend bool operator==(const ResidueClass& x, const ResidueClass& y) {
        return std::tie(x.s, x.a, x.b, x.c) == std::tie(y.s, y.a, y.b, y.c);
    }
    friend bool operator<(const ResidueClass& x, const ResidueClass& y) {
        return std::tie(x.s, x.a, x.b, x.c) < std::tie(y.s, y.a, y.b, y.c);
    }
};

/// E^n_s: all classes [a,b,c] (mod s) compatible with n, in lexicographic
/// (a, b, c) order.
std::vector<ResidueClass> enumerate_classes(const Integer& n, const Integer& s);

// Partition of E^n_p for an odd prime p | n:
//   A1: p does not divide c, (c/p) = +1      A2: likewise with (c/p) = -1
//   C1: p | c (hence p | a), (b/p) = +1      C2: likewise with (b/p) = -1
struct ACPartition {
    std::vector<ResidueClass> A1, A2, C1, C2;
};

ACPartition partition_ACsets(const Integer& n, const Integer& p);

// Identifies the G-subset containing an element: one Legendre sign per odd
// prime divisor of n, or a single sign mod 2^h when n is a pure power of two
// (h >= 3).  `labeled` is false only in the under-specified edge cases.
struct SubsetLabel {
    std::vector<std::pair<Integer, int>> signs; // (modulus, +-1), moduli increasing
    bool labeled = true;

    bool empty() const { return signs.empty(); }
    std::string str() const;
    nlohmann::json to_json() const;

    friend bool operator==(const SubsetLabel& x, const SubsetLabel& y) {
        return x.labeled == y.labeled && x.signs == y.signs;
    }
    friend bool operator<(const SubsetLabel& x, const SubsetLabel& y) {
        return std::tie(x.labeled, x.signs) < std::tie(y.labeled, y.signs);
    }
};

/// For each odd prime p | n: sign = (c/p) when p does not divide c, else
/// (b/p).  For n = 2^h (h >= 3) exactly: sign from the quadratic-residue
/// class mod 8 of the odd member of {b, c}.  Empty when neither rule applies.
SubsetLabel subset_label(const QuadIrr& alpha);

/// 2^r with r = number of distinct odd primes dividing n; 2 for n = 2^h,
/// h >= 3.
Integer predicted_subset_count(const Integer& n);

} // namespace qorbit
