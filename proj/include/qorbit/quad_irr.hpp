#pragma once

#include "qorbit/integer.hpp"

#include <array>
#include <string>
#include <tuple>

#include <nlohmann/json_fwd.hpp>

namespace qorbit {

// An element alpha = (a + sqrt(n))/c of Q*(sqrt(n)), stored as the triple
// (a, b, c) with b = (a^2 - n)/c and gcd(a, b, c) = 1.  Immutable.
//
// The canonical form always keeps sqrt(n) with a + sign; negative values are
// represented by a negative c, e.g. -sqrt(15) is (0, 15, -1).
class QuadIrr {
public:
    /// Validates and builds the triple; b is always derived from (a, c, n).
    /// Throws DomainError (n not positive non-square, or c = 0),
    /// MembershipError (c does not divide a^2 - n), PrimitivityError
    /// (gcd(a, b, c) > 1).
    static QuadIrr make(Integer a, Integer c, Integer n);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& n() const { return n_; }

    /// (a - sqrt(n))/c, canonicalized as (-a, -b, -c).
    QuadIrr conjugate() const;

    /// True iff alpha and its conjugate have different signs;
    /// equivalently a^2 < n, equivalently b*c < 0.
    bool is_ambiguous() const;

    /// Exact floor of (a + sqrt(n))/c.
    Integer floor() const;

    /// +1 or -1 (alpha is irrational, never zero).
    int sign() const;

    /// Coefficients (A, B, C) of the quadratic A z^2 + B z + C = 0 whose
    /// roots are alpha and its conjugate: (c, -2a, b) divided by the gcd,
    /// leading coefficient positive.
    std::array<Integer, 3> fixed_point_equation() const;

    /// Human form "(a+sqrt(n))/c".
    std::string str() const;

    nlohmann::json to_json() const;
    static QuadIrr from_json(const nlohmann::json& j);

    friend bool operator==(const QuadIrr& x, const QuadIrr& y) {
        return x.n_ == y.n_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend bool operator!=(const QuadIrr& x, const QuadIrr& y) { return !(x == y); }
    friend bool operator<(const QuadIrr& x, const QuadIrr& y) {
        return std::tie(x.n_, x.a_, x.b_, x.c_) < std::tie(y.n_, y.a_, y.b_, y.c_);
    }

private:
    friend QuadIrr unchecked_triple(Integer a, Integer b, Integer c, Integer n);
    QuadIrr(Integer a, Integer b, Integer c, Integer n);

    Integer a_, b_, c_, n_;
};

// Internal fast path for the group action: the caller supplies b and
// guarantees the invariants (they are still asserted).
QuadIrr unchecked_triple(Integer a, Integer b, Integer c, Integer n);

} // namespace qorbit
