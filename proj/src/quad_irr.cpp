#include "qorbit/quad_irr.hpp"

#include "qorbit/errors.hpp"

#include <nlohmann/json.hpp>

#include <cassert>
#include <sstream>

namespace qorbit {

QuadIrr::QuadIrr(Integer a, Integer b, Integer c, Integer n)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), n_(std::move(n)) {}

QuadIrr QuadIrr::make(Integer a, Integer c, Integer n) {
    if (n <= 0) throw DomainError("QuadIrr: n must be positive");
    if (is_square(n)) throw DomainError("QuadIrr: n must not be a perfect square");
    if (c == 0) throw DomainError("QuadIrr: c must be nonzero");
    Integer num = a * a - n;
    if (num % c != 0)
        throw MembershipError("QuadIrr: c does not divide a^2 - n");
    Integer b = num / c;
    if (gcd3(a, b, c) != 1)
        throw PrimitivityError("QuadIrr: gcd(a, b, c) > 1");
    return QuadIrr(std::move(a), std::move(b), std::move(c), std::move(n));
}

QuadIrr unchecked_triple(Integer a, Integer b, Integer c, Integer n) {
    assert(c != 0 && b * c == a * a - n);
    assert(gcd3(a, b, c) == 1);
    return QuadIrr(std::move(a), std::move(b), std::move(c), std::move(n));
}

QuadIrr QuadIrr::conjugate() const {
    return QuadIrr(-a_, -b_, -c_, n_);
}

bool QuadIrr::is_ambiguous() const {
    return a_ * a_ < n_;
}

Integer QuadIrr::floor() const {
    // floor(a + sqrt(n)) = a + isqrt(n), since sqrt(n) is irrational.
    Integer t = a_ + isqrt(n_);
    if (c_ > 0) return floor_div(t, c_);
    return -floor_div(t, -c_) - 1;
}

int QuadIrr::sign() const {
    // a + sqrt(n) > 0  iff  a >= -isqrt(n).
    int num = (a_ >= -isqrt(n_)) ? 1 : -1;
    return c_ > 0 ? num : -num;
}

std::array<Integer, 3> QuadIrr::fixed_point_equation() const {
    Integer A = c_, B = -2 * a_, C = b_;
    Integer g = gcd3(A, B, C);
    A /= g;
    B /= g;
    C /= g;
    if (A < 0) {
        A = -A;
        B = -B;
        C = -C;
    }
    return {A, B, C};
}

std::string QuadIrr::str() const {
    std::ostringstream os;
    os << "(" << a_ << "+sqrt(" << n_ << "))/" << c_;
    return os.str();
}

namespace {

nlohmann::json int_to_json(const Integer& v) {
    // Desk-scale values fit a 64-bit integer; larger ones degrade to strings.
    static const Integer lo = std::numeric_limits<long long>::min();
    static const Integer hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

Integer int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long long>());
}

} // namespace

nlohmann::json QuadIrr::to_json() const {
    return {{"a", int_to_json(a_)}, {"b", int_to_json(b_)},
            {"c", int_to_json(c_)}, {"n", int_to_json(n_)}};
}

QuadIrr QuadIrr::from_json(const nlohmann::json& j) {
    return make(int_from_json(j.at("a")), int_from_json(j.at("c")),
                int_from_json(j.at("n")));
}

} // namespace qorbit
