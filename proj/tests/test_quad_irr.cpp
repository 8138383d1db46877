#include <doctest.h>

#include "qorbit/errors.hpp"
#include "qorbit/quad_irr.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <random>

using namespace qorbit;

namespace {

// Random valid triples: choose (a, b, c) coprime and let n = a^2 - bc.
std::vector<QuadIrr> random_elements(std::size_t count, long long bound, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-bound, bound);
    std::vector<QuadIrr> out;
    while (out.size() < count) {
        long long a = dist(rng), b = dist(rng), c = dist(rng);
        if (b == 0 || c == 0) continue;
        Integer n = Integer(a) * a - Integer(b) * c;
        if (n <= 0 || is_square(n)) continue;
        if (gcd3(a, b, c) != 1) continue;
        out.push_back(QuadIrr::make(a, c, n));
    }
    return out;
}

} // namespace

TEST_CASE("make validates and derives b") {
    QuadIrr r15 = QuadIrr::make(0, 1, 15);
    CHECK(r15.b() == -15);
    QuadIrr l37 = QuadIrr::make(1, 2, 37); // (1+sqrt(37))/2
    CHECK(l37.b() == -18);
    CHECK_THROWS_AS(QuadIrr::make(1, 3, 15), MembershipError);   // 3 does not divide 1-15
    CHECK_THROWS_AS(QuadIrr::make(0, 2, 60), PrimitivityError);  // gcd(0,-30,2)=2
    CHECK_THROWS_AS(QuadIrr::make(0, 1, 16), DomainError);       // square n
    CHECK_THROWS_AS(QuadIrr::make(0, 1, -5), DomainError);
    CHECK_THROWS_AS(QuadIrr::make(0, 0, 15), DomainError);
}

TEST_CASE("conjugate") {
    QuadIrr r15 = QuadIrr::make(0, 1, 15);
    CHECK(r15.conjugate() == QuadIrr::make(0, -1, 15));
    QuadIrr l37 = QuadIrr::make(1, 2, 37);
    QuadIrr conj = l37.conjugate();
    CHECK(conj.a() == -1);
    CHECK(conj.b() == 18);
    CHECK(conj.c() == -2);
    for (const auto& e : random_elements(200, 50, 1))
        CHECK(e.conjugate().conjugate() == e);
}

TEST_CASE("ambiguity: the three formulations agree") {
    CHECK(QuadIrr::make(0, 1, 15).is_ambiguous());
    CHECK_FALSE(QuadIrr::make(4, 1, 15).is_ambiguous());
    CHECK(QuadIrr::make(2, 1, 15).is_ambiguous());
    for (const auto& e : random_elements(500, 80, 2)) {
        bool by_sq = e.a() * e.a() < e.n();
        bool by_bc = e.b() * e.c() < 0;
        bool by_sign = e.sign() != e.conjugate().sign();
        CHECK(by_sq == by_bc);
        CHECK(by_sq == by_sign);
    }
}

TEST_CASE("floor and sign examples") {
    CHECK(QuadIrr::make(0, 1, 15).floor() == 3);
    CHECK(QuadIrr::make(1, 2, 37).floor() == 3);
    CHECK(QuadIrr::make(0, -1, 15).floor() == -4);
    CHECK(QuadIrr::make(0, -3, 15).sign() == -1);
    CHECK(QuadIrr::make(0, 3, 15).sign() == 1);
    CHECK(QuadIrr::make(-5, 1, 15).sign() == -1);
}

TEST_CASE("floor agrees with a floating oracle and with exact bracketing") {
    for (const auto& e : random_elements(10000, 1000000, 3)) {
        Integer f = e.floor();
        // Exact: c*f <= a + sqrt(n) < c*(f+1), orientation depending on sign(c).
        Integer lhs = f * e.c(), rhs = (f + 1) * e.c();
        auto below = [&](const Integer& t) { // t <= a + sqrt(n)?
            Integer d = t - e.a();
            return d <= 0 || d * d < e.n();
        };
        if (e.c() > 0) {
            CHECK(below(lhs));
            CHECK_FALSE(below(rhs));
        } else {
            CHECK_FALSE(below(lhs));
            CHECK(below(rhs));
        }
        // Floating sanity check.
        long double approx = (static_cast<long double>(e.a().convert_to<long long>()) +
                              sqrtl(static_cast<long double>(e.n().convert_to<long long>()))) /
                             static_cast<long double>(e.c().convert_to<long long>());
        CHECK(std::abs(static_cast<long double>(f.convert_to<long long>()) - floorl(approx)) <= 1);
    }
}

TEST_CASE("fixed point equation") {
    auto eq = QuadIrr::make(1, 2, 37).fixed_point_equation();
    CHECK(eq == std::array<Integer, 3>{1, -1, -9}); // l^2 - l - 9 = 0
    eq = QuadIrr::make(0, 1, 37).fixed_point_equation();
    CHECK(eq == std::array<Integer, 3>{1, 0, -37});
    eq = QuadIrr::make(0, 1, 15).fixed_point_equation();
    CHECK(eq == std::array<Integer, 3>{1, 0, -15});
    // Roots are alpha and its conjugate: sum = 2a/c, product = b/c.
    for (const auto& e : random_elements(300, 60, 4)) {
        auto [A, B, C] = e.fixed_point_equation();
        CHECK(A > 0);
        CHECK(B * e.c() == A * (-2) * e.a());
        CHECK(C * e.c() == A * e.b());
        CHECK(gcd3(A, B, C) == 1);
    }
}

TEST_CASE("json round trip") {
    QuadIrr e = QuadIrr::make(1, 2, 37);
    auto j = e.to_json();
    CHECK(j["a"] == 1);
    CHECK(j["b"] == -18);
    CHECK(j["c"] == 2);
    CHECK(j["n"] == 37);
    CHECK(QuadIrr::from_json(j) == e);
}
