#include <doctest.h>

#include "qorbit/errors.hpp"
#include "qorbit/group_action.hpp"
#include "qorbit/orbits.hpp"
#include "qorbit/residue.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

using namespace qorbit;

namespace {

std::set<ResidueClass> as_set(const std::vector<ResidueClass>& v) {
    return std::set<ResidueClass>(v.begin(), v.end());
}

ResidueClass cls5(int a, int b, int c) { return ResidueClass{5, a, b, c}; }

} // namespace

TEST_CASE("enumerate_classes mod 5 for n = 0 (mod 5)") {
    auto classes = enumerate_classes(15, 5);
    CHECK(classes.size() == 24); // 8 with a=0 plus 16 with a nonzero
    int a0 = 0;
    for (const auto& cls : classes) {
        // Invariant: a^2 - n = bc (mod 5), not all components divisible.
        CHECK((cls.a * cls.a - 15 - cls.b * cls.c) % 5 == 0);
        CHECK((cls.a != 0 || cls.b != 0 || cls.c != 0));
        if (cls.a == 0) ++a0;
    }
    CHECK(a0 == 8);
    CHECK(as_set(classes).count(cls5(2, 4, 1)) == 1);
}

TEST_CASE("enumerate_classes mod 2") {
    auto classes = enumerate_classes(30, 2);
    std::set<ResidueClass> want;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                if ((a * a - 30 - b * c) % 2 == 0) want.insert(ResidueClass{2, a, b, c});
            }
    CHECK(as_set(classes) == want);
    // For even n the invariant a^2 - n = bc (mod 2) forces a = bc (mod 2):
    // only [0,0,1], [0,1,0] and [1,1,1] survive.
    CHECK(classes.size() == 3);
}

TEST_CASE("enumerate_classes brute-force cross-check") {
    for (long long n : {15, 7, 37}) {
        for (long long s : {2, 3, 5, 7, 9, 10}) {
            std::set<ResidueClass> brute;
            auto primes = prime_divisors(s);
            for (long long a = 0; a < s; ++a)
                for (long long b = 0; b < s; ++b)
                    for (long long c = 0; c < s; ++c) {
                        if (((a * a - n - b * c) % s + s) % s != 0) continue;
                        bool prim = true;
                        for (const auto& q : primes) {
                            long long ql = q.convert_to<long long>();
                            if (a % ql == 0 && b % ql == 0 && c % ql == 0) prim = false;
                        }
                        if (prim) brute.insert(ResidueClass{s, a, b, c});
                    }
            CHECK(as_set(enumerate_classes(n, s)) == brute);
        }
    }
}

TEST_CASE("partition mod 5 reproduces the reference lists") {
    ACPartition part = partition_ACsets(15, 5);
    CHECK(as_set(part.A1) ==
          std::set<ResidueClass>{cls5(0, 0, 1), cls5(0, 0, 4), cls5(1, 1, 1), cls5(4, 1, 1),
                                 cls5(2, 4, 1), cls5(2, 1, 4), cls5(3, 1, 4), cls5(3, 4, 1),
                                 cls5(1, 4, 4), cls5(4, 4, 4)});
    CHECK(as_set(part.A2) ==
          std::set<ResidueClass>{cls5(0, 0, 2), cls5(0, 0, 3), cls5(2, 2, 2), cls5(3, 2, 2),
                                 cls5(2, 3, 3), cls5(4, 3, 2), cls5(4, 2, 3), cls5(1, 2, 3),
                                 cls5(1, 3, 2), cls5(3, 3, 3)});
    CHECK(as_set(part.C1) == std::set<ResidueClass>{cls5(0, 1, 0), cls5(0, 4, 0)});
    CHECK(as_set(part.C2) == std::set<ResidueClass>{cls5(0, 2, 0), cls5(0, 3, 0)});

    // Partition property: disjoint union of all classes.
    std::set<ResidueClass> all;
    std::size_t total = 0;
    for (const auto* part_set : {&part.A1, &part.A2, &part.C1, &part.C2}) {
        total += part_set->size();
        for (const auto& cls : *part_set) all.insert(cls);
    }
    CHECK(total == all.size());
    CHECK(all == as_set(enumerate_classes(15, 5)));

    CHECK_THROWS_AS(partition_ACsets(7, 5), DomainError); // 5 does not divide 7
    CHECK_THROWS_AS(partition_ACsets(15, 4), DomainError);
}

TEST_CASE("x connects A-classes to A or C classes per the S1/S2 split") {
    for (long long p : {3, 5, 7}) {
        long long n = 2 * p; // any n = 0 (mod p)
        ACPartition part = partition_ACsets(n, p);
        auto in = [](const std::vector<ResidueClass>& v, const ResidueClass& cls) {
            return std::find(v.begin(), v.end(), cls) != v.end();
        };
        auto x_image = [&](const ResidueClass& cls) {
            long long a = ((-cls.a) % p + p).convert_to<long long>() % p;
            return ResidueClass{p, a, cls.c, cls.b};
        };
        for (const auto& cls : part.A1) {
            ResidueClass img = x_image(cls);
            CHECK((in(part.A1, img) || in(part.C1, img)));
        }
        for (const auto& cls : part.A2) {
            ResidueClass img = x_image(cls);
            CHECK((in(part.A2, img) || in(part.C2, img)));
        }
    }
}

TEST_CASE("subset labels for n = 15") {
    auto l = subset_label(QuadIrr::make(0, 1, 15)); // sqrt(15)
    CHECK(l.signs == std::vector<std::pair<Integer, int>>{{3, 1}, {5, 1}});
    l = subset_label(QuadIrr::make(0, -1, 15)); // -sqrt(15)
    CHECK(l.signs == std::vector<std::pair<Integer, int>>{{3, -1}, {5, 1}});
    l = subset_label(QuadIrr::make(0, 3, 15)); // sqrt(15)/3: 3 | c, use b
    CHECK(l.signs == std::vector<std::pair<Integer, int>>{{3, 1}, {5, -1}});
    l = subset_label(QuadIrr::make(0, -3, 15));
    CHECK(l.signs == std::vector<std::pair<Integer, int>>{{3, -1}, {5, -1}});

    // The four orbits of n = 15 realize all four labels.
    std::set<SubsetLabel> labels;
    for (const auto& o : orbit_decomposition(15)) labels.insert(o.label);
    CHECK(labels.size() == 4);
}

TEST_CASE("label totality: p never divides both b and c") {
    for (long long n : {15, 30, 105, 210}) {
        for (const auto& e : enumerate_ambiguous(n).elements) {
            auto l = subset_label(e);
            CHECK(l.labeled);
            for (const auto& [mod, sign] : l.signs) CHECK((sign == 1 || sign == -1));
        }
    }
}

TEST_CASE("labels are constant on orbits (sampled)") {
    for (long long n : {15, 30, 37, 105, 128}) {
        for (const auto& o : orbit_decomposition(n)) {
            SubsetLabel first = subset_label(o.component.front());
            for (const auto& e : o.component) CHECK(subset_label(e) == first);
        }
    }
}

TEST_CASE("realized label counts") {
    // The predicted count is 2^r (r = number of odd primes dividing n),
    // but for odd squarefree n = 1 (mod 8) quadratic reciprocity forces the
    // product of the per-prime signs to +1 for every element: c divides
    // a^2 - n, so n is a square modulo every odd divisor of c, and with
    // n = 1 (mod 8) reciprocity plus (-1/n) = (2/n) = +1 gives Jacobi
    // (c/n) = +1.  Only 2^(r-1) labels are then realizable; n = 105 is the
    // smallest such case with r = 3.
    const std::tuple<long long, std::size_t, std::size_t> cases[] = {
        {15, 4, 4},    {30, 4, 4},     {105, 4, 8},
        {210, 8, 8},   {1155, 16, 16}, {2310, 16, 16}};
    for (auto [n, realized_want, predicted_want] : cases) {
        std::set<SubsetLabel> labels;
        for (const auto& e : enumerate_ambiguous(n).elements)
            labels.insert(subset_label(e));
        CHECK(labels.size() == realized_want);
        CHECK(predicted_subset_count(n) == Integer(predicted_want));
    }
    // More n = 1 (mod 8) cases where the halving shows up (r = 2).
    for (long long n : {33, 57, 65}) {
        std::set<SubsetLabel> labels;
        for (const auto& e : enumerate_ambiguous(n).elements) {
            auto l = subset_label(e);
            int product = 1;
            for (const auto& [mod, sign] : l.signs) product *= sign;
            CHECK(product == 1);
            labels.insert(l);
        }
        CHECK(labels.size() == 2);
        CHECK(predicted_subset_count(n) == 4);
    }
}

TEST_CASE("power-of-two labels") {
    CHECK(predicted_subset_count(128) == 2);
    CHECK(predicted_subset_count(8) == 2);
    CHECK(predicted_subset_count(2) == 1);
    std::set<SubsetLabel> labels;
    for (const auto& e : enumerate_ambiguous(128).elements) {
        auto l = subset_label(e);
        CHECK(l.labeled);
        labels.insert(l);
    }
    CHECK(labels.size() == 2);
    // n = 2: no rule applies, label is empty.
    CHECK(subset_label(QuadIrr::make(0, 1, 2)).empty());
}
