#include "qorbit/orbits.hpp"

#include "qorbit/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace qorbit {

namespace {

using Key = std::pair<Integer, Integer>; // (a, c) determines the triple for fixed n

Key key_of(const QuadIrr& alpha) { return {alpha.a(), alpha.c()}; }

} // namespace

bool AmbiguousSet::contains(const QuadIrr& alpha) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), alpha,
                               [](const QuadIrr& x, const QuadIrr& y) {
                                   return key_of(x) < key_of(y);
                               });
    return it != elements.end() && *it == alpha;
}

AmbiguousSet enumerate_ambiguous(const Integer& n) {
    if (n <= 0 || is_square(n))
        throw DomainError("enumerate_ambiguous: n must be positive non-square");
    AmbiguousSet set;
    set.n = n;
    Integer s = isqrt(n);
    for (Integer a = -s; a <= s; ++a) {
        Integer num = a * a - n; // negative
        for (const Integer& d : divisors(num)) {
            for (int sgn : {1, -1}) {
                Integer c = sgn * d;
                Integer b = num / c;
                if (gcd3(a, b, c) == 1)
                    set.elements.push_back(unchecked_triple(a, b, c, n));
            }
        }
    }
    std::sort(set.elements.begin(), set.elements.end(),
              [](const QuadIrr& x, const QuadIrr& y) { return key_of(x) < key_of(y); });
    return set;
}

GWord fixing_word(const QuadIrr& start) {
    if (!start.is_ambiguous()) throw DomainError("fixing_word: start must be ambiguous");
    std::size_t cap = enumerate_ambiguous(start.n()).size();
    std::vector<Letter> steps;
    QuadIrr cur = start;
    do {
        QuadIrr next_t = apply_letter(Letter::YX, cur);
        QuadIrr next_u = apply_letter(Letter::YYX, cur);
        bool t_amb = next_t.is_ambiguous(), u_amb = next_u.is_ambiguous();
        if (t_amb == u_amb)
            throw AmbiguityBranchError("fixing_word: " + std::string(t_amb ? "both" : "neither") +
                                       " of yx, y2x ambiguous at " + cur.str());
        steps.push_back(t_amb ? Letter::YX : Letter::YYX);
        cur = t_amb ? next_t : next_u;
        if (steps.size() > cap)
            throw NonClosureError("fixing_word: traversal did not close");
    } while (cur != start);
    return GWord(std::move(steps));
}

std::vector<Orbit> orbit_decomposition(const Integer& n) {
    AmbiguousSet set = enumerate_ambiguous(n);
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < set.elements.size(); ++i)
        index.emplace(key_of(set.elements[i]), i);

    std::vector<int> comp(set.elements.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < set.elements.size(); ++i) {
        if (comp[i] != -1) continue;
        int id = ncomp++;
        std::deque<std::size_t> queue{i};
        comp[i] = id;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            for (Letter g : {Letter::X, Letter::Y, Letter::YY}) {
                QuadIrr img = apply_letter(g, set.elements[cur]);
                if (!img.is_ambiguous()) continue;
                auto it = index.find(key_of(img));
                if (it == index.end())
                    throw NonClosureError("orbit_decomposition: image not in ambiguous set");
                if (comp[it->second] == -1) {
                    comp[it->second] = id;
                    queue.push_back(it->second);
                }
            }
        }
    }

    std::vector<Orbit> orbits;
    for (int id = 0; id < ncomp; ++id) {
        std::vector<QuadIrr> members;
        for (std::size_t i = 0; i < set.elements.size(); ++i)
            if (comp[i] == id) members.push_back(set.elements[i]);

        // Display rep: prefer sqrt(n)/d members (a = 0),
        // positive c first, then smaller |c|; otherwise the least triple.
        const QuadIrr* rep = nullptr;
        for (const QuadIrr& e : members) {
            if (e.a() != 0) continue;
            if (!rep) {
                rep = &e;
                continue;
            }
            auto rank = [](const QuadIrr& q) {
                return std::make_pair(q.c() < 0 ? 1 : 0, abs(q.c()));
            };
            if (rank(e) < rank(*rep)) rep = &e;
        }
        if (!rep)
            rep = &*std::min_element(members.begin(), members.end());

        Orbit orbit{std::move(members), *rep, 0, GWord{}, SubsetLabel{}};
        orbit.ambiguous_length = orbit.component.size();
        orbit.fixing_word = fixing_word(orbit.rep);
        orbit.label = subset_label(orbit.rep);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

Orbit orbit_of(const QuadIrr& alpha) {
    auto [beta, w] = reduce_to_ambiguous(alpha);
    (void)w;
    for (Orbit& orbit : orbit_decomposition(alpha.n())) {
        if (std::binary_search(orbit.component.begin(), orbit.component.end(), beta,
                               [](const QuadIrr& x, const QuadIrr& y) {
                                   return key_of(x) < key_of(y);
                               }))
            return std::move(orbit);
    }
    throw NonClosureError("orbit_of: reduced element not found in any component");
}

nlohmann::json orbits_to_json(const Integer& n, const std::vector<Orbit>& orbits) {
    std::size_t tau = 0;
    for (const Orbit& o : orbits) tau += o.ambiguous_length;
    nlohmann::json jorbits = nlohmann::json::array();
    for (const Orbit& o : orbits) {
        jorbits.push_back({{"rep", o.rep.to_json()},
                           {"length", o.ambiguous_length},
                           {"word", o.fixing_word.str()},
                           {"label", o.label.to_json()}});
    }
    return {{"n", n.convert_to<long long>()}, {"tau", tau}, {"orbits", jorbits}};
}

std::string orbits_to_dot(const Integer& n, const std::string& tool_version) {
    AmbiguousSet set = enumerate_ambiguous(n);
    std::ostringstream os;
    os << "// qorbit " << tool_version << " n=" << n << " tau=" << set.size() << "\n";
    os << "digraph ambiguous_" << n << " {\n";
    auto node = [](const QuadIrr& e) {
        std::ostringstream id;
        id << "\"" << e.a() << "," << e.b() << "," << e.c() << "\"";
        return id.str();
    };
    for (const QuadIrr& e : set.elements) os << "  " << node(e) << ";\n";
    for (const QuadIrr& e : set.elements) {
        // x-edges once each, arrowed from the negative to the positive vertex.
        if (e.sign() < 0) os << "  " << node(e) << " -> " << node(apply_letter(Letter::X, e)) << ";\n";
        // y-edges as dashed arcs; the reverse arc is the y^2-edge.
        QuadIrr img = apply_letter(Letter::Y, e);
        if (img.is_ambiguous())
            os << "  " << node(e) << " -> " << node(img) << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace qorbit
