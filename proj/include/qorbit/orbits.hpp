#pragma once

#include "qorbit/group_action.hpp"
#include "qorbit/integer.hpp"
#include "qorbit/quad_irr.hpp"
#include "qorbit/residue.hpp"

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qorbit {

// All ambiguous numbers of Q*(sqrt(n)), sorted lexicographically by (a, c).
struct AmbiguousSet {
    Integer n;
    std::vector<QuadIrr> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(const QuadIrr& alpha) const;
};

/// Exact enumeration: a^2 < n, c ranging over divisors of a^2 - n of both
/// signs, gcd(a, b, c) = 1.  Throws DomainError for square or non-positive n.
AmbiguousSet enumerate_ambiguous(const Integer& n);

// One G-orbit, represented by its (finite) set of ambiguous members.
struct Orbit {
    std::vector<QuadIrr> component; // sorted by (a, c)
    QuadIrr rep;
    std::size_t ambiguous_length = 0;
    GWord fixing_word;
    SubsetLabel label;
};

/// Connected components of the ambiguity graph (x-, y- and y^2-edges
/// restricted to ambiguous elements).
std::vector<Orbit> orbit_decomposition(const Integer& n);

/// Closed-path traversal from an ambiguous start: at each step exactly one of
/// yx(k), y2x(k) is ambiguous; the word of the full cycle fixes the start.
/// Throws AmbiguityBranchError / NonClosureError as applicable.
GWord fixing_word(const QuadIrr& start);

/// Reduce alpha to an ambiguous element and return its orbit.
Orbit orbit_of(const QuadIrr& alpha);

nlohmann::json orbits_to_json(const Integer& n, const std::vector<Orbit>& orbits);

/// DOT export: x-edges arrowed from the negative to the positive vertex,
/// y-edges dashed.
std::string orbits_to_dot(const Integer& n, const std::string& tool_version);

} // namespace qorbit
