#pragma once

#include "qorbit/integer.hpp"
#include "qorbit/quad_irr.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qorbit {

// Generators of G = <x, y : x^2 = y^3 = 1> and the derived maps
// yx(z) = z + 1, y2x(z) = z/(z + 1).
enum class Letter { X, Y, YY, YX, YYX };

std::string letter_str(Letter g);

// A word over the generators.  Letters are stored in APPLICATION ORDER:
// letters[0] acts first.  The serialized form reads right-to-left, i.e. the
// word "(yx)^3(y2x)^1(yx)^3" applies its rightmost (yx)^3 first.
//
// Grammar (canonical output is whitespace-free, powers always explicit on
// composite letters):
//   word := term+
//   term := "(yx)" pow | "(y2x)" pow | "x" | "y" | "y2"
//   pow  := "" | "^" positive-integer
struct GWord {
    std::vector<Letter> letters;

    GWord() = default;
    explicit GWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    std::string str() const;
    static GWord parse(const std::string& text);

    friend bool operator==(const GWord& u, const GWord& v) { return u.letters == v.letters; }
};

// Element of PSL(2,Z): 2x2 integer matrix with det +1, identified with its
// negation.  Stored sign-normalized (first nonzero entry positive).
struct GMatrix {
    // Row-major: m[0] m[1] / m[2] m[3].
    std::array<Integer, 4> m{1, 0, 0, 1};

    GMatrix() = default;
    GMatrix(Integer a, Integer b, Integer c, Integer d);

    Integer det() const { return m[0] * m[3] - m[1] * m[2]; }
    GMatrix operator*(const GMatrix& o) const;

    friend bool operator==(const GMatrix& u, const GMatrix& v) { return u.m == v.m; }
};

QuadIrr apply_letter(Letter g, const QuadIrr& alpha);
QuadIrr apply_word(const GWord& w, const QuadIrr& alpha);

GMatrix letter_matrix(Letter g);
GMatrix matrix_of(const GWord& w);

/// Euclidean decomposition of a det +1 matrix into a word acting as the same
/// Moebius map.  Throws DomainError when det != +1.
GWord word_of(const GMatrix& M);

/// Moebius action of a det +-1 matrix on an element (exact).
QuadIrr apply_matrix(const GMatrix& M, const QuadIrr& alpha);

/// Continued-fraction reduction to an ambiguous element: returns (beta, w)
/// with beta ambiguous and apply_word(w, alpha) == beta.  The word is
/// assembled from an even number of CF steps so it lies in PSL(2,Z).
std::pair<QuadIrr, GWord> reduce_to_ambiguous(const QuadIrr& alpha,
                                              std::size_t max_steps = 1000000);

/// Single continued-fraction step alpha -> 1/(alpha - floor(alpha)),
/// exposed for the CLI's --trace.
QuadIrr cf_step(const QuadIrr& alpha);

/// alpha > 1 and conjugate in (-1, 0).  Reduced surds are ambiguous.
bool is_reduced_surd(const QuadIrr& alpha);

} // namespace qorbit
