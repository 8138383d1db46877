#include "qorbit/group_action.hpp"

#include "qorbit/errors.hpp"

#include <cassert>
#include <sstream>

namespace qorbit {

std::string letter_str(Letter g) {
    switch (g) {
    case Letter::X: return "x";
    case Letter::Y: return "y";
    case Letter::YY: return "y2";
    case Letter::YX: return "(yx)";
    case Letter::YYX: return "(y2x)";
    }
    return "?";
}

std::string GWord::str() const {
    // Serialized right-to-left: the first applied letter is printed last.
    std::ostringstream os;
    auto it = letters.rbegin();
    while (it != letters.rend()) {
        Letter g = *it;
        if (g == Letter::YX || g == Letter::YYX) {
            std::size_t run = 0;
            while (it != letters.rend() && *it == g) {
                ++run;
                ++it;
            }
            os << letter_str(g) << "^" << run;
        } else {
            os << letter_str(g);
            ++it;
        }
    }
    return os.str();
}

GWord GWord::parse(const std::string& text) {
    std::vector<Letter> seq; // printed order (leftmost first)
    std::size_t i = 0;
    auto fail = [&] { throw DomainError("GWord::parse: bad word at offset " + std::to_string(i)); };
    while (i < text.size()) {
        Letter g;
        bool composite = false;
        if (text.compare(i, 4, "(yx)") == 0) {
            g = Letter::YX;
            composite = true;
            i += 4;
        } else if (text.compare(i, 5, "(y2x)") == 0) {
            g = Letter::YYX;
            composite = true;
            i += 5;
        } else if (text.compare(i, 2, "y2") == 0) {
            g = Letter::YY;
            i += 2;
        } else if (text[i] == 'y') {
            g = Letter::Y;
            i += 1;
        } else if (text[i] == 'x') {
            g = Letter::X;
            i += 1;
        } else {
            fail();
        }
        std::size_t pow = 1;
        if (composite && i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) fail();
            pow = std::stoull(text.substr(start, i - start));
            if (pow == 0) fail();
        }
        seq.insert(seq.end(), pow, g);
    }
    return GWord(std::vector<Letter>(seq.rbegin(), seq.rend()));
}

GMatrix::GMatrix(Integer a, Integer b, Integer c, Integer d)
    : m{std::move(a), std::move(b), std::move(c), std::move(d)} {
    // Normalize the PSL sign: first nonzero entry positive.
    for (auto& e : m) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& f : m) f = -f;
        break;
    }
}

GMatrix GMatrix::operator*(const GMatrix& o) const {
    return GMatrix(m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                   m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]);
}

QuadIrr apply_letter(Letter g, const QuadIrr& alpha) {
    const Integer &a = alpha.a(), &b = alpha.b(), &c = alpha.c(), &n = alpha.n();
    switch (g) {
    case Letter::X:
        return unchecked_triple(-a, c, b, n);
    case Letter::Y:
        return unchecked_triple(b - a, b + c - 2 * a, b, n);
    case Letter::YY:
        return apply_letter(Letter::Y, apply_letter(Letter::Y, alpha));
    case Letter::YX:
        return unchecked_triple(a + c, 2 * a + b + c, c, n);
    case Letter::YYX:
        return unchecked_triple(a + b, b, 2 * a + b + c, n);
    }
    throw DomainError("apply_letter: bad letter");
}

QuadIrr apply_word(const GWord& w, const QuadIrr& alpha) {
    QuadIrr cur = alpha;
    for (Letter g : w.letters) cur = apply_letter(g, cur);
    return cur;
}

GMatrix letter_matrix(Letter g) {
    switch (g) {
    case Letter::X: return GMatrix(0, -1, 1, 0);
    case Letter::Y: return GMatrix(1, -1, 1, 0);
    case Letter::YY: return GMatrix(0, -1, 1, -1);
    case Letter::YX: return GMatrix(1, 1, 0, 1);
    case Letter::YYX: return GMatrix(1, 0, 1, 1);
    }
    throw DomainError("letter_matrix: bad letter");
}

GMatrix matrix_of(const GWord& w) {
    GMatrix M;
    for (Letter g : w.letters) M = letter_matrix(g) * M;
    return M;
}

GWord word_of(const GMatrix& M) {
    if (M.det() != 1) throw DomainError("word_of: matrix must have determinant +1");
    // Euclidean decomposition M = +- T^{q1} S T^{q2} S ... with T = yx and
    // S = x.  Negative powers of T use T^{-1} = S (y2x) S in PSL(2,Z).
    struct Token {
        bool is_s;
        Integer q;
    };
    std::vector<Token> tokens;
    Integer r = M.m[0], s = M.m[1], t = M.m[2], u = M.m[3];
    while (t != 0) {
        Integer q = floor_div(r, t);
        tokens.push_back({false, q});
        tokens.push_back({true, 0});
        Integer r2 = t, s2 = u, t2 = -(r - q * t), u2 = -(s - q * u);
        r = r2;
        s = s2;
        t = t2;
        u = u2;
    }
    // Now +-[[1, q], [0, 1]].
    Integer q = (r > 0) ? s : -s;
    if (q != 0) tokens.push_back({false, q});

    std::vector<Letter> printed; // leftmost (last applied) first
    for (const Token& tok : tokens) {
        if (tok.is_s) {
            printed.push_back(Letter::X);
        } else if (tok.q > 0) {
            for (Integer i = 0; i < tok.q; ++i) printed.push_back(Letter::YX);
        } else if (tok.q < 0) {
            printed.push_back(Letter::X);
            for (Integer i = 0; i < -tok.q; ++i) printed.push_back(Letter::YYX);
            printed.push_back(Letter::X);
        }
    }
    return GWord(std::vector<Letter>(printed.rbegin(), printed.rend()));
}

QuadIrr apply_matrix(const GMatrix& M, const QuadIrr& alpha) {
    Integer d = M.det();
    if (d != 1 && d != -1) throw DomainError("apply_matrix: determinant must be +-1");
    const Integer &a = alpha.a(), &c = alpha.c(), &n = alpha.n();
    const Integer &r = M.m[0], &s = M.m[1], &t = M.m[2], &u = M.m[3];
    Integer num = (r * a + s * c) * (t * a + u * c) - r * t * n;
    Integer den = (t * a + u * c) * (t * a + u * c) - t * t * n;
    assert(num % c == 0 && den % c == 0);
    Integer a2 = num / c;
    Integer c2 = den / c;
    if (d == -1) {
        // The conjugate root was selected; flip to the +sqrt(n) branch.
        a2 = -a2;
        c2 = -c2;
    }
    assert((a2 * a2 - n) % c2 == 0);
    Integer b2 = (a2 * a2 - n) / c2;
    return unchecked_triple(std::move(a2), std::move(b2), std::move(c2), n);
}

QuadIrr cf_step(const QuadIrr& alpha) {
    // alpha -> 1/(alpha - floor(alpha)) on triples.
    const Integer &a = alpha.a(), &b = alpha.b(), &c = alpha.c();
    Integer m = alpha.floor();
    Integer A = a - m * c;
    Integer B = b - 2 * a * m + m * m * c;
    return unchecked_triple(-A, -c, -B, alpha.n());
}

bool is_reduced_surd(const QuadIrr& alpha) {
    return alpha.floor() >= 1 && alpha.conjugate().floor() == -1;
}

std::pair<QuadIrr, GWord> reduce_to_ambiguous(const QuadIrr& alpha, std::size_t max_steps) {
    if (alpha.is_ambiguous()) return {alpha, GWord{}};
    QuadIrr cur = alpha;
    GMatrix F;
    std::size_t steps = 0;
    auto one_step = [&] {
        Integer m = cur.floor();
        // z -> 1/(z - m), determinant -1.
        F = GMatrix(0, 1, 1, -m) * F;
        cur = cf_step(cur);
        ++steps;
    };
    while (!is_reduced_surd(cur)) {
        if (steps >= max_steps)
            throw NonTerminationError("reduce_to_ambiguous: iteration cap exceeded");
        one_step();
    }
    // Only even-length CF compositions lie in PSL(2,Z); a reduced surd steps
    // to a reduced surd, so one padding step is safe.
    if (steps % 2 == 1) one_step();
    assert(cur.is_ambiguous());
    GWord w = word_of(F);
    assert(apply_word(w, alpha) == cur);
    return {cur, w};
}

} // namespace qorbit
