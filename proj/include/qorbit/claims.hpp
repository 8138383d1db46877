#pragma once

#include "qorbit/integer.hpp"

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qorbit {

enum class ClaimStatus { confirmed, refuted, inapplicable };

std::string status_str(ClaimStatus s);

// Outcome of empirically checking one of the named claims.
// Refuted reports carry replayable counterexamples: each one re-validates
// against the base library when reconstructed from its JSON.
struct ClaimReport {
    std::string claim;
    nlohmann::json params = nlohmann::json::object();
    ClaimStatus status = ClaimStatus::confirmed;
    nlohmann::json counterexamples = nlohmann::json::array();
    nlohmann::json statistics = nlohmann::json::object();

    nlohmann::json to_json() const;
};

/// Orbit counts, ambiguous lengths and fixing words for n = 15 and n = 30.
ClaimReport verify_table1();

/// Realized subset-label counts vs 2^r.
ClaimReport verify_thm_2_4(const std::vector<Integer>& ns);

/// Two orbits of Q*(sqrt(2^h)) for odd h >= 3.
ClaimReport verify_thm_2_8(const std::vector<int>& hs);

/// Four G-subsets when n = 0 (mod 2pq): label constancy and realized count.
ClaimReport verify_lemma_2_1(const std::vector<Integer>& ns);

/// (yx)^k [0,0,c] = [kc, k^2c, c] (mod p), and (yx)^p fixes the class.
ClaimReport verify_lemma_3_1(const std::vector<Integer>& ps);

/// Single-prime subset labels are constant on every orbit, all non-square
/// n <= nmax with an odd prime divisor.
ClaimReport verify_thm_3_3(const Integer& nmax);

/// "n q.r. of p iff b or c = 0 (mod p)": forward and converse scanned
/// separately over the ambiguous set.
ClaimReport check_lemma_3_5(const Integer& n, const Integer& p);

/// Constancy of the (c/p)-based G1/G2 assignment under yx and y2x.
ClaimReport check_thm_3_6(const Integer& n, const Integer& p);

/// Sixteen orbits for n = 1155 and 2310, with the listed representatives
/// pairwise in distinct orbits covering all components.
ClaimReport verify_illu_2_7();

/// Two orbits for n = 128 and the word fixing 8*sqrt(2).
ClaimReport verify_illu_2_9();

/// The mod-5 A1/A2/C1/C2 class lists.
ClaimReport verify_illu_3_4();

/// n = 37: tau* = 124, orbit lengths 48/28/24/24, the words g1..g4 and the
/// fixed-point equation of (1+sqrt(37))/2.
ClaimReport verify_illu_3_9();

// Options for the CLI dispatcher; empty vectors select per-claim defaults.
struct ClaimOptions {
    std::vector<Integer> ns;
    std::vector<Integer> ps;
    Integer nmax = 0;
};

/// Dispatch by claim id: table1, lemma2.1, thm2.4, thm2.8, lemma3.1, thm3.3,
/// lemma3.5, thm3.6, illu2.7, illu2.9, illu3.4, illu3.9.
ClaimReport run_claim(const std::string& claim, const ClaimOptions& opts);

std::vector<std::string> known_claims();

} // namespace qorbit
