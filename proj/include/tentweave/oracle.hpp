#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tentweave/embedding.hpp"
#include "tentweave/symbolic.hpp"

namespace tentweave {

// Max (top) or min under <_L over every admissible word of length D ending in
// B, found by exhaustive search. Words are written s_D...s_1.
Word brute_extremum(const Word& B, const Kneading& nu, const EPSeq& L, std::size_t D, bool top);

struct BruteMatch {
    std::size_t m;  // s_m...s_1 = c_1...c_m
    bool odd;       // parity of ones in the match
};
std::vector<BruteMatch> brute_matches(const EPSeq& s, const EPSeq& nu, std::size_t depth);

// First A_i of the forced decomposition of L beyond B, built from the
// admissibility definition. Stops after `symbols` symbols of L.
std::vector<Word> brute_alters_parts(const Word& B, const Kneading& nu, const EPSeq& L, std::size_t symbols);

// A slope in (sqrt2, 2] whose kneading sequence starts with w, found by
// bisection (kneading sequences increase with the slope).
std::optional<double> slope_for_prefix(const Word& w);
bool realized_by_slope(const EPSeq& nu, std::size_t depth = 36);

}  // namespace tentweave
