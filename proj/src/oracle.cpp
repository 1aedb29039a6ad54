#include "tentweave/oracle.hpp"

#include <cmath>
#include <functional>

namespace tentweave {

Word brute_extremum(const Word& B, const Kneading& nu, const EPSeq& L, std::size_t D, bool top) {
    if (!is_admissible_word(B, nu)) fail("NotAdmissible", "cylinder word " + B + " is not admissible");
    Word best;
    std::function<void(const Word&)> rec = [&](const Word& w) {
        if (w.size() == D) {
            if (best.empty()) {
                best = w;
                return;
            }
            Ordering o = order_L_compare(w, best, L);
            if ((top && o == Ordering::Greater) || (!top && o == Ordering::Less)) best = w;
            return;
        }
        for (char x : {'0', '1'})
            if (is_admissible_word(x + w, nu)) rec(x + w);
    };
    rec(B);
    return best;
}

std::vector<BruteMatch> brute_matches(const EPSeq& s, const EPSeq& nu, std::size_t depth) {
    std::vector<BruteMatch> out;
    for (std::size_t m = 0; m <= depth; ++m) {
        Word w = s.last(m);
        if (w == nu.first(m)) out.push_back({m, ones_parity_odd(w)});
    }
    return out;
}

std::vector<Word> brute_alters_parts(const Word& B, const Kneading& nu, const EPSeq& L, std::size_t symbols) {
    std::vector<Word> parts;
    Word w = B;
    const std::size_t n = B.size();
    std::size_t k = n + 1;
    bool first = true;
    while (k <= n + symbols) {
        Word part;
        if (!first) {
            char x = flip(L.at(k));
            if (!is_admissible_word(x + w, nu)) {
                w = L.at(k) + w;
                parts.push_back(Word(1, L.at(k)));
                ++k;
                continue;
            }
            w = x + w;
            part = Word(1, L.at(k));
            ++k;
        }
        for (;; ++k) {
            if (k > n + symbols) return parts;
            if (is_admissible_word(L.at(k) + w, nu)) {
                w = L.at(k) + w;
                part = L.at(k) + part;
                continue;
            }
            w = flip(L.at(k)) + w;
            part = L.at(k) + part;
            ++k;
            break;
        }
        parts.push_back(part);
        first = false;
    }
    return parts;
}

std::optional<double> slope_for_prefix(const Word& w) {
    auto cmp = [&](double slope) { return plex_compare(kneading_from_slope(slope, w.size()).first(w.size()), w); };
    // Smallest slope whose prefix is >= w, then the largest whose prefix is <= w.
    double lo = std::sqrt(2.0) + 1e-9, hi = 2.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = (lo + hi) / 2;
        (cmp(mid) == Ordering::Less ? lo : hi) = mid;
    }
    const double a = hi;
    lo = std::sqrt(2.0) + 1e-9, hi = 2.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = (lo + hi) / 2;
        (cmp(mid) == Ordering::Greater ? hi : lo) = mid;
    }
    for (double s : {(a + lo) / 2, a, lo})
        if (cmp(s) == Ordering::Equal) return s;
    return std::nullopt;
}

bool realized_by_slope(const EPSeq& nu, std::size_t depth) { return slope_for_prefix(nu.first(depth)).has_value(); }

}  // namespace tentweave
