#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tentweave/arcs.hpp"
#include "tentweave/embedding.hpp"

namespace tentweave {

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

struct Verdict {
    Tri value = Tri::Unknown;
    std::size_t depth = 0;
    std::vector<std::string> witness;
};

struct FoldingPoint {
    PointItinerary itinerary;
    bool is_endpoint = false;
    std::size_t shift_class = 0;
};

std::vector<FoldingPoint> folding_points(const Kneading& nu);

// Yes with witness B when s is the top or bottom of [B] for some suffix B of s
// with |B| <= depth.
Verdict is_extremum_of_cylinder(const EPSeq& s, const EmbeddingSpec& spec, std::size_t depth);

// Forced decomposition A_1, A_2, ... of L beyond B; witness lists the A_i.
Verdict alters(const Word& B, const EmbeddingSpec& spec, std::size_t depth);

struct CapPair {
    EPSeq y;  // below e
    EPSeq w;  // above e
    Side side;
    std::size_t m;  // e_m...e_1 = c_1...c_m, joined at index m+1
};

struct CapVerdict {
    Tri value = Tri::Unknown;
    std::size_t depth = 0;
    std::vector<CapPair> pairs;
    std::string reason;
};

CapVerdict is_capped(const PointItinerary& e, const EmbeddingSpec& spec, std::size_t depth);

// Re-checks order, admissibility and the join of every pair.
bool verify_cap_pairs(const PointItinerary& e, const EmbeddingSpec& spec, const std::vector<CapPair>& pairs);

enum class FoldType { Type1, Type2, Type3, NotAccessible, Unknown };
const char* to_string(FoldType t);

struct FoldingVerdict {
    FoldType type = FoldType::Unknown;
    bool order_reversing = false;
    std::size_t depth = 0;
    std::optional<Word> cylinder;            // Type 1 witness
    std::optional<EPSeq> accessible_half;    // Type 2: extremal arc on the accessible side
    std::vector<std::string> notes;
};

FoldingVerdict classify_folding_point(const FoldingPoint& p, const EmbeddingSpec& spec, std::size_t depth);

// Nearby arcs of a folding point p = *(P)Q of nu = 10(P)^inf at power K of P:
// long arcs flip(P[t]) P[t+1..] P^K Q and the short arc 0 P^K Q, each
// compared with p under <_L (+1 above, -1 below). Inadmissible words are left out.
struct FoldingRow {
    std::size_t K = 0;
    std::vector<int> long_sides;
    std::optional<int> short_side;
};
std::vector<FoldingRow> folding_table(const EPSeq& p, const EmbeddingSpec& spec, std::size_t K_from, std::size_t K_to);

struct AccessReport {
    EmbeddingSpec spec;
    std::size_t depth = 0;
    std::vector<EPSeq> tails;  // index-aligned tail representatives
    std::vector<std::pair<FoldingPoint, FoldingVerdict>> folding;
    std::vector<std::pair<FoldingPoint, CapVerdict>> capped;
    std::vector<std::string> notes;
};

// Distinct tails among all cylinder extrema with |B| <= depth.
std::vector<EPSeq> extremum_tails(const EmbeddingSpec& spec, std::size_t depth);
EPSeq tail_representative(const EPSeq& s);

AccessReport access_report(const EmbeddingSpec& spec, std::size_t depth, bool classify = true);

}  // namespace tentweave
