#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tentweave/arcs.hpp"
#include "tentweave/symbolic.hpp"

namespace tentweave {

struct EmbeddingSpec {
    Kneading nu;
    EPSeq L;
    std::optional<double> slope;
};

// s <_L t per the parity rule relative to L; works on left-infinite sequences.
Ordering order_L_compare(const EPSeq& s, const EPSeq& t, const EPSeq& L);
// Same order on finite words of equal length written a_n...a_1.
Ordering order_L_compare(const Word& s, const Word& t, const EPSeq& L);

// Ternary digits of psi_L: digit i is 2 when the parities of ones in
// l_i..l_1 and s_i..s_1 agree, else 0.
std::string psi_digits(const EPSeq& s, const EPSeq& L, std::size_t digits);
std::string psi_digits(const Word& s, const EPSeq& L);
std::string psi_L(const EPSeq& s, const EPSeq& L, std::size_t digits);  // "0.2020(3)"
double ternary_value(const std::string& digits);

struct CylinderExtremum {
    EPSeq seq;             // exact when !provisional
    Word word;             // s_depth...s_1 of the greedy run
    bool provisional = false;
    std::size_t depth = 0;  // verified symbols when provisional
};

CylinderExtremum cylinder_top(const Word& B, const EmbeddingSpec& spec, std::size_t depth = 64);
CylinderExtremum cylinder_bottom(const Word& B, const EmbeddingSpec& spec, std::size_t depth = 64);

// All admissible words of length n, written a_n...a_1.
std::vector<Word> admissible_words(std::size_t n, const Kneading& nu);

struct PlanarArc {
    Word cylinder;
    EPSeq rep;
    std::string y;
    OrbitPoint x_left;
    OrbitPoint x_right;
    std::optional<Interval> x_numeric;
};

enum class Side { Left, Right };
const char* to_string(Side s);

struct Join {
    std::size_t i;
    std::size_t j;
    Side side;
};

struct EmbeddingApprox {
    EmbeddingSpec spec;
    std::size_t depth = 0;
    std::vector<PlanarArc> arcs;  // sorted by <_L, bottom first
    std::vector<Join> joins;
};

EmbeddingApprox build_embedding(const EmbeddingSpec& spec, std::size_t depth);

struct PlanarityResult {
    bool planar = true;
    std::vector<std::string> violations;
};

PlanarityResult check_planarity(const EmbeddingApprox& e);

enum class Equivalence { Equivalent, Unknown };
Equivalence embeddings_equivalent_by_tail(const EPSeq& L1, const EPSeq& L2);

struct SvgStyle {
    double width = 900;
    double height = 600;
    double stroke = 1.2;
};

std::string render_svg(const EmbeddingApprox& e, const SvgStyle& style = {});

}  // namespace tentweave
