#include "tentweave/accessibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace tentweave {

const char* to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

const char* to_string(FoldType t) {
    switch (t) {
        case FoldType::Type1: return "type1";
        case FoldType::Type2: return "type2";
        case FoldType::Type3: return "type3";
        case FoldType::NotAccessible: return "not_accessible";
        default: return "unknown";
    }
}

namespace {

const EPSeq& exact_nu(const Kneading& nu) {
    if (!nu.exact()) fail("NotFiniteOrbit", "kneading sequence " + nu.str() + " is only known as a prefix");
    return nu.seq();
}

bool is_knaster(const Kneading& nu) { return nu.exact() && nu.seq() == EPSeq::right("1", "0"); }

Word repeat(const Word& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < k; ++i) out += w;
    return out;
}

}  // namespace

std::vector<FoldingPoint> folding_points(const Kneading& nu) {
    const EPSeq& v = exact_nu(nu);
    const Word& P = v.period;
    std::vector<FoldingPoint> out;
    for (std::size_t i = 0; i < P.size(); ++i) {
        PointItinerary x{EPSeq::left(P, P.substr(0, i)), EPSeq::right("", P.substr(i) + P.substr(0, i))};
        out.push_back({x, is_endpoint(x, nu), i});
    }
    return out;
}

Verdict is_extremum_of_cylinder(const EPSeq& s, const EmbeddingSpec& spec, std::size_t depth) {
    if (s.dir != Dir::Left) fail("NotLeftInfinite", format(s));
    const EPSeq target = canonical(s);
    for (std::size_t k = 0; k <= depth; ++k) {
        Word B = target.last(k);
        for (bool top : {true, false}) {
            CylinderExtremum x = top ? cylinder_top(B, spec) : cylinder_bottom(B, spec);
            if (!x.provisional && canonical(x.seq) == target)
                return {Tri::Yes, k, {std::string(top ? "top" : "bottom") + " of [" + B + "]"}};
        }
    }
    return {Tri::Unknown, depth, {}};
}

Verdict alters(const Word& B, const EmbeddingSpec& spec, std::size_t depth) {
    const EPSeq& v = exact_nu(spec.nu);
    const EPSeq& L = spec.L;
    if (!is_admissible_word(B, spec.nu)) fail("NotAdmissible", "cylinder word " + B + " is not admissible");
    Automaton a(v);
    auto st = a.empty();
    for (std::size_t i = B.size(); i-- > 0;) a.push(st, B[i]);
    const std::size_t n = B.size();
    auto phase = [&](std::size_t k) { return (k - L.h() - 1) % L.p(); };
    std::vector<std::string> parts;
    std::set<std::pair<std::size_t, Automaton::State>> starts;
    std::size_t k = n + 1;
    bool first = true;
    while (k <= n + depth) {
        if (!first && k > L.h() && !starts.emplace(phase(k), st).second) {
            parts.push_back("periodic from index " + std::to_string(k));
            return {Tri::Yes, k - n, parts};
        }
        const std::size_t start = k;
        if (!first) {
            auto trial = st;
            if (!a.push(trial, flip(L.at(k)))) {
                a.push(st, L.at(k));
                ++k;
                parts.push_back(L.last(start).substr(0, 1));
                continue;
            }
            st = std::move(trial);
            ++k;
        }
        std::set<std::pair<std::size_t, Automaton::State>> copying;
        for (;;) {
            if (k > n + depth) return {Tri::Unknown, depth, parts};
            if (k > L.h() && !copying.emplace(phase(k), st).second)
                return {Tri::No, k - n, {"L is copied forever after index " + std::to_string(start - 1)}};
            auto trial = st;
            if (a.push(trial, L.at(k))) {
                st = std::move(trial);
                ++k;
                continue;
            }
            a.push(st, flip(L.at(k)));
            ++k;
            break;
        }
        parts.push_back(L.last(k - 1).substr(0, k - start));
        first = false;
    }
    return {Tri::Unknown, depth, parts};
}

namespace {

std::optional<CapPair> cap_pair(const EPSeq& e, const EmbeddingSpec& spec, Side side, std::size_t m,
                                std::size_t limit) {
    const Kneading& nu = spec.nu;
    const Word tail = e.last(m);
    for (std::size_t M = m + 2; M <= m + 2 + limit; ++M) {
        Word mid = e.last(M - 1).substr(0, M - m - 2);
        Word top = Word(1, flip(e.at(M))) + mid;
        EPSeq x0 = EPSeq::left("1", top + "0" + tail);
        EPSeq x1 = EPSeq::left("1", top + "1" + tail);
        if (!is_admissible_seq(x0, nu) || !is_admissible_seq(x1, nu)) continue;
        Tau t = side == Side::Right ? tau_R(x0, nu) : tau_L(x0, nu);
        if (!(t == Tau::finite(m + 1))) continue;
        Ordering a = order_L_compare(x0, e, spec.L);
        Ordering b = order_L_compare(x1, e, spec.L);
        if (a == Ordering::Equal || b == Ordering::Equal || a == b) continue;
        if (a == Ordering::Less) return CapPair{x0, x1, side, m};
        return CapPair{x1, x0, side, m};
    }
    return std::nullopt;
}

}  // namespace

CapVerdict is_capped(const PointItinerary& x, const EmbeddingSpec& spec, std::size_t depth) {
    const EPSeq& v = exact_nu(spec.nu);
    if (!is_endpoint(x, spec.nu)) fail("NotEndpoint", format(x) + " is not an endpoint");
    CapVerdict out;
    out.depth = depth;
    if (is_knaster(spec.nu)) {
        out.value = Tri::No;
        out.reason = "Knaster continuum has no capped endpoints";
        return out;
    }
    const EPSeq e = canonical(x.left);
    if (same_tail(e, spec.L)) {
        out.value = Tri::No;
        out.reason = "endpoint lies in the arc component of L";
        return out;
    }
    const std::size_t limit = 2 * lcm(e.p(), v.p()) + e.h() + v.h() + depth;
    for (Side side : {Side::Right, Side::Left}) {
        Tau t = side == Side::Right ? tau_R(e, spec.nu) : tau_L(e, spec.nu);
        if (!t.is_infinite()) continue;
        for (std::size_t m = 1; m <= depth; ++m) {
            if (e.last(m) != v.first(m)) continue;
            if (ones_parity_odd(e.last(m)) != (side == Side::Left)) continue;
            if (auto p = cap_pair(e, spec, side, m, limit)) out.pairs.push_back(*p);
        }
    }
    if (out.pairs.size() >= 3) {
        out.value = Tri::Yes;
        out.reason = std::to_string(out.pairs.size()) + " nested joined pairs around the endpoint";
    } else {
        out.reason = "fewer than three joined pairs up to depth " + std::to_string(depth);
    }
    return out;
}

bool verify_cap_pairs(const PointItinerary& x, const EmbeddingSpec& spec, const std::vector<CapPair>& pairs) {
    const EPSeq e = canonical(x.left);
    const EPSeq* prev_y = nullptr;
    const EPSeq* prev_w = nullptr;
    std::size_t prev_m = 0;
    for (const CapPair& p : pairs) {
        if (!is_admissible_seq(p.y, spec.nu) || !is_admissible_seq(p.w, spec.nu)) return false;
        if (order_L_compare(p.y, e, spec.L) != Ordering::Less) return false;
        if (order_L_compare(e, p.w, spec.L) != Ordering::Less) return false;
        Tau t = p.side == Side::Right ? tau_R(p.y, spec.nu) : tau_L(p.y, spec.nu);
        if (!(t == Tau::finite(p.m + 1)) || canonical(flip_at(p.y, p.m + 1)) != canonical(p.w)) return false;
        if (prev_y && prev_m < p.m && p.side == pairs.front().side) {
            if (order_L_compare(*prev_y, p.y, spec.L) != Ordering::Less) return false;
            if (order_L_compare(p.w, *prev_w, spec.L) != Ordering::Less) return false;
        }
        prev_y = &p.y;
        prev_w = &p.w;
        prev_m = p.m;
    }
    return true;
}

namespace {

// Walks the arc component through one endpoint of A(s) looking for a cylinder
// extremum.
std::optional<EPSeq> extremal_on_side(const EPSeq& s, const EmbeddingSpec& spec, Side side,
                                      std::size_t depth) {
    EPSeq cur = s;
    for (std::size_t step = 0; step < depth; ++step) {
        try {
            cur = side == Side::Left ? left_neighbour(cur, spec.nu) : right_neighbour(cur, spec.nu);
        } catch (const DomainError&) {
            return std::nullopt;
        }
        if (is_extremum_of_cylinder(cur, spec, depth).value == Tri::Yes) return canonical(cur);
        side = side == Side::Left ? Side::Right : Side::Left;
    }
    return std::nullopt;
}

}  // namespace

std::vector<FoldingRow> folding_table(const EPSeq& p0, const EmbeddingSpec& spec, std::size_t K_from, std::size_t K_to) {
    const EPSeq& v = exact_nu(spec.nu);
    if (v.head != "10") fail("WrongShape", "kneading sequence must be 10(P)^inf, got " + spec.nu.str());
    const EPSeq p = canonical(p0);
    const Word& P = v.period;
    const std::size_t n = P.size();
    std::optional<std::size_t> qlen;
    for (std::size_t i = 0; i < n; ++i)
        if (canonical(EPSeq::left(P, P.substr(0, i))) == p) qlen = i;
    if (!qlen) fail("NotFoldingPoint", format(p) + " is not a folding point");
    const Word Q = P.substr(0, *qlen);
    auto side = [&](const Word& w) { return order_L_compare(EPSeq::left("1", w), p, spec.L) == Ordering::Greater ? 1 : -1; };
    std::vector<FoldingRow> out;
    for (std::size_t K = K_from; K <= K_to; ++K) {
        FoldingRow row;
        row.K = K;
        const Word body = repeat(P, K) + Q;
        for (std::size_t t = 0; t + 1 < n; ++t) {
            Word w = Word(1, flip(P[t])) + P.substr(t + 1) + body;
            if (is_admissible_word(w, spec.nu)) row.long_sides.push_back(side(w));
        }
        if (Word w = "0" + body; is_admissible_word(w, spec.nu)) row.short_side = side(w);
        out.push_back(std::move(row));
    }
    return out;
}

FoldingVerdict classify_folding_point(const FoldingPoint& fp, const EmbeddingSpec& spec, std::size_t depth) {
    const EPSeq& v = exact_nu(spec.nu);
    FoldingVerdict out;
    out.depth = depth;
    const EPSeq p = canonical(fp.itinerary.left);
    const Verdict ext = is_extremum_of_cylinder(p, spec, depth);
    if (ext.value == Tri::Yes) {
        out.type = FoldType::Type1;
        out.cylinder = p.last(ext.depth);
        out.notes = ext.witness;
        return out;
    }
    if (v.h() == 0) {
        if (fp.is_endpoint && !is_knaster(spec.nu) && spec.L.period != "0") {
            CapVerdict cv = is_capped(fp.itinerary, spec, depth);
            if (cv.value == Tri::Yes) {
                out.type = FoldType::NotAccessible;
                out.notes.push_back("capped endpoint");
                return out;
            }
        }
        out.notes.push_back("periodic kneading sequence, folding point not decided");
        return out;
    }
    if (v.head != "10") {
        out.type = FoldType::NotAccessible;
        out.notes.push_back("preperiodic orbit with long head and no extremum up to depth " +
                            std::to_string(depth));
        return out;
    }
    out.order_reversing = ones(v.period) % 2 == 1;

    const EPSeq& L = spec.L;
    const std::size_t K0 = L.h() / v.p() + 2;
    const std::size_t W = std::max<std::size_t>(4 * L.p(), 8);
    bool long_side[2] = {false, false};                         // [below, above]
    bool short_side[2][2] = {{false, false}, {false, false}};  // [K parity][below, above]
    for (const FoldingRow& row : folding_table(p, spec, K0, K0 + W - 1)) {
        for (int side : row.long_sides) long_side[side > 0] = true;
        if (row.short_side) short_side[row.K % 2][*row.short_side > 0] = true;
    }
    if (long_side[0] && long_side[1]) {
        out.type = FoldType::NotAccessible;
        out.notes.push_back("long basic arcs on both sides");
        return out;
    }
    if (!long_side[0] && !long_side[1]) {
        out.notes.push_back("no long basic arcs");
        return out;
    }
    const int X = long_side[1] ? 1 : 0;
    const int Y = 1 - X;
    out.notes.push_back(std::string("long basic arcs ") + (X ? "above" : "below"));
    auto finish2 = [&] {
        out.type = FoldType::Type2;
        for (Side s : {Side::Left, Side::Right})
            if (auto h = extremal_on_side(p, spec, s, depth)) {
                out.accessible_half = *h;
                out.notes.push_back(std::string("extremal arc via ") + to_string(s) + " endpoint: " + format(*h));
                break;
            }
        return out;
    };
    if (!out.order_reversing) {
        if (short_side[0][Y] || short_side[1][Y]) return finish2();
        out.notes.push_back("all nearby arcs on one side but no cylinder found up to depth");
        return out;
    }
    const bool opp_even = short_side[0][Y];
    const bool opp_odd = short_side[1][Y];
    if (opp_even && opp_odd) {
        out.type = FoldType::Type3;
        return out;
    }
    if (opp_even || opp_odd) return finish2();
    out.notes.push_back("all nearby arcs on one side but no cylinder found up to depth");
    return out;
}

EPSeq tail_representative(const EPSeq& s) {
    auto [p, block] = tail_key(s);
    (void)p;
    return EPSeq::left(block);
}

std::vector<EPSeq> extremum_tails(const EmbeddingSpec& spec, std::size_t depth) {
    std::map<std::pair<std::size_t, Word>, EPSeq> seen;
    for (std::size_t n = 0; n <= depth; ++n)
        for (const Word& B : admissible_words(n, spec.nu))
            for (bool top : {true, false}) {
                CylinderExtremum x = top ? cylinder_top(B, spec) : cylinder_bottom(B, spec);
                if (x.provisional) continue;
                seen.emplace(tail_key(x.seq), tail_representative(x.seq));
            }
    std::vector<EPSeq> out;
    for (auto& [k, s] : seen) out.push_back(s);
    return out;
}

AccessReport access_report(const EmbeddingSpec& spec, std::size_t depth, bool classify) {
    AccessReport r;
    r.spec = spec;
    r.depth = depth;
    r.tails = extremum_tails(spec, depth);
    if (!spec.nu.exact()) {
        r.notes.push_back("kneading prefix only: folding points and capping skipped");
        return r;
    }
    if (!classify) return r;
    for (const FoldingPoint& fp : folding_points(spec.nu)) {
        r.folding.emplace_back(fp, classify_folding_point(fp, spec, depth));
        if (fp.is_endpoint && spec.nu.seq().h() == 0) r.capped.emplace_back(fp, is_capped(fp.itinerary, spec, depth));
    }
    return r;
}

}  // namespace tentweave
