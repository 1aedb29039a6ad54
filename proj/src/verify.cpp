#include "tentweave/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "tentweave/accessibility.hpp"
#include "tentweave/height.hpp"
#include "tentweave/oracle.hpp"

namespace tentweave {

namespace {

using Rng = std::mt19937_64;

struct Check {
    CheckResult r;
    explicit Check(std::string name) {
        r.name = std::move(name);
        r.pass = true;
    }
    bool expect(bool ok, const std::string& what) {
        if (!ok) {
            r.pass = false;
            if (r.counterexamples.size() < 8) r.counterexamples.push_back(what);
        }
        return ok;
    }
};

EmbeddingSpec spec(const char* nu, const char* L) { return {Kneading::parse(nu), parse_seq(L), std::nullopt}; }

Word random_word(Rng& rng, std::size_t n) {
    Word w(n, '0');
    for (char& c : w) c = rng() % 3 ? '1' : '0';
    return w;
}

EPSeq random_left(Rng& rng, const Kneading& nu) {
    for (int tries = 0; tries < 100000; ++tries) {
        EPSeq l = canonical(EPSeq::left(random_word(rng, 1 + rng() % 6), random_word(rng, rng() % 5)));
        if (is_admissible_seq(l, nu)) return l;
    }
    fail("NoSample", "no admissible left sequence found for " + nu.str());
}

std::vector<EPSeq> lefts_pool(Rng& rng, const Kneading& nu, std::size_t count) {
    std::vector<EPSeq> out;
    for (int tries = 0; out.size() < count && tries < 100000; ++tries) {
        EPSeq l = random_left(rng, nu);
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    return out;
}

std::string fmt_tails(const std::vector<EPSeq>& v) {
    std::string s;
    for (const EPSeq& x : v) s += (s.empty() ? "" : " ") + format(x);
    return "{" + s + "}";
}

std::set<std::pair<std::size_t, Word>> tail_keys(const std::vector<EPSeq>& v) {
    std::set<std::pair<std::size_t, Word>> out;
    for (const EPSeq& s : v) out.insert(tail_key(s));
    return out;
}

std::vector<double> irrational_heights() {
    std::vector<double> out;
    for (int i = 1; i <= 20; ++i) out.push_back(std::fmod(i * std::sqrt(2.0) + std::sqrt(3.0) / i, 0.49) + 0.005);
    return out;
}

std::vector<Rational> random_rationals(Rng& rng, std::size_t count) {
    std::vector<Rational> out;
    while (out.size() < count) {
        long long n = 3 + rng() % 60;
        long long m = 1 + rng() % n;
        if (2 * m >= n || std::gcd(m, n) != 1) continue;
        out.push_back(Rational::of(m, n));
    }
    return out;
}

const char* kPool[] = {"(101)*",     "(10010)*",   "1001(101)*", "(100111011)*", "(10011001001111)*", "10(01101)*",
                       "10(011)*",   "(1001011)*", "(1011010)*", "1(0)*",        "(100010)*",         "10(0111)*"};

// tau and projection for *(001) against nu = 10010...
CheckResult tau_projection(const VerifyConfig& cfg) {
    Check c("tau_projection");
    const EPSeq s = parse_seq("*(001)");
    const Kneading nu = Kneading::parse("(10010)*");
    c.expect(tau_L(s, nu) == Tau::finite(2), "tau_L = " + tau_L(s, nu).str());
    c.expect(tau_R(s, nu) == Tau::finite(5), "tau_R = " + tau_R(s, nu).str());
    BasicArc a = projection(s, nu);
    c.expect(a.left == OrbitPoint{false, 2} && a.right == OrbitPoint{false, 5}, "projection is not [T^2(c), T^5(c)]");

    // Seven symbols 1001011 pin both values; any slope with that prefix is compatible.
    const Kneading pre = Kneading::parse("1001011");
    c.expect(tau_L(s, pre) == Tau::finite(2) && tau_R(s, pre) == Tau::finite(5), "prefix 1001011 does not fix tau");
    auto slope = slope_for_prefix("1001011");
    if (!c.expect(slope.has_value(), "no slope with kneading prefix 1001011")) return c.r;
    TentParams tp(*slope);
    BasicArc b = projection(s, pre, *slope);
    Interval iv = numeric_backward_interval(s.last(60), tp);
    const double lo = tp.orbit(2), hi = tp.orbit(5);
    c.expect(b.numeric && std::abs(b.numeric->lo - lo) < 1e-12 && std::abs(b.numeric->hi - hi) < 1e-12,
             "numeric projection differs from T^2(c), T^5(c)");
    c.expect(std::abs(iv.lo - lo) <= cfg.tolerance && std::abs(iv.hi - hi) <= cfg.tolerance,
             "oracle [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "] vs [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "]");
    c.r.detail = "slope " + std::to_string(*slope) + ", oracle [" + std::to_string(iv.lo) + ", " +
                 std::to_string(iv.hi) + "], symbolic [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    return c.r;
}

// Exact extrema of the worked examples.
CheckResult example_extrema(const VerifyConfig&) {
    Check c("example_extrema");
    auto eq = [&](const CylinderExtremum& x, const char* want, const std::string& what) {
        c.expect(x.seq == parse_seq(want), what + " = " + format(x.seq) + ", expected " + want);
    };
    EmbeddingSpec e1 = spec("(101)*", "*(01)");
    eq(cylinder_bottom("", e1), "*(10)", "S for (101)^inf, L=*(01)");
    eq(cylinder_top("", e1), "*(01)", "L for (101)^inf, L=*(01)");
    EmbeddingSpec e2 = spec("1001(101)*", "*((001)(001101))");
    eq(cylinder_bottom("", e2), "*((100)(101100))", "S for 1001(101)^inf");
    EmbeddingSpec e3 = spec("(100111011)*", "*(001)11");
    eq(cylinder_bottom("10", e3), "*(100)10110", "S_10 for (100111011)^inf");
    eq(cylinder_top("10", e3), "*(100)10", "L_10 for (100111011)^inf");
    c.r.detail = "5 exact extrema";
    return c.r;
}

// Closed-form extrema against exhaustive search.
CheckResult extrema_oracle(const VerifyConfig& cfg) {
    Check c("extrema_oracle");
    struct Case {
        Kneading nu;
        EPSeq L;
        std::function<Extrema(const Word&)> closed;
        std::string cls;
    };
    std::vector<Case> cases;
    for (const char* s : {"(101)*", "(100111011)*", "(10010)*"}) {
        Kneading nu = Kneading::parse(s);
        cases.push_back({nu, parse_seq("*(1)"), [nu](const Word& B) { return bruin_extrema(B, nu); }, "bruin"});
    }
    std::vector<Kneading> bd;
    for (const char* s : {"(10010)*", "(1011010)*", "(10111101011)*", "(101)*", "10(011)*", "(10111)*"})
        bd.push_back(Kneading::parse(s));
    bd.push_back(Kneading::of_prefix(pattern_prefix((std::sqrt(5.0) - 1) / 4, 40)));
    for (const Kneading& nu : bd) {
        HeightClass h = classify_kneading(nu);
        std::string cls = h.kind == HeightClass::Kind::Interior ? "interior" : "L'";
        cases.push_back({nu, parse_seq("*(0)1"), [nu, h](const Word& B) { return bd_extrema(B, nu, h); }, cls});
    }
    std::map<std::string, std::size_t> per_class;
    std::size_t compared = 0;
    bool injected = false;
    for (const Case& k : cases) {
        per_class[k.cls]++;
        for (std::size_t n = 1; n <= cfg.extrema_len; ++n)
            for (const Word& B : admissible_words(n, k.nu)) {
                Extrema e = k.closed(B);
                const std::size_t D = B.size() + 8;
                if (cfg.corrupt_extrema && !injected) {
                    e.top = flip_at(e.top, D);
                    injected = true;
                }
                for (bool top : {true, false}) {
                    const EPSeq& got = top ? e.top : e.bottom;
                    const Word want = brute_extremum(B, k.nu, k.L, D, top);
                    ++compared;
                    c.expect(got.last(D) == want, "nu=" + k.nu.str() + " L=" + format(k.L) + " B=" + B +
                                                      (top ? " top " : " bottom ") + format(got) + " vs " + want);
                }
            }
    }
    for (auto& [cls, n] : per_class) c.expect(n >= 3, "fewer than 3 kneading sequences for class " + cls);
    c.r.detail = std::to_string(compared) + " extrema compared with exhaustive search, |B| <= " +
                 std::to_string(cfg.extrema_len);
    return c.r;
}

// <_L and psi_L agree.
CheckResult order_coordinates(const VerifyConfig& cfg) {
    Check c("order_coordinates");
    std::size_t words = 0;
    for (auto [n, l] : {std::pair{"(101)*", "*(01)"}, {"1001(101)*", "*((001)(001101))"}, {"(100111011)*", "*(001)11"},
                        {"1(0)*", "*(1)"}}) {
        EmbeddingSpec s = spec(n, l);
        auto ws = admissible_words(cfg.depth, s.nu);
        std::sort(ws.begin(), ws.end(), [&](const Word& a, const Word& b) { return order_L_compare(a, b, s.L) == Ordering::Less; });
        std::string prev;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            std::string p = psi_digits(ws[i], s.L);
            c.expect(p.find_first_not_of("02") == std::string::npos, "digit outside {0,2} for " + ws[i]);
            if (i > 0) c.expect(prev < p, "psi not increasing at " + ws[i - 1] + " < " + ws[i] + " for nu=" + n);
            prev = std::move(p);
        }
        words += ws.size();
    }
    std::vector<Word> ws = {"000", "001", "010", "011", "100", "101", "110", "111"};
    const EPSeq L = parse_seq("*(01)");
    std::sort(ws.begin(), ws.end(), [&](const Word& a, const Word& b) { return order_L_compare(a, b, L) == Ordering::Less; });
    c.expect(ws == std::vector<Word>{"100", "000", "010", "110", "111", "011", "001", "101"}, "depth-3 cylinder order");
    c.r.detail = std::to_string(words) + " words of length " + std::to_string(cfg.depth) + " in 4 embeddings";
    return c.r;
}

// Planarity of generated approximations and rejection of crossings.
CheckResult planarity(const VerifyConfig& cfg) {
    Check c("planarity");
    Rng rng(cfg.seed);
    std::vector<Kneading> pool;
    for (const char* s : kPool) pool.push_back(Kneading::parse(s));
    for (std::size_t t = 0; t < cfg.planarity_trials; ++t) {
        const Kneading& nu = pool[rng() % pool.size()];
        EmbeddingSpec s{nu, random_left(rng, nu), std::nullopt};
        const std::size_t d = 1 + rng() % cfg.planarity_depth;
        PlanarityResult p = check_planarity(build_embedding(s, d));
        c.expect(p.planar, "nu=" + nu.str() + " L=" + format(s.L) + " depth " + std::to_string(d) + ": " +
                               (p.violations.empty() ? "" : p.violations.front()));
    }
    EmbeddingSpec sp = spec("(10010)*", "*(001)");
    auto arc = [](OrbitPoint l, OrbitPoint r) { return PlanarArc{"", parse_seq("*(1)"), "", l, r, std::nullopt}; };
    const OrbitPoint t2{false, 2}, t5{false, 5}, t1{false, 1};
    EmbeddingApprox a{sp, 1, {arc(t2, t5), arc(t2, t1), arc(t2, t5)}, {{0, 2, Side::Right}}};
    c.expect(!check_planarity(a).planar, "semicircle over a longer arc accepted");
    EmbeddingApprox b{sp, 1, {arc(t2, t5), arc(t2, t5), arc(t2, t5), arc(t2, t5)}, {{0, 2, Side::Right}, {1, 3, Side::Right}}};
    c.expect(!check_planarity(b).planar, "interleaved semicircles accepted");
    c.r.detail = std::to_string(cfg.planarity_trials) + " random approximations, 2 hand-built crossings";
    return c.r;
}

// Height regression, shift relation and Sturmian runs.
CheckResult height(const VerifyConfig& cfg) {
    Check c("height");
    HeightData h = build_height(Rational::of(9, 20));
    c.expect(h.c_q == "101111111101111111101", "c_q(9/20) = " + h.c_q);
    PalindromeSplit s = palindrome_split(h);
    c.expect(s.Y == "101111111101" && s.Z == "111111", "split Y=" + s.Y + " Z=" + s.Z);
    Rng rng(cfg.seed);
    for (const Rational& q : random_rationals(rng, 30)) {
        auto N = shift_relation_check(q);
        c.expect(N.has_value(), "sigma^N(rhe) != lhe for q=" + q.str());
    }
    for (double q : irrational_heights()) {
        auto k = kappa_seq(q, 10000);
        const int top = *std::max_element(k.begin() + 1, k.end());
        std::vector<std::size_t> runs;
        std::size_t run = 0;
        bool started = false;
        for (std::size_t i = 1; i < k.size(); ++i) {
            if (k[i] == top) {
                if (started) runs.push_back(run);
                started = true;
                run = 0;
            } else {
                ++run;
            }
        }
        if (runs.empty()) continue;
        auto [lo, hi] = std::minmax_element(runs.begin(), runs.end());
        c.expect(*hi - *lo <= 1, "run lengths not in {J, J+1} for q=" + std::to_string(q));
    }
    c.r.detail = "9/20 split, 30 random rationals, 20 heights over 10^4 terms";
    return c.r;
}

// Extremum tails of the accessibility examples.
CheckResult accessibility_tails(const VerifyConfig& cfg) {
    Check c("accessibility_tails");
    auto expect_tails = [&](const EmbeddingSpec& s, std::vector<const char*> want) {
        auto tails = extremum_tails(s, cfg.depth);
        bool ok = tails.size() == want.size();
        for (const char* w : want)
            ok = ok && std::any_of(tails.begin(), tails.end(), [&](const EPSeq& t) { return same_tail(t, parse_seq(w)); });
        c.expect(ok, "nu=" + s.nu.str() + " L=" + format(s.L) + " tails " + fmt_tails(tails));
        c.expect(tail_keys(extremum_tails(s, 8)) == tail_keys(tails), "tails change between depth 8 and " + std::to_string(cfg.depth));
    };
    expect_tails(spec("(101)*", "*(01)"), {"*(01)", "*(10)"});
    expect_tails(spec("(10011001001111)*", "*(0010011)"), {"*(0010011)", "*(10010110010010)", "*(10110010010100)1111"});
    expect_tails(spec("(10010)*", "*(001)"), {"*(001)", "*(100)"});
    expect_tails(spec("(100010)*", "*(0001)"), {"*(0001)", "*(1000)"});
    c.r.detail = "4 embeddings at depth " + std::to_string(cfg.depth);
    return c.r;
}

// Capping.
CheckResult capping(const VerifyConfig& cfg) {
    Check c("capping");
    Rng rng(cfg.seed);
    const Kneading knaster = Kneading::parse("1(0)*");
    const PointItinerary zero = parse_point("*(0).(0)*");
    for (const EPSeq& L : lefts_pool(rng, knaster, 50)) {
        EmbeddingSpec s{knaster, L, std::nullopt};
        c.expect(is_capped(zero, s, 40).value == Tri::No, "Knaster 0 capped for L=" + format(L));
    }
    EmbeddingSpec capped_spec = spec("(100111101011010111)*", "*(010111110011100111)");
    const PointItinerary e = parse_point("*(100111101011010111).(100111101011010111)*");
    CapVerdict v = is_capped(e, capped_spec, 120);
    bool right = !v.pairs.empty();
    for (const CapPair& p : v.pairs) right = right && p.side == Side::Right;
    c.expect(v.value == Tri::Yes && v.pairs.size() >= 3 && right, "example endpoint: " + v.reason);
    c.expect(verify_cap_pairs(e, capped_spec, v.pairs), "cap pairs of the example do not verify");
    std::size_t same = 0;
    for (const char* n : {"(101)*", "(10010)*", "(100111)*", "(1001101)*"}) {
        Kneading nu = Kneading::parse(n);
        for (const FoldingPoint& fp : folding_points(nu)) {
            if (!fp.is_endpoint) continue;
            const EPSeq& l = fp.itinerary.left;
            for (EPSeq L : {l, shift(l, l.p()), append(l, l.period)}) {
                if (!is_admissible_seq(L, nu)) continue;
                EmbeddingSpec s{nu, L, std::nullopt};
                c.expect(is_capped(fp.itinerary, s, 40).value == Tri::No, "tail-equivalent endpoint capped: " + format(fp.itinerary));
                ++same;
            }
        }
    }
    c.r.detail = "50 Knaster embeddings, " + std::to_string(v.pairs.size()) + " cap pairs for the example, " +
                 std::to_string(same) + " tail-equivalent endpoints";
    return c.r;
}

// Side pattern of the table of nearby arcs: some M <= 12 puts every
// long arc on one side X for N <= 12, with the short arcs as the type requires.
bool side_pattern_holds(const std::vector<FoldingRow>& rows, FoldType type, bool reversing) {
    auto row = [&](std::size_t K) -> const FoldingRow& { return rows[K - rows.front().K]; };
    for (std::size_t M = 1; M <= 12; ++M) {
        int X = 0;
        bool ok = true;
        for (std::size_t N = 1; N <= 12 && ok; ++N)
            for (int s : row(M + N).long_sides) {
                if (X == 0) X = s;
                ok = ok && s == X;
            }
        if (!ok || X == 0) continue;
        bool opposite[2] = {false, false}, all_same[2] = {true, true};
        for (std::size_t N = 1; N <= 12; ++N) {
            const FoldingRow& r = row(M + N);
            if (!r.short_side) continue;
            if (*r.short_side == -X) opposite[r.K % 2] = true;
            else all_same[r.K % 2] = all_same[r.K % 2] && *r.short_side == X;
            if (*r.short_side == -X) all_same[r.K % 2] = false;
        }
        if (type == FoldType::Type3 && opposite[0] && opposite[1]) return true;
        if (type == FoldType::Type2 && !reversing && (opposite[0] || opposite[1])) return true;
        if (type == FoldType::Type2 && reversing && ((opposite[0] && all_same[1]) || (opposite[1] && all_same[0])))
            return true;
    }
    return false;
}

// Folding-point types.
CheckResult folding_types(const VerifyConfig& cfg) {
    Check c("folding_types");
    struct Ex {
        const char* nu;
        const char* L;
        const char* p;
        FoldType type;
        bool reversing;
    };
    for (const Ex& x : {Ex{"10(01101001)*", "*(1010010111001001)", "*(01101001)01", FoldType::Type2, false},
                        Ex{"10(011101001)*", "*(011101001011110010)", "*(011101001)", FoldType::Type2, true},
                        Ex{"10(01101)*", "*(01110)", "*(01101)", FoldType::Type3, true}}) {
        EmbeddingSpec s = spec(x.nu, x.L);
        const EPSeq p = canonical(parse_seq(x.p));
        const Word& P = s.nu.seq().period;
        c.expect(P.back() == '1' && (ones(P) % 2 == 1) == x.reversing, std::string("period shape does not match the type for ") + x.nu);
        std::optional<FoldingVerdict> v;
        for (const FoldingPoint& fp : folding_points(s.nu))
            if (canonical(fp.itinerary.left) == p) v = classify_folding_point(fp, s, 40);
        if (!c.expect(v.has_value(), std::string("folding point not found: ") + x.p)) continue;
        c.expect(v->type == x.type && v->order_reversing == x.reversing,
                 std::string(x.nu) + " classified " + to_string(v->type));
        c.expect(side_pattern_holds(folding_table(p, s, 1, 24), x.type, x.reversing),
                 std::string("nearby arcs do not show the type for ") + x.nu);
    }
    Rng rng(cfg.seed);
    std::size_t checked = 0;
    for (const char* n : {"10(011)*", "10(0011)*", "10(00011)*", "10(0111)*", "10(00111)*", "10(000111)*"}) {
        Kneading nu = Kneading::parse(n);
        for (const EPSeq& L : lefts_pool(rng, nu, 20)) {
            EmbeddingSpec s{nu, L, std::nullopt};
            for (const FoldingPoint& fp : folding_points(nu)) {
                FoldType t = classify_folding_point(fp, s, 30).type;
                c.expect(t != FoldType::Type2 && t != FoldType::Type3,
                         std::string(n) + " L=" + format(L) + " gives " + to_string(t));
                ++checked;
            }
        }
    }
    c.r.detail = "3 examples, " + std::to_string(checked) + " folding points of 10(0^a 1^b)^inf";
    return c.r;
}

// Standard embeddings.
CheckResult standard_embeddings(const VerifyConfig& cfg) {
    Check c("standard_embeddings");
    for (const char* n : {"(101)*", "(100111011)*", "(10010)*"}) {
        EmbeddingSpec s = spec(n, "*(1)");
        auto tails = extremum_tails(s, cfg.depth);
        c.expect(tails.size() == 1 && same_tail(tails[0], parse_seq("*(1)")), std::string("Bruin ") + n + " tails " + fmt_tails(tails));
    }
    for (auto [n, q] : {std::pair{"(10010)*", Rational{1, 3}}, {"(1011010)*", Rational{2, 5}},
                        {"(10111111110111111110)*", Rational{9, 20}}}) {
        EmbeddingSpec s = spec(n, "*(0)1");
        HeightClass h = classify_kneading(s.nu);
        c.expect(h.kind == HeightClass::Kind::Interior && h.q == q, std::string(n) + " is " + h.str());
        const EPSeq rl = reversed(build_height(q).lhe);
        std::vector<EPSeq> shifts;
        for (std::size_t i = 0; i < rl.p(); ++i) shifts.push_back(shift(rl, i));
        auto tails = extremum_tails(s, cfg.depth);
        c.expect(tail_keys(shifts).size() == rl.p() && tail_keys(tails) == tail_keys(shifts),
                 std::string("Brucks-Diamond ") + n + " tails " + fmt_tails(tails));
    }
    c.r.detail = "3 Bruin and 3 Brucks-Diamond embeddings at depth " + std::to_string(cfg.depth);
    return c.r;
}

CheckResult plex_total_order(const VerifyConfig& cfg) {
    Check c("plex_total_order");
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Word> ws;
        for (unsigned m = 0; m < (1u << n); ++m) {
            Word w;
            for (std::size_t i = 0; i < n; ++i) w += (m >> i & 1) ? '1' : '0';
            ws.push_back(w);
        }
        for (const Word& a : ws)
            for (const Word& b : ws) {
                const Ordering ab = plex_compare(a, b);
                c.expect(sign(ab) == -sign(plex_compare(b, a)), "antisymmetry " + a + " " + b);
                c.expect((ab == Ordering::Equal) == (a == b), "equality " + a + " " + b);
                if (ab != Ordering::Less) continue;
                for (const Word& d : ws)
                    if (plex_compare(b, d) == Ordering::Less)
                        c.expect(plex_compare(a, d) == Ordering::Less, "transitivity " + a + " " + b + " " + d);
            }
    }
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        EPSeq a = canonical(EPSeq::right(random_word(rng, rng() % 4), random_word(rng, 1 + rng() % 5)));
        EPSeq b = canonical(EPSeq::right(random_word(rng, rng() % 4), random_word(rng, 1 + rng() % 5)));
        const std::size_t n = 4 + 2 * lcm(a.p(), b.p()) + a.h() + b.h();
        c.expect(plex_compare(a, b) == plex_compare(a.first(n), b.first(n)), format(a) + " vs " + format(b));
    }
    c.r.detail = "all triples up to length 5, " + std::to_string(cfg.samples) + " random sequences";
    return c.r;
}

CheckResult admissibility_subword_closed(const VerifyConfig&) {
    Check c("admissibility_subword_closed");
    std::size_t count = 0;
    for (const char* n : {"(101)*", "(10010)*", "1001(101)*", "(100111011)*"}) {
        Kneading nu = Kneading::parse(n);
        for (std::size_t len = 1; len <= 10; ++len)
            for (const Word& w : admissible_words(len, nu)) {
                c.expect(is_admissible_word(w.substr(1), nu) && is_admissible_word(w.substr(0, len - 1), nu),
                         "subword of " + w + " inadmissible for " + n);
                ++count;
            }
    }
    c.r.detail = std::to_string(count) + " admissible words up to length 10";
    return c.r;
}

CheckResult kneading_slopes(const VerifyConfig& cfg) {
    Check c("kneading_from_slope");
    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> d(std::sqrt(2.0) + 1e-3, 2.0);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        const double slope = d(rng);
        Kneading k = kneading_from_slope(slope, 40);
        Word w = k.exact() ? k.seq().first(40) : k.first(40);
        Kneading ref = k.exact() ? k : Kneading::of_prefix(w);
        c.expect(is_admissible_word(w.substr(0, 39), ref), "slope " + std::to_string(slope));
        if (k.exact() && k.seq().h() == 0 && k.seq().p() > 1) {
            Word alt = k.seq().period;
            alt.back() = flip(alt.back());
            c.expect(plex_compare(k.seq(), EPSeq::right("", alt)) != Ordering::Greater, "resolution at " + std::to_string(slope));
        }
    }
    c.r.detail = std::to_string(cfg.samples) + " random slopes";
    return c.r;
}

CheckResult oracle_soundness(const VerifyConfig& cfg) {
    Check c("oracle_soundness");
    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> d(1.45, 1.99);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        const double slope = d(rng);
        TentParams tp(slope);
        Kneading nu = kneading_from_slope(slope, 80);
        Word w;
        Interval prev = numeric_backward_interval(w, tp);
        for (int k = 0; k < 30; ++k) {
            char x = rng() % 2 ? '1' : '0';
            if (!is_admissible_word(Word(1, x) + w, nu)) x = flip(x);
            w = Word(1, x) + w;
            Interval iv{};
            try {
                iv = numeric_backward_interval(w, tp);
            } catch (const DomainError&) {
                c.expect(false, "empty interval for admissible " + w + " at slope " + std::to_string(slope));
                break;
            }
            c.expect(iv.lo >= prev.lo - 1e-12 && iv.hi <= prev.hi + 1e-12, "not nested at " + w);
            prev = iv;
        }
    }
    c.r.detail = std::to_string(cfg.samples) + " random admissible words of length 30";
    return c.r;
}

CheckResult oracle_agreement(const VerifyConfig& cfg) {
    Check c("oracle_agreement");
    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> d(1.45, 1.99);
    std::size_t checked = 0;
    while (checked < 100) {
        const double slope = d(rng);
        Kneading nu = kneading_from_slope(slope, 200);
        EPSeq s = random_left(rng, nu);
        BasicArc a = projection(s, nu, slope);
        if (!a.tau_l.is_finite() || !a.tau_r.is_finite() || !a.numeric) continue;
        Interval iv = numeric_backward_interval(s.last(60), TentParams(slope));
        const double dist = std::max(std::abs(iv.lo - a.numeric->lo), std::abs(iv.hi - a.numeric->hi));
        c.expect(dist <= cfg.tolerance, format(s) + " at slope " + std::to_string(slope));
        ++checked;
    }
    c.r.detail = "100 arcs with finite tau";
    return c.r;
}

CheckResult neighbour_endpoints(const VerifyConfig& cfg) {
    Check c("neighbour_endpoints");
    Rng rng(cfg.seed);
    for (const char* n : {"(10010)*", "(101)*", "1001(101)*", "(100111011)*", "10(01101)*"}) {
        Kneading nu = Kneading::parse(n);
        for (std::size_t i = 0; i < cfg.samples / 5; ++i) {
            EPSeq s = random_left(rng, nu);
            BasicArc a = projection(s, nu);
            if (a.tau_r.is_finite()) {
                EPSeq r = right_neighbour(s, nu);
                c.expect(is_admissible_seq(r, nu) && orbit_compare(projection(r, nu).right, a.right, nu) == Ordering::Equal,
                         "right neighbour of " + format(s));
            }
            if (a.tau_l.is_finite()) {
                EPSeq l = left_neighbour(s, nu);
                c.expect(is_admissible_seq(l, nu) && orbit_compare(projection(l, nu).left, a.left, nu) == Ordering::Equal,
                         "left neighbour of " + format(s));
            }
        }
    }
    c.r.detail = std::to_string(cfg.samples) + " random arcs";
    return c.r;
}

CheckResult cap_witnesses(const VerifyConfig& cfg) {
    Check c("cap_witnesses");
    Rng rng(cfg.seed);
    std::size_t yes = 0;
    for (const char* n : {"(101)*", "(10010)*", "(100111)*", "(1001101)*", "(100111011)*"}) {
        Kneading nu = Kneading::parse(n);
        for (const EPSeq& L : lefts_pool(rng, nu, 6)) {
            if (L.period == "0") continue;
            EmbeddingSpec s{nu, L, std::nullopt};
            for (const FoldingPoint& fp : folding_points(nu)) {
                if (!fp.is_endpoint || same_tail(fp.itinerary.left, L)) continue;
                CapVerdict v = is_capped(fp.itinerary, s, 60);
                c.expect(v.value == Tri::Yes, "endpoint " + format(fp.itinerary) + " not capped for L=" + format(L));
                c.expect(verify_cap_pairs(fp.itinerary, s, v.pairs), "pairs fail for " + format(fp.itinerary));
                ++yes;
            }
        }
    }
    c.r.detail = std::to_string(yes) + " endpoints off the arc component of L";
    return c.r;
}

CheckResult itinerary_roundtrip(const VerifyConfig& cfg) {
    Check c("itinerary_roundtrip");
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        EPSeq r = canonical(EPSeq::right(random_word(rng, rng() % 5), random_word(rng, 1 + rng() % 6)));
        EPSeq l = canonical(EPSeq::left(random_word(rng, 1 + rng() % 6), random_word(rng, rng() % 5)));
        c.expect(parse_seq(format(r)) == r, format(r));
        c.expect(parse_seq(format(l)) == l, format(l));
        PointItinerary p{l, r};
        c.expect(parse_point(format(p)) == p, format(p));
    }
    c.r.detail = std::to_string(cfg.samples) + " random sequences and points";
    return c.r;
}

using CheckFn = CheckResult (*)(const VerifyConfig&);

const std::vector<std::pair<CheckInfo, CheckFn>>& registry() {
    static const std::vector<std::pair<CheckInfo, CheckFn>> r = {
        {{"tau_projection", 1}, tau_projection},
        {{"example_extrema", 2}, example_extrema},
        {{"extrema_oracle", 3}, extrema_oracle},
        {{"order_coordinates", 4}, order_coordinates},
        {{"planarity", 5}, planarity},
        {{"height", 6}, height},
        {{"accessibility_tails", 7}, accessibility_tails},
        {{"capping", 8}, capping},
        {{"folding_types", 9}, folding_types},
        {{"standard_embeddings", 10}, standard_embeddings},
        {{"plex_total_order", 0}, plex_total_order},
        {{"admissibility_subword_closed", 0}, admissibility_subword_closed},
        {{"kneading_from_slope", 0}, kneading_slopes},
        {{"oracle_soundness", 0}, oracle_soundness},
        {{"oracle_agreement", 0}, oracle_agreement},
        {{"neighbour_endpoints", 0}, neighbour_endpoints},
        {{"cap_witnesses", 0}, cap_witnesses},
        {{"itinerary_roundtrip", 0}, itinerary_roundtrip},
    };
    return r;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::size_t to_size(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        unsigned long long x = std::stoull(v, &pos);
        if (pos == v.size()) return std::size_t(x);
    } catch (const std::exception&) {
    }
    fail("BadConfig", key + " expects a nonnegative integer, got '" + v + "'");
}

}  // namespace

VerifyConfig parse_config(const std::string& text, VerifyConfig cfg) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("BadConfig", "expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "depth") cfg.depth = to_size(key, val);
        else if (key == "extrema_len") cfg.extrema_len = to_size(key, val);
        else if (key == "planarity_trials") cfg.planarity_trials = to_size(key, val);
        else if (key == "planarity_depth") cfg.planarity_depth = std::max<std::size_t>(1, to_size(key, val));
        else if (key == "samples") cfg.samples = to_size(key, val);
        else if (key == "seed") cfg.seed = to_size(key, val);
        else if (key == "corrupt_extrema") cfg.corrupt_extrema = val == "1" || val == "true";
        else if (key == "tolerance") {
            try {
                cfg.tolerance = std::stod(val);
            } catch (const std::exception&) {
                fail("BadConfig", "tolerance expects a number, got '" + val + "'");
            }
            if (!(cfg.tolerance > 0)) fail("BadConfig", "tolerance must be positive");
        } else if (key == "only") {
            cfg.only.clear();
            std::istringstream names(val);
            std::string n;
            while (std::getline(names, n, ','))
                if (!trim(n).empty()) cfg.only.push_back(trim(n));
        } else {
            fail("BadConfig", "unknown key '" + key + "'");
        }
    }
    return cfg;
}

VerifyConfig load_config(const std::string& path, VerifyConfig base) {
    std::ifstream f(path);
    if (!f) fail("BadConfig", "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

void apply_env(VerifyConfig& cfg) {
    if (const char* d = std::getenv("TENTWEAVE_DEPTH"); d && *d) cfg.depth = to_size("TENTWEAVE_DEPTH", d);
}

bool VerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> c = [] {
        std::vector<CheckInfo> out;
        for (auto& [info, fn] : registry()) out.push_back(info);
        return out;
    }();
    return c;
}

CheckResult run_check(const std::string& name, const VerifyConfig& cfg) {
    for (auto& [info, fn] : registry()) {
        if (info.name != name) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = fn(cfg);
        } catch (const std::exception& e) {
            r.name = name;
            r.pass = false;
            r.counterexamples.push_back(std::string("exception: ") + e.what());
        }
        r.criterion = info.criterion;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    fail("UnknownCheck", "no check named '" + name + "'");
}

VerifyReport run_verification(const VerifyConfig& cfg) {
    for (const std::string& n : cfg.only)
        if (std::none_of(registry().begin(), registry().end(), [&](auto& e) { return e.first.name == n; }))
            fail("UnknownCheck", "no check named '" + n + "'");
    VerifyReport rep;
    for (auto& [info, fn] : registry()) {
        if (!cfg.only.empty() && std::find(cfg.only.begin(), cfg.only.end(), info.name) == cfg.only.end()) continue;
        rep.checks.push_back(run_check(info.name, cfg));
    }
    return rep;
}

}  // namespace tentweave
