#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tentweave/accessibility.hpp"
#include "tentweave/oracle.hpp"

using namespace tentweave;

namespace {

EmbeddingSpec spec(const char* nu, const char* L) { return {Kneading::parse(nu), parse_seq(L), std::nullopt}; }

std::vector<EPSeq> small_lefts() {
    std::vector<EPSeq> out;
    for (int p = 1; p <= 4; ++p)
        for (int m = 0; m < (1 << p); ++m) {
            Word P;
            for (int i = 0; i < p; ++i) P += (m >> i & 1) ? '1' : '0';
            for (int h = 0; h <= 2; ++h)
                for (int k = 0; k < (1 << h); ++k) {
                    Word H;
                    for (int i = 0; i < h; ++i) H += (k >> i & 1) ? '1' : '0';
                    out.push_back(canonical(EPSeq::left(P, H)));
                }
        }
    std::sort(out.begin(), out.end(), [](const EPSeq& a, const EPSeq& b) { return format(a) < format(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> formatted(const std::vector<EPSeq>& v) {
    std::vector<std::string> out;
    for (const EPSeq& s : v) out.push_back(format(s));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("alters examples") {
    Verdict a = alters("0", spec("(101)*", "*(01)"), 60);
    CHECK(a.value == Tri::Yes);
    REQUIRE(a.witness.size() >= 3);
    CHECK(a.witness[0] == "0");
    CHECK(a.witness[1] == "01");
    CHECK(a.witness[2] == "01");

    CHECK(alters("0", spec("1001(101)*", "*((001)(001101))"), 80).value == Tri::Yes);

    EmbeddingSpec s = spec("(101)*", "*(011)");
    for (std::size_t n = 0; n <= 8; ++n)
        for (const Word& B : admissible_words(n, s.nu)) CHECK(alters(B, s, 40).value == Tri::No);

    CHECK_THROWS_AS(alters("00", s, 10), DomainError);
}

TEST_CASE("alters decomposition matches the definition") {
    const std::vector<std::pair<const char*, const char*>> cases = {
        {"(101)*", "*(01)"},   {"1001(101)*", "*((001)(001101))"}, {"(10010)*", "*(001)"},
        {"(1011)*", "*(10)"},  {"(10011001001111)*", "*(0011)"},   {"(100111)*", "*(0110)1"},
    };
    for (auto [nu, L] : cases) {
        EmbeddingSpec s = spec(nu, L);
        for (std::size_t n = 0; n <= 6; ++n)
            for (const Word& B : admissible_words(n, s.nu)) {
                Verdict v = alters(B, s, 200);
                if (v.value == Tri::No) continue;
                auto brute = brute_alters_parts(B, s.nu, s.L, 40);
                std::vector<Word> got;
                for (const std::string& w : v.witness)
                    if (w.find_first_not_of("01") == std::string::npos) got.push_back(w);
                if (v.value == Tri::Yes) {
                    std::size_t done = 0;
                    for (std::size_t i = 0; i + 1 < brute.size() && i < got.size(); ++i) {
                        CHECK(brute[i] == got[i]);
                        ++done;
                    }
                    CHECK(done > 0);
                }
            }
    }
}

TEST_CASE("capped endpoint example") {
    EmbeddingSpec s = spec("(100111101011010111)*", "*(010111110011100111)");
    REQUIRE(is_admissible_seq(s.L, s.nu));
    PointItinerary e = parse_point("*(100111101011010111).(100111101011010111)*");
    REQUIRE(is_endpoint(e, s.nu));
    CapVerdict v = is_capped(e, s, 120);
    CHECK(v.value == Tri::Yes);
    REQUIRE(v.pairs.size() >= 3);
    for (const CapPair& p : v.pairs) {
        CHECK(p.m % 18 == 0);
        CHECK(p.side == Side::Right);
    }
    CHECK(verify_cap_pairs(e, s, v.pairs));
}

TEST_CASE("capped edge cases") {
    EmbeddingSpec knaster = spec("10(0)*", "*(01)");
    CHECK(is_capped(parse_point("*(0).(0)*"), knaster, 40).value == Tri::No);

    EmbeddingSpec same = spec("(101)*", "*(101)");
    CHECK(is_capped(parse_point("*(101).(101)*"), same, 40).value == Tri::No);

    EmbeddingSpec s = spec("(10010)*", "*(001)");
    CHECK_THROWS_AS(is_capped(parse_point("*(001).0(1)*"), s, 40), DomainError);
    CHECK_THROWS_AS(is_capped(parse_point("*(0).(0)*"), spec("1001011", "*(01)"), 40), DomainError);
}

TEST_CASE("cap pairs verify for periodic kneading sequences") {
    const char* nus[] = {"(101)*", "(10010)*", "(100111)*", "(1001101)*"};
    std::size_t yes = 0;
    for (const char* nu : nus) {
        Kneading k = Kneading::parse(nu);
        for (const EPSeq& L : small_lefts()) {
            if (!is_admissible_seq(L, k)) continue;
            EmbeddingSpec s{k, L, std::nullopt};
            for (const FoldingPoint& fp : folding_points(k)) {
                if (!fp.is_endpoint) continue;
                CapVerdict v = is_capped(fp.itinerary, s, 30);
                CHECK(verify_cap_pairs(fp.itinerary, s, v.pairs));
                yes += v.value == Tri::Yes;
            }
        }
    }
    CHECK(yes > 0);
}

TEST_CASE("folding points") {
    auto f = folding_points(Kneading::parse("10(01101)*"));
    CHECK(f.size() == 5);
    for (const FoldingPoint& p : f) CHECK(is_admissible_point(p.itinerary, Kneading::parse("10(01101)*")));
    auto g = folding_points(Kneading::parse("(101)*"));
    CHECK(g.size() == 3);
    for (const FoldingPoint& p : g) CHECK(p.is_endpoint);
    CHECK(folding_points(Kneading::parse("10(0)*")).size() == 1);
    CHECK_THROWS_AS(folding_points(Kneading::parse("1001011")), DomainError);
}

TEST_CASE("folding point types") {
    auto classify = [](const char* nu, const char* L, const char* p) {
        EmbeddingSpec s = spec(nu, L);
        EPSeq target = canonical(parse_seq(p));
        for (const FoldingPoint& fp : folding_points(s.nu))
            if (canonical(fp.itinerary.left) == target) return classify_folding_point(fp, s, 40);
        FAIL("folding point not found");
        return FoldingVerdict{};
    };
    FoldingVerdict t11 = classify("10(01101001)*", "*(1010010111001001)", "*(01101001)01");
    CHECK(t11.type == FoldType::Type2);
    CHECK_FALSE(t11.order_reversing);

    FoldingVerdict t12 = classify("10(011101001)*", "*(011101001011110010)", "*(011101001)");
    CHECK(t12.type == FoldType::Type2);
    CHECK(t12.order_reversing);
    EmbeddingSpec s12 = spec("10(011101001)*", "*(011101001011110010)");
    EPSeq l = parse_seq("*(010010111)01011");
    CHECK(is_admissible_seq(l, s12.nu));
    CHECK(is_extremum_of_cylinder(l, s12, 20).value == Tri::Yes);

    FoldingVerdict t14 = classify("10(01101)*", "*(01110)", "*(01101)");
    CHECK(t14.type == FoldType::Type3);
}

TEST_CASE("no type 2 or type 3 for 10(0^a 1^b) with b at least 2") {
    for (const char* nu : {"10(011)*", "10(0011)*", "10(0111)*", "10(00111)*", "10(000111)*"}) {
        Kneading k = Kneading::parse(nu);
        std::size_t checked = 0;
        for (const EPSeq& L : small_lefts()) {
            if (!is_admissible_seq(L, k)) continue;
            EmbeddingSpec s{k, L, std::nullopt};
            for (const FoldingPoint& fp : folding_points(k)) {
                FoldType t = classify_folding_point(fp, s, 30).type;
                CHECK(t != FoldType::Type2);
                CHECK(t != FoldType::Type3);
                ++checked;
            }
        }
        CHECK(checked >= 20);
    }
}

TEST_CASE("type 1 witnesses are cylinder extrema") {
    Kneading k = Kneading::parse("10(0011)*");
    for (const EPSeq& L : small_lefts()) {
        if (!is_admissible_seq(L, k)) continue;
        EmbeddingSpec s{k, L, std::nullopt};
        for (const FoldingPoint& fp : folding_points(k)) {
            FoldingVerdict v = classify_folding_point(fp, s, 30);
            if (v.type != FoldType::Type1) continue;
            REQUIRE(v.cylinder);
            EPSeq p = canonical(fp.itinerary.left);
            const bool top = canonical(cylinder_top(*v.cylinder, s).seq) == p;
            const bool bottom = canonical(cylinder_bottom(*v.cylinder, s).seq) == p;
            CHECK((top || bottom));
        }
    }
}

TEST_CASE("extremum check") {
    EmbeddingSpec s = spec("(101)*", "*(011)");
    CHECK(is_extremum_of_cylinder(parse_seq("*(10)"), s, 30).value == Tri::Unknown);
    EmbeddingSpec t = spec("(101)*", "*(01)");
    CHECK(is_extremum_of_cylinder(parse_seq("*(01)"), t, 5).value == Tri::Yes);
}

TEST_CASE("fully accessible tails") {
    CHECK(formatted(extremum_tails(spec("(101)*", "*(01)"), 8)) == std::vector<std::string>{"*(01)", "*(10)"});
    CHECK(extremum_tails(spec("(10011001001111)*", "*(0010011)"), 10).size() == 3);
    CHECK(formatted(extremum_tails(spec("(10010)*", "*(001)"), 10)) == std::vector<std::string>{"*(001)", "*(100)"});
    CHECK(formatted(extremum_tails(spec("(100010)*", "*(0001)"), 10)) ==
          std::vector<std::string>{"*(0001)", "*(1000)"});
    CHECK(extremum_tails(spec("(10010110)*", "*(001)"), 10).size() >= 4);
}

TEST_CASE("tails are stable in depth") {
    EmbeddingSpec s = spec("(10011001001111)*", "*(0010011)");
    CHECK(formatted(extremum_tails(s, 8)) == formatted(extremum_tails(s, 11)));
}

TEST_CASE("access report") {
    AccessReport r = access_report(spec("(10010)*", "*(001)"), 8);
    CHECK(r.tails.size() == 2);
    CHECK(r.folding.size() == 5);
    CHECK(r.capped.size() == 5);
    AccessReport q = access_report({Kneading::of_prefix("1001011"), parse_seq("*(01)"), std::nullopt}, 4);
    CHECK(q.folding.empty());
    CHECK_FALSE(q.notes.empty());
}

TEST_CASE("endpoints off the arc component of L are capped for periodic kneading sequences") {
    std::vector<EPSeq> nus;
    for (int p = 3; p <= 9; ++p)
        for (int m = 0; m < (1 << p); ++m) {
            Word P;
            for (int i = 0; i < p; ++i) P += (m >> (p - 1 - i) & 1) ? '1' : '0';
            EPSeq s = canonical(EPSeq::right("", P));
            if (s.p() != std::size_t(p)) continue;
            try {
                Kneading::of(s);
            } catch (const DomainError&) {
                continue;
            }
            if (realized_by_slope(s)) nus.push_back(s);
        }
    std::mt19937 rng(5);
    std::shuffle(nus.begin(), nus.end(), rng);
    nus.resize(20);
    nus.push_back(parse_seq("(100111101011010111)*"));
    std::size_t capped = 0;
    for (const EPSeq& v : nus) {
        Kneading k = Kneading::of(v);
        std::size_t lefts = 0;
        for (const EPSeq& L : small_lefts()) {
            if (lefts == 5) break;
            if (L.period == "0" || !is_admissible_seq(L, k)) continue;
            ++lefts;
            EmbeddingSpec s{k, L, std::nullopt};
            for (const FoldingPoint& fp : folding_points(k)) {
                if (!fp.is_endpoint || same_tail(fp.itinerary.left, L)) continue;
                CapVerdict c = is_capped(fp.itinerary, s, 60);
                CAPTURE(format(v));
                CAPTURE(format(L));
                CHECK(c.value == Tri::Yes);
                CHECK(verify_cap_pairs(fp.itinerary, s, c.pairs));
                ++capped;
            }
        }
    }
    CHECK(capped > 100);
}

TEST_CASE("folding point types are shift consistent in the standard embeddings") {
    auto types = [](const char* nu, const char* L) {
        EmbeddingSpec s = spec(nu, L);
        std::set<FoldType> out;
        for (const FoldingPoint& fp : folding_points(s.nu)) out.insert(classify_folding_point(fp, s, 30).type);
        return out;
    };
    for (const char* nu : {"10(011)*", "10(0011)*", "10(01101)*", "(101)*", "(10010)*", "1001(101)*"})
        CHECK(types(nu, "*(1)") == std::set<FoldType>{FoldType::NotAccessible});
    CHECK(types("(101)*", "*(0)1") == std::set<FoldType>{FoldType::Type1});
    CHECK(types("(10001)*", "*(0)1") == std::set<FoldType>{FoldType::Type1});
    CHECK(types("10(011)*", "*(0)1") == std::set<FoldType>{FoldType::Type2});
    CHECK(types("10(0011)*", "*(0)1") == std::set<FoldType>{FoldType::Type2});
    CHECK(types("10(01101)*", "*(0)1") == std::set<FoldType>{FoldType::NotAccessible});
    CHECK(types("10(00111)*", "*(0)1") == std::set<FoldType>{FoldType::NotAccessible});
}

TEST_CASE("extremum tails of the worked examples") {
    auto tails_match = [](const EmbeddingSpec& s, std::vector<const char*> expected) {
        auto tails = extremum_tails(s, 12);
        if (tails.size() != expected.size()) return false;
        for (const char* e : expected) {
            EPSeq x = parse_seq(e);
            if (std::none_of(tails.begin(), tails.end(), [&](const EPSeq& t) { return same_tail(t, x); })) return false;
        }
        return true;
    };
    CHECK(tails_match(spec("(101)*", "*(01)"), {"*(01)", "*(10)"}));
    CHECK(tails_match(spec("1001(101)*", "*((001)(001101))"), {"*((001)(001101))", "*((100)(101100))"}));
    CHECK(tails_match(spec("(100111011)*", "*(001)11"), {"*(001)11", "*(100)10"}));
    // L = (BA)^inf, S = (*B* *A B A*)^inf and S_D = (*A B A* *B*)^inf D with B = 001, A = 0011, D = 1111.
    CHECK(tails_match(spec("(10011001001111)*", "*(0010011)"),
                      {"*(0010011)", "*(10010110010010)", "*(10110010010100)1111"}));
    CHECK(extremum_tails(spec("(10011001001111)*", "*(0)1"), 12).size() == 7);
}
