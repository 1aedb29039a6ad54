#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tentweave/symbolic.hpp"

using namespace tentweave;

namespace {

std::vector<Word> all_words(std::size_t n) {
    std::vector<Word> out;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        Word w(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) w[i] = '1';
        out.push_back(w);
    }
    return out;
}

bool by_definition(const Word& w, const EPSeq& nu) {
    const std::size_t n = w.size();
    Word c = nu.first(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Word a = w.substr(i);
        if (plex_compare(a, c.substr(0, a.size())) == Ordering::Greater) return false;
        if (plex_compare(a, c.substr(1, a.size())) == Ordering::Less) return false;
    }
    return true;
}

const char* kNus[] = {"(101)*", "1(0)*", "1001(101)*", "(100111011)*", "(10010)*", "10(01101)*",
                      "10(011101001)*"};

}  // namespace

TEST_CASE("plex_compare examples") {
    CHECK(plex_compare(Word("0"), Word("1")) == Ordering::Less);
    CHECK(plex_compare(Word("10"), Word("11")) == Ordering::Greater);
    CHECK(plex_compare(parse_seq("(101)*"), parse_seq("(100)*")) == Ordering::Less);
    CHECK_THROWS_AS(plex_compare(Word("10"), Word("1")), DomainError);
    CHECK_THROWS_AS(plex_compare(Word("10"), parse_seq("(10)*")), DomainError);
}

TEST_CASE("plex_compare is a total order on words") {
    for (std::size_t n = 1; n <= 8; n += 7) {
        auto ws = all_words(n);
        for (const auto& a : ws)
            for (const auto& b : ws) {
                auto ab = plex_compare(a, b), ba = plex_compare(b, a);
                CHECK(sign(ab) == -sign(ba));
                CHECK((ab == Ordering::Equal) == (a == b));
            }
    }
    auto ws = all_words(5);
    for (const auto& a : ws)
        for (const auto& b : ws)
            for (const auto& c : ws)
                if (plex_compare(a, b) == Ordering::Less && plex_compare(b, c) == Ordering::Less)
                    CHECK(plex_compare(a, c) == Ordering::Less);
}

TEST_CASE("plex_compare on sequences agrees with long prefixes") {
    std::mt19937 rng(7);
    auto rw = [&](std::size_t lo, std::size_t hi) {
        Word w(std::uniform_int_distribution<std::size_t>(lo, hi)(rng), '0');
        for (auto& ch : w) ch = rng() % 2 ? '1' : '0';
        return w;
    };
    for (int it = 0; it < 500; ++it) {
        EPSeq a = EPSeq::right(rw(0, 4), rw(1, 4)), b = EPSeq::right(rw(0, 4), rw(1, 4));
        auto o = plex_compare(a, b);
        CHECK((o == Ordering::Equal) == (a == b));
        if (o != Ordering::Equal) CHECK(plex_compare(a.first(60), b.first(60)) == o);
        CHECK(sign(plex_compare(b, a)) == -sign(o));
    }
}

TEST_CASE("ones parity") {
    CHECK_FALSE(ones_parity_odd(""));
    CHECK_FALSE(ones_parity_odd("101"));
    CHECK(ones_parity_odd("10110"));
}

TEST_CASE("canonical form and grammar") {
    CHECK(parse_seq("1001(101)*") == EPSeq::right("10", "011"));
    CHECK(format(parse_seq("1001(101)*")) == "10(011)*");
    CHECK(parse_seq("(1010)*") == parse_seq("(10)*"));
    CHECK(parse_seq("*(01)01") == parse_seq("*(01)"));
    CHECK(parse_seq("*((001)(001101))") == EPSeq::left("001001101"));
    CHECK(parse_seq("*(001)11").at(1) == '1');
    CHECK(parse_seq("*(001)11").at(3) == '1');
    CHECK(parse_seq("*(001)11").at(4) == '0');
    auto pt = parse_point("*(101).(101)*");
    CHECK(pt.left.at(1) == '1');
    CHECK(pt.right.at(1) == '1');
    CHECK_THROWS_AS(parse_seq("(10"), DomainError);
    CHECK_THROWS_AS(parse_seq("1(2)*"), DomainError);
    std::mt19937 rng(3);
    for (int it = 0; it < 300; ++it) {
        Word h(rng() % 5, '0'), p(1 + rng() % 5, '0');
        for (auto& ch : h) ch = rng() % 2 ? '1' : '0';
        for (auto& ch : p) ch = rng() % 2 ? '1' : '0';
        EPSeq r = EPSeq::right(h, p), l = EPSeq::left(p, h);
        CHECK(parse_seq(format(r)) == r);
        CHECK(parse_seq(format(l)) == l);
        EPSeq r0{h, p, Dir::Right}, l0{h, p, Dir::Left};
        CHECK(r.first(40) == r0.first(40));
        CHECK(l.last(40) == l0.last(40));
    }
}

TEST_CASE("shift") {
    CHECK(shift(parse_seq("(101)*"), 1) == parse_seq("(011)*"));
    CHECK(shift(parse_seq("1001(101)*"), 4) == parse_seq("(101)*"));
    CHECK(shift(parse_seq("1001(101)*"), 0) == parse_seq("1001(101)*"));
    CHECK(shift(parse_seq("*(001)11"), 2) == parse_seq("*(001)"));
    auto s = parse_seq("*(0111)0");
    for (std::size_t k = 0; k < 9; ++k) CHECK(shift(s, k).last(20) == s.last(20 + k).substr(0, 20));
}

TEST_CASE("kappa") {
    CHECK(kappa(Kneading::parse("10010")) == 2);
    CHECK(kappa(Kneading::parse("(101)*")) == 1);
    CHECK_FALSE(kappa(Kneading::parse("1(0)*")).has_value());
}

TEST_CASE("admissible words: examples") {
    auto nu = Kneading::parse("(101)*");
    CHECK_FALSE(is_admissible_word("00", nu));
    CHECK(is_admissible_word("101101", nu));
    for (const char* t : kNus) {
        auto k = Kneading::parse(t);
        for (std::size_t n = 1; n < 12; ++n) CHECK(is_admissible_word(k.seq().first(n), k));
    }
    CHECK_THROWS_AS(is_admissible_word("0101", Kneading::parse("1001")), DomainError);
}

TEST_CASE("automaton agrees with the definition and admissibility is subword closed") {
    for (const char* t : kNus) {
        auto nu = Kneading::parse(t);
        for (std::size_t n = 1; n <= 10; ++n) {
            for (const auto& w : all_words(n)) {
                bool a = is_admissible_word(w, nu);
                CHECK(a == by_definition(w, nu.seq()));
                if (a) {
                    CHECK(is_admissible_word(w.substr(1), nu));
                    CHECK(is_admissible_word(w.substr(0, n - 1), nu));
                }
            }
        }
    }
}

TEST_CASE("admissible sequences: examples") {
    auto nu = Kneading::parse("(101)*");
    CHECK(is_admissible_seq(parse_seq("*(10)"), nu));
    CHECK_FALSE(is_admissible_seq(parse_seq("*(01)00"), nu));
    for (const char* t : kNus) CHECK(is_admissible_seq(parse_seq("*(1)"), Kneading::parse(t)));
}

TEST_CASE("sequence admissibility matches subwords at twice the bound") {
    std::mt19937 rng(11);
    for (const char* t : kNus) {
        auto nu = Kneading::parse(t);
        for (int it = 0; it < 200; ++it) {
            Word h(rng() % 5, '0'), p(1 + rng() % 6, '0');
            for (auto& ch : h) ch = rng() % 4 ? '1' : '0';
            for (auto& ch : p) ch = rng() % 4 ? '1' : '0';
            EPSeq l = EPSeq::left(p, h);
            std::size_t bound = 2 * (l.h() + 2 * lcm(l.p(), nu.seq().p()) + nu.seq().h());
            bool brute = by_definition(l.last(bound), nu.seq());
            CHECK(is_admissible_seq(l, nu) == brute);
            EPSeq r = EPSeq::right(h, p);
            bool brute_r = true;
            for (std::size_t i = 0; i < r.h() + r.p() && brute_r; ++i)
                brute_r = by_definition(shift(r, i).first(bound), nu.seq());
            CHECK(is_admissible_seq(r, nu) == brute_r);
        }
    }
}

TEST_CASE("kneading from slope") {
    auto k = kneading_from_slope(2.0, 10);
    REQUIRE(k.exact());
    CHECK(k.seq() == parse_seq("1(0)*"));
    auto g = kneading_from_slope((1 + std::sqrt(5.0)) / 2, 20);
    REQUIRE(g.exact());
    CHECK(g.seq() == parse_seq("(101)*"));
    auto p = kneading_from_slope(1.8, 5);
    CHECK_FALSE(p.exact());
    CHECK(p.str() == "10011");
    CHECK_THROWS_AS(kneading_from_slope(1.2, 10), DomainError);
}

TEST_CASE("kneading from random slopes is shift admissible") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(std::sqrt(2.0) + 1e-3, 2.0);
    for (int it = 0; it < 1000; ++it) {
        auto k = kneading_from_slope(d(rng), 40);
        Word w = k.exact() ? k.seq().first(40) : k.first(40);
        auto ref = k.exact() ? k : Kneading::of_prefix(w);
        CHECK(is_admissible_word(w.substr(0, 39), ref));
        if (k.exact() && k.seq().p() > 1) {
            // Periodic resolution keeps the plex-smaller closure.
            const EPSeq& v = k.seq();
            if (v.h() == 0) {
                Word alt = v.period;
                alt.back() = flip(alt.back());
                CHECK(plex_compare(v, EPSeq::right("", alt)) != Ordering::Greater);
            }
        }
    }
}
