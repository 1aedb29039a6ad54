#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tentweave/symbolic.hpp"

namespace tentweave {

struct Rational {
    long long num = 0;
    long long den = 1;
    static Rational of(long long num, long long den);  // reduced
    double value() const { return double(num) / double(den); }
    std::string str() const;
    bool operator==(const Rational&) const = default;
};

std::vector<int> kappa_seq(const Rational& q, std::size_t count);
// Irrational q given as a double; only the first `count` terms are meaningful.
std::vector<int> kappa_seq(double q, std::size_t count);

// 1 0^k1 11 0^k2 11 ... cut to len symbols: the kneading pattern of height q.
Word pattern_prefix(double q, std::size_t len);

struct HeightData {
    Rational q;
    std::vector<int> kappas;  // kappa_1 .. kappa_m
    Word c_q;
    Word w_q;
    Word hat_w_q;
    EPSeq lhe;
    EPSeq rhe;
};

HeightData build_height(const Rational& q);

struct PalindromeSplit {
    Word Y;
    Word Z;
    bool from_construction = true;  // false when the search fallback was needed
};

bool is_palindrome(const Word& w);
PalindromeSplit palindrome_split(const HeightData& h);

// N with shift(rhe, N) == lhe, if the identity holds.
std::optional<std::size_t> shift_relation_check(const Rational& q);

struct HeightClass {
    enum class Kind { Irrational, Interior, Endpoint };
    Kind kind = Kind::Irrational;
    Rational q;
    bool lhe_side = false;  // Endpoint only
    std::size_t depth = 0;  // Irrational only: symbols of nu matched against the pattern
    std::string str() const;
};

HeightClass classify_kneading(const Kneading& nu, int maxden = 64);

struct LeftItinerary {
    EPSeq seq;
    bool provisional = false;
    std::size_t depth = 0;
};

LeftItinerary L_prime(const Kneading& nu, const HeightClass& cls);

// Membership test for rational interior type read off rhe(q) and lhe(q).
bool bdch_admissible(const EPSeq& t, const Kneading& nu, const Rational& q);

struct Extrema {
    EPSeq top;
    EPSeq bottom;
    bool provisional = false;  // 1^inf w with w known to the kneading prefix
};

// L = 1^inf.
Extrema bruin_extrema(const Word& B, const Kneading& nu);
// L = 0^inf 1. Prefix kneading data yield provisional results of the form 1^inf w.
Extrema bd_extrema(const Word& B, const Kneading& nu, const HeightClass& cls);

}  // namespace tentweave
