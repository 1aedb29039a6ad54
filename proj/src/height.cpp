#include "tentweave/height.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tentweave {

Rational Rational::of(long long num, long long den) {
    if (den <= 0) fail("QOutOfRange", "denominator must be positive");
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

namespace {

void check_q(const Rational& q) {
    if (q.num <= 0 || 2 * q.num >= q.den)
        fail("QOutOfRange", "height must lie in (0, 1/2), got " + q.str());
}

long long floor_div(long long a, long long b) { return a / b; }  // a, b >= 0

Word zeros(int k) { return Word(std::max(k, 0), '0'); }

}  // namespace

std::vector<int> kappa_seq(const Rational& q0, std::size_t count) {
    Rational q = Rational::of(q0.num, q0.den);
    check_q(q);
    std::vector<int> out;
    for (std::size_t i = 1; i <= count; ++i) {
        long long a = floor_div((long long)i * q.den, q.num);
        long long b = floor_div((long long)(i - 1) * q.den, q.num);
        out.push_back(i == 1 ? int(a - 1) : int(a - b - 2));
    }
    return out;
}

std::vector<int> kappa_seq(double q, std::size_t count) {
    if (!(q > 0 && q < 0.5)) fail("QOutOfRange", "height must lie in (0, 1/2)");
    std::vector<int> out;
    for (std::size_t i = 1; i <= count; ++i) {
        long long a = (long long)std::floor(double(i) / q);
        long long b = (long long)std::floor(double(i - 1) / q);
        out.push_back(i == 1 ? int(a - 1) : int(a - b - 2));
    }
    return out;
}

Word pattern_prefix(double q, std::size_t len) {
    Word w = "1";
    for (int k : kappa_seq(q, len)) {
        w += Word(std::size_t(k), '0') + "11";
        if (w.size() >= len) break;
    }
    return w.substr(0, len);
}

HeightData build_height(const Rational& q0) {
    Rational q = Rational::of(q0.num, q0.den);
    check_q(q);
    HeightData h;
    h.q = q;
    h.kappas = kappa_seq(q, q.num);
    for (int k : h.kappas) h.c_q += "1" + zeros(k) + "1";
    h.w_q = h.c_q.substr(0, h.c_q.size() - 2);
    h.hat_w_q = reversed(h.w_q);
    h.lhe = EPSeq::right("", h.w_q + "1");
    h.rhe = EPSeq::right("10", h.hat_w_q + "1");
    return h;
}

bool is_palindrome(const Word& w) { return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin()); }

PalindromeSplit palindrome_split(const HeightData& h) {
    const Word& c = h.c_q;
    auto valid = [&](const Word& Y, const Word& Z) {
        return is_palindrome(Y) && is_palindrome(Z) && Y + "1" + Z + "01" == c;
    };
    const long long m = h.q.num, n = h.q.den;
    long long best = 1;
    for (long long k = 1; k < n; ++k)
        if ((k * m) % n > (best * m) % n) best = k;
    const long long K = (best * m + n - 1) / n;
    Word Y;
    for (long long i = 0; i < K && i < (long long)h.kappas.size(); ++i) Y += "1" + zeros(h.kappas[i]) + "1";
    if (Y.size() + 3 <= c.size()) {
        Word Z = c.substr(Y.size() + 1, c.size() - Y.size() - 3);
        if (valid(Y, Z)) return {Y, Z, true};
    }
    for (std::size_t y = c.size() - 3 + 1; y-- > 0;) {
        Word Yf = c.substr(0, y);
        Word Zf = c.substr(y + 1, c.size() - y - 3);
        if (valid(Yf, Zf)) return {Yf, Zf, false};
    }
    fail("NoSplit", "no palindrome split of " + c);
}

std::optional<std::size_t> shift_relation_check(const Rational& q) {
    HeightData h = build_height(q);
    PalindromeSplit s = palindrome_split(h);
    const std::size_t N = s.Z.size() + 3;
    if (shift(h.rhe, N) == h.lhe) return N;
    return std::nullopt;
}

std::string HeightClass::str() const {
    switch (kind) {
        case Kind::Interior: return "rational interior " + q.str();
        case Kind::Endpoint: return "rational endpoint " + q.str() + (lhe_side ? " (lhe)" : " (rhe)");
        default: return "irrational-consistent to depth " + std::to_string(depth);
    }
}

namespace {

// Orders nu against an exact sequence; nullopt when a kneading prefix cannot decide.
std::optional<Ordering> compare_nu(const Kneading& nu, const EPSeq& x) {
    if (nu.exact()) return plex_compare(nu.seq(), x);
    Word w = nu.first(nu.known());
    Ordering o = plex_compare(w, x.first(w.size()));
    if (o == Ordering::Equal) return std::nullopt;
    return o;
}

// Length of the prefix of nu matching 1 0^k1 1 0^k2 1 1 ... with k_i in {k1, k1-1}.
std::optional<std::size_t> irrational_pattern(const Kneading& nu, std::size_t limit) {
    const std::size_t n = nu.exact() ? limit : std::min(limit, nu.known());
    Word w = nu.first(n);
    if (w.size() < 2 || w[0] != '1') return std::nullopt;
    std::size_t i = 1;
    int k1 = -1;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == '0') ++j;
        if (j == w.size()) break;
        int k = int(j - i);
        if (k1 < 0) {
            if (k == 0) return std::nullopt;
            k1 = k;
        } else if (k != k1 && k != k1 - 1) {
            return std::nullopt;
        }
        if (j + 1 < w.size() && w[j + 1] != '1') return std::nullopt;
        i = j + 2;
    }
    return n;
}

}  // namespace

HeightClass classify_kneading(const Kneading& nu, int maxden) {
    Rational lo{0, 1}, hi{1, 2};
    for (;;) {
        Rational med{lo.num + hi.num, lo.den + hi.den};
        if (med.den > maxden) break;
        HeightData h = build_height(med);
        auto a = compare_nu(nu, h.lhe);
        auto b = compare_nu(nu, h.rhe);
        if (a == Ordering::Equal) return {HeightClass::Kind::Endpoint, med, true, 0};
        if (b == Ordering::Equal) return {HeightClass::Kind::Endpoint, med, false, 0};
        if (!a || !b) break;
        if (*a == Ordering::Greater && *b == Ordering::Less) return {HeightClass::Kind::Interior, med, false, 0};
        if (*a == Ordering::Less) lo = med;
        else hi = med;
    }
    if (auto d = irrational_pattern(nu, 256)) return {HeightClass::Kind::Irrational, {}, false, *d};
    fail("Unclassified", "no height found for " + nu.str() + " up to denominator " + std::to_string(maxden));
}

LeftItinerary L_prime(const Kneading& nu, const HeightClass& cls) {
    if (cls.kind == HeightClass::Kind::Irrational) {
        if (nu.exact()) return {reversed(nu.seq()), false, 0};
        return {EPSeq::left("1", reversed(nu.first(nu.known()))), true, nu.known()};
    }
    HeightData h = build_height(cls.q);
    if (cls.kind == HeightClass::Kind::Endpoint && cls.lhe_side) return {reversed(h.lhe), false, 0};
    return {reversed(h.rhe), false, 0};
}

bool bdch_admissible(const EPSeq& t, const Kneading& nu, const Rational& q) {
    HeightClass cls = classify_kneading(nu, int(std::max<long long>(q.den, 64)));
    if (cls.kind != HeightClass::Kind::Interior || !(cls.q == Rational::of(q.num, q.den)))
        fail("WrongClass", nu.str() + " is not of rational interior type " + q.str());
    if (t.dir != Dir::Left) fail("NotLeftInfinite", format(t));
    HeightData h = build_height(cls.q);
    const EPSeq sig = shift(nu.seq(), std::size_t(cls.q.den) + 1);
    const EPSeq tc = canonical(t);
    const EPSeq r = reversed(tc);  // t_1 t_2 ...
    const std::size_t span = r.h() + 2 * lcm(r.p(), lcm(h.lhe.p(), sig.p())) + sig.h() + nu.seq().h() + 2;
    // Staying off the ray C means every coordinate lies in the core: t_k...t_1 >= sigma(nu).
    const EPSeq low_bound = shift(nu.seq(), 1);
    for (std::size_t k = 1; k <= span; ++k)
        if (plex_compare(tc.last(k), low_bound.first(k)) == Ordering::Less) return false;
    for (std::size_t i = 0; i < span; ++i) {
        EPSeq left = shift(r, i);  // t_{i+1} t_{i+2} ...
        if (plex_compare(left, h.rhe) == Ordering::Greater) return false;
        Word right = reversed(r.first(i));  // t_i ... t_1
        if (plex_compare(right, sig.first(i)) == Ordering::Greater &&
            plex_compare(left, h.lhe) == Ordering::Greater)
            return false;
    }
    return true;
}

namespace {

Word ones_word(std::size_t k) { return Word(k, '1'); }

}  // namespace

Extrema bruin_extrema(const Word& B, const Kneading& nu) {
    if (!is_admissible_word(B, nu)) fail("NotAdmissible", "cylinder word " + B + " is not admissible");
    const std::size_t limit = nu.exact() ? 4 * (nu.seq().h() + nu.seq().p()) + B.size() + 8 : nu.known();
    std::optional<std::size_t> k;
    for (std::size_t j = 0; j <= limit && !k; ++j) {
        Word w = "0" + ones_word(j) + B;
        if (!nu.exact() && w.size() + 1 > nu.known()) break;
        if (is_admissible_word(w, nu)) k = j;
    }
    if (!k) fail("InsufficientDepth", "no admissible 01^kB found for " + B);
    EPSeq same = EPSeq::left("1", B);
    EPSeq other = EPSeq::left("1", "0" + ones_word(*k) + B);
    const bool top_same = std::size_t(ones(B)) % 2 == B.size() % 2;
    return top_same ? Extrema{same, other, false} : Extrema{other, same, false};
}

namespace {

bool odd(const Word& w) { return ones_parity_odd(w); }

// a_i ... a_j read from a_i leftwards, i.e. a_i a_{i+1} ... a_j.
Word read_left(const Word& B, std::size_t i, std::size_t j) {
    const std::size_t N = B.size();
    if (i > j) return "";
    return reversed(B.substr(N - j, j - i + 1));
}

// a_k ... a_1 as written.
Word low(const Word& B, std::size_t k) { return B.substr(B.size() - k); }

EPSeq attach(const EPSeq& left, const Word& w) { return canonical(append(left, w)); }

Extrema bd_interior(const Word& B, const Kneading& nu, const HeightData& h) {
    const std::size_t N = B.size();
    const EPSeq lheR = reversed(h.lhe);
    const EPSeq rheR = reversed(h.rhe);
    const EPSeq sig = shift(nu.seq(), std::size_t(h.q.den) + 1);
    auto gt = [&](const Word& w) { return plex_compare(w, sig.first(w.size())) == Ordering::Greater; };
    const EPSeq S = canonical(EPSeq::left("1" + h.w_q, "0"));
    if (B.find('1') == Word::npos) return {attach(rheR, B), S, false};
    std::optional<std::size_t> k;
    for (std::size_t i = 1; i <= N && !k; ++i)
        if (gt(low(B, i)) && read_left(B, i + 1, N) == h.lhe.first(N - i)) k = i;
    std::size_t kp = N;
    for (std::size_t i = 0; i < N; ++i)
        if (read_left(B, i + 1, N) == h.rhe.first(N - i)) {
            kp = i;
            break;
        }
    auto pick = [&](bool top) -> EPSeq {
        // top follows the labels outside brackets, bottom those inside
        auto want = [&](bool parity_odd) { return top ? parity_odd : !parity_odd; };
        auto by_sigma = [&](const Word& w) { return attach(gt(w) ? lheR : rheR, w); };
        if (k && *k <= kp) {
            if (!want(odd(low(B, *k)))) return attach(lheR, low(B, *k));
        }
        const Word a = low(B, kp);
        if (!want(odd(a))) return by_sigma(a);
        if (odd(read_left(B, kp + 1, N))) return by_sigma(B);
        return by_sigma(low(B, N - 1));
    };
    // The smallest arc of the whole space wins whenever it lies in [B].
    return {pick(true), S.last(N) == B ? S : pick(false), false};
}

Extrema bd_lprime(const Word& B, const Kneading& nu, const LeftItinerary& Lp) {
    const std::size_t n = B.size();
    auto c = [&](std::size_t i) { return nu.c(i); };
    // smallest k with a_{k+1} ... a_n = c_2 ... c_{n-k+1}
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (std::size_t j = i + 1; j <= n && ok; ++j) ok = B[n - j] == c(j - i + 1);
        if (ok) {
            k = i;
            break;
        }
    }
    std::optional<EPSeq> bottom_fixed;
    std::size_t kk = k;
    if (k == 0) {
        EPSeq S = nu.exact() ? reversed(shift(nu.seq(), 1)) : EPSeq::left("1", reversed(nu.first(nu.known()).substr(1)));
        bottom_fixed = S;
        kk = n + 1;
        for (std::size_t i = 1; i <= n; ++i) {
            bool ok = true;
            for (std::size_t j = i; j <= n && ok; ++j) ok = B[n - j] == c(j - i + 1);
            if (ok) {
                kk = i;
                break;
            }
        }
    }
    auto pick = [&](bool top) -> EPSeq {
        const bool want_odd = !top;
        const Word lowk = kk >= 1 ? low(B, kk - 1) : Word();
        if (odd(lowk) == want_odd) return attach(Lp.seq, lowk);
        if (odd(B) == want_odd) return attach(Lp.seq, B);
        return attach(Lp.seq, low(B, n - 1));
    };
    EPSeq top = pick(true);
    EPSeq bottom = bottom_fixed ? *bottom_fixed : pick(false);
    return {top, bottom, Lp.provisional};
}

}  // namespace

Extrema bd_extrema(const Word& B, const Kneading& nu, const HeightClass& cls) {
    if (!is_admissible_word(B, nu)) fail("NotAdmissible", "cylinder word " + B + " is not admissible");
    if (cls.kind == HeightClass::Kind::Interior) {
        if (!nu.exact()) fail("WrongClass", "rational interior type needs the exact kneading sequence");
        return bd_interior(B, nu, build_height(cls.q));
    }
    return bd_lprime(B, nu, L_prime(nu, cls));
}

}  // namespace tentweave
