#include "tentweave/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <climits>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace tentweave {

void fail(const std::string& kind, const std::string& msg) { throw DomainError(kind, msg); }

const char* to_string(Ordering o) {
    switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    default: return "Greater";
    }
}

bool is_binary(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

char flip(char c) { return c == '0' ? '1' : '0'; }

int ones(const Word& w) { return static_cast<int>(std::count(w.begin(), w.end(), '1')); }

bool ones_parity_odd(const Word& w) { return ones(w) % 2 == 1; }

std::size_t lcm(std::size_t a, std::size_t b) { return std::lcm(a, b); }

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return w.substr(0, d);
    }
    return w;
}

EPSeq canonical(EPSeq s) {
    if (s.period.empty()) fail("ParseError", "empty period");
    if (!is_binary(s.head) || !is_binary(s.period)) fail("ParseError", "non-binary symbol");
    s.period = primitive_root(s.period);
    const std::size_t p = s.period.size();
    if (s.dir == Dir::Right) {
        while (!s.head.empty() && s.head.back() == s.period.back()) {
            s.period = s.period.back() + s.period.substr(0, p - 1);
            s.head.pop_back();
        }
    } else {
        while (!s.head.empty() && s.head.front() == s.period.front()) {
            s.period = s.period.substr(1) + s.period[0];
            s.head.erase(0, 1);
        }
    }
    return s;
}

EPSeq EPSeq::right(Word head, Word period) {
    return canonical(EPSeq{std::move(head), std::move(period), Dir::Right});
}

EPSeq EPSeq::left(Word period, Word head) {
    return canonical(EPSeq{std::move(head), std::move(period), Dir::Left});
}

char EPSeq::at(std::size_t i) const {
    const std::size_t hh = head.size(), pp = period.size();
    if (dir == Dir::Right) return i <= hh ? head[i - 1] : period[(i - hh - 1) % pp];
    return i <= hh ? head[hh - i] : period[pp - 1 - (i - hh - 1) % pp];
}

Word EPSeq::first(std::size_t n) const {
    Word w(n, '0');
    for (std::size_t i = 1; i <= n; ++i) w[i - 1] = at(i);
    return w;
}

Word EPSeq::last(std::size_t n) const {
    Word w(n, '0');
    for (std::size_t i = 1; i <= n; ++i) w[n - i] = at(i);
    return w;
}

namespace {

std::string strip(const std::string& t) {
    std::string out;
    for (char c : t)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

Word digits_only(const std::string& t) {
    Word w;
    for (char c : t) {
        if (c == '(' || c == ')') continue;
        if (c != '0' && c != '1') fail("ParseError", std::string("unexpected character '") + c + "'");
        w += c;
    }
    return w;
}

}  // namespace

Word parse_word(const std::string& text) {
    std::string t = strip(text);
    if (!is_binary(t)) fail("ParseError", "not a finite 0/1 word: " + text);
    return t;
}

EPSeq parse_seq(const std::string& text) {
    std::string t = strip(text);
    if (t.size() >= 2 && t[0] == '*' && t[1] == '(') {
        int depth = 0;
        std::size_t close = std::string::npos;
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (t[i] == '(') ++depth;
            if (t[i] == ')' && --depth == 0) { close = i; break; }
        }
        if (close == std::string::npos) fail("ParseError", "unbalanced parentheses: " + text);
        return EPSeq::left(digits_only(t.substr(2, close - 2)), digits_only(t.substr(close + 1)));
    }
    if (t.size() >= 3 && t.substr(t.size() - 2) == ")*") {
        int depth = 0;
        std::size_t open = std::string::npos;
        for (std::size_t i = t.size() - 2; i-- > 0;) {
            if (t[i] == ')') ++depth;
            if (t[i] == '(' && depth-- == 0) { open = i; break; }
        }
        if (open == std::string::npos) fail("ParseError", "unbalanced parentheses: " + text);
        return EPSeq::right(digits_only(t.substr(0, open)), digits_only(t.substr(open + 1, t.size() - open - 3)));
    }
    fail("ParseError", "not an eventually periodic sequence: " + text);
}

PointItinerary parse_point(const std::string& text) {
    std::string t = strip(text);
    auto dot = t.find('.');
    if (dot == std::string::npos) fail("ParseError", "point itinerary needs '.': " + text);
    EPSeq l = parse_seq(t.substr(0, dot));
    EPSeq r = parse_seq(t.substr(dot + 1));
    if (l.dir != Dir::Left || r.dir != Dir::Right) fail("ParseError", "expected LEFT.RIGHT: " + text);
    return {l, r};
}

std::string format(const EPSeq& s) {
    if (s.dir == Dir::Right) return s.head + "(" + s.period + ")*";
    return "*(" + s.period + ")" + s.head;
}

std::string format(const PointItinerary& p) { return format(p.left) + "." + format(p.right); }

Ordering plex_compare(const Word& s, const Word& t) {
    if (s.size() != t.size()) fail("MixedLength", "finite words of different length");
    bool odd = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != t[i]) {
            bool less = s[i] < t[i];
            if (odd) less = !less;
            return less ? Ordering::Less : Ordering::Greater;
        }
        if (s[i] == '1') odd = !odd;
    }
    return Ordering::Equal;
}

Ordering plex_compare(const EPSeq& s, const EPSeq& t) {
    if (s.dir != Dir::Right || t.dir != Dir::Right)
        fail("MixedLength", "parity-lexicographic order compares right-infinite sequences");
    const std::size_t bound = std::max(s.h(), t.h()) + lcm(s.p(), t.p());
    bool odd = false;
    for (std::size_t i = 1; i <= bound; ++i) {
        char a = s.at(i), b = t.at(i);
        if (a != b) {
            bool less = a < b;
            if (odd) less = !less;
            return less ? Ordering::Less : Ordering::Greater;
        }
        if (a == '1') odd = !odd;
    }
    return Ordering::Equal;
}

Ordering plex_compare(const Word&, const EPSeq&) { fail("MixedLength", "cannot compare finite with infinite"); }
Ordering plex_compare(const EPSeq&, const Word&) { fail("MixedLength", "cannot compare infinite with finite"); }

EPSeq shift(const EPSeq& s, std::size_t k) {
    const std::size_t h = s.h(), p = s.p();
    if (k <= h) {
        if (s.dir == Dir::Right) return EPSeq::right(s.head.substr(k), s.period);
        return EPSeq::left(s.period, s.head.substr(0, h - k));
    }
    const std::size_t r = (k - h) % p;
    if (s.dir == Dir::Right) return EPSeq::right("", s.period.substr(r) + s.period.substr(0, r));
    return EPSeq::left(s.period, s.period.substr(0, p - r));
}

EPSeq append(const EPSeq& s, const Word& w) {
    if (s.dir != Dir::Left) fail("ParseError", "append needs a left-infinite sequence");
    return EPSeq::left(s.period, s.head + w);
}

EPSeq reversed(const EPSeq& s) {
    if (s.dir == Dir::Right) return EPSeq::left(reversed(s.period), reversed(s.head));
    return EPSeq::right(reversed(s.head), reversed(s.period));
}

Kneading Kneading::of(const EPSeq& nu, bool validate) {
    if (nu.dir != Dir::Right) fail("NotAdmissible", "kneading sequence must be right-infinite");
    Kneading k;
    k.seq_ = canonical(nu);
    if (k.c(1) != '1' || k.c(2) != '0') fail("NotAdmissible", "kneading sequence must start with 10");
    if (validate && !is_admissible_seq(*k.seq_, k))
        fail("NotAdmissible", "kneading sequence is not shift-admissible: " + format(nu));
    return k;
}

Kneading Kneading::of_prefix(const Word& prefix) {
    if (!is_binary(prefix)) fail("ParseError", "kneading prefix must be binary");
    if (prefix.size() < 2 || prefix[0] != '1' || prefix[1] != '0')
        fail("NotAdmissible", "kneading sequence must start with 10");
    Kneading k;
    k.prefix_ = prefix;
    return k;
}

Kneading Kneading::parse(const std::string& text) {
    std::string t = strip(text);
    if (is_binary(t)) return of_prefix(t);
    return of(parse_seq(t));
}

const EPSeq& Kneading::seq() const {
    if (!seq_) fail("InsufficientDepth", "kneading sequence is only known as a prefix");
    return *seq_;
}

char Kneading::c(std::size_t i) const {
    if (seq_) return seq_->at(i);
    if (i == 0 || i > prefix_.size())
        fail("InsufficientDepth", "kneading symbol " + std::to_string(i) + " beyond known depth " +
                                      std::to_string(prefix_.size()));
    return prefix_[i - 1];
}

std::size_t Kneading::known() const { return seq_ ? SIZE_MAX : prefix_.size(); }

Word Kneading::first(std::size_t n) const {
    Word w(n, '0');
    for (std::size_t i = 1; i <= n; ++i) w[i - 1] = c(i);
    return w;
}

std::string Kneading::str() const { return seq_ ? format(*seq_) : prefix_; }

std::optional<int> kappa(const Kneading& nu) {
    std::size_t bound = nu.exact() ? nu.seq().h() + nu.seq().p() + 2 : nu.known();
    for (std::size_t i = 3; i <= bound; ++i)
        if (nu.c(i) == '1') return static_cast<int>(i) - 2;
    return std::nullopt;
}

Automaton::Automaton(const EPSeq& nu) : nu_(canonical(nu)) {
    h_ = nu_.h();
    p_ = nu_.p();
    n_ = h_ + p_;
    while (n_ < 2) {
        ++h_;
        ++n_;
    }
    sym_.resize(n_);
    for (std::size_t m = 0; m < n_; ++m) sym_[m] = nu_.at(m + 1);
}

Automaton::State Automaton::from_right(const EPSeq& r) const {
    State st(n_);
    for (std::size_t m = 0; m < n_; ++m) st[m] = static_cast<int8_t>(sign(plex_compare(r, shift(nu_, m))));
    return st;
}

bool Automaton::accepts(char x, const State& st) const {
    auto entry = [&](std::size_t m) -> int {
        char y = sym_[m];
        if (x < y) return -1;
        if (x > y) return 1;
        int v = st[sh(m + 1)];
        return x == '1' ? -v : v;
    };
    return entry(0) <= 0 && entry(1) >= 0;
}

bool Automaton::push(State& st, char x) const {
    State nw(n_);
    for (std::size_t m = 0; m < n_; ++m) {
        char y = sym_[m];
        int v;
        if (x < y) v = -1;
        else if (x > y) v = 1;
        else {
            v = st[sh(m + 1)];
            if (x == '1') v = -v;
        }
        nw[m] = static_cast<int8_t>(v);
    }
    st = std::move(nw);
    return st[0] <= 0 && st[1] >= 0;
}

namespace {

bool word_ok_prefix(const Word& w, const Kneading& nu) {
    const std::size_t n = w.size();
    if (nu.known() < n + 1)
        fail("InsufficientDepth", "need " + std::to_string(n + 1) + " kneading symbols, have " +
                                      std::to_string(nu.known()));
    Word c = nu.first(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Word a = w.substr(i);
        std::size_t len = a.size();
        if (plex_compare(a, c.substr(0, len)) == Ordering::Greater) return false;
        if (plex_compare(a, c.substr(1, len)) == Ordering::Less) return false;
    }
    return true;
}

}  // namespace

bool is_admissible_word(const Word& w, const Kneading& nu) {
    if (!is_binary(w)) fail("ParseError", "word must be binary");
    if (!nu.exact()) return word_ok_prefix(w, nu);
    Automaton a(nu.seq());
    auto st = a.empty();
    for (std::size_t i = w.size(); i-- > 0;)
        if (!a.push(st, w[i])) return false;
    return true;
}

namespace {

bool left_run_ok(const Automaton& a, Automaton::State st, const EPSeq& s) {
    std::set<std::pair<std::size_t, Automaton::State>> seen;
    for (std::size_t i = 1;; ++i) {
        if (i > s.h()) {
            auto key = std::make_pair((i - s.h() - 1) % s.p(), st);
            if (!seen.insert(key).second) return true;
        }
        if (!a.push(st, s.at(i))) return false;
    }
}

// With only a kneading prefix, subwords are checked as far as the prefix allows.
std::size_t prefix_bound(const EPSeq&, const Kneading& nu) { return nu.known() - 1; }

}  // namespace

bool is_admissible_seq(const EPSeq& s, const Kneading& nu) {
    if (s.dir == Dir::Left) {
        if (!nu.exact()) return word_ok_prefix(s.last(prefix_bound(s, nu)), nu);
        Automaton a(nu.seq());
        return left_run_ok(a, a.empty(), s);
    }
    if (!nu.exact()) {
        std::size_t b = prefix_bound(s, nu);
        for (std::size_t i = 0; i < s.h() + s.p(); ++i)
            if (!word_ok_prefix(shift(s, i).first(b), nu)) return false;
        return true;
    }
    const EPSeq& v = nu.seq();
    EPSeq sv = shift(v, 1);
    for (std::size_t i = 0; i < s.h() + s.p(); ++i) {
        EPSeq t = shift(s, i);
        if (plex_compare(t, v) == Ordering::Greater) return false;
        if (plex_compare(t, sv) == Ordering::Less) return false;
    }
    return true;
}

bool is_admissible_point(const PointItinerary& x, const Kneading& nu) {
    if (!is_admissible_seq(x.right, nu)) return false;
    if (!nu.exact()) {
        std::size_t b = prefix_bound(x.left, nu) / 2;
        return word_ok_prefix(x.left.last(b) + x.right.first(b), nu);
    }
    Automaton a(nu.seq());
    return left_run_ok(a, a.from_right(x.right), x.left);
}

Kneading kneading_from_slope(double slope, std::size_t depth) {
    if (!(slope > std::sqrt(2.0)) || slope > 2.0 + 1e-15)
        fail("SlopeOutOfRange", "slope must lie in (sqrt 2, 2]");
    if (depth < 2) fail("SlopeOutOfRange", "depth must be at least 2");
    using R = long double;
    const R s = slope, c = 0.5L, tol = 1e-12L;
    auto T = [&](R t) { return std::min(s * t, s * (1 - t)); };
    const std::size_t scan = std::max<std::size_t>(depth, 64);
    std::vector<R> x{c};
    Word sym;
    for (std::size_t i = 1; i <= scan; ++i) {
        R xi = T(x.back());
        x.push_back(xi);
        if (std::fabs(xi - c) < tol) {
            R y = xi;
            std::size_t checks = std::min<std::size_t>(i, 18);
            for (std::size_t j = 1; j <= checks; ++j) {
                y = T(y);
                if (std::fabs(y - x[j]) > 1e-6L)
                    fail("UnresolvedCriticalHit", "orbit returns near c at step " + std::to_string(i) +
                                                      " but does not repeat");
            }
            EPSeq a = EPSeq::right("", sym + "0"), b = EPSeq::right("", sym + "1");
            return Kneading::of(plex_compare(a, b) == Ordering::Less ? a : b, false);
        }
        for (std::size_t j = 1; j < i; ++j) {
            if (std::fabs(xi - x[j]) < tol) {
                return Kneading::of(EPSeq::right(sym.substr(0, j - 1), sym.substr(j - 1)), false);
            }
        }
        sym += xi < c ? '0' : '1';
    }
    return Kneading::of_prefix(sym.substr(0, depth));
}

}  // namespace tentweave
