#include "tentweave/arcs.hpp"

#include <algorithm>
#include <vector>

namespace tentweave {

std::string Tau::str() const {
    switch (kind) {
    case Kind::Finite: return std::to_string(n);
    case Kind::Infinite: return "inf";
    case Kind::Undefined: return "undefined";
    default: return ">=" + std::to_string(n) + "@" + std::to_string(depth);
    }
}

namespace {

enum class M { No, Yes, Unknown };

struct Match {
    std::size_t m;
    bool odd;
    M status;
};

// match(m): s_m...s_1 = c_1...c_m. Covers enough m to expose the periodic regime.
struct Scan {
    std::vector<Match> all;
    std::size_t window_lo = 0;  // exact case: matches at m >= window_lo recur forever
    bool exact = true;
    std::size_t known = 0;
};

Scan scan_matches(const EPSeq& s, const Kneading& nu) {
    if (s.dir != Dir::Left) fail("ParseError", "basic arcs need a left-infinite itinerary");
    Scan sc;
    std::size_t limit;
    if (nu.exact()) {
        const EPSeq& v = nu.seq();
        const std::size_t L = lcm(s.p(), v.p());
        sc.window_lo = s.h() + v.h() + L;
        limit = sc.window_lo + 2 * L;
    } else {
        sc.exact = false;
        sc.known = nu.known();
        limit = sc.known + s.h() + 2 * s.p() + 1;
    }
    const Word cw = nu.exact() ? nu.seq().first(limit) : nu.first(nu.known());
    bool odd = false;
    for (std::size_t m = 0; m < limit; ++m) {
        if (m > 0 && s.at(m) == '1') odd = !odd;
        M st = M::Yes;
        const std::size_t upto = std::min(m, cw.size());
        for (std::size_t j = 1; j <= upto; ++j) {
            if (s.at(m + 1 - j) != cw[j - 1]) {
                st = M::No;
                break;
            }
        }
        if (st == M::Yes && m > cw.size()) st = M::Unknown;
        sc.all.push_back({m, odd, st});
    }
    return sc;
}

Tau tau_from(const Scan& sc, bool want_odd) {
    std::size_t best = 0;
    bool any = false, unknown = false;
    for (const auto& mt : sc.all) {
        if (mt.odd != want_odd) continue;
        if (want_odd && mt.m == 0) continue;
        if (mt.status == M::Yes) {
            if (sc.exact && mt.m >= sc.window_lo) return Tau::infinite();
            best = mt.m + 1;
            any = true;
        } else if (mt.status == M::Unknown) {
            unknown = true;
        }
    }
    if (unknown) return Tau::at_least(best, sc.known);
    if (!any) return Tau::undefined();
    return Tau::finite(best);
}

}  // namespace

Tau tau_L(const EPSeq& s, const Kneading& nu) { return tau_from(scan_matches(s, nu), true); }

Tau tau_R(const EPSeq& s, const Kneading& nu) { return tau_from(scan_matches(s, nu), false); }

Ordering orbit_compare(const OrbitPoint& a, const OrbitPoint& b, const Kneading& nu) {
    if (a.zero || b.zero) {
        if (a.zero && b.zero) return Ordering::Equal;
        return a.zero ? Ordering::Less : Ordering::Greater;
    }
    if (a.n == b.n) return Ordering::Equal;
    if (nu.exact()) return plex_compare(shift(nu.seq(), a.n - 1), shift(nu.seq(), b.n - 1));
    const std::size_t top = std::max(a.n, b.n);
    if (nu.known() < top) fail("InsufficientDepth", "orbit comparison beyond known kneading depth");
    const std::size_t len = nu.known() - top + 1;
    Word wa = nu.first(a.n - 1 + len).substr(a.n - 1), wb = nu.first(b.n - 1 + len).substr(b.n - 1);
    return plex_compare(wa, wb);
}

BasicArc projection(const EPSeq& s, const Kneading& nu, std::optional<double> slope) {
    BasicArc arc;
    arc.itinerary = s;
    Scan sc = scan_matches(s, nu);
    arc.tau_l = tau_from(sc, true);
    arc.tau_r = tau_from(sc, false);
    if (arc.tau_l.kind == Tau::Kind::Undefined) {
        arc.left = {true, 0};
    } else if (arc.tau_l.is_infinite()) {
        // Supremum over odd matches; ties resolved to the smallest index.
        std::optional<OrbitPoint> best;
        for (const auto& mt : sc.all) {
            if (!mt.odd || mt.m == 0 || mt.status != M::Yes) continue;
            OrbitPoint cand{false, mt.m + 1};
            if (!best || orbit_compare(cand, *best, nu) == Ordering::Greater) best = cand;
        }
        arc.left = *best;
    } else {
        arc.left = {false, arc.tau_l.n};
    }
    if (arc.tau_r.is_infinite()) {
        std::optional<OrbitPoint> best;
        for (const auto& mt : sc.all) {
            if (mt.odd || mt.status != M::Yes) continue;
            OrbitPoint cand{false, mt.m + 1};
            if (!best || orbit_compare(cand, *best, nu) == Ordering::Less) best = cand;
        }
        arc.right = *best;
    } else {
        arc.right = {false, arc.tau_r.n};
    }
    arc.provisional = arc.tau_l.kind == Tau::Kind::AtLeast || arc.tau_r.kind == Tau::Kind::AtLeast;
    if (!arc.provisional || (arc.left.zero || arc.left.n > 0))
        arc.degenerate = orbit_compare(arc.left, arc.right, nu) == Ordering::Equal;
    if (slope) {
        TentParams tp(*slope);
        arc.numeric = Interval{arc.left.zero ? 0.0 : tp.orbit(arc.left.n), tp.orbit(arc.right.n)};
    }
    return arc;
}

EPSeq flip_at(const EPSeq& s, std::size_t k) {
    if (s.dir != Dir::Left) fail("ParseError", "flip_at needs a left-infinite itinerary");
    if (k == 0) fail("ParseError", "indices start at 1");
    const std::size_t h = s.h(), p = s.p();
    std::size_t n = std::max(h, k);
    if (n > h) n = h + ((n - h + p - 1) / p) * p;
    Word head = s.last(n);
    head[n - k] = flip(head[n - k]);
    return EPSeq::left(s.period, head);
}

EPSeq right_neighbour(const EPSeq& s, const Kneading& nu) {
    Tau t = tau_R(s, nu);
    if (!t.is_finite()) fail("TauInfinite", "tau_R of " + format(s) + " is " + t.str());
    return flip_at(s, t.n);
}

EPSeq left_neighbour(const EPSeq& s, const Kneading& nu) {
    Tau t = tau_L(s, nu);
    if (!t.is_finite()) fail("TauInfinite", "tau_L of " + format(s) + " is " + t.str());
    return flip_at(s, t.n);
}

namespace {

// Whether the point with forward itinerary r is T^n(c).
bool is_orbit_point(const EPSeq& r, std::size_t n, const EPSeq& v) {
    EPSeq tail = shift(r, 1);
    if (!(tail == shift(v, n))) return false;
    return r.at(1) == v.at(n) || tail == v;
}

}  // namespace

bool is_endpoint(const PointItinerary& p, const Kneading& nu) {
    const EPSeq& v = nu.seq();
    const EPSeq& s = p.left;
    const EPSeq& r = p.right;
    const std::size_t L = lcm(s.p(), v.p());
    const std::size_t B = s.h() + v.h() + L + 1;
    std::size_t K = 0;
    for (std::size_t k = 1; k < B + L; ++k) {
        if (s.last(k - 1) == v.first(k - 1) && shift(v, k - 1) == r) {
            // Backward orbit through c infinitely often: a folding point of a periodic orbit.
            if (k >= B) return true;
            K = k;
        }
    }
    const EPSeq s2 = shift(s, K);
    const EPSeq r2 = EPSeq::right(s.last(K) + r.head, r.period);
    BasicArc arc = projection(s2, nu);
    if (arc.tau_l.kind == Tau::Kind::Undefined) return r2 == EPSeq::right("", "0");
    if (arc.tau_l.is_infinite() && is_orbit_point(r2, arc.left.n, v)) return true;
    if (arc.tau_r.is_infinite() && is_orbit_point(r2, arc.right.n, v)) return true;
    return false;
}

std::pair<std::size_t, Word> tail_key(const EPSeq& s) {
    if (s.dir != Dir::Left) fail("ParseError", "tails are defined for left-infinite itineraries");
    const std::size_t p = s.p();
    const std::size_t m = (s.h() + p - 1) / p;
    Word block(p, '0');
    for (std::size_t i = 1; i <= p; ++i) block[p - i] = s.at(m * p + i);
    return {p, block};
}

bool same_tail(const EPSeq& s, const EPSeq& t) { return tail_key(s) == tail_key(t); }

}  // namespace tentweave
