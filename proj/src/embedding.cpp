#include "tentweave/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

namespace tentweave {

namespace {

Ordering decide(char sk, char tk, char lk, bool d_odd) {
    bool less = d_odd ? sk == lk : tk == lk;
    return less ? Ordering::Less : Ordering::Greater;
}

}  // namespace

Ordering order_L_compare(const EPSeq& s, const EPSeq& t, const EPSeq& L) {
    if (s.dir != Dir::Left || t.dir != Dir::Left || L.dir != Dir::Left)
        fail("ParseError", "order_L compares left-infinite sequences");
    const std::size_t bound = std::max(s.h(), t.h()) + lcm(s.p(), t.p());
    bool d = false;
    for (std::size_t k = 1; k <= bound; ++k) {
        char a = s.at(k), b = t.at(k), l = L.at(k);
        if (a != b) return decide(a, b, l, d);
        d ^= (a == '1') != (l == '1');
    }
    return Ordering::Equal;
}

Ordering order_L_compare(const Word& s, const Word& t, const EPSeq& L) {
    if (s.size() != t.size()) fail("MixedLength", "finite words of different length");
    const std::size_t n = s.size();
    bool d = false;
    for (std::size_t k = 1; k <= n; ++k) {
        char a = s[n - k], b = t[n - k], l = L.at(k);
        if (a != b) return decide(a, b, l, d);
        d ^= (a == '1') != (l == '1');
    }
    return Ordering::Equal;
}

std::string psi_digits(const EPSeq& s, const EPSeq& L, std::size_t digits) {
    std::string out(digits, '0');
    bool ps = false, pl = false;
    for (std::size_t i = 1; i <= digits; ++i) {
        ps ^= s.at(i) == '1';
        pl ^= L.at(i) == '1';
        out[i - 1] = ps == pl ? '2' : '0';
    }
    return out;
}

std::string psi_digits(const Word& s, const EPSeq& L) {
    const std::size_t n = s.size();
    std::string out(n, '0');
    bool ps = false, pl = false;
    for (std::size_t i = 1; i <= n; ++i) {
        ps ^= s[n - i] == '1';
        pl ^= L.at(i) == '1';
        out[i - 1] = ps == pl ? '2' : '0';
    }
    return out;
}

std::string psi_L(const EPSeq& s, const EPSeq& L, std::size_t digits) {
    return "0." + psi_digits(s, L, digits) + "(3)";
}

double ternary_value(const std::string& digits) {
    double v = 0, scale = 1.0 / 3;
    for (char d : digits) {
        v += (d - '0') * scale;
        scale /= 3;
    }
    return v;
}

namespace {

CylinderExtremum greedy(const Word& B, const EmbeddingSpec& spec, std::size_t depth, bool top) {
    const Kneading& nu = spec.nu;
    const EPSeq& L = spec.L;
    if (!is_admissible_word(B, nu)) fail("NotAdmissible", "cylinder word " + B + " is not admissible");
    const std::size_t n = B.size();
    bool d = (ones(B) + ones(L.last(n))) % 2 == 1;
    Word sym = reversed(B);  // sym[k-1] = s_k
    auto choose = [&](std::size_t k) {
        char lk = L.at(k);
        return (!d) == top ? lk : flip(lk);
    };
    auto written = [&](std::size_t from, std::size_t to) {  // s_{to-1}...s_from
        return reversed(sym.substr(from - 1, to - from));
    };
    if (!nu.exact()) {
        const std::size_t limit = std::min(depth, nu.known() - 1);
        Word w = B;
        for (std::size_t k = n + 1; k <= limit; ++k) {
            char x = choose(k);
            if (!is_admissible_word(x + w, nu)) x = flip(x);
            w = x + w;
            sym += x;
            d ^= x != L.at(k);
        }
        return {EPSeq::left("1", w), w, true, std::max(limit, n)};
    }
    Automaton a(nu.seq());
    auto st = a.empty();
    for (std::size_t i = n; i-- > 0;) a.push(st, B[i]);
    std::map<std::tuple<std::size_t, bool, Automaton::State>, std::size_t> seen;
    for (std::size_t k = n + 1; k <= n + depth; ++k) {
        if (k > L.h()) {
            auto key = std::make_tuple((k - L.h() - 1) % L.p(), d, st);
            auto [it, fresh] = seen.emplace(key, k);
            if (!fresh) {
                const std::size_t k1 = it->second;
                EPSeq seq = EPSeq::left(written(k1, k), written(1, k1));
                return {seq, reversed(sym), false, 0};
            }
        }
        char x = choose(k);
        auto next = st;
        if (!a.push(next, x)) {
            x = flip(x);
            next = st;
            if (!a.push(next, x)) fail("NotAdmissible", "no admissible extension of " + B);
        }
        st = std::move(next);
        sym += x;
        d ^= x != L.at(k);
    }
    Word w = reversed(sym);
    return {EPSeq::left("1", w), w, true, w.size()};
}

}  // namespace

CylinderExtremum cylinder_top(const Word& B, const EmbeddingSpec& spec, std::size_t depth) {
    return greedy(B, spec, depth, true);
}

CylinderExtremum cylinder_bottom(const Word& B, const EmbeddingSpec& spec, std::size_t depth) {
    return greedy(B, spec, depth, false);
}

std::vector<Word> admissible_words(std::size_t n, const Kneading& nu) {
    std::vector<Word> out;
    if (!nu.exact()) {
        std::function<void(const Word&)> rec = [&](const Word& w) {
            if (w.size() == n) {
                out.push_back(w);
                return;
            }
            for (char x : {'0', '1'})
                if (is_admissible_word(x + w, nu)) rec(x + w);
        };
        rec("");
        return out;
    }
    Automaton a(nu.seq());
    std::function<void(const Word&, const Automaton::State&)> rec = [&](const Word& w,
                                                                        const Automaton::State& st) {
        if (w.size() == n) {
            out.push_back(w);
            return;
        }
        for (char x : {'0', '1'}) {
            auto next = st;
            if (a.push(next, x)) rec(x + w, next);
        }
    };
    rec("", a.empty());
    return out;
}

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

// Ranks distinct orbit points on the interval; equal points share a rank.
class OrbitRanker {
public:
    explicit OrbitRanker(const Kneading& nu) : nu_(nu) {}
    Ordering cmp(const OrbitPoint& a, const OrbitPoint& b) {
        if (a == b) return Ordering::Equal;
        auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Ordering o = orbit_compare(a, b, nu_);
        cache_[key] = o;
        return o;
    }

private:
    struct Less {
        bool operator()(const std::pair<OrbitPoint, OrbitPoint>& x,
                        const std::pair<OrbitPoint, OrbitPoint>& y) const {
            return std::tie(x.first.zero, x.first.n, x.second.zero, x.second.n) <
                   std::tie(y.first.zero, y.first.n, y.second.zero, y.second.n);
        }
    };
    const Kneading& nu_;
    std::map<std::pair<OrbitPoint, OrbitPoint>, Ordering, Less> cache_;
};

}  // namespace

EmbeddingApprox build_embedding(const EmbeddingSpec& spec, std::size_t depth) {
    EmbeddingApprox e{spec, depth, {}, {}};
    const std::size_t digits = std::max<std::size_t>(2 * depth, 1);
    auto make_arc = [&](const Word& cyl, const EPSeq& rep) {
        BasicArc b = projection(rep, spec.nu, spec.slope);
        return PlanarArc{cyl, rep, psi_digits(rep, spec.L, digits), b.left, b.right, b.numeric};
    };
    if (depth == 0) {
        e.arcs.push_back(make_arc("", spec.L));
        return e;
    }
    std::vector<std::pair<Word, EPSeq>> reps;
    for (const Word& B : admissible_words(depth, spec.nu)) {
        for (bool top : {true, false}) {
            auto ex = top ? cylinder_top(B, spec) : cylinder_bottom(B, spec);
            bool dup = std::any_of(reps.begin(), reps.end(), [&](auto& r) { return r.second == ex.seq; });
            if (!dup) reps.emplace_back(B, ex.seq);
        }
    }
    std::sort(reps.begin(), reps.end(), [&](const auto& x, const auto& y) {
        return order_L_compare(x.second, y.second, spec.L) == Ordering::Less;
    });
    std::map<std::string, std::size_t> index;
    for (const auto& [cyl, rep] : reps) {
        index[format(rep)] = e.arcs.size();
        e.arcs.push_back(make_arc(cyl, rep));
    }
    for (std::size_t i = 0; i < e.arcs.size(); ++i) {
        const EPSeq& s = e.arcs[i].rep;
        for (Side side : {Side::Left, Side::Right}) {
            Tau t = side == Side::Left ? tau_L(s, spec.nu) : tau_R(s, spec.nu);
            if (!t.is_finite() || t.n > depth) continue;
            auto it = index.find(format(flip_at(s, t.n)));
            if (it != index.end() && it->second > i) e.joins.push_back({i, it->second, side});
        }
    }
    return e;
}

PlanarityResult check_planarity(const EmbeddingApprox& e) {
    PlanarityResult res;
    OrbitRanker rank(e.spec.nu);
    auto report = [&](const std::string& msg) {
        res.planar = false;
        res.violations.push_back(msg);
    };
    for (std::size_t a = 0; a < e.joins.size(); ++a) {
        const Join& J = e.joins[a];
        const std::size_t lo = std::min(J.i, J.j), hi = std::max(J.i, J.j);
        const bool right = J.side == Side::Right;
        auto end = [&](std::size_t k) { return right ? e.arcs[k].x_right : e.arcs[k].x_left; };
        const OrbitPoint x = end(lo);
        const std::string tag = std::string(to_string(J.side)) + " join " + std::to_string(lo) + "-" +
                                std::to_string(hi);
        if (rank.cmp(x, end(hi)) != Ordering::Equal) report(tag + " connects different endpoints");
        for (std::size_t r = lo + 1; r < hi; ++r) {
            Ordering o = rank.cmp(end(r), x);
            if ((right && o == Ordering::Greater) || (!right && o == Ordering::Less))
                report(tag + " crosses arc " + std::to_string(r));
        }
        for (std::size_t b = a + 1; b < e.joins.size(); ++b) {
            const Join& K = e.joins[b];
            if (K.side != J.side) continue;
            const std::size_t lo2 = std::min(K.i, K.j), hi2 = std::max(K.i, K.j);
            if (lo2 == lo || lo2 == hi || hi2 == lo || hi2 == hi)
                report(tag + " shares an arc with join " + std::to_string(lo2) + "-" + std::to_string(hi2));
            else if ((lo < lo2 && lo2 < hi && hi < hi2) || (lo2 < lo && lo < hi2 && hi2 < hi))
                report(tag + " interleaves join " + std::to_string(lo2) + "-" + std::to_string(hi2));
        }
    }
    return res;
}

Equivalence embeddings_equivalent_by_tail(const EPSeq& L1, const EPSeq& L2) {
    return same_tail(L1, L2) ? Equivalence::Equivalent : Equivalence::Unknown;
}

std::string render_svg(const EmbeddingApprox& e, const SvgStyle& style) {
    const double W = style.width, H = style.height, m = 60;
    std::vector<OrbitPoint> pts;
    for (const auto& a : e.arcs) {
        pts.push_back(a.x_left);
        pts.push_back(a.x_right);
    }
    const std::size_t ticks = std::min<std::size_t>(e.depth + 2, 12);
    for (std::size_t i = 1; i <= ticks; ++i) pts.push_back({false, i});
    OrbitRanker rank(e.spec.nu);
    std::vector<OrbitPoint> distinct;
    for (const auto& p : pts) {
        bool seen = std::any_of(distinct.begin(), distinct.end(),
                                [&](const OrbitPoint& q) { return rank.cmp(p, q) == Ordering::Equal; });
        if (!seen) distinct.push_back(p);
    }
    std::sort(distinct.begin(), distinct.end(),
              [&](const OrbitPoint& a, const OrbitPoint& b) { return rank.cmp(a, b) == Ordering::Less; });
    std::optional<TentParams> tp;
    if (e.spec.slope) tp.emplace(*e.spec.slope);
    auto xval = [&](const OrbitPoint& p) {
        if (tp) return p.zero ? 0.0 : tp->orbit(p.n);
        for (std::size_t i = 0; i < distinct.size(); ++i)
            if (rank.cmp(p, distinct[i]) == Ordering::Equal)
                return distinct.size() > 1 ? double(i) / double(distinct.size() - 1) : 0.5;
        return 0.5;
    };
    double xmin = 1, xmax = 0;
    for (const auto& p : distinct) {
        xmin = std::min(xmin, xval(p));
        xmax = std::max(xmax, xval(p));
    }
    if (xmax <= xmin) xmax = xmin + 1;
    auto X = [&](const OrbitPoint& p) { return m + (xval(p) - xmin) / (xmax - xmin) * (W - 2 * m); };
    auto Y = [&](const std::string& y) { return m + (1 - ternary_value(y)) * (H - 2 * m); };

    std::ostringstream os;
    os.precision(6);
    os << std::fixed;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
       << "<g stroke=\"black\" stroke-width=\"" << style.stroke << "\" fill=\"none\">\n";
    for (const auto& a : e.arcs) {
        double y = Y(a.y);
        double x0 = X(a.x_left), x1 = X(a.x_right);
        if (x1 - x0 < 1) x1 = x0 + 1;
        os << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y << "\"/>\n";
    }
    for (const auto& j : e.joins) {
        double ya = Y(e.arcs[j.i].y), yb = Y(e.arcs[j.j].y);
        if (ya > yb) std::swap(ya, yb);
        const bool right = j.side == Side::Right;
        double x = X(right ? e.arcs[j.i].x_right : e.arcs[j.i].x_left);
        double r = (yb - ya) / 2;
        os << "<path d=\"M " << x << " " << ya << " A " << r << " " << r << " 0 0 " << (right ? 1 : 0) << " "
           << x << " " << yb << "\"/>\n";
    }
    os << "<line x1=\"" << m << "\" y1=\"" << H - m / 2 << "\" x2=\"" << W - m << "\" y2=\"" << H - m / 2
       << "\"/>\n</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
    for (std::size_t i = 1; i <= ticks; ++i) {
        OrbitPoint p{false, i};
        double x = X(p);
        os << "<line x1=\"" << x << "\" y1=\"" << H - m / 2 - 4 << "\" x2=\"" << x << "\" y2=\"" << H - m / 2 + 4
           << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << x << "\" y=\"" << H - m / 2 + 16 << "\" text-anchor=\"middle\">T" << i
           << "(c)";
        if (tp) os << "=" << std::setprecision(5) << tp->orbit(i) << std::setprecision(6);
        os << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace tentweave
