#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "tentweave/accessibility.hpp"
#include "tentweave/height.hpp"
#include "tentweave/verify.hpp"

using namespace tentweave;
using nlohmann::json;

namespace {

std::string orbit_str(const OrbitPoint& p) { return p.zero ? "0" : "T^" + std::to_string(p.n) + "(c)"; }

json tau_json(const Tau& t) {
    if (t.is_finite()) return t.n;
    if (t.is_infinite()) return "inf";
    if (t.kind == Tau::Kind::Undefined) return nullptr;
    return json{{"at_least", t.n}, {"depth", t.depth}};
}

json arc_json(const BasicArc& a) {
    json j{{"itinerary", format(a.itinerary)},
           {"tauL", tau_json(a.tau_l)},
           {"tauR", tau_json(a.tau_r)},
           {"left", orbit_str(a.left)},
           {"right", orbit_str(a.right)},
           {"degenerate", a.degenerate},
           {"provisional", a.provisional}};
    if (a.numeric) j["numeric"] = {a.numeric->lo, a.numeric->hi};
    return j;
}

json spec_json(const EmbeddingSpec& s) {
    json j{{"nu", s.nu.str()}, {"L", format(s.L)}};
    if (s.slope) j["slope"] = *s.slope;
    return j;
}

json extremum_json(const CylinderExtremum& e) {
    json j{{"seq", format(e.seq)}, {"provisional", e.provisional}};
    if (e.provisional) j["depth"] = e.depth;
    return j;
}

json embedding_json(const EmbeddingApprox& e, const PlanarityResult& p) {
    json arcs = json::array(), joins = json::array();
    for (const PlanarArc& a : e.arcs) {
        json x{{"cyl", a.cylinder}, {"rep", format(a.rep)}, {"y", a.y}, {"x", {orbit_str(a.x_left), orbit_str(a.x_right)}}};
        if (a.x_numeric) x["x_numeric"] = {a.x_numeric->lo, a.x_numeric->hi};
        arcs.push_back(x);
    }
    for (const Join& j : e.joins) joins.push_back({{"i", j.i}, {"j", j.j}, {"side", to_string(j.side)}});
    return {{"spec", spec_json(e.spec)}, {"depth", e.depth}, {"arcs", arcs},
            {"joins", joins},           {"planar", p.planar}, {"violations", p.violations}};
}

json verdict_json(const FoldingVerdict& v) {
    json j{{"type", to_string(v.type)}, {"order_reversing", v.order_reversing}, {"depth", v.depth}, {"notes", v.notes}};
    if (v.cylinder) j["cylinder"] = *v.cylinder;
    if (v.accessible_half) j["accessible_half"] = format(*v.accessible_half);
    return j;
}

json cap_json(const CapVerdict& v) {
    json pairs = json::array();
    for (const CapPair& p : v.pairs)
        pairs.push_back({{"y", format(p.y)}, {"w", format(p.w)}, {"side", to_string(p.side)}, {"m", p.m}});
    return {{"value", to_string(v.value)}, {"depth", v.depth}, {"pairs", pairs}, {"reason", v.reason}};
}

json access_json(const AccessReport& r) {
    json tails = json::array(), folding = json::array(), capped = json::array();
    for (const EPSeq& t : r.tails) tails.push_back(format(t));
    for (auto& [fp, v] : r.folding)
        folding.push_back({{"point", format(fp.itinerary)}, {"endpoint", fp.is_endpoint}, {"verdict", verdict_json(v)}});
    for (auto& [fp, v] : r.capped) capped.push_back({{"point", format(fp.itinerary)}, {"verdict", cap_json(v)}});
    return {{"spec", spec_json(r.spec)}, {"depth", r.depth},   {"tails", tails},
            {"folding", folding},        {"capped", capped},   {"notes", r.notes}};
}

json height_json(const HeightData& h) {
    PalindromeSplit s = palindrome_split(h);
    return {{"q", h.q.str()}, {"kappas", h.kappas}, {"c_q", h.c_q},     {"w_q", h.w_q},
            {"hat_w_q", h.hat_w_q}, {"lhe", format(h.lhe)}, {"rhe", format(h.rhe)}, {"Y", s.Y}, {"Z", s.Z}};
}

json class_json(const HeightClass& c) {
    static const char* kinds[] = {"irrational", "interior", "endpoint"};
    json j{{"kind", kinds[int(c.kind)]}, {"description", c.str()}};
    if (c.kind == HeightClass::Kind::Irrational) j["depth"] = c.depth;
    else j["q"] = c.q.str();
    if (c.kind == HeightClass::Kind::Endpoint) j["side"] = c.lhe_side ? "lhe" : "rhe";
    return j;
}

json report_json(const VerifyReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"criterion", c.criterion},
                          {"pass", c.pass},
                          {"detail", c.detail},
                          {"counterexamples", c.counterexamples},
                          {"seconds", c.seconds}});
    return {{"pass", r.pass()}, {"checks", checks}};
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) fail("ParseError", "expected m/n, got '" + s + "'");
    try {
        return Rational::of(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        fail("ParseError", "expected m/n, got '" + s + "'");
    }
}

std::size_t default_depth(std::size_t fallback) {
    VerifyConfig cfg;
    cfg.depth = fallback;
    apply_env(cfg);
    return cfg.depth;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic dynamics of tent-map inverse limits and their planar embeddings"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    int indent = 2;
    app.add_option("--out", out_path, "Write JSON here instead of stdout");
    app.add_option("--indent", indent, "JSON indentation, -1 for one line");

    std::string nu_text, L_text, seq_text, cyl, svg_path, q_text, config_path;
    std::optional<double> slope;
    std::size_t depth = 0;
    int maxden = 64;
    double slope_value = 2.0;

    auto* kn = app.add_subcommand("kneading", "Kneading sequence of a slope");
    kn->add_option("--slope", slope_value, "Slope in (sqrt2, 2]")->required();
    kn->add_option("--depth", depth, "Symbols to compute")->default_val(40);

    auto* ad = app.add_subcommand("admissible", "Admissibility of a word, sequence or point");
    ad->add_option("--nu", nu_text, "Kneading sequence")->required();
    ad->add_option("itinerary", seq_text, "Word, eventually periodic sequence or LEFT.RIGHT point")->required();

    auto* ar = app.add_subcommand("arc", "Basic arc of a left-infinite sequence");
    ar->add_option("--nu", nu_text, "Kneading sequence")->required();
    ar->add_option("--left", seq_text, "Left-infinite itinerary")->required();
    ar->add_option("--slope", slope, "Slope for the numeric projection");

    auto* ex = app.add_subcommand("extrema", "Top and bottom of a cylinder under <_L");
    ex->add_option("--nu", nu_text, "Kneading sequence")->required();
    ex->add_option("--L", L_text, "Embedding itinerary")->required();
    ex->add_option("--cylinder", cyl, "Cylinder word b_n...b_1")->default_val("");
    ex->add_option("--depth", depth, "Greedy search depth")->default_val(64);

    auto* em = app.add_subcommand("embed", "Depth approximation of the planar embedding");
    em->add_option("--nu", nu_text, "Kneading sequence")->required();
    em->add_option("--L", L_text, "Embedding itinerary")->required();
    em->add_option("--depth", depth, "Cylinder depth");
    em->add_option("--slope", slope, "Slope for numeric abscissae");
    em->add_option("--svg", svg_path, "Also write an SVG drawing");

    auto* ac = app.add_subcommand("access", "Accessibility report");
    ac->add_option("--nu", nu_text, "Kneading sequence")->required();
    ac->add_option("--L", L_text, "Embedding itinerary")->required();
    ac->add_option("--depth", depth, "Cylinder depth");

    auto* he = app.add_subcommand("height", "Height data of a rational or classification of a kneading sequence");
    auto* he_q = he->add_option("--q", q_text, "Rational m/n in (0, 1/2)");
    he->add_option("--nu", nu_text, "Kneading sequence to classify")->excludes(he_q);
    he->add_option("--maxden", maxden, "Largest denominator tried")->check(CLI::PositiveNumber);

    auto* ve = app.add_subcommand("verify", "Run the acceptance checks and property suites");
    ve->add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);
    std::vector<std::string> only;
    ve->add_option("--only", only, "Run only these checks")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    json result;
    int code = 0;
    try {
        if (*kn) {
            Kneading k = kneading_from_slope(slope_value, depth);
            result = {{"kneading", k.str()}, {"exact", k.exact()}, {"slope", slope_value}};
        } else if (*ad) {
            Kneading nu = Kneading::parse(nu_text);
            bool ok;
            std::string kind;
            if (seq_text.find('.') != std::string::npos) {
                ok = is_admissible_point(parse_point(seq_text), nu), kind = "point";
            } else if (seq_text.find_first_of("*()") != std::string::npos) {
                ok = is_admissible_seq(parse_seq(seq_text), nu), kind = "sequence";
            } else {
                ok = is_admissible_word(parse_word(seq_text), nu), kind = "word";
            }
            result = {{"nu", nu.str()}, {"itinerary", seq_text}, {"kind", kind}, {"admissible", ok}};
        } else if (*ar) {
            result = arc_json(projection(parse_seq(seq_text), Kneading::parse(nu_text), slope));
        } else if (*ex) {
            EmbeddingSpec s{Kneading::parse(nu_text), parse_seq(L_text), std::nullopt};
            result = {{"spec", spec_json(s)},
                      {"cylinder", cyl},
                      {"top", extremum_json(cylinder_top(cyl, s, depth))},
                      {"bottom", extremum_json(cylinder_bottom(cyl, s, depth))}};
        } else if (*em) {
            EmbeddingSpec s{Kneading::parse(nu_text), parse_seq(L_text), slope};
            EmbeddingApprox e = build_embedding(s, depth ? depth : default_depth(6));
            PlanarityResult p = check_planarity(e);
            if (!svg_path.empty()) {
                std::ofstream f(svg_path);
                if (!f) fail("IOError", "cannot write " + svg_path);
                f << render_svg(e);
            }
            result = embedding_json(e, p);
            if (!p.planar) code = 1;
        } else if (*ac) {
            EmbeddingSpec s{Kneading::parse(nu_text), parse_seq(L_text), std::nullopt};
            result = access_json(access_report(s, depth ? depth : default_depth(12)));
        } else if (*he) {
            if (!q_text.empty()) {
                result = height_json(build_height(parse_rational(q_text)));
            } else if (!nu_text.empty()) {
                Kneading nu = Kneading::parse(nu_text);
                HeightClass c = classify_kneading(nu, maxden);
                result = {{"nu", nu.str()}, {"class", class_json(c)}};
                if (c.kind != HeightClass::Kind::Irrational) result["height"] = height_json(build_height(c.q));
            } else {
                std::cerr << "height: one of --q or --nu is required\n";
                return 2;
            }
        } else if (*ve) {
            VerifyConfig cfg = config_path.empty() ? VerifyConfig{} : load_config(config_path);
            apply_env(cfg);
            if (!only.empty()) cfg.only = only;
            VerifyReport r = run_verification(cfg);
            result = report_json(r);
            if (!r.pass()) code = 1;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == "ParseError" ? 2 : 1;
    }

    const std::string text = result.dump(indent);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        f << text << "\n";
    }
    return code;
}
