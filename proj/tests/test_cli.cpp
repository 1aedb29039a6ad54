#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "tentweave/symbolic.hpp"

using namespace tentweave;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TENTWEAVE_CLI) + " --indent -1 " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args) {
    Run r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

// Every string containing '*' is an itinerary and must reparse to itself.
std::size_t check_itineraries(const json& j) {
    std::size_t n = 0;
    if (j.is_object() || j.is_array()) {
        for (const json& x : j) n += check_itineraries(x);
    } else if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.find('*') == std::string::npos || s.find(' ') != std::string::npos) return 0;
        INFO(s);
        if (s.find('.') != std::string::npos) CHECK(format(parse_point(s)) == s);
        else CHECK(format(parse_seq(s)) == s);
        ++n;
    }
    return n;
}

// Validates the keywords the published schemas use: type, required,
// properties, items, enum, const, oneOf and local $ref.
bool conforms(const json& v, const json& schema, const json& root) {
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"];
        return conforms(v, root.at(json::json_pointer(ref.substr(1))), root);
    }
    if (schema.contains("oneOf")) {
        int n = 0;
        for (const json& s : schema["oneOf"]) n += conforms(v, s, root);
        if (n != 1) return false;
    }
    if (schema.contains("const") && v != schema["const"]) return false;
    if (schema.contains("enum") && std::find(schema["enum"].begin(), schema["enum"].end(), v) == schema["enum"].end())
        return false;
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                        (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean()) ||
                        (t == "integer" && v.is_number_integer()) || (t == "number" && v.is_number()) ||
                        (t == "null" && v.is_null());
        if (!ok) return false;
    }
    if (v.is_object()) {
        for (const json& k : schema.value("required", json::array()))
            if (!v.contains(k.get<std::string>())) return false;
        const json props = schema.value("properties", json::object());
        for (auto& [k, s] : props.items())
            if (v.contains(k) && !conforms(v[k], s, root)) return false;
    }
    if (v.is_array() && schema.contains("items"))
        for (const json& x : v)
            if (!conforms(x, schema["items"], root)) return false;
    return true;
}

bool conforms(const json& v, const std::string& name) {
    std::ifstream f(std::string(TENTWEAVE_SCHEMA_DIR) + "/" + name + ".schema.json");
    REQUIRE(f);
    const json schema = json::parse(f);
    return conforms(v, schema, schema);
}

}  // namespace

TEST_CASE("outputs conform to the published schemas") {
    CHECK(conforms(run_json("arc --nu '(10010)*' --left '*(001)' --slope 1.65"), "basic_arc"));
    CHECK(conforms(run_json("arc --nu '1001011' --left '*(0)1'"), "basic_arc"));
    CHECK(conforms(run_json("embed --nu '(101)*' --L '*(01)' --depth 5 --slope 1.618"), "embedding_approx"));
    CHECK(conforms(run_json("access --nu '(10010)*' --L '*(001)' --depth 8"), "access_report"));
    CHECK(conforms(run_json("height --q 2/5"), "height_data"));
    CHECK_FALSE(conforms(json{{"q", "1/3"}}, "height_data"));
    CHECK_FALSE(conforms(run_json("height --q 2/5"), "basic_arc"));
}

TEST_CASE("kneading of slope 2") {
    json j = run_json("kneading --slope 2.0 --depth 8");
    CHECK(j["kneading"] == "1(0)*");
    CHECK(j["exact"] == true);
}

TEST_CASE("arc reports tau values") {
    json j = run_json("arc --nu '(10010)*' --left '*(001)'");
    CHECK(j["tauL"] == 2);
    CHECK(j["tauR"] == 5);
    CHECK(j["left"] == "T^2(c)");
    CHECK(check_itineraries(j) == 1);
}

TEST_CASE("embed writes svg and planar json") {
    const std::string svg = "cli_test_out.svg", js = "cli_test_out.json";
    Run r = run("embed --nu '(101)*' --L '*(01)' --depth 6 --svg " + svg + " --out " + js);
    REQUIRE(r.code == 0);
    std::ifstream f(js), g(svg);
    json j = json::parse(f);
    CHECK(j["planar"] == true);
    CHECK(j["arcs"].size() > 0);
    CHECK(j["arcs"][0]["y"].get<std::string>().find_first_not_of("02") == std::string::npos);
    std::string head;
    std::getline(g, head);
    CHECK(head.find("<?xml") == 0);
    CHECK(check_itineraries(j) > 0);
}

TEST_CASE("emitted itineraries reparse") {
    std::size_t n = 0;
    n += check_itineraries(run_json("extrema --nu '(100111011)*' --L '*(001)11' --cylinder 10"));
    n += check_itineraries(run_json("access --nu '(10010)*' --L '*(001)' --depth 8"));
    n += check_itineraries(run_json("access --nu '(10011001001111)*' --L '*(0010011)' --depth 8"));
    n += check_itineraries(run_json("height --q 9/20"));
    n += check_itineraries(run_json("height --nu '(1011010)*'"));
    n += check_itineraries(run_json("embed --nu '1001(101)*' --L '*((001)(001101))' --depth 5"));
    CHECK(n > 50);
}

TEST_CASE("height classification") {
    json j = run_json("height --nu '(10111111110111111110)*' --maxden 30");
    CHECK(j["class"]["kind"] == "interior");
    CHECK(j["class"]["q"] == "9/20");
    CHECK(j["height"]["Y"] == "101111111101");
    CHECK(run("height --nu '(10111111110111111110)*' --maxden 10").code == 1);
}

TEST_CASE("admissibility of words, sequences and points") {
    CHECK(run_json("admissible --nu '(101)*' 0110")["admissible"] == true);
    CHECK(run_json("admissible --nu '(101)*' 101101")["admissible"] == true);
    CHECK(run_json("admissible --nu '(101)*' 00")["admissible"] == false);
    CHECK(run_json("admissible --nu '(101)*' '*(01).(10)*'")["kind"] == "point");
}

TEST_CASE("verify subcommand") {
    json j = run_json("verify --only height,capping");
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 2);
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("nosuch").code == 2);
    CHECK(run("arc --nu '(10010)*'").code == 2);
    CHECK(run("arc --nu '(10010)*' --left '*(0x1)'").code == 2);
    CHECK(run("kneading --slope 1.2").code == 1);
    CHECK(run("height --q 3/4").code == 1);
    CHECK(run("verify --config /nonexistent").code == 2);
}
