#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ALBERTCLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), n);
    int status = pclose(pipe);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

Json parse_json(const RunResult& r) {
    return Json::parse(r.out);
}

// Minimal JSON Schema checker covering the subset the shipped schema uses:
// type (string or list of strings), enum, required, properties, items.
bool type_matches(const Json& value, const std::string& t) {
    if (t == "object")
        return value.is_object();
    if (t == "array")
        return value.is_array();
    if (t == "string")
        return value.is_string();
    if (t == "integer")
        return value.is_number_integer() || value.is_number_unsigned();
    if (t == "number")
        return value.is_number();
    if (t == "boolean")
        return value.is_boolean();
    return false;
}

bool validates(const Json& value, const Json& schema) {
    if (schema.contains("enum")) {
        bool any = false;
        for (const Json& option : schema["enum"])
            any = any || option == value;
        if (!any)
            return false;
    }
    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else {
            for (const Json& alt : t)
                ok = ok || type_matches(value, alt.get<std::string>());
        }
        if (!ok)
            return false;
    }
    if (schema.contains("required")) {
        for (const Json& name : schema["required"])
            if (!value.contains(name.get<std::string>()))
                return false;
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [name, sub] : schema["properties"].items())
            if (value.contains(name) && !validates(value.at(name), sub))
                return false;
    }
    if (schema.contains("items") && value.is_array()) {
        for (const Json& item : value)
            if (!validates(item, schema["items"]))
                return false;
    }
    return true;
}

const Json& full_schema() {
    static const Json schema = [] {
        std::ifstream in(ALBERT_SCHEMA_PATH);
        REQUIRE(in.good());
        return Json::parse(in);
    }();
    return schema;
}

void require_schema(const Json& value, const std::string& definition) {
    INFO("schema definition: " << definition);
    REQUIRE(full_schema()["definitions"].contains(definition));
    CHECK(validates(value, full_schema()["definitions"][definition]));
}

} // namespace

TEST_CASE("classify over R matches the documented example") {
    RunResult r = run_cli("classify --field R --torus 1,1,1,1");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r);
    require_schema(j, "classify");
    CHECK(j["field"] == "R");
    CHECK(j["kind"] == "TypeI");
    CHECK(j["class_label"] == "TypeI(division, gamma=(1,1,1))");
    CHECK(j["pfister"] == Json::array({"1", "1"}));
    CHECK(j["gamma"] == Json::array({"1", "1", "1"}));
    CHECK(j["fixed_dim"] == 15);
}

TEST_CASE("classify emits one TSV row on request") {
    RunResult r = run_cli("classify --field Fp:7 --torus 3,1,1,2 --format tsv");
    REQUIRE(r.exit_code == 0);
    std::size_t tabs = 0;
    for (char c : r.out)
        if (c == '\t')
            ++tabs;
    CHECK(tabs == 8);
    CHECK(r.out.find("TypeI(split)") != std::string::npos);
    CHECK(r.out.find("15\n") != std::string::npos);
}

TEST_CASE("kac --order 2 lists both involution types") {
    RunResult r = run_cli("kac --order 2");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r);
    require_schema(j, "kac");
    REQUIRE(j.size() == 2);
    CHECK(j[0]["rho"] == Json::array({0, 1, 0, 0, 0}));
    CHECK(j[0]["type"] == "A1xC3");
    CHECK(j[0]["dimension"] == 24);
    CHECK(j[1]["rho"] == Json::array({0, 0, 0, 0, 1}));
    CHECK(j[1]["type"] == "B4");
    CHECK(j[1]["dimension"] == 36);
}

TEST_CASE("exhaustive census over F5 finds a single split class") {
    RunResult r = run_cli("census --field Fp:5 --exhaustive");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r);
    require_schema(j, "census");
    CHECK(j["field"] == "Fp:5");
    CHECK(j["total"] == 256);
    CHECK(j["all_fixed_dim_15"] == true);
    REQUIRE(j["histogram"].size() == 1);
    CHECK(j["histogram"][0]["label"] == "TypeI(split)");
    CHECK(j["histogram"][0]["count"] == 256);
}

TEST_CASE("census output is byte-identical across runs and job counts") {
    RunResult a = run_cli("census --field Fp:11 --samples 120 --seed 77 --jobs 1");
    RunResult b = run_cli("census --field Fp:11 --samples 120 --seed 77 --jobs 1");
    RunResult c = run_cli("census --field Fp:11 --samples 120 --seed 77 --jobs 3");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    RunResult t1 = run_cli("census --field Fp:11 --samples 40 --seed 5 --jobs 1 --format tsv");
    RunResult t2 = run_cli("census --field Fp:11 --samples 40 --seed 5 --jobs 4 --format tsv");
    REQUIRE(t1.exit_code == 0);
    CHECK(t1.out == t2.out);
    std::size_t lines = 0;
    for (char ch : t1.out)
        if (ch == '\n')
            ++lines;
    CHECK(lines == 40);
}

TEST_CASE("verify-algebra passes and is deterministic per seed") {
    RunResult a = run_cli("verify-algebra --field Fp:7 --samples 15 --seed 3");
    REQUIRE(a.exit_code == 0);
    Json j = parse_json(a);
    require_schema(j, "verify-algebra");
    CHECK(j["pass"] == true);
    for (const Json& check : j["checks"])
        CHECK(check["pass"] == true);

    RunResult b = run_cli("verify-algebra --field Fp:7 --samples 15 --seed 3");
    CHECK(a.out == b.out);

    RunResult q = run_cli("verify-algebra --field Q --samples 5 --seed 1");
    CHECK(q.exit_code == 0);
    CHECK(parse_json(q)["pass"] == true);
}

TEST_CASE("check-aut accepts torus maps and rejects det != 1 with a witness") {
    RunResult good = run_cli("check-aut --field Q --torus 2,3,5,7");
    REQUIRE(good.exit_code == 0);
    Json jg = parse_json(good);
    require_schema(jg, "check-aut");
    CHECK(jg["pass"] == true);

    RunResult inv = run_cli("check-aut --field Fp:7 --torus 1,1,2,3 --with-theta");
    REQUIRE(inv.exit_code == 0);
    Json ji = parse_json(inv);
    require_schema(ji, "check-aut");
    CHECK(ji["fixed_dim"] == 15);

    RunResult bad = run_cli("check-aut --field Fp:7 --uv \"2,0,0,0,1,0,0,0,1;1,0,0,0,1,0,0,0,1\"");
    REQUIRE(bad.exit_code == 1);
    Json jb = parse_json(bad);
    require_schema(jb, "check-aut");
    CHECK(jb["pass"] == false);
    CHECK(jb.contains("reason"));
    REQUIRE(jb.contains("witness"));
    CHECK(jb["witness"].size() == 27);
}

TEST_CASE("representatives lists the known classes and refuses the rationals") {
    RunResult r = run_cli("representatives --field R");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r);
    require_schema(j, "representatives");
    REQUIRE(j.size() == 3);
    std::set<std::string> labels;
    for (const Json& entry : j)
        labels.insert(entry["class_label"].get<std::string>());
    CHECK(labels.size() == 3);
    CHECK(labels.count("TypeI(split)") == 1);

    RunResult q = run_cli("representatives --field Q");
    CHECK(q.exit_code == 2);
    CHECK(q.out.empty());
}

TEST_CASE("report summarizes a field") {
    RunResult r = run_cli("report --field R");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r);
    require_schema(j, "report");
    CHECK(j["type1_classes"] == 3);
    CHECK(j["type2_classes"] == 1);
    CHECK(j["type2_fixed_dim"] == 11);
    CHECK(j["representatives"].size() == 3);

    RunResult q = run_cli("report --field Q");
    REQUIRE(q.exit_code == 0);
    Json jq = parse_json(q);
    require_schema(jq, "report");
    CHECK(jq["type1_classes"] == "infinite");
    CHECK(jq["rational_family_sample"].size() == 4);
}

TEST_CASE("report over the algebraically closed model cross-checks kac dimensions") {
    RunResult r = run_cli("report --field C");
    REQUIRE(r.exit_code == 0);
    Json j = parse_json(r);
    require_schema(j, "report");
    REQUIRE(j.contains("kac"));
    CHECK(j["kac"]["consistent"] == true);
    REQUIRE(j["kac"]["entries"].size() == 2);
    CHECK(j["kac"]["entries"][0]["kac_dimension"] ==
          j["kac"]["entries"][0]["involution_dimension"]);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("classify --field R").exit_code == 2);              // missing --torus
    CHECK(run_cli("classify --field Zq:4 --torus 1,1,1,1").exit_code == 2);
    CHECK(run_cli("classify --field Fp:7 --torus 1,1,0,1").exit_code == 2); // non-unit
    CHECK(run_cli("census --field Q --exhaustive").exit_code == 2);
    CHECK(run_cli("census --field Fp:17 --exhaustive").exit_code == 2); // too large
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("classify --field R --torus 1,1,1,1 --format yaml").exit_code == 2);
    CHECK(run_cli("kac --order 0").exit_code == 2);
}
