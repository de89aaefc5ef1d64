#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>

#include "cpq/calculus.hpp"
#include "cpq/cpn.hpp"
#include "cpq/errors.hpp"
#include "cpq/suites.hpp"

using namespace cpq;

namespace {

// the subset of JSON Schema used by docs/report.schema.json
std::string validate(const nlohmann::json& v, const nlohmann::json& s, const std::string& at = "$") {
    if (s.contains("enum")) {
        for (const auto& e : s["enum"])
            if (e == v) return "";
        return at + ": not in enum";
    }
    const std::string t = s.value("type", "");
    if (t == "object") {
        if (!v.is_object()) return at + ": not an object";
        for (const auto& r : s.value("required", nlohmann::json::array()))
            if (!v.contains(r.get<std::string>())) return at + ": missing " + r.get<std::string>();
        const auto props = s.value("properties", nlohmann::json::object());
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!props.contains(it.key())) {
                if (!s.value("additionalProperties", true)) return at + ": extra key " + it.key();
                continue;
            }
            if (auto e = validate(it.value(), props[it.key()], at + "." + it.key()); !e.empty()) return e;
        }
    } else if (t == "array") {
        if (!v.is_array()) return at + ": not an array";
        for (std::size_t k = 0; k < v.size(); ++k)
            if (auto e = validate(v[k], s["items"], at + "[" + std::to_string(k) + "]"); !e.empty()) return e;
    } else if (t == "string") {
        if (!v.is_string()) return at + ": not a string";
        if (v.get<std::string>().size() < s.value("minLength", 0u)) return at + ": too short";
    } else if (t == "boolean") {
        if (!v.is_boolean()) return at + ": not a boolean";
    } else if (t == "number") {
        if (!v.is_number()) return at + ": not a number";
        if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) return at + ": below minimum";
    }
    return "";
}

}  // namespace

TEST(Suites, NamesAndUnknown) {
    const auto names = suite_names();
    EXPECT_EQ(names.back(), "all");
    EXPECT_THROW(run_suite("nope", {}), UnknownSuite);
    SuiteParams p;
    p.N = 2;
    EXPECT_THROW(run_suite("cross-ratio", p), PreconditionViolated);
}

TEST(Suites, SortedAndDeterministicAcrossJobs) {
    SuiteParams p;
    p.N = 1;
    const Report a = run_suite("integrate", p, 1), b = run_suite("integrate", p, 3);
    ASSERT_EQ(a.entries().size(), b.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        EXPECT_EQ(a.entries()[k].id, b.entries()[k].id);
        EXPECT_EQ(a.entries()[k].status, b.entries()[k].status);
        if (k) EXPECT_LE(a.entries()[k - 1].id, a.entries()[k].id);
    }
    EXPECT_TRUE(a.all_passed()) << a.to_text();
}

TEST(Suites, ReportMatchesSchema) {
    std::ifstream in(CPQ_SCHEMA_PATH);
    ASSERT_TRUE(in.good());
    const auto schema = nlohmann::json::parse(in);
    SuiteParams p;
    p.N = 1;
    const Report r = run_suite("cross-ratio", p);
    const auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(validate(j, schema), "");
    for (const auto& e : r.entries()) EXPECT_FALSE(e.anchor.empty()) << e.id;
    auto bad = j;
    bad["checks"][0]["status"] = "maybe";
    EXPECT_NE(validate(bad, schema), "");
}

TEST(Engine, NormalFormProperties) {
    const ProjectiveAlgebra P = build_projective(2);
    const Report r = check_normal_form_properties(P.forms, 1000, 4);
    EXPECT_TRUE(r.all_passed()) << r.to_text();
}
