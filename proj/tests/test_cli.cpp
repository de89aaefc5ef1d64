#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <sys/wait.h>

#include "cpq/cpn.hpp"
#include "cpq/parse.hpp"

using namespace cpq;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::string& args) {
    const std::string cmd = std::string(CPQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), f)) out += buf.data();
    const int st = pclose(f);
    return {WEXITSTATUS(st), out};
}

std::string chomp(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

}  // namespace

TEST(Cli, NormalizeRoundTrip) {
    const ProjectiveAlgebra P = build_projective(2);
    for (const std::string src : {"zb[1]*z[1]", "zb[2]*z[1]*rho^-1*dz[2]", "q^-1 * rho^-2 * (rho - q^2*zb[1]*z[1])", "delb[1]*z[2]"}) {
        const CliRun r = cli("normalize --n 2 \"" + src + "\"");
        ASSERT_EQ(r.code, 0) << src;
        const NCPoly got = parse_expr(chomp(r.out), {2, -1});
        const NCPoly in = parse_expr(src, {2, -1});
        const RewriteSystem& S = src.find("del") != std::string::npos  ? P.derivs
                                 : src.find("dz") != std::string::npos ? P.forms
                                                                       : P.functions;
        EXPECT_EQ(got, S.normal_form(in)) << src;
        // the printed normal form is a fixed point
        EXPECT_EQ(chomp(cli("normalize --n 2 \"" + chomp(r.out) + "\"").out), chomp(r.out));
    }
}

TEST(Cli, Integrate) {
    const CliRun r = cli("integrate --n 1 \"z[1]*zb[1]*rho^-2\"");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("q = 1: 1/6"), std::string::npos) << r.out;
    const CliRun s = cli("integrate --n 1 --q 2 --json \"z[1]*zb[1]*rho^-2\"");
    ASSERT_EQ(s.code, 0);
    const auto j = nlohmann::json::parse(s.out);
    // 1/(1+q^2) - 1/(1+q^2+q^4) at q = 2
    EXPECT_EQ(j["value"], "16/105");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("check cross-ratio --n 1").code, 0);
    EXPECT_EQ(cli("check cross-ratio --n 2").code, 2);
    EXPECT_EQ(cli("check nosuch").code, 2);
    EXPECT_EQ(cli("normalize --n 1 \"z[1\"").code, 2);
    EXPECT_EQ(cli("normalize --n 1 \"z[2]\"").code, 2);
    EXPECT_EQ(cli("poisson --n 1 \"z[1]\"").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("crossratio --replay").code, 0);
}

TEST(Cli, CheckJsonAndReplay) {
    const CliRun r = cli("check braiding --n 1 --json --jobs 2");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_GT(j["checks"].size(), 0u);
    const auto c = nlohmann::json::parse(cli("crossratio --replay --json --coaction diagonal").out);
    EXPECT_TRUE(c["verified"].get<bool>());
    EXPECT_EQ(c["steps"].size(), 10u);
}

TEST(Cli, DumpRmatrix) {
    const CliRun r = cli("dump-rmatrix --n 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("R^{01}_{10} = 1"), std::string::npos) << r.out;
}
