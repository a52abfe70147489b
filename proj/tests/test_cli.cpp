#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

#include "truncat/catobjects.hpp"

using namespace truncat;

namespace {

std::string binPath() {
    const char* p = std::getenv("TRUNCAT_BIN");
    REQUIRE_MESSAGE(p != nullptr, "TRUNCAT_BIN not set");
    return p;
}

struct RunResult {
    int exitCode;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = binPath() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("byte determinism of identical invocations") {
    auto a = run("tilt --algebra A1 --J 0:1 --anchor 2,1 --json");
    auto b = run("tilt --algebra A1 --J 0:1 --anchor 2,1 --json");
    CHECK(a.exitCode == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("structured char output round-trips") {
    auto r = run("char --algebra A1 --object delta --weight 2 --grade 0 --J 0:1 --json");
    REQUIRE(r.exitCode == 0);
    auto doc = nlohmann::json::parse(r.out);
    GradedCharacter parsed = charFromJson(doc.at("results").at(0).dump());

    const RootSystem& a1 = RootSystem::get(AlgebraType::A1);
    TruncationSpec g;
    g.a = 0;
    g.b = 1;
    auto direct = gradedCharacterOf(
        buildObject(a1, FamilyTag{Family::Delta, Weight(std::vector<int>{2}), 0, g}).mod);
    CHECK(parsed.terms == direct.terms);
    CHECK(parsed.window == direct.window);
}

TEST_CASE("human and structured modes carry the same content") {
    auto table = run("char --algebra A1 --object delta --weight 2 --grade 0 --J 0:0");
    CHECK(table.exitCode == 0);
    CHECK(table.out.find("total dim 3") != std::string::npos);
    auto js = run("char --algebra A1 --object delta --weight 2 --grade 0 --J 0:0 --json");
    auto doc = nlohmann::json::parse(js.out);
    long total = 0;
    for (const auto& t : doc.at("results").at(0).at("terms")) total += t.at("mult").get<long>();
    CHECK(total == 3);
}

TEST_CASE("spec'd invocations") {
    auto tilt = run("tilt --algebra A1 --J 0:1 --anchor 2,1");
    CHECK(tilt.exitCode == 0);
    CHECK(tilt.out.find("T[1]_{2w1} = 1") != std::string::npos);

    auto ord = run("order --kind covering --from 0,0 --to 2,1 --algebra A1");
    CHECK(ord.exitCode == 0);
    CHECK(ord.out == "true\n");

    auto sset = run("sset --algebra A1 --anchor 2,0 --J -inf:0 --count 8");
    CHECK(sset.exitCode == 0);
    CHECK(sset.out.find("(2w1,-1)") != std::string::npos);

    auto ext = run("ext --algebra A1 --from 2,0 --to 0,1 --J 0:1");
    CHECK(ext.exitCode == 0);
    CHECK(ext.out.find("dim Ext1 = 1") != std::string::npos);
}

TEST_CASE("exit codes: usage and domain errors") {
    CHECK(run("no-such-command").exitCode == 2);
    CHECK(run("order --kind covering --from 00 --algebra A1").exitCode == 2); // missing --to
    // domain error: costandard object over an interval unbounded below
    CHECK(run("char --algebra A1 --object nabla --weight 2 --grade 0 --J -inf:0").exitCode == 1);
    CHECK(run("char --algebra B9 --object delta --weight 2 --grade 0 --J 0:0").exitCode == 1);
}

TEST_CASE("module serialization round-trips through the CLI") {
    auto r = run("object --algebra A1 --object gweyl --weight 1 --grade 0 --J 0:1 --json");
    REQUIRE(r.exitCode == 0);
    auto doc = nlohmann::json::parse(r.out);
    const RootSystem& a1 = RootSystem::get(AlgebraType::A1);
    ExplicitModule parsed = moduleFromJson(a1, doc.at("results").at(0).dump());
    TruncationSpec g;
    g.a = 0;
    g.b = 1;
    auto direct =
        buildObject(a1, FamilyTag{Family::GlobalWeyl, Weight(std::vector<int>{1}), 0, g}).mod;
    CHECK(parsed.basis == direct.basis);
    CHECK(parsed.act0 == direct.act0);
    CHECK(parsed.act1 == direct.act1);
    std::string why;
    CHECK_MESSAGE(bracketSoundness(parsed, &why), why);
}
