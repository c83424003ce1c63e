#include "random_complex.hpp"

#include "qs/cli.hpp"
#include "qs/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace qs;
namespace fx = qs::fixtures;

namespace {

const std::string dir = QS_SOURCE_DIR "/fixtures/";

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate the shipped algebra") {
    const Run r = run({"validate", dir + "d2.alg"});
    CHECK(r.code == 0);
    CHECK(r.out.find("well_formed                  YES") != std::string::npos);
}

TEST_CASE("omega of the shipped T_per") {
    const Run r = run({"--format", "json", "functor", "omega", dir + "tper.cx"});
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["output"]["dim"] == 1);
    CHECK(j["output"]["algebra"] == "D2");
}

TEST_CASE("demo D2-Tper reports a YES round trip") {
    const Run r = run({"demo", "D2-Tper", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = json_of(r);
    bool found = false;
    for (const auto& e : j["entries"])
        if (e["name"] == "verify_round_trip") {
            found = true;
            CHECK(e["verdict"] == "YES");
        }
    CHECK(found);
    CHECK(j["overall"] == "YES");
}

TEST_CASE("reports are stable under re-run") {
    const auto a = json_of(run({"demo", "D2-Tper", "--format", "json", "--seed", "5"}));
    const auto b = json_of(run({"demo", "D2-Tper", "--format", "json", "--seed", "5"}));
    auto strip = [](nlohmann::json j) {
        for (auto& e : j["entries"]) e.erase("ms");
        return j;
    };
    CHECK(strip(a) == strip(b));
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::Usage);
    CHECK(run({"frobnicate"}).code == cli::Usage);
    CHECK(run({"functor", "H", dir + "tper.cx"}).code == cli::Usage);
    CHECK(run({"demo", "nope"}).code == cli::Usage);
    CHECK(run({"validate", dir + "bad-syntax.cx"}).code == cli::DataError);
    CHECK(run({"validate", dir + "bad-dd.cx"}).code == cli::No);
    CHECK(run({"verify-equivalence", dir + "stalk-k.cx"}).code == cli::No);
    CHECK(run({"classify", dir + "x-id.map", "--structure", "ctr"}).code == cli::No);
    CHECK(run({"replace", dir + "k.mod", "--which", "fibrant-co"}).code == cli::Ok);
}

TEST_CASE("parse errors carry line and column") {
    const Run r = run({"validate", dir + "bad-syntax.cx"});
    CHECK(r.err.find("bad-syntax.cx:3:37:") != std::string::npos);

    try {
        io::Loader l;
        const auto d = io::Document::from_text(
            "{\n  \"p\": 2,\n  \"basis\": [\"1\"],\n  \"mul\": [[[1]]],\n  \"unit\": [1],\n"
            "  \"idempotents\": [4],\n  \"radical\": []\n}",
            "mem.alg");
        l.algebra(d, io::json::json_pointer());
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(e.line == 6);
        CHECK(e.column == 19);
        CHECK(e.reason == "index out of range");
    }
}

TEST_CASE("missing fields are located at their parent") {
    io::Loader l;
    const auto d = io::Document::from_text("{\"algebra\": \"D2\",\n \"window\": {\"lo\": 0, \"terms\": [\"k\"]}}", "x.cx");
    try {
        l.complex(d, io::json::json_pointer());
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 12);
        CHECK(e.reason == "missing field 'hi'");
    }
}

TEST_CASE("print then parse is the identity on canonical forms") {
    std::vector<Complex> xs{fx::t_per(), fx::contractible(), stalk(fx::k()), reindex(fx::t_per(), 3)};
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) xs.push_back(gen::random_complex(rng));
    for (const auto& x : xs) {
        const Complex c = x.compacted();
        const auto text = io::pretty(io::to_json(c));
        io::Loader l;
        const auto d = io::Document::from_text(text, "");
        CHECK(l.complex(d, io::json::json_pointer()) == c);
    }

    const ChainMap f = fx::x_times_identity();
    io::Loader l;
    const auto d = io::Document::from_text(io::to_json(f).dump(), "");
    const ChainMap g = l.map(d, io::json::json_pointer());
    for (int n = -4; n <= 4; ++n) CHECK(g.component(n) == f.component(n));

    const auto a = io::Document::from_text(io::to_json(*fx::T2()).dump(), "");
    CHECK(same_algebra(l.algebra(a, io::json::json_pointer()), fx::T2()));
}

TEST_CASE("matrices are reduced mod p on load") {
    io::Loader l;
    const auto d = io::Document::from_text(R"({"algebra": "D2", "dim": 1, "action": [[[3]], [[-2]]]})", "");
    CHECK(l.module(d, io::json::json_pointer(), nullptr) == fx::k());
}

}
