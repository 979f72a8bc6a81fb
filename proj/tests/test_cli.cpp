#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mpc/cli.hpp"

using namespace mpc;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<const char*> args) {
    args.insert(args.begin(), "mpc");
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

struct SpecFile {
    std::filesystem::path path;
    explicit SpecFile(const char* text) {
        path = std::filesystem::temp_directory_path() / "cli_test.spec";
        std::ofstream f(path);
        f << text;
    }
    ~SpecFile() { std::remove(path.string().c_str()); }
    const char* c_str() { return (s_ = path.string()).c_str(); }
    std::string s_;
};

const char* kF8 =
    "field p=2 m=3\n"
    "constituent rs k=3 v=1\n"
    "constituent rs k=1\n"
    "matrix rows=2 cols=2\n"
    "row 1, 1\n"
    "row 0, 1\n";

} // namespace

TEST_CASE("gs-params subcommand prints the parameter tuple") {
    auto r = run({"gs-params", "15", "10", "4"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "r=6 l=47 tau=3 list_cap=5"));
}

TEST_CASE("analysis subcommands") {
    auto p = run({"analyze", "good-set-prob", "15", "2", "2", "7", "3"});
    CHECK(p.code == 0);
    CHECK(has(p.out, "probability=1/2"));
    auto px = run({"analyze", "good-set-prob-exact", "15", "2", "2", "7", "3", "7"});
    CHECK(px.code == 0);
    CHECK(has(px.out, "probability=1/2"));
    auto sp = run({"analyze", "success-prob", "0.1", "0.2"});
    CHECK(sp.code == 0);
    CHECK(has(sp.out, "probability=0.72"));
    auto sb = run({"analyze", "survival-bound", "2", "0.3"});
    CHECK(sb.code == 0);
    CHECK(has(sb.out, "bound=0.6"));
    auto cx = run({"analyze", "complexity", "2", "--caps", "5,9", "--costs", "1,1"});
    CHECK(cx.code == 0);
    CHECK(has(cx.out, "operations=20"));
    auto pt = run({"analyze", "p-tau", "--p", "2", "--deg", "3", "--k", "3", "--v", "1",
                   "--trials", "20", "--seed", "3"});
    CHECK(pt.code == 0);
    CHECK(has(pt.out, "tau=2"));
    CHECK(has(pt.out, "trials=20"));
}

TEST_CASE("encode then decode round trip through spec files") {
    SpecFile spec(kF8);
    auto enc = run({"encode", spec.c_str(), "--message", "a,1,0,a^2"});
    CHECK(enc.code == 0);
    CHECK(has(enc.out, "code: n=14 k=4 d=7"));
    REQUIRE(has(enc.out, "word: "));
    std::string word = enc.out.substr(enc.out.find("word: ") + 6);
    word = word.substr(0, word.find('\n'));

    auto dec = run({"decode", spec.c_str(), "--received", word.c_str()});
    CHECK(dec.code == 0);
    CHECK(has(dec.out, "tau=3"));
    CHECK(has(dec.out, "distance=0"));
    CHECK(has(dec.out, "codeword: " + word));

    // replace the first symbol with a different one
    std::string first = word.substr(0, word.find(','));
    std::string corrupted = (first == "0" ? "1" : "0") + word.substr(word.find(','));
    auto dec2 = run({"decode", spec.c_str(), "--received", corrupted.c_str(), "--trace"});
    CHECK(dec2.code == 0);
    CHECK(has(dec2.out, "distance=1"));
    CHECK(has(dec2.out, "tuple=(1,2)"));
    CHECK(has(dec2.out, "tuple=(2,1)"));
    CHECK(has(dec2.out, "step=1"));

    auto none = run({"decode", spec.c_str(), "--received", word.c_str(), "--tau", "0"});
    CHECK(none.code == 0);
    CHECK(has(none.out, "codeword: " + word));
}

TEST_CASE("simulate reports full membership at half distance") {
    SpecFile spec(kF8);
    auto r = run({"simulate", spec.c_str(), "--weight", "3", "--trials", "5", "--seed", "2",
                  "--unique"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "membership=5"));
    CHECK(has(r.out, "unique=5"));
    CHECK(has(r.out, "membership_fraction=1.000000"));
}

TEST_CASE("parse failures exit with code 2") {
    auto nosub = run({});
    CHECK(nosub.code == 2);
    auto badfile = run({"encode", "/nonexistent/path.spec", "--message", "1"});
    CHECK(badfile.code == 2);
    CHECK(has(badfile.err, "parse error"));
    SpecFile spec(kF8);
    auto badtok = run({"encode", spec.c_str(), "--message", "a,1,0,z"});
    CHECK(badtok.code == 2);
    auto badlen = run({"encode", spec.c_str(), "--message", "a,1"});
    CHECK(badlen.code == 2);
}

TEST_CASE("invariant violations exit with code 3") {
    SpecFile spec(
        "field p=2 m=3\n"
        "constituent rs k=9\n"
        "matrix rows=1 cols=2\n"
        "row 1, 1\n");
    auto r = run({"encode", spec.c_str(), "--message", "1"});
    CHECK(r.code == 3);
    CHECK(has(r.err, "invariant violation"));
}

TEST_CASE("examples command replays the fixed checks") {
    auto r = run({"examples"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "ALL PASS"));
}

TEST_CASE("help exits cleanly") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "encode"));
    CHECK(has(r.out, "decode"));
}
