#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kakeya/cli.hpp"
#include "kakeya/jsonio.hpp"
#include "kakeya/manifest.hpp"

using namespace kakeya;

namespace {

struct RunResult {
    int rc;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = dispatch(args, out, err);
    return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spec dispatch examples") {
    RunResult pass = run({"kakeya", "verify", "--example", "cusp-cone", "--d", "3", "--q", "7",
                          "--mode", "certificate", "--json"});
    CHECK(pass.rc == 0);
    json j = json::parse(pass.out);
    CHECK(j["ok"] == true);
    CHECK(j["result"]["status"] == "pass");

    RunResult dim = run({"dirsets", "incidence-dim", "--N", "3", "--d", "2", "--q", "101"});
    CHECK(dim.rc == 0);
    CHECK(dim.out == "7\n");

    RunResult bad = run({"kakeya", "verify", "--example", "cusp-cone", "--d", "3", "--q", "4",
                         "--mode", "blind"});
    CHECK(bad.rc == 2);
    CHECK(bad.err.find("modulus must be an odd prime") != std::string::npos);
}

TEST_CASE("exit code 1 marks mathematically meaningful failures only") {
    // A hypersurface complement genuinely fails the Kakeya property.
    RunResult fail = run({"kakeya", "opencomp", "--gens", "x1", "--n", "3", "--q", "5", "--json"});
    CHECK(fail.rc == 1);
    json j = json::parse(fail.out);
    CHECK(j["ok"] == false);
    CHECK(j["result"]["failure_kind"] == "no_witness");

    // Usage problems are 2.
    CHECK(run({"kakeya", "verify", "--example", "no-such", "--q", "7"}).rc == 2);
    CHECK(run({"nonsense"}).rc == 2);
    CHECK(run({"poly", "parse", "--expr", "2x"}).rc == 2);
    CHECK(run({"kakeya", "verify", "--set", "/no/such/file.json", "--q", "7"}).rc == 2);

    // Budget refusal is a usage-style refusal, not a math verdict.
    RunResult budget = run({"kakeya", "verify", "--example", "cusp-cone", "--q", "7", "--budget",
                            "10"});
    CHECK(budget.rc == 2);
    CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("every --json output is one valid document with the envelope") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"poly", "parse", "--expr", "y^2*z - x^3", "--field", "q7", "--json"},
             {"poly", "eval", "--expr", "x^2 + y", "--point", "2,3", "--field", "q7", "--json"},
             {"localgeom", "mult", "--g", "y^2*z - x^3", "--point", "0,0,0", "--field", "q7",
              "--json"},
             {"localgeom", "imult", "--g", "y^2*z - x^3", "--base", "0,0,0", "--dir", "1,1,1",
              "--field", "q7", "--json"},
             {"localgeom", "diagnose", "--g", "y^2*z - x^3", "--q", "7", "--json"},
             {"kakeya", "verify", "--example", "quadric-cone", "--q", "5", "--json"},
             {"kakeya", "opencomp", "--gens", "x1;x2", "--n", "3", "--q", "5", "--json"},
             {"dirsets", "delta", "--f", "y^2*z - x^3", "--q", "7", "--json"},
             {"dirsets", "small-t", "--N", "4", "--d", "2", "--q", "5", "--json"},
             {"cover", "verify", "--example", "g14", "--mode", "symbolic", "--json"},
             {"cover", "census", "--n", "2", "--q", "7", "--json"}}) {
        RunResult r = run(args);
        INFO("command: ", args[0], " ", args[1]);
        CHECK(r.rc == 0);
        json j = json::parse(r.out);  // throws on malformed output
        CHECK(j.contains("command"));
        CHECK(j.contains("ok"));
        CHECK(j.contains("result"));
        CHECK(j["tool"] == "kakeyatk");
        CHECK(j["version"] == "0.1.0");
    }
}

TEST_CASE("localgeom mult/imult values") {
    CHECK(run({"localgeom", "mult", "--g", "y^2*z - x^3", "--point", "0,0,0", "--field", "q7"})
              .out == "3\n");
    CHECK(run({"localgeom", "mult", "--g", "y^2*z - x^3", "--point", "0,0,1", "--field", "Q"})
              .out == "2\n");
    CHECK(run({"localgeom", "imult", "--g", "y^2*z - x^3", "--base", "0,0,0", "--dir", "1,1,1",
               "--field", "q7"})
              .out == "INFINITE\n");
}

TEST_CASE("set files round-trip through build and verify") {
    std::string path = "/tmp/kakeyatk_test_set.json";
    RunResult build = run({"kakeya", "build", "--example", "cusp-cone", "--d", "3", "--out", path});
    CHECK(build.rc == 0);

    json doc = json::parse(std::ifstream(path));
    CHECK(doc["open"] == "-x^3 + y^2*z");
    CHECK(doc["certificate"]["cases"].size() == 3);

    RunResult verify =
        run({"kakeya", "verify", "--set", path, "--q", "13", "--mode", "certificate", "--json"});
    CHECK(verify.rc == 0);
    CHECK(json::parse(verify.out)["result"]["status"] == "pass");

    // Round-trip: loading and re-saving is a fixed point.
    auto [E, cert] = set_from_json(doc);
    CHECK(set_to_json(E, cert ? &*cert : nullptr) == doc);
    std::remove(path.c_str());
}

TEST_CASE("cover files round-trip") {
    std::string path = "/tmp/kakeyatk_test_cover.json";
    CHECK(run({"cover", "build", "--example", "g14", "--out", path}).rc == 0);
    json doc = json::parse(std::ifstream(path));
    CoverSpec spec = cover_spec_from_json(doc);
    CHECK(cover_spec_to_json(spec) == doc);

    RunResult verify = run({"cover", "verify", "--spec", path, "--mode", "exhaustive", "--q", "11",
                            "--json"});
    CHECK(verify.rc == 0);
    CHECK(json::parse(verify.out)["result"]["directions_checked"] == 110);
    std::remove(path.c_str());
}

TEST_CASE("thread count never changes the JSON bytes") {
    for (auto base : std::vector<std::vector<std::string>>{
             {"kakeya", "verify", "--example", "cusp-cone", "--d", "4", "--q", "11", "--mode",
              "blind", "--json"},
             {"kakeya", "verify", "--example", "double-cone", "--n", "3", "--d", "2", "--q", "7",
              "--mode", "certificate", "--json"},
             {"kakeya", "opencomp", "--gens", "x1;x2", "--n", "3", "--q", "7", "--json"}}) {
        auto with_threads = [&](const char* t) {
            auto args = base;
            args.push_back("--threads");
            args.push_back(t);
            return run(args);
        };
        RunResult a = with_threads("1");
        RunResult b = with_threads("8");
        CHECK(a.rc == b.rc);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("manifest records the digest of the emitted document") {
    std::string path = "/tmp/kakeyatk_manifest_probe.json";
    RunResult r = run({"kakeya", "verify", "--example", "quadric-cone", "--q", "5", "--json",
                       "--out", path, "--manifest"});
    CHECK(r.rc == 0);
    std::ifstream doc_in(path, std::ios::binary);
    std::stringstream doc;
    doc << doc_in.rdbuf();
    json manifest = json::parse(std::ifstream(path + ".manifest.json"));
    CHECK(manifest["result_digest"] == "sha256:" + sha256_hex(doc.str()));
    CHECK(manifest["seeds"].is_null());
    CHECK(manifest["tool_version"] == "0.1.0");
    CHECK(manifest["field"] == "q5");

    // Re-running reproduces byte-identical output, hence the same digest.
    std::string path2 = "/tmp/kakeyatk_manifest_probe2.json";
    run({"kakeya", "verify", "--example", "quadric-cone", "--q", "5", "--json", "--out", path2,
         "--manifest"});
    json manifest2 = json::parse(std::ifstream(path2 + ".manifest.json"));
    CHECK(manifest2["result_digest"] == manifest["result_digest"]);

    for (const auto& p : {path, path + ".manifest.json", path2, path2 + ".manifest.json"})
        std::remove(p.c_str());
}

TEST_CASE("KAKEYATK_FIELD supplies the default field") {
    setenv("KAKEYATK_FIELD", "q7", 1);
    RunResult r = run({"poly", "eval", "--expr", "x^2", "--point", "3"});
    CHECK(r.rc == 0);
    CHECK(r.out == "2\n");  // 9 mod 7
    unsetenv("KAKEYATK_FIELD");
    RunResult q = run({"poly", "eval", "--expr", "x^2", "--point", "3"});
    CHECK(q.out == "9\n");  // rationals by default
}

TEST_CASE("the real binary behaves like the library dispatch") {
#ifdef KAKEYATK_BIN
    auto shell = [](const std::string& cmd) {
        FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
        REQUIRE(pipe);
        std::string output;
        char buf[512];
        while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) output.append(buf, got);
        int status = pclose(pipe);
        return std::pair<int, std::string>{WEXITSTATUS(status), output};
    };
    std::string bin = KAKEYATK_BIN;
    auto [rc0, out0] = shell(bin + " dirsets incidence-dim --N 3 --d 2 --q 101");
    CHECK(rc0 == 0);
    CHECK(out0 == "7\n");
    auto [rc2, out2] = shell(bin + " kakeya verify --example cusp-cone --q 4 --mode blind");
    CHECK(rc2 == 2);
    auto [rc1, out1] = shell(bin + " kakeya opencomp --gens x1 --n 3 --q 5");
    CHECK(rc1 == 1);
#endif
}
