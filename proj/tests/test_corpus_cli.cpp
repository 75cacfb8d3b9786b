#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cohomdet/cli.hpp"
#include "cohomdet/corpus.hpp"
#include "cohomdet/errors.hpp"
#include "cohomdet/json_io.hpp"

using namespace cohomdet;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "cohomdet");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("cohomdet_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string corpus_file(const std::string& name) { return std::string(corpus_source(name)); }

bool single_line(const std::string& s) { return !s.empty() && s.find('\n') == s.size() - 1; }

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("listing is sorted and contains the anchors") {
    const auto names = corpus_list();
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const char* n : {"torus3", "rank2-boundary-D1", "case4-n3"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("entries reproduce their expected determinants") {
    for (const auto& name : corpus_list()) {
        CAPTURE(name);
        const CorpusEntry e = corpus_get(name);
        CHECK(corpus_check(e).empty());
        CHECK_FALSE(e.description.empty());
        CHECK_FALSE(e.provenance.empty());
    }
    CHECK(corpus_get("torus3").expected_d == "1");
    CHECK(corpus_get("rank2-boundary-D1").expected_d == "1");
    const CorpusEntry c4 = corpus_get("case4-n3");
    CHECK(c4.expected_d == "-a3");
    CHECK(std::get<GluingInstance>(c4.subject).case_tag == GluingCase::four);
}

TEST_CASE("unknown names and tampered entries") {
    CHECK_THROWS_AS(corpus_get("borromean"), UnknownNameError);
    std::string text = corpus_file("torus3");
    text.replace(text.find("\"expected_d\": \"1\""), 17, "\"expected_d\": \"2\"");
    const CorpusEntry tampered = corpus_parse("torus3", text);
    CHECK(corpus_check(tampered).find("computed 1") != std::string::npos);
}

}

TEST_SUITE("cli") {

TEST_CASE("det on the torus prints 1") {
    TempFile f(corpus_file("torus3"));
    const Result r = run_cli({"det", "--input", f.path()});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(r.err.empty());
}

TEST_CASE("det JSON output and standard input") {
    const Result r = run_cli({"det", "--input", "-", "--format", "json"}, corpus_file("boundary-levi-civita-n3"));
    CHECK(r.code == 0);
    const Json j = parse_json_text(r.out);
    CHECK(j["d"] == "-a3");
    CHECK(j["degree"] == 1);
    CHECK(IntPoly::parse(j["d"].get<std::string>(), 3).to_string() == "-a3");
}

TEST_CASE("det with bases and orientation") {
    TempFile f(corpus_file("boundary-levi-civita-n3"));
    CHECK(run_cli({"det", "--input", f.path(), "--basis-a", "[[0,1,0],[1,0,0],[0,0,1]]"}).out == "a3\n");
    CHECK(run_cli({"det", "--input", f.path(), "--basis-b", "[[1,0],[0,-1]]"}).out == "a3\n");
    CHECK(run_cli({"det", "--input", f.path(), "--orientation", "-1"}).out == "a3\n");
    CHECK(run_cli({"det", "--input", f.path(), "--orientation", "1"}).out == "-a3\n");

    const Result singular = run_cli({"det", "--input", f.path(), "--basis-a", "[[2,0,0],[0,1,0],[0,0,1]]"});
    CHECK(singular.code == 2);
    CHECK(single_line(singular.err));
    CHECK(run_cli({"det", "--input", f.path(), "--basis-a", "[[1,0],[0,1]]"}).code == 2);
    CHECK(run_cli({"det", "--input", f.path(), "--orientation", "0"}).code == 2);
    CHECK(run_cli({"det", "--input", f.path(), "--orientation", "-1", "--basis-a", "[[1,0,0],[0,1,0],[0,0,1]]"}).code == 2);
}

TEST_CASE("verify passes on gluing instances") {
    TempFile c1(corpus_file("case1-n4"));
    const Result r1 = run_cli({"verify", "--input", c1.path()});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("case 1: pass") != std::string::npos);
    CHECK(r1.out.find("lhs: 0\nrhs: 0\n") != std::string::npos);

    TempFile c4(corpus_file("case4-n3"));
    const Result r4 = run_cli({"verify", "--input", c4.path(), "--format", "json"});
    CHECK(r4.code == 0);
    const Json j = parse_json_text(r4.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["lhs"] == "-a3");
    CHECK(j["rhs"] == "-a3");
}

TEST_CASE("verify exits 1 when the identity fails") {
    Json inst = parse_json_text(corpus_file("case4-n3"));
    inst["s0"] = 1;
    TempFile f(inst.dump());
    const Result r = run_cli({"verify", "--input", f.path()});
    CHECK(r.code == 1);
    CHECK(r.out.find("case 4: fail") != std::string::npos);
}

TEST_CASE("check names the first violating index") {
    TempFile bad(R"({"kind":"boundary","n":3,"entries":[{"idx":[1,1,2],"val":1},{"idx":[1,2,1],"val":-1},{"idx":[2,1,3],"val":4}]})");
    const Result r = run_cli({"check", "--input", bad.path()});
    CHECK(r.code == 2);
    CHECK(single_line(r.err));
    CHECK(r.err.find("not skew") != std::string::npos);
    CHECK(r.err.find("(2,1,3)") != std::string::npos);

    TempFile good(corpus_file("torus3"));
    const Result ok = run_cli({"check", "--input", good.path()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid closed form, n = 3\n");
}

TEST_CASE("input errors exit 2 with one line") {
    TempFile malformed("{\"kind\": \"closed\", \"n\": 3, ");
    for (const Result& r : {run_cli({"det", "--input", malformed.path()}), run_cli({"det", "--input", "/nonexistent/x.json"}),
                            run_cli({"det", "--input", malformed.path(), "--bogus"}), run_cli({}),
                            run_cli({"frobnicate"}), run_cli({"corpus", "--name", "nope"}),
                            run_cli({"det", "--input", malformed.path(), "--format", "xml"})}) {
        CHECK(r.code == 2);
        CHECK(single_line(r.err));
        CHECK(r.out.empty());
    }
}

TEST_CASE("corpus subcommand") {
    const Result list = run_cli({"corpus"});
    CHECK(list.code == 0);
    CHECK(list.out.find("torus3\n") != std::string::npos);

    const Result all = run_cli({"corpus", "--verify"});
    CHECK(all.code == 0);
    CHECK(all.out.find("case4-n3: ok") != std::string::npos);

    const Result one = run_cli({"corpus", "--name", "torus3"});
    CHECK(one.code == 0);
    CHECK(one.out.find("expected d: 1\n") != std::string::npos);

    const Result json = run_cli({"corpus", "--name", "case4-n3", "--verify", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(parse_json_text(json.out)[0]["verdict"] == "pass");
}

TEST_CASE("output is deterministic") {
    TempFile f(corpus_file("case3-n3"));
    const Result a = run_cli({"verify", "--input", f.path(), "--format", "json"});
    const Result b = run_cli({"verify", "--input", f.path(), "--format", "json"});
    CHECK(a.out == b.out);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"det", "--help"}).code == 0);
}

}
