#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hke/family.hpp"
#include "hke/graph.hpp"
#include "hke/maximal.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "hke");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = hke::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "hke_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

} // namespace

TEST_CASE("verify: hke family") {
    const auto path = write_temp("worked.txt", kWorkedExample);
    for (const std::string mode : {"definition", "pairwise", "partition"}) {
        const Outcome o = run({"verify", "-f", path, "--mode", mode});
        CHECK(o.code == 0);
        const json j = o.doc();
        CHECK(j["holds"] == true);
        CHECK(j["alpha"] == 3);
        CHECK(j["mode"] == mode);
        CHECK(j["witness"].is_null());
    }
    CHECK(run({"verify", "-f", path, "--json"}).code == 0);
}

TEST_CASE("verify: failing family prints its witness") {
    const auto path = write_temp("bad.txt", kNotHke);
    const Outcome o = run({"verify", "-f", path});
    CHECK(o.code == 1);
    const json j = o.doc();
    CHECK(j["holds"] == false);
    CHECK(j["witness"]["gamma"] == json::parse(R"([["1","2"],["1","3"],["2","3"]])"));
    CHECK(j["witness"]["positions"] == json::parse("[0,1,2]"));
    const Outcome ke = run({"verify", "-f", path, "--mode", "ke"});
    CHECK(ke.code == 0);
    CHECK(ke.doc()["holds"] == true);
    const Outcome pair = run({"verify", "-f", path, "--mode", "pairwise"});
    CHECK(pair.code == 1);
    CHECK(pair.doc()["witness"].contains("gamma1"));
}

TEST_CASE("verify: irrelevant family and input errors") {
    const Outcome o = run({"verify", "-f", write_temp("irr.txt", "1 2\n3\n")});
    CHECK(o.code == 1);
    CHECK(o.doc()["alpha"].is_null());
    CHECK(o.doc().contains("reason"));
    const Outcome dup = run({"verify", "-f", write_temp("dup.txt", "1 2\n2 1\n")});
    CHECK(dup.code == 2);
    CHECK(dup.err.find("DuplicateSet") != std::string::npos);
    CHECK(run({"verify", "-f", "/nonexistent/file"}).code == 2);
    CHECK(run({"verify", "-f", write_temp("w.txt", kWorkedExample), "--mode", "fast"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("typical") {
    const Outcome o = run({"typical", "--alpha", "3"});
    CHECK(o.code == 0);
    CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 8);
    CHECK(hke::parse_family(o.out) == hke::typical_collection(3));
    CHECK(run({"typical", "--alpha", "0"}).code == 2);
}

TEST_CASE("extend and complete") {
    const auto path = write_temp("worked.txt", kWorkedExample);
    const Outcome e = run({"extend", "-f", path, "--base", "0", "--subset", "1 3"});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("# added member:", 0) == 0);
    const hke::SetFamily grown = hke::parse_family(e.out);
    CHECK(grown.size() == 6);
    CHECK(run({"extend", "-f", path, "--base", "0", "--subset", "2"}).code == 2);
    CHECK(run({"extend", "-f", path, "--base", "0", "--subset", "zz"}).code == 2);

    const Outcome c = run({"complete", "-f", path});
    CHECK(c.code == 0);
    CHECK(hke::parse_family(c.out).size() == 8);
}

TEST_CASE("dual and iso") {
    const auto t3 = write_temp("t3.txt", hke::render_family(hke::typical_collection(3)));
    const Outcome d = run({"dual", "-f", t3});
    CHECK(d.code == 0);
    CHECK(d.doc()["classes"] == json::parse(R"([["1","4"],["2","5"],["3","6"]])"));
    CHECK(run({"dual", "-f", write_temp("worked.txt", kWorkedExample)}).code == 1);
    CHECK(run({"dual", "-f", write_temp("bad.txt", kNotHke)}).code == 2);

    const auto other = write_temp("t3b.txt", "a b c\na b f\na e c\na e f\nd b c\nd b f\nd e c\nd e f\n");
    const Outcome i = run({"iso", "-f", t3, "-g", other});
    CHECK(i.code == 0);
    CHECK(i.doc()["method"] == "dual-pairing");
    CHECK(i.doc()["bijection"].size() == 6);
    const Outcome no = run({"iso", "-f", t3, "-g", write_temp("worked.txt", kWorkedExample)});
    CHECK(no.code == 1);
    CHECK(no.doc()["bijection"].is_null());
}

TEST_CASE("graph commands") {
    const auto fpath = write_temp("worked.txt", kWorkedExample);
    const Outcome g = run({"graph-of", "-f", fpath});
    CHECK(g.code == 0);
    CHECK(g.out == "v 1 2 3 4 5 6\ne 1 2\ne 3 4\ne 3 6\ne 5 6\n");

    const auto gpath = write_temp("worked_graph.txt", g.out);
    const Outcome om = run({"omega", "-G", gpath});
    CHECK(om.code == 0);
    CHECK(hke::parse_family(om.out).size() == 6);

    const Outcome m = run({"matching", "-G", gpath});
    CHECK(m.out == "m 1 2\nm 3 4\nm 5 6\n");

    const Outcome ke = run({"ke", "-G", gpath});
    CHECK(ke.code == 0);
    CHECK(ke.doc()["ke"] == true);
    CHECK(ke.doc()["direct"]["mu"] == 3);
    CHECK(ke.doc()["theorem"]["ke"] == true);
    const auto k3 = write_temp("k3.txt", "e 1 2\ne 2 3\ne 1 3\n");
    CHECK(run({"ke", "-G", k3, "--method", "theorem"}).code == 1);
    CHECK(run({"ke", "-G", k3, "--method", "direct"}).code == 1);

    CHECK(run({"wellcovered", "-G", gpath, "--roundtrip"}).code == 0);
    const auto p3 = write_temp("p3.txt", "e 1 2\ne 2 3\n");
    CHECK(run({"wellcovered", "-G", p3}).code == 1);
    CHECK(run({"wellcovered", "-G", p3, "--roundtrip"}).code == 2);

    const auto t2 = write_temp("t2g.txt", hke::render_graph(hke::typical_ke_graph(2)));
    CHECK(run({"bipartite", "-G", t2}).code == 0);
    CHECK(run({"bipartite", "-G", gpath}).code == 1);
    CHECK(run({"old-ke", "-f", fpath}).code == 0);
    CHECK(run({"old-ke", "-f", write_temp("bad.txt", kNotHke)}).code == 1);

    const Outcome iso = run({"omega-iso", "-G", gpath, "-H", gpath});
    CHECK(iso.code == 0);
    CHECK(run({"ke", "-G", write_temp("loop.txt", "e 1 1\n")}).code == 2);
}

TEST_CASE("count and cn") {
    const auto out = std::filesystem::temp_directory_path() / "hke_cli_test" / "witness.txt";
    const Outcome c = run({"count", "--alpha", "3", "--n", "5", "-o", out.string()});
    CHECK(c.code == 0);
    const json j = c.doc();
    CHECK(j["max_size"] == 4);
    CHECK(j["formula_value"] == 4);
    CHECK(j["construction_size"] == 4);
    CHECK(j["agrees"] == true);
    std::ifstream in(out);
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    CHECK(hke::parse_family(text).size() == 4);

    const Outcome f = run({"count", "--alpha", "3", "--n", "5", "--formula"});
    CHECK(f.doc()["max_size"].is_null());
    CHECK(run({"count", "--alpha", "3", "--n", "5", "--search", "--formula"}).code == 2);
    CHECK(run({"count", "--alpha", "3", "--n", "7"}).code == 2);

    const Outcome cn = run({"cn", "--n", "5"});
    CHECK(cn.code == 0);
    CHECK(cn.doc()["c"] == 4);
    CHECK(cn.doc()["convention"] == "floor(n/2)");
    CHECK(cn.doc()["search"]["alpha"] == 3);
    CHECK(run({"cn", "--n", "20"}).doc()["search"].is_null());
}

TEST_CASE("sweep is deterministic") {
    const Outcome a = run({"sweep", "--max-vertices", "6", "--samples", "20", "--seed", "4"});
    const Outcome b = run({"sweep", "--max-vertices", "6", "--samples", "20", "--seed", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.doc()["exhaustive"] == 1 + 2 + 8 + 64 + 1024);
    CHECK(a.doc()["sampled"] == 20);
    CHECK(a.doc()["ok"] == true);
    CHECK(run({"sweep", "--max-vertices", "17"}).code == 2);
}
