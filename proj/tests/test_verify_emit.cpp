// The verification registry, the CSV/JSON/SVG emitters, and the memo-table
// cache file.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "diatomic/cache.hpp"
#include "diatomic/emit.hpp"
#include "diatomic/fibrep.hpp"
#include "diatomic/verify.hpp"
#include "diatomic/workspace.hpp"

using namespace diatomic;
using nlohmann::json;

namespace {

size_t count_lines(const std::string& s) {
    return size_t(std::count(s.begin(), s.end(), '\n'));
}

std::string temp_path(const char* stem) {
    return std::string("./") + stem + ".tmp";
}

}  // namespace

TEST_CASE("suite registry: names are unique and dispatch works") {
    const auto names = verify_suite_names();
    CHECK(names.size() == 50);
    const std::set<std::string> uniq(names.begin(), names.end());
    CHECK(uniq.size() == names.size());
    CHECK(uniq.count("thm-3-6") == 1);
    CHECK(uniq.count("r-oracle") == 1);
    CHECK(uniq.count("printed-prefixes") == 1);

    Workspace ws;
    VerifyOptions opt;
    CHECK_THROWS_AS((void)verify_run("no-such-suite", ws, opt),
                    std::invalid_argument);

    const SuiteResult r = verify_run("printed-prefixes", ws, opt);
    CHECK(r.name == "printed-prefixes");
    CHECK(r.failures == 0);
    CHECK(r.cases > 0);
    CHECK(r.passed());
}

TEST_CASE("parallel sweeps give byte-identical results") {
    Workspace ws1, ws2;
    VerifyOptions one, four;
    one.bound = 8192;
    four.bound = 8192;
    four.jobs = 4;
    const SuiteResult a = verify_run("thm-3-6", ws1, one);
    const SuiteResult b = verify_run("thm-3-6", ws2, four);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
    CHECK(a.summary == b.summary);
    CHECK(a.examples == b.examples);
}

TEST_CASE("sequence terms and range emission") {
    Workspace ws;
    CHECK(seq_term(ws, "stern", 5) == "3");
    CHECK(seq_term(ws, "b", 11) == "6");
    CHECK(seq_term(ws, "r", 16) == "4");
    CHECK(seq_term(ws, "sf", 12) == "3");
    CHECK(seq_term(ws, "c", 9) == "6");
    CHECK_THROWS_AS((void)seq_term(ws, "nope", 1), std::invalid_argument);
    CHECK_THROWS_AS((void)seq_term(ws, "b", 0), std::domain_error);

    std::ostringstream csv;
    emit_seq_csv(csv, ws, "stern", 1, 5);
    CHECK(csv.str() == "n,value\n1,1\n2,1\n3,2\n4,1\n5,3\n");
    CHECK_THROWS_AS(emit_seq_csv(csv, ws, "stern", 5, 1),
                    std::invalid_argument);

    std::ostringstream js;
    emit_seq_json(js, ws, "b", 1, 8);
    const json doc = json::parse(js.str());
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["sequence"] == "b");
    CHECK(doc["from"] == 1);
    CHECK(doc["to"] == 8);
    CHECK(doc["values"] ==
          json({"0", "0", "1", "0", "2", "1", "2", "0"}));
}

TEST_CASE("plot emitters: dyadic grids and the Fibonacci ratio curve") {
    Workspace ws;
    std::ostringstream f8;
    emit_plot_csv(f8, ws, "f", 8);
    const std::string f8s = f8.str();
    CHECK(count_lines(f8s) == 258);  // header + 257 grid points
    CHECK(f8s.find("1/4,1/3") != std::string::npos);
    CHECK(f8s.rfind("x,y,x_approx,y_approx\n", 0) == 0);

    std::ostringstream g8;
    emit_plot_csv(g8, ws, "g", 8);
    CHECK(g8.str().find("3/4,1/2") != std::string::npos);

    std::ostringstream qm4;
    emit_plot_csv(qm4, ws, "qm", 4);
    CHECK(count_lines(qm4.str()) == 18);
    CHECK(qm4.str().find("1/3,1/4") != std::string::npos);

    std::ostringstream q8;
    emit_plot_json(q8, ws, "Q", 8);
    const json qdoc = json::parse(q8.str());
    CHECK(qdoc["schema_version"] == kSchemaVersion);
    CHECK(qdoc["target"] == "Q");
    CHECK(qdoc["points"].size() == 13);  // k < F_7

    CHECK_THROWS_AS(emit_plot_csv(q8, ws, "nope", 4), std::invalid_argument);
    CHECK_THROWS_AS(emit_plot_csv(q8, ws, "Q", 40), std::range_error);
}

TEST_CASE("graph emitters: SVG document and JSON vertex list") {
    const GraphG g = graph_g(6);
    std::ostringstream svg;
    emit_graph_svg(svg, g, true);
    const std::string s = svg.str();
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("viewBox") != std::string::npos);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(s.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);

    std::ostringstream js;
    emit_graph_json(js, g);
    const json doc = json::parse(js.str());
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["depth"] == 6);
    size_t row6 = 0;
    for (const auto& v : doc["vertices"]) {
        if (v["row"] == 6) ++row6;
    }
    CHECK(row6 == 20);
    CHECK(doc["vertices"].size() == g.vertices.size());
    CHECK(doc["edges"].size() == g.edges.size());
}

TEST_CASE("conjecture and suite reports serialize") {
    SfTable sf;
    CTable c;
    const ConjectureReport rep = run_conjectures(200, sf, c);
    std::ostringstream text;
    emit_conjectures_text(text, rep);
    CHECK(text.str().find("violation") != std::string::npos);
    std::ostringstream js;
    emit_conjectures_json(js, rep);
    const json doc = json::parse(js.str());
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["entries"].size() == 4);
    CHECK(doc["total_violations"] == 0);

    Workspace ws;
    VerifyOptions opt;
    opt.bound = 8;
    const SuiteResult r = verify_run("lemma-3-5", ws, opt);
    std::ostringstream sj;
    emit_suite_json(sj, r);
    const json sdoc = json::parse(sj.str());
    CHECK(sdoc["suite"] == "lemma-3-5");
    CHECK(sdoc["passed"] == true);
    CHECK(sdoc["failures"] == 0);
}

TEST_CASE("cache round-trip and corruption errors") {
    const std::string path = temp_path("diatomic_cache_test");
    {
        Workspace ws;
        ws.stern.ensure(500);
        ws.b.ensure(300);
        ws.r.ensure(400);
        ws.sf.ensure(350);
        ws.c.ensure(120, ws.sf);
        cache_save(ws, path);

        Workspace fresh;
        cache_load(fresh, path);
        CHECK(fresh.stern.size() == ws.stern.size());
        CHECK(fresh.b.size() == ws.b.size());
        CHECK(fresh.r.size() == ws.r.size());
        CHECK(fresh.sf.size() == ws.sf.size());
        CHECK(fresh.c.size() == ws.c.size());
        for (size_t i = 0; i < fresh.stern.size(); ++i) {
            CHECK(fresh.stern.at(i) == ws.stern.at(i));
        }
        for (size_t i = 0; i < fresh.c.size(); ++i) {
            CHECK(fresh.c.at(i) == ws.c.at(i));
        }
    }
    {
        std::ofstream os(path, std::ios::binary | std::ios::trunc);
        os << "this is not a cache file";
    }
    {
        Workspace ws;
        CHECK_THROWS_AS(cache_load(ws, path), std::runtime_error);
    }
    {
        Workspace ws;
        CHECK_THROWS_AS(cache_load(ws, "./no/such/dir/cache.bin"),
                        std::runtime_error);
    }
    std::remove(path.c_str());
}
