// Exercises the shared-library C interface from C++; links only the shared
// library, not the implementation objects.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>

#include "diatomic.h"

namespace {

struct Ctx {
    dt_ctx* p;
    Ctx() : p(dt_ctx_new()) {}
    ~Ctx() { dt_ctx_free(p); }
};

std::string take(char* s) {
    std::string out = s == nullptr ? "" : s;
    dt_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and context lifecycle") {
    CHECK(std::string(dt_version()) == "1.0.0");
    Ctx c;
    REQUIRE(c.p != nullptr);
    CHECK(std::string(dt_last_error(c.p)).empty());
    CHECK(std::string(dt_last_error(nullptr)).empty());
}

TEST_CASE("sequence terms and listings") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(dt_seq_term(c.p, "stern", 5, &out) == DT_OK);
    CHECK(take(out) == "3");
    REQUIRE(dt_seq_term(c.p, "b", 21, &out) == DT_OK);
    CHECK(take(out) == "15");
    REQUIRE(dt_seq_term(c.p, "c", 9, &out) == DT_OK);
    CHECK(take(out) == "6");

    CHECK(dt_seq_term(c.p, "nope", 1, &out) == DT_ERR_INVALID_ARG);
    CHECK(std::string(dt_last_error(c.p)).find("unknown sequence") !=
          std::string::npos);
    CHECK(dt_seq_term(c.p, "b", 0, &out) == DT_ERR_DOMAIN);
    CHECK(dt_seq_term(nullptr, "stern", 1, &out) == DT_ERR_INVALID_ARG);
    CHECK(dt_seq_term(c.p, "stern", 1, nullptr) == DT_ERR_INVALID_ARG);

    REQUIRE(dt_seq_write(c.p, "stern", 1, 5, "csv", &out) == DT_OK);
    CHECK(take(out) == "n,value\n1,1\n2,1\n3,2\n4,1\n5,3\n");
    REQUIRE(dt_seq_write(c.p, "r", 0, 8, "json", &out) == DT_OK);
    {
        const std::string js = take(out);
        CHECK(js.find("\"schema_version\"") != std::string::npos);
        CHECK(js.find("\"values\"") != std::string::npos);
    }
    CHECK(dt_seq_write(c.p, "c", 0, 20000, "csv", &out) == DT_ERR_RANGE);
    CHECK(dt_seq_write(c.p, "stern", 5, 1, "csv", &out) ==
          DT_ERR_INVALID_ARG);
    CHECK(dt_seq_write(c.p, "stern", 1, 5, "xml", &out) ==
          DT_ERR_INVALID_ARG);
}

TEST_CASE("bijections in both directions") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(dt_bijection_to_index(c.p, "stern", "3", "2", &out) == DT_OK);
    CHECK(take(out) == "5");
    REQUIRE(dt_bijection_to_pair(c.p, "stern", "5", &out) == DT_OK);
    CHECK(take(out) == "3 2");
    REQUIRE(dt_bijection_to_index(c.p, "oplus", "2", "6", &out) == DT_OK);
    CHECK(take(out) == "10");
    REQUIRE(dt_bijection_to_pair(c.p, "oplus", "10", &out) == DT_OK);
    CHECK(take(out) == "2 6");
    REQUIRE(dt_bijection_to_pair(c.p, "oplus", "1", &out) == DT_OK);
    CHECK(take(out) == "0 0");

    // large indices round-trip exactly through decimal strings
    REQUIRE(dt_bijection_to_index(c.p, "stern", "1", "199", &out) == DT_OK);
    const std::string idx = take(out);
    REQUIRE(dt_bijection_to_pair(c.p, "stern", idx.c_str(), &out) == DT_OK);
    CHECK(take(out) == "1 199");

    CHECK(dt_bijection_to_index(c.p, "stern", "2", "4", &out) ==
          DT_ERR_DOMAIN);
    CHECK(std::string(dt_last_error(c.p)).find("not coprime") !=
          std::string::npos);
    CHECK(dt_bijection_to_index(c.p, "metal", "1", "2", &out) ==
          DT_ERR_INVALID_ARG);
    CHECK(dt_bijection_to_pair(c.p, "stern", "12x", &out) ==
          DT_ERR_INVALID_ARG);
    CHECK(dt_bijection_to_pair(c.p, "stern", "", &out) == DT_ERR_INVALID_ARG);
    CHECK(dt_bijection_to_pair(c.p, "stern", "0", &out) == DT_ERR_DOMAIN);
}

TEST_CASE("plots and the graph target") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(dt_plot_write(c.p, "f", 4, "csv", 0, &out) == DT_OK);
    {
        const std::string csv = take(out);
        CHECK(csv.rfind("x,y,x_approx,y_approx\n", 0) == 0);
        CHECK(csv.find("1/4,1/3") != std::string::npos);
    }
    REQUIRE(dt_plot_write(c.p, "graph", 3, nullptr, 1, &out) == DT_OK);
    {
        const std::string svg = take(out);
        CHECK(svg.rfind("<svg", 0) == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
    REQUIRE(dt_plot_write(c.p, "Q", 8, "json", 0, &out) == DT_OK);
    CHECK(take(out).find("\"points\"") != std::string::npos);
    CHECK(dt_plot_write(c.p, "nope", 4, "csv", 0, &out) ==
          DT_ERR_INVALID_ARG);
    CHECK(dt_plot_write(c.p, "Q", 40, "csv", 0, &out) == DT_ERR_RANGE);
    CHECK(dt_plot_write(c.p, "graph", 0, "svg", 0, &out) == DT_ERR_RANGE);
}

TEST_CASE("verification suites through the C surface") {
    Ctx c;
    char* names = nullptr;
    REQUIRE(dt_verify_names(c.p, &names) == DT_OK);
    {
        const std::string list = take(names);
        CHECK(list.find("stern-recurrence") != std::string::npos);
        CHECK(list.find("thm-3-6") != std::string::npos);
    }
    char* report = nullptr;
    uint64_t failures = 99;
    REQUIRE(dt_verify_run(c.p, "lemma-3-5", 8, 1, 1, "text", &report,
                          &failures) == DT_OK);
    {
        const std::string r = take(report);
        CHECK(r.find("lemma-3-5: pass") != std::string::npos);
    }
    CHECK(failures == 0);
    REQUIRE(dt_verify_run(c.p, "jacobsthal", 12, 1, 1, "json", &report,
                          &failures) == DT_OK);
    {
        const std::string r = take(report);
        CHECK(r.find("\"schema_version\"") != std::string::npos);
        CHECK(r.find("\"passed\": true") != std::string::npos);
    }
    CHECK(dt_verify_run(c.p, "no-such-suite", 0, 1, 1, "text", &report,
                        &failures) == DT_ERR_INVALID_ARG);
    CHECK(dt_verify_run(c.p, "lemma-3-5", 8, 1, 1, "yaml", &report,
                        &failures) == DT_ERR_INVALID_ARG);
}

TEST_CASE("conjecture sweep and cache round-trip") {
    Ctx c;
    char* out = nullptr;
    uint64_t violations = 99;
    REQUIRE(dt_conjectures(c.p, 200, 1, "text", &out, &violations) == DT_OK);
    CHECK(take(out).find("conjecture sweep") != std::string::npos);
    CHECK(violations == 0);
    CHECK(dt_conjectures(c.p, 0, 1, "text", &out, &violations) ==
          DT_ERR_RANGE);

    const char* path = "./capi_cache_test.tmp";
    REQUIRE(dt_seq_term(c.p, "stern", 100, &out) == DT_OK);
    dt_string_free(out);
    REQUIRE(dt_cache_save(c.p, path) == DT_OK);
    Ctx fresh;
    REQUIRE(dt_cache_load(fresh.p, path) == DT_OK);
    CHECK(dt_cache_load(fresh.p, "./no/such/file.bin") == DT_ERR_IO);
    std::remove(path);
}
