#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssalign/io.hpp"
#include "ssalign/testgen.hpp"
#include "test_util.hpp"

using namespace ssalign;
using test_util::mat;

TEST_CASE("parse_realization_document") {
    SUBCASE("full document") {
        const auto doc = parse_realization_document(R"({
            "label": "plant",
            "n_x": 2, "n_u": 1, "n_y": 1,
            "A": [[0, 1], [-2, -3]],
            "B": [[0], [1]],
            "C": [[1, 0]],
            "D": [[0]]
        })");
        CHECK(doc.n_x == 2);
        CHECK(doc.label == "plant");
        CHECK(doc.has_inputs());
        CHECK(doc.A == mat({{0.0, 1.0}, {-2.0, -3.0}}));
        CHECK(*doc.B == mat({{0.0}, {1.0}}));
        const Realization r = to_realization(doc);
        CHECK(r.n_u() == 1);
    }

    SUBCASE("C-only document") {
        const auto doc = parse_realization_document(
            R"({"n_x": 2, "n_y": 1, "A": [[2, 6], [-2, -5]], "C": [[1, 1]]})");
        CHECK_FALSE(doc.has_inputs());
        CHECK(doc.n_u == 0);
        CHECK_THROWS_AS(to_realization(doc), ParseError);
    }

    SUBCASE("shape mismatches are rejected") {
        CHECK_THROWS_AS(parse_realization_document(
                            R"({"n_x": 2, "n_y": 1, "A": [[1, 0]], "C": [[1, 0]]})"),
                        ParseError);
        CHECK_THROWS_AS(parse_realization_document(
                            R"({"n_x": 2, "n_y": 1, "A": [[1, 0], [0, 1]], "C": [[1]]})"),
                        ParseError);
        CHECK_THROWS_AS(parse_realization_document(
                            R"({"n_x": 2, "n_y": 1, "A": [[1, 0], [0]], "C": [[1, 0]]})"),
                        ParseError);
    }

    SUBCASE("B without D is rejected") {
        CHECK_THROWS_AS(parse_realization_document(R"({"n_x": 1, "n_u": 1, "n_y": 1,
                            "A": [[1]], "B": [[1]], "C": [[1]]})"),
                        ParseError);
    }

    SUBCASE("missing and malformed fields") {
        CHECK_THROWS_AS(parse_realization_document("not json"), ParseError);
        CHECK_THROWS_AS(parse_realization_document("[1, 2]"), ParseError);
        CHECK_THROWS_AS(parse_realization_document(R"({"n_y": 1, "A": [[1]], "C": [[1]]})"),
                        ParseError);
        CHECK_THROWS_AS(parse_realization_document(
                            R"({"n_x": 0, "n_y": 1, "A": [], "C": []})"),
                        ParseError);
        CHECK_THROWS_AS(parse_realization_document(
                            R"({"n_x": 1, "n_y": 1, "A": [["x"]], "C": [[1]]})"),
                        ParseError);
    }

    SUBCASE("non-finite tokens are rejected") {
        CHECK_THROWS_AS(parse_realization_document(
                            R"({"n_x": 1, "n_y": 1, "A": [[NaN]], "C": [[1]]})"),
                        ParseError);
        CHECK_THROWS_AS(parse_realization_document(
                            R"({"n_x": 1, "n_y": 1, "A": [[Infinity]], "C": [[1]]})"),
                        ParseError);
        CHECK_THROWS_AS(parse_realization_document(
                            R"({"n_x": 1, "n_y": 1, "A": [[1e999]], "C": [[1]]})"),
                        ParseError);
    }
}

TEST_CASE("realization round trip holds full precision") {
    SeededRng       rng(404);
    GeneratorConfig cfg;
    for (int trial = 0; trial < 10; ++trial) {
        cfg.seed = 200 + trial;
        cfg.n_x = 1 + trial % 5;
        cfg.n_u = 1 + trial % 2;
        cfg.n_y = 1 + trial % 3;
        cfg.entry_scale = trial % 2 == 0 ? 1.0 : 1e-3;
        const Realization r = random_observable_realization(cfg);
        const auto        doc = to_document(r, "trial");
        const auto        parsed = parse_realization_document(emit_realization_document(doc));
        CHECK(parsed.A == r.A);
        CHECK(*parsed.B == r.B);
        CHECK(parsed.C == r.C);
        CHECK(*parsed.D == r.D);
        CHECK(parsed.label == "trial");
    }

    SUBCASE("awkward values survive") {
        RealizationDocument doc;
        doc.n_x = 2;
        doc.n_y = 1;
        doc.A = mat({{0.1, 1e-17}, {-1e300, 3.0000000000000004}});
        doc.C = mat({{5e-324, 1.7976931348623157e308}});
        const auto parsed = parse_realization_document(emit_realization_document(doc));
        CHECK(parsed.A == doc.A);
        CHECK(parsed.C == doc.C);
    }
}

TEST_CASE("transform documents") {
    SUBCASE("emitted fields parse back exactly") {
        TransformDocument doc;
        doc.n_x = 2;
        doc.T = mat({{1.0, 1.0}, {0.0, 1.0}});
        doc.T_inv = mat({{1.0, -1.0}, {0.0, 1.0}});
        doc.alpha = test_util::col({0.5, -0.25});
        doc.residual_state = 1.25e-16;
        doc.residual_output = 0.0;
        doc.condition_estimate = 2.618;
        const auto parsed = parse_transform_document(emit_transform_document(doc));
        CHECK(parsed.n_x == 2);
        CHECK(parsed.T == doc.T);
        CHECK(*parsed.T_inv == *doc.T_inv);
        CHECK(*parsed.alpha == *doc.alpha);
        CHECK(*parsed.residual_state == 1.25e-16);
        CHECK(*parsed.condition_estimate == 2.618);
    }

    SUBCASE("minimal document needs only T") {
        const auto parsed = parse_transform_document(R"({"T": [[2]]})");
        CHECK(parsed.n_x == 1);
        CHECK(parsed.T(0, 0) == 2.0);
        CHECK_FALSE(parsed.T_inv.has_value());
    }

    SUBCASE("inconsistent shapes are rejected") {
        CHECK_THROWS_AS(parse_transform_document(R"({"n_x": 2, "T": [[1]]})"), ParseError);
        CHECK_THROWS_AS(parse_transform_document(R"({"T": [[1, 0]]})"), ParseError);
        CHECK_THROWS_AS(parse_transform_document(R"({"T": [[1, 0], [0, 1]], "alpha": [1]})"),
                        ParseError);
        CHECK_THROWS_AS(parse_transform_document(R"({})"), ParseError);
    }
}

TEST_CASE("file loading reports the path") {
    test_util::TempDir dir("io");
    const std::string  good =
        dir.file("ok.json", R"({"n_x": 1, "n_y": 1, "A": [[1]], "C": [[1]]})");
    CHECK(load_realization_document(good).n_x == 1);

    try {
        load_realization_document(dir.file("bad.json", "{"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad.json") != std::string::npos);
    }
    CHECK_THROWS_AS(load_realization_document((dir.path() / "missing.json").string()), ParseError);
}
