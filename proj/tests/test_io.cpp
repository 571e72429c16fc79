#include <doctest.h>

#include <fstream>
#include <random>

#include "dirseq/construct.hpp"
#include "dirseq/io.hpp"
#include "test_helpers.hpp"

using namespace dirseq;

TEST_CASE("halfperiod text round-trips exactly") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        CentralSignature d(testutil::random_signature(rng, 2, 9));
        auto seq = dc_closed_form(d);
        CHECK(parse_halfperiod(write_halfperiod(seq)) == seq);
    }
}

TEST_CASE("halfperiod reader tolerates comments and loose whitespace") {
    auto seq = parse_halfperiod(
        "# a square\n"
        "N=4   H=4\n"
        "  1 2   -2 -1\n"
        "1 -2 2 -1  # crossing\n"
        "\n"
        "-2 1 -1 2\n-2 -1 1 2\n-1 -2 2 1\n");
    CHECK(seq.size() == 4);
    CHECK(seq.length() == 4);
}

TEST_CASE("halfperiod reader rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_halfperiod("N=4\n1 2 -2 -1\n"), doctest::Contains("ParseError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_halfperiod("N=2 H=1\n1 2\n2 x\n"), doctest::Contains("ParseError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_halfperiod("N=2 H=1\n1 2\n"), doctest::Contains("ParseError"),
                         Error);
    // well-formed numerals, invalid sequence
    CHECK_THROWS_WITH_AS(parse_halfperiod("N=3 H=1\n1 2 3\n2 1 3\n"),
                         doctest::Contains("LastNotReversalOfFirst"), Error);
}

TEST_CASE("configuration files round-trip bit-exactly") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 20);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 6; ++i) {
            Point p{FieldScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 5),
                    FieldScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 5)};
            if (std::find(pts.begin(), pts.end(), p) != pts.end()) {
                --i;
                continue;
            }
            pts.push_back(p);
        }
        Configuration cfg(5, pts);
        Configuration back = parse_configuration(write_configuration(cfg));
        CHECK(back.disc == cfg.disc);
        REQUIRE(back.points.size() == cfg.points.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(back.points[i].x.rational_part() == cfg.points[i].x.rational_part());
            CHECK(back.points[i].x.surd_part() == cfg.points[i].x.surd_part());
            CHECK(back.points[i].y.rational_part() == cfg.points[i].y.rational_part());
            CHECK(back.points[i].y.surd_part() == cfg.points[i].y.surd_part());
        }
    }
}

TEST_CASE("every corpus fixture parses, validates and matches its record") {
    std::ifstream index(testutil::data_path("fixtures/index.txt"));
    REQUIRE(index.good());
    std::string line;
    int checked = 0;
    while (std::getline(index, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name, signature, file, config;
        ls >> name >> signature >> file >> config;
        CAPTURE(name);
        auto seq = testutil::load_fixture(file);
        CHECK(central_signature(seq).entries == CentralSignature::parse(signature).entries);
        if (config != "-") {
            std::ifstream cf(testutil::data_path("configs/" + config));
            REQUIRE(cf.good());
            Configuration cfg = read_configuration(cf);
            CHECK(cfg.size() == seq.size());
        }
        ++checked;
    }
    CHECK(checked == 11);
}

TEST_CASE("svg output is deterministic and class-complete") {
    auto cfg = gen_family(FamilySpec::z5_12());
    std::string svg = render_svg(cfg);
    CHECK(svg == render_svg(cfg));
    auto count = [&](const std::string& needle) {
        std::size_t c = 0, at = 0;
        while ((at = svg.find(needle, at)) != std::string::npos) {
            ++c;
            ++at;
        }
        return c;
    };
    CHECK(count("<circle") == 12);
    CHECK(count("<g class=\"direction-") == 12);

    svg = render_svg(gen_family(FamilySpec::polygon(4)));
    std::size_t c = 0, at = 0;
    while ((at = svg.find("<g class=\"direction-", at)) != std::string::npos) {
        ++c;
        ++at;
    }
    CHECK(c == 4);
}

TEST_CASE("svg of the exponential cross shows sixteen direction classes") {
    auto cfg = gen_family(FamilySpec::exp_cross(2, 3, 3));
    std::string svg = render_svg(cfg);
    std::size_t circles = 0, groups = 0, at = 0;
    while ((at = svg.find("<circle", at)) != std::string::npos) {
        ++circles;
        ++at;
    }
    at = 0;
    while ((at = svg.find("<g class=\"direction-", at)) != std::string::npos) {
        ++groups;
        ++at;
    }
    CHECK(circles == 16);
    CHECK(groups == 16);
}
