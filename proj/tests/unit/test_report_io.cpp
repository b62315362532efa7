#include "doctest.h"

#include <string>

#include <nlohmann/json.hpp>

#include "hls/algebra_io.hpp"
#include "hls/report_io.hpp"
#include "hls/verification.hpp"
#include "hls/zoo.hpp"

using hls::Rational;
using hls::Vec;

TEST_CASE("vectors render against the basis labels") {
    auto h = hls::zoo_get("sl2");
    CHECK(hls::format_vector(h.basis(), {Rational(1), Rational(0), Rational(0)}) == "h");
    CHECK(hls::format_vector(h.basis(), {Rational(0), Rational(0), Rational(0)}) == "0");
    CHECK(hls::format_vector(h.basis(), {Rational(1), Rational(-2), Rational(0)}) ==
          "h - 2*e");
    CHECK(hls::format_vector(h.basis(), {Rational(0), Rational(1, 2), Rational(-1)}) ==
          "1/2*e - f");
    CHECK(hls::format_vector(h.basis(), {Rational(-1), Rational(0), Rational(0)}) ==
          "-h");
}

TEST_CASE("analysis report carries the structural facts") {
    auto a = hls::analyze(hls::zoo_get("heis3"));
    CHECK(a.name == "heis3");
    CHECK(a.even_dim == 3);
    CHECK(a.odd_dim == 0);
    CHECK(a.derived.dim() == 1);
    CHECK(a.center_space.dim() == 1);
    CHECK(!a.perfect);
    CHECK(!a.centerless);
    CHECK(a.multiplicative);
    CHECK(a.alpha_invertible);

    auto s = hls::analyze(hls::zoo_get("sl2_twist"));
    CHECK(s.perfect);
    CHECK(s.centerless);
    CHECK(s.derived_centralizer.is_zero());
}

TEST_CASE("json renderings are well-formed and stable") {
    auto h = hls::zoo_get("odd_heis");
    auto a = hls::analyze(h);
    std::string once = hls::analyze_json(h, a).dump(2);
    std::string twice = hls::analyze_json(h, hls::analyze(h)).dump(2);
    CHECK(once == twice);
    auto parsed = nlohmann::json::parse(once);
    CHECK(parsed.at("name") == "odd_heis");
    CHECK(parsed.at("perfect") == false);

    auto v = hls::validation_json(h, hls::validate(h));
    CHECK(v.at("valid") == true);
}

TEST_CASE("spaces json lists bases with display strings") {
    auto h = hls::zoo_get("sl2");
    auto j = hls::spaces_json(h, hls::DegreeFilter::All,
                              hls::SymmetryConvention::Skew);
    auto parsed = nlohmann::json::parse(j.dump());
    const auto& bd = parsed.at("biderivations");
    REQUIRE(bd.is_array());
    bool found_even = false;
    for (const auto& block : bd) {
        if (block.at("degree") == 0) {
            found_even = true;
            CHECK(block.at("dim") == 1);
            CHECK(block.at("unknowns") == 27);
            CHECK(block.at("constraint_rank") == 26);
        }
    }
    CHECK(found_even);
    CHECK(parsed.contains("commuting"));
    CHECK(parsed.at("commuting").at("dim") == 1);
}

TEST_CASE("verify json mirrors the report rows") {
    auto rep = hls::run_verification(hls::zoo_get("heis3"));
    auto j = hls::verify_json(rep);
    auto parsed = nlohmann::json::parse(j.dump());
    CHECK(parsed.at("algebra") == "heis3");
    CHECK(parsed.at("rows").size() == rep.rows.size());
    CHECK(parsed.at("summary").at("failed") == 0);
    CHECK(parsed.at("summary").at("skipped") == 3);
    for (const auto& row : parsed.at("rows")) {
        CHECK(row.contains("name"));
        CHECK(row.contains("status"));
    }
}

TEST_CASE("validation text names broken axioms") {
    auto desc = hls::parse_description(R"({
      "name": "bad", "even": ["h", "e", "f"], "odd": [],
      "brackets": [
        {"left": "h", "right": "e", "value": {"e": "2"}},
        {"left": "h", "right": "f", "value": {"f": "-2"}},
        {"left": "e", "right": "f", "value": {"e": "1"}}
      ]
    })");
    auto h = hls::assemble_unchecked(desc);
    auto report = hls::validate(h);
    REQUIRE(!report.axioms_ok());
    std::string text = hls::validation_text(h, report);
    CHECK(text.find("jacobi") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);

    auto j = hls::validation_json(h, report);
    CHECK(j.at("valid") == false);
}
