#include "doctest.h"

#include <vector>

#include "ffelim.hpp"
#include "hls/algebra.hpp"
#include "hls/errors.hpp"
#include "hls/linalg.hpp"
#include "hls/spaces.hpp"
#include "hls/zoo.hpp"
#include "probe.hpp"

using hls::BiderivationSpace;
using hls::GradedBilinearMap;
using hls::GradedLinearMap;
using hls::HomLieSuperalgebra;
using hls::Parity;
using hls::Rational;
using hls::Subspace;
using hls::SymmetryConvention;
using hls::Vec;

namespace {

Subspace span_of_bilinear(const HomLieSuperalgebra& h, Parity s,
                          const std::vector<GradedBilinearMap>& maps) {
    std::size_t unknowns = hls::admissible_bilinear_entries(h.basis(), s).size();
    std::vector<Vec> rows;
    for (const auto& m : maps) rows.push_back(hlstest::flatten_bilinear(h, s, m));
    return Subspace::span(unknowns, rows);
}

Subspace span_of_linear(const HomLieSuperalgebra& h, Parity s,
                        const std::vector<GradedLinearMap>& maps) {
    std::size_t unknowns = hls::admissible_linear_entries(h.basis(), s).size();
    std::vector<Vec> rows;
    for (const auto& m : maps) rows.push_back(hlstest::flatten_linear(h, s, m));
    return Subspace::span(unknowns, rows);
}

}  // namespace

TEST_CASE("sl2 biderivations: 27 unknowns cut down to the bracket line") {
    auto h = hls::zoo_get("sl2");
    auto space = hls::biderivation_space(h, Parity::Even);
    CHECK(space.unknowns == 27);
    CHECK(space.constraint_rank == 26);
    REQUIRE(space.dim() == 1);

    // the single basis map is a multiple of the bracket itself
    auto line = span_of_bilinear(h, Parity::Even, space.basis);
    Vec bracket_flat = hlstest::flatten_bilinear(h, Parity::Even,
                                                 GradedBilinearMap::unchecked(
                                                     Parity::Even, h.bracket().tensor()));
    CHECK(line.member(bracket_flat));

    // no odd directions exist on a purely even algebra
    auto odd = hls::biderivation_space(h, Parity::Odd);
    CHECK(odd.unknowns == 0);
    CHECK(odd.dim() == 0);
}

TEST_CASE("sl2 centroid and commuting maps are scalars") {
    auto h = hls::zoo_get("sl2");
    auto cent = hls::centroid_space(h, Parity::Even);
    CHECK(cent.unknowns == 9);
    CHECK(cent.constraint_rank == 8);
    REQUIRE(cent.dim() == 1);
    CHECK(cent.basis.front().matrix().is_identity());

    auto comm = hls::commuting_map_space(h);
    REQUIRE(comm.dim() == 1);
    CHECK(comm.basis.front().matrix().is_identity());

    CHECK(hls::centroid_space(h, Parity::Odd).dim() == 0);
}

TEST_CASE("twisted sl2 centroid is spanned by the twist map") {
    auto h = hls::zoo_get("sl2_twist", {{"lambda", Rational(2)}});
    auto cent = hls::centroid_space(h, Parity::Even);
    REQUIRE(cent.dim() == 1);
    CHECK(cent.basis.front().matrix() == h.alpha().matrix());

    auto comm = hls::commuting_map_space(h);
    REQUIRE(comm.dim() == 1);
    CHECK(comm.basis.front().matrix().is_identity());

    auto bid = hls::biderivation_space(h, Parity::Even);
    REQUIRE(bid.dim() == 1);
    auto line = span_of_bilinear(h, Parity::Even, bid.basis);
    CHECK(line.member(hlstest::flatten_bilinear(
        h, Parity::Even,
        GradedBilinearMap::unchecked(Parity::Even, h.bracket().tensor()))));
}

TEST_CASE("abelian 1|1 spaces by pure parity counting") {
    auto h = hls::zoo_get("abelian", {{"m", Rational(1)}, {"n", Rational(1)}});

    auto skew = hls::biderivation_space(h, Parity::Even, SymmetryConvention::Skew);
    CHECK(skew.unknowns == 4);
    CHECK(skew.dim() == 2);

    auto printed = hls::biderivation_space(h, Parity::Even, SymmetryConvention::Printed);
    CHECK(printed.dim() == 2);
    // same dimension, different spaces: the conventions disagree on the
    // diagonal entries
    CHECK(span_of_bilinear(h, Parity::Even, skew.basis) !=
          span_of_bilinear(h, Parity::Even, printed.basis));

    CHECK(hls::biderivation_space(h, Parity::Odd).dim() == 2);
    CHECK(hls::centroid_space(h, Parity::Even).dim() == 2);
    CHECK(hls::centroid_space(h, Parity::Odd).dim() == 2);
    CHECK(hls::commuting_map_space(h).dim() == 2);
}

TEST_CASE("heis3 commuting maps and centroid have the classical dimensions") {
    auto h = hls::zoo_get("heis3");
    // d must fix the scalar on the span of x, y, may move anything into z
    CHECK(hls::commuting_map_space(h).dim() == 4);
    // centroid: one scalar plus two maps into the center
    CHECK(hls::centroid_space(h, Parity::Even).dim() == 3);
    // no odd maps exist on a purely even algebra
    CHECK(hls::centroid_space(h, Parity::Odd).unknowns == 0);
    CHECK(hls::biderivation_space(h, Parity::Odd).unknowns == 0);
}

TEST_CASE("odd_heis commuting maps are the even diagonal") {
    auto h = hls::zoo_get("odd_heis");
    auto comm = hls::commuting_map_space(h);
    CHECK(comm.unknowns == 2);
    CHECK(comm.constraint_rank == 0);
    CHECK(comm.dim() == 2);
}

TEST_CASE("every solver basis element satisfies the defining residuals") {
    for (const auto& entry : hls::zoo_catalog()) {
        auto h = hls::zoo_get(entry.name);
        for (Parity s : {Parity::Even, Parity::Odd}) {
            for (SymmetryConvention conv :
                 {SymmetryConvention::Skew, SymmetryConvention::Printed}) {
                auto space = hls::biderivation_space(h, s, conv);
                for (const auto& phi : space.basis) {
                    auto rep = hls::biderivation_residuals(h, phi, conv);
                    CHECK(rep.passed());
                    CHECK(rep.witnesses.empty());
                }
            }
            auto cent = hls::centroid_space(h, s);
            for (const auto& delta : cent.basis) {
                auto rep = hls::centroid_residuals(h, delta);
                CHECK(rep.passed());
            }
        }
        for (const auto& d : hls::commuting_map_space(h).basis) {
            auto rep = hls::commuting_residuals(h, d);
            CHECK(rep.passed());
        }
    }
}

TEST_CASE("residual evaluators reject non-members") {
    auto h = hls::zoo_get("sl2");
    // phi(h,h) = e is not a biderivation
    hls::Tensor3 t(3);
    t.at(0, 0, 1) = Rational(1);
    auto phi = GradedBilinearMap::unchecked(Parity::Even, t);
    auto rep = hls::biderivation_residuals(h, phi, SymmetryConvention::Skew);
    CHECK(!rep.passed());
    CHECK(!rep.witnesses.empty());

    // d = diag(1,0,0) does not commute with the bracket
    hls::Matrix m(3, 3);
    m.at(0, 0) = Rational(1);
    auto d = GradedLinearMap::unchecked(Parity::Even, m);
    CHECK(!hls::commuting_residuals(h, d).passed());
    CHECK(!hls::centroid_residuals(h, d).passed());
}

TEST_CASE("solver and fraction-free probe assembly agree") {
    for (const char* name : {"abelian", "heis3", "odd_heis", "sl2"}) {
        auto h = hls::zoo_get(name);
        for (Parity s : {Parity::Even, Parity::Odd}) {
            auto space = hls::biderivation_space(h, s);
            auto probe = hlstest::probe_biderivation_rows(h, s, SymmetryConvention::Skew);
            auto ff = hlstest::fraction_free_solve(probe);
            CHECK(ff.rank == space.constraint_rank);
            CHECK(ff.nullspace.size() == space.dim());
            CHECK(Subspace::span(space.unknowns, hlstest::to_vecs(ff.nullspace)) ==
                  span_of_bilinear(h, s, space.basis));

            auto cent = hls::centroid_space(h, s);
            auto cff = hlstest::fraction_free_solve(hlstest::probe_centroid_rows(h, s));
            CHECK(cff.rank == cent.constraint_rank);
            CHECK(Subspace::span(cent.unknowns, hlstest::to_vecs(cff.nullspace)) ==
                  span_of_linear(h, s, cent.basis));
        }
        auto comm = hls::commuting_map_space(h);
        auto kff = hlstest::fraction_free_solve(hlstest::probe_commuting_rows(h));
        CHECK(kff.rank == comm.constraint_rank);
        CHECK(Subspace::span(comm.unknowns, hlstest::to_vecs(kff.nullspace)) ==
              span_of_linear(h, Parity::Even, comm.basis));
    }
}

TEST_CASE("space dimensions are invariant across twist parameters") {
    std::vector<std::size_t> dims;
    for (const Rational& lambda :
         {Rational(2), Rational(3), Rational(-1), Rational(1, 2)}) {
        auto h = hls::zoo_get("sl2_twist", {{"lambda", lambda}});
        std::vector<std::size_t> d{hls::biderivation_space(h, Parity::Even).dim(),
                                   hls::centroid_space(h, Parity::Even).dim(),
                                   hls::commuting_map_space(h).dim()};
        if (dims.empty()) {
            dims = d;
        } else {
            CHECK(dims == d);
        }
    }
    CHECK(dims == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("biderivation solver requires an invertible twist map") {
    auto heis = hls::zoo_get("heis3");
    auto alpha = GradedLinearMap::unchecked(Parity::Even, hls::Matrix(3, 3));
    auto h = HomLieSuperalgebra::create("degenerate", heis.basis(), heis.bracket(),
                                        alpha);
    CHECK_THROWS_AS(hls::biderivation_space(h, Parity::Even), hls::PreconditionError);
}

TEST_CASE("flatten rejects maps with non-admissible support") {
    auto h = hls::zoo_get("odd_heis");
    hls::Matrix m(2, 2);
    m.at(1, 0) = Rational(1);  // odd entry in an even map
    auto bad = GradedLinearMap::unchecked(Parity::Even, m);
    CHECK_THROWS(hlstest::flatten_linear(h, Parity::Even, bad));
}
