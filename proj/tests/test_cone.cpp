#include "toric/cone.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace toric;

namespace {

IntVec v3(long long a, long long b, long long c) { return {Int(a), Int(b), Int(c)}; }
IntVec v2(long long a, long long b) { return {Int(a), Int(b)}; }

Cone square_cone()
{
    return build_cone(3, {v3(0, 0, 1), v3(1, 0, 1), v3(1, 1, 1), v3(0, 1, 1)});
}

std::set<IntVec> as_set(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("octant: self-dual, simplicial")
{
    const Cone c = build_cone(3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
    CHECK(c.facet_normals.size() == 3);
    CHECK(as_set(c.facet_normals) == as_set({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}));
    CHECK(c.two_face_pairs.size() == 3);
    CHECK(is_smooth_in_codim2(c));
    CHECK(is_smooth_in_codim3(c));
}

TEST_CASE("square cone: facets, 2-faces, smoothness")
{
    const Cone c = square_cone();
    CHECK(as_set(c.facet_normals) ==
          as_set({v3(0, 1, 0), v3(-1, 0, 1), v3(0, -1, 1), v3(1, 0, 0)}));
    // adjacent corners only
    std::set<std::pair<size_t, size_t>> faces(c.two_face_pairs.begin(), c.two_face_pairs.end());
    CHECK(faces == std::set<std::pair<size_t, size_t>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(is_smooth_in_codim2(c));
    // each facet normal pairs to zero on exactly one edge of the square
    for (const auto& u : c.facet_normals) {
        size_t zeros = 0;
        for (const auto& g : c.generators) {
            CHECK(dot(g, u) >= 0);
            if (dot(g, u) == 0)
                ++zeros;
        }
        CHECK(zeros == 2);
    }
}

TEST_CASE("line through the origin is rejected")
{
    CHECK_THROWS_WITH_AS((void)build_cone(2, {v2(1, 0), v2(-1, 0)}),
                         doctest::Contains("line"), Error);
}

TEST_CASE("empty and zero inputs are rejected")
{
    CHECK_THROWS_AS((void)build_cone(2, {}), Error);
    CHECK_THROWS_AS((void)build_cone(2, {v2(0, 0)}), Error);
}

TEST_CASE("redundant generators are dropped, input order kept")
{
    const Cone c = build_cone(3, {v3(0, 0, 1), v3(1, 0, 1), v3(1, 1, 2), v3(1, 1, 1), v3(0, 1, 1)});
    CHECK(c.generators ==
          std::vector<IntVec>{v3(0, 0, 1), v3(1, 0, 1), v3(1, 1, 1), v3(0, 1, 1)});
    CHECK(c.dropped == std::vector<IntVec>{v3(1, 1, 2)});
}

TEST_CASE("duals of 2-dimensional cones")
{
    const Cone c = build_cone(2, {v2(1, 0), v2(1, 2)});
    const DualCone d = dual_cone(c);
    CHECK(d.rays == std::vector<IntVec>{v2(0, 1), v2(2, -1)});
    CHECK(two_faces(c).empty());
}

TEST_CASE("dual of dual returns the primitive rays")
{
    for (const Cone& c :
         {square_cone(), build_cone(3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}),
          build_cone(2, {v2(1, 0), v2(1, 4)})}) {
        const Cone dd = build_cone(c.rank, dual_cone(c).rays);
        CHECK(as_set(dual_cone(dd).rays) == as_set(c.generators));
    }
}

TEST_CASE("codimension-2 smoothness fails on the doubled triangle")
{
    const Cone c = build_cone(3, {v3(0, 0, 1), v3(2, 0, 1), v3(0, 2, 1)});
    CHECK_FALSE(is_smooth_in_codim2(c));
    CHECK(is_smooth_in_codim3(c));  // no proper 3-faces: vacuous
}

TEST_CASE("smoothness is invariant under unimodular coordinate changes")
{
    const std::vector<IntMatrix> gl = {
        IntMatrix::from_rows({{Int(1), Int(1), Int(0)}, {Int(0), Int(1), Int(0)},
                              {Int(0), Int(0), Int(1)}}),
        IntMatrix::from_rows({{Int(0), Int(1), Int(0)}, {Int(1), Int(0), Int(0)},
                              {Int(1), Int(1), Int(1)}}),
        IntMatrix::from_rows({{Int(1), Int(0), Int(0)}, {Int(2), Int(1), Int(0)},
                              {Int(-1), Int(3), Int(-1)}}),
    };
    for (const Cone& c : {square_cone(), build_cone(3, {v3(0, 0, 1), v3(2, 0, 1), v3(0, 2, 1)})}) {
        const bool smooth = is_smooth_in_codim2(c);
        for (const auto& M : gl) {
            REQUIRE(abs(determinant(M)) == 1);
            std::vector<IntVec> gens;
            for (const auto& g : c.generators)
                gens.push_back(M * g);
            CHECK(is_smooth_in_codim2(build_cone(3, gens)) == smooth);
        }
    }
}

TEST_CASE("2-face span test: returned pairs really span 2-dimensional faces")
{
    const Cone c = square_cone();
    for (const auto& [i, j] : c.two_face_pairs) {
        CHECK(rank(IntMatrix::from_rows({c.generators[i], c.generators[j]})) == 2);
        // some facet-normal subset vanishes exactly on this pair
        std::vector<size_t> common;
        for (size_t f = 0; f < c.facet_normals.size(); ++f)
            if (dot(c.generators[i], c.facet_normals[f]) == 0 &&
                dot(c.generators[j], c.facet_normals[f]) == 0)
                common.push_back(f);
        CHECK(!common.empty());
    }
}

TEST_CASE("pairing")
{
    CHECK(pairing(v2(1, 2), v2(3, 4)) == 11);
    CHECK(pairing(v3(0, 0, 1), v3(0, 0, 1)) == 1);
    CHECK_THROWS_AS((void)pairing(v2(1, 2), v3(1, 2, 3)), Error);
}

TEST_CASE("proper 3-faces of a 4-dimensional cone")
{
    // cone over a 3-cube at height 1: the proper 3-faces are the 6 cube facets
    std::vector<IntVec> gens;
    for (long long x = 0; x <= 1; ++x)
        for (long long y = 0; y <= 1; ++y)
            for (long long z = 0; z <= 1; ++z)
                gens.push_back({Int(x), Int(y), Int(z), Int(1)});
    const Cone c = build_cone(4, gens);
    const auto faces = proper_three_faces(c);
    CHECK(faces.size() == 6);
    for (const auto& f : faces)
        CHECK(f.size() == 4);
    CHECK(is_smooth_in_codim2(c));
    CHECK_FALSE(is_smooth_in_codim3(c));  // square facets are not simplicial
}
