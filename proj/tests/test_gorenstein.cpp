#include "toric/gorenstein.hpp"

#include <doctest.h>

using namespace toric;

namespace {

IntVec v2(long long a, long long b) { return {Int(a), Int(b)}; }
IntVec v3(long long a, long long b, long long c) { return {Int(a), Int(b), Int(c)}; }

LatticePolygon square_poly()
{
    return make_polygon({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)});
}

LatticePolygon triangle_poly() { return make_polygon({v2(0, 0), v2(1, 0), v2(0, 1)}); }

LatticePolygon hexagon_poly()
{
    return make_polygon({v2(0, 0), v2(1, 0), v2(2, 1), v2(2, 2), v2(1, 2), v2(0, 1)});
}

LatticePolygon rect_poly()
{
    return make_polygon({v2(0, 0), v2(1, 0), v2(1, 3), v2(0, 3)});
}

LatticePolygon pentagon_poly()
{
    return make_polygon({v2(0, 0), v2(1, 0), v2(2, 1), v2(1, 2), v2(0, 1)});
}

const GorensteinContext& hexagon_ctx()
{
    static GorensteinContext ctx = cone_from_polygon(hexagon_poly());
    return ctx;
}

}  // namespace

TEST_CASE("polygon validation")
{
    CHECK_THROWS_WITH_AS((void)make_polygon({v2(0, 0), v2(2, 0), v2(1, 1), v2(2, 2), v2(0, 2)}),
                         doctest::Contains("convex"), Error);
    CHECK_THROWS_WITH_AS((void)make_polygon({v2(0, 0), v2(0, 1), v2(1, 0)}),
                         doctest::Contains("clockwise"), Error);
    CHECK_THROWS_AS((void)make_polygon({v2(0, 0), v2(1, 0)}), Error);
    // collinear boundary points are rejected as not strictly convex
    CHECK_THROWS_AS((void)make_polygon({v2(0, 0), v2(1, 0), v2(2, 0), v2(0, 1)}), Error);
    CHECK(square_poly().primitive_edges());
    CHECK_FALSE(rect_poly().primitive_edges());
}

TEST_CASE("cone from polygon")
{
    {
        const GorensteinContext ctx = cone_from_polygon(triangle_poly());
        CHECK(ctx.cone.num_generators() == 3);
        // unimodular image of the octant
        const auto d = smith_normal_form(IntMatrix::from_rows(ctx.cone.generators));
        for (size_t k = 0; k < 3; ++k)
            CHECK(d.S(k, k) == 1);
    }
    {
        const auto& ctx = hexagon_ctx();
        CHECK(ctx.cone.num_generators() == 6);
        for (const auto& g : ctx.cone.generators)
            CHECK(dot(g, ctx.Rstar) == 1);
    }
}

TEST_CASE("summand spaces")
{
    {
        const SummandSpace ss = summand_space(square_poly());
        CHECK(ss.V.dim() == 2);
        CHECK(ss.V.contains({Rat(1), Rat(0), Rat(1), Rat(0)}));
        CHECK(ss.V.contains(ss.one));
    }
    CHECK(summand_space(triangle_poly()).V.dim() == 1);
    CHECK(summand_space(hexagon_poly()).V.dim() == 4);
    CHECK(summand_space(rect_poly()).V.dim() == 2);
}

TEST_CASE("psi pairing: the stated values")
{
    {
        const auto& ctx = hexagon_ctx();
        // on the all-ones summand, psi reads off the height coordinate of
        // every boundary element; the apex direction is sent to 0 by fiat
        const RatVec one(ctx.Q.size(), Rat(1));
        for (const auto& e : ctx.hb.E) {
            if (e == ctx.Rstar)
                continue;
            CHECK(psi_pairing(ctx.Q, ctx.hb, one, e) == Rat(e[2]));
        }
        CHECK(psi_pairing(ctx.Q, ctx.hb, one, ctx.Rstar) == 0);
    }
    {
        const GorensteinContext ctx = cone_from_polygon(square_poly());
        const RatVec t = {Rat(1), Rat(0), Rat(1), Rat(0)};
        CHECK(psi_pairing(ctx.Q, ctx.hb, t, v3(-1, 0, 1)) == 1);
        CHECK_THROWS_AS((void)psi_pairing(ctx.Q, ctx.hb, t, v3(7, 7, 7)), Error);
    }
}

TEST_CASE("t1 iso validates on the fixtures")
{
    for (const LatticePolygon& q : {triangle_poly(), square_poly(), hexagon_poly(), rect_poly()}) {
        const GorensteinContext ctx = cone_from_polygon(q);
        const DegreeData dd = degree_data(ctx.cone, ctx.hb, ctx.Rstar);
        CHECK_NOTHROW(validate_t1_iso(ctx, dd));
        // the all-ones vector maps to the zero functional
        const SummandSpace ss = summand_space(q);
        CHECK(t1_iso_image(ctx, dd, ss.one).is_zero());
    }
}

TEST_CASE("diameters")
{
    CHECK(diameter(square_poly(), v2(1, 0)) == 1);
    CHECK(diameter(hexagon_poly(), v2(1, 0)) == 2);
    CHECK(diameter(hexagon_poly(), v2(1, -1)) == 2);
    CHECK_THROWS_AS((void)diameter(square_poly(), v2(0, 0)), Error);
}

TEST_CASE("threshold minima")
{
    {
        const auto [k1, k2] = k_thresholds(square_poly());
        CHECK(k1 == 1);
        CHECK(k2 == 1);
    }
    {
        const auto [k1, k2] = k_thresholds(hexagon_poly());
        CHECK(k1 == 2);
        CHECK(k2 == 2);
    }
    {
        const auto [k1, k2] = k_thresholds(rect_poly());
        CHECK(k1 == 1);
        CHECK(k2 == 3);
    }
}

TEST_CASE("closed-form obstruction dimensions")
{
    CHECK(t2_dim_closed_form(Int(2), Int(2), Int(2)) == 2);
    CHECK(t2_dim_closed_form(Int(2), Int(2), Int(3)) == 0);
    CHECK(t2_dim_closed_form(Int(1), Int(3), Int(2)) == 1);
    CHECK(t2_dim_closed_form(Int(1), Int(3), Int(4)) == 0);
    CHECK_THROWS_AS((void)t2_dim_closed_form(Int(1), Int(1), Int(1)), Error);
}

TEST_CASE("embedding of the obstruction space")
{
    {
        const auto& ctx = hexagon_ctx();
        const DegreeData dd = degree_data(ctx.cone, ctx.hb, v3(0, 0, 2));
        const T2Embedding emb = t2_embedding(ctx, dd);
        CHECK(emb.span_intersection.dim() == 1);
        CHECK(emb.span_intersection.contains({Rat(0), Rat(0), Rat(1)}));
        CHECK(emb.dim == 2);
        CHECK(emb.annihilator2.dim() == 2);
    }
    {
        const GorensteinContext ctx = cone_from_polygon(square_poly());
        const DegreeData dd = degree_data(ctx.cone, ctx.hb, v3(0, 0, 2));
        const T2Embedding emb = t2_embedding(ctx, dd);
        CHECK(emb.span_intersection.dim() == 3);
        CHECK(emb.dim == 0);
    }
}

TEST_CASE("closed-form cup product")
{
    {
        const LatticePolygon q = square_poly();
        const RatVec one(4, Rat(1));
        CHECK(is_zero(cup_closed_form(q, one, one)));
        const RatVec t = {Rat(1), Rat(0), Rat(1), Rat(0)};
        CHECK(is_zero(cup_closed_form(q, t, t)));
        CHECK_THROWS_AS((void)cup_closed_form(q, {Rat(1), Rat(0), Rat(0), Rat(0)}, t), Error);
    }
    {
        // summands with equal opposite-edge factors square to zero...
        const LatticePolygon q = hexagon_poly();
        const SummandSpace ss = summand_space(q);
        RatVec sym(6, Rat(0));
        sym[0] = 1;
        sym[3] = 1;  // edges d^1 = (1,0) and d^4 = (-1,0)
        REQUIRE(ss.V.contains(sym));
        CHECK(is_zero(cup_closed_form(q, sym, sym)));
        // ...but an asymmetric one does not
        const RatVec t = {Rat(1), Rat(1), Rat(0), Rat(2), Rat(0), Rat(1)};
        REQUIRE(ss.V.contains(t));
        const RatVec val = cup_closed_form(q, t, t);
        CHECK(val == RatVec{Rat(-2), Rat(0)});
        // pairing with the all-ones summand lands in the zero class
        for (const auto& b : ss.V.basis())
            CHECK(is_zero(cup_closed_form(q, ss.one, b)));
    }
}

TEST_CASE("versal equation report")
{
    const VersalReport rep = versal_equations(hexagon_poly(), Int(4));
    CHECK(rep.equations.size() == 4);
    CHECK(rep.linear_part_cuts_V);
    CHECK(rep.quadratic_part_matches_cup);
    // the square pattern: d^3 = -d^1 and d^4 = -d^2
    const VersalReport sq = versal_equations(square_poly(), Int(3));
    for (const auto& eq : sq.equations) {
        CHECK(eq.coefficients[2] == -eq.coefficients[0]);
        CHECK(eq.coefficients[3] == -eq.coefficients[1]);
    }
}

TEST_CASE("cross validation: hexagon, square, triangle all match")
{
    {
        const CrossValidateReport cv = cross_validate(hexagon_ctx(), Int(4));
        CHECK(cv.all_match);
        CHECK(cv.cup_comparison_ran);
        CHECK(cv.cups.size() == 6);
        for (const auto& e : cv.dims) {
            CHECK(e.match);
            CHECK(e.embedding == e.machinery);
        }
    }
    for (const LatticePolygon& q : {square_poly(), triangle_poly()}) {
        const CrossValidateReport cv = cross_validate(cone_from_polygon(q), Int(4));
        CHECK(cv.all_match);
        for (const auto& e : cv.dims) {
            CHECK(e.machinery == 0);
            CHECK(e.closed_form == 0);
        }
    }
}

TEST_CASE("pentagon: five edges, everything cross-validates")
{
    const LatticePolygon q = pentagon_poly();
    REQUIRE(q.primitive_edges());
    const GorensteinContext ctx = cone_from_polygon(q);
    REQUIRE(is_smooth_in_codim2(ctx.cone));

    const auto [k1, k2] = k_thresholds(q);
    CHECK(k1 == 2);
    CHECK(k2 == 2);
    CHECK(t1_piece(degree_data(ctx.cone, ctx.hb, ctx.Rstar)).dim == 2);

    const CrossValidateReport cv = cross_validate(ctx, Int(4));
    CHECK(cv.all_match);
    CHECK(cv.cup_comparison_ran);
    CHECK(cv.cups.size() == 3);
}

TEST_CASE("wide hexagon: nonzero obstruction pieces up to k = 4")
{
    // all primitive directions have diameter >= 4, so the piecewise formula
    // predicts dimension 2 at k = 2,3,4 and 0 afterwards
    const LatticePolygon q = make_polygon(
        {v2(0, 0), v2(2, 1), v2(3, 3), v2(2, 4), v2(0, 3), v2(-1, 1)});
    REQUIRE(q.primitive_edges());
    const auto [k1, k2] = k_thresholds(q);
    CHECK(k1 == 4);
    CHECK(k2 == 4);

    const GorensteinContext ctx = cone_from_polygon(q);
    CHECK(t1_piece(degree_data(ctx.cone, ctx.hb, ctx.Rstar)).dim == 3);
    const CrossValidateReport cv = cross_validate(ctx, Int(5));
    CHECK(cv.all_match);
    REQUIRE(cv.dims.size() == 4);
    for (const auto& e : cv.dims) {
        CHECK(e.match);
        CHECK(e.machinery == (e.k <= 4 ? 2 : 0));
    }
    CHECK(cv.cup_comparison_ran);
    CHECK(cv.cups.size() == 6);
}

TEST_CASE("rectangle with non-primitive edges: shortcut and machinery diverge")
{
    // The cone over the 1x3 rectangle is the hypersurface xy = (zw)^3: its
    // dependency lattice is one relation on four generators, so every
    // obstruction piece vanishes. The piecewise formula assumes primitive
    // edges and predicts (1,1,0) instead; cross-validation reports the
    // mismatch rather than hiding it.
    const GorensteinContext ctx = cone_from_polygon(rect_poly());
    CHECK(ctx.hb.size() == 4);
    const DegreeData dd2 = degree_data(ctx.cone, ctx.hb, v3(0, 0, 2));
    CHECK(dd2.LE.dim() == 1);
    CHECK_FALSE(is_smooth_in_codim2(ctx.cone));

    const CrossValidateReport cv = cross_validate(ctx, Int(4));
    REQUIRE(cv.dims.size() == 3);
    CHECK(cv.dims[0].closed_form == 1);
    CHECK(cv.dims[0].machinery == 0);
    CHECK_FALSE(cv.dims[0].match);
    CHECK(cv.dims[1].closed_form == 1);
    CHECK(cv.dims[1].machinery == 0);
    CHECK(cv.dims[2].closed_form == 0);
    CHECK(cv.dims[2].machinery == 0);
    CHECK(cv.dims[2].match);
    CHECK_FALSE(cv.all_match);
    CHECK_FALSE(cv.cup_comparison_ran);

    // the two general formulations still agree with each other
    const SpanComplexDims sp = t1_t2_via_span_complex(dd2);
    CHECK(sp.t2 == 0);
    CHECK(t2_piece(dd2).dim == 0);
}

TEST_CASE("bridge against the boundary-cycle pairing oracle")
{
    // Independent route: express r in the span of each 2-face intersection,
    // push through the boundary map, and pair with the cup cocycle. The
    // result must read off the closed-form vector.
    const auto& ctx = hexagon_ctx();
    const DegreeData dd_R = degree_data(ctx.cone, ctx.hb, ctx.Rstar);
    const DegreeData dd_T = degree_data(ctx.cone, ctx.hb, v3(0, 0, 2));
    const SectionPhi Phi(ctx.cone, ctx.hb);
    const SummandSpace ss = summand_space(ctx.Q);
    const Space line(ctx.Q.size(), {ss.one});
    const auto basis = complement_in(line, ss.V);

    const size_t N = ctx.cone.num_generators();
    const size_t w = ctx.hb.size();

    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a; b < basis.size(); ++b) {
            const T1Element phi = t1_iso_image(ctx, dd_R, basis[a]);
            const T1Element psi = t1_iso_image(ctx, dd_R, basis[b]);
            const T2Element prod = cup(dd_R, dd_R, dd_T, Phi, phi, psi);
            const RatVec closed = cup_closed_form(ctx.Q, basis[a], basis[b]);

            for (const IntVec& r : {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}) {
                // chains over the 2-faces mapping to cycles in the middle
                // term; the boundary-cycle orientation (+1 on consecutive
                // pairs, -1 on the wrap pair) makes the images cancel
                std::vector<RatVec> chain(dd_T.faces.size());
                for (size_t f = 0; f < dd_T.faces.size(); ++f) {
                    const auto [fi, fj] = dd_T.faces[f];
                    const Rat eps = (fj == fi + 1) ? Rat(1) : Rat(-1);
                    RatMatrix A(3, dd_T.Eface[f].size());
                    for (size_t k = 0; k < dd_T.Eface[f].size(); ++k)
                        for (size_t rr = 0; rr < 3; ++rr)
                            A(rr, k) = Rat(ctx.hb.E[dd_T.Eface[f][k]][rr]);
                    const auto y = solve(A, to_rat(r));
                    REQUIRE(y.has_value());
                    chain[f] = *y;
                    for (auto& c : chain[f])
                        c *= eps;
                }
                RatVec pairing_sum(1, Rat(0));
                Rat total = 0;
                for (size_t i = 0; i < N; ++i) {
                    RatVec component(w, Rat(0));
                    for (size_t f = 0; f < dd_T.faces.size(); ++f) {
                        const auto [fi, fj] = dd_T.faces[f];
                        const Rat sign = fi == i ? Rat(1) : (fj == i ? Rat(-1) : Rat(0));
                        if (sign == 0)
                            continue;
                        for (size_t k = 0; k < dd_T.Eface[f].size(); ++k)
                            component[dd_T.Eface[f][k]] += sign * chain[f][k];
                    }
                    REQUIRE(dd_T.Li[i].contains(component));
                    total += prod.eval_at(dd_T, i, component);
                }
                const Rat expected = closed[0] * Rat(r[0]) + closed[1] * Rat(r[1]);
                CHECK(total == expected);
            }
        }
}
