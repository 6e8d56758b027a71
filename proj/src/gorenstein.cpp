#include "toric/gorenstein.hpp"

#include <algorithm>

namespace toric {

namespace {

Int cross2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

std::vector<IntVec> LatticePolygon::edges() const
{
    std::vector<IntVec> d;
    const size_t N = vertices.size();
    for (size_t i = 0; i < N; ++i)
        d.push_back(vertices[(i + 1) % N] - vertices[i]);
    return d;
}

bool LatticePolygon::primitive_edges() const
{
    for (const auto& d : edges())
        if (!is_primitive(d))
            return false;
    return true;
}

LatticePolygon make_polygon(const std::vector<IntVec>& vertices)
{
    if (vertices.size() < 3)
        fail(ErrorKind::InputError, "polygon: need at least 3 vertices");
    for (const auto& v : vertices)
        if (v.size() != 2)
            fail(ErrorKind::InputError, "polygon: vertices must be 2-dimensional");
    const size_t N = vertices.size();
    for (size_t i = 0; i < N; ++i)
        if (vertices[i] == vertices[(i + 1) % N])
            fail(ErrorKind::InputError, "polygon: repeated vertex " + std::to_string(i));

    // Strict convex position, counterclockwise: every other vertex lies
    // strictly left of each directed edge.
    Int orient = 0;
    for (size_t i = 0; i < N; ++i) {
        const IntVec e = vertices[(i + 1) % N] - vertices[i];
        for (size_t k = 0; k < N; ++k) {
            if (k == i || k == (i + 1) % N)
                continue;
            const Int c = cross2(e, vertices[k] - vertices[i]);
            if (c == 0)
                fail(ErrorKind::InputError,
                     "polygon: not strictly convex at vertex " + std::to_string(k));
            if (orient == 0)
                orient = c > 0 ? 1 : -1;
            else if ((c > 0 ? 1 : -1) != (orient > 0 ? 1 : -1))
                fail(ErrorKind::InputError, "polygon: not convex at vertex " + std::to_string(k));
        }
    }
    if (orient < 0)
        fail(ErrorKind::InputError, "polygon: vertices are in clockwise order");

    LatticePolygon Q;
    Q.vertices = vertices;
    return Q;
}

GorensteinContext cone_from_polygon(const LatticePolygon& Q)
{
    std::vector<IntVec> gens;
    for (const auto& v : Q.vertices)
        gens.push_back({v[0], v[1], Int(1)});
    GorensteinContext ctx;
    ctx.Q = Q;
    ctx.cone = build_cone(3, gens);
    assert(ctx.cone.generators == gens);  // strictly convex vertices stay extreme
    ctx.hb = hilbert_basis(ctx.cone);
    ctx.Rstar = {Int(0), Int(0), Int(1)};
    return ctx;
}

SummandSpace summand_space(const LatticePolygon& Q)
{
    const auto d = Q.edges();
    const size_t N = d.size();
    RatMatrix A(2, N);
    for (size_t i = 0; i < N; ++i) {
        A(0, i) = Rat(d[i][0]);
        A(1, i) = Rat(d[i][1]);
    }
    SummandSpace ss;
    ss.V = kernel_space(A);
    ss.one = RatVec(N, Rat(1));
    assert(ss.V.dim() == N - 2);
    assert(ss.V.contains(ss.one));
    return ss;
}

Rat psi_pairing(const LatticePolygon& Q, const HilbertBasis& hb, const RatVec& t, const IntVec& e)
{
    if (hb.index_of(e) == size_t(-1))
        fail(ErrorKind::InputError, "psi_pairing: element is not in the Hilbert basis");
    const IntVec c = {e[0], e[1]};
    if (is_zero(c))
        return 0;
    const size_t N = Q.size();
    size_t wall = N;
    for (size_t i = 0; i < N; ++i) {
        if (dot(Q.vertices[i], c) + e[2] == 0) {
            wall = i;
            break;
        }
    }
    if (wall == N)
        fail(ErrorKind::InputError, "psi_pairing: element has no maximizing vertex");
    const auto d = Q.edges();
    Rat val = 0;
    for (size_t v = 0; v < wall; ++v)
        val += t[v] * Rat(-dot(d[v], c));
    return val;
}

T1Element t1_iso_image(const GorensteinContext& ctx, const DegreeData& dd_Rstar, const RatVec& t)
{
    const size_t w = ctx.hb.size();
    RatVec cov(w, Rat(0));
    for (size_t v : dd_Rstar.E0)
        cov[v] = psi_pairing(ctx.Q, ctx.hb, t, ctx.hb.E[v]);

    for (const auto& b : dd_Rstar.Lsum.basis())
        if (dot(cov, b) != 0)
            fail(ErrorKind::IsoCheckFailed,
                 "t1_iso: functional does not vanish on the sum of the L(E_i)");

    RatVec vals(dd_Rstar.L0.dim());
    for (size_t b = 0; b < vals.size(); ++b)
        vals[b] = dot(cov, dd_Rstar.L0.basis()[b]);
    return T1Element{dd_Rstar.R, vals};
}

void validate_t1_iso(const GorensteinContext& ctx, const DegreeData& dd_Rstar)
{
    const size_t N = ctx.Q.size();
    const SummandSpace ss = summand_space(ctx.Q);
    const T1Piece t1 = t1_piece(dd_Rstar);
    if (t1.dim != N - 3)
        fail(ErrorKind::IsoCheckFailed, "t1_iso: machinery dimension is not N-3");

    const T1Element img_one = t1_iso_image(ctx, dd_Rstar, ss.one);
    if (!img_one.is_zero())
        fail(ErrorKind::IsoCheckFailed, "t1_iso: the all-ones summand does not map to zero");

    const Space line(N, {ss.one});
    const std::vector<RatVec> comp = complement_in(line, ss.V);
    std::vector<RatVec> images;
    for (const auto& t : comp)
        images.push_back(t1_iso_image(ctx, dd_Rstar, t).vals);
    if (comp.empty())
        return;
    if (Space(dd_Rstar.L0.dim(), images).dim() != N - 3)
        fail(ErrorKind::IsoCheckFailed, "t1_iso: map is not injective modulo the all-ones line");
}

Int diameter(const LatticePolygon& Q, const IntVec& c)
{
    if (is_zero(c))
        fail(ErrorKind::ZeroVector, "diameter: zero direction");
    Int mx = dot(Q.vertices[0], c), mn = mx;
    for (const auto& v : Q.vertices) {
        const Int h = dot(v, c);
        mx = std::max(mx, h);
        mn = std::min(mn, h);
    }
    return mx - mn;
}

std::pair<Int, Int> k_thresholds(const LatticePolygon& Q)
{
    // Diameter growth bound: d(c) >= ||G c||_inf >= ||c||_inf |det G| / A,
    // where G stacks two independent edge chords and A bounds the adjugate.
    const IntVec g1 = Q.vertices[1] - Q.vertices[0];
    const IntVec g2 = Q.vertices[2] - Q.vertices[0];
    const Int det = abs(cross2(g1, g2));
    assert(det != 0);
    const Int adj_bound = std::max(abs(g2[1]) + abs(g1[1]), abs(g2[0]) + abs(g1[0]));

    Int best1 = 0, best2 = 0;  // two smallest diameters over distinct directions
    bool have1 = false, have2 = false;
    for (Int m = 1;; ++m) {
        if (have2 && m * det > best2 * adj_bound)
            break;
        for (Int x = -m; x <= m; ++x)
            for (Int y = -m; y <= m; ++y) {
                if (std::max(abs(x), abs(y)) != m)
                    continue;
                IntVec c = {x, y};
                // canonical representative of the +-c pair
                if (c[0] < 0 || (c[0] == 0 && c[1] < 0))
                    continue;
                if (gcd(x, y) != 1)
                    continue;
                const Int dc = diameter(Q, c);
                if (!have1 || dc < best1) {
                    if (have1) {
                        best2 = best1;
                        have2 = have1;
                    }
                    best1 = dc;
                    have1 = true;
                } else if (!have2 || dc < best2) {
                    best2 = dc;
                    have2 = true;
                }
            }
    }
    assert(have1 && have2);
    return {best1, best2};
}

size_t t2_dim_closed_form(const Int& k1, const Int& k2, const Int& k)
{
    if (k < 2)
        fail(ErrorKind::InputError, "t2_dim_closed_form: defined for k >= 2 only");
    if (k <= k1)
        return 2;
    if (k <= k2)
        return 1;
    return 0;
}

T2Embedding t2_embedding(const GorensteinContext& ctx, const DegreeData& dd_k)
{
    std::vector<size_t> inter;
    if (!dd_k.Ei.empty()) {
        inter = dd_k.Ei[0];
        for (size_t i = 1; i < dd_k.Ei.size(); ++i) {
            std::vector<size_t> next;
            std::set_intersection(inter.begin(), inter.end(), dd_k.Ei[i].begin(),
                                  dd_k.Ei[i].end(), std::back_inserter(next));
            inter = std::move(next);
        }
    }
    std::vector<RatVec> vecs;
    for (size_t v : inter)
        vecs.push_back(to_rat(ctx.hb.E[v]));

    T2Embedding emb;
    emb.span_intersection = Space(3, vecs);
    emb.dim = 3 - emb.span_intersection.dim();
    if (emb.span_intersection.dim() == 0) {
        emb.annihilator2 = Space(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    } else {
        RatMatrix A(emb.span_intersection.dim(), 2);
        for (size_t r = 0; r < emb.span_intersection.dim(); ++r) {
            A(r, 0) = emb.span_intersection.basis()[r][0];
            A(r, 1) = emb.span_intersection.basis()[r][1];
        }
        emb.annihilator2 = kernel_space(A);
    }
    return emb;
}

RatVec cup_closed_form(const LatticePolygon& Q, const RatVec& s, const RatVec& t)
{
    const SummandSpace ss = summand_space(Q);
    if (!ss.V.contains(s) || !ss.V.contains(t))
        fail(ErrorKind::InputError, "cup_closed_form: inputs must satisfy sum t_i d^i = 0");
    const auto d = Q.edges();
    RatVec out(2, Rat(0));
    for (size_t i = 0; i < d.size(); ++i) {
        out[0] += s[i] * t[i] * Rat(d[i][0]);
        out[1] += s[i] * t[i] * Rat(d[i][1]);
    }
    return out;
}

std::optional<RatVec> bridged_vector(const GorensteinContext& ctx, const DegreeData& dd,
                                     const T2Element& t2)
{
    const size_t N = ctx.cone.num_generators();
    const SpanCocycle sc = zigzag_bridge(t2, dd);

    // Orientation signs from the boundary cycle 0 -> 1 -> ... -> N-1 -> 0 of
    // the cross-section polygon, against the stored (i < j) pair convention.
    std::vector<int> eps(dd.faces.size(), 0);
    for (size_t f = 0; f < dd.faces.size(); ++f) {
        const auto [i, j] = dd.faces[f];
        if (j == i + 1)
            eps[f] = 1;  // traversed i -> i+1
        else if (i == 0 && j == N - 1)
            eps[f] = -1;  // wrap edge traversed N-1 -> 0
        else
            fail(ErrorKind::InputError, "bridged_vector: unexpected 2-face structure");
    }

    std::vector<Space> spans;
    for (size_t f = 0; f < dd.faces.size(); ++f)
        spans.push_back(face_span(dd, f));

    auto lambda = [&](const IntVec& m) -> std::optional<Rat> {
        Rat val = 0;
        const RatVec mr = to_rat(m);
        for (size_t f = 0; f < dd.faces.size(); ++f) {
            if (!spans[f].contains(mr))
                return std::nullopt;
            val += Rat(eps[f]) * dot(sc.theta[f], spans[f].coords(mr));
        }
        return val;
    };

    const auto lx = lambda({Int(1), Int(0), Int(0)});
    const auto ly = lambda({Int(0), Int(1), Int(0)});
    const auto lz = lambda(ctx.Rstar);
    if (!lx || !ly || !lz)
        return std::nullopt;
    assert(*lz == 0);  // the class kills R*, which lies in every face span here
    return RatVec{*lx, *ly};
}

CrossValidateReport cross_validate(const GorensteinContext& ctx, const Int& kmax)
{
    CrossValidateReport rep;
    const auto [k1, k2] = k_thresholds(ctx.Q);

    bool all = true;
    for (Int k = 2; k <= kmax; ++k) {
        const IntVec R = {Int(0), Int(0), k};
        const DegreeData dd = degree_data(ctx.cone, ctx.hb, R);
        CrossValidateEntry e;
        e.k = k;
        e.closed_form = t2_dim_closed_form(k1, k2, k);
        e.machinery = t2_piece(dd).dim;
        e.embedding = t2_embedding(ctx, dd).dim;
        e.match = e.closed_form == e.machinery;
        all = all && e.match;
        rep.dims.push_back(e);
    }

    // Cup comparison at -2R*.
    if (!is_smooth_in_codim2(ctx.cone)) {
        rep.cup_skip_reason = "cone is not smooth in codimension 2";
    } else {
        try {
            const DegreeData dd_R = degree_data(ctx.cone, ctx.hb, ctx.Rstar);
            validate_t1_iso(ctx, dd_R);
            const DegreeData dd_T =
                degree_data(ctx.cone, ctx.hb, {Int(0), Int(0), Int(2)});
            const SummandSpace ss = summand_space(ctx.Q);
            const Space line(ctx.Q.size(), {ss.one});
            const std::vector<RatVec> basis = complement_in(line, ss.V);
            const SectionPhi Phi(ctx.cone, ctx.hb);
            rep.cup_comparison_ran = true;
            for (size_t a = 0; a < basis.size(); ++a) {
                const T1Element phi = t1_iso_image(ctx, dd_R, basis[a]);
                for (size_t b = a; b < basis.size(); ++b) {
                    const T1Element psi = t1_iso_image(ctx, dd_R, basis[b]);
                    const T2Element general = cup(dd_R, dd_R, dd_T, Phi, phi, psi);
                    CupCompareEntry ce;
                    ce.s_index = a;
                    ce.t_index = b;
                    ce.closed_form = cup_closed_form(ctx.Q, basis[a], basis[b]);
                    const auto bridged = bridged_vector(ctx, dd_T, general);
                    if (bridged) {
                        ce.general = *bridged;
                        ce.match = ce.general == ce.closed_form;
                    } else {
                        ce.match = false;
                    }
                    all = all && ce.match;
                    rep.cups.push_back(std::move(ce));
                }
            }
        } catch (const Error& err) {
            rep.cup_skip_reason = err.what();
            rep.cup_comparison_ran = false;
        }
    }
    if (!rep.cup_comparison_ran && rep.cup_skip_reason.empty())
        rep.cup_skip_reason = "unknown";
    rep.all_match = all && rep.cup_comparison_ran;
    return rep;
}

VersalReport versal_equations(const LatticePolygon& Q, const Int& kmax)
{
    VersalReport rep;
    const auto d = Q.edges();
    for (Int k = 1; k <= kmax; ++k)
        rep.equations.push_back(VersalEquation{k, d});

    // Degree-1 part cuts out exactly the summand space.
    const SummandSpace ss = summand_space(Q);
    RatMatrix A(2, d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        A(0, i) = Rat(d[i][0]);
        A(1, i) = Rat(d[i][1]);
    }
    rep.linear_part_cuts_V = kernel_space(A) == ss.V;

    // Degree-2 part is the quadratic form of the closed-form cup product.
    bool quad = true;
    for (const auto& t : ss.V.basis()) {
        const RatVec viaCup = cup_closed_form(Q, t, t);
        RatVec direct(2, Rat(0));
        for (size_t i = 0; i < d.size(); ++i) {
            direct[0] += t[i] * t[i] * Rat(d[i][0]);
            direct[1] += t[i] * t[i] * Rat(d[i][1]);
        }
        quad = quad && viaCup == direct;
    }
    rep.quadratic_part_matches_cup = quad;
    return rep;
}

}  // namespace toric
