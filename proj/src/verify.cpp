#include "toric/verify.hpp"

#include <sstream>

namespace toric {

namespace {

// Fixed-seed generator so every verification run sees the same trials.
struct Lcg {
    uint64_t state = 0x243F6A8885A308D3ull;
    uint64_t next()
    {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    // uniform in [lo, hi]
    long long range(long long lo, long long hi)
    {
        return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
    }
};

std::string vec_str(const IntVec& v) { return to_string(v); }

struct Check {
    bool ok = true;
    std::ostringstream details;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (details.tellp() > 0)
                details << "; ";
            details << what;
        }
    }
};

IntVec scaled(const IntVec& v, const Int& k)
{
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = k * v[i];
    return r;
}

}  // namespace

LatticePolygon fixture_triangle()
{
    return make_polygon({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}});
}

LatticePolygon fixture_square()
{
    return make_polygon({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}});
}

LatticePolygon fixture_hexagon()
{
    return make_polygon({{Int(0), Int(0)},
                         {Int(1), Int(0)},
                         {Int(2), Int(1)},
                         {Int(2), Int(2)},
                         {Int(1), Int(2)},
                         {Int(0), Int(1)}});
}

LatticePolygon fixture_rectangle_1x3()
{
    return make_polygon({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(1), Int(3)}, {Int(0), Int(3)}});
}

Cone fixture_octant()
{
    return build_cone(3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)},
                          {Int(0), Int(0), Int(1)}});
}

Cone fixture_a3_cone()
{
    return build_cone(2, {{Int(1), Int(0)}, {Int(1), Int(4)}});
}

namespace {

struct Fixtures {
    std::vector<std::pair<std::string, LatticePolygon>> polygons;
    std::vector<std::pair<std::string, GorensteinContext>> contexts;

    Fixtures()
    {
        polygons = {{"triangle", fixture_triangle()},
                    {"square", fixture_square()},
                    {"hexagon", fixture_hexagon()},
                    {"rectangle_1x3", fixture_rectangle_1x3()}};
        for (const auto& [name, q] : polygons)
            contexts.push_back({name, cone_from_polygon(q)});
    }

    const GorensteinContext& ctx(const std::string& name) const
    {
        for (const auto& [n, c] : contexts)
            if (n == name)
                return c;
        fail(ErrorKind::InputError, "unknown fixture " + name);
    }
};

CriterionResult criterion1(const Fixtures& fx)
{
    Check ch;
    const std::vector<std::pair<std::string, size_t>> expected = {
        {"triangle", 0}, {"square", 1}, {"hexagon", 3}, {"rectangle_1x3", 1}};
    std::ostringstream got;
    for (const auto& [name, want] : expected) {
        const GorensteinContext& ctx = fx.ctx(name);
        const DegreeData dd = degree_data(ctx.cone, ctx.hb, ctx.Rstar);
        const size_t dim = t1_piece(dd).dim;
        got << name << "=" << dim << " ";
        ch.expect(dim == want,
                  name + ": t1 dim " + std::to_string(dim) + " != " + std::to_string(want));
        ch.expect(dim == ctx.Q.size() - 3, name + ": t1 dim != N-3");
    }
    return {1, "Gorenstein T1 dimension at -R* equals N-3 (0,1,3,1)", ch.ok,
            ch.ok ? got.str() : ch.details.str()};
}

CriterionResult criterion2(const Fixtures& fx)
{
    Check ch;
    std::ostringstream got;
    {
        const auto& ctx = fx.ctx("hexagon");
        const auto [k1, k2] = k_thresholds(ctx.Q);
        ch.expect(k1 == 2 && k2 == 2, "hexagon thresholds: got k1=" + k1.str() + " k2=" + k2.str());
        const CrossValidateReport cv = cross_validate(ctx, Int(6));
        for (const auto& e : cv.dims) {
            const size_t want = e.k == 2 ? 2 : 0;
            ch.expect(e.closed_form == want, "hexagon closed form at k=" + e.k.str());
            ch.expect(e.machinery == want,
                      "hexagon machinery at k=" + e.k.str() + " gives " +
                          std::to_string(e.machinery) + ", expected " + std::to_string(want));
            ch.expect(e.match, "hexagon machinery != closed form at k=" + e.k.str());
        }
        got << "hexagon k1=k2=2, dims ok";
    }
    {
        const auto& ctx = fx.ctx("rectangle_1x3");
        const auto [k1, k2] = k_thresholds(ctx.Q);
        ch.expect(k1 == 1 && k2 == 3,
                  "rectangle thresholds: got k1=" + k1.str() + " k2=" + k2.str());
        const CrossValidateReport cv = cross_validate(ctx, Int(4));
        const std::vector<size_t> want = {1, 1, 0};  // k = 2, 3, 4
        for (size_t idx = 0; idx < cv.dims.size(); ++idx) {
            const auto& e = cv.dims[idx];
            ch.expect(e.closed_form == want[idx], "rectangle closed form at k=" + e.k.str());
            ch.expect(e.match, "rectangle machinery (" + std::to_string(e.machinery) +
                                   ") != closed form (" + std::to_string(e.closed_form) +
                                   ") at k=" + e.k.str());
        }
        got << "; rectangle k1=1 k2=3";
    }
    return {2, "threshold formula reproduction (hexagon, 1x3 rectangle)", ch.ok,
            ch.ok ? got.str() : ch.details.str()};
}

CriterionResult criterion3(const Fixtures& fx)
{
    Check ch;
    for (const std::string name : {"square", "triangle"}) {
        const auto& ctx = fx.ctx(name);
        const CrossValidateReport cv = cross_validate(ctx, Int(6));
        for (const auto& e : cv.dims) {
            ch.expect(e.closed_form == 0, name + " closed form nonzero at k=" + e.k.str());
            ch.expect(e.machinery == 0, name + " machinery nonzero at k=" + e.k.str());
        }
    }
    return {3, "exceptional cases: square and triangle have T2(-kR*) = 0, both paths", ch.ok,
            ch.ok ? "all zero for k=2..6" : ch.details.str()};
}

CriterionResult criterion4(const Fixtures& fx)
{
    Check ch;
    const auto& ctx = fx.ctx("hexagon");
    const CrossValidateReport cv = cross_validate(ctx, Int(2));
    ch.expect(cv.cup_comparison_ran, "cup comparison did not run: " + cv.cup_skip_reason);
    ch.expect(cv.cups.size() == 6, "expected 6 unordered basis pairs, got " +
                                       std::to_string(cv.cups.size()));
    for (const auto& e : cv.cups)
        ch.expect(e.match, "pair (" + std::to_string(e.s_index) + "," +
                               std::to_string(e.t_index) + "): general " + to_string(e.general) +
                               " vs closed " + to_string(e.closed_form));
    return {4, "cup-product agreement on the hexagon (general vs closed form)", ch.ok,
            ch.ok ? "6/6 basis pairs match exactly" : ch.details.str()};
}

CriterionResult criterion5(const Fixtures& fx)
{
    Check ch;
    const auto& ctx = fx.ctx("square");
    const auto entries = degree_scan(ctx.cone, ctx.hb);
    size_t total1 = 0, total2 = 0;
    for (const auto& e : entries) {
        total1 += e.t1;
        total2 += e.t2;
    }
    ch.expect(total1 == 1, "total t1 over scan box = " + std::to_string(total1));
    ch.expect(total2 == 0, "total t2 over scan box = " + std::to_string(total2));
    ch.expect(entries.size() == 1 && entries[0].R == IntVec{Int(0), Int(0), Int(1)},
              "t1 not concentrated at R*");

    const DegreeData dd_R = degree_data(ctx.cone, ctx.hb, ctx.Rstar);
    const DegreeData dd_T = degree_data(ctx.cone, ctx.hb, scaled(ctx.Rstar, Int(2)));
    const T1Piece t1 = t1_piece(dd_R);
    ch.expect(t1.dim == 1, "square t1 dim at R* is not 1");
    if (t1.dim == 1) {
        const SectionPhi Phi(ctx.cone, ctx.hb);
        const T2Element prod = cup(dd_R, dd_R, dd_T, Phi, t1.basis[0], t1.basis[0]);
        ch.expect(prod.class_is_zero(), "self cup product of the generator is not zero");
    }
    return {5, "quadric cone sanity: scan totals (t1=1, t2=0) and vanishing self-cup", ch.ok,
            ch.ok ? "scan box has single entry at R*, self-cup vanishes" : ch.details.str()};
}

CriterionResult criterion6(const Fixtures& fx)
{
    Check ch;
    Lcg rng;
    size_t done = 0;
    size_t agree = 0;
    while (done < 10) {
        const auto& [name, ctx] = fx.contexts[done % fx.contexts.size()];
        IntVec R = {Int(rng.range(-2, 4)), Int(rng.range(-2, 4)), Int(rng.range(-2, 4))};
        const DegreeData dd = degree_data(ctx.cone, ctx.hb, R);
        const size_t t1 = t1_piece(dd).dim;
        const size_t t2 = t2_piece(dd).dim;
        const SpanComplexDims sp = t1_t2_via_span_complex(dd);
        const bool okPair = t1 == sp.t1 && t2 == sp.t2;
        if (okPair)
            ++agree;
        ch.expect(okPair, name + " at R=" + vec_str(R) + ": dependency-complex (" +
                              std::to_string(t1) + "," + std::to_string(t2) +
                              ") vs span complex (" + std::to_string(sp.t1) + "," +
                              std::to_string(sp.t2) + ")");
        if (sp.v_t1_valid)
            ch.expect(sp.v_t1 == t1, name + " at R=" + vec_str(R) + ": trichotomy t1 variant");
        if (sp.v_t2_valid)
            ch.expect(sp.v_t2 == t2, name + " at R=" + vec_str(R) + ": trichotomy t2 variant");
        ++done;
    }
    return {6, "two-formulation agreement on 10 randomized (cone, degree) pairs", ch.ok,
            ch.ok ? "10/10 degree pairs agree" : ch.details.str()};
}

CriterionResult criterion7(const Fixtures& fx)
{
    Check ch;
    Lcg rng;
    rng.state ^= 0x5bf03635ull;
    for (size_t trial = 0; trial < 10; ++trial) {
        const auto& [name, ctx] = fx.contexts[trial % fx.contexts.size()];
        IntVec R = {Int(rng.range(-2, 4)), Int(rng.range(-2, 4)), Int(rng.range(-2, 4))};
        const DegreeData dd = degree_data(ctx.cone, ctx.hb, R);
        for (size_t v = 0; v < ctx.hb.size(); ++v)
            ch.expect(zcomplex_element_exact(dd, v),
                      name + " at R=" + vec_str(R) + ": summand complex of E[" +
                          std::to_string(v) + "] has middle homology");
    }
    return {7, "per-element exactness of the unit complex on 10 random (cone, degree) pairs",
            ch.ok, ch.ok ? "all summand complexes exact in the built range" : ch.details.str()};
}

CriterionResult criterion8(const Fixtures& fx)
{
    Check ch;
    const auto& ctx = fx.ctx("hexagon");
    const DegreeData dd_R = degree_data(ctx.cone, ctx.hb, ctx.Rstar);
    const DegreeData dd_T = degree_data(ctx.cone, ctx.hb, scaled(ctx.Rstar, Int(2)));
    const SectionPhi Phi(ctx.cone, ctx.hb);
    const T1Piece t1 = t1_piece(dd_R);
    const RatVec ext_phi = extended_covector(t1.basis[0], dd_R);
    const RatVec ext_psi = extended_covector(t1.basis[1], dd_R);
    const size_t w = ctx.hb.size();

    // Cocycle identity of the two-argument t on 100 random triples.
    Lcg rng;
    rng.state ^= 0xc0ffee11ull;
    const auto& LEbasis = dd_R.LE.basis();
    for (size_t trial = 0; trial < 100; ++trial) {
        IntVec alpha(w);
        for (size_t v = 0; v < w; ++v)
            alpha[v] = Int(rng.range(0, 3));
        auto rand_rel = [&]() {
            IntVec rel(w, Int(0));
            for (const auto& b : LEbasis) {
                const Int coeff = Int(rng.range(-2, 2));
                rel = rel + scaled(primitive_integer(b), coeff);
            }
            return rel;
        };
        const IntVec l1 = rand_rel(), l2 = rand_rel();
        IntVec shift(w, Int(0));
        for (size_t v = 0; v < w; ++v) {
            Int need = 0;
            need = std::min(need, l1[v]);
            need = std::min(need, Int(l1[v] + l2[v]));
            shift[v] = -need;
        }
        const IntVec a = alpha + shift;
        const IntVec b = a + l1;
        const IntVec c = b + l2;
        const Rat lhs =
            t_pair_value(ctx.hb, Phi, ext_phi, ext_psi, dd_R.R, dd_R.R, b, c) -
            t_pair_value(ctx.hb, Phi, ext_phi, ext_psi, dd_R.R, dd_R.R, a, c) +
            t_pair_value(ctx.hb, Phi, ext_phi, ext_psi, dd_R.R, dd_R.R, a, b);
        ch.expect(lhs == 0, "cocycle identity failed on trial " + std::to_string(trial));
        if (!ch.ok)
            break;
    }

    // Class invariance of the cup product under perturbed section, perturbed
    // decompositions, and perturbed functional extensions.
    const SectionPhi PhiRev(ctx.cone, ctx.hb, /*reversed_order=*/true);
    const Space line(ctx.Q.size(), {summand_space(ctx.Q).one});
    const std::vector<RatVec> vbasis = complement_in(line, summand_space(ctx.Q).V);
    Lcg rng2;
    rng2.state ^= 0xabcdef12345ull;
    for (size_t trial = 0; trial < 20; ++trial) {
        RatVec s(ctx.Q.size(), Rat(0)), t(ctx.Q.size(), Rat(0));
        bool nonzero = false;
        while (!nonzero) {
            for (size_t k = 0; k < vbasis.size(); ++k) {
                const Rat cs = Rat(rng2.range(-2, 2));
                const Rat ct = Rat(rng2.range(-2, 2));
                for (size_t v = 0; v < ctx.Q.size(); ++v) {
                    s[v] += cs * vbasis[k][v];
                    t[v] += ct * vbasis[k][v];
                }
            }
            nonzero = !is_zero(s) && !is_zero(t);
        }
        const T1Element phi = t1_iso_image(ctx, dd_R, s);
        const T1Element psi = t1_iso_image(ctx, dd_R, t);
        const T2Element base = cup(dd_R, dd_R, dd_T, Phi, phi, psi);

        const T2Element viaRev = cup(dd_R, dd_R, dd_T, PhiRev, phi, psi);
        ch.expect(viaRev.canonical == base.canonical,
                  "class moved under perturbed section, trial " + std::to_string(trial));

        CupOptions altDec;
        altDec.alt_anchor = true;
        altDec.extra_split = true;
        const T2Element viaDec = cup(dd_R, dd_R, dd_T, Phi, phi, psi, altDec);
        ch.expect(viaDec.canonical == base.canonical,
                  "class moved under alternative decomposition, trial " + std::to_string(trial));

        CupOptions altExt;
        altExt.alt_extension = true;
        const T2Element viaExt = cup(dd_R, dd_R, dd_T, Phi, phi, psi, altExt);
        ch.expect(viaExt.canonical == base.canonical,
                  "class moved under alternative extension, trial " + std::to_string(trial));
        if (!ch.ok)
            break;
    }
    return {8, "cup well-definedness: 100 cocycle triples, 3x20 invariance trials", ch.ok,
            ch.ok ? "all identities exact" : ch.details.str()};
}

CriterionResult criterion9(const Fixtures&)
{
    Check ch;
    const Cone c = fixture_a3_cone();
    const HilbertBasis hb = hilbert_basis(c);
    const auto entries = degree_scan(c, hb);
    size_t total1 = 0;
    for (const auto& e : entries) {
        total1 += e.t1;
        ch.expect(e.t2 == 0, "nonzero H^1 at R=" + vec_str(e.R));
        ch.expect(!e.t2_exact, "two-dimensional cone must flag the T2 formula as inapplicable");
    }
    ch.expect(total1 == 3, "total scanned t1 = " + std::to_string(total1) + ", expected 3");
    return {9, "two-dimensional cone guard: H^1 = 0 with label, total T1 = 3", ch.ok,
            ch.ok ? "scan total t1=3, all H^1=0 and labelled" : ch.details.str()};
}

Json fixture_suite_json(const Fixtures& fx)
{
    Json all = Json::array();
    for (const auto& [name, ctx] : fx.contexts) {
        Json j;
        j["fixture"] = name;
        j["hilbert"] = hilbert_report(ctx.cone, ctx.hb);
        j["t1_at_Rstar"] = t1_report(ctx.cone, ctx.hb, ctx.Rstar);
        j["t2_at_2Rstar"] = t2_report(ctx.cone, ctx.hb, scaled(ctx.Rstar, Int(2)));
        j["scan"] = scan_report(ctx.cone, ctx.hb, Int(2));
        j["gorenstein"] = gorenstein_report(ctx.Q, Int(4), true);
        all.push_back(j);
    }
    {
        const Cone c = fixture_a3_cone();
        const HilbertBasis hb = hilbert_basis(c);
        Json j;
        j["fixture"] = "a3_cone";
        j["hilbert"] = hilbert_report(c, hb);
        j["scan"] = scan_report(c, hb, Int(2));
        all.push_back(j);
    }
    {
        const Cone c = fixture_octant();
        const HilbertBasis hb = hilbert_basis(c);
        Json j;
        j["fixture"] = "octant";
        j["hilbert"] = hilbert_report(c, hb);
        j["scan"] = scan_report(c, hb, Int(2));
        all.push_back(j);
    }
    return all;
}

CriterionResult criterion10(const Fixtures& fx)
{
    const std::string first = fixture_suite_json(fx).dump();
    const std::string second = fixture_suite_json(fx).dump();
    const bool ok = first == second;
    return {10, "determinism: the full fixture suite serializes byte-identically twice", ok,
            ok ? std::to_string(first.size()) + " bytes, identical" : "outputs differ"};
}

}  // namespace

VerifyReport run_acceptance()
{
    Fixtures fx;
    VerifyReport rep;
    rep.criteria.push_back(criterion1(fx));
    rep.criteria.push_back(criterion2(fx));
    rep.criteria.push_back(criterion3(fx));
    rep.criteria.push_back(criterion4(fx));
    rep.criteria.push_back(criterion5(fx));
    rep.criteria.push_back(criterion6(fx));
    rep.criteria.push_back(criterion7(fx));
    rep.criteria.push_back(criterion8(fx));
    rep.criteria.push_back(criterion9(fx));
    rep.criteria.push_back(criterion10(fx));
    rep.all_pass = true;
    for (const auto& c : rep.criteria)
        rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

Json verify_report_json(const VerifyReport& rep)
{
    Json j;
    Json list = Json::array();
    for (const auto& c : rep.criteria) {
        Json row;
        row["id"] = c.id;
        row["name"] = c.name;
        row["pass"] = c.pass;
        row["details"] = c.details;
        list.push_back(row);
    }
    j["criteria"] = list;
    j["all_pass"] = rep.all_pass;
    return j;
}

}  // namespace toric
