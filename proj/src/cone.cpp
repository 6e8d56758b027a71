#include "toric/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

struct DDRay {
    IntVec v;
    std::vector<char> tight;  // per processed constraint: is <c, v> == 0
};

bool adjacent(const std::vector<DDRay>& rays, size_t p, size_t m)
{
    // Combinatorial adjacency: no third ray is tight on every constraint
    // tight at both p and m.
    const auto& tp = rays[p].tight;
    const auto& tm = rays[m].tight;
    for (size_t r = 0; r < rays.size(); ++r) {
        if (r == p || r == m)
            continue;
        bool covers = true;
        for (size_t k = 0; k < tp.size() && covers; ++k)
            if (tp[k] && tm[k] && !rays[r].tight[k])
                covers = false;
        if (covers)
            return false;
    }
    return true;
}

}  // namespace

std::vector<IntVec> extreme_rays(const IntMatrix& C)
{
    const size_t d = C.cols();
    assert(d > 0);

    // Greedily pick d linearly independent rows for the simplicial start.
    std::vector<size_t> start;
    {
        std::vector<RatVec> rows;
        Space span(d);
        for (size_t i = 0; i < C.rows() && start.size() < d; ++i) {
            RatVec r = to_rat(C.row(i));
            if (span.contains(r))
                continue;
            rows.push_back(r);
            span = Space(d, rows);
            start.push_back(i);
        }
        if (start.size() < d)
            fail(ErrorKind::NotPointed, "extreme_rays: constraint matrix is rank-deficient");
    }

    IntMatrix C0(d, d);
    for (size_t k = 0; k < d; ++k)
        for (size_t j = 0; j < d; ++j)
            C0(k, j) = C(start[k], j);

    std::vector<DDRay> rays;
    {
        RatMatrix M = to_rat(C0);
        for (size_t j = 0; j < d; ++j) {
            RatVec e(d, Rat(0));
            e[j] = 1;
            auto x = solve(M, e);
            assert(x.has_value());
            rays.push_back(DDRay{primitive_integer(*x), {}});
        }
    }

    // Process constraints: the d starting rows first, then the rest in order.
    std::vector<size_t> order = start;
    std::set<size_t> started(start.begin(), start.end());
    for (size_t i = 0; i < C.rows(); ++i)
        if (!started.count(i) && !is_zero(C.row(i)))
            order.push_back(i);

    size_t processed = 0;
    for (size_t oi = 0; oi < order.size(); ++oi) {
        const IntVec c = C.row(order[oi]);
        std::vector<Int> val(rays.size());
        for (size_t r = 0; r < rays.size(); ++r)
            val[r] = dot(c, rays[r].v);

        std::vector<DDRay> next;
        for (size_t r = 0; r < rays.size(); ++r) {
            if (val[r] >= 0) {
                next.push_back(rays[r]);
                next.back().tight.push_back(val[r] == 0 ? 1 : 0);
            }
        }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0)
                continue;
            for (size_t m = 0; m < rays.size(); ++m) {
                if (val[m] >= 0)
                    continue;
                if (processed > 0 && !adjacent(rays, p, m))
                    continue;
                IntVec w = val[p] * rays[m].v - val[m] * rays[p].v;
                if (is_zero(w))
                    continue;
                w = make_primitive(w);
                DDRay nr;
                nr.v = w;
                nr.tight.resize(processed + 1);
                for (size_t k = 0; k < processed; ++k)
                    nr.tight[k] = (rays[p].tight[k] && rays[m].tight[k]) ? 1 : 0;
                nr.tight[processed] = 1;
                next.push_back(std::move(nr));
            }
        }
        // Dedupe (combination rays can coincide).
        std::sort(next.begin(), next.end(),
                  [](const DDRay& a, const DDRay& b) { return lex_less(a.v, b.v); });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const DDRay& a, const DDRay& b) { return a.v == b.v; }),
                   next.end());
        // Recompute tight flags exactly (merging duplicates may lose them).
        for (auto& r : next)
            for (size_t k = 0; k <= processed; ++k)
                r.tight[k] = dot(C.row(order[k]), r.v) == 0 ? 1 : 0;
        rays = std::move(next);
        ++processed;
    }

    std::vector<IntVec> out;
    out.reserve(rays.size());
    for (auto& r : rays)
        out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

Cone build_cone(size_t rank, const std::vector<IntVec>& generators)
{
    if (generators.empty())
        fail(ErrorKind::EmptyInput, "build_cone: no generators");
    std::vector<IntVec> gens;
    for (const auto& g : generators) {
        if (g.size() != rank)
            fail(ErrorKind::DimensionMismatch, "build_cone: generator of wrong length");
        if (is_zero(g))
            fail(ErrorKind::ZeroVector, "build_cone: zero generator");
        IntVec p = make_primitive(g);
        if (std::find(gens.begin(), gens.end(), p) == gens.end())
            gens.push_back(std::move(p));
    }

    const size_t N = gens.size();

    // Pointedness: no nonzero lambda >= 0 with sum lambda_i a^i = 0.
    {
        IntMatrix C(N + 2 * rank, N);
        for (size_t i = 0; i < N; ++i)
            C(i, i) = 1;
        for (size_t k = 0; k < rank; ++k)
            for (size_t i = 0; i < N; ++i) {
                C(N + k, i) = gens[i][k];
                C(N + rank + k, i) = -gens[i][k];
            }
        if (!extreme_rays(C).empty())
            fail(ErrorKind::NotPointed, "build_cone: cone contains a line");
    }

    {
        IntMatrix G = IntMatrix::from_rows(gens);
        if (rank != 0 && toric::rank(G) < rank)
            fail(ErrorKind::NotFullDimensional, "build_cone: generators do not span the space");
    }

    Cone c;
    c.rank = rank;
    c.facet_normals = extreme_rays(IntMatrix::from_rows(gens));

    // Keep exactly the extreme-ray generators, in input order.
    std::vector<IntVec> srays = extreme_rays(IntMatrix::from_rows(c.facet_normals));
    for (const auto& g : gens) {
        if (std::find(srays.begin(), srays.end(), g) != srays.end())
            c.generators.push_back(g);
        else
            c.dropped.push_back(g);
    }

    c.incidence.resize(c.generators.size());
    for (size_t i = 0; i < c.generators.size(); ++i)
        for (size_t f = 0; f < c.facet_normals.size(); ++f)
            if (dot(c.generators[i], c.facet_normals[f]) == 0)
                c.incidence[i].push_back(f);

    c.two_face_pairs = two_faces(c);
    return c;
}

DualCone dual_cone(const Cone& c)
{
    DualCone d;
    d.rank = c.rank;
    d.rays = c.facet_normals;  // rays of the dual = facet normals of c
    return d;
}

std::vector<std::pair<size_t, size_t>> two_faces(const Cone& c)
{
    std::vector<std::pair<size_t, size_t>> out;
    if (c.rank < 3)
        return out;  // a 2-dim cone has no proper 2-face
    const size_t N = c.generators.size();
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j) {
            std::vector<size_t> common;
            std::set_intersection(c.incidence[i].begin(), c.incidence[i].end(),
                                  c.incidence[j].begin(), c.incidence[j].end(),
                                  std::back_inserter(common));
            if (common.empty())
                continue;
            // The face spanned: all generators lying on every common facet.
            bool third = false;
            for (size_t g = 0; g < N && !third; ++g) {
                if (g == i || g == j)
                    continue;
                bool on_all = true;
                for (size_t f : common)
                    if (dot(c.generators[g], c.facet_normals[f]) != 0) {
                        on_all = false;
                        break;
                    }
                third = on_all;
            }
            if (third)
                continue;
            IntMatrix M = IntMatrix::from_rows({c.generators[i], c.generators[j]});
            if (rank(M) == 2)
                out.emplace_back(i, j);
        }
    return out;
}

std::vector<std::vector<size_t>> proper_three_faces(const Cone& c)
{
    std::vector<std::vector<size_t>> faces;
    if (c.rank < 4)
        return faces;  // for rank 3 the only 3-face is the cone itself
    const size_t N = c.generators.size();
    std::set<std::vector<size_t>> seen;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j)
            for (size_t k = j + 1; k < N; ++k) {
                IntMatrix M =
                    IntMatrix::from_rows({c.generators[i], c.generators[j], c.generators[k]});
                if (rank(M) != 3)
                    continue;
                std::vector<size_t> common;
                for (size_t f = 0; f < c.facet_normals.size(); ++f)
                    if (dot(c.generators[i], c.facet_normals[f]) == 0 &&
                        dot(c.generators[j], c.facet_normals[f]) == 0 &&
                        dot(c.generators[k], c.facet_normals[f]) == 0)
                        common.push_back(f);
                if (common.empty())
                    continue;  // closure would be the whole cone
                std::vector<size_t> gens;
                for (size_t g = 0; g < N; ++g) {
                    bool on_all = true;
                    for (size_t f : common)
                        if (dot(c.generators[g], c.facet_normals[f]) != 0) {
                            on_all = false;
                            break;
                        }
                    if (on_all)
                        gens.push_back(g);
                }
                std::vector<RatVec> rows;
                for (size_t g : gens)
                    rows.push_back(to_rat(c.generators[g]));
                if (Space(c.rank, rows).dim() != 3)
                    continue;
                if (seen.insert(gens).second)
                    faces.push_back(gens);
            }
    std::sort(faces.begin(), faces.end());
    return faces;
}

namespace {

bool face_is_unimodular(const Cone& c, const std::vector<size_t>& gens, size_t face_dim)
{
    if (gens.size() != face_dim)
        return false;  // non-simplicial faces are never part of a Z-basis
    std::vector<IntVec> rows;
    for (size_t g : gens)
        rows.push_back(c.generators[g]);
    const SmithDecomposition d = smith_normal_form(IntMatrix::from_rows(rows));
    for (size_t i = 0; i < face_dim; ++i)
        if (abs(d.S(i, i)) != 1)
            return false;
    return true;
}

}  // namespace

bool is_smooth_in_codim2(const Cone& c)
{
    for (const auto& [i, j] : c.two_face_pairs)
        if (!face_is_unimodular(c, {i, j}, 2))
            return false;
    return true;
}

bool is_smooth_in_codim3(const Cone& c)
{
    // Checks proper faces of dimension exactly 3; combine with the
    // codimension-2 predicate for the full smoothness hypothesis.
    for (const auto& gens : proper_three_faces(c))
        if (!face_is_unimodular(c, gens, 3))
            return false;
    return true;
}

Int pairing(const IntVec& a, const IntVec& r)
{
    if (a.size() != r.size())
        fail(ErrorKind::DimensionMismatch, "pairing: length mismatch");
    return dot(a, r);
}

bool in_dual_cone(const Cone& c, const IntVec& m)
{
    for (const auto& g : c.generators)
        if (dot(g, m) < 0)
            return false;
    return true;
}

}  // namespace toric
