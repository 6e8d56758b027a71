#include "toric/graded.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace toric {

IntVec Relation::positive_part() const
{
    IntVec p(q.size(), Int(0));
    for (size_t v = 0; v < q.size(); ++v)
        if (q[v] > 0)
            p[v] = q[v];
    return p;
}

IntVec Relation::negative_part() const
{
    IntVec m(q.size(), Int(0));
    for (size_t v = 0; v < q.size(); ++v)
        if (q[v] < 0)
            m[v] = -q[v];
    return m;
}

std::vector<size_t> Relation::support() const
{
    std::vector<size_t> s;
    for (size_t v = 0; v < q.size(); ++v)
        if (q[v] != 0)
            s.push_back(v);
    return s;
}

IntVec Relation::bar(const HilbertBasis& hb) const { return hb.pi(positive_part()); }

namespace {

// L(S): rational dependencies among the E-columns indexed by S, as a
// subspace of Q^E.
Space L_of(const HilbertBasis& hb, const std::vector<size_t>& S)
{
    const size_t w = hb.size();
    if (S.empty())
        return Space(w);
    RatMatrix A(hb.pi_matrix.rows(), S.size());
    for (size_t k = 0; k < S.size(); ++k)
        for (size_t r = 0; r < hb.pi_matrix.rows(); ++r)
            A(r, k) = Rat(hb.pi_matrix(r, S[k]));
    std::vector<RatVec> embedded;
    for (const auto& v : rational_kernel_basis(A)) {
        RatVec x(w, Rat(0));
        for (size_t k = 0; k < S.size(); ++k)
            x[S[k]] = v[k];
        embedded.push_back(std::move(x));
    }
    return Space(w, embedded);
}

std::vector<size_t> all_indices(size_t w)
{
    std::vector<size_t> v(w);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

DegreeData degree_data(const Cone& c, const HilbertBasis& hb, const IntVec& R)
{
    if (R.size() != c.rank)
        fail(ErrorKind::DimensionMismatch, "degree_data: degree of wrong rank");
    DegreeData dd;
    dd.cone = &c;
    dd.hb = &hb;
    dd.R = R;

    const size_t N = c.num_generators();
    const size_t w = hb.size();

    dd.Ei.resize(N);
    std::vector<char> in_union(w, 0);
    for (size_t i = 0; i < N; ++i) {
        const Int hR = dot(c.generators[i], R);
        for (size_t v = 0; v < w; ++v)
            if (dot(c.generators[i], hb.E[v]) < hR) {
                dd.Ei[i].push_back(v);
                in_union[v] = 1;
            }
    }
    for (size_t v = 0; v < w; ++v)
        if (in_union[v])
            dd.E0.push_back(v);

    // For a two-dimensional cone the only 2-dimensional face is the cone
    // itself; the complex still needs its term to glue the two ray pieces.
    if (c.rank == 2)
        dd.faces = {{0, 1}};
    else
        dd.faces = c.two_face_pairs;
    for (const auto& [i, j] : dd.faces) {
        std::vector<size_t> common;
        std::set_intersection(dd.Ei[i].begin(), dd.Ei[i].end(), dd.Ei[j].begin(), dd.Ei[j].end(),
                              std::back_inserter(common));
        dd.Eface.push_back(std::move(common));
    }

    dd.LE = L_of(hb, all_indices(w));
    dd.L0 = L_of(hb, dd.E0);
    dd.Lsum = Space(w);
    for (size_t i = 0; i < N; ++i) {
        dd.Li.push_back(L_of(hb, dd.Ei[i]));
        dd.Lsum = dd.Lsum.sum(dd.Li.back());
    }
    for (const auto& S : dd.Eface)
        dd.Lface.push_back(L_of(hb, S));

    dd.offsets.resize(N);
    for (size_t i = 0; i < N; ++i) {
        dd.offsets[i] = dd.total_dim;
        dd.total_dim += dd.Li[i].dim();
    }

    // Coboundaries: a functional on sum_i L(E_i^R) restricted to every block.
    {
        std::vector<RatVec> rows;
        for (size_t k = 0; k < dd.Lsum.dim(); ++k) {
            RatVec row(dd.total_dim, Rat(0));
            for (size_t i = 0; i < N; ++i)
                for (size_t b = 0; b < dd.Li[i].dim(); ++b) {
                    const RatVec coords = dd.Lsum.coords(dd.Li[i].basis()[b]);
                    row[dd.offsets[i] + b] = coords[k];
                }
            rows.push_back(std::move(row));
        }
        dd.W1image = Space(dd.total_dim, rows);
    }

    // Cocycles: tuples whose i- and j-components agree on L(E_i cap E_j).
    {
        std::vector<RatVec> rows;
        for (size_t f = 0; f < dd.faces.size(); ++f) {
            const auto [i, j] = dd.faces[f];
            for (const auto& wvec : dd.Lface[f].basis()) {
                RatVec row(dd.total_dim, Rat(0));
                const RatVec ci = dd.Li[i].coords(wvec);
                const RatVec cj = dd.Li[j].coords(wvec);
                for (size_t b = 0; b < ci.size(); ++b)
                    row[dd.offsets[i] + b] += ci[b];
                for (size_t b = 0; b < cj.size(); ++b)
                    row[dd.offsets[j] + b] -= cj[b];
                rows.push_back(std::move(row));
            }
        }
        if (rows.empty()) {
            std::vector<RatVec> full;
            for (size_t k = 0; k < dd.total_dim; ++k) {
                RatVec e(dd.total_dim, Rat(0));
                e[k] = 1;
                full.push_back(std::move(e));
            }
            dd.cocycles = Space(dd.total_dim, full);
        } else {
            dd.cocycles = kernel_space(RatMatrix::from_rows(rows));
        }
    }
    assert(dd.cocycles.contains(dd.W1image));
    return dd;
}

Rat T1Element::eval(const DegreeData& dd, const RatVec& x) const
{
    return dot(vals, dd.L0.coords(x));
}

Rat T2Element::eval_at(const DegreeData& dd, size_t i, const RatVec& x) const
{
    const RatVec c = dd.Li[i].coords(x);
    Rat s = 0;
    for (size_t b = 0; b < c.size(); ++b)
        s += c[b] * tuple[dd.offsets[i] + b];
    return s;
}

T2Element make_t2_element(const DegreeData& dd, const RatVec& tuple)
{
    if (tuple.size() != dd.total_dim)
        fail(ErrorKind::DimensionMismatch, "make_t2_element: tuple of wrong length");
    if (!dd.cocycles.contains(tuple))
        fail(ErrorKind::CocycleViolation,
             "make_t2_element: components disagree on a 2-face intersection");
    T2Element t;
    t.R = dd.R;
    t.tuple = tuple;
    t.canonical = dd.W1image.reduce(tuple);
    return t;
}

T1Piece t1_piece(const DegreeData& dd)
{
    T1Piece out;
    out.dim = dd.L0.dim() - dd.Lsum.dim();

    // Functionals on L(E_0^R) killing sum_i L(E_i^R): kernel of the matrix
    // whose rows are the L0-coordinates of a basis of the sum.
    if (dd.L0.dim() == 0)
        return out;
    std::vector<RatVec> rows;
    for (const auto& b : dd.Lsum.basis())
        rows.push_back(dd.L0.coords(b));
    std::vector<RatVec> ann;
    if (rows.empty()) {
        for (size_t k = 0; k < dd.L0.dim(); ++k) {
            RatVec e(dd.L0.dim(), Rat(0));
            e[k] = 1;
            ann.push_back(std::move(e));
        }
    } else {
        ann = Space(dd.L0.dim(), rational_kernel_basis(RatMatrix::from_rows(rows))).basis();
    }
    assert(ann.size() == out.dim);
    for (auto& v : ann)
        out.basis.push_back(T1Element{dd.R, std::move(v)});
    return out;
}

T2Piece t2_piece(const DegreeData& dd)
{
    T2Piece out;
    out.dim = dd.cocycles.dim() - dd.W1image.dim();

    Space picked(dd.total_dim);
    for (const auto& z : dd.cocycles.basis()) {
        const RatVec red = dd.W1image.reduce(z);
        if (is_zero(red) || picked.contains(red))
            continue;
        picked = picked.sum(Space(dd.total_dim, {red}));
        T2Element t;
        t.R = dd.R;
        t.tuple = red;
        t.canonical = dd.W1image.reduce(red);
        out.basis.push_back(std::move(t));
        if (out.basis.size() == out.dim)
            break;
    }
    assert(out.basis.size() == out.dim);

    if (dd.cone->rank == 2) {
        out.exact = false;
        out.label = "not applicable: two-dimensional cone (H^1 always vanishes)";
    } else if (!is_smooth_in_codim2(*dd.cone)) {
        out.exact = false;
        out.label = "subspace of T^2 only: cone is not smooth in codimension 2";
    }
    return out;
}

namespace {

Space span_of(const HilbertBasis& hb, size_t rank, const std::vector<size_t>& S)
{
    std::vector<RatVec> vecs;
    for (size_t v : S)
        vecs.push_back(to_rat(hb.E[v]));
    return Space(rank, vecs);
}

Space full_space(size_t n)
{
    std::vector<RatVec> rows;
    for (size_t k = 0; k < n; ++k) {
        RatVec e(n, Rat(0));
        e[k] = 1;
        rows.push_back(std::move(e));
    }
    return Space(n, rows);
}

// Faces of dimension 3 entering the complex: proper 3-faces, plus the cone
// itself in rank 3. Each carries its 2-face boundary cycle with orientation
// signs against the stored (i<j) pair convention.
struct OrientedFace3 {
    std::vector<size_t> gens;
    std::vector<size_t> face_idx;  // indices into dd.faces
    std::vector<int> eps;
};

std::vector<OrientedFace3> oriented_three_faces(const DegreeData& dd)
{
    const Cone& c = *dd.cone;
    std::vector<std::vector<size_t>> gen_sets;
    if (c.rank == 3) {
        gen_sets.push_back(all_indices(c.num_generators()));
    } else if (c.rank > 3) {
        gen_sets = proper_three_faces(c);
    }

    std::vector<OrientedFace3> out;
    for (const auto& G : gen_sets) {
        std::vector<char> in_G(c.num_generators(), 0);
        for (size_t g : G)
            in_G[g] = 1;
        // 2-faces of this 3-face, with adjacency for the boundary walk.
        std::map<size_t, std::vector<std::pair<size_t, size_t>>> nb;  // gen -> (other, face idx)
        std::vector<size_t> local_faces;
        for (size_t f = 0; f < dd.faces.size(); ++f) {
            const auto [i, j] = dd.faces[f];
            if (!in_G[i] || !in_G[j])
                continue;
            local_faces.push_back(f);
            nb[i].push_back({j, f});
            nb[j].push_back({i, f});
        }
        OrientedFace3 of;
        of.gens = G;
        if (local_faces.empty()) {
            out.push_back(std::move(of));
            continue;
        }
        for (auto& [g, v] : nb) {
            assert(v.size() == 2);  // cross-section of a 3-cone is a polygon
            std::sort(v.begin(), v.end());
        }
        // Walk the polygon cycle starting at the smallest generator.
        const size_t start = *std::min_element(G.begin(), G.end());
        size_t prev = start;
        size_t cur = nb[start][0].first;
        {
            const size_t f = nb[start][0].second;
            of.face_idx.push_back(f);
            of.eps.push_back(dd.faces[f].first == start ? 1 : -1);
        }
        while (cur != start) {
            const auto& choices = nb[cur];
            const auto& step = (choices[0].first == prev) ? choices[1] : choices[0];
            of.face_idx.push_back(step.second);
            of.eps.push_back(dd.faces[step.second].first == cur ? 1 : -1);
            prev = cur;
            cur = step.first;
        }
        assert(of.face_idx.size() == local_faces.size());
        out.push_back(std::move(of));
    }
    return out;
}

struct ComplexRanks {
    size_t dim1 = 0, dim2 = 0;
    size_t rank_d1 = 0, rank_d2 = 0, rank_d3 = 0;
};

// Rank data of a complex C3 -> C2 -> C1 -> C0 built from per-generator
// spaces, per-2-face spaces and per-3-face spaces inside Q^n.
ComplexRanks complex_ranks(const DegreeData& dd, const std::vector<Space>& Si,
                           const std::vector<Space>& Sface, const std::vector<Space>& S3,
                           const std::vector<OrientedFace3>& f3)
{
    const size_t N = Si.size();
    ComplexRanks cr;
    std::vector<size_t> off(N, 0);
    for (size_t i = 0; i < N; ++i) {
        off[i] = cr.dim1;
        cr.dim1 += Si[i].dim();
    }
    std::vector<size_t> offf(Sface.size(), 0);
    for (size_t f = 0; f < Sface.size(); ++f) {
        offf[f] = cr.dim2;
        cr.dim2 += Sface[f].dim();
    }

    Space sum(Si.empty() ? 0 : Si[0].ambient());
    for (const auto& s : Si)
        sum = sum.sum(s);
    cr.rank_d1 = sum.dim();

    std::vector<RatVec> rows2;
    for (size_t f = 0; f < Sface.size(); ++f) {
        const auto [i, j] = dd.faces[f];
        for (const auto& wv : Sface[f].basis()) {
            RatVec row(cr.dim1, Rat(0));
            const RatVec ci = Si[i].coords(wv);
            const RatVec cj = Si[j].coords(wv);
            for (size_t b = 0; b < ci.size(); ++b)
                row[off[i] + b] += ci[b];
            for (size_t b = 0; b < cj.size(); ++b)
                row[off[j] + b] -= cj[b];
            rows2.push_back(std::move(row));
        }
    }
    cr.rank_d2 = rows2.empty() ? 0 : rank(RatMatrix::from_rows(rows2));

    std::vector<RatVec> rows3;
    for (size_t t = 0; t < f3.size(); ++t) {
        for (const auto& vv : S3[t].basis()) {
            RatVec row(cr.dim2, Rat(0));
            for (size_t k = 0; k < f3[t].face_idx.size(); ++k) {
                const size_t f = f3[t].face_idx[k];
                const RatVec cf = Sface[f].coords(vv);
                for (size_t b = 0; b < cf.size(); ++b)
                    row[offf[f] + b] += Rat(f3[t].eps[k]) * cf[b];
            }
            rows3.push_back(std::move(row));
        }
    }
    cr.rank_d3 = rows3.empty() ? 0 : rank(RatMatrix::from_rows(rows3));
    return cr;
}

}  // namespace

SpanComplexDims t1_t2_via_span_complex(const DegreeData& dd)
{
    const Cone& c = *dd.cone;
    const size_t N = c.num_generators();
    const size_t n = c.rank;

    const std::vector<OrientedFace3> f3 = oriented_three_faces(dd);

    std::vector<Space> Si, Sface, S3;
    for (size_t i = 0; i < N; ++i)
        Si.push_back(span_of(*dd.hb, n, dd.Ei[i]));
    for (const auto& S : dd.Eface)
        Sface.push_back(span_of(*dd.hb, n, S));
    for (const auto& of : f3) {
        std::vector<size_t> inter = dd.Ei.empty() ? std::vector<size_t>{} : dd.Ei[of.gens[0]];
        for (size_t k = 1; k < of.gens.size(); ++k) {
            std::vector<size_t> next;
            std::set_intersection(inter.begin(), inter.end(), dd.Ei[of.gens[k]].begin(),
                                  dd.Ei[of.gens[k]].end(), std::back_inserter(next));
            inter = std::move(next);
        }
        S3.push_back(span_of(*dd.hb, n, inter));
    }

    const ComplexRanks sr = complex_ranks(dd, Si, Sface, S3, f3);

    SpanComplexDims out;
    out.t1 = sr.dim1 - sr.rank_d1 - sr.rank_d2;
    out.t2 = sr.dim2 - sr.rank_d2 - sr.rank_d3;

    // Height-trichotomy variant.
    std::vector<Space> Vi, Vface, V3;
    for (size_t i = 0; i < N; ++i) {
        const Int h = dot(c.generators[i], dd.R);
        if (h <= 0)
            Vi.push_back(Space(n));
        else if (h == 1) {
            RatMatrix row(1, n);
            for (size_t k = 0; k < n; ++k)
                row(0, k) = Rat(c.generators[i][k]);
            Vi.push_back(kernel_space(row));
        } else {
            Vi.push_back(full_space(n));
        }
    }
    for (const auto& [i, j] : dd.faces)
        Vface.push_back(Vi[i].intersect(Vi[j]));
    for (const auto& of : f3) {
        Space v = full_space(n);
        for (size_t g : of.gens)
            v = v.intersect(Vi[g]);
        V3.push_back(v);
    }
    const ComplexRanks vr = complex_ranks(dd, Vi, Vface, V3, f3);
    out.v_t1 = vr.dim1 - vr.rank_d1 - vr.rank_d2;
    out.v_t2 = vr.dim2 - vr.rank_d2 - vr.rank_d3;
    out.v_t1_valid = is_smooth_in_codim2(c);
    out.v_t2_valid = is_smooth_in_codim2(c) && is_smooth_in_codim3(c);
    return out;
}

Space face_span(const DegreeData& dd, size_t face_idx)
{
    return span_of(*dd.hb, dd.cone->rank, dd.Eface[face_idx]);
}

namespace {

// Covector on Q^E, supported on the coordinates in `S`, that agrees with the
// given values on the basis of `L` (a space supported in S) and vanishes on
// the standard-vector completion inside Q^S.
RatVec block_covector(size_t w, const std::vector<size_t>& S, const Space& L, const RatVec& vals)
{
    std::vector<RatVec> rows;  // in Q^S coordinates
    RatVec g;
    for (size_t b = 0; b < L.dim(); ++b) {
        RatVec r(S.size());
        for (size_t k = 0; k < S.size(); ++k)
            r[k] = L.basis()[b][S[k]];
        rows.push_back(std::move(r));
        g.push_back(vals[b]);
    }
    Space span(S.size(), rows);
    for (size_t k = 0; k < S.size() && rows.size() < S.size(); ++k) {
        RatVec e(S.size(), Rat(0));
        e[k] = 1;
        if (span.contains(e))
            continue;
        rows.push_back(e);
        g.push_back(Rat(0));
        span = Space(S.size(), rows);
    }
    assert(rows.size() == S.size());
    RatVec csub = covector_from_basis_values(rows, g);
    RatVec c(w, Rat(0));
    for (size_t k = 0; k < S.size(); ++k)
        c[S[k]] = csub[k];
    return c;
}

}  // namespace

SpanCocycle zigzag_bridge(const T2Element& t2, const DegreeData& dd)
{
    if (!dd.cocycles.contains(t2.tuple))
        fail(ErrorKind::CocycleViolation, "zigzag_bridge: input tuple is not a cocycle");

    const size_t w = dd.hb->size();
    const size_t N = dd.cone->num_generators();

    std::vector<RatVec> ext(N);
    for (size_t i = 0; i < N; ++i) {
        RatVec vals(dd.Li[i].dim());
        for (size_t b = 0; b < vals.size(); ++b)
            vals[b] = t2.tuple[dd.offsets[i] + b];
        ext[i] = block_covector(w, dd.Ei[i], dd.Li[i], vals);
    }

    SpanCocycle sc;
    sc.R = dd.R;
    for (size_t f = 0; f < dd.faces.size(); ++f) {
        const auto [i, j] = dd.faces[f];
        const Space sp = face_span(dd, f);
        RatVec theta(sp.dim());
        if (sp.dim() > 0) {
            RatMatrix A(dd.cone->rank, dd.Eface[f].size());
            for (size_t k = 0; k < dd.Eface[f].size(); ++k)
                for (size_t r = 0; r < dd.cone->rank; ++r)
                    A(r, k) = Rat(dd.hb->E[dd.Eface[f][k]][r]);
            for (size_t b = 0; b < sp.dim(); ++b) {
                auto y = solve(A, sp.basis()[b]);
                assert(y.has_value());
                RatVec yemb(w, Rat(0));
                for (size_t k = 0; k < dd.Eface[f].size(); ++k)
                    yemb[dd.Eface[f][k]] = (*y)[k];
                theta[b] = dot(ext[i], yemb) - dot(ext[j], yemb);
            }
        }
        sc.theta.push_back(std::move(theta));
    }
    return sc;
}

bool span_class_is_zero(const SpanCocycle& sc, const DegreeData& dd)
{
    const size_t N = dd.cone->num_generators();
    const size_t n = dd.cone->rank;
    std::vector<Space> Si;
    for (size_t i = 0; i < N; ++i)
        Si.push_back(span_of(*dd.hb, n, dd.Ei[i]));
    std::vector<size_t> off(N, 0);
    size_t total = 0;
    for (size_t i = 0; i < N; ++i) {
        off[i] = total;
        total += Si[i].dim();
    }
    std::vector<RatVec> rows;
    RatVec rhs;
    for (size_t f = 0; f < dd.faces.size(); ++f) {
        const auto [i, j] = dd.faces[f];
        const Space sp = face_span(dd, f);
        for (size_t b = 0; b < sp.dim(); ++b) {
            RatVec row(total, Rat(0));
            const RatVec ci = Si[i].coords(sp.basis()[b]);
            const RatVec cj = Si[j].coords(sp.basis()[b]);
            for (size_t k = 0; k < ci.size(); ++k)
                row[off[i] + k] += ci[k];
            for (size_t k = 0; k < cj.size(); ++k)
                row[off[j] + k] -= cj[k];
            rows.push_back(std::move(row));
            rhs.push_back(sc.theta[f][b]);
        }
    }
    if (rows.empty())
        return is_zero(rhs);
    return solve(RatMatrix::from_rows(rows), rhs).has_value();
}

T1Element multiply_by_character(const T1Element& x, const IntVec& s, const DegreeData& dd_R,
                                const DegreeData& dd_Rs)
{
    if (!in_dual_cone(*dd_R.cone, s))
        fail(ErrorKind::SNotInDualCone, "multiply_by_character: s is not in the dual cone");
    assert(dd_Rs.R == dd_R.R - s);
    RatVec vals(dd_Rs.L0.dim());
    for (size_t b = 0; b < vals.size(); ++b)
        vals[b] = x.eval(dd_R, dd_Rs.L0.basis()[b]);
    return T1Element{dd_Rs.R, vals};
}

T2Element multiply_by_character(const T2Element& x, const IntVec& s, const DegreeData& dd_R,
                                const DegreeData& dd_Rs)
{
    if (!in_dual_cone(*dd_R.cone, s))
        fail(ErrorKind::SNotInDualCone, "multiply_by_character: s is not in the dual cone");
    assert(dd_Rs.R == dd_R.R - s);
    RatVec tuple(dd_Rs.total_dim, Rat(0));
    for (size_t i = 0; i < dd_Rs.Li.size(); ++i)
        for (size_t b = 0; b < dd_Rs.Li[i].dim(); ++b)
            tuple[dd_Rs.offsets[i] + b] = x.eval_at(dd_R, i, dd_Rs.Li[i].basis()[b]);
    return make_t2_element(dd_Rs, tuple);
}

std::vector<ScanEntry> degree_scan(const Cone& c, const HilbertBasis& hb, const Int& low_bound)
{
    const size_t n = c.rank;
    const size_t N = c.num_generators();

    std::vector<Int> hi(N);
    for (size_t i = 0; i < N; ++i) {
        Int m = 0;
        for (const auto& e : hb.E)
            m = std::max(m, dot(c.generators[i], e));
        hi[i] = m + 1;
    }

    std::vector<size_t> base;
    {
        std::vector<RatVec> rows;
        Space span(n);
        for (size_t i = 0; i < N && base.size() < n; ++i) {
            RatVec r = to_rat(c.generators[i]);
            if (span.contains(r))
                continue;
            rows.push_back(r);
            span = Space(n, rows);
            base.push_back(i);
        }
    }
    Int volume = 1;
    for (size_t k = 0; k < n; ++k)
        volume *= hi[base[k]] + low_bound + 1;
    if (volume > 1000000)
        fail(ErrorKind::BoxTooLarge, "degree_scan: scan box exceeds 10^6 lattice points");

    RatMatrix B(n, n);
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j)
            B(k, j) = Rat(c.generators[base[k]][j]);

    std::vector<IntVec> degrees;
    IntVec h(n);
    for (size_t k = 0; k < n; ++k)
        h[k] = -low_bound;
    while (true) {
        RatVec rhs(n);
        for (size_t k = 0; k < n; ++k)
            rhs[k] = Rat(h[k]);
        auto x = solve(B, rhs);
        bool integral = x.has_value();
        IntVec R(n);
        for (size_t j = 0; j < n && integral; ++j) {
            if (denominator((*x)[j]) != 1)
                integral = false;
            else
                R[j] = numerator((*x)[j]);
        }
        if (integral) {
            bool ok = true;
            for (size_t i = 0; i < N && ok; ++i) {
                const Int v = dot(c.generators[i], R);
                ok = v >= -low_bound && v <= hi[i];
            }
            if (ok)
                degrees.push_back(R);
        }
        size_t k = 0;
        while (k < n) {
            if (h[k] < hi[base[k]]) {
                ++h[k];
                for (size_t l = 0; l < k; ++l)
                    h[l] = -low_bound;
                break;
            }
            ++k;
        }
        if (k == n)
            break;
    }
    std::sort(degrees.begin(), degrees.end(), lex_less);

    std::vector<ScanEntry> out;
    for (const auto& R : degrees) {
        const DegreeData dd = degree_data(c, hb, R);
        const T1Piece t1 = t1_piece(dd);
        const T2Piece t2 = t2_piece(dd);
        if (t1.dim == 0 && t2.dim == 0)
            continue;
        out.push_back(ScanEntry{R, t1.dim, t2.dim, t2.exact});
    }
    return out;
}

bool zcomplex_element_exact(const DegreeData& dd, size_t v)
{
    std::vector<size_t> S1;
    for (size_t i = 0; i < dd.Ei.size(); ++i)
        if (std::binary_search(dd.Ei[i].begin(), dd.Ei[i].end(), v))
            S1.push_back(i);
    if (S1.empty())
        return true;

    // Connectivity of S1 under the 2-face pairs containing v.
    std::map<size_t, size_t> parent;
    for (size_t g : S1)
        parent[g] = g;
    std::function<size_t(size_t)> find = [&](size_t x) -> size_t {
        while (parent[x] != x)
            x = parent[x];
        return x;
    };
    for (size_t f = 0; f < dd.faces.size(); ++f) {
        if (!std::binary_search(dd.Eface[f].begin(), dd.Eface[f].end(), v))
            continue;
        const auto [i, j] = dd.faces[f];
        parent[find(i)] = find(j);
    }
    size_t roots = 0;
    for (size_t g : S1)
        if (find(g) == g)
            ++roots;
    return roots == 1;
}

RatVec extended_covector(const T1Element& t1, const DegreeData& dd, bool alt)
{
    const size_t w = dd.hb->size();
    std::vector<RatVec> rows = dd.L0.basis();
    RatVec g(rows.size());
    for (size_t b = 0; b < rows.size(); ++b)
        g[b] = t1.vals[b];

    Space span = dd.L0;
    auto try_add = [&](const RatVec& cand) {
        if (span.contains(cand))
            return;
        rows.push_back(cand);
        g.push_back(Rat(0));
        span = span.sum(Space(w, {cand}));
    };
    const auto& leb = dd.LE.basis();
    for (size_t k = 0; k < leb.size(); ++k)
        try_add(alt ? leb[leb.size() - 1 - k] : leb[k]);
    for (size_t k = 0; k < w; ++k) {
        const size_t idx = alt ? w - 1 - k : k;
        RatVec e(w, Rat(0));
        e[idx] = 1;
        try_add(e);
    }
    assert(rows.size() == w);
    return covector_from_basis_values(rows, g);
}

}  // namespace toric
