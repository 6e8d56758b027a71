#include "toric/cup.hpp"

#include <algorithm>

namespace toric {

namespace {

std::vector<size_t> wall_indices(const Cone& c, const HilbertBasis& hb,
                                 const std::vector<size_t>& gens)
{
    std::vector<size_t> out;
    for (size_t v = 0; v < hb.size(); ++v) {
        bool on_wall = true;
        for (size_t g : gens)
            if (dot(c.generators[g], hb.E[v]) != 0) {
                on_wall = false;
                break;
            }
        if (on_wall)
            out.push_back(v);
    }
    return out;
}

// Integer combination of the wall columns representing m; the wall elements
// generate the full wall lattice, so this always has an integer solution.
IntVec wall_correction(const Cone& c, const HilbertBasis& hb, const std::vector<size_t>& wall,
                       const IntVec& m)
{
    const size_t w = hb.size();
    IntVec z(w, Int(0));
    if (is_zero(m))
        return z;
    if (wall.empty())
        fail(ErrorKind::CorrectionNotFound, "elementary_relation: empty wall");
    IntMatrix A(c.rank, wall.size());
    for (size_t k = 0; k < wall.size(); ++k)
        for (size_t r = 0; r < c.rank; ++r)
            A(r, k) = hb.E[wall[k]][r];
    auto y = solve_integer(A, m);
    if (!y) {
        // distinguish a rational-only wall from one that misses m entirely
        auto yr = solve(to_rat(A), to_rat(m));
        if (!yr)
            fail(ErrorKind::CorrectionNotFound,
                 "elementary_relation: wall does not span the correction");
        fail(ErrorKind::CorrectionNotFound,
             "elementary_relation: no integral wall decomposition (rational only)");
    }
    for (size_t k = 0; k < wall.size(); ++k)
        z[wall[k]] = (*y)[k];
    return z;
}

Relation build_elementary(const Cone& c, const HilbertBasis& hb, size_t r,
                          const std::vector<std::pair<size_t, size_t>>& anchors_with_heights,
                          const std::vector<size_t>& wall)
{
    const size_t w = hb.size();
    IntVec p(w, Int(0));
    p[r] += 1;
    IntVec m = -hb.E[r];
    for (const auto& [anchor, gen] : anchors_with_heights) {
        const Int h = dot(c.generators[gen], hb.E[r]);
        p[anchor] -= h;
        m = m + h * hb.E[anchor];
    }
    const IntVec z = wall_correction(c, hb, wall, m);
    for (size_t v = 0; v < w; ++v)
        p[v] += z[v];
    Relation rel{p};
    assert(is_zero(hb.pi(rel.q)));
    return rel;
}

}  // namespace

size_t choose_anchor(const Cone& c, const HilbertBasis& hb, size_t i, bool second_choice)
{
    size_t first = size_t(-1);
    for (size_t v = 0; v < hb.size(); ++v) {
        if (dot(c.generators[i], hb.E[v]) == 1) {
            if (first == size_t(-1)) {
                first = v;
                if (!second_choice)
                    return v;
            } else {
                return v;  // second-smallest, for the decomposition-independence tests
            }
        }
    }
    if (first != size_t(-1))
        return first;
    fail(ErrorKind::NoHeightOneElement,
         "choose_anchor: no Hilbert basis element of height 1 on generator " + std::to_string(i));
}

size_t choose_pair_anchor(const Cone& c, const HilbertBasis& hb, size_t i, size_t j)
{
    for (size_t v = 0; v < hb.size(); ++v)
        if (dot(c.generators[i], hb.E[v]) == 1 && dot(c.generators[j], hb.E[v]) == 0)
            return v;
    fail(ErrorKind::NoHeightOneElement,
         "choose_pair_anchor: no element with heights (1,0) on generators " + std::to_string(i) +
             "," + std::to_string(j));
}

Relation elementary_relation(const Cone& c, const HilbertBasis& hb, size_t r, size_t i,
                             bool second_anchor)
{
    const std::vector<size_t> wall = wall_indices(c, hb, {i});
    const Int h = dot(c.generators[i], hb.E[r]);
    std::vector<std::pair<size_t, size_t>> anchors;
    if (h != 0)
        anchors.push_back({choose_anchor(c, hb, i, second_anchor), i});
    Relation rel = build_elementary(c, hb, r, anchors, wall);
    // Height of the positive part matches the height of r itself, except for
    // the anchor's own relation, which cancels to zero.
    if (!is_zero(rel.q) &&
        dot(c.generators[i], rel.bar(hb)) != dot(c.generators[i], hb.E[r]))
        fail(ErrorKind::CorrectionNotFound,
             "elementary_relation: positive-part height check failed");
    return rel;
}

Relation elementary_relation_pair(const Cone& c, const HilbertBasis& hb, size_t r, size_t i,
                                  size_t j)
{
    const std::vector<size_t> wall = wall_indices(c, hb, {i, j});
    std::vector<std::pair<size_t, size_t>> anchors;
    if (dot(c.generators[i], hb.E[r]) != 0)
        anchors.push_back({choose_pair_anchor(c, hb, i, j), i});
    if (dot(c.generators[j], hb.E[r]) != 0)
        anchors.push_back({choose_pair_anchor(c, hb, j, i), j});
    Relation rel = build_elementary(c, hb, r, anchors, wall);
    if (!is_zero(rel.q) &&
        (dot(c.generators[i], rel.bar(hb)) != dot(c.generators[i], hb.E[r]) ||
         dot(c.generators[j], rel.bar(hb)) != dot(c.generators[j], hb.E[r])))
        fail(ErrorKind::CorrectionNotFound,
             "elementary_relation_pair: positive-part height check failed");
    return rel;
}

namespace {

void verify_piece(const DegreeData& dd, const std::vector<size_t>& gens, const Relation& piece)
{
    for (size_t v : piece.support())
        for (size_t g : gens)
            if (!std::binary_search(dd.Ei[g].begin(), dd.Ei[g].end(), v))
                fail(ErrorKind::CorrectionNotFound,
                     "decompose: piece leaves E_i^R at generator " + std::to_string(g));
    const IntVec bar = piece.bar(*dd.hb);
    for (size_t g : gens)
        if (dot(dd.cone->generators[g], bar) >= dot(dd.cone->generators[g], dd.R))
            fail(ErrorKind::CorrectionNotFound,
                 "decompose: piece exceeds the height bound at generator " + std::to_string(g));
}

std::vector<Relation> decompose_impl(const DegreeData& dd, const std::vector<size_t>& gens,
                                     const Relation& q, const CupOptions& opt)
{
    const Cone& c = *dd.cone;
    const HilbertBasis& hb = *dd.hb;
    for (size_t v : q.support())
        for (size_t g : gens)
            if (!std::binary_search(dd.Ei[g].begin(), dd.Ei[g].end(), v))
                fail(ErrorKind::CorrectionNotFound, "decompose: q not supported in E_i^R");

    std::vector<Relation> pieces;
    IntVec rest = q.q;
    for (size_t v : q.support()) {
        Relation p = gens.size() == 1
                         ? elementary_relation(c, hb, v, gens[0], opt.alt_anchor)
                         : elementary_relation_pair(c, hb, v, gens[0], gens[1]);
        const Int count = abs(q.q[v]);
        const Relation signed_p{q.q[v] > 0 ? p.q : -p.q};
        for (Int k = 0; k < count; ++k) {
            pieces.push_back(signed_p);
            rest = rest - signed_p.q;
        }
    }
    if (!is_zero(rest)) {
        // remainder of the elementary decomposition: supported on the wall(s)
        for (size_t v = 0; v < rest.size(); ++v)
            if (rest[v] != 0)
                for (size_t g : gens)
                    if (dot(c.generators[g], hb.E[v]) != 0)
                        fail(ErrorKind::CorrectionNotFound,
                             "decompose: remainder leaves the wall");
        pieces.push_back(Relation{rest});
    }

    if (opt.extra_split && !pieces.empty()) {
        // A cancelling pair changes the multiset but not the sum; class-level
        // results must not move.
        pieces.push_back(pieces.front());
        pieces.push_back(Relation{-pieces.front().q});
    }

    for (const auto& p : pieces)
        verify_piece(dd, gens, p);
    return pieces;
}

}  // namespace

std::vector<Relation> decompose(const DegreeData& dd_T, size_t i, const Relation& q,
                                const CupOptions& opt)
{
    return decompose_impl(dd_T, {i}, q, opt);
}

std::vector<Relation> decompose_pair(const DegreeData& dd_T, size_t i, size_t j, const Relation& q)
{
    return decompose_impl(dd_T, {i, j}, q, CupOptions{});
}

Rat t_value(const HilbertBasis& hb, const SectionPhi& Phi, const RatVec& ext_phi,
            const RatVec& ext_psi, const IntVec& R, const IntVec& S, const Relation& q)
{
    return t_pair_value(hb, Phi, ext_phi, ext_psi, R, S, q.positive_part(), q.negative_part());
}

Rat t_pair_value(const HilbertBasis& hb, const SectionPhi& Phi, const RatVec& ext_phi,
                 const RatVec& ext_psi, const IntVec& R, const IntVec& S, const IntVec& alpha,
                 const IntVec& beta)
{
    const IntVec diff = alpha - beta;
    const Rat phi_q = dot(ext_phi, to_rat(diff));
    const Rat psi_q = dot(ext_psi, to_rat(diff));
    const IntVec img = hb.pi(alpha);
    assert(img == hb.pi(beta));

    Rat result = 0;
    if (phi_q != 0) {
        const IntVec arg = Phi(img - R) + Phi(R) - beta;
        result += phi_q * dot(ext_psi, to_rat(arg));
    }
    if (psi_q != 0) {
        const IntVec arg = Phi(img - S) + Phi(S) - alpha;
        result += psi_q * dot(ext_phi, to_rat(arg));
    }
    return result;
}

namespace {

bool dominates(const IntVec& a, const IntVec& b)
{
    for (size_t v = 0; v < a.size(); ++v)
        if (a[v] < b[v])
            return false;
    return true;
}

// (phi cup psi)_i evaluated on an integer relation via one decomposition.
Rat cup_component_value(const DegreeData& dd_T, const SectionPhi& Phi, const RatVec& ext_phi,
                        const RatVec& ext_psi, const IntVec& R, const IntVec& S,
                        const std::vector<Relation>& pieces, const CupOptions& opt,
                        const IntVec& liftR, const IntVec& liftS)
{
    Rat val = 0;
    for (const auto& piece : pieces) {
        if (opt.product_shortcut) {
            const IntVec plus = piece.positive_part();
            if (dominates(plus, liftR) && dominates(plus, liftS)) {
                const RatVec qr = to_rat(piece.q);
                val += dot(ext_phi, qr) * dot(ext_psi, qr);
                continue;
            }
        }
        val += t_value(*dd_T.hb, Phi, ext_phi, ext_psi, R, S, piece);
    }
    return val;
}

}  // namespace

T2Element cup(const DegreeData& dd_R, const DegreeData& dd_S, const DegreeData& dd_T,
              const SectionPhi& Phi, const T1Element& phi, const T1Element& psi,
              const CupOptions& opt)
{
    const Cone& c = *dd_T.cone;
    if (!is_smooth_in_codim2(c))
        fail(ErrorKind::NotSmoothCodim2, "cup: cone is not smooth in codimension 2");
    assert(phi.R == dd_R.R && psi.R == dd_S.R);
    assert(dd_T.R == dd_R.R + dd_S.R);

    const RatVec ext_phi = extended_covector(phi, dd_R, opt.alt_extension);
    const RatVec ext_psi = extended_covector(psi, dd_S, opt.alt_extension);
    const IntVec liftR = Phi(dd_R.R);
    const IntVec liftS = Phi(dd_S.R);

    RatVec tuple(dd_T.total_dim, Rat(0));
    for (size_t i = 0; i < c.num_generators(); ++i) {
        for (size_t b = 0; b < dd_T.Li[i].dim(); ++b) {
            const RatVec& bas = dd_T.Li[i].basis()[b];
            const IntVec qz = primitive_integer(bas);
            // bas = scale * qz at any common nonzero coordinate
            Rat scale = 0;
            for (size_t v = 0; v < qz.size(); ++v)
                if (qz[v] != 0) {
                    scale = bas[v] / Rat(qz[v]);
                    break;
                }
            const Relation q{qz};
            const Rat val = cup_component_value(dd_T, Phi, ext_phi, ext_psi, dd_R.R, dd_S.R,
                                                decompose(dd_T, i, q, opt), opt, liftR, liftS);
            tuple[dd_T.offsets[i] + b] = scale * val;
        }
    }

    T2Element out = make_t2_element(dd_T, tuple);  // verifies the cocycle condition

    // Independent check on the 2-face intersections: the simultaneous
    // decomposition must reproduce both component values.
    for (size_t f = 0; f < dd_T.faces.size(); ++f) {
        const auto [i, j] = dd_T.faces[f];
        for (const auto& bas : dd_T.Lface[f].basis()) {
            const IntVec qz = primitive_integer(bas);
            Rat scale = 0;
            for (size_t v = 0; v < qz.size(); ++v)
                if (qz[v] != 0) {
                    scale = bas[v] / Rat(qz[v]);
                    break;
                }
            const Relation q{qz};
            const Rat val =
                scale * cup_component_value(dd_T, Phi, ext_phi, ext_psi, dd_R.R, dd_S.R,
                                            decompose_pair(dd_T, i, j, q), opt, liftR, liftS);
            if (val != out.eval_at(dd_T, i, bas) || val != out.eval_at(dd_T, j, bas))
                fail(ErrorKind::CocycleViolation,
                     "cup: pair decomposition disagrees with component values");
        }
    }
    return out;
}

}  // namespace toric
