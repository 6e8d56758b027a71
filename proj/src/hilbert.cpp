#include "toric/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace toric {

size_t HilbertBasis::index_of(const IntVec& e) const
{
    auto it = std::lower_bound(E.begin(), E.end(), e, lex_less);
    if (it != E.end() && *it == e)
        return size_t(it - E.begin());
    return size_t(-1);
}

IntVec HilbertBasis::pi(const IntVec& a) const
{
    if (a.size() != E.size())
        fail(ErrorKind::DimensionMismatch, "pi: coefficient vector has wrong length");
    return pi_matrix * a;
}

namespace {

// Lattice points of {x : 0 <= <a^i, x> <= H_i for all i}, enumerated through
// the height tuples of a full-rank generator subset.
std::vector<IntVec> height_box_points(const Cone& c, const std::vector<Int>& H)
{
    const size_t n = c.rank;
    std::vector<size_t> base;
    {
        std::vector<RatVec> rows;
        Space span(n);
        for (size_t i = 0; i < c.num_generators() && base.size() < n; ++i) {
            RatVec r = to_rat(c.generators[i]);
            if (span.contains(r))
                continue;
            rows.push_back(r);
            span = Space(n, rows);
            base.push_back(i);
        }
        assert(base.size() == n);
    }

    Int volume = 1;
    for (size_t k = 0; k < n; ++k)
        volume *= H[base[k]] + 1;
    if (volume > 10000000)
        fail(ErrorKind::BoxTooLarge, "hilbert_basis: height box too large");

    RatMatrix B(n, n);
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j)
            B(k, j) = Rat(c.generators[base[k]][j]);

    std::vector<IntVec> points;
    IntVec h(n, Int(0));
    while (true) {
        RatVec rhs(n);
        for (size_t k = 0; k < n; ++k)
            rhs[k] = Rat(h[k]);
        auto x = solve(B, rhs);
        assert(x.has_value());
        bool integral = true;
        IntVec xi(n);
        for (size_t j = 0; j < n && integral; ++j) {
            if (denominator((*x)[j]) != 1)
                integral = false;
            else
                xi[j] = numerator((*x)[j]);
        }
        if (integral) {
            bool ok = true;
            for (size_t i = 0; i < c.num_generators() && ok; ++i) {
                const Int v = dot(c.generators[i], xi);
                ok = v >= 0 && v <= H[i];
            }
            if (ok)
                points.push_back(xi);
        }
        // increment the height tuple
        size_t k = 0;
        while (k < n) {
            if (h[k] < H[base[k]]) {
                ++h[k];
                for (size_t l = 0; l < k; ++l)
                    h[l] = 0;
                break;
            }
            ++k;
        }
        if (k == n)
            break;
    }
    return points;
}

}  // namespace

HilbertBasis hilbert_basis(const Cone& c)
{
    const DualCone d = dual_cone(c);

    // Every irreducible element lies in the zonotope spanned by the extreme
    // rays of the dual cone, hence in the height box below.
    std::vector<Int> H(c.num_generators(), Int(0));
    for (size_t i = 0; i < c.num_generators(); ++i)
        for (const auto& u : d.rays)
            H[i] += dot(c.generators[i], u);

    std::vector<IntVec> box = height_box_points(c, H);

    // total height, for a cheap reducibility prefilter
    auto total = [&](const IntVec& x) {
        Int s = 0;
        for (size_t i = 0; i < c.num_generators(); ++i)
            s += dot(c.generators[i], x);
        return s;
    };

    std::vector<IntVec> candidates;
    for (auto& x : box)
        if (!is_zero(x))
            candidates.push_back(x);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const IntVec& a, const IntVec& b) { return total(a) < total(b); });

    std::vector<IntVec> E;
    for (const auto& x : candidates) {
        bool reducible = false;
        for (const auto& y : candidates) {
            if (total(y) >= total(x))
                break;
            if (in_dual_cone(c, x - y) && !is_zero(x - y)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            E.push_back(x);
    }
    std::sort(E.begin(), E.end(), lex_less);

    HilbertBasis hb;
    hb.E = E;
    hb.pi_matrix = IntMatrix::from_columns(E);
    hb.linear_section = integer_section(hb.pi_matrix);
    return hb;
}

std::vector<size_t> interior_elements(const Cone& c, const HilbertBasis& hb)
{
    std::vector<size_t> out;
    for (size_t v = 0; v < hb.size(); ++v) {
        bool interior = true;
        for (const auto& g : c.generators)
            if (dot(g, hb.E[v]) == 0) {
                interior = false;
                break;
            }
        if (interior)
            out.push_back(v);
    }
    return out;
}

bool membership(const IntVec& m, const Cone& c) { return in_dual_cone(c, m); }

namespace {

// Largest k with m - k*e still in the dual cone.
Int max_multiple(const Cone& c, const IntVec& m, const IntVec& e)
{
    Int k = -1;
    for (const auto& g : c.generators) {
        const Int he = dot(g, e);
        if (he <= 0)
            continue;
        const Int hm = dot(g, m);
        const Int bound = hm / he;  // hm >= 0 here
        if (k < 0 || bound < k)
            k = bound;
    }
    assert(k >= 0);
    return k;
}

}  // namespace

bool SectionPhi::decompose_member(const IntVec& m, IntVec& out) const
{
    const size_t w = hb_->size();
    std::vector<size_t> order(w);
    for (size_t v = 0; v < w; ++v)
        order[v] = reversed_ ? w - 1 - v : v;

    // Depth-first search trying maximal multiples first; the first branch is
    // exactly the greedy pass, backtracking covers greedy dead-ends.
    std::set<std::pair<size_t, IntVec>> dead;
    IntVec coeff(w, Int(0));

    std::function<bool(size_t, const IntVec&)> go = [&](size_t pos, const IntVec& rem) -> bool {
        if (is_zero(rem))
            return true;
        if (pos == w)
            return false;
        if (dead.count({pos, rem}))
            return false;
        const IntVec& e = hb_->E[order[pos]];
        for (Int k = max_multiple(*cone_, rem, e); k >= 0; --k) {
            if (go(pos + 1, rem - k * e)) {
                coeff[order[pos]] = k;
                return true;
            }
        }
        dead.insert({pos, rem});
        return false;
    };

    if (!go(0, m))
        return false;
    out = coeff;
    return true;
}

IntVec SectionPhi::operator()(const IntVec& m) const
{
    if (m.size() != cone_->rank)
        fail(ErrorKind::DimensionMismatch, "phi: element of wrong rank");
    auto it = cache_.find(m);
    if (it != cache_.end())
        return it->second;

    IntVec result;
    if (in_dual_cone(*cone_, m)) {
        const bool ok = decompose_member(m, result);
        // E generates the semigroup, so a member always decomposes.
        assert(ok);
        (void)ok;
    } else {
        result = hb_->linear_section * m;
    }
    assert(hb_->pi(result) == m);
    cache_.emplace(m, result);
    return result;
}

}  // namespace toric
