#pragma once

#include "toric/cone.hpp"

#include <map>

namespace toric {

// Minimal generating set E of the semigroup (dual cone) cap M, the matrix of
// pi : Z^E -> M, and an integer linear right-inverse of it.
struct HilbertBasis {
    std::vector<IntVec> E;     // lex-sorted
    IntMatrix pi_matrix;       // rank x |E|, columns are the elements of E
    IntMatrix linear_section;  // |E| x rank, pi_matrix * linear_section = id

    size_t size() const { return E.size(); }
    // Index of e in E, or npos.
    size_t index_of(const IntVec& e) const;

    IntVec pi(const IntVec& a) const;
};

HilbertBasis hilbert_basis(const Cone& c);

// Elements of E with strictly positive height on every generator.
std::vector<size_t> interior_elements(const Cone& c, const HilbertBasis& hb);

// The fixed set-theoretic section Phi of pi. Semigroup members decompose
// greedily over E (maximal multiples, fixed element order, with a complete
// backtracking fallback); everything else goes through the linear section.
// Always pi(phi(m)) = m; members get nonnegative vectors.
class SectionPhi {
public:
    SectionPhi(const Cone& c, const HilbertBasis& hb, bool reversed_order = false)
        : cone_(&c), hb_(&hb), reversed_(reversed_order)
    {
    }

    IntVec operator()(const IntVec& m) const;

private:
    const Cone* cone_;
    const HilbertBasis* hb_;
    bool reversed_;
    mutable std::map<IntVec, IntVec> cache_;

    bool decompose_member(const IntVec& m, IntVec& out) const;
};

bool membership(const IntVec& m, const Cone& c);

}  // namespace toric
