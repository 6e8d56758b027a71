#pragma once

#include "toric/graded.hpp"

namespace toric {

// Anchor elements: r(i) has height 1 on a^i; r(i,j) has height 1 on a^i and
// height 0 on a^j (the latter exist exactly on unimodular 2-faces).
size_t choose_anchor(const Cone& c, const HilbertBasis& hb, size_t i, bool second_choice = false);
size_t choose_pair_anchor(const Cone& c, const HilbertBasis& hb, size_t i, size_t j);

// p(r) = e^r - <a^i, r> e^{r(i)} + (wall correction), a relation whose
// positive-part image has the same height on a^i as r itself, supported in
// E union the wall of a^i.
Relation elementary_relation(const Cone& c, const HilbertBasis& hb, size_t r, size_t i,
                             bool second_anchor = false);

// Pair variant on the 2-face (i,j): height conditions hold for both indices.
Relation elementary_relation_pair(const Cone& c, const HilbertBasis& hb, size_t r, size_t i,
                                  size_t j);

struct CupOptions {
    bool alt_extension = false;   // alternative zero-extension complements
    bool alt_anchor = false;      // second-smallest anchors where available
    bool extra_split = false;     // pad decompositions with a cancelling pair
    // Where q^+ dominates the liftings of both degrees, evaluate t through
    // the product form phi(q) psi(q) (a different valid lifting choice; the
    // class must not move).
    bool product_shortcut = false;
};

// Decomposition of q in L(E_i^{R+S}) into elementary pieces, each supported
// in E_i^{R+S} with positive-part height below <a^i, R+S>; verified at
// runtime before returning.
std::vector<Relation> decompose(const DegreeData& dd_T, size_t i, const Relation& q,
                                const CupOptions& opt = {});

// Same, valid simultaneously for both edges of a 2-face.
std::vector<Relation> decompose_pair(const DegreeData& dd_T, size_t i, size_t j,
                                     const Relation& q);

// t_{phi,psi,R,S}(q) evaluated through fixed covector extensions of phi, psi.
Rat t_value(const HilbertBasis& hb, const SectionPhi& Phi, const RatVec& ext_phi,
            const RatVec& ext_psi, const IntVec& R, const IntVec& S, const Relation& q);

// Two-argument version t(alpha, beta) for nonnegative vectors with equal
// image; t(q) = t(q^+, q^-).
Rat t_pair_value(const HilbertBasis& hb, const SectionPhi& Phi, const RatVec& ext_phi,
                 const RatVec& ext_psi, const IntVec& R, const IntVec& S, const IntVec& alpha,
                 const IntVec& beta);

// The graded cup product: phi in T^1(-R), psi in T^1(-S) to T^2(-(R+S)).
// Evaluates every component functional through decompose + t_value, checks
// the cocycle condition (including against the pair-variant decompositions)
// and returns the canonical form.
T2Element cup(const DegreeData& dd_R, const DegreeData& dd_S, const DegreeData& dd_T,
              const SectionPhi& Phi, const T1Element& phi, const T1Element& psi,
              const CupOptions& opt = {});

}  // namespace toric
