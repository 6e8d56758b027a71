#pragma once

#include "toric/hilbert.hpp"

#include <map>
#include <string>

namespace toric {

// An integral relation among Hilbert basis elements: q in Z^E with pi(q) = 0.
struct Relation {
    IntVec q;

    IntVec positive_part() const;
    IntVec negative_part() const;
    std::vector<size_t> support() const;
    // pi(q^+) = pi(q^-), the common image.
    IntVec bar(const HilbertBasis& hb) const;
};

// Everything attached to a fixed degree R: the sets E_i^R, E_0^R and the
// 2-face intersections, together with the rational dependency spaces L(.)
// inside Q^E, and the coordinate machinery for the dual complex.
struct DegreeData {
    const Cone* cone = nullptr;
    const HilbertBasis* hb = nullptr;
    IntVec R;

    std::vector<std::vector<size_t>> Ei;   // per generator, indices into E
    std::vector<size_t> E0;                // union, ascending
    std::vector<std::pair<size_t, size_t>> faces;  // 2-face pairs of the complex
    std::vector<std::vector<size_t>> Eface;        // per 2-face, intersection

    Space LE;     // L(E)
    Space L0;     // L(E_0^R)
    std::vector<Space> Li;     // per generator
    std::vector<Space> Lface;  // per 2-face
    Space Lsum;   // sum_i L(E_i^R)

    // Dual-side coordinates: a functional tuple on ⊕_i L(E_i^R) is the vector
    // of its values on the canonical bases, blocks laid out by generator.
    std::vector<size_t> offsets;
    size_t total_dim = 0;
    Space W1image;     // restrictions of functionals on sum_i L(E_i^R)
    Space cocycles;    // tuples agreeing on every L(E_i cap E_j)

    size_t block_of(size_t i) const { return offsets[i]; }
};

DegreeData degree_data(const Cone& c, const HilbertBasis& hb, const IntVec& R);

// A representative of a class in T^1(-R): a functional on L(E_0^R) vanishing
// on sum_i L(E_i^R), stored by its values on the canonical basis of L(E_0^R).
struct T1Element {
    IntVec R;
    RatVec vals;

    Rat eval(const DegreeData& dd, const RatVec& x) const;
    bool is_zero() const { return toric::is_zero(vals); }
    bool operator==(const T1Element& o) const { return R == o.R && vals == o.vals; }
};

// A representative of a class in T^2(-R) (or of the H^1 subspace when the
// cone is not smooth in codimension 2): a cocycle tuple of functionals on the
// L(E_i^R), stored blockwise; `canonical` is the tuple reduced modulo the
// restrictions of global functionals, so classes are equal iff canonical
// forms are equal.
struct T2Element {
    IntVec R;
    RatVec tuple;      // raw concatenated values
    RatVec canonical;  // tuple reduced modulo W1image

    Rat eval_at(const DegreeData& dd, size_t i, const RatVec& x) const;
    bool class_is_zero() const { return toric::is_zero(canonical); }
    bool operator==(const T2Element& o) const { return R == o.R && canonical == o.canonical; }
};

T2Element make_t2_element(const DegreeData& dd, const RatVec& tuple);

struct T1Piece {
    size_t dim = 0;
    std::vector<T1Element> basis;
};

T1Piece t1_piece(const DegreeData& dd);

struct T2Piece {
    size_t dim = 0;
    std::vector<T2Element> basis;
    bool exact = true;   // H^1 equals T^2 (smooth in codimension 2)
    std::string label;   // qualifier when not exact / not applicable
};

T2Piece t2_piece(const DegreeData& dd);

// Dimensions read off the dual of the span complex, plus the coarse variant
// built from the height trichotomy spaces; validity flags say when the
// variant provably computes the same thing.
struct SpanComplexDims {
    size_t t1 = 0, t2 = 0;
    size_t v_t1 = 0, v_t2 = 0;
    bool v_t1_valid = false, v_t2_valid = false;
};

SpanComplexDims t1_t2_via_span_complex(const DegreeData& dd);

// A cocycle of the dual span complex in degree 2: per 2-face, a functional on
// span(E_i^R cap E_j^R) given by values on the canonical basis of that span.
struct SpanCocycle {
    IntVec R;
    std::vector<RatVec> theta;
};

// Connecting isomorphism H^1(L-dual) -> H^2(span-dual): extend each psi_i by
// zero across Q^{E_i}, take differences over 2-faces, descend to the spans.
SpanCocycle zigzag_bridge(const T2Element& t2, const DegreeData& dd);

// Whether the class of the cocycle in H^2(span-dual) vanishes.
bool span_class_is_zero(const SpanCocycle& sc, const DegreeData& dd);

// span(E_i^R cap E_j^R) for the k-th 2-face.
Space face_span(const DegreeData& dd, size_t face_idx);

// Restriction along L(E^(R-s)) subset L(E^R); s must lie in the semigroup.
T1Element multiply_by_character(const T1Element& x, const IntVec& s, const DegreeData& dd_R,
                                const DegreeData& dd_Rs);
T2Element multiply_by_character(const T2Element& x, const IntVec& s, const DegreeData& dd_R,
                                const DegreeData& dd_Rs);

struct ScanEntry {
    IntVec R;
    size_t t1 = 0, t2 = 0;
    bool t2_exact = true;
};

// All degrees R in the default box with a nonzero T^1 or T^2 piece,
// lex-sorted by degree. The box is -low_bound <= <a^i, R> <= maxheight_i + 1.
std::vector<ScanEntry> degree_scan(const Cone& c, const HilbertBasis& hb,
                                   const Int& low_bound = 2);

// Middle/right exactness of the per-element summand of the Z^{E^R} complex:
// the generators whose thick facet contains E[v] must form a connected graph
// under the 2-face pairs.
bool zcomplex_element_exact(const DegreeData& dd, size_t v);

// The extended covector in Q^E of a T^1 representative: the functional on
// L(E_0^R), extended by zero along the fixed complement of L(E_0^R) in L(E)
// and then along the fixed complement of L(E) in Q^E. `alt` flips to the
// alternative (reversed-order) complements, used by well-definedness tests.
RatVec extended_covector(const T1Element& t1, const DegreeData& dd, bool alt = false);

}  // namespace toric
