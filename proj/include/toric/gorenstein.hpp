#pragma once

#include "toric/cup.hpp"

#include <optional>

namespace toric {

// Convex lattice polygon, vertices in counterclockwise order. Edges need not
// be primitive; `primitive_edges` records whether they all are, since the
// closed-form shortcuts below are only guaranteed in that case.
struct LatticePolygon {
    std::vector<IntVec> vertices;

    size_t size() const { return vertices.size(); }
    std::vector<IntVec> edges() const;  // d^i = a^{i+1} - a^i, cyclic
    bool primitive_edges() const;
};

LatticePolygon make_polygon(const std::vector<IntVec>& vertices);

// The polygon's cone at height one, with the Hilbert basis and R* = [0,0,1].
struct GorensteinContext {
    LatticePolygon Q;
    Cone cone;
    HilbertBasis hb;
    IntVec Rstar;
};

GorensteinContext cone_from_polygon(const LatticePolygon& Q);

// V = { t : sum_i t_i d^i = 0 }, the Minkowski-summand parameter space.
struct SummandSpace {
    Space V;     // subspace of Q^N
    RatVec one;  // the distinguished vector (1,...,1)
};

SummandSpace summand_space(const LatticePolygon& Q);

// Psi(t, e): the maximum of -c over the Minkowski summand Q_t, for
// e = [c; eta] in E, via the edge-path sum up to the first maximizing vertex.
Rat psi_pairing(const LatticePolygon& Q, const HilbertBasis& hb, const RatVec& t, const IntVec& e);

// The functional q |-> sum_e Psi(t,e) q_e on L(E_0^{R*}); checked to vanish
// on sum_i L(E_i^{R*}). Throws IsoCheckFailed if it does not.
T1Element t1_iso_image(const GorensteinContext& ctx, const DegreeData& dd_Rstar, const RatVec& t);

// Rank and injectivity checks of t |-> t1_iso_image(t): the all-ones vector
// must map to zero and a complement of it must map to a basis of T^1(-R*).
void validate_t1_iso(const GorensteinContext& ctx, const DegreeData& dd_Rstar);

Int diameter(const LatticePolygon& Q, const IntVec& c);

// k1 = min over nonzero directions of the diameter; k2 = min over pairs of
// independent directions of the larger diameter.
std::pair<Int, Int> k_thresholds(const LatticePolygon& Q);

// Piecewise dimension of T^2(-kR*) from the thresholds, k >= 2.
size_t t2_dim_closed_form(const Int& k1, const Int& k2, const Int& k);

// T^2(-kR*) inside span(d^1..d^N): the annihilator of span(cap_i E_i^{kR*})
// under the pairing that identifies functionals on M/(Q R*) with vectors in
// the edge plane.
struct T2Embedding {
    Space span_intersection;  // span(cap_i E_i^{kR*}) in Q^3
    size_t dim;               // 3 - dim(span_intersection)
    Space annihilator2;       // vectors u in Q^2 with <(u,0), span_intersection> = 0
};

T2Embedding t2_embedding(const GorensteinContext& ctx, const DegreeData& dd_k);

// sum_i s_i t_i d^i as a vector in Q^2.
RatVec cup_closed_form(const LatticePolygon& Q, const RatVec& s, const RatVec& t);

// General T^2 representative at -2R* bridged to the edge plane through the
// span complex; nullopt when some 2-face span is too small to evaluate on
// all of M (only happens off the primitive-edge case).
std::optional<RatVec> bridged_vector(const GorensteinContext& ctx, const DegreeData& dd,
                                     const T2Element& t2);

struct CrossValidateEntry {
    Int k;
    size_t closed_form = 0;
    size_t machinery = 0;
    size_t embedding = 0;
    bool match = false;
};

struct CupCompareEntry {
    size_t s_index = 0, t_index = 0;
    RatVec general;      // bridged vector of the general cup
    RatVec closed_form;  // sum s_i t_i d^i
    bool match = false;
};

struct CrossValidateReport {
    std::vector<CrossValidateEntry> dims;
    std::vector<CupCompareEntry> cups;
    bool cup_comparison_ran = false;
    std::string cup_skip_reason;
    bool all_match = false;
};

CrossValidateReport cross_validate(const GorensteinContext& ctx, const Int& kmax);

struct VersalEquation {
    Int k;
    std::vector<IntVec> coefficients;  // the edge vectors d^1..d^N
};

struct VersalReport {
    std::vector<VersalEquation> equations;
    bool linear_part_cuts_V = false;
    bool quadratic_part_matches_cup = false;
};

VersalReport versal_equations(const LatticePolygon& Q, const Int& kmax);

}  // namespace toric
