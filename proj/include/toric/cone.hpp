#pragma once

#include "toric/linalg.hpp"

#include <utility>

namespace toric {

// Pointed, full-dimensional rational cone given by its primitive fundamental
// generators, with facet normals and the 2-face list precomputed.
struct Cone {
    size_t rank = 0;
    std::vector<IntVec> generators;           // primitive, deduplicated, input order
    std::vector<IntVec> dropped;              // redundant input generators
    std::vector<IntVec> facet_normals;        // primitive, lex-sorted
    std::vector<std::vector<size_t>> incidence;  // per generator: facets containing it
    std::vector<std::pair<size_t, size_t>> two_face_pairs;  // 0-based, i<j, lex order

    size_t num_generators() const { return generators.size(); }
};

struct DualCone {
    size_t rank = 0;
    std::vector<IntVec> rays;  // primitive extreme rays, lex-sorted
};

// Extreme rays of {x in Q^d : C x >= 0}, which must be pointed
// (rank C = d). Double description; primitive rays, lex-sorted.
std::vector<IntVec> extreme_rays(const IntMatrix& C);

Cone build_cone(size_t rank, const std::vector<IntVec>& generators);

DualCone dual_cone(const Cone& c);

// Proper 2-dimensional faces as generator index pairs (i < j).
std::vector<std::pair<size_t, size_t>> two_faces(const Cone& c);

// Proper 3-dimensional faces as sorted generator index sets.
std::vector<std::vector<size_t>> proper_three_faces(const Cone& c);

bool is_smooth_in_codim2(const Cone& c);
bool is_smooth_in_codim3(const Cone& c);

Int pairing(const IntVec& a, const IntVec& r);

// m in the dual cone of c, i.e. <a^i, m> >= 0 for every generator.
bool in_dual_cone(const Cone& c, const IntVec& m);

}  // namespace toric
