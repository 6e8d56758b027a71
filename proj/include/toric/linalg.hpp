#pragma once

#include "toric/matrix.hpp"

#include <optional>

namespace toric {

// U * A * V = S with U, V unimodular and S diagonal, S[i][i] | S[i+1][i+1].
struct SmithDecomposition {
    IntMatrix U, S, V;
    std::vector<Int> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& A);

// true iff gcd of the entries is 1; rejects the zero vector.
bool is_primitive(const IntVec& v);

// v / gcd(v), sign preserved. Rejects the zero vector.
IntVec make_primitive(const IntVec& v);

// Clears denominators and divides by the content: the primitive integer
// vector spanning the same ray/line as v (direction preserved).
IntVec primitive_integer(const RatVec& v);

// In-place reduced row echelon form with the frozen pivot rule
// (smallest row, then smallest column). Returns the pivot columns.
std::vector<size_t> rref(RatMatrix& A);

size_t rank(const RatMatrix& A);
size_t rank(const IntMatrix& A);

// Basis of {x : A x = 0}, one vector per free column in column order,
// from the reduced row echelon form. Deterministic.
std::vector<RatVec> rational_kernel_basis(const RatMatrix& A);

// One solution of A x = b over Q (free variables set to 0), or nullopt.
std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b);

// One solution of A x = b over Z via the Smith form, or nullopt.
std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b);

// Right inverse B with A B = identity, for A of full row rank whose image
// is all of Z^rows (every invariant factor 1). Errors with NotSurjective.
IntMatrix integer_section(const IntMatrix& A);

// A linear subspace of Q^n held by its reduced-row-echelon basis. The RREF
// basis is unique per subspace, so Space values are canonical: equality of
// subspaces is equality of bases, and the coordinates of a member vector in
// the basis are simply its entries at the pivot columns.
class Space {
public:
    Space() : ambient_(0) {}
    explicit Space(size_t ambient) : ambient_(ambient) {}
    // Spans of the given vectors (need not be independent).
    Space(size_t ambient, const std::vector<RatVec>& vectors);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<RatVec>& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // v minus its projection onto the pivot coordinates; zero iff v is a member.
    RatVec reduce(const RatVec& v) const;
    bool contains(const RatVec& v) const;
    bool contains(const Space& other) const;

    // Coordinates of a member vector in the RREF basis.
    RatVec coords(const RatVec& v) const;

    Space sum(const Space& other) const;
    Space intersect(const Space& other) const;

    bool operator==(const Space& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    size_t ambient_;
    std::vector<RatVec> basis_;
    std::vector<size_t> pivots_;
};

// Kernel of A as a Space (canonical basis).
Space kernel_space(const RatMatrix& A);

// Extends `inner` (a subspace of `outer`) to a basis of `outer`: returns the
// chosen complement vectors, greedily taken from outer's basis in order.
std::vector<RatVec> complement_in(const Space& inner, const Space& outer);

// Greedy completion of a Space to all of Q^n by standard basis vectors in
// index order (or reversed order, for the alternative-extension tests).
std::vector<RatVec> complement_to_full(const Space& s, bool reversed = false);

// Solves for the covector c with c.x = sum_k values[k] * (coords of x in the
// basis rows); `rows` must be a basis of Q^n.
RatVec covector_from_basis_values(const std::vector<RatVec>& rows, const RatVec& values);

}  // namespace toric
