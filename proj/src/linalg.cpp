#include "toric/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

std::string to_string(const IntVec& v)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string to_string(const RatVec& v)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::vector<Int> SmithDecomposition::invariant_factors() const
{
    std::vector<Int> f;
    size_t n = std::min(S.rows(), S.cols());
    for (size_t i = 0; i < n; ++i)
        f.push_back(S(i, i));
    return f;
}

namespace {

// Elementary row/column operations tracked in U and V.
struct SnfWork {
    IntMatrix A, U, V;

    void row_swap(size_t i, size_t k)
    {
        A.swap_rows(i, k);
        U.swap_rows(i, k);
    }
    void col_swap(size_t j, size_t l)
    {
        A.swap_cols(j, l);
        V.swap_cols(j, l);
    }
    // row i -= c * row k
    void row_sub(size_t i, size_t k, const Int& c)
    {
        for (size_t j = 0; j < A.cols(); ++j)
            A(i, j) -= c * A(k, j);
        for (size_t j = 0; j < U.cols(); ++j)
            U(i, j) -= c * U(k, j);
    }
    // col j -= c * col l
    void col_sub(size_t j, size_t l, const Int& c)
    {
        for (size_t i = 0; i < A.rows(); ++i)
            A(i, j) -= c * A(i, l);
        for (size_t i = 0; i < V.rows(); ++i)
            V(i, j) -= c * V(i, l);
    }
    void row_negate(size_t i)
    {
        for (size_t j = 0; j < A.cols(); ++j)
            A(i, j) = -A(i, j);
        for (size_t j = 0; j < U.cols(); ++j)
            U(i, j) = -U(i, j);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A)
{
    SnfWork w{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
    size_t m = A.rows(), n = A.cols();
    size_t t = 0;
    while (t < m && t < n) {
        // Magnitude-reducing pivot: smallest nonzero |entry| in the submatrix,
        // ties by row then column index.
        size_t pi = t, pj = t;
        Int best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                const Int a = abs(w.A(i, j));
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0)
            break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        if (w.A(t, t) < 0)
            w.row_negate(t);

        bool clean = true;
        for (size_t i = t + 1; i < m; ++i) {
            if (w.A(i, t) == 0)
                continue;
            Int q = w.A(i, t) / w.A(t, t);
            w.row_sub(i, t, q);
            if (w.A(i, t) != 0)
                clean = false;
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (w.A(t, j) == 0)
                continue;
            Int q = w.A(t, j) / w.A(t, t);
            w.col_sub(j, t, q);
            if (w.A(t, j) != 0)
                clean = false;
        }
        if (!clean)
            continue;  // remainders became new, smaller pivot candidates

        // Enforce divisibility of the remaining submatrix by the pivot.
        bool divides = true;
        for (size_t i = t + 1; i < m && divides; ++i)
            for (size_t j = t + 1; j < n; ++j)
                if (w.A(i, j) % w.A(t, t) != 0) {
                    w.row_sub(t, i, Int(-1));  // pulls row i into the pivot row
                    divides = false;
                    break;
                }
        if (divides)
            ++t;
    }
    return SmithDecomposition{w.U, w.A, w.V};
}

Int determinant(const IntMatrix& A)
{
    assert(A.rows() == A.cols());
    size_t n = A.rows();
    if (n == 0)
        return 1;
    IntMatrix M = A;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && M(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            M.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign > 0 ? M(n - 1, n - 1) : -M(n - 1, n - 1);
}

bool is_primitive(const IntVec& v)
{
    Int g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    if (g == 0)
        fail(ErrorKind::ZeroVector, "is_primitive: zero vector");
    return g == 1;
}

IntVec make_primitive(const IntVec& v)
{
    Int g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    if (g == 0)
        fail(ErrorKind::ZeroVector, "make_primitive: zero vector");
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] / g;
    return r;
}

IntVec primitive_integer(const RatVec& v)
{
    Int lcm = 1;
    for (const auto& q : v)
        lcm = lcm / gcd(lcm, denominator(q)) * denominator(q);
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    return make_primitive(w);
}

std::vector<size_t> rref(RatMatrix& A)
{
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        size_t piv = r;
        while (piv < A.rows() && A(piv, c) == 0)
            ++piv;
        if (piv == A.rows())
            continue;
        A.swap_rows(r, piv);
        const Rat p = A(r, c);
        for (size_t j = c; j < A.cols(); ++j)
            A(r, j) /= p;
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == r || A(i, c) == 0)
                continue;
            const Rat f = A(i, c);
            for (size_t j = c; j < A.cols(); ++j)
                A(i, j) -= f * A(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(const RatMatrix& A)
{
    RatMatrix M = A;
    return rref(M).size();
}

size_t rank(const IntMatrix& A)
{
    // Fraction-free elimination; row echelon without normalization.
    IntMatrix M = A;
    size_t m = M.rows(), n = M.cols();
    size_t r = 0;
    Int prev = 1;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t piv = r;
        while (piv < m && M(piv, c) == 0)
            ++piv;
        if (piv == m)
            continue;
        M.swap_rows(r, piv);
        for (size_t i = r + 1; i < m; ++i) {
            for (size_t j = c + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(r, c) - M(i, c) * M(r, j)) / prev;
            M(i, c) = 0;
        }
        prev = M(r, c);
        ++r;
    }
    return r;
}

std::vector<RatVec> rational_kernel_basis(const RatMatrix& A)
{
    RatMatrix M = A;
    const std::vector<size_t> pivots = rref(M);
    std::vector<bool> is_pivot(A.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (size_t c = 0; c < A.cols(); ++c) {
        if (is_pivot[c])
            continue;
        RatVec v(A.cols(), Rat(0));
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -M(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b)
{
    assert(b.size() == A.rows());
    RatMatrix M(A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j)
            M(i, j) = A(i, j);
        M(i, A.cols()) = b[i];
    }
    const std::vector<size_t> pivots = rref(M);
    if (!pivots.empty() && pivots.back() == A.cols())
        return std::nullopt;  // inconsistent
    RatVec x(A.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = M(r, A.cols());
    return x;
}

std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b)
{
    const SmithDecomposition d = smith_normal_form(A);
    const IntVec c = d.U * b;
    const size_t k = std::min(A.rows(), A.cols());
    IntVec y(A.cols(), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < k && d.S(i, i) != 0) {
            if (c[i] % d.S(i, i) != 0)
                return std::nullopt;
            y[i] = c[i] / d.S(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return d.V * y;
}

IntMatrix integer_section(const IntMatrix& A)
{
    const SmithDecomposition d = smith_normal_form(A);
    if (A.rows() > A.cols())
        fail(ErrorKind::NotSurjective, "integer_section: more rows than columns");
    for (size_t i = 0; i < A.rows(); ++i)
        if (abs(d.S(i, i)) != 1)
            fail(ErrorKind::NotSurjective,
                 "integer_section: invariant factor != 1, map is not onto");
    // B = V * [diag(1/s_i); 0] * U with every s_i = +-1.
    IntMatrix T(A.cols(), A.rows());
    for (size_t i = 0; i < A.rows(); ++i)
        T(i, i) = d.S(i, i);  // +-1 is its own inverse
    return d.V * (T * d.U);
}

Space::Space(size_t ambient, const std::vector<RatVec>& vectors) : ambient_(ambient)
{
    if (vectors.empty())
        return;
    RatMatrix M = RatMatrix::from_rows(vectors);
    pivots_ = rref(M);
    for (size_t r = 0; r < pivots_.size(); ++r)
        basis_.push_back(M.row(r));
}

RatVec Space::reduce(const RatVec& v) const
{
    assert(v.size() == ambient_);
    RatVec w = v;
    for (size_t r = 0; r < basis_.size(); ++r) {
        const Rat c = w[pivots_[r]];
        if (c == 0)
            continue;
        for (size_t j = 0; j < ambient_; ++j)
            w[j] -= c * basis_[r][j];
    }
    return w;
}

bool Space::contains(const RatVec& v) const { return is_zero(reduce(v)); }

bool Space::contains(const Space& other) const
{
    for (const auto& b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

RatVec Space::coords(const RatVec& v) const
{
    assert(contains(v));
    RatVec c(basis_.size());
    for (size_t r = 0; r < basis_.size(); ++r)
        c[r] = v[pivots_[r]];
    return c;
}

Space Space::sum(const Space& other) const
{
    assert(ambient_ == other.ambient_);
    std::vector<RatVec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return Space(ambient_, all);
}

Space Space::intersect(const Space& other) const
{
    assert(ambient_ == other.ambient_);
    if (dim() == 0 || other.dim() == 0)
        return Space(ambient_);
    // x = sum u_k a_k = sum w_l b_l: kernel of the stacked coefficient matrix.
    RatMatrix M(ambient_, dim() + other.dim());
    for (size_t j = 0; j < dim(); ++j)
        for (size_t i = 0; i < ambient_; ++i)
            M(i, j) = basis_[j][i];
    for (size_t j = 0; j < other.dim(); ++j)
        for (size_t i = 0; i < ambient_; ++i)
            M(i, dim() + j) = -other.basis_[j][i];
    std::vector<RatVec> gens;
    for (const auto& k : rational_kernel_basis(M)) {
        RatVec x(ambient_, Rat(0));
        for (size_t j = 0; j < dim(); ++j)
            for (size_t i = 0; i < ambient_; ++i)
                x[i] += k[j] * basis_[j][i];
        gens.push_back(std::move(x));
    }
    return Space(ambient_, gens);
}

Space kernel_space(const RatMatrix& A)
{
    return Space(A.cols(), rational_kernel_basis(A));
}

std::vector<RatVec> complement_in(const Space& inner, const Space& outer)
{
    assert(outer.contains(inner));
    std::vector<RatVec> chosen;
    std::vector<RatVec> current = inner.basis();
    Space span(inner.ambient(), current);
    for (const auto& cand : outer.basis()) {
        if (span.contains(cand))
            continue;
        chosen.push_back(cand);
        current.push_back(cand);
        span = Space(inner.ambient(), current);
    }
    assert(span.dim() == outer.dim());
    return chosen;
}

std::vector<RatVec> complement_to_full(const Space& s, bool reversed)
{
    const size_t n = s.ambient();
    std::vector<RatVec> chosen;
    std::vector<RatVec> current = s.basis();
    Space span = s;
    for (size_t k = 0; k < n; ++k) {
        const size_t idx = reversed ? n - 1 - k : k;
        RatVec e(n, Rat(0));
        e[idx] = 1;
        if (span.contains(e))
            continue;
        chosen.push_back(e);
        current.push_back(e);
        span = Space(n, current);
    }
    assert(span.dim() == n);
    return chosen;
}

RatVec covector_from_basis_values(const std::vector<RatVec>& rows, const RatVec& values)
{
    assert(rows.size() == values.size());
    assert(rows.empty() || rows.size() == rows[0].size());
    // c with B c = g, B = basis rows: then c.x = g . coords(x).
    RatMatrix B = RatMatrix::from_rows(rows);
    auto c = solve(B, values);
    assert(c.has_value());
    return *c;
}

}  // namespace toric
