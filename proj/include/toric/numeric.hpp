#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace toric {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat a fully reduced rational with positive denominator (both
// invariants are maintained by cpp_int / cpp_rational themselves).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline RatVec to_rat(const IntVec& v)
{
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = Rat(v[i]);
    return r;
}

inline bool is_zero(const IntVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline bool is_zero(const RatVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline IntVec operator+(const IntVec& a, const IntVec& b)
{
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b)
{
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline IntVec operator*(const Int& c, const IntVec& a)
{
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = c * a[i];
    return r;
}

inline IntVec operator-(const IntVec& a)
{
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

// Integer dot product; the one pairing <.,.> used everywhere.
inline Int dot(const IntVec& a, const IntVec& b)
{
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b)
{
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Lexicographic comparison, used as the frozen order on Hilbert bases,
// dual rays and scan output.
inline bool lex_less(const IntVec& a, const IntVec& b)
{
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

// Error kinds mirror the failure modes named in the module contracts.
enum class ErrorKind {
    EmptyInput,
    NotPointed,
    NotFullDimensional,
    NotSurjective,
    ZeroVector,
    DimensionMismatch,
    SNotInDualCone,
    NoHeightOneElement,
    CorrectionNotFound,
    NotSmoothCodim2,
    CocycleViolation,
    IsoCheckFailed,
    BoxTooLarge,
    InputError,
};

class Error : public std::exception {
public:
    Error(ErrorKind kind, std::string msg) : kind_(kind), msg_(std::move(msg)) {}
    ErrorKind kind() const { return kind_; }
    const char* what() const noexcept override { return msg_.c_str(); }

private:
    ErrorKind kind_;
    std::string msg_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace toric
