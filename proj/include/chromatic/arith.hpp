#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace chromatic {
using Int = boost::multiprecision::cpp_int;
}

namespace boost::multiprecision {
// lets aggregates holding Int default their three-way comparison
inline std::strong_ordering operator<=>(const chromatic::Int& a, const chromatic::Int& b)
{
    int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}
}  // namespace boost::multiprecision

namespace chromatic {

// Bad user input (exit status 1 in the CLI).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An oracle or bookkeeping invariant failed (exit status 2 in the CLI).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfiniteValuation : std::domain_error {
    InfiniteValuation() : std::domain_error("valuation of 0 is infinite") {}
};

struct PrimeContext {
    int p = 5;
    int q = 8;
    int v2deg = 48;

    static PrimeContext make(long long p);
};

bool is_prime(long long n);

Int ipow(long long base, long long e);
Int ppow(const PrimeContext& ctx, long long e);  // p^e, e >= 0

// Non-negative residue of x mod m (m > 0).
Int mod(const Int& x, const Int& m);
bool divides(const Int& d, const Int& x);
Int floor_div(const Int& a, const Int& b);  // b > 0
Int ceil_div(const Int& a, const Int& b);   // b > 0

int nu_p(const PrimeContext& ctx, const Int& m);
// Valuation with 0 mapped to `inf`.
int nu_or(const PrimeContext& ctx, const Int& m, int inf);

Int index_a(const PrimeContext& ctx, long long n);
Int index_A(const PrimeContext& ctx, long long n);
Int g_offset(const PrimeContext& ctx, long long n);

// Same constants built through the recursions a_{n+1}+1 = p(a_n+1), A_{n+1} = pA_n + (p+1),
// off(n+1) = p*off(n) + 1.
Int index_a_rec(const PrimeContext& ctx, long long n);
Int index_A_rec(const PrimeContext& ctx, long long n);
Int g_offset_rec(const PrimeContext& ctx, long long n);

// m = S p^N with p ∤ S.  Requires m != 0.
struct Decomp {
    Int S;
    int N = 0;
};
Decomp decompose(const PrimeContext& ctx, const Int& m);

class TruncatedPadic {
public:
    TruncatedPadic() = default;
    TruncatedPadic(const PrimeContext& ctx, const Int& value, int precision);

    const Int& residue() const { return residue_; }
    int precision() const { return precision_; }
    int prime() const { return p_; }
    Int modulus() const;

    TruncatedPadic operator+(const TruncatedPadic& o) const;
    TruncatedPadic operator-(const TruncatedPadic& o) const;
    TruncatedPadic operator-() const;
    TruncatedPadic operator*(const TruncatedPadic& o) const;
    // Multiply by an ordinary integer at unchanged precision.
    TruncatedPadic scaled(const Int& c) const;

    bool is_zero() const { return residue_ == 0; }
    bool operator==(const TruncatedPadic& o) const;

    // Signed representative in (-p^N/2, p^N/2].
    Int centered() const;
    std::string str() const;

private:
    TruncatedPadic(int p, Int residue, int precision);
    void check_compatible(const TruncatedPadic& o) const;

    int p_ = 5;
    Int residue_ = 0;
    int precision_ = 1;
};

TruncatedPadic geometric_inverse(const PrimeContext& ctx, int N);

std::string to_string(const Int& x);

}  // namespace chromatic
