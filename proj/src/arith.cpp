#include "chromatic/arith.hpp"

#include <algorithm>

namespace chromatic {

bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeContext PrimeContext::make(long long p)
{
    if (p < 5 || !is_prime(p) || p > 1000003)
        throw ValidationError("p is a prime greater than or equal to 5 (got " + std::to_string(p) + ")");
    PrimeContext ctx;
    ctx.p = static_cast<int>(p);
    ctx.q = 2 * (ctx.p - 1);
    ctx.v2deg = ctx.q * (ctx.p + 1);
    return ctx;
}

Int ipow(long long base, long long e)
{
    if (e < 0)
        throw std::invalid_argument("negative exponent");
    Int r = 1, b = base;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Int ppow(const PrimeContext& ctx, long long e) { return ipow(ctx.p, e); }

Int mod(const Int& x, const Int& m)
{
    Int r = x % m;
    if (r < 0)
        r += m;
    return r;
}

bool divides(const Int& d, const Int& x) { return x % d == 0; }

Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if (q * b > a)
        --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

int nu_p(const PrimeContext& ctx, const Int& m)
{
    if (m == 0)
        throw InfiniteValuation();
    Int x = m;
    int k = 0;
    while (x % ctx.p == 0) {
        x /= ctx.p;
        ++k;
    }
    return k;
}

int nu_or(const PrimeContext& ctx, const Int& m, int inf) { return m == 0 ? inf : nu_p(ctx, m); }

Int index_a(const PrimeContext& ctx, long long n)
{
    if (n < 0)
        throw std::invalid_argument("a_n needs n >= 0");
    if (n == 0)
        return 1;
    return ppow(ctx, n - 1) * (ctx.p + 1) - 1;
}

Int index_A(const PrimeContext& ctx, long long n)
{
    if (n < 0)
        throw std::invalid_argument("A_n needs n >= 0");
    // (p^n - 1)/(p - 1) * (p + 1)
    return (ppow(ctx, n) - 1) / (ctx.p - 1) * (ctx.p + 1);
}

Int g_offset(const PrimeContext& ctx, long long n)
{
    if (n < 0)
        throw std::invalid_argument("g_offset needs n >= 0");
    if (n < 2)
        return 0;
    return (ppow(ctx, n - 1) - 1) / (ctx.p - 1);
}

Int index_a_rec(const PrimeContext& ctx, long long n)
{
    if (n == 0)
        return 1;
    Int a = ctx.p;  // a_1
    for (long long i = 1; i < n; ++i)
        a = ctx.p * (a + 1) - 1;
    return a;
}

Int index_A_rec(const PrimeContext& ctx, long long n)
{
    Int A = 0;
    for (long long i = 0; i < n; ++i)
        A = ctx.p * A + (ctx.p + 1);
    return A;
}

Int g_offset_rec(const PrimeContext& ctx, long long n)
{
    Int o = 0;
    for (long long i = 1; i < n; ++i)
        o = ctx.p * o + 1;
    return o;
}

Decomp decompose(const PrimeContext& ctx, const Int& m)
{
    if (m == 0)
        throw InfiniteValuation();
    Decomp d;
    d.S = m;
    while (d.S % ctx.p == 0) {
        d.S /= ctx.p;
        ++d.N;
    }
    return d;
}

TruncatedPadic::TruncatedPadic(int p, Int residue, int precision)
    : p_(p), residue_(std::move(residue)), precision_(precision)
{
}

TruncatedPadic::TruncatedPadic(const PrimeContext& ctx, const Int& value, int precision)
    : p_(ctx.p), precision_(precision)
{
    if (precision < 1)
        throw ValidationError("precision must be positive");
    residue_ = mod(value, modulus());
}

Int TruncatedPadic::modulus() const { return ipow(p_, precision_); }

void TruncatedPadic::check_compatible(const TruncatedPadic& o) const
{
    if (p_ != o.p_)
        throw std::invalid_argument("p-adic numbers at different primes");
}

TruncatedPadic TruncatedPadic::operator+(const TruncatedPadic& o) const
{
    check_compatible(o);
    int N = std::min(precision_, o.precision_);
    return TruncatedPadic(p_, mod(residue_ + o.residue_, ipow(p_, N)), N);
}

TruncatedPadic TruncatedPadic::operator-() const
{
    return TruncatedPadic(p_, mod(-residue_, modulus()), precision_);
}

TruncatedPadic TruncatedPadic::operator-(const TruncatedPadic& o) const { return *this + (-o); }

TruncatedPadic TruncatedPadic::operator*(const TruncatedPadic& o) const
{
    check_compatible(o);
    int N = std::min(precision_, o.precision_);
    return TruncatedPadic(p_, mod(residue_ * o.residue_, ipow(p_, N)), N);
}

TruncatedPadic TruncatedPadic::scaled(const Int& c) const
{
    return TruncatedPadic(p_, mod(residue_ * c, modulus()), precision_);
}

bool TruncatedPadic::operator==(const TruncatedPadic& o) const
{
    return p_ == o.p_ && precision_ == o.precision_ && residue_ == o.residue_;
}

Int TruncatedPadic::centered() const
{
    Int M = modulus();
    return residue_ * 2 > M ? residue_ - M : residue_;
}

std::string TruncatedPadic::str() const
{
    return to_string(residue_) + " mod " + std::to_string(p_) + "^" + std::to_string(precision_);
}

TruncatedPadic geometric_inverse(const PrimeContext& ctx, int N)
{
    if (N < 1)
        throw ValidationError("precision must be positive");
    Int s = 0;
    for (int i = 0; i < N; ++i)
        s += ppow(ctx, i);
    return TruncatedPadic(ctx, s, N);
}

std::string to_string(const Int& x) { return x.str(); }

}  // namespace chromatic
