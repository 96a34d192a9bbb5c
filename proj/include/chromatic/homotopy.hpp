#pragma once

#include "chromatic/layer_base.hpp"
#include "chromatic/v0_bockstein.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chromatic::homotopy {

enum class Target { MpE2, MpK2, SE2, SK2 };
std::string target_name(Target t);
std::optional<Target> parse_target(const std::string& s);

enum class Summand { Cyclic, Free, Divisible, Rational };

struct StemElement {
    long long stem = 0;
    int layer = 2;
    std::string name;
    std::string family;
    Summand kind = Summand::Cyclic;
    int k = 1;  // order p^k for cyclic summands
};

struct GroupShape {
    long long stem = 0;
    int free_rank = 0;
    bool p_complete = false;  // free summands are Z_p rather than Z_(p)
    std::vector<int> cyclic;  // exponents, sorted
    int divisible = 0;
    int rational = 0;

    bool empty() const { return !free_rank && cyclic.empty() && !divisible && !rational; }
    std::string str(int p) const;
    bool operator==(const GroupShape&) const = default;
};

// t - coh - n
long long stem_index(const PrimeContext& ctx, int layer, const Int& t, int coh);

// d1 of the chromatic spectral sequence of the sphere on H*M_0^1.  1_{s/k} with s < 0 goes to
// 1_{0/-s,k}, (h0)_{-1/k} to (h0)_{0/1,k}, everything else to zero.
std::optional<M02Element> chromatic_d1_S(const PrimeContext& ctx, const AlphaClass& x);

struct Assembly {
    std::vector<StemElement> elements;
    std::vector<GroupShape> shapes;  // one per stem in range, ascending
};

// Closed-form decomposition over [stem_lo, stem_hi].  For S-E2 the d1 path over the engine's
// layers is computed as well and must agree, otherwise ConsistencyError.
Assembly assemble(const PrimeContext& ctx, Target target, long long stem_lo, long long stem_hi);

// Same range, S-E2 only, via d1 applied to computed layers.
std::vector<GroupShape> assemble_d1_SE2(const PrimeContext& ctx, long long stem_lo, long long stem_hi);

}  // namespace chromatic::homotopy
