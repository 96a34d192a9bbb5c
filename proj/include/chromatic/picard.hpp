#pragma once

#include "chromatic/v1_bockstein.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chromatic {

// Pic_K(2) = Z_p x Z_p x Z/2(p^2-1)
struct PicardElement {
    TruncatedPadic a;
    TruncatedPadic b;
    Int c = 0;  // in [0, 2(p^2-1))

    PicardElement operator+(const PicardElement& o) const;
    PicardElement operator-(const PicardElement& o) const;
    PicardElement operator-() const;
    PicardElement scaled(const Int& n) const;
    bool operator==(const PicardElement& o) const;
    std::string str() const;
};

PicardElement make_picard(const PrimeContext& ctx, const Int& a, const Int& b, const Int& c, int precision);
Int picard_torsion_order(const PrimeContext& ctx);  // 2(p^2-1)

// n[S^1] = (n, 0, n)
PicardElement pic_of_sphere(const PrimeContext& ctx, const Int& n, int precision);
// [S^0[det]] = (0, 1, 2(p+1))
PicardElement pic_det(const PrimeContext& ctx, int precision);

// The sphere of p-adic dimension (1+p+p^2+...)|v2| + q + extra; extra = 4 gives (0, 0, 2(p+1)).
PicardElement interpolated_sphere(const PrimeContext& ctx, int precision, int extra = 4);
bool verify_interpolation_identity(const PrimeContext& ctx, int precision, int extra = 4);

// (1+p+p^2+...)|v2| + q + 5 for I_2 M(p), + 4 for M(p)[det].
TruncatedPadic duality_shift(const PrimeContext& ctx, int precision, bool det_variant = false);

enum class Pairing { XG, Y0Internal, Full };
std::optional<Pairing> parse_pairing(const std::string& s);
std::string pairing_name(Pairing p);

struct AmbigramPair {
    std::string a, b;
    Int stem_a, stem_b;
};

// A block collects the non-G classes of one v2-exponent together with the G classes the rotation
// sends them to.
struct AmbigramBlock {
    Int exponent;
    std::optional<Int> center;  // in chart stems t - coh
    std::vector<AmbigramPair> pairs;
    std::vector<std::string> unmatched;
};

struct AmbigramReport {
    Vicinity vicinity;
    Pairing pairing = Pairing::Full;
    std::vector<AmbigramBlock> blocks;  // exponent descending
    std::optional<Int> single_center;   // one block whose rotation uses every class
    std::vector<std::string> unmatched;  // classes no block claims

    const AmbigramBlock* block(const Int& exponent) const;
};

AmbigramReport ambigram_report(const PrimeContext& ctx, const Vicinity& v, Pairing pairing, const Caps& caps);

// Report restricted to the pure component at v2^{s p^n}.
AmbigramBlock pure_component(const PrimeContext& ctx, const Vicinity& v, Pairing pairing, const Caps& caps);

}  // namespace chromatic
