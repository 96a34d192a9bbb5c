#pragma once

#include "chromatic/v0_bockstein.hpp"

#include <string>
#include <vector>

namespace chromatic::sy {

enum class Family { X, Xinf, XzetaC, YC, Y0C, Y1C, YinfC, GC, G0, Y0CG, Y1CG };
std::string family_name(Family f);

enum class Mode { Corrected, Legacy };

// Generators of the integral presentation.  `gen` carries the v2 exponent and the ζ factor; for the
// E[ζ]-adorned zero-column families the ζ copy has gen.zeta set.
struct Element {
    Family family = Family::X;
    M2Class gen;
    Int j = 1;
    int k = 1;

    int coh() const { return gen.coh(); }
    Int t(const PrimeContext& ctx) const { return gen.t(ctx) - j * ctx.q; }
    std::string name(const PrimeContext& ctx) const;

    auto operator<=>(const Element&) const = default;
    bool operator==(const Element&) const = default;
};

std::vector<Element> closed_form_SY(const PrimeContext& ctx, const Vicinity& v, const Caps& caps,
                                    Mode mode = Mode::Corrected);

// Image of a basis element of closed_form_M20.
Element sy_dictionary(const PrimeContext& ctx, const M02Element& e, const Caps& caps);

// The closed_form_M20 basis elements whose image lies in the vicinity.  Equal to closed_form_M20 except
// for the zero vicinity, where some preimages sit one digit deeper.
std::vector<M02Element> m20_preimage(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);

struct Mismatch {
    int coh;
    Int t;
    int m20_total;
    int sy_total;
    std::vector<std::string> m20;
    std::vector<std::string> sy;
};

std::vector<Mismatch> compare_orders(const PrimeContext& ctx, const Vicinity& v, const Caps& caps, Mode mode);

struct ErrataRecord {
    Element element;
    bool corrected_present;
    bool legacy_present;
};

// Generators present in exactly one of the two modes.
std::vector<ErrataRecord> errata_report(const PrimeContext& ctx, const Vicinity& v, const Caps& caps);

}  // namespace chromatic::sy
