#pragma once

#include <string>
#include <vector>

#include "hecke/residual.hpp"

namespace hecke {

enum class STMKind { IsoEta, IsoEtaPlus, IsoEtaMinus, Translate, ExtraSpecial };

std::string to_string(STMKind k);

struct STMStep {
    STMKind kind;
    HeckeParams source;
    HeckeParams target;
    int side = 0;   // -1 / +1 for translations, 0 otherwise
    Q4 shift;       // amount subtracted from |m_side| (translations)
};

struct LabelledPoint {
    Partition lambda_minus;
    Partition lambda_plus;
    bool operator==(const LabelledPoint&) const = default;
};

// Spectral isomorphisms eta (swap), eta_plus (m_+ -> -m_+), eta_minus.
// eta swaps the label pair; eta_+/- conjugate the partition on a
// quarter-integral side and leave distinguished labels unchanged.
std::pair<HeckeParams, LabelledPoint> iso_apply(STMKind gen, const HeckeParams& p,
                                                const LabelledPoint& pt);

// One-unit standard translation on the chosen side: half-integral sides
// step by 1, integral sides by 2, always towards 0.  Labels are unchanged;
// the rank moves per the generator formulas.
std::pair<HeckeParams, LabelledPoint> translate_step(const HeckeParams& p,
                                                     const LabelledPoint& pt, int side);
STMStep translate_params(const HeckeParams& p, int side);

// The extra-special morphism from quarter-integral parameters to the
// integral pair (delta_-, delta_+) at base 1.
std::pair<HeckeParams, LabelledPoint> extraspecial_map(const HeckeParams& p,
                                                       const LabelledPoint& pt);
STMStep extraspecial_params(const HeckeParams& p);

// Chain of generator steps from p to a minimal object.
std::vector<STMStep> reduce_to_minimal(const HeckeParams& p);

// Transport a label pair along a generator step.
LabelledPoint apply_step(const STMStep& s, const LabelledPoint& pt);

bool is_minimal_object(const HeckeParams& p);
// Minimal objects with m_- == m_+ carry the order-2 swap automorphism.
bool has_swap_automorphism(const HeckeParams& p);

}  // namespace hecke
