#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/residual.hpp"
#include "hecke/stm.hpp"

namespace hecke {

enum class Family { I, II, III_ord, IV_ord, III_extra, IV_extra };

std::string to_string(Family f);

// Even-cyclotomic multiplicity function encoding the q-rational part of a
// cuspidal unipotent formal degree.
struct DegreeTemplate {
    Family family;
    long a = 0;
    long b = 0;
    MultiplicityFn even_mult;  // all values <= 0

    std::string label() const;
    bool operator==(const DegreeTemplate&) const = default;
};

DegreeTemplate degree_template(Family f, long a, long b);

// Rank-0 parameter pair whose normalization realizes the template.
HeckeParams template_source_params(Family f, long a, long b);

// The unique rank-0 distinguished label at a half-integral parameter
// (consecutive odd / even parts), or the zero partition for quarter m.
Partition rank0_label(Q4 m);

// Even/odd factorization data of a residue; the common currency between the
// direct route and the closed-form route.
struct ResidueShape {
    MultiplicityFn even;  // (1 + q^x) exponents
    MultiplicityFn odd;   // odd q-cyclotomic exponents

    bool operator==(const ResidueShape&) const = default;
    bool no_odd() const { return odd.empty(); }
};

ResidueShape shape_of(const ResidueResult& r);

// Per-side membership in the closed-form no-odd families:
//  - |m| = 1/2: triangular partitions [2,4,...,2r];
//  - |m| in {0,1}: consecutive-odd families plus the arithmetic-progression
//    family and the two sporadic power-of-two families;
//  - quarter m: empty, 1/4-squares and the three rectangle families.
bool side_no_odd_family(Q4 m, const Partition& lambda);

// Labels whose residue has zero odd-cyclotomic content, with the per-side
// family membership cross-asserted.
std::vector<std::pair<Partition, Partition>> classify_no_odd(const HeckeParams& p);

// Closed-form multiplicity function of the regularized residue, assembled
// from the convolution cross term, the parameter-shift corrections and the
// one-sided bases; never evaluates individual coordinates.
ResidueShape mixed_mult_formula(const HeckeParams& p, const Partition& lambda_minus,
                                const Partition& lambda_plus);

// All Aut_es-orbits of labels at the minimal object whose fully normalized
// residue equals the template (with zero odd content).
std::vector<std::vector<LabelledPoint>> solve_fdeg(const HeckeParams& params_min,
                                                   const DegreeTemplate& tmpl);

struct TemplateReport {
    std::vector<std::string> labels;  // template names sharing one even_mult
    MultiplicityFn even_mult;
    HeckeParams source;      // rank-0 source object
    long expected_rank = -1; // rank of the standard-STM image at the minimal
    std::vector<std::vector<LabelledPoint>> solution_orbits;
    std::vector<LabelledPoint> predicted_orbit;
    bool pass = false;
    std::string note;
};

struct UniquenessReport {
    HeckeParams params;  // minimal object, rank = n
    std::vector<TemplateReport> templates;           // realizable at this rank
    std::vector<LabelledPoint> non_cuspidal_no_odd;  // no-odd labels matching no template
    std::vector<std::string> failures;
    bool pass = false;
};

UniquenessReport verify_uniqueness(const HeckeParams& params_min, int jobs = 1);

}  // namespace hecke
