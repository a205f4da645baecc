#pragma once

#include <string>
#include <vector>

#include "hecke/extraspecial.hpp"
#include "hecke/partitions.hpp"
#include "hecke/qseries.hpp"

namespace hecke {

enum class ParamType { I, II, III, IV, V, VI };

std::string to_string(ParamType t);

// Parameter record of the type-C algebra with parameters (m_minus, m_plus),
// base q^b and rank n.
struct HeckeParams {
    Q4 m_minus;
    Q4 m_plus;
    int base = 1;  // b in {1,2}
    long rank = 0;

    ParamType type() const;
    bool operator==(const HeckeParams&) const = default;
    std::string str() const;
};

// Validates the pair, classifies it into one of the six types and fills in
// the base.
HeckeParams classify_params(Q4 m_minus, Q4 m_plus, long rank = 0);

// delta in {0,1} attached to a positive quarter-integral parameter
// (parity of kappa).
int quarter_delta(Q4 m);

// A coordinate is sign * v^{vexp}; canonical form has vexp >= 0 and the
// multiset sorted.
using Coordinate = std::pair<int, long>;
using CoordinateVector = std::vector<Coordinate>;

CoordinateVector canonical_coords(CoordinateVector c);
// Orbit of the side-swapping automorphism: flips every coordinate sign.
CoordinateVector flip_signs(const CoordinateVector& c);

struct ResidualPoint {
    HeckeParams params;
    Partition lambda_minus;
    Partition lambda_plus;
    CoordinateVector coords;

    bool operator==(const ResidualPoint&) const = default;
};

// All Slooten labels (lambda_minus, lambda_plus) at the given parameters and
// rank.  Each side must either satisfy |m| in {0, 1/2, 1} (distinguished
// partitions) or be quarter-integral (all partitions).
std::vector<std::pair<Partition, Partition>> enumerate_residual_points(const HeckeParams& p);

// Coordinate realization of an enumerated label pair.
ResidualPoint coordinates(const HeckeParams& p, const Partition& lambda_minus,
                          const Partition& lambda_plus);

struct ResidualCheck {
    long num_zeros = 0;
    long den_zeros = 0;
    bool ok = false;
};

// Counts vanishing binomials of the normalized mu-function at the point;
// ok iff den_zeros - num_zeros == rank.
ResidualCheck check_residual(const HeckeParams& p, const CoordinateVector& coords);

struct ResidueResult {
    FactorLedger ledger;
    CycloFactored canonical;
    MultiplicityFn mult;       // (1 - q^x) exponents
    MultiplicityFn even_part;  // (1 + q^x) exponents
    MultiplicityFn odd_cycl;   // odd q-cyclotomic exponents, keys in Z + 1/2
};

// Regularized residue normalized by (v^b - v^{-b})^{-n}, and additionally by
// (v + v^{-1})^{-1} when both parameters are odd integers (the anisotropy
// factor).  Computed modulo rational constants and powers of v.
ResidueResult residue_q(const HeckeParams& p, const CoordinateVector& coords);

// As residue_q but without the anisotropy factor; used for relations that
// compare raw normalized residues across parameter changes.
ResidueResult residue_q_raw(const HeckeParams& p, const CoordinateVector& coords);

// Residue carrying the full normalization d0_{m-,m+} (v^b - v^{-b})^{-n};
// this is the quantity preserved by spectral transfer morphisms.
ResidueResult residue_full(const HeckeParams& p, const CoordinateVector& coords);

// Even multiplicity function of the rank-0 normalization d0_{m-,m+},
// via the closed normalization formulas per parameter type.
MultiplicityFn d0_qpart(const HeckeParams& p);

// Solves the defining set identity for {a, b}; first element of the match
// per the family convention.  Throws when unsolvable in nonnegative integers.
std::pair<long, long> solve_sets(const HeckeParams& p);

// Exhaustive oracle: all canonical coordinate multisets within the vexp
// bound whose defect equals the rank, deduplicated under permutations and
// coordinate inversion.
std::vector<CoordinateVector> brute_force_residual_points(const HeckeParams& p,
                                                          long exponent_bound);
long default_exponent_bound(const HeckeParams& p);

}  // namespace hecke
