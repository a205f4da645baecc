#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/partitions.hpp"

namespace hecke {

// A pair (m, rho) with m in (Z +/- 1/4)_{>0}; the codomain of the
// odd-distinct-partition encoding.
struct ESPair {
    Q4 m;
    Partition rho;

    long kappa() const;    // closest integer to m
    int epsilon() const;   // m = kappa + (2*eps - 1)/4
    int delta() const { return static_cast<int>(kappa() % 2); }

    bool operator==(const ESPair&) const = default;
};

struct HookStripDecomposition {
    long t = 0;                              // number of m-hooks
    std::vector<std::pair<Q4, Q4>> hooks;    // (hand filling, foot filling)
    std::vector<std::optional<Q4>> strips;   // right-end filling, nullopt = empty strip
};

// Encode an odd-distinct partition as (m, rho).
ESPair encode(const Partition& lambda);

// Recover the odd-distinct partition from (m, rho).
Partition decode(const ESPair& p);

HookStripDecomposition hook_strip_decomposition(const ESPair& p);

// Tableau rendering with per-cell hook/strip markers (H1, H2, ..., S1, ...).
std::string render_decomposition(const ESPair& p);

}  // namespace hecke
