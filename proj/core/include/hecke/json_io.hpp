#pragma once

#include <string>

#include "hecke/cuspidal.hpp"
#include "hecke/extraspecial.hpp"
#include "hecke/residual.hpp"

// String-level JSON serialization; keys are emitted sorted so output is
// byte-stable across runs.
namespace hecke::json {

std::string params_json(const HeckeParams& p);
std::string cyclo_json(const CycloFactored& f);
std::string multiplicity_json(const MultiplicityFn& m);
std::string partition_json(const Partition& p);
std::string coords_json(const CoordinateVector& c);
std::string point_json(const ResidualPoint& pt);
std::string point_with_residue_json(const ResidualPoint& pt, const ResidueResult& r);
std::string espair_json(const ESPair& p);
std::string stm_step_json(const STMStep& s);
std::string report_json(const UniquenessReport& r);

}  // namespace hecke::json
