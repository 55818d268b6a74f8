#pragma once

#include <string>
#include <vector>

#include "ruledmmp/goodmodel.hpp"

namespace ruledmmp {

/// DOT rendering of the fiber dual graphs, one graph per recorded fiber per
/// state. Component nodes are labelled "id [self,mult]" and drawn doubled
/// when the component lies in the vertical boundary; points carrying
/// horizontal branches appear as diamonds wired to the components they sit
/// on; edges carry the local intersection multiplicity. Node order follows
/// the id order, so equal inputs give equal bytes.
std::string export_dot(const SurfacePair& sp);

/// Same, across all states of a recorded step sequence: the start surface,
/// one state after each step.
std::string export_dot(const SurfacePair& sp, const std::vector<ContractionStep>& steps);

}  // namespace ruledmmp
