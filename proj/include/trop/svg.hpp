#pragma once

#include <string>

#include "trop/newton.hpp"

namespace trop::svg {

// Red lines render dashed, blue solid, uncoloured black. The viewBox covers
// the lattice bounding box plus a unit margin.
std::string render_arrangement(const Arrangement& arr);
std::string render_subdivision(const NewtonSubdivision& sub);

}  // namespace trop::svg
