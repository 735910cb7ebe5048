#pragma once
#include <string>

#include "cyclic_stab/deform.hpp"

namespace cstab {

// Charge-plane figure: 400x400 canvas, 100 px per unit, origin marker, one labeled vector per
// object and an optional dotted polyline for each moving lattice charge of a path.
std::string render_svg(const CategoryPresentation* c, const ChargeTriple* r, const ChargePath* path);

}  // namespace cstab
