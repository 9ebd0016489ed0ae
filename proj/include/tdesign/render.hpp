#pragma once

#include <string>

#include "tdesign/io.hpp"

namespace tdesign {

/// Static SVG view of a planar design: a guide circle per layer radius and
/// one marker per point with area proportional to its weight.  Deterministic
/// bytes for fixed input; throws std::invalid_argument unless the file is a
/// dim-2 euclidean design.
std::string render_svg(const DesignFile& file);

}  // namespace tdesign
