#pragma once

#include <string>

#include "rgdiff/grid.hpp"

namespace rgdiff {

/// 8-bit binary PGM (P5) after min-max scaling to [0, 255].
/// A constant grid maps to all zeros. Bytes are deterministic per grid.
void export_pgm(const Grid2D& img, const std::string& path);

}  // namespace rgdiff
