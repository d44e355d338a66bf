#pragma once

#include <string>

namespace hilbertgeo {

/// SVG 1.1 picture of the canonical ideal triangle with shape t in the
/// quadrant, foliated by the leaves x + y = s. Byte-identical for equal t.
std::string foliation_svg(double t);

/// Writes foliation_svg(t) to path; IoError when the file cannot be written.
void emit_foliation_svg(double t, const std::string& path);

}  // namespace hilbertgeo
