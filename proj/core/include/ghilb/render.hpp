#pragma once

#include <string>

#include "ghilb/fan.hpp"
#include "ghilb/ktheory.hpp"

namespace ghilb {

enum class AnnotationMode { none, wall_degrees, h0_classes };

AnnotationMode annotation_mode_from_string(const std::string& s);

// 2D positions of the junior points in the standard frame:
// e_z -> (0,0), e_y -> (W,0), e_x -> (W/2, H) with W = 6, H = 26/5.
struct Layout {
  std::vector<std::array<Rat, 2>> pos;
};

Layout make_layout(const Fan& fan);

// Deterministic byte-for-byte output for identical inputs. The wall-degrees
// and h0-classes modes require classifier data.
std::string emit_svg(const Fan& fan, const Layout& layout, AnnotationMode mode,
                     const KTheoryContext* kt = nullptr, const B0Report* report = nullptr);
std::string emit_tikz(const Fan& fan, const Layout& layout, AnnotationMode mode,
                      const KTheoryContext* kt = nullptr, const B0Report* report = nullptr);

}  // namespace ghilb
