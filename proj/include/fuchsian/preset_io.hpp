#pragma once

#include <string>
#include <string_view>

#include "fuchsian/reduction.hpp"

namespace fuchsian {

// Plain-text preset format, one directive per line, '#' starts a comment:
//
//   name <identifier>
//   domain strip | domain dirichlet <center_re> <center_im>
//   homothety <generator>                     (strip presets)
//   codebook words | quaternion
//   base_point <re> <im>                      (optional)
//   generator <name> <a> <b> <c> <d>          (entries as c1,c2,c3,c6 over 1,sqrt2,sqrt3,sqrt6)
//   units_box <n>                             (adds the norm-one units of Z<I,J> with |coords| <= n)
//
// Entry tokens list up to four comma-separated rationals; missing trailing
// coefficients are zero, so "1" is 1 and "0,1" is sqrt2.

GroupPreset parse_preset(std::string_view text);
GroupPreset load_preset_file(const std::string& path);
std::string format_preset(const GroupPreset& preset);

/// Built-in name first, then a readable preset file. Throws Parse/InvalidArgument.
GroupPreset resolve_preset(const std::string& name_or_path);

}  // namespace fuchsian
