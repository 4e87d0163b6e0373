#pragma once

namespace graysurf {

inline constexpr const char* version = "0.1.0";

}  // namespace graysurf
