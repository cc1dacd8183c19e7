#pragma once

namespace gainarr {

inline constexpr const char* version = "0.1.0";

}  // namespace gainarr
