#pragma once

namespace dwell {

inline constexpr const char* version = "0.1.0";

}
