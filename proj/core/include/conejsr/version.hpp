#pragma once

#define CONEJSR_VERSION_MAJOR 0
#define CONEJSR_VERSION_MINOR 1
#define CONEJSR_VERSION_PATCH 0
#define CONEJSR_VERSION "0.1.0"

namespace conejsr {

inline constexpr const char* version() { return CONEJSR_VERSION; }

}  // namespace conejsr
