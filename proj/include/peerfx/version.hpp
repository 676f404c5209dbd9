#pragma once

#define PEERFX_VERSION "0.1.0"

namespace peerfx {
inline const char* version() { return PEERFX_VERSION; }
}  // namespace peerfx
