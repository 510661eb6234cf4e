#pragma once

#include <spdlog/spdlog.h>

namespace nearbip {

/// Process-wide stderr logger. The level comes from NEARBIP_LOG (trace,
/// debug, info, warn, error, off) and defaults to warn.
spdlog::logger& log();

}  // namespace nearbip
