#pragma once

#include <string>

#include "diatomic/workspace.hpp"

namespace diatomic {

// Binary cache of the workspace prefixes.  Length-prefixed sections behind a
// magic + version header; loading a file with the wrong magic, version, or a
// truncated section throws std::runtime_error.
void cache_save(const Workspace& ws, const std::string& path);
void cache_load(Workspace& ws, const std::string& path);

}  // namespace diatomic
