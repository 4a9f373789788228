#pragma once

#include <iosfwd>
#include <string>

#include "mollipath/paths.hpp"

namespace mollipath {

// Waypoint document: JSON with fields
//   dimension : 2 or 3
//   closed    : boolean
//   points    : array of coordinate arrays (meters)
WaypointPath readWaypointJson(std::istream& in);
WaypointPath readWaypointFile(const std::string& path);

}  // namespace mollipath
