#include "mollipath/waypoint_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace mollipath {

WaypointPath readWaypointJson(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("waypoint document: invalid JSON: ") + e.what());
    }
    if (!doc.contains("dimension") || !doc.contains("closed") || !doc.contains("points"))
        throw std::invalid_argument("waypoint document: requires dimension, closed, points");
    const int dim = doc["dimension"].get<int>();
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("waypoint document: dimension must be 2 or 3");
    const bool closed = doc["closed"].get<bool>();
    std::vector<Vec> pts;
    for (const auto& row : doc["points"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw std::invalid_argument("waypoint document: each point needs `dimension` coordinates");
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = row[static_cast<std::size_t>(i)].get<double>();
        pts.push_back(v);
    }
    return WaypointPath(std::move(pts), closed);
}

WaypointPath readWaypointFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open waypoint file: " + path);
    return readWaypointJson(in);
}

}  // namespace mollipath
