#pragma once

#include <qalg/ingestion.hpp>

#include <map>

namespace qalg {

// Tor_i of the structure rings O_Y = A/(gens_y) and O_Z = A/(gens_z) over
// the truncated coordinate ring, reported per projective degree. Degrees
// beyond q are truncation artifacts and are dropped.
std::map<int, int> derived_intersection(const CoordinateRing& r, const std::vector<Poly>& gens_y,
                                        const std::vector<Poly>& gens_z, int i, int q);

} // namespace qalg
