#pragma once

#include <iosfwd>
#include <string>

#include "bernproc/core.hpp"

namespace bernproc {

// Point-set files are JSON lines: an optional header record
//   {"ambient": [0, 1, 2]}
// followed by one point record per line,
//   {"id": "p0", "coords": {"0": 1.5, "3": -0.25}}.
// Without a header the ambient index set is the union of supports.

PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);

void write_point_set(std::ostream& out, const PointSet& T);

}  // namespace bernproc
