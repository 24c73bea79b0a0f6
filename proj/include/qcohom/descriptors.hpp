#pragma once

#include <string>

#include "qcohom/lattices.hpp"

namespace qcohom {

// Directory holding preset descriptors: QCOHOM_PRESET_DIR when set, else
// the path baked in at build time.
std::string preset_directory();

// Group descriptor:
//   { "rank": r, "generators": [{"label": str, "matrix": [[int]]}],
//     "relations_check": bool }
PointGroup load_group_file(const std::string& path);

// Lattice descriptor:
//   { "name": str, "rank": r,
//     "generators": [{"label": str, "matrix": [[int]]}],
//     "action_space": "fourier" (default) | "direct",
//     "embedding": [[int or "p/q"]] (optional),
//     "cyclotomic_n": int (optional) }
// "direct" means the matrices act on the direct-space lattice; the Fourier
// module is its dual, so the loader applies the inverse-transpose.
LatticeModule load_lattice_file(const std::string& path);

}  // namespace qcohom
