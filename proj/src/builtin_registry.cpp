#include "qecc/registry.hpp"

namespace qecc {

// The shipped nine-code registry. Same JSON schema as user registry files;
// the text below is the canonical form documented in the README.
static const char kBuiltinRegistryJson[] = R"json({
  "schema_version": 1,
  "codes": [
    {
      "id": "repetition",
      "display_name": "Quantum Repetition Code",
      "overhead": {"num": [0, 1], "den": 1},
      "distance": {"kind": "any", "min_d": 2},
      "k": 1,
      "threshold": 0.3,
      "protection": "bit-flip-only",
      "decoders": ["automation", "ml"],
      "transversal": "none",
      "scalable": false,
      "realizations": ["superconducting", "trapped-ion", "nmr", "nv-diamond"],
      "complexity": 1
    },
    {
      "id": "shor",
      "display_name": "Shor Code",
      "overhead": {"num": [9], "den": 1},
      "distance": {"kind": "fixed", "d": 3},
      "k": 1,
      "threshold": 0.3,
      "protection": "arbitrary-single",
      "decoders": ["cnot-h-gates"],
      "transversal": "none",
      "scalable": false,
      "realizations": ["trapped-ion", "optical"],
      "complexity": 2
    },
    {
      "id": "steane",
      "display_name": "Steane Code",
      "overhead": {"num": [7], "den": 1},
      "distance": {"kind": "fixed", "d": 3},
      "k": 1,
      "threshold": 0.2,
      "protection": "detect-two-correct-one",
      "decoders": ["cnot-h-gates"],
      "transversal": "clifford",
      "scalable": true,
      "realizations": ["trapped-ion", "rydberg"],
      "complexity": 2
    },
    {
      "id": "toric",
      "display_name": "Toric Code",
      "overhead": {"num": [0, 0, 1], "den": 1},
      "distance": {"kind": "any", "min_d": 2},
      "k": 2,
      "threshold": 0.01,
      "protection": "all-pauli",
      "decoders": ["mwpm", "tensor-network", "union-find", "belief-matching",
                   "renormalization-group", "mcmc", "cellular-automata", "neural-network",
                   "window", "generalized-bp"],
      "transversal": "tpg-lattice-surgery",
      "scalable": true,
      "realizations": ["superconducting", "rydberg"],
      "complexity": 5
    },
    {
      "id": "surface",
      "display_name": "Surface Code",
      "overhead": {"num": [0, 0, 1], "den": 1},
      "distance": {"kind": "any", "min_d": 2},
      "k": 1,
      "threshold": 0.018,
      "protection": "all-pauli",
      "decoders": ["mwpm", "tensor-network", "union-find", "belief-matching",
                   "renormalization-group", "mcmc", "cellular-automata", "neural-network",
                   "window", "generalized-bp"],
      "transversal": "lattice-surgery",
      "scalable": true,
      "realizations": ["superconducting", "rydberg", "ising-anyons"],
      "complexity": 4
    },
    {
      "id": "bacon-shor",
      "display_name": "Bacon-Shor Code",
      "overhead": {"num": [0, 0, 0, 1], "den": 1},
      "distance": {"kind": "odd", "min_d": 3},
      "k": 1,
      "threshold": 0.00194,
      "protection": "all-pauli",
      "decoders": ["statistical-mapping", "check-operators"],
      "transversal": "teleportation",
      "scalable": true,
      "realizations": ["trapped-ion"],
      "complexity": 3
    },
    {
      "id": "color",
      "display_name": "3D Color Code",
      "overhead": {"num": [1, -6, 9], "den": 4},
      "distance": {"kind": "any", "min_d": 2},
      "k": 1,
      "threshold": 0.0126,
      "protection": "all-pauli",
      "decoders": ["projection", "integer-program", "restriction", "cellular-automata", "maxsat"],
      "transversal": "lattice-surgery",
      "scalable": true,
      "realizations": [],
      "complexity": 6
    },
    {
      "id": "heavy-hexagon",
      "display_name": "Heavy-Hexagon Code",
      "overhead": {"num": [-1, -2, 5], "den": 2},
      "distance": {"kind": "any", "min_d": 2},
      "k": 1,
      "threshold": 0.045,
      "protection": "all-pauli",
      "decoders": ["mwpm", "ml", "neural-network"],
      "transversal": "lattice-surgery",
      "scalable": true,
      "realizations": ["superconducting"],
      "complexity": 6
    },
    {
      "id": "gross",
      "display_name": "Bivariate Bicycle (Gross) Code",
      "overhead": {"num": [0, 12], "den": 1},
      "distance": {"kind": "any", "min_d": 2},
      "k": 12,
      "threshold": 0.018,
      "protection": "all-pauli",
      "decoders": ["bp-osd"],
      "transversal": "lattice-surgery",
      "scalable": true,
      "realizations": [],
      "complexity": 5
    }
  ]
}
)json";

const char* builtin_registry_json() { return kBuiltinRegistryJson; }

const Registry& builtin_registry() {
  static const Registry reg = parse_registry(kBuiltinRegistryJson);
  return reg;
}

}  // namespace qecc
