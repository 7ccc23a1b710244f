#include "lgm/catalog.hpp"

namespace lgm {

// Generated by tools/embed_catalog.py from data/builtin_catalog.json;
// edit the JSON and regenerate rather than editing this string.
const char* builtin_catalog_json() {
    return R"lgmjson({
 "schema": "v1",
 "entries": [
  {
   "id": "p2",
   "dim": 2,
   "vertices": [
    [
     1,
     0
    ],
    [
     0,
     1
    ],
    [
     -1,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3"
   ],
   "class_names": {
    "n1": "H",
    "n2": "H",
    "n3": "H"
   },
   "collection": [
    {
     "label": "E0",
     "display": "0",
     "coeffs": [
      0,
      0,
      0
     ]
    },
    {
     "label": "E1",
     "display": "H",
     "coeffs": [
      1,
      0,
      0
     ]
    },
    {
     "label": "E2",
     "display": "2H",
     "coeffs": [
      1,
      1,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E0",
     "E1"
    ],
    [
     "E1",
     "E2"
    ]
   ],
   "partition": {
    "base": [],
    "fiber": []
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E0",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E1",
     "point": [
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -0.4999999999999998,
       0.8660254037844387
      ]
     ]
    },
    {
     "label": "E2",
     "point": [
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -0.5000000000000003,
       -0.8660254037844384
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E0 E1 E2)"
    },
    {
     "divisor": "n2",
     "cycles": "(E0 E1 E2)"
    },
    {
     "divisor": "n3",
     "cycles": "(E0 E1 E2)"
    }
   ],
   "degeneration_recipes": []
  },
  {
   "id": "p1xp1",
   "dim": 2,
   "vertices": [
    [
     1,
     0
    ],
    [
     0,
     1
    ],
    [
     -1,
     0
    ],
    [
     0,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4"
   ],
   "class_names": {
    "n1": "H1",
    "n2": "H2",
    "n3": "H1",
    "n4": "H2"
   },
   "collection": [
    {
     "label": "E00",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E10",
     "display": "H1",
     "coeffs": [
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E01",
     "display": "H2",
     "coeffs": [
      0,
      1,
      0,
      0
     ]
    },
    {
     "label": "E11",
     "display": "H1+H2",
     "coeffs": [
      1,
      1,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E00",
     "E10"
    ],
    [
     "E00",
     "E01"
    ],
    [
     "E10",
     "E11"
    ],
    [
     "E01",
     "E11"
    ]
   ],
   "partition": {
    "base": [],
    "fiber": []
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E00",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E10",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E01",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E11",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E00 E10)(E01 E11)"
    },
    {
     "divisor": "n3",
     "cycles": "(E00 E10)(E01 E11)"
    },
    {
     "divisor": "n2",
     "cycles": "(E00 E01)(E10 E11)"
    },
    {
     "divisor": "n4",
     "cycles": "(E00 E01)(E10 E11)"
    }
   ],
   "degeneration_recipes": []
  },
  {
   "id": "bl1_p2",
   "dim": 2,
   "vertices": [
    [
     1,
     0
    ],
    [
     0,
     1
    ],
    [
     -1,
     0
    ],
    [
     -1,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4"
   ],
   "class_names": {
    "n1": "H",
    "n2": "H-E",
    "n3": "E",
    "n4": "H-E"
   },
   "collection": [
    {
     "label": "E0",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "F1",
     "display": "H-E",
     "coeffs": [
      0,
      1,
      0,
      0
     ]
    },
    {
     "label": "E1",
     "display": "H",
     "coeffs": [
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E2",
     "display": "2H-E",
     "coeffs": [
      1,
      1,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E0",
     "F1"
    ],
    [
     "E0",
     "E1"
    ],
    [
     "F1",
     "E1"
    ],
    [
     "F1",
     "E2"
    ],
    [
     "E1",
     "E2"
    ]
   ],
   "partition": {
    "base": [],
    "fiber": []
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E0",
     "point": [
      [
       1.490216120099955,
       0.0
      ],
      [
       0.819172513396164,
       0.0
      ]
     ]
    },
    {
     "label": "F1",
     "point": [
      [
       0.5248885986564047,
       0.0
      ],
      [
       -1.3802775690976143,
       0.0
      ]
     ]
    },
    {
     "label": "E1",
     "point": [
      [
       -1.0075523593781817,
       0.513115795597015
      ],
      [
       -0.21944747214927457,
       0.9144736629677256
      ]
     ]
    },
    {
     "label": "E2",
     "point": [
      [
       -1.0075523593781817,
       -0.513115795597015
      ],
      [
       -0.21944747214927457,
       -0.9144736629677256
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E0 E1 F1 E2)"
    },
    {
     "divisor": "n2+n3",
     "cycles": "(E0 E1 F1 E2)"
    },
    {
     "divisor": "n3+n4",
     "cycles": "(E0 E1 F1 E2)"
    },
    {
     "divisor": "n3",
     "cycles": "(E0 E2 F1 E1)"
    },
    {
     "divisor": "n2",
     "cycles": "(E0 F1)(E1 E2)"
    },
    {
     "divisor": "n4",
     "cycles": "(E0 F1)(E1 E2)"
    }
   ],
   "degeneration_recipes": [
    {
     "kind": "limit",
     "scale": [
      2
     ],
     "limit_id": "p2",
     "escape": [
      "F1"
     ],
     "label_map": {
      "E0": "E0",
      "E1": "E1",
      "E2": "E2"
     }
    }
   ],
   "alt_class_names": {
    "n1": "xi",
    "n2": "pi*H",
    "n3": "xi-pi*H",
    "n4": "pi*H"
   },
   "alt_collection": {
    "E0": "0",
    "F1": "pi*H",
    "E1": "xi",
    "E2": "pi*H+xi"
   }
  },
  {
   "id": "bl2_p2",
   "dim": 2,
   "vertices": [
    [
     1,
     0
    ],
    [
     0,
     1
    ],
    [
     -1,
     0
    ],
    [
     -1,
     -1
    ],
    [
     0,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5"
   ],
   "class_names": {
    "n1": "H-E2",
    "n2": "H-E1",
    "n3": "E1",
    "n4": "H-E1-E2",
    "n5": "E2"
   },
   "collection": [
    {
     "label": "E0",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "F1",
     "display": "H-E1",
     "coeffs": [
      0,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "F2",
     "display": "H-E2",
     "coeffs": [
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E1",
     "display": "H",
     "coeffs": [
      0,
      1,
      1,
      0,
      0
     ]
    },
    {
     "label": "E2",
     "display": "2H-E1-E2",
     "coeffs": [
      1,
      1,
      0,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E0",
     "E1"
    ],
    [
     "E0",
     "F1"
    ],
    [
     "E0",
     "F2"
    ],
    [
     "F1",
     "E1"
    ],
    [
     "F2",
     "E1"
    ],
    [
     "E1",
     "E2"
    ],
    [
     "F1",
     "E2"
    ],
    [
     "F2",
     "E2"
    ]
   ],
   "partition": {
    "base": [],
    "fiber": []
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E0",
     "point": [
      [
       1.3247179572447454,
       0.0
      ],
      [
       1.3247179572447454,
       0.0
      ]
     ]
    },
    {
     "label": "F1",
     "point": [
      [
       0.6180339887498949,
       0.0
      ],
      [
       -1.618033988749895,
       0.0
      ]
     ]
    },
    {
     "label": "F2",
     "point": [
      [
       -1.618033988749895,
       0.0
      ],
      [
       0.6180339887498949,
       0.0
      ]
     ]
    },
    {
     "label": "E1",
     "point": [
      [
       -0.6623589786223729,
       0.5622795120623011
      ],
      [
       -0.6623589786223729,
       0.5622795120623011
      ]
     ]
    },
    {
     "label": "E2",
     "point": [
      [
       -0.6623589786223729,
       -0.5622795120623011
      ],
      [
       -0.6623589786223729,
       -0.5622795120623011
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E0 F2)(E1 F1 E2)"
    },
    {
     "divisor": "n3+n4",
     "cycles": "(E0 F2)(E1 F1 E2)"
    },
    {
     "divisor": "n2",
     "cycles": "(E0 F1)(E1 F2 E2)"
    },
    {
     "divisor": "n4+n5",
     "cycles": "(E0 F1)(E1 F2 E2)"
    },
    {
     "divisor": "n3",
     "cycles": "(E0 E2 F1 E1)"
    },
    {
     "divisor": "n4",
     "cycles": "(E0 E1 E2)"
    },
    {
     "divisor": "n5",
     "cycles": "(E0 E2 F2 E1)"
    },
    {
     "divisor": "n2+n3",
     "cycles": "(E0 E1 E2)(F1 F2)"
    },
    {
     "divisor": "n3+n4+n5",
     "cycles": "(E0 E1 E2)(F1 F2)"
    },
    {
     "divisor": "n1+n5",
     "cycles": "(E0 E1 E2)(F1 F2)"
    }
   ],
   "degeneration_recipes": [
    {
     "kind": "limit",
     "scale": [
      4
     ],
     "limit_id": "bl1_p2",
     "escape": [
      "F2"
     ],
     "label_map": {
      "E0": "E0",
      "F1": "F1",
      "E1": "E1",
      "E2": "E2"
     }
    }
   ]
  },
  {
   "id": "bl3_p2",
   "dim": 2,
   "vertices": [
    [
     1,
     0
    ],
    [
     1,
     1
    ],
    [
     0,
     1
    ],
    [
     -1,
     0
    ],
    [
     -1,
     -1
    ],
    [
     0,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5",
    "n6"
   ],
   "class_names": {
    "n1": "H-E2-E3",
    "n2": "E3",
    "n3": "H-E1-E3",
    "n4": "E1",
    "n5": "H-E1-E2",
    "n6": "E2"
   },
   "collection": [
    {
     "label": "E0",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "F1",
     "display": "H-E1",
     "coeffs": [
      0,
      1,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "F2",
     "display": "H-E2",
     "coeffs": [
      1,
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "F3",
     "display": "H-E3",
     "coeffs": [
      0,
      0,
      1,
      1,
      0,
      0
     ]
    },
    {
     "label": "E1",
     "display": "H",
     "coeffs": [
      0,
      1,
      1,
      1,
      0,
      0
     ]
    },
    {
     "label": "E2",
     "display": "2H-E1-E2-E3",
     "coeffs": [
      1,
      1,
      1,
      0,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E0",
     "F1"
    ],
    [
     "E0",
     "F2"
    ],
    [
     "E0",
     "F3"
    ],
    [
     "F1",
     "E1"
    ],
    [
     "F2",
     "E1"
    ],
    [
     "F3",
     "E1"
    ],
    [
     "F1",
     "E2"
    ],
    [
     "F2",
     "E2"
    ],
    [
     "F3",
     "E2"
    ]
   ],
   "partition": {
    "base": [],
    "fiber": []
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E0",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "F1",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "F2",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "F3",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E1",
     "point": [
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -0.4999999999999998,
       0.8660254037844387
      ]
     ]
    },
    {
     "label": "E2",
     "point": [
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -0.5000000000000003,
       -0.8660254037844384
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E0 E1 F1 E2)"
    },
    {
     "divisor": "n2",
     "cycles": "(E0 E2 F3 E1)"
    },
    {
     "divisor": "n3",
     "cycles": "(E0 E1 F2 E2)"
    },
    {
     "divisor": "n4",
     "cycles": "(E0 E2 F1 E1)"
    },
    {
     "divisor": "n5",
     "cycles": "(E0 E1 F3 E2)"
    },
    {
     "divisor": "n6",
     "cycles": "(E0 E2 F2 E1)"
    },
    {
     "divisor": "n2+n3",
     "cycles": "(E0 F1)(E1 E2)(F2 F3)"
    },
    {
     "divisor": "n5+n6",
     "cycles": "(E0 F1)(E1 E2)(F2 F3)"
    },
    {
     "divisor": "n1+n6",
     "cycles": "(E0 F3)(E1 E2)(F1 F2)"
    },
    {
     "divisor": "n3+n4",
     "cycles": "(E0 F3)(E1 E2)(F1 F2)"
    },
    {
     "divisor": "n1+n2",
     "cycles": "(E0 F2)(E1 E2)(F1 F3)"
    },
    {
     "divisor": "n4+n5",
     "cycles": "(E0 F2)(E1 E2)(F1 F3)"
    }
   ],
   "degeneration_recipes": [
    {
     "kind": "limit",
     "scale": [
      1
     ],
     "limit_id": "bl2_p2",
     "escape": [
      "F3"
     ],
     "label_map": {
      "E0": "E0",
      "F1": "F1",
      "F2": "F2",
      "E1": "E1",
      "E2": "E2"
     }
    }
   ]
  },
  {
   "id": "p2bundle_k0",
   "dim": 3,
   "vertices": [
    [
     1,
     0,
     0
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     -1,
     -1,
     0
    ],
    [
     0,
     0,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5"
   ],
   "class_names": {
    "n1": "pi*H",
    "n2": "pi*H",
    "n3": "xi",
    "n4": "pi*H",
    "n5": "xi"
   },
   "collection": [
    {
     "label": "E00",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E10",
     "display": "pi*H",
     "coeffs": [
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E20",
     "display": "2pi*H",
     "coeffs": [
      2,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E01",
     "display": "xi",
     "coeffs": [
      0,
      0,
      0,
      0,
      1
     ]
    },
    {
     "label": "E11",
     "display": "pi*H+xi",
     "coeffs": [
      1,
      0,
      0,
      0,
      1
     ]
    },
    {
     "label": "E21",
     "display": "2pi*H+xi",
     "coeffs": [
      2,
      0,
      0,
      0,
      1
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E00",
     "E10"
    ],
    [
     "E10",
     "E20"
    ],
    [
     "E01",
     "E11"
    ],
    [
     "E11",
     "E21"
    ],
    [
     "E00",
     "E01"
    ],
    [
     "E10",
     "E11"
    ],
    [
     "E20",
     "E21"
    ]
   ],
   "partition": {
    "base": [
     0,
     1,
     3
    ],
    "fiber": [
     2,
     4
    ]
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E00",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E10",
     "point": [
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E20",
     "point": [
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E01",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E11",
     "point": [
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E21",
     "point": [
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -1.0,
       0.0
      ]
     ]
    }
   ],
   "monodromy_fixtures": [],
   "degeneration_recipes": [
    {
     "kind": "fiber",
     "scale": [
      3
     ],
     "collapse_coords": [
      0,
      1
     ],
     "orbit": [
      {
       "divisor": "n4",
       "cycles": "(E00 E10 E20)(E01 E11 E21)"
      }
     ],
     "fiber_coord": 2,
     "fiber_sign_digit": 2
    }
   ]
  },
  {
   "id": "p2bundle_k1",
   "dim": 3,
   "vertices": [
    [
     1,
     0,
     0
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     -1,
     -1,
     1
    ],
    [
     0,
     0,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5"
   ],
   "class_names": {
    "n1": "pi*H",
    "n2": "pi*H",
    "n3": "xi-pi*H",
    "n4": "pi*H",
    "n5": "xi"
   },
   "collection": [
    {
     "label": "E00",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E10",
     "display": "pi*H",
     "coeffs": [
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E20",
     "display": "2pi*H",
     "coeffs": [
      2,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E01",
     "display": "xi",
     "coeffs": [
      0,
      0,
      0,
      0,
      1
     ]
    },
    {
     "label": "E11",
     "display": "pi*H+xi",
     "coeffs": [
      1,
      0,
      0,
      0,
      1
     ]
    },
    {
     "label": "E21",
     "display": "2pi*H+xi",
     "coeffs": [
      2,
      0,
      0,
      0,
      1
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E00",
     "E10"
    ],
    [
     "E10",
     "E20"
    ],
    [
     "E01",
     "E11"
    ],
    [
     "E11",
     "E21"
    ],
    [
     "E00",
     "E01"
    ],
    [
     "E10",
     "E11"
    ],
    [
     "E20",
     "E21"
    ],
    [
     "E10",
     "E01"
    ],
    [
     "E20",
     "E11"
    ]
   ],
   "partition": {
    "base": [
     0,
     1,
     3
    ],
    "fiber": [
     2,
     4
    ]
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E00",
     "point": [
      [
       0.86,
       0.0
      ],
      [
       0.86,
       0.0
      ],
      [
       0.65,
       0.0
      ]
     ]
    },
    {
     "label": "E10",
     "point": [
      [
       -0.36,
       1.0
      ],
      [
       -0.36,
       1.0
      ],
      [
       1.07,
       -0.6
      ]
     ]
    },
    {
     "label": "E20",
     "point": [
      [
       -0.36,
       -1.0
      ],
      [
       -0.36,
       -1.0
      ],
      [
       1.07,
       0.6
      ]
     ]
    },
    {
     "label": "E01",
     "point": [
      [
       0.36,
       1.0
      ],
      [
       0.36,
       1.0
      ],
      [
       -1.07,
       -0.6
      ]
     ]
    },
    {
     "label": "E11",
     "point": [
      [
       -0.86,
       0.0
      ],
      [
       -0.86,
       0.0
      ],
      [
       -0.65,
       0.0
      ]
     ]
    },
    {
     "label": "E21",
     "point": [
      [
       0.36,
       -1.0
      ],
      [
       0.36,
       -1.0
      ],
      [
       -1.07,
       0.6
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E00 E10 E20)(E01 E11 E21)"
    },
    {
     "divisor": "n2",
     "cycles": "(E00 E10 E20)(E01 E11 E21)"
    },
    {
     "divisor": "n4",
     "cycles": "(E00 E10 E20)(E01 E11 E21)"
    },
    {
     "divisor": "n3",
     "cycles": "(E00 E21 E20 E11 E10 E01)"
    },
    {
     "divisor": "n5",
     "cycles": "(E00 E01 E10 E11 E20 E21)"
    },
    {
     "divisor": "n1+n3",
     "cycles": "(E00 E01 E10 E11 E20 E21)"
    },
    {
     "divisor": "n2+n3",
     "cycles": "(E00 E01 E10 E11 E20 E21)"
    },
    {
     "divisor": "n3+n4",
     "cycles": "(E00 E01 E10 E11 E20 E21)"
    }
   ],
   "degeneration_recipes": [
    {
     "kind": "fiber",
     "scale": [
      3
     ],
     "collapse_coords": [
      0,
      1
     ],
     "orbit": [
      {
       "divisor": "n4",
       "cycles": "(E00 E10 E20)(E01 E11 E21)"
      }
     ],
     "fiber_coord": 2,
     "fiber_sign_digit": 2
    }
   ]
  },
  {
   "id": "p2bundle_k2",
   "dim": 3,
   "vertices": [
    [
     1,
     0,
     0
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     -1,
     -1,
     2
    ],
    [
     0,
     0,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5"
   ],
   "class_names": {
    "n1": "pi*H",
    "n2": "pi*H",
    "n3": "xi-2pi*H",
    "n4": "pi*H",
    "n5": "xi"
   },
   "collection": [
    {
     "label": "E00",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E10",
     "display": "pi*H",
     "coeffs": [
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E20",
     "display": "2pi*H",
     "coeffs": [
      2,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E01",
     "display": "xi",
     "coeffs": [
      0,
      0,
      0,
      0,
      1
     ]
    },
    {
     "label": "E11",
     "display": "pi*H+xi",
     "coeffs": [
      1,
      0,
      0,
      0,
      1
     ]
    },
    {
     "label": "E21",
     "display": "2pi*H+xi",
     "coeffs": [
      2,
      0,
      0,
      0,
      1
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E00",
     "E10"
    ],
    [
     "E10",
     "E20"
    ],
    [
     "E01",
     "E11"
    ],
    [
     "E11",
     "E21"
    ],
    [
     "E00",
     "E01"
    ],
    [
     "E10",
     "E11"
    ],
    [
     "E20",
     "E21"
    ],
    [
     "E20",
     "E01"
    ]
   ],
   "partition": {
    "base": [
     0,
     1,
     3
    ],
    "fiber": [
     2,
     4
    ]
   },
   "epsilon": 0.5,
   "fixtures": [
    {
     "label": "E00",
     "point": [
      [
       0.66119,
       0.0
      ],
      [
       0.66119,
       0.0
      ],
      [
       0.53763,
       0.0
      ]
     ]
    },
    {
     "label": "E10",
     "point": [
      [
       0.11928,
       0.85727
      ],
      [
       0.11928,
       0.85727
      ],
      [
       0.43996,
       -0.67442
      ]
     ]
    },
    {
     "label": "E20",
     "point": [
      [
       0.11928,
       -0.85727
      ],
      [
       0.11928,
       -0.85727
      ],
      [
       0.43996,
       0.67442
      ]
     ]
    },
    {
     "label": "E01",
     "point": [
      [
       -0.50844,
       0.4815
      ],
      [
       -0.50844,
       0.4815
      ],
      [
       -0.53178,
       -0.24615
      ]
     ]
    },
    {
     "label": "E11",
     "point": [
      [
       -0.50844,
       -0.4815
      ],
      [
       -0.50844,
       -0.4815
      ],
      [
       -0.53178,
       0.24615
      ]
     ]
    },
    {
     "label": "E21",
     "point": [
      [
       4.11714,
       0.0
      ],
      [
       4.11714,
       0.0
      ],
      [
       -8.35399,
       0.0
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E00 E10 E20)(E01 E11 E21)"
    },
    {
     "divisor": "n2",
     "cycles": "(E00 E10 E20)(E01 E11 E21)"
    },
    {
     "divisor": "n4",
     "cycles": "(E00 E10 E20)(E01 E11 E21)"
    },
    {
     "divisor": "n3",
     "cycles": "(E00 E11 E10 E21 E20 E01)"
    },
    {
     "divisor": "n5",
     "cycles": "(E00 E01 E20 E21 E10 E11)"
    },
    {
     "divisor": "n1+n2+n3",
     "cycles": "(E00 E01 E20 E21 E10 E11)"
    },
    {
     "divisor": "n1+n3+n4",
     "cycles": "(E00 E01 E20 E21 E10 E11)"
    },
    {
     "divisor": "n2+n3+n4",
     "cycles": "(E00 E01 E20 E21 E10 E11)"
    }
   ],
   "degeneration_recipes": [
    {
     "kind": "fiber",
     "scale": [
      3
     ],
     "collapse_coords": [
      0,
      1
     ],
     "orbit": [
      {
       "divisor": "n4",
       "cycles": "(E00 E10 E20)(E01 E11 E21)"
      }
     ],
     "fiber_coord": 2,
     "fiber_sign_digit": 2
    }
   ]
  },
  {
   "id": "p1bundle_k0",
   "dim": 3,
   "vertices": [
    [
     1,
     0,
     0
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     -1,
     -1,
     0
    ],
    [
     0,
     0,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5"
   ],
   "class_names": {
    "n1": "xi",
    "n2": "xi",
    "n3": "pi*H",
    "n4": "xi",
    "n5": "pi*H"
   },
   "collection": [
    {
     "label": "E00",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E10",
     "display": "pi*H",
     "coeffs": [
      0,
      0,
      1,
      0,
      0
     ]
    },
    {
     "label": "E01",
     "display": "xi",
     "coeffs": [
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E11",
     "display": "pi*H+xi",
     "coeffs": [
      1,
      0,
      1,
      0,
      0
     ]
    },
    {
     "label": "E02",
     "display": "2xi",
     "coeffs": [
      2,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E12",
     "display": "pi*H+2xi",
     "coeffs": [
      2,
      0,
      1,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E00",
     "E01"
    ],
    [
     "E01",
     "E02"
    ],
    [
     "E10",
     "E11"
    ],
    [
     "E11",
     "E12"
    ],
    [
     "E00",
     "E10"
    ],
    [
     "E01",
     "E11"
    ],
    [
     "E02",
     "E12"
    ]
   ],
   "partition": {
    "base": [
     2,
     4
    ],
    "fiber": [
     0,
     1,
     3
    ]
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E00",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E10",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E01",
     "point": [
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E11",
     "point": [
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E02",
     "point": [
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E12",
     "point": [
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -1.0,
       0.0
      ]
     ]
    }
   ],
   "monodromy_fixtures": [],
   "degeneration_recipes": [
    {
     "kind": "fiber",
     "scale": [
      4
     ],
     "collapse_coords": [
      2
     ],
     "orbit": [
      {
       "divisor": "n5",
       "cycles": "(E00 E10)(E01 E11)(E02 E12)"
      }
     ],
     "base_target": {
      "id": "p2",
      "coords": [
       0,
       1
      ],
      "label_digit": 2,
      "label_prefix": "E"
     }
    }
   ]
  },
  {
   "id": "p1bundle_k1",
   "dim": 3,
   "vertices": [
    [
     1,
     0,
     0
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     -1,
     -1,
     0
    ],
    [
     -1,
     -1,
     -1
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5"
   ],
   "class_names": {
    "n1": "xi",
    "n2": "xi",
    "n3": "pi*H",
    "n4": "xi-pi*H",
    "n5": "pi*H"
   },
   "collection": [
    {
     "label": "E00",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E10",
     "display": "pi*H",
     "coeffs": [
      0,
      0,
      1,
      0,
      0
     ]
    },
    {
     "label": "E01",
     "display": "xi",
     "coeffs": [
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E11",
     "display": "pi*H+xi",
     "coeffs": [
      1,
      0,
      1,
      0,
      0
     ]
    },
    {
     "label": "E02",
     "display": "2xi",
     "coeffs": [
      2,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E12",
     "display": "pi*H+2xi",
     "coeffs": [
      2,
      0,
      1,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E00",
     "E01"
    ],
    [
     "E01",
     "E02"
    ],
    [
     "E10",
     "E11"
    ],
    [
     "E11",
     "E12"
    ],
    [
     "E00",
     "E10"
    ],
    [
     "E01",
     "E11"
    ],
    [
     "E02",
     "E12"
    ],
    [
     "E10",
     "E01"
    ],
    [
     "E11",
     "E02"
    ]
   ],
   "partition": {
    "base": [
     2,
     4
    ],
    "fiber": [
     0,
     1,
     3
    ]
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E00",
     "point": [
      [
       1.3247179572447454,
       0.0
      ],
      [
       1.3247179572447454,
       0.0
      ],
      [
       0.7548776662466932,
       0.0
      ]
     ]
    },
    {
     "label": "E10",
     "point": [
      [
       0.6823278038280195,
       0.0
      ],
      [
       0.6823278038280195,
       0.0
      ],
      [
       -1.4655712318767677,
       0.0
      ]
     ]
    },
    {
     "label": "E01",
     "point": [
      [
       -0.3411639019140098,
       1.1615413999972526
      ],
      [
       -0.3411639019140098,
       1.1615413999972526
      ],
      [
       0.23278561593838387,
       0.7925519925154475
      ]
     ]
    },
    {
     "label": "E11",
     "point": [
      [
       -0.6623589786223729,
       0.5622795120623011
      ],
      [
       -0.6623589786223729,
       0.5622795120623011
      ],
      [
       -0.8774388331233466,
       -0.7448617666197443
      ]
     ]
    },
    {
     "label": "E02",
     "point": [
      [
       -0.6623589786223729,
       -0.5622795120623011
      ],
      [
       -0.6623589786223729,
       -0.5622795120623011
      ],
      [
       -0.8774388331233466,
       0.7448617666197443
      ]
     ]
    },
    {
     "label": "E12",
     "point": [
      [
       -0.3411639019140098,
       -1.1615413999972526
      ],
      [
       -0.3411639019140098,
       -1.1615413999972526
      ],
      [
       0.23278561593838387,
       -0.7925519925154475
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E00 E01 E02 E10 E11 E12)"
    },
    {
     "divisor": "n2",
     "cycles": "(E00 E01 E02 E10 E11 E12)"
    },
    {
     "divisor": "n3+n4",
     "cycles": "(E00 E01 E02 E10 E11 E12)"
    },
    {
     "divisor": "n4+n5",
     "cycles": "(E00 E01 E02 E10 E11 E12)"
    },
    {
     "divisor": "n3",
     "cycles": "(E00 E10)(E01 E11)(E02 E12)"
    },
    {
     "divisor": "n5",
     "cycles": "(E00 E10)(E01 E11)(E02 E12)"
    },
    {
     "divisor": "n4",
     "cycles": "(E00 E11 E02)(E01 E12 E10)"
    }
   ],
   "degeneration_recipes": [
    {
     "kind": "fiber",
     "scale": [
      4
     ],
     "collapse_coords": [
      2
     ],
     "orbit": [
      {
       "divisor": "n5",
       "cycles": "(E00 E10)(E01 E11)(E02 E12)"
      }
     ],
     "base_target": {
      "id": "p2",
      "coords": [
       0,
       1
      ],
      "label_digit": 2,
      "label_prefix": "E"
     }
    }
   ]
  },
  {
   "id": "p1xp1bundle_00",
   "dim": 3,
   "vertices": [
    [
     1,
     0,
     0
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     0,
     -1,
     0
    ],
    [
     0,
     0,
     -1
    ],
    [
     -1,
     0,
     0
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5",
    "n6"
   ],
   "class_names": {
    "n1": "xi",
    "n2": "pi*H1",
    "n3": "pi*H2",
    "n4": "pi*H1",
    "n5": "pi*H2",
    "n6": "xi"
   },
   "collection": [
    {
     "label": "E000",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E100",
     "display": "pi*H1",
     "coeffs": [
      0,
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E010",
     "display": "pi*H2",
     "coeffs": [
      0,
      0,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E110",
     "display": "pi*H1+pi*H2",
     "coeffs": [
      0,
      1,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E001",
     "display": "xi",
     "coeffs": [
      1,
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E101",
     "display": "pi*H1+xi",
     "coeffs": [
      1,
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E011",
     "display": "pi*H2+xi",
     "coeffs": [
      1,
      0,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E111",
     "display": "pi*H1+pi*H2+xi",
     "coeffs": [
      1,
      1,
      1,
      0,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E000",
     "E100"
    ],
    [
     "E001",
     "E101"
    ],
    [
     "E010",
     "E110"
    ],
    [
     "E011",
     "E111"
    ],
    [
     "E000",
     "E010"
    ],
    [
     "E001",
     "E011"
    ],
    [
     "E100",
     "E110"
    ],
    [
     "E101",
     "E111"
    ],
    [
     "E000",
     "E001"
    ],
    [
     "E010",
     "E011"
    ],
    [
     "E100",
     "E101"
    ],
    [
     "E110",
     "E111"
    ]
   ],
   "partition": {
    "base": [
     1,
     2,
     3,
     4
    ],
    "fiber": [
     0,
     5
    ]
   },
   "epsilon": 1.0,
   "fixtures": [
    {
     "label": "E000",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E100",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E010",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E110",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E001",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E101",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E011",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E111",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    }
   ],
   "monodromy_fixtures": [],
   "degeneration_recipes": [
    {
     "kind": "fiber",
     "scale": [
      3,
      4
     ],
     "collapse_coords": [
      1,
      2
     ],
     "orbit": [
      {
       "divisor": "n4",
       "cycles": "(E000 E100)(E001 E101)(E010 E110)(E011 E111)"
      },
      {
       "divisor": "n5",
       "cycles": "(E000 E010)(E001 E011)(E100 E110)(E101 E111)"
      }
     ],
     "fiber_coord": 0,
     "fiber_sign_digit": 3
    }
   ]
  },
  {
   "id": "p1xp1bundle_11",
   "dim": 3,
   "vertices": [
    [
     1,
     0,
     0
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     1,
     -1,
     0
    ],
    [
     1,
     0,
     -1
    ],
    [
     -1,
     0,
     0
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5",
    "n6"
   ],
   "class_names": {
    "n1": "xi",
    "n2": "pi*H1",
    "n3": "pi*H2",
    "n4": "pi*H1",
    "n5": "pi*H2",
    "n6": "pi*H1+pi*H2+xi"
   },
   "collection": [
    {
     "label": "E000",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E100",
     "display": "pi*H1",
     "coeffs": [
      0,
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E010",
     "display": "pi*H2",
     "coeffs": [
      0,
      0,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E110",
     "display": "pi*H1+pi*H2",
     "coeffs": [
      0,
      1,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E001",
     "display": "xi",
     "coeffs": [
      1,
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E101",
     "display": "pi*H1+xi",
     "coeffs": [
      1,
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E011",
     "display": "pi*H2+xi",
     "coeffs": [
      1,
      0,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E111",
     "display": "pi*H1+pi*H2+xi",
     "coeffs": [
      1,
      1,
      1,
      0,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E000",
     "E100"
    ],
    [
     "E001",
     "E101"
    ],
    [
     "E010",
     "E110"
    ],
    [
     "E011",
     "E111"
    ],
    [
     "E000",
     "E010"
    ],
    [
     "E001",
     "E011"
    ],
    [
     "E100",
     "E110"
    ],
    [
     "E101",
     "E111"
    ],
    [
     "E000",
     "E001"
    ],
    [
     "E010",
     "E011"
    ],
    [
     "E100",
     "E101"
    ],
    [
     "E110",
     "E111"
    ],
    [
     "E000",
     "E111"
    ]
   ],
   "partition": {
    "base": [
     1,
     2,
     3,
     4
    ],
    "fiber": [
     0,
     5
    ]
   },
   "epsilon": 0.5,
   "fixtures": [
    {
     "label": "E000",
     "point": [
      [
       0.5136198295638316,
       0.0
      ],
      [
       0.7166727492822869,
       0.0
      ],
      [
       0.7166727492822869,
       0.0
      ]
     ]
    },
    {
     "label": "E100",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E010",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E110",
     "point": [
      [
       4.439109106851378,
       0.0
      ],
      [
       -2.1069193403762227,
       0.0
      ],
      [
       -2.1069193403762227,
       0.0
      ]
     ]
    },
    {
     "label": "E001",
     "point": [
      [
       -0.47636446820759326,
       0.46007673544378097
      ],
      [
       -0.30487670445303494,
       -0.754529173144244
      ],
      [
       -0.30487670445303494,
       -0.754529173144244
      ]
     ]
    },
    {
     "label": "E101",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       0.0,
       1.0
      ],
      [
       -0.0,
       -1.0
      ]
     ]
    },
    {
     "label": "E011",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       -0.0,
       -1.0
      ],
      [
       0.0,
       1.0
      ]
     ]
    },
    {
     "label": "E111",
     "point": [
      [
       -0.47636446820759326,
       -0.46007673544378097
      ],
      [
       -0.30487670445303494,
       0.754529173144244
      ],
      [
       -0.30487670445303494,
       0.754529173144244
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E000 E001 E110 E111)(E010 E011 E100 E101)"
    },
    {
     "divisor": "n6",
     "cycles": "(E000 E111 E110 E001)(E010 E101 E100 E011)"
    },
    {
     "divisor": "n2",
     "cycles": "(E000 E100)(E001 E101)(E010 E110)(E011 E111)"
    },
    {
     "divisor": "n4",
     "cycles": "(E000 E100)(E001 E101)(E010 E110)(E011 E111)"
    },
    {
     "divisor": "n3",
     "cycles": "(E000 E010)(E001 E011)(E100 E110)(E101 E111)"
    },
    {
     "divisor": "n5",
     "cycles": "(E000 E010)(E001 E011)(E100 E110)(E101 E111)"
    }
   ],
   "degeneration_recipes": [
    {
     "kind": "fiber",
     "scale": [
      3,
      4
     ],
     "collapse_coords": [
      1,
      2
     ],
     "orbit": [
      {
       "divisor": "n4",
       "cycles": "(E000 E100)(E001 E101)(E010 E110)(E011 E111)"
      },
      {
       "divisor": "n5",
       "cycles": "(E000 E010)(E001 E011)(E100 E110)(E101 E111)"
      }
     ],
     "fiber_coord": 0,
     "fiber_sign_digit": 3
    }
   ]
  },
  {
   "id": "p1xp1bundle_1m1",
   "dim": 3,
   "vertices": [
    [
     1,
     0,
     0
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     1,
     -1,
     0
    ],
    [
     -1,
     0,
     -1
    ],
    [
     -1,
     0,
     0
    ]
   ],
   "ray_names": [
    "n1",
    "n2",
    "n3",
    "n4",
    "n5",
    "n6"
   ],
   "class_names": {
    "n1": "xi",
    "n2": "pi*H1",
    "n3": "pi*H2",
    "n4": "pi*H1",
    "n5": "pi*H2",
    "n6": "pi*H1+xi-pi*H2"
   },
   "collection": [
    {
     "label": "E000",
     "display": "0",
     "coeffs": [
      0,
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E100",
     "display": "pi*H1",
     "coeffs": [
      0,
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E010",
     "display": "pi*H2",
     "coeffs": [
      0,
      0,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E110",
     "display": "pi*H1+pi*H2",
     "coeffs": [
      0,
      1,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E001",
     "display": "xi",
     "coeffs": [
      1,
      0,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E101",
     "display": "pi*H1+xi",
     "coeffs": [
      1,
      1,
      0,
      0,
      0,
      0
     ]
    },
    {
     "label": "E011",
     "display": "pi*H2+xi",
     "coeffs": [
      1,
      0,
      1,
      0,
      0,
      0
     ]
    },
    {
     "label": "E111",
     "display": "pi*H1+pi*H2+xi",
     "coeffs": [
      1,
      1,
      1,
      0,
      0,
      0
     ]
    }
   ],
   "arrow_pairs": [
    [
     "E000",
     "E100"
    ],
    [
     "E001",
     "E101"
    ],
    [
     "E010",
     "E110"
    ],
    [
     "E011",
     "E111"
    ],
    [
     "E000",
     "E010"
    ],
    [
     "E001",
     "E011"
    ],
    [
     "E100",
     "E110"
    ],
    [
     "E101",
     "E111"
    ],
    [
     "E000",
     "E001"
    ],
    [
     "E010",
     "E011"
    ],
    [
     "E100",
     "E101"
    ],
    [
     "E110",
     "E111"
    ],
    [
     "E010",
     "E101"
    ]
   ],
   "partition": {
    "base": [
     1,
     2,
     3,
     4
    ],
    "fiber": [
     0,
     5
    ]
   },
   "epsilon": 0.5,
   "fixtures": [
    {
     "label": "E000",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ],
      [
       1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E100",
     "point": [
      [
       2.618033988749895,
       0.0
      ],
      [
       -1.618033988749895,
       0.0
      ],
      [
       0.6180339887498949,
       0.0
      ]
     ]
    },
    {
     "label": "E010",
     "point": [
      [
       0.38196601125010515,
       0.0
      ],
      [
       0.6180339887498949,
       0.0
      ],
      [
       -1.618033988749895,
       0.0
      ]
     ]
    },
    {
     "label": "E110",
     "point": [
      [
       1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ],
      [
       -1.0,
       0.0
      ]
     ]
    },
    {
     "label": "E001",
     "point": [
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -0.4999999999999998,
       0.8660254037844387
      ]
     ]
    },
    {
     "label": "E101",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       0.0,
       1.0
      ],
      [
       0.0,
       1.0
      ]
     ]
    },
    {
     "label": "E011",
     "point": [
      [
       -1.0,
       0.0
      ],
      [
       -0.0,
       -1.0
      ],
      [
       -0.0,
       -1.0
      ]
     ]
    },
    {
     "label": "E111",
     "point": [
      [
       -0.5000000000000003,
       -0.8660254037844384
      ],
      [
       -0.4999999999999998,
       0.8660254037844387
      ],
      [
       -0.5000000000000003,
       -0.8660254037844384
      ]
     ]
    }
   ],
   "monodromy_fixtures": [
    {
     "divisor": "n1",
     "cycles": "(E000 E001 E110 E111)(E010 E011 E100 E101)"
    },
    {
     "divisor": "n6",
     "cycles": "(E000 E111 E110 E001)(E010 E101 E100 E011)"
    },
    {
     "divisor": "n2",
     "cycles": "(E000 E100)(E001 E101)(E010 E110)(E011 E111)"
    },
    {
     "divisor": "n4",
     "cycles": "(E000 E100)(E001 E101)(E010 E110)(E011 E111)"
    },
    {
     "divisor": "n3",
     "cycles": "(E000 E010)(E001 E011)(E100 E110)(E101 E111)"
    },
    {
     "divisor": "n5",
     "cycles": "(E000 E010)(E001 E011)(E100 E110)(E101 E111)"
    },
    {
     "divisor": "n3+n6",
     "cycles": "(E000 E101 E110 E011)(E001 E010 E111 E100)"
    },
    {
     "divisor": "n5+n6",
     "cycles": "(E000 E101 E110 E011)(E001 E010 E111 E100)"
    }
   ],
   "degeneration_recipes": [
    {
     "kind": "fiber",
     "scale": [
      3,
      4
     ],
     "collapse_coords": [
      1,
      2
     ],
     "orbit": [
      {
       "divisor": "n4",
       "cycles": "(E000 E100)(E001 E101)(E010 E110)(E011 E111)"
      },
      {
       "divisor": "n5",
       "cycles": "(E000 E010)(E001 E011)(E100 E110)(E101 E111)"
      }
     ],
     "fiber_coord": 0,
     "fiber_sign_digit": 3
    }
   ]
  }
 ]
})lgmjson";
}

}  // namespace lgm
