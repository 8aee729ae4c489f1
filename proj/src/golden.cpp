#include "borbit/golden.hpp"

namespace borbit::golden {

// C2 node 2, nilradical: the five orthogonal subsets of Psi forming the
// diamond with dims 0, 1, 2, 2, 3.
const char* const sp4_pu_json = R"fixture({
  "header": {
    "cartan_type": "C",
    "rank": 2,
    "node": 2,
    "space": "pu",
    "version": "1"
  },
  "nodes": [
    {
      "id": 0,
      "v": [],
      "S": [],
      "dim": 0,
      "L": 0,
      "sigma": [],
      "nu": []
    },
    {
      "id": 1,
      "v": [],
      "S": [
        [
          0,
          1
        ]
      ],
      "dim": 2,
      "L": 2,
      "sigma": [
        1,
        2,
        1
      ],
      "nu": []
    },
    {
      "id": 2,
      "v": [],
      "S": [
        [
          1,
          1
        ]
      ],
      "dim": 2,
      "L": 2,
      "sigma": [
        2,
        1,
        2
      ],
      "nu": []
    },
    {
      "id": 3,
      "v": [],
      "S": [
        [
          2,
          1
        ]
      ],
      "dim": 1,
      "L": 1,
      "sigma": [
        2
      ],
      "nu": []
    },
    {
      "id": 4,
      "v": [],
      "S": [
        [
          0,
          1
        ],
        [
          2,
          1
        ]
      ],
      "dim": 3,
      "L": 3,
      "sigma": [
        1,
        2,
        1,
        2
      ],
      "nu": []
    }
  ],
  "edges": [
    [
      0,
      3
    ],
    [
      1,
      4
    ],
    [
      2,
      4
    ],
    [
      3,
      1
    ],
    [
      3,
      2
    ]
  ]
}
)fixture";

// C2 node 2, Hermitian: 11 admissible pairs, 16 covering edges, 12 of them
// decorated by the raising operator that realizes the edge.
const char* const sp4_gl_json = R"fixture({
  "header": {
    "cartan_type": "C",
    "rank": 2,
    "node": 2,
    "space": "gl",
    "version": "1"
  },
  "nodes": [
    {
      "id": 0,
      "v": [],
      "S": [],
      "dim": 3,
      "L": 0,
      "sigma": [],
      "nu": []
    },
    {
      "id": 1,
      "v": [
        2
      ],
      "S": [],
      "dim": 3,
      "L": 0,
      "sigma": [],
      "nu": [
        2
      ]
    },
    {
      "id": 2,
      "v": [
        2
      ],
      "S": [
        [
          0,
          1
        ]
      ],
      "dim": 4,
      "L": 1,
      "sigma": [
        2
      ],
      "nu": []
    },
    {
      "id": 3,
      "v": [
        1,
        2
      ],
      "S": [],
      "dim": 3,
      "L": 0,
      "sigma": [],
      "nu": [
        1,
        2
      ]
    },
    {
      "id": 4,
      "v": [
        1,
        2
      ],
      "S": [
        [
          0,
          1
        ]
      ],
      "dim": 5,
      "L": 2,
      "sigma": [
        1,
        2,
        1
      ],
      "nu": []
    },
    {
      "id": 5,
      "v": [
        1,
        2
      ],
      "S": [
        [
          1,
          1
        ]
      ],
      "dim": 4,
      "L": 1,
      "sigma": [
        1
      ],
      "nu": [
        2
      ]
    },
    {
      "id": 6,
      "v": [
        2,
        1,
        2
      ],
      "S": [],
      "dim": 3,
      "L": 0,
      "sigma": [],
      "nu": [
        2,
        1,
        2
      ]
    },
    {
      "id": 7,
      "v": [
        2,
        1,
        2
      ],
      "S": [
        [
          0,
          1
        ]
      ],
      "dim": 5,
      "L": 2,
      "sigma": [
        1,
        2,
        1
      ],
      "nu": [
        2
      ]
    },
    {
      "id": 8,
      "v": [
        2,
        1,
        2
      ],
      "S": [
        [
          1,
          1
        ]
      ],
      "dim": 5,
      "L": 2,
      "sigma": [
        2,
        1,
        2
      ],
      "nu": []
    },
    {
      "id": 9,
      "v": [
        2,
        1,
        2
      ],
      "S": [
        [
          2,
          1
        ]
      ],
      "dim": 4,
      "L": 1,
      "sigma": [
        2
      ],
      "nu": [
        1,
        2
      ]
    },
    {
      "id": 10,
      "v": [
        2,
        1,
        2
      ],
      "S": [
        [
          0,
          1
        ],
        [
          2,
          1
        ]
      ],
      "dim": 6,
      "L": 3,
      "sigma": [
        1,
        2,
        1,
        2
      ],
      "nu": []
    }
  ],
  "edges": [
    [
      0,
      2
    ],
    [
      1,
      2
    ],
    [
      1,
      5
    ],
    [
      2,
      4
    ],
    [
      2,
      8
    ],
    [
      3,
      5
    ],
    [
      3,
      9
    ],
    [
      4,
      10
    ],
    [
      5,
      4
    ],
    [
      5,
      7
    ],
    [
      5,
      8
    ],
    [
      6,
      9
    ],
    [
      7,
      10
    ],
    [
      8,
      10
    ],
    [
      9,
      7
    ],
    [
      9,
      8
    ]
  ],
  "decorations": [
    {
      "edge": [
        0,
        2
      ],
      "alpha": 2
    },
    {
      "edge": [
        1,
        2
      ],
      "alpha": 2
    },
    {
      "edge": [
        1,
        5
      ],
      "alpha": 1
    },
    {
      "edge": [
        2,
        4
      ],
      "alpha": 1
    },
    {
      "edge": [
        3,
        5
      ],
      "alpha": 1
    },
    {
      "edge": [
        3,
        9
      ],
      "alpha": 2
    },
    {
      "edge": [
        4,
        10
      ],
      "alpha": 2
    },
    {
      "edge": [
        5,
        8
      ],
      "alpha": 2
    },
    {
      "edge": [
        6,
        9
      ],
      "alpha": 2
    },
    {
      "edge": [
        7,
        10
      ],
      "alpha": 2
    },
    {
      "edge": [
        8,
        10
      ],
      "alpha": 1
    },
    {
      "edge": [
        9,
        7
      ],
      "alpha": 1
    }
  ]
}
)fixture";

}  // namespace borbit::golden
