#ifndef WPGL_EXAMPLES_GOLDEN_HPP
#define WPGL_EXAMPLES_GOLDEN_HPP

namespace wpgl::cli {

// Structural data of the small worked cases, frozen from a reviewed run.
inline const char* const kExamplesGolden = R"json({
  "cases": [
    {
      "case": "coprime-pair",
      "weights": [
        2,
        3
      ],
      "k": [
        0,
        0
      ],
      "unipotent_dims": [
        0,
        0
      ],
      "reductive_ranks": [
        1,
        1
      ],
      "pi1_order": 1,
      "pi0": {
        "class": "split-torus",
        "splitting_matrix": [
          [
            2,
            1
          ],
          [
            3,
            2
          ]
        ]
      },
      "torus_exponents": [],
      "conjugation": [],
      "torus_check": true
    },
    {
      "case": "divisible-pair",
      "weights": [
        2,
        4
      ],
      "k": [
        0,
        1
      ],
      "unipotent_dims": [
        0,
        1
      ],
      "reductive_ranks": [
        1,
        1
      ],
      "pi1_order": 2,
      "pi0": {
        "class": "split-torus",
        "splitting_matrix": [
          [
            1,
            0
          ],
          [
            2,
            1
          ]
        ]
      },
      "torus_exponents": [
        {
          "level": 2,
          "rows": [
            [
              -2,
              1
            ]
          ]
        }
      ],
      "conjugation": [],
      "torus_check": true
    },
    {
      "case": "equal-pair",
      "weights": [
        5,
        5
      ],
      "k": [
        0
      ],
      "unipotent_dims": [
        0
      ],
      "reductive_ranks": [
        2
      ],
      "pi1_order": 5,
      "pi0": {
        "class": "projective-block",
        "block_rank": 2
      },
      "torus_exponents": [],
      "conjugation": [],
      "torus_check": true
    },
    {
      "case": "chain-1-2-3",
      "weights": [
        1,
        2,
        3
      ],
      "k": [
        0,
        1,
        2
      ],
      "unipotent_dims": [
        0,
        1,
        2
      ],
      "reductive_ranks": [
        1,
        1,
        1
      ],
      "pi1_order": 1,
      "pi0": {
        "class": "split-torus",
        "splitting_matrix": [
          [
            1,
            -1,
            0
          ],
          [
            2,
            0,
            1
          ],
          [
            3,
            0,
            2
          ]
        ]
      },
      "torus_exponents": [
        {
          "level": 2,
          "rows": [
            [
              -2,
              1,
              0
            ]
          ]
        },
        {
          "level": 3,
          "rows": [
            [
              -3,
              0,
              1
            ],
            [
              -1,
              -1,
              1
            ]
          ]
        }
      ],
      "conjugation": [
        {
          "acting_level": 2,
          "target_level": 3,
          "matrix": [
            [
              "1",
              "-a"
            ],
            [
              "0",
              "1"
            ]
          ]
        }
      ],
      "torus_check": true
    },
    {
      "case": "chain-1-2-4",
      "weights": [
        1,
        2,
        4
      ],
      "k": [
        0,
        1,
        3
      ],
      "unipotent_dims": [
        0,
        1,
        3
      ],
      "reductive_ranks": [
        1,
        1,
        1
      ],
      "pi1_order": 1,
      "pi0": {
        "class": "split-torus",
        "splitting_matrix": [
          [
            1,
            0,
            0
          ],
          [
            2,
            1,
            0
          ],
          [
            4,
            2,
            1
          ]
        ]
      },
      "torus_exponents": [
        {
          "level": 2,
          "rows": [
            [
              -2,
              1,
              0
            ]
          ]
        },
        {
          "level": 3,
          "rows": [
            [
              -4,
              0,
              1
            ],
            [
              -2,
              -1,
              1
            ],
            [
              0,
              -2,
              1
            ]
          ]
        }
      ],
      "conjugation": [
        {
          "acting_level": 2,
          "target_level": 3,
          "matrix": [
            [
              "1",
              "-a",
              "a^2"
            ],
            [
              "0",
              "1",
              "-2*a"
            ],
            [
              "0",
              "0",
              "1"
            ]
          ]
        }
      ],
      "torus_check": true
    }
  ]
})json";

}  // namespace wpgl::cli

#endif
