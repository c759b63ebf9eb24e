#pragma once

#include <string_view>

namespace ndf::experiment {

/// JSON Schema (draft 2020-12) for ndf-lab experiment configs. The runner's
/// validate_config enforces the same structure and reports the failing path.
inline constexpr std::string_view kConfigSchema = R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "ndf-lab experiment config",
  "type": "object",
  "additionalProperties": false,
  "required": [
    "command"
  ],
  "properties": {
    "command": {
      "enum": [
        "verify-inequality",
        "check-kernel",
        "variance-identity",
        "counterexample",
        "tail-identity",
        "simulate-bbm",
        "signed-sum"
      ]
    },
    "psi": {
      "$ref": "#/$defs/NdfSpec"
    },
    "distribution": {
      "$ref": "#/$defs/DiscreteDistribution"
    },
    "sampler": {
      "$ref": "#/$defs/SamplerSpec"
    },
    "parameters": {
      "type": "object",
      "properties": {
        "N": {
          "type": "integer",
          "minimum": 100
        },
        "n_paths": {
          "type": "integer",
          "minimum": 1
        },
        "seed": {
          "$ref": "#/$defs/Seed"
        },
        "tolerance": {
          "type": "number",
          "minimum": 0
        },
        "z_threshold": {
          "type": "number",
          "exclusiveMinimum": 0
        },
        "points": {
          "type": "array",
          "minItems": 1,
          "items": {
            "$ref": "#/$defs/Point"
          }
        },
        "weights": {
          "type": "array",
          "items": {
            "type": "number"
          }
        },
        "alpha": {
          "type": "number",
          "exclusiveMinimum": 0
        },
        "c": {
          "type": "number",
          "exclusiveMinimum": 0
        },
        "M": {
          "type": "number",
          "minimum": 1
        },
        "M_grid": {
          "type": "array",
          "minItems": 1,
          "items": {
            "type": "number"
          }
        },
        "H": {
          "type": "number",
          "exclusiveMinimum": 0,
          "maximum": 1
        },
        "K": {
          "type": "number",
          "exclusiveMinimum": 0,
          "maximum": 2
        },
        "grid": {
          "type": "array",
          "minItems": 1,
          "items": {
            "type": "number",
            "minimum": 0
          }
        },
        "pattern": {
          "type": "array",
          "minItems": 2,
          "items": {
            "enum": [
              1,
              -1
            ]
          }
        }
      }
    }
  },
  "allOf": [
    {
      "if": {
        "properties": {
          "command": {
            "const": "verify-inequality"
          }
        }
      },
      "then": {
        "required": [
          "psi"
        ],
        "oneOf": [
          {
            "required": [
              "distribution"
            ]
          },
          {
            "required": [
              "sampler"
            ]
          }
        ],
        "properties": {
          "parameters": {
            "propertyNames": {
              "enum": [
                "N",
                "seed",
                "tolerance",
                "z_threshold"
              ]
            }
          }
        }
      }
    },
    {
      "if": {
        "properties": {
          "command": {
            "const": "check-kernel"
          }
        }
      },
      "then": {
        "required": [
          "psi",
          "parameters"
        ],
        "properties": {
          "parameters": {
            "required": [
              "points"
            ],
            "propertyNames": {
              "enum": [
                "points",
                "tolerance",
                "weights"
              ]
            }
          }
        }
      }
    },
    {
      "if": {
        "properties": {
          "command": {
            "const": "variance-identity"
          }
        }
      },
      "then": {
        "required": [
          "psi",
          "distribution"
        ],
        "properties": {
          "parameters": {
            "propertyNames": {
              "enum": [
                "tolerance"
              ]
            }
          }
        }
      }
    },
    {
      "if": {
        "properties": {
          "command": {
            "const": "counterexample"
          }
        }
      },
      "then": {
        "required": [
          "parameters"
        ],
        "properties": {
          "parameters": {
            "required": [
              "alpha",
              "c"
            ],
            "anyOf": [
              {
                "required": [
                  "M"
                ]
              },
              {
                "required": [
                  "M_grid"
                ]
              }
            ],
            "propertyNames": {
              "enum": [
                "alpha",
                "c",
                "M",
                "M_grid",
                "tolerance"
              ]
            }
          }
        }
      }
    },
    {
      "if": {
        "properties": {
          "command": {
            "const": "tail-identity"
          }
        }
      },
      "then": {
        "required": [
          "distribution"
        ],
        "properties": {
          "parameters": {
            "propertyNames": {
              "enum": [
                "tolerance"
              ]
            }
          }
        }
      }
    },
    {
      "if": {
        "properties": {
          "command": {
            "const": "simulate-bbm"
          }
        }
      },
      "then": {
        "required": [
          "parameters"
        ],
        "properties": {
          "parameters": {
            "required": [
              "H",
              "K",
              "grid"
            ],
            "propertyNames": {
              "enum": [
                "H",
                "K",
                "grid",
                "n_paths",
                "seed"
              ]
            }
          }
        }
      }
    },
    {
      "if": {
        "properties": {
          "command": {
            "const": "signed-sum"
          }
        }
      },
      "then": {
        "required": [
          "psi",
          "parameters"
        ],
        "oneOf": [
          {
            "required": [
              "distribution"
            ]
          },
          {
            "required": [
              "sampler"
            ]
          }
        ],
        "properties": {
          "parameters": {
            "required": [
              "pattern"
            ],
            "propertyNames": {
              "enum": [
                "pattern",
                "N",
                "seed",
                "tolerance",
                "z_threshold"
              ]
            }
          }
        }
      }
    }
  ],
  "$defs": {
    "Seed": {
      "oneOf": [
        {
          "type": "integer",
          "minimum": 0
        },
        {
          "type": "string",
          "pattern": "^(0[xX][0-9a-fA-F]{1,16}|[0-9]{1,20})$"
        }
      ]
    },
    "Point": {
      "oneOf": [
        {
          "type": "number"
        },
        {
          "type": "array",
          "minItems": 1,
          "items": {
            "type": "number"
          }
        }
      ]
    },
    "Matrix": {
      "type": "array",
      "minItems": 1,
      "items": {
        "type": "array",
        "minItems": 1,
        "items": {
          "type": "number"
        }
      }
    },
    "BernsteinSpec": {
      "oneOf": [
        {
          "type": "object",
          "required": [
            "variant",
            "a",
            "b"
          ],
          "properties": {
            "variant": {
              "const": "Triplet"
            },
            "a": {
              "type": "number",
              "minimum": 0
            },
            "b": {
              "type": "number",
              "minimum": 0
            },
            "atoms": {
              "type": "array",
              "items": {
                "type": "object",
                "required": [
                  "t",
                  "w"
                ],
                "properties": {
                  "t": {
                    "type": "number",
                    "exclusiveMinimum": 0
                  },
                  "w": {
                    "type": "number",
                    "exclusiveMinimum": 0
                  }
                },
                "additionalProperties": false
              }
            }
          },
          "additionalProperties": false
        },
        {
          "type": "object",
          "required": [
            "variant",
            "beta"
          ],
          "properties": {
            "variant": {
              "const": "Power"
            },
            "beta": {
              "type": "number",
              "exclusiveMinimum": 0,
              "maximum": 1
            }
          },
          "additionalProperties": false
        },
        {
          "type": "object",
          "required": [
            "variant"
          ],
          "properties": {
            "variant": {
              "const": "Log1p"
            }
          },
          "additionalProperties": false
        }
      ]
    },
    "NdfSpec": {
      "oneOf": [
        {
          "type": "object",
          "required": [
            "variant",
            "triplet"
          ],
          "properties": {
            "variant": {
              "const": "FromTriplet"
            },
            "dim": {
              "type": "integer",
              "minimum": 1
            },
            "triplet": {
              "type": "object",
              "required": [
                "Q"
              ],
              "properties": {
                "a": {
                  "const": 0
                },
                "Q": {
                  "$ref": "#/$defs/Matrix"
                },
                "atoms": {
                  "type": "array",
                  "items": {
                    "type": "object",
                    "required": [
                      "u",
                      "m"
                    ],
                    "properties": {
                      "u": {
                        "type": "array",
                        "items": {
                          "type": "number"
                        }
                      },
                      "m": {
                        "type": "number",
                        "exclusiveMinimum": 0
                      }
                    },
                    "additionalProperties": false
                  }
                }
              },
              "additionalProperties": false
            }
          },
          "additionalProperties": false
        },
        {
          "type": "object",
          "required": [
            "variant",
            "dim",
            "alpha"
          ],
          "properties": {
            "variant": {
              "const": "EuclideanPower"
            },
            "dim": {
              "type": "integer",
              "minimum": 1
            },
            "alpha": {
              "type": "number",
              "exclusiveMinimum": 0,
              "maximum": 2
            }
          },
          "additionalProperties": false
        },
        {
          "type": "object",
          "required": [
            "variant",
            "f",
            "inner"
          ],
          "properties": {
            "variant": {
              "const": "Subordinated"
            },
            "dim": {
              "type": "integer",
              "minimum": 1
            },
            "f": {
              "$ref": "#/$defs/BernsteinSpec"
            },
            "inner": {
              "$ref": "#/$defs/NdfSpec"
            }
          },
          "additionalProperties": false
        },
        {
          "type": "object",
          "required": [
            "variant",
            "terms"
          ],
          "properties": {
            "variant": {
              "const": "ConicSum"
            },
            "dim": {
              "type": "integer",
              "minimum": 1
            },
            "terms": {
              "type": "array",
              "minItems": 1,
              "items": {
                "type": "object",
                "required": [
                  "c",
                  "term"
                ],
                "properties": {
                  "c": {
                    "type": "number",
                    "minimum": 0
                  },
                  "term": {
                    "$ref": "#/$defs/NdfSpec"
                  }
                },
                "additionalProperties": false
              }
            }
          },
          "additionalProperties": false
        }
      ]
    },
    "DiscreteDistribution": {
      "type": "object",
      "required": [
        "atoms",
        "weights"
      ],
      "properties": {
        "atoms": {
          "type": "array",
          "minItems": 1,
          "items": {
            "$ref": "#/$defs/Point"
          }
        },
        "weights": {
          "type": "array",
          "minItems": 1,
          "items": {
            "type": "number",
            "exclusiveMinimum": 0
          }
        }
      },
      "additionalProperties": false
    },
    "SamplerSpec": {
      "oneOf": [
        {
          "type": "object",
          "required": [
            "variant",
            "distribution"
          ],
          "properties": {
            "variant": {
              "const": "Discrete"
            },
            "distribution": {
              "$ref": "#/$defs/DiscreteDistribution"
            }
          },
          "additionalProperties": false
        },
        {
          "type": "object",
          "required": [
            "variant",
            "dim",
            "sigma"
          ],
          "properties": {
            "variant": {
              "const": "GaussianIso"
            },
            "dim": {
              "type": "integer",
              "minimum": 1
            },
            "sigma": {
              "type": "number",
              "exclusiveMinimum": 0
            },
            "mean": {
              "type": "array",
              "items": {
                "type": "number"
              }
            }
          },
          "additionalProperties": false
        },
        {
          "type": "object",
          "required": [
            "variant",
            "lower",
            "upper"
          ],
          "properties": {
            "variant": {
              "const": "UniformBox"
            },
            "lower": {
              "type": "array",
              "items": {
                "type": "number"
              }
            },
            "upper": {
              "type": "array",
              "items": {
                "type": "number"
              }
            }
          },
          "additionalProperties": false
        },
        {
          "type": "object",
          "required": [
            "variant",
            "alpha",
            "c",
            "M"
          ],
          "properties": {
            "variant": {
              "const": "Counterexample"
            },
            "alpha": {
              "type": "number",
              "exclusiveMinimum": 2
            },
            "c": {
              "type": "number",
              "exclusiveMinimum": 0
            },
            "M": {
              "type": "number"
            }
          },
          "additionalProperties": false
        }
      ]
    }
  }
}
)json";

}  // namespace ndf::experiment
