"""JSON Schemas for the documents the command-line tool reads and writes.

Every number on the wire is a rational string such as "7/8" or "-3"; element
indices and counts are plain integers.
"""

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
SUBSET = {"type": "array", "items": {"type": "integer", "minimum": 0}}
POINT = {"type": "array", "items": RATIONAL}

MATROID = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["uniform", "free", "graphic", "partition", "linear_gf2", "explicit",
                          "truncation", "restriction"]},
        "n": {"type": "integer", "minimum": 0},
        "k": {"type": "integer", "minimum": 0},
        "vertices": {"type": "integer", "minimum": 0},
        "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer"},
                                             "minItems": 2, "maxItems": 2}},
        "blocks": {"type": "array", "items": SUBSET},
        "capacities": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "columns": {"type": "array", "items": {"type": "string", "pattern": "^[01]+$"}},
        "maximal_independent": {"type": "array", "items": SUBSET},
        "labels": {"type": "array", "items": {"type": "string"}},
        "base": {"type": "object"},
        "subset": SUBSET,
    },
}

INEQUALITY = {
    "type": "object",
    "required": ["coeffs", "sense", "rhs", "provenance"],
    "properties": {
        "coeffs": POINT,
        "sense": {"enum": ["<=", ">="]},
        "rhs": RATIONAL,
        "provenance": {
            "type": "object",
            "required": ["kind"],
            "properties": {
                "kind": {"enum": ["rank", "fs", "lower-bound", "upper-bound", "nonneg", "custom"]},
                "subset": SUBSET,
                "p": {"type": "integer", "minimum": 0},
                "element": {"type": "integer", "minimum": 0},
            },
        },
    },
}


def _nullable(schema):
    return {"anyOf": [schema, {"type": "null"}]}


def _object(required, **properties):
    return {"type": "object", "required": list(required), "properties": properties,
            "additionalProperties": False}


ERROR = _object(["error", "message"], error={"type": "string"}, message={"type": "string"})

RANK = _object(["rank"], rank=RATIONAL, k_rank=RATIONAL)

OPTIMIZE = _object(["set", "value"], set=SUBSET, value=RATIONAL)

ENUMERATE = _object(["count", "sets"], count={"type": "integer", "minimum": 0},
                    sets={"type": "array", "items": SUBSET})

FACET_ORACLE = _object(["is_facet", "dim_face", "dim_polytope", "witness"],
                       is_facet={"type": "boolean"}, dim_face={"type": "integer"},
                       dim_polytope={"type": "integer"},
                       witness={"type": "array", "items": SUBSET})

FACET_THEOREM = _object(["holds", "condition", "used_oracle"], holds={"type": "boolean"},
                        condition=_nullable({"type": "string"}), used_oracle={"type": "boolean"})

FACET_SINGLE_K = _object(["k", "dim_full", "facet"], k={"type": "integer"},
                         dim_full={"type": "boolean"}, facet=_nullable({"type": "boolean"}))

SEPARATION = _object(["status", "cut", "witness", "violation", "delta"],
                     status={"enum": ["inside", "violated"]}, cut=_nullable(INEQUALITY),
                     witness=_nullable(SUBSET), violation=_nullable(RATIONAL),
                     delta=_nullable(RATIONAL))

LP = _object(["point", "value", "cuts"], point=POINT, value=RATIONAL,
             cuts={"type": "array", "items": INEQUALITY})

_FAILURE = _object(["objective", "lp_value", "combinatorial_value", "point"],
                   objective={"type": "array", "items": {"type": "integer"}},
                   lp_value=RATIONAL, combinatorial_value=RATIONAL, point=POINT)

VERIFY = _object(["instance", "trials", "seed", "passed", "failures"],
                 instance={"type": "string"}, trials={"type": "integer", "minimum": 0},
                 seed={"type": "integer"}, passed={"type": "boolean"},
                 failures={"type": "array", "items": _FAILURE})

PROBE = _object(["trials", "seed", "vertices", "counterexample"],
                trials={"type": "integer", "minimum": 0}, seed={"type": "integer"},
                vertices={"type": "integer", "minimum": 0}, counterexample=_nullable(_FAILURE))

# output schema per subcommand (facet has one per mode)
OUTPUT = {
    "rank": RANK,
    "optimize": OPTIMIZE,
    "enumerate": ENUMERATE,
    "build-cut": INEQUALITY,
    "facet": {"anyOf": [FACET_ORACLE, FACET_THEOREM, FACET_SINGLE_K]},
    "separate": SEPARATION,
    "lp": LP,
    "verify": VERIFY,
    "probe-intersection": PROBE,
}
