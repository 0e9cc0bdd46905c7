"""JSON Schemas for the machine reports the CLI emits.

These are the published contracts: classification certificates, orientation
files, and orientation-check reports. Tests validate every emitted report
against them.
"""

CLASSIFY_SCHEMA = {
    "type": "object",
    "required": ["in_gstar", "in_g1", "blocks", "witness"],
    "additionalProperties": False,
    "properties": {
        "in_gstar": {"type": "boolean"},
        "in_g1": {"type": "boolean"},
        "blocks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["edges", "verdict", "theta"],
                "additionalProperties": False,
                "properties": {
                    "edges": {"type": "array", "items": {"type": "integer"}},
                    "verdict": {
                        "enum": ["Bipartite", "K4", "ThetaOneEven", "CrownK2Kr", "Other"]
                    },
                    "theta": {
                        "type": ["object", "null"],
                        "required": ["hubs", "path_lengths", "includes_unit"],
                        "properties": {
                            "hubs": {
                                "type": "array",
                                "items": {"type": "integer"},
                                "minItems": 2,
                                "maxItems": 2,
                            },
                            "path_lengths": {
                                "type": "array",
                                "items": {"type": "integer", "minimum": 1},
                            },
                            "includes_unit": {"type": "boolean"},
                            "convention": {"enum": ["cycle-as-theta"]},
                        },
                    },
                },
            },
        },
        "witness": {
            "type": ["object", "null"],
            "required": ["cycle1", "cycle2"],
            "properties": {
                "cycle1": {"type": "array", "items": {"type": "integer"}},
                "cycle2": {"type": "array", "items": {"type": "integer"}},
            },
        },
    },
}

_CERT_NODE = {
    "type": "object",
    "oneOf": [
        {"required": ["leaf", "edges"]},
        {"required": ["x", "y"]},
    ],
    "properties": {
        "leaf": {"type": "string"},
        "edges": {"type": "array", "items": {"type": "integer"}},
        "x": {"$ref": "#/$defs/node"},
        "y": {"$ref": "#/$defs/node"},
        "cut_vertex": {"type": "integer"},
    },
}

ORIENT_SCHEMA = {
    "type": "object",
    "required": ["n", "edges", "t", "arcs", "max_outdegree", "certificate"],
    "additionalProperties": False,
    "$defs": {"node": _CERT_NODE},
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "t": {"type": "integer", "minimum": 4},
        "arcs": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "max_outdegree": {"type": "integer", "minimum": 0},
        "certificate": {"$ref": "#/$defs/node"},
    },
}

CHECK_SCHEMA = {
    "type": "object",
    "required": ["kernel_perfect", "max_outdegree", "failing_subset"],
    "properties": {
        "kernel_perfect": {"type": "boolean"},
        "max_outdegree": {"type": "integer"},
        "failing_subset": {
            "type": ["array", "null"],
            "items": {"type": "integer"},
        },
        "within_cap": {"type": "boolean"},
    },
}

BATCH_SCHEMA = {
    "type": "object",
    "required": ["files", "results"],
    "properties": {
        "files": {"type": "integer"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "file", "n", "m", "in_gstar", "in_g1", "verdicts",
                    "t", "max_outdegree", "colored", "error",
                ],
            },
        },
    },
}
