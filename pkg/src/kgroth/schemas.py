"""JSON Schemas for the machine-readable CLI documents."""

PARTITION_SCHEMA = {
    "type": "array",
    "items": {"type": "integer", "minimum": 1},
}

TERM_SCHEMA = {
    "type": "object",
    "required": ["partition", "coeff"],
    "properties": {
        "partition": PARTITION_SCHEMA,
        "coeff": {"type": "integer"},
    },
    "additionalProperties": False,
}

EXPANSION_SCHEMA = {
    "type": "object",
    "required": ["basis", "k", "deg_max", "terms"],
    "properties": {
        "basis": {"enum": ["m", "h", "e", "s", "G", "g", "Gk", "gk"]},
        "k": {"type": ["integer", "null"]},
        "deg_max": {"type": ["integer", "null"]},
        "terms": {"type": "array", "items": TERM_SCHEMA},
    },
}

FILLING_SCHEMA = {
    "type": "object",
    "required": ["shape", "cells"],
    "properties": {
        "shape": PARTITION_SCHEMA,
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["row", "col", "letters"],
                "properties": {
                    "row": {"type": "integer", "minimum": 0},
                    "col": {"type": "integer", "minimum": 0},
                    "letters": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 1},
                        "minItems": 1,
                    },
                },
                "additionalProperties": False,
            },
        },
    },
}

SCAN_ENTRY_SCHEMA = {
    "type": "object",
    "required": ["lam", "mu", "coeff", "normalized", "sign_ok"],
    "properties": {
        "lam": PARTITION_SCHEMA,
        "mu": PARTITION_SCHEMA,
        "coeff": {"type": "integer"},
        "normalized": {"type": "integer"},
        "sign_ok": {"type": "boolean"},
        "series": {"type": "string"},
        "exact": {"type": "boolean"},
    },
    "additionalProperties": False,
}

SCAN_REPORT_SCHEMA = {
    "type": "object",
    "required": ["conjecture", "k", "deg_max", "entries", "violations"],
    "properties": {
        "conjecture": {"type": "string"},
        "k": {"type": "integer"},
        "deg_max": {"type": "integer"},
        "entries": {"type": "array", "items": SCAN_ENTRY_SCHEMA},
        "violations": {"type": "array", "items": SCAN_ENTRY_SCHEMA},
    },
    "additionalProperties": False,
}
