"""JSON schemas for every machine-readable CLI output."""

_SCALAR = {"type": "string", "minLength": 1}
_INT_OR_NULL = {"type": ["integer", "null"]}

BOUND = {
    "type": "object",
    "required": ["k", "t", "c", "lambda2", "M", "M_approx", "v_ub", "parity_applied"],
    "properties": {
        "k": {"type": "integer", "minimum": 2},
        "t": {"type": "integer", "minimum": 2},
        "c": _SCALAR,
        "lambda2": _SCALAR,
        "M": _SCALAR,
        "M_approx": {"type": "number"},
        "v_ub": {"type": "integer"},
        "parity_applied": {"type": "boolean"},
    },
}

TABLE_ROW = {
    "type": "object",
    "required": ["k", "lambda", "v", "source", "published", "v_ub", "attained_by", "flag"],
    "properties": {
        "k": {"type": "integer"},
        "lambda": _SCALAR,
        "v": {"type": "integer"},
        "source": {"enum": ["lp-bound", "classification", "search", "paper-asserted"]},
        "published": {"type": "integer"},
        "v_ub": {"type": "integer"},
        "attained_by": {"type": ["string", "null"]},
        "flag": {"type": "string"},
    },
}

TABLE = {"type": "array", "items": TABLE_ROW}

CHECK = {
    "type": "object",
    "required": ["name", "status", "detail"],
    "properties": {"name": {"type": "string"}, "status": {"enum": ["pass", "fail", "n/a"]}, "detail": {"type": "string"}},
}

CERTIFY = {
    "type": "object",
    "required": ["k", "lambda", "n", "target", "target_source", "lambda2", "t", "c", "M", "attains", "checks"],
    "properties": {
        "k": {"type": "integer"},
        "lambda": _SCALAR,
        "n": {"type": "integer"},
        "target": {"type": "integer"},
        "target_source": {"type": "string"},
        "lambda2": {"type": ["string", "null"]},
        "t": {"type": "integer"},
        "c": _SCALAR,
        "M": _SCALAR,
        "attains": {"type": "boolean"},
        "checks": {"type": "array", "items": CHECK},
    },
}

_COUNTS = {"type": "object", "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 0}}, "additionalProperties": False}

SEARCH = {
    "type": "object",
    "required": ["spec", "counts_by_n", "scanned_by_n", "total", "pruned_branches", "stats", "wall_time"],
    "properties": {
        "spec": {
            "type": "object",
            "required": ["k", "n_min", "n_max", "girth_min", "girth_exact", "lambda2_max", "lambda2_min", "connected_only", "mode", "hooks"],
        },
        "counts_by_n": _COUNTS,
        "scanned_by_n": _COUNTS,
        "total": {"type": "integer"},
        "pruned_branches": {"type": "integer"},
        "stats": {"type": "object"},
        "effective_girth": _COUNTS,
        "warnings": {"type": "array", "items": {"type": "string"}},
        "wall_time": {"type": "number"},
        "max_order": _INT_OR_NULL,
        "witnesses": {
            "type": "array",
            "items": {"type": "object", "required": ["graph6", "n", "lambda2"]},
        },
    },
}

CATALOG_ENTRY = {
    "type": "object",
    "required": ["name", "n", "k", "lambda2", "charpoly_factors", "provenance"],
    "properties": {
        "name": {"type": "string"},
        "params": {"type": "object"},
        "n": {"type": "integer"},
        "k": {"type": "integer"},
        "lambda2": _SCALAR,
        "girth": _INT_OR_NULL,
        "provenance": {"enum": ["constructed", "certified-data"]},
        "attains": {"type": ["object", "null"]},
        "unique": {"type": ["boolean", "null"]},
        "charpoly_factors": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "required": ["factor", "multiplicity"],
                "properties": {"factor": {"type": "string"}, "multiplicity": {"type": "integer", "minimum": 1}},
            },
        },
        "graph6": {"type": "string"},
    },
}

CATALOG_LIST = {
    "type": "array",
    "items": {"type": "object", "required": ["name", "n", "k", "lambda2", "provenance"]},
}

SPECTRUM = {
    "type": "object",
    "required": ["n", "charpoly", "factors", "eigenvalues", "lambda2"],
    "properties": {
        "n": {"type": "integer"},
        "charpoly": {"type": "string"},
        "factors": CATALOG_ENTRY["properties"]["charpoly_factors"],
        "eigenvalues": {
            "type": "array",
            "items": {"type": "object", "required": ["value", "multiplicity"]},
        },
        "lambda2": {"type": ["string", "null"]},
    },
}

SCHEMAS = {
    "bound": BOUND,
    "table": TABLE,
    "certify": CERTIFY,
    "search": SEARCH,
    "catalog-export": CATALOG_ENTRY,
    "catalog-list": CATALOG_LIST,
    "spectrum": SPECTRUM,
}
