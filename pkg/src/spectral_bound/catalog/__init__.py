"""Named extremal graphs: constructions, certified data and attainment checks."""

from .attain import AttainmentReport, Check, certify_attainment, established_value, v_k_1
from .field import SUPPORTED_Q, FiniteField
from .registry import FAMILIES, Attains, CatalogEntry, build, certify_entry, entry, export, names

__all__ = [
    "Attains",
    "AttainmentReport",
    "CatalogEntry",
    "Check",
    "FAMILIES",
    "FiniteField",
    "SUPPORTED_Q",
    "build",
    "certify_attainment",
    "certify_entry",
    "entry",
    "established_value",
    "export",
    "names",
    "v_k_1",
]
