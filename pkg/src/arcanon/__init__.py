"""Canonical interval and circular-arc representations of hypergraphs and graphs."""

from __future__ import annotations

from .circular import (
    canonical_arc,
    canonical_tight_arc,
    circular_ones,
    consecutive_ones,
    cut_at_vertex,
    is_ca,
    is_tight_ca,
)
from .classes import (
    ClassTag,
    canonical_arc_model,
    canonical_label,
    coconvex_arc_model,
    interval_graph_model,
    isomorphic,
    proper_arc_model_pca,
    proper_model_proper_interval,
    recognize,
)
from .core import (
    Arc,
    ArcModel,
    Edge,
    Graph,
    Hypergraph,
    IntervalModel,
    classify_model,
    closed_neighborhoods,
    complement_hypergraph,
    dual,
    open_neighborhoods,
    quotient,
    strict_components,
    tightened,
    twin_classes,
    validate_graph_model,
    validate_model,
)
from .errors import (
    ArcanonError,
    NoSolution,
    NotCA,
    NotInClass,
    NotInterval,
    NotTightCA,
    NotTightInterval,
    PreconditionViolated,
    SizeLimit,
)
from .intervals import canonical_interval, canonical_tight_interval, is_interval
from .ssp import ssp_ca, ssp_coconvex, ssp_pca_noncobip, ssp_proper_interval

__all__ = [
    "Arc",
    "ArcModel",
    "ArcanonError",
    "ClassTag",
    "Edge",
    "Graph",
    "Hypergraph",
    "IntervalModel",
    "NoSolution",
    "NotCA",
    "NotInClass",
    "NotInterval",
    "NotTightCA",
    "NotTightInterval",
    "PreconditionViolated",
    "SizeLimit",
    "canonical_arc",
    "canonical_arc_model",
    "canonical_interval",
    "canonical_label",
    "canonical_tight_arc",
    "canonical_tight_interval",
    "circular_ones",
    "classify_model",
    "closed_neighborhoods",
    "coconvex_arc_model",
    "complement_hypergraph",
    "consecutive_ones",
    "cut_at_vertex",
    "dual",
    "interval_graph_model",
    "is_ca",
    "is_interval",
    "is_tight_ca",
    "isomorphic",
    "open_neighborhoods",
    "proper_arc_model_pca",
    "proper_model_proper_interval",
    "quotient",
    "recognize",
    "ssp_ca",
    "ssp_coconvex",
    "ssp_pca_noncobip",
    "ssp_proper_interval",
    "strict_components",
    "tightened",
    "twin_classes",
    "validate_graph_model",
    "validate_model",
]
