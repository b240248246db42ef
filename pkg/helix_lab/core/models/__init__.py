"""Data models for the laboratory."""

from .base_models import BaseModel, FrozenModel
from .chromatic_models import ChromaticResult, CriticalityReport, Rational
from .config_models import HarnessDefaults, SizeCaps
from .family_models import (
    FamilyDescriptor,
    HelicalVertex,
    ReductionTrace,
    StableSubset,
    circular_gap_ok,
)
from .graph_models import CycleStats, Graph, SetTupleLabel, VertexLabel
from .hom_models import HomSearchResult, SearchMode, VertexMap
from .report_models import (
    CaseRecord,
    CaseVerdict,
    CorpusGenerator,
    CorpusSpec,
    Report,
    SuiteVerdict,
    aggregate_verdict,
)

__all__ = [
    # Base models
    "BaseModel",
    "FrozenModel",
    # Graphs
    "CycleStats",
    "Graph",
    "SetTupleLabel",
    "VertexLabel",
    # Families
    "FamilyDescriptor",
    "HelicalVertex",
    "ReductionTrace",
    "StableSubset",
    "circular_gap_ok",
    # Homomorphisms
    "HomSearchResult",
    "SearchMode",
    "VertexMap",
    # Chromatic parameters
    "ChromaticResult",
    "CriticalityReport",
    "Rational",
    # Reports and corpora
    "CaseRecord",
    "CaseVerdict",
    "CorpusGenerator",
    "CorpusSpec",
    "Report",
    "SuiteVerdict",
    "aggregate_verdict",
    # Configuration
    "HarnessDefaults",
    "SizeCaps",
]
