# -*- coding: utf-8 -*-
"""円周上の uni-trivalent 図式と Alexander-Conway 重み W。"""

from .canonical import CanonicalKey, DiagramSum, canonical_diagram, canonical_key, diagram_from_key
from .errors import CalibrationError, DiagramFormatError, NonChordDiagramError, ScanParameterError
from .generator import ComponentSpec, random_diagram, random_shape, realize
from .io import format_diagram, parse_diagram, read_diagram
from .models import Diagram, DiagramBuilder, DiagramParts, chord_diagram
from .profile import ComponentProfile, ComponentShape, profile_components
from .reduction import (
    Engine,
    ResolvedRuleTable,
    edge_rule_terms,
    resolved_rule_table,
    weight,
    weight_reduced,
)
from .relations import apply_as, h_replace, ihx_terms, insert_wheel2
from .smoothing import chord_weight, smooth_all_chords, smooth_chord
from .stu import leg_adjacent_slot, stu_expand, stu_step, weight_oracle
from .vanishing import (
    ChordSpanningReport,
    VanishingReport,
    chord_spanning_check,
    is_allowed_shape,
    vanishing_scan,
)

__all__ = [
    "CalibrationError",
    "CanonicalKey",
    "ChordSpanningReport",
    "ComponentProfile",
    "ComponentShape",
    "ComponentSpec",
    "Diagram",
    "DiagramBuilder",
    "DiagramFormatError",
    "DiagramParts",
    "DiagramSum",
    "Engine",
    "NonChordDiagramError",
    "ResolvedRuleTable",
    "ScanParameterError",
    "VanishingReport",
    "apply_as",
    "canonical_diagram",
    "canonical_key",
    "chord_diagram",
    "chord_spanning_check",
    "chord_weight",
    "diagram_from_key",
    "edge_rule_terms",
    "format_diagram",
    "h_replace",
    "ihx_terms",
    "insert_wheel2",
    "is_allowed_shape",
    "leg_adjacent_slot",
    "parse_diagram",
    "profile_components",
    "random_diagram",
    "random_shape",
    "read_diagram",
    "realize",
    "resolved_rule_table",
    "smooth_all_chords",
    "smooth_chord",
    "stu_expand",
    "stu_step",
    "vanishing_scan",
    "weight",
    "weight_oracle",
    "weight_reduced",
]
