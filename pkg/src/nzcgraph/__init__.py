"""Nonzero component graphs of finite vector spaces, their derived graphs,
exact degree-based indices, and an audit of published closed forms."""
from .audit import AuditReport, GridSpec, audit_grid, render_report, verify_structural_identities
from .derived import (TransformKind, apply_transform, derived_degrees, edge_semitotal, line_graph,
                      para_line, subdivision, vertex_semitotal)
from .errors import (EmptyGrid, ExplicitTooLarge, InvalidEdge, InvalidParams,
                     MissingSymbolInput, SelfLoopRejected, UnsupportedFormat)
from .formulas import FormulaId, catalog, corollary_threshold, eval_formula, fact_identity
from .graph import DegreeSequence, Graph, build_graph, complement, degrees, edge_count
from .indices import (IndexBundle, bundle, bundle_from_quotient, bundle_from_vectors, forgotten,
                      m1, m1_coindex, m2, m2_coindex)
from .space import (SpaceParams, SupportQuotient, VectorLabel, build_explicit, build_quotient,
                    expand_quotient, support_of)

__version__ = "0.1.0"
