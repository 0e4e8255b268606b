"""Published closed forms for the nonzero component graph and its derived graphs.

Each evaluator transcribes the printed right-hand side term by term, with no
simplification and no correction, so a disagreement with the oracle points at
the printed expression itself. Halves and quarters are evaluated as exact
fractions and collapse back to ``int`` when integral.

The general complement/coindex identities for arbitrary graphs live in
:func:`fact_identity`.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional, Tuple, Union

from .errors import InvalidParams, MissingSymbolInput

Number = Union[int, Fraction]


class FormulaId(Enum):
    OBS1_ORDER = "OBS1_ORDER"
    OBS1_SIZE = "OBS1_SIZE"
    THM_M1_GAMMA = "THM_M1_GAMMA"
    COR_COM1_GAMMA = "COR_COM1_GAMMA"
    THM_M1_COMPLEMENT = "THM_M1_COMPLEMENT"
    COR_EQUALITY_THRESHOLD = "COR_EQUALITY_THRESHOLD"
    THM_F_GAMMA = "THM_F_GAMMA"
    OBS_L_ORDER = "OBS_L_ORDER"
    OBS_L_SIZE = "OBS_L_SIZE"
    THM_M1_LINE = "THM_M1_LINE"
    OBS_S_ORDER = "OBS_S_ORDER"
    OBS_S_SIZE = "OBS_S_SIZE"
    THM_M1_SUBDIV = "THM_M1_SUBDIV"
    OBS_T1_ORDER = "OBS_T1_ORDER"
    OBS_T1_SIZE = "OBS_T1_SIZE"
    THM_M1_T1 = "THM_M1_T1"
    OBS_T2_ORDER = "OBS_T2_ORDER"
    OBS_T2_SIZE = "OBS_T2_SIZE"
    THM_M1_T2 = "THM_M1_T2"
    OBS_PL_ORDER = "OBS_PL_ORDER"
    OBS_PL_SIZE = "OBS_PL_SIZE"
    THM_M1_PL = "THM_M1_PL"


def _exact(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _half(x: int) -> Number:
    return _exact(Fraction(x, 2))


# One function per published display, printed term order preserved.

def _obs1_order(q, n, m2):
    return q**n - 1


def _obs1_size(q, n, m2):
    return _half(q**(2*n) - q**n + 1 - (2*q - 1)**n)


def _thm_m1_gamma(q, n, m2):
    return ((q**n - 1)**4 + (q*(q + 1) - 1)**n - q**(2*n)
            - 2*(q**n - 1)*(q**n - (2*q - 1)**n))


def _cor_com1_gamma(q, n, m2):
    return ((q**n - 2)*(q**(2*n) - q**n + 1 - (2*q - 1)**n)
            + 2*(q**n - 1)*(q**n - (2*q - 1)**n)
            + q**(2*n) - (q*(q + 1) - 1)**n - (q**n - 1)**4)


def _thm_m1_complement(q, n, m2):
    return ((q**n - 1)**4 + (q*(q + 1) - 1)**n + (q**n - 1)*(q**n - 2)**2
            - 2*(q**n - 1)*(q**n - (2*q - 1)**n)
            - (q**n - 2)*(q**(2*n) - q**n + 1 - (2*q - 1)**n) - q**(2*n))


def _cor_equality_threshold(q, n, m2):
    return _exact(Fraction((q**n - 1)*(q**n - 2), 4))


def _thm_f_gamma(q, n, m2):
    return ((q**n - 1)**5 + q**(3*n) + 3*(q**n - 1)*((q*(q + 1) - 1)**n - q**(2*n))
            - 3*(q**n - 1)**2*(q**n - (2*q - 1)**n) - (q*(q**2 + 1) - 1)**n)


def _obs_l_order(q, n, m2):
    return _half(q**(2*n) - q**n + 1 - (2*q - 1)**n)


def _obs_l_size(q, n, m2):
    return _half((q**n - 1)**4 + (q*(q + 1) - 1)**n + (2*q - 1)**n + q**n - 2*q**(2*n)
                 - 2*(q**n - 1)*(q**n - (2*q - 1)**n) - 1)


def _thm_m1_line(q, n, m2):
    return (2*m2 + (q**n - 1)**5 + q**n*(q**(2*n) + q**n - 1)
            + 3*(q**n - 1)*((q*(q + 1) - 1)**n - q**(2*n))
            - 3*(q**n - 1)**2*(q**n - (2*q - 1)**n) - (q*(q**2 + 1) - 1)**n - (2*q - 1)**n
            - 4*((q**n - 1)**4 + (q*(q + 1) - 1)**n - 2*(q**n - 1)*(q**n - (2*q - 1)**n)
                 - q**(2*n))
            + 1)


def _obs_s_order(q, n, m2):
    return _half(q**n*(q**n + 1) - (2*q - 1)**n - 1)


def _obs_s_size(q, n, m2):
    return q**n*(q**n - 1) - (2*q - 1)**n + 1


def _thm_m1_subdiv(q, n, m2):
    return ((q**n - 1)**4 + (q*(q + 1) - 1)**n - 2*(q**n - 1)*(q**n - (2*q - 1)**n)
            - (2*q - 1)**n - q**n + 1)


def _obs_t1_order(q, n, m2):
    return _half(q**n*(q**n + 1) - (2*q - 1)**n - 1)


def _obs_t1_size(q, n, m2):
    return _half(3*(q**n*(q**n + 1) - (2*q - 1)**n - 1))


def _thm_m1_t1(q, n, m2):
    return (4*((q**n - 1)**4 + (q*(q + 1) - 1)**n - 2*(q**n - 1)*(q**n - (2*q - 1)**n)
               - q**(2*n))
            + q**n*(q**n - 1) - (2*q - 1)**n + 1)


def _obs_t2_order(q, n, m2):
    return _half(q**n*(q**n + 1) - (2*q - 1)**n - 1)


def _obs_t2_size(q, n, m2):
    return _half((q**n - 1)**4 + (q*(q + 1) - 1)**n - 2*(q**n - 1)*(q**n - (2*q - 1)**n)
                 - (2*q - 1)**n - q**n + 1)


def _thm_m1_t2(q, n, m2):
    return (2*m2 + q**n*(q**n - 1) + q**(2*n)*(q**n - 1) + (q*(q + 1) - 1)**n
            - (q**n - 1)*(q**n - (2*q - 1)**n)*(3*q**n - 1)
            + 3*(q**n - 1)*((q*(q + 1) - 1)**n - q**(2*n))
            - (q*(q**2 + 1) - 1)**n)


def _obs_pl_order(q, n, m2):
    return q**n*(q**n + 1) - (2*q - 1)**n - 1


def _obs_pl_size(q, n, m2):
    return _half((q**n - 1)**4 + (q*(q + 1) - 1)**n - q**(2*n)
                 - 2*(q**n - 1)*(q**n - (2*q - 1)**n))


def _thm_m1_pl(q, n, m2):
    return ((q**n - 1)**5 + q**(3*n) + 3*(q**n - 1)*((q*(q + 1) - 1)**n - q**(2*n))
            - 3*(q**n - 1)**2*(q**n - (2*q - 1)**n) - (q*(q**2 + 1) - 1)**n)


@dataclass(frozen=True)
class FormulaCatalogEntry:
    id: FormulaId
    statement_kind: str  # order | size | index-value | predicate
    quantity: str        # what the printed value claims to be
    expression: str      # printed right-hand side, plain-text transcription
    evaluator: Callable[[int, int, Optional[int]], Number]
    needs_m2: bool = False

    @property
    def provenance(self) -> str:
        return f"{self.quantity} = {self.expression}"

    def __call__(self, q: int, n: int, m2: Optional[int] = None) -> Number:
        return eval_formula(self.id, q, n, m2)


_G = "Gamma(V)"
_E = "(q^n-1)^4 + (q(q+1)-1)^n - q^(2n) - 2(q^n-1)(q^n-(2q-1)^n)"
_F = ("(q^n-1)^5 + q^(3n) + 3(q^n-1)[(q(q+1)-1)^n - q^(2n)] - 3(q^n-1)^2[q^n-(2q-1)^n]"
      " - (q(q^2+1)-1)^n")
_HALF_ORDER = "[q^n(q^n+1) - (2q-1)^n - 1]/2"

_ENTRIES: Tuple[FormulaCatalogEntry, ...] = (
    FormulaCatalogEntry(FormulaId.OBS1_ORDER, "order", f"|V({_G})|", "q^n - 1", _obs1_order),
    FormulaCatalogEntry(FormulaId.OBS1_SIZE, "size", f"|E({_G})|",
                        "[q^(2n) - q^n + 1 - (2q-1)^n]/2", _obs1_size),
    FormulaCatalogEntry(FormulaId.THM_M1_GAMMA, "index-value", f"M1({_G})", _E, _thm_m1_gamma),
    FormulaCatalogEntry(FormulaId.COR_COM1_GAMMA, "index-value", f"coM1({_G})",
                        "(q^n-2)(q^(2n) - q^n + 1 - (2q-1)^n) + 2(q^n-1)(q^n-(2q-1)^n)"
                        " + q^(2n) - (q(q+1)-1)^n - (q^n-1)^4", _cor_com1_gamma),
    FormulaCatalogEntry(FormulaId.THM_M1_COMPLEMENT, "index-value", f"M1(complement of {_G})",
                        "(q^n-1)^4 + (q(q+1)-1)^n + (q^n-1)(q^n-2)^2 - 2(q^n-1)(q^n-(2q-1)^n)"
                        " - (q^n-2)(q^(2n) - q^n + 1 - (2q-1)^n) - q^(2n)", _thm_m1_complement),
    FormulaCatalogEntry(FormulaId.COR_EQUALITY_THRESHOLD, "predicate",
                        f"edge count at which M1(complement of {_G}) = coM1({_G})",
                        "(q^n-1)(q^n-2)/4", _cor_equality_threshold),
    FormulaCatalogEntry(FormulaId.THM_F_GAMMA, "index-value", f"F({_G})", _F, _thm_f_gamma),
    FormulaCatalogEntry(FormulaId.OBS_L_ORDER, "order", f"|V(L({_G}))|",
                        "[q^(2n) - q^n + 1 - (2q-1)^n]/2", _obs_l_order),
    FormulaCatalogEntry(FormulaId.OBS_L_SIZE, "size", f"|E(L({_G}))|",
                        "[(q^n-1)^4 + (q(q+1)-1)^n + (2q-1)^n + q^n - 2q^(2n)"
                        " - 2(q^n-1)(q^n-(2q-1)^n) - 1]/2", _obs_l_size),
    FormulaCatalogEntry(FormulaId.THM_M1_LINE, "index-value", f"M1(L({_G}))",
                        "2M2 + (q^n-1)^5 + q^n(q^(2n)+q^n-1) + 3(q^n-1)[(q(q+1)-1)^n - q^(2n)]"
                        " - 3(q^n-1)^2(q^n-(2q-1)^n) - (q(q^2+1)-1)^n - (2q-1)^n"
                        " - 4[(q^n-1)^4 + (q(q+1)-1)^n - 2(q^n-1)(q^n-(2q-1)^n) - q^(2n)] + 1",
                        _thm_m1_line, needs_m2=True),
    FormulaCatalogEntry(FormulaId.OBS_S_ORDER, "order", f"|V(S({_G}))|", _HALF_ORDER,
                        _obs_s_order),
    FormulaCatalogEntry(FormulaId.OBS_S_SIZE, "size", f"|E(S({_G}))|",
                        "q^n(q^n-1) - (2q-1)^n + 1", _obs_s_size),
    FormulaCatalogEntry(FormulaId.THM_M1_SUBDIV, "index-value", f"M1(S({_G}))",
                        "(q^n-1)^4 + (q(q+1)-1)^n - 2(q^n-1)(q^n-(2q-1)^n) - (2q-1)^n - q^n + 1",
                        _thm_m1_subdiv),
    FormulaCatalogEntry(FormulaId.OBS_T1_ORDER, "order", f"|V(T1({_G}))|", _HALF_ORDER,
                        _obs_t1_order),
    FormulaCatalogEntry(FormulaId.OBS_T1_SIZE, "size", f"|E(T1({_G}))|",
                        "3[q^n(q^n+1) - (2q-1)^n - 1]/2", _obs_t1_size),
    FormulaCatalogEntry(FormulaId.THM_M1_T1, "index-value", f"M1(T1({_G}))",
                        "4[(q^n-1)^4 + (q(q+1)-1)^n - 2(q^n-1)(q^n-(2q-1)^n) - q^(2n)]"
                        " + q^n(q^n-1) - (2q-1)^n + 1", _thm_m1_t1),
    FormulaCatalogEntry(FormulaId.OBS_T2_ORDER, "order", f"|V(T2({_G}))|", _HALF_ORDER,
                        _obs_t2_order),
    FormulaCatalogEntry(FormulaId.OBS_T2_SIZE, "size", f"|E(T2({_G}))|",
                        "[(q^n-1)^4 + (q(q+1)-1)^n - 2(q^n-1)(q^n-(2q-1)^n)"
                        " - (2q-1)^n - q^n + 1]/2", _obs_t2_size),
    FormulaCatalogEntry(FormulaId.THM_M1_T2, "index-value", f"M1(T2({_G}))",
                        "2M2 + q^n(q^n-1) + q^(2n)(q^n-1) + (q(q+1)-1)^n"
                        " - (q^n-1)(q^n-(2q-1)^n)(3q^n-1) + 3(q^n-1)[(q(q+1)-1)^n - q^(2n)]"
                        " - (q(q^2+1)-1)^n", _thm_m1_t2, needs_m2=True),
    FormulaCatalogEntry(FormulaId.OBS_PL_ORDER, "order", f"|V(PL({_G}))|",
                        "q^n(q^n+1) - (2q-1)^n - 1", _obs_pl_order),
    FormulaCatalogEntry(FormulaId.OBS_PL_SIZE, "size", f"|E(PL({_G}))|",
                        "[(q^n-1)^4 + (q(q+1)-1)^n - q^(2n) - 2(q^n-1)(q^n-(2q-1)^n)]/2",
                        _obs_pl_size),
    FormulaCatalogEntry(FormulaId.THM_M1_PL, "index-value", f"M1(PL({_G}))", _F, _thm_m1_pl),
)

_BY_ID = {e.id: e for e in _ENTRIES}


def catalog() -> List[FormulaCatalogEntry]:
    return list(_ENTRIES)


def entry(fid) -> FormulaCatalogEntry:
    return _BY_ID[FormulaId(fid)]


def eval_formula(fid, q: int, n: int, m2_injection: Optional[int] = None) -> Number:
    """Value of the printed expression; may be negative or fractional.

    ``m2_injection`` supplies M2 of the base graph for the two statements that
    carry it as a symbol, and is rejected elsewhere to keep calls honest.
    """
    e = entry(fid)
    if q < 2 or n < 1:
        raise InvalidParams(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    if e.needs_m2 and m2_injection is None:
        raise MissingSymbolInput(f"{e.id.value} needs an M2 value for the base graph")
    if not e.needs_m2 and m2_injection is not None:
        raise ValueError(f"{e.id.value} takes no M2 input")
    return e.evaluator(q, n, m2_injection)


class Fact(Enum):
    FACT1 = "FACT1"
    FACT2 = "FACT2"
    FACT3 = "FACT3"
    FACT4 = "FACT4"


def fact_identity(which, n_v: int, m: int, m1_value: Optional[int] = None):
    """Predictions of the complement/coindex identities for any simple graph.

    FACT1: M1 of the complement. FACT2: first Zagreb coindex.
    FACT3: first Zagreb coindex of the complement (same value as FACT2).
    FACT4: whether M1 equals M1 of the complement, i.e. ``4m == n_v(n_v - 1)``.
    """
    which = Fact(which)
    if which is Fact.FACT4:
        return 4 * m == n_v * (n_v - 1)
    if m1_value is None:
        raise MissingSymbolInput(f"{which.value} needs the graph's M1")
    if which is Fact.FACT1:
        return m1_value + n_v * (n_v - 1) ** 2 - 4 * m * (n_v - 1)
    return 2 * m * (n_v - 1) - m1_value


def corollary_threshold(q: int, n: int, edge_count: Optional[int] = None) -> Tuple[Fraction, bool]:
    """Printed edge-count threshold and whether Gamma(V) actually meets it.

    ``edge_count`` defaults to the support-quotient count for (q, n).
    """
    if edge_count is None:
        from .space import SpaceParams, build_quotient
        edge_count = build_quotient(SpaceParams(q, n)).edge_count
    threshold = Fraction((q**n - 1) * (q**n - 2), 4)
    return threshold, threshold == edge_count
