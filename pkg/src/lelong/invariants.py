"""Lelong-type invariants of a divisor on a validated resolution graph.

With ``D = sum a_i E_i`` the divisorial part over the point:

* slope            s   = min_i a_i / m_i
* Lelong number    nu  = sum_i a_i e_i
* multiplicity     mult = sum_i m_i e_i

where ``e_i >= 0`` are the theta degrees.  On a surface ``e = -C m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InconsistentGraphError, MissingDataError, ParameterError
from .exactnum import format_rat, parse_rat
from .graph import ResolutionGraph, as_divisor


def theta_degrees(g: ResolutionGraph) -> tuple[Fraction, ...]:
    cached = g.memo.get("theta")
    if cached is not None:
        return cached
    if g.theta_degrees is not None:
        e = g.theta_degrees
    elif g.dimension == 2:
        e = tuple(-x for x in g.matrix.matvec(g.m))
    else:
        raise MissingDataError(f"{g.name}: dimension {g.dimension} graph needs explicit theta_degrees")
    if any(x < 0 for x in e):
        raise InconsistentGraphError(f"{g.name}: negative theta degree in {[format_rat(x) for x in e]}")
    if sum(mi * x for mi, x in zip(g.m, e)) <= 0:
        raise InconsistentGraphError(f"{g.name}: theta degrees give zero multiplicity")
    g.memo["theta"] = e
    return e


def multiplicity(g: ResolutionGraph) -> Fraction:
    return sum((mi * x for mi, x in zip(g.m, theta_degrees(g))), Fraction(0))


def slope(g: ResolutionGraph, a) -> Fraction:
    a = as_divisor(g, a)
    return min(ai / mi for ai, mi in zip(a, g.m))


def lelong(g: ResolutionGraph, a) -> Fraction:
    a = as_divisor(g, a)
    return sum((ai * x for ai, x in zip(a, theta_degrees(g))), Fraction(0))


def cone_slack(g: ResolutionGraph, a) -> tuple[Fraction, ...]:
    """Per-vertex slack ``-sum_j c_ij a_j``, i.e. the degree of -D on E_i."""
    a = as_divisor(g, a)
    return tuple(-x for x in g.matrix.matvec(a.coefficients))


def in_psef_cone(g: ResolutionGraph, a) -> tuple[bool, tuple[Fraction, ...]]:
    slack = cone_slack(g, a)
    return all(x >= 0 for x in slack), slack


@dataclass(frozen=True)
class InvariantReport:
    slope: Fraction
    lelong: Fraction
    multiplicity: Fraction
    ratio: Fraction | None
    in_cone: bool
    slack: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "slope": format_rat(self.slope),
            "lelong": format_rat(self.lelong),
            "multiplicity": format_rat(self.multiplicity),
            "ratio": None if self.ratio is None else format_rat(self.ratio),
            "in_cone": self.in_cone,
            "slack": [format_rat(x) for x in self.slack],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "InvariantReport":
        return cls(
            slope=parse_rat(obj["slope"]),
            lelong=parse_rat(obj["lelong"]),
            multiplicity=parse_rat(obj["multiplicity"]),
            ratio=None if obj["ratio"] is None else parse_rat(obj["ratio"]),
            in_cone=bool(obj["in_cone"]),
            slack=tuple(parse_rat(x) for x in obj["slack"]),
        )


def report(g: ResolutionGraph, a) -> InvariantReport:
    a = as_divisor(g, a)
    s = slope(g, a)
    nu = lelong(g, a)
    mult = multiplicity(g)
    ok, slack = in_psef_cone(g, a)
    ratio = nu / (mult * s) if s > 0 else None
    return InvariantReport(s, nu, mult, ratio, ok, slack)


def quotient_bound(group_order: int, n: int) -> int:
    """|G|^(n-1): bound on nu/s at a quotient singularity C^n/G."""
    if group_order < 1:
        raise ParameterError(f"group order must be >= 1, got {group_order}")
    if n < 2:
        raise ParameterError(f"dimension must be >= 2, got {n}")
    return group_order ** (n - 1)


@dataclass(frozen=True)
class OrdSequence:
    orders: tuple[int, ...]
    brackets: tuple[tuple[Fraction, Fraction], ...]  # (ord_k / k, (ord_k + 1) / k)


def ord_sequence(g: ResolutionGraph, a, k_max: int) -> OrdSequence:
    """ord(I^k) = max{l : k a_i >= l m_i for all i} for k = 1..k_max.

    Defined for integral divisorial data only.
    """
    if k_max < 1:
        raise ParameterError(f"k_max must be >= 1, got {k_max}")
    a = as_divisor(g, a)
    if any(x.denominator != 1 for x in a):
        raise DomainError("vanishing orders need integer divisor coefficients")
    ints = [int(x) for x in a]
    orders = []
    for k in range(1, k_max + 1):
        orders.append(min((k * ai) // mi for ai, mi in zip(ints, g.m)))
    brackets = tuple((Fraction(o, k), Fraction(o + 1, k)) for k, o in enumerate(orders, start=1))
    return OrdSequence(tuple(orders), brackets)

