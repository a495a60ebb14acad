"""Structural recognition of graphs with lambda_2 < -0.5858, and a certified
spectral cross-check of every structural verdict."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .families import poly_r
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    distance_matrix,
    induced_subgraph,
    is_complete,
    is_connected,
    is_union_of_cliques,
    universal_vertices,
)
from .rational import format_decimal, format_scientific
from .spectra import THRESHOLD, CertifiedSpectrum, Interval, Lambda2Position, threshold_position


@dataclass(frozen=True)
class StructuralForm:
    """``Complete(n)``, ``ApexCliques(sizes)`` or ``Other``."""

    variant: str
    order: int
    sizes: tuple[int, ...] = ()

    @classmethod
    def complete(cls, n: int) -> StructuralForm:
        return cls("Complete", n)

    @classmethod
    def apex_cliques(cls, sizes: Sequence[int]) -> StructuralForm:
        s = tuple(sorted(sizes))
        if not 2 <= len(s) <= 4:
            raise ValueError("ApexCliques needs 2 to 4 clique sizes")
        return cls("ApexCliques", 1 + sum(s), s)

    @classmethod
    def other(cls, n: int) -> StructuralForm:
        return cls("Other", n)

    def __str__(self) -> str:
        if self.variant == "Complete":
            return f"Complete({self.order})"
        if self.variant == "ApexCliques":
            return f"ApexCliques({list(self.sizes)})"
        return "Other"


def _check_scope(g: Graph) -> None:
    if g.order < 2:
        raise GraphError("the characterization needs a connected graph on at least two vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("the characterization needs a connected graph")


def recognize_structure(g: Graph) -> StructuralForm:
    _check_scope(g)
    if is_complete(g):
        return StructuralForm.complete(g.order)
    # try each universal vertex as apex; at most one can leave a disconnected rest
    for apex in universal_vertices(g):
        rest = induced_subgraph(g, [v for v in range(g.order) if v != apex])
        sizes = is_union_of_cliques(rest)
        if sizes is not None and 2 <= len(sizes) <= 4:
            return StructuralForm.apex_cliques(sizes)
    return StructuralForm.other(g.order)


def theorem_condition(sizes: Sequence[int]) -> tuple[bool, str | None]:
    """Whether K1 v (K_n1 u ... u K_nr) lies below the threshold, and which item decides it.

    Two or three cliques always qualify.  For four cliques the labels are the
    items (i) to (v); item (ii) is settled by the exact sign of r at -2929/5000.
    """
    s = tuple(sorted(sizes))
    if not 2 <= len(s) <= 4 or s[0] < 1:
        raise ValueError(f"malformed clique sizes {list(sizes)}")
    if len(s) == 2:
        return True, "r=2"
    if len(s) == 3:
        return True, "r=3"
    n1, n2, n3, n4 = s
    if n1 == 1 and n2 == 1:
        if n3 <= 873:
            return True, "(i)"
        if poly_r(n3, n4).poly(THRESHOLD) < 0:
            return True, "(ii)"
        return False, None
    if n1 == 1 and n2 == 2:
        ok = (
            n3 == 2
            or (n3 == 3 and n4 <= 870)
            or (n3 == 4 and n4 <= 14)
            or (n3 == 5 and n4 <= 8)
            or (n3 == 6 and n4 == 6)
        )
        return (True, "(iii)") if ok else (False, None)
    if n1 == 1 and n2 == 3:
        ok = (n3 == 3 and n4 <= 7) or (n3 == 4 and n4 == 4)
        return (True, "(iv)") if ok else (False, None)
    if n1 == 2 and n2 == 2 and n3 == 2:
        return (True, "(v)") if n4 <= 5 else (False, None)
    return False, None


def structural_decision(form: StructuralForm) -> tuple[bool, str | None]:
    if form.variant == "Complete":
        return True, "complete"
    if form.variant == "ApexCliques":
        return theorem_condition(form.sizes)
    return False, None


def classify_structural(g: Graph) -> bool:
    return structural_decision(recognize_structure(g))[0]


@dataclass(frozen=True)
class Verdict:
    structural: bool
    spectral: Lambda2Position
    condition: str | None
    form: StructuralForm
    lambda2_enclosure: Interval | None = None
    witness: str | None = field(default=None)

    @property
    def agree(self) -> bool:
        return self.structural == (self.spectral is Lambda2Position.BELOW)

    def to_json(self, digits: int = 10) -> dict:
        enc = None
        if self.lambda2_enclosure is not None:
            lo, hi = self.lambda2_enclosure
            enc = {
                "value": format_decimal((lo + hi) / 2, digits),
                "lo": format_decimal(lo, digits + 2),
                "hi": format_decimal(hi, digits + 2),
                "width": format_scientific(hi - lo),
            }
        return {
            "structural": self.structural,
            "spectral": self.spectral.value,
            "agree": self.agree,
            "condition": self.condition,
            "form": str(self.form),
            "lambda2_enclosure": enc,
            "witness": self.witness,
        }


def classify(g: Graph, width: Fraction | None = Fraction(1, 10**9)) -> Verdict:
    """Run the structural test and the certified Sturm comparison side by side."""
    _check_scope(g)
    form = recognize_structure(g)
    structural, condition = structural_decision(form)
    spectrum = CertifiedSpectrum.of_matrix(distance_matrix(g))
    counter = spectrum.counter
    spectral = threshold_position(counter)
    enclosure = spectrum.enclose(2, width) if width is not None else None
    above = counter.count_greater(THRESHOLD)
    if structural:
        witness = f"structure {form} satisfies {condition}; {above} eigenvalue(s) above threshold"
    else:
        witness = f"structure {form} outside the family; {above} eigenvalue(s) above threshold"
    return Verdict(structural, spectral, condition, form, enclosure, witness)
