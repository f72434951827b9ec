"""Locally finite posets, incidence coalgebras, incidence algebras, and the
finite-support subalgebra with enough idempotents.

Finite posets are input by cover relations; the reflexive-transitive
closure is computed and validated.  The two built-in infinite families are
the chain and the antichain on the natural numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coalgebra import CoalgElement
from .finite_dual import StructuredAlgebra, dual_coalgebra
from .linalg import SparseVector, rank
from .quiver import Quiver, Verdict, enumerate_paths
from .scalars import QQ


class Poset:
    """Finite partially ordered set with precomputed closure and intervals."""

    def __init__(self, elements, relation_pairs, name: str = ""):
        self.elements = tuple(elements)
        self.name = name
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate poset elements")
        index = set(self.elements)
        for x, y in relation_pairs:
            if x not in index or y not in index:
                raise ValueError(f"relation pair ({x},{y}) uses undeclared elements")
        leq = {(x, x) for x in self.elements}
        leq.update(relation_pairs)
        changed = True
        while changed:
            changed = False
            for x, y in list(leq):
                for y2, z in list(leq):
                    if y == y2 and (x, z) not in leq:
                        leq.add((x, z))
                        changed = True
        for x, y in leq:
            if x != y and (y, x) in leq:
                raise ValueError(f"antisymmetry fails: {x} and {y} are comparable both ways")
        self.leq = frozenset(leq)
        self._hasse: Optional[Quiver] = None
        self._paths_between: Optional[dict] = None

    @staticmethod
    def from_covers(elements, covers, name: str = "") -> "Poset":
        return Poset(elements, covers, name=name)

    def less_equal(self, x, y) -> bool:
        return (x, y) in self.leq

    def intervals(self) -> list:
        pairs = [(x, y) for x in self.elements for y in self.elements if (x, y) in self.leq]
        pairs.sort(key=lambda xy: (str(xy[0]) != str(xy[1]), str(xy[0]), str(xy[1])))
        return pairs

    def closed_interval(self, x, y) -> list:
        return [z for z in self.elements if (x, z) in self.leq and (z, y) in self.leq]

    def covers(self) -> list:
        out = []
        for x, y in self.leq:
            if x == y:
                continue
            if any(z != x and z != y and (x, z) in self.leq and (z, y) in self.leq for z in self.elements):
                continue
            out.append((x, y))
        out.sort(key=lambda xy: (str(xy[0]), str(xy[1])))
        return out

    def __repr__(self):
        return f"Poset({self.name or len(self.elements)})"


class IncidenceElement:
    """Sparse combination of intervals e_{x,y} of a fixed poset."""

    __slots__ = ("poset", "combo")

    def __init__(self, poset: Poset, combo: SparseVector):
        for label in combo.labels():
            if label not in poset.leq:
                raise ValueError(f"{label!r} is not an interval of the poset")
        self.poset = poset
        self.combo = combo

    @staticmethod
    def from_interval(poset: Poset, x, y, field=QQ) -> "IncidenceElement":
        return IncidenceElement(poset, SparseVector({(x, y): field.one}))

    def __add__(self, other):
        return IncidenceElement(self.poset, self.combo + other.combo)

    def __sub__(self, other):
        return IncidenceElement(self.poset, self.combo - other.combo)

    def scale(self, coeff):
        return IncidenceElement(self.poset, self.combo.scale(coeff))

    def __eq__(self, other):
        return (
            isinstance(other, IncidenceElement)
            and self.poset is other.poset
            and self.combo == other.combo
        )

    def __hash__(self):
        return hash((id(self.poset), self.combo))

    def __repr__(self):
        return f"IncidenceElement({self.combo})"


def incidence_comultiply(element: IncidenceElement) -> SparseVector:
    """Δ(e_{x,y}) = sum over x <= z <= y of e_{x,z} ⊗ e_{z,y}, linearly."""
    acc = SparseVector()
    poset = element.poset
    for (x, y), coeff in element.combo.items():
        for z in poset.closed_interval(x, y):
            acc = acc + SparseVector({((x, z), (z, y)): coeff})
    return acc


def incidence_counit(element: IncidenceElement):
    total = 0
    for (x, y), coeff in element.combo.items():
        if x == y:
            total = total + coeff
    return total


def hasse_quiver(poset: Poset) -> Quiver:
    """Quiver on the poset's elements with one arrow per cover relation."""
    if poset._hasse is None:
        covers = poset.covers()
        arrows = [(f"{x}<{y}", str(x), str(y)) for x, y in covers]
        poset._hasse = Quiver([str(e) for e in poset.elements], arrows, name=f"hasse({poset.name})")
    return poset._hasse


def _paths_between(poset: Poset) -> dict:
    if poset._paths_between is None:
        quiver = hasse_quiver(poset)
        enum = enumerate_paths(quiver, max(0, len(quiver.vertices) - 1))
        if not enum.exhaustive:
            raise AssertionError("Hasse quiver of a finite poset must be acyclic")
        table: dict = {}
        for p in enum.paths:
            table.setdefault((p.source, p.target), []).append(p)
        poset._paths_between = table
    return poset._paths_between


def phi_embed(element: IncidenceElement, field=QQ) -> CoalgElement:
    """The interval e_{x,y} goes to the sum of all Hasse-quiver paths from x
    to y; an injective coalgebra morphism, surjective exactly when paths
    between points are unique."""
    quiver = hasse_quiver(element.poset)
    table = _paths_between(element.poset)
    acc = SparseVector()
    for (x, y), coeff in element.combo.items():
        for p in table.get((str(x), str(y)), []):
            acc = acc + SparseVector({p: coeff})
    return CoalgElement(quiver, acc)


class FIAElement:
    """Finite-support interval function: a combination of the E_{x,y}."""

    __slots__ = ("poset", "combo")

    def __init__(self, poset: Poset, combo: SparseVector):
        for label in combo.labels():
            if label not in poset.leq:
                raise ValueError(f"{label!r} is not an interval of the poset")
        self.poset = poset
        self.combo = combo

    @staticmethod
    def unit_functional(poset: Poset, x, y, field=QQ) -> "FIAElement":
        return FIAElement(poset, SparseVector({(x, y): field.one}))

    @staticmethod
    def identity(poset: Poset, field=QQ) -> "FIAElement":
        return FIAElement(poset, SparseVector({(x, x): field.one for x in poset.elements}))

    def value(self, x, y):
        return self.combo.coeff((x, y))

    def __add__(self, other):
        return FIAElement(self.poset, self.combo + other.combo)

    def __sub__(self, other):
        return FIAElement(self.poset, self.combo - other.combo)

    def scale(self, coeff):
        return FIAElement(self.poset, self.combo.scale(coeff))

    def evaluate(self, element: IncidenceElement):
        total = 0
        for label, coeff in element.combo.items():
            total = total + self.combo.coeff(label) * coeff
        return total

    def __eq__(self, other):
        return (
            isinstance(other, FIAElement)
            and self.poset is other.poset
            and self.combo == other.combo
        )

    def __hash__(self):
        return hash((id(self.poset), self.combo))

    def __repr__(self):
        return f"FIAElement({self.combo})"


def incidence_convolve(f: FIAElement, g: FIAElement) -> FIAElement:
    """(fg)(x,y) = sum over x <= z <= y of f(x,z) g(z,y)."""
    if f.poset is not g.poset:
        raise ValueError("functions on different posets")
    poset = f.poset
    values = {}
    for (x, y) in poset.intervals():
        total = 0
        for z in poset.closed_interval(x, y):
            total = total + f.value(x, z) * g.value(z, y)
        if total:
            values[(x, y)] = total
    return FIAElement(poset, SparseVector(values))


def fia_structured_algebra(poset: Poset, field=QQ) -> StructuredAlgebra:
    """The finite-support incidence algebra as structure constants: the
    E_{x,y} multiply like matrix units along composable intervals, and the
    diagonal ones form the complete orthogonal idempotent system."""
    basis = poset.intervals()
    mult = {}
    for (x, y) in basis:
        for (u, v) in basis:
            if y == u:
                mult[((x, y), (u, v))] = (
                    SparseVector({(x, v): field.one}) if (x, v) in poset.leq else SparseVector()
                )
    mult = {k: v for k, v in mult.items() if not v.is_zero()}
    idempotents = [(x, x) for x in poset.elements]
    return StructuredAlgebra(basis, mult, idempotents, field, name=f"FIA({poset.name})")


@dataclass
class IncidenceRecoveryReport:
    isomorphism: bool
    dimension: int
    explanation: str

    def __bool__(self):
        return self.isomorphism


def incidence_dual_recovery_check(poset: Poset, field=QQ) -> IncidenceRecoveryReport:
    """The incidence coalgebra is the finite dual of the finite-support
    incidence algebra: the evaluation map interval -> dual basis vector is a
    bijective coalgebra morphism.  Verified exactly on every interval."""
    algebra = fia_structured_algebra(poset, field)
    dual = dual_coalgebra(algebra)
    for (x, y) in poset.intervals():
        theta = SparseVector({(x, y): field.one})
        lhs = dual.comultiply(theta)
        rhs = incidence_comultiply(IncidenceElement.from_interval(poset, x, y, field))
        if lhs != rhs:
            return IncidenceRecoveryReport(False, len(algebra.basis), f"comultiplication mismatch at {(x, y)}")
        eps_dual = dual.counit(theta)
        eps_inc = incidence_counit(IncidenceElement.from_interval(poset, x, y, field))
        if eps_dual - eps_inc:
            return IncidenceRecoveryReport(False, len(algebra.basis), f"counit mismatch at {(x, y)}")
    dim = len(poset.intervals())
    vectors = [SparseVector.unit(interval) for interval in poset.intervals()]
    if rank(vectors) != dim:
        raise AssertionError("dual basis vectors are not independent; bug")
    return IncidenceRecoveryReport(True, dim, "bijective coalgebra morphism onto the finite dual")


@dataclass
class SemiperfectCertificate:
    interval: tuple
    below: list  # elements u <= x
    identity_checked: bool


@dataclass
class SemiperfectReport:
    value: bool
    explanation: str
    certificates: list

    def __bool__(self):
        return self.value


def incidence_semiperfect_check(target, field=QQ) -> SemiperfectReport:
    """Finiteness of down-sets and up-sets, with rational-part certificates.

    For a finite poset the condition holds, and for every basis functional
    E_{x,y} the certificate expresses c*·E_{x,y} through the elements
    e_{u,x} with u <= x; the identity is verified against every dual basis
    element c* = E_{p,q}.  The chain family on the naturals fails the
    condition upward; the antichain family satisfies it.
    """
    if isinstance(target, PosetFamily):
        verdict = target.semiperfect_condition()
        return SemiperfectReport(bool(verdict), verdict.explanation, [])
    poset: Poset = target
    certificates = []
    for (x, y) in poset.intervals():
        e_xy = FIAElement.unit_functional(poset, x, y, field)
        below = [u for u in poset.elements if (u, x) in poset.leq]
        for (p, q) in poset.intervals():
            c_star = FIAElement.unit_functional(poset, p, q, field)
            left = incidence_convolve(c_star, e_xy)
            acc = SparseVector()
            for u in below:
                weight = c_star.value(u, x)
                if weight:
                    acc = acc + SparseVector({(u, y): field.one}).scale(weight)
            if left.combo != acc:
                raise AssertionError(f"certificate identity fails at {(x, y)} against {(p, q)}")
        certificates.append(SemiperfectCertificate((x, y), below, True))
    return SemiperfectReport(
        True,
        "finite poset: every down-set and up-set is finite; all certificates verified",
        certificates,
    )


POSET_FAMILY_KINDS = ("natchain", "natantichain")


@dataclass(frozen=True)
class PosetFamily:
    """The chain (ℕ, <=) or the antichain on ℕ, with truncation."""

    kind: str

    def __post_init__(self):
        if self.kind not in POSET_FAMILY_KINDS:
            raise ValueError(f"unknown poset family {self.kind!r}")

    def describe(self) -> str:
        return {
            "natchain": "the chain on the natural numbers",
            "natantichain": "the antichain on the natural numbers",
        }[self.kind]

    def truncate(self, level: int) -> Poset:
        elements = [f"n{i}" for i in range(level + 1)]
        if self.kind == "natchain":
            covers = [(f"n{i}", f"n{i+1}") for i in range(level)]
        else:
            covers = []
        return Poset(elements, covers, name=f"{self.kind}[{level}]")

    def semiperfect_condition(self) -> Verdict:
        if self.kind == "natchain":
            return Verdict(False, "infinitely many elements lie above every point of the chain")
        return Verdict(True, "each element of the antichain is comparable only to itself")

    def __str__(self):
        return f"family:{self.kind}"
