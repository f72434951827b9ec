"""The path coalgebra of a quiver.

The same sparse path combinations also serve as elements of the quiver
algebra (see ``algebra``); only the operations differ.  Comultiplication
splits a path into all prefix/suffix pairs, the counit picks out the
length-zero part.
"""

from __future__ import annotations

from .linalg import (
    SparseVector,
    kernel_of_map,
    reduce_mod_span,
    rref,
)
from .quiver import Path, Quiver, enumerate_paths, is_acyclic
from .scalars import QQ


class CoalgElement:
    """Sparse exact-scalar combination of paths of a fixed quiver."""

    __slots__ = ("quiver", "combo")

    def __init__(self, quiver: Quiver, combo: SparseVector):
        for label in combo.labels():
            if not isinstance(label, Path) or label.quiver is not quiver:
                raise ValueError(f"label {label!r} does not belong to the quiver")
        self.quiver = quiver
        self.combo = combo

    @staticmethod
    def from_path(path: Path, field=QQ) -> "CoalgElement":
        return CoalgElement(path.quiver, SparseVector({path: field.one}))

    @staticmethod
    def zero(quiver: Quiver) -> "CoalgElement":
        return CoalgElement(quiver, SparseVector())

    @staticmethod
    def from_items(quiver: Quiver, items) -> "CoalgElement":
        return CoalgElement(quiver, SparseVector(dict(items)))

    def is_zero(self) -> bool:
        return self.combo.is_zero()

    def coeff(self, path: Path):
        return self.combo.coeff(path)

    def support(self):
        return sorted(self.combo.labels(), key=lambda p: p.sort_key)

    def __add__(self, other: "CoalgElement") -> "CoalgElement":
        self._check(other)
        return CoalgElement(self.quiver, self.combo + other.combo)

    def __sub__(self, other: "CoalgElement") -> "CoalgElement":
        self._check(other)
        return CoalgElement(self.quiver, self.combo - other.combo)

    def scale(self, coeff) -> "CoalgElement":
        return CoalgElement(self.quiver, self.combo.scale(coeff))

    def _check(self, other: "CoalgElement"):
        if self.quiver is not other.quiver:
            raise ValueError("elements belong to different quivers")

    def __eq__(self, other):
        return (
            isinstance(other, CoalgElement)
            and self.quiver is other.quiver
            and self.combo == other.combo
        )

    def __hash__(self):
        return hash((id(self.quiver), self.combo))

    def __str__(self):
        if self.combo.is_zero():
            return "0"
        parts = []
        for path, coeff in self.combo.sorted_items():
            if coeff == 1 or (hasattr(coeff, "value") and coeff.value == 1):
                parts.append(f"[{path}]")
            else:
                parts.append(f"{coeff}*[{path}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"CoalgElement({self})"


class TensorElement:
    """Sparse combination of ordered path pairs (an element of KΓ ⊗ KΓ')."""

    __slots__ = ("combo",)

    def __init__(self, combo: SparseVector):
        self.combo = combo

    def is_zero(self) -> bool:
        return self.combo.is_zero()

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.combo + other.combo)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.combo - other.combo)

    def scale(self, coeff) -> "TensorElement":
        return TensorElement(self.combo.scale(coeff))

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.combo == other.combo

    def __hash__(self):
        return hash(self.combo)

    def __str__(self):
        if self.combo.is_zero():
            return "0"
        return " + ".join(
            f"{coeff}*[{pair[0]}]⊗[{pair[1]}]" for pair, coeff in self.combo.sorted_items()
        )

    def __repr__(self):
        return f"TensorElement({self})"


def comultiply(element: CoalgElement) -> TensorElement:
    """Δ(p) = sum of q ⊗ r over all decompositions p = qr, extended linearly."""
    acc = SparseVector()
    for path, coeff in element.combo.items():
        for left, right in path.splits():
            acc = acc + SparseVector({(left, right): coeff})
    return TensorElement(acc)


def counit(element: CoalgElement):
    """Sum of the coefficients of the length-zero paths (falsy when zero)."""
    total = 0
    for path, coeff in element.combo.items():
        if path.length == 0:
            total = total + coeff
    return total


def tensor_flatten_left(tensor: TensorElement) -> SparseVector:
    """Apply counit ⊗ id: collapse each pair (q, r) to r when q is a vertex."""
    acc = SparseVector()
    for (left, right), coeff in tensor.combo.items():
        if left.length == 0:
            acc = acc + SparseVector({right: coeff})
    return acc


def tensor_flatten_right(tensor: TensorElement) -> SparseVector:
    """Apply id ⊗ counit."""
    acc = SparseVector()
    for (left, right), coeff in tensor.combo.items():
        if right.length == 0:
            acc = acc + SparseVector({left: coeff})
    return acc


def comultiply_tensor_left(tensor: TensorElement) -> SparseVector:
    """(Δ ⊗ id) on a tensor, as a sparse vector over path triples."""
    acc = SparseVector()
    for (left, right), coeff in tensor.combo.items():
        for a, b in left.splits():
            acc = acc + SparseVector({(a, b, right): coeff})
    return acc


def comultiply_tensor_right(tensor: TensorElement) -> SparseVector:
    """(id ⊗ Δ) on a tensor, as a sparse vector over path triples."""
    acc = SparseVector()
    for (left, right), coeff in tensor.combo.items():
        for b, c in right.splits():
            acc = acc + SparseVector({(left, b, c): coeff})
    return acc


def left_tensor_components(tensor: TensorElement) -> list[SparseVector]:
    """For each right path label, the sparse vector of matching left parts."""
    grouped: dict = {}
    for (left, right), coeff in tensor.combo.items():
        grouped.setdefault(right, []).append((left, coeff))
    return [SparseVector(dict(items)) for items in grouped.values()]


def right_tensor_components(tensor: TensorElement) -> list[SparseVector]:
    grouped: dict = {}
    for (left, right), coeff in tensor.combo.items():
        grouped.setdefault(left, []).append((right, coeff))
    return [SparseVector(dict(items)) for items in grouped.values()]


def subcoalgebra_closure(elements) -> list[CoalgElement]:
    """Basis of the smallest subcoalgebra containing the given elements.

    Iterates comultiplication, adjoining the left and right tensor
    components (grouped over the path basis on the opposite side), until the
    span stabilizes.  The result is the canonical reduced basis; closing it
    again changes nothing.
    """
    elements = list(elements)
    if not elements:
        return []
    quiver = elements[0].quiver
    basis = rref([e.combo for e in elements])
    while True:
        vectors = list(basis)
        for vec in basis:
            tensor = comultiply(CoalgElement(quiver, vec))
            vectors.extend(left_tensor_components(tensor))
            vectors.extend(right_tensor_components(tensor))
        refined = rref(vectors)
        if len(refined) == len(basis):
            return [CoalgElement(quiver, v) for v in refined]
        basis = refined


class WedgeResult:
    def __init__(self, basis, exact: bool):
        self.basis = basis
        self.exact = exact

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def wedge(x_basis, y_basis, quiver: Quiver, max_len: int) -> WedgeResult:
    """The wedge X ∧ Y = Δ^{-1}(X ⊗ C + C ⊗ Y) within a path-length window.

    Exact when the quiver is acyclic and the window is exhaustive; otherwise
    the result is the truncated wedge and is flagged as such.
    """
    enum = enumerate_paths(quiver, max_len)
    rx = rref([e.combo for e in x_basis])
    ry = rref([e.combo for e in y_basis])
    residue_x = {p: reduce_mod_span(SparseVector.unit(p), rx) for p in enum.paths}
    residue_y = {p: reduce_mod_span(SparseVector.unit(p), ry) for p in enum.paths}

    def image_of(path: Path) -> SparseVector:
        acc = SparseVector()
        for left, right in path.splits():
            lres = residue_x[left]
            rres = residue_y[right]
            if lres.is_zero() or rres.is_zero():
                continue
            outer = {}
            for ll, lc in lres.items():
                for rl, rc in rres.items():
                    pair = (ll, rl)
                    prior = outer.get(pair)
                    total = lc * rc if prior is None else prior + lc * rc
                    outer[pair] = total
            acc = acc + SparseVector(outer)
        return acc

    kernel = kernel_of_map(enum.paths, image_of)
    basis = [CoalgElement(quiver, v) for v in kernel]
    return WedgeResult(basis, exact=enum.exhaustive)


def hull_span(vertex: str, side: str, quiver: Quiver, max_len=None) -> list[Path]:
    """Path basis of the injective hull span at a vertex.

    ``right`` collects the paths starting at the vertex, ``left`` the paths
    ending there.  Exhaustive for acyclic quivers; otherwise a window must
    be supplied.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if max_len is None:
        if not is_acyclic(quiver):
            raise ValueError("cyclic quiver: supply max_len for a truncated hull")
        max_len = max(0, len(quiver.vertices) - 1)
    enum = enumerate_paths(quiver, max_len)
    if side == "right":
        return [p for p in enum.paths if p.source == vertex]
    return [p for p in enum.paths if p.target == vertex]


def grouplike_coradical(quiver: Quiver) -> list[Path]:
    """The coradical basis: every vertex as a length-zero path."""
    return [quiver.vertex_path(v) for v in quiver.vertices]
