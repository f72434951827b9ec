import random
from fractions import Fraction

from quivercoalg.coalgebra import (
    CoalgElement,
    comultiply,
    comultiply_tensor_left,
    comultiply_tensor_right,
    counit,
    grouplike_coradical,
    hull_span,
    subcoalgebra_closure,
    tensor_flatten_left,
    tensor_flatten_right,
    wedge,
)
from quivercoalg.corpus import named_quiver, random_element, random_quiver
from quivercoalg.linalg import SparseVector, rref, span_intersection, spans_equal
from quivercoalg.quiver import enumerate_paths


def unit(path):
    return CoalgElement.from_path(path)


def test_comultiply_vertex_is_grouplike():
    q = named_quiver("single_arrow")
    v = q.vertex_path("a")
    tensor = comultiply(unit(v))
    assert tensor.combo == SparseVector({(v, v): Fraction(1)})


def test_comultiply_arrow():
    q = named_quiver("single_arrow")
    x = q.arrow_path("x")
    u, v = q.vertex_path("a"), q.vertex_path("b")
    tensor = comultiply(unit(x))
    assert tensor.combo == SparseVector({(u, x): Fraction(1), (x, v): Fraction(1)})


def test_comultiply_length_two():
    q = named_quiver("line3")
    x, y = q.arrow_path("x"), q.arrow_path("y")
    xy = q.path_from_labels(["x", "y"])
    a, c = q.vertex_path("a"), q.vertex_path("c")
    tensor = comultiply(unit(xy))
    assert tensor.combo == SparseVector(
        {(a, xy): Fraction(1), (x, y): Fraction(1), (xy, c): Fraction(1)}
    )
    # A path of length n yields exactly n + 1 tensor terms.
    assert len(tensor.combo.entries) == 3


def test_counit_values():
    q = named_quiver("line3")
    assert counit(unit(q.vertex_path("a"))) == 1
    assert counit(unit(q.arrow_path("x"))) == 0
    mixed = unit(q.vertex_path("a")).scale(Fraction(2)) - unit(q.path_from_labels(["x", "y"])).scale(Fraction(3))
    assert counit(mixed) == 2


def test_coassociativity_and_counit_laws_random():
    rng = random.Random(12)
    for _ in range(60):
        q = random_quiver(rng, 5, 8)
        c = random_element(rng, q, 8)
        tensor = comultiply(c)
        assert comultiply_tensor_left(tensor) == comultiply_tensor_right(tensor)
        assert tensor_flatten_left(tensor) == c.combo
        assert tensor_flatten_right(tensor) == c.combo


def test_closure_of_grouplike():
    q = named_quiver("single_arrow")
    v = unit(q.vertex_path("a"))
    closure = subcoalgebra_closure([v])
    assert [e.combo for e in closure] == [v.combo]


def test_closure_of_length_two_path():
    q = named_quiver("line3")
    xy = unit(q.path_from_labels(["x", "y"]))
    closure = subcoalgebra_closure([xy])
    expected = [
        SparseVector({p: Fraction(1)})
        for p in enumerate_paths(q, 2).paths
    ]
    assert spans_equal([e.combo for e in closure], expected)
    assert len(closure) == 6


def test_closure_of_parallel_sum_stays_small():
    q = named_quiver("parallel_pair")
    x, y = q.arrow_path("x"), q.arrow_path("y")
    s = unit(x) + unit(y)
    closure = subcoalgebra_closure([s])
    expected = [
        SparseVector({q.vertex_path("u"): Fraction(1)}),
        SparseVector({q.vertex_path("v"): Fraction(1)}),
        SparseVector({x: Fraction(1), y: Fraction(1)}),
    ]
    assert spans_equal([e.combo for e in closure], expected)
    assert len(closure) == 3


def test_closure_is_idempotent_and_delta_stable():
    rng = random.Random(8)
    for _ in range(15):
        q = random_quiver(rng, 4, 5)
        c = random_element(rng, q, 3)
        closure = subcoalgebra_closure([c])
        again = subcoalgebra_closure(closure)
        assert [e.combo for e in closure] == [e.combo for e in again]
        # Delta-stability: both tensor legs of every basis element stay inside.
        basis = [e.combo for e in closure]
        reduced = rref(basis)
        from quivercoalg.coalgebra import left_tensor_components, right_tensor_components
        from quivercoalg.linalg import in_span

        for e in closure:
            tensor = comultiply(e)
            for component in left_tensor_components(tensor) + right_tensor_components(tensor):
                assert in_span(component, reduced)


def test_wedge_examples():
    q = named_quiver("single_arrow")
    a, b, x = q.vertex_path("a"), q.vertex_path("b"), q.arrow_path("x")
    ka = [unit(a)]
    kb = [unit(b)]
    result = wedge(ka, kb, q, 1)
    assert spans_equal(
        [e.combo for e in result.basis],
        [SparseVector({a: Fraction(1)}), SparseVector({b: Fraction(1)}), SparseVector({x: Fraction(1)})],
    )
    assert result.exact
    # Ka wedge Ka: no loops at a in an acyclic quiver, so just Ka.
    only_a = wedge(ka, ka, q, 1)
    assert [e.combo for e in only_a.basis] == [SparseVector({a: Fraction(1)})]
    nothing = wedge([], [], q, 1)
    assert len(nothing.basis) == 0


def test_wedge_on_loop_is_truncated():
    q = named_quiver("loop")
    v = unit(q.vertex_path("v"))
    result = wedge([v], [v], q, 3)
    assert not result.exact
    # Within the window: v and the loop arrow satisfy the wedge condition.
    lengths = sorted(max(p.length for p in e.combo.labels()) for e in result.basis)
    assert lengths == [0, 1]


def test_hull_span_examples():
    q = named_quiver("line3")
    assert [str(p) for p in hull_span("a", "right", q)] == ["a", "x", "x.y"]
    assert [str(p) for p in hull_span("c", "left", q)] == ["c", "y", "x.y"]
    isolated = named_quiver("two_points")
    assert [str(p) for p in hull_span("a", "right", isolated)] == ["a"]


def test_hull_span_intersection_is_path_span():
    # E_r(Ku) ∩ E_l(Kv) = span of the paths u -> v.
    for name in ("line3", "diamond", "branching"):
        q = named_quiver(name)
        enum = enumerate_paths(q, len(q.vertices))
        for u in q.vertices:
            for v in q.vertices:
                right = [SparseVector({p: Fraction(1)}) for p in hull_span(u, "right", q)]
                left = [SparseVector({p: Fraction(1)}) for p in hull_span(v, "left", q)]
                expected = [
                    SparseVector({p: Fraction(1)})
                    for p in enum.paths
                    if p.source == u and p.target == v
                ]
                assert spans_equal(span_intersection(right, left), expected)


def test_grouplike_coradical():
    q = named_quiver("loop")
    assert [str(p) for p in grouplike_coradical(q)] == ["v"]
    no_arrows = named_quiver("two_points")
    assert len(grouplike_coradical(no_arrows)) == len(enumerate_paths(no_arrows, 5).paths)
