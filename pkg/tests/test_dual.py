import random
from fractions import Fraction


from quivercoalg.coalgebra import CoalgElement
from quivercoalg.corpus import named_quiver, random_element, random_quiver
from quivercoalg.dual import (
    Functional,
    RationalCertificate,
    convolve,
    gamma_membership,
    hit_action,
    is_rational_left,
    psi_embed,
    reflexivity_verdict,
)
from quivercoalg.linalg import SparseVector
from quivercoalg.quiver import QuiverFamily, enumerate_paths

from helpers import loop_power_decompositions


def dual(path):
    return Functional.dual_of_path(path)


def paths_of(quiver, max_len=None):
    if max_len is None:
        max_len = max(0, len(quiver.vertices) - 1)
    return enumerate_paths(quiver, max_len).paths


def test_vertex_dual_idempotent():
    q = named_quiver("single_arrow")
    v = q.vertex_path("a")
    result = convolve(dual(v), dual(v), paths_of(q))
    assert result.support == SparseVector({v: Fraction(1)})


def test_convolution_shifts_by_suffix():
    # (c* p*)(r p) = c*(r) for every path ending with p.
    q = named_quiver("line4")
    paths = paths_of(q)
    rng = random.Random(2)
    p = q.arrow_path("z")
    for _ in range(10):
        values = {r: Fraction(rng.randint(-3, 3)) for r in paths}
        c_star = Functional(q, support=SparseVector(values))
        product = convolve(c_star, dual(p), paths)
        for r in paths:
            extended = None
            if r.target == p.source:
                from quivercoalg.quiver import compose_paths

                extended = compose_paths(r, p)
            if extended is not None:
                assert product(extended) == c_star(r)


def test_gamma_convolution_counts_decompositions():
    loop = QuiverFamily("loop").truncate(0)
    window = paths_of(loop, 6)
    gamma = Functional.from_rule(loop, "gamma")
    square = convolve(gamma, gamma, window)
    for p in window:
        # Oracle: the number of ways to split the n-th power in two.
        assert square(p) == loop_power_decompositions(p.length)


def test_convolution_associativity_random():
    rng = random.Random(9)
    for _ in range(25):
        q = random_quiver(rng, 4, 5)
        window = paths_of(q, 4)
        funcs = []
        for _ in range(3):
            values = {p: Fraction(rng.randint(-2, 2)) for p in window if rng.random() < 0.5}
            funcs.append(Functional(q, support=SparseVector(values)))
        f, g, h = funcs
        left = convolve(convolve(f, g, window), h, window)
        right = convolve(f, convolve(g, h, window), window)
        assert left.support == right.support


def test_psi_is_multiplicative_and_injective():
    q = named_quiver("line3")
    x, y = q.arrow_path("x"), q.arrow_path("y")
    window = paths_of(q)
    from quivercoalg.algebra import multiply

    psi_x = psi_embed(CoalgElement.from_path(x))
    psi_y = psi_embed(CoalgElement.from_path(y))
    product = convolve(psi_x, psi_y, window)
    assert product.support == psi_embed(multiply(CoalgElement.from_path(x), CoalgElement.from_path(y))).support
    rng = random.Random(14)
    for _ in range(30):
        quiver = random_quiver(rng, 4, 5)
        w = paths_of(quiver, 4)
        a = random_element(rng, quiver, 2)
        b = random_element(rng, quiver, 2)
        lhs = convolve(psi_embed(a), psi_embed(b), w)
        rhs = psi_embed(multiply(a, b))
        assert lhs.support == SparseVector({p: rhs(p) for p in w})
        if not a.is_zero():
            assert not psi_embed(a).support.is_zero()


def test_psi_noncomposable_is_zero():
    q = named_quiver("branching")
    z, w = q.arrow_path("z"), q.arrow_path("w")
    product = convolve(psi_embed(CoalgElement.from_path(z)), psi_embed(CoalgElement.from_path(w)), paths_of(q))
    assert product.support.is_zero()


def test_hit_actions():
    q = named_quiver("line3")
    window = paths_of(q)
    x = q.arrow_path("x")
    b_star = dual(q.vertex_path("b"))
    hit = hit_action(b_star, dual(x), "left", window)
    assert hit.support == SparseVector({x: Fraction(1)})  # t(x) = b
    a_star = dual(q.vertex_path("a"))
    miss = hit_action(a_star, dual(x), "left", window)
    assert miss.support.is_zero()  # t(x) != a
    zero = Functional.zero(q)
    assert hit_action(zero, dual(x), "left", window).support.is_zero()
    right = hit_action(a_star, dual(x), "right", window)
    assert right.support == SparseVector({x: Fraction(1)})  # s(x) = a


def test_rational_zero_and_dual_basis():
    q = named_quiver("diamond")
    zero_verdict = is_rational_left(Functional.zero(q), q)
    assert zero_verdict.status == "rational"
    assert zero_verdict.certificate.elements == []
    for p in paths_of(q):
        verdict = is_rational_left(dual(p), q)
        assert verdict.status == "rational"
        assert len(verdict.certificate.elements) >= 1


def test_rational_certificate_reverification():
    # Tamper with a certificate and confirm verification notices.
    q = named_quiver("line3")
    window = paths_of(q)
    p = q.arrow_path("x")
    verdict = is_rational_left(dual(p), q)
    cert = verdict.certificate
    duals = [dual(r) for r in window]
    assert cert.verify(dual(p), duals, window)
    broken = RationalCertificate(cert.elements[:-1], cert.functionals[:-1])
    if cert.elements:
        assert not broken.verify(dual(p), duals, window)


def test_rational_rule_on_bounded_line():
    fam = QuiverFamily("line1")
    f = Functional.from_rule(fam, "starts_at", "v2")
    verdict = is_rational_left(f, fam, 8)
    assert verdict.status == "rational_with_infinite_support"
    # Certificate members: one per path ending at the chosen vertex.
    assert len(verdict.certificate.elements) == 3
    rules = {c.rule.kind for c in verdict.certificate.functionals}
    assert rules == {"has_prefix"}


def test_rational_on_loop_only_zero():
    fam = QuiverFamily("loop")
    assert is_rational_left(Functional.zero(fam), fam).is_rational
    gamma = Functional.from_rule(fam, "gamma")
    assert is_rational_left(gamma, fam).status == "not_rational"


def test_rational_finite_support_on_line_family():
    fam = QuiverFamily("line2")
    quiver = fam.truncate(5)
    f = dual(quiver.arrow_path("a0"))
    verdict = is_rational_left(f, fam, 5)
    assert verdict.status == "rational"


def test_gamma_membership():
    line = named_quiver("line3")
    verdict = gamma_membership(line)
    assert verdict.in_image and len(verdict.support) == 6
    assert not gamma_membership(named_quiver("loop")).in_image
    assert not gamma_membership(QuiverFamily("line1")).in_image


def test_reflexivity_verdicts():
    assert reflexivity_verdict(named_quiver("diamond")).reflexive
    loop = reflexivity_verdict(QuiverFamily("loop"))
    assert loop.status == "proper_not_reflexive" and loop.proper
    line2 = reflexivity_verdict(QuiverFamily("line2"))
    assert not line2.reflexive and line2.proper
    assert not reflexivity_verdict(named_quiver("cycle2")).reflexive
