import random
from fractions import Fraction

import pytest

from quivercoalg.corpus import enumerate_posets_up_to_iso, named_poset, poset_corpus, random_poset
from quivercoalg.incidence import (
    FIAElement,
    IncidenceElement,
    Poset,
    PosetFamily,
    fia_structured_algebra,
    hasse_quiver,
    incidence_comultiply,
    incidence_convolve,
    incidence_counit,
    incidence_dual_recovery_check,
    incidence_semiperfect_check,
    phi_embed,
)
from quivercoalg.coalgebra import comultiply, counit
from quivercoalg.linalg import SparseVector, rank
from quivercoalg.quiver import check_unique_path_condition, enumerate_paths


def test_poset_construction_validates():
    with pytest.raises(ValueError):
        Poset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        Poset(["a"], [("a", "z")])
    chain = named_poset("chain3")
    assert chain.less_equal("c0", "c2")
    assert not chain.less_equal("c2", "c0")


def test_interval_and_cover_structure():
    diamond = named_poset("diamond")
    assert len(diamond.intervals()) == 9  # 4 points + 4 covers + the long interval
    assert len(diamond.covers()) == 4
    assert sorted(diamond.closed_interval("0", "1")) == ["0", "1", "x", "y"]


def test_comultiply_grouplike_interval():
    p = named_poset("chain2")
    e = IncidenceElement.from_interval(p, "c0", "c0")
    tensor = incidence_comultiply(e)
    assert tensor == SparseVector({(("c0", "c0"), ("c0", "c0")): Fraction(1)})
    assert incidence_counit(e) == 1


def test_comultiply_cover_and_chain():
    p = named_poset("chain3")
    cover = IncidenceElement.from_interval(p, "c0", "c1")
    tensor = incidence_comultiply(cover)
    assert tensor == SparseVector(
        {
            (("c0", "c0"), ("c0", "c1")): Fraction(1),
            (("c0", "c1"), ("c1", "c1")): Fraction(1),
        }
    )
    assert incidence_counit(cover) == 0
    long = IncidenceElement.from_interval(p, "c0", "c2")
    terms = incidence_comultiply(long)
    assert len(terms.entries) == 3
    assert terms.coeff((("c0", "c1"), ("c1", "c2"))) == Fraction(1)


def test_hasse_quiver_examples():
    antichain = named_poset("antichain3")
    assert len(hasse_quiver(antichain).arrows) == 0
    chain = named_poset("chain3")
    assert len(hasse_quiver(chain).arrows) == 2
    diamond = named_poset("diamond")
    assert len(hasse_quiver(diamond).arrows) == 4


def test_phi_examples():
    diamond = named_poset("diamond")
    point = phi_embed(IncidenceElement.from_interval(diamond, "0", "0"))
    assert str(point) == "[0]"
    long = phi_embed(IncidenceElement.from_interval(diamond, "0", "1"))
    assert len(long.combo.entries) == 2  # both branch paths
    chain = named_poset("chain2")
    cover = phi_embed(IncidenceElement.from_interval(chain, "c0", "c1"))
    assert len(cover.combo.entries) == 1


def test_phi_is_coalgebra_morphism_and_injective_small():
    for poset in enumerate_posets_up_to_iso(4):
        images = []
        for (x, y) in poset.intervals():
            e = IncidenceElement.from_interval(poset, x, y)
            img = phi_embed(e)
            images.append(img.combo)
            lhs = comultiply(img).combo
            rhs = SparseVector()
            for (iv1, iv2), coeff in incidence_comultiply(e).items():
                a = phi_embed(IncidenceElement(poset, SparseVector({iv1: coeff})))
                b = phi_embed(IncidenceElement(poset, SparseVector({iv2: Fraction(1)})))
                for p1, c1 in a.combo.items():
                    for p2, c2 in b.combo.items():
                        rhs = rhs + SparseVector({(p1, p2): c1 * c2})
            assert lhs == rhs
            assert counit(img) - incidence_counit(e) == 0
        assert rank(images) == len(poset.intervals())
        quiver = hasse_quiver(poset)
        surjective = rank(images) == len(enumerate_paths(quiver, len(quiver.vertices)).paths)
        assert surjective == check_unique_path_condition(quiver)


def test_convolution_identity_and_units():
    p = named_poset("diamond")
    delta = FIAElement.identity(p)
    rng = random.Random(1)
    values = {iv: Fraction(rng.randint(-3, 3)) for iv in p.intervals()}
    f = FIAElement(p, SparseVector(values))
    assert incidence_convolve(delta, f) == f
    assert incidence_convolve(f, delta) == f
    exx = FIAElement.unit_functional(p, "0", "0")
    exy = FIAElement.unit_functional(p, "0", "1")
    assert incidence_convolve(exx, exy) == exy
    other = FIAElement.unit_functional(p, "x", "1")
    assert incidence_convolve(exy, other).combo.is_zero()  # endpoints do not chain


def test_convolution_is_transpose_of_comultiplication():
    rng = random.Random(23)
    for _ in range(20):
        poset = random_poset(rng, 6)
        intervals = poset.intervals()
        f = FIAElement(poset, SparseVector({iv: Fraction(rng.randint(-2, 2)) for iv in intervals if rng.random() < 0.6}))
        g = FIAElement(poset, SparseVector({iv: Fraction(rng.randint(-2, 2)) for iv in intervals if rng.random() < 0.6}))
        product = incidence_convolve(f, g)
        for iv in intervals:
            element = IncidenceElement.from_interval(poset, *iv)
            total = 0
            for (iv1, iv2), coeff in incidence_comultiply(element).items():
                total = total + f.combo.coeff(iv1) * g.combo.coeff(iv2) * coeff
            assert not (total - product.combo.coeff(iv))


def test_recovery_examples():
    singleton = named_poset("chain1")
    report = incidence_dual_recovery_check(singleton)
    assert report.isomorphism and report.dimension == 1
    chain3 = incidence_dual_recovery_check(named_poset("chain3"))
    assert chain3.isomorphism and chain3.dimension == 6
    diamond = incidence_dual_recovery_check(named_poset("diamond"))
    assert diamond.isomorphism and diamond.dimension == 9


def test_recovery_on_corpus():
    for poset in poset_corpus():
        assert incidence_dual_recovery_check(poset).isomorphism


def test_fia_structured_algebra_has_matrix_unit_rule():
    p = named_poset("chain3")
    algebra = fia_structured_algebra(p)
    one = algebra.field.one
    assert algebra.basis_product(("c0", "c1"), ("c1", "c2")) == SparseVector({("c0", "c2"): one})
    assert algebra.basis_product(("c0", "c1"), ("c0", "c1")).is_zero()


def test_semiperfect_examples():
    chain = incidence_semiperfect_check(named_poset("chain4"))
    assert chain.value and chain.certificates
    nat = incidence_semiperfect_check(PosetFamily("natchain"))
    assert not nat.value and "above" in nat.explanation
    anti = incidence_semiperfect_check(PosetFamily("natantichain"))
    assert anti.value


def test_poset_family_truncations():
    chain = PosetFamily("natchain").truncate(4)
    assert len(chain.elements) == 5 and len(chain.covers()) == 4
    anti = PosetFamily("natantichain").truncate(4)
    assert len(anti.covers()) == 0
