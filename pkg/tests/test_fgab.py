"""Core algebra tests: SNF oracle, canonical forms, homomorphism decomposition.

The SNF checks never trust the implementation: they multiply the
transforms back out, check unimodularity through exact determinants,
and check the divisibility chain entry by entry.
"""
import random
from math import gcd, prod

import pytest

from ghg.fgab import (
    CapacityError,
    FgAbGroup,
    GroupElement,
    Homomorphism,
    IntMatrix,
    Presentation,
    canonicalize,
    coords_in_row_basis,
    direct_sum,
    direct_sum_with_injections,
    enumerate_elements,
    hom_decompose,
    integer_kernel_basis,
    is_isomorphic,
    lattice_row_basis,
    snf,
    tensor_q,
    xgcd,
)


def assert_snf_contract(a):
    u, d, v = snf(a)
    assert u @ a @ v == d
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    assert d.is_diagonal()
    diag = d.diagonal_entries()
    assert all(x >= 0 for x in diag)
    for x, y in zip(diag, diag[1:]):
        if x == 0:
            assert y == 0
        else:
            assert y % x == 0
    return diag


def test_xgcd():
    for a in range(-12, 13):
        for b in range(-12, 13):
            g, x, y = xgcd(a, b)
            assert g == gcd(a, b)
            assert x * a + y * b == g


def test_snf_diagonal_example():
    diag = assert_snf_contract(IntMatrix([[2, 0], [0, 3]]))
    assert diag == (1, 6)


def test_snf_identity_fixed():
    a = IntMatrix.identity(3)
    u, d, v = snf(a)
    assert d == a


def test_snf_single_negative():
    diag = assert_snf_contract(IntMatrix([[-5]]))
    assert diag == (5,)


def test_snf_empty_shapes():
    for a in (IntMatrix([], 0), IntMatrix([], 3), IntMatrix([[], [], []], 0)):
        u, d, v = snf(a)
        assert (d.rows, d.cols) == (a.rows, a.cols)
        assert u @ a @ v == d


def test_snf_known_awkward_matrix():
    # row-reduced by hand: invariant factors of [[2,4,4],[-6,6,12],[10,4,16]]
    diag = assert_snf_contract(IntMatrix([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]))
    assert diag == (2, 2, 156)


def test_snf_random_suite_small():
    rng = random.Random(11)
    for _ in range(250):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        a = IntMatrix([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        assert_snf_contract(a)


def test_det_bareiss():
    assert IntMatrix([], 0).det() == 1
    assert IntMatrix([[7]]).det() == 7
    assert IntMatrix([[1, 2], [3, 4]]).det() == -2
    assert IntMatrix([[2, 0, 1], [0, 0, 3], [1, 1, 1]]).det() == -6
    with pytest.raises(ValueError):
        IntMatrix([[1, 2]]).det()


def test_matrix_arithmetic_and_immutability():
    a = IntMatrix([[1, 2], [3, 4]])
    b = IntMatrix([[0, 1], [1, 0]])
    assert a @ b == IntMatrix([[2, 1], [4, 3]])
    assert (-a).data == ((-1, -2), (-3, -4))
    assert a.transpose().column(0) == (1, 2)
    with pytest.raises(AttributeError):
        a.cols = 5
    with pytest.raises(ValueError):
        IntMatrix([[1], [2, 3]])
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])


def test_group_canonical_form_validation():
    with pytest.raises(ValueError):
        FgAbGroup(0, (3, 2))  # not a chain
    with pytest.raises(ValueError):
        FgAbGroup(0, (1,))
    with pytest.raises(ValueError):
        FgAbGroup(-1)
    assert FgAbGroup.cyclic(1).is_trivial
    assert FgAbGroup.cyclic(0) == FgAbGroup.free(1)
    assert FgAbGroup.of(1, (4, 6, 0)) == FgAbGroup(2, (2, 12))


def test_canonical_names():
    assert str(FgAbGroup.trivial()) == "0"
    assert str(FgAbGroup.free(1)) == "Z^1"
    assert str(FgAbGroup.cyclic(12)) == "Z/12"
    assert str(FgAbGroup(2, (2, 6))) == "Z^2 + Z/2 + Z/6"


def test_canonicalize_examples():
    one = canonicalize(Presentation(1, IntMatrix([[2]])))
    assert one == FgAbGroup.cyclic(2)
    two = canonicalize(Presentation(2, IntMatrix([[2, 0], [0, 3]])))
    assert two == FgAbGroup.cyclic(6)
    coprime = canonicalize(Presentation(1, IntMatrix([[2], [3]])))
    assert coprime.is_trivial
    free = canonicalize(Presentation(3, IntMatrix([], 3)))
    assert free == FgAbGroup.free(3)


def test_canonicalize_idempotent_on_random_groups():
    rng = random.Random(5)
    for _ in range(100):
        g = random_group(rng)
        again = canonicalize(Presentation.of_group(g))
        assert again == g


def random_group(rng, max_order=200):
    while True:
        gens = rng.randint(0, 3)
        rels = rng.randint(0, gens + 2)
        mat = IntMatrix([[rng.randint(-6, 6) for _ in range(gens)] for _ in range(rels)], gens)
        g = canonicalize(Presentation(gens, mat))
        if g.rank <= 1 and g.torsion_order <= max_order:
            return g


def test_direct_sum_examples():
    assert direct_sum(FgAbGroup.free(1), FgAbGroup.cyclic(2)) == FgAbGroup(1, (2,))
    assert direct_sum(FgAbGroup.cyclic(2), FgAbGroup.cyclic(3)) == FgAbGroup.cyclic(6)
    assert direct_sum(FgAbGroup.cyclic(4), FgAbGroup.cyclic(6)) == FgAbGroup(0, (2, 12))


def test_direct_sum_commutes_and_adds_rank():
    rng = random.Random(7)
    for _ in range(60):
        a, b = random_group(rng), random_group(rng)
        s = direct_sum(a, b)
        assert s == direct_sum(b, a)
        assert s.rank == a.rank + b.rank
        assert s.torsion_order == a.torsion_order * b.torsion_order


def test_direct_sum_injections_cover_sum():
    g = FgAbGroup.cyclic(4)
    h = FgAbGroup(0, (2,))
    total, (inj_g, inj_h) = direct_sum_with_injections([g, h])
    assert total == FgAbGroup(0, (2, 4))
    seen = set()
    for x in enumerate_elements(g):
        for y in enumerate_elements(h):
            seen.add((inj_g.apply(x) + inj_h.apply(y)).coords)
    assert len(seen) == 8


def test_direct_sum_injections_respect_orders():
    groups = [FgAbGroup(1, (2,)), FgAbGroup.cyclic(6), FgAbGroup.free(1)]
    total, injections = direct_sum_with_injections(groups)
    assert total == FgAbGroup(2, (2, 6))
    for g, inj in zip(groups, injections):
        for i in range(g.ngens):
            gen = GroupElement.generator(g, i)
            assert inj.apply(gen).order() == gen.order()


def test_element_arithmetic():
    g = FgAbGroup(1, (4,))
    a = GroupElement(g, (2, 3))
    b = GroupElement(g, (-1, 2))
    assert (a + b).coords == (1, 1)
    assert (a - b).coords == (3, 1)
    assert (3 * b).coords == (-3, 2)
    assert (-a).coords == (-2, 1)
    assert GroupElement(g, (0, 9)).coords == (0, 1)
    assert GroupElement.zero(g).is_zero
    with pytest.raises(ValueError):
        GroupElement(g, (1,))
    with pytest.raises(ValueError):
        a + GroupElement.zero(FgAbGroup.cyclic(4))


def test_element_order():
    g = FgAbGroup(1, (2, 12))
    assert GroupElement(g, (1, 0, 0)).order() == 0
    assert GroupElement(g, (0, 1, 0)).order() == 2
    assert GroupElement(g, (0, 0, 3)).order() == 4
    assert GroupElement(g, (0, 1, 2)).order() == 6
    assert GroupElement.zero(g).order() == 1


def test_hom_well_definedness_rejected():
    # Z/2 -> Z must be zero; the unit matrix violates 2*f(g) = 0
    with pytest.raises(ValueError):
        Homomorphism(FgAbGroup.cyclic(2), FgAbGroup.free(1), IntMatrix([[1]]))
    # Z/4 -> Z/8 by 1 is ill-defined (4*1 != 0 mod 8), by 2 is fine
    with pytest.raises(ValueError):
        Homomorphism(FgAbGroup.cyclic(4), FgAbGroup.cyclic(8), IntMatrix([[1]]))
    Homomorphism(FgAbGroup.cyclic(4), FgAbGroup.cyclic(8), IntMatrix([[2]]))


def test_hom_apply_and_neg():
    f = Homomorphism(FgAbGroup.free(1), FgAbGroup.cyclic(12), IntMatrix([[5]]))
    assert f.apply(GroupElement(f.domain, (3,))).coords == (3,)
    assert (-f).apply(GroupElement(f.domain, (1,))).coords == (7,)
    assert Homomorphism.zero(f.domain, f.codomain).is_zero
    assert Homomorphism.identity(f.codomain).apply(
        GroupElement(f.codomain, (7,))
    ).coords == (7,)


def test_hom_decompose_examples():
    times5 = Homomorphism(FgAbGroup.free(1), FgAbGroup.cyclic(12), IntMatrix([[5]]))
    assert hom_decompose(times5) == (
        FgAbGroup.free(1),
        FgAbGroup.cyclic(12),
        FgAbGroup.trivial(),
    )
    zero = Homomorphism.zero(FgAbGroup.cyclic(4), FgAbGroup.cyclic(8))
    assert hom_decompose(zero) == (
        FgAbGroup.cyclic(4),
        FgAbGroup.trivial(),
        FgAbGroup.cyclic(8),
    )
    doubling = Homomorphism(FgAbGroup.free(1), FgAbGroup.free(1), IntMatrix([[2]]))
    assert hom_decompose(doubling) == (
        FgAbGroup.trivial(),
        FgAbGroup.free(1),
        FgAbGroup.cyclic(2),
    )
    ident = Homomorphism.identity(FgAbGroup(1, (2, 4)))
    assert hom_decompose(ident) == (
        FgAbGroup.trivial(),
        FgAbGroup(1, (2, 4)),
        FgAbGroup.trivial(),
    )


def random_finite_group(rng, max_order=64):
    while True:
        g = random_group(rng, max_order)
        if g.rank == 0:
            return g


def random_hom(rng, dom, cod, free_span=3):
    """Random well-defined matrix: each column is an element of the
    codomain killed by its generator's order."""
    cols = []
    for d in dom.generator_orders():
        coords = []
        for e in cod.generator_orders():
            if e == 0:
                coords.append(rng.randint(-free_span, free_span) if d == 0 else 0)
            elif d == 0:
                coords.append(rng.randrange(e))
            else:
                step = e // gcd(e, d)
                coords.append(step * rng.randrange(gcd(e, d)))
        cols.append(coords)
    mat = IntMatrix([[cols[j][i] for j in range(dom.ngens)] for i in range(cod.ngens)], dom.ngens)
    return Homomorphism(dom, cod, mat)


def test_hom_decompose_against_enumeration():
    rng = random.Random(13)
    for _ in range(80):
        dom = random_finite_group(rng)
        cod = random_finite_group(rng)
        f = random_hom(rng, dom, cod)
        kernel, image, coker = hom_decompose(f)
        elements = enumerate_elements(dom)
        ker_count = sum(1 for x in elements if f.apply(x).is_zero)
        image_set = {f.apply(x).coords for x in elements}
        assert kernel.order == ker_count
        assert image.order == len(image_set)
        assert coker.order * len(image_set) == cod.order
        assert kernel.order * image.order == dom.order


def test_lattice_helpers():
    basis = lattice_row_basis([(2, 0), (0, 2), (1, 1)], 2)
    assert coords_in_row_basis(basis, (3, 1)) is not None
    with pytest.raises(ValueError):
        coords_in_row_basis(lattice_row_basis([(2, 0)], 2), (1, 0))
    kernel = integer_kernel_basis(IntMatrix([[5, 12]]))
    (vec,) = kernel
    assert 5 * vec[0] + 12 * vec[1] == 0
    assert vec != (0, 0)


def test_tensor_q():
    assert tensor_q(FgAbGroup(2, (5,))) == 2
    assert tensor_q(FgAbGroup.cyclic(9)) == 0


def test_is_isomorphic():
    assert is_isomorphic(FgAbGroup.of(0, (2, 3)), FgAbGroup.cyclic(6))
    assert not is_isomorphic(FgAbGroup.cyclic(4), FgAbGroup(0, (2, 2)))


def test_enumerate_elements():
    g = FgAbGroup(0, (2, 4))
    elems = enumerate_elements(g)
    assert len(elems) == 8
    assert len({e.coords for e in elems}) == 8
    assert enumerate_elements(FgAbGroup.trivial()) == [GroupElement(FgAbGroup.trivial(), ())]
    with pytest.raises(CapacityError):
        enumerate_elements(FgAbGroup.free(1))
    with pytest.raises(CapacityError):
        enumerate_elements(g, bound=7)


def test_group_order_matches_enumeration_on_random_presentations():
    rng = random.Random(3)
    for _ in range(60):
        g = random_finite_group(rng, max_order=200)
        assert len(enumerate_elements(g, bound=200)) == prod(g.invariant_factors)


def test_module_doctests():
    import doctest

    import ghg.exactseq
    import ghg.fgab

    assert doctest.testmod(ghg.fgab).failed == 0
    assert doctest.testmod(ghg.exactseq).failed == 0
