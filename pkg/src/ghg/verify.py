"""Runnable invariant suite behind the ``verify`` CLI command.

Each check is a named function returning a summary string on success
and raising CheckFailure with a diagnosis on failure. The random
checks draw from a fixed seed so a verify run is reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .catalog import Catalog, TableDepthError
from .exactseq import middle_group, realizes_extension, resolve_extension
from .fgab import (
    FgAbGroup,
    GroupElement,
    Homomorphism,
    IntMatrix,
    Presentation,
    canonicalize,
    enumerate_elements,
    hom_decompose,
    snf,
    tensor_q,
)
from .gaugecalc import (
    BundleSpec,
    Sphere,
    Surface,
    class_group,
    connecting_hom_sphere,
    gauge_homotopy,
    gauge_homotopy_rational,
    make_bundle,
    rational_via_zero_sequence,
    su2_s4_pi2,
)

SEED = 20260814


class CheckFailure(AssertionError):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


# ---------------------------------------------------------------- generators


def random_matrix(rng, max_dim=6, span=9) -> IntMatrix:
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return IntMatrix(
        [[rng.randint(-span, span) for _ in range(cols)] for _ in range(rows)]
    )


def random_presentation(rng, max_gens=3, span=6) -> Presentation:
    gens = rng.randint(0, max_gens)
    rels = rng.randint(0, gens + 2)
    mat = IntMatrix(
        [[rng.randint(-span, span) for _ in range(gens)] for _ in range(rels)], gens
    )
    return Presentation(gens, mat)


def random_finite_group(rng, max_order: int) -> FgAbGroup:
    while True:
        g = canonicalize(random_presentation(rng))
        if g.rank == 0 and g.torsion_order <= max_order:
            return g


def random_group(rng, max_order: int, max_rank: int = 1) -> FgAbGroup:
    while True:
        g = canonicalize(random_presentation(rng))
        if g.rank <= max_rank and g.torsion_order <= max_order:
            return g


def random_hom(rng, dom: FgAbGroup, cod: FgAbGroup, free_span=3) -> Homomorphism:
    """Uniform-ish well-defined map: each column is drawn from the
    elements of the codomain killed by the generator's order."""
    cols = []
    for d in dom.generator_orders():
        col = []
        for e in cod.generator_orders():
            if e == 0:
                col.append(rng.randint(-free_span, free_span) if d == 0 else 0)
            elif d == 0:
                col.append(rng.randrange(e))
            else:
                g = gcd(e, d)
                col.append((e // g) * rng.randrange(g))
        cols.append(col)
    return Homomorphism(dom, cod, IntMatrix.from_columns(cols, cod.ngens))


# -------------------------------------------------------------------- checks


def check_snf_suite(catalog, rng, count=1000):
    """U @ A @ V == D, |det U| = |det V| = 1, nonnegative divisor chain."""
    for k in range(count):
        a = random_matrix(rng)
        u, d, v = snf(a)
        if u @ a @ v != d:
            raise CheckFailure(f"transform product mismatch on matrix #{k}: {a!r}")
        if abs(u.det()) != 1 or abs(v.det()) != 1:
            raise CheckFailure(f"non-unimodular transform on matrix #{k}: {a!r}")
        if not d.is_diagonal():
            raise CheckFailure(f"D not diagonal on matrix #{k}: {a!r}")
        diag = d.diagonal_entries()
        if any(x < 0 for x in diag):
            raise CheckFailure(f"negative diagonal on matrix #{k}: {a!r}")
        for x, y in zip(diag, diag[1:]):
            if (x == 0 and y != 0) or (x != 0 and y % x != 0):
                raise CheckFailure(f"divisibility chain broken on matrix #{k}: {a!r}")
    return f"{count} random matrices verified by direct multiplication"


def check_canonicalize_idempotent(catalog, rng, count=200):
    for _ in range(count):
        g = random_group(rng, 200, max_rank=2)
        if canonicalize(Presentation.of_group(g)) != g:
            raise CheckFailure(f"canonical form of {g} not a fixed point")
    return f"{count} canonical groups are fixed points"


def check_group_order_oracle(catalog, rng, count=200):
    """Order of a random presentation equals its element count."""
    for _ in range(count):
        pres = random_presentation(rng)
        g = canonicalize(pres)
        if g.rank != 0 or g.torsion_order > 200:
            continue
        if len(enumerate_elements(g, bound=200)) != g.torsion_order:
            raise CheckFailure(f"order mismatch for presentation {pres}")
    return f"{count} random presentations cross-checked by enumeration"


def check_hom_oracle(catalog, rng, count=200):
    """|ker| * |im| = |dom| and |im| * |coker| = |cod|, against brute force."""
    for _ in range(count):
        dom = random_finite_group(rng, 64)
        cod = random_finite_group(rng, 64)
        f = random_hom(rng, dom, cod)
        kernel, image, coker = hom_decompose(f)
        elems = enumerate_elements(dom)
        ker_n = sum(1 for x in elems if f.apply(x).is_zero)
        im_n = len({f.apply(x).coords for x in elems})
        if kernel.order != ker_n or image.order != im_n:
            raise CheckFailure(f"decomposition disagrees with enumeration for {f}")
        if kernel.order * image.order != dom.order:
            raise CheckFailure(f"|ker|*|im| != |dom| for {f}")
        if image.order * coker.order != cod.order:
            raise CheckFailure(f"|im|*|coker| != |cod| for {f}")
    return f"{count} random maps decomposed and recounted"


def check_extension_oracle(catalog, rng, count=100):
    """Build X, a random subgroup S and X/S; resolve_extension(S, X/S)
    must contain X."""
    for _ in range(count):
        x = random_finite_group(rng, 64)
        k = rng.randint(0, 3)
        gens = [
            tuple(rng.randrange(d) for d in x.invariant_factors) for _ in range(k)
        ]
        phi = Homomorphism(FgAbGroup.free(k), x, IntMatrix.from_columns(gens, x.ngens))
        _, sub, quot = hom_decompose(phi)
        result = resolve_extension(sub, quot)
        found = result.resolved == x if result.is_resolved else x in result.candidates
        if not found:
            raise CheckFailure(f"{x} missing from resolve_extension({sub}, {quot})")
        if not realizes_extension(x, sub, quot):
            raise CheckFailure(f"brute-force test rejects the true extension {x}")
    return f"{count} random subgroup/quotient pairs re-contain the source group"


def check_sign_invariance(catalog, rng, count=100):
    """middle_group is unchanged by negating either connecting map."""
    for _ in range(count):
        a = random_group(rng, 16)
        b = random_finite_group(rng, 8)
        c = random_finite_group(rng, 8)
        d = random_group(rng, 16)
        left = random_hom(rng, a, b)
        right = random_hom(rng, c, d)
        base = middle_group(left, right)
        if middle_group(-left, right) != base or middle_group(left, -right) != base:
            raise CheckFailure(f"sign sensitivity for fragment {left} / {right}")
    return f"{count} random fragments stable under negating either map"


def check_catalog_consistency(catalog, rng):
    """Rank/exponent agreement, pairing torsion and annihilation,
    biadditivity of stored pairings on bounded coordinates."""
    for name in catalog.names():
        entry = catalog.entry(name)
        for degree, group in entry.pi.items():
            if tensor_q(group) != entry.rational_exponents.count(degree):
                raise CheckFailure(f"{name}: rank at degree {degree} off the exponents")
        for (n, m), pairing in entry.samelson.items():
            for row in pairing.values:
                for val in row:
                    if val.order() == 0:
                        raise CheckFailure(f"{name}: non-torsion pairing value")
            # biadditivity of the generator-table extension on a sample
            for _ in range(20):
                a1 = _bounded_element(rng, pairing.source_n)
                a2 = _bounded_element(rng, pairing.source_n)
                b1 = _bounded_element(rng, pairing.source_m)
                b2 = _bounded_element(rng, pairing.source_m)
                left = pairing.apply(a1 + a2, b1)
                if left != pairing.apply(a1, b1) + pairing.apply(a2, b1):
                    raise CheckFailure(f"{name}: pairing ({n},{m}) not additive on the left")
                right = pairing.apply(a1, b1 + b2)
                if right != pairing.apply(a1, b1) + pairing.apply(a1, b2):
                    raise CheckFailure(f"{name}: pairing ({n},{m}) not additive on the right")
    return f"{len(catalog.names())} entries consistent"


def _bounded_element(rng, group, span=4):
    coords = [
        rng.randint(-span, span) if d == 0 else rng.randrange(d)
        for d in group.generator_orders()
    ]
    return GroupElement(group, tuple(coords))


def check_su2_gcd_table(catalog, rng):
    """pi_2 over S^4 through the engine matches the gcd closed form."""
    for k in range(-24, 25):
        got = su2_s4_pi2(k, catalog)
        want = FgAbGroup.cyclic(gcd(k, 12))
        if got != want:
            raise CheckFailure(f"k={k}: engine {got}, closed form {want}")
    return "k in [-24, 24] matches Z/gcd(k, 12)"


def check_hopf_bundle(catalog, rng):
    if not su2_s4_pi2(1, catalog).is_trivial:
        raise CheckFailure("pi_2 of the gauge group of the Hopf bundle is not trivial")
    return "pi_2(Gau) of the Hopf bundle (k=1) vanishes"


def _all_bases():
    return [Sphere(m) for m in range(1, 7)] + [Surface(g) for g in range(4)]


def check_rational_two_path(catalog, rng):
    """Closed form equals the zero-map sequence route everywhere."""
    tried = 0
    for name in catalog.names():
        for base in _all_bases():
            try:
                size = class_group(catalog, name, base).ngens
            except TableDepthError:
                continue  # class group not catalogued that deep
            bundle = make_bundle(catalog, name, base, (0,) * size)
            for n in range(1, 11):
                closed = gauge_homotopy_rational(catalog, name, bundle, n)
                via_seq = rational_via_zero_sequence(catalog, name, base, n)
                if closed != via_seq:
                    raise CheckFailure(
                        f"{name} over {base} degree {n}: closed {closed}, sequence {via_seq}"
                    )
                tried += 1
    return f"{tried} (group, base, degree) triples agree across both routes"


def check_rational_class_independence(catalog, rng):
    """The rational answer ignores the bundle class."""
    cases = [("SU2", Sphere(4)), ("TEST", Surface(2)), ("TEST", Sphere(2)), ("U1", Surface(1))]
    for name, base in cases:
        seen = set()
        for _ in range(5):
            coords = tuple(
                rng.randint(-3, 3) if d == 0 else rng.randrange(d)
                for d in class_group(catalog, name, base).generator_orders()
            )
            bundle = make_bundle(catalog, name, base, coords)
            seen.add(gauge_homotopy_rational(catalog, name, bundle, 2))
        if len(seen) != 1:
            raise CheckFailure(f"{name} over {base}: class-dependent rational answer {seen}")
    return f"{len(cases)} sampled bundles are class-independent"


def check_even_degree_vanishing(catalog, rng):
    """Odd exponents + even sphere + even degree force dimension 0."""
    for name in ("SU2", "SU3"):
        for m in (2, 4, 6):
            size = class_group(catalog, name, Sphere(m)).ngens
            bundle = make_bundle(catalog, name, Sphere(m), (0,) * size)
            for n in (2, 4, 6, 8):
                dim = gauge_homotopy_rational(catalog, name, bundle, n)
                if dim != 0:
                    raise CheckFailure(f"{name}, S^{m}, degree {n}: expected 0, got Q^{dim}")
    return "SU2/SU3 over even spheres vanish in even degrees"


def check_class_negation(catalog, rng):
    """Negating the bundle class negates delta but fixes the answer."""
    g3 = catalog.pi("SU2", 3)
    for k in (1, 2, 5, 12):
        plus = GroupElement(g3, (k,))
        minus = GroupElement(g3, (-k,))
        d_plus = connecting_hom_sphere(catalog, "SU2", 4, plus, 3)
        d_minus = connecting_hom_sphere(catalog, "SU2", 4, minus, 3)
        gen = GroupElement.generator(g3, 0)
        if d_minus.apply(gen) != -d_plus.apply(gen):
            raise CheckFailure(f"delta not negated entrywise at k={k}")
        a = gauge_homotopy(catalog, "SU2", BundleSpec(Sphere(4), plus), 2)
        b = gauge_homotopy(catalog, "SU2", BundleSpec(Sphere(4), minus), 2)
        if a != b:
            raise CheckFailure(f"k and -k disagree at k={k}")
    return "negating the class negates delta and fixes the middle group"


def check_genus_zero_matches_sphere(catalog, rng):
    """Surface(0) runs the S^2 route as a built-in assertion; exercise it."""
    for name in ("SU2", "TEST", "U1"):
        orders = class_group(catalog, name, Surface(0)).generator_orders()
        coords = tuple(1 if d == 0 else 1 % d for d in orders)
        bundle = make_bundle(catalog, name, Surface(0), coords)
        for n in (1, 2):
            gauge_homotopy(catalog, name, bundle, n)
    return "genus-0 surfaces agree with the S^2 sphere route"


CHECKS = [
    ("snf_random_suite", check_snf_suite),
    ("canonicalize_idempotent", check_canonicalize_idempotent),
    ("group_order_oracle", check_group_order_oracle),
    ("hom_decompose_oracle", check_hom_oracle),
    ("extension_oracle", check_extension_oracle),
    ("sign_invariance", check_sign_invariance),
    ("catalog_consistency", check_catalog_consistency),
    ("su2_gcd_table", check_su2_gcd_table),
    ("hopf_bundle", check_hopf_bundle),
    ("rational_two_path", check_rational_two_path),
    ("rational_class_independence", check_rational_class_independence),
    ("even_degree_vanishing", check_even_degree_vanishing),
    ("class_negation", check_class_negation),
    ("genus_zero_matches_sphere", check_genus_zero_matches_sphere),
]


def run_all(catalog: Catalog, seed: int = SEED) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        rng = random.Random(seed)  # each check reproducible in isolation
        try:
            detail = fn(catalog, rng)
            results.append(CheckResult(name, True, detail))
        except CheckFailure as exc:
            results.append(CheckResult(name, False, str(exc)))
        except Exception as exc:  # a check must never crash the report
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
