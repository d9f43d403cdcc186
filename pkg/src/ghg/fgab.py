"""Exact algebra of finitely generated abelian groups.

Everything in this module is arbitrary-precision integer arithmetic on
small dense matrices: Smith normal form with recorded unimodular
transforms, canonical forms of presented groups, and exact
kernel/image/cokernel decompositions of homomorphisms between groups in
canonical form.

Conventions used throughout:

* a group in canonical form is Z^rank + Z/d1 + ... + Z/dt with
  d1 | d2 | ... | dt and every di >= 2;
* element coordinates list the free generators first, then the torsion
  generators in factor order, torsion entries reduced to [0, di);
* a cyclic order (or element order) of 0 means infinite, i.e. Z = Z/0;
* presentations quotient Z^g by the row span of a relation matrix, so
  relations are rows and elements are coordinate rows over the
  generators.
"""
from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from math import gcd, lcm, prod


class CapacityError(Exception):
    """An enumeration would exceed its configured bound."""


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g.

    >>> xgcd(12, 30)
    (6, -2, 1)
    >>> xgcd(-5, 0)
    (5, -1, 0)
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class IntMatrix:
    """Immutable dense matrix over Z.

    Entries are Python ints, so no intermediate result can overflow.
    Rows of the constructor argument must all have the same length; the
    column count must be passed explicitly only when there are no rows.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols: int | None = None):
        table = tuple(tuple(operator.index(v) for v in row) for row in data)
        if table:
            width = len(table[0])
            if any(len(row) != width for row in table):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        object.__setattr__(self, "rows", len(table))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", table)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def diagonal(cls, entries) -> IntMatrix:
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, rows: int) -> IntMatrix:
        columns = [tuple(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError("column of wrong height")
        return cls([[c[i] for c in columns] for i in range(rows)], len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> IntMatrix:
        return IntMatrix([self.column(j) for j in range(self.cols)], self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.cols, self.data))

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-v for v in row] for row in self.data], self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        ocols = range(other.cols)
        out = [
            [sum(a * b for a, b in zip(row, other.column(j))) for j in ocols]
            for row in self.data
        ]
        return IntMatrix(out, other.cols)

    def is_diagonal(self) -> bool:
        return all(
            v == 0
            for i, row in enumerate(self.data)
            for j, v in enumerate(row)
            if i != j
        )

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.data[k][k] for k in range(min(self.rows, self.cols)))

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # exact division: Bareiss guarantees divisibility by prev
                    m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = pivot
        return sign * m[n - 1][n - 1]

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]!r}, cols={self.cols})"


def hstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    return IntMatrix([ra + rb for ra, rb in zip(a.data, b.data)], a.cols + b.cols)


def vstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.cols:
        raise ValueError("column count mismatch")
    return IntMatrix(list(a.data) + list(b.data), a.cols)


def _swap_cols(m: list[list[int]], a: int, b: int) -> None:
    for row in m:
        row[a], row[b] = row[b], row[a]


def _row_eliminate(m, u, t, i):
    # make m[i][t] zero using rows t and i; pivot m[t][t] becomes gcd
    a, b = m[t][t], m[i][t]
    if b % a == 0:
        q = b // a
        m[i] = [x - q * y for x, y in zip(m[i], m[t])]
        u[i] = [x - q * y for x, y in zip(u[i], u[t])]
        return
    g, x, y = xgcd(a, b)
    ag, bg = a // g, -(b // g)
    m[t], m[i] = (
        [x * p + y * q for p, q in zip(m[t], m[i])],
        [bg * p + ag * q for p, q in zip(m[t], m[i])],
    )
    u[t], u[i] = (
        [x * p + y * q for p, q in zip(u[t], u[i])],
        [bg * p + ag * q for p, q in zip(u[t], u[i])],
    )


def _col_eliminate(m, v, t, j):
    # make m[t][j] zero using columns t and j; pivot becomes gcd
    a, b = m[t][t], m[t][j]
    if b % a == 0:
        q = b // a
        for row in m:
            row[j] -= q * row[t]
        for row in v:
            row[j] -= q * row[t]
        return
    g, x, y = xgcd(a, b)
    ag, bg = a // g, -(b // g)
    for row in m:
        row[t], row[j] = x * row[t] + y * row[j], bg * row[t] + ag * row[j]
    for row in v:
        row[t], row[j] = x * row[t] + y * row[j], bg * row[t] + ag * row[j]


def snf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: return unimodular (U, D, V) with U @ a @ V == D.

    D has the same shape as ``a``, is diagonal with nonnegative entries,
    and consecutive diagonal entries divide each other (zeros last).
    The pivot at each step is the entry of smallest nonzero absolute
    value in the remaining submatrix, ties broken by lowest (row, col),
    which makes the reduction deterministic.

    >>> u, d, v = snf(IntMatrix([[2, 0], [0, 3]]))
    >>> d.diagonal_entries()
    (1, 6)
    """
    nrows, ncols = a.rows, a.cols
    m = [list(row) for row in a.data]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    for t in range(min(nrows, ncols)):
        best = None
        best_abs = 0
        for i in range(t, nrows):
            row = m[i]
            for j in range(t, ncols):
                val = row[j]
                if val != 0 and (best is None or abs(val) < best_abs):
                    best = (i, j)
                    best_abs = abs(val)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            m[t], m[bi] = m[bi], m[t]
            u[t], u[bi] = u[bi], u[t]
        if bj != t:
            _swap_cols(m, t, bj)
            _swap_cols(v, t, bj)
        while True:
            for i in range(t + 1, nrows):
                if m[i][t] != 0:
                    _row_eliminate(m, u, t, i)
            for j in range(t + 1, ncols):
                if m[t][j] != 0:
                    _col_eliminate(m, v, t, j)
            if any(m[i][t] != 0 for i in range(t + 1, nrows)):
                continue  # a column mix re-dirtied the pivot column
            pivot = m[t][t]
            bad = None
            for i in range(t + 1, nrows):
                row = m[i]
                for j in range(t + 1, ncols):
                    if row[j] % pivot != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # absorb the offending row so the next gcd step shrinks the pivot
            m[t] = [x + y for x, y in zip(m[t], m[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
    for k in range(min(nrows, ncols)):
        if m[k][k] < 0:
            m[k] = [-x for x in m[k]]
            u[k] = [-x for x in u[k]]
    return IntMatrix(u, nrows), IntMatrix(m, ncols), IntMatrix(v, ncols)


@dataclass(frozen=True)
class FgAbGroup:
    """A finitely generated abelian group in canonical form.

    ``rank`` free summands followed by cyclic summands whose orders form
    a divisibility chain; the constructor rejects anything else, so two
    groups are isomorphic exactly when they are equal.

    >>> str(FgAbGroup(2, (2, 6)))
    'Z^2 + Z/2 + Z/6'
    """

    rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "invariant_factors", tuple(int(d) for d in self.invariant_factors)
        )
        if self.rank < 0:
            raise ValueError("negative rank")
        facs = self.invariant_factors
        if any(d < 2 for d in facs):
            raise ValueError("invariant factors must be >= 2")
        if any(facs[i + 1] % facs[i] != 0 for i in range(len(facs) - 1)):
            raise ValueError(f"factors {facs} do not form a divisibility chain")

    @classmethod
    def trivial(cls) -> FgAbGroup:
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> FgAbGroup:
        return cls(rank, ())

    @classmethod
    def cyclic(cls, d: int) -> FgAbGroup:
        """Z/d, with Z/0 = Z and Z/1 trivial."""
        d = abs(int(d))
        if d == 0:
            return cls(1, ())
        if d == 1:
            return cls(0, ())
        return cls(0, (d,))

    @classmethod
    def of(cls, rank: int, orders=()) -> FgAbGroup:
        """Canonical form of Z^rank + sum of Z/order, any orders allowed."""
        orders = [abs(int(d)) for d in orders]
        rank += sum(1 for d in orders if d == 0)
        facs = [d for d in orders if d >= 2]
        if not facs:
            return cls(rank, ())
        canon = canonicalize(Presentation(len(facs), IntMatrix.diagonal(facs)))
        return cls(rank + canon.rank, canon.invariant_factors)

    @property
    def ngens(self) -> int:
        return self.rank + len(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def torsion_order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return self.torsion_order if self.rank == 0 else None

    def torsion_part(self) -> FgAbGroup:
        return FgAbGroup(0, self.invariant_factors)

    def generator_orders(self) -> tuple[int, ...]:
        return (0,) * self.rank + self.invariant_factors

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.rank:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts)


@dataclass(frozen=True)
class Presentation:
    """Z^generators modulo the row span of ``relations``."""

    generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.generators < 0:
            raise ValueError("negative generator count")
        if self.relations.cols != self.generators:
            raise ValueError("relation width does not match generator count")

    @classmethod
    def of_group(cls, group: FgAbGroup) -> Presentation:
        """The defining presentation of a group already in canonical form."""
        return cls(group.ngens, _relation_rows(group))


def _relation_rows(group: FgAbGroup) -> IntMatrix:
    n = group.ngens
    rows = []
    for i, d in enumerate(group.invariant_factors):
        row = [0] * n
        row[group.rank + i] = d
        rows.append(row)
    return IntMatrix(rows, n)


class _Canonicalized:
    """Canonical form of a presentation plus the coordinate projection."""

    __slots__ = ("group", "_v", "_dvals", "_free", "_tors")

    def __init__(self, pres: Presentation):
        g = pres.generators
        _, d, v = snf(pres.relations)
        dvals = [
            d.data[j][j] if j < min(d.rows, g) else 0 for j in range(g)
        ]
        self._v = v
        self._dvals = dvals
        self._free = [j for j in range(g) if dvals[j] == 0]
        self._tors = [j for j in range(g) if dvals[j] >= 2]
        self.group = FgAbGroup(len(self._free), tuple(dvals[j] for j in self._tors))

    def project(self, coords) -> tuple[int, ...]:
        """Map a coordinate row over the presentation generators to
        canonical coordinates of the quotient."""
        coords = list(coords)
        v = self._v
        y = [sum(coords[k] * v.data[k][j] for k in range(len(coords))) for j in range(v.cols)]
        free = tuple(y[j] for j in self._free)
        tors = tuple(y[j] % self._dvals[j] for j in self._tors)
        return free + tors


def canonicalize(pres: Presentation) -> FgAbGroup:
    """Canonical form of a presented group.

    >>> canonicalize(Presentation(2, IntMatrix([[2, 0], [0, 3]])))
    FgAbGroup(rank=0, invariant_factors=(6,))
    """
    return _Canonicalized(pres).group


@dataclass(frozen=True)
class GroupElement:
    """An element of a group in canonical form, as a coordinate row.

    Torsion coordinates are reduced to [0, di) on construction, so
    structural equality is element equality.
    """

    group: FgAbGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.group.ngens:
            raise ValueError(
                f"need {self.group.ngens} coordinates for {self.group}, got {len(coords)}"
            )
        rank = self.group.rank
        reduced = coords[:rank] + tuple(
            c % d for c, d in zip(coords[rank:], self.group.invariant_factors)
        )
        object.__setattr__(self, "coords", reduced)

    @classmethod
    def zero(cls, group: FgAbGroup) -> GroupElement:
        return cls(group, (0,) * group.ngens)

    @classmethod
    def generator(cls, group: FgAbGroup, i: int) -> GroupElement:
        coords = [0] * group.ngens
        coords[i] = 1
        return cls(group, tuple(coords))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: GroupElement) -> GroupElement:
        if self.group != other.group:
            raise ValueError("elements of different groups")
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GroupElement:
        return GroupElement(self.group, tuple(-c for c in self.coords))

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def __mul__(self, k: int) -> GroupElement:
        k = operator.index(k)
        return GroupElement(self.group, tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def order(self) -> int:
        """Additive order; 0 means infinite order."""
        rank = self.group.rank
        if any(c != 0 for c in self.coords[:rank]):
            return 0
        return lcm(
            *(d // gcd(c, d) for c, d in zip(self.coords[rank:], self.group.invariant_factors)),
            1,
        )


@dataclass(frozen=True)
class Homomorphism:
    """Integer matrix acting on canonical coordinates.

    Columns are indexed by domain generators and rows by codomain
    generators; torsion rows are read modulo their invariant factor.
    Construction rejects matrices that do not kill the domain relations,
    i.e. every column must be annihilated by its generator's order.
    """

    domain: FgAbGroup
    codomain: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        m = self.matrix
        if m.rows != self.codomain.ngens or m.cols != self.domain.ngens:
            raise ValueError(
                f"matrix is {m.rows}x{m.cols}, expected "
                f"{self.codomain.ngens}x{self.domain.ngens}"
            )
        cod_orders = self.codomain.generator_orders()
        for j, d in enumerate(self.domain.generator_orders()):
            if d == 0:
                continue
            for i, e in enumerate(cod_orders):
                val = d * m.data[i][j]
                if (val != 0) if e == 0 else (val % e != 0):
                    raise ValueError(
                        f"ill-defined homomorphism: generator {j} has order {d} "
                        f"but d*column is nonzero in coordinate {i}"
                    )

    @classmethod
    def zero(cls, domain: FgAbGroup, codomain: FgAbGroup) -> Homomorphism:
        return cls(domain, codomain, IntMatrix.zero(codomain.ngens, domain.ngens))

    @classmethod
    def identity(cls, group: FgAbGroup) -> Homomorphism:
        return cls(group, group, IntMatrix.identity(group.ngens))

    @property
    def is_zero(self) -> bool:
        return all(self.apply(GroupElement.generator(self.domain, j)).is_zero
                   for j in range(self.domain.ngens))

    def apply(self, element: GroupElement) -> GroupElement:
        if element.group != self.domain:
            raise ValueError("element not in the domain")
        out = tuple(
            sum(v * c for v, c in zip(row, element.coords)) for row in self.matrix.data
        )
        return GroupElement(self.codomain, out)

    def __neg__(self) -> Homomorphism:
        return Homomorphism(self.domain, self.codomain, -self.matrix)


def integer_kernel_basis(a: IntMatrix) -> list[tuple[int, ...]]:
    """Basis rows of the lattice {x in Z^cols : a @ x == 0}."""
    _, d, v = snf(a)
    out = []
    for j in range(a.cols):
        dj = d.data[j][j] if j < min(d.rows, d.cols) else 0
        if dj == 0:
            out.append(v.column(j))
    return out


def lattice_row_basis(rows, width: int) -> list[list[int]]:
    """Echelon basis (pivot columns strictly increasing) of the lattice
    spanned by the given rows of length ``width``."""
    basis: list[list[int]] = []  # kept sorted by pivot column, pivots > 0
    for row in rows:
        _lattice_insert(basis, list(row), width)
    return basis


def _lattice_insert(basis, vec, width):
    for j in range(width):
        if vec[j] == 0:
            continue
        holder = None
        for b in basis:
            if _pivot(b) == j:
                holder = b
                break
        if holder is None:
            if vec[j] < 0:
                vec = [-x for x in vec]
            basis.append(vec)
            basis.sort(key=_pivot)
            return
        a, b = holder[j], vec[j]
        if b % a == 0:
            q = b // a
            vec = [x - q * y for x, y in zip(vec, holder)]
        else:
            g, x, y = xgcd(a, b)
            ag, bg = a // g, -(b // g)
            new_holder = [x * p + y * q for p, q in zip(holder, vec)]
            vec = [bg * p + ag * q for p, q in zip(holder, vec)]
            holder[:] = new_holder
    # vec reduced to zero: it was already in the lattice


def _pivot(row):
    for j, v in enumerate(row):
        if v != 0:
            return j
    return len(row)


def coords_in_row_basis(basis, vec) -> list[int]:
    """Express ``vec`` as an integer combination of echelon basis rows."""
    rem = list(vec)
    coeffs = []
    for b in basis:
        j = _pivot(b)
        if rem[j] % b[j] != 0:
            raise ValueError("vector not in the lattice")
        c = rem[j] // b[j]
        rem = [x - c * y for x, y in zip(rem, b)]
        coeffs.append(c)
    if any(rem):
        raise ValueError("vector not in the lattice")
    return coeffs


def hom_decompose(f: Homomorphism) -> tuple[FgAbGroup, FgAbGroup, FgAbGroup]:
    """Exact (kernel, image, cokernel) of a homomorphism.

    Torsion relations are lifted into free presentations: the preimage
    lattice K = {x : f(x) falls in the codomain relation lattice} gives
    image = Z^g / K and kernel = K / (domain relations), and the
    cokernel stacks the image columns onto the codomain relations.

    >>> f = Homomorphism(FgAbGroup.free(1), FgAbGroup.cyclic(12), IntMatrix([[5]]))
    >>> [str(g) for g in hom_decompose(f)]
    ['Z^1', 'Z/12', '0']
    """
    dom, cod = f.domain, f.codomain
    g, h = dom.ngens, cod.ngens
    rel_dom = _relation_rows(dom)
    rel_cod = _relation_rows(cod)
    stacked = hstack(f.matrix, rel_cod.transpose())
    preimage_gens = [row[:g] for row in integer_kernel_basis(stacked)]

    image = canonicalize(Presentation(g, IntMatrix(preimage_gens, g)))

    cokernel = canonicalize(
        Presentation(h, vstack(rel_cod, f.matrix.transpose()))
    )

    basis = lattice_row_basis(preimage_gens, g)
    kernel_rels = [coords_in_row_basis(basis, row) for row in rel_dom.data]
    kernel = canonicalize(Presentation(len(basis), IntMatrix(kernel_rels, len(basis))))
    return kernel, image, cokernel


def direct_sum(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """Canonical form of a + b.

    >>> str(direct_sum(FgAbGroup.cyclic(2), FgAbGroup.cyclic(6)))
    'Z/2 + Z/6'
    >>> str(direct_sum(FgAbGroup.cyclic(2), FgAbGroup.cyclic(3)))
    'Z/6'
    """
    return FgAbGroup.of(a.rank + b.rank, a.invariant_factors + b.invariant_factors)


def direct_sum_with_injections(
    groups,
) -> tuple[FgAbGroup, tuple[Homomorphism, ...]]:
    """Canonical form of a finite direct sum together with the canonical
    injection of each summand, for when block coordinates matter."""
    groups = list(groups)
    total = sum(g.ngens for g in groups)
    rows: list[list[int]] = []
    offset = 0
    for g in groups:
        for i, d in enumerate(g.invariant_factors):
            row = [0] * total
            row[offset + g.rank + i] = d
            rows.append(row)
        offset += g.ngens
    canon = _Canonicalized(Presentation(total, IntMatrix(rows, total)))
    injections = []
    offset = 0
    for g in groups:
        cols = []
        for i in range(g.ngens):
            unit = [0] * total
            unit[offset + i] = 1
            cols.append(canon.project(unit))
        matrix = IntMatrix.from_columns(cols, canon.group.ngens)
        injections.append(Homomorphism(g, canon.group, matrix))
        offset += g.ngens
    return canon.group, tuple(injections)


def tensor_q(group: FgAbGroup) -> int:
    """Dimension over Q after tensoring with Q (torsion dies)."""
    return group.rank


def is_isomorphic(a: FgAbGroup, b: FgAbGroup) -> bool:
    # canonical form is unique per isomorphism class
    return a == b


def enumerate_elements(group: FgAbGroup, bound: int = 10000) -> list[GroupElement]:
    """All elements of a finite group, coordinate-lexicographic order.

    Raises CapacityError for infinite groups or orders above ``bound``.
    """
    if group.rank > 0:
        raise CapacityError(f"{group} is infinite")
    if group.torsion_order > bound:
        raise CapacityError(
            f"{group} has order {group.torsion_order}, above the bound {bound}"
        )
    ranges = [range(d) for d in group.invariant_factors]
    return [GroupElement(group, coords) for coords in itertools.product(*ranges)]
