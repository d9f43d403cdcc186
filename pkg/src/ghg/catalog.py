"""Curated homotopy groups and Samelson pairings of structure groups.

The catalog is a JSON file (see the shipped ``data/catalog.json``) and
the loader is deliberately strict: unknown fields, non-canonical
factors, inconsistent ranks, even rational exponents, non-torsion
pairing values, and pairing values that are not killed by their
generator's order all reject the whole file. A missing pairing is a
first-class answer (None), never a silent zero.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .fgab import FgAbGroup, GroupElement

_ENTRY_FIELDS = {"name", "connected", "abelian", "rational_exponents", "pi", "samelson"}
_PI_FIELDS = {"degree", "rank", "factors", "source"}
_SAMELSON_FIELDS = {"n", "m", "values"}


class CatalogError(Exception):
    """Base class for catalog problems."""


class CatalogParseError(CatalogError):
    """The file is not syntactically a catalog."""


class CatalogValidationError(CatalogError):
    """An entry violates a catalog invariant."""

    def __init__(self, entry: str, field_name: str, message: str):
        self.entry = entry
        self.field = field_name
        super().__init__(f"entry {entry!r}, field {field_name!r}: {message}")


class UnknownGroupError(CatalogError):
    def __init__(self, name: str, known):
        super().__init__(f"unknown group {name!r}; catalogued: {', '.join(known)}")


class TableDepthError(CatalogError):
    def __init__(self, name: str, depth: int, degree: int):
        self.depth = depth
        self.degree = degree
        super().__init__(
            f"pi table for {name} ends at degree {depth}; degree {degree} requested"
        )


@dataclass(frozen=True)
class PairingMatrix:
    """Values of a biadditive pairing pi_n x pi_m -> pi_(n+m) on the
    canonical generator pairs; values[i][j] pairs generator i of pi_n
    with generator j of pi_m."""

    n: int
    m: int
    source_n: FgAbGroup
    source_m: FgAbGroup
    target: FgAbGroup
    values: tuple[tuple[GroupElement, ...], ...]

    def __post_init__(self):
        if len(self.values) != self.source_n.ngens:
            raise ValueError("pairing value rows do not match pi_n generators")
        n_orders = self.source_n.generator_orders()
        m_orders = self.source_m.generator_orders()
        for i, row in enumerate(self.values):
            if len(row) != self.source_m.ngens:
                raise ValueError("pairing value columns do not match pi_m generators")
            for j, val in enumerate(row):
                if val.group != self.target:
                    raise ValueError("pairing value lies in the wrong group")
                if val.order() == 0:
                    raise ValueError(
                        f"pairing value at ({i}, {j}) has infinite order; "
                        "stored values must be torsion"
                    )
                for d in (n_orders[i], m_orders[j]):
                    if d != 0 and not (d * val).is_zero:
                        raise ValueError(
                            f"pairing value at ({i}, {j}) is not killed by the "
                            f"generator order {d}"
                        )

    @classmethod
    def zero(cls, n, m, source_n, source_m, target) -> PairingMatrix:
        z = GroupElement.zero(target)
        vals = tuple(tuple(z for _ in range(source_m.ngens)) for _ in range(source_n.ngens))
        return cls(n, m, source_n, source_m, target, vals)

    @property
    def is_zero(self) -> bool:
        return all(v.is_zero for row in self.values for v in row)

    def apply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """Biadditive extension to arbitrary elements."""
        if a.group != self.source_n:
            raise ValueError(f"left argument must lie in pi_{self.n} = {self.source_n}")
        if b.group != self.source_m:
            raise ValueError(f"right argument must lie in pi_{self.m} = {self.source_m}")
        out = GroupElement.zero(self.target)
        for i, x in enumerate(a.coords):
            if x == 0:
                continue
            for j, y in enumerate(b.coords):
                if y == 0:
                    continue
                out = out + (x * y) * self.values[i][j]
        return out


def samelson_apply(pairing: PairingMatrix, a: GroupElement, b: GroupElement) -> GroupElement:
    return pairing.apply(a, b)


@dataclass(frozen=True)
class GroupCatalogEntry:
    name: str
    connected: bool
    abelian: bool
    rational_exponents: tuple[int, ...]
    pi: dict[int, FgAbGroup] = field(repr=False)
    pi_sources: dict[int, str] = field(repr=False)
    samelson: dict[tuple[int, int], PairingMatrix] = field(repr=False)

    @property
    def depth(self) -> int:
        return max(self.pi)


@dataclass(frozen=True)
class Catalog:
    entries: dict[str, GroupCatalogEntry]
    path: str

    def names(self) -> tuple[str, ...]:
        return tuple(self.entries)

    def entry(self, name: str) -> GroupCatalogEntry:
        try:
            return self.entries[name]
        except KeyError:
            raise UnknownGroupError(name, self.names()) from None

    def depth(self, name: str) -> int:
        return self.entry(name).depth

    def pi(self, name: str, degree: int) -> FgAbGroup:
        """Catalogued pi_degree, or a table-depth signal beyond the table."""
        entry = self.entry(name)
        if degree < 0:
            raise ValueError("negative homotopy degree")
        if degree not in entry.pi:
            raise TableDepthError(name, entry.depth, degree)
        return entry.pi[degree]

    def samelson(self, name: str, n: int, m: int) -> PairingMatrix | None:
        """Stored pairing, a structural zero when a source group is
        trivial or the group is marked abelian, or None when absent."""
        entry = self.entry(name)
        gn = self.pi(name, n)
        gm = self.pi(name, m)
        target = self.pi(name, n + m)
        if gn.is_trivial or gm.is_trivial or entry.abelian:
            return PairingMatrix.zero(n, m, gn, gm, target)
        return entry.samelson.get((n, m))

    def rational_pi(self, name: str, degree: int) -> int:
        """dim_Q of pi_degree tensor Q, from the exponent model."""
        if degree < 1:
            raise ValueError("rational degrees start at 1")
        return self.entry(name).rational_exponents.count(degree)


def default_catalog_path() -> Path:
    return Path(__file__).parent / "data" / "catalog.json"


def resolve_catalog_path(flag_value: str | None = None) -> Path:
    """Flag beats the GHG_CATALOG environment variable beats the shipped file."""
    if flag_value:
        return Path(flag_value)
    env = os.environ.get("GHG_CATALOG")
    if env:
        return Path(env)
    return default_catalog_path()


def default_catalog() -> Catalog:
    return load_catalog(default_catalog_path())


def load_catalog(path) -> Catalog:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise CatalogParseError(f"cannot read catalog {path}: {exc}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CatalogParseError(f"catalog {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, list):
        raise CatalogParseError(f"catalog {path} must be a JSON list of entries")
    entries: dict[str, GroupCatalogEntry] = {}
    for item in raw:
        entry = _build_entry(item)
        if entry.name in entries:
            raise CatalogValidationError(entry.name, "name", "duplicate entry name")
        entries[entry.name] = entry
    return Catalog(entries, str(path))


def _want(mapping, key, types, entry, where):
    if key not in mapping:
        raise CatalogValidationError(entry, where + key, "missing required field")
    value = mapping[key]
    if not isinstance(value, types) or isinstance(value, bool) and types is int:
        raise CatalogValidationError(entry, where + key, f"expected {types}, got {type(value).__name__}")
    return value


def _int(value, entry, where):
    # bool is an int subclass; keep the schema strict
    if not isinstance(value, int) or isinstance(value, bool):
        raise CatalogValidationError(entry, where, "expected an integer")
    return value


def _build_entry(item) -> GroupCatalogEntry:
    if not isinstance(item, dict):
        raise CatalogParseError("catalog entries must be JSON objects")
    name = item.get("name")
    if not isinstance(name, str) or not name:
        raise CatalogParseError("every entry needs a nonempty string name")
    unknown = set(item) - _ENTRY_FIELDS
    if unknown:
        raise CatalogValidationError(name, sorted(unknown)[0], "unknown field")
    connected = _want(item, "connected", bool, name, "")
    if connected is not True:
        raise CatalogValidationError(name, "connected", "only connected groups are supported")
    abelian = item.get("abelian", False)
    if not isinstance(abelian, bool):
        raise CatalogValidationError(name, "abelian", "expected a boolean")
    exponents = _want(item, "rational_exponents", list, name, "")
    exponents = tuple(_int(e, name, "rational_exponents") for e in exponents)
    for e in exponents:
        if e < 1 or e % 2 == 0:
            raise CatalogValidationError(
                name, "rational_exponents", f"exponent {e} is not an odd positive integer"
            )

    pi: dict[int, FgAbGroup] = {}
    sources: dict[int, str] = {}
    for row in _want(item, "pi", list, name, ""):
        if not isinstance(row, dict):
            raise CatalogValidationError(name, "pi", "pi rows must be objects")
        bad = set(row) - _PI_FIELDS
        if bad:
            raise CatalogValidationError(name, f"pi.{sorted(bad)[0]}", "unknown field")
        degree = _int(_want(row, "degree", int, name, "pi."), name, "pi.degree")
        rank = _int(_want(row, "rank", int, name, "pi."), name, "pi.rank")
        factors = _want(row, "factors", list, name, "pi.")
        source = _want(row, "source", str, name, "pi.")
        if degree < 0:
            raise CatalogValidationError(name, "pi.degree", "negative degree")
        if degree in pi:
            raise CatalogValidationError(name, "pi.degree", f"degree {degree} listed twice")
        try:
            group = FgAbGroup(rank, tuple(_int(d, name, "pi.factors") for d in factors))
        except ValueError as exc:
            raise CatalogValidationError(name, "pi.factors", str(exc)) from None
        pi[degree] = group
        sources[degree] = source
    if not pi:
        raise CatalogValidationError(name, "pi", "empty pi table")
    if set(pi) != set(range(max(pi) + 1)):
        raise CatalogValidationError(name, "pi", "degrees must cover 0..depth without gaps")
    for degree, group in pi.items():
        if group.rank != exponents.count(degree):
            raise CatalogValidationError(
                name,
                "pi.rank",
                f"rank {group.rank} at degree {degree} does not match the "
                f"multiplicity {exponents.count(degree)} in rational_exponents",
            )

    samelson: dict[tuple[int, int], PairingMatrix] = {}
    for row in _want(item, "samelson", list, name, ""):
        if not isinstance(row, dict):
            raise CatalogValidationError(name, "samelson", "samelson rows must be objects")
        bad = set(row) - _SAMELSON_FIELDS
        if bad:
            raise CatalogValidationError(name, f"samelson.{sorted(bad)[0]}", "unknown field")
        n = _int(_want(row, "n", int, name, "samelson."), name, "samelson.n")
        m = _int(_want(row, "m", int, name, "samelson."), name, "samelson.m")
        if n < 1 or m < 1:
            raise CatalogValidationError(name, "samelson", "pairing degrees start at 1")
        for needed in (n, m, n + m):
            if needed not in pi:
                raise CatalogValidationError(
                    name, "samelson", f"pairing ({n}, {m}) needs pi_{needed} in the table"
                )
        if (n, m) in samelson:
            raise CatalogValidationError(name, "samelson", f"pairing ({n}, {m}) listed twice")
        values = _want(row, "values", list, name, "samelson.")
        target = pi[n + m]
        try:
            parsed = tuple(
                tuple(
                    GroupElement(target, tuple(_int(c, name, "samelson.values") for c in cell))
                    for cell in vrow
                )
                for vrow in values
            )
            samelson[(n, m)] = PairingMatrix(n, m, pi[n], pi[m], target, parsed)
        except (TypeError, ValueError) as exc:
            raise CatalogValidationError(name, "samelson.values", str(exc)) from None

    return GroupCatalogEntry(
        name=name,
        connected=True,
        abelian=abelian,
        rational_exponents=exponents,
        pi=pi,
        pi_sources=sources,
        samelson=samelson,
    )
