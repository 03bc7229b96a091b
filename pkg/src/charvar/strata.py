"""Representation-type stratification of GL(n)/SL(n) character varieties.

Points of the genus-g character variety are semisimple representations
x_1^{+l_1} + ... + x_k^{+l_k} with x_t irreducible of dimension v_t and
pairwise distinct; the type is the weighted partition (l_1,v_1;...;l_k,v_k)
of n = sum l_t v_t.  Strata are indexed by these types.  For g >= 2 the
stratum of type nu has GL dimension 2(k + (g-1) sum_t v_t^2); each distinct
summand contributes one v_t^2 term regardless of its multiplicity.  At genus
one only types with all v_t = 1 are populated (commuting pairs have no
higher-dimensional irreducible summands) and the same dimension formula
degenerates to 2k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .groups import GroupSpec, char_variety_dim, parse_group_spec


@dataclass(frozen=True, order=True)
class WeightedPartition:
    """Multiset of (multiplicity, summand dimension) pairs with sum l*v = n.

    Parts are kept in canonical order: dimension descending, then
    multiplicity descending.

    >>> WeightedPartition.of((1, 1), (1, 2)).parts
    ((1, 2), (1, 1))
    >>> WeightedPartition.of((2, 1), (1, 1)).total
    3
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for mult, dim in self.parts:
            if mult < 1 or dim < 1:
                raise ValueError(f"parts must be positive pairs, got {(mult, dim)}")
        canon = tuple(sorted(self.parts, key=lambda p: (-p[1], -p[0])))
        if canon != self.parts:
            object.__setattr__(self, "parts", canon)

    @classmethod
    def of(cls, *parts: tuple[int, int]) -> "WeightedPartition":
        return cls(tuple(parts))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(mult * dim for mult, dim in self.parts)

    @property
    def is_generic(self) -> bool:
        """True for the one-part multiplicity-one type (1, n)."""
        return self.k == 1 and self.parts[0][0] == 1

    @property
    def all_dims_one(self) -> bool:
        return all(dim == 1 for _, dim in self.parts)

    def __str__(self) -> str:
        return "(" + "; ".join(f"{m},{d}" for m, d in self.parts) + ")"

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


def enumerate_weighted_partitions(n: int) -> list[WeightedPartition]:
    """All weighted partitions of n, canonically ordered, without duplicates.

    >>> [str(p) for p in enumerate_weighted_partitions(2)]
    ['(1,2)', '(2,1)', '(1,1; 1,1)']
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def rec(remaining: int, vmax: int, lmax: int) -> Iterator[tuple]:
        if remaining == 0:
            yield ()
            return
        for v in range(min(vmax, remaining), 0, -1):
            ltop = remaining // v
            if v == vmax:
                ltop = min(ltop, lmax)
            for l in range(ltop, 0, -1):
                for tail in rec(remaining - l * v, v, l):
                    yield ((l, v),) + tail

    return [WeightedPartition(parts) for parts in rec(n, n, n)]


def stratum_dim_gl(nu: WeightedPartition, genus: int) -> int:
    """GL stratum dimension 2(k + (g-1) sum_t v_t^2); 2k at genus one."""
    if genus < 1:
        raise ValueError(f"genus must be >= 1, got {genus}")
    return 2 * (nu.k + (genus - 1) * sum(d * d for _, d in nu.parts))


def stratum_dim_sl(nu: WeightedPartition, genus: int) -> int:
    """SL stratum dimension: the GL stratum fibers over the 2g-torus."""
    return stratum_dim_gl(nu, genus) - 2 * genus


def stratum_codim(nu: WeightedPartition, genus: int, n: Optional[int] = None) -> int:
    """Codimension 2(g-1) sum_{i,j} (l_i l_j - delta_ij) v_i v_j - 2(k-1).

    For g >= 2 this equals char_variety_dim(GL(n), g) - stratum_dim_gl(nu, g);
    the double sum collapses to n^2 - sum_t v_t^2 since n = sum_t l_t v_t.
    """
    if n is not None and n != nu.total:
        raise ValueError(f"partition {nu} does not sum to {n}")
    if genus < 1:
        raise ValueError(f"genus must be >= 1, got {genus}")
    mults = [m for m, _ in nu.parts]
    dims = [d for _, d in nu.parts]
    k = nu.k
    s = 0
    for i in range(k):
        for j in range(k):
            coeff = mults[i] * mults[j] - (1 if i == j else 0)
            s += coeff * dims[i] * dims[j]
    return 2 * (genus - 1) * s - 2 * (k - 1)


def genus1_stratum_dim_gl(nu: WeightedPartition) -> Optional[int]:
    """Dimension at genus one from the multiset model, or None if empty.

    A genus-one GL(n) point is a multiset of n points of (C*)^2; the type-nu
    stratum needs k distinct points with multiplicities l_t and all v_t = 1.
    Types with some v_t > 1 are not populated.
    """
    if not nu.all_dims_one:
        return None
    return 2 * nu.k


def singular_codim_factor(n: int, genus: int) -> Optional[int]:
    """Codimension of the singular locus of one SL(n)/GL(n) factor.

    None means the factor is smooth (only n = 1).  At genus one the closest
    degenerate stratum merges two of the n points, dropping the dimension by
    exactly 2 for every n >= 2.
    """
    if n < 1 or genus < 1:
        raise ValueError("need n >= 1 and genus >= 1")
    if n == 1:
        return None
    if genus == 1:
        return 2
    return min(
        stratum_codim(nu, genus)
        for nu in enumerate_weighted_partitions(n)
        if not nu.is_generic
    )


def fiber_dim_bound(nu: WeightedPartition, genus: int) -> tuple[int, int]:
    """Bounds (dim of one fiber, dim of the stratum preimage) upstairs.

    For the quotient map from the genus-g GL(n) representation space to the
    character variety: the fiber over a point of type nu has dimension at
    most n^2 g - sum_t (v_t^2 (g-1) + 1), and the preimage of the whole
    stratum at most n^2 g + sum_t (v_t^2 (g-1) + 1).  Both sums run over the
    k distinct summands.  Only meaningful for genus >= 2.
    """
    if genus < 2:
        raise ValueError("fiber bounds require genus >= 2")
    n = nu.total
    s = sum(d * d * (genus - 1) + 1 for _, d in nu.parts)
    return n * n * genus - s, n * n * genus + s


@dataclass(frozen=True)
class StratumInfo:
    """One stratum row of a factor table."""

    nu: WeightedPartition
    dim_gl: int
    dim_sl: int
    codim: int
    fiber_bounds: Optional[tuple[int, int]]
    is_open: bool

    def to_json(self) -> dict:
        return {
            "nu": self.nu.to_json(),
            "dim_gl": self.dim_gl,
            "dim_sl": self.dim_sl,
            "codim": self.codim,
            "fiber_bounds": list(self.fiber_bounds) if self.fiber_bounds else None,
            "open": self.is_open,
        }


def factor_strata_table(n: int, genus: int) -> tuple[StratumInfo, ...]:
    """Strata of one SL(n)/GL(n) factor.  Genus one lists populated types only."""
    if n < 1 or genus < 1:
        raise ValueError("need n >= 1 and genus >= 1")
    rows = []
    if genus == 1:
        ambient = 2 * n  # GL(n) at genus one: n unordered points of (C*)^2
        for nu in enumerate_weighted_partitions(n):
            dim = genus1_stratum_dim_gl(nu)
            if dim is None:
                continue
            codim = ambient - dim
            rows.append(
                StratumInfo(nu, dim, dim - 2, codim, None, codim == 0)
            )
    else:
        for nu in enumerate_weighted_partitions(n):
            dim = stratum_dim_gl(nu, genus)
            codim = stratum_codim(nu, genus)
            rows.append(
                StratumInfo(
                    nu,
                    dim,
                    stratum_dim_sl(nu, genus),
                    codim,
                    fiber_dim_bound(nu, genus),
                    codim == 0,
                )
            )
    return tuple(rows)


@dataclass(frozen=True)
class StrataTable:
    """Per-factor stratum tables plus the smooth torus summary."""

    spec: GroupSpec
    genus: int
    torus_dim: int
    factor_tables: tuple[tuple[int, tuple[StratumInfo, ...]], ...]

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "torus_rank": self.spec.torus_rank,
            "torus_dim": self.torus_dim,
            "total_dim": char_variety_dim(self.spec, self.genus),
            "factors": [
                {"n": n, "strata": [row.to_json() for row in rows]}
                for n, rows in self.factor_tables
            ],
        }


def strata_table(spec: GroupSpec, genus: int) -> StrataTable:
    """Stratum tables for every SL factor of ``spec``.

    Product strata are indexed by one type per factor; they are not
    materialized here (see iter_product_strata).
    """
    torus_dim = 2 * genus * spec.torus_rank if genus >= 2 else 2 * spec.torus_rank
    tables = tuple((n, factor_strata_table(n, genus)) for n in spec.factors)
    return StrataTable(spec, genus, torus_dim, tables)


def iter_product_strata(
    spec: GroupSpec, genus: int
) -> Iterator[tuple[StratumInfo, ...]]:
    """Lazy cartesian product of the per-factor stratum rows."""
    tables = [factor_strata_table(n, genus) for n in spec.factors]
    return itertools.product(*tables)
