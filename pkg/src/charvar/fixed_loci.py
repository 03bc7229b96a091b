"""Fixed loci of central twists on character varieties.

Tensoring a representation by a central character multiplies each generator
image by a central element; the fixed locus of such a twist controls where
the quotient by the center fails to be free.  A twist with a nontrivial
torus coordinate translates the torus factor and fixes nothing.  Twists
sitting inside the SL factors have fixed loci of computable codimension:

  genus one:   sum_i 2 n_i (1 - 1/l_i)          (orbit counting on (C*)^2)
  genus >= 2:  2(g-1) sum_i n_i^2 (1 - 1/l_i)   (tangent space counting)

where l_i is the order of the twist data in factor i (for a tuple of
central elements, one per surface group generator, the lcm of the
component orders).  Two brute-force oracles recompute these numbers from
first principles and are compared against the closed forms in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterator, Optional, Sequence, Union

from .groups import CentralElement, Decomposition

TwistLike = Union[CentralElement, Sequence[CentralElement]]


@dataclass(frozen=True)
class FixedLocusResult:
    """Outcome of a fixed-locus codimension computation.

    ``codim is None`` means the fixed locus is empty (the twist moves every
    point); the distinction from codim 0 (trivial twist fixes everything)
    matters and is never encoded numerically.
    """

    codim: Optional[int]
    factor_orders: tuple[int, ...]
    note: str

    @property
    def is_empty(self) -> bool:
        return self.codim is None

    def to_json(self) -> dict:
        return {
            "codim": self.codim,
            "empty": self.is_empty,
            "factor_orders": list(self.factor_orders),
            "note": self.note,
        }


def _as_tuple(twist: TwistLike) -> tuple[CentralElement, ...]:
    if isinstance(twist, CentralElement):
        return (twist,)
    return tuple(twist)


def per_factor_orders(
    twist: TwistLike, factors: Sequence[int]
) -> tuple[int, ...]:
    """Order of the factor-i data of the twist: lcm over its components."""
    elements = _as_tuple(twist)
    orders = []
    for i, n in enumerate(factors):
        component_orders = [n // gcd(e.ss_part[i], n) for e in elements]
        orders.append(lcm(*component_orders) if component_orders else 1)
    return tuple(orders)


def codim_highgenus_from_orders(
    factors: Sequence[int], orders: Sequence[int], genus: int
) -> int:
    """2(g-1) sum_i n_i^2 (1 - 1/l_i), an even integer since l_i | n_i."""
    return 2 * (genus - 1) * sum(
        n * n - (n * n) // l for n, l in zip(factors, orders)
    )


def codim_genus1_from_orders(factors: Sequence[int], orders: Sequence[int]) -> int:
    """sum_i 2 n_i (1 - 1/l_i) at genus one."""
    return sum(2 * (n - n // l) for n, l in zip(factors, orders))


def fixed_codim_highgenus(
    twist: TwistLike, factors: Sequence[int], genus: int
) -> FixedLocusResult:
    """Codimension of the fixed locus of a central twist, genus >= 2."""
    if genus < 2:
        raise ValueError("use fixed_codim_genus1 for genus one")
    elements = _as_tuple(twist)
    if any(not e.torus_trivial for e in elements):
        return FixedLocusResult(None, (), "nontrivial torus coordinate: free twist")
    orders = per_factor_orders(elements, factors)
    return FixedLocusResult(
        codim_highgenus_from_orders(factors, orders, genus),
        orders,
        "tangent count per factor",
    )


def fixed_codim_genus1(twist: TwistLike, factors: Sequence[int]) -> FixedLocusResult:
    """Codimension of the fixed locus of a central twist at genus one."""
    elements = _as_tuple(twist)
    if any(not e.torus_trivial for e in elements):
        return FixedLocusResult(None, (), "nontrivial torus coordinate: free twist")
    orders = per_factor_orders(elements, factors)
    return FixedLocusResult(
        codim_genus1_from_orders(factors, orders),
        orders,
        "orbit count per factor",
    )


def min_nonfree_codim(
    decomp: Decomposition, genus: int
) -> Optional[tuple[int, CentralElement]]:
    """Smallest fixed-locus codimension over nontrivial kernel twists.

    Twist tuples reduce to single elements: each component of a tuple has
    componentwise orders no larger than the tuple's lcm orders, so the
    minimum over tuples is attained at some single element.  Returns None
    when the kernel is trivial (the whole central action is free).  The
    witness is the lexicographically least minimizer.
    """
    if genus < 1:
        raise ValueError(f"genus must be >= 1, got {genus}")
    candidates = [e for e in decomp.ss_kernel if not e.is_identity]
    if not candidates:
        return None
    factors = decomp.factors
    best: Optional[tuple[int, CentralElement]] = None
    for tau in candidates:
        orders = per_factor_orders(tau, factors)
        if genus == 1:
            codim = codim_genus1_from_orders(factors, orders)
        else:
            codim = codim_highgenus_from_orders(factors, orders, genus)
        if best is None or (codim, tau) < best:
            best = (codim, tau)
    return best


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------

def genus1_orbit_oracle(n: int, pair: tuple[int, int]) -> Optional[int]:
    """Fixed-locus dimension at genus one for one SL(n) factor, by counting.

    The twist multiplies the two coordinates of each of the n points of
    (C*)^2 by fixed roots of unity (zeta^a, zeta^b).  A fixed multiset
    splits into free orbits of size l = ord(a, b); the locus has one free
    2-dimensional choice per orbit minus the two determinant constraints.
    Returns None when no partition into orbits exists.

    >>> genus1_orbit_oracle(2, (1, 0))
    0
    >>> genus1_orbit_oracle(2, (0, 0))
    2
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a, b = pair[0] % n, pair[1] % n
    ell = lcm(n // gcd(a, n), n // gcd(b, n))
    blocks, leftover = divmod(n, ell)
    if leftover:
        return None
    return 2 * blocks - 2


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _has_unit_gcd_tuple(shifts: Sequence[int], modulus: int, length: int) -> bool:
    """Is there a length-``length`` tuple over ``shifts`` with gcd 1 mod modulus?"""
    for combo in itertools.product(shifts, repeat=length):
        if gcd(*combo, modulus) == 1:
            return True
    return False


def fixed_tangent_oracle(n: int, ell: int, genus: int) -> Optional[int]:
    """Fixed-locus codimension for genus >= 2, by brute-force tangent count.

    A representation fixed by an order-l central twist is normalized by a
    matrix A with eigenvalue multiplicities (m_0 .. m_{l-1}) over the l-th
    roots of unity; each generator image shifts the eigenspaces by some
    exponent k_j, invertibility forces m_i = m_{i+k_j}, and irreducibility
    of the normalizing data forces gcd(k_1, ..., k_{2g}, l) = 1.  The locus
    of maximal dimension minimizes n^2 - sum_i m_i^2.  Returns None when no
    multiplicity vector survives the constraints (l does not divide n).
    """
    if genus < 2:
        raise ValueError("tangent oracle requires genus >= 2")
    if ell < 1:
        raise ValueError(f"order must be >= 1, got {ell}")
    best: Optional[int] = None
    for m in _compositions(n, ell):
        shifts = [
            k
            for k in range(ell)
            if all(m[i] == m[(i + k) % ell] for i in range(ell))
        ]
        if not _has_unit_gcd_tuple(shifts, ell, 2 * genus):
            continue
        value = sum(x * x for x in m)
        if best is None or value > best:
            best = value
    if best is None:
        return None
    return 2 * (genus - 1) * (n * n - best)
