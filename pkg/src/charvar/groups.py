"""Center bookkeeping for connected reductive groups of type A.

A group is presented as G = ((C*)^h x SL(n_1) x ... x SL(n_m)) / Z0 for a
finite subgroup Z0 of the center.  The center of the covering group is
(C*)^h x prod_i Z_{n_i}; we store its elements exactly: torus coordinates as
rationals in [0, 1) (the angle a/b stands for exp(2*pi*i*a/b)) and one
residue mod n_i per special linear factor.

Everything here is exact integer/rational arithmetic; no floats enter the
combinatorial layer.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Optional, Sequence, Union

DEFAULT_SUBGROUP_CAP = 10**6

RationalLike = Union[int, str, Fraction]


class GroupSpecError(ValueError):
    """Malformed group description: bad rational, residue, schema, or preset."""


class SubgroupCapExceeded(GroupSpecError):
    """A generated central subgroup exceeded the configured size cap."""


@dataclass(frozen=True, order=True)
class CentralElement:
    """One element of the center: torus angles plus one residue per SL factor."""

    torus_part: tuple[Fraction, ...]
    ss_part: tuple[int, ...]

    @property
    def torus_trivial(self) -> bool:
        return all(c == 0 for c in self.torus_part)

    @property
    def is_identity(self) -> bool:
        return self.torus_trivial and all(a == 0 for a in self.ss_part)

    def to_json(self) -> dict:
        return {
            "torus": [str(c) for c in self.torus_part],
            "factors": list(self.ss_part),
        }


class Center:
    """Arithmetic in the center of (C*)^h x prod SL(n_i).

    >>> c = Center(0, (2, 3))
    >>> e = c.element([], [1, 0])
    >>> c.order(e)
    2
    >>> c.add(e, e).is_identity
    True
    """

    def __init__(self, torus_rank: int, factors: Sequence[int]):
        self.torus_rank = int(torus_rank)
        self.factors = tuple(int(n) for n in factors)

    def element(
        self, torus: Sequence[RationalLike] = (), ss: Sequence[int] = ()
    ) -> CentralElement:
        torus = tuple(_parse_rational(c) for c in torus)
        ss = tuple(int(a) for a in ss)
        if len(torus) != self.torus_rank:
            raise GroupSpecError(
                f"expected {self.torus_rank} torus coordinates, got {len(torus)}"
            )
        if len(ss) != len(self.factors):
            raise GroupSpecError(
                f"expected {len(self.factors)} residues, got {len(ss)}"
            )
        for a, n in zip(ss, self.factors):
            if not 0 <= a < n:
                raise GroupSpecError(f"residue {a} out of range for modulus {n}")
        return CentralElement(torus, ss)

    def identity(self) -> CentralElement:
        return CentralElement((Fraction(0),) * self.torus_rank, (0,) * len(self.factors))

    def add(self, x: CentralElement, y: CentralElement) -> CentralElement:
        torus = tuple((a + b) % 1 for a, b in zip(x.torus_part, y.torus_part))
        ss = tuple((a + b) % n for a, b, n in zip(x.ss_part, y.ss_part, self.factors))
        return CentralElement(torus, ss)

    def neg(self, x: CentralElement) -> CentralElement:
        torus = tuple((-a) % 1 for a in x.torus_part)
        ss = tuple((-a) % n for a, n in zip(x.ss_part, self.factors))
        return CentralElement(torus, ss)

    def order(self, x: CentralElement) -> int:
        return element_order(x, self.factors)

    def sl_center_generator(self, i: int) -> CentralElement:
        # residue 1 mod n_i in slot i; for n_i = 2 this is -I in that factor
        ss = [0] * len(self.factors)
        ss[i] = 1 % self.factors[i]
        return CentralElement((Fraction(0),) * self.torus_rank, tuple(ss))

    def closure(
        self,
        generators: Iterable[CentralElement],
        cap: int = DEFAULT_SUBGROUP_CAP,
    ) -> "CentralSubgroup":
        """Subgroup generated by ``generators``, enumerated breadth-first."""
        seen = {self.identity()}
        frontier = [self.identity()]
        gens = list(generators)
        while frontier:
            base = frontier.pop()
            for g in gens:
                s = self.add(base, g)
                if s not in seen:
                    seen.add(s)
                    if len(seen) > cap:
                        raise SubgroupCapExceeded(
                            f"central subgroup exceeds cap of {cap} elements"
                        )
                    frontier.append(s)
        return CentralSubgroup(seen)


class CentralSubgroup:
    """A finite subgroup of the center, stored as a sorted element tuple."""

    def __init__(self, elements: Iterable[CentralElement]):
        self.elements = tuple(sorted(elements))
        self._set = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def nontrivial(self) -> bool:
        return len(self.elements) > 1

    def __contains__(self, x: CentralElement) -> bool:
        return x in self._set

    def __iter__(self) -> Iterator[CentralElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, CentralSubgroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"CentralSubgroup(order={self.order})"


def element_order(x: CentralElement, factors: Sequence[int]) -> int:
    """Multiplicative order: lcm of coordinate orders."""
    orders = [c.denominator for c in x.torus_part]
    orders += [n // gcd(a, n) for a, n in zip(x.ss_part, factors)]
    return lcm(*orders) if orders else 1


@dataclass(frozen=True)
class GroupSpec:
    """Presentation datum ((C*)^h x prod SL(n_i)) / Z0.

    ``central_generators`` generate Z0 inside the center of the covering
    group.  Factors are the SL sizes n_i >= 2 (abelian groups have none).
    """

    torus_rank: int
    factors: tuple[int, ...]
    central_generators: tuple[CentralElement, ...] = ()

    def __post_init__(self):
        if self.torus_rank < 0:
            raise GroupSpecError("torus rank must be nonnegative")
        for n in self.factors:
            if n < 2:
                raise GroupSpecError(f"SL factor size must be >= 2, got {n}")
        center = self.center()
        for g in self.central_generators:
            # revalidate shapes and ranges through the ambient center
            center.element(g.torus_part, g.ss_part)

    def center(self) -> Center:
        return Center(self.torus_rank, self.factors)

    @property
    def nonabelian(self) -> bool:
        return bool(self.factors)

    def full_center_subgroup(self, cap: int = DEFAULT_SUBGROUP_CAP) -> CentralSubgroup:
        """Z0, the subgroup generated by the listed central generators."""
        return self.center().closure(self.central_generators, cap)

    def to_json(self) -> dict:
        return {
            "torus_rank": self.torus_rank,
            "factors": list(self.factors),
            "central_generators": [g.to_json() for g in self.central_generators],
        }


@dataclass(frozen=True)
class Decomposition:
    """Canonical split of the central data of a GroupSpec.

    ss_kernel is the part of Z0 invisible to the torus (trivial torus
    coordinates); the quotient Z0/ss_kernel embeds into the torus and acts
    freely, so only coset representatives (``etale_reps``) are kept.
    ``pgl2_indices`` are the SL(2) slots whose center sits inside ss_kernel;
    quotienting them out leaves ``reduced_kernel_reps`` (representatives of
    ss_kernel modulo those sign flips).
    """

    spec: GroupSpec
    full_center: CentralSubgroup
    ss_kernel: CentralSubgroup
    etale_reps: tuple[CentralElement, ...]
    pgl2_indices: frozenset[int]
    reduced_kernel_reps: tuple[CentralElement, ...]

    @property
    def etale_order(self) -> int:
        return len(self.etale_reps)

    @property
    def reduced_kernel_order(self) -> int:
        return len(self.reduced_kernel_reps)

    @property
    def factors(self) -> tuple[int, ...]:
        return self.spec.factors

    def quotient_factor_labels(self) -> tuple[tuple[str, int], ...]:
        """Factors of the intermediate quotient group: SL(n) or PGL(2) per slot."""
        return tuple(
            ("PGL", 2) if i in self.pgl2_indices else ("SL", n)
            for i, n in enumerate(self.spec.factors)
        )

    def summary(self) -> dict:
        return {
            "torus_rank": self.spec.torus_rank,
            "factors": list(self.spec.factors),
            "center_order": self.full_center.order,
            "ss_kernel_order": self.ss_kernel.order,
            "etale_order": self.etale_order,
            "pgl2_indices": sorted(self.pgl2_indices),
            "reduced_kernel_order": self.reduced_kernel_order,
            "ss_kernel": [e.to_json() for e in self.ss_kernel],
        }


def canonical_decomposition(
    spec: GroupSpec, cap: int = DEFAULT_SUBGROUP_CAP
) -> Decomposition:
    """Split Z0 into its torus-invisible kernel and the free torus part."""
    center = spec.center()
    full = spec.full_center_subgroup(cap)
    ss_kernel = CentralSubgroup(e for e in full if e.torus_trivial)

    # cosets of ss_kernel correspond exactly to distinct torus parts
    by_torus: dict[tuple[Fraction, ...], CentralElement] = {}
    for e in full:
        prev = by_torus.get(e.torus_part)
        if prev is None or e < prev:
            by_torus[e.torus_part] = e
    etale_reps = tuple(sorted(by_torus.values()))

    pgl2 = frozenset(
        i
        for i, n in enumerate(spec.factors)
        if n == 2 and center.sl_center_generator(i) in ss_kernel
    )
    flips = center.closure([center.sl_center_generator(i) for i in sorted(pgl2)], cap)
    coset_reps: dict[frozenset, CentralElement] = {}
    for e in ss_kernel:
        coset = frozenset(center.add(e, f) for f in flips)
        prev = coset_reps.get(coset)
        if prev is None or e < prev:
            coset_reps[coset] = e
    reduced = tuple(sorted(coset_reps.values()))

    return Decomposition(
        spec=spec,
        full_center=full,
        ss_kernel=ss_kernel,
        etale_reps=etale_reps,
        pgl2_indices=pgl2,
        reduced_kernel_reps=reduced,
    )


def is_sl2_center_product(
    ss_kernel: CentralSubgroup, factors: Sequence[int]
) -> Optional[frozenset[int]]:
    """SL(2) slots S with sign flip in the kernel, if those flips exhaust it.

    Returns S when the kernel order equals 2^|S| (so the kernel is exactly the
    product of the -I's of the slots in S, and the quotient of prod SL(n_i) by
    it is a product of SL factors and PGL(2) copies); otherwise None.
    """
    if any(not e.torus_trivial for e in ss_kernel):
        raise GroupSpecError("kernel subgroup must have trivial torus parts")
    zero = next(iter(ss_kernel)).torus_part  # identity is always present
    slots = frozenset(
        i
        for i, n in enumerate(factors)
        if n == 2
        and CentralElement(zero, tuple(int(j == i) for j in range(len(factors))))
        in ss_kernel
    )
    if ss_kernel.order == 2 ** len(slots):
        return slots
    return None


def char_variety_dim(spec: GroupSpec, genus: int) -> int:
    """Dimension of the genus-g character variety of ``spec``.

    For g >= 2 each SL(n) factor contributes 2(g-1)(n^2-1) and the torus
    2g per rank; at g = 1 an SL(n) factor contributes 2(n-1) (commuting
    pairs of diagonalizable matrices up to conjugation) and the torus 2.
    """
    if genus < 1:
        raise GroupSpecError(f"genus must be >= 1, got {genus}")
    h = spec.torus_rank
    if genus == 1:
        return 2 * h + sum(2 * (n - 1) for n in spec.factors)
    return 2 * genus * h + sum(2 * (genus - 1) * (n * n - 1) for n in spec.factors)


# ---------------------------------------------------------------------------
# parsing: presets and the JSON schema
# ---------------------------------------------------------------------------

_PRESET_TOKEN = re.compile(r"(SL|GL|PGL)\((\d+)\)(?:\^(\d+))?", re.IGNORECASE)


def _parse_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        f = x
    elif isinstance(x, int):
        f = Fraction(x)
    elif isinstance(x, str):
        try:
            f = Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GroupSpecError(f"malformed rational {x!r}") from exc
    else:
        raise GroupSpecError(
            f"torus coordinate must be an exact rational string, got {type(x).__name__}"
        )
    if not 0 <= f < 1:
        raise GroupSpecError(f"torus coordinate {f} outside [0, 1)")
    return f


def _preset_triple(kind: str, n: int) -> tuple[int, list[int], list[tuple]]:
    """(torus_rank, factors, raw generators) for one preset token."""
    if n < 1:
        raise GroupSpecError(f"preset size must be >= 1, got {n}")
    kind = kind.upper()
    if kind == "SL":
        return 0, [n] if n >= 2 else [], []
    if kind == "PGL":
        if n < 2:
            return 0, [], []
        return 0, [n], [((), (1,))]
    if kind == "GL":
        if n < 2:
            return 1, [], []
        # GL(n) = (C* x SL(n)) / mu_n embedded as (angle 1/n, residue n-1)
        return 1, [n], [((Fraction(1, n),), (n - 1,))]
    raise GroupSpecError(f"unknown preset kind {kind!r}")


def preset_group_spec(name: str) -> GroupSpec:
    """Expand a preset expression: SL(n), GL(n), PGL(n), joined by 'x', '^k'.

    >>> preset_group_spec("GL(2)").torus_rank
    1
    >>> preset_group_spec("SL(2)^2").factors
    (2, 2)
    """
    text = name.replace(" ", "")
    if not text:
        raise GroupSpecError("empty group expression")
    torus_rank = 0
    factors: list[int] = []
    gen_triples: list[tuple[int, int, tuple]] = []  # (torus offset, factor offset, raw)
    for token in text.split("x"):
        m = _PRESET_TOKEN.fullmatch(token)
        if not m:
            raise GroupSpecError(f"unknown preset {token!r}")
        kind, n, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        for _ in range(power):
            h_j, f_j, g_j = _preset_triple(kind, n)
            for raw in g_j:
                gen_triples.append((torus_rank, len(factors), raw))
            torus_rank += h_j
            factors.extend(f_j)
    center = Center(torus_rank, factors)
    generators = []
    for t_off, f_off, (torus, ss) in gen_triples:
        full_torus = [Fraction(0)] * torus_rank
        full_ss = [0] * len(factors)
        for k, c in enumerate(torus):
            full_torus[t_off + k] = c
        for k, a in enumerate(ss):
            full_ss[f_off + k] = a
        generators.append(center.element(full_torus, full_ss))
    return GroupSpec(torus_rank, tuple(factors), tuple(generators))


def spec_from_json(data: dict, cap: int = DEFAULT_SUBGROUP_CAP) -> GroupSpec:
    """Build a GroupSpec from the documented JSON schema."""
    if not isinstance(data, dict):
        raise GroupSpecError("group JSON must be an object")
    unknown = set(data) - {"torus_rank", "factors", "central_generators"}
    if unknown:
        raise GroupSpecError(f"unknown keys in group JSON: {sorted(unknown)}")
    torus_rank = data.get("torus_rank", 0)
    factors = data.get("factors", [])
    if not isinstance(torus_rank, int):
        raise GroupSpecError("torus_rank must be an integer")
    if not isinstance(factors, list) or not all(isinstance(n, int) for n in factors):
        raise GroupSpecError("factors must be a list of integers")
    center = Center(torus_rank, factors)
    generators = []
    for item in data.get("central_generators", []):
        if not isinstance(item, dict):
            raise GroupSpecError("each central generator must be an object")
        generators.append(
            center.element(item.get("torus", []), item.get("factors", []))
        )
    spec = GroupSpec(torus_rank, tuple(int(n) for n in factors), tuple(generators))
    spec.full_center_subgroup(cap)  # enforce the size cap up front
    return spec


def parse_group_spec(
    source: Union[str, dict], cap: int = DEFAULT_SUBGROUP_CAP
) -> GroupSpec:
    """Parse a preset expression, JSON text, or already-decoded JSON object."""
    if isinstance(source, dict):
        return spec_from_json(source, cap)
    text = source.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"invalid group JSON: {exc}") from exc
        return spec_from_json(data, cap)
    spec = preset_group_spec(text)
    spec.full_center_subgroup(cap)
    return spec


PRESET_CATALOG = (
    ("SL(n)", "special linear factor, trivial central quotient"),
    ("GL(n)", "general linear group as (C* x SL(n)) / mu_n"),
    ("PGL(n)", "projective linear group SL(n) / mu_n"),
    ("A x B", "direct product of presets, e.g. SL(2)xPGL(3)"),
    ("A^k", "repeated direct product, e.g. SL(2)^3"),
)


# ---------------------------------------------------------------------------
# subgroup lattice enumeration (used by catalogs and consistency sweeps)
# ---------------------------------------------------------------------------

def enumerate_central_subgroups(
    factors: Sequence[int], cap: int = DEFAULT_SUBGROUP_CAP
) -> list[CentralSubgroup]:
    """All subgroups of prod_i Z_{n_i}, sorted by (order, elements).

    Lattice walk: repeatedly join known subgroups with cyclic subgroups.
    The join S + <x> only depends on <x> and, the group being abelian, is
    literally the set of sums, so no closure iteration is needed.
    """
    total = 1
    for n in factors:
        total *= n
    if total > cap:
        raise SubgroupCapExceeded(
            f"full center has order {total}, above the cap {cap}"
        )
    center = Center(0, factors)
    full = [
        center.element([], ss)
        for ss in itertools.product(*[range(n) for n in factors])
    ]
    cyclics: set[frozenset[CentralElement]] = set()
    for x in full:
        powers = [x]
        while not powers[-1].is_identity:
            powers.append(center.add(powers[-1], x))
        cyclics.add(frozenset(powers))
    trivial = CentralSubgroup([center.identity()])
    known = {trivial}
    frontier = [trivial]
    while frontier:
        sub = frontier.pop()
        for cyc in cyclics:
            if cyc <= sub._set:
                continue
            bigger = CentralSubgroup(
                {center.add(s, c) for s in sub.elements for c in cyc}
            )
            if bigger not in known:
                known.add(bigger)
                frontier.append(bigger)
    return sorted(known, key=lambda s: (s.order, s.elements))
