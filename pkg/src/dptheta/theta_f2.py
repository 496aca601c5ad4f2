"""The F2 algebra of theta characteristics.

Genus-3 model: even-cardinality subsets of {1..8} modulo complement form a
group of order 64 under symmetric difference.  The 28 classes with a 2-element
representative are the odd theta characteristics, the other 36 the even ones.
The module provides the syzygy test, Aronhold set enumeration, the labeling of
degree-2 blow-down classes by even theta characteristics, and a generic
quadratic-form engine over F2 symplectic spaces (Arf invariant, zero counts,
the genus-6 conic-pair count).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import lattice as lt
from .lattice import DivisorClass, PicardLattice

GROUND = frozenset(range(1, 9))


@dataclass(frozen=True, order=True)
class EvenSubsetClass:
    """An even subset of {1..8} modulo complement, stored canonically.

    The representative has size <= 4; a size-4 representative contains 1.
    Comparison and sorting use the sorted representative tuple.
    """

    elems: tuple[int, ...]

    def __init__(self, elems):
        s = frozenset(elems)
        if len(s) % 2 != 0 or not s <= GROUND:
            raise ValueError(f"not an even subset of 1..8: {sorted(s)}")
        if len(s) > 4 or (len(s) == 4 and 1 not in s):
            s = GROUND - s
        object.__setattr__(self, "elems", tuple(sorted(s)))

    def __add__(self, other: "EvenSubsetClass") -> "EvenSubsetClass":
        return EvenSubsetClass(set(self.elems) ^ set(other.elems))

    @property
    def parity(self) -> int:
        """1 for the 28 odd theta characteristics, 0 for the 36 even ones."""
        return 1 if len(self.elems) == 2 else 0

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elems) + "}"


IDENTITY = EvenSubsetClass(())


@lru_cache(maxsize=1)
def all_classes() -> tuple[EvenSubsetClass, ...]:
    out = {IDENTITY}
    for k in (2, 4):
        out.update(EvenSubsetClass(c) for c in combinations(range(1, 9), k))
    return tuple(sorted(out))


def odd_classes() -> tuple[EvenSubsetClass, ...]:
    return tuple(c for c in all_classes() if c.parity == 1)


def even_classes() -> tuple[EvenSubsetClass, ...]:
    return tuple(c for c in all_classes() if c.parity == 0)


def weil_pair(a: EvenSubsetClass, b: EvenSubsetClass) -> int:
    """Symplectic pairing |A n B| mod 2 (complement-invariant since |A| is even)."""
    return len(set(a.elems) & set(b.elems)) % 2


def q_theta(theta: EvenSubsetClass, eta: EvenSubsetClass) -> int:
    """Quadratic form attached to theta: parity(theta + eta) + parity(theta)."""
    return ((theta + eta).parity + theta.parity) % 2


def syzygetic(t1: EvenSubsetClass, t2: EvenSubsetClass, t3: EvenSubsetClass) -> bool:
    """Whether three distinct odd classes form a syzygetic triple."""
    if len({t1, t2, t3}) != 3:
        raise ValueError("syzygy test needs three distinct classes")
    if any(t.parity != 1 for t in (t1, t2, t3)):
        raise ValueError("syzygy test needs odd classes")
    return q_theta(t1, t2 + t3) == 0


def _is_aronhold(classes: tuple[EvenSubsetClass, ...]) -> bool:
    return all(not syzygetic(a, b, c) for a, b, c in combinations(classes, 3))


@lru_cache(maxsize=1)
def enumerate_aronhold() -> tuple[tuple[EvenSubsetClass, ...], ...]:
    """All 7-sets of odd classes whose triples are all asyzygetic (288 sets)."""
    odds = odd_classes()
    out: list[tuple[EvenSubsetClass, ...]] = []

    def extend(chosen: list[EvenSubsetClass], start: int):
        if len(chosen) == 7:
            out.append(tuple(chosen))
            return
        for i in range(start, len(odds)):
            c = odds[i]
            if all(not syzygetic(a, b, c)
                   for a, b in combinations(chosen, 2)):
                chosen.append(c)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    return tuple(sorted(out))


def even_theta_of_aronhold(aronhold: tuple[EvenSubsetClass, ...]) -> EvenSubsetClass:
    """Even class attached to an Aronhold set: the sum of its seven members."""
    members = tuple(sorted(aronhold))
    if len(members) != 7 or any(t.parity != 1 for t in members):
        raise ValueError("expected seven distinct odd classes")
    if not _is_aronhold(members):
        raise ValueError("not an Aronhold set")
    total = IDENTITY
    for t in members:
        total = total + t
    assert total.parity == 0
    return total


def _odd_label(d: DivisorClass) -> EvenSubsetClass:
    """Dictionary from the 56 exceptional classes to the 28 odd classes.

    E_i and D_i map to {i, 8}; L_{i,j} and C_{i,j} map to {i, j}.  The
    L-degree (0, 1, 2 or 3) identifies the family.
    """
    a, b = d[0], d[1:]
    if a == 0:  # E_i
        return EvenSubsetClass((b.index(1) + 1, 8))
    if a == 1:  # L_{i,j}
        idx = [i + 1 for i, c in enumerate(b) if c == -1]
        return EvenSubsetClass(idx)
    if a == 2:  # C_{i,j}
        idx = [i + 1 for i, c in enumerate(b) if c == 0]
        return EvenSubsetClass(idx)
    if a == 3:  # D_i
        return EvenSubsetClass((b.index(-2) + 1, 8))
    raise ValueError(f"not a degree-2 exceptional class: {d}")


@lru_cache(maxsize=None)
def even_theta_of_blowdown(lat: PicardLattice, blowdown: DivisorClass) -> EvenSubsetClass:
    """Even theta characteristic of a degree-2 blow-down class.

    The seven exceptional classes orthogonal to the blow-down class are
    mapped to odd classes; the resulting 7-set is an Aronhold set whose
    attached even class is returned.  Geiser-paired inputs agree.
    """
    if lat.degree != 2:
        raise ValueError("blow-down labeling requires degree 2")
    lines = lt.contracted_lines(lat, blowdown)
    assert len(lines) == 7
    labels = tuple(sorted(_odd_label(d) for d in lines))
    return even_theta_of_aronhold(labels)


# ---------------------------------------------------------------------------
# Generic quadratic forms on F2 symplectic spaces.

@dataclass(frozen=True)
class QuadraticSpace:
    """Quadratic form on F2^dim refining the standard symplectic pairing.

    Vectors are int bitmasks.  The form is stored as an upper-triangular bit
    matrix: q(v) = sum over i <= j of B[i][j] v_i v_j.  Basis vectors come in
    hyperbolic pairs (e_0, e_1), (e_2, e_3), ...
    """

    dim: int
    rows: tuple[int, ...]  # rows[i] has bits only at positions >= i

    def evaluate(self, v: int) -> int:
        r = 0
        for i in range(self.dim):
            if (v >> i) & 1:
                r ^= (self.rows[i] & v).bit_count() & 1
        return r

    def bilinear(self, u: int, v: int) -> int:
        """Standard symplectic pairing sum(u_2i v_2i+1 + u_2i+1 v_2i)."""
        r = 0
        for i in range(0, self.dim, 2):
            r ^= ((u >> i) & (v >> (i + 1)) & 1) ^ ((u >> (i + 1)) & (v >> i) & 1)
        return r

    def shift(self, eta: int) -> "QuadraticSpace":
        """The form q + <., eta>, adding the linear part on the diagonal."""
        rows = list(self.rows)
        for j in range(self.dim):
            if self.bilinear(1 << j, eta):
                rows[j] ^= 1 << j
        return QuadraticSpace(self.dim, tuple(rows))


def make_space(g: int, arf_invariant: int = 0) -> QuadraticSpace:
    """Standard form of dimension 2g: sum(x_2i x_2i+1), plus x_0 + x_1 if odd."""
    if g < 1:
        raise ValueError("g must be >= 1")
    if arf_invariant not in (0, 1):
        raise ValueError("Arf invariant must be 0 or 1")
    dim = 2 * g
    rows = [0] * dim
    for i in range(0, dim, 2):
        rows[i] |= 1 << (i + 1)
    if arf_invariant:
        rows[0] |= 1
        rows[1] |= 1 << 1
    return QuadraticSpace(dim, tuple(rows))


def count_zeros(space: QuadraticSpace) -> int:
    """Number of vectors with q(v) = 0, by exhaustive evaluation."""
    if space.dim > 20:
        raise ValueError("exhaustive count limited to dimension 20")
    return sum(1 for v in range(1 << space.dim) if space.evaluate(v) == 0)


def arf(space: QuadraticSpace) -> int:
    """Arf invariant: 0 if q has 2^{2g-1} + 2^{g-1} zeros, 1 otherwise."""
    g = space.dim // 2
    zeros = count_zeros(space)
    if zeros == (1 << (space.dim - 1)) + (1 << (g - 1)):
        return 0
    if zeros == (1 << (space.dim - 1)) - (1 << (g - 1)):
        return 1
    raise ValueError("form is not nondegenerate")


def count_conic_pairs(rng: random.Random | None = None) -> tuple[int, int, int]:
    """Genus-6 count of totally tangent conic pairs.

    Returns (intermediate, |Z|, |Z|/2) where Z is the common zero set of
    two odd forms q1 and q2 = q1 + <., eta> (eta a nonzero q1-zero), minus
    {0, eta}, and intermediate counts the zero classes of the form induced
    on the quotient eta-perp / eta.  The result (496, 990, 495) is
    independent of the admissible choice; pass an rng to randomize it.
    """
    q1 = make_space(6, arf_invariant=1)
    if rng is not None:
        # a random odd form: shift by a zero vector (preserves the Arf class)
        zeros = [v for v in range(1 << q1.dim) if q1.evaluate(v) == 0]
        q1 = q1.shift(rng.choice(zeros))
    zeros1 = [v for v in range(1, 1 << q1.dim) if q1.evaluate(v) == 0]
    eta = rng.choice(zeros1) if rng is not None else zeros1[0]
    q2 = q1.shift(eta)
    assert q2.evaluate(eta) == 0
    # common zeros: q1(v) = 0 and <v, eta> = 0; they pair off as {v, v+eta}
    common = [v for v in range(1 << q1.dim)
              if q1.evaluate(v) == 0 and q1.bilinear(v, eta) == 0]
    assert len(common) % 2 == 0
    intermediate = len(common) // 2
    z = [v for v in zeros1 if v != eta and q2.evaluate(v) == 0]
    assert len(z) == len(common) - 2 and len(z) % 2 == 0
    return intermediate, len(z), len(z) // 2
