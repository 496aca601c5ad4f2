"""ADE degenerations of Del Pezzo surfaces and their multiplicity schemes.

A configuration of effective (-2)-classes spans a negative definite root
sublattice N of the Picard lattice.  Exceptional and blow-down classes that
become congruent modulo N coalesce; the multiplicity of a point of the
resulting scheme is the size of its congruence class.  Quotients by the
Geiser involution (degree 2) or the double-six pairing (degree 3) give the
schemes of bitangents, Aronhold sets, double sixes and even theta
characteristics of the branch curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice as lt
from .lattice import ClassKind, DivisorClass, PicardLattice

PROFILE_COLUMNS = (2, 1, 0, -1, -2)


@dataclass(frozen=True)
class NodalConfig:
    lattice: PicardLattice
    roots: tuple[DivisorClass, ...]

    def __init__(self, lattice: PicardLattice, roots):
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "roots", tuple(sorted(set(roots))))


@dataclass(frozen=True)
class MultiplicityScheme:
    """Zero-dimensional scheme: (canonical representative, multiplicity) points."""

    points: tuple[tuple[object, int], ...]

    @property
    def total(self) -> int:
        return sum(m for _, m in self.points)

    def multiplicity_profile(self) -> dict[int, int]:
        """Map multiplicity -> number of points with that multiplicity."""
        prof: dict[int, int] = {}
        for _, m in self.points:
            prof[m] = prof.get(m, 0) + 1
        return prof


def _int_det(rows: list[list[int]]) -> int:
    """Determinant of a small integer matrix by fraction-free elimination."""
    n = len(rows)
    m = [row[:] for row in rows]
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _component_type(size: int, degrees: list[int], arms: list[int] | None) -> str:
    """Name a connected ADE diagram from its vertex degrees and arm lengths."""
    if max(degrees, default=0) <= 2:
        return f"A{size}"
    # exactly one branch vertex of degree 3; arms sorted ascending
    assert arms is not None
    a, b, c = sorted(arms)
    if a == 1 and b == 1:
        return f"D{size}"
    if (a, b) == (1, 2) and c in (2, 3, 4):
        return f"E{size}"
    raise ValueError("connected component is not an ADE diagram")


def validate_config(cfg: NodalConfig) -> str:
    """Check the root invariants and return the Dynkin type, e.g. "A1+A2".

    Requirements: every member is a K-orthogonal (-2)-class, distinct members
    pair to 0 or 1, and the integral span is negative definite.  The type is
    read off from the connected components of the pairing graph.
    """
    lat = cfg.lattice
    roots = cfg.roots
    if not roots:
        return "trivial"
    for r in roots:
        if lt.pair(lat, r, r) != -2:
            raise ValueError(f"{r} has self-intersection != -2")
        if lt.pair(lat, r, lat.canonical) != 0:
            raise ValueError(f"{r} is not orthogonal to K")
    n = len(roots)
    gram = [[lt.pair(lat, a, b) for b in roots] for a in roots]
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] not in (0, 1):
                raise ValueError(
                    f"pairing {gram[i][j]} of {roots[i]} and {roots[j]} not in {{0, 1}}")
    # negative definite <=> leading principal minors alternate in sign
    for k in range(1, n + 1):
        minor = _int_det([row[:k] for row in gram[:k]])
        if minor * (-1) ** k <= 0:
            raise ValueError("root span is not negative definite")
    # connected components of the pairing graph
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] == 1:
                parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)
    names = []
    for verts in comps.values():
        degs = [sum(gram[i][j] for j in verts if j != i) for i in verts]
        arms = None
        if max(degs) == 3 and degs.count(3) == 1:
            branch = verts[degs.index(3)]
            arms = []
            for start in (j for j in verts if gram[branch][j] == 1):
                length, prev, cur = 1, branch, start
                while True:
                    nxt = [j for j in verts if gram[cur][j] == 1 and j != prev]
                    if not nxt:
                        break
                    prev, cur = cur, nxt[0]
                    length += 1
                arms.append(length)
        elif max(degs) > 2:
            raise ValueError("connected component is not an ADE diagram")
        names.append(_component_type(len(verts), degs, arms))
    return "+".join(sorted(names, key=lambda s: (s[0], int(s[1:]))))


class _CosetKey:
    """Canonical key for the coset of a class modulo the root span N.

    Writing v = p + q with p the rational orthogonal projection onto N and
    q in the orthogonal complement, two classes are congruent mod N exactly
    when their q-parts agree and their p-parts differ by an integral root
    combination, i.e. when the root coefficients of p agree modulo 1.
    """

    def __init__(self, cfg: NodalConfig):
        self.lat = cfg.lattice
        self.roots = cfg.roots
        n = len(self.roots)
        gram = [[Fraction(lt.pair(self.lat, a, b)) for b in self.roots]
                for a in self.roots]
        self.inv = _fraction_inverse(gram) if n else []

    def key(self, v: DivisorClass):
        if not self.roots:
            return v
        pairings = [Fraction(lt.pair(self.lat, v, r)) for r in self.roots]
        coeffs = [sum(row[j] * pairings[j] for j in range(len(pairings)))
                  for row in self.inv]
        perp = [Fraction(x) for x in v]
        for c, r in zip(coeffs, self.roots):
            for i, ri in enumerate(r):
                perp[i] -= c * ri
        frac = tuple(c - (c.numerator // c.denominator) for c in coeffs)
        return (tuple(perp), frac)


def _fraction_inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def congruence_classes(
    cfg: NodalConfig, classes: list[DivisorClass]
) -> tuple[tuple[DivisorClass, ...], ...]:
    """Partition classes by congruence modulo the integral span of the roots.

    All inputs must be of a single kind.  Parts are sorted internally and by
    their lexicographically minimal representative.
    """
    kinds = {lt.kind_of(cfg.lattice, c) for c in classes}
    if len(kinds) > 1:
        raise ValueError("classes of mixed kinds")
    keyer = _CosetKey(cfg)
    parts: dict[object, list[DivisorClass]] = {}
    for c in classes:
        parts.setdefault(keyer.key(c), []).append(c)
    return tuple(sorted((tuple(sorted(p)) for p in parts.values()),
                        key=lambda p: p[0]))


def _partition_scheme(parts) -> MultiplicityScheme:
    return MultiplicityScheme(tuple((p[0], len(p)) for p in parts))


def line_scheme(cfg: NodalConfig) -> MultiplicityScheme:
    """Exceptional classes modulo N; total 56 (degree 2) or 27 (degree 3)."""
    validate_config(cfg)
    classes = lt.enumerate_classes(cfg.lattice, ClassKind.EXCEPTIONAL)
    return _partition_scheme(congruence_classes(cfg, list(classes)))


def blowdown_scheme(cfg: NodalConfig) -> MultiplicityScheme:
    """Blow-down classes modulo N; total 576 (degree 2) or 72 (degree 3)."""
    validate_config(cfg)
    classes = lt.enumerate_classes(cfg.lattice, ClassKind.BLOWDOWN)
    return _partition_scheme(congruence_classes(cfg, list(classes)))


def _involution_quotient(parts, involution) -> MultiplicityScheme:
    """Quotient a congruence partition by an involution that permutes parts.

    Each quotient point is a part-pair {P, sP}; its multiplicity is
    |P u sP| / 2 (so a self-paired part of size 2m gives multiplicity m).
    """
    index = {}
    for pi, p in enumerate(parts):
        for c in p:
            index[c] = pi
    seen = set()
    points = []
    for pi, p in enumerate(parts):
        qi = index[involution(p[0])]
        if qi in seen or pi in seen:
            continue
        seen.update((pi, qi))
        members = set(p) | set(parts[qi])
        assert len(members) % 2 == 0
        points.append((min(members), len(members) // 2))
    points.sort()
    return MultiplicityScheme(tuple(points))


def bitangent_scheme(cfg: NodalConfig) -> MultiplicityScheme:
    """Line scheme modulo the Geiser involution; total 28."""
    if cfg.lattice.degree != 2:
        raise ValueError("bitangent scheme requires degree 2")
    validate_config(cfg)
    classes = lt.enumerate_classes(cfg.lattice, ClassKind.EXCEPTIONAL)
    parts = congruence_classes(cfg, list(classes))
    return _involution_quotient(parts, lambda c: lt.geiser(cfg.lattice, c))


def double_six_scheme(cfg: NodalConfig) -> MultiplicityScheme:
    """Blow-down scheme modulo the double-six pairing; total 36."""
    if cfg.lattice.degree != 3:
        raise ValueError("double-six scheme requires degree 3")
    validate_config(cfg)
    classes = lt.enumerate_classes(cfg.lattice, ClassKind.BLOWDOWN)
    parts = congruence_classes(cfg, list(classes))
    return _involution_quotient(parts, lambda c: lt.double_six_partner(cfg.lattice, c))


def aronhold_scheme(cfg: NodalConfig) -> MultiplicityScheme:
    """Blow-down scheme modulo the Geiser involution; total 288."""
    if cfg.lattice.degree != 2:
        raise ValueError("Aronhold scheme requires degree 2")
    validate_config(cfg)
    classes = lt.enumerate_classes(cfg.lattice, ClassKind.BLOWDOWN)
    parts = congruence_classes(cfg, list(classes))
    return _involution_quotient(parts, lambda c: lt.geiser(cfg.lattice, c))


def even_theta_scheme(cfg: NodalConfig) -> MultiplicityScheme:
    """Even theta characteristics with multiplicities; total 36.

    Each degree-2 blow-down class carries an even theta characteristic label
    (16 classes per label in the smooth case).  Labels merge when their
    fibers meet the same congruence class mod N; the multiplicity of a merged
    point is the number of labels it absorbs.
    """
    from . import theta_f2

    if cfg.lattice.degree != 2:
        raise ValueError("even theta scheme requires degree 2")
    validate_config(cfg)
    lat = cfg.lattice
    classes = lt.enumerate_classes(lat, ClassKind.BLOWDOWN)
    labels = {c: theta_f2.even_theta_of_blowdown(lat, c) for c in classes}
    parts = congruence_classes(cfg, list(classes))
    # union-find over the 36 labels
    parent: dict[object, object] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in classes:
        find(labels[c])
    for p in parts:
        base = find(labels[p[0]])
        for c in p[1:]:
            parent[find(labels[c])] = base
    groups: dict[object, list] = {}
    for label in set(labels.values()):
        groups.setdefault(find(label), []).append(label)
    points = sorted((min(g), len(g)) for g in groups.values())
    return MultiplicityScheme(tuple(points))


# The ten coefficient families of degree-2 blow-down classes, in the
# conventional order: upper half (L, 2L, 3L, 4L+, 5L+), then the Geiser
# images (8L, 7L, 6L, 5L-, 4L-).  Signature: (L-degree, sorted E-coefficients).
_PROFILE_FAMILIES = (
    ("L", (1, (0, 0, 0, 0, 0, 0, 0))),
    ("2L-Em-En-Ep", (2, (-1, -1, -1, 0, 0, 0, 0))),
    ("3L-sumE+Ei+Ej-Ek", (3, (-2, -1, -1, -1, -1, 0, 0))),
    ("4L-sumE+Ei-Em-En-Ep", (4, (-2, -2, -2, -1, -1, -1, 0))),
    ("5L-2sumE+2Ei", (5, (-2, -2, -2, -2, -2, -2, 0))),
    ("8L-3sumE", (8, (-3, -3, -3, -3, -3, -3, -3))),
    # Geiser image of the 2L family: -3 on the four complementary indices
    ("7L-2sumE-Ei-Ej-Ek-El", (7, (-3, -3, -3, -3, -2, -2, -2))),
    ("6L-2sumE-Ei-Ej+Ek", (6, (-3, -3, -2, -2, -2, -2, -1))),
    ("5L-sumE-2Ei-Ej-Ek-El", (5, (-3, -2, -2, -2, -1, -1, -1))),
    ("4L-sumE-2Ei", (4, (-3, -1, -1, -1, -1, -1, -1))),
)


def intersection_profile(cfg: NodalConfig) -> tuple[tuple[str, tuple[int, ...]], ...]:
    """Frequency table of D.F over the 576 blow-down classes D.

    Requires a single-root (A1) configuration F in degree 2.  Rows are the
    ten coefficient families, columns the intersection numbers 2, 1, 0,
    -1, -2.
    """
    if cfg.lattice.degree != 2:
        raise ValueError("profile requires degree 2")
    if len(cfg.roots) != 1:
        raise ValueError("profile requires a single A1 root")
    validate_config(cfg)
    lat = cfg.lattice
    f = cfg.roots[0]
    table = {name: [0] * len(PROFILE_COLUMNS) for name, _ in _PROFILE_FAMILIES}
    sig_to_name = {sig: name for name, sig in _PROFILE_FAMILIES}
    for d in lt.enumerate_classes(lat, ClassKind.BLOWDOWN):
        name = sig_to_name[(d[0], tuple(sorted(d[1:])))]
        table[name][PROFILE_COLUMNS.index(lt.pair(lat, d, f))] += 1
    return tuple((name, tuple(table[name])) for name, _ in _PROFILE_FAMILIES)


def profile_column_totals(profile) -> tuple[int, ...]:
    return tuple(sum(row[j] for _, row in profile)
                 for j in range(len(PROFILE_COLUMNS)))


def parse_config(text: str) -> NodalConfig:
    """Parse a config file: a `degree <d>` line and one `root <ints>` per root."""
    degree = None
    roots = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "degree":
            degree = int(rest)
        elif head == "root":
            roots.append(lt.parse_class(rest))
        else:
            raise ValueError(f"line {lineno}: unknown directive {head!r}")
    if degree is None:
        raise ValueError("config file missing degree")
    lat = lt.make_lattice(degree)
    for r in roots:
        if len(r) != lat.rank:
            raise ValueError(f"root {r} has wrong length for degree {degree}")
    return NodalConfig(lat, roots)
