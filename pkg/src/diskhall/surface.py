"""Marked disks, foliation data, gluing, and graded-chord skein bookkeeping.

Everything here is combinatorial: a disk is a cyclic sequence of marked
intervals carrying integer foliation data summing to m - 2; a chord is a
pair of interval indices with an integer shift.  Chords of a disk cross
iff their endpoints interleave, so no planar geometry is needed.

The two skein emitters return labeled symbolic relations over the arc
generators z_{(a,b),n}; they are verified elsewhere by expanding the
arcs into quiver generators and evaluating in a Hall algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .freealg import NCPolynomial, Relation, q_bracket, zarc
from .scalar import ONE, RationalFunctionV, V


@dataclass(frozen=True)
class FoliationData:
    """Integer weights on the marked intervals of a disk, summing to m - 2."""

    m: int
    h: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"need at least 2 marked intervals, got m={self.m}")
        object.__setattr__(self, "h", tuple(self.h))
        if len(self.h) != self.m:
            raise ValueError(f"foliation vector has length {len(self.h)}, expected {self.m}")
        if sum(self.h) != self.m - 2:
            raise ValueError(
                f"foliation weights must sum to m - 2 = {self.m - 2}, got {sum(self.h)}")

    def at(self, i: int) -> int:
        """Weight at cyclic index i (1-based, any integer accepted)."""
        return self.h[(i - 1) % self.m]

    def rotated(self, i: int) -> "FoliationData":
        """The foliation j -> h(i + j), i.e. read starting after interval i."""
        return FoliationData(self.m, tuple(self.at(i + j) for j in range(1, self.m + 1)))


def angle(k: int, e: FoliationData) -> int:
    """<k> = sum_{j=1}^{k-1} (1 - e(j)); angle(1) = 0."""
    if not 1 <= k <= e.m:
        raise ValueError(f"index {k} out of range 1..{e.m}")
    return sum(1 - e.at(j) for j in range(1, k))


def span(j: int, k: int, e: FoliationData) -> int:
    """<j,k> = sum over the cyclic interval l = j, ..., k-1 of (1 - e(l)).

    Empty when j = k; wraps around the disk when k < j, so that
    <j,k> + <k,j> = 2 for distinct indices.
    """
    j0, k0 = (j - 1) % e.m, (k - 1) % e.m
    if k0 < j0:
        k0 += e.m
    return sum(1 - e.at(l + 1) for l in range(j0, k0))


@dataclass(frozen=True)
class MarkedDisk:
    """A disk with m marked intervals, foliation data, and a generator family."""

    foliation: FoliationData
    family: str = "E"

    @property
    def m(self) -> int:
        return self.foliation.m

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(f"{self.family}{i}" for i in range(1, self.m + 1))


def standard_form() -> MarkedDisk:
    """The 4-gon with weights (0,1,0,1); the base case for skein checks."""
    return MarkedDisk(FoliationData(4, (0, 1, 0, 1)))


@dataclass(frozen=True)
class GradedChord:
    """A chord between marked intervals a < b, suspended by ``shift``."""

    a: int
    b: int
    shift: int = 0

    def __post_init__(self):
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got ({self.a}, {self.b})")

    def element(self) -> NCPolynomial:
        return zarc(self.a, self.b, self.shift)

    def __str__(self):
        return f"z[({self.a},{self.b}),{self.shift}]"


@dataclass(frozen=True)
class GluingSpec:
    """Glue ``left_arc`` of the left disk onto ``right_arc`` of the right disk."""

    left: MarkedDisk
    left_arc: int
    right: MarkedDisk
    right_arc: int

    def __post_init__(self):
        if not 1 <= self.left_arc <= self.left.m:
            raise ValueError(f"left arc {self.left_arc} out of range 1..{self.left.m}")
        if not 1 <= self.right_arc <= self.right.m:
            raise ValueError(f"right arc {self.right_arc} out of range 1..{self.right.m}")


def normalized_gluing(spec: GluingSpec):
    """Rotate both disks so the glued arc sits in normal position.

    Returns (e, f, glued) where e is the left foliation re-read so the
    glued arc is its n-th interval, f maps indices n-1 .. n+m-2 to the
    right foliation re-read so the glued arc is interval n-1, and glued
    is the resulting (n + m - 2)-gon with family "G".
    """
    n, m2 = spec.left.m, spec.right.m
    e_rot = FoliationData(
        n, tuple(spec.left.foliation.at(k - n + spec.left_arc) for k in range(1, n + 1)))
    f_rot = {n - 1 + t: spec.right.foliation.at(spec.right_arc + t) for t in range(m2)}
    g = []
    for k in range(1, n + m2 - 1):
        if k <= n - 2:
            g.append(e_rot.at(k))
        elif k == n - 1:
            g.append(e_rot.at(n - 1) + f_rot[n - 1])
        elif k <= n + m2 - 3:
            g.append(f_rot[k])
        else:
            g.append(e_rot.at(n) + f_rot[n + m2 - 2])
    glued = MarkedDisk(FoliationData(n + m2 - 2, tuple(g)), family="G")
    return e_rot, f_rot, glued


def glue(spec: GluingSpec) -> MarkedDisk:
    """The disk obtained by gluing along the chosen pair of arcs."""
    return normalized_gluing(spec)[2]


# ---------------------------------------------------------------------------
# chord crossings and skein relations
# ---------------------------------------------------------------------------

DISJOINT = "disjoint"
SHARED = "shared-endpoint-interval"
INTERLEAVED = "interleaved"
EQUAL = "equal"


def crossing(x: GradedChord, y: GradedChord) -> str:
    """Classify how two chords of one disk meet (shifts are ignored)."""
    if (x.a, x.b) == (y.a, y.b):
        return EQUAL
    if x.a < y.a < x.b < y.b or y.a < x.a < y.b < x.b:
        return INTERLEAVED
    if len({x.a, x.b} & {y.a, y.b}) == 1:
        return SHARED
    return DISJOINT


def skein_commutator(x: GradedChord, y: GradedChord) -> Relation:
    """The interior-crossing skein identity [x, y]_1 = (resolution terms).

    With x = z_{(a,c),n} and y = z_{(b,d),n-k} interleaved, the right
    side is (v - v^{-1}) z_{(a,d),n} z_{(b,c),n} for k = 0,
    (v^{-1} - v) z_{(a,b),n} z_{(c,d),n-1} for k = 1, and 0 otherwise;
    other orderings follow by antisymmetry of the plain commutator.
    """
    if crossing(x, y) != INTERLEAVED:
        raise ValueError("no interior crossing")
    swapped = x.a > y.a
    first, second = (y, x) if swapped else (x, y)
    a, c = first.a, first.b
    b, d = second.a, second.b
    n = first.shift
    k = n - second.shift
    if k == 0:
        rhs = (zarc(a, d, n) * zarc(b, c, n)).scale(V - V ** -1)
    elif k == 1:
        rhs = (zarc(a, b, n) * zarc(c, d, n - 1)).scale(V ** -1 - V)
    else:
        rhs = NCPolynomial.zero()
    if swapped:
        rhs = -rhs
    lhs = q_bracket(x.element(), y.element(), ONE)
    return Relation(f"skein [{x}, {y}]_1 (k={k})", lhs, rhs)


def index_identities(c1: GradedChord, c2: GradedChord, base: int) -> Tuple[int, int]:
    """Intersection indices (i(c1,c2), i(c2,c1)) from the unshifted value.

    ``base`` is i(c1, c2) for the shift-0 representatives; shifting obeys
    i(c1[n], c2[k]) = i(c1, c2) + n - k, and the reversed index is the
    complement 1 - i(c1, c2).
    """
    i12 = base + c1.shift - c2.shift
    return i12, 1 - i12


def _canonical_shared(x: GradedChord, y: GradedChord):
    """Match (x, y) against the three one-endpoint patterns.

    Returns (d0, resolution) for the canonical shift difference d0 =
    x.shift - y.shift, or None when the pair is in the reversed role
    order.  The resolution is the third chord closing the triangle.
    """
    if x.a == y.b:            # x = (b,c) after y = (a,b): finger
        return 0, zarc(y.a, x.b, x.shift)
    if x.b == y.b and x.a < y.a:   # share top interval
        return 1, zarc(x.a, y.a, x.shift)
    if x.a == y.a and x.b < y.b:   # share bottom interval
        return 1, zarc(x.b, y.b, y.shift)
    return None


def boundary_skein(x: GradedChord, y: GradedChord) -> Relation:
    """The skein identity for chords meeting on one marked interval.

    At the canonical shift difference the bracket [x, y]_v resolves to
    the third side of the triangle; at every other shift the pair
    v-commutes, with exponent r = (-1)^i for intersection index
    i >= 1 and (-1)^(1+i) otherwise, where i = 1 - (d - d0).
    """
    if crossing(x, y) != SHARED:
        raise ValueError("chords do not meet on a single marked interval")
    pat = _canonical_shared(x, y)
    if pat is None:
        # reversed role order: derive from the canonical relation
        base = boundary_skein(y, x)
        f = _bracket_deformation(base.lhs, y, x)
        finv = f.inverse()
        return Relation(
            f"boundary skein [{x}, {y}] (reversed)",
            q_bracket(x.element(), y.element(), finv),
            -base.rhs.scale(finv))
    d0, resolution = pat
    d = x.shift - y.shift
    if d == d0:
        return Relation(f"boundary skein [{x}, {y}]_v",
                        q_bracket(x.element(), y.element(), V), resolution)
    i = 1 - (d - d0)
    sign_of = lambda k: -1 if k % 2 else 1
    r = sign_of(i) if i >= 1 else sign_of(1 + i)
    return Relation(f"boundary skein [{x}, {y}]_v^{r} (i={i})",
                    q_bracket(x.element(), y.element(), V ** r),
                    NCPolynomial.zero())


def _bracket_deformation(lhs: NCPolynomial, x: GradedChord, y: GradedChord
                         ) -> RationalFunctionV:
    """Recover f from lhs = x*y - f*y*x."""
    w = (zarc(y.a, y.b, y.shift) * zarc(x.a, x.b, x.shift)).terms
    (word, _), = w.items()
    return -lhs.terms[word]


def self_skein(x: GradedChord, y: GradedChord) -> Relation:
    """The skein identity for two suspensions of the same chord.

    [z_{c,n}, z_{c,n+k}] q-commutes with exponent 2(-1)^k for k >= 1,
    with the scalar correction v^{-1}/(v^2 - 1) exactly at k = 1.
    """
    if crossing(x, y) != EQUAL:
        raise ValueError("chords are not equal")
    k = y.shift - x.shift
    if k == 0:
        return Relation(f"self skein [{x}, {y}]_1",
                        q_bracket(x.element(), y.element(), ONE),
                        NCPolynomial.zero())
    if k < 0:
        base = self_skein(y, x)
        f = _bracket_deformation(base.lhs, y, x)
        finv = f.inverse()
        return Relation(f"self skein [{x}, {y}] (reversed)",
                        q_bracket(x.element(), y.element(), finv),
                        -base.rhs.scale(finv))
    f = V ** (2 * (-1) ** k)
    rhs = NCPolynomial.scalar(V ** -1 / (V ** 2 - ONE)) if k == 1 else NCPolynomial.zero()
    return Relation(f"self skein [{x}, {y}]_v^{2 * (-1) ** k}",
                    q_bracket(x.element(), y.element(), f), rhs)


# ---------------------------------------------------------------------------
# surface configurations (collections of disks with gluings)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurfaceConfig:
    """Disks plus pairwise arc gluings; the ribbon data of a surface."""

    disks: Tuple[MarkedDisk, ...]
    gluings: Tuple[Tuple[int, int, int, int], ...]  # (left disk, arc, right disk, arc)

    def glued_arcs(self):
        out = {}
        for gi, (dl, al, dr, ar) in enumerate(self.gluings):
            out[(dl, al)] = (dr, ar)
            out[(dr, ar)] = (dl, al)
        return out

    def interval_classes(self) -> Dict[Tuple[int, int], int]:
        """Union-find classes of marked intervals under the gluings.

        Gluing arc i (between intervals i and i+1) onto arc j identifies
        interval i with j+1 and i+1 with j, matching orientations.
        """
        parent = {}

        def find(a):
            while parent.get(a, a) != a:
                parent[a] = parent.get(parent[a], parent[a])
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        for d, disk in enumerate(self.disks):
            for p in range(1, disk.m + 1):
                parent.setdefault((d, p), (d, p))
        for dl, al, dr, ar in self.gluings:
            ml, mr = self.disks[dl].m, self.disks[dr].m
            union((dl, al), (dr, ar % mr + 1))
            union((dl, al % ml + 1), (dr, ar))
        return {k: find(k) for k in parent}

    def validate(self):
        glued = set()
        for dl, al, dr, ar in self.gluings:
            for d, a in ((dl, al), (dr, ar)):
                if not 0 <= d < len(self.disks):
                    raise ValueError(f"gluing references disk {d}, have {len(self.disks)}")
                if not 1 <= a <= self.disks[d].m:
                    raise ValueError(f"arc {a} out of range for disk {d}")
                if (d, a) in glued:
                    raise ValueError(f"arc {a} of disk {d} glued more than once")
                glued.add((d, a))
            if (dl, al) == (dr, ar):
                raise ValueError("cannot glue an arc to itself")
        classes = self.interval_classes()
        members: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for k, r in classes.items():
            members.setdefault(r, []).append(k)
        for root, group in members.items():
            if all((d, p) in glued for d, p in group):
                raise ValueError(
                    "configuration has a closed boundary component "
                    "(a boundary circle without any marked interval)")

    def has_enough_marked_intervals(self) -> bool:
        """Whether every disk's marked intervals stay distinct after gluing."""
        classes = self.interval_classes()
        for d, disk in enumerate(self.disks):
            seen = set()
            for p in range(1, disk.m + 1):
                r = classes[(d, p)]
                if r in seen:
                    return False
                seen.add(r)
        return True


_FAMILIES = "EFGHIJKLMNOPQRSTUVWXYZ"


def load_config(data: dict) -> SurfaceConfig:
    """Build and validate a SurfaceConfig from its JSON form.

    Expected shape: {"disks": [{"m": int, "h": [ints]}],
    "gluings": [{"left": i, "arc_i": a, "right": j, "arc_j": b}]}.
    """
    try:
        raw_disks = data["disks"]
    except (TypeError, KeyError):
        raise ValueError("config must be an object with a 'disks' list")
    if not raw_disks:
        raise ValueError("config needs at least one disk")
    disks = []
    for idx, d in enumerate(raw_disks):
        fam = _FAMILIES[idx] if idx < len(_FAMILIES) else f"E{idx}"
        disks.append(MarkedDisk(FoliationData(int(d["m"]), tuple(d["h"])), family=fam))
    gluings = []
    for g in data.get("gluings", ()):
        gluings.append((int(g["left"]), int(g["arc_i"]), int(g["right"]), int(g["arc_j"])))
    cfg = SurfaceConfig(tuple(disks), tuple(gluings))
    cfg.validate()
    return cfg
