"""Root systems, Dynkin diagrams and Weyl data for families A through G.

Coordinates follow the standard Euclidean realizations: type A(n-1) in
the sum-zero hyperplane of Z^n, types B/C/D in Z^n, G2 in Z^3. The E and
F families are stored in doubled coordinates so that every root is an
integer vector; Cartan pairings are ratios and unaffected by scaling.

Positive roots are generated by closing the simple roots under simple
reflections in simple-root coordinates, so each root also carries its
integer coefficient vector. Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

__all__ = [
    "DynkinType",
    "Edge",
    "RootSystem",
    "LeviSubset",
    "build_root_system",
    "coxeter_number",
    "fundamental_degrees",
    "levi_factors",
    "simple_reflection_weights",
    "parse_group",
]

# admissible rank window per family (classical families capped at rank 8)
_RANK_RULES = {
    "A": (1, 8),
    "B": (2, 8),
    "C": (2, 8),
    "D": (3, 8),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class DynkinType:
    """A Dynkin family with rank, plus the dimension of any extra
    central torus (1 for GL_n on top of A_{n-1}, 1 for GSp4 on top
    of C2, 0 for the semisimple groups)."""

    family: str
    rank: int
    central_torus: int = 0

    def __post_init__(self) -> None:
        if self.family not in _RANK_RULES:
            raise ValueError("unknown family %r" % (self.family,))
        lo, hi = _RANK_RULES[self.family]
        if not lo <= self.rank <= hi:
            raise ValueError(
                "rank %d out of range [%d, %d] for family %s"
                % (self.rank, lo, hi, self.family)
            )
        if self.central_torus not in (0, 1):
            raise ValueError("central torus dimension must be 0 or 1")
        if self.central_torus == 1 and (self.family, self.rank) not in _REDUCTIVE_OK:
            if self.family != "A":
                raise ValueError("central torus only supported for GL_n and GSp4")

    @property
    def name(self) -> str:
        if self.central_torus:
            if self.family == "A":
                return "GL%d" % (self.rank + 1)
            if (self.family, self.rank) == ("C", 2):
                return "GSp4"
        return "%s%d" % (self.family, self.rank)

    @property
    def reductive_rank(self) -> int:
        return self.rank + self.central_torus


_REDUCTIVE_OK = {("C", 2)}


@dataclass(frozen=True)
class Edge:
    """Dynkin diagram bond between simple roots a and b.

    multiplicity is 1, 2 or 3; short is the index of the short root at
    the arrow head for multiple bonds, None for single bonds.
    """

    a: int
    b: int
    multiplicity: int
    short: int | None = None


@dataclass(frozen=True)
class LeviSubset:
    """A subset of simple roots with its typed connected factors.

    Each factor is (DynkinType, embedding) where embedding[k] is the
    ambient index of the factor's k-th simple root in Bourbaki order.
    """

    ambient: "RootSystem"
    subset: frozenset[int]
    factors: tuple[tuple[DynkinType, tuple[int, ...]], ...]


@dataclass(frozen=True)
class RootSystem:
    dynkin_type: DynkinType
    simple_roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    positive_root_coords: tuple[tuple[int, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    fundamental_degrees: tuple[int, ...]
    coxeter_number: int
    weyl_order: int

    @property
    def rank(self) -> int:
        return self.dynkin_type.rank

    @property
    def reductive_rank(self) -> int:
        return self.dynkin_type.reductive_rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def dim_g(self) -> int:
        """Dimension of the reductive Lie algebra: roots plus Cartan."""
        return 2 * len(self.positive_roots) + self.reductive_rank

    def neighbors(self, i: int) -> tuple[int, ...]:
        out = []
        for e in self.edges:
            if e.a == i:
                out.append(e.b)
            elif e.b == i:
                out.append(e.a)
        return tuple(sorted(out))


def _dot(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _simple_roots_euclid(family: str, rank: int) -> list[tuple[int, ...]]:
    if family == "A":
        n = rank + 1
        return [
            tuple(1 if k == i else (-1 if k == i + 1 else 0) for k in range(n))
            for i in range(rank)
        ]
    if family in ("B", "C", "D"):
        n = rank
        chain = [
            tuple(1 if k == i else (-1 if k == i + 1 else 0) for k in range(n))
            for i in range(rank - 1)
        ]
        if family == "B":
            last = tuple(1 if k == n - 1 else 0 for k in range(n))
        elif family == "C":
            last = tuple(2 if k == n - 1 else 0 for k in range(n))
        else:
            last = tuple(1 if k in (n - 2, n - 1) else 0 for k in range(n))
            return chain + [last]
        return chain + [last]
    if family == "G":
        return [(1, -1, 0), (-2, 1, 1)]
    if family == "F":
        # doubled coordinates
        return [
            (0, 2, -2, 0),
            (0, 0, 2, -2),
            (0, 0, 0, 2),
            (1, -1, -1, -1),
        ]
    if family == "E":
        # doubled Bourbaki coordinates of E8, truncated to the first
        # `rank` simple roots for E6 and E7 (still 8 ambient coords)
        base = [
            (1, -1, -1, -1, -1, -1, -1, 1),
            (2, 2, 0, 0, 0, 0, 0, 0),
            (-2, 2, 0, 0, 0, 0, 0, 0),
            (0, -2, 2, 0, 0, 0, 0, 0),
            (0, 0, -2, 2, 0, 0, 0, 0),
            (0, 0, 0, -2, 2, 0, 0, 0),
            (0, 0, 0, 0, -2, 2, 0, 0),
            (0, 0, 0, 0, 0, -2, 2, 0),
        ]
        return base[:rank]
    raise ValueError("unknown family %r" % (family,))


def _degrees(family: str, rank: int) -> tuple[int, ...]:
    if family == "A":
        return tuple(range(2, rank + 2))
    if family in ("B", "C"):
        return tuple(range(2, 2 * rank + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * rank - 1, 2)) + [rank]))
    return {
        ("E", 6): (2, 5, 6, 8, 9, 12),
        ("E", 7): (2, 6, 8, 10, 12, 14, 18),
        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
        ("F", 4): (2, 6, 8, 12),
        ("G", 2): (2, 6),
    }[(family, rank)]


def _weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
        ("F", 4): 1152,
        ("G", 2): 12,
    }[(family, rank)]


def _generate_roots(cartan: list[list[int]], rank: int) -> list[tuple[int, ...]]:
    # close the simple roots under all simple reflections, in
    # simple-root coordinates: s_j(c)_j = c_j - sum_i c_i A[i][j]
    seen: set[tuple[int, ...]] = set()
    frontier: list[tuple[int, ...]] = []
    for i in range(rank):
        v = tuple(1 if j == i else 0 for j in range(rank))
        seen.add(v)
        frontier.append(v)
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for c in frontier:
            for j in range(rank):
                pairing = sum(c[i] * cartan[i][j] for i in range(rank))
                img = list(c)
                img[j] -= pairing
                t = tuple(img)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    pos = [c for c in seen if all(x >= 0 for x in c)]
    pos.sort(key=lambda c: (sum(c), c))
    return pos


_CACHE: dict[DynkinType, RootSystem] = {}


def build_root_system(t: DynkinType) -> RootSystem:
    """Construct the full root datum for a Dynkin type.

    The construction validates the stored degree and Weyl-order tables
    against the root count identities before returning.
    """
    if t in _CACHE:
        return _CACHE[t]
    simples = _simple_roots_euclid(t.family, t.rank)
    n = t.rank
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            num = 2 * _dot(simples[i], simples[j])
            den = _dot(simples[j], simples[j])
            if num % den != 0:
                raise AssertionError("non-integral Cartan pairing")
            cartan[i][j] = num // den
    coords = _generate_roots(cartan, n)
    euclid = [
        tuple(sum(c[i] * simples[i][k] for i in range(n)) for k in range(len(simples[0])))
        for c in coords
    ]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if cartan[i][j] != 0:
                mult = cartan[i][j] * cartan[j][i]
                short: int | None = None
                if mult > 1:
                    # entry 2(a_i, a_j)/(a_j, a_j) is large when a_j is short
                    short = j if abs(cartan[i][j]) > 1 else i
                edges.append(Edge(i, j, mult, short))
    degrees = _degrees(t.family, t.rank)
    worder = _weyl_order(t.family, t.rank)
    npos = len(coords)
    h = 2 * npos // n
    if max(degrees) != h:
        raise AssertionError("degree table disagrees with Coxeter number")
    if sum(d - 1 for d in degrees) != npos:
        raise AssertionError("degree table disagrees with root count")
    prod = 1
    for d in degrees:
        prod *= d
    if prod != worder:
        raise AssertionError("Weyl order disagrees with degree product")
    rs = RootSystem(
        dynkin_type=t,
        simple_roots=tuple(tuple(v) for v in simples),
        positive_roots=tuple(euclid),
        positive_root_coords=tuple(coords),
        cartan_matrix=tuple(tuple(row) for row in cartan),
        edges=tuple(edges),
        fundamental_degrees=tuple(degrees),
        coxeter_number=h,
        weyl_order=worder,
    )
    _CACHE[t] = rs
    return rs


def coxeter_number(rs: RootSystem) -> int:
    return rs.coxeter_number


def fundamental_degrees(rs: RootSystem) -> tuple[int, ...]:
    return rs.fundamental_degrees


def simple_reflection_weights(rs: RootSystem, i: int, v) -> tuple[int, ...]:
    """Reflect an integer weight vector in the i-th simple root.

    Args:
        v: vector in the same Euclidean coordinates as rs.simple_roots.

    Returns:
        s_i(v) = v - <v, alpha_i^vee> alpha_i as a tuple of ints.
    """
    alpha = rs.simple_roots[i]
    vv = tuple(int(x) for x in v)
    num = 2 * _dot(vv, alpha)
    den = _dot(alpha, alpha)
    if num % den != 0:
        raise ValueError("vector is not in the weight lattice of this realization")
    c = num // den
    return tuple(x - c * a for x, a in zip(vv, alpha))


def _identify_component(rs: RootSystem, nodes: list[int]) -> tuple[DynkinType, tuple[int, ...]]:
    """Type a connected induced subdiagram and return its Bourbaki embedding."""
    nodeset = set(nodes)
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    edge_info: dict[tuple[int, int], Edge] = {}
    for e in rs.edges:
        if e.a in nodeset and e.b in nodeset:
            adj[e.a].append(e.b)
            adj[e.b].append(e.a)
            edge_info[(e.a, e.b)] = e
            edge_info[(e.b, e.a)] = e
    n = len(nodes)
    if n == 1:
        return DynkinType("A", 1), (nodes[0],)

    def path_from(start: int) -> list[int]:
        out = [start]
        prev = None
        cur = start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                return out
            prev, cur = cur, nxt[0]
            out.append(cur)

    multi = [e for e in set(edge_info.values()) if e.multiplicity > 1]
    if multi:
        e = multi[0]
        if e.multiplicity == 3:
            long = e.a if e.short == e.b else e.b
            return DynkinType("G", 2), (e.short, long)  # type: ignore[arg-type]
        if n == 2:
            long = e.a if e.short == e.b else e.b
            return DynkinType("C", 2), (e.short, long)  # type: ignore[arg-type]
        short = e.short
        long = e.a if short == e.b else e.b
        assert short is not None
        deg = {v: len(adj[v]) for v in nodes}
        if max(deg.values()) > 2:
            raise ValueError("branched diagram with a multiple bond is unsupported")
        if deg[short] == 1:
            # short leaf at the arrow head: type B, chain ends at it
            ends = [v for v in nodes if deg[v] == 1 and v != short]
            emb = path_from(ends[0])
            return DynkinType("B", n), tuple(emb)
        if deg[long] == 1:
            # long leaf: type C, chain ends at it
            ends = [v for v in nodes if deg[v] == 1 and v != long]
            emb = path_from(ends[0])
            return DynkinType("C", n), tuple(emb)
        # interior double bond: F4
        if n != 4:
            raise ValueError("interior double bond only occurs in F4")
        # order: far long, near long, near short, far short
        start = [v for v in nodes if len(adj[v]) == 1 and _reaches(adj, v, long, short)][0]
        return DynkinType("F", 4), tuple(path_from(start))

    deg = {v: len(adj[v]) for v in nodes}
    maxdeg = max(deg.values())
    if maxdeg <= 2:
        ends = sorted(v for v in nodes if deg[v] == 1)
        emb = path_from(ends[0])
        return DynkinType("A", n), tuple(emb)
    if maxdeg != 3 or sum(1 for v in nodes if deg[v] == 3) != 1:
        raise ValueError("unsupported branched diagram")
    center = [v for v in nodes if deg[v] == 3][0]
    arms = []
    for w in sorted(adj[center]):
        arm = [w]
        prev, cur = center, w
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), a[0]))
    lens = [len(a) for a in arms]
    if lens[0] == 1 and lens[1] == 1:
        # D_n: long arm reversed, then center, then the two leaves
        long_arm = arms[2]
        chain = list(reversed(long_arm)) + [center]
        fork = sorted([arms[0][0], arms[1][0]])
        return DynkinType("D", n), tuple(chain + fork)
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        # E6/E7/E8: center is alpha4, the 1-arm is alpha2,
        # the first 2-arm is (alpha3, alpha1), the last arm is alpha5..
        a2 = arms[0][0]
        near3, far1 = arms[1][0], arms[1][1]
        tail = arms[2]
        emb = [far1, a2, near3, center] + tail
        return DynkinType("E", n), tuple(emb)
    raise ValueError("unsupported branched diagram shape %r" % (lens,))


def _reaches(adj: dict[int, list[int]], leaf: int, target: int, blocked: int) -> bool:
    # True if walking the path from `leaf` hits `target` before `blocked`
    prev = None
    cur = leaf
    while True:
        if cur == target:
            return True
        if cur == blocked:
            return False
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt:
            return False
        prev, cur = cur, nxt[0]


def levi_factors(rs: RootSystem, subset) -> LeviSubset:
    """Split a subset of simple roots into typed connected factors.

    Each factor's claimed type is validated by comparing the induced
    Cartan submatrix with the standard one under the embedding.
    """
    sub = frozenset(int(i) for i in subset)
    for i in sub:
        if not 0 <= i < rs.rank:
            raise ValueError("simple root index %d out of range" % i)
    remaining = set(sub)
    comps: list[list[int]] = []
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in rs.neighbors(v):
                if w in remaining and w not in comp:
                    comp.add(w)
                    frontier.append(w)
        remaining -= comp
        comps.append(sorted(comp))
    factors = []
    for comp in comps:
        dt, emb = _identify_component(rs, comp)
        std = build_root_system(dt)
        for k in range(dt.rank):
            for l in range(dt.rank):
                if std.cartan_matrix[k][l] != rs.cartan_matrix[emb[k]][emb[l]]:
                    raise AssertionError(
                        "embedding of %s factor fails Cartan check" % dt.name
                    )
        factors.append((dt, emb))
    factors.sort(key=lambda f: min(f[1]))
    return LeviSubset(ambient=rs, subset=sub, factors=tuple(factors))


_GROUP_ALIASES = {
    "GSP4": DynkinType("C", 2, central_torus=1),
    "SP4": DynkinType("C", 2),
    "SP6": DynkinType("C", 3),
    "SP8": DynkinType("C", 4),
}


def parse_group(name: str) -> DynkinType:
    """Parse a group name like GL3, SL4, SO7, Sp6, GSp4, D5 or E7."""
    s = name.strip().upper()
    if s in _GROUP_ALIASES:
        return _GROUP_ALIASES[s]
    if s.startswith("GL") and s[2:].isdigit():
        n = int(s[2:])
        return DynkinType("A", n - 1, central_torus=1)
    if s.startswith("SL") and s[2:].isdigit():
        n = int(s[2:])
        return DynkinType("A", n - 1)
    if s.startswith("SO") and s[2:].isdigit():
        n = int(s[2:])
        if n % 2 == 1:
            return DynkinType("B", (n - 1) // 2)
        return DynkinType("D", n // 2)
    if len(s) >= 2 and s[0] in _RANK_RULES and s[1:].isdigit():
        return DynkinType(s[0], int(s[1:]))
    raise ValueError("cannot parse group name %r" % (name,))
