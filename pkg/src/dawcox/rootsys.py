"""Exact affine root-system data.

Everything is computed over the rationals in the coordinate basis
(alpha_1, ..., alpha_n, delta, Lambda0) of the affine weight space.  The
affine Cartan matrices follow Kac's Tables Aff 1-3 with his conventional
node numbering (node 0 is the affine node).  Marks are stored with each
table entry; comarks, the symmetrizing weights d_i, the lattices M and
nu(Q^v), and the distinguished roots theta, phi, theta', phi' are all
derived from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Vec = tuple[Fraction, ...]

_F0 = Fraction(0)
_F1 = Fraction(1)


def _vec(values) -> Vec:
    return tuple(Fraction(v) for v in values)


def vadd(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def vneg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def vscale(c, x: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in x)


def vzero(dim: int) -> Vec:
    return (_F0,) * dim


class UnknownTypeError(ValueError):
    """Raised for affine labels outside Tables Aff 1-3."""


# Edge list entries are (i, j, a_ij, a_ji) with A[i][j] = a_ij.  `marks`
# is the right null vector of A normalized so that it is primitive.
# Ranks are validated by the builder functions below.

def _chain(nodes, a=-1, b=-1):
    return [(i, j, a, b) for i, j in zip(nodes, nodes[1:])]


def _affine_table(kind: str, n: int):
    """Return (edges, marks) for the affine Cartan matrix of the type."""
    if kind == "A" and n == 1:
        return [(0, 1, -2, -2)], [1, 1]
    if kind == "A" and n >= 2:
        edges = _chain(list(range(n + 1))) + [(0, n, -1, -1)]
        return edges, [1] * (n + 1)
    if kind == "B" and n >= 3:
        edges = [(0, 2, -1, -1), (1, 2, -1, -1)]
        edges += _chain(list(range(2, n)))
        edges += [(n - 1, n, -1, -2)]
        return edges, [1, 1] + [2] * (n - 1)
    if kind == "C" and n >= 2:
        edges = [(0, 1, -1, -2)] + _chain(list(range(1, n))) + [(n - 1, n, -2, -1)]
        return edges, [1] + [2] * (n - 1) + [1]
    if kind == "D" and n >= 4:
        edges = [(0, 2, -1, -1), (1, 2, -1, -1)]
        edges += _chain(list(range(2, n - 1)))
        edges += [(n - 2, n - 1, -1, -1), (n - 2, n, -1, -1)]
        return edges, [1, 1] + [2] * (n - 3) + [1, 1]
    if kind == "E" and n == 6:
        edges = _chain([1, 2, 3, 4, 5]) + [(3, 6, -1, -1), (6, 0, -1, -1)]
        return edges, [1, 1, 2, 3, 2, 1, 2]
    if kind == "E" and n == 7:
        edges = _chain([0, 1, 2, 3, 4, 5, 6]) + [(3, 7, -1, -1)]
        return edges, [1, 2, 3, 4, 3, 2, 1, 2]
    if kind == "E" and n == 8:
        edges = _chain([0, 1, 2, 3, 4, 5, 6, 7]) + [(5, 8, -1, -1)]
        return edges, [1, 2, 3, 4, 5, 6, 4, 2, 3]
    if kind == "F" and n == 4:
        edges = [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
        return edges, [1, 2, 3, 4, 2]
    if kind == "G" and n == 2:
        edges = [(0, 1, -1, -1), (1, 2, -1, -3)]
        return edges, [1, 2, 3]
    if kind == "A2:even" and n == 1:  # A_2^(2)
        return [(0, 1, -4, -1)], [2, 1]
    if kind == "A2:even" and n >= 2:  # A_{2n}^{(2)}
        edges = [(0, 1, -2, -1)] + _chain(list(range(1, n))) + [(n - 1, n, -2, -1)]
        return edges, [2] * n + [1]
    if kind == "A2:odd" and n == 2:  # A_3^(2), fork collapses to the middle node
        return [(0, 2, -2, -1), (1, 2, -2, -1)], [1, 1, 1]
    if kind == "A2:odd" and n >= 3:  # A_{2n-1}^{(2)}
        edges = [(0, 2, -1, -1), (1, 2, -1, -1)]
        edges += _chain(list(range(2, n)))
        edges += [(n - 1, n, -2, -1)]
        return edges, [1, 1] + [2] * (n - 2) + [1]
    if kind == "D2" and n >= 2:  # D_{n+1}^{(2)}
        edges = [(0, 1, -2, -1)] + _chain(list(range(1, n))) + [(n - 1, n, -1, -2)]
        return edges, [1] * (n + 1)
    if kind == "E62" and n == 4:  # E_6^{(2)}
        edges = [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
        return edges, [1, 2, 3, 2, 1]
    if kind == "D43" and n == 2:  # D_4^{(3)}
        edges = [(0, 1, -1, -1), (1, 2, -3, -1)]
        return edges, [1, 2, 1]
    raise UnknownTypeError(f"no affine Cartan data for kind={kind!r} rank={n}")


@dataclass(frozen=True)
class AffineLabel:
    """A Kac label X_N^(r), stored as (letter, N, twist)."""

    letter: str
    N: int
    twist: int

    def __str__(self) -> str:
        return f"{self.letter}{self.N}({self.twist})"

    @property
    def rank(self) -> int:
        if self.twist == 1:
            return self.N
        if self.letter == "A":
            return self.N // 2 if self.N % 2 == 0 else (self.N + 1) // 2
        if self.letter == "D" and self.twist == 2:
            return self.N - 1
        if self.letter == "E":
            return 4
        if self.letter == "D" and self.twist == 3:
            return 2
        raise UnknownTypeError(str(self))


def parse_label(text: str) -> AffineLabel:
    text = text.strip().replace(" ", "")
    for twist in (1, 2, 3):
        suffix = f"({twist})"
        if text.endswith(suffix):
            body = text[: -len(suffix)]
            letter, num = body[0], body[1:]
            if letter in "ABCDEFG" and num.isdigit():
                return AffineLabel(letter, int(num), twist)
    raise UnknownTypeError(f"cannot parse affine label {text!r}")


def _table_key(label: AffineLabel) -> tuple[str, int]:
    L, N, r = label.letter, label.N, label.twist
    if r == 1:
        if L == "A" and N >= 1:
            return "A", N
        if L == "B" and N >= 3:
            return "B", N
        if L == "C" and N >= 2:
            return "C", N
        if L == "D" and N >= 4:
            return "D", N
        if L == "E" and N in (6, 7, 8):
            return "E", N
        if L == "F" and N == 4:
            return "F", 4
        if L == "G" and N == 2:
            return "G", 2
    if r == 2:
        if L == "A" and N >= 2 and N % 2 == 0:
            return "A2:even", N // 2
        if L == "A" and N >= 3 and N % 2 == 1:
            return "A2:odd", (N + 1) // 2
        if L == "D" and N >= 3:
            return "D2", N - 1
        if L == "E" and N == 6:
            return "E62", 4
    if r == 3 and L == "D" and N == 4:
        return "D43", 2
    raise UnknownTypeError(f"{label} is not in Tables Aff 1-3")


def _left_null_primitive(a: list[list[int]]) -> list[Fraction]:
    """Primitive nonnegative left null vector of an integer matrix."""
    m = len(a)
    # Solve x^T a = 0 by Gaussian elimination on a^T x = 0.
    rows = [[Fraction(a[i][j]) for i in range(m)] for j in range(m)]
    x = [None] * m
    pivots = []
    col = 0
    for r in range(m):
        piv = next((c for c in range(col, m) if rows[r][c] != 0), None)
        if piv is None:
            continue
        pivots.append((r, piv))
        pr = rows[r]
        for r2 in range(m):
            if r2 != r and rows[r2][piv] != 0:
                f = rows[r2][piv] / pr[piv]
                rows[r2] = [v2 - f * v1 for v1, v2 in zip(pr, rows[r2])]
    free = [c for c in range(m) if c not in {p for _, p in pivots}]
    assert len(free) == 1, "affine Cartan matrix must have corank 1"
    sol = [Fraction(0)] * m
    sol[free[0]] = Fraction(1)
    for r, piv in reversed(pivots):
        s = sum(rows[r][c] * sol[c] for c in range(m) if c != piv)
        sol[piv] = -s / rows[r][piv]
    lcm = 1
    for v in sol:
        lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
    sol = [v * lcm for v in sol]
    if sol[0] < 0:
        sol = [-v for v in sol]
    g = 0
    for v in sol:
        g = _gcd(g, v.numerator)
    return [v / g for v in sol]


def _gcd(a: int, b: int) -> int:
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class AffineCartanData:
    label: AffineLabel
    cartan: tuple[tuple[int, ...], ...]  # (n+1) x (n+1)
    marks: tuple[int, ...]               # a_0 .. a_n
    comarks: tuple[int, ...]             # a_0^v .. a_n^v
    d: tuple[Fraction, ...]              # d_i = a_i / a_i^v
    e: tuple[Fraction, ...]              # e_i = max(1/a_0, d_i)
    twist: int                           # r = max d_i^{-1}

    @property
    def n(self) -> int:
        return len(self.marks) - 1

    @property
    def a0(self) -> int:
        return self.marks[0]


def affine_cartan(label: AffineLabel) -> AffineCartanData:
    kind, n = _table_key(label)
    edges, marks = _affine_table(kind, n)
    m = n + 1
    a = [[0] * m for _ in range(m)]
    for i in range(m):
        a[i][i] = 2
    for i, j, aij, aji in edges:
        a[i][j] = aij
        a[j][i] = aji
    marks = [int(x) for x in marks]
    # Sanity: marks are the right null vector.
    for i in range(m):
        assert sum(a[i][j] * marks[j] for j in range(m)) == 0, (label, i)
    comarks_f = _left_null_primitive(a)
    assert comarks_f[0] == 1, f"a_0^v != 1 for {label}"
    comarks = [int(x) for x in comarks_f]
    d = tuple(Fraction(marks[i], comarks[i]) for i in range(m))
    a0inv = Fraction(1, marks[0])
    e = tuple(max(a0inv, di) for di in d)
    twist = max(Fraction(1) / di for di in d)
    assert twist.denominator == 1
    return AffineCartanData(
        label=label,
        cartan=tuple(tuple(row) for row in a),
        marks=tuple(marks),
        comarks=tuple(comarks),
        d=d,
        e=e,
        twist=int(twist),
    )


@dataclass(frozen=True)
class RootSystemData:
    """An affine Cartan datum together with the finite root system.

    Vectors live in the (n+2)-dimensional space with ordered basis
    (alpha_1, ..., alpha_n, delta, Lambda0).
    """

    cartan: AffineCartanData
    gram: tuple[Vec, ...]               # bilinear form on the basis
    simple_roots: tuple[Vec, ...]       # alpha_1 .. alpha_n
    alpha0: Vec                         # (delta - theta) / a_0
    delta: Vec
    Lambda0: Vec
    pos_roots: tuple[Vec, ...]          # finite positive roots
    theta: Vec                          # a_1 alpha_1 + ... + a_n alpha_n
    phi: Vec                            # highest root of the finite system
    root_set: frozenset = field(repr=False)

    @property
    def n(self) -> int:
        return self.cartan.n

    @property
    def dim(self) -> int:
        return self.n + 2

    @property
    def label(self) -> AffineLabel:
        return self.cartan.label

    @property
    def twist(self) -> int:
        return self.cartan.twist

    @property
    def a0(self) -> int:
        return self.cartan.a0

    # -- bilinear form ------------------------------------------------

    def bilinear(self, x: Vec, y: Vec) -> Fraction:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        total = _F0
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.gram[i]
            total += xi * sum(yj * row[j] for j, yj in enumerate(y) if yj)
        return total

    def coroot(self, x: Vec) -> Vec:
        """nu(x^v) = 2x/(x,x) for a real (non-isotropic) root x."""
        norm = self.bilinear(x, x)
        if norm == 0:
            raise ValueError("isotropic vector has no coroot")
        return vscale(Fraction(2) / norm, x)

    def pairing(self, x: Vec, root: Vec) -> Fraction:
        """(x, root^v)."""
        return self.bilinear(x, self.coroot(root))

    # -- distinguished data -------------------------------------------

    def simple_coroots(self) -> tuple[Vec, ...]:
        return tuple(self.coroot(a) for a in self.simple_roots)

    @property
    def theta_prime(self) -> Vec:
        """phi - theta (zero in the untwisted / A_{2n}^(2) cases)."""
        return vsub(self.phi, self.theta)

    @property
    def phi_prime(self) -> Vec:
        """The long root -s_theta(phi); its coroot is theta^v - phi^v."""
        x = self.pairing(self.phi, self.theta)
        return vsub(vscale(x, self.theta), self.phi)

    def is_twisted_proper(self) -> bool:
        """Twisted and not A_{2n}^(2): theta short, phi long, distinct."""
        return self.theta != self.phi

    def m_basis(self) -> tuple[Vec, ...]:
        """A_i = e_i alpha_i, a basis of the lattice M."""
        return tuple(
            vscale(self.cartan.e[i + 1], a) for i, a in enumerate(self.simple_roots)
        )

    def m_basis_dual(self) -> tuple[Vec, ...]:
        return tuple(self.coroot(a) for a in self.m_basis())

    def qcheck_basis(self) -> tuple[Vec, ...]:
        """nu(alpha_i^v), a basis of nu(Q^v) of the finite system."""
        return self.simple_coroots()

    def in_lattice(self, x: Vec, basis: Sequence[Vec]) -> bool:
        coeffs = self.lattice_coords(x, basis)
        return coeffs is not None

    def lattice_coords(self, x: Vec, basis: Sequence[Vec]):
        """Integer coordinates of the finite vector x in the given basis."""
        n = self.n
        if any(x[n:]):
            return None
        mat = [[basis[j][i] for j in range(n)] for i in range(n)]
        rhs = list(x[:n])
        coeffs = _solve(mat, rhs)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            return None
        return tuple(int(c) for c in coeffs)

    def max_root_norm(self) -> Fraction:
        norms = {self.bilinear(a, a) for a in self.pos_roots}
        norms.add(self.bilinear(self.alpha0, self.alpha0))
        return max(norms)

    def i_theta(self) -> int:
        """1-based index of the finite node attached to the affine node."""
        cand = [
            i + 1
            for i, a in enumerate(self.simple_roots)
            if self.bilinear(self.theta, a) != 0
        ]
        return cand[0]

    def i_phi(self) -> int:
        """The unique finite node not orthogonal to phi (twisted case)."""
        cand = [
            i + 1
            for i, a in enumerate(self.simple_roots)
            if self.bilinear(self.phi, a) != 0
        ]
        assert len(cand) == 1
        return cand[0]

    def ell0(self) -> int:
        """Laces between node 0 and i_theta in the affine diagram."""
        a = self.cartan.cartan
        i = self.i_theta()
        return a[0][i] * a[i][0]

    def describe(self) -> dict:
        c = self.cartan
        return {
            "label": str(c.label),
            "rank": c.n,
            "twist": c.twist,
            "a0": c.a0,
            "marks": list(c.marks),
            "comarks": list(c.comarks),
            "num_positive_roots": len(self.pos_roots),
        }


def _solve(mat, rhs):
    """Solve a square rational linear system; None if singular."""
    n = len(rhs)
    m = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pr = m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / pr[col]
                m[r] = [v2 - f * v1 for v1, v2 in zip(pr, m[r])]
    return [m[i][n] / m[i][i] for i in range(n)]


def build(label: AffineLabel | str) -> RootSystemData:
    """Build the full root-system datum for a Kac label."""
    if isinstance(label, str):
        label = parse_label(label)
    cartan = affine_cartan(label)
    n = cartan.n
    dim = n + 2
    IDELTA, ILAM = n, n + 1

    simple = []
    for i in range(n):
        v = [_F0] * dim
        v[i] = _F1
        simple.append(tuple(v))
    delta = [_F0] * dim
    delta[IDELTA] = _F1
    delta = tuple(delta)
    lam0 = [_F0] * dim
    lam0[ILAM] = _F1
    lam0 = tuple(lam0)

    # Gram matrix: (alpha_i, alpha_j) = d_i^{-1} a_ij on finite nodes,
    # delta orthogonal to everything but Lambda0, (delta, Lambda0) = 1.
    gram = [[_F0] * dim for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            gram[i][j] = cartan.cartan[i + 1][j + 1] / cartan.d[i + 1]
    gram[IDELTA][ILAM] = _F1
    gram[ILAM][IDELTA] = _F1
    for i in range(dim):
        for j in range(dim):
            assert gram[i][j] == gram[j][i], "form must be symmetric"
    gram = tuple(tuple(row) for row in gram)

    theta = [_F0] * dim
    for i in range(n):
        theta[i] = Fraction(cartan.marks[i + 1])
    theta = tuple(theta)
    alpha0 = vscale(Fraction(1, cartan.a0), vsub(delta, theta))

    rs = RootSystemData(
        cartan=cartan,
        gram=gram,
        simple_roots=tuple(simple),
        alpha0=alpha0,
        delta=delta,
        Lambda0=lam0,
        pos_roots=(),
        theta=theta,
        phi=theta,
        root_set=frozenset(),
    )
    pos = _enumerate_positive_roots(rs)
    phi = _highest_root(rs, pos)
    all_roots = frozenset(pos) | frozenset(vneg(r) for r in pos)
    object.__setattr__(rs, "pos_roots", tuple(pos))
    object.__setattr__(rs, "phi", phi)
    object.__setattr__(rs, "root_set", all_roots)
    return rs


def _enumerate_positive_roots(rs: RootSystemData) -> list[Vec]:
    """Finite roots as the closure of the simple roots under reflections."""
    simple = rs.simple_roots
    coroots = [rs.coroot(a) for a in simple]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a, av in zip(simple, coroots):
                w = vsub(v, vscale(rs.bilinear(v, a) * 2 / rs.bilinear(a, a), a))
                # w = s_a(v) spelled out to avoid recomputing coroots
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    pos = [v for v in seen if _is_positive(v, rs.n)]
    assert 2 * len(pos) == len(seen)
    pos.sort(key=lambda v: (sum(v[: rs.n]), v))
    return pos


def _is_positive(v: Vec, n: int) -> bool:
    for c in v[:n]:
        if c > 0:
            return True
        if c < 0:
            return False
    return False


def _highest_root(rs: RootSystemData, pos: list[Vec]) -> Vec:
    # The highest root is the unique positive root of maximal height that
    # is dominant; for our systems maximal height suffices.
    best = max(pos, key=lambda v: sum(v[: rs.n]))
    for a in rs.simple_roots:
        assert rs.bilinear(best, a) >= 0, "highest root must be dominant"
    return best


def to_json(rs: RootSystemData) -> dict:
    """JSON-friendly dump of the Cartan data and finite roots."""
    d = rs.describe()
    d["positive_roots"] = [[str(c) for c in r[: rs.n]] for r in rs.pos_roots]
    d["theta"] = [str(c) for c in rs.theta[: rs.n]]
    d["phi"] = [str(c) for c in rs.phi[: rs.n]]
    return d
