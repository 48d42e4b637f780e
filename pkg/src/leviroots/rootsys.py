"""Root systems of the simple Lie algebras, generated from Cartan data.

Roots live in a single universal coordinate system: the integer
coefficient vector over the simple roots, as a plain tuple.  Node
numbering follows Bourbaki (1-based at the API and CLI surface), and
Cartan matrices are stored in the column convention
``a[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``, the one printed
in the standard tables.  See docs/conventions.md for the full table.

The invariant bilinear form is the symmetrized Cartan form
``G = A . diag(d)`` with minimal positive integer symmetrizers ``d``;
it agrees with the Killing form restricted to the Cartan subalgebra up
to one positive scalar per simple algebra, so sign and integrality
statements are normalization-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidCartan, InvalidRank, NotFiniteType
from .exactlin import RatVec

Root = tuple[int, ...]
CartanMatrix = tuple[tuple[int, ...], ...]

FAMILIES = "ABCDEFG"

#: Inclusive rank ranges per family; None means unbounded above.
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

#: Ranks above this are rejected by default to keep closure honest-sized.
DEFAULT_MAX_RANK = 12


@dataclass(frozen=True, order=True)
class SimpleType:
    """One of the simple types A1..G2, e.g. SimpleType('E', 8)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RANGE:
            raise InvalidRank(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(f"{self.family}{self.rank} is not a simple type")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in _RANK_RANGE or not text[1:].isdigit():
            raise InvalidRank(f"cannot parse simple type from {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _chain(rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(stype: SimpleType, max_rank: int = DEFAULT_MAX_RANK) -> CartanMatrix:
    """Bourbaki Cartan matrix of a simple type (column convention)."""
    n = stype.rank
    if n > max_rank:
        raise InvalidRank(f"rank {n} exceeds the configured maximum {max_rank}")
    fam = stype.family
    a = _chain(n)
    if fam == "B":
        # last simple root short
        a[n - 2][n - 1] = -2
    elif fam == "C":
        # last simple root long
        a[n - 1][n - 2] = -2
    elif fam == "D":
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif fam == "E":
        # chain 1-3-4-5-..-n with node 2 hanging off node 4
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        for i, j in edges:
            if i <= n and j <= n:
                a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif fam == "F":
        # nodes 1,2 long; 3,4 short
        a[1][2] = -2
    elif fam == "G":
        # node 1 short, node 2 long
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def symmetrizers(cartan: CartanMatrix) -> tuple[int, ...]:
    """Minimal positive integers d with a[i][j]*d[j] == a[j][i]*d[i].

    d[i] is proportional to half the square length of the i-th simple
    root, so G = A.diag(d) is the integer Gram matrix of the form.
    """
    n = len(cartan)
    vals: list[Fraction | None] = [None] * n
    vals[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if i == j or cartan[i][j] == 0:
                continue
            ratio = Fraction(cartan[j][i], cartan[i][j])  # d_j / d_i
            want = vals[i] * ratio
            if vals[j] is None:
                vals[j] = want
                queue.append(j)
            elif vals[j] != want:
                raise InvalidCartan("matrix is not symmetrizable")
    if any(v is None for v in vals):
        raise InvalidCartan("matrix is decomposable")
    denom_lcm = 1
    for v in vals:
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _validate_cartan(cartan: CartanMatrix) -> None:
    n = len(cartan)
    if n == 0:
        raise InvalidCartan("empty matrix")
    for i, row in enumerate(cartan):
        if len(row) != n:
            raise InvalidCartan("matrix is not square")
        if row[i] != 2:
            raise InvalidCartan(f"diagonal entry a[{i}][{i}] != 2")
        for j, x in enumerate(row):
            if i != j:
                if not isinstance(x, int) or x > 0:
                    raise InvalidCartan(f"off-diagonal a[{i}][{j}] must be a nonpositive integer")
                if (x == 0) != (cartan[j][i] == 0):
                    raise InvalidCartan(f"zero pattern not symmetric at ({i},{j})")


def _max_positive_count(rank: int) -> int:
    # largest number of positive roots any simple type of this rank has
    special = {2: 6, 4: 24, 6: 36, 7: 63, 8: 120}
    return max(rank * rank, special.get(rank, 0))


class RootSystem:
    """An irreducible finite root system with its exact bilinear form.

    Attributes
    ----------
    stype : SimpleType or None (None when built from an explicit matrix
        whose classification the caller did not supply)
    cartan : Cartan matrix (column convention)
    d : integer symmetrizers, d[i] = half square length of alpha_i
    gram : integer Gram matrix of the simple roots, gram[i][j] = a[i][j]*d[j]
    positives : positive roots sorted by (height, lex)
    roots : frozenset of all roots
    highest_root : the unique root of maximal height
    marks : coefficients of the highest root
    """

    __slots__ = (
        "stype", "rank", "cartan", "d", "gram", "positives", "roots",
        "highest_root", "marks", "_base", "_pows", "_enc_roots",
        "_enc_with_zero", "_by_enc",
    )

    def __init__(self, stype, cartan, d, positives):
        self.stype = stype
        self.rank = len(cartan)
        self.cartan = cartan
        self.d = d
        self.gram = tuple(
            tuple(cartan[i][j] * d[j] for j in range(self.rank)) for i in range(self.rank)
        )
        self.positives = positives
        self.roots = frozenset(positives) | {tuple(-c for c in r) for r in positives}
        self.highest_root = positives[-1]
        if len(positives) > 1 and sum(positives[-2]) == sum(positives[-1]):
            raise NotFiniteType("highest root is not unique; matrix is not irreducible")
        self.marks = self.highest_root
        # integer encoding: collision-free for coordinate vectors bounded by 2*max(marks)
        self._base = 4 * max(self.marks) + 1
        self._pows = tuple(self._base ** i for i in range(self.rank))
        self._by_enc = {self.encode(r): r for r in self.roots}
        self._enc_roots = frozenset(self._by_enc)
        self._enc_with_zero = self._enc_roots | {0}

    # -- basic queries ------------------------------------------------

    def encode(self, coeffs) -> int:
        """Positional integer encoding of a coefficient vector."""
        pows = self._pows
        return sum(c * pows[i] for i, c in enumerate(coeffs))

    def decode(self, enc: int) -> Root:
        return self._by_enc[enc]

    def is_root(self, coeffs) -> bool:
        return tuple(coeffs) in self.roots

    def form(self, v, w):
        """Symmetrized Cartan form of two coefficient vectors.

        Exact: integer for integer vectors, Fraction otherwise.
        """
        gram = self.gram
        total = 0
        for i, vi in enumerate(v):
            if vi == 0:
                continue
            row = gram[i]
            acc = 0
            for j, wj in enumerate(w):
                if wj != 0:
                    acc += row[j] * wj
            total += vi * acc
        return total

    def root_height(self, root: Root) -> int:
        return sum(root)

    # -- serialization ------------------------------------------------

    def document(self) -> dict:
        """Versioned JSON-ready description (see docs/schemas.md)."""
        return {
            "schema": "leviroots.rootsystem/1",
            "type": str(self.stype) if self.stype else None,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "d": list(self.d),
            "count": len(self.roots),
            "positives": [list(r) for r in self.positives],
            "highest_root": list(self.highest_root),
            "marks": list(self.marks),
        }

    def __repr__(self) -> str:
        name = str(self.stype) if self.stype else f"rank-{self.rank}"
        return f"RootSystem({name}, {len(self.roots)} roots)"


def generate(cartan, stype: SimpleType | None = None) -> RootSystem:
    """Generate the full root system from an indecomposable Cartan matrix.

    Breadth-first root-string closure: a positive root phi extends by
    the simple root alpha_i exactly when the string bound
    q = p - <phi, alpha_i^vee> is positive, where p counts the steps
    already available downward.  All arithmetic is integer.

    Raises NotFiniteType when closure overruns the classical root-count
    bound for the rank, and InvalidCartan for malformed input.
    """
    cartan = tuple(tuple(row) for row in cartan)
    _validate_cartan(cartan)
    d = symmetrizers(cartan)  # also rejects decomposable/unsymmetrizable
    n = len(cartan)
    bound = _max_positive_count(n)

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known: set[Root] = set(simples)
    level = list(simples)
    positives: list[Root] = list(simples)
    height = 1
    while level:
        height += 1
        if height > 2 * bound:
            raise NotFiniteType("root-string closure did not terminate")
        nxt: set[Root] = set()
        for phi in level:
            for i in range(n):
                # pairing <phi, alpha_i^vee> = sum_j phi_j * a[j][i]
                c = sum(phi[j] * cartan[j][i] for j in range(n) if phi[j])
                # p = steps down the alpha_i string that are already roots
                p = 0
                cur = list(phi)
                while True:
                    cur[i] -= 1
                    if cur[i] < 0 or tuple(cur) not in known:
                        break
                    p += 1
                if p - c >= 1:
                    up = list(phi)
                    up[i] += 1
                    nxt.add(tuple(up))
        fresh = [r for r in nxt if r not in known]
        known.update(fresh)
        positives.extend(fresh)
        if len(positives) > bound:
            raise NotFiniteType(
                f"closure produced more than {bound} positive roots at rank {n}"
            )
        level = fresh
    positives.sort(key=lambda r: (sum(r), r))
    if any(c <= 0 for c in positives[-1]):
        raise NotFiniteType("highest root has a zero coefficient; matrix is decomposable")
    return RootSystem(stype, cartan, d, tuple(positives))


def root_system(name: str | SimpleType, max_rank: int = DEFAULT_MAX_RANK) -> RootSystem:
    """Convenience: build a named simple type's root system."""
    stype = name if isinstance(name, SimpleType) else SimpleType.parse(name)
    return generate(cartan_matrix(stype, max_rank=max_rank), stype)


#: Classical root counts, used as generation oracles in the test suite.
def classical_root_count(stype: SimpleType) -> int:
    n = stype.rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n, 0),
        "F": 48,
        "G": 12,
    }[stype.family]


def all_simple_types(max_rank: int) -> list[SimpleType]:
    """Every simple type of rank at most max_rank, deterministic order."""
    out = []
    for fam in FAMILIES:
        lo, hi = _RANK_RANGE[fam]
        top = min(hi if hi is not None else max_rank, max_rank)
        for r in range(lo, top + 1):
            out.append(SimpleType(fam, r))
    return out
