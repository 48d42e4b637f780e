"""t-root systems: restricted roots of a parabolic's Levi factor.

A parabolic designation keeps a subset of the simple roots (spanning
the semisimple part s of the Levi factor m) and deletes the rest.
Restricting a root phi to the center t of m amounts to reading off
phi's integer coefficients on the deleted nodes: that tuple is the
*key*, and it is the canonical identity of a t-root throughout this
package.  The rational projection vector is derived data, computed on
demand by orthogonal projection away from the kept span.

The central structural facts realized here, all certified
combinatorially on root sets:

* each t-root space g_nu is irreducible under m, witnessed by a unique
  highest-weight root and a unique lowest-weight root;
* bracket law [g_mu, g_nu] = g_{mu+nu}, realized as root-vector sums;
* sign rules linking the bilinear pairing of two t-roots to membership
  of their sum and difference;
* t-weight strings through the adjoint module are intervals with
  prescribed endpoint signs;
* the trace covector of the nilradical action is strictly positive on
  positive t-roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from . import exactlin
from .errors import InvalidDesignation, InvalidPair, IrreducibilityViolation
from .exactlin import RatVec
from .rootsys import Root, RootSystem

Key = tuple[int, ...]


class ParabolicDesignation:
    """A choice of kept simple-root nodes (1-based), kept != all."""

    __slots__ = ("rs", "kept", "deleted", "kept0", "deleted0")

    def __init__(self, rs: RootSystem, kept_nodes: Iterable[int]):
        kept = frozenset(kept_nodes)
        nodes = frozenset(range(1, rs.rank + 1))
        if not kept <= nodes:
            bad = sorted(kept - nodes)
            raise InvalidDesignation(f"node indices out of range: {bad}")
        if kept == nodes:
            raise InvalidDesignation("kept every node; the parabolic must be proper")
        self.rs = rs
        self.kept = kept
        self.deleted = tuple(sorted(nodes - kept))
        self.kept0 = tuple(sorted(k - 1 for k in kept))
        self.deleted0 = tuple(d - 1 for d in self.deleted)

    def __repr__(self) -> str:
        name = str(self.rs.stype) if self.rs.stype else f"rank-{self.rs.rank}"
        return f"ParabolicDesignation({name}, kept={sorted(self.kept)})"


def designation(rs: RootSystem, kept: Iterable[int] | None = None,
                deleted: Iterable[int] | None = None) -> ParabolicDesignation:
    """Build a designation from either the kept or the deleted node set."""
    if (kept is None) == (deleted is None):
        raise InvalidDesignation("give exactly one of kept= or deleted=")
    if kept is not None:
        return ParabolicDesignation(rs, kept)
    deleted = frozenset(deleted)
    nodes = frozenset(range(1, rs.rank + 1))
    if not deleted <= nodes:
        raise InvalidDesignation(f"node indices out of range: {sorted(deleted - nodes)}")
    if not deleted:
        raise InvalidDesignation("deleted no node; the parabolic must be proper")
    return ParabolicDesignation(rs, nodes - deleted)


def troot_of(des: ParabolicDesignation, root: Root) -> Key | None:
    """Key of the restriction of a root to the center; None iff it vanishes.

    The restriction is zero exactly when the root lives in the Levi
    factor (all coefficients on deleted nodes are zero).
    """
    key = tuple(root[d] for d in des.deleted0)
    return key if any(key) else None


@dataclass(frozen=True)
class TRootSpace:
    """One t-root space: all roots restricting to the same nonzero key."""

    key: Key
    roots: tuple[Root, ...]
    highest: Root
    lowest: Root

    @property
    def dim(self) -> int:
        return len(self.roots)


def _sorted_roots(roots: Iterable[Root]) -> tuple[Root, ...]:
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def highest_weight_roots(rs: RootSystem, roots: Iterable[Root],
                         raising: Iterable[Root]) -> list[Root]:
    """Roots phi with phi + alpha not a root (nor zero) for all raising alpha.

    These index the highest-weight vectors of the span of the given
    root vectors under the subalgebra whose simple raising set is
    ``raising``; their count is the number of irreducible summands
    whenever the weights are multiplicity-free.
    """
    hits = rs._enc_with_zero
    r_enc = [rs.encode(a) for a in raising]
    return [phi for phi in roots
            if all(rs.encode(phi) + a not in hits for a in r_enc)]


def lowest_weight_roots(rs: RootSystem, roots: Iterable[Root],
                        raising: Iterable[Root]) -> list[Root]:
    """Mirrored certificate: phi - alpha not a root (nor zero)."""
    hits = rs._enc_with_zero
    r_enc = [rs.encode(a) for a in raising]
    return [phi for phi in roots
            if all(rs.encode(phi) - a not in hits for a in r_enc)]


class TRootSystem:
    """All t-root spaces of one parabolic designation.

    Spaces are indexed by key; iteration and serialization order is
    (key height, key) ascending, so output is deterministic.
    """

    __slots__ = (
        "designation", "rs", "spaces", "keys", "positives", "simples",
        "delta_key", "key_bounds", "_kpows", "_key_encs", "_key_enc_with_zero",
        "_space_encs", "_beta", "_gram_t", "_gram_scaled", "_pairings",
    )

    def __init__(self, des: ParabolicDesignation):
        rs = des.rs
        self.designation = des
        self.rs = rs
        D = des.deleted0
        kept_enc = [rs._pows[k] for k in des.kept0]
        hits = rs._enc_with_zero

        groups: dict[Key, list[Root]] = {}
        for phi in rs.positives:
            key = tuple(phi[d] for d in D)
            if any(key):
                groups.setdefault(key, []).append(phi)

        spaces: dict[Key, TRootSpace] = {}
        for key, roots in groups.items():
            encs = [rs.encode(phi) for phi in roots]
            hw = [phi for phi, e in zip(roots, encs)
                  if all(e + a not in hits for a in kept_enc)]
            lw = [phi for phi, e in zip(roots, encs)
                  if all(e - a not in hits for a in kept_enc)]
            if len(hw) != 1 or len(lw) != 1:
                raise IrreducibilityViolation(
                    f"space {key} has {len(hw)} highest / {len(lw)} lowest weight roots"
                )
            pos_roots = _sorted_roots(roots)
            spaces[key] = TRootSpace(key, pos_roots, hw[0], lw[0])
            neg_key = tuple(-c for c in key)
            neg_roots = _sorted_roots(tuple(-c for c in phi) for phi in roots)
            spaces[neg_key] = TRootSpace(
                neg_key, neg_roots,
                tuple(-c for c in lw[0]), tuple(-c for c in hw[0]),
            )

        order = sorted(spaces, key=lambda k: (sum(k), k))
        self.spaces = {k: spaces[k] for k in order}
        self.keys = tuple(order)
        self.positives = tuple(k for k in order if all(c >= 0 for c in k))
        width = len(D)
        self.simples = tuple(
            tuple(1 if i == a else 0 for i in range(width)) for a in range(width)
        )
        for s in self.simples:
            if s not in self.spaces:  # alpha_j itself restricts to the unit key
                raise IrreducibilityViolation(f"unit key {s} missing from t-root set")
        delta = [0] * width
        for k in self.positives:
            dim = len(self.spaces[k].roots)
            for i, c in enumerate(k):
                delta[i] += dim * c
        self.delta_key = tuple(delta)
        self.key_bounds = tuple(rs.marks[d] for d in D)
        self._kpows = rs._pows[:width]
        self._key_encs = {k: self.key_enc(k) for k in order}
        self._key_enc_with_zero = frozenset(self._key_encs.values()) | {0}
        self._space_encs = {
            k: tuple(rs.encode(phi) for phi in spaces[k].roots) for k in order
        }
        self._beta = None
        self._gram_t = None
        self._gram_scaled = None
        self._pairings = {}

    # -- key arithmetic -------------------------------------------------

    def key_enc(self, key: Key) -> int:
        pows = self._kpows
        return sum(c * pows[i] for i, c in enumerate(key))

    def is_troot(self, key) -> bool:
        return tuple(key) in self.spaces

    def space(self, key) -> TRootSpace:
        return self.spaces[tuple(key)]

    # -- exact geometry ---------------------------------------------------

    def _ensure_form_data(self) -> None:
        if self._gram_t is not None:
            return
        rs = self.rs
        K = self.designation.kept0
        D = self.designation.deleted0
        gram = rs.gram
        if K:
            span = [[gram[a][b] for b in K] for a in K]
            rhss = [[gram[j][a] for a in K] for j in D]
            coeffs = exactlin.solve_many(span, rhss)
        else:
            coeffs = [() for _ in D]
        rank = rs.rank
        beta = []
        for idx, j in enumerate(D):
            vec = [Fraction(0)] * rank
            vec[j] = Fraction(1)
            for p, a in enumerate(K):
                vec[a] -= coeffs[idx][p]
            beta.append(tuple(vec))
        self._beta = tuple(beta)
        # (beta_x, beta_y) = (beta_x, alpha_{D_y}) since they differ by kept span
        gt = []
        for x in range(len(D)):
            row = []
            for y in range(len(D)):
                val = Fraction(gram[D[x]][D[y]])
                for p, a in enumerate(K):
                    val -= coeffs[x][p] * gram[a][D[y]]
                row.append(val)
            gt.append(tuple(row))
        self._gram_t = tuple(gt)
        scale = 1
        for row in gt:
            for v in row:
                scale = scale * v.denominator // gcd(scale, v.denominator)
        self._gram_scaled = tuple(
            tuple(int(v * scale) for v in row) for row in gt
        )

    def simple_troot_vectors(self) -> tuple[RatVec, ...]:
        """Projections of the deleted simple roots, in node order."""
        self._ensure_form_data()
        return self._beta

    def troot_vec(self, key: Sequence[int]) -> RatVec:
        """Rational vector of a key combination, in simple-root coordinates."""
        self._ensure_form_data()
        rank = self.rs.rank
        out = [Fraction(0)] * rank
        for c, b in zip(key, self._beta):
            if c:
                for i, v in enumerate(b):
                    if v:
                        out[i] += c * v
        return tuple(out)

    def inner(self, k1: Sequence[int], k2: Sequence[int]) -> Fraction:
        """Exact pairing of two key combinations under the ambient form."""
        self._ensure_form_data()
        gt = self._gram_t
        total = Fraction(0)
        for x, a in enumerate(k1):
            if a:
                row = gt[x]
                total += a * sum(row[y] * b for y, b in enumerate(k2) if b)
        return total

    def _pairing(self, key: Key) -> tuple[int, ...]:
        # integer vector G_scaled . key, memoized per key
        cached = self._pairings.get(key)
        if cached is None:
            self._ensure_form_data()
            gs = self._gram_scaled
            cached = tuple(
                sum(row[y] * b for y, b in enumerate(key) if b) for row in gs
            )
            self._pairings[key] = cached
        return cached

    def inner_sign(self, k1: Sequence[int], k2) -> int:
        """Sign of the pairing; integer fast path (form scaled positively)."""
        p = self._pairing(tuple(k2))
        s = sum(a * p[x] for x, a in enumerate(k1) if a)
        return (s > 0) - (s < 0)

    # -- serialization ----------------------------------------------------

    def document(self) -> dict:
        """Versioned JSON-ready description (see docs/schemas.md)."""
        des = self.designation
        return {
            "schema": "leviroots.trootsystem/1",
            "type": str(self.rs.stype) if self.rs.stype else None,
            "rank": self.rs.rank,
            "kept": sorted(des.kept),
            "deleted": list(des.deleted),
            "spaces": [
                {
                    "key": list(sp.key),
                    "dim": sp.dim,
                    "roots": [list(r) for r in sp.roots],
                    "highest": list(sp.highest),
                    "lowest": list(sp.lowest),
                }
                for sp in self.spaces.values()
            ],
            "simples": [list(k) for k in self.simples],
            "trace_vector": [exactlin.rat_str(v) for v in nilradical_trace(self)],
        }

    def __repr__(self) -> str:
        return (f"TRootSystem({self.designation!r}, "
                f"{len(self.keys)} t-roots)")


def troot_system(des: ParabolicDesignation) -> TRootSystem:
    """Group the roots by key and certify every space irreducible."""
    return TRootSystem(des)


def troot_inner(trsys: TRootSystem, mu, nu) -> Fraction:
    """Exact bilinear pairing of two t-roots (by key)."""
    return trsys.inner(tuple(mu), tuple(nu))


def troot_coroot(trsys: TRootSystem, nu) -> RatVec:
    """The covector 2*nu/(nu,nu), in simple-root coordinates."""
    key = tuple(nu)
    if not trsys.is_troot(key):
        raise InvalidPair(f"{key} is not a t-root here")
    norm = trsys.inner(key, key)
    return tuple(2 * v / norm for v in trsys.troot_vec(key))


def nilradical_trace(trsys: TRootSystem) -> RatVec:
    """Covector representing x -> trace(ad x | nilradical) on the center.

    Equals the dimension-weighted sum of the positive t-roots; it pairs
    strictly positively with every positive t-root.
    """
    return trsys.troot_vec(trsys.delta_key)


def bracket_image(trsys: TRootSystem, mu, nu) -> tuple[Root, ...]:
    """Root set of [g_mu, g_nu]: all root sums phi + phi'.

    Equals the full root set of g_{mu+nu} when mu+nu is a t-root and is
    empty otherwise.  Rejects mu + nu = 0, where the bracket lands in
    the Levi factor instead of a t-root space.
    """
    km, kn = tuple(mu), tuple(nu)
    if not (trsys.is_troot(km) and trsys.is_troot(kn)):
        raise InvalidPair("both arguments must be t-roots of this system")
    if all(a + b == 0 for a, b in zip(km, kn)):
        raise InvalidPair("mu + nu = 0: the bracket lands in the Levi factor")
    enc_roots = trsys.rs._enc_roots
    left = trsys._space_encs[km]
    right = trsys._space_encs[kn]
    out = {s for a in left for b in right if (s := a + b) in enc_roots}
    return _sorted_roots(trsys.rs.decode(s) for s in out)


class SignRuleReport(NamedTuple):
    mu: Key
    nu: Key
    inner_sign: int
    ok: bool
    failures: tuple[str, ...]


def sign_rule_check(trsys: TRootSystem, mu, nu) -> SignRuleReport:
    """Verify the pairing-sign membership rules for one pair of t-roots.

    Negative pairing forces mu + nu to be a t-root (when nonzero),
    positive pairing forces mu - nu (when nonzero), and zero pairing
    makes the two memberships equivalent.
    """
    km, kn = tuple(mu), tuple(nu)
    if not (trsys.is_troot(km) and trsys.is_troot(kn)):
        raise InvalidPair("both arguments must be t-roots of this system")
    s = trsys.inner_sign(km, kn)
    ksum = tuple(a + b for a, b in zip(km, kn))
    kdiff = tuple(a - b for a, b in zip(km, kn))
    sum_in = any(ksum) and ksum in trsys.spaces
    diff_in = any(kdiff) and kdiff in trsys.spaces
    failures = []
    if s < 0 and any(ksum) and not sum_in:
        failures.append("pairing < 0 but mu+nu is not a t-root")
    if s > 0 and any(kdiff) and not diff_in:
        failures.append("pairing > 0 but mu-nu is not a t-root")
    if s == 0 and sum_in != diff_in:
        failures.append("pairing = 0 but mu+nu / mu-nu membership differs")
    return SignRuleReport(km, kn, s, not failures, tuple(failures))


def _ceil_div(a: int, b: int) -> int:
    # b > 0
    return -((-a) // b)


def _string_window(kg: Key, kn: Key, bounds: tuple[int, ...]) -> tuple[int, int]:
    """All j for which gamma + j*nu stays inside the coordinate box.

    Keys of t-weights obey |key[a]| <= mark of the deleted node a, so
    outside this window membership is impossible; inside it the integer
    encoding is collision-free.
    """
    lo, hi = None, None
    for g, v, m in zip(kg, kn, bounds):
        if v == 0:
            continue
        a, b = -m - g, m - g  # a <= j*v <= b
        if v < 0:
            a, b, v = -b, -a, -v
        l, h = _ceil_div(a, v), b // v
        lo = l if lo is None else max(lo, l)
        hi = h if hi is None else min(hi, h)
    return lo, hi


_ZERO_HINT = (None, (), 0)


def _as_weight_key(trsys: TRootSystem, gamma) -> Key:
    width = len(trsys.simples)
    if gamma is None:
        return (0,) * width
    key = tuple(gamma)
    if not any(key):
        return (0,) * width
    if key not in trsys.spaces:
        raise InvalidPair(f"{key} is neither zero nor a t-root here")
    return key


def troot_string(trsys: TRootSystem, gamma, nu) -> tuple[int, int]:
    """Endpoints (p, q) of the nu-string through the t-weight gamma.

    gamma is a t-root key or None/zeros for the zero weight; the string
    is the set of j with gamma + j*nu a t-weight of the adjoint module
    (a t-root or zero).  The set is verified to be an interval
    containing 0; a violation would be an internal error.
    """
    kn = tuple(nu)
    if kn not in trsys.spaces:
        raise InvalidPair(f"{kn} is not a t-root here")
    kg = _as_weight_key(trsys, gamma)
    lo, hi = _string_window(kg, kn, trsys.key_bounds)
    eg = trsys.key_enc(kg)
    en = trsys.key_enc(kn)
    members = trsys._key_enc_with_zero
    q = 0
    while q + 1 <= hi and eg + (q + 1) * en in members:
        q += 1
    p = 0
    while p - 1 >= lo and eg + (p - 1) * en in members:
        p -= 1
    for j in range(q + 2, hi + 1):
        if eg + j * en in members:
            raise AssertionError(f"t-weight string through {kg} along {kn} is not an interval")
    for j in range(lo, p - 1):
        if eg + j * en in members:
            raise AssertionError(f"t-weight string through {kg} along {kn} is not an interval")
    return p, q


class StringReport(NamedTuple):
    gamma: Key
    nu: Key
    p: int
    q: int
    ok: bool
    failures: tuple[str, ...]


def troot_string_report(trsys: TRootSystem, gamma, nu) -> StringReport:
    """String endpoints plus endpoint-sign and non-vanishing certificates.

    Checks, at root level, that the interval endpoints pair with nu
    with the forced signs and that the raising/lowering action is
    nonzero at every interior position of the string.
    """
    kn = tuple(nu)
    p, q = troot_string(trsys, gamma, nu)
    kg = _as_weight_key(trsys, gamma)
    failures = []
    if p == q == 0:
        if any(kg) and trsys.inner_sign(kg, kn) != 0:
            failures.append("singleton string but (gamma, nu) != 0")
    else:
        top = tuple(g + q * v for g, v in zip(kg, kn))
        bot = tuple(g + p * v for g, v in zip(kg, kn))
        if trsys.inner_sign(top, kn) <= 0:
            failures.append("(gamma + q*nu, nu) is not positive")
        if trsys.inner_sign(bot, kn) >= 0:
            failures.append("(gamma + p*nu, nu) is not negative")
    hits = trsys.rs._enc_with_zero
    up = trsys._space_encs[kn]
    down = trsys._space_encs[tuple(-c for c in kn)]
    for m in range(p, q + 1):
        pos = tuple(g + m * v for g, v in zip(kg, kn))
        if not any(pos):
            continue  # the Levi factor itself acts nonzero on every space
        tgt = trsys._space_encs[pos]
        if m < q and not any(a + b in hits for a in up for b in tgt):
            failures.append(f"raising action vanishes at position {m}")
        if m > p and not any(a + b in hits for a in down for b in tgt):
            failures.append(f"lowering action vanishes at position {m}")
    return StringReport(kg, kn, p, q, not failures, tuple(failures))
