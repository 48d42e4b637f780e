"""Center-weighted grading and central series of a nilradical.

The order of a positive t-root is the sum of its key entries; grading
the nilradical by order makes both central series computable in closed
form: the i-th term of the upper central series is the span of the top
i orders, and the i-th term of the lower central series is everything
of order at least i.  Both closed forms are checked here against
deliberately independent brute-force oracles that work purely on root
sets and never consult the grading.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SeriesMismatch
from .levi import Key, TRootSystem
from .rootsys import Root


def order_of(key) -> int:
    """Grading order of a key: the sum of its entries."""
    return sum(key)


@dataclass(frozen=True)
class Grading:
    """Positive t-roots bucketed by order, plus the top order."""

    levels: dict[int, tuple[Key, ...]]
    k_cent: int
    center_key: Key


def grading(trsys: TRootSystem) -> Grading:
    """Bucket the positive t-roots by order and certify the grading.

    Verifies that every order 1..k_cent is realized, that the top order
    equals the sum of the highest root's coefficients over the deleted
    nodes, and that the top level is the single restricted highest root.
    Orders add across t-root sums by linearity of the key sum, so no
    separate additivity pass is needed.
    """
    levels: dict[int, list[Key]] = {}
    for key in trsys.positives:
        levels.setdefault(order_of(key), []).append(key)
    rs = trsys.rs
    D = trsys.designation.deleted0
    k_cent = sum(rs.marks[d] for d in D)
    if sorted(levels) != list(range(1, k_cent + 1)):
        raise AssertionError("grading levels are not 1..k_cent")
    center_key = tuple(rs.marks[d] for d in D)
    if levels[k_cent] != [center_key]:
        raise AssertionError("top level is not the restricted highest root alone")
    return Grading(
        {k: tuple(v) for k, v in sorted(levels.items())}, k_cent, center_key
    )


@dataclass(frozen=True)
class CentralSeries:
    """Both central series as root sets; length is the nilpotency class."""

    upper: tuple[frozenset[Root], ...]
    lower: tuple[frozenset[Root], ...]
    length: int


def _nilradical_encs(trsys: TRootSystem) -> list[int]:
    out: list[int] = []
    for key in trsys.positives:
        out.extend(trsys._space_encs[key])
    return out


def _decode_all(trsys: TRootSystem, encs) -> frozenset[Root]:
    dec = trsys.rs.decode
    return frozenset(dec(e) for e in encs)


def lower_series_oracle(trsys: TRootSystem) -> list[frozenset[Root]]:
    """Brute-force descending series: repeatedly bracket with all of n.

    Starts from the full nilradical root set and keeps only root sums;
    stops when bracketing kills everything.  Independent of the grading.
    """
    all_encs = _nilradical_encs(trsys)
    roots_enc = trsys.rs._enc_roots
    chain = [set(all_encs)]
    while True:
        cur = chain[-1]
        nxt = {s for a in all_encs for b in cur if (s := a + b) in roots_enc}
        if not nxt:
            break
        if len(chain) > len(all_encs) + 1:
            raise AssertionError("lower central series did not terminate")
        chain.append(nxt)
    return [_decode_all(trsys, term) for term in chain]


def upper_series_oracle(trsys: TRootSystem) -> list[frozenset[Root]]:
    """Brute-force ascending series: iterated centers, per root vector.

    A root vector sits in the next term when bracketing with every
    nilradical root vector lands in the previous term.  Each term is
    verified to be a union of whole t-root spaces (stability under the
    Levi factor), which is what makes per-root computation exact.
    """
    all_encs = _nilradical_encs(trsys)
    roots_enc = trsys.rs._enc_roots
    total = set(all_encs)
    chain: list[set[int]] = []
    prev: set[int] = set()
    while prev != total:
        cur = {
            phi for phi in all_encs
            if not any((s := phi + other) in roots_enc and s not in prev
                       for other in all_encs)
        }
        if not prev < cur:
            raise AssertionError("upper central series stalled")
        for key in trsys.positives:
            encs = trsys._space_encs[key]
            inside = sum(1 for e in encs if e in cur)
            if inside not in (0, len(encs)):
                raise AssertionError(f"center term splits the t-root space {key}")
        chain.append(cur)
        prev = cur
    return [_decode_all(trsys, term) for term in chain]


def closed_form_series(trsys: TRootSystem, grad: Grading | None = None,
                       verify: bool = True) -> CentralSeries:
    """Both central series read off the order grading.

    With verify=True (the default) the result is compared against both
    brute-force oracles and SeriesMismatch is raised on any difference.
    """
    if grad is None:
        grad = grading(trsys)
    k_cent = grad.k_cent
    level_roots: dict[int, frozenset[Root]] = {}
    for k, keys in grad.levels.items():
        acc: set[Root] = set()
        for key in keys:
            acc.update(trsys.spaces[key].roots)
        level_roots[k] = frozenset(acc)
    upper = []
    acc: frozenset[Root] = frozenset()
    for i in range(1, k_cent + 1):
        acc = acc | level_roots[k_cent - i + 1]
        upper.append(acc)
    lower = []
    acc = frozenset()
    for k in range(k_cent, 0, -1):
        acc = acc | level_roots[k]
        lower.append(acc)
    lower.reverse()
    series = CentralSeries(tuple(upper), tuple(lower), k_cent)
    # reversal identity between the two series
    for i in range(1, k_cent + 1):
        if series.lower[i - 1] != series.upper[k_cent - i]:
            raise SeriesMismatch(f"series reversal fails at term {i}")
    if verify:
        if [set(t) for t in series.lower] != [set(t) for t in lower_series_oracle(trsys)]:
            raise SeriesMismatch("closed-form lower series disagrees with its oracle")
        if [set(t) for t in series.upper] != [set(t) for t in upper_series_oracle(trsys)]:
            raise SeriesMismatch("closed-form upper series disagrees with its oracle")
    return series


def series_document(trsys: TRootSystem) -> dict:
    """Versioned JSON-ready description (see docs/schemas.md)."""
    grad = grading(trsys)
    series = closed_form_series(trsys, grad, verify=True)
    des = trsys.designation

    def root_list(term):
        return [list(r) for r in sorted(term, key=lambda r: (sum(r), r))]

    return {
        "schema": "leviroots.series/1",
        "type": str(trsys.rs.stype) if trsys.rs.stype else None,
        "rank": trsys.rs.rank,
        "kept": sorted(des.kept),
        "deleted": list(des.deleted),
        "k_cent": grad.k_cent,
        "center_key": list(grad.center_key),
        "levels": [
            {"order": k, "keys": [list(key) for key in keys]}
            for k, keys in grad.levels.items()
        ],
        "upper": [root_list(t) for t in series.upper],
        "lower": [root_list(t) for t in series.lower],
    }
