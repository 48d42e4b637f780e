"""Exhaustive verification sweeps.

Every structural claim the library relies on is re-checkable here, per
parabolic designation and per extended-diagram node, with failures
collected as machine-readable records instead of exceptions.  The
sweeps are exact (integer/rational arithmetic throughout) and iterate
in a fixed (height, lexicographic) order so repeated runs emit
byte-identical reports.

For the quadratic sweeps the pair count is cut by symmetry, never the
content: a sign-rule or string condition for (mu, nu) coincides with
the one for (-mu, -nu), (nu, mu) and (mu, -nu) after negating roots,
and t-root spaces at opposite keys are exact mirrors (which the suite
itself verifies per designation), so checking one representative per
orbit checks them all.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import slnx
from .bds import (
    classify, delete_node, extended_diagram, maximal_equal_rank,
    residue_bracket_check, residue_irreducibility, subalgebra_roots,
)
from . import exactlin
from .errors import LeviRootsError
from .levi import ParabolicDesignation, designation, troot_of, troot_system
from .rootsys import RootSystem, all_simple_types, root_system
from .series import closed_form_series, grading


@dataclass(frozen=True)
class Failure:
    """One violated condition: which check, where, and what went wrong."""

    check: str
    subject: str
    detail: str

    def as_dict(self) -> dict:
        return {"check": self.check, "subject": self.subject, "detail": self.detail}


def _deleted_label(des: ParabolicDesignation) -> str:
    return "deleted=" + ",".join(str(j) for j in des.deleted)


# ---------------------------------------------------------------------------
# designation scopes


def borel_designation(rs: RootSystem) -> ParabolicDesignation:
    return designation(rs, kept=())


def standard_designations(rs: RootSystem) -> list[ParabolicDesignation]:
    """The Borel plus every maximal parabolic (deduplicated at rank 1)."""
    out = [borel_designation(rs)]
    for j in range(1, rs.rank + 1):
        if rs.rank > 1:
            out.append(designation(rs, deleted=(j,)))
    return out


def all_parabolic_designations(rs: RootSystem) -> list[ParabolicDesignation]:
    """All 2^rank - 1 designations, ordered by (size, nodes) of the deleted set."""
    nodes = range(1, rs.rank + 1)
    out = []
    for size in range(1, rs.rank + 1):
        for deleted in combinations(nodes, size):
            out.append(designation(rs, deleted=deleted))
    return out


# ---------------------------------------------------------------------------
# one designation


class DesignationReport:
    __slots__ = ("deleted", "counts", "failures")

    def __init__(self, deleted, counts, failures):
        self.deleted = deleted
        self.counts = counts
        self.failures = failures

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "deleted": list(self.deleted),
            "ok": self.ok,
            "counts": self.counts,
            "failures": [f.as_dict() for f in self.failures],
        }


def check_designation(des: ParabolicDesignation) -> DesignationReport:
    """Run every per-designation theorem check and collect failures."""
    failures: list[Failure] = []
    label = _deleted_label(des)
    try:
        trsys = troot_system(des)
    except LeviRootsError as exc:
        failures.append(Failure("certification", label, str(exc)))
        return DesignationReport(des.deleted, {}, tuple(failures))

    counts = {
        "troots": len(trsys.keys),
        "positive": len(trsys.positives),
        "simple": len(trsys.simples),
    }
    _check_partition(des, trsys, failures)
    _check_weights(des, trsys, failures)
    _check_simples(des, trsys, failures)
    _check_brackets(trsys, failures, label)
    _check_signs(trsys, failures, label)
    _check_strings(trsys, failures, label)
    _check_delta(trsys, failures, label)
    counts["k_cent"] = _check_series(trsys, failures, label)
    return DesignationReport(des.deleted, counts, tuple(failures))


def _check_partition(des, trsys, failures):
    """Spaces partition the roots off the Levi factor; mirrors are exact."""
    rs = des.rs
    label = _deleted_label(des)
    D = des.deleted0
    in_levi = sum(1 for phi in rs.roots if not any(phi[d] for d in D))
    total = sum(len(sp.roots) for sp in trsys.spaces.values())
    if total + in_levi != len(rs.roots):
        failures.append(Failure(
            "partition", label,
            f"{total} space roots + {in_levi} Levi roots != {len(rs.roots)}",
        ))
    for key in trsys.positives:
        neg = tuple(-c for c in key)
        mirrored = {tuple(-c for c in phi) for phi in trsys.spaces[key].roots}
        if mirrored != set(trsys.spaces[neg].roots):
            failures.append(Failure(
                "negation-symmetry", label, f"key {key} mirror mismatch"))
        if troot_of(des, trsys.spaces[key].highest) != key:
            failures.append(Failure(
                "restriction", label, f"highest root of {key} restricts elsewhere"))


def _check_weights(des, trsys, failures):
    """Within a space, roots carry pairwise distinct kept-node pairings."""
    rs = des.rs
    kept = des.kept0
    if not kept:
        return
    cartan = rs.cartan
    for key in trsys.positives:
        space = trsys.spaces[key]
        if len(space.roots) == 1:
            continue
        seen = set()
        for phi in space.roots:
            w = tuple(
                sum(phi[j] * cartan[j][i] for j in range(rs.rank) if phi[j])
                for i in kept
            )
            if w in seen:
                failures.append(Failure(
                    "weight-multiplicity", _deleted_label(des),
                    f"two roots of {key} share kept-node pairings {w}",
                ))
            seen.add(w)


def _check_simples(des, trsys, failures):
    """Simple t-roots: unit keys, independence, obtuseness, intrinsic simplicity."""
    label = _deleted_label(des)
    width = len(des.deleted)
    units = {tuple(1 if i == a else 0 for i in range(width)) for a in range(width)}
    if set(trsys.simples) != units or len(trsys.simples) != width:
        failures.append(Failure(
            "simple-troots", label, "simple t-roots differ from the unit keys"))
    for idx, j in enumerate(des.deleted):
        unit = tuple(1 if i == idx else 0 for i in range(width))
        phi = tuple(1 if t == j - 1 else 0 for t in range(des.rs.rank))
        if troot_of(des, phi) != unit:
            failures.append(Failure(
                "simple-troots", label, f"deleted node {j} does not restrict to a unit key"))
    if exactlin.rank_of(trsys.simples) != width:
        failures.append(Failure(
            "simple-troots", label, "simple t-roots are linearly dependent"))
    for a in range(width):
        for b in range(a + 1, width):
            if trsys.inner_sign(trsys.simples[a], trsys.simples[b]) > 0:
                failures.append(Failure(
                    "simple-troots", label,
                    f"simple t-roots {a},{b} have positive inner product"))
    # one-signed keys, and simplicity <=> not a sum of two positives
    pos_encs = frozenset(trsys._key_encs[k] for k in trsys.positives)
    for key in trsys.keys:
        if not (all(c >= 0 for c in key) or all(c <= 0 for c in key)):
            failures.append(Failure(
                "positivity-dichotomy", label, f"key {key} is mixed-sign"))
    for key in trsys.positives:
        e = trsys._key_encs[key]
        decomposable = any(e - p in pos_encs for p in pos_encs)
        if decomposable == (key in units):
            kind = "decomposes" if decomposable else "has no decomposition"
            failures.append(Failure(
                "intrinsic-simplicity", label,
                f"key {key} {kind}, contradicting the simple set"))


def _check_brackets(trsys, failures, label):
    """Root sums from keys mu, nu fill the space at mu+nu exactly.

    Only pairs with a positive sum key are computed; the pair with both
    keys negated covers the mirror case exactly (space mirroring is
    verified separately per designation).
    """
    key_encs = trsys._key_encs
    by_enc = {e: k for k, e in key_encs.items()}
    pos_encs = frozenset(key_encs[k] for k in trsys.positives)
    space_sets = {k: frozenset(v) for k, v in trsys._space_encs.items()}
    enc_roots = trsys.rs._enc_roots
    encs = sorted(key_encs.values())
    for i, em in enumerate(encs):
        left = trsys._space_encs[by_enc[em]]
        for en in encs[i:]:
            s = em + en
            if s not in pos_encs:
                continue
            right = trsys._space_encs[by_enc[en]]
            got = {x for a in left for b in right if (x := a + b) in enc_roots}
            if got != space_sets[by_enc[s]]:
                failures.append(Failure(
                    "bracket-law", label,
                    f"keys {by_enc[em]} + {by_enc[en]}: root sums miss the target space",
                ))


def _check_signs(trsys, failures, label):
    """Sign rules once per orbit {(+-mu, +-nu), (+-nu, +-mu)}."""
    pos = trsys.positives
    key_encs = trsys._key_encs
    enc_set = frozenset(key_encs.values())
    for i, mu in enumerate(pos):
        emu = key_encs[mu]
        for nu in pos[i:]:
            s = trsys.inner_sign(mu, nu)
            enu = key_encs[nu]
            plus, minus = emu + enu, emu - enu
            if s < 0:
                if plus and plus not in enc_set:
                    failures.append(Failure(
                        "sign-rule", label,
                        f"({mu},{nu}) < 0 but the sum is not a t-root"))
            elif s > 0:
                if minus and minus not in enc_set:
                    failures.append(Failure(
                        "sign-rule", label,
                        f"({mu},{nu}) > 0 but the difference is not a t-root"))
            else:
                if (plus in enc_set) != (minus in enc_set):
                    failures.append(Failure(
                        "sign-rule", label,
                        f"({mu},{nu}) = 0 but sum/difference membership differs"))


def _check_strings(trsys, failures, label):
    """String laws for every (gamma, nu), batched along nu-lines.

    For fixed nu the pairs (gamma, nu) with gamma on one maximal run
    share one interval up to shift, one pair of endpoint inequalities,
    and one family of interior non-vanishing conditions, so each run is
    verified once; runs along -nu impose the mirrored inequalities,
    which are literally the same checks.
    """
    members = trsys._key_enc_with_zero
    by_enc = {e: k for k, e in trsys._key_encs.items()}
    width = len(trsys.key_bounds)
    by_enc[0] = (0,) * width
    space_encs = trsys._space_encs
    enc_roots_z = trsys.rs._enc_with_zero
    inner_sign = trsys.inner_sign
    for nu in trsys.positives:
        en = trsys._key_encs[nu]
        raisers = space_encs[nu]
        lowerers = space_encs[tuple(-c for c in nu)]
        visited = set()
        for start in sorted(members):
            if start in visited:
                continue
            e = start
            while e - en in members:
                e -= en
            run = []
            while e in members:
                run.append(e)
                visited.add(e)
                e += en
            bottom, top = run[0], run[-1]
            if len(run) == 1:
                if inner_sign(by_enc[top], nu) != 0:
                    failures.append(Failure(
                        "string-law", label,
                        f"singleton string at {by_enc[top]} along {nu} not orthogonal"))
                continue
            if inner_sign(by_enc[top], nu) <= 0:
                failures.append(Failure(
                    "string-law", label,
                    f"top of string {by_enc[top]} along {nu} not positive"))
            if inner_sign(by_enc[bottom], nu) >= 0:
                failures.append(Failure(
                    "string-law", label,
                    f"bottom of string {by_enc[bottom]} along {nu} not negative"))
            for x in run:
                if x == 0:
                    continue  # bracketing with the Levi factor is automatic
                tgt = space_encs[by_enc[x]]
                if x != top and not any(
                    (a + b) in enc_roots_z for a in tgt for b in raisers
                ):
                    failures.append(Failure(
                        "string-law", label,
                        f"no raising root sum at {by_enc[x]} along {nu}"))
                if x != bottom and not any(
                    (a + b) in enc_roots_z for a in tgt for b in lowerers
                ):
                    failures.append(Failure(
                        "string-law", label,
                        f"no lowering root sum at {by_enc[x]} along {nu}"))


def _check_delta(trsys, failures, label):
    """The nilradical trace pairs positively with every positive t-root."""
    delta = trsys.delta_key
    for nu in trsys.positives:
        if trsys.inner_sign(nu, delta) <= 0:
            failures.append(Failure(
                "trace-positivity", label,
                f"({nu}, delta) is not positive"))
    for nu in trsys.positives:
        neg = tuple(-c for c in nu)
        if trsys.inner_sign(neg, delta) >= 0:
            failures.append(Failure(
                "trace-positivity", label,
                f"({neg}, delta) is not negative"))


def _check_series(trsys, failures, label):
    """Grading structure plus closed-form central series against the oracles."""
    try:
        grad = grading(trsys)
    except (LeviRootsError, AssertionError) as exc:
        failures.append(Failure("grading", label, str(exc)))
        return None
    try:
        series = closed_form_series(trsys, grad, verify=True)
    except (LeviRootsError, AssertionError) as exc:
        failures.append(Failure("central-series", label, str(exc)))
        return grad.k_cent
    if series.length != grad.k_cent:
        failures.append(Failure(
            "central-series", label,
            f"series length {series.length} != k_cent {grad.k_cent}"))
    return grad.k_cent


# ---------------------------------------------------------------------------
# per-node equal-rank checks


class NodeReport:
    __slots__ = ("node", "mark", "classes", "failures")

    def __init__(self, node, mark, classes, failures):
        self.node = node
        self.mark = mark
        self.classes = classes
        self.failures = failures

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "node": self.node,
            "mark": self.mark,
            "subalgebra": self.classes,
            "ok": self.ok,
            "failures": [f.as_dict() for f in self.failures],
        }


def check_node(rs: RootSystem, ext, j: int) -> NodeReport:
    """Dual-pipeline classification, t-root ladder, residue certificates."""
    failures: list[Failure] = []
    label = f"node={j}"
    n = rs.marks[j - 1]
    classes = None
    try:
        from_diagram = classify(delete_node(ext, j))
        model = subalgebra_roots(rs, j)
        from_roots = classify(model.cartan_of_sub)
        classes = from_diagram.names()
        if from_diagram != from_roots:
            failures.append(Failure(
                "equal-rank-classify", label,
                f"diagram pipeline {from_diagram} != root pipeline {from_roots}"))
    except LeviRootsError as exc:
        failures.append(Failure("equal-rank-classify", label, str(exc)))
        return NodeReport(j, n, classes, tuple(failures))

    if rs.rank > 1:
        try:
            trsys = troot_system(designation(rs, deleted=(j,)))
            ladder = {(k,) for k in range(1, n + 1)}
            if set(trsys.positives) != ladder or len(trsys.keys) != 2 * n:
                failures.append(Failure(
                    "maximal-parabolic-ladder", label,
                    f"t-roots are not +-1..{n} times the unit key"))
        except LeviRootsError as exc:
            failures.append(Failure("maximal-parabolic-ladder", label, str(exc)))
    else:
        # rank 1: the sole designation is the Borel; ladder is {+-1}
        if n != 1:
            failures.append(Failure(
                "maximal-parabolic-ladder", label, "rank-1 mark must be 1"))

    if len(model.root_set) != len(rs.roots) - sum(
        len(v) for v in model.residues.values()
    ):
        failures.append(Failure(
            "residue-partition", label, "residues do not complement the subalgebra"))
    for k in range(1, n):
        if not model.residues.get(k):
            failures.append(Failure(
                "residue-irreducibility", label, f"residue class {k} is empty"))
            continue
        try:
            residue_irreducibility(model, k)
        except LeviRootsError as exc:
            failures.append(Failure("residue-irreducibility", label, str(exc)))
    for p in range(1, n):
        for q in range(1, n):
            if (p + q) % n == 0:
                continue
            rep = residue_bracket_check(model, p, q)
            if not rep.ok:
                for msg in rep.failures:
                    failures.append(Failure("residue-bracket", label, msg))
    return NodeReport(j, n, classes, tuple(failures))


# ---------------------------------------------------------------------------
# per-type and sweep drivers


class TypeReport:
    __slots__ = ("stype", "designations", "nodes", "sln_failures", "maximal")

    def __init__(self, stype, designations, nodes, sln_failures, maximal):
        self.stype = stype
        self.designations = designations
        self.nodes = nodes
        self.sln_failures = sln_failures
        self.maximal = maximal

    @property
    def ok(self) -> bool:
        return (
            all(r.ok for r in self.designations)
            and all(r.ok for r in self.nodes)
            and not self.sln_failures
        )

    def failure_count(self) -> int:
        return (
            sum(len(r.failures) for r in self.designations)
            + sum(len(r.failures) for r in self.nodes)
            + len(self.sln_failures)
        )

    def as_dict(self) -> dict:
        return {
            "type": str(self.stype),
            "ok": self.ok,
            "designations": [r.as_dict() for r in self.designations],
            "nodes": [r.as_dict() for r in self.nodes],
            "block_check_failures": [f.as_dict() for f in self.sln_failures],
            "maximal_equal_rank": [
                {"node": j, "subalgebra": cls.names()} for j, cls in self.maximal
            ],
        }


def _composition_of_designation(des: ParabolicDesignation):
    cuts = list(des.deleted)
    n = des.rs.rank + 1
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(n - prev)
    return slnx.composition(parts)


def check_type(rs: RootSystem, all_parabolics: bool = False) -> TypeReport:
    """Run the designation suite, node suite, and (type A) block crosschecks."""
    scope = (
        all_parabolic_designations(rs) if all_parabolics
        else standard_designations(rs)
    )
    reports = [check_designation(des) for des in scope]
    ext = extended_diagram(rs)
    nodes = [check_node(rs, ext, j) for j in range(1, rs.rank + 1)]
    sln_failures: list[Failure] = []
    if rs.stype is not None and rs.stype.family == "A":
        for des in scope:
            comp = _composition_of_designation(des)
            rep = slnx.crosscheck(comp, rs)
            if not rep.ok:
                for msg in rep.failures:
                    sln_failures.append(Failure(
                        "block-crosscheck", f"blocks={list(comp.parts)}", msg))
    maximal = maximal_equal_rank(rs)
    return TypeReport(rs.stype, reports, nodes, sln_failures, maximal)


def check_document(reports: list[TypeReport], all_parabolics: bool) -> dict:
    """Aggregate JSON-ready document for one or more type reports."""
    return {
        "schema": "leviroots.check/1",
        "scope": "all-parabolics" if all_parabolics else "borel-and-maximal",
        "ok": all(r.ok for r in reports),
        "failure_count": sum(r.failure_count() for r in reports),
        "types": [r.as_dict() for r in reports],
    }


def sweep_types(max_rank: int, all_parabolics: bool = False) -> list[TypeReport]:
    """Check every simple type up to the given rank."""
    out = []
    for stype in all_simple_types(max_rank):
        out.append(check_type(root_system(stype, max_rank=max_rank), all_parabolics))
    return out
