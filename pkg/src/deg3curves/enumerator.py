"""Parameter sweeps, fixture loading, and audits of the published tables."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .covering import Signature
from .hurwitz import GeneratingVector, count_generating_tuples, find_witness, verify_vector
from .triangle import (
    FREE_PARAMS,
    CurveInvariants,
    ParameterTuple,
    canonical_action,
    complete_params,
    curve_invariants,
    feasibility,
    lattice,
    normalize_kind,
    class_splits,
    params_from_signature,
    signatures_from_params,
)
from .words import WordError, parse_vector, render_symbolic

REALIZED, NO_VECTOR, INFEASIBLE = "realized", "no_vector", "infeasible"
INVARIANT_FIELDS = ("h", "g", "b", "pa", "bsq")


@dataclass(frozen=True)
class TableRow:
    kind: str
    params: ParameterTuple
    status: str
    reason: str | None = None
    witness: GeneratingVector | None = None
    split: tuple[str, ...] | None = None
    invariants: CurveInvariants | None = None
    count: int | None = None

    def __post_init__(self):
        realized = self.status == REALIZED
        if realized != (self.witness is not None) or realized != (self.invariants is not None):
            raise ValueError("a row is realized iff it carries a witness and invariants")

    def as_dict(self) -> dict:
        action = canonical_action(self.kind)
        out = {"group": self.kind, **self.params.as_dict()}
        inv = self.invariants.as_dict() if self.invariants else {}
        for name in ("h", "g", "b", "pa", "bsq", "sing_B", "sing_D", "bn_status"):
            out[name] = inv.get(name)
        out["status"] = self.status
        out["reason"] = self.reason
        out["split"] = list(self.split) if self.split else None
        out["count"] = self.count
        if self.witness:
            out["word"] = self.witness.render(action.group)
            out["word_ia"] = render_symbolic(action.group, self.witness.entries, action.binding)
        else:
            out["word"] = out["word_ia"] = None
        return out


def classify(kind: str, params: ParameterTuple) -> TableRow:
    """Feasibility first; if feasible, try every signature split for a generating vector."""
    kind = normalize_kind(kind)
    verdict = feasibility(kind, params)
    if not verdict.feasible:
        return TableRow(kind, params, INFEASIBLE, verdict.reason)
    action = canonical_action(kind)
    g = action.group
    best: tuple[GeneratingVector, Signature] | None = None
    total = 0
    for sig in signatures_from_params(action, params):
        n = count_generating_tuples(g, sig.branches)
        total += n
        if n == 0:
            continue
        w = find_witness(g, sig.branches)
        if best is None or w.entries < best[0].entries:
            best = (w, sig)
    if best is None:
        return TableRow(kind, params, NO_VECTOR, "no generating vector", count=0)
    return TableRow(
        kind, params, REALIZED, None,
        witness=best[0], split=best[1].branches,
        invariants=curve_invariants(kind, params), count=total,
    )


def sweep(kind: str) -> list[TableRow]:
    """Classify every tuple of the kind's lattice (divisible, B~^2 > 0), params ascending."""
    kind = normalize_kind(kind)
    return [classify(kind, p) for p in lattice(kind)]


# fixtures -------------------------------------------------------------------

@dataclass(frozen=True)
class FixtureRow:
    kind: str
    params: ParameterTuple
    word: str
    values: dict

    def as_dict(self) -> dict:
        p = self.params
        return {"group": self.kind, "s": p.s, "t": p.t, "r": p.r, "k": p.k, "word": self.word, **self.values}


@dataclass(frozen=True)
class Discard:
    kind: str
    params: dict
    reason: str


@dataclass
class FixtureSet:
    rows: list[FixtureRow] = field(default_factory=list)
    discards: list[Discard] = field(default_factory=list)

    def for_kind(self, kind: str) -> FixtureSet:
        kind = normalize_kind(kind)
        return FixtureSet([r for r in self.rows if r.kind == kind], [d for d in self.discards if d.kind == kind])


def default_fixture_path() -> Path:
    return Path(str(resources.files("deg3curves") / "data" / "tables.json"))


def load_fixtures(source: str | Path | list | None = None) -> FixtureSet:
    """Read a fixture array. Entries with a ``discards`` key are discard lists;
    entries with a ``status`` other than ``realized`` (engine output) are skipped."""
    if source is None:
        source = default_fixture_path()
    data = source if isinstance(source, list) else json.loads(Path(source).read_text())
    if not isinstance(data, list):
        raise ValueError("fixture file must hold a JSON array")
    out = FixtureSet()
    for entry in data:
        kind = normalize_kind(entry["group"])
        if "discards" in entry:
            for d in entry["discards"]:
                out.discards.append(Discard(kind, dict(d["params"]), d.get("reason", "")))
            continue
        if entry.get("status", REALIZED) != REALIZED:
            continue
        given = {p: entry[p] for p in ("s", "t", "r", "k") if entry.get(p) is not None}
        params = complete_params(kind, **{p: given[p] for p in FREE_PARAMS[kind] if p in given})
        out.rows.append(FixtureRow(kind, params, entry.get("word") or "", {f: entry[f] for f in INVARIANT_FIELDS}))
    return out


# audits ---------------------------------------------------------------------

@dataclass
class DiffReport:
    kind: str
    matched: int = 0
    value_mismatches: list[dict] = field(default_factory=list)
    status_mismatches: list[dict] = field(default_factory=list)
    vector_failures: list[dict] = field(default_factory=list)
    beyond_fixture: list[dict] = field(default_factory=list)
    fixture_rows: int = 0

    @property
    def clean(self) -> bool:
        return not (self.value_mismatches or self.status_mismatches or self.vector_failures)

    def as_dict(self) -> dict:
        return {
            "group": self.kind,
            "fixture_rows": self.fixture_rows,
            "matched": self.matched,
            "value_mismatches": self.value_mismatches,
            "status_mismatches": self.status_mismatches,
            "vector_failures": self.vector_failures,
            "beyond_fixture": self.beyond_fixture,
        }


def check_fixture_vector(kind: str, fixture: FixtureRow) -> dict | None:
    """Evaluate the fixture word with the canonical (i, a); return a failure record or None."""
    action = canonical_action(kind)
    g = action.group
    try:
        entries = parse_vector(g, fixture.word, action.binding)
    except WordError as exc:
        return {"params": fixture.params.as_dict(), "word": fixture.word, "error": str(exc)}
    report = verify_vector(g, entries)
    derived = None
    if report.classes_match:
        try:
            derived = params_from_signature(action, Signature(g, report.class_labels, 0))
        except ValueError as exc:
            return {"params": fixture.params.as_dict(), "word": fixture.word, "error": str(exc),
                    **report.as_dict()}
    if report.ok and derived == fixture.params:
        return None
    return {
        "params": fixture.params.as_dict(),
        "word": fixture.word,
        **report.as_dict(),
        "derived_params": derived.as_dict() if derived else None,
    }


def verify_fixtures(rows: Iterable[TableRow], fixtures: FixtureSet) -> DiffReport:
    rows = list(rows)
    kinds = {r.kind for r in rows} | {f.kind for f in fixtures.rows}
    kind = kinds.pop() if len(kinds) == 1 else "mixed"
    report = DiffReport(kind)
    by_params = {(r.kind, r.params): r for r in rows}
    seen = set()
    for fx in fixtures.rows:
        report.fixture_rows += 1
        key = (fx.kind, fx.params)
        seen.add(key)
        row = by_params.get(key)
        if row is None:
            row = classify(fx.kind, fx.params)
        ok = True
        if row.status != REALIZED:
            ok = False
            report.status_mismatches.append(
                {"params": fx.params.as_dict(), "fixture": REALIZED, "engine": row.status, "reason": row.reason}
            )
        else:
            inv = row.invariants.as_dict()
            for f in INVARIANT_FIELDS:
                if inv[f] != fx.values[f]:
                    ok = False
                    report.value_mismatches.append(
                        {"params": fx.params.as_dict(), "field": f, "fixture": fx.values[f], "engine": inv[f]}
                    )
        failure = check_fixture_vector(fx.kind, fx)
        if failure:
            ok = False
            report.vector_failures.append(failure)
        report.matched += ok
    for row in rows:
        if row.status == REALIZED and (row.kind, row.params) not in seen:
            report.beyond_fixture.append(row.as_dict())
    return report


def mismatched_rows(report: DiffReport) -> list[dict]:
    """Distinct fixture params carrying at least one mismatch of any kind."""
    out = []
    for entry in report.value_mismatches + report.status_mismatches + report.vector_failures:
        if entry["params"] not in out:
            out.append(entry["params"])
    return out


def _discard_targets(kind: str, params: dict) -> list[ParameterTuple]:
    """Lattice tuples matching a (possibly partial) discard entry."""
    matches = [p for p in lattice(kind) if all(getattr(p, k) == v for k, v in params.items())]
    if matches:
        return matches
    return [complete_params(kind, **{k: v for k, v in params.items() if k in FREE_PARAMS[kind]})]


def verify_discards(kind: str, fixtures: FixtureSet) -> list[dict]:
    """Engine classification of every tuple covered by the kind's discard lists."""
    kind = normalize_kind(kind)
    action = canonical_action(kind)
    out = []
    for d in fixtures.for_kind(kind).discards:
        for p in _discard_targets(kind, d.params):
            row = classify(kind, p)
            # counted on every class split, admissible or not, so that
            # impossible signatures still report an explicit zero
            try:
                splits = class_splits(action, p)
            except ValueError:
                splits = []
            count = sum(count_generating_tuples(action.group, b) for b in splits) if splits else None
            out.append({
                "params": p.as_dict(),
                "listed_reason": d.reason,
                "status": row.status,
                "reason": row.reason,
                "generating_count": count,
                "ok": row.status != REALIZED,
            })
    return out
