"""Grid-sweep verification of the identity catalog.

A :class:`GridSpec` names parameter sets and index ranges; :func:`run_grid`
evaluates every selected identity at every applicable point and tallies
passes, precondition skips and violations per identity.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import identities
from .errors import ConfigError, HoradamError, PreconditionUnmet, UnknownIdentity, UnknownPreset
from .identities import Context, Idx, Pass, Skip
from .numeric import format_scalar
from .sequence import DEFAULT_MAX_INDEX, HoradamParams, parse_preset, preset_label

DEFAULT_WITNESS_LIMIT = 20


@dataclass(frozen=True)
class GridSpec:
    """Parameter sets, inclusive index ranges and an optional identity filter.

    ``identity_filter=None`` selects the whole catalog; an empty tuple selects
    nothing. Identities listed in ``quarantine`` are still evaluated but their
    violations are reported separately and do not fail the run.
    """

    parameter_sets: tuple[HoradamParams, ...]
    m_range: tuple[int, int] = (-6, 8)
    n_range: tuple[int, int] = (-6, 8)
    r_range: tuple[int, int] = (-3, 5)
    k_range: tuple[int, int] = (0, 6)
    identity_filter: tuple[str, ...] | None = None
    quarantine: tuple[str, ...] = field(default_factory=lambda: tuple(identities.default_quarantine()))
    max_index: int = DEFAULT_MAX_INDEX

    def __post_init__(self):
        object.__setattr__(self, "parameter_sets", tuple(self.parameter_sets))
        for name in ("m_range", "n_range", "r_range", "k_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ConfigError(f"{name[0]} range {lo}..{hi} is empty")
            object.__setattr__(self, name, (int(lo), int(hi)))
        if self.k_range[0] < 0:
            raise ConfigError("k range must start at 0 or above")
        if self.identity_filter is not None:
            object.__setattr__(self, "identity_filter", tuple(self.identity_filter))
            for ident in self.identity_filter:
                _known(ident)
        object.__setattr__(self, "quarantine", tuple(self.quarantine))
        for ident in self.quarantine:
            _known(ident)
        if self.max_index < 1:
            raise ConfigError("max_index must be positive")

    def range_of(self, name: str) -> range:
        lo, hi = getattr(self, f"{name}_range")
        return range(lo, hi + 1)

    def selected(self) -> list[identities.Identity]:
        if self.identity_filter is None:
            return identities.registry()
        wanted = set(self.identity_filter)
        return [i for i in identities.registry() if i.id in wanted]

    def points(self, ident: identities.Identity):
        """Index tuples for one identity, in a fixed order."""
        names = ident.indices
        for values in itertools.product(*(self.range_of(n) for n in names)):
            yield Idx(**dict(zip(names, values)))


def _known(ident):
    try:
        identities.get(ident)
    except UnknownIdentity:
        raise ConfigError(f"unknown identity {ident!r}") from None


def default_grid() -> GridSpec:
    """Classic presets plus custom sets with q=2, q=-3, p=3, non-integer and Gaussian values."""
    tokens = [
        "fibonacci", "lucas", "pell", "jacobsthal", "g(3,7)", "u(2,3)", "v(3,-2)",
        "custom(1,2,1,2)", "custom(2,-1,1,-3)", "custom(1,1,3,1)",
        "custom(1/2,3,5/2,2/3)", "custom(1+1i,2,1+1i,-1i)",
    ]
    return GridSpec(tuple(parse_preset(t) for t in tokens))


# -- config file -------------------------------------------------------------------

def _split_top(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts, depth, start = [], 0, 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ConfigError(f"unbalanced ')' in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:pos])
            start = pos + 1
    if depth:
        raise ConfigError(f"unbalanced '(' in {text!r}")
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]


def _parse_range(key: str, value: str) -> tuple[int, int]:
    try:
        if ".." in value:
            lo, hi = value.split("..", 1)
            return int(lo), int(hi)
        single = int(value)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer or lo..hi, got {value!r}") from None
    return single, single


def _parse_ids(value: str) -> tuple[str, ...]:
    if value.strip().lower() == "none":
        return ()
    return tuple(_split_top(value))


def parse_grid(text: str) -> GridSpec:
    """Parse ``key = value`` lines; ``#`` starts a comment.

    Keys: ``params`` (preset tokens), ``m``, ``n``, ``r``, ``k`` (``lo..hi``
    or a single integer), ``identities`` (ids, ``all`` or ``none``),
    ``quarantine`` (ids or ``none``) and ``max_index``. Omitted keys take
    their :func:`default_grid` values.
    """
    base = default_grid()
    fields, seen = {}, set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lower()
        if key in seen:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        seen.add(key)
        try:
            if key == "params":
                fields["parameter_sets"] = tuple(parse_preset(tok) for tok in _split_top(value))
                if not fields["parameter_sets"]:
                    raise ConfigError(f"line {lineno}: params is empty")
            elif key in ("m", "n", "r", "k"):
                fields[f"{key}_range"] = _parse_range(key, value)
            elif key == "identities":
                fields["identity_filter"] = None if value.lower() == "all" else _parse_ids(value)
            elif key == "quarantine":
                fields["quarantine"] = _parse_ids(value)
            elif key == "max_index":
                fields["max_index"] = int(value)
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except (HoradamError, UnknownPreset, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: {exc}") from exc
    merged = dict(
        parameter_sets=base.parameter_sets, m_range=base.m_range, n_range=base.n_range,
        r_range=base.r_range, k_range=base.k_range, identity_filter=base.identity_filter,
        quarantine=base.quarantine, max_index=base.max_index,
    )
    merged.update(fields)
    return GridSpec(**merged)


def load_grid(path: str) -> GridSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_grid(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read grid file {path}: {exc.strerror}") from exc


# -- report ------------------------------------------------------------------------

@dataclass
class IdentityTally:
    identity: str
    anchor: str
    quarantined: bool = False
    passed: int = 0
    skipped: int = 0
    violated: int = 0
    skip_reasons: Counter = field(default_factory=Counter)
    witnesses: list = field(default_factory=list)

    @property
    def instances(self) -> int:
        return self.passed + self.skipped + self.violated

    def merge(self, other: "IdentityTally", witness_limit: int | None):
        self.passed += other.passed
        self.skipped += other.skipped
        self.violated += other.violated
        self.skip_reasons.update(other.skip_reasons)
        room = None if witness_limit is None else max(witness_limit - len(self.witnesses), 0)
        self.witnesses.extend(other.witnesses if room is None else other.witnesses[:room])

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "anchor": self.anchor,
            "quarantined": self.quarantined,
            "pass": self.passed,
            "skip": self.skipped,
            "violation": self.violated,
            "instances": self.instances,
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
            "witnesses": list(self.witnesses),
        }


@dataclass
class VerificationReport:
    tallies: dict[str, IdentityTally]
    cardinality: int
    wall_time: float
    parameter_sets: list[str]

    @property
    def violations(self) -> int:
        """Violations outside the quarantine list."""
        return sum(t.violated for t in self.tallies.values() if not t.quarantined)

    @property
    def quarantined_violations(self) -> int:
        return sum(t.violated for t in self.tallies.values() if t.quarantined)

    def to_dict(self, include_time: bool = True) -> dict:
        doc = {
            "cardinality": self.cardinality,
            "violations": self.violations,
            "quarantined_violations": self.quarantined_violations,
            "parameter_sets": list(self.parameter_sets),
            "identities": [t.to_dict() for t in self.tallies.values()],
        }
        if include_time:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc

    def format_table(self) -> str:
        width = max([len("identity")] + [len(i) for i in self.tallies])
        head = f"{'identity':<{width}}  {'pass':>7}  {'skip':>6}  {'violation':>9}  note"
        lines = [head, "-" * len(head)]
        for t in self.tallies.values():
            note = "quarantined" if t.quarantined else ""
            lines.append(f"{t.identity:<{width}}  {t.passed:>7}  {t.skipped:>6}  {t.violated:>9}  {note}".rstrip())
        lines.append("-" * len(head))
        lines.append(
            f"{len(self.tallies)} identities, {self.cardinality} instances, "
            f"{self.violations} violations, {self.quarantined_violations} quarantined violations, "
            f"{self.wall_time:.1f}s"
        )
        return "\n".join(lines)


def _witness(params, ident, idx, outcome) -> dict:
    doc = {"params": preset_label(params)}
    doc.update({name: getattr(idx, name) for name in ident.indices})
    doc["lhs"] = format_scalar(outcome.lhs)
    doc["rhs"] = format_scalar(outcome.rhs)
    return doc


def _sweep_params(spec: GridSpec, params: HoradamParams, ids: list[str], witness_limit: int | None) -> dict:
    """Tallies for one parameter set; a fresh Context keeps workers independent."""
    ctx = Context(params, spec.max_index)
    out = {}
    quarantine = set(spec.quarantine)
    for ident_id in ids:
        ident = identities.get(ident_id)
        tally = IdentityTally(ident.id, ident.anchor, ident.id in quarantine)
        if ident.applies(params):
            for idx in spec.points(ident):
                outcome = ident.evaluate(ctx, idx)
                if isinstance(outcome, Pass):
                    tally.passed += 1
                elif isinstance(outcome, Skip):
                    tally.skipped += 1
                    tally.skip_reasons[outcome.reason] += 1
                else:
                    tally.violated += 1
                    if witness_limit is None or len(tally.witnesses) < witness_limit:
                        tally.witnesses.append(_witness(params, ident, idx, outcome))
        out[ident_id] = tally
    return out


def _sweep_task(args):
    return _sweep_params(*args)


def run_grid(spec: GridSpec, jobs: int = 1, witness_limit: int | None = DEFAULT_WITNESS_LIMIT) -> VerificationReport:
    """Evaluate the grid; with ``jobs > 1`` parameter sets run in worker processes.

    The merged report does not depend on ``jobs``: partial tallies are merged
    in parameter-set order.
    """
    if jobs < 1:
        raise ConfigError("jobs must be at least 1")
    if witness_limit is not None and witness_limit < 0:
        witness_limit = None
    start = time.perf_counter()
    selected = spec.selected()
    ids = [i.id for i in selected]
    quarantine = set(spec.quarantine)
    tallies = {i.id: IdentityTally(i.id, i.anchor, i.id in quarantine) for i in selected}
    tasks = [(spec, params, ids, witness_limit) for params in spec.parameter_sets]
    if jobs == 1 or len(tasks) <= 1 or not ids:
        results = [_sweep_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_task, tasks))
    for partial in results:
        for ident_id, tally in partial.items():
            tallies[ident_id].merge(tally, witness_limit)
    cardinality = sum(t.instances for t in tallies.values())
    return VerificationReport(
        tallies, cardinality, time.perf_counter() - start,
        [preset_label(p) for p in spec.parameter_sets],
    )


# -- benchmark ---------------------------------------------------------------------

@dataclass(frozen=True)
class BenchRow:
    k: int
    equal: bool
    lhs_seconds: float | None
    rhs_seconds: float | None

    @property
    def speedup(self) -> float | None:
        if not self.equal or not self.rhs_seconds:
            return None
        return self.lhs_seconds / self.rhs_seconds


def benchmark(identity_id: str, params: HoradamParams, k_values, m: int = 0, n: int = 0, r: int = 2,
              max_index: int = DEFAULT_MAX_INDEX) -> list[BenchRow]:
    """Time the direct sum against the closed form for each ``k``.

    The sum runs on a fresh memoized context, the closed form on a context
    that computes every term by matrix powering. Timings are withheld for any
    ``k`` whose two values differ. Raises :class:`PreconditionUnmet` when the
    instance fails a hypothesis.
    """
    ident = identities.get(identity_id)
    if not ident.applies(params):
        raise PreconditionUnmet(f"family={ident.family}")
    rows = []
    for k in k_values:
        if k < 0:
            raise ValueError("k must be non-negative")
        idx = Idx(m=m, n=n, r=r, k=k)
        memo = Context(params, max_index)
        fast = Context(params, max_index, fast=True)
        ident.preconditions(fast, idx)
        t0 = time.perf_counter()
        lhs = ident.lhs(memo, idx)
        t1 = time.perf_counter()
        rhs = ident.rhs(fast, idx)
        t2 = time.perf_counter()
        if lhs == rhs:
            rows.append(BenchRow(k, True, t1 - t0, t2 - t1))
        else:
            rows.append(BenchRow(k, False, None, None))
    return rows


def format_bench(identity_id: str, rows: list[BenchRow]) -> str:
    lines = [f"{identity_id}", f"{'k':>8}  {'direct sum (s)':>14}  {'closed form (s)':>15}  {'speedup':>9}  equal"]
    for row in rows:
        if row.equal:
            speed = f"{row.speedup:9.1f}" if row.speedup else f"{'inf':>9}"
            lines.append(f"{row.k:>8}  {row.lhs_seconds:>14.6f}  {row.rhs_seconds:>15.6f}  {speed}  yes")
        else:
            lines.append(f"{row.k:>8}  {'-':>14}  {'-':>15}  {'-':>9}  NO")
    return "\n".join(lines)
