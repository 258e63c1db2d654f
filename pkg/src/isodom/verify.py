"""Formula-versus-oracle comparison grids and their JSON reports.

A report is a flat list of cells.  Each cell names the graph it was checked on
(as a :class:`~isodom.graph.FamilySpec` string), the cardinality, which oracle
quantity applies, the formula value and the oracle value.  That is enough to
recompute the oracle side of any single cell, see :func:`replay_record`.

Mismatches are data: every grid is evaluated in full.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable

from . import families, graph, oracle
from .families import DEFAULT_CONVENTION, BaseCaseConvention, Variant
from .graph import FamilySpec
from .oracle import CapExceeded, CountTable
from .polynomials import d0_corona_k1_poly

TARGETS = (
    "table1",
    "d-path-recurrence",
    "d-path-explicit",
    "d0-path",
    "d0-cycle",
    "d0-join",
    "d0-corona-k1",
    "d0-k1-corona",
    "corona-poly",
    "gamma0-path-cycle",
    "goh2",
)

DEFAULT_N_RANGE = {
    "d-path-recurrence": (1, 12),
    "d-path-explicit": (1, 14),
    "d0-path": (1, 12),
    "d0-cycle": (3, 10),
    "d0-join": (2, 5),
    "d0-corona-k1": (2, 5),
    "d0-k1-corona": (1, 6),
    "corona-poly": (2, 5),
    "gamma0-path-cycle": (1, 12),
    "goh2": (2, 3),
}

# d0(P_n, j) for 1 <= j <= n <= 12, as printed.
TABLE1 = (
    (1,),
    (2, 0),
    (1, 1, 0),
    (0, 3, 2, 0),
    (0, 3, 7, 2, 0),
    (0, 1, 10, 9, 2, 0),
    (0, 0, 8, 19, 12, 2, 0),
    (0, 0, 4, 25, 34, 15, 2, 0),
    (0, 0, 1, 22, 59, 52, 18, 2, 0),
    (0, 0, 0, 13, 70, 111, 74, 20, 2, 0),
    (0, 0, 0, 5, 61, 167, 192, 100, 24, 2, 0),
    (0, 0, 0, 1, 40, 191, 344, 297, 130, 27, 2, 0),
)


@dataclass
class Record:
    params: dict
    formula_value: int
    oracle_value: int
    match: bool
    flags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out = {
            "params": self.params,
            "formula_value": str(self.formula_value),
            "oracle_value": str(self.oracle_value),
            "match": self.match,
        }
        if self.flags:
            out["flags"] = list(self.flags)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> Record:
        return cls(
            dict(d["params"]),
            int(d["formula_value"]),
            int(d["oracle_value"]),
            bool(d["match"]),
            tuple(d.get("flags", ())),
        )


@dataclass
class VerificationReport:
    target: dict
    records: list[Record] = field(default_factory=list)
    environment: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        mismatched = [r for r in self.records if not r.match]
        return {
            "total": len(self.records),
            "matches": len(self.records) - len(mismatched),
            "mismatches": len(mismatched),
            "first_mismatch": mismatched[0].params if mismatched else None,
        }

    @property
    def mismatches(self) -> list[Record]:
        return [r for r in self.records if not r.match]

    @property
    def clean(self) -> bool:
        return all(r.match for r in self.records)

    def find(self, **params) -> Record:
        for r in self.records:
            if all(r.params.get(k) == v for k, v in params.items()):
                return r
        raise KeyError(f"no cell with {params}")

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "grid": [r.to_dict() for r in self.records],
            "summary": self.summary,
            "environment": self.environment,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        return cls(dict(d["target"]), [Record.from_dict(r) for r in d["grid"]], dict(d["environment"]))


class _Oracle:
    """Per-run cache of oracle tables keyed by spec string."""

    def __init__(self, cap: int, workers: int | None) -> None:
        self.cap = cap
        self.workers = workers
        self._tables: dict[tuple[str, str], CountTable] = {}

    def table(self, spec: FamilySpec, count: str, cell: dict | None = None) -> CountTable:
        key = (str(spec), count)
        if key not in self._tables:
            if spec.order() > self.cap:
                raise CapExceeded(
                    f"cell {cell or {}} needs graph {spec} on {spec.order()} vertices; "
                    f"enumeration cap is {self.cap}"
                )
            g = graph.build(spec)
            fn = oracle.count_dominating if count == "dominating" else oracle.count_isolate_dominating
            self._tables[key] = fn(g, workers=self.workers, cap=self.cap)
        return self._tables[key]

    def value(self, spec: FamilySpec, count: str, cardinality: int, cell: dict) -> int:
        return self.table(spec, count, cell)[cardinality]


def _report(target: str, variant, conv, cap: int, seed: int | None, relation: str = "eq"):
    t = {"id": target}
    if variant is not None:
        t["variant"] = Variant(variant).value
    if conv is not None:
        t["convention"] = conv.name
    env = {"enumeration_cap": cap, "relation": relation}
    if seed is not None:
        env["seed"] = seed
    return VerificationReport(t, [], env)


def _cell(rep: VerificationReport, params: dict, formula: int, observed: int, flags=()) -> None:
    if rep.environment["relation"] == "le":
        ok = observed <= formula
    else:
        ok = observed == formula
    rep.records.append(Record(params, formula, observed, ok, tuple(flags)))


def _range(target: str, n_range) -> range:
    lo, hi = DEFAULT_N_RANGE[target] if n_range is None else (min(n_range), max(n_range))
    return range(lo, hi + 1)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> graph.Graph:
    """G(n, p) conditioned on connectivity, by rejection."""
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = graph.Graph.from_edges(n, edges)
        if g.is_connected():
            return g


def base_specs(n: int) -> list[FamilySpec]:
    """P_n, C_n (n >= 3), K_n and K_{1,n-1} (n >= 2) as family specs."""
    specs = [FamilySpec("path", n)]
    if n >= 3:
        specs.append(FamilySpec("cycle", n))
    specs.append(FamilySpec("complete", n))
    if n >= 2:
        specs.append(FamilySpec("star", n - 1))
    return specs


def verify_table1(*, cap: int | None = None, workers: int | None = None) -> VerificationReport:
    cap = oracle.enumeration_cap() if cap is None else cap
    o = _Oracle(cap, workers)
    rep = _report("table1", None, None, cap, None)
    for n, row in enumerate(TABLE1, 1):
        spec = FamilySpec("path", n)
        for j, printed in enumerate(row, 1):
            cell = {"n": n, "i": j, "graph": str(spec), "cardinality": j, "count": "isolate"}
            _cell(rep, cell, printed, o.value(spec, "isolate", j, cell))
    return rep


def verify_formula(
    target: str,
    variant: Variant | str | None = None,
    conv: BaseCaseConvention = DEFAULT_CONVENTION,
    n_range: Iterable[int] | None = None,
    i_values: Iterable[int] | None = None,
    *,
    seed: int = 0,
    samples: int = 20,
    cap: int | None = None,
    workers: int | None = None,
) -> VerificationReport:
    """Compare one formula against the oracle on every cell of a grid.

    ``i_values`` restricts the cardinalities checked; by default every
    cardinality the formula is defined for is included.
    """
    if target == "table1":
        return verify_table1(cap=cap, workers=workers)
    if target == "goh2":
        lo_hi = n_range if n_range is not None else DEFAULT_N_RANGE["goh2"]
        return verify_bound(lo_hi, seed=seed, cap=cap, workers=workers)
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    cap = oracle.enumeration_cap() if cap is None else cap
    o = _Oracle(cap, workers)
    ns = _range(target, n_range)
    wanted = None if i_values is None else set(i_values)

    def keep(i: int) -> bool:
        return wanted is None or i in wanted

    if target == "d-path-recurrence":
        variant = Variant(variant or Variant.CORRECTED)
        rep = _report(target, variant, conv, cap, None)
        for n in ns:
            spec = FamilySpec("path", n)
            for i in filter(keep, range(1, n + 1)):
                cell = {"n": n, "i": i, "graph": str(spec), "cardinality": i, "count": "dominating"}
                _cell(rep, cell, families.d_path_recurrence(n, i, variant, conv),
                      o.value(spec, "dominating", i, cell))
    elif target == "d-path-explicit":
        rep = _report(target, None, None, cap, None)
        for n in ns:
            spec = FamilySpec("path", n)
            for i in filter(keep, range(1, n + 1)):
                cell = {"n": n, "i": i, "graph": str(spec), "cardinality": i, "count": "dominating"}
                _cell(rep, cell, families.d_path_explicit(n, i), o.value(spec, "dominating", i, cell))
    elif target == "d0-path":
        rep = _report(target, None, conv, cap, None)
        for n in ns:
            spec = FamilySpec("path", n)
            for i in filter(keep, range(1, n + 1)):
                cell = {"n": n, "i": i, "graph": str(spec), "cardinality": i, "count": "isolate"}
                _cell(rep, cell, families.d0_path(n, i, conv), o.value(spec, "isolate", i, cell))
    elif target == "d0-cycle":
        rep = _report(target, None, conv, cap, None)
        for n in ns:
            if n < 3:
                continue
            spec = FamilySpec("cycle", n)
            for i in filter(keep, range(1, n + 1)):
                cell = {"n": n, "i": i, "graph": str(spec), "cardinality": i, "count": "isolate"}
                _cell(rep, cell, families.d0_cycle(n, i, conv), o.value(spec, "isolate", i, cell))
    elif target == "d0-join":
        rep = _report(target, None, None, cap, seed)
        rng = random.Random(seed)
        lo, hi = ns.start, ns.stop - 1
        for pair in range(samples):
            g1 = random_connected_graph(rng, rng.randint(lo, hi))
            g2 = random_connected_graph(rng, rng.randint(lo, hi))
            s1, s2 = graph.explicit_spec(g1), graph.explicit_spec(g2)
            joined = FamilySpec("join", children=(s1, s2))
            predicted = families.d0_join(o.table(s1, "isolate"), o.table(s2, "isolate"))
            for i in filter(keep, range(1, joined.order() + 1)):
                cell = {"pair": pair, "i": i, "graph": str(joined), "cardinality": i, "count": "isolate"}
                _cell(rep, cell, predicted[i], o.value(joined, "isolate", i, cell))
    elif target == "d0-corona-k1":
        rep = _report(target, None, None, cap, None)
        for n in ns:
            for base in base_specs(n):
                spec = FamilySpec("corona-k1", children=(base,))
                for c in filter(keep, range(0, 2 * n + 1)):
                    cell = {"n": n, "base": str(base), "i": c, "graph": str(spec),
                            "cardinality": c, "count": "isolate"}
                    _cell(rep, cell, families.d0_corona_k1(n, c), o.value(spec, "isolate", c, cell))
    elif target == "d0-k1-corona":
        rep = _report(target, None, None, cap, None)
        for n in ns:
            for base in base_specs(n):
                spec = FamilySpec("join", children=(FamilySpec("complete", 1), base))
                predicted = families.d0_k1_corona(o.table(base, "isolate"))
                for i in filter(keep, range(1, spec.order() + 1)):
                    cell = {"n": n, "base": str(base), "i": i, "graph": str(spec),
                            "cardinality": i, "count": "isolate"}
                    _cell(rep, cell, predicted[i], o.value(spec, "isolate", i, cell))
    elif target == "corona-poly":
        variant = Variant(variant or Variant.RECONCILED)
        rep = _report(target, variant, None, cap, None)
        for n in ns:
            spec = FamilySpec("corona-k1", children=(FamilySpec("path", n),))
            poly = d0_corona_k1_poly(n, variant)
            for k in filter(keep, range(0, 2 * n + 1)):
                cell = {"n": n, "i": k, "graph": str(spec), "cardinality": k, "count": "isolate"}
                _cell(rep, cell, poly[k], o.value(spec, "isolate", k, cell))
    else:  # gamma0-path-cycle
        rep = _report(target, None, None, cap, None)
        for kind in ("path", "cycle"):
            for n in ns:
                if kind == "cycle" and n < 3:
                    continue
                spec = FamilySpec(kind, n)
                cell = {"family": kind, "n": n, "graph": str(spec), "count": "gamma0"}
                table = o.table(spec, "isolate", cell)
                observed = next(i for i, c in enumerate(table) if c)
                _cell(rep, cell, families.gamma0_path_cycle(n), observed)
    return rep


def verify_bound(
    n_range: Iterable[int] = (2, 3),
    h_specs: Iterable[FamilySpec | str] = ("path:4", "cycle:4"),
    seed: int = 0,
    *,
    cap: int | None = None,
    workers: int | None = None,
) -> VerificationReport:
    """Audit the corona upper bound on d0(P_n o H, t*gamma0(H) + n - t).

    A cell holds when the oracle count does not exceed the bound.  Cells with
    gamma0(H) = 1 all target cardinality n, whatever t is, and are flagged
    ``coinciding-cardinalities``.
    """
    cap = oracle.enumeration_cap() if cap is None else cap
    o = _Oracle(cap, workers)
    rep = _report("goh2", None, None, cap, seed, relation="le")
    h_specs = [FamilySpec.parse(h) if isinstance(h, str) else h for h in h_specs]
    lo, hi = min(n_range), max(n_range)
    for n in range(lo, hi + 1):
        g_spec = FamilySpec("path", n)
        for h_spec in h_specs:
            h_iso = o.table(h_spec, "isolate")
            h_dom = o.table(h_spec, "dominating")
            g0 = next(i for i, c in enumerate(h_iso) if c)
            product = FamilySpec("corona", children=(g_spec, h_spec))
            for t in range(1, n + 1):
                c = families.bound_cardinality(n, t, g0)
                bound = families.corona_upper_bound(n, t, g0, h_iso[g0], h_dom[g0])
                cell = {"G": str(g_spec), "H": str(h_spec), "t": t, "gamma0_h": g0,
                        "graph": str(product), "cardinality": c, "count": "isolate"}
                flags = ("coinciding-cardinalities",) if g0 == 1 else ()
                _cell(rep, cell, bound, o.value(product, "isolate", c, cell), flags)
    return rep


def replay_record(record: Record, *, cap: int | None = None) -> int:
    """Recompute the oracle value of one report cell from its parameters."""
    p = record.params
    spec = FamilySpec.parse(p["graph"])
    g = graph.build(spec)
    if p["count"] == "dominating":
        return oracle.count_dominating(g, cap=cap)[p["cardinality"]]
    if p["count"] == "gamma0":
        return oracle.gamma0(g, cap=cap)
    return oracle.count_isolate_dominating(g, cap=cap)[p["cardinality"]]


def verify_all(
    n_max: int | None = None,
    seed: int = 0,
    *,
    conv: BaseCaseConvention = DEFAULT_CONVENTION,
    cap: int | None = None,
    workers: int | None = None,
) -> list[VerificationReport]:
    reports = [verify_table1(cap=cap, workers=workers)]
    for target in TARGETS[1:]:
        variants: list = [None]
        if target == "d-path-recurrence":
            variants = [Variant.LITERAL, Variant.CORRECTED]
        elif target == "corona-poly":
            variants = [Variant.LITERAL, Variant.RECONCILED]
        lo, hi = DEFAULT_N_RANGE[target]
        n_range = (lo, hi if n_max is None else max(lo, min(hi, n_max)))
        for v in variants:
            reports.append(
                verify_formula(target, v, conv, n_range, seed=seed, cap=cap, workers=workers)
            )
    return reports
