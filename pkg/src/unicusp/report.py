"""Search driver and the classification report (table / JSON / CSV)."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .candidates import CandidateTriple, derive, enumerate_candidates, genus_valid
from .obstructions import ClassificationVerdict, FilterSet, Status, run_pipeline

ROW_FIELDS = ("d", "a", "b", "cbar2", "x", "verdict", "eliminating_filter", "citation", "witness")


@dataclass(frozen=True)
class Cbar2Range:
    lo: int | None = None
    hi: int | None = None

    @classmethod
    def parse(cls, text: str | None) -> Cbar2Range:
        """Parse "min..max" where either side may be empty, e.g. "..-2" or "1..".."""
        if text is None or text.strip() in ("", "all", ".."):
            return cls()
        if ".." not in text:
            v = int(text)
            return cls(v, v)
        lo, hi = text.split("..", 1)
        r = cls(int(lo) if lo.strip() else None, int(hi) if hi.strip() else None)
        if r.lo is not None and r.hi is not None and r.lo > r.hi:
            raise ValueError(f"empty C^2 range {text!r}")
        return r

    def __contains__(self, c: int) -> bool:
        return (self.lo is None or c >= self.lo) and (self.hi is None or c <= self.hi)

    def __str__(self) -> str:
        return f"{'' if self.lo is None else self.lo}..{'' if self.hi is None else self.hi}"


@dataclass
class ClassificationReport:
    meta: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    trace: list[dict[str, Any]] | None = None  # per-filter detail, single-triple reports only

    def survivors(self) -> list[tuple[int, int, int]]:
        return [(r["d"], r["a"], r["b"]) for r in self.rows
                if r["verdict"] in (Status.REALIZABLE_KNOWN.value, Status.SURVIVOR_UNKNOWN.value)]

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"meta": self.meta, "rows": self.rows}
        if self.trace is not None:
            out["trace"] = self.trace
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(ROW_FIELDS)
        for r in self.rows:
            w.writerow([_csv_cell(r[k]) for k in ROW_FIELDS])
        return buf.getvalue()

    def to_table(self) -> str:
        header = ("d", "a", "b", "C^2", "x", "verdict", "filter", "witness")
        body = []
        for r in self.rows:
            body.append((str(r["d"]), str(r["a"]), str(r["b"]), str(r["cbar2"]), str(r["x"]),
                         r["verdict"], r["eliminating_filter"] or "-", _csv_cell(r["witness"]) or "-"))
        widths = [max(len(h), *(len(row[k]) for row in body)) if body else len(h)
                  for k, h in enumerate(header)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
        lines.append("  ".join("-" * w for w in widths))
        for row in body:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        meta = ", ".join(f"{k}={v}" for k, v in sorted(self.meta.items()) if k != "filter_ids")
        n_surv = len(self.survivors())
        lines.append("")
        lines.append(f"# {meta}")
        lines.append(f"# rows: {len(self.rows)}, surviving: {n_surv}")
        if self.trace is not None:
            lines.append("")
            for t in self.trace:
                mark = "pass" if t["passed"] else "FAIL"
                if not t["applicable"]:
                    mark = "n/a "
                lines.append(f"  [{mark}] {t['filter_id']}: {t['citation']}"
                             + (f"  {_csv_cell(t['witness'])}" if t["witness"] else ""))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "table":
            return self.to_table()
        raise ValueError(f"unknown format {fmt!r}")


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


def verdict_row(v: ClassificationVerdict) -> dict[str, Any]:
    t = v.triple
    inv = derive(t)
    row: dict[str, Any] = {"d": t.d, "a": t.a, "b": t.b, "cbar2": inv.cbar2, "x": inv.x,
                           "verdict": v.status.value, "eliminating_filter": None,
                           "citation": None, "witness": None}
    if v.eliminated_by is not None:
        row["eliminating_filter"] = v.eliminated_by.filter_id
        row["citation"] = v.eliminated_by.citation
        row["witness"] = _jsonable(v.eliminated_by.witness)
    elif v.family is not None:
        row["citation"] = f"known realizable {v.family}"
        row["witness"] = {"family": v.family.kind.value, "parameter": v.family.parameter}
    return row


def _search_degree(args: tuple[int, tuple[str, ...], str, Cbar2Range]) -> list[dict[str, Any]]:
    d, filters, name, crange = args
    fs = FilterSet(name, filters)
    rows = []
    for t in enumerate_candidates(d):
        if t.cbar2 not in crange:
            continue
        rows.append(verdict_row(run_pipeline(t, fs)))
    return rows


def search(dmax: int, filterset: FilterSet, cbar2: Cbar2Range | None = None, jobs: int = 1) -> ClassificationReport:
    """Classify every genus-valid triple with 3 <= d <= dmax."""
    if dmax < 3:
        raise ValueError(f"dmax must be >= 3, got {dmax}")
    crange = cbar2 or Cbar2Range()
    work = [(d, filterset.filters, filterset.name, crange) for d in range(3, dmax + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_search_degree, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        chunks = [_search_degree(w) for w in work]
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=lambda r: (r["d"], r["a"]))
    meta = {
        "dmax": dmax,
        "filter_set": filterset.name,
        "filter_ids": filterset.ordered(),
        "cbar2": str(crange),
        "version": __version__,
    }
    return ClassificationReport(meta, rows)


def classify(d: int, a: int, b: int) -> ClassificationReport:
    """Single-triple report with the verdict of every FULL filter."""
    from .obstructions import FULL

    meta = {"filter_set": FULL.name, "filter_ids": FULL.ordered(), "version": __version__}
    if not genus_valid(d, a, b):
        row = {"d": d, "a": a, "b": b, "cbar2": d * d - a * b, "x": 3 * d - 8 * a,
               "verdict": Status.NOT_GENUS_VALID.value, "eliminating_filter": None,
               "citation": "genus formula (a-1)(b-1) = (d-1)(d-2) with gcd(a,b) = 1, 1 < a < b",
               "witness": {"(a-1)(b-1)": (a - 1) * (b - 1), "(d-1)(d-2)": (d - 1) * (d - 2)}}
        return ClassificationReport(meta, [row], trace=[])
    v = run_pipeline(CandidateTriple(d, a, b), FULL, full_trace=True)
    trace = [{"filter_id": f.filter_id, "passed": f.passed, "applicable": f.applicable,
              "citation": f.citation, "witness": _jsonable(f.witness)} for f in v.trace]
    return ClassificationReport(meta, [verdict_row(v)], trace=trace)
