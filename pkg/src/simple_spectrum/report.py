"""Report rendering in text, TSV and JSON-lines formats.

Every report ends with a summary line that carries the total count.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .analytics import (
    classify_generic_primes,
    extremes,
    nongeneric_classes,
    partition_by_max_prime,
    stratify_kn,
)
from .groups import GroupRecord, display_name, group_order

REPORTS = ("groups", "by-max-prime", "generic-primes", "nongeneric-table", "kn-table", "extremes")
FORMATS = ("text", "tsv", "jsonl")

TSV_COLUMNS = ("name", "family", "p", "k", "subscript", "order_bits", "spectrum")


def _opt(v: int) -> int | None:
    return v or None


def record_fields(r: GroupRecord) -> dict:
    g = r.gid
    return {
        "name": r.name,
        "family": g.family.value,
        "p": _opt(g.p),
        "k": _opt(g.k),
        "subscript": _opt(g.n),
        "order_bits": group_order(g).bit_length(),
        "spectrum": list(r.spectrum),
        "aliases": [display_name(a) for a in r.aliases],
        "max_prime": r.max_prime,
        "spectrum_size": r.spectrum_size,
    }


def _tsv_line(r: GroupRecord) -> str:
    f = record_fields(r)
    cells = ["" if f[c] is None else str(f[c]) for c in TSV_COLUMNS[:-1]]
    cells.append(",".join(map(str, r.spectrum)))
    return "\t".join(cells)


def _names(records: Iterable[GroupRecord]) -> str:
    return ", ".join(r.name for r in records)


def select(records: Sequence[GroupRecord], report: str, lo=None, hi=None) -> list[GroupRecord]:
    """Records a report is about, in canonical order."""
    if report in ("groups", "by-max-prime", "kn-table"):
        return list(records)
    part = partition_by_max_prime(records)
    if report == "generic-primes":
        return [r for p in classify_generic_primes(part, lo, hi) for r in part[p].members]
    if report == "nongeneric-table":
        return [r for c in nongeneric_classes(part, lo, hi) for r in c.nongeneric_members]
    if report == "extremes":
        return [r for lvl in extremes(records) for r in lvl.witnesses]
    raise ValueError(f"unknown report {report!r}")


def _text_lines(records: Sequence[GroupRecord], report: str, lo, hi) -> list[str]:
    if report == "groups":
        return [r.name for r in records] + [f"{len(records)} groups"]
    part = partition_by_max_prime(records)
    if report == "by-max-prime":
        lines = [f"{p}\t{c.size}\t{_names(c.members)}" for p, c in part.items()]
        return lines + [f"{len(records)} groups"]
    if report == "generic-primes":
        primes = classify_generic_primes(part, lo, hi)
        return [str(p) for p in primes] + [f"{len(primes)} generic primes"]
    if report == "nongeneric-table":
        classes = nongeneric_classes(part, lo, hi)
        lines = [f"{c.p}\t{c.size}\t{_names(c.nongeneric_members)}" for c in classes]
        total = sum(len(c.nongeneric_members) for c in classes)
        return lines + [f"{total} groups in {len(classes)} non-generic classes"]
    if report == "kn-table":
        strata = stratify_kn(records)
        lines = [f"{s.n}\t{s.count}\t{_names(s.members)}" for s in strata]
        return lines + [f"{len(records)} groups"]
    if report == "extremes":
        lines = []
        total = 0
        for lvl in extremes(records):
            total += len(lvl.witnesses)
            lines.append(f"{lvl.size}\t{_names(lvl.witnesses)}")
            for grp in lvl.shared:
                if len(grp) > 1:
                    lines.append(f"{lvl.size}\tshared\t{_names(grp)}\t{','.join(map(str, grp[0].spectrum))}")
        return lines + [f"{total} groups"]
    raise ValueError(f"unknown report {report!r}")


def render(records: Sequence[GroupRecord], report: str = "groups", fmt: str = "text",
           lo: int | None = None, hi: int | None = None) -> str:
    """Full report as a string (``\\n``-terminated lines)."""
    if fmt == "text":
        lines = _text_lines(records, report, lo, hi)
    elif fmt == "tsv":
        chosen = select(records, report, lo, hi)
        lines = ["#" + "\t".join(TSV_COLUMNS)] + [_tsv_line(r) for r in chosen]
        lines.append(f"# {len(chosen)} groups")
    elif fmt == "jsonl":
        chosen = select(records, report, lo, hi)
        lines = [json.dumps(record_fields(r), separators=(",", ":")) for r in chosen]
        lines.append(json.dumps({"summary": {"report": report, "count": len(chosen)}}))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(lines) + "\n"
