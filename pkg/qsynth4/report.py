"""
Text and JSON reports for synthesis and benchmark runs
"""

import json
from dataclasses import dataclass
from typing import Any

from qsynth4.benchmarks import ReferenceRow
from qsynth4.synthesizer import SynthStats

RESET = "\033[0m"
BOLD = "\033[1m"
GREEN = "\033[32m"
RED = "\033[31m"
YELLOW = "\033[33m"

COST_NOTE = "declared = published per-gate constants; actual = M-S gates + 1-qudit shifts after lowering"


@dataclass
class BenchRow:
    name: str
    status: str  # pass, fail, skipped, error
    reference: ReferenceRow
    reference_only: bool = False
    stats: SynthStats | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "note": self.note,
            "reference_only": self.reference_only,
            "reference": {
                "max_ancilla": self.reference.max_ancilla,
                "reduced_ancilla": self.reference.reduced_ancilla,
                "levels": self.reference.levels,
                "cost": self.reference.cost,
                "prior_levels": self.reference.prior_levels,
                "prior_cost": self.reference.prior_cost,
            },
            "stats": self.stats.to_dict() if self.stats else None,
        }


def to_json(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def _cell(value) -> str:
    return "-" if value is None else str(value)


def format_stats(stats: SynthStats) -> str:
    """Human-readable synthesis report"""
    lines = [
        f"Circuit:          {stats.name or '(unnamed)'}",
        f"Inputs/outputs:   {stats.m}/{stats.k}",
        f"Minterms:         {sum(stats.minterms_per_output)} (n={stats.n}, p={stats.p}, s={stats.s}; "
        f"per output {', '.join(str(c) for c in stats.minterms_per_output)})",
        f"Max ancilla:      {stats.max_ancilla}",
        f"Reduced ancilla:  {stats.reduced_ancilla}",
        f"Helper ancilla:   {stats.helper_ancilla} (Min/Max targets and adder copies)",
        f"Levels:           {stats.levels}",
        f"Declared cost:    {stats.cost}",
        f"Actual cost:      {_cell(stats.actual_cost)}",
        f"Lowered levels:   {_cell(stats.lowered_levels)}",
        f"Pair merges:      {stats.pair_merges}",
        f"Multi-arg lits:   {stats.multi_arg_literals}",
        f"Unmerged 0-pairs: {stats.unmerged_zero_pairs}",
        "Gates:            " + ", ".join(f"{kind}={count}" for kind, count in stats.gate_counts.items()),
    ]
    for name, template in stats.add_templates.items():
        lines.append(f"Adder template:   {name} = {template}")
    if stats.unmerged_zero_pairs:
        lines.append("Note: symmetric minterm pairs containing 0 are left unmerged (C2CS inputs are limited to {1,2,3})")
    lines.append(f"Cost: {COST_NOTE}")
    return "\n".join(lines) + "\n"


_BENCH_HEADER = (
    "circuit", "max anc", "red anc", "levels", "declared", "actual",
    "ref max", "ref red", "ref lvl", "ref cost", "prior lvl", "prior cost", "verdict",
)


def format_bench_table(rows: list[BenchRow], color: bool = False) -> str:
    table = [_BENCH_HEADER]
    for row in rows:
        s = row.stats
        ref = row.reference
        table.append((
            row.name + ("*" if row.reference_only else ""),
            _cell(s and s.max_ancilla),
            _cell(s and s.reduced_ancilla),
            _cell(s and s.levels),
            _cell(s and s.cost),
            _cell(s and s.actual_cost),
            str(ref.max_ancilla),
            str(ref.reduced_ancilla),
            str(ref.levels),
            str(ref.cost),
            _cell(ref.prior_levels),
            _cell(ref.prior_cost),
            row.status,
        ))
    widths = [max(len(r[i]) for r in table) for i in range(len(_BENCH_HEADER))]

    def render(cells) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    header = render(table[0])
    lines = [f"{BOLD}{header}{RESET}" if color else header, "-" * len(header)]
    for cells, row in zip(table[1:], rows):
        line = render(cells)
        if color:
            shade = {"pass": GREEN, "fail": RED, "error": RED}.get(row.status, YELLOW)
            line = line[: -len(row.status)] + f"{shade}{row.status}{RESET}"
        lines.append(line)
    notes = [f"{row.name}: {row.note}" for row in rows if row.note]
    lines.append("")
    lines.append("* reference only: published encoding unknown")
    lines.append(f"Cost: {COST_NOTE}")
    lines.extend(notes)
    return "\n".join(lines) + "\n"
