"""Per-target search for the best floor-scale-modulo scale value."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cycles import DEFAULT_MAX_LEN, ChainTable, CycleCensus, census
from .exponent import ExponentMatrix, mother_matrix
from .lifting import floor_lift, fsm_lift, units

__all__ = [
    "LiftSchedule",
    "ScheduleRow",
    "SearchResult",
    "build_schedule",
    "candidate_scales",
    "search_optimal_r",
]


@dataclass(frozen=True)
class SearchResult:
    target: int
    scale: int
    girth: int | None
    cycles: int
    max_len: int

    @property
    def girth_label(self) -> str:
        return str(self.girth) if self.girth is not None else f">={self.max_len + 2}"

    @classmethod
    def from_census(cls, target: int, scale: int, c: CycleCensus) -> "SearchResult":
        return cls(target, scale, c.girth, c.count_at_girth, c.max_len)


def candidate_scales(base_size: int, candidates: str = "units") -> list[int]:
    """``"units"``: residues coprime with ``base_size``; ``"all"``: every ``0 < r < base_size``."""
    if candidates == "units":
        return units(base_size)
    if candidates == "all":
        return list(range(1, base_size)) or [1]
    raise ValueError(f"unknown candidate set {candidates!r}, expected 'units' or 'all'")


def _rank(c: CycleCensus, scale: int):
    return (*c.key(), scale)


def search_optimal_r(E: ExponentMatrix, target: int, max_len: int = DEFAULT_MAX_LEN, *,
                     candidates: str | Iterable[int] = "units", table: ChainTable | None = None,
                     workers: int = 1) -> SearchResult:
    """Exhaustive search over scale values for lifting ``E`` to ``target``.

    Maximises girth, then minimises the number of chains closing at the girth,
    then prefers the smallest scale.
    """
    scales = candidate_scales(E.circulant_size, candidates) if isinstance(candidates, str) else list(candidates)
    if not scales:
        raise ValueError("empty candidate set")
    if table is None:
        table = ChainTable(mother_matrix(E))

    def evaluate(r):
        c = census(fsm_lift(E, target, r), max_len, stop_at_girth=True, table=table)
        return _rank(c, r), c

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            ranked = list(pool.map(evaluate, scales))
    else:
        ranked = [evaluate(r) for r in scales]
    (_, _, best_r), best = min(ranked, key=lambda item: item[0])
    return SearchResult.from_census(target, best_r, best)


@dataclass(frozen=True)
class ScheduleRow:
    target: int
    fsm: SearchResult
    floor: SearchResult


@dataclass(frozen=True)
class LiftSchedule:
    """Chosen scale per target alongside the floor-lifting baseline (scale 1)."""

    base_size: int
    base_id: str
    max_len: int
    candidates: str
    rows: tuple[ScheduleRow, ...]

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def to_text(self) -> str:
        head = [
            f"{'':>4}  {'floor scale modulo':^22}  {'floor (r=1)':^14}",
            f"{'Lk':>4}  {'r':>4}  {'girth / cycles':>16}  {'girth / cycles':>14}",
        ]
        body = [
            f"{row.target:>4}  {row.fsm.scale:>4}  "
            f"{row.fsm.girth_label + ' / ' + str(row.fsm.cycles):>16}  "
            f"{row.floor.girth_label + ' / ' + str(row.floor.cycles):>14}"
            for row in self.rows
        ]
        return "\n".join(head + body) + "\n"

    def to_kv(self) -> str:
        lines = []
        for row in self.rows:
            lines.append(
                f"target={row.target} r={row.fsm.scale} girth={row.fsm.girth_label} "
                f"cycles={row.fsm.cycles} floor_girth={row.floor.girth_label} "
                f"floor_cycles={row.floor.cycles}"
            )
        lines.append(f"max_cycle_len={self.max_len} candidates={self.candidates}")
        return "\n".join(lines) + "\n"


def build_schedule(E: ExponentMatrix, targets: Sequence[int], max_len: int = DEFAULT_MAX_LEN, *,
                   candidates: str = "units", base_id: str = "", workers: int = 1) -> LiftSchedule:
    """Search every target independently and pair each result with its floor baseline."""
    for t in targets:
        if not 1 <= t <= E.circulant_size:
            raise ValueError(f"target {t} outside [1, {E.circulant_size}]")
    table = ChainTable(mother_matrix(E))
    rows = []
    for t in targets:
        floor = census(floor_lift(E, t), max_len, stop_at_girth=True, table=table)
        best = search_optimal_r(E, t, max_len, candidates=candidates, table=table, workers=workers)
        rows.append(ScheduleRow(t, best, SearchResult.from_census(t, 1, floor)))
    return LiftSchedule(E.circulant_size, base_id, max_len, candidates, tuple(rows))
