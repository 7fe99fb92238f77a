"""Published reference energies and the parameter sets they were quoted with."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .model import PotentialParams, Symmetry

TABLE_PARAMS = PotentialParams(alpha=0.35, A=8.0, B=2.0, M=5.0, x0=0.1)

# The spin constant is quoted with both signs and the pseudospin constant with
# two magnitudes; both candidates of each are kept so they can be compared.
CS_QUOTED = -0.35
CS_CANDIDATES = (-0.35, 0.35)
CPS_CANDIDATES = (-10.0, -15.0)


@dataclass(frozen=True)
class TableRow:
    symmetry: Symmetry
    l: int
    n: int
    kappa_a: int
    kappa_b: int
    label_a: str
    label_b: str
    energy: float

    @property
    def kappas(self) -> tuple[int, int]:
        return (self.kappa_a, self.kappa_b)


@lru_cache(maxsize=None)
def _load() -> tuple[TableRow, ...]:
    text = resources.files("ptdirac").joinpath("data/reference_tables.csv").read_text("utf-8")
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    rows = []
    for rec in csv.DictReader(lines):
        rows.append(TableRow(
            symmetry=Symmetry(rec["table"]),
            l=int(rec["l"]),
            n=int(rec["n"]),
            kappa_a=int(rec["kappa_a"]),
            kappa_b=int(rec["kappa_b"]),
            label_a=rec["label_a"],
            label_b=rec["label_b"],
            energy=float(rec["energy"]),
        ))
    return tuple(rows)


def reference_rows(symmetry: Symmetry) -> list[TableRow]:
    """The eight rows of the spin or pseudospin reference table, in printed order."""
    return [r for r in _load() if r.symmetry is symmetry]
