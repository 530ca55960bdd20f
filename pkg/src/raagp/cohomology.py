"""Dimensions of the mod-p cohomology of G_Gamma.

H^n(G_Gamma, F_p) has dimension equal to the number of n-cliques of Gamma:
the cohomology ring of the abstract right-angled Artin group is the exterior
face ring of the clique complex (Kim-Roush), and it agrees with the
cohomology of the pro-p completion (Lorensen). None of this depends on p,
so the report takes no prime.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import DEFAULT_CLIQUE_CAP, SimplicialGraph, enumerate_cliques


@dataclass(frozen=True)
class CohomologyReport:
    betti: tuple[int, ...]

    @property
    def poincare(self) -> tuple[int, ...]:
        """Coefficients of the Poincare polynomial, lowest degree first."""
        return self.betti

    @property
    def euler(self) -> int:
        return sum((-1) ** n * b for n, b in enumerate(self.betti))

    @property
    def clique_dim(self) -> int:
        return len(self.betti) - 1

    def to_dict(self) -> dict:
        return {
            "betti": list(self.betti),
            "poincare": list(self.poincare),
            "euler": self.euler,
            "clique_dim": self.clique_dim,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        terms = []
        for n, b in enumerate(self.betti):
            if b:
                terms.append(str(b) if n == 0 else f"{b}t" if n == 1 else f"{b}t^{n}")
        return (
            f"betti: {' '.join(map(str, self.betti))}\n"
            f"poincare: {' + '.join(terms)}\n"
            f"euler: {self.euler}\n"
            f"clique_dim: {self.clique_dim}\n"
        )


def cohomology_report(g: SimplicialGraph, cap: int = DEFAULT_CLIQUE_CAP) -> CohomologyReport:
    counts = enumerate_cliques(g, cap=cap).counts
    top = max(counts)
    return CohomologyReport(tuple(counts.get(n, 0) for n in range(top + 1)))
