"""Seeded random unicyclic graphs: a cycle plus uniform random attachment."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal, Optional

from .graph_core import Graph

Parity = Literal["even", "odd", "any"]


class GenSpecError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    n: int
    cycle_length: Optional[int] = None  # drawn from the seed when None
    parity: Parity = "any"
    seed: int = 0

    def allowed_lengths(self) -> list[int]:
        lengths = range(3, self.n + 1)
        if self.parity == "even":
            return [c for c in lengths if c % 2 == 0]
        if self.parity == "odd":
            return [c for c in lengths if c % 2 == 1]
        return list(lengths)

    def validate(self) -> None:
        if self.parity not in ("even", "odd", "any"):
            raise GenSpecError(f"unknown parity {self.parity!r}")
        c = self.cycle_length
        if c is not None:
            if c < 3:
                raise GenSpecError(f"cycle length {c} < 3")
            if c > self.n:
                raise GenSpecError(f"cycle length {c} exceeds n={self.n}")
            if self.parity != "any" and (c % 2 == 0) != (self.parity == "even"):
                raise GenSpecError(f"cycle length {c} is not {self.parity}")
        elif not self.allowed_lengths():
            raise GenSpecError(f"no {self.parity} cycle length fits n={self.n}")


def random_unicyclic(spec: GenSpec) -> Graph:
    """Deterministic in ``spec``.

    Build the cycle ``1..c``, attach vertices ``c+1..n`` one at a time to a
    uniformly chosen earlier vertex, then shuffle the vertex labels and the
    edge order.
    """
    spec.validate()
    rng = random.Random(spec.seed)
    n = spec.n
    c = spec.cycle_length if spec.cycle_length is not None else rng.choice(spec.allowed_lengths())
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges += [(v, rng.randrange(v)) for v in range(c, n)]
    labels = list(range(n))
    rng.shuffle(labels)
    rng.shuffle(edges)
    return Graph(n, tuple((labels[u], labels[v]) for u, v in edges))
