"""Certificate containers and their frozen JSON forms."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ContractViolation

FAN_CANONICAL = "fan-canonical"
JOIN = "join"

HAMILTONIAN = "hamiltonian"
NOT_HAMILTONIAN = "not_hamiltonian"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class CycleCertificate:
    """A claimed Hamiltonian cycle of a k-token graph.

    cycle lists all C(m+n, k) token vertices in cyclic visiting order.
    marker, when present, is a pair of cyclically consecutive positions
    (p, q) with cycle[p] = {w1, v1..v[k-1]} and cycle[q] = {v1..vk} under
    the fan-canonical labeling.
    """

    m: int
    n: int
    k: int
    cycle: tuple[tuple[int, ...], ...]
    marker: tuple[int, int] | None = None
    labeling: str = FAN_CANONICAL

    @property
    def base_order(self) -> int:
        return self.m + self.n

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "labeling": self.labeling,
            "cycle": [list(v) for v in self.cycle],
            "marker": list(self.marker) if self.marker is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "CycleCertificate":
        try:
            marker = data.get("marker")
            return cls(
                m=int(data["m"]),
                n=int(data["n"]),
                k=int(data["k"]),
                cycle=tuple(tuple(int(x) for x in v) for v in data["cycle"]),
                marker=(int(marker[0]), int(marker[1])) if marker is not None else None,
                labeling=str(data.get("labeling", FAN_CANONICAL)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ContractViolation(f"malformed certificate JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "CycleCertificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ContractViolation(f"certificate is not valid JSON: {exc}") from exc
        return cls.from_json_dict(data)


@dataclass(frozen=True)
class NonHamWitness:
    """A vertex cut A of a token graph with more leftover components than |A|."""

    cut: tuple[tuple[int, ...], ...]
    cut_size: int
    component_count: int

    def to_json_dict(self) -> dict:
        return {
            "cut": [list(v) for v in self.cut],
            "cut_size": self.cut_size,
            "components": self.component_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "NonHamWitness":
        try:
            return cls(
                cut=tuple(tuple(int(x) for x in v) for v in data["cut"]),
                cut_size=int(data["cut_size"]),
                component_count=int(data["components"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ContractViolation(f"malformed witness JSON: {exc}") from exc


@dataclass(frozen=True)
class FanFeasibility:
    """Outcome of the k-token Hamiltonicity dispatcher for a fan."""

    status: str
    certificate: CycleCertificate | None = None
    witness: NonHamWitness | None = None
    reason: str | None = None
