"""Quivers as skew-symmetric exchange matrices, ice quivers and mutation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence


def _freeze(b) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in b)


@dataclass(frozen=True)
class Quiver:
    """A 2-cycle free quiver; ``b[i][j]`` is #arrows i->j minus #arrows j->i."""

    b: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        b = _freeze(self.b)
        object.__setattr__(self, "b", b)
        n = len(b)
        for i in range(n):
            if len(b[i]) != n:
                raise ValueError("exchange matrix must be square")
            if b[i][i]:
                raise ValueError(f"loop at vertex {i}")
            for j in range(i):
                if b[i][j] != -b[j][i]:
                    raise ValueError("exchange matrix must be skew-symmetric")

    @classmethod
    def from_arrows(cls, n: int, arrows: Sequence[tuple[int, int]]) -> "Quiver":
        b = [[0] * n for _ in range(n)]
        for i, j in arrows:
            b[i][j] += 1
            b[j][i] -= 1
        return cls(b)

    @property
    def n_vertices(self) -> int:
        return len(self.b)

    def arrows(self) -> list[tuple[int, int, int]]:
        """Arrow list ``(i, j, multiplicity)`` for the positive entries of b."""
        n = self.n_vertices
        return [(i, j, self.b[i][j]) for i in range(n) for j in range(n) if self.b[i][j] > 0]


@dataclass(frozen=True)
class IceQuiver:
    """Quiver whose last ``m`` vertices are frozen.

    Arrows between frozen vertices are dropped on construction.  ``labels``
    names every vertex (mutable first); for universal seeds the frozen labels
    are root strings.
    """

    b: tuple[tuple[int, ...], ...]
    n: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        b = [list(row) for row in _freeze(self.b)]
        total = len(b)
        if not 0 <= self.n <= total:
            raise ValueError("mutable count out of range")
        for i in range(self.n, total):
            for j in range(self.n, total):
                b[i][j] = 0
        Quiver(b)  # validation
        object.__setattr__(self, "b", _freeze(b))
        labels = tuple(self.labels) or tuple(
            str(i + 1) if i < self.n else f"f{i - self.n + 1}" for i in range(total)
        )
        if len(labels) != total or len(set(labels)) != total:
            raise ValueError("labels must be distinct, one per vertex")
        object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.b) - self.n

    @property
    def size(self) -> int:
        return len(self.b)

    @property
    def frozen(self) -> range:
        return range(self.n, self.size)

    def is_frozen(self, v: int) -> bool:
        return v >= self.n

    def mutable_part(self) -> Quiver:
        return Quiver([row[: self.n] for row in self.b[: self.n]])

    def arrows(self) -> list[tuple[int, int, int]]:
        return Quiver(self.b).arrows()

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def labelled_arrows(self) -> dict[tuple[str, str], int]:
        return {(self.labels[i], self.labels[j]): k for i, j, k in self.arrows()}

    def relabel(self, labels: Sequence[str]) -> "IceQuiver":
        return IceQuiver(self.b, self.n, tuple(labels))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "b": [list(r) for r in self.b],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, data: dict) -> "IceQuiver":
        ice = cls(data["b"], data["n"], tuple(data.get("labels", ())))
        if ice.m != data.get("m", ice.m):
            raise ValueError("m does not match matrix size")
        return ice


def mutate(q: IceQuiver, k: int) -> IceQuiver:
    """Fomin-Zelevinsky matrix mutation at the mutable vertex ``k``."""
    if not 0 <= k < q.n:
        raise ValueError(f"cannot mutate at frozen or missing vertex {k}")
    b = q.b
    size = q.size
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                bik, bkj = b[i][k], b[k][j]
                sign = (bik > 0) - (bik < 0)
                out[i][j] = b[i][j] + sign * max(0, bik * bkj)
    return IceQuiver(out, q.n, q.labels)


def same_ice_quiver(a: IceQuiver, b: IceQuiver) -> bool:
    """Equality up to the label-matched vertex identification."""
    if a.n != b.n or set(a.labels) != set(b.labels):
        return False
    if set(a.labels[: a.n]) != set(b.labels[: b.n]):
        return False
    return a.labelled_arrows() == b.labelled_arrows()


def ice_diff(a: IceQuiver, b: IceQuiver) -> list[str]:
    """Human-readable arrow differences between two label-matched ice quivers."""
    da, db = a.labelled_arrows(), b.labelled_arrows()
    out = []
    for key in sorted(set(da) | set(db)):
        if da.get(key, 0) != db.get(key, 0):
            out.append(f"{key[0]} -> {key[1]}: {da.get(key, 0)} vs {db.get(key, 0)}")
    for lab in sorted(set(a.labels) ^ set(b.labels)):
        out.append(f"vertex {lab} present on one side only")
    return out


def _dot_id(label: str) -> str:
    return json.dumps(label, ensure_ascii=False)


def to_dot(q: IceQuiver, name: str = "") -> str:
    """Graphviz text; frozen vertices are drawn as boxes."""
    head = f"digraph {_dot_id(name)} {{" if name else "digraph {"
    lines = [head]
    for v in range(q.size):
        shape = "box" if q.is_frozen(v) else "circle"
        lines.append(f"  {_dot_id(q.labels[v])} [shape={shape}];")
    for i, j, k in q.arrows():
        for _ in range(k):
            lines.append(f"  {_dot_id(q.labels[i])} -> {_dot_id(q.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
