"""Acyclic quivers, their path bases, and tensor-style bimodule models.

Conventions used throughout the package:

* Vertices are 0-based.  An arrow is a pair (source, target).
* A path is a pair (source_vertex, arrow_index_tuple) whose arrows chain
  left to right: path (i, (a, b)) starts at i, runs along a, then along b.
  Composition p * q concatenates in that order and is defined exactly when
  p ends where q starts.  Trivial paths have an empty arrow tuple.
* Right modules over the path algebra are exactly representations that
  carry a map X_a : X_{source(a)} -> X_{target(a)} for every arrow a.
* The middle slot of a model triple is a symbol with a left and a right
  vertex weight.  A plain arrow a has weights (source(a), target(a)); its
  dual symbol (written a* in comments) has the reversed weights
  (target(a), source(a)).

Model bases are triples (left path, middle symbol, right path) subject to
endpoint matching: the left path ends at the left weight of the symbol and
the right path starts at its right weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exactmat import FieldSpec, Matrix, MatrixBuilder

UNIT = "unit"
ARROWS = "arrows"
DUAL_ARROWS = "dual_arrows"
REGULAR = "regular"

I_MAP = "i"
P_MAP = "p"
C_TILDE = "c_tilde"

Path = tuple[int, tuple[int, ...]]  # (source vertex, arrow indices)


@dataclass(frozen=True)
class Quiver:
    """A finite quiver without oriented cycles."""

    vertex_count: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        for s, t in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow ({s},{t}) out of range")
        if self._has_cycle():
            raise ValueError("quiver has an oriented cycle")

    def _has_cycle(self) -> bool:
        indeg = [0] * self.vertex_count
        for _, t in self.arrows:
            indeg[t] += 1
        stack = [v for v in range(self.vertex_count) if indeg[v] == 0]
        seen = 0
        out = [[] for _ in range(self.vertex_count)]
        for s, t in self.arrows:
            out[s].append(t)
        while stack:
            v = stack.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen != self.vertex_count

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    def source(self, a: int) -> int:
        return self.arrows[a][0]

    def target(self, a: int) -> int:
        return self.arrows[a][1]

    def arrows_from(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    def arrows_into(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "arrows": [list(a) for a in self.arrows]}

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        return Quiver(int(data["vertices"]), tuple((int(s), int(t)) for s, t in data["arrows"]))


def opposite(q: Quiver) -> tuple[Quiver, tuple[int, ...]]:
    """Reverse all arrows.  The i-th arrow of the result covers arrow i of q."""
    rev = tuple((t, s) for s, t in q.arrows)
    return Quiver(q.vertex_count, rev), tuple(range(len(rev)))


class PathBasis:
    """All directed paths of an acyclic quiver in a canonical order.

    Paths are sorted by length, then lexicographically by their arrow index
    tuples, with source vertex as the final tiebreak; in particular the
    trivial paths come first, ordered by vertex.
    """

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        paths: list[Path] = [(v, ()) for v in range(quiver.vertex_count)]
        frontier = list(paths)
        while frontier:
            new = []
            for src, arrows in frontier:
                end = quiver.target(arrows[-1]) if arrows else src
                for a in quiver.arrows_from(end):
                    new.append((src, arrows + (a,)))
            paths.extend(new)
            frontier = new
        paths.sort(key=lambda p: (len(p[1]), p[1], p[0]))
        self.paths: tuple[Path, ...] = tuple(paths)
        self.index: dict[Path, int] = {p: i for i, p in enumerate(self.paths)}
        self.trivial: tuple[int, ...] = tuple(self.index[(v, ())] for v in range(quiver.vertex_count))
        n = quiver.vertex_count
        by_source = [[] for _ in range(n)]
        by_target = [[] for _ in range(n)]
        for i, p in enumerate(self.paths):
            by_source[self.source(i)].append(i)
            by_target[self.target(i)].append(i)
        self.by_source = tuple(tuple(v) for v in by_source)
        self.by_target = tuple(tuple(v) for v in by_target)

    def __len__(self) -> int:
        return len(self.paths)

    def source(self, i: int) -> int:
        return self.paths[i][0]

    def target(self, i: int) -> int:
        p = self.paths[i]
        return self.quiver.target(p[1][-1]) if p[1] else p[0]

    def length(self, i: int) -> int:
        return len(self.paths[i][1])

    def compose(self, i: int, j: int) -> int | None:
        """Index of path i followed by path j, or None if ends mismatch."""
        if self.target(i) != self.source(j):
            return None
        pi, pj = self.paths[i], self.paths[j]
        return self.index[(pi[0], pi[1] + pj[1])]

    def extend_right(self, i: int, a: int) -> int | None:
        if self.target(i) != self.quiver.source(a):
            return None
        p = self.paths[i]
        return self.index[(p[0], p[1] + (a,))]

    def extend_left(self, a: int, i: int) -> int | None:
        if self.quiver.target(a) != self.source(i):
            return None
        p = self.paths[i]
        return self.index[(self.quiver.source(a), (a,) + p[1])]


@lru_cache(maxsize=None)
def enumerate_paths(q: Quiver) -> PathBasis:
    return PathBasis(q)


def symbol_weights(q: Quiver, kind: str, sym: int) -> tuple[int, int]:
    """(left, right) vertex weights of a middle symbol."""
    if kind in (UNIT, REGULAR):
        return sym, sym
    if kind == ARROWS:
        return q.source(sym), q.target(sym)
    if kind == DUAL_ARROWS:
        return q.target(sym), q.source(sym)
    raise ValueError(f"unknown model kind {kind!r}")


def model_symbols(q: Quiver, kind: str) -> list[int]:
    if kind in (UNIT, REGULAR):
        return list(range(q.vertex_count))
    if kind in (ARROWS, DUAL_ARROWS):
        return list(range(q.arrow_count))
    raise ValueError(f"unknown model kind {kind!r}")


@dataclass(frozen=True, eq=False)
class BimoduleModel:
    """Triple basis for one of the standard bimodules over the path algebra.

    Kinds: UNIT (algebra tensor algebra over the vertex span), ARROWS (the
    bimodule of relative differentials), DUAL_ARROWS (its transpose-style
    partner built on dual arrow symbols), REGULAR (the algebra itself, with
    trivial left slot).
    """

    quiver: Quiver
    kind: str
    basis: tuple[tuple[int, int, int], ...]  # (left path, symbol, right path)
    index: dict = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def right_mult(self, i: int, a: int) -> int | None:
        p, sym, q = self.basis[i]
        q2 = enumerate_paths(self.quiver).extend_right(q, a)
        return None if q2 is None else self.index.get((p, sym, q2))

    def left_mult(self, a: int, i: int) -> int | None:
        pb = enumerate_paths(self.quiver)
        p, sym, q = self.basis[i]
        if self.kind == REGULAR:
            # the single path lives in the right slot
            if self.quiver.target(a) != sym:
                return None
            q2 = pb.extend_left(a, q)
            v = self.quiver.source(a)
            return self.index.get((pb.trivial[v], v, q2))
        p2 = pb.extend_left(a, p)
        return None if p2 is None else self.index.get((p2, sym, q))

    def action_matrix(self, side: str, a: int, fieldspec: FieldSpec) -> Matrix:
        b = MatrixBuilder(fieldspec, self.dim, self.dim)
        one = fieldspec.one()
        for i in range(self.dim):
            j = self.right_mult(i, a) if side == "right" else self.left_mult(a, i)
            if j is not None:
                b.add(j, i, one)
        return b.build()


@lru_cache(maxsize=None)
def bimodule_model(q: Quiver, kind: str) -> BimoduleModel:
    pb = enumerate_paths(q)
    basis: list[tuple[int, int, int]] = []
    if kind == REGULAR:
        for qi in range(len(pb)):
            v = pb.source(qi)
            basis.append((pb.trivial[v], v, qi))
    else:
        for sym in model_symbols(q, kind):
            wl, wr = symbol_weights(q, kind, sym)
            for p in pb.by_target[wl]:
                for r in pb.by_source[wr]:
                    basis.append((p, sym, r))
    basis.sort()
    index = {t: i for i, t in enumerate(basis)}
    return BimoduleModel(quiver=q, kind=kind, basis=tuple(basis), index=index)


@dataclass(frozen=True, eq=False)
class BimoduleMorphism:
    domain: BimoduleModel
    codomain: BimoduleModel
    matrix: Matrix

    def is_bimodule_map(self) -> bool:
        """Check commutation with left and right multiplication by arrows."""
        f = self.matrix.field
        for a in range(self.domain.quiver.arrow_count):
            for side in ("left", "right"):
                da = self.domain.action_matrix(side, a, f)
                ca = self.codomain.action_matrix(side, a, f)
                if ca @ self.matrix != self.matrix @ da:
                    return False
        return True


def structural_map(q: Quiver, which: str, fieldspec: FieldSpec) -> BimoduleMorphism:
    """The inclusion of differentials (I_MAP), multiplication (P_MAP), or
    the commutator-style map into the dual-arrow model (C_TILDE)."""
    pb = enumerate_paths(q)
    one = fieldspec.one()
    if which == I_MAP:
        dom = bimodule_model(q, ARROWS)
        cod = bimodule_model(q, UNIT)
        b = MatrixBuilder(fieldspec, cod.dim, dom.dim)
        for col, (p, a, r) in enumerate(dom.basis):
            aq = pb.extend_left(a, r)
            b.add(cod.index[(p, pb.target(p), aq)], col, one)
            pa = pb.extend_right(p, a)
            b.add(cod.index[(pa, pb.target(pa), r)], col, -one)
        return BimoduleMorphism(dom, cod, b.build())
    if which == P_MAP:
        dom = bimodule_model(q, UNIT)
        cod = bimodule_model(q, REGULAR)
        b = MatrixBuilder(fieldspec, cod.dim, dom.dim)
        for col, (p, v, r) in enumerate(dom.basis):
            pq = pb.compose(p, r)
            src = pb.source(pq)
            b.add(cod.index[(pb.trivial[src], src, pq)], col, one)
        return BimoduleMorphism(dom, cod, b.build())
    if which == C_TILDE:
        dom = bimodule_model(q, UNIT)
        cod = bimodule_model(q, DUAL_ARROWS)
        b = MatrixBuilder(fieldspec, cod.dim, dom.dim)
        for col, (p, v, r) in enumerate(dom.basis):
            for a in q.arrows_from(v):
                pa = pb.extend_right(p, a)
                b.add(cod.index[(pa, a, r)], col, one)
            for a in q.arrows_into(v):
                ar = pb.extend_left(a, r)
                b.add(cod.index[(p, a, ar)], col, -one)
        return BimoduleMorphism(dom, cod, b.build())
    raise ValueError(f"unknown structural map {which!r}")
