"""Taylor and Scarf complexes, simplicial homology, and the Betti oracle.

Subsets of the generator list G(I) = (u_1, ..., u_q) are encoded as
bitmasks (bit k <-> u_{k+1}).  Within a homological degree, bases are
listed in colex order, which for bitmasks is plain integer order.

The oracle computes beta_{i,b}(I) = dim H~_{i-1}(K^b) from the upper Koszul
complex K^b = {squarefree t <= b : x^b / x^t in I}; it never looks at the
Taylor or Scarf complexes, so it can be used to check them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

from .core import Monomial, MonomialIdeal
from .errors import DomainError, InvariantViolation, ResourceError
from .linalg import sparse_rank

__all__ = [
    "Caps",
    "ChainComplex",
    "SimplicialComplex",
    "BettiTable",
    "taylor_complex",
    "scarf_chain_complex",
    "scarf_complex",
    "scarf_betti",
    "is_taylor_minimal",
    "oracle_betti",
    "projective_dimension",
    "l_counts",
    "simplicial_homology_dim",
    "reduced_homology",
    "upper_koszul_complex",
    "subset_lcms",
]


@dataclass(frozen=True)
class Caps:
    """Size limits. Exceeding one raises ResourceError, never truncates."""

    max_gens: int = 12  # oracle
    max_vars: int = 12  # oracle
    max_taylor_gens: int = 20

    @classmethod
    def from_env(cls, env: Mapping[str, str] | None = None) -> Caps:
        env = os.environ if env is None else env
        kw = {}
        for name, key in (
            ("max_gens", "MONOBETTI_MAX_GENS"),
            ("max_vars", "MONOBETTI_MAX_VARS"),
            ("max_taylor_gens", "MONOBETTI_MAX_TAYLOR_GENS"),
        ):
            if env.get(key):
                kw[name] = int(env[key])
        return cls(**kw)


def _caps(caps: Caps | None) -> Caps:
    return Caps.from_env() if caps is None else caps


def _check_taylor_size(I: MonomialIdeal, caps: Caps | None) -> None:
    cap = _caps(caps).max_taylor_gens
    if I.q > cap:
        raise ResourceError(f"{I.q} generators exceeds the Taylor/Scarf cap of {cap}")


def subset_lcms(I: MonomialIdeal) -> list[tuple[int, ...]]:
    """lcm exponent vector for every subset mask of G(I); index 0 is the empty lcm."""
    vecs = I.vectors
    table: list[tuple[int, ...]] = [(0,) * len(I.variables)]
    for k, vec in enumerate(vecs):
        table.extend(tuple(map(max, t, vec)) for t in table[: 1 << k])
    return table


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _elements(mask: int) -> list[int]:
    return [k for k in range(mask.bit_length()) if mask >> k & 1]


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Free complex indexed by generator subsets.

    ``bases[i]`` lists the subset masks of homological degree i and
    ``labels[i]`` their multidegrees.  ``differentials[i]`` (i >= 1) is the
    sparse integer matrix {(row, col): coefficient} of d_i: F_i -> F_{i-1};
    the monomial part of an entry is labels[i][col] / labels[i-1][row].
    """

    kind: str
    ideal: MonomialIdeal
    bases: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[Monomial, ...], ...]
    differentials: tuple[Mapping[tuple[int, int], int], ...]

    @property
    def length(self) -> int:
        return len(self.bases) - 1

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)

    def entry_monomial(self, i: int, row: int, col: int) -> Monomial:
        return self.labels[i][col] / self.labels[i - 1][row]

    def dense(self, i: int) -> list[list[int]]:
        rows, cols = len(self.bases[i - 1]), len(self.bases[i])
        out = [[0] * cols for _ in range(rows)]
        for (r, c), v in self.differentials[i].items():
            out[r][c] = v
        return out

    def check_d_squared(self) -> None:
        """d_{i-1} d_i = 0; the coefficient product suffices because every
        path sigma -> tau carries the same monomial lcm(sigma)/lcm(tau)."""
        for i in range(2, self.length + 1):
            prod: dict[tuple[int, int], int] = {}
            by_row: dict[int, list[tuple[int, int]]] = {}
            for (r, c), v in self.differentials[i - 1].items():
                by_row.setdefault(c, []).append((r, v))
            for (mid, c), v in self.differentials[i].items():
                for r, w in by_row.get(mid, ()):
                    prod[(r, c)] = prod.get((r, c), 0) + v * w
            if any(prod.values()):
                raise InvariantViolation(f"{self.kind} complex: d_{i - 1} d_{i} != 0")
        for i in range(1, self.length + 1):
            for (r, c) in self.differentials[i]:
                # raises if the row label does not divide the column label
                self.entry_monomial(i, r, c)

    def to_json(self) -> dict:
        vs = self.ideal.variables
        return {
            "kind": self.kind,
            "variables": list(vs),
            "generators": [g.to_str(vs) for g in self.ideal.generators],
            "ranks": list(self.ranks()),
            "basis": [
                [
                    {
                        "subset": [k + 1 for k in _elements(mask)],
                        "multidegree": list(lab.vector(vs)),
                        "monomial": lab.to_str(vs),
                    }
                    for mask, lab in zip(self.bases[i], self.labels[i])
                ]
                for i in range(len(self.bases))
            ],
            "differentials": [
                {
                    "degree": i,
                    "shape": [len(self.bases[i - 1]), len(self.bases[i])],
                    "entries": [
                        [r, c, v, self.entry_monomial(i, r, c).to_str(vs)]
                        for (r, c), v in sorted(self.differentials[i].items(), key=lambda kv: (kv[0][1], kv[0][0]))
                    ],
                }
                for i in range(1, len(self.bases))
            ],
        }


def _build_complex(kind: str, I: MonomialIdeal, masks: Iterable[int], lcms) -> ChainComplex:
    by_deg: dict[int, list[int]] = {}
    for m in masks:
        by_deg.setdefault(_popcount(m), []).append(m)
    top = max(by_deg)
    bases = tuple(tuple(sorted(by_deg.get(i, ()))) for i in range(top + 1))
    index = [{m: k for k, m in enumerate(b)} for b in bases]
    labels = tuple(
        tuple(Monomial.from_vector(I.variables, lcms[m]) for m in b) for b in bases
    )
    diffs: list[dict[tuple[int, int], int]] = [{}]
    for i in range(1, top + 1):
        d: dict[tuple[int, int], int] = {}
        for col, sigma in enumerate(bases[i]):
            for j, k in enumerate(_elements(sigma)):
                # sign(k, sigma) = (-1)^(j+1) for the j-th element, j counted from 1
                d[(index[i - 1][sigma ^ (1 << k)], col)] = 1 if j % 2 == 0 else -1
        diffs.append(d)
    cc = ChainComplex(kind, I, bases, labels, tuple(diffs))
    cc.check_d_squared()
    return cc


def taylor_complex(I: MonomialIdeal, caps: Caps | None = None) -> ChainComplex:
    _check_taylor_size(I, caps)
    lcms = subset_lcms(I)
    return _build_complex("taylor", I, range(1 << I.q), lcms)


def scarf_chain_complex(I: MonomialIdeal, caps: Caps | None = None) -> ChainComplex:
    """The Taylor complex restricted to the faces of the Scarf complex."""
    _check_taylor_size(I, caps)
    lcms = subset_lcms(I)
    return _build_complex("scarf", I, scarf_complex(I, caps).faces(), lcms)


def is_taylor_minimal(I: MonomialIdeal, caps: Caps | None = None) -> bool:
    """True iff no Taylor differential entry is a unit, i.e. no subset keeps
    its lcm after dropping one generator."""
    _check_taylor_size(I, caps)
    lcms = subset_lcms(I)
    for sigma in range(1, 1 << I.q):
        m = sigma
        while m:
            bit = m & -m
            m ^= bit
            if lcms[sigma ^ bit] == lcms[sigma]:
                return False
    return True


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on vertices 0..n-1, stored by its facets (bitmasks).

    ``facets == ()`` is the void complex; ``facets == (0,)`` is {emptyset}.
    """

    n_vertices: int
    facets: tuple[int, ...]

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[int]) -> SimplicialComplex:
        faces = sorted(set(faces), key=lambda m: -_popcount(m))
        facets: list[int] = []
        for f in faces:
            if not any(f & g == f for g in facets):
                facets.append(f)
        return cls(n, tuple(sorted(facets)))

    @cached_property
    def _faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(out)

    def faces(self) -> frozenset[int]:
        return self._faces

    def __contains__(self, mask: int) -> bool:
        return mask in self._faces

    @property
    def dim(self) -> int:
        return max((_popcount(f) for f in self.facets), default=0) - 1

    def faces_by_size(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for f in self._faces:
            out.setdefault(_popcount(f), []).append(f)
        for v in out.values():
            v.sort()
        return out

    def is_closed(self) -> bool:
        return all(f ^ bit in self._faces for f in self._faces for bit in _bitlist(f))


def _bitlist(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b)
        mask ^= b
    return out


def reduced_homology(K: SimplicialComplex) -> dict[int, int]:
    """{i: dim H~_i(K; Q)} for -1 <= i <= dim K, zero entries omitted."""
    by_size = K.faces_by_size()
    if not by_size:
        return {}
    top = max(by_size)
    ranks = {}
    for k in range(1, top + 1):
        # boundary from faces of size k to faces of size k-1
        rows = {f: r for r, f in enumerate(by_size.get(k - 1, ()))}
        entries = {}
        for c, f in enumerate(by_size[k]):
            for j, bit in enumerate(_bitlist(f)):
                entries[(rows[f ^ bit], c)] = -1 if j % 2 else 1
        ranks[k] = sparse_rank(entries, len(rows), len(by_size[k]))
    out = {}
    for size in range(0, top + 1):
        n = len(by_size.get(size, ()))
        h = n - ranks.get(size, 0) - ranks.get(size + 1, 0)
        if h:
            out[size - 1] = h
    return out


def simplicial_homology_dim(K: SimplicialComplex, i: int) -> int:
    return reduced_homology(K).get(i, 0)


def upper_koszul_complex(I: MonomialIdeal, b: Sequence[int]) -> tuple[SimplicialComplex, list[int]]:
    """K^b on the vertices supp(b); returns the complex and the variable
    index of each vertex.  Facets are {x : deg_x g < b_x} for generators g | b."""
    verts = [k for k, e in enumerate(b) if e]
    pos = {k: j for j, k in enumerate(verts)}
    facets = []
    for vec in I.vectors:
        if all(g <= e for g, e in zip(vec, b)):
            facets.append(sum(1 << pos[k] for k in verts if vec[k] < b[k]))
    return SimplicialComplex.from_faces(len(verts), facets), verts


def _nerve(facets: Sequence[int]) -> SimplicialComplex:
    """Nerve of a cover by simplices: a set of facets is a face iff they meet."""
    n = len(facets)
    faces = [0]
    # grow faces level by level; a superset of a non-face is never a face
    frontier = [(0, -1, -1)]  # (mask, common intersection, last index); -1 = everything
    while frontier:
        nxt = []
        for mask, inter, last in frontier:
            for j in range(last + 1, n):
                meet = facets[j] if inter == -1 else inter & facets[j]
                if meet:
                    m = mask | (1 << j)
                    faces.append(m)
                    nxt.append((m, meet, j))
        frontier = nxt
    return SimplicialComplex.from_faces(n, faces)


def koszul_homology(I: MonomialIdeal, b: Sequence[int], method: str = "auto") -> dict[int, int]:
    """Reduced homology of K^b.

    ``direct`` works on K^b itself; ``nerve`` uses the nerve of its facets,
    which has the same homotopy type and is far smaller once supp(b) is large.
    """
    K, _ = upper_koszul_complex(I, b)
    if not K.facets:
        return {}
    if K.facets == (0,):
        return {-1: 1}
    if method == "auto":
        method = "nerve" if len(K.facets) < K.n_vertices else "direct"
    if method == "direct":
        return reduced_homology(K)
    if method == "nerve":
        return reduced_homology(_nerve(K.facets))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers of R/I: entries[(i, b)] = beta_{i,b}(R/I)."""

    variables: tuple[str, ...]
    entries: Mapping[tuple[int, Monomial], int] = field(hash=False)

    @cached_property
    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        t = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            t[i] += v
        return tuple(t)

    @property
    def pd(self) -> int:
        return len(self.totals) - 1

    def ideal_totals(self) -> tuple[int, ...]:
        """Totals in the convention of the ideal: beta_i(I) = beta_{i+1}(R/I)."""
        return self.totals[1:]

    def graded(self) -> dict[tuple[int, int], int]:
        """{(i, total degree of b): count}."""
        out: dict[tuple[int, int], int] = {}
        for (i, b), v in self.entries.items():
            out[(i, b.degree)] = out.get((i, b.degree), 0) + v
        return out

    def sorted_entries(self) -> list[tuple[int, Monomial, int]]:
        vs = self.variables
        return sorted(
            ((i, b, v) for (i, b), v in self.entries.items()),
            key=lambda t: (t[0], t[1].degree, tuple(-e for e in t[1].vector(vs))),
        )

    def to_json(self) -> dict:
        vs = self.variables
        return {
            "variables": list(vs),
            "totals": list(self.totals),
            "projective_dimension": self.pd,
            "entries": [
                {"i": i, "multidegree": list(b.vector(vs)), "monomial": b.to_str(vs), "value": v}
                for i, b, v in self.sorted_entries()
            ],
        }


def _table(I: MonomialIdeal, counts: dict[tuple[int, tuple[int, ...]], int]) -> BettiTable:
    entries = {
        (i, Monomial.from_vector(I.variables, b)): v for (i, b), v in counts.items() if v
    }
    return BettiTable(I.variables, entries)


def oracle_betti(I: MonomialIdeal, caps: Caps | None = None, method: str = "auto") -> BettiTable:
    caps = _caps(caps)
    if I.q > caps.max_gens:
        raise ResourceError(f"{I.q} generators exceeds the oracle cap of {caps.max_gens}")
    if len(I.variables) > caps.max_vars:
        raise ResourceError(f"{len(I.variables)} variables exceeds the oracle cap of {caps.max_vars}")
    counts: dict[tuple[int, tuple[int, ...]], int] = {(0, (0,) * len(I.variables)): 1}
    for b in sorted(set(subset_lcms(I)[1:])):
        for k, h in koszul_homology(I, b, method).items():
            # beta_{i,b}(R/I) = dim H~_{i-2}(K^b)
            counts[(k + 2, b)] = h
    return _table(I, counts)


def projective_dimension(I: MonomialIdeal, caps: Caps | None = None) -> int:
    return oracle_betti(I, caps).pd


def scarf_complex(I: MonomialIdeal, caps: Caps | None = None) -> SimplicialComplex:
    """Subsets of G(I) whose lcm is shared with no other subset."""
    _check_taylor_size(I, caps)
    seen: dict[tuple[int, ...], int] = {}
    for mask, l in enumerate(subset_lcms(I)):
        seen[l] = -1 if l in seen else mask
    K = SimplicialComplex.from_faces(I.q, (m for m in seen.values() if m >= 0))
    if set(K.faces()) != {m for m in seen.values() if m >= 0}:
        raise InvariantViolation("Scarf faces are not closed under taking subsets")
    return K


def scarf_betti(I: MonomialIdeal, caps: Caps | None = None) -> BettiTable:
    from .classify import is_semidominant

    if not is_semidominant(I):
        raise DomainError(f"{I} is not semidominant; the Scarf complex only bounds its Betti numbers")
    lcms = subset_lcms(I)
    counts = {(_popcount(f), lcms[f]): 1 for f in scarf_complex(I, caps).faces()}
    return _table(I, counts)


def l_counts(ci_part: Sequence[Monomial], v: Monomial) -> list[int]:
    """#L_i for i = 0..q: the i-subsets of ci_part whose lcm v does not divide."""
    for a, b in combinations(ci_part, 2):
        if a.support() & b.support():
            raise DomainError(f"{a} and {b} share variables; not a complete intersection")
    q = len(ci_part)
    out = []
    for i in range(q + 1):
        n = 0
        for sub in combinations(ci_part, i):
            l = Monomial()
            for u in sub:
                l = l.lcm(u)
            if not v.divides(l):
                n += 1
        out.append(n)
    return out


def taylor_bound(q: int) -> tuple[int, ...]:
    return tuple(comb(q, i) for i in range(q + 1))
