"""The character ring Z[X(T)]: sparse weight multisets and Demazure operators."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels
from .rootsys import RootSystem
from .weyl import WeylError, from_word, longest_element


class CharacterError(ValueError):
    pass


class FormalCharacter:
    """Finitely supported map weight -> nonzero integer multiplicity."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else ((w, 1) for w in terms)
            for w, m in items:
                w = tuple(int(x) for x in w)
                d[w] = d.get(w, 0) + int(m)
        self._terms = {w: m for w, m in d.items() if m != 0}
        self._hash = None

    @classmethod
    def from_arrays(cls, W, M):
        out = cls.__new__(cls)
        out._terms = {tuple(int(x) for x in w): int(m) for w, m in zip(W, M) if m != 0}
        out._hash = None
        return out

    def to_arrays(self, rank):
        if not self._terms:
            return _kernels.empty(rank)
        W = np.array(list(self._terms), dtype=np.int64).reshape(len(self._terms), rank)
        M = np.fromiter(self._terms.values(), dtype=np.int64, count=len(self._terms))
        return W, M

    # -- mapping protocol ----------------------------------------------------

    def __getitem__(self, w):
        return self._terms.get(tuple(w), 0)

    def __contains__(self, w):
        return tuple(w) in self._terms

    def __iter__(self):
        return iter(self.weights())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        """Terms in canonical (lexicographic) weight order."""
        return sorted(self._terms.items())

    def weights(self):
        return sorted(self._terms)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        d = dict(self._terms)
        for w, m in other._terms.items():
            d[w] = d.get(w, 0) + m
        return FormalCharacter(d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FormalCharacter({w: -m for w, m in self._terms.items()})

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return FormalCharacter({w: k * m for w, m in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, FormalCharacter):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{w}:{m}" if m != 1 else f"{w}" for w, m in self.items())
        return f"FormalCharacter({{{body}}})"

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def dimension(self) -> int:
        if not self.is_nonnegative():
            raise CharacterError("dimension() needs nonnegative multiplicities; use signed_sum()")
        return sum(self._terms.values())

    def signed_sum(self) -> int:
        return sum(self._terms.values())

    def leq(self, other) -> bool:
        """Termwise sub-multiset test."""
        return all(other[w] >= m for w, m in self._terms.items())

    def act(self, w) -> FormalCharacter:
        """Apply a Weyl group element weight-wise."""
        return FormalCharacter({w.act(x): m for x, m in self._terms.items()})

    def reflect(self, rs, i) -> FormalCharacter:
        return FormalCharacter({rs.reflect(x, i): m for x, m in self._terms.items()})

    def to_json(self):
        return [{"weight": list(w), "mult": m} for w, m in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({tuple(t["weight"]): t["mult"] for t in data})


def zero_character():
    return FormalCharacter()


def e(weight) -> FormalCharacter:
    return FormalCharacter({tuple(weight): 1})


@dataclass(frozen=True)
class Bounds:
    lower: dict
    upper: dict
    reasons: tuple = ()


@dataclass(frozen=True)
class GradedCharacter:
    """Degree-indexed nonnegative characters plus an exactness status.

    When ``status`` is a :class:`Bounds`, ``by_degree`` holds the formal
    (uncancelled) answer, which equals ``status.upper``."""

    by_degree: dict
    status: object = "exact"
    notes: tuple = field(default=())

    def __post_init__(self):
        clean = {int(d): c for d, c in self.by_degree.items() if c}
        for d, c in clean.items():
            if d < 0 or not c.is_nonnegative():
                raise CharacterError(f"degree {d} is negative or carries negative multiplicities")
        object.__setattr__(self, "by_degree", dict(sorted(clean.items())))

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def degree(self, d) -> FormalCharacter:
        return self.by_degree.get(d, FormalCharacter())

    def __getitem__(self, d):
        return self.degree(d)

    def max_degree(self) -> int:
        return max(self.by_degree, default=-1)

    def is_zero(self) -> bool:
        return not self.by_degree

    def vanishes_from(self, j) -> bool:
        return all(d < j for d in self.by_degree)

    def euler(self) -> FormalCharacter:
        out = FormalCharacter()
        for d, c in self.by_degree.items():
            out = out + (c if d % 2 == 0 else -c)
        return out

    def same_cohomology(self, other) -> bool:
        return self.by_degree == other.by_degree

    def to_json(self):
        def graded(dct):
            return {str(d): c.to_json() for d, c in sorted(dct.items())}

        if self.exact:
            status = "exact"
        else:
            status = {"bounds": {"lower": graded(self.status.lower), "upper": graded(self.status.upper),
                                 "reasons": list(self.status.reasons)}}
        out = {"degrees": graded(self.by_degree), "status": status, "euler": self.euler().to_json()}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def adjacent_conflicts(by_degree) -> list:
    """(weight, d) with the weight present in both degree d and d+1."""
    out = []
    for d, c in by_degree.items():
        nxt = by_degree.get(d + 1)
        if nxt:
            out.extend((w, d) for w in sorted(c.support() & nxt.support()))
    return out


def cancel_adjacent(by_degree) -> dict:
    """Per weight, cancel as much as possible between adjacent degrees,
    sweeping upward.  Keeps the Euler characteristic; this is the smallest
    answer the formal one can collapse to, not a certified bound."""
    if not by_degree:
        return {}
    top = max(by_degree)
    weights = set().union(*(c.support() for c in by_degree.values()))
    out = {d: {} for d in range(top + 1)}
    for w in weights:
        mult = [by_degree.get(d, FormalCharacter())[w] for d in range(top + 1)]
        for d in range(top):
            x = min(mult[d], mult[d + 1])
            mult[d] -= x
            mult[d + 1] -= x
        for d, m in enumerate(mult):
            if m:
                out[d][w] = m
    return {d: FormalCharacter(t) for d, t in out.items() if t}


# ---------------------------------------------------------------------------
# Demazure operators


def demazure_op(rs: RootSystem, f: FormalCharacter, i) -> FormalCharacter:
    """D_i(e^l) = (e^l - e^{s_i(l) - a_i}) / (1 - e^{-a_i}), extended linearly."""
    if not f:
        return FormalCharacter()
    W, M = f.to_arrays(rs.rank)
    return FormalCharacter.from_arrays(*_kernels.demazure(W, M, rs.alpha(i), i))


def demazure_char(rs: RootSystem, word, weight) -> FormalCharacter:
    """D_{i_1} o ... o D_{i_r} (e^weight); the word must be reduced."""
    word = tuple(word)
    if from_word(rs, word).length() != len(word):
        raise WeylError(f"word {word} is not reduced")
    return _demazure_chain(rs, word, FormalCharacter({rs.check_weight(weight): 1}))


def _demazure_chain(rs, word, f):
    W, M = f.to_arrays(rs.rank)
    for i in reversed(word):
        W, M = _kernels.demazure(W, M, rs.alpha(i), i)
    return FormalCharacter.from_arrays(W, M)


@lru_cache(maxsize=4096)
def _weyl_character(rs, weight):
    w0 = longest_element(rs)
    return _demazure_chain(rs, w0.word, FormalCharacter({weight: 1}))


def weyl_character(rs: RootSystem, weight) -> FormalCharacter:
    weight = rs.check_weight(weight)
    if not rs.is_dominant(weight):
        raise CharacterError(f"{weight} is not dominant")
    return _weyl_character(rs, weight)


def weyl_dim(rs: RootSystem, weight) -> int:
    """prod over beta > 0 of <l + rho, beta^> / <rho, beta^>."""
    weight = rs.check_weight(weight)
    if not rs.is_dominant(weight):
        raise CharacterError(f"{weight} is not dominant")
    num = rs.positive_pairings(tuple(x + 1 for x in weight))
    den = rs.positive_pairings(rs.rho)
    out = Fraction(1)
    for a, b in zip(num, den):
        out *= Fraction(int(a), int(b))
    assert out.denominator == 1
    return int(out)
