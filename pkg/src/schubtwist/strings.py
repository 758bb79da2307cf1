"""alpha-string decomposition of weight multisets and SL2 cohomology per string.

An indecomposable B_alpha-module is V' (x) C_chi with V' irreducible for the
Levi; on characters it is a chain top, top - a, ..., top - m a.  Its twist
c = <top, a^> - m decides where its cohomology lives: degree 0 for c >= 0,
nowhere for c = -1, degree 1 for c <= -2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .charring import CharacterError, FormalCharacter, GradedCharacter, demazure_op

GREEDY = "greedy"
STRICT = "strict"
MODES = (GREEDY, STRICT)


@dataclass(frozen=True, order=True)
class AlphaString:
    top: tuple
    size: int
    alpha: int
    twist: int
    count: int = 1

    @property
    def length(self) -> int:
        """m, so the string has m + 1 weights."""
        return self.size - 1

    def weights(self, rs) -> list:
        a = rs.simple_root(self.alpha)
        return [tuple(t - k * x for t, x in zip(self.top, a)) for k in range(self.size)]

    def character(self, rs) -> FormalCharacter:
        return FormalCharacter({w: self.count for w in self.weights(rs)})


@dataclass(frozen=True)
class StringDecomposition:
    strings: tuple
    ambiguous: bool = False
    note: str = ""

    def character(self, rs) -> FormalCharacter:
        out = FormalCharacter()
        for s in self.strings:
            out = out + s.character(rs)
        return out


def check_mode(mode):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


def decompose(rs, f: FormalCharacter, i, mode=GREEDY) -> StringDecomposition:
    check_mode(mode)
    if not f.is_nonnegative():
        raise CharacterError("string decomposition needs nonnegative multiplicities")
    if not f:
        return StringDecomposition(())
    W, M = f.to_arrays(rs.rank)
    Ws, p, top, end, cnt, amb = _kernels.match(W, M, rs.alpha(i), i, strict=(mode == STRICT))
    strings = []
    for t, e_, c in zip(top, end, cnt):
        m = int(e_ - t)
        strings.append(AlphaString(tuple(int(x) for x in Ws[t]), m + 1, int(i), int(p[t]) - m, int(c)))
    strings.sort(key=lambda s: (-(s.twist + s.length), s.top, s.size))
    note = ""
    if amb:
        note = f"overlapping alpha_{i + 1}-chains admit another maximal matching"
    return StringDecomposition(tuple(strings), amb, note)


def sl2_cohomology(rs, s: AlphaString) -> GradedCharacter:
    """Closed form: H^0 = V(m) (x) V(c) for c >= 0, H^1 = V(m) (x) V(-c-2) for c <= -2."""
    m, c = s.length, s.twist
    a = np.array(rs.simple_root(s.alpha), dtype=np.int64)
    top = np.array(s.top, dtype=np.int64)
    if c == -1:
        return GradedCharacter({})
    if c >= 0:
        second, lift, deg = c, 0, 0
    else:
        second, lift, deg = -c - 2, -c - 1, 1
    L = m + second
    terms = {}
    for t in range(L + 1):
        w = tuple(int(x) for x in top + (lift - t) * a)
        terms[w] = s.count * (min(t, L - t, m, second) + 1)
    return GradedCharacter({deg: FormalCharacter(terms)})


def sl2_euler(rs, s: AlphaString) -> FormalCharacter:
    """Euler characteristic of one string via the Demazure operator."""
    return demazure_op(rs, s.character(rs), s.alpha)
