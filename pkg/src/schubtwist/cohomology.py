"""Cohomology of line bundles and B-module characters on BSDH varieties.

The engine peels the reduced word from the right.  At each letter every
degree's character is cut into alpha-strings and each string is replaced by
its SL2 cohomology, landing in the same degree or one higher.  The result is
the E2-level ("formal") answer of the iterated Leray spectral sequences.

Exactness: at each letter the Leray spectral sequence has two columns and
weight-preserving differentials of total degree +1.  If after a letter no
weight occurs in two adjacent degrees, that step degenerates and the
characters are those of the true cohomology.  A result is Exact only when
every step degenerates this way and no string decomposition was flagged
ambiguous; otherwise the result carries Bounds instead of a guess.  Once a
step fails to degenerate, later steps act on a module whose character is
unknown: Bounds then records the formal answer as upper and its maximal
adjacent cancellation as lower.  Both keep the Euler characteristic, which
is the only part certified.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

import numpy as np

from . import _kernels
from .charring import (
    Bounds,
    CharacterError,
    FormalCharacter,
    GradedCharacter,
    adjacent_conflicts,
    cancel_adjacent,
    e,
    weyl_character,
)
from .strings import GREEDY, check_mode
from .weyl import WeylError, dot_action, from_word, longest_element

__all__ = [
    "GradedCharacter",
    "Bounds",
    "h_line_bundle",
    "h_module_coefficients",
    "h_full_flag",
    "run_engine",
]


def _check_word(rs, word):
    word = tuple(int(i) for i in word)
    if from_word(rs, word).length() != len(word):
        raise WeylError(f"word {word} is not reduced")
    return word


def run_engine(rs, word, initial: FormalCharacter, mode=GREEDY) -> GradedCharacter:
    check_mode(mode)
    if not initial.is_nonnegative():
        raise CharacterError("module characters must have nonnegative multiplicities")
    strict = mode == "strict"
    state = {0: initial.to_arrays(rs.rank)} if initial else {}
    ambiguous_at = []
    clash_at = []
    for pos in range(len(word) - 1, -1, -1):
        i = word[pos]
        alpha = rs.alpha(i)
        pieces = defaultdict(list)
        for d, (W, M) in state.items():
            w0, m0, w1, m1, amb = _kernels.sl2_step(W, M, alpha, i, strict)
            if amb:
                ambiguous_at.append(pos)
            if w0.shape[0]:
                pieces[d].append((w0, m0))
            if w1.shape[0]:
                pieces[d + 1].append((w1, m1))
        state = {}
        for d, parts in pieces.items():
            if len(parts) == 1:
                state[d] = parts[0]
            else:
                state[d] = _kernels.combine(np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts]))
        if pos and _adjacent_clash(state):
            clash_at.append(pos)
    formal = {d: FormalCharacter.from_arrays(W, M) for d, (W, M) in state.items()}
    return _certify(formal, ambiguous_at, clash_at, word)


def _adjacent_clash(state) -> bool:
    for d, (W, _) in state.items():
        nxt = state.get(d + 1)
        if nxt is None:
            continue
        if set(map(tuple, W.tolist())) & set(map(tuple, nxt[0].tolist())):
            return True
    return False


def _certify(formal, ambiguous_at, clash_at, word):
    reasons = []
    if ambiguous_at:
        letters = sorted({word[p] + 1 for p in ambiguous_at})
        reasons.append(f"ambiguous string decomposition at letters {letters}")
    if clash_at:
        reasons.append(f"spectral sequence may not degenerate at word positions {sorted(p + 1 for p in clash_at)}")
    clashes = adjacent_conflicts(formal)
    if clashes:
        shown = ", ".join(f"{w}@{d}/{d + 1}" for w, d in clashes[:5])
        reasons.append(f"weights in adjacent degrees: {shown}{' ...' if len(clashes) > 5 else ''}")
    if not reasons:
        return GradedCharacter(formal)
    return GradedCharacter(formal, Bounds(cancel_adjacent(formal), dict(formal), tuple(reasons)))


@lru_cache(maxsize=65536)
def _h_line_bundle(rs, word, weight, mode):
    return run_engine(rs, word, e(weight), mode)


def h_line_bundle(rs, word, weight, mode=GREEDY) -> GradedCharacter:
    """H^j(w, lambda) on Z(w, word)."""
    return _h_line_bundle(rs, _check_word(rs, word), rs.check_weight(weight), check_mode(mode))


def h_module_coefficients(rs, word, module: FormalCharacter, mode=GREEDY) -> GradedCharacter:
    """H^j(w, V) for a B-module known through its character V."""
    word = _check_word(rs, word)
    for w in module.support():
        rs.check_weight(w)
    return run_engine(rs, word, module, check_mode(mode))


def h_flag_modules(rs, module: FormalCharacter, mode=GREEDY) -> GradedCharacter:
    """H^j(G/B, V) via the canonical reduced word of w0."""
    return h_module_coefficients(rs, longest_element(rs).word, module, mode)


def h_full_flag(rs, weight) -> GradedCharacter:
    """Borel-Weil-Bott closed form on G/B."""
    weight = rs.check_weight(weight)
    shifted = tuple(x + 1 for x in weight)
    if rs.is_singular(shifted):
        return GradedCharacter({})
    degree = rs.index(shifted)
    _, letters = rs.dominant_conjugate(shifted)
    # letters applied in order: s_{l_k} ... s_{l_1}; that element is w
    w = from_word(rs, tuple(reversed(letters)))
    top = dot_action(w, weight)
    return GradedCharacter({degree: weyl_character(rs, top)})
