"""Tangent-sheaf data for Schubert and BSDH varieties.

B is the negative Borel, so g/b carries the positive roots and a parabolic
p_J carries the Cartan zeros, all negative roots and the J-positive roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .charring import Bounds, FormalCharacter, GradedCharacter, cancel_adjacent
from .cohomology import _check_word, h_line_bundle
from .strings import GREEDY, check_mode
from .weyl import left_descents


@dataclass(frozen=True)
class BWeightModule:
    char: FormalCharacter
    label: str = ""

    def __post_init__(self):
        if not self.char.is_nonnegative():
            raise ValueError(f"{self.label or 'module'} has negative multiplicities")

    def dimension(self) -> int:
        return self.char.dimension()


def g_mod_b_weights(rs) -> BWeightModule:
    return BWeightModule(FormalCharacter([r.weight for r in rs.positive_roots]), "g/b")


def _in_subsystem(root, J):
    return all(c == 0 or k in J for k, c in enumerate(root.root_coords))


def p_J_weights(rs, J) -> BWeightModule:
    J = frozenset(J)
    terms = {rs.zero(): rs.rank}
    for r in rs.negative_roots:
        terms[r.weight] = 1
    for r in rs.positive_roots:
        if _in_subsystem(r, J):
            terms[r.weight] = 1
    label = "p_{" + ",".join(str(j + 1) for j in sorted(J)) + "}"
    return BWeightModule(FormalCharacter(terms), label)


def adjoint_weights(rs) -> BWeightModule:
    return BWeightModule(p_J_weights(rs, range(rs.rank)).char, "g")


def j_set(rs, word) -> frozenset:
    """{a_{i_j} : <a_{i_j}, a_{i_k}> = 0 for every earlier k}."""
    word = _check_word(rs, word)
    out = set()
    for j, a in enumerate(word):
        if all(rs.cartan_matrix[b, a] == 0 for b in word[:j]):
            out.add(a)
    return frozenset(out)


def schubert_stabilizer(w) -> frozenset:
    """I(w), with Stab_G(X(w)) = P_{I(w)}: the left descent set."""
    return left_descents(w)


def bsdh_tangent(rs, word, mode=GREEDY) -> GradedCharacter:
    """H^j(Z(w, word), Theta) from 0 -> L(a_last) -> Theta_Z -> f^* Theta_Z' -> 0."""
    return _bsdh_tangent(rs, _check_word(rs, word), check_mode(mode))


@lru_cache(maxsize=16384)
def _bsdh_tangent(rs, word, mode):
    if not word:
        return GradedCharacter({})
    line = h_line_bundle(rs, word, rs.simple_root(word[-1]), mode)
    rest = _bsdh_tangent(rs, word[:-1], mode)
    return combine_ses(line, rest)


def combine_ses(sub: GradedCharacter, quot: GradedCharacter) -> GradedCharacter:
    """Cohomology of the middle term of 0 -> sub -> M -> quot -> 0.

    The connecting maps H^j(quot) -> H^{j+1}(sub) are weight-preserving; when
    their source and target share no weight they vanish and M is the direct
    sum degree-wise.  Otherwise the direct sum is the upper end and the lower
    end lets each clashing weight cancel fully."""
    degrees = set(sub.by_degree) | set(quot.by_degree)
    upper = {d: sub.degree(d) + quot.degree(d) for d in degrees}
    lower = dict(upper)
    clashes = []
    for d in sorted(quot.by_degree):
        for w in sorted(quot.degree(d).support() & sub.degree(d + 1).support()):
            clashes.append((w, d))
            cut = FormalCharacter({w: min(quot.degree(d)[w], sub.degree(d + 1)[w])})
            lower[d] = lower[d] - cut
            lower[d + 1] = lower[d + 1] - cut
    reasons = []
    for part, name in ((sub, "sub"), (quot, "quotient")):
        if not part.exact:
            reasons.append(f"{name} term not certified")
    if clashes:
        shown = ", ".join(f"{w}@{d}->{d + 1}" for w, d in clashes[:5])
        reasons.append(f"connecting map may be nonzero at {shown}")
    if not reasons:
        return GradedCharacter(upper)
    if not sub.exact or not quot.exact:
        lower = cancel_adjacent(upper)
    upper = {d: c for d, c in upper.items() if c}
    lower = {d: c for d, c in lower.items() if c}
    return GradedCharacter(upper, Bounds(lower, upper, tuple(reasons)))


@dataclass(frozen=True)
class Lemma46Report:
    word: tuple
    j_set: frozenset
    passed: bool
    excess: FormalCharacter
    h0: FormalCharacter
    parabolic: FormalCharacter

    def to_json(self):
        return {
            "j_set": [j + 1 for j in sorted(self.j_set)],
            "passed": self.passed,
            "excess": self.excess.to_json(),
        }


def lemma46_check(rs, word, mode=GREEDY) -> Lemma46Report:
    """Is the computed H^0(Z, Theta) a sub-multiset of the weights of p_{J(w, word)}?"""
    if not rs.cartan_type.simply_laced():
        raise ValueError(f"{rs.cartan_type} is not simply-laced")
    word = _check_word(rs, word)
    J = j_set(rs, word)
    h0 = bsdh_tangent(rs, word, mode).degree(0)
    par = p_J_weights(rs, J).char
    excess = FormalCharacter({w: m - par[w] for w, m in h0.items() if m > par[w]})
    return Lemma46Report(word, J, not excess, excess, h0, par)
