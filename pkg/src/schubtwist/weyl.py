"""Weyl group elements acting on omega-coordinates.

An element is identified by its matrix (the action is faithful); since rho is
regular, w(rho) is used as a cheap hash key.  The left descents of w are the
negative coordinates of w(rho), which also gives a reduced word by greedy
ascent.  Simple indices are 0-based; ``parse_word``/``format_word`` handle the
1-based text form "1,2,1".
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .rootsys import RootSystem, Weight

ENUMERATION_GUARD = 10**6
REDUCED_WORDS_CAP = 12


class WeylError(ValueError):
    pass


class WeylElt:
    __slots__ = ("rs", "matrix", "_word", "_key", "__weakref__")

    def __init__(self, rs: RootSystem, matrix, word=None):
        self.rs = rs
        m = np.ascontiguousarray(matrix, dtype=np.int64)
        m.setflags(write=False)
        self.matrix = m
        self._key = tuple(int(x) for x in m @ np.ones(rs.rank, dtype=np.int64))
        self._word = tuple(word) if word is not None else None

    @property
    def key(self) -> Weight:
        """w(rho)."""
        return self._key

    @property
    def word(self) -> tuple:
        if self._word is None:
            self._word = reduced_word_from_rho_image(self.rs, self._key)
        return self._word

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.rs == other.rs and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"WeylElt({self.rs.cartan_type}, {format_word(self.word) or 'e'})"

    def __mul__(self, other):
        return compose(self, other)

    def act(self, weight) -> Weight:
        return tuple(int(x) for x in self.matrix @ np.asarray(weight, dtype=np.int64))

    def inverse(self) -> WeylElt:
        return from_word(self.rs, tuple(reversed(self.word)))

    def length(self) -> int:
        return len(self.word)


def reduced_word_from_rho_image(rs, mu) -> tuple:
    letters = []
    mu = tuple(mu)
    while True:
        i = next((k for k, x in enumerate(mu) if x < 0), None)
        if i is None:
            return tuple(letters)
        letters.append(i)
        mu = rs.reflect(mu, i)


def _check_index(rs, i):
    if not (0 <= int(i) < rs.rank):
        raise WeylError(f"simple index {i} out of range for {rs.cartan_type} (rank {rs.rank})")
    return int(i)


def _reflection_matrix(rs, i):
    S = np.eye(rs.rank, dtype=np.int64)
    S[:, i] -= rs.alpha(i)
    return S


def identity(rs) -> WeylElt:
    return WeylElt(rs, np.eye(rs.rank, dtype=np.int64), ())


def simple_reflection(rs, i) -> WeylElt:
    i = _check_index(rs, i)
    return WeylElt(rs, _reflection_matrix(rs, i), (i,))


def compose(u: WeylElt, v: WeylElt) -> WeylElt:
    return WeylElt(u.rs, u.matrix @ v.matrix)


def act(w: WeylElt, weight) -> Weight:
    return w.act(weight)


def dot_action(w: WeylElt, weight) -> Weight:
    """w . lambda = w(lambda + rho) - rho."""
    shifted = w.act(tuple(x + 1 for x in weight))
    return tuple(x - 1 for x in shifted)


def from_word(rs, word, check_reduced=False) -> WeylElt:
    word = tuple(_check_index(rs, i) for i in word)
    m = np.eye(rs.rank, dtype=np.int64)
    for i in word:
        m = m @ _reflection_matrix(rs, i)
    w = WeylElt(rs, m)
    if check_reduced and w.length() != len(word):
        raise WeylError(f"word {format_word(word)} is not reduced (length {w.length()})")
    if w.length() == len(word):
        w._word = word
    return w


def is_reduced(rs, word) -> bool:
    return from_word(rs, word).length() == len(tuple(word))


def length(w: WeylElt) -> int:
    return w.length()


def inversion_count(w: WeylElt) -> int:
    """#{beta > 0 : w(beta) < 0}; independent of the rho-based word."""
    return sum(1 for r in w.rs.positive_roots if w.rs.root_sign(w.act(r.weight)) < 0)


def left_descents(w: WeylElt) -> frozenset:
    return frozenset(i for i, x in enumerate(w.key) if x < 0)


def right_descents(w: WeylElt) -> frozenset:
    return left_descents(w.inverse())


def longest_element(rs, J=None) -> WeylElt:
    J = sorted(range(rs.rank) if J is None else {_check_index(rs, i) for i in J})
    w = identity(rs)
    while True:
        # s_i w is longer exactly when (w rho)_i > 0
        i = next((k for k in J if w.key[k] > 0), None)
        if i is None:
            return w
        w = compose(simple_reflection(rs, i), w)


def parabolic_order(rs, J) -> int:
    """|W_J| = prod over positive roots of the J-subsystem of (ht+1)/ht."""
    J = set(J)
    out = Fraction(1)
    for r in rs.positive_roots:
        if all(c == 0 or k in J for k, c in enumerate(r.root_coords)):
            out *= Fraction(r.height + 1, r.height)
    return int(out)


def enumerate_parabolic(rs, J=None, guard=ENUMERATION_GUARD) -> list:
    """All of W_J, breadth-first by length."""
    J = sorted(range(rs.rank) if J is None else {_check_index(rs, i) for i in J})
    bound = parabolic_order(rs, J)
    if bound > guard:
        raise WeylError(f"|W_J| = {bound} exceeds the enumeration guard {guard}")
    level = [identity(rs)]
    out = list(level)
    seen = {level[0].key}
    while level:
        nxt = {}
        for w in level:
            for i in J:
                if w.key[i] > 0:
                    u = compose(simple_reflection(rs, i), w)
                    if u.key not in seen and u.key not in nxt:
                        u._word = (i,) + w.word
                        nxt[u.key] = u
        level = sorted(nxt.values(), key=lambda u: u.word)
        seen.update(nxt)
        out.extend(level)
    assert len(out) == bound
    return out


def all_reduced_words(w: WeylElt, cap=REDUCED_WORDS_CAP) -> list:
    if w.length() > cap:
        raise WeylError(f"length {w.length()} exceeds the reduced-word cap {cap}")
    rs = w.rs
    memo = {}

    def words(key):
        if key in memo:
            return memo[key]
        desc = [i for i, x in enumerate(key) if x < 0]
        if not desc:
            res = [()]
        else:
            res = []
            for i in desc:
                for rest in words(rs.reflect(key, i)):
                    res.append((i,) + rest)
        memo[key] = res
        return res

    # s_i w has rho-image s_i(w rho)
    return sorted(words(w.key))


def bruhat_leq(u: WeylElt, w: WeylElt) -> bool:
    """Subword criterion against the cached reduced word of w."""
    if u.length() > w.length():
        return False
    rs = w.rs
    reached = {identity(rs).key: identity(rs)}
    for i in w.word:
        s = simple_reflection(rs, i)
        for x in list(reached.values()):
            y = compose(x, s)
            reached.setdefault(y.key, y)
    return u.key in reached


def reflection_of(rs, root) -> WeylElt:
    """s_beta(lambda) = lambda - <lambda, beta^vee> beta."""
    beta = rs.root(root.weight if hasattr(root, "weight") else root)
    cols = []
    for k in range(rs.rank):
        e = rs.fundamental_weight(k)
        c = rs.pairing(e, beta)
        cols.append([e[j] - c * beta.weight[j] for j in range(rs.rank)])
    return WeylElt(rs, np.array(cols, dtype=np.int64).T)


def parse_word(text) -> tuple:
    """ "1,2,1" -> (0, 1, 0).  Empty text is the empty word."""
    if isinstance(text, (tuple, list)):
        return tuple(int(i) for i in text)
    text = str(text).strip()
    if not text or text in ("e", "()"):
        return ()
    try:
        letters = tuple(int(t) - 1 for t in text.replace(" ", "").split(","))
    except ValueError:
        raise WeylError(f"malformed word {text!r}") from None
    if any(i < 0 for i in letters):
        raise WeylError(f"malformed word {text!r}: indices are 1-based")
    return letters


def format_word(word) -> str:
    return ",".join(str(i + 1) for i in word)
