"""Cartan data, roots and weights for the finite crystallographic types.

Weights live in fundamental-weight coordinates as tuples of ints, so the
pairing with a simple coroot is just a coordinate lookup.  Simple roots are
numbered as in Bourbaki; for B2 the first root is long, which gives
<a1, a2^> = -2 and <a2, a1^> = -1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

MAX_RANK = 8

Weight = tuple  # tuple[int, ...], fundamental-weight coordinates


class RootSystemError(ValueError):
    pass


_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _ADMISSIBLE:
            raise RootSystemError(f"unknown Cartan family {self.family!r}")
        if not isinstance(self.rank, int) or not _ADMISSIBLE[self.family](self.rank):
            raise RootSystemError(f"inadmissible Cartan type {self.family}{self.rank}")
        if self.rank > MAX_RANK:
            raise RootSystemError(f"rank {self.rank} exceeds the supported maximum {MAX_RANK}")

    @classmethod
    def parse(cls, text) -> CartanType:
        if isinstance(text, CartanType):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", str(text))
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> np.ndarray:
    """A[i, j] = <alpha_j, alpha_i^vee>; column j is alpha_j in omega-coordinates."""
    n = ct.rank
    A = 2 * np.eye(n, dtype=np.int64)

    def link(i, j, a=-1, b=-1):
        A[i, j] = a
        A[j, i] = b

    f = ct.family
    if f in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            link(n - 2, n - 1, -1, -2)
        elif f == "C":
            link(n - 2, n - 1, -2, -1)
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif f == "G":
        link(0, 1, -3, -1)
    return A


@dataclass(frozen=True)
class Root:
    weight: Weight
    root_coords: tuple
    positive: bool

    @property
    def height(self) -> int:
        return sum(self.root_coords)

    def __neg__(self):
        return Root(tuple(-x for x in self.weight), tuple(-x for x in self.root_coords), not self.positive)


def _symmetrizer(A):
    # d_i = (alpha_i, alpha_i)/2, normalised so short roots have d = 1
    n = A.shape[0]
    d = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if j != i and A[i, j] != 0 and d[j] is None:
                # d_i A[i,j] = d_j A[j,i]
                d[j] = d[i] * int(A[i, j]) / int(A[j, i])
                todo.append(j)
    lo = min(d)
    return tuple(int(x / lo) for x in d)


def _rational_inverse(A):
    n = A.shape[0]
    M = [[Fraction(int(A[i, j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [x / pv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: np.ndarray = field(repr=False)
    positive_roots: tuple = field(repr=False)
    rho: Weight = field(repr=False)
    highest_root: Root = field(repr=False)
    symmetrizer: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.cartan_type == self.cartan_type

    def __hash__(self):
        return hash(self.cartan_type)

    # -- roots ---------------------------------------------------------------

    @cached_property
    def simple_roots(self) -> tuple:
        return tuple(self.positive_roots[self._root_index[self.simple_root(i)]] for i in range(self.rank))

    @cached_property
    def _alpha(self) -> np.ndarray:
        a = np.ascontiguousarray(self.cartan_matrix.T)
        a.setflags(write=False)
        return a

    def alpha(self, i) -> np.ndarray:
        """alpha_i as an int64 vector in omega-coordinates."""
        return self._alpha[i]

    def simple_root(self, i) -> Weight:
        return tuple(int(x) for x in self._alpha[i])

    @cached_property
    def _root_index(self) -> dict:
        return {r.weight: k for k, r in enumerate(self.positive_roots)}

    @cached_property
    def negative_roots(self) -> tuple:
        return tuple(-r for r in self.positive_roots)

    @cached_property
    def roots(self) -> tuple:
        return self.positive_roots + self.negative_roots

    def root(self, weight) -> Root | None:
        weight = tuple(weight)
        k = self._root_index.get(weight)
        if k is not None:
            return self.positive_roots[k]
        k = self._root_index.get(tuple(-x for x in weight))
        if k is not None:
            return self.negative_roots[k]
        return None

    def is_root(self, weight) -> bool:
        return self.root(weight) is not None

    def root_sign(self, weight) -> int:
        """+1 / -1 for positive / negative roots, 0 for non-roots."""
        weight = tuple(weight)
        if weight in self._root_index:
            return 1
        if tuple(-x for x in weight) in self._root_index:
            return -1
        return 0

    def from_root_coords(self, coords) -> Weight:
        v = self.cartan_matrix @ np.asarray(coords, dtype=np.int64)
        return tuple(int(x) for x in v)

    @cached_property
    def _inverse_cartan(self):
        return _rational_inverse(self.cartan_matrix)

    def to_root_coords(self, weight) -> tuple:
        """Exact root-basis coordinates; Fractions unless integral."""
        out = []
        for row in self._inverse_cartan:
            x = sum(a * int(w) for a, w in zip(row, weight))
            out.append(int(x) if x.denominator == 1 else x)
        return tuple(out)

    # -- pairings ------------------------------------------------------------

    @cached_property
    def coroot_matrix(self) -> np.ndarray:
        """Row k: coordinates of (beta_k)^vee in simple coroots, beta_k positive."""
        d = self.symmetrizer
        rows = []
        for r in self.positive_roots:
            db = self._length2(r) // 2
            rows.append([b * di // db for b, di in zip(r.root_coords, d)])
        m = np.array(rows, dtype=np.int64).reshape(len(rows), self.rank)
        m.setflags(write=False)
        return m

    def _length2(self, r) -> int:
        # (beta, beta) = sum_ij b_i b_j d_i A_ij
        b = np.array(r.root_coords, dtype=np.int64)
        S = np.array(self.symmetrizer, dtype=np.int64)[:, None] * self.cartan_matrix
        return int(b @ S @ b)

    def pairing(self, weight, beta) -> int:
        """<weight, beta^vee>; beta may be a Root or a root given as a weight."""
        if not isinstance(beta, Root):
            found = self.root(beta)
            if found is None:
                raise RootSystemError(f"{tuple(beta)} is not a root of {self.cartan_type}")
            beta = found
        k = self._root_index[beta.weight if beta.positive else tuple(-x for x in beta.weight)]
        val = int(self.coroot_matrix[k] @ np.asarray(weight, dtype=np.int64))
        return val if beta.positive else -val

    def positive_pairings(self, weight) -> np.ndarray:
        return self.coroot_matrix @ np.asarray(weight, dtype=np.int64)

    def is_dominant(self, weight) -> bool:
        return all(x >= 0 for x in weight)

    def is_singular(self, weight) -> bool:
        return bool(np.any(self.positive_pairings(weight) == 0))

    def reflect(self, weight, i) -> Weight:
        """s_i(weight) = weight - <weight, alpha_i^vee> alpha_i."""
        c = weight[i]
        return tuple(int(x - c * a) for x, a in zip(weight, self._alpha[i]))

    def index(self, weight) -> int:
        """Minimal length of w with w(weight) dominant (greedy ascent)."""
        steps = 0
        lam = tuple(weight)
        while True:
            i = next((k for k, x in enumerate(lam) if x < 0), None)
            if i is None:
                return steps
            lam = self.reflect(lam, i)
            steps += 1

    def dominant_conjugate(self, weight):
        """Return (dominant weight, letters applied in order)."""
        lam = tuple(weight)
        letters = []
        while True:
            i = next((k for k, x in enumerate(lam) if x < 0), None)
            if i is None:
                return lam, tuple(letters)
            lam = self.reflect(lam, i)
            letters.append(i)

    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental_weight(self, i) -> Weight:
        return tuple(int(k == i) for k in range(self.rank))

    def check_weight(self, weight) -> Weight:
        weight = tuple(int(x) for x in weight)
        if len(weight) != self.rank:
            raise RootSystemError(f"weight {weight} has length {len(weight)}, expected {self.rank}")
        return weight

    def to_dict(self) -> dict:
        return {
            "type": str(self.cartan_type),
            "cartan_matrix": self.cartan_matrix.tolist(),
            "positive_roots": [
                {"weight": list(r.weight), "root_coords": list(r.root_coords)} for r in self.positive_roots
            ],
            "rho": list(self.rho),
            "highest_root": {"weight": list(self.highest_root.weight), "root_coords": list(self.highest_root.root_coords)},
        }


def _closure(A):
    n = A.shape[0]
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        b = queue.pop()
        for i in range(n):
            c = int(sum(int(A[i, j]) * b[j] for j in range(n)))
            if c == 0:
                continue
            nb = tuple(b[j] - (c if j == i else 0) for j in range(n))
            if all(x >= 0 for x in nb) and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))


@lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    A = cartan_matrix(ct)
    A.setflags(write=False)
    coords = _closure(A)
    roots = tuple(Root(tuple(int(x) for x in A @ np.array(c)), c, True) for c in coords)
    top = max(roots, key=lambda r: r.height)
    # every other positive root must lie below the highest one
    assert all(all(a >= b for a, b in zip(top.root_coords, r.root_coords)) for r in roots)
    return RootSystem(
        cartan_type=ct,
        cartan_matrix=A,
        positive_roots=roots,
        rho=(1,) * ct.rank,
        highest_root=top,
        symmetrizer=_symmetrizer(A),
    )


def build(cartan_type) -> RootSystem:
    """Root system for a Cartan type given as CartanType or text like "B2"."""
    return _build(CartanType.parse(cartan_type))
