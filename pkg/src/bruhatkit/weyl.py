"""Weyl group elements as exact integer matrices on the root lattice.

An element is the rank x rank integer matrix of its action in simple-root
coordinates (column j is the image of alpha_j); equality is matrix equality.
Words compose left to right: ``from_word(rs, [1, 2])`` is s_1 s_2, acting by
``(s_1 s_2)(x) = s_1(s_2(x))``.

Elements are interned per root system, so lengths, inverses, and reduced
words are computed once per element.  Everything here is pure and safe for
concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import GroupTooLargeError, InvalidInputError
from .rootsys import Matrix, Root, RootSystem, weyl_group_order

SimpleSubset = frozenset[int]

#: Default refusal threshold for full group enumeration (= |W(E6)|).
DEFAULT_GROUP_CAP = 51840


def _identity_matrix(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank))
                 for i in range(rank))


def _mat_mul(a: Matrix, b: Matrix, rank: int) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(rank))
              for j in range(rank))
        for i in range(rank))


def _mat_vec(m: Matrix, v: Sequence[int], rank: int) -> Root:
    return tuple(sum(m[i][k] * v[k] for k in range(rank))
                 for i in range(rank))


def _mat_inverse(m: Matrix, rank: int) -> Matrix:
    # Gauss-Jordan over Fractions; the result is an integer matrix because
    # root-lattice actions are unimodular.
    aug = [[Fraction(m[i][j]) for j in range(rank)]
           + [Fraction(1 if i == j else 0) for j in range(rank)]
           for i in range(rank)]
    for col in range(rank):
        piv = next(r for r in range(col, rank) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(rank):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = tuple(tuple(int(aug[i][rank + j]) for j in range(rank))
                for i in range(rank))
    return out


class WeylElement:
    """A Weyl group element; obtain instances via from_word / identity."""

    __slots__ = ("system", "action", "_length", "_inverse", "_hash")

    def __init__(self, system: RootSystem, action: Matrix):
        self.system = system
        self.action = action
        self._length: int | None = None
        self._inverse: WeylElement | None = None
        self._hash = hash(action)

    @property
    def length(self) -> int:
        """Coxeter length = number of positive roots sent negative."""
        if self._length is None:
            n = self.system.rank
            self._length = sum(
                1 for r in self.system.positive_roots
                if any(c < 0 for c in _mat_vec(self.action, r, n)))
        return self._length

    def apply(self, root: Root) -> Root:
        return _mat_vec(self.action, root, self.system.rank)

    def is_identity(self) -> bool:
        return self.length == 0

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __invert__(self) -> "WeylElement":
        return inverse(self)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, WeylElement)
                and self.action == other.action
                and self.system is other.system)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"WeylElement({word_string(self)})"

    def sort_key(self) -> tuple:
        """Deterministic total order: by length, then matrix entries."""
        return (self.length, self.action)


def _intern(rs: RootSystem, action: Matrix) -> WeylElement:
    cache = rs.element_cache
    el = cache.get(action)
    if el is None:
        el = cache.setdefault(action, WeylElement(rs, action))
    return el


def identity(rs: RootSystem) -> WeylElement:
    return _intern(rs, _identity_matrix(rs.rank))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    rs._check_index(i)
    return _intern(rs, rs.reflection_matrix(rs.simple_root(i)))


def reflection(rs: RootSystem, alpha: Root) -> WeylElement:
    """The reflection s_alpha for a positive root alpha."""
    return _intern(rs, rs.reflection_matrix(alpha))


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Product of simple reflections in the given order.

    >>> from bruhatkit.rootsys import root_system
    >>> rs = root_system("A", 2)
    >>> from_word(rs, [1, 2, 1]).length
    3
    >>> from_word(rs, [1, 1]) == identity(rs)
    True
    """
    m = _identity_matrix(rs.rank)
    for i in word:
        rs._check_index(i)
        m = _mat_mul(m, rs.reflection_matrix(rs.simple_root(i)), rs.rank)
    return _intern(rs, m)


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    if u.system is not v.system:
        raise InvalidInputError("elements belong to different root systems")
    return _intern(u.system, _mat_mul(u.action, v.action, u.system.rank))


def inverse(w: WeylElement) -> WeylElement:
    if w._inverse is None:
        inv = _intern(w.system, _mat_inverse(w.action, w.system.rank))
        w._inverse = inv
        inv._inverse = w
    return w._inverse


def apply_to_root(w: WeylElement, root: Root) -> Root:
    if not w.system.is_root(root):
        raise InvalidInputError(f"{root} is not a root of {w.system!r}")
    return w.apply(root)


@lru_cache(maxsize=None)
def right_descents(w: WeylElement) -> SimpleSubset:
    """Simple indices i with l(w s_i) < l(w), i.e. w(alpha_i) negative."""
    # w(alpha_i) is column i of the action matrix; a root is negative iff
    # any coefficient is.
    return frozenset(
        i for i in range(1, w.system.rank + 1)
        if any(row[i - 1] < 0 for row in w.action))


def left_descents(w: WeylElement) -> SimpleSubset:
    """Simple indices i with l(s_i w) < l(w), i.e. w^{-1}(alpha_i) negative."""
    return right_descents(inverse(w))


def right_inversions(w: WeylElement) -> frozenset[Root]:
    """{alpha in Phi+ : w(alpha) in Phi-}; has exactly l(w) members."""
    return frozenset(r for r in w.system.positive_roots
                     if any(c < 0 for c in w.apply(r)))


def left_inversions(w: WeylElement) -> frozenset[Root]:
    """{alpha in Phi+ : w^{-1}(alpha) in Phi-}; has exactly l(w) members."""
    return right_inversions(inverse(w))


@lru_cache(maxsize=None)
def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """The lexicographically least reduced word (greedy least left descent).

    >>> from bruhatkit.rootsys import root_system
    >>> rs = root_system("A", 2)
    >>> reduced_word(from_word(rs, [2, 1, 2]))
    (1, 2, 1)
    """
    out = []
    x = w
    while not x.is_identity():
        i = min(left_descents(x))
        out.append(i)
        x = multiply(simple_reflection(x.system, i), x)
    return tuple(out)


@lru_cache(maxsize=None)
def all_reduced_words(w: WeylElement) -> frozenset[tuple[int, ...]]:
    """Every reduced word of w."""
    if w.is_identity():
        return frozenset({()})
    words = set()
    for i in left_descents(w):
        rest = all_reduced_words(multiply(simple_reflection(w.system, i), w))
        words.update((i,) + tail for tail in rest)
    return frozenset(words)


def support(w: WeylElement) -> SimpleSubset:
    """Simple indices occurring in one (hence every) reduced word of w."""
    return frozenset(reduced_word(w))


def word_string(w: WeylElement) -> str:
    """Dot-separated reduced word; the identity renders as "id"."""
    word = reduced_word(w)
    return ".".join(map(str, word)) if word else "id"


def left_parabolic_decomposition(
        w: WeylElement, subset: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """w = a d with a in W_I, d with no left descent in I, lengths additive.

    Computed by iteratively stripping left descents lying in I.
    """
    sub = frozenset(subset)
    rs = w.system
    for i in sub:
        rs._check_index(i)
    a = identity(rs)
    d = w
    while True:
        common = left_descents(d) & sub
        if not common:
            return a, d
        i = min(common)
        s = simple_reflection(rs, i)
        a = multiply(a, s)
        d = multiply(s, d)


def right_parabolic_decomposition(
        w: WeylElement, subset: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """w = w^I w_I with w_I in W_I, w^I with no right descent in I."""
    sub = frozenset(subset)
    rs = w.system
    for i in sub:
        rs._check_index(i)
    head = w
    tail = identity(rs)
    while True:
        common = right_descents(head) & sub
        if not common:
            return head, tail
        i = min(common)
        s = simple_reflection(rs, i)
        head = multiply(head, s)
        tail = multiply(s, tail)


def longest_element(rs: RootSystem, subset: Iterable[int] = ()) -> WeylElement:
    """The maximal-length element w_0(I) of the standard parabolic W_I.

    With the default empty subset this is the identity; with the full index
    set it is the longest element of W.
    """
    sub = sorted(frozenset(subset))
    for i in sub:
        rs._check_index(i)
    w = identity(rs)
    while True:
        ascent = next((i for i in sub if i not in right_descents(w)), None)
        if ascent is None:
            return w
        w = multiply(w, simple_reflection(rs, ascent))


def enumerate_group(rs: RootSystem,
                    cap: int = DEFAULT_GROUP_CAP) -> tuple[WeylElement, ...]:
    """All Weyl group elements, each exactly once, in BFS order from the
    identity under right multiplication by generators.

    Refuses (with the exact order in the error) if |W| exceeds the cap.
    """
    order = weyl_group_order(rs.datum.family, rs.rank)
    if order > cap:
        raise GroupTooLargeError(
            f"|W({rs.datum.family}{rs.rank})| = {order} exceeds the "
            f"enumeration cap {cap}", order, cap)
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    start = identity(rs)
    seen = {start}
    out = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                x = multiply(w, g)
                if x not in seen:
                    seen.add(x)
                    out.append(x)
                    nxt.append(x)
        frontier = nxt
    return tuple(out)


def canonical_order(elements: Iterable[WeylElement]) -> list[WeylElement]:
    """Sort by length, then lexicographically by least reduced word."""
    return sorted(elements, key=lambda w: (w.length, reduced_word(w)))
