"""Exact arithmetic in the reduced free group K_n.

K_n is the quotient of the free group on x_1, ..., x_n by the relations
[x_i, x_i^g] = 1 (each generator commutes with all of its conjugates).  It
is nilpotent of class n, and its lower central quotients are free abelian
on the basic commutators whose leaf indices are pairwise distinct.  This
module computes canonical normal forms by collection over that basis and
provides the reduced Magnus expansion as an independent equality oracle.

Basis.  A basis element is the standard (Chen-Fox-Lyndon) bracketing of a
Lyndon word with pairwise-distinct letters from {1, ..., n}; elements are
ordered by (weight, leaf sequence).  There are (k-1)! * C(n, k) of weight k.

Collection.  Two structural facts make collection in K_n simple:

* any commutator of two basis elements with overlapping support vanishes
  (its multidegree has a repeated index, and the collection identities
  [x,yz] = [x,z][x,y]^z and [xy,z] = [x,z]^y[y,z] preserve multidegree, so
  the non-squarefree basic commutators span a trivial normal subgroup);
* for disjoint supports, [c,d] has squarefree multidegree supp(c)+supp(d),
  so its normal form uses only basis elements of that exact multidegree.
  Those all commute with each other and with c and d, hence
  [c^a, d^b] = [c,d]^{ab}, and the exponents of [c,d] are exactly the
  structure constants of the free Lie algebra in its multilinear component
  (the subgroup generated by the x_i, i in S, is nilpotent of class |S|,
  which kills all deeper correction terms).

The structure constants are computed by Jacobi rewriting of brackets of
standard Lyndon trees; the Magnus oracle never enters the collection path.
"""

from __future__ import annotations

import dataclasses
import functools
import json
from typing import Iterable, Sequence, Union

#: Largest generator count built by default; the basis and the reduced ring
#: grow factorially, so anything beyond this needs an explicit opt-in.
DEFAULT_MAX_RANK = 7

# A commutator tree is either an int leaf (a generator index) or a pair
# (left, right) of commutator trees.
Tree = Union[int, tuple]


class OracleDisagreement(AssertionError):
    """Collection and the Magnus expansion disagreed about an equality."""


def tree_word(tree: Tree) -> tuple[int, ...]:
    """Leaf sequence of a commutator tree, left to right."""
    if isinstance(tree, int):
        return (tree,)
    return tree_word(tree[0]) + tree_word(tree[1])


def tree_weight(tree: Tree) -> int:
    return len(tree_word(tree))


def tree_support(tree: Tree) -> frozenset[int]:
    return frozenset(tree_word(tree))


def standard_bracketing(word: Sequence[int]) -> Tree:
    """Standard bracketing of a Lyndon word (right factor = least proper suffix)."""
    word = tuple(word)
    if len(word) == 1:
        return word[0]
    suffixes = [word[i:] for i in range(1, len(word))]
    right = min(suffixes)
    split = len(word) - len(right)
    return (standard_bracketing(word[:split]), standard_bracketing(right))


def tree_to_group_word(tree: Tree) -> tuple[int, ...]:
    """Expand a commutator tree into a word over signed generator indices."""
    if isinstance(tree, int):
        return (tree,)
    left = tree_to_group_word(tree[0])
    right = tree_to_group_word(tree[1])
    inv_left = tuple(-k for k in reversed(left))
    inv_right = tuple(-k for k in reversed(right))
    return inv_left + inv_right + left + right


@dataclasses.dataclass(frozen=True)
class HallCommutator:
    """A basis commutator: a standard Lyndon tree with squarefree support."""

    tree: Tree

    @property
    def word(self) -> tuple[int, ...]:
        return tree_word(self.tree)

    @property
    def weight(self) -> int:
        return len(self.word)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.word)

    def __repr__(self):
        return f"HallCommutator({_tree_str(self.tree)})"


def _tree_str(tree: Tree) -> str:
    if isinstance(tree, int):
        return f"x{tree}"
    return f"[{_tree_str(tree[0])},{_tree_str(tree[1])}]"


def _squarefree_lyndon_words(n: int) -> list[tuple[int, ...]]:
    """All Lyndon words over {1..n} using pairwise-distinct letters.

    A word with distinct letters is Lyndon iff its first letter is minimal,
    so each k-subset contributes (k-1)! words.
    """
    import itertools

    words: list[tuple[int, ...]] = []
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(1, n + 1), k):
            head = subset[0]
            for rest in itertools.permutations(subset[1:]):
                words.append((head,) + rest)
    words.sort(key=lambda w: (len(w), w))
    return words


@dataclasses.dataclass(frozen=True)
class HallBasis:
    """The ordered basis of K_n: (k-1)! * C(n,k) elements of each weight k."""

    n: int
    elements: tuple[HallCommutator, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, tree: Tree) -> int:
        return _engine(self.n).index[tree]


class _Engine:
    """Per-rank tables: basis, ordering data and memoized commutator tables."""

    def __init__(self, n: int):
        self.n = n
        words = _squarefree_lyndon_words(n)
        self.trees: list[Tree] = [standard_bracketing(w) for w in words]
        self.words: list[tuple[int, ...]] = words
        self.weights: list[int] = [len(w) for w in words]
        self.supports: list[frozenset[int]] = [frozenset(w) for w in words]
        self.index: dict[Tree, int] = {t: i for i, t in enumerate(self.trees)}
        self.basis = HallBasis(n, tuple(HallCommutator(t) for t in self.trees))
        self._lie_memo: dict[tuple[Tree, Tree], dict[Tree, int]] = {}
        self._lie_running: set[tuple[Tree, Tree]] = set()
        self._comm_memo: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}

    # -- free Lie algebra structure constants -------------------------------

    def lie_bracket(self, t1: Tree, t2: Tree) -> dict[Tree, int]:
        """[t1, t2] expanded in the Lyndon basis (disjoint supports assumed)."""
        key = (t1, t2)
        if key in self._lie_memo:
            return self._lie_memo[key]
        if key in self._lie_running:
            raise RuntimeError(f"cyclic bracket rewriting on {key}")
        self._lie_running.add(key)
        try:
            result = self._lie_bracket_uncached(t1, t2)
        finally:
            self._lie_running.discard(key)
        self._lie_memo[key] = result
        return result

    def _lie_bracket_uncached(self, t1: Tree, t2: Tree) -> dict[Tree, int]:
        w1, w2 = tree_word(t1), tree_word(t2)
        if w1 == w2:
            return {}
        if w1 > w2:
            return {t: -c for t, c in self.lie_bracket(t2, t1).items()}
        # w1 < w2: the concatenation is Lyndon.  (t1, t2) is its standard
        # bracketing iff t1 is a leaf or t1's right factor is >= w2.
        if isinstance(t1, int) or tree_word(t1[1]) >= w2:
            return {(t1, t2): 1}
        # Jacobi: [[a,b],c] = [[a,c],b] + [a,[b,c]]
        a, b = t1
        out: dict[Tree, int] = {}
        for tree, coeff in self.lie_bracket(a, t2).items():
            for tree2, c2 in self.lie_bracket(tree, b).items():
                out[tree2] = out.get(tree2, 0) + coeff * c2
        for tree, coeff in self.lie_bracket(b, t2).items():
            for tree2, c2 in self.lie_bracket(a, tree).items():
                out[tree2] = out.get(tree2, 0) + coeff * c2
        return {t: c for t, c in out.items() if c != 0}

    # -- commutator table ----------------------------------------------------

    def comm(self, hi: int, lo: int) -> tuple[tuple[int, int], ...]:
        """Normal form of [c_hi, c_lo] as ((basis index, exponent), ...)."""
        key = (hi, lo)
        cached = self._comm_memo.get(key)
        if cached is not None:
            return cached
        if self.supports[hi] & self.supports[lo]:
            result: tuple[tuple[int, int], ...] = ()
        else:
            bracket = self.lie_bracket(self.trees[hi], self.trees[lo])
            pairs = sorted((self.index[t], c) for t, c in bracket.items())
            result = tuple(pairs)
        self._comm_memo[key] = result
        return result

    # -- collection ----------------------------------------------------------

    def collect_syllables(self, syllables: Iterable[tuple[int, int]]) -> tuple[int, ...]:
        """Collect a word of (basis index, exponent) syllables to exponents.

        Scans for the first merge or inversion; a swap of adjacent syllables
        c_i^a c_j^b (i > j) inserts the correction [c_i, c_j]^{ab}, which
        consists of strictly heavier basis elements, so the process stops.
        """
        work = [[i, e] for i, e in syllables if e != 0]
        pos = 0
        while pos < len(work) - 1:
            i, a = work[pos]
            j, b = work[pos + 1]
            if i == j:
                merged = a + b
                del work[pos + 1]
                if merged == 0:
                    del work[pos]
                else:
                    work[pos][1] = merged
                pos = max(0, pos - 1)
            elif i > j:
                work[pos], work[pos + 1] = [j, b], [i, a]
                scale = a * b
                corrections = [[k, m * scale] for k, m in self.comm(i, j)]
                work[pos + 2:pos + 2] = corrections
                pos = max(0, pos - 1)
            else:
                pos += 1
        exponents = [0] * len(self.trees)
        for i, e in work:
            exponents[i] = e
        return tuple(exponents)


@functools.lru_cache(maxsize=None)
def _engine(n: int) -> _Engine:
    return _Engine(n)


def hall_basis(n: int, max_rank: int | None = None) -> HallBasis:
    """The ordered squarefree Lyndon basis of K_n (memoized per n)."""
    cap = DEFAULT_MAX_RANK if max_rank is None else max_rank
    if n < 1:
        raise ValueError("rank must be positive")
    if n > cap:
        raise ValueError(
            f"rank {n} exceeds the cap {cap}; the basis has factorial growth "
            f"(pass max_rank explicitly to override)"
        )
    return _engine(n).basis


@dataclasses.dataclass(frozen=True)
class KnElement:
    """An element of K_n in canonical form: exponents over hall_basis(n).

    Two elements are equal iff their exponent vectors are equal; the
    identity is the all-zero vector.
    """

    n: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(_engine(self.n).trees):
            raise ValueError("exponent vector does not match the basis size")

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def syllables(self) -> list[tuple[int, int]]:
        return [(i, e) for i, e in enumerate(self.exponents) if e != 0]

    def inverse_syllables(self) -> list[tuple[int, int]]:
        return [(i, -e) for i, e in reversed(self.syllables())]

    def to_group_word(self) -> tuple[int, ...]:
        """A word over signed generator indices representing this element."""
        engine = _engine(self.n)
        letters: list[int] = []
        for i, e in self.syllables():
            word = tree_to_group_word(engine.trees[i])
            if e < 0:
                word = tuple(-k for k in reversed(word))
            letters.extend(word * abs(e))
        return tuple(letters)

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "exponents": [[i, e] for i, e in self.syllables()]}
        )

    def __repr__(self):
        if self.is_identity():
            return f"KnElement(n={self.n}, identity)"
        engine = _engine(self.n)
        parts = [
            f"{_tree_str(engine.trees[i])}^{e}" if e != 1 else _tree_str(engine.trees[i])
            for i, e in self.syllables()
        ]
        return f"KnElement(n={self.n}, {' '.join(parts)})"


def identity(n: int) -> KnElement:
    hall_basis(n)
    return KnElement(n, tuple([0] * len(_engine(n).trees)))


def generator(i: int, n: int) -> KnElement:
    """The image of x_i in K_n."""
    if not (1 <= i <= n):
        raise ValueError(f"generator index {i} out of range 1..{n}")
    return collect([i], n)


def collect(word: Iterable[int], n: int, max_rank: int | None = None) -> KnElement:
    """Normal form of a word over signed generator indices (k means x_k,
    -k means x_k^{-1})."""
    hall_basis(n, max_rank)
    engine = _engine(n)
    syllables = []
    for k in word:
        if k == 0 or abs(k) > n:
            raise ValueError(f"generator index {k} out of range for rank {n}")
        syllables.append((abs(k) - 1, 1 if k > 0 else -1))
    return KnElement(n, engine.collect_syllables(syllables))


def multiply(g: KnElement, h: KnElement) -> KnElement:
    if g.n != h.n:
        raise ValueError("cannot multiply elements of different ranks")
    engine = _engine(g.n)
    return KnElement(g.n, engine.collect_syllables(g.syllables() + h.syllables()))


def inverse(g: KnElement) -> KnElement:
    engine = _engine(g.n)
    return KnElement(g.n, engine.collect_syllables(g.inverse_syllables()))


def commutator(g: KnElement, h: KnElement) -> KnElement:
    """[g, h] = g^{-1} h^{-1} g h."""
    if g.n != h.n:
        raise ValueError("cannot form a commutator across ranks")
    engine = _engine(g.n)
    syllables = (
        g.inverse_syllables() + h.inverse_syllables() + g.syllables() + h.syllables()
    )
    return KnElement(g.n, engine.collect_syllables(syllables))


def conjugate(g: KnElement, h: KnElement) -> KnElement:
    """g^h = h^{-1} g h."""
    if g.n != h.n:
        raise ValueError("cannot conjugate across ranks")
    engine = _engine(g.n)
    syllables = h.inverse_syllables() + g.syllables() + h.syllables()
    return KnElement(g.n, engine.collect_syllables(syllables))


def power(g: KnElement, m: int) -> KnElement:
    base = g if m >= 0 else inverse(g)
    result = identity(g.n)
    for _ in range(abs(m)):
        result = multiply(result, base)
    return result


# ---------------------------------------------------------------------------
# Reduced Magnus expansion: the independent oracle.
# ---------------------------------------------------------------------------


class ReducedTensor:
    """An element of the reduced tensor ring on X_1, ..., X_n.

    Monomials are tuples of pairwise-distinct indices; any product creating
    a repeated index is zero.  Group elements map to units with constant
    term 1 via x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i.
    """

    __slots__ = ("n", "coefficients")

    def __init__(self, n: int, coefficients: dict[tuple[int, ...], int] | None = None):
        self.n = n
        self.coefficients = {
            m: c for m, c in (coefficients or {}).items() if c != 0
        }

    @staticmethod
    def one(n: int) -> "ReducedTensor":
        return ReducedTensor(n, {(): 1})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReducedTensor)
            and self.n == other.n
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.coefficients.items())))

    def __add__(self, other: "ReducedTensor") -> "ReducedTensor":
        out = dict(self.coefficients)
        for m, c in other.coefficients.items():
            out[m] = out.get(m, 0) + c
        return ReducedTensor(self.n, out)

    def __mul__(self, other: "ReducedTensor") -> "ReducedTensor":
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.coefficients.items():
            set1 = set(m1)
            for m2, c2 in other.coefficients.items():
                if set1 & set(m2):
                    continue  # repeated index: the monomial dies
                key = m1 + m2
                out[key] = out.get(key, 0) + c1 * c2
        return ReducedTensor(self.n, out)

    def coefficient(self, monomial: tuple[int, ...]) -> int:
        return self.coefficients.get(monomial, 0)

    def degree_part(self, k: int) -> dict[tuple[int, ...], int]:
        return {m: c for m, c in self.coefficients.items() if len(m) == k}

    def __repr__(self):
        if not self.coefficients:
            return "ReducedTensor(0)"
        terms = []
        for m, c in sorted(self.coefficients.items(), key=lambda kv: (len(kv[0]), kv[0])):
            name = "".join(f"X{i}" for i in m) or "1"
            terms.append(f"{c}*{name}" if name != "1" else f"{c}")
        return "ReducedTensor(" + " + ".join(terms) + ")"


def magnus(word: Iterable[int], n: int) -> ReducedTensor:
    """Image of a word under x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i."""
    result = ReducedTensor.one(n)
    for k in word:
        if k == 0 or abs(k) > n:
            raise ValueError(f"generator index {k} out of range for rank {n}")
        factor = ReducedTensor(n, {(): 1, (abs(k),): 1 if k > 0 else -1})
        result = result * factor
    return result


WordLike = Union[KnElement, Iterable[int]]


def _as_element(value: WordLike, n: int) -> KnElement:
    if isinstance(value, KnElement):
        if value.n != n:
            raise ValueError("rank mismatch")
        return value
    return collect(value, n)


def _as_word(value: WordLike) -> tuple[int, ...]:
    if isinstance(value, KnElement):
        return value.to_group_word()
    return tuple(value)


def equals(g: WordLike, h: WordLike, n: int | None = None, debug: bool = False) -> bool:
    """Equality in K_n via normal forms.

    With ``debug=True`` the reduced Magnus expansions are compared as well,
    and a disagreement between the two verdicts raises OracleDisagreement.
    """
    if n is None:
        ranks = [v.n for v in (g, h) if isinstance(v, KnElement)]
        if not ranks:
            raise ValueError("rank n is required when both inputs are words")
        if len(set(ranks)) > 1:
            raise ValueError("rank mismatch")
        n = ranks[0]
    verdict = _as_element(g, n).exponents == _as_element(h, n).exponents
    if debug:
        oracle = magnus(_as_word(g), n) == magnus(_as_word(h), n)
        if oracle != verdict:
            raise OracleDisagreement(
                f"collection says {verdict} but the Magnus expansion says {oracle} "
                f"for inputs {g!r}, {h!r}"
            )
    return verdict
