"""Braid words on n strands and their permutation images.

A braid word is a finite sequence of signed generator indices: the letter
``k > 0`` stands for the Artin generator sigma_k and ``k < 0`` for its
inverse.  Words always carry their strand count explicitly; mixing words on
different strand counts is an error rather than a silent promotion.

Throughout the package, products are read left to right: in ``u * v`` the
word ``u`` acts first.  Permutations compose the same way.
"""

from __future__ import annotations

import dataclasses
import json
import re
from typing import Iterable, Sequence

_TOKEN_RE = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(i: int, j: int, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: apply ``self`` first, then ``other``."""
        if other.n != self.n:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for point, image in enumerate(self.images, start=1):
            images[image - 1] = point
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, start=1))


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the generators sigma_1, ..., sigma_{n-1} of the braid group.

    ``letters`` lists signed generator indices in reading order; no reduction
    is applied on construction.
    """

    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise ValueError(
                    f"letter {k} out of range for {self.strands} strands "
                    f"(need 1 <= |k| <= {self.strands - 1})"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.letters + other.letters, self.strands)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-k for k in reversed(self.letters)), self.strands)

    def __pow__(self, m: int) -> "BraidWord":
        base = self if m >= 0 else self.inverse()
        return BraidWord(base.letters * abs(m), self.strands)

    def to_json(self) -> str:
        return json.dumps(list(self.letters))

    def as_tokens(self) -> str:
        return " ".join(f"s{k}" if k > 0 else f"s{-k}^-1" for k in self.letters)


def parse(text: str, strands: int) -> BraidWord:
    """Parse a braid word from text.

    Accepts whitespace-separated tokens ``sK`` / ``sK^E`` (an exponent E
    repeats the letter), bare signed integers, or a JSON array of signed
    integers.
    """
    text = text.strip()
    letters: list[int] = []
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed JSON braid word: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(k, int) for k in data):
            raise ValueError("JSON braid word must be an array of integers")
        letters = list(data)
    else:
        for token in text.split():
            match = _TOKEN_RE.match(token)
            if match:
                index = int(match.group(1))
                exponent = int(match.group(2)) if match.group(2) else 1
                sign = 1 if exponent > 0 else -1
                letters.extend([sign * index] * abs(exponent))
                continue
            try:
                letters.append(int(token))
            except ValueError:
                raise ValueError(f"malformed braid word token: {token!r}") from None
    return BraidWord(tuple(letters), strands)


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for k in word.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(tuple(stack), word.strands)


def permutation(word: BraidWord) -> Permutation:
    """Image of the word under the projection to the symmetric group.

    Each letter maps to the transposition (i, i+1); letters act left to
    right.
    """
    perm = Permutation.identity(word.strands)
    for k in word.letters:
        i = abs(k)
        perm = perm.then(Permutation.transposition(i, i + 1, word.strands))
    return perm


def pure_gen(i: int, j: int, n: int) -> BraidWord:
    """The standard pure braid generator a_ij as a word in the sigma_k.

    a_{i,i+1} = sigma_i^2 and, for j > i+1,
    a_ij = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}.
    """
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    prefix = list(range(j - 1, i, -1))
    letters = prefix + [i, i] + [-k for k in reversed(prefix)]
    return BraidWord(tuple(letters), n)


def commutator_word(u: BraidWord, v: BraidWord) -> BraidWord:
    """The word u^{-1} v^{-1} u v."""
    return u.inverse() * v.inverse() * u * v


def conjugate_word(x: BraidWord, g: BraidWord) -> BraidWord:
    """The word g^{-1} x g."""
    return g.inverse() * x * g


def goldsmith_word() -> BraidWord:
    """Goldsmith's 16-letter 3-braid: isotopically nontrivial, homotopically trivial."""
    return BraidWord((1, 2, 2, 1, 1, -2, -2, -1, -1, 2, 2, -1, -1, -2, -2, 1), 3)


def words_equal_free(u: BraidWord, v: BraidWord) -> bool:
    """Equality of the freely reduced letter sequences (not braid-group equality)."""
    return free_reduce(u).letters == free_reduce(v).letters and u.strands == v.strands


def from_letters(letters: Iterable[int], strands: int) -> BraidWord:
    return BraidWord(tuple(letters), strands)


def concat(words: Sequence[BraidWord]) -> BraidWord:
    if not words:
        raise ValueError("cannot concatenate an empty sequence of words")
    result = words[0]
    for word in words[1:]:
        result = result * word
    return result
