"""Words over generator symbols.

A letter is a pair ``(symbol, exponent)`` with exponent ``+1`` or ``-1``.
Letters of involutions are always stored with exponent ``+1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

Letter = tuple[str, int]
Word = tuple[Letter, ...]


def normalize(word: Iterable[Letter], involutions: frozenset[str] | set[str]) -> Word:
    """Rewrite inverse letters of involutions as positive letters."""
    return tuple((s, 1) if s in involutions else (s, e) for s, e in word)


def inverse(word: Sequence[Letter], involutions: frozenset[str] | set[str] = frozenset()) -> Word:
    return normalize(((s, -e) for s, e in reversed(word)), involutions)


def power(word: Sequence[Letter], k: int) -> Word:
    return tuple(word) * k


def letter_inverse(letter: Letter, involutions: frozenset[str] | set[str]) -> Letter:
    s, e = letter
    return (s, 1) if s in involutions else (s, -e)


def reduce_seam(left: Word, right: Word, involutions: frozenset[str] | set[str]) -> Word:
    """Concatenate two words, cancelling inverse pairs only across the seam."""
    i = len(left)
    j = 0
    while i > 0 and j < len(right) and right[j] == letter_inverse(left[i - 1], involutions):
        i -= 1
        j += 1
    return tuple(left[:i]) + tuple(right[j:])


def rotations(word: Sequence[Letter]) -> list[Word]:
    w = tuple(word)
    return [w[i:] + w[:i] for i in range(len(w))] if w else [w]


def cyclic_variants(word: Sequence[Letter], involutions: frozenset[str] | set[str]) -> set[Word]:
    """All rotations of the word and of its inverse."""
    return set(rotations(word)) | set(rotations(inverse(word, involutions)))


def same_cyclic_word(u: Sequence[Letter], v: Sequence[Letter], involutions: frozenset[str] | set[str]) -> bool:
    if len(u) != len(v):
        return False
    return tuple(v) in cyclic_variants(u, involutions)


def cyclic_canonical(word: Sequence[Letter], involutions: frozenset[str] | set[str]) -> Word:
    """Least representative over rotation and inversion."""
    return min(cyclic_variants(word, involutions), key=word_sort_key)


def word_sort_key(word: Sequence[Letter]) -> tuple:
    return tuple((s, -e) for s, e in word)


def primitive_root(word: Sequence[Letter]) -> tuple[Word, int]:
    """Return ``(u, k)`` with ``word == u**k`` and ``k`` maximal."""
    w = tuple(word)
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p], n // p
    return w, 1


def letter_text(letter: Letter) -> str:
    s, e = letter
    return s if e == 1 else f"{s}^-1"


def word_text(word: Sequence[Letter], compress: bool = True) -> str:
    """Render a word, writing proper powers as ``(u)^k``."""
    w = tuple(word)
    if not w:
        return "1"
    if compress:
        root, k = primitive_root(w)
        if k > 1:
            inner = "".join(letter_text(x) for x in root)
            if len(root) == 1 and root[0][1] == 1:
                return f"{inner}^{k}"
            return f"({inner})^{k}"
    return "".join(letter_text(x) for x in w)


def plain(text: str) -> Word:
    """Parse a plain word such as ``"dcbc"`` of single-character positive letters."""
    return tuple((ch, 1) for ch in text if not ch.isspace())


def letters_string(word: Sequence[Letter]) -> str:
    return "".join(s if e == 1 else s.upper() for s, e in word)
