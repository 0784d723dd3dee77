"""Non-crossing patterns over the involutions ``b, c, d``.

A pattern is a cyclic word.  Conditions (i) to (iii) are syntactic; condition
(iv) is decided by a crossing oracle: lay out a cycle ``C`` reading the
pattern with every vertex of the same spin, so each vertex has its third
(pending) edge on a side fixed by the two cycle colours.  A second cycle ``R``
reading a rotation of the pattern from a vertex of ``C`` runs along ``C`` for
a while; it crosses ``C`` when the pending edges by which it arrives and
leaves lie on opposite sides.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

ALPHABET = "bcd"
_CYCLIC = {("b", "c", "d"), ("c", "d", "b"), ("d", "b", "c")}


class PatternError(ValueError):
    """The word uses letters outside ``b, c, d`` or is empty."""


@dataclass(frozen=True)
class Pattern:
    letters: str

    def __post_init__(self):
        if not self.letters:
            raise PatternError("empty pattern")
        bad = set(self.letters) - set(ALPHABET)
        if bad:
            raise PatternError(f"letters {''.join(sorted(bad))!r} are not in b, c, d")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class NoncrossingResult:
    ok: bool
    condition: str | None
    reason: str

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PatternDecomposition:
    dominant: str
    A: str
    Z: str
    n: int

    def reassemble(self) -> str:
        return (self.A + self.Z) * self.n


def as_letters(p: Pattern | str) -> str:
    text = p.letters if isinstance(p, Pattern) else p
    return Pattern(text).letters


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def canonical(p: Pattern | str) -> str:
    """Least word over rotations and the inversion, with ``b < c < d``."""
    w = as_letters(p)
    return min(rotations(w) + rotations(w[::-1]))


def _cyclically_proper(w: str) -> bool:
    return all(w[i] != w[(i + 1) % len(w)] for i in range(len(w)))


def _is_bcd_power(w: str) -> bool:
    if len(w) % 3:
        return False
    return any(v == v[:3] * (len(w) // 3) and len(set(v[:3])) == 3 for v in rotations(w))


def _pending_side(w: str, p: int) -> int:
    """Side (+1 or -1) of the pending edge at vertex ``p`` of the cycle reading ``w``."""
    x, y = w[p - 1], w[p]
    z = (set(ALPHABET) - {x, y}).pop()
    return 1 if (x, y, z) in _CYCLIC else -1


def _follow(w: str, q: str, step: int) -> tuple[int, int] | None:
    """Walk ``q`` (forward if ``step`` is 1, backward from its end otherwise) from vertex 0.

    Returns ``(vertex, steps)`` where the walk leaves the cycle, or None if it
    never does within one full turn.
    """
    n = len(w)
    p = 0
    letters = q if step == 1 else q[::-1]
    for i, x in enumerate(letters):
        if x == w[p % n]:
            p += 1
        elif x == w[(p - 1) % n]:
            p -= 1
        else:
            return p % n, i
    return None


def crossing_witness(p: Pattern | str) -> tuple[int, str] | None:
    """A rotation of the pattern whose cycle crosses the base cycle, or None.

    Requires conditions (i) and (ii).  The witness is ``(shift, orientation)``.
    """
    w = as_letters(p)
    n = len(w)
    for orient, base in (("forward", w), ("inverse", w[::-1])):
        for s in range(n):
            q = base[s:] + base[:s]
            if q == w:
                continue
            out = _follow(w, q, 1)
            back = _follow(w, q, -1)
            if out is None or back is None:
                continue
            (u, i), (v, j) = out, back
            if i + j >= n:
                continue
            if _pending_side(w, u) != _pending_side(w, v):
                return s, orient
    return None


def is_noncrossing(p: Pattern | str) -> NoncrossingResult:
    """Check the four conditions in order; the reason names the first failure."""
    w = as_letters(p)
    if set(w) != set(ALPHABET):
        return NoncrossingResult(False, "i", "pattern must contain all of b, c, d")
    if not _cyclically_proper(w):
        return NoncrossingResult(False, "ii", "pattern has two consecutive identical letters")
    if _is_bcd_power(w):
        return NoncrossingResult(False, "iii", "pattern is (bcd)^n up to rotation and inversion")
    if decompose_AZ(w) is None:
        return NoncrossingResult(False, "iv", "no (AZ)^n structure, so two rotations cross")
    wit = crossing_witness(w)
    if wit is not None:
        s, orient = wit
        return NoncrossingResult(False, "iv", f"the {orient} rotation by {s} crosses the base cycle")
    return NoncrossingResult(True, None, "non-crossing")


def _palindrome(z: str) -> bool:
    return z == z[::-1]


def decompose_AZ(p: Pattern | str) -> PatternDecomposition | None:
    """Write the pattern as ``(AZ)^n`` up to rotation and inversion.

    ``A`` has the dominant colour between the two other colours, ``Z`` is a
    palindrome beginning and ending with the dominant colour, and ``n >= 2``.
    Among several decompositions the one with the largest ``n`` wins, then
    the least ``(A, Z)``; ``A`` is oriented so its first letter is the smaller.
    """
    w = as_letters(p)
    L = len(w)
    if L % 2:
        return None
    best = None
    for parity in (0, 1):
        dom = set(w[parity::2])
        if len(dom) != 1:
            continue
        d = dom.pop()
        for v in set(rotations(w) + rotations(w[::-1])):
            for n in range(L // 4, 1, -1):
                if L % n:
                    continue
                period = v[: L // n]
                if period * n != v:
                    continue
                a, z = period[:3], period[3:]
                if a[1] != d or a[0] == d or a[2] == d or a[0] == a[2]:
                    continue
                if not z or z[0] != d or z[-1] != d or not _palindrome(z):
                    continue
                if a[0] > a[2]:
                    a = a[::-1]
                cand = (-n, a, z)
                if best is None or cand < best[0]:
                    best = (cand, PatternDecomposition(d, a, z, n))
                break
    return None if best is None else best[1]


def is_regular(p: Pattern | str) -> bool:
    """Whether the pattern is ``(dc(bc)^m)^n``, ``n >= 2``, up to rotation, inversion and colour renaming."""
    w = as_letters(p)
    for perm in itertools.permutations(ALPHABET):
        table = str.maketrans(ALPHABET, "".join(perm))
        v = w.translate(table)
        for m in range(1, len(v)):
            unit = "dc" + "bc" * m
            if len(unit) > len(v) // 2:
                break
            if len(v) % len(unit) == 0 and v in (unit * (len(v) // len(unit)) * 2):
                return True
    return False


def regular_pattern(m: int, n: int) -> str:
    """The regular pattern ``(dc(bc)^m)^n``."""
    if m < 1 or n < 2:
        raise ValueError("regular patterns need m >= 1 and n >= 2")
    return ("dc" + "bc" * m) * n


@cache
def _necklaces(length: int) -> tuple[str, ...]:
    out = []
    for first in ALPHABET:
        stack = [first]
        while stack:
            w = stack.pop()
            if len(w) == length:
                if w[-1] != w[0] and canonical(w) == w:
                    out.append(w)
                continue
            for x in reversed(ALPHABET):
                if x != w[-1]:
                    stack.append(w + x)
    return tuple(sorted(out))


def enumerate_noncrossing(max_len: int, regular: bool | None = None) -> list[str]:
    """All non-crossing patterns of length at most ``max_len`` in canonical form, sorted.

    ``regular`` restricts to regular (True) or non-regular (False) patterns.
    """
    if max_len < 4:
        raise ValueError("patterns shorter than 4 letters cannot be non-crossing")
    out = []
    for length in range(4, max_len + 1):
        for w in _necklaces(length):
            if is_noncrossing(w) and (regular is None or is_regular(w) == regular):
                out.append(w)
    return sorted(out, key=lambda s: (len(s), s))
