"""Group presentations: parsing, serialisation and word substitution.

Text grammar::

    <g1, g2[, g3] | R1, R2 [; D1, ...]>

Relators before the semicolon are local (face) relators, those after it are
dividing relators.  A factor may carry ``^k`` with ``k >= 1`` or ``^-1``.
A relator written exactly as ``g^2`` marks ``g`` as an involution and is not
stored as a relator; the square of a non-involution is written ``gg``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .graph import ColoredGraph, ColorLabel, walk
from .words import Letter, Word, inverse, normalize, reduce_seam, word_text


class PresentationError(ValueError):
    """Base class for malformed presentations."""


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UndeclaredSymbolError(PresentationError):
    def __init__(self, symbol: str, position: int):
        super().__init__(f"undeclared generator {symbol!r} at position {position}")
        self.symbol = symbol
        self.position = position


class ExponentError(PresentationError):
    def __init__(self, exponent: int, position: int):
        super().__init__(f"exponent {exponent} is not allowed (use k >= 1 or -1) at position {position}")
        self.exponent = exponent
        self.position = position


@dataclass(frozen=True)
class Presentation:
    generators: tuple[ColorLabel, ...]
    relators: tuple[Word, ...] = ()
    dividing: tuple[Word, ...] = ()

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(g.symbol for g in self.generators)

    @property
    def involutions(self) -> frozenset[str]:
        return frozenset(g.symbol for g in self.generators if g.involution)

    @property
    def all_relators(self) -> tuple[Word, ...]:
        return self.relators + self.dividing

    @property
    def max_relator_length(self) -> int:
        return max((len(r) for r in self.all_relators), default=0)

    def is_involution(self, symbol: str) -> bool:
        return symbol in self.involutions

    def to_text(self) -> str:
        gens = ", ".join(self.symbols)
        parts = [f"{g.symbol}^2" for g in self.generators if g.involution]
        parts += [_relator_text(r) for r in self.relators]
        body = ", ".join(parts)
        if self.dividing:
            body = f"{body}; " if body else "; "
            body += ", ".join(_relator_text(r) for r in self.dividing)
        return f"<{gens} | {body}>"

    def __str__(self) -> str:
        return self.to_text()


def _relator_text(word: Word) -> str:
    if len(word) == 2 and word[0] == word[1]:
        s, e = word[0]
        return (s + s) if e == 1 else f"{s}^-1{s}^-1"
    return word_text(word)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.symbols: list[str] = []

    def error(self, message: str) -> PresentationSyntaxError:
        return PresentationSyntaxError(message, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def symbol(self) -> str:
        self.skip()
        start = self.pos
        if self.pos >= len(self.text) or not self.text[self.pos].isalpha():
            raise self.error("expected a generator symbol")
        self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos] == "*":
            self.pos += 1
        return self.text[start:self.pos]

    def exponent(self) -> int:
        self.skip()
        start = self.pos
        if self.peek() == "{":
            self.pos += 1
            value = self.integer()
            self.expect("}")
        else:
            value = self.integer()
        if value < 1 and value != -1:
            raise ExponentError(value, start)
        return value

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if digits in ("", "+", "-"):
            self.pos = start
            raise self.error("expected an integer exponent")
        return int(digits)

    def word(self, stop: str) -> tuple[list[Letter], bool]:
        """Parse a product of factors.  Returns the letters and whether it was a bare ``g^2``."""
        letters: list[Letter] = []
        factors = 0
        bare_square = False
        while True:
            ch = self.peek()
            if ch == "" or ch in stop:
                break
            factors += 1
            if ch == "(":
                self.pos += 1
                inner, _ = self.word(")")
                self.expect(")")
                atom = inner
                is_symbol = False
            elif ch == "1":
                self.pos += 1
                atom = []
                is_symbol = False
            else:
                at = self.pos
                s = self.symbol()
                if s not in self.symbols:
                    raise UndeclaredSymbolError(s, at)
                atom = [(s, 1)]
                is_symbol = True
            k = 1
            if self.peek() == "^":
                self.pos += 1
                k = self.exponent()
            bare_square = is_symbol and k == 2
            if k == -1:
                letters.extend((s, -e) for s, e in reversed(atom))
            else:
                letters.extend(atom * k)
        if factors == 0 and stop == ")":
            raise self.error("empty parenthesised group")
        return letters, bare_square and factors == 1

    def relator_list(self, stop: str) -> list[tuple[list[Letter], bool]]:
        out = []
        if self.peek() in stop:
            return out
        while True:
            start = self.pos
            w, square = self.word(",;>")
            if not w and not square:
                self.pos = start
                raise self.error("empty relator")
            out.append((w, square))
            if self.peek() == ",":
                self.pos += 1
                continue
            return out

    def presentation(self) -> Presentation:
        self.expect("<")
        while True:
            at = self.pos
            s = self.symbol()
            if s in self.symbols:
                self.pos = at
                raise self.error(f"generator {s!r} declared twice")
            self.symbols.append(s)
            if self.peek() == ",":
                self.pos += 1
                continue
            break
        self.expect("|")
        local = self.relator_list(";>")
        dividing = []
        if self.peek() == ";":
            self.pos += 1
            dividing = self.relator_list(">")
        self.expect(">")
        if self.peek():
            raise self.error("trailing characters")
        involutions = {w[0][0] for w, sq in local + dividing if sq}
        gens = tuple(ColorLabel(s, s in involutions) for s in self.symbols)

        def keep(items):
            return tuple(normalize(w, involutions) for w, sq in items if not sq)

        return Presentation(gens, keep(local), keep(dividing))


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


def parse_word(text: str, symbols: Sequence[str], involutions: frozenset[str] | set[str] = frozenset()) -> Word:
    """Parse a single word over the given symbols."""
    p = _Parser(text)
    p.symbols = list(symbols)
    letters, _ = p.word("")
    if p.peek():
        raise p.error("trailing characters")
    return normalize(letters, involutions)


def word_extension(
    p: Presentation,
    substitution: Mapping[str, Word | str],
    involutions: Sequence[str] = (),
) -> Presentation:
    """Replace generators by words, cancelling ``s s^-1`` only at the seams.

    Generators not mentioned are kept.  Target involutions are the kept source
    involutions together with ``involutions``.
    """
    target_inv = {g.symbol for g in p.generators if g.involution and g.symbol not in substitution} | set(involutions)
    images: dict[str, Word] = {}
    order: list[str] = []
    for g in p.generators:
        img = substitution.get(g.symbol, ((g.symbol, 1),))
        if isinstance(img, str):
            syms = sorted({ch for ch in img if ch.isalpha()})
            img = parse_word(img, syms, target_inv)
        images[g.symbol] = normalize(img, target_inv)
        for s, _ in images[g.symbol]:
            if s not in order:
                order.append(s)
    gens = tuple(ColorLabel(s, s in target_inv) for s in order)

    def image(word: Word) -> Word:
        out: Word = ()
        for s, e in word:
            piece = images[s] if e == 1 else inverse(images[s], target_inv)
            out = reduce_seam(out, piece, target_inv)
        return out

    rel = tuple(w for w in (image(r) for r in p.relators) if w)
    div = tuple(w for w in (image(r) for r in p.dividing) if w)
    return Presentation(gens, rel, div)


def is_simple_on(g: ColoredGraph, word: Word, start: int | None = None) -> bool:
    """Whether ``word`` traces a cycle through ``start`` that repeats no vertex."""
    v0 = g.root if start is None else start
    path = walk(g, v0, word)
    if path is None:
        raise ValueError("word leaves the known part of the graph")
    return len(word) > 0 and path[-1] == v0 and len(set(path[:-1])) == len(word)


def instantiate_entry(entry_id: str | int, params: Mapping[str, object] | None = None) -> Presentation:
    """Presentation of a catalogue row for concrete parameters."""
    from .catalog import instantiate_entry as _inst

    return _inst(entry_id, params or {})
