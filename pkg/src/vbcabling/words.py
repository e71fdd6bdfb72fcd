"""Typed generator symbols and freely reduced words.

Words are the universal currency of the toolkit: every presentation,
conversion dictionary, homomorphism and oracle consumes and produces them.
A word is an immutable sequence of (symbol, exponent) letters with
exponent +1 or -1; free reduction is applied eagerly on construction, so
two words represent the same element of the ambient free group iff they
are equal as Python values.

Every symbol and every word carries a strand-count context ``n``.  The
context never changes the letters themselves: embedding a word of a
smaller group into a bigger one ("adding a trivial strand in the end") is
the explicit :func:`recontext` operation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

__all__ = [
    "GenSym",
    "Word",
    "WordError",
    "WordSyntaxError",
    "ContextError",
    "gen",
    "letter",
    "empty",
    "free_reduce",
    "mul",
    "inv",
    "power",
    "conj",
    "comm",
    "recontext",
    "parse_word",
    "format_word",
    "SIGMA",
    "RHO",
    "LAMBDA",
    "APURE",
    "ACAB",
    "BCAB",
    "CCAB",
    "XBASE",
    "VBASE",
]

SIGMA = "sigma"
RHO = "rho"
LAMBDA = "lambda"
APURE = "Apure"
ACAB = "acab"
BCAB = "bcab"
CCAB = "ccab"
XBASE = "xbase"
VBASE = "vbase"

# family -> (surface letter, arity)
_FAMILY_INFO = {
    SIGMA: ("s", 1),
    RHO: ("r", 1),
    LAMBDA: ("L", 2),
    APURE: ("A", 2),
    ACAB: ("a", 2),
    BCAB: ("b", 2),
    CCAB: ("c", 2),
    XBASE: ("x", 1),
    VBASE: ("v", 0),
}
_PREFIX_TO_FAMILY = {p: fam for fam, (p, _) in _FAMILY_INFO.items()}


class WordError(ValueError):
    """Base error for malformed symbols and words."""


class WordSyntaxError(WordError):
    """Raised by the parser; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ContextError(WordError):
    """Raised when operands live in different strand-count contexts."""


@dataclass(frozen=True, order=True)
class GenSym:
    """A typed generator symbol with its indices and strand context."""

    family: str
    indices: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.family not in _FAMILY_INFO:
            raise WordError(f"unknown symbol family {self.family!r}")
        _, arity = _FAMILY_INFO[self.family]
        if len(self.indices) != arity:
            raise WordError(
                f"{self.family} takes {arity} indices, got {self.indices}"
            )
        n = self.n
        if n < 1:
            raise WordError(f"context must be >= 1, got {n}")
        fam, ix = self.family, self.indices
        if fam in (SIGMA, RHO):
            (i,) = ix
            if not 1 <= i <= n - 1:
                raise WordError(f"{fam} index {i} out of range for n={n}")
        elif fam in (LAMBDA, APURE):
            i, j = ix
            if not (1 <= i <= n and 1 <= j <= n and i != j):
                raise WordError(f"{fam} indices {ix} out of range for n={n}")
            if fam == APURE and not i < j:
                raise WordError(f"Apure indices must satisfy i < j, got {ix}")
        elif fam in (ACAB, BCAB, CCAB):
            k, l = ix
            if not (k >= 1 and l >= 1 and k + l <= n):
                raise WordError(f"{fam} indices {ix} need k,l >= 1, k+l <= n={n}")
        elif fam == XBASE:
            (i,) = ix
            if not 1 <= i <= n:
                raise WordError(f"xbase index {i} out of range for n={n}")
        # VBASE has nothing to check beyond arity.

    def text(self) -> str:
        prefix, arity = _FAMILY_INFO[self.family]
        if arity == 0:
            return prefix
        return f"{prefix}[{','.join(str(i) for i in self.indices)}]"


def gen(family: str, *indices: int, n: int) -> GenSym:
    return GenSym(family, tuple(indices), n)


Letter = tuple[GenSym, int]


def _reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for sym, e in letters:
        if stack and stack[-1][0] == sym and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((sym, e))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word over typed generators, in context ``n``."""

    n: int
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self):
        for sym, e in self.letters:
            if e not in (1, -1):
                raise WordError(f"letter exponent must be +-1, got {e}")
            if sym.n != self.n:
                raise ContextError(
                    f"letter {sym.text()} has context {sym.n}, word has {self.n}"
                )
        object.__setattr__(self, "letters", _reduce_letters(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return mul(self, other)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def inverse(self) -> "Word":
        return inv(self)

    def families(self) -> set[str]:
        return {sym.family for sym, _ in self.letters}

    def __str__(self) -> str:
        return format_word(self)


def empty(n: int) -> Word:
    return Word(n)


def letter(sym: GenSym, e: int = 1) -> Word:
    return Word(sym.n, ((sym, e),))


def word_of(syms: Iterable[GenSym | Letter], n: int) -> Word:
    """Build a word from symbols (exponent +1) or (symbol, exponent) pairs."""
    letters: list[Letter] = []
    for item in syms:
        if isinstance(item, GenSym):
            letters.append((item, 1))
        else:
            letters.append(item)
    return Word(n, tuple(letters))


def free_reduce(w: Word) -> Word:
    """Identity on this representation: reduction is eager and idempotent."""
    return w


def mul(u: Word, v: Word) -> Word:
    if u.n != v.n:
        raise ContextError(f"cannot multiply words with contexts {u.n} and {v.n}")
    return Word(u.n, u.letters + v.letters)


def inv(w: Word) -> Word:
    return Word(w.n, tuple((sym, -e) for sym, e in reversed(w.letters)))


def power(w: Word, k: int) -> Word:
    if k < 0:
        return power(inv(w), -k)
    out = empty(w.n)
    for _ in range(k):
        out = mul(out, w)
    return out


def conj(a: Word, b: Word) -> Word:
    """a^b = b^-1 a b."""
    return mul(mul(inv(b), a), b)


def comm(a: Word, b: Word) -> Word:
    """[a, b] = a^-1 b^-1 a b."""
    return mul(mul(inv(a), inv(b)), mul(a, b))


def recontext(w: Word, n: int) -> Word:
    """Reinterpret ``w`` in a different strand context (same letters).

    Adding trivial strands at the end never touches letters; shrinking is
    allowed only while every letter stays in range.
    """
    letters = tuple(
        (GenSym(sym.family, sym.indices, n), e) for sym, e in w.letters
    )
    return Word(n, letters)


_TOKEN_RE = re.compile(
    r"(?P<fam>[srLAabcx])\[(?P<ix>-?\d+(?:,-?\d+)*)\](?:\^(?P<exp>-?\d+))?"
    r"|(?P<v>v)(?:\^(?P<vexp>-?\d+))?"
    r"|(?P<one>1)"
)


def parse_word(text: str, n: int) -> Word:
    """Parse the whitespace-separated word grammar.

    Tokens look like ``s[1]^2``, ``L[3,1]``, ``c[2,2]^-1`` or ``v``; the
    bare token ``1`` denotes the empty word.  Exponent 0 is a syntax
    error, as is any index outside the context ``n``.
    """
    letters: list[Letter] = []
    pos = 0
    length = len(text)
    while pos < length:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unrecognized token {text[pos:pos + 8]!r}", pos)
        if m.group("one"):
            pos = m.end()
            continue
        if m.group("v"):
            fam = VBASE
            indices: tuple[int, ...] = ()
            exp_text = m.group("vexp")
        else:
            fam = _PREFIX_TO_FAMILY[m.group("fam")]
            indices = tuple(int(s) for s in m.group("ix").split(","))
            exp_text = m.group("exp")
        exp = 1 if exp_text is None else int(exp_text)
        if exp == 0:
            raise WordSyntaxError("exponent 0 is not allowed", pos)
        try:
            sym = GenSym(fam, indices, n)
        except WordError as exc:
            raise WordSyntaxError(str(exc), pos) from exc
        sign = 1 if exp > 0 else -1
        letters.extend((sym, sign) for _ in range(abs(exp)))
        pos = m.end()
    return Word(n, tuple(letters))


def format_word(w: Word) -> str:
    """Render a word in the surface grammar; the empty word prints as ``1``."""
    if not w.letters:
        return "1"
    parts: list[str] = []
    i = 0
    letters = w.letters
    while i < len(letters):
        sym, e = letters[i]
        j = i
        while j + 1 < len(letters) and letters[j + 1] == (sym, e):
            j += 1
        count = (j - i + 1) * e
        parts.append(sym.text() if count == 1 else f"{sym.text()}^{count}")
        i = j + 1
    return " ".join(parts)
