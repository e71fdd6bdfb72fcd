"""Exact word problem for the classical braid group via Garside normal form.

A braid on ``n`` strands is written Δ^p · f_1 ⋯ f_k where Δ is the positive
half twist, each factor f_t is a permutation braid (a positive braid in
which every pair of strands crosses at most once, identified with its
permutation), no factor is trivial or Δ, and each adjacent pair is
left-weighted: the finishing set of f_t contains the starting set of
f_{t+1}.  This normal form is canonical, so word equality in B_n is
structural equality of normal forms.

Conventions: words multiply left to right, permutations compose left to
right ((p * q)(x) = q(p(x))), and σ_i maps to the transposition of
positions i, i+1.  Descent sets then come out as

    S(b) = { i : b(i) > b(i+1) }        (σ_i left-divides b)
    F(a) = { i : a⁻¹(i) > a⁻¹(i+1) }    (σ_i right-divides a)

and a pair (a, b) is left-weighted iff S(b) ⊆ F(a).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import SIGMA, Word, WordError

__all__ = ["Permutation", "GarsideNF", "garside_nf", "braid_equal", "perm_of_braid"]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(i: int, n: int) -> "Permutation":
        if not 1 <= i <= n - 1:
            raise ValueError(f"transposition index {i} out of range for n={n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: (self * other)(x) = other(self(x))."""
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def inv(self) -> "Permutation":
        out = [0] * self.n
        for pos, img in enumerate(self.images, start=1):
            out[img - 1] = pos
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(img == pos for pos, img in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


# Internal representation: permutations as 0-based tuples t with t[i] = image
# of position i.  All hot-path helpers below work on these raw tuples.

def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _w0(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _lmul_t(i: int, p: tuple[int, ...]) -> tuple[int, ...]:
    """t_i * p (t_i first): swap slots i-1, i (1-based i)."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _rmul_t(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    """p * t_i (t_i last): swap the values i-1, i wherever they sit."""
    q = list(p)
    a, b = q.index(i - 1), q.index(i)
    q[a], q[b] = q[b], q[a]
    return tuple(q)


@lru_cache(maxsize=None)
def _starting(p: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


@lru_cache(maxsize=None)
def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for pos, img in enumerate(p):
        out[img] = pos
    return tuple(out)


def _finishing(p: tuple[int, ...]) -> frozenset[int]:
    return _starting(_inv(p))


@lru_cache(maxsize=None)
def _renorm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Make the pair (a, b) left-weighted by moving head letters of b into a."""
    while True:
        need = _starting(b) - _finishing(a)
        if not need:
            return a, b
        i = min(need)
        a = _rmul_t(a, i)
        b = _lmul_t(i, b)


@lru_cache(maxsize=None)
def _tau(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by Δ: w0 * p * w0, mapping σ_i to σ_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


@lru_cache(maxsize=None)
def _neg_complement(i: int, n: int) -> tuple[int, ...]:
    """Permutation of the braid X with σ_i X = Δ, so σ_i^-1 = Δ^-1 X."""
    return _lmul_t(i, _w0(n))


def _push_factor(factors: list[tuple[int, ...]], g: tuple[int, ...], ident: tuple[int, ...]) -> None:
    """Append a permutation braid and restore left-weightedness by combing back."""
    if g == ident:
        return
    factors.append(g)
    k = len(factors) - 2
    while k >= 0:
        a, b = _renorm(factors[k], factors[k + 1])
        if a == factors[k]:
            break
        factors[k] = a
        if b == ident:
            del factors[k + 1]
        else:
            factors[k + 1] = b
        k -= 1


@dataclass(frozen=True)
class GarsideNF:
    """Left Garside normal form: Δ^inf followed by left-weighted factors."""

    n: int
    inf: int
    factors: tuple[Permutation, ...]

    def is_trivial(self) -> bool:
        return self.inf == 0 and not self.factors

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)


def _sigma_letters(w: Word) -> list[tuple[int, int]]:
    letters = []
    for sym, e in w.letters:
        if sym.family != SIGMA:
            raise WordError(f"braid solver accepts sigma letters only, got {sym.text()}")
        letters.append((sym.indices[0], e))
    return letters


@lru_cache(maxsize=None)
def garside_nf(w: Word, n: int | None = None) -> GarsideNF:
    """Compute the left Garside normal form of a word over σ letters."""
    if n is None:
        n = w.n
    elif n != w.n:
        raise WordError(f"word has context {w.n}, solver asked for n={n}")
    letters = _sigma_letters(w)

    # Pass 1: rewrite as Δ^p · (stream of permutation-braid factors).  Every
    # σ_i^-1 becomes Δ^-1 X_i; pulling each Δ^-1 to the front applies τ once
    # to everything before it, so a letter is τ-twisted once per negative
    # letter to its right.
    neg_after = 0
    twists = [0] * len(letters)
    for j in range(len(letters) - 1, -1, -1):
        twists[j] = neg_after
        if letters[j][1] < 0:
            neg_after += 1

    p = -neg_after
    ident = _identity(n)
    w0 = _w0(n)
    factors: list[tuple[int, ...]] = []
    for (i, e), tw in zip(letters, twists):
        idx = n - i if tw % 2 else i
        g = _lmul_t(idx, ident) if e > 0 else _neg_complement(idx, n)
        _push_factor(factors, g, ident)
        # Δ factors can only survive as a prefix of a left-weighted list.
        while factors and factors[0] == w0:
            factors.pop(0)
            p += 1

    while factors and factors[0] == w0:
        factors.pop(0)
        p += 1
    return GarsideNF(n, p, tuple(Permutation(tuple(x + 1 for x in f)) for f in factors))


def braid_equal(u: Word, v: Word, n: int | None = None) -> bool:
    """True iff the two σ-words are equal in the braid group."""
    if n is None:
        n = u.n
    if u.n != v.n:
        raise WordError(f"contexts differ: {u.n} vs {v.n}")
    return garside_nf(u, n) == garside_nf(v, n)


def perm_of_braid(w: Word, n: int | None = None) -> Permutation:
    """Image of a σ-word under B_n -> S_n."""
    if n is None:
        n = w.n
    perm = _identity(n)
    for i, _ in _sigma_letters(w):
        perm = _rmul_t(perm, i)
    return Permutation(tuple(x + 1 for x in perm))


def perm_braid_word(perm: Permutation) -> list[int]:
    """A reduced σ-word (list of indices) for a permutation braid."""
    p = tuple(x - 1 for x in perm.images)
    out: list[int] = []
    while True:
        s = _starting(p)
        if not s:
            return out
        i = min(s)
        out.append(i)
        p = _lmul_t(i, p)


def _nf_reference(w: Word, n: int) -> GarsideNF:
    """Sweep-to-fixpoint normalization; slow but obviously correct.

    Used by the test suite to cross-check the incremental combing in
    :func:`garside_nf`.
    """
    letters = _sigma_letters(w)
    neg_after = 0
    twists = [0] * len(letters)
    for j in range(len(letters) - 1, -1, -1):
        twists[j] = neg_after
        if letters[j][1] < 0:
            neg_after += 1
    p = -neg_after
    ident = _identity(n)
    factors: list[tuple[int, ...]] = []
    for (i, e), tw in zip(letters, twists):
        idx = n - i if tw % 2 else i
        factors.append(_lmul_t(idx, ident) if e > 0 else _neg_complement(idx, n))

    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            a, b = _renorm(factors[k], factors[k + 1])
            if (a, b) != (factors[k], factors[k + 1]):
                factors[k], factors[k + 1] = a, b
                changed = True
        pruned = [f for f in factors if f != ident]
        if len(pruned) != len(factors):
            factors = pruned
            changed = True

    w0 = _w0(n)
    while factors and factors[0] == w0:
        factors.pop(0)
        p += 1
    return GarsideNF(n, p, tuple(Permutation(tuple(x + 1 for x in f)) for f in factors))
