"""Sound semi-decision oracles for virtual braid words.

Two multiplicative invariants of VB_n words over σ/ρ letters:

* the permutation image (both σ_i and ρ_i map to the transposition
  (i, i+1)), whose kernel is by definition the virtual pure braid group;
* an extended Artin-type representation into automorphisms of the free
  group on x_1, …, x_n, v, with

      σ_i : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
      ρ_i : x_i -> v x_{i+1} v^-1,      x_{i+1} -> v^-1 x_i v

  and all other basis letters fixed.

Both are exact to compute, so differing images prove two words unequal in
VB_n.  Agreeing images certify equality only up to the representation's
kernel; that honest verdict is the RepEqual outcome below.

Free-group elements are encoded as tuples of nonzero ints: ±i for
x_i^{±1} (1 ≤ i ≤ n) and ±(n+1) for v^{±1}, always freely reduced.
Automorphisms compose left to right ("first letter acts first"), matching
the conjugation convention a^b = b^-1 a b used throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .garside import Permutation, _rmul_t
from .words import RHO, SIGMA, Word, WordError

__all__ = ["FreeAut", "SemiVerdict", "artin_rep", "perm_rep", "vb_semi_equal"]

Code = tuple[int, ...]


def _reduce_codes(codes: list[int]) -> Code:
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


@dataclass(frozen=True)
class FreeAut:
    """An endomorphism of the free group on x_1..x_n, v, given by images.

    ``images[i-1]`` is the image of x_i and ``images[n]`` the image of v.
    Generator automorphisms keep an explicit inverse witness around (see
    the admission tests), so everything composed from them is invertible.
    """

    n: int
    images: tuple[Code, ...]

    def __post_init__(self):
        if len(self.images) != self.n + 1:
            raise ValueError(f"need {self.n + 1} images, got {len(self.images)}")

    @staticmethod
    def identity(n: int) -> "FreeAut":
        return FreeAut(n, tuple((i,) for i in range(1, n + 2)))

    def apply(self, word: Code) -> Code:
        out: list[int] = []
        images = self.images
        for c in word:
            img = images[abs(c) - 1]
            seq = img if c > 0 else tuple(-y for y in reversed(img))
            for y in seq:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
        return tuple(out)

    def then(self, other: "FreeAut") -> "FreeAut":
        """Composite acting as self first, then other."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return FreeAut(self.n, tuple(other.apply(img) for img in self.images))

    def is_identity(self) -> bool:
        return all(img == (i,) for i, img in enumerate(self.images, start=1))

    def basis_name(self, i: int) -> str:
        return "v" if i == self.n + 1 else f"x[{i}]"


def _one_letter_images(n: int) -> list[Code]:
    return [(i,) for i in range(1, n + 2)]


@lru_cache(maxsize=None)
def _letter_aut(family: str, i: int, e: int, n: int) -> FreeAut:
    v = n + 1
    images = _one_letter_images(n)
    if family == SIGMA:
        if e > 0:
            images[i - 1] = (i, i + 1, -i)
            images[i] = (i,)
        else:
            images[i - 1] = (i + 1,)
            images[i] = (-(i + 1), i, i + 1)
    elif family == RHO:
        # ρ_i is an involution: the same images serve both exponents.
        images[i - 1] = (v, i + 1, -v)
        images[i] = (-v, i, v)
    else:
        raise WordError(f"no Artin-type action for family {family}")
    return FreeAut(n, tuple(images))


@lru_cache(maxsize=None)
def artin_rep(w: Word, n: int | None = None) -> FreeAut:
    """Image of a σ/ρ word under the extended Artin representation."""
    if n is None:
        n = w.n
    elif n != w.n:
        raise WordError(f"word has context {w.n}, oracle asked for n={n}")
    out = FreeAut.identity(n)
    for sym, e in w.letters:
        if sym.family not in (SIGMA, RHO):
            raise WordError(f"representation accepts sigma/rho letters only, got {sym.text()}")
        out = out.then(_letter_aut(sym.family, sym.indices[0], e, n))
    return out


def perm_rep(w: Word, n: int | None = None) -> Permutation:
    """Image under VB_n -> S_n; virtual pure braid words map to the identity."""
    if n is None:
        n = w.n
    perm = tuple(range(n))
    for sym, _ in w.letters:
        if sym.family not in (SIGMA, RHO):
            raise WordError(f"permutation oracle accepts sigma/rho letters only, got {sym.text()}")
        perm = _rmul_t(perm, sym.indices[0])
    return Permutation(tuple(x + 1 for x in perm))


class SemiVerdict(enum.Enum):
    DISTINCT = "Distinct"
    REP_EQUAL = "RepEqual"


def vb_semi_equal(u: Word, v: Word, n: int | None = None) -> SemiVerdict:
    """Sound semi-decision for equality of σ/ρ words in VB_n.

    Distinct is a proof of inequality; RepEqual only reports that the
    permutation and Artin-type images agree.  The cheap permutation
    filter runs first.
    """
    if n is None:
        n = u.n
    if u.n != v.n:
        raise WordError(f"contexts differ: {u.n} vs {v.n}")
    if perm_rep(u, n) != perm_rep(v, n):
        return SemiVerdict.DISTINCT
    if artin_rep(u, n) != artin_rep(v, n):
        return SemiVerdict.DISTINCT
    return SemiVerdict.REP_EQUAL
