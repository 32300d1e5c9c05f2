"""Mod-2 cohomology ring of the n-dimensional Klein bottle.

The ring is Z2[R, V1, ..., V_{n-1}] / (R^2, Vi^2 + R*Vi) with every generator
in degree one.  The square-free monomials R^eps * V_S (eps in {0,1}, S a
subset of {1, ..., n-1}) form a basis, and the product of two basis monomials
is again a basis monomial or zero:

    (R^e1 V_S) * (R^e2 V_T) = R^(e1+e2+|S&T|) V_(S|T),

zero whenever the R-exponent exceeds one.  That closed form follows from
Vi^2 = R*Vi (each index shared by S and T contributes one R) and R^2 = 0.

A monomial is stored as a variable bit mask plus the R flag; a class is a
finite set of monomials (coefficients live in F2, so sets with symmetric
difference as addition).  Everything here is exact integer arithmetic.

The unique top-degree basis monomial is R * V1 ... V_{n-1}; evaluating the
coefficient of the top monomial gives the pairing used for duality checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapacityError

# Variable subsets sit in a machine word: bit i-1 holds V_i.
MAX_DIMENSION = 63


def _check_dimension(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"dimension must be an int, got {n!r}")
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if n > MAX_DIMENSION:
        raise CapacityError(
            f"dimension {n} exceeds the bit-mask limit of {MAX_DIMENSION}"
        )


# ---------------------------------------------------------------------------
# key-level arithmetic: a monomial of K_n is packed as (mask << 1) | eps.
# These run in inner loops (tensor products, long searches); keep them lean.

def _key_mul(k1: int, k2: int) -> int | None:
    """Product of two packed monomials; None when the product is zero."""
    e = (k1 & 1) + (k2 & 1) + ((k1 >> 1) & (k2 >> 1)).bit_count()
    if e >= 2:
        return None
    return ((k1 | k2) >> 1 << 1) | e


def _key_degree(key: int) -> int:
    return (key & 1) + (key >> 1).bit_count()


def _key_sq1(key: int) -> int | None:
    """Sq^1 of a packed basis monomial; None when it vanishes.

    Sq^1(V_{i1} ... V_{ir}) = R V_{i1} ... V_{ir} for odd r, and Sq^1 kills
    every monomial that already carries R or has evenly many variables.
    """
    if key & 1:
        return None
    if (key >> 1).bit_count() % 2 == 0:
        return None
    return key | 1


@dataclass(frozen=True)
class Monomial:
    """Basis monomial R^eps * V_S of H^*(K_n; Z2)."""

    n: int
    eps: int
    mask: int

    def __post_init__(self) -> None:
        _check_dimension(self.n)
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")
        if not 0 <= self.mask < (1 << (self.n - 1)):
            raise ValueError(
                f"variable mask {self.mask:#x} out of range for n={self.n}"
            )

    @property
    def degree(self) -> int:
        return self.eps + self.mask.bit_count()

    @property
    def variables(self) -> tuple[int, ...]:
        """Indices i with V_i present, ascending."""
        return tuple(i + 1 for i in range(self.n - 1) if (self.mask >> i) & 1)

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.degree, self.eps, self.variables)

    @property
    def key(self) -> int:
        return (self.mask << 1) | self.eps

    @classmethod
    def from_key(cls, n: int, key: int) -> "Monomial":
        return cls(n, key & 1, key >> 1)

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls(n, 0, 0)

    @classmethod
    def r(cls, n: int) -> "Monomial":
        return cls(n, 1, 0)

    @classmethod
    def v(cls, n: int, i: int) -> "Monomial":
        if not 1 <= i <= n - 1:
            raise ValueError(f"V_{i} does not exist for n={n}")
        return cls(n, 0, 1 << (i - 1))

    def text(self) -> str:
        parts = (["R"] if self.eps else []) + [f"V{i}" for i in self.variables]
        return "*".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"eps": self.eps, "vars": list(self.variables)}

    @classmethod
    def from_json(cls, n: int, obj: dict) -> "Monomial":
        mask = 0
        for i in obj["vars"]:
            if not 1 <= int(i) <= n - 1:
                raise ValueError(f"V_{i} does not exist for n={n}")
            mask |= 1 << (int(i) - 1)
        return cls(n, int(obj["eps"]), mask)


@dataclass(frozen=True)
class CohomologyClass:
    """An element of H^*(K_n; Z2): a set of basis monomials (F2 coefficients)."""

    n: int
    terms: frozenset[Monomial]

    def __post_init__(self) -> None:
        _check_dimension(self.n)
        for t in self.terms:
            if t.n != self.n:
                raise ValueError("monomial dimension mismatch")

    @classmethod
    def zero(cls, n: int) -> "CohomologyClass":
        return cls(n, frozenset())

    @classmethod
    def one(cls, n: int) -> "CohomologyClass":
        return cls(n, frozenset({Monomial.unit(n)}))

    @classmethod
    def r(cls, n: int) -> "CohomologyClass":
        return cls(n, frozenset({Monomial.r(n)}))

    @classmethod
    def v(cls, n: int, i: int) -> "CohomologyClass":
        return cls(n, frozenset({Monomial.v(n, i)}))

    @classmethod
    def from_monomials(cls, n: int, monomials) -> "CohomologyClass":
        acc: set[Monomial] = set()
        for m in monomials:
            acc.symmetric_difference_update({m})
        return cls(n, frozenset(acc))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Common degree of all terms; None for 0 or inhomogeneous classes."""
        degrees = {t.degree for t in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=Monomial.sort_key)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if self.n != other.n:
            raise ValueError("cannot add classes of different dimension")
        return CohomologyClass(self.n, self.terms ^ other.terms)

    def __mul__(self, other: "CohomologyClass") -> "CohomologyClass":
        return cup(self, other)

    def text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(m.text() for m in self.sorted_terms())

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [m.to_json() for m in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj: dict) -> "CohomologyClass":
        n = int(obj["n"])
        return cls.from_monomials(n, (Monomial.from_json(n, t) for t in obj["terms"]))


def basis(n: int, d: int) -> list[Monomial]:
    """Canonical basis of H^d(K_n; Z2), sorted by (degree, eps, variables).

    Size C(n-1, d) + C(n-1, d-1): the V-only monomials then the R-carrying
    ones.
    """
    _check_dimension(n)
    if d < 0 or d > n:
        return []
    out: list[Monomial] = []
    for eps in (0, 1):
        k = d - eps
        if not 0 <= k <= n - 1:
            continue
        for vs in combinations(range(1, n), k):
            mask = 0
            for i in vs:
                mask |= 1 << (i - 1)
            out.append(Monomial(n, eps, mask))
    return out


def cup(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """Cup product of two classes."""
    if a.n != b.n:
        raise ValueError("cannot multiply classes of different dimension")
    acc: set[int] = set()
    for ma in a.terms:
        ka = ma.key
        for mb in b.terms:
            k = _key_mul(ka, mb.key)
            if k is not None:
                acc.symmetric_difference_update({k})
    return CohomologyClass(a.n, frozenset(Monomial.from_key(a.n, k) for k in acc))


def sq(j: int, a: CohomologyClass) -> CohomologyClass:
    """Steenrod square Sq^j.

    On this ring Sq^0 is the identity, Sq^1 is determined by Sq^1(V_i) = R*V_i
    and the derivation rule (which collapses to the parity rule in _key_sq1),
    and Sq^j vanishes for j >= 2 because every indecomposable has degree one.
    """
    if j < 0:
        raise ValueError(f"Sq^{j} undefined")
    if j == 0:
        return a
    if j >= 2:
        return CohomologyClass.zero(a.n)
    acc: set[int] = set()
    for m in a.terms:
        k = _key_sq1(m.key)
        if k is not None:
            acc.symmetric_difference_update({k})
    return CohomologyClass(a.n, frozenset(Monomial.from_key(a.n, k) for k in acc))


def poincare_polynomial(n: int) -> list[int]:
    """Coefficient list [dim H^0, ..., dim H^n]."""
    _check_dimension(n)
    return [comb(n - 1, d) + (comb(n - 1, d - 1) if d else 0) for d in range(n + 1)]


def top_monomial(n: int) -> Monomial:
    """The unique basis monomial in degree n: R * V1 ... V_{n-1}."""
    _check_dimension(n)
    return Monomial(n, 1, (1 << (n - 1)) - 1)


def top_coefficient(a: CohomologyClass) -> int:
    """Coefficient (0 or 1) of the top monomial in a."""
    return 1 if top_monomial(a.n) in a.terms else 0


def cup_length(n: int) -> tuple[int, list[CohomologyClass]]:
    """Longest nonzero product of positive-degree classes, with a witness.

    Products of degree-one basis monomials stay monomials, and every
    positive-degree class is a sum of products of degree-one monomials, so a
    breadth-first search over monomial products of the n degree-one generators
    finds the exact maximum.  Returns (length, [factors]) where the factors
    multiply to a nonzero class.
    """
    _check_dimension(n)
    gens = basis(n, 1)
    # reachable product monomial -> factor chain (first hit wins; generators
    # are scanned in canonical order so the witness is deterministic)
    level: dict[int, tuple[int, ...]] = {g.key: (g.key,) for g in gens}
    best = dict(level)
    length = 1
    while True:
        nxt: dict[int, tuple[int, ...]] = {}
        for prod, chain in sorted(level.items()):
            for g in gens:
                k = _key_mul(prod, g.key)
                if k is not None and k not in nxt:
                    nxt[k] = chain + (g.key,)
        if not nxt:
            break
        level = nxt
        length += 1
        best = nxt
    witness_chain = best[min(best)]
    witness = [
        CohomologyClass(n, frozenset({Monomial.from_key(n, k)})) for k in witness_chain
    ]
    return length, witness


def duality_pairing(n: int, d: int) -> list[list[int]]:
    """Pairing matrix H^d x H^(n-d) -> F2 against the top monomial.

    Entry [a][b] is the top-monomial coefficient of basis(n, d)[a] *
    basis(n, n-d)[b].  Nonsingular in every degree (Poincare duality for a
    closed manifold).
    """
    _check_dimension(n)
    if d < 0 or d > n:
        raise ValueError(f"degree {d} out of range for n={n}")
    rows_b = basis(n, d)
    cols_b = basis(n, n - d)
    top = top_monomial(n).key
    out = []
    for ma in rows_b:
        row = []
        for mb in cols_b:
            row.append(1 if _key_mul(ma.key, mb.key) == top else 0)
        out.append(row)
    return out
