"""Convert series to conjectured infinite products by smallest-power stripping.

Given a series s with constant term 1, repeatedly locate the smallest
exponent e >= 1 whose coefficient c is nonzero and multiply by
(1-q^e)^c; that cancels the q^e term and leaves a residual whose first
nonzero exponent is strictly larger.  Recording a factor multiplicity
of -c per step yields a ProductForm that expands back to s exactly up
to the truncation order.  Everything past that order is conjecture, and
callers should label it as such.

``detect_progressions`` then looks for the kind of regularity a human
would spot in the stripped exponents: a single modulus M and a set of
residues that together generate exactly the observed exponent list.
"""

from dataclasses import dataclass
from operator import index as _as_int
from typing import NamedTuple

from . import fps
from .fps import QSeries


@dataclass(frozen=True)
class ProductForm:
    """A finite exact product prod_e (1-q^e)^(m_e).

    ``factors`` maps each exponent e >= 1 to a nonzero integer
    multiplicity; denominator factors carry negative multiplicity.
    """

    factors: dict[int, int]

    def __post_init__(self):
        clean = {}
        for e in sorted(self.factors):
            m = self.factors[e]
            if not isinstance(e, int) or e < 1:
                raise ValueError("factor exponent must be a positive integer, got %r" % (e,))
            if m:
                clean[e] = _as_int(m)
        object.__setattr__(self, "factors", clean)

    def exponents(self) -> list[int]:
        return list(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __bool__(self) -> bool:
        return bool(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        num, den = [], []
        for e, m in self.factors.items():
            base = "(1-q^%d)" % e if e > 1 else "(1-q)"
            mag = abs(m)
            piece = base if mag == 1 else "%s^%d" % (base, mag)
            (num if m > 0 else den).append(piece)
        if not den:
            return "".join(num)
        return "%s/(%s)" % ("".join(num) or "1", "".join(den))

    def to_json_dict(self) -> dict:
        return {"factors": [{"e": e, "m": m} for e, m in self.factors.items()]}


@dataclass(frozen=True)
class ResiduePattern:
    """Exponents form the union of residue classes r (mod modulus), all
    carrying one shared multiplicity."""

    modulus: int
    residues: frozenset[int]
    multiplicity: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1, got %d" % self.modulus)
        residues = frozenset(self.residues)
        if not residues:
            raise ValueError("residue set must be non-empty")
        if any(not 0 <= r < self.modulus for r in residues):
            raise ValueError("residues must lie in [0, %d)" % self.modulus)
        if self.multiplicity == 0:
            raise ValueError("multiplicity must be nonzero")
        object.__setattr__(self, "residues", residues)

    def product_form(self, order: int) -> ProductForm:
        """All exponents e <= order in the pattern's residue classes."""
        return ProductForm(
            {
                e: self.multiplicity
                for e in range(1, order + 1)
                if e % self.modulus in self.residues
            }
        )

    def __str__(self) -> str:
        pieces = "".join(
            "(1-q^(%dm+%d))" % (self.modulus, r) for r in sorted(self.residues)
        )
        mag = abs(self.multiplicity)
        if mag != 1:
            pieces = "(%s)^%d" % (pieces, mag)
        return "1/(%s)" % pieces if self.multiplicity < 0 else pieces

    def to_json_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "residues": sorted(self.residues),
            "multiplicity": self.multiplicity,
        }


class StripStep(NamedTuple):
    exponent: int
    coefficient: int
    residual: QSeries


def expand_product(pf: ProductForm, order: int) -> QSeries:
    """Truncated expansion of the product; factors beyond the order are skipped."""
    acc = fps.one(order)
    for e, m in pf.factors.items():
        if e <= order:
            acc = fps.pow_one_minus_qpow(acc, e, m)
    return acc


def strip_step(s: QSeries) -> StripStep:
    """One stripping move on a series with constant term 1.

    Finds the smallest e >= 1 with nonzero coefficient c and returns
    (e, c, s * (1-q^e)^c).  The residual has zero coefficients at every
    index from 1 through e.
    """
    if s.coeffs[0] != 1:
        raise ValueError("stripping requires constant term 1, got %s" % s.coeffs[0])
    e = next((k for k in range(1, s.order + 1) if s.coeffs[k]), None)
    if e is None:
        raise ValueError("series is 1 to its order; nothing left to strip")
    c = s.coeffs[e]
    return StripStep(e, c, fps.pow_one_minus_qpow(s, e, c))


def conjecture_product(s: QSeries) -> ProductForm:
    """Full stripping loop: a ProductForm that expands back to s exactly.

    Each recorded factor multiplicity is the negative of the stripped
    coefficient, so denominators of the classical identities come out
    with multiplicity -1.  Valid only up to s.order; beyond that the
    product is a conjecture.
    """
    factors: dict[int, int] = {}
    residual = s
    while not residual.is_one():
        e, c, residual = strip_step(residual)
        factors[e] = -c
    return ProductForm(factors)


def detect_progressions(pf: ProductForm, modulus_max: int) -> ResiduePattern | None:
    """Smallest modulus M <= modulus_max whose residue classes reproduce
    the exponents of pf exactly, or None.

    A modulus only qualifies if the union of its residue classes matches
    the exponent set slot for slot up to the largest exponent present,
    and every class is witnessed at least twice; a single isolated
    exponent never determines a progression.
    """
    if not pf:
        raise ValueError("cannot detect progressions in an empty product")
    if modulus_max < 1:
        raise ValueError("modulus bound must be >= 1, got %d" % modulus_max)
    mults = set(pf.factors.values())
    if len(mults) != 1:
        return None
    exponents = set(pf.factors)
    top = max(exponents)
    for modulus in range(1, modulus_max + 1):
        residues = {e % modulus for e in exponents}
        predicted = {e for e in range(1, top + 1) if e % modulus in residues}
        if predicted != exponents:
            continue
        witnesses = {r: 0 for r in residues}
        for e in exponents:
            witnesses[e % modulus] += 1
        if min(witnesses.values()) < 2:
            continue
        return ResiduePattern(modulus, frozenset(residues), mults.pop())
    return None
