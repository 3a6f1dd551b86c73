"""Sparse multivariate polynomials over exact rationals.

Polynomials are stored as a map from exponent vectors (tuples of
non-negative ints, one slot per variable) to nonzero Fraction
coefficients.  The zero polynomial has an empty term map.  Every
operation returns a new polynomial in canonical form; nothing is
mutated after construction, so values can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ContractError, DimensionError

Mono = tuple  # exponent vector


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class MonomialOrder:
    """Total order on monomials, compatible with multiplication, 1 minimal.

    ``kind`` is one of ``"grevlex"``, ``"lex"`` or ``"block"``; block
    orders compare the leading ``split`` variables grevlex-first, so a
    block order with the eliminated variables in front is an
    elimination order.
    """

    __slots__ = ("kind", "split")

    def __init__(self, kind: str = "grevlex", split: int = 0):
        if kind not in ("grevlex", "lex", "block"):
            raise ContractError(f"unknown monomial order kind: {kind!r}")
        self.kind = kind
        self.split = split

    def key(self, mono: Mono):
        """Sort key; larger key = larger monomial."""
        if self.kind == "lex":
            return mono
        if self.kind == "grevlex":
            return (sum(mono), tuple(-e for e in reversed(mono)))
        head, tail = mono[: self.split], mono[self.split :]
        return (
            sum(head),
            tuple(-e for e in reversed(head)),
            sum(tail),
            tuple(-e for e in reversed(tail)),
        )

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', split={self.split})"
        return f"MonomialOrder({self.kind!r})"

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and (self.kind != "block" or self.split == other.split)
        )


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _graded_lex_key(mono: Mono):
    # deterministic term ordering used for serialization only
    return (sum(mono), mono)


class MultiPoly:
    """Immutable sparse polynomial in ``nvars`` variables over Q."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Mono, Fraction] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise DimensionError(
                        f"exponent vector {mono} does not match {nvars} variables"
                    )
                c = _as_fraction(c)
                if c != 0:
                    clean[tuple(mono)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "MultiPoly":
        c = _as_fraction(c)
        if c == 0:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise DimensionError(f"variable index {index} out of range for {nvars}")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: Fraction(1)})

    @classmethod
    def linear_form(cls, nvars: int, coeffs: Sequence, constant=0) -> "MultiPoly":
        """constant + sum(coeffs[i] * x_i)."""
        terms: dict[Mono, Fraction] = {}
        c0 = _as_fraction(constant)
        if c0 != 0:
            terms[(0,) * nvars] = c0
        for i, c in enumerate(coeffs):
            c = _as_fraction(c)
            if c != 0:
                mono = tuple(1 if j == i else 0 for j in range(nvars))
                terms[mono] = c
        return cls(nvars, terms)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ContractError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, index: int) -> int:
        if not self.terms:
            return -1
        return max(m[index] for m in self.terms)

    def degree_in_block(self, indices: Iterable[int]) -> int:
        idx = tuple(indices)
        if not self.terms:
            return -1
        return max(sum(m[i] for i in idx) for m in self.terms)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise DimensionError(
                f"variable counts differ: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.const(self.nvars, other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _as_fraction(other)
            if c == 0:
                return MultiPoly.zero(self.nvars)
            out = MultiPoly.__new__(MultiPoly)
            out.nvars = self.nvars
            out.terms = {m: v * c for m, v in self.terms.items()}
            return out
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[Mono, Fraction] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                s = terms.get(mono, 0) + ca * cb
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ContractError("negative power of a polynomial")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if self.is_constant():
                return self.constant_value() == _as_fraction(other)
            return False
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- substitution, derivatives ---------------------------------------

    def eval(self, point: Sequence) -> Fraction:
        """Total substitution at a rational point."""
        if len(point) != self.nvars:
            raise DimensionError(
                f"point has {len(point)} coordinates, polynomial has {self.nvars}"
            )
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(pt, mono):
                if e:
                    v *= x**e
            total += v
        return total

    def substitute(self, index: int, value) -> "MultiPoly":
        """Partial substitution x_index = value.

        The substituted variable is removed and later indices shift down.
        """
        if not 0 <= index < self.nvars:
            raise DimensionError(f"variable index {index} out of range")
        value = _as_fraction(value)
        terms: dict[Mono, Fraction] = {}
        for mono, c in self.terms.items():
            coeff = c * value ** mono[index]
            if coeff == 0:
                continue
            new_mono = mono[:index] + mono[index + 1 :]
            s = terms.get(new_mono, 0) + coeff
            if s:
                terms[new_mono] = s
            else:
                terms.pop(new_mono, None)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars - 1
        out.terms = terms
        return out

    def derivative(self, index: int) -> "MultiPoly":
        if not 0 <= index < self.nvars:
            raise DimensionError(f"variable index {index} out of range")
        terms: dict[Mono, Fraction] = {}
        for mono, c in self.terms.items():
            e = mono[index]
            if e == 0:
                continue
            new_mono = mono[:index] + (e - 1,) + mono[index + 1 :]
            terms[new_mono] = c * e
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    def extend(self, new_nvars: int, offset: int = 0) -> "MultiPoly":
        """Re-embed into a larger variable list, original vars shifted by offset."""
        if offset < 0 or offset + self.nvars > new_nvars:
            raise DimensionError("extension does not fit the new variable count")
        pad_left = (0,) * offset
        pad_right = (0,) * (new_nvars - offset - self.nvars)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = new_nvars
        out.terms = {pad_left + m + pad_right: c for m, c in self.terms.items()}
        return out

    # -- presentation ------------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order (stable across runs)."""
        return sorted(self.terms.items(), key=lambda t: _graded_lex_key(t[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [str(c)] if (c != 1 or sum(mono) == 0) else []
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(f"x{i+1}")
                elif e > 1:
                    factors.append(f"x{i+1}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)
