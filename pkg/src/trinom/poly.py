"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a plain exponent tuple; a polynomial maps monomials to
nonzero Fractions.  The canonical serialization order is descending by
(total degree, exponent tuple), which keeps printed and JSON output
deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

Monomial = tuple[int, ...]


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Monomial, Fraction]] = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    if len(mono) != nvars:
                        raise ValueError("monomial length does not match variable count")
                    clean[tuple(mono)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {tuple(0 for _ in range(nvars)): Fraction(value)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exps), {tuple(int(e) for e in exps): Fraction(coeff)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, Fraction(0)) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return Polynomial(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = monomial_mul(m1, m2)
                c = out.get(mono, Fraction(0)) + c1 * c2
                if c:
                    out[mono] = c
                else:
                    out.pop(mono, None)
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, factor) -> "Polynomial":
        f = Fraction(factor)
        if not f:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: c * f for m, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- substitutions (used by witness replay) ----------------------------

    def eliminate_var(self, var: int, replacement: "Polynomial") -> "Polynomial":
        """Substitute variable `var` by a polynomial in the remaining
        variables; the result lives in nvars-1 variables."""
        if replacement.nvars != self.nvars - 1:
            raise ValueError("replacement has wrong variable count")
        out = Polynomial.zero(self.nvars - 1)
        for mono, coeff in self.terms.items():
            rest = mono[:var] + mono[var + 1:]
            term = Polynomial.monomial(rest, coeff)
            e = mono[var]
            if e:
                term = term * (replacement ** e)
            out = out + term
        return out

    def scale_var(self, var: int, factor: Fraction) -> "Polynomial":
        """Substitute variable -> factor * variable."""
        f = Fraction(factor)
        return Polynomial(
            self.nvars,
            {m: c * f ** m[var] for m, c in self.terms.items()},
        )

    def remap_vars(self, new_index_of_old: Sequence[int], new_nvars: int) -> "Polynomial":
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            exps = [0] * new_nvars
            for old, e in enumerate(mono):
                if e:
                    exps[new_index_of_old[old]] = e
            out[tuple(exps)] = coeff
        return Polynomial(new_nvars, out)

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at polynomial images of the variables."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars if images else 0
        out = Polynomial.zero(nv)
        for mono, coeff in self.terms.items():
            term = Polynomial.constant(nv, coeff)
            for v, e in enumerate(mono):
                if e:
                    term = term * (images[v] ** e)
            out = out + term
        return out

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({self.format()})"

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(mono)
                if e
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")
