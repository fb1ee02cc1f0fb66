"""Integer Laurent polynomials and the exponential map ε.

A polynomial carries a tuple of variable names and a dict from exponent
tuples to nonzero integer coefficients.  Operands over different variable
tuples are widened to the sorted union before combining.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .category import K0Vector
from .ktheory import SubgroupN
from .polygon import Arc

Exps = tuple[int, ...]


class LaurentPoly:
    __slots__ = ("variables", "terms", "_key")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[Exps, int] | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable in {self.variables}")
        clean = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent {exps} does not match {self.variables}")
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean
        self._key = None

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Exps, int]) -> LaurentPoly:
        # trusted internal constructor: aligned exponents, no zero coefficients
        self = object.__new__(cls)
        self.variables = variables
        self.terms = terms
        self._key = None
        return self

    @classmethod
    def constant(cls, c: int, variables: Iterable[str] = ()) -> LaurentPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> LaurentPoly:
        names = tuple(sorted(exps))
        return cls(names, {tuple(exps[v] for v in names): coeff})

    @classmethod
    def gens(cls, *names: str) -> tuple[LaurentPoly, ...]:
        return tuple(cls.monomial({v: 1}) for v in names)

    # normal form

    def key(self) -> frozenset:
        """Variable-order independent identity used for equality and hashing."""
        if self._key is None:
            self._key = frozenset(
                (frozenset((v, e) for v, e in zip(self.variables, exps) if e), c)
                for exps, c in self.terms.items()
            )
        return self._key

    def widen(self, variables: tuple[str, ...]) -> LaurentPoly:
        if variables == self.variables:
            return self
        missing = set(self.variables) - set(variables)
        for exps in self.terms:
            for v, e in zip(self.variables, exps):
                if v in missing and e:
                    raise ValueError(f"cannot drop variable {v} in use")
        pos = [self.variables.index(v) if v in self.variables else None for v in variables]
        terms = {
            tuple(0 if p is None else exps[p] for p in pos): c for exps, c in self.terms.items()
        }
        return LaurentPoly(variables, terms)

    def _align(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        if self.variables == other.variables:
            return self, other
        union = tuple(sorted(set(self.variables) | set(other.variables)))
        return self.widen(union), other.widen(union)

    @staticmethod
    def _coerce(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.constant(x)
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            c += terms.get(exps, 0)
            if c:
                terms[exps] = c
            else:
                del terms[exps]
        return LaurentPoly._raw(a.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        terms: dict[Exps, int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(map(int.__add__, e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly._raw(a.variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_unit_monomial:
                raise ValueError(f"only ±monomials have inverses, not {self}")
            ((exps, c),) = self.terms.items()
            return LaurentPoly(self.variables, {tuple(x * k for x in exps): c ** (-k)})
        out = LaurentPoly.constant(1, self.variables)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.is_unit_monomial:
            raise ValueError(f"division only by a unit monomial, not {other}")
        return self * other ** -1

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        if self.variables == other.variables:
            return self.terms == other.terms
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    # queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_unit_monomial(self) -> bool:
        return self.is_monomial and next(iter(self.terms.values())) in (1, -1)

    def constant_value(self) -> int | None:
        """The integer value if the polynomial is constant, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            ((exps, c),) = self.terms.items()
            if not any(exps):
                return c
        return None

    def exponents(self) -> Exps:
        if not self.is_monomial:
            raise ValueError(f"{self} is not a monomial")
        return next(iter(self.terms))

    # serialisation

    def to_json(self) -> list[dict]:
        rows = []
        for exps, c in self.terms.items():
            named = {v: e for v, e in zip(self.variables, exps) if e}
            rows.append({"coeff": c, "exps": dict(sorted(named.items()))})
        rows.sort(key=lambda r: (sorted(r["exps"].items()), r["coeff"]))
        return rows

    @classmethod
    def from_json(cls, rows: list[dict]) -> LaurentPoly:
        names = tuple(sorted({v for r in rows for v in r["exps"]}))
        terms: dict[Exps, int] = {}
        for r in rows:
            e = tuple(int(r["exps"].get(v, 0)) for v in names)
            terms[e] = terms.get(e, 0) + int(r["coeff"])
        return cls(names, terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.variables
        sep = "" if all(len(v) == 1 for v in names) else "*"
        shift = [min(0, *(exps[k] for exps in self.terms)) for k in range(len(names))]
        numer = []
        for exps, c in self.terms.items():
            lifted = tuple(e - s for e, s in zip(exps, shift))
            numer.append((sum(lifted), _monomial_str(names, lifted, sep), c))
        numer.sort(key=lambda t: (t[0], t[1]))
        body = ""
        for _, mono, c in numer:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                chunk = str(mag)
            elif mag == 1:
                chunk = mono
            else:
                chunk = f"{mag}{sep}{mono}" if sep else f"{mag}{mono}"
            body += sign + chunk
        body = body[1:] if body[0] == "+" else body
        denom = _monomial_str(names, tuple(-s for s in shift), sep)
        if not denom:
            return body
        if len(numer) > 1:
            body = f"({body})"
        if sep and "*" in denom:
            denom = f"({denom})"
        return f"{body}/{denom}"


def _monomial_str(names: tuple[str, ...], exps: Exps, sep: str) -> str:
    parts = []
    for v, e in zip(names, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return sep.join(parts)


_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


def parse_monomial(text: str) -> LaurentPoly:
    """Parse monomial strings such as ``"u"``, ``"v*z^-1"`` or ``"1"``."""
    text = text.strip()
    if text == "1":
        return LaurentPoly.constant(1)
    exps: dict[str, int] = {}
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        exps[name] = exps.get(name, 0) + power
    exps = {v: e for v, e in exps.items() if e}
    return LaurentPoly.monomial(exps) if exps else LaurentPoly.constant(1)


def format_monomial(p: LaurentPoly) -> str:
    """Inverse of :func:`parse_monomial` for unit monomials with coefficient 1."""
    exps = p.exponents()
    if p.terms[exps] != 1:
        raise ValueError(f"{p} has a non-unit coefficient")
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(p.variables, exps) if e]
    return "*".join(parts) or "1"


class EpsilonError(ValueError):
    """ε does not vanish on some generator of N."""


@dataclass(frozen=True)
class EpsilonAssignment:
    """Monomials assigned to the basis arcs of T, over a common variable tuple."""

    basis: tuple[Arc, ...]
    variables: tuple[str, ...]
    exponents: tuple[Exps, ...]

    @classmethod
    def from_monomials(cls, basis: tuple[Arc, ...], monomials: Mapping[Arc, LaurentPoly]) -> EpsilonAssignment:
        extra = set(monomials) - set(basis)
        if extra:
            raise ValueError(f"ε given on arcs outside T: {sorted(map(str, extra))}")
        missing = [a for a in basis if a not in monomials]
        if missing:
            raise ValueError(f"ε missing for {', '.join(map(str, missing))}")
        names = tuple(sorted({v for m in monomials.values() for v in m.variables}))
        rows = []
        for a in basis:
            m = monomials[a]
            if not m.is_monomial or next(iter(m.terms.values())) != 1:
                raise ValueError(f"ε({a}) must be a monomial with coefficient 1, got {m}")
            rows.append(m.widen(names).exponents())
        return cls(tuple(basis), names, tuple(rows))

    def monomial(self, a: Arc) -> LaurentPoly:
        return LaurentPoly(self.variables, {self.exponents[self.basis.index(a)]: 1})

    def exps_of(self, x: K0Vector) -> Exps:
        out = [0] * len(self.variables)
        for k, row in zip(x, self.exponents):
            if k:
                for v, e in enumerate(row):
                    out[v] += k * e
        return tuple(out)


def epsilon_validate(eps: EpsilonAssignment, N: SubgroupN) -> None:
    """Raise :class:`EpsilonError` unless every generator of N maps to 1."""
    if eps.basis != N.basis:
        raise EpsilonError("ε and N are over different bases")
    for g in N.generators:
        if any(eps.exps_of(g)):
            from .category import format_k0

            raise EpsilonError(
                f"ε({format_k0(N.basis, g)}) = {epsilon_eval(eps, g)} ≠ 1"
            )


def epsilon_eval(eps: EpsilonAssignment, x: K0Vector) -> LaurentPoly:
    return LaurentPoly(eps.variables, {eps.exps_of(x): 1})


def default_epsilon(N: SubgroupN, prefix: str = "x") -> EpsilonAssignment:
    """An ε that is injective on the free part of K0^split(T)/N.

    Variables are ``x1, x2, ...``, one per free coordinate.
    """
    coords = N.free_coordinates()
    names = tuple(f"{prefix}{k + 1}" for k in range(len(coords)))
    rows = tuple(tuple(c[b] for c in coords) for b in range(len(N.basis)))
    return EpsilonAssignment(N.basis, names, rows)

