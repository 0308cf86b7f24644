"""Exact arithmetic core: cyclotomic integers and sparse Laurent polynomials.

Two value types are provided.  CycNumber is an element of Z[zeta_m], stored as
the unique residue modulo the m-th cyclotomic polynomial.  LaurentPoly is a
sparse Laurent polynomial in one or two named variables whose exponents live
in (1/2)*Z: every exponent is stored doubled, so a stored integer e means the
mathematical exponent e/2.  A polynomial has either integer coefficients
(order None) or coefficients in a single ring Z[zeta_m] (order m); mixing two
cyclotomic orders is an error, lifting is always explicit via with_order().

All values are immutable and all operations are pure.  Results are reduced to
a canonical form: no zero coefficients, terms sorted by exponent vector,
cyclotomic residues fully reduced.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union


class InexactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


# ---------------------------------------------------------------------------
# dense integer polynomials (internal, used only for cyclotomic reduction)
# ---------------------------------------------------------------------------


def _dense_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _dense_exact_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of dense integer polynomials (constant term first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        coeff, rem = divmod(num[i + len(den) - 1], den[-1])
        if rem:
            raise InexactDivisionError("leading coefficient does not divide")
        out[i] = coeff
        for j, d in enumerate(den):
            num[i + j] -= coeff * d
    if any(num):
        raise InexactDivisionError("nonzero remainder")
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    """Dense coefficients (constant term first) of the m-th cyclotomic polynomial.

    Computed by exact division of t**m - 1 by the product of the cyclotomic
    polynomials of the proper divisors of m.
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _dense_exact_div(poly, list(cyclotomic_coeffs(d)))
    return tuple(poly)


def euler_phi(m: int) -> int:
    """Degree of the m-th cyclotomic polynomial."""
    return len(cyclotomic_coeffs(m)) - 1


@functools.lru_cache(maxsize=None)
def _power_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e is the residue of zeta_m**e in the basis 1, zeta, ..., zeta**(phi-1)."""
    phi_coeffs = cyclotomic_coeffs(m)
    deg = len(phi_coeffs) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi_coeffs[i]
    return tuple(rows)


# ---------------------------------------------------------------------------
# cyclotomic integers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycNumber:
    """An element of Z[zeta_m], reduced modulo the m-th cyclotomic polynomial.

    `coeffs` has length phi(m) and lists the coordinates on the power basis
    1, zeta, ..., zeta**(phi(m)-1).  Equality against another CycNumber of a
    different order compares the canonical images in the compositum
    (zeta_d -> zeta_lcm**(lcm/d)); equality against an int compares with the
    rational-integer value when there is one.
    """

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != euler_phi(self.order):
            raise ValueError(
                f"order {self.order} needs {euler_phi(self.order)} coefficients, "
                f"got {len(self.coeffs)}"
            )

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(order: int) -> CycNumber:
        return CycNumber(order, (0,) * euler_phi(order))

    @staticmethod
    def from_int(order: int, n: int) -> CycNumber:
        return CycNumber(order, (n,) + (0,) * (euler_phi(order) - 1))

    @staticmethod
    def from_powers(order: int, powers: Mapping[int, int] | Iterable[tuple[int, int]]) -> CycNumber:
        """Sum of c * zeta_order**e over the given (e, c) pairs; e may be any integer."""
        items = powers.items() if isinstance(powers, Mapping) else powers
        rows = _power_rows(order)
        acc = [0] * euler_phi(order)
        for e, c in items:
            if c == 0:
                continue
            row = rows[e % order]
            for i, r in enumerate(row):
                if r:
                    acc[i] += c * r
        return CycNumber(order, tuple(acc))

    @staticmethod
    def root(order: int, k: int = 1) -> CycNumber:
        """zeta_order**k."""
        return CycNumber.from_powers(order, {k: 1})

    # -- ring structure -----------------------------------------------------

    def _coerce(self, other: Union[int, "CycNumber"]) -> "CycNumber":
        if isinstance(other, int):
            return CycNumber.from_int(self.order, other)
        if isinstance(other, CycNumber):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}; "
                    "embed explicitly"
                )
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union[int, "CycNumber"]) -> "CycNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycNumber(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: Union[int, "CycNumber"]) -> "CycNumber":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Union[int, "CycNumber"]) -> "CycNumber":
        return (-self) + other

    def __neg__(self) -> "CycNumber":
        return CycNumber(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Union[int, "CycNumber"]) -> "CycNumber":
        if isinstance(other, int):
            return CycNumber(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        phi = len(self.coeffs)
        conv = [0] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        return CycNumber.from_powers(self.order, enumerate(conv))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycNumber":
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNumber.from_int(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and conversions -----------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def embed(self, order: int) -> "CycNumber":
        """Image under zeta_d -> zeta_order**(order/d); requires d | order."""
        if order % self.order:
            raise ValueError(f"order {self.order} does not divide {order}")
        if order == self.order:
            return self
        step = order // self.order
        return CycNumber.from_powers(order, ((i * step, c) for i, c in enumerate(self.coeffs)))

    def galois(self, k: int) -> "CycNumber":
        """Image under zeta -> zeta**k; requires gcd(k, order) == 1."""
        if math.gcd(k, self.order) != 1:
            raise ValueError(f"{k} is not invertible modulo {self.order}")
        return CycNumber.from_powers(self.order, ((i * k, c) for i, c in enumerate(self.coeffs)))

    def exact_div(self, other: Union[int, "CycNumber"]) -> "CycNumber":
        """self / other when the quotient lies in Z[zeta]; raises otherwise."""
        if isinstance(other, int):
            other = CycNumber.from_int(self.order, other)
        if other.order != self.order:
            raise ValueError("cyclotomic order mismatch")
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Z[zeta]")
        if other.is_integer():
            d = other.as_int()
            quots = []
            for a in self.coeffs:
                q, r = divmod(a, d)
                if r:
                    raise InexactDivisionError(f"{self} is not divisible by {d}")
                quots.append(q)
            return CycNumber(self.order, tuple(quots))
        phi = len(self.coeffs)
        cols = [(other * CycNumber.root(self.order, j)).coeffs for j in range(phi)]
        # solve sum_j x_j * cols[j] = self over Q, then check integrality
        mat = [[Fraction(cols[j][i]) for j in range(phi)] + [Fraction(self.coeffs[i])]
               for i in range(phi)]
        for col in range(phi):
            pivot = next((r for r in range(col, phi) if mat[r][col]), None)
            if pivot is None:
                raise InexactDivisionError("no quotient exists")
            mat[col], mat[pivot] = mat[pivot], mat[col]
            pv = mat[col][col]
            mat[col] = [v / pv for v in mat[col]]
            for r in range(phi):
                if r != col and mat[r][col]:
                    f = mat[r][col]
                    mat[r] = [v - f * w for v, w in zip(mat[r], mat[col])]
        out = []
        for r in range(phi):
            v = mat[r][phi]
            if v.denominator != 1:
                raise InexactDivisionError(f"{self} is not divisible by {other}")
            out.append(int(v))
        return CycNumber(self.order, tuple(out))

    def inverse(self) -> "CycNumber":
        return CycNumber.from_int(self.order, 1).exact_div(self)

    # -- equality and rendering ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.is_integer() and self.coeffs[0] == other
        if isinstance(other, CycNumber):
            if self.order == other.order:
                return self.coeffs == other.coeffs
            m = math.lcm(self.order, other.order)
            return self.embed(m).coeffs == other.embed(m).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_integer():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def render(self) -> str:
        """Deterministic text form; the generator is written z{order}."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                gen = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                body = gen if abs(c) == 1 else f"{abs(c)}*{gen}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CycNumber({self.order}, {self.render()!r})"

    # -- serialization --------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json_obj(obj: Mapping) -> "CycNumber":
        return CycNumber(int(obj["order"]), tuple(int(c) for c in obj["coeffs"]))


def zeta(order: int, k: int = 1) -> CycNumber:
    """zeta_order**k, the standard primitive root when k = 1."""
    return CycNumber.root(order, k)


Coeff = Union[int, CycNumber]


def _coeff_is_zero(c: Coeff) -> bool:
    return c == 0 if isinstance(c, int) else c.is_zero()


def _coeff_pow(c: Coeff, k: int) -> Coeff:
    if isinstance(c, int):
        if c == 1:
            return 1
        if c == -1:
            return -1 if k % 2 else 1
        if k < 0:
            raise ValueError(f"{c} is not a unit; cannot raise to {k}")
        return c**k
    return c**k


def _coeff_exact_div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{a} is not divisible by {b}")
        return q
    if isinstance(a, int):
        a = CycNumber.from_int(b.order, a)  # type: ignore[union-attr]
    return a.exact_div(b)


def _combine_orders(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise ValueError(f"cyclotomic order mismatch: {a} vs {b}; lift with with_order()")


# ---------------------------------------------------------------------------
# sparse Laurent polynomials with doubled exponents
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """Sparse Laurent polynomial; stored exponent e means actual exponent e/2.

    `terms` maps exponent vectors (one doubled integer per variable) to
    nonzero coefficients and is kept sorted lexicographically.  `order` is the
    cyclotomic order of the coefficients, or None for integer coefficients.
    """

    variables: tuple[str, ...]
    terms: tuple[tuple[tuple[int, ...], Coeff], ...]
    order: Optional[int] = None

    # -- construction --------------------------------------------------------

    @staticmethod
    def make(
        variables: Iterable[str],
        terms: Mapping[tuple[int, ...], Coeff] | Iterable[tuple[tuple[int, ...], Coeff]],
        order: Optional[int] = None,
    ) -> "LaurentPoly":
        vs = tuple(variables)
        if not 1 <= len(vs) <= 2 or len(set(vs)) != len(vs):
            raise ValueError(f"need one or two distinct variables, got {vs!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        resolved = order
        acc: dict[tuple[int, ...], Coeff] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vs):
                raise ValueError(f"exponent vector {exps} does not match {vs}")
            if isinstance(c, CycNumber):
                if resolved is None:
                    resolved = c.order
                elif c.order != resolved:
                    raise ValueError(
                        f"mixed cyclotomic orders {c.order} and {resolved}; embed explicitly"
                    )
            if exps in acc:
                acc[exps] = acc[exps] + c  # type: ignore[operator]
            else:
                acc[exps] = c
        norm: dict[tuple[int, ...], Coeff] = {}
        for exps, c in acc.items():
            if resolved is not None and isinstance(c, int):
                c = CycNumber.from_int(resolved, c)
            if not _coeff_is_zero(c):
                norm[exps] = c
        return LaurentPoly(vs, tuple(sorted(norm.items())), resolved)

    @staticmethod
    def zero(variables: Iterable[str], order: Optional[int] = None) -> "LaurentPoly":
        return LaurentPoly.make(variables, {}, order)

    @staticmethod
    def const(variables: Iterable[str], c: Coeff) -> "LaurentPoly":
        vs = tuple(variables)
        return LaurentPoly.make(vs, {(0,) * len(vs): c})

    @staticmethod
    def term(variables: Iterable[str], exps2: tuple[int, ...], c: Coeff = 1) -> "LaurentPoly":
        return LaurentPoly.make(variables, {tuple(exps2): c})

    @staticmethod
    def univar(name: str, terms: Mapping[int, Coeff], order: Optional[int] = None) -> "LaurentPoly":
        """Univariate constructor; keys are doubled exponents."""
        return LaurentPoly.make((name,), {(e,): c for e, c in terms.items()}, order)

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def term_dict(self) -> dict[tuple[int, ...], Coeff]:
        return dict(self.terms)

    def coefficient(self, exps2: tuple[int, ...]) -> Coeff:
        for e, c in self.terms:
            if e == exps2:
                return c
        return 0 if self.order is None else CycNumber.zero(self.order)

    def as_scalar(self) -> Coeff:
        """Value of a constant polynomial."""
        if self.is_zero():
            return 0 if self.order is None else CycNumber.zero(self.order)
        if len(self.terms) == 1 and not any(self.terms[0][0]):
            return self.terms[0][1]
        raise ValueError(f"{self!r} is not constant")

    def _var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"no variable {name!r} in {self.variables}") from None

    def min_exp2(self, name: str) -> int:
        i = self._var_index(name)
        if self.is_zero():
            raise ValueError("zero polynomial has no exponents")
        return min(e[i] for e, _ in self.terms)

    def max_exp2(self, name: str) -> int:
        i = self._var_index(name)
        if self.is_zero():
            raise ValueError("zero polynomial has no exponents")
        return max(e[i] for e, _ in self.terms)

    # -- ring structure --------------------------------------------------------

    def _wrap_scalar(self, c: Coeff) -> "LaurentPoly":
        return LaurentPoly.const(self.variables, c)

    def __add__(self, other: Union[Coeff, "LaurentPoly"]) -> "LaurentPoly":
        if isinstance(other, (int, CycNumber)):
            other = self._wrap_scalar(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
        order = _combine_orders(self.order, other.order)
        acc = dict(self.terms)
        for exps, c in other.terms:
            acc[exps] = acc[exps] + c if exps in acc else c  # type: ignore[operator]
        return LaurentPoly.make(self.variables, acc, order)

    __radd__ = __add__

    def __sub__(self, other: Union[Coeff, "LaurentPoly"]) -> "LaurentPoly":
        return self + (-other if isinstance(other, (int, CycNumber, LaurentPoly)) else other)

    def __rsub__(self, other: Union[Coeff, "LaurentPoly"]) -> "LaurentPoly":
        return (-self) + other

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.variables, tuple((e, -c) for e, c in self.terms), self.order)

    def __mul__(self, other: Union[Coeff, "LaurentPoly"]) -> "LaurentPoly":
        if isinstance(other, (int, CycNumber)):
            if _coeff_is_zero(other):
                order = self.order
                if isinstance(other, CycNumber):
                    order = _combine_orders(order, other.order)
                return LaurentPoly.zero(self.variables, order)
            return LaurentPoly.make(
                self.variables, {e: c * other for e, c in self.terms}, None
            )
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
        order = _combine_orders(self.order, other.order)
        acc: dict[tuple[int, ...], Coeff] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                acc[key] = acc[key] + prod if key in acc else prod  # type: ignore[operator]
        return LaurentPoly.make(self.variables, acc, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = LaurentPoly.const(self.variables, 1)
        if self.order is not None:
            result = result.with_order(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- equality ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, CycNumber)):
            if self.is_zero():
                return _coeff_is_zero(other)
            if len(self.terms) != 1 or any(self.terms[0][0]):
                return False
            return self.terms[0][1] == other
        if isinstance(other, LaurentPoly):
            if self.variables != other.variables or len(self.terms) != len(other.terms):
                return False
            return all(
                e1 == e2 and c1 == c2
                for (e1, c1), (e2, c2) in zip(self.terms, other.terms)
            )
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- coefficient-domain maps -------------------------------------------------

    def with_order(self, order: int) -> "LaurentPoly":
        """Lift all coefficients into Z[zeta_order]; existing orders must divide it."""
        acc: dict[tuple[int, ...], Coeff] = {}
        for e, c in self.terms:
            acc[e] = c.embed(order) if isinstance(c, CycNumber) else CycNumber.from_int(order, c)
        return LaurentPoly.make(self.variables, acc, order)

    def galois(self, k: int) -> "LaurentPoly":
        """Apply zeta -> zeta**k to every coefficient."""
        return LaurentPoly.make(
            self.variables,
            {e: (c.galois(k) if isinstance(c, CycNumber) else c) for e, c in self.terms},
            self.order,
        )

    # -- substitution and evaluation ----------------------------------------------

    def substitute(
        self,
        name: str,
        *,
        coeff: Coeff = 1,
        new_var: Optional[str] = None,
        exp2: int = 0,
    ) -> "LaurentPoly":
        """Replace the variable `name` by the monomial coeff * new_var**(exp2/2).

        With new_var None (and exp2 0) the image is the constant `coeff`; the
        polynomial must then have another variable left.  Exponent arithmetic
        must stay in (1/2)*Z and coefficient powers must stay integral.
        """
        idx = self._var_index(name)
        others = tuple(v for i, v in enumerate(self.variables) if i != idx)
        if new_var is None:
            if exp2:
                raise ValueError("constant image cannot carry an exponent")
            if not others:
                raise ValueError("constant substitution would leave no variables; use evaluate()")
            new_vars = others
            tgt = None
        elif new_var == name:
            new_vars = self.variables
            tgt = idx
        elif new_var in others:
            new_vars = others
            tgt = others.index(new_var)
        else:
            new_vars = tuple(new_var if i == idx else v for i, v in enumerate(self.variables))
            tgt = idx
        order = self.order
        if isinstance(coeff, CycNumber):
            order = _combine_orders(order, coeff.order)
        acc: dict[tuple[int, ...], Coeff] = {}
        trivial_coeff = isinstance(coeff, int) and coeff == 1
        for exps, c in self.terms:
            e = exps[idx]
            if trivial_coeff:
                factor: Coeff = 1
            else:
                if e % 2:
                    raise ValueError(
                        f"half-integer exponent {e}/2 of {name!r} needs a square root "
                        "of the image coefficient"
                    )
                factor = _coeff_pow(coeff, e // 2)
            if exp2:
                num = exp2 * e
                if num % 2:
                    raise ValueError("substitution leaves the (1/2)Z exponent lattice")
                add = num // 2
            else:
                add = 0
            if new_vars == self.variables and tgt == idx:
                key = tuple(add if i == idx else v for i, v in enumerate(exps))
            else:
                base = [v for i, v in enumerate(exps) if i != idx]
                if tgt is not None:
                    if len(new_vars) == len(self.variables):
                        base.insert(idx, add)
                    else:
                        base[tgt] += add
                key = tuple(base)
            val = c if trivial_coeff else c * factor
            acc[key] = acc[key] + val if key in acc else val  # type: ignore[operator]
        return LaurentPoly.make(new_vars, acc, order)

    def evaluate(self, values: Mapping[str, Coeff]) -> Coeff:
        """Full evaluation; every variable exponent must be an integer.

        Negative exponents require the value to be a unit (an int +-1 or an
        invertible cyclotomic number such as a root of unity).
        """
        if set(values) != set(self.variables):
            raise ValueError(f"need values for exactly {self.variables}")
        acc: Coeff = 0
        for exps, c in self.terms:
            term: Coeff = c
            for i, v in enumerate(self.variables):
                e = exps[i]
                if e % 2:
                    raise ValueError(
                        f"half-integer exponent of {v!r}; use eval_at_root for root values"
                    )
                if e:
                    term = term * _coeff_pow(values[v], e // 2)
            acc = term + acc
        return acc

    # -- rendering and serialization ------------------------------------------------

    def render_text(self) -> str:
        """Deterministic text form: terms in descending exponent order."""
        if self.is_zero():
            return "0"
        parts = []
        for exps, c in sorted(self.terms, reverse=True):
            monos = []
            for v, e in zip(self.variables, exps):
                if e == 0:
                    continue
                if e % 2 == 0:
                    ee = e // 2
                    monos.append(v if ee == 1 else f"{v}^{ee}")
                else:
                    monos.append(f"{v}^({e}/2)")
            mono = "*".join(monos)
            if isinstance(c, CycNumber) and not c.is_integer():
                cs = f"({c.render()})"
                sign = "+"
            else:
                n = c if isinstance(c, int) else c.as_int()
                sign = "-" if n < 0 else "+"
                cs = str(abs(n))
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({'*'.join(self.variables)}: {self.render_text()!r})"

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.variables),
            "den": 2,
            "terms": [
                [list(exps), c if isinstance(c, int) else c.to_json_obj()]
                for exps, c in self.terms
            ],
        }

    @staticmethod
    def from_json_obj(obj: Mapping) -> "LaurentPoly":
        if obj.get("den") != 2:
            raise ValueError("unsupported exponent denominator")
        terms: dict[tuple[int, ...], Coeff] = {}
        for exps, c in obj["terms"]:
            coeff: Coeff = int(c) if isinstance(c, int) else CycNumber.from_json_obj(c)
            terms[tuple(int(e) for e in exps)] = coeff
        return LaurentPoly.make(tuple(obj["vars"]), terms)


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def cyclotomic_polynomial(m: int) -> LaurentPoly:
    """The m-th cyclotomic polynomial as a polynomial in t."""
    coeffs = cyclotomic_coeffs(m)
    return LaurentPoly.univar("t", {2 * i: c for i, c in enumerate(coeffs) if c})


def eval_at_root(
    f: LaurentPoly, m: int, k: int = 1, order: Optional[int] = None
) -> CycNumber:
    """Exact value of the univariate f at its variable = zeta_m**k.

    Half-integer exponents are realized through zeta_{2m}, so they force the
    result into order 2m (or any requested multiple); asking for an order that
    cannot hold the value is an error.
    """
    if len(f.variables) != 1:
        raise ValueError("eval_at_root needs a univariate polynomial")
    if m < 1:
        raise ValueError("root order must be >= 1")
    halves = any(e[0] % 2 for e, _ in f.terms)
    natural = 2 * m if halves else m
    target = natural if order is None else order
    if target % natural:
        raise ValueError(
            f"order {target} cannot hold the value: half-integer exponents need "
            f"the even lift of order {natural}"
        )
    acc = CycNumber.zero(target)
    for (e,), c in f.terms:
        num = k * e * target
        if num % (2 * m):
            raise ValueError("exponent does not land in the target ring")
        root = CycNumber.root(target, num // (2 * m))
        if isinstance(c, CycNumber):
            root = root * c.embed(target)
        else:
            root = root * c
        acc = acc + root
    return acc


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials; raises InexactDivisionError.

    The denominator must be constant or univariate in the numerator's single
    variable.
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    order = _combine_orders(num.order, den.order)
    if len(den.terms) == 1 and not any(den.terms[0][0]):
        d = den.terms[0][1]
        return LaurentPoly.make(
            num.variables, {e: _coeff_exact_div(c, d) for e, c in num.terms}, order
        )
    if len(num.variables) != 1 or num.variables != den.variables:
        raise ValueError("non-constant division needs matching univariate polynomials")
    if num.is_zero():
        return LaurentPoly.zero(num.variables, order)
    var = num.variables[0]
    shift = num.min_exp2(var) - den.min_exp2(var)
    rem = {e[0] - num.min_exp2(var): c for e, c in num.terms}
    dterms = sorted((e[0] - den.min_exp2(var), c) for e, c in den.terms)
    dlead_e, dlead_c = dterms[-1]
    quo: dict[int, Coeff] = {}
    while rem:
        rlead_e = max(rem)
        if rlead_e < dlead_e:
            raise InexactDivisionError("nonzero remainder in polynomial division")
        q = _coeff_exact_div(rem[rlead_e], dlead_c)
        qe = rlead_e - dlead_e
        quo[qe] = q
        for de, dc in dterms:
            key = de + qe
            val = rem.get(key, 0) - dc * q
            if _coeff_is_zero(val):
                rem.pop(key, None)
            else:
                rem[key] = val
    return LaurentPoly.make(num.variables, {(e + shift,): c for e, c in quo.items()}, order)
