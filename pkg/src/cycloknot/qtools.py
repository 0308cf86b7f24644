"""q-combinatorics: q-integers, q-binomials, Pochhammer products, sigma
products and brace polynomials, at generic q and at roots of unity.

Polynomials at generic q live in the variable q; the bivariate products use
(x, q).  Values at a root of unity are CycNumber elements, or polynomials in
x over a cyclotomic ring for the specialized sigma products.  Everything is
exact; memoized results are immutable and shared.
"""

from __future__ import annotations

import functools
import math

from .exactring import CycNumber, LaurentPoly, eval_at_root, exact_div, zeta


def _q(e: int, c: int = 1) -> LaurentPoly:
    """Monomial c * q**e (integral exponent)."""
    return LaurentPoly.univar("q", {2 * e: c})


@functools.lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q**(n-1)."""
    if n < 0:
        raise ValueError(f"q-integer needs n >= 0, got {n}")
    return LaurentPoly.univar("q", {2 * j: 1 for j in range(n)})


@functools.lru_cache(maxsize=None)
def qfactorial(n: int) -> LaurentPoly:
    """[n]_q! = [n]_q [n-1]_q ... [1]_q."""
    if n < 0:
        raise ValueError(f"q-factorial needs n >= 0, got {n}")
    if n == 0:
        return LaurentPoly.univar("q", {0: 1})
    return qfactorial(n - 1) * qint(n)


@functools.lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n; k]_q via the Pascal recursion; 0 outside 0<=k<=n."""
    if n < 0:
        raise ValueError(f"q-binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return LaurentPoly.zero(("q",))
    if k == 0 or k == n:
        return LaurentPoly.univar("q", {0: 1})
    return qbinomial(n - 1, k - 1) + _q(k) * qbinomial(n - 1, k)


def qbinomial_by_division(n: int, k: int) -> LaurentPoly:
    """[n; k]_q as [n]_q! / ([k]_q! [n-k]_q!), by exact division."""
    if k < 0 or k > n:
        return LaurentPoly.zero(("q",))
    return exact_div(qfactorial(n), qfactorial(k) * qfactorial(n - k))


def qbinomial_balanced(n: int, k: int) -> LaurentPoly:
    """Balanced (quantum) binomial q**(-k(n-k)/2) [n; k]_q.

    Symmetric under q -> 1/q; built from quantum integers
    (q**(a/2) - q**(-a/2)) / (q**(1/2) - q**(-1/2)).  Evaluating it with
    eval_at_root(..., p) realizes q**(1/2) as zeta_2p.
    """
    shift = LaurentPoly.univar("q", {-k * (n - k): 1})
    return shift * qbinomial(n, k)


@functools.lru_cache(maxsize=None)
def qpochhammer(n: int) -> LaurentPoly:
    """(q; q)_n = (1-q)(1-q**2)...(1-q**n)."""
    if n < 0:
        raise ValueError(f"q-Pochhammer needs n >= 0, got {n}")
    if n == 0:
        return LaurentPoly.univar("q", {0: 1})
    return qpochhammer(n - 1) * (_q(0) - _q(n))


def qbinomial_at_root(n: int, k: int, p: int, root_exponent: int = 1) -> CycNumber:
    """[n; k] evaluated at q = zeta_p**root_exponent.

    At a primitive root the factorization [n + a*p; k + b*p] =
    [n mod p; k mod p] * binomial(a, b) reduces the computation to a small
    q-binomial and an ordinary binomial coefficient; non-primitive powers fall
    back to direct evaluation.
    """
    if p < 1:
        raise ValueError(f"root order must be >= 1, got {p}")
    if k < 0 or k > n:
        return CycNumber.zero(p)
    if math.gcd(root_exponent, p) == 1 and p > 1:
        a, n0 = divmod(n, p)
        b, k0 = divmod(k, p)
        small = eval_at_root(qbinomial(n0, k0), p, root_exponent)
        return small * math.comb(a, b)
    return eval_at_root(qbinomial(n, k), p, root_exponent)


@functools.lru_cache(maxsize=None)
def pochhammer_xq(n: int) -> LaurentPoly:
    """(xq; q)_n = prod_{i=1..n} (1 - x q**i), bivariate in (x, q)."""
    if n < 0:
        raise ValueError(f"Pochhammer length must be >= 0, got {n}")
    acc = LaurentPoly.const(("x", "q"), 1)
    for i in range(1, n + 1):
        acc = acc * LaurentPoly.make(("x", "q"), {(0, 0): 1, (2, 2 * i): -1})
    return acc


@functools.lru_cache(maxsize=None)
def pochhammer_pair(n: int) -> LaurentPoly:
    """(xq; q)_n (x**-1 q; q)_n, bivariate in (x, q)."""
    if n < 0:
        raise ValueError(f"Pochhammer length must be >= 0, got {n}")
    acc = pochhammer_xq(n)
    for i in range(1, n + 1):
        acc = acc * LaurentPoly.make(("x", "q"), {(0, 0): 1, (-2, 2 * i): -1})
    return acc


@functools.lru_cache(maxsize=None)
def sigma(m: int) -> LaurentPoly:
    """sigma_m(x, q) = prod_{i=1..m} (x + x**-1 - q**i - q**-i)."""
    if m < 0:
        raise ValueError(f"sigma index must be >= 0, got {m}")
    acc = LaurentPoly.const(("x", "q"), 1)
    for i in range(1, m + 1):
        acc = acc * LaurentPoly.make(
            ("x", "q"), {(2, 0): 1, (-2, 0): 1, (0, 2 * i): -1, (0, -2 * i): -1}
        )
    return acc


@functools.lru_cache(maxsize=None)
def sigma_at_root(m: int, p: int) -> LaurentPoly:
    """sigma_m(x, zeta_p) as a polynomial in x over Z[zeta_p]."""
    if m < 0 or p < 1:
        raise ValueError(f"need m >= 0 and p >= 1, got m={m}, p={p}")
    acc = LaurentPoly.univar("x", {0: CycNumber.from_int(p, 1)})
    for i in range(1, m + 1):
        acc = acc * LaurentPoly.univar(
            "x", {2: CycNumber.from_int(p, 1), -2: CycNumber.from_int(p, 1),
                  0: -(zeta(p, i) + zeta(p, -i))}
        )
    return acc


def brace(j: int, p: int, lam_coeff: int = 0, var: str = "u"):
    """{lam_coeff * lambda + j} in Z[zeta_2p], with u standing for e_{2p}**lambda.

    With lam_coeff = 0 this is the scalar zeta_2p**j - zeta_2p**(-j); otherwise
    it is the Laurent polynomial u**lam_coeff * zeta_2p**j -
    u**(-lam_coeff) * zeta_2p**(-j).
    """
    if lam_coeff == 0:
        return zeta(2 * p, j) - zeta(2 * p, -j)
    return LaurentPoly.univar(
        var, {2 * lam_coeff: zeta(2 * p, j), -2 * lam_coeff: -zeta(2 * p, -j)}
    )


def bracket_poly(m: int, p: int) -> LaurentPoly:
    """{z+m}...{z+1} {z}^2 {z-1}...{z-m} with v = e_{2p}**z kept symbolic.

    The result is returned as a Laurent polynomial in v; it is checked to be a
    monic polynomial of degree m+1 in w = v**2 + v**-2, which is an internal
    consistency requirement.
    """
    if not 0 <= m <= p - 1:
        raise ValueError(f"need 0 <= m <= p-1, got m={m}, p={p}")
    acc = brace(0, p, lam_coeff=1, var="v") ** 2
    for j in range(1, m + 1):
        acc = acc * brace(j, p, lam_coeff=1, var="v")
        acc = acc * brace(-j, p, lam_coeff=1, var="v")
    _check_monic_in_w(acc, m + 1)
    return acc


def _check_monic_in_w(f: LaurentPoly, degree: int) -> None:
    """Assert f = w**degree + lower order terms for w = v**2 + v**-2."""
    w = LaurentPoly.univar("v", {4: 1, -4: 1}).with_order(f.order)
    rem = f
    seen_degree = -1
    while not rem.is_zero():
        top = rem.max_exp2("v")
        if top % 4 or top < 0:
            raise ArithmeticError(f"not a polynomial in v^2 + v^-2: exponent {top}/2")
        d = top // 4
        lead = rem.coefficient((top,))
        if seen_degree == -1:
            seen_degree = d
            if d != degree or lead != 1:
                raise ArithmeticError(
                    f"expected monic of degree {degree} in w, found degree {d} "
                    f"with leading coefficient {lead}"
                )
        rem = rem - (w**d) * lead
    if seen_degree != degree:
        raise ArithmeticError(f"expected degree {degree} in w, got {seen_degree}")
