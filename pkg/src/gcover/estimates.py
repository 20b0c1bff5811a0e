"""Closed-form lower bounds on equivariant covering type.

Invariants such as the G-genus, cohomology degrees or fixed-set dimensions
are inputs here; they are not computed. Each evaluator returns a plain
integer, and `*_report` variants wrap it in a `BoundReport` that echoes the
inputs.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import EmptyDegreeList, NotPrimePowers, ParityViolation


@dataclass(frozen=True)
class BoundReport:
    quantity: str          # "ct_G", "sct_G(X, X^G) + ct(X^G)", "f_G0", ...
    lower: int
    upper: int | None = None
    theorem: str = ""
    inputs: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.lower < 1:
            raise ValueError("lower bound must be at least 1")
        if self.upper is not None and self.upper < self.lower:
            raise ValueError("upper bound below lower bound")

    def to_json(self) -> dict:
        return {"quantity": self.quantity, "lower": self.lower, "upper": self.upper,
                "theorem": self.theorem, "inputs": dict(self.inputs), "notes": list(self.notes)}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def genus_lower_bound(gamma: int) -> int:
    """ct_G >= gamma (gamma + 1) / 2 when the orbit types are linearly ordered."""
    if gamma < 1:
        raise ValueError("gamma must be at least 1")
    return gamma * (gamma + 1) // 2


def arithmetic_bound(degrees: Sequence[int]) -> int:
    """sum k * i_k + (n + 1) over the degrees sorted ascending."""
    if not degrees:
        raise EmptyDegreeList("at least one degree is required")
    if any(i < 1 for i in degrees):
        raise ValueError("degrees must be positive")
    ds = sorted(degrees)
    return sum(k * i for k, i in enumerate(ds, start=1)) + len(ds) + 1


def projective_bound(n: int) -> int:
    """ct_G(P(V)) >= (n + 1)^2 for dim_C V = n + 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return (n + 1) ** 2


def _prime_power(x: int) -> tuple[int, int] | None:
    """(p, k) with x = p^k, p = 1 for x = 1; None otherwise."""
    if x == 1:
        return (1, 0)
    p = 2
    while p * p <= x:
        if x % p == 0:
            break
        p += 1
    else:
        return (x, 1)
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return (p, k) if x == 1 else None


def sphere_zpk_bound(d: int, m: int, n: int) -> int:
    """(1 + c)(2 + c) / 2 with c = ceil((d - 1) m / n)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    pm, pn = _prime_power(m), _prime_power(n)
    if pm is None or pn is None:
        raise NotPrimePowers(f"{m} and {n} must be prime powers", m=m, n=n)
    if pm[0] != 1 and pn[0] != 1 and pm[0] != pn[0]:
        raise NotPrimePowers(f"{m} and {n} are powers of different primes", m=m, n=n)
    if m > n:
        raise NotPrimePowers("need m <= n", m=m, n=n)
    c = _ceil_div((d - 1) * m, n)
    return (1 + c) * (2 + c) // 2


def cyclic_join_additivity(component_bounds: Sequence[int]) -> int:
    if not component_bounds:
        raise ValueError("at least one component is required")
    return sum(component_bounds)


def relative_sct_decomposition(ct_fixed: int, sct_relative: int) -> BoundReport:
    if ct_fixed < 1 or sct_relative < 1:
        raise ValueError("both parts must be at least 1")
    return BoundReport(
        "ct_G", ct_fixed + sct_relative, None, "relative-decomposition",
        {"ct_fixed": ct_fixed, "sct_relative": sct_relative},
        ("lower bound only; equality is conjectural",))


def _is_prime(p: int) -> bool:
    return p >= 2 and _prime_power(p) == (p, 1)


def cohomology_sphere_bound(n: int, p: int, r: int = -1) -> BoundReport:
    """Bound for an F_p-cohomology n-sphere with fixed set an r-sphere (r = -1: free)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1 or r < -1 or r >= n:
        raise ValueError("need n >= 1 and -1 <= r < n")
    inputs = {"n": n, "p": p, "r": r}
    if r == -1:
        if p == 2:
            value = (n + 1) * (n + 2) // 2
        else:
            if n % 2 == 0:
                raise ParityViolation("p odd and free needs n odd", n=n, p=p)
            d = (n + 1) // 2
            value = d * (d + 1) // 2
        return BoundReport("ct_G", value, None, "cohomology-sphere-free", inputs)
    if p == 2:
        rel = (n - r - 1) * (n - r + 2) // 2
    else:
        if (n - r) % 2:
            raise ParityViolation("p odd with fixed points needs n - r even", n=n, r=r, p=p)
        d = (n - r) // 2
        rel = _ceil_div(d * d - 1, 2)
    notes = ("reported as ct(X^G) + sct_G(X, X^G); the fixed-point formula is "
             "labelled both ct_G and sct_G in the source statement",)
    return BoundReport("ct(X^G) + sct_G(X, X^G)", (r + 2) + rel, None,
                       "cohomology-sphere-fixed", inputs, notes)


# -- reports ------------------------------------------------------------------

def genus_report(gamma: int) -> BoundReport:
    return BoundReport("ct_G", genus_lower_bound(gamma), None, "genus-bound",
                       {"gamma": gamma}, ("assumes linearly ordered orbit types",))


def arithmetic_report(degrees: Sequence[int]) -> BoundReport:
    value = arithmetic_bound(degrees)
    return BoundReport("ct_G", value, None, "arithmetic-bound",
                       {"degrees": list(degrees), "ordering": sorted(degrees)},
                       ("degrees summed in ascending order",))


def projective_report(n: int) -> BoundReport:
    d = 2 * n
    return BoundReport("ct_G", projective_bound(n), None, "projective-space",
                       {"n": n, "dimension": d},
                       (f"equals (d+2)^2/4 = {(d + 2) ** 2 // 4} with d = {d}",))


def sphere_zpk_report(d: int, m: int, n: int) -> BoundReport:
    return BoundReport("ct_G", sphere_zpk_bound(d, m, n), None, "sphere-cyclic-p-power",
                       {"d": d, "m": m, "n": n})
