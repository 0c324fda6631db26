"""Exact polynomial series in q, x, y, t and the joint generating function.

Everything here is integer-exact: coefficients are Python ints, divisions
happen only through truncated series inversion or checked Fraction
arithmetic.  The central object is the continued fraction

    F(q, x, y, t) = 1 / (1 - t*a(1) - t^2*b(1) / (1 - t*a(2) - t^2*b(2) / ...))

with level data a(h) = [x,h] + [y,h] and b(h) = [h] * [xy,h+1] built from the
q-bracket family below.  Its t-expansion enumerates permutations one size up
by cycles (x, shifted down by one), marked cycles (y) and occurrences of the
glued pattern 2-13 counted over the flattened cycle word (q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from . import perms

Key = tuple[int, int, int, int]
Bounds = tuple[int | None, int | None, int | None, int | None]

VARS = ("q", "x", "y", "t")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
FREE: Bounds = (None, None, None, None)
_ZERO_KEY: Key = (0, 0, 0, 0)


def merge_bounds(a: Bounds, b: Bounds) -> Bounds:
    return tuple(
        u if v is None else v if u is None else min(u, v) for u, v in zip(a, b)
    )  # type: ignore[return-value]


def _within(key: Key, bounds: Bounds) -> bool:
    return all(b is None or e <= b for e, b in zip(key, bounds))


class MultiPoly:
    """Polynomial (or truncated series) in q, x, y, t with int coefficients.

    ``bounds`` gives an inclusive cap per variable exponent, None meaning
    unbounded.  Arithmetic merges bounds by taking the tighter cap, and any
    product term falling outside is discarded, which keeps all retained
    coefficients exact under the usual truncated-series semantics.
    """

    __slots__ = ("terms", "bounds")

    def __init__(self, terms: Mapping[Key, int] | None = None, bounds: Bounds = FREE):
        self.bounds = tuple(bounds)  # type: ignore[assignment]
        self.terms: dict[Key, int] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff and _within(key, self.bounds):
                    self.terms[key] = coeff

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, bounds: Bounds = FREE) -> "MultiPoly":
        return cls(None, bounds)

    @classmethod
    def const(cls, value: int, bounds: Bounds = FREE) -> "MultiPoly":
        return cls({_ZERO_KEY: int(value)}, bounds)

    @classmethod
    def variable(cls, name: str, exponent: int = 1, bounds: Bounds = FREE) -> "MultiPoly":
        key = [0, 0, 0, 0]
        key[_VAR_INDEX[name]] = exponent
        return cls({tuple(key): 1}, bounds)  # type: ignore[arg-type]

    @classmethod
    def monomial(
        cls, exponents: Mapping[str, int], coeff: int = 1, bounds: Bounds = FREE
    ) -> "MultiPoly":
        key = [0, 0, 0, 0]
        for name, e in exponents.items():
            key[_VAR_INDEX[name]] = e
        return cls({tuple(key): coeff}, bounds)  # type: ignore[arg-type]

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else {_ZERO_KEY: other})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r})"

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value: "MultiPoly | int", bounds: Bounds) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.const(value, bounds)

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        other = self._coerce(other, self.bounds)
        bounds = merge_bounds(self.bounds, other.bounds)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) + coeff
        return MultiPoly(out, bounds)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({k: -c for k, c in self.terms.items()}, self.bounds)

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self + (-self._coerce(other, self.bounds))

    def __rsub__(self, other: int) -> "MultiPoly":
        return self._coerce(other, self.bounds) - self

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly({k: c * other for k, c in self.terms.items()}, self.bounds)
        bounds = merge_bounds(self.bounds, other.bounds)
        small, large = self.terms, other.terms
        if len(small) > len(large):
            small, large = large, small
        out: dict[Key, int] = {}
        for (q1, x1, y1, t1), c1 in small.items():
            for (q2, x2, y2, t2), c2 in large.items():
                key = (q1 + q2, x1 + x2, y1 + y2, t1 + t2)
                if _within(key, bounds):
                    out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(out, bounds)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined; use inverse()")
        result = MultiPoly.const(1, self.bounds)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inverse(self) -> "MultiPoly":
        """Multiplicative inverse as a t-truncated series.

        Requires a finite t bound and t-degree-zero part exactly 1; the
        inverse coefficients then follow from a division-free recurrence.
        """
        t_max = self.bounds[3]
        if t_max is None:
            raise ValueError("inverse() needs a finite t bound")
        layers: list[dict[Key, int]] = [dict() for _ in range(t_max + 1)]
        for (q, x, y, t), coeff in self.terms.items():
            layers[t][(q, x, y, 0)] = coeff
        if layers[0] != {_ZERO_KEY: 1}:
            raise ValueError("inverse() needs constant 1 at t-degree zero")
        inv_layers: list[dict[Key, int]] = [{_ZERO_KEY: 1}]
        for m in range(1, t_max + 1):
            acc: dict[Key, int] = {}
            for j in range(1, m + 1):
                d = layers[j]
                if not d:
                    continue
                r = inv_layers[m - j]
                for (q1, x1, y1, _), c1 in d.items():
                    for (q2, x2, y2, _), c2 in r.items():
                        key = (q1 + q2, x1 + x2, y1 + y2, 0)
                        if _within(key, self.bounds):
                            acc[key] = acc.get(key, 0) + c1 * c2
            inv_layers.append({k: -c for k, c in acc.items() if c})
        out: dict[Key, int] = {}
        for m, layer in enumerate(inv_layers):
            for (q, x, y, _), coeff in layer.items():
                out[(q, x, y, m)] = coeff
        return MultiPoly(out, self.bounds)

    # -- queries and transforms --------------------------------------------

    def coeff(self, q: int = 0, x: int = 0, y: int = 0, t: int = 0) -> int:
        return self.terms.get((q, x, y, t), 0)

    def coefficient_poly(self, var: str, k: int) -> "MultiPoly":
        """Coefficient of var**k, as a polynomial in the other variables."""
        i = _VAR_INDEX[var]
        out = {}
        for key, coeff in self.terms.items():
            if key[i] == k:
                reduced = list(key)
                reduced[i] = 0
                out[tuple(reduced)] = coeff
        bounds = list(self.bounds)
        bounds[i] = 0
        return MultiPoly(out, tuple(bounds))  # type: ignore[arg-type]

    def specialize(self, **values: int) -> "MultiPoly":
        """Substitute integer values for some of the variables."""
        for name in values:
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}")
        out: dict[Key, int] = {}
        bounds = list(self.bounds)
        for name in values:
            bounds[_VAR_INDEX[name]] = 0
        for key, coeff in self.terms.items():
            new_key = list(key)
            for name, value in values.items():
                i = _VAR_INDEX[name]
                coeff *= int(value) ** key[i]
                new_key[i] = 0
            k = tuple(new_key)
            out[k] = out.get(k, 0) + coeff
        return MultiPoly(out, tuple(bounds))  # type: ignore[arg-type]

    def with_bounds(self, bounds: Bounds) -> "MultiPoly":
        return MultiPoly(self.terms, bounds)

    def degree(self, var: str) -> int:
        """Largest exponent of var present, or -1 for the zero polynomial."""
        i = _VAR_INDEX[var]
        return max((key[i] for key in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Key, int]]:
        def order(kv: tuple[Key, int]):
            eq, ex, ey, et = kv[0]
            return (eq + ex + ey + et, et, ey, ex, eq)

        return sorted(self.terms.items(), key=order)

    def to_text(self) -> str:
        """Canonical text form, terms by ascending total degree.

        >>> (MultiPoly({(0,0,0,0): 6, (0,1,0,0): 11, (0,2,0,0): 6, (0,3,0,0): 1})).to_text()
        '6 + 11*x + 6*x^2 + x^3'
        """
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for key, coeff in self.sorted_terms():
            vars_part = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARS, key)
                if e
            )
            mag = abs(coeff)
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(pieces)

    def terms_list(self) -> list[dict[str, int]]:
        """JSON-friendly term records in canonical order."""
        return [
            {"q": k[0], "x": k[1], "y": k[2], "t": k[3], "coeff": c}
            for k, c in self.sorted_terms()
        ]


# ---------------------------------------------------------------------------
# Bracket family


def bracket(h: int, kind: str = "plain", bounds: Bounds = FREE) -> MultiPoly:
    """q-brackets used as continued-fraction and path-step weights.

    plain: [h]    = 1 + q + ... + q^(h-1)              (h >= 0; [0] = 0)
    x:     [x,h]  = 1 + ... + q^(h-2) + x*q^(h-1)      (h >= 1)
    y:     [y,h]  = same with y in place of x
    xy:    [xy,h] = 1 + ... + q^(h-3)
                    + (x + y - x*y)*q^(h-2) + x*y*q^(h-1)   (h >= 2)

    Setting x = 1 (and y = 1) collapses each variant back to [h].
    """
    terms: dict[Key, int] = {}
    if kind == "plain":
        if h < 0:
            raise ValueError("plain bracket needs h >= 0")
        for k in range(h):
            terms[(k, 0, 0, 0)] = 1
    elif kind in ("x", "y"):
        if h < 1:
            raise ValueError(f"{kind} bracket needs h >= 1")
        for k in range(h - 1):
            terms[(k, 0, 0, 0)] = 1
        key = (h - 1, 1, 0, 0) if kind == "x" else (h - 1, 0, 1, 0)
        terms[key] = 1
    elif kind == "xy":
        if h < 2:
            raise ValueError("xy bracket needs h >= 2")
        for k in range(h - 2):
            terms[(k, 0, 0, 0)] = 1
        terms[(h - 2, 1, 0, 0)] = terms.get((h - 2, 1, 0, 0), 0) + 1
        terms[(h - 2, 0, 1, 0)] = terms.get((h - 2, 0, 1, 0), 0) + 1
        terms[(h - 2, 1, 1, 0)] = terms.get((h - 2, 1, 1, 0), 0) - 1
        terms[(h - 1, 1, 1, 0)] = terms.get((h - 1, 1, 1, 0), 0) + 1
    else:
        raise ValueError(f"unknown bracket kind {kind!r}")
    return MultiPoly(terms, bounds)


# ---------------------------------------------------------------------------
# Step-weight schemes for bicoloured Motzkin paths


@dataclass(frozen=True)
class WeightScheme:
    """Weight rule (step letter, start height) -> MultiPoly."""

    name: str
    rule: Callable[[str, int], MultiPoly]

    def weight(self, step: str, height: int) -> MultiPoly:
        return self.rule(step, height)


def _weights_path(step: str, h: int) -> MultiPoly:
    if step == "N":
        return bracket(h + 2, "x")
    if step == "S":
        return bracket(h, "plain")
    if step == "E":
        return bracket(h + 1, "x")
    if step == "F":
        return bracket(h + 1, "plain")
    raise ValueError(f"unknown step {step!r}")


def _weights_class(step: str, h: int) -> MultiPoly:
    if step in ("N", "E"):
        return bracket(h + 1, "x")
    if step in ("S", "F"):
        return bracket(h, "plain")
    raise ValueError(f"unknown step {step!r}")


def _weights_marked(step: str, h: int) -> MultiPoly:
    if step == "N":
        return bracket(h + 2, "xy")
    if step == "S":
        return bracket(h, "plain")
    if step == "E":
        return bracket(h + 1, "x")
    if step == "F":
        return bracket(h + 1, "y")
    raise ValueError(f"unknown step {step!r}")


#: Path weights whose total over all length-n paths is the t^n row of the
#: series at y = 1.
WEIGHTS1 = WeightScheme("path", _weights_path)

#: Class weights: the step product equals the total node weight of the
#: permutation class mapping to the path.
WEIGHTS2 = WeightScheme("class", _weights_class)

#: Two-variable refinement of WEIGHTS1 keeping y free; collapses to WEIGHTS1
#: at y = 1.
WEIGHTS_MARKED = WeightScheme("marked", _weights_marked)

SCHEMES = {s.name: s for s in (WEIGHTS1, WEIGHTS2, WEIGHTS_MARKED)}


# ---------------------------------------------------------------------------
# The joint continued fraction


def expand_f(
    t_max: int,
    q_max: int | None = None,
    *,
    q: int | None = None,
    x: int | None = None,
    y: int | None = None,
) -> MultiPoly:
    """Truncated expansion of the joint series F(q, x, y, t) up to t^t_max.

    Optional integer values pin variables before expanding (cheaper than
    specializing afterwards); q_max truncates q exponents, which leaves all
    retained q-coefficients exact.

    >>> expand_f(1).to_text()
    '1 + x*t + y*t'
    """
    if t_max < 0:
        raise ValueError("t_max must be nonnegative")
    bounds: Bounds = (q_max, None, None, t_max)
    subs = {name: val for name, val in (("q", q), ("x", x), ("y", y)) if val is not None}

    def level_poly(h: int, kind: str) -> MultiPoly:
        b = bracket(h, kind, bounds)
        return b.specialize(**subs) if subs else b

    t_var = MultiPoly.variable("t", bounds=bounds)
    inner = MultiPoly.zero(bounds)
    depth = t_max // 2 + 1
    for h in range(depth, 0, -1):
        alpha = level_poly(h, "x") + level_poly(h, "y")
        beta = level_poly(h, "plain") * level_poly(h + 1, "xy")
        den = MultiPoly.const(1, bounds) - t_var * alpha - t_var * t_var * beta * inner
        inner = den.inverse()
    return inner


def motzkin_transfer(n: int, scheme: WeightScheme) -> MultiPoly:
    """Sum of step-weight products over all bicoloured Motzkin paths of length n."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    top = n // 2 + 1
    states: list[MultiPoly] = [MultiPoly.zero() for _ in range(top + 2)]
    states[0] = MultiPoly.const(1)
    for _ in range(n):
        nxt: list[MultiPoly] = [MultiPoly.zero() for _ in range(top + 2)]
        for h in range(top + 1):
            cur = states[h]
            if not cur:
                continue
            nxt[h + 1] = nxt[h + 1] + cur * scheme.weight("N", h)
            if h:
                nxt[h - 1] = nxt[h - 1] + cur * scheme.weight("S", h)
            nxt[h] = nxt[h] + cur * (scheme.weight("E", h) + scheme.weight("F", h))
        states = nxt
    return states[0]


# ---------------------------------------------------------------------------
# Catalan numbers and closed forms for low q-slices


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def catalan_series(t_max: int, bounds: Bounds | None = None) -> MultiPoly:
    """The Catalan series C(t) = 1 + t*C(t)^2, truncated at t^t_max."""
    if bounds is None:
        bounds = (None, None, None, t_max)
    return MultiPoly(
        {(0, 0, 0, n): catalan_number(n) for n in range(t_max + 1)}, bounds
    )


_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind (cycle counts)."""
    if k < 0 or k > n or n < 0:
        return 0
    while len(_STIRLING_ROWS) <= n:
        m = len(_STIRLING_ROWS)
        prev = _STIRLING_ROWS[m - 1]
        row = [0] * (m + 1)
        for j in range(m + 1):
            row[j] = (prev[j - 1] if j >= 1 else 0) + (m - 1) * (
                prev[j] if j <= m - 1 else 0
            )
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[n][k]


def q_slice_closed(k: int, t_max: int, x_max: int | None = None) -> MultiPoly:
    """Closed form for the coefficient of q^k in the series at y = 1.

    Returns a polynomial in x and t.  Available for k in {0, 1, 2}; the
    k = 2 bracket constants were solved exactly from the series itself
    (rerun tools/fit_closed_forms.py to rederive them).
    """
    bounds: Bounds = (0, x_max, 0, t_max)
    one = MultiPoly.const(1, bounds)
    x_var = MultiPoly.variable("x", bounds=bounds)
    t_var = MultiPoly.variable("t", bounds=bounds)
    c = catalan_series(t_max, bounds)
    xtc_inv = (one - x_var * t_var * c).inverse()
    if k == 0:
        return c * xtc_inv
    two_minus_c_inv = (2 - c).inverse()
    if k == 1:
        num = c * (c - 1 + x_var * (2 - c)) * (1 - c) ** 2
        return num * two_minus_c_inv * xtc_inv * xtc_inv
    if k == 2:
        body = MultiPoly.zero(bounds)
        for j, coeffs in enumerate(_G2_BRACKET):
            piece = MultiPoly.zero(bounds)
            c_pow = one
            for co in coeffs:
                piece = piece + c_pow * co
                c_pow = c_pow * c
            body = body + x_var**j * piece
        pref = (1 - c) ** 3 * two_minus_c_inv**3 * xtc_inv**3
        return pref * body
    raise ValueError("closed q-slices are available for k in {0, 1, 2}")


#: x^0..x^3 coefficients (ascending powers of C) of the bracket B(x, C) in
#: [q^2]F = (1-C)^3 * B(x, C) / ((2-C)^3 * (1-x*t*C)^3), solved exactly from
#: the series expansion by tools/fit_closed_forms.py.
_G2_BRACKET = (
    (0, -1, 6, -7, 2),
    (-3, 20, -37, 24, -5),
    (12, -44, 51, -24, 4),
    (-8, 20, -18, 7, -1),
)


def coeff_closed(i: int, m: int, n: int) -> int:
    """Closed formula for the coefficient of q^i x^m t^n in the series at y=1.

    Available for i in {0, 1, 2}; zero whenever n >= m >= 0 fails.  The
    i = 2 numerator splits at m = 0: the quartic-in-n numerator with
    m-polynomial coefficients covers m >= 1 only, and the m = 0 column
    follows the falling factorial n(n-1)(n-2)(n-3) instead (both fitted
    and validated exactly against the series by tools/fit_closed_forms.py).
    A non-integral intermediate value raises, since it would mean the
    formula constants are wrong.
    """
    if m < 0 or n < m:
        return 0
    if i == 0:
        value = Fraction(binom(2 * n - m, n - m) * (m + 1), n + 1)
    elif i == 1:
        numer = (m + 1) * n * n + 3 * (m - 1) * n + m * m + 9 * m + 2
        value = Fraction(
            binom(2 * n - m, n - m - 1) * numer, (n + 2) * (n + 3)
        )
    elif i == 2:
        if m == 0:
            numer = n * (n - 1) * (n - 2) * (n - 3)
        else:
            numer = _phi2_numerator(m, n)
        value = Fraction(
            binom(2 * n - m, n - m - 1) * numer,
            2 * (n + 2) * (n + 3) * (n + 4),
        )
    else:
        raise ValueError("closed coefficients are available for i in {0, 1, 2}")
    if value.denominator != 1:
        raise ArithmeticError(
            f"closed coefficient ({i}, {m}, {n}) is not integral: {value}"
        )
    return int(value)


def _phi2_numerator(m: int, n: int) -> int:
    # Quartic in n with coefficients polynomial in m; valid for m >= 1 only.
    c4, c3, c2, c1, c0 = _PHI2_COEFFS
    return (
        _poly_eval(c4, m) * n**4
        + _poly_eval(c3, m) * n**3
        + _poly_eval(c2, m) * n**2
        + _poly_eval(c1, m) * n
        + _poly_eval(c0, m)
    )


def _poly_eval(coeffs: Sequence[int], v: int) -> int:
    return sum(co * v**i for i, co in enumerate(coeffs))


#: Coefficients (ascending powers of m) of the n^4..n^0 terms above, for the
#: m >= 1 region; rederivable by tools/fit_closed_forms.py.
_PHI2_COEFFS = (
    (1, 1),
    (-6, 5, -1),
    (-29, 32, -3),
    (-66, 72, -12, -2),
    (-20, 54, -28, -6),
)


# ---------------------------------------------------------------------------
# Truncated continued fractions with a uniform tail


@dataclass(frozen=True)
class CfTruncation:
    """Finitely many continued-fraction levels plus a uniform tail weight."""

    alphas: tuple[MultiPoly, ...]
    betas: tuple[MultiPoly, ...]
    gamma: MultiPoly

    def __post_init__(self) -> None:
        if len(self.alphas) != len(self.betas):
            raise ValueError("need one beta per alpha")

    @property
    def depth(self) -> int:
        return len(self.alphas)


def pattern_truncation(k: int) -> CfTruncation:
    """Depth-k truncation matching the joint series at y = 1 up to q^k."""
    alphas = tuple(bracket(j, "plain") + bracket(j, "x") for j in range(1, k + 1))
    betas = tuple(bracket(j, "plain") * bracket(j + 1, "x") for j in range(1, k + 1))
    return CfTruncation(alphas, betas, bracket(k, "plain"))


def truncated_cf(
    spec: CfTruncation, t_max: int, q_max: int | None = None, x_max: int | None = None
) -> MultiPoly:
    """Expand a CfTruncation: explicit levels on top of an all-gamma tail.

    The tail is the weight-gamma bicoloured Motzkin series C(gamma*t)^2.
    Coefficients of q^i for i <= depth match the full series expansion.
    """
    bounds: Bounds = (q_max, x_max, None, t_max)
    t_var = MultiPoly.variable("t", bounds=bounds)
    gamma = spec.gamma.with_bounds(bounds)
    tail = MultiPoly.zero(bounds)
    gamma_pow = MultiPoly.const(1, bounds)
    for m in range(t_max + 1):
        tail = tail + catalan_number(m + 1) * gamma_pow * MultiPoly.variable(
            "t", m, bounds
        )
        if m < t_max:
            gamma_pow = gamma_pow * gamma
    inner = tail
    for j in range(spec.depth - 1, -1, -1):
        alpha = spec.alphas[j].with_bounds(bounds)
        beta = spec.betas[j].with_bounds(bounds)
        den = MultiPoly.const(1, bounds) - t_var * alpha - t_var * t_var * beta * inner
        inner = den.inverse()
    return inner


# ---------------------------------------------------------------------------
# Marked-cycle identity


def marked_identity_check(n_max: int = 9, census_n_max: int = 6) -> list[str]:
    """Check the two-variable cycle-marking identity; return failure notes.

    The t^n coefficient of F(1, x, y, t) must be
    sum_{i,j} binom(i+j, j) * stirling_unsigned(n, i+j) * x^i y^j,
    and for n <= census_n_max the same table must come out of brute-force
    enumeration of all (n+1)! marked permutations (x counts unmarked cycles,
    y marked ones; the count is symmetric in the two).
    """
    failures: list[str] = []
    series = expand_f(n_max, q=1)
    for n in range(n_max + 1):
        expected: dict[tuple[int, int], int] = {}
        for total in range(n + 1):
            s = stirling_unsigned(n, total)
            if not s:
                continue
            for j in range(total + 1):
                expected[(total - j, j)] = binom(total, j) * s
        row = series.coefficient_poly("t", n)
        actual = {(key[1], key[2]): c for key, c in row.terms.items()}
        if actual != expected:
            failures.append(f"series row t^{n} does not match the formula table")
        if n <= census_n_max:
            counts: dict[tuple[int, int], int] = {}
            for marked in perms.enumerate_marked(n):
                key = (marked.unmarked_count, marked.marked_count)
                counts[key] = counts.get(key, 0) + 1
            if counts != expected:
                failures.append(
                    f"marked-permutation census at n={n} does not match the formula table"
                )
    return failures
