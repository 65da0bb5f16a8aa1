"""Generic weighted-sum identities for sequences tied by a two-term relation.

Every function here works on a :class:`LemmaConfig` describing

    X_m = x * X_{m - alpha} + y * Y_{m - beta}      (for all integers m)

and returns either the literal O(k) sum (``*_sum``) or the closed form it
telescopes to (``*_closed``). Single-sequence configurations have ``Y is X``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from .errors import PreconditionUnmet
from .numeric import ONE, ZERO, GaussianRational, int_pow
from .sequence import SequenceTriple

Seq = Callable[[int], GaussianRational]

PROBE_WINDOW = range(-4, 5)


@dataclass(frozen=True)
class LemmaConfig:
    x: GaussianRational
    y: GaussianRational
    alpha: int
    beta: int
    X: Seq
    Y: Seq | None = None

    def __post_init__(self):
        if self.Y is None:
            object.__setattr__(self, "Y", self.X)

    @property
    def single(self) -> bool:
        return self.Y is self.X

    def swapped(self) -> "LemmaConfig":
        """The same relation with (x, alpha) and (y, beta) exchanged."""
        if not self.single:
            raise ValueError("only single-sequence configurations can be swapped")
        return replace(self, x=self.y, y=self.x, alpha=self.beta, beta=self.alpha)

    def residual(self, m: int) -> GaussianRational:
        return self.X(m) - self.x * self.X(m - self.alpha) - self.y * self.Y(m - self.beta)

    def validate(self, window=PROBE_WINDOW) -> "LemmaConfig":
        """Check nonvanishing weights and the relation on ``window``.

        Raises :class:`PreconditionUnmet` for a zero weight and
        ``ValueError`` if the relation fails anywhere in the window.
        """
        if self.x.is_zero():
            raise PreconditionUnmet("x!=0")
        if self.y.is_zero():
            raise PreconditionUnmet("y!=0")
        for m in window:
            if not self.residual(m).is_zero():
                raise ValueError(f"relation fails at m={m}")
        return self


def binomial_row(k: int) -> list[int]:
    """C(k, 0..k) by the multiplicative formula."""
    row = [1]
    for j in range(k):
        row.append(row[-1] * (k - j) // (j + 1))
    return row


def weighted_sum(seq: Seq, start: int, step: int, ratio: GaussianRational, k: int, binomial=False):
    """sum_{j=0}^{k} [C(k,j)] * ratio^j * seq(start + step*j), weights built incrementally."""
    total = ZERO
    weight = ONE
    coeffs = binomial_row(k) if binomial else None
    for j in range(k + 1):
        term = seq(start + step * j) * weight
        if coeffs is not None:
            term = term * coeffs[j]
        total = total + term
        weight = weight * ratio
    return total


def _inv(value: GaussianRational, tag: str) -> GaussianRational:
    if value.is_zero():
        raise PreconditionUnmet(tag)
    return value.reciprocal()


def _check_k(k):
    if k < 0:
        raise ValueError("k must be non-negative")


# -- two-sequence telescoping ---------------------------------------------------

def lemma1_sum(cfg: LemmaConfig, m: int, k: int) -> GaussianRational:
    """y * sum_j Y_{m - k*alpha - beta + alpha*j} / x^j."""
    _check_k(k)
    a, b = cfg.alpha, cfg.beta
    return cfg.y * weighted_sum(cfg.Y, m - k * a - b, a, _inv(cfg.x, "x!=0"), k)


def lemma1_closed(cfg: LemmaConfig, m: int, k: int) -> GaussianRational:
    """X_m / x^k - x * X_{m - (k+1)*alpha}."""
    _check_k(k)
    x = cfg.x
    if x.is_zero():
        raise PreconditionUnmet("x!=0")
    return cfg.X(m) / int_pow(x, k) - x * cfg.X(m - (k + 1) * cfg.alpha)


def lemma1_equiv_sum(cfg: LemmaConfig, m: int, k: int) -> GaussianRational:
    """y * sum_j x^j * Y_{m - beta - alpha*j}: the x^k-rescaled form."""
    _check_k(k)
    return cfg.y * weighted_sum(cfg.Y, m - cfg.beta, -cfg.alpha, cfg.x, k)


def lemma1_equiv_closed(cfg: LemmaConfig, m: int, k: int) -> GaussianRational:
    """X_m - x^{k+1} * X_{m - (k+1)*alpha}."""
    _check_k(k)
    return cfg.X(m) - int_pow(cfg.x, k + 1) * cfg.X(m - (k + 1) * cfg.alpha)


# -- single-sequence forms ------------------------------------------------------

def _require_single(cfg):
    if not cfg.single:
        raise ValueError("this identity needs a single-sequence configuration")


def _neg_ratio(num, den, tag):
    # -num/den, the weight base of the rearranged relation
    return -num * _inv(den, tag)


def _lemma3_variant3_sum(cfg, m, k):
    a, b = cfg.alpha, cfg.beta
    d = b - a
    base = _neg_ratio(cfg.y, cfg.x, "x!=0")  # -y/x
    return weighted_sum(cfg.X, m - d * k + a, d, _inv(base, "y!=0"), k)


def _lemma3_variant3_closed(cfg, m, k):
    a, b = cfg.alpha, cfg.beta
    d = b - a
    base = _neg_ratio(cfg.y, cfg.x, "x!=0")
    if base.is_zero():
        raise PreconditionUnmet("y!=0")
    return cfg.x * cfg.X(m) / int_pow(base, k) + cfg.y * cfg.X(m - (k + 1) * d)


def _lemma3_equiv3_sum(cfg, m, k):
    a, b = cfg.alpha, cfg.beta
    d = b - a
    base = _neg_ratio(cfg.x, cfg.y, "y!=0")  # -x/y
    return weighted_sum(cfg.X, m + a, -d, _inv(base, "x!=0"), k)


def _lemma3_equiv3_closed(cfg, m, k):
    a, b = cfg.alpha, cfg.beta
    d = b - a
    base = _neg_ratio(cfg.x, cfg.y, "y!=0")
    if base.is_zero():
        raise PreconditionUnmet("x!=0")
    return cfg.x * cfg.X(m) + cfg.y / int_pow(base, k) * cfg.X(m - (k + 1) * d)


def lemma3_sum(cfg: LemmaConfig, variant: int, m: int, k: int, equivalent: bool = False) -> GaussianRational:
    """Left-hand side of the single-sequence weighted sums.

    Variants 1 and 2 weight by 1/x^j and 1/y^j, variants 3 and 4 by
    1/(-y/x)^j and 1/(-x/y)^j. ``equivalent`` selects the rescaled form with
    reversed summation order.
    """
    _require_single(cfg)
    _check_k(k)
    if variant in (2, 4):
        cfg = cfg.swapped()
    if variant in (1, 2):
        return lemma1_equiv_sum(cfg, m, k) if equivalent else lemma1_sum(cfg, m, k)
    if variant in (3, 4):
        return _lemma3_equiv3_sum(cfg, m, k) if equivalent else _lemma3_variant3_sum(cfg, m, k)
    raise ValueError(f"variant must be 1..4, got {variant}")


def lemma3_closed(cfg: LemmaConfig, variant: int, m: int, k: int, equivalent: bool = False) -> GaussianRational:
    """Closed form matching :func:`lemma3_sum` for the same arguments."""
    _require_single(cfg)
    _check_k(k)
    if variant in (2, 4):
        cfg = cfg.swapped()
    if variant in (1, 2):
        return lemma1_equiv_closed(cfg, m, k) if equivalent else lemma1_closed(cfg, m, k)
    if variant in (3, 4):
        return _lemma3_equiv3_closed(cfg, m, k) if equivalent else _lemma3_variant3_closed(cfg, m, k)
    raise ValueError(f"variant must be 1..4, got {variant}")


# -- binomial forms ---------------------------------------------------------------

def lemma5_sum(cfg: LemmaConfig, variant: int, m: int, k: int) -> GaussianRational:
    """Binomially weighted sums.

    1: sum C(k,j) (x/y)^j X_{m - k*beta + (beta-alpha)*j}
    2: sum C(k,j) X_{m + (alpha-beta)*k + beta*j} / (-y)^j
    3: variant 2 with (x, alpha) <-> (y, beta)
    4: variant 1 with (x, alpha) <-> (y, beta)
    """
    _require_single(cfg)
    _check_k(k)
    if variant in (3, 4):
        cfg = cfg.swapped()
    a, b = cfg.alpha, cfg.beta
    if variant in (1, 4):
        ratio = cfg.x * _inv(cfg.y, "y!=0")
        return weighted_sum(cfg.X, m - k * b, b - a, ratio, k, binomial=True)
    if variant in (2, 3):
        ratio = _inv(-cfg.y, "y!=0")
        return weighted_sum(cfg.X, m + (a - b) * k, b, ratio, k, binomial=True)
    raise ValueError(f"variant must be 1..4, got {variant}")


def lemma5_closed(cfg: LemmaConfig, variant: int, m: int, k: int) -> GaussianRational:
    """X_m/y^k, (-x/y)^k X_m, (-y/x)^k X_m, X_m/x^k for variants 1..4."""
    _require_single(cfg)
    _check_k(k)
    if variant in (3, 4):
        cfg = cfg.swapped()
    inv_y = _inv(cfg.y, "y!=0")
    if variant in (1, 4):
        return cfg.X(m) * int_pow(inv_y, k)
    if variant in (2, 3):
        return int_pow(-cfg.x * inv_y, k) * cfg.X(m)
    raise ValueError(f"variant must be 1..4, got {variant}")


# -- configurations coming from Horadam kernels -------------------------------

def shift_config(triple: SequenceTriple, r: int) -> LemmaConfig:
    """w_m = u_r w_{m-r} - q u_{r-1} w_{m-r-1}."""
    q = triple.params.q
    u = triple.u.term
    return LemmaConfig(u(r), -q * u(r - 1), r, r + 1, triple.w.term)


def reflection_config(triple: SequenceTriple, r: int) -> LemmaConfig:
    """w_m = (1/v_r) w_{m+r} + (q^r/v_r) w_{m-r}."""
    vr = triple.v.term(r)
    inv = _inv(vr, "v_r!=0")
    return LemmaConfig(inv, int_pow(triple.params.q, r) * inv, -r, r, triple.w.term)


def fundamental_config(triple: SequenceTriple, r: int) -> LemmaConfig:
    """u_m = (q w_{r-1}/w_r) u_{m-1} + (1/w_r) w_{m+r}, a two-sequence relation."""
    w = triple.w.term
    inv = _inv(w(r), "w_r!=0")
    return LemmaConfig(triple.params.q * w(r - 1) * inv, inv, 1, -r, triple.u.term, triple.w.term)


def product_config(triple: SequenceTriple, n: int, r: int) -> LemmaConfig:
    """w_m = (w_n/w_{n-r}) w_{m-r} + (q^{n-r} e u_{r-1}/w_{n-r}) u_{m-n-1}."""
    w = triple.w.term
    inv = _inv(w(n - r), "w_{n-r}!=0")
    q = triple.params.q
    y = int_pow(q, n - r) * triple.e * triple.u.term(r - 1) * inv
    return LemmaConfig(w(n) * inv, y, r, n + 1, triple.w.term, triple.u.term)


def general_config(triple: SequenceTriple, alpha: int, beta: int) -> LemmaConfig:
    """The unique (x, y) with w_m = x w_{m-alpha} + y w_{m-beta} for this (p, q).

    Solved from the sequences U (U_0 = 0, U_1 = 1) and v, which span every
    sequence with these coefficients. Needs U_{beta-alpha} != 0.
    """
    d = beta - alpha
    # U_n = u_{n-1}
    x = triple.u.term(beta - 1) * _inv(triple.u.term(d - 1), "U_{beta-alpha}!=0")
    y = (triple.v.term(beta) - x * triple.v.term(d)) / 2
    return LemmaConfig(x, y, alpha, beta, triple.w.term)


def geometric_config(ratio: GaussianRational, scale: GaussianRational, x: GaussianRational, alpha: int, beta: int) -> LemmaConfig:
    """X_m = scale * ratio^m with y chosen so the relation holds exactly."""
    def seq(m):
        return scale * int_pow(ratio, m)

    y = (ONE - x * int_pow(ratio, -alpha)) * int_pow(ratio, beta)
    return LemmaConfig(x, y, alpha, beta, seq)


def derived_config(X: Seq, x: GaussianRational, y: GaussianRational, alpha: int, beta: int) -> LemmaConfig:
    """Two-sequence config with Y_m = (X_{m+beta} - x X_{m+beta-alpha}) / y for any X."""
    inv_y = _inv(y, "y!=0")

    def Y(m):
        return (X(m + beta) - x * X(m + beta - alpha)) * inv_y

    return LemmaConfig(x, y, alpha, beta, X, Y)
