"""Horadam sequences w_n(a, b; p, q) over the Gaussian rationals.

``w_0 = a``, ``w_1 = b`` and ``w_n = p*w_{n-1} - q*w_{n-2}``, extended to
negative indices with ``w_{n} = (p*w_{n+1} - w_{n+2}) / q``.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field

from .errors import IndexGuardExceeded, ParseError, PreconditionUnmet, UnknownPreset
from .numeric import ONE, ZERO, GaussianRational, int_pow, parse_scalar

DEFAULT_MAX_INDEX = 100_000


@dataclass(frozen=True)
class HoradamParams:
    """Seeds ``a = w_0``, ``b = w_1`` and recurrence coefficients ``p``, ``q``."""

    a: GaussianRational
    b: GaussianRational
    p: GaussianRational
    q: GaussianRational

    def __post_init__(self):
        for name in ("a", "b", "p", "q"):
            object.__setattr__(self, name, GaussianRational.coerce(getattr(self, name)))
        if self.p.is_zero() or self.q.is_zero():
            raise ValueError("p and q must be nonzero")

    def fundamental(self) -> "HoradamParams":
        """Parameters of u_n = w_n(1, p; p, q)."""
        return HoradamParams(ONE, self.p, self.p, self.q)

    def primordial(self) -> "HoradamParams":
        """Parameters of v_n = w_n(2, p; p, q)."""
        return HoradamParams(GaussianRational(2), self.p, self.p, self.q)

    def token(self) -> str:
        return f"custom({self.a},{self.b},{self.p},{self.q})"

    def __str__(self):
        return f"w({self.a},{self.b};{self.p},{self.q})"


def _check_guard(n: int, max_index: int):
    if abs(n) > max_index:
        raise IndexGuardExceeded(f"|{n}| exceeds index guard {max_index}")


class HoradamSequence:
    """Two-sided memoized term store.

    The store is contiguous around indices 0 and 1 and grows one recurrence
    step at a time, so every cached value is consistent with its neighbours.
    Reads are lock-free; growth is serialized so an instance may be shared
    between threads.
    """

    def __init__(self, params: HoradamParams, max_index: int = DEFAULT_MAX_INDEX):
        self.params = params
        self.max_index = max_index
        self._forward = [params.a, params.b]  # w_0, w_1, ...
        self._backward = []  # w_{-1}, w_{-2}, ...
        self._inv_q = params.q.reciprocal()
        self._lock = threading.Lock()

    def term(self, n: int) -> GaussianRational:
        if n >= 0:
            if n < len(self._forward):
                return self._forward[n]
            _check_guard(n, self.max_index)
            with self._lock:
                self._grow_forward(n)
            return self._forward[n]
        i = -n - 1
        if i < len(self._backward):
            return self._backward[i]
        _check_guard(n, self.max_index)
        with self._lock:
            self._grow_backward(i)
        return self._backward[i]

    __getitem__ = term
    __call__ = term

    def _grow_forward(self, n):
        fwd = self._forward
        p, q = self.params.p, self.params.q
        while len(fwd) <= n:
            fwd.append(p * fwd[-1] - q * fwd[-2])

    def _grow_backward(self, i):
        bwd = self._backward
        p, inv_q = self.params.p, self._inv_q
        while len(bwd) <= i:
            # w_{-j} = (p*w_{-j+1} - w_{-j+2}) / q
            j = len(bwd) + 1
            nxt = self._forward[0] if j == 1 else bwd[-1]
            nxt2 = self._forward[1] if j == 1 else (self._forward[0] if j == 2 else bwd[-2])
            bwd.append((p * nxt - nxt2) * inv_q)

    def cached_range(self) -> tuple[int, int]:
        """Inclusive (lowest, highest) index currently stored."""
        return -len(self._backward), len(self._forward) - 1

    def __repr__(self):
        return f"HoradamSequence({self.params})"


def term(seq: HoradamSequence, n: int) -> GaussianRational:
    return seq.term(n)


def _mat_mul(x, y):
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def term_fast(params: HoradamParams, n: int, max_index: int = DEFAULT_MAX_INDEX) -> GaussianRational:
    """w_n via powers of the companion matrix [[p, -q], [1, 0]].

    Uses O(log |n|) matrix products and no memo. Negative ``n`` powers the
    inverse matrix (1/q)[[0, q], [-1, p]], which exists because q != 0.
    """
    _check_guard(n, max_index)
    p, q = params.p, params.q
    if n >= 0:
        base = ((p, -q), (ONE, ZERO))
    else:
        inv_q = q.reciprocal()
        base = ((ZERO, ONE), (-inv_q, p * inv_q))
        n = -n
    result = ((ONE, ZERO), (ZERO, ONE))
    while n:
        if n & 1:
            result = _mat_mul(result, base)
        n >>= 1
        if n:
            base = _mat_mul(base, base)
    # [w_{n+1}, w_n] = M^n [w_1, w_0]
    (_, _), (c, d) = result
    return c * params.b + d * params.a


def compute_e(params: HoradamParams) -> GaussianRational:
    """The characteristic constant p*a*b - q*a^2 - b^2."""
    a, b, p, q = params.a, params.b, params.p, params.q
    return p * a * b - q * a * a - b * b


@dataclass
class SequenceTriple:
    """A sequence w together with its companions u, v and the constant e."""

    w: HoradamSequence
    u: HoradamSequence
    v: HoradamSequence
    e: GaussianRational = field(default=None)

    def __post_init__(self):
        if self.e is None:
            self.e = compute_e(self.w.params)

    @classmethod
    def from_params(cls, params: HoradamParams, max_index: int = DEFAULT_MAX_INDEX) -> "SequenceTriple":
        return cls(
            HoradamSequence(params, max_index),
            HoradamSequence(params.fundamental(), max_index),
            HoradamSequence(params.primordial(), max_index),
        )

    @property
    def params(self) -> HoradamParams:
        return self.w.params


# -- presets ----------------------------------------------------------------

FIBONACCI = HoradamParams(0, 1, 1, -1)
LUCAS = HoradamParams(2, 1, 1, -1)
PELL = HoradamParams(0, 1, 2, -1)
JACOBSTHAL = HoradamParams(0, 1, 1, -2)

PRESET_NAMES = ("fibonacci", "lucas", "pell", "jacobsthal", "g", "u", "v", "custom")
_ARITY = {"fibonacci": 0, "lucas": 0, "pell": 0, "jacobsthal": 0, "g": 2, "u": 2, "v": 2, "custom": 4}


def preset_params(name: str, *args) -> HoradamParams:
    """Parameters for a named family.

    ``g(a, b)`` is w(a, b; 1, -1); ``u(p, q)`` and ``v(p, q)`` are the
    fundamental and primordial sequences; ``custom(a, b, p, q)`` is explicit.
    """
    key = name.lower()
    if key not in _ARITY:
        raise UnknownPreset(f"unknown preset {name!r}; expected one of {', '.join(PRESET_NAMES)}")
    if len(args) != _ARITY[key]:
        raise UnknownPreset(f"preset {key!r} takes {_ARITY[key]} arguments, got {len(args)}")
    args = [GaussianRational.coerce(x) for x in args]
    if key == "fibonacci":
        return FIBONACCI
    if key == "lucas":
        return LUCAS
    if key == "pell":
        return PELL
    if key == "jacobsthal":
        return JACOBSTHAL
    if key == "g":
        return HoradamParams(args[0], args[1], 1, -1)
    if key == "u":
        return HoradamParams(1, args[0], args[0], args[1])
    if key == "v":
        return HoradamParams(2, args[0], args[0], args[1])
    return HoradamParams(*args)


def preset(name: str, *args, max_index: int = DEFAULT_MAX_INDEX) -> SequenceTriple:
    return SequenceTriple.from_params(preset_params(name, *args), max_index)


_TOKEN_RE = re.compile(r"^\s*([A-Za-z]+)\s*(?:\((.*)\))?\s*$")


def parse_preset(token: str) -> HoradamParams:
    """Parse ``pell``, ``g(3,7)``, ``custom(1,2,3,-1)`` and friends."""
    match = _TOKEN_RE.match(token)
    if not match:
        raise ParseError("malformed preset", token, 0)
    name, inner = match.groups()
    args = []
    if inner is not None and inner.strip():
        args = [parse_scalar(part.strip()) for part in inner.split(",")]
    return preset_params(name, *args)


def preset_label(params: HoradamParams) -> str:
    """Short name for a parameter set, falling back to its custom token."""
    for label, known in (("fibonacci", FIBONACCI), ("lucas", LUCAS), ("pell", PELL), ("jacobsthal", JACOBSTHAL)):
        if params == known:
            return label
    if params.p == 1 and params.q == -1:
        return f"g({params.a},{params.b})"
    return params.token()


# -- negative-index closed forms --------------------------------------------

def negative_index_u(triple: SequenceTriple, n: int) -> GaussianRational:
    """u_{-n} = -q^{1-n} * u_{n-2}."""
    q = triple.params.q
    return -(int_pow(q, 1 - n) * triple.u.term(n - 2))


def negative_index_v(triple: SequenceTriple, n: int, form: str = "validated") -> GaussianRational:
    """v_{-n} from v_n.

    The ``validated`` form, v_{-n} = v_n / q^n, agrees with the backward
    recurrence for every q. The ``printed`` form, q^n * v_n, agrees only
    when q^{2n} = 1 and is kept for comparison.
    """
    q = triple.params.q
    if form == "validated":
        return triple.v.term(n) / int_pow(q, n)
    if form == "printed":
        return int_pow(q, n) * triple.v.term(n)
    raise ValueError(f"unknown form {form!r}")


def negative_index_ratio(triple: SequenceTriple, n: int) -> GaussianRational:
    """(a*u_n - b*u_{n-1}) / (a*u_n + (b - p*a)*u_{n-1})."""
    params = triple.params
    a, b, p = params.a, params.b, params.p
    un, un1 = triple.u.term(n), triple.u.term(n - 1)
    den = a * un + (b - p * a) * un1
    if den.is_zero():
        raise PreconditionUnmet("a*u_n+(b-pa)*u_{n-1}!=0")
    return (a * un - b * un1) / den


def negative_index_w(triple: SequenceTriple, n: int, form: str = "validated") -> GaussianRational:
    """w_{-n} from w_n via the ratio of :func:`negative_index_ratio`.

    ``validated``: ratio * w_n / q^n, which matches the backward recurrence.
    ``printed``: ratio * w_n, which equals q^n * w_{-n}.
    Raises :class:`PreconditionUnmet` when the ratio's denominator vanishes.
    """
    scaled = negative_index_ratio(triple, n) * triple.w.term(n)
    if form == "validated":
        return scaled / int_pow(triple.params.q, n)
    if form == "printed":
        return scaled
    raise ValueError(f"unknown form {form!r}")
