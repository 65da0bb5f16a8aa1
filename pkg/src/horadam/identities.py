"""Catalog of checkable weighted-sum identities and their evaluators.

Each :class:`Identity` pairs a direct left-hand side (the literal O(k) sum)
with a closed-form right-hand side, both written exactly as the identity is
displayed. Where an identity is an instance of one of the generic forms in
:mod:`horadam.lemmas`, it also records that instantiation so the two routes
can be compared, and specializations record the general identity (and index
map) they reduce to.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable, NamedTuple

from . import lemmas
from .errors import IndexGuardExceeded, PreconditionUnmet, UnknownIdentity
from .lemmas import LemmaConfig, weighted_sum
from .numeric import ONE, GaussianRational, int_pow
from .sequence import (
    DEFAULT_MAX_INDEX,
    FIBONACCI,
    JACOBSTHAL,
    LUCAS,
    PELL,
    HoradamParams,
    HoradamSequence,
    SequenceTriple,
    compute_e,
    term_fast,
)

INDEX_NAMES = ("m", "n", "r", "k")


class Idx(NamedTuple):
    m: int = 0
    n: int = 0
    r: int = 0
    k: int = 0


class Context:
    """Sequences and constants for one parameter set.

    With ``fast=True`` every term is computed by :func:`term_fast` instead of
    the memoized store. Instances are not thread-safe to create lazily; give
    each worker its own.
    """

    def __init__(self, params: HoradamParams, max_index: int = DEFAULT_MAX_INDEX, fast: bool = False):
        self.params = params
        self.max_index = max_index
        self.fast = fast
        self.a, self.b, self.p, self.q = params.a, params.b, params.p, params.q
        self.e = compute_e(params)
        if fast:
            self.triple = None
            self.w = partial(term_fast, params, max_index=max_index)
            self.u = partial(term_fast, params.fundamental(), max_index=max_index)
            self.v = partial(term_fast, params.primordial(), max_index=max_index)
        else:
            self.triple = SequenceTriple.from_params(params, max_index)
            self.w = self.triple.w.term
            self.u = self.triple.u.term
            self.v = self.triple.v.term
        self._named = {}
        self._configs = {}

    def _named_seq(self, params):
        if self.fast:
            return _TermView(partial(term_fast, params, max_index=self.max_index))
        seq = self._named.get(params)
        if seq is None:
            seq = HoradamSequence(params, self.max_index)
            self._named[params] = seq
        return seq

    def F(self, n):
        return self._named_seq(FIBONACCI).term(n)

    def L(self, n):
        return self._named_seq(LUCAS).term(n)

    def P(self, n):
        return self._named_seq(PELL).term(n)

    def J(self, n):
        return self._named_seq(JACOBSTHAL).term(n)

    def qpow(self, n):
        return int_pow(self.q, n)

    def ratio(self, n):
        """(a u_n - b u_{n-1}) / (a u_n + (b - pa) u_{n-1})."""
        un, un1 = self.u(n), self.u(n - 1)
        den = self.a * un + (self.b - self.p * self.a) * un1
        if den.is_zero():
            raise PreconditionUnmet("a*u_n+(b-pa)*u_{n-1}!=0")
        return (self.a * un - self.b * un1) / den

    def config(self, kind: str, *args) -> LemmaConfig:
        """Validated lemma configuration, cached per (kind, args)."""
        key = (kind,) + args
        hit = self._configs.get(key)
        if hit is None:
            try:
                hit = _CONFIG_BUILDERS[kind](self, *args).validate()
            except PreconditionUnmet as exc:
                hit = exc
            self._configs[key] = hit
        if isinstance(hit, PreconditionUnmet):
            raise PreconditionUnmet(hit.reason)
        return hit


def _seqs(ctx):
    if ctx.triple is not None:
        return ctx.triple
    return _FastTriple(ctx)


class _FastTriple:
    def __init__(self, ctx):
        self.params = ctx.params
        self.e = ctx.e
        self.w = _TermView(ctx.w)
        self.u = _TermView(ctx.u)
        self.v = _TermView(ctx.v)


class _TermView:
    def __init__(self, fn):
        self.term = fn


_CONFIG_BUILDERS = {
    "shift": lambda c, r: lemmas.shift_config(_seqs(c), r),
    "reflection": lambda c, r: lemmas.reflection_config(_seqs(c), r),
    "fundamental": lambda c, r: lemmas.fundamental_config(_seqs(c), r),
    "product": lambda c, n, r: lemmas.product_config(_seqs(c), n, r),
    "general": lambda c, a, b: lemmas.general_config(_seqs(c), a, b),
}


# -- outcomes ---------------------------------------------------------------------

@dataclass(frozen=True)
class Pass:
    value: GaussianRational


@dataclass(frozen=True)
class Skip:
    reason: str


@dataclass(frozen=True)
class Violated:
    lhs: GaussianRational
    rhs: GaussianRational


CheckOutcome = Pass | Skip | Violated


@dataclass(frozen=True)
class Instantiation:
    """How an identity arises from a generic lemma.

    The identity's sides equal ``scale`` times the lemma's sum and closed
    form, evaluated with ``config`` at the mapped ``m`` and ``k``.
    """

    config: LemmaConfig
    lemma: str  # "2.1", "2.3" or "2.5"
    variant: int
    m: int
    k: int
    equivalent: bool = False
    scale: GaussianRational = ONE

    def sides(self):
        if self.lemma == "2.1":
            if self.equivalent:
                s, c = lemmas.lemma1_equiv_sum(self.config, self.m, self.k), lemmas.lemma1_equiv_closed(self.config, self.m, self.k)
            else:
                s, c = lemmas.lemma1_sum(self.config, self.m, self.k), lemmas.lemma1_closed(self.config, self.m, self.k)
        elif self.lemma == "2.3":
            s = lemmas.lemma3_sum(self.config, self.variant, self.m, self.k, self.equivalent)
            c = lemmas.lemma3_closed(self.config, self.variant, self.m, self.k, self.equivalent)
        elif self.lemma == "2.5":
            s = lemmas.lemma5_sum(self.config, self.variant, self.m, self.k)
            c = lemmas.lemma5_closed(self.config, self.variant, self.m, self.k)
        else:
            raise ValueError(f"unknown lemma {self.lemma!r}")
        return self.scale * s, self.scale * c


Evaluator = Callable[[Context, Idx], GaussianRational]


def _always(params):
    return True


@dataclass(frozen=True)
class Identity:
    id: str
    anchor: str
    formula: str
    indices: tuple[str, ...]
    lhs: Evaluator
    rhs: Evaluator
    nonzero: tuple = ()
    exclude: Callable[[Idx], str | None] | None = None
    applies: Callable[[HoradamParams], bool] = _always
    family: str = "any"
    general: str | None = None
    to_general: Callable[[Context, Idx], tuple[Idx, GaussianRational]] | None = None
    lemma: Callable[[Context, Idx], Instantiation] | None = None
    quarantined: bool = False
    note: str = ""

    @property
    def requires(self) -> str:
        tags = [tag for tag, _ in self.nonzero]
        if self.exclude is not None and self.excluded_text:
            tags.insert(0, self.excluded_text)
        return ", ".join(tags) if tags else "none"

    @property
    def excluded_text(self) -> str:
        return getattr(self.exclude, "text", "")

    def preconditions(self, ctx: Context, idx: Idx):
        """Raise :class:`PreconditionUnmet` for the first failing hypothesis."""
        if self.exclude is not None:
            reason = self.exclude(idx)
            if reason:
                raise PreconditionUnmet(reason)
        for tag, value in self.nonzero:
            if value(ctx, idx).is_zero():
                raise PreconditionUnmet(tag)

    def evaluate(self, ctx: Context, idx: Idx, corrupt: bool = False) -> CheckOutcome:
        """Compare both sides exactly; ``corrupt`` negates the right-hand side."""
        try:
            self.preconditions(ctx, idx)
            lhs = self.lhs(ctx, idx)
            rhs = self.rhs(ctx, idx)
        except PreconditionUnmet as exc:
            return Skip(exc.reason)
        except ZeroDivisionError:
            return Skip("nonzero denominator")
        except IndexGuardExceeded:
            return Skip("index within max_index")
        if corrupt:
            rhs = -rhs
        if lhs == rhs:
            return Pass(lhs)
        return Violated(lhs, rhs)


def _excluding(name: str, *values: int):
    text = " and ".join(f"{name}!={v}" for v in values)

    def exclude(idx):
        if getattr(idx, name) in values:
            return f"{name}!={getattr(idx, name)}"
        return None

    exclude.text = text
    return exclude


def _nonneg(name: str):
    def exclude(idx):
        return f"{name}>=0" if getattr(idx, name) < 0 else None

    exclude.text = f"{name}>=0"
    return exclude


# -- family predicates ---------------------------------------------------------------

def _is(target):
    def applies(params):
        return params == target

    return applies


def _gibonacci(params):
    return params.p == 1 and params.q == -1


def _q_minus_one(params):
    return params.q == -1


# -- registry construction ------------------------------------------------------------

_REGISTRY: dict[str, Identity] = {}


def _add(ident: Identity):
    if ident.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {ident.id}")
    _REGISTRY[ident.id] = ident


def _same(ctx, idx):
    return idx, ONE


def _map(**changes):
    """to_general that rewrites indices from functions of the original Idx."""

    def mapping(ctx, idx):
        return idx._replace(**{k: f(idx) for k, f in changes.items()}), ONE

    return mapping


def _ws(seq, start, step, ratio, k, binomial=False):
    return weighted_sum(seq, start, step, ratio, k, binomial)


def _inv(x):
    return x.reciprocal()


def _kernel():
    _add(Identity(
        "kernel-eq-7", "eq.(7)", "u_{-n} = -q^{-n+1} u_{n-2}", ("n",),
        lambda c, i: c.u(-i.n),
        lambda c, i: -(c.qpow(1 - i.n) * c.u(i.n - 2)),
    ))
    _add(Identity(
        "kernel-eq-8", "eq.(8)", "v_{-n} = v_n / q^n  (printed q^n v_n; exponent sign fixed by the backward recurrence)", ("n",),
        lambda c, i: c.v(-i.n),
        lambda c, i: c.v(i.n) / c.qpow(i.n),
    ))
    _add(Identity(
        "kernel-eq-8-printed", "eq.(8)", "v_{-n} = q^n v_n  (as printed)", ("n",),
        lambda c, i: c.v(-i.n),
        lambda c, i: c.qpow(i.n) * c.v(i.n),
        quarantined=True, note="fails unless q^(2n) = 1",
    ))
    _add(Identity(
        "kernel-eq-9", "eq.(9)", "w_{-n} = (a u_n - b u_{n-1})/(a u_n + (b-pa) u_{n-1}) w_n / q^n", ("n",),
        lambda c, i: c.w(-i.n),
        lambda c, i: c.ratio(i.n) * c.w(i.n) / c.qpow(i.n),
        nonzero=(("a*u_n+(b-pa)*u_{n-1}!=0", lambda c, i: c.a * c.u(i.n) + (c.b - c.p * c.a) * c.u(i.n - 1)),),
    ))
    _add(Identity(
        "kernel-eq-9-printed", "eq.(9)", "w_{-n} = (a u_n - b u_{n-1})/(a u_n + (b-pa) u_{n-1}) w_n  (as printed)", ("n",),
        lambda c, i: c.w(-i.n),
        lambda c, i: c.ratio(i.n) * c.w(i.n),
        nonzero=(("a*u_n+(b-pa)*u_{n-1}!=0", lambda c, i: c.a * c.u(i.n) + (c.b - c.p * c.a) * c.u(i.n - 1)),),
        quarantined=True, note="off by the factor q^n",
    ))
    _add(Identity(
        "kernel-eq-10", "eq.fuxige6", "w_{m+r} = u_r w_m - q u_{r-1} w_{m-1}", ("m", "r"),
        lambda c, i: c.w(i.m + i.r),
        lambda c, i: c.u(i.r) * c.w(i.m) - c.q * c.u(i.r - 1) * c.w(i.m - 1),
    ))
    _add(Identity(
        "kernel-eq-11", "eq.w7u7hr6", "v_r w_m = w_{m+r} + q^r w_{m-r}", ("m", "r"),
        lambda c, i: c.v(i.r) * c.w(i.m),
        lambda c, i: c.w(i.m + i.r) + c.qpow(i.r) * c.w(i.m - i.r),
    ))
    _add(Identity(
        "kernel-eq-12", "eq.vx6b1t4",
        "w_{n-r} w_{m+n+r} = w_n w_{m+n} + q^{n-r} e u_{r-1} u_{m+r-1}, where e=pab-qa^2-b^2", ("m", "n", "r"),
        lambda c, i: c.w(i.n - i.r) * c.w(i.m + i.n + i.r),
        lambda c, i: c.w(i.n) * c.w(i.m + i.n) + c.qpow(i.n - i.r) * c.e * c.u(i.r - 1) * c.u(i.m + i.r - 1),
    ))


# lemma-level entries use fixed Horadam-derived relations so they run on the grid

def _lemma21_cfg(c, i):
    return c.config("product", 2 * i.r, i.r)


def _lemma23_ab(r):
    return r, -(r + 1)


def _lemma23_cfg(c, i):
    return c.config("general", *_lemma23_ab(i.r))


def _lemma25_ab(r):
    return r, r + 2


def _lemma25_cfg(c, i):
    return c.config("general", *_lemma25_ab(i.r))


def _lemma_entries():
    # two-sequence relation w_m = (w_{2r}/w_r) w_{m-r} + (q^r e u_{r-1}/w_r) u_{m-2r-1}
    l21 = "X=w, Y=u, x=w_{2r}/w_r, y=q^r e u_{r-1}/w_r, alpha=r, beta=2r+1"
    _add(Identity(
        "lemma-2.1", "lem.u4bqbkc", f"y sum_j Y_(m-k alpha-beta+alpha j)/x^j = X_m/x^k - x X_(m-(k+1)alpha)  [{l21}]",
        ("m", "r", "k"),
        lambda c, i: lemmas.lemma1_sum(_lemma21_cfg(c, i), i.m, i.k),
        lambda c, i: lemmas.lemma1_closed(_lemma21_cfg(c, i), i.m, i.k),
    ))

    def l21_part_lhs(c, i):
        cfg = _lemma21_cfg(c, i)
        return cfg.y * _ws(cfg.Y, 0, cfg.alpha, _inv(cfg.x), i.k)

    def l21_part_rhs(c, i):
        cfg = _lemma21_cfg(c, i)
        return cfg.X(i.k * cfg.alpha + cfg.beta) / int_pow(cfg.x, i.k) - cfg.x * cfg.X(cfg.beta - cfg.alpha)

    _add(Identity(
        "lemma-2.1-particular", "lem.u4bqbkc", f"y sum_j Y_(alpha j)/x^j = X_(k alpha+beta)/x^k - x X_(beta-alpha)  [{l21}]",
        ("r", "k"), l21_part_lhs, l21_part_rhs,
        general="lemma-2.1", to_general=_map(m=lambda i: i.k * i.r + 2 * i.r + 1),
    ))
    _add(Identity(
        "lemma-2.1-t347olg", "eq.t347olg", f"y sum_j x^j Y_(m-beta-j alpha) = X_m - x^(k+1) X_(m-(k+1)alpha)  [{l21}]",
        ("m", "r", "k"),
        lambda c, i: lemmas.lemma1_equiv_sum(_lemma21_cfg(c, i), i.m, i.k),
        lambda c, i: lemmas.lemma1_equiv_closed(_lemma21_cfg(c, i), i.m, i.k),
    ))

    def l21_eq_part_lhs(c, i):
        cfg = _lemma21_cfg(c, i)
        return cfg.y * _ws(cfg.Y, 0, -cfg.alpha, cfg.x, i.k)

    def l21_eq_part_rhs(c, i):
        cfg = _lemma21_cfg(c, i)
        return cfg.X(cfg.beta) - int_pow(cfg.x, i.k + 1) * cfg.X(cfg.beta - (i.k + 1) * cfg.alpha)

    _add(Identity(
        "lemma-2.1-t347olg-particular", "eq.t347olg", f"y sum_j x^j Y_(-j alpha) = X_beta - x^(k+1) X_(beta-(k+1)alpha)  [{l21}]",
        ("r", "k"), l21_eq_part_lhs, l21_eq_part_rhs,
        general="lemma-2.1-t347olg", to_general=_map(m=lambda i: 2 * i.r + 1),
    ))

    l23 = "X=w, alpha=r, beta=-(r+1), (x, y) solved from (p, q)"
    forms = [
        ("lemma-2.3-mxyb9zk", "eq.mxyb9zk", 1, False, "y sum_j X_(m-k alpha-beta+alpha j)/x^j = X_m/x^k - x X_(m-(k+1)alpha)"),
        ("lemma-2.3-cgldajj", "eq.cgldajj", 2, False, "x sum_j X_(m-k beta-alpha+beta j)/y^j = X_m/y^k - y X_(m-(k+1)beta)"),
        ("lemma-2.3-n2n4ec3", "eq.n2n4ec3", 3, False, "sum_j X_(m-(beta-alpha)k+alpha+(beta-alpha)j)/(-y/x)^j = x X_m/(-y/x)^k + y X_(m-(k+1)(beta-alpha))"),
        ("lemma-2.3-c522g7v", "eq.c522g7v", 4, False, "sum_j X_(m-(alpha-beta)k+beta+(alpha-beta)j)/(-x/y)^j = y X_m/(-x/y)^k + x X_(m-(k+1)(alpha-beta))"),
        ("lemma-2.3-awbhgnm", "eq.awbhgnm", 1, True, "y sum_j x^j X_(m-beta-alpha j) = X_m - x^(k+1) X_(m-(k+1)alpha)"),
        ("lemma-2.3-jjikwds", "eq.jjikwds", 2, True, "x sum_j y^j X_(m-alpha-beta j) = X_m - y^(k+1) X_(m-(k+1)beta)"),
        ("lemma-2.3-equiv-3", "lem.s9jfs7n", 3, True, "sum_j X_(m+alpha-(beta-alpha)j)/(-x/y)^j = x X_m + y/(-x/y)^k X_(m-(k+1)(beta-alpha))"),
        ("lemma-2.3-equiv-4", "lem.s9jfs7n", 4, True, "sum_j X_(m+beta-(alpha-beta)j)/(-y/x)^j = y X_m + x/(-y/x)^k X_(m-(k+1)(alpha-beta))"),
    ]
    for ident, anchor, variant, equivalent, formula in forms:
        _add(Identity(
            ident, anchor, f"{formula}  [{l23}]", ("m", "r", "k"),
            partial(_l23_side, lemmas.lemma3_sum, variant, equivalent),
            partial(_l23_side, lemmas.lemma3_closed, variant, equivalent),
        ))

    # the particular cases, written out directly
    def cfg23(c, i):
        return _lemma23_cfg(c, i)

    def p1_lhs(c, i):
        g = cfg23(c, i)
        return g.y * _ws(g.X, 0, g.alpha, _inv(g.x), i.k)

    def p1_rhs(c, i):
        g = cfg23(c, i)
        return g.X(i.k * g.alpha + g.beta) / int_pow(g.x, i.k) - g.x * g.X(g.beta - g.alpha)

    def p2_lhs(c, i):
        g = cfg23(c, i)
        return g.x * _ws(g.X, 0, g.beta, _inv(g.y), i.k)

    def p2_rhs(c, i):
        g = cfg23(c, i)
        return g.X(i.k * g.beta + g.alpha) / int_pow(g.y, i.k) - g.y * g.X(g.alpha - g.beta)

    def p3_lhs(c, i):
        g = cfg23(c, i)
        return _ws(g.X, 0, g.beta - g.alpha, _inv(-g.y / g.x), i.k)

    def p3_rhs(c, i):
        g = cfg23(c, i)
        d = g.beta - g.alpha
        return g.x * g.X(d * i.k - g.alpha) / int_pow(-g.y / g.x, i.k) + g.y * g.X(-g.beta)

    def p4_lhs(c, i):
        g = cfg23(c, i)
        return _ws(g.X, 0, g.alpha - g.beta, _inv(-g.x / g.y), i.k)

    def p4_rhs(c, i):
        g = cfg23(c, i)
        d = g.alpha - g.beta
        return g.y * g.X(d * i.k - g.beta) / int_pow(-g.x / g.y, i.k) + g.x * g.X(-g.alpha)

    def e1_lhs(c, i):
        g = cfg23(c, i)
        return g.y * _ws(g.X, 0, -g.alpha, g.x, i.k)

    def e1_rhs(c, i):
        g = cfg23(c, i)
        return g.X(g.beta) - int_pow(g.x, i.k + 1) * g.X(g.beta - (i.k + 1) * g.alpha)

    def e2_lhs(c, i):
        g = cfg23(c, i)
        return g.x * _ws(g.X, 0, -g.beta, g.y, i.k)

    def e2_rhs(c, i):
        g = cfg23(c, i)
        return g.X(g.alpha) - int_pow(g.y, i.k + 1) * g.X(g.alpha - (i.k + 1) * g.beta)

    def e3_lhs(c, i):
        g = cfg23(c, i)
        return _ws(g.X, 0, g.alpha - g.beta, _inv(-g.x / g.y), i.k)

    def e3_rhs(c, i):
        g = cfg23(c, i)
        return g.x * g.X(-g.alpha) + g.y / int_pow(-g.x / g.y, i.k) * g.X(i.k * (g.alpha - g.beta) - g.beta)

    def e4_lhs(c, i):
        g = cfg23(c, i)
        return _ws(g.X, 0, g.beta - g.alpha, _inv(-g.y / g.x), i.k)

    def e4_rhs(c, i):
        g = cfg23(c, i)
        return g.y * g.X(-g.beta) + g.x / int_pow(-g.y / g.x, i.k) * g.X(i.k * (g.beta - g.alpha) - g.alpha)

    def m_of(fn):
        # fn(alpha, beta, k) -> m of the general form
        return _map(m=lambda i: fn(*_lemma23_ab(i.r), i.k))

    particulars = [
        ("lemma-2.3-mxyb9zk", p1_lhs, p1_rhs, "y sum_j X_(alpha j)/x^j = X_(k alpha+beta)/x^k - x X_(beta-alpha)", lambda a, b, k: k * a + b),
        ("lemma-2.3-cgldajj", p2_lhs, p2_rhs, "x sum_j X_(beta j)/y^j = X_(k beta+alpha)/y^k - y X_(alpha-beta)", lambda a, b, k: k * b + a),
        ("lemma-2.3-n2n4ec3", p3_lhs, p3_rhs, "sum_j X_((beta-alpha)j)/(-y/x)^j = x X_((beta-alpha)k-alpha)/(-y/x)^k + y X_(-beta)", lambda a, b, k: (b - a) * k - a),
        ("lemma-2.3-c522g7v", p4_lhs, p4_rhs, "sum_j X_((alpha-beta)j)/(-x/y)^j = y X_((alpha-beta)k-beta)/(-x/y)^k + x X_(-alpha)", lambda a, b, k: (a - b) * k - b),
        ("lemma-2.3-awbhgnm", e1_lhs, e1_rhs, "y sum_j x^j X_(-alpha j) = X_beta - x^(k+1) X_(beta-(k+1)alpha)", lambda a, b, k: b),
        ("lemma-2.3-jjikwds", e2_lhs, e2_rhs, "x sum_j y^j X_(-beta j) = X_alpha - y^(k+1) X_(alpha-(k+1)beta)", lambda a, b, k: a),
        ("lemma-2.3-equiv-3", e3_lhs, e3_rhs, "sum_j X_((alpha-beta)j)/(-x/y)^j = x X_(-alpha) + y/(-x/y)^k X_(k(alpha-beta)-beta)", lambda a, b, k: -a),
        ("lemma-2.3-equiv-4", e4_lhs, e4_rhs, "sum_j X_((beta-alpha)j)/(-y/x)^j = y X_(-beta) + x/(-y/x)^k X_(k(beta-alpha)-alpha)", lambda a, b, k: -b),
    ]
    for general, lhs, rhs, formula, mfn in particulars:
        _add(Identity(
            f"{general}-particular", _REGISTRY[general].anchor, f"{formula}  [{l23}]", ("r", "k"), lhs, rhs,
            general=general, to_general=m_of(mfn),
        ))

    l25 = "X=w, alpha=r, beta=r+2, (x, y) solved from (p, q)"
    bforms = [
        ("lemma-2.5-nrzg4pd", "eq.nrzg4pd", 1, "sum_j C(k,j) (x/y)^j X_(m-k beta+(beta-alpha)j) = X_m/y^k"),
        ("lemma-2.5-h6kcv7w", "eq.h6kcv7w", 2, "sum_j C(k,j) X_(m+(alpha-beta)k+beta j)/(-y)^j = (-x/y)^k X_m"),
        ("lemma-2.5-fnwrzi3", "eq.fnwrzi3", 3, "sum_j C(k,j) X_(m+(beta-alpha)k+alpha j)/(-x)^j = (-y/x)^k X_m"),
        ("lemma-2.5-swapped", "lem.i84yg3s", 4, "sum_j C(k,j) (y/x)^j X_(m-k alpha+(alpha-beta)j) = X_m/x^k"),
    ]
    for ident, anchor, variant, formula in bforms:
        _add(Identity(
            ident, anchor, f"{formula}  [{l25}]", ("m", "r", "k"),
            partial(_l25_side, lemmas.lemma5_sum, variant),
            partial(_l25_side, lemmas.lemma5_closed, variant),
        ))

    def b1_lhs(c, i):
        g = _lemma25_cfg(c, i)
        return _ws(g.X, 0, g.beta - g.alpha, g.x / g.y, i.k, binomial=True)

    def b1_rhs(c, i):
        g = _lemma25_cfg(c, i)
        return g.X(i.k * g.beta) / int_pow(g.y, i.k)

    def b2_lhs(c, i):
        g = _lemma25_cfg(c, i)
        return _ws(g.X, 0, g.beta, _inv(-g.y), i.k, binomial=True)

    def b2_rhs(c, i):
        g = _lemma25_cfg(c, i)
        return int_pow(-g.x / g.y, i.k) * g.X((g.beta - g.alpha) * i.k)

    def b3_lhs(c, i):
        g = _lemma25_cfg(c, i)
        return _ws(g.X, 0, g.alpha, _inv(-g.x), i.k, binomial=True)

    def b3_rhs(c, i):
        g = _lemma25_cfg(c, i)
        return int_pow(-g.y / g.x, i.k) * g.X((g.alpha - g.beta) * i.k)

    def b4_lhs(c, i):
        g = _lemma25_cfg(c, i)
        return _ws(g.X, 0, g.alpha - g.beta, g.y / g.x, i.k, binomial=True)

    def b4_rhs(c, i):
        g = _lemma25_cfg(c, i)
        return g.X(i.k * g.alpha) / int_pow(g.x, i.k)

    bparts = [
        ("lemma-2.5-nrzg4pd", b1_lhs, b1_rhs, "sum_j C(k,j) (x/y)^j X_((beta-alpha)j) = X_(k beta)/y^k", lambda a, b, k: k * b),
        ("lemma-2.5-h6kcv7w", b2_lhs, b2_rhs, "sum_j C(k,j) X_(beta j)/(-y)^j = (-x/y)^k X_((beta-alpha)k)", lambda a, b, k: (b - a) * k),
        ("lemma-2.5-fnwrzi3", b3_lhs, b3_rhs, "sum_j C(k,j) X_(alpha j)/(-x)^j = (-y/x)^k X_((alpha-beta)k)", lambda a, b, k: (a - b) * k),
        ("lemma-2.5-swapped", b4_lhs, b4_rhs, "sum_j C(k,j) (y/x)^j X_((alpha-beta)j) = X_(k alpha)/x^k", lambda a, b, k: k * a),
    ]
    for general, lhs, rhs, formula, mfn in bparts:
        _add(Identity(
            f"{general}-particular", _REGISTRY[general].anchor, f"{formula}  [{l25}]", ("r", "k"), lhs, rhs,
            general=general, to_general=_map(m=partial(_m25, mfn)),
        ))


def _m25(mfn, i):
    return mfn(*_lemma25_ab(i.r), i.k)


def _l23_side(fn, variant, equivalent, c, i):
    return fn(_lemma23_cfg(c, i), variant, i.m, i.k, equivalent)


def _l25_side(fn, variant, c, i):
    return fn(_lemma25_cfg(c, i), variant, i.m, i.k)


# -- theorems over w, u, v ------------------------------------------------------------

def _xvb_ratio(c, i):
    # w_r / (q w_{r-1})
    return c.w(i.r) / (c.q * c.w(i.r - 1))


def _theorem_xvb2v42():
    w_r1 = (("w_{r-1}!=0", lambda c, i: c.w(i.r - 1)),)
    _add(Identity(
        "thm-xvb2v42", "thm.xvb2v42",
        "sum_j (w_r/(q w_{r-1}))^j w_{m+r-k+j} = (w_r/(q w_{r-1}))^k u_m w_r - q u_{m-k-1} w_{r-1}", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m + i.r - i.k, 1, _xvb_ratio(c, i), i.k),
        lambda c, i: int_pow(_xvb_ratio(c, i), i.k) * c.u(i.m) * c.w(i.r) - c.q * c.u(i.m - i.k - 1) * c.w(i.r - 1),
        nonzero=w_r1,
        lemma=lambda c, i: Instantiation(c.config("fundamental", i.r), "2.1", 1, i.m, i.k, scale=c.w(i.r)),
    ))
    _add(Identity(
        "thm-xvb2v42-particular", "thm.xvb2v42",
        "q^{r-1} sum_j (w_r/(q w_{r-1}))^j w_j = (w_r/(q w_{r-1}))^k q^{r-1} u_{k-r} w_r + u_{r-1} w_{r-1}", ("r", "k"),
        lambda c, i: c.qpow(i.r - 1) * _ws(c.w, 0, 1, _xvb_ratio(c, i), i.k),
        lambda c, i: int_pow(_xvb_ratio(c, i), i.k) * c.qpow(i.r - 1) * c.u(i.k - i.r) * c.w(i.r) + c.u(i.r - 1) * c.w(i.r - 1),
        nonzero=w_r1, general="thm-xvb2v42",
        to_general=lambda c, i: (i._replace(m=i.k - i.r), c.qpow(i.r - 1)),
    ))

    def display(name, S, params, lead):
        # lead: the sequence standing in for u_m (F_{m+1} or P_{m+1})
        def rho(c, i):
            return -S(c)(i.r) / S(c)(i.r - 1)

        nz = ((f"{name[0].upper()}_{{r-1}}!=0", lambda c, i: S(c)(i.r - 1)),)
        _add(Identity(
            f"thm-xvb2v42-{name}", "thm.xvb2v42",
            f"sum_j (-1)^j (S_r/S_(r-1))^j S_(m+r-k+j) = (-1)^k (S_r/S_(r-1))^k T_(m+1) S_r + T_(m-k) S_(r-1), S={name}",
            ("m", "r", "k"),
            lambda c, i: _ws(S(c), i.m + i.r - i.k, 1, rho(c, i), i.k),
            lambda c, i: int_pow(rho(c, i), i.k) * lead(c)(i.m + 1) * S(c)(i.r) + lead(c)(i.m - i.k) * S(c)(i.r - 1),
            nonzero=nz, applies=_is(params), family=name, general="thm-xvb2v42", to_general=_same,
        ))
        _add(Identity(
            f"thm-xvb2v42-{name}-particular", "thm.xvb2v42",
            f"sum_j (-1)^j (S_r/S_(r-1))^j S_(r+j) = (-1)^k (S_r/S_(r-1))^k T_(k+1) S_r, S={name}", ("r", "k"),
            lambda c, i: _ws(S(c), i.r, 1, rho(c, i), i.k),
            lambda c, i: int_pow(rho(c, i), i.k) * lead(c)(i.k + 1) * S(c)(i.r),
            nonzero=nz, applies=_is(params), family=name, general="thm-xvb2v42", to_general=_map(m=lambda i: i.k),
        ))

    fib = lambda c: c.F  # noqa: E731
    display("fibonacci", fib, FIBONACCI, fib)
    display("lucas", lambda c: c.L, LUCAS, fib)
    display("pell", lambda c: c.P, PELL, lambda c: c.P)


def _ybo_weight(c, i):
    # 1 / (w_n / w_{n-r})
    return c.w(i.n - i.r) / c.w(i.n)


def _theorem_ybopnqn():
    nz = (("w_n!=0", lambda c, i: c.w(i.n)), ("w_{n-r}!=0", lambda c, i: c.w(i.n - i.r)))
    _add(Identity(
        "thm-ybopnqn", "thm.ybopnqn",
        "q^{n-r} e u_{r-1} sum_j u_{m-(n+1)-kr+rj}/(w_n/w_{n-r})^j = w_m w_{n-r}/(w_n/w_{n-r})^k - w_n w_{m-(k+1)r}",
        ("m", "n", "r", "k"),
        lambda c, i: c.qpow(i.n - i.r) * c.e * c.u(i.r - 1) * _ws(c.u, i.m - (i.n + 1) - i.k * i.r, i.r, _ybo_weight(c, i), i.k),
        lambda c, i: c.w(i.m) * c.w(i.n - i.r) * int_pow(_ybo_weight(c, i), i.k) - c.w(i.n) * c.w(i.m - (i.k + 1) * i.r),
        nonzero=nz,
        lemma=lambda c, i: Instantiation(c.config("product", i.n, i.r), "2.1", 1, i.m, i.k, scale=c.w(i.n - i.r)),
    ))
    _add(Identity(
        "eq-ndpr9xm", "eq.ndpr9xm",
        "q^{n-r} e u_{r-1} sum_j u_{rj}/(w_n/w_{n-r})^j = w_{n+kr+1} w_{n-r}/(w_n/w_{n-r})^k - w_n w_{n-r+1}",
        ("n", "r", "k"),
        lambda c, i: c.qpow(i.n - i.r) * c.e * c.u(i.r - 1) * _ws(c.u, 0, i.r, _ybo_weight(c, i), i.k),
        lambda c, i: c.w(i.n + i.k * i.r + 1) * c.w(i.n - i.r) * int_pow(_ybo_weight(c, i), i.k) - c.w(i.n) * c.w(i.n - i.r + 1),
        nonzero=nz, general="thm-ybopnqn", to_general=_map(m=lambda i: i.n + 1 + i.k * i.r),
    ))

    def g_lhs(c, i):
        g0, g1 = c.a, c.b
        weight = c.w(i.n - i.r) / c.w(i.n)
        sign = -1 if (i.n - i.r) % 2 else 1
        return sign * (g0 * g1 + g0 * g0 - g1 * g1) * c.F(i.r) * _ws(c.F, 1, i.r, weight, i.k)

    def g_rhs(c, i):
        weight = c.w(i.n - i.r) / c.w(i.n)
        return c.w(i.n + i.k * i.r + 1) * c.w(i.n - i.r) * int_pow(weight, i.k) - c.w(i.n) * c.w(i.n - i.r + 1)

    _add(Identity(
        "eq-ndpr9xm-g", "eq.ndpr9xm",
        "(-1)^{n-r} (G_0 G_1 + G_0^2 - G_1^2) F_r sum_j F_{rj+1}/(G_n/G_{n-r})^j = G_{n+kr+1} G_{n-r}/(G_n/G_{n-r})^k - G_n G_{n-r+1}",
        ("n", "r", "k"), g_lhs, g_rhs,
        nonzero=(("G_n!=0", lambda c, i: c.w(i.n)), ("G_{n-r}!=0", lambda c, i: c.w(i.n - i.r))),
        applies=_gibonacci, family="g", general="eq-ndpr9xm", to_general=_same,
    ))

    def special(name, S, params, lead_sign, lead_pow):
        # lead_sign(n, r) * lead_pow(n - r) * S_r * sum_j S_{rj+1} / (S_n/S_{n-r})^j
        def lhs(c, i):
            seq = S(c)
            weight = seq(i.n - i.r) / seq(i.n)
            return lead_sign(i) * lead_pow(i.n - i.r) * seq(i.r) * _ws(seq, 1, i.r, weight, i.k)

        def rhs(c, i):
            seq = S(c)
            weight = seq(i.n - i.r) / seq(i.n)
            return seq(i.n + i.k * i.r + 1) * seq(i.n - i.r) * int_pow(weight, i.k) - seq(i.n) * seq(i.n - i.r + 1)

        letter = name[0].upper()
        return lhs, rhs, ((f"{letter}_n!=0", lambda c, i: S(c)(i.n)), (f"{letter}_{{n-r}}!=0", lambda c, i: S(c)(i.n - i.r)))

    def odd_sign(i):
        return -1 if (i.n - i.r - 1) % 2 else 1

    lhs, rhs, nz_p = special("pell", lambda c: c.P, PELL, odd_sign, lambda e: ONE)
    _add(Identity(
        "eq-ndpr9xm-pell", "eq.ndpr9xm",
        "(-1)^{n-r-1} P_r sum_j P_{rj+1}/(P_n/P_{n-r})^j = P_{n+kr+1} P_{n-r}/(P_n/P_{n-r})^k - P_n P_{n-r+1}",
        ("n", "r", "k"), lhs, rhs, nonzero=nz_p,
        applies=_is(PELL), family="pell", general="eq-ndpr9xm", to_general=_same,
    ))
    lhs, rhs, nz_j = special("jacobsthal", lambda c: c.J, JACOBSTHAL, odd_sign, lambda e: int_pow(GaussianRational(2), e))
    _add(Identity(
        "eq-ndpr9xm-jacobsthal", "eq.ndpr9xm",
        "(-1)^{n-r-1} 2^{n-r} J_r sum_j J_{rj+1}/(J_n/J_{n-r})^j = J_{n+kr+1} J_{n-r}/(J_n/J_{n-r})^k - J_n J_{n-r+1}",
        ("n", "r", "k"), lhs, rhs, nonzero=nz_j,
        applies=_is(JACOBSTHAL), family="jacobsthal", general="eq-ndpr9xm", to_general=_same,
    ))


def _theorem_m4yo6a8():
    _add(Identity(
        "thm-m4yo6a8-vybd467", "eq.vybd467",
        "q u_r^k u_{r-1} sum_j w_{m-kr-r-1+rj}/u_r^j = u_r^{k+1} w_{m-kr-r} - w_m", ("m", "r", "k"),
        lambda c, i: c.q * int_pow(c.u(i.r), i.k) * c.u(i.r - 1) * _ws(c.w, i.m - i.k * i.r - i.r - 1, i.r, _inv(c.u(i.r)), i.k),
        lambda c, i: int_pow(c.u(i.r), i.k + 1) * c.w(i.m - i.k * i.r - i.r) - c.w(i.m),
        exclude=_excluding("r", -1), nonzero=(("u_r!=0", lambda c, i: c.u(i.r)),),
        lemma=lambda c, i: Instantiation(c.config("shift", i.r), "2.3", 1, i.m, i.k, scale=-int_pow(c.u(i.r), i.k)),
    ))
    _add(Identity(
        "thm-m4yo6a8-vwqo0w9", "eq.vwqo0w9",
        "u_{r-1} sum_j w_{m-kr-r+1+rj}/(-q u_{r-2})^j = w_m/(-q u_{r-2})^k + q u_{r-2} w_{m-(k+1)r}", ("m", "r", "k"),
        lambda c, i: c.u(i.r - 1) * _ws(c.w, i.m - i.k * i.r - i.r + 1, i.r, _inv(-c.q * c.u(i.r - 2)), i.k),
        lambda c, i: c.w(i.m) / int_pow(-c.q * c.u(i.r - 2), i.k) + c.q * c.u(i.r - 2) * c.w(i.m - (i.k + 1) * i.r),
        exclude=_excluding("r", 1), nonzero=(("u_{r-2}!=0", lambda c, i: c.u(i.r - 2)),),
        lemma=lambda c, i: Instantiation(c.config("shift", i.r - 1), "2.3", 2, i.m, i.k),
    ))
    _add(Identity(
        "thm-m4yo6a8-utwljqu", "eq.utwljqu",
        "sum_j w_{m-k+r+j}/(q u_{r-1}/u_r)^j = u_r w_m/(q u_{r-1}/u_r)^k - q u_{r-1} w_{m-k-1}", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m - i.k + i.r, 1, c.u(i.r) / (c.q * c.u(i.r - 1)), i.k),
        lambda c, i: c.u(i.r) * c.w(i.m) / int_pow(c.q * c.u(i.r - 1) / c.u(i.r), i.k) - c.q * c.u(i.r - 1) * c.w(i.m - i.k - 1),
        exclude=_excluding("r", 0), nonzero=(("u_{r-1}!=0", lambda c, i: c.u(i.r - 1)), ("u_r!=0", lambda c, i: c.u(i.r))),
        lemma=lambda c, i: Instantiation(c.config("shift", i.r), "2.3", 3, i.m, i.k),
    ))
    _add(Identity(
        "thm-m4yo6a8-vybd467-particular", "eq.vybd467",
        "q u_r^k u_{r-1} sum_j w_{rj}/u_r^j = b u_r^{k+1} - w_{kr+r+1}", ("r", "k"),
        lambda c, i: c.q * int_pow(c.u(i.r), i.k) * c.u(i.r - 1) * _ws(c.w, 0, i.r, _inv(c.u(i.r)), i.k),
        lambda c, i: c.b * int_pow(c.u(i.r), i.k + 1) - c.w(i.k * i.r + i.r + 1),
        exclude=_excluding("r", -1), nonzero=(("u_r!=0", lambda c, i: c.u(i.r)),),
        general="thm-m4yo6a8-vybd467", to_general=_map(m=lambda i: i.k * i.r + i.r + 1),
    ))
    _add(Identity(
        "thm-m4yo6a8-vwqo0w9-particular", "eq.vwqo0w9",
        "u_{r-1} sum_j w_{rj}/(-q u_{r-2})^j = w_{kr+r-1}/(-q u_{r-2})^k + (ap-b) u_{r-2}", ("r", "k"),
        lambda c, i: c.u(i.r - 1) * _ws(c.w, 0, i.r, _inv(-c.q * c.u(i.r - 2)), i.k),
        lambda c, i: c.w(i.k * i.r + i.r - 1) / int_pow(-c.q * c.u(i.r - 2), i.k) + (c.a * c.p - c.b) * c.u(i.r - 2),
        exclude=_excluding("r", 1), nonzero=(("u_{r-2}!=0", lambda c, i: c.u(i.r - 2)),),
        general="thm-m4yo6a8-vwqo0w9", to_general=_map(m=lambda i: i.k * i.r + i.r - 1),
    ))
    _add(Identity(
        "eq-btkvoap", "eq.btkvoap",
        "sum_j w_j/(q u_{r-1}/u_r)^j = u_r w_{k-r}/(q u_{r-1}/u_r)^k - (1/q^r) (a u_{r+1} - b u_r)/(a u_{r+1} + (b-pa) u_r) u_{r-1} w_{r+1}",
        ("r", "k"),
        lambda c, i: _ws(c.w, 0, 1, c.u(i.r) / (c.q * c.u(i.r - 1)), i.k),
        lambda c, i: (c.u(i.r) * c.w(i.k - i.r) / int_pow(c.q * c.u(i.r - 1) / c.u(i.r), i.k)
                      - c.ratio(i.r + 1) * c.u(i.r - 1) * c.w(i.r + 1) / c.qpow(i.r)),
        exclude=_excluding("r", 0), nonzero=(("u_{r-1}!=0", lambda c, i: c.u(i.r - 1)), ("u_r!=0", lambda c, i: c.u(i.r))),
        general="thm-m4yo6a8-utwljqu", to_general=_map(m=lambda i: i.k - i.r),
    ))

    def g_rhs(c, i):
        F, G = c.F, c.w
        g0, g1 = c.a, c.b
        ratio = (F(i.r + 2) * g0 - F(i.r + 1) * g1) / (F(i.r + 2) * g0 + F(i.r + 1) * (g1 - g0))
        sign_k = -1 if i.k % 2 else 1
        sign_r = -1 if i.r % 2 else 1
        return (sign_k * F(i.r + 1) / int_pow(F(i.r) / F(i.r + 1), i.k) * G(i.k - i.r)
                - sign_r * ratio * F(i.r) * G(i.r + 1))

    _add(Identity(
        "eq-btkvoap-g", "eq.btkvoap",
        "sum_j (-1)^j G_j/(F_r/F_{r+1})^j = (-1)^k F_{r+1}/(F_r/F_{r+1})^k G_{k-r} - (-1)^r (F_{r+2}G_0 - F_{r+1}G_1)/(F_{r+2}G_0 + F_{r+1}(G_1-G_0)) F_r G_{r+1}",
        ("r", "k"),
        lambda c, i: _ws(c.w, 0, 1, -c.F(i.r + 1) / c.F(i.r), i.k),
        g_rhs,
        exclude=_excluding("r", 0),
        nonzero=(("F_r!=0", lambda c, i: c.F(i.r)), ("F_{r+1}!=0", lambda c, i: c.F(i.r + 1)),
                 ("F_{r+2}G_0+F_{r+1}(G_1-G_0)!=0", lambda c, i: c.F(i.r + 2) * c.a + c.F(i.r + 1) * (c.b - c.a))),
        applies=_gibonacci, family="g", general="eq-btkvoap", to_general=_same,
    ))

    def p_rhs(c, i):
        P = c.P
        sign_k = -1 if i.k % 2 else 1
        sign_r = -1 if i.r % 2 else 1
        return sign_k * P(i.r + 1) * P(i.k - i.r) / int_pow(P(i.r) / P(i.r + 1), i.k) + sign_r * P(i.r) * P(i.r + 1)

    _add(Identity(
        "eq-btkvoap-pell", "eq.btkvoap",
        "sum_j (-1)^j P_j/(P_r/P_{r+1})^j = (-1)^k P_{r+1} P_{k-r}/(P_r/P_{r+1})^k + (-1)^r P_r P_{r+1}", ("r", "k"),
        lambda c, i: _ws(c.P, 0, 1, -c.P(i.r + 1) / c.P(i.r), i.k),
        p_rhs,
        exclude=_excluding("r", 0),
        nonzero=(("P_r!=0", lambda c, i: c.P(i.r)), ("P_{r+1}!=0", lambda c, i: c.P(i.r + 1))),
        applies=_is(PELL), family="pell", general="eq-btkvoap", to_general=_same,
    ))

    def j_rhs(c, i):
        J = c.J
        two = GaussianRational(2)
        return (int_pow(-1 / two, i.k) * J(i.r + 1) * J(i.k - i.r) / int_pow(J(i.r) / J(i.r + 1), i.k)
                + int_pow(-1 / two, i.r) * J(i.r) * J(i.r + 1))

    _add(Identity(
        "eq-btkvoap-jacobsthal", "eq.btkvoap",
        "sum_j ((-1)^j/2^j) J_j/(J_r/J_{r+1})^j = ((-1)^k/2^k) J_{r+1} J_{k-r}/(J_r/J_{r+1})^k + ((-1)^r/2^r) J_r J_{r+1}",
        ("r", "k"),
        lambda c, i: _ws(c.J, 0, 1, -c.J(i.r + 1) / (2 * c.J(i.r)), i.k),
        j_rhs,
        exclude=_excluding("r", 0),
        nonzero=(("J_r!=0", lambda c, i: c.J(i.r)), ("J_{r+1}!=0", lambda c, i: c.J(i.r + 1))),
        applies=_is(JACOBSTHAL), family="jacobsthal", general="eq-btkvoap", to_general=_same,
    ))


def _theorem_yng8u8b():
    vr = (("v_r!=0", lambda c, i: c.v(i.r)),)

    def base(c, i):
        # q^r / v_r
        return c.qpow(i.r) / c.v(i.r)

    _add(Identity(
        "thm-yng8u8b-u5k6v3w", "eq.u5k6v3w",
        "sum_j w_{m-kr+r+rj}/(q^r/v_r)^j = v_r w_m/(q^r/v_r)^k - q^r w_{m-(k+1)r}", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m - i.k * i.r + i.r, i.r, _inv(base(c, i)), i.k),
        lambda c, i: c.v(i.r) * c.w(i.m) / int_pow(base(c, i), i.k) - c.qpow(i.r) * c.w(i.m - (i.k + 1) * i.r),
        nonzero=vr,
        lemma=lambda c, i: Instantiation(c.config("reflection", i.r), "2.3", 2, i.m, i.k, scale=c.v(i.r)),
    ))
    _add(Identity(
        "thm-yng8u8b-x6yh3ef", "eq.x6yh3ef",
        "v_r^k q^r sum_j w_{m-r+rj}/v_r^j = v_r^{k+1} w_m - w_{m+(k+1)r}", ("m", "r", "k"),
        lambda c, i: int_pow(c.v(i.r), i.k) * c.qpow(i.r) * _ws(c.w, i.m - i.r, i.r, _inv(c.v(i.r)), i.k),
        lambda c, i: int_pow(c.v(i.r), i.k + 1) * c.w(i.m) - c.w(i.m + (i.k + 1) * i.r),
        nonzero=vr,
        lemma=lambda c, i: Instantiation(c.config("reflection", i.r), "2.3", 1, i.m, i.k, equivalent=True,
                                         scale=int_pow(c.v(i.r), i.k + 1)),
    ))
    _add(Identity(
        "thm-yng8u8b-is4vgui", "eq.is4vgui",
        "v_r sum_j w_{m-2kr-r+2rj}/(-q^r)^j = w_m/(-q^r)^k + q^r w_{m-(k+1)2r}", ("m", "r", "k"),
        lambda c, i: c.v(i.r) * _ws(c.w, i.m - 2 * i.k * i.r - i.r, 2 * i.r, _inv(-c.qpow(i.r)), i.k),
        lambda c, i: c.w(i.m) / int_pow(-c.qpow(i.r), i.k) + c.qpow(i.r) * c.w(i.m - (i.k + 1) * 2 * i.r),
        lemma=lambda c, i: Instantiation(c.config("reflection", i.r), "2.3", 3, i.m, i.k, scale=c.v(i.r)),
    ))
    _add(Identity(
        "thm-yng8u8b-u5k6v3w-particular", "eq.u5k6v3w",
        "sum_j w_{rj}/(q^r/v_r)^j = v_r w_{kr-r}/(q^r/v_r)^k - (1/q^r) (a u_{2r} - b u_{2r-1})/(a u_{2r} + (b-pa) u_{2r-1}) w_{2r}",
        ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, _inv(base(c, i)), i.k),
        lambda c, i: c.v(i.r) * c.w(i.k * i.r - i.r) / int_pow(base(c, i), i.k) - c.ratio(2 * i.r) * c.w(2 * i.r) / c.qpow(i.r),
        nonzero=vr, general="thm-yng8u8b-u5k6v3w", to_general=_map(m=lambda i: i.k * i.r - i.r),
    ))
    _add(Identity(
        "thm-yng8u8b-x6yh3ef-particular", "eq.x6yh3ef",
        "v_r^k q^r sum_j w_{rj}/v_r^j = v_r^{k+1} w_r - w_{(k+2)r}", ("r", "k"),
        lambda c, i: int_pow(c.v(i.r), i.k) * c.qpow(i.r) * _ws(c.w, 0, i.r, _inv(c.v(i.r)), i.k),
        lambda c, i: int_pow(c.v(i.r), i.k + 1) * c.w(i.r) - c.w((i.k + 2) * i.r),
        nonzero=vr, general="thm-yng8u8b-x6yh3ef", to_general=_map(m=lambda i: i.r),
    ))
    _add(Identity(
        "thm-yng8u8b-is4vgui-particular", "eq.is4vgui",
        "v_r sum_j w_{2rj}/(-q^r)^j = w_{(2k+1)r}/(-q^r)^k + (a u_r - b u_{r-1})/(a u_r + (b-pa) u_{r-1}) w_r", ("r", "k"),
        lambda c, i: c.v(i.r) * _ws(c.w, 0, 2 * i.r, _inv(-c.qpow(i.r)), i.k),
        lambda c, i: c.w((2 * i.k + 1) * i.r) / int_pow(-c.qpow(i.r), i.k) + c.ratio(i.r) * c.w(i.r),
        general="thm-yng8u8b-is4vgui", to_general=_map(m=lambda i: (2 * i.k + 1) * i.r),
    ))


def _theorem_g1ihfq5():
    _add(Identity(
        "thm-binomial-f9x35z3", "eq.f9x35z3",
        "(-q u_{r-1})^k sum_j C(k,j) (-u_r/(q u_{r-1}))^j w_{m-k(r+1)+j} = w_m", ("m", "r", "k"),
        lambda c, i: int_pow(-c.q * c.u(i.r - 1), i.k) * _ws(c.w, i.m - i.k * (i.r + 1), 1, -c.u(i.r) / (c.q * c.u(i.r - 1)), i.k, True),
        lambda c, i: c.w(i.m),
        exclude=_excluding("r", 0), nonzero=(("u_{r-1}!=0", lambda c, i: c.u(i.r - 1)),),
        lemma=lambda c, i: Instantiation(c.config("shift", i.r), "2.5", 1, i.m, i.k,
                                         scale=int_pow(-c.q * c.u(i.r - 1), i.k)),
    ))
    _add(Identity(
        "thm-binomial-r5w2cg1", "eq.r5w2cg1",
        "sum_j C(k,j) w_{m-k+rj}/(q u_{r-2})^j = (u_{r-1}/(q u_{r-2}))^k w_m", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m - i.k, i.r, _inv(c.q * c.u(i.r - 2)), i.k, True),
        lambda c, i: int_pow(c.u(i.r - 1) / (c.q * c.u(i.r - 2)), i.k) * c.w(i.m),
        exclude=_excluding("r", 1), nonzero=(("u_{r-2}!=0", lambda c, i: c.u(i.r - 2)),),
        lemma=lambda c, i: Instantiation(c.config("shift", i.r - 1), "2.5", 2, i.m, i.k),
    ))
    _add(Identity(
        "thm-binomial-fxtzfk3", "eq.fxtzfk3",
        "sum_j (-1)^j C(k,j) w_{m+k+rj}/u_r^j = (q u_{r-1}/u_r)^k w_m", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m + i.k, i.r, -_inv(c.u(i.r)), i.k, True),
        lambda c, i: int_pow(c.q * c.u(i.r - 1) / c.u(i.r), i.k) * c.w(i.m),
        exclude=_excluding("r", -1), nonzero=(("u_r!=0", lambda c, i: c.u(i.r)),),
        lemma=lambda c, i: Instantiation(c.config("shift", i.r), "2.5", 3, i.m, i.k),
    ))
    _add(Identity(
        "thm-binomial-f9x35z3-particular", "eq.f9x35z3",
        "(-q u_{r-1})^k sum_j C(k,j) (-u_r/(q u_{r-1}))^j w_j = w_{k(r+1)}", ("r", "k"),
        lambda c, i: int_pow(-c.q * c.u(i.r - 1), i.k) * _ws(c.w, 0, 1, -c.u(i.r) / (c.q * c.u(i.r - 1)), i.k, True),
        lambda c, i: c.w(i.k * (i.r + 1)),
        exclude=_excluding("r", 0), nonzero=(("u_{r-1}!=0", lambda c, i: c.u(i.r - 1)),),
        general="thm-binomial-f9x35z3", to_general=_map(m=lambda i: i.k * (i.r + 1)),
    ))
    _add(Identity(
        "eq-wbtbfxw", "eq.wbtbfxw",
        "sum_j C(k,j) w_{rj}/(q u_{r-2})^j = (u_{r-1}/(q u_{r-2}))^k w_k", ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, _inv(c.q * c.u(i.r - 2)), i.k, True),
        lambda c, i: int_pow(c.u(i.r - 1) / (c.q * c.u(i.r - 2)), i.k) * c.w(i.k),
        exclude=_excluding("r", 1), nonzero=(("u_{r-2}!=0", lambda c, i: c.u(i.r - 2)),),
        general="thm-binomial-r5w2cg1", to_general=_map(m=lambda i: i.k),
    ))
    _add(Identity(
        "thm-binomial-fxtzfk3-particular", "eq.fxtzfk3",
        "sum_j (-1)^j C(k,j) w_{rj}/u_r^j = (u_{r-1}/u_r)^k (a u_k - b u_{k-1})/(a u_k + (b-pa) u_{k-1}) w_k", ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, -_inv(c.u(i.r)), i.k, True),
        lambda c, i: int_pow(c.u(i.r - 1) / c.u(i.r), i.k) * c.ratio(i.k) * c.w(i.k),
        exclude=_excluding("r", -1), nonzero=(("u_r!=0", lambda c, i: c.u(i.r)),),
        general="thm-binomial-fxtzfk3", to_general=_map(m=lambda i: -i.k),
    ))

    def display(name, S, params, half):
        # sum_j (-1)^j [2^-j] C(k,j) S_{rj}/S_{r-1}^j = (-1)^k [2^-k] (S_r/S_{r-1})^k S_k
        scale = GaussianRational(1, 0) / 2 if half else ONE

        def lhs(c, i):
            seq = S(c)
            return _ws(seq, 0, i.r, -scale / seq(i.r - 1), i.k, True)

        def rhs(c, i):
            seq = S(c)
            return int_pow(-scale * seq(i.r) / seq(i.r - 1), i.k) * seq(i.k)

        letter = {"g": "G", "pell": "P", "jacobsthal": "J"}[name]
        src = "F" if name == "g" else letter
        nz_seq = (lambda c: c.F) if name == "g" else S
        prefix = "(-1)^j/2^j" if half else "(-1)^j"
        _add(Identity(
            f"eq-wbtbfxw-{name}", "eq.wbtbfxw",
            f"sum_j {prefix} C(k,j) {letter}_(rj)/{src}_(r-1)^j = {prefix.replace('j', 'k')} ({src}_r/{src}_(r-1))^k {letter}_k",
            ("r", "k"),
            lhs if name != "g" else _g_wbt_lhs, rhs if name != "g" else _g_wbt_rhs,
            exclude=_excluding("r", 1),
            nonzero=((f"{src}_{{r-1}}!=0", lambda c, i: nz_seq(c)(i.r - 1)),),
            applies=params, family=name, general="eq-wbtbfxw", to_general=_same,
        ))

    display("g", None, _gibonacci, False)
    display("pell", lambda c: c.P, _is(PELL), False)
    display("jacobsthal", lambda c: c.J, _is(JACOBSTHAL), True)

    _add(Identity(
        "thm-binomial-f9x35z3-vajda", "eq.f9x35z3",
        "sum_j C(k,j) p^j w_{m-2k+j} = w_m  (r=1, q=-1)", ("m", "k"),
        lambda c, i: _ws(c.w, i.m - 2 * i.k, 1, c.p, i.k, True),
        lambda c, i: c.w(i.m),
        applies=_q_minus_one, family="q=-1", general="thm-binomial-f9x35z3", to_general=_map(r=lambda i: 1),
    ))


def _g_wbt_lhs(c, i):
    return _ws(c.w, 0, i.r, -_inv(c.F(i.r - 1)), i.k, True)


def _g_wbt_rhs(c, i):
    return int_pow(-c.F(i.r) / c.F(i.r - 1), i.k) * c.w(i.k)


def _theorem_peyb26i():
    vr = (("v_r!=0", lambda c, i: c.v(i.r)),)
    _add(Identity(
        "thm-peyb26i-e6qnu1m", "eq.e6qnu1m",
        "sum_j C(k,j) w_{m-kr+2rj}/q^{rj} = (v_r/q^r)^k w_m", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m - i.k * i.r, 2 * i.r, _inv(c.qpow(i.r)), i.k, True),
        lambda c, i: int_pow(c.v(i.r) / c.qpow(i.r), i.k) * c.w(i.m),
        lemma=lambda c, i: Instantiation(c.config("reflection", i.r), "2.5", 1, i.m, i.k),
    ))
    _add(Identity(
        "thm-peyb26i-k130vx8", "eq.k130vx8",
        "sum_j C(k,j) (-v_r/q^r)^j w_{m-2kr+rj} = w_m/(-q^r)^k", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m - 2 * i.k * i.r, i.r, -c.v(i.r) / c.qpow(i.r), i.k, True),
        lambda c, i: c.w(i.m) / int_pow(-c.qpow(i.r), i.k),
        lemma=lambda c, i: Instantiation(c.config("reflection", i.r), "2.5", 2, i.m, i.k),
    ))
    _add(Identity(
        "thm-peyb26i-d00yx5i", "eq.d00yx5i",
        "sum_j (-1)^j C(k,j) w_{m+kr+rj}/v_r^j = q^{rk} w_m/v_r^k  (printed with an extra (-1)^k)", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m + i.k * i.r, i.r, -_inv(c.v(i.r)), i.k, True),
        lambda c, i: c.qpow(i.r * i.k) * c.w(i.m) / int_pow(c.v(i.r), i.k),
        nonzero=vr,
        lemma=lambda c, i: Instantiation(c.config("reflection", i.r), "2.5", 3, i.m, i.k,
                                         scale=int_pow(-c.v(i.r), -i.k)),
    ))
    _add(Identity(
        "thm-peyb26i-d00yx5i-printed", "eq.d00yx5i",
        "sum_j (-1)^j C(k,j) w_{m+kr+rj}/v_r^j = (-1)^k q^{rk} w_m/v_r^k  (as printed)", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m + i.k * i.r, i.r, -_inv(c.v(i.r)), i.k, True),
        lambda c, i: (-1) ** i.k * c.qpow(i.r * i.k) * c.w(i.m) / int_pow(c.v(i.r), i.k),
        nonzero=vr, quarantined=True, note="sign wrong for odd k",
    ))
    _add(Identity(
        "thm-peyb26i-e6qnu1m-particular", "eq.e6qnu1m",
        "sum_j C(k,j) w_{2rj}/q^{rj} = (v_r/q^r)^k w_{rk}", ("r", "k"),
        lambda c, i: _ws(c.w, 0, 2 * i.r, _inv(c.qpow(i.r)), i.k, True),
        lambda c, i: int_pow(c.v(i.r) / c.qpow(i.r), i.k) * c.w(i.r * i.k),
        general="thm-peyb26i-e6qnu1m", to_general=_map(m=lambda i: i.k * i.r),
    ))
    _add(Identity(
        "thm-peyb26i-k130vx8-particular", "eq.k130vx8",
        "sum_j C(k,j) (-v_r/q^r)^j w_{rj} = w_{2kr}/(-q^r)^k", ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, -c.v(i.r) / c.qpow(i.r), i.k, True),
        lambda c, i: c.w(2 * i.k * i.r) / int_pow(-c.qpow(i.r), i.k),
        general="thm-peyb26i-k130vx8", to_general=_map(m=lambda i: 2 * i.k * i.r),
    ))
    _add(Identity(
        "eq-xf5dcmx", "eq.xf5dcmx",
        "sum_j (-1)^j C(k,j) w_{rj}/v_r^j = ((a u_{kr} - b u_{kr-1})/(a u_{kr} + (b-pa) u_{kr-1})) w_{kr}/v_r^k  (printed with an extra (-1)^k)",
        ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, -_inv(c.v(i.r)), i.k, True),
        lambda c, i: c.ratio(i.k * i.r) * c.w(i.k * i.r) / int_pow(c.v(i.r), i.k),
        nonzero=vr, general="thm-peyb26i-d00yx5i", to_general=_map(m=lambda i: -i.k * i.r),
    ))
    _add(Identity(
        "eq-xf5dcmx-printed", "eq.xf5dcmx",
        "sum_j (-1)^j C(k,j) w_{rj}/v_r^j = (-1)^k ((a u_{kr} - b u_{kr-1})/(a u_{kr} + (b-pa) u_{kr-1})) w_{kr}/v_r^k  (as printed)",
        ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, -_inv(c.v(i.r)), i.k, True),
        lambda c, i: (-1) ** i.k * c.ratio(i.k * i.r) * c.w(i.k * i.r) / int_pow(c.v(i.r), i.k),
        nonzero=vr, quarantined=True, note="sign wrong for odd k",
    ))

    def g_sign(i):
        return -1 if (i.r % 2 and i.k % 2) else 1

    _add(Identity(
        "thm-peyb26i-e6qnu1m-g", "eq.e6qnu1m",
        "sum_j (-1)^{rj} C(k,j) G_{m-kr+2rj} = (-1)^{rk} L_r^k G_m  (p=1, q=-1)", ("m", "r", "k"),
        lambda c, i: _ws(c.w, i.m - i.k * i.r, 2 * i.r, GaussianRational(-1 if i.r % 2 else 1), i.k, True),
        lambda c, i: g_sign(i) * int_pow(c.L(i.r), i.k) * c.w(i.m),
        applies=_gibonacci, family="g", general="thm-peyb26i-e6qnu1m", to_general=_same,
    ))

    def g_ratio(c, i):
        F = c.F
        kr = i.k * i.r
        g0, g1 = c.a, c.b
        den = F(kr + 1) * g0 + F(kr) * (g1 - g0)
        if den.is_zero():
            raise PreconditionUnmet("F_{kr+1}G_0+F_{kr}(G_1-G_0)!=0")
        return (F(kr + 1) * g0 - F(kr) * g1) / den

    _add(Identity(
        "eq-xf5dcmx-g", "eq.xf5dcmx",
        "sum_j (-1)^j C(k,j) G_{rj}/L_r^j = (F_{kr+1}G_0 - F_{kr}G_1)/(F_{kr+1}G_0 + F_{kr}(G_1-G_0)) G_{kr}/L_r^k  (printed with an extra (-1)^k)",
        ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, -_inv(c.L(i.r)), i.k, True),
        lambda c, i: g_ratio(c, i) * c.w(i.k * i.r) / int_pow(c.L(i.r), i.k),
        applies=_gibonacci, family="g", general="eq-xf5dcmx", to_general=_same,
    ))
    _add(Identity(
        "eq-xf5dcmx-g-printed", "eq.xf5dcmx",
        "sum_j (-1)^j C(k,j) G_{rj}/L_r^j = (-1)^k (F_{kr+1}G_0 - F_{kr}G_1)/(F_{kr+1}G_0 + F_{kr}(G_1-G_0)) G_{kr}/L_r^k  (as printed)",
        ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, -_inv(c.L(i.r)), i.k, True),
        lambda c, i: (-1) ** i.k * g_ratio(c, i) * c.w(i.k * i.r) / int_pow(c.L(i.r), i.k),
        applies=_gibonacci, family="g", quarantined=True, note="sign wrong for odd k",
    ))


def _introduction():
    def horadam_lhs(c, i):
        return int_pow(-c.q, i.n) * _ws(c.w, 0, 1, -c.p / c.q, i.n, True)

    _add(Identity(
        "intro-horadam-binomial", "thm.g1ihfq5",
        "(-q)^n sum_{j=0}^n C(n,j) (-p/q)^j w_j = w_{2n}", ("n",),
        horadam_lhs, lambda c, i: c.w(2 * i.n),
        exclude=_nonneg("n"),
        general="thm-binomial-f9x35z3", to_general=lambda c, i: (Idx(m=2 * i.n, r=1, k=i.n), ONE),
    ))
    _add(Identity(
        "intro-stanica-fibonacci", "thm.peyb26i",
        "sum_{j=0}^n (-1)^j C(n,j) F_j = -F_n", ("n",),
        lambda c, i: _ws(c.F, 0, 1, GaussianRational(-1), i.n, True),
        lambda c, i: -c.F(i.n),
        exclude=_nonneg("n"), applies=_is(FIBONACCI), family="fibonacci",
        general="intro-g-binomial", to_general=lambda c, i: (Idx(r=1, k=i.n), ONE),
    ))

    def g_binom_rhs(c, i):
        F = c.F
        g0, g1 = c.a, c.b
        den = g0 * F(i.k - 1) + g1 * F(i.k)
        if den.is_zero():
            raise PreconditionUnmet("G_0F_{k-1}+G_1F_k!=0")
        ratio = (g0 * F(i.k + 1) - g1 * F(i.k)) / den
        return int_pow(F(i.r) / F(i.r + 1), i.k) * ratio * c.w(i.k)

    _add(Identity(
        "intro-g-binomial", "thm.peyb26i",
        "sum_j (-1)^j C(k,j) G_{rj}/F_{r+1}^j = (F_r/F_{r+1})^k (G_0 F_{k+1} - G_1 F_k)/(G_0 F_{k-1} + G_1 F_k) G_k",
        ("r", "k"),
        lambda c, i: _ws(c.w, 0, i.r, -_inv(c.F(i.r + 1)), i.k, True),
        g_binom_rhs,
        nonzero=(("F_{r+1}!=0", lambda c, i: c.F(i.r + 1)),),
        applies=_gibonacci, family="g", general="thm-binomial-fxtzfk3-particular", to_general=_same,
    ))
    _add(Identity(
        "intro-g-vwqo0w9", "thm.m4yo6a8",
        "F_r sum_j G_{rj}/F_{r-1}^j = G_{kr+r-1}/F_{r-1}^k - F_{r-1}(G_1 - G_0)", ("r", "k"),
        lambda c, i: c.F(i.r) * _ws(c.w, 0, i.r, _inv(c.F(i.r - 1)), i.k),
        lambda c, i: c.w(i.k * i.r + i.r - 1) / int_pow(c.F(i.r - 1), i.k) - c.F(i.r - 1) * (c.b - c.a),
        exclude=_excluding("r", 1), nonzero=(("F_{r-1}!=0", lambda c, i: c.F(i.r - 1)),),
        applies=_gibonacci, family="g", general="thm-m4yo6a8-vwqo0w9-particular", to_general=_same,
    ))


def _build():
    _kernel()
    _introduction()
    _lemma_entries()
    _theorem_xvb2v42()
    _theorem_ybopnqn()
    _theorem_m4yo6a8()
    _theorem_yng8u8b()
    _theorem_g1ihfq5()
    _theorem_peyb26i()


_build()


# -- public API ---------------------------------------------------------------------------

def registry(include_quarantined: bool = True) -> list[Identity]:
    """All catalog entries in a stable order."""
    return [i for i in _REGISTRY.values() if include_quarantined or not i.quarantined]


def get(identity_id: str) -> Identity:
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def default_quarantine() -> list[str]:
    return [i.id for i in _REGISTRY.values() if i.quarantined]


@dataclass(frozen=True)
class IdentityInstance:
    id: str
    params: HoradamParams
    m: int = 0
    n: int = 0
    r: int = 0
    k: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")

    @property
    def idx(self) -> Idx:
        return Idx(self.m, self.n, self.r, self.k)


def instantiate(identity_id: str, inst: IdentityInstance, ctx: Context | None = None) -> Instantiation:
    """The validated lemma configuration behind a theorem instance.

    Raises :class:`PreconditionUnmet` if the theorem's own hypotheses or the
    lemma's nonvanishing conditions fail, and ``ValueError`` if the identity
    is not stated as a lemma instance.
    """
    ident = get(identity_id)
    if ident.lemma is None:
        raise ValueError(f"{identity_id} is not recorded as a lemma instance")
    ctx = ctx or Context(inst.params)
    ident.preconditions(ctx, inst.idx)
    return ident.lemma(ctx, inst.idx)


def check(inst: IdentityInstance, ctx: Context | None = None, corrupt: bool = False) -> CheckOutcome:
    """Evaluate one instance; preconditions are reported, never raised."""
    ident = get(inst.id)
    if not ident.applies(inst.params):
        return Skip(f"family={ident.family}")
    ctx = ctx or Context(inst.params)
    return ident.evaluate(ctx, inst.idx, corrupt=corrupt)


def via_lemma(identity_id: str, ctx: Context, idx: Idx):
    """Both sides recomputed through the generic lemma; raises PreconditionUnmet."""
    ident = get(identity_id)
    ident.preconditions(ctx, idx)
    return ident.lemma(ctx, idx).sides()


def specialization_sides(identity_id: str, ctx: Context, idx: Idx):
    """(general lhs, general rhs) scaled onto the specialization at ``idx``."""
    ident = get(identity_id)
    general = get(ident.general)
    gidx, scale = ident.to_general(ctx, idx)
    general.preconditions(ctx, gidx)
    return scale * general.lhs(ctx, gidx), scale * general.rhs(ctx, gidx)
