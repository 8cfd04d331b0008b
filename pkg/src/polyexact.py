# -*- coding: utf-8 -*-
"""
Módulo de álgebra exata de polinômios por partes.

Funções de suporte compacto com pontos de quebra racionais e coeficientes
em QQ (sympy.Poly): convolução, dilatação, somas de translações e
certificados de não-negatividade por contagem de raízes de Sturm.
Contém as verificações exatas dos lemas de núcleo e da dominação pontual
de g por produtos de convolução deslocados.
"""

import json
import logging
import math
from bisect import bisect_right
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from sympy import Poly, QQ

from .config import EngineConfig, load_config
from .indexcalc import (
    constant_exponent,
    expand_offsets,
    iterate_to,
    offset_lattice,
    shift_multiset,
)

# Configuração de logging
logger = logging.getLogger(__name__)

X = sympy.Symbol("x")
_Y = sympy.Symbol("y")

RationalLike = Union[int, str, Fraction]

# Fragmento (início, fim, polinômio em x) válido em [início, fim]
Fragment = Tuple[Fraction, Fraction, Poly]


class ConvolutionBudgetExceeded(ValueError):
    """Potência de convolução ou modo exato além do limite configurado."""


def as_fraction(value: Any) -> Fraction:
    """Converte int, str, Fraction ou sympy.Rational para Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, float):
        raise ValueError(f"Valor em ponto flutuante não é aceito em aritmética exata: {value}")
    return Fraction(value)


def _rat(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _poly(ascending: Sequence[Any]) -> Poly:
    coeffs = [_rat(as_fraction(c)) for c in reversed(list(ascending))] or [0]
    return Poly(coeffs, X, domain=QQ)


_ZERO = Poly(0, X, domain=QQ)


def _eval(p: Poly, at: Fraction) -> Fraction:
    return as_fraction(p.eval(_rat(at)))


def _scale_argument(p: Poly, s: Fraction) -> Poly:
    """p(s*x)."""
    coeffs = [as_fraction(c) for c in reversed(p.all_coeffs())]
    return _poly([c * s ** i for i, c in enumerate(coeffs)])


def _format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# Polinômio por partes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiecewisePoly:
    """
    Polinômio por partes de suporte compacto.

    O valor é zero fora de [primeiro, último] ponto de quebra. Em um ponto
    de quebra o valor é o maior dos limites laterais (indicadoras fechadas).
    Instâncias produzidas pelas operações do módulo estão em forma canônica,
    de modo que igualdade estrutural é igualdade de funções.
    """

    breakpoints: Tuple[Fraction, ...] = ()
    pieces: Tuple[Poly, ...] = ()

    def __post_init__(self):
        if self.pieces and len(self.breakpoints) != len(self.pieces) + 1:
            raise ValueError(
                f"Número de pedaços ({len(self.pieces)}) incompatível com "
                f"{len(self.breakpoints)} pontos de quebra"
            )
        if any(a >= b for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("Pontos de quebra devem ser estritamente crescentes")

    @classmethod
    def zero(cls) -> "PiecewisePoly":
        return cls()

    @classmethod
    def from_coefficients(cls, breakpoints: Sequence[RationalLike],
                          coefficients: Sequence[Sequence[RationalLike]]) -> "PiecewisePoly":
        """Constrói a partir de coeficientes em ordem crescente de grau por pedaço."""
        return cls(
            breakpoints=tuple(as_fraction(b) for b in breakpoints),
            pieces=tuple(_poly(c) for c in coefficients),
        ).canonical()

    # -- propriedades ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.pieces

    @property
    def support(self) -> Tuple[Fraction, Fraction]:
        if self.is_zero:
            raise ValueError("Função nula não tem suporte")
        return self.breakpoints[0], self.breakpoints[-1]

    @property
    def degree(self) -> int:
        return max((p.degree() for p in self.pieces if not p.is_zero), default=0)

    def intervals(self) -> Iterable[Tuple[Fraction, Fraction, Poly]]:
        return zip(self.breakpoints, self.breakpoints[1:], self.pieces)

    def canonical(self) -> "PiecewisePoly":
        """Funde pedaços adjacentes iguais e remove caudas nulas."""
        bps = list(self.breakpoints)
        pcs = list(self.pieces)
        while pcs and pcs[0].is_zero:
            pcs.pop(0)
            bps.pop(0)
        while pcs and pcs[-1].is_zero:
            pcs.pop()
            bps.pop()
        if not pcs:
            return PiecewisePoly()
        merged_bps = [bps[0]]
        merged_pcs = [pcs[0]]
        for b, p in zip(bps[1:-1], pcs[1:]):
            if p == merged_pcs[-1]:
                continue
            merged_bps.append(b)
            merged_pcs.append(p)
        merged_bps.append(bps[-1])
        return PiecewisePoly(tuple(merged_bps), tuple(merged_pcs))

    # -- avaliação ---------------------------------------------------------

    def evaluate(self, at: RationalLike) -> Fraction:
        """Valor exato em um ponto racional."""
        t = as_fraction(at)
        if self.is_zero or t < self.breakpoints[0] or t > self.breakpoints[-1]:
            return Fraction(0)
        i = bisect_right(self.breakpoints, t) - 1
        if self.breakpoints[i] == t:
            left = _eval(self.pieces[i - 1], t) if i > 0 else Fraction(0)
            right = _eval(self.pieces[i], t) if i < len(self.pieces) else Fraction(0)
            return max(left, right)
        return _eval(self.pieces[i], t)

    __call__ = evaluate

    def evaluate_array(self, xs: np.ndarray) -> np.ndarray:
        """Avaliação vetorizada em ponto flutuante (para quadratura e grades)."""
        xs = np.asarray(xs, dtype=float)
        out = np.zeros_like(xs)
        if self.is_zero:
            return out
        edges = np.array([float(b) for b in self.breakpoints])
        idx = np.searchsorted(edges, xs, side="right") - 1
        for i, p in enumerate(self.pieces):
            mask = idx == i
            if np.any(mask):
                coeffs = [float(c) for c in p.all_coeffs()]
                out[mask] = np.polyval(coeffs, xs[mask])
        out[xs == edges[-1]] = float(self.evaluate(self.breakpoints[-1]))
        return out

    def integral(self) -> Fraction:
        """Integral exata sobre a reta."""
        total = Fraction(0)
        for a, b, p in self.intervals():
            prim = p.integrate()
            total += _eval(prim, b) - _eval(prim, a)
        return total

    # -- aritmética --------------------------------------------------------

    def fragments(self) -> List[Fragment]:
        return [(a, b, p) for a, b, p in self.intervals() if not p.is_zero]

    def __add__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        return from_fragments(self.fragments() + other.fragments())

    def __neg__(self) -> "PiecewisePoly":
        return self.scale(-1)

    def __sub__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "PiecewisePoly":
        c = as_fraction(factor)
        if c == 0:
            return PiecewisePoly()
        return PiecewisePoly(self.breakpoints, tuple(p.mul_ground(_rat(c)) for p in self.pieces))

    def translate(self, rho: RationalLike) -> "PiecewisePoly":
        """x -> f(x + rho)."""
        r = as_fraction(rho)
        return PiecewisePoly(tuple(b - r for b in self.breakpoints),
                             tuple(p.shift(_rat(r)) for p in self.pieces))

    def restrict(self, lo: RationalLike, hi: RationalLike) -> "PiecewisePoly":
        """Parte da função sobre [lo, hi] (zero fora)."""
        lo, hi = as_fraction(lo), as_fraction(hi)
        frags = [(max(a, lo), min(b, hi), p) for a, b, p in self.fragments()
                 if min(b, hi) > max(a, lo)]
        return from_fragments(frags)

    # -- serialização ------------------------------------------------------

    def to_json(self) -> str:
        data = {
            "breakpoints": [_format_fraction(b) for b in self.breakpoints],
            "pieces": [[_format_fraction(as_fraction(c)) for c in reversed(p.all_coeffs())]
                       for p in self.pieces],
        }
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "PiecewisePoly":
        data = json.loads(text)
        return cls(
            breakpoints=tuple(Fraction(b) for b in data["breakpoints"]),
            pieces=tuple(_poly([Fraction(c) for c in coeffs]) for coeffs in data["pieces"]),
        )


def from_fragments(fragments: Iterable[Fragment]) -> PiecewisePoly:
    """
    Soma de fragmentos polinomiais em forma canônica.

    Args:
        fragments: Triplas (a, b, p) com p válido em [a, b]

    Returns:
        Soma pontual dos fragmentos (zero fora de todos eles)
    """
    frags = sorted((f for f in fragments if f[1] > f[0] and not f[2].is_zero),
                   key=lambda f: f[0])
    if not frags:
        return PiecewisePoly()
    grid = sorted({f[0] for f in frags} | {f[1] for f in frags})
    pieces: List[Poly] = []
    active: List[Fragment] = []
    cursor = 0
    for u, v in zip(grid, grid[1:]):
        while cursor < len(frags) and frags[cursor][0] <= u:
            active.append(frags[cursor])
            cursor += 1
        active = [f for f in active if f[1] >= v]
        total = _ZERO
        for _, _, p in active:
            total = total + p
        pieces.append(total)
    return PiecewisePoly(tuple(grid), tuple(pieces)).canonical()


# ---------------------------------------------------------------------------
# Construtores e operadores
# ---------------------------------------------------------------------------

def indicator(halfwidth: RationalLike) -> PiecewisePoly:
    """
    Indicadora fechada de [-A, A].

    Raises:
        ValueError: Se A <= 0
    """
    A = as_fraction(halfwidth)
    if A <= 0:
        raise ValueError(f"Semi-largura deve ser positiva: {A}")
    return PiecewisePoly((-A, A), (_poly([1]),))


def box(lo: RationalLike, hi: RationalLike, height: RationalLike = 1) -> PiecewisePoly:
    """height * indicadora de [lo, hi]."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    if hi <= lo:
        raise ValueError(f"Intervalo vazio: [{lo}, {hi}]")
    return PiecewisePoly((lo, hi), (_poly([height]),)).canonical()


def g() -> PiecewisePoly:
    """Indicadora de [-1/2, 1/2]."""
    return indicator(Fraction(1, 2))


def g_j(j: int) -> PiecewisePoly:
    """g_j = T_{2^-j} g, indicadora de [-2^{-j-1}, 2^{-j-1}]."""
    return indicator(Fraction(1, 2 ** (j + 1)))


def triangle() -> PiecewisePoly:
    """Núcleo de Fejér K(t) = (1 - |t|)^+ = g*g."""
    return PiecewisePoly.from_coefficients([-1, 0, 1], [[1, 1], [1, -1]])


def dilate(f: PiecewisePoly, a: RationalLike) -> PiecewisePoly:
    """
    T_a f(x) = f(x/a).

    Raises:
        ValueError: Se a <= 0
    """
    a = as_fraction(a)
    if a <= 0:
        raise ValueError(f"Fator de dilatação deve ser positivo: {a}")
    if f.is_zero:
        return f
    return PiecewisePoly(
        tuple(a * b for b in f.breakpoints),
        tuple(_scale_argument(p, 1 / a) for p in f.pieces),
    ).canonical()


def shift_sum(f: PiecewisePoly, shifts: Dict[Fraction, int]) -> PiecewisePoly:
    """
    Sigma[f : I] = sum_rho mult(rho) f(x + rho).

    Args:
        f: Função base
        shifts: Deslocamentos distintos e suas multiplicidades
    """
    fragments: List[Fragment] = []
    for rho, count in shifts.items():
        if count == 0:
            continue
        r = as_fraction(rho)
        c = _rat(Fraction(count))
        for a, b, p in f.fragments():
            fragments.append((a - r, b - r, p.shift(_rat(r)).mul_ground(c)))
    return from_fragments(fragments)


def _antiderivatives(f: PiecewisePoly) -> Tuple[List[Poly], Fraction]:
    """Primitivas contínuas F_i em cada pedaço com F(-inf) = 0, e a massa total."""
    prims: List[Poly] = []
    acc = Fraction(0)
    for a, b, p in f.intervals():
        prim = p.integrate()
        prim = prim + _poly([acc - _eval(prim, a)])
        prims.append(prim)
        acc = _eval(prim, b)
    return prims, acc


def _convolve_box(f: PiecewisePoly, lo: Fraction, hi: Fraction, height: Fraction) -> PiecewisePoly:
    """f * (height * 1_[lo,hi]) = height * (F(x - lo) - F(x - hi))."""
    prims, mass = _antiderivatives(f)
    c = _rat(height)
    fragments: List[Fragment] = []
    for (a, b, _), prim in zip(f.intervals(), prims):
        fragments.append((a + lo, b + lo, prim.shift(_rat(-lo)).mul_ground(c)))
        fragments.append((a + hi, b + hi, prim.shift(_rat(-hi)).mul_ground(-c)))
    end = f.breakpoints[-1]
    fragments.append((end + lo, end + hi, _poly([mass * height])))
    return from_fragments(fragments)


def _pair_convolution(p: Poly, a: Fraction, b: Fraction,
                      q: Poly, c: Fraction, d: Fraction) -> List[Fragment]:
    """(p 1_[a,b]) * (q 1_[c,d]) em três regiões de limites lineares."""
    integrand = sympy.expand(p.as_expr(_Y) * q.as_expr(X - _Y))
    prim = Poly(integrand, _Y, X, domain=QQ).integrate(_Y).as_expr()

    def between(lower, upper) -> Poly:
        expr = sympy.expand(prim.subs(_Y, upper) - prim.subs(_Y, lower))
        return Poly(expr, X, domain=QQ)

    s1, s4 = a + c, b + d
    s2, s3 = min(a + d, b + c), max(a + d, b + c)
    A, B, C, D = _rat(a), _rat(b), _rat(c), _rat(d)
    out: List[Fragment] = []
    if s2 > s1:
        out.append((s1, s2, between(A, X - C)))
    if s3 > s2:
        if a + d <= b + c:
            out.append((s2, s3, between(X - D, X - C)))
        else:
            out.append((s2, s3, between(A, B)))
    if s4 > s3:
        out.append((s3, s4, between(X - D, B)))
    return out


def _as_box(f: PiecewisePoly) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    if len(f.pieces) == 1 and f.pieces[0].degree() <= 0:
        return f.breakpoints[0], f.breakpoints[1], _eval(f.pieces[0], Fraction(0))
    return None


def convolve(f: PiecewisePoly, h: PiecewisePoly) -> PiecewisePoly:
    """
    Convolução exata f*h.

    Pontos de quebra do resultado estão contidos nas somas de pares de
    pontos de quebra; grau = grau f + grau h + 1.
    """
    if f.is_zero or h.is_zero:
        return PiecewisePoly()
    boxed = _as_box(h)
    if boxed is not None:
        return _convolve_box(f, *boxed)
    boxed = _as_box(f)
    if boxed is not None:
        return _convolve_box(h, *boxed)
    fragments: List[Fragment] = []
    for a, b, p in f.fragments():
        for c, d, q in h.fragments():
            fragments.extend(_pair_convolution(p, a, b, q, c, d))
    logger.debug(f"Convolução: {len(f.pieces)} x {len(h.pieces)} pedaços -> {len(fragments)} fragmentos")
    return from_fragments(fragments)


def convolve_all(factors: Iterable[PiecewisePoly]) -> PiecewisePoly:
    """Produto de convolução de uma sequência não vazia."""
    items = list(factors)
    if not items:
        raise ValueError("Produto de convolução de lista vazia")
    result = items[0]
    for item in items[1:]:
        result = convolve(result, item)
    return result


def conv_power(f: PiecewisePoly, n: int, max_power: Optional[int] = None) -> PiecewisePoly:
    """
    f^{*n}.

    Raises:
        ValueError: Se n < 1
        ConvolutionBudgetExceeded: Se n exceder o limite configurado
    """
    if n < 1:
        raise ValueError(f"Potência de convolução deve ser >= 1: {n}")
    limit = load_config().conv_power_max if max_power is None else max_power
    if n > limit:
        raise ConvolutionBudgetExceeded(f"Potência {n} excede o limite de {limit} convoluções")
    return convolve_all([f] * n)


# ---------------------------------------------------------------------------
# Certificado de não-negatividade
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Resultado do certificado: testemunha racional com f(x) < 0 quando falha."""

    passed: bool
    witness: Optional[Fraction] = None
    witness_value: Optional[Fraction] = None
    pieces_checked: int = 0


def _interior_witness(p: Poly, a: Fraction, b: Fraction, end: Fraction) -> Fraction:
    """Ponto interior com p < 0 próximo de uma extremidade onde p < 0."""
    t = (a + b) / 2
    while _eval(p, t) >= 0:
        t = (t + end) / 2
    return t


def _roots_inside(q: Poly, a: Fraction, b: Fraction) -> int:
    n = q.count_roots(_rat(a), _rat(b))
    n -= int(_eval(q, a) == 0) + int(_eval(q, b) == 0)
    return n


def _piece_witness(p: Poly, q: Poly, a: Fraction, b: Fraction, depth: int = 0) -> Optional[Fraction]:
    """
    Procura x em (a, b) com p(x) < 0, supondo p(a) >= 0 e p(b) >= 0.

    q é a parte livre de quadrados de p (mesmas raízes, simples).
    """
    if depth > 200:
        raise RuntimeError(f"Bisseção excedeu a profundidade em [{a}, {b}]")
    inside = _roots_inside(q, a, b)
    mid = (a + b) / 2
    if inside == 0:
        return mid if _eval(p, mid) < 0 else None
    if inside == 1 and _eval(q, a) != 0 and _eval(q, b) != 0:
        # extremos positivos e uma única raiz: multiplicidade par, sem troca de sinal
        return None
    if _eval(p, mid) < 0:
        return mid
    return (_piece_witness(p, q, a, mid, depth + 1)
            or _piece_witness(p, q, mid, b, depth + 1))


def nonneg_certificate(f: PiecewisePoly) -> Certificate:
    """
    Prova f >= 0 em toda a reta ou devolve testemunha racional com f < 0.

    Cada pedaço é verificado no intervalo fechado pela contagem de raízes
    (Sturm) da parte livre de quadrados, com bisseção até isolar as raízes.
    """
    checked = 0
    for a, b, p in f.intervals():
        checked += 1
        if p.is_zero:
            continue
        for end in (a, b):
            if _eval(p, end) < 0:
                w = _interior_witness(p, a, b, end)
                logger.debug(f"Certificado falhou em [{a}, {b}]: testemunha {w}")
                return Certificate(False, w, f.evaluate(w), checked)
        if p.degree() <= 0:
            continue
        w = _piece_witness(p, p.sqf_part(), a, b)
        if w is not None:
            logger.debug(f"Certificado falhou em [{a}, {b}]: testemunha {w}")
            return Certificate(False, w, f.evaluate(w), checked)
    return Certificate(True, pieces_checked=checked)


def nonneg_on(f: PiecewisePoly, lo: RationalLike, hi: RationalLike) -> Certificate:
    """Certificado de f >= 0 restrito a [lo, hi]."""
    return nonneg_certificate(f.restrict(lo, hi))


# ---------------------------------------------------------------------------
# Verificações exatas dos lemas de núcleo
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactCheck:
    """
    Resultado de uma verificação exata.

    lhs/rhs são valores representativos (ex.: no ponto 0); a decisão vem
    dos certificados.
    """

    check_id: str
    passed: bool
    inputs: Dict[str, Any] = field(default_factory=dict)
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    witness: Optional[Fraction] = None
    diagnostic: bool = False
    sampled: bool = False
    error_budget: float = 0.0
    notes: str = ""


def _certified(check_id: str, certs: Sequence[Certificate], **kwargs: Any) -> ExactCheck:
    failed = next((c for c in certs if not c.passed), None)
    return ExactCheck(
        check_id=check_id,
        passed=failed is None,
        witness=failed.witness if failed else None,
        **kwargs,
    )


def kernel_T(T: RationalLike) -> PiecewisePoly:
    """K_T(t) = K(t/T) = (1 - |t|/T)^+."""
    return dilate(triangle(), T)


def verify_kt(T: RationalLike = 1, H: RationalLike = 0) -> ExactCheck:
    """
    Partição da unidade e cobertura por K_T.

    Certifica K_T(t) + K_T(t+T) + K_T(t-T) = 1 em [-T, T] e
    1_{|t-H| <= T} <= K_T(t-H) + K_T(t-H+T) + K_T(t-H-T) na reta.
    """
    T, H = as_fraction(T), as_fraction(H)
    if T <= 0:
        raise ValueError(f"T deve ser positivo: {T}")
    kt = kernel_T(T)
    partition = shift_sum(kt, {Fraction(0): 1, T: 1, -T: 1})
    diff = partition.restrict(-T, T) - box(-T, T)
    cover = shift_sum(kt, {-H: 1, T - H: 1, -T - H: 1})
    certs = [
        nonneg_certificate(diff),
        nonneg_certificate(-diff),
        nonneg_certificate(cover - box(H - T, H + T)),
    ]
    return _certified("KT", certs, inputs={"T": T, "H": H},
                      lhs=Fraction(1), rhs=partition.evaluate(0))


def trapezoid_density(A: RationalLike, B: RationalLike) -> PiecewisePoly:
    """Densidade de mu_A * mu_B (A <= B): (A + B - |x|) ^ 2A em [-A-B, A+B]."""
    A, B = as_fraction(A), as_fraction(B)
    if not 0 < A <= B:
        raise ValueError(f"Esperado 0 < A <= B, recebido A={A}, B={B}")
    S, D = A + B, B - A
    if D == 0:
        return PiecewisePoly.from_coefficients([-S, 0, S], [[S, 1], [S, -1]])
    return PiecewisePoly.from_coefficients([-S, -D, D, S], [[S, 1], [2 * A], [S, -1]])


def verify_convel(A: RationalLike, B: RationalLike) -> Tuple[ExactCheck, ExactCheck]:
    """
    Densidade da convolução de duas medidas elementares.

    Returns:
        (verificação exata do trapézio e da cota 2A, diagnóstico da forma triangular impressa)
    """
    A, B = as_fraction(A), as_fraction(B)
    density = convolve(indicator(A), indicator(B))
    trapezoid = trapezoid_density(A, B)
    bound = box(-(A + B), A + B, 2 * A)
    certs = [
        nonneg_certificate(density - trapezoid),
        nonneg_certificate(trapezoid - density),
        nonneg_certificate(bound - density),
    ]
    exact = _certified("convel", certs, inputs={"A": A, "B": B},
                       lhs=density.evaluate(0), rhs=2 * A)
    S = A + B
    printed = PiecewisePoly.from_coefficients([-S, 0, S], [[2 * A, 2 * A / S], [2 * A, -2 * A / S]])
    diagnostic = ExactCheck(
        check_id="convel-printed",
        passed=printed == density,
        inputs={"A": A, "B": B},
        lhs=density.evaluate(0),
        rhs=printed.evaluate(0),
        diagnostic=True,
        notes="forma triangular 2A(1 - |x|/(A+B)) coincide com a densidade só quando A = B",
    )
    return exact, diagnostic


def gj_bound(A: Sequence[RationalLike], sharp: bool = False) -> Fraction:
    """
    Cota G_J da densidade de mu_{A_1} * ... * mu_{A_J}.

    G_J = 2^J A_1 prod_{i>=3} ((A_1 + ... + A_{i-1}) ^ A_i) para J >= 2;
    com sharp=True o fator é 2^{J-1}, a constante que a indução produz.
    Para J = 1 a densidade é uma indicadora e G_1 = 1.

    Raises:
        ValueError: Lista vazia, não crescente ou com valores não positivos
    """
    values = [as_fraction(a) for a in A]
    if not values:
        raise ValueError("Lista de semi-larguras vazia")
    if values[0] <= 0 or any(x > y for x, y in zip(values, values[1:])):
        raise ValueError(f"Semi-larguras devem ser positivas e crescentes: {values}")
    J = len(values)
    if J == 1:
        return Fraction(1)
    bound = Fraction(2 ** (J - 1 if sharp else J)) * values[0]
    partial = values[0] + values[1]
    for a in values[2:]:
        bound *= min(partial, a)
        partial += a
    return bound


def verify_convelem(A: Sequence[RationalLike]) -> ExactCheck:
    """Certifica densidade <= G_J (forma de indução) com suporte [-sum A, sum A]."""
    values = [as_fraction(a) for a in A]
    sharp = gj_bound(values, sharp=True)
    printed = gj_bound(values)
    density = convolve_all(indicator(a) for a in values)
    total = sum(values)
    certs = [nonneg_certificate(density), nonneg_certificate(box(-total, total, sharp) - density)]
    support_ok = density.support == (-total, total)
    check = _certified("convelem", certs, inputs={"A": [str(a) for a in values]},
                       lhs=density.evaluate(0), rhs=sharp,
                       notes=f"G_J impresso = {printed}")
    if not support_ok:
        return replace(check, passed=False, notes="suporte incorreto")
    return check


def verify_kappaj(J: int, config: Optional[EngineConfig] = None) -> ExactCheck:
    """0 <= K^{*J} <= 1 com suporte [-J, J]."""
    limit = (config or load_config()).conv_power_max
    KJ = conv_power(triangle(), J, max_power=limit)
    certs = [nonneg_certificate(KJ), nonneg_certificate(box(-J, J) - KJ)]
    check = _certified("kappaj", certs, inputs={"J": J}, lhs=KJ.evaluate(0), rhs=Fraction(1))
    if KJ.support != (Fraction(-J), Fraction(J)):
        return replace(check, passed=False, notes="suporte incorreto")
    return check


def verify_conv01() -> ExactCheck:
    """g(x) <= g^{*2}(2x) + g^{*2}(2x+1) + g^{*2}(2x-1) na reta."""
    half = Fraction(1, 2)
    rhs = shift_sum(dilate(convolve(g(), g()), half), {-half: 1, Fraction(0): 1, half: 1})
    cert = nonneg_certificate(rhs - g())
    return _certified("conv01", [cert], lhs=g().evaluate(0), rhs=rhs.evaluate(0))


# ---------------------------------------------------------------------------
# Dominação pontual de g por produtos de convolução deslocados
# ---------------------------------------------------------------------------

def p5_product(m: int, budget: Optional[int] = None) -> PiecewisePoly:
    """P_m = convolução de g_j^{*c_j} sobre as entradas de U_m."""
    state = iterate_to(m, budget)
    factors = [g_j(j) for j, c in state.entries for _ in range(c)]
    return convolve_all(factors)


def p5_rhs(m: int, budget: Optional[int] = None) -> PiecewisePoly:
    """2^{e_m} Sigma[P_m : I_m] exato."""
    P = p5_product(m, budget)
    offsets = expand_offsets(shift_multiset(m, budget))
    return shift_sum(P, offsets).scale(2 ** constant_exponent(m, budget))


def _lattice_box(halfwidth_cells: int) -> np.ndarray:
    """Caixa de massa unitária amostrada pela regra do trapézio."""
    weights = np.ones(2 * halfwidth_cells + 1)
    weights[0] = weights[-1] = 0.5
    return weights / weights.sum()


def _sampled_rhs(m: int, refine: int, budget: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """RHS amostrado numa rede diádica: (abscissas, valores)."""
    from scipy.signal import fftconvolve

    state = iterate_to(m, budget)
    ms = shift_multiset(m, budget)
    q, offsets = offset_lattice(ms)
    p = max(q, max(state.indices) + 1) + refine
    h = 2.0 ** -p

    mass = np.ones(1)
    for j, c in state.entries:
        kernel = _lattice_box(2 ** (p - j - 1))
        for _ in range(c):
            mass = np.clip(fftconvolve(mass, kernel), 0.0, None)

    stride = 2 ** (p - q)
    upsampled = np.zeros((len(offsets) - 1) * stride + 1)
    upsampled[::stride] = offsets
    total = np.clip(fftconvolve(mass, upsampled), 0.0, None)

    log2_scale = constant_exponent(m, budget) - state.degree + p
    scale = math.ldexp(3.0 ** (2 ** m), log2_scale)
    xs = (np.arange(len(total)) - (len(total) - 1) / 2) * h
    return xs, total * scale


def verify_p5(m: int, mode: str = "exact", grid_points: int = 4096,
              window: Tuple[float, float] = (-0.6, 0.6),
              config: Optional[EngineConfig] = None) -> ExactCheck:
    """
    Verifica g <= C_m Sigma[prod* g_j^{*c_j} : I_m].

    Args:
        m: Passo da iteração
        mode: "exact" (certificado racional) ou "sampled" (grade)
        grid_points: Pontos da grade no modo amostrado
        window: Intervalo da grade no modo amostrado
        config: Limites do modo e orçamento de passos (padrão: load_config())

    Raises:
        ConvolutionBudgetExceeded: Se m exceder o limite do modo
        StepBudgetExceeded: Se m exceder o orçamento de passos
    """
    config = config or load_config()
    budget = config.step_budget
    if mode == "exact":
        if not 0 <= m <= config.p5_exact_max_m:
            raise ConvolutionBudgetExceeded(
                f"Modo exato limitado a m <= {config.p5_exact_max_m}, recebido m={m}")
        logger.info(f"Verificando dominação pontual exata para m={m}")
        rhs = p5_rhs(m, budget)
        cert = nonneg_certificate(rhs - g())
        return _certified("p5", [cert], inputs={"m": m, "mode": mode},
                          lhs=Fraction(1), rhs=rhs.evaluate(0),
                          notes=f"C_m = 2^{constant_exponent(m, budget)}, {len(rhs.pieces)} pedaços")
    if mode != "sampled":
        raise ValueError(f"Modo desconhecido: {mode}")
    if not 0 <= m <= config.p5_sampled_max_m:
        raise ConvolutionBudgetExceeded(
            f"Modo amostrado limitado a m <= {config.p5_sampled_max_m}, recebido m={m}")

    logger.info(f"Verificando dominação pontual amostrada para m={m} ({grid_points} pontos)")
    grid = np.linspace(window[0], window[1], grid_points)
    lhs = np.where(np.abs(grid) <= 0.5, 1.0, 0.0)
    coarse = np.interp(grid, *_sampled_rhs(m, 2, budget), left=0.0, right=0.0)
    fine = np.interp(grid, *_sampled_rhs(m, 3, budget), left=0.0, right=0.0)
    margins = fine - lhs
    worst = int(np.argmin(margins))
    error = float(np.max(np.abs(fine - coarse)))
    return ExactCheck(
        check_id="p5",
        passed=bool(margins[worst] >= -error),
        inputs={"m": m, "mode": mode, "grid_points": grid_points},
        lhs=Fraction(float(lhs[worst])),
        rhs=Fraction(float(fine[worst])),
        sampled=True,
        error_budget=error,
        notes=f"margem mínima {margins[worst]:.6g} em x={grid[worst]:.6g}",
    )
