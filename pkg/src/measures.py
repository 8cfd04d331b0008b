# -*- coding: utf-8 -*-
"""
Módulo de medidas de teste e quadratura.

Catálogo fechado de medidas nu >= 0 com transformada nu^ >= 0, integrais de
janela de nu^, momentos de potências de sinc e o lado direito da
desigualdade por blocos, com quadratura adaptativa por painéis (scipy).
"""

import cmath
import logging
import math
import warnings
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import integrate, special

from .config import EngineConfig, load_config
from .indexcalc import (
    ShiftMultiset,
    StackState,
    constant_exponent,
    exp_sum,
    expand_offsets,
    scale_histogram,
    shift_multiset,
)
from .polyexact import conv_power, shift_sum, triangle

# Configuração de logging
logger = logging.getLogger(__name__)

MEASURE_KINDS = ("dirac", "atoms", "gaussian", "triangle", "bspline")

# Limite de truncamento da gaussiana em desvios-padrão
GAUSSIAN_CUTOFF = 14.0

SINC_FORMS = ("transform", "printed")

# Diferença relativa máxima aceita entre f(x) e f(-x) nas integrais pares
SYMMETRY_TOL = 1e-12


class AccuracyError(RuntimeError):
    """Quadratura não atingiu a tolerância pedida; carrega o resultado parcial."""

    def __init__(self, message: str, partial: "QuadratureResult"):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class QuadratureResult:
    """Valor de uma integral com estimativa de erro e cota de truncamento."""

    value: float
    abs_error_estimate: float = 0.0
    truncation_bound: float = 0.0
    evaluations: int = 0

    @property
    def total_error(self) -> float:
        return self.abs_error_estimate + self.truncation_bound

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.value + other.value,
            self.abs_error_estimate + other.abs_error_estimate,
            self.truncation_bound + other.truncation_bound,
            self.evaluations + other.evaluations,
        )

    def scaled(self, factor: float) -> "QuadratureResult":
        f = abs(factor)
        return QuadratureResult(self.value * factor, self.abs_error_estimate * f,
                                self.truncation_bound * f, self.evaluations)


def _closed_form(value: float) -> QuadratureResult:
    """Valor em forma fechada; erro de arredondamento de poucas operações."""
    return QuadratureResult(value, 16 * np.finfo(float).eps * (abs(value) + 1.0), 0.0, 1)


# ---------------------------------------------------------------------------
# Funções auxiliares
# ---------------------------------------------------------------------------

def sinc(u: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """sin(u)/u com valor 1 em u = 0."""
    if np.ndim(u) == 0:
        return 1.0 if u == 0 else math.sin(u) / u
    return np.sinc(np.asarray(u, dtype=float) / np.pi)


def log_abs_sinc(u: float) -> float:
    """log|sinc(u)|, -inf nos zeros."""
    s = abs(sinc(u))
    return -math.inf if s == 0.0 else math.log(s)


def abs_sinc_power(u: float, n: float) -> float:
    """|sinc(u)|^n em espaço logarítmico."""
    s = abs(sinc(u))
    if s == 0.0:
        return 0.0
    return math.exp(n * math.log(s))


@lru_cache(maxsize=16)
def _bspline_pieces(J: int) -> Tuple[Tuple[float, ...], Tuple[Tuple[float, ...], ...]]:
    """Pontos de quebra e coeficientes (decrescentes) de K^{*J} em ponto flutuante."""
    density = conv_power(triangle(), J)
    edges = tuple(float(b) for b in density.breakpoints)
    coeffs = tuple(tuple(float(c) for c in p.all_coeffs()) for p in density.pieces)
    return edges, coeffs


def bspline_density(J: int, x: float) -> float:
    """K^{*J}(x)."""
    edges, coeffs = _bspline_pieces(J)
    if x <= edges[0] or x >= edges[-1]:
        return 0.0
    i = bisect_right(edges, x) - 1
    value = 0.0
    for c in coeffs[i]:
        value = value * x + c
    return value


# ---------------------------------------------------------------------------
# Catálogo de medidas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MeasureSpec:
    """
    Medida de teste nu >= 0 com nu^ >= 0.

    Attributes:
        kind: dirac, atoms, gaussian, triangle ou bspline
        a: Posição dos átomos laterais (atoms, pesos 1:2:1 em -a, 0, a)
        sigma: Desvio-padrão (gaussian, medida de probabilidade)
        J: Ordem (bspline, densidade K^{*J})
    """

    kind: str
    a: float = 1.0
    sigma: float = 1.0
    J: int = 2

    def __post_init__(self):
        if self.kind not in MEASURE_KINDS:
            raise ValueError(f"Tipo de medida desconhecido: {self.kind}")
        if self.kind == "atoms" and not self.a > 0:
            raise ValueError(f"Parâmetro a deve ser positivo: {self.a}")
        if self.kind == "gaussian" and not self.sigma > 0:
            raise ValueError(f"Parâmetro sigma deve ser positivo: {self.sigma}")
        if self.kind == "bspline" and not (isinstance(self.J, int) and self.J >= 1):
            raise ValueError(f"Parâmetro J deve ser inteiro positivo: {self.J}")

    @classmethod
    def parse(cls, text: str) -> "MeasureSpec":
        """
        Lê o formato da linha de comando.

        Exemplos: "dirac", "atoms:a=1.0", "gaussian:sigma=1.0", "triangle", "bspline:J=3".
        """
        kind, _, rest = text.strip().partition(":")
        params: Dict[str, Any] = {}
        if rest:
            for item in rest.split(","):
                key, sep, value = item.partition("=")
                key = key.strip()
                if not sep or key not in ("a", "sigma", "J"):
                    raise ValueError(f"Parâmetro de medida inválido: {item!r} em {text!r}")
                try:
                    params[key] = int(value) if key == "J" else float(value)
                except ValueError:
                    raise ValueError(f"Valor inválido para {key}: {value!r}")
        return cls(kind=kind, **params)

    @property
    def label(self) -> str:
        if self.kind == "atoms":
            return f"atoms:a={self.a!r}"
        if self.kind == "gaussian":
            return f"gaussian:sigma={self.sigma!r}"
        if self.kind == "bspline":
            return f"bspline:J={self.J}"
        return self.kind

    @property
    def total_mass(self) -> float:
        return 4.0 if self.kind == "atoms" else 1.0

    def atoms(self) -> List[Tuple[float, float]]:
        """Parte atômica: pares (posição, peso)."""
        if self.kind == "dirac":
            return [(0.0, 1.0)]
        if self.kind == "atoms":
            return [(-self.a, 1.0), (0.0, 2.0), (self.a, 1.0)]
        return []

    @property
    def has_density(self) -> bool:
        return self.kind in ("gaussian", "triangle", "bspline")

    def density(self, x: float) -> float:
        if self.kind == "gaussian":
            return math.exp(-0.5 * (x / self.sigma) ** 2) / (self.sigma * math.sqrt(2 * math.pi))
        if self.kind == "triangle":
            return max(0.0, 1.0 - abs(x))
        if self.kind == "bspline":
            return bspline_density(self.J, x)
        return 0.0

    def density_reach(self) -> float:
        """Raio de integração da densidade (suporte ou truncamento gaussiano)."""
        if self.kind == "gaussian":
            return GAUSSIAN_CUTOFF * self.sigma
        if self.kind == "triangle":
            return 1.0
        if self.kind == "bspline":
            return float(self.J)
        return 0.0

    def density_knots(self) -> List[float]:
        """Pontos de não-suavidade da densidade."""
        if self.kind == "triangle":
            return [-1.0, 0.0, 1.0]
        if self.kind == "bspline":
            return [float(i) for i in range(-self.J, self.J + 1)]
        return []

    def tail_mass(self, reach: float) -> float:
        """Massa da densidade fora de [-reach, reach]."""
        if self.kind == "gaussian":
            return float(special.erfc(reach / (self.sigma * math.sqrt(2))))
        return 0.0


def fhat(measure: MeasureSpec, t: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """
    Transformada nu^(t) = integral de e^{itx} nu(dx), em forma fechada.

    Sempre não-negativa para o catálogo.
    """
    if measure.kind == "dirac":
        return np.ones_like(t, dtype=float) if np.ndim(t) else 1.0
    if measure.kind == "atoms":
        return 2.0 + 2.0 * np.cos(measure.a * np.asarray(t, dtype=float)) if np.ndim(t) \
            else 2.0 + 2.0 * math.cos(measure.a * t)
    if measure.kind == "gaussian":
        return np.exp(-0.5 * (measure.sigma * np.asarray(t, dtype=float)) ** 2) if np.ndim(t) \
            else math.exp(-0.5 * (measure.sigma * t) ** 2)
    power = 2 if measure.kind == "triangle" else 2 * measure.J
    if np.ndim(t):
        return sinc(np.asarray(t, dtype=float) / 2) ** power
    return sinc(t / 2) ** power


# ---------------------------------------------------------------------------
# Motor de quadratura
# ---------------------------------------------------------------------------

def _panel_edges(lo: float, hi: float, width: float, knots: Sequence[float] = ()) -> List[float]:
    count = max(1, int(math.ceil((hi - lo) / width)))
    edges = set(np.linspace(lo, hi, count + 1).tolist())
    edges.update(k for k in knots if lo < k < hi)
    return sorted(edges)


def panel_quad(func: Callable[[float], float], lo: float, hi: float, width: float,
               rel_tol: float, knots: Sequence[float] = (), truncation: float = 0.0,
               label: str = "") -> QuadratureResult:
    """
    Integral de func em [lo, hi] por painéis de largura ~width.

    Cada painel usa scipy.integrate.quad; a soma é compensada (math.fsum)
    em ordem fixa de painéis.

    Raises:
        AccuracyError: Se o erro estimado exceder rel_tol relativo
    """
    if hi <= lo:
        return QuadratureResult(0.0, 0.0, truncation, 0)
    edges = _panel_edges(lo, hi, width, knots)
    values: List[float] = []
    errors: List[float] = []
    evaluations = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        for a, b in zip(edges, edges[1:]):
            out = integrate.quad(func, a, b, epsabs=1e-16, epsrel=rel_tol / 10,
                                 limit=200, full_output=1)
            values.append(out[0])
            errors.append(out[1])
            evaluations += out[2]["neval"]
    value = math.fsum(values)
    error = math.fsum(errors)
    result = QuadratureResult(value, error, truncation, evaluations)
    scale = math.fsum(abs(v) for v in values)
    if error > rel_tol * scale + 1e-14:
        logger.warning(f"Quadratura {label} sem precisão: erro {error:.3g} para valor {value:.6g}")
        raise AccuracyError(f"Tolerância {rel_tol:g} não atingida em {label} (erro {error:.3g})", result)
    logger.debug(f"Quadratura {label}: {len(edges) - 1} painéis, {evaluations} avaliações, valor {value:.12g}")
    return result


def even_density_integral(measure: MeasureSpec, func: Callable[[float], float],
                          frequency: float, rel_tol: float,
                          log_decay: Optional[Callable[[float], float]] = None,
                          label: str = "") -> QuadratureResult:
    """
    Integral de func(x) * densidade(x) para func par, por 2 * integral em [0, X].

    Args:
        frequency: Maior frequência de oscilação de func (define a largura dos painéis)
        log_decay: log de uma cota de |func| em |x| >= X (para a cota de truncamento)
    """
    reach = measure.density_reach()
    bound_log = 0.0 if log_decay is None else log_decay(reach)
    truncation = measure.tail_mass(reach) * math.exp(min(bound_log, 700.0))
    width = math.pi / max(frequency, 1e-3)
    knots = [k for k in measure.density_knots() if k > 0]
    edges = _panel_edges(0.0, reach, width, knots)
    nodes = edges + [(a + b) / 2 for a, b in zip(edges, edges[1:])]
    symmetry_gap(func, nodes, label=label)
    half = panel_quad(lambda x: func(x) * measure.density(x), 0.0, reach, width, rel_tol,
                      knots=knots, truncation=truncation / 2, label=label)
    return half.scaled(2.0)


def symmetry_gap(func: Callable[[float], float], nodes: Sequence[float],
                 tol: float = SYMMETRY_TOL, label: str = "") -> float:
    """
    Maior diferença relativa |f(x) - f(-x)| / max(|f(x)|, |f(-x)|) nos nós.

    Raises:
        AccuracyError: Se a diferença exceder tol (integrando não é par)
    """
    worst = 0.0
    worst_x = 0.0
    for x in nodes:
        a, b = func(x), func(-x)
        scale = max(abs(a), abs(b))
        if scale == 0.0:
            continue
        gap = abs(a - b) / scale
        if gap > worst:
            worst, worst_x = gap, x
    if worst > tol:
        logger.warning(f"Integrando {label} não é par: diferença relativa {worst:.3g} em x={worst_x:.6g}")
        raise AccuracyError(
            f"Simetria violada em {label}: |f(x) - f(-x)| relativo {worst:.3g} > {tol:g} em x={worst_x:.6g}",
            QuadratureResult(0.0, math.inf),
        )
    logger.debug(f"Simetria de {label}: diferença relativa máxima {worst:.3g} em {len(nodes)} nós")
    return worst


# ---------------------------------------------------------------------------
# Integrais de janela, momentos e lado direito por blocos
# ---------------------------------------------------------------------------

def fhat_window_integral(measure: MeasureSpec, W: float,
                         rel_tol: Optional[float] = None) -> QuadratureResult:
    """
    Integral de nu^(t) em [-W, W].

    Formas fechadas para dirac, atoms, gaussian e triangle; quadratura para bspline.

    Raises:
        ValueError: Se W <= 0
        AccuracyError: Se a quadratura não atingir a tolerância
    """
    if not W > 0:
        raise ValueError(f"W deve ser positivo: {W}")
    tol = load_config().quad_rel_tol if rel_tol is None else rel_tol
    if measure.kind == "dirac":
        return _closed_form(2.0 * W)
    if measure.kind == "atoms":
        a = measure.a
        return _closed_form(4.0 * W + 4.0 * math.sin(a * W) / a)
    if measure.kind == "gaussian":
        s = measure.sigma
        return _closed_form(math.sqrt(2 * math.pi) / s * float(special.erf(s * W / math.sqrt(2))))
    if measure.kind == "triangle":
        si, _ = special.sici(W)
        return _closed_form(4.0 * (float(si) - math.sin(W / 2) ** 2 / (W / 2)))
    half = panel_quad(lambda t: fhat(measure, t), 0.0, W, 2 * math.pi, tol,
                      label=f"janela {measure.label} W={W:g}")
    return half.scaled(2.0)


def sinc_moment(measure: MeasureSpec, T: float, n: float,
                rel_tol: Optional[float] = None) -> QuadratureResult:
    """
    Integral de |sinc(xT)|^n nu(dx).

    Parte atômica somada exatamente; parte contínua por quadratura par com
    truncamento controlado por |sinc(u)|^n <= |u|^{-n}.

    Raises:
        ValueError: Se T <= 0 ou n <= 0
        AccuracyError: Se a quadratura não atingir a tolerância
    """
    if not T > 0:
        raise ValueError(f"T deve ser positivo: {T}")
    if not n > 0:
        raise ValueError(f"Expoente deve ser positivo: {n}")
    tol = load_config().moment_rel_tol if rel_tol is None else rel_tol
    atomic = math.fsum(w * abs_sinc_power(x * T, n) for x, w in measure.atoms())
    result = _closed_form(atomic) if measure.atoms() else QuadratureResult(0.0)
    if measure.has_density:
        result = result + even_density_integral(
            measure, lambda x: abs_sinc_power(x * T, n), frequency=T, rel_tol=tol,
            log_decay=lambda X: -n * math.log(X * T) if X * T > 1 else 0.0,
            label=f"momento {measure.label} T={T:g} n={n}",
        )
    return result


def _block_boundary(state: StackState) -> int:
    """Bloco k de um estado em m = R_k (índice k já consumido)."""
    k = state.block
    if k == 0 or state.min_index != k + 1:
        raise ValueError(f"Estado m={state.m} não está em fim de bloco")
    return k


@dataclass(frozen=True)
class P6Integrand:
    """
    Integrando do lado direito por blocos em espaço logarítmico.

    log f(x) = log2_constant*ln 2 + sum_j c_j log|sinc(a_j x)| + log|E(2Wx)|
    com a_j = W/2^j (forma da transformada) ou 2W/2^j (forma impressa).
    """

    entries: Tuple[Tuple[int, int], ...]
    multiset: ShiftMultiset
    W: float
    log2_constant: int
    sinc_form: str = "transform"
    histogram: Tuple[Tuple[int, float], ...] = ()

    def rate(self, j: int) -> float:
        base = self.W if self.sinc_form == "transform" else 2.0 * self.W
        return math.ldexp(base, -j)

    def log_value(self, x: float) -> float:
        total = self.log2_constant * math.log(2.0)
        for j, c in self.entries:
            ls = log_abs_sinc(self.rate(j) * x)
            if ls == -math.inf:
                return -math.inf
            total += c * ls
        y = 2.0 * self.W * x
        for e, n in self.histogram:
            factor = abs(1.0 + 2.0 * math.cos(math.ldexp(y, -e) / 2.0))
            if factor == 0.0:
                return -math.inf
            total += n * math.log(factor)
        return total

    def __call__(self, x: float) -> float:
        lv = self.log_value(x)
        return 0.0 if lv == -math.inf else math.exp(lv)

    def log_envelope(self, X: float) -> float:
        """log de uma cota de f em |x| >= X."""
        total = self.log2_constant * math.log(2.0) + self.multiset.cardinality_exponent * math.log(3.0)
        for j, c in self.entries:
            u = self.rate(j) * X
            if u > 1.0:
                total -= c * math.log(u)
        return total

    @property
    def max_frequency(self) -> float:
        return max([2.0 * self.W] + [self.rate(j) for j, _ in self.entries])


def p6_integrand(state: StackState, W: float, sinc_form: str = "transform",
                 constant_shift: int = 0, budget: Optional[int] = None) -> P6Integrand:
    """Integrando com constante 2^{e_{R_k} - d_k + 1 + constant_shift}."""
    if sinc_form not in SINC_FORMS:
        raise ValueError(f"Forma de sinc desconhecida: {sinc_form}")
    log2_constant = constant_exponent(state.m, budget) - state.degree + 1 + constant_shift
    multiset = ShiftMultiset(scale_exponents=state.scale_history)
    return P6Integrand(
        entries=state.entries,
        multiset=multiset,
        histogram=tuple((e, float(n)) for e, n in scale_histogram(multiset).items()),
        W=W,
        log2_constant=log2_constant,
        sinc_form=sinc_form,
    )


def p6_rhs(measure: MeasureSpec, state: StackState, W: float, sinc_form: str = "transform",
           constant_shift: int = 0, rel_tol: Optional[float] = None,
           config: Optional[EngineConfig] = None) -> QuadratureResult:
    """
    Lado direito 2^{e_{R_k}-d_k+1} integral prod|sinc(a_j x)|^{c_j} |E(2Wx)| nu(dx).

    Args:
        measure: Medida do catálogo
        state: Estado em m = R_k
        W: Largura da janela (W > 0)
        sinc_form: "transform" (sinc(Wx/2^j)) ou "printed" (sinc(2Wx/2^j))
        constant_shift: Deslocamento aplicado ao expoente da constante (teste de mutação)
        config: Configuração do motor (padrão: load_config())

    Raises:
        ValueError: Estado fora de fim de bloco, k acima do limite ou W <= 0
        AccuracyError: Se a quadratura não atingir a tolerância ou o integrando não for par
    """
    if not W > 0:
        raise ValueError(f"W deve ser positivo: {W}")
    config = config or load_config()
    k = _block_boundary(state)
    if k > config.p6_max_block:
        raise ValueError(f"Bloco k={k} acima do limite configurado ({config.p6_max_block})")
    tol = config.moment_rel_tol if rel_tol is None else rel_tol
    f = p6_integrand(state, W, sinc_form, constant_shift, budget=config.step_budget)
    atomic = math.fsum(w * f(x) for x, w in measure.atoms())
    result = _closed_form(atomic) if measure.atoms() else QuadratureResult(0.0)
    if measure.has_density:
        result = result + even_density_integral(
            measure, f, frequency=f.max_frequency, rel_tol=tol, log_decay=f.log_envelope,
            label=f"p6 {measure.label} k={k} W={W:g}",
        )
    logger.debug(f"p6_rhs k={k}, W={W:g}, {measure.label}: {result.value:.12g}")
    return result


# ---------------------------------------------------------------------------
# Identidades numéricas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NumericCheck:
    """Comparação numérica de dois lados com orçamento de erro."""

    check_id: str
    lhs: complex
    rhs: complex
    error_budget: float
    passed: bool
    inputs: Dict[str, Any] = field(default_factory=dict)
    notes: str = ""

    @property
    def discrepancy(self) -> float:
        return abs(self.lhs - self.rhs)


def _complex_quad(func: Callable[[float], complex], lo: float, hi: float, width: float,
                  rel_tol: float, knots: Sequence[float] = (), label: str = "") -> Tuple[complex, float]:
    re = panel_quad(lambda x: func(x).real, lo, hi, width, rel_tol, knots, label=f"{label} (real)")
    im = panel_quad(lambda x: func(x).imag, lo, hi, width, rel_tol, knots, label=f"{label} (imag)")
    return complex(re.value, im.value), re.total_error + im.total_error


def parseval_check(measure: MeasureSpec, S: float, gamma: float, T: float, kappa: int,
                   rel_tol: Optional[float] = None,
                   config: Optional[EngineConfig] = None) -> NumericCheck:
    """
    Identidade de Parseval com núcleo K^{*kappa}.

    Compara integral de sinc^{2 kappa}(T(u - gamma)/2) e^{iSu} nu(du) com
    (1/T) integral de e^{-i gamma (y - S)} K^{*kappa}((y - S)/T) nu^(y) dy.

    Raises:
        ValueError: T <= 0 ou kappa fora de 1..4
        AccuracyError: Se alguma quadratura não atingir a tolerância
    """
    if not T > 0:
        raise ValueError(f"T deve ser positivo: {T}")
    if not 1 <= kappa <= 4:
        raise ValueError(f"kappa deve estar em 1..4: {kappa}")
    config = config or load_config()
    tol = config.moment_rel_tol if rel_tol is None else rel_tol
    power = 2 * kappa

    def left(u: float) -> complex:
        return sinc(T * (u - gamma) / 2) ** power * cmath.exp(1j * S * u)

    lhs = complex(sum(w * left(x) for x, w in measure.atoms()))
    error = 0.0
    if measure.has_density:
        reach = measure.density_reach()
        width = math.pi / max(1.0, T, abs(S))
        value, err = _complex_quad(lambda u: left(u) * measure.density(u), -reach, reach, width,
                                   tol, measure.density_knots(), label=f"KT1 lhs {measure.label}")
        lhs += value
        error += err + 2 * measure.tail_mass(reach)

    def right(y: float) -> complex:
        weight = bspline_density(kappa, (y - S) / T)
        return weight * fhat(measure, y) * cmath.exp(-1j * gamma * (y - S)) / T

    knots = [S + T * i for i in range(-kappa, kappa + 1)]
    rhs, err = _complex_quad(right, S - kappa * T, S + kappa * T, math.pi / max(1.0, abs(gamma), 1.0 / T),
                             tol, knots, label=f"KT1 rhs {measure.label}")
    error += err
    budget = config.parseval_rel_tol * max(abs(lhs), abs(rhs)) + error + 1e-12
    return NumericCheck(
        check_id="KT1",
        lhs=lhs,
        rhs=rhs,
        error_budget=budget,
        passed=abs(lhs - rhs) <= budget,
        inputs={"measure": measure.label, "S": S, "gamma": gamma, "T": T, "kappa": kappa},
    )


def sigma11_check(m: int, t: float, rel_tol: float = 1e-10,
                  budget: Optional[int] = None) -> NumericCheck:
    """
    Transformada de Sigma[K : I_m] igual a K^(t) E(t).

    O lado esquerdo integra numericamente a soma exata de translações de K.
    """
    ms = shift_multiset(m, budget)
    total = shift_sum(triangle(), expand_offsets(ms))
    lo, hi = (float(b) for b in total.support)
    knots = [float(b) for b in total.breakpoints]

    def integrand(x: float) -> float:
        return float(total.evaluate_array(np.array([x]))[0]) * math.cos(t * x)

    lhs = panel_quad(integrand, lo, hi, math.pi / max(abs(t), 1.0), rel_tol, knots,
                     label=f"Sigma11 m={m} t={t:g}")
    rhs = float(fhat(MeasureSpec("triangle"), t)) * float(exp_sum(ms, t).value)
    budget = 1e-8 * max(abs(lhs.value), abs(rhs), 1.0) + lhs.total_error
    return NumericCheck(
        check_id="Sigma11",
        lhs=complex(lhs.value),
        rhs=complex(rhs),
        error_budget=budget,
        passed=abs(lhs.value - rhs) <= budget,
        inputs={"m": m, "t": t},
    )
