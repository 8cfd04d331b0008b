# -*- coding: utf-8 -*-
"""
Módulo de verificação das desigualdades.

Cada verificação produz um VerificationReport com lados esquerdo e direito,
margem, orçamento de erro e status (pass, fail ou inconclusive). A suíte
percorre a grade de parâmetros de SuiteConfig e mantém a ordem da
configuração independentemente do agendamento das threads.
"""

import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import EngineConfig, SuiteConfig, load_config
from .indexcalc import (
    GrowthEntry,
    SequenceTable,
    StackState,
    constant_exponent,
    growth_checks,
    int_text,
    iterate,
    iterate_to,
    sequences,
)
from .measures import (
    AccuracyError,
    MeasureSpec,
    NumericCheck,
    QuadratureResult,
    fhat_window_integral,
    p6_rhs,
    parseval_check,
    sigma11_check,
    sinc,
    sinc_moment,
)
from .polyexact import (
    ExactCheck,
    verify_conv01,
    verify_convel,
    verify_convelem,
    verify_kappaj,
    verify_kt,
    verify_p5,
)

# Configuração de logging
logger = logging.getLogger(__name__)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

ANCHORS: Dict[str, str] = {
    "eq21": "sinc^2(Tu/2) contra a média de nu^ em [-T, T], fator 3",
    "eq21nu": "sinc^{2 kappa}(Tu/2) contra (1/T) integral de |nu^| em [-kappa T, kappa T]",
    "KT": "partição da unidade por K_T e cobertura de 1_{|t-H|<=T}",
    "KT1": "identidade de Parseval com janela K^{*kappa}",
    "convel": "densidade de mu_A * mu_B (trapézio, cota 2A)",
    "convel-printed": "forma triangular da densidade de mu_A * mu_B",
    "convelem": "densidade de mu_{A_1} * ... * mu_{A_J} <= G_J",
    "kappaj": "0 <= K^{*J} <= 1 com suporte [-J, J]",
    "conv01": "g(x) <= g^{*2}(2x) + g^{*2}(2x+1) + g^{*2}(2x-1)",
    "p5": "g <= C_m Sigma[prod* g_j^{*c_j} : I_m]",
    "p6": "média de nu^ em [-W, W] <= lado direito por blocos",
    "p6-printed": "lado direito por blocos com sinc(2Wx/2^j)",
    "theorem-final": "cadeia final com W = 2^{zeta_k} T e constantes exatas",
    "theorem-constant": "constante combinada <= 2^{2^{(1+eps) r_k}}",
    "constants": "C_0..C_3 = 2, 8, 256, 16777216",
    "gamma": "gamma_m = 2^m + 1 para m >= 1",
    "stack": "estrutura de blocos de J_m e relações de pilha",
    "minrn": "r_n >= r_k^2 / 2 para 2k <= n <= zeta_{k-1}",
    "r2j": "r_{2^j} >= (3/2)^{2^{j-1}}",
    "roestim": "crescimento geométrico empírico de r_k",
    "est0": "soma de #J_m sobre o bloco k",
    "recrk": "cota impressa para e_{R_k}",
    "recrk-identity": "e_{R_k} = k r_k 2^{R_k-1} + 2^{r_k} e_{R_{k-1}}",
    "interval": "J_{R_k} = {k+1, ..., zeta_k}",
    "consumption": "r_k passos no bloco k e índice k consumido",
    "Rz1": "gamma_k >= ((1-eps)/2) r_k^2 zeta_{k-1}",
    "Rz2": "d_k >= ((1-eps)/4) r_k^2 zeta_{k-1}^2",
    "sine-subadditivity": "|sin(x_1+...+x_n)| <= sin x_1 + ... + sin x_n em (0, pi)",
    "sine-multiple": "|sin nx| <= n |sin x|",
    "sinc-domination": "|sinc(Ny)| <= |sinc(y)| para inteiros N >= 1",
    "Sigma11": "transformada de Sigma[K : I_m] = K^ E",
}

# Famílias selecionáveis na linha de comando e os check_id que produzem
FAMILIES: Dict[str, Tuple[str, ...]] = {
    "eq21": ("eq21",),
    "eq21nu": ("eq21nu",),
    "KT": ("KT",),
    "KT1": ("KT1",),
    "convel": ("convel", "convel-printed"),
    "convelem": ("convelem",),
    "kappaj": ("kappaj",),
    "conv01": ("conv01",),
    "p5": ("p5",),
    "p6": ("p6", "p6-printed"),
    "theorem-final": ("theorem-final", "theorem-constant"),
    "constants": ("constants",),
    "gamma": ("gamma",),
    "stack": ("stack",),
    "growth": ("minrn", "r2j", "roestim", "est0", "recrk", "recrk-identity",
               "interval", "consumption", "Rz1", "Rz2"),
    "sine-subadditivity": ("sine-subadditivity", "sine-multiple", "sinc-domination"),
    "Sigma11": ("Sigma11",),
}

CHECK_IDS: Tuple[str, ...] = tuple(sorted({c for ids in FAMILIES.values() for c in ids} | set(FAMILIES)))

EXACT_FAMILIES = ("KT", "convel", "convelem", "kappaj", "conv01", "p5", "constants", "gamma", "stack")
NUMERIC_FAMILIES = ("eq21", "eq21nu", "KT1", "p6", "theorem-final", "sine-subadditivity", "Sigma11")
GROWTH_FAMILIES = ("growth",)


@dataclass(frozen=True)
class VerificationReport:
    """
    Registro de uma verificação.

    status = pass exige margin >= -error_budget; verificações exatas têm
    orçamento zero. Relatórios de diagnóstico não afetam o status da suíte.
    """

    check_id: str
    inputs: Dict[str, Any]
    lhs: Any
    rhs: Any
    margin: Any
    error_budget: float
    status: str
    exact: bool = False
    diagnostic: bool = False
    hard: bool = False
    notes: str = ""

    @property
    def anchor(self) -> str:
        return ANCHORS.get(self.check_id, "")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "inputs": {k: format_real(v) for k, v in self.inputs.items()},
            "lhs": format_real(self.lhs),
            "rhs": format_real(self.rhs),
            "margin": format_real(self.margin),
            "error_budget": format_real(self.error_budget),
            "status": self.status,
            "exact": self.exact,
            "diagnostic": self.diagnostic,
            "notes": self.notes,
        }


def format_real(value: Any) -> Any:
    """Reais como strings decimais com 17 algarismos significativos; inteiros e racionais exatos."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return int_text(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int_text(value.numerator)
        try:
            return format(float(value), ".17g")
        except OverflowError:
            return f"{int_text(value.numerator)}/{int_text(value.denominator)}"
    if isinstance(value, complex):
        return f"{value.real:.17g}{value.imag:+.17g}j"
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, (list, tuple)):
        return [format_real(v) for v in value]
    return str(value)


def _numeric_report(check_id: str, inputs: Dict[str, Any], lhs: QuadratureResult,
                    rhs: QuadratureResult, rel_tol: float, diagnostic: bool = False,
                    notes: str = "") -> VerificationReport:
    """lhs <= rhs com orçamento rel_tol*|rhs| + erros de quadratura."""
    margin = rhs.value - lhs.value
    budget = rel_tol * abs(rhs.value) + lhs.total_error + rhs.total_error
    status = PASS if margin >= -budget else FAIL
    if status == FAIL and not diagnostic:
        logger.warning(f"{check_id} falhou para {inputs}: margem {margin:.6g}")
    return VerificationReport(check_id, inputs, lhs.value, rhs.value, margin, budget, status,
                              diagnostic=diagnostic, notes=notes)


def _inconclusive(check_id: str, inputs: Dict[str, Any], error: AccuracyError) -> VerificationReport:
    logger.warning(f"{check_id} inconclusivo para {inputs}: {error}")
    partial = error.partial
    return VerificationReport(check_id, inputs, None, None, None, partial.total_error,
                              INCONCLUSIVE, notes=str(error))


def _from_exact(check: ExactCheck) -> VerificationReport:
    margin = None
    if check.lhs is not None and check.rhs is not None:
        margin = check.rhs - check.lhs
    notes = check.notes
    if check.witness is not None:
        notes = f"{notes}; testemunha x={check.witness}".strip("; ")
    return VerificationReport(
        check_id=check.check_id,
        inputs=dict(check.inputs),
        lhs=check.lhs,
        rhs=check.rhs,
        margin=margin,
        error_budget=check.error_budget,
        status=PASS if check.passed else FAIL,
        exact=not check.sampled,
        diagnostic=check.diagnostic,
        notes=notes,
    )


def _from_numeric(check: NumericCheck) -> VerificationReport:
    return VerificationReport(
        check_id=check.check_id,
        inputs=dict(check.inputs),
        lhs=check.lhs,
        rhs=check.rhs,
        margin=check.error_budget - check.discrepancy,
        error_budget=check.error_budget,
        status=PASS if check.passed else FAIL,
        notes=f"discrepância {check.discrepancy:.3g}",
    )


def _from_growth(entry: GrowthEntry) -> VerificationReport:
    lhs, rhs = entry.lhs, entry.rhs
    if isinstance(lhs, tuple):
        lhs, rhs = str(lhs), str(rhs)
    return VerificationReport(
        check_id=entry.check_id,
        inputs={"k": entry.k},
        lhs=lhs,
        rhs=rhs,
        margin=None,
        error_budget=0.0,
        status=PASS if entry.passed else FAIL,
        exact=True,
        diagnostic=entry.diagnostic,
        notes=entry.note,
    )


# ---------------------------------------------------------------------------
# Desigualdades numéricas
# ---------------------------------------------------------------------------

def check_eq21(measure: MeasureSpec, T: float,
               config: Optional[EngineConfig] = None) -> Tuple[VerificationReport, VerificationReport]:
    """
    Verifica integral de sinc^2(Tu/2) nu(du) <= (1/T) integral_{-T}^{T} nu^ <= 3 integral sinc^2(Tu/2) nu(du).

    Returns:
        (desigualdade inferior, desigualdade superior)
    """
    config = config or load_config()
    inputs = {"measure": measure.label, "T": T}
    try:
        moment = sinc_moment(measure, T / 2, 2, config.moment_rel_tol)
        window = fhat_window_integral(measure, T, config.quad_rel_tol).scaled(1 / T)
    except AccuracyError as e:
        return _inconclusive("eq21", {**inputs, "side": "lower"}, e), \
            _inconclusive("eq21", {**inputs, "side": "upper"}, e)
    lower = _numeric_report("eq21", {**inputs, "side": "lower"}, moment, window, config.check_rel_tol)
    upper = _numeric_report("eq21", {**inputs, "side": "upper"}, window, moment.scaled(3.0),
                            config.check_rel_tol)
    return lower, upper


def check_eq21nu(measure: MeasureSpec, T: float, kappa: int,
                 config: Optional[EngineConfig] = None) -> VerificationReport:
    """Verifica integral sinc^{2 kappa}(Tu/2) nu(du) <= (1/T) integral_{-kappa T}^{kappa T} |nu^|."""
    if kappa < 1:
        raise ValueError(f"kappa deve ser >= 1: {kappa}")
    config = config or load_config()
    inputs = {"measure": measure.label, "T": T, "kappa": kappa}
    try:
        moment = sinc_moment(measure, T / 2, 2 * kappa, config.moment_rel_tol)
        window = fhat_window_integral(measure, kappa * T, config.quad_rel_tol).scaled(1 / T)
    except AccuracyError as e:
        return _inconclusive("eq21nu", inputs, e)
    return _numeric_report("eq21nu", inputs, moment, window, config.check_rel_tol)


def block_state(k: int, budget: Optional[int] = None) -> Tuple[StackState, SequenceTable]:
    """Estado completo em m = R_k e a tabela de sequências até k."""
    table = sequences(k, budget)
    return iterate_to(table.R[-1], budget), table


def check_p6(measure: MeasureSpec, k: int, W: float, sinc_form: str = "transform",
             constant_shift: int = 0, config: Optional[EngineConfig] = None) -> VerificationReport:
    """
    Verifica (1/2W) integral_{-W}^{W} nu^ <= lado direito por blocos no estado R_k.

    Com sinc_form="printed" o relatório é diagnóstico.
    """
    config = config or load_config()
    if not 1 <= k <= config.p6_max_block:
        raise ValueError(f"Bloco k={k} fora de 1..{config.p6_max_block}")
    check_id = "p6" if sinc_form == "transform" else "p6-printed"
    inputs = {"measure": measure.label, "k": k, "W": W}
    if constant_shift:
        inputs["constant_shift"] = constant_shift
    state, _ = block_state(k, config.step_budget)
    try:
        lhs = fhat_window_integral(measure, W, config.quad_rel_tol).scaled(1 / (2 * W))
        rhs = p6_rhs(measure, state, W, sinc_form=sinc_form, constant_shift=constant_shift,
                     config=config)
    except AccuracyError as e:
        return _inconclusive(check_id, inputs, e)
    return _numeric_report(check_id, inputs, lhs, rhs, config.check_rel_tol,
                           diagnostic=sinc_form != "transform")


def _constant_within(log2_base: int, card_exponent: int, bound_exponent: float) -> bool:
    """2^{log2_base} 3^{card_exponent} <= 2^{bound_exponent}, comparando inteiros quando possível."""
    lo, hi = math.floor(bound_exponent), math.ceil(bound_exponent)
    power3 = 3 ** card_exponent

    def at_most(e: int) -> bool:
        shift = e - log2_base
        return power3 <= (1 << shift) if shift >= 0 else False

    if at_most(lo):
        return True
    if not at_most(hi):
        return False
    return log2_base + card_exponent * math.log2(3) <= bound_exponent


def check_theorem_final(measure: MeasureSpec, T: float, k: int, epsilon: float = 0.5,
                        config: Optional[EngineConfig] = None) -> Tuple[VerificationReport, VerificationReport]:
    """
    Verifica a cadeia final com W = 2^{zeta_k} T.

    (1/T) integral_{-W}^{W} nu^ <= 2 * 2^{zeta_k} * 2^{e_{R_k} - d_k + 1} * 3^{2^{R_k}} * integral |sinc(xT)|^{r_k^2} nu(dx)

    Returns:
        (cadeia, diagnóstico da constante contra 2^{2^{(1+eps) r_k}})
    """
    config = config or load_config()
    if not 1 <= k <= config.p6_max_block:
        raise ValueError(f"Bloco k={k} fora de 1..{config.p6_max_block}")
    table = sequences(k, config.step_budget)
    r, R, zeta = table.r[-1], table.R[-1], table.zeta[-1]
    gamma, d, e = table.gamma_k[-1], table.d_k[-1], table.e_block[-1]
    inputs = {"measure": measure.label, "T": T, "k": k, "epsilon": epsilon}
    card_notes = f"#I_(R_k): 3^(2^{R}) (multiconjunto) e 3^{R} (forma impressa)"
    log2_constant = 1 + zeta + e - d + 1
    bound_exponent = 2.0 ** ((1 + epsilon) * r)
    within = _constant_within(log2_constant, 2 ** R, bound_exponent)
    constant_report = VerificationReport(
        "theorem-constant", inputs, f"2^{log2_constant} * 3^{2 ** R}", f"2^{bound_exponent:.6g}",
        None, 0.0, PASS if within else FAIL, exact=True, diagnostic=True, notes=card_notes,
    )
    if gamma < r * r:
        logger.error(f"gamma_k={gamma} < r_k^2={r * r} no bloco {k}: erro de construção")
        return VerificationReport("theorem-final", inputs, None, None, None, 0.0, FAIL,
                                  hard=True, notes="gamma_k < r_k^2"), constant_report
    W = math.ldexp(T, zeta)
    try:
        lhs = fhat_window_integral(measure, W, config.quad_rel_tol).scaled(1 / T)
        moment = sinc_moment(measure, T, r * r, config.moment_rel_tol)
    except AccuracyError as err:
        return _inconclusive("theorem-final", inputs, err), constant_report
    factor = math.ldexp(3.0 ** (2 ** R), log2_constant)
    rhs = moment.scaled(factor)
    report = _numeric_report("theorem-final", inputs, lhs, rhs, config.check_rel_tol, notes=card_notes)
    return report, constant_report


# ---------------------------------------------------------------------------
# Verificações inteiras e de seno
# ---------------------------------------------------------------------------

def check_constants(budget: Optional[int] = None) -> VerificationReport:
    expected = [2, 8, 256, 16777216]
    got = [2 ** constant_exponent(m, budget) for m in range(4)]
    return VerificationReport("constants", {"m": "0..3"}, got, expected, None, 0.0,
                              PASS if got == expected else FAIL, exact=True)


def check_gamma(max_m: int = 60, budget: Optional[int] = None) -> VerificationReport:
    bad = [s.m for s in iterate(max_m, budget) if s.m >= 1 and s.gamma != 2 ** s.m + 1]
    return VerificationReport("gamma", {"max_m": max_m}, len(bad), 0, None, 0.0,
                              PASS if not bad else FAIL, exact=True,
                              notes=f"falhas em m={bad[:5]}" if bad else "")


def check_stack(K: int = 4, budget: Optional[int] = None) -> VerificationReport:
    """
    Estrutura por blocos no estado completo.

    J_m = {k, ..., zeta_{k-1} + (m - R_{k-1}) k} para R_{k-1} < m < R_k,
    J_{R_k} = {k+1, ..., zeta_k}, c_k = r_k - h e c_j inalterado para k < j < 2k.
    """
    table = sequences(K, budget)
    states = list(iterate(table.R[-1], budget))
    problems: List[str] = []
    for k in range(1, K + 1):
        start = table.R_at(k - 1)
        base = states[start].as_dict()
        for h in range(1, table.r[k - 1] + 1):
            m = start + h
            state = states[m]
            counts = state.as_dict()
            if m < table.R_at(k):
                expected = tuple(range(k, table.zeta_at(k - 1) + h * k + 1))
            else:
                expected = tuple(range(k + 1, table.zeta_at(k) + 1))
            if state.indices != expected:
                problems.append(f"J_{m}")
            if counts.get(k, 0) != table.r[k - 1] - h:
                problems.append(f"c_{k} em m={m}")
            if any(counts.get(j) != base.get(j) for j in range(k + 1, 2 * k)):
                problems.append(f"pilhas k<j<2k em m={m}")
    return VerificationReport("stack", {"K": K}, len(problems), 0, None, 0.0,
                              PASS if not problems else FAIL, exact=True, notes="; ".join(problems))


def check_sine(pairs: int = 10000, max_n: int = 64, seed: int = 20240101) -> List[VerificationReport]:
    """
    Subaditividade do seno e consequências, em pontos aleatórios com semente fixa.

    Cada relatório traz a maior violação observada (lhs - rhs) contra zero.
    """
    rng = np.random.default_rng(seed)
    tol = 1e-12
    reports: List[VerificationReport] = []

    n = rng.integers(1, max_n + 1, size=pairs)
    x = rng.uniform(-50.0, 50.0, size=pairs)
    gap = np.max(np.abs(np.sin(n * x)) - n * np.abs(np.sin(x)))
    reports.append(VerificationReport("sine-multiple", {"pairs": pairs, "max_n": max_n}, float(gap), 0.0,
                                      float(-gap), tol, PASS if gap <= tol * max_n else FAIL))

    worst = -math.inf
    for _ in range(pairs):
        count = int(rng.integers(2, 9))
        parts = rng.uniform(0.0, math.pi, size=count)
        worst = max(worst, abs(math.sin(math.fsum(parts))) - math.fsum(np.sin(parts)))
    reports.append(VerificationReport("sine-subadditivity", {"pairs": pairs}, worst, 0.0, -worst, tol,
                                      PASS if worst <= tol else FAIL))

    N = rng.integers(1, max_n + 1, size=pairs)
    y = rng.uniform(-50.0, 50.0, size=pairs)
    gap = float(np.max(np.abs(sinc(N * y)) - np.abs(sinc(y))))
    reports.append(VerificationReport("sinc-domination", {"pairs": pairs, "max_n": max_n}, gap, 0.0,
                                      -gap, tol, PASS if gap <= tol else FAIL))
    return reports


def convelem_lists(count: int, max_len: int, seed: int) -> List[List[Fraction]]:
    """Listas racionais crescentes aleatórias (semente fixa) com 2 <= J <= max_len."""
    rng = random.Random(seed)
    lists = []
    for _ in range(count):
        J = rng.randint(2, max_len)
        values = sorted(Fraction(rng.randint(1, 8), rng.choice([1, 2, 3, 4, 8])) for _ in range(J))
        lists.append(values)
    return lists


# ---------------------------------------------------------------------------
# Suíte
# ---------------------------------------------------------------------------

Task = Callable[[], List[VerificationReport]]


def _guard(check_id: str, inputs: Dict[str, Any], task: Task) -> Task:
    def run() -> List[VerificationReport]:
        try:
            return task()
        except AccuracyError as e:
            return [_inconclusive(check_id, inputs, e)]
    return run


def _selected(suite: SuiteConfig, family: str) -> bool:
    if suite.checks is not None:
        wanted = set(suite.checks)
        if family not in wanted and not wanted & set(FAMILIES[family]):
            return False
    if family in EXACT_FAMILIES:
        return suite.include_exact
    if family in NUMERIC_FAMILIES:
        return suite.include_numeric
    return suite.include_growth


def build_tasks(suite: SuiteConfig, config: EngineConfig) -> List[Task]:
    """Lista ordenada de tarefas da suíte (a ordem define a ordem dos relatórios)."""
    tasks: List[Task] = []
    measures = [MeasureSpec.parse(m) for m in suite.measures]

    if _selected(suite, "constants"):
        tasks.append(lambda: [check_constants(config.step_budget)])
    if _selected(suite, "gamma"):
        tasks.append(lambda: [check_gamma(budget=config.step_budget)])
    if _selected(suite, "stack"):
        tasks.append(lambda: [check_stack(budget=config.step_budget)])
    if _selected(suite, "conv01"):
        tasks.append(lambda: [_from_exact(verify_conv01())])
    if _selected(suite, "KT"):
        for T, H in ((Fraction(1), Fraction(0)), (Fraction(1, 2), Fraction(1, 3)), (Fraction(2), Fraction(-3, 4))):
            tasks.append(lambda T=T, H=H: [_from_exact(verify_kt(T, H))])
    if _selected(suite, "kappaj"):
        for J in range(1, suite.kappaj_max + 1):
            tasks.append(lambda J=J: [_from_exact(verify_kappaj(J, config))])
    if _selected(suite, "convel"):
        for A, B in ((Fraction(1), Fraction(2)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 3), Fraction(5, 4))):
            tasks.append(lambda A=A, B=B: [_from_exact(c) for c in verify_convel(A, B)])
    if _selected(suite, "convelem"):
        for values in convelem_lists(suite.convelem_lists, suite.convelem_max_len, config.seed):
            tasks.append(lambda values=values: [_from_exact(verify_convelem(values))])
    if _selected(suite, "p5"):
        for m in suite.p5_exact_m:
            tasks.append(lambda m=m: [_from_exact(verify_p5(m, "exact", config=config))])
        for m in suite.p5_sampled_m:
            tasks.append(lambda m=m: [_from_exact(verify_p5(m, "sampled", config=config))])

    if _selected(suite, "growth"):
        def growth() -> List[VerificationReport]:
            report = growth_checks(None, suite.epsilon, config.step_budget)
            return [_from_growth(entry) for entry in report.entries]
        tasks.append(growth)

    if _selected(suite, "eq21"):
        for nu in measures:
            for T in suite.eq21_T:
                tasks.append(lambda nu=nu, T=T: list(check_eq21(nu, T, config)))
    if _selected(suite, "eq21nu"):
        for nu in measures:
            for T in suite.eq21_T:
                for kappa in suite.eq21nu_kappa:
                    tasks.append(lambda nu=nu, T=T, kappa=kappa: [check_eq21nu(nu, T, kappa, config)])
    if _selected(suite, "KT1"):
        for nu in measures:
            for kappa in suite.kt1_kappa:
                for S in suite.kt1_S:
                    for gamma in suite.kt1_gamma:
                        for T in suite.kt1_T:
                            inputs = {"measure": nu.label, "S": S, "gamma": gamma, "T": T, "kappa": kappa}
                            task = lambda nu=nu, S=S, gamma=gamma, T=T, kappa=kappa: [
                                _from_numeric(parseval_check(nu, S, gamma, T, kappa, config=config))]
                            tasks.append(_guard("KT1", inputs, task))
    if _selected(suite, "Sigma11"):
        for m in (0, 1, 2):
            for t in (0.0, 0.7, 1.9, 5.3):
                task = lambda m=m, t=t: [_from_numeric(sigma11_check(m, t, budget=config.step_budget))]
                tasks.append(_guard("Sigma11", {"m": m, "t": t}, task))
    if _selected(suite, "p6"):
        for nu in measures:
            for k in suite.p6_blocks:
                for W in suite.p6_W:
                    tasks.append(lambda nu=nu, k=k, W=W: [
                        check_p6(nu, k, W, constant_shift=suite.constant_shift, config=config),
                        check_p6(nu, k, W, sinc_form="printed", config=config),
                    ])
    if _selected(suite, "theorem-final"):
        for nu in measures:
            for k in suite.theorem_blocks:
                for T in suite.theorem_T:
                    tasks.append(lambda nu=nu, k=k, T=T: list(check_theorem_final(nu, T, k, suite.epsilon, config)))
    if _selected(suite, "sine-subadditivity"):
        tasks.append(lambda: check_sine(suite.sine_pairs, suite.sine_max_n, config.seed))
    return tasks


def run_suite(suite: Optional[SuiteConfig] = None,
              config: Optional[EngineConfig] = None) -> List[VerificationReport]:
    """
    Executa a suíte e devolve os relatórios na ordem da configuração.

    Falhas são dados; exceções de orçamento (passos, convolução) propagam.
    """
    suite = suite or SuiteConfig()
    config = config or load_config()
    tasks = build_tasks(suite, config)
    logger.info(f"Executando suíte com {len(tasks)} tarefas ({config.max_workers} threads)")
    with ThreadPoolExecutor(max_workers=max(1, config.max_workers)) as executor:
        futures = [executor.submit(task) for task in tasks]
        reports = [report for future in futures for report in future.result()]
    if suite.checks is not None:
        allowed = {c for name in suite.checks for c in FAMILIES.get(name, (name,))}
        reports = [r for r in reports if r.check_id in allowed]
    counts = summarize(reports)
    logger.info(f"Verificação concluída: {counts}")
    return reports


def summarize(reports: Sequence[VerificationReport]) -> Dict[str, int]:
    """Contagem por status dos relatórios não diagnósticos."""
    counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
    for report in reports:
        if not report.diagnostic:
            counts[report.status] += 1
    return counts


def exit_status(reports: Sequence[VerificationReport]) -> int:
    """0 tudo passa, 1 alguma falha, 3 só inconclusivos além de passes."""
    counts = summarize(reports)
    if counts[FAIL]:
        return 1
    if counts[INCONCLUSIVE]:
        return 3
    return 0
