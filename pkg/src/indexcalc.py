# -*- coding: utf-8 -*-
"""
Módulo de cálculo exato dos índices de pilha-e-deslocamento.

Implementa as transformações D (índices) e T (contagens), as sequências
derivadas r_k, R_k, zeta_k, gamma_k, d_k, os expoentes e_m das constantes
C_m = 2^{e_m} e os multiconjuntos de deslocamentos I_m com suas somas
exponenciais. Toda contagem é inteiro de precisão arbitrária.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from .config import ENV_STEP_BUDGET, load_config

# Configuração de logging
logger = logging.getLogger(__name__)

BASE_TRIPLE: Tuple[Fraction, ...] = (Fraction(-1, 2), Fraction(0), Fraction(1, 2))

# Expansão exata do multiconjunto cresce como 3^{2^m}; acima disso só a forma fatorada
EXPAND_MAX_M = 5


def int_text(n: int) -> str:
    """Decimal exato; hexadecimal acima do limite de conversão decimal do interpretador."""
    return str(n) if abs(n).bit_length() <= 12000 else hex(n)


class StepBudgetExceeded(ValueError):
    """Número de passos pedido excede o orçamento configurado."""

    def __init__(self, requested: int, budget: int):
        self.requested = requested
        self.budget = budget
        super().__init__(
            f"Pedido de {requested} passos excede o orçamento de {budget} passos "
            f"(ajuste {ENV_STEP_BUDGET} ou step_budget no config.toml)"
        )


def _resolve_budget(budget: Optional[int]) -> int:
    return load_config().step_budget if budget is None else budget


def _check_budget(steps: int, budget: Optional[int]) -> int:
    limit = _resolve_budget(budget)
    if steps < 0:
        raise ValueError(f"Número de passos deve ser não-negativo: {steps}")
    if steps > limit:
        raise StepBudgetExceeded(steps, limit)
    return limit


# ---------------------------------------------------------------------------
# Estado da pilha
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StackState:
    """
    Configuração U_m = {(j, c_j)} após m passos.

    Attributes:
        m: Índice do passo
        entries: Pares (j, c_j) em ordem crescente de j
        scale_history: Índices mínimos j_0 usados em cada passo (k(1), ..., k(m))
    """

    m: int
    entries: Tuple[Tuple[int, int], ...]
    scale_history: Tuple[int, ...] = ()

    @property
    def block(self) -> int:
        """Bloco k com R_{k-1} < m <= R_k (0 antes do primeiro passo)."""
        return self.scale_history[-1] if self.scale_history else 0

    @property
    def gamma(self) -> int:
        """Multiplicidade total sum c_j."""
        return sum(c for _, c in self.entries)

    @property
    def degree(self) -> int:
        """Grau ponderado sum j*c_j."""
        return sum(j * c for j, c in self.entries)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(j for j, _ in self.entries)

    @property
    def min_index(self) -> int:
        return self.entries[0][0]

    @property
    def max_index(self) -> int:
        return self.entries[-1][0]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def is_interval(self) -> bool:
        """Verifica se J_m é um intervalo de inteiros."""
        idx = self.indices
        return idx == tuple(range(idx[0], idx[-1] + 1))

    def row(self) -> str:
        """Linha no formato da tabela: "(j,c) (j,c) ..."."""
        return " ".join(f"({j},{c})" for j, c in self.entries)

    def dump(self) -> str:
        """Formato de despejo: cabeçalho "m=<m> k=<k>" e uma linha "j<TAB>c" por entrada."""
        lines = [f"m={self.m} k={self.block}"]
        lines.extend(f"{j}\t{c}" for j, c in self.entries)
        return "\n".join(lines) + "\n"


def initial_state() -> StackState:
    """Conjunto básico U = {(1, 2)}."""
    return StackState(m=0, entries=((1, 2),), scale_history=())


def step(state: StackState) -> StackState:
    """
    Aplica uma vez o par de transformações (D, T).

    Consome uma unidade da pilha de menor índice j_0 e sobrepõe uma cópia
    da configuração anterior deslocada de j_0.

    Args:
        state: Estado atual (não vazio)

    Returns:
        Novo estado com m + 1 passos
    """
    if not state.entries:
        raise ValueError("Estado vazio: não há pilha para consumir")

    before = state.as_dict()
    j0 = state.min_index
    after = dict(before)
    if after[j0] > 1:
        after[j0] -= 1
    else:
        del after[j0]
    for j, c in before.items():
        after[j + j0] = after.get(j + j0, 0) + c

    return StackState(
        m=state.m + 1,
        entries=tuple(sorted(after.items())),
        scale_history=state.scale_history + (j0,),
    )


def iterate(m: int, budget: Optional[int] = None) -> Iterator[StackState]:
    """Gera U_0, U_1, ..., U_m."""
    _check_budget(m, budget)
    state = initial_state()
    yield state
    for _ in range(m):
        state = step(state)
        yield state


def iterate_to(m: int, budget: Optional[int] = None) -> StackState:
    """
    Resultado de m aplicações de step ao estado inicial.

    Raises:
        StepBudgetExceeded: Se m exceder o orçamento de passos
    """
    state = initial_state()
    for state in iterate(m, budget):
        pass
    logger.debug(f"iterate_to({m}): {len(state.entries)} índices, bloco {state.block}")
    return state


# ---------------------------------------------------------------------------
# Iteração truncada (apenas índices baixos) para sequências longas
# ---------------------------------------------------------------------------

class _WindowedStack:
    """
    Pilha truncada aos índices j <= limit.

    Deslocamentos só movem massa para índices maiores, então as contagens
    em j <= limit são exatas. gamma, grau ponderado e índice máximo seguem
    as recorrências fechadas do estado completo.
    """

    def __init__(self, limit: int):
        self.limit = limit
        self.counts: Dict[int, int] = {1: 2}
        self.m = 0
        self.gamma = 2
        self.degree = 2
        self.max_index = 1

    @property
    def exhausted(self) -> bool:
        return not self.counts

    @property
    def min_index(self) -> int:
        return min(self.counts)

    @property
    def index_count(self) -> int:
        """#J_m supondo J_m intervalo (verificado no modo completo)."""
        return self.max_index - self.min_index + 1

    def step(self) -> int:
        before = self.counts
        j0 = min(before)
        after = dict(before)
        if after[j0] > 1:
            after[j0] -= 1
        else:
            del after[j0]
        for j, c in before.items():
            target = j + j0
            if target <= self.limit:
                after[target] = after.get(target, 0) + c
        self.counts = after
        self.degree = 2 * self.degree + j0 * (self.gamma - 1)
        self.gamma = 2 * self.gamma - 1
        self.max_index += j0
        self.m += 1
        return j0


def _windowed_history(m: int) -> Tuple[int, ...]:
    """k(1), ..., k(m) pela iteração truncada, dobrando a janela se preciso."""
    limit = 32
    while True:
        stack = _WindowedStack(limit)
        history: List[int] = []
        while stack.m < m and not stack.exhausted:
            history.append(stack.step())
        if stack.m == m:
            return tuple(history)
        limit *= 2
        logger.debug(f"Janela esgotada no passo {stack.m}; nova janela {limit}")


def scale_history(m: int, budget: Optional[int] = None) -> Tuple[int, ...]:
    """Sequência k(1), ..., k(m) dos índices mínimos consumidos."""
    _check_budget(m, budget)
    return _windowed_history(m)


# ---------------------------------------------------------------------------
# Constantes C_m = 2^{e_m}
# ---------------------------------------------------------------------------

def exponents_from_history(history: Tuple[int, ...]) -> List[int]:
    """e_0, ..., e_m a partir de k(1..m): e_m = k(m) * 2^{m-1} + 2 e_{m-1}, e_0 = 1."""
    exps = [1]
    for m, k in enumerate(history, start=1):
        exps.append((k << (m - 1)) + (exps[-1] << 1))
    return exps


def constant_exponent(m: int, budget: Optional[int] = None) -> int:
    """
    Expoente e_m da constante C_m = 2^{e_m}.

    O fator de cada passo é k(m) vezes (gamma_{m-1} - 1) = 2^{m-1}, o número
    total de fatores da convolução anterior menos um.

    Args:
        m: Passo (não-negativo)
        budget: Orçamento de passos (padrão: configuração)

    Returns:
        e_m como inteiro de precisão arbitrária
    """
    history = scale_history(m, budget)
    e = 1
    for i, k in enumerate(history, start=1):
        e = (k << (i - 1)) + (e << 1)
    return e


# ---------------------------------------------------------------------------
# Tabela de sequências
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SequenceTable:
    """
    Sequências por bloco k = 1..K.

    zeta_k = 1 + r_1 + 2 r_2 + ... + k r_k; gamma_k e d_k são a multiplicidade
    total e o grau ponderado em m = R_k; e_block[k] = e_{R_k} (e_block[0] = e_0).
    """

    r: Tuple[int, ...]
    R: Tuple[int, ...]
    zeta: Tuple[int, ...]
    gamma_k: Tuple[int, ...]
    d_k: Tuple[int, ...]
    e_block: Tuple[int, ...]
    scale_history: Tuple[int, ...]
    j_counts: Tuple[int, ...]
    min_after_block: Tuple[int, ...]
    max_after_block: Tuple[int, ...]

    @property
    def K(self) -> int:
        return len(self.r)

    def R_at(self, k: int) -> int:
        return 0 if k == 0 else self.R[k - 1]

    def zeta_at(self, k: int) -> int:
        return 1 if k == 0 else self.zeta[k - 1]

    def e(self, m: int) -> int:
        """e_m para 0 <= m <= R_K."""
        if not 0 <= m <= len(self.scale_history):
            raise ValueError(f"m fora da tabela: {m}")
        return exponents_from_history(self.scale_history[:m])[-1]

    def to_frame(self) -> pd.DataFrame:
        """Tabela com colunas k, r, R, zeta, gamma_k, d_k, e_Rk."""
        return pd.DataFrame({
            "k": list(range(1, self.K + 1)),
            "r": list(self.r),
            "R": list(self.R),
            "zeta": list(self.zeta),
            "gamma_k": [int_text(g) for g in self.gamma_k],
            "d_k": [int_text(d) for d in self.d_k],
            "e_Rk": [int_text(e) for e in self.e_block[1:]],
        })

    def to_tsv(self) -> str:
        return self.to_frame().to_csv(sep="\t", index=False, lineterminator="\n")


def _run_blocks(K: Optional[int], budget: int, limit: int) -> Tuple[SequenceTable, bool]:
    """
    Percorre blocos completos com a pilha truncada.

    Com K=None para quando o próximo bloco não cabe no orçamento.
    Retorna a tabela e se a janela foi suficiente.
    """
    stack = _WindowedStack(limit)
    r: List[int] = []
    R: List[int] = []
    zeta: List[int] = []
    gamma_k: List[int] = []
    d_k: List[int] = []
    e_block: List[int] = [1]
    history: List[int] = []
    j_counts: List[int] = []
    mins: List[int] = []
    maxs: List[int] = []
    e = 1
    z = 1
    k = 0
    while K is None or k < K:
        k += 1
        if k >= limit:
            return _freeze(r, R, zeta, gamma_k, d_k, e_block, history, j_counts, mins, maxs), False
        height = stack.counts.get(k, 0)
        if stack.m + height > budget:
            if K is None:
                break
            raise StepBudgetExceeded(stack.m + height, budget)
        for _ in range(height):
            j0 = stack.step()
            history.append(j0)
            e = (j0 << (stack.m - 1)) + (e << 1)
            j_counts.append(stack.index_count)
        z += k * height
        r.append(height)
        R.append(stack.m)
        zeta.append(z)
        gamma_k.append(stack.gamma)
        d_k.append(stack.degree)
        e_block.append(e)
        mins.append(stack.min_index)
        maxs.append(stack.max_index)
    return _freeze(r, R, zeta, gamma_k, d_k, e_block, history, j_counts, mins, maxs), True


def _freeze(r, R, zeta, gamma_k, d_k, e_block, history, j_counts, mins, maxs) -> SequenceTable:
    return SequenceTable(
        r=tuple(r), R=tuple(R), zeta=tuple(zeta), gamma_k=tuple(gamma_k),
        d_k=tuple(d_k), e_block=tuple(e_block), scale_history=tuple(history),
        j_counts=tuple(j_counts), min_after_block=tuple(mins), max_after_block=tuple(maxs),
    )


def sequences(K: int, budget: Optional[int] = None) -> SequenceTable:
    """
    Calcula r_k, R_k, zeta_k, gamma_k, d_k e e_{R_k} para k = 1..K.

    r_k é a altura da pilha de índice k na entrada do bloco k.

    Raises:
        StepBudgetExceeded: Se R_K exceder o orçamento
    """
    if K < 1:
        raise ValueError(f"K deve ser positivo: {K}")
    limit = _resolve_budget(budget)
    table, _ = _run_blocks(K, limit, K + 2)
    logger.info(f"Sequências até k={K}: R_K={table.R[-1]}, r={list(table.r[:8])}")
    return table


def computable_blocks(budget: Optional[int] = None) -> SequenceTable:
    """Todos os blocos completos com R_K dentro do orçamento."""
    limit = _resolve_budget(budget)
    window = 64
    while True:
        table, complete = _run_blocks(None, limit, window)
        if complete:
            logger.info(f"Blocos computáveis com orçamento {limit}: K={table.K}")
            return table
        window *= 2


# ---------------------------------------------------------------------------
# Multiconjuntos de deslocamentos
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftMultiset:
    """
    I_m = I_{m-1} + 2^{-k(m)} I_{m-1} a partir de I = {-1/2, 0, 1/2}.

    Repetições são contadas; cardinalidade 3^{2^m}.
    """

    scale_exponents: Tuple[int, ...]
    base: Tuple[Fraction, ...] = field(default=BASE_TRIPLE)

    @property
    def m(self) -> int:
        return len(self.scale_exponents)

    @property
    def cardinality_exponent(self) -> int:
        """Expoente E com #I_m = 3^E."""
        return 2 ** self.m

    def cardinality(self) -> int:
        return 3 ** self.cardinality_exponent

    def lattice_exponent(self) -> int:
        """Todos os deslocamentos são múltiplos de 2^{-(1 + sum k)}."""
        return 1 + sum(self.scale_exponents)


def shift_multiset(m: int, budget: Optional[int] = None) -> ShiftMultiset:
    """I_m com expoentes iguais ao histórico de escalas de iterate_to(m)."""
    return ShiftMultiset(scale_exponents=scale_history(m, budget))


def scale_histogram(ms: ShiftMultiset) -> Dict[int, int]:
    """
    N(e) = número de subconjuntos S dos expoentes com soma e.

    Coeficientes de prod_i (1 + z^{k(i)}), por convolução tipo mochila.
    """
    coeffs = [1]
    for k in ms.scale_exponents:
        grown = coeffs + [0] * k
        for e, n in enumerate(coeffs):
            if n:
                grown[e + k] += n
        coeffs = grown
    return {e: n for e, n in enumerate(coeffs) if n}


def expand_offsets(ms: ShiftMultiset) -> Dict[Fraction, int]:
    """
    Expande I_m em deslocamentos distintos com multiplicidades inteiras.

    Raises:
        ValueError: Se m > EXPAND_MAX_M (expansão inviável)
    """
    if ms.m > EXPAND_MAX_M:
        raise ValueError(f"Expansão de I_m limitada a m <= {EXPAND_MAX_M}, recebido m={ms.m}")
    offsets = Counter({rho: 1 for rho in ms.base})
    for k in ms.scale_exponents:
        scale = Fraction(1, 2 ** k)
        grown: Counter = Counter()
        for a, ca in offsets.items():
            for b, cb in offsets.items():
                grown[a + scale * b] += ca * cb
        offsets = grown
    return dict(sorted(offsets.items()))


def offset_lattice(ms: ShiftMultiset) -> Tuple[int, np.ndarray]:
    """
    Pesos normalizados de I_m numa rede uniforme.

    Returns:
        (p, w): deslocamentos n * 2^{-p} para n = -(len(w)//2) .. len(w)//2,
        pesos w somando 1 (multiplicidade / 3^{2^m})
    """
    from scipy.signal import fftconvolve

    weights = np.full(3, 1.0 / 3.0)
    for k in ms.scale_exponents:
        stride = 2 ** k
        upsampled = np.zeros((len(weights) - 1) * stride + 1)
        upsampled[::stride] = weights
        weights = np.clip(fftconvolve(upsampled, weights), 0.0, None)
    return ms.lattice_exponent(), weights


@dataclass(frozen=True)
class ExpSum:
    """E(x) em forma (log|E|, sinal, zero)."""

    log_abs: Union[float, np.ndarray]
    sign: Union[int, np.ndarray]
    is_zero: Union[bool, np.ndarray]

    @property
    def value(self) -> Union[float, np.ndarray]:
        with np.errstate(over="ignore"):
            return np.where(self.is_zero, 0.0, self.sign * np.exp(self.log_abs))


def exp_sum(ms: ShiftMultiset, x: Union[float, np.ndarray]) -> ExpSum:
    """
    Soma exponencial E(x) = sum_{rho in I_m} e^{-i rho x}.

    Forma fatorada: prod_e (1 + 2 cos(2^{-e} x / 2))^{N(e)}, real por simetria.
    Aceita escalar ou array.
    """
    scalar = np.ndim(x) == 0
    xs = np.asarray(x, dtype=float)
    log_abs = np.zeros_like(xs)
    negative = np.zeros(xs.shape, dtype=bool)
    zero = np.zeros(xs.shape, dtype=bool)
    for e, n in scale_histogram(ms).items():
        factor = 1.0 + 2.0 * np.cos(np.ldexp(xs, -e) / 2.0)
        is_zero = factor == 0.0
        zero |= is_zero
        with np.errstate(divide="ignore"):
            log_abs = log_abs + float(n) * np.log(np.abs(np.where(is_zero, 1.0, factor)))
        if n % 2:
            negative ^= factor < 0.0
    sign = np.where(negative, -1, 1)
    if scalar:
        return ExpSum(float(log_abs), int(sign), bool(zero))
    return ExpSum(log_abs, sign, zero)


def exp_sum_bruteforce(ms: ShiftMultiset, x: float) -> float:
    """Oráculo: sum_rho mult(rho) cos(rho x) pela expansão explícita (m pequeno)."""
    terms = [float(c) * math.cos(float(rho) * x) for rho, c in expand_offsets(ms).items()]
    return math.fsum(terms)


# ---------------------------------------------------------------------------
# Verificações de crescimento
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthEntry:
    """Uma comparação exata de crescimento (lhs <= rhs ou lhs >= rhs conforme check)."""

    check_id: str
    k: int
    lhs: Union[int, Fraction, float]
    rhs: Union[int, Fraction, float]
    passed: bool
    diagnostic: bool = False
    note: str = ""


@dataclass(frozen=True)
class GrowthReport:
    entries: Tuple[GrowthEntry, ...]
    table: SequenceTable
    rz1_from: Optional[int]
    rz2_from: Optional[int]
    rho_empirical: float

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries if not e.diagnostic)


def _holds_from(flags: List[bool]) -> Optional[int]:
    """Menor k tal que a propriedade vale para todo k' >= k no intervalo calculado."""
    start = None
    for k, ok in enumerate(flags, start=1):
        if ok and start is None:
            start = k
        elif not ok:
            start = None
    return start


def growth_checks(K: Optional[int] = None, epsilon: float = 0.5,
                  budget: Optional[int] = None) -> GrowthReport:
    """
    Verificações exatas de crescimento sobre os blocos 1..K.

    Args:
        K: Último bloco (None: todos os blocos dentro do orçamento)
        epsilon: Parâmetro em (0, 1) das estimativas de gamma_k e d_k
        budget: Orçamento de passos

    Returns:
        GrowthReport; falhas são entradas do relatório, não exceções
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon deve estar em (0, 1): {epsilon}")
    table = computable_blocks(budget) if K is None else sequences(K, budget)
    K = table.K
    eps = Fraction(epsilon)
    r = table.r
    entries: List[GrowthEntry] = []

    for k in range(1, K + 1):
        rk = r[k - 1]
        zeta_prev = table.zeta_at(k - 1)

        # (minrn): r_n >= r_k^2 / 2 para n em {2k} U {2k..zeta_{k-1}} calculados
        if 2 * k <= K:
            span = range(2 * k, min(zeta_prev, K) + 1)
            low = min([r[2 * k - 1]] + [r[n - 1] for n in span])
            entries.append(GrowthEntry("minrn", k, low, Fraction(rk * rk, 2), 2 * low >= rk * rk))

        # consumo da pilha k: r_k passos no bloco e índice k ausente em R_k
        steps = table.R_at(k) - table.R_at(k - 1)
        consumed = all(j0 == k for j0 in table.scale_history[table.R_at(k - 1):table.R_at(k)])
        entries.append(GrowthEntry("consumption", k, steps, rk,
                                   steps == rk and consumed and table.min_after_block[k - 1] > k))

        # J_{R_k} = {k+1, ..., zeta_k}
        entries.append(GrowthEntry(
            "interval", k, (table.min_after_block[k - 1], table.max_after_block[k - 1]),
            (k + 1, table.zeta[k - 1]),
            (table.min_after_block[k - 1], table.max_after_block[k - 1]) == (k + 1, table.zeta[k - 1]),
        ))

        # (est0): contagem direta de #J_m no bloco
        block_counts = table.j_counts[table.R_at(k - 1):table.R_at(k)]
        direct = sum(block_counts)
        closed = rk * zeta_prev + k * rk * (rk - 1) // 2 + (rk - 1)
        printed = rk * zeta_prev + k * rk * (rk + 1) // 2
        entries.append(GrowthEntry(
            "est0", k, direct, closed, direct == closed and direct <= printed,
            note=f"forma impressa r_k zeta_(k-1) + k r_k (r_k+1)/2 = {printed} (cota superior)",
        ))

        # (recrk): identidade exata e cota impressa
        e_now, e_prev = table.e_block[k], table.e_block[k - 1]
        identity = k * rk * 2 ** (table.R_at(k) - 1) + 2 ** rk * e_prev if rk else e_prev
        entries.append(GrowthEntry("recrk-identity", k, e_now, identity, e_now == identity))
        bound = 2 * table.zeta[k - 1] ** 2 + 2 ** rk * e_prev
        entries.append(GrowthEntry("recrk", k, e_now, bound, e_now <= bound, diagnostic=True,
                                   note="cota impressa com recorrência baseada em #J_m"))

    for j in range(1, K.bit_length()):
        n = 2 ** j
        if n <= K:
            half = 2 ** (j - 1)
            ok = r[n - 1] * 2 ** half >= 3 ** half
            entries.append(GrowthEntry("r2j", n, r[n - 1], Fraction(3 ** half, 2 ** half), ok))

    rz1_flags: List[bool] = []
    rz2_flags: List[bool] = []
    for k in range(1, K + 1):
        rk = r[k - 1]
        zeta_prev = table.zeta_at(k - 1)
        rz1_rhs = (1 - eps) / 2 * rk * rk * zeta_prev
        rz2_rhs = (1 - eps) / 4 * rk * rk * zeta_prev * zeta_prev
        rz1_flags.append(table.gamma_k[k - 1] >= rz1_rhs)
        rz2_flags.append(table.d_k[k - 1] >= rz2_rhs)
        entries.append(GrowthEntry("Rz1", k, table.gamma_k[k - 1], rz1_rhs, rz1_flags[-1], diagnostic=True))
        entries.append(GrowthEntry("Rz2", k, table.d_k[k - 1], rz2_rhs, rz2_flags[-1], diagnostic=True))
    rz1_from = _holds_from(rz1_flags)
    rz2_from = _holds_from(rz2_flags)
    entries.append(GrowthEntry("Rz1", K, rz1_from or 0, K, rz1_from is not None,
                               note="menor k a partir do qual vale até K"))
    entries.append(GrowthEntry("Rz2", K, rz2_from or 0, K, rz2_from is not None,
                               note="menor k a partir do qual vale até K"))

    rho = min(math.exp(math.log(rk) / k) for k, rk in enumerate(r, start=1) if rk > 0)
    entries.append(GrowthEntry("roestim", K, rho, 1.0, rho > 1.0, diagnostic=True,
                               note="maior rho com r_k >= rho^k no intervalo calculado"))

    report = GrowthReport(tuple(entries), table, rz1_from, rz2_from, rho)
    logger.info(f"Verificações de crescimento: K={K}, rho empírico={rho:.4f}, "
                f"Rz1 desde k={rz1_from}, Rz2 desde k={rz2_from}")
    return report
