# -*- coding: utf-8 -*-
"""
Módulo de configuração do motor de verificação.
Junta valores padrão, o arquivo config.toml e variáveis de ambiente.
"""

import logging
import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

# Configuração de logging
logger = logging.getLogger(__name__)

ENV_STEP_BUDGET = "STACKSHIFT_STEP_BUDGET"
DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config.toml"


@dataclass(frozen=True)
class EngineConfig:
    """Limites e tolerâncias do motor (imutável)."""

    step_budget: int = 20000
    p6_max_block: int = 3
    p5_exact_max_m: int = 3
    p5_sampled_max_m: int = 6
    conv_power_max: int = 16
    quad_rel_tol: float = 1e-10
    moment_rel_tol: float = 1e-8
    parseval_rel_tol: float = 1e-6
    check_rel_tol: float = 1e-6
    max_workers: int = 4
    seed: int = 20240101

    def with_overrides(self, **overrides: Any) -> "EngineConfig":
        """Retorna cópia com os campos não-nulos substituídos."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values) if values else self


@dataclass(frozen=True)
class SuiteConfig:
    """
    Grade de parâmetros da suíte completa.

    Os valores padrão reproduzem os critérios de aceitação.
    """

    measures: Tuple[str, ...] = (
        "dirac", "atoms:a=1.0", "gaussian:sigma=1.0", "triangle", "bspline:J=2",
    )
    eq21_T: Tuple[float, ...] = (0.25, 1.0, 4.0)
    eq21nu_kappa: Tuple[int, ...] = (1, 2, 3)
    kt1_kappa: Tuple[int, ...] = (1, 2)
    kt1_S: Tuple[float, ...] = (0.0, 0.3, 0.7)
    kt1_gamma: Tuple[float, ...] = (0.0, 0.3, 0.7)
    kt1_T: Tuple[float, ...] = (0.5, 1.0, 2.0)
    p6_blocks: Tuple[int, ...] = (1, 2)
    p6_W: Tuple[float, ...] = (0.5, 1.0, 4.0)
    theorem_blocks: Tuple[int, ...] = (1, 2)
    theorem_T: Tuple[float, ...] = (0.5, 1.0)
    epsilon: float = 0.5
    kappaj_max: int = 6
    convelem_lists: int = 20
    convelem_max_len: int = 5
    p5_exact_m: Tuple[int, ...] = (0, 1, 2, 3)
    p5_sampled_m: Tuple[int, ...] = ()
    sine_pairs: int = 10000
    sine_max_n: int = 64
    include_numeric: bool = True
    include_exact: bool = True
    include_growth: bool = True
    constant_shift: int = 0
    checks: Optional[Tuple[str, ...]] = None

    @classmethod
    def exact_only(cls) -> "SuiteConfig":
        """Restringe a suíte às verificações exatas (orçamento de erro zero)."""
        return cls(include_numeric=False, include_growth=False)


def _read_toml(path: Path) -> Dict[str, Any]:
    """Lê a tabela [engine] do arquivo TOML, se existir."""
    if not path.exists():
        logger.debug(f"Arquivo de configuração ausente: {path}")
        return {}
    try:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    except tomllib.TOMLDecodeError as e:
        raise ValueError(f"Erro ao ler {path}: {e}")
    return dict(data.get("engine", {}))


def load_config(path: Optional[Path] = None, **overrides: Any) -> EngineConfig:
    """
    Carrega a configuração do motor.

    Args:
        path: Caminho do config.toml (padrão: raiz do repositório)
        **overrides: Valores explícitos (ex.: vindos da CLI)

    Returns:
        EngineConfig com padrões < TOML < ambiente < overrides

    Raises:
        ValueError: Se houver chave desconhecida ou valor inválido
    """
    config = EngineConfig()
    known = {f.name: f.type for f in fields(EngineConfig)}

    toml_values = _read_toml(Path(path) if path else DEFAULT_CONFIG_PATH)
    unknown = set(toml_values) - set(known)
    if unknown:
        raise ValueError(f"Chaves desconhecidas em [engine]: {', '.join(sorted(unknown))}")
    for key, value in toml_values.items():
        logger.debug(f"config.toml: {key} = {value}")
    config = replace(config, **toml_values)

    env_budget = os.environ.get(ENV_STEP_BUDGET)
    if env_budget:
        try:
            budget = int(env_budget)
        except ValueError:
            raise ValueError(f"{ENV_STEP_BUDGET} deve ser inteiro, recebido: {env_budget!r}")
        logger.debug(f"{ENV_STEP_BUDGET}: step_budget = {budget}")
        config = replace(config, step_budget=budget)

    config = config.with_overrides(**overrides)
    if config.step_budget < 0:
        raise ValueError(f"step_budget deve ser não-negativo: {config.step_budget}")
    return config
