# -*- coding: utf-8 -*-
"""
stackshift - Motor de Verificação da Construção de Pilha-e-Deslocamento
"""

__version__ = "1.0.0"

from .config import EngineConfig, SuiteConfig, load_config
from .indexcalc import StackState, SequenceTable, StepBudgetExceeded, iterate, sequences, step
from .polyexact import ConvolutionBudgetExceeded, PiecewisePoly, convolve, nonneg_certificate
from .measures import AccuracyError, MeasureSpec
from .verify import VerificationReport, run_suite

__all__ = [
    'EngineConfig',
    'SuiteConfig',
    'load_config',
    'StackState',
    'SequenceTable',
    'StepBudgetExceeded',
    'iterate',
    'sequences',
    'step',
    'ConvolutionBudgetExceeded',
    'PiecewisePoly',
    'convolve',
    'nonneg_certificate',
    'AccuracyError',
    'MeasureSpec',
    'VerificationReport',
    'run_suite',
]
