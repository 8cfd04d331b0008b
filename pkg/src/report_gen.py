# -*- coding: utf-8 -*-
"""
Módulo de geração de relatórios.

Escreve os relatórios de verificação em JSON e TSV, a tabela de estados em
texto ou TSV, os dados de varredura para gráficos externos e um dossiê PDF
com fpdf2.
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO, Union

import pandas as pd
from fpdf import FPDF

from .indexcalc import StackState
from .verify import FAIL, INCONCLUSIVE, PASS, VerificationReport, format_real, summarize

# Configuração de logging
logger = logging.getLogger(__name__)

PLOT_COLUMNS = ["parameter", "lhs", "rhs", "margin", "status"]
TABLE_COLUMNS = ["m", "k", "j", "c"]


def _to_csv(df: pd.DataFrame) -> str:
    return df.to_csv(sep="\t", index=False, lineterminator="\n")


# ---------------------------------------------------------------------------
# Relatórios de verificação
# ---------------------------------------------------------------------------

def reports_json(reports: Sequence[VerificationReport]) -> str:
    """Array JSON com um objeto por relatório, na ordem recebida."""
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False) + "\n"


def summary_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    """Resumo com colunas check_id, status, margin."""
    return pd.DataFrame(
        [(r.check_id, r.status, format_real(r.margin)) for r in reports],
        columns=["check_id", "status", "margin"],
    )


def summary_tsv(reports: Sequence[VerificationReport]) -> str:
    return _to_csv(summary_frame(reports))


def write_text(text: str, output: Union[str, Path, TextIO]) -> None:
    """Escreve texto num caminho ou fluxo aberto."""
    if hasattr(output, "write"):
        output.write(text)
        return
    path = Path(output)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    logger.info(f"Arquivo escrito: {path}")


# ---------------------------------------------------------------------------
# Tabela de estados
# ---------------------------------------------------------------------------

def table_text(states: Iterable[StackState]) -> str:
    """Cabeçalho e uma linha "m<TAB>(j,c) (j,c) ..." por estado."""
    lines = ["m\tU_m"]
    lines.extend(f"{s.m}\t{s.row()}" for s in states)
    return "\n".join(lines) + "\n"


def table_frame(states: Iterable[StackState]) -> pd.DataFrame:
    """Formato longo: uma linha por par (j, c) com o passo m e o bloco k."""
    rows = [(s.m, s.block, j, c) for s in states for j, c in s.entries]
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def table_tsv(states: Iterable[StackState]) -> str:
    return _to_csv(table_frame(states))


# ---------------------------------------------------------------------------
# Dados de varredura
# ---------------------------------------------------------------------------

def plot_frame(rows: Sequence[Dict[str, Any]]) -> pd.DataFrame:
    """Linhas (parameter, lhs, rhs, margin, status) com reais em 17 algarismos."""
    formatted = [[format_real(row.get(col)) if col != "status" else row.get(col) for col in PLOT_COLUMNS]
                 for row in rows]
    return pd.DataFrame(formatted, columns=PLOT_COLUMNS)


def plot_tsv(rows: Sequence[Dict[str, Any]]) -> str:
    return _to_csv(plot_frame(rows))


# ---------------------------------------------------------------------------
# Dossiê PDF
# ---------------------------------------------------------------------------

def _latin1(text: Any) -> str:
    """As fontes padrão do PDF só cobrem latin-1."""
    return str(text).encode("latin-1", "replace").decode("latin-1")


class VerificationReportPDF(FPDF):
    """PDF customizado para o dossiê de verificação."""

    STATUS_COLORS = {
        PASS: (39, 174, 96),
        FAIL: (231, 76, 60),
        INCONCLUSIVE: (243, 156, 18),
    }

    def __init__(self, generated_at: Optional[datetime] = None):
        super().__init__()
        self.generated_at = generated_at or datetime.now()
        self.set_auto_page_break(auto=True, margin=15)
        self.set_margins(left=15, top=15, right=15)

    def header(self):
        """Cabeçalho das páginas."""
        self.set_font('Helvetica', 'B', 16)
        self.set_text_color(44, 62, 80)
        self.cell(0, 10, 'Dossie de Verificacao stackshift', 0, 1, 'L')
        self.set_font('Helvetica', '', 10)
        self.set_text_color(128, 128, 128)
        self.cell(0, 5, f'Gerado em: {self.generated_at.strftime("%d/%m/%Y %H:%M:%S")}', 0, 1, 'L')
        self.ln(5)

    def footer(self):
        """Rodapé das páginas."""
        self.set_y(-15)
        self.set_font('Helvetica', '', 8)
        self.set_text_color(128, 128, 128)
        self.cell(0, 10, f'Pagina {self.page_no()}', 0, 0, 'C')

    def chapter_title(self, title: str):
        """Adiciona título de capítulo."""
        self.set_font('Helvetica', 'B', 14)
        self.set_text_color(44, 62, 80)
        self.cell(0, 10, _latin1(title), 0, 1, 'L')
        self.ln(2)
        self.set_draw_color(44, 62, 80)
        self.set_line_width(0.5)
        self.line(15, self.get_y(), 195, self.get_y())
        self.ln(5)

    def add_text(self, text: str, font_size: int = 10, style: str = '', align: str = 'L'):
        """Adiciona texto formatado."""
        self.set_font('Helvetica', style, font_size)
        self.set_text_color(0, 0, 0)
        self.multi_cell(0, 5, _latin1(text), align=align)
        self.ln(2)

    def add_summary_section(self, reports: Sequence[VerificationReport]):
        """Contagens por status (relatórios não diagnósticos) e totais."""
        self.chapter_title("Resumo")
        counts = summarize(reports)
        diagnostics = sum(1 for r in reports if r.diagnostic)
        exact = sum(1 for r in reports if r.exact and not r.diagnostic)
        summary_text = f"""
Verificacoes executadas: {len(reports)}
Aprovadas: {counts[PASS]}
Reprovadas: {counts[FAIL]}
Inconclusivas: {counts[INCONCLUSIVE]}

Certificados exatos (orcamento zero): {exact}
Diagnosticos (nao afetam o status): {diagnostics}
        """
        self.add_text(summary_text.strip(), font_size=10)
        self.ln(5)

    def _table_header(self, headers: List[str], widths: List[int], x_start: float):
        self.set_font('Helvetica', 'B', 9)
        self.set_fill_color(44, 62, 80)
        self.set_text_color(255, 255, 255)
        x = x_start
        for header, width in zip(headers, widths):
            self.set_xy(x, self.get_y())
            self.cell(width, 7, header, 1, 0, 'C', True)
            x += width
        self.ln(7)

    def add_report_table(self, reports: Sequence[VerificationReport]):
        """Tabela check_id / status / margem / orçamento / entradas."""
        self.chapter_title("Relatorios")
        headers = ['Verificacao', 'Status', 'Margem', 'Orcamento', 'Entradas']
        widths = [32, 24, 30, 26, 68]
        x_start = (210 - sum(widths)) / 2
        self._table_header(headers, widths, x_start)

        fill = False
        for report in reports:
            if self.get_y() > 270:
                self.add_page()
                self._table_header(headers, widths, x_start)
            inputs = ", ".join(f"{k}={format_real(v)}" for k, v in report.inputs.items())
            margin = format_real(report.margin)
            values = [
                report.check_id,
                report.status + (" (d)" if report.diagnostic else ""),
                "-" if margin is None else f"{float(margin):.4g}" if _is_number(margin) else str(margin),
                f"{float(report.error_budget):.2g}",
                inputs,
            ]
            self.set_font('Helvetica', '', 7)
            self.set_fill_color(245, 245, 245)
            x = x_start
            for i, (value, width) in enumerate(zip(values, widths)):
                self.set_xy(x, self.get_y())
                if i == 1:
                    self.set_text_color(*self.STATUS_COLORS.get(report.status, (0, 0, 0)))
                else:
                    self.set_text_color(0, 0, 0)
                self.cell(width, 6, _latin1(value)[:48], 1, 0, 'C', fill)
                x += width
            self.ln(6)
            fill = not fill
        self.ln(5)

    def add_diagnostics_section(self, reports: Sequence[VerificationReport]):
        """Lista dos diagnósticos com âncora e observações."""
        self.chapter_title("Diagnosticos")
        lines = []
        for report in reports:
            if not report.diagnostic:
                continue
            lines.append(f"{report.check_id} [{report.status}] {report.anchor}")
            if report.notes:
                lines.append(f"  {report.notes}")
        if lines:
            self.add_text("\n".join(lines), font_size=9)
        else:
            self.add_text("Nenhum diagnostico nesta execucao.", font_size=10)


def _is_number(text: Any) -> bool:
    try:
        float(text)
    except (TypeError, ValueError):
        return False
    return True


def generate_pdf(reports: Sequence[VerificationReport], output_path: Union[str, Path],
                 generated_at: Optional[datetime] = None) -> str:
    """
    Gera o dossiê PDF da verificação.

    Args:
        reports: Relatórios da suíte
        output_path: Caminho do PDF
        generated_at: Data impressa no cabeçalho (padrão: agora)

    Returns:
        Caminho do arquivo gerado
    """
    try:
        logger.info(f"Gerando dossiê PDF: {output_path}")
        pdf = VerificationReportPDF(generated_at)
        pdf.add_page()
        pdf.add_summary_section(reports)
        pdf.add_report_table(reports)
        pdf.add_page()
        pdf.add_diagnostics_section(reports)
        pdf.output(str(output_path))
        logger.info(f"Dossiê PDF gerado com sucesso: {output_path}")
        return str(output_path)
    except Exception as e:
        logger.error(f"Erro ao gerar PDF: {e}")
        raise
