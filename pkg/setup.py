# -*- coding: utf-8 -*-
"""
Instala as dependências e confere o ambiente do stackshift.

Execute: python setup.py
"""

import subprocess
import sys

# (descrição, comando) executados em ordem; o primeiro que falhar interrompe
SETUP_STEPS = [
    ("Instalando pacotes do requirements.txt",
     [sys.executable, "-m", "pip", "install", "-r", "requirements.txt"]),
    ("Conferindo imports e a linha U_6",
     [sys.executable, "test_installation.py"]),
    ("Imprimindo a tabela U_1..U_6",
     [sys.executable, "stackshift.py", "table", "--steps", "6"]),
]


def run_step(index: int, description: str, command: list) -> bool:
    """Executa um passo e mostra sua saída; retorna False em caso de erro."""
    print(f"\n[{index}/{len(SETUP_STEPS)}] {description}")
    print("-" * 60)
    try:
        result = subprocess.run(command, check=True, capture_output=True, text=True)
    except subprocess.CalledProcessError as e:
        print(f"❌ Falhou (código {e.returncode}):\n{e.stderr or e.stdout}")
        return False
    print(result.stdout)
    return True


def main() -> bool:
    print("Setup - stackshift (motor de verificação exata e numérica)")
    for index, (description, command) in enumerate(SETUP_STEPS, start=1):
        if not run_step(index, description, command):
            return False

    print("✅ Setup concluído.")
    print("Suíte completa:  python stackshift.py verify --all --out relatorio.json --pdf dossie.pdf")
    print("Testes:          python -m pytest tests/")
    return True


if __name__ == "__main__":
    if len(sys.argv) > 1:
        # invocado por pip/setuptools (egg_info, bdist_wheel, ...): metadados em pyproject.toml
        from setuptools import setup
        setup()
    else:
        sys.exit(0 if main() else 1)
