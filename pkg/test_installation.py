# -*- coding: utf-8 -*-
"""
Script para verificar a instalação.
Execute: python test_installation.py
"""

import sys


def check_imports():
    """Testa imports de todos os módulos necessários."""
    modules = {
        'numpy': 'NumPy',
        'pandas': 'Pandas',
        'scipy': 'SciPy',
        'sympy': 'SymPy',
        'fpdf': 'fpdf2',
        'hypothesis': 'Hypothesis',
    }

    print("=" * 60)
    print("TESTE DE INSTALAÇÃO - stackshift")
    print("=" * 60)
    print()

    failed = []
    for module, name in modules.items():
        try:
            __import__(module)
            print(f"✅ {name:20} - OK")
        except ImportError:
            print(f"❌ {name:20} - FALTANDO")
            failed.append(name)

    print()
    print("=" * 60)

    if failed:
        print(f"❌ Módulos faltando: {', '.join(failed)}")
        print()
        print("Execute para instalar:")
        print("  pip install -r requirements.txt")
        print()
        return False

    print("✅ Todos os módulos instalados corretamente!")
    print()

    print("Testando módulos locais...")
    local_modules = [
        'src.config',
        'src.indexcalc',
        'src.polyexact',
        'src.measures',
        'src.verify',
        'src.report_gen',
        'src.cli',
    ]

    local_failed = []
    for module in local_modules:
        try:
            __import__(module)
            print(f"✅ {module:25} - OK")
        except ImportError as e:
            print(f"❌ {module:25} - ERRO: {e}")
            local_failed.append(module)

    if local_failed:
        print()
        print(f"❌ Módulos locais com problemas: {', '.join(local_failed)}")
        print("Verifique se os arquivos estão no diretório correto.")
        return False

    from src.indexcalc import iterate_to
    row = iterate_to(6).row()
    expected = "(3,1) (4,6) (5,6) (6,10) (7,12) (8,9) (9,10) (10,6) (11,3) (12,2)"
    if row != expected:
        print(f"❌ Tabela U_6 inesperada: {row}")
        return False
    print(f"✅ U_6 = {row}")

    print()
    print("=" * 60)
    print("✅ INSTALAÇÃO COMPLETA E FUNCIONAL!")
    print("=" * 60)
    print()
    print("Para executar:")
    print("  python stackshift.py table --steps 6")
    print("  python stackshift.py verify --all --out relatorio.json")
    print()
    return True


if __name__ == "__main__":
    success = check_imports()
    sys.exit(0 if success else 1)
