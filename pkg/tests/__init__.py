"""
Testes para o splitgen

Este pacote contém testes unitários das palavras de Lyndon, contagens de
Witt, coeficientes, solver e CLI.
"""
