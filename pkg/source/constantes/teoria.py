"""Constantes explícitas dos teoremas de recuperação."""

import math

# Limite superior admissível para a constante RIP delta.
KAPPA = (10.0 - 7.0 * math.sqrt(2.0)) / 28.0

# Constantes absolutas do teorema principal de complexidade amostral.
C0 = 1600.0 * (99.0 + 70.0 * math.sqrt(2.0))
C1 = 492.0

# Garantia de OMP: K_BAR * s iterações, constante de erro C_OMP.
K_BAR = 12
C_OMP = 49.0
EPS_STAR_NORMALIZED = 1.0 / 6.0
EPS_STAR = 1.0 / 13.0

# Acima deste valor o número de condição kappa quebra a garantia de OMP.
KAPPA_CONDITION_LIMIT = 13.0 / 12.0

# Denominador do expoente de falha do CORSING.
CORSING_FAILURE_DENOMINATOR = 5.0 ** 12
