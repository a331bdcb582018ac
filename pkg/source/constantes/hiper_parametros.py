"""Hiper-parâmetros numéricos padrão da biblioteca."""

# Enumeração exata de suportes: recusa acima deste número de subconjuntos.
ENUMERATION_CAP = 2_000_000
SUPPORT_BATCH_SIZE = 4096

# Basis pursuit
BP_TOLERANCE = 1e-8
BP_MAX_ITERATIONS = 100_000
BP_GAP_CHECK_EVERY = 10
BP_FEASIBILITY_RELATIVE_SLACK = 1e-9
BP_FEASIBILITY_ABSOLUTE_SLACK = 1e-12
# dist(y, Im A) abaixo de BP_RANGE_RELATIVE_SLACK·‖y‖ conta como y ∈ Im A
BP_RANGE_RELATIVE_SLACK = 1e-10

# Quadratura Gauss-Legendre composta em (0, 1)
QUADRATURE_ORDER = 16
SYSTEM_QUADRATURE_PANELS = 256
CORSING_QUADRATURE_PANELS = 512
QUADRATURE_AGREEMENT_TOLERANCE = 1e-8

# Rank numérico
RANK_RELATIVE_TOLERANCE = 1e-12

# Grade do cone de NSP com s = 1: passos inteiros por raio 1/α da bola ℓ1
NSP_GRID_RESOLUTION = 4

# Cobertura fraca (Maurey)
MAUREY_MAX_ATTEMPTS = 64

# CORSING
CORSING_DEFAULT_GAMMA = 0.5
CORSING_DEFAULT_TEST_CAP = 65_536
CORSING_SAMPLES_FACTOR = 4.0
