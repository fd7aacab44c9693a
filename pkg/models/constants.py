"""Numeric constants shared by the closed forms and the oracles"""
import math

SQRT2 = math.sqrt(2.0)
QUARTER_PI = math.pi / 4

# Right end of the Q family, 5+4√2; P_1 and Q_{S_MAX} are the same polynomial.
S_MIN = 1.0
S_MAX = 5.0 + 4.0 * SQRT2
T_MIN = -1.0
T_MAX = 1.0

# Sharp constants of the space
MARKOV_SQUARED = 52.0 + 32.0 * SQRT2
MARKOV_LINEAR = math.sqrt(MARKOV_SQUARED)
PSI_MAXIMUM = 4.0 + SQRT2
POLARIZATION_CONSTANT = 2.0 + SQRT2 / 2.0
UNCONDITIONAL_CONSTANT = S_MAX
