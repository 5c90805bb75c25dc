"""Complex special-function kernel: Gamma, reciprocal Gamma, Pochhammer
symbols and sine products.

Gamma uses the Lanczos approximation (g = 7, 9 coefficients, good for about
13 significant digits) with the reflection formula for Re z < 1/2.  The
reciprocal Gamma returns an exact 0 at (near-)nonpositive integers, which is
what graded series summation needs when a term dies on a pole.
"""

import cmath
import math
from fractions import Fraction

from .errors import PoleAtNonpositiveInteger, SineZero, UndefinedRatio

# Lanczos coefficients for g = 7.
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_POLE_TOL = 1e-12


def _is_nonpositive_integer(z, tol=_POLE_TOL):
    z = complex(z)
    n = round(z.real)
    return n <= 0 and abs(z.real - n) <= tol and abs(z.imag) <= tol


def gamma(z):
    """Gamma(z) for complex z, >= 12 significant digits on |z| <= 20 off
    poles.  Raises PoleAtNonpositiveInteger at the poles."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleAtNonpositiveInteger(f"Gamma pole at z={z}")
    if z.real < 0.5:
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    zz = z - 1.0
    acc = _LANCZOS_P[0]
    for i, p in enumerate(_LANCZOS_P[1:], start=1):
        acc += p / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (zz + 0.5) * cmath.exp(-t) * acc


def rgamma(z):
    """Entire reciprocal Gamma; exactly 0 within 1e-12 of a nonpositive
    integer."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        return 0j
    return 1.0 / gamma(z)


def pochhammer(alpha, beta):
    """(alpha)_beta = Gamma(alpha + beta) / Gamma(alpha).

    For integer beta the value is computed as a rising (or reciprocal
    falling) product, which stays finite when alpha sits on a Gamma pole but
    the ratio has a limit.
    """
    if isinstance(beta, int) or (isinstance(beta, complex) is False
                                 and float(beta).is_integer()):
        return _pochhammer_int(complex(alpha), int(beta))
    if isinstance(beta, complex) and abs(beta.imag) <= _POLE_TOL \
            and abs(beta.real - round(beta.real)) <= _POLE_TOL:
        return _pochhammer_int(complex(alpha), round(beta.real))
    a, b = complex(alpha), complex(beta)
    if _is_nonpositive_integer(a + b):
        raise UndefinedRatio(f"Gamma pole at alpha+beta={a + b}")
    if _is_nonpositive_integer(a):
        raise UndefinedRatio(f"Gamma pole at alpha={a} with non-integer beta")
    return gamma(a + b) / gamma(a)


def _pochhammer_int(a, m):
    if m >= 0:
        out = 1.0 + 0j
        for i in range(m):
            out *= a + i
        return out
    # (a)_{-m} = 1 / ((a-1)(a-2)...(a+m))
    out = 1.0 + 0j
    for i in range(1, -m + 1):
        f = a - i
        if f == 0:
            raise UndefinedRatio(f"falling product hits zero at alpha={a}, beta={m}")
        out *= f
    return 1.0 / out


def pochhammer_exact(alpha, m):
    """Exact rational rising product (alpha)_m for Fraction alpha and
    integer m (m may be negative)."""
    alpha = Fraction(alpha)
    if m >= 0:
        out = Fraction(1)
        for i in range(m):
            out *= alpha + i
        return out
    out = Fraction(1)
    for i in range(1, -m + 1):
        f = alpha - i
        if f == 0:
            raise UndefinedRatio(f"falling product hits zero at alpha={alpha}, m={m}")
        out *= f
    return 1 / out


def sin_pi_product(v):
    """prod_i sin(pi v_i); raises SineZero if any entry is (nearly)
    integral."""
    out = 1.0 + 0j
    for x in v:
        x = complex(x)
        if abs(x.real - round(x.real)) <= _POLE_TOL and abs(x.imag) <= _POLE_TOL:
            raise SineZero(f"sin(pi z) vanishes at z={x}")
        out *= cmath.sin(math.pi * x)
    return out


def pochhammer_reflection_check(gamma_val, m):
    """Residual of the reflection identity
    (g)_m = 2 pi i e^{-pi i g} (-1)^m / (Gamma(g) Gamma(1-g-m) (1-e^{-2 pi i g})).
    """
    g = complex(gamma_val)
    lhs = _pochhammer_int(g, m)
    rhs = (2j * math.pi * cmath.exp(-1j * math.pi * g) * (-1) ** m
           / (gamma(g) * gamma(1 - g - m) * (1 - cmath.exp(-2j * math.pi * g))))
    return abs(lhs - rhs)
