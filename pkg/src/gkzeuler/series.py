"""Truncated evaluation of the Gamma-series and dual Gamma-series attached
to a simplex, convergence-domain point sampling, and the simplex
transformation matrices.

Terms are summed shell by shell in graded-lex order of the exponent vector;
each shell is evaluated in log-space (complex log-Gamma) and the shells are
combined with compensated accumulation, so results are deterministic.  All
complex powers use the principal logarithm.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, loggamma

from .errors import (DivergentTail, NonGenericParameter, ScaleTooSmall)
from . import intlinalg
from .config import is_very_generic
from .triangulation import Simplex, make_simplex

_POLE_TOL = 1e-12


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    order: int
    terms_summed: int
    last_shell_max: float
    shell_maxes: tuple      # max |term| per shell (diagnostic)
    exponent: tuple         # prefactor exponent on z_sigma, aligned with sigma

    @property
    def trusted(self):
        return self.last_shell_max < 1e-3 * max(abs(self.value), 1e-300)


def _as_simplex(cfg, sigma):
    if isinstance(sigma, Simplex):
        return sigma
    return make_simplex(cfg, sigma)


def _series_data(cfg, simplex):
    """Float/complex views of A_sigma^{-1} and A_sigma^{-1} A_sigma_bar."""
    sigma = simplex.indices
    sigma_bar = [j for j in range(1, cfg.N + 1) if j not in sigma]
    inv = [list(r) for r in simplex.inv]
    inv_f = np.array([[float(x) for x in row] for row in inv])
    if sigma_bar:
        C_fr = intlinalg.mat_mul(inv, cfg.submatrix(sigma_bar))
        C = np.array([[float(x) for x in row] for row in C_fr])
        # integer matrix det * C for the exact congruence test
        C_int = np.array([[int(x * abs(simplex.det)) for x in row]
                          for row in C_fr], dtype=object)
    else:
        C = np.zeros((cfg.d, 0))
        C_int = np.zeros((cfg.d, 0), dtype=object)
    return sigma_bar, inv_f, C, C_int


def lattice_shells(cfg, sigma, kvec, M):
    """All w = k + m in Lambda_k with |w| <= M, grouped by graded degree.

    Yields (degree, ndarray of shape (count, |sigma_bar|)) with rows in lex
    order; rows satisfy the exact congruence A_sigma_bar (w - k) in Z A_sigma.
    """
    simplex = _as_simplex(cfg, sigma)
    sigma_bar, _, _, C_int = _series_data(cfg, simplex)
    q = len(sigma_bar)
    r = abs(simplex.det)
    kvec = list(kvec) if kvec is not None else [0] * q
    for deg in range(M + 1):
        rows = list(intlinalg.graded_lex_vectors(q, deg))
        if r > 1:
            keep = []
            for w in rows:
                m = [wi - ki for wi, ki in zip(w, kvec)]
                v = [sum(C_int[i][j] * m[j] for j in range(q)) % r
                     for i in range(cfg.d)]
                if all(x == 0 for x in v):
                    keep.append(w)
            rows = keep
        yield deg, np.array(rows, dtype=np.int64).reshape(len(rows), q)


def _sum_series(cfg, simplex, kvec, z, delta, M, dual, genericity_bound):
    sigma = simplex.indices
    sigma_bar, inv_f, C, _ = _series_data(cfg, simplex)
    q = len(sigma_bar)
    if genericity_bound and not is_very_generic(cfg, sigma, delta,
                                                bound=genericity_bound):
        raise NonGenericParameter(
            f"delta={delta} hits an integer entry for sigma={sigma}")
    z = np.asarray([complex(x) for x in z])
    delta_c = np.asarray([complex(x) for x in delta])
    logz = np.log(z)
    u0 = (inv_f @ delta_c[:, None]).ravel()  # A_sigma^{-1} delta
    logz_sigma = np.array([logz[j - 1] for j in sigma])
    if q:
        logx = np.array([logz[j - 1] for j in sigma_bar]) \
            - (C.T @ logz_sigma[:, None]).ravel()
    else:
        logx = np.zeros(0, dtype=complex)
    sign = -1.0 if not dual else 1.0
    prefactor_exponent = tuple(sign * u0)
    log_prefactor = sign * complex(u0 @ logz_sigma)

    if dual:
        # positions of sigma^(0) inside sigma, and of sigma_bar cap I_0
        idx0 = [p for p, j in enumerate(sigma) if j in cfg.blocks[0]]
        bar0 = [p for p, j in enumerate(sigma_bar) if j in cfg.blocks[0]]
        srow = C[idx0, :].sum(axis=0) if idx0 else np.zeros(q)

    total = 0j
    comp = 0j     # Kahan compensation across shells
    terms = 0
    shell_maxes = []
    for deg, W in lattice_shells(cfg, sigma, kvec, M):
        if len(W) == 0:
            shell_maxes.append(0.0)
            continue
        Wf = W.astype(float)
        if dual:
            E = 1.0 + u0[None, :] - Wf @ C.T
        else:
            E = 1.0 - u0[None, :] - Wf @ C.T
        logt = Wf @ logx - gammaln(Wf + 1.0).sum(axis=1)
        logt = logt.astype(complex)
        # Gamma factors; snap terms that land on a Gamma pole to zero
        near = np.abs(E.real - np.rint(E.real)) <= _POLE_TOL
        pole = near & (np.abs(E.imag) <= _POLE_TOL) & (np.rint(E.real) <= 0)
        dead = pole.any(axis=1)
        logt -= loggamma(np.where(pole, 1.0, E)).sum(axis=1)
        if dual:
            logt += 1j * math.pi * (Wf[:, bar0].sum(axis=1) if bar0 else 0.0)
            logt += 1j * math.pi * (Wf @ srow)
        t = np.exp(logt)
        t[dead] = 0.0
        shell_sum = complex(t.sum())
        shell_maxes.append(float(np.max(np.abs(t))) if len(t) else 0.0)
        terms += len(t)
        y = shell_sum - comp
        new_total = total + y
        comp = (new_total - total) - y
        total = new_total
    value = cmath.exp(log_prefactor) * total
    tail = [x for x in shell_maxes if x > 0][-3:]
    if len(tail) == 3 and tail[0] < tail[1] < tail[2]:
        raise DivergentTail(
            f"shell maxima increasing at sigma={sigma}: {tail}")
    return SeriesValue(value=value, order=M, terms_summed=terms,
                       last_shell_max=shell_maxes[-1] if shell_maxes else 0.0,
                       shell_maxes=tuple(shell_maxes),
                       exponent=prefactor_exponent)


def gamma_series(cfg, sigma, kvec, z, delta, M, genericity_bound=2):
    """phi_{sigma,k}(z; delta) truncated at graded degree M."""
    simplex = _as_simplex(cfg, sigma)
    return _sum_series(cfg, simplex, kvec, z, delta, M, dual=False,
                       genericity_bound=genericity_bound)


def dual_gamma_series(cfg, sigma, kvec, z, delta, M, genericity_bound=2):
    """phi^vee_{sigma,k}(z; delta) truncated at graded degree M."""
    simplex = _as_simplex(cfg, sigma)
    return _sum_series(cfg, simplex, kvec, z, delta, M, dual=True,
                       genericity_bound=genericity_bound)


def sample_point_in_UT(cfg, tri, t=5.0, ratio_bound=0.1):
    """z_j = exp(-t * omega_j / max|omega|) for the triangulation's lifting;
    verifies that every series ratio magnitude is below ratio_bound."""
    omega = tri.omega
    if not omega:
        raise ScaleTooSmall("triangulation carries no lifting vector")
    scale = max(abs(w) for w in omega) or 1
    z = [math.exp(-t * w / scale) for w in omega]
    logz = [math.log(x) for x in z]
    for s in tri.simplices:
        sigma_bar, _, C, _ = _series_data(cfg, s)
        for p, j in enumerate(sigma_bar):
            lr = logz[j - 1] - sum(C[i][p] * logz[s.indices[i] - 1]
                                   for i in range(cfg.d))
            if math.exp(lr) >= ratio_bound:
                raise ScaleTooSmall(
                    f"ratio {math.exp(lr):.3g} at sigma={s.indices}, j={j}; "
                    f"increase t")
    return tuple(z)


# ---------------------------------------------------------------------------
# Simplex transformation data.
# ---------------------------------------------------------------------------

def sgn_A_sigma(cfg, sigma):
    """(-1)^{k|s^(0)| + (k-1)|s^(1)| + ... + |s^(k-1)| + k(k-1)/2}."""
    simplex = _as_simplex(cfg, sigma)
    k = cfg.k
    expo = sum((k - l) * len(simplex.blocks[l]) for l in range(k)) \
        + k * (k - 1) // 2
    return -1 if expo % 2 else 1


def _sigma0_rowsum(cfg, simplex):
    """sum_{i in sigma^(0)} e_i^T A_sigma^{-1} as a float row vector."""
    idx0 = [p for p, j in enumerate(simplex.indices) if j in cfg.blocks[0]]
    inv_f = np.array([[float(x) for x in row] for row in simplex.inv])
    if not idx0:
        return np.zeros(cfg.d)
    return inv_f[idx0, :].sum(axis=0)


def epsilon_sigma(cfg, sigma, delta, kvec=None):
    """1 when |sigma^(0)| <= 1, else
    1 - exp(-2 pi i sum_{i in sigma^(0)} e_i^T A_sigma^{-1}(delta + A_bar k))."""
    simplex = _as_simplex(cfg, sigma)
    if len(simplex.blocks[0]) <= 1:
        return 1.0 + 0j
    sigma_bar = [j for j in range(1, cfg.N + 1) if j not in simplex.indices]
    dvec = np.asarray([complex(x) for x in delta])
    if kvec is not None and any(kvec):
        Abar = np.array(cfg.submatrix(sigma_bar), dtype=float)
        dvec = dvec + Abar @ np.asarray(kvec, dtype=float)
    row = _sigma0_rowsum(cfg, simplex)
    return 1.0 - cmath.exp(-2j * math.pi * complex(row @ dvec))


def _tilde_coset_reps(simplex):
    """Complete representatives k~ of Z^sigma / Z (A_sigma^T)."""
    d = len(simplex.indices)
    r = abs(simplex.det)
    invT = [list(col) for col in zip(*[list(row) for row in simplex.inv])]
    reps = []
    seen = set()
    deg = 0
    while len(reps) < r:
        for kt in intlinalg.graded_lex_vectors(d, deg):
            frac = tuple(x % 1 for x in intlinalg.mat_vec(invT, list(kt)))
            if frac not in seen:
                seen.add(frac)
                reps.append(list(kt))
                if len(reps) == r:
                    break
        deg += 1
        if deg > 4 * r + 4:
            raise AssertionError("tilde coset search did not terminate")
    return reps


def _scalar_prefactor(cfg, simplex, delta, dual):
    k = cfg.k
    gam = [complex(delta[l]) for l in range(k)]
    sgn = sgn_A_sigma(cfg, simplex)
    num = complex(sgn)
    den = complex(simplex.det)
    for l in range(1, k + 1):
        g = gam[l - 1]
        single = len(simplex.blocks[l]) == 1
        if dual:
            num *= cmath.exp(1j * math.pi * g) if single \
                else cmath.exp(-1j * math.pi * (1 + g))
            from .specfun import gamma as _gamma
            den *= _gamma(-g)
            if single:
                den *= (1 - cmath.exp(2j * math.pi * g))
        else:
            num *= cmath.exp(-1j * math.pi * g) if single \
                else cmath.exp(-1j * math.pi * (1 - g))
            from .specfun import gamma as _gamma
            den *= _gamma(g)
            if single:
                den *= (1 - cmath.exp(-2j * math.pi * g))
    if dual:
        row = _sigma0_rowsum(cfg, simplex)
        dvec = np.asarray([complex(x) for x in delta])
        num *= cmath.exp(-1j * math.pi * complex(row @ dvec))
    return num / den


def transformation_matrix(cfg, sigma, delta, genericity_bound=2):
    """The r x r matrix T_sigma relating the cycle values f_{sigma,k~} to
    the Gamma-series phi_{sigma,k}."""
    return _transformation(cfg, sigma, delta, dual=False,
                           genericity_bound=genericity_bound)


def transformation_matrix_dual(cfg, sigma, delta, genericity_bound=2):
    return _transformation(cfg, sigma, delta, dual=True,
                           genericity_bound=genericity_bound)


def _transformation(cfg, sigma, delta, dual, genericity_bound):
    simplex = _as_simplex(cfg, sigma)
    if genericity_bound and not is_very_generic(cfg, simplex.indices, delta,
                                                bound=genericity_bound):
        raise NonGenericParameter(
            f"delta={delta} is not very generic for sigma={simplex.indices}")
    r = abs(simplex.det)
    A_rows = [list(row) for row in cfg.matrix]
    sigma_bar = [j for j in range(1, cfg.N + 1) if j not in simplex.indices]
    kreps = intlinalg.coset_representatives(A_rows, [j - 1 for j in simplex.indices])
    ktreps = _tilde_coset_reps(simplex)
    inv_f = np.array([[float(x) for x in row] for row in simplex.inv])
    dvec = np.asarray([complex(x) for x in delta])
    sgn_phase = -1.0 if dual else 1.0
    diag1 = [cmath.exp(sgn_phase * 2j * math.pi
                       * complex(np.asarray(kt, dtype=float) @ (inv_f @ dvec)))
             for kt in ktreps]
    if sigma_bar:
        C = inv_f @ np.array(cfg.submatrix(sigma_bar), dtype=float)
    else:
        C = np.zeros((cfg.d, 0))
    X = [[cmath.exp(2j * math.pi
                    * float(np.asarray(kt, dtype=float) @ (C @ np.asarray(kv, dtype=float))))
          for kv in kreps] for kt in ktreps]
    sdelta = [-x for x in delta] if dual else delta
    diag2 = [epsilon_sigma(cfg, simplex, sdelta, kv) for kv in kreps]
    scal = _scalar_prefactor(cfg, simplex, delta, dual)
    return [[scal * diag1[i] * X[i][j] * diag2[j] for j in range(r)]
            for i in range(r)]
