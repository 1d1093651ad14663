"""Bilinear forms on the integers and the biorthogonal function systems.

The index-flip operator J with (JA)_{m,n} = A_{-n,-m} is an
anti-homomorphism of the triangular group; on windows it is total only when
the window is symmetric about 0, so every check here runs on odd-sized
symmetric windows.  The two bilinear forms mu and nu are the Toeplitz
inverses of the flipped-product evaluations R and the Legendre window.
"""

from __future__ import annotations

from fractions import Fraction

from .jacobi import ParameterPoint, jacobi
from .poly import Poly
from .reporting import VerificationReport, poly_counterexample
from .triangles import (
    TriWindow,
    build_L,
    build_M,
    build_P,
    m_entry,
    toeplitz_window,
    tri_mul,
    window_from_entries,
)


def is_symmetric_window(a: TriWindow) -> bool:
    return a.base_index == -(a.base_index + a.size - 1)


def flip(a: TriWindow) -> TriWindow:
    """(JA)_{m,n} = A_{-n,-m}; requires a window symmetric about 0."""
    if not is_symmetric_window(a):
        raise ValueError("flip needs a window symmetric about index 0")
    return window_from_entries(
        a.base_index, a.size, lambda m, n: a.entry(-n, -m)
    )


def r_offset(d: int) -> Poly:
    """Diagonal profile of R: paired products collapse to an elementary form."""
    if d == 0:
        return Poly.constant(1)
    quarter = Poly((Fraction(-1, 4), 0, Fraction(1, 4)))  # (x^2-1)/4
    if d % 2 == 0:
        return quarter ** (d // 2) * 2
    return quarter ** ((d - 1) // 2) * Poly((0, 1))


def mu_offset(d: int) -> Poly:
    """Diagonal profile of the inverse form mu."""
    if d == 0:
        return Poly.constant(1)
    half = Fraction(1, 2)
    return Poly((-half, -half)) ** d + Poly((half, -half)) ** d


def nu_offset(d: int) -> Poly:
    """Diagonal profile of nu, the inverse of the Legendre Toeplitz window.

    The d >= 2 case reads the printed row index as the diagonal offset; the
    window identity nu * P(0,0) = I checked in the suite pins this reading.
    """
    if d == 0:
        return Poly.constant(1)
    if d == 1:
        return Poly((0, -1))
    return (
        Poly((1, 0, -1))
        * jacobi(d - 2, Fraction(1), Fraction(1))
        * Fraction(1, 2 * (d - 1))
    )


def build_R(n0: int, size: int) -> TriWindow:
    return toeplitz_window(n0, size, r_offset)


def build_mu(n0: int, size: int) -> TriWindow:
    return toeplitz_window(n0, size, mu_offset)


def build_nu(n0: int, size: int) -> TriWindow:
    return toeplitz_window(n0, size, nu_offset)


def mu_value(k: int, ell: int) -> Poly:
    return mu_offset(k - ell) if k >= ell else Poly()


def nu_value(k: int, ell: int) -> Poly:
    return nu_offset(k - ell) if k >= ell else Poly()


def phi(n: int, k: int, p: ParameterPoint) -> Poly:
    """The row system: entries of L read as functions on the integers."""
    if k > n:
        return Poly()
    return jacobi(n - k, p.alpha + k, p.beta + k)


def psi(n: int, k: int, p: ParameterPoint) -> Poly:
    """The dual system: entries of the inverse matrix, index-reversed."""
    if k > n:
        return Poly()
    return m_entry(-k, -n, p.alpha, p.beta)


def run_biform_suite(p: ParameterPoint, n0: int, size: int) -> VerificationReport:
    """All matrix and double-sum identities on one symmetric window."""
    report = VerificationReport(suite="biform")
    params = {"alpha": p.alpha, "beta": p.beta, "n0": n0, "N": size}
    if n0 != -(n0 + size - 1):
        raise ValueError("biform checks need a window symmetric about 0")

    l_pos = build_L(p, n0, size)
    l_neg_flipped = flip(build_L(p.negated(), n0, size))
    r = build_R(n0, size)
    s = build_mu(n0, size)
    t = build_nu(n0, size)
    p00 = build_P(ParameterPoint(0, 0), n0, size)
    eye = {True: Poly.constant(1), False: Poly()}

    _entrywise(report, "JL(-a,-b) * L = R", params, tri_mul(l_neg_flipped, l_pos), r)
    _entrywise(report, "R * mu = I", params, tri_mul(r, s), None)
    _entrywise(report, "mu * R = I", params, tri_mul(s, r), None)
    _entrywise(
        report,
        "L * mu * JL(-a,-b) = I",
        params,
        tri_mul(tri_mul(l_pos, s), l_neg_flipped),
        None,
    )
    _entrywise(
        report, "L * JL(-a,-b) = P(0,0)", params, tri_mul(l_pos, l_neg_flipped), p00
    )
    _entrywise(report, "nu * P(0,0) = I", params, tri_mul(t, p00), None)
    _entrywise(
        report,
        "JL(-a,-b) * nu * L = I",
        params,
        tri_mul(tri_mul(l_neg_flipped, t), l_pos),
        None,
    )
    _entrywise(
        report,
        "M = mu * JL(-a,-b)",
        params,
        tri_mul(s, l_neg_flipped),
        build_M(p, n0, size),
    )

    top = n0 + size - 1
    span = range(n0, top + 1)

    # biorthogonality of the row and dual systems, as scalar sums
    ok = True
    witness = None
    for m in span:
        for n in span:
            lo, hi = min(m, n), max(m, n)
            total = Poly()
            for k in range(lo, hi + 1):
                total = total + phi(m, k, p) * psi(-n, -k, p)
            if total != eye[m == n]:
                ok, witness = False, poly_counterexample((m, n), total, eye[m == n])
                break
        if not ok:
            break
    report.check("phi/psi biorthogonality", ok, params, witness)

    # the dual pairing from the reversed product
    ok = True
    witness = None
    for m in span:
        for n in span:
            lo, hi = min(m, n), max(m, n)
            total = Poly()
            for k in range(lo, hi + 1):
                total = total + psi(-k, -m, p) * phi(k, n, p)
            if total != eye[m == n]:
                ok, witness = False, poly_counterexample((m, n), total, eye[m == n])
                break
        if not ok:
            break
    report.check("dual biorthogonality", ok, params, witness)

    # double sums against the two bilinear forms
    neg = p.negated()
    ok = True
    witness = None
    for m in span:
        for n in span:
            total = Poly()
            for k in range(n, m + 1):
                inner = Poly()
                for ell in range(n, k + 1):
                    inner = inner + phi(-n, -ell, neg) * mu_value(k, ell)
                total = total + phi(m, k, p) * inner
            if total != eye[m == n]:
                ok, witness = False, poly_counterexample((m, n), total, eye[m == n])
                break
        if not ok:
            break
    report.check("mu double sum", ok, params, witness)

    ok = True
    witness = None
    for m in span:
        for n in span:
            total = Poly()
            for k in range(n, m + 1):
                inner = Poly()
                for ell in range(n, k + 1):
                    inner = inner + phi(ell, n, p) * nu_value(k, ell)
                total = total + phi(-k, -m, neg) * inner
            if total != eye[m == n]:
                ok, witness = False, poly_counterexample((m, n), total, eye[m == n])
                break
        if not ok:
            break
    report.check("nu double sum", ok, params, witness)

    # the dual system is the mu-image of the reflected row system
    ok = True
    witness = None
    for n in span:
        for k in range(n, top + 1):
            image = Poly()
            for ell in range(n, k + 1):
                image = image + mu_value(k, ell) * phi(-n, -ell, neg)
            if image != psi(-n, -k, p):
                ok, witness = False, poly_counterexample((n, k), image, psi(-n, -k, p))
                break
        if not ok:
            break
    report.check("psi = mu . phi(-a,-b)", ok, params, witness)

    # shifting both parameters by an integer reindexes the systems
    ok = True
    witness = None
    for j in (-2, -1, 1, 2, 3):
        shifted = p.shifted(j)
        for n in span:
            for k in range(n0, n + 1):
                if phi(n, k, shifted) != phi(n + j, k + j, p):
                    ok, witness = False, {"index": (j, n, k), "system": "phi"}
                    break
                if psi(n, k, shifted) != psi(n - j, k - j, p):
                    ok, witness = False, {"index": (j, n, k), "system": "psi"}
                    break
            if not ok:
                break
        if not ok:
            break
    report.check("integer shift covariance", ok, params, witness)

    return report


def run_weighted_legendre_suite(n0: int, size: int) -> VerificationReport:
    """The parameter-free form of the biorthogonality, weighted by k/n.

    At (alpha, beta) = (0, 0) the dual system collapses onto the row system
    up to the weight k/n, with the n = 0 column extended across the apparent
    singularity.  Also asserts the advertised support shrinking: the terms
    dropped by the restricted summation ranges vanish identically.
    """
    report = VerificationReport(suite="biform-legendre")
    if n0 != -(n0 + size - 1):
        raise ValueError("needs a window symmetric about 0")
    zero = ParameterPoint(0, 0)
    eye = {True: Poly.constant(1), False: Poly()}
    top = n0 + size - 1
    span = range(n0, top + 1)
    params = {"n0": n0, "N": size}

    def weight(k: int, n: int) -> Poly:
        if n != 0:
            return phi(-n, -k, zero) * Fraction(k, n)
        return m_entry(k, 0, Fraction(0), Fraction(0))

    ok = True
    witness = None
    for m in span:
        for n in span:
            lo, hi = min(m, n), max(m, n)
            total = Poly()
            for k in range(lo, hi + 1):
                total = total + phi(m, k, zero) * weight(k, n)
            if total != eye[m == n]:
                ok, witness = False, poly_counterexample((m, n), total, eye[m == n])
                break
        if not ok:
            break
    report.check("k/n weighted biorthogonality", ok, params, witness)

    # Support restriction: the summands dropped by the shrunken ranges vanish
    # identically.  At n = 0 only the bare factor vanishes; its k/n-continued
    # weight does not (it is the nonzero column of the inverse matrix), so the
    # range restriction is a statement about the literal, un-continued terms.
    ok = True
    witness = None
    for n in span:
        for m in span:
            if n <= 0 <= -n < m:
                for k in range(-n + 1, m + 1):
                    dropped = (
                        weight(k, n) if n < 0 else phi(-n, -k, zero)
                    )
                    if not dropped.is_zero:
                        ok, witness = False, {"index": (m, n, k), "side": "upper"}
                        break
            if n < -m <= 0 <= m:
                for k in range(n, -m):
                    if not phi(m, k, zero).is_zero:
                        ok, witness = False, {"index": (m, n, k), "side": "lower"}
                        break
            if not ok:
                break
        if not ok:
            break
    report.check("restricted support", ok, params, witness)
    return report


def _entrywise(
    report: VerificationReport,
    case_id: str,
    params,
    got: TriWindow,
    expected: TriWindow | None,
) -> bool:
    """Compare windows entrywise; None means the identity window."""
    for m, n in got.indices():
        want = (
            (Poly.constant(1) if m == n else Poly())
            if expected is None
            else expected.entry(m, n)
        )
        if got.entry(m, n) != want:
            report.add_fail(
                case_id, params, poly_counterexample((m, n), got.entry(m, n), want)
            )
            return False
    report.add_pass(case_id, params)
    return True
