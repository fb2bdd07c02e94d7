"""Numerical hyperbolic structures: the oracle substrate.

This module is the floating-point counterpart of `geometry`: it carries a
second, independently parametrized hyperbolic structure on the genus-2
surface (a twisted double of a one-holed torus with different seed matrices
and twist than the exact structure) and counts self-crossings of closed
geodesics numerically on it.  It is used as an independent oracle for the
exact detector; numerical ties are reported as indeterminate, never
silently resolved.

Crossing points accumulate exponentially near the axis endpoints, so the
computations run in mpmath extended precision; the *decision* tolerances
(crossing angle, clustering) are fixed and far above the working
precision, so indeterminate outcomes reflect genuine geometric ties.

A note on fundamental polygons: realizing the standard one-relator gluing
word on the *regular* 4g-gon degenerates (the corner development closes
onto the polygon's central symmetry, forcing 2-torsion), so the oracle
uses the doubled structure instead and exposes generator matrices plus
construction metadata.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from mpmath import mp, mpf


class IndeterminateCrossing(RuntimeError):
    """A crossing decision too close to call numerically."""


DPS = 60                 # working precision (decimal digits)
ANGLE_TOL = mpf("1e-7")  # crossings at angles below this are indeterminate
EQ_TOL = mpf("1e-30")    # geodesic-identity tolerance (relative)
EQ_GRAY = mpf("1e-12")   # ambiguity band above EQ_TOL
CLUSTER_TOL = mpf("1e-25")   # crossing-point clustering tolerance
CLUSTER_GRAY = mpf("1e-12")  # ambiguity band for clustering


# ---------------------------------------------------------------------------
# 2x2 matrices as (a, b, c, d) of mpf.
# ---------------------------------------------------------------------------

def fmul(M, N):
    a1, b1, c1, d1 = M
    a2, b2, c2, d2 = N
    return (a1 * a2 + b1 * c2, a1 * b2 + b1 * d2, c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)


def finv(M):
    a, b, c, d = M
    det = a * d - b * c
    return (d / det, -b / det, -c / det, a / det)


FID = (mpf(1), mpf(0), mpf(0), mpf(1))


@dataclass(frozen=True)
class HyperbolicStructure:
    """One SL(2,R) matrix per generator letter, plus construction metadata.

    `matrices[code]` is the matrix of the letter with that code in the
    surface alphabet order a1 < a1^-1 < b1 < b1^-1 < a2 < ...; the product
    of matrices along the surface relator is +-identity to 1e-9 and every
    generator is hyperbolic (|trace| > 2).
    """

    genus: int
    matrices: tuple
    seed: tuple

    def word_matrix(self, codes):
        M = FID
        for c in codes:
            M = fmul(M, self.matrices[c])
        return M

    def relator_residual(self) -> float:
        """Max-entry distance of the relator product from +-identity."""
        M = FID
        g = self.genus
        for i in range(g):
            a = self.matrices[4 * i]
            b = self.matrices[4 * i + 2]
            M = fmul(M, fmul(fmul(a, b), fmul(finv(a), finv(b))))
        res_plus = max(abs(M[0] - 1), abs(M[1]), abs(M[2]), abs(M[3] - 1))
        res_minus = max(abs(M[0] + 1), abs(M[1]), abs(M[2]), abs(M[3] + 1))
        return float(min(res_plus, res_minus))


def _doubled_structure(lam, B1, c0, s0) -> HyperbolicStructure:
    """Twisted double of a one-holed torus.

    A1 = diag(lam, 1/lam); Y = [A1, B1] must have trace < -2 (the holed
    torus boundary); m is the half-turn-free reflection datum for axis(Y);
    T = c0 I + s0 N twists along the axis; A2 = (Tm) B1 (Tm)^-1 and
    B2 = (Tm) A1 (Tm)^-1 satisfy [A1,B1][A2,B2] = 1 exactly.
    """
    with mp.workdps(DPS):
        lam = mpf(lam)
        c0 = mpf(c0)
        s0 = mpf(s0)
        A1 = (lam, mpf(0), mpf(0), 1 / lam)
        B1 = tuple(mpf(x) for x in B1)

        def comm(X, Y):
            return fmul(fmul(X, Y), fmul(finv(X), finv(Y)))

        Y = comm(A1, B1)
        t = Y[0] + Y[3]
        if t >= -2:
            raise AssertionError("seed commutator trace %r is not < -2" % t)
        a, b, c, d = Y
        xc = (a - d) / (2 * c)
        r2 = (t * t - 4) / (4 * c * c)
        m = (xc, r2 - xc * xc, mpf(1), -xc)
        half = t / 2
        denom = mp.sqrt(half * half - 1)
        N = tuple((y - (half if i in (0, 3) else 0)) / denom for i, y in enumerate(Y))
        T = tuple(c0 * (1 if i in (0, 3) else 0) + s0 * N[i] for i in range(4))
        C = fmul(T, m)
        Cinv = finv(C)
        A2 = fmul(fmul(C, B1), Cinv)
        B2 = fmul(fmul(C, A1), Cinv)
        mats = (A1, finv(A1), B1, finv(B1), A2, finv(A2), B2, finv(B2))
        H = HyperbolicStructure(genus=2, matrices=mats, seed=(float(lam), tuple(float(x) for x in B1), float(c0), float(s0)))
        if H.relator_residual() > 1e-9:
            raise AssertionError("doubled structure fails the surface relation")
        if any(abs(M[0] + M[3]) <= 2 for M in mats):
            raise AssertionError("non-hyperbolic generator in doubled structure")
        if _has_short_elliptic(H, 4):
            raise AssertionError("short elliptic word in doubled structure")
        return H


@lru_cache(maxsize=None)
def regular_polygon_structure(genus: int = 2) -> HyperbolicStructure:
    """The oracle hyperbolic structure for the genus-2 surface.

    Seeds differ from the exact structure (diagonal entry 3 instead of 2,
    different second generator and twist), so the two detectors compute the
    same topological quantity on different groups with different
    arithmetic.
    """
    if genus != 2:
        raise ValueError(
            "the oracle hyperbolic structure is implemented for genus 2 "
            "(got genus %d)" % genus
        )
    return _doubled_structure(3, (3, 1, 8, 3), mpf(5) / 4, mpf(3) / 4)


def _has_short_elliptic(H: HyperbolicStructure, maxlen: int) -> bool:
    """Any freely reduced word of length <= maxlen with |trace| <= 2?"""
    n = len(H.matrices)
    frontier = [(c, H.matrices[c]) for c in range(n)]
    for length in range(1, maxlen + 1):
        for last, M in frontier:
            if abs(M[0] + M[3]) <= 2:
                return True
        if length == maxlen:
            break
        frontier = [
            (c, fmul(M, H.matrices[c]))
            for last, M in frontier
            for c in range(n)
            if c != last ^ 1
        ]
    return False


# ---------------------------------------------------------------------------
# Geodesics and crossing counting (mirrors geometry.py with tolerances).
# ---------------------------------------------------------------------------

def faxis(M):
    a, b, c, d = M
    t = a + d
    if abs(t) <= 2:
        raise IndeterminateCrossing("non-hyperbolic matrix in oracle path")
    scale = max(abs(a), abs(b), abs(c), abs(d))
    if abs(c) <= mpf("1e-45") * scale:
        return ("v", b / (d - a))
    m = (a - d) / (2 * c)
    r2 = (t * t - 4) / (4 * c * c)
    if r2 <= 0:
        raise IndeterminateCrossing("negative squared radius in oracle path")
    return ("c", m, r2)


def ftransform(M, geo):
    a, b, c, d = M
    if geo[0] == "v":
        x0 = geo[1]
        den1 = c * x0 + d
        e1 = (a * x0 + b) / den1 if abs(den1) > mpf("1e-45") * max(mpf(1), abs(x0)) else None
        e2 = a / c if abs(c) > mpf("1e-45") * max(abs(a), abs(d)) else None
        if e1 is None and e2 is None:
            raise IndeterminateCrossing("degenerate geodesic image")
        if e1 is None or e2 is None:
            return ("v", e1 if e2 is None else e2)
        return ("c", (e1 + e2) / 2, ((e1 - e2) / 2) ** 2)
    _, m, r2 = geo
    u = c * m + d
    denomK = u * u - c * c * r2
    scale = u * u + c * c * r2
    pm = a * m + b
    if abs(denomK) <= mpf("1e-45") * scale:
        return ("v", (pm * u + a * c * r2) / scale)
    det = a * d - b * c
    return ("c", (pm * u - a * c * r2) / denomK, r2 * det * det / (denomK * denomK))


def fgeo_equal(g1, g2):
    """Identity test with an explicit ambiguity band."""
    if g1[0] != g2[0]:
        return False
    if g1[0] == "v":
        diff = abs(g1[1] - g2[1])
        scale = max(mpf(1), abs(g1[1]), abs(g2[1]))
    else:
        diff = max(abs(g1[1] - g2[1]), abs(g1[2] - g2[2]))
        scale = max(mpf(1), abs(g1[1]), abs(g1[2]), abs(g2[1]), abs(g2[2]))
    if diff < EQ_TOL * scale:
        return True
    if diff < EQ_GRAY * scale:
        raise IndeterminateCrossing("geodesic identity too close to call")
    return False


def fcross_angle(g1, g2):
    """(crossing?, angle) with indeterminate ties.

    For two circles centered on the real axis the intersection angle
    satisfies cos(theta) = (r1^2 + r2^2 - D^2) / (2 r1 r2).
    """
    if g1[0] == "c" and g2[0] == "c":
        _, m1, r12 = g1
        _, m2, r22 = g2
        D2 = (m1 - m2) ** 2
        denom = 2 * mp.sqrt(r12 * r22)
        cosv = (r12 + r22 - D2) / denom
    elif g1[0] == "v" and g2[0] == "v":
        raise IndeterminateCrossing("parallel vertical geodesics in oracle path")
    else:
        x0 = g1[1] if g1[0] == "v" else g2[1]
        _, m, r2 = g2 if g1[0] == "v" else g1
        cosv = (x0 - m) / mp.sqrt(r2)
    a = abs(cosv)
    # |cos| = 1 - theta^2/2 + ...; the ANGLE_TOL band around 1:
    band = ANGLE_TOL * ANGLE_TOL / 2
    if abs(a - 1) < band:
        raise IndeterminateCrossing("near-tangent geodesics")
    if a > 1:
        return False, None
    angle = mp.acos(a)
    if angle < ANGLE_TOL:
        raise IndeterminateCrossing("crossing angle below tolerance")
    return True, angle


def fcrossing_position(axis, other):
    if axis[0] == "c":
        _, m0, r02 = axis
        if other[0] == "v":
            return other[1]
        _, m, r2 = other
        return (m * m - m0 * m0 + r02 - r2) / (2 * (m - m0))
    x0 = axis[1]
    _, m, r2 = other
    return r2 - (x0 - m) ** 2


def _fapply_on_circle(M, x, y2):
    a, b, c, d = M
    axb = a * x + b
    cxd = c * x + d
    return (axb * cxd + a * c * y2) / (cxd * cxd + c * c * y2)


_SEAM_SHIFT = mpf("0.2394871523")  # generic offset avoiding symmetric seams


class FloatAxisFrame:
    def __init__(self, G, axis):
        self.G = G
        self.Ginv = finv(G)
        self.axis = axis
        if axis[0] == "c":
            _, m0, r02 = axis
            x_ref = m0 + _SEAM_SHIFT * mp.sqrt(r02)
            y2_ref = r02 - (x_ref - m0) ** 2
            x_img = _fapply_on_circle(G, x_ref, y2_ref)
            if x_img > x_ref:
                self.inc, self.dec = G, self.Ginv
                self.lo, self.hi = x_ref, x_img
            else:
                self.inc, self.dec = self.Ginv, G
                self.lo, self.hi = x_ref, _fapply_on_circle(self.Ginv, x_ref, y2_ref)
        else:
            a, _, c, d = G
            if abs(c) > mpf("1e-40") * (abs(a) + abs(d)):
                raise IndeterminateCrossing("vertical axis with non-triangular matrix")
            mu = (a / d) ** 2
            self.mu = mu if mu > 1 else 1 / mu
            self.inc = G if mu > 1 else self.Ginv
            self.dec = self.Ginv if mu > 1 else G
            self.ref = 1 + _SEAM_SHIFT

    def _y2_of(self, x):
        _, m0, r02 = self.axis
        return r02 - (x - m0) ** 2

    def normalize(self, pos, other):
        if self.axis[0] == "c":
            x = pos
            guard = 0
            while x < self.lo:
                x = _fapply_on_circle(self.inc, x, self._y2_of(x))
                other = ftransform(self.inc, other)
                guard += 1
                if guard > 1000:
                    raise IndeterminateCrossing("window normalization did not settle")
            while x >= self.hi:
                x = _fapply_on_circle(self.dec, x, self._y2_of(x))
                other = ftransform(self.dec, other)
                guard += 1
                if guard > 1000:
                    raise IndeterminateCrossing("window normalization did not settle")
            # position key: log-parameter along the axis, uniform resolution
            _, m0, r02 = self.axis
            r0 = mp.sqrt(r02)
            p_minus, p_plus = m0 - r0, m0 + r0
            key = (mp.log((x - p_minus) / (p_plus - x)),)
        else:
            y2 = pos
            guard = 0
            while y2 < self.ref:
                y2 *= self.mu
                other = ftransform(self.inc, other)
                guard += 1
                if guard > 1000:
                    raise IndeterminateCrossing("window normalization did not settle")
            while y2 >= self.ref * self.mu:
                y2 /= self.mu
                other = ftransform(self.dec, other)
                guard += 1
                if guard > 1000:
                    raise IndeterminateCrossing("window normalization did not settle")
            key = (mp.log(y2),)
        if other[0] == "v":
            return key + (mp.inf, other[1])
        return key + (other[1], other[2])


def float_crossing_count(codes, H: HyperbolicStructure) -> int:
    """Self-crossing count of the closed geodesic of a primitive word.

    Raises IndeterminateCrossing whenever a decision is within tolerance of
    a tie: near-tangency, angle below ANGLE_TOL, ambiguous clustering, or
    an odd incidence count.
    """
    n = len(codes)
    if n == 0:
        raise ValueError("empty word")
    with mp.workdps(DPS):
        pref = [FID]
        M = FID
        for c in codes:
            M = fmul(M, H.matrices[c])
            pref.append(M)
        G = pref[n]
        axis = faxis(G)
        frame = FloatAxisFrame(G, axis)
        pulled = [ftransform(finv(P), axis) for P in pref[:n]]
        records = []
        for i in range(n):
            gi = pulled[i]
            Pi = pref[i]
            for j in range(n):
                if i == j:
                    continue
                gj = pulled[j]
                if fgeo_equal(gi, gj):
                    continue
                crossing, _angle = fcross_angle(gi, gj)
                if crossing:
                    geo = ftransform(Pi, gj)
                    records.append(frame.normalize(fcrossing_position(axis, geo), geo))
        # cluster records with tolerance; ambiguity is indeterminate
        clusters: list[list[tuple]] = []
        for rec in records:
            scale = max(mpf(1), *(abs(v) for v in rec if v != mp.inf))
            target = None
            for cl in clusters:
                ref = cl[0]
                if (rec[1] == mp.inf) != (ref[1] == mp.inf):
                    continue
                comparable = [
                    abs(a - b)
                    for a, b in zip(rec, ref)
                    if not (a == mp.inf and b == mp.inf)
                ]
                d = max(comparable) if comparable else mpf(0)
                if d < CLUSTER_TOL * scale:
                    if target is not None:
                        raise IndeterminateCrossing("ambiguous crossing-point clustering")
                    target = cl
                elif d < CLUSTER_GRAY * scale:
                    raise IndeterminateCrossing("crossing points too close to separate")
            if target is None:
                clusters.append([rec])
            else:
                target.append(rec)
        if len(clusters) % 2 != 0:
            raise IndeterminateCrossing("odd incidence count in oracle")
        return len(clusters) // 2
