"""The closed orientable surface group of genus g >= 2.

Standard one-relator presentation

    < a1, b1, ..., ag, bg | [a1,b1][a2,b2]...[ag,bg] >

with homology coordinates ordered (a1..ag, b1..bg).  This module carries the
homological machinery: abelianization, primitivity, the degree-2 truncation
of the Magnus expansion (two independent implementations: power series and
iterated Fox derivatives) and the resulting lower-central-series membership
test used as a simpleness obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .words import Alphabet, CyclicWord, Word, WordError, commutator


def surface_alphabet(genus: int) -> Alphabet:
    """Generators in canonical letter order a1 < b1 < a2 < b2 < ..."""
    names = []
    for i in range(1, genus + 1):
        names.append("a%d" % i)
        names.append("b%d" % i)
    return Alphabet(names)


class SurfacePresentation:
    """Genus, alphabet and the single surface relator."""

    __slots__ = ("genus", "alphabet", "relator", "_hom_index")

    def __init__(self, genus: int = 2):
        if genus < 2:
            raise ValueError("genus must be at least 2, got %d" % genus)
        self.genus = genus
        self.alphabet = surface_alphabet(genus)
        rel = Word(self.alphabet)
        for i in range(1, genus + 1):
            a = self.alphabet.generator("a%d" % i)
            b = self.alphabet.generator("b%d" % i)
            rel = rel * commutator(a, b)
        self.relator = rel
        # homology coordinate of each positive letter code: a_i -> i-1, b_i -> g+i-1
        idx = {}
        for i in range(1, genus + 1):
            idx[self.alphabet.code("a%d" % i)] = i - 1
            idx[self.alphabet.code("b%d" % i)] = genus + i - 1
        self._hom_index = idx

    def __eq__(self, other):
        return isinstance(other, SurfacePresentation) and self.genus == other.genus

    def __hash__(self):
        return hash(("SurfacePresentation", self.genus))

    def __repr__(self):
        return "SurfacePresentation(genus=%d)" % self.genus

    def generator(self, name: str, sign: int = 1) -> Word:
        return self.alphabet.generator(name, sign)

    def parse(self, text: str) -> Word:
        from .words import parse_word

        return parse_word(text, self.alphabet)

    def check_word(self, w: Word | CyclicWord) -> None:
        if w.alphabet != self.alphabet:
            raise WordError("word is not over the genus-%d surface alphabet" % self.genus)

    def homology_coordinate(self, code: int) -> tuple[int, int]:
        """(coordinate index, sign) of a letter code."""
        sign = 1 if code % 2 == 0 else -1
        return self._hom_index[code & ~1], sign


def abelianize(w: Word | CyclicWord, S: SurfacePresentation) -> tuple[int, ...]:
    """Signed exponent sums in coordinates (a1..ag, b1..bg)."""
    S.check_word(w)
    vec = [0] * (2 * S.genus)
    for code in w:
        k, sign = S.homology_coordinate(code)
        vec[k] += sign
    return tuple(vec)


def is_primitive(v: tuple[int, ...]) -> bool:
    """True for the zero class and for classes with coordinate gcd 1."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g <= 1


def magnus_deg2(w: Word | CyclicWord, S: SurfacePresentation):
    """Degree <= 2 truncation of the Magnus expansion of w.

    Generators map to 1 + X, inverses to 1 - X + X^2; the product is carried
    exactly over the integers.  Returns (deg1 vector, deg2 matrix), with
    deg2[i][j] the coefficient of X_i X_j.  deg1 equals abelianize(w).
    """
    S.check_word(w)
    n = 2 * S.genus
    deg1 = [0] * n
    deg2 = [[0] * n for _ in range(n)]
    for code in w:
        k, sign = S.homology_coordinate(code)
        # multiply the accumulated series by (1 + sign*X_k [+ X_k^2 if inverse])
        for i in range(n):
            deg2[i][k] += sign * deg1[i]
        if sign == -1:
            deg2[k][k] += 1
        deg1[k] += sign
    return tuple(deg1), tuple(tuple(row) for row in deg2)


def _fox_derivative(k: int, ring: dict[tuple[int, ...], int]):
    """Fox derivative d/dx_k of a group-ring element (prefix recursion)."""
    out: dict[tuple[int, ...], int] = {}
    for word, coeff in ring.items():
        prefix: tuple[int, ...] = ()
        for code in word:
            gen = code >> 1
            if gen == k:
                if code % 2 == 0:
                    out[prefix] = out.get(prefix, 0) + coeff
                else:
                    key = prefix + (code,)
                    out[key] = out.get(key, 0) - coeff
            prefix = prefix + (code,)
    return {w: c for w, c in out.items() if c}


def fox_deg2(w: Word | CyclicWord, S: SurfacePresentation):
    """Same coefficients as magnus_deg2, via iterated Fox derivatives.

    deg1[k] = aug(d w / d x_k); deg2[i][j] = aug(d/dx_i (d w / d x_j)).
    Kept deliberately independent of the power-series route.
    """
    S.check_word(w)
    n = 2 * S.genus
    # letter code for coordinate k
    codes = tuple(w)
    base = {codes: 1}
    coord_gen = [0] * n
    for code, k in S._hom_index.items():
        coord_gen[k] = code >> 1
    firsts = [_fox_derivative(coord_gen[k], base) for k in range(n)]
    deg1 = tuple(sum(ring.values()) for ring in firsts)
    deg2 = []
    for i in range(n):
        row = []
        for j in range(n):
            second = _fox_derivative(coord_gen[i], firsts[j])
            row.append(sum(second.values()))
        deg2.append(tuple(row))
    return deg1, tuple(deg2)


_OMEGA_CACHE: dict[int, tuple] = {}


def symplectic_form(S: SurfacePresentation):
    """deg2 of the surface relator: sum_i (E_{a_i,b_i} - E_{b_i,a_i})."""
    omega = _OMEGA_CACHE.get(S.genus)
    if omega is None:
        _, omega = magnus_deg2(S.relator, S)
        _OMEGA_CACHE[S.genus] = omega
    return omega


def in_commutator(w: Word | CyclicWord, S: SurfacePresentation) -> bool:
    return all(x == 0 for x in abelianize(w, S))


def in_gamma3(w: Word | CyclicWord, S: SurfacePresentation) -> bool:
    """Membership in [G,[G,G]] for the surface group G.

    In the class-2 nilpotent quotient the commutator layer is the exterior
    square of H1 modulo the symplectic class, so the test is: deg1 = 0 and
    deg2 an integer multiple of the relator's deg2 form.
    """
    deg1, deg2 = magnus_deg2(w, S)
    if any(x != 0 for x in deg1):
        return False
    omega = symplectic_form(S)
    n = len(deg1)
    k = None
    for i in range(n):
        for j in range(n):
            if omega[i][j] != 0:
                q, r = divmod(deg2[i][j], omega[i][j])
                if r != 0:
                    return False
                if k is None:
                    k = q
                elif q != k:
                    return False
    if k is None:  # cannot happen: omega is nonzero for g >= 2
        raise AssertionError("degenerate symplectic form")
    for i in range(n):
        for j in range(n):
            if deg2[i][j] != k * omega[i][j]:
                return False
    return True


@dataclass(frozen=True)
class ObstructionReport:
    """Homological necessary conditions for a word to be a simple curve."""

    word: str
    homology: tuple[int, ...]
    primitive: bool
    in_commutator: bool
    in_gamma3: bool
    possibly_simple: bool

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "homology": list(self.homology),
            "primitive": self.primitive,
            "in_commutator": self.in_commutator,
            "in_gamma3": self.in_gamma3,
            "possibly_simple": self.possibly_simple,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ObstructionReport":
        return cls(
            word=d["word"],
            homology=tuple(d["homology"]),
            primitive=d["primitive"],
            in_commutator=d["in_commutator"],
            in_gamma3=d["in_gamma3"],
            possibly_simple=d["possibly_simple"],
        )


def obstruction_report(w: Word | CyclicWord, S: SurfacePresentation) -> ObstructionReport:
    """Evaluate both necessary conditions; curves failing either cannot be simple.

    A simple curve is primitive in homology, and a simple curve with zero
    homology class must avoid [G,[G,G]].
    """
    hom = abelianize(w, S)
    prim = is_primitive(hom)
    comm = all(x == 0 for x in hom)
    g3 = in_gamma3(w, S)
    possibly = not ((not prim) or (comm and g3))
    text = w.render() if hasattr(w, "render") else str(w)
    return ObstructionReport(
        word=text,
        homology=hom,
        primitive=prim,
        in_commutator=comm,
        in_gamma3=g3,
        possibly_simple=possibly,
    )
