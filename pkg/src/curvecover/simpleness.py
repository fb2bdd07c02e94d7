"""Deciding whether a word represents a simple closed curve.

The trusted path is exact: a conjugacy class is first put in minimal
(Dehn-reduced) cyclic form, proper powers are split off, and the primitive
core is handed to the exact crossing counter of `geometry` (axis translates
decided by integer arithmetic in Q(sqrt 33)).  The independent oracle
repeats the geometric count with floating point on the regular 4g-gon
structure of `hyperbolic`.

Word-combinatorial machinery (Dehn reduction, conjugacy minimal sets,
power detection) works for every genus; the exact detector's hyperbolic
structure is built for genus 2, which covers the default surface.
"""

from __future__ import annotations

from functools import lru_cache

from .geometry import exact_crossing_count, exact_has_crossing
from .hyperbolic import (
    HyperbolicStructure,
    IndeterminateCrossing,
    float_crossing_count,
    regular_polygon_structure,
)
from .surface import SurfacePresentation
from .words import CyclicWord, Word, invert_codes, min_rotation, reduce_codes

__all__ = [
    "TrivialClassError",
    "UnsupportedGenus",
    "IndeterminateCrossing",
    "self_intersection",
    "is_simple",
    "geodesic_oracle",
    "enumerate_simple",
    "is_trivial",
    "conjugacy_minimize",
    "conjugacy_key",
    "primitive_root",
]


class TrivialClassError(ValueError):
    """The input word is trivial in the surface group."""


class UnsupportedGenus(NotImplementedError):
    """The exact detector's hyperbolic structure only covers genus 2."""


# ---------------------------------------------------------------------------
# Dehn's algorithm data for the standard one-relator presentation.
#
# The relator has length 4g and distinct rotations of R and R^-1 share
# subwords of length at most 1, so any subword of length >= 2 determines its
# rotation; subwords longer than half the relator can be replaced by the
# shorter complement, subwords of exactly half by the equal-length
# complement (the conjugacy exchanges).
# ---------------------------------------------------------------------------

class _DehnTables:
    def __init__(self, genus: int):
        S = SurfacePresentation(genus)
        R = S.relator.codes
        L = len(R)  # 4g
        half = L // 2
        over: dict[tuple, tuple] = {}
        exch: dict[tuple, tuple] = {}
        for base in (R, invert_codes(R)):
            doubled = base + base
            for s in range(L):
                rot = doubled[s:s + L]
                key = rot[:half + 1]
                val = invert_codes(rot[half + 1:])
                if key in over and over[key] != val:
                    raise AssertionError("ambiguous long relator subword")
                over[key] = val
                hkey = rot[:half]
                hval = invert_codes(rot[half:])
                if hkey in exch and exch[hkey] != hval:
                    raise AssertionError("ambiguous half relator subword")
                exch[hkey] = hval
        self.genus = genus
        self.relator = R
        self.window = half + 1
        self.half = half
        self.over = over
        self.exch = exch


@lru_cache(maxsize=None)
def _tables(genus: int) -> _DehnTables:
    return _DehnTables(genus)


def _reduce_linear(codes: tuple, t: _DehnTables) -> tuple:
    """Dehn-reduce a linear word (word-problem normal direction)."""
    codes = reduce_codes(codes)
    w = t.window
    changed = True
    while changed:
        changed = False
        n = len(codes)
        if n < w:
            break
        for i in range(n - w + 1):
            repl = t.over.get(codes[i:i + w])
            if repl is not None:
                codes = reduce_codes(codes[:i] + repl + codes[i + w:])
                changed = True
                break
    return codes


def _cyclic_free_reduce(codes: tuple) -> tuple:
    codes = reduce_codes(codes)
    while len(codes) > 1 and codes[0] == codes[-1] ^ 1:
        codes = reduce_codes(codes[1:-1])
    return codes


def _minimize_cyclic(codes: tuple, t: _DehnTables) -> tuple:
    """Minimal-length cyclic form of the conjugacy class (canonical rotation)."""
    codes = _cyclic_free_reduce(codes)
    w = t.window
    while True:
        n = len(codes)
        if n < w:
            break
        doubled = codes + codes
        hit = None
        for i in range(n):
            repl = t.over.get(doubled[i:i + w])
            if repl is not None:
                hit = (i, repl)
                break
        if hit is None:
            break
        i, repl = hit
        codes = _cyclic_free_reduce(repl + doubled[i + w:i + n])
    return min_rotation(codes)


def _minimal_set(codes: tuple, t: _DehnTables) -> frozenset:
    """All minimal cyclic representatives, closed under half-relator exchanges.

    If an exchange uncovers a shorter form the minimization restarts there.
    """
    start = _minimize_cyclic(codes, t)
    h = t.half
    while True:
        seen = {start}
        queue = [start]
        shorter = None
        while queue and shorter is None:
            cur = queue.pop()
            n = len(cur)
            if n < h:
                continue  # too short to contain half the relator
            doubled = cur + cur
            for i in range(n):
                repl = t.exch.get(doubled[i:i + h])
                if repl is None:
                    continue
                cand = _cyclic_free_reduce(repl + doubled[i + h:i + n])
                if len(cand) < len(cur):
                    shorter = cand
                    break
                cand = min_rotation(cand)
                if cand not in seen:
                    seen.add(cand)
                    queue.append(cand)
            if len(seen) > 100000:
                raise AssertionError("conjugacy minimal set exploded")
        if shorter is None:
            return frozenset(seen)
        start = _minimize_cyclic(shorter, t)


def _find_power(minset: frozenset) -> tuple[tuple, int]:
    """(root codes, k) with k maximal over visibly periodic minimal forms."""
    best_k = 1
    best_root = min(minset) if minset else ()
    for codes in minset:
        n = len(codes)
        for p in range(1, n):
            if n % p != 0:
                continue
            if codes == codes[:p] * (n // p):
                k = n // p
                if k > best_k:
                    best_k = k
                    best_root = min_rotation(codes[:p])
                break  # smallest period found for this form
    return best_root, best_k


def _as_cyclic_codes(w: Word | CyclicWord) -> tuple:
    if isinstance(w, CyclicWord):
        return w.codes
    return CyclicWord(w.alphabet, w.codes).codes


def is_trivial(w: Word | CyclicWord, S: SurfacePresentation) -> bool:
    """Word problem for the surface group via Dehn's algorithm."""
    S.check_word(w)
    t = _tables(S.genus)
    if isinstance(w, CyclicWord):
        return len(_minimize_cyclic(w.codes, t)) == 0
    return len(_reduce_linear(w.codes, t)) == 0


def conjugacy_minimize(w: Word | CyclicWord, S: SurfacePresentation) -> CyclicWord:
    """A minimal-length cyclic representative of the conjugacy class."""
    S.check_word(w)
    t = _tables(S.genus)
    return CyclicWord(S.alphabet, _minimize_cyclic(_as_cyclic_codes(w), t))


def conjugacy_key(w: Word | CyclicWord, S: SurfacePresentation) -> tuple:
    """Canonical key of the (conjugacy class, inverse class) pair."""
    S.check_word(w)
    t = _tables(S.genus)
    codes = _as_cyclic_codes(w)
    ms = _minimal_set(codes, t)
    ms_inv = _minimal_set(invert_codes(codes), t)
    return min(min(ms), min(ms_inv))


def primitive_root(w: Word | CyclicWord, S: SurfacePresentation) -> tuple[CyclicWord, int]:
    """(root class, k) with w conjugate to root^k and k maximal."""
    S.check_word(w)
    t = _tables(S.genus)
    m = _minimize_cyclic(_as_cyclic_codes(w), t)
    if not m:
        raise TrivialClassError("trivial class has no primitive root")
    root, k = _find_power(_minimal_set(m, t))
    return CyclicWord(S.alphabet, root), k


def _require_genus2(S: SurfacePresentation):
    if S.genus != 2:
        raise UnsupportedGenus(
            "the exact curve detector is implemented for genus 2 "
            "(got genus %d)" % S.genus
        )


def self_intersection(c: CyclicWord | Word, S: SurfacePresentation | None = None) -> int:
    """Minimal self-intersection number of the free homotopy class of c.

    Invariant under rotation, inversion and conjugation.  Trivial classes
    (including relator conjugates) are rejected.  A proper power root^k
    contributes k^2 * si(root) + (k - 1).
    """
    if S is None:
        S = SurfacePresentation(2)
    S.check_word(c)
    _require_genus2(S)
    t = _tables(S.genus)
    m = _minimize_cyclic(_as_cyclic_codes(c), t)
    if not m:
        raise TrivialClassError("word is trivial in the surface group")
    root, k = _find_power(_minimal_set(m, t))
    if k > 1:
        base = self_intersection(CyclicWord(S.alphabet, root), S)
        return k * k * base + (k - 1)
    return exact_crossing_count(m)


def is_simple(w: Word | CyclicWord, S: SurfacePresentation | None = None) -> bool:
    """True iff w represents a homotopically nontrivial simple closed curve.

    Trivial classes return False (they are not curves).
    """
    if S is None:
        S = SurfacePresentation(2)
    S.check_word(w)
    _require_genus2(S)
    t = _tables(S.genus)
    m = _minimize_cyclic(_as_cyclic_codes(w), t)
    if not m:
        return False
    _, k = _find_power(_minimal_set(m, t))
    if k > 1:
        return False
    return not exact_has_crossing(m)


def geodesic_oracle(
    c: CyclicWord | Word,
    H: HyperbolicStructure | None = None,
    S: SurfacePresentation | None = None,
) -> int:
    """Self-crossing count of the closed geodesic, computed numerically.

    Independent of the exact detector: different hyperbolic structure
    (regular 4g-gon), floating-point arithmetic, explicit tolerances.
    Raises IndeterminateCrossing on numerical ties.
    """
    if H is None:
        H = regular_polygon_structure(2)
    if S is None:
        S = SurfacePresentation(H.genus)
    if S.genus != H.genus:
        raise ValueError("surface and structure genus disagree")
    S.check_word(c)
    t = _tables(S.genus)
    m = _minimize_cyclic(_as_cyclic_codes(c), t)
    if not m:
        raise TrivialClassError("word is trivial in the surface group")
    root, k = _find_power(_minimal_set(m, t))
    if k > 1:
        base = geodesic_oracle(CyclicWord(S.alphabet, root), H, S)
        return k * k * base + (k - 1)
    return float_crossing_count(m, H)


# ---------------------------------------------------------------------------
# Enumeration of canonical cyclic words and of simple classes.
# ---------------------------------------------------------------------------

def necklaces_reduced(n: int, num_codes: int, class_prune=None):
    """Canonical (minimal-rotation) cyclically reduced words of length n.

    Fredricksen-Kessler-Maiorana generation with the free-reduction
    constraint; `class_prune(state, letter, remaining)` may veto branches
    (used for homology-class pruning), where `state` evolves via xor of the
    letter's generator slot bit.
    """
    if n == 0:
        yield ()
        return
    a = [0] * (n + 1)

    def rec(tpos, p, state):
        if tpos > n:
            if n % p == 0:
                word = tuple(a[1:n + 1])
                if n == 1 or word[-1] != word[0] ^ 1:
                    if class_prune is None or state == 0:
                        yield word
            return
        c0 = a[tpos - p]
        rem = n - tpos
        for j in range(c0, num_codes):
            if tpos > 1 and j == a[tpos - 1] ^ 1:
                continue
            if class_prune is not None:
                ns = state ^ (1 << (j >> 1))
                if not class_prune(ns, rem):
                    continue
            else:
                ns = 0
            a[tpos] = j
            yield from rec(tpos + 1, p if j == c0 else tpos, ns)

    yield from rec(1, 1, 0)


def _popcount_prune(state: int, remaining: int) -> bool:
    pc = bin(state).count("1")
    return pc <= remaining and (pc - remaining) % 2 == 0


def canonical_cyclic_words(S: SurfacePresentation, n: int, mod2_zero: bool = False):
    """Canonical cyclically reduced cyclic words of length exactly n,
    one per (rotation, inversion) pair; optionally only words with zero
    mod-2 homology class."""
    prune = _popcount_prune if mod2_zero else None
    if mod2_zero and n % 2 == 1:
        return
    for codes in necklaces_reduced(n, S.alphabet.num_codes, prune):
        if min_rotation(invert_codes(codes)) < codes:
            continue
        yield codes


def _enumerate_simple_codes(genus: int, lengths: list[int]) -> list[tuple]:
    S = SurfacePresentation(genus)
    hits = []
    for n in lengths:
        for codes in canonical_cyclic_words(S, n):
            if is_simple(CyclicWord(S.alphabet, codes), S):
                hits.append(codes)
    return hits


def enumerate_simple(
    S: SurfacePresentation, maxlen: int, threads: int = 1
) -> list[CyclicWord]:
    """All simple classes with a representative of length <= maxlen.

    One canonical representative per (class, inverse-class) pair, sorted by
    (length, canonical form); the order does not depend on `threads`.
    """
    if maxlen < 1:
        raise ValueError("maxlen must be >= 1")
    _require_genus2(S)
    lengths = list(range(1, maxlen + 1))
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [lengths[i::threads] for i in range(threads)]
        hits: list[tuple] = []
        with ProcessPoolExecutor(max_workers=threads) as ex:
            for part in ex.map(_enumerate_simple_codes, [S.genus] * threads, chunks):
                hits.extend(part)
    else:
        hits = _enumerate_simple_codes(S.genus, lengths)
    # dedupe by conjugacy class including inversion, keep the minimal form
    best: dict[tuple, tuple] = {}
    for codes in hits:
        key = conjugacy_key(CyclicWord(S.alphabet, codes), S)
        cur = best.get(key)
        if cur is None or (len(codes), codes) < (len(cur), cur):
            best[key] = codes
    out = sorted(best.values(), key=lambda c: (len(c), c))
    return [CyclicWord(S.alphabet, c) for c in out]
