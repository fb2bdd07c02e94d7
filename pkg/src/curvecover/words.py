"""Word algebra for free groups over declared alphabets.

Letters are encoded as small integers.  Generator number k of an alphabet
occupies code 2*k, and its inverse occupies code 2*k + 1, so the natural
integer order on codes realises the canonical generator order

    g0 < g0^-1 < g1 < g1^-1 < g2 < ...

Words are stored freely reduced at all times; all values are immutable and
safe to share between threads.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence


class WordError(ValueError):
    """Malformed word syntax or a generator outside the alphabet."""


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_INT_RE = re.compile(r"-?[0-9]+")


def invert_code(code: int) -> int:
    return code ^ 1


def invert_codes(codes: Sequence[int]) -> tuple[int, ...]:
    return tuple(c ^ 1 for c in reversed(codes))


def reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence (stack cancellation)."""
    out: list[int] = []
    for c in codes:
        if out and out[-1] == c ^ 1:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def min_rotation(codes: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically minimal rotation (canonical cyclic form)."""
    n = len(codes)
    if n <= 1:
        return codes
    doubled = codes + codes
    best = codes
    for i in range(1, n):
        cand = doubled[i:i + n]
        if cand < best:
            best = cand
    return best


class Alphabet:
    """An ordered list of generator names defining letter codes.

    The declaration order fixes the canonical letter order used for
    cyclic-word canonical forms and for enumeration.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise WordError("duplicate generator names: %r" % (names,))
        for nm in names:
            if not _NAME_RE.fullmatch(nm) or not nm[0].islower():
                raise WordError("generator names must be lowercase identifiers, got %r" % nm)
        self.names = names
        self._index = {nm: i for i, nm in enumerate(names)}

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def num_codes(self) -> int:
        return 2 * len(self.names)

    def code(self, name: str, sign: int = 1) -> int:
        try:
            k = self._index[name]
        except KeyError:
            raise WordError("unknown generator %r (alphabet: %s)" % (name, " ".join(self.names)))
        if sign not in (1, -1):
            raise WordError("sign must be +1 or -1")
        return 2 * k + (0 if sign == 1 else 1)

    def letter_name(self, code: int) -> str:
        name = self.names[code >> 1]
        return name if code % 2 == 0 else name + "^-1"

    def generator(self, name: str, sign: int = 1) -> "Word":
        return Word(self, (self.code(name, sign),))

    def generators(self) -> list["Word"]:
        return [Word(self, (2 * k,)) for k in range(len(self.names))]

    def word(self, letters: Iterable[tuple[str, int]]) -> "Word":
        return Word(self, tuple(self.code(nm, sg) for nm, sg in letters))

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __repr__(self):
        return "Alphabet(%s)" % " ".join(self.names)


class Word:
    """A freely reduced word; the identity is the empty word."""

    __slots__ = ("alphabet", "codes")

    def __init__(self, alphabet: Alphabet, codes: Iterable[int] = (), *, _reduced: bool = False):
        self.alphabet = alphabet
        self.codes = tuple(codes) if _reduced else reduce_codes(codes)
        if self.codes and not (0 <= min(self.codes) and max(self.codes) < alphabet.num_codes):
            raise WordError("letter code outside alphabet")

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and self.codes == other.codes
            and self.alphabet == other.alphabet
        )

    def __hash__(self):
        return hash((self.alphabet.names, self.codes))

    def __mul__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise WordError("cannot multiply words over different alphabets")
        return Word(self.alphabet, reduce_codes(self.codes + other.codes), _reduced=True)

    def inverse(self) -> "Word":
        return Word(self.alphabet, invert_codes(self.codes), _reduced=True)

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word(self.alphabet)
        base = self.codes if n > 0 else invert_codes(self.codes)
        return Word(self.alphabet, reduce_codes(base * abs(n)), _reduced=True)

    def conjugate(self, by: "Word") -> "Word":
        """by * self * by^-1."""
        return by * self * by.inverse()

    @property
    def is_identity(self) -> bool:
        return not self.codes

    def render(self) -> str:
        if not self.codes:
            return "1"
        return " ".join(self.alphabet.letter_name(c) for c in self.codes)

    def __repr__(self):
        return "Word(%s)" % self.render()


class CyclicWord:
    """A cyclically reduced word up to rotation, stored in canonical form.

    The canonical form is the lexicographically minimal rotation under the
    code order g0 < g0^-1 < g1 < ...; two cyclic words are equal iff their
    canonical forms coincide.
    """

    __slots__ = ("alphabet", "codes")

    def __init__(self, alphabet: Alphabet, codes: Iterable[int] = ()):
        codes = reduce_codes(codes)
        while len(codes) > 1 and codes[0] == codes[-1] ^ 1:
            codes = reduce_codes(codes[1:-1])
        self.alphabet = alphabet
        self.codes = min_rotation(codes)
        if self.codes and not (0 <= min(self.codes) and max(self.codes) < alphabet.num_codes):
            raise WordError("letter code outside alphabet")

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __eq__(self, other):
        return (
            isinstance(other, CyclicWord)
            and self.codes == other.codes
            and self.alphabet == other.alphabet
        )

    def __lt__(self, other: "CyclicWord"):
        return (len(self.codes), self.codes) < (len(other.codes), other.codes)

    def __hash__(self):
        return hash((self.alphabet.names, self.codes, "cyc"))

    def inverse(self) -> "CyclicWord":
        return CyclicWord(self.alphabet, invert_codes(self.codes))

    def word(self) -> Word:
        return Word(self.alphabet, self.codes, _reduced=True)

    def rotations(self) -> list[tuple[int, ...]]:
        n = len(self.codes)
        doubled = self.codes + self.codes
        return [doubled[i:i + n] for i in range(max(n, 1))]

    def render(self) -> str:
        return self.word().render()

    def __repr__(self):
        return "CyclicWord(%s)" % self.render()


def free_reduce(w: Word) -> Word:
    """The unique freely reduced form (idempotent; words reduce eagerly)."""
    return Word(w.alphabet, reduce_codes(w.codes), _reduced=True)


def cyclic_reduce(w: Word) -> tuple[CyclicWord, Word]:
    """Split w = conjugator * core * conjugator^-1 with core cyclically reduced.

    The core is returned in canonical rotation; the rotation prefix is folded
    into the conjugator so the identity above holds exactly.
    """
    codes = w.codes
    conj: list[int] = []
    while len(codes) > 1 and codes[0] == codes[-1] ^ 1:
        conj.append(codes[0])
        codes = reduce_codes(codes[1:-1])
    core = min_rotation(codes)
    if core != codes and codes:
        # codes = prefix + suffix, core = suffix + prefix: fold prefix into conjugator
        n = len(codes)
        doubled = codes + codes
        for i in range(n):
            if doubled[i:i + n] == core:
                conj.extend(codes[:i])
                break
    conjugator = Word(w.alphabet, reduce_codes(tuple(conj)), _reduced=True)
    return CyclicWord(w.alphabet, core), conjugator


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1, reduced."""
    return u * v * u.inverse() * v.inverse()


class Homomorphism:
    """A map between free groups given by generator images.

    Images of inverses are inverses of images; substitution is therefore a
    group homomorphism on reduced words.
    """

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Alphabet, target: Alphabet, images: dict[str, Word]):
        self.source = source
        self.target = target
        img: dict[int, tuple[int, ...]] = {}
        for name, w in images.items():
            code = source.code(name)
            if w.alphabet != target:
                raise WordError("image of %r is over the wrong alphabet" % name)
            img[code] = w.codes
            img[code ^ 1] = invert_codes(w.codes)
        self.images = img

    def apply(self, w: Word) -> Word:
        out: list[int] = []
        for c in w.codes:
            try:
                piece = self.images[c]
            except KeyError:
                raise WordError(
                    "generator %s has no image under this homomorphism"
                    % w.alphabet.letter_name(c)
                )
            for t in piece:
                if out and out[-1] == t ^ 1:
                    out.pop()
                else:
                    out.append(t)
        return Word(self.target, tuple(out), _reduced=True)

    def __call__(self, w: Word) -> Word:
        return self.apply(w)

    def compose(self, inner: "Homomorphism") -> "Homomorphism":
        """self o inner (apply inner first)."""
        if inner.target != self.source:
            raise WordError("composition mismatch")
        images = {}
        for name in inner.source.names:
            code = inner.source.code(name)
            mid = Word(self.source, inner.images[code], _reduced=True)
            images[name] = self.apply(mid)
        return Homomorphism(inner.source, self.target, images)


def substitute(w: Word, h: Homomorphism) -> Word:
    """Image of w under h, freely reduced."""
    return h.apply(w)


# ---------------------------------------------------------------------------
# Parsing.
#
# Grammar (whitespace separates tokens; brackets/parens may abut):
#   expr  := item*
#   item  := name [^ int]               generator, optional power
#          | '[' expr ',' expr ']' [^ int]   commutator sugar
#          | '(' expr ')' ^ int         parenthesized power
# An uppercase first letter is an inverse alias: A1 == a1^-1.
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\^-?[0-9]+|[\[\](),])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise WordError("malformed word syntax at %r" % text[pos:pos + 12])
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], alphabet: Alphabet):
        self.tokens = tokens
        self.pos = 0
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise WordError("unexpected end of word")
        self.pos += 1
        return tok

    def expect(self, tok: str):
        got = self.take()
        if got != tok:
            raise WordError("expected %r, got %r" % (tok, got))

    def parse_expr(self, stop: tuple[str, ...] = ()) -> tuple[int, ...]:
        out: list[int] = []
        while True:
            tok = self.peek()
            if tok is None or tok in stop:
                return reduce_codes(out)
            out.extend(self.parse_item())

    def _power_suffix(self) -> int:
        tok = self.peek()
        if tok is not None and tok.startswith("^"):
            self.take()
            return int(tok[1:])
        return 1

    def parse_item(self) -> tuple[int, ...]:
        tok = self.take()
        if tok == "[":
            u = self.parse_expr(stop=(",",))
            self.expect(",")
            v = self.parse_expr(stop=("]",))
            self.expect("]")
            base = reduce_codes(u + v + invert_codes(u) + invert_codes(v))
        elif tok == "(":
            base = self.parse_expr(stop=(")",))
            self.expect(")")
        elif _NAME_RE.fullmatch(tok):
            if tok[0].isupper():
                base = (self.alphabet.code(tok[0].lower() + tok[1:], -1),)
            else:
                base = (self.alphabet.code(tok),)
        else:
            raise WordError("unexpected token %r" % tok)
        k = self._power_suffix()
        if k == 1:
            return base
        if k == 0:
            return ()
        body = base if k > 0 else invert_codes(base)
        return reduce_codes(body * abs(k))


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse a word; inverse to `Word.render` on reduced words."""
    parser = _Parser(_tokenize(text), alphabet)
    codes = parser.parse_expr()
    if parser.peek() is not None:
        raise WordError("trailing tokens: %r" % parser.tokens[parser.pos:])
    return Word(alphabet, codes, _reduced=True)
