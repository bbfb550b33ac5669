"""Exact arithmetic in truncated mod-2 dual Steenrod algebras.

The algebra A*(n) is the quotient of the polynomial algebra
F2[xi_1, xi_2, ...] by the ideal generated by

    xi_1^(2^(n+1)), xi_2^(2^n), ..., xi_(n+1)^2, xi_(n+2), xi_(n+3), ...

so a monomial of A*(n) is an exponent vector (r_1, ..., r_(n+1)) with
0 <= r_i <= 2^(n+2-i) - 1.  The binary (dyadic) expansion of each
exponent is the structural key: the bit 2^j of r_i stands for the factor
xi_i^(2^j), and that factor corresponds to the edge {2^j, 2^(i+j)} of the
graph on vertices {2^0, ..., 2^(n+1)} associated to the monomial.  All
edge-level queries (edge_bit, divides_edgewise, dyadic_bits) read those
bits directly.

Polynomials are finite sets of monomials: coefficients live in F2, so a
monomial is either present or absent and duplicates cancel pairwise.
The zero polynomial is the empty set.

A Level with n=None denotes the untruncated algebra F2[xi_1, xi_2, ...],
which imposes no exponent bound.  It exists to support antipode
recursion checks and Hopf-ideal verification, where images are computed
upstairs and then pushed through the quotient (truncate_monomial /
truncate_polynomial).

All values are immutable after construction and every operation is a
pure function, so everything here is safe to share across threads.
"""

import itertools
import os
import random
import re
from typing import Iterable, Iterator, NamedTuple, Optional, Union

ENV_MAX_N = "STEENGRAPH_MAX_N"
DEFAULT_MAX_N = 12


def max_truncation() -> int:
    """Largest accepted truncation parameter n (env STEENGRAPH_MAX_N overrides)."""
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None


class Level:
    """Truncation level: A*(n) for an integer n >= 0, or the untruncated algebra.

    At level n the generators are xi_1, ..., xi_(n+1) and the exponent of
    xi_i is bounded by 2^(n+2-i) - 1.  Level(None) is the untruncated
    algebra, with generators xi_i for every i >= 1 and no exponent bound.
    """

    __slots__ = ("n",)

    def __init__(self, n: Optional[int] = None):
        if n is not None:
            n = int(n)
            if n < 0:
                raise ValueError(f"truncation parameter must be >= 0, got {n}")
            cap = max_truncation()
            if n > cap:
                raise ValueError(
                    f"truncation parameter {n} exceeds the safety cap {cap}"
                    f" (set {ENV_MAX_N} to raise it)"
                )
        self.n = n

    @property
    def truncated(self) -> bool:
        return self.n is not None

    @property
    def generator_count(self) -> int:
        """Number of generators, n+1."""
        self._require_truncated()
        return self.n + 1

    @property
    def vertex_count(self) -> int:
        """Number of graph vertices, n+2 (vertex p stands for 2^p)."""
        self._require_truncated()
        return self.n + 2

    def exponent_bound(self, i: int) -> int:
        """Largest legal exponent of xi_i, namely 2^(n+2-i) - 1."""
        self._require_truncated()
        if not 1 <= i <= self.n + 1:
            raise ValueError(f"generator index {i} out of range 1..{self.n + 1}")
        return (1 << (self.n + 2 - i)) - 1

    def generator_valid(self, i: int) -> bool:
        if i < 1:
            return False
        return self.n is None or i <= self.n + 1

    def _require_truncated(self):
        if self.n is None:
            raise ValueError("operation requires a truncated level")

    def __eq__(self, other) -> bool:
        return isinstance(other, Level) and self.n == other.n

    def __hash__(self) -> int:
        return hash(("Level", self.n))

    def __repr__(self) -> str:
        return "Level(untruncated)" if self.n is None else f"Level({self.n})"


UNTRUNCATED = Level()


class DyadicBit(NamedTuple):
    """The factor xi_generator^(2^power); its edge runs from power to generator+power."""

    generator: int
    power: int


def alpha(m: int) -> int:
    """Number of 1s in the binary expansion of m (the edge count a single exponent contributes)."""
    if m < 0:
        raise ValueError(f"alpha is defined for nonnegative integers, got {m}")
    return m.bit_count()


class Monomial:
    """A monomial xi_1^r_1 * xi_2^r_2 * ... at a fixed Level.

    Truncated monomials store exactly n+1 exponents; untruncated ones
    store a tuple with trailing zeros stripped, so equal monomials have
    equal representations.  The all-zero vector is the unit monomial 1.
    """

    __slots__ = ("level", "exponents", "_hash")

    def __init__(self, level: Level, exponents: Iterable[int]):
        exps = tuple(int(r) for r in exponents)
        if level.truncated:
            width = level.n + 1
            if len(exps) > width:
                if any(exps[width:]):
                    raise ValueError(
                        f"monomial has {len(exps)} exponents but level n={level.n} "
                        f"admits generators xi_1..xi_{width}"
                    )
                exps = exps[:width]
            elif len(exps) < width:
                exps = exps + (0,) * (width - len(exps))
            for i, r in enumerate(exps, start=1):
                if r < 0 or r > (1 << (level.n + 2 - i)) - 1:
                    raise ValueError(
                        f"exponent {r} of xi{i} outside 0..{(1 << (level.n + 2 - i)) - 1}"
                        f" at n={level.n}"
                    )
        else:
            if any(r < 0 for r in exps):
                raise ValueError("negative exponent")
            while exps and exps[-1] == 0:
                exps = exps[:-1]
        self.level = level
        self.exponents = exps
        self._hash = hash((level.n, exps))

    @classmethod
    def one(cls, level: Level) -> "Monomial":
        return cls(level, ())

    @classmethod
    def generator_power(cls, i: int, j: int, level: Level) -> "Monomial":
        """The monomial xi_i^(2^j); valid at truncated level n only when i+j <= n+1."""
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        if j < 0:
            raise ValueError(f"power index must be >= 0, got {j}")
        if level.truncated and i + j > level.n + 1:
            raise ValueError(
                f"xi{i}^(2^{j}) does not exist at n={level.n} (need i+j <= {level.n + 1})"
            )
        exps = [0] * i
        exps[i - 1] = 1 << j
        return cls(level, exps)

    def exponent(self, i: int) -> int:
        """The exponent r_i (0 for any generator beyond the stored vector)."""
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        if i > len(self.exponents):
            return 0
        return self.exponents[i - 1]

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    @property
    def edge_count(self) -> int:
        """Total number of dyadic bits, i.e. edges of the associated graph."""
        return sum(r.bit_count() for r in self.exponents)

    def dyadic_bits(self) -> Iterator[DyadicBit]:
        """Factors xi_i^(2^j) of this monomial, ordered by (i, j)."""
        for i, r in enumerate(self.exponents, start=1):
            j = 0
            while r:
                if r & 1:
                    yield DyadicBit(i, j)
                r >>= 1
                j += 1

    def edge_bit(self, p: int, q: int) -> int:
        """Coefficient of 2^p in the binary expansion of r_(q-p), for 0 <= p < q.

        This is the indicator of the edge {2^p, 2^q} in the associated
        graph: 1 exactly when the factor xi_(q-p)^(2^p) is present.
        """
        if p < 0 or p >= q:
            raise ValueError(f"need 0 <= p < q, got p={p}, q={q}")
        if self.level.truncated and q > self.level.n + 1:
            raise ValueError(f"vertex index {q} out of range 0..{self.level.n + 1}")
        return (self.exponent(q - p) >> p) & 1

    def divides_edgewise(self, other: "Monomial") -> bool:
        """True when every dyadic bit of self is also set in other.

        This is divisibility of the associated graphs (edge-subset
        containment), strictly stronger than integer-exponent comparison:
        xi1^3 does not divide xi1^5 edgewise although 3 <= 5.
        """
        self._check_level(other)
        return all(d & r == d for d, r in _zip_pad(self.exponents, other.exponents))

    def divides_integerwise(self, other: "Monomial") -> bool:
        """True when r_i(self) <= r_i(other) for every i (plain monomial divisibility)."""
        self._check_level(other)
        return all(d <= r for d, r in _zip_pad(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Polynomial":
        """Product in the algebra: exponentwise sum, zero if any bound is breached."""
        if not isinstance(other, Monomial):
            return NotImplemented
        self._check_level(other)
        prod = monomial_product(self, other)
        if prod is None:
            return Polynomial.zero(self.level)
        return Polynomial(self.level, (prod,))

    def __add__(self, other: "Monomial") -> "Polynomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        self._check_level(other)
        return Polynomial.from_terms(self.level, (self, other))

    def frobenius(self, j: int = 1) -> "Polynomial":
        """Raise to the 2^j power: every exponent doubles j times (F2 has no cross terms)."""
        m = _frobenius_monomial(self, j)
        if m is None:
            return Polynomial.zero(self.level)
        return Polynomial(self.level, (m,))

    def as_polynomial(self) -> "Polynomial":
        return Polynomial(self.level, (self,))

    def _check_level(self, other: "Monomial"):
        if self.level != other.level:
            raise ValueError(f"level mismatch: {self.level!r} vs {other.level!r}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Monomial)
            and self._hash == other._hash
            and self.level.n == other.level.n
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        """Lexicographic key on the exponent vector (canonical term order)."""
        return self.exponents

    def __str__(self) -> str:
        factors = [f"xi{i}^{r}" for i, r in enumerate(self.exponents, start=1) if r]
        return "*".join(factors) if factors else "1"

    def __repr__(self) -> str:
        return f"Monomial({self.level!r}, {list(self.exponents)!r})"


def _zip_pad(a: tuple, b: tuple):
    if len(a) == len(b):
        return zip(a, b)
    return itertools.zip_longest(a, b, fillvalue=0)


def monomial_product(x: Monomial, y: Monomial) -> Optional[Monomial]:
    """Exponentwise sum, or None when the product lands in the ideal (a carry escapes)."""
    exps = [rx + ry for rx, ry in _zip_pad(x.exponents, y.exponents)]
    level = x.level
    if level.truncated:
        for i, r in enumerate(exps, start=1):
            if r >= 1 << (level.n + 2 - i):
                return None
    return Monomial(level, exps)


def _frobenius_monomial(x: Monomial, j: int) -> Optional[Monomial]:
    if j < 0:
        raise ValueError(f"frobenius power must be >= 0, got {j}")
    if j == 0:
        return x
    exps = [r << j for r in x.exponents]
    level = x.level
    if level.truncated:
        for i, r in enumerate(exps, start=1):
            if r >= 1 << (level.n + 2 - i):
                return None
    return Monomial(level, exps)


class Polynomial:
    """A finite F2-linear combination of monomials (a set; duplicates cancel)."""

    __slots__ = ("level", "terms")

    def __init__(self, level: Level, terms: Iterable[Monomial] = ()):
        terms = frozenset(terms)
        for t in terms:
            if t.level != level:
                raise ValueError(f"term {t} has level {t.level!r}, expected {level!r}")
        self.level = level
        self.terms = terms

    @classmethod
    def zero(cls, level: Level) -> "Polynomial":
        return cls(level, ())

    @classmethod
    def one(cls, level: Level) -> "Polynomial":
        return cls(level, (Monomial.one(level),))

    @classmethod
    def from_terms(cls, level: Level, terms: Iterable[Monomial]) -> "Polynomial":
        """Sum over F2: monomials appearing an even number of times cancel."""
        acc = set()
        for t in terms:
            if t in acc:
                acc.discard(t)
            else:
                acc.add(t)
        return cls(level, acc)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list:
        return sorted(self.terms, key=Monomial.sort_key)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_level(other.level)
        return Polynomial(self.level, self.terms ^ other.terms)

    def __mul__(self, other: Union["Polynomial", Monomial]) -> "Polynomial":
        if isinstance(other, Monomial):
            other = other.as_polynomial()
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_level(other.level)
        acc = set()
        for x in self.terms:
            for y in other.terms:
                p = monomial_product(x, y)
                if p is None:
                    continue
                if p in acc:
                    acc.discard(p)
                else:
                    acc.add(p)
        return Polynomial(self.level, acc)

    def frobenius(self, j: int = 1) -> "Polynomial":
        """Raise to the 2^j power termwise; truncation may kill terms."""
        acc = set()
        for t in self.terms:
            m = _frobenius_monomial(t, j)
            if m is not None:
                acc.add(m)  # squaring is injective where defined: no collisions
        return Polynomial(self.level, acc)

    def _check_level(self, level: Level):
        if self.level != level:
            raise ValueError(f"level mismatch: {self.level!r} vs {level!r}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.level == other.level
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.level, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Polynomial({self.level!r}, {self.sorted_terms()!r})"


class ParseError(ValueError):
    """Monomial text that does not conform to the grammar."""


_TERM_RE = re.compile(r"^xi(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, level: Level) -> Monomial:
    """Parse monomial text: factors `xi<I>` or `xi<I>^<E>` separated by `*` or spaces.

    `1` alone denotes the unit monomial.  The compact form `[r1,r2,...]`
    lists all n+1 exponents directly.  Repeated generators accumulate
    their exponents.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty monomial text")
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unterminated exponent list: {text!r}")
        items = [s.strip() for s in text[1:-1].split(",")] if text[1:-1].strip() else []
        exps = []
        for s in items:
            if not s.isdigit():
                raise ParseError(f"bad exponent {s!r} in {text!r}")
            exps.append(int(s))
        if level.truncated and len(exps) != level.n + 1:
            raise ParseError(
                f"exponent list has {len(exps)} entries, expected {level.n + 1} at n={level.n}"
            )
        return _monomial_with_bounds_check(level, exps)

    tokens = [t for t in re.split(r"[\s*]+", text) if t]
    if "1" in tokens:
        if len(tokens) > 1:
            raise ParseError("the unit monomial `1` must appear alone")
        return Monomial.one(level)
    exps: dict = {}
    for token in tokens:
        m = _TERM_RE.match(token)
        if m is None:
            raise ParseError(f"bad term {token!r} (expected xi<I> or xi<I>^<E>)")
        i = int(m.group(1))
        if not level.generator_valid(i):
            raise ParseError(f"generator xi{i} out of range at n={level.n}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        exps[i] = exps.get(i, 0) + e
    width = max(exps) if exps else 0
    vec = [exps.get(i, 0) for i in range(1, width + 1)]
    return _monomial_with_bounds_check(level, vec)


def _monomial_with_bounds_check(level: Level, exps: list) -> Monomial:
    if level.truncated:
        for i, r in enumerate(exps, start=1):
            if r > level.exponent_bound(i):
                raise ParseError(
                    f"exponent {r} of xi{i} exceeds bound {level.exponent_bound(i)}"
                    f" at n={level.n}"
                )
    return Monomial(level, exps)


def monomial_count(level: Level) -> int:
    """Number of monomials of A*(n): 2^((n+1)(n+2)/2)."""
    level._require_truncated()
    return 1 << ((level.n + 1) * (level.n + 2) // 2)


def enumerate_monomials(level: Level) -> Iterator[Monomial]:
    """All monomials of A*(n) exactly once, lexicographically by exponent vector."""
    level._require_truncated()
    ranges = [range(1 << (level.n + 2 - i)) for i in range(1, level.n + 2)]
    for exps in itertools.product(*ranges):
        yield Monomial(level, exps)


def monomial_from_index(level: Level, index: int) -> Monomial:
    """The index-th monomial in enumeration order (mixed-radix decode of the rank)."""
    level._require_truncated()
    if not 0 <= index < monomial_count(level):
        raise ValueError(f"index {index} out of range 0..{monomial_count(level) - 1}")
    exps = [0] * (level.n + 1)
    for i in range(level.n + 1, 0, -1):
        index, exps[i - 1] = divmod(index, 1 << (level.n + 2 - i))
    return Monomial(level, exps)


def random_monomials(level: Level, count: int, seed: int) -> list:
    """Deterministic pseudo-random monomials (uniform exponents within bounds)."""
    level._require_truncated()
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        exps = [rng.randint(0, level.exponent_bound(i)) for i in range(1, level.n + 2)]
        out.append(Monomial(level, exps))
    return out


def truncate_monomial(x: Monomial, level: Level) -> Optional[Monomial]:
    """Image of x under the quotient map onto A*(n): the same monomial, or None (zero).

    A monomial dies exactly when some exponent breaches the level bound
    or a generator beyond xi_(n+1) appears.
    """
    level._require_truncated()
    width = level.n + 1
    if any(x.exponents[width:]):
        return None
    for i, r in enumerate(x.exponents[:width], start=1):
        if r > (1 << (level.n + 2 - i)) - 1:
            return None
    return Monomial(level, x.exponents[:width])


def truncate_polynomial(p: Polynomial, level: Level) -> Polynomial:
    """Termwise quotient map; killed terms drop out of the F2 sum."""
    acc = set()
    for t in p.terms:
        m = truncate_monomial(t, level)
        if m is not None:
            acc.add(m)  # the quotient map is injective on surviving monomials
    return Polynomial(level, acc)
