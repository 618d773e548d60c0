"""Free graded-commutative algebras over Q with a differential.

An algebra is generated by named generators of positive degree; odd
generators square to zero, even generators are polynomial.  Monomials
are exponent tuples aligned with the generator declaration order, and
products are normalized to that order while accumulating Koszul signs,
so every element has one canonical form.

A degree cutoff is fixed at construction: basis enumeration and the
public differential are guarded by it (internal callers may go one
degree past it, which cohomology needs for kernels at the cutoff).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    CutoffExceeded,
    DegreeMismatch,
    DimensionMismatch,
    InvalidDegrees,
    InvalidDifferential,
    NotAChainMap,
    UnknownGenerator,
)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 1:
            raise InvalidDegrees(f"generator {self.name!r} must have positive degree")

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


class AlgebraElement:
    """Q-linear combination of monomials of a fixed algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "SullivanAlgebra", terms: Mapping[Monomial, Fraction]):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        return len({self.algebra.monomial_degree(m) for m in self.terms}) <= 1

    @property
    def degree(self) -> int | None:
        """Degree of a homogeneous nonzero element, else None."""
        degrees = {self.algebra.monomial_degree(m) for m in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def _compat(self, other: "AlgebraElement") -> None:
        if self.algebra.signature != other.algebra.signature:
            raise UnknownGenerator("elements belong to different algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.constant(other)
        self._compat(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return AlgebraElement(self.algebra, terms)

    def __sub__(self, other):
        return self + (-other if isinstance(other, AlgebraElement) else -Fraction(other))

    def __neg__(self):
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return AlgebraElement(self.algebra, {m: c * x for m, x in self.terms.items()})
        self._compat(other)
        return self.algebra.multiply(self, other)

    def __rmul__(self, scalar):
        return self * scalar

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.signature == other.algebra.signature and self.terms == other.terms

    def __repr__(self):
        return self.algebra.format_element(self)


class SullivanAlgebra:
    """Free graded-commutative algebra with a degree +1 differential.

    Immutable after construction; the differential is validated to be
    homogeneous of degree +1 on generators and to square to zero.
    """

    def __init__(
        self,
        generators: Sequence[Generator],
        cutoff: int,
        differential: Mapping[str, AlgebraElement] | None = None,
    ):
        if not isinstance(cutoff, int) or cutoff < 0:
            raise CutoffExceeded("cutoff must be a non-negative integer")
        self.generators = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InvalidDegrees("generator names must be unique")
        self.cutoff = cutoff
        self.signature = tuple((g.name, g.degree) for g in self.generators)
        self._index = {g.name: i for i, g in enumerate(self.generators)}
        self._degrees = tuple(g.degree for g in self.generators)
        self._odd = tuple(i for i, g in enumerate(self.generators) if g.is_odd)
        self._basis_cache: dict[int, tuple[Monomial, ...]] = {}
        self._d_mono_cache: dict[Monomial, AlgebraElement] = {}
        self.differential = self._validate_differential(differential or {})

    # -- construction -------------------------------------------------

    @classmethod
    def build(
        cls,
        generators: Iterable[tuple[str, int] | Generator],
        differential: Mapping[str, "AlgebraElement | str"] | None = None,
        *,
        cutoff: int,
    ) -> "SullivanAlgebra":
        """Build an algebra from (name, degree) pairs and a differential
        given per generator name, either as elements or in the polynomial
        grammar (e.g. ``"x^2+y^2"``)."""
        gens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in generators)
        draft = cls(gens, cutoff)
        resolved = {}
        for name, value in (differential or {}).items():
            if name not in draft._index:
                raise UnknownGenerator(f"differential assigned to unknown generator {name!r}")
            resolved[name] = draft.parse(value) if isinstance(value, str) else value
        return cls(gens, cutoff, resolved)

    def with_differential(
        self, differential: Mapping[str, "AlgebraElement | str"]
    ) -> "SullivanAlgebra":
        resolved = {
            name: self.parse(value) if isinstance(value, str) else value
            for name, value in differential.items()
        }
        return SullivanAlgebra(self.generators, self.cutoff, resolved)

    def _validate_differential(self, diff: Mapping[str, AlgebraElement]):
        images = []
        for name in diff:
            if name not in self._index:
                raise UnknownGenerator(f"differential assigned to unknown generator {name!r}")
        for g in self.generators:
            value = diff.get(g.name)
            if value is None:
                images.append(self.zero())
                continue
            if value.algebra.signature != self.signature:
                raise UnknownGenerator(
                    f"differential of {g.name!r} uses a different generator set"
                )
            value = AlgebraElement(self, value.terms)
            if not value.is_homogeneous:
                raise InvalidDifferential(f"d({g.name}) is not homogeneous")
            if not value.is_zero and value.degree != g.degree + 1:
                raise InvalidDifferential(
                    f"d({g.name}) has degree {value.degree}, expected {g.degree + 1}"
                )
            images.append(value)
        result = tuple(images)
        self.differential = result  # used by the d-squared check below
        for g, image in zip(self.generators, result):
            if not self._d_element(image).is_zero:
                raise InvalidDifferential(f"d(d({g.name})) != 0")
        return result

    # -- basic elements -----------------------------------------------

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return self.constant(1)

    def constant(self, c) -> AlgebraElement:
        unit: Monomial = (0,) * len(self.generators)
        return AlgebraElement(self, {unit: Fraction(c)})

    def gen(self, name: str) -> AlgebraElement:
        if name not in self._index:
            raise UnknownGenerator(f"no generator named {name!r}")
        mono = tuple(1 if i == self._index[name] else 0 for i in range(len(self.generators)))
        return AlgebraElement(self, {mono: Fraction(1)})

    def monomial_element(self, mono: Monomial, coeff=1) -> AlgebraElement:
        return AlgebraElement(self, {mono: Fraction(coeff)})

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self._degrees))

    def odd_word_length(self, mono: Monomial) -> int:
        return sum(mono[i] for i in self._odd)

    # -- monomial bases -----------------------------------------------

    def monomial_basis(self, degree: int) -> tuple[Monomial, ...]:
        """All monomials of exactly the given degree, in a fixed order."""
        if degree < 0:
            raise ValueError("degree must be non-negative")
        if degree > self.cutoff:
            raise CutoffExceeded(f"degree {degree} exceeds cutoff {self.cutoff}")
        return self._basis(degree)

    def _basis(self, degree: int) -> tuple[Monomial, ...]:
        cached = self._basis_cache.get(degree)
        if cached is not None:
            return cached
        out: list[Monomial] = []
        n = len(self.generators)
        exponents = [0] * n

        def descend(i: int, remaining: int) -> None:
            if i == n:
                if remaining == 0:
                    out.append(tuple(exponents))
                return
            d = self._degrees[i]
            top = remaining // d
            if self.generators[i].is_odd:
                top = min(top, 1)
            for e in range(top + 1):
                exponents[i] = e
                descend(i + 1, remaining - e * d)
            exponents[i] = 0

        descend(0, degree)
        result = tuple(out)
        self._basis_cache[degree] = result
        return result

    # -- products -----------------------------------------------------

    def _mul_monomials(self, m1: Monomial, m2: Monomial):
        """Koszul-normalized product; None when an odd generator squares."""
        o1 = [i for i in self._odd if m1[i]]
        inversions = 0
        for i in self._odd:
            if m2[i]:
                if m1[i]:
                    return None
                for j in o1:
                    if j > i:
                        inversions += 1
        mono = tuple(a + b for a, b in zip(m1, m2))
        return (-1 if inversions % 2 else 1), mono

    def multiply(self, e1: AlgebraElement, e2: AlgebraElement) -> AlgebraElement:
        if e1.algebra.signature != self.signature or e2.algebra.signature != self.signature:
            raise UnknownGenerator("elements belong to different algebras")
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in e1.terms.items():
            for m2, c2 in e2.terms.items():
                result = self._mul_monomials(m1, m2)
                if result is None:
                    continue
                sign, mono = result
                terms[mono] = terms.get(mono, Fraction(0)) + sign * c1 * c2
        return AlgebraElement(self, terms)

    # -- differential -------------------------------------------------

    def apply_differential(self, e: AlgebraElement) -> AlgebraElement:
        if not e.is_homogeneous:
            raise DegreeMismatch("differential of a mixed-degree element")
        if not e.is_zero and e.degree > self.cutoff - 1:
            raise CutoffExceeded(
                f"degree {e.degree} element: differential exceeds cutoff {self.cutoff}"
            )
        return self._d_element(e)

    def _d_element(self, e: AlgebraElement) -> AlgebraElement:
        result = self.zero()
        for mono, coeff in e.terms.items():
            result = result + coeff * self._d_monomial(mono)
        return result

    def _d_monomial(self, mono: Monomial) -> AlgebraElement:
        cached = self._d_mono_cache.get(mono)
        if cached is not None:
            return cached
        result = self.zero()
        odd_present = [i for i in self._odd if mono[i]]
        for i, e in enumerate(mono):
            if not e:
                continue
            d_i = self.differential[i]
            if d_i.is_zero:
                continue
            # Leibniz: differentiate one factor in declaration order.  The
            # sign moves d past the odd factors on one side: for an odd
            # factor, past those before it; for an even factor (whose d is
            # odd), past those after it.
            if self.generators[i].is_odd:
                parity = sum(1 for j in odd_present if j < i)
            else:
                parity = sum(1 for j in odd_present if j > i)
            reduced = tuple(x - 1 if k == i else x for k, x in enumerate(mono))
            sign = -1 if parity % 2 else 1
            result = result + self.multiply(self.monomial_element(reduced, e * sign), d_i)
        self._d_mono_cache[mono] = result
        return result

    def verify_d_squared(self) -> bool:
        """True iff d(d(g)) = 0 for every generator."""
        return all(self._d_element(img).is_zero for img in self.differential)

    def substitute(
        self, e: AlgebraElement, assignment: Mapping[str, AlgebraElement]
    ) -> AlgebraElement:
        """Apply the algebra endomorphism sending each named generator to
        the given (degree-equal homogeneous) element, fixing the others.
        No compatibility with the differential is assumed."""
        images = {}
        for g in self.generators:
            image = assignment.get(g.name)
            if image is None:
                images[g.name] = self.gen(g.name)
                continue
            if image.algebra.signature != self.signature:
                raise UnknownGenerator(f"substitute for {g.name!r} uses another algebra")
            if not image.is_zero and (not image.is_homogeneous or image.degree != g.degree):
                raise DegreeMismatch(f"substitute for {g.name!r} must preserve the degree")
            images[g.name] = AlgebraElement(self, image.terms)
        result = self.zero()
        for mono, coeff in e.terms.items():
            term = self.one()
            for g, exp in zip(self.generators, mono):
                if exp:
                    term = term * images[g.name] ** exp
            result = result + coeff * term
        return result

    # -- structure ----------------------------------------------------

    def is_pure(self) -> bool:
        """Even generators closed, odd differentials inside the even
        subalgebra."""
        for g, image in zip(self.generators, self.differential):
            if not g.is_odd and not image.is_zero:
                return False
            if g.is_odd and any(self.odd_word_length(m) for m in image.terms):
                return False
        return True

    def associated_pure(self) -> "SullivanAlgebra":
        """Same generators; even differentials dropped, odd differentials
        projected to their even-subalgebra component."""
        diff = {}
        for g, image in zip(self.generators, self.differential):
            if g.is_odd:
                kept = {m: c for m, c in image.terms.items() if self.odd_word_length(m) == 0}
                diff[g.name] = AlgebraElement(self, kept)
        return SullivanAlgebra(self.generators, self.cutoff, diff)

    def homotopy_euler_characteristic(self) -> int:
        odd = len(self._odd)
        return odd - (len(self.generators) - odd)

    # -- parsing and formatting ----------------------------------------

    _TOKEN = re.compile(
        r"\s*(?:(?P<num>\d+/\d+|\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\^*+-]))"
    )

    def parse(self, text: str) -> AlgebraElement:
        """Parse the polynomial grammar: terms ``coef*gen^k*gen2^k2``
        joined by ``+``/``-``; coefficients integer or ``a/b``."""
        tokens = self._tokenize(text)
        result = self.zero()
        pos = 0
        sign = Fraction(1)
        expect_term = True
        while pos < len(tokens):
            kind, value = tokens[pos]
            if expect_term:
                if kind == "op" and value == "-":
                    sign = -sign
                    pos += 1
                    continue
                if kind == "op" and value == "+":
                    pos += 1
                    continue
                term, pos = self._parse_term(tokens, pos)
                result = result + sign * term
                sign = Fraction(1)
                expect_term = False
            else:
                if kind != "op" or value not in "+-":
                    raise ValueError(f"expected '+' or '-' in polynomial: {text!r}")
                sign = Fraction(-1) if value == "-" else Fraction(1)
                pos += 1
                expect_term = True
        if expect_term:
            raise ValueError(f"empty term in polynomial: {text!r}")
        return result

    def _tokenize(self, text: str):
        tokens = []
        pos = 0
        while pos < len(text):
            match = self._TOKEN.match(text, pos)
            if not match or match.end() == pos:
                raise ValueError(f"cannot tokenize polynomial at {text[pos:]!r}")
            pos = match.end()
            for kind in ("num", "name", "op"):
                if match.group(kind) is not None:
                    tokens.append((kind, match.group(kind)))
                    break
        return tokens

    def _parse_term(self, tokens, pos):
        coeff = Fraction(1)
        mono = self.one()
        saw_factor = False
        while True:
            if pos >= len(tokens):
                break
            kind, value = tokens[pos]
            if kind == "num":
                coeff *= Fraction(value)
                pos += 1
            elif kind == "name":
                base = self.gen(value)
                pos += 1
                exp = 1
                if pos + 1 < len(tokens) and tokens[pos] == ("op", "^"):
                    nk, nv = tokens[pos + 1]
                    if nk != "num" or "/" in nv:
                        raise ValueError("exponent must be a non-negative integer")
                    exp = int(nv)
                    pos += 2
                mono = mono * base**exp
            else:
                break
            saw_factor = True
            if pos < len(tokens) and tokens[pos] == ("op", "*"):
                pos += 1
                continue
            break
        if not saw_factor:
            raise ValueError("empty term in polynomial")
        return coeff * mono, pos

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for g, e in zip(self.generators, mono):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def format_element(self, e: AlgebraElement) -> str:
        if e.is_zero:
            return "0"
        items = sorted(e.terms.items(), key=lambda kv: (self.monomial_degree(kv[0]), kv[0]))
        chunks = []
        for mono, coeff in items:
            body = self.format_monomial(mono)
            mag = abs(coeff)
            if body == "1":
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not chunks:
                chunks.append(text if coeff > 0 else f"-{text}")
            else:
                chunks.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(chunks)

    def coordinates(self, e: AlgebraElement, degree: int) -> list[Fraction]:
        """Coefficient vector of a homogeneous element over the degree basis."""
        basis = self._basis(degree)
        index = {m: i for i, m in enumerate(basis)}
        vec = [Fraction(0)] * len(basis)
        for mono, coeff in e.terms.items():
            if mono not in index:
                raise DegreeMismatch(
                    f"monomial {self.format_monomial(mono)} is not of degree {degree}"
                )
            vec[index[mono]] = coeff
        return vec

    def element_from_coordinates(self, vec: Sequence, degree: int) -> AlgebraElement:
        basis = self._basis(degree)
        if len(vec) != len(basis):
            raise DimensionMismatch(
                f"{len(vec)} coordinates for a degree-{degree} basis of size {len(basis)}"
            )
        return AlgebraElement(
            self, {m: Fraction(c) for m, c in zip(basis, vec) if c}
        )

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"SullivanAlgebra({gens}; cutoff={self.cutoff})"


@dataclass(frozen=True)
class CdgaMorphism:
    """Algebra morphism determined by generator images; must commute with
    the differentials (checked on every generator)."""

    source: SullivanAlgebra
    target: SullivanAlgebra
    assignment: Mapping[str, AlgebraElement]

    def __post_init__(self):
        images: dict[str, AlgebraElement] = {}
        for g in self.source.generators:
            if g.name not in self.assignment:
                raise UnknownGenerator(f"morphism misses generator {g.name!r}")
            img = self.assignment[g.name]
            if img.algebra.signature != self.target.signature:
                raise UnknownGenerator(f"image of {g.name!r} is not in the target algebra")
            img = AlgebraElement(self.target, img.terms)
            if not img.is_homogeneous:
                raise DegreeMismatch(f"image of {g.name!r} is not homogeneous")
            if not img.is_zero and img.degree != g.degree:
                raise DegreeMismatch(
                    f"image of {g.name!r} has degree {img.degree}, expected {g.degree}"
                )
            images[g.name] = img
        object.__setattr__(self, "assignment", images)
        object.__setattr__(self, "_mono_cache", {})
        for g, d_g in zip(self.source.generators, self.source.differential):
            if self.apply(d_g) != self.target._d_element(images[g.name]):
                raise NotAChainMap(f"morphism does not commute with d on {g.name!r}")

    def apply(self, e: AlgebraElement) -> AlgebraElement:
        if e.algebra.signature != self.source.signature:
            raise UnknownGenerator("element is not in the morphism source")
        result = self.target.zero()
        for mono, coeff in e.terms.items():
            result = result + coeff * self._apply_monomial(mono)
        return result

    def _apply_monomial(self, mono: Monomial) -> AlgebraElement:
        cache = self._mono_cache  # type: ignore[attr-defined]
        cached = cache.get(mono)
        if cached is not None:
            return cached
        result = self.target.one()
        for g, e in zip(self.source.generators, mono):
            if e:
                result = result * self.assignment[g.name] ** e
        cache[mono] = result
        return result

    def compose(self, inner: "CdgaMorphism") -> "CdgaMorphism":
        """self after inner."""
        if inner.target.signature != self.source.signature:
            raise UnknownGenerator("morphisms are not composable")
        assignment = {
            name: self.apply(AlgebraElement(self.source, img.terms))
            for name, img in inner.assignment.items()
        }
        return CdgaMorphism(inner.source, self.target, assignment)


def identity_morphism(algebra: SullivanAlgebra) -> CdgaMorphism:
    return CdgaMorphism(algebra, algebra, {g.name: algebra.gen(g.name) for g in algebra.generators})
