"""Exact sparse Laurent polynomials over the integers.

Every ring used in this package fixes, per variable, a denominator for the
exponent lattice: a scale of 2 admits half-integer exponents, a scale of 4
quarter-integer ones.  Exponents are stored premultiplied by their scale, so
term keys are plain integer tuples and all arithmetic stays exact.  The rings
actually used are

* ``RING_XYZ`` -- three variables x, y, z with scales (2, 2, 1), the home of
  the ribbon-graph polynomials (x and y may carry half-integer powers);
* ``RING_XY``  -- the two-variable image of the restriction map;
* ``RING_ABD`` -- bracket polynomials in A, B, d with integer exponents;
* ``RING_T``   -- one variable t with quarter-integer exponents.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
import re
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .errors import FractionalExponent, NegativeExponentNonUnit, ParseError

__all__ = [
    "Ring",
    "RING_XYZ",
    "RING_XY",
    "RING_ABD",
    "RING_T",
    "Laurent",
    "monomial",
    "restrict_duality_surface",
    "parse_poly",
]


class Ring(NamedTuple):
    """Variable names plus per-variable exponent denominators."""

    names: tuple[str, ...]
    scales: tuple[int, ...]


RING_XYZ = Ring(("x", "y", "z"), (2, 2, 1))
RING_XY = Ring(("x", "y"), (2, 2))
RING_ABD = Ring(("A", "B", "d"), (1, 1, 1))
RING_T = Ring(("t",), (4,))

Key = tuple[int, ...]
MonomialImage = tuple[int, Sequence[Union[int, Fraction]]]


class Laurent:
    """Immutable sparse Laurent polynomial attached to a :class:`Ring`.

    ``terms`` maps scaled exponent tuples to nonzero integer coefficients.
    Instances compare structurally and are hashable; all operations return
    new objects.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Key, int] | None = None):
        clean: dict[Key, int] = {}
        width = len(ring.names)
        if terms:
            for key, coeff in terms.items():
                if coeff == 0:
                    continue
                if len(key) != width:
                    raise ValueError(f"key {key!r} does not fit ring {ring.names}")
                clean[tuple(key)] = coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Laurent instances are immutable")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Laurent":
        return cls(ring)

    @classmethod
    def const(cls, ring: Ring, value: int) -> "Laurent":
        return cls(ring, {(0,) * len(ring.names): value})

    @classmethod
    def monomial(cls, ring: Ring, key: Sequence[int], coeff: int = 1) -> "Laurent":
        """Single term from a *scaled* exponent tuple."""
        return cls(ring, {tuple(key): coeff})

    # ------------------------------------------------------------------
    # ring arithmetic
    # ------------------------------------------------------------------

    def _same_ring(self, other: "Laurent") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")

    def __add__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            other = Laurent.const(self.ring, other)
        self._same_ring(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return Laurent(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            other = Laurent.const(self.ring, other)
        return self + (-other)

    def __rsub__(self, other: int) -> "Laurent":
        return Laurent.const(self.ring, other) - self

    def __mul__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            if other == 0:
                return Laurent(self.ring)
            return Laurent(self.ring, {k: c * other for k, c in self.terms.items()})
        self._same_ring(other)
        out: dict[Key, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                new = out.get(key, 0) + c1 * c2
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return Laurent(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Laurent":
        if power < 0:
            return self.inverse_unit() ** (-power)
        result = Laurent.const(self.ring, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    def inverse_unit(self) -> "Laurent":
        """Inverse of a one-term polynomial with coefficient +-1."""
        if len(self.terms) != 1:
            raise NegativeExponentNonUnit(f"{self.render()} is not a unit monomial")
        ((key, coeff),) = self.terms.items()
        if coeff not in (1, -1):
            raise NegativeExponentNonUnit(f"coefficient {coeff} is not invertible")
        return Laurent(self.ring, {tuple(-u for u in key): coeff})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Laurent)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Laurent({self.render()!r})"

    # ------------------------------------------------------------------
    # structural maps
    # ------------------------------------------------------------------

    def _var_index(self, var: int | str) -> int:
        if isinstance(var, str):
            return self.ring.names.index(var)
        return var

    def substitute(self, var: int | str, value: "Laurent") -> "Laurent":
        """Replace one variable by a polynomial of the same ring.

        The replaced variable must occur with integer exponents, and with
        nonnegative ones unless ``value`` is an invertible monomial.
        """
        i = self._var_index(var)
        self._same_ring(value)
        scale = self.ring.scales[i]
        exps: dict[int, dict[Key, int]] = {}
        for key, coeff in self.terms.items():
            if key[i] % scale:
                raise FractionalExponent(
                    f"{self.ring.names[i]} occurs with exponent "
                    f"{Fraction(key[i], scale)}"
                )
            e = key[i] // scale
            rest = key[:i] + (0,) + key[i + 1 :]
            exps.setdefault(e, {})[rest] = exps.setdefault(e, {}).get(rest, 0) + coeff
        result = Laurent(self.ring)
        negatives = [e for e in exps if e < 0]
        inverse = value.inverse_unit() if negatives else None
        for e, bucket in exps.items():
            power = value**e if e >= 0 else inverse ** (-e)  # type: ignore[operator]
            result = result + Laurent(self.ring, bucket) * power
        return result

    def monomial_map(
        self, target: Ring, images: Sequence[MonomialImage]
    ) -> "Laurent":
        """Apply a multiplicative substitution sending each variable to a
        signed monomial of ``target``.

        ``images[i]`` is ``(coeff, exponents)`` with ``coeff`` +-1 and actual
        (unscaled) exponents per target variable.  Exponent arithmetic is done
        in exact fractions; the result must land on the target lattice.
        """
        for coeff, _ in images:
            if coeff not in (1, -1):
                raise ValueError("monomial images must have coefficient +1 or -1")
        out: dict[Key, int] = {}
        width = len(target.names)
        for key, coeff in self.terms.items():
            src = [Fraction(u, s) for u, s in zip(key, self.ring.scales)]
            dst = [Fraction(0)] * width
            sign = 1
            for e, (im_coeff, im_exps) in zip(src, images):
                if e == 0:
                    continue
                if im_coeff == -1:
                    if e.denominator != 1:
                        raise FractionalExponent(
                            f"cannot raise a negative monomial to power {e}"
                        )
                    if e.numerator % 2:
                        sign = -sign
                for j, im_e in enumerate(im_exps):
                    dst[j] += e * Fraction(im_e)
            new_key = []
            for j, e in enumerate(dst):
                scaled = e * target.scales[j]
                if scaled.denominator != 1:
                    raise FractionalExponent(
                        f"image exponent {e} of {target.names[j]} is off-lattice"
                    )
                new_key.append(int(scaled))
            k = tuple(new_key)
            new = out.get(k, 0) + sign * coeff
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        return Laurent(target, out)

    def permute_vars(self, perm: Sequence[int]) -> "Laurent":
        """Move the exponent of old variable ``perm[i]`` into slot i."""
        if tuple(self.ring.scales[i] for i in perm) != self.ring.scales:
            raise ValueError("permutation must preserve exponent scales")
        return Laurent(
            self.ring,
            {tuple(key[i] for i in perm): c for key, c in self.terms.items()},
        )

    def project(self, target: Ring, keep: Sequence[int]) -> "Laurent":
        """Drop variables not listed in ``keep``; they must not occur."""
        for key in self.terms:
            for i, u in enumerate(key):
                if i not in keep and u != 0:
                    raise ValueError(
                        f"cannot project out {self.ring.names[i]} with exponent"
                        f" {Fraction(u, self.ring.scales[i])}"
                    )
        for pos, i in enumerate(keep):
            if self.ring.scales[i] != target.scales[pos]:
                raise ValueError("projection must preserve exponent scales")
        return Laurent(
            target, {tuple(key[i] for i in keep): c for key, c in self.terms.items()}
        )

    def evaluate(self, values: Sequence[int]) -> int:
        """Evaluate at integer points.  Exponents must be integers, and
        nonnegative wherever the value is not +-1 (0**0 counts as 1)."""
        total = 0
        for key, coeff in self.terms.items():
            prod = coeff
            for u, scale, v in zip(key, self.ring.scales, values):
                if u % scale:
                    raise FractionalExponent(
                        f"cannot evaluate fractional exponent {Fraction(u, scale)}"
                    )
                e = u // scale
                if e < 0:
                    if v == 1:
                        continue
                    if v == -1:
                        e = -e
                    else:
                        raise NegativeExponentNonUnit(
                            f"negative power of non-unit value {v}"
                        )
                prod *= v**e
            total += prod
        return total

    # ------------------------------------------------------------------
    # text form
    # ------------------------------------------------------------------

    def _ordered_terms(self) -> list[tuple[Key, int]]:
        if not self.terms:
            return []
        if len(self.ring.names) == 1:
            return sorted(self.terms.items())
        lcm = 1
        for s in self.ring.scales:
            lcm = lcm * s // gcd(lcm, s)
        mult = [lcm // s for s in self.ring.scales]

        def rank(item: tuple[Key, int]):
            key = item[0]
            degree = sum(u * m for u, m in zip(key, mult))
            return (degree, key)

        return sorted(self.terms.items(), key=rank, reverse=True)

    def render(self) -> str:
        """Deterministic text form; see :func:`parse_poly` for the grammar."""
        parts: list[str] = []
        for key, coeff in self._ordered_terms():
            factors = []
            for name, scale, u in zip(self.ring.names, self.ring.scales, key):
                if u == 0:
                    continue
                g = gcd(abs(u), scale)
                p, q = u // g, scale // g
                if q == 1 and p == 1:
                    factors.append(name)
                elif q == 1 and p > 1:
                    factors.append(f"{name}^{p}")
                elif q == 1:
                    factors.append(f"{name}^({p})")
                else:
                    factors.append(f"{name}^({p}/{q})")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def monomial(ring: Ring, key: Sequence[int], coeff: int = 1) -> Laurent:
    """Single-term polynomial from a scaled exponent tuple."""
    return Laurent.monomial(ring, key, coeff)


_RESTRICT_IMAGES: list[MonomialImage] = [
    (1, (1, 0)),
    (1, (0, 1)),
    (1, (Fraction(-1, 2), Fraction(-1, 2))),
]


def restrict_duality_surface(p: Laurent) -> Laurent:
    """Restrict a three-variable polynomial to the surface x*y*z^2 = 1.

    Eliminates z via z = x^(-1/2) y^(-1/2), mapping each term
    x^a y^b z^c to x^(a - c/2) y^(b - c/2).
    """
    if p.ring != RING_XYZ:
        raise ValueError("restriction is defined on the (x, y, z) ring")
    return p.monomial_map(RING_XY, _RESTRICT_IMAGES)


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[\^*+()/-]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos and not text[pos:].strip():
            break
        if not m.group(0).strip():
            pos = m.end()
            continue
        if m.lastgroup is None:
            raise ParseError(f"unexpected character {text[pos]!r}", 1, pos + 1)
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup) + 1))
        pos = m.end()
    rest = text[pos:].strip()
    if rest:
        raise ParseError(f"unexpected character {rest[0]!r}", 1, pos + 1)
    return tokens


def parse_poly(text: str, ring: Ring) -> Laurent:
    """Parse the output of :meth:`Laurent.render`.

    Grammar: terms joined by + or -; a term is *-separated factors; a factor
    is an integer, a variable, or a variable with ^E where E is a bare
    nonnegative integer or a parenthesized integer or fraction.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", 1, 1)
    idx = 0

    def peek() -> tuple[str, str, int] | None:
        return tokens[idx] if idx < len(tokens) else None

    def take() -> tuple[str, str, int]:
        nonlocal idx
        tok = peek()
        if tok is None:
            last = tokens[-1]
            raise ParseError("unexpected end of input", 1, last[2])
        idx += 1
        return tok

    def parse_exponent(col: int) -> Fraction:
        kind, val, c = take()
        if kind == "int":
            return Fraction(int(val))
        if kind == "op" and val == "(":
            sign = 1
            kind, val, c = take()
            if kind == "op" and val == "-":
                sign = -1
                kind, val, c = take()
            if kind != "int":
                raise ParseError("expected integer exponent", 1, c)
            num = int(val)
            den = 1
            tok = peek()
            if tok and tok[0] == "op" and tok[1] == "/":
                take()
                kind, val, c = take()
                if kind != "int":
                    raise ParseError("expected denominator", 1, c)
                den = int(val)
                if den == 0:
                    raise ParseError("zero denominator", 1, c)
            kind, val, c = take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", 1, c)
            return Fraction(sign * num, den)
        raise ParseError("expected exponent", 1, col)

    terms: dict[Key, int] = {}
    width = len(ring.names)
    while True:
        sign = 1
        tok = peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            take()
            sign = -1 if tok[1] == "-" else 1
        coeff = sign
        key = [Fraction(0)] * width
        saw_int = False
        while True:
            kind, val, col = take()
            if kind == "int":
                coeff *= int(val)
                saw_int = True
            elif kind == "name":
                if val not in ring.names:
                    raise ParseError(f"unknown variable {val!r}", 1, col)
                i = ring.names.index(val)
                exp = Fraction(1)
                tok = peek()
                if tok and tok[0] == "op" and tok[1] == "^":
                    take()
                    exp = parse_exponent(col)
                key[i] += exp
            else:
                raise ParseError(f"unexpected token {val!r}", 1, col)
            tok = peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                take()
                continue
            break
        if not saw_int and all(u == 0 for u in key) and coeff in (1, -1):
            # a bare sign with no factors is malformed, e.g. "x + "
            last = tokens[idx - 1] if idx else (None, None, 1)
            raise ParseError("empty term", 1, last[2])
        scaled = []
        for u, s, name in zip(key, ring.scales, ring.names):
            su = u * s
            if su.denominator != 1:
                raise ParseError(f"exponent {u} of {name} is off-lattice", 1, 1)
            scaled.append(int(su))
        k = tuple(scaled)
        terms[k] = terms.get(k, 0) + coeff
        tok = peek()
        if tok is None:
            break
        if not (tok[0] == "op" and tok[1] in "+-"):
            raise ParseError(f"unexpected token {tok[1]!r}", 1, tok[2])
    return Laurent(ring, terms)
