"""
Exact sparse multivariate polynomials over the integers, with named variable
families and the divided-difference operator.

A VariableSpace declares four families in a fixed total order:

    x1 < ... < xn  <  y1 < ... < yn  <  y{i}_{j} block pairs  <  z1 < ... < zs

The y family carries full-torus coordinates; the y{i}_{j} and z{i} families
carry the block-torus coordinates of a composition (one z per block, one
y{i}_{j} per half-block slot).  A space built without a composition has only
the x and y families.

Coefficients are Python ints (arbitrary precision); exponent vectors are kept
as dense tuples internally and serialized sparsely.  The canonical term order
is graded reverse-lexicographic on the x part (ties broken the same way on
the remaining families), iterated from the smallest term up; the first term
under this order is the "leading" term used by the Schubert-basis expansion.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping


class VariableSpace:
    """Variable universe shared by every polynomial that may be combined."""

    __slots__ = ("n", "mu", "s", "halves", "num_vars", "_names", "_yblock_base", "_z_base")

    def __init__(self, n: int, mu: tuple[int, ...] | None = None):
        if n < 1:
            raise ValueError("need at least one x variable")
        if mu is not None:
            mu = tuple(mu)
            if sum(mu) != n or any(p < 1 for p in mu):
                raise ValueError(f"blocks {mu} do not partition 1..{n}")
        self.n = n
        self.mu = mu
        self.s = len(mu) if mu else 0
        self.halves = tuple(p // 2 for p in mu) if mu else ()
        self._yblock_base = 2 * n
        self._z_base = 2 * n + sum(self.halves)
        self.num_vars = self._z_base + self.s

        names = [f"x{i}" for i in range(1, n + 1)]
        names += [f"y{i}" for i in range(1, n + 1)]
        for i, h in enumerate(self.halves, start=1):
            names += [f"y{i}_{j}" for j in range(1, h + 1)]
        names += [f"z{i}" for i in range(1, self.s + 1)]
        self._names = tuple(names)

    @classmethod
    def for_composition(cls, mu) -> "VariableSpace":
        """Space carrying the block-torus families of a Composition."""
        return cls(mu.total, tuple(mu.parts))

    def x(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"x{i} out of range")
        return i - 1

    def yfull(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"y{i} out of range")
        return self.n + i - 1

    def yblock(self, i: int, j: int) -> int:
        if not (1 <= i <= self.s and 1 <= j <= self.halves[i - 1]):
            raise ValueError(f"y{i}_{j} out of range")
        return self._yblock_base + sum(self.halves[: i - 1]) + j - 1

    def z(self, i: int) -> int:
        if not 1 <= i <= self.s:
            raise ValueError(f"z{i} out of range")
        return self._z_base + i - 1

    def name(self, vid: int) -> str:
        return self._names[vid]

    def is_x(self, vid: int) -> bool:
        return vid < self.n

    def equivariant_vids(self) -> range:
        """All non-x variables (the ones killed by the ordinary specialization)."""
        return range(self.n, self.num_vars)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VariableSpace)
            and self.n == other.n
            and self.mu == other.mu
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mu))

    def __repr__(self) -> str:
        return f"VariableSpace(n={self.n}, mu={self.mu})"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "s": self.s, "mu": list(self.mu) if self.mu else []}


def _term_key(n: int, exp: tuple[int, ...]):
    """Canonical sort key: graded revlex on x, then on the remaining families."""
    x = exp[:n]
    rest = exp[n:]
    return (
        sum(x),
        tuple(-e for e in reversed(x)),
        sum(rest),
        tuple(-e for e in reversed(rest)),
    )


class Polynomial:
    """
    Immutable sparse polynomial: a map from exponent vectors to nonzero ints.

    Supports +, -, * (by polynomial or int), ** with nonnegative integer
    exponents, exact substitution, and divided differences.  Mixing spaces
    raises ValueError.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: VariableSpace, terms: Mapping[tuple[int, ...], int]):
        self.space = space
        self.terms = dict(terms)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, space: VariableSpace) -> "Polynomial":
        return cls(space, {})

    @classmethod
    def integer(cls, space: VariableSpace, k: int) -> "Polynomial":
        if k == 0:
            return cls.zero(space)
        return cls(space, {(0,) * space.num_vars: int(k)})

    @classmethod
    def one(cls, space: VariableSpace) -> "Polynomial":
        return cls.integer(space, 1)

    @classmethod
    def variable(cls, space: VariableSpace, vid: int) -> "Polynomial":
        exp = [0] * space.num_vars
        exp[vid] = 1
        return cls(space, {tuple(exp): 1})

    @classmethod
    def monomial(cls, space: VariableSpace, exps: Mapping[int, int], coeff: int = 1) -> "Polynomial":
        if coeff == 0:
            return cls.zero(space)
        exp = [0] * space.num_vars
        for vid, e in exps.items():
            if e < 0:
                raise ValueError("negative exponent")
            exp[vid] = e
        return cls(space, {tuple(exp): int(coeff)})

    @classmethod
    def linear_form(cls, space: VariableSpace, coeffs: Mapping[int, int], constant: int = 0) -> "Polynomial":
        """Sum of coeff * variable plus an integer constant."""
        terms: dict[tuple[int, ...], int] = {}
        zero = (0,) * space.num_vars
        if constant:
            terms[zero] = int(constant)
        for vid, c in coeffs.items():
            if c == 0:
                continue
            exp = list(zero)
            exp[vid] = 1
            terms[tuple(exp)] = int(c)
        return cls(space, terms)

    # -- ring operations ----------------------------------------------------

    def _require_same_space(self, other: "Polynomial") -> None:
        if self.space != other.space:
            raise ValueError(f"variable space mismatch: {self.space} vs {other.space}")

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.integer(self.space, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_space(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            nc = out.get(exp, 0) + c
            if nc:
                out[exp] = nc
            elif exp in out:
                del out[exp]
        return Polynomial(self.space, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.space, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-other if isinstance(other, Polynomial) else -int(other))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.space)
            return Polynomial(self.space, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_space(other)
        out: dict[tuple[int, ...], int] = {}
        items = list(other.terms.items())
        for e1, c1 in self.terms.items():
            for e2, c2 in items:
                e = tuple(map(int.__add__, e1, e2))
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                elif e in out:
                    del out[e]
        return Polynomial(self.space, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.space)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == Polynomial.integer(self.space, other).terms
        return (
            isinstance(other, Polynomial)
            and self.space == other.space
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree over all families; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, vid: int) -> int:
        """Largest exponent of one variable."""
        if not self.terms:
            return 0
        return max(e[vid] for e in self.terms)

    def variables_used(self) -> set[int]:
        used: set[int] = set()
        for exp in self.terms:
            used.update(vid for vid, e in enumerate(exp) if e)
        return used

    def iter_terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Terms in canonical order, leading term first."""
        n = self.space.n
        for exp in sorted(self.terms, key=lambda e: _term_key(n, e)):
            yield exp, self.terms[exp]

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        """First term in canonical order; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        n = self.space.n
        exp = min(self.terms, key=lambda e: _term_key(n, e))
        return exp, self.terms[exp]

    # -- operators specific to this package ----------------------------------

    def swap_x(self, i: int) -> "Polynomial":
        """The simple-reflection action exchanging x_i and x_{i+1}."""
        xi, xj = self._x_pair(i)
        out = {}
        for exp, c in self.terms.items():
            e = list(exp)
            e[xi], e[xj] = e[xj], e[xi]
            out[tuple(e)] = c
        return Polynomial(self.space, out)

    def _x_pair(self, i: int) -> tuple[int, int]:
        if not 1 <= i <= self.space.n - 1:
            raise ValueError(f"index {i} out of range for divided difference")
        return i - 1, i

    def divided_difference(self, i: int) -> "Polynomial":
        """
        (f - swap_x(i)(f)) / (x_i - x_{i+1}), computed by exact per-term
        synthetic division; the numerator is always divisible.  The result is
        symmetric in x_i, x_{i+1}, and applying the operator twice gives 0.
        """
        xi, xj = self._x_pair(i)
        out: dict[tuple[int, ...], int] = {}
        for exp, c in self.terms.items():
            a, b = exp[xi], exp[xj]
            if a == b:
                continue
            lo, hi, sign = (b, a, c) if a > b else (a, b, -c)
            base = list(exp)
            # (x^a y^b - x^b y^a)/(x - y) = sum_{k=lo}^{hi-1} x^k y^{lo+hi-1-k}
            for k in range(lo, hi):
                base[xi] = k
                base[xj] = lo + hi - 1 - k
                key = tuple(base)
                nc = out.get(key, 0) + sign
                if nc:
                    out[key] = nc
                elif key in out:
                    del out[key]
        return Polynomial(self.space, out)

    def substitute(self, images: Mapping[int, "Polynomial | int"]) -> "Polynomial":
        """
        Ring homomorphism sending variable vid to images[vid]; unmapped
        variables map to themselves.  Image polynomials must live in this
        polynomial's space.
        """
        space = self.space
        fixed_images: dict[int, Polynomial] = {}
        for vid, img in images.items():
            if isinstance(img, int):
                img = Polynomial.integer(space, img)
            if img.space != space:
                raise ValueError("substitution image in a different variable space")
            fixed_images[vid] = img

        power_cache: dict[tuple[int, int], Polynomial] = {}

        def image_power(vid: int, e: int) -> Polynomial:
            key = (vid, e)
            p = power_cache.get(key)
            if p is None:
                p = fixed_images[vid] ** e
                power_cache[key] = p
            return p

        out: dict[tuple[int, ...], int] = {}
        for exp, c in self.terms.items():
            kept = list(exp)
            factors: list[Polynomial] = []
            for vid in fixed_images:
                e = exp[vid]
                if e:
                    kept[vid] = 0
                    factors.append(image_power(vid, e))
            piece = Polynomial(space, {tuple(kept): c})
            for f in factors:
                piece = piece * f
                if piece.is_zero():
                    break
            for e2, c2 in piece.terms.items():
                nc = out.get(e2, 0) + c2
                if nc:
                    out[e2] = nc
                elif e2 in out:
                    del out[e2]
        return Polynomial(space, out)

    # -- rendering ------------------------------------------------------------

    def _monomial_text(self, exp: tuple[int, ...]) -> str:
        parts = []
        for vid, e in enumerate(exp):
            if e == 1:
                parts.append(self.space.name(vid))
            elif e > 1:
                parts.append(f"{self.space.name(vid)}^{e}")
        return " ".join(parts)

    def text(self) -> str:
        """Human-readable form, terms in descending canonical order."""
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in reversed(list(self.iter_terms())):
            mono = self._monomial_text(exp)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self.text()})"

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical sparse form with decimal-string coefficients."""
        return {
            "space": self.space.to_json_dict(),
            "terms": [
                {
                    "exp": [[self.space.name(vid), e] for vid, e in enumerate(exp) if e],
                    "coeff": str(c),
                }
                for exp, c in self.iter_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polynomial":
        sp = data["space"]
        space = VariableSpace(sp["n"], tuple(sp["mu"]) or None)
        name_to_vid = {space.name(vid): vid for vid in range(space.num_vars)}
        terms: dict[tuple[int, ...], int] = {}
        for term in data["terms"]:
            exp = [0] * space.num_vars
            for name, e in term["exp"]:
                exp[name_to_vid[name]] = int(e)
            terms[tuple(exp)] = int(term["coeff"])
        return cls(space, terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def product_of_linear_forms(space: VariableSpace, forms: Iterable[Polynomial]) -> Polynomial:
    """Exact product of affine-linear forms; the empty product is 1."""
    result = Polynomial.one(space)
    for form in forms:
        if form.total_degree() > 1:
            raise ValueError(f"non-linear factor of degree {form.total_degree()}")
        result = result * form
    return result
