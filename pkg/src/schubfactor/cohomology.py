"""
Factored class representatives and torus localization for type A.

All formulas live over the variable space of a composition mu of n (see
polynomial.VariableSpace).  Per block i with positions nu_i+1 .. nu_{i+1}:

    half_block_factor(mu, i)   product of (x_j - z_i) over the first
                               floor(mu_i/2) positions j of block i
    block_pair_factor(mu, i)   product of (x_j + x_k - 2 z_i) over pairs
                               nu_i+1 <= j < k <= 2 nu_i + mu_i - j
    cross_pair_factor(mu,i,j)  for blocks i < j, the product over x-positions
                               of block i of linear forms in z_j and the
                               y{j}_{l} coordinates (middle coordinate of an
                               odd block contributes a bare (x - z_j) factor)

The ordinary classes are pure-x specializations: a monomial
prod x_i^{right_mass(+first_half_flag)} times the block pair binomials.
The equivariant classes multiply the block factors with the cross-block
factor (and a power of two: one 2 per half-block slot in the orthogonal
family).

Localization: restrict_to_fixed_point substitutes x_i -> y_{w(i)}; the top
cross-block Chern class restricts at w to fixed_point_weight_product(mu, w),
which is zero unless w preserves every block.  restrict_to_block_torus maps
the full-torus y coordinates onto the block-torus y/z coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .composition import Composition
from .permutation import Permutation
from .polynomial import Polynomial, VariableSpace, product_of_linear_forms


@dataclass(frozen=True)
class RootSystemA:
    """Positive roots e_k - e_l (k < l) of GL_n, indexed as pairs (k, l)."""

    n: int

    def positive_roots(self) -> list[tuple[int, int]]:
        return [(k, l) for k in range(1, self.n + 1) for l in range(k + 1, self.n + 1)]

    def levi_positive_roots(self, mu: Composition) -> list[tuple[int, int]]:
        """Pairs lying inside a single mu-block."""
        if mu.total != self.n:
            raise ValueError("composition does not match rank")
        return [(k, l) for (k, l) in self.positive_roots() if mu.block_of(k) == mu.block_of(l)]

    def cross_block_roots(self, mu: Composition) -> list[tuple[int, int]]:
        """Pairs straddling two different blocks; count = sum_{i<j} mu_i mu_j."""
        if mu.total != self.n:
            raise ValueError("composition does not match rank")
        return [(k, l) for (k, l) in self.positive_roots() if mu.block_of(k) != mu.block_of(l)]


def space_for(mu: Composition) -> VariableSpace:
    return VariableSpace.for_composition(mu)


def _check_space(mu: Composition, space: VariableSpace | None) -> VariableSpace:
    if space is None:
        return space_for(mu)
    if space.n != mu.total:
        raise ValueError("space does not match composition total")
    return space


# -- block factors -------------------------------------------------------------


def _half_block_forms(space: VariableSpace, mu: Composition, i: int) -> list[Polynomial]:
    zi = space.z(i)
    return [
        Polynomial.linear_form(space, {space.x(j): 1, zi: -1})
        for j in range(mu.nu[i - 1] + 1, mu.nu[i - 1] + mu.parts[i - 1] // 2 + 1)
    ]


def _block_pair_forms(space: VariableSpace, mu: Composition, i: int) -> list[Polynomial]:
    zi = space.z(i)
    nu_i, part = mu.nu[i - 1], mu.parts[i - 1]
    forms = []
    for j in range(nu_i + 1, nu_i + part + 1):
        for k in range(j + 1, 2 * nu_i + part - j + 1):
            forms.append(
                Polynomial.linear_form(space, {space.x(j): 1, space.x(k): 1, zi: -2})
            )
    return forms


def _cross_pair_forms(space: VariableSpace, mu: Composition, i: int, j: int) -> list[Polynomial]:
    if not 1 <= i < j <= mu.s:
        raise ValueError(f"need block indices i < j, got {i}, {j}")
    zj = space.z(j)
    part_j = mu.parts[j - 1]
    forms = []
    for k in range(1, mu.parts[i - 1] + 1):
        xv = space.x(mu.nu[i - 1] + k)
        if part_j % 2 == 1:
            forms.append(Polynomial.linear_form(space, {xv: 1, zj: -1}))
        for l in range(1, part_j // 2 + 1):
            yv = space.yblock(j, l)
            forms.append(Polynomial.linear_form(space, {xv: 1, yv: -1, zj: -1}))
            forms.append(Polynomial.linear_form(space, {xv: 1, yv: 1, zj: -1}))
    return forms


def half_block_factor(mu: Composition, i: int, space: VariableSpace | None = None) -> Polynomial:
    """First-half factor of block i: product of (x_j - z_i)."""
    space = _check_space(mu, space)
    return product_of_linear_forms(space, _half_block_forms(space, mu, i))


def block_pair_factor(mu: Composition, i: int, space: VariableSpace | None = None) -> Polynomial:
    """Within-block pair factor of block i: product of (x_j + x_k - 2 z_i)."""
    space = _check_space(mu, space)
    return product_of_linear_forms(space, _block_pair_forms(space, mu, i))


def cross_pair_factor(mu: Composition, i: int, j: int, space: VariableSpace | None = None) -> Polynomial:
    """Cross factor of the ordered block pair i < j in block-torus coordinates."""
    space = _check_space(mu, space)
    return product_of_linear_forms(space, _cross_pair_forms(space, mu, i, j))


def cross_block_factor(mu: Composition, space: VariableSpace | None = None) -> Polynomial:
    """Product of cross_pair_factor over all block pairs i < j."""
    space = _check_space(mu, space)
    forms = []
    for i in range(1, mu.s + 1):
        for j in range(i + 1, mu.s + 1):
            forms.extend(_cross_pair_forms(space, mu, i, j))
    return product_of_linear_forms(space, forms)


def cross_block_chern_class(mu: Composition, space: VariableSpace | None = None) -> Polynomial:
    """
    Top equivariant Chern class of the cross-block directions in full-torus
    coordinates: product of (x_k - y_l) over cross-block pairs k < l.
    """
    space = _check_space(mu, space)
    forms = [
        Polynomial.linear_form(space, {space.x(k): 1, space.yfull(l): -1})
        for (k, l) in RootSystemA(mu.total).cross_block_roots(mu)
    ]
    return product_of_linear_forms(space, forms)


# -- base (single-block) classes ------------------------------------------------


def base_class_orthogonal(n: int) -> Polynomial:
    """
    Single-block orthogonal class with one equivariant shift z1:
    product of (x_i + x_j - 2 z1) over 1 <= i <= j <= n - i
    (each diagonal pair contributes 2(x_i - z1)).
    """
    mu = Composition((n,))
    space = space_for(mu)
    z1 = space.z(1)
    forms = []
    for i in range(1, n + 1):
        for j in range(i, n - i + 1):
            if i == j:
                forms.append(Polynomial.linear_form(space, {space.x(i): 2, z1: -2}))
            else:
                forms.append(
                    Polynomial.linear_form(space, {space.x(i): 1, space.x(j): 1, z1: -2})
                )
    return product_of_linear_forms(space, forms)


def base_class_symplectic(two_n: int) -> Polynomial:
    """
    Single-block symplectic class with shift z1:
    product of (x_i + x_j - 2 z1) over 1 <= i < j <= 2n - i.
    """
    if two_n % 2 != 0:
        raise ValueError(f"size must be even, got {two_n}")
    mu = Composition((two_n,))
    space = space_for(mu)
    z1 = space.z(1)
    forms = [
        Polynomial.linear_form(space, {space.x(i): 1, space.x(j): 1, z1: -2})
        for i in range(1, two_n + 1)
        for j in range(i + 1, two_n - i + 1)
    ]
    return product_of_linear_forms(space, forms)


# -- factored classes -------------------------------------------------------------


@dataclass(frozen=True)
class FactoredClass:
    """A class kept in factored form: scalar * monomial * linear factors."""

    space: VariableSpace
    scalar: int
    monomial: tuple[tuple[int, int], ...]  # (vid, exponent) pairs
    factors: tuple[Polynomial, ...]

    def expand(self) -> Polynomial:
        poly = Polynomial.monomial(self.space, dict(self.monomial), self.scalar)
        for f in self.factors:
            poly = poly * f
        return poly

    def text(self) -> str:
        pieces = []
        if self.scalar != 1 or (not self.monomial and not self.factors):
            pieces.append(str(self.scalar))
        for vid, e in self.monomial:
            name = self.space.name(vid)
            pieces.append(name if e == 1 else f"{name}^{e}")
        head = " ".join(pieces)
        tail = "".join(f"({f.text()})" for f in self.factors)
        if head and tail:
            return f"{head} {tail}"
        return head or tail


def _ordinary_monomial(mu: Composition, space: VariableSpace, with_half_flag: bool):
    exps = []
    for i in range(1, mu.total + 1):
        e = mu.right_mass(i) + (mu.first_half_flag(i) if with_half_flag else 0)
        if e:
            exps.append((space.x(i), e))
    return tuple(exps)


def _pure_pair_forms(space: VariableSpace, mu: Composition, i: int) -> list[Polynomial]:
    """Within-block binomials (x_j + x_k) with no z shift."""
    nu_i, part = mu.nu[i - 1], mu.parts[i - 1]
    forms = []
    for j in range(nu_i + 1, nu_i + part + 1):
        for k in range(j + 1, 2 * nu_i + part - j + 1):
            forms.append(Polynomial.linear_form(space, {space.x(j): 1, space.x(k): 1}))
    return forms


def ordinary_class_orthogonal_factored(mu: Composition, space: VariableSpace | None = None) -> FactoredClass:
    """
    Factored ordinary orthogonal class (the power of two already divided out):
    prod x_i^{right_mass + first_half_flag} * within-block binomials.
    """
    space = _check_space(mu, space)
    factors = []
    for i in range(1, mu.s + 1):
        factors.extend(_pure_pair_forms(space, mu, i))
    return FactoredClass(space, 1, _ordinary_monomial(mu, space, True), tuple(factors))


def ordinary_class_orthogonal(mu: Composition, space: VariableSpace | None = None) -> Polynomial:
    return ordinary_class_orthogonal_factored(mu, space).expand()


def ordinary_class_symplectic_factored(mu: Composition, space: VariableSpace | None = None) -> FactoredClass:
    """Factored ordinary symplectic class: prod x_i^{right_mass} * binomials."""
    if not mu.all_even():
        raise ValueError(f"symplectic family needs even parts, got {mu}")
    space = _check_space(mu, space)
    factors = []
    for i in range(1, mu.s + 1):
        factors.extend(_pure_pair_forms(space, mu, i))
    return FactoredClass(space, 1, _ordinary_monomial(mu, space, False), tuple(factors))


def ordinary_class_symplectic(mu: Composition, space: VariableSpace | None = None) -> Polynomial:
    return ordinary_class_symplectic_factored(mu, space).expand()


def equivariant_class_orthogonal_factored(mu: Composition, space: VariableSpace | None = None) -> FactoredClass:
    """2^{half_weight} * cross-block factor * prod of half-block and pair factors."""
    space = _check_space(mu, space)
    factors = []
    for i in range(1, mu.s + 1):
        factors.extend(_half_block_forms(space, mu, i))
        factors.extend(_block_pair_forms(space, mu, i))
    for i in range(1, mu.s + 1):
        for j in range(i + 1, mu.s + 1):
            factors.extend(_cross_pair_forms(space, mu, i, j))
    return FactoredClass(space, 2 ** mu.half_weight(), (), tuple(factors))


def equivariant_class_orthogonal(mu: Composition, space: VariableSpace | None = None) -> Polynomial:
    return equivariant_class_orthogonal_factored(mu, space).expand()


def equivariant_class_symplectic_factored(mu: Composition, space: VariableSpace | None = None) -> FactoredClass:
    """Cross-block factor * prod of within-block pair factors (even parts)."""
    if not mu.all_even():
        raise ValueError(f"symplectic family needs even parts, got {mu}")
    space = _check_space(mu, space)
    factors = []
    for i in range(1, mu.s + 1):
        factors.extend(_block_pair_forms(space, mu, i))
    for i in range(1, mu.s + 1):
        for j in range(i + 1, mu.s + 1):
            factors.extend(_cross_pair_forms(space, mu, i, j))
    return FactoredClass(space, 1, (), tuple(factors))


def equivariant_class_symplectic(mu: Composition, space: VariableSpace | None = None) -> Polynomial:
    return equivariant_class_symplectic_factored(mu, space).expand()


# -- localization ----------------------------------------------------------------


def restrict_to_fixed_point(f: Polynomial, w: Permutation) -> Polynomial:
    """Restriction at the fixed point indexed by w: substitute x_i -> y_{w(i)}."""
    space = f.space
    if w.n != space.n:
        raise ValueError(f"permutation size {w.n} != space size {space.n}")
    images = {
        space.x(i): Polynomial.variable(space, space.yfull(w(i)))
        for i in range(1, space.n + 1)
    }
    return f.substitute(images)


def preserves_blocks(w: Permutation, mu: Composition) -> bool:
    """True iff w maps every block of mu onto itself."""
    if w.n != mu.total:
        raise ValueError("size mismatch")
    return all(
        mu.block_of(w(i)) == mu.block_of(i) for i in range(1, mu.total + 1)
    )


def fixed_point_weight_product(mu: Composition, w: Permutation, space: VariableSpace | None = None) -> Polynomial:
    """
    Product of the w-images (y_{w(k)} - y_{w(l)}) of the cross-block roots if
    w preserves every block; the zero polynomial otherwise.
    """
    space = _check_space(mu, space)
    if not preserves_blocks(w, mu):
        return Polynomial.zero(space)
    forms = [
        Polynomial.linear_form(space, {space.yfull(w(k)): 1, space.yfull(w(l)): -1})
        for (k, l) in RootSystemA(mu.total).cross_block_roots(mu)
    ]
    return product_of_linear_forms(space, forms)


def restrict_to_block_torus(f: Polynomial, mu: Composition) -> Polynomial:
    """
    Map full-torus y coordinates onto the block torus: within block i of size
    p and half m = floor(p/2),

        y_{nu_i + k}         -> z_i + y{i}_{k}    for k <= m
        y_{nu_i + m + 1}     -> z_i               when p is odd
        y_{nu_i + p + 1 - k} -> z_i - y{i}_{k}    for k <= m

    f must involve only x and full-torus y variables.
    """
    space = f.space
    if space.mu != mu.parts:
        raise ValueError("polynomial space does not carry this composition's blocks")
    used = f.variables_used()
    for vid in used:
        if vid >= 2 * space.n:
            raise ValueError(f"variable {space.name(vid)} is already a block coordinate")
    images: dict[int, Polynomial] = {}
    for i, p in enumerate(mu.parts, start=1):
        base = mu.nu[i - 1]
        m = p // 2
        zi = space.z(i)
        for k in range(1, m + 1):
            images[space.yfull(base + k)] = Polynomial.linear_form(
                space, {zi: 1, space.yblock(i, k): 1}
            )
            images[space.yfull(base + p + 1 - k)] = Polynomial.linear_form(
                space, {zi: 1, space.yblock(i, k): -1}
            )
        if p % 2 == 1:
            images[space.yfull(base + m + 1)] = Polynomial.variable(space, zi)
    return f.substitute(images)


def zero_equivariant_vars(f: Polynomial) -> Polynomial:
    """Specialize every non-x variable to 0 (the ordinary-class map)."""
    zero = Polynomial.zero(f.space)
    return f.substitute({vid: zero for vid in f.space.equivariant_vids()})
