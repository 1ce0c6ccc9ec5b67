"""Factor-degree profiles of x^q - l(x) by distinct-degree factorization."""

from __future__ import annotations

from .field import FieldCtx
from .poly import UniPoly


def distinct_degree_profile(f: UniPoly) -> dict[int, int]:
    """Map ``degree -> number of irreducible factors`` of a squarefree ``f``.

    Only the degree profile is produced: at step ``d`` the product of all
    degree-``d`` factors is ``gcd(f, x^(q^d) - x)``, whose degree divided by
    ``d`` is the count.
    """
    field = f.field
    q = field.q
    rest = f.monic()
    x = UniPoly.x(field)
    profile: dict[int, int] = {}
    frob = x
    d = 0
    while rest.degree > 0:
        d += 1
        if 2 * d > rest.degree:
            profile[rest.degree] = profile.get(rest.degree, 0) + 1
            break
        frob = frob.pow_mod(q, rest)
        g = rest.gcd(frob - x)
        if g.degree > 0:
            profile[d] = g.degree // d
            rest = rest // g
            frob = frob % rest
    return dict(sorted(profile.items()))


def splitting_polynomial(ctx: FieldCtx, l) -> UniPoly:
    """``x^q - l(x)`` for an affine map ``l = a*x + b``."""
    a, b = int(l.a), int(l.b)
    base = UniPoly.monomial(ctx, ctx.q)
    return base - UniPoly(ctx, [b, a])


def splitting_degree_profile(ctx: FieldCtx, l) -> dict[int, int]:
    """Degrees of the irreducible factors of ``x^q - l(x)``, with multiplicity.

    ``x^q - l(x)`` is squarefree: its derivative is the nonzero constant
    ``-a``. The linear part of the profile counts the fixed points of ``l``.
    """
    return distinct_degree_profile(splitting_polynomial(ctx, l))


def linear_roots(ctx: FieldCtx, l) -> list[int]:
    """Roots of ``x^q - l(x)`` in the field, i.e. fixed points of ``l``."""
    return splitting_polynomial(ctx, l).roots()
