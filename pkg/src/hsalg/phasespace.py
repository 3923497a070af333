"""Graded phase-space symbol algebra: Poisson brackets and the Moyal star.

A PhaseSpace is a variable table plus a constant graded symplectic pairing
{z_a, z_b}.  The star product is the symmetric (Weyl) quantization

    f * g = sum_k (c^k / k!) f <D^k> g,      c = i/2,

realized on a doubled variable table: lift f and g to disjoint copies,
apply the bidifferential pairing operator k times, then collapse the copies.
The normalization c is fixed by the calibration [z_a, z_b]_* = i {z_a, z_b}
(tested, not assumed).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exactcore import EVEN, ODD, GaussianRational, SuperPolynomial, VariableTable

STAR_CONSTANT = GaussianRational(0, Fraction(1, 2))  # i/2


class PhaseSpace:
    """Variable table with a constant graded symplectic pairing."""

    def __init__(self, variables: Sequence[Tuple[str, str]],
                 pairs: Sequence[Tuple[str, str, object]]):
        """``pairs`` lists {z_a, z_b} = coeff for every nonzero ordered pair."""
        self.table = VariableTable(variables)
        self.pairs: List[Tuple[int, int, GaussianRational]] = [
            (self.table.index(a), self.table.index(b), GaussianRational.coerce(c))
            for a, b, c in pairs]
        self.star_constant = STAR_CONSTANT
        self._doubled = None

    # -- symbol constructors -------------------------------------------

    def var(self, name: str) -> SuperPolynomial:
        return SuperPolynomial.variable(self.table, name)

    def constant(self, value) -> SuperPolynomial:
        return SuperPolynomial.constant(self.table, value)

    def zero(self) -> SuperPolynomial:
        return SuperPolynomial.zero(self.table)

    # -- Poisson bracket --------------------------------------------------

    def poisson(self, f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
        """Graded Poisson bracket sum_ab {z_a,z_b} (f d/dz_a-right)(d/dz_b-left g)."""
        out = self.zero()
        names = self.table.names
        for ia, ib, c in self.pairs:
            df = f.derivative(names[ia], side="right")
            if df.is_zero():
                continue
            dg = g.derivative(names[ib], side="left")
            if dg.is_zero():
                continue
            out = out + (df * dg).scale(c)
        return out

    # -- Moyal star product -----------------------------------------------

    def _doubled_setup(self):
        if self._doubled is not None:
            return self._doubled
        t = self.table
        variables = [(f"{n}@1", p) for n, p in zip(t.names, t.parities)]
        variables += [(f"{n}@2", p) for n, p in zip(t.names, t.parities)]
        doubled = VariableTable(variables)
        n = len(t)
        lift1 = {k: k for k in range(n)}
        lift2 = {k: n + k for k in range(n)}
        collapse = {k: k for k in range(n)}
        collapse.update({n + k: k for k in range(n)})
        pair_names = [(doubled.names[ia], doubled.names[n + ib], c)
                      for ia, ib, c in self.pairs]
        self._doubled = (doubled, lift1, lift2, collapse, pair_names)
        return self._doubled

    def star(self, f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
        doubled, lift1, lift2, collapse, pair_names = self._doubled_setup()
        F = f.map_variables(doubled, lift1) * g.map_variables(doubled, lift2)
        total = F
        c = self.star_constant
        k = 0
        while not F.is_zero():
            k += 1
            nxt = SuperPolynomial.zero(doubled)
            for name1, name2, coeff in pair_names:
                d1 = F.derivative(name1, side="left")
                if d1.is_zero():
                    continue
                d2 = d1.derivative(name2, side="left")
                if d2.is_zero():
                    continue
                nxt = nxt + d2.scale(coeff)
            F = nxt.scale(c / k)
            total = total + F
        return total.map_variables(self.table, collapse)

    def graded_star_commutator(self, f, g) -> SuperPolynomial:
        """[f, g]_* = f*g - (-1)^{|f||g|} g*f for parity-homogeneous arguments."""
        pf, pg = f.parity(), g.parity()
        if pf is None or pg is None:
            raise ValueError("graded commutator needs parity-homogeneous symbols")
        fg = self.star(f, g)
        gf = self.star(g, f)
        return fg + gf if (pf and pg) else fg - gf

    def graded_poisson_commutator(self, f, g) -> SuperPolynomial:
        return self.poisson(f, g)
