"""The derived Hall algebra at a fixed prime power q.

Basis elements are isomorphism classes of derived objects.  The
structure constant attached to a triple (X, Y, L) is

    F^L_{X,Y} = |Hom(X,L)_Y| / |Aut(X)| * {X,L} / {X,X}

where Hom(X,L)_Y is the set of morphism classes f : X -> L whose cone is
isomorphic to Y, and {A,B} is the alternating product of the orders of
the negative-degree Hom spaces.  The twisted product rescales by the
Euler pairing:  [X]*[Y] = q^{<Y,X>/2} [X].[Y].

Free-algebra expressions are evaluated here by sending each generator
to a basis class and each Q(v) coefficient to Q(sqrt(q)).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Tuple

from .freealg import Generator, NCPolynomial
from .repq import DerivedCategory, DerivedObject, FiniteField
from .scalar import QuadraticScalar, RationalFunctionV, evaluate_at


class HallElement:
    """A finite Q(sqrt(q))-linear combination of derived objects."""

    __slots__ = ("q", "terms")

    def __init__(self, q: int, terms: Dict[DerivedObject, QuadraticScalar] = None):
        clean = {}
        for obj, c in (terms or {}).items():
            if not c.is_zero():
                clean[obj] = c
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("immutable")

    @staticmethod
    def zero(q: int) -> "HallElement":
        return HallElement(q, {})

    @staticmethod
    def basis(q: int, obj: DerivedObject, coeff=1) -> "HallElement":
        if not isinstance(coeff, QuadraticScalar):
            coeff = QuadraticScalar(q, coeff)
        return HallElement(q, {obj: coeff})

    @staticmethod
    def unit(q: int) -> "HallElement":
        return HallElement.basis(q, DerivedObject.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, HallElement):
            if other.q != self.q:
                raise ValueError("mixed q")
            return other
        if isinstance(other, (int, Fraction, QuadraticScalar)):
            return HallElement.basis(self.q, DerivedObject.zero(), other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for obj, c in other.terms.items():
            out[obj] = out[obj] + c if obj in out else c
        return HallElement(self.q, out)

    __radd__ = __add__

    def __neg__(self):
        return HallElement(self.q, {o: -c for o, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "HallElement":
        if not isinstance(c, QuadraticScalar):
            c = QuadraticScalar(self.q, c)
        return HallElement(self.q, {o: cc * c for o, cc in self.terms.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].summands)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for obj, c in self.sorted_terms():
            cs = str(c)
            if any(op in cs[1:] for op in "+-") or "/" in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*[{obj}]")
        return " + ".join(parts)

    __repr__ = __str__


class HallAlgebra:
    """Computation context: fixed m and prime power q, with memo caches."""

    def __init__(self, m: int, q: int, modulus=None):
        self.m = m
        self.q = q
        self.field = FiniteField(q, modulus)
        self.category = DerivedCategory(m, self.field)
        self._product_cache: Dict[Tuple, Dict[DerivedObject, QuadraticScalar]] = {}

    # -- scalar-valued ingredients ------------------------------------------

    def braces(self, X: DerivedObject, Y: DerivedObject) -> Fraction:
        """{X,Y} = prod_{n>0} |Ext^{-n}(X,Y)|^{(-1)^n} as an exact rational."""
        dims = self.category.dhom_dims(X, Y)
        exponent = sum((-1) ** n * dims.get(-n, 0) for n in range(1, 1 + max(
            (-k for k in dims if k < 0), default=0)))
        return Fraction(self.q) ** exponent

    def structure_constant(self, X: DerivedObject, Y: DerivedObject,
                           L: DerivedObject) -> Fraction:
        count = 0
        for f in self.category.enumerate_dhoms(X, L):
            if self.category.cone(f) == Y:
                count += 1
        if count == 0:
            return Fraction(0)
        return (Fraction(count, self.category.aut_count(X))
                * self.braces(X, L) / self.braces(X, X))

    # -- products ------------------------------------------------------------

    def _basis_product(self, X: DerivedObject, Y: DerivedObject):
        key = (X.summands, Y.summands)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        twist = QuadraticScalar.sqrt_q_power(self.q, self.category.euler_form(Y, X))
        # candidate cones L: rotate the triangle Y[-1] -> X -> L
        candidates = set()
        for w in self.category.enumerate_dhoms(Y.shifted(-1), X):
            candidates.add(self.category.cone(w))
        out: Dict[DerivedObject, QuadraticScalar] = {}
        for L in sorted(candidates, key=lambda o: o.summands):
            c = self.structure_constant(X, Y, L)
            if c:
                out[L] = twist * QuadraticScalar(self.q, c)
        self._product_cache[key] = out
        return out

    def hall_product(self, x: HallElement, y: HallElement) -> HallElement:
        if x.q != self.q or y.q != self.q:
            raise ValueError("element/algebra q mismatch")
        out: Dict[DerivedObject, QuadraticScalar] = {}
        for X, cx in x.terms.items():
            for Y, cy in y.terms.items():
                c = cx * cy
                for L, coeff in self._basis_product(X, Y).items():
                    add = c * coeff
                    out[L] = out[L] + add if L in out else add
        return HallElement(self.q, out)

    # -- evaluation of free-algebra expressions ------------------------------

    def evaluate(self, x: NCPolynomial, assign: Dict[Tuple[str, object], DerivedObject]
                 ) -> HallElement:
        """Evaluate an NCPolynomial.

        ``assign`` maps (family, index) to the shift-0 basis object of
        that generator; shifts are applied per generator occurrence.
        """
        total = HallElement.zero(self.q)
        for word, coeff in x.terms.items():
            # multiply right-to-left: keeping a single basis class on the
            # left makes the Hom-set enumerations inside the structure
            # constants exponentially smaller for long words
            acc = HallElement.unit(self.q)
            for g in reversed(word):
                base = assign.get((g.family, g.index))
                if base is None:
                    raise ValueError(f"no assignment for generator {g}")
                acc = self.hall_product(
                    HallElement.basis(self.q, base.shifted(g.shift)), acc)
            total = total + acc.scale(evaluate_at(coeff, self.q))
        return total

    def verify_identity(self, lhs: NCPolynomial, rhs: NCPolynomial,
                        assign, label: Optional[str] = None) -> dict:
        """Evaluate both sides; report pass/fail with expansions and diff."""
        lv = self.evaluate(lhs, assign)
        rv = self.evaluate(rhs, assign)
        diff = lv - rv
        return {
            "label": label,
            "passed": diff.is_zero(),
            "lhs": str(lv),
            "rhs": str(rv),
            "diff": str(diff),
        }


def simples_assignment(m: int) -> Dict[Tuple[str, object], DerivedObject]:
    """The standard assignment z_i -> S_i for the quiver generators."""
    return {("z", i): DerivedObject.simple(i) for i in range(1, m)}
