"""Tiny affine algebra over the spread parameters.

Transform rules and equivalence functions are affine maps in (alpha, beta)
guarded by linear inequality constraints. Coefficients are Fractions since
a few published maps involve halves; images must evaluate to integers on
their domains, and the verifiers flag the points where they do not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_OPS = ("<=", ">=", "==", "<", ">")


@dataclass(frozen=True, slots=True)
class Constraint:
    """a*alpha + b*beta OP c over the integers."""

    a: int
    b: int
    op: str
    c: int

    def __post_init__(self) -> None:
        if self.op not in _OPS:
            raise ValueError(f"bad operator {self.op!r}")

    def holds(self, alpha: int, beta: int) -> bool:
        v = self.a * alpha + self.b * beta
        if self.op == "<=":
            return v <= self.c
        if self.op == ">=":
            return v >= self.c
        if self.op == "==":
            return v == self.c
        if self.op == "<":
            return v < self.c
        return v > self.c

    def text(self) -> str:
        terms = []
        for coef, name in ((self.a, "a"), (self.b, "b")):
            if coef == 0:
                continue
            if coef == 1:
                terms.append(name if not terms else f"+{name}")
            elif coef == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{coef:+d}{name}" if terms else f"{coef}{name}")
        lhs = "".join(terms) or "0"
        return f"{lhs}{self.op}{self.c}"


def alpha_between(lo: int, hi: int) -> tuple[Constraint, ...]:
    return (Constraint(1, 0, ">=", lo), Constraint(1, 0, "<=", hi))


def satisfies(constraints: tuple[Constraint, ...], alpha: int, beta: int) -> bool:
    return all(c.holds(alpha, beta) for c in constraints)


def constraints_text(constraints: tuple[Constraint, ...]) -> str:
    return ", ".join(c.text() for c in constraints)


@dataclass(frozen=True, slots=True)
class LinearForm:
    """a*alpha + b*beta + c with rational coefficients."""

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def of(cls, a, b, c) -> "LinearForm":
        return cls(Fraction(a), Fraction(b), Fraction(c))

    def evaluate(self, alpha: int, beta: int) -> Fraction:
        return self.a * alpha + self.b * beta + self.c

    def text(self, alpha_name: str = "a", beta_name: str = "b") -> str:
        parts = []
        for coef, name in ((self.a, alpha_name), (self.b, beta_name)):
            if coef == 0:
                continue
            if coef == 1:
                parts.append(name if not parts else f"+{name}")
            elif coef == -1:
                parts.append(f"-{name}")
            else:
                sign = "+" if (parts and coef > 0) else ""
                parts.append(f"{sign}{coef}{name}")
        if self.c != 0 or not parts:
            sign = "+" if (parts and self.c > 0) else ""
            parts.append(f"{sign}{self.c}")
        return "".join(parts)


@dataclass(frozen=True, slots=True)
class AffineMap:
    """(alpha, beta) -> (alpha_form, beta_form)."""

    alpha_form: LinearForm
    beta_form: LinearForm

    def evaluate(self, alpha: int, beta: int) -> tuple[Fraction, Fraction]:
        return (self.alpha_form.evaluate(alpha, beta),
                self.beta_form.evaluate(alpha, beta))

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """self after inner: evaluate inner first, then self."""
        fa, fb = inner.alpha_form, inner.beta_form
        ga, gb = self.alpha_form, self.beta_form
        return AffineMap(
            LinearForm(ga.a * fa.a + ga.b * fb.a,
                       ga.a * fa.b + ga.b * fb.b,
                       ga.a * fa.c + ga.b * fb.c + ga.c),
            LinearForm(gb.a * fa.a + gb.b * fb.a,
                       gb.a * fa.b + gb.b * fb.b,
                       gb.a * fa.c + gb.b * fb.c + gb.c),
        )

    def text(self) -> str:
        return f"({self.alpha_form.text()}, {self.beta_form.text()})"


def affine(aa, ab, ac, ba, bb, bc) -> AffineMap:
    return AffineMap(LinearForm.of(aa, ab, ac), LinearForm.of(ba, bb, bc))
