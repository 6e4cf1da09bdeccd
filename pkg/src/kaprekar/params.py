"""Parametric layer: spread parameters, class images, and transform rules.

Sorting a word's digits descending as d1 >= d2 >= ... >= dw gives the
spread parameters alpha = d1 - dw and, for widths 4 and 5, beta = d2 -
d(w-1). All words sharing parameters share their step image, so the step
descends to (a) a digit-pattern function on classes (f_image) and (b) a
family of affine transform rules on the parameters themselves, each valid
on a constrained region (k_registry / k_apply).

The bundled rule tables carry one known transcription defect: the width-5
K25 lower bound as given excludes alpha = 6, leaving class (6, 0) without
an applicable rule even though the rule's formula matches the brute-force
image there. The registry ships the corrected bound by default and keeps
the as-given bound available for auditing (as_printed=True).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .algebra import AffineMap, Constraint, LinearForm, affine, constraints_text, satisfies
from .digits import DigitWord, enumerate_words, kaprekar_step
from .report import DOCUMENTED_REPAIR, GAP, INFO, MISMATCH, DiscrepancyReport

__all__ = [
    "Params", "KFuncSpec", "FImageSpec", "CoverageGapError", "ConsensusError",
    "params_of", "all_classes", "class_members", "f_registry", "f_image",
    "k_registry", "k_apply", "verify_parametric_layer",
]


@dataclass(frozen=True, slots=True, order=True)
class Params:
    """A parameter class. beta is None exactly for widths 2 and 3."""

    width: int
    alpha: int
    beta: int | None

    def __post_init__(self) -> None:
        if self.width in (2, 3):
            if self.beta is not None:
                raise ValueError(f"width {self.width} has a single parameter")
        elif self.width in (4, 5):
            if self.beta is None:
                raise ValueError(f"width {self.width} needs both parameters")
            if not 0 <= self.beta <= self.alpha:
                raise ValueError(f"need 0 <= beta <= alpha, got {self}")
        else:
            raise ValueError(f"unsupported width {self.width}")
        if not 0 <= self.alpha <= 9:
            raise ValueError(f"alpha out of range in {self}")

    def as_tuple(self) -> tuple[int, ...]:
        return (self.alpha,) if self.beta is None else (self.alpha, self.beta)

    def text(self) -> str:
        return "(" + ",".join(str(v) for v in self.as_tuple()) + ")"

    def __str__(self) -> str:
        return self.text()


def params_of(word: DigitWord) -> Params:
    d = sorted(word.digits, reverse=True)
    alpha = d[0] - d[-1]
    beta = d[1] - d[-2] if word.width in (4, 5) else None
    return Params(word.width, alpha, beta)


@functools.lru_cache(maxsize=None)
def all_classes(width: int) -> tuple[Params, ...]:
    """Every inhabited parameter class, sorted. 9 for widths 2-3, 54 for 4-5."""
    if width in (2, 3):
        return tuple(Params(width, a, None) for a in range(1, 10))
    return tuple(Params(width, a, b) for a in range(1, 10) for b in range(a + 1))


@functools.lru_cache(maxsize=None)
def _members_by_class(width: int) -> dict[Params, tuple[DigitWord, ...]]:
    buckets: dict[Params, list[DigitWord]] = {}
    for word in enumerate_words(width):
        buckets.setdefault(params_of(word), []).append(word)
    return {cls: tuple(words) for cls, words in buckets.items()}


def class_members(params: Params) -> tuple[DigitWord, ...]:
    """All admissible words in the class, ascending by value."""
    return _members_by_class(params.width)[params]


def representative(params: Params) -> DigitWord:
    return class_members(params)[0]


# --------------------------------------------------------------------------
# digit-pattern image of a class

@dataclass(frozen=True, slots=True)
class FImageSpec:
    """One branch of the class-to-image digit pattern."""

    width: int
    branch: str
    domain: tuple[Constraint, ...]
    digit_forms: tuple[LinearForm, ...]


_BETA_POS = Constraint(0, 1, ">=", 1)
_BETA_ZERO = Constraint(0, 1, "==", 0)
_ALPHA_POS = Constraint(1, 0, ">=", 1)


def _forms(*rows) -> tuple[LinearForm, ...]:
    return tuple(LinearForm.of(a, b, c) for a, b, c in rows)


@functools.lru_cache(maxsize=None)
def f_registry(width: int) -> tuple[FImageSpec, ...]:
    if width == 2:
        return (FImageSpec(2, "f", (_ALPHA_POS,),
                           _forms((1, 0, -1), (-1, 0, 10))),)
    if width == 3:
        return (FImageSpec(3, "f", (_ALPHA_POS,),
                           _forms((1, 0, -1), (0, 0, 9), (-1, 0, 10))),)
    if width == 4:
        return (
            FImageSpec(4, "f1", (_BETA_POS,),
                       _forms((1, 0, 0), (0, 1, -1), (0, -1, 9), (-1, 0, 10))),
            FImageSpec(4, "f2", (_BETA_ZERO, _ALPHA_POS),
                       _forms((1, 0, -1), (0, 0, 9), (0, 0, 9), (-1, 0, 10))),
        )
    if width == 5:
        return (
            FImageSpec(5, "f1", (_BETA_POS,),
                       _forms((1, 0, 0), (0, 1, -1), (0, 0, 9), (0, -1, 9),
                              (-1, 0, 10))),
            FImageSpec(5, "f2", (_BETA_ZERO, _ALPHA_POS),
                       _forms((1, 0, -1), (0, 0, 9), (0, 0, 9), (0, 0, 9),
                              (-1, 0, 10))),
        )
    raise ValueError(f"unsupported width {width}")


def f_image(params: Params) -> DigitWord:
    """The shared step image of every word in the class."""
    beta = params.beta or 0
    for spec in f_registry(params.width):
        if satisfies(spec.domain, params.alpha, beta):
            digits = []
            for form in spec.digit_forms:
                v = form.evaluate(params.alpha, beta)
                if v.denominator != 1 or not 0 <= v <= 9:
                    raise ValueError(f"branch {spec.branch} leaves digit range on {params}")
                digits.append(int(v))
            return DigitWord(params.width, tuple(digits))
    raise ValueError(f"no image branch covers {params}")


# --------------------------------------------------------------------------
# parameter-to-parameter transform rules

@dataclass(frozen=True, slots=True)
class KFuncSpec:
    """One affine transform rule with its region of validity.

    permutation_label and type_label carry the published registry
    metadata verbatim; they do not affect evaluation. printed_domain is
    set when the shipped domain had to be corrected, and holds the
    as-given constraints.
    """

    id: str
    width: int
    permutation_label: str | None
    type_label: str | None
    domain: tuple[Constraint, ...]
    image: AffineMap
    printed_domain: tuple[Constraint, ...] | None = None
    repair_note: str = ""

    def applies(self, params: Params, as_printed: bool = False) -> bool:
        dom = self.domain
        if as_printed and self.printed_domain is not None:
            dom = self.printed_domain
        return satisfies(dom, params.alpha, params.beta or 0)

    def evaluate(self, params: Params) -> Params:
        va, vb = self.image.evaluate(params.alpha, params.beta or 0)
        if va.denominator != 1 or vb.denominator != 1:
            raise ValueError(f"{self.id} gives a non-integer image on {params}")
        if params.width in (2, 3):
            return Params(params.width, int(va), None)
        return Params(params.width, int(va), int(vb))

    def domain_text(self, as_printed: bool = False) -> str:
        dom = self.domain
        if as_printed and self.printed_domain is not None:
            dom = self.printed_domain
        return constraints_text(dom)


def _c(a: int, b: int, op: str, c: int) -> Constraint:
    return Constraint(a, b, op, c)


def _spec(id_: str, width: int, perm: str | None, type_: str | None,
          domain, image, printed_domain=None, repair_note="") -> KFuncSpec:
    return KFuncSpec(id_, width, perm, type_, tuple(domain), image,
                     None if printed_domain is None else tuple(printed_domain),
                     repair_note)


@functools.lru_cache(maxsize=None)
def k_registry(width: int) -> dict[str, KFuncSpec]:
    """The transform rules for a width, keyed by id in canonical order."""
    if width == 2:
        specs = [
            _spec("K1", 2, None, None,
                  [_c(1, 0, ">=", 6), _c(1, 0, "<=", 9)],
                  affine(2, 0, -11, 0, 0, 0)),
            _spec("K2", 2, None, None,
                  [_c(1, 0, ">=", 1), _c(1, 0, "<=", 5)],
                  affine(-2, 0, 11, 0, 0, 0)),
        ]
    elif width == 3:
        specs = [
            _spec("K1", 3, None, None,
                  [_c(1, 0, ">=", 6), _c(1, 0, "<=", 9)],
                  affine(1, 0, -1, 0, 0, 0)),
            _spec("K2", 3, None, None,
                  [_c(1, 0, ">=", 1), _c(1, 0, "<=", 5)],
                  affine(-1, 0, 10, 0, 0, 0)),
        ]
    elif width == 4:
        b1 = _c(0, 1, ">=", 1)
        specs = [
            _spec("K1", 4, "P1(1 2 3 4)", "1a",
                  [b1, _c(1, -1, ">=", 1), _c(0, 1, ">=", 5)],
                  affine(2, 0, -10, 0, 2, -10)),
            _spec("K2", 4, "P2(1 3 2 4)", "1a",
                  [b1, _c(1, 0, ">=", 6), _c(0, 1, "<=", 5), _c(1, 1, ">=", 11)],
                  affine(2, 0, -10, 0, -2, 10)),
            _spec("K5", 4, "P5(3 1 4 2)", "1b",
                  [b1, _c(1, 0, ">=", 5), _c(1, 1, "<=", 9)],
                  affine(0, -2, 10, 2, 0, -10)),
            _spec("K6", 4, "P6(3 4 1 2)", "1b",
                  [b1, _c(1, 0, "<=", 5), _c(1, -1, ">=", 1)],
                  affine(0, -2, 10, -2, 0, 10)),
            _spec("K9", 4, "P9(1 2 4 3)", "2a",
                  [b1, _c(1, -1, "<=", 1), _c(1, 1, ">=", 11)],
                  affine(1, 1, -9, 1, 1, -11)),
            _spec("K10", 4, "P10(1 4 2 3)", "2a",
                  [b1, _c(1, 0, ">=", 5), _c(0, 1, ">=", 5), _c(1, 1, "<=", 11)],
                  affine(1, 1, -9, -1, -1, 11)),
            _spec("K13", 4, "P13(4 1 3 2)", "2b",
                  [b1, _c(1, 0, "<=", 5), _c(0, 1, "<=", 5), _c(1, 1, ">=", 9)],
                  affine(-1, -1, 11, 1, 1, -9)),
            _spec("K14", 4, "P14(4 3 1 2)", "2b",
                  [b1, _c(1, -1, "<=", 1), _c(1, 1, "<=", 9)],
                  affine(-1, -1, 11, -1, -1, 9)),
            _spec("K17", 4, "P17(1 3 4 2)", "3a",
                  [b1, _c(1, -1, ">=", 1), _c(1, 1, ">=", 9), _c(1, 1, "<=", 11)],
                  affine(1, -1, 1, 1, -1, -1)),
            _spec("K18", 4, "P18(1 4 3 2)", "3a",
                  [b1, _c(1, 0, ">=", 5), _c(0, 1, "<=", 5), _c(1, -1, "<=", 1)],
                  affine(1, -1, 1, -1, 1, 1)),
            _spec("K21", 4, "P21(4 1 2 3)", "3b",
                  [_c(1, 0, "==", 5), _c(0, 1, "==", 5)],
                  affine(-1, 1, 1, 1, -1, 1)),
            _spec("K25", 4, "P25(1 2)", None,
                  [_c(0, 1, "==", 0), _c(1, 0, ">=", 6), _c(1, 0, "<=", 9)],
                  affine(1, 0, -1, -1, 0, 10)),
            _spec("K26", 4, "P26(2 1)", None,
                  [_c(0, 1, "==", 0), _c(1, 0, ">=", 1), _c(1, 0, "<=", 5)],
                  affine(-1, 0, 10, 1, 0, -1)),
        ]
    elif width == 5:
        b1 = _c(0, 1, ">=", 1)
        specs = [
            _spec("K1", 5, "P1(1 2 3 4)", "1a",
                  [b1, _c(1, -1, ">=", 1), _c(0, 1, ">=", 5), _c(0, 1, "<=", 8)],
                  affine(1, 0, -1, 1, 1, -9)),
            _spec("K2", 5, "P2(1 3 2 4)", "1a",
                  [b1, _c(1, 0, ">=", 6), _c(0, 1, ">=", 2), _c(0, 1, "<=", 5),
                   _c(1, 1, ">=", 11)],
                  affine(1, 0, -1, 1, -1, 1)),
            _spec("K5", 5, "P5(3 1 4 2)", "2a",
                  [b1, _c(1, 0, ">=", 5), _c(1, 1, "<=", 9)],
                  affine(0, -1, 10, 1, -1, -1)),
            _spec("K6", 5, "P6(3 4 1 2)", "2a",
                  [b1, _c(1, 0, "<=", 5), _c(1, -1, ">=", 1)],
                  affine(0, -1, 10, -1, -1, 9)),
            _spec("K9", 5, "P9(1 2 4 3)", "2a",
                  [b1, _c(1, -1, "<=", 1), _c(1, 1, ">=", 11)],
                  affine(0, 1, 0, 2, 0, -10)),
            _spec("K10", 5, "P10(1 4 2 3)", "2a",
                  [b1, _c(1, 0, ">=", 5), _c(0, 1, ">=", 5), _c(1, 1, "<=", 11)],
                  affine(0, 1, 0, 1, -1, 1)),
            _spec("K13", 5, "P13(4 1 3 2)", "2b",
                  [b1, _c(1, 0, "<=", 5), _c(0, 1, "<=", 5), _c(1, 1, ">=", 9)],
                  affine(0, -1, 10, -1, 1, 1)),
            _spec("K14", 5, "P14(4 3 1 2)", "2b",
                  [b1, _c(1, -1, "<=", 1), _c(1, 1, "<=", 9)],
                  affine(0, -1, 10, -2, 0, 10)),
            _spec("K17", 5, "P17(1 3 4 2)", "3a",
                  [b1, _c(1, -1, ">=", 1), _c(1, 1, ">=", 9), _c(1, 1, "<=", 11)],
                  affine(0, -1, 10, 2, 0, -10)),
            _spec("K18", 5, "P18(1 4 3 2)", "3a",
                  [b1, _c(1, 0, ">=", 5), _c(0, 1, "<=", 5), _c(1, -1, "<=", 1)],
                  affine(0, -1, 10, 1, 1, -9)),
            _spec("K21", 5, "P21(4 1 2 3)", "3b",
                  [_c(1, 0, "==", 5), _c(0, 1, "==", 5)],
                  affine(0, 1, 0, -1, -1, 11)),
            _spec("K25", 5, "P25(1 2)", "4",
                  [_c(0, 1, "==", 0), _c(1, 0, ">=", 6), _c(1, 0, "<=", 9)],
                  affine(1, 0, -1, -1, 0, 10),
                  printed_domain=[_c(0, 1, "==", 0), _c(1, 0, ">", 6), _c(1, 0, "<=", 9)],
                  repair_note="as-given lower bound a>6 leaves class (6,0) "
                              "uncovered; the formula matches the brute-force "
                              "image at a=6, so the bound is widened to a>=6"),
            _spec("K26", 5, "P26(2 1)", "4",
                  [_c(0, 1, "==", 0), _c(1, 0, ">=", 1), _c(1, 0, "<=", 5)],
                  affine(-1, 0, 10, 1, 0, -1)),
        ]
    else:
        raise ValueError(f"unsupported width {width}")
    return {spec.id: spec for spec in specs}


class CoverageGapError(LookupError):
    """No transform rule applies to the class."""


class ConsensusError(ValueError):
    """Applicable transform rules disagree about the image."""


def k_apply(params: Params, as_printed: bool = False) -> tuple[Params, tuple[str, ...]]:
    """Image of a class under the rule registry, with the applicable rule ids.

    Every applicable rule must agree on the image; disagreement raises
    ConsensusError and an uncovered class raises CoverageGapError.
    """
    images: dict[Params, list[str]] = {}
    for spec in k_registry(params.width).values():
        if spec.applies(params, as_printed):
            images.setdefault(spec.evaluate(params), []).append(spec.id)
    if not images:
        raise CoverageGapError(f"no rule applies to {params} at width {params.width}")
    if len(images) > 1:
        detail = "; ".join(f"{img} via {ids}" for img, ids in sorted(images.items()))
        raise ConsensusError(f"rules disagree on {params}: {detail}")
    image, ids = next(iter(images.items()))
    return image, tuple(ids)


def iterate_class(params: Params, steps: int, as_printed: bool = False) -> Params:
    for _ in range(steps):
        params = k_apply(params, as_printed)[0]
    return params


def verify_parametric_layer(width: int, as_printed: bool = False) -> DiscrepancyReport:
    """Exhaustively check the parametric layer against digit arithmetic.

    Covers: the digit-pattern contract f(p(n)) == K(n) for every admissible
    word, injectivity of the pattern on classes, full rule coverage of
    every class, rule consensus, and agreement of the rule image with the
    digit-level image.
    """
    report = DiscrepancyReport()

    for word in enumerate_words(width):
        expected = kaprekar_step(word)
        computed = f_image(params_of(word))
        if computed != expected:
            report.add(MISMATCH, f"pattern:{params_of(word).text()}:w{width}",
                       expected.text(), computed.text(),
                       detail=f"word {word.text()}")

    images = {}
    for cls in all_classes(width):
        img = f_image(cls)
        if img.digits in images:
            report.add(MISMATCH, f"pattern-injectivity:w{width}",
                       "distinct images", img.text(),
                       detail=f"{cls.text()} collides with {images[img.digits].text()}")
        images[img.digits] = cls

    for cls in all_classes(width):
        expected_img = params_of(kaprekar_step(representative(cls)))
        try:
            computed_img, ids = k_apply(cls, as_printed)
        except CoverageGapError:
            report.add(GAP, f"coverage:{cls.text()}:w{width}",
                       expected_img.text(), None,
                       detail="no transform rule applies")
            continue
        except ConsensusError as err:
            report.add(MISMATCH, f"consensus:{cls.text()}:w{width}",
                       expected_img.text(), str(err))
            continue
        if computed_img != expected_img:
            report.add(MISMATCH, f"rule-image:{cls.text()}:w{width}",
                       expected_img.text(), computed_img.text(),
                       detail=f"via {', '.join(ids)}")

    if not as_printed:
        for spec in k_registry(width).values():
            if spec.printed_domain is not None:
                report.add(INFO, f"registry:{spec.id}:w{width}:domain",
                           constraints_text(spec.printed_domain),
                           constraints_text(spec.domain),
                           detail=spec.repair_note, tag=DOCUMENTED_REPAIR)
    return report
