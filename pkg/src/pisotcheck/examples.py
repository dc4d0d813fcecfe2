"""Named substitutions used in the worked examples and tests."""

from __future__ import annotations

from .algebra import IntPolynomial
from .substitution import Substitution

FIBONACCI = Substitution.parse("1->12;2->1")
TRIBONACCI = Substitution.parse("1->12;2->13;3->1")

# self-inducing interval exchange on four intervals
FOUR_IET = Substitution.parse("1->1241224;2->1224;3->1243334;4->124334")
FOUR_IET_CHARPOLY = (IntPolynomial.from_high_first([1, -3, 1]), IntPolynomial.from_high_first([1, -6, 1]))

# its non-coincident component on oriented overlap types; case swap reverses orientation
FOUR_IET_COMPONENT_LETTERS = "abcABCdDeEfF"
FOUR_IET_COMPONENT_TEXT = {
    "a": "afdeEafdc",
    "b": "fBCFbcfdeE",
    "c": "afdc",
    "A": "AFDEeAFDC",
    "B": "FbcfBCFDEe",
    "C": "AFDC",
    "d": "FbcfdeE",
    "D": "fBCFDEe",
    "e": "afdeEe",
    "E": "AFDEeE",
    "f": "fBC",
    "F": "Fbc",
}


def lettered(images: dict[str, str], letters: str) -> Substitution:
    """Numbered substitution from a map on named letters, numbering in ``letters`` order."""
    num = {c: n for n, c in enumerate(letters, 1)}
    return Substitution(tuple(tuple(num[c] for c in images[a]) for a in letters))


FOUR_IET_COMPONENT = lettered(FOUR_IET_COMPONENT_TEXT, FOUR_IET_COMPONENT_LETTERS)
FOUR_IET_CASE_SWAP = tuple(FOUR_IET_COMPONENT_LETTERS.index(c.swapcase()) + 1 for c in FOUR_IET_COMPONENT_LETTERS)

EXAMPLES = {"4iet": FOUR_IET, "fibonacci": FIBONACCI, "tribonacci": TRIBONACCI}
