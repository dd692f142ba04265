"""
Braid Word Value Objects
Artin words on a fixed number of strands
"""

import re
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from domain.exceptions.atlas_errors import ValidationError


_TOKEN = re.compile(r"W\((\d+)\)(?:\^\(?(-?\d+)\)?)?|([sS])(\d+)(?:\^\(?(-?\d+)\)?)?")


@dataclass(frozen=True)
class BraidWord:
    """
    Braid word on `index` strands

    Letters are signed generator positions: +i is σ_i and -i is σ_i^{-1},
    with 1 <= i <= index - 1.
    """
    index: int
    letters: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValidationError(
                "Braid index must be a positive integer",
                field="index",
                value=self.index
            )
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.index:
                raise ValidationError(
                    f"Generator {letter} out of range for index {self.index}",
                    field="letters",
                    value=letter,
                    constraint=f"1 <= |i| <= {self.index - 1}"
                )

    @classmethod
    def empty(cls, index: int) -> 'BraidWord':
        return cls(index, ())

    @classmethod
    def descending(cls, n: int, index: int) -> 'BraidWord':
        """W(n) = σ_{n-1} ⋯ σ_1 on `index` strands"""
        if n < 1 or n > index:
            raise ValidationError(
                f"W({n}) does not fit on {index} strands",
                field="n",
                value=n,
                constraint=f"1 <= n <= {index}"
            )
        return cls(index, tuple(range(n - 1, 0, -1)))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: 'BraidWord') -> 'BraidWord':
        """Concatenation; the result lives on the larger index"""
        return BraidWord(max(self.index, other.index), self.letters + other.letters)

    def __pow__(self, exponent: int) -> 'BraidWord':
        if exponent >= 0:
            return BraidWord(self.index, self.letters * exponent)
        return BraidWord(self.index, self.inverse().letters * (-exponent))

    def inverse(self) -> 'BraidWord':
        return BraidWord(self.index, tuple(-x for x in reversed(self.letters)))

    def at_index(self, index: int) -> 'BraidWord':
        """Same letters viewed on `index` strands"""
        return BraidWord(index, self.letters)

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def expanded(self) -> str:
        """Expanded form, e.g. "s4 s3 S2"; the empty word renders as "e" """
        if not self.letters:
            return "e"
        return " ".join(f"s{x}" if x > 0 else f"S{-x}" for x in self.letters)

    @classmethod
    def parse(cls, text: str, index: Optional[int] = None) -> 'BraidWord':
        """
        Parse macro or expanded notation

        Accepts tokens "W(n)", "W(n)^e", "s<i>", "S<i>" and "s<i>^e",
        separated by whitespace or "*". The index defaults to the
        smallest one that fits every token.

        Raises:
            ValidationError: If the text contains anything else
        """
        source = (text or "").replace("*", " ").strip()
        if source == "e":
            source = ""
        letters: List[int] = []
        needed = 1
        pos = 0
        while pos < len(source):
            if source[pos].isspace():
                pos += 1
                continue
            match = _TOKEN.match(source, pos)
            if not match:
                raise ValidationError(
                    f"Cannot parse braid word near '{source[pos:pos + 12]}'",
                    field="braid",
                    value=text
                )
            if match.group(1) is not None:
                n = int(match.group(1))
                exponent = int(match.group(2)) if match.group(2) is not None else 1
                if n < 1:
                    raise ValidationError("W(n) needs n >= 1", field="braid", value=text)
                needed = max(needed, n)
                word = tuple(range(n - 1, 0, -1))
                if exponent < 0:
                    word = tuple(-x for x in reversed(word))
                letters.extend(word * abs(exponent))
            else:
                i = int(match.group(4))
                exponent = int(match.group(5)) if match.group(5) is not None else 1
                if i < 1:
                    raise ValidationError("Generators start at s1", field="braid", value=text)
                sign = 1 if match.group(3) == "s" else -1
                sign = sign if exponent >= 0 else -sign
                needed = max(needed, i + 1)
                letters.extend([sign * i] * abs(exponent))
            pos = match.end()

        if index is None:
            index = needed
        elif index < needed:
            raise ValidationError(
                f"Index {index} too small for '{text}'",
                field="index",
                value=index,
                constraint=f">= {needed}"
            )
        return cls(index, tuple(letters))

    def __str__(self) -> str:
        return f"<{self.index}> {self.expanded()}"


def format_macro(factors: Sequence[Tuple[int, int]]) -> str:
    """
    Render W-power factors in macro notation

    Args:
        factors: (n, exponent) pairs, e.g. [(13, 16), (11, 1)]

    Returns:
        String such as "W(13)^16 W(11)"; zero exponents are dropped
    """
    parts = []
    for n, exponent in factors:
        if exponent == 0:
            continue
        parts.append(f"W({n})" if exponent == 1 else f"W({n})^{exponent}")
    return " ".join(parts) if parts else "e"


@dataclass(frozen=True)
class ReducedForm:
    """
    Result of handle reduction

    Attributes:
        word: Handle-free word equivalent to the input
        trivial: True iff the input represents the identity braid
        sigma_positive: For nontrivial words, whether the smallest generator
            occurs only positively
        steps: Letter operations spent
    """
    word: BraidWord
    trivial: bool
    sigma_positive: Optional[bool]
    steps: int = 0


def concat(words: Iterable[BraidWord], index: int) -> BraidWord:
    """Concatenate words on a common index"""
    letters: List[int] = []
    for word in words:
        letters.extend(word.letters)
    return BraidWord(index, tuple(letters))
