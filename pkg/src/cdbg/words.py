"""t-constrained words over the alphabet [d] = {1, ..., d}.

A word is a tuple of 1-based symbols. It is t-constrained when any two equal
symbols sit at least t positions apart, i.e. every window of t consecutive
symbols is repetition-free.

Counting, enumeration and ranking all rest on one observation: the number of
admissible symbols at position j (1-based) is ``d - min(j - 1, t - 1)``
whatever the prefix is, because the previous ``min(j - 1, t - 1)`` symbols are
pairwise distinct. Lexicographic rank is therefore a mixed-radix number whose
digits are positions among the admissible symbols.
"""

from __future__ import annotations

from math import factorial
from typing import Iterator, Sequence

Word = tuple[int, ...]

DEFAULT_MAX_WORDS = 5_000_000


class ParameterError(ValueError):
    """Parameters outside the domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A requested object would exceed the configured size budget."""


def check_params(d: int, t: int, n: int) -> None:
    if d < 1 or n < 1:
        raise ParameterError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    if not 1 <= t <= min(d, n):
        raise ParameterError(f"need 1 <= t <= min(d, n) = {min(d, n)}, got t={t}")


def is_t_constrained(w: Sequence[int], t: int) -> bool:
    if t < 1:
        raise ParameterError(f"t must be positive, got {t}")
    last_seen: dict[int, int] = {}
    for pos, s in enumerate(w):
        prev = last_seen.get(s)
        if prev is not None and pos - prev < t:
            return False
        last_seen[s] = pos
    return True


def radices(d: int, t: int, n: int) -> list[int]:
    """Number of admissible symbols at each position."""
    return [d - min(j, t - 1) for j in range(n)]


def count_words(d: int, t: int, n: int) -> int:
    check_params(d, t, n)
    return factorial(d) // factorial(d - t) * (d - t + 1) ** (n - t)


def _admissible(prefix: Sequence[int], d: int, t: int) -> list[int]:
    window = set(prefix[max(0, len(prefix) - t + 1):])
    return [s for s in range(1, d + 1) if s not in window]


def iter_words(d: int, t: int, n: int) -> Iterator[Word]:
    """Yield every t-constrained word in increasing lexicographic order."""
    check_params(d, t, n)
    word: list[int] = []

    def extend() -> Iterator[Word]:
        if len(word) == n:
            yield tuple(word)
            return
        for s in _admissible(word, d, t):
            word.append(s)
            yield from extend()
            word.pop()

    yield from extend()


def enumerate_words(d: int, t: int, n: int, max_words: int = DEFAULT_MAX_WORDS) -> list[Word]:
    total = count_words(d, t, n)
    if total > max_words:
        raise ResourceLimitError(f"{total} words exceeds the limit of {max_words}")
    return list(iter_words(d, t, n))


def rank(w: Sequence[int], d: int, t: int) -> int:
    """0-based position of ``w`` among the t-constrained words of its length."""
    n = len(w)
    check_params(d, t, n)
    if any(not 1 <= s <= d for s in w) or not is_t_constrained(w, t):
        raise ParameterError(f"{serialize(w)} is not a {t}-constrained word over [{d}]")
    r = 0
    for j, (s, radix) in enumerate(zip(w, radices(d, t, n))):
        window = w[max(0, j - t + 1):j]
        digit = s - 1 - sum(1 for x in window if x < s)
        r = r * radix + digit
    return r


def unrank(i: int, d: int, t: int, n: int) -> Word:
    total = count_words(d, t, n)
    if not 0 <= i < total:
        raise ParameterError(f"index {i} out of range [0, {total})")
    digits = []
    for radix in reversed(radices(d, t, n)):
        i, digit = divmod(i, radix)
        digits.append(digit)
    word: list[int] = []
    for digit in reversed(digits):
        word.append(_admissible(word, d, t)[digit])
    return tuple(word)


def serialize(w: Sequence[int]) -> str:
    return ",".join(str(s) for s in w)


def parse(text: str) -> Word:
    text = text.strip()
    if not text:
        raise ParameterError("empty word")
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParameterError(f"cannot parse word {text!r}") from exc
