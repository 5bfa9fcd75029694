"""Column words over {0,1,2,3} and the admissibility rules between them.

A column of an m x n grid, together with a candidate vertex set S, is encoded
as a word of length m: label 0 marks a vertex of S, labels 1/2 mark vertices
outside S that already have one/two neighbors in S among their left and
same-column neighbors, and label 3 marks a vertex whose only dominator must
sit in the column to its right.  Position 1 is the top row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import MalformedWordError, ResourceCapError

ALPHABET = "0123"

# Default ceiling on the number of suitable words materialized for one width.
DEFAULT_WORD_CAP = 2_000_000


def _validate(word: str) -> None:
    if len(word) < 2:
        raise MalformedWordError(f"column word {word!r} has fewer than 2 labels")
    for ch in word:
        if ch not in ALPHABET:
            raise MalformedWordError(f"column word {word!r} has label {ch!r} outside 0..3")


def zeros(word: str) -> int:
    """Number of set members (label 0) in a column word."""
    return word.count("0")


def is_suitable(word: str) -> bool:
    """Whether a word can appear as a column of a valid labeling.

    Forbidden outright: 00 (independence), 22, 33, 03, 30, 010.  Context
    rules: a 11 pair needs a 0 on at least one side, 32 needs a 0 right
    after the 2, 23 needs a 0 right before the 2, and 21/12 need a 0 on
    both sides.  A required neighbor that falls off the word boundary
    fails the rule.
    """
    _validate(word)
    m = len(word)
    for i in range(m - 1):
        a, b = word[i], word[i + 1]
        if a == b and a != "1":
            return False
        if (a == "0" and b == "3") or (a == "3" and b == "0"):
            return False
    for i in range(m - 2):
        if word[i] == "0" and word[i + 1] == "1" and word[i + 2] == "0":
            return False
    for i in range(m - 1):
        pair = word[i] + word[i + 1]
        before = word[i - 1] if i > 0 else ""
        after = word[i + 2] if i + 2 < m else ""
        if pair == "11" and before != "0" and after != "0":
            return False
        if pair == "32" and after != "0":
            return False
        if pair == "23" and before != "0":
            return False
        if pair in ("21", "12") and not (before == "0" and after == "0"):
            return False
    return True


def is_initial(word: str) -> bool:
    """Whether a suitable word may be the first column.

    With no column to the left, every 2 must sit between two 0s and every 1
    must have a 0 on exactly one side.
    """
    _validate(word)
    m = len(word)
    for i, ch in enumerate(word):
        up0 = i > 0 and word[i - 1] == "0"
        dn0 = i + 1 < m and word[i + 1] == "0"
        if ch == "2" and not (up0 and dn0):
            return False
        if ch == "1" and up0 + dn0 != 1:
            return False
    return True


def is_final(word: str) -> bool:
    """Whether a suitable word may be the last column (no label 3)."""
    _validate(word)
    return "3" not in word


def can_follow(p: str, q: str) -> bool:
    """Whether column word p may appear immediately to the right of q.

    Case analysis on each q[i] (both words assumed suitable):

    * q[i] = 0: p[i] is dominated from the left, so p[i] = 1 with no
      vertical 0 next to it, or p[i] = 2 with exactly one vertical 0.
    * q[i] = 1: p[i] may be 0 or 3, or 1 with exactly one vertical 0,
      or 2 with vertical 0s on both sides.
    * q[i] = 2: p[i] = 3, or (away from the boundary) 1 with exactly one
      vertical 0; p[i] = 0 would give q's vertex a third dominator.
    * q[i] = 3: p[i] = 0, the 3 is dominated only from the right.
    """
    _validate(p)
    _validate(q)
    if len(p) != len(q):
        raise MalformedWordError(f"length mismatch: {p!r} vs {q!r}")
    m = len(p)
    for i in range(m):
        pi = p[i]
        qi = q[i]
        up0 = i > 0 and p[i - 1] == "0"
        dn0 = i + 1 < m and p[i + 1] == "0"
        if qi == "3":
            if pi != "0":
                return False
        elif qi == "0":
            if pi == "1":
                if up0 or dn0:
                    return False
            elif pi == "2":
                if up0 + dn0 != 1:
                    return False
            else:
                return False
        elif qi == "1":
            if pi == "1":
                if up0 + dn0 != 1:
                    return False
            elif pi == "2":
                if not (up0 and dn0):
                    return False
            # 0 and 3 are always admissible after a 1
        else:  # qi == "2"
            if pi == "1":
                if i == 0 or i == m - 1 or up0 + dn0 != 1:
                    return False
            elif pi != "3":
                return False
    return True


@dataclass(frozen=True, eq=False)
class WordTable:
    """All suitable words of one length, lexicographically ordered."""

    m: int
    words: tuple[str, ...]
    index: Mapping[str, int]

    @property
    def k(self) -> int:
        return len(self.words)

    def id_of(self, word: str) -> int:
        return self.index[word]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.index


def _prefix_ok(buf: list[str], t: int, m: int) -> bool:
    """Prune check after placing buf[t-1]; complete once t == m."""
    c = buf[t - 1]
    if t >= 2:
        b = buf[t - 2]
        if b == c and c != "1":
            return False
        if (b == "0" and c == "3") or (b == "3" and c == "0"):
            return False
        pair = b + c
        # rules whose left context is already fixed
        if pair == "23" and (t < 3 or buf[t - 3] != "0"):
            return False
        if pair in ("21", "12") and (t < 3 or buf[t - 3] != "0"):
            return False
    if t >= 3:
        a, b = buf[t - 3], buf[t - 2]
        if a == "0" and b == "1" and c == "0":
            return False
        # window of the pair (t-3, t-2) is complete now
        if a == "1" and b == "1" and c != "0" and (t < 4 or buf[t - 4] != "0"):
            return False
        if a == "3" and b == "2" and c != "0":
            return False
        if (a, b) in (("2", "1"), ("1", "2")) and c != "0":
            return False
    if t == m:
        b = buf[t - 2]
        if b == "1" and c == "1" and (t < 3 or buf[t - 3] != "0"):
            return False
        if b == "3" and c == "2":
            return False
        if (b, c) in (("2", "1"), ("1", "2")):
            return False
    return True


def enumerate_suitable(m: int, max_words: int = DEFAULT_WORD_CAP) -> WordTable:
    """Materialize every suitable word of length m, lexicographically.

    Raises ResourceCapError once more than max_words words are found.
    """
    if m < 2:
        raise MalformedWordError(f"word length must be at least 2, got {m}")
    found: list[str] = []
    buf: list[str] = []

    def extend() -> None:
        t = len(buf)
        if t == m:
            word = "".join(buf)
            if is_suitable(word):
                found.append(word)
                if len(found) > max_words:
                    raise ResourceCapError(
                        f"more than {max_words} suitable words of length {m}"
                    )
            return
        for ch in ALPHABET:
            buf.append(ch)
            if _prefix_ok(buf, t + 1, m):
                extend()
            buf.pop()

    extend()
    return WordTable(m=m, words=tuple(found), index={w: i for i, w in enumerate(found)})


def _follow_step(qi: str, ch: str, buf: list[str], i: int, m: int):
    """One position of the can-follow cases during successor generation.

    Returns (ok, obligation) where obligation constrains the next label:
    True means it must be 0, False means it must not be 0, None is free.
    """
    up0 = i > 0 and buf[i - 1] == "0"
    last = i == m - 1
    if qi == "3":
        return ch == "0", None
    if qi == "0":
        if ch == "1":
            return not up0, False if not last else None
        if ch == "2":
            if up0:
                return True, False if not last else None
            return not last, True
        return False, None
    if qi == "1":
        if ch in ("0", "3"):
            return True, None
        if ch == "1":
            if up0:
                return True, False if not last else None
            return not last, True
        if ch == "2":
            if not up0 or last:
                return False, None
            return True, True
    else:  # qi == "2"
        if ch == "3":
            return True, None
        if ch == "1" and 0 < i < m - 1:
            if up0:
                return True, False
            return True, True
        return False, None
    return False, None


def successors(q: str) -> list[str]:
    """All suitable words that can follow q, in lexicographic order.

    Output-sensitive generation; equivalent to filtering a full word table
    through can_follow but without touching inadmissible words.
    """
    _validate(q)
    m = len(q)
    out: list[str] = []
    buf: list[str] = []

    def place(i: int, obligation) -> None:
        if i == m:
            out.append("".join(buf))
            return
        qi = q[i]
        for ch in ALPHABET:
            if obligation is True and ch != "0":
                continue
            if obligation is False and ch == "0":
                continue
            buf.append(ch)
            if _prefix_ok(buf, i + 1, m):
                ok, nxt = _follow_step(qi, ch, buf, i, m)
                if ok:
                    place(i + 1, nxt)
            buf.pop()

    place(0, None)
    return out
