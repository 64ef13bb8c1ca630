"""String rewriting with zero, for monomial quotients of free algebras.

Words are tuples of generator names.  A rule rewrites one word to either
another word or to zero (represented by ``None``), and rule sets are
completed Knuth-Bendix style under the shortlex order, with zero below
every word.  Because every right-hand side is again a single word or
zero, critical pairs never produce genuine polynomials, so this tiny
completion procedure is all that monomial-style presentations need.

Coefficients are implicitly 1: a relation u = v identifies two words,
and u = 0 kills a word.  That covers presentations whose relators are
differences of words or single words, which is the only kind this
package constructs.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import CompletionOverflow

Word = tuple[str, ...]
# Right-hand side of a rule: a word, or None meaning zero.
Rhs = Optional[Word]


def _shortlex_key(word: Word, order: dict[str, int]) -> tuple:
    return (len(word), tuple(order[g] for g in word))


def _find_lhs(word: Word, lhs: Word) -> int:
    """Index of the first occurrence of lhs inside word, or -1."""
    n, m = len(word), len(lhs)
    for i in range(n - m + 1):
        if word[i : i + m] == lhs:
            return i
    return -1


def reduce_word(word: Rhs, rules: Sequence[tuple[Word, Rhs]]) -> Rhs:
    """Rewrite word to normal form.  Zero absorbs everything."""
    if word is None:
        return None
    current = word
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            pos = _find_lhs(current, lhs)
            if pos < 0:
                continue
            if rhs is None:
                return None
            current = current[:pos] + rhs + current[pos + len(lhs) :]
            changed = True
            break
    return current


def _orient(u: Rhs, v: Rhs, order: dict[str, int]) -> Optional[tuple[Word, Rhs]]:
    """Turn the equation u = v into a rule bigger -> smaller, or None if trivial."""
    if u == v:
        return None
    if u is None:
        u, v = v, u
    if v is None:
        return (u, None)
    if _shortlex_key(u, order) < _shortlex_key(v, order):
        u, v = v, u
    return (u, v)


def _overlaps(l1: Word, l2: Word) -> Iterable[tuple[Word, int]]:
    """Proper overlaps: suffix of l1 equals prefix of l2.

    Yields (superword, offset) where l2 starts at offset inside the
    superword.  Containments are not yielded; interreduction removes
    rules whose left side contains another rule's left side.
    """
    for k in range(1, min(len(l1), len(l2))):
        if l1[len(l1) - k :] == l2[:k]:
            yield (l1 + l2[k:], len(l1) - k)


def complete(
    relations: Iterable[tuple[Word, Rhs]],
    generators: Sequence[str],
    *,
    max_rules: int = 500,
) -> list[tuple[Word, Rhs]]:
    """Knuth-Bendix completion of word/zero relations under shortlex.

    Returns a confluent, interreduced rule list sorted by left-hand side.
    Raises CompletionOverflow if the rule set grows past max_rules.
    """
    order = {g: i for i, g in enumerate(generators)}
    pending: list[tuple[Rhs, Rhs]] = [tuple(r) for r in relations]
    rules: list[tuple[Word, Rhs]] = []
    while pending:
        u, v = pending.pop()
        u = reduce_word(u, rules)
        v = reduce_word(v, rules)
        oriented = _orient(u, v, order)
        if oriented is None:
            continue
        lhs, rhs = oriented
        # Demote any rule the new one can rewrite, then install it.
        kept = []
        for l, r in rules:
            if _find_lhs(l, lhs) >= 0 or (r is not None and _find_lhs(r, lhs) >= 0):
                pending.append((l, r))
            else:
                kept.append((l, r))
        rules = kept
        rules.append((lhs, rhs))
        if len(rules) > max_rules:
            raise CompletionOverflow(f"more than {max_rules} rules")
        for l2, r2 in rules:
            for big, off in _overlaps(lhs, l2):
                # reduction via the new rule at position 0
                via1 = None if rhs is None else rhs + big[len(lhs) :]
                # reduction via l2 at position off
                via2 = None if r2 is None else big[:off] + r2 + big[off + len(l2) :]
                pending.append((via1, via2))
            for big, off in _overlaps(l2, lhs):
                via1 = None if r2 is None else r2 + big[len(l2) :]
                via2 = None if rhs is None else big[:off] + rhs + big[off + len(lhs) :]
                pending.append((via1, via2))
    rules.sort(key=lambda rule: _shortlex_key(rule[0], order))
    return rules


def irreducible_words(
    rules: Sequence[tuple[Word, Rhs]],
    generators: Sequence[str],
    *,
    max_words: int = 10_000,
) -> list[Word]:
    """All rule-irreducible words, shortlex order, empty word included.

    A word is irreducible when no rule's left side occurs in it.  If an
    entire length level is empty no longer word can be irreducible (its
    prefix would be), so enumeration stops there.  Raises
    CompletionOverflow when more than max_words are found, which is the
    practical signal that the quotient is infinite dimensional.
    """
    found: list[Word] = [()]
    level: list[Word] = [()]
    while level:
        nxt = []
        for w in level:
            for g in generators:
                cand = w + (g,)
                if all(_find_lhs(cand, lhs) < 0 for lhs, _ in rules):
                    nxt.append(cand)
                    if len(found) + len(nxt) > max_words:
                        raise CompletionOverflow(
                            f"more than {max_words} irreducible words"
                        )
        found.extend(nxt)
        level = nxt
    return found


def structure_constants(
    basis: Sequence[Word], rules: Sequence[tuple[Word, Rhs]]
) -> dict[tuple[int, int], int]:
    """Multiplication table of basis words: (i, j) -> k, zero omitted.

    Every pairwise product must reduce to a basis word or to zero;
    anything else means the basis is not closed and raises ValueError.
    """
    position = {w: k for k, w in enumerate(basis)}
    table: dict[tuple[int, int], int] = {}
    for i, wi in enumerate(basis):
        for j, wj in enumerate(basis):
            prod = reduce_word(wi + wj, rules)
            if prod is None:
                continue
            if prod not in position:
                raise ValueError(f"product {prod!r} is not a basis word")
            table[(i, j)] = position[prod]
    return table
