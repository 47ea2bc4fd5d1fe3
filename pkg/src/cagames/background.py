"""Doubly infinite binary backgrounds of the form  ...LLL C RRR...

A background is a left-periodic word ``left``, a finite center word
``center`` and a right-periodic word ``right``, plus an integer ``shift``.

Anchoring convention (with shift 0): position x=1 holds the first symbol
of the center; positions 1..|C| read the center; positions > |C| read the
right word cyclically from its first symbol; positions <= 0 read the left
word cyclically leftward, ending at its *last* symbol (value at 0 is
left[-1], at -1 is left[-2], wrapping). With a nonzero shift, the value at
x is the shift-0 value at x + shift.
"""

from dataclasses import dataclass

_BITS = frozenset("01")


def _check_word(name: str, word: str, min_len: int) -> None:
    if len(word) < min_len:
        raise ValueError(f"{name} must have length >= {min_len}")
    if not _BITS.issuperset(word):
        raise ValueError(f"{name} may only contain '0' and '1': {word!r}")


@dataclass(frozen=True)
class BackgroundSpec:
    left: str
    center: str = ""
    right: str = ""
    shift: int = 0

    def __post_init__(self):
        _check_word("left", self.left, 1)
        _check_word("center", self.center, 0)
        _check_word("right", self.right, 1)


def background_value(bg: BackgroundSpec, x: int) -> int:
    """Value of the doubly infinite string at position x (total over ints)."""
    p = x + bg.shift
    n_c = len(bg.center)
    if p <= 0:
        return int(bg.left[(p - 1) % len(bg.left)])
    if p <= n_c:
        return int(bg.center[p - 1])
    return int(bg.right[(p - n_c - 1) % len(bg.right)])


def background_values(bg: BackgroundSpec, x0: int, x1: int) -> list[int]:
    return [background_value(bg, x) for x in range(x0, x1 + 1)]


def step_background() -> BackgroundSpec:
    """The ...000111... background: 1 exactly at positions >= 1."""
    return BackgroundSpec(left="0", center="", right="1")


def all_zero_background() -> BackgroundSpec:
    return BackgroundSpec(left="0", center="", right="0")


def all_ones_background() -> BackgroundSpec:
    return BackgroundSpec(left="1", center="", right="1")


def nonpositive_all_zero(bg: BackgroundSpec) -> bool:
    """True iff the background is 0 at every position x <= 0.

    The left word must be all zeros; additionally, when the shift pushes
    center/right symbols into non-positive positions, those finitely many
    values are checked directly.
    """
    if "1" in bg.left:
        return False
    # positions x <= 0 with x + shift >= 1 read center or right
    x = 0
    while x + bg.shift >= 1:
        if background_value(bg, x):
            return False
        x -= 1
    return True


def rebased(bg: BackgroundSpec) -> BackgroundSpec:
    """An equivalent background with shift folded to 0.

    Only defined for shift <= 0: a positive shift drags center/right
    symbols into non-positive positions, where the shift-0 anchoring
    admits only the periodic left word. The left word is rotated to keep
    its phase at position 0 and the center is re-cut so the right word's
    phase is preserved past its end; the result agrees with ``bg`` at
    every position.
    """
    if bg.shift == 0:
        return bg
    if bg.shift > 0:
        raise ValueError("cannot rebase a positive shift to 0 in this anchoring")
    n_l = len(bg.left)
    new_left = "".join(bg.left[(j + bg.shift) % n_l] for j in range(n_l))
    hi = len(bg.center) - bg.shift
    new_center = "".join(str(background_value(bg, x)) for x in range(1, hi + 1))
    return BackgroundSpec(left=new_left, center=new_center, right=bg.right, shift=0)


def with_flipped_value(bg: BackgroundSpec, x_mut: int) -> BackgroundSpec:
    """A background equal to ``bg`` everywhere except flipped at x_mut.

    The center word is widened (phase-aligned with both periodic words) so
    a single position anywhere on the line can be expressed within the
    left/center/right form.
    """
    n_l, n_c, n_r = len(bg.left), len(bg.center), len(bg.right)
    # effective span the new center must cover, aligned to the word phases
    lo0 = min(x_mut, 1 - bg.shift)
    lo = lo0 - ((lo0 - (1 - bg.shift)) % n_l)
    hi0 = max(x_mut, n_c - bg.shift)
    hi = hi0 + ((n_c - bg.shift - hi0) % n_r)
    cells = [background_value(bg, x) for x in range(lo, hi + 1)]
    cells[x_mut - lo] ^= 1
    return BackgroundSpec(
        left=bg.left,
        center="".join(str(v) for v in cells),
        right=bg.right,
        shift=1 - lo,
    )
