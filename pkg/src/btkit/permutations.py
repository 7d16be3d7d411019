"""The symmetric group S_n on {1..n}.

Composition is function composition: ``(v * w)(m) = v(w(m))``, so in a
product the rightmost factor acts first.  A word [i1, ..., ik] denotes the
product s_{i1} ... s_{ik} under that convention (s_{ik} applied first).
This is the convention that makes conjugation of tie elements by braid
elements come out as the natural action on set partitions.
"""

import itertools
import random


class Permutation:
    """A permutation in one-line notation ``images = (w(1), ..., w(n))``."""

    __slots__ = ("n", "images", "_word", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a bijection of 1..n: %r" % (images,))
        self.n = len(images)
        self.images = images
        self._word = None
        self._hash = None

    @staticmethod
    def identity(n):
        return Permutation(range(1, n + 1))

    @staticmethod
    def transposition(i, n):
        """The adjacent transposition s_i swapping i and i+1."""
        if not 1 <= i <= n - 1:
            raise IndexError("generator index %d out of range for n=%d" % (i, n))
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(images)

    def apply(self, m):
        return self.images[m - 1]

    def __mul__(self, other):
        """Function composition; ``other`` acts first."""
        if self.n != other.n:
            raise ValueError("mismatched n: %d vs %d" % (self.n, other.n))
        img = self.images
        return Permutation(tuple(img[m - 1] for m in other.images))

    def inverse(self):
        inv = [0] * self.n
        for m, im in enumerate(self.images, start=1):
            inv[im - 1] = m
        return Permutation(inv)

    def is_identity(self):
        return self.images == tuple(range(1, self.n + 1))

    def length(self):
        """Coxeter length = number of inversions."""
        img = self.images
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n)
                   if img[a] > img[b])

    def has_right_descent(self, i):
        """True iff length(w * s_i) < length(w)."""
        return self.images[i - 1] > self.images[i]

    def has_left_descent(self, i):
        """True iff length(s_i * w) < length(w)."""
        return self.images.index(i) > self.images.index(i + 1)

    def right_mul_gen(self, i):
        """w * s_i (swaps the entries at positions i, i+1)."""
        img = list(self.images)
        img[i - 1], img[i] = img[i], img[i - 1]
        return intern_perm(img)

    def left_mul_gen(self, i):
        """s_i * w (swaps the values i, i+1)."""
        swap = {i: i + 1, i + 1: i}
        return intern_perm(tuple(swap.get(m, m) for m in self.images))

    def reduced_word(self):
        """Canonical reduced word: repeatedly strip the smallest right
        descent; the letters come out right-to-left.  Reading the word left
        to right and applying the rightmost letter first recovers w."""
        if self._word is None:
            img = list(self.images)
            rev = []
            while True:
                for i in range(len(img) - 1):
                    if img[i] > img[i + 1]:
                        img[i], img[i + 1] = img[i + 1], img[i]
                        rev.append(i + 1)
                        break
                else:
                    break
            self._word = tuple(reversed(rev))
        return self._word

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __lt__(self, other):
        return self.images < other.images

    def __str__(self):
        return "[%s]" % ",".join(str(m) for m in self.images)

    def __repr__(self):
        return "Permutation(%s)" % (self.images,)


# interning cache shared by the multiplication engine; instances are
# immutable and reuse their cached hash and reduced word
_INTERN = {}


def intern_perm(images):
    images = tuple(images)
    w = _INTERN.get(images)
    if w is None:
        w = _INTERN[images] = Permutation(images)
    return w


def from_word(word, n):
    """Product s_{i1} ... s_{ik} of adjacent transpositions (the rightmost
    letter acts first, so letters fold in by right multiplication)."""
    w = Permutation.identity(n)
    for i in word:
        w = w.right_mul_gen(i)
    return w


def enumerate_permutations(n):
    """All of S_n in lexicographic one-line order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def parse_permutation(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError("expected one-line notation like [2,1,3]")
    return Permutation(int(p) for p in text[1:-1].split(","))


def word_text(word):
    """Dotted text form of a generator word, e.g. "s1.s2.s1" ("e" if empty)."""
    if not word:
        return "e"
    return ".".join("s%d" % i for i in word)


def parse_word(text):
    text = text.strip()
    if text == "e":
        return ()
    letters = []
    for part in text.split("."):
        if not part.startswith("s"):
            raise ValueError("expected letters like s1, got %r" % part)
        letters.append(int(part[1:]))
    return tuple(letters)


# ---------------------------------------------------------------------------
# braid moves on reduced words (for well-definedness checks)
# ---------------------------------------------------------------------------

def braid_move_sites(word):
    """All (position, replacement) rewrites of the word by a single
    commutation or braid move; every rewrite is again a reduced word of the
    same permutation."""
    out = []
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if abs(a - b) > 1:
            out.append((k, (b, a)))
    for k in range(len(word) - 2):
        a, b, c = word[k], word[k + 1], word[k + 2]
        if a == c and abs(a - b) == 1:
            out.append((k, (b, a, b)))
    return out


def random_braid_walk(word, steps, rng=None):
    """Random walk on the reduced-word graph of a fixed permutation."""
    rng = rng or random.Random(0)
    word = tuple(word)
    for _ in range(steps):
        sites = braid_move_sites(word)
        if not sites:
            break
        k, repl = rng.choice(sites)
        word = word[:k] + repl + word[k + len(repl):]
    return word
