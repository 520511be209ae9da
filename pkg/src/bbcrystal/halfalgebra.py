"""The negative half U_q^-(g) as a quotient of the free algebra on b_{il}.

Elements of the free algebra are finite Q(q)-combinations of words in the
letters b_{il}; U_q^-(g)_{-alpha} is materialized per weight as the span of
weight-alpha words modulo the radical of the Kashiwara bilinear form, which is
defined by (1, 1) = 1 and the adjunction (b_{il} S, T) = (S, e'_{il} T).  The
defining relations are not imposed; check_relations certifies that they lie in
the radical.

Words are tuples of (i, l) letters.  The deterministic word order at a fixed
weight is lexicographic on the letter sequence with (i, l) < (j, k) iff i < j
or (i = j and l < k); representative words for each quotient are chosen
greedily in that order so that the representative Gram matrix stays
nonsingular.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

from .cartan import BCDatum
from .linalg import invert, mat_mul_dims
from .scalars import ONE, ZERO, RatFunc, qfact

Word = tuple  # tuple of (i, l) pairs


def word_weight(word, n):
    off = [0] * n
    for i, l in word:
        off[i] += l
    return tuple(off)


class FreeElt:
    """A finite formal Q(q)-combination of words (an NCVec)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @staticmethod
    def unit():
        return FreeElt({(): ONE})

    @staticmethod
    def word(w, coeff=ONE):
        return FreeElt({tuple(w): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return FreeElt(out)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, c):
        if not c:
            return FreeElt()
        return FreeElt({w: c * x for w, x in self.terms.items()})

    def prepend(self, letters, coeff=ONE):
        """Left-multiply by the word b_{letters} (and an optional coefficient)."""
        letters = tuple(letters)
        return FreeElt({letters + w: coeff * c for w, c in self.terms.items()})

    def bar(self):
        return FreeElt({w: c.bar() for w, c in self.terms.items()})

    def weight(self, n):
        """The common weight offset of all words; raises if inhomogeneous."""
        wts = {word_weight(w, n) for w in self.terms}
        if len(wts) > 1:
            raise ValueError("inhomogeneous element")
        return wts.pop() if wts else None

    def __eq__(self, other):
        return isinstance(other, FreeElt) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "FreeElt(0)"
        bits = []
        for w in sorted(self.terms):
            label = "*".join(f"b[{i},{l}]" for i, l in w) if w else "1"
            bits.append(f"({self.terms[w]})*{label}")
        return " + ".join(bits)

    def to_json(self):
        return [
            {"word": [[i, l] for i, l in w], "coeff": self.terms[w].render()}
            for w in sorted(self.terms)
        ]


def bar_nc(v: FreeElt) -> FreeElt:
    """Bar involution: words fixed, coefficients barred."""
    return v.bar()


def divided_power(datum: BCDatum, i, n) -> FreeElt:
    """b_i^(n) = b_i^n / [n]_i! for a real index."""
    if not datum.is_real(i):
        raise ValueError("divided powers require a real index")
    if n < 0:
        raise ValueError("n must be >= 0")
    return FreeElt.word(((i, 1),) * n, ONE / qfact(n, datum.D[i]))


def monomial(datum: BCDatum, i, comp) -> FreeElt:
    """b_{i,c} = b_{i c_1} ... b_{i c_r}; partitions enforced for isotropic i."""
    comp = tuple(int(c) for c in comp)
    if any(c < 1 for c in comp):
        raise ValueError("composition parts must be positive")
    if datum.is_isotropic(i) and any(a < b for a, b in zip(comp, comp[1:])):
        raise ValueError("isotropic compositions must be weakly decreasing partitions")
    if datum.is_real(i) and any(c != 1 for c in comp):
        raise ValueError("real letters carry l = 1; use divided_power instead")
    return FreeElt.word(tuple((i, c) for c in comp))


# ---------------------------------------------------------------------------
# e'-type operators and the Kashiwara form
# ---------------------------------------------------------------------------

_EPRIME_CACHES: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def _eprime_word(datum, il, word, sign):
    """e'_{il} (sign=-1) or e''_{il} (sign=+1) applied to a single word."""
    caches = _EPRIME_CACHES.setdefault(datum, {})
    key = (il, word, sign)
    hit = caches.get(key)
    if hit is not None:
        return hit
    i, l = il
    if not word:
        out = FreeElt()
    else:
        (j, k), rest = word[0], word[1:]
        out = FreeElt()
        if i == j and k == l:
            out = out + FreeElt.word(rest)
        tail = _eprime_word(datum, il, rest, sign)
        if tail:
            factor = RatFunc.q_power(sign * k * l * datum.A[i][j] * datum.D[i])
            out = out + tail.prepend(((j, k),), factor)
    caches[key] = out
    return out


def eprime(datum: BCDatum, il, v: FreeElt) -> FreeElt:
    """e'_{il} v, by the rule e'_{il} b_{jk} = delta + q_i^{-kl a_ij} b_{jk} e'_{il}."""
    out = FreeElt()
    for w, c in v.terms.items():
        out = out + _eprime_word(datum, tuple(il), w, -1).scale(c)
    return out


def edprime(datum: BCDatum, il, v: FreeElt) -> FreeElt:
    """e''_{il} v, with the opposite q-power q_i^{+kl a_ij}."""
    out = FreeElt()
    for w, c in v.terms.items():
        out = out + _eprime_word(datum, tuple(il), w, +1).scale(c)
    return out


_FORM_CACHES: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def _form_words(datum, u, v):
    cache = _FORM_CACHES.setdefault(datum, {})
    hit = cache.get((u, v))
    if hit is not None:
        return hit
    if not u:
        out = ONE if not v else ZERO
    elif not v:
        out = ZERO
    else:
        il = u[0]
        peeled = _eprime_word(datum, il, v, -1)
        out = ZERO
        for w, c in peeled.terms.items():
            f = _form_words(datum, u[1:], w)
            if f:
                out = out + c * f
    cache[(u, v)] = out
    return out


def kashiwara_form(datum: BCDatum, u: FreeElt, v: FreeElt) -> RatFunc:
    """(u, v)_K, the nondegenerate symmetric form with (b_{il} S, T) = (S, e'_{il} T)."""
    n = datum.n
    out = ZERO
    for wu, cu in u.terms.items():
        for wv, cv in v.terms.items():
            if word_weight(wu, n) != word_weight(wv, n):
                continue
            f = _form_words(datum, wu, wv)
            if f:
                out = out + cu * cv * f
    return out


# ---------------------------------------------------------------------------
# per-weight quotients
# ---------------------------------------------------------------------------

@dataclass
class QuotientBasis:
    """A weight space of the quotient: representative words, Gram, projection."""

    alpha: tuple
    words: list          # all words of this weight, in the deterministic order
    rep_indices: list    # indices into words of the chosen representatives
    gram: list           # form values on representatives (dim x dim)
    gram_inv: list
    proj: list           # dim x len(words): coordinates of each word mod radical
    word_index: dict

    @property
    def dim(self):
        return len(self.rep_indices)

    @property
    def rep_words(self):
        return [self.words[j] for j in self.rep_indices]


def words_of_weight(datum: BCDatum, offset):
    """All words of the given weight offset, lexicographically ordered."""
    out = []

    def extend(prefix, remaining):
        if all(k == 0 for k in remaining):
            out.append(tuple(prefix))
            return
        for i in range(datum.n):
            if remaining[i] == 0:
                continue
            lmax = 1 if datum.is_real(i) else remaining[i]
            for l in range(1, lmax + 1):
                rem = list(remaining)
                rem[i] -= l
                prefix.append((i, l))
                extend(prefix, rem)
                prefix.pop()

    extend([], list(offset))
    return out


class _GramTable:
    """On-demand symmetric form values over a fixed word list."""

    def __init__(self, datum, words, form_words):
        self.datum = datum
        self.words = words
        self.form_words = form_words
        self.cache = {}

    def __call__(self, a, b):
        key = (a, b) if a <= b else (b, a)
        hit = self.cache.get(key)
        if hit is None:
            hit = self.form_words(self.words[key[0]], self.words[key[1]])
            self.cache[key] = hit
        return hit


def _greedy_representatives(gram: _GramTable, m):
    """Greedily grow an index set with nonsingular principal Gram minor.

    Extends one index at a time; when the Schur complement has an all-zero
    diagonal it extends by a pair (hyperbolic case).  By the symmetric-rank
    argument this reaches the full rank of the Gram matrix.
    """
    chosen = []
    minv = []  # inverse of gram on chosen

    def schur_scalar(t, u):
        gt = [gram(s, t) for s in chosen]
        gu = [gram(s, u) for s in chosen]
        corr = ZERO
        for a in range(len(chosen)):
            row = minv[a]
            for b in range(len(chosen)):
                if row[b] and gt[a] and gu[b]:
                    corr = corr + gt[a] * row[b] * gu[b]
        return gram(t, u) - corr

    remaining = list(range(m))
    while True:
        extended = False
        for t in remaining:
            if schur_scalar(t, t):
                chosen.append(t)
                minv[:] = invert([[gram(a, b) for b in chosen] for a in chosen])
                remaining.remove(t)
                extended = True
                break
        if extended:
            continue
        found = None
        for x in range(len(remaining)):
            for y in range(x + 1, len(remaining)):
                if schur_scalar(remaining[x], remaining[y]):
                    found = (remaining[x], remaining[y])
                    break
            if found:
                break
        if not found:
            return chosen, minv
        t, u = found
        chosen.extend([t, u])
        minv[:] = invert([[gram(a, b) for b in chosen] for a in chosen])
        remaining.remove(t)
        remaining.remove(u)


class QuotientSpace:
    """Shared machinery for the U^- and V(lambda) weight-space quotients.

    Subclasses provide the bilinear form on words and the raising operators;
    this class owns word enumeration, representative selection, projections
    and the letter (left multiplication) matrices.
    """

    def __init__(self, datum: BCDatum, height):
        self.datum = datum
        self.height = height
        self._bases = {}
        self._letter_mats = {}
        self._raising_mats = {}

    # subclass hooks ------------------------------------------------------

    def _form_words(self, u, v):
        raise NotImplementedError

    def _raising_word(self, il, word) -> FreeElt:
        raise NotImplementedError

    def pairing(self, i, offset):
        raise NotImplementedError

    # core ------------------------------------------------------------------

    def weights(self):
        """All offsets of height <= H in deterministic (graded, lex) order."""
        out = []

        def rec(prefix, budget):
            if len(prefix) == self.datum.n:
                out.append(tuple(prefix))
                return
            for k in range(budget + 1):
                rec(prefix + [k], budget - k)

        rec([], self.height)
        out.sort(key=lambda t: (sum(t), t))
        return out

    def basis(self, offset) -> QuotientBasis:
        offset = tuple(offset)
        qb = self._bases.get(offset)
        if qb is not None:
            return qb
        words = words_of_weight(self.datum, offset)
        gram = _GramTable(self.datum, words, self._form_words)
        reps, minv = _greedy_representatives(gram, len(words))
        proj = []
        if reps:
            gs = [[gram(r, w) for w in range(len(words))] for r in reps]
            proj = [
                [
                    sum((minv[a][b] * gs[b][w] for b in range(len(reps))), ZERO)
                    for w in range(len(words))
                ]
                for a in range(len(reps))
            ]
        qb = QuotientBasis(
            alpha=offset,
            words=words,
            rep_indices=reps,
            gram=[[gram(a, b) for b in reps] for a in reps],
            gram_inv=minv if reps else [],
            proj=proj,
            word_index={w: k for k, w in enumerate(words)},
        )
        self._bases[offset] = qb
        return qb

    def dim(self, offset):
        return self.basis(offset).dim

    def coords(self, v: FreeElt, offset=None):
        """Coordinates of a homogeneous element in the representative basis."""
        if offset is None:
            offset = v.weight(self.datum.n)
            if offset is None:
                return []
        qb = self.basis(offset)
        out = [ZERO] * qb.dim
        if not qb.dim:
            return out
        for w, c in v.terms.items():
            k = qb.word_index[w]
            for a in range(qb.dim):
                if qb.proj[a][k]:
                    out[a] = out[a] + c * qb.proj[a][k]
        return out

    def lift(self, vec, offset) -> FreeElt:
        """The canonical representative-word combination with given coordinates."""
        qb = self.basis(offset)
        out = FreeElt()
        for a, c in enumerate(vec):
            if c:
                out = out + FreeElt.word(qb.words[qb.rep_indices[a]], c)
        return out

    def in_radical(self, v: FreeElt, offset=None):
        return all(not c for c in self.coords(v, offset))

    def letter_matrix(self, offset, il):
        """Left multiplication by b_{il}: coords at offset -> offset + l e_i."""
        offset = tuple(offset)
        il = tuple(il)
        key = (offset, il)
        m = self._letter_mats.get(key)
        if m is not None:
            return m
        i, l = il
        src = self.basis(offset)
        tgt_off = list(offset)
        tgt_off[i] += l
        tgt_off = tuple(tgt_off)
        cols = [
            self.coords(FreeElt.word(w).prepend(((i, l),)), tgt_off)
            for w in src.rep_words
        ]
        tgt_dim = self.dim(tgt_off)
        m = [[cols[j][a] for j in range(src.dim)] for a in range(tgt_dim)]
        self._letter_mats[key] = m
        return m

    def word_matrix(self, offset, i, comp):
        """Left multiplication by b_{i,c}: composed letter matrices, rightmost first."""
        off = tuple(offset)
        src_dim = self.dim(off)
        cur = _identity_like(src_dim)
        cur_dim = src_dim
        for c in reversed(comp):
            m = self.letter_matrix(off, (i, c))
            off = tuple(off[j] + (c if j == i else 0) for j in range(self.datum.n))
            nxt_dim = self.dim(off)
            cur = mat_mul_dims(m, cur, nxt_dim, cur_dim, src_dim, ZERO)
            cur_dim = nxt_dim
        return cur, off

    def raising_matrix(self, offset, il):
        """The raising operator at offset: coords at offset -> offset - l e_i.

        Returns None when the target offset would leave the positive cone.
        """
        offset = tuple(offset)
        il = tuple(il)
        i, l = il
        if offset[i] < l:
            return None
        key = (offset, il)
        m = self._raising_mats.get(key)
        if m is not None:
            return m
        src = self.basis(offset)
        tgt_off = list(offset)
        tgt_off[i] -= l
        tgt_off = tuple(tgt_off)
        tgt_dim = self.dim(tgt_off)
        cols = []
        for w in src.rep_words:
            img = self._raising_word(il, w)
            cols.append(self.coords(img, tgt_off) if img else [ZERO] * tgt_dim)
        m = [[cols[j][a] for j in range(src.dim)] for a in range(tgt_dim)]
        self._raising_mats[key] = m
        return m

    def gram_matrix(self, offset):
        return self.basis(offset).gram


def _identity_like(n):
    return [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]


class UminusSpace(QuotientSpace):
    """U_q^-(g) truncated at root height H, weight space by weight space."""

    kind = "uminus"

    def __init__(self, datum, height):
        super().__init__(datum, height)
        self.lambda_dom = (0,) * datum.n

    def _form_words(self, u, v):
        return _form_words(self.datum, u, v)

    def _raising_word(self, il, word):
        return _eprime_word(self.datum, tuple(il), word, -1)

    def pairing(self, i, offset):
        return -sum(k * self.datum.A[i][j] for j, k in enumerate(offset))

    def unit_vector(self):
        return self.coords(FreeElt.unit(), (0,) * self.datum.n)


def quotient_basis(datum: BCDatum, alpha, height=None) -> QuotientBasis:
    """U_q^-(g)_{-alpha} as representatives modulo the radical of ( , )_K."""
    h = height if height is not None else sum(alpha)
    return UminusSpace(datum, h).basis(tuple(alpha))


# ---------------------------------------------------------------------------
# defining relations lie in the radical
# ---------------------------------------------------------------------------

@dataclass
class RelationsReport:
    checked: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def serre_element(datum: BCDatum, i, jl) -> FreeElt:
    """sum_{r+s=1-l a_ij} (-1)^r b_i^(r) b_{jl} b_i^(s) for real i, (j,l) != (i,1)."""
    j, l = jl
    top = 1 - l * datum.A[i][j]
    s_i = datum.D[i]
    out = FreeElt()
    for r in range(top + 1):
        s = top - r
        word = ((i, 1),) * r + ((j, l),) + ((i, 1),) * s
        coeff = ONE / (qfact(r, s_i) * qfact(s, s_i))
        out = out + FreeElt.word(word, -coeff if r % 2 else coeff)
    return out


def commutation_element(datum: BCDatum, il, jk) -> FreeElt:
    """b_{il} b_{jk} - b_{jk} b_{il} for a_ij = 0."""
    il, jk = tuple(il), tuple(jk)
    return FreeElt.word((il, jk)) - FreeElt.word((jk, il))


def check_relations(datum: BCDatum, height, space: UminusSpace | None = None) -> RelationsReport:
    """Certify every applicable defining relation of weight height <= H is in the radical."""
    space = space or UminusSpace(datum, height)
    checked = 0
    failures = []
    labels = datum.iinf_up_to(height)
    for i in range(datum.n):
        if not datum.is_real(i):
            continue
        for jl in labels:
            j, l = jl
            if (j, l) == (i, 1):
                continue
            wt_height = l + 1 - l * datum.A[i][j]
            if wt_height > height:
                continue
            elt = serre_element(datum, i, jl)
            checked += 1
            if not space.in_radical(elt):
                failures.append(("serre", i, jl))
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            (i, l), (j, k) = labels[a], labels[b]
            if datum.A[i][j] != 0:
                continue
            if l + k > height:
                continue
            elt = commutation_element(datum, (i, l), (j, k))
            checked += 1
            if not space.in_radical(elt):
                failures.append(("comm", (i, l), (j, k)))
    return RelationsReport(checked, failures)
