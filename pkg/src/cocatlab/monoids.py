"""Finite monoids, words in coproducts of monoids, and the obstruction
searches for comultiplications and nontrivial endomorphism 2-cells.

A morphism out of a one-object category with endomorphism monoid A into the
coproduct A + A (in Cat, taken over a shared unit) is a word in two tagged
copies of A.  The searches below enumerate such words in normal form and test
the counit and interchange equations directly on normal forms.
"""

import itertools

from .errors import MixedMonoids, SearchSpaceTooLarge, UnknownName, guard


class FinMonoid:
    """A finite monoid with explicit multiplication table."""

    def __init__(self, elements, unit, table):
        self.elements = tuple(elements)
        assert len(set(self.elements)) == len(self.elements)
        self.unit = unit
        assert unit in self.elements
        self.table = dict(table)
        for a in self.elements:
            for b in self.elements:
                assert (a, b) in self.table, "missing product %r*%r" % (a, b)
                assert self.table[(a, b)] in self.elements
        for a in self.elements:
            assert self.mul(self.unit, a) == a and self.mul(a, self.unit) == a, \
                "unit law fails at %r" % (a,)
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    assert self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)), \
                        "associativity fails at (%r,%r,%r)" % (a, b, c)

    def mul(self, a, b):
        return self.table[(a, b)]

    def prod(self, xs):
        out = self.unit
        for x in xs:
            out = self.mul(out, x)
        return out

    def nontrivial(self):
        return [a for a in self.elements if a != self.unit]

    def __eq__(self, other):
        return (isinstance(other, FinMonoid) and self.elements == other.elements
                and self.unit == other.unit and self.table == other.table)

    def __hash__(self):
        return hash((self.elements, self.unit,
                     tuple(sorted(self.table.items()))))

    def __repr__(self):
        return "FinMonoid(%d elements)" % len(self.elements)


def cyclic_monoid(n):
    els = tuple(range(n))
    table = {(a, b): (a + b) % n for a in els for b in els}
    return FinMonoid(els, 0, table)


def trivial_monoid():
    return cyclic_monoid(1)


def product_monoid(m, n):
    els = tuple(sorted((a, b) for a in m.elements for b in n.elements))
    table = {((a, b), (c, d)): (m.mul(a, c), n.mul(b, d))
             for a, b in els for c, d in els}
    return FinMonoid(els, (m.unit, n.unit), table)


def idempotent_monoid():
    """{1, e} with e*e = e."""
    return FinMonoid((0, 1), 0, {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1})


def free_trunc_monoid(k):
    """Free monoid on one generator x with x^(k+1) = x^k (so k+1 elements)."""
    els = tuple(range(k + 1))
    table = {(a, b): min(a + b, k) for a in els for b in els}
    return FinMonoid(els, 0, table)


MONOID_CATALOG = {
    "trivial": trivial_monoid,
    "Z2": lambda: cyclic_monoid(2),
    "Z3": lambda: cyclic_monoid(3),
    "Z4": lambda: cyclic_monoid(4),
    "Z2xZ2": lambda: product_monoid(cyclic_monoid(2), cyclic_monoid(2)),
    "idem2": idempotent_monoid,
    "free1trunc3": lambda: free_trunc_monoid(3),
}


def catalog_monoid(name):
    if name not in MONOID_CATALOG:
        raise UnknownName("no catalog monoid named %r" % (name,))
    return MONOID_CATALOG[name]()


# ---------------------------------------------------------------------------
# words in coproducts of copies of a monoid

def normal_form(monoid, word):
    """Normal form of a word of (branch, element) letters in a coproduct of
    copies of the monoid: merge adjacent letters with equal branch tags and
    drop unit letters."""
    out = []
    for branch, x in word:
        assert x in monoid.elements, "letter %r is not in the monoid" % (x,)
        if x == monoid.unit:
            continue
        if out and out[-1][0] == branch:
            y = monoid.mul(out[-1][1], x)
            out.pop()
            if y != monoid.unit:
                out.append((branch, y))
        else:
            out.append((branch, x))
    return tuple(out)


def eval_retraction(monoid, word, keep):
    """Evaluate a coproduct word under the retraction that keeps one branch
    and sends every other branch to the unit."""
    return monoid.prod(x for branch, x in word if branch == keep)


def _coproduct_words(monoid, branches, max_len):
    """All normal-form words over the given branch tags, lengths 1..max_len,
    in deterministic order."""
    letters = [(b, x) for b in branches for x in monoid.nontrivial()]
    out = []
    for n in range(1, max_len + 1):
        for w in itertools.product(letters, repeat=n):
            if any(w[i][0] == w[i + 1][0] for i in range(n - 1)):
                continue
            out.append(w)
    return out


def comultiplication_candidates(monoid, a, max_len):
    """Normal-form words w over two branches with both one-branch retractions
    evaluating to `a`.  These are the possible images of `a` under a counital
    comultiplication, up to the length cap."""
    out = []
    for w in _coproduct_words(monoid, (0, 1), max_len):
        if eval_retraction(monoid, w, 0) == a and \
                eval_retraction(monoid, w, 1) == a:
            out.append(w)
    return out


def _requad(word, side, tag):
    """Re-tag a two-branch word into the four-branch alphabet: branch b of the
    outer copy `tag` becomes (b, tag) for side "h", (tag, b) for side "v"."""
    if side == "h":
        return tuple(((b, tag), x) for b, x in word)
    return tuple(((tag, b), x) for b, x in word)


def search_comultiplication(monoid, max_len=6, max_nodes=2_000_000):
    """Search for a counital comultiplication on the one-object category with
    endomorphism monoid `monoid` that satisfies interchange.

    A comultiplication assigns to each nontrivial element `a` a coproduct word
    m(a) with both counit retractions equal to `a`.  Interchange demands, for
    every pair (a, b), that the two ways of expanding a into b-words agree in
    the coproduct of four copies:

        m(a) with branch t re-expanded by m, tags (t, -)   [rows first]
      = m(a) with branch t re-expanded by m, tags (-, t)   [columns first]

    Concretely both sides are compared as normal-form words over the branch
    alphabet {0,1} x {0,1}.  Returns a dict:

      outcome: "none" | "found" | "unique-trivial"
      assignment: the comultiplication found, if any
      candidates: per-element candidate counts
    """
    guard(max_len <= 8, SearchSpaceTooLarge,
          "comultiplication words capped at length 8")
    nontrivial = monoid.nontrivial()
    if not nontrivial:
        return {"outcome": "unique-trivial", "assignment": {}, "candidates": {}}

    cand = {a: comultiplication_candidates(monoid, a, max_len)
            for a in nontrivial}
    counts = {repr(a): len(ws) for a, ws in cand.items()}
    if any(not ws for ws in cand.values()):
        return {"outcome": "none", "assignment": None, "candidates": counts,
                "reason": "element with no counital word"}

    def expand(word, assign, side):
        """Substitute assign[x] for each letter of `word`, tagging by `side`."""
        out = []
        for branch, x in word:
            out.extend(_requad(assign[x], side, branch))
        return normal_form(monoid, out)

    def interchange_ok(assign, pairs):
        for a in pairs:
            rows = expand(assign[a], assign, "h")
            cols = expand(assign[a], assign, "v")
            if rows != cols:
                return False
        return True

    # Candidate words are alternating with nontrivial letters, so expansion
    # blocks never merge across block boundaries (adjacent blocks differ in
    # one tag coordinate) and the two expansions can be compared prefixwise
    # while later letters are still unassigned.
    def diagonal_state(a, assign):
        """False once the two expansions of m(a) provably disagree, True when
        they provably agree, None while undetermined."""
        rows, cols = [], []
        for branch, x in assign[a]:
            if x not in assign:
                return None
            rows.extend(_requad(assign[x], "h", branch))
            cols.extend(_requad(assign[x], "v", branch))
            if rows != cols:
                return False
        return normal_form(monoid, rows) == normal_form(monoid, cols)

    order = sorted(nontrivial, key=lambda a: len(cand[a]))
    nodes = 0

    def next_unassigned(assign):
        # letters of assigned words first, so the diagonal equations become
        # decidable as early as possible
        for a in assign:
            for _, x in assign[a]:
                if x not in assign:
                    return x
        for a in order:
            if a not in assign:
                return a
        return None

    def backtrack(assign):
        nonlocal nodes
        a = next_unassigned(assign)
        if a is None:
            return dict(assign) if interchange_ok(assign, order) else None
        for w in cand[a]:
            nodes += 1
            guard(nodes <= max_nodes, SearchSpaceTooLarge,
                  "comultiplication search beyond %d nodes" % max_nodes)
            assign[a] = w
            if all(diagonal_state(b, assign) is not False for b in assign):
                got = backtrack(assign)
                if got is not None:
                    return got
            del assign[a]
        return None

    found = backtrack({})
    if found is None:
        return {"outcome": "none", "assignment": None, "candidates": counts}
    return {"outcome": "found",
            "assignment": {repr(a): list(w) for a, w in found.items()},
            "candidates": counts}


def search_endo_2cell(monoid, max_len=6):
    """Can a diagonal endo 2-cell theta survive comultiplication?

    Take `monoid` to be the monoid M of endo 2-cells of one diagonal path of a
    square.  Gluing two squares side by side, every endo 2-cell of the
    composite diagonal is a vertical word of whiskered letters drawn from M in
    the far copy (letters from the near copy whisker onto a different path).
    The image of theta under comultiplication must be such a word, and the two
    counit retractions evaluate it to (a) the product of its letters and (b)
    the unit, both of which must equal theta.  Enumerates all letter words up
    to `max_len` and reports every theta with a consistent image; the second
    equation forces theta to be the unit.
    """
    guard(max_len <= 8, SearchSpaceTooLarge,
          "endo 2-cell words capped at length 8")
    sols = []
    letters = monoid.nontrivial()
    for theta in monoid.elements:
        for n in range(0, max_len + 1):
            hit = None
            for word in itertools.product(letters, repeat=n):
                if monoid.prod(word) == theta and monoid.unit == theta:
                    hit = word
                    break
            if hit is not None:
                sols.append({"theta": repr(theta), "word": [repr(x) for x in hit]})
                break
    only_trivial = all(s["theta"] == repr(monoid.unit) for s in sols)
    return {"outcome": "only-trivial" if only_trivial else "found",
            "solutions": sols}
