"""
Sum-of-products expressions over projection literals

Sum is quaternary OR (qmax), product is quaternary AND (qmin). A product is
a tuple of factors:
- Literal: a projection operation on one variable, or a plain multi-argument
  literal that fires only when every argument equals its index
- PairMerge: fires its level when the two variables hold the pair {i, j} in
  either order
- Const: a constant digit

simplify() applies the simplification rules to a fixpoint; every rule is a
pointwise identity under qmin/qmax, so evaluation is preserved.
"""

from collections import Counter
from dataclasses import dataclass

from qsynth4.errors import ExpressionError
from qsynth4.gf4 import FAMILIES, ProjectionKind, as_gf4, projection


def var_name(index: int) -> str:
    """a, b, c, ... then x26, x27, ..."""
    return chr(ord("a") + index) if index < 26 else f"x{index}"


# =============================================================================
# Factors
# =============================================================================

@dataclass(frozen=True)
class Literal:
    kind: ProjectionKind
    variables: tuple[int, ...]

    def __post_init__(self):
        variables = tuple(sorted(set(self.variables)))
        if not variables:
            raise ExpressionError("a literal needs at least one variable")
        if self.kind.complemented and len(variables) > 1:
            raise ExpressionError(f"complemented literal {self.kind} takes a single variable")
        object.__setattr__(self, "variables", variables)

    @property
    def upper(self) -> int:
        return self.kind.fire_value

    def evaluate(self, values) -> int:
        if self.kind.complemented:
            return projection(self.kind, values(self.variables[0]))
        if all(values(v) == self.kind.index for v in self.variables):
            return self.kind.fire_value
        return 0

    def sort_key(self):
        k = self.kind
        return (0, FAMILIES.index(k.family), k.index, k.complemented, self.variables)

    def __str__(self):
        return f"{self.kind}({','.join(var_name(v) for v in self.variables)})"


@dataclass(frozen=True)
class PairMerge:
    """level when {values of the two variables} == pair, else 0"""

    variables: tuple[int, int]
    pair: tuple[int, int]
    level: int

    def __post_init__(self):
        a, b = self.variables
        i, j = self.pair
        if a == b:
            raise ExpressionError("a pair merge needs two different variables")
        if i == j or i not in (1, 2, 3) or j not in (1, 2, 3):
            raise ExpressionError(f"pair must be two distinct values from {{1,2,3}}, got {self.pair}")
        if self.level not in (1, 2, 3):
            raise ExpressionError(f"pair merge level must be 1, 2 or 3, got {self.level}")
        object.__setattr__(self, "variables", (min(a, b), max(a, b)))
        object.__setattr__(self, "pair", (min(i, j), max(i, j)))

    @property
    def upper(self) -> int:
        return self.level

    def evaluate(self, values) -> int:
        i, j = self.pair
        a, b = (values(v) for v in self.variables)
        return self.level if (a, b) in ((i, j), (j, i)) else 0

    def sort_key(self):
        return (1, self.variables, self.pair, self.level)

    def __str__(self):
        i, j = self.pair
        a, b = (var_name(v) for v in self.variables)
        return f"C{self.level}{{{i},{j}}}({a},{b})"


@dataclass(frozen=True)
class Const:
    value: int

    def __post_init__(self):
        as_gf4(self.value)

    @property
    def upper(self) -> int:
        return self.value

    def evaluate(self, values) -> int:
        return self.value

    def sort_key(self):
        return (2, self.value)

    def __str__(self):
        return str(self.value)


Factor = Literal | PairMerge | Const


@dataclass(frozen=True)
class Product:
    factors: tuple[Factor, ...]

    @property
    def upper(self) -> int:
        """Largest value the product can take"""
        return min((f.upper for f in self.factors), default=3)

    def evaluate(self, values) -> int:
        return min((f.evaluate(values) for f in self.factors), default=3)

    def sort_key(self):
        return tuple(f.sort_key() for f in self.factors)

    def __str__(self):
        return "".join(str(f) for f in self.factors) if self.factors else "3"


@dataclass(frozen=True)
class QExpr:
    """Sum (qmax) of products; the empty sum is the constant 0"""

    terms: tuple[Product, ...] = ()

    def evaluate(self, values) -> int:
        return max((t.evaluate(values) for t in self.terms), default=0)

    def __str__(self):
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"


def product(*factors: Factor) -> Product:
    return Product(tuple(factors))


def literal(family: str, index: int, *variables: int, complemented: bool = False) -> Literal:
    return Literal(ProjectionKind(family, index, complemented), variables)


def eval_expr(e: QExpr, inputs) -> int:
    """
    Evaluate with Sum = qmax and Product = qmin.

    inputs is a sequence (variable i -> inputs[i]) or a mapping.
    """
    def values(var: int) -> int:
        try:
            return inputs[var]
        except (KeyError, IndexError):
            raise ExpressionError(f"variable {var_name(var)} is not assigned") from None

    return e.evaluate(values)


# =============================================================================
# Simplification
# =============================================================================

def _sorted_product(factors) -> Product:
    return Product(tuple(sorted(factors, key=lambda f: f.sort_key())))


def normalize(e: QExpr) -> QExpr:
    """Canonical ordering of factors and terms"""
    terms = [_sorted_product(t.factors) for t in e.terms]
    return QExpr(tuple(sorted(terms, key=Product.sort_key)))


def _simplify_product(p: Product) -> Product | None:
    """Product-level rules; None means the product is constant 0"""
    # rule 8
    factors = list(dict.fromkeys(p.factors))

    consts = [f.value for f in factors if isinstance(f, Const)]
    if consts:
        # rule 1
        if min(consts) == 0:
            return None
        factors = [f for f in factors if not isinstance(f, Const)]
        c = min(consts)
        # rule 2
        if not factors or min(f.upper for f in factors) > c:
            factors.append(Const(c))

    # rule 5: a variable cannot hold two values, or a value and its complement
    required: dict[int, int] = {}
    for f in factors:
        if isinstance(f, Literal) and not f.kind.complemented:
            for v in f.variables:
                if required.setdefault(v, f.kind.index) != f.kind.index:
                    return None
    for f in factors:
        if isinstance(f, Literal) and f.kind.complemented:
            if required.get(f.variables[0]) == f.kind.index:
                return None
        elif isinstance(f, PairMerge):
            held = [required[v] for v in f.variables if v in required]
            if any(h not in f.pair for h in held):
                return None
            if len(held) == 2 and held[0] == held[1]:
                return None

    return _sorted_product(factors)


def _absorb_constants(terms: list[Product]) -> list[Product]:
    """Rules 3 and 4"""
    consts = [t.factors[0].value for t in terms if len(t.factors) == 1 and isinstance(t.factors[0], Const)]
    if not consts:
        return terms
    c = max(consts)
    kept = [t for t in terms if t.upper > c]
    return kept + [Product((Const(c),))]


def _merge_complements(terms: list[Product]) -> list[Product]:
    """Rule 6: X R + X' R -> v R"""
    index = {t: n for n, t in enumerate(terms)}
    used: set[int] = set()
    out: list[Product] = []
    for n, t in enumerate(terms):
        if n in used:
            continue
        merged = None
        for f in t.factors:
            if not (isinstance(f, Literal) and not f.kind.complemented and len(f.variables) == 1):
                continue
            rest = [g for g in t.factors if g != f]
            partner = _sorted_product(rest + [Literal(f.kind.complement(), f.variables)])
            m = index.get(partner)
            if m is not None and m not in used and m != n:
                used.update((n, m))
                merged = _sorted_product(rest + [Const(f.kind.fire_value)])
                break
        if merged is not None:
            out.append(merged)
        else:
            used.add(n)
            out.append(t)
    return out


def _symmetric_pairs(t: Product):
    """Yield (x, y, swapped partner product) for candidate rule-7 literal pairs"""
    singles = [
        f for f in t.factors
        if isinstance(f, Literal) and not f.kind.complemented and len(f.variables) == 1
    ]
    for n, x in enumerate(singles):
        for y in singles[n + 1:]:
            if x.kind.family != y.kind.family or x.kind.index == y.kind.index:
                continue
            if x.variables == y.variables:
                continue
            rest = [g for g in t.factors if g != x and g != y]
            swapped = rest + [
                Literal(ProjectionKind(x.kind.family, y.kind.index), x.variables),
                Literal(ProjectionKind(x.kind.family, x.kind.index), y.variables),
            ]
            yield x, y, rest, _sorted_product(swapped)


def _merge_pairs(terms: list[Product]) -> list[Product]:
    """Rule 7 for value pairs inside {1,2,3}"""
    index = {t: n for n, t in enumerate(terms)}
    used: set[int] = set()
    out: list[Product] = []
    for n, t in enumerate(terms):
        if n in used:
            continue
        merged = None
        for x, y, rest, partner in _symmetric_pairs(t):
            if 0 in (x.kind.index, y.kind.index):
                continue
            m = index.get(partner)
            if m is None or m in used or m == n:
                continue
            used.update((n, m))
            pm = PairMerge(
                (x.variables[0], y.variables[0]),
                (x.kind.index, y.kind.index),
                x.kind.fire_value,
            )
            merged = _sorted_product(rest + [pm])
            break
        if merged is not None:
            out.append(merged)
        else:
            used.add(n)
            out.append(t)
    return out


def _merge_multi_arg(p: Product) -> Product:
    """Rule 9: K_i(a) K_i(b) -> K_i(a, b)"""
    groups: dict[ProjectionKind, list[int]] = {}
    others = []
    for f in p.factors:
        if isinstance(f, Literal) and not f.kind.complemented:
            groups.setdefault(f.kind, []).extend(f.variables)
        else:
            others.append(f)
    merged = [Literal(kind, tuple(variables)) for kind, variables in groups.items()]
    return _sorted_product(merged + others)


def _pass(e: QExpr, multi_arg: bool) -> QExpr:
    terms = [q for t in e.terms if (q := _simplify_product(t)) is not None]
    terms = list(dict.fromkeys(terms))
    terms = _absorb_constants(terms)
    terms = _merge_complements(terms)
    terms = _merge_pairs(terms)
    if multi_arg:
        terms = [_merge_multi_arg(t) for t in terms]
    terms = list(dict.fromkeys(terms))
    return QExpr(tuple(sorted(terms, key=Product.sort_key)))


def _fixpoint(e: QExpr, multi_arg: bool) -> QExpr:
    current = normalize(e)
    while True:
        nxt = _pass(current, multi_arg)
        if nxt == current:
            return current
        current = nxt


@dataclass(frozen=True)
class SimplifyReport:
    pair_merges: int
    multi_arg_literals: int
    unmerged_zero_pairs: int


def count_zero_pairs(e: QExpr) -> int:
    """Symmetric product pairs left unmerged because their value pair contains 0"""
    index = set(e.terms)
    count = 0
    for t in e.terms:
        for x, y, _, partner in _symmetric_pairs(t):
            if 0 in (x.kind.index, y.kind.index) and partner in index:
                count += 1
    # each pair is seen from both of its products
    return count // 2


def simplify_with_report(e: QExpr) -> tuple[QExpr, SimplifyReport]:
    # pair merging must settle before multi-argument literals hide the pairs
    settled = _fixpoint(e, multi_arg=False)
    zero_pairs = count_zero_pairs(settled)
    final = _fixpoint(settled, multi_arg=True)
    factors = Counter(type(f) for t in final.terms for f in t.factors)
    multi = sum(1 for t in final.terms for f in t.factors if isinstance(f, Literal) and len(f.variables) > 1)
    return final, SimplifyReport(factors[PairMerge], multi, zero_pairs)


def simplify(e: QExpr) -> QExpr:
    return simplify_with_report(e)[0]
