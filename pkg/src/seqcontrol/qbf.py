"""Boolean formulas, QBF evaluation, the formula-pair election systems, and
the reductions from QBF truth to online candidate control.

Candidate ids for the formula systems encode a (formula, index) pair as
``<formula text>#<decimal index>``.  The winner rules below interpret
arbitrary candidate ids; anything that fails to decode is a syntactic
problem, which the rules resolve by making everyone lose (system E) or win
(system E')."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContractError, FormulaParseError, SizeLimitError
from .model import CCAC, CCDC, DCAC, IN, KEPT, ControlInstance

NEG = "~"
AND = "&"
OR = "|"
IFF = "<->"


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Not:
    child: "Node"


@dataclass(frozen=True, slots=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


Node = Var | Not | BinOp


@dataclass(frozen=True, slots=True)
class Formula:
    """Parsed boolean formula with its distinct variables in lexicographic
    order of their names (v1, v2, ... for the purposes of the election
    systems)."""

    root: Node
    variables: tuple[str, ...]

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    def serialize(self) -> str:
        return _serialize(self.root)


def _serialize(node: Node) -> str:
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Not):
        return f"(~{_serialize(node.child)})"
    return f"({_serialize(node.left)} {node.op} {_serialize(node.right)})"


class _Parser:
    """Recursive descent over: iff := or ('<->' or)*; or := and ('|' and)*;
    and := unary ('&' unary)*; unary := '~' unary | var | '(' iff ')'."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> FormulaParseError:
        return FormulaParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos : self.pos + 1]

    def take(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def parse(self) -> Node:
        node = self.parse_iff()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return node

    def parse_iff(self) -> Node:
        node = self.parse_or()
        while self.take(IFF):
            node = BinOp(IFF, node, self.parse_or())
        return node

    def parse_or(self) -> Node:
        node = self.parse_and()
        while True:
            self.skip_ws()
            # '|' but careful not to consume part of a longer token (none
            # exist today; kept simple).
            if self.text.startswith(OR, self.pos):
                self.pos += 1
                node = BinOp(OR, node, self.parse_and())
            else:
                return node

    def parse_and(self) -> Node:
        node = self.parse_unary()
        while self.take(AND):
            node = BinOp(AND, node, self.parse_unary())
        return node

    def parse_unary(self) -> Node:
        if self.take(NEG):
            return Not(self.parse_unary())
        if self.take("("):
            node = self.parse_iff()
            if not self.take(")"):
                raise self.error("expected ')'")
            return node
        self.skip_ws()
        start = self.pos
        if start < len(self.text) and self.text[start].isalpha():
            end = start + 1
            while end < len(self.text) and self.text[end].isalnum():
                end += 1
            self.pos = end
            return Var(self.text[start:end])
        raise self.error("expected a variable, '~', or '('")


def parse_formula(text: str) -> Formula:
    """Parse a boolean formula over ~, &, |, <-> and parentheses.

    Variables are a letter followed by alphanumerics.  Binding strength,
    tightest first: ~, &, |, <->.  The canonical serialization re-emitted by
    Formula.serialize is fully parenthesized."""
    root = _Parser(text).parse()
    names: set[str] = set()

    def collect(node: Node) -> None:
        if isinstance(node, Var):
            names.add(node.name)
        elif isinstance(node, Not):
            collect(node.child)
        else:
            collect(node.left)
            collect(node.right)

    collect(root)
    return Formula(root, tuple(sorted(names)))


@lru_cache(maxsize=4096)
def _parse_cached(text: str) -> Formula:
    return parse_formula(text)


def eval_formula(formula: Formula, assignment: Mapping[str, bool]) -> bool:
    missing = set(formula.variables) - set(assignment)
    if missing:
        raise ContractError(f"assignment misses variables {sorted(missing)}")

    def ev(node: Node) -> bool:
        if isinstance(node, Var):
            return bool(assignment[node.name])
        if isinstance(node, Not):
            return not ev(node.child)
        a, b = ev(node.left), ev(node.right)
        if node.op == AND:
            return a and b
        if node.op == OR:
            return a or b
        return a == b

    return ev(formula.root)


def rename_variables(formula: Formula, mapping: Mapping[str, str]) -> Formula:
    def walk(node: Node) -> Node:
        if isinstance(node, Var):
            return Var(mapping[node.name])
        if isinstance(node, Not):
            return Not(walk(node.child))
        return BinOp(node.op, walk(node.left), walk(node.right))

    return Formula(walk(formula.root), tuple(sorted(mapping[v] for v in formula.variables)))


class QbfInstance:
    """A closed QBF with strictly alternating prefix, exists first.

    The prefix is implicit: the lexicographically i-th quantified variable
    is existential for odd i, universal for even i, and the count is 2j.
    By default the quantified variables are exactly those occurring in the
    matrix (their count must then be even); passing ``j`` explicitly
    declares the prefix to range over w1..w2j, of which the matrix may
    mention a subset."""

    __slots__ = ("matrix", "j", "prefix")

    def __init__(self, matrix: Formula, j: int | None = None):
        occurring = matrix.variables
        if j is None:
            count = len(occurring)
            if count == 0 or count % 2 != 0:
                raise ContractError(
                    f"alternating prefix needs an even, positive variable "
                    f"count, got {count}"
                )
            prefix = occurring
            j = count // 2
        else:
            if j < 1:
                raise ContractError(f"j must be at least 1, got {j}")
            prefix = canonical_variable_names(2 * j)
            extra = set(occurring) - set(prefix)
            if extra:
                raise ContractError(
                    f"matrix variables {sorted(extra)} fall outside the "
                    f"declared prefix w1..w{2 * j}"
                )
        self.matrix = matrix
        self.j = j
        self.prefix = prefix

    def __repr__(self):
        return f"QbfInstance(j={self.j}, matrix={self.matrix.serialize()!r})"


def qbf_truth(q: QbfInstance, cap: int = 20) -> bool:
    """Brute-force truth of the alternating QBF: existential choice on odd
    positions, universal on even positions."""
    variables = q.prefix
    if len(variables) > cap:
        raise SizeLimitError(
            f"{len(variables)} variables exceed the evaluation cap {cap}"
        )
    assignment: dict[str, bool] = {}

    def decide(idx: int) -> bool:
        if idx == len(variables):
            return eval_formula(q.matrix, assignment)
        name = variables[idx]
        existential = idx % 2 == 0
        for value in (True, False):
            assignment[name] = value
            result = decide(idx + 1)
            if existential and result:
                assignment.pop(name)
                return True
            if not existential and not result:
                assignment.pop(name)
                return False
        assignment.pop(name)
        return not existential

    return decide(0)


def encode_candidate(formula_text: str, index: int) -> str:
    return f"{formula_text}#{index}"


def decode_candidate(candidate_id: str) -> tuple[str, int] | None:
    """Split an id into its (formula text, index) pair; None on any
    syntactic problem.  The index must be canonical decimal."""
    if not isinstance(candidate_id, str) or "#" not in candidate_id:
        return None
    formula_text, _, digits = candidate_id.rpartition("#")
    if not formula_text or not digits or not digits.isascii() or not digits.isdigit():
        return None
    if len(digits) > 1 and digits[0] == "0":
        return None
    return formula_text, int(digits)


def winners_qbf_system(
    candidates: Iterable[str],
    votes: Sequence[Sequence[str]],
    flavor: str = "E",
) -> frozenset[str]:
    """Winner rule of the formula-pair election systems.

    System E: everyone loses on any syntactic problem, on distinct formulas
    among the candidates, on an odd variable count, on a missing even-index
    candidate, on two or more voters, or when the formula evaluates false
    under the presence/preference assignment; otherwise everyone wins.
    System E' swaps every everyone-wins/everyone-loses outcome.  Total
    function: arbitrary byte-string ids never raise."""
    if flavor not in ("E", "E-prime"):
        raise ContractError(f"unknown system flavor {flavor!r}")
    candidates = tuple(candidates)
    everyone = frozenset(candidates)
    all_win = everyone if flavor == "E" else frozenset()
    all_lose = frozenset() if flavor == "E" else everyone

    if not candidates:
        return all_lose
    decoded = [decode_candidate(c) for c in candidates]
    if any(p is None for p in decoded):
        return all_lose
    texts = {text for text, _ in decoded}
    if len(texts) != 1:
        return all_lose
    (common_text,) = texts
    try:
        formula = _parse_cached(common_text)
    except FormulaParseError:
        return all_lose
    ell = formula.num_variables
    if ell < 1:
        return all_lose

    indices = {idx for _, idx in decoded}
    if ell % 2 == 1:
        return all_lose
    if any(i not in indices for i in range(0, ell + 1, 2)):
        return all_lose
    if len(votes) >= 2:
        return all_lose

    def prefers(vote: Sequence[str], a: str, b: str) -> bool:
        try:
            return list(vote).index(a) < list(vote).index(b)
        except ValueError:
            return False

    assignment: dict[str, bool] = {}
    zero = encode_candidate(common_text, 0)
    for i, name in enumerate(formula.variables, start=1):
        if i % 2 == 1:
            assignment[name] = i in indices
        else:
            assignment[name] = len(votes) == 1 and prefers(
                votes[0], encode_candidate(common_text, i), zero
            )
    return all_win if eval_formula(formula, assignment) else all_lose


def canonical_variable_names(count: int) -> tuple[str, ...]:
    """w-names whose lexicographic order matches their numeric order."""
    width = len(str(count))
    return tuple(f"w{str(i).zfill(width)}" for i in range(1, count + 1))


def reduce_qbf(q: QbfInstance, target: str) -> ControlInstance:
    """Map a QBF instance to an online control instance whose forced-win
    answer equals the QBF's truth.

    The matrix's variables are first canonically renamed so lexicographic
    order matches quantifier order; candidates are the pairs (formula, i)
    for 0 <= i <= 2j.  Constructive targets use system E, destructive ones
    system E'; addition targets make the odd-index candidates spoilers,
    deletion targets put everyone in the roster.  The budget is j, sigma
    ranks higher indices better with d the index-0 candidate, candidates
    are presented in index order, and the single voter initially prefers
    index 0 to index 1."""
    if target not in ("CCAC", "CCDC", "DCDC-NHT", "DCDC-HT", "DCAC"):
        raise ContractError(f"unknown reduction target {target!r}")
    two_j = 2 * q.j
    names = canonical_variable_names(two_j)
    renamed = rename_variables(
        q.matrix, dict(zip(q.prefix, names))
    )
    # Quantified variables absent from the matrix are given tautological
    # occurrences so that the election systems see all 2j variables; the
    # QBF's truth value is unchanged.
    matrix = renamed
    for name in names:
        if name not in renamed.variables:
            matrix = Formula(
                BinOp(AND, matrix.root, BinOp(OR, Var(name), Not(Var(name)))),
                tuple(sorted(set(matrix.variables) | {name})),
            )
    text = matrix.serialize()
    ids = tuple(encode_candidate(text, i) for i in range(two_j + 1))

    constructive = target in (CCAC, CCDC)
    addition = target in (CCAC, DCAC)
    spoilers = frozenset(ids[i] for i in range(1, two_j + 1, 2)) if addition else None
    first_flag = IN if addition else KEPT
    return ControlInstance(
        variant=target,
        candidates=ids,
        num_voters=1,
        presentation=ids,
        current_index=1,
        budget=q.j,
        sigma=tuple(reversed(ids)),
        d=ids[0],
        decisions=(first_flag,),
        votes=((ids[0], ids[1]),),
        spoilers=spoilers,
        system="qbf-E" if constructive else "qbf-Eprime",
    )


def two_variable_corpus() -> tuple[QbfInstance, ...]:
    """Every matrix of the shape [~]l1 op [~]l2 over w1, w2 with op in
    {&, |, <->}, optionally negated at the top: the exhaustive desk-scale
    corpus of two-variable alternation instances."""
    out = []
    for op in (AND, OR, IFF):
        for neg1, neg2, negtop in itertools.product((False, True), repeat=3):
            a = "~w1" if neg1 else "w1"
            b = "~w2" if neg2 else "w2"
            body = f"{a} {op} {b}"
            text = f"~({body})" if negtop else body
            out.append(QbfInstance(parse_formula(text)))
    return tuple(out)


def sample_four_variable_matrices(count: int, seed: int = 20120229) -> tuple[QbfInstance, ...]:
    """Random matrices over exactly w1..w4, drawn from small random ASTs by
    rejection (only trees mentioning all four variables are kept)."""
    import random

    rng = random.Random(seed)
    names = canonical_variable_names(4)

    def build(depth: int) -> str:
        if depth <= 0:
            name = rng.choice(names)
            return f"~{name}" if rng.random() < 0.4 else name
        op = rng.choice((AND, OR, IFF))
        left = build(depth - 1)
        right = build(depth - rng.choice((1, 2)))
        body = f"({left} {op} {right})"
        return f"~{body}" if rng.random() < 0.25 else body

    out = []
    while len(out) < count:
        candidate = parse_formula(build(3))
        if candidate.variables == names:
            out.append(QbfInstance(candidate))
    return tuple(out)
