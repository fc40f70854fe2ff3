"""Normalization and inclusion queries over space expressions.

Strategy: rules are tried in table (priority) order; the first rule that
matches anywhere fires at its innermost match, and the scan restarts. The
priority-primary order is what makes the specific corollaries produce the
canonical forms the numeric fixtures expect; within one rule, innermost
matches keep reduction deterministic. Every rule strictly decreases a
weighted node count (with a subterm-size tiebreaker for the inward-moving
duality rule), so normalization terminates on all inputs; irreducible
expressions are their own normal form.

``includes`` searches the directed embedding edges (amalgam global-exponent
monotonicity, the unweighted amalgam/space sandwich, and pi into eps),
closed under congruence in monotone positions and under normalize-equality.
Absence of a derivation is reported as "no-evidence", never as a
non-inclusion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .ast import (
    Amalgam,
    Dual,
    INF,
    INF0,
    TensorEps,
    TensorPi,
    children,
    exponent_key,
    rebuild,
    render,
)
from .rules import RULES

__all__ = ["RuleFiring", "normalize", "explain", "trace_to_json", "includes", "InclusionResult"]

_MAX_STEPS = 10_000


@dataclass(frozen=True)
class RuleFiring:
    rule_id: str
    location: str
    before: object
    after: object


def _find_innermost(rule, expr):
    """Path (tuple of child indices) of the innermost match, or None."""
    for i, kid in enumerate(children(expr)):
        sub = _find_innermost(rule, kid)
        if sub is not None:
            return (i,) + sub
    if rule.apply(expr) is not None:
        return ()
    return None


def _rewrite_at(expr, path, rule):
    if path == ():
        return rule.apply(expr)
    kids = list(children(expr))
    kids[path[0]] = _rewrite_at(kids[path[0]], path[1:], rule)
    return rebuild(expr, tuple(kids))


def normalize(expr) -> tuple:
    """Reduce to a normal form; returns (normal_form, trace of firings)."""
    trace = []
    current = expr
    for _ in range(_MAX_STEPS):
        fired = False
        for rule in RULES:
            path = _find_innermost(rule, current)
            if path is not None:
                after = _rewrite_at(current, path, rule)
                trace.append(RuleFiring(rule.id, rule.location, current, after))
                current = after
                fired = True
                break
        if not fired:
            return current, trace
    raise RuntimeError("rewrite did not terminate (rule table bug)")


def explain(trace) -> str:
    """Human-readable derivation: one line per firing."""
    if not trace:
        return "already normal"
    lines = []
    for i, f in enumerate(trace, 1):
        lines.append(
            f"{i}. {f.rule_id} [{f.location}]: {render(f.before)} -> {render(f.after)}"
        )
    return "\n".join(lines)


def trace_to_json(trace) -> list:
    """Serializable firings with the documented field set."""
    return [
        {
            "rule_id": f.rule_id,
            "paper_location": f.location,
            "before": render(f.before),
            "after": render(f.after),
        }
        for f in trace
    ]


# ---------------------------------------------------------------------------
# inclusion closure


@dataclass(frozen=True)
class InclusionResult:
    status: str  # "established" | "no-evidence"
    chain: tuple = ()

    @property
    def established(self) -> bool:
        return self.status == "established"


def _edge_targets(e, candidate_ps):
    """Single embedding steps available at this node, with edge labels."""
    out = []
    if isinstance(e, Amalgam):
        key = exponent_key(e.gp)
        for p in candidate_ps:
            if exponent_key(p) > key:
                out.append((Amalgam(e.local, p, e.gs), "Lemma 3.1(i): global exponent grows"))
        if e.gp == 1.0 and e.gs == 0.0:
            out.append((e.local, "Eq. (3.4): W(E, l1) into E"))
    if isinstance(e, (TensorPi,)):
        out.append((TensorEps(e.a, e.b), "pi tensor into eps tensor"))
    return out


def _wrap_targets(e, target_sizes):
    """Growth edges E -> W(E, linf0), admitted only while smaller than the goal."""
    if _size(e) + 1 <= target_sizes:
        return [(Amalgam(e, INF0, 0.0), "Eq. (3.4): E into W(E, linf0)")]
    return []


def _size(e) -> int:
    return 1 + sum(_size(k) for k in children(e))


def _positions(e, under_dual: bool = False):
    """All monotone positions: congruence stops below Dual (contravariant)."""
    yield (), e
    if isinstance(e, Dual):
        return
    for i, kid in enumerate(children(e)):
        for path, sub in _positions(kid):
            yield (i,) + path, sub


def _replace(e, path, new):
    if path == ():
        return new
    kids = list(children(e))
    kids[path[0]] = _replace(kids[path[0]], path[1:], new)
    return rebuild(e, tuple(kids))


def _global_exponents(e, acc):
    if isinstance(e, Amalgam):
        acc.add(e.gp)
    for k in children(e):
        _global_exponents(k, acc)


def includes(a, b, max_nodes: int = 4000) -> InclusionResult:
    """Breadth-first search for an embedding chain from a into b.

    Nodes are canonicalized by ``normalize`` (equal spaces, recorded as
    chain steps when they change the expression). Returns the chain of
    edges, or no-evidence; the rule set only provides inclusions, so a
    negative answer is never asserted.
    """
    start, trace_a = normalize(a)
    goal, trace_b = normalize(b)
    prologue = []
    if trace_a:
        prologue.append(("normalize", render(a), render(start)))
    if start == goal:
        chain = prologue + (
            [("normalize (reversed)", render(goal), render(b))] if trace_b else []
        )
        return InclusionResult("established", tuple(chain))

    candidates = {1.0, 2.0, INF0, INF}
    _global_exponents(start, candidates)
    _global_exponents(goal, candidates)
    goal_size = _size(goal) + 4

    seen = {start}
    queue = deque([(start, ())])
    while queue and len(seen) < max_nodes:
        node, chain = queue.popleft()
        for path, sub in _positions(node):
            steps = _edge_targets(sub, candidates) + _wrap_targets(sub, goal_size)
            for new_sub, label in steps:
                raw = _replace(node, path, new_sub)
                cand, _ = normalize(raw)
                if cand in seen:
                    continue
                seen.add(cand)
                new_chain = chain + ((label, render(node), render(cand)),)
                if cand == goal:
                    full = tuple(prologue) + new_chain + (
                        (("normalize (reversed)", render(goal), render(b)),)
                        if trace_b
                        else ()
                    )
                    return InclusionResult("established", full)
                queue.append((cand, new_chain))
    return InclusionResult("no-evidence")
