"""0-1 integer programs: sparse constraint rows, slack/surplus rewriting,
and a small exhaustive feasibility solver.

Inequality rows carry a `slack_bound`: the maximum LHS-RHS gap over
satisfying binary assignments, supplied analytically by whichever reduction
built the row.  Converting a row to equality form appends
ceil(log2(gap+1)) fresh binary slack variables with power-of-two
coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

EQ, LE, GE = "=", "<=", ">="


class ContractError(ValueError):
    """An operation precondition was violated (e.g. missing slack_bound)."""


class VarCapExceededError(RuntimeError):
    """solve_ip refuses programs larger than its variable cap."""


@dataclass(frozen=True)
class VariableTag:
    """Semantic label recording which source object a variable encodes."""

    origin: tuple

    def __str__(self):
        return "_".join(str(x) for x in self.origin)


@dataclass(frozen=True)
class ConstraintRow:
    terms: tuple  # ((var_index, coefficient), ...), var_index 0-based
    relation: str
    rhs: int
    slack_bound: Optional[int] = None

    def lhs(self, assignment):
        return sum(c * assignment[i] for i, c in self.terms)

    def holds(self, assignment):
        lhs = self.lhs(assignment)
        if self.relation == EQ:
            return lhs == self.rhs
        if self.relation == LE:
            return lhs <= self.rhs
        return lhs >= self.rhs


@dataclass(frozen=True)
class BinaryProgram:
    variables: tuple  # of VariableTag
    rows: tuple  # of ConstraintRow

    @property
    def num_variables(self):
        return len(self.variables)

    def validate(self):
        origins = [t.origin for t in self.variables]
        if len(set(origins)) != len(origins):
            raise ContractError("variable origin tags must be unique")
        for row in self.rows:
            if row.relation not in (EQ, LE, GE):
                raise ContractError("bad relation %r" % row.relation)
            for i, c in row.terms:
                if not 0 <= i < len(self.variables):
                    raise ContractError("term references undeclared variable")
                if c == 0:
                    raise ContractError("zero coefficients must not be stored")
        return self

    def is_equality_form(self):
        return all(r.relation == EQ for r in self.rows)

    def satisfied_by(self, assignment):
        if len(assignment) != self.num_variables:
            from .instances import InvalidCertificateError

            raise InvalidCertificateError("assignment length mismatch")
        if any(x not in (0, 1) for x in assignment):
            from .instances import InvalidCertificateError

            raise InvalidCertificateError("assignment must be binary")
        return all(row.holds(assignment) for row in self.rows)

    def size(self, mode="element"):
        """Element mode: nonzero count + RHS entry count; bits mode: encoding
        lengths of all coefficients and RHS values."""
        from .instances import nbits

        if mode == "element":
            return sum(len(r.terms) for r in self.rows) + len(self.rows)
        return sum(nbits(c) for r in self.rows for _, c in r.terms) + sum(
            nbits(r.rhs) for r in self.rows
        )

    def dump(self):
        """One row per line: "coef*var ... REL rhs"."""
        lines = []
        for row in self.rows:
            terms = " ".join(
                "%d*%s" % (c, self.variables[i]) for i, c in row.terms
            )
            lines.append("%s %s %d" % (terms, row.relation, row.rhs))
        return "\n".join(lines)


def num_slacks(gap):
    """Slack variables needed to absorb a maximum gap: ceil(log2(gap+1))."""
    return math.ceil(math.log2(gap + 1)) if gap > 0 else 0


def to_equality_form(program):
    """Rewrite every inequality row as an equality with binary-weighted
    slack (for <=) or surplus (for >=) variables.

    Satisfying assignments are in bijection with the original program when
    projected onto the original variables.  Rows whose slack_bound is 0 are
    already tight and convert by relation change alone.
    """
    variables = list(program.variables)
    rows = []
    for row_idx, row in enumerate(program.rows):
        if row.relation == EQ:
            rows.append(row)
            continue
        g = row.slack_bound
        if g is None:
            raise ContractError("inequality row %d has no slack_bound" % row_idx)
        if g < 0:
            raise ContractError("negative slack_bound on row %d" % row_idx)
        n = num_slacks(g)
        sign = 1 if row.relation == LE else -1
        terms = list(row.terms)
        for j in range(1, n + 1):
            variables.append(VariableTag(("slack", row_idx, j)))
            terms.append((len(variables) - 1, sign * 2 ** (j - 1)))
        rows.append(ConstraintRow(tuple(terms), EQ, row.rhs, None))
    return BinaryProgram(tuple(variables), tuple(rows))


def _assignment_matrix(num_vars, start, count):
    """Rows `start..start+count-1` of the lexicographic assignment table
    (x1 is the most significant bit)."""
    ints = np.arange(start, start + count, dtype=np.int64)
    shifts = np.arange(num_vars - 1, -1, -1, dtype=np.int64)
    return ((ints[:, None] >> shifts[None, :]) & 1).astype(np.int64)


DEFAULT_VAR_CAP = 24
_CHUNK = 1 << 16


def solve_ip(program, var_cap=DEFAULT_VAR_CAP):
    """Exhaustively search all binary assignments for a feasible one.

    Returns the lexicographically first satisfying assignment as a tuple of
    0/1, or None if the program is infeasible.  Refuses programs with more
    than `var_cap` variables rather than truncating the search.
    """
    v = program.num_variables
    if v > var_cap:
        raise VarCapExceededError(
            "program has %d variables, cap is %d" % (v, var_cap)
        )
    if v == 0:
        return () if all(r.holds(()) for r in program.rows) else None
    if not program.rows:
        return (0,) * v

    coeffs = np.zeros((len(program.rows), v), dtype=np.int64)
    rhs = np.zeros(len(program.rows), dtype=np.int64)
    rel_eq = np.zeros(len(program.rows), dtype=bool)
    rel_le = np.zeros(len(program.rows), dtype=bool)
    for r, row in enumerate(program.rows):
        for i, c in row.terms:
            coeffs[r, i] += c
        rhs[r] = row.rhs
        rel_eq[r] = row.relation == EQ
        rel_le[r] = row.relation == LE

    total = 1 << v
    start = 0
    while start < total:
        count = min(_CHUNK, total - start)
        x = _assignment_matrix(v, start, count)
        lhs = x @ coeffs.T
        ok = np.ones(count, dtype=bool)
        ok &= np.all(np.where(rel_eq[None, :], lhs == rhs[None, :], True), axis=1)
        ok &= np.all(np.where(rel_le[None, :], lhs <= rhs[None, :], True), axis=1)
        ge = ~(rel_eq | rel_le)
        ok &= np.all(np.where(ge[None, :], lhs >= rhs[None, :], True), axis=1)
        hits = np.nonzero(ok)[0]
        if hits.size:
            return tuple(int(b) for b in x[hits[0]])
        start += count
    return None
