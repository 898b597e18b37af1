"""Frobenius pushforward decomposition and spinor multiplicity splitting.

The decomposition solver equates section counts of the pushforward with the
section counts of a candidate list of line bundle and spinor twists drawn
from the support oracle.  Candidates are first taken one twist wider than
the oracle windows so that a wrong oracle surfaces as slack or as an
inconsistent system; because section counts obey the relation
2^m * h_line(t+1+d) = h_spin(t+d) + h_spin(t+1+d), the widened system is
rank-deficient whenever the spinor list holds adjacent twists, and the
solve falls back to the exact oracle support, which the overdetermined
system still cross-checks.  Anything but a unique nonnegative integral
solution is reported as degenerate rather than patched.

Splitting the total spinor multiplicity of a pushforward of a single spinor
bundle into its S+/S- parts needs module data: the multiplicity of S_b(l) in
F_* S_a(l) is the stable Hom from S_b(l) into the pushforward, i.e. the full
Hom dimension minus the maps landing in the line bundle part, and the latter
is a closed form in the already-solved line multiplicities.  The subtraction
must happen on the pushforward side; stable quotients do not transport
through the restriction-of-scalars adjunction (see the oracle tests).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bundles import SheafSymbol, h0, rank, symbol_presentation
from .errors import (
    DegenerateDecomposition,
    InconsistentMultiplicity,
    UnsupportedParameters,
)
from .hilbert import h0_line, h0_spinor
from .homcalc import hom_into_pushforward_dim
from .intsolve import UNDERDETERMINED, UNIQUE, solve_affine, solve_exact
from .oracle import support_prediction
from .ring import is_prime


@dataclass
class SummandMultiset:
    """Multiplicities of the direct summands of a Frobenius pushforward.

    Twists are stored in the plain convention: line[t] copies of O(t).
    Spinor multiplicities of sources with symmetric pushforwards are split
    equally between S+ and S-; pushforwards of a single spinor bundle keep
    the total in unresolved_spinor until the module-level split is run.
    """

    source: SheafSymbol
    p: int
    m: int
    e: int
    line: dict = field(default_factory=dict)
    spinor_plus: dict = field(default_factory=dict)
    spinor_minus: dict = field(default_factory=dict)
    unresolved_spinor: dict = field(default_factory=dict)
    support_basis: str = "hilbert"

    def rank_total(self):
        half = 2 ** (self.m - 1)
        total = sum(self.line.values())
        total += half * sum(self.spinor_plus.values())
        total += half * sum(self.spinor_minus.values())
        total += half * sum(self.unresolved_spinor.values())
        return total

    def rank_expected(self):
        return (self.p ** (2 * self.m * self.e)) * rank(self.source)

    def line_support(self):
        return tuple(sorted(t for t, n in self.line.items() if n))

    def spinor_support(self):
        support = set()
        for d in (self.spinor_plus, self.spinor_minus, self.unresolved_spinor):
            support.update(t for t, n in d.items() if n)
        return tuple(sorted(support))

    def expanded_h0(self, d):
        """Section count of the multiset at twist d (for faithfulness checks)."""
        total = 0
        for t, n in self.line.items():
            total += n * h0_line(self.m, t + d)
        for part in (self.spinor_plus, self.spinor_minus, self.unresolved_spinor):
            for t, n in part.items():
                total += n * h0_spinor(self.m, t + d)
        return total

    def to_json_dict(self):
        def dump(d):
            return [
                {"twist": t, "mult": d[t]} for t in sorted(d) if d[t]
            ]

        return {
            "line": dump(self.line),
            "spinor_plus": dump(self.spinor_plus),
            "spinor_minus": dump(self.spinor_minus),
            "unresolved_spinor": dump(self.unresolved_spinor),
            "rank_total": self.rank_total(),
            "rank_expected": self.rank_expected(),
            "source": self.source.to_json_dict(),
            "p": self.p,
            "m": self.m,
            "e": self.e,
            "support_basis": self.support_basis,
        }


def pushforward_hilbert(sym, e, p, d):
    """Sections of the e-th Frobenius pushforward of the symbol, twisted by d.

    The projection formula turns the twist by d outside the pushforward into
    the twist by p^e * d inside.
    """
    if e < 0:
        raise ValueError("e must be nonnegative")
    if e > 0 and (not is_prime(p) or p < 3):
        raise UnsupportedParameters(f"p must be a prime >= 3, got {p}")
    return h0(sym, p ** e * d)


def decompose(sym, e, p):
    """Decompose the e-th Frobenius pushforward of the symbol into summands.

    Candidates come from the support oracle widened by one twist on each
    side; multiplicities are recovered by an exact integer solve against
    section counts at twists d = 0 .. (number of candidates + 4).
    """
    m = sym.m
    if not is_prime(p) or p < 3 or m < 2:
        raise UnsupportedParameters(
            f"decomposition needs a prime p >= 3 and m >= 2, got p={p}, m={m}"
        )
    if e < 0:
        raise ValueError("e must be nonnegative")
    if e == 0:
        ms = SummandMultiset(sym, p, m, 0)
        if sym.kind == "O":
            ms.line[sym.twist] = 1
        elif sym.kind == "S+":
            ms.spinor_plus[sym.twist] = 1
        elif sym.kind == "S-":
            ms.spinor_minus[sym.twist] = 1
        else:
            ms.spinor_plus[sym.twist] = 1
            ms.spinor_minus[sym.twist] = 1
        return ms

    widened, exact = _candidate_sets(sym, e, p)
    # First pass: widened windows, so a wrong oracle support can surface as
    # nonzero slack or as inconsistency.  The short exact sequences relating
    # spinors to line bundles force [S+(t)] + [S-(t+1)] = 2^m [O(t+1)] on
    # section counts, so whenever the widened spinor list contains adjacent
    # twists next to a line candidate, the system is rank-deficient and the
    # exact oracle support is used to break the tie; that restricted solve is
    # still an overdetermined consistency check of the oracle.
    for basis, (line_cands, spin_cands) in (("hilbert", widened), ("oracle", exact)):
        result = _solve_candidates(sym, e, p, line_cands, spin_cands)
        if result.status == UNIQUE:
            return _package(sym, e, p, line_cands, spin_cands, result.solution, basis)
        if result.status != UNDERDETERMINED:
            raise DegenerateDecomposition(
                f"Hilbert solve for {sym} at e={e}, p={p} returned {result.status}"
            )
    raise DegenerateDecomposition(
        f"section counts do not determine the decomposition of the order-{e} "
        f"pushforward of {sym} at p={p} (adjacent spinor twists)"
    )


def _candidate_sets(sym, e, p):
    """(widened, exact) candidate twist lists from the support oracle."""
    pred = support_prediction(sym.kind, p, m := sym.m, e, sym.twist)
    line_lo, line_hi = pred.line_window
    spin_lo, spin_hi = pred.spinor_window
    # Windows are in the minus-t convention; candidates are plain twists.
    widened_line = [-t for t in range(line_lo - 1, line_hi + 2)]
    widened_spin = [-t for t in range(spin_lo - 1, spin_hi + 2)]
    exact_line = list(pred.line_support_twists())
    exact_spin = list(pred.spinor_support_twists())
    return (
        (sorted(widened_line), sorted(widened_spin)),
        (exact_line, exact_spin),
    )


def _hilbert_system(sym, e, p, line_cands, spin_cands):
    m = sym.m
    top = len(line_cands) + len(spin_cands) + 4
    matrix = []
    rhs = []
    for d in range(top + 1):
        row = [h0_line(m, t + d) for t in line_cands]
        row += [h0_spinor(m, t + d) for t in spin_cands]
        matrix.append(row)
        rhs.append(pushforward_hilbert(sym, e, p, d))
    return matrix, rhs


def _solve_candidates(sym, e, p, line_cands, spin_cands):
    matrix, rhs = _hilbert_system(sym, e, p, line_cands, spin_cands)
    return solve_exact(matrix, rhs)


def _package(sym, e, p, line_cands, spin_cands, mults, basis):
    m = sym.m
    if any(v < 0 for v in mults):
        raise DegenerateDecomposition(
            f"Hilbert solve for {sym} at e={e}, p={p} produced negative multiplicities"
        )
    line_mults = dict(zip(line_cands, mults[: len(line_cands)]))
    spin_mults = dict(zip(spin_cands, mults[len(line_cands):]))

    ms = SummandMultiset(sym, p, m, e, support_basis=basis)
    ms.line = {t: n for t, n in line_mults.items() if n}
    paired = sym.kind in ("O", "S")
    for t, n in spin_mults.items():
        if not n:
            continue
        if paired:
            # Symmetric sources carry S+(t) and S-(t) with equal multiplicity.
            if n % 2:
                raise DegenerateDecomposition(
                    f"odd spinor multiplicity {n} at twist {t} for symmetric source {sym}"
                )
            ms.spinor_plus[t] = n // 2
            ms.spinor_minus[t] = n // 2
        else:
            ms.unresolved_spinor[t] = n
    if ms.rank_total() != ms.rank_expected():
        raise DegenerateDecomposition(
            f"rank mismatch for {sym}: {ms.rank_total()} != {ms.rank_expected()}"
        )
    return ms


def line_multiplicity(sym, e, p, twist):
    """Multiplicity of O(twist) in the pushforward when it is determined.

    Works off the oracle-support candidate system's full rational solution
    set: the coordinate is reported only if every nullspace direction
    vanishes there, so the value is exact (given the support oracle, which
    the overdetermined system also cross-checks for consistency) even when
    the system as a whole is underdetermined.  Returns None for genuinely
    ambiguous coordinates.
    """
    m = sym.m
    if not is_prime(p) or p < 3 or m < 2:
        raise UnsupportedParameters(
            f"decomposition needs a prime p >= 3 and m >= 2, got p={p}, m={m}"
        )
    if e == 0:
        return 1 if (sym.kind == "O" and sym.twist == twist) else 0
    _, (line_cands, spin_cands) = _candidate_sets(sym, e, p)
    if twist not in line_cands:
        return 0
    matrix, rhs = _hilbert_system(sym, e, p, line_cands, spin_cands)
    solved = solve_affine(matrix, rhs)
    if solved is None:
        raise DegenerateDecomposition(
            f"oracle-support Hilbert system for {sym} at e={e}, p={p} is inconsistent"
        )
    particular, basis = solved
    idx = line_cands.index(twist)
    if any(vec[idx] != 0 for vec in basis):
        return None
    value = particular[idx]
    if value.denominator != 1 or value < 0:
        raise DegenerateDecomposition(
            f"line multiplicity of O({twist}) in F^{e}_*{sym} is not a "
            f"nonnegative integer: {value}"
        )
    return int(value)


def _free_part_hom(sign, level, line_mults, m):
    """Maps from S_sign(level) into the line bundle part of the pushforward.

    Hom(S_b(l), O(t)) in degree 0 has dimension h0_spinor(m, t - l + 1) by
    duality, independent of the sign.
    """
    total = 0
    for t, n in line_mults.items():
        total += n * h0_spinor(m, t - level + 1)
    return total


def split_spinor_multiplicities(sign, level, p, m, precomputed=None):
    """Split the spinor part of F_* S_sign(level) into S+ and S- multiplicities.

    Returns (row, multiset): row[b] is the multiplicity of S_b(level), for
    b in ('+', '-').  The only spinor twist of the pushforward must be the
    level itself (oracle-certified); the row is cross-checked against the
    Hilbert solver's total and any disagreement raises.
    """
    if level not in (-m, -m + 1):
        raise UnsupportedParameters("splitting is defined at twists -m and -m+1 only")
    source = SheafSymbol("S+" if sign == "+" else "S-", level, m)
    ms = precomputed if precomputed is not None else decompose(source, 1, p)
    if ms.source != source or ms.e != 1 or ms.p != p:
        raise ValueError("precomputed multiset does not match the request")
    spin_support = ms.spinor_support()
    if spin_support not in ((), (level,)):
        raise InconsistentMultiplicity(
            f"spinor support {spin_support} of {source} is not confined to its level"
        )
    total = ms.unresolved_spinor.get(level, 0)
    target = symbol_presentation(source, p)
    row = {}
    for b in ("+", "-"):
        probe = symbol_presentation(SheafSymbol("S" + b, level, m), p)
        hom_total = hom_into_pushforward_dim(probe, target, 1, 0)
        free_part = _free_part_hom(b, level, ms.line, m)
        val = hom_total - free_part
        if val < 0:
            raise InconsistentMultiplicity(
                f"negative multiplicity {val} for S{b}({level}) in F_*{source}"
            )
        row[b] = val
    if row["+"] + row["-"] != total:
        raise InconsistentMultiplicity(
            f"split {row} does not add up to the solver total {total} for {source}"
        )
    return row, ms


@dataclass(frozen=True)
class SpinorMultiplicityMatrix:
    """2x2 matrix of spinor-to-spinor multiplicities at one twist level.

    entries[b][a] is the multiplicity of S_b(level) inside F_* S_a(level),
    rows indexed by target sign b, columns by source sign a.
    """

    level: int
    p: int
    m: int
    entries: tuple  # ((u_+^+, u_-^+), (u_+^-, u_-^-))

    def as_lists(self):
        return [list(row) for row in self.entries]

    def is_symmetric(self):
        return self.entries[0][1] == self.entries[1][0]

    def is_nonzero(self):
        return any(any(row) for row in self.entries)

    def row_sums_by_source(self):
        """Total spinor multiplicity of F_* S_a(level) for a in ('+', '-')."""
        return (
            self.entries[0][0] + self.entries[1][0],
            self.entries[0][1] + self.entries[1][1],
        )


def spinor_multiplicity_matrix(level, p, m):
    """Compute the full 2x2 multiplicity matrix at the given twist level."""
    col_plus, _ = split_spinor_multiplicities("+", level, p, m)
    col_minus, _ = split_spinor_multiplicities("-", level, p, m)
    entries = (
        (col_plus["+"], col_minus["+"]),
        (col_plus["-"], col_minus["-"]),
    )
    return SpinorMultiplicityMatrix(level, p, m, entries)
