"""Matched pairs of Novikov and APN algebras and their sum algebras.

Both families of compatibility conditions are symmetric under exchanging
the two algebras (and their actions), so each table lists one half and
is evaluated on the pair and on its mirror.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import APNAlgebra, NovikovAlgebra
from .multilinear import act, basis_vars, prod
from .report import IdentityReport
from .representation import (APNRep, NovikovRep, check_apn_rep, check_novikov_rep,
                             sum_structure)


@dataclass(frozen=True, eq=False)
class NovikovMatchedPair:
    A: NovikovAlgebra
    B: NovikovAlgebra
    rep_A: NovikovRep   # A acting on B
    rep_B: NovikovRep   # B acting on A

    def __post_init__(self):
        if self.rep_A.l.shape != (self.A.dim, self.B.dim, self.B.dim):
            raise ValueError("rep_A must be A -> End(B)")
        if self.rep_B.l.shape != (self.B.dim, self.A.dim, self.A.dim):
            raise ValueError("rep_B must be B -> End(A)")

    def swapped(self) -> "NovikovMatchedPair":
        return NovikovMatchedPair(self.B, self.A, self.rep_B, self.rep_A)


@dataclass(frozen=True, eq=False)
class APNMatchedPair:
    A1: APNAlgebra
    A2: APNAlgebra
    rep1: APNRep        # A1 acting on A2
    rep2: APNRep        # A2 acting on A1

    def __post_init__(self):
        if self.rep1.l_succ.shape != (self.A1.dim, self.A2.dim, self.A2.dim):
            raise ValueError("rep1 must be A1 -> End(A2)")
        if self.rep2.l_succ.shape != (self.A2.dim, self.A1.dim, self.A1.dim):
            raise ValueError("rep2 must be A2 -> End(A1)")

    def swapped(self) -> "APNMatchedPair":
        return APNMatchedPair(self.A2, self.A1, self.rep2, self.rep1)


# ---------------------------------------------------------------- Novikov


def _novikov_half(mp: NovikovMatchedPair) -> dict:
    F = mp.A.field
    n, m = mp.A.dim, mp.B.dim
    x, y, a = basis_vars(F, [n, n, m])

    def o(u, v):
        return prod(F, mp.A.op, u, v)

    def f(fam):
        return lambda s, w: act(F, fam, s, w)

    lA, rA, lB, rB = f(mp.rep_A.l), f(mp.rep_A.r), f(mp.rep_B.l), f(mp.rep_B.r)
    return {
        1: lB(a, o(x, y)) + lB(lA(x, a) - rA(x, a), y) - o(lB(a, x) - rB(a, x), y)
           - rB(rA(y, a), x) - o(x, lB(a, y)),
        2: rB(a, o(x, y) - o(y, x)) - rB(lA(y, a), x) + rB(lA(x, a), y) - o(x, rB(a, y)) + o(y, rB(a, x)),
        5: o(lB(a, x), y) + lB(rA(x, a), y) - o(lB(a, y), x) - lB(rA(y, a), x),
        6: o(rB(a, x), y) + lB(lA(x, a), y) - rB(a, o(x, y)),
    }


_NM_MIRROR = {1: 3, 2: 4, 5: 7, 6: 8}


def novikov_matched_pair_compat(mp: NovikovMatchedPair) -> IdentityReport:
    """Only the eight compatibility conditions Nm1..Nm8."""
    out = IdentityReport(mp.A.field)
    for pair, tags, shape in ((mp, {k: k for k in _NM_MIRROR}, (mp.A.dim, mp.A.dim, mp.B.dim)),
                              (mp.swapped(), _NM_MIRROR, (mp.B.dim, mp.B.dim, mp.A.dim))):
        for k, res in _novikov_half(pair).items():
            out.add(f"Nm{tags[k]}", res, shape)
    return out


def check_novikov_matched_pair(mp: NovikovMatchedPair) -> IdentityReport:
    out = IdentityReport(mp.A.field)
    out.extend(check_novikov_rep(mp.A, mp.rep_A), "A:")
    out.extend(check_novikov_rep(mp.B, mp.rep_B), "B:")
    return out.extend(novikov_matched_pair_compat(mp))


def build_novikov_sum(mp: NovikovMatchedPair) -> NovikovAlgebra:
    F = mp.A.field
    return NovikovAlgebra(F, sum_structure(F, mp.A.op, mp.B.op, mp.rep_A.l, mp.rep_A.r,
                                           mp.rep_B.l, mp.rep_B.r))


# ---------------------------------------------------------------- APN


def _apn_half(mp: APNMatchedPair) -> list:
    F = mp.A1.field
    n, m = mp.A1.dim, mp.A2.dim
    x, y, a = basis_vars(F, [n, n, m])

    def op(c):
        return lambda u, v: prod(F, c, u, v)

    def f(fam):
        return lambda s, w: act(F, fam, s, w)

    sc, pr, o = op(mp.A1.succ), op(mp.A1.prec), op(mp.A1.circ)
    r1, r2 = mp.rep1, mp.rep2
    ls1, rs1, lp1, rp1 = f(r1.l_succ), f(r1.r_succ), f(r1.l_prec), f(r1.r_prec)
    lc1, rc1 = f(r1.l_circ), f(r1.r_circ)
    ls2, rs2, lp2, rp2 = f(r2.l_succ), f(r2.r_succ), f(r2.l_prec), f(r2.r_prec)
    lc2, rc2 = f(r2.l_circ), f(r2.r_circ)

    return [
        rs2(a, o(x, y) - o(y, x))
        - (sc(y, rs2(a, x)) - sc(x, rs2(a, y)) + rs2(lp1(x, a), y) - rs2(lp1(y, a), x)),

        sc(rc2(a, x) - lc2(a, x), y) + ls2(lc1(x, a) - rc1(x, a), y)
        - (ls2(a, sc(x, y)) - sc(x, ls2(a, y)) - rs2(rs1(y, a), x)),

        rs2(a, o(x, y)) + pr(rs2(a, x), y) + lp2(ls1(x, a), y),

        sc(rc2(a, x), y) + ls2(ls1(x, a), y) + rp2(a, sc(x, y)),

        sc(lc2(a, x), y) + ls2(rc1(x, a), y) + pr(ls2(a, y), x) + lp2(rs1(y, a), x),

        rp2(a, pr(x, y)) - pr(rp2(a, x), y) - lp2(lp1(x, a), y),

        pr(lp2(a, x), y) + lp2(rp1(x, a), y) - pr(lp2(a, y), x) - lp2(rp1(y, a), x),

        rp2(a, o(x, y) - o(y, x))
        - (sc(x, rc2(a, y)) - sc(y, rc2(a, x)) + rs2(lc1(y, a), x) - rs2(lc1(x, a), y)),

        pr(rc2(a, x) - lc2(a, x), y) - lp2(lc1(x, a) - rc1(x, a), y)
        - (sc(x, lc2(a, y)) + rs2(rc1(y, a), x) - ls2(a, o(x, y))),

        pr(x, rc2(a, y)) + rp2(lc1(y, a), x)
        - (rp2(a, sc(y, x) - sc(x, y)) - sc(y, rp2(a, x)) - rs2(lp1(x, a), y)),

        pr(x, lc2(a, y)) + rp2(rc1(y, a), x)
        - (pr(ls2(a, x) - rp2(a, x), y) + lp2(rs1(x, a) - lp1(x, a), y) - ls2(a, pr(x, y))),

        lp2(a, o(x, y))
        - (pr(rs2(a, x) - lp2(a, x), y) + lp2(ls1(x, a) - rp1(x, a), y)
           - sc(x, lp2(a, y)) - rs2(rp1(y, a), x)),
    ]


def apn_matched_pair_compat(mp: APNMatchedPair) -> IdentityReport:
    """The 24 compatibility conditions, tagged M0.1 .. M0.24."""
    out = IdentityReport(mp.A1.field)
    for offset, pair in ((0, mp), (12, mp.swapped())):
        shape = (pair.A1.dim, pair.A1.dim, pair.A2.dim)
        for k, res in enumerate(_apn_half(pair), start=1):
            out.add(f"M0.{k + offset}", res, shape)
    return out


def check_apn_matched_pair(mp: APNMatchedPair) -> IdentityReport:
    out = IdentityReport(mp.A1.field)
    out.extend(check_apn_rep(mp.A1, mp.rep1), "A1:")
    out.extend(check_apn_rep(mp.A2, mp.rep2), "A2:")
    return out.extend(apn_matched_pair_compat(mp))


def build_apn_sum(mp: APNMatchedPair) -> APNAlgebra:
    F = mp.A1.field
    r1, r2 = mp.rep1, mp.rep2
    succ = sum_structure(F, mp.A1.succ, mp.A2.succ, r1.l_succ, r1.r_succ, r2.l_succ, r2.r_succ)
    prec = sum_structure(F, mp.A1.prec, mp.A2.prec, r1.l_prec, r1.r_prec, r2.l_prec, r2.r_prec)
    return APNAlgebra(F, succ, prec)


def associated_novikov_matched_pair(mp: APNMatchedPair) -> NovikovMatchedPair:
    F = mp.A1.field
    return NovikovMatchedPair(mp.A1.associated(), mp.A2.associated(),
                              NovikovRep(F, mp.rep1.l_circ, mp.rep1.r_circ),
                              NovikovRep(F, mp.rep2.l_circ, mp.rep2.r_circ))


def split_apn(B: APNAlgebra, n1: int) -> APNMatchedPair:
    """Read off the pair of actions from an algebra on span(e_0..e_{n1-1}) (+) rest.

    The result is a matched pair exactly when both spans are subalgebras
    and B is APN; the converse direction of the sum construction.
    """
    F = B.field

    def parts(c):
        c1 = c[:n1, :n1, :n1]
        c2 = c[n1:, n1:, n1:]
        l1 = c[:n1, n1:, n1:].transpose(0, 2, 1)
        r1 = c[n1:, :n1, n1:].transpose(1, 2, 0)
        l2 = c[n1:, :n1, :n1].transpose(0, 2, 1)
        r2 = c[:n1, n1:, :n1].transpose(1, 2, 0)
        return c1, c2, l1, r1, l2, r2

    s1, s2, ls1, rs1, ls2, rs2 = parts(B.succ)
    p1, p2, lp1, rp1, lp2, rp2 = parts(B.prec)
    return APNMatchedPair(APNAlgebra(F, s1, p1), APNAlgebra(F, s2, p2),
                          APNRep(F, ls1, rs1, lp1, rp1), APNRep(F, ls2, rs2, lp2, rp2))


def split_novikov(N: NovikovAlgebra, n1: int) -> NovikovMatchedPair:
    F = N.field
    c = N.op
    return NovikovMatchedPair(
        NovikovAlgebra(F, c[:n1, :n1, :n1]), NovikovAlgebra(F, c[n1:, n1:, n1:]),
        NovikovRep(F, c[:n1, n1:, n1:].transpose(0, 2, 1), c[n1:, :n1, n1:].transpose(1, 2, 0)),
        NovikovRep(F, c[n1:, :n1, :n1].transpose(0, 2, 1), c[:n1, n1:, :n1].transpose(1, 2, 0)))


apn_mp_to_novikov_mp = associated_novikov_matched_pair
