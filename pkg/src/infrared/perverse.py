"""Linear-algebra models of perverse sheaves on the plane.

Two equivalent pictures are implemented, both with exact rational matrices:

* ``TransportData`` (the localized model): vanishing-cycle spaces Phi_i with
  rectilinear transport matrices m[i][j] : Phi_i -> Phi_j for all pairs,
  subject to Id - m[i][i] invertible.

* ``Quiver`` (the full model): a central space Psi with maps
  a_i : Phi_i -> Psi and b_i : Psi -> Phi_i, subject to Id - b_i a_i
  invertible (equivalently Id - a_i b_i, by the Jacobson identity).

``mu`` collapses a quiver to transport data via m_ij = b_j a_i, and
``gmv_embed`` is its canonical section with Psi = direct sum of the Phi_j.
Braid generators act on both models; the transport-side action is the
mutation table, the quiver-side action twists by T_{i,Psi} = Id - a_i b_i.

Everything here is index-based: slot i means the i-th marked point in the
configuration ordering (0-based).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput, NotInvertible, NotSpherical, ShapeMismatch
from .linalg import MatQ

Q = Fraction


def jacobson(u: MatQ, v: MatQ) -> tuple[MatQ, MatQ]:
    """Both sides of (1-uv)^{-1} = 1 + u (1-vu)^{-1} v; they agree exactly."""
    n, m = u.rows, u.cols
    if v.rows != m or v.cols != n:
        raise ShapeMismatch("jacobson needs u: m->n, v: n->m")
    lhs = (MatQ.identity(n) - u @ v).inverse()
    rhs = MatQ.identity(n) + u @ (MatQ.identity(m) - v @ u).inverse() @ v
    return lhs, rhs


class TransportData:
    """Dimension vector plus the full grid of rectilinear transports."""

    __slots__ = ("dims", "m")

    def __init__(self, dims: Sequence[int], m: Sequence[Sequence[MatQ]]):
        self.dims = tuple(dims)
        self.m = tuple(tuple(row) for row in m)
        n = len(self.dims)
        if len(self.m) != n or any(len(row) != n for row in self.m):
            raise ShapeMismatch("transport grid must be N x N")
        for i in range(n):
            for j in range(n):
                blk = self.m[i][j]
                if (blk.rows, blk.cols) != (self.dims[j], self.dims[i]):
                    raise ShapeMismatch(
                        f"m[{i}][{j}] must map dim {self.dims[i]} to "
                        f"dim {self.dims[j]}"
                    )
        for i in range(n):
            try:
                (MatQ.identity(self.dims[i]) - self.m[i][i]).inverse()
            except NotInvertible:
                raise NotInvertible(f"Id - m[{i}][{i}] is singular") from None

    @property
    def n(self) -> int:
        return len(self.dims)

    def local_monodromy(self, i: int) -> MatQ:
        """T_i = Id - m_ii."""
        return MatQ.identity(self.dims[i]) - self.m[i][i]

    def replace(self, updates: dict[tuple[int, int], MatQ]) -> "TransportData":
        grid = [list(row) for row in self.m]
        for (i, j), blk in updates.items():
            grid[i][j] = blk
        return TransportData(self.dims, grid)

    def permuted(self, perm: Sequence[int]) -> "TransportData":
        """Relabel slots so that new slot s is old slot perm[s]."""
        dims = [self.dims[p] for p in perm]
        grid = [[self.m[pi][pj] for pj in perm] for pi in perm]
        return TransportData(dims, grid)

    def __eq__(self, other):
        return (
            isinstance(other, TransportData)
            and self.dims == other.dims
            and self.m == other.m
        )

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "m": [
                [[[str(x) for x in row] for row in blk.entries] for blk in mrow]
                for mrow in self.m
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "TransportData":
        return TransportData(
            data["dims"], [[MatQ(blk) for blk in row] for row in data["m"]]
        )


class Quiver:
    """Central space Psi with arms a_i: Phi_i -> Psi, b_i: Psi -> Phi_i."""

    __slots__ = ("dims", "d_psi", "a", "b")

    def __init__(self, dims, d_psi: int, a: Sequence[MatQ], b: Sequence[MatQ]):
        self.dims = tuple(dims)
        self.d_psi = d_psi
        self.a = tuple(a)
        self.b = tuple(b)
        n = len(self.dims)
        if len(self.a) != n or len(self.b) != n:
            raise ShapeMismatch("need one (a_i, b_i) pair per vertex")
        for i in range(n):
            if (self.a[i].rows, self.a[i].cols) != (d_psi, self.dims[i]):
                raise ShapeMismatch(f"a[{i}] must map dim {self.dims[i]} to Psi")
            if (self.b[i].rows, self.b[i].cols) != (self.dims[i], d_psi):
                raise ShapeMismatch(f"b[{i}] must map Psi to dim {self.dims[i]}")
        for i in range(n):
            try:
                self.t_phi(i).inverse()
            except NotInvertible:
                raise NotInvertible(f"Id - b[{i}] a[{i}] is singular") from None

    @property
    def n(self) -> int:
        return len(self.dims)

    def t_phi(self, i: int) -> MatQ:
        """T_{i,Phi} = Id - b_i a_i on Phi_i."""
        return MatQ.identity(self.dims[i]) - self.b[i] @ self.a[i]

    def t_psi(self, i: int) -> MatQ:
        """T_{i,Psi} = Id - a_i b_i on Psi."""
        return MatQ.identity(self.d_psi) - self.a[i] @ self.b[i]

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.dims == other.dims
            and self.d_psi == other.d_psi
            and self.a == other.a
            and self.b == other.b
        )

    def to_json(self) -> dict:
        mat = lambda blk: [[str(x) for x in row] for row in blk.entries]
        return {
            "dims": list(self.dims),
            "dPsi": self.d_psi,
            "a": [mat(x) for x in self.a],
            "b": [mat(x) for x in self.b],
        }

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        return Quiver(
            data["dims"],
            data["dPsi"],
            [MatQ(x) for x in data["a"]],
            [MatQ(x) for x in data["b"]],
        )


def mu(q: Quiver) -> TransportData:
    """Collapse to the localized model: m_ij = b_j a_i (diagonal included)."""
    grid = [[q.b[j] @ q.a[i] for j in range(q.n)] for i in range(q.n)]
    return TransportData(q.dims, grid)


def gmv_embed(m: TransportData) -> Quiver:
    """Canonical section of mu: Psi = direct sum of the Phi_j, a_i stacks the
    blocks m_ij, b_i is the projection onto slot i."""
    n = m.n
    a = [MatQ.from_blocks([[m.m[i][j]] for j in range(n)]) for i in range(n)]
    b = []
    for i in range(n):
        blocks = [
            MatQ.identity(m.dims[i]) if j == i else MatQ.zeros(m.dims[i], m.dims[j])
            for j in range(n)
        ]
        b.append(MatQ.from_blocks([blocks]))
    return Quiver(m.dims, sum(m.dims), a, b)


# ---------------------------------------------------------------------------
# duality


def dual_pair(a: MatQ, b: MatQ) -> tuple[MatQ, MatQ]:
    """(Phi, Psi)-diagram of the Verdier dual at one singular point:
    a' = b^t (1 - a^t b^t)^{-1},  b' = -a^t."""
    at, bt = a.T, b.T
    inner = (MatQ.identity(at.rows) - at @ bt).inverse()
    return bt @ inner, -at


def double_dual_check(a: MatQ, b: MatQ) -> bool:
    """Dualizing twice reproduces (a, b) up to the isomorphism with
    e_Psi = Id and e_Phi = -(1-ba)^{-1}.

    Composing the duality formulas gives the closed forms
    a'' = -a (1-ba) and b'' = -(1-ba)^{-1} b, and the intertwining squares
    a'' = e_Psi a e_Phi^{-1}, b'' = e_Phi b e_Psi^{-1} commute exactly.
    """
    a1, b1 = dual_pair(a, b)
    a2, b2 = dual_pair(a1, b1)
    t_phi = MatQ.identity(b.rows) - b @ a
    if a2 != -(a @ t_phi) or b2 != -(t_phi.inverse() @ b):
        return False
    e_phi = -t_phi.inverse()
    return a2 == a @ e_phi.inverse() and b2 == e_phi @ b


# ---------------------------------------------------------------------------
# bilinear forms, spherical maps, Calabi-Yau conditions


@dataclass(frozen=True)
class BilinearData:
    b_phi: tuple[MatQ, ...]
    b_psi: MatQ


def serre_operator(B: MatQ) -> MatQ:
    """S_B = B^{-1} B^t, so that B(v, v') = B(v', S_B v)."""
    return B.inverse() @ B.T


def right_adjoint(f: MatQ, b_src: MatQ, b_tgt: MatQ) -> MatQ:
    """f* = B_src^{-1} f^t B_tgt for f: src -> tgt."""
    return b_src.inverse() @ f.T @ b_tgt


def left_adjoint(f: MatQ, b_src: MatQ, b_tgt: MatQ) -> MatQ:
    """*f = (B_src^t)^{-1} f^t B_tgt^t."""
    return b_src.T.inverse() @ f.T @ b_tgt.T


def adjoints(f: MatQ, b_src: MatQ, b_tgt: MatQ) -> tuple[MatQ, MatQ]:
    return right_adjoint(f, b_src, b_tgt), left_adjoint(f, b_src, b_tgt)


def is_isometry(t: MatQ, B: MatQ) -> bool:
    return t.T @ B @ t == B


@dataclass(frozen=True)
class SphericalReport:
    s1: bool
    s2: bool
    t_psi_invertible: bool
    t_phi_isometry: bool
    t_psi_isometry: bool
    identity_c: bool
    identity_d: bool

    @property
    def spherical(self) -> bool:
        return self.s1 and self.s2

    @property
    def package_holds(self) -> bool:
        return (
            self.t_psi_invertible
            and self.t_phi_isometry
            and self.t_psi_isometry
            and self.identity_c
            and self.identity_d
        )


def spherical_report(a: MatQ, b_phi: MatQ, b_psi: MatQ) -> SphericalReport:
    """Decide the two spherical axioms and the derived package:

    (S1) T_Phi = 1 - (a*) a invertible,
    (S2) a* + (*a) - (*a) a a* = 0,
    and then: T_Psi = 1 - a (a*) invertible, both twists isometries,
    (c) *a = -T_Phi^{-1} (a*), (d) (*a) a a* = (a*) a (*a).
    """
    ra = right_adjoint(a, b_phi, b_psi)
    la = left_adjoint(a, b_phi, b_psi)
    t_phi = MatQ.identity(a.cols) - ra @ a
    t_psi = MatQ.identity(a.rows) - a @ ra
    try:
        t_phi_inv = t_phi.inverse()
        s1 = True
    except NotInvertible:
        t_phi_inv = None
        s1 = False
    s2 = (ra + la - la @ a @ ra).is_zero()
    try:
        t_psi.inverse()
        t_psi_inv_ok = True
    except NotInvertible:
        t_psi_inv_ok = False
    identity_c = t_phi_inv is not None and la == -(t_phi_inv @ ra)
    identity_d = la @ a @ ra == ra @ a @ la
    return SphericalReport(
        s1,
        s2,
        t_psi_inv_ok,
        is_isometry(t_phi, b_phi),
        is_isometry(t_psi, b_psi),
        identity_c,
        identity_d,
    )


def cy_check(a: MatQ, b_phi: MatQ, b_psi: MatQ, parity: str) -> bool:
    """Calabi-Yau symmetry of a spherical map.

    parity "even": B_Psi symmetric and T_Phi = -S_{B_Phi};
    parity "odd":  B_Psi antisymmetric and T_Phi = +S_{B_Phi}.
    """
    if parity not in ("even", "odd"):
        raise InvalidInput("parity must be 'even' or 'odd'")
    rep = spherical_report(a, b_phi, b_psi)
    if not rep.spherical:
        raise NotSpherical("cy_check needs a spherical map")
    ra = right_adjoint(a, b_phi, b_psi)
    t_phi = MatQ.identity(a.cols) - ra @ a
    s = serre_operator(b_phi)
    if parity == "even":
        return b_psi == b_psi.T and t_phi == -s
    return b_psi == -(b_psi.T) and t_phi == s


# ---------------------------------------------------------------------------
# braid actions


def _gen_index(g: int, n: int) -> tuple[int, bool]:
    """Decode a signed generator: +k / -k for 1 <= k <= n-1; returns the
    0-based left slot and whether the generator is inverse."""
    if g == 0 or abs(g) > n - 1:
        raise InvalidInput(f"braid generator {g} out of range for N={n}")
    return abs(g) - 1, g < 0


def braid_act_quiver(q: Quiver, g: int) -> Quiver:
    """Twist generator tau_k (g=+k) or its inverse (g=-k) on the quiver:
    tau_k swaps slots k, k+1, replacing the new slot-k arm by
    (T_{k,Psi} a_{k+1},  b_{k+1} T_{k,Psi}^{-1})."""
    i, inverse = _gen_index(g, q.n)
    dims = list(q.dims)
    a, b = list(q.a), list(q.b)
    if not inverse:
        t = q.t_psi(i)
        t_inv = t.inverse()
        new_ai, new_bi = t @ a[i + 1], b[i + 1] @ t_inv
        new_ai1, new_bi1 = a[i], b[i]
    else:
        t = q.t_psi(i + 1)
        t_inv = t.inverse()
        new_ai, new_bi = a[i + 1], b[i + 1]
        new_ai1, new_bi1 = t_inv @ a[i], b[i] @ t
    dims[i], dims[i + 1] = dims[i + 1], dims[i]
    a[i], a[i + 1] = new_ai, new_ai1
    b[i], b[i + 1] = new_bi, new_bi1
    return Quiver(dims, q.d_psi, a, b)


def braid_act_transport(m: TransportData, g: int) -> TransportData:
    """Mutation of transport data under tau_k / tau_k^{-1}.

    The forward table (slots i = k-1, i+1 swapped, T_i = Id - m_ii):
      m'_{v,j} = m_{v,j}                          v, j not in {i, i+1}
      m'_{v,i+1} = m_{v,i}                        v not in {i, i+1}
      m'_{i+1,j} = m_{i,j}                        j not in {i, i+1}
      m'_{v,i} = m_{v,i+1} + m_{i,i+1} T_i^{-1} m_{v,i}
      m'_{i,j} = m_{i+1,j} - m_{i,j} m_{i+1,i}
      m'_{i,i+1} = T_i m_{i+1,i}
      m'_{i+1,i} = m_{i,i+1} T_i^{-1}
      m'_{i,i} = m_{i+1,i+1},  m'_{i+1,i+1} = m_{i,i}
    The inverse table is obtained by solving the forward relations.
    """
    i, inverse = _gen_index(g, m.n)
    n = m.n
    old = m.m
    dims = list(m.dims)
    dims[i], dims[i + 1] = dims[i + 1], dims[i]
    grid = [[None] * n for _ in range(n)]
    others = [v for v in range(n) if v not in (i, i + 1)]
    if not inverse:
        t = MatQ.identity(m.dims[i]) - old[i][i]
        t_inv = t.inverse()
        for v in others:
            for j in others:
                grid[v][j] = old[v][j]
            grid[v][i + 1] = old[v][i]
            grid[i + 1][v] = old[i][v]
            grid[v][i] = old[v][i + 1] + old[i][i + 1] @ t_inv @ old[v][i]
            grid[i][v] = old[i + 1][v] - old[i][v] @ old[i + 1][i]
        grid[i][i + 1] = t @ old[i + 1][i]
        grid[i + 1][i] = old[i][i + 1] @ t_inv
        grid[i][i] = old[i + 1][i + 1]
        grid[i + 1][i + 1] = old[i][i]
    else:
        t = MatQ.identity(m.dims[i + 1]) - old[i + 1][i + 1]
        t_inv = t.inverse()
        for v in others:
            for j in others:
                grid[v][j] = old[v][j]
            grid[v][i] = old[v][i + 1]
            grid[i][v] = old[i + 1][v]
            grid[v][i + 1] = old[v][i] - old[i + 1][i] @ old[v][i + 1]
            grid[i + 1][v] = old[i][v] + old[i + 1][v] @ t_inv @ old[i][i + 1]
        grid[i][i + 1] = old[i + 1][i] @ t
        grid[i + 1][i] = t_inv @ old[i][i + 1]
        grid[i][i] = old[i + 1][i + 1]
        grid[i + 1][i + 1] = old[i][i]
    return TransportData(dims, grid)


def braid_act_word(obj, word: Sequence[int]):
    """Apply a word of signed generators left to right."""
    act = braid_act_quiver if isinstance(obj, Quiver) else braid_act_transport
    for g in word:
        obj = act(obj, g)
    return obj


# ---------------------------------------------------------------------------
# iterated transport / Vassiliev bookkeeping


def straight_line_vassiliev(q: Quiver, marked: Sequence[int]) -> tuple[MatQ, MatQ]:
    """Both sides of the alternating-sum identity for a straight path
    through the given marked slots.

    Left: a_{i_k} m_{i_{k-1} i_k} ... m_{i_1 i_2} b_{i_1} with m_ij = b_j a_i.
    Right: the alternating sum over bends, where passing a point with
    epsilon = 0 contributes Id and epsilon = 1 contributes T_{i,Psi}
    (the unique convention making k = 1 the Picard-Lefschetz identity).
    """
    if not marked:
        raise InvalidInput("need at least one marked point")
    lhs = q.b[marked[0]]
    for prev, cur in zip(marked, marked[1:]):
        lhs = (q.b[cur] @ q.a[prev]) @ lhs
    lhs = q.a[marked[-1]] @ lhs
    rhs = MatQ.zeros(q.d_psi, q.d_psi)
    for eps in itertools.product((0, 1), repeat=len(marked)):
        term = MatQ.identity(q.d_psi)
        for e, idx in zip(eps, marked):
            factor = q.t_psi(idx) if e == 1 else MatQ.identity(q.d_psi)
            term = factor @ term
        sign = -1 if sum(eps) % 2 else 1
        rhs = rhs + term.scale(sign)
    return lhs, rhs
