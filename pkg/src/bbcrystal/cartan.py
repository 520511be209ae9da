"""Borcherds-Cartan data: validation, index classification, weights and pairings.

A datum is an even symmetrizable Borcherds-Cartan matrix A with a positive
integer symmetrizer D = diag(s_i).  Indices split into real (a_ii = 2),
isotropic (a_ii = 0) and non-isotropic imaginary (a_ii <= -2).  Generator
labels (i, l) run over I^inf = (I^re x {1}) u (I^im x Z_{>0}); the artifact
enumerates the finite truncation with l <= H.

Weights are tracked relative to a declared dominant base lambda as a pair
(dom, offset): dom_j = <h_j, lambda> and offset = k with weight
lambda - sum_i k_i alpha_i.  All computations in this package read weights
only through <h_i, .> and root offsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

RE, IM, ISO = "re", "im_noniso", "iso"


class InvalidDatum(ValueError):
    """The matrix fails one of the four Borcherds-Cartan conditions."""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


class BCDatum:
    """An even symmetrizable Borcherds-Cartan matrix with symmetrizer."""

    def __init__(self, A, D, names=None, check=True):
        self.A = tuple(tuple(int(x) for x in row) for row in A)
        self.D = tuple(int(x) for x in D)
        self.n = len(self.A)
        self.names = tuple(names) if names else tuple(str(i) for i in range(self.n))
        if check:
            report = self.validate()
            if not report.ok:
                raise InvalidDatum("; ".join(report.violations))

    def validate(self) -> ValidationReport:
        violations = []
        if any(len(row) != self.n for row in self.A):
            violations.append("matrix is not square")
            return ValidationReport(False, tuple(violations))
        if len(self.D) != self.n or any(s <= 0 for s in self.D):
            violations.append("symmetrizer D must list positive integers, one per index")
        for i in range(self.n):
            aii = self.A[i][i]
            if aii != 2 and (aii > 0 or aii % 2 != 0):
                violations.append(f"(i) a_{i}{i} = {aii} not in {{2, 0, -2, -4, ...}}")
        for i in range(self.n):
            for j in range(self.n):
                if i != j and self.A[i][j] > 0:
                    violations.append(f"(ii) a_{i}{j} = {self.A[i][j]} > 0 off-diagonal")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.A[i][j] == 0) != (self.A[j][i] == 0):
                    violations.append(f"(iii) a_{i}{j} = 0 but a_{j}{i} != 0")
        if len(self.D) == self.n and all(s > 0 for s in self.D):
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    if self.D[i] * self.A[i][j] != self.D[j] * self.A[j][i]:
                        violations.append(f"(iv) DA not symmetric at ({i},{j})")
        return ValidationReport(not violations, tuple(violations))

    def tag(self, i):
        aii = self.A[i][i]
        if aii == 2:
            return RE
        if aii == 0:
            return ISO
        return IM

    def is_real(self, i):
        return self.A[i][i] == 2

    def is_imaginary(self, i):
        return self.A[i][i] <= 0

    def is_isotropic(self, i):
        return self.A[i][i] == 0

    def iinf_up_to(self, height):
        """(i, l) labels with l <= height for imaginary i, l = 1 for real i."""
        if height < 1:
            raise ValueError("height must be >= 1")
        out = []
        for i in range(self.n):
            if self.is_real(i):
                out.append((i, 1))
            else:
                out.extend((i, l) for l in range(1, height + 1))
        return out

    # -- weights ------------------------------------------------------------

    def pairing(self, i, w: "Weight"):
        """<h_i, w> for a (dom, offset) weight."""
        return w.dom[i] - sum(k * self.A[i][j] for j, k in enumerate(w.offset))

    def pairing_offset(self, i, dom, offset):
        return dom[i] - sum(k * self.A[i][j] for j, k in enumerate(offset))

    def bilinear(self, i, w: "Weight"):
        """(alpha_i, w) = s_i <h_i, w>."""
        return self.D[i] * self.pairing(i, w)

    def weight(self, dom=None, offset=None) -> "Weight":
        dom = tuple(dom) if dom is not None else (0,) * self.n
        offset = tuple(offset) if offset is not None else (0,) * self.n
        if len(dom) != self.n or len(offset) != self.n:
            raise ValueError("dom and offset must have one entry per index")
        return Weight(dom, offset)

    # -- serialization -------------------------------------------------------

    @staticmethod
    def from_json(obj) -> "BCDatum":
        return BCDatum(obj["A"], obj["D"], names=obj.get("names"))

    @staticmethod
    def load(path) -> "BCDatum":
        with open(path) as fh:
            return BCDatum.from_json(json.load(fh))

    def to_json(self):
        return {"A": [list(r) for r in self.A], "D": list(self.D), "names": list(self.names)}

    def __repr__(self):
        return f"BCDatum(A={self.A}, D={self.D})"


@dataclass(frozen=True)
class Weight:
    """lambda_base - sum_i offset_i alpha_i, with dom_j = <h_j, lambda_base>."""

    dom: tuple[int, ...]
    offset: tuple[int, ...]

    @property
    def height(self):
        return sum(self.offset)

    def lower(self, i, l=1):
        off = list(self.offset)
        off[i] += l
        return Weight(self.dom, tuple(off))

    def raise_(self, i, l=1):
        off = list(self.offset)
        off[i] -= l
        if off[i] < 0:
            raise ValueError("raised weight leaves the cone below lambda")
        return Weight(self.dom, tuple(off))

    def dominated(self):
        """True when the weight lies at or below lambda_base."""
        return all(k >= 0 for k in self.offset)


def offset_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def offset_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))
