"""Minimum distance, the socle-hat upper bound, and the Singleton comparison.

For a reversal-closed code C with socle soc(C), the minimum distance obeys

    d(C) <= 2 d(hat(soc C))        when soc(C) <= I,
    d(C) <= 2 d(hat(soc C)) + 1    otherwise,

where hat keeps the first floor(n/2) coordinates.  When C itself sits
inside the image space I the first case is exact: d(C) = 2 d(hat(C)).
The bound is undefined when hat kills the socle entirely, which happens
only for odd n with socle spanned by the middle unit vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HatDegenerate, LengthMismatch, TooLarge, ZeroCode
from .gf4 import GfVector, hat_word
from .reverse import ReverseSpace, ReversibleCode
from .subspace import Subspace

DEFAULT_SWEEP_CEILING = 2**24

SOC_IN_I = "SOC_IN_I"
SOC_NOT_IN_I = "SOC_NOT_IN_I"


def hamming_distance(u: GfVector, v: GfVector) -> int:
    if u.n != v.n:
        raise LengthMismatch(f"lengths {u.n} and {v.n}")
    return (u + v).weight()


def _sweep_limit(ceiling: int | None) -> int:
    from .enumerator import active_ceiling

    return active_ceiling(DEFAULT_SWEEP_CEILING) if ceiling is None else ceiling


def min_distance(space: Subspace, ceiling: int | None = None) -> int:
    """Minimum weight over the nonzero codewords, by full span sweep."""
    if space.dim == 0:
        raise ZeroCode("the zero code has no minimum distance")
    if 4**space.dim > _sweep_limit(ceiling):
        raise TooLarge(
            f"{4 ** space.dim} codewords exceed the sweep ceiling"
        )
    best = space.n + 1
    for v in space.vectors():
        if v.is_zero():
            continue
        w = v.weight()
        if w < best:
            best = w
            if best == 1:
                break
    return best


def hat_image(space: Subspace) -> Subspace:
    return Subspace.from_words(space.n, (hat_word(w, space.n) for w in space.rows))


def singleton_bound(n: int, k: int) -> int:
    return n - k + 1


@dataclass
class DistanceReport:
    n: int
    k: int
    t: int
    s: int
    d_min: int
    bound_singleton: int
    subset_of_i: bool
    hat_degenerate: bool
    d_socle_hat: int | None = None
    bound_socle: int | None = None
    bound_case: str | None = None
    tighter_than_singleton: bool | None = None
    d_hat_image: int | None = None
    identity_2dhat: bool | None = None

    def to_lines(self) -> list[str]:
        lines = [
            "report=distance",
            f"n={self.n} k={self.k} t={self.t} s={self.s}",
            f"d_min={self.d_min}",
        ]
        if self.hat_degenerate:
            lines.append("hat_degenerate=true")
        else:
            lines.append(f"d_socle_hat={self.d_socle_hat}")
            lines.append(f"bound_socle={self.bound_socle}")
            lines.append(f"bound_case={self.bound_case}")
        lines.append(f"bound_singleton={self.bound_singleton}")
        if self.tighter_than_singleton is not None:
            lines.append(
                f"tighter_than_singleton={str(self.tighter_than_singleton).lower()}"
            )
        lines.append(f"subset_of_i={str(self.subset_of_i).lower()}")
        if self.subset_of_i:
            lines.append(f"d_hat_image={self.d_hat_image}")
            lines.append(f"identity_2dhat={str(self.identity_2dhat).lower()}")
        return lines

    def to_dict(self) -> dict:
        out = {
            "report": "distance",
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "s": self.s,
            "d_min": self.d_min,
            "bound_singleton": self.bound_singleton,
            "subset_of_i": self.subset_of_i,
            "hat_degenerate": self.hat_degenerate,
        }
        if not self.hat_degenerate:
            out["d_socle_hat"] = self.d_socle_hat
            out["bound_socle"] = self.bound_socle
            out["bound_case"] = self.bound_case
            out["tighter_than_singleton"] = self.tighter_than_singleton
        if self.subset_of_i:
            out["d_hat_image"] = self.d_hat_image
            out["identity_2dhat"] = self.identity_2dhat
        return out


def socle_upper_bound(
    code: ReversibleCode, rs: ReverseSpace, ceiling: int | None = None
) -> tuple[int, int, str]:
    """(d(hat(soc C)), bound, case).  Raises HatDegenerate when hat(soc C) = 0."""
    if code.dim == 0:
        raise ZeroCode("the zero code has no distance bound")
    hat_soc = hat_image(code.socle)
    if hat_soc.dim == 0:
        raise HatDegenerate(
            "the socle collapses under hat; the bound is undefined"
        )
    d_hat = min_distance(hat_soc, ceiling)
    if rs.image.contains_space(code.socle):
        return d_hat, 2 * d_hat, SOC_IN_I
    return d_hat, 2 * d_hat + 1, SOC_NOT_IN_I


def distance_report(
    code: ReversibleCode, rs: ReverseSpace, ceiling: int | None = None
) -> DistanceReport:
    d = min_distance(code.space, ceiling)
    subset_of_i = rs.image.contains_space(code.space)
    report = DistanceReport(
        n=code.n,
        k=code.dim,
        t=code.t,
        s=code.s,
        d_min=d,
        bound_singleton=singleton_bound(code.n, code.dim),
        subset_of_i=subset_of_i,
        hat_degenerate=False,
    )
    try:
        d_hat, bound, case = socle_upper_bound(code, rs, ceiling)
        report.d_socle_hat = d_hat
        report.bound_socle = bound
        report.bound_case = case
        report.tighter_than_singleton = bound < report.bound_singleton
    except HatDegenerate:
        report.hat_degenerate = True
    if subset_of_i:
        report.d_hat_image = min_distance(hat_image(code.space), ceiling)
        report.identity_2dhat = d == 2 * report.d_hat_image
    return report
