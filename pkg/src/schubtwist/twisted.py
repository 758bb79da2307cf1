"""Automorphism and deformation criteria for E = G x_B F.

For a fiber F known through the B-characters of H^0(F, Theta_F) and
H^1(F, Theta_F):

* Aut^0(E) = G as soon as H^0(G/B, H^0(F, Theta_F)) = 0; in general
  Lie(Aut^0(E)) = H^0(G/B, H^0(F, Theta_F)) + g as G-modules.
* If H^j(F, O_F) = 0 for j >= 1 and H^j(G/B, H^0(F, Theta_F)) = 0 for
  j = 1, 2, then H^1(E, Theta_E) = H^0(G/B, H^1(F, Theta_F)).

Conclusions are character-level; nothing here builds a group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .charring import FormalCharacter, GradedCharacter
from .cohomology import h_flag_modules
from .strings import GREEDY
from .tangent import BWeightModule, adjoint_weights, bsdh_tangent, p_J_weights, schubert_stabilizer
from .weyl import from_word, longest_element

CRITERION_AUT = "Aut0(G x_B F) = G when H^0(G/B, H^0(F, Theta_F)) = 0"
CRITERION_H1 = (
    "H^1(G x_B F, Theta) = H^0(G/B, H^1(F, Theta_F)) when H^j(F, O_F) = 0 (j >= 1) "
    "and H^j(G/B, H^0(F, Theta_F)) = 0 (j = 1, 2)"
)
SPLITTING = "Lie(Aut0(E)) = H^0(G/B, H^0(F, Theta_F)) + g (split extension of G-modules)"
SCHUBERT_AUT = "simply-laced, w != w0: H^j(G/B, H^0(X(w), Theta)) = 0 for all j, hence Aut0(G x_B X(w)) = G"
SCHUBERT_H1 = "simply-laced, w != w0: H^1(G x_B X(w), Theta) = H^0(G/B, H^1(X(w), Theta_X(w)))"
SCHUBERT_W0 = "w = w0: G x_B X(w0) = G/B x G/B, Aut0 = G x G, higher tangent cohomology vanishes"
KERNEL_ASSUMPTION = (
    "assumed, not computed: the kernel of p_I(w) -> H^0(X(w), Theta) contributes no cohomology on G/B"
)
BSDH_CLAIM = "simply-laced: Aut0(G x_B Z(w,i)) = G and H^j(G x_B Z(w,i), Theta) = 0 for j >= 1"


class TwistedError(ValueError):
    pass


@dataclass(frozen=True)
class ExactlyG:
    def to_json(self):
        return "G"


@dataclass(frozen=True)
class Inconclusive:
    kernel_character: FormalCharacter
    label: str = ""

    def to_json(self):
        out = {"kernel_character": self.kernel_character.to_json()}
        if self.label:
            out["label"] = self.label
        return {"inconclusive": out}


@dataclass(frozen=True)
class NotDetermined:
    reason: str

    def to_json(self):
        return {"not_determined": self.reason}


@dataclass(frozen=True)
class FiberData:
    h0_theta: BWeightModule
    h1_theta: BWeightModule | None = None
    structure_vanishing: bool = False


@dataclass(frozen=True)
class TwistedReport:
    aut0: object
    h1_twisted: object
    h_gb_of_h0: GradedCharacter | None = None
    lie_aut0: FormalCharacter | None = None
    h0_gb_of_h1: GradedCharacter | None = None
    notes: tuple = ()
    citations: tuple = ()
    ingredients: dict = field(default_factory=dict)
    h1_requested: bool = True

    @property
    def certified(self) -> bool:
        """Every requested conclusion was established by exact computation."""
        aut_ok = isinstance(self.aut0, ExactlyG) or (
            isinstance(self.aut0, Inconclusive) and self.h_gb_of_h0 is not None and self.h_gb_of_h0.exact
        )
        h1_ok = not self.h1_requested or not isinstance(self.h1_twisted, NotDetermined)
        return aut_ok and h1_ok

    def to_json(self):
        h1 = self.h1_twisted.to_json() if isinstance(self.h1_twisted, NotDetermined) else self.h1_twisted.to_json()
        out = {"aut0": self.aut0.to_json(), "h1": h1, "citations": list(self.citations)}
        if self.h_gb_of_h0 is not None:
            out["h_gb_of_h0"] = self.h_gb_of_h0.to_json()
        if self.lie_aut0 is not None:
            out["lie_aut0"] = {"character": self.lie_aut0.to_json(), "dimension": self.lie_aut0.dimension()}
        if self.h0_gb_of_h1 is not None:
            out["h0_gb_of_h1"] = self.h0_gb_of_h1.to_json()
        if self.ingredients:
            out["ingredients"] = {k: v.to_json() if hasattr(v, "to_json") else v for k, v in self.ingredients.items()}
        if self.notes:
            out["notes"] = list(self.notes)
        out["certified"] = self.certified
        return out


def check_twisted(rs, F: FiberData, mode=GREEDY) -> TwistedReport:
    gb0 = h_flag_modules(rs, F.h0_theta.char, mode)
    g = adjoint_weights(rs).char
    notes = []
    if gb0.exact and gb0.degree(0).support() == frozenset():
        aut0 = ExactlyG()
        kernel = FormalCharacter()
    else:
        kernel = gb0.degree(0)
        aut0 = Inconclusive(kernel)
        if not gb0.exact:
            notes.append("engine could not certify H^*(G/B, H^0(F, Theta_F)): " + "; ".join(gb0.status.reasons))
        else:
            notes.append("Lie(ker pi_*) = H^0(G/B, H^0(F, Theta_F)) is nonzero; Aut0(E) is larger than G")
    lie = kernel + g
    assert lie.dimension() == kernel.dimension() + g.dimension()

    h0_of_h1 = None
    if F.h1_theta is not None:
        h0_of_h1 = h_flag_modules(rs, F.h1_theta.char, mode)

    if F.h1_theta is None:
        h1 = NotDetermined("H^1(F, Theta_F) not supplied")
    elif not F.structure_vanishing:
        h1 = NotDetermined("H^j(F, O_F) = 0 for j >= 1 not asserted")
    elif not gb0.exact:
        h1 = NotDetermined("engine could not certify exactness")
    elif gb0.degree(1) or gb0.degree(2):
        bad = [j for j in (1, 2) if gb0.degree(j)]
        h1 = NotDetermined(f"H^j(G/B, H^0(F, Theta_F)) != 0 for j = {bad}")
    elif not h0_of_h1.exact:
        h1 = NotDetermined("engine could not certify exactness")
    else:
        h1 = GradedCharacter({0: h0_of_h1.degree(0)})
    return TwistedReport(
        aut0=aut0,
        h1_twisted=h1,
        h_gb_of_h0=gb0,
        lie_aut0=lie,
        h0_gb_of_h1=h0_of_h1,
        notes=tuple(notes),
        citations=(CRITERION_AUT, CRITERION_H1, SPLITTING),
        h1_requested=F.h1_theta is not None,
    )


def _require_simply_laced(rs):
    if not rs.cartan_type.simply_laced():
        raise TwistedError(
            f"{rs.cartan_type} is not simply-laced; the G-Schubert criteria are only established for types A, D, E"
        )


def twisted_schubert_report(rs, w, mode=GREEDY) -> TwistedReport:
    """Report for the G-Schubert variety G x_B X(w); w is a WeylElt or a word."""
    _require_simply_laced(rs)
    if not hasattr(w, "matrix"):
        w = from_word(rs, w)
    w0 = longest_element(rs)
    if w == w0:
        F = FiberData(adjoint_weights(rs), BWeightModule(FormalCharacter(), "0"), True)
        rep = check_twisted(rs, F, mode)
        aut0 = Inconclusive(rep.aut0.kernel_character, "GxG") if isinstance(rep.aut0, Inconclusive) else rep.aut0
        return TwistedReport(
            aut0=aut0,
            h1_twisted=rep.h1_twisted,
            h_gb_of_h0=rep.h_gb_of_h0,
            lie_aut0=rep.lie_aut0,
            notes=("X(w0) = G/B, so H^0(X, Theta) = g and H^1(X, Theta) = 0",),
            citations=(SCHUBERT_W0, SPLITTING),
            h1_requested=True,
        )
    I = schubert_stabilizer(w)
    par = p_J_weights(rs, I)
    ing = h_flag_modules(rs, par.char, mode)
    verified = ing.exact and all(not ing.degree(j) for j in (0, 1, 2))
    ingredients = {
        "I(w)": [i + 1 for i in sorted(I)],
        "H_gb_p_I": ing,
        "p_I_vanishing_verified": verified,
    }
    if verified:
        aut0 = ExactlyG()
        notes = (KERNEL_ASSUMPTION,)
    else:
        aut0 = Inconclusive(FormalCharacter())
        notes = ("H^j(G/B, p_I(w)) did not vanish exactly for j <= 2", KERNEL_ASSUMPTION)
    return TwistedReport(
        aut0=aut0,
        h1_twisted=NotDetermined("H^1(X(w), Theta) is an external input"),
        lie_aut0=adjoint_weights(rs).char if verified else None,
        notes=notes,
        citations=(SCHUBERT_AUT, SCHUBERT_H1, CRITERION_AUT),
        ingredients=ingredients,
        h1_requested=False,
    )


def twisted_bsdh_report(rs, word, mode=GREEDY) -> TwistedReport:
    """Report for the G-BSDH variety G x_B Z(w, word)."""
    theta = bsdh_tangent(rs, word, mode)
    ingredients = {"theta_Z": theta}
    if not theta.exact:
        return TwistedReport(
            aut0=Inconclusive(theta.degree(0)),
            h1_twisted=NotDetermined("engine could not certify exactness"),
            notes=("H^*(Z, Theta_Z) not certified: " + "; ".join(theta.status.reasons),),
            citations=(CRITERION_AUT, CRITERION_H1),
            ingredients=ingredients,
        )
    F = FiberData(
        BWeightModule(theta.degree(0), "H0(Z,Theta)"),
        BWeightModule(theta.degree(1), "H1(Z,Theta)"),
        structure_vanishing=True,
    )
    rep = check_twisted(rs, F, mode)
    notes = list(rep.notes)
    notes.append("Z(w, i) is smooth projective rational, so H^j(Z, O_Z) = 0 for j >= 1")
    if rs.cartan_type.simply_laced():
        notes.append(BSDH_CLAIM)
    if theta.max_degree() >= 2:
        notes.append("H^j(Z, Theta) != 0 for some j >= 2")
    return TwistedReport(
        aut0=rep.aut0,
        h1_twisted=rep.h1_twisted,
        h_gb_of_h0=rep.h_gb_of_h0,
        lie_aut0=rep.lie_aut0,
        h0_gb_of_h1=rep.h0_gb_of_h1,
        notes=tuple(notes),
        citations=rep.citations,
        ingredients=ingredients,
    )


def nonsingular_shifted_roots(rs) -> dict:
    """{beta : beta + rho non-singular} -> index(beta + rho), over all roots."""
    out = {}
    for r in rs.roots:
        shifted = tuple(x + 1 for x in r.weight)
        if not rs.is_singular(shifted):
            out[r.weight] = rs.index(shifted)
    return out


def expected_nonsingular(rs) -> dict:
    """alpha_0 with index 0 and every -alpha_i with index 1."""
    out = {rs.highest_root.weight: 0}
    for i in range(rs.rank):
        out[tuple(-x for x in rs.simple_root(i))] = 1
    return out
