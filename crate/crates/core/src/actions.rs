//! Translation actions of U(g) on functions.
//!
//! `dR` and `dL` are the right and left translation actions on ℂ(G);
//! `Phi` and `Psi` are the corresponding actions on the free algebra,
//! defined through the identification `x_ab ↔ v_b ⊗ v̄_a`,
//! `x̄_ab ↔ v̄_b ⊗ v_a`. Letters act as superderivations whose values on
//! generators are tabulated once per context.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cg::{Cg, OracleConfig};
use crate::error::{Error, Result};
use crate::grading::{Gl, Parity};
use crate::scalar::{sign, Scalar, Zero};
use crate::spherical::LeviProfile;
use crate::superpoly::{DerivationSpec, Monomial, Poly, Symbol, Tag};
use crate::ugl::{letter_on_factor, Factor, Letter, UElement, Ugl};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "dL")]
    DL,
    #[serde(rename = "dR")]
    DR,
    Phi,
    Psi,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::DL => "dL",
            Side::DR => "dR",
            Side::Phi => "Phi",
            Side::Psi => "Psi",
        })
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dL" | "dl" | "L" => Ok(Side::DL),
            "dR" | "dr" | "R" => Ok(Side::DR),
            "Phi" | "phi" => Ok(Side::Phi),
            "Psi" | "psi" => Ok(Side::Psi),
            _ => Err(Error::Usage(format!("unknown action side `{s}`"))),
        }
    }
}

/// Tabulated letter actions for one gl(m|n).
#[derive(Debug)]
pub struct Actions {
    gl: Gl,
    cg: Cg,
    table: HashMap<(Side, Letter), DerivationSpec<Scalar>>,
}

impl Actions {
    pub fn new(gl: Gl) -> Self {
        let cg = Cg::new(gl);
        let mut table = HashMap::new();
        for side in [Side::DL, Side::DR, Side::Phi, Side::Psi] {
            for x in Letter::all(&gl) {
                let images: BTreeMap<Symbol, Poly> = Symbol::all(&gl)
                    .into_iter()
                    .map(|s| (s, act_generator_with(&cg, side, x, s)))
                    .filter(|(_, p)| !p.is_zero())
                    .collect();
                table.insert((side, x), DerivationSpec { parity: x.parity(), images });
            }
        }
        Actions { gl, cg, table }
    }

    pub fn gl(&self) -> &Gl {
        &self.gl
    }

    /// Image of one generator under one letter.
    pub fn act_generator(&self, side: Side, x: Letter, g: Symbol) -> Poly {
        self.table[&(side, x)].images.get(&g).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn derivation(&self, side: Side, x: Letter) -> &DerivationSpec<Scalar> {
        &self.table[&(side, x)]
    }

    /// Action of a single letter, as a superderivation.
    pub fn act_letter(&self, side: Side, x: Letter, f: &Poly) -> Poly {
        let d = &self.table[&(side, x)];
        f.derive(x.odd, |s| d.images.get(&s).cloned().unwrap_or_else(Poly::zero))
    }

    /// Action of a word: letters apply from the right.
    pub fn act_word(&self, side: Side, w: &[Letter], f: &Poly) -> Poly {
        let mut v = f.clone();
        for &x in w.iter().rev() {
            if v.is_zero() {
                break;
            }
            v = self.act_letter(side, x, &v);
        }
        v
    }

    /// Action of an enveloping-algebra element, linear in `u`.
    pub fn act(&self, side: Side, u: &UElement, f: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in u.terms() {
            out.add_scaled(&self.act_word(side, w, f), c);
        }
        out
    }

    /// True iff every generating letter of the Levi subalgebra annihilates
    /// `f` modulo J.
    pub fn is_invariant(&self, side: Side, f: &Poly, levi: &LeviProfile, cfg: &OracleConfig) -> Result<bool> {
        if levi.gl() != &self.gl {
            return Err(Error::Usage("profile and algebra disagree on (m,n)".into()));
        }
        for x in levi.generating_letters() {
            if !self.cg.is_zero(&self.act_letter(side, x, f), cfg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Enveloping-algebra context with the default word cap.
    pub fn ugl(&self) -> Ugl {
        Ugl::new(self.gl)
    }
}

/// Closed form of `side` applied to the generator `g` by the letter `x`.
///
/// `dR_x(g) = Σ (−1)^{[x][g]} g₍₁₎ ⟨g₍₂₎, x⟩` and
/// `dL_x(g) = Σ (−1)^{[x]} ⟨g₍₁₎, S(x)⟩ g₍₂₎` with `S(x) = −x`, spliced from
/// the generator coproduct and the generator pairing.
pub fn act_generator(gl: &Gl, side: Side, x: Letter, g: Symbol) -> Poly {
    act_generator_with(&Cg::new(*gl), side, x, g)
}

fn act_generator_with(cg: &Cg, side: Side, x: Letter, g: Symbol) -> Poly {
    let gl = *cg.gl();
    let xw = [x];
    let mut out = Poly::zero();
    match side {
        Side::DR => {
            for (l, r, neg) in cg.delta_generator(g) {
                let p: Scalar = cg.pair_monomial_word(&Monomial::symbol(r), &xw);
                if !p.is_zero() {
                    let s = sign::<Scalar>(neg ^ (x.odd && g.odd));
                    out.add_term(Monomial::symbol(l), s * p);
                }
            }
        }
        Side::DL => {
            for (l, r, neg) in cg.delta_generator(g) {
                // ⟨l, S(x)⟩ = −⟨l, x⟩
                let p: Scalar = cg.pair_monomial_word(&Monomial::symbol(l), &xw);
                if !p.is_zero() {
                    let s = sign::<Scalar>(neg ^ x.odd ^ true);
                    out.add_term(Monomial::symbol(r), s * p);
                }
            }
        }
        Side::Phi | Side::Psi => {
            let (a, b) = (g.row(), g.col());
            let xo = x.odd;
            match (side, g.tag) {
                // Φ(u)(v_b ⊗ v̄_a) = (−1)^{[u]} u v_b ⊗ v̄_a
                (Side::Phi, Tag::T) => {
                    if let Some((b2, c)) = letter_on_factor::<Scalar>(&gl, x, Factor::V, b) {
                        out.add_term(Monomial::symbol(Symbol::t(&gl, a, b2)), sign::<Scalar>(xo) * c);
                    }
                }
                // Ψ(u)(v_b ⊗ v̄_a) = (−1)^{[u][b]} v_b ⊗ u v̄_a
                (Side::Psi, Tag::T) => {
                    if let Some((a2, c)) = letter_on_factor::<Scalar>(&gl, x, Factor::VStar, a) {
                        out.add_term(Monomial::symbol(Symbol::t(&gl, a2, b)), sign::<Scalar>(xo && gl.odd(b)) * c);
                    }
                }
                // Φ(u)(v̄_b ⊗ v_a) = (−1)^{[u]} u v̄_b ⊗ v_a
                (Side::Phi, Tag::TBar) => {
                    if let Some((b2, c)) = letter_on_factor::<Scalar>(&gl, x, Factor::VStar, b) {
                        out.add_term(Monomial::symbol(Symbol::tbar(&gl, a, b2)), sign::<Scalar>(xo) * c);
                    }
                }
                // Ψ(u)(v̄_b ⊗ v_a) = (−1)^{[u]([u]+[b])} v̄_b ⊗ u v_a
                (Side::Psi, Tag::TBar) => {
                    if let Some((a2, c)) = letter_on_factor::<Scalar>(&gl, x, Factor::V, a) {
                        let s = xo && (xo ^ gl.odd(b));
                        out.add_term(Monomial::symbol(Symbol::tbar(&gl, a2, b)), sign::<Scalar>(s) * c);
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    out
}

/// Parity of a letter, for callers working with [`Parity`].
pub fn letter_parity(x: Letter) -> Parity {
    x.parity()
}
