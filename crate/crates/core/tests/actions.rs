//! Translation actions on ℂ(G): the free-algebra derivations, the Leibniz
//! rule over products, and invariance verdicts.

use superfn::actions::{Actions, Side};
use superfn::cg::{Cg, OracleConfig, Outcome};
use superfn::scalar::{Coeff, Scalar};
use superfn::spherical::LeviProfile;
use superfn::superpoly::{Poly, Symbol};
use superfn::ugl::Letter;
use superfn::Gl;

fn gl(m: usize, n: usize) -> Gl {
    Gl::new(m, n).unwrap()
}

fn sign(odd: bool) -> Scalar {
    Scalar::from_int(if odd { -1 } else { 1 })
}

fn sample_products(g: &Gl) -> Vec<Poly> {
    let syms = Symbol::all(g);
    let mut out = Vec::new();
    for (i, s) in syms.iter().enumerate() {
        out.push(Poly::symbol(*s));
        let u = syms[(3 * i + 1) % syms.len()];
        let w = syms[(5 * i + 2) % syms.len()];
        out.push(Poly::product(&[*s, u]));
        out.push(Poly::product(&[*s, u, w]));
    }
    out
}

// The renaming between the free algebra and ℂ(G) is the identity on symbols,
// so Φ and Ψ must agree with dR and dL before any reduction.
#[test]
fn free_algebra_actions_intertwine() {
    for g in [gl(1, 1), gl(2, 1), gl(1, 2), gl(2, 2)] {
        let a = Actions::new(g);
        for x in Letter::all(&g) {
            for f in sample_products(&g) {
                assert_eq!(a.act_letter(Side::Psi, x, &f), a.act_letter(Side::DL, x, &f), "{g:?} Psi {x:?} {f}");
                assert_eq!(a.act_letter(Side::Phi, x, &f), a.act_letter(Side::DR, x, &f), "{g:?} Phi {x:?} {f}");
            }
        }
    }
}

// dL_x ⊗ dR_y on a pair equals the renamed Ψ(x) ⊗ Φ(y), and the two sides commute.
#[test]
fn left_and_right_commute() {
    let g = gl(2, 1);
    let a = Actions::new(g);
    let letters = Letter::all(&g);
    for f in sample_products(&g) {
        for &x in &letters {
            for &y in &letters {
                let lr = a.act_letter(Side::DL, x, &a.act_letter(Side::DR, y, &f));
                let rl = a.act_letter(Side::DR, y, &a.act_letter(Side::DL, x, &f));
                let want = if x.odd && y.odd { -&rl } else { rl };
                assert_eq!(lr, want, "{x:?} {y:?} {f}");
            }
        }
    }
}

#[test]
fn letters_obey_super_leibniz() {
    for g in [gl(1, 1), gl(2, 1), gl(1, 2)] {
        let a = Actions::new(g);
        let fs = sample_products(&g);
        for side in [Side::DL, Side::DR] {
            for x in Letter::all(&g) {
                for (i, f) in fs.iter().enumerate() {
                    let h = &fs[(7 * i + 3) % fs.len()];
                    let f_odd = f.homogeneous_parity().unwrap();
                    let lhs = a.act_letter(side, x, &f.mul(h));
                    let first = a.act_letter(side, x, f).mul(h);
                    let second = f.mul(&a.act_letter(side, x, h)).scale(&sign(x.odd && f_odd));
                    assert_eq!(lhs, first + second, "{side} {x:?} ({f})({h})");
                }
            }
        }
    }
}

#[test]
fn central_element_fixes_t() {
    let g = gl(2, 1);
    let a = Actions::new(g);
    let z = a.ugl().z_central::<Scalar>();
    for i in g.indices() {
        for j in g.indices() {
            let t = Poly::symbol(Symbol::t(&g, i, j));
            assert_eq!(a.act(Side::DR, &z, &t), t);
        }
    }
}

#[test]
fn t11_is_not_levi_invariant() {
    let g = gl(2, 1);
    let a = Actions::new(g);
    let p = LeviProfile::parse(g, "2,1").unwrap();
    let t11 = Poly::symbol(Symbol::t(&g, 1, 1));
    let cfg = OracleConfig::default();
    assert!(!a.is_invariant(Side::DL, &t11, &p, &cfg).unwrap());
    // the witness: dL_{E12} t11 is a nonzero multiple of t21
    let v = a.act_letter(Side::DL, Letter::new(&g, 1, 2), &t11);
    let cg = Cg::new(g);
    assert_eq!(cg.is_zero_mod_j(&v, &cfg).unwrap().verdict, Outcome::Nonzero);
}
