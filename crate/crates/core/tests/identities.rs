//! Homogeneous-space identities: the closed forms that hold modulo J, and
//! the naive variants that do not.

use superfn::actions::{Actions, Side};
use superfn::cg::{Cg, OracleConfig};
use superfn::scalar::{Coeff, Scalar};
use superfn::spherical::*;
use superfn::superpoly::Poly;
use superfn::ugl::Letter;
use superfn::Gl;

fn gl(m: usize, n: usize) -> Gl {
    Gl::new(m, n).unwrap()
}

fn zero(cg: &Cg, f: &Poly) -> bool {
    cg.is_zero(f, &OracleConfig::default()).unwrap()
}

const SHAPES: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];

#[test]
fn sphere_relation_holds() {
    for (m, n) in SHAPES {
        let g = gl(m, n);
        assert!(zero(&Cg::new(g), &sphere_relation(&g)), "({m},{n})");
    }
}

#[test]
fn q_closed_form() {
    for (m, n) in SHAPES {
        let g = gl(m, n);
        let cg = Cg::new(g);
        let mut naive_bad = 0;
        for a in g.indices() {
            for b in g.indices() {
                assert!(zero(&cg, &q_identity(&g, a, b).unwrap()), "({m},{n}) Q[{a},{b}]");
                naive_bad += usize::from(!zero(&cg, &q_identity_naive(&g, a, b).unwrap()));
            }
        }
        // The naive sign and factor order only agree on the even diagonal.
        assert_eq!(naive_bad, g.dim() * g.dim() - m, "({m},{n})");
    }
}

#[test]
fn block_sums_and_traces() {
    let cases = [(gl(2, 2), "1,1|1,1"), (gl(2, 2), "2|1,1"), (gl(2, 2), "2,2"), (gl(2, 1), "1,1,1"), (gl(1, 2), "1|1,1")];
    let mut naive_sum_bad = 0;
    let mut naive_trace_bad = 0;
    for (g, text) in cases {
        let cg = Cg::new(g);
        let p = LeviProfile::parse(g, text).unwrap();
        for a in g.indices() {
            for b in g.indices() {
                assert!(zero(&cg, &block_sum(&p, a, b).unwrap()), "{text} sum [{a},{b}]");
                naive_sum_bad += usize::from(!zero(&cg, &block_sum_naive(&p, a, b).unwrap()));
            }
        }
        for i in 1..=p.num_blocks() {
            assert!(zero(&cg, &trace_identity(&p, i).unwrap()), "{text} trace {i}");
            assert!(zero(&cg, &pair_sum_over_cols(&p, i).unwrap()), "{text} cols {i}");
            assert!(zero(&cg, &pair_sum_over_rows(&p, i).unwrap()), "{text} rows {i}");
            naive_trace_bad += usize::from(!zero(&cg, &trace_naive(&p, i).unwrap()));
        }
    }
    assert!(naive_sum_bad > 0);
    assert!(naive_trace_bad > 0);
}

#[test]
fn blocks_supercommute() {
    let g = gl(2, 2);
    let p = LeviProfile::parse(g, "1,1|1,1").unwrap();
    for (i, j) in [(1, 3), (3, 4), (2, 2)] {
        for (a, b, c, d) in [(1, 3, 4, 2), (3, 4, 1, 3), (2, 2, 3, 3)] {
            let x = c_block(&p, i, a, b).unwrap();
            let y = c_block(&p, j, c, d).unwrap();
            let s = (g.odd(a) ^ g.odd(b)) && (g.odd(c) ^ g.odd(d));
            assert_eq!(x.mul(&y), y.mul(&x).scale(&superfn::scalar::sign(s)));
        }
    }
}

#[test]
fn odd_letters_on_super_block() {
    let g = gl(2, 2);
    let p = LeviProfile::parse(g, "1,1|1,1").unwrap();
    let acts = Actions::new(g);
    let (up, down) = (Letter::new(&g, 2, 3), Letter::new(&g, 3, 2));
    let mut naive_up = 0;
    let mut naive_down = 0;
    for a in g.indices() {
        for b in g.indices() {
            let c = c_block(&p, 3, a, b).unwrap();
            let (du, dd) = super_block_images(&g, a, b).unwrap();
            let (pu, pd) = super_block_images_naive(&g, a, b).unwrap();
            let lu = acts.act_letter(Side::DL, up, &c);
            let ld = acts.act_letter(Side::DL, down, &c);
            assert_eq!(lu, du);
            assert_eq!(ld, dd);
            // Naive up-image is off by an overall sign.
            assert_eq!(lu, -&pu);
            naive_up += usize::from(lu != pu);
            naive_down += usize::from(ld != pd);
        }
    }
    assert_eq!(naive_up, 16);
    // Naive down-image agrees exactly when [b] = 1.
    assert_eq!(naive_down, 8);
}

#[test]
fn theta_eigenfunctions() {
    for (m, n) in [(1, 2), (1, 3), (2, 3)] {
        let g = gl(m, n);
        let cg = Cg::new(g);
        let acts = Actions::new(g);
        for k in 0..=3 {
            let lam = Scalar::from_int(theta_eigenvalue(&g, k));
            let t = theta_corrected(&g, k).unwrap();
            let lhs = laplacian_apply(&acts, &t);
            assert!(zero(&cg, &(&lhs - &t.scale(&lam))), "({m},{n}) k={k}");
        }
    }
    // The naive coefficients fail from k = 2 when n − m = 1 and from
    // k = 1 when n − m = 2.
    for (m, n, first_bad) in [(1, 2, 2), (1, 3, 1)] {
        let g = gl(m, n);
        let cg = Cg::new(g);
        let acts = Actions::new(g);
        for k in 0..=3 {
            let lam = Scalar::from_int(theta_eigenvalue(&g, k));
            let t = theta(&g, k);
            let ok = zero(&cg, &(&laplacian_apply(&acts, &t) - &t.scale(&lam)));
            assert_eq!(ok, k < first_bad, "({m},{n}) k={k}");
        }
    }
}

#[test]
fn theta_corrected_singular_when_l_positive() {
    assert!(theta_corrected(&gl(2, 1), 2).is_err());
    assert!(theta_corrected(&gl(2, 1), 0).is_ok());
}

#[test]
fn full_side_rank_generators_are_nilpotent() {
    // With k = m the rows exhaust the even indices, so an off-diagonal even
    // C_ab is minus a sum of n products of odd generators.
    let g = gl(2, 2);
    let cg = Cg::new(g);
    let rows = rank_rows(&g, RankSide::M, 2).unwrap();
    let c12 = c_rows(&g, rows.clone(), 1, 2).unwrap();
    assert!(!zero(&cg, &c12.pow(2)));
    assert!(zero(&cg, &c12.pow(3)));
    let c11 = c_rows(&g, rows, 1, 1).unwrap();
    let shifted = &c11 - &Poly::one();
    assert!(!zero(&cg, &shifted.pow(2)));
    assert!(zero(&cg, &shifted.pow(3)));
}
