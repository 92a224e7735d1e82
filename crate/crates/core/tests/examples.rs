//! Worked examples with values fixed by the defining formulas.

use superfn::actions::{Actions, Side};
use superfn::cg::{Cg, OracleConfig};
use superfn::grading::{Parity, Weight};
use superfn::grassmann::{random_supermatrix, GroupPoint, Sampling};
use superfn::scalar::{Coeff, One, Scalar, Zero};
use superfn::spherical::*;
use superfn::superpoly::{Poly, Symbol};
use superfn::tensorinv::{invariant_subspace, sergeev_invariant, Perm, DEFAULT_TENSOR_CAP};
use superfn::ugl::{act, Factor, Letter, TensorVector, UElement, Ugl};
use superfn::{Gl, Rational};

use rand::SeedableRng;

fn gl(m: usize, n: usize) -> Gl {
    Gl::new(m, n).unwrap()
}

fn int(k: i64) -> Scalar {
    Scalar::from_int(k)
}

#[test]
fn parities_and_form() {
    let g = gl(2, 1);
    assert_eq!(g.parity(1), Parity::Even);
    assert_eq!(g.parity(3), Parity::Odd);
    let e = |a: usize| {
        let mut c = vec![Rational::zero(); 3];
        c[a - 1] = Rational::one();
        Weight::new(&g, c).unwrap()
    };
    assert_eq!(e(1).form(&e(1), &g), Rational::one());
    assert_eq!(e(3).form(&e(3), &g), -Rational::one());
}

#[test]
fn odd_generator_squares_to_zero() {
    let g = gl(1, 1);
    let x = Poly::<Scalar>::symbol(Symbol::t(&g, 1, 2));
    assert!(x.mul(&x).is_zero());
}

#[test]
fn enveloping_algebra_examples() {
    let g = gl(1, 1);
    let u = Ugl::new(g);
    let e = |a, b| UElement::letter(Letter::new(&g, a, b));
    let d = u.coproduct(&e(1, 1));
    let one = Vec::new();
    let w11 = vec![Letter::new(&g, 1, 1)];
    assert_eq!(d.len(), 2);
    assert_eq!(d[&(w11.clone(), one.clone())], Scalar::one());
    assert_eq!(d[&(one, w11)], Scalar::one());
    assert_eq!(u.theta(&e(1, 2)).unwrap(), e(2, 1));
    assert_eq!(u.z_central::<Scalar>(), {
        let mut z = e(1, 1);
        z.add_scaled(&e(2, 2), &Scalar::one());
        z
    });
    assert_eq!(u.laplacian::<Scalar>(), u.mul(&e(1, 2), &e(2, 1)).unwrap().scale(&-Scalar::one()));
}

#[test]
fn module_examples() {
    let g = gl(1, 1);
    let v2 = TensorVector::<Scalar>::basis(vec![Factor::V], &[2]).unwrap();
    let v1 = TensorVector::<Scalar>::basis(vec![Factor::V], &[1]).unwrap();
    assert_eq!(act(&g, &UElement::letter(Letter::new(&g, 1, 2)), &v2), v1);
    let vb1 = TensorVector::<Scalar>::basis(vec![Factor::VStar], &[1]).unwrap();
    assert_eq!(act(&g, &UElement::letter(Letter::new(&g, 1, 1)), &vb1), vb1.scale(&-Scalar::one()));
    let z = Ugl::new(g).z_central::<Scalar>();
    for a in 1..=2 {
        for b in 1..=2 {
            let w = TensorVector::<Scalar>::basis(TensorVector::<Scalar>::mixed_shape(1, 1), &[a, b]).unwrap();
            assert!(act(&g, &z, &w).is_zero());
        }
    }
}

#[test]
fn antipode_star_and_pairing() {
    let c11 = Cg::new(gl(1, 1));
    let g11 = gl(1, 1);
    let t = |g: &Gl, a, b| Poly::<Scalar>::symbol(Symbol::t(g, a, b));
    let tb = |g: &Gl, a, b| Poly::<Scalar>::symbol(Symbol::tbar(g, a, b));
    assert_eq!(c11.antipode(&t(&g11, 2, 1)), -&tb(&g11, 1, 2));
    let g21 = gl(2, 1);
    assert_eq!(Cg::new(g21).antipode(&t(&g21, 1, 2)), tb(&g21, 2, 1));
    assert_eq!(c11.omega(&t(&g11, 1, 2)), -&tb(&g11, 1, 2));
    assert_eq!(c11.omega(&t(&g11, 1, 1)), tb(&g11, 1, 1));
    let e12 = UElement::letter(Letter::new(&g11, 1, 2));
    assert_eq!(c11.pair(&t(&g11, 1, 2), &e12), Scalar::one());
    assert_eq!(c11.pair(&tb(&g11, 1, 2), &UElement::letter(Letter::new(&g11, 2, 1))), Scalar::one());
}

#[test]
fn relations_vanish_at_points() {
    let g = gl(2, 1);
    let cg = Cg::new(g);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let a = random_supermatrix::<Scalar>(g, &mut rng, Sampling { bound: 50 });
        let p = GroupPoint::from_matrix(&a).unwrap();
        for r in cg.relations().generators() {
            assert!(p.evaluate(r).is_zero());
        }
    }
    assert_eq!(cg.relations().generators().len(), 2 * 9);
}

#[test]
fn super_block_left_generators_invariant() {
    let g = gl(2, 2);
    let p = LeviProfile::parse(g, "1,1|1,1").unwrap();
    let acts = Actions::new(g);
    let cfg = OracleConfig::default();
    for i in p.outer_blocks() {
        for a in g.indices() {
            for b in g.indices() {
                let c = c_block(&p, i, a, b).unwrap();
                assert!(acts.is_invariant(Side::DL, &c, &p, &cfg).unwrap(), "C[{i};{a},{b}]");
            }
        }
    }
}

#[test]
fn sergeev_examples() {
    let g = gl(1, 1);
    let t = sergeev_invariant(&g, &Perm::identity(1), DEFAULT_TENSOR_CAP).unwrap();
    let mut canon = TensorVector::<Scalar>::zero(TensorVector::<Scalar>::mixed_shape(1, 1));
    canon.add(vec![1, 1], Scalar::one());
    canon.add(vec![2, 2], Scalar::one());
    assert_eq!(t, canon);
    let s1 = sergeev_invariant(&g, &Perm::new(&[2, 1]).unwrap(), DEFAULT_TENSOR_CAP).unwrap();
    assert_eq!(s1.get(&[2, 2, 2, 2]), -Scalar::one());
    assert_eq!(s1.get(&[1, 1, 1, 1]), Scalar::one());
    assert!(invariant_subspace(&g, 1, 0, DEFAULT_TENSOR_CAP).unwrap().is_empty());
    assert!(invariant_subspace(&g, 2, 1, DEFAULT_TENSOR_CAP).unwrap().is_empty());
}

#[test]
fn homogeneous_space_examples() {
    let cfg = OracleConfig::default();
    let g = gl(2, 2);
    let cg = Cg::new(g);
    let p = LeviProfile::parse(g, "1,1|1,1").unwrap();
    for i in 1..=4 {
        let c = c_block(&p, i, 1, 3).unwrap();
        assert!(cg.is_zero(&c.pow(2), &cfg).unwrap());
    }
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let g = gl(m, n);
        let cg = Cg::new(g);
        let acts = Actions::new(g);
        let lhs = laplacian_apply(&acts, &r(&g));
        let want = &r(&g).scale(&int(m as i64 - n as i64)) + &Poly::one();
        assert!(cg.is_zero(&(&lhs - &want), &cfg).unwrap(), "({m},{n})");
    }
}

#[test]
fn nilpotency_examples() {
    let cfg = OracleConfig::default();
    let one = Poly::<Scalar>::one();
    for (m, zero_at) in [(1u32, 2u32), (2, 3)] {
        let g = gl(m as usize, 1);
        let cg = Cg::new(g);
        let s = &one - &r(&g);
        assert!(cg.is_zero(&s.pow(zero_at), &cfg).unwrap());
        assert!(!cg.is_zero(&s.pow(zero_at - 1), &cfg).unwrap());
    }
    let g = gl(1, 2);
    assert!(!Cg::new(g).is_zero(&r(&g).pow(4), &cfg).unwrap());
    let g = gl(2, 2);
    let cg = Cg::new(g);
    let rows = rank_rows(&g, RankSide::N, 1).unwrap();
    let c = c_rows(&g, rows, 1, 1).unwrap();
    assert!(cg.is_zero(&c.pow(2), &cfg).unwrap());
    assert!(!cg.is_zero(&c, &cfg).unwrap());
    let cs = rank_spherical(&g, RankSide::N, 1).unwrap();
    assert!(!cg.is_zero(&cs.pow(3), &cfg).unwrap());
}
