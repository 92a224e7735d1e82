//! Randomized structural properties.

use num::{BigInt, BigRational};
use proptest::prelude::*;
use superfn::actions::{Actions, Side};
use superfn::cg::Cg;
use superfn::expr::{parse, Expr, Value};
use superfn::scalar::{sign, Coeff, One, Zero};
use superfn::superpoly::{Poly, Symbol};
use superfn::tensorinv::{rho, Perm};
use superfn::ugl::{Factor, Letter, TensorVector, UElement, Ugl};
use superfn::{Gl, Scalar};

const DIM: usize = 4;

fn gl22() -> Gl {
    Gl::new(2, 2).unwrap()
}

fn idx() -> impl Strategy<Value = usize> {
    1..=DIM
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (-20i64..20, 1i64..6, any::<bool>())
            .prop_map(|(p, q, imag)| Expr::Lit { value: BigRational::new(BigInt::from(p), BigInt::from(q)), imag }),
        (idx(), idx()).prop_map(|(a, b)| Expr::T(a, b)),
        (idx(), idx()).prop_map(|(a, b)| Expr::Tb(a, b)),
        idx().prop_map(Expr::Z),
        idx().prop_map(Expr::Zb),
        Just(Expr::R),
        (1usize..4, idx(), idx()).prop_map(|(block, a, b)| Expr::C { block, a, b }),
        (1usize..4, 1usize..4).prop_map(|(i, j)| Expr::Cp(i, j)),
        (0u32..4).prop_map(Expr::Theta),
    ]
}

fn u_leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![(idx(), idx()).prop_map(|(a, b)| Expr::E(a, b)), (-5i64..5).prop_map(Expr::int)]
}

fn tree(base: BoxedStrategy<Expr>) -> impl Strategy<Value = Expr> {
    base.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Add(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Sub(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Mul(Box::new(x), Box::new(y))),
            (inner, 0u32..4).prop_map(|(x, k)| Expr::Pow(Box::new(x), k)),
        ]
    })
}

fn symbol() -> impl Strategy<Value = Symbol> {
    let all = Symbol::all(&gl22());
    (0..all.len()).prop_map(move |i| all[i])
}

/// Small random polynomial: a sum of up to three products of generators.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(symbol(), 0..3), -3i64..4), 1..4).prop_map(|terms| {
        let mut out = Poly::zero();
        for (syms, c) in terms {
            out.add_scaled(&Poly::product(&syms), &Scalar::from_int(c));
        }
        out
    })
}

fn letter() -> impl Strategy<Value = Letter> {
    let all = Letter::all(&gl22());
    (0..all.len()).prop_map(move |i| all[i])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn printer_round_trip(e in tree(leaf().boxed())) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text, &gl22()).unwrap(), e, "{}", text);
    }

    #[test]
    fn enveloping_round_trip(e in tree(u_leaf().boxed())) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text, &gl22()).unwrap(), e, "{}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn normal_forms_reparse(f in poly()) {
        let g = gl22();
        let text = f.to_string();
        let back = parse(&text, &g).unwrap().eval(&g, None).unwrap();
        prop_assert_eq!(back, Value::Poly(f), "{}", text);
    }

    #[test]
    fn coproduct_is_multiplicative(f in poly(), h in poly()) {
        let cg = Cg::new(gl22());
        prop_assert_eq!(cg.delta(&f.mul(&h)), cg.mul_tensor2(&cg.delta(&f), &cg.delta(&h)));
    }

    #[test]
    fn pairing_routes_agree(f in poly(), w in prop::collection::vec(letter(), 0..3)) {
        let g = gl22();
        let cg = Cg::new(g);
        let ugl = Ugl::new(g);
        let u = ugl.word::<Scalar>(&w).unwrap();
        prop_assert_eq!(cg.pair(&f, &u), cg.pair_recursive(&f, &u, &ugl));
    }

    #[test]
    fn product_pairs_through_coproduct(f in poly(), h in poly(), w in prop::collection::vec(letter(), 0..3)) {
        let g = gl22();
        let cg = Cg::new(g);
        let ugl = Ugl::new(g);
        let u = ugl.word::<Scalar>(&w).unwrap();
        let fh: superfn::cg::CgTensor2 = f
            .terms()
            .flat_map(|(a, ca)| h.terms().map(move |(b, cb)| ((a.clone(), b.clone()), ca.clone() * cb.clone())))
            .fold(Default::default(), |mut acc: superfn::cg::CgTensor2, (k, c)| {
                let e = acc.entry(k).or_insert_with(Scalar::zero);
                *e += c;
                acc
            });
        prop_assert_eq!(cg.pair(&f.mul(&h), &u), cg.pair_tensor2(&fh, &ugl.coproduct(&u)));
    }

    #[test]
    fn right_action_is_a_representation(f in poly(), x in letter(), y in letter()) {
        let g = gl22();
        let acts = Actions::new(g);
        let ugl = Ugl::new(g);
        for side in [Side::DL, Side::DR] {
            let br = ugl.supercommutator(x, y);
            let xy = acts.act_letter(side, x, &acts.act_letter(side, y, &f));
            let yx = acts.act_letter(side, y, &acts.act_letter(side, x, &f));
            let rhs = &xy - &yx.scale(&sign(x.odd && y.odd));
            prop_assert_eq!(acts.act(side, &br, &f), rhs);
        }
    }

    #[test]
    fn rho_is_a_homomorphism(a in 0usize..24, b in 0usize..24, v in prop::collection::vec(1u8..=4, 4)) {
        let g = gl22();
        let perms = Perm::all(4);
        let (s, t) = (&perms[a], &perms[b]);
        let mut w = TensorVector::<Scalar>::zero(vec![Factor::V; 4]);
        w.add(v, Scalar::one());
        let lhs = rho(&g, &s.compose(t), &w).unwrap();
        let rhs = rho(&g, s, &rho(&g, t, &w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_acts_trivially(f in poly()) {
        let acts = Actions::new(gl22());
        prop_assert_eq!(acts.act(Side::DR, &UElement::one(), &f), f.clone());
        prop_assert_eq!(acts.act(Side::DL, &UElement::one(), &f), f);
    }
}
