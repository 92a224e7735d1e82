//! Verification suites and their JSON reports.

use serde::{Deserialize, Serialize};

use crate::cg::Verdict;

/// One named check inside a suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    /// `"pass"` or `"fail"`.
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_bound: Option<f64>,
}

impl Case {
    pub fn new(name: impl Into<String>, passed: bool, witness: Option<String>) -> Self {
        Case { name: name.into(), verdict: if passed { "pass" } else { "fail" }.into(), witness, failure_bound: None }
    }

    /// Case passing iff the oracle verdict is zero exactly when `expect_zero`.
    pub fn from_verdict(name: impl Into<String>, expect_zero: bool, v: &Verdict) -> Self {
        let passed = v.is_zero() == expect_zero;
        let witness = if passed {
            None
        } else if expect_zero {
            Some(format!("expected zero; {}", v.witness.clone().unwrap_or_default()))
        } else {
            Some("expected nonzero; oracle returned zero".into())
        };
        Case {
            failure_bound: if v.is_zero() { v.failure_bound } else { None },
            ..Case::new(name, passed, witness)
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

/// Aggregated suite result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<Case>,
    pub passed: bool,
}

impl SuiteReport {
    /// Sorts cases by name so output order is fixed.
    pub fn new(suite: impl Into<String>, mut cases: Vec<Case>) -> Self {
        cases.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = cases.iter().all(Case::passed);
        SuiteReport { suite: suite.into(), cases, passed }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 9] =
    ["hopf", "relations", "supergroup", "actions", "laplacian", "t51", "maxrank", "fft", "invariance"];

fn tag(gl: &Gl) -> String {
    format!("({},{})", gl.m, gl.n)
}

fn exact(name: String, ok: bool) -> Case {
    Case::new(name, ok, None)
}

fn m_s_id(cg: &Cg, x: &CgTensor2) -> Poly {
    let mut out = Poly::zero();
    for ((l, r), c) in x {
        let s = cg.antipode(&Poly::monomial(l.clone(), c.clone()));
        out = &out + &s.mul(&Poly::monomial(r.clone(), Scalar::one()));
    }
    out
}

fn m_id_s(cg: &Cg, x: &CgTensor2) -> Poly {
    let mut out = Poly::zero();
    for ((l, r), c) in x {
        let s = cg.antipode(&Poly::monomial(r.clone(), Scalar::one()));
        out = &out + &Poly::monomial(l.clone(), c.clone()).mul(&s);
    }
    out
}

/// Hopf axioms on generators. Antipode axioms are also pairing-certified
/// when `certify` is set.
pub fn hopf_cases(gl: &Gl, cfg: &OracleConfig, certify: bool) -> Result<Vec<Case>> {
    let cg = Cg::new(*gl);
    let ugl = Ugl::new(*gl);
    let words = ugl.pbw_words(2);
    let pcfg = OracleConfig { mode: Mode::Pairing, ..*cfg };
    let t = tag(gl);
    let mut cases = Vec::new();
    for s in Symbol::all(gl) {
        let f = Poly::symbol(s);
        cases.push(exact(format!("{t} coassociativity {s}"), cg.delta_left(&f) == cg.delta_right(&f)));
        let eps = Poly::constant(cg.counit(&f));
        let d = cg.delta(&f);
        for (label, lhs) in [("m(S*id)D", m_s_id(&cg, &d)), ("m(id*S)D", m_id_s(&cg, &d))] {
            let diff = &lhs - &eps;
            cases.push(Case::from_verdict(format!("{t} antipode {label} {s}"), true, &cg.is_zero_mod_j(&diff, cfg)?));
            if certify {
                let v = cg.is_zero_mod_j(&diff, &pcfg)?;
                cases.push(Case::from_verdict(format!("{t} antipode {label} {s} pairing"), true, &v));
            }
        }
        // S dual to the antipode of U(g): ⟨S f, u⟩ = ⟨f, S u⟩.
        let sf = cg.antipode(&f);
        let mut ok = true;
        for w in &words {
            let u = ugl.word::<Scalar>(w)?;
            ok &= cg.pair(&sf, &u) == cg.pair(&f, &ugl.antipode(&u)?);
        }
        cases.push(exact(format!("{t} antipode dual {s}"), ok));
        cases.push(exact(format!("{t} omega^2 {s}"), cg.omega(&cg.omega(&f)) == f));
        let lhs = cg.omega_star_omega(&cg.delta(&f));
        cases.push(exact(format!("{t} omega coproduct {s}"), lhs == cg.delta(&cg.omega(&f))));
    }
    // ω is conjugate-linear and involutive on products.
    let g = Symbol::all(gl);
    let p = &Poly::symbol(g[1]).mul(&Poly::symbol(g[g.len() - 1])).scale(&crate::scalar::imag_unit())
        + &Poly::symbol(g[0]);
    cases.push(exact(format!("{t} omega^2 product"), cg.omega(&cg.omega(&p)) == p));
    Ok(cases)
}

/// Relations vanish exactly at `points` random group points and pair to
/// zero with every PBW word of length at most `max_word`.
pub fn relation_cases(gl: &Gl, cfg: &OracleConfig, points: u64, max_word: usize) -> Result<Vec<Case>> {
    let cg = Cg::new(*gl);
    let ugl = Ugl::new(*gl);
    let rels = cg.relations();
    let t = tag(gl);
    let mut cases = Vec::new();
    for trial in 0..points {
        let p = cg.sample_point(cfg.seed, 100 + trial, cfg.sampling)?;
        let bad = rels.generators().iter().position(|r| !p.evaluate(&r.map_coeffs(|c| c.re.clone())).is_zero());
        cases.push(Case::new(
            format!("{t} relations at point {trial}"),
            bad.is_none(),
            bad.map(|i| format!("relation {i} nonzero")),
        ));
    }
    let words = ugl.pbw_words(max_word);
    for (i, r) in rels.generators().iter().enumerate() {
        let bad = words.iter().find(|w| {
            let mut acc = Scalar::zero();
            for (m, c) in r.terms() {
                acc += c.clone() * cg.pair_monomial_word::<Scalar>(m, w);
            }
            !acc.is_zero()
        });
        let witness = bad.map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("*"));
        cases.push(Case::new(format!("{t} relation {i:02} pairs to zero"), witness.is_none(), witness));
    }
    Ok(cases)
}

/// Convolution against the matrix product, the inverse point, and the
/// real-structure check on unitary points.
pub fn supergroup_cases(gl: &Gl, cfg: &OracleConfig, products: usize, real_points: usize) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let s = Sampling { bound: 1 << 10 };
    let t = tag(gl);
    let id = GroupPoint::<Scalar>::identity(*gl);
    let mut cases = Vec::new();
    for i in 0..products {
        let a = random_supermatrix::<Scalar>(*gl, &mut rng, s);
        let b = random_supermatrix::<Scalar>(*gl, &mut rng, s);
        let (pa, pb) = (GroupPoint::from_matrix(&a)?, GroupPoint::from_matrix(&b)?);
        cases.push(exact(format!("{t} product {i:02}"), pa.mul(&pb) == GroupPoint::from_matrix(&a.mul(&b))?));
        let inv = GroupPoint::from_matrix(&a.inverse()?)?;
        cases.push(exact(format!("{t} inverse {i:02}"), pa.inv() == inv && pa.mul(&pa.inv()) == id));
    }
    for i in 0..real_points {
        let u = random_unitary(*gl, &mut rng);
        let p = GroupPoint::from_matrix(&u)?;
        cases.push(exact(format!("{t} real point {i}"), p.is_real_point() && p.theta_check() == p.inv()));
    }
    Ok(cases)
}

/// Pairing contract, supercommutation of the two actions and invariance of J.
pub fn action_cases(gl: &Gl, cfg: &OracleConfig) -> Result<Vec<Case>> {
    let cg = Cg::new(*gl);
    let acts = Actions::new(*gl);
    let ugl = acts.ugl();
    let words = ugl.pbw_words(2);
    let letters = Letter::all(gl);
    let t = tag(gl);
    let mut cases = Vec::new();
    for &x in &letters {
        let ux = UElement::letter(x);
        let mut bad_r = None;
        let mut bad_l = None;
        for s in Symbol::all(gl) {
            let f = Poly::symbol(s);
            let dr = acts.act_letter(Side::DR, x, &f);
            let dl = acts.act_letter(Side::DL, x, &f);
            for w in &words {
                let y = ugl.word::<Scalar>(w)?;
                let yx = ugl.mul(&y, &ux)?;
                let xy = ugl.mul(&ux, &y)?;
                let sr = sign::<Scalar>(x.odd && (s.odd ^ word_is_odd(w)));
                if cg.pair(&dr, &y) != sr * cg.pair(&f, &yx) {
                    bad_r.get_or_insert(format!("{s} against {y}"));
                }
                // S(x) = −x on letters.
                let sl = -sign::<Scalar>(x.odd && s.odd);
                if cg.pair(&dl, &y) != sl * cg.pair(&f, &xy) {
                    bad_l.get_or_insert(format!("{s} against {y}"));
                }
            }
        }
        cases.push(Case::new(format!("{t} contract dR {x}"), bad_r.is_none(), bad_r));
        cases.push(Case::new(format!("{t} contract dL {x}"), bad_l.is_none(), bad_l));
    }
    for &x in &letters {
        let mut bad = None;
        for &y in &letters {
            for s in Symbol::all(gl) {
                let f = Poly::symbol(s);
                let lr = acts.act_letter(Side::DL, x, &acts.act_letter(Side::DR, y, &f));
                let rl = acts.act_letter(Side::DR, y, &acts.act_letter(Side::DL, x, &f));
                if lr != rl.scale(&sign(x.odd && y.odd)) {
                    bad.get_or_insert(format!("{y} on {s}"));
                }
            }
        }
        cases.push(Case::new(format!("{t} supercommute dL {x}"), bad.is_none(), bad));
    }
    for side in [Side::DL, Side::DR] {
        for &x in &letters {
            let mut bad = None;
            for (i, j) in cg.relations().generators().iter().enumerate() {
                let v = cg.is_zero_mod_j(&acts.act_letter(side, x, j), cfg)?;
                if !v.is_zero() {
                    bad.get_or_insert(format!("relation {i}"));
                }
            }
            cases.push(Case::new(format!("{t} ideal invariant {side} {x}"), bad.is_none(), bad));
        }
    }
    Ok(cases)
}

/// Images of the super-block generators `C^{(r+1)}_ab` under the odd
/// Chevalley letters, against the naive closed forms, plus the vanishing
/// on the other blocks.
pub fn super_block_cases(p: &LeviProfile) -> Result<Vec<Case>> {
    let gl = p.gl();
    let Some(r) = p.super_block() else {
        return Err(Error::Usage("profile has no super block".into()));
    };
    let acts = Actions::new(*gl);
    let up = Letter::new(gl, gl.m, gl.m + 1);
    let down = Letter::new(gl, gl.m + 1, gl.m);
    let t = format!("{} [{p}]", tag(gl));
    let mut cases = Vec::new();
    for a in gl.indices() {
        for b in gl.indices() {
            let c = c_block(p, r + 1, a, b)?;
            let (pu, pd) = super_block_images_naive(gl, a, b)?;
            let (du, dd) = super_block_images(gl, a, b)?;
            let lu = acts.act_letter(Side::DL, up, &c);
            let ld = acts.act_letter(Side::DL, down, &c);
            let w = |got: &Poly, want: &Poly| (got != want).then(|| format!("got {got}, naive {want}"));
            cases.push(Case::new(format!("{t} naive dL {up} C[{};{a},{b}]", r + 1), lu == pu, w(&lu, &pu)));
            cases.push(Case::new(format!("{t} naive dL {down} C[{};{a},{b}]", r + 1), ld == pd, w(&ld, &pd)));
            cases.push(exact(format!("{t} derived dL {up} C[{};{a},{b}]", r + 1), lu == du));
            cases.push(exact(format!("{t} derived dL {down} C[{};{a},{b}]", r + 1), ld == dd));
            for i in p.outer_blocks() {
                let ci = c_block(p, i, a, b)?;
                let zero =
                    acts.act_letter(Side::DL, up, &ci).is_zero() && acts.act_letter(Side::DL, down, &ci).is_zero();
                cases.push(exact(format!("{t} odd letters kill C[{i};{a},{b}]"), zero));
            }
        }
    }
    Ok(cases)
}

/// Which Laplacian checks to run at one `(m,n)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LaplacianPlan {
    pub power_k: Option<u32>,
    pub casimir_k: Option<u32>,
    pub theta_k: Option<u32>,
    pub l_one: bool,
}

impl LaplacianPlan {
    /// Every check that applies at `(m,n)`.
    pub fn full(gl: &Gl) -> Self {
        let l = gl.m as i64 - gl.n as i64 + 1;
        LaplacianPlan {
            power_k: Some(4),
            casimir_k: Some(3),
            theta_k: (l <= 0).then_some(3),
            l_one: l == 1,
        }
    }
}

/// Laplacian identities on the projective spherical functions.
pub fn laplacian_cases(gl: &Gl, cfg: &OracleConfig, plan: LaplacianPlan) -> Result<Vec<Case>> {
    let cg = Cg::new(*gl);
    let acts = Actions::new(*gl);
    let ugl = acts.ugl();
    let rr = r(gl);
    let t = tag(gl);
    let mut cases = Vec::new();
    let mut check = |name: String, f: Poly| -> Result<()> {
        let v = cg.is_zero_mod_j(&f, cfg)?;
        cases.push(Case::from_verdict(name, true, &v));
        Ok(())
    };
    if let Some(kmax) = plan.power_k {
        for k in 0..=kmax {
            let lhs = laplacian_apply(&acts, &rr.pow(k));
            check(format!("{t} power formula k={k}"), &lhs - &laplacian_power_formula(gl, k))?;
        }
    }
    if let Some(kmax) = plan.casimir_k {
        let half = Scalar::from_ratio(1, 2);
        let cas = ugl.casimir::<Scalar>();
        for k in 0..=kmax {
            let f = rr.pow(k);
            let diff = &laplacian_apply(&acts, &f) - &acts.act(Side::DR, &cas, &f).scale(&half);
            check(format!("{t} casimir k={k}"), diff)?;
        }
    }
    if let Some(kmax) = plan.theta_k {
        for k in 0..=kmax {
            let lam = Scalar::from_int(theta_eigenvalue(gl, k));
            let th = theta(gl, k);
            check(format!("{t} theta eigen k={k}"), &laplacian_apply(&acts, &th) - &th.scale(&lam))?;
            let tc = theta_corrected(gl, k)?;
            check(format!("{t} theta corrected eigen k={k}"), &laplacian_apply(&acts, &tc) - &tc.scale(&lam))?;
        }
    }
    if plan.l_one {
        for (a, b) in [(1, 0), (0, 1), (2, 3)] {
            let f = &Poly::constant(Scalar::from_int(a)) + &rr.scale(&Scalar::from_int(b));
            let diff = &laplacian_apply(&acts, &f) - &Poly::constant(Scalar::from_int(b));
            check(format!("{t} L=1 a={a} b={b}"), diff)?;
        }
    }
    Ok(cases)
}

/// Sergeev span, vanishing of mixed-degree invariants and the centralizer.
pub fn fft_cases(gl: &Gl, max_d: usize, mixed_max: usize, commutant_d: Option<usize>) -> Result<Vec<Case>> {
    let t = tag(gl);
    let mut cases = Vec::new();
    for d in 1..=max_d {
        let inv = invariant_subspace(gl, d, d, DEFAULT_TENSOR_CAP)?;
        let mut space = Echelon::new();
        for v in &inv {
            space.insert(v.comps().map(|(i, c)| (flat(i, gl.dim()), c.clone())).collect());
        }
        let mut span = Echelon::new();
        let mut outside = None;
        for sigma in Perm::all(d) {
            let s = sergeev_invariant(gl, &sigma, DEFAULT_TENSOR_CAP)?;
            let v: SparseVec<Scalar> = s.comps().map(|(i, c)| (flat(i, gl.dim()), c.clone())).collect();
            if !space.contains(&v) {
                outside.get_or_insert(format!("sigma {sigma} not invariant"));
            }
            span.insert(v);
        }
        cases.push(Case::new(format!("{t} sergeev invariant d={d}"), outside.is_none(), outside));
        let ok = span.rank() == inv.len();
        let w = format!("span rank {} vs invariant dim {}", span.rank(), inv.len());
        cases.push(Case::new(format!("{t} sergeev span d={d}"), ok, (!ok).then_some(w)));
    }
    for total in 1..=mixed_max {
        for k in 0..=total {
            let l = total - k;
            if k == l {
                continue;
            }
            let inv = invariant_subspace(gl, k, l, DEFAULT_TENSOR_CAP)?;
            cases.push(exact(format!("{t} no invariants k={k} l={l}"), inv.is_empty()));
        }
    }
    if let Some(d) = commutant_d {
        let rep = verify_fft(gl, d, DEFAULT_TENSOR_CAP)?;
        let w = format!("commutant {} vs group algebra {}", rep.commutant_dim, rep.group_algebra_dim);
        cases.push(Case::new(format!("{t} commutant d={d}"), rep.centralizer_equal, Some(w)));
    }
    Ok(cases)
}

fn flat(idx: &[u8], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &a| acc * dim + (a as usize - 1))
}

/// Invariance of the homogeneous-space generators with negative controls.
pub fn invariance_cases(p: &LeviProfile, cfg: &OracleConfig) -> Result<Vec<Case>> {
    let gl = p.gl();
    let cg = Cg::new(*gl);
    let acts = Actions::new(*gl);
    let t = format!("{} [{p}]", tag(gl));
    let mut cases = Vec::new();
    let mut push = |name: String, expect: bool, got: bool| {
        let w = (expect != got).then(|| format!("is_invariant returned {got}"));
        cases.push(Case::new(name, expect == got, w));
    };
    for (name, f) in left_generators(p) {
        push(format!("{t} left {name}"), true, acts.is_invariant(Side::DL, &f, p, cfg)?);
    }
    let mut bi = bi_generators(p);
    if p.super_block() == Some(1) && p.sizes().len() == 3 && p.sizes()[2] == 1 {
        bi.push(("r".into(), r(gl)));
        for k in 1..=2 {
            bi.push((format!("theta[{k}]"), theta(gl, k)));
        }
    }
    for (name, f) in bi {
        push(format!("{t} bi dL {name}"), true, acts.is_invariant(Side::DL, &f, p, cfg)?);
        push(format!("{t} bi dR {name}"), true, acts.is_invariant(Side::DR, &f, p, cfg)?);
    }
    let t11 = cg.t(1, 1)?;
    push(format!("{t} control dL t[1,1]"), false, acts.is_invariant(Side::DL, &t11, p, cfg)?);
    push(format!("{t} control dR t[1,1]"), false, acts.is_invariant(Side::DR, &t11, p, cfg)?);
    for a in gl.indices() {
        let za = z(gl, a)?;
        push(format!("{t} control dL z[{a}]"), false, acts.is_invariant(Side::DL, &za, p, cfg)?);
    }
    Ok(cases)
}

/// Profile `1,…,1|1,…,1` with every block of size one.
pub fn unit_super_profile(gl: &Gl) -> Result<LeviProfile> {
    if gl.m == 0 || gl.n == 0 {
        return Err(Error::Usage("a super block needs m, n >= 1".into()));
    }
    LeviProfile::new(*gl, vec![1; gl.dim()], Some(gl.m))
}

/// Runs one named suite at a single `(m,n)`.
pub fn run_suite(name: &str, gl: &Gl, cfg: &OracleConfig) -> Result<SuiteReport> {
    let cases = match name {
        "hopf" => hopf_cases(gl, cfg, gl.dim() <= 2)?,
        "relations" => relation_cases(gl, cfg, 10, 3)?,
        "supergroup" => supergroup_cases(gl, cfg, 20, 5)?,
        "actions" => {
            let mut c = action_cases(gl, cfg)?;
            if gl.m > 0 && gl.n > 0 {
                c.extend(super_block_cases(&unit_super_profile(gl)?)?);
            }
            c
        }
        "laplacian" => laplacian_cases(gl, cfg, LaplacianPlan::full(gl))?,
        "t51" => verify_projective_spherical(gl, if gl.n == 1 { 4 } else { 5 }, cfg)?,
        "maxrank" => {
            let mut c = Vec::new();
            for (side, bound) in [(RankSide::N, gl.n), (RankSide::M, gl.m)] {
                for k in 1..=bound.min(2) {
                    c.extend(maximal_rank_orders(gl, k, side, k as u32 + 1, cfg)?);
                }
            }
            c
        }
        "fft" => {
            let max_d = (1..=3).take_while(|&d| gl.dim().pow(2 * d as u32) <= 4096).last().unwrap_or(0);
            fft_cases(gl, max_d, 4, (gl.dim().pow(4) <= 4096).then_some(2))?
        }
        "invariance" => {
            let mut c = invariance_cases(&LeviProfile::projective(*gl)?, cfg)?;
            if gl.m > 0 && gl.n > 0 {
                c.extend(invariance_cases(&unit_super_profile(gl)?, cfg)?);
            }
            c
        }
        _ => return Err(Error::Usage(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", ")))),
    };
    Ok(SuiteReport::new(name, cases))
}

fn gls(pairs: &[(usize, usize)]) -> Result<Vec<Gl>> {
    pairs.iter().map(|&(m, n)| Gl::new(m, n)).collect()
}

/// Number of acceptance criteria.
pub const CRITERIA: usize = 9;

/// The `i`-th acceptance criterion (1-based), over all its `(m,n)`.
pub fn criterion(i: usize, cfg: &OracleConfig) -> Result<SuiteReport> {
    let mut cases = Vec::new();
    let name = match i {
        1 => {
            for gl in gls(&[(1, 1), (2, 1), (2, 2)])? {
                cases.extend(hopf_cases(&gl, cfg, gl.dim() == 2)?);
            }
            "hopf"
        }
        2 => {
            for gl in gls(&[(1, 1), (2, 1)])? {
                cases.extend(relation_cases(&gl, cfg, 10, 3)?);
            }
            "relations"
        }
        3 => {
            for gl in gls(&[(1, 1), (2, 1)])? {
                cases.extend(supergroup_cases(&gl, cfg, 20, 5)?);
            }
            "supergroup"
        }
        4 => {
            for gl in gls(&[(1, 1), (2, 1)])? {
                cases.extend(action_cases(&gl, cfg)?);
            }
            let gl = Gl::new(2, 2)?;
            cases.extend(super_block_cases(&LeviProfile::parse(gl, "1,1|1,1")?)?);
            "actions"
        }
        5 => {
            for gl in gls(&[(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (1, 3)])? {
                let plan = LaplacianPlan {
                    power_k: (gl != Gl::new(1, 3)?).then_some(4),
                    casimir_k: (gl.m == 1 && gl.n <= 2).then_some(3),
                    theta_k: (gl.m == 1 && gl.n >= 2).then_some(3),
                    l_one: gl.m == 1 && gl.n == 1,
                };
                cases.extend(laplacian_cases(&gl, cfg, plan)?);
            }
            "laplacian"
        }
        6 => {
            for gl in gls(&[(1, 1), (2, 1), (3, 1)])? {
                cases.extend(verify_projective_spherical(&gl, 0, cfg)?);
            }
            cases.extend(verify_projective_spherical(&Gl::new(1, 2)?, 5, cfg)?);
            "t51"
        }
        7 => {
            let gl = Gl::new(2, 2)?;
            for side in [RankSide::N, RankSide::M] {
                for k in 1..=2 {
                    cases.extend(maximal_rank_orders(&gl, k, side, k as u32 + 1, cfg)?);
                }
            }
            "maxrank"
        }
        8 => {
            let g11 = Gl::new(1, 1)?;
            cases.extend(fft_cases(&g11, 3, 4, Some(2))?);
            cases.extend(fft_cases(&Gl::new(2, 1)?, 2, 4, None)?);
            "fft"
        }
        9 => {
            let gl = Gl::new(2, 2)?;
            cases.extend(invariance_cases(&LeviProfile::projective(gl)?, cfg)?);
            cases.extend(invariance_cases(&LeviProfile::parse(gl, "1,1|1,1")?, cfg)?);
            "invariance"
        }
        _ => return Err(Error::Usage(format!("criteria are numbered 1..={CRITERIA}"))),
    };
    Ok(SuiteReport::new(format!("criterion {i}: {name}"), cases))
}

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::actions::{Actions, Side};
use crate::cg::{Cg, CgTensor2, Mode, OracleConfig};
use crate::error::{Error, Result};
use crate::grading::Gl;
use crate::grassmann::{random_supermatrix, random_unitary, GroupPoint, Sampling};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::{sign, Coeff, One, Scalar, Zero};
use crate::spherical::{
    bi_generators, c_block, laplacian_apply, laplacian_power_formula, left_generators, maximal_rank_orders, r,
    super_block_images, super_block_images_naive, theta, theta_corrected, theta_eigenvalue, verify_projective_spherical,
    z, LeviProfile, RankSide,
};
use crate::superpoly::{Poly, Symbol};
use crate::tensorinv::{invariant_subspace, sergeev_invariant, verify_fft, Perm, DEFAULT_TENSOR_CAP};
use crate::ugl::{word_is_odd, Letter, UElement, Ugl};
