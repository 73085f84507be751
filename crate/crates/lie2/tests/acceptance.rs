//! Acceptance suite: every criterion as one test, printing one pass/fail
//! line. All thresholds are pinned here; everything is exact arithmetic, so
//! "tolerance" always means exact equality.

use lie2::autint::{
    differentiation_checks, sample_aut0, sample_unit_tau, AutContext, AutCrossedModule,
    GroupCrossedModuleOps,
};
use lie2::cecohom::{ce_is_coboundary, LieRep};
use lie2::cohomology::{
    adjoint_rep, coboundary, cochain_dim, d_matrix, Cochain, Rep2,
};
use lie2::constructions::{
    self, ad_crossed_module, ideal_inclusion, omni_leibniz, omni_lie, skew_symmetrize,
    string_killing, LieAlgebra, LieCrossedModule, TwoComplex,
};
use lie2::crossedmod::{canonical_cm, gerstenhaber_class};
use lie2::derdef::{abelian_extension, build_der, deform, extension_equivalence, trivializing_equivalence, Derivation0};
use lie2::exactlin::mat::{unit_vec, vec_is_zero, vec_neg, vec_sub, Mat, Vector};
use lie2::exactlin::tensor::increasing_tuples;
use lie2::exactlin::{FinSpace, LinMap, MultiTensor, Symmetry};
use lie2::lie2core::{equivalence_invariants, Lie2Algebra, Lie2Candidate};
use lie2::ring::Ring;
use lie2::sample::{
    random_candidate, random_cochain, random_verified_algebra, rng_from_seed,
};
use lie2::scalar::Scalar;
use rand::Rng;
use std::collections::HashMap;
use std::time::Instant;

fn pass(n: u32, name: &str) {
    println!("acceptance {n} ({name}): PASS");
}

/// Dense, independently-evaluated copy of a tensor: every full index tuple
/// maps to its value, with signs recomputed by cycle-count parity rather
/// than the library's insertion-sort rule.
fn dense_table(t: &MultiTensor<Scalar>) -> HashMap<Vec<usize>, Vector<Scalar>> {
    fn parity_by_cycles(perm: &[usize]) -> bool {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut odd = false;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = perm[c];
                len += 1;
            }
            if len % 2 == 0 {
                odd = !odd;
            }
        }
        odd
    }
    let mut out = HashMap::new();
    let dims: Vec<usize> = t.inputs().iter().map(|(s, _)| s.dim()).collect();
    for idx in lie2::exactlin::tensor::tuples(&dims) {
        // canonicalize by hand: locate blocks of equal (space, symmetry)
        let mut key = idx.clone();
        let mut negate = false;
        let mut degenerate = false;
        let mut start = 0;
        while start < key.len() {
            let (sp, sym) = &t.inputs()[start];
            let mut end = start + 1;
            if *sym != Symmetry::Plain {
                while end < key.len() && t.inputs()[end].1 == *sym && &t.inputs()[end].0 == sp {
                    end += 1;
                }
            }
            if *sym != Symmetry::Plain {
                let block = &key[start..end];
                let mut order: Vec<usize> = (0..block.len()).collect();
                order.sort_by_key(|&i| block[i]);
                let sorted: Vec<usize> = order.iter().map(|&i| block[i]).collect();
                if *sym == Symmetry::Alt {
                    if sorted.windows(2).any(|w| w[0] == w[1]) {
                        degenerate = true;
                        break;
                    }
                    if parity_by_cycles(&order) {
                        negate = !negate;
                    }
                }
                key[start..end].copy_from_slice(&sorted);
            }
            start = end;
        }
        let val = if degenerate {
            vec![Scalar::zero(); t.output().dim()]
        } else {
            let mut v = t.eval_basis(&key);
            if negate {
                v = vec_neg(&v);
            }
            v
        };
        out.insert(idx, val);
    }
    out
}

#[test]
fn criterion_1_axiom_engine() {
    let start = Instant::now();
    let mut rng = rng_from_seed(1001);
    let mut total_failures = 0usize;
    for _ in 0..200 {
        let cand = random_candidate(&mut rng, 3);
        let report = cand.verify().expect("shape-valid candidates never error");
        // naive re-evaluation from dense tables
        let d = &cand.d;
        let t00 = dense_table(&cand.l2_00);
        let t01 = dense_table(&cand.l2_01);
        let t3 = dense_table(&cand.l3);
        let n0 = cand.g0.dim();
        let n1 = cand.gm1.dim();
        let br00 = |x: usize, y: usize| t00[&vec![x, y]].clone();
        let apply01 = |xv: &Vector<Scalar>, a: usize| -> Vector<Scalar> {
            let mut acc = vec![Scalar::zero(); n1];
            for (x, c) in xv.iter().enumerate() {
                if !c.is_zero() {
                    for (o, v) in t01[&vec![x, a]].iter().enumerate() {
                        acc[o].add_assign(&c.mul(v));
                    }
                }
            }
            acc
        };
        let mut naive: Vec<(String, Vec<usize>)> = Vec::new();
        // (1a)
        for x in 0..n0 {
            for a in 0..n1 {
                let lhs = d.apply(&t01[&vec![x, a]]);
                let da = d.apply_basis(a);
                let mut rhs = vec![Scalar::zero(); n0];
                for (y, c) in da.iter().enumerate() {
                    if !c.is_zero() {
                        for (o, v) in br00(x, y).iter().enumerate() {
                            rhs[o].add_assign(&c.mul(v));
                        }
                    }
                }
                if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                    naive.push(("l2a.1a".into(), vec![x, a]));
                }
            }
        }
        // (1b) on a <= b
        for t in increasing_tuples(n1, 2, false) {
            let (a, b) = (t[0], t[1]);
            let da = d.apply_basis(a);
            let db = d.apply_basis(b);
            let lhs = apply01(&da, b);
            let rhs = vec_neg(&apply01(&db, a));
            if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                naive.push(("l2a.1b".into(), vec![a, b]));
            }
        }
        // (2)
        for t in increasing_tuples(n0, 3, true) {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut defect = d.apply(&t3[&vec![x, y, z]]);
            for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                let inner = br00(p, q);
                for (m, c) in inner.iter().enumerate() {
                    if !c.is_zero() {
                        for (o, v) in br00(m, r).iter().enumerate() {
                            defect[o].add_assign(&c.mul(v));
                        }
                    }
                }
            }
            if !vec_is_zero(&defect) {
                naive.push(("l2a.2".into(), t.clone()));
            }
        }
        // (3)
        for t in increasing_tuples(n0, 2, true) {
            let (x, y) = (t[0], t[1]);
            for a in 0..n1 {
                let mut defect = apply01(&br00(x, y), a);
                // [[y,a],x] = -[x,[y,a]]
                let ya = t01[&vec![y, a]].clone();
                let mut term = vec![Scalar::zero(); n1];
                for (m, c) in ya.iter().enumerate() {
                    if !c.is_zero() {
                        for (o, v) in t01[&vec![x, m]].iter().enumerate() {
                            term[o].add_assign(&c.mul(v));
                        }
                    }
                }
                defect = vec_sub(&defect, &term);
                let xa = t01[&vec![x, a]].clone();
                let mut term2 = vec![Scalar::zero(); n1];
                for (m, c) in xa.iter().enumerate() {
                    if !c.is_zero() {
                        for (o, v) in t01[&vec![y, m]].iter().enumerate() {
                            term2[o].add_assign(&c.mul(v));
                        }
                    }
                }
                defect = lie2::exactlin::mat::vec_add(&defect, &term2);
                let da = d.apply_basis(a);
                for (z, c) in da.iter().enumerate() {
                    if !c.is_zero() {
                        for (o, v) in t3[&vec![x, y, z]].iter().enumerate() {
                            defect[o].add_assign(&c.mul(v));
                        }
                    }
                }
                if !vec_is_zero(&defect) {
                    naive.push(("l2a.3".into(), vec![x, y, a]));
                }
            }
        }
        // (4)
        for t in increasing_tuples(n0, 4, true) {
            let idx = [t[0], t[1], t[2], t[3]];
            let mut defect = vec![Scalar::zero(); n1];
            for i in 0..4 {
                for j in i + 1..4 {
                    let rest: Vec<usize> =
                        (0..4).filter(|&k| k != i && k != j).map(|k| idx[k]).collect();
                    let bij = br00(idx[i], idx[j]);
                    let mut term = vec![Scalar::zero(); n1];
                    for (m, c) in bij.iter().enumerate() {
                        if !c.is_zero() {
                            for (o, v) in t3[&vec![m, rest[0], rest[1]]].iter().enumerate() {
                                term[o].add_assign(&c.mul(v));
                            }
                        }
                    }
                    if (i + j) % 2 == 1 {
                        defect = lie2::exactlin::mat::vec_add(&defect, &term);
                    } else {
                        defect = vec_sub(&defect, &term);
                    }
                }
            }
            for i in 0..4 {
                let rest: Vec<usize> = (0..4).filter(|&k| k != i).map(|k| idx[k]).collect();
                let l3v = t3[&vec![rest[0], rest[1], rest[2]]].clone();
                let term = apply01(&unit_vec(n0, idx[i]), 0)
                    .iter()
                    .map(|_| Scalar::zero())
                    .collect::<Vec<_>>();
                let _ = term;
                let mut term = vec![Scalar::zero(); n1];
                for (m, c) in l3v.iter().enumerate() {
                    if !c.is_zero() {
                        for (o, v) in t01[&vec![idx[i], m]].iter().enumerate() {
                            term[o].add_assign(&c.mul(v));
                        }
                    }
                }
                if i % 2 == 0 {
                    defect = vec_sub(&defect, &term);
                } else {
                    defect = lie2::exactlin::mat::vec_add(&defect, &term);
                }
            }
            if !vec_is_zero(&defect) {
                naive.push(("l2a.4".into(), t.clone()));
            }
        }
        let reported: Vec<(String, Vec<String>)> = report
            .failures()
            .iter()
            .map(|f| (f.law.clone(), f.witness.clone()))
            .collect();
        total_failures += reported.len();
        assert_eq!(
            reported.len(),
            naive.len(),
            "failure count mismatch: engine {:?} vs naive {:?}",
            reported,
            naive
        );
        let to_labels = |law: &str, w: &[usize]| -> Vec<String> {
            match law {
                "l2a.1a" => vec![
                    cand.g0.label(w[0]).to_string(),
                    cand.gm1.label(w[1]).to_string(),
                ],
                "l2a.1b" => vec![
                    cand.gm1.label(w[0]).to_string(),
                    cand.gm1.label(w[1]).to_string(),
                ],
                "l2a.2" | "l2a.4" => w.iter().map(|&i| cand.g0.label(i).to_string()).collect(),
                _ => vec![
                    cand.g0.label(w[0]).to_string(),
                    cand.g0.label(w[1]).to_string(),
                    cand.gm1.label(w[2]).to_string(),
                ],
            }
        };
        for (law, w) in &naive {
            let labels = to_labels(law, w);
            assert!(
                reported.iter().any(|(l, rw)| l == law && *rw == labels),
                "naive failure {law} {labels:?} not reported"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "criterion 1 took {elapsed:?}, budget is 10 s"
    );
    println!("  200 tensor families, {total_failures} flagged instances, {elapsed:?}");
    pass(1, "axiom engine vs naive re-evaluation");
}

#[test]
fn criterion_2_master_sign_test() {
    let mut rng = rng_from_seed(1002);
    let mut pairs = 0;
    while pairs < 50 {
        let l = random_verified_algebra(&mut rng, 3);
        let rep = if rng.gen_bool(0.5) {
            adjoint_rep(&l)
        } else {
            let v0 = FinSpace::numbered("w0", "u", rng.gen_range(1..=3));
            let vm1 = FinSpace::numbered("wm1", "m", rng.gen_range(0..=3));
            let partial = LinMap::new(
                vm1.clone(),
                v0.clone(),
                lie2::sample::random_matrix(&mut rng, v0.dim(), vm1.dim(), 2),
            )
            .unwrap();
            Rep2::trivial(l.clone(), TwoComplex::new(v0, vm1, partial).unwrap())
        };
        for k in -1..=3i64 {
            if cochain_dim(&rep, k) == 0 {
                continue;
            }
            let dk = d_matrix(&rep, k);
            let dk1 = d_matrix(&rep, k + 1);
            assert!(
                dk1.mul(&dk).is_zero(),
                "D.D != 0 at degree {k} (pair {pairs})"
            );
        }
        pairs += 1;
    }
    println!("  D.D = 0 through degree 3 on {pairs} verified (algebra, rep) pairs");
    pass(2, "master sign test D.D = 0");
}

#[test]
fn criterion_3_golden_string_sl2() {
    let g = constructions::sl2::<Scalar>();
    let s = string_killing(&g).unwrap();
    // independent Killing value: trace(ad_e . ad_{[f,h]}) computed via raw
    // matrix multiplication
    let ad = |i: usize| -> Mat<Scalar> {
        Mat::from_cols(
            (0..3)
                .map(|j| g.bracket().eval_basis(&[i, j]))
                .collect::<Vec<_>>(),
            3,
        )
    };
    let fh = g.bracket().eval_basis(&[1, 2]);
    let mut ad_fh = Mat::zero(3, 3);
    for (k, c) in fh.iter().enumerate() {
        ad_fh = ad_fh.add(&ad(k).scale(c));
    }
    let prod = ad(0).mul(&ad_fh);
    let mut trace = Scalar::zero();
    for i in 0..3 {
        trace.add_assign(&prod[(i, i)]);
    }
    assert_eq!(s.l3().eval_basis(&[0, 1, 2]), vec![trace.clone()]);
    assert_eq!(trace, Scalar::from_i64(8));
    // the l3 class is certified non-trivial
    let inv = equivalence_invariants(&s).unwrap();
    assert!(!inv.l3_class_is_zero);
    assert!(ce_is_coboundary(&inv.module, inv.skeletalization.skel.l3()).is_none());
    pass(3, "String(sl2) golden values and nontrivial class");
}

#[test]
fn criterion_4_whitehead_desk_check() {
    let g = constructions::sl2::<Scalar>().as_lie2();
    let v = TwoComplex::concentrated(FinSpace::new("Q", vec!["1".into()]));
    let rep = Rep2::trivial(g, v);
    let dims: Vec<usize> = (1..=3)
        .map(|k| lie2::cohomology::cohomology(&rep, k).unwrap().dim_h)
        .collect();
    assert_eq!(dims, vec![0, 0, 1]);
    pass(4, "Whitehead dims for sl2");
}

#[test]
fn criterion_5_derivations_golden() {
    let g = constructions::sl2::<Scalar>();
    let s = string_killing(&g).unwrap();
    let der = build_der(&s).unwrap();
    assert_eq!(der.algebra.g0().dim(), 6);
    assert_eq!(der.algebra.gm1().dim(), 3); // Der_{-1} = sl2*
    assert!(der.algebra.is_strict());

    // aligner: each derivation is (ad_x, 0, CE-differential of xi)
    let n = 3;
    let ad_flat = Mat::from_cols(
        (0..n)
            .map(|i| {
                let m = g.ad(&unit_vec(n, i));
                let mut flat = Vec::new();
                for r in 0..n {
                    for c in 0..n {
                        flat.push(m[(r, c)].clone());
                    }
                }
                flat
            })
            .collect(),
        n * n,
    );
    // lX = D(xi): D(xi)(a,b) = -xi([a,b]) on the three basis pairs
    let pairs = increasing_tuples(n, 2, true);
    let dxi_mat = Mat::from_cols(
        (0..n)
            .map(|xi| {
                pairs
                    .iter()
                    .map(|t| g.bracket().eval_basis(&[t[0], t[1]])[xi].neg())
                    .collect()
            })
            .collect(),
        pairs.len(),
    );
    let align = |d: &Derivation0<Scalar>| -> (Vector<Scalar>, Vector<Scalar>) {
        assert!(d.x1.is_zero(), "t-component must vanish for String(sl2)");
        let mut flat = Vec::new();
        for r in 0..n {
            for c in 0..n {
                flat.push(d.x0.mat()[(r, c)].clone());
            }
        }
        let x = ad_flat.solve(&flat).expect("X0 = ad_x");
        let lx_flat: Vector<Scalar> = pairs.iter().map(|t| d.lx.eval_basis(t)[0].clone()).collect();
        let xi = dxi_mat.solve(&lx_flat).expect("lX = D(xi)");
        (x, xi)
    };
    // bracket table matches sl2 x| sl2^*: {(x,xi),(y,eta)} =
    // ([x,y], ad*_x eta - ad*_y xi)
    let coad = |x: &Vector<Scalar>, xi: &Vector<Scalar>| -> Vector<Scalar> {
        // <ad*_x xi, z> = -<xi, [x,z]>
        (0..n)
            .map(|z| {
                let br = g.bracket_vec(x, &unit_vec(n, z));
                let mut acc = Scalar::zero();
                for (m, c) in br.iter().enumerate() {
                    acc.add_assign(&c.mul(&xi[m]));
                }
                acc.neg()
            })
            .collect()
    };
    for i in 0..6 {
        for j in 0..6 {
            let di = &der.space.derivations[i];
            let dj = &der.space.derivations[j];
            let (xi_, a) = align(di);
            let (yj, b) = align(dj);
            let br = di.bracket(dj);
            let (bx, bxi) = align(&br);
            assert_eq!(bx, g.bracket_vec(&xi_, &yj), "x-part of the bracket");
            let want = vec_sub(&coad(&xi_, &b), &coad(&yj, &a));
            assert_eq!(bxi, want, "xi-part of the bracket");
        }
    }
    // dbar(Theta) = (0, -Theta)
    for t in 0..3 {
        let theta = der.theta_map(&unit_vec(3, t));
        let db = der.dbar(&theta);
        let (x, xi) = align(&db);
        assert!(vec_is_zero(&x));
        let theta_vec: Vector<Scalar> = (0..3).map(|j| theta.mat()[(0, j)].clone()).collect();
        assert_eq!(xi, vec_neg(&theta_vec));
    }
    pass(5, "Der(String(sl2)) matches sl2 x| sl2* with dbar = (0, -Theta)");
}

#[test]
fn criterion_6_deformation_iff_cocycle() {
    let mut rng = rng_from_seed(1006);
    let mut passing = 0usize;
    let mut failing = 0usize;
    for _ in 0..5 {
        let l = random_verified_algebra(&mut rng, 2);
        let rep = adjoint_rep(&l);
        for i in 0..12 {
            // half arbitrary cochains, half constructed cocycles, so both
            // directions of the equivalence are exercised
            let c2 = if i % 2 == 0 {
                random_cochain(&mut rng, &rep, 2, 2)
            } else {
                lie2::sample::random_cocycle(&mut rng, &rep, 2, 2)
            };
            let out = deform(&l, &c2).unwrap();
            assert_eq!(out.report.passed(), out.cocycle, "deform <=> cocycle");
            if out.cocycle {
                passing += 1;
            } else {
                failing += 1;
            }
        }
        // coboundary inputs trivialize via a verified Id + eps phi
        for _ in 0..3 {
            let b = random_cochain(&mut rng, &rep, 1, 2);
            let hom = trivializing_equivalence(&l, &b).unwrap();
            assert!(hom.verify().passed());
        }
    }
    assert!(passing > 0 && failing > 0, "both outcomes must occur");
    println!("  {passing} cocycles deformed, {failing} non-cocycles rejected, 15 trivializations verified");
    pass(6, "deformation <=> cocycle with trivializing equivalences");
}

#[test]
fn criterion_7_extension_iff_cocycle() {
    let mut rng = rng_from_seed(1007);
    let mut accepted = 0usize;
    let mut rejected = 0usize;
    for i in 0..6 {
        let l = random_verified_algebra(&mut rng, 2);
        let rep = if i % 2 == 0 {
            adjoint_rep(&l)
        } else {
            let v0 = FinSpace::numbered("w0", "u", rng.gen_range(1..=2));
            let vm1 = FinSpace::numbered("wm1", "m", rng.gen_range(0..=2));
            let partial = LinMap::new(
                vm1.clone(),
                v0.clone(),
                lie2::sample::random_matrix(&mut rng, v0.dim(), vm1.dim(), 1),
            )
            .unwrap();
            Rep2::trivial(l.clone(), TwoComplex::new(v0, vm1, partial).unwrap())
        };
        for _ in 0..8 {
            let c2 = random_cochain(&mut rng, &rep, 2, 2);
            let closed = coboundary(&rep, &c2).is_zero();
            match abelian_extension(&rep, &c2) {
                Ok(ext) => {
                    assert!(closed, "extension built from a non-cocycle");
                    assert!(ext.i.verify().passed() && ext.p.verify().passed());
                    accepted += 1;
                }
                Err(lie2::error::Error::Math(_)) => {
                    assert!(!closed, "cocycle rejected");
                    rejected += 1;
                }
                Err(e) => panic!("unexpected error {e}"),
            }
        }
        // cohomologous cocycles give equivalent extensions
        let c2 = lie2::sample::random_cocycle(&mut rng, &rep, 2, 2);
        let b = random_cochain(&mut rng, &rep, 1, 2);
        let (ext_a, ext_b, f) = extension_equivalence(&rep, &c2, &b).unwrap();
        assert!(f.verify().passed());
        let fi = lie2::lie2core::compose(&f, &ext_a.i).unwrap();
        assert_eq!(fi, ext_b.i);
        let pf = lie2::lie2core::compose(&ext_b.p, &f).unwrap();
        assert_eq!(pf, ext_a.p);
    }
    assert!(accepted > 0 && rejected > 0);
    println!("  {accepted} extensions built, {rejected} non-cocycles rejected, 6 equivalences verified");
    pass(7, "extension <=> cocycle with equivalences");
}

#[test]
fn criterion_8_leibniz_pipeline() {
    for n in 1..=3usize {
        let leib = omni_leibniz::<Scalar>(n).unwrap();
        let skewed = skew_symmetrize(&leib).unwrap();
        let direct = omni_lie::<Scalar>(n).unwrap();
        let basis = constructions::OmniBasis::new(n);
        for k in 0..n {
            assert_eq!(
                skewed.center_inclusion.apply_basis(k),
                unit_vec::<Scalar>(basis.dim(), basis.vec_index(k))
            );
        }
        assert_eq!(skewed.algebra.l2_00(), direct.l2_00());
        assert_eq!(skewed.algebra.d().mat(), direct.d().mat());
        for p in 0..basis.dim() {
            for k in 0..n {
                assert_eq!(
                    skewed.algebra.l2_01().eval_basis(&[p, k]),
                    direct.l2_01().eval_basis(&[p, k])
                );
            }
        }
        for t in increasing_tuples(basis.dim(), 3, true) {
            assert_eq!(
                skewed.algebra.l3().eval_basis(&t),
                direct.l3().eval_basis(&t),
                "l3 mismatch at {t:?} for n={n}"
            );
        }
    }
    pass(8, "skew-symmetrized omni-Leibniz equals omni_lie for n in 1..3");
}

#[test]
fn criterion_9_crossed_modules() {
    let mut rng = rng_from_seed(1009);
    // canonical_cm passes for >= 50 random verified algebras
    let mut count = 0usize;
    while count < 50 {
        let max_dim = if count % 10 == 0 { 3 } else { 2 };
        let l = random_verified_algebra(&mut rng, max_dim);
        if l.g0().dim() == 0 {
            continue;
        }
        let cm = canonical_cm(&l).unwrap();
        let report = cm.verify().unwrap();
        assert!(report.passed(), "canonical_cm failed: {}", report.summary());
        count += 1;
    }
    // gerstenhaber on >= 20 random strict crossed modules; closedness and
    // section-independence are certified inside (errors otherwise)
    let catalog: Vec<LieAlgebra<Scalar>> = vec![
        constructions::sl2(),
        constructions::heisenberg3(),
        constructions::solvable2(),
        LieAlgebra::abelian(FinSpace::numbered("ab", "x", 2)),
    ];
    let mut built = 0usize;
    while built < 20 {
        let g = &catalog[rng.gen_range(0..catalog.len())];
        let cm: Option<LieCrossedModule<Scalar>> = match rng.gen_range(0..3u8) {
            0 => ad_crossed_module(g).ok(),
            1 => {
                let center = g.center();
                if center.is_empty() {
                    None
                } else {
                    ideal_inclusion(g, &center, "z").ok()
                }
            }
            _ => {
                // split module type: m = V abelian, varphi = 0, action trivial
                let v = FinSpace::numbered("V", "v", rng.gen_range(1..=2));
                let m = LieAlgebra::abelian(v.clone());
                let varphi = LinMap::zero(v.clone(), g.space().clone());
                let action = MultiTensor::new(
                    vec![
                        (g.space().clone(), Symmetry::Plain),
                        (v.clone(), Symmetry::Plain),
                    ],
                    v.clone(),
                );
                LieCrossedModule::new(m, g.clone(), varphi, action).ok()
            }
        };
        let Some(cm) = cm else { continue };
        let out = gerstenhaber_class(&cm, &mut rng).unwrap();
        // the certified primitive connects two section choices
        let _ = out.section_difference_primitive;
        built += 1;
    }
    println!("  canonical_cm on {count} algebras, gerstenhaber on {built} strict crossed modules");
    pass(9, "crossed modules and Gerstenhaber certificates");
}

#[test]
fn criterion_10_integration_layer() {
    let mut rng = rng_from_seed(1010);
    let mut algebras = 0usize;
    while algebras < 20 {
        let l = random_verified_algebra(&mut rng, 2);
        let ctx = AutContext::new(l.clone());
        let cm = AutCrossedModule { ctx: ctx.clone() };
        let samples = 64usize;
        for _ in 0..samples {
            let a = sample_unit_tau(&ctx, &mut rng);
            let b = sample_unit_tau(&ctx, &mut rng);
            let c = sample_unit_tau(&ctx, &mut rng);
            // star associativity
            assert_eq!(
                ctx.star(&ctx.star(&a, &b), &c),
                ctx.star(&a, &ctx.star(&b, &c))
            );
            // unit-group criterion: is_unit iff id + d tau invertible
            let direct = ctx.one_plus_d_tau(&a).inverse().is_ok();
            assert_eq!(ctx.is_unit(&a).is_some(), direct);
            // partial is a homomorphism into Aut0
            let lhs = ctx.partial_map(&ctx.star(&a, &b)).unwrap();
            let rhs = cm.g_mul(&cm.phi(&a), &cm.phi(&b));
            assert_eq!(lhs.hom, rhs.hom);
            // the two group crossed module identities
            let g = sample_aut0(&ctx, &mut rng, &[]);
            let l1 = cm.phi(&cm.act(&g, &a));
            let r1 = cm.g_mul(&cm.g_mul(&g, &cm.phi(&a)), &cm.g_inv(&g));
            assert_eq!(l1.hom, r1.hom);
            let l2 = cm.act(&cm.phi(&a), &b);
            let r2 = cm.h_mul(&cm.h_mul(&a, &b), &cm.h_inv(&a));
            assert_eq!(l2, r2);
        }
        algebras += 1;
    }
    // exact dual-number differentiation on a few structured algebras
    let mut rng2 = rng_from_seed(123);
    differentiation_checks(&string_killing(&constructions::sl2()).unwrap(), &mut rng2, 4).unwrap();
    for _ in 0..4 {
        let l = random_verified_algebra(&mut rng2, 2);
        differentiation_checks(&l, &mut rng2, 3).unwrap();
    }
    println!("  4 laws x 64 samples over {algebras} algebras, differentiation exact");
    pass(10, "integration layer laws and exact differentiation");
}

#[test]
fn criterion_11_courant_and_quasi_poisson() {
    let mut rng = rng_from_seed(1011);
    let string = string_killing(&constructions::sl2()).unwrap();
    // build_courant verifies axioms (1)-(5) on all constant triples
    lie2::hpoisson::build_courant(&string).unwrap();
    for _ in 0..4 {
        let l = random_verified_algebra(&mut rng, 2);
        lie2::hpoisson::build_courant(&l).unwrap();
    }
    // Pi: skew and the three-entry table exact
    for l in [string, random_verified_algebra(&mut rng, 3)] {
        let qp = lie2::hpoisson::build_quasi_poisson(&l).unwrap();
        assert!(qp.is_skew());
        let n0 = l.g0().dim();
        let n1 = l.gm1().dim();
        for i in 0..n0 {
            for j in 0..n0 {
                let want = vec_neg(&l.l2_00().eval_basis(&[i, j]));
                assert_eq!(qp.pi_entry(i, j)[..n0], want[..]);
                assert!(vec_is_zero(&qp.pi_entry(i, j)[n0..]));
            }
            for k in 0..n1 {
                let want = vec_neg(&l.l2_01().eval_basis(&[i, k]));
                assert_eq!(qp.pi_entry(i, n0 + k)[n0..], want[..]);
            }
        }
        for k in 0..n1 {
            for m in 0..n1 {
                let da = l.d().apply_basis(k);
                let want = vec_neg(&l.bracket01(&da, &unit_vec(n1, m)));
                assert_eq!(qp.pi_entry(n0 + k, n0 + m)[n0..], want[..]);
            }
        }
        assert_eq!(qp.phi, l.l3().neg());
    }
    pass(11, "Courant axioms exact; Pi table and skewness exact");
}

#[test]
fn criterion_12_cli_corpus() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_l2a");
    let corpus = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let cases: &[(&str, &[&str], i32)] = &[
        ("string_sl2.l2a", &["verify"], 0),
        ("omni2.l2a", &["verify"], 0),
        ("abelian.l2a", &["verify"], 0),
        ("gl_qq.l2a", &["verify"], 0),
        ("acyclic.l2a", &["verify"], 0),
        ("broken_jacobi.l2a", &["verify"], 1),
        ("empty.l2a", &["verify"], 2),
        ("badparse.l2a", &["verify"], 2),
        ("hom_identity.l2a", &["verify", "--kind", "hom"], 0),
        ("leibniz_nil2.l2a", &["verify", "--kind", "leibniz"], 0),
        ("leibniz_bad.l2a", &["verify", "--kind", "leibniz"], 1),
        ("rep_trivial.l2a", &["verify", "--kind", "rep"], 0),
    ];
    assert!(cases.len() >= 10, "corpus must have at least 10 files");
    for (file, args, want) in cases {
        let mut argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        argv.push(corpus.join(file).to_str().unwrap().to_string());
        let out = std::process::Command::new(bin)
            .args(&argv)
            .output()
            .expect("spawn");
        assert_eq!(out.status.code().unwrap(), *want, "{file}");
    }
    // golden round-trips are bit exact
    for name in ["string_sl2.l2a", "omni2.l2a", "gl_qq.l2a", "rep_trivial.l2a"] {
        let text = std::fs::read_to_string(corpus.join(name)).unwrap();
        let doc = lie2::fmt::parse(&text, true).unwrap();
        assert_eq!(lie2::fmt::emit(&doc), text);
        // value-level roundtrip
        let again = lie2::fmt::parse(&lie2::fmt::emit(&doc), true).unwrap();
        assert_eq!(doc, again);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "CI budget exceeded: {elapsed:?}");
    println!("  {} corpus files, bit-exact round-trips, {elapsed:?}", cases.len());
    pass(12, "CLI corpus exit codes and bit-exact round-trips");
}

/// The deformation cochain built from explicit first-order data must agree
/// with the displayed coboundary formulas.
#[test]
fn coboundary_deformation_matches_displayed_formulas() {
    let mut rng = rng_from_seed(77);
    let l = random_verified_algebra(&mut rng, 2);
    let rep = adjoint_rep(&l);
    let b = random_cochain(&mut rng, &rep, 1, 2);
    let der = Derivation0::from_cochain(&l, &b);
    let db = coboundary(&rep, &b);
    let n0 = l.g0().dim();
    let n1 = l.gm1().dim();
    // d1 a = d X1 a - X0 d a
    if let Some(d1) = db.component((0, 1, 0)) {
        for a in 0..n1 {
            let want = vec_sub(
                &l.d().apply(&der.x1.apply_basis(a)),
                &der.x0.apply(&l.d().apply_basis(a)),
            );
            assert_eq!(d1.eval_basis(&[a]), want);
        }
    }
    // [x,y]_1 = [x, X0 y] + [X0 x, y] - X0[x,y] + d lX(x,y)
    if let Some(b1) = db.component((2, 0, 0)) {
        for t in increasing_tuples(n0, 2, true) {
            let x = unit_vec::<Scalar>(n0, t[0]);
            let y = unit_vec::<Scalar>(n0, t[1]);
            let mut want = l.bracket00(&x, &der.x0.apply(&y));
            want = lie2::exactlin::mat::vec_add(&want, &l.bracket00(&der.x0.apply(&x), &y));
            want = vec_sub(&want, &der.x0.apply(&l.bracket00(&x, &y)));
            want = lie2::exactlin::mat::vec_add(&want, &l.d().apply(&der.lx.eval(&[&x, &y])));
            assert_eq!(b1.eval_basis(&t), want);
        }
    }
}

/// Cohomology dimensions are invariant under transport of structure.
#[test]
fn cohomology_is_transport_invariant() {
    let mut rng = rng_from_seed(31);
    for _ in 0..3 {
        let l = random_verified_algebra(&mut rng, 2);
        let h0 = FinSpace::numbered("t0", "y", l.g0().dim());
        let hm1 = FinSpace::numbered("tm1", "b", l.gm1().dim());
        let phi0 = LinMap::new(
            l.g0().clone(),
            h0,
            lie2::sample::random_invertible(&mut rng, l.g0().dim(), 2),
        )
        .unwrap();
        let phi1 = LinMap::new(
            l.gm1().clone(),
            hm1.clone(),
            lie2::sample::random_invertible(&mut rng, l.gm1().dim(), 2),
        )
        .unwrap();
        let phi2 = lie2::lie2core::hom::phi2_shape(l.g0(), &hm1);
        let (m, _) = lie2::lie2core::transport_structure(&l, &phi0, &phi1, &phi2).unwrap();
        for k in 0..=2i64 {
            let a = lie2::cohomology::cohomology(&adjoint_rep(&l), k).unwrap();
            let b = lie2::cohomology::cohomology(&adjoint_rep(&m), k).unwrap();
            assert_eq!(a.dim_h, b.dim_h, "dim H^{k} changed under transport");
        }
    }
}
