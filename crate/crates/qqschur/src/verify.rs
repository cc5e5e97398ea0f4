//! Named, individually runnable verification suites.
//!
//! Each suite checks one slab of the theory at desk scale and reports the
//! first counterexample it finds.  The CLI exposes them under `verify`; the
//! acceptance tests pin their ranks and run them all.  Suites cap their own
//! exhaustive ranges, so a large `--r` never makes a cheap suite explode.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::coeff::{specialize_in, CoeffRing, GenericRing, PrimeFieldSpec, RationalSpec};
use crate::hecke::{Algebra, HeckeElt};
use crate::laurent::LaurentPoly;
use crate::linalg::LinAlg;
use crate::par::{self, Exec};
use crate::perm_module::ModuleElt;
use crate::schur::HomElt;
use crate::shapes::{bipartitions, shapes, situation, Bicomposition};
use crate::tableaux::{
    bitabloid_stabilizer, bitabloids, coord_map, coord_map_inv, e_element, sigma, sigma_sum,
    typed_tableaux, Bitableau, Bitabloid, CoordMap, TypedBitableau, TypedKind,
};
use crate::weyl::{ElemIdx, SignedPerm, SimpleSubset};

#[derive(Clone, Debug)]
pub struct VerifyOpts {
    pub r: usize,
    pub n: Option<usize>,
    pub exec: Exec,
    pub seed: u64,
}

impl Default for VerifyOpts {
    fn default() -> Self {
        VerifyOpts {
            r: 3,
            n: None,
            exec: Exec::Par,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<(String, usize)>,
    pub failure: Option<String>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }

    pub fn cases(&self) -> usize {
        self.checks.iter().map(|(_, n)| n).sum()
    }
}

struct Runner {
    report: SuiteReport,
    started: std::time::Instant,
}

impl Runner {
    fn new(name: &str) -> Self {
        Runner {
            report: SuiteReport {
                suite: name.to_string(),
                checks: Vec::new(),
                failure: None,
                millis: 0,
            },
            started: std::time::Instant::now(),
        }
    }

    fn check<F: FnOnce() -> Result<usize, String>>(&mut self, name: &str, f: F) {
        if self.report.failure.is_some() {
            return;
        }
        match f() {
            Ok(cases) => self.report.checks.push((name.to_string(), cases)),
            Err(msg) => self.report.failure = Some(format!("{}: {}", name, msg)),
        }
    }

    fn finish(mut self) -> SuiteReport {
        self.report.millis = self.started.elapsed().as_millis();
        self.report
    }
}

fn fold(results: Vec<Result<usize, String>>) -> Result<usize, String> {
    let mut total = 0;
    for r in results {
        total += r?;
    }
    Ok(total)
}

pub const SUITE_NAMES: &[&str] = &[
    "coeff-ring",
    "weyl-group",
    "hecke-relations",
    "hecke-elements",
    "module-bases",
    "specht-onedim",
    "standard-basis",
    "coset-congruences",
    "semistandard-basis",
    "gram-identity",
    "genericity",
    "forms",
    "worked-examples",
];

pub fn run_suite(name: &str, opts: &VerifyOpts) -> Result<SuiteReport, crate::Error> {
    match name {
        "coeff-ring" => Ok(coeff_ring(opts)),
        "weyl-group" => Ok(weyl_group(opts)),
        "hecke-relations" => Ok(hecke_relations(opts)),
        "hecke-elements" => Ok(hecke_elements(opts)),
        "module-bases" => Ok(module_bases(opts)),
        "specht-onedim" => Ok(specht_onedim(opts)),
        "standard-basis" => Ok(standard_basis(opts)),
        "coset-congruences" => Ok(coset_congruences(opts)),
        "semistandard-basis" => Ok(semistandard_basis(opts)),
        "gram-identity" => Ok(gram_identity(opts)),
        "genericity" => Ok(genericity(opts)),
        "forms" => Ok(forms(opts)),
        "worked-examples" => Ok(worked_examples(opts)),
        _ => Err(crate::Error::Internal(format!("unknown suite '{}'", name))),
    }
}

pub fn run_all(opts: &VerifyOpts) -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|n| run_suite(n, opts).expect("registered suite"))
        .collect()
}

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

fn galg(r: usize) -> Algebra<GenericRing> {
    Algebra::new(r, GenericRing)
}

/// Canonical representative of the association class: parts sorted
/// descending per component (zero parts kept).
fn class_rep(s: &Bicomposition) -> Bicomposition {
    let sort = |v: &[usize]| {
        let mut s = v.to_vec();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    };
    Bicomposition::new(sort(&s.first), sort(&s.second))
}

fn class_reps(n: usize, r: usize) -> Vec<Bicomposition> {
    let mut reps: Vec<Bicomposition> = shapes(n, r).iter().map(class_rep).collect();
    reps.sort();
    reps.dedup();
    reps
}

/// Deterministic "random" specializations with large values.
fn rational_seeds(seed: u64) -> Vec<(i64, i64)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..3)
        .map(|_| {
            let pick = |rng: &mut StdRng| {
                let v = rng.gen_range(1_000i64..1_000_000);
                if rng.gen_bool(0.5) {
                    -v
                } else {
                    v
                }
            };
            (pick(&mut rng), pick(&mut rng))
        })
        .collect()
}

fn module_row<R: CoeffRing>(alg: &Algebra<R>, dim: usize, m: &ModuleElt<R::Elem>) -> Vec<R::Elem> {
    let mut row = vec![alg.ring.zero(); dim];
    for (&b, c) in &m.coeffs {
        row[b] = c.clone();
    }
    row
}

// ---------------------------------------------------------------------------
// coeff-ring
// ---------------------------------------------------------------------------

fn coeff_ring(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("coeff-ring");
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let rand_poly = |rng: &mut StdRng| {
        let mut p = LaurentPoly::zero();
        for _ in 0..rng.gen_range(0..5) {
            p.add_assign(&LaurentPoly::monomial(
                BigInt::from(rng.gen_range(-9i64..=9)),
                rng.gen_range(-3..=3),
                rng.gen_range(-3..=3),
            ));
        }
        p
    };
    run.check("ring-axioms", || {
        let mut cases = 0;
        for _ in 0..200 {
            let a = rand_poly(&mut rng);
            let b = rand_poly(&mut rng);
            let c = rand_poly(&mut rng);
            if a.add(&b).mul(&c) != a.mul(&c).add(&b.mul(&c)) {
                return Err(format!("distributivity fails on {:?} {:?} {:?}", a, b, c));
            }
            if a.mul(&b).mul(&c) != a.mul(&b.mul(&c)) {
                return Err("associativity fails".into());
            }
            cases += 2;
        }
        Ok(cases)
    });
    let mut rng = StdRng::seed_from_u64(opts.seed ^ 1);
    run.check("specialize-homomorphism", || {
        let rat = RationalSpec::from_ints(17, -23).unwrap();
        let fp = PrimeFieldSpec::new(101, 5, 7).unwrap();
        let mut cases = 0;
        for _ in 0..100 {
            let a = rand_poly(&mut rng);
            let b = rand_poly(&mut rng);
            let sum = a.add(&b);
            let prod = a.mul(&b);
            let ok_rat = specialize_in(&rat, &sum)
                == rat.add(&specialize_in(&rat, &a), &specialize_in(&rat, &b))
                && specialize_in(&rat, &prod)
                    == rat.mul(&specialize_in(&rat, &a), &specialize_in(&rat, &b));
            let ok_fp = specialize_in(&fp, &sum)
                == fp.add(&specialize_in(&fp, &a), &specialize_in(&fp, &b))
                && specialize_in(&fp, &prod)
                    == fp.mul(&specialize_in(&fp, &a), &specialize_in(&fp, &b));
            if !(ok_rat && ok_fp) {
                return Err(format!("homomorphism fails on {:?}, {:?}", a, b));
            }
            cases += 4;
        }
        Ok(cases)
    });
    run.check("rank-examples", || {
        let g = GenericRing;
        let id = vec![
            vec![LaurentPoly::one(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::one()],
        ];
        if g.mat_rank(id) != 2 {
            return Err("identity rank".into());
        }
        let m = vec![
            vec![LaurentPoly::q_pow(1), LaurentPoly::q_pow(2)],
            vec![LaurentPoly::one(), LaurentPoly::q_pow(1)],
        ];
        if g.mat_rank(m) != 1 {
            return Err("proportional rows rank".into());
        }
        Ok(2)
    });
    // rank can only drop under specialization, and does not at large
    // random values: checked on the Gram matrices of the small modules
    let r2 = opts.r.min(2);
    run.check("gram-rank-monotone", || {
        let alg = galg(r2);
        let mut cases = 0;
        for l in bipartitions(r2) {
            let g = alg
                .gram_matrix(&l, r2)
                .map_err(|e| e.to_string())?
                .full_matrix(LaurentPoly::zero());
            let generic =
                crate::linalg::generic_rank_crosschecked(&g, &rational_seeds(opts.seed))
                    .map_err(|e| e.to_string())?;
            for (qv, bqv) in [(1i64, 1i64), (1, -1), (2, 3)] {
                let spec = RationalSpec::from_ints(qv, bqv).unwrap();
                let sm: Vec<Vec<BigRational>> = g
                    .iter()
                    .map(|row| row.iter().map(|e| specialize_in(&spec, e)).collect())
                    .collect();
                let srank = spec.mat_rank(sm);
                if srank > generic {
                    return Err(format!(
                        "rank rose from {} to {} at q={}, Q={} for {:?}",
                        generic, srank, qv, bqv, l
                    ));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.finish()
}

// ---------------------------------------------------------------------------
// weyl-group
// ---------------------------------------------------------------------------

fn weyl_group(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("weyl-group");
    let r = opts.r.min(3);
    let alg = galg(r);
    let g = alg.group.clone();
    run.check("length-steps", || {
        let mut cases = 0;
        for a in g.all() {
            for i in 0..r {
                let d = g.len(g.right_mul(a, i)) as i64 - g.len(a) as i64;
                if d != 1 && d != -1 {
                    return Err(format!("generator step {:?} at {}", g.perm(a), i));
                }
            }
            for b in g.all() {
                if g.len(g.mul(a, b)) > g.len(a) + g.len(b) {
                    return Err(format!("superadditive at {:?} {:?}", g.perm(a), g.perm(b)));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.check("special-element-lengths", || {
        for rr in 1..=opts.r.min(4) {
            for a in 0..=rr {
                if SignedPerm::w_a(rr, a).unwrap().length() != a * (rr - a) {
                    return Err(format!("w_({},{})", a, rr - a));
                }
            }
            for i in 1..=rr {
                for j in 1..=rr {
                    let w = SignedPerm::s_ij(rr, i, j).unwrap();
                    if w.length() != i.abs_diff(j) {
                        return Err(format!("s_({},{})", i, j));
                    }
                }
            }
        }
        Ok(opts.r.min(4) * 4)
    });
    run.check("sign-count-is-word-count", || {
        let mut cases = 0;
        for e in g.all() {
            let zeros = g.word(e).iter().filter(|&&i| i == 0).count();
            if zeros != g.perm(e).neg_count() {
                return Err(format!("{:?}", g.perm(e)));
            }
            cases += 1;
        }
        Ok(cases)
    });
    run.check("unique-coset-factorization", || {
        let mut cases = 0;
        let all_subsets: Vec<SimpleSubset> = (0..(1u32 << r))
            .map(|bits| {
                SimpleSubset::from_indices(
                    r,
                    &(0..r).filter(|&i| bits & (1 << i) != 0).collect::<Vec<_>>(),
                )
            })
            .collect();
        for k in &all_subsets {
            for l in &all_subsets {
                for d in g.dist_double(k, l) {
                    let cut = g.transport_idx(l, g.inv(d)).intersect(k);
                    let xs: Vec<ElemIdx> = g
                        .parabolic(k)
                        .into_iter()
                        .filter(|&x| l_dist_inv(&g, x, &cut, k))
                        .collect();
                    for w in g.double_coset(k, d, l) {
                        let mut found = 0;
                        for &x in &xs {
                            let y = g.mul(g.inv(g.mul(x, d)), w);
                            if g.in_parabolic(y, l)
                                && g.len(x) + g.len(d) + g.len(y) == g.len(w)
                            {
                                found += 1;
                            }
                        }
                        if found != 1 {
                            return Err(format!(
                                "element {:?} has {} factorizations in W_{:?} {:?} W_{:?}",
                                g.perm(w),
                                found,
                                k,
                                g.perm(d),
                                l
                            ));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(cases)
    });
    run.check("triple-intersections", || {
        let mut cases = 0;
        for l in class_reps(opts.n.unwrap_or(r), r) {
            for m in class_reps(opts.n.unwrap_or(r), r) {
                let sit = situation(&l, &m);
                for t in alg.admissibles(&l, &m) {
                    if g.len(t.c) != g.len(t.u) + g.len(t.d) + g.len(g.inv(t.v)) {
                        return Err(format!("length not additive for {:?} {:?}", l, m));
                    }
                    if !g.is_dist_double(t.c, &sit.i, &sit.j) {
                        return Err(format!("c not distinguished for {:?} {:?}", l, m));
                    }
                    // B ∩ Jvd^{-1} ⊆ Ad^{-1}
                    let vdinv = g.mul(t.v, g.inv(t.d));
                    let lhs = g.transport_idx(&sit.j, vdinv).intersect(&sit.b_set);
                    for beta in lhs.iter() {
                        let img = g.transport_idx(&SimpleSubset::from_indices(r, &[beta]), t.d);
                        if !img.is_subset_of(&sit.a_set) {
                            return Err(format!("first intersection fails {:?} {:?}", l, m));
                        }
                    }
                    // I ∩ Jvd^{-1}u^{-1} ⊆ Bu^{-1}
                    let vdu = g.mul(vdinv, g.inv(t.u));
                    let lhs = g.transport_idx(&sit.j, vdu).intersect(&sit.i);
                    for alpha in lhs.iter() {
                        let img = g.transport_idx(&SimpleSubset::from_indices(r, &[alpha]), t.u);
                        if !img.is_subset_of(&sit.b_set) {
                            return Err(format!("second intersection fails {:?} {:?}", l, m));
                        }
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    });
    run.check("delta-coset-bijection", || {
        let mut cases = 0;
        for l in class_reps(opts.n.unwrap_or(r), r) {
            for m in class_reps(opts.n.unwrap_or(r), r) {
                let sit = situation(&l, &m);
                let mut imgs: Vec<ElemIdx> = alg
                    .admissibles(&l, &m)
                    .into_iter()
                    .filter(|t| t.in_delta)
                    .map(|t| t.c)
                    .collect();
                imgs.sort_unstable();
                let mut expect =
                    g.dist_double_in(&sit.i, &sit.j, &SimpleSubset::delta(r));
                expect.sort_unstable();
                let dup = imgs.windows(2).any(|w| w[0] == w[1]);
                if dup || imgs != expect {
                    return Err(format!("bijection fails for {:?} {:?}", l, m));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.check("alpha0-transport-equivalence", || {
        let mut cases = 0;
        for bits in 0..(1u32 << r) {
            let j = SimpleSubset::from_indices(
                r,
                &(0..r).filter(|&i| bits & (1 << i) != 0).collect::<Vec<_>>(),
            );
            for e in g.all() {
                let w = g.perm(e);
                let c1 = crate::weyl::alpha0_in_transport(&j, w);
                let alpha0_fixed = w.apply(1) == 1;
                let c2 = j.contains(0) && alpha0_fixed;
                let s0 = SignedPerm::gen(r, 0);
                let c3 = j.contains(0)
                    && s0.compose(w) == w.compose(&s0)
                    && s0.compose(w).length() == w.length() + 1;
                if c1 != c2 || c2 != c3 {
                    return Err(format!("equivalence fails at {:?}, J = {:?}", w, j));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.finish()
}

fn l_dist_inv(
    g: &crate::weyl::WeylGroup,
    x: ElemIdx,
    cut: &SimpleSubset,
    k: &SimpleSubset,
) -> bool {
    // x^{-1} in D^K_{cut}: x^{-1} in W_K and no left descent in cut
    let xi = g.inv(x);
    g.in_parabolic(xi, k) && cut.iter().all(|i| !g.left_descent(xi, i))
}

// ---------------------------------------------------------------------------
// hecke-relations (criterion 1)
// ---------------------------------------------------------------------------

fn hecke_relations(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("hecke-relations");
    for r in 1..=opts.r.min(4) {
        let a = galg(r);
        run.check(&format!("defining-relations-r{}", r), || {
            let t = |i: usize| a.t_perm(&SignedPerm::gen(r, i));
            let mut cases = 0;
            for i in 1..r {
                let sq = a.hecke_mul(&t(i), &t(i));
                let mut expect = a.hecke_scale(&a.hecke_one(), &a.ring.q());
                a.hecke_add_term(
                    &mut expect,
                    a.group.idx(&SignedPerm::gen(r, i)),
                    a.ring.q_minus_one(),
                );
                if sq != expect {
                    return Err(format!("quadratic relation at {}", i));
                }
                cases += 1;
            }
            let sq = a.hecke_mul(&t(0), &t(0));
            let mut expect = a.hecke_scale(&a.hecke_one(), &a.ring.big_q());
            a.hecke_add_term(
                &mut expect,
                a.group.idx(&SignedPerm::gen(r, 0)),
                a.ring.big_q_minus_one(),
            );
            if sq != expect {
                return Err("quadratic relation at 0".into());
            }
            cases += 1;
            let mul = |xs: &[usize]| {
                let mut acc = a.hecke_one();
                for &i in xs {
                    acc = a.hecke_mul(&acc, &t(i));
                }
                acc
            };
            for i in 1..r {
                for j in (i + 2)..r {
                    if mul(&[i, j]) != mul(&[j, i]) {
                        return Err(format!("commutation {} {}", i, j));
                    }
                    cases += 1;
                }
            }
            for j in 2..r {
                if mul(&[0, j]) != mul(&[j, 0]) {
                    return Err(format!("commutation 0 {}", j));
                }
                cases += 1;
            }
            for i in 1..r.saturating_sub(1) {
                if mul(&[i, i + 1, i]) != mul(&[i + 1, i, i + 1]) {
                    return Err(format!("braid {} {}", i, i + 1));
                }
                cases += 1;
            }
            if r >= 2 && mul(&[0, 1, 0, 1]) != mul(&[1, 0, 1, 0]) {
                return Err("long braid 0101".into());
            }
            Ok(cases + 1)
        });
        run.check(&format!("group-composition-at-one-r{}", r), || {
            let ring = RationalSpec::from_ints(1, 1).unwrap();
            let a1 = Algebra::new(r, ring);
            let items: Vec<ElemIdx> = a1.group.all().collect();
            let results = par::map(opts.exec, items, |e1| {
                for e2 in a1.group.all() {
                    let prod = a1.hecke_mul(&a1.t_of(e1), &a1.t_of(e2));
                    if prod != a1.t_of(a1.group.mul(e1, e2)) {
                        return Err(format!(
                            "product at {:?} {:?}",
                            a1.group.perm(e1),
                            a1.group.perm(e2)
                        ));
                    }
                }
                Ok(a1.group.order())
            });
            fold(results)
        });
    }
    run.finish()
}

// ---------------------------------------------------------------------------
// hecke-elements (structural identities)
// ---------------------------------------------------------------------------

fn hecke_elements(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("hecke-elements");
    let rmax = opts.r.min(4);
    run.check("u-commutations", || {
        let mut cases = 0;
        for r in 1..=rmax.min(3) {
            let alg = galg(r);
            for a in 0..=r {
                for minus in [false, true] {
                    let u = if minus {
                        alg.u_minus(a).map_err(|e| e.to_string())?
                    } else {
                        alg.u_plus(a).map_err(|e| e.to_string())?
                    };
                    for b in 0..r {
                        if b == a {
                            continue;
                        }
                        let tb = alg.t_perm(&SignedPerm::gen(r, b));
                        if alg.hecke_mul(&u, &tb) != alg.hecke_mul(&tb, &u) {
                            return Err(format!("commutation r={} a={} b={}", r, a, b));
                        }
                        cases += 1;
                    }
                    if a > 0 {
                        let t0 = alg.t_perm(&SignedPerm::gen(r, 0));
                        let prod = alg.hecke_mul(&u, &t0);
                        let expect = if minus {
                            alg.hecke_scale(&u, &alg.ring.from_int(-1))
                        } else {
                            alg.hecke_scale(&u, &alg.ring.big_q())
                        };
                        if prod != expect {
                            return Err(format!("absorption r={} a={} minus={}", r, a, minus));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(cases)
    });
    run.check("x-h-intertwine", || {
        // x h_{a,r-a} = h_{a,r-a} x_hat, and x, y commute with the u's
        let mut cases = 0;
        for r in 1..=rmax {
            let alg = galg(r);
            for l in shapes(r, r) {
                let a = l.a();
                let h = alg.h_elt(a).map_err(|e| e.to_string())?;
                let lhs = alg.hecke_mul(&alg.x_elt(&l), &h);
                let rhs = alg.hecke_mul(&h, &alg.x_hat_elt(&l));
                if lhs != rhs {
                    return Err(format!("intertwine fails for {:?}", l));
                }
                let up = alg.u_plus(a).map_err(|e| e.to_string())?;
                let um = alg.u_minus(r - a).map_err(|e| e.to_string())?;
                for (s, t) in [
                    (alg.x_elt(&l), up.clone()),
                    (alg.y_elt(&l), up.clone()),
                    (alg.x_hat_elt(&l), um.clone()),
                    (alg.y_hat_elt(&l), um.clone()),
                ] {
                    if alg.hecke_mul(&s, &t) != alg.hecke_mul(&t, &s) {
                        return Err(format!("u-commutation fails for {:?}", l));
                    }
                    cases += 1;
                }
                // T_{pi_hat} commutes with u^-_{r-a}
                let tp = alg.t_perm(&crate::tableaux::pi_hat(&l));
                if alg.hecke_mul(&tp, &um) != alg.hecke_mul(&um, &tp) {
                    return Err(format!("pi-hat commutation fails for {:?}", l));
                }
                cases += 2;
            }
        }
        Ok(cases)
    });
    run.check("star-anti-automorphism", || {
        let mut rng = StdRng::seed_from_u64(opts.seed ^ 2);
        let r = opts.r.min(3);
        let a = galg(r);
        let mut cases = 0;
        let rand_elt = |rng: &mut StdRng| {
            let mut h = HeckeElt::zero();
            for _ in 0..3 {
                let e = rng.gen_range(0..a.group.order()) as ElemIdx;
                a.hecke_add_term(
                    &mut h,
                    e,
                    LaurentPoly::monomial(
                        BigInt::from(rng.gen_range(-3i64..=3)),
                        rng.gen_range(-1..=1),
                        rng.gen_range(-1..=1),
                    ),
                );
            }
            h
        };
        for _ in 0..40 {
            let x = rand_elt(&mut rng);
            let y = rand_elt(&mut rng);
            if a.hecke_star(&a.hecke_star(&x)) != x {
                return Err("involution fails".into());
            }
            if a.hecke_star(&a.hecke_mul(&x, &y))
                != a.hecke_mul(&a.hecke_star(&y), &a.hecke_star(&x))
            {
                return Err("anti-multiplicativity fails".into());
            }
            cases += 2;
        }
        // star fixes the column-symmetrized tail generator
        for l in bipartitions(r) {
            let ra = r - l.a();
            let um = a.u_minus(ra).map_err(|e| e.to_string())?;
            let fixed = a.hecke_mul(&um, &a.y_hat_elt(&l));
            if a.hecke_star(&fixed) != fixed {
                return Err(format!("tail not star-fixed for {:?}", l));
            }
            cases += 1;
        }
        Ok(cases)
    });
    run.finish()
}

// ---------------------------------------------------------------------------
// module-bases (criterion 2)
// ---------------------------------------------------------------------------

fn module_bases(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("module-bases");
    let r = opts.r.min(4);
    let n = opts.n.unwrap_or(r);
    let alg = std::sync::Arc::new(galg(r));
    let all_shapes = shapes(n, r);
    run.check("counts-and-relations", || {
        let a = alg.clone();
        let results = par::map(opts.exec, all_shapes.clone(), move |shape| {
            let data = a.shape_data(&shape);
            if data.basis.len() as u64 != shape.bitabloid_count() {
                return Err(format!("count mismatch for {:?}", shape));
            }
            let mut cases = 1;
            for b in 0..data.basis.len() {
                let mut m = ModuleElt::zero(&shape);
                m.coeffs.insert(b, a.ring.one());
                let act = |m: &ModuleElt<LaurentPoly>, word: &[usize]| {
                    let mut acc = m.clone();
                    for &i in word {
                        acc = a.act_gen(&acc, i);
                    }
                    acc
                };
                for i in 0..r {
                    let twice = act(&m, &[i, i]);
                    let (par, par1) = if i == 0 {
                        (a.ring.big_q(), a.ring.big_q_minus_one())
                    } else {
                        (a.ring.q(), a.ring.q_minus_one())
                    };
                    let mut expect = a.module_scale(&m, &par);
                    let t = a.module_scale(&a.act_gen(&m, i), &par1);
                    a.module_add_assign(&mut expect, &t);
                    if twice != expect {
                        return Err(format!("quadratic fails {:?} basis {} gen {}", shape, b, i));
                    }
                }
                for i in 1..r.saturating_sub(1) {
                    if act(&m, &[i, i + 1, i]) != act(&m, &[i + 1, i, i + 1]) {
                        return Err(format!("braid fails {:?} {}", shape, i));
                    }
                }
                if r >= 2 && act(&m, &[0, 1, 0, 1]) != act(&m, &[1, 0, 1, 0]) {
                    return Err(format!("long braid fails {:?}", shape));
                }
                for i in 0..r {
                    for j in (i + 2)..r {
                        if (i >= 1 || j >= 2)
                            && act(&m, &[i, j]) != act(&m, &[j, i]) {
                                return Err(format!("commutation fails {:?}", shape));
                            }
                    }
                }
                cases += r;
            }
            Ok(cases)
        });
        fold(results)
    });
    run.check("descent-case-analysis", || {
        // the tableau conditions predict the length case exactly
        let a = alg.clone();
        let results = par::map(opts.exec, all_shapes.clone(), move |shape| {
            let data = a.shape_data(&shape);
            let mut cases = 0;
            for (bidx, toid) in data.basis.iter().enumerate() {
                let t = toid.rep();
                let w = data.w_of[bidx];
                for i in 0..r {
                    // skip the cases where the class is fixed
                    if i == 0 {
                        if t.find(1).0 .0 == 0 {
                            continue;
                        }
                    } else {
                        let (c1, s1) = t.find(i as i32);
                        let (c2, s2) = t.find(i as i32 + 1);
                        if c1.0 == c2.0 && c1.1 == c2.1 && s1.signum() == s2.signum() {
                            continue;
                        }
                    }
                    let up = a.group.len(a.group.right_mul(w, i)) > a.group.len(w);
                    let has = |v: i32| {
                        let (_, s) = t.find(v.abs());
                        s == v
                    };
                    let pred = if i == 0 {
                        has(1) && t.find(1).0 .0 == 1
                    } else {
                        let i = i as i32;
                        (has(i) && has(i + 1) && t.row_of(i) < t.row_of(i + 1))
                            || (has(-i) && has(-i - 1) && t.row_of(i + 1) < t.row_of(i))
                            || (has(-i) && has(i + 1))
                    };
                    if up != pred {
                        return Err(format!(
                            "descent prediction fails for {:?} gen {} at {:?}",
                            shape, i, t
                        ));
                    }
                    cases += 1;
                }
            }
            Ok(cases)
        });
        fold(results)
    });
    run.check("sign-clearing-support", || {
        // acting by the embedded reflection flips the target value's sign
        // and leaves everything else intact
        let a = alg.clone();
        let results = par::map(opts.exec, all_shapes.clone(), move |shape| {
            let data = a.shape_data(&shape);
            let mut cases = 0;
            for (bidx, toid) in data.basis.iter().enumerate() {
                let t = toid.rep();
                for i in 1..=r {
                    let (cell, sign) = t.find(i as i32);
                    if cell.0 != 1 || sign < 0 {
                        continue;
                    }
                    let mut m = ModuleElt::zero(&shape);
                    m.coeffs.insert(bidx, a.ring.one());
                    let refl = SignedPerm::s_ij(r, i, 1)
                        .unwrap()
                        .compose(&SignedPerm::gen(r, 0))
                        .compose(&SignedPerm::s_ij(r, 1, i).unwrap());
                    let img = a.act_elem(&m, a.group.idx(&refl));
                    for &b2 in img.coeffs.keys() {
                        let s = data.basis[b2].rep();
                        let (_, s_sign) = s.find(i as i32);
                        if s_sign != -(i as i32) {
                            return Err(format!("sign not flipped for {:?} value {}", shape, i));
                        }
                        for j in 1..=r {
                            if j == i {
                                continue;
                            }
                            let (_, sj) = s.find(j as i32);
                            let (_, tj) = t.find(j as i32);
                            if sj != tj {
                                return Err(format!(
                                    "value {} changed for {:?} under reflection {}",
                                    j, shape, i
                                ));
                            }
                        }
                    }
                    cases += 1;
                }
            }
            Ok(cases)
        });
        fold(results)
    });
    run.check("minus-span-stability", || {
        let a = alg.clone();
        let results = par::map(opts.exec, all_shapes.clone(), move |shape| {
            let data = a.shape_data(&shape);
            let mut cases = 0;
            for b in 0..data.basis.len() {
                if !data.minus[b] {
                    continue;
                }
                let mut m = ModuleElt::zero(&shape);
                m.coeffs.insert(b, a.ring.one());
                for i in 1..r {
                    let img = a.act_gen(&m, i);
                    if !img.coeffs.keys().all(|&t| data.minus[t]) {
                        return Err(format!("negative span leaks for {:?} gen {}", shape, i));
                    }
                    cases += 1;
                }
            }
            Ok(cases)
        });
        fold(results)
    });
    run.check("identity-coefficient-congruence", || {
        // classes with 1..b in the second component are near-fixed by the
        // descending sign product
        let a = alg.clone();
        let results = par::map(opts.exec, all_shapes.clone(), move |shape| {
            let data = a.shape_data(&shape);
            let mut cases = 0;
            for (bidx, toid) in data.basis.iter().enumerate() {
                let t = toid.rep();
                for b in 0..=r {
                    let all_in = (1..=b as i32).all(|v| {
                        let (cell, sign) = t.find(v);
                        cell.0 == 1 && sign == v
                    });
                    if !all_in {
                        continue;
                    }
                    let mut m = ModuleElt::zero(&shape);
                    m.coeffs.insert(bidx, a.ring.one());
                    let um = a.u_minus(b).map_err(|e| e.to_string())?;
                    let img = a.reduce_mod_minus(&a.act_hecke(&m, &um));
                    let c = a
                        .ring
                        .monomial((b * b.saturating_sub(1) / 2) as i32, b as i32);
                    let expect = a.reduce_mod_minus(&a.module_scale(&m, &c));
                    if img != expect {
                        return Err(format!("congruence fails for {:?} b={}", shape, b));
                    }
                    cases += 1;
                }
            }
            Ok(cases)
        });
        fold(results)
    });
    run.check("rotation-leading-term", || {
        // all-positive classes rotate with a unit leading coefficient and
        // row-monotone residue
        let a = alg.clone();
        let results = par::map(opts.exec, all_shapes, move |shape| {
            let data = a.shape_data(&shape);
            let aa = shape.a();
            let w_rot = SignedPerm::w_a(r, aa).unwrap();
            let mut cases = 0;
            for (bidx, toid) in data.basis.iter().enumerate() {
                let t = toid.rep();
                let all_pos = (1..=r as i32).all(|v| t.find(v).1 > 0);
                if !all_pos {
                    continue;
                }
                let mut m = ModuleElt::zero(&shape);
                m.coeffs.insert(bidx, a.ring.one());
                let img = a.act_hecke(&m, &a.h_elt(aa).map_err(|e| e.to_string())?);
                let lead = data.index[&toid.act(&w_rot)];
                match img.coeffs.get(&lead) {
                    Some(c) if c.is_unit_monomial() => {}
                    other => {
                        return Err(format!(
                            "leading coefficient {:?} not unit for {:?}",
                            other, shape
                        ))
                    }
                }
                for &b2 in img.coeffs.keys() {
                    if b2 == lead {
                        continue;
                    }
                    let s = data.basis[b2].rep();
                    let rot = toid.act(&w_rot);
                    let mut strict = false;
                    for i in 1..=(r - aa) as i32 {
                        let rs = s.row_of(i);
                        let rt = rot.rep().row_of(i);
                        if rs < rt {
                            return Err(format!("row drops for {:?} residue {:?}", shape, s));
                        }
                        if rs > rt {
                            strict = true;
                        }
                    }
                    if r > aa && !strict {
                        return Err(format!("residue not strictly lower for {:?}", shape));
                    }
                }
                cases += 1;
            }
            Ok(cases)
        });
        fold(results)
    });
    run.check("associated-shapes", || {
        let mut cases = 0;
        for l in shapes(n, r) {
            let rep = class_rep(&l);
            if l.bitabloid_count() != rep.bitabloid_count() {
                return Err(format!("associated counts differ: {:?}", l));
            }
            cases += 1;
        }
        Ok(cases)
    });
    run.finish()
}

// ---------------------------------------------------------------------------
// specht-onedim (criterion 3)
// ---------------------------------------------------------------------------

fn specht_onedim(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("specht-onedim");
    let r = opts.r.min(3);
    let alg = std::sync::Arc::new(galg(r));
    run.check("alternative-expressions", || {
        let mut cases = 0;
        for l in bipartitions(r) {
            let z = alg.z_elt(&l).map_err(|e| e.to_string())?;
            if z.is_zero() {
                return Err(format!("canonical element vanishes for {:?}", l));
            }
            for alt in alg.z_alternatives(&l).map_err(|e| e.to_string())? {
                if alt != z {
                    return Err(format!("expressions disagree for {:?}", l));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.check("one-dimensionality", || {
        let a = alg.clone();
        let items = bipartitions(r);
        let results = par::map(opts.exec, items, move |l| {
            let gen = a.module_gen(&l);
            let ra = r - l.a();
            let tail = a.hecke_mul(
                &a.u_minus(ra).map_err(|e| e.to_string())?,
                &a.y_hat_elt(&l),
            );
            let z = a.z_module(&l).map_err(|e| e.to_string())?;
            let b0 = *z.coeffs.keys().next().expect("nonzero");
            let z0 = z.coeffs[&b0].clone();
            let mut cases = 0;
            for e in a.group.all() {
                let m = a.act_hecke(&a.act_elem(&gen, e), &tail);
                // proportionality by cross-multiplication
                let m0 = m
                    .coeffs
                    .get(&b0)
                    .cloned()
                    .unwrap_or_else(|| a.ring.zero());
                let keys: Vec<usize> = m.coeffs.keys().chain(z.coeffs.keys()).copied().collect();
                for b in keys {
                    let mb = m.coeffs.get(&b).cloned().unwrap_or_else(|| a.ring.zero());
                    let zb = z.coeffs.get(&b).cloned().unwrap_or_else(|| a.ring.zero());
                    if a.ring.mul(&mb, &z0) != a.ring.mul(&m0, &zb) {
                        return Err(format!(
                            "image of {:?} not proportional for {:?}",
                            a.group.perm(e),
                            l
                        ));
                    }
                }
                cases += 1;
            }
            Ok(cases)
        });
        fold(results)
    });
    run.finish()
}

// ---------------------------------------------------------------------------
// standard-basis (criterion 4)
// ---------------------------------------------------------------------------

fn standard_basis(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("standard-basis");
    let r = opts.r.min(3);
    let n = opts.n.unwrap_or(r);
    let reps = class_reps(n, r);
    let rep_pairs: Vec<(Bicomposition, Bicomposition)> = reps
        .iter()
        .flat_map(|l| reps.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    // oracle dimensions per class pair, generic ring
    let alg = std::sync::Arc::new(galg(r));
    let mut oracle_dims: std::collections::BTreeMap<(Bicomposition, Bicomposition), usize> =
        Default::default();
    run.check("oracle-generic", || {
        let a = alg.clone();
        let results = par::map(opts.exec, rep_pairs.clone(), move |(l, m)| {
            let (dim, basis) = a.hom_oracle(&l, &m);
            // solutions really are intertwiners
            for ob in &basis {
                let hom = HomElt {
                    source: l.clone(),
                    target: m.clone(),
                    gen_image: ob.clone(),
                };
                if !a.hom_well_defined(&hom) {
                    return Err(format!("oracle solution not a map for {:?} {:?}", l, m));
                }
            }
            Ok(dim)
        });
        let dims = results.into_iter().collect::<Result<Vec<usize>, _>>()?;
        for (pair, dim) in rep_pairs.iter().zip(dims) {
            oracle_dims.insert(pair.clone(), dim);
        }
        Ok(rep_pairs.len())
    });
    let oracle_dims = std::sync::Arc::new(oracle_dims);
    run.check("triple-count-equals-oracle-all-pairs", || {
        let a = alg.clone();
        let dims = oracle_dims.clone();
        let all = shapes(n, r);
        let pairs: Vec<(Bicomposition, Bicomposition)> = all
            .iter()
            .flat_map(|l| all.iter().map(move |m| (l.clone(), m.clone())))
            .collect();
        let results = par::map(opts.exec, pairs, move |(l, m)| {
            let count = a.admissibles(&l, &m).len();
            let key = (class_rep(&l), class_rep(&m));
            match dims.get(&key) {
                Some(&d) if d == count => Ok(1),
                Some(&d) => Err(format!(
                    "triples {} != oracle {} for {:?} {:?}",
                    count, d, l, m
                )),
                None => Err(format!("missing class pair for {:?} {:?}", l, m)),
            }
        });
        fold(results)
    });
    run.check("oracle-at-specializations", || {
        let mut cases = 0;
        for (qv, bqv) in rational_seeds(opts.seed) {
            let ring = RationalSpec::from_ints(qv, bqv).map_err(|e| e.to_string())?;
            let a = std::sync::Arc::new(Algebra::new(r, ring));
            let dims = oracle_dims.clone();
            let a2 = a.clone();
            let results = par::map(opts.exec, rep_pairs.clone(), move |(l, m)| {
                let (dim, _) = a2.hom_oracle(&l, &m);
                let expect = dims[&(l.clone(), m.clone())];
                if dim != expect {
                    return Err(format!(
                        "specialized dimension {} != {} for {:?} {:?} at q={} Q={}",
                        dim, expect, l, m, qv, bqv
                    ));
                }
                Ok(1)
            });
            cases += fold(results)?;
        }
        Ok(cases)
    });
    run.check("maps-well-defined-and-independent", || {
        let a = alg.clone();
        let results = par::map(opts.exec, rep_pairs.clone(), move |(l, m)| {
            let triples = a.admissibles(&l, &m);
            let phis = a
                .phi_standard_batch(&l, &m, &triples)
                .map_err(|e| e.to_string())?;
            for phi in &phis {
                if !a.hom_well_defined(phi) {
                    return Err(format!("map not well defined for {:?} {:?}", l, m));
                }
            }
            let dim = a.shape_data(&m).basis.len();
            let rows: Vec<Vec<LaurentPoly>> = phis
                .iter()
                .map(|p| module_row(&a, dim, &p.gen_image))
                .collect();
            if a.ring.mat_rank(rows) != triples.len() {
                return Err(format!("maps dependent for {:?} {:?}", l, m));
            }
            Ok(triples.len() + 1)
        });
        fold(results)
    });
    run.finish()
}

// ---------------------------------------------------------------------------
// coset-congruences (criterion 5)
// ---------------------------------------------------------------------------

fn coset_congruences(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("coset-congruences");
    let r = opts.r.min(3);
    let n = opts.n.unwrap_or(r);
    let reps = class_reps(n, r);
    let rep_pairs: Vec<(Bicomposition, Bicomposition)> = reps
        .iter()
        .flat_map(|l| reps.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let alg = std::sync::Arc::new(galg(r));
    run.check("reduction-congruences", || {
        let a = alg.clone();
        let results = par::map(opts.exec, rep_pairs.clone(), move |(l, m)| {
            let sit = situation(&l, &m);
            let triples = a.admissibles(&l, &m);
            let phis = a
                .phi_standard_batch(&l, &m, &triples)
                .map_err(|e| e.to_string())?;
            let gen = a.module_gen(&m);
            let mut cases = 0;
            for (t, phi) in triples.iter().zip(&phis) {
                let reduced = a.reduce_mod_minus(&phi.gen_image);
                if !t.in_delta {
                    if !reduced.is_zero() {
                        return Err(format!(
                            "non-delta map not congruent to zero for {:?} {:?}",
                            l, m
                        ));
                    }
                    cases += 1;
                    continue;
                }
                // plain double-coset sum
                let coset = a.group.double_coset(&sit.i, t.c, &sit.j);
                let h = a.hecke_mul(
                    &a.u_plus(m.a()).map_err(|e| e.to_string())?,
                    &a.sum_of(&coset),
                );
                let target = a
                    .module_from_hecke_batch(&m, &[h])
                    .map_err(|e| e.to_string())?
                    .pop()
                    .unwrap();
                if reduced != a.reduce_mod_minus(&target) {
                    return Err(format!("double-coset congruence fails {:?} {:?}", l, m));
                }
                // translated-generator sum
                let ic_j = a.group.transport_idx(&sit.i, t.c).intersect(&sit.j);
                let mut alt = ModuleElt::zero(&m);
                for b in a.group.dist_in(&ic_j, &sit.j) {
                    let term = a.act_elem(&gen, a.group.mul(t.c, b));
                    a.module_add_assign(&mut alt, &term);
                }
                if reduced != a.reduce_mod_minus(&alt) {
                    return Err(format!("translated congruence fails {:?} {:?}", l, m));
                }
                // typed-tableau form: classes whose row data matches
                let tc = coord_map(CoordMap::Alpha, &l, &a.shape_data(&m).basis[{
                    let toid = Bitabloid::new(&Bitableau::t_row(&m));
                    let toid = toid.act(a.group.perm(t.c));
                    a.shape_data(&m).index[&toid]
                }]);
                let rows_of = |tt: &TypedBitableau| {
                    let mut rows: Vec<Vec<i32>> = tt
                        .first
                        .iter()
                        .chain(tt.second.iter())
                        .cloned()
                        .map(|mut v| {
                            v.sort_unstable();
                            v
                        })
                        .collect();
                    rows.push(Vec::new());
                    rows
                };
                let want = rows_of(&tc);
                let data = a.shape_data(&m);
                let mut tab_sum = ModuleElt::zero(&m);
                for (bi, cls) in data.basis.iter().enumerate() {
                    let img = coord_map(CoordMap::Alpha, &l, cls);
                    if rows_of(&img) == want {
                        a.module_add_term(&mut tab_sum, bi, a.ring.one());
                    }
                }
                if reduced != a.reduce_mod_minus(&tab_sum) {
                    return Err(format!("tableau-sum congruence fails {:?} {:?}", l, m));
                }
                cases += 3;
            }
            Ok(cases)
        });
        fold(results)
    });
    run.check("inner-coset-identity", || {
        let a = alg.clone();
        let results = par::map(opts.exec, rep_pairs.clone(), move |(l, m)| {
            let sit = situation(&l, &m);
            let g = &a.group;
            let mut cases = 0;
            for t in a.admissibles(&l, &m) {
                let lhs = a.sum_of(&g.double_coset(&sit.i, t.c, &sit.j));
                let bd_a = g.transport_idx(&sit.b_set, t.d).intersect(&sit.a_set);
                let s_v = bd_a.intersect(&g.transport_idx(&sit.j, t.v));
                let ud = g.mul(t.u, t.d);
                let inner = a.sum_of(&g.double_coset(&sit.i, ud, &s_v));
                let svv = g.transport_idx(&s_v, g.inv(t.v)); // S(v) v^{-1} ⊆ J
                let mut rhs = HeckeElt::zero();
                for ginv in g.dist_in(&svv, &sit.j) {
                    let gv = g.mul(g.inv(ginv), t.v);
                    let term = a.hecke_mul_word(&inner, g.word(g.inv(gv)));
                    a.hecke_add_assign(&mut rhs, &term);
                }
                if lhs != rhs {
                    return Err(format!("inner identity fails for {:?} {:?}", l, m));
                }
                cases += 1;
            }
            Ok(cases)
        });
        fold(results)
    });
    run.check("group-algebra-image", || {
        // at q = Q = 1 the image is the double coset sum of the stabilizers
        let ring = RationalSpec::from_ints(1, 1).unwrap();
        let a = std::sync::Arc::new(Algebra::new(r, ring));
        let pairs: Vec<(Bicomposition, Bicomposition)> = bipartitions(r)
            .iter()
            .flat_map(|l| {
                bipartitions(r)
                    .into_iter()
                    .map(move |m| (l.clone(), m))
                    .collect::<Vec<_>>()
            })
            .collect();
        let results = par::map(opts.exec, pairs, move |(l, m)| {
            let stab_l = bitabloid_stabilizer(&l, &a.group);
            let stab_m = bitabloid_stabilizer(&m, &a.group);
            let mut cases = 0;
            for t in a.admissibles(&l, &m) {
                let phi = a.phi_standard(&l, &m, &t).map_err(|e| e.to_string())?;
                let img = a.embed(&phi.gen_image);
                let mut set = std::collections::BTreeSet::new();
                for &y in &stab_m {
                    for &x in &stab_l {
                        set.insert(a.group.mul(a.group.mul(y, t.c), x));
                    }
                }
                let expect = a.sum_of(&set.into_iter().collect::<Vec<_>>());
                if img != expect {
                    return Err(format!("group-algebra image fails {:?} {:?}", l, m));
                }
                cases += 1;
            }
            Ok(cases)
        });
        fold(results)
    });
    run.finish()
}

// ---------------------------------------------------------------------------
// semistandard-basis (criterion 6)
// ---------------------------------------------------------------------------

fn semistandard_basis(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("semistandard-basis");
    let r3 = opts.r.min(3);
    let n3 = opts.n.unwrap_or(r3).max(r3);
    let alg = std::sync::Arc::new(galg(r3));
    run.check("generic-weight-ranks", || {
        let a = alg.clone();
        let pairs: Vec<(Bicomposition, Bicomposition)> = bipartitions(r3)
            .into_iter()
            .flat_map(|l| shapes(n3, r3).into_iter().map(move |m| (l.clone(), m)))
            .collect();
        let results = par::map(opts.exec, pairs, move |(l, m)| {
            let expect = typed_tableaux(&l, &m, TypedKind::Semistandard).len();
            let vs = a.weyl_vectors(&l, &m).map_err(|e| e.to_string())?;
            if vs.len() != expect {
                return Err(format!("family size mismatch for {:?} {:?}", l, m));
            }
            if expect == 0 {
                return Ok(1);
            }
            let vals: Vec<ModuleElt<LaurentPoly>> = vs.iter().map(|v| v.value.clone()).collect();
            if a.weight_rank(&m, &vals) != expect {
                return Err(format!("weight rank mismatch for {:?} {:?}", l, m));
            }
            for v in &vs {
                crate::weyl_module::leading_term_report(&a, v, |c| c.is_unit_monomial())
                    .map_err(|e| format!("leading term for {:?} {:?}: {}", l, m, e))?;
            }
            Ok(expect + 1)
        });
        fold(results)
    });
    run.check("integral-roundtrip", || {
        let a = alg.clone();
        let mut rng = StdRng::seed_from_u64(opts.seed ^ 3);
        let mut cases = 0;
        for l in bipartitions(r3) {
            for m in shapes(n3, r3) {
                let vs = a.weyl_vectors(&l, &m).map_err(|e| e.to_string())?;
                if vs.is_empty() {
                    continue;
                }
                let dim = a.shape_data(&m).basis.len();
                let coeffs: Vec<LaurentPoly> = (0..vs.len())
                    .map(|_| {
                        LaurentPoly::monomial(
                            BigInt::from(rng.gen_range(-4i64..=4)),
                            rng.gen_range(-2..=2),
                            rng.gen_range(-2..=2),
                        )
                    })
                    .collect();
                let mut target = ModuleElt::zero(&m);
                for (c, v) in coeffs.iter().zip(&vs) {
                    let t = a.module_scale(&v.value, c);
                    a.module_add_assign(&mut target, &t);
                }
                let mat: Vec<Vec<LaurentPoly>> = {
                    let cols: Vec<Vec<LaurentPoly>> = vs
                        .iter()
                        .map(|v| module_row(&a, dim, &v.value))
                        .collect();
                    (0..dim)
                        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
                        .collect()
                };
                let sol = GenericRing
                    .solve_columns(mat, vec![module_row(&a, dim, &target)])
                    .map_err(|e| format!("solve failed for {:?} {:?}: {}", l, m, e))?
                    .pop()
                    .unwrap();
                if sol != coeffs {
                    return Err(format!("roundtrip coefficients differ for {:?} {:?}", l, m));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.check("weight-ranks-at-special-points", || {
        // q = Q = 1 over the rationals, up to rank 4
        let r4 = opts.r.min(4);
        let ring = RationalSpec::from_ints(1, 1).unwrap();
        let a = std::sync::Arc::new(Algebra::new(r4, ring));
        let n4 = opts.n.unwrap_or(r4).max(r4);
        let pairs: Vec<(Bicomposition, Bicomposition)> = bipartitions(r4)
            .into_iter()
            .flat_map(|l| shapes(n4, r4).into_iter().map(move |m| (l.clone(), m)))
            .collect();
        let results = par::map(opts.exec, pairs, move |(l, m)| {
            let expect = typed_tableaux(&l, &m, TypedKind::Semistandard).len();
            if expect == 0 {
                return Ok(0);
            }
            let vs = a.weyl_vectors(&l, &m).map_err(|e| e.to_string())?;
            let vals: Vec<_> = vs.iter().map(|v| v.value.clone()).collect();
            if a.weight_rank(&m, &vals) != expect {
                return Err(format!(
                    "weight dimension at one differs for {:?} {:?}",
                    l, m
                ));
            }
            Ok(expect)
        });
        fold(results)
    });
    run.check("signed-symmetrized-independence", || {
        // the signed expansions of the column-symmetrized sums stay
        // independent, and the semistandard ones span the positive family
        let r4 = opts.r.min(4);
        let n4 = opts.n.unwrap_or(r4).max(r4);
        let rat = RationalSpec::from_ints(1, 1).unwrap();
        let pairs: Vec<(Bicomposition, Bicomposition)> = bipartitions(r4)
            .into_iter()
            .flat_map(|l| shapes(n4, r4).into_iter().map(move |m| (l.clone(), m)))
            .collect();
        let results = par::map(opts.exec, pairs, move |(l, m)| {
            let plus = typed_tableaux(&l, &m, TypedKind::Positive);
            if plus.is_empty() {
                return Ok(0);
            }
            let ss = typed_tableaux(&l, &m, TypedKind::Semistandard);
            let all = typed_tableaux(&l, &m, TypedKind::All);
            let index: std::collections::BTreeMap<&TypedBitableau, usize> =
                all.iter().enumerate().map(|(i, t)| (t, i)).collect();
            let row_of = |sum: &crate::tableaux::TypedSum| {
                let mut row = vec![BigRational::from_integer(0.into()); all.len()];
                for (t, &c) in sum {
                    row[index[t]] = BigRational::from_integer(c.into());
                }
                row
            };
            let e_plus: Vec<Vec<BigRational>> = plus
                .iter()
                .map(|t| row_of(&sigma_sum(&e_element(t))))
                .collect();
            let e_ss: Vec<Vec<BigRational>> = ss
                .iter()
                .map(|t| row_of(&sigma_sum(&e_element(t))))
                .collect();
            let rank_plus = rat.mat_rank(e_plus);
            let rank_ss = rat.mat_rank(e_ss);
            if rank_ss != ss.len() {
                return Err(format!("semistandard family dependent for {:?} {:?}", l, m));
            }
            if rank_plus != ss.len() {
                return Err(format!(
                    "positive span rank {} != semistandard count {} for {:?} {:?}",
                    rank_plus,
                    ss.len(),
                    l,
                    m
                ));
            }
            Ok(2)
        });
        fold(results)
    });
    run.check("flattening-injective", || {
        let mut cases = 0;
        for l in bipartitions(r3) {
            for m in shapes(n3, r3) {
                let plus = typed_tableaux(&l, &m, TypedKind::Positive);
                let mut flats: Vec<Vec<Vec<i32>>> = plus.iter().map(|t| t.tilde()).collect();
                flats.sort();
                flats.dedup();
                if flats.len() != plus.len() {
                    return Err(format!("flattening collides for {:?} {:?}", l, m));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.check("coset-tableau-bijection", || {
        let a = alg.clone();
        let mut cases = 0;
        for l in bipartitions(r3) {
            for m in shapes(n3, r3) {
                let sit = situation(&l, &m);
                let gen_toid = Bitabloid::new(&Bitableau::t_row(&m));
                let mut images = Vec::new();
                for c in a
                    .group
                    .dist_double_in(&sit.i, &sit.j, &SimpleSubset::delta(r3))
                {
                    let tc = coord_map(CoordMap::Alpha, &l, &gen_toid.act(a.group.perm(c)));
                    if !tc.is_row_standard() {
                        return Err(format!(
                            "coset image not positive row standard for {:?} {:?}",
                            l, m
                        ));
                    }
                    images.push(tc);
                }
                images.sort();
                images.dedup();
                let mut expect: Vec<TypedBitableau> = typed_tableaux(&l, &m, TypedKind::All)
                    .into_iter()
                    .filter(|t| t.is_row_standard())
                    .collect();
                expect.sort();
                if images != expect {
                    return Err(format!("coset bijection fails for {:?} {:?}", l, m));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.check("place-permutation-action", || {
        let a = alg.clone();
        let mut rng = StdRng::seed_from_u64(opts.seed ^ 4);
        let mut cases = 0;
        for l in bipartitions(r3) {
            for m in shapes(n3, r3).into_iter().take(6) {
                let toids = bitabloids(&m);
                for map in [CoordMap::Alpha, CoordMap::Beta, CoordMap::Gamma] {
                    for _ in 0..4 {
                        let toid = &toids[rng.gen_range(0..toids.len())];
                        // a random positive element
                        let sigma = loop {
                            let e = rng.gen_range(0..a.group.order()) as ElemIdx;
                            if a.group.perm(e).is_positive() {
                                break e;
                            }
                        };
                        let t = coord_map(map, &l, toid);
                        let transported =
                            coord_map(map, &l, &toid.act(a.group.perm(sigma)));
                        // place permutation on the reading positions
                        let pos = match map {
                            CoordMap::Alpha => Bitableau::t_row(&l),
                            CoordMap::Beta => Bitableau::t_row_hat(&l),
                            CoordMap::Gamma => Bitableau::t_col_hat(&l),
                        };
                        let w = a.group.perm(sigma);
                        let winv = w.inverse();
                        let mut expect = t.clone();
                        for cell in Bitableau::cells(&l) {
                            let i = pos.entry(cell);
                            let j = winv.apply(i);
                            let (cell_j, _) = pos.find(j.abs());
                            let v = t.entry(cell_j);
                            expect_set(&mut expect, cell, v);
                        }
                        if transported != expect {
                            return Err(format!(
                                "place permutation fails for {:?} {:?} {:?}",
                                l, m, map
                            ));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(cases)
    });
    run.finish()
}

fn expect_set(t: &mut TypedBitableau, cell: crate::tableaux::Cell, v: i32) {
    let rows = if cell.0 == 0 {
        &mut t.first
    } else {
        &mut t.second
    };
    rows[cell.1][cell.2] = v;
}

// ---------------------------------------------------------------------------
// gram-identity (criterion 7)
// ---------------------------------------------------------------------------

fn gram_identity(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("gram-identity");
    let r4 = opts.r.min(4);
    run.check("closed-form", || {
        let a = galg(r4);
        let mut cases = 0;
        for l in bipartitions(r4) {
            let ra = r4 - l.a();
            let cls = crate::weyl_module::hat_col_class(&l);
            let w = cls.perm_from_row_filling();
            let (qa, qb) = w.qlt_exponents();
            let expect = LaurentPoly::monomial(
                1.into(),
                qa + (ra * ra.saturating_sub(1) / 2) as i32,
                qb + ra as i32,
            );
            let got = a.z_gram_value(&l).map_err(|e| e.to_string())?;
            if got != expect {
                return Err(format!("value {:?} != {:?} for {:?}", got, expect, l));
            }
            cases += 1;
        }
        Ok(cases)
    });
    let r3 = opts.r.min(3);
    let n3 = opts.n.unwrap_or(r3).max(r3);
    run.check("generic-rank-full", || {
        let a = std::sync::Arc::new(galg(r3));
        let results = par::map(opts.exec, bipartitions(r3), move |l| {
            let dim = a.weyl_dim(&l, n3);
            let rank = a.gram_rank(&l, n3).map_err(|e| e.to_string())?;
            if rank != dim {
                return Err(format!("generic rank {} < dimension {} for {:?}", rank, dim, l));
            }
            Ok(1)
        });
        fold(results)
    });
    run.check("head-nonzero-at-specializations", || {
        let mut cases = 0;
        let specs: Vec<(i64, i64)> = vec![(1, 1), (1, -1), (2, 3)];
        for (qv, bqv) in specs {
            let ring = RationalSpec::from_ints(qv, bqv).map_err(|e| e.to_string())?;
            let a = Algebra::new(r3.min(2).max(r3.min(3)), ring);
            for l in bipartitions(a.r()) {
                let v = a.z_gram_value(&l).map_err(|e| e.to_string())?;
                if a.ring.is_zero(&v) {
                    return Err(format!("generator isotropic at q={} Q={} for {:?}", qv, bqv, l));
                }
                let rank = a.gram_rank(&l, a.r()).map_err(|e| e.to_string())?;
                if rank == 0 {
                    return Err(format!("irreducible vanished for {:?}", l));
                }
                cases += 1;
            }
        }
        let fp = PrimeFieldSpec::new(5, 2, 3).map_err(|e| e.to_string())?;
        let a = Algebra::new(r3.min(2), fp);
        for l in bipartitions(a.r()) {
            if a.gram_rank(&l, a.r()).map_err(|e| e.to_string())? == 0 {
                return Err(format!("irreducible vanished mod 5 for {:?}", l));
            }
            cases += 1;
        }
        Ok(cases)
    });
    run.check("dimension-sum-invariant", || {
        // the semistandard family keeps full rank at every specialization,
        // so the dimension square-sum never moves
        let mut sums = Vec::new();
        for (qv, bqv) in [(1i64, 1i64), (5, 7), (-3, 11)] {
            let ring = RationalSpec::from_ints(qv, bqv).map_err(|e| e.to_string())?;
            let a = std::sync::Arc::new(Algebra::new(r3, ring));
            let results = par::map(opts.exec, bipartitions(r3), {
                let a = a.clone();
                move |l| {
                    let mut dim = 0usize;
                    for m in shapes(n3, r3) {
                        let vs = a.weyl_vectors(&l, &m).map_err(|e| e.to_string())?;
                        if vs.is_empty() {
                            continue;
                        }
                        let vals: Vec<_> = vs.iter().map(|v| v.value.clone()).collect();
                        let rank = a.weight_rank(&m, &vals);
                        if rank != vs.len() {
                            return Err(format!(
                                "family degenerates at q={} Q={} for {:?} {:?}",
                                qv, bqv, l, m
                            ));
                        }
                        dim += rank;
                    }
                    Ok(dim * dim)
                }
            });
            let mut total = 0;
            for r in results {
                total += r?;
            }
            sums.push(total);
        }
        if !sums.windows(2).all(|w| w[0] == w[1]) {
            return Err(format!("square sums differ across specializations: {:?}", sums));
        }
        Ok(sums.len())
    });
    let r2 = opts.r.min(2);
    run.check("decomposition-consistency", || {
        // dim W = sum of multiplicities times irreducible dimensions, with
        // a unitriangular system solvable in non-negative integers
        let mut cases = 0;
        for (qv, bqv) in [(1i64, -1i64), (-1, 1), (1, 1)] {
            let ring = RationalSpec::from_ints(qv, bqv).map_err(|e| e.to_string())?;
            let a = Algebra::new(r2, ring);
            let bps = bipartitions(r2);
            let dims_w: Vec<usize> = bps.iter().map(|l| a.weyl_dim(l, r2)).collect();
            let dims_f: Result<Vec<usize>, String> = bps
                .iter()
                .map(|l| a.gram_rank(l, r2).map_err(|e| e.to_string()))
                .collect();
            let dims_f = dims_f?;
            for i in 0..bps.len() {
                let deficit = dims_w[i] as i64 - dims_f[i] as i64;
                if deficit < 0 {
                    return Err(format!("irreducible exceeds module for {:?}", bps[i]));
                }
                // feasibility of the non-negative integer combination over
                // later shapes
                let pool: Vec<i64> = dims_f[i + 1..].iter().map(|&d| d as i64).collect();
                if !subset_sum_feasible(deficit, &pool) {
                    return Err(format!(
                        "no non-negative multiplicities for {:?} at q={} Q={}",
                        bps[i], qv, bqv
                    ));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.finish()
}

fn subset_sum_feasible(target: i64, pool: &[i64]) -> bool {
    if target == 0 {
        return true;
    }
    if target < 0 {
        return false;
    }
    let Some((&first, rest)) = pool.split_first() else {
        return false;
    };
    if first == 0 {
        return subset_sum_feasible(target, rest);
    }
    let mut used = 0;
    while used <= target {
        if subset_sum_feasible(target - used, rest) {
            return true;
        }
        used += first;
    }
    false
}

// ---------------------------------------------------------------------------
// genericity (criterion 8)
// ---------------------------------------------------------------------------

fn genericity(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("genericity");
    let r = opts.r.min(2);
    run.check("structure-constants-two-path", || {
        let gen = galg(r);
        let seeds = rational_seeds(opts.seed ^ 5);
        let rat1 = RationalSpec::from_ints(seeds[0].0, seeds[0].1).unwrap();
        let rat2 = RationalSpec::from_ints(seeds[1].0, seeds[1].1).unwrap();
        let fp = PrimeFieldSpec::new(10007, 1234, 987).unwrap();
        let a1 = Algebra::new(r, rat1.clone());
        let a2 = Algebra::new(r, rat2.clone());
        let a3 = Algebra::new(r, fp);
        let bps = bipartitions(r);
        let mut cases = 0;
        for l in &bps {
            for m in &bps {
                let st = gen.admissibles(l, m);
                if st.is_empty() {
                    continue;
                }
                let phi_lm = gen.phi_standard_batch(l, m, &st).map_err(|e| e.to_string())?;
                for nu in &bps {
                    let tt = gen.admissibles(m, nu);
                    if tt.is_empty() {
                        continue;
                    }
                    let phi_mn = gen
                        .phi_standard_batch(m, nu, &tt)
                        .map_err(|e| e.to_string())?;
                    for (si, f) in phi_lm.iter().enumerate() {
                        for (ti, g) in phi_mn.iter().enumerate() {
                            let prod = gen.hom_compose(f, g);
                            let coords = gen.express_in_basis(&prod).map_err(|e| {
                                format!("generic expansion failed {:?} {:?} {:?}: {}", l, m, nu, e)
                            })?;
                            // same composition natively at each specialization
                            for which in 0..3 {
                                let ok = match which {
                                    0 => compare_native(&a1, l, m, nu, si, ti, &coords, |c| {
                                        specialize_in(&rat1, c)
                                    }),
                                    1 => compare_native(&a2, l, m, nu, si, ti, &coords, |c| {
                                        specialize_in(&rat2, c)
                                    }),
                                    _ => compare_native(&a3, l, m, nu, si, ti, &coords, |c| {
                                        specialize_in(&a3.ring, c)
                                    }),
                                };
                                if let Err(e) = ok {
                                    return Err(format!(
                                        "{:?} {:?} {:?} triple ({},{}): {}",
                                        l, m, nu, si, ti, e
                                    ));
                                }
                                cases += 1;
                            }
                        }
                    }
                }
            }
        }
        Ok(cases)
    });
    run.finish()
}

#[allow(clippy::too_many_arguments)]
fn compare_native<R: CoeffRing + LinAlg>(
    a: &Algebra<R>,
    l: &Bicomposition,
    m: &Bicomposition,
    nu: &Bicomposition,
    si: usize,
    ti: usize,
    generic_coords: &crate::schur::SchurElt<LaurentPoly>,
    specialize: impl Fn(&LaurentPoly) -> R::Elem,
) -> Result<(), String> {
    let st = a.admissibles(l, m);
    let tt = a.admissibles(m, nu);
    let f = a
        .phi_standard(l, m, &st[si])
        .map_err(|e| e.to_string())?;
    let g = a
        .phi_standard(m, nu, &tt[ti])
        .map_err(|e| e.to_string())?;
    let prod = a.hom_compose(&f, &g);
    let native = a.express_in_basis(&prod).map_err(|e| e.to_string())?;
    // line up coordinates over the shared deterministic triple order
    let all = a.admissibles(l, nu);
    let mut native_by_idx = vec![a.ring.zero(); all.len()];
    for (_, _, t, c) in &native.terms {
        let idx = all.iter().position(|x| x == t).unwrap();
        native_by_idx[idx] = c.clone();
    }
    let mut generic_by_idx = vec![a.ring.zero(); all.len()];
    for (_, _, t, c) in &generic_coords.terms {
        let idx = all
            .iter()
            .position(|x| x == t)
            .ok_or("triple missing from native order")?;
        generic_by_idx[idx] = specialize(c);
    }
    if native_by_idx != generic_by_idx {
        return Err("structure constants disagree after specialization".into());
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// forms
// ---------------------------------------------------------------------------

fn forms(opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("forms");
    let r = opts.r.min(3);
    let alg = galg(r);
    run.check("module-form-adjoint", || {
        let mut rng = StdRng::seed_from_u64(opts.seed ^ 6);
        let shapes_r = bipartitions(r);
        let mut cases = 0;
        for l in &shapes_r {
            let data = alg.shape_data(l);
            for _ in 0..10 {
                let mut m1 = ModuleElt::zero(l);
                let mut m2 = ModuleElt::zero(l);
                for _ in 0..3 {
                    alg.module_add_term(
                        &mut m1,
                        rng.gen_range(0..data.basis.len()),
                        LaurentPoly::from_int(rng.gen_range(-3..=3)),
                    );
                    alg.module_add_term(
                        &mut m2,
                        rng.gen_range(0..data.basis.len()),
                        LaurentPoly::from_int(rng.gen_range(-3..=3)),
                    );
                }
                let e = rng.gen_range(0..alg.group.order()) as ElemIdx;
                let h = alg.t_of(e);
                let lhs = alg.bilinear(&alg.act_hecke(&m1, &h), &m2);
                let rhs = alg.bilinear(&m1, &alg.act_hecke(&m2, &alg.hecke_star(&h)));
                if lhs != rhs {
                    return Err(format!("module adjointness fails for {:?}", l));
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    let r2 = opts.r.min(2);
    let alg2 = galg(r2);
    run.check("endomorphism-adjoint", || {
        let mut cases = 0;
        let mut rng = StdRng::seed_from_u64(opts.seed ^ 7);
        for l in bipartitions(r2) {
            for m in bipartitions(r2) {
                for t in alg2.admissibles(&l, &m) {
                    let phi = alg2.phi_standard(&l, &m, &t).map_err(|e| e.to_string())?;
                    let adj = alg2.hom_adjoint(&phi);
                    if !alg2.hom_well_defined(&adj) {
                        return Err(format!("adjoint not a map for {:?} {:?}", l, m));
                    }
                    let back = alg2.hom_adjoint(&adj);
                    if back != phi {
                        return Err(format!("double adjoint differs for {:?} {:?}", l, m));
                    }
                    let sdata = alg2.shape_data(&l);
                    let tdata = alg2.shape_data(&m);
                    for _ in 0..5 {
                        let mut x = ModuleElt::zero(&l);
                        let mut y = ModuleElt::zero(&m);
                        alg2.module_add_term(
                            &mut x,
                            rng.gen_range(0..sdata.basis.len()),
                            LaurentPoly::from_int(rng.gen_range(-2..=2)),
                        );
                        alg2.module_add_term(
                            &mut y,
                            rng.gen_range(0..tdata.basis.len()),
                            LaurentPoly::from_int(rng.gen_range(-2..=2)),
                        );
                        let lhs = alg2.bilinear(&alg2.hom_apply(&phi, &x), &y);
                        let rhs = alg2.bilinear(&x, &alg2.hom_apply(&adj, &y));
                        if lhs != rhs {
                            return Err(format!("adjoint identity fails for {:?} {:?}", l, m));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(cases)
    });
    run.check("idempotents-and-projections", || {
        let mut cases = 0;
        let omega = Bicomposition::omega(r2);
        for l in bipartitions(r2) {
            let id_l = HomElt {
                source: l.clone(),
                target: l.clone(),
                gen_image: alg2.module_gen(&l),
            };
            let proj = HomElt {
                source: omega.clone(),
                target: l.clone(),
                gen_image: alg2.module_gen(&l),
            };
            // identity triple realizations
            let id_triple = alg2
                .admissibles(&l, &l)
                .into_iter()
                .find(|t| {
                    t.d == alg2.group.id() && t.v == alg2.group.id() && t.u == alg2.group.id()
                })
                .ok_or("missing identity triple")?;
            let phi_id = alg2
                .phi_standard(&l, &l, &id_triple)
                .map_err(|e| e.to_string())?;
            if phi_id != id_l {
                return Err(format!("identity triple map differs for {:?}", l));
            }
            let proj_triple = alg2
                .admissibles(&omega, &l)
                .into_iter()
                .find(|t| {
                    t.d == alg2.group.id() && t.v == alg2.group.id() && t.u == alg2.group.id()
                })
                .ok_or("missing projection triple")?;
            let phi_proj = alg2
                .phi_standard(&omega, &l, &proj_triple)
                .map_err(|e| e.to_string())?;
            if phi_proj != proj {
                return Err(format!("projection triple map differs for {:?}", l));
            }
            // idempotency and the absorption laws
            if alg2.hom_compose(&id_l, &id_l) != id_l {
                return Err(format!("identity not idempotent for {:?}", l));
            }
            if alg2.hom_compose(&proj, &id_l) != proj {
                return Err(format!("left absorption fails for {:?}", l));
            }
            let id_omega = HomElt {
                source: omega.clone(),
                target: omega.clone(),
                gen_image: alg2.module_gen(&omega),
            };
            if alg2.hom_compose(&id_omega, &proj) != proj {
                return Err(format!("right absorption fails for {:?}", l));
            }
            cases += 3;
        }
        Ok(cases)
    });
    run.check("regular-module-endomorphisms", || {
        // endomorphisms of the regular module compose like reversed
        // multiplication in the algebra
        let omega = Bicomposition::omega(r2);
        let triples = alg2.admissibles(&omega, &omega);
        let phis = alg2
            .phi_standard_batch(&omega, &omega, &triples)
            .map_err(|e| e.to_string())?;
        let mut cases = 0;
        for f in phis.iter().take(6) {
            for g in phis.iter().take(6) {
                let comp = alg2.hom_compose(f, g);
                let mf = alg2.embed(&f.gen_image);
                let mg = alg2.embed(&g.gen_image);
                let prod = alg2.hecke_mul(&mg, &mf);
                let back = alg2
                    .module_from_hecke_batch(&omega, &[prod])
                    .map_err(|e| e.to_string())?
                    .pop()
                    .unwrap();
                if comp.gen_image != back {
                    return Err("composition does not match reversed product".into());
                }
                cases += 1;
            }
        }
        Ok(cases)
    });
    run.check("parabolic-maps", || {
        let mut cases = 0;
        let subsets: Vec<SimpleSubset> = (0..(1u32 << r2))
            .map(|bits| {
                SimpleSubset::from_indices(
                    r2,
                    &(0..r2)
                        .filter(|&i| bits & (1 << i) != 0)
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        for i_set in &subsets {
            for j_set in &subsets {
                let mut seen = std::collections::BTreeSet::new();
                for d in alg2.group.dist_double(i_set, j_set) {
                    let img = alg2.psi_parabolic(i_set, j_set, d).map_err(|e| e.to_string())?;
                    if !alg2.in_trivial_left_module(i_set, &img) {
                        return Err(format!("image escapes for {:?} {:?}", i_set, j_set));
                    }
                    for e in img.support() {
                        if !seen.insert(e) {
                            return Err("supports overlap across double cosets".into());
                        }
                    }
                    cases += 1;
                }
                // identity representative for equal subsets reproduces the
                // parabolic sum
                if i_set == j_set {
                    let img = alg2
                        .psi_parabolic(i_set, j_set, alg2.group.id())
                        .map_err(|e| e.to_string())?;
                    if img != alg2.x_subset(i_set) {
                        return Err(format!("identity map image differs for {:?}", i_set));
                    }
                }
            }
        }
        Ok(cases)
    });
    run.finish()
}

// ---------------------------------------------------------------------------
// worked-examples (criterion 9)
// ---------------------------------------------------------------------------

fn worked_examples(_opts: &VerifyOpts) -> SuiteReport {
    let mut run = Runner::new("worked-examples");
    run.check("special-fillings", || {
        let l = Bicomposition::new(vec![4, 3, 1], vec![3, 2]);
        let tr = Bitableau::t_row(&l);
        if tr.first != vec![vec![1, 2, 3, 4], vec![5, 6, 7], vec![8]]
            || tr.second != vec![vec![9, 10, 11], vec![12, 13]]
        {
            return Err("row filling".into());
        }
        let trh = Bitableau::t_row_hat(&l);
        if trh.first != vec![vec![6, 7, 8, 9], vec![10, 11, 12], vec![13]]
            || trh.second != vec![vec![1, 2, 3], vec![4, 5]]
        {
            return Err("swapped row filling".into());
        }
        let tc = Bitableau::t_col(&l);
        if tc.first != vec![vec![1, 4, 6, 8], vec![2, 5, 7], vec![3]]
            || tc.second != vec![vec![9, 11, 13], vec![10, 12]]
        {
            return Err("column filling".into());
        }
        let tch = Bitableau::t_col_hat(&l);
        if tch.first != vec![vec![6, 9, 11, 13], vec![7, 10, 12], vec![8]]
            || tch.second != vec![vec![1, 3, 5], vec![2, 4]]
        {
            return Err("swapped column filling".into());
        }
        Ok(4)
    });
    run.check("symmetrizer-coefficients", || {
        let a = galg(4);
        let shape = Bicomposition::new(vec![2, 1], vec![1]);
        let tr = Bitableau::t_row(&shape);
        if tr.first != vec![vec![1, 2], vec![3]] || tr.second != vec![vec![4]] {
            return Err("small row filling".into());
        }
        let tc = Bitableau::t_col(&shape);
        if tc.first != vec![vec![1, 3], vec![2]] || tc.second != vec![vec![4]] {
            return Err("small column filling".into());
        }
        let s1 = SignedPerm::gen(4, 1);
        let x = a.x_elt(&shape);
        let y = a.y_elt(&shape);
        let one = LaurentPoly::one();
        let coeff = |h: &HeckeElt<LaurentPoly>, w: &SignedPerm| {
            h.terms
                .get(&a.group.idx(w))
                .cloned()
                .unwrap_or_else(LaurentPoly::zero)
        };
        if x.terms.len() != 2
            || coeff(&x, &SignedPerm::identity(4)) != one
            || coeff(&x, &s1) != one
        {
            return Err("row symmetrizer".into());
        }
        if y.terms.len() != 2 || coeff(&y, &s1) != LaurentPoly::q_pow(-1).neg() {
            return Err("column symmetrizer".into());
        }
        let s2 = SignedPerm::gen(4, 2);
        if coeff(&a.x_hat_elt(&shape), &s2) != one
            || coeff(&a.y_hat_elt(&shape), &s2) != LaurentPoly::q_pow(-1).neg()
        {
            return Err("hatted symmetrizers".into());
        }
        Ok(4)
    });
    run.check("typed-membership", || {
        let lambda = Bicomposition::new(vec![3, 2], vec![1, 1]);
        let mu = Bicomposition::new(vec![3, 1, 0, 0, 0], vec![2, 1]);
        let t1 = TypedBitableau {
            shape: lambda.clone(),
            n: 7,
            first: vec![vec![1, 8, 9], vec![2, 1]],
            second: vec![vec![1], vec![-8]],
        };
        let t2 = TypedBitableau {
            shape: lambda.clone(),
            n: 7,
            first: vec![vec![1, 1, 1], vec![2, 8]],
            second: vec![vec![8], vec![9]],
        };
        if !t1.has_type(&mu) || t1.is_positive() {
            return Err("first tableau membership".into());
        }
        if !t2.has_type(&mu) || !t2.is_semistandard() {
            return Err("second tableau membership".into());
        }
        // flattening of the semistandard one
        let flat = t2.tilde();
        if flat.len() != 14
            || flat[0] != vec![1, 1, 1]
            || flat[1] != vec![2, 8]
            || flat[7] != vec![8]
            || flat[8] != vec![9]
        {
            return Err("flattened tableau".into());
        }
        Ok(3)
    });
    run.check("symmetrized-expansions", || {
        let shape = Bicomposition::new(vec![2, 1], vec![1, 1]);
        let t = TypedBitableau {
            shape: shape.clone(),
            n: 4,
            first: vec![vec![1, 1], vec![2]],
            second: vec![vec![5], vec![6]],
        };
        let e = e_element(&t);
        let make = |f: Vec<Vec<i32>>, s: Vec<Vec<i32>>| TypedBitableau {
            shape: shape.clone(),
            n: 4,
            first: f,
            second: s,
        };
        if e.len() != 4
            || e[&make(vec![vec![1, 1], vec![2]], vec![vec![5], vec![6]])] != 1
            || e[&make(vec![vec![2, 1], vec![1]], vec![vec![5], vec![6]])] != -1
            || e[&make(vec![vec![1, 1], vec![2]], vec![vec![6], vec![5]])] != -1
            || e[&make(vec![vec![2, 1], vec![1]], vec![vec![6], vec![5]])] != 1
        {
            return Err("column symmetrizer expansion".into());
        }
        let shape2 = Bicomposition::new(vec![2, 1], vec![2]);
        let t = TypedBitableau {
            shape: shape2.clone(),
            n: 4,
            first: vec![vec![1, 1], vec![2]],
            second: vec![vec![5, 6]],
        };
        let s = sigma(&t);
        let make2 = |a: i32, b: i32| TypedBitableau {
            shape: shape2.clone(),
            n: 4,
            first: vec![vec![1, 1], vec![2]],
            second: vec![vec![a, b]],
        };
        if s.len() != 4
            || s[&make2(5, 6)] != 1
            || s[&make2(-5, 6)] != -1
            || s[&make2(5, -6)] != -1
            || s[&make2(-5, -6)] != 1
        {
            return Err("sign expansion".into());
        }
        Ok(2)
    });
    run.check("coordinate-map-images", || {
        let lambda = Bicomposition::new(vec![2, 2], vec![2]);
        let mu = Bicomposition::new(vec![3, 1, 0, 0], vec![1, 1]);
        let t = Bitableau {
            shape: mu.clone(),
            first: vec![vec![3, 4, 6], vec![1], vec![], vec![]],
            second: vec![vec![-2], vec![5]],
        };
        let toid = Bitabloid::new(&t);
        let alpha = coord_map(CoordMap::Alpha, &lambda, &toid);
        if alpha.first != vec![vec![2, -7], vec![1, 1]] || alpha.second != vec![vec![8, 1]] {
            return Err("first coordinate map".into());
        }
        let beta = coord_map(CoordMap::Beta, &lambda, &toid);
        if beta.first != vec![vec![1, 1], vec![8, 1]] || beta.second != vec![vec![2, -7]] {
            return Err("second coordinate map".into());
        }
        let gamma = coord_map(CoordMap::Gamma, &lambda, &toid);
        if gamma.first != vec![vec![1, 8], vec![1, 1]] || gamma.second != vec![vec![2, -7]] {
            return Err("third coordinate map".into());
        }
        for m in [CoordMap::Alpha, CoordMap::Beta, CoordMap::Gamma] {
            let fwd = coord_map(m, &lambda, &toid);
            if coord_map_inv(m, &mu, &fwd).map_err(|e| e.to_string())? != toid {
                return Err("coordinate map inversion".into());
            }
        }
        Ok(6)
    });
    run.check("expanded-generator", || {
        // the rank-two canonical element in both presentations
        let a = galg(2);
        let shape = Bicomposition::new(vec![1], vec![1]);
        let z = a.z_elt(&shape).map_err(|e| e.to_string())?;
        let s0 = SignedPerm::gen(2, 0);
        let s1 = SignedPerm::gen(2, 1);
        let qq = LaurentPoly::qq_pow(1);
        let coeff = |w: &SignedPerm| {
            z.terms
                .get(&a.group.idx(w))
                .cloned()
                .unwrap_or_else(LaurentPoly::zero)
        };
        if z.terms.len() != 4
            || coeff(&s1) != qq
            || coeff(&s0.compose(&s1)) != qq
            || coeff(&s1.compose(&s0)) != LaurentPoly::from_int(-1)
            || coeff(&s0.compose(&s1).compose(&s0)) != LaurentPoly::from_int(-1)
        {
            return Err("expanded canonical element".into());
        }
        Ok(1)
    });
    run.finish()
}
