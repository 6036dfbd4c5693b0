//! One check per acceptance criterion, each printing a single PASS or FAIL
//! line. Run with `cargo test -p hgl --test acceptance -- --nocapture` to see
//! the report.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use hopf_galois::comod::{
    coinvariants, coinvariants_q, hom_canonical, invariants, regular, to_module_algebra, trivial, trivial_cleft,
    ComoduleAlgebraData,
};
use hopf_galois::exactla::enumerate::DEFAULT_CAP;
use hopf_galois::exactla::{FieldSpec, Scalar, Subspace};
use hopf_galois::galois::{
    canonical_inverse_regular, check_fdim_bijection, check_mono_on_qgalois, check_montgomery_conditions,
    closure_report, is_q_galois, phi, psi_enum, psi_regular, GaloisConnectionInstance, MontgomeryReport,
};
use hopf_galois::hopf::{
    coopposite, cyclic_group, dual, group_algebra, opposite, sweedler, symmetric_group, taft, validate_hopf,
    HopfAlgebraData, StructurePart,
};
use hopf_galois::quotlat::{
    enumerate_coideal_subalgebras, enumerate_ricos, enumerate_subalgebras_over, join_q, meet_q, validate_rico,
    GeneralisedQuotient,
};
use hopf_galois::Error;

const GF2: FieldSpec = FieldSpec::Prime(2);
const GF3: FieldSpec = FieldSpec::Prime(3);

const AXIOM_LIMIT: Duration = Duration::from_secs(5);
const GALOIS_LIMIT: Duration = Duration::from_secs(60);
const CLOSURE_LIMIT: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: impl std::fmt::Display) -> String {
    err.to_string()
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?} < {limit:?}"))
}

fn sweedler3() -> HopfAlgebraData {
    sweedler(GF3).unwrap()
}

fn c2() -> HopfAlgebraData {
    group_algebra(&cyclic_group(2), GF3).unwrap()
}

fn s3() -> HopfAlgebraData {
    group_algebra(&symmetric_group(3).0, GF2).unwrap()
}

fn comodule_corpus() -> Vec<(&'static str, ComoduleAlgebraData)> {
    let s = sweedler3();
    let c = c2();
    vec![
        ("regular sweedler", regular(&s)),
        ("regular C2", regular(&c)),
        ("regular S3", regular(&s3())),
        ("trivial sweedler on C2", trivial(&s, c.algebra()).unwrap()),
        ("C2 ⊗ sweedler", trivial_cleft(c.algebra(), &s).unwrap().comodule),
    ]
}

fn quotients(h: &HopfAlgebraData) -> Vec<GeneralisedQuotient> {
    enumerate_ricos(h, DEFAULT_CAP).unwrap().into_elements()
}

fn axiom_suite() -> Outcome {
    let start = Instant::now();
    let f7 = FieldSpec::Prime(7);
    let corpus = [
        ("GF(2)[S3]", s3()),
        ("sweedler Q", sweedler(FieldSpec::Rational).unwrap()),
        ("sweedler GF(3)", sweedler3()),
        ("taft(3, 2) GF(7)", taft(3, &Scalar::from_i64(f7, 2), f7).unwrap()),
    ];
    let mut checked = 0;
    for (name, h) in corpus {
        for (how, g) in [
            ("itself", h.clone()),
            ("dual", dual(&h)),
            ("opposite", opposite(&h).map_err(e)?),
            ("coopposite", coopposite(&h).map_err(e)?),
        ] {
            let r = validate_hopf(&g);
            ensure(r.all_pass(), || format!("{name} {how} fails:\n{r}"))?;
            checked += 1;
        }
    }
    use StructurePart::*;
    let h = sweedler3();
    let perturbations = [
        (Mult, 0, 0),
        (Mult, 3, 6),
        (Mult, 2, 9),
        (Unit, 0, 0),
        (Unit, 2, 0),
        (Comult, 0, 0),
        (Comult, 6, 2),
        (Counit, 0, 1),
        (Counit, 0, 3),
        (Antipode, 3, 3),
    ];
    for (part, row, col) in perturbations {
        let p = h.perturbed(part, row, col, 1).map_err(e)?;
        ensure(!validate_hopf(&p).all_pass(), || format!("perturbation {part:?} ({row}, {col}) passes"))?;
    }
    Ok(format!("{checked} algebras pass, 10 perturbations fail, {}", within(start, AXIOM_LIMIT)?))
}

fn galois_property() -> Outcome {
    let start = Instant::now();
    let h = sweedler3();
    let a = regular(&h);
    let g = GaloisConnectionInstance::new(&a, DEFAULT_CAP).map_err(e)?;
    let one = Subspace::span_i64(GF3, 4, &[[1, 0, 0, 0]]);
    let subs = enumerate_subalgebras_over(a.algebra(), &one, DEFAULT_CAP).map_err(e)?;
    ensure(subs.is_exhaustive(), || "subalgebra enumeration was capped".into())?;
    g.check_galois_property(subs.elements()).map_err(e)?;
    Ok(format!(
        "{} subalgebras, {} quotients, {}",
        subs.len(),
        g.quotients().len(),
        within(start, GALOIS_LIMIT)?
    ))
}

fn suprema_reversal() -> Outcome {
    let mut pairs = 0;
    for h in [sweedler3(), c2()] {
        let a = regular(&h);
        let q = quotients(&h);
        for x in &q {
            for y in &q {
                let lhs = phi(&a, &meet_q(&h, x, y).map_err(e)?).map_err(e)?;
                let rhs = phi(&a, x).map_err(e)?.intersect(&phi(&a, y).map_err(e)?).map_err(e)?;
                ensure(lhs == rhs, || format!("A^co(Q1∨Q2) = {lhs} but the intersection is {rhs}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn formula_agreement() -> Outcome {
    let mut count = 0;
    for h in [sweedler3(), c2()] {
        let a = regular(&h);
        let q = enumerate_ricos(&h, DEFAULT_CAP).map_err(e)?;
        for k in enumerate_coideal_subalgebras(&h, DEFAULT_CAP).map_err(e)?.elements() {
            let formula = psi_regular(&h, k).map_err(e)?;
            let join = psi_enum(&a, k.space(), &q).map_err(e)?;
            ensure(formula.ideal() == join.ideal(), || {
                format!("K = {}: K⁺H = {}, enumerated ψ = {}", k.space(), formula.ideal(), join.ideal())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} coideal subalgebras"))
}

fn closed_iff_q_galois() -> Outcome {
    let start = Instant::now();
    let s = sweedler3();
    let cases = [
        ("regular sweedler", regular(&s)),
        ("regular C2", regular(&c2())),
        ("C2 ⊗ sweedler", trivial_cleft(c2().algebra(), &s).map_err(e)?.comodule),
    ];
    let mut checked = 0;
    for (name, a) in cases {
        let r = closure_report(&a, DEFAULT_CAP).map_err(e)?;
        for i in 0..r.quotients.len() {
            ensure(r.is_closed(i) == r.q_galois[i], || {
                format!(
                    "{name}: quotient by {} closed {} Q-Galois {}",
                    r.quotients[i].ideal(),
                    r.is_closed(i),
                    r.q_galois[i]
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} quotients, 0 counterexamples, {}", within(start, CLOSURE_LIMIT)?))
}

/// Subgroups of a group given by its multiplication table, identity first.
fn subgroup_count(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<BTreeSet<_>>())
        .filter(|s| s.contains(&0) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&table[a][b]))))
        .count()
}

fn finite_bijection() -> Outcome {
    let (s3_table, _) = symmetric_group(3);
    let c2_table = cyclic_group(2);
    // sweedler: the ideals 0, xH, ker ε and (1 − g + λ·gx)H for λ ∈ GF(3)
    let cases = [
        ("sweedler", sweedler3(), 6),
        ("C2", c2(), subgroup_count(&c2_table)),
        ("S3", s3(), subgroup_count(&s3_table)),
    ];
    let mut sizes = Vec::new();
    for (name, h, expected) in cases {
        let cert = check_fdim_bijection(&regular(&h), DEFAULT_CAP).map_err(|x| format!("{name}: {x}"))?;
        let enumerated = quotients(&h).len();
        ensure(cert.pairs.len() == enumerated && enumerated == expected, || {
            format!("{name}: certificate {}, enumeration {enumerated}, oracle {expected}", cert.pairs.len())
        })?;
        sizes.push(format!("{name} {expected}"));
    }
    Ok(sizes.join(", "))
}

fn explicit_inverse() -> Outcome {
    let h = sweedler3();
    let a = regular(&h);
    let ks = enumerate_coideal_subalgebras(&h, DEFAULT_CAP).map_err(e)?.into_elements();
    for k in &ks {
        canonical_inverse_regular(&h, k).map_err(|x| format!("K = {}: {x}", k.space()))?;
        let q = psi_regular(&h, k).map_err(e)?;
        let co = coinvariants_q(&a, q.ideal()).map_err(e)?;
        ensure(k.space().le(&co).map_err(e)?, || format!("K = {} ⊄ H^co(H/K⁺H) = {co}", k.space()))?;
    }
    Ok(format!("{} coideal subalgebras", ks.len()))
}

fn mono() -> Outcome {
    let mut pairs = 0;
    let mut skipped = Vec::new();
    for (name, a) in comodule_corpus() {
        let h = a.hopf();
        let top = validate_rico(h, &Subspace::zero(h.field(), h.dim())).map_err(e)?;
        if !hopf_galois::galois::canonical_map(&a, &top).map_err(e)?.is_surjective() {
            skipped.push(name);
            continue;
        }
        let galois: Vec<GeneralisedQuotient> = quotients(h)
            .into_iter()
            .filter(|q| is_q_galois(&a, q).unwrap())
            .collect();
        for q1 in &galois {
            for q2 in &galois {
                let ok = check_mono_on_qgalois(&a, q1, q2).map_err(e)?;
                ensure(ok, || format!("{name}: {} and {} share coinvariants", q1.ideal(), q2.ideal()))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} Q-Galois pairs; can_H not onto, hypothesis fails: {}", skipped.join(", ")))
}

fn chase_sweedler() -> Outcome {
    let mut n = 0;
    for (name, a) in comodule_corpus() {
        let m = to_module_algebra(&a);
        let inv = invariants(&m);
        let co = coinvariants(&a).map_err(e)?;
        ensure(inv == co, || format!("{name}: invariants {inv}, coinvariants {co}"))?;
        let h = a.hopf();
        let top = validate_rico(h, &Subspace::zero(h.field(), h.dim())).map_err(e)?;
        let hom = hom_canonical(&m, &co).map_err(e)?.bijective;
        let can = is_q_galois(&a, &top).map_err(e)?;
        ensure(hom == can, || format!("{name}: hom_canonical bijective {hom}, H-Galois {can}"))?;
        n += 1;
    }
    Ok(format!("{n} comodule algebras"))
}

fn lattice_laws() -> Outcome {
    let h = sweedler3();
    let q = quotients(&h);
    let n = q.len();
    let index = |g: GeneralisedQuotient| q.iter().position(|e| e.ideal() == g.ideal()).expect("closed");
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            join[i][j] = index(join_q(&h, &q[i], &q[j]).map_err(e)?);
            meet[i][j] = index(meet_q(&h, &q[i], &q[j]).map_err(e)?);
        }
    }
    for i in 0..n {
        ensure(join[i][i] == i && meet[i][i] == i, || format!("idempotence fails at {i}"))?;
        for j in 0..n {
            ensure(join[i][j] == join[j][i] && meet[i][j] == meet[j][i], || format!("commutativity at {i}, {j}"))?;
            ensure(join[i][meet[i][j]] == i && meet[i][join[i][j]] == i, || format!("absorption at {i}, {j}"))?;
            for k in 0..n {
                ensure(join[join[i][j]][k] == join[i][join[j][k]], || format!("join associativity at {i}, {j}, {k}"))?;
                ensure(meet[meet[i][j]][k] == meet[i][meet[j][k]], || format!("meet associativity at {i}, {j}, {k}"))?;
            }
            // the largest enumerated rico inside I_i ∩ I_j
            let cap = q[i].ideal().intersect(q[j].ideal()).map_err(e)?;
            let inside: Vec<usize> = (0..n).filter(|&k| q[k].ideal().le(&cap).unwrap()).collect();
            let top = *inside.iter().max_by_key(|&&k| q[k].ideal().dim()).expect("0 is a rico");
            ensure(inside.iter().all(|&k| q[k].ideal().le(q[top].ideal()).unwrap()), || {
                format!("no largest rico inside {cap}")
            })?;
            ensure(meet[i][j] == top, || format!("meet of {i}, {j} is {} not {top}", meet[i][j]))?;
        }
    }
    Ok(format!("{n} quotients, {} pairs", n * n))
}

fn montgomery() -> Outcome {
    let mut lines = Vec::new();
    for (name, h) in [
        ("sweedler", sweedler3()),
        ("C2", c2()),
        ("S3", s3()),
        ("C3 over GF(2)", group_algebra(&cyclic_group(3), GF2).unwrap()),
    ] {
        let r = check_montgomery_conditions(&h, DEFAULT_CAP).map_err(|x| format!("{name}: {x}"))?;
        ensure(r.bijection == (r.cond1 && r.cond2), || format!("{name}: {r:?}"))?;
        if name == "C2" {
            let want = MontgomeryReport { cond1: true, cond2: true, bijection: true };
            ensure(r == want, || format!("C2 gives {r:?}"))?;
        }
        lines.push(format!("{name} ({}, {}, {})", r.cond1, r.cond2, r.bijection));
    }
    Ok(lines.join(", "))
}

fn determinism() -> Outcome {
    let file = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/sweedler_gf3.hopf");
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_hgl"))
            .args(["closure", file.to_str().unwrap(), "--jobs", jobs])
            .output()
            .map_err(e)?;
        ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
        Ok::<_, String>(out.stdout)
    };
    let runs = [run("1")?, run("1")?, run("4")?, run("4")?];
    ensure(runs.iter().all(|r| r == &runs[0]), || "outputs differ".into())?;
    Ok(format!("4 runs, {} identical bytes", runs[0].len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("axiom suite", axiom_suite),
        ("Galois property", galois_property),
        ("suprema reversal", suprema_reversal),
        ("ψ formula agreement", formula_agreement),
        ("closed ⟺ Q-Galois", closed_iff_q_galois),
        ("finite bijection", finite_bijection),
        ("explicit can⁻¹", explicit_inverse),
        ("mono on Q-Galois", mono),
        ("Chase–Sweedler", chase_sweedler),
        ("lattice laws", lattice_laws),
        ("Montgomery", montgomery),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", n + 1),
            Err(msg) => {
                println!("criterion {:>2} FAIL  {name}: {msg}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn precondition_is_reported_not_faked() {
    let s = sweedler3();
    let a = trivial(&s, c2().algebra()).unwrap();
    assert!(matches!(check_fdim_bijection(&a, DEFAULT_CAP), Err(Error::Precondition(_))));
}
