//! The `hgl` commands. Each returns its full report as text so that output
//! can be compared byte for byte.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use hopf_galois::comod::{
    coinvariants_q, regular, trivial_cleft, validate_comodule_algebra, ComoduleAlgebraData,
};
use hopf_galois::exactla::enumerate::DEFAULT_CAP;
use hopf_galois::exactla::{Scalar, Subspace};
use hopf_galois::galois::{
    bigalois_i, bigalois_space, canonical_map, check_montgomery_conditions, check_normal_restriction,
    closure_report, phi, psi_enum, psi_regular, tensor_over, GaloisConnectionInstance,
};
use hopf_galois::hopf::{coopposite, validate_hopf, HopfAlgebraData};
use hopf_galois::quotlat::{
    enumerate_coideal_subalgebras, enumerate_ricos, enumerate_subalgebras_over, poset_report,
    validate_coideal_subalgebra, validate_rico, GeneralisedQuotient,
};
use hopf_galois::Error;

use crate::dot::{hasse_dot, short_hash};
use crate::format::{load_algebra, load_input, load_subspace, Input};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Check the Hopf (and comodule algebra) axioms.
    Validate,
    /// Coinvariants under H, or under H/I with --ideal.
    Coinv,
    /// Enumerate the generalised quotients of H.
    Quotients,
    /// Enumerate subalgebras between A^{co H} and A.
    Subalgebras,
    /// Closed elements of the Galois connection.
    Closure,
    /// Decide whether A^{co Q} ⊆ A is Q-Galois.
    Qgalois,
    /// The correspondence K ↦ H/K⁺H and Q ↦ H^{co Q}.
    Takeuchi,
    /// Montgomery's two conditions and bijectivity.
    Montgomery,
    /// Normal coideal subalgebras and normal ideals.
    Normal,
    /// Build and check the trivially cleft extension B ⊗ H.
    Cleft,
    /// Coinvariants of A ⊗ A, or of A ⊗_B A with --subalgebra.
    Bigalois,
    /// Hasse diagram of the generalised quotients in DOT.
    Hasse,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub ideal: Option<PathBuf>,
    pub subalgebra: Option<PathBuf>,
    pub regular: bool,
    pub cleft: Option<PathBuf>,
    pub cap: usize,
    pub mirror: bool,
    pub dot: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { ideal: None, subalgebra: None, regular: false, cleft: None, cap: DEFAULT_CAP, mirror: false, dot: false }
    }
}

/// Report text and exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, status: 0 }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn fmt_vector(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = if c.is_negative() { (true, c.neg()) } else { (false, c.clone()) };
        let term = if mag.is_one() { l.clone() } else { format!("{mag}·{l}") };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&term),
            (true, true) => write!(out, "-{term}").unwrap(),
            (false, false) => write!(out, " + {term}").unwrap(),
            (false, true) => write!(out, " - {term}").unwrap(),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn fmt_space(s: &Subspace, labels: &[String]) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s.basis_vectors().iter().map(|v| fmt_vector(v, labels)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn tensor_labels(labels: &[String]) -> Vec<String> {
    labels.iter().flat_map(|a| labels.iter().map(move |b| format!("{a}⊗{b}"))).collect()
}

struct Setup {
    hopf: HopfAlgebraData,
    comodule: ComoduleAlgebraData,
    what: String,
}

impl Setup {
    fn labels(&self) -> &[String] {
        self.comodule.algebra().labels()
    }

    fn h_labels(&self) -> &[String] {
        self.hopf.labels()
    }
}

fn checked_hopf(h: HopfAlgebraData, mirror: bool) -> Result<HopfAlgebraData, CliError> {
    let h = if mirror { coopposite(&h)? } else { h };
    let r = validate_hopf(&h);
    if r.all_pass() {
        Ok(h)
    } else {
        Err(Error::Axioms(r).into())
    }
}

fn setup(file: &Path, opts: &Options) -> Result<Setup, CliError> {
    let (hopf, comodule, what) = match load_input(file)? {
        Input::Hopf(h) => {
            let h = checked_hopf(h, opts.mirror)?;
            match &opts.cleft {
                Some(b) => {
                    let b = load_algebra(b)?;
                    let c = trivial_cleft(&b, &h)?;
                    (h, c.comodule, "B ⊗ H with coaction id ⊗ Δ".to_string())
                }
                None => {
                    let a = regular(&h);
                    (h, a, "H coacting on itself".to_string())
                }
            }
        }
        Input::Comodule(c) => {
            if opts.cleft.is_some() {
                return Err(CliError::Usage("--cleft takes a Hopf file as input".into()));
            }
            if opts.regular {
                let h = checked_hopf(c.hopf, opts.mirror)?;
                let a = regular(&h);
                (h, a, "H coacting on itself".to_string())
            } else {
                let a = if opts.mirror { c.left()? } else { c.right()? };
                let h = checked_hopf(a.hopf().clone(), false)?;
                let r = validate_comodule_algebra(&a);
                if !r.all_pass() {
                    return Err(Error::Axioms(r).into());
                }
                (h, a, "comodule algebra from file".to_string())
            }
        }
    };
    Ok(Setup { hopf, comodule, what })
}

fn quotient_from(s: &Setup, opts: &Options) -> Result<GeneralisedQuotient, CliError> {
    let ideal = match &opts.ideal {
        Some(p) => load_subspace(p)?,
        None => Subspace::zero(s.hopf.field(), s.hopf.dim()),
    };
    if ideal.ambient() != s.hopf.dim() || ideal.field() != s.hopf.field() {
        return Err(CliError::Usage(format!(
            "ideal lives in {}^{}, H is {}-dimensional over {}",
            ideal.field(),
            ideal.ambient(),
            s.hopf.dim(),
            s.hopf.field()
        )));
    }
    Ok(validate_rico(&s.hopf, &ideal)?)
}

fn subalgebra_from(s: &Setup, opts: &Options, ambient: usize) -> Result<Option<Subspace>, CliError> {
    let Some(p) = &opts.subalgebra else { return Ok(None) };
    let b = load_subspace(p)?;
    if b.ambient() != ambient || b.field() != s.hopf.field() {
        return Err(CliError::Usage(format!("subalgebra must live in {}^{ambient}", s.hopf.field())));
    }
    Ok(Some(b))
}

fn header(s: &Setup) -> String {
    format!(
        "H: dim {} over {}\nA: {}, dim {}\n",
        s.hopf.dim(),
        s.hopf.field(),
        s.what,
        s.comodule.dim()
    )
}

pub fn run(command: Command, file: &Path, opts: &Options) -> Result<Outcome, CliError> {
    match command {
        Command::Validate => validate(file, opts),
        Command::Coinv => coinv(&setup(file, opts)?, opts),
        Command::Quotients => quotients(&setup(file, opts)?, opts),
        Command::Subalgebras => subalgebras(&setup(file, opts)?, opts),
        Command::Closure => closure(&setup(file, opts)?, opts),
        Command::Qgalois => qgalois(&setup(file, opts)?, opts),
        Command::Takeuchi => takeuchi(&setup(file, opts)?, opts),
        Command::Montgomery => montgomery(&setup(file, opts)?, opts),
        Command::Normal => normal(&setup(file, opts)?, opts),
        Command::Cleft => cleft(file, opts),
        Command::Bigalois => bigalois(&setup(file, opts)?, opts),
        Command::Hasse => quotients(&setup(file, opts)?, &Options { dot: true, ..opts.clone() }),
    }
}

fn validate(file: &Path, opts: &Options) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut ok = true;
    let (h, a) = match load_input(file)? {
        Input::Hopf(h) => (h, None),
        Input::Comodule(c) => {
            let a = if opts.mirror { c.left()? } else { c.right()? };
            (a.hopf().clone(), Some(a))
        }
    };
    let h = if opts.mirror && a.is_none() { coopposite(&h)? } else { h };
    let r = validate_hopf(&h);
    ok &= r.all_pass();
    writeln!(text, "H: dim {} over {}\n{r}", h.dim(), h.field()).unwrap();
    if let Some(a) = a {
        let r = validate_comodule_algebra(&a);
        ok &= r.all_pass();
        writeln!(text, "A: dim {}\n{r}", a.dim()).unwrap();
    }
    Ok(Outcome { text, status: if ok { 0 } else { 1 } })
}

fn coinv(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let mut text = header(s);
    let b = match &opts.ideal {
        None => {
            writeln!(text, "A^{{co H}}").unwrap();
            s.comodule.coinvariants().clone()
        }
        Some(_) => {
            let q = quotient_from(s, opts)?;
            writeln!(text, "Q = H/I, I = {}, dim Q {}", fmt_space(q.ideal(), s.h_labels()), q.q_dim()).unwrap();
            writeln!(text, "A^{{co Q}}").unwrap();
            coinvariants_q(&s.comodule, q.ideal())?
        }
    };
    writeln!(text, "dim {}", b.dim()).unwrap();
    for v in b.basis_vectors() {
        writeln!(text, "  {}", fmt_vector(&v, s.labels())).unwrap();
    }
    Ok(Outcome::ok(text))
}

fn node_label(dim: usize, s: &Subspace) -> String {
    format!("dim {dim}\\n{}", short_hash(s))
}

fn quotients(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let p = enumerate_ricos(&s.hopf, opts.cap)?;
    let r = poset_report(&p)?;
    if opts.dot {
        let labels: Vec<String> = p.elements().iter().map(|q| node_label(q.q_dim(), q.ideal())).collect();
        return Ok(Outcome::ok(hasse_dot("quot_gen", &labels, &r)));
    }
    let mut text = format!("H: dim {} over {}\nQuot_gen(H): {} generalised quotients\n", s.hopf.dim(), s.hopf.field(), p.len());
    writeln!(text, "  #  dim Q  hash      ideal").unwrap();
    for (i, q) in p.elements().iter().enumerate() {
        writeln!(text, "  {i:<2} {:<6} {}  {}", q.q_dim(), short_hash(q.ideal()), fmt_space(q.ideal(), s.h_labels())).unwrap();
    }
    let covers: Vec<String> = r.hasse_edges.iter().map(|(a, b)| format!("{a}<{b}")).collect();
    writeln!(text, "covers: {}", covers.join(" ")).unwrap();
    writeln!(text, "lattice: {}", yes(r.is_lattice)).unwrap();
    Ok(Outcome::ok(text))
}

fn subalgebras(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let a = &s.comodule;
    let subs = enumerate_subalgebras_over(a.algebra(), a.coinvariants(), opts.cap)?;
    if opts.dot {
        let labels: Vec<String> = subs.elements().iter().map(|b| node_label(b.dim(), b)).collect();
        return Ok(Outcome::ok(hasse_dot("sub_alg", &labels, &poset_report(&subs)?)));
    }
    let g = GaloisConnectionInstance::new(a, opts.cap)?;
    g.check_galois_property(subs.elements())?;
    let mut text = header(s);
    writeln!(text, "subalgebras between A^{{co H}} and A: {}", subs.len()).unwrap();
    writeln!(text, "  #  dim  ψ(B)  closed  basis").unwrap();
    for (i, b) in subs.elements().iter().enumerate() {
        let j = g.psi_index(b)?;
        let closed = g.phi(j) == b;
        writeln!(text, "  {i:<2} {:<4} {j:<5} {:<7} {}", b.dim(), yes(closed), fmt_space(b, s.labels())).unwrap();
    }
    Ok(Outcome::ok(text))
}

fn closure(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let r = closure_report(&s.comodule, opts.cap)?;
    let mut text = header(s);
    writeln!(text, "  Q  dim Q  dim A^{{co Q}}  Q-Galois  closed  ψφ(Q)").unwrap();
    for (i, q) in r.quotients.iter().enumerate() {
        writeln!(
            text,
            "  {i:<2} {:<6} {:<13} {:<9} {:<7} {}",
            q.q_dim(),
            r.phi[i].dim(),
            yes(r.q_galois[i]),
            yes(r.is_closed(i)),
            r.psi_phi[i]
        )
        .unwrap();
    }
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    writeln!(text, "closed quotients: {}", list(&r.closed_quotients)).unwrap();
    writeln!(text, "Q-Galois quotients: {}", list(&r.q_galois_quotients())).unwrap();
    let dims: Vec<String> = r.closed_subalgebras.iter().map(|b| b.dim().to_string()).collect();
    writeln!(text, "closed subalgebras: {} (dims {})", r.closed_subalgebras.len(), dims.join(" ")).unwrap();
    writeln!(text, "can_H surjective: {}", yes(r.can_h_surjective)).unwrap();
    writeln!(text, "closed set = Q-Galois set: {}", yes(r.closed_equals_q_galois())).unwrap();
    Ok(Outcome::ok(text))
}

fn qgalois(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let q = quotient_from(s, opts)?;
    let c = canonical_map(&s.comodule, &q)?;
    let mut text = header(s);
    writeln!(text, "Q = H/I, I = {}, dim Q {}", fmt_space(q.ideal(), s.h_labels()), q.q_dim()).unwrap();
    writeln!(text, "B = A^{{co Q}}: dim {}", c.base.dim()).unwrap();
    writeln!(text, "dim A⊗_B A = {}, dim A⊗Q = {}, rank {}", c.tensor_dim, c.matrix.rows(), c.rank).unwrap();
    writeln!(text, "Q-Galois: {}", yes(c.bijective)).unwrap();
    Ok(Outcome::ok(text))
}

fn takeuchi(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let h = &s.hopf;
    let a = regular(h);
    let labels = h.labels();
    let mut text = format!("H: dim {} over {}\n", h.dim(), h.field());
    if let Some(k) = subalgebra_from(s, opts, h.dim())? {
        let k = validate_coideal_subalgebra(h, &k)?;
        let q = psi_regular(h, &k)?;
        let back = phi(&a, &q)?;
        writeln!(text, "K = {}", fmt_space(k.space(), labels)).unwrap();
        writeln!(text, "ψ(K) = H/K⁺H, K⁺H = {}, dim Q {}", fmt_space(q.ideal(), labels), q.q_dim()).unwrap();
        writeln!(text, "φψ(K) = {}", fmt_space(&back, labels)).unwrap();
        writeln!(text, "φψ(K) = K: {}", yes(&back == k.space())).unwrap();
        return Ok(Outcome::ok(text));
    }
    let quotients = enumerate_ricos(h, opts.cap)?;
    let subs = enumerate_coideal_subalgebras(h, opts.cap)?;
    writeln!(text, "coideal subalgebras K ↦ H/K⁺H").unwrap();
    writeln!(text, "  #  dim K  dim Q  φψ(K) = K  basis").unwrap();
    for (i, k) in subs.elements().iter().enumerate() {
        let q = psi_regular(h, k)?;
        if psi_enum(&a, k.space(), &quotients)?.ideal() != q.ideal() {
            return Err(Error::Falsified(format!("K⁺H differs from the join formula for K = {}", k.space())).into());
        }
        let back = phi(&a, &q)?;
        writeln!(
            text,
            "  {i:<2} {:<6} {:<6} {:<10} {}",
            k.space().dim(),
            q.q_dim(),
            yes(&back == k.space()),
            fmt_space(k.space(), labels)
        )
        .unwrap();
    }
    writeln!(text, "quotients Q ↦ H^{{co Q}}").unwrap();
    writeln!(text, "  #  dim Q  dim φ(Q)  ψφ(Q) = Q").unwrap();
    for (i, q) in quotients.elements().iter().enumerate() {
        let b = phi(&a, q)?;
        let round = match validate_coideal_subalgebra(h, &b) {
            Ok(k) => psi_regular(h, &k)?.ideal() == q.ideal(),
            Err(_) => false,
        };
        writeln!(text, "  {i:<2} {:<6} {:<9} {}", q.q_dim(), b.dim(), yes(round)).unwrap();
    }
    writeln!(text, "K⁺H agrees with the join formula on all {} coideal subalgebras", subs.len()).unwrap();
    Ok(Outcome::ok(text))
}

fn montgomery(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let r = check_montgomery_conditions(&s.hopf, opts.cap)?;
    let text = format!(
        "H: dim {} over {}\ncond1 (every Q is Q-Galois): {}\ncond2 (φψ(K) ⊆ K for every K): {}\nbijection: {}\n({}, {}, {})\n",
        s.hopf.dim(),
        s.hopf.field(),
        r.cond1,
        r.cond2,
        r.bijection,
        r.cond1,
        r.cond2,
        r.bijection
    );
    Ok(Outcome::ok(text))
}

fn normal(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let r = check_normal_restriction(&s.hopf, opts.cap)?;
    let labels = s.h_labels();
    let mut text = format!("H: dim {} over {}\n", s.hopf.dim(), s.hopf.field());
    writeln!(text, "normal coideal subalgebras: {}", r.normal_subalgebras.len()).unwrap();
    for k in &r.normal_subalgebras {
        writeln!(text, "  {}", fmt_space(k, labels)).unwrap();
    }
    writeln!(text, "normal generalised quotients: {}", r.normal_ideals.len()).unwrap();
    for i in &r.normal_ideals {
        writeln!(text, "  H/{}", fmt_space(i, labels)).unwrap();
    }
    for k in &r.psi_violations {
        writeln!(text, "violation: K⁺H not normal for K = {}", fmt_space(k, labels)).unwrap();
    }
    for i in &r.phi_violations {
        writeln!(text, "violation: coinvariants not normal for I = {}", fmt_space(i, labels)).unwrap();
    }
    writeln!(text, "restricts to normal elements: {}", yes(r.holds())).unwrap();
    Ok(Outcome { text, status: if r.holds() { 0 } else { 1 } })
}

fn cleft(file: &Path, opts: &Options) -> Result<Outcome, CliError> {
    if opts.cleft.is_none() {
        return Err(CliError::Usage("cleft needs --cleft <algebra file> for B".into()));
    }
    let s = setup(file, opts)?;
    let top = validate_rico(&s.hopf, &Subspace::zero(s.hopf.field(), s.hopf.dim()))?;
    let c = canonical_map(&s.comodule, &top)?;
    let r = closure_report(&s.comodule, opts.cap)?;
    let mut text = header(&s);
    writeln!(text, "γ = u_B ⊗ id: convolution invertible comodule map").unwrap();
    writeln!(text, "A^{{co H}}: dim {}", s.comodule.coinvariants().dim()).unwrap();
    writeln!(text, "can_H bijective: {}", yes(c.bijective)).unwrap();
    let q = r.q_galois_quotients();
    writeln!(text, "Q-Galois quotients: {} of {}", q.len(), r.quotients.len()).unwrap();
    writeln!(text, "closed quotients: {} of {}", r.closed_quotients.len(), r.quotients.len()).unwrap();
    let agree = r.closed_equals_q_galois();
    writeln!(text, "closed ⟺ Q-Galois: {}", yes(agree)).unwrap();
    Ok(Outcome { text, status: if agree { 0 } else { 1 } })
}

fn bigalois(s: &Setup, opts: &Options) -> Result<Outcome, CliError> {
    let a = &s.comodule;
    let labels = tensor_labels(s.labels());
    let mut text = header(s);
    let Some(b) = subalgebra_from(s, opts, a.dim())? else {
        let space = bigalois_space(a);
        writeln!(text, "(A⊗A)^{{co H}}: dim {}", space.dim()).unwrap();
        for v in space.basis_vectors() {
            writeln!(text, "  {}", fmt_vector(&v, &labels)).unwrap();
        }
        return Ok(Outcome::ok(text));
    };
    if !a.algebra().is_unital_subalgebra(&b) {
        return Err(CliError::Usage(format!("{} is not a unital subalgebra of A", fmt_space(&b, s.labels()))));
    }
    writeln!(text, "B = {}", fmt_space(&b, s.labels())).unwrap();
    match bigalois_i(a, &b) {
        Ok(i) => {
            let t = tensor_over(a.algebra(), &b)?;
            writeln!(text, "dim A⊗_B A = {}", t.dim()).unwrap();
            writeln!(text, "(A⊗_B A)^{{co H}}: dim {}", i.dim()).unwrap();
            for v in i.image_under(&t.section).basis_vectors() {
                writeln!(text, "  {}", fmt_vector(&v, &labels)).unwrap();
            }
        }
        Err(Error::Precondition(msg)) => {
            writeln!(text, "flagged: {msg}").unwrap();
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Outcome::ok(text))
}
