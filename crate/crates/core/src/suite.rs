//! The acceptance suite: one named, deterministic check per criterion.
//!
//! Every check is exhaustive over a small range except the label perturbations
//! of the representation-diagram check, which draw from a seeded generator.

use std::fmt;

use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alcove::{
    aggregate_by_filling, enumerate_admissible, filling_of, hl_from_fillings, hl_ram_yip, hl_tableau_formula,
    is_admissible, monomial_of, verify_compression, AdmissiblePair, LambdaChain,
};
use crate::crystal::{f_tilde, verify_commutation, Side};
use crate::poset::{
    check_differential, check_sl2_poset, is_peck, sl2_chain, sl2_character, symmetric_unimodal, tensor_sl2, RankedPoset,
};
use crate::repdiag::{
    check_crossing, check_diamond, gt_lattice, h_eigenvalue_multiset, schur_weight_multiset, solve_edge_labels,
    verify_representation, CartanData, LabelSolution,
};
use crate::rsk::{check_skew_rsk, enumerate_matrices, rsk, rsk_inverse, verify_skew_cauchy};
use crate::stable::{check_schur_expansion, stable_multiplicity, trivial_is_identity, CharacterTable};
use crate::{Error, MultiPoly, Partition, Permutation, PolyT, QMatrix, SkewShape, Word, Q};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Worker threads for independent checks; `0` lets rayon decide.
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: DEFAULT_SEED, jobs: 1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.status, &self.counterexample) {
            (Status::Pass, _) => write!(f, "PASS [{:>2}] {}: {}", self.id, self.name, self.detail),
            (Status::Fail, Some(c)) => write!(f, "FAIL [{:>2}] {}: {}", self.id, self.name, c),
            (Status::Fail, None) => write!(f, "FAIL [{:>2}] {}", self.id, self.name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckResult>) -> Self {
        let passed = checks.iter().all(CheckResult::passed);
        Report { suite: suite.into(), passed, checks }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.checks.iter().map(|c| format!("{c}\n")).collect();
        let n_pass = self.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!("{}: {}/{} checks passed\n", self.suite, n_pass, self.checks.len()));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A failed check's counterexample text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample(pub String);

impl From<Error> for Counterexample {
    fn from(e: Error) -> Self {
        Counterexample(format!("error: {e}"))
    }
}

impl From<String> for Counterexample {
    fn from(s: String) -> Self {
        Counterexample(s)
    }
}

pub type Outcome = std::result::Result<String, Counterexample>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), Counterexample> {
    if ok {
        Ok(())
    } else {
        Err(Counterexample(msg()))
    }
}

#[derive(Clone, Copy)]
pub struct Criterion {
    pub id: &'static str,
    pub name: &'static str,
    pub run: fn(&SuiteOptions) -> Outcome,
}

impl Criterion {
    pub fn check(&self, opts: &SuiteOptions) -> CheckResult {
        let (status, detail, counterexample) = match (self.run)(opts) {
            Ok(d) => (Status::Pass, d, None),
            Err(Counterexample(c)) => (Status::Fail, String::new(), Some(c)),
        };
        CheckResult { id: self.id.into(), name: self.name.into(), status, detail, counterexample }
    }
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion { id: "1", name: "three-formula-agreement", run: three_formula_agreement },
    Criterion { id: "2", name: "schur-specialization", run: schur_specialization },
    Criterion { id: "3", name: "compression-certificates", run: compression_certificates },
    Criterion { id: "4", name: "rsk-round-trip-and-symmetry", run: rsk_round_trip },
    Criterion { id: "5", name: "crystal-commutation", run: crystal_commutation },
    Criterion { id: "6", name: "skew-rsk", run: skew_rsk_bijection },
    Criterion { id: "7", name: "posets", run: posets },
    Criterion { id: "8", name: "representation-diagrams", run: representation_diagrams },
    Criterion { id: "9", name: "stable-multiplicities", run: stable_multiplicities },
    Criterion { id: "10", name: "worked-examples", run: worked_examples },
];

/// Runs `criteria` (in parallel when `opts.jobs != 1`), reporting in the given
/// order regardless of completion order.
pub fn run(suite: &str, criteria: &[Criterion], opts: &SuiteOptions) -> Report {
    use rayon::prelude::*;
    let checks = if opts.jobs == 1 {
        criteria.iter().map(|c| c.check(opts)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().expect("thread pool");
        pool.install(|| criteria.par_iter().map(|c| c.check(opts)).collect())
    };
    Report::new(suite, checks)
}

pub fn run_all(opts: &SuiteOptions) -> Report {
    run("acceptance", &CRITERIA, opts)
}

fn partitions_up_to(max: usize) -> impl Iterator<Item = Partition> {
    (0..=max).flat_map(Partition::all_of_size)
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition literal")
}

pub fn three_formula_agreement(_: &SuiteOptions) -> Outcome {
    let mut cases = 0;
    for lam in partitions_up_to(6).filter(Partition::has_distinct_parts) {
        for n in lam.len().max(1)..=4 {
            let a = hl_ram_yip(&lam, n)?;
            let b = hl_tableau_formula(&lam, n)?;
            let c = hl_from_fillings(&lam, n)?;
            ensure(a == b && a == c, || format!("λ={lam}, n={n}: alcove {a}; tableau {b}; fillings {c}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (λ, n) cases agree exactly"))
}

pub fn schur_specialization(_: &SuiteOptions) -> Outcome {
    let mut cases = 0;
    for lam in partitions_up_to(6) {
        for n in lam.len().max(1)..=4 {
            let hl = hl_ram_yip(&lam, n)?.at_t_zero();
            let s = crate::schur(&SkewShape::straight(lam.clone()), n);
            ensure(hl == s, || format!("λ={lam}, n={n}: P at t=0 is {hl}, s_λ is {s}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (λ, n) cases"))
}

pub fn compression_certificates(_: &SuiteOptions) -> Outcome {
    let shapes = [part(&[1]), part(&[2, 1]), part(&[3, 1]), part(&[3, 2]), part(&[3, 2, 1])];
    let (mut tableaux, mut aggregates) = (0, 0);
    for lam in &shapes {
        let smallest = lam.len() + 1;
        for n in [smallest, smallest + 1] {
            let report = verify_compression(lam, n)?;
            if let Some(bad) = report.failures().next() {
                return Err(format!("λ={lam}, n={n}: {bad:?}").into());
            }
            tableaux += report.entries.len();
            for (sigma, coeff) in aggregate_by_filling(lam, n)? {
                ensure(coeff.as_t_power_one_minus_t().is_some(), || {
                    format!("λ={lam}, n={n}: filling {sigma} aggregates to {coeff}")
                })?;
                aggregates += 1;
            }
        }
    }
    Ok(format!("{tableaux} tableaux compress, {aggregates} aggregates are t^a(1-t)^b"))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn rsk_round_trip(_: &SuiteOptions) -> Outcome {
    let family = enumerate_matrices(3, 3, 4);
    // nine cells plus one slack variable summing to 4
    let expected = binomial(13, 9) as usize;
    ensure(family.len() == expected, || format!("enumerator produced {} matrices, expected {expected}", family.len()))?;
    for a in &family {
        let (p, q) = rsk(a);
        let back = rsk_inverse(&p, &q)?;
        ensure(&back == a, || format!("A={:?}: inverse gave {:?}", a.to_json().entries, back.to_json().entries))?;
        ensure(rsk(&a.transpose()) == (q.clone(), p.clone()), || {
            format!("A={:?}: RSK(Aᵀ) is not (Q, P) = ({q}, {p})", a.to_json().entries)
        })?;
    }
    Ok(format!("{} matrices", family.len()))
}

pub fn crystal_commutation(_: &SuiteOptions) -> Outcome {
    let family = enumerate_matrices(3, 3, 4);
    verify_commutation(&family, &[1, 2], &[Side::Left, Side::Right])?;
    Ok(format!("{} matrices, colors 1 and 2, both sides", family.len()))
}

pub fn skew_rsk_bijection(_: &SuiteOptions) -> Outcome {
    let subs = part(&[2, 1]).subpartitions();
    let mut inputs = 0;
    for alpha in &subs {
        for beta in &subs {
            let check = check_skew_rsk(alpha, beta, 2, 2);
            if let Some(f) = check.failure {
                return Err(format!("α={alpha}, β={beta}: {f}").into());
            }
            inputs += check.domain;
        }
    }
    for (alpha, beta) in [(part(&[]), part(&[])), (part(&[1]), part(&[1])), (part(&[1]), part(&[]))] {
        ensure(verify_skew_cauchy(&alpha, &beta, 2, 2, 3), || {
            format!("Cauchy identity fails for α={alpha}, β={beta}")
        })?;
    }
    Ok(format!("{} shape pairs, {inputs} inputs, 3 Cauchy identities", subs.len() * subs.len()))
}

type Sl2 = (RankedPoset, QMatrix, QMatrix);

fn tensor(a: &Sl2, b: &Sl2) -> Sl2 {
    tensor_sl2((&a.0, &a.1, &a.2), (&b.0, &b.1, &b.2))
}

pub fn posets(_: &SuiteOptions) -> Outcome {
    let young = RankedPoset::young(6);
    let report = check_differential(&young, 1, &[0, 1, 2, 3, 4, 5]);
    ensure(report.passed(), || format!("Young's lattice: {:?}", report.problems))?;

    let chain = |k| sl2_chain(k);
    let b2 = tensor(&chain(1), &chain(1));
    let b3 = tensor(&b2, &chain(1));
    let mut structures: Vec<(String, Sl2)> = (0..=5).map(|k| (format!("chain {k}"), chain(k))).collect();
    structures.push(("B_2".into(), b2.clone()));
    structures.push(("B_3".into(), b3));
    structures.push(("chain 2 x chain 1".into(), tensor(&chain(2), &chain(1))));
    structures.push(("chain 3 x chain 1".into(), tensor(&chain(3), &chain(1))));
    structures.push(("chain 2 x chain 2".into(), tensor(&chain(2), &chain(2))));
    structures.push(("chain 5 x chain 1".into(), tensor(&chain(5), &chain(1))));
    structures.push(("B_2 x chain 2".into(), tensor(&b2, &chain(2))));

    for (name, (p, x, y)) in &structures {
        let r = check_sl2_poset(p, x, y)?;
        ensure(r.passed(), || format!("{name} is not an sl2 structure: {:?}", r.problems))?;
        if p.len() <= 12 {
            ensure(is_peck(p)?, || format!("{name} is not Peck"))?;
            let ch = sl2_character(x, y)?;
            for parity in [0, 1] {
                let seq = ch.parity_sequence(parity);
                ensure(symmetric_unimodal(&seq), || {
                    format!("{name}: character {ch}, parity {parity} not symmetric unimodal")
                })?;
            }
        }
    }
    Ok(format!("Young's lattice ranks 0-5 differential, {} sl2 structures Peck", structures.len()))
}

const PERTURBATIONS: [(i64, i64); 6] = [(-2, 1), (-1, 1), (-1, 2), (1, 2), (1, 1), (3, 1)];

pub fn representation_diagrams(opts: &SuiteOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let cartan = CartanData::type_a(2);
    let mut perturbed = 0;
    for lam in [part(&[1]), part(&[1, 1]), part(&[2, 1])] {
        let (gt, _) = gt_lattice(&lam, 3)?;
        let LabelSolution::Solved(labels) = solve_edge_labels(&gt, &cartan)? else {
            return Err(format!("λ={lam}: no edge labels found").into());
        };
        let solved = gt.with_labels(labels.clone())?;
        let broken: Vec<String> =
            verify_representation(&solved, &cartan)?.into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
        ensure(broken.is_empty(), || format!("λ={lam}: relations fail: {}", broken.join(", ")))?;
        let h = h_eigenvalue_multiset(&solved, 2)?;
        let w = schur_weight_multiset(&lam, 3);
        ensure(h == w, || format!("λ={lam}: H eigenvalues {h:?} vs weights {w:?}"))?;

        for k in 0..labels.len() {
            let &(num, den) = PERTURBATIONS.choose(&mut rng).expect("nonempty");
            let delta = Q::new(num.into(), den.into());
            let mut bumped = labels.clone();
            let which = if rng.random::<bool>() { "c" } else { "d" };
            if which == "c" {
                bumped[k].0 += &delta;
            } else {
                bumped[k].1 += &delta;
            }
            let d = gt.with_labels(bumped)?;
            let local = check_crossing(&d, 2)?.passed() && check_diamond(&d, 2)?.passed();
            let global = verify_representation(&d, &cartan)?.iter().all(|(_, ok)| *ok);
            ensure(!local && !global, || {
                format!(
                    "λ={lam}: shifting {which} of edge {k} by {delta} leaves local={local}, representation={global}"
                )
            })?;
            perturbed += 1;
        }
    }
    Ok(format!("3 GT lattices solved and verified, {perturbed} perturbations rejected"))
}

pub fn stable_multiplicities(_: &SuiteOptions) -> Outcome {
    let table = CharacterTable::default();
    let g = stable_multiplicity(&part(&[1]), &part(&[1]), 10, &table)?;
    let want = |k: usize| if k == 0 { Q::zero() } else { Q::one() };
    ensure((0..=10).all(|k| g.coeff(k) == &want(k)), || format!("G_(1),(1) = {g}"))?;
    for (a, b) in [(part(&[1]), part(&[2])), (part(&[2, 1]), part(&[2])), (part(&[3]), part(&[2, 1, 1]))] {
        let g = stable_multiplicity(&a, &b, 10, &table)?;
        ensure(g.is_zero(), || format!("degree mismatch α={a}, β={b} gives {g}"))?;
    }
    let mut shapes = 0;
    for k in 0..=6 {
        ensure(trivial_is_identity(k, &table)?, || format!("s_({k}) is not the identity in degree {k}"))?;
        for lam in Partition::all_of_size(k) {
            ensure(check_schur_expansion(&lam, &table)?, || {
                format!("character expansion of s_{lam} disagrees with tableaux")
            })?;
            shapes += 1;
        }
    }
    Ok(format!("G_(1),(1) = {g}; identity and expansions verified on {shapes} shapes"))
}

/// The worked examples, rendered through the library's canonical text forms.
pub struct WorkedExamples {
    pub chain: String,
    pub admissible: bool,
    pub filling: String,
    pub monomial: String,
    pub crystal: Option<String>,
}

pub const WORKED_CHAIN: &str = "(2,3) (2,4) (1,3) (1,4) | (1,2) (1,3) (1,4)";
pub const WORKED_SUBWORD: &str = "(1,3) | (1,4)";
pub const WORKED_FILLING: &str = "3 4 / 2";
pub const WORKED_MONOMIAL: &str = "x2*x3*x4";
pub const WORKED_WORD: &str = "34321222342";
pub const WORKED_WORD_IMAGE: &str = "34321223342";

pub fn worked_example_outputs() -> crate::Result<WorkedExamples> {
    let lam = part(&[2, 1]);
    let chain = LambdaChain::new(&lam, 4)?;
    let positions = chain.parse_subword(WORKED_SUBWORD)?;
    let pair = AdmissiblePair { w: Permutation::identity(4), positions };
    let admissible = is_admissible(&chain, &lam, &pair) && enumerate_admissible(&lam, 4)?.1.iter().any(|q| q == &pair);
    let sigma = filling_of(&chain, &lam, &pair);
    let monomial = MultiPoly::monomial(monomial_of(sigma.rows(), 4), PolyT::one()).to_string();
    let word: Word = WORKED_WORD.parse()?;
    Ok(WorkedExamples {
        chain: chain.to_string(),
        admissible,
        filling: sigma.to_string(),
        monomial,
        crystal: f_tilde(&word, 2).map(|w| w.to_string()),
    })
}

pub fn worked_examples(_: &SuiteOptions) -> Outcome {
    let ex = worked_example_outputs()?;
    ensure(ex.chain == WORKED_CHAIN, || format!("chain printed as {:?}", ex.chain))?;
    ensure(ex.admissible, || format!("pair (1234, {WORKED_SUBWORD}) rejected"))?;
    ensure(ex.filling == WORKED_FILLING, || format!("filling printed as {:?}", ex.filling))?;
    ensure(ex.monomial == WORKED_MONOMIAL, || format!("monomial printed as {:?}", ex.monomial))?;
    ensure(ex.crystal.as_deref() == Some(WORKED_WORD_IMAGE), || format!("f_2({WORKED_WORD}) = {:?}", ex.crystal))?;
    Ok("chain, admissible pair, filling, monomial and crystal operator reproduced".into())
}
