use std::fmt::Write as _;

use anyhow::{bail, Result};
use combrep_core::alcove::{
    aggregate_by_filling, enumerate_admissible, filling_of, hl_from_fillings, hl_ram_yip, hl_tableau_formula,
    is_admissible, monomial_of, ram_yip_weight, verify_compression, AdmissiblePair, LambdaChain,
};
use combrep_core::crystal::{
    e_tilde, e_tilde_tableau, f_tilde, f_tilde_biword_left, f_tilde_biword_right, f_tilde_tableau, verify_commutation,
    Side,
};
use combrep_core::poset::{check_differential, check_sl2_poset, peck_report, sl2_character, RankReport};
use combrep_core::repdiag::{
    check_crossing, check_diamond, check_structure, compute_weights, gt_lattice, solve_edge_labels,
    verify_representation, ConditionReport, LabelSolution,
};
use combrep_core::rsk::{
    enumerate_matrices, rsk, rsk_inverse, skew_cauchy_sides, skew_rsk, skew_rsk_inverse, Biword, MatrixJson,
    SupportMatrix,
};
use combrep_core::stable::{stable_multiplicity, CharacterTable};
use combrep_core::{schur, MultiPoly, Permutation, PolyT, SkewShape, Tableau, Word};

use crate::args::*;
use crate::input;
use crate::verify;

/// Text for stdout and whether the command's check (if any) passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output { text: text.into(), ok: true }
    }

    fn verdict(text: impl Into<String>, ok: bool) -> Self {
        Output { text: text.into(), ok }
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

pub fn execute(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Poly(c) => poly(c),
        Command::Rsk(c) => rsk_cmd(c),
        Command::Crystal(c) => crystal(c),
        Command::Alcove(c) => alcove(c),
        Command::Poset(c) => poset(c),
        Command::Repdiag(c) => repdiag(c),
        Command::Mult(MultCmd::Stable { alpha, beta, degree }) => {
            let table = CharacterTable::default();
            let g = stable_multiplicity(&input::partition(&alpha)?, &input::partition(&beta)?, degree, &table)?;
            Ok(Output::ok(line(g)))
        }
        Command::Verify(VerifyCmd::All { format, seed, jobs }) => verify::all(format, seed, jobs),
    }
}

fn poly(cmd: PolyCmd) -> Result<Output> {
    let p = match cmd {
        PolyCmd::Schur(s) => {
            let (lam, n) = input::shape(&s)?;
            schur(&SkewShape::straight(lam), n)
        }
        PolyCmd::Hl { shape, method } => {
            let (lam, n) = input::shape(&shape)?;
            match method {
                HlMethod::RamYip => hl_ram_yip(&lam, n)?,
                HlMethod::Tableau => hl_tableau_formula(&lam, n)?,
                HlMethod::Aggregate => hl_from_fillings(&lam, n)?,
            }
        }
    };
    Ok(Output::ok(line(p)))
}

fn matrix_line(a: &SupportMatrix) -> Result<String> {
    Ok(serde_json::to_string(&a.to_json())?)
}

fn family_check(family: &FamilyArgs) -> Result<Output> {
    let matrices = enumerate_matrices(family.rows, family.cols, family.max_sum);
    for a in &matrices {
        let (p, q) = rsk(a);
        let back = rsk_inverse(&p, &q)?;
        if &back != a {
            return Ok(Output::verdict(format!("round trip fails for {}\n", matrix_line(a)?), false));
        }
        if rsk(&a.transpose()) != (q.clone(), p.clone()) {
            return Ok(Output::verdict(format!("RSK(A^T) != (Q, P) for {}\n", matrix_line(a)?), false));
        }
    }
    Ok(Output::ok(format!("{} matrices: round trip and transpose symmetry hold\n", matrices.len())))
}

fn rsk_cmd(cmd: RskCmd) -> Result<Output> {
    match cmd {
        RskCmd::Run { matrix, biword, t, u } => {
            let biword = match (matrix, biword) {
                (Some(m), _) => SupportMatrix::from_json(&input::read_json::<MatrixJson>(&m)?)?.to_biword(),
                (_, Some(b)) => b.parse::<Biword>()?,
                _ => bail!("pass --matrix or --biword"),
            };
            let (p, q) = if t.is_some() || u.is_some() {
                let t: Tableau = t.as_deref().unwrap_or("").parse()?;
                let u: Tableau = u.as_deref().unwrap_or("").parse()?;
                skew_rsk(&biword, &t, &u)?
            } else {
                rsk(&biword.to_matrix())
            };
            Ok(Output::ok(format!("P: {p}\nQ: {q}\n")))
        }
        RskCmd::Invert { p, q } => {
            let (p, q): (Tableau, Tableau) = (p.parse()?, q.parse()?);
            if p.shape().is_straight() && q.shape().is_straight() {
                let a = rsk_inverse(&p, &q)?;
                Ok(Output::ok(format!("biword: {}\nmatrix: {}\n", a.to_biword(), matrix_line(&a)?)))
            } else {
                let (w, t, u) = skew_rsk_inverse(&p, &q)?;
                Ok(Output::ok(format!("biword: {w}\nT: {t}\nU: {u}\n")))
            }
        }
        RskCmd::VerifyTranspose(family) => family_check(&family),
        RskCmd::VerifyCauchy { alpha, beta, nx, ny, degree } => {
            let (alpha, beta) = (input::partition(&alpha)?, input::partition(&beta)?);
            let (lhs, rhs) = skew_cauchy_sides(&alpha, &beta, nx, ny, degree);
            let ok = lhs == rhs;
            let verdict = if ok { "holds" } else { "fails" };
            Ok(Output::verdict(format!("lhs: {lhs}\nrhs: {rhs}\nidentity {verdict} up to degree {degree}\n"), ok))
        }
    }
}

fn crystal(cmd: CrystalCmd) -> Result<Output> {
    match cmd {
        CrystalCmd::Apply { word, tableau, biword, side, i, op } => {
            let shown = match (word, tableau, biword) {
                (Some(w), _, _) => {
                    let w: Word = w.parse()?;
                    let r = if op == CrystalOp::F { f_tilde(&w, i) } else { e_tilde(&w, i) };
                    r.map(|w| w.to_string())
                }
                (_, Some(t), _) => {
                    let t: Tableau = t.parse()?;
                    let r = if op == CrystalOp::F { f_tilde_tableau(&t, i)? } else { e_tilde_tableau(&t, i)? };
                    r.map(|t| t.to_string())
                }
                (_, _, Some(b)) => {
                    if op == CrystalOp::E {
                        bail!("only f is implemented on biwords");
                    }
                    let b: Biword = b.parse()?;
                    let r = match side {
                        SideArg::Right => f_tilde_biword_right(&b, i),
                        SideArg::Left => f_tilde_biword_left(&b, i),
                    };
                    r.map(|b| b.to_string())
                }
                _ => bail!("pass --word, --tableau or --biword"),
            };
            Ok(Output::ok(line(shown.unwrap_or_else(|| "0".into()))))
        }
        CrystalCmd::VerifyRsk { family, colors } => {
            let matrices = enumerate_matrices(family.rows, family.cols, family.max_sum);
            let colors_text: Vec<String> = colors.iter().map(u32::to_string).collect();
            match verify_commutation(&matrices, &colors, &[Side::Left, Side::Right]) {
                Ok(()) => Ok(Output::ok(format!(
                    "{} matrices: RSK commutes with f for colors {} on both sides\n",
                    matrices.len(),
                    colors_text.join(",")
                ))),
                Err(e) => Ok(Output::verdict(format!("counterexample: {e}\n"), false)),
            }
        }
    }
}

fn alcove(cmd: AlcoveCmd) -> Result<Output> {
    match cmd {
        AlcoveCmd::Chain(s) => {
            let (lam, n) = input::shape(&s)?;
            Ok(Output::ok(line(LambdaChain::new(&lam, n)?)))
        }
        AlcoveCmd::Admissible { shape, w, subword } => {
            let (lam, n) = input::shape(&shape)?;
            match subword {
                Some(sub) => {
                    let chain = LambdaChain::new(&lam, n)?;
                    let w: Permutation = match w {
                        Some(w) => w.parse()?,
                        None => Permutation::identity(n),
                    };
                    let pair = AdmissiblePair { w, positions: chain.parse_subword(&sub)? };
                    let ok = is_admissible(&chain, &lam, &pair);
                    let mut out = format!("w: {}\nsubword: {}\n", pair.w, pair.subword_string(&chain));
                    if ok {
                        let walk: Vec<String> = pair.walk(&chain).iter().map(ToString::to_string).collect();
                        let sigma = filling_of(&chain, &lam, &pair);
                        writeln!(out, "admissible: yes")?;
                        writeln!(out, "walk: {}", walk.join(" "))?;
                        writeln!(out, "filling: {sigma}")?;
                        writeln!(out, "monomial: {}", monomial(sigma.rows(), n))?;
                        writeln!(out, "weight: {}", ram_yip_weight(&chain, &pair))?;
                    } else {
                        writeln!(out, "admissible: no")?;
                    }
                    Ok(Output::verdict(out, ok))
                }
                None => {
                    let (chain, pairs) = enumerate_admissible(&lam, n)?;
                    let mut out = String::new();
                    for pair in &pairs {
                        let sigma = filling_of(&chain, &lam, pair);
                        writeln!(
                            out,
                            "w={} subword=[{}] filling=[{}] monomial={} weight={}",
                            pair.w,
                            pair.subword_string(&chain),
                            sigma,
                            monomial(sigma.rows(), n),
                            ram_yip_weight(&chain, pair)
                        )?;
                    }
                    writeln!(out, "{} admissible pairs", pairs.len())?;
                    Ok(Output::ok(out))
                }
            }
        }
        AlcoveCmd::Compress { shape, aggregates } => {
            let (lam, n) = input::shape(&shape)?;
            let report = verify_compression(&lam, n)?;
            let mut out = String::new();
            for e in &report.entries {
                let mark = if e.passed() { "ok" } else { "MISMATCH" };
                writeln!(out, "{}: aggregate {}, expected {} {mark}", e.tableau, e.aggregate, e.expected)?;
            }
            let mut ok = report.passed();
            if aggregates {
                for (sigma, coeff) in aggregate_by_filling(&lam, n)? {
                    let form = match coeff.as_t_power_one_minus_t() {
                        Some((a, b)) => format!("t^{a}(1-t)^{b}"),
                        None => {
                            ok = false;
                            "not of the form t^a(1-t)^b".into()
                        }
                    };
                    writeln!(out, "filling {sigma}: {coeff} = {form}")?;
                }
            }
            let bad = report.failures().count();
            match bad {
                0 => writeln!(out, "compression holds for {} tableaux", report.entries.len())?,
                _ => writeln!(out, "compression fails for {bad} of {} tableaux", report.entries.len())?,
            }
            Ok(Output::verdict(out, ok))
        }
    }
}

fn monomial(rows: &[Vec<u32>], n: usize) -> MultiPoly {
    MultiPoly::monomial(monomial_of(rows, n), PolyT::one())
}

fn rank_report(r: &RankReport) -> (String, bool) {
    let mut out = String::new();
    for &(k, ok) in &r.ranks {
        out.push_str(&format!("rank {k}: {}\n", if ok { "ok" } else { "FAIL" }));
    }
    for p in &r.problems {
        out.push_str(&format!("problem: {p}\n"));
    }
    (out, r.passed())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn poset(cmd: PosetCmd) -> Result<Output> {
    match cmd {
        PosetCmd::CheckDifferential { source, r, ranks } => {
            let (p, _) = input::poset(&source)?;
            let ranks = match ranks {
                Some(s) => input::ranks(&s)?,
                None => (0..p.max_rank()).collect(),
            };
            if let Some(&k) = ranks.iter().find(|&&k| k >= p.max_rank()) {
                bail!("rank {k} needs rank {} to be present; the poset stops at {}", k + 1, p.max_rank());
            }
            let (mut out, ok) = rank_report(&check_differential(&p, r, &ranks));
            writeln!(out, "{}-differential: {}", r, yes_no(ok))?;
            Ok(Output::verdict(out, ok))
        }
        PosetCmd::CheckSl2 { source, ops } => {
            let (p, x, y) = input::sl2_structure(&source, &ops)?;
            let (mut out, ok) = rank_report(&check_sl2_poset(&p, &x, &y)?);
            writeln!(out, "sl2 structure: {}", yes_no(ok))?;
            Ok(Output::verdict(out, ok))
        }
        PosetCmd::CheckPeck { source } => {
            let (p, _) = input::poset(&source)?;
            let r = peck_report(&p)?;
            let out = format!(
                "rank sizes: {}\nmax k-families: {}\nsymmetric unimodal: {}\nstrongly Sperner: {}\nPeck: {}\n",
                joined(&r.rank_sizes),
                joined(&r.max_k_family),
                yes_no(r.symmetric_unimodal),
                yes_no(r.strongly_sperner),
                yes_no(r.is_peck())
            );
            Ok(Output::verdict(out, r.is_peck()))
        }
        PosetCmd::Character { source, ops } => {
            let (_, x, y) = input::sl2_structure(&source, &ops)?;
            Ok(Output::ok(line(sl2_character(&x, &y)?)))
        }
    }
}

fn condition(name: &str, r: &ConditionReport, out: &mut String) -> bool {
    if r.passed() {
        out.push_str(&format!("{name}: ok ({} checks)\n", r.checked));
    } else {
        out.push_str(&format!("{name}: FAIL ({} of {} checks)\n", r.failures.len(), r.checked));
        for f in &r.failures {
            out.push_str(&format!("  {f}\n"));
        }
    }
    r.passed()
}

fn tuple(v: &[i64]) -> String {
    format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

fn repdiag(cmd: RepdiagCmd) -> Result<Output> {
    match cmd {
        RepdiagCmd::Weights(args) => {
            let (d, cartan) = input::diagram(&args)?;
            let w = compute_weights(&d, cartan.rank())?;
            let mut out = String::new();
            for (x, label) in d.poset.labels().iter().enumerate() {
                writeln!(out, "{label}: m={} l={} rho={}", tuple(&w.m[x]), tuple(&w.l[x]), tuple(&w.rho[x]))?;
            }
            Ok(Output::ok(out))
        }
        RepdiagCmd::Check(args) => {
            let (d, cartan) = input::diagram(&args)?;
            let mut out = String::new();
            let mut ok = condition("structure", &check_structure(&d, &cartan)?, &mut out);
            if d.labels.is_some() {
                ok &= condition("crossing", &check_crossing(&d, cartan.rank())?, &mut out);
                ok &= condition("diamond", &check_diamond(&d, cartan.rank())?, &mut out);
            } else {
                out.push_str("crossing: skipped (no labels)\ndiamond: skipped (no labels)\n");
            }
            Ok(Output::verdict(out, ok))
        }
        RepdiagCmd::Solve(args) => {
            let (d, cartan) = input::diagram(&args)?;
            match solve_edge_labels(&d, &cartan)? {
                LabelSolution::Solved(labels) => {
                    let solved = d.with_labels(labels)?;
                    Ok(Output::ok(line(serde_json::to_string(&solved.to_json())?)))
                }
                LabelSolution::Infeasible => Ok(Output::verdict("infeasible\n", false)),
            }
        }
        RepdiagCmd::Verify(args) => {
            let (mut d, cartan) = input::diagram(&args)?;
            let mut out = String::new();
            if d.labels.is_none() {
                match solve_edge_labels(&d, &cartan)? {
                    LabelSolution::Solved(labels) => d = d.with_labels(labels)?,
                    LabelSolution::Infeasible => return Ok(Output::verdict("labels: infeasible\n", false)),
                }
                out.push_str("labels: solved\n");
            }
            let mut ok = true;
            for (name, holds) in verify_representation(&d, &cartan)? {
                ok &= holds;
                writeln!(out, "{name}: {}", if holds { "ok" } else { "FAIL" })?;
            }
            writeln!(out, "representation: {}", yes_no(ok))?;
            Ok(Output::verdict(out, ok))
        }
        RepdiagCmd::Gt(s) => {
            let (lam, n) = input::shape(&s)?;
            let (d, _) = gt_lattice(&lam, n)?;
            Ok(Output::ok(line(serde_json::to_string(&d.to_json())?)))
        }
    }
}
