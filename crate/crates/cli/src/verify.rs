use anyhow::Result;
use combrep_core::suite::{
    run, Counterexample, Criterion, Outcome, SuiteOptions, CRITERIA, WORKED_CHAIN, WORKED_FILLING, WORKED_MONOMIAL,
    WORKED_SUBWORD, WORKED_WORD, WORKED_WORD_IMAGE,
};

use crate::args::Format;
use crate::commands::Output;

/// The acceptance criteria, with the worked examples checked through this
/// binary's own subcommands instead of the library.
pub fn criteria() -> Vec<Criterion> {
    let mut all: Vec<Criterion> = CRITERIA.iter().filter(|c| c.id != "10").copied().collect();
    all.push(Criterion { id: "10", name: "worked-examples", run: worked_examples_via_cli });
    all
}

pub fn all(format: Format, seed: u64, jobs: usize) -> Result<Output> {
    let report = run("acceptance", &criteria(), &SuiteOptions { seed, jobs });
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => format!("{}\n", report.to_json()),
    };
    Ok(Output { text, ok: report.passed })
}

fn expect(argv: &[&str], want: &str) -> Result<(), Counterexample> {
    let got = crate::run_argv(argv).map_err(|e| Counterexample(format!("`{}` failed: {e:#}", argv.join(" "))))?;
    if got.ok && got.text == want {
        Ok(())
    } else {
        Err(Counterexample(format!("`{}` printed {:?}, expected {want:?}", argv.join(" "), got.text)))
    }
}

fn worked_examples_via_cli(_: &SuiteOptions) -> Outcome {
    expect(&["combrep", "alcove", "chain", "--shape", "2,1,0,0", "--n", "4"], &format!("{WORKED_CHAIN}\n"))?;
    let pair = crate::run_argv([
        "combrep",
        "alcove",
        "admissible",
        "--shape",
        "2,1,0,0",
        "--n",
        "4",
        "--w",
        "1234",
        "--subword",
        WORKED_SUBWORD,
    ])
    .map_err(|e| Counterexample(format!("alcove admissible failed: {e:#}")))?;
    for want in
        ["admissible: yes".to_string(), format!("filling: {WORKED_FILLING}"), format!("monomial: {WORKED_MONOMIAL}")]
    {
        if !pair.text.lines().any(|l| l == want) {
            return Err(Counterexample(format!("alcove admissible output lacks {want:?}: {:?}", pair.text)));
        }
    }
    expect(&["combrep", "crystal", "apply", "--word", WORKED_WORD, "--i", "2"], &format!("{WORKED_WORD_IMAGE}\n"))?;
    Ok("alcove chain, alcove admissible and crystal apply reproduce the worked examples".into())
}
