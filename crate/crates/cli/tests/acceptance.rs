//! The acceptance suite: one PASS/FAIL line per criterion. Criteria 1-9 run
//! through the library (criterion 9 also against an independent character
//! oracle); criterion 10 runs the built binary and compares stdout exactly.

#[path = "../../core/tests/support/character_oracle.rs"]
mod character_oracle;

use std::process::{Command, ExitCode};

use combrep_core::stable::CharacterTable;
use combrep_core::suite::{CheckResult, Report, Status, SuiteOptions, CRITERIA};
use combrep_core::Partition;

fn combrep(args: &[&str]) -> (String, bool) {
    let out = Command::new(env!("CARGO_BIN_EXE_combrep")).args(args).output().expect("run combrep");
    (String::from_utf8(out.stdout).expect("utf-8 stdout"), out.status.success())
}

fn oracle_cross_check() -> Result<usize, String> {
    let table = CharacterTable::default();
    let mut values = 0;
    for k in 0..=6 {
        for mu in Partition::all_of_size(k) {
            for (lam, chi) in character_oracle::characters_at(&mu) {
                let mn = table.value(&lam, &mu).map_err(|e| e.to_string())?;
                if mn != chi {
                    return Err(format!("χ^{lam}({mu}): Murnaghan-Nakayama {mn}, oracle {chi}"));
                }
                values += 1;
            }
        }
    }
    Ok(values)
}

fn worked_examples_via_binary() -> Result<String, String> {
    let cases: [(&[&str], &str); 3] = [
        (
            &["alcove", "chain", "--shape", "2,1,0,0", "--n", "4"],
            "(2,3) (2,4) (1,3) (1,4) | (1,2) (1,3) (1,4)\n",
        ),
        (
            &["alcove", "admissible", "--shape", "2,1,0,0", "--n", "4", "--w", "1234", "--subword", "(1,3) | (1,4)"],
            "w: 1234\nsubword: (1,3) | (1,4)\nadmissible: yes\nwalk: 1234 3214 4213\nfilling: 3 4 / 2\nmonomial: x2*x3*x4\nweight: t - 2*t^2 + t^3\n",
        ),
        (&["crystal", "apply", "--word", "34321222342", "--i", "2"], "34321223342\n"),
    ];
    for (args, want) in cases {
        let (got, ok) = combrep(args);
        if !ok || got != want {
            return Err(format!("`combrep {}` printed {got:?}, expected {want:?}", args.join(" ")));
        }
    }
    Ok("alcove chain, alcove admissible and crystal apply match byte for byte".into())
}

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let mut checks: Vec<CheckResult> = CRITERIA.iter().filter(|c| c.id != "10").map(|c| c.check(&opts)).collect();

    if let Some(c9) = checks.iter_mut().find(|c| c.id == "9") {
        match oracle_cross_check() {
            Ok(n) if c9.passed() => c9.detail.push_str(&format!("; {n} character values match the oracle")),
            Ok(_) => {}
            Err(e) => {
                c9.status = Status::Fail;
                c9.counterexample = Some(e);
            }
        }
    }

    let (status, detail, counterexample) = match worked_examples_via_binary() {
        Ok(d) => (Status::Pass, d, None),
        Err(e) => (Status::Fail, String::new(), Some(e)),
    };
    checks.push(CheckResult { id: "10".into(), name: "worked-examples".into(), status, detail, counterexample });

    let report = Report::new("acceptance", checks);
    print!("{}", report.to_text());
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
