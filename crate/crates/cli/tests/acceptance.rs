//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Every criterion runs the corresponding verification groups and must also
//! finish inside its runtime budget. Criterion 1 additionally drives the
//! `spectrum` command through the binary.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use pps_cli::verify::{run_group, Check, Settings, TABLE1, TABLE1_N, TABLE1_TOL};

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    run: fn() -> Vec<Check>,
}

fn groups(names: &[&str]) -> Vec<Check> {
    let s = Settings::default();
    names.iter().flat_map(|n| run_group(n, &s).expect("known group")).collect()
}

/// `-E` columns parsed from `pps spectrum pulse --A 100 --B -50 --N <list> --units neg-lambda2`.
fn spectrum_through_binary(n_list: &str) -> Result<Vec<Vec<f64>>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pps"))
        .args(["spectrum", "pulse", "--A", "100", "--B", "-50", "--N", n_list, "--units", "neg-lambda2"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    let width = lines.next().ok_or("no header")?.split(',').count() - 2;
    let mut cols = vec![Vec::new(); width];
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        for (c, f) in fields[1..=width].iter().enumerate() {
            if !f.is_empty() {
                cols[c].push(f.parse::<f64>().map_err(|e| format!("{f}: {e}"))?);
            }
        }
    }
    Ok(cols)
}

fn binary_table(group: &'static str, n_list: &str, columns: &[usize]) -> Vec<Check> {
    match spectrum_through_binary(n_list) {
        Ok(cols) => {
            let mut out = Vec::new();
            for (got, &c) in cols.iter().zip(columns) {
                let n = TABLE1_N[c];
                out.push(Check::holds(group, format!("binary N={n}: {} levels (6)", got.len()), got.len() == 6));
                for (k, (g, w)) in got.iter().zip(TABLE1[c]).enumerate() {
                    out.push(Check::within(group, format!("binary N={n} k={k}"), (g - w).abs() / w, TABLE1_TOL));
                }
            }
            out
        }
        Err(e) => vec![Check::holds(group, format!("binary run failed: {e}"), false)],
    }
}

fn criterion1() -> Vec<Check> {
    let mut out = binary_table("cli", "100", &[4]);
    out.extend(binary_table("cli", "15,20,30,50,100", &[0, 1, 2, 3, 4]));
    out.extend(groups(&["table1", "table1-columns"]));
    out
}

const CRITERIA: [Criterion; 9] = [
    Criterion { id: "1", title: "Table 1 reproduction, all five truncations", budget: Duration::from_secs(10), run: criterion1 },
    Criterion { id: "2", title: "Kratzer PPS round trip", budget: Duration::from_secs(1), run: || groups(&["kratzer"]) },
    Criterion { id: "3", title: "Morse PPS round trip", budget: Duration::from_secs(1), run: || groups(&["morse"]) },
    Criterion { id: "4", title: "pulse PPS round trip and N=400 stability", budget: Duration::from_secs(30), run: || groups(&["pulse"]) },
    Criterion { id: "5", title: "finite-difference oracle concordance", budget: Duration::from_secs(60), run: || groups(&["oracle"]) },
    Criterion { id: "6", title: "wavefunction validity", budget: Duration::from_secs(60), run: || groups(&["wavefunctions"]) },
    Criterion { id: "7", title: "polynomial kernel suite", budget: Duration::from_secs(5), run: || groups(&["orthopoly"]) },
    Criterion { id: "8", title: "eigensolver suite", budget: Duration::from_secs(5), run: || groups(&["spectral"]) },
    Criterion { id: "fig5", title: "figure 5 column at B/A=-0.5 equals Table 1", budget: Duration::from_secs(10), run: || groups(&["figure5"]) },
];

fn main() -> ExitCode {
    let mut all_ok = true;
    let mut report = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let failed: Vec<&Check> = checks.iter().filter(|ch| !ch.pass).collect();
        let in_budget = elapsed <= c.budget;
        let ok = failed.is_empty() && in_budget && !checks.is_empty();
        all_ok &= ok;
        let worst = checks
            .iter()
            .filter(|ch| ch.tolerance > 0.0)
            .map(|ch| ch.measured / ch.tolerance)
            .fold(0.0, f64::max);
        report.push(format!(
            "{} criterion {}: {} ({} checks, {} failed, worst measured/tolerance {:.2e}, {:.2} s of {} s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            checks.len(),
            failed.len(),
            worst,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        ));
        for f in failed {
            report.push(format!("    {f}"));
        }
        if !in_budget {
            report.push(format!("    runtime {:.2} s exceeds {} s", elapsed.as_secs_f64(), c.budget.as_secs()));
        }
        for line in report.drain(..) {
            println!("{line}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
