//! One function per subcommand. Each prints a single JSON object to stdout
//! (the experiment command may route CSV there instead) and signals
//! failures through [`CliError`], so exit codes stay 0/1/2.

use std::path::{Path, PathBuf};
use std::time::Instant;

use paucity_core::budget::Budget;
use paucity_core::cascade::{
    cascade_extract, matrix_from_witness, reconstruct_verify, CascadeError, IndexVector,
    ProductMatrix,
};
use paucity_core::counting::{count_naive, nondiagonal_witnesses, SystemSpec};
use paucity_core::exponents::{exponent_report, gamma, gamma_refined, BoundCheck};
use paucity_core::nrcount::{nr_bound_exponent, nr_count, NrInstance};
use paucity_core::symfunc::verify_witness;

use crate::error::{check, usage, CliError};
use crate::experiment::{csv_string, fit_log_slope, parse_xlist, ExperimentRow};
use crate::json::{
    rational_string, value_to_bigint, AlphaEntryJson, BoundJson, BoundsJson, CountJson,
    DecomposeJson, ExperimentJson, ExponentsJson, FitValue, MatrixFile, NrJson,
    ReconstructionJson, TableJson, VerifyJson,
};
use crate::parallel::threaded_count;
use crate::witness_io;

pub fn cmd_count(
    k: usize,
    d: usize,
    x_max: u64,
    naive: bool,
    threads: usize,
    verbose: bool,
) -> Result<(), CliError> {
    let budget = Budget::default();
    let spec = SystemSpec::incomplete(k, d).map_err(usage)?;
    if verbose {
        eprintln!("counting {spec} over X={x_max} with {threads} thread(s)");
    }
    let start = Instant::now();
    let report = threaded_count(&spec, x_max, threads, &budget).map_err(usage)?;
    let elapsed_ms = start.elapsed().as_millis();

    let mut oracle_match = None;
    if naive {
        let oracle = count_naive(&spec, x_max, &budget).map_err(usage)?;
        if oracle.solutions != report.solutions || oracle.diagonal != report.diagonal {
            return Err(check(format!(
                "oracle mismatch at k={k} d={d} X={x_max}: naive I={} T={}, histogram I={} T={}",
                oracle.solutions, oracle.diagonal, report.solutions, report.diagonal
            )));
        }
        oracle_match = Some(true);
    }

    let dto = CountJson {
        k,
        d,
        x_max,
        solutions: report.solutions.to_string(),
        diagonal: report.diagonal.to_string(),
        diff: report.nondiagonal.to_string(),
        elapsed_ms,
        oracle_match,
    };
    println!("{}", serde_json::to_string(&dto)?);
    Ok(())
}

pub fn cmd_verify(
    k: usize,
    d: usize,
    x_max: u64,
    limit: Option<usize>,
    out: Option<PathBuf>,
    verbose: bool,
) -> Result<(), CliError> {
    let budget = Budget::default();
    let ws =
        nondiagonal_witnesses(k, d, x_max, limit.unwrap_or(usize::MAX), &budget).map_err(usage)?;
    if let Some(path) = &out {
        witness_io::write_witness_file(path, &ws)?;
    }

    let mut passed = 0usize;
    let mut cap_within = 0usize;
    let mut first_failure: Option<String> = None;
    for (i, w) in ws.iter().enumerate() {
        // the enumerator only emits genuine nondiagonal solutions, so a
        // precondition error here is itself a failed check
        let outcome = verify_witness(w).map_err(check)?;
        if verbose {
            eprintln!(
                "witness {i}: x={:?} y={:?} h={} pass={} cap_within={}",
                w.x.values(),
                w.y.values(),
                w.h,
                outcome.all_required_pass(),
                outcome.cap.within
            );
        }
        if outcome.all_required_pass() {
            passed += 1;
        } else if first_failure.is_none() {
            let names: Vec<&str> = outcome.failed().map(|c| c.relation.name()).collect();
            first_failure = Some(format!(
                "witness {i} (x={:?}, y={:?}) failed: {}",
                w.x.values(),
                w.y.values(),
                names.join(",")
            ));
        }
        if outcome.cap.within {
            cap_within += 1;
        }
    }

    let failed = ws.len() - passed;
    let dto = VerifyJson {
        k,
        d,
        x_max,
        witnesses: ws.len(),
        passed,
        failed,
        cap_within,
        first_failure: first_failure.clone(),
    };
    println!("{}", serde_json::to_string(&dto)?);
    if failed > 0 {
        return Err(CliError::Check(
            first_failure.unwrap_or_else(|| "relation failure".into()),
        ));
    }
    Ok(())
}

fn bound_json(b: BoundCheck) -> BoundJson {
    BoundJson { hypothesis: b.hypothesis, conclusion: b.conclusion, holds: b.holds() }
}

pub fn cmd_exponents(k: u64, d: u64, refined: bool) -> Result<(), CliError> {
    let rep = exponent_report(k, d).map_err(usage)?;
    let dto = ExponentsJson {
        k,
        d,
        gamma: rational_string(&rep.gamma.value),
        argmin_r: rep.gamma.argmin_r,
        theta_by_r: rep.theta_by_r.clone(),
        bounds: BoundsJson {
            small_shift_sqrt: bound_json(rep.bounds.small_shift_sqrt),
            below_k_minus_half: bound_json(rep.bounds.below_k_minus_half),
            refined_below_k_minus_half: bound_json(rep.bounds.refined_below_k_minus_half),
            moderate_shift_sqrt: bound_json(rep.bounds.moderate_shift_sqrt),
        },
        gamma_refined: refined.then(|| rational_string(&rep.gamma_refined.value)),
        argmin_r_refined: refined.then_some(rep.gamma_refined.argmin_r),
        omega_by_r: refined.then(|| {
            rep.omega_by_r.iter().map(|(r, w)| (*r, rational_string(w))).collect()
        }),
    };
    println!("{}", serde_json::to_string(&dto)?);
    Ok(())
}

pub fn cmd_experiment(
    k: usize,
    d: usize,
    xlist: &str,
    threads: usize,
    out: Option<PathBuf>,
    verbose: bool,
) -> Result<(), CliError> {
    let xs = parse_xlist(xlist)?;
    let spec = SystemSpec::incomplete(k, d).map_err(usage)?;
    let budget = Budget::default();

    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        let start = Instant::now();
        let rep = threaded_count(&spec, x, threads, &budget).map_err(usage)?;
        let elapsed_ms = start.elapsed().as_millis();
        if verbose {
            eprintln!(
                "X={x}: I={} T={} diff={} ({elapsed_ms} ms)",
                rep.solutions, rep.diagonal, rep.nondiagonal
            );
        }
        rows.push(ExperimentRow {
            x,
            solutions: rep.solutions,
            diagonal: rep.diagonal,
            diff: rep.nondiagonal,
            elapsed_ms,
        });
    }

    let fit = fit_log_slope(&rows);
    let dto = ExperimentJson {
        k,
        d,
        rows: rows.len(),
        points_used: fit.points_used,
        excluded_zero_diff: fit.excluded_zero_diff,
        slope: FitValue::from_option(fit.slope),
        intercept: FitValue::from_option(fit.intercept),
        gamma: gamma(k as u64, d as u64).ok().map(|g| rational_string(&g.value)),
        gamma_refined: gamma_refined(k as u64, d as u64)
            .ok()
            .map(|g| rational_string(&g.value)),
        csv: out.as_ref().map(|p| p.display().to_string()),
    };
    let csv = csv_string(&rows);
    let fit_line = serde_json::to_string(&dto)?;
    match &out {
        Some(path) => {
            std::fs::write(path, csv)?;
            println!("{fit_line}");
        }
        None => {
            print!("{csv}");
            eprintln!("{fit_line}");
        }
    }
    Ok(())
}

fn decompose_one(
    m: &ProductMatrix,
    source: &'static str,
    failures: &mut Vec<String>,
) -> Result<DecomposeJson, CliError> {
    let table = match cascade_extract(m) {
        Ok(t) => t,
        // a non-exact division is a falsified decomposition claim on this
        // input, not a usage problem
        Err(e @ CascadeError::InexactDivision { .. }) => return Err(check(e)),
        Err(e) => return Err(usage(e)),
    };
    let report = reconstruct_verify(&table, m).map_err(usage)?;
    if !report.matched {
        failures.push(format!(
            "{source}: reconstruction mismatch at cell {:?}",
            report.first_mismatch
        ));
    }
    if !report.pigeonhole_ok {
        failures.push(format!("{source}: pigeonhole inequality failed"));
    }
    let k = table.k();
    let r = table.r();
    let alpha = table
        .alpha()
        .iter()
        .enumerate()
        .map(|(rank, v)| AlphaEntryJson {
            i: IndexVector::from_rank(rank as u128, k, r)
                .expect("table ranks are in range")
                .coords()
                .to_vec(),
            v: v.to_string(),
        })
        .collect();
    Ok(DecomposeJson {
        source,
        table: TableJson { k, r, alpha, signs: table.signs().to_vec() },
        report: ReconstructionJson {
            matched: report.matched,
            first_mismatch: report.first_mismatch,
            unique_min_products: report
                .unique_min_products
                .iter()
                .map(|v| v.to_string())
                .collect(),
            min_product: report.min_product.to_string(),
            pigeonhole_ok: report.pigeonhole_ok,
            head_row_max_abs: report.head_row_max_abs.to_string(),
        },
    })
}

pub fn cmd_decompose(
    file: &Path,
    r: usize,
    out: Option<PathBuf>,
    verbose: bool,
) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)?;
    let mut failures: Vec<String> = Vec::new();
    let mut objects: Vec<DecomposeJson> = Vec::new();

    if let Ok(mf) = serde_json::from_str::<MatrixFile>(&text) {
        let mut entries = Vec::with_capacity(mf.u.len());
        for (row_i, row) in mf.u.iter().enumerate() {
            let mut parsed = Vec::with_capacity(row.len());
            for (col_i, v) in row.iter().enumerate() {
                parsed.push(value_to_bigint(v).ok_or_else(|| {
                    CliError::Usage(format!("matrix entry ({row_i},{col_i}) is not an integer"))
                })?);
            }
            entries.push(parsed);
        }
        let m = ProductMatrix::new(entries, mf.x_bound).map_err(usage)?;
        if verbose {
            eprintln!("matrix input: k={} r={} x_bound={}", m.k(), m.r(), m.x_bound());
        }
        objects.push(decompose_one(&m, "matrix", &mut failures)?);
    } else {
        let ws = witness_io::parse_witness_text(&text)?;
        if ws.is_empty() {
            return Err(CliError::Usage(
                "input holds neither a matrix object nor witness lines".into(),
            ));
        }
        if verbose {
            eprintln!("witness input: {} line(s), building matrices with r={r}", ws.len());
        }
        for w in &ws {
            let m = matrix_from_witness(w, r).map_err(usage)?;
            objects.push(decompose_one(&m, "witness", &mut failures)?);
        }
    }

    let mut payload = String::new();
    for o in &objects {
        payload.push_str(&serde_json::to_string(o)?);
        payload.push('\n');
    }
    match &out {
        Some(path) => std::fs::write(path, &payload)?,
        None => print!("{payload}"),
    }
    if !failures.is_empty() {
        return Err(CliError::Check(failures.join("; ")));
    }
    Ok(())
}

pub fn cmd_nr(k: usize, d: usize, r: usize, x_max: u64) -> Result<(), CliError> {
    let y: Vec<u64> = (1..=r as u64).collect();
    let inst = NrInstance::new(k, d, y.clone(), x_max).map_err(usage)?;
    let count = nr_count(&inst, &Budget::default()).map_err(usage)?;
    let dto = NrJson {
        k,
        d,
        r,
        y_fixed: y,
        x_max,
        count,
        bound_exponent: nr_bound_exponent(d as u64, r as u64),
    };
    println!("{}", serde_json::to_string(&dto)?);
    Ok(())
}
