//! Range sweeps, the fixed CSV schema, and the log-log slope fit.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct ExperimentRow {
    pub x: u64,
    pub solutions: BigInt,
    pub diagonal: BigInt,
    pub diff: BigInt,
    pub elapsed_ms: u128,
}

/// Parses the --xlist argument: comma-separated, strictly increasing, at
/// least two entries.
pub fn parse_xlist(raw: &str) -> Result<Vec<u64>, CliError> {
    let mut xs = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        let v: u64 = part
            .parse()
            .map_err(|_| CliError::Usage(format!("bad X value {part:?} in --xlist")))?;
        if v == 0 {
            return Err(CliError::Usage("X values must be positive".into()));
        }
        if let Some(&last) = xs.last() {
            if v <= last {
                return Err(CliError::Usage(format!(
                    "--xlist must be strictly increasing; {v} follows {last}"
                )));
            }
        }
        xs.push(v);
    }
    if xs.len() < 2 {
        return Err(CliError::Usage("--xlist needs at least two X values".into()));
    }
    Ok(xs)
}

/// Fixed schema: header `X,I,T,diff,elapsed_ms`, exact decimal values.
pub fn csv_string(rows: &[ExperimentRow]) -> String {
    let mut out = String::from("X,I,T,diff,elapsed_ms\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.x, r.solutions, r.diagonal, r.diff, r.elapsed_ms
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlopeFit {
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    pub points_used: usize,
    pub excluded_zero_diff: usize,
}

/// Least-squares fit of log(diff) against log(X) over the rows with
/// diff > 0; rows with diff = 0 are excluded and counted. The fit is
/// undefined with fewer than two usable points.
pub fn fit_log_slope(rows: &[ExperimentRow]) -> SlopeFit {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.diff.is_positive())
        .map(|r| {
            let x = (r.x as f64).ln();
            let y = r.diff.to_f64().expect("positive bigint converts").ln();
            (x, y)
        })
        .collect();
    let excluded = rows.iter().filter(|r| r.diff.is_zero()).count();
    if points.len() < 2 {
        return SlopeFit {
            slope: None,
            intercept: None,
            points_used: points.len(),
            excluded_zero_diff: excluded,
        };
    }
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    SlopeFit {
        slope: Some(slope),
        intercept: Some(intercept),
        points_used: points.len(),
        excluded_zero_diff: excluded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(x: u64, diff: i64) -> ExperimentRow {
        ExperimentRow {
            x,
            solutions: BigInt::from(diff + 100),
            diagonal: BigInt::from(100),
            diff: BigInt::from(diff),
            elapsed_ms: 1,
        }
    }

    #[test]
    fn xlist_parsing() {
        assert_eq!(parse_xlist("8,12,16,20,24").unwrap(), vec![8, 12, 16, 20, 24]);
        assert_eq!(parse_xlist(" 2 , 4 ").unwrap(), vec![2, 4]);
        assert!(parse_xlist("8").is_err());
        assert!(parse_xlist("8,8").is_err());
        assert!(parse_xlist("8,4").is_err());
        assert!(parse_xlist("0,4").is_err());
        assert!(parse_xlist("a,b").is_err());
        assert_eq!(parse_xlist("8").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn csv_schema() {
        let text = csv_string(&[row(2, 0), row(4, 16)]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "X,I,T,diff,elapsed_ms");
        assert_eq!(lines[1], "2,100,100,0,1");
        assert_eq!(lines[2], "4,116,100,16,1");
    }

    #[test]
    fn exact_power_law_recovers_exponent() {
        // diff = X^3 exactly: slope must come out at 3 up to float error
        let rows: Vec<ExperimentRow> = [2u64, 4, 8, 16]
            .iter()
            .map(|&x| row(x, (x * x * x) as i64))
            .collect();
        let fit = fit_log_slope(&rows);
        assert_eq!(fit.points_used, 4);
        assert_eq!(fit.excluded_zero_diff, 0);
        let slope = fit.slope.unwrap();
        assert!((slope - 3.0).abs() < 1e-9, "slope {slope}");
    }

    #[test]
    fn zero_rows_are_excluded() {
        let fit = fit_log_slope(&[row(2, 0), row(4, 16)]);
        assert_eq!(fit.points_used, 1);
        assert_eq!(fit.excluded_zero_diff, 1);
        assert_eq!(fit.slope, None);
        assert_eq!(fit.intercept, None);

        let fit = fit_log_slope(&[row(2, 0), row(4, 64), row(8, 512)]);
        assert_eq!(fit.points_used, 2);
        assert_eq!(fit.excluded_zero_diff, 1);
        assert!((fit.slope.unwrap() - 3.0).abs() < 1e-9);
    }
}
