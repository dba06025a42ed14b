//! Witness lists as JSON lines.

use std::path::Path;

use num_bigint::BigInt;

use paucity_core::symfunc::{IntTuple, Witness};

use crate::error::{usage, CliError};
use crate::json::WitnessLine;

pub fn witness_to_line(w: &Witness) -> WitnessLine {
    WitnessLine {
        k: w.k,
        d: w.d,
        x: w.x.values().to_vec(),
        y: w.y.values().to_vec(),
        h: w.h.to_string(),
    }
}

pub fn line_to_witness(line: &WitnessLine) -> Result<Witness, CliError> {
    let x = IntTuple::new(line.x.clone()).map_err(usage)?;
    let y = IntTuple::new(line.y.clone()).map_err(usage)?;
    let h: BigInt = line
        .h
        .parse()
        .map_err(|_| CliError::Usage(format!("bad h value {:?}", line.h)))?;
    Witness::new(x, y, line.d, h).map_err(usage)
}

pub fn witnesses_to_text(ws: &[Witness]) -> Result<String, CliError> {
    let mut out = String::new();
    for w in ws {
        out.push_str(&serde_json::to_string(&witness_to_line(w))?);
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_witness_text(text: &str) -> Result<Vec<Witness>, CliError> {
    let mut ws = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parsed: WitnessLine = serde_json::from_str(line)
            .map_err(|e| CliError::Usage(format!("line {}: {e}", n + 1)))?;
        ws.push(line_to_witness(&parsed)?);
    }
    Ok(ws)
}

pub fn write_witness_file(path: &Path, ws: &[Witness]) -> Result<(), CliError> {
    std::fs::write(path, witnesses_to_text(ws)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Witness {
        Witness::new(
            IntTuple::new(vec![1, 5, 6]).unwrap(),
            IntTuple::new(vec![2, 3, 7]).unwrap(),
            0,
            BigInt::from(-36),
        )
        .unwrap()
    }

    #[test]
    fn round_trip() {
        let text = witnesses_to_text(&[sample()]).unwrap();
        assert_eq!(
            text,
            "{\"k\":3,\"d\":0,\"x\":[1,5,6],\"y\":[2,3,7],\"h\":\"-36\"}\n"
        );
        let back = parse_witness_text(&text).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].x.values(), &[1, 5, 6]);
        assert_eq!(back[0].h, BigInt::from(-36));
    }

    #[test]
    fn blank_lines_skipped_and_errors_located() {
        let ws = parse_witness_text("\n\n").unwrap();
        assert!(ws.is_empty());
        let err = parse_witness_text("{\"k\":3}").unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
        assert_eq!(err.exit_code(), 2);
    }
}
