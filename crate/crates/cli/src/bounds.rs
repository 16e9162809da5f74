//! The `bounds` command: exact evaluation of the degree inequalities.

use eigenone::e1::{example4_g2_bound, prop5_bounds, Prop5Case};
use num_bigint::BigInt;
use num_traits::Pow;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::FORMAT;

#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub family: String,
    pub parameters: Value,
    pub inequality: String,
    pub passes: bool,
    pub details: Value,
}

/// `3`, `1..5` or `1,2,4`.
pub fn parse_range(s: &str) -> CliResult<Vec<u32>> {
    let bad = || CliError::Usage(format!("bad range {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let (a, b): (u32, u32) = (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        );
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect()
}

/// An integer or `base^exponent`.
pub fn parse_power(s: &str) -> CliResult<BigInt> {
    let bad = || CliError::Usage(format!("bad integer {s:?}"));
    match s.split_once('^') {
        Some((b, e)) => {
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            let e: u32 = e.trim().parse().map_err(|_| bad())?;
            Ok(Pow::pow(b, e))
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

pub fn g2_rows(fs: &[u32]) -> CliResult<Vec<BoundRow>> {
    fs.iter()
        .map(|&f| {
            let b = example4_g2_bound(f)?;
            Ok(BoundRow {
                family: "g2".into(),
                parameters: json!({ "f": f, "q": b.q }),
                inequality: format!("{} > {}", b.lhs, b.rhs),
                passes: b.passes,
                details: serde_json::to_value(&b)?,
            })
        })
        .collect()
}

pub fn prop5_rows(case: Prop5Case, d: u32, fs: &[u32], chi1: &BigInt) -> CliResult<Vec<BoundRow>> {
    fs.iter()
        .map(|&f| {
            let b = prop5_bounds(case, d, f, chi1)?;
            let family = match case {
                Prop5Case::A => "prop5a",
                Prop5Case::B => "prop5b",
            };
            let chi2 = chi1 * chi1;
            Ok(BoundRow {
                family: family.into(),
                parameters: json!({ "d": d, "f": f, "q": b.q, "chi1": chi1.to_string() }),
                inequality: format!("{chi2} > {}", b.stated_rhs_squared),
                passes: b.stated_passes,
                details: serde_json::to_value(&b)?,
            })
        })
        .collect()
}

pub fn bounds_report(rows: &[BoundRow]) -> Value {
    json!({
        "format": FORMAT,
        "rows": rows,
        "all_pass": rows.iter().all(|r| r.passes),
    })
}

pub fn render_bounds(rows: &[BoundRow]) -> String {
    rows.iter()
        .map(|r| {
            let mark = if r.passes { "passes" } else { "FAILS" };
            let ineq = if r.inequality.len() > 120 {
                format!("{}...", &r.inequality[..117])
            } else {
                r.inequality.clone()
            };
            format!("{} {}: {ineq} {mark}\n", r.family, r.parameters)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..5").unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(parse_range("2,4").unwrap(), vec![2, 4]);
        assert!(parse_range("5..1").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(parse_power("8^10").unwrap(), BigInt::from(1u64 << 30));
        assert_eq!(parse_power("12").unwrap(), BigInt::from(12));
        assert!(parse_power("2^x").is_err());
    }

    #[test]
    fn g2_first_row() {
        let rows = g2_rows(&[1]).unwrap();
        assert_eq!(rows[0].inequality, "531441 > 2187");
        assert_eq!(rows[0].details["group_order"], "4245696");
        assert!(g2_rows(&(1..=5).collect::<Vec<_>>())
            .unwrap()
            .iter()
            .all(|r| r.passes));
    }

    #[test]
    fn prop5a_needs_large_q() {
        let chi = parse_power("8^10").unwrap();
        assert!(prop5_rows(Prop5Case::A, 5, &[3], &chi).unwrap()[0].passes);
        assert!(prop5_rows(Prop5Case::A, 5, &[2], &chi).is_err());
    }
}
