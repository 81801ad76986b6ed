//! The three reference magnifications and their expected outputs,
//! embedded as exact coefficient vectors, with the comparison logic that
//! turns a run into a per-row match report.

use serde_json::{json, Value};

use rootclusters::magnify::magnify;
use rootclusters::{ratpoly, Config, RatPoly};

use crate::report::{poly_json, size_human};

pub struct GoldenRow {
    /// 1-based row number.
    pub index: usize,
    /// Input polynomial, constant term first.
    pub input: &'static [i64],
    pub input_cluster: usize,
    pub magnifier: &'static [i64],
    pub magnifier_degree: usize,
    /// Expected output coefficients, constant term first.
    pub output: &'static [i64],
    pub size: usize,
}

pub const ROWS: [GoldenRow; 3] = [
    GoldenRow {
        index: 1,
        input: &[-1, 1, 0, -2, 1],
        input_cluster: 2,
        magnifier: &[-1, -3, 0, 1],
        magnifier_degree: 3,
        output: &[19, -72, 63, -33, -114, 144, 117, -120, -51, 51, 0, -6, 1],
        size: 6,
    },
    GoldenRow {
        index: 2,
        input: &[-2, 0, 0, 1],
        input_cluster: 1,
        magnifier: &[-1, -3, 0, 1],
        magnifier_degree: 3,
        output: &[27, 81, -81, -54, 0, 27, -9, -9, 0, 1],
        size: 3,
    },
    GoldenRow {
        index: 3,
        input: &[-3, -3, 0, 0, 0, 1],
        input_cluster: 1,
        magnifier: &[1, 1, 1, 1, 1],
        magnifier_degree: 4,
        output: &[
            781, 602, 54, 143, 3481, 4681, 3074, 1092, 2882, 5255, 5061, 2921, 944, 165, 50, 61,
            58, 35, 15, 5, 1,
        ],
        size: 4,
    },
];

pub struct RowOutcome {
    pub index: usize,
    pub input: RatPoly,
    pub input_cluster: usize,
    pub magnifier: RatPoly,
    pub magnifier_degree: usize,
    pub computed: RatPoly,
    pub computed_size: String,
    pub expected_size: usize,
    pub poly_match: bool,
    pub size_match: bool,
    /// Positions where computed and expected coefficients differ.
    pub diffs: Vec<(usize, String, String)>,
}

impl RowOutcome {
    pub fn matched(&self) -> bool {
        self.poly_match && self.size_match
    }
}

/// Run one reference row and compare against an expected coefficient
/// vector (normally the embedded one; tests may substitute a corrupted
/// vector to exercise the diff path).
pub fn run_row(row: &GoldenRow, expected: &[i64], cfg: &Config) -> Result<RowOutcome, rootclusters::Error> {
    let f = ratpoly(row.input);
    let h = ratpoly(row.magnifier);
    let m = magnify(&f, &h, cfg)?;
    let want = ratpoly(expected);
    let top = m.output.deg().max(want.deg());
    let mut diffs = Vec::new();
    for i in 0..=top {
        let got = m.output.coeff(i);
        let exp = want.coeff(i);
        if got != exp {
            diffs.push((i, exp.to_string(), got.to_string()));
        }
    }
    let size_match = m.size.exact() == Some(row.size);
    Ok(RowOutcome {
        index: row.index,
        input: f,
        input_cluster: m.input_cluster,
        magnifier: h,
        magnifier_degree: m.magnifier_degree,
        computed_size: size_human(&m.size),
        computed: m.output,
        expected_size: row.size,
        poly_match: diffs.is_empty(),
        size_match,
        diffs,
    })
}

pub fn outcome_json(o: &RowOutcome) -> Value {
    let diffs: Vec<Value> = o
        .diffs
        .iter()
        .map(|(i, exp, got)| json!({ "coefficient": i, "expected": exp, "found": got }))
        .collect();
    json!({
        "row": o.index,
        "input": poly_json(&o.input),
        "input_cluster": o.input_cluster,
        "magnifier": poly_json(&o.magnifier),
        "magnifier_degree": o.magnifier_degree,
        "output": poly_json(&o.computed),
        "size": o.computed_size,
        "expected_size": o.expected_size,
        "poly_match": o.poly_match,
        "size_match": o.size_match,
        "diffs": diffs,
    })
}

/// Text layout mirroring the reference table: input, magnifier, output,
/// and the two cluster sizes, one block per row.
pub fn outcome_human(o: &RowOutcome) -> String {
    let mut s = String::new();
    s.push_str(&format!("row {}\n", o.index));
    s.push_str(&format!("  f  = {:<44} r   = {}\n", o.input.to_string(), o.input_cluster));
    s.push_str(&format!("  h  = {:<44} d   = {}\n", o.magnifier.to_string(), o.magnifier_degree));
    s.push_str(&format!("  g  = {}\n", o.computed));
    s.push_str(&format!(
        "  rd = {} (expected {})\n",
        o.computed_size, o.expected_size
    ));
    if o.matched() {
        s.push_str("  golden: match\n");
    } else {
        s.push_str("  golden: MISMATCH\n");
        for (i, exp, got) in &o.diffs {
            s.push_str(&format!(
                "    coefficient of x^{i}: expected {exp}, found {got}\n"
            ));
        }
        if !o.size_match {
            s.push_str(&format!(
                "    cluster size: expected {}, found {}\n",
                o.expected_size, o.computed_size
            ));
        }
    }
    s
}

pub fn summary_json(outcomes: &[RowOutcome]) -> Value {
    let rows: Vec<Value> = outcomes.iter().map(outcome_json).collect();
    let all = outcomes.iter().all(RowOutcome::matched);
    json!({ "rows": rows, "all_match": all })
}

pub fn summary_human(outcomes: &[RowOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        s.push_str(&outcome_human(o));
    }
    let matched = outcomes.iter().filter(|o| o.matched()).count();
    s.push_str(&format!("{}/{} rows match\n", matched, outcomes.len()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_vectors_are_monic_of_composite_degree() {
        for row in &ROWS {
            assert_eq!(*row.output.last().unwrap(), 1);
            assert_eq!(
                row.output.len() - 1,
                (row.input.len() - 1) * (row.magnifier.len() - 1)
            );
            assert_eq!(row.size, row.input_cluster * row.magnifier_degree);
        }
    }

    #[test]
    fn corrupted_expectation_produces_a_diff() {
        let cfg = Config::default();
        let mut wrong: Vec<i64> = ROWS[1].output.to_vec();
        wrong[0] += 1;
        let outcome = run_row(&ROWS[1], &wrong, &cfg).unwrap();
        assert!(!outcome.matched());
        assert_eq!(outcome.diffs.len(), 1);
        assert_eq!(outcome.diffs[0].0, 0);
        assert!(outcome.size_match);
        let text = outcome_human(&outcome);
        assert!(text.contains("MISMATCH"));
        assert!(text.contains("coefficient of x^0"));
    }
}
