//! Exhaustive surveys of symmetric functions and the reports built on
//! them.
//!
//! Value vectors are enumerated as integers with `v(0)` in the least
//! significant bit, so survey output is ordered by that integer. AI
//! computations run in parallel but are collected in enumeration order;
//! the output does not depend on the thread count.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfn::{algebraic_immunity, MAX_VARS};
use crate::constructions::{refute_max_ai, theorem3_condition};
use crate::error::{Error, Result};
use crate::symfn::{is_trivial_balanced, majority_family, SymValueVector};

/// Largest `n` for an unfiltered scan.
pub const MAX_FULL_SCAN: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Filter {
    #[default]
    All,
    TrivialBalanced,
    Balanced,
}

impl Filter {
    pub fn accepts(self, v: &SymValueVector) -> bool {
        match self {
            Filter::All => true,
            Filter::TrivialBalanced => is_trivial_balanced(v),
            Filter::Balanced => v.is_balanced(),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Filter::All),
            "trivial-balanced" | "trivial_balanced" => Ok(Filter::TrivialBalanced),
            "balanced" => Ok(Filter::Balanced),
            other => Err(Error::Parse(format!("unknown filter {other:?}"))),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::TrivialBalanced => "trivial-balanced",
            Filter::Balanced => "balanced",
        })
    }
}

fn all_vectors(n: usize) -> impl Iterator<Item = SymValueVector> {
    (0..1u64 << (n + 1)).map(move |w| SymValueVector::from_word(n, w).expect("n < 64"))
}

/// Every value vector on `n` variables, ascending, for `1 ≤ n ≤ 13`.
pub fn enumerate_symmetric(n: usize) -> Result<impl Iterator<Item = SymValueVector>> {
    enumerate_filtered(n, Filter::All)
}

/// Value vectors accepted by `filter`, ascending. Unfiltered scans stop
/// at [`MAX_FULL_SCAN`] variables; filtered ones go up to the truth-table
/// limit.
pub fn enumerate_filtered(
    n: usize,
    filter: Filter,
) -> Result<impl Iterator<Item = SymValueVector>> {
    let cap = match filter {
        Filter::All => MAX_FULL_SCAN,
        _ => MAX_VARS,
    };
    if n == 0 {
        return Err(Error::VariableCount {
            n,
            min: 1,
            max: cap,
        });
    }
    if n > cap {
        return Err(Error::Capacity(format!(
            "a '{filter}' scan is limited to n <= {cap}, got {n}"
        )));
    }
    Ok(all_vectors(n).filter(move |v| filter.accepts(v)))
}

/// Closed form `2^{(n+1)/2}`: each pair `(i, n - i)` is fixed by its
/// lower entry.
pub fn count_trivial_balanced(n: usize) -> Result<u64> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenVariableCount {
            what: "count_trivial_balanced",
            n,
        });
    }
    if n >= 127 {
        return Err(Error::Capacity(format!(
            "2^{} does not fit a u64",
            n.div_ceil(2)
        )));
    }
    Ok(1u64 << n.div_ceil(2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub n: usize,
    pub value_vector: String,
    pub sanf: String,
    pub degree: usize,
    pub weight: u64,
    pub balanced: bool,
    pub trivial_balanced: bool,
    pub ai: usize,
    /// Vacuously true for `n < 2`, where the condition is undefined.
    pub theorem3_ok: bool,
}

impl SurveyRecord {
    pub fn compute(v: &SymValueVector) -> Result<Self> {
        let n = v.num_vars();
        let table = v.expand()?;
        let sanf = v.to_sanf();
        let ai = algebraic_immunity(&table).ai;
        Ok(Self {
            n,
            value_vector: v.to_string(),
            sanf: sanf.to_string(),
            degree: sanf.sym_degree(),
            weight: table.weight() as u64,
            balanced: table.is_balanced(),
            trivial_balanced: is_trivial_balanced(v),
            ai,
            theorem3_ok: n < 2 || theorem3_condition(&sanf)?,
        })
    }

    pub fn has_max_ai(&self) -> bool {
        self.ai == self.n.div_ceil(2)
    }

    /// Per-record consequences of the general AI bound, balancedness of
    /// odd-`n` maximal-AI functions, and the SANF necessary condition.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let bound = self.n.div_ceil(2);
        if self.ai > bound {
            return Err(format!(
                "{}: ai {} exceeds {bound}",
                self.value_vector, self.ai
            ));
        }
        if self.has_max_ai() && self.n % 2 == 1 && !self.balanced {
            return Err(format!("{}: maximal AI but unbalanced", self.value_vector));
        }
        if self.has_max_ai() && self.n >= 2 && !self.theorem3_ok {
            return Err(format!(
                "{}: maximal AI but SANF condition fails",
                self.value_vector
            ));
        }
        Ok(())
    }
}

/// One record per accepted function, in enumeration order.
pub fn survey(n: usize, filter: Filter) -> Result<Vec<SurveyRecord>> {
    let vectors: Vec<SymValueVector> = enumerate_filtered(n, filter)?.collect();
    vectors.par_iter().map(SurveyRecord::compute).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub total: usize,
    pub max_ai_functions: Vec<String>,
    pub trivial_balanced_max_ai: Vec<String>,
    pub theorem2_holds: bool,
    pub lemma2_holds: bool,
    pub theorem3_holds: bool,
    /// Number of trivially balanced functions scanned.
    pub trivial_balanced_total: usize,
    /// Every trivially balanced non-majority function received a
    /// pointwise-checked annihilator of degree below `⌈n/2⌉`, and neither
    /// majority function did.
    pub theorem1_witnesses_hold: bool,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.theorem2_holds && self.lemma2_holds && self.theorem3_holds
    }
}

fn refutation_checks_out(v: &SymValueVector) -> Result<bool> {
    let n = v.num_vars();
    let is_majority = *v == majority_family(n, false)? || *v == majority_family(n, true)?;
    Ok(match refute_max_ai(v)? {
        None => is_majority,
        Some(r) => {
            let f = v.expand()?;
            !is_majority
                && !r.annihilator.is_zero()
                && r.annihilator.degree() < n.div_ceil(2)
                && r.side.apply(&f).is_annihilated_by(&r.annihilator)
        }
    })
}

/// Full scan of odd `n` in `3..=13` checking the maximal-AI claims.
pub fn verify_theorems(n: usize) -> Result<VerificationReport> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenVariableCount {
            what: "verify_theorems",
            n,
        });
    }
    if !(3..=MAX_FULL_SCAN).contains(&n) {
        return Err(Error::VariableCount {
            n,
            min: 3,
            max: MAX_FULL_SCAN,
        });
    }
    let records = survey(n, Filter::All)?;
    let max_ai: Vec<&SurveyRecord> = records.iter().filter(|r| r.has_max_ai()).collect();
    let tb_max: Vec<String> = max_ai
        .iter()
        .filter(|r| r.trivial_balanced)
        .map(|r| r.value_vector.clone())
        .collect();

    let majorities = [
        majority_family(n, false)?.to_string(),
        majority_family(n, true)?.to_string(),
    ];
    let mut expected = majorities.to_vec();
    expected.sort();
    let mut found = tb_max.clone();
    found.sort();

    let trivial: Vec<SymValueVector> = enumerate_filtered(n, Filter::TrivialBalanced)?.collect();
    let witnesses = trivial
        .par_iter()
        .map(refutation_checks_out)
        .collect::<Result<Vec<bool>>>()?;

    Ok(VerificationReport {
        n,
        total: records.len(),
        theorem2_holds: found == expected,
        lemma2_holds: max_ai.iter().all(|r| r.balanced),
        theorem3_holds: max_ai.iter().all(|r| r.theorem3_ok),
        max_ai_functions: max_ai.iter().map(|r| r.value_vector.clone()).collect(),
        trivial_balanced_max_ai: tb_max,
        trivial_balanced_total: trivial.len(),
        theorem1_witnesses_hold: witnesses.into_iter().all(|ok| ok),
    })
}

pub fn write_json<W: Write, T: Serialize + ?Sized>(out: W, value: &T) -> Result<()> {
    let mut out = out;
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Header line, then one line per record in field order.
pub fn write_csv<W: Write>(out: W, records: &[SurveyRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record([
            "n",
            "value_vector",
            "sanf",
            "degree",
            "weight",
            "balanced",
            "trivial_balanced",
            "ai",
            "theorem3_ok",
        ])?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_symmetric(1).unwrap().count(), 4);
        assert_eq!(enumerate_symmetric(3).unwrap().count(), 16);
        assert_eq!(
            enumerate_filtered(3, Filter::TrivialBalanced)
                .unwrap()
                .count(),
            4
        );
        assert_eq!(enumerate_symmetric(5).unwrap().count(), 64);
        assert_eq!(
            enumerate_filtered(5, Filter::TrivialBalanced)
                .unwrap()
                .count(),
            8
        );
    }

    #[test]
    fn enumeration_is_ascending() {
        let words: Vec<u64> = enumerate_symmetric(4)
            .unwrap()
            .map(|v| v.to_word().unwrap())
            .collect();
        assert_eq!(words, (0..32).collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_caps() {
        assert!(matches!(enumerate_symmetric(14), Err(Error::Capacity(_))));
        assert!(enumerate_symmetric(0).is_err());
        assert!(enumerate_filtered(15, Filter::TrivialBalanced).is_ok());
        assert!(enumerate_filtered(21, Filter::Balanced).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_trivial_balanced(1).unwrap(), 2);
        assert_eq!(count_trivial_balanced(3).unwrap(), 4);
        assert_eq!(count_trivial_balanced(13).unwrap(), 128);
        assert!(count_trivial_balanced(4).is_err());
    }

    #[test]
    fn survey_three_variables() {
        let records = survey(3, Filter::All).unwrap();
        assert_eq!(records.len(), 16);
        let max: Vec<&str> = records
            .iter()
            .filter(|r| r.ai == 2)
            .map(|r| r.value_vector.as_str())
            .collect();
        assert_eq!(max, vec!["1100", "0011"]);
    }

    #[test]
    fn survey_five_trivial_balanced() {
        let records = survey(5, Filter::TrivialBalanced).unwrap();
        assert_eq!(records.len(), 8);
        assert_eq!(records.iter().filter(|r| r.ai == 3).count(), 2);
    }

    #[test]
    fn small_n_records() {
        let records = survey(1, Filter::All).unwrap();
        assert_eq!(records.len(), 4);
        assert!(records.iter().all(|r| r.theorem3_ok));
        assert!(records.iter().all(|r| r.check_invariants().is_ok()));
        let r = &records[1];
        assert_eq!((r.value_vector.as_str(), r.ai, r.balanced), ("10", 1, true));
    }

    #[test]
    fn verify_five() {
        let report = verify_theorems(5).unwrap();
        assert_eq!(report.total, 64);
        assert!(report.all_hold());
        assert!(report.theorem1_witnesses_hold);
        assert_eq!(report.trivial_balanced_total, 8);
        assert!(verify_theorems(4).is_err());
        assert!(verify_theorems(1).is_err());
        assert!(verify_theorems(15).is_err());
    }

    #[test]
    fn csv_layout() {
        let records = survey(1, Filter::All).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &records[..2]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "n,value_vector,sanf,degree,weight,balanced,trivial_balanced,ai,theorem3_ok\n\
             1,00,00,0,0,false,false,0,true\n\
             1,10,11,1,1,true,true,1,true\n"
        );
    }

    #[test]
    fn filter_parsing() {
        assert_eq!(
            "trivial-balanced".parse::<Filter>().unwrap(),
            Filter::TrivialBalanced
        );
        assert_eq!("all".parse::<Filter>().unwrap(), Filter::All);
        assert!("some".parse::<Filter>().is_err());
    }
}
