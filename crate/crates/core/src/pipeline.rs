//! The chain from a square-zero element of a classical matrix algebra to a
//! 5-grading: `x → L_x → ē → e' → (e', h, f) → grading`.

use serde::Serialize;

use crate::constructions::{build_matrix_lie, square_zero_element, Series};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::grading::{complete_sl2, grading_from_h, lift_regular, regularity_witness, u_witness};
use crate::jordan::{build_L_x, find_idempotent, is_jordan_element, IdempotentSearch};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub series: String,
    pub n: usize,
    pub p: u64,
    pub seed: u64,
    pub dim: usize,
    pub x: Vec<String>,
    pub jordan_dim: usize,
    pub e_bar: Vec<String>,
    pub a_bar: Vec<String>,
    pub e_prime: Vec<String>,
    pub h: Vec<String>,
    pub f: Vec<String>,
    /// `(degree, dim)` for degrees `-2..=2`.
    pub part_dims: Vec<(i64, usize)>,
    pub grading_law: bool,
}

/// A failure tagged with the stage that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageError {
    pub stage: &'static str,
    pub error: Error,
}

impl std::fmt::Display for StageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "stage {}: {}", self.stage, self.error)
    }
}

impl std::error::Error for StageError {}

fn at<T>(stage: &'static str, r: Result<T>) -> std::result::Result<T, StageError> {
    r.map_err(|error| StageError { stage, error })
}

pub const STAGES: [&str; 8] = ["build", "jordan", "quotient", "idempotent", "lift", "regular", "sl2", "grading"];

pub fn run_pipeline(series: Series, n: usize, p: u64, seed: u64) -> std::result::Result<PipelineReport, StageError> {
    let field = at("build", FieldSpec::new(p))?;
    let m = at("build", build_matrix_lie(series, n, field))?;
    let l = m.presentation();
    let x = at("build", square_zero_element(&m))?;
    let (is_j, _) = at("jordan", is_jordan_element(l, &x))?;
    if !is_j {
        return Err(StageError { stage: "jordan", error: Error::NotJordanElement });
    }
    let q = at("quotient", build_L_x(l, &x))?;
    let e_bar = match at("idempotent", find_idempotent(q.algebra(), seed))? {
        IdempotentSearch::Idempotent { element, .. } => element,
        IdempotentSearch::Nil(_) => return Err(StageError { stage: "idempotent", error: Error::InvariantViolation("L_x is nilpotent".into()) }),
    };
    let a_bar = at("lift", u_witness(l, &q, &e_bar))?;
    let lift = at("lift", lift_regular(l, &q, &e_bar, &a_bar))?;
    at("regular", regularity_witness(l, &lift.e_prime))?;
    let triple = at("sl2", complete_sl2(l, &lift.e_prime, seed))?;
    let grading = at("grading", grading_from_h(l, &triple.h))?;
    let grading_law = at("grading", grading.satisfies_grading_law(l))?;
    let part_dims = (-2..=2).zip(grading.dims_in(-2, 2)).collect();
    Ok(PipelineReport {
        series: series.to_string(),
        n,
        p,
        seed,
        dim: l.dim(),
        x: x.to_strings(),
        jordan_dim: q.dim(),
        e_bar: e_bar.to_strings(),
        a_bar: a_bar.to_strings(),
        e_prime: lift.e_prime.to_strings(),
        h: triple.h.to_strings(),
        f: triple.f.to_strings(),
        part_dims,
        grading_law,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(r: &PipelineReport) -> Vec<usize> {
        r.part_dims.iter().map(|(_, d)| *d).collect()
    }

    #[test]
    fn sl3_pipeline() {
        let r = run_pipeline(Series::Sl, 3, 11, 0).unwrap();
        assert_eq!(dims(&r), vec![1, 2, 2, 2, 1]);
        assert!(r.grading_law);
    }

    #[test]
    fn sp4_and_o5_pipelines() {
        for (s, n) in [(Series::Sp, 4), (Series::O, 5)] {
            let r = run_pipeline(s, n, 11, 0).unwrap();
            assert!(r.grading_law);
            assert_eq!(dims(&r).iter().sum::<usize>(), r.dim);
        }
    }

    #[test]
    fn char_two_fails_at_build() {
        let e = run_pipeline(Series::Sl, 2, 2, 0).unwrap_err();
        assert_eq!(e.stage, "build");
        assert_eq!(e.error, Error::BadChar(2));
    }

    #[test]
    fn deterministic() {
        assert_eq!(run_pipeline(Series::Sp, 4, 11, 3).unwrap(), run_pipeline(Series::Sp, 4, 11, 3).unwrap());
    }
}
