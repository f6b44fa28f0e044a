use std::fmt;

use serde::Serialize;

use super::scan::{equality_theta_set_on, theta_grid, theta_minimize_on};
use super::sweep::SWEEP_RTOL;
use crate::bounds::{
    block_equality_certificate, equality_certificate_weighted, scalar_certificate, spectral_gap_certificate,
    weighted_cross_term, BoundId, BoundParams, Evaluator,
};
use crate::error::Result;
use crate::linop::{block_offdiag, numerical_radius, numerical_radius_2x2_oracle, ComplexMatrix, DEFAULT_RTOL};

/// Tolerance for "equal" claims in the report, relative to `max(1, value)`.
const CLAIM_TOL: f64 = 1e-8;

/// Outcome of comparing a computed quantity with a published claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Agreement {
    Yes,
    No,
    /// Computed for reference; nothing was claimed.
    Na,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Yes => "yes",
            Agreement::No => "no",
            Agreement::Na => "n/a",
        })
    }
}

/// One check on one worked example.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleRow {
    pub example: &'static str,
    pub check: String,
    pub claimed: String,
    pub computed: String,
    pub agree: Agreement,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleReport {
    pub rows: Vec<ExampleRow>,
}

impl ExampleReport {
    pub fn rows_for<'a>(&'a self, example: &'a str) -> impl Iterator<Item = &'a ExampleRow> + 'a {
        self.rows.iter().filter(move |r| r.example == example)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &ExampleRow> {
        self.rows.iter().filter(|r| r.agree == Agreement::No)
    }
}

pub const NILPOTENT_TWO: &str = "nilpotent [[0,2],[0,0]]";
pub const JORDAN_THREE: &str = "jordan [[1,3],[0,1]]";
pub const DIAGONAL: &str = "diagonal diag(2,1)";
pub const JORDAN_TWO: &str = "jordan [[1,2],[0,1]]";
pub const NILPOTENT_ONE: &str = "nilpotent [[0,1],[0,0]]";
pub const BLOCK_JORDAN: &str = "block [[0,A],[A,0]], A=[[1,1],[0,1]]";

fn fmt(x: f64) -> String {
    format!("{x:.12}")
}

fn equal(x: f64, y: f64) -> bool {
    (x - y).abs() <= CLAIM_TOL * x.abs().max(y.abs()).max(1.0)
}

fn verdict(ok: bool) -> Agreement {
    if ok {
        Agreement::Yes
    } else {
        Agreement::No
    }
}

struct Rows {
    example: &'static str,
    rows: Vec<ExampleRow>,
}

impl Rows {
    fn push(&mut self, check: impl Into<String>, claimed: impl Into<String>, computed: String, agree: Agreement) {
        self.rows.push(ExampleRow {
            example: self.example,
            check: check.into(),
            claimed: claimed.into(),
            computed,
            agree,
        });
    }

    /// Radius value, with the elliptical-range oracle alongside for 2×2 input.
    fn radius(&mut self, a: &ComplexMatrix, claimed: Option<f64>) -> Result<f64> {
        let r = numerical_radius(a, DEFAULT_RTOL)?;
        let agree = claimed.map_or(Agreement::Na, |c| verdict(equal(r.value, c)));
        let claim = claimed.map_or_else(|| "-".to_owned(), fmt);
        self.push("w(A)", claim, format!("{} (upper {})", fmt(r.value), fmt(r.upper)), agree);
        if a.n() == 2 {
            let oracle = numerical_radius_2x2_oracle(a)?;
            self.push("w(A) via elliptical range", "-", fmt(oracle), Agreement::Na);
        }
        Ok(r.value)
    }

    /// Every single-operand bound at `r = 1, θ = ½`; each one is claimed to hold.
    fn single_bounds(&mut self, ev: &Evaluator) -> Result<()> {
        for bound in BoundId::ALL.into_iter().filter(|b| !b.needs_second_operand() && !b.is_block()) {
            let e = ev.evaluate(bound, BoundParams::default())?;
            self.push(
                format!("{bound} at r=1, theta=0.5"),
                "lhs <= rhs",
                format!("lhs {} rhs {} margin {:.3e}", fmt(e.lhs), fmt(e.rhs), e.margin),
                verdict(e.satisfied),
            );
        }
        Ok(())
    }

    fn theta_minimum(&mut self, a: &ComplexMatrix) -> Result<()> {
        let ev = Evaluator::new(a.clone(), None, SWEEP_RTOL)?;
        let min = theta_minimize_on(&ev, 1.0, 1e-10)?;
        self.push(
            "weighted_thm21 rhs minimized over theta (r=1)",
            "-",
            format!("theta* {:.10} rhs* {}", min.theta, fmt(min.rhs)),
            Agreement::Na,
        );
        Ok(())
    }
}

fn real(rows: &[&[f64]]) -> ComplexMatrix {
    ComplexMatrix::from_real_rows(rows).expect("literal example matrix")
}

/// Recomputes every worked example and lines the results up against the
/// published statements about them.
pub fn reproduce_examples() -> Result<ExampleReport> {
    let mut all = Vec::new();
    all.extend(nilpotent_two()?);
    all.extend(jordan_three()?);
    all.extend(diagonal()?);
    all.extend(jordan_two()?);
    all.extend(nilpotent_one()?);
    all.extend(block_jordan()?);
    Ok(ExampleReport { rows: all })
}

fn nilpotent_two() -> Result<Vec<ExampleRow>> {
    let a = real(&[&[0.0, 2.0], &[0.0, 0.0]]);
    let mut t = Rows { example: NILPOTENT_TWO, rows: Vec::new() };
    t.radius(&a, Some(1.0))?;
    let ev = Evaluator::new(a.clone(), None, DEFAULT_RTOL)?;
    let norm = ev.a().norm();
    t.push("||A||", "2", fmt(norm), verdict(equal(norm, 2.0)));
    let rhs = ev.rhs(BoundId::WeightedMean, BoundParams::new(1.0, 0.25)?)?;
    t.push("weighted_thm21 rhs at r=1, theta=0.25", "<= 0.5", fmt(rhs), verdict(rhs <= 0.5 + CLAIM_TOL));
    t.single_bounds(&ev)?;
    t.theta_minimum(&a)?;
    Ok(t.rows)
}

fn jordan_three() -> Result<Vec<ExampleRow>> {
    let a = real(&[&[1.0, 3.0], &[0.0, 1.0]]);
    let mut t = Rows { example: JORDAN_THREE, rows: Vec::new() };
    t.radius(&a, None)?;
    let half = numerical_radius(&weighted_cross_term(&a, 1.0, 0.5)?, DEFAULT_RTOL)?.value;
    let full = numerical_radius(&weighted_cross_term(&a, 2.0, 0.5)?, DEFAULT_RTOL)?.value;
    t.push(
        "w(|A|^1/2 |A*|^1/2) < w(|A| |A*|)",
        "strict",
        format!("{} vs {}", fmt(half), fmt(full)),
        verdict(half < full),
    );
    let ev = Evaluator::new(a.clone(), None, DEFAULT_RTOL)?;
    t.single_bounds(&ev)?;
    t.theta_minimum(&a)?;
    Ok(t.rows)
}

fn diagonal() -> Result<Vec<ExampleRow>> {
    let a = ComplexMatrix::from_real_diagonal(&[2.0, 1.0]).expect("literal example matrix");
    let mut t = Rows { example: DIAGONAL, rows: Vec::new() };
    t.radius(&a, None)?;
    let ev = Evaluator::new(a.clone(), None, DEFAULT_RTOL)?;
    let normality = scalar_certificate(&a).normality_residual;
    t.push("A normal (||AA*-A*A||)", "0", fmt(normality), verdict(normality <= CLAIM_TOL));
    for bound in [BoundId::WeightedMean, BoundId::SpectralCross] {
        let e = ev.evaluate(bound, BoundParams::default())?;
        t.push(
            format!("{bound} margin at r=1, theta=0.5"),
            "0 (equality)",
            format!("{:.12} (lhs {} rhs {})", e.margin, fmt(e.lhs), fmt(e.rhs)),
            verdict(e.margin.abs() <= e.tol_margin),
        );
    }
    let cert = equality_certificate_weighted(&a, 1.0, 0.5)?;
    t.push(
        "|A|^(r theta) |A*|^(r(1-theta)) = lambda I at r=1, theta=0.5",
        "scalar, lambda = ||A||^r = 2",
        format!("lambda {} residual {}", fmt(cert.scalar_lambda), fmt(cert.residual)),
        verdict(cert.is_scalar_multiple_of_identity && equal(cert.scalar_lambda, 2.0)),
    );
    t.single_bounds(&ev)?;
    t.theta_minimum(&a)?;
    Ok(t.rows)
}

fn jordan_two() -> Result<Vec<ExampleRow>> {
    let a = real(&[&[1.0, 2.0], &[0.0, 1.0]]);
    let mut t = Rows { example: JORDAN_TWO, rows: Vec::new() };
    t.radius(&a, None)?;
    let a_normality = scalar_certificate(&a).normality_residual;
    t.push("A non-normal (||AA*-A*A||)", "> 0", fmt(a_normality), verdict(a_normality > CLAIM_TOL));
    let prod = scalar_certificate(&weighted_cross_term(&a, 2.0, 0.5)?).normality_residual;
    t.push("|A| |A*| non-normal", "> 0", fmt(prod), verdict(prod > CLAIM_TOL));
    let gap = spectral_gap_certificate(&a, 1.0)?;
    t.push(
        "r(|A|^1/2 |A*|^1/2) < w(|A|^1/2 |A*|^1/2)",
        "strict",
        format!("{} vs {}", fmt(gap.spectral_radius), fmt(gap.numerical_radius)),
        verdict(gap.gap > CLAIM_TOL),
    );
    let full = numerical_radius(&weighted_cross_term(&a, 2.0, 0.5)?, DEFAULT_RTOL)?.value;
    t.push(
        "w(|A|^1/2 |A*|^1/2) < w(|A| |A*|)",
        "strict",
        format!("{} vs {}", fmt(gap.numerical_radius), fmt(full)),
        verdict(gap.numerical_radius < full),
    );
    let ev = Evaluator::new(a.clone(), None, DEFAULT_RTOL)?;
    t.single_bounds(&ev)?;
    t.theta_minimum(&a)?;
    Ok(t.rows)
}

fn nilpotent_one() -> Result<Vec<ExampleRow>> {
    let a = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
    let mut t = Rows { example: NILPOTENT_ONE, rows: Vec::new() };
    t.radius(&a, Some(0.5))?;
    let coarse = Evaluator::new(a.clone(), None, SWEEP_RTOL)?;
    let grid = 17;
    let set = equality_theta_set_on(&coarse, 1.0, grid, 1e-9)?;
    let listed: Vec<String> = set.iter().map(|t| format!("{t}")).collect();
    t.push(
        format!("weighted_thm21 equality set on a {grid}-point theta grid (r=1)"),
        "{0.5}",
        format!("{{{}}}", listed.join(" ")),
        verdict(set == [0.5]),
    );
    let full = numerical_radius(&weighted_cross_term(&a, 2.0, 0.5)?, DEFAULT_RTOL)?.value;
    let mut worst = f64::NEG_INFINITY;
    for theta in theta_grid(grid).into_iter().filter(|&t| t != 0.5) {
        let w = numerical_radius(&weighted_cross_term(&a, 1.0, theta)?, DEFAULT_RTOL)?.value;
        worst = worst.max(w);
    }
    t.push(
        "w(|A|^theta |A*|^(1-theta)) < w(|A| |A*|) for grid theta != 0.5",
        "strict for all",
        format!("max {} vs {}", fmt(worst), fmt(full)),
        verdict(worst < full),
    );
    let ev = Evaluator::new(a.clone(), None, DEFAULT_RTOL)?;
    t.single_bounds(&ev)?;
    t.theta_minimum(&a)?;
    Ok(t.rows)
}

fn block_jordan() -> Result<Vec<ExampleRow>> {
    let a = real(&[&[1.0, 1.0], &[0.0, 1.0]]);
    let mut t = Rows { example: BLOCK_JORDAN, rows: Vec::new() };
    let block = block_offdiag(&a, &a)?;
    let w = numerical_radius(&block, DEFAULT_RTOL)?;
    t.push("w(T)", "-", format!("{} (upper {})", fmt(w.value), fmt(w.upper)), Agreement::Na);
    let normality = scalar_certificate(&block).normality_residual;
    t.push("T non-normal (||TT*-T*T||)", "> 0", fmt(normality), verdict(normality > CLAIM_TOL));
    let cert = block_equality_certificate(&a, &a, 1.0)?;
    t.push(
        "|A|^1/2 |A*|^1/2 = mu I",
        "no such mu",
        format!("mu {} residual {}", fmt(cert.scalar_lambda), fmt(cert.residual)),
        verdict(!cert.is_scalar_multiple_of_identity),
    );
    let ev = Evaluator::new(a.clone(), Some(a.clone()), DEFAULT_RTOL)?;
    for bound in [BoundId::BlockWeighted, BoundId::BlockSymmetric, BoundId::BlockSpectral, BoundId::BlockHalfSum] {
        let e = ev.evaluate(bound, BoundParams::default())?;
        let (claim, agree) = if bound == BoundId::BlockWeighted {
            ("lhs < rhs (strict)", verdict(e.margin > e.tol_margin))
        } else {
            ("lhs <= rhs", verdict(e.satisfied))
        };
        t.push(
            format!("{bound} at r=1 with B=A"),
            claim,
            format!("lhs {} rhs {} margin {:.3e}", fmt(e.lhs), fmt(e.rhs), e.margin),
            agree,
        );
    }
    Ok(t.rows)
}
