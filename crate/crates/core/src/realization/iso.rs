use rayon::prelude::*;
use serde::Serialize;

use super::{phi, t_circ, FunctionRepr};
use crate::basis::BasisSymbol;
use crate::derivation::{d0, MultiplierDerivation};
use crate::element::Element;
use crate::novikov::circ;
use crate::random::{random_element, trial_rng, Domain};

pub const DEFAULT_SAMPLES: [f64; 6] = [-1.3, -0.7, -0.1, 0.1, 0.7, 1.3];

/// Which transported identity a failure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoCheck {
    /// `phi(uv) = phi(u)·phi(v)`
    Product,
    /// `phi(D0 u) = d/dx phi(u)`
    Derivative,
    /// `phi(u∘v) = phi(u)·phi(a)·d/dx phi(v)`
    Novikov,
    /// `phi(a·D0(s)) = phi(a)·d/dx phi(s)` on basis vectors
    Conjugation,
    /// floating-point product check at a sample point
    Numeric,
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoFailure {
    pub check: IsoCheck,
    pub u: Element,
    pub v: Element,
    pub param: Option<Element>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericWitness {
    pub u: Element,
    pub v: Element,
    pub x: f64,
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct IsoConfig {
    /// Exhaustive structural checks over basis pairs up to this index.
    pub basis_max_index: Option<u64>,
    /// Parameters used for the Novikov check on basis pairs.
    pub basis_params: Vec<Element>,
    pub structural_trials: usize,
    pub numeric_trials: usize,
    /// Index bound for random elements.
    pub max_index: u64,
    pub samples: Vec<f64>,
    pub tol: f64,
    pub seed: u64,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig {
            basis_max_index: Some(10),
            basis_params: vec![Element::one()],
            structural_trials: 500,
            numeric_trials: 200,
            max_index: 8,
            samples: DEFAULT_SAMPLES.to_vec(),
            tol: 1e-9,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub structural_cases: usize,
    pub numeric_cases: usize,
    pub samples: Vec<f64>,
    /// Largest `|phi(uv)(x) - phi(u)(x)·phi(v)(x)| / (1 + |phi(u)(x)·phi(v)(x)|)`.
    pub max_numeric_residual: f64,
    pub worst: Option<NumericWitness>,
    pub failures: Vec<IsoFailure>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn structural_failures(u: &Element, v: &Element, a: &Element) -> Vec<IsoFailure> {
    let (fu, fv, fa) = (phi(u), phi(v), phi(a));
    let mut out = Vec::new();
    let mut check = |check: IsoCheck, lhs: FunctionRepr, rhs: FunctionRepr| {
        if lhs != rhs {
            out.push(IsoFailure {
                check,
                u: u.clone(),
                v: v.clone(),
                param: Some(a.clone()),
                detail: format!("residual {}", lhs.sub(&rhs)),
            });
        }
    };
    check(IsoCheck::Product, phi(&u.product(v)), fu.t_mul(&fv));
    check(IsoCheck::Derivative, phi(&d0(u)), fu.t_derivative());
    check(IsoCheck::Novikov, phi(&circ(u, v, a)), t_circ(&fu, &fv, &fa));
    out
}

/// Transport of `a·D0` through `phi`, compared on basis vectors up to
/// `max_index`.
fn conjugation_failures(a: &Element, max_index: u64) -> Vec<IsoFailure> {
    let d = MultiplierDerivation::new(a.clone());
    let fa = phi(a);
    BasisSymbol::up_to(max_index)
        .into_iter()
        .filter_map(|s| {
            let s = Element::basis(s);
            let lhs = phi(&d.apply(&s));
            let rhs = fa.t_mul(&phi(&s).t_derivative());
            (lhs != rhs).then(|| IsoFailure {
                check: IsoCheck::Conjugation,
                u: s.clone(),
                v: Element::zero(),
                param: Some(a.clone()),
                detail: format!("residual {}", lhs.sub(&rhs)),
            })
        })
        .collect()
}

struct NumericOutcome {
    worst: Option<NumericWitness>,
    failures: Vec<IsoFailure>,
}

fn numeric_check(u: &Element, v: &Element, samples: &[f64], tol: f64) -> NumericOutcome {
    let (fuv, fu, fv) = (phi(&u.product(v)), phi(u), phi(v));
    let mut worst: Option<NumericWitness> = None;
    let mut failures = Vec::new();
    for &x in samples {
        let values = (fuv.eval(x), fu.eval(x), fv.eval(x));
        let (lhs, pu, pv) = match values {
            (Ok(l), Ok(p), Ok(q)) => (l, p, q),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                failures.push(IsoFailure {
                    check: IsoCheck::Numeric,
                    u: u.clone(),
                    v: v.clone(),
                    param: None,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        let rhs = pu * pv;
        let residual = (lhs - rhs).abs() / (1.0 + rhs.abs());
        if residual > tol || !residual.is_finite() {
            failures.push(IsoFailure {
                check: IsoCheck::Numeric,
                u: u.clone(),
                v: v.clone(),
                param: None,
                detail: format!("x = {x}: {lhs} vs {rhs}, relative residual {residual:e}"),
            });
        }
        if worst.as_ref().is_none_or(|w| residual > w.residual) {
            worst = Some(NumericWitness { u: u.clone(), v: v.clone(), x, residual });
        }
    }
    NumericOutcome { worst, failures }
}

/// Checks that `phi` carries the product, `D0`, the Novikov product and the
/// derivations `a·D0` over to the function side exactly, and that the
/// product agrees with pointwise multiplication of the evaluated functions
/// within `tol` (relative, `|lhs - rhs| <= tol·(1 + |rhs|)`).
pub fn check_isomorphism(config: &IsoConfig) -> IsoReport {
    let mut failures = Vec::new();
    let mut structural_cases = 0;

    if let Some(k) = config.basis_max_index {
        let basis: Vec<Element> = BasisSymbol::up_to(k).into_iter().map(Element::basis).collect();
        for a in &config.basis_params {
            let per_pair: Vec<Vec<IsoFailure>> =
                basis.par_iter().flat_map_iter(|u| basis.iter().map(move |v| structural_failures(u, v, a))).collect();
            structural_cases += per_pair.len();
            failures.extend(per_pair.into_iter().flatten());
            failures.extend(conjugation_failures(a, k));
        }
    }

    let random: Vec<Vec<IsoFailure>> = (0..config.structural_trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, Domain::Isomorphism, t);
            let u = random_element(&mut rng, config.max_index);
            let v = random_element(&mut rng, config.max_index);
            let a = random_element(&mut rng, config.max_index);
            let mut f = structural_failures(&u, &v, &a);
            f.extend(conjugation_failures(&a, config.max_index));
            f
        })
        .collect();
    structural_cases += random.len();
    failures.extend(random.into_iter().flatten());

    let numeric: Vec<NumericOutcome> = (0..config.numeric_trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, Domain::IsomorphismNumeric, t);
            let u = random_element(&mut rng, config.max_index);
            let v = random_element(&mut rng, config.max_index);
            numeric_check(&u, &v, &config.samples, config.tol)
        })
        .collect();
    let numeric_cases = numeric.len() * config.samples.len();
    let mut worst: Option<NumericWitness> = None;
    for outcome in numeric {
        failures.extend(outcome.failures);
        if let Some(w) = outcome.worst {
            if worst.as_ref().is_none_or(|cur| w.residual > cur.residual) {
                worst = Some(w);
            }
        }
    }

    IsoReport {
        structural_cases,
        numeric_cases,
        samples: config.samples.clone(),
        max_numeric_residual: worst.as_ref().map_or(0.0, |w| w.residual),
        worst,
        failures,
    }
}
