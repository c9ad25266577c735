//! Identity sweeps: exhaustive over low basis vectors plus seeded random
//! elements. Every case is evaluated independently and results are collected
//! in case order, so reports are identical for any thread count.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use crate::basis::BasisSymbol;
use crate::derivation::MultiplierDerivation;
use crate::element::{associator, Element};
use crate::novikov::{
    circ, closed_bracket, closed_circ, factored_bracket, hamilton_residuals, jacobi_residual, left_symmetry_residual,
    lie_bracket, right_commutativity_residual,
};
use crate::random::{random_element, trial_rng, Domain};
use crate::rational;
use crate::realization::{check_isomorphism, IsoConfig, DEFAULT_SAMPLES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Assoc,
    LeftSym,
    RightComm,
    Jacobi,
    Leibniz,
    Hamilton,
    ClosedForms,
    Iso,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Assoc,
        Identity::Leibniz,
        Identity::LeftSym,
        Identity::RightComm,
        Identity::Hamilton,
        Identity::Jacobi,
        Identity::ClosedForms,
        Identity::Iso,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Assoc => "assoc",
            Identity::LeftSym => "leftsym",
            Identity::RightComm => "rightcomm",
            Identity::Jacobi => "jacobi",
            Identity::Leibniz => "leibniz",
            Identity::Hamilton => "hamilton",
            Identity::ClosedForms => "closedforms",
            Identity::Iso => "iso",
        }
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// The Novikov parameters swept by default: `b_0, a_1, b_2, a_1 + b_1`.
pub fn default_params() -> Vec<Element> {
    let a = |n| Element::basis(BasisSymbol::a(n));
    let b = |m| Element::basis(BasisSymbol::b(m));
    vec![b(0), a(1), b(2), &a(1) + &b(1)]
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Random cases per sweep (per fixed parameter, where parameters apply).
    pub trials: usize,
    /// Index bound for random elements.
    pub max_index: u64,
    pub seed: u64,
    pub params: Vec<Element>,
    pub assoc_max_index: u64,
    pub unity_max_index: u64,
    pub novikov_max_index: u64,
    pub leibniz_max_index: u64,
    pub leibniz_multipliers: usize,
    pub bracket_max_index: u64,
    pub bracket_pairs: usize,
    pub closed_max_index: u64,
    pub iso_max_index: u64,
    pub iso_numeric_trials: usize,
    pub samples: Vec<f64>,
    pub tol: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            trials: 1000,
            max_index: 8,
            seed: 0,
            params: default_params(),
            assoc_max_index: 6,
            unity_max_index: 20,
            novikov_max_index: 4,
            leibniz_max_index: 8,
            leibniz_multipliers: 20,
            bracket_max_index: 6,
            bracket_pairs: 50,
            closed_max_index: 10,
            iso_max_index: 10,
            iso_numeric_trials: 200,
            samples: DEFAULT_SAMPLES.to_vec(),
            tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub identity: Identity,
    pub cases: usize,
    pub failures: Vec<String>,
    pub note: Option<String>,
}

impl Section {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub seed: u64,
    pub trials: usize,
    pub max_index: u64,
    pub sections: Vec<Section>,
}

/// Failure lines shown per section by [`CheckReport::render`].
const SHOWN_FAILURES: usize = 20;

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "seed {} trials {} max-index {}", self.seed, self.trials, self.max_index);
        for s in &self.sections {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            let _ =
                write!(out, "{status} {:<12} cases {:>6} failures {}", s.identity.name(), s.cases, s.failures.len());
            if let Some(note) = &s.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
            for f in s.failures.iter().take(SHOWN_FAILURES) {
                let _ = writeln!(out, "  {f}");
            }
            if s.failures.len() > SHOWN_FAILURES {
                let _ = writeln!(out, "  ... {} more", s.failures.len() - SHOWN_FAILURES);
            }
        }
        let _ = writeln!(out, "{}", if self.passed() { "all identities hold" } else { "identity failures found" });
        out
    }
}

pub fn run_checks(identities: &[Identity], config: &CheckConfig) -> CheckReport {
    CheckReport {
        seed: config.seed,
        trials: config.trials,
        max_index: config.max_index,
        sections: identities.iter().map(|&i| run_check(i, config)).collect(),
    }
}

pub fn run_check(identity: Identity, config: &CheckConfig) -> Section {
    match identity {
        Identity::Assoc => assoc(config),
        Identity::Leibniz => leibniz(config),
        Identity::LeftSym => {
            novikov_sweep(identity, config, |x, y, z, a| vec![("left symmetry", left_symmetry_residual(x, y, z, a))])
        }
        Identity::RightComm => novikov_sweep(identity, config, |x, y, z, a| {
            vec![("right commutativity", right_commutativity_residual(x, y, z, a))]
        }),
        Identity::Hamilton => novikov_sweep(identity, config, |x, y, z, a| {
            let (h1, h2) = hamilton_residuals(x, y, z, a);
            vec![("hamilton 1", h1), ("hamilton 2", h2)]
        }),
        Identity::Jacobi => novikov_sweep(identity, config, |x, y, z, a| {
            vec![
                ("jacobi", jacobi_residual(x, y, z, a)),
                ("skew symmetry", &lie_bracket(x, y, a) + &lie_bracket(y, x, a)),
                ("factored bracket", &lie_bracket(x, y, a) - &factored_bracket(x, y, a)),
            ]
        }),
        Identity::ClosedForms => closed_forms(config),
        Identity::Iso => iso(config),
    }
}

type Residuals = Vec<(&'static str, Element)>;

fn collect_failures<C, F>(cases: &[C], check: F) -> Vec<String>
where
    C: Sync,
    F: Fn(&C) -> Vec<String> + Sync + Send,
{
    cases.par_iter().map(check).collect::<Vec<_>>().into_iter().flatten().collect()
}

fn describe(residuals: Residuals, inputs: &[(&str, &Element)]) -> Vec<String> {
    residuals
        .into_iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|(label, r)| {
            let args: Vec<String> = inputs.iter().map(|(n, v)| format!("{n} = {v}")).collect();
            format!("{label}: {} -> {r}", args.join(", "))
        })
        .collect()
}

fn basis_elements(max_index: u64) -> Vec<Element> {
    BasisSymbol::up_to(max_index).into_iter().map(Element::basis).collect()
}

fn triples(basis: &[Element]) -> Vec<(Element, Element, Element)> {
    let mut out = Vec::with_capacity(basis.len().pow(3));
    for x in basis {
        for y in basis {
            for z in basis {
                out.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    out
}

fn assoc(config: &CheckConfig) -> Section {
    let mut cases = triples(&basis_elements(config.assoc_max_index));
    cases.extend((0..config.trials as u64).map(|t| {
        let mut rng = trial_rng(config.seed, Domain::Associativity, t);
        (
            random_element(&mut rng, config.max_index),
            random_element(&mut rng, config.max_index),
            random_element(&mut rng, config.max_index),
        )
    }));
    let mut failures = collect_failures(&cases, |(x, y, z)| {
        let one = Element::one();
        let residuals = vec![
            ("associativity", associator(x, y, z)),
            ("commutativity", &x.product(y) - &y.product(x)),
            ("unity", &one.product(x) - x),
            ("bilinearity", &(x + y).product(z) - &(&x.product(z) + &y.product(z))),
        ];
        describe(residuals, &[("x", x), ("y", y), ("z", z)])
    });
    let unity = basis_elements(config.unity_max_index);
    failures.extend(unity.iter().flat_map(|s| {
        let one = Element::one();
        describe(vec![("unity", &one.product(s) - s), ("unity", &s.product(&one) - s)], &[("s", s)])
    }));
    Section { identity: Identity::Assoc, cases: cases.len() + unity.len(), failures, note: None }
}

fn leibniz(config: &CheckConfig) -> Section {
    let rng = |t: u64| trial_rng(config.seed, Domain::Derivation, t);
    let k = config.max_index;
    let mut cases = 0;
    let mut failures = Vec::new();

    // Leibniz rule on basis pairs, for D0 and random multipliers.
    let mut multipliers = vec![Element::one()];
    multipliers.extend((0..config.leibniz_multipliers as u64).map(|t| random_element(&mut rng(t), k)));
    let basis = basis_elements(config.leibniz_max_index);
    let mut pairs = Vec::with_capacity(multipliers.len() * basis.len() * basis.len());
    for m in &multipliers {
        for x in &basis {
            for y in &basis {
                pairs.push((m.clone(), x.clone(), y.clone()));
            }
        }
    }
    let random: Vec<(Element, Element, Element)> = (0..config.trials as u64)
        .map(|t| {
            let mut r = rng((1 << 20) + t);
            (random_element(&mut r, k), random_element(&mut r, k), random_element(&mut r, k))
        })
        .collect();
    for set in [&pairs, &random] {
        cases += set.len();
        failures.extend(collect_failures(set, |(m, x, y)| {
            let d = MultiplierDerivation::new(m.clone());
            describe(vec![("leibniz", d.leibniz_residual(x, y))], &[("a", m), ("x", x), ("y", y)])
        }));
    }

    // Closure of the family a·D0 under the commutator, skew symmetry and the
    // Jacobi identity of the derivation bracket.
    let triples: Vec<(Element, Element, Element)> = (0..config.bracket_pairs as u64)
        .map(|t| {
            let mut r = rng((2 << 20) + t);
            (random_element(&mut r, k), random_element(&mut r, k), random_element(&mut r, k))
        })
        .collect();
    let probes = basis_elements(config.bracket_max_index);
    cases += triples.len();
    failures.extend(collect_failures(&triples, |(p, q, s)| {
        let (d1, d2, d3) = (
            MultiplierDerivation::new(p.clone()),
            MultiplierDerivation::new(q.clone()),
            MultiplierDerivation::new(s.clone()),
        );
        let br = d1.bracket(&d2);
        let mut residuals: Residuals = probes
            .iter()
            .map(|e| ("bracket closure", &br.apply(e) - &(&d1.apply(&d2.apply(e)) - &d2.apply(&d1.apply(e)))))
            .collect();
        residuals.push(("bracket skew symmetry", &br.multiplier + &d2.bracket(&d1).multiplier));
        let jacobi = [d1.bracket(&d2).bracket(&d3), d2.bracket(&d3).bracket(&d1), d3.bracket(&d1).bracket(&d2)];
        let sum = jacobi.iter().fold(Element::zero(), |acc, d| &acc + &d.multiplier);
        residuals.push(("bracket jacobi", sum));
        describe(residuals, &[("a", p), ("b", q), ("c", s)])
    }));

    Section { identity: Identity::Leibniz, cases, failures, note: None }
}

type Quad = (Element, Element, Element, Element);

fn novikov_sweep<F>(identity: Identity, config: &CheckConfig, residuals: F) -> Section
where
    F: Fn(&Element, &Element, &Element, &Element) -> Residuals + Sync,
{
    let basis_triples = triples(&basis_elements(config.novikov_max_index));
    let random: Vec<Quad> = (0..config.trials as u64)
        .map(|t| {
            let mut rng = trial_rng(config.seed, Domain::Novikov, t);
            let k = config.max_index;
            let x = random_element(&mut rng, k);
            let y = random_element(&mut rng, k);
            let z = random_element(&mut rng, k);
            (x, y, z, random_element(&mut rng, k))
        })
        .collect();

    let mut cases: Vec<Quad> = Vec::new();
    for a in &config.params {
        cases.extend(basis_triples.iter().map(|(x, y, z)| (x.clone(), y.clone(), z.clone(), a.clone())));
        cases.extend(random.iter().map(|(x, y, z, _)| (x.clone(), y.clone(), z.clone(), a.clone())));
    }
    cases.extend(random);

    let failures = collect_failures(&cases, |(x, y, z, a)| {
        describe(residuals(x, y, z, a), &[("x", x), ("y", y), ("z", z), ("a", a)])
    });
    Section { identity, cases: cases.len(), failures, note: None }
}

fn closed_forms(config: &CheckConfig) -> Section {
    let one = Element::one();
    let symbols = BasisSymbol::up_to(config.closed_max_index);
    let pairs: Vec<(BasisSymbol, BasisSymbol)> =
        symbols.iter().flat_map(|&s| symbols.iter().map(move |&t| (s, t))).collect();
    let mut failures = collect_failures(&pairs, |&(s, t)| {
        let (x, y) = (Element::basis(s), Element::basis(t));
        describe(
            vec![
                ("closed circ", &closed_circ(s, t) - &circ(&x, &y, &one)),
                ("closed bracket", &closed_bracket(s, t) - &lie_bracket(&x, &y, &one)),
            ],
            &[("s", &x), ("t", &y)],
        )
    });

    let a = |n| Element::basis(BasisSymbol::a(n));
    let b = |m| Element::basis(BasisSymbol::b(m));
    let spots = [
        ("a_1 o a_2", circ(&a(1), &a(2), &one), &a(3) - &a(1)),
        (
            "[a_1, a_2]",
            lie_bracket(&a(1), &a(2), &one),
            &a(3).scale(&rational::ratio(1, 2)) - &a(1).scale(&rational::ratio(3, 2)),
        ),
        ("[b_2, a_2]", lie_bracket(&b(2), &a(2), &one), b(0).scale(&rational::from_i64(2))),
    ];
    for (label, got, want) in &spots {
        if got != want {
            failures.push(format!("spot value {label}: got {got}, expected {want}"));
        }
    }
    Section { identity: Identity::ClosedForms, cases: pairs.len() + spots.len(), failures, note: None }
}

fn iso(config: &CheckConfig) -> Section {
    let iso = IsoConfig {
        basis_max_index: Some(config.iso_max_index),
        basis_params: config.params.clone(),
        structural_trials: config.trials,
        numeric_trials: config.iso_numeric_trials.min(config.trials.max(1)),
        max_index: config.max_index,
        samples: config.samples.clone(),
        tol: config.tol,
        seed: config.seed,
    };
    let report = check_isomorphism(&iso);
    let failures = report
        .failures
        .iter()
        .map(|f| {
            let param = f.param.as_ref().map(|p| format!(", a = {p}")).unwrap_or_default();
            format!("{:?}: u = {}, v = {}{param} -> {}", f.check, f.u, f.v, f.detail)
        })
        .collect();
    let note = format!(
        "{} numeric evaluations, max relative residual {:.3e}, tol {:e}",
        report.numeric_cases, report.max_numeric_residual, config.tol
    );
    Section {
        identity: Identity::Iso,
        cases: report.structural_cases + report.numeric_cases,
        failures,
        note: Some(note),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CheckConfig {
        CheckConfig {
            trials: 20,
            max_index: 4,
            seed: 3,
            assoc_max_index: 3,
            novikov_max_index: 2,
            leibniz_max_index: 3,
            leibniz_multipliers: 3,
            bracket_pairs: 5,
            closed_max_index: 4,
            iso_max_index: 3,
            iso_numeric_trials: 10,
            ..CheckConfig::default()
        }
    }

    #[test]
    fn every_identity_passes_on_a_small_sweep() {
        let report = run_checks(&Identity::ALL, &small());
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.sections.len(), 8);
    }

    #[test]
    fn identity_names_round_trip() {
        for i in Identity::ALL {
            assert_eq!(i.name().parse::<Identity>(), Ok(i));
        }
        assert!("all".parse::<Identity>().is_err());
    }

    #[test]
    fn novikov_case_count() {
        let s = run_check(Identity::RightComm, &small());
        // 4 params × (5³ basis triples + 20 random) + 20 random quadruples
        assert_eq!(s.cases, 4 * (125 + 20) + 20);
    }

    #[test]
    fn render_reports_failures() {
        let section = Section {
            identity: Identity::Jacobi,
            cases: 3,
            failures: vec!["jacobi: x = a_1 -> b_0".into()],
            note: None,
        };
        let report = CheckReport { seed: 1, trials: 3, max_index: 2, sections: vec![section] };
        let text = report.render();
        assert!(text.contains("FAIL jacobi"));
        assert!(text.contains("  jacobi: x = a_1 -> b_0"));
        assert!(!report.passed());
    }
}
