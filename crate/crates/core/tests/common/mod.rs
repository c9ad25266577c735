#![allow(dead_code)]

use novikov::expr::{evaluate, parse};
use novikov::Element;

pub const GOLDEN: &str = include_str!("../data/golden.tsv");

pub struct GoldenCase {
    pub line: usize,
    pub expr: &'static str,
    pub param: &'static str,
    pub expected: &'static str,
}

pub fn golden_cases() -> Vec<GoldenCase> {
    GOLDEN
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            let mut cols = l.split('\t');
            let mut next = || cols.next().unwrap_or_else(|| panic!("golden line {} has fewer than 3 columns", i + 1));
            GoldenCase { line: i + 1, expr: next(), param: next(), expected: next() }
        })
        .collect()
}

pub fn eval_str(text: &str, param: &Element) -> Element {
    evaluate(&parse(text).unwrap_or_else(|e| panic!("`{text}`: {e}")), param).unwrap()
}

/// Checks one corpus line; returns a description of every mismatch.
pub fn check_golden(case: &GoldenCase) -> Vec<String> {
    let mut problems = Vec::new();
    let tag = format!("line {} `{}`", case.line, case.expr);
    let param = eval_str(case.param, &Element::one());
    let ast = match parse(case.expr) {
        Ok(ast) => ast,
        Err(e) => return vec![format!("{tag}: {e}")],
    };
    let printed = ast.to_string();
    match parse(&printed) {
        Ok(again) if again == ast => {}
        Ok(_) => problems.push(format!("{tag}: printed as `{printed}`, which parses to a different tree")),
        Err(e) => problems.push(format!("{tag}: printed as `{printed}`, which fails to parse: {e}")),
    }
    let value = match evaluate(&ast, &param) {
        Ok(v) => v,
        Err(e) => return vec![format!("{tag}: {e}")],
    };
    let shown = value.to_string();
    if shown != case.expected {
        problems.push(format!("{tag}: got `{shown}`, expected `{}`", case.expected));
    }
    if eval_str(&shown, &Element::one()) != value {
        problems.push(format!("{tag}: output `{shown}` does not read back to the same element"));
    }
    problems
}
