//! Command implementations. Each returns the report entries plus the
//! human-readable text; formatting choices (digits, layout) live here.

use std::fmt::Write as _;

use evenzeta::arith::{format_rational, pi_series_eval, Rational};
use evenzeta::bernoulli::BernoulliTable;
use evenzeta::fourier::{fourier_closed_form, fourier_recurrence};
use evenzeta::identities::run_all_with;
use evenzeta::parseval::parseval_report;
use evenzeta::quadrature::{quadrature_oracle, TrigKind};
use evenzeta::zeta::{zeta_closed_form_with, zeta_decimal, zeta_inductive};
use evenzeta::{DoubleF64, Real};

use crate::report::ResultEntry;

pub struct Output {
    pub results: Vec<ResultEntry>,
    pub text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ZetaMode {
    Exact,
    Decimal,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Check {
    Identities,
    Zeta,
    Fourier,
    Parseval,
    All,
}

/// Digits used for decimal companions of exact values.
const DISPLAY_DIGITS: u32 = 20;
/// Largest `k` the verify sweep feeds to the Parseval and quadrature checks.
const VERIFY_PARSEVAL_MAX_K: u32 = 12;
const VERIFY_QUADRATURE_MAX_K: u32 = 8;
const VERIFY_QUADRATURE_MAX_N: u32 = 4;
const QUADRATURE_TOLERANCE: f64 = 1e-8;

fn zeta_expr(k: u32, q: &Rational) -> String {
    format!("{} * pi^{}", format_rational(q), 2 * k)
}

pub fn bernoulli(max: usize) -> Output {
    let table = BernoulliTable::shared(max);
    let mut text = String::from("   m  B_m\n");
    let mut results = Vec::new();
    for (m, b) in table.values().iter().enumerate() {
        let value = format_rational(b);
        writeln!(text, "{m:>4}  {value}").unwrap();
        results.push(ResultEntry::new("bernoulli", format!("B_{m}"), value, true).param("m", m));
    }
    Output { results, text }
}

pub fn zeta(k: u32, mode: ZetaMode, digits: u32) -> evenzeta::Result<Output> {
    let closed = zeta_closed_form_with(&BernoulliTable::shared(2 * k as usize), k)?;
    let mut text = String::new();
    let mut results = Vec::new();
    let label = format!("zeta({})", 2 * k);
    if mode != ZetaMode::Decimal {
        let expr = zeta_expr(k, &closed.q);
        writeln!(text, "{label} = {expr}").unwrap();
        results.push(ResultEntry::new("zeta_exact", &label, expr, true).param("k", k));
    }
    if mode != ZetaMode::Exact {
        let dec = zeta_decimal(k, digits)?;
        writeln!(text, "{label} = {dec}").unwrap();
        results.push(
            ResultEntry::new("zeta_decimal", &label, dec.value_string(), true)
                .param("k", k)
                .param("digits", digits)
                .detail(format!("error <= {}", dec.error_string())),
        );
    }
    if mode == ZetaMode::Both {
        let inductive = zeta_inductive(k)?;
        let pass = inductive.q == closed.q;
        writeln!(text, "inductive == closed-form: {}", verdict(pass)).unwrap();
        results.push(cross_check_entry(k, &inductive.q, &closed.q));
    }
    Ok(Output { results, text })
}

fn cross_check_entry(k: u32, inductive: &Rational, closed: &Rational) -> ResultEntry {
    ResultEntry::new(
        "zeta_cross_check",
        format_rational(inductive),
        format_rational(closed),
        inductive == closed,
    )
    .param("k", k)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn fourier(k: u32, n: u64) -> evenzeta::Result<Output> {
    let pair = fourier_recurrence(k, n)?;
    let (a, b) = (pair.a_value(), pair.b_value());
    let (da, db) = (pi_series_eval(&a, DISPLAY_DIGITS), pi_series_eval(&b, DISPLAY_DIGITS));
    let mut text = String::new();
    writeln!(text, "a = {a}, b = {b}").unwrap();
    writeln!(text, "a ~ {}, b ~ {}", da.value_string(), db.value_string()).unwrap();
    writeln!(text, "path: {}", pair.path).unwrap();
    let results = vec![
        ResultEntry::new("fourier_a", format!("a_{n}({k})"), a.to_string(), true)
            .param("k", k)
            .param("n", n)
            .detail(da.value_string()),
        ResultEntry::new("fourier_b", format!("b_{n}({k})"), b.to_string(), true)
            .param("k", k)
            .param("n", n)
            .detail(db.value_string()),
    ];
    Ok(Output { results, text })
}

fn parseval_entry(k: u32, terms: u64) -> evenzeta::Result<ResultEntry> {
    let r = parseval_report::<DoubleF64>(k, terms)?;
    Ok(ResultEntry::new(
        "parseval",
        format!("{:.15e}", r.target.to_f64()),
        format!("{:.15e}", r.partial_sum.to_f64()),
        r.pass,
    )
    .param("k", k)
    .param("terms", terms)
    .detail(format!("gap {:.6e}, tail bound {:.6e}", r.gap.to_f64(), r.tail_bound.to_f64())))
}

pub fn parseval(k: u32, terms: u64) -> evenzeta::Result<Output> {
    let r = parseval_report::<DoubleF64>(k, terms)?;
    let mut text = String::new();
    writeln!(text, "k = {k}, terms = {terms}").unwrap();
    writeln!(text, "partial sum: {:.17e}", r.partial_sum.to_f64()).unwrap();
    writeln!(text, "target:      {:.17e}", r.target.to_f64()).unwrap();
    writeln!(text, "gap:         {:.6e}", r.gap.to_f64()).unwrap();
    writeln!(text, "tail bound:  {:.6e}", r.tail_bound.to_f64()).unwrap();
    writeln!(text, "{}", verdict(r.pass)).unwrap();
    Ok(Output {
        results: vec![parseval_entry(k, terms)?],
        text,
    })
}

pub struct VerifyOptions {
    pub k_max: u32,
    pub which: Vec<Check>,
    pub terms: u64,
    pub inject_fault: bool,
}

pub fn verify(opts: &VerifyOptions) -> evenzeta::Result<Output> {
    let wants = |c: Check| opts.which.contains(&Check::All) || opts.which.contains(&c);
    let k_max = opts.k_max;
    let mut table = BernoulliTable::shared(2 * k_max as usize + 2);
    if opts.inject_fault {
        let b2 = table.get(2) + Rational::from_integer(1.into());
        table = table.perturbed(2, b2);
    }

    let mut results: Vec<ResultEntry> = Vec::new();
    if wants(Check::Identities) {
        let sweep = run_all_with(&table, k_max as usize)?;
        results.extend(sweep.results.iter().map(ResultEntry::from));
    }
    if wants(Check::Zeta) {
        for k in 1..=k_max {
            let inductive = zeta_inductive(k)?;
            let closed = zeta_closed_form_with(&table, k)?;
            results.push(cross_check_entry(k, &inductive.q, &closed.q));
        }
    }
    if wants(Check::Fourier) {
        for k in 1..=k_max {
            let closed = fourier_closed_form(k)?;
            for n in [1u64, 2] {
                let rec = fourier_recurrence(k, n)?;
                let pass = rec.combined() == &closed.expansion()
                    && &rec.a_value() + &rec.b_value() == closed.evaluate(n);
                results.push(
                    ResultEntry::new("fourier_recurrence_vs_closed", rec.combined().to_string(), closed.expansion().to_string(), pass)
                        .param("k", k)
                        .param("n", n),
                );
            }
        }
        for k in 1..=k_max.min(VERIFY_QUADRATURE_MAX_K) {
            for n in 1..=VERIFY_QUADRATURE_MAX_N {
                let rec = fourier_recurrence(k, u64::from(n))?;
                for (kind, exact, label) in [(TrigKind::Cos, rec.a_value(), "cos"), (TrigKind::Sin, rec.b_value(), "sin")] {
                    let exact = pi_series_eval(&exact, DISPLAY_DIGITS).to_f64();
                    let entry = match quadrature_oracle::<f64>(k, n, kind) {
                        Ok(q) => ResultEntry::new("fourier_quadrature", format!("{q:.12e}"), format!("{exact:.12e}"), (q - exact).abs() <= QUADRATURE_TOLERANCE),
                        Err(e) => ResultEntry::new("fourier_quadrature", "n/a", format!("{exact:.12e}"), false).detail(e.to_string()),
                    };
                    results.push(entry.param("k", k).param("n", n).param("kind", label));
                }
            }
        }
    }
    if wants(Check::Parseval) {
        for k in 1..=k_max.min(VERIFY_PARSEVAL_MAX_K) {
            results.push(parseval_entry(k, opts.terms)?);
        }
    }

    let mut text = String::new();
    for r in &results {
        let detail = r.detail.as_deref().map(|d| format!(" [{d}]")).unwrap_or_default();
        writeln!(text, "{} {}({}): {} == {}{}", verdict(r.pass), r.name, r.params_text(), r.lhs, r.rhs, detail).unwrap();
    }
    Ok(Output { results, text })
}
