//! Verification sweeps over ranges of diagrams and matrix sizes.
//!
//! Cases are enumerated smallest first and evaluated on a rayon pool; results
//! come back in case order, so the first failure reported for a check is the
//! smallest failing instance.

use std::collections::BTreeMap;
use std::fmt::Display;

use capelli_core::fusion::{fusion_limit, pole_order_phi, upsilon_limit, verify_local_identities, verify_transposition_sum};
use capelli_core::ring::factorial;
use capelli_core::tensormat::{
    e_lambda, e_lambda_poly, f_lambda, quantum_determinant, verify_fused_r_matrix, verify_rtt_evaluation, verify_vanishing,
};
use capelli_core::weyl::{c_lambda, capelli_product, gl_action, ugl_to_weyl, DeltaReading, Side, WeylMonomial};
use capelli_core::{GroupAlgebraElement, Rational, Ring, UglElement, WeylElement, YoungDiagram};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Fusion,
    Pole,
    Rtt,
    Capelli,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Fusion, Suite::Pole, Suite::Rtt, Suite::Capelli];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fusion => "fusion",
            Suite::Pole => "pole",
            Suite::Rtt => "rtt",
            Suite::Capelli => "capelli",
        }
    }
}

/// Ranges for the sweeps. The defaults are the acceptance ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest `|λ|` in the fusion suite.
    pub max_n: usize,
    /// Largest `(|λ|, |μ|)` in the pole suite.
    pub max_pair: (usize, usize),
    /// Largest `N` (tensor and Capelli suites).
    pub gl_n: usize,
    /// Largest `M` (Capelli suite).
    pub gl_m: usize,
    /// Largest `|λ|` for the fused R-matrix identity.
    pub tensor_n: usize,
    /// Largest `|λ|` for `e_λ(z)`, vanishing and the Capelli operators; one
    /// more box is also swept at `N = M = 2`.
    pub capelli_n: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 5, max_pair: (4, 4), gl_n: 3, gl_m: 3, tensor_n: 4, capelli_n: 3 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CapError {
    #[error("{name} must be at least 1")]
    TooSmall { name: &'static str },
    #[error("{name} = {value} exceeds the hard cap {cap}")]
    TooLarge { name: &'static str, value: usize, cap: usize },
}

impl SweepConfig {
    /// Rejects ranges that are zero or beyond what the kernels can finish.
    pub fn validate(&self) -> Result<(), CapError> {
        let checks = [
            ("max-n", self.max_n, 7),
            ("max-pair n", self.max_pair.0, 5),
            ("max-pair m", self.max_pair.1, 5),
            ("gl-n", self.gl_n, 4),
            ("gl-m", self.gl_m, 4),
            ("tensor-n", self.tensor_n, 5),
            ("capelli-n", self.capelli_n, 4),
        ];
        for (name, value, cap) in checks {
            if value == 0 {
                return Err(CapError::TooSmall { name });
            }
            if value > cap {
                return Err(CapError::TooLarge { name, value, cap });
            }
        }
        Ok(())
    }

    /// Names of the ranges that go beyond the defaults.
    pub fn enlarged(&self) -> Vec<&'static str> {
        let d = Self::default();
        let mut out = Vec::new();
        if self.max_n > d.max_n {
            out.push("max-n");
        }
        if self.max_pair.0 > d.max_pair.0 || self.max_pair.1 > d.max_pair.1 {
            out.push("max-pair");
        }
        if self.gl_n > d.gl_n || self.gl_m > d.gl_m {
            out.push("gl-n/gl-m");
        }
        if self.tensor_n > d.tensor_n {
            out.push("tensor-n");
        }
        if self.capelli_n > d.capelli_n {
            out.push("capelli-n");
        }
        out
    }
}

/// One evaluated check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub suite: Suite,
    pub check: &'static str,
    pub instance: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
enum Case {
    Fusion(YoungDiagram),
    LocalIdentities,
    Pole(YoungDiagram, YoungDiagram),
    Rtt(usize),
    QuantumDeterminant(usize),
    FusedR(YoungDiagram, usize),
    Central(YoungDiagram, usize),
    Vanishing(YoungDiagram, YoungDiagram, usize),
    Capelli(YoungDiagram, usize, usize),
}

fn diagrams_up_to(n: usize) -> Vec<YoungDiagram> {
    (1..=n).flat_map(YoungDiagram::all_of_size).collect()
}

fn cases(suite: Suite, config: &SweepConfig) -> Vec<Case> {
    let mut out = Vec::new();
    match suite {
        Suite::Fusion => {
            out.push(Case::LocalIdentities);
            out.extend(diagrams_up_to(config.max_n).into_iter().map(Case::Fusion));
        }
        Suite::Pole => {
            for l in diagrams_up_to(config.max_pair.0) {
                for m in diagrams_up_to(config.max_pair.1) {
                    out.push(Case::Pole(l.clone(), m));
                }
            }
        }
        Suite::Rtt => {
            for n in 1..=config.gl_n {
                out.push(Case::Rtt(n));
                out.push(Case::QuantumDeterminant(n));
            }
            for l in diagrams_up_to(config.tensor_n) {
                for n in l.num_rows()..=config.gl_n {
                    out.push(Case::FusedR(l.clone(), n));
                }
            }
            for l in diagrams_up_to(config.capelli_n) {
                for n in 1..=config.gl_n {
                    out.push(Case::Central(l.clone(), n));
                }
            }
            for l in diagrams_up_to(config.capelli_n) {
                for size in 0..l.size() {
                    for mu in YoungDiagram::all_of_size(size) {
                        for n in mu.num_rows().max(1)..=config.gl_n {
                            out.push(Case::Vanishing(l.clone(), mu.clone(), n));
                        }
                    }
                }
            }
        }
        Suite::Capelli => {
            for l in diagrams_up_to(config.capelli_n) {
                for n in 1..=config.gl_n {
                    for m in 1..=config.gl_m {
                        out.push(Case::Capelli(l.clone(), n, m));
                    }
                }
            }
            if config.gl_n >= 2 && config.gl_m >= 2 {
                for l in YoungDiagram::all_of_size(config.capelli_n + 1) {
                    out.push(Case::Capelli(l, 2, 2));
                }
            }
        }
    }
    out
}

fn result(suite: Suite, check: &'static str, instance: &str, outcome: Result<(), String>) -> CaseResult {
    CaseResult { suite, check, instance: instance.to_string(), passed: outcome.is_ok(), detail: outcome.err() }
}

fn shape_label(l: &YoungDiagram) -> String {
    if l.size() == 0 {
        "∅".to_string()
    } else {
        format!("({l})")
    }
}

/// First coefficient where two group-algebra elements differ.
pub fn diff_group<C: Ring + Display>(got: &GroupAlgebraElement<C>, want: &GroupAlgebraElement<C>) -> Result<(), String> {
    let mut keys: Vec<_> = got.terms().map(|(p, _)| p.clone()).collect();
    keys.extend(want.terms().map(|(p, _)| p.clone()));
    keys.sort();
    keys.dedup();
    for p in keys {
        let (a, b) = (got.coeff(&p), want.coeff(&p));
        if a != b {
            return Err(format!("coefficient of {p}: got {a}, expected {b}"));
        }
    }
    Ok(())
}

/// First monomial where two operators differ.
pub fn diff_weyl(got: &WeylElement, want: &WeylElement) -> Result<(), String> {
    let mut keys: Vec<&WeylMonomial> = got.terms().map(|(k, _)| k).chain(want.terms().map(|(k, _)| k)).collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        let (a, b) = (got.coeff(k), want.coeff(k));
        if a != b {
            return Err(format!("coefficient of x^{:?} d^{:?}: got {a}, expected {b}", k.x, k.d));
        }
    }
    Ok(())
}

fn require(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn evaluate(case: &Case) -> Vec<CaseResult> {
    match case {
        Case::LocalIdentities => verify_local_identities()
            .into_iter()
            .map(|c| result(Suite::Fusion, "local identity", c.name, require(c.passed, || format!("{} fails", c.name))))
            .collect(),
        Case::Fusion(l) => {
            let label = shape_label(l);
            let sym = l.symmetrizers();
            let mut out = Vec::new();
            let limit = fusion_limit(l);
            out.push(result(
                Suite::Fusion,
                "fusion limit",
                &label,
                match &limit {
                    Ok(phi) => diff_group(phi, &sym.phi),
                    Err(e) => Err(e.to_string()),
                },
            ));
            let qp = sym.q.try_mul(&sym.p).expect("same degree");
            out.push(result(
                Suite::Fusion,
                "upsilon limit",
                &label,
                upsilon_limit(l).map_err(|e| e.to_string()).and_then(|u| diff_group(&u, &qp)),
            ));
            let idempotent = limit.map_err(|e| e.to_string()).and_then(|phi| {
                let id = phi.identity_coeff();
                require(id == Rational::from_integer(1.into()), || format!("identity coefficient {id}"))?;
                let y = phi.scale(&(Rational::from_integer(l.dimension()) / factorial(l.size())));
                diff_group(&y.try_mul(&y).expect("same degree"), &y)
            });
            out.push(result(Suite::Fusion, "idempotent", &label, idempotent));
            out.push(result(
                Suite::Fusion,
                "transposition sum",
                &label,
                verify_transposition_sum(l).map_err(|e| e.to_string()).and_then(|ok| require(ok, || "sides differ".into())),
            ));
            out
        }
        Case::Pole(l, m) => {
            let label = format!("λ={}, μ={}", shape_label(l), shape_label(m));
            let order = pole_order_phi(l, m);
            let rank = l.rank() as u32;
            let bound = if l.contains_in(m) { rank } else { rank - 1 };
            vec![result(
                Suite::Pole,
                "pole bound",
                &label,
                require(order <= bound, || format!("pole order {order} exceeds bound {bound} (rank {rank})")),
            )]
        }
        Case::Rtt(n) => {
            vec![result(Suite::Rtt, "rtt relation", &format!("N={n}"), require(verify_rtt_evaluation(*n), || "sides differ".into()))]
        }
        Case::QuantumDeterminant(n) => {
            let label = format!("N={n}");
            let qd = quantum_determinant(*n);
            let mut central = Ok(());
            for (k, c) in qd.coefficients.iter().enumerate() {
                if !c.is_central().unwrap_or(false) {
                    central = Err(format!("D_{} = {c} is not central", k + 1));
                    break;
                }
            }
            vec![
                result(Suite::Rtt, "quantum determinant central", &label, central),
                result(Suite::Rtt, "quantum determinant divisible", &label, require(qd.divisible, || "X(u) differs from F_N ⊗ D(u)".into())),
            ]
        }
        Case::FusedR(l, n) => {
            let label = format!("{}, N={n}", shape_label(l));
            vec![result(Suite::Rtt, "fused r-matrix", &label, require(verify_fused_r_matrix(l, *n), || "sides differ".into()))]
        }
        Case::Central(l, n) => {
            let label = format!("{}, N={n}", shape_label(l));
            let poly = e_lambda_poly(l, *n);
            let mut central = Ok(());
            for (k, c) in poly.coeffs().iter().enumerate() {
                if !c.is_central_in(*n).unwrap_or(false) {
                    central = Err(format!("coefficient of z^{k} is not central: {c}"));
                    break;
                }
            }
            let trace = f_lambda(l, *n).trace();
            let top = poly.coeff(l.size());
            let leading = require(top == UglElement::scalar(trace.clone()) && poly.degree().is_none_or(|d| d <= l.size()), || {
                format!("leading coefficient {top}, expected {trace}")
            });
            vec![
                result(Suite::Rtt, "e_lambda(z) central", &label, central),
                result(Suite::Rtt, "e_lambda(z) leading coefficient", &label, leading),
            ]
        }
        Case::Vanishing(l, mu, n) => {
            let label = format!("λ={}, μ={}, N={n}", shape_label(l), shape_label(mu));
            vec![result(Suite::Rtt, "vanishing", &label, require(verify_vanishing(l, mu, *n), || "nonzero image".into()))]
        }
        Case::Capelli(l, n, m) => {
            let label = format!("{}, N={n}, M={m}", shape_label(l));
            let c = c_lambda(l, *n, *m);
            let image = ugl_to_weyl(&e_lambda(l, *n, &Rational::from_integer(0.into())), *n, *m).expect("shapes agree");
            let product = capelli_product(l, *n, *m, DeltaReading::PerFactor);
            let mut invariant = Ok(());
            'gens: for (side, k) in [(Side::GlN, *n), (Side::GlM, *m)] {
                for i in 1..=k {
                    for j in 1..=k {
                        let g = gl_action(side, *n, *m, i, j).expect("in range");
                        let commutator = c.commutator(&g).expect("shapes agree");
                        if !commutator.is_zero() {
                            invariant = Err(format!("[c, E_{i}{j}] ({side:?}) = {commutator}"));
                            break 'gens;
                        }
                    }
                }
            }
            vec![
                result(Suite::Capelli, "image of e_lambda", &label, diff_weyl(&image, &c)),
                result(Suite::Capelli, "ordered product", &label, diff_weyl(&product, &c)),
                result(Suite::Capelli, "invariance", &label, invariant),
            ]
        }
    }
}

/// Results of one or more suites, in case order.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub results: Vec<CaseResult>,
}

/// Aggregate for one named check.
#[derive(Clone, Debug)]
pub struct CheckSummary<'a> {
    pub suite: Suite,
    pub check: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<&'a CaseResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn summaries(&self) -> Vec<CheckSummary<'_>> {
        let mut order: Vec<(Suite, &'static str)> = Vec::new();
        let mut by_check: BTreeMap<(Suite, &'static str), CheckSummary<'_>> = BTreeMap::new();
        for r in &self.results {
            let key = (r.suite, r.check);
            let entry = by_check.entry(key).or_insert_with(|| {
                order.push(key);
                CheckSummary { suite: r.suite, check: r.check, cases: 0, failures: 0, first_failure: None }
            });
            entry.cases += 1;
            if !r.passed {
                entry.failures += 1;
                entry.first_failure.get_or_insert(r);
            }
        }
        order.into_iter().map(|k| by_check.remove(&k).expect("present")).collect()
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .summaries()
            .into_iter()
            .map(|s| {
                json!({
                    "suite": s.suite.name(),
                    "check": s.check,
                    "cases": s.cases,
                    "failures": s.failures,
                    "first_failure": s.first_failure.map(|r| json!({"instance": r.instance, "detail": r.detail})),
                })
            })
            .collect();
        json!({"passed": self.passed(), "checks": checks})
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in self.summaries() {
            let status = if s.failures == 0 { "ok  " } else { "FAIL" };
            out.push_str(&format!("{status} {:<8} {:<32} {}/{} passed\n", s.suite.name(), s.check, s.cases - s.failures, s.cases));
            if let Some(r) = s.first_failure {
                out.push_str(&format!("     smallest failing instance: {}", r.instance));
                if let Some(d) = &r.detail {
                    out.push_str(&format!(": {d}"));
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Runs the given suites on the current rayon pool.
pub fn run(suites: &[Suite], config: &SweepConfig) -> Report {
    let all: Vec<Case> = suites.iter().flat_map(|&s| cases(s, config)).collect();
    let nested: Vec<Vec<CaseResult>> = all.par_iter().map(evaluate).collect();
    Report { results: nested.into_iter().flatten().collect() }
}
