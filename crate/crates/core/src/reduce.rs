//! Positive quadratic surrogates: the cell Hamiltonian H+ and the
//! W-quadratization penalty.
//!
//! Both are linear combinations of low-degree Groebner basis elements whose
//! coefficients are pinned down by brute-force positivity constraints over
//! the binary cube, so the surrogate vanishes exactly where the original
//! constraint does and is strictly positive elsewhere.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::groebner::{buchberger, GroebnerBudget, GroebnerError};
use crate::order::TermOrder;
use crate::poly::{rat, Polynomial, Rational};
use crate::vars::Variable;

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("brute-force enumeration infeasible for {0} variables")]
    TooManyVariables(usize),
    #[error("constraint set infeasible: {0}")]
    Infeasible(String),
    #[error("surrogate fails the positivity check: {0}")]
    PositivityViolated(String),
    #[error("groebner: {0}")]
    Groebner(#[from] GroebnerError),
}

/// A linear form in the unknown surrogate coefficients a_1..a_k, constrained
/// to be strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LinearForm {
            coeffs: coeffs.iter().map(|&c| rat(c)).collect(),
        }
    }

    pub fn eval_exact(&self, a: &[Rational]) -> Rational {
        self.coeffs.iter().zip(a).map(|(c, x)| c * x).sum()
    }

    pub fn eval_f64(&self, a: &[f64]) -> f64 {
        self.coeffs
            .iter()
            .zip(a)
            .map(|(c, x)| rational_to_f64(c) * x)
            .sum()
    }

    /// Scales by a positive rational so the entries become a primitive
    /// integer vector; strict positivity is invariant under this.
    pub fn normalized(&self) -> LinearForm {
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for n in &ints {
            g = g.gcd(n);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        LinearForm {
            coeffs: ints
                .into_iter()
                .map(|n| Rational::from_integer(n / &g))
                .collect(),
        }
    }

    /// Renders as a polynomial in a_1..a_k.
    pub fn to_text(&self) -> String {
        let vars: Vec<Variable> = (1..=self.coeffs.len())
            .map(|i| Variable::named(&format!("a_{i}")))
            .collect();
        let mut p = Polynomial::zero();
        for (c, &v) in self.coeffs.iter().zip(&vars) {
            p = &p + &Polynomial::var(v).scale(c);
        }
        p.to_text()
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// Which continuous objective picked the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Objective {
    /// Pull every surrogate coefficient magnitude toward 1.
    UnitBand,
    /// Pull every squared coefficient toward the reference coefficient a_2.
    RatioNormalized,
    /// The fixed integral solutions.
    Preset,
}

#[derive(Debug, Clone)]
pub enum CoefficientValues {
    Exact(Vec<Rational>),
    Approx(Vec<f64>),
}

/// A feasible coefficient vector for a surrogate family.
#[derive(Debug, Clone)]
pub struct CoefficientSolution {
    pub objective: Objective,
    pub values: CoefficientValues,
}

impl CoefficientSolution {
    pub fn exact(objective: Objective, values: Vec<Rational>) -> Self {
        CoefficientSolution {
            objective,
            values: CoefficientValues::Exact(values),
        }
    }

    pub fn len(&self) -> usize {
        match &self.values {
            CoefficientValues::Exact(v) => v.len(),
            CoefficientValues::Approx(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_f64(&self) -> Vec<f64> {
        match &self.values {
            CoefficientValues::Exact(v) => v.iter().map(rational_to_f64).collect(),
            CoefficientValues::Approx(v) => v.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&[Rational]> {
        match &self.values {
            CoefficientValues::Exact(v) => Some(v),
            CoefficientValues::Approx(_) => None,
        }
    }
}

/// The paper-fixed cell coefficients (a_1..a_6).
pub fn preset_cell_coefficients() -> Vec<Rational> {
    [1, -4, 4, -4, 2, 2].iter().map(|&c| rat(c)).collect()
}

/// The paper-fixed penalty coefficients (a, b, c).
pub fn preset_penalty_coefficients() -> Vec<Rational> {
    [-2, -2, 1].iter().map(|&c| rat(c)).collect()
}

/// A surrogate together with the exhaustive check that certifies it.
#[derive(Debug, Clone)]
pub struct PositivityCertificate {
    pub surrogate: Polynomial,
    pub original: Polynomial,
    pub vars: Vec<Variable>,
    pub checked_points: usize,
    pub min_positive_value: Rational,
}

#[derive(Debug, Serialize)]
pub struct CertificatePoint {
    pub point: Vec<u8>,
    pub original: String,
    pub surrogate: String,
}

#[derive(Debug, Serialize)]
pub struct CertificateReport {
    pub vars: Vec<String>,
    pub original: String,
    pub surrogate: String,
    pub checked_points: usize,
    pub min_positive_value: String,
    pub points: Vec<CertificatePoint>,
}

impl PositivityCertificate {
    /// Full point table for audit.
    pub fn report(&self) -> CertificateReport {
        let n = self.vars.len();
        let mut points = Vec::with_capacity(1 << n);
        for bits in 0u64..(1u64 << n) {
            let assign = assignment_from_bits(&self.vars, bits);
            let ov = self.original.eval_binary(&assign).unwrap();
            let sv = self.surrogate.eval_binary(&assign).unwrap();
            points.push(CertificatePoint {
                point: (0..n).map(|k| ((bits >> k) & 1) as u8).collect(),
                original: ov.to_string(),
                surrogate: sv.to_string(),
            });
        }
        CertificateReport {
            vars: self.vars.iter().map(|v| v.name()).collect(),
            original: self.original.to_text(),
            surrogate: self.surrogate.to_text(),
            checked_points: self.checked_points,
            min_positive_value: self.min_positive_value.to_string(),
            points,
        }
    }
}

fn assignment_from_bits(vars: &[Variable], bits: u64) -> HashMap<Variable, u8> {
    vars.iter()
        .enumerate()
        .map(|(k, &v)| (v, ((bits >> k) & 1) as u8))
        .collect()
}

// ----------------------------------------------------------------------
// Cell surrogate
// ----------------------------------------------------------------------

/// The six generic cell variables in the order of the golden plex basis:
/// P, Q, the incoming sum S, the outgoing sum Sp, the incoming carry Z, and
/// the outgoing carry Zp.
pub fn cell_template_vars() -> [Variable; 6] {
    ["P", "Q", "S", "Sp", "Z", "Zp"].map(Variable::named)
}

/// The generic cell constraint Q P + S + Z - Sp - 2 Zp over the template
/// variables.
pub fn cell_polynomial() -> Polynomial {
    Polynomial::parse("Q*P + S + Z - Sp - 2*Zp").unwrap()
}

/// The golden plex order of the cell ring.
pub fn cell_term_order() -> TermOrder {
    TermOrder::plex(cell_template_vars().to_vec())
}

/// Reduced Groebner basis of the generic cell ideal (the cell constraint
/// plus the six binarizations) under the golden plex order.
pub fn cell_groebner_basis(budget: &GroebnerBudget) -> Result<Vec<Polynomial>, ReduceError> {
    let mut gens = vec![cell_polynomial()];
    for v in cell_template_vars() {
        let x = Polynomial::var(v);
        gens.push(&(&x * &x) - &x);
    }
    let gb = buchberger(&gens, &cell_term_order(), budget)?;
    Ok(gb.generators)
}

/// The degree <= 2 non-binarization elements of the cell basis, ordered so
/// the cell constraint itself comes first and the rest ascend by leading
/// monomial: the coefficient slots a_1..a_6.
pub fn cell_quadratic_basis(budget: &GroebnerBudget) -> Result<Vec<Polynomial>, ReduceError> {
    let ord = cell_term_order();
    let binarizations: Vec<Polynomial> = cell_template_vars()
        .iter()
        .map(|&v| {
            let x = Polynomial::var(v);
            &(&x * &x) - &x
        })
        .collect();
    let h = cell_polynomial();
    let mut quads: Vec<Polynomial> = cell_groebner_basis(budget)?
        .into_iter()
        .filter(|g| g.degree() <= 2 && !binarizations.contains(g))
        .collect();
    let pos = quads
        .iter()
        .position(|g| g == &h)
        .expect("cell constraint is an element of its own basis");
    let first = quads.remove(pos);
    quads.sort_by(|a, b| {
        let (_, ma) = a.leading_term(&ord).unwrap();
        let (_, mb) = b.leading_term(&ord).unwrap();
        ord.compare(&ma, &mb)
    });
    let mut out = vec![first];
    out.extend(quads);
    Ok(out)
}

// ----------------------------------------------------------------------
// W-penalty surrogate
// ----------------------------------------------------------------------

/// Template variables (P, Q, W) for the product penalty.
pub fn penalty_template_vars() -> [Variable; 3] {
    ["P", "Q", "W"].map(Variable::named)
}

/// The three quadratic basis terms of the product ideal <PQ - W,
/// binarizations>: QW - W, PW - W, PQ - W. Coefficient slots (a, b, c).
pub fn penalty_basis() -> Vec<Polynomial> {
    let parse = |t: &str| Polynomial::parse(t).unwrap();
    vec![parse("Q*W - W"), parse("P*W - W"), parse("P*Q - W")]
}

/// The product constraint PQ - W whose zero set the penalty must replicate.
pub fn penalty_original() -> Polynomial {
    Polynomial::parse("P*Q - W").unwrap()
}

// ----------------------------------------------------------------------
// Constraint derivation and coefficient solving
// ----------------------------------------------------------------------

/// Evaluates the basis terms over every binary point. Points where the
/// original vanishes must kill every term (they are ideal members; asserted);
/// every other point contributes the strict inequality
/// sum_k a_k t_k(point) > 0. Returns the deduplicated forms.
pub fn derive_positivity_constraints(
    basis_terms: &[Polynomial],
    original: &Polynomial,
    vars: &[Variable],
) -> Result<Vec<LinearForm>, ReduceError> {
    if vars.len() > 20 {
        return Err(ReduceError::TooManyVariables(vars.len()));
    }
    let mut forms: Vec<LinearForm> = Vec::new();
    for bits in 0u64..(1u64 << vars.len()) {
        let assign = assignment_from_bits(vars, bits);
        let ov = original.eval_binary(&assign).unwrap();
        let tv: Vec<Rational> = basis_terms
            .iter()
            .map(|t| t.eval_binary(&assign).unwrap())
            .collect();
        if ov.is_zero() {
            assert!(
                tv.iter().all(|v| v.is_zero()),
                "basis term does not vanish on the variety at point {bits:b}"
            );
        } else {
            forms.push(LinearForm::new(tv).normalized());
        }
    }
    forms.sort();
    forms.dedup();
    Ok(forms)
}

/// Strictness margin demanded of float solutions.
pub const FLOAT_MARGIN: f64 = 1e-6;

/// Finds coefficients satisfying every strict inequality.
///
/// `Preset` returns the fixed integral solutions (verified exactly before
/// being handed back). The continuous objectives run a penalty-function
/// minimization with coordinate descent; the result is only promised to be
/// feasible, the objective value is best-effort.
pub fn solve_coefficients(
    constraints: &[LinearForm],
    objective: Objective,
) -> Result<CoefficientSolution, ReduceError> {
    let arity = constraints
        .first()
        .map(|f| f.coeffs.len())
        .ok_or_else(|| ReduceError::Infeasible("empty constraint set".into()))?;
    match objective {
        Objective::Preset => {
            let preset = match arity {
                6 => preset_cell_coefficients(),
                3 => preset_penalty_coefficients(),
                n => {
                    return Err(ReduceError::Infeasible(format!(
                        "no preset solution for a {n}-coefficient family"
                    )))
                }
            };
            verify_exact(constraints, &preset)?;
            Ok(CoefficientSolution::exact(Objective::Preset, preset))
        }
        Objective::UnitBand | Objective::RatioNormalized => {
            let a = descend(constraints, objective, arity);
            let worst = constraints
                .iter()
                .map(|f| f.eval_f64(&a))
                .fold(f64::INFINITY, f64::min);
            if worst < FLOAT_MARGIN {
                return Err(ReduceError::Infeasible(format!(
                    "coordinate descent stalled with margin {worst:.3e}"
                )));
            }
            Ok(CoefficientSolution {
                objective,
                values: CoefficientValues::Approx(a),
            })
        }
    }
}

fn verify_exact(constraints: &[LinearForm], a: &[Rational]) -> Result<(), ReduceError> {
    for f in constraints {
        let v = f.eval_exact(a);
        if !v.is_positive() {
            return Err(ReduceError::Infeasible(format!(
                "constraint {} evaluates to {} (must be > 0)",
                f.to_text(),
                v
            )));
        }
    }
    Ok(())
}

/// The two continuous objectives over the six cell coefficients;
/// for other arities feasibility alone drives the descent.
fn objective_value(a: &[f64], objective: Objective) -> f64 {
    if a.len() != 6 {
        return 0.0;
    }
    let (a1, a2, a3, a4, a5, a6) = (a[0], a[1], a[2], a[3], a[4], a[5]);
    let groups = [
        (1.0, -a1 + a5 + a6),
        (1.0, -2.0 * a1 + a3 + 2.0 * a5 + 2.0 * a6),
        (1.0, a1 - a2 - a5 - a6),
        (1.0, a1 - a4 - a5 - a6),
        (2.0, a2),
        (1.0, a1),
        (2.0, a3),
        (2.0, a4),
        (2.0, a5),
        (2.0, a6),
        (1.0, 2.0 * a5),
        (1.0, 2.0 * a6),
    ];
    let target = |sq: f64| match objective {
        Objective::UnitBand => sq - 1.0,
        Objective::RatioNormalized => sq - a2.abs(),
        Objective::Preset => 0.0,
    };
    groups
        .iter()
        .map(|&(w, g)| {
            let d = target(g * g);
            w * d * d
        })
        .sum()
}

fn descend(constraints: &[LinearForm], objective: Objective, arity: usize) -> Vec<f64> {
    // hinge penalty keeps iterates strictly feasible once found
    let margin = 1e-3;
    let weight = 1e4;
    let cost = |a: &[f64]| -> f64 {
        let mut c = objective_value(a, objective);
        for f in constraints {
            let v = f.eval_f64(a);
            if v < margin {
                let d = margin - v;
                c += weight * d * d;
            }
        }
        c
    };
    // neutral start: a scaled-down copy of the integral solutions
    let mut a: Vec<f64> = match arity {
        6 => vec![0.25, -1.0, 1.0, -1.0, 0.5, 0.5],
        3 => vec![-1.0, -1.0, 0.5],
        n => vec![0.0; n],
    };
    let mut best = cost(&a);
    let mut step = 1.0f64;
    while step > 1e-7 {
        let mut improved = false;
        for k in 0..arity {
            for dir in [step, -step] {
                let saved = a[k];
                a[k] = saved + dir;
                let c = cost(&a);
                if c + 1e-15 < best {
                    best = c;
                    improved = true;
                } else {
                    a[k] = saved;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    a
}

// ----------------------------------------------------------------------
// Certificates
// ----------------------------------------------------------------------

fn certify(
    surrogate: Polynomial,
    original: Polynomial,
    vars: &[Variable],
) -> Result<PositivityCertificate, ReduceError> {
    let n = vars.len();
    let mut min_pos: Option<Rational> = None;
    for bits in 0u64..(1u64 << n) {
        let assign = assignment_from_bits(vars, bits);
        let ov = original.eval_binary(&assign).unwrap();
        let sv = surrogate.eval_binary(&assign).unwrap();
        if ov.is_zero() {
            if !sv.is_zero() {
                return Err(ReduceError::PositivityViolated(format!(
                    "surrogate is {sv} at a zero of the original (point {bits:b})"
                )));
            }
        } else {
            if !sv.is_positive() {
                return Err(ReduceError::PositivityViolated(format!(
                    "surrogate is {sv} at a nonzero point ({bits:b})"
                )));
            }
            min_pos = Some(match min_pos {
                None => sv,
                Some(cur) => cur.min(sv),
            });
        }
    }
    let min_positive_value = min_pos.ok_or_else(|| {
        ReduceError::PositivityViolated("original vanishes everywhere".into())
    })?;
    Ok(PositivityCertificate {
        surrogate,
        original,
        vars: vars.to_vec(),
        checked_points: 1 << n,
        min_positive_value,
    })
}

/// Builds H+ = sum a_k t_k over the generic cell variables and certifies it
/// against the cell constraint over all 64 points.
pub fn cell_positive_hamiltonian(
    coeffs: &CoefficientSolution,
) -> Result<PositivityCertificate, ReduceError> {
    let exact = coeffs.as_exact().ok_or_else(|| {
        ReduceError::PositivityViolated(
            "exact coefficients required for a certified cell surrogate".into(),
        )
    })?;
    let basis = cell_quadratic_basis(&GroebnerBudget::default())?;
    assert_eq!(exact.len(), basis.len(), "six cell coefficients expected");
    let mut surrogate = Polynomial::zero();
    for (c, t) in exact.iter().zip(&basis) {
        surrogate = &surrogate + &t.scale(c);
    }
    certify(surrogate, cell_polynomial(), &cell_template_vars())
}

/// Builds the product penalty a(QW - W) + b(PW - W) + c(PQ - W) and
/// certifies it against PQ - W over all 8 points.
pub fn quadratize_penalty(
    coeffs: &CoefficientSolution,
) -> Result<PositivityCertificate, ReduceError> {
    let exact = coeffs.as_exact().ok_or_else(|| {
        ReduceError::PositivityViolated(
            "exact coefficients required for a certified penalty".into(),
        )
    })?;
    let basis = penalty_basis();
    assert_eq!(exact.len(), basis.len(), "three penalty coefficients expected");
    let mut surrogate = Polynomial::zero();
    for (c, t) in exact.iter().zip(&basis) {
        surrogate = &surrogate + &t.scale(c);
    }
    certify(surrogate, penalty_original(), &penalty_template_vars())
}

/// Instantiates a template polynomial at concrete slot values (variables or
/// 0/1 constants).
pub fn instantiate(template: &Polynomial, slots: &[(Variable, Polynomial)]) -> Polynomial {
    let mut out = template.clone();
    for (v, value) in slots {
        out = out.substitute(*v, value);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_basis_is_t1_to_t6() {
        let basis = cell_quadratic_basis(&GroebnerBudget::default()).unwrap();
        assert_eq!(basis.len(), 6);
        let parse = |t: &str| Polynomial::parse(t).unwrap();
        assert_eq!(basis[0], cell_polynomial());
        assert_eq!(basis[1], parse("Sp*Z - Sp*Zp + Z*Zp - Z"));
        assert_eq!(basis[2], parse("S*Z - S*Zp - Z*Zp + Zp"));
        assert_eq!(basis[3], parse("S*Sp + S*Zp - S - Sp*Zp"));
        assert_eq!(basis[4], parse("Q*S - Q*Sp + Q*Z - 2*Q*Zp - S + Sp - Z + 2*Zp"));
        assert_eq!(basis[5], parse("P*S - P*Sp + P*Z - 2*P*Zp - S + Sp - Z + 2*Zp"));
    }

    #[test]
    fn w_constraints_match_reported_set() {
        let forms = derive_positivity_constraints(
            &penalty_basis(),
            &penalty_original(),
            &penalty_template_vars(),
        )
        .unwrap();
        let mut expected: Vec<LinearForm> = vec![
            LinearForm::from_ints(&[-1, -1, -1]),
            LinearForm::from_ints(&[0, -1, -1]),
            LinearForm::from_ints(&[-1, 0, -1]),
            LinearForm::from_ints(&[0, 0, 1]),
        ];
        expected.sort();
        assert_eq!(forms, expected);
    }

    #[test]
    fn zero_original_gives_no_constraints() {
        // with the zero original every point is a zero of the variety, so a
        // consistent basis (terms vanishing on the whole cube) produces no
        // inequalities at all
        let vars = penalty_template_vars();
        let binarizations: Vec<Polynomial> = vars
            .iter()
            .map(|&v| {
                let x = Polynomial::var(v);
                &(&x * &x) - &x
            })
            .collect();
        let forms =
            derive_positivity_constraints(&binarizations, &Polynomial::zero(), &vars).unwrap();
        assert!(forms.is_empty());
    }

    #[test]
    fn preset_solutions_verify() {
        let cell = derive_positivity_constraints(
            &cell_quadratic_basis(&GroebnerBudget::default()).unwrap(),
            &cell_polynomial(),
            &cell_template_vars(),
        )
        .unwrap();
        let sol = solve_coefficients(&cell, Objective::Preset).unwrap();
        assert_eq!(sol.as_exact().unwrap(), preset_cell_coefficients().as_slice());

        let w = derive_positivity_constraints(
            &penalty_basis(),
            &penalty_original(),
            &penalty_template_vars(),
        )
        .unwrap();
        let sol = solve_coefficients(&w, Objective::Preset).unwrap();
        assert_eq!(sol.as_exact().unwrap(), preset_penalty_coefficients().as_slice());
    }

    #[test]
    fn unit_band_is_feasible() {
        let cell = derive_positivity_constraints(
            &cell_quadratic_basis(&GroebnerBudget::default()).unwrap(),
            &cell_polynomial(),
            &cell_template_vars(),
        )
        .unwrap();
        for objective in [Objective::UnitBand, Objective::RatioNormalized] {
            let sol = solve_coefficients(&cell, objective).unwrap();
            let a = sol.as_f64();
            for f in &cell {
                assert!(f.eval_f64(&a) >= FLOAT_MARGIN, "{} infeasible", f.to_text());
            }
        }
    }

    #[test]
    fn cell_certificate_preset() {
        let sol = CoefficientSolution::exact(Objective::Preset, preset_cell_coefficients());
        let cert = cell_positive_hamiltonian(&sol).unwrap();
        assert_eq!(cert.checked_points, 64);
        assert!(cert.min_positive_value >= rat(1));
    }

    #[test]
    fn cell_certificate_zero_coefficients_fail() {
        let sol = CoefficientSolution::exact(Objective::Preset, vec![rat(0); 6]);
        assert!(matches!(
            cell_positive_hamiltonian(&sol),
            Err(ReduceError::PositivityViolated(_))
        ));
    }

    #[test]
    fn penalty_certificate_preset_values() {
        let sol = CoefficientSolution::exact(Objective::Preset, preset_penalty_coefficients());
        let cert = quadratize_penalty(&sol).unwrap();
        assert_eq!(cert.checked_points, 8);
        assert_eq!(cert.min_positive_value, rat(1));
        // spot values: penalty = PQ - 2PW - 2QW + 3W
        let [p, q, w] = penalty_template_vars();
        let at = |pb: u8, qb: u8, wb: u8| {
            let assign: HashMap<Variable, u8> =
                [(p, pb), (q, qb), (w, wb)].into_iter().collect();
            cert.surrogate.eval_binary(&assign).unwrap()
        };
        assert_eq!(at(1, 1, 1), rat(0));
        assert_eq!(at(1, 1, 0), rat(1));
        assert_eq!(at(0, 1, 1), rat(1));
    }

    #[test]
    fn certificate_report_has_full_point_table() {
        let sol = CoefficientSolution::exact(Objective::Preset, preset_penalty_coefficients());
        let cert = quadratize_penalty(&sol).unwrap();
        let report = cert.report();
        assert_eq!(report.points.len(), 8);
        serde_json::to_string(&report).unwrap();
    }
}
