//! Cutoff Groebner preprocessing and assembly of the final Hamiltonian.
//!
//! For the column algorithm: compute a reduced grevlex basis of a head (and
//! optionally tail) window of the column equations, eliminate variables the
//! basis pins down, take normal forms of the remaining equations, replace
//! surviving quadratic monomials by W variables, and square everything into
//! a positive quadratic polynomial plus product penalties.
//!
//! For the cell algorithm: instantiate the certified positive cell surrogate
//! at every cell and apply the binary-preserving substitutions a window
//! basis provides.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::encode::{cell_decomposition, p_bit, q_bit, FactoringInstance, PolySystem, SystemKind};
use crate::groebner::{buchberger, GroebnerBasis, GroebnerBudget, GroebnerError, Reducer};
use crate::order::TermOrder;
use crate::poly::{rat, Monomial, Polynomial, Rational};
use crate::reduce::{instantiate, PositivityCertificate};
use crate::vars::{VarRole, Variable, VariableRegistry};

#[derive(Debug, Error)]
pub enum PreprocessError {
    #[error("invalid cutoff: {0}")]
    BadCutoff(String),
    #[error("{0}")]
    Budget(GroebnerError),
    #[error("cutoff basis expects a column system")]
    WrongKind,
    #[error("degree violation in the final Hamiltonian: {0}")]
    DegreeViolation(String),
}

impl From<GroebnerError> for PreprocessError {
    fn from(e: GroebnerError) -> Self {
        PreprocessError::Budget(e)
    }
}

/// Window selection for the cutoff basis: the leading `cutoff` equations,
/// plus the tail from `second_cutoff` on when set.
#[derive(Debug, Clone)]
pub struct CutoffConfig {
    pub cutoff: u32,
    pub second_cutoff: Option<u32>,
    pub budget: GroebnerBudget,
}

impl CutoffConfig {
    pub fn full(len: usize, budget: GroebnerBudget) -> CutoffConfig {
        CutoffConfig {
            cutoff: len as u32,
            second_cutoff: None,
            budget,
        }
    }

    fn validate(&self, len: usize) -> Result<(), PreprocessError> {
        if self.cutoff == 0 {
            return Err(PreprocessError::BadCutoff("cutoff must be >= 1".into()));
        }
        if self.cutoff as usize > len {
            return Err(PreprocessError::BadCutoff(format!(
                "cutoff {} exceeds the {} equations",
                self.cutoff, len
            )));
        }
        if let Some(s) = self.second_cutoff {
            if s <= self.cutoff || s as usize > len {
                return Err(PreprocessError::BadCutoff(format!(
                    "second cutoff {} must lie in ({}, {}]",
                    s, self.cutoff, len
                )));
            }
        }
        Ok(())
    }
}

/// The grevlex preprocessing order: registry order with carries last.
/// W variables are introduced only after preprocessing and never appear in
/// the basis.
pub fn preprocessing_order(registry: &VariableRegistry) -> TermOrder {
    TermOrder::grevlex(registry.carries_last())
}

fn binarization(v: Variable) -> Polynomial {
    let x = Polynomial::var(v);
    &(&x * &x) - &x
}

/// Reduced grevlex basis of the windowed subsystem plus the binarizations of
/// every variable appearing in it.
pub fn cutoff_basis(
    system: &PolySystem,
    cfg: &CutoffConfig,
) -> Result<GroebnerBasis, PreprocessError> {
    if system.kind != SystemKind::Column {
        return Err(PreprocessError::WrongKind);
    }
    cfg.validate(system.len())?;
    let mut gens: Vec<Polynomial> = system.constraints[..cfg.cutoff as usize].to_vec();
    if let Some(s) = cfg.second_cutoff {
        gens.extend_from_slice(&system.constraints[s as usize - 1..]);
    }
    let mut vars: BTreeSet<Variable> = BTreeSet::new();
    for g in &gens {
        vars.extend(g.variables());
    }
    for &v in &vars {
        gens.push(binarization(v));
    }
    let ord = preprocessing_order(&system.registry);
    Ok(buchberger(&gens, &ord, &cfg.budget)?)
}

/// Tries the full system first and halves the head cutoff (with a
/// symmetric tail window) until the Groebner run fits the budget.
pub fn auto_cutoff_basis(
    system: &PolySystem,
    budget: &GroebnerBudget,
) -> Result<(GroebnerBasis, CutoffConfig), PreprocessError> {
    let len = system.len() as u32;
    let mut cutoff = len;
    loop {
        let second = if cutoff == len {
            None
        } else {
            Some((len - cutoff + 1).max(cutoff + 1))
        };
        let cfg = CutoffConfig {
            cutoff,
            second_cutoff: second.filter(|&s| s <= len),
            budget: budget.clone(),
        };
        match cutoff_basis(system, &cfg) {
            Ok(basis) => return Ok((basis, cfg)),
            Err(PreprocessError::Budget(_)) if cutoff > 1 => cutoff /= 2,
            Err(e) => return Err(e),
        }
    }
}

/// An eliminated variable and the expression over surviving variables that
/// reconstructs it. The expression is {0,1}-valued on the whole cube.
pub type Elimination = (Variable, Polynomial);

/// Per-stage bookkeeping serialized into CLI reports.
#[derive(Debug, Clone, Serialize, Default)]
pub struct StageReport {
    pub vars_before: usize,
    pub vars_after: usize,
    pub constraints_before: usize,
    pub constraints_after: usize,
    pub eliminated: Vec<String>,
    pub basis_size: usize,
}

/// A system rewritten modulo a cutoff basis: the basis' own non-binarization
/// elements (minus those consumed as eliminations) followed by the nonzero
/// normal forms of the out-of-window equations.
#[derive(Debug, Clone)]
pub struct ReducedSystem {
    pub system: PolySystem,
    pub eliminated: Vec<Elimination>,
    pub original_registry: VariableRegistry,
    pub report: StageReport,
}

/// True when `expr` takes only the values 0 and 1 over binary assignments
/// of its variables, so substituting it for a binary variable preserves the
/// cube semantics exactly.
pub fn binary_valued_on_cube(expr: &Polynomial) -> bool {
    let vars: Vec<Variable> = expr.variables().into_iter().collect();
    if vars.len() > 16 {
        return false;
    }
    for bits in 0u64..(1u64 << vars.len()) {
        let assign: HashMap<Variable, u8> = vars
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, ((bits >> k) & 1) as u8))
            .collect();
        let val = expr.eval_binary(&assign).unwrap();
        if !(val.is_zero() || val == rat(1)) {
            return false;
        }
    }
    true
}

/// Rewrites the system modulo the basis. Window equations reduce to zero and
/// are replaced by the basis' own content; basis elements of the shape
/// v - expr with expr {0,1}-valued are consumed as eliminations instead of
/// constraints, and v disappears from the problem.
pub fn reduce_system(system: &PolySystem, basis: &GroebnerBasis) -> ReducedSystem {
    let reducer = basis.reducer();
    let mut constraints = Vec::new();
    let mut labels = Vec::new();
    let mut eliminated: Vec<Elimination> = Vec::new();

    for (i, b) in basis.generators.iter().enumerate() {
        // skip binarizations x^2 - x
        if is_binarization(b) {
            continue;
        }
        if let Some((v, expr)) = as_elimination(b, &basis.order) {
            eliminated.push((v, expr));
            continue;
        }
        constraints.push(b.clone());
        labels.push(format!("B_{}", i + 1));
    }
    for (h, label) in system.constraints.iter().zip(&system.labels) {
        let nf = reducer.normal_form(h);
        if !nf.is_zero() {
            constraints.push(nf);
            labels.push(format!("NF_{label}"));
        }
    }

    let mut registry = VariableRegistry::new();
    // registry order mirrors the original so downstream grevlex orders stay
    // deterministic; keep factor bits visible even when unconstrained
    let elim_set: BTreeSet<Variable> = eliminated.iter().map(|&(v, _)| v).collect();
    let mut used: BTreeSet<Variable> = BTreeSet::new();
    for c in &constraints {
        used.extend(c.variables());
    }
    for &v in system.registry.vars() {
        let keep = used.contains(&v)
            || (!elim_set.contains(&v)
                && matches!(v.role(), VarRole::FactorP | VarRole::FactorQ));
        if keep {
            registry.insert(v);
        }
    }

    let report = StageReport {
        vars_before: system.registry.len(),
        vars_after: registry.len(),
        constraints_before: system.len(),
        constraints_after: constraints.len(),
        eliminated: eliminated.iter().map(|(v, _)| v.name()).collect(),
        basis_size: basis.len(),
    };
    ReducedSystem {
        system: PolySystem {
            constraints,
            labels,
            registry,
            kind: system.kind,
        },
        eliminated,
        original_registry: system.registry.clone(),
        report,
    }
}

fn is_binarization(p: &Polynomial) -> bool {
    if p.num_terms() != 2 {
        return false;
    }
    let vars: Vec<Variable> = p.variables().into_iter().collect();
    if vars.len() != 1 {
        return false;
    }
    let v = vars[0];
    p == &binarization(v)
}

/// Recognizes a reduced-basis element v + tail as the elimination
/// v := -tail when the tail is {0,1}-valued on the cube.
fn as_elimination(b: &Polynomial, ord: &TermOrder) -> Option<(Variable, Polynomial)> {
    let (lc, lm) = b.leading_term(ord).ok()?;
    if lm.degree() != 1 || lc != rat(1) {
        return None;
    }
    let v = lm.variables().next().unwrap();
    let expr = &Polynomial::var(v) - b;
    if expr.variables().contains(&v) {
        return None;
    }
    if !binary_valued_on_cube(&expr) {
        return None;
    }
    Some((v, expr))
}

// ----------------------------------------------------------------------
// W substitution and the final Hamiltonian
// ----------------------------------------------------------------------

/// One product substitution: the W variable, the monomial it replaced, and
/// the two factor variables of that monomial.
#[derive(Debug, Clone)]
pub struct Substitution {
    pub w: Variable,
    pub replaced: Monomial,
    pub pair: (Variable, Variable),
}

#[derive(Debug, Clone, Serialize)]
pub struct SubstitutionReport {
    pub w: String,
    pub replaced: String,
}

/// The solver-facing positive quadratic polynomial with its bookkeeping.
#[derive(Debug, Clone)]
pub struct FinalHamiltonian {
    pub hamiltonian: Polynomial,
    pub registry: VariableRegistry,
    pub substitutions: Vec<Substitution>,
    pub eliminated: Vec<Elimination>,
}

impl FinalHamiltonian {
    pub fn substitution_report(&self) -> Vec<SubstitutionReport> {
        self.substitutions
            .iter()
            .map(|s| SubstitutionReport {
                w: s.w.name(),
                replaced: monomial_text(&s.replaced),
            })
            .collect()
    }

    /// Extends an assignment of the original variables with the W values
    /// (products of their pair variables, in substitution order so chains
    /// resolve).
    pub fn extend_assignment(&self, assign: &mut HashMap<Variable, u8>) {
        for s in &self.substitutions {
            let a = assign.get(&s.pair.0).copied().unwrap_or(0);
            let b = assign.get(&s.pair.1).copied().unwrap_or(0);
            assign.insert(s.w, a & b);
        }
    }
}

fn monomial_text(m: &Monomial) -> String {
    Polynomial::term(rat(1), m.clone()).to_text()
}

fn product_w(a: i64, b: i64) -> Variable {
    Variable::new(&format!("W_{a}_{b}"), VarRole::Product, &[a, b])
}

fn synthetic_w(u: Variable, v: Variable) -> Variable {
    Variable::new(
        &format!("W__{}__{}", u.name(), v.name()),
        VarRole::Product,
        &[],
    )
}

/// Replaces every surviving quadratic monomial by a W variable and squares
/// the (now linear) constraints into the final Hamiltonian, adding one
/// certified product penalty per W actually used.
///
/// The substitution table is seeded with LT(NF(P_a Q_b)) for every factor
/// bit pair whose normal form is still quadratic, exactly the paper's W
/// variables; any other monomial that blocks linearity afterwards gets a
/// fresh synthetic W the same way.
pub fn substitute_products(
    reduced: &ReducedSystem,
    basis: &GroebnerBasis,
    penalty: &PositivityCertificate,
) -> Result<FinalHamiltonian, PreprocessError> {
    let ord = &basis.order;
    let reducer = basis.reducer();

    // seed: W_{a,b} for each factor-bit pair with a still-quadratic NF
    let mut table: Vec<Substitution> = Vec::new();
    let mut by_monomial: HashMap<Monomial, usize> = HashMap::new();
    let p_idx: Vec<i64> = sorted_indices(&reduced.original_registry, VarRole::FactorP);
    let q_idx: Vec<i64> = sorted_indices(&reduced.original_registry, VarRole::FactorQ);
    for &b in &q_idx {
        for &a in &p_idx {
            let prod = Polynomial::term(
                rat(1),
                Monomial::from_powers(&[(p_bit(a as u32), 1), (q_bit(b as u32), 1)]),
            );
            let nf = reducer.normal_form(&prod);
            if nf.degree() != 2 {
                continue;
            }
            let (_, lm) = nf.leading_term(ord).unwrap();
            if lm.degree() != 2 || by_monomial.contains_key(&lm) {
                continue;
            }
            let pair = monomial_pair(&lm);
            by_monomial.insert(lm.clone(), table.len());
            table.push(Substitution {
                w: product_w(a, b),
                replaced: lm,
                pair,
            });
        }
    }

    // rewrite constraints to linearity, inventing synthetic Ws on demand
    let mut constraints = reduced.system.constraints.clone();
    let mut used = vec![false; table.len()];
    loop {
        let mut blocking: Option<Monomial> = None;
        'scan: for c in &constraints {
            for (m, _) in c.terms() {
                if m.degree() >= 2 {
                    blocking = Some(match blocking {
                        None => m.clone(),
                        Some(best) => {
                            if ord.compare(m, &best) == std::cmp::Ordering::Greater {
                                m.clone()
                            } else {
                                best
                            }
                        }
                    });
                    if m.degree() > 2 {
                        // rewrite the highest-degree offender first
                        blocking = Some(m.clone());
                        break 'scan;
                    }
                }
            }
        }
        let Some(target) = blocking else { break };
        // find a table entry dividing the target, or invent one from the
        // target's first two variables
        let entry = table
            .iter()
            .position(|s| s.replaced.divides(&target))
            .unwrap_or_else(|| {
                let pair = monomial_pair(&target);
                let lm = Monomial::from_powers(&[(pair.0, 1), (pair.1, 1)]);
                let w = synthetic_w(pair.0, pair.1);
                let idx = table.len();
                by_monomial.insert(lm.clone(), idx);
                table.push(Substitution {
                    w,
                    replaced: lm,
                    pair,
                });
                used.push(false);
                idx
            });
        let (mu, w) = (table[entry].replaced.clone(), table[entry].w);
        let mut fired = false;
        for c in constraints.iter_mut() {
            let mut out = Polynomial::zero();
            for (m, coeff) in c.terms() {
                match m.try_div(&mu) {
                    Some(rest) => {
                        out.add_term(&rest.mul(&Monomial::var(w)), coeff);
                        fired = true;
                    }
                    None => out.add_term(m, coeff),
                }
            }
            *c = out;
        }
        if fired {
            used[entry] = true;
        } else {
            return Err(PreprocessError::DegreeViolation(format!(
                "no substitution applies to monomial {}",
                monomial_text(&target)
            )));
        }
    }

    for c in &constraints {
        if c.degree() > 1 {
            return Err(PreprocessError::DegreeViolation(format!(
                "constraint still nonlinear after substitution: {c}"
            )));
        }
    }

    // H = sum of squared linear constraints + penalties for used Ws
    let mut h = Polynomial::zero();
    for c in &constraints {
        h = &h + &c.square();
    }
    let [tpl_p, tpl_q, tpl_w] = crate::reduce::penalty_template_vars();
    let mut substitutions = Vec::new();
    for (s, &fired) in table.iter().zip(&used) {
        if !fired {
            continue;
        }
        let pen = instantiate(
            &penalty.surrogate,
            &[
                (tpl_p, Polynomial::var(s.pair.0)),
                (tpl_q, Polynomial::var(s.pair.1)),
                (tpl_w, Polynomial::var(s.w)),
            ],
        );
        h = &h + &pen;
        substitutions.push(s.clone());
    }

    if h.degree() > 2 {
        return Err(PreprocessError::DegreeViolation(format!(
            "final Hamiltonian has degree {}",
            h.degree()
        )));
    }

    let mut registry = reduced.system.registry.clone();
    for s in &substitutions {
        registry.insert(s.w);
    }
    Ok(FinalHamiltonian {
        hamiltonian: h,
        registry,
        substitutions,
        eliminated: reduced.eliminated.clone(),
    })
}

fn sorted_indices(registry: &VariableRegistry, role: VarRole) -> Vec<i64> {
    let mut idx: Vec<i64> = registry
        .with_role(role)
        .iter()
        .filter_map(|v| v.index())
        .collect();
    idx.sort_unstable();
    idx
}

/// The two variables of a degree >= 2 monomial that a W replaces, by name.
fn monomial_pair(m: &Monomial) -> (Variable, Variable) {
    let mut vars: Vec<Variable> = Vec::new();
    for &(v, e) in m.powers() {
        for _ in 0..e.min(2) {
            vars.push(v);
        }
    }
    vars.sort_by_key(|v| v.name());
    assert!(vars.len() >= 2, "monomial {m:?} is not quadratic");
    assert_ne!(vars[0], vars[1], "squares are reduced by binarizations");
    (vars[0], vars[1])
}

// ----------------------------------------------------------------------
// Cell pipeline
// ----------------------------------------------------------------------

/// The cell-side Hamiltonian: a certified-positive surrogate per cell plus
/// the squared final carry constraint, after binary-preserving
/// substitutions from a window basis.
#[derive(Debug, Clone)]
pub struct CellHamiltonian {
    pub hamiltonian: Polynomial,
    pub registry: VariableRegistry,
    pub eliminated: Vec<Elimination>,
    pub report: StageReport,
}

/// Reduced grevlex basis of the cells within the leading `band` columns of
/// the cell table (plus binarizations of their variables).
pub fn cell_band_basis(
    inst: &FactoringInstance,
    system: &PolySystem,
    band: u32,
    budget: &GroebnerBudget,
) -> Result<GroebnerBasis, PreprocessError> {
    if system.kind != SystemKind::Cell {
        return Err(PreprocessError::WrongKind);
    }
    let decomp = cell_decomposition(inst);
    let mut gens: Vec<Polynomial> = Vec::new();
    for (cell, h) in decomp.cells.iter().zip(&system.constraints) {
        if cell.column <= band {
            gens.push(h.clone());
        }
    }
    if decomp.final_column <= band {
        gens.push(decomp.final_constraint.clone());
    }
    if gens.is_empty() {
        return Err(PreprocessError::BadCutoff(format!(
            "band {band} selects no cells"
        )));
    }
    let mut vars: BTreeSet<Variable> = BTreeSet::new();
    for g in &gens {
        vars.extend(g.variables());
    }
    for &v in &vars {
        gens.push(binarization(v));
    }
    let ord = preprocessing_order(&system.registry);
    Ok(buchberger(&gens, &ord, budget)?)
}

/// Builds sum of instantiated cell surrogates plus the squared final carry
/// constraint; `band > 0` additionally applies every binary-preserving
/// substitution (v := 0, 1, w, or 1 - w) the band basis provides, the safe
/// fragment of normal-form reduction.
pub fn build_cell_hamiltonian(
    inst: &FactoringInstance,
    system: &PolySystem,
    cell_cert: &PositivityCertificate,
    band: u32,
    budget: &GroebnerBudget,
) -> Result<CellHamiltonian, PreprocessError> {
    let decomp = cell_decomposition(inst);
    let tpl = crate::reduce::cell_template_vars();

    let mut h = Polynomial::zero();
    for cell in &decomp.cells {
        let slots: Vec<(Variable, Polynomial)> = tpl
            .iter()
            .copied()
            .zip(cell.slots.iter().cloned())
            .collect();
        h = &h + &instantiate(&cell_cert.surrogate, &slots);
    }
    h = &h + &decomp.final_constraint.square();

    let mut eliminated: Vec<Elimination> = Vec::new();
    let mut basis_size = 0;
    if band > 0 {
        let basis = cell_band_basis(inst, system, band, budget)?;
        basis_size = basis.len();
        for b in &basis.generators {
            if is_binarization(b) {
                continue;
            }
            if let Some((v, expr)) = as_elimination_affine(b, &basis.order) {
                h = h.substitute(v, &expr);
                eliminated.push((v, expr));
            }
        }
    }

    let mut registry = VariableRegistry::new();
    let used = h.variables();
    let elim_set: BTreeSet<Variable> = eliminated.iter().map(|&(v, _)| v).collect();
    for &v in system.registry.vars() {
        if used.contains(&v)
            || (!elim_set.contains(&v)
                && matches!(v.role(), VarRole::FactorP | VarRole::FactorQ))
        {
            registry.insert(v);
        }
    }
    let report = StageReport {
        vars_before: system.registry.len(),
        vars_after: registry.len(),
        constraints_before: system.len(),
        constraints_after: system.len(),
        eliminated: eliminated.iter().map(|(v, _)| v.name()).collect(),
        basis_size,
    };
    Ok(CellHamiltonian {
        hamiltonian: h,
        registry,
        eliminated,
        report,
    })
}

/// Eliminations restricted to affine {0,1}-valued tails (v := 0, 1, w, or
/// 1 - w), the substitutions that keep a quadratic polynomial quadratic and
/// the cube semantics intact.
fn as_elimination_affine(b: &Polynomial, ord: &TermOrder) -> Option<(Variable, Polynomial)> {
    let (v, expr) = as_elimination(b, ord)?;
    if expr.degree() <= 1 {
        Some((v, expr))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encode::{
        build_column_system, build_cell_system, decode_bits, true_assignment,
    };
    use crate::reduce::{
        cell_positive_hamiltonian, preset_cell_coefficients, preset_penalty_coefficients,
        quadratize_penalty, CoefficientSolution, Objective,
    };

    fn penalty_cert() -> PositivityCertificate {
        quadratize_penalty(&CoefficientSolution::exact(
            Objective::Preset,
            preset_penalty_coefficients(),
        ))
        .unwrap()
    }

    fn cell_cert() -> PositivityCertificate {
        cell_positive_hamiltonian(&CoefficientSolution::exact(
            Objective::Preset,
            preset_cell_coefficients(),
        ))
        .unwrap()
    }

    #[test]
    fn cutoff_zero_is_rejected() {
        let inst = FactoringInstance::new(15, 2, 1).unwrap();
        let sys = build_column_system(&inst);
        let cfg = CutoffConfig {
            cutoff: 0,
            second_cutoff: None,
            budget: GroebnerBudget::default(),
        };
        assert!(matches!(
            cutoff_basis(&sys, &cfg),
            Err(PreprocessError::BadCutoff(_))
        ));
    }

    #[test]
    fn full_cutoff_m15_projects_to_truth() {
        let inst = FactoringInstance::new(15, 2, 1).unwrap();
        let sys = build_column_system(&inst);
        let cfg = CutoffConfig::full(sys.len(), GroebnerBudget::default());
        let basis = cutoff_basis(&sys, &cfg).unwrap();
        assert!(crate::groebner::is_groebner_basis(
            &basis.generators,
            &basis.order
        ));
        // binary zeros of the basis project to P = (0,1), Q = (1)
        let reduced = reduce_system(&sys, &basis);
        let mut assign: HashMap<Variable, u8> = HashMap::new();
        for c in &reduced.system.constraints {
            assert!(c.degree() <= 1, "full basis of M=15 is affine: {c}");
        }
        // reconstruct everything through the eliminations
        for &v in reduced.system.registry.vars() {
            assign.insert(v, 0);
        }
        // brute force the tiny surviving space
        let vars = reduced.system.registry.vars().to_vec();
        let mut hits = Vec::new();
        for bits in 0u64..(1 << vars.len()) {
            let mut a: HashMap<Variable, u8> = vars
                .iter()
                .enumerate()
                .map(|(k, &v)| (v, ((bits >> k) & 1) as u8))
                .collect();
            if reduced
                .system
                .constraints
                .iter()
                .all(|c| c.eval_binary(&a).unwrap().is_zero())
            {
                for (v, expr) in &reduced.eliminated {
                    let val = expr.eval_binary(&a).unwrap();
                    a.insert(*v, if val.is_zero() { 0 } else { 1 });
                }
                hits.push(decode_bits(&a, &inst));
            }
        }
        hits.sort_unstable();
        hits.dedup();
        assert_eq!(hits, vec![(5, 3)]);
        let _ = assign;
    }

    #[test]
    fn reduce_system_substitutes_forced_bits() {
        // Q_1 = 1 is forced for M = 15 at sizes (2,1); the reduced system
        // must not mention Q_1 anywhere
        let inst = FactoringInstance::new(15, 2, 1).unwrap();
        let sys = build_column_system(&inst);
        let cfg = CutoffConfig::full(sys.len(), GroebnerBudget::default());
        let basis = cutoff_basis(&sys, &cfg).unwrap();
        let reduced = reduce_system(&sys, &basis);
        let q1 = q_bit(1);
        assert!(reduced.eliminated.iter().any(|&(v, _)| v == q1));
        for c in &reduced.system.constraints {
            assert!(!c.variables().contains(&q1));
        }
        assert!(reduced.report.vars_after <= reduced.report.vars_before);
    }

    #[test]
    fn substitute_products_m15_ground_set() {
        let inst = FactoringInstance::new(15, 2, 1).unwrap();
        let sys = build_column_system(&inst);
        let (basis, _) = auto_cutoff_basis(&sys, &GroebnerBudget::default()).unwrap();
        let reduced = reduce_system(&sys, &basis);
        let fin = substitute_products(&reduced, &basis, &penalty_cert()).unwrap();
        assert!(fin.hamiltonian.degree() <= 2);
        // exhaustive ground set decodes to 15 = 5 * 3
        let vars = fin.registry.vars().to_vec();
        let mut winners = Vec::new();
        for bits in 0u64..(1 << vars.len()) {
            let mut a: HashMap<Variable, u8> = vars
                .iter()
                .enumerate()
                .map(|(k, &v)| (v, ((bits >> k) & 1) as u8))
                .collect();
            let e = fin.hamiltonian.eval_binary(&a).unwrap();
            assert!(e >= rat(0), "Hamiltonian must be nonnegative");
            if e.is_zero() {
                for (v, expr) in &fin.eliminated {
                    let val = expr.eval_binary(&a).unwrap();
                    a.insert(*v, if val.is_zero() { 0 } else { 1 });
                }
                winners.push(decode_bits(&a, &inst));
            }
        }
        winners.sort_unstable();
        winners.dedup();
        assert_eq!(winners, vec![(5, 3)]);
    }

    #[test]
    fn true_assignment_zeroes_every_stage() {
        for (m, pp, qq) in [(15u64, 5u64, 3u64), (143, 13, 11), (899, 31, 29)] {
            let s_p = 64 - pp.leading_zeros() - 1;
            let s_q = 64 - qq.leading_zeros() - 1;
            let inst = FactoringInstance::new(m, s_p, s_q).unwrap();
            let sys = build_column_system(&inst);
            let truth = true_assignment(&sys, &inst, pp, qq).unwrap();
            for c in &sys.constraints {
                assert!(c.eval_binary(&truth).unwrap().is_zero());
            }
            let (basis, _) = auto_cutoff_basis(&sys, &GroebnerBudget::default()).unwrap();
            let reduced = reduce_system(&sys, &basis);
            for c in &reduced.system.constraints {
                assert!(c.eval_binary(&truth).unwrap().is_zero(), "M={m}: {c}");
            }
            let fin = substitute_products(&reduced, &basis, &penalty_cert()).unwrap();
            let mut extended = truth.clone();
            fin.extend_assignment(&mut extended);
            assert!(fin.hamiltonian.eval_binary(&extended).unwrap().is_zero());
        }
    }

    #[test]
    fn nf_of_linear_products_adds_no_w() {
        // full cutoff for M = 15 forces Q_1 = 1, so NF(P_a Q_1) is linear
        // and no W variable or penalty may be emitted
        let inst = FactoringInstance::new(15, 2, 1).unwrap();
        let sys = build_column_system(&inst);
        let cfg = CutoffConfig::full(sys.len(), GroebnerBudget::default());
        let basis = cutoff_basis(&sys, &cfg).unwrap();
        let reduced = reduce_system(&sys, &basis);
        let fin = substitute_products(&reduced, &basis, &penalty_cert()).unwrap();
        assert!(fin.substitutions.is_empty());
    }

    #[test]
    fn cell_hamiltonian_m15_ground_set() {
        let inst = FactoringInstance::new(15, 2, 1).unwrap();
        let sys = build_cell_system(&inst);
        for band in [0, 4] {
            let ch = build_cell_hamiltonian(
                &inst,
                &sys,
                &cell_cert(),
                band,
                &GroebnerBudget::default(),
            )
            .unwrap();
            assert!(ch.hamiltonian.degree() <= 2);
            let vars = ch.registry.vars().to_vec();
            let mut winners = Vec::new();
            for bits in 0u64..(1 << vars.len()) {
                let mut a: HashMap<Variable, u8> = vars
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| (v, ((bits >> k) & 1) as u8))
                    .collect();
                let e = ch.hamiltonian.eval_binary(&a).unwrap();
                assert!(e >= rat(0));
                if e.is_zero() {
                    for (v, expr) in &ch.eliminated {
                        let val = expr.eval_binary(&a).unwrap();
                        a.insert(*v, if val.is_zero() { 0 } else { 1 });
                    }
                    winners.push(decode_bits(&a, &inst));
                }
            }
            winners.sort_unstable();
            winners.dedup();
            assert_eq!(winners, vec![(5, 3)], "band {band}");
        }
    }
}
