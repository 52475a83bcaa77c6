//! Multivariate division, S-polynomials, and Buchberger's algorithm.
//!
//! Internally polynomials are rekeyed onto dense exponent vectors encoded so
//! that the active term order becomes the natural lexicographic order on
//! keys; leading terms are then map maxima and monomial products are
//! componentwise sums. The public surface speaks [`Polynomial`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::time::Instant;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::order::{OrderKind, TermOrder};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::vars::Variable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("S-polynomial of a zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("no nonzero generators given")]
    EmptyInput,
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// Caps on a single Buchberger run. Exceeding a cap is a reported error,
/// never silent truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBudget {
    /// Maximum number of basis elements held at any point.
    pub max_basis: usize,
    /// Maximum number of critical pairs processed (including pruned ones).
    pub max_pairs: usize,
    /// Wall-clock cap in milliseconds.
    pub max_millis: u64,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget {
            max_basis: 4096,
            max_pairs: 500_000,
            max_millis: 60_000,
        }
    }
}

/// A (reduced) Groebner basis together with the order it was computed under.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub generators: Vec<Polynomial>,
    pub order: TermOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators, &self.order)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when the basis is the single constant 1, i.e. the ideal is the
    /// whole ring and the system has no solution at all.
    pub fn is_trivial(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant() && !self.generators[0].is_zero()
    }

    /// A reusable reducer with the dense representation precomputed.
    pub fn reducer(&self) -> Reducer {
        Reducer::new(&self.generators, &self.order)
    }

    /// Text dump: one polynomial per line with the order recorded up front.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# order: {}", self.order);
        for g in &self.generators {
            let _ = writeln!(out, "{g}");
        }
        out
    }
}

// ----------------------------------------------------------------------
// Dense keyed representation
// ----------------------------------------------------------------------

type Key = Vec<i64>;

#[derive(Clone)]
struct Ctx {
    kind: OrderKind,
    vars: Vec<Variable>,
}

impl Ctx {
    fn new(ord: &TermOrder) -> Ctx {
        Ctx {
            kind: ord.kind(),
            vars: ord.vars().to_vec(),
        }
    }

    /// Key encoding chosen so that the derived lexicographic `Ord` on
    /// `Vec<i64>` realizes the term order, and monomial multiplication is
    /// componentwise addition.
    fn key_of_exps(&self, exps: &[u32]) -> Key {
        match self.kind {
            OrderKind::Plex => exps.iter().map(|&e| e as i64).collect(),
            OrderKind::GrevLex => {
                let deg: i64 = exps.iter().map(|&e| e as i64).sum();
                let mut key = Vec::with_capacity(exps.len() + 1);
                key.push(deg);
                for &e in exps.iter().rev() {
                    key.push(-(e as i64));
                }
                key
            }
        }
    }

    fn exps_of_key(&self, key: &Key) -> Vec<u32> {
        match self.kind {
            OrderKind::Plex => key.iter().map(|&e| e as u32).collect(),
            OrderKind::GrevLex => key[1..].iter().rev().map(|&e| (-e) as u32).collect(),
        }
    }

    fn key_of(&self, m: &Monomial, ord: &TermOrder) -> Key {
        self.key_of_exps(&ord.exponents(m))
    }

    fn mono_of(&self, key: &Key) -> Monomial {
        let exps = self.exps_of_key(key);
        let powers: Vec<(Variable, u32)> = self
            .vars
            .iter()
            .zip(exps)
            .filter(|&(_, e)| e > 0)
            .map(|(&v, e)| (v, e))
            .collect();
        Monomial::from_powers(&powers)
    }

    fn mul(&self, a: &Key, b: &Key) -> Key {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    /// `a / b` if the quotient is a valid monomial.
    fn try_div(&self, a: &Key, b: &Key) -> Option<Key> {
        let d: Key = a.iter().zip(b).map(|(x, y)| x - y).collect();
        let ok = match self.kind {
            OrderKind::Plex => d.iter().all(|&e| e >= 0),
            OrderKind::GrevLex => d[0] >= 0 && d[1..].iter().all(|&e| e <= 0),
        };
        if ok {
            Some(d)
        } else {
            None
        }
    }

    fn lcm(&self, a: &Key, b: &Key) -> Key {
        let ea = self.exps_of_key(a);
        let eb = self.exps_of_key(b);
        let exps: Vec<u32> = ea.iter().zip(&eb).map(|(&x, &y)| x.max(y)).collect();
        self.key_of_exps(&exps)
    }

    fn coprime(&self, a: &Key, b: &Key) -> bool {
        let ea = self.exps_of_key(a);
        let eb = self.exps_of_key(b);
        ea.iter().zip(&eb).all(|(&x, &y)| x.min(y) == 0)
    }
}

#[derive(Clone, Default)]
struct DPoly {
    terms: BTreeMap<Key, Rational>,
}

impl DPoly {
    fn from_poly(p: &Polynomial, ctx: &Ctx, ord: &TermOrder) -> DPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in p.terms() {
            terms.insert(ctx.key_of(m, ord), c.clone());
        }
        DPoly { terms }
    }

    fn to_poly(&self, ctx: &Ctx) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(k, c)| (ctx.mono_of(k), c.clone())),
        )
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> Option<(&Key, &Rational)> {
        self.terms.last_key_value()
    }

    fn add_term(&mut self, k: Key, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self -= scale * shift(g)` where shift multiplies by the monomial key
    /// `q`.
    fn sub_scaled_shifted(&mut self, g: &DPoly, scale: &Rational, q: &Key, ctx: &Ctx) {
        for (k, c) in &g.terms {
            self.add_term(ctx.mul(k, q), -(scale * c));
        }
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.lead() {
            let lc = lc.clone();
            if !lc.is_one() {
                for c in self.terms.values_mut() {
                    *c /= &lc;
                }
            }
        }
    }
}

/// Fully reduces `f` against monic `basis`: repeatedly cancels the leading
/// term when divisible, otherwise moves it to the remainder.
fn reduce_full(mut work: DPoly, basis: &[DPoly], leads: &[Key], ctx: &Ctx) -> DPoly {
    let mut rem = DPoly::default();
    'outer: while let Some((lk, lc)) = work.lead() {
        let lk = lk.clone();
        let lc = lc.clone();
        for (g, glead) in basis.iter().zip(leads) {
            if let Some(q) = ctx.try_div(&lk, glead) {
                work.sub_scaled_shifted(g, &lc, &q, ctx);
                debug_assert!(!work.terms.contains_key(&lk));
                continue 'outer;
            }
        }
        work.terms.remove(&lk);
        rem.terms.insert(lk, lc);
    }
    rem
}

/// Precomputed dense form of a generator list for repeated normal forms.
pub struct Reducer {
    ctx: Ctx,
    ord: TermOrder,
    basis: Vec<DPoly>,
    leads: Vec<Key>,
}

impl Reducer {
    pub fn new(gens: &[Polynomial], ord: &TermOrder) -> Reducer {
        let ctx = Ctx::new(ord);
        let mut basis = Vec::new();
        let mut leads = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let mut d = DPoly::from_poly(g, &ctx, ord);
            d.make_monic();
            leads.push(d.lead().unwrap().0.clone());
            basis.push(d);
        }
        Reducer {
            ctx,
            ord: ord.clone(),
            basis,
            leads,
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        if f.is_zero() {
            return Polynomial::zero();
        }
        let work = DPoly::from_poly(f, &self.ctx, &self.ord);
        reduce_full(work, &self.basis, &self.leads, &self.ctx).to_poly(&self.ctx)
    }
}

/// Canonical remainder of `f` under multivariate division by `gens`.
///
/// No monomial of the result is divisible by any leading term of a nonzero
/// generator, and `f - result` lies in the ideal generated by `gens`.
pub fn normal_form(f: &Polynomial, gens: &[Polynomial], ord: &TermOrder) -> Polynomial {
    Reducer::new(gens, ord).normal_form(f)
}

/// S(f, g) = (lcm/LT(f)) f - (lcm/LT(g)) g, the cancellation combination of
/// the two leading terms.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    ord: &TermOrder,
) -> Result<Polynomial, GroebnerError> {
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::ZeroPolynomial);
    }
    let (cf, mf) = f.leading_term(ord).unwrap();
    let (cg, mg) = g.leading_term(ord).unwrap();
    let lcm = mf.lcm(&mg);
    let uf = lcm.try_div(&mf).unwrap();
    let ug = lcm.try_div(&mg).unwrap();
    let left = f.mul_monomial(&uf).scale(&(Rational::one() / cf));
    let right = g.mul_monomial(&ug).scale(&(Rational::one() / cg));
    Ok(&left - &right)
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprimality and chain criteria. Returns the reduced
/// Groebner basis of the ideal generated by `gens`.
pub fn buchberger(
    gens: &[Polynomial],
    ord: &TermOrder,
    budget: &GroebnerBudget,
) -> Result<GroebnerBasis, GroebnerError> {
    let ctx = Ctx::new(ord);
    let start = Instant::now();

    let mut basis: Vec<DPoly> = Vec::new();
    let mut leads: Vec<Key> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut d = DPoly::from_poly(g, &ctx, ord);
        d.make_monic();
        leads.push(d.lead().unwrap().0.clone());
        basis.push(d);
    }
    if basis.is_empty() {
        return Err(GroebnerError::EmptyInput);
    }

    // pending pairs ordered by (lcm key, i, j): pop_first is the normal
    // selection strategy
    let mut pending: BTreeSet<(Key, u32, u32)> = BTreeSet::new();
    let mut pending_idx: HashSet<(u32, u32)> = HashSet::new();
    let push_pair = |pending: &mut BTreeSet<(Key, u32, u32)>,
                         pending_idx: &mut HashSet<(u32, u32)>,
                         leads: &[Key],
                         i: u32,
                         j: u32| {
        let lcm = ctx.lcm(&leads[i as usize], &leads[j as usize]);
        pending.insert((lcm, i, j));
        pending_idx.insert((i, j));
    };
    for j in 1..basis.len() as u32 {
        for i in 0..j {
            push_pair(&mut pending, &mut pending_idx, &leads, i, j);
        }
    }

    let mut processed: usize = 0;
    while let Some((lcm, i, j)) = pending.pop_first() {
        pending_idx.remove(&(i, j));
        processed += 1;
        if processed > budget.max_pairs {
            return Err(GroebnerError::BudgetExceeded(format!(
                "pair cap {} reached",
                budget.max_pairs
            )));
        }
        if processed % 64 == 0 && start.elapsed().as_millis() as u64 > budget.max_millis {
            return Err(GroebnerError::BudgetExceeded(format!(
                "time cap {} ms reached",
                budget.max_millis
            )));
        }

        let (li, lj) = (&leads[i as usize], &leads[j as usize]);
        // Buchberger's first criterion: coprime leading monomials
        if ctx.coprime(li, lj) {
            continue;
        }
        // chain criterion: some k with LT(k) | lcm(i,j) and both cross pairs
        // already treated
        let mut pruned = false;
        for k in 0..basis.len() as u32 {
            if k == i || k == j {
                continue;
            }
            if ctx.try_div(&lcm, &leads[k as usize]).is_some() {
                let (a1, b1) = (i.min(k), i.max(k));
                let (a2, b2) = (j.min(k), j.max(k));
                if !pending_idx.contains(&(a1, b1)) && !pending_idx.contains(&(a2, b2)) {
                    pruned = true;
                    break;
                }
            }
        }
        if pruned {
            continue;
        }

        // s-polynomial in dense form: lcm/lt_i * f_i - lcm/lt_j * f_j
        let qi = ctx.try_div(&lcm, li).unwrap();
        let qj = ctx.try_div(&lcm, lj).unwrap();
        let mut s = DPoly::default();
        for (k, c) in &basis[i as usize].terms {
            s.add_term(ctx.mul(k, &qi), c.clone());
        }
        for (k, c) in &basis[j as usize].terms {
            s.add_term(ctx.mul(k, &qj), -c.clone());
        }
        let mut r = reduce_full(s, &basis, &leads, &ctx);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        if basis.len() + 1 > budget.max_basis {
            return Err(GroebnerError::BudgetExceeded(format!(
                "basis cap {} reached",
                budget.max_basis
            )));
        }
        let new_idx = basis.len() as u32;
        leads.push(r.lead().unwrap().0.clone());
        basis.push(r);
        for k in 0..new_idx {
            push_pair(&mut pending, &mut pending_idx, &leads, k, new_idx);
        }
    }

    // minimalize: drop any element whose leading term is divisible by
    // another kept one (ascending leads so divisors are kept first)
    let mut order_idx: Vec<usize> = (0..basis.len()).collect();
    order_idx.sort_by(|&a, &b| leads[a].cmp(&leads[b]).then(a.cmp(&b)));
    let mut kept: Vec<usize> = Vec::new();
    for idx in order_idx {
        if kept
            .iter()
            .all(|&k| ctx.try_div(&leads[idx], &leads[k]).is_none())
        {
            kept.push(idx);
        }
    }

    // tail-reduce each kept element against the others
    let mut reduced: Vec<DPoly> = kept.iter().map(|&k| basis[k].clone()).collect();
    let n = reduced.len();
    for i in 0..n {
        let own = std::mem::take(&mut reduced[i]);
        let others: Vec<DPoly> = reduced
            .iter()
            .filter(|d| !d.is_zero())
            .cloned()
            .collect();
        let other_leads: Vec<Key> = others.iter().map(|d| d.lead().unwrap().0.clone()).collect();
        let mut r = reduce_full(own, &others, &other_leads, &ctx);
        r.make_monic();
        debug_assert!(!r.is_zero());
        reduced[i] = r;
    }
    reduced.sort_by(|a, b| match (a.lead(), b.lead()) {
        (Some((ka, _)), Some((kb, _))) => ka.cmp(kb),
        _ => Ordering::Equal,
    });

    Ok(GroebnerBasis {
        generators: reduced.iter().map(|d| d.to_poly(&ctx)).collect(),
        order: ord.clone(),
        reduced: true,
    })
}

/// Checks the Buchberger criterion: every S-polynomial of a pair of
/// generators reduces to zero.
pub fn is_groebner_basis(gens: &[Polynomial], ord: &TermOrder) -> bool {
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let owned: Vec<Polynomial> = nonzero.iter().map(|g| (*g).clone()).collect();
    let red = Reducer::new(&owned, ord);
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let s = s_polynomial(nonzero[i], nonzero[j], ord).unwrap();
            if !red.normal_form(&s).is_zero() {
                return false;
            }
        }
    }
    true
}
