//! Term orders: pure lexicographic and graded reverse lexicographic.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;
use crate::vars::Variable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKind {
    /// Pure lexicographic: compare by the first variable in the order,
    /// ties broken by the next, ignoring total degree.
    Plex,
    /// Graded reverse lexicographic: compare by total degree, ties broken
    /// by the smallest exponent in the last variable, then the second to
    /// last, etc.
    GrevLex,
}

/// A total multiplicative order on monomials over a fixed variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    vars: Vec<Variable>,
    rank: HashMap<Variable, usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, vars: Vec<Variable>) -> TermOrder {
        let rank = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        TermOrder { kind, vars, rank }
    }

    pub fn plex(vars: Vec<Variable>) -> TermOrder {
        Self::new(OrderKind::Plex, vars)
    }

    pub fn grevlex(vars: Vec<Variable>) -> TermOrder {
        Self::new(OrderKind::GrevLex, vars)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn rank_of(&self, v: Variable) -> Option<usize> {
        self.rank.get(&v).copied()
    }

    pub fn covers(&self, m: &Monomial) -> bool {
        m.variables().all(|v| self.rank.contains_key(&v))
    }

    /// Dense exponent vector of `m` in rank order.
    ///
    /// Panics if `m` mentions a variable outside the order; callers uphold
    /// the invariant that the variable order covers every compared monomial.
    pub fn exponents(&self, m: &Monomial) -> Vec<u32> {
        let mut exps = vec![0u32; self.vars.len()];
        for &(v, e) in m.powers() {
            let r = *self
                .rank
                .get(&v)
                .unwrap_or_else(|| panic!("variable {} not in term order", v.name()));
            exps[r] = e;
        }
        exps
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let ea = self.exponents(a);
        let eb = self.exponents(b);
        self.compare_exps(&ea, &eb)
    }

    pub fn compare_exps(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Plex => {
                for (x, y) in ea.iter().zip(eb) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                let da: u32 = ea.iter().sum();
                let db: u32 = eb.iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for (x, y) in ea.iter().zip(eb).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        // the monomial with the smaller exponent in the
                        // last differing position is the larger one
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OrderKind::Plex => "plex",
            OrderKind::GrevLex => "grevlex",
        };
        let vars: Vec<String> = self.vars.iter().map(|v| v.name()).collect();
        write!(f, "{}({})", name, vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn v(name: &str) -> Variable {
        Variable::named(name)
    }

    fn m(powers: &[(&str, u32)]) -> Monomial {
        Monomial::from_powers(
            &powers
                .iter()
                .map(|&(n, e)| (v(n), e))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn plex_ignores_total_degree() {
        let ord = TermOrder::plex(vec![v("x"), v("y")]);
        assert_eq!(ord.compare(&m(&[("x", 1)]), &m(&[("y", 3)])), Ordering::Greater);
        assert_eq!(
            ord.compare(&m(&[("x", 1), ("y", 1)]), &m(&[("y", 2)])),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_total_degree_first() {
        let ord = TermOrder::grevlex(vec![v("x"), v("y")]);
        assert_eq!(ord.compare(&m(&[("y", 3)]), &m(&[("x", 1)])), Ordering::Greater);
        // same degree: smaller exponent in the last variable wins
        assert_eq!(
            ord.compare(&m(&[("x", 2)]), &m(&[("x", 1), ("y", 1)])),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_three_vars_standard() {
        // classic check: x*z vs y^2 under grevlex(x, y, z): both degree 2,
        // last differing exponent is z where x*z has 1 > 0, so y^2 is larger.
        let ord = TermOrder::grevlex(vec![v("x"), v("y"), v("z")]);
        assert_eq!(
            ord.compare(&m(&[("y", 2)]), &m(&[("x", 1), ("z", 1)])),
            Ordering::Greater
        );
    }

    #[test]
    fn multiplicative() {
        let ord = TermOrder::grevlex(vec![v("x"), v("y"), v("z")]);
        let a = m(&[("x", 1), ("y", 2)]);
        let b = m(&[("z", 3)]);
        let c = m(&[("x", 2), ("z", 1)]);
        let ab = a.mul(&c);
        let bb = b.mul(&c);
        assert_eq!(ord.compare(&a, &b), ord.compare(&ab, &bb));
    }
}
