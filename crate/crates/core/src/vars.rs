//! Interned binary variables and per-problem registries.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

/// What a binary variable stands for in the factoring encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarRole {
    /// Bit of the larger factor p.
    FactorP,
    /// Bit of the smaller factor q.
    FactorQ,
    /// Carry emitted from one long-multiplication column into a later one.
    Carry,
    /// Partial sum chained between vertically adjacent cells.
    CellSum,
    /// Auxiliary variable standing for a product of two binary variables.
    Product,
    /// Lagrange-style multiplier of a binarization constraint.
    Multiplier,
    /// Anything else.
    Generic,
}

struct VarData {
    name: String,
    role: VarRole,
    indices: Vec<i64>,
}

struct Interner {
    by_name: HashMap<String, u32>,
    data: Vec<VarData>,
}

fn interner() -> &'static RwLock<Interner> {
    static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();
    INTERNER.get_or_init(|| {
        RwLock::new(Interner {
            by_name: HashMap::new(),
            data: Vec::new(),
        })
    })
}

/// A named binary variable. Cheap to copy; the name is the identity.
///
/// The internal id is assigned in creation order and is only used as an
/// arbitrary (but process-stable) tie-breaker for canonical storage; all
/// mathematically meaningful comparisons go through an explicit
/// [`crate::order::TermOrder`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable(u32);

impl Variable {
    /// Interns a variable with an explicit role and index tuple. If the name
    /// is already registered the existing handle is returned unchanged.
    pub fn new(name: &str, role: VarRole, indices: &[i64]) -> Variable {
        {
            let guard = interner().read().unwrap();
            if let Some(&id) = guard.by_name.get(name) {
                return Variable(id);
            }
        }
        let mut guard = interner().write().unwrap();
        if let Some(&id) = guard.by_name.get(name) {
            return Variable(id);
        }
        let id = guard.data.len() as u32;
        guard.data.push(VarData {
            name: name.to_string(),
            role,
            indices: indices.to_vec(),
        });
        guard.by_name.insert(name.to_string(), id);
        Variable(id)
    }

    /// Interns a variable, inferring role and indices from conventional
    /// names: `P_3`, `Q_1`, `Z_2_4`, `S_2_1`, `W_2_1`, `alpha_1`; anything
    /// else is [`VarRole::Generic`] with whatever trailing `_<int>` indices
    /// the name carries.
    pub fn named(name: &str) -> Variable {
        let (role, indices) = infer(name);
        Variable::new(name, role, &indices)
    }

    pub fn name(&self) -> String {
        interner().read().unwrap().data[self.0 as usize].name.clone()
    }

    pub fn role(&self) -> VarRole {
        interner().read().unwrap().data[self.0 as usize].role
    }

    pub fn indices(&self) -> Vec<i64> {
        interner().read().unwrap().data[self.0 as usize]
            .indices
            .clone()
    }

    /// First index, for single-index roles like factor bits.
    pub fn index(&self) -> Option<i64> {
        self.indices().first().copied()
    }
}

fn infer(name: &str) -> (VarRole, Vec<i64>) {
    let parts: Vec<&str> = name.split('_').collect();
    let tail_indices: Vec<i64> = parts[1..]
        .iter()
        .map_while(|s| s.parse::<i64>().ok())
        .collect();
    let all_tail_numeric = tail_indices.len() == parts.len().saturating_sub(1);
    if all_tail_numeric && parts.len() >= 2 {
        let role = match (parts[0], tail_indices.len()) {
            ("P", 1) => Some(VarRole::FactorP),
            ("Q", 1) => Some(VarRole::FactorQ),
            ("Z", 2) => Some(VarRole::Carry),
            ("S", 2) => Some(VarRole::CellSum),
            ("W", 2) => Some(VarRole::Product),
            ("alpha", 1) => Some(VarRole::Multiplier),
            _ => None,
        };
        if let Some(role) = role {
            return (role, tail_indices);
        }
        return (VarRole::Generic, tail_indices);
    }
    (VarRole::Generic, Vec::new())
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Ordered collection of the variables of one problem.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VariableRegistry {
    vars: Vec<Variable>,
}

impl VariableRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vars(vars: impl IntoIterator<Item = Variable>) -> Self {
        let mut reg = Self::new();
        for v in vars {
            reg.insert(v);
        }
        reg
    }

    /// Appends `v` unless already present; returns whether it was new.
    pub fn insert(&mut self, v: Variable) -> bool {
        if self.vars.contains(&v) {
            false
        } else {
            self.vars.push(v);
            true
        }
    }

    pub fn remove(&mut self, v: Variable) {
        self.vars.retain(|&w| w != v);
    }

    pub fn contains(&self, v: Variable) -> bool {
        self.vars.contains(&v)
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn with_role(&self, role: VarRole) -> Vec<Variable> {
        self.vars.iter().copied().filter(|v| v.role() == role).collect()
    }

    /// Registry order with all carries moved to the back, used to build the
    /// preprocessing grevlex order.
    pub fn carries_last(&self) -> Vec<Variable> {
        let mut front: Vec<Variable> = self
            .vars
            .iter()
            .copied()
            .filter(|v| v.role() != VarRole::Carry)
            .collect();
        front.extend(self.vars.iter().copied().filter(|v| v.role() == VarRole::Carry));
        front
    }

    /// Names in registry order.
    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_idempotent() {
        let a = Variable::named("P_3");
        let b = Variable::named("P_3");
        assert_eq!(a, b);
        assert_eq!(a.role(), VarRole::FactorP);
        assert_eq!(a.indices(), vec![3]);
    }

    #[test]
    fn role_inference() {
        assert_eq!(Variable::named("Q_1").role(), VarRole::FactorQ);
        assert_eq!(Variable::named("Z_2_4").role(), VarRole::Carry);
        assert_eq!(Variable::named("Z_2_4").indices(), vec![2, 4]);
        assert_eq!(Variable::named("S_2_1").role(), VarRole::CellSum);
        assert_eq!(Variable::named("W_2_1").role(), VarRole::Product);
        assert_eq!(Variable::named("alpha_1").role(), VarRole::Multiplier);
        assert_eq!(Variable::named("x_1").role(), VarRole::Generic);
        assert_eq!(Variable::named("x_1").indices(), vec![1]);
        assert_eq!(Variable::named("foo").role(), VarRole::Generic);
    }

    #[test]
    fn registry_dedupes_and_orders() {
        let mut reg = VariableRegistry::new();
        let p = Variable::named("P_1");
        let z = Variable::named("Z_1_2");
        let q = Variable::named("Q_1");
        assert!(reg.insert(p));
        assert!(reg.insert(z));
        assert!(reg.insert(q));
        assert!(!reg.insert(p));
        assert_eq!(reg.vars(), &[p, z, q]);
        assert_eq!(reg.carries_last(), vec![p, q, z]);
    }
}
