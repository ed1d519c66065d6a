use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// What a variable stands for in the constructions built on top of the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarRole {
    GroupParam,
    Auxiliary,
    Source,
    Target,
    Jet,
    CurveParam,
    SignatureCoord,
}

/// An ordered list of distinct variable names. The position of a variable
/// is its rank in the internal degrevlex order (index 0 ranks highest).
#[derive(Clone)]
pub struct VarTable {
    names: Vec<String>,
    roles: Vec<VarRole>,
    index: HashMap<String, usize>,
}

/// Shared handle to a variable table; every polynomial carries one.
pub type Table = Arc<VarTable>;

impl VarTable {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, VarRole)>) -> Result<Table> {
        let mut names = Vec::new();
        let mut roles = Vec::new();
        let mut index = HashMap::new();
        for (name, role) in vars {
            let name = name.into();
            if name.is_empty() {
                return Err(Error::mismatch("empty variable name"));
            }
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(Error::mismatch(format!("duplicate variable `{name}`")));
            }
            names.push(name);
            roles.push(role);
        }
        Ok(Arc::new(VarTable {
            names,
            roles,
            index,
        }))
    }

    /// Table whose variables all carry the same role.
    pub fn with_role<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        role: VarRole,
    ) -> Result<Table> {
        Self::new(names.into_iter().map(|n| (n, role)))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn role(&self, i: usize) -> VarRole {
        self.roles[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::mismatch(format!("unknown variable `{name}`")))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Indices of the variables carrying `role`, in table order.
    pub fn indices_with_role(&self, role: VarRole) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.roles[i] == role).collect()
    }

    /// Two tables are compatible when they list the same names in the same order.
    pub fn same_as(&self, other: &VarTable) -> bool {
        self.names == other.names
    }

    /// Sub-table holding the given variables (in the given order).
    pub fn select(&self, indices: &[usize]) -> Result<Table> {
        VarTable::new(
            indices
                .iter()
                .map(|&i| (self.names[i].clone(), self.roles[i])),
        )
    }

    /// Table with `extra` appended after the existing variables.
    pub fn extend<S: Into<String>>(
        &self,
        extra: impl IntoIterator<Item = (S, VarRole)>,
    ) -> Result<Table> {
        let own = self.names.iter().cloned().zip(self.roles.iter().copied());
        let extra: Vec<(String, VarRole)> = extra.into_iter().map(|(n, r)| (n.into(), r)).collect();
        VarTable::new(own.chain(extra))
    }

    /// A name based on `base` that is not taken yet.
    pub fn fresh_name(&self, base: &str) -> String {
        if !self.contains(base) {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}{k}"))
            .find(|n| !self.contains(n))
            .expect("unbounded search")
    }
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for VarTable {}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

pub(crate) fn same_table(a: &Table, b: &Table) -> bool {
    Arc::ptr_eq(a, b) || a.same_as(b)
}

pub(crate) fn check_same(a: &Table, b: &Table) -> Result<()> {
    if same_table(a, b) {
        Ok(())
    } else {
        Err(Error::mismatch(format!(
            "variable tables differ: {:?} vs {:?}",
            a.names(),
            b.names()
        )))
    }
}
