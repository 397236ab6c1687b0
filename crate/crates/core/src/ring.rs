//! Ring descriptors: a fixed, ordered list of named indeterminates.
//!
//! Every polynomial carries a reference to its ring. The position of a
//! variable in the list is its index everywhere else in the crate, and the
//! listing order is the significance order used by the monomial orders
//! (earlier variables are larger).

use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
}

impl RingSpec {
    /// Build a ring descriptor from variable names. Names must be unique.
    pub fn new<I, S>(vars: I) -> Arc<RingSpec>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for v in &vars {
            assert!(seen.insert(v.clone()), "duplicate ring variable {v}");
        }
        Arc::new(RingSpec { vars })
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.vars[idx]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Two ring handles denote the same ring when they are the same
    /// allocation or have identical variable lists.
    pub fn same(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
        Arc::ptr_eq(a, b) || a.vars == b.vars
    }
}
