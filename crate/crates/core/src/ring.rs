use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Index of an indeterminate inside its [`RingContext`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId(pub u32);

impl VariableId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// An ordered list of variable names for a polynomial ring over the rationals.
///
/// Cloning is cheap; the names are shared.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingContext {
    names: Arc<[String]>,
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

impl RingContext {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::Parse(alloc::format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(RingContext { names: names.into() })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VariableId) -> &str {
        &self.names[v.index()]
    }

    pub fn var(&self, name: &str) -> Result<VariableId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| VariableId(i as u32))
            .ok_or_else(|| Error::UnknownVariable(name.into()))
    }

    pub fn vars(&self) -> impl Iterator<Item = VariableId> + '_ {
        (0..self.names.len() as u32).map(VariableId)
    }

    pub fn check(&self, v: VariableId) -> Result<()> {
        if v.index() < self.arity() {
            Ok(())
        } else {
            Err(Error::ArityMismatch { index: v.index(), arity: self.arity() })
        }
    }

    /// The subring on `keep`, in the order of this ring, together with the
    /// index map from this ring into it.
    pub fn restrict(&self, keep: &[VariableId]) -> (RingContext, Vec<Option<VariableId>>) {
        let mut map = alloc::vec![None; self.arity()];
        let mut names = Vec::new();
        for v in self.vars() {
            if keep.contains(&v) {
                map[v.index()] = Some(VariableId(names.len() as u32));
                names.push(self.names[v.index()].clone());
            }
        }
        (RingContext { names: names.into() }, map)
    }

    pub fn without(&self, drop: VariableId) -> (RingContext, Vec<Option<VariableId>>) {
        let keep: Vec<VariableId> = self.vars().filter(|&v| v != drop).collect();
        self.restrict(&keep)
    }

    /// Appends a fresh variable whose name starts with `hint`.
    pub fn with_fresh(&self, hint: &str) -> (RingContext, VariableId) {
        let mut name = String::from(hint);
        let mut k = 0usize;
        while self.names.contains(&name) {
            k += 1;
            name = alloc::format!("{hint}{k}");
        }
        let mut names: Vec<String> = self.names.to_vec();
        names.push(name);
        let v = VariableId((names.len() - 1) as u32);
        (RingContext { names: names.into() }, v)
    }

    /// Index map sending each variable of `self` to the variable of `other`
    /// with the same name.
    pub fn embedding_into(&self, other: &RingContext) -> Result<Vec<Option<VariableId>>> {
        self.names.iter().map(|n| other.var(n).map(Some)).collect()
    }
}
