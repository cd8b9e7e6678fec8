use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// A polynomial ring over the rationals, identified by its ordered list of
/// variable names. Cheap to clone; two descriptors are equal when their
/// variable lists coincide.
#[derive(Clone)]
pub struct RingDescriptor {
    inner: Arc<RingInner>,
}

struct RingInner {
    vars: Vec<String>,
}

impl RingDescriptor {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<Self, Error> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::EmptyRing);
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::BadVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        Ok(RingDescriptor {
            inner: Arc::new(RingInner { vars }),
        })
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.inner.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }

    /// New ring with extra variables appended after the existing ones.
    pub fn extended<S: Into<String>>(&self, extra: Vec<S>) -> Result<Self, Error> {
        let mut vars = self.inner.vars.clone();
        vars.extend(extra.into_iter().map(Into::into));
        RingDescriptor::new(vars)
    }

    /// New ring keeping only the variables at `keep` (in the given order).
    pub fn restricted(&self, keep: &[usize]) -> Result<Self, Error> {
        let vars: Vec<String> = keep.iter().map(|&i| self.inner.vars[i].clone()).collect();
        RingDescriptor::new(vars)
    }

    /// A variable name not colliding with any existing one, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.var_index(stem).is_none() {
            return stem.to_string();
        }
        for k in 0.. {
            let cand = format!("{stem}{k}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
        }
        unreachable!()
    }
}

impl PartialEq for RingDescriptor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.vars == other.inner.vars
    }
}

impl Eq for RingDescriptor {}

impl fmt::Debug for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.inner.vars.join(","))
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.inner.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(RingDescriptor::new(Vec::<String>::new()).is_err());
        assert!(RingDescriptor::new(vec!["x", "x"]).is_err());
        assert!(RingDescriptor::new(vec!["x", "y"]).is_ok());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = RingDescriptor::new(vec!["t", "t0"]).unwrap();
        assert_eq!(r.fresh_name("s"), "s");
        assert_eq!(r.fresh_name("t"), "t1");
    }
}
