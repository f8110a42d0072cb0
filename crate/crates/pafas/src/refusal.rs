//! Refusal sets: finite or cofinite sets of visible action names.
//!
//! The action universe is infinite, so a refusal set is stored either as a
//! finite set of names or as the complement of one. The cofinite
//! representation with an empty complement is the full universe, written
//! `1` in traces: refusing it is a full time step.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "polarity", content = "names", rename_all = "lowercase")]
pub enum RefusalSet {
    Finite(BTreeSet<String>),
    /// The complement of the stored names.
    Cofinite(BTreeSet<String>),
}

use RefusalSet::{Cofinite, Finite};

impl RefusalSet {
    pub fn empty() -> Self {
        Finite(BTreeSet::new())
    }

    pub fn full() -> Self {
        Cofinite(BTreeSet::new())
    }

    pub fn finite(names: impl IntoIterator<Item = String>) -> Self {
        Finite(names.into_iter().collect())
    }

    pub fn cofinite(names: impl IntoIterator<Item = String>) -> Self {
        Cofinite(names.into_iter().collect())
    }

    pub fn singleton(name: impl Into<String>) -> Self {
        Finite(BTreeSet::from([name.into()]))
    }

    pub fn is_full(&self) -> bool {
        matches!(self, Cofinite(s) if s.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Finite(s) if s.is_empty())
    }

    pub fn contains(&self, name: &str) -> bool {
        match self {
            Finite(s) => s.contains(name),
            Cofinite(s) => !s.contains(name),
        }
    }

    pub fn with(self, name: impl Into<String>) -> Self {
        let name = name.into();
        match self {
            Finite(mut s) => {
                s.insert(name);
                Finite(s)
            }
            Cofinite(mut s) => {
                s.remove(&name);
                Cofinite(s)
            }
        }
    }

    pub fn without(self, name: &str) -> Self {
        match self {
            Finite(mut s) => {
                s.remove(name);
                Finite(s)
            }
            Cofinite(mut s) => {
                s.insert(name.to_owned());
                Cofinite(s)
            }
        }
    }

    pub fn union(&self, other: &RefusalSet) -> RefusalSet {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.union(b).cloned().collect()),
            (Finite(a), Cofinite(b)) | (Cofinite(b), Finite(a)) => {
                Cofinite(b.difference(a).cloned().collect())
            }
            (Cofinite(a), Cofinite(b)) => Cofinite(a.intersection(b).cloned().collect()),
        }
    }

    pub fn intersection(&self, other: &RefusalSet) -> RefusalSet {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.intersection(b).cloned().collect()),
            (Finite(a), Cofinite(b)) | (Cofinite(b), Finite(a)) => {
                Finite(a.difference(b).cloned().collect())
            }
            (Cofinite(a), Cofinite(b)) => Cofinite(a.union(b).cloned().collect()),
        }
    }

    pub fn difference(&self, other: &RefusalSet) -> RefusalSet {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.difference(b).cloned().collect()),
            (Finite(a), Cofinite(b)) => Finite(a.intersection(b).cloned().collect()),
            (Cofinite(a), Finite(b)) => Cofinite(a.union(b).cloned().collect()),
            (Cofinite(a), Cofinite(b)) => Finite(b.difference(a).cloned().collect()),
        }
    }

    pub fn is_subset(&self, other: &RefusalSet) -> bool {
        match (self, other) {
            (Finite(a), Finite(b)) => a.is_subset(b),
            (Finite(a), Cofinite(b)) => a.is_disjoint(b),
            (Cofinite(_), Finite(_)) => false,
            (Cofinite(a), Cofinite(b)) => b.is_subset(a),
        }
    }

    /// All finite subsets of a finite universe of names, small before large.
    /// Used by the rule-level oracles to enumerate refusal sets.
    pub fn subsets_of(universe: &BTreeSet<String>) -> Vec<RefusalSet> {
        let names: Vec<&String> = universe.iter().collect();
        assert!(names.len() < 20, "universe too large to enumerate");
        (0u32..1 << names.len())
            .map(|bits| {
                Finite(
                    names
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| bits & (1 << i) != 0)
                        .map(|(_, n)| (*n).clone())
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for RefusalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = |f: &mut fmt::Formatter<'_>, s: &BTreeSet<String>| {
            write!(f, "{{")?;
            for (i, n) in s.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{n}")?;
            }
            write!(f, "}}")
        };
        match self {
            Finite(s) => body(f, s),
            Cofinite(s) if s.is_empty() => write!(f, "1"),
            Cofinite(s) => {
                write!(f, "co")?;
                body(f, s)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(names: &[&str]) -> RefusalSet {
        RefusalSet::finite(names.iter().map(|s| s.to_string()))
    }

    fn co(names: &[&str]) -> RefusalSet {
        RefusalSet::cofinite(names.iter().map(|s| s.to_string()))
    }

    #[test]
    fn boolean_algebra_on_mixed_polarities() {
        assert_eq!(fin(&["a"]).union(&co(&["a", "b"])), co(&["b"]));
        assert_eq!(co(&["a"]).intersection(&co(&["b"])), co(&["a", "b"]));
        assert_eq!(co(&["a"]).difference(&co(&["a", "b"])), fin(&["b"]));
        assert_eq!(fin(&["a", "b"]).difference(&co(&["b"])), fin(&["b"]));
    }

    #[test]
    fn subset_tests() {
        assert!(fin(&["a"]).is_subset(&co(&["b"])));
        assert!(!fin(&["b"]).is_subset(&co(&["b"])));
        assert!(co(&["a", "b"]).is_subset(&co(&["a"])));
        assert!(!co(&[]).is_subset(&fin(&["a"])));
        assert!(fin(&[]).is_subset(&fin(&[])));
    }

    #[test]
    fn full_displays_as_one() {
        assert_eq!(RefusalSet::full().to_string(), "1");
        assert_eq!(co(&["a"]).to_string(), "co{a}");
        assert_eq!(fin(&["a", "b"]).to_string(), "{a,b}");
    }
}
