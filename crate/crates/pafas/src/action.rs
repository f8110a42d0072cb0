//! Actions: visible names or the internal `tau`, each either lazy or urgent.

use std::fmt;

/// The name part of an action: the internal action or a visible name.
///
/// The derived order puts `tau` first and sorts visible names
/// lexicographically; this is the total order used whenever a set of
/// actions has to be listed deterministically (read sets, sync sets).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActName {
    Tau,
    Vis(String),
}

impl ActName {
    pub fn vis(name: impl Into<String>) -> Self {
        ActName::Vis(name.into())
    }

    pub fn is_tau(&self) -> bool {
        matches!(self, ActName::Tau)
    }

    pub fn visible(&self) -> Option<&str> {
        match self {
            ActName::Tau => None,
            ActName::Vis(n) => Some(n),
        }
    }
}

impl fmt::Display for ActName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActName::Tau => write!(f, "tau"),
            ActName::Vis(n) => write!(f, "{n}"),
        }
    }
}

/// An action together with its urgency. A lazy action may still delay up
/// to one time unit; an urgent one cannot be delayed any further.
///
/// Ordering compares names first (so the lazy and urgent copy of the same
/// name are adjacent) and breaks ties lazy-before-urgent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Action {
    pub name: ActName,
    pub urgent: bool,
}

impl Action {
    pub fn tau() -> Self {
        Action { name: ActName::Tau, urgent: false }
    }

    pub fn vis(name: impl Into<String>) -> Self {
        Action { name: ActName::vis(name), urgent: false }
    }

    pub fn urgent(mut self) -> Self {
        self.urgent = true;
        self
    }

    pub fn lazy(mut self) -> Self {
        self.urgent = false;
        self
    }

    pub fn is_tau(&self) -> bool {
        self.name.is_tau()
    }

    /// The label shown when this action is performed: performing an action
    /// never reveals whether it was urgent.
    pub fn label(&self) -> ActName {
        self.name.clone()
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.urgent {
            write!(f, "!{}", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}
