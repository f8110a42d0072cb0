//! General relabelling functions: finite maps on visible names, identity
//! elsewhere, with `tau` fixed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::action::{ActName, Action};
use crate::refusal::RefusalSet;

/// A general relabelling function. Only the non-identity part is stored,
/// mapping a visible name to a visible name or to `tau` (hiding). Identity
/// entries are normalised away on construction, so the key set is exactly
/// the support of the function.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Relabelling {
    map: BTreeMap<String, ActName>,
}

impl Relabelling {
    pub fn identity() -> Self {
        Relabelling::default()
    }

    pub fn new(entries: impl IntoIterator<Item = (String, ActName)>) -> Self {
        let map = entries
            .into_iter()
            .filter(|(k, v)| v.visible() != Some(k.as_str()))
            .collect();
        Relabelling { map }
    }

    /// Hiding of a finite action set: everything in `names` maps to `tau`.
    pub fn hiding(names: impl IntoIterator<Item = String>) -> Self {
        Relabelling::new(names.into_iter().map(|n| (n, ActName::Tau)))
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &ActName)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn apply_name(&self, name: &ActName) -> ActName {
        match name {
            ActName::Tau => ActName::Tau,
            ActName::Vis(n) => self.map.get(n).cloned().unwrap_or_else(|| name.clone()),
        }
    }

    /// Relabelling preserves urgency: an urgent action maps to the urgent
    /// copy of its image.
    pub fn apply(&self, action: &Action) -> Action {
        Action { name: self.apply_name(&action.name), urgent: action.urgent }
    }

    /// The image base: visible actions with a non-trivial preimage. With
    /// identity entries normalised away this is exactly the set of visible
    /// names the map rewrites into.
    pub fn image_base(&self) -> BTreeSet<String> {
        self.map
            .values()
            .filter_map(|v| v.visible().map(str::to_owned))
            .collect()
    }

    /// Names hidden by this relabelling (mapped to `tau`).
    pub fn hidden(&self) -> BTreeSet<String> {
        self.map
            .iter()
            .filter(|(_, v)| v.is_tau())
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// The finite preimage of a visible name, as a set of visible names.
    pub fn preimage(&self, name: &str) -> BTreeSet<String> {
        let mut pre: BTreeSet<String> = self
            .map
            .iter()
            .filter(|(_, v)| v.visible() == Some(name))
            .map(|(k, _)| k.clone())
            .collect();
        if !self.map.contains_key(name) {
            pre.insert(name.to_owned());
        }
        pre
    }

    /// Composition `after . self`: first this relabelling, then `after`.
    pub fn then(&self, after: &Relabelling) -> Relabelling {
        let mut keys: BTreeSet<&String> = self.map.keys().collect();
        keys.extend(after.map.keys());
        Relabelling::new(keys.into_iter().map(|k| {
            let mid = self.apply_name(&ActName::vis(k.clone()));
            (k.clone(), after.apply_name(&mid))
        }))
    }

    /// The refusal set a subterm must offer so that the relabelled term
    /// refuses `x`: the preimage of `x ∪ {tau}` minus `tau`. The result
    /// differs from `x` only on the (finite) support of the map.
    pub fn preimage_refusal(&self, x: &RefusalSet) -> RefusalSet {
        let keys: BTreeSet<String> = self.map.keys().cloned().collect();
        let kept = x.difference(&RefusalSet::finite(keys));
        let mapped_in: BTreeSet<String> = self
            .map
            .iter()
            .filter(|(_, v)| match v {
                ActName::Tau => true,
                ActName::Vis(n) => x.contains(n),
            })
            .map(|(k, _)| k.clone())
            .collect();
        kept.union(&RefusalSet::finite(mapped_in))
    }

    /// The maximal refusal set of the relabelled term, given the maximal
    /// refusal set `m` of the term underneath: all actions whose whole
    /// preimage is refusable. Returns `None` when a hidden action is not
    /// refusable underneath (an urgent action hidden into `tau` stops time).
    pub fn max_refusal(&self, m: &RefusalSet) -> Option<RefusalSet> {
        for h in self.hidden() {
            if !m.contains(&h) {
                return None;
            }
        }
        // Outside the disturbed set (keys and visible images) the preimage
        // of a name is the name itself, so membership agrees with `m`.
        let mut disturbed: BTreeSet<String> = self.map.keys().cloned().collect();
        disturbed.extend(self.image_base());
        let mut out = m.difference(&RefusalSet::finite(disturbed.clone()));
        let ok: BTreeSet<String> = disturbed
            .into_iter()
            .filter(|a| self.preimage(a).iter().all(|b| m.contains(b)))
            .collect();
        out = out.union(&RefusalSet::finite(ok));
        Some(out)
    }
}

impl fmt::Display for Relabelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (k, v)) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}->{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rl(entries: &[(&str, Option<&str>)]) -> Relabelling {
        Relabelling::new(entries.iter().map(|(k, v)| {
            (
                k.to_string(),
                v.map(ActName::vis).unwrap_or(ActName::Tau),
            )
        }))
    }

    #[test]
    fn identity_entries_are_dropped() {
        let phi = rl(&[("a", Some("a")), ("b", Some("c"))]);
        assert_eq!(phi.entries().count(), 1);
    }

    #[test]
    fn image_base_is_visible_image() {
        let phi = rl(&[("a", Some("c")), ("b", None)]);
        assert_eq!(phi.image_base(), BTreeSet::from(["c".to_string()]));
    }

    #[test]
    fn preimage_accounts_for_identity_outside_map() {
        let phi = rl(&[("a", Some("c"))]);
        assert_eq!(
            phi.preimage("c"),
            BTreeSet::from(["a".to_string(), "c".to_string()])
        );
        // `a` maps away, so nothing reaches it.
        assert!(phi.preimage("a").is_empty());
    }

    #[test]
    fn composition_applies_left_then_right() {
        let phi = rl(&[("a", Some("b"))]);
        let psi = rl(&[("b", Some("c"))]);
        let comp = phi.then(&psi);
        assert_eq!(comp.apply_name(&ActName::vis("a")), ActName::vis("c"));
        assert_eq!(comp.apply_name(&ActName::vis("b")), ActName::vis("c"));
    }

    #[test]
    fn hidden_urgent_blocks_max_refusal() {
        let phi = rl(&[("a", None)]);
        // Underneath, `a` is urgent: the maximal refusal set excludes it.
        let m = RefusalSet::full().without("a");
        assert_eq!(phi.max_refusal(&m), None);
    }

    #[test]
    fn max_refusal_frees_renamed_sources() {
        // Q[a->b]: no action of the relabelled term is ever `a`, so `a`
        // becomes refusable even when Q cannot refuse it.
        let phi = rl(&[("a", Some("b"))]);
        let m = RefusalSet::full().without("a");
        let out = phi.max_refusal(&m).unwrap();
        assert!(out.contains("a"));
        // `b`'s preimage now includes `a`, which Q cannot refuse.
        assert!(!out.contains("b"));
    }
}
