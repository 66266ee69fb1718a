//! Elements of `S(V)#S_n` of polynomial degree at most two: sparse maps from
//! group elements to [`SymPoly2`] values. Cochain evaluation lands here.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{conjugate, Perm};
use crate::sympoly::SymPoly2;

/// Group-algebra-valued element `Σ_g s_g ⊗ g` with `s_g` of degree ≤ 2.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GAElt {
    components: BTreeMap<Perm, SymPoly2>,
}

impl GAElt {
    pub fn zero() -> Self {
        GAElt::default()
    }

    pub fn single(g: Perm, s: SymPoly2) -> Self {
        let mut e = GAElt::zero();
        e.add_component(g, s);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Perm, &SymPoly2)> {
        self.components.iter()
    }

    pub fn component(&self, g: &Perm) -> SymPoly2 {
        self.components.get(g).cloned().unwrap_or_default()
    }

    pub fn add_component(&mut self, g: Perm, s: SymPoly2) {
        if s.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.components.entry(g) {
            Entry::Vacant(v) => {
                v.insert(s);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&s);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &GAElt) -> GAElt {
        let mut out = self.clone();
        for (g, s) in other.components() {
            out.add_component(g.clone(), s.clone());
        }
        out
    }

    pub fn sub(&self, other: &GAElt) -> GAElt {
        let mut out = self.clone();
        for (g, s) in other.components() {
            out.add_component(g.clone(), s.neg());
        }
        out
    }
}

/// Diagonal action: `h · (s ⊗ g) = (h·s) ⊗ hgh⁻¹`.
pub fn ga_act(h: &Perm, e: &GAElt) -> GAElt {
    let mut out = GAElt::zero();
    for (g, s) in e.components() {
        out.add_component(conjugate(h, g), s.act(h));
    }
    out
}

impl fmt::Debug for GAElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components()
            .map(|(g, s)| format!("[{s:?}]{g}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{all_perms, compose, Perm};
    use crate::space::{BasisIndex, Vect};

    #[test]
    fn act_on_zero() {
        let h = Perm::transposition(4, 1, 3);
        assert!(ga_act(&h, &GAElt::zero()).is_zero());
    }

    #[test]
    fn conjugates_the_group_part_and_permutes_the_coefficient() {
        // (1 3) · (x1 ⊗ (1 2)) = x3 ⊗ (2 3)
        let h = Perm::transposition(4, 1, 3);
        let e = GAElt::single(
            Perm::transposition(4, 1, 2),
            SymPoly2::from_vect(&Vect::basis(BasisIndex::x(1))),
        );
        let expected = GAElt::single(
            Perm::transposition(4, 2, 3),
            SymPoly2::from_vect(&Vect::basis(BasisIndex::x(3))),
        );
        assert_eq!(ga_act(&h, &e), expected);
    }

    #[test]
    fn action_is_a_homomorphism() {
        let e = GAElt::single(
            Perm::transposition(4, 1, 2),
            SymPoly2::from_vect(&Vect::basis(BasisIndex::y(2))),
        );
        let perms = all_perms(4);
        for h1 in perms.iter().step_by(5) {
            for h2 in perms.iter().step_by(7) {
                let h21 = compose(h2, h1).unwrap();
                assert_eq!(ga_act(h2, &ga_act(h1, &e)), ga_act(&h21, &e));
            }
        }
    }
}
