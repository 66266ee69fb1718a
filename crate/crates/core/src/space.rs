//! The doubled representation `V = W* ⊕ W ≅ C^{2n}` with basis
//! `x_1..x_n, y_1..y_n`, the permutation action `σ·x_i = x_{σ(i)}`,
//! fixed spaces, and the bar (standard-representation) coordinates
//! `x̄_i = x_i − (1/n) x_[n]`.
//!
//! Vectors carry `ParamPoly` coordinates so that symbolic families and their
//! numeric specializations flow through the same code.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::Perm;
use crate::param::ParamPoly;
use crate::rat::{frac, rat, Rat};

/// Which block of the doubled basis a vector symbol lives in: `X` is the
/// dual block `W*`, `Y` is `W`. All `X` precede all `Y` in the fixed order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    X,
    Y,
}

/// A basis symbol `x_i` or `y_i`, one-based index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub kind: Kind,
    pub index: usize,
}

impl BasisIndex {
    pub fn x(i: usize) -> Self {
        BasisIndex { kind: Kind::X, index: i }
    }

    pub fn y(i: usize) -> Self {
        BasisIndex { kind: Kind::Y, index: i }
    }

    /// The dual partner: `x_i* = y_i`, `y_i* = x_i`.
    pub fn dual(self) -> Self {
        BasisIndex {
            kind: match self.kind {
                Kind::X => Kind::Y,
                Kind::Y => Kind::X,
            },
            index: self.index,
        }
    }

    /// Action of `g`, preserving the block.
    pub fn act(self, g: &Perm) -> Self {
        BasisIndex {
            kind: self.kind,
            index: g.apply(self.index),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad basis symbol {s:?}"));
        let (kind, digits) = s.split_at(1);
        let kind = match kind {
            "x" => Kind::X,
            "y" => Kind::Y,
            _ => return Err(bad()),
        };
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(BasisIndex { kind, index })
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::X => "x",
            Kind::Y => "y",
        };
        write!(f, "{}{}", k, self.index)
    }
}

impl fmt::Debug for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All `2n` basis symbols in the fixed order.
pub fn basis(n: usize) -> Vec<BasisIndex> {
    (1..=n)
        .map(BasisIndex::x)
        .chain((1..=n).map(BasisIndex::y))
        .collect()
}

/// Sparse vector of `V` with `ParamPoly` coordinates; zero coordinates are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Vect {
    coords: BTreeMap<BasisIndex, ParamPoly>,
}

impl Vect {
    pub fn zero() -> Self {
        Vect::default()
    }

    pub fn basis(b: BasisIndex) -> Self {
        let mut v = Vect::zero();
        v.add_coord(b, ParamPoly::int(1));
        v
    }

    /// `v_I = Σ_{i∈I} v_i` over one block.
    pub fn indexed_sum(kind: Kind, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Vect::zero();
        for i in indices {
            v.add_coord(BasisIndex { kind, index: i }, ParamPoly::int(1));
        }
        v
    }

    /// `v_[n]`, the full block sum.
    pub fn block_sum(kind: Kind, n: usize) -> Self {
        Vect::indexed_sum(kind, 1..=n)
    }

    /// The bar vector `v̄_i = v_i − (1/n) v_[n]` in ambient coordinates.
    pub fn bar(b: BasisIndex, n: usize) -> Self {
        let mut v = Vect::basis(b);
        let correction = ParamPoly::constant(frac(-1, n as i64));
        for i in 1..=n {
            v.add_coord(
                BasisIndex { kind: b.kind, index: i },
                correction.clone(),
            );
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> impl Iterator<Item = (&BasisIndex, &ParamPoly)> {
        self.coords.iter()
    }

    pub fn coord(&self, b: &BasisIndex) -> ParamPoly {
        self.coords.get(b).cloned().unwrap_or_default()
    }

    pub fn add_coord(&mut self, b: BasisIndex, p: ParamPoly) {
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coords.entry(b) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&p);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Vect) -> Vect {
        let mut out = self.clone();
        for (b, p) in other.coords() {
            out.add_coord(*b, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &Vect) -> Vect {
        let mut out = self.clone();
        for (b, p) in other.coords() {
            out.add_coord(*b, p.neg());
        }
        out
    }

    pub fn neg(&self) -> Vect {
        let mut out = Vect::zero();
        for (b, p) in self.coords() {
            out.add_coord(*b, p.neg());
        }
        out
    }

    pub fn scale_poly(&self, p: &ParamPoly) -> Vect {
        let mut out = Vect::zero();
        for (b, q) in self.coords() {
            out.add_coord(*b, q.mul(p));
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> Vect {
        self.scale_poly(&ParamPoly::constant(r.clone()))
    }

    pub fn substitute(&self, map: &BTreeMap<crate::param::ParamSymbol, ParamPoly>) -> Vect {
        let mut out = Vect::zero();
        for (b, p) in self.coords() {
            out.add_coord(*b, p.substitute(map));
        }
        out
    }

    pub fn symbols(&self) -> Vec<crate::param::ParamSymbol> {
        let mut out = std::collections::BTreeSet::new();
        for (_, p) in self.coords() {
            out.extend(p.symbols());
        }
        out.into_iter().collect()
    }

    /// Linear extension of the basis permutation.
    pub fn act(&self, g: &Perm) -> Vect {
        let mut out = Vect::zero();
        for (b, p) in self.coords() {
            out.add_coord(b.act(g), p.clone());
        }
        out
    }

    /// `g·v − v`.
    pub fn act_minus_id(&self, g: &Perm) -> Vect {
        self.act(g).sub(self)
    }

    /// Sum of coordinates in each block, `(x-block, y-block)`.
    pub fn block_sums(&self) -> (ParamPoly, ParamPoly) {
        let mut sx = ParamPoly::zero();
        let mut sy = ParamPoly::zero();
        for (b, p) in self.coords() {
            match b.kind {
                Kind::X => sx = sx.add(p),
                Kind::Y => sy = sy.add(p),
            }
        }
        (sx, sy)
    }
}

impl fmt::Debug for Vect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coords()
            .map(|(b, p)| format!("({p})*{b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Fixed space `V^g` with its cycle-sum basis: one summed vector per cycle of
/// `g` in each block.
#[derive(Clone, Debug)]
pub struct FixedSpace {
    pub group_elt: Perm,
    pub basis: Vec<Vect>,
    pub codim: usize,
}

/// Cycle-sum basis of `V^g`; `codim = 2n − 2·(number of cycles of g)`.
pub fn fixed_space(g: &Perm) -> FixedSpace {
    let n = g.n();
    let cycles = g.all_cycles();
    let mut basis = Vec::new();
    for kind in [Kind::X, Kind::Y] {
        for cycle in &cycles {
            basis.push(Vect::indexed_sum(kind, cycle.iter().copied()));
        }
    }
    FixedSpace {
        group_elt: g.clone(),
        basis,
        codim: 2 * n - 2 * cycles.len(),
    }
}

/// Membership of `v` in `V^g`, decided in the cycle-sum basis: the cycle-sum
/// vectors have disjoint supports, so `v` lies in their span exactly when its
/// coordinates are constant along every cycle of `g`.
pub fn in_fixed_space(g: &Perm, v: &Vect) -> bool {
    for cycle in g.all_cycles() {
        for kind in [Kind::X, Kind::Y] {
            let first = v.coord(&BasisIndex { kind, index: cycle[0] });
            for &i in &cycle[1..] {
                if v.coord(&BasisIndex { kind, index: i }) != first {
                    return false;
                }
            }
        }
    }
    true
}

/// Splits `v = std_part + triv_part` with `std_part` in the span of the bar
/// vectors (zero block sums) and `triv_part` in `span{x_[n], y_[n]}`.
pub fn to_bar_coords(v: &Vect, n: usize) -> Result<(Vect, Vect)> {
    crate::check_n(n)?;
    let (sx, sy) = v.block_sums();
    let mean_x = sx.scale(&frac(1, n as i64));
    let mean_y = sy.scale(&frac(1, n as i64));
    let mut triv = Vect::zero();
    for i in 1..=n {
        triv.add_coord(BasisIndex::x(i), mean_x.clone());
        triv.add_coord(BasisIndex::y(i), mean_y.clone());
    }
    let std_part = v.sub(&triv);
    Ok((std_part, triv))
}

/// Dimension of the invariant alternating 2-forms `(Λ²V*)^{S_n}`, computed by
/// character averaging: `(1/n!) Σ_g (χ_V(g)² − χ_V(g²)) / 2` with
/// `χ_V(g) = 2·fix(g)`.
pub fn invariant_two_form_dim(n: usize) -> Result<i64> {
    crate::check_n(n)?;
    let mut acc = rat(0);
    let mut count: i64 = 0;
    for g in crate::group::all_perms(n) {
        let g2 = crate::group::compose(&g, &g)?;
        let chi = 2 * g.fixed_points() as i64;
        let chi2 = 2 * g2.fixed_points() as i64;
        acc += frac(chi * chi - chi2, 2);
        count += 1;
    }
    let dim = acc / rat(count);
    debug_assert!(dim.is_integer());
    Ok(dim.to_integer().try_into().expect("small dimension"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{all_perms, compose, Perm};

    #[test]
    fn action_on_basis() {
        let g = Perm::transposition(4, 1, 2);
        assert_eq!(Vect::basis(BasisIndex::x(1)).act(&g), Vect::basis(BasisIndex::x(2)));
        let sum = Vect::block_sum(Kind::X, 4);
        assert_eq!(sum.act(&g), sum);
    }

    #[test]
    fn bar_vectors_permute_like_plain_vectors() {
        let g = Perm::from_cycles(4, &[&[1, 2, 3]]);
        let b1 = Vect::bar(BasisIndex::x(1), 4);
        let b2 = Vect::bar(BasisIndex::x(2), 4);
        assert_eq!(b1.act(&g), b2);
    }

    #[test]
    fn group_action_law_on_random_vectors() {
        let n = 4;
        let perms = all_perms(n);
        let v = Vect::basis(BasisIndex::x(1))
            .add(&Vect::basis(BasisIndex::y(3)).scale(&rat(2)))
            .add(&Vect::bar(BasisIndex::y(2), n));
        for p in perms.iter().step_by(3) {
            for q in perms.iter().step_by(5) {
                let pq = compose(p, q).unwrap();
                assert_eq!(v.act(&pq), v.act(q).act(p));
            }
        }
    }

    #[test]
    fn fixed_space_of_a_transposition() {
        let g = Perm::transposition(4, 1, 2);
        let fs = fixed_space(&g);
        assert_eq!(fs.codim, 2);
        assert_eq!(fs.basis.len(), 6);
        for b in &fs.basis {
            assert_eq!(&b.act(&g), b);
        }
        assert!(in_fixed_space(&g, &Vect::indexed_sum(Kind::X, [1, 2])));
        assert!(!in_fixed_space(&g, &Vect::basis(BasisIndex::x(1))));
    }

    #[test]
    fn fixed_space_dimensions() {
        assert_eq!(fixed_space(&Perm::identity(4)).codim, 0);
        assert_eq!(fixed_space(&Perm::identity(4)).basis.len(), 8);
        let c3 = Perm::from_cycles(4, &[&[1, 2, 3]]);
        assert_eq!(fixed_space(&c3).codim, 4);
        for g in all_perms(5) {
            let fs = fixed_space(&g);
            assert_eq!(fs.basis.len() + fs.codim, 10);
        }
    }

    #[test]
    fn bar_split_is_an_idempotent_linear_splitting() {
        let n = 4;
        let v = Vect::basis(BasisIndex::x(1));
        let (std_part, triv) = to_bar_coords(&v, n).unwrap();
        assert_eq!(std_part, Vect::bar(BasisIndex::x(1), n));
        assert_eq!(triv, Vect::block_sum(Kind::X, n).scale(&frac(1, n as i64)));
        assert_eq!(std_part.add(&triv), v);
        let (sx, sy) = std_part.block_sums();
        assert!(sx.is_zero() && sy.is_zero());
        // idempotent: splitting the std part again changes nothing
        let (again, triv2) = to_bar_coords(&std_part, n).unwrap();
        assert_eq!(again, std_part);
        assert!(triv2.is_zero());
        // block sum splits to pure trivial part
        let s = Vect::block_sum(Kind::X, n);
        let (z, t) = to_bar_coords(&s, n).unwrap();
        assert!(z.is_zero());
        assert_eq!(t, s);
    }

    #[test]
    fn invariant_two_forms_have_dimension_two() {
        for n in 4..=6 {
            assert_eq!(invariant_two_form_dim(n).unwrap(), 2);
        }
    }

    #[test]
    fn invariant_two_form_dim_rejects_small_n() {
        assert!(invariant_two_form_dim(3).is_err());
        assert!(invariant_two_form_dim(2).is_err());
    }
}
