//! Group-graded alternating 2- and 3-cochains and the ψ/φ operators.
//!
//! A two-cochain `κ = Σ_g κ_g g` stores, for each group element in its
//! support, a table over canonically ordered basis pairs; each entry has a
//! linear part (a vector) and a constant part (a parameter polynomial).
//! Values on non-canonical pair orders are obtained by alternation, never
//! stored. Three-cochains store one `SymPoly2` per canonical basis triple,
//! and φ additionally retains its factor-pair breakdown.
//!
//! Cochains over the doubled standard representation (`Space::Standard`) use
//! the same tables, read in bar coordinates: index `i` means `x̄_i`/`ȳ_i`,
//! and stored linear values keep zero block sums so that bar coefficients and
//! ambient coordinates coincide. All operators then compute the pullback of
//! the true cochain through the spanning set `{x̄_1, …, ȳ_n}`; compatibility
//! with the relation `Σ_i x̄_i = 0` is checked separately (see
//! [`TwoCochain::relation_residuals`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::group::{compose, conjugate, Perm};
use crate::group_algebra::GAElt;
use crate::param::{ParamPoly, ParamSymbol};
use crate::rat::Rat;
use crate::space::{basis, fixed_space, in_fixed_space, BasisIndex, Vect};
use crate::sympoly::SymPoly2;

/// Which doubled representation a cochain lives over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    /// `W* ⊕ W ≅ C^{2n}`, free on `x_1..y_n`.
    Doubled,
    /// `h* ⊕ h ≅ C^{2n-2}`, spanned redundantly by the bar vectors.
    Standard,
}

/// One table cell: the linear and constant parts of `κ_g` on a basis pair.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Entry {
    pub linear: Vect,
    pub constant: ParamPoly,
}

impl Entry {
    pub fn is_zero(&self) -> bool {
        self.linear.is_zero() && self.constant.is_zero()
    }

    pub fn neg(&self) -> Entry {
        Entry {
            linear: self.linear.neg(),
            constant: self.constant.neg(),
        }
    }

    pub fn add(&self, other: &Entry) -> Entry {
        Entry {
            linear: self.linear.add(&other.linear),
            constant: self.constant.add(&other.constant),
        }
    }

    pub fn scale_poly(&self, p: &ParamPoly) -> Entry {
        Entry {
            linear: self.linear.scale_poly(p),
            constant: self.constant.mul(p),
        }
    }

    /// Action of `h` on the value (the constant part is fixed).
    pub fn act(&self, h: &Perm) -> Entry {
        Entry {
            linear: self.linear.act(h),
            constant: self.constant.clone(),
        }
    }

    pub fn to_sympoly(&self) -> SymPoly2 {
        let mut s = SymPoly2::from_vect(&self.linear);
        s.add_term(crate::sympoly::VMono::Unit, self.constant.clone());
        s
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {}", self.linear, self.constant)
    }
}

type PairKey = (BasisIndex, BasisIndex);
type PairTable = BTreeMap<PairKey, Entry>;

/// Group-graded alternating bilinear map `Λ²V → (V ⊕ C) ⊗ C S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TwoCochain {
    n: usize,
    space: Space,
    table: BTreeMap<Perm, PairTable>,
}

impl TwoCochain {
    pub fn zero(n: usize, space: Space) -> Self {
        TwoCochain {
            n,
            space,
            table: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// Adds a value on a canonical pair `u < v`; accumulates and prunes.
    pub fn add_entry(&mut self, g: &Perm, u: BasisIndex, v: BasisIndex, e: Entry) {
        assert!(u < v, "entries are stored on canonical pairs only");
        if e.is_zero() {
            return;
        }
        let tbl = self.table.entry(g.clone()).or_default();
        use std::collections::btree_map::Entry as MapEntry;
        match tbl.entry((u, v)) {
            MapEntry::Vacant(slot) => {
                slot.insert(e);
            }
            MapEntry::Occupied(mut slot) => {
                let sum = slot.get().add(&e);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        if self.table.get(g).map(BTreeMap::is_empty).unwrap_or(false) {
            self.table.remove(g);
        }
    }

    /// `κ_g(u, v)` on basis symbols, with alternation.
    pub fn value(&self, g: &Perm, u: BasisIndex, v: BasisIndex) -> Entry {
        if u == v {
            return Entry::default();
        }
        let Some(tbl) = self.table.get(g) else {
            return Entry::default();
        };
        if u < v {
            tbl.get(&(u, v)).cloned().unwrap_or_default()
        } else {
            tbl.get(&(v, u)).map(Entry::neg).unwrap_or_default()
        }
    }

    /// Bilinear extension of `κ_g` to a pair of vectors.
    pub fn eval_component(&self, g: &Perm, u: &Vect, v: &Vect) -> Entry {
        let mut out = Entry::default();
        for (a, ca) in u.coords() {
            for (b, cb) in v.coords() {
                let e = self.value(g, *a, *b);
                if !e.is_zero() {
                    out = out.add(&e.scale_poly(&ca.mul(cb)));
                }
            }
        }
        out
    }

    /// Full evaluation `κ(u, v) = Σ_g κ_g(u,v) ⊗ g`.
    pub fn eval2(&self, u: &Vect, v: &Vect) -> GAElt {
        let mut out = GAElt::zero();
        for g in self.table.keys() {
            let e = self.eval_component(g, u, v);
            if !e.is_zero() {
                out.add_component(g.clone(), e.to_sympoly());
            }
        }
        out
    }

    pub fn support(&self) -> Vec<Perm> {
        self.table.keys().cloned().collect()
    }

    pub fn linear_support(&self) -> Vec<Perm> {
        self.table
            .iter()
            .filter(|(_, tbl)| tbl.values().any(|e| !e.linear.is_zero()))
            .map(|(g, _)| g.clone())
            .collect()
    }

    pub fn constant_support(&self) -> Vec<Perm> {
        self.table
            .iter()
            .filter(|(_, tbl)| tbl.values().any(|e| !e.constant.is_zero()))
            .map(|(g, _)| g.clone())
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Perm, &PairKey, &Entry)> {
        self.table
            .iter()
            .flat_map(|(g, tbl)| tbl.iter().map(move |(k, e)| (g, k, e)))
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn add(&self, other: &TwoCochain) -> TwoCochain {
        assert_eq!(self.n, other.n);
        assert!(self.space == other.space, "cannot mix representation spaces");
        let mut out = self.clone();
        for (g, k, e) in other.entries() {
            out.add_entry(g, k.0, k.1, e.clone());
        }
        out
    }

    /// The linear 2-cochain `κ^L`.
    pub fn linear_part(&self) -> TwoCochain {
        let mut out = TwoCochain::zero(self.n, self.space);
        for (g, k, e) in self.entries() {
            out.add_entry(
                g,
                k.0,
                k.1,
                Entry {
                    linear: e.linear.clone(),
                    constant: ParamPoly::zero(),
                },
            );
        }
        out
    }

    /// The constant 2-cochain `κ^C`.
    pub fn constant_part(&self) -> TwoCochain {
        let mut out = TwoCochain::zero(self.n, self.space);
        for (g, k, e) in self.entries() {
            out.add_entry(
                g,
                k.0,
                k.1,
                Entry {
                    linear: Vect::zero(),
                    constant: e.constant.clone(),
                },
            );
        }
        out
    }

    /// Substitutes parameter polynomials for symbols in every entry.
    pub fn substitute(&self, map: &BTreeMap<ParamSymbol, ParamPoly>) -> TwoCochain {
        let mut out = TwoCochain::zero(self.n, self.space);
        for (g, k, e) in self.entries() {
            out.add_entry(
                g,
                k.0,
                k.1,
                Entry {
                    linear: e.linear.substitute(map),
                    constant: e.constant.substitute(map),
                },
            );
        }
        out
    }

    /// Substitutes rational values; unbound symbols stay symbolic.
    pub fn specialize(&self, point: &BTreeMap<ParamSymbol, Rat>) -> TwoCochain {
        let map: BTreeMap<ParamSymbol, ParamPoly> = point
            .iter()
            .map(|(s, r)| (*s, ParamPoly::constant(r.clone())))
            .collect();
        self.substitute(&map)
    }

    /// Symbols still occurring anywhere in the table.
    pub fn symbols(&self) -> Vec<ParamSymbol> {
        let mut out = BTreeSet::new();
        for (_, _, e) in self.entries() {
            out.extend(e.linear.symbols());
            out.extend(e.constant.symbols());
        }
        out.into_iter().collect()
    }

    pub fn is_numeric(&self) -> bool {
        self.symbols().is_empty()
    }

    /// Kernel-compatibility with the bar relation `Σ_i x̄_i = 0`: for a
    /// standard-space table to define a genuine cochain on `h* ⊕ h`, pairing
    /// the full block sum against every generator must vanish. Returns the
    /// residual entries; empty on doubled-space cochains.
    pub fn relation_residuals(&self) -> Vec<(Perm, crate::space::Kind, BasisIndex, Entry)> {
        if self.space != Space::Standard {
            return Vec::new();
        }
        let mut out = Vec::new();
        for g in self.table.keys() {
            for kind in [crate::space::Kind::X, crate::space::Kind::Y] {
                let sum = Vect::indexed_sum(kind, 1..=self.n);
                for partner in basis(self.n) {
                    let r = self.eval_component(g, &sum, &Vect::basis(partner));
                    if !r.is_zero() {
                        out.push((g.clone(), kind, partner, r));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for TwoCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TwoCochain(n={}, {:?})", self.n, self.space)?;
        for (g, k, e) in self.entries() {
            writeln!(f, "  {g} ({}, {}) -> {e:?}", k.0, k.1)?;
        }
        Ok(())
    }
}

/// A failed check location.
#[derive(Clone, Debug)]
pub struct Witness {
    pub g: Perm,
    pub location: String,
    pub value: String,
}

/// Outcome of the structural cochain checks. Witnesses are nonempty exactly
/// when some requested check failed.
#[derive(Clone, Debug)]
pub struct CochainReport {
    pub invariant: bool,
    pub support_codims: BTreeMap<usize, usize>,
    pub image_ok: bool,
    pub kernel_ok: bool,
    pub witnesses: Vec<Witness>,
}

impl Default for CochainReport {
    fn default() -> Self {
        CochainReport {
            invariant: true,
            support_codims: BTreeMap::new(),
            image_ok: true,
            kernel_ok: true,
            witnesses: Vec::new(),
        }
    }
}

impl CochainReport {
    pub fn ok(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Verifies `h·(κ_g(u,v)) = κ_{hgh⁻¹}(h·u, h·v)` for every `g` whose
/// component (or conjugate's component) is nonzero, every basis pair, and
/// every `h` in the group generating set `{(1 2), (1 2 … n)}`; closure under
/// generators gives invariance under the whole group. With `exhaustive`,
/// every `h` is checked instead (affordable at `n = 4`).
pub fn check_invariance(k: &TwoCochain) -> CochainReport {
    check_invariance_with(k, false)
}

pub fn check_invariance_with(k: &TwoCochain, exhaustive: bool) -> CochainReport {
    let n = k.n();
    let hs = if exhaustive {
        crate::group::all_perms(n)
    } else {
        crate::group::generators(n)
    };
    let mut report = CochainReport::default();
    let bs = basis(n);
    for h in &hs {
        // range over both g and h⁻¹gh so missing conjugate components are caught
        let mut gs: BTreeSet<Perm> = k.support().into_iter().collect();
        let hinv = h.inverse();
        for g in k.support() {
            gs.insert(conjugate(&hinv, &g));
        }
        for g in &gs {
            let conj = conjugate(h, g);
            for (i, &u) in bs.iter().enumerate() {
                for &v in &bs[i + 1..] {
                    let lhs = k.value(g, u, v).act(h);
                    let rhs = k.value(&conj, u.act(h), v.act(h));
                    if lhs != rhs {
                        report.invariant = false;
                        report.witnesses.push(Witness {
                            g: g.clone(),
                            location: format!("h={h}, pair=({u}, {v})"),
                            value: format!("{lhs:?} != {rhs:?}"),
                        });
                        if report.witnesses.len() >= 8 {
                            return report;
                        }
                    }
                }
            }
        }
    }
    report
}

/// Verifies `im κ^L_g ⊆ V^g` for every `g` in the linear support. Membership
/// is decided in the cycle-sum basis of the fixed space.
pub fn check_image(k: &TwoCochain) -> CochainReport {
    let mut report = CochainReport::default();
    for (g, key, e) in k.entries() {
        if e.linear.is_zero() {
            continue;
        }
        if !in_fixed_space(g, &e.linear) {
            report.image_ok = false;
            report.witnesses.push(Witness {
                g: g.clone(),
                location: format!("pair=({}, {})", key.0, key.1),
                value: format!("{:?} is not fixed by {g}", e.linear),
            });
        }
    }
    report
}

/// Verifies `V^g ⊆ ker κ_g` for every non-identity `g` in the support: the
/// cycle-sum basis of the fixed space must pair to zero with every
/// generator.
pub fn check_kernel(k: &TwoCochain) -> CochainReport {
    let mut report = CochainReport::default();
    for g in k.support() {
        if g.is_identity() {
            continue;
        }
        let fs = fixed_space(&g);
        for w in &fs.basis {
            for b in basis(k.n()) {
                let e = k.eval_component(&g, w, &Vect::basis(b));
                if !e.is_zero() {
                    report.kernel_ok = false;
                    report.witnesses.push(Witness {
                        g: g.clone(),
                        location: format!("fixed vector {w:?} against {b}"),
                        value: format!("{e:?}"),
                    });
                    if report.witnesses.len() >= 8 {
                        return report;
                    }
                }
            }
        }
    }
    report
}

/// Records the fixed-space codimension of every support element and checks
/// that the linear support only uses codimension 0 or 2. Constant-only
/// support is exempt: degree-zero components legitimately live on elements
/// of any codimension (the 3-cycle constants use codimension 4).
pub fn check_support_codim(k: &TwoCochain) -> CochainReport {
    let mut report = CochainReport::default();
    let linear: BTreeSet<Perm> = k.linear_support().into_iter().collect();
    for g in k.support() {
        let codim = fixed_space(&g).codim;
        *report.support_codims.entry(codim).or_insert(0) += 1;
        if linear.contains(&g) && codim != 0 && codim != 2 {
            report.witnesses.push(Witness {
                g: g.clone(),
                location: "linear support".into(),
                value: format!("codim {codim}"),
            });
        }
    }
    report
}

type TriKey = [BasisIndex; 3];
type TriTable = BTreeMap<TriKey, SymPoly2>;

/// Group-graded alternating trilinear map with values in `S(V)` of degree at
/// most two; φ results also keep their factor-pair breakdown.
#[derive(Clone, PartialEq, Eq)]
pub struct ThreeCochain {
    n: usize,
    space: Space,
    table: BTreeMap<Perm, TriTable>,
    pairs: Option<BTreeMap<(Perm, Perm), TriTable>>,
}

impl ThreeCochain {
    pub fn zero(n: usize, space: Space) -> Self {
        ThreeCochain {
            n,
            space,
            table: BTreeMap::new(),
            pairs: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn support(&self) -> Vec<Perm> {
        self.table.keys().cloned().collect()
    }

    pub fn add_value(&mut self, g: &Perm, t: TriKey, s: SymPoly2) {
        if s.is_zero() {
            return;
        }
        let tbl = self.table.entry(g.clone()).or_default();
        use std::collections::btree_map::Entry as MapEntry;
        match tbl.entry(t) {
            MapEntry::Vacant(slot) => {
                slot.insert(s);
            }
            MapEntry::Occupied(mut slot) => {
                let sum = slot.get().add(&s);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        if self.table.get(g).map(BTreeMap::is_empty).unwrap_or(false) {
            self.table.remove(g);
        }
    }

    /// Value on a canonical triple.
    pub fn value(&self, g: &Perm, t: &TriKey) -> SymPoly2 {
        self.table
            .get(g)
            .and_then(|tbl| tbl.get(t))
            .cloned()
            .unwrap_or_default()
    }

    /// Value on an arbitrary basis triple, by alternation.
    pub fn value_signed(&self, g: &Perm, t: &TriKey) -> SymPoly2 {
        let (sorted, sign) = sort_triple(t);
        if sign == 0 {
            return SymPoly2::zero();
        }
        let v = self.value(g, &sorted);
        if sign < 0 {
            v.neg()
        } else {
            v
        }
    }

    pub fn values(&self) -> impl Iterator<Item = (&Perm, &TriKey, &SymPoly2)> {
        self.table
            .iter()
            .flat_map(|(g, tbl)| tbl.iter().map(move |(t, s)| (g, t, s)))
    }

    pub fn factor_pairs(&self) -> Option<&BTreeMap<(Perm, Perm), TriTable>> {
        self.pairs.as_ref()
    }

    pub fn add(&self, other: &ThreeCochain) -> ThreeCochain {
        assert_eq!(self.n, other.n);
        assert!(self.space == other.space);
        let mut out = self.clone();
        out.pairs = None;
        for (g, t, s) in other.values() {
            out.add_value(g, *t, s.clone());
        }
        out
    }

    pub fn sub(&self, other: &ThreeCochain) -> ThreeCochain {
        let mut out = self.clone();
        out.pairs = None;
        for (g, t, s) in other.values() {
            out.add_value(g, *t, s.neg());
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> ThreeCochain {
        let mut out = ThreeCochain::zero(self.n, self.space);
        let p = ParamPoly::constant(r.clone());
        for (g, t, s) in self.values() {
            out.add_value(g, *t, s.scale_poly(&p));
        }
        out
    }
}

impl fmt::Debug for ThreeCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ThreeCochain(n={}, {:?})", self.n, self.space)?;
        for (g, t, s) in self.values() {
            writeln!(f, "  {g} ({}, {}, {}) -> {s:?}", t[0], t[1], t[2])?;
        }
        Ok(())
    }
}

/// Sorts a triple, returning the canonical key and the permutation sign;
/// sign 0 marks a repeated symbol.
pub fn sort_triple(t: &TriKey) -> (TriKey, i32) {
    let mut s = *t;
    let mut sign = 1;
    for i in 0..2 {
        for j in 0..2 - i {
            if s[j] > s[j + 1] {
                s.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if s[0] == s[1] || s[1] == s[2] {
        (s, 0)
    } else {
        (s, sign)
    }
}

/// Canonical strictly increasing basis triples.
pub fn canonical_triples(n: usize) -> Vec<TriKey> {
    let bs = basis(n);
    let mut out = Vec::new();
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            for k in j + 1..bs.len() {
                out.push([bs[i], bs[j], bs[k]]);
            }
        }
    }
    out
}

/// The mixed-Jacobi operator:
/// `ψ_g(v₁,v₂,v₃) = κ_g(v₁,v₂)(g·v₃−v₃) + κ_g(v₂,v₃)(g·v₁−v₁) + κ_g(v₃,v₁)(g·v₂−v₂)`.
pub fn psi(alpha: &TwoCochain) -> ThreeCochain {
    let n = alpha.n();
    let mut out = ThreeCochain::zero(n, alpha.space());
    let triples = canonical_triples(n);
    for g in alpha.support() {
        if g.is_identity() {
            continue; // g·v − v = 0
        }
        for t in &triples {
            let mut acc = SymPoly2::zero();
            for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                let pair_value = alpha.value(&g, t[i], t[j]).to_sympoly();
                if pair_value.is_zero() {
                    continue;
                }
                let moved = Vect::basis(t[k]).act_minus_id(&g);
                if moved.is_zero() {
                    continue;
                }
                acc = acc.add(
                    &pair_value
                        .mul(&SymPoly2::from_vect(&moved))
                        .expect("cochain values have degree <= 1"),
                );
            }
            out.add_value(&g, *t, acc);
        }
    }
    out
}

/// The obstruction bracket:
/// `φ_{x,y}(v₁,v₂,v₃) = Σ_cyc α_x(v_i + y·v_i, β_y(v_j, v_k))`, graded over
/// `g = x·y`; the factor-pair breakdown is retained. Only the linear part of
/// `β` participates; a constant part is ignored with a warning on stderr.
pub fn phi(alpha: &TwoCochain, beta: &TwoCochain) -> ThreeCochain {
    let n = alpha.n();
    debug_assert_eq!(n, beta.n());
    if !beta.constant_support().is_empty() {
        eprintln!("warning: phi ignores the constant part of its second argument");
    }
    let beta = beta.linear_part();
    let triples = canonical_triples(n);
    let pair_list: Vec<(Perm, Perm)> = alpha
        .support()
        .into_iter()
        .flat_map(|x| beta.support().into_iter().map(move |y| (x.clone(), y)))
        .collect();

    let cells: Vec<((Perm, Perm), TriTable)> = pair_list
        .par_iter()
        .map(|(x, y)| {
            let mut tbl = TriTable::new();
            for t in &triples {
                let mut acc = SymPoly2::zero();
                for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    let inner = beta.value(y, t[j], t[k]).linear;
                    if inner.is_zero() {
                        continue;
                    }
                    let vi = Vect::basis(t[i]);
                    let outer_arg = vi.add(&vi.act(y));
                    let e = alpha.eval_component(x, &outer_arg, &inner);
                    if !e.is_zero() {
                        acc = acc.add(&e.to_sympoly());
                    }
                }
                if !acc.is_zero() {
                    tbl.insert(*t, acc);
                }
            }
            ((x.clone(), y.clone()), tbl)
        })
        .collect();

    let mut out = ThreeCochain::zero(n, alpha.space());
    let mut pairs: BTreeMap<(Perm, Perm), TriTable> = BTreeMap::new();
    for ((x, y), tbl) in cells {
        if tbl.is_empty() {
            continue;
        }
        let g = compose(&x, &y).expect("same n");
        for (t, s) in &tbl {
            out.add_value(&g, *t, s.clone());
        }
        pairs.insert((x, y), tbl);
    }
    out.pairs = Some(pairs);
    out
}

/// `h·θ − θ`: the failure of `θ` to be equivariant under `h`. Zero whenever
/// `θ` arose from ψ or φ on invariant inputs.
pub fn equivariance_residual(theta: &ThreeCochain, h: &Perm) -> ThreeCochain {
    let mut transported = ThreeCochain::zero(theta.n(), theta.space());
    for (g, t, s) in theta.values() {
        let conj = conjugate(h, g);
        let moved = [t[0].act(h), t[1].act(h), t[2].act(h)];
        let (sorted, sign) = sort_triple(&moved);
        debug_assert!(sign != 0);
        let value = s.act(h);
        transported.add_value(&conj, sorted, if sign < 0 { value.neg() } else { value });
    }
    transported.sub(theta)
}
