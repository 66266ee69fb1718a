//! Commutative polynomials of degree at most two in the vector-space basis
//! symbols, with `ParamPoly` coefficients. These are the value space of the
//! ψ and φ operators: linear cochain values contribute degree one, constants
//! degree zero, and products of two linear values degree two.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::Perm;
use crate::param::{ParamPoly, ParamSymbol};
use crate::space::{BasisIndex, Vect};

/// Commutative monomial in basis symbols, degree ≤ 2. `Quad` keeps its two
/// factors sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VMono {
    Unit,
    Lin(BasisIndex),
    Quad(BasisIndex, BasisIndex),
}

impl VMono {
    pub fn degree(&self) -> usize {
        match self {
            VMono::Unit => 0,
            VMono::Lin(_) => 1,
            VMono::Quad(_, _) => 2,
        }
    }

    pub fn quad(a: BasisIndex, b: BasisIndex) -> VMono {
        if a <= b {
            VMono::Quad(a, b)
        } else {
            VMono::Quad(b, a)
        }
    }

    pub fn mul(&self, other: &VMono) -> Result<VMono> {
        Ok(match (self, other) {
            (VMono::Unit, m) | (m, VMono::Unit) => *m,
            (VMono::Lin(a), VMono::Lin(b)) => VMono::quad(*a, *b),
            _ => {
                return Err(Error::DegreeOverflow {
                    left_deg: self.degree(),
                    right_deg: other.degree(),
                })
            }
        })
    }

    pub fn act(&self, g: &Perm) -> VMono {
        match self {
            VMono::Unit => VMono::Unit,
            VMono::Lin(a) => VMono::Lin(a.act(g)),
            VMono::Quad(a, b) => VMono::quad(a.act(g), b.act(g)),
        }
    }
}

impl fmt::Display for VMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VMono::Unit => write!(f, "1"),
            VMono::Lin(a) => write!(f, "{a}"),
            VMono::Quad(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

impl VMono {
    pub fn parse(s: &str) -> Result<VMono> {
        let s = s.trim();
        if s == "1" {
            return Ok(VMono::Unit);
        }
        match s.split_once('*') {
            None => Ok(VMono::Lin(BasisIndex::parse(s)?)),
            Some((a, b)) => Ok(VMono::quad(
                BasisIndex::parse(a.trim())?,
                BasisIndex::parse(b.trim())?,
            )),
        }
    }
}

/// Sparse degree-≤2 polynomial in basis symbols over the parameter ring.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymPoly2 {
    terms: BTreeMap<VMono, ParamPoly>,
}

impl SymPoly2 {
    pub fn zero() -> Self {
        SymPoly2::default()
    }

    pub fn constant(p: ParamPoly) -> Self {
        let mut out = SymPoly2::zero();
        out.add_term(VMono::Unit, p);
        out
    }

    pub fn from_vect(v: &Vect) -> Self {
        let mut out = SymPoly2::zero();
        for (b, p) in v.coords() {
            out.add_term(VMono::Lin(*b), p.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VMono, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &VMono) -> ParamPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(VMono::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: VMono, p: ParamPoly) {
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &SymPoly2) -> SymPoly2 {
        let mut out = self.clone();
        for (m, p) in other.terms() {
            out.add_term(*m, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly2) -> SymPoly2 {
        let mut out = self.clone();
        for (m, p) in other.terms() {
            out.add_term(*m, p.neg());
        }
        out
    }

    pub fn neg(&self) -> SymPoly2 {
        SymPoly2::zero().sub(self)
    }

    pub fn scale_poly(&self, p: &ParamPoly) -> SymPoly2 {
        let mut out = SymPoly2::zero();
        for (m, q) in self.terms() {
            out.add_term(*m, q.mul(p));
        }
        out
    }

    /// Commutative product; errors if the vector-space degree would exceed 2.
    pub fn mul(&self, other: &SymPoly2) -> Result<SymPoly2> {
        let mut out = SymPoly2::zero();
        for (ma, pa) in self.terms() {
            for (mb, pb) in other.terms() {
                out.add_term(ma.mul(mb)?, pa.mul(pb));
            }
        }
        Ok(out)
    }

    pub fn act(&self, g: &Perm) -> SymPoly2 {
        let mut out = SymPoly2::zero();
        for (m, p) in self.terms() {
            out.add_term(m.act(g), p.clone());
        }
        out
    }

    pub fn substitute(&self, map: &BTreeMap<ParamSymbol, ParamPoly>) -> SymPoly2 {
        let mut out = SymPoly2::zero();
        for (m, p) in self.terms() {
            out.add_term(*m, p.substitute(map));
        }
        out
    }

    /// The degree-1 part as a vector.
    pub fn linear_part(&self) -> Vect {
        let mut v = Vect::zero();
        for (m, p) in self.terms() {
            if let VMono::Lin(b) = m {
                v.add_coord(*b, p.clone());
            }
        }
        v
    }

    /// The degree-0 coefficient.
    pub fn constant_part(&self) -> ParamPoly {
        self.coeff(&VMono::Unit)
    }

    pub fn symbols(&self) -> Vec<ParamSymbol> {
        let mut out = std::collections::BTreeSet::new();
        for (_, p) in self.terms() {
            out.extend(p.symbols());
        }
        out.into_iter().collect()
    }
}

impl fmt::Debug for SymPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, p)| format!("({p})*{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
