//! The parameter ring: sparse multivariate polynomials over `Q` in the fixed
//! closed alphabet of deformation parameters, with the graded reverse
//! lexicographic order.
//!
//! The alphabet and its total order are global and closed:
//! `a1 < … < a7 < b1 < … < b7 < alpha < beta < c < a < aperp < b < bperp`.
//! Families that do not use a symbol simply never mention it, so systems from
//! different families live in one ring and can be compared directly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{format_rat, parse_rat, rat, Rat};

/// Number of parameter symbols.
pub const NSYM: usize = 21;

/// One of the 19 deformation parameters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
#[repr(u8)]
pub enum ParamSymbol {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    Alpha,
    Beta,
    C,
    A,
    APerp,
    B,
    BPerp,
}

/// Every symbol, in the fixed total order.
pub const ALL_SYMBOLS: [ParamSymbol; 21] = [
    ParamSymbol::A1,
    ParamSymbol::A2,
    ParamSymbol::A3,
    ParamSymbol::A4,
    ParamSymbol::A5,
    ParamSymbol::A6,
    ParamSymbol::A7,
    ParamSymbol::B1,
    ParamSymbol::B2,
    ParamSymbol::B3,
    ParamSymbol::B4,
    ParamSymbol::B5,
    ParamSymbol::B6,
    ParamSymbol::B7,
    ParamSymbol::Alpha,
    ParamSymbol::Beta,
    ParamSymbol::C,
    ParamSymbol::A,
    ParamSymbol::APerp,
    ParamSymbol::B,
    ParamSymbol::BPerp,
];

impl ParamSymbol {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        use ParamSymbol::*;
        match self {
            A1 => "a1",
            A2 => "a2",
            A3 => "a3",
            A4 => "a4",
            A5 => "a5",
            A6 => "a6",
            A7 => "a7",
            B1 => "b1",
            B2 => "b2",
            B3 => "b3",
            B4 => "b4",
            B5 => "b5",
            B6 => "b6",
            B7 => "b7",
            Alpha => "alpha",
            Beta => "beta",
            C => "c",
            A => "a",
            APerp => "aperp",
            B => "b",
            BPerp => "bperp",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ALL_SYMBOLS
            .iter()
            .copied()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown parameter symbol {s:?}")))
    }
}

impl fmt::Display for ParamSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the fixed alphabet. `Ord` is ascending grevlex, so a
/// sorted map of monomials iterates from smallest to leading term.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub [u8; ALL_SYMBOLS.len()]);

impl Mono {
    pub const ONE: Mono = Mono([0; ALL_SYMBOLS.len()]);

    pub fn var(s: ParamSymbol) -> Mono {
        let mut e = [0u8; ALL_SYMBOLS.len()];
        e[s.index()] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (i, &x) in other.0.iter().enumerate() {
            e[i] += x;
        }
        Mono(e)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Mono) -> Mono {
        let mut e = other.0;
        for (i, &x) in self.0.iter().enumerate() {
            e[i] -= x;
        }
        Mono(e)
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (i, &x) in other.0.iter().enumerate() {
            e[i] = e[i].max(x);
        }
        Mono(e)
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn symbols(&self) -> impl Iterator<Item = ParamSymbol> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| ALL_SYMBOLS[i])
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return da.cmp(&db);
        }
        // grevlex tie-break: the monomial whose last unequal exponent is
        // smaller is the larger one.
        for i in (0..ALL_SYMBOLS.len()).rev() {
            if self.0[i] != other.0[i] {
                return if self.0[i] < other.0[i] {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over `Q`; zero coefficients are never
/// stored, and iteration order is ascending grevlex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn constant(r: Rat) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(Mono::ONE, r);
        p
    }

    pub fn int(i: i64) -> Self {
        ParamPoly::constant(rat(i))
    }

    pub fn sym(s: ParamSymbol) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(Mono::var(s), rat(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Mono::ONE)
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(rat(0))
        } else if self.is_constant() {
            self.terms.get(&Mono::ONE).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> ParamPoly {
        if r.is_zero() {
            return ParamPoly::zero();
        }
        let mut out = ParamPoly::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, c * r);
        }
        out
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// `self * m * r`.
    pub fn mul_term(&self, m: &Mono, r: &Rat) -> ParamPoly {
        let mut out = ParamPoly::zero();
        if r.is_zero() {
            return out;
        }
        for (ma, ca) in self.terms() {
            out.add_term(ma.mul(m), ca * r);
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Mono::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Leading (grevlex-largest) term.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn symbols(&self) -> Vec<ParamSymbol> {
        let mut present = [false; ALL_SYMBOLS.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    present[i] = true;
                }
            }
        }
        ALL_SYMBOLS
            .iter()
            .copied()
            .filter(|s| present[s.index()])
            .collect()
    }

    /// Exact evaluation at a full point; every symbol occurring in `self`
    /// must be assigned.
    pub fn eval(&self, point: &BTreeMap<ParamSymbol, Rat>) -> Result<Rat> {
        let mut acc = rat(0);
        for (m, c) in self.terms() {
            let mut term = c.clone();
            for s in m.symbols() {
                let v = point.get(&s).ok_or_else(|| Error::UnboundSymbol {
                    symbol: s.name().into(),
                })?;
                for _ in 0..m.0[s.index()] {
                    term *= v;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for symbols; unmapped symbols stay symbolic.
    pub fn substitute(&self, map: &BTreeMap<ParamSymbol, ParamPoly>) -> ParamPoly {
        let mut acc = ParamPoly::zero();
        for (m, c) in self.terms() {
            let mut term = ParamPoly::constant(c.clone());
            let mut residual = Mono::ONE;
            for s in m.symbols() {
                let e = m.0[s.index()];
                match map.get(&s) {
                    None => residual.0[s.index()] = e,
                    Some(p) => {
                        for _ in 0..e {
                            term = term.mul(p);
                        }
                    }
                }
            }
            acc = acc.add(&term.mul_term(&residual, &rat(1)));
        }
        acc
    }

    /// Substitutes rationals for the mapped symbols only.
    pub fn substitute_point(&self, point: &BTreeMap<ParamSymbol, Rat>) -> ParamPoly {
        let map: BTreeMap<ParamSymbol, ParamPoly> = point
            .iter()
            .map(|(s, r)| (*s, ParamPoly::constant(r.clone())))
            .collect();
        self.substitute(&map)
    }

    /// Divides by content and fixes the sign of the leading coefficient, so
    /// the result has coprime integer coefficients and a positive leading
    /// coefficient. Idempotent. Errors on zero.
    pub fn normalize_generator(&self) -> Result<ParamPoly> {
        if self.is_zero() {
            return Err(Error::ZeroNormalize);
        }
        // content of the rational coefficient list: gcd(numerators)/lcm(denominators)
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in self.terms() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rat::new(num_gcd, den_lcm);
        let mut scaled = self.scale(&content.recip());
        let lead_negative = scaled
            .leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if lead_negative {
            scaled = scaled.neg();
        }
        Ok(scaled)
    }

    /// Monic form (leading coefficient 1); errors on zero.
    pub fn monic(&self) -> Result<ParamPoly> {
        let (_, lc) = self.leading().ok_or(Error::ZeroNormalize)?;
        let lc = lc.clone();
        Ok(self.scale(&lc.recip()))
    }
}

/// Total order on polynomials used for deterministic system output: leading
/// monomial (grevlex) first, then the full term sequence lexicographically.
pub fn poly_order(a: &ParamPoly, b: &ParamPoly) -> Ordering {
    let la = a.leading().map(|(m, _)| *m);
    let lb = b.leading().map(|(m, _)| *m);
    la.cmp(&lb)
        .then_with(|| {
            let ta: Vec<_> = a.terms().rev().collect();
            let tb: Vec<_> = b.terms().rev().collect();
            ta.cmp(&tb)
        })
        .reverse()
}

fn format_mono(m: &Mono) -> String {
    let mut parts = Vec::new();
    for s in m.symbols() {
        let e = m.0[s.index()];
        if e == 1 {
            parts.push(s.name().to_string());
        } else {
            parts.push(format!("{}^{}", s.name(), e));
        }
    }
    parts.join("*")
}

impl fmt::Display for ParamPoly {
    /// Canonical polytext: terms in descending grevlex order joined by
    /// `+`/`-`; coefficients are `p` or `p/q`; `*` separates factors and `^`
    /// marks exponents greater than one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ms = format_mono(m);
            if ms.is_empty() {
                write!(f, "{}", format_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{ms}")?;
            } else {
                write!(f, "{}*{ms}", format_rat(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the polytext grammar printed by `Display`. Accepts arbitrary
/// whitespace around `+`, `-`, `*`, `^`.
pub fn parse_poly(input: &str) -> Result<ParamPoly> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = ParamPoly::zero();
    let mut rest = s;
    let mut sign = rat(1);
    // leading sign
    if let Some(r) = rest.strip_prefix('-') {
        sign = rat(-1);
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        // term ends at the next top-level + or - (no parentheses in grammar)
        let end = rest
            .char_indices()
            .find(|(i, ch)| {
                (*ch == '+' || *ch == '-')
                    && *i > 0
                    && !rest[..*i].trim_end().ends_with(['*', '^', '/'])
            })
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = rest[..end].trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("dangling operator in {input:?}")));
        }
        let (m, c) = parse_term(term)?;
        out.add_term(m, c * &sign);
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' {
            rat(-1)
        } else {
            rat(1)
        };
        rest = rest[end + 1..].trim_start();
    }
    Ok(out)
}

fn parse_term(term: &str) -> Result<(Mono, Rat)> {
    let mut coeff = rat(1);
    let mut mono = Mono::ONE;
    let mut saw_coeff = false;
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term {term:?}")));
        }
        if factor
            .chars()
            .next()
            .map(|ch| ch.is_ascii_digit())
            .unwrap_or(false)
        {
            if saw_coeff {
                coeff *= parse_rat(factor)?;
            } else {
                coeff = parse_rat(factor)?;
                saw_coeff = true;
            }
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            None => (factor.trim(), 1u8),
            Some((name, e)) => {
                let e: u8 = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                (name.trim(), e)
            }
        };
        let s = ParamSymbol::parse(name)?;
        mono.0[s.index()] += exp;
    }
    Ok((mono, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    fn p(s: &str) -> ParamPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn alphabet_is_the_fixed_closed_enumeration() {
        // a1..a7, b1..b7, alpha, beta, c, a, aperp, b, bperp
        assert_eq!(ALL_SYMBOLS.len(), NSYM);
        let names: Vec<&str> = ALL_SYMBOLS.iter().map(|s| s.name()).collect();
        assert_eq!(
            names,
            vec![
                "a1", "a2", "a3", "a4", "a5", "a6", "a7", "b1", "b2", "b3", "b4", "b5", "b6",
                "b7", "alpha", "beta", "c", "a", "aperp", "b", "bperp"
            ]
        );
    }

    #[test]
    fn add_cancels() {
        let x = ParamPoly::sym(ParamSymbol::A1);
        assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn mul_expands_conditions() {
        // alpha * (a1 - b6) = alpha*a1 - alpha*b6
        let alpha = ParamPoly::sym(ParamSymbol::Alpha);
        let lhs = alpha.mul(&p("a1 - b6"));
        assert_eq!(lhs, p("a1*alpha - b6*alpha"));
    }

    #[test]
    fn square_of_difference() {
        let d = p("aperp - a");
        assert_eq!(d.mul(&d), p("aperp^2 - 2*a*aperp + a^2"));
    }

    #[test]
    fn eval_is_exact() {
        let q = p("a1*b6");
        let mut pt = BTreeMap::new();
        pt.insert(ParamSymbol::A1, rat(2));
        pt.insert(ParamSymbol::B6, rat(3));
        assert_eq!(q.eval(&pt).unwrap(), rat(6));
        // 2a + (n-2)aperp at n = 4, a = -1, aperp = 1
        let q = p("2*a + 2*aperp");
        let mut pt = BTreeMap::new();
        pt.insert(ParamSymbol::A, rat(-1));
        pt.insert(ParamSymbol::APerp, rat(1));
        assert_eq!(q.eval(&pt).unwrap(), rat(0));
        // alpha + (n-1)beta at n = 4, alpha = -3, beta = 1
        let q = p("alpha + 3*beta");
        let mut pt = BTreeMap::new();
        pt.insert(ParamSymbol::Alpha, rat(-3));
        pt.insert(ParamSymbol::Beta, rat(1));
        assert_eq!(q.eval(&pt).unwrap(), rat(0));
    }

    #[test]
    fn eval_unbound_symbol_errors() {
        let q = p("a1*b6");
        let mut pt = BTreeMap::new();
        pt.insert(ParamSymbol::A1, rat(2));
        assert!(matches!(q.eval(&pt), Err(Error::UnboundSymbol { .. })));
    }

    #[test]
    fn normalize_strips_content_and_sign() {
        let q = p("-2*a1 + 2*b6");
        assert_eq!(q.normalize_generator().unwrap(), p("a1 - b6"));
        let cq = ParamPoly::sym(ParamSymbol::C).mul(&p("a1 - b6"));
        assert_eq!(cq.normalize_generator().unwrap(), p("a1*c - b6*c"));
        assert!(ParamPoly::zero().normalize_generator().is_err());
    }

    #[test]
    fn normalize_halves() {
        let q = p("1/2*a1 - 3/2*b6");
        assert_eq!(q.normalize_generator().unwrap(), p("a1 - 3*b6"));
    }

    #[test]
    fn grevlex_leading_term() {
        // same degree: a1 beats b6; higher degree wins regardless
        assert_eq!(p("b6 + a1").to_string(), "a1 + b6");
        assert_eq!(p("a1 + a1*b6").to_string(), "a1*b6 + a1");
        // grevlex, not lex: a1*bperp vs a7*b1 — compare from the last symbol
        let m1 = *p("a1*bperp").leading().unwrap().0;
        let m2 = *p("a7*b1").leading().unwrap().0;
        assert!(m2 > m1);
    }

    #[test]
    fn substitute_polys() {
        // alpha -> -(n-1) beta at n=4
        let mut map = BTreeMap::new();
        map.insert(ParamSymbol::Alpha, p("-3*beta"));
        assert_eq!(p("alpha + 3*beta").substitute(&map), ParamPoly::zero());
        assert_eq!(p("alpha^2").substitute(&map), p("9*beta^2"));
        assert_eq!(p("alpha*c + a1").substitute(&map), p("-3*beta*c + a1"));
    }

    #[test]
    fn polytext_roundtrip_handwritten() {
        for s in [
            "0",
            "1",
            "-1/2",
            "a1",
            "-a1",
            "a1 - b6",
            "2*a1*c - 1/3*bperp^2",
            "alpha*a1 - beta*b6 + 7",
        ] {
            let q = p(s);
            assert_eq!(parse_poly(&q.to_string()).unwrap(), q);
        }
    }

    #[test]
    fn fraction_coeff_roundtrip() {
        let mut q = ParamPoly::zero();
        q.add_term(Mono::var(ParamSymbol::A1), frac(-7, 3));
        q.add_term(Mono::ONE, frac(1, 2));
        assert_eq!(parse_poly(&q.to_string()).unwrap(), q);
    }
}
