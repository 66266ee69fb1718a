//! Buchberger-based Gröbner engine over the parameter ring, used for ideal
//! membership, ideal equality, and the dimension/degree of obstruction
//! varieties via Hilbert series of the leading-term ideal.
//!
//! Only the graded reverse lexicographic order is implemented (it is the
//! order every reported computation uses). The pair queue follows the normal
//! selection strategy — smallest lcm degree first, creation order as the
//! tie-break — with the coprimality and chain criteria. Coefficient swell is
//! managed by content-stripping after every completed reduction.
//!
//! For homogeneous input a degree-capped run is available: processing all
//! S-pairs of degree at most `d` yields a basis that decides membership for
//! homogeneous polynomials of degree at most `d`. Ideal-equality checks of
//! quadratic systems use this fast path; dimension runs always build the
//! full basis.

use std::collections::BinaryHeap;
use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::param::{Mono, ParamPoly, ParamSymbol};

/// Options for a Buchberger run.
#[derive(Clone, Copy, Default)]
pub struct GroebnerOpts {
    /// Wall-clock budget; checked cooperatively between reductions.
    pub budget: Option<std::time::Duration>,
    /// Skip S-pairs above this degree. Sound for membership of homogeneous
    /// polynomials of degree ≤ cap when the input is homogeneous.
    pub degree_cap: Option<u32>,
}

/// A (possibly degree-capped) Gröbner basis: monic, inter-reduced, sorted.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub generators: Vec<ParamPoly>,
    pub spairs: usize,
    pub degree_cap: Option<u32>,
    pub elapsed_ms: u128,
}

fn leading_mono(p: &ParamPoly) -> Mono {
    *p.leading().expect("nonzero polynomial").0
}

/// Complete multivariate division: no term of the result is divisible by any
/// leading monomial of `basis`. Divisors are tried in order, so the result
/// is deterministic; it is the unique normal form when `basis` is a Gröbner
/// basis.
pub fn reduce_full(p: &ParamPoly, basis: &[ParamPoly]) -> ParamPoly {
    let lms: Vec<Mono> = basis.iter().map(leading_mono).collect();
    let mut work = p.clone();
    let mut remainder = ParamPoly::zero();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading().unwrap();
            (*m, c.clone())
        };
        for (g, glm) in basis.iter().zip(&lms) {
            if glm.divides(&lm) {
                let (_, glc) = g.leading().unwrap();
                let factor = lc.clone() / glc.clone();
                let shift = glm.quotient(&lm);
                work = work.sub(&g.mul_term(&shift, &factor));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.add_term(lm, lc.clone());
        work.add_term(lm, -lc);
    }
    remainder
}

/// Normal form of `p` modulo the basis; membership holds exactly when the
/// result is zero (for honest, uncapped bases, or capped ones queried within
/// their degree range on homogeneous ideals).
pub fn normal_form(p: &ParamPoly, gb: &GroebnerBasis) -> ParamPoly {
    reduce_full(p, &gb.generators)
}

#[derive(PartialEq, Eq)]
struct PairEntry {
    degree: u32,
    created: usize,
    i: usize,
    j: usize,
}

impl Ord for PairEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // BinaryHeap is a max-heap; invert for smallest-first
        other
            .degree
            .cmp(&self.degree)
            .then(other.created.cmp(&self.created))
    }
}

impl PartialOrd for PairEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Computes a reduced Gröbner basis of the input generators.
pub fn buchberger(gens: &[ParamPoly], opts: GroebnerOpts) -> Result<GroebnerBasis> {
    let start = Instant::now();
    if opts.degree_cap.is_some() {
        for g in gens {
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous {
                    generator: g.to_string(),
                });
            }
        }
    }
    let mut basis: Vec<ParamPoly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let reduced = reduce_full(g, &basis);
        if !reduced.is_zero() {
            basis.push(reduced.normalize_generator()?);
        }
    }

    let mut queue: BinaryHeap<PairEntry> = BinaryHeap::new();
    let mut created = 0usize;
    let mut processed: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pairs = |queue: &mut BinaryHeap<PairEntry>,
                          basis: &[ParamPoly],
                          new_idx: usize,
                          created: &mut usize| {
        for i in 0..new_idx {
            let lcm = leading_mono(&basis[i]).lcm(&leading_mono(&basis[new_idx]));
            queue.push(PairEntry {
                degree: lcm.degree(),
                created: *created,
                i,
                j: new_idx,
            });
            *created += 1;
        }
    };
    for idx in 0..basis.len() {
        push_pairs(&mut queue, &basis, idx, &mut created);
    }

    let mut spairs = 0usize;
    while let Some(PairEntry { degree, i, j, .. }) = queue.pop() {
        if let Some(cap) = opts.degree_cap {
            if degree > cap {
                continue;
            }
        }
        if let Some(budget) = opts.budget {
            if start.elapsed() > budget {
                return Err(Error::BudgetExceeded {
                    elapsed_ms: start.elapsed().as_millis(),
                });
            }
        }
        let (lmi, lmj) = (leading_mono(&basis[i]), leading_mono(&basis[j]));
        let lcm = lmi.lcm(&lmj);
        processed.insert((i, j));
        // coprimality criterion
        if lmi.coprime(&lmj) {
            continue;
        }
        // chain criterion: some k with LM_k | lcm and both pairs done
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leading_mono(&basis[k]).divides(&lcm)
                && processed.contains(&(i.min(k), i.max(k)))
                && processed.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        spairs += 1;
        let (_, lci) = basis[i].leading().unwrap();
        let (_, lcj) = basis[j].leading().unwrap();
        let si = basis[i].mul_term(&lmi.quotient(&lcm), &(lcj.clone()));
        let sj = basis[j].mul_term(&lmj.quotient(&lcm), &(lci.clone()));
        let spoly = si.sub(&sj);
        let reduced = reduce_full(&spoly, &basis);
        if !reduced.is_zero() {
            basis.push(reduced.normalize_generator()?);
            let new_idx = basis.len() - 1;
            push_pairs(&mut queue, &basis, new_idx, &mut created);
        }
    }

    // inter-reduce: drop generators whose leading monomial is divisible by
    // another's, then reduce tails and normalize monic
    let mut keep: Vec<ParamPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = leading_mono(g);
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && {
                let hm = leading_mono(h);
                hm.divides(&lm) && (hm != lm || k < idx)
            }
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced_basis: Vec<ParamPoly> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<ParamPoly> = keep
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, h)| h.clone())
            .collect();
        let r = reduce_full(&keep[i], &others);
        if !r.is_zero() {
            reduced_basis.push(r.monic()?);
        }
    }
    reduced_basis.sort_by(crate::param::poly_order);
    Ok(GroebnerBasis {
        generators: reduced_basis,
        spairs,
        degree_cap: opts.degree_cap,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Dimension and degree data of a homogeneous ideal, from the Hilbert series
/// of its leading-term ideal over the polynomial ring on `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub affine_dim: i64,
    pub projective_dim: i64,
    pub degree: BigInt,
}

/// Computes Krull dimension of the quotient, the projective dimension
/// (`affine − 1`), and the degree, for the homogeneous ideal spanned by the
/// (full, uncapped) basis inside the polynomial ring on `vars`.
pub fn hilbert_dimension(gb: &GroebnerBasis, vars: &[ParamSymbol]) -> Result<HilbertData> {
    if gb.degree_cap.is_some() {
        return Err(Error::InvalidCochain(
            "dimension requires a full (uncapped) basis".into(),
        ));
    }
    for g in &gb.generators {
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous {
                generator: g.to_string(),
            });
        }
        for s in g.symbols() {
            if !vars.contains(&s) {
                return Err(Error::UnboundSymbol {
                    symbol: s.name().into(),
                });
            }
        }
    }
    let lms: Vec<Mono> = gb.generators.iter().map(leading_mono).collect();
    let numerator = hilbert_numerator(&minimalize(lms));
    let k = vars.len() as i64;
    hilbert_data_from_numerator(numerator, k)
}

pub(crate) fn hilbert_data_from_numerator(mut numerator: Vec<BigInt>, k: i64) -> Result<HilbertData> {
    // strip factors of (1 − t)
    let mut e: i64 = 0;
    while eval_at_one(&numerator).is_zero() && !is_zero_poly(&numerator) {
        numerator = divide_by_one_minus_t(&numerator);
        e += 1;
    }
    if is_zero_poly(&numerator) {
        // quotient ring is zero
        return Ok(HilbertData {
            affine_dim: -1,
            projective_dim: -2,
            degree: BigInt::zero(),
        });
    }
    Ok(HilbertData {
        affine_dim: k - e,
        projective_dim: k - e - 1,
        degree: eval_at_one(&numerator),
    })
}

fn is_zero_poly(p: &[BigInt]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn eval_at_one(p: &[BigInt]) -> BigInt {
    p.iter().sum()
}

/// Divides by `(1 − t)`, assuming exact divisibility.
fn divide_by_one_minus_t(p: &[BigInt]) -> Vec<BigInt> {
    // p(t) = (1 − t) q(t): q_0 = p_0, q_i = p_i + q_{i−1}
    let mut q = vec![BigInt::zero(); p.len().saturating_sub(1)];
    let mut carry = BigInt::zero();
    for i in 0..p.len().saturating_sub(1) {
        carry = &p[i] + &carry;
        q[i] = carry.clone();
    }
    q
}

/// Removes monomials divisible by another generator.
pub(crate) fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort();
    gens.dedup();
    let mut keep = Vec::new();
    'outer: for (i, m) in gens.iter().enumerate() {
        for (j, d) in gens.iter().enumerate() {
            if i != j && d.divides(m) && (d != m || j < i) {
                continue 'outer;
            }
        }
        keep.push(*m);
    }
    keep
}

fn poly_mul_one_minus_td(p: &[BigInt], d: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d as usize];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + d as usize] -= c;
    }
    out
}

fn poly_add_shifted(a: &[BigInt], b: &[BigInt], shift: usize) -> Vec<BigInt> {
    let len = a.len().max(b.len() + shift);
    let mut out = vec![BigInt::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] += c;
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1−t)^k` of `S/I` for the
/// monomial ideal generated by `gens`, by the standard pivot recursion
/// `N(I) = N(I + (x)) + t·N(I : x)`.
pub(crate) fn hilbert_numerator(gens: &[Mono]) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.degree() == 0) {
        return vec![BigInt::zero()];
    }
    // pairwise coprime: product formula
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, m)| gens.iter().skip(i + 1).all(|l| m.coprime(l)));
    if coprime {
        let mut out = vec![BigInt::one()];
        for m in gens {
            out = poly_mul_one_minus_td(&out, m.degree());
        }
        return out;
    }
    // pivot: the variable occurring most often among non-pure-power gens
    let mut counts = [0usize; crate::param::NSYM];
    for m in gens {
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|(_, c)| **c)
        .map(|(i, _)| i)
        .unwrap();
    let x = Mono::var(crate::param::ALL_SYMBOLS[pivot]);

    // I + (x)
    let mut plus: Vec<Mono> = gens.iter().filter(|m| m.0[pivot] == 0).copied().collect();
    plus.push(x);
    // I : x
    let colon: Vec<Mono> = gens
        .iter()
        .map(|m| {
            if m.0[pivot] > 0 {
                let mut e = m.0;
                e[pivot] -= 1;
                Mono(e)
            } else {
                *m
            }
        })
        .collect();
    let n_plus = hilbert_numerator(&minimalize(plus));
    let n_colon = hilbert_numerator(&minimalize(colon));
    poly_add_shifted(&n_plus, &n_colon, 1)
}
