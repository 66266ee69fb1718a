//! Permutations of `{1..n}` and their cycle structure.
//!
//! Composition applies the right factor first: `(p ∘ q)(i) = p(q(i))`, so
//! `(1 2)(2 3) = (1 2 3)`. Every group-graded object in the crate is keyed by
//! these permutations.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation. `images[i]` is the image
/// of point `i`, both zero-based internally; all parsing and printing is
/// one-based cycle notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds from zero-based images, validating bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::Parse(format!("not a bijection: {images:?}")));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Transposition `(i j)` on one-based points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i != j && 1 <= i && i <= n && j <= n && 1 <= j);
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(i - 1, j - 1);
        Perm { images }
    }

    /// Builds from one-based cycles, e.g. `&[&[1, 2, 3]]` for `(1 2 3)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<u8> = (0..n as u8).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                images[from] = to as u8;
            }
        }
        Perm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a one-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u8 == j)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Perm { images }
    }

    /// Number of one-based fixed points.
    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u8 == j)
            .count()
    }

    /// Cycles of length >= 2, each rotated to start at its least point,
    /// sorted by that point; one-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// All cycles including fixed points (used when forming cycle-sum bases).
    pub fn all_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.all_cycles().len()
    }

    /// Parses cycle notation: `"(1 2)(3 4)"`, `"()"` for the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse(format!("cycle notation {s:?}: {msg}"));
        if s.is_empty() || s == "()" || s == "1" {
            return Ok(Perm::identity(n));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| bad("expected '('"))?;
            if !rest[..open].trim().is_empty() {
                return Err(bad("unexpected text between cycles"));
            }
            let close = rest.find(')').ok_or_else(|| bad("expected ')'"))?;
            let body = &rest[open + 1..close];
            let mut cycle = Vec::new();
            for tok in body.split([' ', ',']) {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok.parse().map_err(|_| bad("bad point"))?;
                if p == 0 || p > n {
                    return Err(bad("point out of range"));
                }
                cycle.push(p);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        let mut seen = vec![false; n];
        for c in &cycles {
            for &p in c {
                if seen[p - 1] {
                    return Err(bad("repeated point"));
                }
                seen[p - 1] = true;
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Ok(Perm::from_cycles(n, &refs))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(p ∘ q)(i) = p(q(i))` — apply `q` first.
pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch {
            left: p.n(),
            right: q.n(),
        });
    }
    let images = q.images.iter().map(|&i| p.images[i as usize]).collect();
    Ok(Perm { images })
}

/// Conjugate `h g h^{-1}`.
pub fn conjugate(h: &Perm, g: &Perm) -> Perm {
    let hg = compose(h, g).expect("same n");
    compose(&hg, &h.inverse()).expect("same n")
}

/// Multiset of cycle lengths (descending), including fixed points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType(pub Vec<usize>);

impl CycleType {
    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&l| l == 1)
    }
    pub fn is_transposition(&self) -> bool {
        self.0.first() == Some(&2) && self.0.iter().filter(|&&l| l > 1).count() == 1
    }
    pub fn is_3cycle(&self) -> bool {
        self.0.first() == Some(&3) && self.0.iter().filter(|&&l| l > 1).count() == 1
    }
    pub fn is_double_transposition(&self) -> bool {
        self.0.iter().filter(|&&l| l == 2).count() == 2
            && self.0.iter().filter(|&&l| l > 2).count() == 0
    }
}

/// Cycle type of `g`.
pub fn classify(g: &Perm) -> CycleType {
    let mut lengths: Vec<usize> = g.all_cycles().iter().map(|c| c.len()).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    CycleType(lengths)
}

/// All transpositions `(i j)`, `i < j`.
pub fn transpositions(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(Perm::transposition(n, i, j));
        }
    }
    out
}

/// All 3-cycles `(i j k)`.
pub fn three_cycles(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i < j && i < k && j != k {
                    out.push(Perm::from_cycles(n, &[&[i, j, k]]));
                }
            }
        }
    }
    out
}

/// Generating set `{(1 2), (1 2 ... n)}` used for invariance checks.
pub fn generators(n: usize) -> Vec<Perm> {
    let long: Vec<usize> = (1..=n).collect();
    vec![
        Perm::transposition(n, 1, 2),
        Perm::from_cycles(n, &[&long]),
    ]
}

/// Every element of the symmetric group, in a deterministic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm {
            images: images.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}
