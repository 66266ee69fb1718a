//! The built-in ledger of obstruction condition systems, transcribed
//! block-by-block and pinned by golden tests. Each block is a list of
//! parameter polynomials with the group degree `n` folded in as a scalar;
//! the engine compares its own extracted systems against these.
//!
//! Block catalogue (see `docs/ledger.md` for prose descriptions):
//! - `Obstr1PartI..IV` — conditions for the identity constant family to
//!   clear the first obstruction for `κ₁^L` (16 quadrics).
//! - `Obstr2kappaC1`, `Obstr2kappaCref` — second-obstruction conditions for
//!   `κ₁^C` and `κ_refl^C` against `κ₁^L` (2 + 4 quadrics).
//! - `LOAFull` — union of the six blocks above (the Lie-family ideal).
//! - `Obstr2kappaCrefBranch` — the linear relations forced when the
//!   transposition constant is nonzero.
//! - `Obstr1Simplified`, `Obstr2kappaC1Simplified`, `FinalThree` — the
//!   collapsed forms valid modulo the branch relations.
//! - `Obstr2PhiC1C2C3L2` — the four quadrics controlling lifts of
//!   `κ_refl^L` with an identity constant part.
//! - `DoubledStdRep`, `TrivialRep`, `StdRep`, `DoubledTrivialRep` — image
//!   constraints cutting out the subrepresentation subvarieties.
//! - `StdExtension` — the linear extension constraints used by the
//!   standard-representation nonexistence certificate.

use crate::error::{Error, Result};
use crate::param::{ParamPoly, ParamSymbol};

use ParamSymbol::*;

/// A named condition block.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LedgerName {
    Obstr1PartI,
    Obstr1PartII,
    Obstr1PartIII,
    Obstr1PartIV,
    Obstr1,
    Obstr2kappaC1,
    Obstr2kappaCref,
    LOAFull,
    Obstr2kappaCrefBranch,
    Obstr1Simplified,
    Obstr2kappaC1Simplified,
    FinalThree,
    Obstr2PhiC1C2C3L2,
    DoubledStdRep,
    TrivialRep,
    StdRep,
    DoubledTrivialRep,
    StdExtension,
}

impl LedgerName {
    pub const ALL: [LedgerName; 18] = [
        LedgerName::Obstr1PartI,
        LedgerName::Obstr1PartII,
        LedgerName::Obstr1PartIII,
        LedgerName::Obstr1PartIV,
        LedgerName::Obstr1,
        LedgerName::Obstr2kappaC1,
        LedgerName::Obstr2kappaCref,
        LedgerName::LOAFull,
        LedgerName::Obstr2kappaCrefBranch,
        LedgerName::Obstr1Simplified,
        LedgerName::Obstr2kappaC1Simplified,
        LedgerName::FinalThree,
        LedgerName::Obstr2PhiC1C2C3L2,
        LedgerName::DoubledStdRep,
        LedgerName::TrivialRep,
        LedgerName::StdRep,
        LedgerName::DoubledTrivialRep,
        LedgerName::StdExtension,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LedgerName::Obstr1PartI => "Obstr1PartI",
            LedgerName::Obstr1PartII => "Obstr1PartII",
            LedgerName::Obstr1PartIII => "Obstr1PartIII",
            LedgerName::Obstr1PartIV => "Obstr1PartIV",
            LedgerName::Obstr1 => "Obstr1",
            LedgerName::Obstr2kappaC1 => "Obstr2kappaC1",
            LedgerName::Obstr2kappaCref => "Obstr2kappaCref",
            LedgerName::LOAFull => "LOA-full",
            LedgerName::Obstr2kappaCrefBranch => "Obstr2kappaCrefBranch",
            LedgerName::Obstr1Simplified => "Obstr1Simplified",
            LedgerName::Obstr2kappaC1Simplified => "Obstr2kappaC1Simplified",
            LedgerName::FinalThree => "FinalThree",
            LedgerName::Obstr2PhiC1C2C3L2 => "Obstr2PhiC1C2C3L2",
            LedgerName::DoubledStdRep => "DoubledStdRep",
            LedgerName::TrivialRep => "TrivialRep",
            LedgerName::StdRep => "StdRep",
            LedgerName::DoubledTrivialRep => "DoubledTrivialRep",
            LedgerName::StdExtension => "StdExtension",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::UnknownLedger(s.into()))
    }

    /// The ambient polynomial ring of the block (fixed, independent of
    /// which symbols happen to occur).
    pub fn symbols(self) -> Vec<ParamSymbol> {
        match self {
            LedgerName::Obstr2PhiC1C2C3L2 => vec![A, APerp, B, BPerp, Alpha, Beta, C],
            _ => vec![
                A1, A2, A3, A4, A5, A6, A7, B1, B2, B3, B4, B5, B6, B7, Alpha, Beta, C,
            ],
        }
    }
}

impl std::fmt::Display for LedgerName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn s(x: ParamSymbol) -> ParamPoly {
    ParamPoly::sym(x)
}

/// Linear combination `Σ coef·sym` with integer coefficients.
fn lc(terms: &[(i64, ParamSymbol)]) -> ParamPoly {
    let mut acc = ParamPoly::zero();
    for (coef, sym) in terms {
        acc = acc.add(&s(*sym).scale(&crate::rat::rat(*coef)));
    }
    acc
}

fn sum(parts: &[ParamPoly]) -> ParamPoly {
    let mut acc = ParamPoly::zero();
    for p in parts {
        acc = acc.add(p);
    }
    acc
}

/// The verbatim generators of a block with `n` substituted.
pub fn generators(name: LedgerName, n: usize) -> Result<Vec<ParamPoly>> {
    crate::check_n(n)?;
    let n = n as i64;
    let gens = match name {
        LedgerName::Obstr1PartI => vec![
            // a1(a5 + a6 + n a7) − b1 a2 − b5 a6 + a5(b5 + b6 + n b7) + b7(a3 − a5 − a6)
            sum(&[
                s(A1).mul(&lc(&[(1, A5), (1, A6), (n, A7)])),
                s(B1).mul(&s(A2)).neg(),
                s(B5).mul(&s(A6)).neg(),
                s(A5).mul(&lc(&[(1, B5), (1, B6), (n, B7)])),
                s(B7).mul(&lc(&[(1, A3), (-1, A5), (-1, A6)])),
            ]),
            // b1(a5 + a6 + n a7) − b1 b2 + b1 a5 + b5(b5 − a1 + n b7) + b7(b3 − b5 − b6)
            sum(&[
                s(B1).mul(&lc(&[(1, A5), (1, A6), (n, A7)])),
                s(B1).mul(&s(B2)).neg(),
                s(B1).mul(&s(A5)),
                s(B5).mul(&lc(&[(1, B5), (-1, A1), (n, B7)])),
                s(B7).mul(&lc(&[(1, B3), (-1, B5), (-1, B6)])),
            ]),
        ],
        LedgerName::Obstr1PartII => vec![
            // −a2(b5 + b6 + n b7) − a2 a1 − a2 b6 + a6(a6 + b2 + n a7) + a7(a3 − a5 − a6)
            sum(&[
                s(A2).mul(&lc(&[(1, B5), (1, B6), (n, B7)])).neg(),
                s(A2).mul(&s(A1)).neg(),
                s(A2).mul(&s(B6)).neg(),
                s(A6).mul(&lc(&[(1, A6), (1, B2), (n, A7)])),
                s(A7).mul(&lc(&[(1, A3), (-1, A5), (-1, A6)])),
            ]),
            // −b2(b5 + b6 + n b7) − a2 b1 − a6 b5 + b6(a5 + a6 + n a7) + a7(b3 − b5 − b6)
            sum(&[
                s(B2).mul(&lc(&[(1, B5), (1, B6), (n, B7)])).neg(),
                s(A2).mul(&s(B1)).neg(),
                s(A6).mul(&s(B5)).neg(),
                s(B6).mul(&lc(&[(1, A5), (1, A6), (n, A7)])),
                s(A7).mul(&lc(&[(1, B3), (-1, B5), (-1, B6)])),
            ]),
        ],
        LedgerName::Obstr1PartIII => vec![
            // a7(b3 − b5) − a4 b6 + (b4 − b7)(a4 + (n−1) a7 + a6)
            sum(&[
                s(A7).mul(&lc(&[(1, B3), (-1, B5)])),
                s(A4).mul(&s(B6)).neg(),
                lc(&[(1, B4), (-1, B7)]).mul(&lc(&[(1, A4), (n - 1, A7), (1, A6)])),
            ]),
            // a1(a3 + n a4) + a5(b3 + n b4) + b4(a3 − a5 − a6) − a2 b1 − b5 a6
            sum(&[
                s(A1).mul(&lc(&[(1, A3), (n, A4)])),
                s(A5).mul(&lc(&[(1, B3), (n, B4)])),
                s(B4).mul(&lc(&[(1, A3), (-1, A5), (-1, A6)])),
                s(A2).mul(&s(B1)).neg(),
                s(B5).mul(&s(A6)).neg(),
            ]),
            // −a1(a5 + a6 + n a7) − a5(b5 + n b7) − b7(a3 − a5 − a6) + a2 b1 + b3 a6 − a3 b6
            sum(&[
                s(A1).mul(&lc(&[(1, A5), (1, A6), (n, A7)])).neg(),
                s(A5).mul(&lc(&[(1, B5), (n, B7)])).neg(),
                s(B7).mul(&lc(&[(1, A3), (-1, A5), (-1, A6)])).neg(),
                s(A2).mul(&s(B1)),
                s(B3).mul(&s(A6)),
                s(A3).mul(&s(B6)).neg(),
            ]),
            // b7(b3 − b5) − b4 b6 + (b4 − b7)(a1 + b4 + (n−1) b7 + b6) − b1(a4 − a7)
            sum(&[
                s(B7).mul(&lc(&[(1, B3), (-1, B5)])),
                s(B4).mul(&s(B6)).neg(),
                lc(&[(1, B4), (-1, B7)]).mul(&lc(&[(1, A1), (1, B4), (n - 1, B7), (1, B6)])),
                s(B1).mul(&lc(&[(1, A4), (-1, A7)])).neg(),
            ]),
            // b1(a5 − b2 + a3 + n a4) − b5(a1 + b6 − b3 − n b4) + b4(b3 − b5 − b6)
            sum(&[
                s(B1).mul(&lc(&[(1, A5), (-1, B2), (1, A3), (n, A4)])),
                s(B5).mul(&lc(&[(1, A1), (1, B6), (-1, B3), (-n, B4)])).neg(),
                s(B4).mul(&lc(&[(1, B3), (-1, B5), (-1, B6)])),
            ]),
            // b1(−b2 + a5 + a3 + n a7) + b5(b5 + n b7) + b7(b3 − b5 − b6) − a1(b3 − b6)
            sum(&[
                s(B1).mul(&lc(&[(-1, B2), (1, A5), (1, A3), (n, A7)])),
                s(B5).mul(&lc(&[(1, B5), (n, B7)])),
                s(B7).mul(&lc(&[(1, B3), (-1, B5), (-1, B6)])),
                s(A1).mul(&lc(&[(1, B3), (-1, B6)])).neg(),
            ]),
        ],
        LedgerName::Obstr1PartIV => vec![
            // a7(a3 − a6) − a4 a5 + (a4 − a7)(−b2 + a4 + (n−1) a7 + a5) + a2(b4 − b7)
            sum(&[
                s(A7).mul(&lc(&[(1, A3), (-1, A6)])),
                s(A4).mul(&s(A5)).neg(),
                lc(&[(1, A4), (-1, A7)]).mul(&lc(&[(-1, B2), (1, A4), (n - 1, A7), (1, A5)])),
                s(A2).mul(&lc(&[(1, B4), (-1, B7)])),
            ]),
            // −a2(a1 + b6 + b3 + n b4) + a6(b2 − a5 + a3 + n a4) + a4(a3 − a5 − a6)
            sum(&[
                s(A2).mul(&lc(&[(1, A1), (1, B6), (1, B3), (n, B4)])).neg(),
                s(A6).mul(&lc(&[(1, B2), (-1, A5), (1, A3), (n, A4)])),
                s(A4).mul(&lc(&[(1, A3), (-1, A5), (-1, A6)])),
            ]),
            // a2(a1 + b6 + b3 + n b7) − a6(a6 + n a7) − a7(a3 − a5 − a6) − b2(a3 − a5)
            sum(&[
                s(A2).mul(&lc(&[(1, A1), (1, B6), (1, B3), (n, B7)])),
                s(A6).mul(&lc(&[(1, A6), (n, A7)])).neg(),
                s(A7).mul(&lc(&[(1, A3), (-1, A5), (-1, A6)])).neg(),
                s(B2).mul(&lc(&[(1, A3), (-1, A5)])).neg(),
            ]),
            // b7(a3 − a6) − b4 a5 + (a4 − a7)(b4 + (n−1) b7 + b5)
            sum(&[
                s(B7).mul(&lc(&[(1, A3), (-1, A6)])),
                s(B4).mul(&s(A5)).neg(),
                lc(&[(1, A4), (-1, A7)]).mul(&lc(&[(1, B4), (n - 1, B7), (1, B5)])),
            ]),
            // −b2(b3 + n b4) + b6(a3 + n a4) + a4(b3 − b5 − b6) − a2 b1 − a6 b5
            sum(&[
                s(B2).mul(&lc(&[(1, B3), (n, B4)])).neg(),
                s(B6).mul(&lc(&[(1, A3), (n, A4)])),
                s(A4).mul(&lc(&[(1, B3), (-1, B5), (-1, B6)])),
                s(A2).mul(&s(B1)).neg(),
                s(A6).mul(&s(B5)).neg(),
            ]),
            // b2(b5 + b6 + n b7) − b6(a6 + n a7) − a7(b3 − b5 − b6) + a2 b1 + a3 b5 − b3 a5
            sum(&[
                s(B2).mul(&lc(&[(1, B5), (1, B6), (n, B7)])),
                s(B6).mul(&lc(&[(1, A6), (n, A7)])).neg(),
                s(A7).mul(&lc(&[(1, B3), (-1, B5), (-1, B6)])).neg(),
                s(A2).mul(&s(B1)),
                s(A3).mul(&s(B5)),
                s(B3).mul(&s(A5)).neg(),
            ]),
        ],
        LedgerName::Obstr1 => {
            let mut out = generators(LedgerName::Obstr1PartI, n as usize)?;
            out.extend(generators(LedgerName::Obstr1PartII, n as usize)?);
            out.extend(generators(LedgerName::Obstr1PartIII, n as usize)?);
            out.extend(generators(LedgerName::Obstr1PartIV, n as usize)?);
            out
        }
        LedgerName::Obstr2kappaC1 => vec![
            // α(a1 − b6 + b4 − b7) − β(a1 − b3 + b5 − (n−1)(b4 − b7))
            sum(&[
                s(Alpha).mul(&lc(&[(1, A1), (-1, B6), (1, B4), (-1, B7)])),
                s(Beta)
                    .mul(&lc(&[
                        (1, A1),
                        (-1, B3),
                        (1, B5),
                        (-(n - 1), B4),
                        (n - 1, B7),
                    ]))
                    .neg(),
            ]),
            // α(−b2 − a5 + a4 − a7) + β(b2 + a3 − a6 + (n−1)(a4 − a7))
            sum(&[
                s(Alpha).mul(&lc(&[(-1, B2), (-1, A5), (1, A4), (-1, A7)])),
                s(Beta).mul(&lc(&[
                    (1, B2),
                    (1, A3),
                    (-1, A6),
                    (n - 1, A4),
                    (-(n - 1), A7),
                ])),
            ]),
        ],
        LedgerName::Obstr2kappaCref => vec![
            s(C).mul(&lc(&[(1, A1), (-1, B6)])),
            s(C).mul(&lc(&[(2, A1), (-1, B3), (1, B5), (-1, B6)])),
            s(C).mul(&lc(&[(1, A5), (1, B2)])),
            s(C).mul(&lc(&[(2, B2), (1, A3), (1, A5), (-1, A6)])),
        ],
        LedgerName::LOAFull => {
            let mut out = generators(LedgerName::Obstr1, n as usize)?;
            out.extend(generators(LedgerName::Obstr2kappaC1, n as usize)?);
            out.extend(generators(LedgerName::Obstr2kappaCref, n as usize)?);
            out
        }
        LedgerName::Obstr2kappaCrefBranch => vec![
            lc(&[(1, A1), (-1, B6)]),
            lc(&[(1, B2), (1, A5)]),
            lc(&[(1, B3), (-1, B5), (-1, B6)]),
            lc(&[(1, A3), (-1, A5), (-1, A6)]),
        ],
        LedgerName::Obstr1Simplified => vec![
            // a1(a4 − a7) − (b4 − b7)(a6 + a4 + (n−1) a7)
            sum(&[
                s(A1).mul(&lc(&[(1, A4), (-1, A7)])),
                lc(&[(1, B4), (-1, B7)])
                    .mul(&lc(&[(1, A6), (1, A4), (n - 1, A7)]))
                    .neg(),
            ]),
            // b1(a4 − a7) − (b4 − b7)(b6 + b4 + (n−1) b7)
            sum(&[
                s(B1).mul(&lc(&[(1, A4), (-1, A7)])),
                lc(&[(1, B4), (-1, B7)])
                    .mul(&lc(&[(1, B6), (1, B4), (n - 1, B7)]))
                    .neg(),
            ]),
            // a1(a3 + n a4) + a5(b3 + n b4) − b1 a2 − b5 a6
            sum(&[
                s(A1).mul(&lc(&[(1, A3), (n, A4)])),
                s(A5).mul(&lc(&[(1, B3), (n, B4)])),
                s(B1).mul(&s(A2)).neg(),
                s(B5).mul(&s(A6)).neg(),
            ]),
            // a1(a3 + n a7) + a5(b3 + n b7) − b1 a2 − b5 a6
            sum(&[
                s(A1).mul(&lc(&[(1, A3), (n, A7)])),
                s(A5).mul(&lc(&[(1, B3), (n, B7)])),
                s(B1).mul(&s(A2)).neg(),
                s(B5).mul(&s(A6)).neg(),
            ]),
            // b1(a3 + n a4) + b5(b3 + n b4) − 2 b1 b2 − 2 b5 b6
            sum(&[
                s(B1).mul(&lc(&[(1, A3), (n, A4)])),
                s(B5).mul(&lc(&[(1, B3), (n, B4)])),
                s(B1).mul(&s(B2)).scale(&crate::rat::rat(-2)),
                s(B5).mul(&s(B6)).scale(&crate::rat::rat(-2)),
            ]),
            // b1(a3 + n a7) + b5(b3 + n b7) − 2 b1 b2 − 2 b5 b6
            sum(&[
                s(B1).mul(&lc(&[(1, A3), (n, A7)])),
                s(B5).mul(&lc(&[(1, B3), (n, B7)])),
                s(B1).mul(&s(B2)).scale(&crate::rat::rat(-2)),
                s(B5).mul(&s(B6)).scale(&crate::rat::rat(-2)),
            ]),
            // −a2(b3 + n b4) + a6(a3 + n a4) − 2 a1 a2 − 2 a5 a6
            sum(&[
                s(A2).mul(&lc(&[(1, B3), (n, B4)])).neg(),
                s(A6).mul(&lc(&[(1, A3), (n, A4)])),
                s(A1).mul(&s(A2)).scale(&crate::rat::rat(-2)),
                s(A5).mul(&s(A6)).scale(&crate::rat::rat(-2)),
            ]),
            // −a2(b3 + n b7) + a6(a3 + n a7) − 2 a1 a2 − 2 a5 a6
            sum(&[
                s(A2).mul(&lc(&[(1, B3), (n, B7)])).neg(),
                s(A6).mul(&lc(&[(1, A3), (n, A7)])),
                s(A1).mul(&s(A2)).scale(&crate::rat::rat(-2)),
                s(A5).mul(&s(A6)).scale(&crate::rat::rat(-2)),
            ]),
        ],
        LedgerName::Obstr2kappaC1Simplified => vec![
            lc(&[(1, Alpha), (n - 1, Beta)]).mul(&lc(&[(1, B4), (-1, B7)])),
            lc(&[(1, Alpha), (n - 1, Beta)]).mul(&lc(&[(1, A4), (-1, A7)])),
        ],
        LedgerName::FinalThree => vec![
            // a1(a3 + n a4) + a5(b3 + n b4) − b1 a2 − b5 a6
            sum(&[
                s(A1).mul(&lc(&[(1, A3), (n, A4)])),
                s(A5).mul(&lc(&[(1, B3), (n, B4)])),
                s(B1).mul(&s(A2)).neg(),
                s(B5).mul(&s(A6)).neg(),
            ]),
            // b1(a3 + n a4) + b5(b3 + n b4) − 2 b1 b2 − 2 b5 b6
            sum(&[
                s(B1).mul(&lc(&[(1, A3), (n, A4)])),
                s(B5).mul(&lc(&[(1, B3), (n, B4)])),
                s(B1).mul(&s(B2)).scale(&crate::rat::rat(-2)),
                s(B5).mul(&s(B6)).scale(&crate::rat::rat(-2)),
            ]),
            // −a2(b3 + n b4) + a6(a3 + n a4) − 2 a1 a2 − 2 a5 a6
            sum(&[
                s(A2).mul(&lc(&[(1, B3), (n, B4)])).neg(),
                s(A6).mul(&lc(&[(1, A3), (n, A4)])),
                s(A1).mul(&s(A2)).scale(&crate::rat::rat(-2)),
                s(A5).mul(&s(A6)).scale(&crate::rat::rat(-2)),
            ]),
        ],
        LedgerName::Obstr2PhiC1C2C3L2 => vec![
            // α a + β(a + (n−2) aperp)
            sum(&[
                s(Alpha).mul(&s(A)),
                s(Beta).mul(&lc(&[(1, A), (n - 2, APerp)])),
            ]),
            // α aperp + β(2a + (n−3) aperp)
            sum(&[
                s(Alpha).mul(&s(APerp)),
                s(Beta).mul(&lc(&[(2, A), (n - 3, APerp)])),
            ]),
            // α b + β(b + (n−2) bperp)
            sum(&[
                s(Alpha).mul(&s(B)),
                s(Beta).mul(&lc(&[(1, B), (n - 2, BPerp)])),
            ]),
            // α bperp + β(2b + (n−3) bperp)
            sum(&[
                s(Alpha).mul(&s(BPerp)),
                s(Beta).mul(&lc(&[(2, B), (n - 3, BPerp)])),
            ]),
        ],
        LedgerName::DoubledStdRep => vec![
            lc(&[(1, A3), (n, A4)]),
            lc(&[(1, A5), (1, A6), (n, A7)]),
            lc(&[(1, B3), (n, B4)]),
            lc(&[(1, B5), (1, B6), (n, B7)]),
        ],
        LedgerName::TrivialRep => vec![sum(&[
            lc(&[(1, A3), (n, A4)]).mul(&lc(&[(1, B5), (1, B6), (n, B7)])),
            lc(&[(1, B3), (n, B4)])
                .mul(&lc(&[(1, A5), (1, A6), (n, A7)]))
                .neg(),
        ])],
        LedgerName::StdRep => {
            // a_i b_j = b_i a_j for 1 ≤ i < j ≤ 6, i, j ≠ 4
            let a = [A1, A2, A3, A4, A5, A6];
            let b = [B1, B2, B3, B4, B5, B6];
            let idx = [0usize, 1, 2, 4, 5];
            let mut out = Vec::new();
            for (u, &i) in idx.iter().enumerate() {
                for &j in &idx[u + 1..] {
                    out.push(s(a[i]).mul(&s(b[j])).sub(&s(b[i]).mul(&s(a[j]))));
                }
            }
            out
        }
        LedgerName::DoubledTrivialRep => {
            let mut out = Vec::new();
            for sym in [A1, A2, A3, A5, A6, B1, B2, B3, B5, B6] {
                out.push(s(sym));
            }
            out
        }
        LedgerName::StdExtension => vec![
            s(A1),
            s(B1),
            s(A2),
            s(B2),
            lc(&[(1, A4), (-1, A5), (-1, A7)]),
            lc(&[(1, B4), (-1, B5), (-1, B7)]),
            lc(&[(1, A4), (-1, A6), (-1, A7)]),
            lc(&[(1, B4), (-1, B6), (-1, B7)]),
        ],
    };
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::parse_poly;

    fn p(s: &str) -> ParamPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn block_sizes() {
        let sizes = [
            (LedgerName::Obstr1PartI, 2),
            (LedgerName::Obstr1PartII, 2),
            (LedgerName::Obstr1PartIII, 6),
            (LedgerName::Obstr1PartIV, 6),
            (LedgerName::Obstr1, 16),
            (LedgerName::Obstr2kappaC1, 2),
            (LedgerName::Obstr2kappaCref, 4),
            (LedgerName::LOAFull, 22),
            (LedgerName::Obstr2kappaCrefBranch, 4),
            (LedgerName::Obstr1Simplified, 8),
            (LedgerName::Obstr2kappaC1Simplified, 2),
            (LedgerName::FinalThree, 3),
            (LedgerName::Obstr2PhiC1C2C3L2, 4),
            (LedgerName::DoubledStdRep, 4),
            (LedgerName::TrivialRep, 1),
            (LedgerName::StdRep, 10),
            (LedgerName::DoubledTrivialRep, 10),
            (LedgerName::StdExtension, 8),
        ];
        for (name, len) in sizes {
            assert_eq!(generators(name, 4).unwrap().len(), len, "{name}");
        }
    }

    #[test]
    fn first_generator_of_the_first_block_at_n5() {
        let gens = generators(LedgerName::Obstr1PartI, 5).unwrap();
        let expected = p("a1*a5 + a1*a6 + 5*a1*a7 - b1*a2 - b5*a6 + a5*b5 + a5*b6 + 5*a5*b7 + b7*a3 - b7*a5 - b7*a6");
        assert_eq!(gens[0], expected);
    }

    #[test]
    fn transposition_constant_block_is_n_independent() {
        let g4 = generators(LedgerName::Obstr2kappaCref, 4).unwrap();
        let g7 = generators(LedgerName::Obstr2kappaCref, 7).unwrap();
        assert_eq!(g4, g7);
        assert_eq!(g4[0], p("c*a1 - c*b6"));
        assert_eq!(g4[1], p("2*c*a1 - c*b3 + c*b5 - c*b6"));
        assert_eq!(g4[2], p("c*a5 + c*b2"));
        assert_eq!(g4[3], p("2*c*b2 + c*a3 + c*a5 - c*a6"));
    }

    #[test]
    fn doubled_std_rep_block_folds_n() {
        let gens = generators(LedgerName::DoubledStdRep, 6).unwrap();
        assert_eq!(gens[0], p("a3 + 6*a4"));
        assert_eq!(gens[1], p("a5 + a6 + 6*a7"));
        assert_eq!(gens[2], p("b3 + 6*b4"));
        assert_eq!(gens[3], p("b5 + b6 + 6*b7"));
    }

    #[test]
    fn lift_conditions_for_the_off_identity_family() {
        let gens = generators(LedgerName::Obstr2PhiC1C2C3L2, 4).unwrap();
        assert_eq!(gens[0], p("alpha*a + beta*a + 2*beta*aperp"));
        assert_eq!(gens[1], p("alpha*aperp + 2*beta*a + beta*aperp"));
        assert_eq!(gens[2], p("alpha*b + beta*b + 2*beta*bperp"));
        assert_eq!(gens[3], p("alpha*bperp + 2*beta*b + beta*bperp"));
    }

    #[test]
    fn all_blocks_are_homogeneous_of_degree_at_most_two() {
        for name in LedgerName::ALL {
            for g in generators(name, 5).unwrap() {
                assert!(g.is_homogeneous(), "{name}: {g}");
                assert!(g.degree() <= 2, "{name}: {g}");
            }
        }
    }

    #[test]
    fn names_roundtrip() {
        for name in LedgerName::ALL {
            assert_eq!(LedgerName::parse(name.as_str()).unwrap(), name);
        }
        assert!(LedgerName::parse("nope").is_err());
    }
}
