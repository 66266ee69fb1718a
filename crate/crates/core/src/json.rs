//! Wire formats: every CLI artifact is UTF-8 JSON built from these DTOs.
//! Maps are ordered, so identical inputs serialize byte-identically (the
//! elapsed-time field of Gröbner reports is the documented exception).
//!
//! Polynomials travel as polytext (the `Display`/`parse_poly` grammar),
//! group elements as cycle notation, basis symbols as `x1..yN`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cochain::{Entry, Space, ThreeCochain, TwoCochain};
use crate::error::{Error, Result};
use crate::families::{FamilyName, FamilySpec};
use crate::group::Perm;
use crate::param::{parse_poly, ParamPoly, ParamSymbol};
use crate::rat::{format_rat, Rat};
use crate::space::{BasisIndex, Vect};
use crate::sympoly::{SymPoly2, VMono};
use crate::verifier::{
    ComparisonReport, MembershipCheck, NonexistenceReport, ObstructionSystem, Property,
    PropertyStatus, Provenance, Source, VerificationReport,
};

/// `{ "name": ..., "n": ..., "bindings": { symbol: rational-or-polytext } }`
#[derive(Serialize, Deserialize)]
pub struct FamilySpecJson {
    pub name: String,
    pub n: usize,
    #[serde(default)]
    pub bindings: BTreeMap<String, String>,
}

pub fn family_spec_from_json(text: &str) -> Result<FamilySpec> {
    let dto: FamilySpecJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("family spec: {e}")))?;
    family_spec_from_dto(&dto)
}

pub fn family_spec_from_dto(dto: &FamilySpecJson) -> Result<FamilySpec> {
    let mut spec = FamilySpec::new(FamilyName::parse(&dto.name)?, dto.n);
    for (k, v) in &dto.bindings {
        spec.bindings
            .insert(ParamSymbol::parse(k)?, FamilySpec::parse_binding(v)?);
    }
    Ok(spec)
}

/// Bindings JSON for the CLI `--bindings`/`--point` files: a bare map
/// `{ "symbol": "rational-or-polytext" }`.
pub fn bindings_from_json(text: &str) -> Result<BTreeMap<ParamSymbol, ParamPoly>> {
    let map: BTreeMap<String, String> =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bindings: {e}")))?;
    let mut out = BTreeMap::new();
    for (k, v) in map {
        out.insert(ParamSymbol::parse(&k)?, FamilySpec::parse_binding(&v)?);
    }
    Ok(out)
}

/// A numeric point: every value must be a rational constant.
pub fn point_from_json(text: &str) -> Result<BTreeMap<ParamSymbol, Rat>> {
    let polys = bindings_from_json(text)?;
    let mut out = BTreeMap::new();
    for (s, p) in polys {
        let r = p.as_constant().ok_or_else(|| {
            Error::Parse(format!("point value for {} is not a rational", s.name()))
        })?;
        out.insert(s, r);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
pub struct CochainEntryJson {
    pub g: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub linear: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub constant: String,
    /// Three-cochain value: basis monomial → polytext.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub value: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
pub struct CochainJson {
    pub schema_version: String,
    pub n: usize,
    pub kind: String,
    pub space: String,
    pub entries: Vec<CochainEntryJson>,
}

fn space_str(space: Space) -> &'static str {
    match space {
        Space::Doubled => "doubled",
        Space::Standard => "standard",
    }
}

fn parse_space(s: &str) -> Result<Space> {
    match s {
        "doubled" => Ok(Space::Doubled),
        "standard" => Ok(Space::Standard),
        _ => Err(Error::Parse(format!("unknown space {s:?}"))),
    }
}

pub fn two_cochain_to_json(k: &TwoCochain) -> CochainJson {
    let mut entries = Vec::new();
    for (g, key, e) in k.entries() {
        let linear: BTreeMap<String, String> = e
            .linear
            .coords()
            .map(|(b, p)| (b.to_string(), p.to_string()))
            .collect();
        entries.push(CochainEntryJson {
            g: g.to_string(),
            pair: Some(vec![key.0.to_string(), key.1.to_string()]),
            triple: None,
            linear,
            constant: if e.constant.is_zero() {
                String::new()
            } else {
                e.constant.to_string()
            },
            value: BTreeMap::new(),
        });
    }
    CochainJson {
        schema_version: crate::SCHEMA_VERSION.into(),
        n: k.n(),
        kind: "two".into(),
        space: space_str(k.space()).into(),
        entries,
    }
}

pub fn two_cochain_from_json(dto: &CochainJson) -> Result<TwoCochain> {
    if dto.kind != "two" {
        return Err(Error::InvalidCochain(format!(
            "expected kind \"two\", got {:?}",
            dto.kind
        )));
    }
    let mut k = TwoCochain::zero(dto.n, parse_space(&dto.space)?);
    for entry in &dto.entries {
        let g = Perm::parse_cycles(dto.n, &entry.g)?;
        let pair = entry
            .pair
            .as_ref()
            .ok_or_else(|| Error::InvalidCochain("two-cochain entry without pair".into()))?;
        if pair.len() != 2 {
            return Err(Error::InvalidCochain("pair must have two symbols".into()));
        }
        let u = BasisIndex::parse(&pair[0])?;
        let v = BasisIndex::parse(&pair[1])?;
        if !(u < v) {
            return Err(Error::InvalidCochain(format!(
                "pair ({u}, {v}) is not in canonical order"
            )));
        }
        let mut linear = Vect::zero();
        for (b, p) in &entry.linear {
            linear.add_coord(BasisIndex::parse(b)?, parse_poly(p)?);
        }
        let constant = if entry.constant.is_empty() {
            ParamPoly::zero()
        } else {
            parse_poly(&entry.constant)?
        };
        k.add_entry(&g, u, v, Entry { linear, constant });
    }
    Ok(k)
}

pub fn three_cochain_to_json(t: &ThreeCochain) -> CochainJson {
    let mut entries = Vec::new();
    for (g, key, s) in t.values() {
        let value: BTreeMap<String, String> = s
            .terms()
            .map(|(m, p)| (m.to_string(), p.to_string()))
            .collect();
        entries.push(CochainEntryJson {
            g: g.to_string(),
            pair: None,
            triple: Some(key.iter().map(|b| b.to_string()).collect()),
            linear: BTreeMap::new(),
            constant: String::new(),
            value,
        });
    }
    CochainJson {
        schema_version: crate::SCHEMA_VERSION.into(),
        n: t.n(),
        kind: "three".into(),
        space: space_str(t.space()).into(),
        entries,
    }
}

pub fn three_cochain_from_json(dto: &CochainJson) -> Result<ThreeCochain> {
    if dto.kind != "three" {
        return Err(Error::InvalidCochain(format!(
            "expected kind \"three\", got {:?}",
            dto.kind
        )));
    }
    let mut t = ThreeCochain::zero(dto.n, parse_space(&dto.space)?);
    for entry in &dto.entries {
        let g = Perm::parse_cycles(dto.n, &entry.g)?;
        let triple = entry
            .triple
            .as_ref()
            .ok_or_else(|| Error::InvalidCochain("three-cochain entry without triple".into()))?;
        if triple.len() != 3 {
            return Err(Error::InvalidCochain("triple must have three symbols".into()));
        }
        let key = [
            BasisIndex::parse(&triple[0])?,
            BasisIndex::parse(&triple[1])?,
            BasisIndex::parse(&triple[2])?,
        ];
        if !(key[0] < key[1] && key[1] < key[2]) {
            return Err(Error::InvalidCochain(
                "triple is not in canonical order".into(),
            ));
        }
        let mut s = SymPoly2::zero();
        for (m, p) in &entry.value {
            s.add_term(VMono::parse(m)?, parse_poly(p)?);
        }
        t.add_value(&g, key, s);
    }
    Ok(t)
}

#[derive(Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub source: String,
    #[serde(default)]
    pub g: String,
    #[serde(default)]
    pub triple: Vec<String>,
    #[serde(default)]
    pub label: String,
}

#[derive(Serialize, Deserialize)]
pub struct ObstructionSystemJson {
    pub schema_version: String,
    pub n: usize,
    pub symbols: Vec<String>,
    pub generators: Vec<String>,
    pub provenance: Vec<ProvenanceJson>,
}

pub fn system_to_json(sys: &ObstructionSystem) -> ObstructionSystemJson {
    ObstructionSystemJson {
        schema_version: crate::SCHEMA_VERSION.into(),
        n: sys.n,
        symbols: sys.symbols.iter().map(|s| s.name().to_string()).collect(),
        generators: sys.generators.iter().map(|g| g.to_string()).collect(),
        provenance: sys
            .provenance
            .iter()
            .map(|p| ProvenanceJson {
                source: p.source.as_str().into(),
                g: p.g.as_ref().map(|g| g.to_string()).unwrap_or_default(),
                triple: p
                    .triple
                    .map(|t| t.iter().map(|b| b.to_string()).collect())
                    .unwrap_or_default(),
                label: p.label.clone(),
            })
            .collect(),
    }
}

pub fn system_from_json(text: &str) -> Result<ObstructionSystem> {
    let dto: ObstructionSystemJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("system: {e}")))?;
    let mut symbols = Vec::new();
    for s in &dto.symbols {
        symbols.push(ParamSymbol::parse(s)?);
    }
    let mut raw = Vec::new();
    for (i, g) in dto.generators.iter().enumerate() {
        let prov = dto.provenance.get(i);
        let provenance = match prov {
            None => Provenance {
                source: Source::Ledger,
                g: None,
                triple: None,
                label: String::new(),
            },
            Some(p) => Provenance {
                source: Source::parse(&p.source)?,
                g: if p.g.is_empty() {
                    None
                } else {
                    Some(Perm::parse_cycles(dto.n, &p.g)?)
                },
                triple: if p.triple.len() == 3 {
                    Some([
                        BasisIndex::parse(&p.triple[0])?,
                        BasisIndex::parse(&p.triple[1])?,
                        BasisIndex::parse(&p.triple[2])?,
                    ])
                } else {
                    None
                },
                label: p.label.clone(),
            },
        };
        raw.push((parse_poly(g)?, provenance));
    }
    ObstructionSystem::from_raw(dto.n, symbols, raw)
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub g: String,
    pub location: String,
    pub value: String,
}

#[derive(Serialize)]
pub struct PropertyStatusJson {
    pub property: String,
    pub status: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessJson>,
}

#[derive(Serialize)]
pub struct VerificationReportJson {
    pub schema_version: String,
    pub family: String,
    pub n: usize,
    pub pass: bool,
    pub properties: Vec<PropertyStatusJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<ObstructionSystemJson>,
}

fn property_to_json(p: &PropertyStatus) -> PropertyStatusJson {
    PropertyStatusJson {
        property: p.property.as_str().into(),
        status: p.status.as_str().into(),
        witnesses: p
            .witnesses
            .iter()
            .map(|w| WitnessJson {
                g: w.g.to_string(),
                location: w.location.clone(),
                value: w.value.clone(),
            })
            .collect(),
    }
}

pub fn verification_to_json(family: &str, report: &VerificationReport) -> VerificationReportJson {
    VerificationReportJson {
        schema_version: crate::SCHEMA_VERSION.into(),
        family: family.into(),
        n: report.n,
        pass: report.pass(),
        properties: report.properties.iter().map(property_to_json).collect(),
        system: report.system.as_ref().map(system_to_json),
    }
}

#[derive(Serialize)]
pub struct ComparisonReportJson {
    pub schema_version: String,
    pub mode: String,
    pub equal: bool,
    pub left_count: usize,
    pub right_count: usize,
    pub left_only: Vec<String>,
    pub right_only: Vec<String>,
}

pub fn comparison_to_json(report: &ComparisonReport) -> ComparisonReportJson {
    ComparisonReportJson {
        schema_version: crate::SCHEMA_VERSION.into(),
        mode: report.mode.as_str().into(),
        equal: report.equal,
        left_count: report.left_count,
        right_count: report.right_count,
        left_only: report.left_only.iter().map(|p| p.to_string()).collect(),
        right_only: report.right_only.iter().map(|p| p.to_string()).collect(),
    }
}

#[derive(Serialize)]
pub struct MembershipJson {
    pub poly: String,
    pub expected_member: bool,
    pub member: bool,
}

#[derive(Serialize)]
pub struct NonexistenceJson {
    pub schema_version: String,
    pub n: usize,
    pub certified: bool,
    pub augmented_generators: usize,
    pub checks: Vec<MembershipJson>,
}

pub fn nonexistence_to_json(report: &NonexistenceReport) -> NonexistenceJson {
    NonexistenceJson {
        schema_version: crate::SCHEMA_VERSION.into(),
        n: report.n,
        certified: report.certified,
        augmented_generators: report.augmented.len(),
        checks: report
            .checks
            .iter()
            .map(|c: &MembershipCheck| MembershipJson {
                poly: c.poly.to_string(),
                expected_member: c.expected_member,
                member: c.member,
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct OracleWitnessJson {
    pub triple: Vec<String>,
    pub difference: BTreeMap<String, String>,
}

#[derive(Serialize)]
pub struct OracleReportJson {
    pub schema_version: String,
    pub pass: bool,
    pub witness: Option<OracleWitnessJson>,
    pub triples_checked: usize,
}

pub fn oracle_to_json(report: &crate::oracle::OverlapReport) -> OracleReportJson {
    OracleReportJson {
        schema_version: crate::SCHEMA_VERSION.into(),
        pass: report.pass,
        witness: report.witness.as_ref().map(|w| OracleWitnessJson {
            triple: w.triple.iter().map(|b| b.to_string()).collect(),
            difference: w
                .difference
                .terms()
                .map(|(word, c)| (word.to_string(), format_rat(c)))
                .collect(),
        }),
        triples_checked: report.triples_checked,
    }
}

/// The frozen schema version embedded in every report.
pub fn report_schema_version() -> &'static str {
    crate::SCHEMA_VERSION
}

/// Used by `Property` above; re-exported for CLI rendering order.
pub const PROPERTY_ORDER: [Property; 6] = [
    Property::Image,
    Property::Invariance,
    Property::Extension,
    Property::MixedJacobi,
    Property::FirstObstruction,
    Property::SecondObstruction,
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, FamilyName, FamilySpec};
    use crate::verifier::{extract_system, ledger_system};

    #[test]
    fn two_cochain_roundtrip() {
        for name in [FamilyName::Refl, FamilyName::Tri, FamilyName::StdRefl] {
            let k = build(&FamilySpec::new(name, 4)).unwrap();
            let json = serde_json::to_string_pretty(&two_cochain_to_json(&k)).unwrap();
            let parsed: CochainJson = serde_json::from_str(&json).unwrap();
            let back = two_cochain_from_json(&parsed).unwrap();
            assert!(back == k, "{name}");
        }
    }

    #[test]
    fn three_cochain_roundtrip() {
        let tri = build(&FamilySpec::new(FamilyName::Tri, 4)).unwrap();
        let theta = crate::cochain::psi(&tri);
        let json = serde_json::to_string(&three_cochain_to_json(&theta)).unwrap();
        let parsed: CochainJson = serde_json::from_str(&json).unwrap();
        let back = three_cochain_from_json(&parsed).unwrap();
        assert!(back == theta);
    }

    #[test]
    fn system_roundtrip_and_determinism() {
        let sys = extract_system(&build(&FamilySpec::new(FamilyName::ReflFull, 4)).unwrap()).unwrap();
        let a = serde_json::to_string_pretty(&system_to_json(&sys)).unwrap();
        let back = system_from_json(&a).unwrap();
        let b = serde_json::to_string_pretty(&system_to_json(&back)).unwrap();
        assert_eq!(a, b, "serialization must be a fixed point");
        assert_eq!(back.generators, sys.generators);
    }

    #[test]
    fn ledger_system_roundtrip() {
        let sys = ledger_system(crate::ledger::LedgerName::Obstr2kappaCref, 5).unwrap();
        let text = serde_json::to_string(&system_to_json(&sys)).unwrap();
        let back = system_from_json(&text).unwrap();
        assert_eq!(back.generators, sys.generators);
        assert_eq!(back.symbols, sys.symbols);
    }

    #[test]
    fn family_spec_parsing() {
        let spec = family_spec_from_json(
            r#"{ "name": "refl", "n": 4, "bindings": { "a": "-1/2", "b": "bperp" } }"#,
        )
        .unwrap();
        assert_eq!(spec.name, FamilyName::Refl);
        assert_eq!(spec.n, 4);
        assert_eq!(spec.bindings.len(), 2);
        assert!(family_spec_from_json(r#"{ "name": "nope", "n": 4 }"#).is_err());
    }

    #[test]
    fn point_rejects_polynomials() {
        assert!(point_from_json(r#"{ "a": "3/2" }"#).is_ok());
        assert!(point_from_json(r#"{ "a": "bperp" }"#).is_err());
    }

    #[test]
    fn schema_version_is_frozen() {
        assert_eq!(report_schema_version(), "1.0");
    }
}
