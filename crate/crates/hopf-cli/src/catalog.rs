//! Built-in algebras addressable by name.

use serde::Serialize;
use serde_json::json;

use crate::descriptor::AlgebraDesc;
use hopf_core::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub descriptor: serde_json::Value,
    pub notes: &'static str,
}

impl CatalogEntry {
    pub fn desc(&self) -> AlgebraDesc {
        serde_json::from_value(self.descriptor.clone()).expect("catalog descriptors are well formed")
    }
}

fn smash(target: serde_json::Value, actor_n: usize, perm: &[u16]) -> serde_json::Value {
    json!({
        "kind": "smash",
        "target": target,
        "actor": {"kind": "cyclic", "n": actor_n},
        "action": {"kind": "conj_by_perm", "perm": perm},
    })
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "group:S3",
            descriptor: json!({"kind": "group", "group": {"kind": "symmetric", "n": 3}}),
            notes: "group algebra of S3; real 2-dimensional simple",
        },
        CatalogEntry {
            name: "group:A4",
            descriptor: json!({"kind": "group", "group": {"kind": "alternating", "n": 4}}),
            notes: "group algebra of A4; regular indicators count roots",
        },
        CatalogEntry {
            name: "dual:S3",
            descriptor: json!({"kind": "dual_group", "group": {"kind": "symmetric", "n": 3}}),
            notes: "dual group algebra of S3; commutative with six 1-dimensional simples",
        },
        CatalogEntry {
            name: "smash:a4-z9",
            descriptor: smash(json!({"kind": "alternating", "n": 4}), 9, &[2, 3, 1, 4]),
            notes: "nonintegral indicator 1+z@3 on a 3-dimensional simple",
        },
        CatalogEntry {
            name: "smash:s5-z3",
            descriptor: smash(json!({"kind": "symmetric", "n": 5}), 3, &[2, 3, 1, 4, 5]),
            notes: "second integral power is not cocommutative",
        },
        CatalogEntry {
            name: "smash:s8-z8",
            descriptor: smash(json!({"kind": "symmetric", "n": 8}), 8, &[2, 3, 4, 5, 6, 7, 8, 1]),
            notes: "integral power for the sequence (4,2) is not central",
        },
        CatalogEntry {
            name: "group:pq-5-11-3",
            descriptor: json!({"kind": "group", "group": {"kind": "semidirect_pq", "q": 11, "p": 5, "a": 3}}),
            notes: "order 3 for the 5-dimensional simple although 3 does not divide 55",
        },
        CatalogEntry {
            name: "double:Z2",
            descriptor: json!({"kind": "double", "group": {"kind": "cyclic", "n": 2}}),
            notes: "Drinfel'd double of Z2",
        },
        CatalogEntry {
            name: "double:S3",
            descriptor: json!({"kind": "double", "group": {"kind": "symmetric", "n": 3}}),
            notes: "Drinfel'd double of S3; eight simples of degrees 1,1,2,2,2,2,3,3",
        },
        CatalogEntry {
            name: "double:Z4",
            descriptor: json!({"kind": "double", "group": {"kind": "cyclic", "n": 4}}),
            notes: "Drinfel'd double of Z4; sixteen 1-dimensional simples",
        },
    ]
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// A catalog name, or a path to a JSON descriptor file.
pub fn resolve(spec: &str) -> Result<(String, AlgebraDesc)> {
    if let Some(e) = lookup(spec) {
        return Ok((e.name.to_string(), e.desc()));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Domain(format!("{} is neither a catalog name nor a readable file: {}", spec, e)))?;
    Ok((spec.to_string(), crate::descriptor::parse(&text)?))
}
