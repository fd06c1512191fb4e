//! JSON descriptors for groups, actions and algebras.
//!
//! ```json
//! {"kind":"smash",
//!  "target":{"kind":"alternating","n":4},
//!  "actor":{"kind":"cyclic","n":9},
//!  "action":{"kind":"conj_by_perm","perm":[2,3,1,4]}}
//! ```
//!
//! Permutations are written 1-based as image lists. Table actions list
//! `x.g` row by row over the actor, using the element ids of the built
//! groups.

use std::sync::Arc;

use hopf_core::groups::{
    from_perm_generators, make_alternating, make_cyclic, make_semidirect_zq_zp, make_symmetric, Group, GroupAction,
};
use hopf_core::hopf::HopfAlg;
use hopf_core::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupDesc {
    Cyclic { n: usize },
    Symmetric { n: usize },
    Alternating { n: usize },
    SemidirectPq { q: u64, p: u64, a: u64 },
    PermGens { degree: usize, gens: Vec<Vec<u16>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ActionDesc {
    ConjByPerm { perm: Vec<u16> },
    ConjugationSelf,
    Table { entries: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraDesc {
    Group { group: GroupDesc },
    DualGroup { group: GroupDesc },
    Smash { target: GroupDesc, actor: GroupDesc, action: ActionDesc },
    Double { group: GroupDesc },
}

fn one_based_to_zero(p: &[u16], degree: usize) -> Result<Vec<u16>> {
    if p.len() != degree {
        return Err(Error::Domain(format!("permutation {:?} has degree {}, expected {}", p, p.len(), degree)));
    }
    let mut seen = vec![false; degree];
    p.iter()
        .map(|&v| {
            let i = (v as usize).checked_sub(1).filter(|&i| i < degree && !seen[i]);
            let i = i.ok_or_else(|| Error::Domain(format!("{:?} is not a permutation of 1..={}", p, degree)))?;
            seen[i] = true;
            Ok(i as u16)
        })
        .collect()
}

impl GroupDesc {
    pub fn build(&self) -> Result<Group> {
        match self {
            GroupDesc::Cyclic { n } => make_cyclic(*n),
            GroupDesc::Symmetric { n } => make_symmetric(*n),
            GroupDesc::Alternating { n } => make_alternating(*n),
            GroupDesc::SemidirectPq { q, p, a } => make_semidirect_zq_zp(*q, *p, *a),
            GroupDesc::PermGens { degree, gens } => {
                let gens = gens.iter().map(|g| one_based_to_zero(g, *degree)).collect::<Result<Vec<_>>>()?;
                from_perm_generators(*degree, &gens)
            }
        }
    }
}

impl AlgebraDesc {
    pub fn build(&self) -> Result<HopfAlg> {
        match self {
            AlgebraDesc::Group { group } => HopfAlg::group_algebra(Arc::new(group.build()?)),
            AlgebraDesc::DualGroup { group } => HopfAlg::dual_group_algebra(Arc::new(group.build()?)),
            AlgebraDesc::Double { group } => HopfAlg::double(Arc::new(group.build()?)),
            AlgebraDesc::Smash { target, actor, action } => {
                let f = Arc::new(actor.build()?);
                let action = match action {
                    ActionDesc::ConjugationSelf => {
                        if target != actor {
                            return Err(Error::Domain("conjugation_self needs target = actor".into()));
                        }
                        GroupAction::conjugation_on_opposite(f)?
                    }
                    ActionDesc::ConjByPerm { perm } => {
                        let g = Arc::new(target.build()?);
                        let degree = g
                            .perm_degree()
                            .ok_or_else(|| Error::Domain("conj_by_perm needs a permutation group target".into()))?;
                        GroupAction::conj_by_perm(f, g, &one_based_to_zero(perm, degree)?)?
                    }
                    ActionDesc::Table { entries } => GroupAction::from_table(f, Arc::new(target.build()?), entries.clone())?,
                };
                HopfAlg::smash(action)
            }
        }
    }
}

/// Parses a descriptor, reporting the byte offset of the first problem.
///
/// Tagged enums are buffered before they are matched, so shape errors
/// inside them carry no location and are reported at offset 0.
pub fn parse(text: &str) -> Result<AlgebraDesc> {
    serde_json::from_str(text).map_err(|e| {
        if e.line() == 0 {
            return Error::Parse { pos: 0, msg: e.to_string() };
        }
        let pos = text
            .split_inclusive('\n')
            .take(e.line().saturating_sub(1))
            .map(str::len)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        Error::Parse { pos, msg: format!("line {} column {}: {}", e.line(), e.column(), e) }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smash_descriptor_builds() {
        let d = parse(
            r#"{"kind":"smash","target":{"kind":"alternating","n":4},
                "actor":{"kind":"cyclic","n":9},
                "action":{"kind":"conj_by_perm","perm":[2,3,1,4]}}"#,
        )
        .unwrap();
        assert_eq!(d.build().unwrap().dim(), 108);
    }

    #[test]
    fn generators_and_doubles() {
        let d = AlgebraDesc::Double { group: GroupDesc::PermGens { degree: 3, gens: vec![vec![2, 1, 3], vec![2, 3, 1]] } };
        assert_eq!(d.build().unwrap().dim(), 36);
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(parse(&text).unwrap(), d);
    }

    #[test]
    fn unknown_fields_and_kinds_are_rejected() {
        let e = parse("{\"kind\":\"group\",\"group\":{\"kind\":\"cyclic\",\"n\":3,\"m\":1}}").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        assert!(matches!(parse("{\"kind\":\"torus\"}"), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_position_counts_earlier_lines() {
        let text = "{\"kind\":\"group\",\n\"group\": {\"kind\":\"cyclic\" \"n\":3}}";
        match parse(text) {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(&text[pos..pos + 3], "\"n\"");
                assert!(msg.starts_with("line 2 column"), "{}", msg);
            }
            other => panic!("{:?}", other),
        }
        match parse("{\"kind\":\"group\",\"group\": 7}") {
            Err(Error::Parse { pos: 0, msg }) => assert!(msg.contains("GroupDesc"), "{}", msg),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn bad_permutations() {
        assert!(one_based_to_zero(&[1, 1, 2], 3).is_err());
        assert!(one_based_to_zero(&[0, 1, 2], 3).is_err());
        assert!(one_based_to_zero(&[1, 2], 3).is_err());
        assert_eq!(one_based_to_zero(&[3, 1, 2], 3).unwrap(), vec![2, 0, 1]);
        let d = AlgebraDesc::Smash {
            target: GroupDesc::Cyclic { n: 3 },
            actor: GroupDesc::Cyclic { n: 2 },
            action: ActionDesc::ConjByPerm { perm: vec![1, 2, 3] },
        };
        assert!(d.build().is_err());
    }
}
