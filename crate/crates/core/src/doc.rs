//! JSON documents describing a branched covering.
//!
//! ```json
//! {"degree": 3, "mode": "so", "components": [
//!   {"target_genus": 1,
//!    "handles": [{"a": [1,2,0], "b": [0,2,1]}],
//!    "branch_points": [{"cycle": [0,1,2], "sign": 1}]}]}
//! ```
//!
//! Permutations are 0-indexed image arrays and cycles are lists of distinct
//! sheets. `sign` is required in mode `so` and forbidden in mode `o`.
//! Parsing is lenient at the serde level; [`CoveringDocument::to_set`]
//! reports every problem at once.

use serde::{Deserialize, Serialize};

use crate::hurwitz::{
    BranchPoint, BranchedCoveringSet, HurwitzData, LocatedViolation, Mode, Sign, Violation,
};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringDocument {
    pub degree: usize,
    pub mode: Mode,
    #[serde(default)]
    pub components: Vec<ComponentDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDocument {
    pub target_genus: usize,
    #[serde(default)]
    pub handles: Vec<HandleDocument>,
    #[serde(default)]
    pub branch_points: Vec<BranchPointDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HandleDocument {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchPointDocument {
    pub cycle: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i64>,
}

impl CoveringDocument {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Convert to the checked model, collecting every violation.
    pub fn to_set(&self) -> Result<BranchedCoveringSet, Vec<LocatedViolation>> {
        let mut violations = Vec::new();
        let mut components = Vec::with_capacity(self.components.len());
        for (c, comp) in self.components.iter().enumerate() {
            let mut local = Vec::new();
            let mut handles = Vec::with_capacity(comp.handles.len());
            for (h, handle) in comp.handles.iter().enumerate() {
                let mut side = |images: &Vec<usize>, name: char| -> Option<Perm> {
                    match Perm::from_images(images.clone()) {
                        Ok(p) => Some(p),
                        Err(reason) => {
                            local.push(Violation::NotAPermutation { handle: h, side: name, reason });
                            None
                        }
                    }
                };
                let (a, b) = (side(&handle.a, 'a'), side(&handle.b, 'b'));
                if let (Some(a), Some(b)) = (a, b) {
                    handles.push((a, b));
                }
            }
            let mut branch_points = Vec::with_capacity(comp.branch_points.len());
            for (m, bp) in comp.branch_points.iter().enumerate() {
                let sign = match bp.sign {
                    None => None,
                    Some(v) => match Sign::from_value(v) {
                        Some(s) => Some(s),
                        None => {
                            local.push(Violation::InvalidSign { point: m, value: v });
                            Some(Sign::Plus)
                        }
                    },
                };
                branch_points.push(BranchPoint::new(bp.cycle.clone(), sign));
            }
            let data = HurwitzData {
                degree: self.degree,
                mode: self.mode,
                target_genus: comp.target_genus,
                handles,
                branch_points,
            };
            if local.is_empty() {
                local.extend(data.validate());
            } else {
                local.extend(data.validate().into_iter().filter(|v| {
                    !matches!(v, Violation::RelationFails { .. } | Violation::OddComponentParity { .. } | Violation::HandleCount { .. })
                }));
            }
            violations.extend(local.into_iter().map(|violation| LocatedViolation { component: c, violation }));
            components.push(data);
        }
        if self.degree < 2 && self.components.is_empty() {
            violations.push(LocatedViolation {
                component: 0,
                violation: Violation::DegreeTooSmall(self.degree),
            });
        }
        if violations.is_empty() {
            Ok(BranchedCoveringSet {
                degree: self.degree,
                mode: self.mode,
                components,
            })
        } else {
            Err(violations)
        }
    }
}

impl From<&BranchedCoveringSet> for CoveringDocument {
    fn from(set: &BranchedCoveringSet) -> Self {
        CoveringDocument {
            degree: set.degree,
            mode: set.mode,
            components: set.components.iter().map(ComponentDocument::from).collect(),
        }
    }
}

impl From<&HurwitzData> for ComponentDocument {
    fn from(d: &HurwitzData) -> Self {
        ComponentDocument {
            target_genus: d.target_genus,
            handles: d
                .handles
                .iter()
                .map(|(a, b)| HandleDocument {
                    a: a.images().to_vec(),
                    b: b.images().to_vec(),
                })
                .collect(),
            branch_points: d
                .branch_points
                .iter()
                .map(|bp| BranchPointDocument {
                    cycle: bp.cycle.clone(),
                    sign: bp.sign.map(Sign::value),
                })
                .collect(),
        }
    }
}

/// Single-component document, as emitted line by line by enumeration.
impl From<&HurwitzData> for CoveringDocument {
    fn from(d: &HurwitzData) -> Self {
        CoveringDocument {
            degree: d.degree,
            mode: d.mode,
            components: vec![ComponentDocument::from(d)],
        }
    }
}
