//! Monodromy model of 2-dimensional `k`-fold simple branched coverings.
//!
//! A connected target of genus `g` is described by `g` handle pairs
//! `(a_h, b_h)` and one single-cycle monodromy per branch point, subject to
//!
//! ```text
//! [a_1, b_1] .. [a_g, b_g] . s_1 .. s_r = id      (left to right)
//! ```
//!
//! Connected components of the source are the orbits of the generated
//! subgroup. Disconnected targets are sets of connected data.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{commutator, orbits, Perm, PermError};

/// Oriented (`so`) or unoriented (`o`) singular submanifolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "so")]
    Oriented,
    #[serde(rename = "o")]
    Unoriented,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Oriented => "so",
            Mode::Unoriented => "o",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "so" => Ok(Mode::Oriented),
            "o" => Ok(Mode::Unoriented),
            other => Err(format!("unknown mode `{other}` (expected `so` or `o`)")),
        }
    }
}

/// Orientation of a singular point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A singular point of type `z^j`: its monodromy is the `j`-cycle `cycle`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchPoint {
    pub cycle: Vec<usize>,
    /// Required in oriented mode, absent in unoriented mode.
    pub sign: Option<Sign>,
}

impl BranchPoint {
    pub fn new(cycle: Vec<usize>, sign: Option<Sign>) -> Self {
        BranchPoint { cycle, sign }
    }

    /// The singularity type `j`.
    pub fn order(&self) -> usize {
        self.cycle.len()
    }

    pub fn to_perm(&self, degree: usize) -> Result<Perm, PermError> {
        Perm::from_cycle(degree, &self.cycle)
    }
}

/// One connected target surface with its monodromy.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HurwitzData {
    pub degree: usize,
    pub mode: Mode,
    pub target_genus: usize,
    pub handles: Vec<(Perm, Perm)>,
    pub branch_points: Vec<BranchPoint>,
}

/// A branched covering over a possibly disconnected target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchedCoveringSet {
    pub degree: usize,
    pub mode: Mode,
    pub components: Vec<HurwitzData>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DegreeTooSmall(usize),
    HandleCount { genus: usize, handles: usize },
    HandleDegree { handle: usize, degree: usize },
    NotAPermutation { handle: usize, side: char, reason: PermError },
    CycleTooShort { point: usize, length: usize },
    CycleTooLong { point: usize, length: usize },
    CycleEntryOutOfRange { point: usize, entry: usize },
    CycleEntryRepeated { point: usize, entry: usize },
    MissingSign { point: usize },
    UnexpectedSign { point: usize },
    InvalidSign { point: usize, value: i64 },
    RelationFails { product: Perm },
    OddComponentParity { orbit: Vec<usize> },
    ComponentDegree { expected: usize, found: usize },
    ComponentMode { expected: Mode, found: Mode },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegreeTooSmall(k) => write!(f, "degree {k} is below 2"),
            Violation::HandleCount { genus, handles } => {
                write!(f, "target genus {genus} needs {genus} handle pairs, found {handles}")
            }
            Violation::HandleDegree { handle, degree } => {
                write!(f, "handle {handle} has degree {degree}")
            }
            Violation::NotAPermutation { handle, side, reason } => {
                write!(f, "handle {handle}.{side} is not a permutation: {reason}")
            }
            Violation::CycleTooShort { point, length } => {
                write!(f, "branch point {point}: cycle of length {length} (need at least 2)")
            }
            Violation::CycleTooLong { point, length } => {
                write!(f, "branch point {point}: cycle of length {length} exceeds the degree")
            }
            Violation::CycleEntryOutOfRange { point, entry } => {
                write!(f, "branch point {point}: sheet {entry} out of range")
            }
            Violation::CycleEntryRepeated { point, entry } => {
                write!(f, "branch point {point}: sheet {entry} repeated")
            }
            Violation::MissingSign { point } => {
                write!(f, "branch point {point}: sign required in mode so")
            }
            Violation::UnexpectedSign { point } => {
                write!(f, "branch point {point}: sign not allowed in mode o")
            }
            Violation::InvalidSign { point, value } => {
                write!(f, "branch point {point}: sign {value} is not 1 or -1")
            }
            Violation::RelationFails { product } => {
                write!(f, "monodromy relation fails: product is {product}, not the identity")
            }
            Violation::OddComponentParity { orbit } => {
                write!(f, "source component {orbit:?} has odd total branching")
            }
            Violation::ComponentDegree { expected, found } => {
                write!(f, "component degree {found} differs from covering degree {expected}")
            }
            Violation::ComponentMode { expected, found } => {
                write!(f, "component mode {found} differs from covering mode {expected}")
            }
        }
    }
}

/// A violation located in a component of a [`BranchedCoveringSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatedViolation {
    pub component: usize,
    pub violation: Violation,
}

impl fmt::Display for LocatedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "component {}: {}", self.component, self.violation)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error("invalid branched covering data ({} violation(s))", .0.len())]
    Invalid(Vec<LocatedViolation>),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("mode mismatch: {0} vs {1}")]
    ModeMismatch(Mode, Mode),
}

/// Topology of one connected component of the source surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentTopology {
    pub sheets: Vec<usize>,
    pub euler_characteristic: i64,
    pub genus: i64,
}

impl HurwitzData {
    /// The unbranched trivial covering of a sphere.
    pub fn trivial(degree: usize, mode: Mode) -> Self {
        HurwitzData {
            degree,
            mode,
            target_genus: 0,
            handles: Vec::new(),
            branch_points: Vec::new(),
        }
    }

    /// Every violated invariant; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let k = self.degree;
        let mut out = Vec::new();
        if k < 2 {
            out.push(Violation::DegreeTooSmall(k));
        }
        if self.handles.len() != self.target_genus {
            out.push(Violation::HandleCount {
                genus: self.target_genus,
                handles: self.handles.len(),
            });
        }
        let mut handles_ok = true;
        for (h, (a, b)) in self.handles.iter().enumerate() {
            for p in [a, b] {
                if p.degree() != k {
                    handles_ok = false;
                    out.push(Violation::HandleDegree { handle: h, degree: p.degree() });
                }
            }
        }
        let mut cycles_ok = true;
        for (m, bp) in self.branch_points.iter().enumerate() {
            let len = bp.order();
            if len < 2 {
                cycles_ok = false;
                out.push(Violation::CycleTooShort { point: m, length: len });
            }
            if len > k {
                cycles_ok = false;
                out.push(Violation::CycleTooLong { point: m, length: len });
            }
            let mut seen = std::collections::BTreeSet::new();
            for &e in &bp.cycle {
                if e >= k {
                    cycles_ok = false;
                    out.push(Violation::CycleEntryOutOfRange { point: m, entry: e });
                } else if !seen.insert(e) {
                    cycles_ok = false;
                    out.push(Violation::CycleEntryRepeated { point: m, entry: e });
                }
            }
            match (self.mode, bp.sign) {
                (Mode::Oriented, None) => out.push(Violation::MissingSign { point: m }),
                (Mode::Unoriented, Some(_)) => out.push(Violation::UnexpectedSign { point: m }),
                _ => {}
            }
        }
        if k >= 1 && handles_ok && cycles_ok {
            let product = self.relation_product();
            if !product.is_identity() {
                out.push(Violation::RelationFails { product });
            }
            for orbit in self.orbits_unchecked() {
                let branching: usize = self
                    .branch_points
                    .iter()
                    .filter(|bp| orbit.contains(&bp.cycle[0]))
                    .map(|bp| bp.order() - 1)
                    .sum();
                if branching % 2 == 1 {
                    out.push(Violation::OddComponentParity { orbit });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn branch_perms(&self) -> Vec<Perm> {
        self.branch_points
            .iter()
            .map(|bp| bp.to_perm(self.degree).expect("branch cycle checked"))
            .collect()
    }

    /// Left-to-right product of the handle commutators and branch cycles.
    /// Assumes structurally sound data.
    pub(crate) fn relation_product(&self) -> Perm {
        let mut acc = Perm::identity(self.degree);
        for (a, b) in &self.handles {
            acc = acc.compose_unchecked(&commutator(a, b).expect("handle degrees checked"));
        }
        for s in self.branch_perms() {
            acc = acc.compose_unchecked(&s);
        }
        acc
    }

    fn orbits_unchecked(&self) -> Vec<Vec<usize>> {
        let mut gens: Vec<Perm> = Vec::with_capacity(2 * self.handles.len() + self.branch_points.len());
        for (a, b) in &self.handles {
            gens.push(a.clone());
            gens.push(b.clone());
        }
        gens.extend(self.branch_perms());
        orbits(self.degree, &gens).expect("degrees checked")
    }

    fn ensure_valid(&self) -> Result<(), HurwitzError> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(HurwitzError::Invalid(
                violations
                    .into_iter()
                    .map(|violation| LocatedViolation { component: 0, violation })
                    .collect(),
            ))
        }
    }

    /// Sheets grouped into connected components of the source.
    pub fn source_components(&self) -> Result<Vec<Vec<usize>>, HurwitzError> {
        self.ensure_valid()?;
        Ok(self.orbits_unchecked())
    }

    /// Per-component Riemann-Hurwitz:
    /// `chi = |orbit| (2 - 2g) - sum (j - 1)` over branch cycles inside the orbit.
    pub fn euler_characteristics(&self) -> Result<Vec<ComponentTopology>, HurwitzError> {
        self.ensure_valid()?;
        let target_chi = 2 - 2 * self.target_genus as i64;
        Ok(self
            .orbits_unchecked()
            .into_iter()
            .map(|sheets| {
                let branching: i64 = self
                    .branch_points
                    .iter()
                    .filter(|bp| sheets.contains(&bp.cycle[0]))
                    .map(|bp| bp.order() as i64 - 1)
                    .sum();
                let chi = sheets.len() as i64 * target_chi - branching;
                ComponentTopology {
                    sheets,
                    euler_characteristic: chi,
                    genus: (2 - chi) / 2,
                }
            })
            .collect())
    }

    /// Total `sum (j - 1)` over all branch points.
    pub fn total_branching(&self) -> usize {
        self.branch_points.iter().map(|bp| bp.order().saturating_sub(1)).sum()
    }

    /// Flip every sign; unoriented data is returned unchanged.
    pub fn negated(&self) -> HurwitzData {
        let mut out = self.clone();
        for bp in &mut out.branch_points {
            bp.sign = bp.sign.map(Sign::flipped);
        }
        out
    }
}

impl BranchedCoveringSet {
    pub fn empty(degree: usize, mode: Mode) -> Self {
        BranchedCoveringSet {
            degree,
            mode,
            components: Vec::new(),
        }
    }

    pub fn single(data: HurwitzData) -> Self {
        BranchedCoveringSet {
            degree: data.degree,
            mode: data.mode,
            components: vec![data],
        }
    }

    pub fn validate(&self) -> Vec<LocatedViolation> {
        let mut out = Vec::new();
        if self.degree < 2 && self.components.is_empty() {
            out.push(LocatedViolation {
                component: 0,
                violation: Violation::DegreeTooSmall(self.degree),
            });
        }
        for (c, d) in self.components.iter().enumerate() {
            let mut push = |violation| out.push(LocatedViolation { component: c, violation });
            if d.degree != self.degree {
                push(Violation::ComponentDegree { expected: self.degree, found: d.degree });
            }
            if d.mode != self.mode {
                push(Violation::ComponentMode { expected: self.mode, found: d.mode });
            }
            for v in d.validate() {
                push(v);
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<(), HurwitzError> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(HurwitzError::Invalid(violations))
        }
    }

    pub fn check_compatible(&self, other: &BranchedCoveringSet) -> Result<(), HurwitzError> {
        if self.degree != other.degree {
            return Err(HurwitzError::DegreeMismatch(self.degree, other.degree));
        }
        if self.mode != other.mode {
            return Err(HurwitzError::ModeMismatch(self.mode, other.mode));
        }
        Ok(())
    }

    pub fn disjoint_union(&self, other: &BranchedCoveringSet) -> Result<BranchedCoveringSet, HurwitzError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.components.extend(other.components.iter().cloned());
        Ok(out)
    }

    pub fn negate(&self) -> BranchedCoveringSet {
        BranchedCoveringSet {
            degree: self.degree,
            mode: self.mode,
            components: self.components.iter().map(HurwitzData::negated).collect(),
        }
    }

    /// Per component of the target, the topology of each source component.
    pub fn euler_characteristics(&self) -> Result<Vec<Vec<ComponentTopology>>, HurwitzError> {
        self.ensure_valid()?;
        self.components.iter().map(HurwitzData::euler_characteristics).collect()
    }
}
