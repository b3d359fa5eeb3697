//! Cobordism classes of 2-dimensional branched coverings.
//!
//! The class of a covering is determined by its invariant vector
//! `c = (c_2, .., c_k)`: `c_j` counts singular points of type `z^j`, with
//! signs in oriented mode and modulo 2 in unoriented mode. The realizable
//! vectors are those with `sum_i c_{2i}` even; they form a free (resp.
//! elementary abelian) group with basis `g_2, .., g_k` (resp. `g_3, .., g_k`):
//!
//! ```text
//! g_2 = 2 e_2,   g_i = e_i (i odd),   g_i = e_2 + e_i (i > 2 even)
//! ```

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::hurwitz::{BranchPoint, BranchedCoveringSet, HurwitzData, HurwitzError, Mode, Sign};
use crate::perm::{commutator, AllPerms, Perm};

/// Node budget for [`search_minimal`] when the caller has no preference.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CobError {
    #[error("class vector is not in the image of the invariant map (sum of c_j over even j is odd)")]
    NotInImage,
    #[error("basis index {i} out of range for degree {k} in mode {mode}")]
    IndexOutOfRange { i: usize, k: usize, mode: Mode },
    #[error("degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("expected {expected} entries, found {found}")]
    Length { expected: usize, found: usize },
    #[error("cannot parse `{0}` as a comma-separated integer list")]
    Parse(String),
    #[error("no minimal witness found within {visited} search nodes")]
    NotFound { visited: u64 },
    #[error(transparent)]
    Covering(#[from] HurwitzError),
}

/// The invariant tuple `(c_2, .., c_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ClassVector {
    degree: usize,
    mode: Mode,
    entries: Vec<i64>,
}

impl ClassVector {
    /// Entries are `c_2, .., c_k`; unoriented entries are reduced mod 2.
    pub fn new(degree: usize, mode: Mode, entries: Vec<i64>) -> Result<Self, CobError> {
        if degree < 2 {
            return Err(CobError::DegreeTooSmall(degree));
        }
        if entries.len() != degree - 1 {
            return Err(CobError::Length {
                expected: degree - 1,
                found: entries.len(),
            });
        }
        let entries = match mode {
            Mode::Oriented => entries,
            Mode::Unoriented => entries.into_iter().map(|e| e.rem_euclid(2)).collect(),
        };
        Ok(ClassVector { degree, mode, entries })
    }

    pub fn zero(degree: usize, mode: Mode) -> Result<Self, CobError> {
        Self::new(degree, mode, vec![0; degree.saturating_sub(1)])
    }

    /// Parse `c2,c3,..,ck`.
    pub fn parse(degree: usize, mode: Mode, text: &str) -> Result<Self, CobError> {
        Self::new(degree, mode, parse_list(text)?)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `c_j` for `2 <= j <= k`.
    pub fn get(&self, j: usize) -> i64 {
        self.entries[j - 2]
    }

    fn add_at(&mut self, j: usize, delta: i64) {
        let e = &mut self.entries[j - 2];
        *e += delta;
        if self.mode == Mode::Unoriented {
            *e = e.rem_euclid(2);
        }
    }

    pub fn add(&self, other: &ClassVector) -> Result<ClassVector, CobError> {
        check_same(self.degree, self.mode, other.degree, other.mode)?;
        let mut out = self.clone();
        for j in 2..=self.degree {
            out.add_at(j, other.get(j));
        }
        Ok(out)
    }

    pub fn negated(&self) -> ClassVector {
        let mut out = self.clone();
        if self.mode == Mode::Oriented {
            out.entries.iter_mut().for_each(|e| *e = -*e);
        }
        out
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.entries))
    }
}

/// Coordinates in the basis `g_2, .., g_k` (oriented) or `g_3, .., g_k`
/// (unoriented).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BasisCoeffs {
    degree: usize,
    mode: Mode,
    coeffs: Vec<i64>,
}

impl BasisCoeffs {
    pub fn new(degree: usize, mode: Mode, coeffs: Vec<i64>) -> Result<Self, CobError> {
        if degree < 2 {
            return Err(CobError::DegreeTooSmall(degree));
        }
        let expected = degree + 1 - first_basis_index(mode);
        if coeffs.len() != expected {
            return Err(CobError::Length {
                expected,
                found: coeffs.len(),
            });
        }
        let coeffs = match mode {
            Mode::Oriented => coeffs,
            Mode::Unoriented => coeffs.into_iter().map(|e| e.rem_euclid(2)).collect(),
        };
        Ok(BasisCoeffs { degree, mode, coeffs })
    }

    pub fn parse(degree: usize, mode: Mode, text: &str) -> Result<Self, CobError> {
        Self::new(degree, mode, parse_list(text)?)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The basis indices covered, `2..=k` or `3..=k`.
    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        first_basis_index(self.mode)..=self.degree
    }

    /// `lambda_i`.
    pub fn get(&self, i: usize) -> i64 {
        self.coeffs[i - first_basis_index(self.mode)]
    }
}

impl fmt::Display for BasisCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.coeffs))
    }
}

fn join(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn parse_list(text: &str) -> Result<Vec<i64>, CobError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CobError::Parse(text.to_string())))
        .collect()
}

fn first_basis_index(mode: Mode) -> usize {
    match mode {
        Mode::Oriented => 2,
        Mode::Unoriented => 3,
    }
}

fn check_same(k1: usize, m1: Mode, k2: usize, m2: Mode) -> Result<(), CobError> {
    if k1 != k2 {
        return Err(HurwitzError::DegreeMismatch(k1, k2).into());
    }
    if m1 != m2 {
        return Err(HurwitzError::ModeMismatch(m1, m2).into());
    }
    Ok(())
}

fn check_index(i: usize, k: usize, mode: Mode) -> Result<(), CobError> {
    if k < 2 {
        return Err(CobError::DegreeTooSmall(k));
    }
    if i < first_basis_index(mode) || i > k {
        return Err(CobError::IndexOutOfRange { i, k, mode });
    }
    Ok(())
}

/// The basis vector `g_i` of the image subgroup.
pub fn basis_vector(i: usize, k: usize, mode: Mode) -> Result<ClassVector, CobError> {
    check_index(i, k, mode)?;
    let mut c = ClassVector::zero(k, mode)?;
    if i == 2 {
        c.add_at(2, 2);
    } else {
        c.add_at(i, 1);
        if i % 2 == 0 {
            c.add_at(2, 1);
        }
    }
    Ok(c)
}

/// Signed (or mod 2) count of singular points of each type.
pub fn invariant(set: &BranchedCoveringSet) -> Result<ClassVector, CobError> {
    set.ensure_valid()?;
    let mut c = ClassVector::zero(set.degree, set.mode)?;
    for bp in set.components.iter().flat_map(|d| &d.branch_points) {
        let weight = match set.mode {
            Mode::Oriented => bp.sign.map_or(1, Sign::value),
            Mode::Unoriented => 1,
        };
        c.add_at(bp.order(), weight);
    }
    Ok(c)
}

/// The parity condition: `sum_i c_{2i}` is even.
pub fn in_image(c: &ClassVector) -> bool {
    let even_sum: i64 = (2..=c.degree).step_by(2).map(|j| c.get(j)).sum();
    even_sum.rem_euclid(2) == 0
}

/// Complete invariants: equal vectors iff cobordant.
pub fn cobordant(a: &BranchedCoveringSet, b: &BranchedCoveringSet) -> Result<bool, CobError> {
    a.check_compatible(b)?;
    Ok(invariant(a)? == invariant(b)?)
}

/// Coordinates of an image vector in the `g_i` basis:
/// `lambda_i = c_i` for `i >= 3` and, oriented,
/// `lambda_2 = (c_2 - sum_{even i >= 4} c_i) / 2`.
pub fn decompose(c: &ClassVector) -> Result<BasisCoeffs, CobError> {
    if !in_image(c) {
        return Err(CobError::NotInImage);
    }
    let k = c.degree;
    let upper: Vec<i64> = (3..=k).map(|i| c.get(i)).collect();
    let coeffs = match c.mode {
        Mode::Oriented => {
            let even_tail: i64 = (4..=k).step_by(2).map(|i| c.get(i)).sum();
            let twice = c.get(2) - even_tail;
            debug_assert!(twice % 2 == 0);
            std::iter::once(twice / 2).chain(upper).collect()
        }
        Mode::Unoriented => upper,
    };
    let lambda = BasisCoeffs::new(k, c.mode, coeffs)?;
    assert_eq!(&recompose(&lambda), c, "decomposition must recompose exactly");
    Ok(lambda)
}

/// `sum_i lambda_i g_i`.
pub fn recompose(lambda: &BasisCoeffs) -> ClassVector {
    let mut c = ClassVector::zero(lambda.degree, lambda.mode).expect("degree checked");
    for i in lambda.indices() {
        let g = basis_vector(i, lambda.degree, lambda.mode).expect("index in range");
        for j in 2..=lambda.degree {
            c.add_at(j, lambda.get(i) * g.get(j));
        }
    }
    c
}

fn sphere_point(cycle: Vec<usize>, sign: Sign, mode: Mode) -> BranchPoint {
    BranchPoint::new(cycle, (mode == Mode::Oriented).then_some(sign))
}

/// An `(n)`-cycle on `0..n`, written as a list.
fn standard_cycle(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// The non-trivial cycle of `p`, which must be a single cycle.
fn only_cycle(p: &Perm) -> Vec<usize> {
    let mut cycles = p.nontrivial_cycles();
    assert_eq!(cycles.len(), 1, "expected a single cycle, got {p}");
    cycles.pop().unwrap()
}

/// A closed-form witness over the sphere with invariant `g_i`.
///
/// * `i = 2`: `(0 1)+ (0 1)+`.
/// * `i` odd: `s+ s+ (s^-2)-` with `s = (0 .. i-1)`.
/// * `i > 2` even: `t+ s+ (d^-2)- d+` with `t = (0 1)`, `s = (0 .. i-1)`,
///   `d = t s`, an `(i-1)`-cycle.
///
/// Sheets `i..k` are trivial.
pub fn generator(i: usize, k: usize, mode: Mode) -> Result<BranchedCoveringSet, CobError> {
    check_index(i, k, mode)?;
    let pt = |cycle, sign| sphere_point(cycle, sign, mode);
    let points = if i == 2 {
        vec![pt(vec![0, 1], Sign::Plus), pt(vec![0, 1], Sign::Plus)]
    } else {
        let sigma = Perm::from_cycle(k, &standard_cycle(i)).expect("cycle fits");
        if i % 2 == 1 {
            vec![
                pt(standard_cycle(i), Sign::Plus),
                pt(standard_cycle(i), Sign::Plus),
                pt(only_cycle(&sigma.pow(-2)), Sign::Minus),
            ]
        } else {
            let tau = Perm::from_cycle(k, &[0, 1]).expect("cycle fits");
            let delta = tau.compose(&sigma).expect("same degree");
            vec![
                pt(vec![0, 1], Sign::Plus),
                pt(standard_cycle(i), Sign::Plus),
                pt(only_cycle(&delta.pow(-2)), Sign::Minus),
                pt(only_cycle(&delta), Sign::Plus),
            ]
        }
    };
    let set = BranchedCoveringSet::single(HurwitzData {
        degree: k,
        mode,
        target_genus: 0,
        handles: Vec::new(),
        branch_points: points,
    });
    debug_assert!(set.is_valid());
    Ok(set)
}

/// A covering over a union of spheres realizing `c`: `|lambda_i|` copies of
/// each generator, negated when `lambda_i < 0`.
pub fn realize(c: &ClassVector) -> Result<BranchedCoveringSet, CobError> {
    realize_with(c, |i| generator(i, c.degree, c.mode))
}

/// Like [`realize`], but built from minimal-singularity witnesses over the
/// torus.
pub fn realize_minimal(c: &ClassVector, budget: u64) -> Result<BranchedCoveringSet, CobError> {
    realize_with(c, |i| Ok(search_minimal(i, c.degree, budget)?.with_mode(c.mode)))
}

fn realize_with(
    c: &ClassVector,
    mut witness: impl FnMut(usize) -> Result<BranchedCoveringSet, CobError>,
) -> Result<BranchedCoveringSet, CobError> {
    let lambda = decompose(c)?;
    let mut out = BranchedCoveringSet::empty(c.degree, c.mode);
    for i in lambda.indices() {
        let l = lambda.get(i);
        if l == 0 {
            continue;
        }
        let mut w = witness(i)?;
        if l < 0 {
            w = w.negate();
        }
        for _ in 0..l.unsigned_abs() {
            out.components.extend(w.components.iter().cloned());
        }
    }
    Ok(out)
}

/// A representative of `alpha_i` with the fewest singular points: one
/// `i`-cycle for odd `i`, a transposition and an `i`-cycle for even `i`
/// (two transpositions for `i = 2`), over the torus. Handle pairs are
/// searched in `S_i`; each candidate `a` costs one unit of `budget`.
///
/// The result is oriented with positive signs.
pub fn search_minimal(i: usize, k: usize, budget: u64) -> Result<BranchedCoveringSet, CobError> {
    check_index(i, k, Mode::Oriented)?;
    let sigma = Perm::from_cycle(i, &standard_cycle(i)).expect("cycle fits");
    let (points, closing) = if i % 2 == 1 {
        (vec![standard_cycle(i)], sigma.inverse())
    } else {
        let tau = Perm::from_cycle(i, &[0, 1]).expect("cycle fits");
        let delta = tau.compose(&sigma).expect("same degree");
        (vec![vec![0, 1], standard_cycle(i)], delta.inverse())
    };
    let (a, b) = find_commutator_pair(&closing, budget)?;
    let data = HurwitzData {
        degree: k,
        mode: Mode::Oriented,
        target_genus: 1,
        handles: vec![(a.padded(k), b.padded(k))],
        branch_points: points
            .into_iter()
            .map(|c| BranchPoint::new(c, Some(Sign::Plus)))
            .collect(),
    };
    debug_assert!(data.is_valid());
    Ok(BranchedCoveringSet::single(data))
}

/// Some `(a, b)` with `a b a^-1 b^-1 = target`.
///
/// For each `a`, the equation says `b a^-1 b^-1 = a^-1 target`, so a solution
/// exists iff `a^-1` and `a^-1 target` have the same cycle type; `b^-1` is
/// then any relabelling carrying the cycles of `a^-1` onto those of
/// `a^-1 target`.
pub fn find_commutator_pair(target: &Perm, budget: u64) -> Result<(Perm, Perm), CobError> {
    let mut visited = 0u64;
    for a in AllPerms::new(target.degree()) {
        if visited >= budget {
            break;
        }
        visited += 1;
        let a_inv = a.inverse();
        let y = a_inv.compose(target).expect("same degree");
        if a_inv.cycle_type() != y.cycle_type() {
            continue;
        }
        let relabel = matching_relabelling(&a_inv, &y);
        let b = relabel.inverse();
        debug_assert_eq!(&commutator(&a, &b).unwrap(), target);
        return Ok((a, b));
    }
    Err(CobError::NotFound { visited })
}

/// A permutation `g` with `p.conjugate_by(g) == q`, for `p`, `q` of equal
/// cycle type.
fn matching_relabelling(p: &Perm, q: &Perm) -> Perm {
    let by_length = |x: &Perm| {
        let mut cycles = x.cycles();
        cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
        cycles
    };
    let mut images = vec![0; p.degree()];
    for (cp, cq) in by_length(p).iter().zip(by_length(q).iter()) {
        for (&x, &y) in cp.iter().zip(cq) {
            images[x] = y;
        }
    }
    Perm::from_images(images).expect("cycle matching is a bijection")
}

impl BranchedCoveringSet {
    /// Reinterpret in the given mode: dropping signs, or giving every point
    /// a positive sign.
    pub fn with_mode(&self, mode: Mode) -> BranchedCoveringSet {
        let mut out = self.clone();
        out.mode = mode;
        for d in &mut out.components {
            d.mode = mode;
            for bp in &mut d.branch_points {
                bp.sign = match mode {
                    Mode::Oriented => Some(bp.sign.unwrap_or(Sign::Plus)),
                    Mode::Unoriented => None,
                };
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SO: Mode = Mode::Oriented;
    const O: Mode = Mode::Unoriented;

    fn cv(k: usize, mode: Mode, e: &[i64]) -> ClassVector {
        ClassVector::new(k, mode, e.to_vec()).unwrap()
    }

    fn sphere(k: usize, mode: Mode, pts: &[(&[usize], i64)]) -> BranchedCoveringSet {
        BranchedCoveringSet::single(HurwitzData {
            degree: k,
            mode,
            target_genus: 0,
            handles: vec![],
            branch_points: pts
                .iter()
                .map(|(c, s)| {
                    BranchPoint::new(c.to_vec(), (mode == SO).then(|| Sign::from_value(*s).unwrap()))
                })
                .collect(),
        })
    }

    #[test]
    fn invariant_examples() {
        let f2 = sphere(5, SO, &[(&[0, 1], 1), (&[0, 1], 1)]);
        assert_eq!(invariant(&f2).unwrap(), basis_vector(2, 5, SO).unwrap());
        assert_eq!(invariant(&f2).unwrap().entries(), &[2, 0, 0, 0]);
        assert_eq!(invariant(&f2.negate()).unwrap().get(2), -2);
        let empty = BranchedCoveringSet::empty(4, SO);
        assert_eq!(invariant(&empty).unwrap(), ClassVector::zero(4, SO).unwrap());
        let f3 = search_minimal(3, 5, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(invariant(&f3).unwrap(), basis_vector(3, 5, SO).unwrap());
        assert_eq!(invariant(&f3).unwrap().entries(), &[0, 1, 0, 0]);
    }

    #[test]
    fn invalid_sets_have_no_invariant() {
        let bad = sphere(3, SO, &[(&[0, 1, 2], 1)]);
        assert!(matches!(invariant(&bad), Err(CobError::Covering(HurwitzError::Invalid(_)))));
    }

    #[test]
    fn image_condition() {
        assert!(in_image(&cv(4, SO, &[2, 0, 0])));
        assert!(!in_image(&cv(4, SO, &[1, 0, 0])));
        assert!(in_image(&ClassVector::zero(4, SO).unwrap()));
        assert!(in_image(&cv(4, SO, &[-1, 5, 1])));
        assert!(!in_image(&cv(5, O, &[1, 1, 0, 0])));
        assert!(in_image(&cv(5, O, &[1, 1, 1, 0])));
    }

    #[test]
    fn cobordism_decisions() {
        let s = generator(3, 4, SO).unwrap();
        let trivial = BranchedCoveringSet::single(HurwitzData::trivial(4, SO));
        assert!(cobordant(&s, &s.disjoint_union(&trivial).unwrap()).unwrap());
        let f2 = generator(2, 4, SO).unwrap();
        assert!(!cobordant(&f2, &f2.negate()).unwrap());
        // minimal torus witness of alpha_3 vs the three-point sphere witness
        let minimal = search_minimal(3, 4, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(cobordant(&minimal, &s).unwrap());
        assert!(cobordant(&f2, &BranchedCoveringSet::empty(3, SO)).is_err());
    }

    #[test]
    fn decompose_examples() {
        let lambda = decompose(&cv(4, SO, &[3, 0, 1])).unwrap();
        assert_eq!(lambda.coeffs(), &[1, 0, 1]);
        assert_eq!(decompose(&cv(4, SO, &[1, 0, 0])), Err(CobError::NotInImage));
        assert_eq!(decompose(&ClassVector::zero(4, SO).unwrap()).unwrap().coeffs(), &[0, 0, 0]);
        let lambda = decompose(&cv(5, O, &[1, 0, 1, 1])).unwrap();
        assert_eq!(lambda.coeffs(), &[0, 1, 1]);
        assert_eq!(lambda.indices(), 3..=5);
    }

    #[test]
    fn recompose_examples() {
        let l = BasisCoeffs::new(3, SO, vec![1, 0]).unwrap();
        assert_eq!(recompose(&l).entries(), &[2, 0]);
        let l = BasisCoeffs::new(5, SO, vec![0, 0, 1, 0]).unwrap();
        assert_eq!(recompose(&l).entries(), &[1, 0, 1, 0]);
        let l = BasisCoeffs::new(5, SO, vec![0; 4]).unwrap();
        assert_eq!(recompose(&l), ClassVector::zero(5, SO).unwrap());
    }

    #[test]
    fn generator_examples() {
        for k in 2..=6 {
            let g = generator(2, k, SO).unwrap();
            assert_eq!(invariant(&g).unwrap(), basis_vector(2, k, SO).unwrap());
        }
        let g3 = generator(3, 3, SO).unwrap();
        let pts = &g3.components[0].branch_points;
        assert!(pts.iter().all(|p| p.order() == 3));
        assert_eq!(pts.iter().map(|p| p.sign.unwrap().value()).collect::<Vec<_>>(), vec![1, 1, -1]);
        assert_eq!(invariant(&g3).unwrap().entries(), &[0, 1]);
        let g4 = generator(4, 4, SO).unwrap();
        assert_eq!(invariant(&g4).unwrap().entries(), &[1, 0, 1]);
        assert_eq!(generator(2, 4, O), Err(CobError::IndexOutOfRange { i: 2, k: 4, mode: O }));
        assert!(generator(5, 4, SO).is_err());
        assert!(generator(1, 4, SO).is_err());
    }

    #[test]
    fn realize_examples() {
        let g3 = basis_vector(3, 4, SO).unwrap();
        assert_eq!(realize(&g3).unwrap(), generator(3, 4, SO).unwrap());
        let minus_two = cv(4, SO, &[-2, 0, 0]);
        assert_eq!(realize(&minus_two).unwrap(), generator(2, 4, SO).unwrap().negate());
        let c = cv(4, SO, &[3, 0, 1]);
        let r = realize(&c).unwrap();
        assert_eq!(r.components.len(), 2);
        assert_eq!(invariant(&r).unwrap(), c);
        assert!(r.components.iter().all(|d| d.target_genus == 0));
        assert_eq!(realize(&cv(4, SO, &[1, 0, 0])), Err(CobError::NotInImage));
        let c = cv(6, O, &[0, 1, 1, 1, 1]);
        assert_eq!(invariant(&realize(&c).unwrap()).unwrap(), c);
        let m = realize_minimal(&c, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(invariant(&m).unwrap(), c);
    }

    #[test]
    fn minimal_witnesses() {
        let f2 = search_minimal(2, 4, 1).unwrap();
        assert_eq!(invariant(&f2).unwrap(), basis_vector(2, 4, SO).unwrap());
        assert_eq!(f2.components[0].handles[0], (Perm::identity(4), Perm::identity(4)));
        for (i, genus) in [(2, 2), (3, 2), (4, 3), (5, 3)] {
            let w = search_minimal(i, i, DEFAULT_SEARCH_BUDGET).unwrap();
            let d = &w.components[0];
            assert_eq!(d.target_genus, 1);
            assert_eq!(d.branch_points.len(), if i % 2 == 0 { 2 } else { 1 });
            let topo = d.euler_characteristics().unwrap();
            assert_eq!(topo[0].genus, genus, "i = {i}");
        }
        assert!(matches!(search_minimal(5, 5, 1), Err(CobError::NotFound { visited: 1 })));
    }

    #[test]
    fn parsing_and_display() {
        let c = ClassVector::parse(4, SO, "3, 0,-1").unwrap();
        assert_eq!(c.entries(), &[3, 0, -1]);
        assert_eq!(c.to_string(), "3,0,-1");
        assert_eq!(ClassVector::parse(4, O, "3,0,-1").unwrap().to_string(), "1,0,1");
        assert!(matches!(ClassVector::parse(4, SO, "1,2"), Err(CobError::Length { expected: 3, found: 2 })));
        assert!(matches!(ClassVector::parse(4, SO, "1,x,2"), Err(CobError::Parse(_))));
        assert_eq!(BasisCoeffs::parse(4, O, "1,1").unwrap().to_string(), "1,1");
    }
}
