//! Exhaustive and randomized oracles over monodromy data.
//!
//! Enumeration walks tuples of handle permutations followed by single
//! cycles; the last cycle is forced to be the inverse of the running
//! product, so only `r - 1` cycles are ever chosen freely. Partial products
//! are pruned when the remaining cycles cannot reach the identity (support
//! too large, or wrong sign).

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cob2::{invariant, ClassVector};
use crate::hurwitz::{BranchPoint, BranchedCoveringSet, HurwitzData, Mode, Sign};
use crate::perm::{commutator, AllPerms, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{what} = {value} exceeds the configured maximum {max}; pass an explicit override to go further")]
    BoundsExceeded { what: &'static str, value: usize, max: usize },
    #[error("invalid enumeration request: {0}")]
    InvalidSpec(String),
    #[error("no valid data generated after {attempts} attempts")]
    GenerationFailed { attempts: u32 },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// Default limits; enumeration beyond them needs `allow_large`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBounds {
    pub max_degree: usize,
    pub max_points: usize,
    pub max_genus: usize,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds {
            max_degree: 6,
            max_points: 4,
            max_genus: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub degree: usize,
    /// Number of branch points `r`.
    pub points: usize,
    /// Allowed cycle lengths; empty means `2..=k`.
    pub types: Vec<usize>,
    pub genus: usize,
    /// One representative per simultaneous-conjugacy class.
    pub reduce_symmetry: bool,
    /// Keep only data with a connected source.
    pub transitive: bool,
    /// Mode of the emitted data; oriented data carries positive signs.
    pub mode: Mode,
    pub bounds: EnumBounds,
    pub allow_large: bool,
}

impl EnumSpec {
    pub fn sphere(degree: usize, points: usize) -> Self {
        EnumSpec {
            degree,
            points,
            types: Vec::new(),
            genus: 0,
            reduce_symmetry: false,
            transitive: false,
            mode: Mode::Oriented,
            bounds: EnumBounds::default(),
            allow_large: false,
        }
    }

    pub fn with_types(mut self, types: &[usize]) -> Self {
        self.types = types.to_vec();
        self
    }

    fn allowed_types(&self) -> Vec<usize> {
        if self.types.is_empty() {
            (2..=self.degree).collect()
        } else {
            let mut t = self.types.clone();
            t.sort_unstable();
            t.dedup();
            t
        }
    }

    fn check(&self) -> Result<(), SearchError> {
        if self.degree < 2 {
            return Err(SearchError::InvalidSpec(format!("degree {} is below 2", self.degree)));
        }
        if let Some(&t) = self.types.iter().find(|&&t| t < 2 || t > self.degree) {
            return Err(SearchError::InvalidSpec(format!("cycle type {t} outside 2..={}", self.degree)));
        }
        if !self.allow_large {
            let b = self.bounds;
            for (what, value, max) in [
                ("degree", self.degree, b.max_degree),
                ("points", self.points, b.max_points),
                ("genus", self.genus, b.max_genus),
            ] {
                if value > max {
                    return Err(SearchError::BoundsExceeded { what, value, max });
                }
            }
        }
        Ok(())
    }
}

/// All single cycles of the given lengths on `0..k`, each written from its
/// smallest element.
pub fn single_cycles(k: usize, lengths: &[usize]) -> Vec<Vec<usize>> {
    fn extend(k: usize, len: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in cur[0] + 1..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                extend(k, len, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    for &len in lengths {
        for start in 0..k {
            let mut used = vec![false; k];
            used[start] = true;
            extend(k, len, &mut vec![start], &mut used, &mut out);
        }
    }
    out
}

/// Rotate a cycle to start at its smallest element.
fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let pos = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle[pos..].iter().chain(&cycle[..pos]).copied().collect()
}

struct Walker<'a> {
    spec: &'a EnumSpec,
    k: usize,
    allowed: Vec<usize>,
    max_len: usize,
    /// Sign every allowed cycle shares, if they all share one.
    common_sign: Option<i8>,
    cycles: Vec<(Vec<usize>, Perm)>,
}

impl<'a> Walker<'a> {
    fn new(spec: &'a EnumSpec) -> Self {
        let allowed = spec.allowed_types();
        let signs: Vec<i8> = allowed.iter().map(|&j| if j % 2 == 0 { -1 } else { 1 }).collect();
        let common_sign = signs.first().copied().filter(|s| signs.iter().all(|t| t == s));
        let cycles = single_cycles(spec.degree, &allowed)
            .into_iter()
            .map(|c| {
                let p = Perm::from_cycle(spec.degree, &c).expect("cycle fits");
                (c, p)
            })
            .collect();
        Walker {
            spec,
            k: spec.degree,
            max_len: allowed.iter().copied().max().unwrap_or(0),
            allowed,
            common_sign,
            cycles,
        }
    }

    /// Can `remaining` allowed cycles multiply to `p^-1`?
    fn reachable(&self, p: &Perm, remaining: usize) -> bool {
        if remaining == 0 {
            return p.is_identity();
        }
        if p.moved_points() > remaining * self.max_len {
            return false;
        }
        match self.common_sign {
            Some(s) => p.sign() == if remaining % 2 == 0 { 1 } else { s },
            None => true,
        }
    }

    fn emit(&self, handles: &[(Perm, Perm)], chosen: &[usize], last: Option<Vec<usize>>, f: &mut dyn FnMut(HurwitzData)) {
        let sign = (self.spec.mode == Mode::Oriented).then_some(Sign::Plus);
        let mut branch_points: Vec<BranchPoint> =
            chosen.iter().map(|&c| BranchPoint::new(self.cycles[c].0.clone(), sign)).collect();
        if let Some(c) = last {
            branch_points.push(BranchPoint::new(c, sign));
        }
        let data = HurwitzData {
            degree: self.k,
            mode: self.spec.mode,
            target_genus: self.spec.genus,
            handles: handles.to_vec(),
            branch_points,
        };
        if self.spec.transitive && data.source_components().map_or(true, |c| c.len() != 1) {
            return;
        }
        if self.spec.reduce_symmetry && !is_canonical(&data) {
            return;
        }
        f(data);
    }

    fn branch(&self, handles: &[(Perm, Perm)], product: &Perm, chosen: &mut Vec<usize>, f: &mut dyn FnMut(HurwitzData)) {
        let remaining = self.spec.points - chosen.len();
        if remaining == 0 {
            if product.is_identity() {
                self.emit(handles, chosen, None, f);
            }
            return;
        }
        if remaining == 1 {
            let closing = product.inverse();
            if let Some(len) = closing.single_cycle_length() {
                if self.allowed.contains(&len) {
                    let cycle = closing.nontrivial_cycles().pop().unwrap();
                    self.emit(handles, chosen, Some(cycle), f);
                }
            }
            return;
        }
        for (c, (_, p)) in self.cycles.iter().enumerate() {
            let next = product.compose_unchecked(p);
            if !self.reachable(&next, remaining - 1) {
                continue;
            }
            chosen.push(c);
            self.branch(handles, &next, chosen, f);
            chosen.pop();
        }
    }

    fn handles(&self, handles: &mut Vec<(Perm, Perm)>, product: &Perm, f: &mut dyn FnMut(HurwitzData)) {
        if handles.len() == self.spec.genus {
            if self.reachable(product, self.spec.points) {
                self.branch(handles, product, &mut Vec::new(), f);
            }
            return;
        }
        for a in AllPerms::new(self.k) {
            self.handles_with_first(handles, product, a, f);
        }
    }

    fn handles_with_first(&self, handles: &mut Vec<(Perm, Perm)>, product: &Perm, a: Perm, f: &mut dyn FnMut(HurwitzData)) {
        for b in AllPerms::new(self.k) {
            let next = product.compose_unchecked(&commutator(&a, &b).expect("same degree"));
            handles.push((a.clone(), b));
            self.handles(handles, &next, f);
            handles.pop();
        }
    }

    /// Independent sub-walks, in emission order, for parallel runs.
    fn partitions(&self) -> Vec<Partition> {
        if self.spec.genus > 0 {
            AllPerms::new(self.k).map(Partition::FirstHandle).collect()
        } else if self.spec.points >= 2 {
            (0..self.cycles.len()).map(Partition::FirstCycle).collect()
        } else {
            vec![Partition::Whole]
        }
    }

    fn run_partition(&self, part: &Partition, f: &mut dyn FnMut(HurwitzData)) {
        let id = Perm::identity(self.k);
        match part {
            Partition::Whole => self.handles(&mut Vec::new(), &id, f),
            Partition::FirstHandle(a) => self.handles_with_first(&mut Vec::new(), &id, a.clone(), f),
            Partition::FirstCycle(idx) => {
                let p = &self.cycles[*idx].1;
                if self.reachable(p, self.spec.points - 1) {
                    self.branch(&[], p, &mut vec![*idx], f);
                }
            }
        }
    }
}

enum Partition {
    Whole,
    FirstHandle(Perm),
    FirstCycle(usize),
}

/// Relabel sheets by `g`: `i -> g(i)` everywhere.
pub fn conjugate_data(data: &HurwitzData, g: &Perm) -> HurwitzData {
    HurwitzData {
        degree: data.degree,
        mode: data.mode,
        target_genus: data.target_genus,
        handles: data
            .handles
            .iter()
            .map(|(a, b)| (a.conjugate_by(g).expect("same degree"), b.conjugate_by(g).expect("same degree")))
            .collect(),
        branch_points: data
            .branch_points
            .iter()
            .map(|bp| {
                let relabelled: Vec<usize> = bp.cycle.iter().map(|&v| g.apply(v)).collect();
                BranchPoint::new(canonical_rotation(&relabelled), bp.sign)
            })
            .collect(),
    }
}

type Encoding = (Vec<Vec<usize>>, Vec<Vec<usize>>);

fn encode(data: &HurwitzData) -> Encoding {
    (
        data.branch_points.iter().map(|bp| canonical_rotation(&bp.cycle)).collect(),
        data.handles
            .iter()
            .flat_map(|(a, b)| [a.images().to_vec(), b.images().to_vec()])
            .collect(),
    )
}

/// True iff `data` is the lexicographically least member of its class under
/// simultaneous conjugation (branch cycles compared first).
pub fn is_canonical(data: &HurwitzData) -> bool {
    let own = encode(data);
    AllPerms::new(data.degree).all(|g| encode(&conjugate_data(data, &g)) >= own)
}

/// Number of relabellings fixing `data`.
pub fn stabilizer_size(data: &HurwitzData) -> u64 {
    let own = encode(data);
    AllPerms::new(data.degree)
        .filter(|g| encode(&conjugate_data(data, g)) == own)
        .count() as u64
}

/// Stream every datum matching `spec`, single-threaded, in a fixed order.
pub fn for_each(spec: &EnumSpec, mut f: impl FnMut(HurwitzData)) -> Result<(), SearchError> {
    spec.check()?;
    let walker = Walker::new(spec);
    for part in walker.partitions() {
        walker.run_partition(&part, &mut f);
    }
    Ok(())
}

/// Every datum matching `spec`. With `threads > 1` the walk is split on the
/// first handle or branch cycle; the output order is the same either way.
pub fn enumerate(spec: &EnumSpec, threads: usize) -> Result<Vec<HurwitzData>, SearchError> {
    spec.check()?;
    if threads <= 1 {
        let mut out = Vec::new();
        for_each(spec, |d| out.push(d))?;
        return Ok(out);
    }
    let walker = Walker::new(spec);
    let parts = walker.partitions();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| SearchError::ThreadPool(e.to_string()))?;
    let chunks: Vec<Vec<HurwitzData>> = pool.install(|| {
        parts
            .par_iter()
            .map(|p| {
                let mut out = Vec::new();
                walker.run_partition(p, &mut |d| out.push(d));
                out
            })
            .collect()
    });
    Ok(chunks.into_iter().flatten().collect())
}

pub fn count(spec: &EnumSpec) -> Result<u64, SearchError> {
    let mut n = 0u64;
    for_each(spec, |_| n += 1)?;
    Ok(n)
}

/// Findings on coverings of the sphere with at most two singular points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonexistenceReport {
    pub k: usize,
    /// `(j, number of data with a single point of type j)`.
    pub single_point: Vec<(usize, u64)>,
    /// `(j, h, number of data with one point of each type)`, `j < h`.
    pub mixed_pair: Vec<(usize, usize, u64)>,
    /// `(j, number of data with two points of type j)`.
    pub equal_pair: Vec<(usize, u64)>,
}

impl NonexistenceReport {
    pub fn holds(&self) -> bool {
        self.single_point.iter().all(|&(_, n)| n == 0)
            && self.mixed_pair.iter().all(|&(_, _, n)| n == 0)
            && self.equal_pair.iter().all(|&(_, n)| n > 0)
    }
}

/// Exhaustively check that no covering of the sphere has exactly one
/// singular point, or two of different types, while two of equal type
/// always occur.
pub fn verify_nonexistence(k: usize) -> Result<NonexistenceReport, SearchError> {
    let mut report = NonexistenceReport {
        k,
        single_point: Vec::new(),
        mixed_pair: Vec::new(),
        equal_pair: Vec::new(),
    };
    for j in 2..=k {
        report.single_point.push((j, count(&EnumSpec::sphere(k, 1).with_types(&[j]))?));
        report.equal_pair.push((j, count(&EnumSpec::sphere(k, 2).with_types(&[j]))?));
        for h in j + 1..=k {
            let mut n = 0;
            for_each(&EnumSpec::sphere(k, 2).with_types(&[j, h]), |d| {
                if d.branch_points[0].order() != d.branch_points[1].order() {
                    n += 1;
                }
            })?;
            report.mixed_pair.push((j, h, n));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub k: usize,
    pub r_max: usize,
    /// `(r, data checked)`.
    pub checked: Vec<(usize, u64)>,
    #[serde(skip)]
    pub counterexamples: Vec<HurwitzData>,
}

impl ParityReport {
    pub fn total(&self) -> u64 {
        self.checked.iter().map(|&(_, n)| n).sum()
    }

    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Number of branch points of even type.
pub fn even_type_points(data: &HurwitzData) -> usize {
    data.branch_points.iter().filter(|bp| bp.order() % 2 == 0).count()
}

/// Over the sphere, every datum with `r <= r_max` has an even number of
/// even-type points.
pub fn verify_parity(k: usize, r_max: usize) -> Result<ParityReport, SearchError> {
    let mut report = ParityReport {
        k,
        r_max,
        checked: Vec::new(),
        counterexamples: Vec::new(),
    };
    for r in 0..=r_max {
        let mut n = 0;
        for_each(&EnumSpec::sphere(k, r), |d| {
            n += 1;
            if even_type_points(&d) % 2 == 1 {
                report.counterexamples.push(d);
            }
        })?;
        report.checked.push((r, n));
    }
    Ok(report)
}

const GENERATION_ATTEMPTS: u32 = 10_000;

/// Seed-deterministic random valid data: handles and the first `r - 1`
/// branch cycles are uniform, the last cycle closes the relation and must be
/// a single cycle. Oriented signs are uniform.
pub fn random_valid_data(seed: u64, k: usize, genus: usize, points: usize, mode: Mode) -> Result<HurwitzData, SearchError> {
    if k < 2 {
        return Err(SearchError::InvalidSpec(format!("degree {k} is below 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..GENERATION_ATTEMPTS {
        rng.set_stream(attempt as u64);
        let random_perm = |rng: &mut ChaCha8Rng| {
            let mut v: Vec<usize> = (0..k).collect();
            v.shuffle(rng);
            Perm::from_images(v).expect("shuffle is a bijection")
        };
        let handles: Vec<(Perm, Perm)> = (0..genus).map(|_| (random_perm(&mut rng), random_perm(&mut rng))).collect();
        let mut cycles: Vec<Vec<usize>> = (0..points.saturating_sub(1))
            .map(|_| {
                let j = rng.gen_range(2..=k);
                let mut sheets: Vec<usize> = (0..k).collect();
                sheets.shuffle(&mut rng);
                sheets.truncate(j);
                sheets
            })
            .collect();
        let mut product = Perm::identity(k);
        for (a, b) in &handles {
            product = product.compose_unchecked(&commutator(a, b).expect("same degree"));
        }
        for c in &cycles {
            product = product.compose_unchecked(&Perm::from_cycle(k, c).expect("distinct sheets"));
        }
        if points == 0 {
            if !product.is_identity() {
                continue;
            }
        } else {
            let closing = product.inverse();
            if closing.single_cycle_length().is_none() {
                continue;
            }
            cycles.push(closing.nontrivial_cycles().pop().unwrap());
        }
        let branch_points = cycles
            .into_iter()
            .map(|c| {
                let sign = match mode {
                    Mode::Oriented => Some(if rng.gen::<bool>() { Sign::Plus } else { Sign::Minus }),
                    Mode::Unoriented => None,
                };
                BranchPoint::new(c, sign)
            })
            .collect();
        let data = HurwitzData {
            degree: k,
            mode,
            target_genus: genus,
            handles,
            branch_points,
        };
        debug_assert!(data.is_valid());
        return Ok(data);
    }
    Err(SearchError::GenerationFailed {
        attempts: GENERATION_ATTEMPTS,
    })
}

/// A single sphere datum with invariant `c`, searching sign assignments on
/// every enumerated monodromy tuple with at most `max_points` points.
pub fn sphere_representative(c: &ClassVector, max_points: usize) -> Result<Option<HurwitzData>, SearchError> {
    let k = c.degree();
    for r in 0..=max_points {
        let mut spec = EnumSpec::sphere(k, r);
        spec.mode = c.mode();
        let mut found = None;
        for_each(&spec, |d| {
            if found.is_some() {
                return;
            }
            if let Some(w) = sign_assignment_for(&d, c) {
                found = Some(w);
            }
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn sign_assignment_for(data: &HurwitzData, c: &ClassVector) -> Option<HurwitzData> {
    let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
    for bp in &data.branch_points {
        *counts.entry(bp.order()).or_default() += 1;
    }
    // |c_j| <= count_j and matching parity are necessary in both modes
    for j in 2..=c.degree() {
        let n = counts.get(&j).copied().unwrap_or(0);
        let cj = c.get(j);
        if (n - cj).rem_euclid(2) != 0 || (c.mode() == Mode::Oriented && cj.abs() > n) {
            return None;
        }
    }
    if c.mode() == Mode::Unoriented {
        return Some(data.clone());
    }
    let r = data.branch_points.len();
    (0u32..1 << r).find_map(|mask| {
        let mut d = data.clone();
        for (m, bp) in d.branch_points.iter_mut().enumerate() {
            bp.sign = Some(if mask >> m & 1 == 1 { Sign::Minus } else { Sign::Plus });
        }
        let set = BranchedCoveringSet::single(d.clone());
        (invariant(&set).ok().as_ref() == Some(c)).then_some(d)
    })
}
