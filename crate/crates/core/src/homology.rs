//! `H_2` of the classifying space of `k`-fold simple branched coverings,
//! recomputed from the long exact sequence of the pair `(B^1(k), B^0(k))`
//! with `B^0(k) = BS_k`:
//!
//! ```text
//! ⊕_j H_1(BS_{k-j}) --d3--> H_2(BS_k) --α--> H_2(B^1(k)) --β--> ⊕_j H_0(BS_{k-j}) --d2--> H_1(BS_k)
//! ```
//!
//! with `j = 2..k` (relative terms tensored with `Z/2` in unoriented mode).
//! A summand `j` maps by multiplication with the class of a `j`-cycle,
//! which vanishes exactly for odd `j`. So `d2` sends even `j` to the
//! generator of `H_1(BS_k)` and odd `j` to 0. Of `d3` only the `j = 2` column
//! is pinned down (it hits the generator of `H_2(BS_k)` once `k >= 4`); the
//! other even columns stay unknown and are never used.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::fgab::{FGAbelianGroup, Homomorphism, IntMatrix};
use crate::hurwitz::Mode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("known columns of d3 leave H_2(BS_k) / Im d3 = {0}; extension not resolved")]
    ExtensionUnresolved(FGAbelianGroup),
}

/// Low-degree integral homology of symmetric groups, `H_i(BS_j)` for
/// `i <= 2`. `None` above degree 2.
pub fn sym_homology(i: usize, j: usize) -> Option<FGAbelianGroup> {
    match (i, j) {
        (0, _) => Some(FGAbelianGroup::free(1)),
        (1, 0..=1) => Some(FGAbelianGroup::trivial()),
        (1, _) => Some(FGAbelianGroup::cyclic(2)),
        (2, 0..=3) => Some(FGAbelianGroup::trivial()),
        (2, _) => Some(FGAbelianGroup::cyclic(2)),
        _ => None,
    }
}

/// The single cyclic order of a table entry: `0` for `Z`, `1` for the
/// trivial group.
fn cyclic_order(g: &FGAbelianGroup) -> BigInt {
    match g.invariant_factors() {
        [] => BigInt::one(),
        [d] => d.clone(),
        _ => unreachable!("table entries are cyclic"),
    }
}

fn tensor_z2(g: &FGAbelianGroup) -> FGAbelianGroup {
    let orders: Vec<BigInt> = g
        .invariant_factors()
        .iter()
        .map(|d| if d.is_zero() { BigInt::from(2) } else { num_integer::Integer::gcd(d, &BigInt::from(2)) })
        .collect();
    FGAbelianGroup::from_cyclic_orders(&orders).expect("non-negative")
}

/// A boundary map whose columns may be partly undetermined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMap {
    /// 2 or 3.
    pub degree: usize,
    pub k: usize,
    pub mode: Mode,
    /// `(j, H_{degree-2}(BS_{k-j}))` per source summand, in column order.
    pub source: Vec<(usize, FGAbelianGroup)>,
    pub target: FGAbelianGroup,
    /// Column per source summand; `None` where the value is not determined.
    pub columns: Vec<Option<Vec<BigInt>>>,
}

impl BoundaryMap {
    fn source_orders(&self) -> Vec<BigInt> {
        self.source.iter().map(|(_, g)| cyclic_order(g)).collect()
    }

    fn target_orders(&self) -> Vec<BigInt> {
        self.target.invariant_factors().to_vec()
    }

    /// The full source, unknown columns included.
    pub fn source_group(&self) -> FGAbelianGroup {
        FGAbelianGroup::from_cyclic_orders(&self.source_orders()).expect("non-negative")
    }

    pub fn unknown_columns(&self) -> Vec<usize> {
        self.source
            .iter()
            .zip(&self.columns)
            .filter(|(_, c)| c.is_none())
            .map(|((j, _), _)| *j)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.columns.iter().all(Option::is_some)
    }

    /// The restriction to the determined columns.
    pub fn known_part(&self) -> Homomorphism {
        let known: Vec<usize> = (0..self.columns.len()).filter(|&c| self.columns[c].is_some()).collect();
        let rows = self.target_orders().len();
        let mut matrix = IntMatrix::zeros(rows, known.len());
        for (jj, &c) in known.iter().enumerate() {
            for (r, v) in self.columns[c].as_ref().unwrap().iter().enumerate() {
                matrix.set(r, jj, v.clone());
            }
        }
        let sources = self.source_orders();
        Homomorphism::new(known.iter().map(|&c| sources[c].clone()).collect(), self.target_orders(), matrix)
            .expect("boundary columns are well defined")
    }

    /// Row-major cells, `None` for undetermined entries.
    pub fn matrix_cells(&self) -> Vec<Vec<Option<BigInt>>> {
        (0..self.target_orders().len())
            .map(|r| self.columns.iter().map(|c| c.as_ref().map(|col| col[r].clone())).collect())
            .collect()
    }
}

/// `d_i` for `i` in `{2, 3}`.
pub fn boundary_matrix(i: usize, k: usize, mode: Mode) -> Result<BoundaryMap, HomologyError> {
    assert!(i == 2 || i == 3, "only d2 and d3 enter the computation");
    if k < 2 {
        return Err(HomologyError::DegreeTooSmall(k));
    }
    let relative = |j: usize| {
        let g = sym_homology(i - 2, k - j).expect("degree <= 2");
        match mode {
            Mode::Oriented => g,
            Mode::Unoriented => tensor_z2(&g),
        }
    };
    let source: Vec<(usize, FGAbelianGroup)> = (2..=k).map(|j| (j, relative(j))).collect();
    let target = sym_homology(i - 1, k).expect("degree <= 2");
    let rows = target.invariant_factors().len();
    let generator = || {
        let mut col = vec![BigInt::zero(); rows];
        col[0] = BigInt::one();
        col
    };
    let columns = source
        .iter()
        .map(|(j, group)| {
            if j % 2 == 1 || group.is_trivial() || rows == 0 {
                Some(vec![BigInt::zero(); rows])
            } else if i == 2 || *j == 2 {
                Some(generator())
            } else {
                None
            }
        })
        .collect();
    Ok(BoundaryMap {
        degree: i,
        k,
        mode,
        source,
        target,
        columns,
    })
}

/// The five terms and both boundary maps for one `(k, mode)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequenceInstance {
    pub k: usize,
    pub mode: Mode,
    pub d3: BoundaryMap,
    pub d2: BoundaryMap,
}

impl ExactSequenceInstance {
    pub fn new(k: usize, mode: Mode) -> Result<Self, HomologyError> {
        Ok(ExactSequenceInstance {
            k,
            mode,
            d3: boundary_matrix(3, k, mode)?,
            d2: boundary_matrix(2, k, mode)?,
        })
    }

    /// `⊕_j H_1(BS_{k-j})`, normalized.
    pub fn relative_h3(&self) -> FGAbelianGroup {
        self.d3.source_group()
    }

    /// `H_2(BS_k)`.
    pub fn fiber_h2(&self) -> &FGAbelianGroup {
        &self.d3.target
    }

    /// `⊕_j H_0(BS_{k-j})`, normalized.
    pub fn relative_h2(&self) -> FGAbelianGroup {
        self.d2.source_group()
    }

    /// `H_1(BS_k)`.
    pub fn fiber_h1(&self) -> &FGAbelianGroup {
        &self.d2.target
    }
}

/// Every intermediate group of the computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyTrace {
    #[serde(skip)]
    pub instance: ExactSequenceInstance,
    /// `Ker d2 = Im β`.
    pub kernel_d2: FGAbelianGroup,
    /// Image of the determined columns of `d3`, a subgroup of `Im d3`.
    pub image_d3_lower_bound: FGAbelianGroup,
    /// `H_2(BS_k) / (known part of Im d3)`, which surjects onto `Im α`.
    pub image_alpha_bound: FGAbelianGroup,
    /// `H_2(B^1(k)) ≅ Cob(2, k)`.
    pub result: FGAbelianGroup,
}

/// `H_2(B^1(k))`, i.e. `Cob(2, k)`, read off the exact sequence.
///
/// `Im α` is bounded by the cokernel of the known part of `d3`; once that is
/// trivial, `β` is injective and the group is `Ker d2`. Anything else is
/// reported as [`HomologyError::ExtensionUnresolved`].
pub fn h2_classifying(k: usize, mode: Mode) -> Result<HomologyTrace, HomologyError> {
    let instance = ExactSequenceInstance::new(k, mode)?;
    let d3 = instance.d3.known_part();
    let image_d3_lower_bound = d3.image();
    let image_alpha_bound = d3.cokernel();
    if !image_alpha_bound.is_trivial() {
        return Err(HomologyError::ExtensionUnresolved(image_alpha_bound));
    }
    let kernel_d2 = instance.d2.known_part().kernel().group;
    Ok(HomologyTrace {
        result: kernel_d2.clone(),
        kernel_d2,
        image_d3_lower_bound,
        image_alpha_bound,
        instance,
    })
}
