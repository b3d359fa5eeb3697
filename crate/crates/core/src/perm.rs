//! Permutations of the sheets of a covering.
//!
//! Sheets are indexed `0..k`. Products are read left to right: `p.compose(&q)`
//! applies `p` first and then `q`, so it maps `i` to `q(p(i))`. Every
//! monodromy relation in the crate uses this convention.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("permutation degree must be at least 1")]
    EmptyDegree,
    #[error("image {value} out of range for degree {degree}")]
    OutOfRange { value: usize, degree: usize },
    #[error("value {0} appears more than once")]
    Repeated(usize),
}

/// A bijection of `{0, .., k-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        if degree == 0 {
            return Err(PermError::EmptyDegree);
        }
        let mut seen = vec![false; degree];
        for &v in &images {
            if v >= degree {
                return Err(PermError::OutOfRange { value: v, degree });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PermError::Repeated(v));
            }
        }
        Ok(Perm { images })
    }

    /// The permutation of the given degree with a single cycle
    /// `cycle[0] -> cycle[1] -> .. -> cycle[0]`.
    pub fn from_cycle(degree: usize, cycle: &[usize]) -> Result<Self, PermError> {
        Self::from_cycles(degree, std::slice::from_ref(&cycle))
    }

    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::EmptyDegree);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &v in cycle {
                if v >= degree {
                    return Err(PermError::OutOfRange { value: v, degree });
                }
                if std::mem::replace(&mut used[v], true) {
                    return Err(PermError::Repeated(v));
                }
            }
            for (pos, &v) in cycle.iter().enumerate() {
                images[v] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, exp: i64) -> Perm {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut result = Perm::identity(self.degree());
        for _ in 0..exp.unsigned_abs() {
            result = result.compose_unchecked(&base);
        }
        result
    }

    /// `x -> other^-1 . self . other` in left-to-right notation, i.e. the
    /// permutation obtained by relabelling every sheet `i` as `other(i)`.
    pub fn conjugate_by(&self, other: &Perm) -> Result<Perm, PermError> {
        self.check_degree(other)?;
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[other.images[i]] = other.images[v];
        }
        Ok(Perm { images })
    }

    /// All cycles, fixed points included, each starting at its smallest
    /// element; cycles are ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycles of length at least two.
    pub fn nontrivial_cycles(&self) -> Vec<Vec<usize>> {
        self.cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// Cycle lengths, fixed points included, in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// True iff the permutation is one `j`-cycle and fixes everything else.
    pub fn is_single_cycle_of_length(&self, j: usize) -> bool {
        j >= 2 && self.moved_points() == j && self.nontrivial_cycles().len() == 1
    }

    /// The length of the unique non-trivial cycle, if there is exactly one.
    pub fn single_cycle_length(&self) -> Option<usize> {
        match self.nontrivial_cycles().as_slice() {
            [c] => Some(c.len()),
            _ => None,
        }
    }

    pub fn moved_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &v)| i != v).count()
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Extend to a larger degree by fixing the new sheets.
    pub fn padded(&self, degree: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.degree()..degree.max(self.degree()));
        Perm { images }
    }

    fn check_degree(&self, other: &Perm) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

/// `a b a^-1 b^-1`, read left to right.
pub fn commutator(a: &Perm, b: &Perm) -> Result<Perm, PermError> {
    let ab = a.compose(b)?;
    let inv = a.inverse().compose_unchecked(&b.inverse());
    Ok(ab.compose_unchecked(&inv))
}

/// Left-to-right product of a sequence of permutations of one degree.
pub fn product<'a, I>(degree: usize, perms: I) -> Result<Perm, PermError>
where
    I: IntoIterator<Item = &'a Perm>,
{
    let mut acc = Perm::identity(degree);
    for p in perms {
        acc = acc.compose(p)?;
    }
    Ok(acc)
}

/// Orbits of the group generated by `generators` on `{0, .., degree-1}`,
/// each sorted, ordered by smallest element.
pub fn orbits(degree: usize, generators: &[Perm]) -> Result<Vec<Vec<usize>>, PermError> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in generators {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        for (i, &v) in g.images.iter().enumerate() {
            let (ri, rv) = (find(&mut parent, i), find(&mut parent, v));
            if ri != rv {
                parent[ri.max(rv)] = ri.min(rv);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; degree];
    for i in 0..degree {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(i);
    }
    Ok(groups)
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Perm::from_images(images)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.images
    }
}

/// Cycle notation, fixed points omitted; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.nontrivial_cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// Iterates over all permutations of a degree in lexicographic order of
/// their image arrays.
#[derive(Debug, Clone)]
pub struct AllPerms {
    next: Option<Vec<usize>>,
}

impl AllPerms {
    pub fn new(degree: usize) -> Self {
        AllPerms {
            next: (degree > 0).then(|| (0..degree).collect()),
        }
    }
}

impl Iterator for AllPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        if let Some(i) = (0..succ.len().saturating_sub(1)).rev().find(|&i| succ[i] < succ[i + 1]) {
            let j = (i + 1..succ.len()).rev().find(|&j| succ[j] > succ[i]).unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Perm { images: current })
    }
}
