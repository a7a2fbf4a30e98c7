//! Finite chain complexes of free abelian groups.
//!
//! A complex stores consecutive degrees starting at `bottom_degree`, the
//! boundary matrices between them, and an `augmented` flag. By convention an
//! augmented complex has `bottom_degree == -1` with rank 1 there, and its
//! lowest boundary matrix is the augmentation; its homology is then reduced
//! homology. Unreduced homology of a space is the reduced homology of the
//! same space with a disjoint base point, so no second representation is
//! needed.
//!
//! Degree conventions: `boundary_from(n)` is the matrix of `∂ : C_n -> C_(n-1)`
//! acting on column vectors, with shape `rank(n-1) x rank(n)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::serial::JsonIntSeq;

/// A finitely generated abelian group `Z^betti + Z/t1 + Z/t2 + ...`
/// with `t1 | t2 | ...` all greater than 1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        HomologyGroup::default()
    }

    pub fn free(betti: usize) -> Self {
        HomologyGroup {
            betti,
            torsion: vec![],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HomologyGroup", 2)?;
        s.serialize_field("betti", &self.betti)?;
        s.serialize_field("torsion", &JsonIntSeq(&self.torsion))?;
        s.end()
    }
}

/// Finite chain complex of free abelian groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    bottom: i64,
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
    augmented: bool,
}

impl ChainComplex {
    /// Builds a complex and checks the chain axioms; `boundaries[k]` maps
    /// degree `bottom + k + 1` into degree `bottom + k`.
    pub fn new(
        bottom: i64,
        ranks: Vec<usize>,
        boundaries: Vec<IntMatrix>,
        augmented: bool,
    ) -> Result<Self> {
        if ranks.is_empty() {
            if !boundaries.is_empty() {
                return Err(Error::InvalidComplex(
                    "boundary matrices supplied for a complex with no degrees".into(),
                ));
            }
            if augmented {
                return Err(Error::InvalidComplex(
                    "augmented complex must have rank 1 in degree -1".into(),
                ));
            }
            return Ok(ChainComplex {
                bottom,
                ranks,
                boundaries,
                augmented,
            });
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::InvalidComplex(format!(
                "{} degrees need {} boundary matrices, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.rows() != ranks[k] || b.cols() != ranks[k + 1] {
                return Err(Error::InvalidComplex(format!(
                    "boundary into degree {} must be {}x{}, got {}x{}",
                    bottom + k as i64,
                    ranks[k],
                    ranks[k + 1],
                    b.rows(),
                    b.cols()
                )));
            }
        }
        for k in 0..boundaries.len().saturating_sub(1) {
            let prod = boundaries[k].mul(&boundaries[k + 1])?;
            if !prod.is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "boundary composition from degree {} is nonzero",
                    bottom + k as i64 + 2
                )));
            }
        }
        if augmented && (bottom != -1 || ranks[0] != 1) {
            return Err(Error::InvalidComplex(
                "augmented complex must have rank 1 in degree -1".into(),
            ));
        }
        Ok(ChainComplex {
            bottom,
            ranks,
            boundaries,
            augmented,
        })
    }

    pub fn bottom_degree(&self) -> i64 {
        self.bottom
    }

    pub fn top_degree(&self) -> Option<i64> {
        if self.ranks.is_empty() {
            None
        } else {
            Some(self.bottom + self.ranks.len() as i64 - 1)
        }
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    pub fn rank(&self, degree: i64) -> usize {
        if self.ranks.is_empty() || degree < self.bottom {
            return 0;
        }
        let idx = (degree - self.bottom) as usize;
        self.ranks.get(idx).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        let lo = self.bottom;
        let n = self.ranks.len() as i64;
        lo..lo + n
    }

    /// Matrix of `∂ : C_degree -> C_(degree-1)`; zero-shaped outside range.
    pub fn boundary_from(&self, degree: i64) -> IntMatrix {
        let idx = degree - self.bottom - 1;
        if idx >= 0 && (idx as usize) < self.boundaries.len() {
            self.boundaries[idx as usize].clone()
        } else {
            IntMatrix::zeros(self.rank(degree - 1), self.rank(degree))
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|d| {
                let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * self.rank(d) as i64
            })
            .sum()
    }

    /// Homology in one degree: kernel of the outgoing boundary modulo the
    /// image of the incoming one, computed by the two-stage Smith procedure
    /// (kernel basis from the outgoing SNF, then the incoming image expressed
    /// in that basis).
    pub fn homology(&self, degree: i64) -> HomologyGroup {
        let n = self.rank(degree);
        if n == 0 {
            return HomologyGroup::zero();
        }
        let outgoing = self.boundary_from(degree);
        let full = outgoing.snf_full();
        let r = full.diagonal.len();
        let kernel_dim = n - r;
        if kernel_dim == 0 {
            return HomologyGroup::zero();
        }
        let incoming = self.boundary_from(degree + 1);
        if incoming.cols() == 0 {
            return HomologyGroup::free(kernel_dim);
        }
        // v_inv maps chains to SNF coordinates; the kernel lattice is exactly
        // the span of the last kernel_dim coordinates.
        let coords = full
            .v_inv
            .mul(&incoming)
            .expect("kernel coordinates: shape fixed by construction");
        debug_assert!(
            (0..r).all(|i| (0..coords.cols()).all(|j| coords.get(i, j).is_zero())),
            "incoming image must lie in the outgoing kernel"
        );
        let in_kernel = IntMatrix::from_fn(kernel_dim, coords.cols(), |i, j| {
            coords.get(r + i, j).clone()
        });
        let (betti, torsion) = in_kernel.cokernel_structure();
        HomologyGroup { betti, torsion }
    }

    /// Cohomology via the dual complex (all boundaries transposed, degrees
    /// negated); same return contract as [`ChainComplex::homology`].
    pub fn cohomology(&self, degree: i64) -> HomologyGroup {
        self.dual().homology(-degree)
    }

    fn dual(&self) -> ChainComplex {
        if self.ranks.is_empty() {
            return self.clone();
        }
        let top = self.top_degree().expect("nonempty");
        let len = self.ranks.len();
        let ranks: Vec<usize> = self.ranks.iter().rev().copied().collect();
        let boundaries: Vec<IntMatrix> = (0..len - 1)
            .map(|k| self.boundaries[len - 2 - k].transpose())
            .collect();
        ChainComplex::new(-top, ranks, boundaries, false).expect("dual of a valid complex is valid")
    }

    /// Map of homology groups over a degree range (inclusive).
    pub fn homology_table(&self, min_degree: i64, max_degree: i64) -> BTreeMap<i64, HomologyGroup> {
        (min_degree..=max_degree)
            .map(|d| (d, self.homology(d)))
            .collect()
    }

    /// Chain-level suspension: reduced homology shifts up by `n` degrees.
    /// Requires an augmented complex; the result is augmented again, with the
    /// filler degrees below the shifted block exact.
    pub fn shift(&self, n: u32) -> Result<ChainComplex> {
        if !self.augmented {
            return Err(Error::NotAugmented { op: "shift" });
        }
        if n == 0 {
            return Err(Error::OutOfRange("shift amount must be >= 1".into()));
        }
        let n = n as i64;
        let top = self.top_degree().expect("augmented complex has degree -1");
        // The whole augmented complex (including its degree -1 line) becomes
        // the reduced part, moved up so old degree -1 sits at new degree n-1.
        let part_len = (top + n + 1) as usize;
        let part_ranks: Vec<usize> = (0..part_len).map(|k| self.rank(k as i64 - n)).collect();
        let part_boundaries: Vec<IntMatrix> = (0..part_len.saturating_sub(1))
            .map(|k| self.boundary_from(k as i64 + 1 - n))
            .collect();
        Ok(assemble_pointed(&part_ranks, &part_boundaries))
    }

    /// Chain model of the smash product: tensor of the two complexes reduced
    /// modulo a base vertex, repackaged as an augmented complex. Both inputs
    /// must be augmented and have at least one degree-0 cell.
    pub fn reduced_tensor(&self, other: &ChainComplex) -> Result<ChainComplex> {
        let a = self.reduced_part("reduced_tensor")?;
        let b = other.reduced_part("reduced_tensor")?;
        let (ranks, boundaries) = tensor_parts(&a, &b);
        Ok(assemble_pointed(&ranks, &boundaries))
    }

    /// Quotient by the subcomplex spanned by the first degree-0 basis element
    /// (and its augmentation image); computes reduced homology in every degree.
    fn reduced_part(&self, op: &'static str) -> Result<(Vec<usize>, Vec<IntMatrix>)> {
        if !self.augmented {
            return Err(Error::NotAugmented { op });
        }
        if self.rank(0) == 0 {
            return Err(Error::NoBasepoint { op });
        }
        let top = self.top_degree().expect("augmented complex has degree -1");
        let len = (top + 1).max(1) as usize;
        let mut ranks: Vec<usize> = (0..len).map(|d| self.rank(d as i64)).collect();
        ranks[0] -= 1;
        let boundaries: Vec<IntMatrix> = (0..len.saturating_sub(1))
            .map(|d| {
                let b = self.boundary_from(d as i64 + 1);
                if d == 0 {
                    IntMatrix::from_fn(b.rows() - 1, b.cols(), |i, j| b.get(i + 1, j).clone())
                } else {
                    b
                }
            })
            .collect();
        Ok((ranks, boundaries))
    }

    /// Degreewise direct sum with block-diagonal boundaries. The result is
    /// never flagged augmented (two augmentation lines would collide).
    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        if self.ranks.is_empty() {
            let mut out = other.clone();
            out.augmented = false;
            return out;
        }
        if other.ranks.is_empty() {
            let mut out = self.clone();
            out.augmented = false;
            return out;
        }
        let bottom = self.bottom.min(other.bottom);
        let top = self
            .top_degree()
            .expect("nonempty")
            .max(other.top_degree().expect("nonempty"));
        let ranks: Vec<usize> = (bottom..=top)
            .map(|d| self.rank(d) + other.rank(d))
            .collect();
        let boundaries: Vec<IntMatrix> = (bottom..top)
            .map(|d| {
                let a = self.boundary_from(d + 1);
                let b = other.boundary_from(d + 1);
                let (ar, ac) = (a.rows(), a.cols());
                IntMatrix::from_fn(ar + b.rows(), ac + b.cols(), |i, j| {
                    if i < ar && j < ac {
                        a.get(i, j).clone()
                    } else if i >= ar && j >= ac {
                        b.get(i - ar, j - ac).clone()
                    } else {
                        BigInt::zero()
                    }
                })
            })
            .collect();
        ChainComplex::new(bottom, ranks, boundaries, false)
            .expect("block sum of valid complexes is valid")
    }

    /// Quotient of `self` by a subcomplex `sub` included via per-degree basis
    /// index lists (`inclusion[k] = (degree, indices into self's basis)`,
    /// strictly increasing). Fails unless the indices really carve out `sub`
    /// as a subcomplex: closed under the boundary and matching `sub`'s
    /// boundary matrices.
    pub fn relative(
        &self,
        sub: &ChainComplex,
        inclusion: &[(i64, Vec<usize>)],
    ) -> Result<ChainComplex> {
        let mut incl: BTreeMap<i64, &Vec<usize>> = BTreeMap::new();
        for (d, indices) in inclusion {
            if incl.insert(*d, indices).is_some() {
                return Err(Error::NotSubcomplex(format!(
                    "duplicate degree {d} in inclusion data"
                )));
            }
        }
        let empty = Vec::new();
        let incl_at = |d: i64| -> &Vec<usize> { incl.get(&d).copied().unwrap_or(&empty) };

        // Index lists must be strictly increasing, in range, and sized to sub.
        for d in self.degrees().chain(sub.degrees()) {
            let ind = incl_at(d);
            if ind.len() != sub.rank(d) {
                return Err(Error::NotSubcomplex(format!(
                    "degree {d}: {} indices given for subcomplex rank {}",
                    ind.len(),
                    sub.rank(d)
                )));
            }
            if ind.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NotSubcomplex(format!(
                    "degree {d}: inclusion indices must be strictly increasing"
                )));
            }
            if ind.iter().any(|&i| i >= self.rank(d)) {
                return Err(Error::NotSubcomplex(format!(
                    "degree {d}: inclusion index out of range"
                )));
            }
        }

        for d in sub.degrees() {
            let cols = incl_at(d);
            let rows = incl_at(d - 1);
            let big = self.boundary_from(d);
            let small = sub.boundary_from(d);
            let row_set: std::collections::BTreeSet<usize> = rows.iter().copied().collect();
            for (jj, &j) in cols.iter().enumerate() {
                for i in 0..big.rows() {
                    if !row_set.contains(&i) && !big.get(i, j).is_zero() {
                        return Err(Error::NotSubcomplex(format!(
                            "boundary of included cell {j} in degree {d} leaves the subcomplex"
                        )));
                    }
                }
                for (ii, &i) in rows.iter().enumerate() {
                    if big.get(i, j) != small.get(ii, jj) {
                        return Err(Error::NotSubcomplex(format!(
                            "included boundary disagrees with subcomplex at degree {d}"
                        )));
                    }
                }
            }
        }

        if self.ranks.is_empty() {
            return Ok(self.clone());
        }
        let kept: Vec<Vec<usize>> = self
            .degrees()
            .map(|d| {
                let ind = incl_at(d);
                (0..self.rank(d)).filter(|i| !ind.contains(i)).collect()
            })
            .collect();
        let ranks: Vec<usize> = kept.iter().map(Vec::len).collect();
        let boundaries: Vec<IntMatrix> = (0..kept.len().saturating_sub(1))
            .map(|k| {
                let b = self.boundary_from(self.bottom + k as i64 + 1);
                IntMatrix::from_fn(kept[k].len(), kept[k + 1].len(), |i, j| {
                    b.get(kept[k][i], kept[k + 1][j]).clone()
                })
            })
            .collect();
        let augmented = self.augmented && incl_at(-1).is_empty();
        ChainComplex::new(self.bottom, ranks, boundaries, augmented)
    }
}

/// Wraps a complex concentrated in degrees >= 0 (the "reduced part") into an
/// augmented complex with one fresh base vertex; reduced homology of the
/// result equals the homology of the part in every degree.
fn assemble_pointed(part_ranks: &[usize], part_boundaries: &[IntMatrix]) -> ChainComplex {
    let part_len = part_ranks.len();
    let mut ranks = Vec::with_capacity(part_len + 2);
    ranks.push(1); // degree -1
    ranks.push(1 + part_ranks.first().copied().unwrap_or(0)); // degree 0: base vertex + part
    ranks.extend(part_ranks.iter().skip(1).copied());

    let mut boundaries = Vec::with_capacity(ranks.len() - 1);
    // Augmentation: the base vertex maps to 1, part cells in degree 0 map to 0
    // (their images are accounted for inside the part itself).
    let mut aug = IntMatrix::zeros(1, ranks[1]);
    aug.set(0, 0, 1.into());
    boundaries.push(aug);
    for (k, b) in part_boundaries
        .iter()
        .take(part_len.saturating_sub(1))
        .enumerate()
    {
        let row_offset = usize::from(k == 0);
        boundaries.push(IntMatrix::from_fn(
            b.rows() + row_offset,
            b.cols(),
            |i, j| {
                if i < row_offset {
                    BigInt::zero()
                } else {
                    b.get(i - row_offset, j).clone()
                }
            },
        ));
    }
    ChainComplex::new(-1, ranks, boundaries, true)
        .expect("pointed assembly of a valid part is valid")
}

/// Tensor product of two complexes concentrated in degrees >= 0, with the
/// graded Leibniz boundary `∂(x⊗y) = ∂x⊗y + (-1)^p x⊗∂y`.
fn tensor_parts(
    (a_ranks, a_bounds): &(Vec<usize>, Vec<IntMatrix>),
    (b_ranks, b_bounds): &(Vec<usize>, Vec<IntMatrix>),
) -> (Vec<usize>, Vec<IntMatrix>) {
    let la = a_ranks.len();
    let lb = b_ranks.len();
    if la == 0 || lb == 0 {
        return (vec![], vec![]);
    }
    let out_len = la + lb - 1;

    // Block offsets: degree n splits into blocks (p, n-p) for p = 0..=n.
    let block_offset = |n: usize, p: usize| -> usize {
        (0..p)
            .map(|pp| {
                let q = n - pp;
                if pp < la && q < lb {
                    a_ranks[pp] * b_ranks[q]
                } else {
                    0
                }
            })
            .sum()
    };
    let rank_at = |n: usize| -> usize { block_offset(n, n + 1) };

    let ranks: Vec<usize> = (0..out_len).map(rank_at).collect();
    let a_bound = |p: usize| -> &IntMatrix { &a_bounds[p - 1] }; // map degree p -> p-1
    let b_bound = |q: usize| -> &IntMatrix { &b_bounds[q - 1] };

    let mut boundaries = Vec::with_capacity(out_len - 1);
    for n in 1..out_len {
        let mut m = IntMatrix::zeros(ranks[n - 1], ranks[n]);
        for p in 0..=n {
            let q = n - p;
            if p >= la || q >= lb || a_ranks[p] == 0 || b_ranks[q] == 0 {
                continue;
            }
            let col_base = block_offset(n, p);
            for i in 0..a_ranks[p] {
                for j in 0..b_ranks[q] {
                    let col = col_base + i * b_ranks[q] + j;
                    if p >= 1 && a_ranks[p - 1] > 0 {
                        let da = a_bound(p);
                        let row_base = block_offset(n - 1, p - 1);
                        for i2 in 0..a_ranks[p - 1] {
                            let coeff = da.get(i2, i);
                            if !coeff.is_zero() {
                                let row = row_base + i2 * b_ranks[q] + j;
                                m.set(row, col, coeff.clone());
                            }
                        }
                    }
                    if q >= 1 && b_ranks[q - 1] > 0 {
                        let db = b_bound(q);
                        let negate = p % 2 == 1;
                        let row_base = block_offset(n - 1, p);
                        for j2 in 0..b_ranks[q - 1] {
                            let coeff = db.get(j2, j);
                            if !coeff.is_zero() {
                                let row = row_base + i * b_ranks[q - 1] + j2;
                                m.set(row, col, if negate { -coeff } else { coeff.clone() });
                            }
                        }
                    }
                }
            }
        }
        boundaries.push(m);
    }
    (ranks, boundaries)
}

impl fmt::Display for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks: Vec<String> = self
            .degrees()
            .map(|d| format!("{}:{}", d, self.rank(d)))
            .collect();
        write!(
            f,
            "ChainComplex[{}{}]",
            ranks.join(" "),
            if self.augmented { ", augmented" } else { "" }
        )
    }
}

impl Serialize for ChainComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ChainComplex", 4)?;
        s.serialize_field("bottom_degree", &self.bottom)?;
        s.serialize_field("ranks", &self.ranks)?;
        let rows: Vec<Vec<Vec<String>>> = self
            .boundaries
            .iter()
            .map(|b| {
                (0..b.rows())
                    .map(|i| (0..b.cols()).map(|j| b.get(i, j).to_string()).collect())
                    .collect()
            })
            .collect();
        s.serialize_field("boundaries", &rows)?;
        s.serialize_field("augmented", &self.augmented)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(betti: usize, torsion: &[i64]) -> HomologyGroup {
        HomologyGroup {
            betti,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    /// Augmented chain complex of the boundary of the 3-simplex (a 2-sphere).
    /// Matrices frozen from an independent computation.
    fn sphere2_chain() -> ChainComplex {
        let aug = IntMatrix::from_rows(&[vec![1, 1, 1, 1]]).unwrap();
        let d1 = IntMatrix::from_rows(&[
            vec![-1, -1, -1, 0, 0, 0],
            vec![1, 0, 0, -1, -1, 0],
            vec![0, 1, 0, 1, 0, -1],
            vec![0, 0, 1, 0, 1, 1],
        ])
        .unwrap();
        let d2 = IntMatrix::from_rows(&[
            vec![1, 1, 0, 0],
            vec![-1, 0, 1, 0],
            vec![0, -1, -1, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 0, -1],
            vec![0, 0, 1, 1],
        ])
        .unwrap();
        ChainComplex::new(-1, vec![1, 4, 6, 4], vec![aug, d1, d2], true).unwrap()
    }

    /// Augmented chain complex of the 6-vertex projective plane, frozen from
    /// an independent computation on the minimal triangulation.
    fn rp2_chain() -> ChainComplex {
        let aug = IntMatrix::from_rows(&[vec![1; 6]]).unwrap();
        let d1 = IntMatrix::from_rows(&[
            vec![-1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 1, 0, 0, 0, -1, -1, -1, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, -1, -1, 0],
            vec![0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, -1],
            vec![0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
        ])
        .unwrap();
        let d2 = IntMatrix::from_rows(&[
            vec![1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            vec![-1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, -1, 0, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, -1, 0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, -1, -1, 0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, -1, 1, 0, 0],
            vec![0, 0, 0, 0, 0, -1, 0, -1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
            vec![0, 0, 1, 0, 0, 0, 0, 0, -1, 0],
            vec![0, 0, 0, 0, 0, 1, 0, 0, 0, -1],
            vec![0, 0, 0, 0, 0, 0, 1, 0, 1, 0],
            vec![0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 1, 0, 0, 1, 0, 0],
        ])
        .unwrap();
        ChainComplex::new(-1, vec![1, 6, 15, 10], vec![aug, d1, d2], true).unwrap()
    }

    /// Augmented complex of a hollow triangle (circle).
    fn circle_chain() -> ChainComplex {
        let aug = IntMatrix::from_rows(&[vec![1, 1, 1]]).unwrap();
        let d1 = IntMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]).unwrap();
        ChainComplex::new(-1, vec![1, 3, 3], vec![aug, d1], true).unwrap()
    }

    fn point_chain() -> ChainComplex {
        let aug = IntMatrix::from_rows(&[vec![1]]).unwrap();
        ChainComplex::new(-1, vec![1, 1], vec![aug], true).unwrap()
    }

    fn s0_chain() -> ChainComplex {
        let aug = IntMatrix::from_rows(&[vec![1, 1]]).unwrap();
        ChainComplex::new(-1, vec![1, 2], vec![aug], true).unwrap()
    }

    #[test]
    fn constructor_rejects_nonzero_composition() {
        let b0 = IntMatrix::from_rows(&[vec![1]]).unwrap();
        let b1 = IntMatrix::from_rows(&[vec![1]]).unwrap();
        let err = ChainComplex::new(0, vec![1, 1, 1], vec![b0, b1], false);
        assert!(matches!(err, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn sphere_homology() {
        let c = sphere2_chain();
        assert_eq!(c.homology(2), group(1, &[]));
        assert_eq!(c.homology(1), group(0, &[]));
        assert_eq!(c.homology(0), group(0, &[]));
        assert_eq!(c.homology(-1), group(0, &[]));
    }

    #[test]
    fn degrees_outside_range_are_zero() {
        let c = sphere2_chain();
        assert_eq!(c.homology(-5), HomologyGroup::zero());
        assert_eq!(c.homology(7), HomologyGroup::zero());
    }

    #[test]
    fn projective_plane_homology() {
        let c = rp2_chain();
        assert_eq!(c.homology(1), group(0, &[2]));
        assert_eq!(c.homology(2), group(0, &[]));
        assert_eq!(c.homology(0), group(0, &[]));
    }

    #[test]
    fn sphere_cohomology() {
        let c = sphere2_chain();
        assert_eq!(c.cohomology(2), group(1, &[]));
        assert_eq!(c.cohomology(1), group(0, &[]));
    }

    #[test]
    fn projective_plane_cohomology_has_shifted_torsion() {
        let c = rp2_chain();
        assert_eq!(c.cohomology(2), group(0, &[2]));
        assert_eq!(c.cohomology(1), group(0, &[]));
    }

    #[test]
    fn point_unreduced_cohomology() {
        let c = ChainComplex::new(0, vec![1], vec![], false).unwrap();
        assert_eq!(c.cohomology(0), group(1, &[]));
    }

    #[test]
    fn shift_of_point_is_homologically_trivial() {
        let s = point_chain().shift(1).unwrap();
        for d in -1..=3 {
            assert_eq!(s.homology(d), HomologyGroup::zero(), "degree {d}");
        }
    }

    #[test]
    fn shift_of_s0_is_circle() {
        let s = s0_chain().shift(1).unwrap();
        assert_eq!(s.homology(1), group(1, &[]));
        assert_eq!(s.homology(0), group(0, &[]));
    }

    #[test]
    fn double_shift_of_projective_plane() {
        let s = rp2_chain().shift(2).unwrap();
        assert_eq!(s.homology(3), group(0, &[2]));
        assert_eq!(s.homology(4), group(0, &[]));
        assert_eq!(s.homology(2), group(0, &[]));
        assert_eq!(s.homology(1), group(0, &[]));
        assert_eq!(s.homology(0), group(0, &[]));
    }

    #[test]
    fn shift_requires_augmentation() {
        let c = ChainComplex::new(0, vec![1], vec![], false).unwrap();
        assert!(matches!(c.shift(1), Err(Error::NotAugmented { .. })));
        assert!(point_chain().shift(0).is_err());
    }

    #[test]
    fn smash_of_spheres() {
        // S0 ∧ S0 = S0
        let t = s0_chain().reduced_tensor(&s0_chain()).unwrap();
        assert_eq!(t.homology(0), group(1, &[]));
        assert_eq!(t.homology(1), group(0, &[]));
        // S1 ∧ S1 = S2
        let t = circle_chain().reduced_tensor(&circle_chain()).unwrap();
        assert_eq!(t.homology(2), group(1, &[]));
        for d in [-1, 0, 1, 3] {
            assert_eq!(t.homology(d), HomologyGroup::zero(), "degree {d}");
        }
    }

    #[test]
    fn smash_with_point_is_trivial() {
        let t = point_chain().reduced_tensor(&rp2_chain()).unwrap();
        for d in -1..=4 {
            assert_eq!(t.homology(d), HomologyGroup::zero(), "degree {d}");
        }
    }

    #[test]
    fn direct_sum_adds_homology() {
        let s = circle_chain().direct_sum(&circle_chain());
        assert_eq!(s.homology(1), group(2, &[]));
        assert!(!s.is_augmented());
    }

    #[test]
    fn relative_disc_mod_boundary_is_sphere() {
        let disc = {
            let aug = IntMatrix::from_rows(&[vec![1, 1, 1]]).unwrap();
            let d1 =
                IntMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]).unwrap();
            let d2 = IntMatrix::from_rows(&[vec![1], vec![-1], vec![1]]).unwrap();
            ChainComplex::new(-1, vec![1, 3, 3, 1], vec![aug, d1, d2], true).unwrap()
        };
        let boundary = circle_chain();
        let inclusion = vec![(-1, vec![0]), (0, vec![0, 1, 2]), (1, vec![0, 1, 2])];
        let q = disc.relative(&boundary, &inclusion).unwrap();
        assert_eq!(q.homology(2), group(1, &[]));
        assert_eq!(q.homology(1), group(0, &[]));
        assert_eq!(q.homology(0), group(0, &[]));
    }

    #[test]
    fn relative_self_is_zero() {
        let c = circle_chain();
        let inclusion = vec![(-1, vec![0]), (0, vec![0, 1, 2]), (1, vec![0, 1, 2])];
        let q = c.relative(&c, &inclusion).unwrap();
        for d in -1..=2 {
            assert_eq!(q.homology(d), HomologyGroup::zero());
        }
    }

    #[test]
    fn relative_rejects_non_subcomplex() {
        let disc = {
            let aug = IntMatrix::from_rows(&[vec![1, 1, 1]]).unwrap();
            let d1 =
                IntMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]).unwrap();
            let d2 = IntMatrix::from_rows(&[vec![1], vec![-1], vec![1]]).unwrap();
            ChainComplex::new(-1, vec![1, 3, 3, 1], vec![aug, d1, d2], true).unwrap()
        };
        // Index sets that include the 2-cell but not all its boundary edges.
        let sub = ChainComplex::new(1, vec![1, 1], vec![IntMatrix::zeros(1, 1)], false).unwrap();
        let err = disc.relative(&sub, &[(1, vec![0]), (2, vec![0])]);
        assert!(matches!(err, Err(Error::NotSubcomplex(_))));
    }

    #[test]
    fn euler_characteristic_of_stored_ranks() {
        assert_eq!(sphere2_chain().euler_characteristic(), 1); // -1 + 4 - 6 + 4
        assert_eq!(circle_chain().euler_characteristic(), -1); // -1 + 3 - 3
    }

    #[test]
    fn display_groups() {
        assert_eq!(group(0, &[]).to_string(), "0");
        assert_eq!(group(1, &[]).to_string(), "Z");
        assert_eq!(group(2, &[2, 4]).to_string(), "Z^2 + Z/2 + Z/4");
    }

    #[test]
    fn homology_group_json() {
        let g = group(1, &[2]);
        let json = serde_json::to_value(&g).unwrap();
        assert_eq!(json, serde_json::json!({"betti": 1, "torsion": [2]}));
    }

    #[test]
    fn homology_table_collects_a_range() {
        let table = rp2_chain().homology_table(-1, 3);
        assert_eq!(table.len(), 5);
        assert_eq!(table[&1], group(0, &[2]));
        assert!(table[&3].is_zero());
    }
}
