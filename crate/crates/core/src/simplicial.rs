//! Finite abstract simplicial complexes.
//!
//! Vertices are dense indices `0..n` with display labels attached; every
//! derived construction (join, wedge, suspension, ...) relabels its result
//! canonically so boundary orientations, and hence homology output, are
//! reproducible bit for bit. Simplices are stored fully face-closed.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::chain::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the face closure of the given maximal simplices. Vertices are
    /// the declared labels that actually occur, keeping declaration order.
    pub fn from_maximal_labeled(labels: &[String], maximal: &[Vec<String>]) -> Result<Self> {
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        if index.len() != labels.len() {
            return Err(Error::UndeclaredVertex("duplicate vertex label".into()));
        }
        let mut as_indices = Vec::with_capacity(maximal.len());
        for simplex in maximal {
            let mut s = Vec::with_capacity(simplex.len());
            for label in simplex {
                match index.get(label.as_str()) {
                    Some(&i) => s.push(i),
                    None => return Err(Error::UndeclaredVertex(label.clone())),
                }
            }
            as_indices.push(s);
        }
        Self::build(labels.to_vec(), &as_indices)
    }

    /// Same, with vertices `0..n_vertices` labeled by their indices.
    pub fn from_maximal_indices(n_vertices: usize, maximal: &[Vec<usize>]) -> Result<Self> {
        Self::build(canonical_labels(n_vertices), maximal)
    }

    /// Closure under faces, then dense relabeling of the vertices that occur
    /// (declaration order preserved).
    fn build(declared: Vec<String>, maximal: &[Vec<usize>]) -> Result<Self> {
        let n = declared.len();
        let mut closed: BTreeSet<Vec<usize>> = BTreeSet::new();
        for simplex in maximal {
            if simplex.is_empty() {
                return Err(Error::OutOfRange(
                    "maximal simplices must be nonempty".into(),
                ));
            }
            if let Some(&v) = simplex.iter().find(|&&v| v >= n) {
                return Err(Error::UndeclaredVertex(v.to_string()));
            }
            let mut sorted: Vec<usize> = simplex.clone();
            sorted.sort_unstable();
            sorted.dedup();
            insert_with_faces(&mut closed, &sorted);
        }
        let used: BTreeSet<usize> = closed.iter().flatten().copied().collect();
        let mut remap = vec![usize::MAX; n];
        let mut labels = Vec::new();
        for v in &used {
            remap[*v] = labels.len();
            labels.push(declared[*v].clone());
        }
        let simplices = closed
            .iter()
            .map(|s| s.iter().map(|&v| remap[v]).collect())
            .collect();
        Ok(SimplicialComplex { labels, simplices })
    }

    fn from_parts(labels: Vec<String>, simplices: BTreeSet<Vec<usize>>) -> Self {
        SimplicialComplex { labels, simplices }
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_of(&self, vertex: usize) -> &str {
        &self.labels[vertex]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_nonempty(&self) -> bool {
        !self.simplices.is_empty()
    }

    /// Dimension of the complex; -1 for the empty complex.
    pub fn dim(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| s.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter()
    }

    pub fn contains_simplex(&self, simplex: &[usize]) -> bool {
        self.simplices.contains(simplex)
    }

    /// Simplices of one dimension in lexicographic vertex order.
    pub fn simplices_of_dim(&self, dim: usize) -> Vec<&Vec<usize>> {
        self.simplices
            .iter()
            .filter(|s| s.len() == dim + 1)
            .collect()
    }

    /// Maximal simplices (those with no proper coface), lexicographic.
    pub fn maximal_simplices(&self) -> Vec<&Vec<usize>> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .simplices
                    .iter()
                    .any(|t| t.len() > s.len() && is_subset(s, t))
            })
            .collect()
    }

    /// Augmented simplicial chain complex: degree-n basis is the n-simplices
    /// in lexicographic order, boundary signs alternate with the position of
    /// the dropped vertex, and the augmentation sums vertex coefficients.
    pub fn chain_complex(&self) -> ChainComplex {
        if !self.is_nonempty() {
            return ChainComplex::new(-1, vec![1], vec![], true)
                .expect("empty augmented complex is valid");
        }
        let dim = self.dim() as usize;
        let bases: Vec<Vec<&Vec<usize>>> = (0..=dim).map(|d| self.simplices_of_dim(d)).collect();
        let mut ranks = Vec::with_capacity(dim + 2);
        ranks.push(1);
        ranks.extend(bases.iter().map(Vec::len));

        let mut boundaries = Vec::with_capacity(dim + 1);
        boundaries.push(IntMatrix::from_fn(1, bases[0].len(), |_, _| {
            BigInt::from(1)
        }));
        for d in 1..=dim {
            let lower: BTreeMap<&[usize], usize> = bases[d - 1]
                .iter()
                .enumerate()
                .map(|(i, s)| (s.as_slice(), i))
                .collect();
            let mut m = IntMatrix::zeros(bases[d - 1].len(), bases[d].len());
            for (j, simplex) in bases[d].iter().enumerate() {
                for (pos, _) in simplex.iter().enumerate() {
                    let mut face = (*simplex).clone();
                    face.remove(pos);
                    let i = lower[face.as_slice()];
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    m.set(i, j, BigInt::from(sign));
                }
            }
            boundaries.push(m);
        }
        ChainComplex::new(-1, ranks, boundaries, true)
            .expect("simplicial boundaries satisfy the chain axioms")
    }

    /// Join: every simplex is a union of a (possibly empty) simplex of each
    /// factor, on disjoint copies of the vertex sets.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.n_vertices();
        let total = n + other.n_vertices();
        let left: Vec<Option<&Vec<usize>>> = std::iter::once(None)
            .chain(self.simplices.iter().map(Some))
            .collect();
        let right: Vec<Option<Vec<usize>>> = std::iter::once(None)
            .chain(
                other
                    .simplices
                    .iter()
                    .map(|s| Some(s.iter().map(|&v| v + n).collect())),
            )
            .collect();
        let mut simplices = BTreeSet::new();
        for a in &left {
            for b in &right {
                let mut s: Vec<usize> = Vec::new();
                if let Some(a) = a {
                    s.extend_from_slice(a);
                }
                if let Some(b) = b {
                    s.extend_from_slice(b);
                }
                if !s.is_empty() {
                    simplices.insert(s);
                }
            }
        }
        SimplicialComplex::from_parts(canonical_labels(total), simplices)
    }

    /// Suspension, realized as `join(S0, K)`.
    pub fn suspension(&self) -> SimplicialComplex {
        s0().join(self)
    }

    /// Cone, realized as `join(point, K)`.
    pub fn cone(&self) -> SimplicialComplex {
        point().join(self)
    }

    /// One-point union identifying vertex `at_self` of `self` with vertex
    /// `at_other` of `other` (both given by label).
    pub fn wedge(
        &self,
        at_self: &str,
        other: &SimplicialComplex,
        at_other: &str,
    ) -> Result<SimplicialComplex> {
        let v = self
            .vertex_by_label(at_self)
            .ok_or_else(|| Error::MissingVertex(at_self.to_string()))?;
        let w = other
            .vertex_by_label(at_other)
            .ok_or_else(|| Error::MissingVertex(at_other.to_string()))?;
        let n = self.n_vertices();
        // Other's vertices keep their relative order, skipping the basepoint.
        let remap = |u: usize| -> usize {
            use std::cmp::Ordering::*;
            match u.cmp(&w) {
                Equal => v,
                Less => n + u,
                Greater => n + u - 1,
            }
        };
        let mut simplices = self.simplices.clone();
        for s in &other.simplices {
            let mut t: Vec<usize> = s.iter().map(|&u| remap(u)).collect();
            t.sort_unstable();
            simplices.insert(t);
        }
        let total = n + other.n_vertices().saturating_sub(1);
        Ok(SimplicialComplex::from_parts(
            canonical_labels(total),
            simplices,
        ))
    }

    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.n_vertices();
        let mut simplices = self.simplices.clone();
        for s in &other.simplices {
            simplices.insert(s.iter().map(|&v| v + n).collect());
        }
        SimplicialComplex::from_parts(canonical_labels(n + other.n_vertices()), simplices)
    }

    /// Number of connected components (union-find over edges).
    pub fn connected_components(&self) -> usize {
        let n = self.n_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for s in self.simplices_of_dim(1) {
            let (a, b) = (find(&mut parent, s[0]), find(&mut parent, s[1]));
            if a != b {
                parent[a] = b;
            }
        }
        (0..n).filter(|&v| find(&mut parent, v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components() == 1
    }

    /// Reduced Euler characteristic (includes the empty simplex term -1).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.chain_complex().euler_characteristic()
    }
}

fn insert_with_faces(set: &mut BTreeSet<Vec<usize>>, simplex: &[usize]) {
    // All nonempty subsets, via bitmasks; simplices here are tiny.
    let k = simplex.len();
    for mask in 1u32..(1u32 << k) {
        let face: Vec<usize> = (0..k)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| simplex[i])
            .collect();
        set.insert(face);
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

fn canonical_labels(n: usize) -> Vec<String> {
    (0..n).map(|v| v.to_string()).collect()
}

// ---- named corpus ----------------------------------------------------------

pub fn point() -> SimplicialComplex {
    SimplicialComplex::from_maximal_indices(1, &[vec![0]]).expect("valid")
}

pub fn empty() -> SimplicialComplex {
    SimplicialComplex::from_maximal_indices(0, &[]).expect("valid")
}

/// Two isolated points.
pub fn s0() -> SimplicialComplex {
    SimplicialComplex::from_maximal_indices(2, &[vec![0], vec![1]]).expect("valid")
}

/// Full n-simplex.
pub fn simplex(n: u32) -> SimplicialComplex {
    let n = n as usize;
    SimplicialComplex::from_maximal_indices(n + 1, &[(0..=n).collect()]).expect("valid")
}

/// Boundary of the (n+1)-simplex: the standard triangulated n-sphere.
pub fn sphere(n: u32) -> SimplicialComplex {
    let n = n as usize;
    let verts = n + 2;
    let maximal: Vec<Vec<usize>> = (0..verts)
        .map(|skip| (0..verts).filter(|&v| v != skip).collect())
        .collect();
    SimplicialComplex::from_maximal_indices(verts, &maximal).expect("valid")
}

/// The m-gon; m >= 3 (S0 is the named two-point complex, not `circle(2)`).
pub fn circle(m: u32) -> Result<SimplicialComplex> {
    if m < 3 {
        return Err(Error::OutOfRange(format!("circle needs m >= 3, got {m}")));
    }
    let m = m as usize;
    let maximal: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
    SimplicialComplex::from_maximal_indices(m, &maximal)
}

/// Minimal 7-vertex triangulation of the torus: triangles `{i, i+1, i+3}` and
/// `{i, i+2, i+3}` over `Z/7`.
pub fn torus7() -> SimplicialComplex {
    let mut maximal = Vec::with_capacity(14);
    for i in 0..7usize {
        maximal.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        maximal.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    SimplicialComplex::from_maximal_indices(7, &maximal).expect("valid")
}

/// Minimal 6-vertex triangulation of the real projective plane
/// (antipodal quotient of the icosahedron): 15 edges, 10 triangles.
pub fn rp2_6() -> SimplicialComplex {
    let maximal = vec![
        vec![0, 1, 2],
        vec![0, 1, 3],
        vec![0, 2, 4],
        vec![0, 3, 5],
        vec![0, 4, 5],
        vec![1, 2, 5],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![2, 3, 4],
        vec![2, 3, 5],
    ];
    SimplicialComplex::from_maximal_indices(6, &maximal).expect("valid")
}

/// The fixed test corpus, with display names.
pub fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut items = vec![
        ("point".to_string(), point()),
        ("empty".to_string(), empty()),
        ("s0".to_string(), s0()),
    ];
    for n in 0..=3 {
        items.push((format!("sphere({n})"), sphere(n)));
    }
    for m in 3..=6 {
        items.push((format!("circle({m})"), circle(m).expect("m >= 3")));
    }
    items.push(("torus7".to_string(), torus7()));
    items.push(("rp2_6".to_string(), rp2_6()));
    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::HomologyGroup;

    fn group(betti: usize, torsion: &[i64]) -> HomologyGroup {
        HomologyGroup {
            betti,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    #[test]
    fn triangle_from_maximal() {
        let labels: Vec<String> = ["1", "2", "3"].iter().map(|s| s.to_string()).collect();
        let maximal = vec![
            vec!["1".to_string(), "2".to_string()],
            vec!["2".to_string(), "3".to_string()],
            vec!["1".to_string(), "3".to_string()],
        ];
        let k = SimplicialComplex::from_maximal_labeled(&labels, &maximal).unwrap();
        assert_eq!(k.n_vertices(), 3);
        assert_eq!(k.simplices_of_dim(1).len(), 3);
        assert_eq!(k.simplex_count(), 6);
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn undeclared_vertex_rejected() {
        let labels = vec!["a".to_string()];
        let maximal = vec![vec!["a".to_string(), "b".to_string()]];
        assert!(matches!(
            SimplicialComplex::from_maximal_labeled(&labels, &maximal),
            Err(Error::UndeclaredVertex(_))
        ));
    }

    #[test]
    fn empty_maximal_list_gives_empty_complex() {
        let k = SimplicialComplex::from_maximal_indices(3, &[]).unwrap();
        assert!(!k.is_nonempty());
        assert_eq!(k.dim(), -1);
        assert_eq!(k.connected_components(), 0);
    }

    #[test]
    fn sphere2_counts() {
        let k = sphere(2);
        assert_eq!(k.simplex_count(), 14); // 4 + 6 + 4
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn circle_counts_and_bounds() {
        assert_eq!(circle(4).unwrap().simplex_count(), 8);
        assert!(circle(2).is_err());
    }

    #[test]
    fn corpus_triangulation_sizes() {
        let t = torus7();
        assert_eq!(t.n_vertices(), 7);
        assert_eq!(t.simplices_of_dim(1).len(), 21);
        assert_eq!(t.simplices_of_dim(2).len(), 14);
        let p = rp2_6();
        assert_eq!(p.n_vertices(), 6);
        assert_eq!(p.simplices_of_dim(1).len(), 15);
        assert_eq!(p.simplices_of_dim(2).len(), 10);
        assert_eq!(p.reduced_euler_characteristic(), 0); // chi = 1, reduced = 0
    }

    #[test]
    fn chain_complex_homology_of_named_complexes() {
        let c = point().chain_complex();
        for d in -1..=1 {
            assert_eq!(c.homology(d), HomologyGroup::zero());
        }
        let c = circle(3).unwrap().chain_complex();
        assert_eq!(c.homology(1), group(1, &[]));
        assert_eq!(c.homology(0), group(0, &[]));
        let c = torus7().chain_complex();
        assert_eq!(c.homology(1), group(2, &[]));
        assert_eq!(c.homology(2), group(1, &[]));
        let c = rp2_6().chain_complex();
        assert_eq!(c.homology(1), group(0, &[2]));
        assert_eq!(c.homology(2), group(0, &[]));
    }

    #[test]
    fn join_of_spheres() {
        let square = s0().join(&s0());
        assert_eq!(square.n_vertices(), 4);
        assert_eq!(square.chain_complex().homology(1), group(1, &[]));

        let s3 = circle(3).unwrap().join(&circle(3).unwrap());
        let c = s3.chain_complex();
        assert_eq!(c.homology(3), group(1, &[]));
        for d in 0..=2 {
            assert_eq!(c.homology(d), HomologyGroup::zero(), "degree {d}");
        }
    }

    #[test]
    fn cone_is_homologically_trivial() {
        let cone = point().join(&torus7());
        let c = cone.chain_complex();
        for d in -1..=3 {
            assert_eq!(c.homology(d), HomologyGroup::zero(), "degree {d}");
        }
    }

    #[test]
    fn suspension_examples() {
        let c = s0().suspension().chain_complex();
        assert_eq!(c.homology(1), group(1, &[]));

        let sigma_empty = empty().suspension();
        assert_eq!(sigma_empty.n_vertices(), 2);
        assert_eq!(sigma_empty.chain_complex().homology(0), group(1, &[]));

        let c = torus7().suspension().chain_complex();
        assert_eq!(c.homology(2), group(2, &[]));
        assert_eq!(c.homology(3), group(1, &[]));
        assert_eq!(c.homology(1), HomologyGroup::zero());
    }

    #[test]
    fn wedge_examples() {
        let w = circle(3)
            .unwrap()
            .wedge("0", &circle(3).unwrap(), "0")
            .unwrap();
        assert_eq!(w.n_vertices(), 5);
        assert_eq!(w.chain_complex().homology(1), group(2, &[]));

        let w = point().wedge("0", &rp2_6(), "3").unwrap();
        assert_eq!(w.chain_complex().homology(1), group(0, &[2]));

        assert!(matches!(
            point().wedge("9", &point(), "0"),
            Err(Error::MissingVertex(_))
        ));
    }

    #[test]
    fn disjoint_union_of_points_is_s0() {
        let k = point().disjoint_union(&point());
        assert_eq!(k.chain_complex().homology(0), group(1, &[]));
        assert_eq!(k.connected_components(), 2);
    }

    #[test]
    fn connectivity() {
        assert_eq!(circle(3).unwrap().connected_components(), 1);
        assert_eq!(s0().connected_components(), 2);
        assert_eq!(empty().connected_components(), 0);
        assert!(sphere(2).is_connected());
    }

    #[test]
    fn full_simplex_is_contractible() {
        let k = simplex(2);
        assert_eq!(k.simplex_count(), 7); // 3 + 3 + 1
        let c = k.chain_complex();
        for d in -1..=2 {
            assert_eq!(c.homology(d), HomologyGroup::zero(), "degree {d}");
        }
        assert_eq!(simplex(0), point());
    }

    #[test]
    fn sphere_zero_is_two_points() {
        let c = sphere(0).chain_complex();
        assert_eq!(c.homology(0), group(1, &[]));
        assert_eq!(sphere(0).connected_components(), 2);
    }

    #[test]
    fn maximal_simplices_roundtrip() {
        let k = torus7();
        let max = k.maximal_simplices();
        assert_eq!(max.len(), 14);
        let rebuilt = SimplicialComplex::from_maximal_indices(
            7,
            &max.iter().map(|s| (*s).clone()).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(rebuilt, k);
    }
}
